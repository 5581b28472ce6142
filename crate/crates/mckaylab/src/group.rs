//! Finite permutation groups with full element enumeration.
//!
//! Everything downstream (degrees, cohomology, doubles) works with element
//! indices into the enumerated list, so the enumeration order is part of the
//! contract: breadth-first from the identity, multiplying by generators in
//! input order on the right. Index 0 is always the identity.

use std::collections::HashMap;
use std::sync::Arc;

use once_cell::sync::OnceCell;

use crate::error::{Error, Result};
use crate::perm::Perm;

/// Default cap on the order of an enumerated group.
pub const DEFAULT_ORDER_CAP: usize = 5000;

/// Orders up to this bound get a dense multiplication memo.
const MUL_MEMO_BOUND: usize = 1024;

/// Default cap on brute-force subgroup enumeration.
pub const DEFAULT_SUBGROUP_CAP: usize = 500;

pub struct Group {
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
    index: HashMap<Perm, u32>,
    inverses: Vec<u32>,
    /// For element i > 0: (parent index, generator index) with
    /// `elements[i] = elements[parent] * generators[gen]`.
    provenance: Vec<(u32, u32)>,
    name: Option<String>,
    mul_memo: OnceCell<Vec<u32>>,
    classes: OnceCell<Vec<Vec<u32>>>,
    class_of: OnceCell<Vec<u32>>,
}

impl std::fmt::Debug for Group {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Group({}, order {})", self.describe(), self.order())
    }
}

impl Group {
    /// Enumerates the group generated by `gens` on `degree` points.
    ///
    /// Elements come out in breadth-first order from the identity, appending
    /// `current * gen` for generators in input order, so the indexing is
    /// reproducible across runs.
    pub fn from_generators(degree: usize, gens: Vec<Perm>, cap: usize) -> Result<Group> {
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::MalformedPermutation(format!(
                    "generator degree {} does not match declared degree {degree}",
                    g.degree()
                )));
            }
        }
        let identity = Perm::identity(degree);
        let mut elements = vec![identity.clone()];
        let mut index = HashMap::new();
        index.insert(identity, 0u32);
        let mut provenance = vec![(0u32, 0u32)];
        let mut head = 0usize;
        while head < elements.len() {
            for (gi, gen) in gens.iter().enumerate() {
                let next = elements[head].compose(gen);
                if !index.contains_key(&next) {
                    if elements.len() >= cap {
                        return Err(Error::OrderCapExceeded {
                            cap,
                            reached: elements.len() + 1,
                        });
                    }
                    index.insert(next.clone(), elements.len() as u32);
                    elements.push(next);
                    provenance.push((head as u32, gi as u32));
                }
            }
            head += 1;
        }
        let inverses = elements.iter().map(|e| index[&e.inverse()]).collect();
        Ok(Group {
            degree,
            generators: gens,
            elements,
            index,
            inverses,
            provenance,
            name: None,
            mul_memo: OnceCell::new(),
            classes: OnceCell::new(),
            class_of: OnceCell::new(),
        })
    }

    /// Convenience for the common build-name-share sequence.
    pub fn shared(degree: usize, gens: Vec<Perm>, cap: usize) -> Result<Arc<Group>> {
        Ok(Arc::new(Group::from_generators(degree, gens, cap)?))
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// Name if present, else a generator listing.
    pub fn describe(&self) -> String {
        match &self.name {
            Some(n) => n.clone(),
            None => {
                let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
                format!("<{}>", gens.join(", "))
            }
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element_index(&self, p: &Perm) -> Option<u32> {
        self.index.get(p).copied()
    }

    /// `(parent, generator)` pair recording how element `i` was first reached.
    pub fn provenance(&self, i: usize) -> (u32, u32) {
        self.provenance[i]
    }

    #[inline]
    pub fn inv(&self, i: u32) -> u32 {
        self.inverses[i as usize]
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        let n = self.order();
        if n <= MUL_MEMO_BOUND {
            let memo = self.mul_memo.get_or_init(|| {
                let mut t = vec![0u32; n * n];
                for i in 0..n {
                    for j in 0..n {
                        let p = self.elements[i].compose(&self.elements[j]);
                        t[i * n + j] = self.index[&p];
                    }
                }
                t
            });
            memo[a as usize * n + b as usize]
        } else {
            let p = self.elements[a as usize].compose(&self.elements[b as usize]);
            self.index[&p]
        }
    }

    /// `g x g^-1`.
    #[inline]
    pub fn conj(&self, x: u32, g: u32) -> u32 {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn element_order(&self, i: u32) -> usize {
        let mut x = i;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, i);
            k += 1;
        }
        k
    }

    /// lcm of all element orders.
    pub fn exponent(&self) -> usize {
        let mut e: usize = 1;
        for i in 0..self.order() as u32 {
            e = num_integer::lcm(e, self.element_order(i));
        }
        e
    }

    /// Conjugacy classes as sorted element-index sets. The identity class is
    /// first and classes are ordered by their minimal element index, which is
    /// also the representative.
    pub fn conjugacy_classes(&self) -> &[Vec<u32>] {
        self.classes.get_or_init(|| {
            let n = self.order() as u32;
            let mut assigned = vec![false; n as usize];
            let mut classes = Vec::new();
            for x in 0..n {
                if assigned[x as usize] {
                    continue;
                }
                let mut class = Vec::new();
                for g in 0..n {
                    let y = self.conj(x, g);
                    if !assigned[y as usize] {
                        assigned[y as usize] = true;
                        class.push(y);
                    }
                }
                class.sort_unstable();
                classes.push(class);
            }
            classes
        })
    }

    /// Index of the conjugacy class containing element `x`.
    pub fn class_of(&self, x: u32) -> u32 {
        let map = self.class_of.get_or_init(|| {
            let mut map = vec![0u32; self.order()];
            for (ci, class) in self.conjugacy_classes().iter().enumerate() {
                for &e in class {
                    map[e as usize] = ci as u32;
                }
            }
            map
        });
        map[x as usize]
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().enumerate().all(|(i, a)| {
            self.generators[i + 1..]
                .iter()
                .all(|b| a.compose(b) == b.compose(a))
        })
    }

    /// Closure of an element-index set under multiplication, as a sorted list.
    pub fn closure(&self, seed: &[u32]) -> Vec<u32> {
        let n = self.order();
        let mut in_set = vec![false; n];
        let mut list = vec![0u32];
        in_set[0] = true;
        for &s in seed {
            if !in_set[s as usize] {
                in_set[s as usize] = true;
                list.push(s);
            }
        }
        let mut head = 0;
        while head < list.len() {
            let a = list[head];
            head += 1;
            for &s in seed {
                for prod in [self.mul(a, s), self.mul(s, a)] {
                    if !in_set[prod as usize] {
                        in_set[prod as usize] = true;
                        list.push(prod);
                    }
                }
            }
        }
        list.sort_unstable();
        list
    }

    /// Canonical fingerprint of the multiplication table in enumeration
    /// order. Two groups share a hash only if their enumerated tables agree.
    pub fn table_hash(&self) -> u64 {
        let n = self.order();
        let mut h = Fnv::new();
        h.write(n as u64);
        for i in 0..n as u32 {
            for j in 0..n as u32 {
                h.write(self.mul(i, j) as u64);
            }
        }
        h.finish()
    }
}

// ---------------------------------------------------------------------------
// Subgroup-valued operations. These take &Arc<Group> because the result holds
// a shared handle to its parent.
// ---------------------------------------------------------------------------

pub fn centralizer(g: &Arc<Group>, x: u32) -> Subgroup {
    let elements: Vec<u32> = (0..g.order() as u32)
        .filter(|&a| g.mul(a, x) == g.mul(x, a))
        .collect();
    Subgroup::from_sorted(g, elements)
}

pub fn center(g: &Arc<Group>) -> Subgroup {
    let n = g.order() as u32;
    let elements: Vec<u32> = (0..n)
        .filter(|&z| (0..n).all(|a| g.mul(z, a) == g.mul(a, z)))
        .collect();
    Subgroup::from_sorted(g, elements)
}

pub fn whole_subgroup(g: &Arc<Group>) -> Subgroup {
    Subgroup::from_sorted(g, (0..g.order() as u32).collect())
}

pub fn trivial_subgroup(g: &Arc<Group>) -> Subgroup {
    Subgroup::from_sorted(g, vec![0])
}

pub fn subgroup_from_elements(g: &Arc<Group>, mut elements: Vec<u32>) -> Result<Subgroup> {
    elements.sort_unstable();
    elements.dedup();
    if elements.first() != Some(&0) {
        return Err(Error::NotSubgroup);
    }
    for &a in &elements {
        if a as usize >= g.order() {
            return Err(Error::ElementOutOfRange {
                index: a as usize,
                order: g.order(),
            });
        }
        for &b in &elements {
            if elements.binary_search(&g.mul(a, b)).is_err() {
                return Err(Error::NotSubgroup);
            }
        }
    }
    Ok(Subgroup::from_sorted(g, elements))
}

/// Commutator subgroup, as the closure of all commutators.
pub fn commutator_subgroup(g: &Arc<Group>) -> Subgroup {
    let n = g.order() as u32;
    let mut comms = Vec::new();
    for a in 0..n {
        for b in 0..n {
            // a^-1 b^-1 a b
            let c = g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
            comms.push(c);
        }
    }
    comms.sort_unstable();
    comms.dedup();
    Subgroup::from_sorted(g, g.closure(&comms))
}

/// Order of G/G'.
pub fn abelianization_order(g: &Arc<Group>) -> usize {
    g.order() / commutator_subgroup(g).order()
}

/// Deterministic Sylow p-subgroup, grown by extending a p-subgroup chain
/// with the smallest usable element index at each step. Any Sylow subgroup
/// is acceptable; this choice makes runs reproducible.
pub fn sylow_subgroup(g: &Arc<Group>, p: u64) -> Result<Subgroup> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let mut target = 1usize;
    let mut n = g.order();
    while n % p as usize == 0 {
        n /= p as usize;
        target *= p as usize;
    }
    let mut current = vec![0u32];
    while current.len() < target {
        let mut extended = false;
        for cand in 1..g.order() as u32 {
            if current.binary_search(&cand).is_ok() {
                continue;
            }
            if !is_power_of(g.element_order(cand), p as usize) {
                continue;
            }
            let mut seed = current.clone();
            seed.push(cand);
            let bigger = g.closure(&seed);
            if bigger.len() <= target && is_power_of(bigger.len(), p as usize) {
                current = bigger;
                extended = true;
                break;
            }
        }
        assert!(extended, "p-subgroup chain stalled below Sylow order");
    }
    Ok(Subgroup::from_sorted(g, current))
}

/// Normalizer of `h` in `g`.
pub fn normalizer(g: &Arc<Group>, h: &Subgroup) -> Result<Subgroup> {
    if !Arc::ptr_eq(g, &h.parent) {
        return Err(Error::NotSubgroup);
    }
    let elements: Vec<u32> = (0..g.order() as u32)
        .filter(|&a| h.elements.iter().all(|&x| h.contains(g.conj(x, a))))
        .collect();
    Ok(Subgroup::from_sorted(g, elements))
}

/// Normalizer of the deterministic Sylow p-subgroup.
pub fn sylow_normalizer(g: &Arc<Group>, p: u64) -> Result<Subgroup> {
    let syl = sylow_subgroup(g, p)?;
    normalizer(g, &syl)
}

/// All subgroups, by breadth-first closure of one-element extensions.
pub fn subgroups(g: &Arc<Group>, cap: usize) -> Result<Vec<Subgroup>> {
    let mut seen = std::collections::BTreeSet::new();
    seen.insert(vec![0u32]);
    let mut queue = vec![vec![0u32]];
    let mut head = 0;
    while head < queue.len() {
        let base = queue[head].clone();
        head += 1;
        if base.len() == g.order() {
            continue;
        }
        for e in 1..g.order() as u32 {
            if base.binary_search(&e).is_ok() {
                continue;
            }
            let mut seed = base.clone();
            seed.push(e);
            let bigger = g.closure(&seed);
            if seen.insert(bigger.clone()) {
                if seen.len() > cap {
                    return Err(Error::SubgroupCapExceeded { cap });
                }
                queue.push(bigger);
            }
        }
    }
    Ok(seen
        .into_iter()
        .map(|els| Subgroup::from_sorted(g, els))
        .collect())
}

/// One representative per conjugacy class of subgroups; the representative is
/// the lexicographically minimal member and the list is ordered by
/// (order, element list).
pub fn subgroup_class_representatives(g: &Arc<Group>, cap: usize) -> Result<Vec<Subgroup>> {
    let all = subgroups(g, cap)?;
    let mut keys: std::collections::BTreeSet<Vec<u32>> =
        all.iter().map(|s| s.elements().to_vec()).collect();
    let mut reps = Vec::new();
    while let Some(first) = keys.iter().next().cloned() {
        for a in 0..g.order() as u32 {
            let mut conj: Vec<u32> = first.iter().map(|&x| g.conj(x, a)).collect();
            conj.sort_unstable();
            keys.remove(&conj);
        }
        reps.push(Subgroup::from_sorted(g, first));
    }
    reps.sort_by_key(|s| (s.order(), s.elements().to_vec()));
    Ok(reps)
}

/// Subgroup of an enumerated group, stored as a sorted element-index set
/// with a membership mask for O(1) lookups.
#[derive(Clone)]
pub struct Subgroup {
    parent: Arc<Group>,
    elements: Vec<u32>,
    mask: Vec<bool>,
}

impl Subgroup {
    fn from_sorted(parent: &Arc<Group>, elements: Vec<u32>) -> Subgroup {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        let mut mask = vec![false; parent.order()];
        for &e in &elements {
            mask[e as usize] = true;
        }
        Subgroup {
            parent: Arc::clone(parent),
            elements,
            mask,
        }
    }

    pub fn parent(&self) -> &Arc<Group> {
        &self.parent
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    #[inline]
    pub fn contains(&self, x: u32) -> bool {
        self.mask[x as usize]
    }

    pub fn is_whole(&self) -> bool {
        self.order() == self.parent.order()
    }

    /// True if `g H g^-1 = H` for all g in the parent.
    pub fn is_normal(&self) -> bool {
        (0..self.parent.order() as u32)
            .all(|a| self.elements.iter().all(|&x| self.contains(self.parent.conj(x, a))))
    }

    /// A small generating set, grown greedily in element-index order.
    pub fn generating_indices(&self) -> Vec<u32> {
        let mut gens: Vec<u32> = Vec::new();
        let mut covered = vec![0u32];
        for &e in &self.elements {
            if covered.binary_search(&e).is_err() {
                gens.push(e);
                covered = self.parent.closure(&gens);
                if covered.len() == self.order() {
                    break;
                }
            }
        }
        gens
    }

    /// Re-enumerates this subgroup as a standalone [`Group`] on the same
    /// points. Returns the group and the map from new element indices to
    /// parent element indices. The whole subgroup materializes as its parent.
    pub fn materialize(&self) -> (Arc<Group>, Vec<u32>) {
        if self.is_whole() {
            return (
                Arc::clone(&self.parent),
                (0..self.parent.order() as u32).collect(),
            );
        }
        let gens: Vec<Perm> = self
            .generating_indices()
            .iter()
            .map(|&i| self.parent.element(i as usize).clone())
            .collect();
        let grp = Group::from_generators(self.parent.degree(), gens, self.order() + 1)
            .expect("subgroup closure stays within its own order");
        debug_assert_eq!(grp.order(), self.order());
        let map: Vec<u32> = grp
            .elements()
            .iter()
            .map(|p| self.parent.element_index(p).expect("element of parent"))
            .collect();
        let name = format!("{}:sub{}", self.parent.describe(), self.order());
        (Arc::new(grp.named(name)), map)
    }

    /// Multiplication view on local indices 0..|H| for exact degree work.
    /// Local index i corresponds to the i-th element in sorted parent order.
    pub fn mult_table(&self) -> MultTable {
        let k = self.order();
        let local: HashMap<u32, u32> = self
            .elements
            .iter()
            .enumerate()
            .map(|(i, &e)| (e, i as u32))
            .collect();
        let mut mul = vec![0u32; k * k];
        for i in 0..k {
            for j in 0..k {
                let p = self.parent.mul(self.elements[i], self.elements[j]);
                mul[i * k + j] = local[&p];
            }
        }
        let inv = (0..k)
            .map(|i| local[&self.parent.inv(self.elements[i])])
            .collect();
        MultTable {
            order: k,
            mul,
            inv,
        }
    }
}

impl std::fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Subgroup(order {} of {})",
            self.order(),
            self.parent.describe()
        )
    }
}

/// Abstract multiplication table on indices `0..order` with identity 0.
/// This is the input shape for the exact degree engine, letting a subgroup
/// or a central extension be processed without re-representing it.
pub struct MultTable {
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
}

impl MultTable {
    pub fn from_group(g: &Group) -> Result<MultTable> {
        let n = g.order();
        if n > 4096 {
            return Err(Error::DegreeOrderTooLarge(n));
        }
        let mut mul = vec![0u32; n * n];
        for i in 0..n as u32 {
            for j in 0..n as u32 {
                mul[i as usize * n + j as usize] = g.mul(i, j);
            }
        }
        Ok(MultTable {
            order: n,
            mul,
            inv: (0..n as u32).map(|i| g.inv(i)).collect(),
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize * self.order + b as usize]
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.inv[a as usize]
    }

    pub fn element_order(&self, i: u32) -> usize {
        let mut x = i;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, i);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        (0..self.order as u32).fold(1, |e, i| num_integer::lcm(e, self.element_order(i)))
    }

    pub fn table_hash(&self) -> u64 {
        let mut h = Fnv::new();
        h.write(self.order as u64);
        for &v in &self.mul {
            h.write(v as u64);
        }
        h.finish()
    }
}

fn is_power_of(n: usize, base: usize) -> bool {
    if n == 0 {
        return false;
    }
    let mut n = n;
    while n % base == 0 {
        n /= base;
    }
    n == 1
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub fn primes_dividing(n: usize) -> Vec<u64> {
    let mut out = Vec::new();
    let mut n = n as u64;
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// FNV-1a, used for stable cross-run table fingerprints.
pub(crate) struct Fnv(u64);

impl Fnv {
    pub fn new() -> Fnv {
        Fnv(0xcbf29ce484222325)
    }
    pub fn write(&mut self, v: u64) {
        for b in v.to_le_bytes() {
            self.0 ^= b as u64;
            self.0 = self.0.wrapping_mul(0x100000001b3);
        }
    }
    pub fn finish(&self) -> u64 {
        self.0
    }
}
