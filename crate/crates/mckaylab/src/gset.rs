//! Finite left G-sets with dense action tables, orbits and stabilizers.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{self, Group, Subgroup};

/// Guard against accidentally materializing huge action tables.
const ACTION_TABLE_CAP: usize = 4_000_000;

/// A finite left G-set. The action table covers every element of the parent
/// group; `acting` narrows which elements act (used for restrictions to a
/// subgroup, as the point set stays fixed).
pub struct GSet {
    acting: Subgroup,
    points: usize,
    /// Row-major: `action[e * points + x]` is the image of point x under
    /// parent element e.
    action: Vec<u32>,
    labels: Vec<String>,
    name: String,
}

impl std::fmt::Debug for GSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GSet({}, {} points)", self.name, self.points)
    }
}

impl GSet {
    /// Assembles a G-set from the images of the group's generators, extending
    /// to all elements along the enumeration's provenance chain, and checks
    /// the homomorphism property row by row.
    pub fn from_generator_images(
        group: &Arc<Group>,
        points: usize,
        gen_images: &[Vec<u32>],
        name: impl Into<String>,
    ) -> Result<GSet> {
        if gen_images.len() != group.generators().len() {
            return Err(Error::Parse(format!(
                "expected {} generator image rows, got {}",
                group.generators().len(),
                gen_images.len()
            )));
        }
        let n = group.order();
        if n.saturating_mul(points) > ACTION_TABLE_CAP {
            return Err(Error::AlgebraCapExceeded {
                dim: n * points,
                cap: ACTION_TABLE_CAP,
            });
        }
        for row in gen_images {
            check_point_bijection(row, points)?;
        }
        let mut action = vec![0u32; n * points];
        for x in 0..points {
            action[x] = x as u32; // identity row
        }
        for i in 1..n {
            let (parent, gen) = group.provenance(i);
            // elements[i] = elements[parent] * gens[gen], so the action is
            // row(parent) after row(gen).
            for x in 0..points {
                let mid = gen_images[gen as usize][x] as usize;
                action[i * points + x] = action[parent as usize * points + mid];
            }
        }
        let gset = GSet {
            acting: group::whole_subgroup(group),
            points,
            action,
            labels: (1..=points).map(|x| x.to_string()).collect(),
            name: name.into(),
        };
        gset.verify_homomorphism()?;
        Ok(gset)
    }

    fn verify_homomorphism(&self) -> Result<()> {
        let g = self.group();
        for i in 0..g.order() {
            check_point_bijection(&self.action[i * self.points..(i + 1) * self.points], self.points)?;
        }
        // spot rows are permutations; composition correctness follows from
        // construction, but generators times generators is cheap to confirm
        let gens: Vec<u32> = (0..g.order() as u32)
            .filter(|&e| g.element(e as usize).is_identity() || self.is_generator(e))
            .collect();
        for &a in &gens {
            for &b in &gens {
                let ab = g.mul(a, b);
                for x in 0..self.points as u32 {
                    if self.apply(ab, x) != self.apply(a, self.apply(b, x)) {
                        return Err(Error::Parse(format!(
                            "action rows are not a homomorphism at elements {a},{b}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    fn is_generator(&self, e: u32) -> bool {
        let g = self.group();
        g.generators()
            .iter()
            .any(|p| g.element_index(p) == Some(e))
    }

    /// Builds from a closure giving the image of each point under each
    /// parent element. Used by the canned constructions below.
    fn from_fn(
        group: &Arc<Group>,
        points: usize,
        labels: Vec<String>,
        name: String,
        f: impl Fn(u32, u32) -> u32,
    ) -> Result<GSet> {
        let n = group.order();
        if n.saturating_mul(points) > ACTION_TABLE_CAP {
            return Err(Error::AlgebraCapExceeded {
                dim: n * points,
                cap: ACTION_TABLE_CAP,
            });
        }
        let mut action = vec![0u32; n * points];
        for e in 0..n as u32 {
            for x in 0..points as u32 {
                let y = f(e, x);
                debug_assert!((y as usize) < points);
                action[e as usize * points + x as usize] = y;
            }
        }
        Ok(GSet {
            acting: group::whole_subgroup(group),
            points,
            action,
            labels,
            name,
        })
    }

    /// The set the permutations act on, with g.x given by applying g.
    pub fn natural(group: &Arc<Group>) -> Result<GSet> {
        let pts = group.degree();
        GSet::from_fn(
            group,
            pts,
            (1..=pts).map(|x| x.to_string()).collect(),
            "natural".into(),
            |e, x| group.element(e as usize).apply(x),
        )
    }

    /// k fixed points.
    pub fn trivial(group: &Arc<Group>, k: usize) -> Result<GSet> {
        GSet::from_fn(
            group,
            k,
            (1..=k).map(|x| x.to_string()).collect(),
            format!("trivial{k}"),
            |_, x| x,
        )
    }

    /// G acting on itself by left translation.
    pub fn regular(group: &Arc<Group>) -> Result<GSet> {
        let labels = group.elements().iter().map(|p| p.to_string()).collect();
        GSet::from_fn(group, group.order(), labels, "regular".into(), |e, x| {
            group.mul(e, x)
        })
    }

    /// G acting on itself by left conjugation g.x = g x g^-1. Points are
    /// element indices; orbits are the conjugacy classes and stabilizers the
    /// centralizers.
    pub fn conjugation(group: &Arc<Group>) -> Result<GSet> {
        let labels = group.elements().iter().map(|p| p.to_string()).collect();
        GSet::from_fn(group, group.order(), labels, "conjugation".into(), |e, x| {
            group.conj(x, e)
        })
    }

    /// Left cosets of `h` under left translation. Point i is the coset whose
    /// minimal element index is the i-th smallest; point 0 is `h` itself.
    pub fn cosets(h: &Subgroup) -> Result<GSet> {
        let group = Arc::clone(h.parent());
        let n = group.order();
        let k = n / h.order();
        let mut coset_of = vec![u32::MAX; n];
        let mut mins = Vec::new();
        for e in 0..n as u32 {
            if coset_of[e as usize] != u32::MAX {
                continue;
            }
            let id = mins.len() as u32;
            mins.push(e);
            for &s in h.elements() {
                coset_of[group.mul(e, s) as usize] = id;
            }
        }
        debug_assert_eq!(mins.len(), k);
        let labels = mins
            .iter()
            .map(|&e| format!("{}H", group.element(e as usize)))
            .collect();
        let name = format!("cosets[{}]", h.order());
        GSet::from_fn(&group, k, labels, name, |e, x| {
            coset_of[group.mul(e, mins[x as usize]) as usize]
        })
    }

    /// Same points, action restricted to the elements of `h`.
    pub fn restrict(&self, h: &Subgroup) -> Result<GSet> {
        if !Arc::ptr_eq(h.parent(), self.group()) {
            return Err(Error::NotSubgroup);
        }
        for &e in h.elements() {
            if !self.acting.contains(e) {
                return Err(Error::NotSubgroup);
            }
        }
        Ok(GSet {
            acting: h.clone(),
            points: self.points,
            action: self.action.clone(),
            labels: self.labels.clone(),
            name: format!("{}|H{}", self.name, h.order()),
        })
    }

    pub fn group(&self) -> &Arc<Group> {
        self.acting.parent()
    }

    /// The subgroup whose elements act (the whole group unless restricted).
    pub fn acting(&self) -> &Subgroup {
        &self.acting
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn label(&self, x: u32) -> &str {
        &self.labels[x as usize]
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    #[inline]
    pub fn apply(&self, e: u32, x: u32) -> u32 {
        self.action[e as usize * self.points + x as usize]
    }

    /// Orbit partition under the acting subgroup. Orbits are sorted by their
    /// minimal point, which is the representative.
    pub fn orbits(&self) -> OrbitDecomposition {
        let mut seen = vec![false; self.points];
        let mut orbits = Vec::new();
        for start in 0..self.points as u32 {
            if seen[start as usize] {
                continue;
            }
            let mut orbit = vec![start];
            seen[start as usize] = true;
            let mut head = 0;
            while head < orbit.len() {
                let x = orbit[head];
                head += 1;
                for &e in self.acting.elements() {
                    let y = self.apply(e, x);
                    if !seen[y as usize] {
                        seen[y as usize] = true;
                        orbit.push(y);
                    }
                }
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }
        let representatives = orbits.iter().map(|o| o[0]).collect();
        OrbitDecomposition {
            orbits,
            representatives,
        }
    }

    /// Stabilizer of `x` inside the acting subgroup, as a subgroup of the
    /// parent group.
    pub fn stabilizer(&self, x: u32) -> Result<Subgroup> {
        if x as usize >= self.points {
            return Err(Error::PointOutOfRange {
                point: x as usize,
                points: self.points,
            });
        }
        let elements: Vec<u32> = self
            .acting
            .elements()
            .iter()
            .copied()
            .filter(|&e| self.apply(e, x) == x)
            .collect();
        subgroup_from_sorted(self.group(), elements)
    }

    pub fn is_transitive(&self) -> bool {
        self.orbits().orbits.len() == 1
    }
}

fn subgroup_from_sorted(g: &Arc<Group>, elements: Vec<u32>) -> Result<Subgroup> {
    group::subgroup_from_elements(g, elements)
}

fn check_point_bijection(row: &[u32], points: usize) -> Result<()> {
    let mut seen = vec![false; points];
    for &y in row {
        if y as usize >= points || seen[y as usize] {
            return Err(Error::Parse(format!(
                "action row {row:?} is not a permutation of 0..{points}"
            )));
        }
        seen[y as usize] = true;
    }
    Ok(())
}

#[derive(Debug, Clone)]
pub struct OrbitDecomposition {
    orbits: Vec<Vec<u32>>,
    representatives: Vec<u32>,
}

impl OrbitDecomposition {
    pub fn orbits(&self) -> &[Vec<u32>] {
        &self.orbits
    }

    pub fn representatives(&self) -> &[u32] {
        &self.representatives
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.orbits.iter().map(|o| o.len()).collect()
    }

    /// Number of orbits whose size is coprime to p.
    pub fn coprime_count(&self, p: u64) -> usize {
        self.orbits
            .iter()
            .filter(|o| o.len() as u64 % p != 0)
            .count()
    }
}

/// All transitive G-sets up to equivalence: coset actions on the subgroup
/// conjugacy class representatives.
pub fn transitive_gsets(g: &Arc<Group>, subgroup_cap: usize) -> Result<Vec<GSet>> {
    let reps = group::subgroup_class_representatives(g, subgroup_cap)?;
    // Larger subgroups give smaller (cheaper) actions first.
    let mut out = Vec::new();
    for h in reps.iter().rev() {
        out.push(GSet::cosets(h)?);
    }
    Ok(out)
}
