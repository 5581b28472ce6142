//! Named group presets, the group-spec text format, and the G-set spec
//! format.
//!
//! Preset grammar: `C<n>`, `D<2n>` (dihedral of order 2n), `S<n>`, `A<n>`,
//! `Q8`, `V4`, `SL23`, and direct products joined with `x`, e.g. `C2xC4`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::Group;
use crate::gset::GSet;
use crate::perm::Perm;

/// Resolves a preset name (see module docs) into an enumerated group.
pub fn preset(name: &str, cap: usize) -> Result<Arc<Group>> {
    let name = name.trim();
    if name.contains('x') {
        let mut parts = Vec::new();
        for part in name.split('x') {
            parts.push(preset_atom(part, cap)?);
        }
        let prod = direct_product(&parts, cap)?;
        return Ok(Arc::new(prod.named(name)));
    }
    Ok(Arc::new(preset_atom(name, cap)?.named(name)))
}

fn preset_atom(name: &str, cap: usize) -> Result<Group> {
    let name = name.trim();
    if name.is_empty() {
        return Err(Error::Parse("empty group name".into()));
    }
    match name {
        "V4" => {
            return Group::from_generators(
                4,
                vec![Perm::parse(4, "(1 2)")?, Perm::parse(4, "(3 4)")?],
                cap,
            )
        }
        "Q8" => return quaternion(cap),
        "SL23" => return sl23(cap),
        _ => {}
    }
    let (kind, num) = name.split_at(1);
    let n: usize = num
        .parse()
        .map_err(|_| Error::Parse(format!("unknown group preset {name:?}")))?;
    match kind {
        "C" => cyclic(n, cap),
        "D" => dihedral(n, cap),
        "S" => symmetric(n, cap),
        "A" => alternating(n, cap),
        _ => Err(Error::Parse(format!("unknown group preset {name:?}"))),
    }
}

fn cyclic(n: usize, cap: usize) -> Result<Group> {
    if n == 0 {
        return Err(Error::Parse("C0 is not a group".into()));
    }
    if n == 1 {
        return Group::from_generators(1, vec![], cap);
    }
    let cycle: Vec<usize> = (1..=n).collect();
    Group::from_generators(n, vec![Perm::from_cycles(n, &[cycle])?], cap)
}

/// Dihedral group of order `order` (even, at least 2).
fn dihedral(order: usize, cap: usize) -> Result<Group> {
    if order < 2 || order % 2 != 0 {
        return Err(Error::Parse(format!(
            "dihedral preset D{order} needs an even order >= 2"
        )));
    }
    let n = order / 2;
    match n {
        1 => cyclic(2, cap),
        2 => Group::from_generators(
            4,
            vec![Perm::parse(4, "(1 2)")?, Perm::parse(4, "(3 4)")?],
            cap,
        ),
        _ => {
            let rotation: Vec<usize> = (1..=n).collect();
            // reflection fixing point 1
            let reflection: Vec<Vec<usize>> = (2..=(n + 1) / 2)
                .map(|i| vec![i, n + 2 - i])
                .collect();
            Group::from_generators(
                n,
                vec![
                    Perm::from_cycles(n, &[rotation])?,
                    Perm::from_cycles(n, &reflection)?,
                ],
                cap,
            )
        }
    }
}

fn symmetric(n: usize, cap: usize) -> Result<Group> {
    match n {
        0 => Err(Error::Parse("S0 is not supported".into())),
        1 => Group::from_generators(1, vec![], cap),
        2 => cyclic(2, cap),
        _ => {
            let cycle: Vec<usize> = (1..=n).collect();
            Group::from_generators(
                n,
                vec![Perm::parse(n, "(1 2)")?, Perm::from_cycles(n, &[cycle])?],
                cap,
            )
        }
    }
}

fn alternating(n: usize, cap: usize) -> Result<Group> {
    if n < 3 {
        return Group::from_generators(n.max(1), vec![], cap);
    }
    let gens: Vec<Perm> = (3..=n)
        .map(|k| Perm::from_cycles(n, &[vec![1, 2, k]]))
        .collect::<Result<_>>()?;
    Group::from_generators(n, gens, cap)
}

/// Q8 in its regular representation.
fn quaternion(cap: usize) -> Result<Group> {
    // i and j acting on {1, i, -1, -i, j, ij, -j, -ij} by left translation
    let i = Perm::parse(8, "(1 2 3 4)(5 6 7 8)")?;
    let j = Perm::parse(8, "(1 5 3 7)(2 8 4 6)")?;
    Group::from_generators(8, vec![i, j], cap)
}

/// SL(2,3) acting on the 8 nonzero vectors of F_3^2.
fn sl23(cap: usize) -> Result<Group> {
    let vecs: Vec<(u8, u8)> = (0..3u8)
        .flat_map(|x| (0..3u8).map(move |y| (x, y)))
        .filter(|&(x, y)| (x, y) != (0, 0))
        .collect();
    let idx = |v: (u8, u8)| vecs.iter().position(|&w| w == v).unwrap() as u32;
    let act = |m: [[u8; 2]; 2]| -> Result<Perm> {
        let images = vecs
            .iter()
            .map(|&(x, y)| {
                let nx = (m[0][0] * x + m[0][1] * y) % 3;
                let ny = (m[1][0] * x + m[1][1] * y) % 3;
                idx((nx, ny))
            })
            .collect();
        Perm::from_images(images)
    };
    let t = act([[1, 1], [0, 1]])?;
    let s = act([[0, 2], [1, 0]])?; // [[0,-1],[1,0]] mod 3
    Group::from_generators(8, vec![t, s], cap)
}

fn direct_product(factors: &[Group], cap: usize) -> Result<Group> {
    let degree: usize = factors.iter().map(|g| g.degree()).sum();
    let mut gens = Vec::new();
    let mut offset = 0usize;
    for g in factors {
        for p in g.generators() {
            let mut images: Vec<u32> = (0..degree as u32).collect();
            for x in 0..g.degree() {
                images[offset + x] = offset as u32 + p.apply(x as u32);
            }
            gens.push(Perm::from_images(images)?);
        }
        offset += g.degree();
    }
    Group::from_generators(degree, gens, cap)
}

/// Parses the group-spec text format: first line `degree <n>`, then one
/// generator per line in disjoint-cycle notation.
pub fn parse_group_spec(text: &str, cap: usize) -> Result<Arc<Group>> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty group spec".into()))?;
    let degree = header
        .strip_prefix("degree")
        .map(str::trim)
        .and_then(|s| s.parse::<usize>().ok())
        .ok_or_else(|| Error::Parse(format!("expected `degree <n>`, got {header:?}")))?;
    let gens: Vec<Perm> = lines
        .map(|l| Perm::parse(degree, l))
        .collect::<Result<_>>()?;
    Ok(Arc::new(Group::from_generators(degree, gens, cap)?))
}

/// Parses the G-set spec format against a group: first line `points <k>`,
/// then one line per group generator listing the 1-based images of 1..k.
pub fn parse_gset_spec(group: &Arc<Group>, text: &str) -> Result<GSet> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty gset spec".into()))?;
    let points = header
        .strip_prefix("points")
        .map(str::trim)
        .and_then(|s| s.parse::<usize>().ok())
        .ok_or_else(|| Error::Parse(format!("expected `points <k>`, got {header:?}")))?;
    let mut rows = Vec::new();
    for line in lines {
        let row: Vec<u32> = line
            .split_whitespace()
            .map(|s| {
                s.parse::<u32>()
                    .ok()
                    .and_then(|v| v.checked_sub(1))
                    .ok_or_else(|| Error::Parse(format!("bad point {s:?} in gset spec")))
            })
            .collect::<Result<_>>()?;
        if row.len() != points {
            return Err(Error::Parse(format!(
                "generator row has {} images, expected {points}",
                row.len()
            )));
        }
        rows.push(row);
    }
    GSet::from_generator_images(group, points, &rows, "file")
}

/// Resolves a named G-set: `natural`, `conjugation`/`conj`, `regular`, or
/// `trivial<k>`.
pub fn named_gset(group: &Arc<Group>, name: &str) -> Result<GSet> {
    match name {
        "natural" => GSet::natural(group),
        "conjugation" | "conj" => GSet::conjugation(group),
        "regular" => GSet::regular(group),
        _ => {
            if let Some(k) = name.strip_prefix("trivial") {
                let k: usize = k
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad trivial point count in {name:?}")))?;
                return GSet::trivial(group, k);
            }
            Err(Error::Parse(format!("unknown gset {name:?}")))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_ORDER_CAP;

    fn order_of(name: &str) -> usize {
        preset(name, DEFAULT_ORDER_CAP).unwrap().order()
    }

    #[test]
    fn preset_orders() {
        assert_eq!(order_of("C1"), 1);
        assert_eq!(order_of("C7"), 7);
        assert_eq!(order_of("D8"), 8);
        assert_eq!(order_of("D6"), 6);
        assert_eq!(order_of("S4"), 24);
        assert_eq!(order_of("S5"), 120);
        assert_eq!(order_of("A4"), 12);
        assert_eq!(order_of("A5"), 60);
        assert_eq!(order_of("Q8"), 8);
        assert_eq!(order_of("V4"), 4);
        assert_eq!(order_of("SL23"), 24);
        assert_eq!(order_of("C2xC4"), 8);
        assert_eq!(order_of("C2xC2xC2"), 8);
        assert_eq!(order_of("C2xD8"), 16);
    }

    #[test]
    fn q8_structure() {
        let q8 = preset("Q8", 100).unwrap();
        assert!(!q8.is_abelian());
        let order_counts: Vec<usize> = (0..8).map(|i| q8.element_order(i)).collect();
        assert_eq!(order_counts.iter().filter(|&&o| o == 2).count(), 1);
        assert_eq!(order_counts.iter().filter(|&&o| o == 4).count(), 6);
    }

    #[test]
    fn sl23_structure() {
        let g = preset("SL23", 100).unwrap();
        assert_eq!(g.order(), 24);
        assert!(!g.is_abelian());
        // unique involution (the center of SL(2,3))
        let involutions = (0..24).filter(|&i| g.element_order(i) == 2).count();
        assert_eq!(involutions, 1);
    }

    #[test]
    fn group_spec_roundtrip() {
        let g = parse_group_spec("degree 3\n(1 2)\n(1 2 3)\n", 100).unwrap();
        assert_eq!(g.order(), 6);
        assert!(parse_group_spec("degree 2\n(1 3)\n", 100).is_err());
    }

    #[test]
    fn gset_spec_parses() {
        let g = preset("S3", 100).unwrap();
        let x = parse_gset_spec(&g, "points 3\n2 1 3\n2 3 1\n").unwrap();
        assert_eq!(x.points(), 3);
        assert!(x.is_transitive());
    }
}
