//! Permutations on `{0, .., degree-1}`, with the 1-based disjoint-cycle text
//! form used by group spec files.

use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{0, .., degree-1}` stored as its image table.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    /// Builds a permutation from its image table, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            let img = img as usize;
            if img >= n || seen[img] {
                return Err(Error::MalformedPermutation(format!(
                    "image table {images:?} is not a bijection on 0..{n}"
                )));
            }
            seen[img] = true;
        }
        Ok(Perm { images })
    }

    pub fn identity(degree: usize) -> Self {
        Perm {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds from disjoint cycles over 1-based points.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut moved = vec![false; degree];
        for cycle in cycles {
            for (i, &pt) in cycle.iter().enumerate() {
                if pt == 0 || pt > degree {
                    return Err(Error::MalformedPermutation(format!(
                        "point {pt} outside 1..={degree}"
                    )));
                }
                if moved[pt - 1] {
                    return Err(Error::MalformedPermutation(format!(
                        "point {pt} appears twice"
                    )));
                }
                moved[pt - 1] = true;
                let next = cycle[(i + 1) % cycle.len()];
                if next == 0 || next > degree {
                    return Err(Error::MalformedPermutation(format!(
                        "point {next} outside 1..={degree}"
                    )));
                }
                images[pt - 1] = (next - 1) as u32;
            }
        }
        Perm::from_images(images)
    }

    /// Parses disjoint-cycle notation such as `(1 2)(3 4)`. Commas are
    /// accepted as separators. The empty string or `()` is the identity.
    pub fn parse(degree: usize, text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() || text == "()" {
            return Ok(Perm::identity(degree));
        }
        let mut cycles = Vec::new();
        let mut rest = text;
        while !rest.is_empty() {
            let rest2 = rest.trim_start();
            if !rest2.starts_with('(') {
                return Err(Error::Parse(format!("expected '(' in cycle list: {text}")));
            }
            let close = rest2
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unbalanced '(' in {text}")))?;
            let body = &rest2[1..close];
            let cycle: Vec<usize> = body
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad point {s:?} in {text}")))
                })
                .collect::<Result<_>>()?;
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = &rest2[close + 1..];
        }
        Perm::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    /// `self` after `other`: `(self * other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: other.images.iter().map(|&x| self.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u32; self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img as usize] = i as u32;
        }
        Perm { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i as u32 == img)
    }

    pub fn order(&self) -> usize {
        let mut p = self.clone();
        let mut k = 1;
        while !p.is_identity() {
            p = self.compose(&p);
            k += 1;
        }
        k
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }
}

impl fmt::Display for Perm {
    /// Disjoint-cycle notation over 1-based points; identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut wrote = false;
        for start in 0..n {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            write!(f, "(")?;
            let mut p = start;
            let mut first = true;
            while !seen[p] {
                seen[p] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", p + 1)?;
                first = false;
                p = self.images[p] as usize;
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm[{self}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_applies_right_first() {
        // (1 2) after (2 3): 3 -> 2 -> 1
        let a = Perm::parse(3, "(1 2)").unwrap();
        let b = Perm::parse(3, "(2 3)").unwrap();
        let ab = a.compose(&b);
        assert_eq!(ab.apply(2), 0);
        assert_eq!(ab.to_string(), "(1 2 3)");
    }

    #[test]
    fn inverse_roundtrip() {
        let p = Perm::parse(5, "(1 3 5)(2 4)").unwrap();
        assert!(p.compose(&p.inverse()).is_identity());
        assert_eq!(p.order(), 6);
    }

    #[test]
    fn parse_rejects_repeated_point() {
        assert!(Perm::parse(4, "(1 2)(2 3)").is_err());
        assert!(Perm::parse(2, "(1 3)").is_err());
    }

    #[test]
    fn display_roundtrip() {
        for text in ["()", "(1 2)", "(1 2 3)(4 5)"] {
            let p = Perm::parse(6, text).unwrap();
            assert_eq!(Perm::parse(6, &p.to_string()).unwrap(), p);
        }
    }
}
