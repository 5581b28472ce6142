//! Linear algebra over Z/m for composite m: Howell-style row reduction,
//! kernels, membership tests, and diagonalization for quotient structure.
//!
//! Matrices are dense u32 row-major with entries reduced mod m. Sizes here
//! are a few hundred rows by a few thousand columns at most, so cubic
//! elimination is fine.

/// Extended gcd: returns (g, s, t) with s*a + t*b = g.
pub fn egcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, s, t) = egcd(b, a % b);
        (g, t, s - (a / b) * t)
    }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

/// A unit u mod m with u*a = gcd(a, m) mod m. Brute force; moduli here are
/// tiny.
fn normalizing_unit(a: u64, m: u64) -> u64 {
    if a % m == 0 {
        return 1;
    }
    let g = gcd(a, m);
    for u in 1..m {
        if gcd(u, m) == 1 && (u * a) % m == g {
            return u;
        }
    }
    unreachable!("no normalizing unit for {a} mod {m}");
}

#[derive(Clone)]
pub struct ModMat {
    pub m: u64,
    pub cols: usize,
    pub rows: Vec<Vec<u32>>,
}

impl ModMat {
    pub fn new(m: u64, cols: usize) -> ModMat {
        ModMat {
            m,
            cols,
            rows: Vec::new(),
        }
    }

    pub fn push_row(&mut self, row: Vec<u32>) {
        debug_assert_eq!(row.len(), self.cols);
        debug_assert!(row.iter().all(|&v| (v as u64) < self.m));
        self.rows.push(row);
    }

    fn row_combine(&mut self, i: usize, j: usize, col: usize) {
        // Make rows[i][col] = gcd and rows[j][col] = 0 via a unimodular 2x2.
        let a = self.rows[i][col] as i64;
        let b = self.rows[j][col] as i64;
        let (g, s, t) = egcd(a, b);
        let (u, v) = (-(b / g), a / g);
        let m = self.m as i64;
        for c in 0..self.cols {
            let x = self.rows[i][c] as i64;
            let y = self.rows[j][c] as i64;
            self.rows[i][c] = ((s * x + t * y).rem_euclid(m)) as u32;
            self.rows[j][c] = ((u * x + v * y).rem_euclid(m)) as u32;
        }
    }

    fn scale_row(&mut self, i: usize, u: u64) {
        for c in 0..self.cols {
            self.rows[i][c] = ((self.rows[i][c] as u64 * u) % self.m) as u32;
        }
    }

    fn row_sub(&mut self, i: usize, j: usize, q: u64) {
        // rows[i] -= q * rows[j]
        let m = self.m;
        for c in 0..self.cols {
            let x = self.rows[i][c] as u64;
            let y = (self.rows[j][c] as u64 * q) % m;
            self.rows[i][c] = ((x + m - y) % m) as u32;
        }
    }

    /// In-place Howell form. After this, rows are in echelon order with
    /// pivot entries dividing m, entries above a pivot reduced below it, and
    /// the row span has the Howell property: any vector in the span whose
    /// leading coordinates vanish is a combination of the rows whose leading
    /// coordinates vanish likewise.
    pub fn howellize(&mut self) {
        let mut pivot = 0usize;
        for col in 0..self.cols {
            // concentrate the column gcd in one row
            let mut first: Option<usize> = None;
            for r in pivot..self.rows.len() {
                if self.rows[r][col] != 0 {
                    match first {
                        None => first = Some(r),
                        Some(f) => self.row_combine(f, r, col),
                    }
                }
            }
            let Some(f) = first else { continue };
            self.rows.swap(pivot, f);
            let a = self.rows[pivot][col] as u64;
            let u = normalizing_unit(a, self.m);
            self.scale_row(pivot, u);
            let d = self.rows[pivot][col] as u64;
            debug_assert_eq!(self.m % d, 0);
            // reduce entries above the pivot into [0, d)
            for r in 0..pivot {
                let v = self.rows[r][col] as u64;
                if v >= d {
                    self.row_sub(r, pivot, v / d);
                }
            }
            // Howell augmentation: (m/d) * pivot row starts further right
            if d != 1 {
                let scale = self.m / d;
                let extra: Vec<u32> = self.rows[pivot]
                    .iter()
                    .map(|&x| ((x as u64 * scale) % self.m) as u32)
                    .collect();
                if extra.iter().any(|&x| x != 0) {
                    self.rows.push(extra);
                }
            }
            pivot += 1;
        }
        self.rows.retain(|r| r.iter().any(|&x| x != 0));
    }

    /// Leading column of each (nonzero) row, assuming Howell form.
    fn leading(&self) -> Vec<(usize, usize)> {
        self.rows
            .iter()
            .enumerate()
            .filter_map(|(i, r)| r.iter().position(|&x| x != 0).map(|c| (i, c)))
            .collect()
    }

    /// Reduces `v` against the rows (must be in Howell form); returns the
    /// remainder. The remainder is zero exactly when v lies in the row span.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let mut v = v.to_vec();
        let m = self.m;
        for (i, c) in self.leading() {
            if v[c] == 0 {
                continue;
            }
            let d = self.rows[i][c] as u64;
            let val = v[c] as u64;
            if val % d != 0 {
                continue; // not reducible at this pivot; v will stay nonzero
            }
            let q = val / d;
            for k in 0..self.cols {
                let x = v[k] as u64;
                let y = (self.rows[i][k] as u64 * q) % m;
                v[k] = ((x + m - y) % m) as u32;
            }
        }
        v
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }
}

/// Generators of the kernel `{x : A x = 0 mod m}` of the linear map given by
/// `columns` (each of length `ambient`). Returned vectors have length
/// `columns.len()`.
pub fn kernel(m: u64, ambient: usize, columns: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let k = columns.len();
    let mut mat = ModMat::new(m, ambient + k);
    for (i, col) in columns.iter().enumerate() {
        debug_assert_eq!(col.len(), ambient);
        let mut row = Vec::with_capacity(ambient + k);
        row.extend_from_slice(col);
        row.extend(std::iter::repeat(0u32).take(k));
        row[ambient + i] = 1;
        mat.push_row(row);
    }
    mat.howellize();
    mat.rows
        .iter()
        .filter(|r| r[..ambient].iter().all(|&x| x == 0))
        .map(|r| r[ambient..].to_vec())
        .collect()
}

/// Diagonalization of a relation matrix over Z/m with column transforms
/// tracked, for reading off the structure of `(Z/m)^r / rowspan(rel)`.
///
/// Returns `(divisors, gens)`: the quotient is the direct sum of Z/divisor
/// components, and `gens[t]` expresses the t-th component generator as a
/// combination of the original r generators. Trivial components (divisor 1)
/// are omitted.
pub fn quotient_structure(m: u64, r: usize, relations: &[Vec<u32>]) -> (Vec<u64>, Vec<Vec<u32>>) {
    let mut mat = ModMat::new(m, r);
    for rel in relations {
        mat.push_row(rel.clone());
    }
    // W tracks the inverse of the accumulated column transform: the new
    // generators are h = W * g.
    let mut w: Vec<Vec<u32>> = (0..r)
        .map(|i| (0..r).map(|j| u32::from(i == j)).collect())
        .collect();
    let nrows = mat.rows.len();
    let mi = m as i64;

    let col_combine = |mat: &mut ModMat, w: &mut Vec<Vec<u32>>, j: usize, k: usize, t: usize| {
        // gcd-combine columns j (pivot) and k at row t, zeroing (t, k)
        let a = mat.rows[t][j] as i64;
        let b = mat.rows[t][k] as i64;
        let (g, s, tt) = egcd(a, b);
        let (u, v) = (-(b / g), a / g);
        // cols (j, k) <- (s*j + tt*k, u*j + v*k); det 1
        for row in mat.rows.iter_mut() {
            let x = row[j] as i64;
            let y = row[k] as i64;
            row[j] = ((s * x + tt * y).rem_euclid(mi)) as u32;
            row[k] = ((u * x + v * y).rem_euclid(mi)) as u32;
        }
        // inverse transform on W rows: [[s,tt],[u,v]]^-1 = [[v,-tt],[-u,s]]
        for c in 0..r {
            let x = w[j][c] as i64;
            let y = w[k][c] as i64;
            w[j][c] = ((v * x - tt * y).rem_euclid(mi)) as u32;
            w[k][c] = ((-u * x + s * y).rem_euclid(mi)) as u32;
        }
    };

    let mut t = 0usize;
    while t < nrows.min(r) {
        // move a nonzero entry to (t, t)
        let mut found = None;
        'search: for i in t..nrows {
            for j in t..r {
                if mat.rows[i][j] != 0 {
                    found = Some((i, j));
                    break 'search;
                }
            }
        }
        let Some((pi, pj)) = found else { break };
        mat.rows.swap(t, pi);
        if pj != t {
            for row in mat.rows.iter_mut() {
                row.swap(t, pj);
            }
            w.swap(t, pj);
        }
        loop {
            // clear column t with row ops
            for i in (t + 1)..nrows {
                if mat.rows[i][t] != 0 {
                    mat.row_combine(t, i, t);
                }
            }
            // clear row t with column ops
            let mut dirty = false;
            for j in (t + 1)..r {
                if mat.rows[t][j] != 0 {
                    col_combine(&mut mat, &mut w, t, j, t);
                    dirty = true;
                }
            }
            if !dirty && (t + 1..nrows).all(|i| mat.rows[i][t] == 0) {
                break;
            }
        }
        // divisibility fixup so divisors form a chain
        let d = gcd(mat.rows[t][t] as u64, m);
        let mut fixed = true;
        'fix: for i in (t + 1)..nrows {
            for j in (t + 1)..r {
                if (mat.rows[i][j] as u64) % d != 0 {
                    let row_i = mat.rows[i].clone();
                    for c in 0..r {
                        let x = mat.rows[t][c] as u64;
                        mat.rows[t][c] = ((x + row_i[c] as u64) % m) as u32;
                    }
                    fixed = false;
                    break 'fix;
                }
            }
        }
        if !fixed {
            continue; // redo this pivot with the mixed-in row
        }
        let u = normalizing_unit(mat.rows[t][t] as u64, m);
        // scale column t by u (tracked)
        for row in mat.rows.iter_mut() {
            row[t] = ((row[t] as u64 * u) % m) as u32;
        }
        let uinv = normalizing_unit(u, m); // u unit: gcd(u,m)=1, u*uinv=1
        debug_assert_eq!((u * uinv) % m, 1);
        for c in 0..r {
            w[t][c] = ((w[t][c] as u64 * uinv) % m) as u32;
        }
        t += 1;
    }

    let mut divisors = Vec::new();
    let mut gens = Vec::new();
    for j in 0..r {
        let d = if j < nrows.min(r) {
            let v = mat.rows[j][j] as u64;
            if v == 0 {
                m
            } else {
                gcd(v, m)
            }
        } else {
            m
        };
        if d > 1 {
            divisors.push(d);
            gens.push(w[j].clone());
        }
    }
    (divisors, gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn egcd_identity() {
        for a in -20i64..20 {
            for b in -20i64..20 {
                if a == 0 && b == 0 {
                    continue;
                }
                let (g, s, t) = egcd(a, b);
                assert_eq!(s * a + t * b, g);
                assert_eq!(g.abs() as u64, gcd(a.unsigned_abs(), b.unsigned_abs()));
            }
        }
    }

    #[test]
    fn howell_membership_z4() {
        // span of (2, 0) and (0, 2) in (Z/4)^2
        let mut mat = ModMat::new(4, 2);
        mat.push_row(vec![2, 0]);
        mat.push_row(vec![0, 2]);
        mat.howellize();
        assert!(mat.contains(&[2, 2]));
        assert!(mat.contains(&[0, 0]));
        assert!(!mat.contains(&[1, 0]));
        assert!(!mat.contains(&[2, 1]));
    }

    #[test]
    fn howell_property_z4() {
        // span{(1,2)} over Z/4 contains (2,0) = 2*(1,2); naive echelon
        // would miss it without the augmentation row.
        let mut mat = ModMat::new(4, 2);
        mat.push_row(vec![1, 2]);
        mat.howellize();
        assert!(mat.contains(&[2, 0]));
        assert!(!mat.contains(&[1, 0]));
    }

    #[test]
    fn kernel_z4() {
        // map (Z/4)^2 -> Z/4, (x, y) -> 2x + 2y
        let cols = vec![vec![2u32], vec![2u32]];
        let ker = kernel(4, 1, &cols);
        let mut span = ModMat::new(4, 2);
        for k in &ker {
            assert_eq!((2 * k[0] + 2 * k[1]) % 4, 0);
            span.push_row(k.clone());
        }
        span.howellize();
        // kernel = {(x,y): x+y even}: contains (2,0), (1,1), (1,3)
        assert!(span.contains(&[2, 0]));
        assert!(span.contains(&[1, 1]));
        assert!(span.contains(&[1, 3]));
        assert!(!span.contains(&[1, 0]));
    }

    #[test]
    fn quotient_of_z4_squared() {
        // (Z/4)^2 / <(2,0)> = Z/2 + Z/4
        let (divs, gens) = quotient_structure(4, 2, &[vec![2, 0]]);
        let mut sorted = divs.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![2, 4]);
        assert_eq!(gens.len(), 2);
    }

    #[test]
    fn quotient_trivial() {
        let (divs, _) = quotient_structure(4, 2, &[vec![1, 0], vec![0, 1]]);
        assert!(divs.is_empty());
    }

    #[test]
    fn quotient_full() {
        let (divs, _) = quotient_structure(3, 2, &[]);
        assert_eq!(divs, vec![3, 3]);
    }
}
