use std::fmt;

use super::fp::{self, FpScalar};
use crate::error::{Error, Result};

/// Dense row-major matrix over F_p.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FpMatrix {
    p: u32,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

/// Solution set of `A x = b`: `particular + span(kernel_basis)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub particular: Vec<u32>,
    pub kernel_basis: Vec<Vec<u32>>,
}

impl FpMatrix {
    pub fn new(p: u32, rows: usize, cols: usize, data: Vec<u32>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(FpMatrix { p, rows, cols, data: data.into_iter().map(|v| v % p).collect() })
    }

    pub fn from_rows(p: u32, rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        let data = rows.iter().flatten().map(|&v| fp::reduce(v, p)).collect();
        Ok(FpMatrix { p, rows: rows.len(), cols, data })
    }

    pub fn zeros(p: u32, rows: usize, cols: usize) -> Self {
        FpMatrix { p, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(p: u32, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1 % p;
        }
        m
    }

    /// Matrix whose columns are the given vectors (each of length `rows`).
    pub fn from_columns(p: u32, rows: usize, columns: &[Vec<u32>]) -> Self {
        let cols = columns.len();
        let mut m = Self::zeros(p, rows, cols);
        for (j, c) in columns.iter().enumerate() {
            debug_assert_eq!(c.len(), rows);
            for (i, &v) in c.iter().enumerate() {
                m.data[i * cols + j] = v % p;
            }
        }
        m
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[u32] {
        &self.data
    }

    pub fn into_data(self) -> Vec<u32> {
        self.data
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v % self.p;
    }

    pub fn column(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn mul(&self, rhs: &FpMatrix) -> Result<FpMatrix> {
        if self.p != rhs.p {
            return Err(Error::ModulusMismatch(self.p, rhs.p));
        }
        if self.cols != rhs.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let p = self.p as u64;
        let mut out = vec![0u32; self.rows * rhs.cols];
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = 0u64;
                for k in 0..self.cols {
                    acc += self.data[i * self.cols + k] as u64 * rhs.data[k * rhs.cols + j] as u64;
                    if acc >= 1 << 62 {
                        acc %= p;
                    }
                }
                out[i * rhs.cols + j] = (acc % p) as u32;
            }
        }
        Ok(FpMatrix { p: self.p, rows: self.rows, cols: rhs.cols, data: out })
    }

    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        debug_assert_eq!(v.len(), self.cols);
        let p = self.p as u64;
        (0..self.rows)
            .map(|i| {
                let row = &self.data[i * self.cols..(i + 1) * self.cols];
                let acc: u64 = row.iter().zip(v).map(|(&a, &b)| a as u64 * b as u64 % p).sum();
                (acc % p) as u32
            })
            .collect()
    }

    pub fn add(&self, rhs: &FpMatrix) -> Result<FpMatrix> {
        self.zip_with(rhs, fp::add)
    }

    pub fn sub(&self, rhs: &FpMatrix) -> Result<FpMatrix> {
        self.zip_with(rhs, fp::sub)
    }

    fn zip_with(&self, rhs: &FpMatrix, f: fn(u32, u32, u32) -> u32) -> Result<FpMatrix> {
        if self.p != rhs.p {
            return Err(Error::ModulusMismatch(self.p, rhs.p));
        }
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(Error::ShapeMismatch("entrywise operation on different shapes".into()));
        }
        let data = self.data.iter().zip(&rhs.data).map(|(&a, &b)| f(a, b, self.p)).collect();
        Ok(FpMatrix { p: self.p, rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, c: u32) -> FpMatrix {
        let data = self.data.iter().map(|&a| fp::mul(a, c, self.p)).collect();
        FpMatrix { p: self.p, rows: self.rows, cols: self.cols, data }
    }

    pub fn transpose(&self) -> FpMatrix {
        let mut t = Self::zeros(self.p, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j);
            }
        }
        t
    }

    /// Stack matrices with equal column counts on top of each other.
    pub fn vstack(p: u32, cols: usize, blocks: &[FpMatrix]) -> FpMatrix {
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            debug_assert_eq!(b.cols, cols);
            data.extend_from_slice(&b.data);
            rows += b.rows;
        }
        FpMatrix { p, rows, cols, data }
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (FpMatrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place(m.cols);
        (m, pivots)
    }

    /// Row-reduce using only the first `limit` columns as pivot candidates.
    fn rref_in_place(&mut self, limit: usize) -> Vec<usize> {
        let p = self.p;
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..limit {
            if row == self.rows {
                break;
            }
            let Some(piv) = (row..self.rows).find(|&r| self.data[r * cols + col] != 0) else {
                continue;
            };
            if piv != row {
                for c in 0..cols {
                    self.data.swap(piv * cols + c, row * cols + c);
                }
            }
            let scale = fp::inv(self.data[row * cols + col], p).expect("nonzero pivot");
            for c in col..cols {
                self.data[row * cols + c] = fp::mul(self.data[row * cols + c], scale, p);
            }
            for r in 0..self.rows {
                if r == row {
                    continue;
                }
                let factor = self.data[r * cols + col];
                if factor == 0 {
                    continue;
                }
                for c in col..cols {
                    let v = fp::mul(factor, self.data[row * cols + c], p);
                    self.data[r * cols + c] = fp::sub(self.data[r * cols + c], v, p);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Canonical kernel basis: one vector per free column, in ascending order.
    pub fn kernel_basis(&self) -> Vec<Vec<u32>> {
        let (r, pivots) = self.rref();
        kernel_from_rref(&r, &pivots, self.cols)
    }

    /// Solve `self · x = b`. Returns `None` when the system is inconsistent.
    pub fn solve(&self, b: &[u32]) -> Option<Solution> {
        assert_eq!(b.len(), self.rows, "right-hand side length");
        let p = self.p;
        let cols = self.cols + 1;
        let mut aug = FpMatrix::zeros(p, self.rows, cols);
        for (i, &bi) in b.iter().enumerate() {
            aug.data[i * cols..i * cols + self.cols]
                .copy_from_slice(&self.data[i * self.cols..(i + 1) * self.cols]);
            aug.data[i * cols + self.cols] = bi % p;
        }
        let pivots = aug.rref_in_place(self.cols);
        for i in pivots.len()..self.rows {
            if aug.data[i * cols + self.cols] != 0 {
                return None;
            }
        }
        let mut particular = vec![0u32; self.cols];
        for (i, &c) in pivots.iter().enumerate() {
            particular[c] = aug.data[i * cols + self.cols];
        }
        let kernel_basis = kernel_from_rref(&aug, &pivots, self.cols);
        Some(Solution { particular, kernel_basis })
    }

    pub fn inverse(&self) -> Option<FpMatrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = FpMatrix::zeros(self.p, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.data[i * 2 * n + j] = self.get(i, j);
            }
            aug.data[i * 2 * n + n + i] = 1 % self.p;
        }
        let pivots = aug.rref_in_place(n);
        if pivots.len() != n {
            return None;
        }
        let mut inv = FpMatrix::zeros(self.p, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.data[i * n + j] = aug.data[i * 2 * n + n + j];
            }
        }
        Some(inv)
    }

    pub fn determinant(&self) -> Option<u32> {
        if !self.is_square() {
            return None;
        }
        let p = self.p;
        let n = self.rows;
        let mut m = self.data.clone();
        let mut det = 1 % p;
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| m[r * n + col] != 0) else {
                return Some(0);
            };
            if piv != col {
                for c in 0..n {
                    m.swap(piv * n + c, col * n + c);
                }
                det = fp::neg(det, p);
            }
            let pv = m[col * n + col];
            det = fp::mul(det, pv, p);
            let pinv = fp::inv(pv, p).unwrap();
            for r in col + 1..n {
                let factor = fp::mul(m[r * n + col], pinv, p);
                if factor == 0 {
                    continue;
                }
                for c in col..n {
                    let v = fp::mul(factor, m[col * n + c], p);
                    m[r * n + c] = fp::sub(m[r * n + c], v, p);
                }
            }
        }
        Some(det)
    }

    pub fn is_invertible(&self) -> bool {
        self.determinant().is_some_and(|d| d != 0)
    }
}

fn kernel_from_rref(r: &FpMatrix, pivots: &[usize], ncols: usize) -> Vec<Vec<u32>> {
    let p = r.p;
    let mut is_pivot = vec![false; ncols];
    for &c in pivots {
        is_pivot[c] = true;
    }
    (0..ncols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![0u32; ncols];
            v[free] = 1 % p;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = fp::neg(r.get(i, free), p);
            }
            v
        })
        .collect()
}

/// Solve `A x = b` over F_p.
///
/// Returns `Ok(None)` when no solution exists.
pub fn solve_mod_p(a: &FpMatrix, b: &[FpScalar]) -> Result<Option<Solution>> {
    if let Some(s) = b.iter().find(|s| s.modulus() != a.p) {
        return Err(Error::ModulusMismatch(a.p, s.modulus()));
    }
    if b.len() != a.rows {
        return Err(Error::ShapeMismatch(format!(
            "right-hand side of length {} for {} rows",
            b.len(),
            a.rows
        )));
    }
    let raw: Vec<u32> = b.iter().map(|s| s.value()).collect();
    Ok(a.solve(&raw))
}

impl fmt::Display for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn scalars(p: u32, v: &[i64]) -> Vec<FpScalar> {
        v.iter().map(|&x| FpScalar::new(x, p)).collect()
    }

    #[test]
    fn identity_system() {
        let a = FpMatrix::identity(5, 3);
        let s = solve_mod_p(&a, &scalars(5, &[1, 2, 3])).unwrap().unwrap();
        assert_eq!(s.particular, vec![1, 2, 3]);
        assert!(s.kernel_basis.is_empty());
    }

    #[test]
    fn zero_map_misses_nonzero() {
        let a = FpMatrix::zeros(3, 2, 2);
        assert_eq!(solve_mod_p(&a, &scalars(3, &[1, 0])).unwrap(), None);
    }

    #[test]
    fn rank_one_system_substitutes_back() {
        let a = FpMatrix::from_rows(5, &[vec![1, 2], vec![2, 4]]).unwrap();
        let s = solve_mod_p(&a, &scalars(5, &[1, 2])).unwrap().unwrap();
        assert_eq!(a.apply(&s.particular), vec![1, 2]);
        assert_eq!(s.kernel_basis.len(), 1);
        assert_eq!(a.apply(&s.kernel_basis[0]), vec![0, 0]);
    }

    #[test]
    fn modulus_mismatch_is_reported() {
        let a = FpMatrix::identity(5, 2);
        let b = vec![FpScalar::new(1, 5), FpScalar::new(1, 7)];
        assert_eq!(solve_mod_p(&a, &b), Err(Error::ModulusMismatch(5, 7)));
    }

    #[test]
    fn inverse_and_determinant() {
        let a = FpMatrix::from_rows(7, &[vec![2, 1], vec![1, 1]]).unwrap();
        assert_eq!(a.determinant(), Some(1));
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), FpMatrix::identity(7, 2));
        let sing = FpMatrix::from_rows(7, &[vec![1, 2], vec![2, 4]]).unwrap();
        assert_eq!(sing.determinant(), Some(0));
        assert!(sing.inverse().is_none());
    }

    proptest! {
        #[test]
        fn solutions_satisfy_the_system(
            p in prop::sample::select(vec![2u32, 3, 5, 7]),
            rows in 1usize..5, cols in 1usize..5,
            seed in prop::collection::vec(0u32..1000, 25),
            rhs in prop::collection::vec(0u32..1000, 5),
        ) {
            let a = FpMatrix::new(p, rows, cols, seed[..rows * cols].to_vec()).unwrap();
            let b: Vec<u32> = rhs[..rows].iter().map(|v| v % p).collect();
            let rank = a.rank();
            match a.solve(&b) {
                Some(s) => {
                    prop_assert_eq!(a.apply(&s.particular), b);
                    prop_assert_eq!(s.kernel_basis.len(), cols - rank);
                    for v in &s.kernel_basis {
                        prop_assert!(a.apply(v).iter().all(|&x| x == 0));
                    }
                }
                None => {
                    // inconsistent: augmenting with b raises the rank
                    let mut cols_v: Vec<Vec<u32>> = (0..cols).map(|c| a.column(c)).collect();
                    cols_v.push(b.clone());
                    prop_assert_eq!(FpMatrix::from_columns(p, rows, &cols_v).rank(), rank + 1);
                }
            }
        }
    }
}
