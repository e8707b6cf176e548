//! Integer matrices and Smith normal form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a {rows}x{cols} integer matrix",
                data.len()
            )));
        }
        Ok(IntMatrix { rows, cols, data })
    }

    pub fn from_i64(rows: usize, cols: usize, data: &[i64]) -> Result<Self> {
        Self::new(rows, cols, data.iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    pub fn mul(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Apply to a column vector.
    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * &v[j]).sum())
            .collect()
    }

    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).collect()
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Option<BigInt> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(BigInt::one());
        }
        let mut m = self.data.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k * n + k].is_zero() {
                let Some(r) = (k + 1..n).find(|&r| !m[r * n + k].is_zero()) else {
                    return Some(BigInt::zero());
                };
                for c in 0..n {
                    m.swap(k * n + c, r * n + c);
                }
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &m[i * n + j] * &m[k * n + k] - &m[i * n + k] * &m[k * n + j];
                    m[i * n + j] = v / &prev;
                }
            }
            prev = m[k * n + k].clone();
        }
        Some(sign * &m[n * n - 1])
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for r in 0..self.rows {
                self.data.swap(r * self.cols + a, r * self.cols + b);
            }
        }
    }

    /// row[target] += factor * row[src]
    fn add_row(&mut self, target: usize, src: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let v = &self.data[src * self.cols + c] * factor;
            self.data[target * self.cols + c] += v;
        }
    }

    /// `(row a, row b) ← (x·a + y·b, z·a + w·b)`
    fn mix_rows(&mut self, a: usize, b: usize, [x, y, z, w]: [&BigInt; 4]) {
        for c in 0..self.cols {
            let (ra, rb) = (&self.data[a * self.cols + c], &self.data[b * self.cols + c]);
            let na = x * ra + y * rb;
            let nb = z * ra + w * rb;
            self.data[a * self.cols + c] = na;
            self.data[b * self.cols + c] = nb;
        }
    }

    /// `(col a, col b) ← (x·a + y·b, z·a + w·b)`
    fn mix_cols(&mut self, a: usize, b: usize, [x, y, z, w]: [&BigInt; 4]) {
        for r in 0..self.rows {
            let (ca, cb) = (&self.data[r * self.cols + a], &self.data[r * self.cols + b]);
            let na = x * ca + y * cb;
            let nb = z * ca + w * cb;
            self.data[r * self.cols + a] = na;
            self.data[r * self.cols + b] = nb;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let v = -std::mem::take(&mut self.data[r * self.cols + c]);
            self.data[r * self.cols + c] = v;
        }
    }
}

/// `u · m · v = d` with `d` diagonal, `d₁ | d₂ | …`, and `u`, `v` unimodular.
/// `v_inv` is tracked alongside `v` since cohomology computations need it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
}

impl SmithForm {
    /// Nonzero diagonal entries.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.d.diagonal().into_iter().filter(|d| !d.is_zero()).collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (rows, cols) = (m.rows, m.cols);
    let mut a = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    let mut v_inv = IntMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        // smallest nonzero entry of the trailing block becomes the pivot
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                let e = a.get(i, j);
                if !e.is_zero() && best.is_none_or(|(bi, bj)| e.abs() < a.get(bi, bj).abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        a.swap_rows(t, bi);
        u.swap_rows(t, bi);
        a.swap_cols(t, bj);
        v.swap_cols(t, bj);
        v_inv.swap_rows(t, bj);

        loop {
            // clear column t with unimodular 2x2 row steps
            for i in t + 1..rows {
                if a.get(i, t).is_zero() {
                    continue;
                }
                let (p, q) = (a.get(t, t).clone(), a.get(i, t).clone());
                if q.is_multiple_of(&p) {
                    let f = -(&q / &p);
                    a.add_row(i, t, &f);
                    u.add_row(i, t, &f);
                    continue;
                }
                let e = p.extended_gcd(&q);
                let (pg, qg) = (&p / &e.gcd, &q / &e.gcd);
                let nqg = -&qg;
                let coeffs = [&e.x, &e.y, &nqg, &pg];
                a.mix_rows(t, i, coeffs);
                u.mix_rows(t, i, coeffs);
            }
            // clear row t with the transposed steps; v_inv gets the inverse row step
            for j in t + 1..cols {
                if a.get(t, j).is_zero() {
                    continue;
                }
                let (p, q) = (a.get(t, t).clone(), a.get(t, j).clone());
                if q.is_multiple_of(&p) {
                    // col j -= f·col t, so row t of v_inv gains f·row j
                    let f = &q / &p;
                    let (one, zero, nf) = (BigInt::one(), BigInt::zero(), -&f);
                    a.mix_cols(t, j, [&one, &zero, &nf, &one]);
                    v.mix_cols(t, j, [&one, &zero, &nf, &one]);
                    v_inv.mix_rows(t, j, [&one, &f, &zero, &one]);
                    continue;
                }
                let e = p.extended_gcd(&q);
                let (pg, qg) = (&p / &e.gcd, &q / &e.gcd);
                let nqg = -&qg;
                let ny = -&e.y;
                a.mix_cols(t, j, [&e.x, &e.y, &nqg, &pg]);
                v.mix_cols(t, j, [&e.x, &e.y, &nqg, &pg]);
                v_inv.mix_rows(t, j, [&pg, &qg, &ny, &e.x]);
            }
            if (t + 1..rows).any(|i| !a.get(i, t).is_zero()) {
                continue;
            }
            // divisibility: pivot must divide the whole trailing block
            let pivot = a.get(t, t).clone();
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a.get(i, j).is_multiple_of(&pivot)));
            match bad {
                Some(i) => {
                    let one = BigInt::one();
                    a.add_row(t, i, &one);
                    u.add_row(t, i, &one);
                }
                None => break,
            }
        }
        if a.get(t, t).is_negative() {
            a.negate_row(t);
            u.negate_row(t);
        }
    }
    SmithForm { u, d: a, v, v_inv }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn check(m: &IntMatrix) -> SmithForm {
        let s = smith_normal_form(m);
        assert_eq!(s.u.mul(m).unwrap().mul(&s.v).unwrap(), s.d);
        assert_eq!(s.v.mul(&s.v_inv).unwrap(), IntMatrix::identity(m.cols()));
        assert_eq!(s.u.determinant().unwrap().abs(), BigInt::one());
        assert_eq!(s.v.determinant().unwrap().abs(), BigInt::one());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                if i != j {
                    assert!(s.d.get(i, j).is_zero());
                }
            }
        }
        let diag = s.d.diagonal();
        for w in diag.windows(2) {
            if w[1].is_zero() {
                continue;
            }
            assert!(!w[0].is_zero() && w[1].is_multiple_of(&w[0]), "divisibility {diag:?}");
            assert!(!w[0].is_negative());
        }
        s
    }

    #[test]
    fn zero_matrix() {
        let s = check(&IntMatrix::zeros(3, 2));
        assert_eq!(s.d, IntMatrix::zeros(3, 2));
        assert_eq!(s.u, IntMatrix::identity(3));
        assert_eq!(s.v, IntMatrix::identity(2));
    }

    #[test]
    fn identity_matrix() {
        let s = check(&IntMatrix::identity(4));
        assert_eq!(s.d, IntMatrix::identity(4));
    }

    #[test]
    fn two_by_two_example() {
        let s = check(&IntMatrix::from_i64(2, 2, &[2, 4, 6, 8]).unwrap());
        assert_eq!(s.d.diagonal(), vec![BigInt::from(2), BigInt::from(4)]);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn snf_properties(rows in 1usize..=8, cols in 1usize..=8,
                          entries in prop::collection::vec(-20i64..=20, 64)) {
            let m = IntMatrix::from_i64(rows, cols, &entries[..rows * cols]).unwrap();
            check(&m);
        }
    }
}
