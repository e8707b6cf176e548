//! Deterministic enumeration of coordinate vectors over F_p.

use super::fp;
use super::matrix::FpMatrix;
use crate::error::{Error, Limits, Result};

/// All vectors of F_p^dim in lexicographic order (first coordinate most significant).
#[derive(Debug, Clone)]
pub struct LexVectors {
    p: u32,
    current: Option<Vec<u32>>,
}

impl LexVectors {
    pub fn new(p: u32, dim: usize) -> Self {
        LexVectors { p, current: Some(vec![0; dim]) }
    }
}

impl Iterator for LexVectors {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let out = self.current.take()?;
        let mut next = out.clone();
        let mut i = next.len();
        let mut carried = true;
        while i > 0 {
            i -= 1;
            next[i] += 1;
            if next[i] < self.p {
                carried = false;
                break;
            }
            next[i] = 0;
        }
        if !carried {
            self.current = Some(next);
        }
        Some(out)
    }
}

/// Linear combination `Σ coeffs[i] · basis[i]` of matrices.
pub fn combine(p: u32, basis: &[FpMatrix], coeffs: &[u32]) -> FpMatrix {
    let (rows, cols) = basis.first().map_or((0, 0), |b| (b.rows(), b.cols()));
    let mut data = vec![0u32; rows * cols];
    for (b, &c) in basis.iter().zip(coeffs) {
        if c == 0 {
            continue;
        }
        for (d, &v) in data.iter_mut().zip(b.data()) {
            *d = fp::add(*d, fp::mul(c, v, p), p);
        }
    }
    FpMatrix::new(p, rows, cols, data).expect("shape preserved")
}

/// Coordinate vectors (w.r.t. `basis`) of the invertible elements in the span
/// of `basis`, yielded in lexicographic coordinate order.
pub struct InvertibleElements<'a> {
    p: u32,
    basis: &'a [FpMatrix],
    inner: LexVectors,
}

impl Iterator for InvertibleElements<'_> {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let (p, basis) = (self.p, self.basis);
        self.inner.by_ref().find(|coeffs| combine(p, basis, coeffs).is_invertible())
    }
}

/// Enumerate the invertible elements of the subspace of End(F_p^n) spanned by `basis`.
///
/// Fails with `SearchSpaceTooLarge` when `p^dim` exceeds the cap. An empty basis yields nothing.
pub fn invertible_elements<'a>(
    p: u32,
    basis: &'a [FpMatrix],
    limits: &Limits,
) -> Result<InvertibleElements<'a>> {
    if let Some(b) = basis.iter().find(|b| b.modulus() != p) {
        return Err(Error::ModulusMismatch(p, b.modulus()));
    }
    let n = basis.first().map_or(0, |b| b.rows());
    if basis.iter().any(|b| b.rows() != n || b.cols() != n) {
        return Err(Error::ShapeMismatch("basis elements must be n x n".into()));
    }
    limits.check_space(p, basis.len())?;
    let mut inner = LexVectors::new(p, basis.len());
    if basis.is_empty() {
        inner.current = None;
    }
    Ok(InvertibleElements { p, basis, inner })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn elementary(p: u32, n: usize) -> Vec<FpMatrix> {
        (0..n * n)
            .map(|k| {
                let mut m = FpMatrix::zeros(p, n, n);
                m.set(k / n, k % n, 1);
                m
            })
            .collect()
    }

    #[test]
    fn lex_order() {
        let all: Vec<_> = LexVectors::new(2, 2).collect();
        assert_eq!(all, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert_eq!(LexVectors::new(3, 0).count(), 1);
    }

    #[test]
    fn scalars_over_f3() {
        let basis = vec![FpMatrix::identity(3, 1)];
        let got: Vec<_> = invertible_elements(3, &basis, &Limits::default()).unwrap().collect();
        assert_eq!(got, vec![vec![1], vec![2]]);
    }

    #[test]
    fn empty_basis_yields_nothing() {
        assert_eq!(invertible_elements(5, &[], &Limits::default()).unwrap().count(), 0);
    }

    #[test]
    fn gl2_f2_has_six_elements() {
        let basis = elementary(2, 2);
        // brute force: count 2x2 matrices over F_2 with ad - bc odd
        let mut oracle = 0;
        for a in 0..2 {
            for b in 0..2 {
                for c in 0..2 {
                    for d in 0..2 {
                        if (a * d + b * c) % 2 == 1 {
                            oracle += 1;
                        }
                    }
                }
            }
        }
        assert_eq!(oracle, 6);
        let count = invertible_elements(2, &basis, &Limits::default()).unwrap().count();
        assert_eq!(count, oracle);
    }

    #[test]
    fn matches_full_enumeration_on_gl2_f5() {
        let basis = elementary(5, 2);
        let got: Vec<_> = invertible_elements(5, &basis, &Limits::default()).unwrap().collect();
        let mut expected = Vec::new();
        for v in LexVectors::new(5, 4) {
            let det = (v[0] * v[3] + 25 - (v[1] * v[2]) % 5) % 5;
            if det != 0 {
                expected.push(v);
            }
        }
        assert_eq!(got.len(), 480);
        assert_eq!(got, expected);
    }

    #[test]
    fn cap_is_enforced() {
        let basis = elementary(5, 3);
        let limits = Limits { max_search: 1000 };
        assert!(matches!(
            invertible_elements(5, &basis, &limits),
            Err(Error::SearchSpaceTooLarge { .. })
        ));
    }
}
