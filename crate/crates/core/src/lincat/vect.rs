use super::LinCat;
use crate::error::{Error, Result};

/// Largest N accepted by [`vect_cat`].
pub const MAX_VECT_DIM: usize = 3;

/// Skeletal Vect_{≤N} over F_p: objects k^0, …, k^N, Hom(k^a, k^b) = b×a matrices.
///
/// The basis of Hom(k^a, k^b) is the elementary matrices E_ij, i < b, j < a, at index `i * a + j`.
pub fn vect_cat(p: u32, n: usize) -> Result<LinCat> {
    if n > MAX_VECT_DIM {
        return Err(Error::LimitExceeded(format!("Vect dimension {n} > {MAX_VECT_DIM}")));
    }
    let objs = n + 1;
    let labels = (0..objs).map(|a| format!("k^{a}")).collect();
    let mut dims = Vec::with_capacity(objs * objs);
    for a in 0..objs {
        for b in 0..objs {
            dims.push(a * b);
        }
    }
    let mut comp = Vec::with_capacity(objs * objs * objs);
    for a in 0..objs {
        for b in 0..objs {
            for c in 0..objs {
                let (dab, dbc, dac) = (a * b, b * c, a * c);
                let mut t = vec![0u32; dbc * dab * dac];
                // E_ij (c×b) ∘ E_kl (b×a) = δ_jk E_il
                for i in 0..c {
                    for j in 0..b {
                        let f = i * b + j;
                        for l in 0..a {
                            let g = j * a + l;
                            t[(f * dab + g) * dac + i * a + l] = 1;
                        }
                    }
                }
                comp.push(t);
            }
        }
    }
    let ids = (0..objs)
        .map(|a| {
            let mut v = vec![0u32; a * a];
            for i in 0..a {
                v[i * a + i] = 1;
            }
            v
        })
        .collect();
    LinCat::new(p, labels, dims, comp, ids)
}
