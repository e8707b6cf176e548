//! Parameterized families of lax G-functors and adjunctions between cocycle
//! actions on `vect_cat`, used by the tests, examples and acceptance suite.

use std::sync::Arc;

use super::{AdjunctionData, LaxGFunctor, Side};
use crate::cohomology::{coboundary, OneCochain, TwoCocycle};
use crate::error::{Error, Result};
use crate::exactalg::{fp, FpMatrix, LexVectors};
use crate::gaction::{action_from_cocycle, GAction};
use crate::groups::FinGroup;
use crate::lincat::{vect_cat, LinCat, LinFunctor};

/// All homomorphisms `G → F_p^*`, in lexicographic order of their values on the generators.
pub fn characters(group: &FinGroup, p: u32) -> Vec<Vec<u32>> {
    let gens = group.generating_sequence();
    let mut out = Vec::new();
    for v in LexVectors::new(p - 1, gens.len()) {
        let vals: Vec<u32> = v.iter().map(|&a| a + 1).collect();
        if let Some(chi) = extend_character(group, p, &gens, &vals) {
            out.push(chi);
        }
    }
    out
}

fn extend_character(group: &FinGroup, p: u32, gens: &[usize], vals: &[u32]) -> Option<Vec<u32>> {
    let mut chi = vec![0u32; group.order()];
    chi[group.identity()] = 1;
    for (&g, &v) in gens.iter().zip(vals) {
        chi[g] = v;
    }
    loop {
        let mut changed = false;
        for a in group.elements() {
            for b in group.elements() {
                if chi[a] == 0 || chi[b] == 0 {
                    continue;
                }
                let v = fp::mul(chi[a], chi[b], p);
                let ab = group.mul(a, b);
                if chi[ab] == 0 {
                    chi[ab] = v;
                    changed = true;
                } else if chi[ab] != v {
                    return None;
                }
            }
        }
        if !changed {
            return Some(chi);
        }
    }
}

/// The cocycle `φ + dβ`.
pub fn shifted(phi: &TwoCocycle, beta: &[u64]) -> Result<TwoCocycle> {
    let b = OneCochain::new(phi.group().clone(), *phi.coeff(), beta.to_vec())?;
    phi.add(&coboundary(&b))
}

/// Conjugation `f ↦ Q_b f Q_a⁻¹` on `vect_cat`, with one invertible matrix per object.
pub fn conjugation_functor(cat: Arc<LinCat>, mats: &[FpMatrix]) -> Result<LinFunctor> {
    let p = cat.modulus();
    let n = cat.len();
    if mats.len() != n || mats.iter().enumerate().any(|(a, m)| m.rows() != a || m.cols() != a) {
        return Err(Error::ShapeMismatch("one a×a matrix per object k^a required".into()));
    }
    let invs = mats
        .iter()
        .map(|m| m.inverse().ok_or_else(|| Error::NotSolvable("conjugating matrix is singular".into())))
        .collect::<Result<Vec<_>>>()?;
    let mut homs = Vec::with_capacity(n * n);
    for (a, inv) in invs.iter().enumerate() {
        for (b, mb) in mats.iter().enumerate() {
            let cols: Vec<Vec<u32>> = (0..a * b)
                .map(|k| {
                    let mut e = FpMatrix::zeros(p, b, a);
                    e.set(k / a, k % a, 1);
                    mb.mul(&e).and_then(|m| m.mul(inv)).expect("shapes agree").into_data()
                })
                .collect();
            homs.push(FpMatrix::from_columns(p, a * b, &cols));
        }
    }
    LinFunctor::new(cat.clone(), cat, (0..n).collect(), homs)
}

/// Parameters of the doubling family `vect_cat(p,1) → vect_cat(p,2)`, `k ↦ k²`.
///
/// `δ_g = r^{±β(g)} · Q diag(e₁χ₁(g), e₂χ₂(g)) Q⁻¹` on `k`, sign `+` for right and `−` for left,
/// where `eᵢ ∈ {0, 1}`. The target action uses the cocycle `φ + dβ`. The functor is weak
/// exactly when `e₁ = e₂ = 1`.
#[derive(Debug, Clone)]
pub struct Doubling {
    pub side: Side,
    pub beta: Vec<u64>,
    pub chi: [Vec<u32>; 2],
    pub q: FpMatrix,
    pub keep: [bool; 2],
}

pub fn doubling_lax(phi: &TwoCocycle, params: &Doubling) -> Result<LaxGFunctor> {
    let link = phi
        .coeff()
        .field_link()
        .ok_or_else(|| Error::Input("cocycle coefficients are not linked to a field".into()))?;
    let p = link.p;
    let src = Arc::new(action_from_cocycle(p, 1, phi)?);
    let tgt = Arc::new(action_from_cocycle(p, 2, &shifted(phi, &params.beta)?)?);
    let (c, d) = (src.cat().clone(), tgt.cat().clone());
    let homs = vec![
        FpMatrix::zeros(p, 0, 0),
        FpMatrix::zeros(p, 0, 0),
        FpMatrix::zeros(p, 0, 0),
        FpMatrix::from_columns(p, 4, &[vec![1, 0, 0, 1]]),
    ];
    let functor = Arc::new(LinFunctor::new(c, d, vec![0, 2], homs)?);
    let qi = params.q.inverse().ok_or_else(|| Error::NotSolvable("Q is singular".into()))?;
    let m = p as u64 - 1;
    let mut delta = Vec::new();
    for g in phi.group().elements() {
        let exp = match params.side {
            Side::Right => params.beta[g] % m,
            Side::Left => (m - params.beta[g] % m) % m,
        };
        let s = fp::pow(link.root, exp, p);
        let mut diag = FpMatrix::zeros(p, 2, 2);
        for i in 0..2 {
            if params.keep[i] {
                diag.set(i, i, fp::mul(s, params.chi[i][g], p));
            }
        }
        let mat = params.q.mul(&diag)?.mul(&qi)?;
        delta.push(vec![Vec::new(), mat.into_data()]);
    }
    LaxGFunctor::new(params.side, src, tgt, functor, delta)
}

/// An adjoint equivalence between cocycle actions on `vect_cat(p, 2)`.
///
/// `R` conjugates by `Q` on `k²` (and by `s` on `k`), `L` by the inverses, unit `c · id`,
/// counit `c⁻¹ · id`. `R` carries the right lax structure `δ_g = r^{β(g)} · id` from `φ` to `φ + dβ`.
#[derive(Debug, Clone)]
pub struct ConjugateAdjunction {
    pub beta: Vec<u64>,
    pub q: FpMatrix,
    pub s: u32,
    pub c: u32,
}

pub fn conjugate_adjunction(phi: &TwoCocycle, params: &ConjugateAdjunction) -> Result<(LaxGFunctor, AdjunctionData)> {
    let link = phi
        .coeff()
        .field_link()
        .ok_or_else(|| Error::Input("cocycle coefficients are not linked to a field".into()))?;
    let p = link.p;
    let src = Arc::new(action_from_cocycle(p, 2, phi)?);
    let tgt = Arc::new(action_from_cocycle(p, 2, &shifted(phi, &params.beta)?)?);
    // both actions live on equal copies of vect_cat(p, 2)
    let cat = src.cat().clone();
    let id1 = FpMatrix::identity(p, 0);
    let s = FpMatrix::new(p, 1, 1, vec![params.s])?;
    let right = conjugation_functor(cat.clone(), &[id1.clone(), s.clone(), params.q.clone()])?;
    let s_inv = s.inverse().ok_or_else(|| Error::NotSolvable("s is zero".into()))?;
    let q_inv = params.q.inverse().ok_or_else(|| Error::NotSolvable("Q is singular".into()))?;
    let left = conjugation_functor(cat.clone(), &[id1, s_inv, q_inv])?;
    let c_inv = fp::inv(params.c, p).ok_or_else(|| Error::NotSolvable("unit scalar is zero".into()))?;
    let unit = cat.objects().map(|x| crate::lincat::scale(p, cat.identity(x), params.c)).collect();
    let counit = cat.objects().map(|x| crate::lincat::scale(p, cat.identity(x), c_inv)).collect();
    let right = Arc::new(right);
    let adj = AdjunctionData::new(right.clone(), Arc::new(left), unit, counit)?;
    let m = p as u64 - 1;
    let delta = phi
        .group()
        .elements()
        .map(|g| {
            let sc = fp::pow(link.root, params.beta[g] % m, p);
            cat.objects().map(|x| crate::lincat::scale(p, cat.identity(x), sc)).collect()
        })
        .collect();
    let lax = LaxGFunctor::new(Side::Right, src, tgt, right, delta)?;
    Ok((lax, adj))
}

/// Actions used by the bundled examples: the trivial action and one cocycle action per H² class.
pub fn bundled_cocycle_actions(group: Arc<FinGroup>, p: u32, n: usize) -> Result<Vec<(String, GAction)>> {
    let coeff = crate::cohomology::CyclicCoeff::units_of(p)?;
    let h2 = crate::cohomology::h2_group(group.clone(), coeff);
    let mut out = Vec::new();
    for class in h2.all_classes() {
        let phi = h2.representative(&class);
        out.push((format!("{} class {:?}", group.name(), class), action_from_cocycle(p, n, &phi)?));
    }
    Ok(out)
}

/// `vect_cat(p, n)` wrapped for sharing.
pub fn vect(p: u32, n: usize) -> Result<Arc<LinCat>> {
    Ok(Arc::new(vect_cat(p, n)?))
}
