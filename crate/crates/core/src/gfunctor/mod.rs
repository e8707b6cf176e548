//! Lax and weak G-functors: the pentagon and identity axioms, composition,
//! G-natural transformations, adjunctions with mates, and descent to
//! equivariant categories.

mod adjunction;
mod descent;
pub mod samples;

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Limits, Result, Violation};
use crate::gaction::GAction;
use crate::lincat::{compose_functors, LinFunctor, Morphism, NatTransf};

pub use adjunction::{descend_adjunction, g_adjoint_check, mate, AdjunctionData};
pub use descent::{
    compare_descents, compose_descended, descend_functor, descend_nat, DescendedFunctor, DescentComparison,
};

/// Orientation of the comparison maps.
///
/// `Right`: `δ_g: ρ_g F ⇒ F ρ_g`. `Left`: `δ_g: F ρ_g ⇒ ρ_g F`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Right,
    Left,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Right => "right",
            Side::Left => "left",
        })
    }
}

/// A functor between categories with G-actions, with comparison maps `δ_g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaxGFunctor {
    side: Side,
    src: Arc<GAction>,
    tgt: Arc<GAction>,
    functor: Arc<LinFunctor>,
    /// `delta[g][x]` is the component of `δ_g` at `x`.
    delta: Vec<Vec<Morphism>>,
}

/// The three conditions of the weakness lemma, evaluated independently.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WeaknessReport {
    pub delta1_iso: bool,
    pub identity_axiom: bool,
    pub all_iso: bool,
}

impl WeaknessReport {
    pub fn is_weak(&self) -> bool {
        self.delta1_iso && self.identity_axiom && self.all_iso
    }
}

impl LaxGFunctor {
    /// Assemble lax data, checking shapes only.
    pub fn new(
        side: Side,
        src: Arc<GAction>,
        tgt: Arc<GAction>,
        functor: Arc<LinFunctor>,
        delta: Vec<Vec<Morphism>>,
    ) -> Result<Self> {
        if src.group() != tgt.group() && **src.group() != **tgt.group() {
            return Err(Error::ShapeMismatch("actions are over different groups".into()));
        }
        if **functor.source() != **src.cat() || **functor.target() != **tgt.cat() {
            return Err(Error::ShapeMismatch("functor does not match the acted-on categories".into()));
        }
        let order = src.group().order();
        if delta.len() != order {
            return Err(Error::ShapeMismatch(format!("expected {order} comparison maps")));
        }
        let p = src.modulus();
        let mut l = LaxGFunctor { side, src, tgt, functor, delta: Vec::new() };
        for (g, comps) in delta.iter().enumerate() {
            if comps.len() != l.src.cat().len() {
                return Err(Error::ShapeMismatch(format!("delta_{g} needs one component per object")));
            }
            for (x, v) in comps.iter().enumerate() {
                let (a, b) = l.delta_ends(g, x);
                if v.len() != l.tgt.cat().dim(a, b) {
                    return Err(Error::ShapeMismatch(format!("delta_{g} at {x} has wrong length")));
                }
            }
        }
        l.delta = delta.into_iter().map(|c| c.into_iter().map(|v| v.into_iter().map(|a| a % p).collect()).collect()).collect();
        Ok(l)
    }

    /// The identity functor with `δ = id`.
    pub fn identity(action: Arc<GAction>) -> Self {
        let functor = Arc::new(LinFunctor::identity(action.cat().clone()));
        let delta = action
            .group()
            .elements()
            .map(|g| action.cat().objects().map(|x| action.cat().identity(action.act(g, x)).to_vec()).collect())
            .collect();
        LaxGFunctor { side: Side::Right, src: action.clone(), tgt: action, functor, delta }
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn source_action(&self) -> &Arc<GAction> {
        &self.src
    }

    pub fn target_action(&self) -> &Arc<GAction> {
        &self.tgt
    }

    pub fn functor(&self) -> &Arc<LinFunctor> {
        &self.functor
    }

    pub fn delta(&self, g: usize, x: usize) -> &[u32] {
        &self.delta[g][x]
    }

    pub fn deltas(&self) -> &[Vec<Morphism>] {
        &self.delta
    }

    fn f(&self, x: usize) -> usize {
        self.functor.obj(x)
    }

    /// Source and target objects of `δ_g(x)` in D.
    pub fn delta_ends(&self, g: usize, x: usize) -> (usize, usize) {
        let a = self.tgt.act(g, self.f(x));
        let b = self.f(self.src.act(g, x));
        match self.side {
            Side::Right => (a, b),
            Side::Left => (b, a),
        }
    }

    /// `δ_g` as a natural transformation between the composite functors.
    pub fn delta_nat(&self, g: usize) -> Result<NatTransf> {
        let rho_f = Arc::new(compose_functors(self.tgt.rho(g), &self.functor)?);
        let f_rho = Arc::new(compose_functors(&self.functor, self.src.rho(g))?);
        let (s, t) = match self.side {
            Side::Right => (rho_f, f_rho),
            Side::Left => (f_rho, rho_f),
        };
        NatTransf::new(s, t, self.delta[g].clone())
    }

    /// Naturality of every `δ_g`, then the pentagon axiom.
    pub fn check(&self) -> Result<()> {
        for g in self.src.group().elements() {
            self.delta_nat(g)?.validate()?;
        }
        self.pentagon_check()
    }

    /// The pentagon axiom for every pair `(g, h)` and object, first failure reported.
    pub fn pentagon_check(&self) -> Result<()> {
        let grp = self.src.group();
        for g in grp.elements() {
            for h in grp.elements() {
                for c in self.src.cat().objects() {
                    if !self.pentagon_at(g, h, c) {
                        return Err(Violation::Pentagon { g, h, object: c }.into());
                    }
                }
            }
        }
        Ok(())
    }

    fn pentagon_at(&self, g: usize, h: usize, c: usize) -> bool {
        let (cs, cd) = (&*self.src, &*self.tgt);
        let d = cd.cat();
        let gh = cs.group().mul(g, h);
        let fc = self.f(c);
        let ch = cs.act(h, c);
        let fch = self.f(ch);
        let t = cs.act(gh, c);
        let ft = self.f(t);
        let fgch = self.f(cs.act(g, ch));
        let phi_c = self.functor.apply(cs.act(g, ch), t, cs.phi_at(g, h, c));
        let (hfc, ghfc) = (cd.act(h, fc), cd.act(g, cd.act(h, fc)));
        let gfch = cd.act(g, fch);
        let mfc = cd.act(gh, fc);
        match self.side {
            Side::Right => {
                // δ_{gh}(c) ∘ φ_{g,h}(Fc) = F(φ_{g,h}(c)) ∘ δ_g(ρ_h c) ∘ ρ_g(δ_h(c))
                let lhs = d.compose(ghfc, mfc, ft, self.delta(gh, c), cd.phi_at(g, h, fc));
                let s1 = cd.act_mor(g, hfc, fch, self.delta(h, c));
                let rhs = d.compose_path(&[ghfc, gfch, fgch, ft], &[&s1, self.delta(g, ch), &phi_c]);
                lhs == rhs
            }
            Side::Left => {
                // φ_{g,h}(Fc) ∘ ρ_g(δ_h(c)) ∘ δ_g(ρ_h c) = δ_{gh}(c) ∘ F(φ_{g,h}(c))
                let s2 = cd.act_mor(g, fch, hfc, self.delta(h, c));
                let lhs = d.compose_path(&[fgch, gfch, ghfc, mfc], &[self.delta(g, ch), &s2, cd.phi_at(g, h, fc)]);
                let rhs = d.compose(fgch, ft, mfc, self.delta(gh, c), &phi_c);
                lhs == rhs
            }
        }
    }

    /// The unit isomorphisms `φ₁` of both actions.
    fn units(&self) -> Result<(NatTransf, NatTransf)> {
        Ok((self.src.derive_phi1()?, self.tgt.derive_phi1()?))
    }

    /// The identity element axiom, first failing object reported.
    pub fn identity_axiom_check(&self) -> Result<()> {
        let (u_c, u_d) = self.units()?;
        let d = self.tgt.cat();
        let e = self.src.group().identity();
        for c in self.src.cat().objects() {
            let fc = self.f(c);
            let c1 = self.src.act(e, c);
            let f_phi = self.functor.apply(c1, c, u_c.component(c));
            let ok = match self.side {
                // F(φ₁(c)) ∘ δ₁(c) = φ₁(Fc)
                Side::Right => d.compose(self.tgt.act(e, fc), self.f(c1), fc, &f_phi, self.delta(e, c)) == u_d.component(fc),
                // φ₁(Fc) ∘ δ₁(c) = F(φ₁(c))
                Side::Left => d.compose(self.f(c1), self.tgt.act(e, fc), fc, u_d.component(fc), self.delta(e, c)) == f_phi,
            };
            if !ok {
                return Err(Violation::IdentityAxiom { object: c }.into());
            }
        }
        Ok(())
    }

    fn delta_iso(&self, g: usize) -> bool {
        self.src.cat().objects().all(|x| {
            let (a, b) = self.delta_ends(g, x);
            self.tgt.cat().is_iso(a, b, self.delta(g, x))
        })
    }

    /// The endomorphism `ε` of `F` built from `δ₁` and the unit isomorphisms.
    ///
    /// Right: `F φ₁ ∘ δ₁ ∘ (φ₁ F)⁻¹`. Left: `φ₁ F ∘ δ₁ ∘ (F φ₁)⁻¹`.
    pub fn epsilon(&self) -> Result<Vec<Morphism>> {
        let (u_c, u_d) = self.units()?;
        let d = self.tgt.cat();
        let e = self.src.group().identity();
        let mut out = Vec::new();
        for c in self.src.cat().objects() {
            let fc = self.f(c);
            let c1 = self.src.act(e, c);
            let (fc1, d1) = (self.f(c1), self.tgt.act(e, fc));
            let f_phi = self.functor.apply(c1, c, u_c.component(c));
            let eps = match self.side {
                Side::Right => {
                    let inv = d.inverse(d1, fc, u_d.component(fc)).ok_or_else(|| Error::NotSolvable("phi_1 not invertible".into()))?;
                    d.compose_path(&[fc, d1, fc1, fc], &[&inv, self.delta(e, c), &f_phi])
                }
                Side::Left => {
                    let inv = d.inverse(fc1, fc, &f_phi).ok_or_else(|| Error::NotSolvable("F(phi_1) not invertible".into()))?;
                    d.compose_path(&[fc, fc1, d1, fc], &[&inv, self.delta(e, c), u_d.component(fc)])
                }
            };
            out.push(eps);
        }
        Ok(out)
    }

    /// Evaluate the weakness lemma's three conditions and insist that they agree.
    ///
    /// When `δ₁` is invertible, also checks that `ε` is idempotent and equal to the identity.
    pub fn weakness_criteria(&self) -> Result<WeaknessReport> {
        let e = self.src.group().identity();
        let report = WeaknessReport {
            delta1_iso: self.delta_iso(e),
            identity_axiom: match self.identity_axiom_check() {
                Ok(()) => true,
                Err(err) if err.is_violation() => false,
                Err(err) => return Err(err),
            },
            all_iso: self.src.group().elements().all(|g| self.delta_iso(g)),
        };
        if report.delta1_iso {
            let eps = self.epsilon()?;
            let d = self.tgt.cat();
            for c in self.src.cat().objects() {
                let fc = self.f(c);
                if d.compose(fc, fc, fc, &eps[c], &eps[c]) != eps[c] {
                    return Err(Error::InconsistentLemma(format!("epsilon is not idempotent at object {c}")));
                }
                if eps[c] != d.identity(fc) {
                    return Err(Error::InconsistentLemma(format!("epsilon is not the identity at object {c}")));
                }
            }
        }
        if !(report.delta1_iso == report.identity_axiom && report.identity_axiom == report.all_iso) {
            return Err(Error::InconsistentLemma(format!("{report:?}")));
        }
        Ok(report)
    }

    pub fn is_weak(&self) -> bool {
        self.src.group().elements().all(|g| self.delta_iso(g))
    }

    /// Invert every `δ_g`, switching sides. Requires a weak functor.
    pub fn invert(&self) -> Result<LaxGFunctor> {
        let d = self.tgt.cat();
        let mut delta = Vec::with_capacity(self.delta.len());
        for g in self.src.group().elements() {
            let mut comps = Vec::new();
            for x in self.src.cat().objects() {
                let (a, b) = self.delta_ends(g, x);
                comps.push(
                    d.inverse(a, b, self.delta(g, x))
                        .ok_or_else(|| Error::NotSolvable(format!("delta_{g} is not invertible at object {x}")))?,
                );
            }
            delta.push(comps);
        }
        let side = match self.side {
            Side::Right => Side::Left,
            Side::Left => Side::Right,
        };
        Ok(LaxGFunctor { side, src: self.src.clone(), tgt: self.tgt.clone(), functor: self.functor.clone(), delta })
    }

    /// The same functor with right-lax orientation (inverting `δ` if necessary).
    pub fn to_right(&self) -> Result<LaxGFunctor> {
        match self.side {
            Side::Right => Ok(self.clone()),
            Side::Left => self.invert(),
        }
    }

    /// Fully faithful and essentially surjective underlying functor.
    pub fn weak_equivalence_check(&self, limits: &Limits) -> Result<()> {
        self.functor.fully_faithful_check()?;
        let d = self.tgt.cat();
        for y in d.objects() {
            let mut hit = false;
            for x in self.src.cat().objects() {
                if crate::lincat::find_iso_limited(d, self.f(x), y, limits)?.is_some() {
                    hit = true;
                    break;
                }
            }
            if !hit {
                return Err(Violation::NotEssentiallySurjective { object: y }.into());
            }
        }
        Ok(())
    }

    /// Replace one component of `δ_g` (used to build corrupted data).
    pub fn with_delta_component(&self, g: usize, x: usize, value: Morphism) -> Result<Self> {
        let mut delta = self.delta.clone();
        delta[g][x] = value;
        LaxGFunctor::new(self.side, self.src.clone(), self.tgt.clone(), self.functor.clone(), delta)
    }
}

/// Composite `L2 ∘ L1` of lax functors on the same side.
///
/// Right: `δ_g = L2(δ¹_g) ∘ δ²_g L1`. Left: `δ_g = δ²_g L1 ∘ L2(δ¹_g)`.
pub fn compose_lax(l1: &LaxGFunctor, l2: &LaxGFunctor) -> Result<LaxGFunctor> {
    if l1.side != l2.side {
        return Err(Error::SideMismatch);
    }
    if *l1.tgt != *l2.src {
        return Err(Error::ShapeMismatch("middle actions differ".into()));
    }
    let functor = Arc::new(compose_functors(&l2.functor, &l1.functor)?);
    let e = l2.tgt.cat();
    let mut delta = Vec::new();
    for g in l1.src.group().elements() {
        let mut comps = Vec::new();
        for c in l1.src.cat().objects() {
            let phi_c = l1.f(c);
            let (a1, b1) = l1.delta_ends(g, c);
            let mapped = l2.functor.apply(a1, b1, l1.delta(g, c));
            let (a2, b2) = l2.delta_ends(g, phi_c);
            let comp = match l1.side {
                // ρ_g ΨΦc → Ψρ_gΦc → ΨΦρ_g c
                Side::Right => e.compose(a2, b2, l2.f(b1), &mapped, l2.delta(g, phi_c)),
                // ΨΦρ_g c → Ψρ_gΦc → ρ_gΨΦc
                Side::Left => e.compose(l2.f(a1), a2, b2, l2.delta(g, phi_c), &mapped),
            };
            comps.push(comp);
        }
        delta.push(comps);
    }
    LaxGFunctor::new(l1.side, l1.src.clone(), l2.tgt.clone(), functor, delta)
}

/// Checks the δ-square for `μ: F₁ ⇒ F₂` given by components `μ_x: F₁x → F₂x`.
///
/// Right: `δ²_g ∘ ρ_g μ = μ ρ_g ∘ δ¹_g`. Left: `δ²_g ∘ μ ρ_g = ρ_g μ ∘ δ¹_g`.
pub fn g_natural_check(mu: &[Morphism], l1: &LaxGFunctor, l2: &LaxGFunctor) -> Result<()> {
    if l1.side != l2.side {
        return Err(Error::SideMismatch);
    }
    if *l1.src != *l2.src || *l1.tgt != *l2.tgt {
        return Err(Error::ShapeMismatch("lax functors act between different actions".into()));
    }
    let (cs, cd) = (&*l1.src, &*l1.tgt);
    let d = cd.cat();
    if mu.len() != cs.cat().len() {
        return Err(Error::ShapeMismatch("one component per object required".into()));
    }
    for g in cs.group().elements() {
        for c in cs.cat().objects() {
            let gc = cs.act(g, c);
            let (f1c, f2c) = (l1.f(c), l2.f(c));
            let (f1gc, f2gc) = (l1.f(gc), l2.f(gc));
            let rho_mu = cd.act_mor(g, f1c, f2c, &mu[c]);
            let (g1, g2) = (cd.act(g, f1c), cd.act(g, f2c));
            let ok = match l1.side {
                Side::Right => {
                    d.compose(g1, g2, f2gc, l2.delta(g, c), &rho_mu) == d.compose(g1, f1gc, f2gc, &mu[gc], l1.delta(g, c))
                }
                Side::Left => {
                    d.compose(f1gc, f2gc, g2, l2.delta(g, c), &mu[gc]) == d.compose(f1gc, g1, g2, &rho_mu, l1.delta(g, c))
                }
            };
            if !ok {
                return Err(Violation::GNaturality { g, object: c }.into());
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::{CyclicCoeff, TwoCocycle};
    use crate::gaction::action_from_cocycle;
    use crate::groups::{make_group, FinGroup, GroupKind};
    use crate::lincat::vect_cat;

    fn group(s: &str) -> Arc<FinGroup> {
        Arc::new(make_group(&s.parse::<GroupKind>().unwrap()).unwrap())
    }

    fn trivial_z2() -> Arc<GAction> {
        Arc::new(GAction::trivial(group("cyclic:2"), Arc::new(vect_cat(3, 2).unwrap())))
    }

    fn scalar_delta(a: &Arc<GAction>, scalars: &[u32]) -> LaxGFunctor {
        let id = LaxGFunctor::identity(a.clone());
        let p = a.modulus();
        let delta = scalars
            .iter()
            .map(|&s| a.cat().objects().map(|x| crate::lincat::scale(p, a.cat().identity(x), s)).collect())
            .collect();
        LaxGFunctor::new(Side::Right, a.clone(), a.clone(), id.functor().clone(), delta).unwrap()
    }

    #[test]
    fn identity_is_weak() {
        let l = LaxGFunctor::identity(trivial_z2());
        l.check().unwrap();
        let r = l.weakness_criteria().unwrap();
        assert!(r.is_weak());
        l.weak_equivalence_check(&Limits::default()).unwrap();
    }

    #[test]
    fn zero_delta_passes_pentagon_but_is_not_weak() {
        let l = scalar_delta(&trivial_z2(), &[0, 0]);
        l.pentagon_check().unwrap();
        let r = l.weakness_criteria().unwrap();
        assert_eq!(r, WeaknessReport { delta1_iso: false, identity_axiom: false, all_iso: false });
    }

    #[test]
    fn sign_character_is_weak_and_not_g_natural_to_identity() {
        let a = trivial_z2();
        let sign = scalar_delta(&a, &[1, 2]);
        sign.check().unwrap();
        assert!(sign.weakness_criteria().unwrap().is_weak());
        let id = LaxGFunctor::identity(a.clone());
        let mu: Vec<Morphism> = a.cat().objects().map(|x| a.cat().identity(x).to_vec()).collect();
        g_natural_check(&mu, &id, &id).unwrap();
        assert!(matches!(
            g_natural_check(&mu, &id, &sign),
            Err(Error::Violation(Violation::GNaturality { g: 1, object: 1 }))
        ));
        // a non-multiplicative scalar family breaks the pentagon
        let bad = scalar_delta(&a, &[1, 1]).with_delta_component(1, 2, vec![2, 0, 0, 2]).unwrap();
        assert!(bad.check().is_err());
    }

    #[test]
    fn scalar_deltas_multiply_under_composition() {
        let g = group("cyclic:2");
        let coeff = CyclicCoeff::units_of(5).unwrap();
        let phi = TwoCocycle::new(g, coeff, vec![0, 0, 0, 2]).unwrap();
        let a = Arc::new(action_from_cocycle(5, 2, &phi).unwrap());
        let l1 = scalar_delta(&a, &[1, 4]);
        let l2 = scalar_delta(&a, &[1, 4]);
        l1.check().unwrap();
        let c = compose_lax(&l1, &l2).unwrap();
        c.check().unwrap();
        assert_eq!(c.delta(1, 1), &[1][..]);
        let left = l1.invert().unwrap();
        left.check().unwrap();
        assert!(matches!(compose_lax(&l1, &left), Err(Error::SideMismatch)));
    }
}
