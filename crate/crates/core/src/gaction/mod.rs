//! Group actions on linear categories: the data `(ρ, φ)`, the associativity
//! axiom, the derived unit isomorphism `φ₁`, and equivariantization.

mod equivariant;

use std::sync::Arc;

use crate::cohomology::TwoCocycle;
use crate::error::{Error, Result, Violation};
use crate::exactalg::fp;
use crate::groups::FinGroup;
use crate::lincat::{compose_functors, vect_cat, LinCat, LinFunctor, Morphism, NatTransf};

pub use equivariant::{
    equiv_hom_basis, equivariantize, is_indecomposable, twisted_rep_classify, ClassTable, EquivCat,
    EquivariantObject, TwistedReport, Warning,
};

/// An action of a finite group on a linear category.
///
/// `phi(g, h)` is a natural isomorphism `ρ_g ρ_h ⇒ ρ_{gh}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GAction {
    group: Arc<FinGroup>,
    cat: Arc<LinCat>,
    rho: Vec<Arc<LinFunctor>>,
    phi: Vec<NatTransf>,
}

impl GAction {
    /// Assemble action data from functors and the components of each `φ_{g,h}`.
    ///
    /// Only shapes are checked; use [`GAction::check`] for the axioms.
    pub fn new(
        group: Arc<FinGroup>,
        cat: Arc<LinCat>,
        rho: Vec<Arc<LinFunctor>>,
        phi_components: Vec<Vec<Morphism>>,
    ) -> Result<Self> {
        let n = group.order();
        if rho.len() != n {
            return Err(Error::ShapeMismatch(format!("expected {n} functors, got {}", rho.len())));
        }
        if phi_components.len() != n * n {
            return Err(Error::ShapeMismatch(format!("expected {} phi entries", n * n)));
        }
        for r in &rho {
            if **r.source() != *cat || **r.target() != *cat {
                return Err(Error::ShapeMismatch("rho_g must be an endofunctor of C".into()));
            }
        }
        let mut phi = Vec::with_capacity(n * n);
        for (k, comps) in phi_components.into_iter().enumerate() {
            let (g, h) = (k / n, k % n);
            let src = Arc::new(compose_functors(&rho[g], &rho[h])?);
            phi.push(NatTransf::new(src, rho[group.mul(g, h)].clone(), comps)?);
        }
        Ok(GAction { group, cat, rho, phi })
    }

    /// Every `ρ_g` the identity and every `φ_{g,h}` the identity.
    pub fn trivial(group: Arc<FinGroup>, cat: Arc<LinCat>) -> Self {
        let n = group.order();
        let id = Arc::new(LinFunctor::identity(cat.clone()));
        let phi = (0..n * n).map(|_| NatTransf::identity(id.clone())).collect();
        GAction { group, cat, rho: vec![id; n], phi }
    }

    /// Identity functors with `φ_{g,h} = grid[g·|G| + h] · id`, without any checks.
    pub fn from_scalar_grid(group: Arc<FinGroup>, cat: Arc<LinCat>, grid: &[u32]) -> Result<Self> {
        let n = group.order();
        if grid.len() != n * n {
            return Err(Error::ShapeMismatch(format!("scalar grid needs {} entries", n * n)));
        }
        let id = Arc::new(LinFunctor::identity(cat.clone()));
        let phi = grid.iter().map(|&c| NatTransf::scalar(id.clone(), c)).collect();
        Ok(GAction { group, cat, rho: vec![id; n], phi })
    }

    pub fn group(&self) -> &Arc<FinGroup> {
        &self.group
    }

    pub fn cat(&self) -> &Arc<LinCat> {
        &self.cat
    }

    pub fn modulus(&self) -> u32 {
        self.cat.modulus()
    }

    pub fn rho(&self, g: usize) -> &Arc<LinFunctor> {
        &self.rho[g]
    }

    pub fn phi(&self, g: usize, h: usize) -> &NatTransf {
        &self.phi[g * self.group.order() + h]
    }

    /// `ρ_g(x)`.
    pub fn act(&self, g: usize, x: usize) -> usize {
        self.rho[g].obj(x)
    }

    /// `ρ_g(f)` for `f: x → y`.
    pub fn act_mor(&self, g: usize, x: usize, y: usize, f: &[u32]) -> Morphism {
        self.rho[g].apply(x, y, f)
    }

    /// `φ_{g,h}(x): ρ_g ρ_h x → ρ_{gh} x`.
    pub fn phi_at(&self, g: usize, h: usize, x: usize) -> &[u32] {
        self.phi(g, h).component(x)
    }

    /// Checks that each `ρ_g` is an equivalence, each `φ_{g,h}` a natural
    /// isomorphism, and the associativity square, reporting the first failure.
    pub fn check(&self) -> Result<()> {
        for (g, r) in self.rho.iter().enumerate() {
            if let Err(e) = r.validate().and_then(|_| r.equivalence_check()) {
                return Err(Violation::NotEquivalence { element: g, reason: e.to_string() }.into());
            }
        }
        let n = self.group.order();
        for g in 0..n {
            for h in 0..n {
                let t = self.phi(g, h);
                t.validate()?;
                if let Some(x) = t.first_non_iso() {
                    return Err(Violation::NotIsomorphism { g, h, object: x }.into());
                }
            }
        }
        for g in 0..n {
            for h in 0..n {
                for k in 0..n {
                    if let Some(x) = self.cat.objects().find(|&x| !self.square_commutes(g, h, k, x)) {
                        return Err(Violation::ActionAssociativity { g, h, k, object: x }.into());
                    }
                }
            }
        }
        Ok(())
    }

    /// `φ_{g,hk} ∘ ρ_g φ_{h,k} = φ_{gh,k} ∘ φ_{g,h} ρ_k` at `x`.
    fn square_commutes(&self, g: usize, h: usize, k: usize, x: usize) -> bool {
        let c = &*self.cat;
        let grp = &*self.group;
        let (hk, gh) = (grp.mul(h, k), grp.mul(g, h));
        let a = self.act(k, x);
        let b = self.act(h, a);
        let top = self.act(g, b);
        let target = self.act(grp.mul(gh, k), x);
        let e = self.act(hk, x);
        let lhs = c.compose(
            top,
            self.act(g, e),
            target,
            self.phi_at(g, hk, x),
            &self.act_mor(g, b, e, self.phi_at(h, k, x)),
        );
        let f = self.act(gh, a);
        let rhs = c.compose(top, f, target, self.phi_at(gh, k, x), self.phi_at(g, h, a));
        lhs == rhs
    }

    /// The unit isomorphism `φ₁: ρ₁ ⇒ Id`, determined by `φ_{1,1} = ρ₁ φ₁`.
    ///
    /// Also verifies `φ_{g,1} = ρ_g φ₁` and `φ_{1,g} = φ₁ ρ_g`.
    pub fn derive_phi1(&self) -> Result<NatTransf> {
        let c = &*self.cat;
        let e = self.group.identity();
        let r1 = &self.rho[e];
        let mut comps = Vec::with_capacity(c.len());
        for x in c.objects() {
            let y = r1.obj(x);
            // solve ρ₁(u) = φ_{1,1}(x) for u: ρ₁x → x
            let m = r1.hom_matrix(y, x);
            let sol = m
                .solve(self.phi_at(e, e, x))
                .filter(|s| s.kernel_basis.is_empty())
                .ok_or_else(|| Error::NotSolvable(format!("rho_1 is not bijective on Hom({y},{x})")))?;
            comps.push(sol.particular);
        }
        let id = Arc::new(LinFunctor::identity(self.cat.clone()));
        let phi1 = NatTransf::new(r1.clone(), id, comps)?;
        for g in self.group.elements() {
            for x in c.objects() {
                let y = r1.obj(x);
                let lhs = self.act_mor(g, y, x, phi1.component(x));
                if self.phi_at(g, e, x) != lhs.as_slice() {
                    return Err(Error::NotSolvable(format!("phi_(g,1) != rho_g phi_1 at g = {g}, object {x}")));
                }
                if self.phi_at(e, g, x) != phi1.component(self.act(g, x)) {
                    return Err(Error::NotSolvable(format!("phi_(1,g) != phi_1 rho_g at g = {g}, object {x}")));
                }
            }
        }
        Ok(phi1)
    }

    /// `φ₁` is the identity (the "descent datum" convention).
    pub fn is_normalized(&self) -> Result<bool> {
        Ok(self.derive_phi1()?.is_identity())
    }

    /// Every `ρ_g ρ_h` equals `ρ_{gh}` and every `φ_{g,h}` is the identity.
    pub fn strictness_check(&self) -> Result<()> {
        let n = self.group.order();
        for g in 0..n {
            for h in 0..n {
                let t = self.phi(g, h);
                if **t.source() != **t.target() {
                    return Err(Violation::NotStrict { g, h, reason: "rho_g rho_h != rho_gh".into() }.into());
                }
                if !t.is_identity() {
                    return Err(Violation::NotStrict { g, h, reason: "phi_(g,h) is not the identity".into() }.into());
                }
            }
        }
        Ok(())
    }

    pub fn is_strict(&self) -> bool {
        self.strictness_check().is_ok()
    }

    /// The same action with one `φ` component replaced (used to build corrupted data).
    pub fn with_phi_component(&self, g: usize, h: usize, x: usize, value: Morphism) -> Result<Self> {
        let n = self.group.order();
        let mut comps: Vec<Vec<Morphism>> = self.phi.iter().map(|t| t.components().to_vec()).collect();
        comps[g * n + h][x] = value;
        GAction::new(self.group.clone(), self.cat.clone(), self.rho.clone(), comps)
    }
}

/// The action on `vect_cat(p, N)` with identity functors and `φ_{g,h} = r^{φ(g,h)} · id`.
pub fn action_from_cocycle(p: u32, n: usize, cocycle: &TwoCocycle) -> Result<GAction> {
    let link = cocycle
        .coeff()
        .field_link()
        .ok_or_else(|| Error::Input("cocycle coefficients are not linked to a field".into()))?;
    if link.p != p {
        return Err(Error::ModulusMismatch(p, link.p));
    }
    crate::cohomology::cocycle_check(cocycle.group(), cocycle.coeff(), cocycle.values())
        .map_err(Violation::from)?;
    let grid: Vec<u32> = cocycle.values().iter().map(|&a| fp::pow(link.root, a, p)).collect();
    let cat = Arc::new(vect_cat(p, n)?);
    GAction::from_scalar_grid(cocycle.group().clone(), cat, &grid)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::{cocycle_check, CyclicCoeff};
    use crate::groups::{make_group, GroupKind};

    fn group(s: &str) -> Arc<FinGroup> {
        Arc::new(make_group(&s.parse::<GroupKind>().unwrap()).unwrap())
    }

    #[test]
    fn trivial_action_is_valid_and_strict() {
        let g = group("cyclic:3");
        let a = GAction::trivial(g, Arc::new(vect_cat(5, 2).unwrap()));
        a.check().unwrap();
        assert!(a.is_strict());
        assert!(a.derive_phi1().unwrap().is_identity());
    }

    #[test]
    fn cocycle_value_two_gives_minus_one() {
        let g = group("cyclic:2");
        let coeff = CyclicCoeff::units_of(5).unwrap();
        let phi = TwoCocycle::new(g, coeff, vec![0, 0, 0, 2]).unwrap();
        let a = action_from_cocycle(5, 1, &phi).unwrap();
        a.check().unwrap();
        assert_eq!(a.phi_at(1, 1, 1), &[4][..]);
        assert!(!a.is_strict());
    }

    #[test]
    fn non_cocycle_grid_fails_at_the_cocycle_triple() {
        let g = group("cyclic:3");
        let coeff = CyclicCoeff::units_of(7).unwrap();
        let link = coeff.field_link().unwrap();
        let mut values = vec![0u64; 9];
        values[3 + 1] = 1;
        let expected = cocycle_check(&g, &coeff, &values).unwrap_err();
        let grid: Vec<u32> = values.iter().map(|&a| fp::pow(link.root, a, 7)).collect();
        let a = GAction::from_scalar_grid(g, Arc::new(vect_cat(7, 1).unwrap()), &grid).unwrap();
        match a.check() {
            Err(Error::Violation(Violation::ActionAssociativity { g, h, k, .. })) => {
                assert_eq!((g, h, k), (expected.0, expected.1, expected.2));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn unnormalized_cocycle_gives_scalar_phi1() {
        // constant cocycle φ ≡ c is a coboundary with φ(1,1) = c
        let g = group("cyclic:2");
        let coeff = CyclicCoeff::units_of(5).unwrap();
        let phi = TwoCocycle::new(g, coeff, vec![1; 4]).unwrap();
        let a = action_from_cocycle(5, 2, &phi).unwrap();
        a.check().unwrap();
        let phi1 = a.derive_phi1().unwrap();
        // r = 2, so φ₁ = 2 · id
        assert_eq!(phi1.component(1), &[2][..]);
        assert_eq!(phi1.component(2), &[2, 0, 0, 2][..]);
        assert!(!a.is_normalized().unwrap());
    }

    #[test]
    fn non_invertible_phi_is_reported() {
        let g = group("cyclic:2");
        let a = GAction::trivial(g, Arc::new(vect_cat(3, 1).unwrap()));
        let bad = a.with_phi_component(1, 1, 1, vec![0]).unwrap();
        assert!(matches!(
            bad.check(),
            Err(Error::Violation(Violation::NotIsomorphism { g: 1, h: 1, object: 1 }))
        ));
    }
}
