//! Semiorthogonal pairs `(A, B)` with `Hom(B, A) = 0` and their descent to
//! equivariant categories.
//!
//! Only the parts of the argument that survive without triangles are
//! checked: orthogonality, the adjoint `p ⊣ i` and its descent via mates, and
//! the two perpendicular characterizations.

mod a2;

use std::sync::Arc;

pub use a2::{a2_sod, bundled_a2_sod, rep_a2_cat, swapped_a2_sod, A2Category, A2Object, MAX_A2_DIM};

use crate::error::{Error, Limits, Result, Violation};
use crate::exactalg::FpMatrix;
use crate::gaction::{equivariantize, EquivCat, GAction};
use crate::gfunctor::{descend_adjunction, mate, AdjunctionData, DescendedFunctor, LaxGFunctor, Side};
use crate::lincat::{find_iso_limited, iso_classes, LinCat, LinFunctor, Morphism};

/// A full subcategory, closed under isomorphism in the parent.
#[derive(Debug, Clone)]
pub struct FullSubcat {
    parent: Arc<LinCat>,
    members: Vec<usize>,
    cat: Arc<LinCat>,
    inclusion: Arc<LinFunctor>,
}

impl FullSubcat {
    /// The full subcategory on everything isomorphic to one of `generators`.
    pub fn new(parent: Arc<LinCat>, generators: &[usize], limits: &Limits) -> Result<Self> {
        if let Some(&g) = generators.iter().find(|&&g| g >= parent.len()) {
            return Err(Error::Input(format!("object {g} is not in the category")));
        }
        let classes = iso_classes(&parent, limits)?;
        let members: Vec<usize> = parent
            .objects()
            .filter(|&x| generators.iter().any(|&g| classes.class_of[g] == classes.class_of[x]))
            .collect();
        Ok(Self::on_members(parent, members))
    }

    fn on_members(parent: Arc<LinCat>, members: Vec<usize>) -> Self {
        let cat = Arc::new(parent.full_subcategory(&members));
        let m = members.len();
        let p = parent.modulus();
        let homs = (0..m * m).map(|k| FpMatrix::identity(p, cat.dims()[k])).collect();
        let inclusion =
            Arc::new(LinFunctor::new(cat.clone(), parent.clone(), members.clone(), homs).expect("full inclusion"));
        FullSubcat { parent, members, cat, inclusion }
    }

    pub fn parent(&self) -> &Arc<LinCat> {
        &self.parent
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn cat(&self) -> &Arc<LinCat> {
        &self.cat
    }

    pub fn inclusion(&self) -> &Arc<LinFunctor> {
        &self.inclusion
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(&x)
    }

    /// Parent index of a local object.
    pub fn member(&self, local: usize) -> usize {
        self.members[local]
    }

    /// Local index of a parent object.
    pub fn local(&self, parent: usize) -> Option<usize> {
        self.members.iter().position(|&m| m == parent)
    }
}

/// `Hom(b, a) = 0` for every `b ∈ B`, `a ∈ A`.
pub fn semiortho_check(c: &LinCat, a: &FullSubcat, b: &FullSubcat) -> Result<()> {
    if **a.parent() != *c || **b.parent() != *c {
        return Err(Error::ShapeMismatch("subcategories of a different category".into()));
    }
    for &y in b.members() {
        for &x in a.members() {
            if c.dim(y, x) != 0 {
                return Err(Violation::Orthogonality { b: y, a: x }.into());
            }
        }
    }
    Ok(())
}

/// An action restricted to a stable full subcategory.
#[derive(Debug, Clone)]
pub struct RestrictedAction {
    pub action: Arc<GAction>,
    /// `witness[g][a]: ρ_g(a) → ρ^A_g(a)` in the parent.
    pub witness: Vec<Vec<Morphism>>,
}

/// Restrict `action` to `sub`, choosing `ρ^A_g(a)` equal to `ρ_g(a)` when it is a member and
/// otherwise the first isomorphic member.
pub fn restrict_action(action: &GAction, sub: &FullSubcat, limits: &Limits) -> Result<RestrictedAction> {
    let c = action.cat();
    if **sub.parent() != **c {
        return Err(Error::ShapeMismatch("subcategory of a different category".into()));
    }
    let group = action.group();
    let p = c.modulus();
    let m = sub.members().len();
    let mut targets = Vec::new();
    let mut witness = Vec::new();
    for g in group.elements() {
        let mut tg = Vec::with_capacity(m);
        let mut wg = Vec::with_capacity(m);
        for (i, &a) in sub.members().iter().enumerate() {
            let ga = action.act(g, a);
            if let Some(j) = sub.local(ga) {
                tg.push(j);
                wg.push(c.identity(ga).to_vec());
                continue;
            }
            let mut found = None;
            for (j, &b) in sub.members().iter().enumerate() {
                if let Some((w, _)) = find_iso_limited(c, ga, b, limits)? {
                    found = Some((j, w));
                    break;
                }
            }
            let (j, w) = found.ok_or(Violation::Stability { g, object: sub.member(i) })?;
            tg.push(j);
            wg.push(w);
        }
        targets.push(tg);
        witness.push(wg);
    }
    let inv = |g: usize, i: usize| {
        let a = sub.member(i);
        c.inverse(action.act(g, a), sub.member(targets[g][i]), &witness[g][i]).expect("witness is an isomorphism")
    };
    let mut rho = Vec::with_capacity(group.order());
    for g in group.elements() {
        let mut homs = Vec::with_capacity(m * m);
        for x in 0..m {
            for y in 0..m {
                let (a, b) = (sub.member(x), sub.member(y));
                let (ga, gb) = (action.act(g, a), action.act(g, b));
                let (ta, tb) = (sub.member(targets[g][x]), sub.member(targets[g][y]));
                let wa_inv = inv(g, x);
                let cols: Vec<Vec<u32>> = (0..c.dim(a, b))
                    .map(|k| {
                        let gf = action.act_mor(g, a, b, &crate::lincat::unit(p, c.dim(a, b), k));
                        c.compose_path(&[ta, ga, gb, tb], &[&wa_inv, &gf, &witness[g][y]])
                    })
                    .collect();
                homs.push(FpMatrix::from_columns(p, c.dim(ta, tb), &cols));
            }
        }
        rho.push(Arc::new(LinFunctor::new(sub.cat().clone(), sub.cat().clone(), targets[g].clone(), homs)?));
    }
    // φ^A_{g,h}(a) = w_{gh,a} ∘ φ_{g,h}(a) ∘ ρ_g(w_{h,a})⁻¹ ∘ w_{g,ρ^A_h a}⁻¹
    let n = group.order();
    let mut phi = Vec::with_capacity(n * n);
    for g in group.elements() {
        for h in group.elements() {
            let gh = group.mul(g, h);
            let comps = (0..m)
                .map(|x| {
                    let a = sub.member(x);
                    let mid = targets[h][x];
                    let (ha, am) = (action.act(h, a), sub.member(mid));
                    let src = sub.member(targets[g][mid]);
                    let g_am = action.act(g, am);
                    let g_ha = action.act(g, ha);
                    let rho_w = action.act_mor(g, ha, am, &witness[h][x]);
                    let rho_w_inv = c.inverse(g_ha, g_am, &rho_w).expect("image of an isomorphism");
                    let path = [src, g_am, g_ha, action.act(gh, a), sub.member(targets[gh][x])];
                    c.compose_path(&path, &[&inv(g, mid), &rho_w_inv, action.phi_at(g, h, a), &witness[gh][x]])
                })
                .collect();
            phi.push(comps);
        }
    }
    let restricted = GAction::new(group.clone(), sub.cat().clone(), rho, phi)?;
    restricted.check()?;
    Ok(RestrictedAction { action: Arc::new(restricted), witness })
}

/// An action preserving a semiorthogonal pair, with a left adjoint `p: C → A` of the inclusion.
#[derive(Debug, Clone)]
pub struct SODInstance {
    action: Arc<GAction>,
    a: FullSubcat,
    b: FullSubcat,
    a_action: RestrictedAction,
    b_action: RestrictedAction,
    inclusion: LaxGFunctor,
    adj: AdjunctionData,
}

impl SODInstance {
    /// Checks, in order: orthogonality, stability of `A` and `B`, the triangle identities
    /// for `p ⊣ i`, naturality of unit and counit.
    pub fn new(
        action: Arc<GAction>,
        a: FullSubcat,
        b: FullSubcat,
        projection: LinFunctor,
        unit: Vec<Morphism>,
        counit: Vec<Morphism>,
        limits: &Limits,
    ) -> Result<Self> {
        action.check()?;
        semiortho_check(action.cat(), &a, &b)?;
        let a_action = restrict_action(&action, &a, limits)?;
        let b_action = restrict_action(&action, &b, limits)?;
        let adj = AdjunctionData::unchecked(a.inclusion().clone(), Arc::new(projection), unit, counit)?;
        adj.triangle_check()?;
        adj.naturality_check()?;
        // i is G-equivariant through the stability witnesses
        let inclusion =
            LaxGFunctor::new(Side::Right, a_action.action.clone(), action.clone(), a.inclusion().clone(), a_action.witness.clone())?;
        inclusion.check()?;
        Ok(SODInstance { action, a, b, a_action, b_action, inclusion, adj })
    }

    pub fn action(&self) -> &Arc<GAction> {
        &self.action
    }

    pub fn a(&self) -> &FullSubcat {
        &self.a
    }

    pub fn b(&self) -> &FullSubcat {
        &self.b
    }

    pub fn a_action(&self) -> &Arc<GAction> {
        &self.a_action.action
    }

    pub fn b_action(&self) -> &Arc<GAction> {
        &self.b_action.action
    }

    pub fn inclusion(&self) -> &LaxGFunctor {
        &self.inclusion
    }

    pub fn adjunction(&self) -> &AdjunctionData {
        &self.adj
    }
}

/// Outcome of one named check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SodCheck {
    pub name: &'static str,
    pub outcome: Result<()>,
}

#[derive(Debug, Clone)]
pub struct SodReport {
    pub cg: EquivCat,
    pub ag: FullSubcat,
    pub bg: FullSubcat,
    /// The weak structure on `p` obtained as the mate of the one on `i`.
    pub p_lax: LaxGFunctor,
    pub pg: DescendedFunctor,
    pub ig: DescendedFunctor,
    pub adjunction: AdjunctionData,
    pub checks: Vec<SodCheck>,
}

impl SodReport {
    pub fn all_ok(&self) -> bool {
        self.checks.iter().all(|c| c.outcome.is_ok())
    }

    /// Number of indecomposable objects in the skeleton of `C^G`.
    pub fn indecomposable_count(&self) -> Result<usize> {
        Ok(self.cg.indecomposables()?.len())
    }
}

fn perpendicular(cg: &EquivCat, sub: &FullSubcat, other: &FullSubcat, left: bool, which: &'static str) -> Result<()> {
    let s = cg.skeleton();
    for x in s.objects() {
        let orthogonal = other.members().iter().all(|&y| if left { s.dim(x, y) == 0 } else { s.dim(y, x) == 0 });
        if orthogonal != sub.contains(x) {
            return Err(Violation::Perpendicular { which, object: x }.into());
        }
    }
    Ok(())
}

/// Descend the pair to `C^G` and run the four checks.
pub fn descend_sod(s: &SODInstance, limits: &Limits) -> Result<SodReport> {
    let cg = equivariantize(s.action.clone(), limits)?;
    let eg_a = equivariantize(s.a_action().clone(), limits)?;
    let p_lax = mate(&s.inclusion, &s.adj)?;
    let skel = cg.skeleton().clone();
    let in_a: Vec<usize> = (0..cg.len()).filter(|&x| s.a.contains(cg.object(x).base)).collect();
    let in_b: Vec<usize> = (0..cg.len()).filter(|&x| s.b.contains(cg.object(x).base)).collect();
    let ag = FullSubcat::on_members(skel.clone(), in_a);
    let bg = FullSubcat::on_members(skel.clone(), in_b);
    let (adjunction, ig, pg) = descend_adjunction(&s.adj, &s.inclusion, &p_lax, &eg_a, &cg)?;
    let checks = vec![
        SodCheck { name: "orthogonality", outcome: semiortho_check(&skel, &ag, &bg) },
        SodCheck { name: "triangle identities", outcome: adjunction.triangle_check() },
        SodCheck { name: "B^G = left perpendicular of A^G", outcome: perpendicular(&cg, &bg, &ag, true, "left") },
        SodCheck { name: "A^G = right perpendicular of B^G", outcome: perpendicular(&cg, &ag, &bg, false, "right") },
    ];
    Ok(SodReport { cg, ag, bg, p_lax, pg, ig, adjunction, checks })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_instance_descends() {
        let lim = Limits::default();
        let s = bundled_a2_sod(5, &lim).unwrap();
        assert!(s.action().is_strict());
        assert!(s.inclusion().deltas().iter().flatten().enumerate().all(|(i, d)| {
            let x = i % s.a().members().len();
            d.as_slice() == s.a().cat().identity(x)
        }));
        let r = descend_sod(&s, &lim).unwrap();
        for c in &r.checks {
            assert_eq!(c.outcome, Ok(()), "{}", c.name);
        }
        assert_eq!(r.cg.len(), 11);
        assert_eq!(r.indecomposable_count().unwrap(), 6);
        // p^G sends the P1 classes to S1 classes
        let a2 = rep_a2_cat(5, 1).unwrap();
        let (p1, s1) = (a2.by_label("P1").unwrap(), a2.by_label("S1").unwrap());
        let eg_a = equivariantize(s.a_action().clone(), &lim).unwrap();
        for x in (0..r.cg.len()).filter(|&x| r.cg.object(x).base == p1) {
            let y = r.pg.functor.obj(x);
            assert_eq!(s.a().member(eg_a.object(y).base), s1);
        }
    }

    #[test]
    fn swapped_instance_fails_a_triangle() {
        let err = swapped_a2_sod(5, &Limits::default()).unwrap_err();
        assert!(matches!(err, Error::Violation(Violation::TriangleIdentity { .. })), "{err}");
    }

    #[test]
    fn zero_subcategories_are_orthogonal() {
        let a2 = rep_a2_cat(3, 1).unwrap();
        let z = FullSubcat::new(a2.cat.clone(), &[0], &Limits::default()).unwrap();
        semiortho_check(&a2.cat, &z, &z).unwrap();
        // P1 and P1- are isomorphic, so each generates both
        let p = FullSubcat::new(a2.cat.clone(), &[a2.by_label("P1").unwrap()], &Limits::default()).unwrap();
        assert_eq!(p.members().len(), 2);
    }
}
