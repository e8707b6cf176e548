use std::sync::Arc;

use super::descent::{descend_functor, DescendedFunctor};
use super::{compose_lax, g_natural_check, LaxGFunctor, Side};
use crate::error::{Error, Result, Violation};
use crate::gaction::EquivCat;
use crate::lincat::{compose_functors, LinFunctor, Morphism, NatTransf};

/// An adjunction `L ⊣ R` with `R: C → D`, `L: D → C`,
/// unit `ε: id_D ⇒ R L` and counit `η: L R ⇒ id_C`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjunctionData {
    right: Arc<LinFunctor>,
    left: Arc<LinFunctor>,
    unit: Vec<Morphism>,
    counit: Vec<Morphism>,
}

impl AdjunctionData {
    /// Assemble and check naturality of unit and counit (not the triangle identities).
    pub fn new(right: Arc<LinFunctor>, left: Arc<LinFunctor>, unit: Vec<Morphism>, counit: Vec<Morphism>) -> Result<Self> {
        let adj = AdjunctionData::unchecked(right, left, unit, counit)?;
        adj.naturality_check()?;
        Ok(adj)
    }

    /// Assemble without checking naturality, so that callers can order their checks.
    pub fn unchecked(right: Arc<LinFunctor>, left: Arc<LinFunctor>, unit: Vec<Morphism>, counit: Vec<Morphism>) -> Result<Self> {
        if **right.source() != **left.target() || **right.target() != **left.source() {
            return Err(Error::ShapeMismatch("adjoint functors must go in opposite directions".into()));
        }
        Ok(AdjunctionData { right, left, unit, counit })
    }

    pub fn naturality_check(&self) -> Result<()> {
        self.unit_nat()?.validate()?;
        self.counit_nat()?.validate()
    }

    /// `id ⊣ id` with identity unit and counit.
    pub fn identity(f: Arc<LinFunctor>) -> Self {
        let c = f.source().clone();
        let ids: Vec<Morphism> = c.objects().map(|x| c.identity(x).to_vec()).collect();
        AdjunctionData { right: f.clone(), left: f, unit: ids.clone(), counit: ids }
    }

    pub fn right(&self) -> &Arc<LinFunctor> {
        &self.right
    }

    pub fn left(&self) -> &Arc<LinFunctor> {
        &self.left
    }

    /// `ε_d: d → R L d`.
    pub fn unit(&self, d: usize) -> &[u32] {
        &self.unit[d]
    }

    /// `η_c: L R c → c`.
    pub fn counit(&self, c: usize) -> &[u32] {
        &self.counit[c]
    }

    pub fn units(&self) -> &[Morphism] {
        &self.unit
    }

    pub fn counits(&self) -> &[Morphism] {
        &self.counit
    }

    pub fn unit_nat(&self) -> Result<NatTransf> {
        let id = Arc::new(LinFunctor::identity(self.right.target().clone()));
        let rl = Arc::new(compose_functors(&self.right, &self.left)?);
        NatTransf::new(id, rl, self.unit.clone())
    }

    pub fn counit_nat(&self) -> Result<NatTransf> {
        let id = Arc::new(LinFunctor::identity(self.right.source().clone()));
        let lr = Arc::new(compose_functors(&self.left, &self.right)?);
        NatTransf::new(lr, id, self.counit.clone())
    }

    /// `R(η_c) ∘ ε_{Rc} = id_{Rc}` and `η_{Ld} ∘ L(ε_d) = id_{Ld}`.
    pub fn triangle_check(&self) -> Result<()> {
        let (r, l) = (&*self.right, &*self.left);
        let (c, d) = (r.source(), r.target());
        for x in c.objects() {
            let rx = r.obj(x);
            let lrx = l.obj(rx);
            let lhs = d.compose(rx, r.obj(lrx), rx, &r.apply(lrx, x, self.counit(x)), self.unit(rx));
            if lhs != d.identity(rx) {
                return Err(Violation::TriangleIdentity { which: "R(counit) . unit R", object: x }.into());
            }
        }
        for y in d.objects() {
            let ly = l.obj(y);
            let rly = r.obj(ly);
            let lhs = c.compose(ly, l.obj(rly), ly, self.counit(ly), &l.apply(y, rly, self.unit(y)));
            if lhs != c.identity(ly) {
                return Err(Violation::TriangleIdentity { which: "counit L . L(unit)", object: y }.into());
            }
        }
        Ok(())
    }

    /// The same data with one counit component replaced (used to build corrupted inputs).
    pub fn with_counit(&self, c: usize, value: Morphism) -> Self {
        let mut out = self.clone();
        out.counit[c] = value;
        out
    }
}

/// Transfer a weak structure across the adjunction.
///
/// From a right lax `R` this builds the left lax structure on `L`:
/// `δ'_g = η ρ_g L ∘ L δ_g L ∘ L ρ_g ε`.
/// From a left lax `L` it builds the right lax structure on `R`:
/// `δ'_g = R ρ_g η ∘ R δ_g R ∘ ε ρ_g R`.
/// The result is checked for the pentagon axiom, the identity axiom and invertibility.
pub fn mate(lax: &LaxGFunctor, adj: &AdjunctionData) -> Result<LaxGFunctor> {
    adj.triangle_check()?;
    let out = match lax.side() {
        Side::Right => {
            if **lax.functor() != *adj.right {
                return Err(Error::ShapeMismatch("right lax functor is not the right adjoint".into()));
            }
            mate_to_left(lax, adj)?
        }
        Side::Left => {
            if **lax.functor() != *adj.left {
                return Err(Error::ShapeMismatch("left lax functor is not the left adjoint".into()));
            }
            mate_to_right(lax, adj)?
        }
    };
    out.pentagon_check()?;
    out.identity_axiom_check()?;
    if !out.is_weak() {
        return Err(Error::NotSolvable("mate is not invertible".into()));
    }
    Ok(out)
}

fn mate_to_left(lax: &LaxGFunctor, adj: &AdjunctionData) -> Result<LaxGFunctor> {
    // lax: R: C → D right lax; output: L: D → C left lax
    let (ac, ad) = (lax.source_action(), lax.target_action());
    let (r, l) = (&*adj.right, &*adj.left);
    let c = ac.cat();
    let mut delta = Vec::new();
    for g in ad.group().elements() {
        let mut comps = Vec::new();
        for d in ad.cat().objects() {
            let ld = l.obj(d);
            let rld = r.obj(ld);
            let gd = ad.act(g, d);
            let g_rld = ad.act(g, rld);
            let gld = ac.act(g, ld);
            let r_gld = r.obj(gld);
            // L ρ_g(ε_d): L ρ_g d → L ρ_g R L d
            let s1 = l.apply(gd, g_rld, &ad.act_mor(g, d, rld, adj.unit(d)));
            // L δ_g(L d): L ρ_g R L d → L R ρ_g L d
            let s2 = l.apply(g_rld, r_gld, lax.delta(g, ld));
            // η_{ρ_g L d}: L R ρ_g L d → ρ_g L d
            let s3 = adj.counit(gld);
            comps.push(c.compose_path(&[l.obj(gd), l.obj(g_rld), l.obj(r_gld), gld], &[&s1, &s2, s3]));
        }
        delta.push(comps);
    }
    LaxGFunctor::new(Side::Left, ad.clone(), ac.clone(), adj.left.clone(), delta)
}

fn mate_to_right(lax: &LaxGFunctor, adj: &AdjunctionData) -> Result<LaxGFunctor> {
    // lax: L: D → C left lax; output: R: C → D right lax
    let (ad, ac) = (lax.source_action(), lax.target_action());
    let (r, l) = (&*adj.right, &*adj.left);
    let d = ad.cat();
    let mut delta = Vec::new();
    for g in ac.group().elements() {
        let mut comps = Vec::new();
        for x in ac.cat().objects() {
            let rx = r.obj(x);
            let grx = ad.act(g, rx);
            let lgrx = l.obj(grx);
            let lrx = l.obj(rx);
            let glrx = ac.act(g, lrx);
            let gx = ac.act(g, x);
            // ε_{ρ_g R x}: ρ_g R x → R L ρ_g R x
            let s1 = adj.unit(grx);
            // R δ_g(R x): R L ρ_g R x → R ρ_g L R x
            let s2 = r.apply(lgrx, glrx, lax.delta(g, rx));
            // R ρ_g(η_x): R ρ_g L R x → R ρ_g x
            let s3 = r.apply(glrx, gx, &ac.act_mor(g, lrx, x, adj.counit(x)));
            comps.push(d.compose_path(&[grx, r.obj(lgrx), r.obj(glrx), r.obj(gx)], &[s1, &s2, &s3]));
        }
        delta.push(comps);
    }
    LaxGFunctor::new(Side::Right, ac.clone(), ad.clone(), adj.right.clone(), delta)
}

/// Unit and counit are G-natural for the composite structures.
///
/// Both structures are brought to right-lax form first (inverting a weak left structure).
pub fn g_adjoint_check(adj: &AdjunctionData, lr: &LaxGFunctor, ll: &LaxGFunctor) -> Result<()> {
    adj.triangle_check()?;
    if **lr.functor() != *adj.right || **ll.functor() != *adj.left {
        return Err(Error::ShapeMismatch("lax functors do not match the adjunction".into()));
    }
    let (r, l) = (lr.to_right()?, ll.to_right()?);
    let rl = compose_lax(&l, &r)?;
    let lr_ = compose_lax(&r, &l)?;
    let id_d = LaxGFunctor::identity(r.target_action().clone());
    let id_c = LaxGFunctor::identity(r.source_action().clone());
    g_natural_check(&adj.unit, &id_d, &rl)?;
    g_natural_check(&adj.counit, &lr_, &id_c)?;
    Ok(())
}

/// The induced adjunction `L^G ⊣ R^G` between equivariant skeleta, with its triangle identities verified.
pub fn descend_adjunction(
    adj: &AdjunctionData,
    lr: &LaxGFunctor,
    ll: &LaxGFunctor,
    cg: &EquivCat,
    dg: &EquivCat,
) -> Result<(AdjunctionData, DescendedFunctor, DescendedFunctor)> {
    g_adjoint_check(adj, lr, ll)?;
    let rg = descend_functor(lr, cg, dg)?;
    let lg = descend_functor(ll, dg, cg)?;
    let (c, d) = (cg.action().cat(), dg.action().cat());
    let (r, l) = (&*adj.right, &*adj.left);
    // ε^G_Y: Y → R(t^L_Y) ... base Y → R L base Y → R base_k → base_m
    let mut unit = Vec::with_capacity(dg.len());
    for y in 0..dg.len() {
        let by = dg.object(y).base;
        let k = lg.functor.obj(y);
        let m = rg.functor.obj(k);
        let (lb, bk, bm) = (l.obj(by), cg.object(k).base, dg.object(m).base);
        let r_t = r.apply(lb, bk, &lg.transport[y]);
        let comp = d.compose_path(&[by, r.obj(lb), r.obj(bk), bm], &[adj.unit(by), &r_t, &rg.transport[k]]);
        unit.push(dg.coords(y, m, &comp)?);
    }
    // η^G_X: base_m → L base_k → L R base X → base X
    let mut counit = Vec::with_capacity(cg.len());
    for x in 0..cg.len() {
        let bx = cg.object(x).base;
        let k = rg.functor.obj(x);
        let m = lg.functor.obj(k);
        let (rb, bk, bm) = (r.obj(bx), dg.object(k).base, cg.object(m).base);
        let t_l_inv = c.inverse(l.obj(bk), bm, &lg.transport[k]).expect("transport is invertible");
        let l_tr = l.apply(rb, bk, &rg.transport[x]);
        let l_tr_inv = c.inverse(l.obj(rb), l.obj(bk), &l_tr).expect("transport is invertible");
        let comp = c.compose_path(&[bm, l.obj(bk), l.obj(rb), bx], &[&t_l_inv, &l_tr_inv, adj.counit(bx)]);
        counit.push(cg.coords(m, x, &comp)?);
    }
    let out = AdjunctionData::new(rg.functor.clone(), lg.functor.clone(), unit, counit)?;
    out.triangle_check()?;
    Ok((out, rg, lg))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Limits;
    use crate::gaction::{equivariantize, GAction};
    use crate::groups::{make_group, GroupKind};
    use crate::lincat::vect_cat;

    #[test]
    fn identity_adjunction_mate_is_the_original() {
        let g = Arc::new(make_group(&"cyclic:2".parse::<GroupKind>().unwrap()).unwrap());
        let a = Arc::new(GAction::trivial(g, Arc::new(vect_cat(3, 1).unwrap())));
        let id = LaxGFunctor::identity(a.clone());
        let adj = AdjunctionData::identity(id.functor().clone());
        adj.triangle_check().unwrap();
        let m = mate(&id, &adj).unwrap();
        assert_eq!(m.side(), Side::Left);
        assert_eq!(m.deltas(), id.deltas());
        g_adjoint_check(&adj, &id, &m).unwrap();
        let back = mate(&m, &adj).unwrap();
        assert_eq!(back, id);
        let cg = equivariantize(a, &Limits::default()).unwrap();
        let (dadj, rg, _) = descend_adjunction(&adj, &id, &m, &cg, &cg).unwrap();
        assert!(rg.functor.is_identity());
        assert!(dadj.units().iter().enumerate().all(|(y, u)| u == cg.skeleton().identity(y)));
    }

    #[test]
    fn flipped_counit_breaks_a_triangle() {
        let c = Arc::new(vect_cat(5, 1).unwrap());
        let adj = AdjunctionData::identity(Arc::new(LinFunctor::identity(c)));
        let bad = adj.with_counit(1, vec![4]);
        assert!(matches!(bad.triangle_check(), Err(Error::Violation(Violation::TriangleIdentity { .. }))));
    }
}
