use std::sync::Arc;

use super::{g_natural_check, LaxGFunctor, Side};
use crate::error::{Error, Result, Violation};
use crate::exactalg::FpMatrix;
use crate::gaction::{EquivCat, EquivariantObject};
use crate::lincat::{compose_functors, LinFunctor, Morphism, NatTransf};

/// A functor between equivariant skeleta induced by a weak G-functor.
///
/// The image of a skeleton object is generally not itself a skeleton object;
/// `transport[i]` is the equivariant isomorphism from `F(base Xᵢ)` with its
/// induced linearization to the chosen representative, as a morphism of D.
#[derive(Debug, Clone)]
pub struct DescendedFunctor {
    pub functor: Arc<LinFunctor>,
    /// Base in C of each source skeleton object.
    pub source_bases: Vec<usize>,
    /// Base in D of the representative each source object is sent to.
    pub target_bases: Vec<usize>,
    pub images: Vec<EquivariantObject>,
    pub transport: Vec<Morphism>,
}

/// Linearization of `F c` induced by `θ`: `δ_g(c)⁻¹ ∘ F(θ_g)` (right) or `δ_g(c) ∘ F(θ_g)` (left).
fn image(l: &LaxGFunctor, x: &EquivariantObject) -> Result<EquivariantObject> {
    let (cs, cd) = (l.source_action(), l.target_action());
    let d = cd.cat();
    let c = x.base;
    let fc = l.functor().obj(c);
    let mut theta = Vec::with_capacity(x.theta.len());
    for g in cs.group().elements() {
        let gc = cs.act(g, c);
        let fgc = l.functor().obj(gc);
        let f_theta = l.functor().apply(c, gc, &x.theta[g]);
        let to_rho = match l.side() {
            Side::Right => d
                .inverse(cd.act(g, fc), fgc, l.delta(g, c))
                .ok_or_else(|| Error::NotSolvable(format!("delta_{g} is not invertible at object {c}")))?,
            Side::Left => l.delta(g, c).to_vec(),
        };
        theta.push(d.compose(fc, fgc, cd.act(g, fc), &to_rho, &f_theta));
    }
    Ok(EquivariantObject { base: fc, theta })
}

fn check_frames(l: &LaxGFunctor, cg: &EquivCat, dg: &EquivCat) -> Result<()> {
    if **cg.action() != **l.source_action() || **dg.action() != **l.target_action() {
        return Err(Error::ShapeMismatch("equivariant categories do not match the lax functor".into()));
    }
    Ok(())
}

/// `F^G: C^G → D^G` on the computed skeleta.
pub fn descend_functor(l: &LaxGFunctor, cg: &EquivCat, dg: &EquivCat) -> Result<DescendedFunctor> {
    check_frames(l, cg, dg)?;
    if !l.is_weak() {
        return Err(Error::NotSolvable("descent needs a weak G-functor".into()));
    }
    let d = dg.action().cat();
    let p = d.modulus();
    let mut images = Vec::with_capacity(cg.len());
    let mut obj_map = Vec::with_capacity(cg.len());
    let mut transport = Vec::with_capacity(cg.len());
    let mut inverse = Vec::with_capacity(cg.len());
    for x in cg.objects() {
        let y = image(l, x)?;
        let (j, w) = dg.locate(&y)?;
        let rep = dg.object(j).base;
        inverse.push(d.inverse(y.base, rep, &w).expect("located isomorphism"));
        images.push(y);
        obj_map.push(j);
        transport.push(w);
    }
    let n = cg.len();
    let mut homs = Vec::with_capacity(n * n);
    for i in 0..n {
        for k in 0..n {
            let (ji, jk) = (obj_map[i], obj_map[k]);
            let (bi, bk) = (dg.object(ji).base, dg.object(jk).base);
            let (fi, fk) = (images[i].base, images[k].base);
            let cols = cg
                .hom_basis(i, k)
                .iter()
                .map(|b| {
                    let fb = l.functor().apply(cg.object(i).base, cg.object(k).base, b);
                    let m = d.compose_path(&[bi, fi, fk, bk], &[&inverse[i], &fb, &transport[k]]);
                    dg.coords(ji, jk, &m)
                })
                .collect::<Result<Vec<_>>>()?;
            homs.push(FpMatrix::from_columns(p, dg.skeleton().dim(ji, jk), &cols));
        }
    }
    let functor = Arc::new(LinFunctor::new(cg.skeleton().clone(), dg.skeleton().clone(), obj_map, homs)?);
    let source_bases = cg.objects().iter().map(|x| x.base).collect();
    let target_bases = (0..n).map(|i| dg.object(functor.obj(i)).base).collect();
    let out = DescendedFunctor { functor, source_bases, target_bases, images, transport };
    forget_square_check(l, cg, dg, &out)?;
    Ok(out)
}

/// `forget(F^G f) = t ∘ F(forget f) ∘ t⁻¹` on every basis morphism.
fn forget_square_check(l: &LaxGFunctor, cg: &EquivCat, dg: &EquivCat, desc: &DescendedFunctor) -> Result<()> {
    let d = dg.action().cat();
    let p = d.modulus();
    for i in 0..cg.len() {
        for k in 0..cg.len() {
            let dim = cg.skeleton().dim(i, k);
            for b in 0..dim {
                let e = crate::lincat::unit(p, dim, b);
                let (ji, jk) = (desc.functor.obj(i), desc.functor.obj(k));
                let lhs = dg.underlying(ji, jk, &desc.functor.apply(i, k, &e));
                let (fi, fk) = (desc.images[i].base, desc.images[k].base);
                let (bi, bk) = (dg.object(ji).base, dg.object(jk).base);
                let fb = l.functor().apply(cg.object(i).base, cg.object(k).base, &cg.underlying(i, k, &e));
                let rhs = d.compose(fi, fk, bk, &desc.transport[k], &fb);
                let lhs_pulled = d.compose(fi, bi, bk, &lhs, &desc.transport[i]);
                if lhs_pulled != rhs {
                    return Err(Violation::Naturality { source: i, target: k, basis: b }.into());
                }
            }
        }
    }
    Ok(())
}

/// Descent of `L2 ∘ L1` assembled from the individual descents, transports composed:
/// `t = t₂ ∘ L2(t₁)`.
pub fn compose_descended(d1: &DescendedFunctor, l2: &LaxGFunctor, d2: &DescendedFunctor) -> Result<DescendedFunctor> {
    let functor = Arc::new(compose_functors(&d2.functor, &d1.functor)?);
    let e = l2.target_action().cat();
    let mut images = Vec::new();
    let mut transport = Vec::new();
    let mut target_bases = Vec::new();
    for (i, y) in d1.images.iter().enumerate() {
        let j = d1.functor.obj(i);
        let mid = d1.target_bases[i];
        let g_t = l2.functor().apply(y.base, mid, &d1.transport[i]);
        let img = image(l2, y)?;
        transport.push(e.compose(img.base, l2.functor().obj(mid), d2.target_bases[j], &d2.transport[j], &g_t));
        target_bases.push(d2.target_bases[j]);
        images.push(img);
    }
    Ok(DescendedFunctor { functor, source_bases: d1.source_bases.clone(), target_bases, images, transport })
}

/// How a directly descended composite relates to the composite of descents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DescentComparison {
    /// Identical object maps and hom matrices.
    Exact,
    /// Identical object maps; hom matrices agree after conjugating by the
    /// equivariant automorphisms `transport_direct ∘ transport_composite⁻¹`.
    UpToAutomorphism,
}

/// Compare two descents of the same functor with the same target skeleton.
pub fn compare_descents(direct: &DescendedFunctor, composite: &DescendedFunctor, eg: &EquivCat) -> Result<DescentComparison> {
    let n = direct.functor.source().len();
    if direct.functor.obj_map() != composite.functor.obj_map() {
        return Err(Error::ShapeMismatch("descents disagree on objects".into()));
    }
    if direct.functor.hom_matrices() == composite.functor.hom_matrices() {
        return Ok(DescentComparison::Exact);
    }
    let e = eg.action().cat();
    let auts: Vec<Morphism> = (0..n)
        .map(|i| {
            let b = eg.object(direct.functor.obj(i)).base;
            let src = direct.images[i].base;
            let inv = e.inverse(src, b, &composite.transport[i]).expect("transport is invertible");
            e.compose(b, src, b, &direct.transport[i], &inv)
        })
        .collect();
    let p = e.modulus();
    for i in 0..n {
        for k in 0..n {
            let dim = direct.functor.source().dim(i, k);
            let (ji, jk) = (direct.functor.obj(i), direct.functor.obj(k));
            let (bi, bk) = (eg.object(ji).base, eg.object(jk).base);
            for b in 0..dim {
                let u = crate::lincat::unit(p, dim, b);
                let lhs = eg.underlying(ji, jk, &direct.functor.apply(i, k, &u));
                let rhs = eg.underlying(ji, jk, &composite.functor.apply(i, k, &u));
                if e.compose(bi, bk, bk, &auts[k], &rhs) != e.compose(bi, bi, bk, &lhs, &auts[i]) {
                    return Err(Violation::Naturality { source: i, target: k, basis: b }.into());
                }
            }
        }
    }
    Ok(DescentComparison::UpToAutomorphism)
}

/// `μ^G` between descended functors, for a G-natural `μ: F₁ ⇒ F₂` given by components.
pub fn descend_nat(
    mu: &[Morphism],
    l1: &LaxGFunctor,
    l2: &LaxGFunctor,
    d1: &DescendedFunctor,
    d2: &DescendedFunctor,
    dg: &EquivCat,
) -> Result<NatTransf> {
    g_natural_check(mu, l1, l2)?;
    let d = dg.action().cat();
    let n = d1.functor.source().len();
    let mut comps = Vec::with_capacity(n);
    for i in 0..n {
        let (j1, j2) = (d1.functor.obj(i), d2.functor.obj(i));
        let (b1, b2) = (dg.object(j1).base, dg.object(j2).base);
        let (f1, f2) = (d1.images[i].base, d2.images[i].base);
        let t1_inv = d.inverse(f1, b1, &d1.transport[i]).expect("transport is invertible");
        let m = d.compose_path(&[b1, f1, f2, b2], &[&t1_inv, &mu[d1.source_bases[i]], &d2.transport[i]]);
        comps.push(dg.coords(j1, j2, &m)?);
    }
    let t = NatTransf::new(d1.functor.clone(), d2.functor.clone(), comps)?;
    t.validate()?;
    Ok(t)
}
