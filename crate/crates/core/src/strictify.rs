//! Strictification: every action is weakly equivalent to a strict one.
//!
//! `C′` has one object `(c, h)` per skeleton object `c` of `C` and `h ∈ G`,
//! standing for the `h`-shifted canonical family `g ↦ ρ_{gh}(c)`. A morphism
//! family is determined by its component at the identity, so
//! `Hom((c,h),(d,h*)) = Hom_C(ρ_h c, ρ_{h*} d)`.

use std::sync::Arc;

use crate::error::{Error, Limits, Result};
use crate::exactalg::FpMatrix;
use crate::gaction::GAction;
use crate::gfunctor::{LaxGFunctor, Side};
use crate::groups::FinGroup;
use crate::lincat::{iso_classes, LinCat, LinFunctor, Morphism};

/// The category with one object per group element and `Hom(g,g) = k`, `Hom(g,h) = 0` otherwise.
pub fn omega_cat(group: &FinGroup, p: u32) -> Result<LinCat> {
    let n = group.order();
    let labels = group.elements().map(|g| format!("g{g}")).collect();
    let dims = (0..n * n).map(|k| usize::from(k / n == k % n)).collect();
    let mut comp = Vec::with_capacity(n * n * n);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                comp.push(if x == y && y == z { vec![1] } else { Vec::new() });
            }
        }
    }
    LinCat::new(p, labels, dims, comp, vec![vec![1]; n])
}

/// Left translation on `Ω(G)`, a strict action.
pub fn omega_action(group: Arc<FinGroup>, p: u32) -> Result<GAction> {
    let cat = Arc::new(omega_cat(&group, p)?);
    let n = group.order();
    let rho = group
        .elements()
        .map(|g| {
            let obj_map: Vec<usize> = group.elements().map(|h| group.mul(g, h)).collect();
            let homs = (0..n * n)
                .map(|k| {
                    let (x, y) = (k / n, k % n);
                    if x == y {
                        FpMatrix::identity(p, 1)
                    } else {
                        FpMatrix::zeros(p, 0, 0)
                    }
                })
                .collect();
            LinFunctor::new(cat.clone(), cat.clone(), obj_map, homs).map(Arc::new)
        })
        .collect::<Result<Vec<_>>>()?;
    let phi = (0..n * n).map(|_| cat.objects().map(|x| cat.identity(x).to_vec()).collect()).collect();
    GAction::new(group, cat, rho, phi)
}

/// The canonical family of `c`: `g ↦ ρ_g c` as a right lax functor `Ω(G) → C` with `δ_h(g) = φ_{h,g}(c)`.
pub fn canonical_family(action: &Arc<GAction>, c: usize) -> Result<LaxGFunctor> {
    let group = action.group().clone();
    let cat = action.cat();
    let p = action.modulus();
    let omega = Arc::new(omega_action(group.clone(), p)?);
    let n = group.order();
    let obj_map: Vec<usize> = group.elements().map(|g| action.act(g, c)).collect();
    let homs = (0..n * n)
        .map(|k| {
            let (x, y) = (k / n, k % n);
            let (fx, fy) = (obj_map[x], obj_map[y]);
            if x == y {
                FpMatrix::from_columns(p, cat.dim(fx, fx), &[cat.identity(fx).to_vec()])
            } else {
                FpMatrix::zeros(p, cat.dim(fx, fy), 0)
            }
        })
        .collect();
    let functor = Arc::new(LinFunctor::new(omega.cat().clone(), cat.clone(), obj_map, homs)?);
    let delta = group
        .elements()
        .map(|h| group.elements().map(|g| action.phi_at(h, g, c).to_vec()).collect())
        .collect();
    LaxGFunctor::new(Side::Right, omega, action.clone(), functor, delta)
}

/// Output of [`strictify`].
#[derive(Debug, Clone)]
pub struct Strictification {
    pub cprime: Arc<LinCat>,
    pub strict_action: Arc<GAction>,
    /// `Φ: C′ → C`, `(c,h) ↦ ρ_h c`, weak with `δ_g(c,h) = φ_{g,h}(c)`.
    pub phi: LaxGFunctor,
    /// Skeleton object of `C` underlying each object of `C′`.
    pub bases: Vec<usize>,
}

/// Build `C′`, its strict action, and `Φ`, asserting strictness, the pentagon and weak equivalence.
pub fn strictify(action: &Arc<GAction>, limits: &Limits) -> Result<Strictification> {
    action.check()?;
    let c = action.cat();
    let p = action.modulus();
    let group = action.group().clone();
    let n = group.order();
    let skel = iso_classes(c, limits)?.reps;
    // (c, h) at index i * n + h; its image ρ_h c in C
    let bases: Vec<usize> = skel.iter().flat_map(|&x| std::iter::repeat_n(x, n)).collect();
    let m = bases.len();
    let under: Vec<usize> = (0..m).map(|i| action.act(i % n, bases[i])).collect();
    let labels = (0..m).map(|i| format!("({},g{})", c.label(bases[i]), i % n)).collect();
    let dims = (0..m * m).map(|k| c.dim(under[k / m], under[k % m])).collect();
    let mut comp = Vec::with_capacity(m * m * m);
    for x in 0..m {
        for y in 0..m {
            for z in 0..m {
                comp.push(c.tensor(under[x], under[y], under[z]).to_vec());
            }
        }
    }
    let ids = under.iter().map(|&u| c.identity(u).to_vec()).collect();
    let cprime = Arc::new(LinCat::new(p, labels, dims, comp, ids)?);

    let shift = |g: usize, i: usize| (i / n) * n + group.mul(g, i % n);
    let mut rho = Vec::with_capacity(n);
    for g in group.elements() {
        let obj_map: Vec<usize> = (0..m).map(|i| shift(g, i)).collect();
        // φ_{g,h}(c)⁻¹: ρ_{gh} c → ρ_g ρ_h c
        let phi_inv: Vec<Morphism> = (0..m)
            .map(|i| {
                let (b, h) = (bases[i], i % n);
                let src = action.act(g, under[i]);
                c.inverse(src, action.act(group.mul(g, h), b), action.phi_at(g, h, b))
                    .ok_or_else(|| Error::NotSolvable("phi is not invertible".into()))
            })
            .collect::<Result<_>>()?;
        let mut homs = Vec::with_capacity(m * m);
        for x in 0..m {
            for y in 0..m {
                let (ux, uy) = (under[x], under[y]);
                let (gx, gy) = (action.act(g, ux), action.act(g, uy));
                let (tx, ty) = (under[obj_map[x]], under[obj_map[y]]);
                let phi_y = action.phi_at(g, y % n, bases[y]);
                let cols: Vec<Vec<u32>> = (0..c.dim(ux, uy))
                    .map(|b| {
                        let f = crate::lincat::unit(p, c.dim(ux, uy), b);
                        let gf = action.act_mor(g, ux, uy, &f);
                        c.compose_path(&[tx, gx, gy, ty], &[&phi_inv[x], &gf, phi_y])
                    })
                    .collect();
                homs.push(FpMatrix::from_columns(p, c.dim(tx, ty), &cols));
            }
        }
        rho.push(Arc::new(LinFunctor::new(cprime.clone(), cprime.clone(), obj_map, homs)?));
    }
    let identities: Vec<Morphism> = cprime.objects().map(|x| cprime.identity(x).to_vec()).collect();
    let strict_action = Arc::new(GAction::new(group.clone(), cprime.clone(), rho, vec![identities; n * n])?);
    strict_action.check()?;
    strict_action.strictness_check()?;

    let homs = (0..m * m).map(|k| FpMatrix::identity(p, cprime.dims()[k])).collect();
    let functor = Arc::new(LinFunctor::new(cprime.clone(), c.clone(), under.clone(), homs)?);
    let delta = group
        .elements()
        .map(|g| (0..m).map(|i| action.phi_at(g, i % n, bases[i]).to_vec()).collect())
        .collect();
    let phi = LaxGFunctor::new(Side::Right, strict_action.clone(), action.clone(), functor, delta)?;
    phi.check()?;
    phi.weak_equivalence_check(limits)?;
    Ok(Strictification { cprime, strict_action, phi, bases })
}

/// Every `φ_{g,h}` is the identity and `ρ_g ρ_h = ρ_{gh}` as exact data.
pub fn strict_check(action: &GAction) -> bool {
    action.is_strict()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::{CyclicCoeff, TwoCocycle};
    use crate::gaction::{action_from_cocycle, equivariantize};
    use crate::groups::{make_group, GroupKind};
    use crate::lincat::vect_cat;

    fn group(s: &str) -> Arc<FinGroup> {
        Arc::new(make_group(&s.parse::<GroupKind>().unwrap()).unwrap())
    }

    #[test]
    fn omega_shapes() {
        let g = group("klein");
        let o = omega_cat(&g, 5).unwrap();
        o.validate().unwrap();
        assert_eq!(o.len(), 4);
        for x in 0..4 {
            for y in 0..4 {
                assert_eq!(o.dim(x, y), usize::from(x == y));
            }
        }
        let a = omega_action(g, 5).unwrap();
        a.check().unwrap();
        assert!(strict_check(&a));
        assert_eq!(omega_cat(&FinGroup::trivial(), 3).unwrap().len(), 1);
    }

    #[test]
    fn canonical_family_is_weak() {
        let g = group("cyclic:2");
        let phi = TwoCocycle::new(g, CyclicCoeff::units_of(5).unwrap(), vec![0, 0, 0, 2]).unwrap();
        let a = Arc::new(action_from_cocycle(5, 2, &phi).unwrap());
        for c in 0..3 {
            let f = canonical_family(&a, c).unwrap();
            f.check().unwrap();
            assert!(f.is_weak());
        }
    }

    #[test]
    fn nontrivial_cocycle_strictifies() {
        let g = group("cyclic:2");
        let phi = TwoCocycle::new(g, CyclicCoeff::units_of(5).unwrap(), vec![0, 0, 0, 2]).unwrap();
        let a = Arc::new(action_from_cocycle(5, 2, &phi).unwrap());
        assert!(!strict_check(&a));
        let s = strictify(&a, &Limits::default()).unwrap();
        assert_eq!(s.cprime.len(), 6);
        assert!(strict_check(&s.strict_action));
        let lim = Limits::default();
        let (e, f) = (equivariantize(a, &lim).unwrap(), equivariantize(s.strict_action, &lim).unwrap());
        assert_eq!(e.len(), f.len());
        assert_eq!(e.class_table().hom_dims, f.class_table().hom_dims);
    }

    #[test]
    fn trivial_group_gives_an_isomorphic_copy() {
        let g = Arc::new(FinGroup::trivial());
        let a = Arc::new(GAction::trivial(g, Arc::new(vect_cat(3, 2).unwrap())));
        let s = strictify(&a, &Limits::default()).unwrap();
        assert_eq!(*s.cprime.dims(), *a.cat().dims());
        assert!(s.phi.functor().hom_matrices().iter().all(|m| *m == FpMatrix::identity(3, m.rows())));
    }
}
