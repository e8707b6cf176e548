//! Representations `V₁ → V₂` of the A₂ quiver with small dimension vectors.

use std::sync::Arc;

use super::{FullSubcat, SODInstance};
use crate::error::{Error, Limits, Result};
use crate::exactalg::FpMatrix;
use crate::gaction::GAction;
use crate::groups::{make_group, GroupKind};
use crate::lincat::{LinCat, LinFunctor, Morphism};

pub const MAX_A2_DIM: usize = 2;

/// Normal form `(k^a → k^b, sign · J_rank)` with `J_r` the rank-`r` partial identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct A2Object {
    pub a: usize,
    pub b: usize,
    pub rank: usize,
    pub negative: bool,
}

impl A2Object {
    fn map(&self, p: u32) -> FpMatrix {
        let mut m = FpMatrix::zeros(p, self.b, self.a);
        let v = if self.negative { p - 1 } else { 1 };
        for i in 0..self.rank {
            m.set(i, i, v);
        }
        m
    }

    fn label(&self) -> String {
        let base = match (self.a, self.b, self.rank) {
            (0, 0, _) => "0".to_string(),
            (1, 0, _) => "S1".to_string(),
            (0, 1, _) => "S2".to_string(),
            (1, 1, 0) => "S1+S2".to_string(),
            (1, 1, 1) => "P1".to_string(),
            (a, b, r) => format!("({a},{b},{r})"),
        };
        if self.negative {
            format!("{base}-")
        } else {
            base
        }
    }

    pub fn negated(&self) -> A2Object {
        A2Object { negative: self.rank > 0 && !self.negative, ..*self }
    }
}

/// The category of A₂ representations with both dimensions at most `n`.
///
/// A morphism `(u, v)` is stored as the entries of `u` (row-major) followed by those of `v`,
/// subject to `v f = f′ u`; hom coordinates are taken in the kernel basis of that constraint.
#[derive(Debug, Clone)]
pub struct A2Category {
    pub cat: Arc<LinCat>,
    pub objects: Vec<A2Object>,
    bases: Vec<Vec<Vec<u32>>>,
}

fn constraint(p: u32, x: &A2Object, y: &A2Object) -> FpMatrix {
    let (fx, fy) = (x.map(p), y.map(p));
    let nu = y.a * x.a;
    let nv = y.b * x.b;
    let mut m = FpMatrix::zeros(p, y.b * x.a, nu + nv);
    // (v f − f′ u)[r][c] = Σ_k v[r][k] f[k][c] − Σ_k f′[r][k] u[k][c]
    for r in 0..y.b {
        for c in 0..x.a {
            let row = r * x.a + c;
            for k in 0..x.b {
                let e = nu + r * x.b + k;
                m.set(row, e, (m.get(row, e) + fx.get(k, c)) % p);
            }
            for k in 0..y.a {
                let e = k * x.a + c;
                m.set(row, e, (m.get(row, e) + p - fy.get(r, k)) % p);
            }
        }
    }
    m
}

fn split(x: &A2Object, y: &A2Object, v: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let nu = y.a * x.a;
    (v[..nu].to_vec(), v[nu..].to_vec())
}

fn matmul(p: u32, rows: usize, inner: usize, cols: usize, a: &[u32], b: &[u32]) -> Vec<u32> {
    let a = FpMatrix::new(p, rows, inner, a.to_vec()).expect("shape");
    let b = FpMatrix::new(p, inner, cols, b.to_vec()).expect("shape");
    a.mul(&b).expect("shape").into_data()
}

pub fn rep_a2_cat(p: u32, n: usize) -> Result<A2Category> {
    if p == 2 {
        return Err(Error::Input("the A2 model needs an odd prime".into()));
    }
    if n > MAX_A2_DIM {
        return Err(Error::LimitExceeded(format!("A2 dimension cap {n} > {MAX_A2_DIM}")));
    }
    let mut objects = Vec::new();
    for a in 0..=n {
        for b in 0..=n {
            for rank in 0..=a.min(b) {
                objects.push(A2Object { a, b, rank, negative: false });
                if rank > 0 {
                    objects.push(A2Object { a, b, rank, negative: true });
                }
            }
        }
    }
    let m = objects.len();
    let bases: Vec<Vec<Vec<u32>>> = (0..m * m)
        .map(|k| constraint(p, &objects[k / m], &objects[k % m]).kernel_basis())
        .collect();
    let labels = objects.iter().map(A2Object::label).collect();
    let objs = objects.clone();
    let compose = move |x: usize, y: usize, z: usize, g: &[u32], f: &[u32]| {
        let (ox, oy, oz) = (&objs[x], &objs[y], &objs[z]);
        let (u1, v1) = split(ox, oy, f);
        let (u2, v2) = split(oy, oz, g);
        let mut out = matmul(p, oz.a, oy.a, ox.a, &u2, &u1);
        out.extend(matmul(p, oz.b, oy.b, ox.b, &v2, &v1));
        out
    };
    let objs = objects.clone();
    let identity = move |x: usize| {
        let o = &objs[x];
        let mut out = FpMatrix::identity(p, o.a).into_data();
        out.extend(FpMatrix::identity(p, o.b).into_data());
        out
    };
    let cat = LinCat::from_subspaces(p, labels, &bases, compose, identity)?;
    Ok(A2Category { cat: Arc::new(cat), objects, bases })
}

impl A2Category {
    pub fn index(&self, o: &A2Object) -> Option<usize> {
        self.objects.iter().position(|x| x == o)
    }

    pub fn by_label(&self, label: &str) -> Option<usize> {
        self.cat.labels().iter().position(|l| l == label)
    }

    /// The pair `(u, v)` of a morphism given in hom coordinates.
    pub fn ambient(&self, x: usize, y: usize, f: &[u32]) -> Vec<u32> {
        let m = self.objects.len();
        let p = self.cat.modulus();
        let basis = &self.bases[x * m + y];
        let (ox, oy) = (&self.objects[x], &self.objects[y]);
        let mut out = vec![0u32; oy.a * ox.a + oy.b * ox.b];
        for (b, &c) in basis.iter().zip(f) {
            for (o, &e) in out.iter_mut().zip(b) {
                *o = (*o + c * e) % p;
            }
        }
        out
    }

    /// Hom coordinates of a pair `(u, v)`, if it is a morphism.
    pub fn coords(&self, x: usize, y: usize, ambient: &[u32]) -> Option<Morphism> {
        let m = self.objects.len();
        let p = self.cat.modulus();
        let basis = &self.bases[x * m + y];
        if basis.is_empty() {
            return ambient.iter().all(|&c| c == 0).then(Vec::new);
        }
        FpMatrix::from_columns(p, ambient.len(), basis).solve(ambient).map(|s| s.particular)
    }

    /// `Z/2` acting by `f ↦ −f`; strict, identity on morphisms.
    pub fn sign_action(&self) -> Result<GAction> {
        let group = Arc::new(make_group(&GroupKind::Cyclic(2))?);
        let p = self.cat.modulus();
        let m = self.objects.len();
        let flip: Vec<usize> = self.objects.iter().map(|o| self.index(&o.negated()).expect("closed under sign")).collect();
        let mut homs = Vec::with_capacity(m * m);
        for x in 0..m {
            for y in 0..m {
                let cols = (0..self.cat.dim(x, y))
                    .map(|b| {
                        let amb = self.ambient(x, y, &crate::lincat::unit(p, self.cat.dim(x, y), b));
                        self.coords(flip[x], flip[y], &amb).expect("sign preserves morphisms")
                    })
                    .collect::<Vec<_>>();
                homs.push(FpMatrix::from_columns(p, self.cat.dim(flip[x], flip[y]), &cols));
            }
        }
        let id = Arc::new(LinFunctor::identity(self.cat.clone()));
        let sigma = Arc::new(LinFunctor::new(self.cat.clone(), self.cat.clone(), flip, homs)?);
        let ids: Vec<Morphism> = self.cat.objects().map(|x| self.cat.identity(x).to_vec()).collect();
        GAction::new(group, self.cat.clone(), vec![id, sigma], vec![ids; 4])
    }

    /// Projection onto one vertex as a functor into the slot subcategory, with
    /// unit `X → (slot part of X)` given by `(I, 0)` or `(0, I)` where that is a
    /// morphism and zero otherwise, and identity counit.
    fn slot_projection(&self, slot: &FullSubcat, first: bool) -> Result<(LinFunctor, Vec<Morphism>, Vec<Morphism>)> {
        let p = self.cat.modulus();
        let target_of = |o: &A2Object| {
            let t = if first {
                A2Object { a: o.a, b: 0, rank: 0, negative: false }
            } else {
                A2Object { a: 0, b: o.b, rank: 0, negative: false }
            };
            let parent = self.index(&t).expect("slot objects exist");
            slot.local(parent).expect("slot object is a member")
        };
        let obj_map: Vec<usize> = self.objects.iter().map(target_of).collect();
        let m = self.objects.len();
        let mut homs = Vec::with_capacity(m * m);
        for x in 0..m {
            for y in 0..m {
                let (ox, oy) = (&self.objects[x], &self.objects[y]);
                let (tx, ty) = (slot.member(obj_map[x]), slot.member(obj_map[y]));
                let cols = (0..self.cat.dim(x, y))
                    .map(|b| {
                        let amb = self.ambient(x, y, &crate::lincat::unit(p, self.cat.dim(x, y), b));
                        let (u, v) = split(ox, oy, &amb);
                        let proj = if first { u } else { v };
                        self.coords(tx, ty, &proj).expect("projection is a morphism")
                    })
                    .collect::<Vec<_>>();
                homs.push(FpMatrix::from_columns(p, self.cat.dim(tx, ty), &cols));
            }
        }
        let functor = LinFunctor::new(self.cat.clone(), slot.cat().clone(), obj_map.clone(), homs)?;
        let unit = (0..m)
            .map(|x| {
                let o = &self.objects[x];
                let t = slot.member(obj_map[x]);
                let mut amb = vec![0u32; self.objects[t].a * o.a + self.objects[t].b * o.b];
                // the other vertex of the slot object is zero, so the kept block comes first
                let id = FpMatrix::identity(p, if first { o.a } else { o.b }).into_data();
                amb[..id.len()].copy_from_slice(&id);
                self.coords(x, t, &amb).unwrap_or_else(|| self.cat.zero(x, t))
            })
            .collect();
        let counit = slot.cat().objects().map(|a| slot.cat().identity(a).to_vec()).collect();
        Ok((functor, unit, counit))
    }

    /// Objects with `V₂ = 0` (or `V₁ = 0` for the second slot).
    pub fn slot(&self, first: bool, limits: &Limits) -> Result<FullSubcat> {
        let members: Vec<usize> = (0..self.objects.len())
            .filter(|&i| if first { self.objects[i].b == 0 } else { self.objects[i].a == 0 })
            .collect();
        FullSubcat::new(self.cat.clone(), &members, limits)
    }
}

/// The sign action on `rep_a2_cat(p, 1)` with `A` the first-vertex slot, `B` the second,
/// and `p(V₁ → V₂) = V₁` left adjoint to the inclusion of `A`.
pub fn bundled_a2_sod(p: u32, limits: &Limits) -> Result<SODInstance> {
    a2_sod(p, 1, false, limits)
}

/// The same data with the roles of the two slots exchanged and the naive projection onto `V₂`.
pub fn swapped_a2_sod(p: u32, limits: &Limits) -> Result<SODInstance> {
    a2_sod(p, 1, true, limits)
}

pub fn a2_sod(p: u32, n: usize, swapped: bool, limits: &Limits) -> Result<SODInstance> {
    let a2 = rep_a2_cat(p, n)?;
    let action = Arc::new(a2.sign_action()?);
    let a = a2.slot(!swapped, limits)?;
    let b = a2.slot(swapped, limits)?;
    let (proj, unit, counit) = a2.slot_projection(&a, !swapped)?;
    SODInstance::new(action, a, b, proj, unit, counit, limits)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_hom_dimensions() {
        let a2 = rep_a2_cat(5, 1).unwrap();
        a2.cat.validate().unwrap();
        assert_eq!(a2.cat.len(), 6);
        let i = |l: &str| a2.by_label(l).unwrap();
        let (s1, s2, p1) = (i("S1"), i("S2"), i("P1"));
        let d = |x, y| a2.cat.dim(x, y);
        assert_eq!((d(s2, s1), d(p1, s1), d(s2, p1), d(s1, p1), d(p1, s2)), (0, 1, 1, 0, 0));
        assert_eq!((d(s1, s1), d(s2, s2), d(p1, p1)), (1, 1, 1));
    }

    #[test]
    fn dimension_two_validates() {
        let a2 = rep_a2_cat(3, 2).unwrap();
        a2.cat.validate().unwrap();
        assert_eq!(a2.cat.len(), 19);
        assert!(rep_a2_cat(3, 3).is_err());
        assert!(rep_a2_cat(2, 1).is_err());
    }

    #[test]
    fn sign_action_is_strict_and_moves_p1() {
        let a2 = rep_a2_cat(5, 1).unwrap();
        let act = a2.sign_action().unwrap();
        act.check().unwrap();
        assert!(act.is_strict());
        let (p1, p1m) = (a2.by_label("P1").unwrap(), a2.by_label("P1-").unwrap());
        assert_eq!(act.act(1, p1), p1m);
        // (1, −1): P1 → P1- is an isomorphism
        let iso = a2.coords(p1, p1m, &[1, 4]).unwrap();
        assert!(a2.cat.is_iso(p1, p1m, &iso));
    }
}
