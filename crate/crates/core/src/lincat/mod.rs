//! Finite F_p-linear categories given by hom dimensions and composition
//! structure tensors, with linear functors and natural transformations.

mod functor;
mod iso;
mod vect;

use std::sync::Arc;

use crate::error::{Error, Result, Violation};
use crate::exactalg::{fp, FpMatrix};

pub use functor::{compose_functors, vcompose, whisker_left, whisker_right, LinFunctor, NatTransf};
pub use iso::{find_iso, find_iso_limited, iso_classes, isomorphisms, IsoClasses};
pub use vect::{vect_cat, MAX_VECT_DIM};

/// Largest hom-space dimension accepted by the constructors.
pub const MAX_HOM_DIM: usize = 9;

/// A morphism is its coordinate vector in the chosen basis of a hom-space.
pub type Morphism = Vec<u32>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinCat {
    p: u32,
    labels: Vec<String>,
    /// `dims[x * n + y] = dim Hom(x, y)`
    dims: Vec<usize>,
    /// `comp[(x * n + y) * n + z]` maps basis pairs of Hom(y,z) × Hom(x,y) to Hom(x,z):
    /// entry `((i * dim(x,y)) + j) * dim(x,z) + k`.
    comp: Vec<Vec<u32>>,
    ids: Vec<Morphism>,
}

impl LinCat {
    /// Build from raw tensors, checking only shapes. Use [`LinCat::validate`] for the laws.
    pub fn new(
        p: u32,
        labels: Vec<String>,
        dims: Vec<usize>,
        comp: Vec<Vec<u32>>,
        ids: Vec<Morphism>,
    ) -> Result<Self> {
        if !fp::is_prime(p) {
            return Err(Error::Input(format!("{p} is not prime")));
        }
        let n = labels.len();
        if dims.len() != n * n {
            return Err(Error::ShapeMismatch(format!("hom dimension table needs {} entries", n * n)));
        }
        if let Some(d) = dims.iter().find(|&&d| d > MAX_HOM_DIM) {
            return Err(Error::LimitExceeded(format!("hom dimension {d} > {MAX_HOM_DIM}")));
        }
        if comp.len() != n * n * n {
            return Err(Error::ShapeMismatch(format!("composition needs {} tensors", n * n * n)));
        }
        if ids.len() != n {
            return Err(Error::ShapeMismatch("one identity per object required".into()));
        }
        for x in 0..n {
            if ids[x].len() != dims[x * n + x] {
                return Err(Error::ShapeMismatch(format!("identity of object {x} has wrong length")));
            }
            for y in 0..n {
                for z in 0..n {
                    let want = dims[y * n + z] * dims[x * n + y] * dims[x * n + z];
                    if comp[(x * n + y) * n + z].len() != want {
                        return Err(Error::ShapeMismatch(format!(
                            "composition tensor ({x},{y},{z}) has wrong length"
                        )));
                    }
                }
            }
        }
        let comp = comp.into_iter().map(|t| t.into_iter().map(|v| v % p).collect()).collect();
        let ids = ids.into_iter().map(|t| t.into_iter().map(|v| v % p).collect()).collect();
        Ok(LinCat { p, labels, dims, comp, ids })
    }

    /// Build a category whose hom-spaces are subspaces of ambient coordinate spaces.
    ///
    /// `bases[x * n + y]` lists ambient vectors spanning Hom(x,y); `compose` and
    /// `identity` act on ambient vectors. Composites must land back in the subspace.
    pub fn from_subspaces(
        p: u32,
        labels: Vec<String>,
        bases: &[Vec<Vec<u32>>],
        compose: impl Fn(usize, usize, usize, &[u32], &[u32]) -> Vec<u32>,
        identity: impl Fn(usize) -> Vec<u32>,
    ) -> Result<Self> {
        let n = labels.len();
        let ambient: Vec<usize> = (0..n * n)
            .map(|k| bases[k].first().map_or(0, |b| b.len()))
            .collect();
        let coords = |x: usize, y: usize, v: &[u32]| -> Result<Vec<u32>> {
            let basis = &bases[x * n + y];
            if basis.is_empty() {
                return if v.iter().all(|&c| c == 0) {
                    Ok(Vec::new())
                } else {
                    Err(Error::ShapeMismatch(format!("nonzero vector in zero space Hom({x},{y})")))
                };
            }
            let m = FpMatrix::from_columns(p, ambient[x * n + y], basis);
            let sol = m
                .solve(v)
                .ok_or_else(|| Error::ShapeMismatch(format!("vector not in Hom({x},{y})")))?;
            Ok(sol.particular)
        };
        let dims: Vec<usize> = bases.iter().map(|b| b.len()).collect();
        let mut comp = Vec::with_capacity(n * n * n);
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let (dxy, dyz, dxz) = (dims[x * n + y], dims[y * n + z], dims[x * n + z]);
                    let mut t = vec![0u32; dyz * dxy * dxz];
                    for i in 0..dyz {
                        for j in 0..dxy {
                            let v = compose(x, y, z, &bases[y * n + z][i], &bases[x * n + y][j]);
                            let c = coords(x, z, &v)?;
                            t[(i * dxy + j) * dxz..(i * dxy + j + 1) * dxz].copy_from_slice(&c);
                        }
                    }
                    comp.push(t);
                }
            }
        }
        let ids = (0..n).map(|x| coords(x, x, &identity(x))).collect::<Result<Vec<_>>>()?;
        LinCat::new(p, labels, dims, comp, ids)
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn objects(&self) -> std::ops::Range<usize> {
        0..self.labels.len()
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    #[inline]
    pub fn dim(&self, x: usize, y: usize) -> usize {
        self.dims[x * self.len() + y]
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn tensor(&self, x: usize, y: usize, z: usize) -> &[u32] {
        let n = self.len();
        &self.comp[(x * n + y) * n + z]
    }

    pub fn identity(&self, x: usize) -> &[u32] {
        &self.ids[x]
    }

    pub fn zero(&self, x: usize, y: usize) -> Morphism {
        vec![0; self.dim(x, y)]
    }

    /// `f ∘ g` for `g: x → y`, `f: y → z`.
    pub fn compose(&self, x: usize, y: usize, z: usize, f: &[u32], g: &[u32]) -> Morphism {
        let (dxy, dyz, dxz) = (self.dim(x, y), self.dim(y, z), self.dim(x, z));
        debug_assert_eq!(f.len(), dyz);
        debug_assert_eq!(g.len(), dxy);
        let t = self.tensor(x, y, z);
        let p = self.p as u64;
        let mut acc = vec![0u64; dxz];
        for (i, &fi) in f.iter().enumerate() {
            if fi == 0 {
                continue;
            }
            for (j, &gj) in g.iter().enumerate() {
                if gj == 0 {
                    continue;
                }
                let c = fi as u64 * gj as u64 % p;
                let row = &t[(i * dxy + j) * dxz..(i * dxy + j + 1) * dxz];
                for (a, &r) in acc.iter_mut().zip(row) {
                    *a = (*a + c * r as u64) % p;
                }
            }
        }
        acc.into_iter().map(|v| v as u32).collect()
    }

    /// Compose a path `x₀ → x₁ → … → xₖ`, morphisms listed in path order.
    pub fn compose_path(&self, objects: &[usize], morphisms: &[&[u32]]) -> Morphism {
        assert_eq!(objects.len(), morphisms.len() + 1);
        let mut acc = self.identity(objects[0]).to_vec();
        for (i, m) in morphisms.iter().enumerate() {
            acc = self.compose(objects[0], objects[i], objects[i + 1], m, &acc);
        }
        acc
    }

    /// Matrix of `g ↦ f ∘ g` from Hom(x,y) to Hom(x,z), for `f: y → z`.
    pub fn post_compose_matrix(&self, x: usize, y: usize, z: usize, f: &[u32]) -> FpMatrix {
        let dxy = self.dim(x, y);
        let cols: Vec<Vec<u32>> = (0..dxy).map(|j| self.compose(x, y, z, f, &unit(self.p, dxy, j))).collect();
        FpMatrix::from_columns(self.p, self.dim(x, z), &cols)
    }

    /// Matrix of `f ↦ f ∘ g` from Hom(y,z) to Hom(x,z), for `g: x → y`.
    pub fn pre_compose_matrix(&self, x: usize, y: usize, z: usize, g: &[u32]) -> FpMatrix {
        let dyz = self.dim(y, z);
        let cols: Vec<Vec<u32>> = (0..dyz).map(|i| self.compose(x, y, z, &unit(self.p, dyz, i), g)).collect();
        FpMatrix::from_columns(self.p, self.dim(x, z), &cols)
    }

    /// Two-sided inverse of `f: x → y`, if `f` is an isomorphism.
    pub fn inverse(&self, x: usize, y: usize, f: &[u32]) -> Option<Morphism> {
        // g ∘ f = id_x has a unique solution exactly when f is invertible
        let a = self.pre_compose_matrix(x, y, x, f);
        let sol = a.solve(self.identity(x))?;
        if !sol.kernel_basis.is_empty() {
            return None;
        }
        let g = sol.particular;
        (self.compose(y, x, y, f, &g) == self.identity(y)).then_some(g)
    }

    pub fn is_iso(&self, x: usize, y: usize, f: &[u32]) -> bool {
        self.inverse(x, y, f).is_some()
    }

    pub fn is_zero_object(&self, x: usize) -> bool {
        self.dim(x, x) == 0
    }

    /// Checks associativity and identity laws on all basis tuples.
    pub fn validate(&self) -> Result<()> {
        let n = self.len();
        let p = self.p;
        for x in 0..n {
            if self.dim(x, x) > 0 && self.ids[x].iter().all(|&v| v == 0) {
                return Err(Violation::IdentityLaw { source: x, target: x, basis: 0 }.into());
            }
            for y in 0..n {
                for b in 0..self.dim(x, y) {
                    let f = unit(p, self.dim(x, y), b);
                    let left = self.compose(x, y, y, self.identity(y), &f);
                    let right = self.compose(x, x, y, &f, self.identity(x));
                    if left != f || right != f {
                        return Err(Violation::IdentityLaw { source: x, target: y, basis: b }.into());
                    }
                }
            }
        }
        for w in 0..n {
            for x in 0..n {
                let dwx = self.dim(w, x);
                if dwx == 0 {
                    continue;
                }
                for y in 0..n {
                    let dxy = self.dim(x, y);
                    if dxy == 0 {
                        continue;
                    }
                    for z in 0..n {
                        let dyz = self.dim(y, z);
                        for i in 0..dyz {
                            let f = unit(p, dyz, i);
                            for j in 0..dxy {
                                let g = unit(p, dxy, j);
                                let fg = self.compose(x, y, z, &f, &g);
                                for k in 0..dwx {
                                    let h = unit(p, dwx, k);
                                    let lhs = self.compose(w, x, z, &fg, &h);
                                    let gh = self.compose(w, x, y, &g, &h);
                                    let rhs = self.compose(w, y, z, &f, &gh);
                                    if lhs != rhs {
                                        return Err(Violation::Associativity {
                                            objects: [w, x, y, z],
                                            basis: [i, j, k],
                                        }
                                        .into());
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Full subcategory on `members` (in the given order).
    pub fn full_subcategory(&self, members: &[usize]) -> LinCat {
        let n = self.len();
        let labels = members.iter().map(|&m| self.labels[m].clone()).collect();
        let mut dims = Vec::new();
        for &a in members {
            for &b in members {
                dims.push(self.dims[a * n + b]);
            }
        }
        let mut comp = Vec::new();
        for &a in members {
            for &b in members {
                for &c in members {
                    comp.push(self.comp[(a * n + b) * n + c].clone());
                }
            }
        }
        let ids = members.iter().map(|&m| self.ids[m].clone()).collect();
        LinCat { p: self.p, labels, dims, comp, ids }
    }

    /// Replace a single structure-tensor entry (used to build corrupted inputs in tests).
    pub fn with_tensor_entry(&self, x: usize, y: usize, z: usize, index: usize, value: u32) -> LinCat {
        let mut c = self.clone();
        let n = self.len();
        c.comp[(x * n + y) * n + z][index] = value % self.p;
        c
    }

    pub fn into_arc(self) -> Arc<LinCat> {
        Arc::new(self)
    }
}

/// Standard basis vector `e_i` of F_p^dim.
pub fn unit(p: u32, dim: usize, i: usize) -> Vec<u32> {
    let mut v = vec![0; dim];
    v[i] = 1 % p;
    v
}

pub fn scale(p: u32, v: &[u32], c: u32) -> Vec<u32> {
    v.iter().map(|&a| fp::mul(a, c, p)).collect()
}

pub fn add(p: u32, a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(&x, &y)| fp::add(x, y, p)).collect()
}

pub fn sub(p: u32, a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(&x, &y)| fp::sub(x, y, p)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vect_is_valid() {
        vect_cat(3, 1).unwrap().validate().unwrap();
        vect_cat(2, 2).unwrap().validate().unwrap();
    }

    #[test]
    fn corrupted_tensor_breaks_associativity() {
        let c = vect_cat(3, 2).unwrap();
        // E_00 ∘ E_00 in Hom(2,2): change its coordinate on E_01
        let bad = c.with_tensor_entry(2, 2, 2, 1, 1);
        match bad.validate() {
            Err(Error::Violation(Violation::Associativity { .. }))
            | Err(Error::Violation(Violation::IdentityLaw { .. })) => {}
            other => panic!("expected a violation, got {other:?}"),
        }
        // a corruption away from identities must be caught by associativity
        let bad = c.with_tensor_entry(1, 2, 1, 0, 2);
        assert!(matches!(
            bad.validate(),
            Err(Error::Violation(Violation::Associativity { .. })) | Err(Error::Violation(Violation::IdentityLaw { .. }))
        ));
    }

    #[test]
    fn two_objects_with_explicit_iso_collapse() {
        // two copies of k with Hom = k everywhere, composition = multiplication
        let bases = vec![vec![vec![1]]; 4];
        let c = LinCat::from_subspaces(
            5,
            vec!["a".into(), "b".into()],
            &bases,
            |_, _, _, f, g| vec![fp::mul(f[0], g[0], 5)],
            |_| vec![1],
        )
        .unwrap();
        c.validate().unwrap();
        let classes = iso_classes(&c, &Default::default()).unwrap();
        assert_eq!(classes.reps, vec![0]);
    }

    #[test]
    fn empty_homs_give_two_classes() {
        let bases = vec![vec![vec![1]], vec![], vec![], vec![vec![1]]];
        let c = LinCat::from_subspaces(
            3,
            vec!["a".into(), "b".into()],
            &bases,
            |_, _, _, f, g| vec![fp::mul(f[0], g[0], 3)],
            |_| vec![1],
        )
        .unwrap();
        c.validate().unwrap();
        let classes = iso_classes(&c, &Default::default()).unwrap();
        assert_eq!(classes.reps, vec![0, 1]);
    }
}
