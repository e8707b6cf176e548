use std::sync::Arc;

use super::{unit, LinCat, Morphism};
use crate::error::{Error, Result, Violation};
use crate::exactalg::FpMatrix;

/// A linear functor, stored as an object map and one matrix per hom-space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinFunctor {
    source: Arc<LinCat>,
    target: Arc<LinCat>,
    obj_map: Vec<usize>,
    /// `homs[x * n + y]` has shape `dim(Fx, Fy) × dim(x, y)`.
    homs: Vec<FpMatrix>,
}

fn same_cat(a: &Arc<LinCat>, b: &Arc<LinCat>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl LinFunctor {
    pub fn new(
        source: Arc<LinCat>,
        target: Arc<LinCat>,
        obj_map: Vec<usize>,
        homs: Vec<FpMatrix>,
    ) -> Result<Self> {
        let n = source.len();
        if source.modulus() != target.modulus() {
            return Err(Error::ModulusMismatch(source.modulus(), target.modulus()));
        }
        if obj_map.len() != n || obj_map.iter().any(|&y| y >= target.len()) {
            return Err(Error::ShapeMismatch("object map does not fit the categories".into()));
        }
        if homs.len() != n * n {
            return Err(Error::ShapeMismatch(format!("functor needs {} hom matrices", n * n)));
        }
        for x in 0..n {
            for y in 0..n {
                let m = &homs[x * n + y];
                let want = (target.dim(obj_map[x], obj_map[y]), source.dim(x, y));
                if (m.rows(), m.cols()) != want || m.modulus() != source.modulus() {
                    return Err(Error::ShapeMismatch(format!(
                        "hom matrix ({x},{y}) should be {}x{}",
                        want.0, want.1
                    )));
                }
            }
        }
        Ok(LinFunctor { source, target, obj_map, homs })
    }

    pub fn identity(c: Arc<LinCat>) -> Self {
        let n = c.len();
        let homs = (0..n * n)
            .map(|k| FpMatrix::identity(c.modulus(), c.dim(k / n, k % n)))
            .collect();
        LinFunctor { source: c.clone(), target: c, obj_map: (0..n).collect(), homs }
    }

    pub fn source(&self) -> &Arc<LinCat> {
        &self.source
    }

    pub fn target(&self) -> &Arc<LinCat> {
        &self.target
    }

    pub fn obj(&self, x: usize) -> usize {
        self.obj_map[x]
    }

    pub fn obj_map(&self) -> &[usize] {
        &self.obj_map
    }

    pub fn hom_matrix(&self, x: usize, y: usize) -> &FpMatrix {
        &self.homs[x * self.source.len() + y]
    }

    pub fn hom_matrices(&self) -> &[FpMatrix] {
        &self.homs
    }

    /// Image of `f: x → y`.
    pub fn apply(&self, x: usize, y: usize, f: &[u32]) -> Morphism {
        self.hom_matrix(x, y).apply(f)
    }

    /// Checks preservation of identities and of composition on basis pairs.
    pub fn validate(&self) -> Result<()> {
        let (c, d) = (&*self.source, &*self.target);
        let p = c.modulus();
        for x in c.objects() {
            if self.apply(x, x, c.identity(x)) != d.identity(self.obj(x)) {
                return Err(Violation::FunctorIdentity { object: x }.into());
            }
        }
        for x in c.objects() {
            for y in c.objects() {
                let dxy = c.dim(x, y);
                if dxy == 0 {
                    continue;
                }
                for z in c.objects() {
                    let dyz = c.dim(y, z);
                    for i in 0..dyz {
                        let f = unit(p, dyz, i);
                        let ff = self.apply(y, z, &f);
                        for j in 0..dxy {
                            let g = unit(p, dxy, j);
                            let lhs = self.apply(x, z, &c.compose(x, y, z, &f, &g));
                            let rhs = d.compose(
                                self.obj(x),
                                self.obj(y),
                                self.obj(z),
                                &ff,
                                &self.apply(x, y, &g),
                            );
                            if lhs != rhs {
                                return Err(Violation::FunctorComposition {
                                    objects: [x, y, z],
                                    basis: [i, j],
                                }
                                .into());
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// First hom-space (lexicographic) on which the functor is not bijective.
    pub fn fully_faithful_check(&self) -> Result<()> {
        for x in self.source.objects() {
            for y in self.source.objects() {
                let m = self.hom_matrix(x, y);
                if m.rows() != m.cols() || m.rank() != m.cols() {
                    return Err(Violation::NotFullyFaithful { source: x, target: y }.into());
                }
            }
        }
        Ok(())
    }

    pub fn is_fully_faithful(&self) -> bool {
        self.fully_faithful_check().is_ok()
    }

    pub fn faithful_check(&self) -> Result<()> {
        for x in self.source.objects() {
            for y in self.source.objects() {
                let m = self.hom_matrix(x, y);
                if m.rank() != m.cols() {
                    return Err(Violation::NotFaithful { source: x, target: y }.into());
                }
            }
        }
        Ok(())
    }

    /// Objects of the target not isomorphic to any object in the image.
    pub fn essential_surjectivity_check(&self) -> Result<()> {
        let d = &*self.target;
        for y in d.objects() {
            let hit = self
                .obj_map
                .iter()
                .any(|&fx| fx == y || super::find_iso(d, fx, y).is_some());
            if !hit {
                return Err(Violation::NotEssentiallySurjective { object: y }.into());
            }
        }
        Ok(())
    }

    /// Fully faithful and essentially surjective.
    pub fn equivalence_check(&self) -> Result<()> {
        self.fully_faithful_check()?;
        self.essential_surjectivity_check()
    }

    pub fn is_identity(&self) -> bool {
        same_cat(&self.source, &self.target)
            && self.obj_map.iter().enumerate().all(|(i, &j)| i == j)
            && self.homs.iter().all(|m| m.rows() == m.cols() && *m == FpMatrix::identity(m.modulus(), m.rows()))
    }

    pub fn into_arc(self) -> Arc<LinFunctor> {
        Arc::new(self)
    }
}

/// `outer ∘ inner`.
pub fn compose_functors(outer: &LinFunctor, inner: &LinFunctor) -> Result<LinFunctor> {
    if !same_cat(&inner.target, &outer.source) {
        return Err(Error::ShapeMismatch("functors are not composable".into()));
    }
    let n = inner.source.len();
    let obj_map: Vec<usize> = inner.obj_map.iter().map(|&y| outer.obj(y)).collect();
    let homs = (0..n * n)
        .map(|k| {
            let (x, y) = (k / n, k % n);
            outer.hom_matrix(inner.obj(x), inner.obj(y)).mul(inner.hom_matrix(x, y))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(LinFunctor { source: inner.source.clone(), target: outer.target.clone(), obj_map, homs })
}

/// A natural transformation `source ⇒ target`, one component `source(x) → target(x)` per object.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NatTransf {
    source: Arc<LinFunctor>,
    target: Arc<LinFunctor>,
    components: Vec<Morphism>,
}

impl NatTransf {
    pub fn new(source: Arc<LinFunctor>, target: Arc<LinFunctor>, components: Vec<Morphism>) -> Result<Self> {
        if !same_cat(&source.source, &target.source) || !same_cat(&source.target, &target.target) {
            return Err(Error::ShapeMismatch("functors have different source or target".into()));
        }
        let c = &source.source;
        let d = &source.target;
        if components.len() != c.len() {
            return Err(Error::ShapeMismatch("one component per object required".into()));
        }
        let components = components
            .into_iter()
            .enumerate()
            .map(|(x, v)| {
                if v.len() != d.dim(source.obj(x), target.obj(x)) {
                    Err(Error::ShapeMismatch(format!("component at {x} has wrong length")))
                } else {
                    Ok(v.into_iter().map(|a| a % d.modulus()).collect())
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(NatTransf { source, target, components })
    }

    pub fn identity(f: Arc<LinFunctor>) -> Self {
        Self::scalar(f, 1)
    }

    /// `c · id_F`.
    pub fn scalar(f: Arc<LinFunctor>, c: u32) -> Self {
        let d = f.target.clone();
        let components = f
            .source
            .objects()
            .map(|x| super::scale(d.modulus(), d.identity(f.obj(x)), c))
            .collect();
        NatTransf { source: f.clone(), target: f, components }
    }

    pub fn source(&self) -> &Arc<LinFunctor> {
        &self.source
    }

    pub fn target(&self) -> &Arc<LinFunctor> {
        &self.target
    }

    pub fn component(&self, x: usize) -> &[u32] {
        &self.components[x]
    }

    pub fn components(&self) -> &[Morphism] {
        &self.components
    }

    /// Checks `G(f) ∘ μ_x = μ_y ∘ F(f)` on every basis morphism.
    pub fn validate(&self) -> Result<()> {
        let c = &*self.source.source;
        let d = &*self.source.target;
        let (f, g) = (&*self.source, &*self.target);
        for x in c.objects() {
            for y in c.objects() {
                for b in 0..c.dim(x, y) {
                    let m = unit(c.modulus(), c.dim(x, y), b);
                    let lhs = d.compose(f.obj(x), g.obj(x), g.obj(y), &g.apply(x, y, &m), self.component(x));
                    let rhs = d.compose(f.obj(x), f.obj(y), g.obj(y), self.component(y), &f.apply(x, y, &m));
                    if lhs != rhs {
                        return Err(Violation::Naturality { source: x, target: y, basis: b }.into());
                    }
                }
            }
        }
        Ok(())
    }

    /// Componentwise inverse, if every component is invertible.
    pub fn inverse(&self) -> Option<NatTransf> {
        let d = &*self.source.target;
        let components = self
            .source
            .source
            .objects()
            .map(|x| d.inverse(self.source.obj(x), self.target.obj(x), self.component(x)))
            .collect::<Option<Vec<_>>>()?;
        Some(NatTransf { source: self.target.clone(), target: self.source.clone(), components })
    }

    pub fn is_nat_iso(&self) -> bool {
        self.inverse().is_some()
    }

    /// First object where the component is not invertible.
    pub fn first_non_iso(&self) -> Option<usize> {
        let d = &*self.source.target;
        self.source
            .source
            .objects()
            .find(|&x| !d.is_iso(self.source.obj(x), self.target.obj(x), self.component(x)))
    }

    pub fn is_identity(&self) -> bool {
        *self.source == *self.target
            && self
                .source
                .source
                .objects()
                .all(|x| self.component(x) == self.source.target.identity(self.source.obj(x)))
    }
}

/// Vertical composite `ν ∘ μ` for `μ: F ⇒ G`, `ν: G ⇒ H`.
pub fn vcompose(nu: &NatTransf, mu: &NatTransf) -> Result<NatTransf> {
    if *mu.target != *nu.source {
        return Err(Error::ShapeMismatch("transformations are not composable".into()));
    }
    let d = &*mu.source.target;
    let components = mu
        .source
        .source
        .objects()
        .map(|x| {
            d.compose(
                mu.source.obj(x),
                mu.target.obj(x),
                nu.target.obj(x),
                nu.component(x),
                mu.component(x),
            )
        })
        .collect();
    Ok(NatTransf { source: mu.source.clone(), target: nu.target.clone(), components })
}

/// `F μ : F G ⇒ F H` with components `F(μ_x)`.
pub fn whisker_left(f: &Arc<LinFunctor>, mu: &NatTransf) -> Result<NatTransf> {
    let source = Arc::new(compose_functors(f, &mu.source)?);
    let target = Arc::new(compose_functors(f, &mu.target)?);
    let components = mu
        .source
        .source
        .objects()
        .map(|x| f.apply(mu.source.obj(x), mu.target.obj(x), mu.component(x)))
        .collect();
    Ok(NatTransf { source, target, components })
}

/// `μ F : G F ⇒ H F` with components `μ_{F x}`.
pub fn whisker_right(mu: &NatTransf, f: &Arc<LinFunctor>) -> Result<NatTransf> {
    let source = Arc::new(compose_functors(&mu.source, f)?);
    let target = Arc::new(compose_functors(&mu.target, f)?);
    let components = f.source.objects().map(|x| mu.component(f.obj(x)).to_vec()).collect();
    Ok(NatTransf { source, target, components })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lincat::vect_cat;

    fn vect(p: u32, n: usize) -> Arc<LinCat> {
        Arc::new(vect_cat(p, n).unwrap())
    }

    /// Conjugation by an invertible matrix on the object k^2, identity elsewhere.
    fn conjugation(c: &Arc<LinCat>, q: &FpMatrix) -> LinFunctor {
        let p = c.modulus();
        let n = c.len();
        let qi = q.inverse().unwrap();
        let side = |x: usize| if x == 2 { (q.clone(), qi.clone()) } else {
            (FpMatrix::identity(p, x), FpMatrix::identity(p, x))
        };
        let mut homs = Vec::new();
        for x in 0..n {
            for y in 0..n {
                let (_, ix) = side(x);
                let (qy, _) = side(y);
                // f ↦ qy f ix, f an y×x matrix with basis E_ij at i*x+j
                let cols: Vec<Vec<u32>> = (0..x * y)
                    .map(|b| {
                        let mut e = FpMatrix::zeros(p, y, x);
                        e.set(b / x, b % x, 1);
                        qy.mul(&e).unwrap().mul(&ix).unwrap().into_data()
                    })
                    .collect();
                homs.push(FpMatrix::from_columns(p, x * y, &cols));
            }
        }
        LinFunctor::new(c.clone(), c.clone(), (0..n).collect(), homs).unwrap()
    }

    #[test]
    fn identity_functor_is_valid_and_ff() {
        let c = vect(3, 2);
        let id = LinFunctor::identity(c);
        id.validate().unwrap();
        id.equivalence_check().unwrap();
        assert!(id.is_identity());
    }

    #[test]
    fn conjugation_is_a_functor_and_composes() {
        let c = vect(5, 2);
        let q = FpMatrix::from_rows(5, &[vec![1, 2], vec![0, 1]]).unwrap();
        let f = conjugation(&c, &q);
        f.validate().unwrap();
        let qi = q.inverse().unwrap();
        let g = conjugation(&c, &qi);
        assert!(compose_functors(&g, &f).unwrap().is_identity());
    }

    #[test]
    fn broken_hom_matrix_is_caught() {
        let c = vect(3, 2);
        let id = LinFunctor::identity(c.clone());
        let mut homs = id.hom_matrices().to_vec();
        homs[2 * 3 + 2] = FpMatrix::zeros(3, 4, 4);
        let f = LinFunctor::new(c.clone(), c, vec![0, 1, 2], homs).unwrap();
        assert!(matches!(f.validate(), Err(Error::Violation(Violation::FunctorIdentity { object: 2 }))));
        assert!(matches!(
            f.fully_faithful_check(),
            Err(Error::Violation(Violation::NotFullyFaithful { source: 2, target: 2 }))
        ));
    }

    #[test]
    fn conjugating_transformation_is_natural() {
        let c = vect(5, 2);
        let q = FpMatrix::from_rows(5, &[vec![1, 2], vec![0, 1]]).unwrap();
        let f = Arc::new(conjugation(&c, &q));
        let id = Arc::new(LinFunctor::identity(c.clone()));
        // μ: id ⇒ F with components 1 on k and q on k^2
        let mu = NatTransf::new(id.clone(), f.clone(), vec![vec![], vec![1], q.data().to_vec()]).unwrap();
        mu.validate().unwrap();
        assert!(mu.is_nat_iso());
        let back = vcompose(&mu.inverse().unwrap(), &mu).unwrap();
        assert!(back.is_identity());
        // a wrong component breaks naturality
        let bad = NatTransf::new(id, f, vec![vec![], vec![1], vec![1, 0, 0, 1]]).unwrap();
        assert!(matches!(bad.validate(), Err(Error::Violation(Violation::Naturality { .. }))));
    }

    #[test]
    fn whiskering_components() {
        let c = vect(5, 2);
        let q = FpMatrix::from_rows(5, &[vec![2, 0], vec![1, 1]]).unwrap();
        let f = Arc::new(conjugation(&c, &q));
        let id = Arc::new(LinFunctor::identity(c.clone()));
        let mu = NatTransf::scalar(id, 3);
        let left = whisker_left(&f, &mu).unwrap();
        let right = whisker_right(&mu, &f).unwrap();
        left.validate().unwrap();
        right.validate().unwrap();
        assert_eq!(left.component(2), &[3, 0, 0, 3][..]);
        assert_eq!(right.component(1), &[3][..]);
    }
}
