use std::fmt;
use std::sync::Arc;

use super::GAction;
use crate::cohomology::TwoCocycle;
use crate::error::{Error, Limits, Result, Violation};
use crate::exactalg::{combine, invertible_elements, FpMatrix, LexVectors};
use crate::lincat::{iso_classes, isomorphisms, unit, IsoClasses, LinCat, LinFunctor, Morphism};

/// An object `c` with isomorphisms `θ_g: c → ρ_g c` for every `g`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EquivariantObject {
    pub base: usize,
    pub theta: Vec<Morphism>,
}

impl EquivariantObject {
    /// Checks `θ_{gh} = φ_{g,h}(c) ∘ ρ_g(θ_h) ∘ θ_g` for all pairs.
    pub fn check(&self, action: &GAction) -> Result<()> {
        let grp = action.group();
        if self.theta.len() != grp.order() {
            return Err(Error::ShapeMismatch("one theta per group element required".into()));
        }
        for (g, t) in self.theta.iter().enumerate() {
            if t.len() != action.cat().dim(self.base, action.act(g, self.base)) {
                return Err(Error::ShapeMismatch(format!("theta_{g} has wrong length")));
            }
        }
        for g in grp.elements() {
            for h in grp.elements() {
                let v = relation(action, self.base, g, h, &self.theta[g], &self.theta[h]);
                if v != self.theta[grp.mul(g, h)] {
                    return Err(Violation::Linearization { g, h }.into());
                }
            }
        }
        Ok(())
    }
}

/// `φ_{g,h}(c) ∘ ρ_g(θ_h) ∘ θ_g`
fn relation(action: &GAction, c: usize, g: usize, h: usize, theta_g: &[u32], theta_h: &[u32]) -> Morphism {
    let cat = action.cat();
    let a = action.act(g, c);
    let b = action.act(h, c);
    let gb = action.act(g, b);
    let gh = action.group().mul(g, h);
    let step = cat.compose(c, a, gb, &action.act_mor(g, c, b, theta_h), theta_g);
    cat.compose(c, gb, action.act(gh, c), action.phi_at(g, h, c), &step)
}

/// Extend a partial assignment to the subgroup it generates, or report an inconsistency.
fn close(action: &GAction, c: usize, assign: &mut [Option<Morphism>]) -> bool {
    let grp = action.group();
    loop {
        let mut changed = false;
        let known: Vec<usize> = (0..assign.len()).filter(|&g| assign[g].is_some()).collect();
        for &g in &known {
            for &h in &known {
                let gh = grp.mul(g, h);
                let v = relation(action, c, g, h, assign[g].as_ref().unwrap(), assign[h].as_ref().unwrap());
                match &assign[gh] {
                    Some(w) if *w != v => return false,
                    Some(_) => {}
                    None => {
                        assign[gh] = Some(v);
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            return true;
        }
    }
}

/// All linearizations of `c`, in lexicographic order of the generator choices.
fn linearizations(action: &GAction, c: usize, phi1: &[u32], limits: &Limits) -> Result<Vec<Vec<Morphism>>> {
    let grp = action.group();
    let cat = action.cat();
    let e = grp.identity();
    let theta1 = cat
        .inverse(action.act(e, c), c, phi1)
        .ok_or_else(|| Error::NotSolvable("phi_1 is not invertible".into()))?;
    let mut start = vec![None; grp.order()];
    start[e] = Some(theta1);
    let gens = grp.generating_sequence();
    let mut out = Vec::new();
    let mut stack = vec![(0usize, start)];
    // depth-first, candidates pushed in reverse so lexicographic order is kept
    while let Some((i, assign)) = stack.pop() {
        let mut assign = assign;
        if !close(action, c, &mut assign) {
            continue;
        }
        let mut i = i;
        while i < gens.len() && assign[gens[i]].is_some() {
            i += 1;
        }
        if i == gens.len() {
            out.push(assign.into_iter().map(|t| t.expect("generated")).collect());
            continue;
        }
        let s = gens[i];
        let candidates: Vec<Morphism> = isomorphisms(cat, c, action.act(s, c), limits)?.collect();
        for f in candidates.into_iter().rev() {
            let mut next = assign.clone();
            next[s] = Some(f);
            stack.push((i + 1, next));
        }
    }
    Ok(out)
}

/// Basis of the morphisms `f: X → Y` in C with `θ'_g ∘ f = ρ_g(f) ∘ θ_g` for all `g`.
pub fn equiv_hom_basis(action: &GAction, x: &EquivariantObject, y: &EquivariantObject) -> Vec<Morphism> {
    let cat = action.cat();
    let p = cat.modulus();
    let (c, d) = (x.base, y.base);
    let dim = cat.dim(c, d);
    if dim == 0 {
        return Vec::new();
    }
    let blocks: Vec<FpMatrix> = action
        .group()
        .elements()
        .map(|g| {
            let (gc, gd) = (action.act(g, c), action.act(g, d));
            let post = cat.post_compose_matrix(c, d, gd, &y.theta[g]);
            let pre = cat.pre_compose_matrix(c, gc, gd, &x.theta[g]);
            let rho = action.rho(g).hom_matrix(c, d);
            post.sub(&pre.mul(rho).expect("shapes agree")).expect("shapes agree")
        })
        .collect();
    FpMatrix::vstack(p, dim, &blocks).kernel_basis()
}

fn is_equivariant(action: &GAction, x: &EquivariantObject, y: &EquivariantObject, f: &[u32]) -> bool {
    let cat = action.cat();
    action.group().elements().all(|g| {
        let (gc, gd) = (action.act(g, x.base), action.act(g, y.base));
        cat.compose(x.base, y.base, gd, &y.theta[g], f)
            == cat.compose(x.base, gc, gd, &action.act_mor(g, x.base, y.base, f), &x.theta[g])
    })
}

/// First isomorphism `X → Y` in C^G between objects on the same base.
fn equiv_iso_same_base(
    action: &GAction,
    x: &EquivariantObject,
    y: &EquivariantObject,
    limits: &Limits,
) -> Result<Option<Morphism>> {
    debug_assert_eq!(x.base, y.base);
    let cat = action.cat();
    let c = x.base;
    if cat.dim(c, c) == 0 {
        // zero object: the empty morphism is the isomorphism
        return Ok(Some(Vec::new()));
    }
    let basis = equiv_hom_basis(action, x, y);
    let regular: Vec<FpMatrix> = basis.iter().map(|b| cat.post_compose_matrix(c, c, c, b)).collect();
    let found = invertible_elements(cat.modulus(), &regular, limits)?.next();
    Ok(found.map(|coeffs| {
        let mut f = vec![0u32; cat.dim(c, c)];
        for (b, &a) in basis.iter().zip(&coeffs) {
            f = crate::lincat::add(cat.modulus(), &f, &crate::lincat::scale(cat.modulus(), b, a));
        }
        f
    }))
}

/// Non-fatal conditions noticed while building C^G.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Warning {
    /// The characteristic divides the group order.
    Characteristic { p: u32, order: usize },
}

impl fmt::Display for Warning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Warning::Characteristic { p, order } => {
                write!(f, "characteristic {p} divides |G| = {order}; the category need not be semisimple")
            }
        }
    }
}

/// A skeleton of the category of equivariant objects.
#[derive(Debug, Clone)]
pub struct EquivCat {
    action: Arc<GAction>,
    objects: Vec<EquivariantObject>,
    skeleton: Arc<LinCat>,
    hom_bases: Vec<Vec<Morphism>>,
    forget: Arc<LinFunctor>,
    base_classes: IsoClasses,
    warnings: Vec<Warning>,
    limits: Limits,
}

/// Per-base class counts and the sorted multiset of hom dimensions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassTable {
    pub per_base: Vec<(usize, usize)>,
    pub hom_dims: Vec<usize>,
}

impl EquivCat {
    pub fn action(&self) -> &Arc<GAction> {
        &self.action
    }

    pub fn objects(&self) -> &[EquivariantObject] {
        &self.objects
    }

    pub fn object(&self, i: usize) -> &EquivariantObject {
        &self.objects[i]
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn skeleton(&self) -> &Arc<LinCat> {
        &self.skeleton
    }

    pub fn forget(&self) -> &Arc<LinFunctor> {
        &self.forget
    }

    pub fn warnings(&self) -> &[Warning] {
        &self.warnings
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    /// Basis (in Hom_C coordinates) of the equivariant hom-space between skeleton objects.
    pub fn hom_basis(&self, i: usize, j: usize) -> &[Morphism] {
        &self.hom_bases[i * self.len() + j]
    }

    /// Express an equivariant morphism in the skeleton basis.
    pub fn coords(&self, i: usize, j: usize, f: &[u32]) -> Result<Morphism> {
        let basis = self.hom_basis(i, j);
        let cat = self.action.cat();
        if basis.is_empty() {
            return if f.iter().all(|&v| v == 0) {
                Ok(Vec::new())
            } else {
                Err(Error::NotSolvable("morphism is not equivariant".into()))
            };
        }
        let m = FpMatrix::from_columns(cat.modulus(), cat.dim(self.objects[i].base, self.objects[j].base), basis);
        m.solve(f)
            .map(|s| s.particular)
            .ok_or_else(|| Error::NotSolvable("morphism is not equivariant".into()))
    }

    /// Underlying morphism in C of a skeleton morphism.
    pub fn underlying(&self, i: usize, j: usize, f: &[u32]) -> Morphism {
        self.forget.apply(i, j, f)
    }

    /// Skeleton object isomorphic to `x`, with an isomorphism `x → skeleton[i]` in C^G
    /// given as a morphism of C.
    pub fn locate(&self, x: &EquivariantObject) -> Result<(usize, Morphism)> {
        x.check(&self.action)?;
        let cat = self.action.cat();
        let rep = self.base_classes.rep_of(x.base);
        let u = self.base_classes.to_rep[x.base].clone();
        let u_inv = self.base_classes.from_rep[x.base].clone();
        // transport θ along u: θ^u_g = ρ_g(u) ∘ θ_g ∘ u⁻¹
        let theta = self
            .action
            .group()
            .elements()
            .map(|g| {
                let gx = self.action.act(g, x.base);
                let step = cat.compose(rep, x.base, gx, &x.theta[g], &u_inv);
                cat.compose(rep, gx, self.action.act(g, rep), &self.action.act_mor(g, x.base, rep, &u), &step)
            })
            .collect();
        let moved = EquivariantObject { base: rep, theta };
        for (i, y) in self.objects.iter().enumerate() {
            if y.base != rep {
                continue;
            }
            if let Some(v) = equiv_iso_same_base(&self.action, &moved, y, &self.limits)? {
                let w = cat.compose(x.base, rep, rep, &v, &u);
                debug_assert!(is_equivariant(&self.action, x, y, &w));
                return Ok((i, w));
            }
        }
        Err(Error::NotInSkeleton(format!("object over base {}", x.base)))
    }

    pub fn is_equivariant(&self, x: &EquivariantObject, y: &EquivariantObject, f: &[u32]) -> bool {
        is_equivariant(&self.action, x, y, f)
    }

    pub fn class_table(&self) -> ClassTable {
        let mut per_base: Vec<(usize, usize)> = self.base_classes.reps.iter().map(|&r| (r, 0)).collect();
        for x in &self.objects {
            let k = self.base_classes.class_of[x.base];
            per_base[k].1 += 1;
        }
        let mut hom_dims = self.skeleton.dims().to_vec();
        hom_dims.sort_unstable();
        ClassTable { per_base, hom_dims }
    }

    /// Skeleton objects whose endomorphism algebra is local.
    pub fn indecomposables(&self) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            if is_indecomposable(&self.skeleton, i, &self.limits)? {
                out.push(i);
            }
        }
        Ok(out)
    }
}

/// A nonzero object is indecomposable iff every endomorphism is nilpotent or invertible.
pub fn is_indecomposable(cat: &LinCat, x: usize, limits: &Limits) -> Result<bool> {
    let d = cat.dim(x, x);
    if d == 0 {
        return Ok(false);
    }
    if d == 1 {
        return Ok(true);
    }
    let p = cat.modulus();
    limits.check_space(p, d)?;
    let regular: Vec<FpMatrix> = (0..d).map(|i| cat.post_compose_matrix(x, x, x, &unit(p, d, i))).collect();
    for a in LexVectors::new(p, d) {
        let m = combine(p, &regular, &a);
        if m.is_invertible() {
            continue;
        }
        let mut power = m.clone();
        for _ in 1..d {
            power = power.mul(&m).expect("square");
        }
        if !power.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Build a skeleton of C^G, one representative per isomorphism class.
pub fn equivariantize(action: Arc<GAction>, limits: &Limits) -> Result<EquivCat> {
    action.check()?;
    let cat = action.cat().clone();
    let p = cat.modulus();
    let order = action.group().order();
    let mut warnings = Vec::new();
    if order.is_multiple_of(p as usize) {
        warnings.push(Warning::Characteristic { p, order });
    }
    let phi1 = action.derive_phi1()?;
    let base_classes = iso_classes(&cat, limits)?;
    let mut objects: Vec<EquivariantObject> = Vec::new();
    for &c in &base_classes.reps {
        let first = objects.len();
        for theta in linearizations(&action, c, phi1.component(c), limits)? {
            let x = EquivariantObject { base: c, theta };
            let mut duplicate = false;
            for y in &objects[first..] {
                if equiv_iso_same_base(&action, &x, y, limits)?.is_some() {
                    duplicate = true;
                    break;
                }
            }
            if !duplicate {
                objects.push(x);
            }
        }
    }
    let n = objects.len();
    let mut hom_bases = Vec::with_capacity(n * n);
    for x in &objects {
        for y in &objects {
            hom_bases.push(equiv_hom_basis(&action, x, y));
        }
    }
    let mut per_base = vec![0usize; cat.len()];
    let labels = objects
        .iter()
        .map(|x| {
            per_base[x.base] += 1;
            format!("{}#{}", cat.label(x.base), per_base[x.base])
        })
        .collect();
    let bases_of: Vec<usize> = objects.iter().map(|x| x.base).collect();
    let skeleton = LinCat::from_subspaces(
        p,
        labels,
        &hom_bases,
        |i, j, k, f, g| cat.compose(bases_of[i], bases_of[j], bases_of[k], f, g),
        |i| cat.identity(bases_of[i]).to_vec(),
    )?;
    let skeleton = Arc::new(skeleton);
    let homs = (0..n * n)
        .map(|k| {
            let (i, j) = (k / n, k % n);
            FpMatrix::from_columns(p, cat.dim(bases_of[i], bases_of[j]), &hom_bases[k])
        })
        .collect();
    let forget = Arc::new(LinFunctor::new(skeleton.clone(), cat.clone(), bases_of, homs)?);
    Ok(EquivCat { action, objects, skeleton, hom_bases, forget, base_classes, warnings, limits: *limits })
}

/// Classes of φ-twisted representations of dimension ≤ N.
#[derive(Debug, Clone)]
pub struct TwistedReport {
    pub equiv: EquivCat,
    /// Number of classes with base k^d, indexed by d.
    pub per_dim: Vec<usize>,
    /// Number of indecomposable classes with base k^d, indexed by d.
    pub indecomposable_per_dim: Vec<usize>,
}

impl TwistedReport {
    /// Smallest positive dimension carrying an equivariant object.
    pub fn min_dim(&self) -> Option<usize> {
        (1..self.per_dim.len()).find(|&d| self.per_dim[d] > 0)
    }
}

pub fn twisted_rep_classify(p: u32, n: usize, cocycle: &TwoCocycle, limits: &Limits) -> Result<TwistedReport> {
    let action = Arc::new(super::action_from_cocycle(p, n, cocycle)?);
    let equiv = equivariantize(action, limits)?;
    let mut per_dim = vec![0; n + 1];
    for x in equiv.objects() {
        per_dim[x.base] += 1;
    }
    let mut indecomposable_per_dim = vec![0; n + 1];
    for i in equiv.indecomposables()? {
        indecomposable_per_dim[equiv.object(i).base] += 1;
    }
    Ok(TwistedReport { equiv, per_dim, indecomposable_per_dim })
}
