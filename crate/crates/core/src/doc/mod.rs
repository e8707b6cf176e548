//! The TOML document format read by the command-line tool.
//!
//! All coordinates are flat integer arrays mod `p`. Morphisms are hom-space
//! coordinate vectors; functor hom maps are row-major matrices. The main
//! category is called `C`; subcategories are addressed by their names.
//! Functor names `id:<cat>` and `incl:<subcat>` are built in.

mod bundled;

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::cohomology::{CyclicCoeff, TwoCocycle};
use crate::error::{Error, Limits, Result, Violation};
use crate::exactalg::FpMatrix;
use crate::gaction::GAction;
use crate::gfunctor::{AdjunctionData, LaxGFunctor, Side};
use crate::groups::{make_group, FinGroup, GroupKind};
use crate::lincat::{vect_cat, LinCat, LinFunctor, NatTransf};
use crate::sod::{rep_a2_cat, FullSubcat};
use crate::strictify::omega_action;

pub use bundled::bundled_documents;

pub const FORMAT_VERSION: u32 = 1;
pub const MAIN: &str = "C";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WorkbenchDocument {
    pub format_version: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coefficients: Option<CoeffSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cocycle: Option<CocycleSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub category: Option<CategorySpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub subcategories: Vec<SubcatSpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub functors: Vec<FunctorSpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub transformations: Vec<TransformationSpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub action: Vec<ActionSpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub lax_functors: Vec<LaxSpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub adjunctions: Vec<AdjunctionSpec>,
}

/// `kind` as accepted on the command line (`cyclic:4`, `klein`, `dihedral:3`, ...),
/// or an explicit multiplication table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<usize>>,
}

/// Either `Z/modulus`, or the units of `F_p` written additively via the smallest primitive root.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub units_of: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CocycleSpec {
    pub values: Vec<u64>,
}

/// `kind` is one of `vect`, `a2`, `omega`, `explicit`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CategorySpec {
    pub kind: String,
    pub p: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub labels: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub dims: Vec<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub composition: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub identities: Vec<Vec<u32>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubcatSpec {
    pub name: String,
    pub members: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctorSpec {
    pub name: String,
    #[serde(default = "main_name")]
    pub source: String,
    #[serde(default = "main_name")]
    pub target: String,
    pub objects: Vec<usize>,
    /// `homs[x·n + y]`, row-major, `dim(Fx,Fy) × dim(x,y)`.
    pub homs: Vec<Vec<u32>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransformationSpec {
    pub name: String,
    pub source: String,
    pub target: String,
    pub components: Vec<Vec<u32>>,
}

/// `kind` is one of `trivial`, `cocycle`, `scalar_grid`, `sign`, `translation`, `functors`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionSpec {
    #[serde(default = "action_name")]
    pub name: String,
    pub kind: String,
    #[serde(default = "main_name")]
    pub category: String,
    /// Overrides the document cocycle for `kind = "cocycle"`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cocycle: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grid: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub functors: Vec<String>,
    /// `phi[g·|G| + h][x]`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub phi: Vec<Vec<Vec<u32>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LaxSpec {
    pub name: String,
    pub side: String,
    pub functor: String,
    pub source: String,
    pub target: String,
    /// `delta[g][x]`.
    pub delta: Vec<Vec<Vec<u32>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdjunctionSpec {
    pub name: String,
    pub right: String,
    pub left: String,
    pub unit: Vec<Vec<u32>>,
    pub counit: Vec<Vec<u32>>,
    /// Lax structure on one of the adjoints, transferred by `mate`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lax: Option<String>,
}

fn main_name() -> String {
    MAIN.to_string()
}

fn action_name() -> String {
    "action".to_string()
}

impl WorkbenchDocument {
    pub fn empty() -> Self {
        WorkbenchDocument {
            format_version: FORMAT_VERSION,
            group: None,
            coefficients: None,
            cocycle: None,
            category: None,
            subcategories: Vec::new(),
            functors: Vec::new(),
            transformations: Vec::new(),
            action: Vec::new(),
            lax_functors: Vec::new(),
            adjunctions: Vec::new(),
        }
    }

    pub fn from_toml(text: &str) -> Result<Self> {
        let doc: WorkbenchDocument = toml::from_str(text).map_err(|e| Error::Input(format!("document: {e}")))?;
        if doc.format_version != FORMAT_VERSION {
            return Err(Error::Input(format!("unsupported format_version {}", doc.format_version)));
        }
        Ok(doc)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("documents serialize")
    }

    pub fn load(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
        Self::from_toml(&text)
    }
}

/// A document with every name resolved to library objects.
///
/// Building checks shapes and references only; [`Workbench::validate`] runs the laws.
#[derive(Debug, Clone)]
pub struct Workbench {
    pub group: Option<Arc<FinGroup>>,
    pub coeff: Option<CyclicCoeff>,
    pub cocycle: Option<TwoCocycle>,
    pub categories: BTreeMap<String, Arc<LinCat>>,
    pub subcategories: BTreeMap<String, FullSubcat>,
    pub functors: BTreeMap<String, Arc<LinFunctor>>,
    pub transformations: BTreeMap<String, NatTransf>,
    pub actions: BTreeMap<String, Arc<GAction>>,
    pub lax: BTreeMap<String, LaxGFunctor>,
    pub adjunctions: BTreeMap<String, (AdjunctionData, Option<String>)>,
    pub main_spec: Option<CategorySpec>,
}

fn group_of(spec: &GroupSpec) -> Result<FinGroup> {
    match (&spec.kind, &spec.table) {
        (Some(k), None) => make_group(&k.parse::<GroupKind>()?),
        (None, Some(t)) => {
            let order = spec.order.ok_or_else(|| Error::Input("group table needs an order".into()))?;
            make_group(&GroupKind::FromTable { order, table: t.clone() })
        }
        _ => Err(Error::Input("group needs exactly one of kind and table".into())),
    }
}

fn coeff_of(spec: &CoeffSpec) -> Result<CyclicCoeff> {
    match (spec.modulus, spec.units_of) {
        (Some(m), None) => CyclicCoeff::new(m),
        (None, Some(p)) => CyclicCoeff::units_of(p),
        _ => Err(Error::Input("coefficients need exactly one of modulus and units_of".into())),
    }
}

fn category_of(spec: &CategorySpec, group: Option<&Arc<FinGroup>>) -> Result<LinCat> {
    let dim = || spec.dim.ok_or_else(|| Error::Input(format!("{} category needs dim", spec.kind)));
    match spec.kind.as_str() {
        "vect" => vect_cat(spec.p, dim()?),
        "a2" => Ok((*rep_a2_cat(spec.p, dim()?)?.cat).clone()),
        "omega" => {
            let g = group.ok_or_else(|| Error::Input("omega category needs a group".into()))?;
            crate::strictify::omega_cat(g, spec.p)
        }
        "explicit" => {
            let n = spec.labels.len();
            if spec.dims.len() != n * n {
                return Err(Error::ShapeMismatch(format!("dims needs {} entries", n * n)));
            }
            LinCat::new(spec.p, spec.labels.clone(), spec.dims.clone(), spec.composition.clone(), spec.identities.clone())
        }
        k => Err(Error::Input(format!("unknown category kind `{k}`"))),
    }
}

fn side_of(s: &str) -> Result<Side> {
    match s {
        "right" => Ok(Side::Right),
        "left" => Ok(Side::Left),
        _ => Err(Error::Input(format!("side must be right or left, got `{s}`"))),
    }
}

impl Workbench {
    pub fn build(doc: &WorkbenchDocument, limits: &Limits) -> Result<Self> {
        let group = doc.group.as_ref().map(group_of).transpose()?.map(Arc::new);
        let coeff = doc.coefficients.as_ref().map(coeff_of).transpose()?;
        let cocycle = match &doc.cocycle {
            Some(c) => {
                let g = group.clone().ok_or_else(|| Error::Input("cocycle needs a group".into()))?;
                let k = coeff.ok_or_else(|| Error::Input("cocycle needs coefficients".into()))?;
                Some(TwoCocycle::new(g, k, c.values.clone())?)
            }
            None => None,
        };
        let mut wb = Workbench {
            group,
            coeff,
            cocycle,
            categories: BTreeMap::new(),
            subcategories: BTreeMap::new(),
            functors: BTreeMap::new(),
            transformations: BTreeMap::new(),
            actions: BTreeMap::new(),
            lax: BTreeMap::new(),
            adjunctions: BTreeMap::new(),
            main_spec: doc.category.clone(),
        };
        if let Some(spec) = &doc.category {
            wb.categories.insert(MAIN.into(), Arc::new(category_of(spec, wb.group.as_ref())?));
        }
        for s in &doc.subcategories {
            let sub = FullSubcat::new(wb.category(MAIN)?.clone(), &s.members, limits)?;
            if sub.members() != s.members.as_slice() {
                return Err(Error::Input(format!("subcategory `{}` is not closed under isomorphism", s.name)));
            }
            wb.insert_unique_cat(&s.name, sub.cat().clone())?;
            wb.subcategories.insert(s.name.clone(), sub);
        }
        for f in &doc.functors {
            let (src, tgt) = (wb.category(&f.source)?.clone(), wb.category(&f.target)?.clone());
            let n = src.len();
            if f.objects.len() != n || f.homs.len() != n * n {
                return Err(Error::ShapeMismatch(format!("functor `{}` has the wrong number of entries", f.name)));
            }
            if let Some(&y) = f.objects.iter().find(|&&y| y >= tgt.len()) {
                return Err(Error::Input(format!("functor `{}` sends an object to {y}", f.name)));
            }
            let homs = (0..n * n)
                .map(|k| {
                    let (x, y) = (k / n, k % n);
                    let rows = tgt.dim(f.objects[x], f.objects[y]);
                    FpMatrix::new(src.modulus(), rows, src.dim(x, y), f.homs[k].clone())
                })
                .collect::<Result<Vec<_>>>()?;
            let functor = LinFunctor::new(src, tgt, f.objects.clone(), homs)?;
            wb.insert_unique(&f.name)?;
            wb.functors.insert(f.name.clone(), Arc::new(functor));
        }
        for t in &doc.transformations {
            let nt = NatTransf::new(wb.functor(&t.source)?, wb.functor(&t.target)?, t.components.clone())?;
            wb.transformations.insert(t.name.clone(), nt);
        }
        for a in &doc.action {
            let action = wb.action_of(a)?;
            if wb.actions.insert(a.name.clone(), Arc::new(action)).is_some() {
                return Err(Error::Input(format!("duplicate action `{}`", a.name)));
            }
        }
        for l in &doc.lax_functors {
            let lax = LaxGFunctor::new(
                side_of(&l.side)?,
                wb.action(&l.source)?.clone(),
                wb.action(&l.target)?.clone(),
                wb.functor(&l.functor)?,
                l.delta.clone(),
            )?;
            wb.lax.insert(l.name.clone(), lax);
        }
        for a in &doc.adjunctions {
            let adj = AdjunctionData::unchecked(wb.functor(&a.right)?, wb.functor(&a.left)?, a.unit.clone(), a.counit.clone())?;
            if let Some(l) = &a.lax {
                wb.lax_functor(l)?;
            }
            wb.adjunctions.insert(a.name.clone(), (adj, a.lax.clone()));
        }
        Ok(wb)
    }

    fn insert_unique_cat(&mut self, name: &str, cat: Arc<LinCat>) -> Result<()> {
        if self.categories.insert(name.to_string(), cat).is_some() {
            return Err(Error::Input(format!("duplicate category `{name}`")));
        }
        Ok(())
    }

    fn insert_unique(&self, name: &str) -> Result<()> {
        if self.functors.contains_key(name) || name.contains(':') {
            return Err(Error::Input(format!("functor name `{name}` is taken or reserved")));
        }
        Ok(())
    }

    pub fn category(&self, name: &str) -> Result<&Arc<LinCat>> {
        self.categories.get(name).ok_or_else(|| Error::Input(format!("no category `{name}`")))
    }

    pub fn functor(&self, name: &str) -> Result<Arc<LinFunctor>> {
        if let Some(c) = name.strip_prefix("id:") {
            return Ok(Arc::new(LinFunctor::identity(self.category(c)?.clone())));
        }
        if let Some(s) = name.strip_prefix("incl:") {
            let sub = self.subcategories.get(s).ok_or_else(|| Error::Input(format!("no subcategory `{s}`")))?;
            return Ok(sub.inclusion().clone());
        }
        self.functors.get(name).cloned().ok_or_else(|| Error::Input(format!("no functor `{name}`")))
    }

    pub fn action(&self, name: &str) -> Result<&Arc<GAction>> {
        self.actions.get(name).ok_or_else(|| Error::Input(format!("no action `{name}`")))
    }

    pub fn lax_functor(&self, name: &str) -> Result<&LaxGFunctor> {
        self.lax.get(name).ok_or_else(|| Error::Input(format!("no lax functor `{name}`")))
    }

    /// The only action, or the one called `action`.
    pub fn primary_action(&self) -> Result<&Arc<GAction>> {
        if self.actions.len() == 1 {
            return Ok(self.actions.values().next().expect("one action"));
        }
        self.action("action")
    }

    pub fn group(&self) -> Result<&Arc<FinGroup>> {
        self.group.as_ref().ok_or_else(|| Error::Input("document has no group".into()))
    }

    fn action_of(&self, a: &ActionSpec) -> Result<GAction> {
        let group = self.group()?.clone();
        let cat = self.category(&a.category)?.clone();
        let n = group.order();
        match a.kind.as_str() {
            "trivial" => Ok(GAction::trivial(group, cat)),
            "cocycle" => {
                let phi = match &a.cocycle {
                    Some(v) => {
                        let k = self.coeff.ok_or_else(|| Error::Input("cocycle needs coefficients".into()))?;
                        TwoCocycle::new(group.clone(), k, v.clone())?
                    }
                    None => self.cocycle.clone().ok_or_else(|| Error::Input("action needs a cocycle".into()))?,
                };
                let link = phi
                    .coeff()
                    .field_link()
                    .ok_or_else(|| Error::Input("cocycle action needs units_of coefficients".into()))?;
                if link.p != cat.modulus() {
                    return Err(Error::ModulusMismatch(link.p, cat.modulus()));
                }
                let grid: Vec<u32> = phi.values().iter().map(|&v| phi.coeff().to_scalar(v).expect("linked")).collect();
                GAction::from_scalar_grid(group, cat, &grid)
            }
            "scalar_grid" => {
                let grid = a.grid.as_ref().ok_or_else(|| Error::Input("scalar_grid action needs grid".into()))?;
                GAction::from_scalar_grid(group, cat, grid)
            }
            "sign" => {
                let dim = match &self.main_spec {
                    Some(CategorySpec { kind, dim: Some(d), .. }) if kind == "a2" && a.category == MAIN && n == 2 => *d,
                    _ => return Err(Error::Input("sign action needs the a2 category and a group of order 2".into())),
                };
                rep_a2_cat(cat.modulus(), dim)?.sign_action()
            }
            "translation" => {
                let act = omega_action(group, cat.modulus())?;
                if **act.cat() != *cat {
                    return Err(Error::Input("translation action needs the omega category".into()));
                }
                Ok(act)
            }
            "functors" => {
                let rho = a.functors.iter().map(|f| self.functor(f)).collect::<Result<Vec<_>>>()?;
                GAction::new(group, cat, rho, a.phi.clone())
            }
            k => Err(Error::Input(format!("unknown action kind `{k}`"))),
        }
    }

    /// Every law of every section, in document order of kinds.
    pub fn validate(&self) -> Vec<(String, Result<()>)> {
        let mut out = Vec::new();
        if let Some(c) = &self.cocycle {
            let r = crate::cohomology::cocycle_check(c.group(), c.coeff(), c.values()).map_err(|t| Violation::from(t).into());
            out.push(("cocycle".to_string(), r));
        }
        for (n, c) in &self.categories {
            out.push((format!("category {n}"), c.validate()));
        }
        for (n, f) in &self.functors {
            out.push((format!("functor {n}"), f.validate()));
        }
        for (n, t) in &self.transformations {
            out.push((format!("transformation {n}"), t.validate()));
        }
        for (n, a) in &self.actions {
            out.push((format!("action {n}"), a.check()));
        }
        for (n, l) in &self.lax {
            out.push((format!("lax functor {n}"), l.check()));
        }
        for (n, (a, _)) in &self.adjunctions {
            out.push((format!("adjunction {n}"), a.naturality_check().and_then(|_| a.triangle_check())));
        }
        out
    }
}

/// Explicit form of a category.
pub fn category_spec(cat: &LinCat) -> CategorySpec {
    let n = cat.len();
    let mut composition = Vec::with_capacity(n * n * n);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                composition.push(cat.tensor(x, y, z).to_vec());
            }
        }
    }
    CategorySpec {
        kind: "explicit".into(),
        p: cat.modulus(),
        dim: None,
        labels: cat.labels().to_vec(),
        dims: cat.dims().to_vec(),
        composition,
        identities: cat.objects().map(|x| cat.identity(x).to_vec()).collect(),
    }
}

pub fn functor_spec(name: &str, source: &str, target: &str, f: &LinFunctor) -> FunctorSpec {
    FunctorSpec {
        name: name.into(),
        source: source.into(),
        target: target.into(),
        objects: f.obj_map().to_vec(),
        homs: f.hom_matrices().iter().map(|m| m.data().to_vec()).collect(),
    }
}

pub fn lax_spec(name: &str, functor: &str, source: &str, target: &str, l: &LaxGFunctor) -> LaxSpec {
    LaxSpec {
        name: name.into(),
        side: l.side().to_string(),
        functor: functor.into(),
        source: source.into(),
        target: target.into(),
        delta: l.deltas().to_vec(),
    }
}

pub fn group_spec(kind: &str) -> GroupSpec {
    GroupSpec { kind: Some(kind.into()), order: None, table: None }
}

pub fn action_spec(name: &str, kind: &str) -> ActionSpec {
    ActionSpec {
        name: name.into(),
        kind: kind.into(),
        category: MAIN.into(),
        cocycle: None,
        grid: None,
        functors: Vec::new(),
        phi: Vec::new(),
    }
}

/// Spell out an action as functors plus `φ` components; functors are named `<prefix>rho<g>`.
pub fn explicit_action(doc: &mut WorkbenchDocument, name: &str, category: &str, prefix: &str, a: &GAction) {
    let mut spec = action_spec(name, "functors");
    spec.category = category.into();
    for g in a.group().elements() {
        let fname = format!("{prefix}rho{g}");
        doc.functors.push(functor_spec(&fname, category, category, a.rho(g)));
        spec.functors.push(fname);
    }
    let n = a.group().order();
    spec.phi = (0..n * n).map(|k| a.phi(k / n, k % n).components().to_vec()).collect();
    doc.action.push(spec);
}

