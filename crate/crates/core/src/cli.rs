//! Command-line front end. [`run`] is the whole program minus process exit.

use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand};

use crate::cohomology::{cocycle_check, h2_group, CyclicCoeff, TwoCocycle};
use crate::doc::{Workbench, WorkbenchDocument};
use crate::error::{Error, Limits, Result, Violation};
use crate::gaction::{equivariantize, twisted_rep_classify, EquivCat, GAction};
use crate::gfunctor::{g_adjoint_check, mate};
use crate::groups::{make_group, GroupKind};
use crate::report::Report;
use crate::sod::{bundled_a2_sod, descend_sod, SODInstance};
use crate::strictify::{strict_check, strictify};

#[derive(Debug, Parser)]
#[command(name = "equivar", version, about = "Exact checks for finite group actions on finite linear categories")]
struct Cli {
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Cap on brute-force enumerations (default 1000000).
    #[arg(long, global = true, value_name = "N")]
    max_search: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the action axioms of a document's action.
    CheckAction {
        doc: PathBuf,
        #[arg(long)]
        action: Option<String>,
    },
    /// Compute H²(G, Z/m) and optionally the class of a cocycle.
    Cohomology {
        #[arg(long)]
        group: String,
        /// Coefficient modulus m.
        #[arg(long, conflicts_with = "units")]
        coeff: Option<u64>,
        /// Use the units of F_p (m = p - 1).
        #[arg(long)]
        units: Option<u32>,
        /// Comma-separated cocycle grid, row-major over G × G.
        #[arg(long, value_delimiter = ',')]
        cocycle: Option<Vec<u64>>,
    },
    /// Build a skeleton of the equivariant category.
    Equivariantize {
        doc: PathBuf,
        #[arg(long)]
        action: Option<String>,
    },
    /// Classify twisted representations of dimension at most N.
    ClassifyTwisted {
        /// Document with group, units_of coefficients and a cocycle.
        doc: Option<PathBuf>,
        #[arg(long, requires = "p")]
        group: Option<String>,
        #[arg(long)]
        p: Option<u32>,
        #[arg(long, value_delimiter = ',')]
        cocycle: Option<Vec<u64>>,
        #[arg(long, default_value_t = 2)]
        dim: usize,
    },
    /// Transfer a lax structure across an adjunction.
    Mate {
        doc: PathBuf,
        #[arg(long)]
        adjunction: Option<String>,
    },
    /// Replace an action by a weakly equivalent strict one.
    Strictify {
        doc: PathBuf,
        #[arg(long)]
        action: Option<String>,
    },
    /// Descend a semiorthogonal pair: `a2 <p>` or a document.
    DescendSod {
        #[arg(required = true, num_args = 1..=2)]
        target: Vec<String>,
    },
    /// Parse, validate and round-trip documents.
    Validate {
        #[arg(required = true)]
        docs: Vec<PathBuf>,
    },
}

/// Run with full argv (program name first). Returns the exit code and everything to print.
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.to_string());
        }
    };
    let limits = match cli.max_search {
        Some(max_search) => Limits { max_search },
        None => Limits::default(),
    };
    let report = dispatch(&cli.command, &limits);
    let code = report.exit_code();
    let text = if cli.json { report.to_json() } else { report.to_text() };
    (code, text)
}

fn name_of(c: &Command) -> &'static str {
    match c {
        Command::CheckAction { .. } => "check-action",
        Command::Cohomology { .. } => "cohomology",
        Command::Equivariantize { .. } => "equivariantize",
        Command::ClassifyTwisted { .. } => "classify-twisted",
        Command::Mate { .. } => "mate",
        Command::Strictify { .. } => "strictify",
        Command::DescendSod { .. } => "descend-sod",
        Command::Validate { .. } => "validate",
    }
}

fn dispatch(c: &Command, limits: &Limits) -> Report {
    let mut r = Report::new(name_of(c));
    let name = name_of(c);
    r.guard(name, |r| match c {
        Command::CheckAction { doc, action } => check_action(r, doc, action.as_deref(), limits),
        Command::Cohomology { group, coeff, units, cocycle } => cohomology(r, group, *coeff, *units, cocycle.as_deref()),
        Command::Equivariantize { doc, action } => equivariantize_cmd(r, doc, action.as_deref(), limits),
        Command::ClassifyTwisted { doc, group, p, cocycle, dim } => {
            classify_twisted(r, doc.as_ref(), group.as_deref(), *p, cocycle.as_deref(), *dim, limits)
        }
        Command::Mate { doc, adjunction } => mate_cmd(r, doc, adjunction.as_deref(), limits),
        Command::Strictify { doc, action } => strictify_cmd(r, doc, action.as_deref(), limits),
        Command::DescendSod { target } => descend_sod_cmd(r, target, limits),
        Command::Validate { docs } => validate_cmd(r, docs, limits),
    });
    if r.checks.is_empty() {
        r.check(name, &Err(Error::Input("nothing to check".into())));
    }
    r
}

fn load(r: &mut Report, path: &std::path::Path, limits: &Limits) -> Result<Workbench> {
    r.input("doc", path.display());
    let doc = WorkbenchDocument::load(path)?;
    Workbench::build(&doc, limits)
}

fn pick_action(wb: &Workbench, name: Option<&str>) -> Result<Arc<GAction>> {
    match name {
        Some(n) => wb.action(n).cloned(),
        None => wb.primary_action().cloned(),
    }
}

fn check_action(r: &mut Report, doc: &std::path::Path, name: Option<&str>, limits: &Limits) -> Result<()> {
    let wb = load(r, doc, limits)?;
    let action = pick_action(&wb, name)?;
    r.check("category laws", &action.cat().validate());
    for g in action.group().elements() {
        r.check(format!("rho_{g} is a functor"), &action.rho(g).validate());
    }
    if r.check("action axioms", &action.check()) {
        r.table("normalized", action.is_normalized()?);
        r.table("phi_1", action.derive_phi1()?.components());
    }
    r.table("group", action.group().name());
    r.table("objects", action.cat().labels());
    r.table("strict", action.is_strict());
    Ok(())
}

fn cohomology(r: &mut Report, group: &str, coeff: Option<u64>, units: Option<u32>, cocycle: Option<&[u64]>) -> Result<()> {
    r.input("group", group);
    let g = Arc::new(make_group(&group.parse::<GroupKind>()?)?);
    let k = match (coeff, units) {
        (Some(m), None) => {
            r.input("coeff", m);
            CyclicCoeff::new(m)?
        }
        (None, Some(p)) => {
            r.input("units", p);
            CyclicCoeff::units_of(p)?
        }
        _ => return Err(Error::Input("give exactly one of --coeff and --units".into())),
    };
    let h2 = h2_group(g.clone(), k);
    r.table("invariant_factors", &h2.invariant_factors);
    r.table("order", h2.order());
    r.table("representatives", h2.representatives.iter().map(|c| c.values().to_vec()).collect::<Vec<_>>());
    if let Some(values) = cocycle {
        r.input("cocycle", format!("{values:?}"));
        let n = g.order();
        if values.len() != n * n {
            return Err(Error::ShapeMismatch(format!("cocycle grid needs {} entries", n * n)));
        }
        let reduced: Vec<u64> = values.iter().map(|v| v % k.order()).collect();
        let law = cocycle_check(&g, &k, &reduced).map_err(|t| Error::from(Violation::from(t)));
        if r.check("cocycle law", &law) {
            let phi = TwoCocycle::new(g, k, reduced)?;
            r.table("class", h2.class_of(&phi)?);
        }
    } else {
        r.check("invariant factors computed", &Ok(()));
    }
    Ok(())
}

/// `dimension -> number of ordered pairs of skeleton objects with that hom dimension`.
fn histogram(dims: &[usize]) -> std::collections::BTreeMap<usize, usize> {
    let mut out = std::collections::BTreeMap::new();
    for &d in dims {
        *out.entry(d).or_insert(0) += 1;
    }
    out
}

fn class_tables(r: &mut Report, prefix: &str, cg: &EquivCat) -> Result<()> {
    let base = cg.action().cat();
    let table = cg.class_table();
    let per_base: Vec<(String, usize)> = table.per_base.iter().map(|&(b, n)| (base.label(b).to_string(), n)).collect();
    r.table(&format!("{prefix}classes"), cg.len());
    r.table(&format!("{prefix}classes_per_base"), per_base);
    r.table(&format!("{prefix}hom_dim_counts"), histogram(&table.hom_dims));
    let ind = cg.indecomposables()?;
    r.table(&format!("{prefix}indecomposable_classes"), ind.len());
    r.table(&format!("{prefix}indecomposables"), ind.iter().map(|&i| cg.skeleton().label(i).to_string()).collect::<Vec<_>>());
    Ok(())
}

fn equivariantize_cmd(r: &mut Report, doc: &std::path::Path, name: Option<&str>, limits: &Limits) -> Result<()> {
    let wb = load(r, doc, limits)?;
    let action = pick_action(&wb, name)?;
    if !r.check("action axioms", &action.check()) {
        return Ok(());
    }
    let cg = equivariantize(action, limits)?;
    r.check("skeleton laws", &cg.skeleton().validate());
    class_tables(r, "", &cg)?;
    r.table("objects", cg.skeleton().labels());
    r.table("warnings", cg.warnings().iter().map(|w| w.to_string()).collect::<Vec<_>>());
    Ok(())
}

fn classify_twisted(
    r: &mut Report,
    doc: Option<&PathBuf>,
    group: Option<&str>,
    p: Option<u32>,
    cocycle: Option<&[u64]>,
    dim: usize,
    limits: &Limits,
) -> Result<()> {
    let phi = match (doc, group, p) {
        (Some(path), None, None) => {
            let wb = load(r, path, limits)?;
            wb.cocycle.clone().ok_or_else(|| Error::Input("document has no cocycle".into()))?
        }
        (None, Some(g), Some(p)) => {
            r.input("group", g).input("p", p);
            let g = Arc::new(make_group(&g.parse::<GroupKind>()?)?);
            let k = CyclicCoeff::units_of(p)?;
            match cocycle {
                Some(v) => {
                    r.input("cocycle", format!("{v:?}"));
                    TwoCocycle::new(g, k, v.to_vec())?
                }
                None => TwoCocycle::zero(g, k),
            }
        }
        _ => return Err(Error::Input("give a document or --group with --p".into())),
    };
    let link = phi.coeff().field_link().ok_or_else(|| Error::Input("coefficients must be units_of a prime".into()))?;
    r.input("dim", dim);
    let rep = twisted_rep_classify(link.p, dim, &phi, limits)?;
    r.check("cocycle law", &Ok(()));
    r.check("twisted representation laws", &rep.equiv.skeleton().validate());
    let h2 = h2_group(phi.group().clone(), *phi.coeff());
    r.table("h2_class", h2.class_of(&phi)?);
    r.table("classes_per_dim", &rep.per_dim);
    r.table("indecomposables_per_dim", &rep.indecomposable_per_dim);
    r.table("min_dim", rep.min_dim());
    r.table("hom_dim_counts", histogram(&rep.equiv.class_table().hom_dims));
    Ok(())
}

fn mate_cmd(r: &mut Report, doc: &std::path::Path, name: Option<&str>, limits: &Limits) -> Result<()> {
    let wb = load(r, doc, limits)?;
    let (key, (adj, lax_name)) = match name {
        Some(n) => wb.adjunctions.get_key_value(n).ok_or_else(|| Error::Input(format!("no adjunction `{n}`")))?,
        None => wb.adjunctions.iter().next().ok_or_else(|| Error::Input("document has no adjunction".into()))?,
    };
    r.input("adjunction", key);
    let lax_name = lax_name.as_deref().ok_or_else(|| Error::Input(format!("adjunction `{key}` names no lax functor")))?;
    let lax = wb.lax_functor(lax_name)?;
    r.input("lax", lax_name);
    let ok = [
        r.check("unit and counit natural", &adj.naturality_check()),
        r.check("triangle identities", &adj.triangle_check()),
        r.check("input pentagon", &lax.pentagon_check()),
        r.check("input identity axiom", &lax.identity_axiom_check()),
    ];
    if ok.iter().all(|&b| b) {
        let m = mate(lax, adj);
        if r.check("mate pentagon, identity axiom and invertibility", &m.as_ref().map(|_| ()).map_err(Clone::clone)) {
            let m = m?;
            let (lr, ll) = if lax.side() == crate::gfunctor::Side::Right { (lax, &m) } else { (&m, lax) };
            r.check("unit and counit G-natural", &g_adjoint_check(adj, lr, ll));
            r.table("mate_side", m.side().to_string());
            r.table("mate_delta", m.deltas());
        }
    }
    Ok(())
}

fn strictify_cmd(r: &mut Report, doc: &std::path::Path, name: Option<&str>, limits: &Limits) -> Result<()> {
    let wb = load(r, doc, limits)?;
    let action = pick_action(&wb, name)?;
    if !r.check("action axioms", &action.check()) {
        return Ok(());
    }
    let s = strictify(&action, limits)?;
    r.table("cprime_objects", s.cprime.len());
    r.table("group_order", action.group().order());
    r.check("C' laws", &s.cprime.validate());
    r.expect("strict", strict_check(&s.strict_action), || "phi' is not the identity".into());
    r.check("Phi pentagon", &s.phi.check());
    r.check("Phi weak equivalence", &s.phi.weak_equivalence_check(limits));
    let (e, f) = (equivariantize(action, limits)?, equivariantize(s.strict_action.clone(), limits)?);
    r.expect("equivariant class counts agree", e.len() == f.len(), || format!("{} vs {}", e.len(), f.len()));
    let (te, tf) = (e.class_table().hom_dims, f.class_table().hom_dims);
    r.expect("equivariant hom dimensions agree", te == tf, || format!("{te:?} vs {tf:?}"));
    r.table("equivariant_classes", e.len());
    Ok(())
}

fn sod_from_doc(wb: &Workbench, limits: &Limits) -> Result<SODInstance> {
    let action = wb.primary_action()?.clone();
    let sub = |n: &str| wb.subcategories.get(n).cloned().ok_or_else(|| Error::Input(format!("no subcategory `{n}`")));
    let (a, b) = (sub("A")?, sub("B")?);
    let (adj, _) = wb
        .adjunctions
        .values()
        .find(|(adj, _)| **adj.right() == **a.inclusion())
        .ok_or_else(|| Error::Input("no adjunction with right adjoint incl:A".into()))?;
    SODInstance::new(
        action,
        a,
        b,
        (**adj.left()).clone(),
        adj.units().to_vec(),
        adj.counits().to_vec(),
        limits,
    )
}

fn descend_sod_cmd(r: &mut Report, target: &[String], limits: &Limits) -> Result<()> {
    let instance = match target {
        [kw, p] if kw == "a2" => {
            r.input("instance", format!("a2 {p}"));
            let p: u32 = p.parse().map_err(|_| Error::Input(format!("bad prime `{p}`")))?;
            bundled_a2_sod(p, limits)
        }
        [path] => {
            let wb = load(r, std::path::Path::new(path), limits)?;
            sod_from_doc(&wb, limits)
        }
        _ => return Err(Error::Input("expected `a2 <p>` or a document path".into())),
    };
    if !r.check("instance invariants", &instance.as_ref().map(|_| ()).map_err(Clone::clone)) {
        return Ok(());
    }
    let s = instance?;
    let report = descend_sod(&s, limits)?;
    for c in &report.checks {
        r.check(c.name, &c.outcome);
    }
    class_tables(r, "", &report.cg)?;
    let labels = |sub: &crate::sod::FullSubcat| {
        sub.members().iter().map(|&i| report.cg.skeleton().label(i).to_string()).collect::<Vec<_>>()
    };
    r.table("AG", labels(&report.ag));
    r.table("BG", labels(&report.bg));
    let pg: Vec<(String, String)> = (0..report.cg.len())
        .map(|x| {
            let y = report.pg.functor.obj(x);
            (report.cg.skeleton().label(x).to_string(), report.pg.functor.target().label(y).to_string())
        })
        .collect();
    r.table("pG", pg);
    Ok(())
}

fn validate_cmd(r: &mut Report, docs: &[PathBuf], limits: &Limits) -> Result<()> {
    let names: Vec<String> = docs.iter().map(|d| d.display().to_string()).collect();
    r.input("docs", names.join(" "));
    for path in docs {
        let shown = path.display();
        let doc = match WorkbenchDocument::load(path) {
            Ok(d) => d,
            Err(e) => {
                r.check(format!("{shown}: parse"), &Err(e));
                continue;
            }
        };
        let again = WorkbenchDocument::from_toml(&doc.to_toml());
        r.expect(format!("{shown}: round trip"), again.as_ref() == Ok(&doc), || "re-parsed data differs".into());
        match Workbench::build(&doc, limits) {
            Ok(wb) => {
                for (name, outcome) in wb.validate() {
                    r.check(format!("{shown}: {name}"), &outcome);
                }
            }
            Err(e) => {
                r.check(format!("{shown}: build"), &Err(e));
            }
        }
    }
    Ok(())
}
