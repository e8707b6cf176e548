//! One line per acceptance criterion. Runs without the libtest harness so the
//! lines are always printed.

mod common;

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::Command;
use std::sync::Arc;
use std::time::{Duration, Instant};

use common::*;
use equivar::cohomology::{cocycle_check, h2_group, CyclicCoeff, TwoCocycle};
use equivar::doc::{bundled_documents, Workbench};
use equivar::error::Limits;
use equivar::gaction::{action_from_cocycle, equivariantize, twisted_rep_classify, GAction};
use equivar::gfunctor::{compose_lax, g_adjoint_check, mate};
use equivar::lincat::vect_cat;
use equivar::sod::{bundled_a2_sod, descend_sod};
use equivar::strictify::{strict_check, strictify};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (u8, &'static str, u64, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>, what: &str) -> Result<T, String> {
    r.map_err(|e| format!("{what}: {e}"))
}

fn associativity_iff_cocycle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let (mut grids, mut cocycles) = (0, 0);
    for name in ["cyclic:2", "cyclic:3", "klein"] {
        let g = group(name);
        let n = g.order();
        for p in [3u32, 5, 7] {
            let coeff = ok(CyclicCoeff::units_of(p), "coefficients")?;
            let m = u64::from(p - 1);
            let r = primitive_root(u64::from(p));
            for i in 0..30 {
                // half uniform grids, half cocycles in random classes
                let exps: Vec<u64> = if i % 2 == 0 {
                    (0..n * n).map(|_| rng.random_range(0..m)).collect()
                } else {
                    random_cocycle(&mut rng, &g, p).values().to_vec()
                };
                let grid: Vec<u32> = exps.iter().map(|&e| pow_mod(r, e, u64::from(p)) as u32).collect();
                let cat = Arc::new(ok(vect_cat(p, 1), "vect")?);
                let action = ok(GAction::from_scalar_grid(g.clone(), cat, &grid), "grid")?;
                let is_action = action.check().is_ok();
                let is_cocycle = cocycle_check(&g, &coeff, &exps).is_ok();
                ensure!(is_cocycle == satisfies_cocycle_law(&g, m, &exps), "cocycle_check disagrees with the law on {exps:?}");
                ensure!(is_action == is_cocycle, "{name} p={p} {exps:?}: action {is_action}, cocycle {is_cocycle}");
                if is_cocycle {
                    let phi = ok(TwoCocycle::new(g.clone(), coeff, exps.clone()), "cocycle")?;
                    ok(ok(action_from_cocycle(p, 2, &phi), "action_from_cocycle")?.check(), "action check")?;
                    cocycles += 1;
                }
                grids += 1;
            }
        }
    }
    Ok(format!("{grids} grids, {cocycles} cocycles"))
}

fn h2_matches_brute_force() -> Outcome {
    let mut cases = 0;
    for name in ["cyclic:1", "cyclic:2", "cyclic:3", "cyclic:4", "klein"] {
        let g = group(name);
        for m in 1..=4u64 {
            let h2 = h2_group(g.clone(), ok(CyclicCoeff::new(m), "coefficients")?);
            let brute = brute_h2_order(&g, m);
            ensure!(h2.order() == brute, "{name}, Z/{m}: {} vs brute force {brute}", h2.order());
            ensure!(h2.invariant_factors.iter().product::<u64>() == brute, "{name}, Z/{m}: factors {:?}", h2.invariant_factors);
            cases += 1;
        }
    }
    for n in 1..=6u64 {
        for m in 1..=6u64 {
            let h2 = h2_group(group(&format!("cyclic:{n}")), ok(CyclicCoeff::new(m), "coefficients")?);
            ensure!(h2.order() == gcd(n, m), "Z/{n}, Z/{m}: {} vs gcd {}", h2.order(), gcd(n, m));
            cases += 1;
        }
    }
    Ok(format!("{cases} (group, coefficient) pairs"))
}

fn scalars(action: &GAction, x: usize) -> impl Fn(usize, usize) -> u64 + '_ {
    move |a, b| u64::from(action.phi_at(a, b, x)[0])
}

fn equivariantization_counts() -> Outcome {
    let limits = Limits::default();
    let z2 = group("cyclic:2");
    let trivial = Arc::new(GAction::trivial(z2.clone(), Arc::new(ok(vect_cat(3, 2), "vect")?)));
    let count = ok(equivariantize(trivial, &limits), "equivariantize")?.len();
    let oracle: usize = (0..=2).map(|d| twisted_class_count(3, d, &z2, |_, _| 1)).sum();
    ensure!(count == 6 && oracle == 6, "trivial Z/2 on vect(3,2): {count} classes, oracle {oracle}");

    let z3 = group("cyclic:3");
    let zero = TwoCocycle::zero(z3.clone(), ok(CyclicCoeff::units_of(7), "coefficients")?);
    let report = ok(twisted_rep_classify(7, 1, &zero, &limits), "classify")?;
    let oracle = twisted_class_count(7, 1, &z3, |_, _| 1);
    ensure!(report.per_dim[1] == 3 && oracle == 3, "Z/3 over F_7: {} one-dimensional classes, oracle {oracle}", report.per_dim[1]);

    let klein = group("klein");
    let h2 = h2_group(klein.clone(), ok(CyclicCoeff::units_of(5), "coefficients")?);
    let mut seen = Vec::new();
    for class in h2.all_classes().into_iter().filter(|c| c.iter().any(|&x| x != 0)) {
        let phi = h2.representative(&class);
        let report = ok(twisted_rep_classify(5, 2, &phi, &limits), "classify")?;
        let action = ok(action_from_cocycle(5, 1, &phi), "action")?;
        let d1 = twisted_class_count(5, 1, &klein, scalars(&action, 1));
        let d2 = twisted_class_count(5, 2, &klein, scalars(&action, 1));
        ensure!(report.per_dim[1] == 0 && d1 == 0, "V4 class {class:?}: dim-1 classes {} / oracle {d1}", report.per_dim[1]);
        ensure!(report.per_dim[2] >= 1 && report.per_dim[2] == d2, "V4 class {class:?}: dim-2 classes {} / oracle {d2}", report.per_dim[2]);
        seen.push(d2);
    }
    Ok(format!("6, 3, and dim-2 counts {seen:?} over the nontrivial V4 classes"))
}

fn weakness_lemma() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let (mut weak, mut idempotent) = (0, 0);
    let total = 150;
    for _ in 0..total {
        let lax = random_doubling(&mut rng);
        ok(lax.pentagon_check(), "generated instance is not lax")?;
        let w = ok(lax.weakness_criteria(), "weakness criteria")?;
        ensure!(w.delta1_iso == w.identity_axiom && w.identity_axiom == w.all_iso, "disagreement {w:?}");
        if w.delta1_iso {
            let eps = ok(lax.epsilon(), "epsilon")?;
            let d = lax.target_action().cat();
            for (c, e) in eps.iter().enumerate() {
                let fc = lax.functor().obj(c);
                ensure!(d.compose(fc, fc, fc, e, e) == *e, "epsilon not idempotent at {c}");
            }
            idempotent += 1;
        }
        weak += usize::from(w.is_weak());
    }
    Ok(format!("{total} instances, {weak} weak, epsilon idempotent on {idempotent}"))
}

fn closure_under_composition_and_mates() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..60 {
        let (l1, l2) = random_composable(&mut rng);
        ok(ok(compose_lax(&l1, &l2), "compose")?.pentagon_check(), "composite pentagon")?;
    }
    let mut adjunctions = Vec::new();
    for (stem, doc) in ok(bundled_documents(), "documents")? {
        let wb = ok(Workbench::build(&doc, &Limits::default()), stem)?;
        for (name, (adj, lax)) in &wb.adjunctions {
            if let Some(lax) = lax {
                adjunctions.push((format!("{stem}/{name}"), ok(wb.lax_functor(lax), "lax")?.clone(), adj.clone()));
            }
        }
    }
    let sod = ok(bundled_a2_sod(5, &Limits::default()), "a2")?;
    adjunctions.push(("a2 p ⊣ i".into(), sod.inclusion().clone(), sod.adjunction().clone()));
    let bundled = adjunctions.len();
    for _ in 0..60 {
        let (lr, adj) = random_conjugation(&mut rng);
        adjunctions.push(("generated".into(), lr, adj));
    }
    for (name, lr, adj) in &adjunctions {
        let ll = ok(mate(lr, adj), name)?;
        ok(ll.pentagon_check(), &format!("{name}: mate pentagon"))?;
        ok(ll.identity_axiom_check(), &format!("{name}: mate identity axiom"))?;
        ok(g_adjoint_check(adj, lr, &ll), &format!("{name}: G-adjoint"))?;
    }
    Ok(format!("60 composites, {bundled} bundled and 60 generated adjunctions"))
}

fn strictification() -> Outcome {
    let limits = Limits::default();
    let mut actions: Vec<(String, Arc<GAction>)> = Vec::new();
    for (stem, doc) in ok(bundled_documents(), "documents")? {
        if stem == "non_cocycle_grid" {
            continue;
        }
        let wb = ok(Workbench::build(&doc, &limits), stem)?;
        for spec in &doc.action {
            actions.push((format!("{stem}/{}", spec.name), ok(wb.action(&spec.name), stem)?.clone()));
        }
    }
    for name in ["cyclic:2", "klein"] {
        let g = group(name);
        let h2 = h2_group(g.clone(), ok(CyclicCoeff::units_of(5), "coefficients")?);
        for class in h2.all_classes() {
            let action = ok(action_from_cocycle(5, 2, &h2.representative(&class)), "action")?;
            actions.push((format!("{name} class {class:?}"), Arc::new(action)));
        }
    }
    for (name, action) in &actions {
        let s = ok(strictify(action, &limits), name)?;
        ensure!(strict_check(&s.strict_action), "{name}: C′ action not strict");
        ok(s.phi.weak_equivalence_check(&limits), name)?;
        let before = ok(equivariantize(action.clone(), &limits), name)?;
        let after = ok(equivariantize(s.strict_action.clone(), &limits), name)?;
        ensure!(before.len() == after.len(), "{name}: {} vs {} classes", before.len(), after.len());
        ensure!(before.class_table().hom_dims == after.class_table().hom_dims, "{name}: hom dimensions differ");
    }
    Ok(format!("{} actions", actions.len()))
}

/// Equivariant indecomposables of A₂ under arrow negation, from the quiver:
/// θ = (a₁, a₂) with a₂f = −f a₁ and θ² = 1, on S₁, S₂ and P₁.
fn a2_oracle(p: u64) -> usize {
    let mut count = 0;
    for (d1, d2, f) in [(1, 0, 0u64), (0, 1, 0), (1, 1, 1)] {
        for a1 in 1..p {
            for a2 in 1..p {
                let a1_ok = d1 == 0 && a1 == 1 || d1 == 1 && a1 * a1 % p == 1;
                let a2_ok = d2 == 0 && a2 == 1 || d2 == 1 && a2 * a2 % p == 1;
                let intertwines = f == 0 || (a2 * f + f * a1) % p == 0;
                count += usize::from(a1_ok && a2_ok && intertwines);
            }
        }
    }
    count
}

fn sod_descent() -> Outcome {
    let limits = Limits::default();
    let sod = ok(bundled_a2_sod(5, &limits), "a2")?;
    let report = ok(descend_sod(&sod, &limits), "descend")?;
    let names: BTreeMap<&str, bool> = report.checks.iter().map(|c| (c.name, c.outcome.is_ok())).collect();
    for want in ["orthogonality", "triangle identities", "B^G = left perpendicular of A^G", "A^G = right perpendicular of B^G"] {
        ensure!(names.get(want) == Some(&true), "check `{want}`: {:?}", names.get(want));
    }
    ok(report.adjunction.triangle_check(), "p^G ⊣ i^G")?;
    let classes = ok(report.indecomposable_count(), "indecomposables")?;
    let oracle = a2_oracle(5);
    ensure!(classes == 6 && oracle == 6, "{classes} classes, oracle {oracle}");
    let c = sod.action().cat();
    for i in 0..report.cg.len() {
        if c.label(report.cg.object(i).base) == "P1" {
            // p^G lands in A^G, indexed locally
            let j = report.ag.member(report.pg.functor.obj(i));
            let lands = c.label(report.cg.object(j).base);
            ensure!(lands == "S1", "p^G sends a P1 class to {lands}");
        }
    }
    Ok(format!("{classes} equivariant indecomposables, all four checks ok"))
}

fn cohomologous_invariance() -> Outcome {
    let limits = Limits::default();
    let klein = group("klein");
    let h2 = h2_group(klein.clone(), ok(CyclicCoeff::units_of(5), "coefficients")?);
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut pairs = 0;
    for class in h2.all_classes() {
        let phi = h2.representative(&class);
        let base = ok(twisted_rep_classify(5, 2, &phi, &limits), "classify")?;
        for _ in 0..2 {
            let beta: Vec<u64> = (0..4).map(|_| rng.random_range(0..4)).collect();
            let moved = shift(&phi, &beta);
            ensure!(h2.class_of(&moved).ok() == Some(class.clone()), "shift left the class");
            let other = ok(twisted_rep_classify(5, 2, &moved, &limits), "classify")?;
            ensure!(other.per_dim == base.per_dim, "{class:?}: {:?} vs {:?}", other.per_dim, base.per_dim);
            ensure!(other.indecomposable_per_dim == base.indecomposable_per_dim, "{class:?}: indecomposables differ");
            ensure!(other.equiv.class_table() == base.equiv.class_table(), "{class:?}: class tables differ");
            pairs += 1;
        }
    }
    Ok(format!("{pairs} cohomologous pairs"))
}

fn cli_runs() -> Vec<Vec<String>> {
    let docs = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples/docs");
    let d = |s: &str| docs.join(s).display().to_string();
    let mut runs: Vec<Vec<&str>> = vec![
        vec!["cohomology", "--group", "cyclic:4", "--coeff", "2"],
        vec!["cohomology", "--group", "klein", "--units", "5"],
        vec!["descend-sod", "a2", "5", "--json"],
        vec!["descend-sod", "a2", "5"],
        vec!["classify-twisted", "--group", "klein", "--p", "5", "--cocycle", "0,0,0,0,0,0,1,3,0,1,1,0,0,3,0,3"],
    ];
    let owned: Vec<(String, &str)> = vec![
        (d("trivial_z2.toml"), "check-action"),
        (d("non_cocycle_grid.toml"), "check-action"),
        (d("cocycle_z2_f5.toml"), "strictify"),
        (d("cube_roots_z3_f7.toml"), "classify-twisted"),
        (d("klein_twisted_f5.toml"), "equivariantize"),
        (d("klein_twisted_f5_shifted.toml"), "classify-twisted"),
        (d("swap_action_explicit.toml"), "strictify"),
        (d("omega_klein.toml"), "check-action"),
        (d("a2_sign_sod.toml"), "descend-sod"),
        (d("mate_conjugation.toml"), "mate"),
        (d("doubling_lax.toml"), "validate"),
    ];
    for (path, cmd) in &owned {
        runs.push(vec![cmd, path.as_str()]);
        runs.push(vec![cmd, path.as_str(), "--json"]);
    }
    runs.into_iter().map(|r| r.into_iter().map(String::from).collect()).collect()
}

fn determinism() -> Outcome {
    let runs = cli_runs();
    for args in &runs {
        let once = || Command::new(env!("CARGO_BIN_EXE_equivar")).args(args).output();
        let (a, b) = (ok(once(), "spawn")?, ok(once(), "spawn")?);
        ensure!(a.stdout == b.stdout && a.status == b.status, "`equivar {}` differs between runs", args.join(" "));
        ensure!(!a.stdout.is_empty(), "`equivar {}` printed nothing", args.join(" "));
    }
    Ok(format!("{} invocations, each run twice", runs.len()))
}

fn main() {
    let criteria: [Criterion; 9] = [
        (1, "associativity iff cocycle", 10, associativity_iff_cocycle),
        (2, "H2 equals brute force", 30, h2_matches_brute_force),
        (3, "equivariantization counts", 60, equivariantization_counts),
        (4, "weakness lemma", 30, weakness_lemma),
        (5, "composition and mate closure", 60, closure_under_composition_and_mates),
        (6, "strictification", 120, strictification),
        (7, "semiorthogonal descent", 120, sod_descent),
        (8, "cohomologous invariance", 60, cohomologous_invariance),
        (9, "CLI determinism", 120, determinism),
    ];
    let mut failed = 0;
    for (n, name, budget, f) in criteria {
        let start = Instant::now();
        let outcome = match catch_unwind(AssertUnwindSafe(f)) {
            Ok(r) => r,
            Err(_) => Err("panicked".into()),
        };
        let took = start.elapsed();
        let outcome = outcome.and_then(|detail| {
            if took > Duration::from_secs(budget) {
                Err(format!("{detail}; over the {budget} s budget"))
            } else {
                Ok(detail)
            }
        });
        match outcome {
            Ok(detail) => println!("criterion {n} ({name}): PASS in {:.2} s, {detail}", took.as_secs_f64()),
            Err(why) => {
                failed += 1;
                println!("criterion {n} ({name}): FAIL in {:.2} s, {why}", took.as_secs_f64());
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
