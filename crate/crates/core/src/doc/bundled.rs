//! The documents shipped under `examples/docs`, generated from library constructors.

use std::sync::Arc;

use super::*;
use crate::cohomology::{h2_group, CyclicCoeff};
use crate::gfunctor::samples::{characters, conjugate_adjunction, conjugation_functor, doubling_lax, shifted, ConjugateAdjunction, Doubling};
use crate::groups::make_group;
use crate::sod::bundled_a2_sod;

fn base(group: &str) -> WorkbenchDocument {
    let mut d = WorkbenchDocument::empty();
    d.group = Some(group_spec(group));
    d
}

fn builtin(kind: &str, p: u32, dim: Option<usize>) -> CategorySpec {
    CategorySpec {
        kind: kind.into(),
        p,
        dim,
        labels: Vec::new(),
        dims: Vec::new(),
        composition: Vec::new(),
        identities: Vec::new(),
    }
}

fn units(p: u32) -> Option<CoeffSpec> {
    Some(CoeffSpec { modulus: None, units_of: Some(p) })
}

fn cocycle_doc(group: &str, p: u32, dim: usize, values: Vec<u64>) -> WorkbenchDocument {
    let mut d = base(group);
    d.coefficients = units(p);
    d.cocycle = Some(CocycleSpec { values });
    d.category = Some(builtin("vect", p, Some(dim)));
    d.action.push(action_spec("action", "cocycle"));
    d
}

fn group(kind: &str) -> Result<Arc<FinGroup>> {
    Ok(Arc::new(make_group(&kind.parse::<GroupKind>()?)?))
}

/// `(file stem, document)` pairs, in a fixed order.
pub fn bundled_documents() -> Result<Vec<(&'static str, WorkbenchDocument)>> {
    let mut out = Vec::new();

    let mut d = base("cyclic:2");
    d.category = Some(builtin("vect", 3, Some(2)));
    d.action.push(action_spec("action", "trivial"));
    out.push(("trivial_z2", d));

    // r¹ is not a square in F_5, so this class is nontrivial
    out.push(("cocycle_z2_f5", cocycle_doc("cyclic:2", 5, 2, vec![0, 0, 0, 1])));
    out.push(("cube_roots_z3_f7", cocycle_doc("cyclic:3", 7, 1, vec![0; 9])));

    let klein = group("klein")?;
    let h2 = h2_group(klein.clone(), CyclicCoeff::units_of(5)?);
    let phi = h2.representative(&[1]);
    out.push(("klein_twisted_f5", cocycle_doc("klein", 5, 2, phi.values().to_vec())));
    let moved = shifted(&phi, &[0, 1, 2, 3])?;
    out.push(("klein_twisted_f5_shifted", cocycle_doc("klein", 5, 2, moved.values().to_vec())));

    // a grid violating the cocycle law: the associativity check must fail
    let mut d = base("cyclic:2");
    d.category = Some(builtin("vect", 5, Some(1)));
    let mut bad = action_spec("action", "scalar_grid");
    bad.grid = Some(vec![1, 1, 2, 1]);
    d.action.push(bad);
    out.push(("non_cocycle_grid", d));

    // Z/2 swapping coordinates of k², written out explicitly
    let mut d = base("cyclic:2");
    let cat = Arc::new(vect_cat(5, 2)?);
    d.category = Some(category_spec(&cat));
    let swap = FpMatrix::from_rows(5, &[vec![0, 1], vec![1, 0]])?;
    let sigma = Arc::new(conjugation_functor(cat.clone(), &[FpMatrix::identity(5, 0), FpMatrix::identity(5, 1), swap])?);
    let id = Arc::new(LinFunctor::identity(cat.clone()));
    let ids: Vec<Vec<u32>> = cat.objects().map(|x| cat.identity(x).to_vec()).collect();
    let action = GAction::new(group("cyclic:2")?, cat, vec![id, sigma], vec![ids; 4])?;
    explicit_action(&mut d, "action", MAIN, "", &action);
    out.push(("swap_action_explicit", d));

    let mut d = base("klein");
    d.category = Some(builtin("omega", 5, None));
    d.action.push(action_spec("action", "translation"));
    out.push(("omega_klein", d));

    // A₂ with the sign action, the slots A and B, and p ⊣ i
    let sod = bundled_a2_sod(5, &Limits::default())?;
    let mut d = base("cyclic:2");
    d.category = Some(builtin("a2", 5, Some(1)));
    d.action.push(action_spec("action", "sign"));
    d.subcategories.push(SubcatSpec { name: "A".into(), members: sod.a().members().to_vec() });
    d.subcategories.push(SubcatSpec { name: "B".into(), members: sod.b().members().to_vec() });
    let adj = sod.adjunction();
    d.functors.push(functor_spec("p", MAIN, "A", adj.left()));
    d.adjunctions.push(AdjunctionSpec {
        name: "p_incl".into(),
        right: "incl:A".into(),
        left: "p".into(),
        unit: adj.units().to_vec(),
        counit: adj.counits().to_vec(),
        lax: None,
    });
    out.push(("a2_sign_sod", d));

    // conjugation adjunction between two cohomologous cocycle actions
    let g = group("cyclic:2")?;
    let phi = crate::cohomology::TwoCocycle::new(g.clone(), CyclicCoeff::units_of(5)?, vec![0, 0, 0, 2])?;
    let params = ConjugateAdjunction { beta: vec![0, 1], q: FpMatrix::from_rows(5, &[vec![2, 1], vec![1, 1]])?, s: 3, c: 4 };
    let (lax, adj) = conjugate_adjunction(&phi, &params)?;
    let mut d = cocycle_doc("cyclic:2", 5, 2, phi.values().to_vec());
    let mut target = action_spec("shifted", "cocycle");
    target.cocycle = Some(shifted(&phi, &params.beta)?.values().to_vec());
    d.action.push(target);
    d.functors.push(functor_spec("R", MAIN, MAIN, adj.right()));
    d.functors.push(functor_spec("L", MAIN, MAIN, adj.left()));
    d.lax_functors.push(lax_spec("R_lax", "R", "action", "shifted", &lax));
    d.adjunctions.push(AdjunctionSpec {
        name: "conjugation".into(),
        right: "R".into(),
        left: "L".into(),
        unit: adj.units().to_vec(),
        counit: adj.counits().to_vec(),
        lax: Some("R_lax".into()),
    });
    out.push(("mate_conjugation", d));

    // k ↦ k² with a non-invertible comparison: lax but not weak
    let chars = characters(&g, 5);
    let params = Doubling {
        side: Side::Right,
        beta: vec![0, 1],
        chi: [chars[0].clone(), chars[1].clone()],
        q: FpMatrix::from_rows(5, &[vec![1, 1], vec![0, 1]])?,
        keep: [true, false],
    };
    let lax = doubling_lax(&phi, &params)?;
    let mut d = base("cyclic:2");
    d.coefficients = units(5);
    d.cocycle = Some(CocycleSpec { values: phi.values().to_vec() });
    d.category = Some(builtin("vect", 5, Some(2)));
    d.subcategories.push(SubcatSpec { name: "small".into(), members: vec![0, 1] });
    let mut source = action_spec("source", "cocycle");
    source.category = "small".into();
    d.action.push(source);
    let mut target = action_spec("target", "cocycle");
    target.cocycle = Some(shifted(&phi, &params.beta)?.values().to_vec());
    d.action.push(target);
    d.functors.push(functor_spec("double", "small", MAIN, lax.functor()));
    d.lax_functors.push(lax_spec("double_lax", "double", "source", "target", &lax));
    out.push(("doubling_lax", d));

    Ok(out)
}
