//! Mates: a right lax structure on `R` and an adjunction `L ⊣ R` give a left
//! lax structure on `L`, making `(L, R)` a G-adjoint pair that descends.

use std::sync::Arc;

use equivar::cohomology::{CyclicCoeff, TwoCocycle};
use equivar::error::Limits;
use equivar::exactalg::FpMatrix;
use equivar::gaction::equivariantize;
use equivar::gfunctor::samples::{conjugate_adjunction, ConjugateAdjunction};
use equivar::gfunctor::{descend_adjunction, g_adjoint_check, mate};
use equivar::groups::{make_group, GroupKind};

fn main() -> equivar::error::Result<()> {
    let group = Arc::new(make_group(&GroupKind::Cyclic(2))?);
    let phi = TwoCocycle::new(group, CyclicCoeff::units_of(5)?, vec![0, 0, 0, 2])?;
    let params = ConjugateAdjunction {
        beta: vec![0, 1],
        q: FpMatrix::from_rows(5, &[vec![2, 1], vec![1, 1]])?,
        s: 3,
        c: 4,
    };
    let (lr, adj) = conjugate_adjunction(&phi, &params)?;
    adj.triangle_check()?;
    lr.pentagon_check()?;

    let ll = mate(&lr, &adj)?;
    ll.pentagon_check()?;
    ll.identity_axiom_check()?;
    println!("mate is {} lax and weak = {}", ll.side(), ll.weakness_criteria()?.is_weak());
    for (g, comps) in ll.deltas().iter().enumerate() {
        println!("  delta_{g} = {comps:?}");
    }
    g_adjoint_check(&adj, &lr, &ll)?;
    println!("unit and counit are G-natural");

    // R: C → D with C carrying φ and D carrying φ + dβ
    let limits = Limits::default();
    let cg = equivariantize(lr.source_action().clone(), &limits)?;
    let dg = equivariantize(lr.target_action().clone(), &limits)?;
    let (adj_g, rg, lg) = descend_adjunction(&adj, &lr, &ll, &cg, &dg)?;
    adj_g.triangle_check()?;
    println!("R^G on objects {:?}, L^G on objects {:?}", rg.functor.obj_map(), lg.functor.obj_map());
    Ok(())
}
