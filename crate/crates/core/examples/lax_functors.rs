//! Lax G-functors `k ↦ k²` between cocycle actions: the pentagon, the three
//! equivalent weakness conditions, composition, and descent to C^G → D^G.

use std::sync::Arc;

use equivar::cohomology::{CyclicCoeff, TwoCocycle};
use equivar::error::Limits;
use equivar::exactalg::FpMatrix;
use equivar::gaction::equivariantize;
use equivar::gfunctor::samples::{characters, doubling_lax, Doubling};
use equivar::gfunctor::{compose_lax, descend_functor, LaxGFunctor, Side};
use equivar::groups::{make_group, GroupKind};

fn main() -> equivar::error::Result<()> {
    let group = Arc::new(make_group(&GroupKind::Cyclic(2))?);
    let phi = TwoCocycle::new(group.clone(), CyclicCoeff::units_of(5)?, vec![0, 0, 0, 2])?;
    let chars = characters(&group, 5);
    let q = FpMatrix::from_rows(5, &[vec![1, 1], vec![0, 1]])?;

    for side in [Side::Right, Side::Left] {
        for keep in [[true, true], [true, false], [false, false]] {
            let lax = doubling_lax(
                &phi,
                &Doubling { side, beta: vec![0, 1], chi: [chars[0].clone(), chars[1].clone()], q: q.clone(), keep },
            )?;
            lax.pentagon_check()?;
            let w = lax.weakness_criteria()?;
            println!(
                "{side} keep {keep:?}: delta_1 iso {}, identity axiom {}, all iso {}",
                w.delta1_iso, w.identity_axiom, w.all_iso
            );
        }
    }

    let weak = doubling_lax(
        &phi,
        &Doubling { side: Side::Right, beta: vec![0, 1], chi: [chars[1].clone(), chars[1].clone()], q, keep: [true, true] },
    )?;
    let after = LaxGFunctor::identity(weak.target_action().clone());
    let composite = compose_lax(&weak, &after)?;
    composite.pentagon_check()?;
    println!("composite with the identity passes the pentagon: {}", composite.deltas() == weak.deltas());

    let limits = Limits::default();
    let cg = equivariantize(weak.source_action().clone(), &limits)?;
    let dg = equivariantize(weak.target_action().clone(), &limits)?;
    let fg = descend_functor(&weak, &cg, &dg)?;
    for (i, j) in fg.functor.obj_map().iter().enumerate() {
        println!("F^G sends class {i} over k^{} to class {j} over k^{}", cg.object(i).base, dg.object(*j).base);
    }
    Ok(())
}
