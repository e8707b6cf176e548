//! Actions on `vect` given by a scalar grid: associativity of the action is
//! exactly the cocycle law.

use std::sync::Arc;

use equivar::cohomology::{cocycle_check, CyclicCoeff, TwoCocycle};
use equivar::gaction::{action_from_cocycle, GAction};
use equivar::groups::{make_group, GroupKind};
use equivar::lincat::vect_cat;

fn main() -> equivar::error::Result<()> {
    let group = Arc::new(make_group(&GroupKind::Cyclic(2))?);
    let coeff = CyclicCoeff::units_of(5)?;

    let phi = TwoCocycle::new(group.clone(), coeff, vec![0, 0, 0, 2])?;
    let action = action_from_cocycle(5, 2, &phi)?;
    action.check()?;
    println!("cocycle {:?}: action ok, strict = {}", phi.values(), action.is_strict());
    println!("phi_(1,1) at k^1 = {:?}", action.phi_at(1, 1, 1));

    // 2 ∈ F_5^* at (1,0) breaks normalization and the cocycle law together
    let grid = [1, 1, 2, 1];
    let cat = Arc::new(vect_cat(5, 1)?);
    let bad = GAction::from_scalar_grid(group.clone(), cat, &grid)?;
    match bad.check() {
        Ok(()) => println!("grid {grid:?}: unexpectedly an action"),
        Err(e) => println!("grid {grid:?}: {e}"),
    }
    // the same grid as exponents of a generator of F_5^*: 2 = 2^1
    let exps = [0, 0, 1, 0];
    println!("cocycle check on {exps:?}: {:?}", cocycle_check(&group, &coeff, &exps).err());
    Ok(())
}
