//! Every action is equivalent to a strict one: C′ built from canonical
//! families carries a strict action and Φ: C′ → C is a weak G-equivalence.

use std::sync::Arc;

use equivar::error::Limits;
use equivar::gaction::equivariantize;
use equivar::gfunctor::samples::bundled_cocycle_actions;
use equivar::groups::{make_group, GroupKind};
use equivar::strictify::{canonical_family, strict_check, strictify};

fn main() -> equivar::error::Result<()> {
    let limits = Limits::default();
    let group = Arc::new(make_group(&GroupKind::Cyclic(2))?);
    for (name, action) in bundled_cocycle_actions(group, 5, 2)? {
        let action = Arc::new(action);
        let s = strictify(&action, &limits)?;
        let before = equivariantize(action.clone(), &limits)?;
        let after = equivariantize(s.strict_action.clone(), &limits)?;
        println!(
            "{name}: strict before {}, C′ has {} objects, strict after {}, classes {} vs {}",
            strict_check(&action),
            s.cprime.len(),
            strict_check(&s.strict_action),
            before.len(),
            after.len()
        );
        for c in action.cat().objects() {
            canonical_family(&action, c)?.pentagon_check()?;
        }
    }
    Ok(())
}
