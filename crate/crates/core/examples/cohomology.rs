//! Second cohomology of small groups with cyclic coefficients, and explicit
//! coboundaries between cohomologous cocycles.

use std::sync::Arc;

use equivar::cohomology::{cohomologous, h2_group, CyclicCoeff};
use equivar::gfunctor::samples::shifted;
use equivar::groups::{make_group, GroupKind};

fn main() -> equivar::error::Result<()> {
    for (g, m) in [("cyclic:4", 2), ("cyclic:6", 4), ("klein", 2), ("klein", 4), ("dihedral:3", 6)] {
        let group = Arc::new(make_group(&g.parse::<GroupKind>()?)?);
        let h2 = h2_group(group, CyclicCoeff::new(m)?);
        println!("H^2({g}, Z/{m}) has invariant factors {:?}, order {}", h2.invariant_factors, h2.order());
    }

    // F_5^* ≅ Z/4, so H² of the Klein group there is (Z/2)³
    let klein = Arc::new(make_group(&"klein".parse::<GroupKind>()?)?);
    let h2 = h2_group(klein, CyclicCoeff::units_of(5)?);
    let phi = h2.representative(&[1]);
    let moved = shifted(&phi, &[0, 3, 1, 2])?;
    println!("phi  = {:?} in class {:?}", phi.values(), h2.class_of(&phi)?);
    println!("phi' = {:?} in class {:?}", moved.values(), h2.class_of(&moved)?);
    let delta = cohomologous(&phi, &moved)?;
    println!("phi' - phi is the coboundary of {:?}", delta.values);
    Ok(())
}
