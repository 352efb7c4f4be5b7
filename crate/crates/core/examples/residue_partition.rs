//! The residue partition of {1, ..., 15} with its quadratic-character splits.

use resicode::residue::{jacobi, LengthContext, ResiduePartition};

fn main() -> resicode::Result<()> {
    let part = ResiduePartition::new(&[3, 5])?;
    for class in &part.classes {
        println!("M_{} = {:?}", class.divisor, class.elements);
        for s in &class.splits {
            println!("  Q={:>2}  +{:?}  -{:?}", s.modulus, s.plus, s.minus);
        }
    }
    println!("(2/15) = {}", jacobi(2, 15)?);

    for q in [2, 4, 19] {
        let ctx = LengthContext::new(&[3, 5], q)?;
        println!("q={q}: admissible {} (blocking prime {:?})", ctx.admissible(), ctx.inadmissible_prime());
    }
    Ok(())
}
