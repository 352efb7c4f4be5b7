//! Exhaustive minimum distance next to the column-dependence oracle on H.

use resicode::cyclic::DEFAULT_DISTANCE_BUDGET;
use resicode::matrix::smallest_dependent_columns;
use resicode::reference::quaternary_15_context;

fn main() -> resicode::Result<()> {
    let ctx = quaternary_15_context()?;
    for sel in ctx.selectors().take(6) {
        let code = ctx.build_code(&sel)?;
        let rec = code.minimum_distance(DEFAULT_DISTANCE_BUDGET)?;
        let cols = smallest_dependent_columns(code.parity_check_matrix()?, 6);
        println!("{sel}: d={} ({} codewords), dependent columns {cols:?}", rec.d, rec.codewords_enumerated);
    }
    Ok(())
}
