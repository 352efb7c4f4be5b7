//! All 24 quaternary [15, 8] codes with generators, flags and minimum distances.

use resicode::cyclic::DEFAULT_DISTANCE_BUDGET;
use resicode::qr::ClassifyOptions;
use resicode::reference::quaternary_15_context;

fn main() -> resicode::Result<()> {
    let ctx = quaternary_15_context()?;
    let opts = ClassifyOptions {
        distance_budget: Some(DEFAULT_DISTANCE_BUDGET),
        order: Some(ctx.case_grouped_order()),
        ..Default::default()
    };
    let c = ctx.classify_all(&opts)?;
    for r in &c.reports {
        let d = r.distance.map_or(0, |d| d.d);
        println!("{:<32} d={d}  {}", r.selector.to_string(), r.generator);
    }
    println!("histogram {:?}, LCD {}, dual-containing {}", c.distance_histogram, c.lcd_count, c.dual_containing_count);
    Ok(())
}
