//! m-th residue codes for a few (p, m) pairs, compared with the congruence rules.

use resicode::mth::MthContext;

fn main() -> resicode::Result<()> {
    for (p, m) in [(7, 3), (13, 4), (17, 4), (11, 5)] {
        let r = MthContext::new(p, m, None)?.report()?;
        println!("p={p} m={m} q={} cosets {:?}", r.q, r.cosets);
        for c in r.codes.iter().filter(|c| !c.include_unit_factor) {
            println!("  f_{} k={} lcd={} dual-containing={}", c.coset, c.k, c.lcd, c.dual_containing);
        }
        println!("  predicted: lcd {} dual-containing {}", r.lcd_count, r.dual_containing_count);
    }
    Ok(())
}
