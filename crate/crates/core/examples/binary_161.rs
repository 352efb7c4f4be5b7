//! Factor x^161 - 1 over F_2 along the residue classes and classify the 24 codes.

use resicode::qr::{ClassifyOptions, QrContext};

fn main() -> resicode::Result<()> {
    let ctx = QrContext::new(&[7, 23], 2)?;
    for (class, q) in [(23, 7), (7, 23), (1, 7), (1, 23), (1, 161)] {
        for s in [1, -1] {
            let f = ctx.factor(class, q, s)?;
            println!("F({class}, Q={q}, {s:+}) degree {:?}", f.degree());
        }
    }
    let c = ctx.classify_all(&ClassifyOptions::default())?;
    println!("{} codes, {} LCD, {} dual-containing", c.reports.len(), c.lcd_count, c.dual_containing_count);
    Ok(())
}
