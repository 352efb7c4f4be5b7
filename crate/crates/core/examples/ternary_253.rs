//! Ternary length 253 under a chosen θ exponent, checking that the factors multiply back.

use resicode::qr::{ClassifyOptions, QrContext};
use resicode::reference::TERNARY_253_THETA_EXPONENT;
use resicode::Poly;

fn main() -> resicode::Result<()> {
    let ctx = QrContext::new(&[11, 23], 3)?.with_theta_exponent(TERNARY_253_THETA_EXPONENT)?;
    let f3 = ctx.base();
    let mut prod = Poly::from_ints(f3, &[-1, 1]);
    for (class, q) in [(1, 253), (11, 23), (23, 11)] {
        for s in [1, -1] {
            prod = prod.mul(&ctx.factor(class, q, s)?)?;
        }
    }
    println!("product equals x^253 - 1: {}", prod == Poly::x_n_minus_one(f3, 253));
    println!("F(23, Q=11, +) = {}", ctx.factor(23, 11, 1)?.render_expanded());
    let c = ctx.classify_all(&ClassifyOptions::default())?;
    println!("{} LCD, {} dual-containing", c.lcd_count, c.dual_containing_count);
    Ok(())
}
