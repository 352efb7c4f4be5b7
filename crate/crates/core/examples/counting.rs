//! Closed-form code counts for three-prime lengths.

use resicode::qr::{base_field_admissible, count_all, count_dual_containing, count_lcd};

fn main() {
    println!("g=1..4 codes: {:?}", (1..=4).map(count_all).collect::<Vec<_>>());
    for (primes, q) in [([3, 7, 11], 4), ([5, 17, 29], 4), ([3, 5, 7], 2)] {
        println!(
            "{primes:?} over F_{q}: admissible {}, total {}, LCD {}, dual-containing {}",
            base_field_admissible(&primes, q),
            count_all(primes.len() as u32),
            count_lcd(&primes),
            count_dual_containing(&primes),
        );
    }
}
