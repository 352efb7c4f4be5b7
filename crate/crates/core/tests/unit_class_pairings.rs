//! The published products `F^ε_{1,Q} = U_i U_j` for lengths 161 and 253
//! cannot all hold for any primitive root θ, though the irreducible factors
//! `U_i` themselves are correct. Exchanging the labels `Q = p_2` and `Q = n`
//! makes every product a genuine factor.

use resicode::qr::QrContext;
use resicode::reference::*;
use resicode::residue::{gcd, jacobi};
use resicode::Poly;

/// One θ exponent per class of character values `((u/p_1), (u/p_2))`.
fn twists(ctx: &QrContext) -> Vec<u64> {
    let n = ctx.n();
    let primes = ctx.length().primes.clone();
    let mut seen = std::collections::BTreeSet::new();
    (1..n)
        .filter(|&u| gcd(u, n) == 1)
        .filter(|&u| seen.insert(primes.iter().map(|&p| jacobi(u as i64, p as i64).unwrap()).collect::<Vec<_>>()))
        .collect()
}

fn holds(ctx: &QrContext, unit: &[Poly], (q, s, i, j): (u64, i8, usize, usize)) -> bool {
    ctx.factor(1, q, s).unwrap() == unit[i].mul(&unit[j]).unwrap()
}

fn run(primes: [u64; 2], q: u64, unit: &[&str], pairings: &[(u64, i8, usize, usize)]) {
    let base = QrContext::new(&primes, q).unwrap();
    let unit: Vec<Poly> = unit.iter().map(|s| Poly::parse_expanded(base.base(), s).unwrap()).collect();
    let n = base.n();
    let swap = |m: u64| if m == n { primes[1] } else if m == primes[1] { n } else { m };
    let us = twists(&base);
    assert_eq!(us.len(), 4);
    for u in us {
        let ctx = base.with_theta_exponent(u).unwrap();
        let all = pairings.iter().all(|&p| holds(&ctx, &unit, p));
        assert!(!all, "u={u} reproduces every published pairing");
        for &(m, s, i, j) in pairings {
            let relabelled = [1, -1].iter().any(|&t| holds(&ctx, &unit, (swap(m), s * t, i, j)));
            assert!(relabelled, "u={u}: U{i}U{j} is not F(1,{})", swap(m));
        }
    }
}

#[test]
fn binary_161() {
    run([7, 23], 2, &BINARY_161_UNIT, &BINARY_161_PAIRINGS);
}

#[test]
fn ternary_253() {
    run([11, 23], 3, &TERNARY_253_UNIT, &TERNARY_253_PAIRINGS);
}
