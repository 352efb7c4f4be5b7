use std::collections::BTreeMap;

use resicode::qr::*;
use resicode::reference::quaternary_15_context;
use resicode::residue::{gcd, multiplicative_order};
use resicode::{Error, Poly};

#[test]
fn contexts() {
    let ctx = quaternary_15_context().unwrap();
    assert_eq!(ctx.length().extension_degree, 2);
    let c161 = QrContext::new(&[7, 23], 2).unwrap();
    let lcm = |a: u64, b: u64| a / gcd(a, b) * b;
    let n_ext = lcm(multiplicative_order(2, 7).unwrap(), multiplicative_order(2, 23).unwrap());
    assert_eq!(c161.length().extension_degree, n_ext);
    assert_eq!(n_ext, 33);
    let c2465 = QrContext::new(&[5, 17, 29], 4).unwrap();
    assert_eq!(c2465.top().order(), 1u128 << 56);
    assert!(matches!(QrContext::new(&[3, 3], 4), Err(Error::InvalidPrimes(_))));
}

#[test]
fn admissibility() {
    assert!(base_field_admissible(&[3, 5, 7, 11, 13], 4));
    assert!(base_field_admissible(&[7, 23], 2));
    assert!(!base_field_admissible(&[3, 5], 2));
}

#[test]
fn selector_counts_match_streams() {
    // product over r of (2(2^{g-r}-1))^{C(g,r)} evaluated by hand
    assert_eq!(count_all(1), 2);
    assert_eq!(count_all(2), 24);
    assert_eq!(count_all(3), 14 * 216 * 8);
    for primes in [&[7u64][..], &[3, 5], &[3, 7, 11]] {
        let ctx = QrContext::new(primes, 4).unwrap();
        assert_eq!(ctx.selectors().count() as u128, count_all(primes.len() as u32));
    }
}

#[test]
fn generator_for_all_plus() {
    let ctx = quaternary_15_context().unwrap();
    let sel = ctx.selector(&[(15, 1), (5, 1), (3, 1)]).unwrap();
    let g = ctx.build_generator(&sel).unwrap();
    assert_eq!(g, Poly::parse_expanded(ctx.base(), "1+a+x+a x+x^2+a x^4+x^6+x^7").unwrap());
    assert_eq!(ctx.build_generator_direct(&sel).unwrap(), g);
}

#[test]
fn existence_and_counts() {
    assert!(lcd_exists(&[5, 17, 29]));
    assert!(dual_containing_exists(&[3, 7, 11]) && !lcd_exists(&[3, 7, 11]));
    assert!(!lcd_exists(&[3, 5]) && !dual_containing_exists(&[3, 5]));
    assert_eq!(count_dual_containing(&[7, 23]), 16);
    assert_eq!(count_dual_containing(&[3, 7, 11]), 4096);
    assert_eq!((count_lcd(&[3, 5]), count_dual_containing(&[3, 5])), (0, 0));
}

#[test]
fn classify_fifteen() {
    let ctx = quaternary_15_context().unwrap();
    let opts = ClassifyOptions { distance_budget: Some(1 << 20), cross_check: true, order: None };
    let c = ctx.classify_all(&opts).unwrap();
    assert_eq!(c.reports.len(), 24);
    assert_eq!(c.distance_histogram, BTreeMap::from([(6, 16), (4, 4), (3, 4)]));
    assert_eq!((c.lcd_count, c.dual_containing_count), (0, 0));
}

#[test]
fn classify_two_prime_examples() {
    for (primes, q) in [([7u64, 23], 2u64), ([11, 23], 3)] {
        let ctx = QrContext::new(&primes, q).unwrap();
        let c = ctx.classify_all(&ClassifyOptions::default()).unwrap();
        assert_eq!(c.reports.len(), 24);
        assert_eq!((c.lcd_count, c.dual_containing_count), (0, 16));
    }
}

#[test]
fn generators_divide_and_complement() {
    for (primes, q) in [(&[3u64, 5][..], 4u64), (&[7, 23], 2), (&[3, 7, 11], 4)] {
        let ctx = QrContext::new(primes, q).unwrap();
        let n = ctx.n() as usize;
        let xn = Poly::x_n_minus_one(ctx.base(), n);
        for i in (0..ctx.selector_count()).step_by(97) {
            let sel = ctx.selector_at(i).unwrap();
            let g = ctx.build_generator(&sel).unwrap();
            assert!(xn.divisible_by(&g).unwrap());
            assert_eq!(g.degree(), Some((n - 1) / 2));
            let gc = ctx.build_generator(&sel.complement()).unwrap();
            let prod = g.mul(&gc).unwrap().mul(&Poly::from_ints(ctx.base(), &[-1, 1])).unwrap();
            assert_eq!(prod, xn);
        }
    }
}

#[test]
fn theta_twists_permute_the_generators() {
    let ctx = QrContext::new(&[3, 5], 4).unwrap();
    let collect = |c: &QrContext| {
        let mut v: Vec<Vec<u32>> =
            c.selectors().map(|s| c.build_generator(&s).unwrap().to_indices().unwrap()).collect();
        v.sort();
        v
    };
    let reference = collect(&ctx);
    let units: Vec<u64> = (1..15).filter(|&u| gcd(u, 15) == 1).collect();
    assert_eq!(units.len(), 8);
    for u in units {
        assert_eq!(collect(&ctx.with_theta_exponent(u).unwrap()), reference, "u={u}");
    }
}

#[test]
fn three_case_families() {
    let ctx = quaternary_15_context().unwrap();
    let mut families: BTreeMap<u64, usize> = BTreeMap::new();
    for s in ctx.selectors() {
        *families.entry(s.choices[0].modulus).or_default() += 1;
    }
    assert_eq!(families, BTreeMap::from([(3, 8), (5, 8), (15, 8)]));
}

#[test]
fn inadmissible_base_field() {
    let ctx = QrContext::new(&[3, 5], 2).unwrap();
    let sel = ctx.selector_at(0).unwrap();
    assert_eq!(ctx.build_generator(&sel).unwrap_err(), Error::NotAdmissible { q: 2, prime: 3 });
    let code = ctx.build_extension_code(&sel).unwrap();
    assert_eq!(code.k(), 8);
}
