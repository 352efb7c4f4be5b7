//! The twelve acceptance criteria. Each test prints one PASS/FAIL line.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use resicode::cyclic::DEFAULT_DISTANCE_BUDGET;
use resicode::matrix::smallest_dependent_columns;
use resicode::mth::{dual_containing_criterion, lcd_criterion, MthContext};
use resicode::qr::{count_all, count_dual_containing, count_lcd, ClassifyOptions, QrContext};
use resicode::reference::{
    cross_validation_codes, mth_sweep_pairs, quaternary_15_context, quaternary_15_row_code, sample_indices,
    unit_coset_polynomials, BINARY_161_SMALL, BINARY_161_UNIT, QUATERNARY_15_ROWS, TERNARY_253_SMALL,
    TERNARY_253_UNIT,
};
use resicode::Poly;

fn criterion(id: u32, title: &str, limit: Duration, body: impl FnOnce() -> Vec<String>) {
    let start = Instant::now();
    let mut failures = body();
    let elapsed = start.elapsed();
    if elapsed > limit {
        failures.push(format!("took {elapsed:.2?}, limit {limit:?}"));
    }
    if failures.is_empty() {
        println!("PASS criterion {id}: {title} ({elapsed:.2?})");
    } else {
        println!("FAIL criterion {id}: {title}: {}", failures.join("; "));
    }
    assert!(failures.is_empty(), "criterion {id}: {failures:?}");
}

fn check<T: PartialEq + std::fmt::Debug>(f: &mut Vec<String>, what: &str, got: T, want: T) {
    if got != want {
        f.push(format!("{what}: got {got:?}, want {want:?}"));
    }
}

#[test]
fn criterion_01_twenty_four_codes() {
    criterion(1, "24 quaternary [15,8] codes", Duration::from_secs(1), || {
        let mut f = Vec::new();
        let ctx = quaternary_15_context().unwrap();
        check(&mut f, "count_all(2)", count_all(2), 24);
        let gens: BTreeSet<String> = ctx
            .selectors()
            .map(|s| ctx.build_code(&s).unwrap())
            .inspect(|c| assert_eq!((c.n(), c.k()), (15, 8)))
            .map(|c| c.generator().render_expanded())
            .collect();
        check(&mut f, "distinct codes", gens.len(), 24);
        f
    });
}

#[test]
fn criterion_02_distance_histogram() {
    criterion(2, "distance histogram {6:16, 4:4, 3:4}", Duration::from_secs(5), || {
        let mut f = Vec::new();
        let ctx = quaternary_15_context().unwrap();
        let opts = ClassifyOptions { distance_budget: Some(DEFAULT_DISTANCE_BUDGET), ..Default::default() };
        let hist = ctx.classify_all(&opts).unwrap().distance_histogram;
        check(&mut f, "histogram", hist, BTreeMap::from([(3, 4), (4, 4), (6, 16)]));
        f
    });
}

#[test]
fn criterion_03_generator_rows() {
    criterion(3, "24 generator polynomials and distances", Duration::from_secs(5), || {
        let mut f = Vec::new();
        let ctx = quaternary_15_context().unwrap();
        for row in &QUATERNARY_15_ROWS {
            let code = quaternary_15_row_code(&ctx, row).unwrap();
            check(&mut f, "generator", code.generator().render_expanded().as_str(), row.4);
            let d = code.minimum_distance(DEFAULT_DISTANCE_BUDGET).unwrap();
            check(&mut f, row.4, (d.is_exact(), d.d), (true, row.5));
        }
        f
    });
}

#[test]
fn criterion_04_case_one_factors() {
    criterion(4, "unit-class factors and h(x) over F_4", Duration::from_secs(1), || {
        let mut f = Vec::new();
        let ctx = quaternary_15_context().unwrap();
        let f4 = ctx.base();
        let parse = |s: &str| Poly::parse_expanded(f4, s).unwrap();
        let prod = |a: &str, b: &str| parse(a).mul(&parse(b)).unwrap();
        check(&mut f, "F(15,+)", ctx.factor(1, 15, 1).unwrap(), parse("1+x+x^4"));
        check(&mut f, "F(15,-)", ctx.factor(1, 15, -1).unwrap(), parse("1+x^3+x^4"));
        check(&mut f, "F(3,+)", ctx.factor(1, 3, 1).unwrap(), prod("a+x+x^2", "a+a x+x^2"));
        check(&mut f, "F(3,-)", ctx.factor(1, 3, -1).unwrap(), prod("1+a+x+x^2", "1+a+x+a x+x^2"));
        check(&mut f, "F(5,+)", ctx.factor(1, 5, 1).unwrap(), prod("a+x+x^2", "1+a+x+a x+x^2"));
        check(&mut f, "F(5,-)", ctx.factor(1, 5, -1).unwrap(), prod("1+a+x+x^2", "a+a x+x^2"));
        let code = ctx.build_code(&ctx.selector(&[(15, 1), (5, 1), (3, 1)]).unwrap()).unwrap();
        check(
            &mut f,
            "h(x)",
            code.parity_check_polynomial().render_expanded().as_str(),
            "a+a x+x^2+a x^3+x^4+x^5+a x^5+x^6+x^7+x^8",
        );
        f
    });
}

/// Printed factors of `x^n - 1` against the computed ones, plus the classification.
fn two_prime(ctx: &QrContext, small: &[(u64, u64, i8, &str)], unit: &[&str]) -> Vec<String> {
    let mut f = Vec::new();
    let field = ctx.base();
    let n = ctx.n() as usize;
    for &(class, q, s, text) in small {
        check(&mut f, &format!("F({class},{q},{s})"), ctx.factor(class, q, s).unwrap(), Poly::parse_expanded(field, text).unwrap());
    }
    let printed: Vec<Poly> = unit.iter().map(|s| Poly::parse_expanded(field, s).unwrap()).collect();
    let as_set = |ps: &[Poly]| ps.iter().map(|p| p.to_indices().unwrap()).collect::<BTreeSet<_>>();
    check(&mut f, "unit factors", as_set(&unit_coset_polynomials(ctx)), as_set(&printed));
    let mut prod = Poly::from_ints(field, &[-1, 1]);
    for p in printed.iter().cloned().chain(small.iter().map(|s| Poly::parse_expanded(field, s.3).unwrap())) {
        prod = prod.mul(&p).unwrap();
    }
    check(&mut f, "product of printed factors", prod == Poly::x_n_minus_one(field, n), true);
    let c = ctx.classify_all(&ClassifyOptions::default()).unwrap();
    check(&mut f, "codes", c.reports.len(), 24);
    check(&mut f, "dual-containing", c.dual_containing_count, 16);
    check(&mut f, "LCD", c.lcd_count, 0);
    f
}

#[test]
fn criterion_05_binary_161() {
    criterion(5, "binary length 161 factors, 16 dual-containing, 0 LCD", Duration::from_secs(10), || {
        let ctx = QrContext::new(&[7, 23], 2).unwrap();
        two_prime(&ctx, &BINARY_161_SMALL, &BINARY_161_UNIT)
    });
}

#[test]
fn criterion_06_ternary_253() {
    criterion(6, "ternary length 253 factors, 16 dual-containing, 0 LCD", Duration::from_secs(30), || {
        let ctx = QrContext::new(&[11, 23], 3).unwrap().with_theta_exponent(2).unwrap();
        two_prime(&ctx, &TERNARY_253_SMALL, &TERNARY_253_UNIT)
    });
}

#[test]
fn criterion_07_quaternary_2465() {
    criterion(7, "quaternary length 2465 is all LCD", Duration::from_secs(300), || {
        let mut f = Vec::new();
        let primes = [5, 17, 29];
        let ctx = QrContext::new(&primes, 4).unwrap();
        check(&mut f, "admissible", ctx.admissible(), true);
        check(&mut f, "LCD formula", count_lcd(&primes), 24192);
        check(&mut f, "dual-containing formula", count_dual_containing(&primes), 0);
        let sample = sample_indices(ctx.selector_count(), 32);
        check(&mut f, "sample size", sample.len(), 32);
        let flags: Vec<(bool, bool, usize)> = sample
            .par_iter()
            .map(|&i| {
                let code = ctx.build_code(&ctx.selector_at(i).unwrap()).unwrap();
                (code.is_lcd(), code.is_dual_containing(), code.k())
            })
            .collect();
        check(&mut f, "sampled flags", flags.iter().all(|&x| x == (true, false, 1233)), true);
        f
    });
}

#[test]
fn criterion_08_quaternary_231() {
    criterion(8, "quaternary length 231: 4096 dual-containing, 0 LCD", Duration::from_secs(120), || {
        let mut f = Vec::new();
        let primes = [3, 7, 11];
        let ctx = QrContext::new(&primes, 4).unwrap();
        let sels: Vec<_> = ctx.selectors().collect();
        check(&mut f, "selectors", sels.len(), 24192);
        let dc = sels.iter().filter(|s| ctx.selector_is_dual_containing(s)).count();
        let lcd = sels.iter().filter(|s| ctx.selector_is_lcd(s)).count();
        check(&mut f, "dual-containing", dc, 4096);
        check(&mut f, "LCD", lcd, 0);
        check(&mut f, "formulas", (count_dual_containing(&primes), count_lcd(&primes)), (4096, 0));
        // spot-check the filter against built codes
        for &i in &sample_indices(sels.len() as u128, 12) {
            let s = &sels[i as usize];
            let code = ctx.build_code(s).unwrap();
            check(&mut f, "built dual-containing", code.is_dual_containing(), ctx.selector_is_dual_containing(s));
            check(&mut f, "built LCD", code.is_lcd(), false);
        }
        f
    });
}

#[test]
fn criterion_09_mth_examples() {
    criterion(9, "cubic residues mod 7 and quartic residues mod 17", Duration::from_secs(1), || {
        let mut f = Vec::new();
        let c7 = MthContext::new(7, 3, None).unwrap();
        check(&mut f, "q for p=7", c7.q(), 8);
        check(&mut f, "cosets mod 7", c7.classes.cosets.clone(), vec![vec![1, 6], vec![3, 4], vec![2, 5]]);
        let lcd7 = (0..3).filter(|&j| c7.build_residue_code(j, false).unwrap().is_lcd()).count();
        check(&mut f, "LCD mod 7", lcd7, 3);
        let c17 = MthContext::new(17, 4, None).unwrap();
        check(
            &mut f,
            "cosets mod 17",
            c17.classes.cosets.clone(),
            vec![vec![1, 4, 13, 16], vec![3, 5, 12, 14], vec![2, 8, 9, 15], vec![6, 7, 10, 11]],
        );
        let lcd17 = (0..4).filter(|&j| c17.build_residue_code(j, false).unwrap().is_lcd()).count();
        check(&mut f, "LCD mod 17", lcd17, 4);
        f
    });
}

#[test]
fn criterion_10_predicate_cross_validation() {
    criterion(10, "LCD and dual-containing predicates agree with matrix ranks", Duration::from_secs(60), || {
        let codes = cross_validation_codes().unwrap();
        let mut f = Vec::new();
        check(&mut f, "code count", codes.len(), 24 * 3 + 2 * (3 + 4));
        f.extend(codes.par_iter().filter_map(|c| {
            let lcd = (c.is_lcd(), c.is_lcd_by_rank().unwrap());
            let dc = (c.is_dual_containing(), c.is_dual_containing_by_matrix().unwrap());
            (lcd.0 != lcd.1 || dc.0 != dc.1).then(|| format!("n={} lcd {lcd:?} dc {dc:?}", c.n()))
        }).collect::<Vec<_>>());
        f
    });
}

#[test]
fn criterion_11_column_dependence() {
    criterion(11, "distance equals smallest dependent column set", Duration::from_secs(120), || {
        let ctx = quaternary_15_context().unwrap();
        let sels: Vec<_> = ctx.selectors().collect();
        sels.par_iter()
            .filter_map(|s| {
                let code = ctx.build_code(s).unwrap();
                let d = code.minimum_distance(DEFAULT_DISTANCE_BUDGET).unwrap().d;
                let cols = smallest_dependent_columns(code.parity_check_matrix().unwrap(), 6);
                (cols != Some(d)).then(|| format!("{s}: {d} vs {cols:?}"))
            })
            .collect()
    });
}

#[test]
fn criterion_12_mth_sweep() {
    criterion(12, "m-th residue congruences for every p < 100", Duration::from_secs(60), || {
        let pairs = mth_sweep_pairs(100);
        pairs
            .par_iter()
            .filter_map(|&(p, m)| {
                let ctx = MthContext::new(p, m, None).unwrap();
                let codes: Vec<_> = (0..m as usize).map(|j| ctx.build_residue_code(j, false).unwrap()).collect();
                let all_lcd = codes.iter().all(|c| c.is_lcd());
                let all_dc = codes.iter().all(|c| c.is_dual_containing());
                let ok = all_lcd == lcd_criterion(p, m)
                    && all_dc == dual_containing_criterion(p, m)
                    && (m != 2 || all_dc == (p % 4 == 3));
                (!ok).then(|| format!("p={p} m={m}: lcd {all_lcd} dc {all_dc}"))
            })
            .collect()
    });
}
