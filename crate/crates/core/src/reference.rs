//! Published reference data for the worked examples and the checks that
//! recompute it.
//!
//! Every check rebuilds its codes from scratch and compares against the
//! literal data below. [`run_checks`] drives them for the `verify-paper`
//! command.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use crate::cyclic::{CyclicCode, DEFAULT_DISTANCE_BUDGET};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::smallest_dependent_columns;
use crate::mth::{dual_containing_criterion, lcd_criterion, MthContext};
use crate::poly::Poly;
use crate::qr::{count_all, count_dual_containing, count_lcd, ClassifyOptions, QrContext};
use crate::residue::gcd;

/// One row of the quaternary length-15 generator tables:
/// `(Q_1, ε_1, ε_3, ε_5, generator, minimum distance)`.
pub type Row15 = (u64, i8, i8, i8, &'static str, usize);

pub const QUATERNARY_15_ROWS: [Row15; 24] = [
    (15, 1, 1, -1, "a+a x^2+x^3+x^4+a x^4+a x^5+x^7", 6),
    (15, 1, -1, 1, "1+a+x^2+a x^2+x^3+a x^4+x^5+a x^5+x^7", 6),
    (15, 1, -1, -1, "a+a x+x^2+x^4+a x^4+x^6+x^7", 6),
    (15, -1, 1, 1, "1+a+x^2+a x^3+x^4+a x^4+x^5+x^7", 6),
    (15, -1, 1, -1, "a+a x+x^3+a x^3+a x^5+x^6+x^7", 6),
    (15, -1, -1, 1, "1+a+x+a x+a x^3+x^5+a x^5+x^6+x^7", 6),
    (15, -1, -1, -1, "a+x^2+x^3+a x^3+a x^4+x^5+x^7", 6),
    (15, 1, 1, 1, "1+a+x+a x+x^2+a x^4+x^6+x^7", 6),
    (3, 1, 1, -1, "1+x+a x+x^2+x^3+a x^4+x^6+a x^6+x^7", 6),
    (3, 1, -1, 1, "a+x+a x^2+x^5+x^6+a x^6+x^7", 3),
    (3, 1, -1, -1, "1+a x+x^3+a x^3+x^4+x^5+a x^6+x^7", 6),
    (3, -1, 1, 1, "1+x+a x+a x^3+x^4+x^5+x^6+a x^6+x^7", 6),
    (3, -1, 1, -1, "1+a+x+x^2+a x^2+x^5+a x^6+x^7", 3),
    (3, -1, -1, 1, "1+a x+x^2+x^3+x^4+a x^4+a x^6+x^7", 6),
    (3, -1, -1, -1, "1+a+a x+x^2+a x^2+x^5+x^6+a x^6+x^7", 3),
    (3, 1, 1, 1, "a+x+a x+a x^2+x^5+a x^6+x^7", 3),
    (5, 1, 1, -1, "a+x+x^3+x^4+a x^4+a x^6+x^7", 4),
    (5, 1, -1, 1, "1+a+a x+x^3+x^5+a x^6+x^7", 6),
    (5, 1, -1, -1, "a+x+a x+a x^2+a x^4+x^6+a x^6+x^7", 6),
    (5, -1, 1, 1, "1+a+a x+x^2+a x^2+x^4+a x^4+a x^6+x^7", 6),
    (5, -1, 1, -1, "a+x+a x+x^3+x^5+x^6+a x^6+x^7", 6),
    (5, -1, -1, 1, "1+a+x+x^3+a x^4+x^6+a x^6+x^7", 4),
    (5, -1, -1, -1, "a+x+x^3+a x^3+a x^4+a x^6+x^7", 4),
    (5, 1, 1, 1, "1+a+x+a x^3+x^4+a x^4+x^6+a x^6+x^7", 4),
];

/// Distance histogram of the 24 quaternary `[15, 8]` codes.
pub fn quaternary_15_histogram() -> BTreeMap<usize, usize> {
    BTreeMap::from([(6, 16), (4, 4), (3, 4)])
}

/// `(class, Q, ε, polynomial)` factors of `x^15 - 1` over `F_4`; products are
/// given as lists of irreducible parts.
pub const QUATERNARY_15_FACTORS: [(u64, u64, i8, &[&str]); 10] = [
    (1, 15, 1, &["1+x+x^4"]),
    (1, 15, -1, &["1+x^3+x^4"]),
    (3, 5, 1, &["1+a x+x^2"]),
    (3, 5, -1, &["1+x+a x+x^2"]),
    (5, 3, 1, &["1+a+x"]),
    (5, 3, -1, &["a+x"]),
    (1, 3, 1, &["a+x+x^2", "a+a x+x^2"]),
    (1, 3, -1, &["1+a+x+x^2", "1+a+x+a x+x^2"]),
    (1, 5, 1, &["a+x+x^2", "1+a+x+a x+x^2"]),
    (1, 5, -1, &["1+a+x+x^2", "a+a x+x^2"]),
];

/// Parity-check polynomial of the all-plus code with `Q_1 = 15`.
pub const QUATERNARY_15_PARITY_CHECK: &str = "a+a x+x^2+a x^3+x^4+x^5+a x^5+x^6+x^7+x^8";

/// Small factors of `x^161 - 1` over `F_2` as `(class, Q, ε, polynomial)`.
pub const BINARY_161_SMALL: [(u64, u64, i8, &str); 4] = [
    (23, 7, 1, "1+x^2+x^3"),
    (23, 7, -1, "1+x+x^3"),
    (7, 23, 1, "1+x+x^5+x^6+x^7+x^9+x^11"),
    (7, 23, -1, "1+x^2+x^4+x^5+x^6+x^10+x^11"),
];

/// The four degree-33 irreducible factors over the unit class.
pub const BINARY_161_UNIT: [&str; 4] = [
    "1+x+x^3+x^7+x^9+x^11+x^12+x^13+x^14+x^17+x^18+x^19+x^21+x^23+x^24+x^25+x^26+x^27+x^28+x^29+x^33",
    "1+x^2+x^3+x^5+x^8+x^9+x^10+x^12+x^14+x^16+x^19+x^20+x^24+x^26+x^29+x^31+x^33",
    "1+x^2+x^4+x^7+x^9+x^13+x^14+x^17+x^19+x^21+x^23+x^24+x^25+x^28+x^30+x^31+x^33",
    "1+x^4+x^5+x^6+x^7+x^8+x^9+x^10+x^12+x^14+x^15+x^16+x^19+x^20+x^21+x^22+x^24+x^26+x^30+x^32+x^33",
];

/// Published pairings `F^ε_{1,Q} = U_i U_j` of the unit-class factors.
pub const BINARY_161_PAIRINGS: [(u64, i8, usize, usize); 6] =
    [(161, 1, 0, 1), (161, -1, 2, 3), (7, 1, 0, 2), (7, -1, 1, 3), (23, 1, 0, 3), (23, -1, 1, 2)];

pub const TERNARY_253_SMALL: [(u64, u64, i8, &str); 4] = [
    (11, 23, 1, "2+x^3+x^5+2x^7+2x^8+x^9+x^10+x^11"),
    (11, 23, -1, "2+2x+2x^2+x^3+x^4+2x^6+2x^8+x^11"),
    (23, 11, 1, "2+x^2+2x^3+x^4+x^5"),
    (23, 11, -1, "2+2x+x^2+2x^3+x^5"),
];

pub const TERNARY_253_UNIT: [&str; 4] = [
    "2+x+x^2+2x^3+x^4+x^6+2x^7+x^9+x^10+x^11+2x^12+2x^16+2x^18+x^20+x^21+x^22+x^23+x^24+2x^26+2x^29+x^30+2x^32+2x^33+x^35+2x^36+x^37+x^38+2x^41+x^42+2x^43+x^44+2x^45+x^46+2x^48+2x^49+x^55",
    "2+2x^3+2x^5+x^6+2x^8+x^9+x^10+2x^12+x^13+2x^14+x^16+2x^17+x^18+2x^21+x^23+2x^24+2x^25+x^26+2x^27+x^28+x^29+2x^31+2x^32+x^34+x^35+2x^38+x^40+x^41+2x^42+x^43+2x^45+2x^46+x^47+x^48+2x^49+2x^50+2x^51+2x^52+x^53+x^55",
    "2+2x^2+x^3+x^4+x^5+x^6+2x^7+2x^8+x^9+x^10+2x^12+x^13+2x^14+2x^15+x^17+2x^20+2x^21+x^23+x^24+2x^26+2x^27+x^28+2x^29+x^30+x^31+2x^32+x^34+2x^37+x^38+2x^39+x^41+2x^42+x^43+2x^45+2x^46+x^47+2x^49+x^50+x^52+x^55",
    "2+x^6+x^7+2x^9+x^10+2x^11+x^12+2x^13+x^14+2x^17+2x^18+x^19+2x^20+x^22+x^23+2x^25+x^26+x^29+2x^31+2x^32+2x^33+2x^34+2x^35+x^37+x^39+x^43+2x^44+2x^45+2x^46+x^48+2x^49+2x^51+x^52+2x^53+2x^54+x^55",
];

pub const TERNARY_253_PAIRINGS: [(u64, i8, usize, usize); 6] =
    [(253, 1, 0, 2), (253, -1, 1, 3), (11, 1, 0, 1), (11, -1, 2, 3), (23, 1, 0, 3), (23, -1, 1, 2)];

/// `θ = α^{u(q^N-1)/n}` exponent under which the published small ternary
/// factors appear with their published signs.
pub const TERNARY_253_THETA_EXPONENT: u64 = 2;

pub const MTH_7_3_COSETS: [&[u64]; 3] = [&[1, 6], &[3, 4], &[2, 5]];
pub const MTH_17_4_COSETS: [&[u64]; 4] = [&[1, 4, 13, 16], &[3, 5, 12, 14], &[2, 8, 9, 15], &[6, 7, 10, 11]];

/// The tower `F_4 = F_2[α]/(α²+α+1)`, `F_16 = F_4[β]/(β²+β+α)`, with `θ = β`.
pub fn quaternary_15_context() -> Result<QrContext> {
    let f2 = Field::prime(2)?;
    let f4 = Field::extension(&f2, 2, Some(&Poly::from_indices(&f2, &[1, 1, 1])?))?;
    let a = f4.primitive_element();
    let m = Poly::from_elements(&f4, vec![a, f4.one(), f4.one()])?;
    let f16 = Field::extension(&f4, 2, Some(&m))?;
    let ctx = QrContext::from_tower(&[3, 5], &f4, &f16)?;
    let beta = f16.element(&[0, 1])?;
    if ctx.theta() != &beta {
        return Err(Error::Invariant("β should be the designated 15th root".into()));
    }
    Ok(ctx)
}

/// The code of one row of [`QUATERNARY_15_ROWS`].
pub fn quaternary_15_row_code(ctx: &QrContext, row: &Row15) -> Result<CyclicCode> {
    let (q1, e1, e3, e5, ..) = *row;
    ctx.build_code(&ctx.selector(&[(q1, e1), (5, e3), (3, e5)])?)
}

/// Unit-class cyclotomic coset polynomials of `ctx`.
pub fn unit_coset_polynomials(ctx: &QrContext) -> Vec<Poly> {
    let n = ctx.n();
    ctx.cyclotomic_cosets()
        .iter()
        .zip(ctx.coset_polynomials())
        .filter(|(c, _)| gcd(c[0], n) == 1)
        .map(|(_, p)| p.clone())
        .collect()
}

/// For each published pairing `F^ε_{1,Q} = U_i U_j`, the `(Q', ε')` whose
/// factor actually equals `U_i U_j` under `ctx`.
pub fn locate_pairings(
    ctx: &QrContext,
    unit: &[Poly],
    pairings: &[(u64, i8, usize, usize)],
) -> Result<Vec<Option<(u64, i8)>>> {
    let class = ctx.partition().class(1).ok_or_else(|| Error::Invariant("no unit class".into()))?;
    let mut out = Vec::new();
    for &(_, _, i, j) in pairings {
        let prod = unit[i].mul(&unit[j])?;
        let mut hit = None;
        for q in class.moduli() {
            for s in [1, -1] {
                if ctx.factor(1, q, s)? == prod {
                    hit = Some((q, s));
                }
            }
        }
        out.push(hit);
    }
    Ok(out)
}

/// Tunable expectations, so a deliberately wrong value can be injected.
#[derive(Debug, Clone)]
pub struct Expectations {
    pub histogram_15: BTreeMap<usize, usize>,
}

impl Default for Expectations {
    fn default() -> Self {
        Expectations { histogram_15: quaternary_15_histogram() }
    }
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub passed: bool,
    pub detail: String,
}

impl Outcome {
    fn from(failures: Vec<String>, ok: String) -> Outcome {
        if failures.is_empty() {
            Outcome { passed: true, detail: ok }
        } else {
            Outcome { passed: false, detail: failures.join("; ") }
        }
    }
}

pub struct Check {
    pub id: &'static str,
    pub alias: Option<&'static str>,
    pub title: &'static str,
    pub limit: Duration,
    pub run: fn(&Expectations) -> Result<Outcome>,
}

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub id: &'static str,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub limit: Duration,
}

impl std::fmt::Display for CheckResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} {:<24} {:>8.2}s  {}: {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.elapsed.as_secs_f64(),
            self.title,
            self.detail
        )
    }
}

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

pub const CHECKS: [Check; 12] = [
    Check { id: "count-15", alias: None, title: "24 selectors for n=15 over F_4", limit: secs(1), run: check_count_15 },
    Check {
        id: "histogram-15",
        alias: Some("table1"),
        title: "distance histogram of the [15,8]_4 codes",
        limit: secs(5),
        run: check_histogram_15,
    },
    Check { id: "rows-15", alias: None, title: "24 generator rows with distances", limit: secs(5), run: check_rows_15 },
    Check { id: "factors-15", alias: None, title: "factors of x^15-1 over F_4", limit: secs(1), run: check_factors_15 },
    Check { id: "binary-161", alias: None, title: "n=161 over F_2", limit: secs(10), run: check_binary_161 },
    Check { id: "ternary-253", alias: None, title: "n=253 over F_3", limit: secs(30), run: check_ternary_253 },
    Check {
        id: "quaternary-2465",
        alias: None,
        title: "n=2465 over F_4, sampled",
        limit: secs(300),
        run: check_quaternary_2465,
    },
    Check {
        id: "quaternary-231",
        alias: None,
        title: "n=231 over F_4, character filter",
        limit: secs(120),
        run: check_quaternary_231,
    },
    Check { id: "mth-examples", alias: None, title: "cubic and quartic residue codes", limit: secs(1), run: check_mth },
    Check {
        id: "predicates",
        alias: None,
        title: "algebraic vs matrix LCD and dual-containing tests",
        limit: secs(60),
        run: check_predicates,
    },
    Check {
        id: "column-dependence-15",
        alias: None,
        title: "distance equals dependent-column oracle",
        limit: secs(120),
        run: check_column_dependence,
    },
    Check {
        id: "mth-sweep",
        alias: None,
        title: "m-th residue congruences for p<100",
        limit: secs(60),
        run: check_mth_sweep,
    },
];

/// Looks a check up by id or alias.
pub fn find_check(name: &str) -> Option<&'static Check> {
    CHECKS.iter().find(|c| c.id == name || c.alias == Some(name))
}

pub fn run_check(check: &Check, exp: &Expectations) -> CheckResult {
    let start = Instant::now();
    let outcome = (check.run)(exp).unwrap_or_else(|e| Outcome { passed: false, detail: format!("error: {e}") });
    let elapsed = start.elapsed();
    let mut passed = outcome.passed;
    let mut detail = outcome.detail;
    if elapsed > check.limit {
        passed = false;
        detail = format!("{detail}; exceeded {}s", check.limit.as_secs());
    }
    CheckResult { id: check.id, title: check.title, passed, detail, elapsed, limit: check.limit }
}

/// Runs every check, or only `only`. Unknown names yield `None`.
pub fn run_checks(only: Option<&str>, exp: &Expectations) -> Option<Vec<CheckResult>> {
    match only {
        Some(name) => find_check(name).map(|c| vec![run_check(c, exp)]),
        None => Some(CHECKS.iter().map(|c| run_check(c, exp)).collect()),
    }
}

fn expect<T: PartialEq + std::fmt::Debug>(failures: &mut Vec<String>, what: &str, got: T, want: T) {
    if got != want {
        failures.push(format!("{what}: got {got:?}, want {want:?}"));
    }
}

fn check_count_15(_: &Expectations) -> Result<Outcome> {
    let ctx = quaternary_15_context()?;
    let mut f = Vec::new();
    expect(&mut f, "count_all(2)", count_all(2), 24);
    expect(&mut f, "selectors", ctx.selector_count(), 24);
    let built = ctx.selectors().map(|s| ctx.build_code(&s)).collect::<Result<Vec<_>>>()?;
    expect(&mut f, "codes built", built.len(), 24);
    let distinct: BTreeSet<String> = built.iter().map(|c| c.generator().render_expanded()).collect();
    expect(&mut f, "distinct generators", distinct.len(), 24);
    Ok(Outcome::from(f, "24 distinct codes".into()))
}

fn check_histogram_15(exp: &Expectations) -> Result<Outcome> {
    let ctx = quaternary_15_context()?;
    let opts = ClassifyOptions { distance_budget: Some(DEFAULT_DISTANCE_BUDGET), ..Default::default() };
    let hist = ctx.classify_all(&opts)?.distance_histogram;
    let mut f = Vec::new();
    expect(&mut f, "histogram", &hist, &exp.histogram_15);
    Ok(Outcome::from(f, format!("{hist:?}")))
}

fn check_rows_15(_: &Expectations) -> Result<Outcome> {
    let ctx = quaternary_15_context()?;
    let mut f = Vec::new();
    for row in &QUATERNARY_15_ROWS {
        let code = quaternary_15_row_code(&ctx, row)?;
        let g = code.generator().render_expanded();
        if g != row.4 {
            f.push(format!("Q1={} signs ({},{},{}): built {g}, want {}", row.0, row.1, row.2, row.3, row.4));
        }
        let d = code.minimum_distance(DEFAULT_DISTANCE_BUDGET)?;
        if !d.is_exact() || d.d != row.5 {
            f.push(format!("{}: distance {} want {}", row.4, d.d, row.5));
        }
    }
    Ok(Outcome::from(f, "24/24 generators and distances match".into()))
}

fn check_factors_15(_: &Expectations) -> Result<Outcome> {
    let ctx = quaternary_15_context()?;
    let f4 = ctx.base();
    let mut f = Vec::new();
    for &(class, q, s, parts) in &QUATERNARY_15_FACTORS {
        let mut want = Poly::one(f4);
        for p in parts {
            want = want.mul(&Poly::parse_expanded(f4, p)?)?;
        }
        let got = ctx.factor(class, q, s)?;
        if got != want {
            f.push(format!("F({class},{q},{s}) = {}", got.render_expanded()));
        }
    }
    let sel = ctx.selector(&[(15, 1), (5, 1), (3, 1)])?;
    let code = ctx.build_code(&sel)?;
    let h = code.parity_check_polynomial().render_expanded();
    expect(&mut f, "h(x)", h.as_str(), QUATERNARY_15_PARITY_CHECK);
    Ok(Outcome::from(f, "10 factors and h(x) match".into()))
}

/// Shared part of the two binary/ternary examples.
struct TwoPrimeReport {
    failures: Vec<String>,
    relabel: Vec<Option<(u64, i8)>>,
}

fn check_two_prime(
    ctx: &QrContext,
    small: &[(u64, u64, i8, &str)],
    unit_printed: &[&str],
    pairings: &[(u64, i8, usize, usize)],
) -> Result<TwoPrimeReport> {
    let f = ctx.base();
    let mut failures = Vec::new();
    for &(class, q, s, text) in small {
        if ctx.factor(class, q, s)? != Poly::parse_expanded(f, text)? {
            failures.push(format!("F({class},{q},{s}) differs"));
        }
    }
    let unit: Vec<Poly> = unit_printed.iter().map(|s| Poly::parse_expanded(f, s)).collect::<Result<_>>()?;
    let mut got: Vec<Vec<u32>> = unit_coset_polynomials(ctx).iter().map(|p| p.to_indices().unwrap()).collect();
    let mut want: Vec<Vec<u32>> = unit.iter().map(|p| p.to_indices().unwrap()).collect();
    got.sort();
    want.sort();
    if got != want {
        failures.push("unit-class irreducible factors differ".into());
    }

    let n = ctx.n() as usize;
    let mut prod = Poly::from_ints(f, &[-1, 1]);
    for p in &unit {
        prod = prod.mul(p)?;
    }
    for &(_, _, _, text) in small {
        prod = prod.mul(&Poly::parse_expanded(f, text)?)?;
    }
    if prod != Poly::x_n_minus_one(f, n) {
        failures.push(format!("published factors times (x-1) differ from x^{n}-1"));
    }
    let mut computed = Poly::from_ints(f, &[-1, 1]);
    let top_q = ctx.n();
    let primes = &ctx.length().primes;
    for (class, q) in [(1, top_q), (primes[0], primes[1]), (primes[1], primes[0])] {
        for s in [1, -1] {
            computed = computed.mul(&ctx.factor(class, q, s)?)?;
        }
    }
    if computed != Poly::x_n_minus_one(f, n) {
        failures.push(format!("computed factors times (x-1) differ from x^{n}-1"));
    }

    let opts = ClassifyOptions { cross_check: true, ..Default::default() };
    let c = ctx.classify_all(&opts)?;
    expect(&mut failures, "codes", c.reports.len(), 24);
    expect(&mut failures, "dual-containing", c.dual_containing_count, count_dual_containing(primes));
    expect(&mut failures, "dual-containing", c.dual_containing_count, 16);
    expect(&mut failures, "LCD", c.lcd_count, 0);
    expect(&mut failures, "k", c.reports.iter().all(|r| r.k == (n + 1) / 2), true);

    let relabel = locate_pairings(ctx, &unit, pairings)?;
    Ok(TwoPrimeReport { failures, relabel })
}

fn relabel_note(pairings: &[(u64, i8, usize, usize)], found: &[Option<(u64, i8)>]) -> String {
    let moved: Vec<String> = pairings
        .iter()
        .zip(found)
        .filter(|((q, s, ..), f)| **f != Some((*q, *s)))
        .map(|((q, s, i, j), f)| match f {
            Some((q2, s2)) => format!("U{}U{}: listed ({q},{s:+}) is ({q2},{s2:+})", i + 1, j + 1),
            None => format!("U{}U{}: listed ({q},{s:+}) is no factor", i + 1, j + 1),
        })
        .collect();
    if moved.is_empty() {
        "all pairings as listed".into()
    } else {
        format!("pairing labels: {}", moved.join(", "))
    }
}

fn check_binary_161(_: &Expectations) -> Result<Outcome> {
    let ctx = QrContext::new(&[7, 23], 2)?;
    let r = check_two_prime(&ctx, &BINARY_161_SMALL, &BINARY_161_UNIT, &BINARY_161_PAIRINGS)?;
    let note = relabel_note(&BINARY_161_PAIRINGS, &r.relabel);
    Ok(Outcome::from(r.failures, format!("factors match, 16 dual-containing, 0 LCD; {note}")))
}

fn check_ternary_253(_: &Expectations) -> Result<Outcome> {
    let ctx = QrContext::new(&[11, 23], 3)?.with_theta_exponent(TERNARY_253_THETA_EXPONENT)?;
    let r = check_two_prime(&ctx, &TERNARY_253_SMALL, &TERNARY_253_UNIT, &TERNARY_253_PAIRINGS)?;
    let note = relabel_note(&TERNARY_253_PAIRINGS, &r.relabel);
    Ok(Outcome::from(
        r.failures,
        format!("product is x^253-1, 16 dual-containing, 0 LCD (θ exponent {TERNARY_253_THETA_EXPONENT}); {note}"),
    ))
}

/// Evenly spaced selector indices.
pub fn sample_indices(total: u128, count: u128) -> Vec<u128> {
    let count = count.min(total);
    (0..count).map(|i| i * total / count).collect()
}

fn check_quaternary_2465(_: &Expectations) -> Result<Outcome> {
    let primes = [5, 17, 29];
    let ctx = QrContext::new(&primes, 4)?;
    let mut f = Vec::new();
    expect(&mut f, "admissible", ctx.admissible(), true);
    expect(&mut f, "selectors", ctx.selector_count(), 24192);
    expect(&mut f, "LCD formula", count_lcd(&primes), 24192);
    expect(&mut f, "dual-containing formula", count_dual_containing(&primes), 0);
    let sample = sample_indices(ctx.selector_count(), 32);
    let flags: Vec<(bool, bool, bool)> = {
        use rayon::prelude::*;
        sample
            .par_iter()
            .map(|&i| {
                let sel = ctx.selector_at(i)?;
                let code = ctx.build_code(&sel)?;
                Ok((code.is_lcd(), code.is_dual_containing(), code.k() == 1233))
            })
            .collect::<Result<_>>()?
    };
    for (i, (lcd, dc, k)) in sample.iter().zip(&flags) {
        if !lcd || *dc || !k {
            f.push(format!("selector {i}: lcd={lcd} dc={dc} k ok={k}"));
        }
    }
    let lcd_all = ctx.selectors().all(|s| ctx.selector_is_lcd(&s));
    expect(&mut f, "every selector LCD by character", lcd_all, true);
    Ok(Outcome::from(f, format!("{} sampled codes LCD, none dual-containing", sample.len())))
}

fn check_quaternary_231(_: &Expectations) -> Result<Outcome> {
    let primes = [3, 7, 11];
    let ctx = QrContext::new(&primes, 4)?;
    let mut f = Vec::new();
    let (mut dc, mut lcd, mut total) = (0u128, 0u128, 0u128);
    for s in ctx.selectors() {
        total += 1;
        dc += ctx.selector_is_dual_containing(&s) as u128;
        lcd += ctx.selector_is_lcd(&s) as u128;
    }
    expect(&mut f, "selectors", total, 24192);
    expect(&mut f, "dual-containing by filter", dc, 4096);
    expect(&mut f, "dual-containing formula", count_dual_containing(&primes), 4096);
    expect(&mut f, "LCD", lcd, 0);
    expect(&mut f, "LCD formula", count_lcd(&primes), 0);
    Ok(Outcome::from(f, "4096 of 24192 dual-containing, 0 LCD".into()))
}

fn mth_codes(p: u64, m: u64) -> Result<(MthContext, Vec<CyclicCode>)> {
    let ctx = MthContext::new(p, m, None)?;
    let codes = (0..m as usize).map(|j| ctx.build_residue_code(j, false)).collect::<Result<_>>()?;
    Ok((ctx, codes))
}

fn check_mth(_: &Expectations) -> Result<Outcome> {
    let mut f = Vec::new();
    let (c7, codes7) = mth_codes(7, 3)?;
    expect(&mut f, "p=7 cosets", c7.classes.cosets.clone(), MTH_7_3_COSETS.iter().map(|c| c.to_vec()).collect());
    expect(&mut f, "p=7 LCD", codes7.iter().filter(|c| c.is_lcd()).count(), 3);
    expect(&mut f, "p=7 dual-containing", codes7.iter().filter(|c| c.is_dual_containing()).count(), 0);
    let (c17, codes17) = mth_codes(17, 4)?;
    expect(&mut f, "p=17 cosets", c17.classes.cosets.clone(), MTH_17_4_COSETS.iter().map(|c| c.to_vec()).collect());
    expect(&mut f, "p=17 LCD", codes17.iter().filter(|c| c.is_lcd()).count(), 4);
    expect(&mut f, "p=17 dims", codes17.iter().all(|c| c.k() == 13), true);
    Ok(Outcome::from(f, format!("q={} and q={}: all LCD", c7.q(), c17.q())))
}

/// Every code the other checks build, for predicate cross-validation.
pub fn cross_validation_codes() -> Result<Vec<CyclicCode>> {
    let mut codes = Vec::new();
    let c15 = quaternary_15_context()?;
    for s in c15.selectors() {
        codes.push(c15.build_code(&s)?);
    }
    let c161 = QrContext::new(&[7, 23], 2)?;
    let c253 = QrContext::new(&[11, 23], 3)?.with_theta_exponent(TERNARY_253_THETA_EXPONENT)?;
    for ctx in [&c161, &c253] {
        for s in ctx.selectors() {
            codes.push(ctx.build_code(&s)?);
        }
    }
    for (p, m) in [(7, 3), (17, 4)] {
        let ctx = MthContext::new(p, m, None)?;
        for j in 0..m as usize {
            for unit in [false, true] {
                codes.push(ctx.build_residue_code(j, unit)?);
            }
        }
    }
    Ok(codes)
}

fn check_predicates(_: &Expectations) -> Result<Outcome> {
    use rayon::prelude::*;
    let codes = cross_validation_codes()?;
    let bad: Vec<String> = codes
        .par_iter()
        .map(|c| -> Result<Option<String>> {
            let lcd = (c.is_lcd(), c.is_lcd_by_rank()?);
            let dc = (c.is_dual_containing(), c.is_dual_containing_by_matrix()?);
            Ok((lcd.0 != lcd.1 || dc.0 != dc.1).then(|| {
                format!("n={} g={}: lcd {lcd:?} dc {dc:?}", c.n(), c.generator().render_expanded())
            }))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    Ok(Outcome::from(bad, format!("{} codes, 0 disagreements", codes.len())))
}

fn check_column_dependence(_: &Expectations) -> Result<Outcome> {
    use rayon::prelude::*;
    let ctx = quaternary_15_context()?;
    let sels: Vec<_> = ctx.selectors().collect();
    let bad: Vec<String> = sels
        .par_iter()
        .map(|s| -> Result<Option<String>> {
            let code = ctx.build_code(s)?;
            let d = code.minimum_distance(DEFAULT_DISTANCE_BUDGET)?.d;
            let oracle = smallest_dependent_columns(code.parity_check_matrix()?, 6);
            Ok((oracle != Some(d)).then(|| format!("{s}: enumeration {d}, columns {oracle:?}")))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    Ok(Outcome::from(bad, "24/24 agree".into()))
}

/// `(p, m)` pairs with `p < bound` an odd prime, `m ≥ 2` and `m | p - 1`.
pub fn mth_sweep_pairs(bound: u64) -> Vec<(u64, u64)> {
    let is_prime = |p: u64| p > 1 && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0);
    (3..bound)
        .filter(|&p| is_prime(p))
        .flat_map(|p| (2..p).filter(move |m| (p - 1) % m == 0).map(move |m| (p, m)))
        .collect()
}

fn check_mth_sweep(_: &Expectations) -> Result<Outcome> {
    use rayon::prelude::*;
    let pairs = mth_sweep_pairs(100);
    let bad: Vec<String> = pairs
        .par_iter()
        .map(|&(p, m)| -> Result<Vec<String>> {
            let (_, codes) = mth_codes(p, m)?;
            let mut f = Vec::new();
            let all_lcd = codes.iter().all(|c| c.is_lcd());
            if all_lcd != lcd_criterion(p, m) {
                f.push(format!("p={p} m={m}: all LCD {all_lcd}"));
            }
            let all_dc = codes.iter().all(|c| c.is_dual_containing());
            if m == 2 && all_dc != (p % 4 == 3) {
                f.push(format!("p={p} m=2: all dual-containing {all_dc}"));
            }
            if all_dc != dual_containing_criterion(p, m) {
                f.push(format!("p={p} m={m}: dual-containing congruence disagrees"));
            }
            Ok(f)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    Ok(Outcome::from(bad, format!("{} (p, m) pairs, 0 counterexamples", pairs.len())))
}
