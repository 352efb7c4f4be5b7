//! Quadratic residue codes of squarefree odd length `n = p_1 ⋯ p_g`.
//!
//! Each nonzero residue class `M_i = {j : gcd(j, n) = i}` is split in half by the
//! Jacobi character `(j/Q)` for a chosen divisor `Q > 1` of `n / i`. A selector
//! picks one `(Q, ε)` per class; the code is generated by
//! `∏_i ∏_{t ∈ M^ε_{i,Q}} (x - θ^t)` with `θ` a fixed primitive `n`-th root of
//! unity. When `(q/p) = 1` for every prime the generator lies in `F_q[x]`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cyclic::{poly_json, CyclicCode, DistanceRecord};
use crate::error::{Error, Result};
use crate::field::{Elem, Field, FieldElement};
use crate::poly::Poly;
use crate::residue::{chi, gcd, LengthContext, ResiduePartition};

/// One `(Q, ε)` choice for the class with the given divisor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Choice {
    pub class: u64,
    pub modulus: u64,
    pub sign: i8,
}

/// One choice per class, in partition class order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Selector {
    pub choices: Vec<Choice>,
}

impl Selector {
    pub fn signs(&self) -> Vec<i8> {
        self.choices.iter().map(|c| c.sign).collect()
    }

    pub fn moduli(&self) -> Vec<u64> {
        self.choices.iter().map(|c| c.modulus).collect()
    }

    /// The selector with every sign flipped.
    pub fn complement(&self) -> Selector {
        Selector {
            choices: self.choices.iter().map(|c| Choice { sign: -c.sign, ..*c }).collect(),
        }
    }

    pub fn choice(&self, class: u64) -> Option<&Choice> {
        self.choices.iter().find(|c| c.class == class)
    }
}

impl fmt::Display for Selector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .choices
            .iter()
            .map(|c| format!("{}:{}{}", c.class, c.modulus, if c.sign > 0 { '+' } else { '-' }))
            .collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// `∏_{r=0}^{g-1} (2(2^{g-r} - 1))^{C(g,r)}`: the number of selectors for `g` primes.
pub fn count_all(g: u32) -> u128 {
    let mut binom = 1u128;
    let mut total = 1u128;
    for r in 0..g {
        let factor = 2 * ((1u128 << (g - r)) - 1);
        total *= factor.pow(binom as u32);
        binom = binom * (g - r) as u128 / (r + 1) as u128;
    }
    total
}

/// `(q/p_i) = 1` for all `i`.
pub fn base_field_admissible(primes: &[u64], q: u64) -> bool {
    primes.iter().all(|&p| chi(q as i64, p) == 1)
}

pub fn lcd_exists(primes: &[u64]) -> bool {
    primes.iter().all(|&p| p % 4 == 1)
}

pub fn dual_containing_exists(primes: &[u64]) -> bool {
    primes.iter().all(|&p| p % 4 == 3)
}

pub fn count_lcd(primes: &[u64]) -> u128 {
    if lcd_exists(primes) {
        count_all(primes.len() as u32)
    } else {
        0
    }
}

/// `2^{g·2^{g-1}}` when every prime is `3 mod 4`, else 0.
pub fn count_dual_containing(primes: &[u64]) -> u128 {
    let g = primes.len() as u32;
    if dual_containing_exists(primes) {
        1u128 << (g << (g - 1))
    } else {
        0
    }
}

/// Everything needed to build the codes of one length over one base field.
pub struct QrContext {
    length: LengthContext,
    partition: ResiduePartition,
    base: Field,
    top: Field,
    theta: FieldElement,
    theta_exponent: u64,
    theta_powers: Vec<Elem>,
    /// `q`-cyclotomic cosets of `Z_n`, each sorted, ordered by least element.
    cosets: Vec<Vec<u64>>,
    coset_of: Vec<usize>,
    coset_polys: OnceLock<Vec<Poly>>,
}

impl fmt::Debug for QrContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("QrContext")
            .field("length", &self.length)
            .field("base", &self.base)
            .field("top", &self.top)
            .field("theta_exponent", &self.theta_exponent)
            .finish()
    }
}

impl QrContext {
    /// Builds `F_q`, its degree-`ord_n(q)` extension and `θ = α^{(q^N - 1)/n}`
    /// with the default moduli and primitive elements.
    pub fn new(primes: &[u64], q: u64) -> Result<QrContext> {
        let length = LengthContext::new(primes, q)?;
        let base = Field::prime_power(q)?;
        let top = Field::extension(&base, length.extension_degree as usize, None)?;
        Self::assemble(length, base, top)
    }

    /// Uses a caller-supplied tower; `top` must be `base` or an extension of it
    /// containing the `n`-th roots of unity.
    pub fn from_tower(primes: &[u64], base: &Field, top: &Field) -> Result<QrContext> {
        let q = u64::try_from(base.order()).map_err(|_| Error::FieldTooLarge("base".into()))?;
        let length = LengthContext::new(primes, q)?;
        if top != base && top.base() != Some(base) {
            return Err(Error::FieldMismatch);
        }
        Self::assemble(length, base.clone(), top.clone())
    }

    fn assemble(length: LengthContext, base: Field, top: Field) -> Result<QrContext> {
        let partition = ResiduePartition::new(&length.primes)?;
        let theta = top.nth_primitive_root(length.n)?;
        let n = length.n;
        let q = length.q % n;
        let mut coset_of = vec![usize::MAX; n as usize];
        let mut cosets = Vec::new();
        for start in 0..n {
            if coset_of[start as usize] != usize::MAX {
                continue;
            }
            let mut c = Vec::new();
            let mut t = start;
            while coset_of[t as usize] == usize::MAX {
                coset_of[t as usize] = cosets.len();
                c.push(t);
                t = t * q % n;
            }
            c.sort_unstable();
            cosets.push(c);
        }
        let mut ctx = QrContext {
            length,
            partition,
            base,
            top,
            theta: theta.clone(),
            theta_exponent: 1,
            theta_powers: Vec::new(),
            cosets,
            coset_of,
            coset_polys: OnceLock::new(),
        };
        ctx.theta_powers = ctx.powers_of(&theta);
        Ok(ctx)
    }

    fn powers_of(&self, theta: &FieldElement) -> Vec<Elem> {
        let f = &self.top;
        let mut out = Vec::with_capacity(self.length.n as usize);
        let mut x = f.one_raw();
        for _ in 0..self.length.n {
            out.push(x.clone());
            x = f.mul_raw(&x, theta.raw());
        }
        out
    }

    /// The same context with `θ` replaced by `θ^u` for `u` coprime to `n`.
    pub fn with_theta_exponent(&self, u: u64) -> Result<QrContext> {
        let n = self.length.n;
        if gcd(u % n, n) != 1 {
            return Err(Error::NotCoprime { a: u, n });
        }
        let base_theta = self.top.nth_primitive_root(n)?;
        let theta = base_theta.pow((u % n) as i128)?;
        Ok(QrContext {
            length: self.length.clone(),
            partition: self.partition.clone(),
            base: self.base.clone(),
            top: self.top.clone(),
            theta_powers: self.powers_of(&theta),
            theta,
            theta_exponent: u % n,
            cosets: self.cosets.clone(),
            coset_of: self.coset_of.clone(),
            coset_polys: OnceLock::new(),
        })
    }

    pub fn length(&self) -> &LengthContext {
        &self.length
    }

    pub fn n(&self) -> u64 {
        self.length.n
    }

    pub fn partition(&self) -> &ResiduePartition {
        &self.partition
    }

    pub fn base(&self) -> &Field {
        &self.base
    }

    /// The splitting field `F_{q^N}` of `x^n - 1`.
    pub fn top(&self) -> &Field {
        &self.top
    }

    pub fn theta(&self) -> &FieldElement {
        &self.theta
    }

    pub fn theta_exponent(&self) -> u64 {
        self.theta_exponent
    }

    pub fn admissible(&self) -> bool {
        self.length.admissible()
    }

    pub fn cyclotomic_cosets(&self) -> &[Vec<u64>] {
        &self.cosets
    }

    fn not_admissible(&self, primes: &[u64]) -> Error {
        let prime = primes
            .iter()
            .copied()
            .find(|&p| chi(self.length.q as i64, p) != 1)
            .unwrap_or(primes[0]);
        Error::NotAdmissible { q: self.length.q, prime }
    }

    /// Minimal polynomial over `F_q` of `θ^t` for the least `t` of each coset.
    pub fn coset_polynomials(&self) -> &[Poly] {
        self.coset_polys.get_or_init(|| {
            self.cosets
                .par_iter()
                .map(|c| {
                    let p = Poly::product_of_roots(
                        &self.top,
                        c.iter().map(|&t| &self.theta_powers[t as usize]),
                    );
                    self.descend(&p).expect("cyclotomic coset polynomials lie over F_q")
                })
                .collect()
        })
    }

    fn descend(&self, p: &Poly) -> Result<Poly> {
        if p.field() == &self.base {
            Ok(p.clone())
        } else {
            p.coerce_to_base()
        }
    }

    fn split_half(&self, class: u64, modulus: u64, sign: i8) -> Result<&[u64]> {
        let c = self
            .partition
            .class(class)
            .ok_or_else(|| Error::BadSelector(format!("no class {class}")))?;
        let s = c
            .split(modulus)
            .ok_or_else(|| Error::BadSelector(format!("{modulus} is not a modulus for class {class}")))?;
        if sign != 1 && sign != -1 {
            return Err(Error::BadSelector(format!("sign {sign}")));
        }
        Ok(s.half(sign))
    }

    /// The root exponents `M^ε_{i,Q}`.
    pub fn roots(&self, class: u64, modulus: u64, sign: i8) -> Result<Vec<u64>> {
        Ok(self.split_half(class, modulus, sign)?.to_vec())
    }

    /// `F^ε_{i,Q}` over `F_q`, assembled from cyclotomic coset polynomials.
    ///
    /// Fails when `(q/Q) = -1`, since the half is then not closed under `t ↦ qt`.
    pub fn factor(&self, class: u64, modulus: u64, sign: i8) -> Result<Poly> {
        let half = self.split_half(class, modulus, sign)?;
        if chi(self.length.q as i64, modulus) != 1 {
            let primes: Vec<u64> =
                self.length.primes.iter().copied().filter(|p| modulus % p == 0).collect();
            return Err(self.not_admissible(&primes));
        }
        let polys = self.coset_polynomials();
        let mut ids: Vec<usize> = half.iter().map(|&t| self.coset_of[t as usize]).collect();
        ids.sort_unstable();
        ids.dedup();
        let mut out = Poly::one(&self.base);
        for id in ids {
            out = out.mul(&polys[id])?;
        }
        Ok(out)
    }

    /// `F^ε_{i,Q}` as a direct product of linear factors over `F_{q^N}`.
    pub fn extension_factor(&self, class: u64, modulus: u64, sign: i8) -> Result<Poly> {
        let half = self.split_half(class, modulus, sign)?;
        Ok(Poly::product_of_roots(&self.top, half.iter().map(|&t| &self.theta_powers[t as usize])))
    }

    fn check_selector(&self, sel: &Selector) -> Result<()> {
        if sel.choices.len() != self.partition.classes.len() {
            return Err(Error::BadSelector(format!(
                "expected {} choices, got {}",
                self.partition.classes.len(),
                sel.choices.len()
            )));
        }
        for (c, class) in sel.choices.iter().zip(&self.partition.classes) {
            if c.class != class.divisor {
                return Err(Error::BadSelector(format!("class {} out of order", c.class)));
            }
        }
        Ok(())
    }

    /// The generator over `F_q`.
    pub fn build_generator(&self, sel: &Selector) -> Result<Poly> {
        self.check_selector(sel)?;
        if !self.admissible() {
            return Err(self.not_admissible(&self.length.primes));
        }
        let mut g = Poly::one(&self.base);
        for c in &sel.choices {
            g = g.mul(&self.factor(c.class, c.modulus, c.sign)?)?;
        }
        self.check_degree(&g)?;
        Ok(g)
    }

    /// The generator computed as one product over `F_{q^N}` and then descended.
    pub fn build_generator_direct(&self, sel: &Selector) -> Result<Poly> {
        let g = self.build_extension_generator(sel)?;
        let g = self
            .descend(&g)
            .map_err(|_| self.not_admissible(&self.length.primes))?;
        self.check_degree(&g)?;
        Ok(g)
    }

    /// The generator over `F_{q^N}`, available whether or not `F_q` is admissible.
    pub fn build_extension_generator(&self, sel: &Selector) -> Result<Poly> {
        self.check_selector(sel)?;
        let mut roots = Vec::new();
        for c in &sel.choices {
            roots.extend_from_slice(self.split_half(c.class, c.modulus, c.sign)?);
        }
        Ok(Poly::product_of_roots(&self.top, roots.iter().map(|&t| &self.theta_powers[t as usize])))
    }

    fn check_degree(&self, g: &Poly) -> Result<()> {
        let expected = (self.length.n - 1) / 2;
        if g.degree() != Some(expected as usize) {
            return Err(Error::Invariant(format!(
                "generator degree {:?}, expected {expected}",
                g.degree()
            )));
        }
        Ok(())
    }

    pub fn build_code(&self, sel: &Selector) -> Result<CyclicCode> {
        CyclicCode::new(&self.base, self.length.n as usize, self.build_generator(sel)?)
    }

    /// The code over `F_{q^N}` (not a `q`-ary code unless admissible).
    pub fn build_extension_code(&self, sel: &Selector) -> Result<CyclicCode> {
        CyclicCode::new(&self.top, self.length.n as usize, self.build_extension_generator(sel)?)
    }

    fn radices(&self) -> Vec<u128> {
        self.partition.classes.iter().map(|c| 2 * c.splits.len() as u128).collect()
    }

    pub fn selector_count(&self) -> u128 {
        self.radices().iter().product()
    }

    /// The selector at position `index` in lexicographic order over
    /// (class, `Q` ascending, `+` before `-`).
    pub fn selector_at(&self, mut index: u128) -> Result<Selector> {
        if index >= self.selector_count() {
            return Err(Error::BadSelector(format!("index {index} out of range")));
        }
        let radices = self.radices();
        let mut digits = vec![0u128; radices.len()];
        for i in (0..radices.len()).rev() {
            digits[i] = index % radices[i];
            index /= radices[i];
        }
        let choices = self
            .partition
            .classes
            .iter()
            .zip(digits)
            .map(|(c, d)| Choice {
                class: c.divisor,
                modulus: c.splits[(d / 2) as usize].modulus,
                sign: if d % 2 == 0 { 1 } else { -1 },
            })
            .collect();
        Ok(Selector { choices })
    }

    /// Inverse of [`selector_at`](Self::selector_at).
    pub fn selector_index(&self, sel: &Selector) -> Result<u128> {
        self.check_selector(sel)?;
        let mut index = 0u128;
        for (c, class) in sel.choices.iter().zip(&self.partition.classes) {
            let pos = class
                .splits
                .iter()
                .position(|s| s.modulus == c.modulus)
                .ok_or_else(|| Error::BadSelector(format!("{} not in menu of {}", c.modulus, c.class)))?;
            let d = 2 * pos as u128 + u128::from(c.sign < 0);
            index = index * 2 * class.splits.len() as u128 + d;
        }
        Ok(index)
    }

    pub fn selectors(&self) -> impl Iterator<Item = Selector> + '_ {
        (0..self.selector_count()).map(move |i| self.selector_at(i).expect("in range"))
    }

    /// Builds a selector from `(Q, ε)` pairs given in class order.
    pub fn selector(&self, pairs: &[(u64, i8)]) -> Result<Selector> {
        if pairs.len() != self.partition.classes.len() {
            return Err(Error::BadSelector(format!(
                "expected {} choices, got {}",
                self.partition.classes.len(),
                pairs.len()
            )));
        }
        let sel = Selector {
            choices: self
                .partition
                .classes
                .iter()
                .zip(pairs)
                .map(|(c, &(modulus, sign))| Choice { class: c.divisor, modulus, sign })
                .collect(),
        };
        self.selector_index(&sel)?;
        Ok(sel)
    }

    /// Selector indices ordered with the unit class's modulus `n` first, then
    /// its remaining moduli ascending; ties keep lexicographic order.
    pub fn case_grouped_order(&self) -> Vec<u128> {
        let n = self.length.n;
        let mut idx: Vec<u128> = (0..self.selector_count()).collect();
        idx.sort_by_key(|&i| {
            let s = self.selector_at(i).expect("in range");
            let q1 = s.choices[0].modulus;
            (q1 != n, q1, i)
        });
        idx
    }

    /// `(-1/Q) = 1` for every chosen modulus: the generator is self-reciprocal.
    pub fn selector_is_lcd(&self, sel: &Selector) -> bool {
        sel.choices.iter().all(|c| chi(-1, c.modulus) == 1)
    }

    /// `(-1/Q) = -1` for every chosen modulus: `g` divides `h*`.
    pub fn selector_is_dual_containing(&self, sel: &Selector) -> bool {
        sel.choices.iter().all(|c| chi(-1, c.modulus) == -1)
    }

    pub fn report(&self, index: u128, options: &ClassifyOptions) -> Result<QrCodeReport> {
        let sel = self.selector_at(index)?;
        if !self.admissible() {
            let code = self.build_extension_code(&sel)?;
            return Ok(QrCodeReport {
                index,
                generator: code.generator().to_string(),
                coefficients: poly_json(code.generator()),
                n: code.n(),
                k: code.k(),
                lcd: code.is_lcd(),
                dual_containing: code.is_dual_containing(),
                q_ary: false,
                distance: None,
                selector: sel,
            });
        }
        let code = self.build_code(&sel)?;
        let (lcd, dc) = (code.is_lcd(), code.is_dual_containing());
        if options.cross_check {
            if lcd != self.selector_is_lcd(&sel) || dc != self.selector_is_dual_containing(&sel) {
                return Err(Error::Invariant(format!("character predicates disagree for {sel}")));
            }
            if lcd != code.is_lcd_by_rank()? {
                return Err(Error::Invariant(format!("LCD tests disagree for {sel}")));
            }
            if dc != code.is_dual_containing_by_matrix()? {
                return Err(Error::Invariant(format!("dual-containing tests disagree for {sel}")));
            }
        }
        let distance = match options.distance_budget {
            Some(b) => Some(code.minimum_distance(b)?),
            None => None,
        };
        Ok(QrCodeReport {
            index,
            generator: code.generator().render_expanded(),
            coefficients: poly_json(code.generator()),
            n: code.n(),
            k: code.k(),
            lcd,
            dual_containing: dc,
            q_ary: true,
            distance,
            selector: sel,
        })
    }

    /// One report per selector, in the given order (lexicographic if `None`).
    ///
    /// For an admissible base field the LCD and dual-containing totals are
    /// checked against [`count_lcd`] and [`count_dual_containing`].
    pub fn classify_all(&self, options: &ClassifyOptions) -> Result<Classification> {
        let order: Vec<u128> = match &options.order {
            Some(o) => o.clone(),
            None => (0..self.selector_count()).collect(),
        };
        let reports = order
            .par_iter()
            .map(|&i| self.report(i, options))
            .collect::<Result<Vec<_>>>()?;
        let lcd = reports.iter().filter(|r| r.lcd).count() as u128;
        let dc = reports.iter().filter(|r| r.dual_containing).count() as u128;
        let mut histogram = BTreeMap::new();
        for r in &reports {
            if let Some(d) = r.distance.filter(|d| d.is_exact()) {
                *histogram.entry(d.d).or_insert(0usize) += 1;
            }
        }
        let complete = reports.len() as u128 == self.selector_count();
        if self.admissible() && complete {
            let primes = &self.length.primes;
            if lcd != count_lcd(primes) || dc != count_dual_containing(primes) {
                return Err(Error::Invariant(format!(
                    "counts lcd={lcd}, dual-containing={dc} differ from the closed forms {} and {}",
                    count_lcd(primes),
                    count_dual_containing(primes)
                )));
            }
        }
        Ok(Classification { reports, lcd_count: lcd, dual_containing_count: dc, distance_histogram: histogram })
    }
}

#[derive(Debug, Clone, Default)]
pub struct ClassifyOptions {
    /// Compute minimum distances with this codeword budget.
    pub distance_budget: Option<u128>,
    /// Also compare against the matrix and character tests.
    pub cross_check: bool,
    /// Selector indices to report, in order.
    pub order: Option<Vec<u128>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QrCodeReport {
    pub index: u128,
    pub selector: Selector,
    pub generator: String,
    pub coefficients: serde_json::Value,
    pub n: usize,
    pub k: usize,
    pub lcd: bool,
    pub dual_containing: bool,
    /// False when the generator is only defined over `F_{q^N}`.
    pub q_ary: bool,
    pub distance: Option<DistanceRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub reports: Vec<QrCodeReport>,
    pub lcd_count: u128,
    pub dual_containing_count: u128,
    /// Exact minimum distance → number of codes.
    pub distance_histogram: BTreeMap<usize, usize>,
}
