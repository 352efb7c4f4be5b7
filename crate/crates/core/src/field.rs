//! Exact arithmetic in finite fields.
//!
//! A [`Field`] is either a prime field `F_p` or a simple extension `F_Q[x]/(m(x))`
//! of a smaller field `F_Q`. Extensions may be stacked, which is how the tower
//! `F_p ⊂ F_q ⊂ F_{q^N}` is built: `F_{q^N}` is a degree-`N` extension whose
//! coefficients live in `F_q`, so "lies in the subfield `F_q`" is a plain
//! coefficient check.
//!
//! Elements store their coefficient vector over the immediate base field,
//! little-endian in powers of the adjoined root. Each coefficient is the
//! *index* of a base element: for a prime field the residue itself, for an
//! extension `Σ c_j · Q^j`. Indices of every small field are therefore the
//! base-`p` digits of its flattened prime-field coordinates.
//!
//! Fields with at most [`TABLE_LIMIT`] elements carry log/exp tables
//! ([`SmallField`]) and may serve as a base for further extensions.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_prime::nt_funcs::{factorize128, factorize64, is_prime64};
use smallvec::{smallvec, SmallVec};

use crate::error::{Error, Result};
use crate::poly::Poly;

pub(crate) type Elem = SmallVec<[u32; 4]>;

/// Fields of at most this order get lookup tables and can be used as a base field.
pub const TABLE_LIMIT: u128 = 1 << 16;

/// Largest characteristic accepted (products must fit in `u64`).
const MAX_CHARACTERISTIC: u64 = 1 << 31;

/// Index-level arithmetic for a small field.
#[derive(Debug)]
pub struct SmallField {
    p: u32,
    order: u32,
    kind: SmallKind,
}

#[derive(Debug)]
enum SmallKind {
    Prime,
    Table {
        exp: Vec<u32>,
        log: Vec<u32>,
        add: Option<Vec<u32>>,
    },
}

impl SmallField {
    fn prime(p: u32) -> Self {
        SmallField { p, order: p, kind: SmallKind::Prime }
    }

    fn with_tables(p: u32, order: u32, powers: Vec<u32>) -> Self {
        let q1 = (order - 1) as usize;
        let mut exp = Vec::with_capacity(2 * q1);
        exp.extend_from_slice(&powers);
        exp.extend_from_slice(&powers);
        let mut log = vec![0u32; order as usize];
        for (i, &x) in powers.iter().enumerate() {
            log[x as usize] = i as u32;
        }
        let mut f = SmallField {
            p,
            order,
            kind: SmallKind::Table { exp, log, add: None },
        };
        if p != 2 && order <= 256 {
            let mut table = vec![0u32; (order * order) as usize];
            for a in 0..order {
                for b in 0..order {
                    table[(a * order + b) as usize] = f.digit_add(a, b);
                }
            }
            if let SmallKind::Table { add, .. } = &mut f.kind {
                *add = Some(table);
            }
        }
        f
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    fn digit_add(&self, mut a: u32, mut b: u32) -> u32 {
        let p = self.p;
        let (mut out, mut place) = (0u32, 1u32);
        while a > 0 || b > 0 {
            out += ((a % p + b % p) % p) * place;
            a /= p;
            b /= p;
            place = place.wrapping_mul(p);
        }
        out
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        match &self.kind {
            SmallKind::Prime => {
                let s = a + b;
                if s >= self.p {
                    s - self.p
                } else {
                    s
                }
            }
            SmallKind::Table { add, .. } => {
                if self.p == 2 {
                    a ^ b
                } else if let Some(t) = add {
                    t[(a * self.order + b) as usize]
                } else {
                    self.digit_add(a, b)
                }
            }
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        match self.kind {
            SmallKind::Prime => {
                if a == 0 {
                    0
                } else {
                    self.p - a
                }
            }
            SmallKind::Table { .. } => {
                if self.p == 2 {
                    return a;
                }
                let p = self.p;
                let (mut a, mut out, mut place) = (a, 0u32, 1u32);
                while a > 0 {
                    out += ((p - a % p) % p) * place;
                    a /= p;
                    place = place.wrapping_mul(p);
                }
                out
            }
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        match &self.kind {
            SmallKind::Prime => ((a as u64 * b as u64) % self.p as u64) as u32,
            SmallKind::Table { exp, log, .. } => {
                if a == 0 || b == 0 {
                    0
                } else {
                    exp[(log[a as usize] + log[b as usize]) as usize]
                }
            }
        }
    }

    /// Inverse of a nonzero element. Returns 0 for 0.
    pub fn inv(&self, a: u32) -> u32 {
        if a == 0 {
            return 0;
        }
        match &self.kind {
            SmallKind::Prime => self.pow(a, self.p as u64 - 2),
            SmallKind::Table { exp, log, .. } => {
                let q1 = self.order - 1;
                exp[((q1 - log[a as usize]) % q1) as usize]
            }
        }
    }

    pub fn pow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }
}

/// A finite field descriptor. Cheap to clone and safe to share between threads.
#[derive(Clone)]
pub struct Field(Arc<FieldInner>);

struct FieldInner {
    characteristic: u32,
    degree: usize,
    total_degree: usize,
    base: Option<Field>,
    /// Monic modulus as base-field indices, low degree first (empty for prime fields).
    modulus: Vec<u32>,
    order: u128,
    primitive: Elem,
    small: Option<SmallField>,
}

impl Field {
    /// The prime field `F_p`, with the smallest generator of `F_p*` as primitive element.
    pub fn prime(p: u64) -> Result<Field> {
        if !is_prime64(p) {
            return Err(Error::NotPrime(p));
        }
        if p >= MAX_CHARACTERISTIC {
            return Err(Error::FieldTooLarge(format!("characteristic {p}")));
        }
        let small = SmallField::prime(p as u32);
        let factors: Vec<u64> = factorize64(p - 1).into_keys().collect();
        let generator = (1..p as u32)
            .find(|&g| factors.iter().all(|&l| small.pow(g, (p - 1) / l) != 1))
            .expect("every prime field has a generator");
        Ok(Field(Arc::new(FieldInner {
            characteristic: p as u32,
            degree: 1,
            total_degree: 1,
            base: None,
            modulus: Vec::new(),
            order: p as u128,
            primitive: smallvec![generator],
            small: Some(small),
        })))
    }

    /// `F_q` for a prime power `q`, using the default modulus when `q` is not prime.
    pub fn prime_power(q: u64) -> Result<Field> {
        let (p, e) = prime_power_parts(q).ok_or(Error::NotPrimePower(q))?;
        let fp = Field::prime(p)?;
        Field::extension(&fp, e, None)
    }

    /// Degree-`k` extension of `base`.
    ///
    /// Without an explicit modulus the smallest monic irreducible of degree `k` is
    /// used, comparing coefficient vectors low degree first in base index order.
    /// The primitive element is likewise the smallest one in index order.
    /// `k = 1` without a modulus returns `base` itself.
    pub fn extension(base: &Field, k: usize, modulus: Option<&Poly>) -> Result<Field> {
        if k == 0 {
            return Err(Error::ZeroDegree);
        }
        let small = base.small().ok_or_else(|| {
            Error::FieldTooLarge(format!("base field of order {} has no tables", base.order()))
        })?;
        let modulus = match modulus {
            Some(m) => {
                if m.field() != base {
                    return Err(Error::FieldMismatch);
                }
                if m.degree() != Some(k) {
                    return Err(Error::InvalidModulus(format!(
                        "degree {:?}, expected {k}",
                        m.degree()
                    )));
                }
                if !m.is_monic() {
                    return Err(Error::InvalidModulus("not monic".into()));
                }
                if !m.is_irreducible() {
                    return Err(Error::ReducibleModulus);
                }
                m.to_indices()
                    .expect("base field is small")
            }
            None => {
                if k == 1 {
                    return Ok(base.clone());
                }
                smallest_irreducible(base, k)
            }
        };
        let q = small.order() as u128;
        let order = q
            .checked_pow(k as u32)
            .ok_or_else(|| Error::FieldTooLarge(format!("{q}^{k}")))?;
        let draft = Field(Arc::new(FieldInner {
            characteristic: base.characteristic() as u32,
            degree: k,
            total_degree: base.total_degree() * k,
            base: Some(base.clone()),
            modulus,
            order,
            primitive: smallvec![0; k],
            small: None,
        }));
        let factors: Vec<u128> = factorize128(order - 1).into_keys().collect();
        let primitive = (1..order)
            .map(|i| draft.elem_from_u128(i))
            .find(|x| draft.is_primitive_raw(x, &factors))
            .expect("multiplicative group of a finite field is cyclic");
        Ok(draft.rebuild(primitive))
    }

    /// The same field with a different designated primitive element.
    pub fn with_primitive_element(&self, x: &FieldElement) -> Result<Field> {
        if x.field() != self {
            return Err(Error::FieldMismatch);
        }
        if self.is_prime() {
            let factors: Vec<u128> = factorize128(self.order() - 1).into_keys().collect();
            if !self.is_primitive_raw(&x.coeffs, &factors) {
                return Err(Error::InvalidElement("not a primitive element".into()));
            }
            let mut inner = self.clone_inner();
            inner.primitive = x.coeffs.clone();
            return Ok(Field(Arc::new(inner)));
        }
        let factors: Vec<u128> = factorize128(self.order() - 1).into_keys().collect();
        if !self.is_primitive_raw(&x.coeffs, &factors) {
            return Err(Error::InvalidElement("not a primitive element".into()));
        }
        Ok(self.rebuild(x.coeffs.clone()))
    }

    fn clone_inner(&self) -> FieldInner {
        let s = &self.0;
        FieldInner {
            characteristic: s.characteristic,
            degree: s.degree,
            total_degree: s.total_degree,
            base: s.base.clone(),
            modulus: s.modulus.clone(),
            order: s.order,
            primitive: s.primitive.clone(),
            small: match &s.small {
                Some(sf) if matches!(sf.kind, SmallKind::Prime) => Some(SmallField::prime(sf.p)),
                _ => None,
            },
        }
    }

    /// Rebuilds an extension field around `primitive`, creating tables when small.
    fn rebuild(&self, primitive: Elem) -> Field {
        let mut inner = self.clone_inner();
        inner.small = None;
        inner.primitive = primitive.clone();
        let slow = Field(Arc::new(inner));
        if slow.order() > TABLE_LIMIT {
            return slow;
        }
        let q1 = (slow.order() - 1) as usize;
        let mut powers = Vec::with_capacity(q1);
        let mut x: Elem = slow.one_raw();
        for _ in 0..q1 {
            powers.push(slow.index_of(&x));
            x = slow.mul_raw(&x, &primitive);
        }
        let mut inner = slow.clone_inner();
        inner.small = Some(SmallField::with_tables(
            slow.characteristic(),
            slow.order() as u32,
            powers,
        ));
        Field(Arc::new(inner))
    }

    pub fn characteristic(&self) -> u32 {
        self.0.characteristic
    }

    /// Degree over the immediate base field (1 for prime fields).
    pub fn degree(&self) -> usize {
        self.0.degree
    }

    /// Degree over the prime field.
    pub fn total_degree(&self) -> usize {
        self.0.total_degree
    }

    pub fn order(&self) -> u128 {
        self.0.order
    }

    pub fn base(&self) -> Option<&Field> {
        self.0.base.as_ref()
    }

    pub fn is_prime(&self) -> bool {
        self.0.base.is_none()
    }

    /// Table-backed index arithmetic, present when the order is at most [`TABLE_LIMIT`]
    /// (and for every supported prime field).
    pub fn small(&self) -> Option<&SmallField> {
        self.0.small.as_ref()
    }

    /// The defining polynomial over the base field, or `None` for prime fields.
    pub fn modulus(&self) -> Option<Poly> {
        let base = self.base()?;
        Some(Poly::from_indices(base, &self.0.modulus).expect("modulus indices are valid"))
    }

    pub fn primitive_element(&self) -> FieldElement {
        self.wrap(self.0.primitive.clone())
    }

    pub fn zero(&self) -> FieldElement {
        self.wrap(self.zero_raw())
    }

    pub fn one(&self) -> FieldElement {
        self.wrap(self.one_raw())
    }

    /// Image of an integer under `Z -> F_p ⊆ self`.
    pub fn from_int(&self, v: i64) -> FieldElement {
        self.wrap(self.int_raw(v))
    }

    /// Element from its coefficient vector over the base field.
    pub fn element(&self, coeffs: &[u32]) -> Result<FieldElement> {
        if coeffs.len() != self.degree() {
            return Err(Error::InvalidElement(format!(
                "expected {} coefficients, got {}",
                self.degree(),
                coeffs.len()
            )));
        }
        let bound = self.coeff_bound();
        if let Some(&c) = coeffs.iter().find(|&&c| c >= bound) {
            return Err(Error::InvalidElement(format!("coefficient {c} out of range")));
        }
        Ok(self.wrap(Elem::from_slice(coeffs)))
    }

    /// Element with the given index (small fields only).
    pub fn from_index(&self, index: u32) -> Result<FieldElement> {
        if (index as u128) >= self.order() {
            return Err(Error::InvalidElement(format!("index {index} out of range")));
        }
        Ok(self.wrap(self.elem_from_u128(index as u128)))
    }

    /// All elements in index order (small fields only).
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        let n = if self.order() <= TABLE_LIMIT { self.order() } else { 0 };
        (0..n).map(move |i| self.wrap(self.elem_from_u128(i)))
    }

    /// Embeds an element of the base field as a constant.
    pub fn embed(&self, x: &FieldElement) -> Result<FieldElement> {
        if x.field() == self {
            return Ok(x.clone());
        }
        let base = self.base().ok_or(Error::FieldMismatch)?;
        if x.field() != base {
            return Err(Error::FieldMismatch);
        }
        let mut coeffs: Elem = smallvec![0; self.degree()];
        coeffs[0] = base.index_of(&x.coeffs);
        Ok(self.wrap(coeffs))
    }

    /// `α^((order-1)/n)` for the designated primitive `α`: an element of order exactly `n`.
    pub fn nth_primitive_root(&self, n: u64) -> Result<FieldElement> {
        let q1 = self.order() - 1;
        if n == 0 || q1 % n as u128 != 0 {
            return Err(Error::NoRootOfUnity { n, order: self.order() });
        }
        Ok(self.wrap(self.pow_raw(&self.0.primitive, q1 / n as u128)))
    }

    pub(crate) fn wrap(&self, coeffs: Elem) -> FieldElement {
        FieldElement { field: self.clone(), coeffs }
    }

    fn coeff_bound(&self) -> u32 {
        match self.base() {
            None => self.characteristic(),
            Some(b) => b.order() as u32,
        }
    }

    pub(crate) fn zero_raw(&self) -> Elem {
        smallvec![0; self.degree()]
    }

    pub(crate) fn one_raw(&self) -> Elem {
        let mut e: Elem = smallvec![0; self.degree()];
        e[0] = 1;
        e
    }

    pub(crate) fn int_raw(&self, v: i64) -> Elem {
        let p = self.characteristic() as i64;
        let r = v.rem_euclid(p) as u32;
        match self.base() {
            None => smallvec![r],
            Some(base) => {
                let mut e: Elem = smallvec![0; self.degree()];
                e[0] = base.index_of(&base.int_raw(v));
                e
            }
        }
    }

    pub(crate) fn is_zero_raw(a: &Elem) -> bool {
        a.iter().all(|&c| c == 0)
    }

    /// Index of an element of a small field.
    pub(crate) fn index_of(&self, a: &[u32]) -> u32 {
        match self.base() {
            None => a[0],
            Some(b) => {
                let q = b.order() as u32;
                a.iter().rev().fold(0u32, |acc, &c| acc * q + c)
            }
        }
    }

    pub(crate) fn elem_from_u128(&self, mut i: u128) -> Elem {
        match self.base() {
            None => smallvec![i as u32],
            Some(b) => {
                let q = b.order();
                let mut e: Elem = smallvec![0; self.degree()];
                for c in e.iter_mut() {
                    *c = (i % q) as u32;
                    i /= q;
                }
                e
            }
        }
    }

    fn base_small(&self) -> &SmallField {
        self.base()
            .and_then(|b| b.small())
            .expect("extension fields always have a small base")
    }

    pub(crate) fn add_raw(&self, a: &Elem, b: &Elem) -> Elem {
        match (self.small(), self.base()) {
            (Some(s), None) => smallvec![s.add(a[0], b[0])],
            _ => {
                let bs = self.base_small();
                a.iter().zip(b).map(|(&x, &y)| bs.add(x, y)).collect()
            }
        }
    }

    pub(crate) fn neg_raw(&self, a: &Elem) -> Elem {
        match (self.small(), self.base()) {
            (Some(s), None) => smallvec![s.neg(a[0])],
            _ => {
                let bs = self.base_small();
                a.iter().map(|&x| bs.neg(x)).collect()
            }
        }
    }

    pub(crate) fn sub_raw(&self, a: &Elem, b: &Elem) -> Elem {
        self.add_raw(a, &self.neg_raw(b))
    }

    pub(crate) fn mul_raw(&self, a: &Elem, b: &Elem) -> Elem {
        match self.small() {
            Some(s) => {
                let i = s.mul(self.index_of(a), self.index_of(b));
                self.elem_from_u128(i as u128)
            }
            None => self.mulmod(a, b),
        }
    }

    /// Schoolbook product over the base followed by reduction by the monic modulus.
    fn mulmod(&self, a: &[u32], b: &[u32]) -> Elem {
        let bs = self.base_small();
        let k = self.degree();
        let mut prod = vec![0u32; 2 * k - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if y != 0 {
                    prod[i + j] = bs.add(prod[i + j], bs.mul(x, y));
                }
            }
        }
        let m = &self.0.modulus;
        for top in (k..2 * k - 1).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            let nc = bs.neg(c);
            for j in 0..k {
                if m[j] != 0 {
                    let t = top - k + j;
                    prod[t] = bs.add(prod[t], bs.mul(nc, m[j]));
                }
            }
        }
        prod.truncate(k);
        Elem::from_vec(prod)
    }

    pub(crate) fn pow_raw(&self, a: &Elem, mut e: u128) -> Elem {
        if let Some(s) = self.small() {
            let ia = self.index_of(a);
            let out = match (e, ia) {
                (0, _) => 1,
                (_, 0) => 0,
                _ => s.pow(ia, (e % (self.order() - 1)) as u64),
            };
            return self.elem_from_u128(out as u128);
        }
        let mut base = a.clone();
        let mut acc = self.one_raw();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_raw(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul_raw(&base, &base);
            }
        }
        acc
    }

    pub(crate) fn inv_raw(&self, a: &Elem) -> Option<Elem> {
        if Self::is_zero_raw(a) {
            return None;
        }
        if let Some(s) = self.small() {
            return Some(self.elem_from_u128(s.inv(self.index_of(a)) as u128));
        }
        Some(self.pow_raw(a, self.order() - 2))
    }

    fn is_primitive_raw(&self, x: &Elem, factors: &[u128]) -> bool {
        if Self::is_zero_raw(x) {
            return false;
        }
        let q1 = self.order() - 1;
        let one = self.one_raw();
        factors.iter().all(|&l| self.pow_raw(x, q1 / l) != one)
    }

    fn render_elem(&self, a: &[u32]) -> String {
        match self.base() {
            None => a[0].to_string(),
            Some(b) => {
                let parts: Vec<String> = a
                    .iter()
                    .map(|&c| b.render_elem(&b.elem_from_u128(c as u128)))
                    .collect();
                format!("[{}]", parts.join(","))
            }
        }
    }

    /// Nesting depth of the tower above the prime field.
    fn level(&self) -> usize {
        self.base().map_or(0, |b| b.level() + 1)
    }

    pub(crate) fn symbol(&self) -> String {
        let l = self.level();
        if l == 0 {
            String::new()
        } else {
            ((b'a' + (l as u8 - 1) % 26) as char).to_string()
        }
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.characteristic == other.0.characteristic
                && self.0.degree == other.0.degree
                && self.0.modulus == other.0.modulus
                && self.0.base == other.0.base)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Text form `GF(p^k; [base=GF(...); ]modulus=[...]; primitive=[...])`.
///
/// Coefficient lists are little-endian; coefficients from an extension base are
/// written as nested lists.
impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}; ", self.characteristic(), self.total_degree())?;
        match self.base() {
            None => write!(f, "modulus=[]; primitive=[{}])", self.0.primitive[0]),
            Some(b) => {
                if !b.is_prime() {
                    write!(f, "base={b}; ")?;
                }
                let m: Vec<String> = self
                    .0
                    .modulus
                    .iter()
                    .map(|&c| b.render_elem(&b.elem_from_u128(c as u128)))
                    .collect();
                write!(
                    f,
                    "modulus=[{}]; primitive={})",
                    m.join(","),
                    self.render_elem(&self.0.primitive)
                )
            }
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Field> {
        let mut p = DescriptorParser { s: s.as_bytes(), pos: 0 };
        let f = p.field()?;
        p.skip_ws();
        if p.pos != p.s.len() {
            return Err(Error::Parse(format!("trailing input at {}", p.pos)));
        }
        Ok(f)
    }
}

enum Nested {
    Int(u32),
    List(Vec<Nested>),
}

struct DescriptorParser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl DescriptorParser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn eat(&mut self, lit: &str) -> Result<()> {
        self.skip_ws();
        if self.s[self.pos..].starts_with(lit.as_bytes()) {
            self.pos += lit.len();
            Ok(())
        } else {
            Err(Error::Parse(format!("expected `{lit}` at {}", self.pos)))
        }
    }

    fn peek(&mut self, lit: &str) -> bool {
        self.skip_ws();
        self.s[self.pos..].starts_with(lit.as_bytes())
    }

    fn int(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| Error::Parse(format!("expected integer at {start}")))
    }

    fn nested(&mut self) -> Result<Nested> {
        if self.peek("[") {
            self.eat("[")?;
            let mut items = Vec::new();
            if !self.peek("]") {
                loop {
                    items.push(self.nested()?);
                    if self.peek(",") {
                        self.eat(",")?;
                    } else {
                        break;
                    }
                }
            }
            self.eat("]")?;
            Ok(Nested::List(items))
        } else {
            Ok(Nested::Int(self.int()? as u32))
        }
    }

    fn field(&mut self) -> Result<Field> {
        self.eat("GF(")?;
        let p = self.int()?;
        self.eat("^")?;
        let k = self.int()? as usize;
        self.eat(";")?;
        let base = if self.peek("base=") {
            self.eat("base=")?;
            let b = self.field()?;
            self.eat(";")?;
            b
        } else {
            Field::prime(p)?
        };
        self.eat("modulus=")?;
        let modulus = self.nested()?;
        self.eat(";")?;
        self.eat("primitive=")?;
        let primitive = self.nested()?;
        self.eat(")")?;

        let Nested::List(mcoeffs) = modulus else {
            return Err(Error::Parse("modulus must be a list".into()));
        };
        if mcoeffs.is_empty() {
            if k != 1 || !base.is_prime() {
                return Err(Error::Parse("empty modulus only allowed for prime fields".into()));
            }
            let x = element_from_nested(&base, &primitive)?;
            return if x == base.primitive_element() { Ok(base) } else { base.with_primitive_element(&x) };
        }
        let coeffs = mcoeffs
            .iter()
            .map(|c| element_from_nested_coeff(&base, c))
            .collect::<Result<Vec<_>>>()?;
        let m = Poly::from_elements(&base, coeffs)?;
        let degree = m.degree().unwrap_or(0);
        if base.total_degree() * degree != k {
            return Err(Error::Parse(format!("degree mismatch: expected total degree {k}")));
        }
        let field = Field::extension(&base, degree, Some(&m))?;
        let x = element_from_nested(&field, &primitive)?;
        if x == field.primitive_element() {
            Ok(field)
        } else {
            field.with_primitive_element(&x)
        }
    }
}

/// A coefficient of a polynomial over `field`: an integer for prime fields, a list otherwise.
fn element_from_nested_coeff(field: &Field, n: &Nested) -> Result<FieldElement> {
    match (field.is_prime(), n) {
        (true, Nested::Int(v)) => field.element(&[*v]),
        (false, Nested::List(_)) => element_from_nested(field, n),
        _ => Err(Error::Parse("coefficient shape does not match field".into())),
    }
}

fn element_from_nested(field: &Field, n: &Nested) -> Result<FieldElement> {
    let Nested::List(items) = n else {
        return Err(Error::Parse("element must be a list".into()));
    };
    match field.base() {
        None => match items.as_slice() {
            [Nested::Int(v)] => field.element(&[*v]),
            _ => Err(Error::Parse("prime field element must be [v]".into())),
        },
        Some(b) => {
            let coeffs = items
                .iter()
                .map(|c| element_from_nested_coeff(b, c).map(|e| b.index_of(&e.coeffs)))
                .collect::<Result<Vec<u32>>>()?;
            field.element(&coeffs)
        }
    }
}

/// Smallest monic irreducible of degree `k` over `base`, comparing coefficient
/// vectors `(c_0, ..., c_{k-1})` lexicographically with `c_0` most significant.
fn smallest_irreducible(base: &Field, k: usize) -> Vec<u32> {
    let q = base.order() as u32;
    // c_0 = 0 means x | m(x), so start at c_0 = 1
    let mut digits = vec![0u32; k];
    digits[0] = 1;
    loop {
        let mut coeffs = digits.clone();
        coeffs.push(1);
        let m = Poly::from_indices(base, &coeffs).expect("valid indices");
        if m.is_irreducible() {
            return coeffs;
        }
        // odometer with c_{k-1} fastest
        let mut i = k - 1;
        loop {
            digits[i] += 1;
            if digits[i] < q {
                break;
            }
            digits[i] = 0;
            assert!(i > 0, "an irreducible polynomial of every degree exists");
            i -= 1;
        }
    }
}

/// `(p, e)` with `q = p^e`, or `None` if `q` is not a prime power.
pub fn prime_power_parts(q: u64) -> Option<(u64, usize)> {
    if q < 2 {
        return None;
    }
    let f = factorize64(q);
    if f.len() != 1 {
        return None;
    }
    let (&p, &e) = f.iter().next()?;
    Some((p, e))
}

/// An element of a [`Field`].
#[derive(Clone)]
pub struct FieldElement {
    field: Field,
    coeffs: Elem,
}

impl FieldElement {
    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Coefficients over the base field as base-element indices, little-endian.
    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub(crate) fn raw(&self) -> &Elem {
        &self.coeffs
    }

    /// Index in the field's enumeration order (small fields only).
    pub fn index(&self) -> Option<u32> {
        (self.field.order() <= TABLE_LIMIT).then(|| self.field.index_of(&self.coeffs))
    }

    pub fn is_zero(&self) -> bool {
        Field::is_zero_raw(&self.coeffs)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == self.field.one_raw()
    }

    fn check(&self, other: &FieldElement) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        Ok(self.field.wrap(self.field.add_raw(&self.coeffs, &other.coeffs)))
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        Ok(self.field.wrap(self.field.sub_raw(&self.coeffs, &other.coeffs)))
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        Ok(self.field.wrap(self.field.mul_raw(&self.coeffs, &other.coeffs)))
    }

    pub fn div(&self, other: &FieldElement) -> Result<FieldElement> {
        self.mul(&other.inv()?)
    }

    pub fn neg(&self) -> FieldElement {
        self.field.wrap(self.field.neg_raw(&self.coeffs))
    }

    pub fn inv(&self) -> Result<FieldElement> {
        self.field
            .inv_raw(&self.coeffs)
            .map(|c| self.field.wrap(c))
            .ok_or(Error::DivisionByZero)
    }

    /// `self^e`; negative exponents need a nonzero base. `0^0 = 1`.
    pub fn pow(&self, e: i128) -> Result<FieldElement> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        Ok(self.field.wrap(self.field.pow_raw(&self.coeffs, e as u128)))
    }

    /// Multiplicative order, or `None` for zero.
    pub fn multiplicative_order(&self) -> Option<u128> {
        if self.is_zero() {
            return None;
        }
        let q1 = self.field.order() - 1;
        let mut ord = q1;
        for (l, _) in factorize128(q1) {
            while ord % l == 0 && self.field.pow_raw(&self.coeffs, ord / l) == self.field.one_raw() {
                ord /= l;
            }
        }
        Some(ord)
    }

    /// Whether the element lies in the subfield of order `q`.
    ///
    /// When `q` is the order of the immediate base field this is the structural
    /// test (all coefficients of index ≥ 1 vanish); otherwise `x^q = x`.
    pub fn in_subfield(&self, q: u128) -> bool {
        match self.field.base() {
            Some(b) if b.order() == q => self.coeffs[1..].iter().all(|&c| c == 0),
            _ => self.is_frobenius_fixed(q),
        }
    }

    /// `x^q = x`.
    pub fn is_frobenius_fixed(&self, q: u128) -> bool {
        self.field.pow_raw(&self.coeffs, q) == self.coeffs
    }

    /// The same value as an element of the base field, if it lies there.
    pub fn to_base(&self) -> Result<FieldElement> {
        let base = self.field.base().ok_or(Error::NotOverBase)?;
        if self.coeffs[1..].iter().any(|&c| c != 0) {
            return Err(Error::NotOverBase);
        }
        Ok(base.wrap(base.elem_from_u128(self.coeffs[0] as u128)))
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && self.field == other.field
    }
}

impl Eq for FieldElement {}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Descending powers of the adjoined root, e.g. `a+1` in `F_4` or `(a+1)b+a` in `F_16/F_4`.
impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(base) = self.field.base() else {
            return write!(f, "{}", self.coeffs[0]);
        };
        let sym = self.field.symbol();
        let mut terms = Vec::new();
        for (j, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let cs = base.wrap(base.elem_from_u128(c as u128)).to_string();
            let power = match j {
                0 => String::new(),
                1 => sym.clone(),
                _ => format!("{sym}^{j}"),
            };
            let term = if j == 0 {
                cs
            } else if cs == "1" {
                power
            } else if cs.contains('+') {
                format!("({cs}){power}")
            } else if cs.chars().all(|ch| ch.is_ascii_digit()) {
                format!("{cs}{power}")
            } else {
                format!("{cs}*{power}")
            };
            terms.push(term);
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join("+"))
        }
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident) => {
        impl std::ops::$tr for &FieldElement {
            type Output = FieldElement;
            /// Panics on mismatched fields; use the inherent method for a `Result`.
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                FieldElement::$method(self, rhs).expect("field mismatch")
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);

impl std::ops::Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f4() -> Field {
        let f2 = Field::prime(2).unwrap();
        let m = Poly::from_indices(&f2, &[1, 1, 1]).unwrap();
        Field::extension(&f2, 2, Some(&m)).unwrap()
    }

    fn f16_over_f4() -> (Field, Field) {
        let f4 = f4();
        let a = f4.primitive_element();
        let m = Poly::from_elements(&f4, vec![a, f4.one(), f4.one()]).unwrap();
        (f4.clone(), Field::extension(&f4, 2, Some(&m)).unwrap())
    }

    #[test]
    fn prime_field_generators() {
        let f7 = Field::prime(7).unwrap();
        assert_eq!(f7.order(), 7);
        assert_eq!(f7.primitive_element().coeffs(), &[3]);
        // oracle: orders of 2..6 by repeated multiplication
        let order = |g: u64| (1..=6).find(|&e| (0..e).fold(1u64, |a, _| a * g % 7) == 1).unwrap();
        assert_eq!(order(2), 3);
        assert_eq!(order(3), 6);
        assert_eq!(Field::prime(2).unwrap().primitive_element().coeffs(), &[1]);
        assert_eq!(Field::prime(15).unwrap_err(), Error::NotPrime(15));
    }

    #[test]
    fn quaternary_field() {
        let f4 = f4();
        let a = f4.primitive_element();
        assert_eq!(a.coeffs(), &[0, 1]);
        let a1 = &a + &f4.one();
        assert!((&a * &a1).is_one());
        assert_eq!(a.inv().unwrap(), a1);
        assert_eq!(a.to_string(), "a");
        assert_eq!(a1.to_string(), "a+1");
        assert!(a.pow(0).unwrap().is_one());
        assert_eq!(f4.zero().inv().unwrap_err(), Error::DivisionByZero);
        assert_eq!(a.pow(-1).unwrap(), a1);
    }

    #[test]
    fn sixteen_over_four() {
        let (f4, f16) = f16_over_f4();
        let b = f16.primitive_element();
        assert_eq!(b.coeffs(), &[0, 1]);
        assert_eq!(b.multiplicative_order(), Some(15));
        assert_eq!(f16.nth_primitive_root(15).unwrap(), b);
        assert!(f16.nth_primitive_root(1).unwrap().is_one());
        assert!(f16.nth_primitive_root(7).is_err());
        let alpha = f16.embed(&f4.primitive_element()).unwrap();
        assert!(alpha.in_subfield(4));
        assert!(!b.in_subfield(4));
        assert!(f16.zero().in_subfield(4));
        assert_eq!(alpha.to_base().unwrap(), f4.primitive_element());
        assert_eq!(b.to_string(), "b");
    }

    #[test]
    fn identity_extension() {
        let f3 = Field::prime(3).unwrap();
        assert_eq!(Field::extension(&f3, 1, None).unwrap(), f3);
        assert_eq!(Field::extension(&f3, 0, None).unwrap_err(), Error::ZeroDegree);
    }

    #[test]
    fn reducible_modulus_rejected() {
        let f2 = Field::prime(2).unwrap();
        let m = Poly::from_indices(&f2, &[1, 0, 1]).unwrap();
        assert_eq!(Field::extension(&f2, 2, Some(&m)).unwrap_err(), Error::ReducibleModulus);
    }

    #[test]
    fn default_modulus_is_smallest() {
        let f2 = Field::prime(2).unwrap();
        let f8 = Field::extension(&f2, 3, None).unwrap();
        // (1,0,1) precedes (1,1,0): 1 + x^2 + x^3
        assert_eq!(f8.modulus().unwrap().to_indices().unwrap(), vec![1, 0, 1, 1]);
        let f4 = Field::prime_power(4).unwrap();
        let f16 = Field::extension(&f4, 2, None).unwrap();
        // x^2 + x + 1 and x^2 + 1 split over F_4; x^2 + a x + 1 does not
        assert_eq!(f16.modulus().unwrap().to_indices().unwrap(), vec![1, 2, 1]);
    }

    #[test]
    fn root_of_order_17_in_f256() {
        let f256 = Field::prime_power(256).unwrap();
        let theta = f256.nth_primitive_root(17).unwrap();
        assert_eq!(theta, f256.primitive_element().pow(15).unwrap());
        assert!(theta.pow(17).unwrap().is_one());
        assert!((1..17).all(|j| !theta.pow(j).unwrap().is_one()));
    }

    #[test]
    fn mixed_fields_rejected() {
        let f2 = Field::prime(2).unwrap();
        let f3 = Field::prime(3).unwrap();
        assert_eq!(f2.one().add(&f3.one()).unwrap_err(), Error::FieldMismatch);
    }

    #[test]
    fn descriptor_text_round_trip() {
        let (f4, f16) = f16_over_f4();
        assert_eq!(f4.to_string(), "GF(2^2; modulus=[1,1,1]; primitive=[0,1])");
        assert_eq!(
            f16.to_string(),
            "GF(2^4; base=GF(2^2; modulus=[1,1,1]; primitive=[0,1]); \
             modulus=[[0,1],[1,0],[1,0]]; primitive=[[0,0],[1,0]])"
        );
        for f in [f4, f16, Field::prime(7).unwrap(), Field::prime_power(27).unwrap()] {
            let parsed: Field = f.to_string().parse().unwrap();
            assert_eq!(parsed, f);
            assert_eq!(parsed.to_string(), f.to_string());
        }
    }

    #[test]
    fn large_field_primitive() {
        let f4 = f4();
        let big = Field::extension(&f4, 28, None).unwrap();
        assert_eq!(big.order(), 1u128 << 56);
        let theta = big.nth_primitive_root(2465).unwrap();
        assert!(theta.pow(2465).unwrap().is_one());
        for l in [5i128, 17, 29] {
            assert!(!theta.pow(2465 / l).unwrap().is_one());
        }
    }
}
