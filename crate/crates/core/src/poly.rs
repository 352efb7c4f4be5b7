//! Dense univariate polynomials over a [`Field`].

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Elem, Field, FieldElement};

/// A polynomial with coefficients in `field`, low degree first, without trailing zeros.
#[derive(Clone)]
pub struct Poly {
    field: Field,
    coeffs: Vec<Elem>,
}

impl Poly {
    pub(crate) fn from_raw(field: &Field, mut coeffs: Vec<Elem>) -> Poly {
        while coeffs.last().is_some_and(Field::is_zero_raw) {
            coeffs.pop();
        }
        Poly { field: field.clone(), coeffs }
    }

    pub fn zero(field: &Field) -> Poly {
        Poly { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn one(field: &Field) -> Poly {
        Poly::from_raw(field, vec![field.one_raw()])
    }

    pub fn x(field: &Field) -> Poly {
        Poly::monomial(&field.one(), 1)
    }

    /// `c · x^k`.
    pub fn monomial(c: &FieldElement, k: usize) -> Poly {
        let f = c.field();
        let mut coeffs = vec![f.zero_raw(); k + 1];
        coeffs[k] = c.raw().clone();
        Poly::from_raw(f, coeffs)
    }

    /// `x^n - 1`.
    pub fn x_n_minus_one(field: &Field, n: usize) -> Poly {
        let mut coeffs = vec![field.zero_raw(); n + 1];
        coeffs[0] = field.neg_raw(&field.one_raw());
        coeffs[n] = field.add_raw(&coeffs[n], &field.one_raw());
        Poly::from_raw(field, coeffs)
    }

    pub fn from_elements(field: &Field, coeffs: Vec<FieldElement>) -> Result<Poly> {
        if coeffs.iter().any(|c| c.field() != field) {
            return Err(Error::FieldMismatch);
        }
        Ok(Poly::from_raw(field, coeffs.into_iter().map(|c| c.raw().clone()).collect()))
    }

    /// Coefficients given as element indices (fields with lookup tables or prime fields).
    pub fn from_indices(field: &Field, indices: &[u32]) -> Result<Poly> {
        let coeffs = indices
            .iter()
            .map(|&i| field.from_index(i).map(|e| e.raw().clone()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::from_raw(field, coeffs))
    }

    /// Coefficients from integers through `Z -> F_p ⊆ field`.
    pub fn from_ints(field: &Field, ints: &[i64]) -> Poly {
        Poly::from_raw(field, ints.iter().map(|&v| field.int_raw(v)).collect())
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        match self.coeffs.get(i) {
            Some(c) => self.field.wrap(c.clone()),
            None => self.field.zero(),
        }
    }

    pub fn coefficients(&self) -> Vec<FieldElement> {
        self.coeffs.iter().map(|c| self.field.wrap(c.clone())).collect()
    }

    /// Coefficient indices, low degree first, when the field is enumerable.
    pub fn to_indices(&self) -> Option<Vec<u32>> {
        self.coefficients().iter().map(|c| c.index()).collect()
    }

    pub fn leading(&self) -> Option<FieldElement> {
        self.coeffs.last().map(|c| self.field.wrap(c.clone()))
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| *c == self.field.one_raw())
    }

    fn same_field(&self, other: &Poly) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.same_field(other)?;
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = f.zero_raw();
        let coeffs = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).unwrap_or(&zero);
                let b = other.coeffs.get(i).unwrap_or(&zero);
                f.add_raw(a, b)
            })
            .collect();
        Ok(Poly::from_raw(f, coeffs))
    }

    pub fn neg(&self) -> Poly {
        Poly::from_raw(&self.field, self.coeffs.iter().map(|c| self.field.neg_raw(c)).collect())
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &FieldElement) -> Result<Poly> {
        if c.field() != &self.field {
            return Err(Error::FieldMismatch);
        }
        let f = &self.field;
        Ok(Poly::from_raw(f, self.coeffs.iter().map(|a| f.mul_raw(a, c.raw())).collect()))
    }

    fn small_indices(&self) -> Vec<u32> {
        self.coeffs.iter().map(|c| self.field.index_of(c)).collect()
    }

    fn from_small_indices(field: &Field, idx: Vec<u32>) -> Poly {
        Poly::from_raw(field, idx.into_iter().map(|i| field.elem_from_u128(i as u128)).collect())
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.same_field(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(&self.field));
        }
        let f = &self.field;
        if let Some(s) = f.small() {
            let (a, b) = (self.small_indices(), other.small_indices());
            let mut out = vec![0u32; a.len() + b.len() - 1];
            for (i, &x) in a.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                for (j, &y) in b.iter().enumerate() {
                    if y != 0 {
                        out[i + j] = s.add(out[i + j], s.mul(x, y));
                    }
                }
            }
            return Ok(Poly::from_small_indices(f, out));
        }
        let mut out = vec![f.zero_raw(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if Field::is_zero_raw(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !Field::is_zero_raw(b) {
                    out[i + j] = f.add_raw(&out[i + j], &f.mul_raw(a, b));
                }
            }
        }
        Ok(Poly::from_raw(f, out))
    }

    /// Euclidean division `self = q·d + r` with `deg r < deg d`.
    pub fn divrem(&self, d: &Poly) -> Result<(Poly, Poly)> {
        self.same_field(d)?;
        let f = &self.field;
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = f.inv_raw(&d.coeffs[dd]).expect("leading coefficient is nonzero");
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((Poly::zero(f), self.clone()));
        }
        if let Some(s) = f.small() {
            let d_idx = d.small_indices();
            let lead_inv = s.inv(d_idx[dd]);
            let mut r = self.small_indices();
            let mut q = vec![0u32; r.len() - dd];
            for top in (dd..r.len()).rev() {
                if r[top] == 0 {
                    continue;
                }
                let c = s.mul(r[top], lead_inv);
                let nc = s.neg(c);
                for (j, &dj) in d_idx.iter().enumerate() {
                    if dj != 0 {
                        let t = top - dd + j;
                        r[t] = s.add(r[t], s.mul(nc, dj));
                    }
                }
                q[top - dd] = c;
            }
            r.truncate(dd);
            return Ok((Poly::from_small_indices(f, q), Poly::from_small_indices(f, r)));
        }
        let mut q = vec![f.zero_raw(); r.len() - dd];
        for top in (dd..r.len()).rev() {
            if Field::is_zero_raw(&r[top]) {
                continue;
            }
            let c = f.mul_raw(&r[top], &lead_inv);
            for (j, dj) in d.coeffs.iter().enumerate() {
                if !Field::is_zero_raw(dj) {
                    let t = top - dd + j;
                    r[t] = f.sub_raw(&r[t], &f.mul_raw(&c, dj));
                }
            }
            q[top - dd] = c;
        }
        r.truncate(dd);
        Ok((Poly::from_raw(f, q), Poly::from_raw(f, r)))
    }

    pub fn rem(&self, d: &Poly) -> Result<Poly> {
        Ok(self.divrem(d)?.1)
    }

    /// Whether `d` divides `self`.
    pub fn divisible_by(&self, d: &Poly) -> Result<bool> {
        Ok(self.rem(d)?.is_zero())
    }

    /// Scales to a monic polynomial; the zero polynomial is returned unchanged.
    pub fn monic(&self) -> Poly {
        match self.coeffs.last() {
            None => self.clone(),
            Some(l) => {
                let inv = self.field.inv_raw(l).expect("nonzero leading coefficient");
                let f = &self.field;
                Poly::from_raw(f, self.coeffs.iter().map(|c| f.mul_raw(c, &inv)).collect())
            }
        }
    }

    /// Monic greatest common divisor (zero if both are zero).
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        self.same_field(other)?;
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    pub fn eval(&self, x: &FieldElement) -> Result<FieldElement> {
        if x.field() != &self.field {
            return Err(Error::FieldMismatch);
        }
        let f = &self.field;
        let mut acc = f.zero_raw();
        for c in self.coeffs.iter().rev() {
            acc = f.add_raw(&f.mul_raw(&acc, x.raw()), c);
        }
        Ok(f.wrap(acc))
    }

    /// `self^e mod m`.
    pub fn powmod(&self, mut e: u128, m: &Poly) -> Result<Poly> {
        let mut base = self.rem(m)?;
        let mut acc = Poly::one(&self.field).rem(m)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?.rem(m)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?.rem(m)?;
            }
        }
        Ok(acc)
    }

    /// Ben-Or test: no irreducible factor of degree `i ≤ k/2`, i.e.
    /// `gcd(f, x^{Q^i} - x) = 1` for those `i`, where `Q` is the field order.
    pub fn is_irreducible(&self) -> bool {
        let Some(k) = self.degree() else { return false };
        if k == 0 {
            return false;
        }
        if k == 1 {
            return true;
        }
        let q = self.field.order();
        let x = Poly::x(&self.field);
        let mut xp = x.clone();
        for _ in 1..=k / 2 {
            xp = xp.powmod(q, self).expect("same field");
            let g = self.gcd(&xp.sub(&x).expect("same field")).expect("same field");
            if g.degree() != Some(0) {
                return false;
            }
        }
        true
    }

    /// Monic reciprocal `f* = f(0)^{-1} x^{deg f} f(1/x)`.
    pub fn reciprocal(&self) -> Result<Poly> {
        let c0 = self.coeffs.first().ok_or(Error::ZeroConstantTerm)?;
        let inv = self.field.inv_raw(c0).ok_or(Error::ZeroConstantTerm)?;
        let f = &self.field;
        Ok(Poly::from_raw(f, self.coeffs.iter().rev().map(|c| f.mul_raw(c, &inv)).collect()))
    }

    /// `f* = f`, for a monic `f` with nonzero constant term.
    pub fn is_self_reciprocal(&self) -> bool {
        self.reciprocal().is_ok_and(|r| r == self.monic())
    }

    /// Monic `∏ (x - θ^e)` over the field of `theta`.
    pub fn product_of_linear_factors(theta: &FieldElement, exps: &[u64]) -> Poly {
        let f = theta.field();
        let roots: Vec<Elem> = exps.iter().map(|&e| f.pow_raw(theta.raw(), e as u128)).collect();
        Poly::product_of_roots(f, roots.iter())
    }

    /// Monic `∏ (x - r)` over the given roots.
    pub(crate) fn product_of_roots<'a>(f: &Field, roots: impl Iterator<Item = &'a Elem>) -> Poly {
        let mut coeffs = vec![f.one_raw()];
        for r in roots {
            let root = f.neg_raw(r);
            coeffs.push(f.zero_raw());
            for i in (0..coeffs.len()).rev() {
                let shifted = if i > 0 { coeffs[i - 1].clone() } else { f.zero_raw() };
                coeffs[i] = f.add_raw(&shifted, &f.mul_raw(&coeffs[i], &root));
            }
        }
        Poly::from_raw(f, coeffs)
    }

    /// The same polynomial over the base field, when every coefficient lies there.
    pub fn coerce_to_base(&self) -> Result<Poly> {
        let base = self.field.base().ok_or(Error::NotOverBase)?;
        let coeffs = self
            .coefficients()
            .iter()
            .map(|c| c.to_base().map(|b| b.raw().clone()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::from_raw(base, coeffs))
    }

    /// The same polynomial over an extension of its field.
    pub fn embed_into(&self, ext: &Field) -> Result<Poly> {
        let coeffs = self
            .coefficients()
            .iter()
            .map(|c| ext.embed(c).map(|e| e.raw().clone()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::from_raw(ext, coeffs))
    }

    /// Compact ascending form used in code tables: `1+a+x+a x+x^2`, `2+x^2+2x^3`.
    ///
    /// Each coefficient is expanded into its monomials over the prime field.
    pub fn render_expanded(&self) -> String {
        let mut terms = Vec::new();
        for (k, c) in self.coefficients().iter().enumerate() {
            for part in expanded_parts(c) {
                let xk = match k {
                    0 => String::new(),
                    1 => "x".to_string(),
                    _ => format!("x^{k}"),
                };
                let term = if k == 0 {
                    part
                } else if part == "1" {
                    xk
                } else if part.chars().all(|ch| ch.is_ascii_digit()) {
                    format!("{part}{xk}")
                } else {
                    format!("{part} {xk}")
                };
                terms.push(term);
            }
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }
}

impl Poly {
    /// Parses the form produced by [`render_expanded`](Self::render_expanded),
    /// e.g. `1+a+x+a x^2` or `2+x^2+2x^3`, over a prime field or a simple
    /// extension of one. Repeated powers are summed.
    pub fn parse_expanded(field: &Field, s: &str) -> Result<Poly> {
        let sym = field.symbol();
        let mut acc = Poly::zero(field);
        for raw in s.split('+') {
            let term = raw.trim();
            if term.is_empty() {
                return Err(Error::Parse(format!("empty term in `{s}`")));
            }
            let (mut rest, coeff) = {
                let digits = term.len() - term.trim_start_matches(|c: char| c.is_ascii_digit()).len();
                let c = if digits == 0 { 1 } else { term[..digits].parse::<i64>().map_err(|e| Error::Parse(e.to_string()))? };
                (term[digits..].trim_start(), c)
            };
            let mut value = field.from_int(coeff);
            if !sym.is_empty() && rest.starts_with(sym.as_str()) {
                rest = &rest[sym.len()..];
                let (e, r) = parse_exponent(rest)?;
                rest = r.trim_start();
                let mut root = vec![0u32; field.degree()];
                root[1.min(field.degree() - 1)] = 1;
                let root = field.element(&root)?;
                value = value.mul(&root.pow(e as i128)?)?;
            }
            let k = if let Some(r) = rest.strip_prefix('x') {
                let (k, r) = parse_exponent(r)?;
                rest = r;
                k
            } else {
                0
            };
            if !rest.trim().is_empty() {
                return Err(Error::Parse(format!("unexpected `{rest}` in term `{term}`")));
            }
            acc = acc.add(&Poly::monomial(&value, k))?;
        }
        Ok(acc)
    }
}

fn parse_exponent(s: &str) -> Result<(usize, &str)> {
    match s.strip_prefix('^') {
        None => Ok((1, s)),
        Some(r) => {
            let end = r.find(|c: char| !c.is_ascii_digit()).unwrap_or(r.len());
            let e = r[..end].parse().map_err(|_| Error::Parse(format!("bad exponent in `{s}`")))?;
            Ok((e, &r[end..]))
        }
    }
}

/// Monomials of an element in ascending powers of its adjoined root.
fn expanded_parts(c: &FieldElement) -> Vec<String> {
    let f = c.field();
    let Some(base) = f.base() else {
        return if c.is_zero() { vec![] } else { vec![c.to_string()] };
    };
    if !base.is_prime() {
        return if c.is_zero() { vec![] } else { vec![format!("({c})")] };
    }
    let letter = f.symbol();
    c.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, &d)| d != 0)
        .map(|(j, &d)| {
            let power = match j {
                0 => String::new(),
                1 => letter.clone(),
                _ => format!("{letter}^{j}"),
            };
            match (j, d) {
                (0, _) => d.to_string(),
                (_, 1) => power,
                _ => format!("{d}{power}"),
            }
        })
        .collect()
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && self.field == other.field
    }
}

impl Eq for Poly {}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Ascending powers: `1 + x + (a+1) x^5`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (k, c) in self.coefficients().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cs = c.to_string();
            let cs = if cs.contains('+') { format!("({cs})") } else { cs };
            terms.push(match (k, cs.as_str()) {
                (0, _) => cs,
                (1, "1") => "x".into(),
                (_, "1") => format!("x^{k}"),
                (1, _) => format!("{cs} x"),
                _ => format!("{cs} x^{k}"),
            });
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}
