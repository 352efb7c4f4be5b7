//! Jacobi symbols, multiplicative orders, the gcd-class partition of `Z_n` with its
//! quadratic-character splits, and cosets of `m`-th power residues modulo a prime.

use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};

use num_prime::nt_funcs::{factorize64, is_prime64};

use crate::error::{Error, Result};
use crate::field::prime_power_parts;

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

pub fn pow_mod(a: u64, mut e: u64, n: u64) -> u64 {
    let n128 = n as u128;
    let mut acc = 1u128 % n128;
    let mut base = a as u128 % n128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % n128;
        }
        base = base * base % n128;
        e >>= 1;
    }
    acc as u64
}

/// Carmichael's `λ(n)`.
pub fn carmichael(n: u64) -> u64 {
    factorize64(n).into_iter().fold(1, |acc, (p, e)| {
        let pe1 = p.pow(e as u32 - 1);
        let l = if p == 2 && e >= 3 { pe1 / 2 } else { (p - 1) * pe1 };
        lcm(acc, l)
    })
}

/// Least `x ≥ 1` with `a^x ≡ 1 (mod n)`.
pub fn multiplicative_order(a: u64, n: u64) -> Result<u64> {
    if n == 1 {
        return Ok(1);
    }
    if n == 0 || gcd(a % n, n) != 1 {
        return Err(Error::NotCoprime { a, n });
    }
    let mut ord = carmichael(n);
    for (l, _) in factorize64(ord) {
        while ord % l == 0 && pow_mod(a, ord / l, n) == 1 {
            ord /= l;
        }
    }
    Ok(ord)
}

/// The Jacobi symbol `(a/Q)` for odd positive `Q`.
pub fn jacobi(a: i64, q: i64) -> Result<i8> {
    if q <= 0 || q % 2 == 0 {
        return Err(Error::BadJacobiModulus(q));
    }
    let mut a = a.rem_euclid(q);
    let mut n = q;
    let mut sign = 1i8;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if n % 8 == 3 || n % 8 == 5 {
                sign = -sign;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            sign = -sign;
        }
        a %= n;
    }
    Ok(if n == 1 { sign } else { 0 })
}

/// `(a/Q)` for moduli already known to be odd and positive.
pub(crate) fn chi(a: i64, q: u64) -> i8 {
    jacobi(a, q as i64).expect("odd positive modulus")
}

/// Length data shared by every code of length `n = p_1 ⋯ p_g` over `F_q`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LengthContext {
    pub primes: Vec<u64>,
    pub n: u64,
    pub q: u64,
    /// `ord_n(q)`: the degree of the splitting field of `x^n - 1` over `F_q`.
    pub extension_degree: u64,
}

impl LengthContext {
    pub fn new(primes: &[u64], q: u64) -> Result<Self> {
        let mut sorted = primes.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != primes.len() {
            return Err(Error::InvalidPrimes("primes must be distinct".into()));
        }
        if sorted.is_empty() {
            return Err(Error::InvalidPrimes("at least one prime is required".into()));
        }
        for &p in &sorted {
            if p == 2 || !is_prime64(p) {
                return Err(Error::InvalidPrimes(format!("{p} is not an odd prime")));
            }
        }
        let (char_q, _) = prime_power_parts(q).ok_or(Error::NotPrimePower(q))?;
        if sorted.contains(&char_q) {
            return Err(Error::NotCoprime { a: q, n: char_q });
        }
        let n = sorted
            .iter()
            .try_fold(1u64, |acc, &p| acc.checked_mul(p))
            .ok_or_else(|| Error::InvalidPrimes("length overflows".into()))?;
        let extension_degree = sorted
            .iter()
            .map(|&p| multiplicative_order(q % p, p))
            .try_fold(1u64, |acc, o| o.map(|o| lcm(acc, o)))?;
        Ok(LengthContext { primes: sorted, n, q, extension_degree })
    }

    pub fn g(&self) -> usize {
        self.primes.len()
    }

    /// `(q/p_i) = 1` for every prime: the condition for the codes to be defined over `F_q`.
    pub fn admissible(&self) -> bool {
        self.primes.iter().all(|&p| chi(self.q as i64, p) == 1)
    }

    /// The first prime with `(q/p) = -1`, if any.
    pub fn inadmissible_prime(&self) -> Option<u64> {
        self.primes.iter().copied().find(|&p| chi(self.q as i64, p) != 1)
    }
}

/// One half-pair of a class split by `(j/Q)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Split {
    pub modulus: u64,
    pub plus: Vec<u64>,
    pub minus: Vec<u64>,
}

impl Split {
    pub fn half(&self, sign: i8) -> &[u64] {
        if sign > 0 {
            &self.plus
        } else {
            &self.minus
        }
    }
}

/// `M_i = {j : gcd(j, n) = i}` together with its menu of splits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueClass {
    pub divisor: u64,
    /// Number of primes dividing `divisor`.
    pub rank: usize,
    pub elements: Vec<u64>,
    /// One split per divisor `Q > 1` of `n / divisor`, ascending in `Q`.
    pub splits: Vec<Split>,
}

impl ResidueClass {
    pub fn moduli(&self) -> impl Iterator<Item = u64> + '_ {
        self.splits.iter().map(|s| s.modulus)
    }

    pub fn split(&self, modulus: u64) -> Option<&Split> {
        self.splits.iter().find(|s| s.modulus == modulus)
    }
}

/// The partition `{n} ∪ ⋃ M_i` of `{1, ..., n}`, classes ordered by rank then divisor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResiduePartition {
    pub n: u64,
    pub primes: Vec<u64>,
    pub classes: Vec<ResidueClass>,
}

fn divisors_from_primes(primes: &[u64]) -> Vec<u64> {
    let mut out = vec![1u64];
    for &p in primes {
        let more: Vec<u64> = out.iter().map(|d| d * p).collect();
        out.extend(more);
    }
    out.sort_unstable();
    out
}

impl ResiduePartition {
    /// Builds the partition for squarefree `n` given by its prime list.
    ///
    /// Fails with [`Error::UnbalancedSplit`] if any split is not half-half.
    pub fn new(primes: &[u64]) -> Result<Self> {
        let mut primes = primes.to_vec();
        primes.sort_unstable();
        let n: u64 = primes.iter().product();
        let g = primes.len();
        let mut classes = Vec::new();
        for mask in 0u32..(1 << g) - 1 {
            let chosen: Vec<u64> = (0..g).filter(|b| mask >> b & 1 == 1).map(|b| primes[b]).collect();
            let rest: Vec<u64> = (0..g).filter(|b| mask >> b & 1 == 0).map(|b| primes[b]).collect();
            let divisor: u64 = chosen.iter().product();
            let elements: Vec<u64> = (1..n).filter(|&j| gcd(j, n) == divisor).collect();
            let mut splits = Vec::new();
            for modulus in divisors_from_primes(&rest).into_iter().filter(|&d| d > 1) {
                let (mut plus, mut minus) = (Vec::new(), Vec::new());
                for &j in &elements {
                    match chi(j as i64, modulus) {
                        1 => plus.push(j),
                        -1 => minus.push(j),
                        _ => {
                            return Err(Error::Invariant(format!(
                                "({j}/{modulus}) vanished in class {divisor}"
                            )))
                        }
                    }
                }
                if plus.len() != minus.len() {
                    return Err(Error::UnbalancedSplit { class: divisor, modulus });
                }
                splits.push(Split { modulus, plus, minus });
            }
            classes.push(ResidueClass { divisor, rank: chosen.len(), elements, splits });
        }
        classes.sort_by_key(|c| (c.rank, c.divisor));
        Ok(ResiduePartition { n, primes, classes })
    }

    pub fn class(&self, divisor: u64) -> Option<&ResidueClass> {
        self.classes.iter().find(|c| c.divisor == divisor)
    }

    pub fn class_index(&self, divisor: u64) -> Option<usize> {
        self.classes.iter().position(|c| c.divisor == divisor)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("partition serializes")
    }
}

struct Moduli<'a>(&'a [Split]);

impl Serialize for Moduli<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for split in self.0 {
            map.serialize_entry(&split.modulus.to_string(), &PlusMinus(split))?;
        }
        map.end()
    }
}

struct PlusMinus<'a>(&'a Split);

impl Serialize for PlusMinus<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Split", 2)?;
        st.serialize_field("plus", &self.0.plus)?;
        st.serialize_field("minus", &self.0.minus)?;
        st.end()
    }
}

struct ClassBody<'a>(&'a ResidueClass);

impl Serialize for ClassBody<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Class", 2)?;
        st.serialize_field("elements", &self.0.elements)?;
        st.serialize_field("moduli", &Moduli(&self.0.splits))?;
        st.end()
    }
}

/// `{divisor: {elements, moduli: {Q: {plus, minus}}}}` in class order.
impl Serialize for ResiduePartition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.classes.len()))?;
        for c in &self.classes {
            map.serialize_entry(&c.divisor.to_string(), &ClassBody(c))?;
        }
        map.end()
    }
}

/// Smallest primitive root modulo an odd prime.
pub fn primitive_root_mod_p(p: u64) -> Result<u64> {
    if p == 2 || !is_prime64(p) {
        return Err(Error::NotPrime(p));
    }
    let factors: Vec<u64> = factorize64(p - 1).into_keys().collect();
    Ok((1..p)
        .find(|&r| factors.iter().all(|&l| pow_mod(r, (p - 1) / l, p) != 1))
        .expect("a primitive root exists"))
}

/// The cosets `A_i = r^i A_0` of the `m`-th power residues modulo `p`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MthResidueClasses {
    pub p: u64,
    pub m: u64,
    pub primitive_root: u64,
    /// `cosets[i]` is `A_i`, sorted ascending.
    pub cosets: Vec<Vec<u64>>,
}

impl MthResidueClasses {
    pub fn new(p: u64, m: u64) -> Result<Self> {
        if p == 2 || !is_prime64(p) {
            return Err(Error::NotPrime(p));
        }
        if m < 2 || (p - 1) % m != 0 {
            return Err(Error::MDoesNotDivide { m, p });
        }
        let r = primitive_root_mod_p(p)?;
        let e = (p - 1) / m;
        let a0: Vec<u64> = (1..p).filter(|&k| pow_mod(k, e, p) == 1).collect();
        let cosets = (0..m)
            .map(|i| {
                let ri = pow_mod(r, i, p);
                let mut c: Vec<u64> = a0.iter().map(|&k| k * ri % p).collect();
                c.sort_unstable();
                c
            })
            .collect();
        Ok(MthResidueClasses { p, m, primitive_root: r, cosets })
    }

    /// Index `i` with `k ∈ A_i`.
    pub fn coset_of(&self, k: u64) -> Option<usize> {
        self.cosets.iter().position(|c| c.binary_search(&(k % self.p)).is_ok())
    }
}
