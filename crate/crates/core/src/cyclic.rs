//! Cyclic codes `<g(x)> ⊆ F_q[x]/(x^n - 1)`: matrices, duals, LCD and
//! dual-containing tests, and minimum distance.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::matrix::Matrix;
use crate::poly::Poly;

/// Default cap on the number of codewords scanned by [`CyclicCode::minimum_distance`].
pub const DEFAULT_DISTANCE_BUDGET: u128 = 1 << 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DistanceMethod {
    /// Every codeword up to scalar multiples was weighed; `d` is exact.
    Exhaustive,
    /// The scan would exceed the budget; `d` is an upper bound.
    BudgetExceeded,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceRecord {
    pub d: usize,
    pub method: DistanceMethod,
    pub codewords_enumerated: u128,
}

impl DistanceRecord {
    pub fn is_exact(&self) -> bool {
        self.method == DistanceMethod::Exhaustive
    }
}

pub struct CyclicCode {
    field: Field,
    n: usize,
    g: Poly,
    h: Poly,
    generator_matrix: OnceLock<Matrix>,
    parity_check_matrix: OnceLock<Matrix>,
}

impl Clone for CyclicCode {
    fn clone(&self) -> Self {
        CyclicCode {
            field: self.field.clone(),
            n: self.n,
            g: self.g.clone(),
            h: self.h.clone(),
            generator_matrix: self.generator_matrix.clone(),
            parity_check_matrix: self.parity_check_matrix.clone(),
        }
    }
}

impl std::fmt::Debug for CyclicCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}, {}] cyclic code, g = {}", self.n, self.k(), self.g)
    }
}

impl CyclicCode {
    /// The code of length `n` generated by the monic divisor `g` of `x^n - 1`.
    pub fn new(field: &Field, n: usize, g: Poly) -> Result<CyclicCode> {
        if g.field() != field {
            return Err(Error::FieldMismatch);
        }
        if n == 0 || n % field.characteristic() as usize == 0 {
            return Err(Error::RepeatedRoots { n });
        }
        if !g.is_monic() {
            return Err(Error::InvalidElement("generator must be monic".into()));
        }
        let (h, r) = Poly::x_n_minus_one(field, n).divrem(&g)?;
        if !r.is_zero() {
            return Err(Error::NotAGenerator { n });
        }
        Ok(CyclicCode {
            field: field.clone(),
            n,
            g,
            h,
            generator_matrix: OnceLock::new(),
            parity_check_matrix: OnceLock::new(),
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.h.degree().expect("h is nonzero")
    }

    pub fn generator(&self) -> &Poly {
        &self.g
    }

    /// `h(x) = (x^n - 1) / g(x)`.
    pub fn parity_check_polynomial(&self) -> &Poly {
        &self.h
    }

    fn indices(p: &Poly) -> Vec<u32> {
        p.to_indices().expect("matrix fields are enumerable")
    }

    /// `k × n`, row `i` holding the coefficients of `x^i g(x)`.
    pub fn generator_matrix(&self) -> Result<&Matrix> {
        if let Some(m) = self.generator_matrix.get() {
            return Ok(m);
        }
        let mut m = Matrix::zeros(&self.field, self.k(), self.n)?;
        let g = Self::indices(&self.g);
        for i in 0..self.k() {
            for (j, &c) in g.iter().enumerate() {
                m.set(i, i + j, c);
            }
        }
        Ok(self.generator_matrix.get_or_init(|| m))
    }

    /// `(n-k) × n`, row `i` holding `h_k, ..., h_0` in columns `i..=i+k`.
    pub fn parity_check_matrix(&self) -> Result<&Matrix> {
        if let Some(m) = self.parity_check_matrix.get() {
            return Ok(m);
        }
        let k = self.k();
        let mut m = Matrix::zeros(&self.field, self.n - k, self.n)?;
        let h = Self::indices(&self.h);
        for i in 0..self.n - k {
            for (j, &c) in h.iter().rev().enumerate() {
                m.set(i, i + j, c);
            }
        }
        Ok(self.parity_check_matrix.get_or_init(|| m))
    }

    /// `C⊥ = <h*(x)>`.
    pub fn dual_code(&self) -> Result<CyclicCode> {
        CyclicCode::new(&self.field, self.n, self.h.reciprocal()?)
    }

    /// `C ∩ C⊥ = {0}`, tested as `g` being self-reciprocal.
    pub fn is_lcd(&self) -> bool {
        self.g.is_self_reciprocal()
    }

    /// `C ∩ C⊥ = {0}`, tested as `rank(G; H) = n`.
    pub fn is_lcd_by_rank(&self) -> Result<bool> {
        let stacked = self.generator_matrix()?.stack(self.parity_check_matrix()?)?;
        Ok(stacked.rank() == self.n)
    }

    /// `C⊥ ⊆ C`, tested as `g | h*`.
    pub fn is_dual_containing(&self) -> bool {
        let hs = self.h.reciprocal().expect("h(0) != 0 for a divisor of x^n - 1");
        hs.divisible_by(&self.g).expect("same field")
    }

    /// Alias of [`is_dual_containing`](Self::is_dual_containing): `C ∩ C⊥ = C⊥`.
    pub fn self_orthogonal_paper_sense(&self) -> bool {
        self.is_dual_containing()
    }

    /// `C⊥ ⊆ C`, tested as `H Hᵀ = 0`.
    pub fn is_dual_containing_by_matrix(&self) -> Result<bool> {
        let h = self.parity_check_matrix()?;
        Ok(h.mul_transpose(h)?.is_zero())
    }

    /// Number of representatives `(q^k - 1)/(q - 1)`, or `None` on overflow.
    pub fn representative_count(&self) -> Option<u128> {
        let q = self.field.order();
        q.checked_pow(self.k() as u32).map(|t| (t - 1) / (q - 1))
    }

    /// Minimum Hamming weight over nonzero codewords.
    ///
    /// Messages whose first nonzero symbol is 1 are encoded and weighed, in
    /// parallel. Above `budget` messages only the rows of `G` and of its reduced
    /// echelon form are weighed and the result is an upper bound.
    pub fn minimum_distance(&self, budget: u128) -> Result<DistanceRecord> {
        let k = self.k();
        if k == 0 {
            return Err(Error::NoNonzeroCodewords);
        }
        let g = self.generator_matrix()?;
        match self.representative_count() {
            Some(reps) if reps <= budget => {
                let d = exhaustive_min_weight(g);
                Ok(DistanceRecord { d, method: DistanceMethod::Exhaustive, codewords_enumerated: reps })
            }
            _ => {
                let (r, _) = g.rref();
                let d = (0..k).map(|i| g.row_weight(i).min(r.row_weight(i))).min().unwrap();
                Ok(DistanceRecord {
                    d,
                    method: DistanceMethod::BudgetExceeded,
                    codewords_enumerated: 2 * k as u128,
                })
            }
        }
    }

    pub fn summary(&self, distance: Option<DistanceRecord>) -> CodeSummary {
        CodeSummary {
            field: self.field.to_string(),
            n: self.n,
            g: poly_json(&self.g),
            k: self.k(),
            flags: Flags { lcd: self.is_lcd(), dual_containing: self.is_dual_containing() },
            d: distance,
        }
    }
}

fn exhaustive_min_weight(g: &Matrix) -> usize {
    let f = g.ops();
    let q = f.order();
    let (k, n) = (g.rows(), g.cols());
    // delta[v] = e_{v+1} - e_v in index terms, so stepping a digit adds delta·row
    let delta: Vec<u32> = (0..q).map(|v| f.sub((v + 1) % q, v)).collect();
    let best = AtomicUsize::new(n + 1);

    let mut tasks = Vec::new();
    for lead in 0..k {
        let free = k - lead - 1;
        let mut split = 0;
        let mut count = 1u64;
        while split < free && count < 256 {
            split += 1;
            count *= q as u64;
        }
        for prefix in 0..count {
            tasks.push((lead, split, prefix));
        }
    }

    tasks.par_iter().for_each(|&(lead, split, prefix)| {
        let mut word = g.row(lead).to_vec();
        let mut rest = prefix;
        for pos in (lead + 1..lead + 1 + split).rev() {
            let v = (rest % q as u64) as u32;
            rest /= q as u64;
            if v != 0 {
                for (w, &c) in word.iter_mut().zip(g.row(pos)) {
                    *w = f.add(*w, f.mul(v, c));
                }
            }
        }
        let suffix: Vec<usize> = (lead + 1 + split..k).collect();
        let mut digits = vec![0u32; suffix.len()];
        loop {
            let cap = best.load(Ordering::Relaxed);
            let mut w = 0;
            for &x in &word {
                if x != 0 {
                    w += 1;
                    if w >= cap {
                        break;
                    }
                }
            }
            if w < cap {
                best.fetch_min(w, Ordering::Relaxed);
            }
            let mut i = digits.len();
            loop {
                if i == 0 {
                    return;
                }
                i -= 1;
                let v = digits[i];
                let dv = delta[v as usize];
                for (x, &c) in word.iter_mut().zip(g.row(suffix[i])) {
                    *x = f.add(*x, f.mul(dv, c));
                }
                digits[i] = (v + 1) % q;
                if digits[i] != 0 {
                    break;
                }
            }
        }
    });
    let d = best.into_inner();
    debug_assert!(d <= n);
    d
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flags {
    pub lcd: bool,
    pub dual_containing: bool,
}

/// JSON-friendly description of a code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeSummary {
    pub field: String,
    pub n: usize,
    pub g: serde_json::Value,
    pub k: usize,
    pub flags: Flags,
    pub d: Option<DistanceRecord>,
}

/// An element as JSON: a number over a prime field, else its coefficient array.
pub fn element_json(x: &FieldElement) -> serde_json::Value {
    match x.field().base() {
        None => serde_json::json!(x.coeffs()[0]),
        Some(b) => serde_json::Value::Array(
            x.coeffs()
                .iter()
                .map(|&c| element_json(&b.from_index(c).expect("valid base index")))
                .collect(),
        ),
    }
}

/// A polynomial as a little-endian array of [`element_json`] coefficients.
pub fn poly_json(p: &Poly) -> serde_json::Value {
    serde_json::Value::Array(p.coefficients().iter().map(element_json).collect())
}
