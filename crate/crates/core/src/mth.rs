//! `m`-th residue codes of odd prime length `p` over `F_q` with `p | q - 1`.
//!
//! The `m`-th power residues `A_0` and their cosets `A_j = r^j A_0` give the
//! generators `f_j(x) = ∏_{i ∈ A_j} (x - θ^i)`, optionally times `x - 1`.

use serde::Serialize;

use crate::cyclic::{poly_json, CyclicCode};
use crate::error::{Error, Result};
use crate::field::{prime_power_parts, Field, FieldElement};
use crate::poly::Poly;
use crate::residue::MthResidueClasses;

/// Smallest prime power `q > 1` with `q ≡ 1 (mod p)`.
pub fn smallest_field_order(p: u64) -> u64 {
    (1..)
        .map(|t| t * p + 1)
        .find(|&q| prime_power_parts(q).is_some())
        .expect("Dirichlet")
}

/// `p ≡ 1 (mod 2m)`: every `<f_j>` is LCD.
pub fn lcd_criterion(p: u64, m: u64) -> bool {
    p % (2 * m) == 1
}

/// `p ≡ m + 1 (mod 2m)`: every `<f_j>` contains its dual.
pub fn dual_containing_criterion(p: u64, m: u64) -> bool {
    p % (2 * m) == m + 1
}

/// `(lcd, dual_containing)` counts for the `<f_j>` family.
pub fn count_classified(p: u64, m: u64) -> (u64, u64) {
    (
        if lcd_criterion(p, m) { m } else { 0 },
        if dual_containing_criterion(p, m) { m } else { 0 },
    )
}

#[derive(Debug, Clone)]
pub struct MthContext {
    pub classes: MthResidueClasses,
    field: Field,
    theta: FieldElement,
}

impl MthContext {
    /// With `q = None` the smallest admissible prime power is used.
    pub fn new(p: u64, m: u64, q: Option<u64>) -> Result<MthContext> {
        let classes = MthResidueClasses::new(p, m)?;
        let q = q.unwrap_or_else(|| smallest_field_order(p));
        if q % p != 1 {
            return Err(Error::NoPthRoots { p, q });
        }
        let field = Field::prime_power(q)?;
        let theta = field.nth_primitive_root(p)?;
        Ok(MthContext { classes, field, theta })
    }

    pub fn p(&self) -> u64 {
        self.classes.p
    }

    pub fn m(&self) -> u64 {
        self.classes.m
    }

    pub fn q(&self) -> u64 {
        self.field.order() as u64
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn theta(&self) -> &FieldElement {
        &self.theta
    }

    /// `f_j`, or `(x - 1) f_j` when `include_unit_factor`.
    pub fn generator(&self, j: usize, include_unit_factor: bool) -> Result<Poly> {
        let coset = self
            .classes
            .cosets
            .get(j)
            .ok_or_else(|| Error::BadSelector(format!("coset index {j} out of range")))?;
        let mut exps = coset.clone();
        if include_unit_factor {
            exps.push(0);
        }
        Ok(Poly::product_of_linear_factors(&self.theta, &exps))
    }

    pub fn build_residue_code(&self, j: usize, include_unit_factor: bool) -> Result<CyclicCode> {
        CyclicCode::new(&self.field, self.p() as usize, self.generator(j, include_unit_factor)?)
    }

    /// `A_j ∩ -A_j = ∅`: no root of `f_j` has its inverse among the roots.
    pub fn root_condition(&self, j: usize) -> bool {
        let p = self.p();
        let c = &self.classes.cosets[j];
        c.iter().all(|&i| c.binary_search(&(p - i)).is_err())
    }

    pub fn report(&self) -> Result<MthReport> {
        let mut codes = Vec::new();
        for include_unit_factor in [false, true] {
            for j in 0..self.m() as usize {
                let code = self.build_residue_code(j, include_unit_factor)?;
                codes.push(MthCodeReport {
                    coset: j,
                    include_unit_factor,
                    generator: poly_json(code.generator()),
                    generator_text: code.generator().render_expanded(),
                    k: code.k(),
                    lcd: code.is_lcd(),
                    dual_containing: code.is_dual_containing(),
                    root_condition: !include_unit_factor && self.root_condition(j),
                });
            }
        }
        let (lcd_count, dual_containing_count) = count_classified(self.p(), self.m());
        Ok(MthReport {
            p: self.p(),
            m: self.m(),
            q: self.q(),
            primitive_root: self.classes.primitive_root,
            cosets: self.classes.cosets.clone(),
            lcd_criterion: lcd_criterion(self.p(), self.m()),
            dual_containing_criterion: dual_containing_criterion(self.p(), self.m()),
            lcd_count,
            dual_containing_count,
            codes,
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct MthCodeReport {
    pub coset: usize,
    pub include_unit_factor: bool,
    pub generator: serde_json::Value,
    pub generator_text: String,
    pub k: usize,
    pub lcd: bool,
    pub dual_containing: bool,
    pub root_condition: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct MthReport {
    pub p: u64,
    pub m: u64,
    pub q: u64,
    pub primitive_root: u64,
    pub cosets: Vec<Vec<u64>>,
    pub lcd_criterion: bool,
    pub dual_containing_criterion: bool,
    pub lcd_count: u64,
    pub dual_containing_count: u64,
    pub codes: Vec<MthCodeReport>,
}
