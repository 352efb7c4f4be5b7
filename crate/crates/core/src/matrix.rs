//! Dense matrices over fields with lookup tables, stored as element indices.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::field::{Field, SmallField};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Result<Matrix> {
        if field.small().is_none() {
            return Err(Error::FieldTooLarge(format!(
                "matrices need a field of order at most 2^16, got {}",
                field.order()
            )));
        }
        Ok(Matrix { field: field.clone(), rows, cols, data: vec![0; rows * cols] })
    }

    pub fn from_rows(field: &Field, rows: &[Vec<u32>]) -> Result<Matrix> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Matrix::zeros(field, rows.len(), cols)?;
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::InvalidElement("ragged rows".into()));
            }
            m.data[i * cols..(i + 1) * cols].copy_from_slice(r);
        }
        Ok(m)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub(crate) fn ops(&self) -> &SmallField {
        self.field.small().expect("checked at construction")
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn stack(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field || self.cols != other.cols {
            return Err(Error::FieldMismatch);
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, data })
    }

    /// The submatrix on the given columns.
    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(self.rows * cols.len());
        for i in 0..self.rows {
            data.extend(cols.iter().map(|&j| self.get(i, j)));
        }
        Matrix { field: self.field.clone(), rows: self.rows, cols: cols.len(), data }
    }

    /// `self · otherᵀ`.
    pub fn mul_transpose(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field || self.cols != other.cols {
            return Err(Error::FieldMismatch);
        }
        let f = self.ops();
        let mut out = Matrix::zeros(&self.field, self.rows, other.rows)?;
        for i in 0..self.rows {
            for j in 0..other.rows {
                let s = self
                    .row(i)
                    .iter()
                    .zip(other.row(j))
                    .fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)));
                out.set(i, j, s);
            }
        }
        Ok(out)
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let f = self.ops();
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| m.get(i, c) != 0) else { continue };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = f.inv(m.get(r, c));
            for j in 0..m.cols {
                let v = f.mul(m.get(r, j), inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                let factor = m.get(i, c);
                if i == r || factor == 0 {
                    continue;
                }
                let nf = f.neg(factor);
                for j in c..m.cols {
                    let v = f.add(m.get(i, j), f.mul(nf, m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Hamming weight of row `i`.
    pub fn row_weight(&self, i: usize) -> usize {
        self.row(i).iter().filter(|&&x| x != 0).count()
    }

    /// Comma-separated rows with entries rendered as field elements.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for i in 0..self.rows {
            let cells: Vec<String> = self
                .row(i)
                .iter()
                .map(|&x| self.field.from_index(x).expect("valid index").to_string())
                .collect();
            let _ = writeln!(out, "{}", cells.join(","));
        }
        out
    }
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..self.rows {
            writeln!(f, "{:?}", self.row(i))?;
        }
        Ok(())
    }
}

/// Smallest `s ≤ max_size` such that some `s` columns of `h` are linearly dependent,
/// found by trying every column subset in increasing size.
pub fn smallest_dependent_columns(h: &Matrix, max_size: usize) -> Option<usize> {
    let n = h.cols();
    for s in 1..=max_size.min(n) {
        let mut idx: Vec<usize> = (0..s).collect();
        loop {
            if h.select_columns(&idx).rank() < s {
                return Some(s);
            }
            // next combination in lexicographic order
            let mut i = s;
            while i > 0 && idx[i - 1] == n - s + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            idx[i - 1] += 1;
            for j in i..s {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_product() {
        let f2 = Field::prime(2).unwrap();
        let g = Matrix::from_rows(&f2, &[vec![1, 1, 0], vec![0, 1, 1]]).unwrap();
        let h = Matrix::from_rows(&f2, &[vec![1, 1, 1]]).unwrap();
        assert_eq!(g.rank(), 2);
        assert!(g.mul_transpose(&h).unwrap().is_zero());
        assert_eq!(g.stack(&h).unwrap().rank(), 3);
        assert_eq!(smallest_dependent_columns(&h, 3), Some(2));
        assert_eq!(g.to_csv(), "1,1,0\n0,1,1\n");
    }

    #[test]
    fn rref_over_f4() {
        let f4 = Field::prime_power(4).unwrap();
        let m = Matrix::from_rows(&f4, &[vec![2, 3, 1], vec![1, 0, 3]]).unwrap();
        let (r, piv) = m.rref();
        assert_eq!(piv, vec![0, 1]);
        assert_eq!(r.get(0, 0), 1);
        assert_eq!(r.get(1, 0), 0);
    }
}
