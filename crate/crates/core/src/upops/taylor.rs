//! Taylor shift `f(Y) -> f(Y + c)`.

use crate::error::Result;
use crate::poly::SparsePoly;
use crate::scalar::Scalar;
use crate::series::PowerSeries;

use super::Upops;

/// Rows `0..=k` of `t[i][j] = binom(i, j) * c^(i-j)`.
fn shift_matrix<C: Scalar>(k: usize, c: &C) -> Vec<Vec<C>> {
    let mut rows: Vec<Vec<C>> = Vec::with_capacity(k + 1);
    for i in 0..=k {
        let mut row = Vec::with_capacity(i + 1);
        for j in 0..=i {
            let v = if j == i {
                C::one()
            } else {
                // t[i][j] = t[i-1][j-1] + c * t[i-1][j]
                let prev = &rows[i - 1];
                let mut v = c.clone() * &prev[j];
                if j > 0 {
                    v += &prev[j - 1];
                }
                v
            };
            row.push(v);
        }
        rows.push(row);
    }
    rows
}

impl<C: Scalar> Upops<C> {
    /// `f(main_var + c)`. Each new coefficient is one lazy weighted sum of
    /// the old ones.
    pub fn taylor_shift(&self, c: &C) -> Result<Self> {
        let k = match self.coeffs.len() {
            0 => return Ok(self.clone()),
            n => n - 1,
        };
        let t = shift_matrix(k, c);
        let mut out = Vec::with_capacity(k + 1);
        for j in 0..=k {
            let mut terms = Vec::new();
            let mut weights = Vec::new();
            for (i, row) in t.iter().enumerate().skip(j) {
                if row[j].is_zero() || self.coeffs[i].is_known_zero() {
                    continue;
                }
                terms.push(self.coeffs[i].clone());
                weights.push(SparsePoly::constant(&self.vars, row[j].clone()));
            }
            out.push(match terms.len() {
                // t[j][j] = 1, so a_j itself is known zero
                0 => self.coeffs[j].clone(),
                1 if weights[0].is_one() => terms.pop().unwrap(),
                _ => PowerSeries::add_many(&terms, Some(&weights))?,
            });
        }
        Self::from_coefficients(&self.main_var, &self.vars, out)
    }
}
