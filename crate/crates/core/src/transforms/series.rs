use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{binom, Count};
use crate::transforms::CountTable;
use crate::RowConvention;

/// Normalization of the `y` (edge) variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum YNorm {
    /// `y^m / m!`
    Exponential,
    /// `y^m`
    Ordinary,
}

impl YNorm {
    pub fn for_convention(conv: RowConvention) -> Self {
        if conv.is_ordered() {
            YNorm::Exponential
        } else {
            YNorm::Ordinary
        }
    }
}

/// Truncated bivariate series `sum c(m,n) y^m/(m!)^e x^n/n!`, stored as the
/// integer coefficients `c(m,n)` for `m <= order_y`, `n <= order_x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesTable {
    pub y_norm: YNorm,
    pub order_x: usize,
    pub order_y: usize,
    coeffs: Vec<Vec<Count>>,
}

impl SeriesTable {
    pub fn zero(y_norm: YNorm, order_x: usize, order_y: usize) -> Self {
        Self {
            y_norm,
            order_x,
            order_y,
            coeffs: vec![vec![Count::zero(); order_x + 1]; order_y + 1],
        }
    }

    pub fn from_fn(y_norm: YNorm, order_x: usize, order_y: usize, f: impl Fn(usize, usize) -> Count) -> Self {
        let mut s = Self::zero(y_norm, order_x, order_y);
        for m in 0..=order_y {
            for n in 0..=order_x {
                s.coeffs[m][n] = f(m, n);
            }
        }
        s
    }

    pub fn get(&self, m: usize, n: usize) -> &Count {
        &self.coeffs[m][n]
    }

    pub fn set(&mut self, m: usize, n: usize, v: Count) {
        self.coeffs[m][n] = v;
    }

    fn y_weight(&self, m: usize, i: usize) -> Count {
        match self.y_norm {
            YNorm::Exponential => binom(m as i64, i as i64),
            YNorm::Ordinary => Count::one(),
        }
    }

    /// Coefficient of the product at `(m, n)`, summing `n`-splits from `n_lo`.
    fn product_cell(&self, a: &SeriesTable, b: &SeriesTable, m: usize, n: usize, root: bool) -> Count {
        let mut acc = Count::zero();
        for j in 0..=n {
            let xw = if root {
                if j == 0 {
                    continue;
                }
                binom(n as i64 - 1, j as i64 - 1)
            } else {
                binom(n as i64, j as i64)
            };
            for i in 0..=m {
                let (x, y) = (&a.coeffs[i][j], &b.coeffs[m - i][n - j]);
                if x.is_zero() || y.is_zero() {
                    continue;
                }
                acc += &xw * self.y_weight(m, i) * x * y;
            }
        }
        acc
    }

    pub fn mul(&self, other: &SeriesTable) -> SeriesTable {
        let mut out = Self::zero(self.y_norm, self.order_x, self.order_y);
        for m in 0..=self.order_y {
            for n in 0..=self.order_x {
                out.coeffs[m][n] = self.product_cell(self, other, m, n, false);
            }
        }
        out
    }

    fn is_unit_in_x0(&self) -> bool {
        (0..=self.order_y).all(|m| self.coeffs[m][0] == Count::from(u8::from(m == 0)))
    }

    /// `ln(self)` for a series whose `x^0` part is exactly `1`, by the
    /// rooted recurrence `a_n = sum_j C(n-1,j-1) l_j * a_{n-j}`.
    pub fn ln(&self) -> Result<SeriesTable> {
        if !self.is_unit_in_x0() {
            return Err(Error::InvalidArgument("log needs an x^0 part equal to 1".into()));
        }
        let mut l = Self::zero(self.y_norm, self.order_x, self.order_y);
        for n in 1..=self.order_x {
            for m in 0..=self.order_y {
                // the j = n, i = m term is l(m,n) * a(0,0) = l(m,n)
                let rest = self.product_cell(&l, self, m, n, true);
                l.coeffs[m][n] = &self.coeffs[m][n] - rest;
            }
        }
        Ok(l)
    }

    /// `exp(self)` for a series with no `x^0` part.
    pub fn exp(&self) -> Result<SeriesTable> {
        if (0..=self.order_y).any(|m| !self.coeffs[m][0].is_zero()) {
            return Err(Error::InvalidArgument("exp needs a series without x^0 part".into()));
        }
        let mut a = Self::zero(self.y_norm, self.order_x, self.order_y);
        a.coeffs[0][0] = Count::one();
        for n in 1..=self.order_x {
            for m in 0..=self.order_y {
                a.coeffs[m][n] = a.product_cell(self, &a, m, n, true);
            }
        }
        Ok(a)
    }
}

/// Checks `Omega = 1 + ln A` coefficientwise. `alpha_table` must hold every
/// `(m, n)` with `m <= order_y`, `n <= order_x`; `omega_table` every such
/// cell with `n >= 1`.
pub fn egf_log_check(
    alpha_table: &CountTable,
    omega_table: &CountTable,
    convention: RowConvention,
    order_x: usize,
    order_y: usize,
) -> Result<bool> {
    first_log_mismatch(alpha_table, omega_table, convention, order_x, order_y).map(|bad| bad.is_none())
}

/// Like [`egf_log_check`] but reports the first offending `(m, n)`.
pub fn first_log_mismatch(
    alpha_table: &CountTable,
    omega_table: &CountTable,
    convention: RowConvention,
    order_x: usize,
    order_y: usize,
) -> Result<Option<(usize, usize)>> {
    let norm = YNorm::for_convention(convention);
    let mut a = SeriesTable::zero(norm, order_x, order_y);
    for m in 0..=order_y {
        for n in 0..=order_x {
            let v = alpha_table.get(m, n).ok_or(Error::InsufficientDepth { m, n })?;
            a.set(m, n, v.clone());
            if n >= 1 && omega_table.get(m, n).is_none() {
                return Err(Error::InsufficientDepth { m, n });
            }
        }
    }
    let l = a.ln()?;
    for n in 1..=order_x {
        for m in 0..=order_y {
            if l.get(m, n) != omega_table.get(m, n).expect("checked above") {
                return Ok(Some((m, n)));
            }
        }
    }
    Ok(None)
}
