//! Dense lower-triangular matrices and the row/column/diagonal views.

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::poly::Poly;
use crate::rational::{int, Rational};
use crate::ring::Ring;
use crate::series::Series;

/// Lower-triangular square matrix; row `n` stores entries `(n, 0..=n)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TriMatrix<R> {
    rows: Vec<Vec<R>>,
}

impl<R: Ring> TriMatrix<R> {
    pub fn from_rows(rows: Vec<Vec<R>>) -> Self {
        let rows = rows
            .into_iter()
            .enumerate()
            .map(|(n, mut row)| {
                assert!(
                    row.iter().skip(n + 1).all(Ring::is_zero),
                    "entry above the diagonal in row {n}"
                );
                row.resize(n + 1, R::zero());
                row
            })
            .collect();
        TriMatrix { rows }
    }

    pub fn from_fn(size: usize, f: impl Fn(usize, usize) -> R + Sync + Send) -> Self {
        Self::from_fn_with(Execution::default(), size, f)
    }

    pub fn from_fn_with(exec: Execution, size: usize, f: impl Fn(usize, usize) -> R + Sync + Send) -> Self {
        let rows = exec.map_indices(size, |n| (0..=n).map(|m| f(n, m)).collect());
        TriMatrix { rows }
    }

    /// Matrix whose column `m` has the given series as generating function.
    pub fn from_columns(columns: &[Series<R>]) -> Self {
        let size = columns.len();
        Self::from_fn_with(Execution::Sequential, size, |n, m| columns[m].coeff(n))
    }

    pub fn identity(size: usize) -> Self {
        Self::from_fn_with(Execution::Sequential, size, |n, m| if n == m { R::one() } else { R::zero() })
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    /// Entry `(n, m)`; zero above the diagonal.
    pub fn get(&self, n: usize, m: usize) -> R {
        if m > n {
            R::zero()
        } else {
            self.rows[n][m].clone()
        }
    }

    pub fn row(&self, n: usize) -> &[R] {
        &self.rows[n]
    }

    pub fn rows(&self) -> &[Vec<R>] {
        &self.rows
    }

    pub fn truncate(&self, size: usize) -> Self {
        TriMatrix { rows: self.rows[..size.min(self.size())].to_vec() }
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> TriMatrix<S> {
        TriMatrix { rows: self.rows.iter().map(|r| r.iter().map(&f).collect()).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let size = self.size().min(other.size());
        Self::from_fn_with(Execution::Sequential, size, |n, m| self.rows[n][m].add(&other.rows[n][m]))
    }

    pub fn sub(&self, other: &Self) -> Self {
        let size = self.size().min(other.size());
        Self::from_fn_with(Execution::Sequential, size, |n, m| self.rows[n][m].sub(&other.rows[n][m]))
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|a| a.mul(c))
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.mul_with(Execution::default(), other)
    }

    pub fn mul_with(&self, exec: Execution, other: &Self) -> Self {
        let size = self.size().min(other.size());
        Self::from_fn_with(exec, size, |n, m| {
            let mut acc = R::zero();
            for k in m..=n {
                acc = acc.add(&self.rows[n][k].mul(&other.rows[k][m]));
            }
            acc
        })
    }

    /// Inverse by forward substitution; the diagonal must consist of units.
    pub fn inverse(&self) -> Result<Self> {
        let size = self.size();
        let mut inv: Vec<Vec<R>> = Vec::with_capacity(size);
        for n in 0..size {
            let d = self.rows[n][n]
                .try_inv()
                .ok_or(Error::NotInvertible("diagonal entry is not a unit"))?;
            let mut row = vec![R::zero(); n + 1];
            row[n] = d.clone();
            for m in (0..n).rev() {
                let mut acc = R::zero();
                for k in m..n {
                    acc = acc.add(&self.rows[n][k].mul(&inv[k][m]));
                }
                row[m] = acc.neg().mul(&d);
            }
            inv.push(row);
        }
        Ok(TriMatrix { rows: inv })
    }

    /// `[n, →]`: row `n` as a polynomial in the column index.
    pub fn row_poly(&self, n: usize) -> Result<Poly<R>> {
        self.check(n)?;
        Ok(Poly::new(self.rows[n].clone()))
    }

    /// Column `m` as a generating function of order `size - 1`.
    pub fn col_gf(&self, m: usize) -> Result<Series<R>> {
        self.check(m)?;
        Ok(Series::from_fn(self.size() - 1, |n| self.get(n, m)))
    }

    /// `[n, ↘]`: `[x^m]` is entry `(n+m, m)`; order `size - 1 - n`.
    pub fn diag_down_gf(&self, n: usize) -> Result<Series<R>> {
        self.check(n)?;
        Ok(Series::from_fn(self.size() - 1 - n, |m| self.rows[n + m][m].clone()))
    }

    /// `[n, ↗]`: the coefficient of `x^m` is entry `(n-m, m)`, `2m <= n`.
    pub fn diag_up_poly(&self, n: usize) -> Result<Poly<R>> {
        self.check(n)?;
        Ok(Poly::new((0..=n / 2).map(|m| self.rows[n - m][m].clone()).collect()))
    }

    fn check(&self, index: usize) -> Result<()> {
        if index < self.size() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index, size: self.size() })
        }
    }
}

impl TriMatrix<Rational> {
    /// Diagonal matrix `|e^x|` with entries `1/n!`.
    pub fn factorial_diagonal(size: usize) -> Self {
        Self::from_fn_with(Execution::Sequential, size, |n, m| {
            if n == m {
                Rational::new(1.into(), crate::rational::factorial(n as u64))
            } else {
                int(0)
            }
        })
    }

    pub fn is_integral(&self) -> bool {
        self.rows.iter().flatten().all(|q| q.is_integer())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> TriMatrix<Rational> {
        TriMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&c| int(c)).collect()).collect())
    }

    #[test]
    fn inverse_and_product() {
        let a = m(&[&[1], &[2, 1], &[3, 4, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), TriMatrix::identity(3));
        assert_eq!(inv.mul(&a), TriMatrix::identity(3));
    }

    #[test]
    fn views() {
        let a = m(&[&[1], &[2, 3], &[4, 5, 6], &[7, 8, 9, 10]]);
        assert_eq!(a.row_poly(2).unwrap().coeffs(), &[4, 5, 6].map(int));
        assert_eq!(a.col_gf(1).unwrap().coeffs(), &[0, 3, 5, 8].map(int));
        assert_eq!(a.diag_down_gf(1).unwrap().coeffs(), &[2, 5, 9].map(int));
        assert_eq!(a.diag_up_poly(3).unwrap().coeffs(), &[7, 5].map(int));
        assert_eq!(a.diag_up_poly(2).unwrap().coeffs(), &[4, 3].map(int));
        assert!(matches!(a.col_gf(4), Err(Error::IndexOutOfRange { .. })));
        let id = TriMatrix::<Rational>::identity(5);
        assert_eq!(id.diag_down_gf(0).unwrap(), Series::from_coeffs(vec![int(1); 5], 4));
    }

    #[test]
    #[should_panic]
    fn rejects_upper_entries() {
        m(&[&[1, 1], &[0, 1]]);
    }
}
