//! The n×n Fourier matrix over a finite field.
//!
//! Rows are `e_i = (ω^(ik))_k` and the stored inverse columns are
//! `f_j = (ω^(-jk))_k`, the columns of `n·F⁻¹`. Hence `e_i · f_j = n·[i = j]`
//! and `e_i = f_(n-i)` as vectors. Indices are taken modulo `n`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{Field, Gf};
use crate::matrix::{dot, Matrix};

#[derive(Clone, Debug)]
pub struct FourierContext {
    field: Arc<Field>,
    n: usize,
    omega: Gf,
    /// `powers[k] = ω^k` for `k < n`.
    powers: Vec<Gf>,
    rows: Matrix,
    inv_cols: Matrix,
}

impl PartialEq for FourierContext {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.n == other.n && self.omega == other.omega
    }
}

impl Eq for FourierContext {}

impl FourierContext {
    /// Builds `F_n` from the field's canonical element of order `n`.
    pub fn new(field: Arc<Field>, n: usize) -> Result<FourierContext> {
        if n == 0 {
            return Err(Error::Invalid("length must be positive".into()));
        }
        let omega = field.element_of_order(n as u64)?;
        Ok(FourierContext::with_omega(field, n, omega))
    }

    /// Builds `F_n` from a caller-chosen `ω`, which must have order exactly `n`.
    pub fn with_root(field: Arc<Field>, n: usize, omega: Gf) -> Result<FourierContext> {
        if n == 0 || field.multiplicative_order(omega) != n as u64 {
            return Err(Error::NoElementOfOrder {
                n: n as u64,
                q: field.order(),
            });
        }
        Ok(FourierContext::with_omega(field, n, omega))
    }

    fn with_omega(field: Arc<Field>, n: usize, omega: Gf) -> FourierContext {
        let mut powers = Vec::with_capacity(n);
        let mut x = Gf::ONE;
        for _ in 0..n {
            powers.push(x);
            x = field.mul(x, omega);
        }
        let rows = Matrix::from_fn(n, n, |i, k| powers[i * k % n]);
        let inv_cols = Matrix::from_fn(n, n, |j, k| powers[(n - j * k % n) % n]);
        FourierContext {
            field,
            n,
            omega,
            powers,
            rows,
            inv_cols,
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn field_arc(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn omega(&self) -> Gf {
        self.omega
    }

    /// `ω^k` with `k` reduced mod `n`.
    pub fn omega_pow(&self, k: usize) -> Gf {
        self.powers[k % self.n]
    }

    /// `-i mod n`.
    pub fn neg_index(&self, i: usize) -> usize {
        (self.n - i % self.n) % self.n
    }

    /// Row `e_(i mod n)`.
    pub fn row(&self, i: usize) -> &[Gf] {
        self.rows.row(i % self.n)
    }

    /// Inverse column `f_(j mod n)`, as a vector.
    pub fn inv_col(&self, j: usize) -> &[Gf] {
        self.inv_cols.row(j % self.n)
    }

    /// Matrix whose rows are `e_i` for the given indices.
    pub fn rows_matrix(&self, indices: &[usize]) -> Matrix {
        Matrix::from_fn(indices.len(), self.n, |a, k| self.row(indices[a])[k])
    }

    /// Matrix whose columns are `f_j` for the given indices (`n × len`).
    pub fn cols_matrix(&self, indices: &[usize]) -> Matrix {
        Matrix::from_fn(self.n, indices.len(), |k, b| self.inv_col(indices[b])[k])
    }

    /// `e_i · f_j`, which is `n` (as a field element) when `i = j mod n`, else 0.
    pub fn pairing(&self, i: usize, j: usize) -> Gf {
        dot(&self.field, self.row(i), self.inv_col(j))
    }

    /// `n` as a field element; nonzero because `n` divides `q - 1`.
    pub fn n_scalar(&self) -> Gf {
        self.field.from_int(self.n as i64)
    }

    pub fn matrix(&self) -> &Matrix {
        &self.rows
    }

    /// The true inverse `F_n⁻¹ = n⁻¹·[f_0 … f_(n-1)]`.
    pub fn inverse(&self) -> Matrix {
        let n_inv = self.field.inv_nonzero(self.n_scalar());
        self.inv_cols.transpose().scale(&self.field, n_inv)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(p: u64, s: u32, n: usize) -> FourierContext {
        FourierContext::new(Arc::new(Field::new(p, s).unwrap()), n).unwrap()
    }

    #[test]
    fn pairing_is_scaled_kronecker() {
        let c = ctx(2, 3, 7);
        let n = c.n_scalar();
        for i in 0..7 {
            for j in 0..7 {
                let want = if i == j { n } else { Gf::ZERO };
                assert_eq!(c.pairing(i, j), want);
            }
        }
        // n = 7 is 1 in characteristic 2: the pairing is exactly Kronecker.
        assert_eq!(n, Gf::ONE);
    }

    #[test]
    fn trivial_length() {
        let c = ctx(5, 1, 1);
        assert_eq!(c.row(0), &[Gf::ONE]);
        assert_eq!(c.inv_col(0), &[Gf::ONE]);
    }

    /// Oracle: invert F_10 over GF(11) by Gaussian elimination and compare.
    #[test]
    fn inverse_columns_match_gaussian_inverse() {
        let c = ctx(11, 1, 10);
        let f = c.field();
        let aug = c.matrix().hcat(&Matrix::identity(10)).unwrap();
        let (red, piv) = aug.rref(f);
        assert_eq!(piv.len(), 10);
        let inv = red.select_cols(&(10..20).collect::<Vec<_>>());
        let scaled = inv.scale(f, c.n_scalar());
        for j in 0..10 {
            assert_eq!(scaled.col(j), c.inv_col(j));
            assert_eq!(c.inv_col(j), c.row(c.neg_index(j)));
        }
        assert_eq!(inv, c.inverse());
    }

    #[test]
    fn rows_wrap_and_match_exponents() {
        let c = ctx(2, 3, 7);
        assert_eq!(c.row(7), c.row(0));
        let w = c.omega();
        let want: Vec<Gf> = [0u64, 3, 6, 2, 5, 1, 4]
            .iter()
            .map(|&e| c.field().pow(w, e))
            .collect();
        assert_eq!(c.row(3), want.as_slice());
    }

    #[test]
    fn product_with_inverse_is_identity() {
        for (p, s, n) in [(2, 3, 7), (3, 4, 10), (11, 1, 10), (2, 4, 15), (5, 2, 24)] {
            let c = ctx(p, s, n);
            let prod = c.matrix().mul(c.field(), &c.inverse()).unwrap();
            assert_eq!(prod, Matrix::identity(n), "GF({p}^{s}), n = {n}");
        }
    }

    #[test]
    fn conjugation_fixes_rows_when_aligned() {
        // l = 2^3 = 8 = 1 mod 7 in GF(2^6).
        let c = ctx(2, 6, 7);
        for i in 0..7 {
            let conj: Vec<Gf> = c.row(i).iter().map(|&x| c.field().frobenius(x, 8)).collect();
            assert_eq!(conj, c.row(i));
        }
    }

    #[test]
    fn missing_root_rejected() {
        let f = Arc::new(Field::new(2, 5).unwrap());
        assert!(matches!(
            FourierContext::new(f, 15),
            Err(Error::NoElementOfOrder { n: 15, q: 32 })
        ));
    }
}
