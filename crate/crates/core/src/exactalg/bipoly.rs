//! Dense bivariate polynomials in `(u, v)` and Sylvester resultants.

use super::field::Field;
use super::upoly::{self, Poly};
use crate::error::{Error, Result};

/// `Σ_j rows[j](u) v^j`, trimmed in both directions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiPoly<E> {
    pub rows: Vec<Poly<E>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    U,
    V,
}

impl<E: Clone + PartialEq> BiPoly<E> {
    pub fn zero() -> Self {
        Self { rows: Vec::new() }
    }

    pub fn from_rows<F: Field<Elem = E>>(k: &F, rows: Vec<Poly<E>>) -> Self {
        let mut p = Self { rows: rows.into_iter().map(|r| upoly::trimmed(k, r)).collect() };
        p.trim();
        p
    }

    /// Builds from a dense table `c[i][j]` = coefficient of `u^i v^j`.
    pub fn from_table<F: Field<Elem = E>>(k: &F, table: &[Vec<E>]) -> Self {
        let nv = table.iter().map(|r| r.len()).max().unwrap_or(0);
        let rows =
            (0..nv).map(|j| table.iter().map(|r| r.get(j).cloned().unwrap_or_else(|| k.zero())).collect()).collect();
        Self::from_rows(k, rows)
    }

    /// A polynomial in `u` alone.
    pub fn from_u<F: Field<Elem = E>>(k: &F, p: Poly<E>) -> Self {
        Self::from_rows(k, vec![p])
    }

    /// A polynomial in `v` alone.
    pub fn from_v<F: Field<Elem = E>>(k: &F, p: &[E]) -> Self {
        Self::from_rows(k, p.iter().map(|c| vec![c.clone()]).collect())
    }

    fn trim(&mut self) {
        while self.rows.last().is_some_and(|r| r.is_empty()) {
            self.rows.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn deg_v(&self) -> Option<usize> {
        self.rows.len().checked_sub(1)
    }

    pub fn deg_u(&self) -> Option<usize> {
        self.rows.iter().filter_map(|r| upoly::degree(r)).max()
    }

    pub fn coeff(&self, i: usize, j: usize) -> Option<&E> {
        self.rows.get(j).and_then(|r| r.get(i))
    }

    pub fn leading_v(&self) -> Option<&Poly<E>> {
        self.rows.last()
    }

    pub fn add<F: Field<Elem = E>>(&self, k: &F, o: &Self) -> Self {
        let n = self.rows.len().max(o.rows.len());
        let rows = (0..n)
            .map(|j| upoly::add(k, self.rows.get(j).map_or(&[][..], |r| r), o.rows.get(j).map_or(&[][..], |r| r)))
            .collect();
        Self::from_rows(k, rows)
    }

    pub fn sub<F: Field<Elem = E>>(&self, k: &F, o: &Self) -> Self {
        self.add(k, &o.scale(k, &k.neg(&k.one())))
    }

    pub fn scale<F: Field<Elem = E>>(&self, k: &F, c: &E) -> Self {
        Self::from_rows(k, self.rows.iter().map(|r| upoly::scale(k, r, c)).collect())
    }

    pub fn mul<F: Field<Elem = E>>(&self, k: &F, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut rows = vec![Vec::new(); self.rows.len() + o.rows.len() - 1];
        for (i, a) in self.rows.iter().enumerate() {
            for (j, b) in o.rows.iter().enumerate() {
                rows[i + j] = upoly::add(k, &rows[i + j], &upoly::mul(k, a, b));
            }
        }
        Self::from_rows(k, rows)
    }

    pub fn mul_u<F: Field<Elem = E>>(&self, k: &F, p: &[E]) -> Self {
        Self::from_rows(k, self.rows.iter().map(|r| upoly::mul(k, r, p)).collect())
    }

    pub fn deriv_u<F: Field<Elem = E>>(&self, k: &F) -> Self {
        Self::from_rows(k, self.rows.iter().map(|r| upoly::derivative(k, r)).collect())
    }

    pub fn deriv_v<F: Field<Elem = E>>(&self, k: &F) -> Self {
        let rows =
            self.rows.iter().enumerate().skip(1).map(|(j, r)| upoly::scale(k, r, &k.from_i64(j as i64))).collect();
        Self::from_rows(k, rows)
    }

    /// Exchanges the roles of `u` and `v`.
    pub fn swap<F: Field<Elem = E>>(&self, k: &F) -> Self {
        let nu = self.rows.iter().map(|r| r.len()).max().unwrap_or(0);
        let rows = (0..nu)
            .map(|i| self.rows.iter().map(|r| r.get(i).cloned().unwrap_or_else(|| k.zero())).collect())
            .collect();
        Self::from_rows(k, rows)
    }

    /// Substitutes `u = a`, giving a polynomial in `v`.
    pub fn eval_u<F: Field<Elem = E>>(&self, k: &F, a: &E) -> Poly<E> {
        upoly::trimmed(k, self.rows.iter().map(|r| upoly::eval(k, r, a)).collect())
    }

    /// Substitutes `v = b`, giving a polynomial in `u`.
    pub fn eval_v<F: Field<Elem = E>>(&self, k: &F, b: &E) -> Poly<E> {
        let mut acc = Vec::new();
        for r in self.rows.iter().rev() {
            acc = upoly::add(k, &upoly::scale(k, &acc, b), r);
        }
        acc
    }

    pub fn eval<F: Field<Elem = E>>(&self, k: &F, a: &E, b: &E) -> E {
        upoly::eval(k, &self.eval_u(k, a), b)
    }

    /// Substitutes `v = p(u)`.
    pub fn subst_v<F: Field<Elem = E>>(&self, k: &F, p: &[E]) -> Poly<E> {
        let mut acc = Vec::new();
        for r in self.rows.iter().rev() {
            acc = upoly::add(k, &upoly::mul(k, &acc, p), r);
        }
        acc
    }

    /// Reduces every `u`-coefficient modulo `m`.
    pub fn rem_u<F: Field<Elem = E>>(&self, k: &F, m: &[E]) -> Self {
        Self::from_rows(k, self.rows.iter().map(|r| upoly::rem(k, r, m)).collect())
    }

    /// Gcd of all `u`-coefficients.
    pub fn content_v<F: Field<Elem = E>>(&self, k: &F) -> Poly<E> {
        upoly::gcd_many(k, &self.rows)
    }
}

/// Sylvester resultant eliminating `var`.
pub fn resultant<F: Field>(k: &F, f: &BiPoly<F::Elem>, g: &BiPoly<F::Elem>, var: Var) -> Result<Poly<F::Elem>> {
    match var {
        Var::V => resultant_v(k, f, g),
        Var::U => resultant_v(k, &f.swap(k), &g.swap(k)),
    }
}

fn resultant_v<F: Field>(k: &F, f: &BiPoly<F::Elem>, g: &BiPoly<F::Elem>) -> Result<Poly<F::Elem>> {
    let (m, n) = match (f.deg_v(), g.deg_v()) {
        (None, None) => return Err(Error::BothZero),
        (None, Some(_)) | (Some(_), None) => return Ok(Vec::new()),
        (Some(m), Some(n)) => (m, n),
    };
    if m == 0 && n == 0 {
        return Ok(vec![k.one()]);
    }
    if m == 0 {
        return Ok(upoly::pow(k, &f.rows[0], n));
    }
    if n == 0 {
        return Ok(upoly::pow(k, &g.rows[0], m));
    }
    let size = m + n;
    let mut mat = vec![vec![Vec::new(); size]; size];
    for r in 0..n {
        for j in 0..=m {
            mat[r][r + j] = f.rows[m - j].clone();
        }
    }
    for r in 0..m {
        for j in 0..=n {
            mat[n + r][r + j] = g.rows[n - j].clone();
        }
    }
    Ok(bareiss_det(k, mat))
}

/// Fraction-free determinant over `K[u]`.
pub fn bareiss_det<F: Field>(k: &F, mut mat: Vec<Vec<Poly<F::Elem>>>) -> Poly<F::Elem> {
    let n = mat.len();
    if n == 0 {
        return vec![k.one()];
    }
    let mut sign_neg = false;
    let mut prev: Poly<F::Elem> = vec![k.one()];
    for c in 0..n - 1 {
        if mat[c][c].is_empty() {
            match (c + 1..n).find(|&r| !mat[r][c].is_empty()) {
                Some(r) => {
                    mat.swap(c, r);
                    sign_neg = !sign_neg;
                }
                None => return Vec::new(),
            }
        }
        for i in c + 1..n {
            for j in c + 1..n {
                let t = upoly::sub(k, &upoly::mul(k, &mat[c][c], &mat[i][j]), &upoly::mul(k, &mat[i][c], &mat[c][j]));
                mat[i][j] = upoly::div_exact(k, &t, &prev).expect("Bareiss division is exact");
            }
            mat[i][c] = Vec::new();
        }
        prev = mat[c][c].clone();
    }
    let det = mat[n - 1][n - 1].clone();
    if sign_neg {
        upoly::neg(k, &det)
    } else {
        det
    }
}
