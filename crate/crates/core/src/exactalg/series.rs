//! Truncated power series in `(x - center)`.

use serde::Serialize;

use super::field::Field;
use super::upoly;
use crate::error::{Error, Result};

/// `Σ_{i < order} c_i (x - center)^i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TruncatedSeries<E> {
    pub center: E,
    pub coefficients: Vec<E>,
}

impl<E: Clone> TruncatedSeries<E> {
    pub fn order(&self) -> usize {
        self.coefficients.len()
    }
}

/// Expansion of a polynomial at `center`, truncated to `order` terms.
pub fn expand<F: Field>(k: &F, f: &[F::Elem], center: &F::Elem, order: usize) -> TruncatedSeries<F::Elem> {
    let mut c = upoly::taylor_shift(k, f, center);
    c.resize(order.max(c.len()), k.zero());
    c.truncate(order);
    TruncatedSeries { center: center.clone(), coefficients: c }
}

pub fn series_mul<F: Field>(k: &F, a: &[F::Elem], b: &[F::Elem], order: usize) -> Vec<F::Elem> {
    let mut out = vec![k.zero(); order];
    for (i, x) in a.iter().enumerate().take(order) {
        if k.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(order - i) {
            out[i + j] = k.add(&out[i + j], &k.mul(x, y));
        }
    }
    out
}

/// Inverse of a series with nonzero constant term.
pub fn series_inv<F: Field>(k: &F, a: &[F::Elem], order: usize) -> Option<Vec<F::Elem>> {
    let a0inv = k.inv(a.first()?)?;
    let mut out = vec![k.zero(); order];
    if order == 0 {
        return Some(out);
    }
    out[0] = a0inv.clone();
    for n in 1..order {
        let mut s = k.zero();
        for i in 1..=n.min(a.len() - 1) {
            s = k.add(&s, &k.mul(&a[i], &out[n - i]));
        }
        out[n] = k.neg(&k.mul(&s, &a0inv));
    }
    Some(out)
}

/// Square root branch `Y` of `f` at `a` with `Y(a) = b`, so that
/// `Y^2 ≡ f mod (x - a)^order`. Newton iteration with doubling precision.
pub fn hensel_sqrt<F: Field>(
    k: &F,
    f: &[F::Elem],
    a: &F::Elem,
    b: &F::Elem,
    order: usize,
) -> Result<TruncatedSeries<F::Elem>> {
    if k.characteristic() == 2 {
        return Err(Error::EvenCharacteristic);
    }
    if k.is_zero(b) {
        return Err(Error::BranchZero);
    }
    if upoly::eval(k, f, a) != k.mul(b, b) {
        return Err(Error::NotASquare);
    }
    let target = expand(k, f, a, order).coefficients;
    let half = k.inv(&k.from_i64(2)).unwrap();
    let mut y = vec![b.clone()];
    let mut prec = 1;
    while prec < order {
        prec = (2 * prec).min(order);
        // y <- (y + f / y) / 2
        let yinv = series_inv(k, &y, prec).unwrap();
        let q = series_mul(k, &target[..prec], &yinv, prec);
        y.resize(prec, k.zero());
        y = y.iter().zip(&q).map(|(u, v)| k.mul(&k.add(u, v), &half)).collect();
    }
    y.resize(order, k.zero());
    y.truncate(order);
    Ok(TruncatedSeries { center: a.clone(), coefficients: y })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::field::{PrimeField, Rationals};
    use num_rational::BigRational;

    #[test]
    fn binomial_series() {
        let k = Rationals;
        let f = vec![k.one(), k.one()];
        let y = hensel_sqrt(&k, &f, &k.zero(), &k.one(), 3).unwrap();
        let r = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        assert_eq!(y.coefficients, vec![r(1, 1), r(1, 2), r(-1, 8)]);
    }

    #[test]
    fn branch_sign_respected() {
        let k = PrimeField::new(101).unwrap();
        let f = vec![4, 3, 0, 1];
        let b = k.from_i64(-2);
        let y = hensel_sqrt(&k, &f, &0, &b, 6).unwrap();
        assert_eq!(y.coefficients[0], b);
        let sq = series_mul(&k, &y.coefficients, &y.coefficients, 6);
        assert_eq!(sq, expand(&k, &f, &0, 6).coefficients);
    }

    #[test]
    fn errors() {
        let k = PrimeField::new(101).unwrap();
        assert_eq!(hensel_sqrt(&k, &[0, 1], &0, &0, 3), Err(Error::BranchZero));
        assert_eq!(hensel_sqrt(&k, &[5], &0, &1, 3), Err(Error::NotASquare));
        let k2 = PrimeField::new(2).unwrap();
        assert_eq!(hensel_sqrt(&k2, &[1], &0, &1, 3), Err(Error::EvenCharacteristic));
    }
}
