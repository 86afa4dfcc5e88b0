//! Binary forms on P¹ and their root structure over the algebraic closure.

use serde::Serialize;

use super::field::Field;
use super::upoly;
use crate::error::{Error, Result};

/// `Σ c_i s^(d-i) t^i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryForm<E> {
    pub degree: usize,
    pub coefficients: Vec<E>,
}

/// Root structure over the closure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootProfile {
    pub count: usize,
    /// Multiplicities, sorted descending; they sum to the degree.
    pub profile: Vec<usize>,
}

impl<E: Clone> BinaryForm<E> {
    pub fn new(coefficients: Vec<E>) -> Self {
        assert!(!coefficients.is_empty(), "a binary form has at least one coefficient");
        Self { degree: coefficients.len() - 1, coefficients }
    }

    /// The polynomial in `t` obtained by setting `s = 1` (ascending).
    pub fn affine_t<F: Field<Elem = E>>(&self, k: &F) -> Vec<E> {
        upoly::trimmed(k, self.coefficients.clone())
    }

    /// The polynomial in `s` obtained by setting `t = 1` (ascending).
    pub fn affine_s<F: Field<Elem = E>>(&self, k: &F) -> Vec<E> {
        upoly::trimmed(k, self.coefficients.iter().rev().cloned().collect())
    }
}

impl<E: Clone + PartialEq> BinaryForm<E> {
    pub fn is_zero<F: Field<Elem = E>>(&self, k: &F) -> bool {
        self.coefficients.iter().all(|c| k.is_zero(c))
    }

    pub fn eval<F: Field<Elem = E>>(&self, k: &F, s: &E, t: &E) -> E {
        let mut acc = k.zero();
        for (i, c) in self.coefficients.iter().enumerate() {
            let term = k.mul(c, &k.mul(&k.pow(s, (self.degree - i) as u128), &k.pow(t, i as u128)));
            acc = k.add(&acc, &term);
        }
        acc
    }

    pub fn format<F: Field<Elem = E>>(&self, k: &F) -> String {
        let mut terms = Vec::new();
        for (i, c) in self.coefficients.iter().enumerate() {
            if k.is_zero(c) {
                continue;
            }
            let mut parts = Vec::new();
            if !k.is_one(c) {
                parts.push(k.format(c));
            }
            for (v, e) in [("s", self.degree - i), ("t", i)] {
                match e {
                    0 => {}
                    1 => parts.push(v.to_string()),
                    _ => parts.push(format!("{v}^{e}")),
                }
            }
            if parts.is_empty() {
                parts.push("1".into());
            }
            terms.push(parts.join("*"));
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }
}

/// Number of distinct roots over the closure and their multiplicities.
pub fn distinct_root_count<F: Field>(k: &F, form: &BinaryForm<F::Elem>) -> Result<RootProfile> {
    if form.is_zero(k) {
        return Err(Error::ZeroForm);
    }
    k.check_separable(form.degree)?;
    let f = form.affine_t(k);
    let deg_f = f.len() - 1;
    let at_infinity = form.degree - deg_f;
    let mut profile: Vec<usize> = Vec::new();
    for (m, part) in upoly::squarefree_decomposition(k, &f) {
        for _ in 0..part.len() - 1 {
            profile.push(m);
        }
    }
    let g = upoly::gcd(k, &f, &upoly::derivative(k, &f));
    let mut count = deg_f - (g.len() - 1);
    if at_infinity > 0 {
        count += 1;
        profile.push(at_infinity);
    }
    profile.sort_by(|a, b| b.cmp(a));
    debug_assert_eq!(profile.len(), count);
    Ok(RootProfile { count, profile })
}

/// Multiplicity of the point `(s0:t0)` as a root.
pub fn vanishing_order<F: Field>(k: &F, form: &BinaryForm<F::Elem>, pt: (&F::Elem, &F::Elem)) -> Result<usize> {
    if form.is_zero(k) {
        return Err(Error::ZeroForm);
    }
    let (s0, t0) = pt;
    if k.is_zero(s0) {
        // (0:1): order of vanishing of s
        let f = form.affine_t(k);
        return Ok(form.degree - (f.len() - 1));
    }
    // root t = t0/s0 of the s = 1 chart
    let a = k.div(t0, s0).unwrap();
    let mut f = form.affine_t(k);
    let lin = upoly::linear(k, &a);
    let mut m = 0;
    while !f.is_empty() {
        let (q, r) = upoly::divrem(k, &f, &lin);
        if !r.is_empty() {
            break;
        }
        f = q;
        m += 1;
    }
    Ok(m)
}

/// Distinct roots `(s:t)` in the base field; `(1:t)` first, then `(0:1)`.
pub fn rational_roots<F: Field>(k: &F, form: &BinaryForm<F::Elem>) -> Vec<[F::Elem; 2]> {
    if form.is_zero(k) {
        return Vec::new();
    }
    let f = form.affine_t(k);
    let mut out: Vec<[F::Elem; 2]> = upoly::roots(k, &f).into_iter().map(|t| [k.one(), t]).collect();
    if f.len() - 1 < form.degree {
        out.push([k.zero(), k.one()]);
    }
    out
}

/// `form(a S + b T, c S + d T)` as a form in `(S:T)`.
pub fn substitute<F: Field>(k: &F, form: &BinaryForm<F::Elem>, m: [[F::Elem; 2]; 2]) -> BinaryForm<F::Elem> {
    let n = form.degree;
    // with S = 1: s = a + bT, t = c + dT
    let s = upoly::trimmed(k, vec![m[0][0].clone(), m[0][1].clone()]);
    let t = upoly::trimmed(k, vec![m[1][0].clone(), m[1][1].clone()]);
    let mut acc: Vec<F::Elem> = Vec::new();
    for (i, c) in form.coefficients.iter().enumerate() {
        if k.is_zero(c) {
            continue;
        }
        let term = upoly::mul(k, &upoly::pow(k, &s, n - i), &upoly::pow(k, &t, i));
        acc = upoly::add(k, &acc, &upoly::scale(k, &term, c));
    }
    acc.resize(n + 1, k.zero());
    BinaryForm::new(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn substitution_and_rational_roots() {
        let k = crate::exactalg::PrimeField::new(101).unwrap();
        // s t (s - t)
        let f = BinaryForm::new(vec![0, 1, 100, 0]);
        assert_eq!(rational_roots(&k, &f), vec![[1, 0], [1, 1], [0, 1]]);
        // swap s and t
        let g = substitute(&k, &f, [[0, 1], [1, 0]]);
        assert_eq!(g.coefficients, vec![0, 100, 1, 0]);
        for (s, t) in [(3, 5), (7, 2)] {
            assert_eq!(g.eval(&k, &s, &t), f.eval(&k, &t, &s));
        }
    }
    use crate::exactalg::field::{ExtensionField, PrimeField};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn basic_profiles() {
        let k = PrimeField::new(101).unwrap();
        let t2 = BinaryForm::new(vec![0, 0, 1]);
        assert_eq!(distinct_root_count(&k, &t2).unwrap(), RootProfile { count: 1, profile: vec![2] });
        let st = BinaryForm::new(vec![0, 1, 0]);
        assert_eq!(distinct_root_count(&k, &st).unwrap(), RootProfile { count: 2, profile: vec![1, 1] });
        let s3 = BinaryForm::new(vec![1, 0, 0, 0]);
        assert_eq!(distinct_root_count(&k, &s3).unwrap(), RootProfile { count: 1, profile: vec![3] });
    }

    #[test]
    fn guards() {
        let k = PrimeField::new(3).unwrap();
        let f = BinaryForm::new(vec![1, 0, 0, 1]);
        assert!(matches!(distinct_root_count(&k, &f), Err(Error::SmallCharacteristic { .. })));
        let z = BinaryForm::new(vec![0, 0]);
        assert_eq!(distinct_root_count(&k, &z), Err(Error::ZeroForm));
        assert_eq!(vanishing_order(&k, &z, (&1, &0)), Err(Error::ZeroForm));
    }

    #[test]
    fn vanishing_orders() {
        let k = PrimeField::new(101).unwrap();
        let t2 = BinaryForm::new(vec![0, 0, 1]);
        assert_eq!(vanishing_order(&k, &t2, (&1, &0)).unwrap(), 2);
        assert_eq!(vanishing_order(&k, &t2, (&0, &1)).unwrap(), 0);
        let s_minus_t = BinaryForm::new(vec![1, 100]);
        assert_eq!(vanishing_order(&k, &s_minus_t, (&1, &1)).unwrap(), 1);
    }

    #[test]
    fn count_matches_exhaustive_search_in_quadratic_extension() {
        let k = PrimeField::new(101).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let e = ExtensionField::random_of_degree(k, 2, &mut rng).unwrap();
        let elems = e.elements().unwrap();
        for trial in 0..20u64 {
            // products of random linear and quadratic factors keep all roots in F_{p^2}
            let mut r2 = ChaCha8Rng::seed_from_u64(trial);
            use crate::exactalg::field::Field;
            let lin = vec![k.random(&mut r2), 1];
            let quad = vec![k.random(&mut r2), k.random(&mut r2), 1];
            let mut f = upoly::mul(&k, &upoly::mul(&k, &lin, &lin), &quad);
            f = upoly::mul(&k, &f, &[k.random(&mut r2), 1]);
            let form = BinaryForm::new(f.clone());
            let fe: Vec<Vec<u64>> = f.iter().map(|c| e.embed(c)).collect();
            let found = elems.iter().filter(|x| e.is_zero(&upoly::eval(&e, &fe, x))).count();
            assert_eq!(distinct_root_count(&k, &form).unwrap().count, found);
        }
    }
}
