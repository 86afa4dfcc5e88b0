//! Exact field arithmetic.
//!
//! A [`Field`] is an arithmetic context: elements are plain values and every
//! operation goes through the context, which keeps element types small
//! (`u64` for prime fields) while still allowing runtime moduli.
//!
//! Three kinds of fields are provided: [`PrimeField`] (𝔽_p), [`Rationals`]
//! (ℚ with arbitrary precision) and [`ExtensionField`] (a finite field
//! extended by an irreducible polynomial).

use std::fmt::{self, Debug};
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, RngCore, SeedableRng};
use serde::{Deserialize, Serialize};

use super::upoly;
use crate::error::{Error, Result};

pub trait Field: Clone + Debug {
    type Elem: Clone + Debug + PartialEq + Eq + Hash + Ord;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn from_rational(&self, q: &BigRational) -> Result<Self::Elem>;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// 0 for ℚ.
    fn characteristic(&self) -> u64;

    /// Number of elements, `None` for infinite fields or sizes beyond `u128`.
    fn order(&self) -> Option<u128>;

    /// All elements of a finite field in canonical order.
    fn elements(&self) -> Option<Vec<Self::Elem>>;

    fn random(&self, rng: &mut dyn RngCore) -> Self::Elem;

    fn format(&self, a: &Self::Elem) -> String;

    /// The element as a rational number, for fields embedded in ℚ.
    fn to_rational(&self, _a: &Self::Elem) -> Option<BigRational> {
        None
    }

    fn name(&self) -> String;

    /// Inverse Frobenius. Only meaningful in positive characteristic.
    fn pth_root(&self, a: &Self::Elem) -> Self::Elem;

    /// Some square root of `a`, if one exists in the field.
    fn sqrt(&self, a: &Self::Elem) -> Option<Self::Elem> {
        finite_sqrt(self, a)
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|ib| self.mul(a, &ib))
    }

    fn pow(&self, a: &Self::Elem, mut e: u128) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Whether the characteristic is 0 or exceeds `degree`.
    fn separable_up_to(&self, degree: usize) -> bool {
        let p = self.characteristic();
        p == 0 || p > degree as u64
    }

    fn check_separable(&self, degree: usize) -> Result<()> {
        if self.separable_up_to(degree) {
            Ok(())
        } else {
            Err(Error::SmallCharacteristic { p: self.characteristic(), degree })
        }
    }
}

/// Tonelli-Shanks in a finite field of odd order.
fn finite_sqrt<F: Field>(k: &F, a: &F::Elem) -> Option<F::Elem> {
    if k.is_zero(a) {
        return Some(k.zero());
    }
    let q = k.order()?;
    if q % 2 == 0 {
        // characteristic 2: every element is a square, a^(q/2) squared is a^q = a
        return Some(k.pow(a, q / 2));
    }
    if !k.is_one(&k.pow(a, (q - 1) / 2)) {
        return None;
    }
    let mut s = 0u32;
    let mut t = q - 1;
    while t % 2 == 0 {
        t /= 2;
        s += 1;
    }
    // deterministic non-residue search
    let mut z = k.one();
    let mut n = 1i64;
    loop {
        if !k.is_zero(&z) && !k.is_one(&k.pow(&z, (q - 1) / 2)) {
            break;
        }
        n += 1;
        z = candidate_element(k, n);
    }
    let mut m = s;
    let mut c = k.pow(&z, t);
    let mut r = k.pow(a, t.div_ceil(2));
    let mut tt = k.pow(a, t);
    while !k.is_one(&tt) {
        let mut i = 0;
        let mut t2 = tt.clone();
        while !k.is_one(&t2) {
            t2 = k.mul(&t2, &t2);
            i += 1;
        }
        let mut b = c.clone();
        for _ in 0..(m - i - 1) {
            b = k.mul(&b, &b);
        }
        r = k.mul(&r, &b);
        c = k.mul(&b, &b);
        tt = k.mul(&tt, &c);
        m = i;
    }
    Some(r)
}

/// The `n`-th element of a simple enumeration that eventually covers
/// the whole field (used for non-residue searches).
fn candidate_element<F: Field>(k: &F, n: i64) -> F::Elem {
    k.random(&mut rand_chacha::ChaCha8Rng::seed_from_u64(n as u64))
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for sp in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(sp) {
            return n == sp;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// The prime field 𝔽_p. Elements are residues in `0..p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) || p >= (1 << 62) {
            return Err(Error::NotPrime(p));
        }
        Ok(Self { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn elem(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn from_i64(&self, n: i64) -> u64 {
        (n as i128).rem_euclid(self.p as i128) as u64
    }
    fn from_rational(&self, q: &BigRational) -> Result<u64> {
        let p = BigInt::from(self.p);
        let num = q.numer().mod_floor(&p).to_u64().unwrap_or(0);
        let den = q.denom().mod_floor(&p).to_u64().unwrap_or(0);
        if den == 0 {
            return Err(Error::NotRepresentable(q.to_string()));
        }
        Ok(mulmod(num, powmod(den, self.p - 2, self.p), self.p))
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mulmod(*a, *b, self.p)
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            None
        } else {
            Some(powmod(*a, self.p - 2, self.p))
        }
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn order(&self) -> Option<u128> {
        Some(self.p as u128)
    }
    fn elements(&self) -> Option<Vec<u64>> {
        Some((0..self.p).collect())
    }
    fn random(&self, rng: &mut dyn RngCore) -> u64 {
        rng.gen_range(0..self.p)
    }
    fn format(&self, a: &u64) -> String {
        a.to_string()
    }
    fn name(&self) -> String {
        format!("p:{}", self.p)
    }
    fn pth_root(&self, a: &u64) -> u64 {
        *a
    }
}

/// ℚ with arbitrary-precision numerators and denominators.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

/// Half-width of the integer range used by [`Rationals::random`].
const RATIONAL_SAMPLE_RANGE: i64 = 9;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn from_rational(&self, q: &BigRational) -> Result<BigRational> {
        Ok(q.clone())
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn order(&self) -> Option<u128> {
        None
    }
    fn elements(&self) -> Option<Vec<BigRational>> {
        None
    }
    fn random(&self, rng: &mut dyn RngCore) -> BigRational {
        self.from_i64(rng.gen_range(-RATIONAL_SAMPLE_RANGE..=RATIONAL_SAMPLE_RANGE))
    }
    fn format(&self, a: &BigRational) -> String {
        a.to_string()
    }
    fn to_rational(&self, a: &BigRational) -> Option<BigRational> {
        Some(a.clone())
    }
    fn name(&self) -> String {
        "q".to_string()
    }
    fn pth_root(&self, a: &BigRational) -> BigRational {
        a.clone()
    }
    fn sqrt(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_negative() {
            return None;
        }
        let n = exact_isqrt(a.numer())?;
        let d = exact_isqrt(a.denom())?;
        Some(BigRational::new(n, d))
    }
}

fn exact_isqrt(n: &BigInt) -> Option<BigInt> {
    if n.sign() == Sign::Minus {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// A finite field extended by a monic irreducible polynomial.
///
/// Elements are coefficient vectors of length `degree()` in the power basis
/// `1, t, …, t^(k-1)`.
#[derive(Clone, Debug)]
pub struct ExtensionField<F: Field> {
    base: F,
    minpoly: Vec<F::Elem>,
    order: Option<u128>,
}

impl<F: Field> ExtensionField<F> {
    /// Builds `base[t]/(minpoly)`, checking that `minpoly` is monic and
    /// irreducible (Rabin's test). Only finite bases are supported.
    pub fn new(base: F, minpoly: Vec<F::Elem>) -> Result<Self> {
        let mut minpoly = minpoly;
        upoly::trim(&base, &mut minpoly);
        let k = match upoly::degree(&minpoly) {
            Some(d) if d >= 1 => d,
            _ => return Err(Error::InvalidField("minimal polynomial must have degree >= 1".into())),
        };
        if !base.is_one(minpoly.last().unwrap()) {
            return Err(Error::InvalidField("minimal polynomial must be monic".into()));
        }
        let q = base
            .order()
            .ok_or_else(|| Error::InvalidField("extensions are only supported over finite fields".into()))?;
        if !upoly::is_irreducible_finite(&base, &minpoly, q) {
            return Err(Error::InvalidField("minimal polynomial is reducible".into()));
        }
        let order = q.checked_pow(k as u32);
        Ok(Self { base, minpoly, order })
    }

    /// A random monic irreducible polynomial of degree `k`, then the field.
    pub fn random_of_degree(base: F, k: usize, rng: &mut dyn RngCore) -> Result<Self> {
        let q = base
            .order()
            .ok_or_else(|| Error::InvalidField("extensions are only supported over finite fields".into()))?;
        if k == 0 {
            return Err(Error::InvalidField("extension degree must be positive".into()));
        }
        loop {
            let mut m: Vec<F::Elem> = (0..k).map(|_| base.random(rng)).collect();
            m.push(base.one());
            if upoly::is_irreducible_finite(&base, &m, q) {
                return Self::new(base, m);
            }
        }
    }

    pub fn base(&self) -> &F {
        &self.base
    }

    pub fn degree(&self) -> usize {
        self.minpoly.len() - 1
    }

    pub fn minpoly(&self) -> &[F::Elem] {
        &self.minpoly
    }

    /// Embeds a base-field element.
    pub fn embed(&self, a: &F::Elem) -> Vec<F::Elem> {
        let mut v = vec![self.base.zero(); self.degree()];
        v[0] = a.clone();
        v
    }

    /// The class of `t`.
    pub fn generator(&self) -> Vec<F::Elem> {
        let mut v = vec![self.base.zero(); self.degree()];
        if self.degree() == 1 {
            // t ≡ -m0
            v[0] = self.base.neg(&self.minpoly[0]);
        } else {
            v[1] = self.base.one();
        }
        v
    }

    fn pad(&self, mut v: Vec<F::Elem>) -> Vec<F::Elem> {
        v.resize(self.degree(), self.base.zero());
        v
    }
}

impl<F: Field> Field for ExtensionField<F> {
    type Elem = Vec<F::Elem>;

    fn zero(&self) -> Self::Elem {
        vec![self.base.zero(); self.degree()]
    }
    fn one(&self) -> Self::Elem {
        self.embed(&self.base.one())
    }
    fn from_i64(&self, n: i64) -> Self::Elem {
        self.embed(&self.base.from_i64(n))
    }
    fn from_rational(&self, q: &BigRational) -> Result<Self::Elem> {
        Ok(self.embed(&self.base.from_rational(q)?))
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.iter().zip(b).map(|(x, y)| self.base.add(x, y)).collect()
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.iter().zip(b).map(|(x, y)| self.base.sub(x, y)).collect()
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let prod = upoly::mul(&self.base, a, b);
        self.pad(upoly::rem(&self.base, &prod, &self.minpoly))
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.iter().map(|x| self.base.neg(x)).collect()
    }
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        let mut a = a.clone();
        upoly::trim(&self.base, &mut a);
        if a.is_empty() {
            return None;
        }
        let (g, s, _) = upoly::ext_gcd(&self.base, &a, &self.minpoly);
        // g is monic; irreducibility makes it 1
        debug_assert_eq!(g.len(), 1);
        Some(self.pad(s))
    }
    fn characteristic(&self) -> u64 {
        self.base.characteristic()
    }
    fn order(&self) -> Option<u128> {
        self.order
    }
    fn elements(&self) -> Option<Vec<Self::Elem>> {
        let base_elems = self.base.elements()?;
        let total = self.order?;
        if total > 1 << 24 {
            return None;
        }
        let mut out = vec![Vec::new()];
        for _ in 0..self.degree() {
            let mut next = Vec::with_capacity(out.len() * base_elems.len());
            for prefix in &out {
                for e in &base_elems {
                    let mut v = prefix.clone();
                    v.push(e.clone());
                    next.push(v);
                }
            }
            out = next;
        }
        Some(out)
    }
    fn random(&self, rng: &mut dyn RngCore) -> Self::Elem {
        (0..self.degree()).map(|_| self.base.random(rng)).collect()
    }
    fn format(&self, a: &Self::Elem) -> String {
        let mut terms = Vec::new();
        for (i, c) in a.iter().enumerate() {
            if self.base.is_zero(c) {
                continue;
            }
            let c = self.base.format(c);
            terms.push(match i {
                0 => c,
                1 => format!("{c}*t"),
                _ => format!("{c}*t^{i}"),
            });
        }
        if terms.is_empty() {
            "0".into()
        } else {
            format!("[{}]", terms.join("+"))
        }
    }
    fn name(&self) -> String {
        let m: Vec<String> = self.minpoly.iter().map(|c| self.base.format(c)).collect();
        format!("{}[t]/({})", self.base.name(), m.join(","))
    }
    fn pth_root(&self, a: &Self::Elem) -> Self::Elem {
        // a^(q/p) inverts Frobenius on a field of order q
        match self.order {
            Some(q) => self.pow(a, q / self.characteristic() as u128),
            None => a.clone(),
        }
    }
}

/// Textual field selector: `q` or `p:<prime>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "q" || s == "Q" {
            return Ok(FieldSpec::Rationals);
        }
        if let Some(rest) = s.strip_prefix("p:") {
            let p: u64 = rest.trim().parse().map_err(|_| Error::Parse(format!("bad prime in field spec '{s}'")))?;
            if !is_prime(p) {
                return Err(Error::NotPrime(p));
            }
            return Ok(FieldSpec::Prime(p));
        }
        Err(Error::Parse(format!("field spec must be 'q' or 'p:<prime>', got '{s}'")))
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "q"),
            FieldSpec::Prime(p) => write!(f, "p:{p}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn primality() {
        let small: Vec<u64> = (0..50).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]);
        assert!(is_prime(1_000_000_007));
        assert!(!is_prime(1_000_000_007 * 3));
    }

    #[test]
    fn prime_field_inverse_and_rational_import() {
        let k = PrimeField::new(101).unwrap();
        for a in 1..101 {
            assert_eq!(k.mul(&a, &k.inv(&a).unwrap()), 1);
        }
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(k.from_rational(&half).unwrap(), 51);
        let bad = BigRational::new(1.into(), 101.into());
        assert!(k.from_rational(&bad).is_err());
        assert!(PrimeField::new(100).is_err());
    }

    #[test]
    fn square_roots_prime_field() {
        for p in [3u64, 5, 7, 13, 17, 97, 101] {
            let k = PrimeField::new(p).unwrap();
            for a in 0..p {
                let sq = k.mul(&a, &a);
                let r = k.sqrt(&sq).expect("square has a root");
                assert_eq!(k.mul(&r, &r), sq);
            }
            let squares: std::collections::HashSet<u64> = (0..p).map(|a| k.mul(&a, &a)).collect();
            for a in 0..p {
                assert_eq!(k.sqrt(&a).is_some(), squares.contains(&a));
            }
        }
    }

    #[test]
    fn extension_field_arithmetic() {
        let k = PrimeField::new(7).unwrap();
        // t^2 + 1 is irreducible mod 7
        let e = ExtensionField::new(k, vec![1, 0, 1]).unwrap();
        let t = e.generator();
        assert_eq!(e.mul(&t, &t), e.from_i64(-1));
        let all = e.elements().unwrap();
        assert_eq!(all.len(), 49);
        for a in all.iter().filter(|a| !e.is_zero(a)) {
            assert_eq!(e.mul(a, &e.inv(a).unwrap()), e.one());
        }
        // x^2 - 3 has no root in F_7 but does in F_49
        let three = e.from_i64(3);
        assert!(k.sqrt(&3).is_none());
        let r = e.sqrt(&three).unwrap();
        assert_eq!(e.mul(&r, &r), three);
        // reducible modulus rejected
        assert!(ExtensionField::new(k, vec![6, 0, 1]).is_err());
    }

    #[test]
    fn random_extension_has_requested_order() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let e = ExtensionField::random_of_degree(PrimeField::new(5).unwrap(), 3, &mut rng).unwrap();
        assert_eq!(e.order(), Some(125));
        let a = e.random(&mut rng);
        assert_eq!(e.pow(&a, 125), a);
        assert_eq!(e.pow(&e.pth_root(&a), 5), a);
    }

    #[test]
    fn rational_sqrt() {
        let q = Rationals;
        let x = BigRational::new(9.into(), 4.into());
        assert_eq!(q.sqrt(&x), Some(BigRational::new(3.into(), 2.into())));
        assert_eq!(q.sqrt(&q.from_i64(2)), None);
        assert_eq!(q.sqrt(&q.from_i64(-4)), None);
    }

    #[test]
    fn field_spec_parsing() {
        assert_eq!("q".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
        assert_eq!("p:101".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(101));
        assert!("p:100".parse::<FieldSpec>().is_err());
        assert!("z".parse::<FieldSpec>().is_err());
        assert_eq!(FieldSpec::Prime(7).to_string(), "p:7");
    }
}
