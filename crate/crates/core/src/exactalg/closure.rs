//! Dynamic evaluation over `K[u]/(h)` for squarefree `h`.
//!
//! The quotient ring is a product of fields, one per irreducible factor of
//! `h`, i.e. one per Galois orbit of roots of `h` in the closure. Whenever a
//! computation needs to know whether an element is invertible, `h` is split
//! along the gcd and both halves continue separately. This answers
//! questions such as "do f(α, v) and g(α, v) share a root for some root α
//! of h" without ever constructing the splitting field.

use super::bipoly::BiPoly;
use super::field::Field;
use super::upoly::{self, Poly};

/// One branch of a split computation: a factor `h` of the modulus and the
/// value computed over `K[u]/(h)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Branch<E, T> {
    pub modulus: Poly<E>,
    pub value: T,
}

/// Status of an element of `K[u]/(h)`.
enum Status<E> {
    Zero,
    Unit,
    Split(Poly<E>, Poly<E>),
}

fn classify<F: Field>(k: &F, h: &[F::Elem], c: &[F::Elem]) -> Status<F::Elem> {
    let c = upoly::rem(k, c, h);
    if c.is_empty() {
        return Status::Zero;
    }
    let d = upoly::gcd(k, h, &c);
    if d.len() == 1 {
        Status::Unit
    } else if d.len() == h.len() {
        Status::Zero
    } else {
        let rest = upoly::div_exact(k, h, &d).unwrap();
        Status::Split(d, rest)
    }
}

/// Splits `h` by where `c` vanishes: `(zero part, unit part)`, either may
/// be constant.
pub fn split_by_vanishing<F: Field>(k: &F, h: &[F::Elem], c: &[F::Elem]) -> (Poly<F::Elem>, Poly<F::Elem>) {
    let c = upoly::rem(k, c, h);
    if c.is_empty() {
        return (upoly::monic(k, h), vec![k.one()]);
    }
    // the zero part is the largest divisor of h all of whose roots are roots of c
    let mut zero = upoly::gcd(k, h, &c);
    let mut unit = upoly::div_exact(k, &upoly::monic(k, h), &zero).unwrap();
    // h is squarefree, so one gcd suffices
    unit = upoly::monic(k, &unit);
    zero = upoly::monic(k, &zero);
    (zero, unit)
}

/// Writes `a` (reduced mod `h`) with a unit leading coefficient on each
/// branch; the zero polynomial is a valid value.
fn normalize<F: Field>(k: &F, h: &[F::Elem], a: &BiPoly<F::Elem>) -> Vec<Branch<F::Elem, BiPoly<F::Elem>>> {
    let mut a = a.rem_u(k, h);
    loop {
        let Some(lead) = a.leading_v() else {
            return vec![Branch { modulus: h.to_vec(), value: a }];
        };
        match classify(k, h, lead) {
            Status::Unit => return vec![Branch { modulus: h.to_vec(), value: a }],
            Status::Zero => {
                a.rows.pop();
                a = BiPoly::from_rows(k, std::mem::take(&mut a.rows));
            }
            Status::Split(d1, d2) => {
                let mut out = normalize(k, &d1, &a);
                out.extend(normalize(k, &d2, &a));
                return out;
            }
        }
    }
}

fn make_monic<F: Field>(k: &F, h: &[F::Elem], a: &BiPoly<F::Elem>) -> BiPoly<F::Elem> {
    match a.leading_v() {
        None => a.clone(),
        Some(l) => {
            let inv = upoly::inv_mod(k, l, h).expect("leading coefficient is a unit");
            a.mul_u(k, &inv).rem_u(k, h)
        }
    }
}

/// `a mod b` in `A[v]` where `b` has unit leading coefficient.
pub fn rem_v<F: Field>(k: &F, h: &[F::Elem], a: &BiPoly<F::Elem>, b: &BiPoly<F::Elem>) -> BiPoly<F::Elem> {
    let db = b.deg_v().unwrap();
    let inv = upoly::inv_mod(k, b.leading_v().unwrap(), h).unwrap();
    let mut r = a.rem_u(k, h);
    while let Some(dr) = r.deg_v() {
        if dr < db {
            break;
        }
        let c = upoly::rem(k, &upoly::mul(k, &r.rows[dr], &inv), h);
        let mut rows = std::mem::take(&mut r.rows);
        for (j, bj) in b.rows.iter().enumerate() {
            let t = upoly::mul(k, &c, bj);
            rows[dr - db + j] = upoly::rem(k, &upoly::sub(k, &rows[dr - db + j], &t), h);
        }
        // the leading term cancels exactly
        rows[dr] = Vec::new();
        r = BiPoly::from_rows(k, rows);
    }
    r
}

/// Monic gcd of two polynomials of `A[v]`, split into branches.
pub fn gcd2<F: Field>(
    k: &F,
    h: &[F::Elem],
    a: &BiPoly<F::Elem>,
    b: &BiPoly<F::Elem>,
) -> Vec<Branch<F::Elem, BiPoly<F::Elem>>> {
    let mut out = Vec::new();
    for Branch { modulus: h1, value: a1 } in normalize(k, h, a) {
        for Branch { modulus: h2, value: b2 } in normalize(k, &h1, b) {
            let a2 = a1.rem_u(k, &h2);
            if b2.is_zero() {
                out.push(Branch { value: make_monic(k, &h2, &a2), modulus: h2 });
                continue;
            }
            if a2.is_zero() {
                out.push(Branch { value: make_monic(k, &h2, &b2), modulus: h2 });
                continue;
            }
            let (big, small) = if a2.deg_v() >= b2.deg_v() { (a2, b2) } else { (b2, a2) };
            let r = rem_v(k, &h2, &big, &small);
            out.extend(gcd2(k, &h2, &small, &r));
        }
    }
    out
}

/// Monic gcd of several polynomials of `A[v]`, split into branches.
pub fn gcd_many<F: Field>(k: &F, h: &[F::Elem], polys: &[BiPoly<F::Elem>]) -> Vec<Branch<F::Elem, BiPoly<F::Elem>>> {
    let mut branches = vec![Branch { modulus: upoly::monic(k, h), value: BiPoly::zero() }];
    for p in polys {
        let mut next = Vec::new();
        for Branch { modulus, value } in branches {
            if modulus.len() <= 1 {
                continue;
            }
            next.extend(gcd2(k, &modulus, &value, p));
        }
        branches = next;
    }
    branches.into_iter().filter(|b| b.modulus.len() > 1).collect()
}

/// Branches of `gcd_many` on which the gcd has positive degree in `v`, i.e.
/// the roots of `h` over which the polynomials share a root in `v`.
pub fn common_root_branches<F: Field>(
    k: &F,
    h: &[F::Elem],
    polys: &[BiPoly<F::Elem>],
) -> Vec<Branch<F::Elem, BiPoly<F::Elem>>> {
    gcd_many(k, h, polys).into_iter().filter(|b| b.value.deg_v().unwrap_or(0) > 0).collect()
}

/// Total number of (α, β) pairs over the closure encoded by a branch list:
/// Σ deg h_i · deg_v g_i. Exact when each g_i is squarefree over every root.
pub fn branch_point_count<E: Clone + PartialEq>(branches: &[Branch<E, BiPoly<E>>]) -> usize {
    branches.iter().map(|b| (b.modulus.len() - 1) * b.value.deg_v().unwrap_or(0)).sum()
}

/// Root data of a fiber polynomial over one branch.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FiberRoots {
    /// Actual degree in `v` over the branch, `None` if it vanishes there.
    pub degree: Option<usize>,
    /// Number of distinct roots in `v`.
    pub distinct: usize,
}

/// Splits `h` so that on every branch the specialization of `g` has a
/// constant degree and a constant number of distinct roots.
pub fn distinct_roots_per_branch<F: Field>(
    k: &F,
    h: &[F::Elem],
    g: &BiPoly<F::Elem>,
) -> Vec<Branch<F::Elem, FiberRoots>> {
    let mut out = Vec::new();
    for Branch { modulus, value } in normalize(k, h, g) {
        let Some(dg) = value.deg_v() else {
            out.push(Branch { modulus, value: FiberRoots { degree: None, distinct: 0 } });
            continue;
        };
        let dv = value.deriv_v(k);
        for br in gcd2(k, &modulus, &value, &dv) {
            let dgcd = br.value.deg_v().unwrap_or(0);
            out.push(Branch { modulus: br.modulus, value: FiberRoots { degree: Some(dg), distinct: dg - dgcd } });
        }
    }
    out
}
