//! Closed-form genus formulas and bounds, each with its hypothesis.
//!
//! Every function returns its value even outside the hypothesis; `valid`
//! records whether the hypothesis holds.

use num_integer::Integer;
use num_rational::Rational64;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormulaValue {
    Exact(Rational64),
    Unspecified,
}

impl FormulaValue {
    pub fn integer(n: i64) -> Self {
        Self::Exact(Rational64::from_integer(n))
    }

    pub fn as_integer(&self) -> Option<i64> {
        match self {
            Self::Exact(r) if r.is_integer() => Some(r.to_integer()),
            _ => None,
        }
    }
}

impl Serialize for FormulaValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Self::Exact(r) if r.is_integer() => s.serialize_i64(r.to_integer()),
            Self::Exact(r) => s.serialize_str(&format!("{}/{}", r.numer(), r.denom())),
            Self::Unspecified => s.serialize_none(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormulaResult {
    pub value: FormulaValue,
    pub valid: bool,
    pub condition: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl FormulaResult {
    fn new(value: FormulaValue, valid: bool, condition: impl Into<String>) -> Self {
        Self { value, valid, condition: condition.into(), notes: Vec::new() }
    }
}

fn require(ok: bool, msg: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidInput(msg.into()))
    }
}

/// Genus of a plane curve of degree `d` whose only singularities are
/// `kappa` ordinary cusps.
pub fn plucker_genus(d: i64, kappa: i64) -> Result<FormulaResult> {
    require(d >= 1 && kappa >= 0, "need d >= 1 and kappa >= 0")?;
    let g = (d - 1) * (d - 2) / 2 - kappa;
    Ok(FormulaResult::new(FormulaValue::integer(g), g >= 0, format!("g = {g} >= 0")))
}

/// Maximal arithmetic genus of a non-degenerate space curve of degree `d`.
pub fn castelnuovo_pi(d: i64) -> Result<FormulaResult> {
    if d < 3 {
        return Err(Error::DTooSmall(d));
    }
    let (m, eps) = (d - 1).div_rem(&2);
    let v = m * (m - 1) + m * eps;
    Ok(FormulaResult::new(FormulaValue::integer(v), true, format!("d = 2*{m}+1+{eps}")))
}

/// Expected dimension of the family of plane curves of degree `d` with
/// `kappa` cusps.
pub fn vdk_dimension(d: i64, kappa: i64) -> Result<FormulaResult> {
    require(d >= 1 && kappa >= 0, "need d >= 1 and kappa >= 0")?;
    let v = (d * d + 3 * d) / 2 - 2 * kappa;
    let (lhs, rhs) = (9 * kappa, d * d + 6 * d + 8);
    Ok(FormulaResult::new(FormulaValue::integer(v), lhs < rhs, format!("9*kappa = {lhs} < d^2+6d+8 = {rhs}")))
}

/// Whether `kappa` cusps impose independent conditions on degree-`d` curves.
pub fn barkats_condition(d: i64, kappa: i64) -> Result<FormulaResult> {
    require(d >= 4 && kappa >= 0, "need d >= 4 and kappa >= 0")?;
    let (lhs, rhs) = (5 * kappa, (d + 2) * (d + 1) / 2 - d - 1);
    let ok = lhs <= rhs;
    Ok(FormulaResult::new(FormulaValue::integer(i64::from(ok)), true, format!("5*kappa = {lhs} <= {rhs}")))
}

/// Upper bound on the number of cusps of a rational cuspidal plane curve
/// obtained from a genus-`g` curve, `(21g + 17) / 2`.
pub fn tono_bound(g: i64) -> Result<FormulaResult> {
    require(g >= 0, "need g >= 0")?;
    let v = Rational64::new(21 * g + 17, 2);
    let mut r = FormulaResult::new(FormulaValue::Exact(v), true, "g >= 0");
    if !v.is_integer() {
        r.notes.push("half-integral".into());
    }
    Ok(r)
}

/// Smallest `g` with `(g+2)(g+1)/2 − g > (21g+17)/2`.
pub fn tono_threshold() -> i64 {
    (0..).find(|g| (g + 2) * (g + 1) - 2 * g > 21 * g + 17).unwrap()
}

/// Largest even `kappa = 2h` with `3h + 2 ≤ C(d1−1, 2)`, or `None`.
pub fn max_admissible_kappa(d1: i64) -> Option<i64> {
    let c = (d1 - 1) * (d1 - 2) / 2;
    (c >= 5).then(|| 2 * ((c - 2) / 3))
}

/// Genus of a curve of bidegree `(d1, d2)` with singularities of total
/// degree `kappa`.
pub fn bb6_genus(d1: i64, d2: i64, kappa: i64) -> Result<FormulaResult> {
    require(d1 >= 1 && d2 >= 1 && kappa >= 0, "need d1, d2 >= 1 and kappa >= 0")?;
    let v = d1 * d2 - d1 - d2 + 1 - kappa;
    let max = max_admissible_kappa(d1);
    let valid = kappa > 0 && max.is_some_and(|m| kappa <= m);
    let mut r = FormulaResult::new(
        FormulaValue::integer(v),
        valid,
        format!("0 < kappa <= {} (largest 2h with 3h+2 <= C(d1-1,2))", max.unwrap_or(0)),
    );
    if kappa == 0 {
        r.notes.push("kappa = 0 is the smooth case".into());
    }
    Ok(r)
}

/// Lower bound for the maximal number of cusps on a degree-`d` plane curve.
pub fn shustin_kappa_lower(d: i64) -> Result<FormulaResult> {
    require(d >= 1, "need d >= 1")?;
    let table = |v: i64| FormulaResult::new(FormulaValue::integer(v), true, "tabulated for d <= 6");
    Ok(match d {
        1 | 2 => table(0),
        3 => FormulaResult::new(FormulaValue::Unspecified, false, "not tabulated for d = 3"),
        4 => table(3),
        5 => table(5),
        6 => table(7),
        _ => {
            let (num, cond) = if d % 4 == 0 || d % 4 == 3 {
                (d * d - 3 * d + 4, "d = 0, 3 mod 4: (d^2-3d+4)/4")
            } else {
                (d * d - 3 * d + 2, "d = 1, 2 mod 4: (d^2-3d+2)/4")
            };
            FormulaResult::new(FormulaValue::Exact(Rational64::new(num, 4)), true, cond)
        }
    })
}

pub fn singularity_degree_a2h(h: u64) -> u64 {
    h
}

/// `(d, p_a, π(d,3))` with `p_a = (d−2)(d−3)/2` for `3 ≤ d ≤ d_max`.
pub fn plane_genus_vs_castelnuovo(d_max: i64) -> Vec<(i64, i64, i64)> {
    (3..=d_max)
        .map(|d| {
            let pi = castelnuovo_pi(d).unwrap().value.as_integer().unwrap();
            (d, (d - 2) * (d - 3) / 2, pi)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(r: Result<FormulaResult>) -> i64 {
        r.unwrap().value.as_integer().unwrap()
    }

    #[test]
    fn castelnuovo_values_and_monotonicity() {
        let v: Vec<i64> = (3..=10).map(|d| int(castelnuovo_pi(d))).collect();
        assert_eq!(v, vec![0, 1, 2, 4, 6, 9, 12, 16]);
        assert!(v.windows(2).all(|w| w[0] <= w[1]));
        assert_eq!(castelnuovo_pi(2), Err(Error::DTooSmall(2)));
    }

    #[test]
    fn plane_genus_exceeds_castelnuovo_from_five() {
        for (d, pa, pi) in plane_genus_vs_castelnuovo(60) {
            assert_eq!(pa > pi, d >= 5, "d = {d}");
        }
    }

    #[test]
    fn cusp_formulas() {
        assert_eq!(int(plucker_genus(4, 1)), 2);
        assert_eq!(int(plucker_genus(5, 5)), 1);
        for d in 1..12 {
            for k in 0..5 {
                assert_eq!(int(plucker_genus(d, k)) + k, int(plucker_genus(d, 0)));
            }
        }
        let r = vdk_dimension(5, 2).unwrap();
        assert_eq!((r.value.as_integer(), r.valid), (Some(16), true));
        let r = vdk_dimension(5, 8).unwrap();
        assert_eq!((r.value.as_integer(), r.valid), (Some(4), false));
        assert_eq!(int(barkats_condition(5, 3)), 1);
        assert_eq!(int(barkats_condition(4, 1)), 1);
        assert_eq!(int(barkats_condition(5, 4)), 0);
    }

    #[test]
    fn tono() {
        assert_eq!(tono_bound(0).unwrap().value, FormulaValue::Exact(Rational64::new(17, 2)));
        assert_eq!(int(tono_bound(1)), 19);
        assert_eq!(tono_threshold(), 21);
    }

    #[test]
    fn bidegree_genus() {
        let r = bb6_genus(16, 16, 2).unwrap();
        assert_eq!((r.value.as_integer(), r.valid), (Some(223), true));
        assert_eq!(int(bb6_genus(4, 4, 2)), 7);
        assert!(!bb6_genus(4, 4, 2).unwrap().valid);
        let r = bb6_genus(5, 7, 0).unwrap();
        assert_eq!(r.value.as_integer(), Some(24));
        assert!(!r.notes.is_empty());
        assert_eq!(max_admissible_kappa(16), Some(2 * 34));
    }

    #[test]
    fn shustin() {
        assert_eq!(int(shustin_kappa_lower(4)), 3);
        assert_eq!(int(shustin_kappa_lower(6)), 7);
        assert_eq!(int(shustin_kappa_lower(8)), 11);
        assert_eq!(shustin_kappa_lower(3).unwrap().value, FormulaValue::Unspecified);
        assert_eq!(singularity_degree_a2h(5), 5);
    }

    #[test]
    fn json_shape() {
        let s = serde_json::to_string(&tono_bound(0).unwrap()).unwrap();
        assert!(s.contains("\"17/2\""));
    }
}
