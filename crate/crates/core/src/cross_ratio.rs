//! The cross-ratio of four points of a line.
//!
//! With `[P, Q]` the 2x2 determinant of representatives of two points of the
//! projective line,
//!
//! ```text
//! (A, B; C, D) = [A, C] [B, D] / ([A, D] [B, C])
//! ```
//!
//! which for proper points `[a:1], [b:1], ...` reduces to
//! `(c - a)/(c - b) * (d - b)/(d - a)`. Every point occurs once above and
//! once below the bar, so rescaling a representative changes nothing.

use std::fmt;

use crate::error::{GeomError, Result};
use crate::homogeneous::{proj_equal_within, PointRp1, PointRp2, ProjPoint};
use crate::linalg::{det2, det3};
use crate::scalar::{norm_f64, Scalar, Tolerance};

/// A field value or the single unsigned infinity.
#[derive(Clone, Debug, PartialEq)]
pub enum ExtendedScalar<S> {
    Finite(S),
    Infinity,
}

impl<S: Scalar> ExtendedScalar<S> {
    pub fn finite(&self) -> Option<&S> {
        match self {
            ExtendedScalar::Finite(v) => Some(v),
            ExtendedScalar::Infinity => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtendedScalar::Infinity)
    }

    pub fn approx_eq(&self, other: &Self, tol: Tolerance) -> bool {
        match (self, other) {
            (ExtendedScalar::Finite(a), ExtendedScalar::Finite(b)) => a.approx_eq(b, tol),
            (ExtendedScalar::Infinity, ExtendedScalar::Infinity) => true,
            _ => false,
        }
    }

    /// `num / den`, `Infinity` when the denominator vanishes.
    fn ratio(num: S, den: S, den_scale: f64, tol: Tolerance) -> Self {
        if den.is_zero() || den.is_negligible(den_scale, tol) {
            ExtendedScalar::Infinity
        } else {
            ExtendedScalar::Finite(num / den)
        }
    }
}

impl<S: Scalar> fmt::Display for ExtendedScalar<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedScalar::Finite(v) => write!(f, "{}", v.to_text()),
            ExtendedScalar::Infinity => write!(f, "inf"),
        }
    }
}

fn bracket<S: Scalar>(p: &PointRp1<S>, q: &PointRp1<S>) -> S {
    let (a, b) = (p.coords(), q.coords());
    det2(&a[0], &a[1], &b[0], &b[1])
}

fn ensure_distinct<S: Scalar, const N: usize>(
    points: [&ProjPoint<S, N>; 4],
    tol: Tolerance,
) -> Result<()> {
    for i in 0..4 {
        for j in i + 1..4 {
            if proj_equal_within(points[i], points[j], tol) {
                return Err(GeomError::NotDistinct);
            }
        }
    }
    Ok(())
}

/// Determinant form on the projective line. Improper points are accepted.
pub fn cross_ratio_rp1<S: Scalar>(
    a: &PointRp1<S>,
    b: &PointRp1<S>,
    c: &PointRp1<S>,
    d: &PointRp1<S>,
) -> Result<ExtendedScalar<S>> {
    cross_ratio_rp1_within(a, b, c, d, Tolerance::default())
}

pub fn cross_ratio_rp1_within<S: Scalar>(
    a: &PointRp1<S>,
    b: &PointRp1<S>,
    c: &PointRp1<S>,
    d: &PointRp1<S>,
    tol: Tolerance,
) -> Result<ExtendedScalar<S>> {
    ensure_distinct([a, b, c, d], tol)?;
    let num = bracket(a, c) * bracket(b, d);
    let den = bracket(a, d) * bracket(b, c);
    let scale = if S::EXACT {
        0.0
    } else {
        [a, b, c, d]
            .iter()
            .map(|p| norm_f64(p.coords()))
            .product::<f64>()
    };
    Ok(ExtendedScalar::ratio(num, den, scale, tol))
}

/// Affine shortcut `(c - a)/(c - b) * (d - b)/(d - a)` for four distinct
/// values of the affine chart.
pub fn cross_ratio_affine<S: Scalar>(a: &S, b: &S, c: &S, d: &S) -> Result<ExtendedScalar<S>> {
    cross_ratio_affine_within(a, b, c, d, Tolerance::default())
}

pub fn cross_ratio_affine_within<S: Scalar>(
    a: &S,
    b: &S,
    c: &S,
    d: &S,
    tol: Tolerance,
) -> Result<ExtendedScalar<S>> {
    let values = [a, b, c, d];
    for i in 0..4 {
        for j in i + 1..4 {
            if values[i].approx_eq(values[j], tol) {
                return Err(GeomError::NotDistinct);
            }
        }
    }
    let num = (c.clone() - a.clone()) * (d.clone() - b.clone());
    let den = (c.clone() - b.clone()) * (d.clone() - a.clone());
    let scale = if S::EXACT {
        0.0
    } else {
        values
            .iter()
            .map(|v| v.to_f64().abs())
            .fold(1.0, f64::max)
            .powi(2)
    };
    Ok(ExtendedScalar::ratio(num, den, scale, tol))
}

/// True iff the three points lie on a common line (`det[P Q R] = 0`).
pub fn is_collinear<S: Scalar>(p: &PointRp2<S>, q: &PointRp2<S>, r: &PointRp2<S>) -> bool {
    is_collinear_within(p, q, r, Tolerance::default())
}

pub fn is_collinear_within<S: Scalar>(
    p: &PointRp2<S>,
    q: &PointRp2<S>,
    r: &PointRp2<S>,
    tol: Tolerance,
) -> bool {
    let scale = if S::EXACT {
        0.0
    } else {
        norm_f64(p.coords()) * norm_f64(q.coords()) * norm_f64(r.coords())
    };
    det3(p.coords(), q.coords(), r.coords()).is_negligible(scale, tol)
}

/// Coordinates `[alpha : beta]` of `x = alpha * b1 + beta * b2` in the pencil
/// spanned by `b1, b2`.
///
/// The 2x2 system is solved on the pair of coordinate rows with the largest
/// pivot `|b1_i b2_j - b1_j b2_i|`; Cramer numerators are returned without
/// dividing by the pivot, which only rescales the representative.
pub fn pencil_coordinates<S: Scalar>(
    b1: &PointRp2<S>,
    b2: &PointRp2<S>,
    x: &PointRp2<S>,
) -> Result<PointRp1<S>> {
    let (u, v, w) = (b1.coords(), b2.coords(), x.coords());
    let mut best: Option<(usize, usize, S)> = None;
    for i in 0..3 {
        for j in i + 1..3 {
            let pivot = det2(&u[i], &v[i], &u[j], &v[j]).abs();
            if best.as_ref().is_none_or(|(_, _, p)| pivot > *p) {
                best = Some((i, j, pivot));
            }
        }
    }
    let (i, j, _) = best.expect("three coordinate rows");
    let alpha = det2(&w[i], &v[i], &w[j], &v[j]);
    let beta = det2(&u[i], &w[i], &u[j], &w[j]);
    ProjPoint::from_representative([alpha, beta]).map_err(|_| GeomError::IdenticalPoints)
}

/// Cross-ratio of four distinct collinear points of the plane, computed on
/// the pencil with basis `(p1, p2)`.
pub fn cross_ratio_collinear<S: Scalar>(
    p1: &PointRp2<S>,
    p2: &PointRp2<S>,
    p3: &PointRp2<S>,
    p4: &PointRp2<S>,
) -> Result<ExtendedScalar<S>> {
    cross_ratio_collinear_within(p1, p2, p3, p4, Tolerance::default())
}

pub fn cross_ratio_collinear_within<S: Scalar>(
    p1: &PointRp2<S>,
    p2: &PointRp2<S>,
    p3: &PointRp2<S>,
    p4: &PointRp2<S>,
    tol: Tolerance,
) -> Result<ExtendedScalar<S>> {
    ensure_distinct([p1, p2, p3, p4], tol)?;
    if !is_collinear_within(p1, p2, p3, tol) || !is_collinear_within(p1, p2, p4, tol) {
        return Err(GeomError::NotCollinear);
    }
    let params = [p1, p2, p3, p4]
        .map(|p| pencil_coordinates(p1, p2, p))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    cross_ratio_rp1_within(&params[0], &params[1], &params[2], &params[3], tol)
}
