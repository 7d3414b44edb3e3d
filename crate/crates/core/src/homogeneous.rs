//! Homogeneous coordinates, points and lines of the projective line and
//! plane, and incidence.
//!
//! A point of RP^n is the class of a nonzero vector of R^(n+1) under
//! `v ~ k v` (`k != 0`). Here `N = n + 1` is the length of the coordinate
//! array, so `ProjPoint<S, 2>` lives on the projective line and
//! `ProjPoint<S, 3>` on the projective plane.
//!
//! Canonical representatives have their last nonzero coordinate equal to 1,
//! so proper points read `[a : 1]` or `[x : y : 1]`.

use std::fmt;

use crate::error::{GeomError, Result};
use crate::linalg::{cross, det2, dot};
use crate::scalar::{norm_f64, Scalar, Tolerance};

/// A nonzero coordinate vector, taken up to nonzero scaling.
#[derive(Clone, Debug)]
pub struct HomCoords<S, const N: usize> {
    coords: [S; N],
}

impl<S: Scalar, const N: usize> HomCoords<S, N> {
    /// Wraps `coords` as given. Fails on the zero vector.
    pub fn new(coords: [S; N]) -> Result<Self> {
        if coords.iter().all(Scalar::is_zero) {
            return Err(GeomError::ZeroVector);
        }
        Ok(HomCoords { coords })
    }

    pub fn coords(&self) -> &[S; N] {
        &self.coords
    }

    pub fn into_coords(self) -> [S; N] {
        self.coords
    }

    /// Index of the coordinate used as the normalizing pivot: the last
    /// nonzero one (for floats, the last one not negligible against the
    /// largest coordinate).
    fn pivot(&self) -> usize {
        let tol = Tolerance::default();
        let largest = self
            .coords
            .iter()
            .map(|c| c.to_f64().abs())
            .fold(0.0, f64::max);
        self.coords
            .iter()
            .rposition(|c| {
                if S::EXACT {
                    !c.is_zero()
                } else {
                    !c.is_zero() && !c.is_negligible(largest, tol)
                }
            })
            .expect("nonzero vector has a pivot")
    }

    /// Representative scaled so the last nonzero coordinate is 1.
    pub fn canonical(&self) -> Self {
        let p = self.pivot();
        let inv = S::one() / self.coords[p].clone();
        let mut coords: [S; N] = std::array::from_fn(|i| self.coords[i].clone() * inv.clone());
        coords[p] = S::one();
        HomCoords { coords }
    }

    pub fn is_canonical(&self) -> bool {
        let p = self.pivot();
        self.coords[p] == S::one() && self.coords[p + 1..].iter().all(Scalar::is_zero)
    }

    /// Same class, another representative. Fails if `k` is zero.
    pub fn scaled(&self, k: &S) -> Result<Self> {
        Self::new(std::array::from_fn(|i| self.coords[i].clone() * k.clone()))
    }

    /// True iff every 2x2 minor of the 2xN matrix `[self; other]` vanishes,
    /// i.e. one vector is a nonzero multiple of the other.
    pub fn proportional(&self, other: &Self, tol: Tolerance) -> bool {
        let scale = if S::EXACT {
            0.0
        } else {
            norm_f64(&self.coords) * norm_f64(&other.coords)
        };
        let (a, b) = (&self.coords, &other.coords);
        (0..N)
            .all(|i| (i + 1..N).all(|j| det2(&a[i], &a[j], &b[i], &b[j]).is_negligible(scale, tol)))
    }
}

impl<S: Scalar, const N: usize> fmt::Display for HomCoords<S, N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ":")?;
            }
            write!(f, "{}", c.to_text())?;
        }
        write!(f, "]")
    }
}

/// A point of RP^(N-1).
#[derive(Clone, Debug)]
pub struct ProjPoint<S, const N: usize> {
    rep: HomCoords<S, N>,
}

/// A point of the projective line.
pub type PointRp1<S> = ProjPoint<S, 2>;
/// A point of the projective plane.
pub type PointRp2<S> = ProjPoint<S, 3>;

impl<S: Scalar, const N: usize> ProjPoint<S, N> {
    /// The class of `coords`, stored in canonical form.
    pub fn new(coords: [S; N]) -> Result<Self> {
        Ok(ProjPoint {
            rep: HomCoords::new(coords)?.canonical(),
        })
    }

    /// The class of `coords`, keeping `coords` itself as representative.
    pub fn from_representative(coords: [S; N]) -> Result<Self> {
        Ok(ProjPoint {
            rep: HomCoords::new(coords)?,
        })
    }

    pub fn from_hom(rep: HomCoords<S, N>) -> Self {
        ProjPoint { rep }
    }

    pub fn rep(&self) -> &HomCoords<S, N> {
        &self.rep
    }

    pub fn coords(&self) -> &[S; N] {
        self.rep.coords()
    }

    pub fn canonical(&self) -> Self {
        ProjPoint {
            rep: self.rep.canonical(),
        }
    }

    /// Another representative of the same point.
    pub fn rescaled(&self, k: &S) -> Result<Self> {
        Ok(ProjPoint {
            rep: self.rep.scaled(k)?,
        })
    }
}

impl<S: Scalar, const N: usize> PartialEq for ProjPoint<S, N> {
    fn eq(&self, other: &Self) -> bool {
        proj_equal(self, other)
    }
}

impl<S: Scalar, const N: usize> fmt::Display for ProjPoint<S, N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.rep.fmt(f)
    }
}

/// A line of the projective plane, stored by its dual coordinates
/// `[u1 : u2 : u3]`; the line is `{ P : u . P = 0 }`.
#[derive(Clone, Debug)]
pub struct ProjLine<S> {
    dual: HomCoords<S, 3>,
}

impl<S: Scalar> ProjLine<S> {
    pub fn new(dual: [S; 3]) -> Result<Self> {
        Ok(ProjLine {
            dual: HomCoords::new(dual)?.canonical(),
        })
    }

    pub fn from_representative(dual: [S; 3]) -> Result<Self> {
        Ok(ProjLine {
            dual: HomCoords::new(dual)?,
        })
    }

    pub fn dual(&self) -> &HomCoords<S, 3> {
        &self.dual
    }

    pub fn coords(&self) -> &[S; 3] {
        self.dual.coords()
    }

    pub fn canonical(&self) -> Self {
        ProjLine {
            dual: self.dual.canonical(),
        }
    }

    pub fn rescaled(&self, k: &S) -> Result<Self> {
        Ok(ProjLine {
            dual: self.dual.scaled(k)?,
        })
    }

    /// The line at infinity of the affine chart, `[0 : 0 : 1]`.
    pub fn improper() -> Self {
        ProjLine {
            dual: HomCoords {
                coords: [S::zero(), S::zero(), S::one()],
            },
        }
    }
}

impl<S: Scalar> PartialEq for ProjLine<S> {
    fn eq(&self, other: &Self) -> bool {
        self.dual.proportional(&other.dual, Tolerance::default())
    }
}

impl<S: Scalar> fmt::Display for ProjLine<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.dual.fmt(f)
    }
}

pub fn make_point<S: Scalar, const N: usize>(coords: [S; N]) -> Result<ProjPoint<S, N>> {
    ProjPoint::new(coords)
}

pub fn proj_equal<S: Scalar, const N: usize>(p: &ProjPoint<S, N>, q: &ProjPoint<S, N>) -> bool {
    proj_equal_within(p, q, Tolerance::default())
}

pub fn proj_equal_within<S: Scalar, const N: usize>(
    p: &ProjPoint<S, N>,
    q: &ProjPoint<S, N>,
    tol: Tolerance,
) -> bool {
    p.rep.proportional(&q.rep, tol)
}

/// True iff the last homogeneous coordinate is nonzero.
pub fn is_proper<S: Scalar, const N: usize>(p: &ProjPoint<S, N>) -> bool {
    is_proper_within(p, Tolerance::default())
}

pub fn is_proper_within<S: Scalar, const N: usize>(p: &ProjPoint<S, N>, tol: Tolerance) -> bool {
    let c = p.coords();
    !c[N - 1].is_negligible(norm_f64(c), tol)
}

/// Affine coordinates `(x1/xN, ..., x(N-1)/xN)` of a proper point.
pub fn to_affine_chart<S: Scalar, const N: usize>(p: &ProjPoint<S, N>) -> Result<Vec<S>> {
    if !is_proper(p) {
        return Err(GeomError::ImproperPoint);
    }
    let c = p.coords();
    let last = c[N - 1].clone();
    Ok(c[..N - 1]
        .iter()
        .map(|x| x.clone() / last.clone())
        .collect())
}

/// The proper point `[a1 : ... : a(N-1) : 1]`.
///
/// Panics if `affine.len() != N - 1`.
pub fn from_affine<S: Scalar, const N: usize>(affine: &[S]) -> ProjPoint<S, N> {
    assert_eq!(affine.len() + 1, N, "affine point has the wrong dimension");
    let coords = std::array::from_fn(|i| {
        if i + 1 == N {
            S::one()
        } else {
            affine[i].clone()
        }
    });
    ProjPoint {
        rep: HomCoords { coords },
    }
}

/// The line through two distinct points of the plane.
pub fn join<S: Scalar>(p: &PointRp2<S>, q: &PointRp2<S>) -> Result<ProjLine<S>> {
    join_within(p, q, Tolerance::default())
}

pub fn join_within<S: Scalar>(
    p: &PointRp2<S>,
    q: &PointRp2<S>,
    tol: Tolerance,
) -> Result<ProjLine<S>> {
    if proj_equal_within(p, q, tol) {
        return Err(GeomError::IdenticalPoints);
    }
    ProjLine::new(cross(p.coords(), q.coords())).map_err(|_| GeomError::IdenticalPoints)
}

/// The common point of two distinct lines. Distinct lines always meet.
pub fn meet<S: Scalar>(l: &ProjLine<S>, m: &ProjLine<S>) -> Result<PointRp2<S>> {
    meet_within(l, m, Tolerance::default())
}

pub fn meet_within<S: Scalar>(
    l: &ProjLine<S>,
    m: &ProjLine<S>,
    tol: Tolerance,
) -> Result<PointRp2<S>> {
    if l.dual.proportional(&m.dual, tol) {
        return Err(GeomError::IdenticalLines);
    }
    ProjPoint::new(cross(l.coords(), m.coords())).map_err(|_| GeomError::IdenticalLines)
}

pub fn incident<S: Scalar>(p: &PointRp2<S>, l: &ProjLine<S>) -> bool {
    incident_within(p, l, Tolerance::default())
}

/// `u . P = 0`, or `|u . P| <= eps |u| |P|` for floats.
pub fn incident_within<S: Scalar>(p: &PointRp2<S>, l: &ProjLine<S>, tol: Tolerance) -> bool {
    let scale = if S::EXACT {
        0.0
    } else {
        norm_f64(p.coords()) * norm_f64(l.coords())
    };
    dot(p.coords(), l.coords()).is_negligible(scale, tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn r(v: i64) -> Rational {
        Rational::from_i64(v)
    }

    fn pt(c: [i64; 3]) -> PointRp2<Rational> {
        ProjPoint::new(c.map(r)).unwrap()
    }

    fn raw(c: [i64; 3]) -> PointRp2<Rational> {
        ProjPoint::from_representative(c.map(r)).unwrap()
    }

    fn line(c: [i64; 3]) -> ProjLine<Rational> {
        ProjLine::new(c.map(r)).unwrap()
    }

    #[test]
    fn make_point_canonicalizes() {
        assert_eq!(pt([2, 4, 2]).coords(), &[r(1), r(2), r(1)]);
        assert_eq!(pt([3, 0, 0]).coords(), &[r(1), r(0), r(0)]);
        assert_eq!(pt([0, -2, 0]).coords(), &[r(0), r(1), r(0)]);
        assert_eq!(
            make_point([r(0), r(0), r(0)]).unwrap_err(),
            GeomError::ZeroVector
        );
    }

    #[test]
    fn canonical_form_is_idempotent() {
        let p = raw([6, -4, 8]);
        let once = p.rep().canonical();
        let twice = once.canonical();
        assert_eq!(once.coords(), twice.coords());
        assert!(once.is_canonical());
        assert!(!p.rep().is_canonical());
    }

    #[test]
    fn projective_equality() {
        assert!(proj_equal(&raw([1, 2, 3]), &raw([2, 4, 6])));
        assert!(proj_equal(&raw([1, 2, 3]), &raw([-1, -2, -3])));
        assert!(!proj_equal(&raw([1, 2, 3]), &raw([1, 2, 4])));
        assert!(!proj_equal(&raw([1, 0, 0]), &raw([0, 1, 0])));
    }

    #[test]
    fn proper_and_improper() {
        assert!(is_proper(&pt([1, 2, 1])));
        assert!(!is_proper(&pt([1, 2, 0])));
        assert!(is_proper(&pt([0, 0, 5])));
        assert!(is_proper(&raw([0, 0, -5])));
    }

    #[test]
    fn affine_chart() {
        assert_eq!(to_affine_chart(&raw([2, 4, 2])).unwrap(), vec![r(1), r(2)]);
        assert_eq!(
            to_affine_chart(&raw([1, 2, 0])).unwrap_err(),
            GeomError::ImproperPoint
        );
        let a = Rational::from_ratio(-7, 3);
        let p: PointRp1<Rational> = from_affine(std::slice::from_ref(&a));
        assert_eq!(p.coords(), &[a.clone(), r(1)]);
        assert_eq!(to_affine_chart(&p).unwrap(), vec![a]);
        let o: PointRp2<Rational> = from_affine(&[r(0), r(0)]);
        assert_eq!(o.coords(), &[r(0), r(0), r(1)]);
        let q: PointRp2<Rational> = from_affine(&[r(1), r(2)]);
        assert_eq!(q.coords(), &[r(1), r(2), r(1)]);
        assert_eq!(to_affine_chart(&q).unwrap(), vec![r(1), r(2)]);
    }

    #[test]
    fn join_examples() {
        let l = join(&pt([1, 0, 0]), &pt([0, 1, 0])).unwrap();
        assert_eq!(l.coords(), &[r(0), r(0), r(1)]);
        // (0,0,1) x (1,0,1) = (0*1 - 1*0, 1*1 - 0*1, 0*0 - 0*1) = (0, 1, 0)
        let l = join(&pt([0, 0, 1]), &pt([1, 0, 1])).unwrap();
        assert_eq!(l.coords(), &[r(0), r(1), r(0)]);
        let p = pt([1, 2, 3]);
        assert_eq!(
            join(&p, &raw([2, 4, 6])).unwrap_err(),
            GeomError::IdenticalPoints
        );
    }

    #[test]
    fn meet_examples() {
        let p = meet(&line([1, 0, 0]), &line([0, 1, 0])).unwrap();
        assert_eq!(p.coords(), &[r(0), r(0), r(1)]);
        // y = 0 and y = 1 are parallel in the chart and meet at infinity
        let p = meet(&line([0, 1, 0]), &line([0, 1, -1])).unwrap();
        assert_eq!(p.coords(), &[r(1), r(0), r(0)]);
        assert!(!is_proper(&p));
        let l = line([3, 1, 2]);
        assert_eq!(
            meet(&l, &l.rescaled(&r(-2)).unwrap()).unwrap_err(),
            GeomError::IdenticalLines
        );
    }

    #[test]
    fn incidence_examples() {
        assert!(incident(&pt([1, 0, 0]), &ProjLine::improper()));
        assert!(!incident(&pt([0, 0, 1]), &ProjLine::improper()));
        let l = line([1, -1, 2]);
        let m = line([4, 0, 1]);
        let p = meet(&l, &m).unwrap();
        assert!(incident(&p, &l) && incident(&p, &m));
        assert!(incident(
            &p.rescaled(&r(7)).unwrap(),
            &l.rescaled(&r(-3)).unwrap()
        ));
    }

    #[test]
    fn float_backend_uses_tolerance() {
        let p = ProjPoint::<f64, 3>::new([0.1 + 0.2, 0.6, 0.3]).unwrap();
        let q = ProjPoint::<f64, 3>::new([0.3, 0.6, 0.3]).unwrap();
        assert!(proj_equal(&p, &q));
        assert!(!proj_equal_within(&p, &q, Tolerance::new(0.0)));
        let tiny = ProjPoint::<f64, 3>::new([1.0, 0.0, 1e-20]).unwrap();
        assert!(!is_proper(&tiny));
    }
}
