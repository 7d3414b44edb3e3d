//! The projective group PGL(N): invertible NxN matrices modulo the scalar
//! matrices `lambda * I`, acting on points (columns, matrix on the left) and
//! on lines of the plane (by the inverse transpose).

use std::fmt;

use crate::error::{GeomError, Result};
use crate::homogeneous::{HomCoords, PointRp2, ProjLine, ProjPoint};
use crate::linalg::{self, det3, Matrix};
use crate::scalar::{norm_f64, Scalar, Tolerance};

/// An element `[g]` of PGL(N), held through any invertible representative.
#[derive(Clone, Debug)]
pub struct Homography<S, const N: usize> {
    rep: Matrix<S, N>,
}

/// Homographies of the projective plane.
pub type Homography2<S> = Homography<S, 3>;

/// Nonsingularity test. Exact: `det != 0`. Float:
/// `|det| > eps * (max row norm)^N`.
pub fn is_invertible<S: Scalar, const N: usize>(m: &Matrix<S, N>, tol: Tolerance) -> bool {
    let det = linalg::det_n(m);
    if S::EXACT {
        return !det.is_zero();
    }
    let row_norm = m.iter().map(|row| norm_f64(row)).fold(0.0, f64::max);
    !det.is_zero() && !det.is_negligible(row_norm.powi(N as i32), tol)
}

fn flatten<S: Scalar, const N: usize>(m: &Matrix<S, N>) -> impl Iterator<Item = &S> {
    m.iter().flat_map(|row| row.iter())
}

impl<S: Scalar, const N: usize> Homography<S, N> {
    /// `[m]`, stored canonically (last nonzero entry in row-major order
    /// equal to 1).
    pub fn new(m: Matrix<S, N>) -> Result<Self> {
        Self::new_within(m, Tolerance::default())
    }

    pub fn new_within(m: Matrix<S, N>, tol: Tolerance) -> Result<Self> {
        if !is_invertible(&m, tol) {
            return Err(GeomError::SingularMatrix);
        }
        Ok(Homography { rep: m }.canonical())
    }

    /// `[m]` keeping `m` itself as representative.
    pub fn from_representative(m: Matrix<S, N>) -> Result<Self> {
        if !is_invertible(&m, Tolerance::default()) {
            return Err(GeomError::SingularMatrix);
        }
        Ok(Homography { rep: m })
    }

    pub fn identity() -> Self {
        Homography {
            rep: linalg::identity(),
        }
    }

    pub fn matrix(&self) -> &Matrix<S, N> {
        &self.rep
    }

    pub fn canonical(&self) -> Self {
        let pivot = flatten(&self.rep)
            .collect::<Vec<_>>()
            .into_iter()
            .rev()
            .find(|v| !v.is_zero())
            .expect("invertible matrix has a nonzero entry")
            .clone();
        let inv = S::one() / pivot;
        Homography {
            rep: self.rep.clone().map(|row| row.map(|v| v * inv.clone())),
        }
    }

    /// `[lambda * g]`; the same element of PGL.
    pub fn rescaled(&self, lambda: &S) -> Result<Self> {
        if lambda.is_zero() {
            return Err(GeomError::SingularMatrix);
        }
        Ok(Homography {
            rep: self.rep.clone().map(|row| row.map(|v| v * lambda.clone())),
        })
    }

    pub fn det(&self) -> S {
        linalg::det_n(&self.rep)
    }
}

impl<S: Scalar, const N: usize> PartialEq for Homography<S, N> {
    fn eq(&self, other: &Self) -> bool {
        pgl_equal(self, other)
    }
}

impl<S: Scalar, const N: usize> fmt::Display for Homography<S, N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rep.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(Scalar::to_text).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

pub fn make_homography<S: Scalar, const N: usize>(m: Matrix<S, N>) -> Result<Homography<S, N>> {
    Homography::new(m)
}

pub fn pgl_equal<S: Scalar, const N: usize>(g: &Homography<S, N>, h: &Homography<S, N>) -> bool {
    pgl_equal_within(g, h, Tolerance::default())
}

/// True iff the flattened representatives are proportional (all 2x2
/// minors vanish), i.e. `g = s h` for a scalar matrix `s`.
pub fn pgl_equal_within<S: Scalar, const N: usize>(
    g: &Homography<S, N>,
    h: &Homography<S, N>,
    tol: Tolerance,
) -> bool {
    let a: Vec<&S> = flatten(&g.rep).collect();
    let b: Vec<&S> = flatten(&h.rep).collect();
    let scale = if S::EXACT {
        0.0
    } else {
        let na = a.iter().map(|v| v.to_f64().powi(2)).sum::<f64>().sqrt();
        let nb = b.iter().map(|v| v.to_f64().powi(2)).sum::<f64>().sqrt();
        na * nb
    };
    (0..a.len()).all(|i| {
        (i + 1..a.len()).all(|j| linalg::det2(a[i], a[j], b[i], b[j]).is_negligible(scale, tol))
    })
}

/// `[g] . [x] = [g x]`.
pub fn act_point<S: Scalar, const N: usize>(
    g: &Homography<S, N>,
    p: &ProjPoint<S, N>,
) -> ProjPoint<S, N> {
    let image = linalg::mat_vec(&g.rep, p.coords());
    ProjPoint::from_hom(
        HomCoords::new(image)
            .expect("invertible matrix maps nonzero to nonzero")
            .canonical(),
    )
}

/// Induced action on lines: `u -> g^(-T) u`, computed with the cofactor
/// matrix (which equals `det(g) * g^(-T)`).
pub fn act_line<S: Scalar>(g: &Homography2<S>, l: &ProjLine<S>) -> ProjLine<S> {
    let cof = linalg::cofactor(&g.rep);
    ProjLine::new(linalg::mat_vec(&cof, l.coords()))
        .expect("invertible matrix maps nonzero to nonzero")
}

/// `[g h]`.
pub fn compose<S: Scalar, const N: usize>(
    g: &Homography<S, N>,
    h: &Homography<S, N>,
) -> Homography<S, N> {
    Homography {
        rep: linalg::mat_mul(&g.rep, &h.rep),
    }
    .canonical()
}

/// `[adj(g)]`, the inverse class (adj(g) g = det(g) I lies in the scalar
/// subgroup).
pub fn inverse<S: Scalar, const N: usize>(g: &Homography<S, N>) -> Homography<S, N> {
    Homography {
        rep: linalg::adjugate(&g.rep),
    }
    .canonical()
}

/// Matrix whose columns are `c_i * p_i`, with `p4 = c1 p1 + c2 p2 + c3 p3`.
/// It sends the standard frame `e1, e2, e3, e1 + e2 + e3` to `p1..p4`.
/// The `c_i` are taken up to the common factor `det[p1 p2 p3]` (Cramer
/// numerators), which does not change the class.
fn frame_matrix<S: Scalar>(frame: &[PointRp2<S>; 4], tol: Tolerance) -> Result<Matrix<S, 3>> {
    let [p1, p2, p3, p4] = frame.each_ref().map(|p| p.coords());
    let [n1, n2, n3, n4] = [p1, p2, p3, p4].map(|p| if S::EXACT { 0.0 } else { norm_f64(p) });
    let d = det3(p1, p2, p3);
    let c1 = det3(p4, p2, p3);
    let c2 = det3(p1, p4, p3);
    let c3 = det3(p1, p2, p4);
    let checks = [
        (&d, n1 * n2 * n3),
        (&c1, n4 * n2 * n3),
        (&c2, n1 * n4 * n3),
        (&c3, n1 * n2 * n4),
    ];
    if checks
        .iter()
        .any(|(v, scale)| v.is_zero() || v.is_negligible(*scale, tol))
    {
        return Err(GeomError::DegenerateFrame);
    }
    let cols = [(c1, p1), (c2, p2), (c3, p3)];
    Ok(std::array::from_fn(|i| {
        std::array::from_fn(|j| cols[j].0.clone() * cols[j].1[i].clone())
    }))
}

/// The unique homography with `src[i] -> dst[i]` for four points in general
/// position.
pub fn homography_from_frames<S: Scalar>(
    src: &[PointRp2<S>; 4],
    dst: &[PointRp2<S>; 4],
) -> Result<Homography2<S>> {
    homography_from_frames_within(src, dst, Tolerance::default())
}

pub fn homography_from_frames_within<S: Scalar>(
    src: &[PointRp2<S>; 4],
    dst: &[PointRp2<S>; 4],
    tol: Tolerance,
) -> Result<Homography2<S>> {
    let from_std_src = frame_matrix(src, tol)?;
    let from_std_dst = frame_matrix(dst, tol)?;
    let m = linalg::mat_mul(&from_std_dst, &linalg::adjugate(&from_std_src));
    Homography::new_within(m, tol)
}
