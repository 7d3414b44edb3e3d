//! Projective geometry with exact arithmetic.
//!
//! Points and lines of the projective line and plane in homogeneous
//! coordinates, the projective group PGL acting on them, the cross-ratio,
//! and central projection of space onto a plane. Every operation is generic
//! over a [`Scalar`]: [`Rational`] for exact results, `f64` for speed.
//!
//! ```
//! use projgeo::{cross_ratio_affine, ExtendedScalar, Rational, Scalar};
//!
//! let [a, b, c, d] = [0, 1, 3, 10].map(Rational::from_i64);
//! let value = cross_ratio_affine(&a, &b, &c, &d).unwrap();
//! assert_eq!(value, ExtendedScalar::Finite(Rational::from_ratio(27, 20)));
//! ```

pub mod cross_ratio;
pub mod error;
pub mod formats;
pub mod group;
pub mod homogeneous;
mod linalg;
pub mod perspective;
pub mod sample;
pub mod scalar;

pub use cross_ratio::{
    cross_ratio_affine, cross_ratio_affine_within, cross_ratio_collinear,
    cross_ratio_collinear_within, cross_ratio_rp1, cross_ratio_rp1_within, is_collinear,
    is_collinear_within, pencil_coordinates, ExtendedScalar,
};
pub use error::{GeomError, Result};
pub use group::{
    act_line, act_point, compose, homography_from_frames, homography_from_frames_within, inverse,
    is_invertible, make_homography, pgl_equal, pgl_equal_within, Homography, Homography2,
};
pub use homogeneous::{
    from_affine, incident, incident_within, is_proper, is_proper_within, join, join_within,
    make_point, meet, meet_within, proj_equal, proj_equal_within, to_affine_chart, HomCoords,
    PointRp1, PointRp2, ProjLine, ProjPoint,
};
pub use linalg::Matrix;
pub use perspective::{
    render_scene, CentralProjection, Drawing, Plane3, PlaneChart, Point3, RenderOptions, Scene,
    Segment2,
};
pub use scalar::{Rational, Scalar, Tolerance};
