//! Central projection of space onto an image plane.
//!
//! A point `A` is sent to the point `Ã` of the image plane `α` collinear
//! with the center `O` and `A`. Points of the plane through `O` parallel to
//! `α` have no image. With `O` the origin and `α: z = 1` the map is
//! `(x, y, z) -> (x/z, y/z, 1)`.
//!
//! Planes carry a deterministic 2D chart, so images can be read as points of
//! the projective plane and the whole projection of one plane onto another
//! becomes a [`Homography2`].

use rayon::prelude::*;

use crate::error::{GeomError, Result};
use crate::group::{homography_from_frames_within, Homography2};
use crate::homogeneous::{PointRp2, ProjPoint};
use crate::linalg::{cross, dot};
use crate::scalar::{norm_f64, Scalar, Tolerance};

#[derive(Clone, Debug, PartialEq)]
pub struct Point3<S> {
    pub x: S,
    pub y: S,
    pub z: S,
}

impl<S: Scalar> Point3<S> {
    pub fn new(x: S, y: S, z: S) -> Self {
        Point3 { x, y, z }
    }

    pub fn origin() -> Self {
        Point3::new(S::zero(), S::zero(), S::zero())
    }

    pub fn from_array([x, y, z]: [S; 3]) -> Self {
        Point3 { x, y, z }
    }

    pub fn to_array(&self) -> [S; 3] {
        [self.x.clone(), self.y.clone(), self.z.clone()]
    }

    pub fn to_f64(&self) -> Point3<f64> {
        Point3::new(self.x.to_f64(), self.y.to_f64(), self.z.to_f64())
    }

    fn offset_by(&self, d: &[S; 3], t: &S) -> Self {
        Point3::new(
            self.x.clone() + t.clone() * d[0].clone(),
            self.y.clone() + t.clone() * d[1].clone(),
            self.z.clone() + t.clone() * d[2].clone(),
        )
    }

    /// Componentwise comparison (exact, or relative tolerance for floats).
    pub fn approx_eq(&self, other: &Self, tol: Tolerance) -> bool {
        self.x.approx_eq(&other.x, tol)
            && self.y.approx_eq(&other.y, tol)
            && self.z.approx_eq(&other.z, tol)
    }
}

fn sub<S: Scalar>(a: &Point3<S>, b: &Point3<S>) -> [S; 3] {
    [
        a.x.clone() - b.x.clone(),
        a.y.clone() - b.y.clone(),
        a.z.clone() - b.z.clone(),
    ]
}

/// `{ p : normal . p = offset }`.
#[derive(Clone, Debug, PartialEq)]
pub struct Plane3<S> {
    normal: [S; 3],
    offset: S,
}

impl<S: Scalar> Plane3<S> {
    pub fn new(normal: [S; 3], offset: S) -> Result<Self> {
        if normal.iter().all(Scalar::is_zero) {
            return Err(GeomError::ZeroNormal);
        }
        Ok(Plane3 { normal, offset })
    }

    /// The plane `z = c`.
    pub fn z_equals(c: S) -> Self {
        Plane3 {
            normal: [S::zero(), S::zero(), S::one()],
            offset: c,
        }
    }

    /// The plane through three non-collinear points.
    pub fn through(a: &Point3<S>, b: &Point3<S>, c: &Point3<S>) -> Result<Self> {
        let normal = cross(&sub(b, a), &sub(c, a));
        let offset = dot(&normal, &a.to_array());
        Self::new(normal, offset)
    }

    pub fn normal(&self) -> &[S; 3] {
        &self.normal
    }

    pub fn offset(&self) -> &S {
        &self.offset
    }

    /// `normal . p - offset`.
    pub fn eval(&self, p: &Point3<S>) -> S {
        dot(&self.normal, &p.to_array()) - self.offset.clone()
    }

    pub fn contains(&self, p: &Point3<S>, tol: Tolerance) -> bool {
        let scale = if S::EXACT {
            0.0
        } else {
            norm_f64(&self.normal) * norm_f64(&p.to_array()) + self.offset.to_f64().abs()
        };
        self.eval(p).is_negligible(scale, tol)
    }

    pub fn to_f64(&self) -> Plane3<f64> {
        Plane3 {
            normal: self.normal.clone().map(|v| v.to_f64()),
            offset: self.offset.to_f64(),
        }
    }

    /// Deterministic affine chart of the plane.
    ///
    /// Origin: the foot of the perpendicular from the coordinate origin.
    /// With `k` the index of the largest `|normal_k|` (first on ties) and
    /// `i` the first other index, the first tangent has `u_i = n_k`,
    /// `u_k = -n_i`, zero elsewhere; the second is `v = n x u`. Both are
    /// orthogonal to `n` and to each other; they are not normalized, which
    /// keeps the chart rational. For `z = c` this is `(x, y)`.
    pub fn chart(&self) -> PlaneChart<S> {
        let n = &self.normal;
        let mut k = 0;
        for idx in 1..3 {
            if n[idx].abs() > n[k].abs() {
                k = idx;
            }
        }
        let i = if k == 0 { 1 } else { 0 };
        let mut u: [S; 3] = std::array::from_fn(|_| S::zero());
        u[i] = n[k].clone();
        u[k] = -n[i].clone();
        let v = cross(n, &u);
        let nn = dot(n, n);
        let origin = n.clone().map(|c| c * self.offset.clone() / nn.clone());
        PlaneChart {
            uu: dot(&u, &u),
            vv: dot(&v, &v),
            origin,
            u,
            v,
        }
    }
}

/// Affine coordinates on a plane: `p = origin + s u + r v`.
#[derive(Clone, Debug)]
pub struct PlaneChart<S> {
    origin: [S; 3],
    u: [S; 3],
    v: [S; 3],
    uu: S,
    vv: S,
}

impl<S: Scalar> PlaneChart<S> {
    /// Chart coordinates of a point of the plane. Points off the plane are
    /// orthogonally projected onto it first.
    pub fn coords(&self, p: &Point3<S>) -> [S; 2] {
        let rel: [S; 3] = std::array::from_fn(|i| p.to_array()[i].clone() - self.origin[i].clone());
        [
            dot(&rel, &self.u) / self.uu.clone(),
            dot(&rel, &self.v) / self.vv.clone(),
        ]
    }

    pub fn point(&self, s: &S, r: &S) -> Point3<S> {
        Point3::from_array(std::array::from_fn(|i| {
            self.origin[i].clone() + s.clone() * self.u[i].clone() + r.clone() * self.v[i].clone()
        }))
    }

    /// The proper point `[s : r : 1]` of the chart.
    pub fn homogeneous(&self, p: &Point3<S>) -> PointRp2<S> {
        let [s, r] = self.coords(p);
        ProjPoint::new([s, r, S::one()]).expect("last coordinate is 1")
    }
}

/// Projection with center `O` onto the image plane `α`, `O ∉ α`.
#[derive(Clone, Debug)]
pub struct CentralProjection<S> {
    center: Point3<S>,
    image_plane: Plane3<S>,
    chart: PlaneChart<S>,
    tol: Tolerance,
}

impl<S: Scalar> CentralProjection<S> {
    pub fn new(center: Point3<S>, image_plane: Plane3<S>) -> Result<Self> {
        Self::with_tolerance(center, image_plane, Tolerance::default())
    }

    pub fn with_tolerance(
        center: Point3<S>,
        image_plane: Plane3<S>,
        tol: Tolerance,
    ) -> Result<Self> {
        if image_plane.contains(&center, tol) {
            return Err(GeomError::CenterOnPlane);
        }
        let chart = image_plane.chart();
        Ok(CentralProjection {
            center,
            image_plane,
            chart,
            tol,
        })
    }

    /// Center at the origin, image plane `z = 1`.
    pub fn standard() -> Self {
        Self::new(Point3::origin(), Plane3::z_equals(S::one())).expect("origin is off z = 1")
    }

    pub fn center(&self) -> &Point3<S> {
        &self.center
    }

    pub fn image_plane(&self) -> &Plane3<S> {
        &self.image_plane
    }

    pub fn chart(&self) -> &PlaneChart<S> {
        &self.chart
    }

    pub fn tolerance(&self) -> Tolerance {
        self.tol
    }

    pub fn to_f64(&self) -> CentralProjection<f64> {
        CentralProjection {
            center: self.center.to_f64(),
            image_plane: self.image_plane.to_f64(),
            chart: self.image_plane.to_f64().chart(),
            tol: self.tol,
        }
    }

    /// `offset - normal . O`; nonzero because `O ∉ α`.
    fn height(&self) -> S {
        -self.image_plane.eval(&self.center)
    }

    /// `normal . d`, and whether it counts as zero.
    fn slope(&self, d: &[S; 3]) -> (S, bool) {
        let n = self.image_plane.normal();
        let den = dot(n, d);
        let scale = if S::EXACT {
            0.0
        } else {
            norm_f64(n) * norm_f64(d)
        };
        let vanishes = den.is_negligible(scale, self.tol);
        (den, vanishes)
    }

    fn direction_from_center(&self, a: &Point3<S>) -> Result<[S; 3]> {
        let d = sub(a, &self.center);
        let scale = if S::EXACT {
            0.0
        } else {
            norm_f64(&self.center.to_array()).max(1.0)
        };
        if d.iter()
            .all(|c| c.is_zero() || c.is_negligible(scale, self.tol))
        {
            return Err(GeomError::CenterInput);
        }
        Ok(d)
    }

    /// The image `Ã ∈ α` of `A`.
    pub fn project(&self, a: &Point3<S>) -> Result<Point3<S>> {
        let d = self.direction_from_center(a)?;
        let (den, vanishes) = self.slope(&d);
        if vanishes {
            return Err(GeomError::NoImage);
        }
        Ok(self.center.offset_by(&d, &(self.height() / den)))
    }

    /// Chart coordinates of `project(a)` on the image plane.
    pub fn project_chart(&self, a: &Point3<S>) -> Result<[S; 2]> {
        Ok(self.chart.coords(&self.project(a)?))
    }

    /// Image of `A` as a point of the projective plane of `α`'s chart.
    ///
    /// Total except at the center: points of the no-image plane go to the
    /// improper point of their direction.
    pub fn project_homogeneous(&self, a: &Point3<S>) -> Result<PointRp2<S>> {
        let d = self.direction_from_center(a)?;
        Ok(self.homogeneous_image_of_ray(&d))
    }

    /// `[ (O - p0).u den + h d.u) / u.u : (same for v) : den ]` where
    /// `den = n . d`, `h = offset - n . O`; this is `[s : r : 1]` scaled by
    /// `den`, and stays meaningful when `den = 0`.
    fn homogeneous_image_of_ray(&self, d: &[S; 3]) -> PointRp2<S> {
        let (den, vanishes) = self.slope(d);
        let den = if vanishes { S::zero() } else { den };
        let h = self.height();
        let chart = &self.chart;
        let rel: [S; 3] =
            std::array::from_fn(|i| self.center.to_array()[i].clone() - chart.origin[i].clone());
        let s =
            (dot(&rel, &chart.u) * den.clone() + h.clone() * dot(d, &chart.u)) / chart.uu.clone();
        let r = (dot(&rel, &chart.v) * den.clone() + h * dot(d, &chart.v)) / chart.vv.clone();
        ProjPoint::new([s, r, den]).expect("image of a ray is a nonzero vector")
    }

    /// True iff `A1` and `A2` have the same image.
    pub fn same_image(&self, a1: &Point3<S>, a2: &Point3<S>) -> Result<bool> {
        let i1 = self.project(a1)?;
        let i2 = self.project(a2)?;
        Ok(i1.approx_eq(&i2, self.tol))
    }

    /// Where the images of all lines with direction `dir` converge.
    pub fn vanishing_point(&self, dir: &[S; 3]) -> Result<Point3<S>> {
        if dir.iter().all(Scalar::is_zero) {
            return Err(GeomError::ZeroVector);
        }
        let (den, vanishes) = self.slope(dir);
        if vanishes {
            return Err(GeomError::DirectionParallel);
        }
        Ok(self.center.offset_by(dir, &(self.height() / den)))
    }

    /// The vanishing point of `dir` as a point of the image chart, improper
    /// when `dir` is parallel to `α`.
    pub fn vanishing_point_homogeneous(&self, dir: &[S; 3]) -> Result<PointRp2<S>> {
        if dir.iter().all(Scalar::is_zero) {
            return Err(GeomError::ZeroVector);
        }
        // A ray from O with direction `dir` crosses α at the vanishing point;
        // its image is computed by the same formula as any other ray.
        Ok(self.homogeneous_image_of_ray(dir))
    }

    /// The homography from the chart of `source_plane` to the chart of the
    /// image plane induced by this projection, fixed by the images of a
    /// four-point frame on `source_plane`.
    pub fn projection_as_homography(
        &self,
        source_plane: &Plane3<S>,
        frame: &[Point3<S>; 4],
    ) -> Result<Homography2<S>> {
        if source_plane.contains(&self.center, self.tol) {
            return Err(GeomError::CenterOnPlane);
        }
        if frame.iter().any(|p| !source_plane.contains(p, self.tol)) {
            return Err(GeomError::NotOnPlane);
        }
        let src_chart = source_plane.chart();
        let src = frame.each_ref().map(|p| src_chart.homogeneous(p));
        let dst = frame
            .iter()
            .map(|p| self.project_homogeneous(p))
            .collect::<Result<Vec<_>>>()?;
        let dst: [PointRp2<S>; 4] = dst.try_into().expect("four frame points");
        homography_from_frames_within(&src, &dst, self.tol)
    }
}

/// The object being drawn: vertices, straight edges between them, and
/// directions whose vanishing points should be marked.
#[derive(Clone, Debug)]
pub struct Scene<S> {
    vertices: Vec<Point3<S>>,
    labels: Vec<Option<String>>,
    edges: Vec<(usize, usize)>,
    directions: Vec<[S; 3]>,
}

impl<S: Scalar> Scene<S> {
    pub fn new(
        vertices: Vec<Point3<S>>,
        edges: Vec<(usize, usize)>,
        directions: Vec<[S; 3]>,
    ) -> Result<Self> {
        let labels = vec![None; vertices.len()];
        Self::with_labels(vertices, labels, edges, directions)
    }

    pub fn with_labels(
        vertices: Vec<Point3<S>>,
        labels: Vec<Option<String>>,
        edges: Vec<(usize, usize)>,
        directions: Vec<[S; 3]>,
    ) -> Result<Self> {
        assert_eq!(vertices.len(), labels.len(), "one label slot per vertex");
        for (index, &(a, b)) in edges.iter().enumerate() {
            if a >= vertices.len() || b >= vertices.len() {
                return Err(GeomError::InvalidEdge {
                    index,
                    reason: "vertex index out of range",
                });
            }
            if a == b {
                return Err(GeomError::InvalidEdge {
                    index,
                    reason: "self-loop",
                });
            }
        }
        if directions.iter().any(|d| d.iter().all(Scalar::is_zero)) {
            return Err(GeomError::ZeroVector);
        }
        Ok(Scene {
            vertices,
            labels,
            edges,
            directions,
        })
    }

    pub fn vertices(&self) -> &[Point3<S>] {
        &self.vertices
    }

    pub fn labels(&self) -> &[Option<String>] {
        &self.labels
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn directions(&self) -> &[[S; 3]] {
        &self.directions
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RenderOptions {
    /// Keep only the parts of edges in front of the center (on the image
    /// plane's side of the no-image plane).
    pub front_only: bool,
    /// Parameter margin kept clear of the no-image plane when clipping.
    pub near_margin: f64,
    /// Also mark the vanishing points of every edge direction.
    pub mark_edge_directions: bool,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            front_only: false,
            near_margin: 1e-6,
            mark_edge_directions: false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Segment2 {
    pub edge: usize,
    pub from: [f64; 2],
    pub to: [f64; 2],
}

#[derive(Clone, Debug, PartialEq)]
pub struct Drawing {
    /// Segments in image-chart coordinates, in input edge order.
    pub segments: Vec<Segment2>,
    /// Vanishing points in image-chart coordinates.
    pub markers: Vec<[f64; 2]>,
}

/// Projects every edge of `scene` to the image chart. Rendering works in
/// `f64` whatever the scalar type of the inputs.
pub fn render_scene<S: Scalar>(
    scene: &Scene<S>,
    proj: &CentralProjection<S>,
    opts: &RenderOptions,
) -> Result<Drawing> {
    let proj = proj.to_f64();
    let vertices: Vec<Point3<f64>> = scene.vertices.iter().map(Point3::to_f64).collect();
    let height = proj.height();

    let segments: Vec<Segment2> = scene
        .edges
        .par_iter()
        .enumerate()
        .map(|(edge, &(a, b))| {
            clip_and_project(&proj, edge, &vertices[a], &vertices[b], height, opts)
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    if segments.is_empty() {
        return Err(GeomError::EmptyScene);
    }

    let mut directions: Vec<[f64; 3]> = scene
        .directions
        .iter()
        .map(|d| d.clone().map(|v| v.to_f64()))
        .collect();
    if opts.mark_edge_directions {
        directions.extend(
            scene
                .edges
                .iter()
                .map(|&(a, b)| sub(&vertices[b], &vertices[a])),
        );
    }
    let mut markers: Vec<[f64; 2]> = Vec::new();
    for dir in &directions {
        let Ok(vp) = proj.vanishing_point(dir) else {
            continue;
        };
        let at = proj.chart.coords(&vp);
        let tol = proj.tol;
        if !markers
            .iter()
            .any(|m| m[0].approx_eq(&at[0], tol) && m[1].approx_eq(&at[1], tol))
        {
            markers.push(at);
        }
    }
    Ok(Drawing { segments, markers })
}

fn clip_and_project(
    proj: &CentralProjection<f64>,
    edge: usize,
    a: &Point3<f64>,
    b: &Point3<f64>,
    height: f64,
    opts: &RenderOptions,
) -> Vec<Segment2> {
    let den = |p: &Point3<f64>| {
        let d = sub(p, &proj.center);
        let (v, vanishes) = proj.slope(&d);
        if vanishes {
            0.0
        } else {
            v
        }
    };
    let (da, db) = (den(a), den(b));
    let m = opts.near_margin;
    let mut pieces: Vec<(f64, f64)> = Vec::new();
    match (da == 0.0, db == 0.0) {
        (true, true) => {}
        (true, false) => pieces.push((m, 1.0)),
        (false, true) => pieces.push((0.0, 1.0 - m)),
        (false, false) if da.signum() == db.signum() => pieces.push((0.0, 1.0)),
        (false, false) => {
            let t0 = da / (da - db);
            pieces.push((0.0, t0 - m));
            pieces.push((t0 + m, 1.0));
        }
    }

    let at = |t: f64| {
        Point3::new(
            a.x + t * (b.x - a.x),
            a.y + t * (b.y - a.y),
            a.z + t * (b.z - a.z),
        )
    };
    pieces
        .into_iter()
        .filter(|(t0, t1)| t1 > t0)
        .filter(|&(t0, t1)| {
            !opts.front_only || den(&at(0.5 * (t0 + t1))).signum() == height.signum()
        })
        .filter_map(|(t0, t1)| {
            let from = proj.project_chart(&at(t0)).ok()?;
            let to = proj.project_chart(&at(t1)).ok()?;
            Some(Segment2 { edge, from, to })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cross_ratio::is_collinear;
    use crate::group::{act_point, pgl_equal, Homography};
    use crate::homogeneous::from_affine;
    use crate::scalar::Rational;

    fn r(v: i64) -> Rational {
        Rational::from_i64(v)
    }

    fn p3(x: i64, y: i64, z: i64) -> Point3<Rational> {
        Point3::new(r(x), r(y), r(z))
    }

    #[test]
    fn standard_projection() {
        let proj = CentralProjection::<Rational>::standard();
        assert_eq!(proj.project(&p3(2, 4, 2)).unwrap(), p3(1, 2, 1));
        assert_eq!(proj.project(&p3(3, 5, 0)).unwrap_err(), GeomError::NoImage);
        assert_eq!(
            proj.project(&p3(0, 0, 0)).unwrap_err(),
            GeomError::CenterInput
        );
        assert_eq!(proj.project(&p3(-7, 3, 1)).unwrap(), p3(-7, 3, 1));
        assert_eq!(proj.project_chart(&p3(2, 4, 2)).unwrap(), [r(1), r(2)]);
        // behind the center still projects
        assert_eq!(proj.project(&p3(2, 4, -2)).unwrap(), p3(-1, -2, 1));
    }

    #[test]
    fn center_must_be_off_the_image_plane() {
        let err = CentralProjection::new(p3(0, 0, 1), Plane3::z_equals(r(1)));
        assert_eq!(err.unwrap_err(), GeomError::CenterOnPlane);
        assert_eq!(
            Plane3::new([r(0), r(0), r(0)], r(1)).unwrap_err(),
            GeomError::ZeroNormal
        );
    }

    #[test]
    fn general_projection_is_collinear_and_on_plane() {
        let plane = Plane3::new([r(1), r(2), r(-1)], r(4)).unwrap();
        let proj = CentralProjection::new(p3(1, -1, 3), plane.clone()).unwrap();
        let a = p3(5, 2, -3);
        let img = proj.project(&a).unwrap();
        assert!(plane.contains(&img, Tolerance::default()));
        // collinearity of O, A, Ã in R^3: det of differences
        let d1 = sub(&a, proj.center());
        let d2 = sub(&img, proj.center());
        assert!(cross(&d1, &d2).iter().all(Scalar::is_zero));
        assert_eq!(proj.project(&img).unwrap(), img);
    }

    #[test]
    fn same_image_examples() {
        let proj = CentralProjection::<Rational>::standard();
        let a = p3(3, -2, 5);
        assert!(proj.same_image(&a, &p3(6, -4, 10)).unwrap());
        assert!(!proj.same_image(&p3(1, 1, 1), &p3(1, 1, 2)).unwrap());
        assert!(proj.same_image(&a, &a).unwrap());
        assert_eq!(
            proj.same_image(&a, &p3(1, 1, 0)).unwrap_err(),
            GeomError::NoImage
        );
    }

    #[test]
    fn vanishing_points() {
        let proj = CentralProjection::<Rational>::standard();
        assert_eq!(
            proj.vanishing_point(&[r(0), r(0), r(1)]).unwrap(),
            p3(0, 0, 1)
        );
        assert_eq!(
            proj.vanishing_point(&[r(1), r(0), r(1)]).unwrap(),
            p3(1, 0, 1)
        );
        assert_eq!(
            proj.vanishing_point(&[r(1), r(0), r(0)]).unwrap_err(),
            GeomError::DirectionParallel
        );
        let improper = proj
            .vanishing_point_homogeneous(&[r(1), r(0), r(0)])
            .unwrap();
        assert_eq!(improper.coords(), &[r(1), r(0), r(0)]);
    }

    #[test]
    fn homogeneous_image_agrees_with_project() {
        let plane = Plane3::new([r(2), r(-1), r(3)], r(5)).unwrap();
        let proj = CentralProjection::new(p3(1, 1, -2), plane).unwrap();
        for a in [p3(4, 0, 1), p3(-3, 2, 7), p3(0, 5, -1)] {
            let direct = proj.chart().homogeneous(&proj.project(&a).unwrap());
            assert_eq!(proj.project_homogeneous(&a).unwrap(), direct);
        }
    }

    #[test]
    fn chart_round_trip() {
        let plane = Plane3::new([r(2), r(-5), r(3)], r(7)).unwrap();
        let chart = plane.chart();
        let (s, t) = (Rational::from_ratio(3, 4), r(-2));
        let p = chart.point(&s, &t);
        assert!(plane.contains(&p, Tolerance::default()));
        assert_eq!(chart.coords(&p), [s, t]);
        let z = Plane3::z_equals(r(1)).chart();
        assert_eq!(z.coords(&p3(4, -3, 1)), [r(4), r(-3)]);
    }

    #[test]
    fn projection_of_image_plane_is_identity() {
        let proj = CentralProjection::<Rational>::standard();
        let frame = [p3(0, 0, 1), p3(1, 0, 1), p3(0, 1, 1), p3(1, 1, 1)];
        let h = proj
            .projection_as_homography(&Plane3::z_equals(r(1)), &frame)
            .unwrap();
        assert!(pgl_equal(&h, &Homography::identity()));
    }

    #[test]
    fn projection_as_homography_matches_pointwise() {
        let proj = CentralProjection::<Rational>::standard();
        // ground plane y = -1 seen from the origin
        let ground = Plane3::new([r(0), r(1), r(0)], r(-1)).unwrap();
        let frame = [p3(0, -1, 2), p3(1, -1, 2), p3(0, -1, 5), p3(3, -1, 4)];
        let h = proj.projection_as_homography(&ground, &frame).unwrap();
        let chart = ground.chart();
        for p in [p3(7, -1, 3), p3(-2, -1, 9), p3(1, -1, -4)] {
            let via_h = act_point(&h, &chart.homogeneous(&p));
            let direct: PointRp2<Rational> = from_affine(&proj.project_chart(&p).unwrap());
            assert_eq!(via_h, direct);
        }
        let off = [p3(0, -1, 2), p3(1, -1, 2), p3(0, -1, 5), p3(3, 0, 4)];
        assert_eq!(
            proj.projection_as_homography(&ground, &off).unwrap_err(),
            GeomError::NotOnPlane
        );
        let through_center = Plane3::new([r(0), r(1), r(0)], r(0)).unwrap();
        assert_eq!(
            proj.projection_as_homography(&through_center, &frame)
                .unwrap_err(),
            GeomError::CenterOnPlane
        );
    }

    #[test]
    fn improper_images_are_collinear_with_horizon() {
        let proj = CentralProjection::<Rational>::standard();
        let a = proj.project_homogeneous(&p3(1, 0, 0)).unwrap();
        let b = proj.project_homogeneous(&p3(0, 1, 0)).unwrap();
        let c = proj.project_homogeneous(&p3(1, 1, 0)).unwrap();
        assert!(is_collinear(&a, &b, &c));
    }

    fn cube() -> Scene<f64> {
        let mut vertices = Vec::new();
        for &x in &[-1.0, 1.0] {
            for &y in &[-1.0, 1.0] {
                for &z in &[2.0, 4.0] {
                    vertices.push(Point3::new(x, y, z));
                }
            }
        }
        let mut edges = Vec::new();
        for i in 0..8usize {
            for bit in [1usize, 2, 4] {
                let j = i ^ bit;
                if i < j {
                    edges.push((i, j));
                }
            }
        }
        Scene::new(vertices, edges, vec![[0.0, 0.0, 1.0]]).unwrap()
    }

    #[test]
    fn cube_render() {
        let scene = cube();
        let drawing = render_scene(
            &scene,
            &CentralProjection::standard(),
            &RenderOptions::default(),
        )
        .unwrap();
        assert_eq!(drawing.segments.len(), 12);
        assert_eq!(drawing.markers, vec![[0.0, 0.0]]);
        // edges along z: from (x/2, y/2) to (x/4, y/4), both on the ray through (0,0)
        for seg in &drawing.segments {
            let (a, b) = scene.edges()[seg.edge];
            let (va, vb) = (&scene.vertices()[a], &scene.vertices()[b]);
            if va.x == vb.x && va.y == vb.y {
                let cross2 = seg.from[0] * seg.to[1] - seg.from[1] * seg.to[0];
                assert!(cross2.abs() < 1e-12);
                assert!((seg.from[0] - va.x / va.z).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn render_edge_cases() {
        let on_beta = Scene::new(
            vec![Point3::new(1.0, 0.0, 0.0), Point3::new(0.0, 1.0, 0.0)],
            vec![(0, 1)],
            vec![],
        )
        .unwrap();
        let proj = CentralProjection::<f64>::standard();
        assert_eq!(
            render_scene(&on_beta, &proj, &RenderOptions::default()).unwrap_err(),
            GeomError::EmptyScene
        );

        let flat = Scene::new(
            vec![Point3::new(0.5, -2.0, 1.0), Point3::new(3.0, 1.0, 1.0)],
            vec![(0, 1)],
            vec![],
        )
        .unwrap();
        let d = render_scene(&flat, &proj, &RenderOptions::default()).unwrap();
        assert_eq!(
            d.segments,
            vec![Segment2 {
                edge: 0,
                from: [0.5, -2.0],
                to: [3.0, 1.0]
            }]
        );

        // an edge through the no-image plane splits in two, or one with front-only
        let crossing = Scene::new(
            vec![Point3::new(1.0, 0.0, 1.0), Point3::new(1.0, 0.0, -1.0)],
            vec![(0, 1)],
            vec![],
        )
        .unwrap();
        assert_eq!(
            render_scene(&crossing, &proj, &RenderOptions::default())
                .unwrap()
                .segments
                .len(),
            2
        );
        let front = RenderOptions {
            front_only: true,
            ..RenderOptions::default()
        };
        let d = render_scene(&crossing, &proj, &front).unwrap();
        assert_eq!(d.segments.len(), 1);
        assert_eq!(d.segments[0].from, [1.0, 0.0]);
    }

    #[test]
    fn scene_validation() {
        let v = vec![p3(0, 0, 1), p3(1, 0, 1)];
        assert!(matches!(
            Scene::new(v.clone(), vec![(0, 2)], vec![]),
            Err(GeomError::InvalidEdge { .. })
        ));
        assert!(matches!(
            Scene::new(v, vec![(1, 1)], vec![]),
            Err(GeomError::InvalidEdge { .. })
        ));
    }
}
