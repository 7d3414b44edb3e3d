use std::fs;
use std::path::{Path, PathBuf};

use projgeo::formats::{self, ParseError, PointRecord, RecordKind, Viewport};
use projgeo::scalar::format_significant;
use projgeo::{
    act_line, act_point, cross_ratio_affine_within, cross_ratio_collinear_within,
    cross_ratio_rp1_within, inverse, is_proper_within, render_scene, CentralProjection,
    ExtendedScalar, Homography, Plane3, Point3, ProjLine, ProjPoint, RenderOptions, Scalar,
    Tolerance,
};

use crate::error::{CliError, CliResult};

pub fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

/// Writes to `out`, or returns the text for stdout.
pub fn emit(out: Option<&PathBuf>, text: String) -> CliResult<Option<String>> {
    match out {
        Some(path) => {
            fs::write(path, text).map_err(|e| CliError::io(path, e))?;
            Ok(None)
        }
        None => Ok(Some(text)),
    }
}

/// `p/q (decimal)` for exact values, the decimal alone for floats.
pub fn format_value<S: Scalar>(v: &ExtendedScalar<S>) -> String {
    match v {
        ExtendedScalar::Infinity => "inf".to_string(),
        ExtendedScalar::Finite(x) if S::EXACT => {
            format!("{} ({})", x.to_text(), format_significant(x.to_f64(), 10))
        }
        ExtendedScalar::Finite(x) => format_significant(x.to_f64(), 10),
    }
}

fn inline_scalar<S: Scalar>(token: &str) -> CliResult<S> {
    S::parse_scalar(token).ok_or_else(|| CliError::Usage(format!("invalid scalar `{token}`")))
}

pub fn cross_ratio<S: Scalar>(
    file: Option<&PathBuf>,
    values: &[String],
    tol: Tolerance,
) -> CliResult<String> {
    let value = match file {
        None => {
            let v = values
                .iter()
                .map(|t| inline_scalar::<S>(t))
                .collect::<CliResult<Vec<_>>>()?;
            cross_ratio_affine_within(&v[0], &v[1], &v[2], &v[3], tol)?
        }
        Some(path) => {
            let ctx = path.display().to_string();
            let records =
                formats::parse_points::<S>(&read(path)?).map_err(|e| CliError::parse(&ctx, e))?;
            if records.len() != 4 || records.iter().any(|r| r.kind != RecordKind::Point) {
                return Err(CliError::parse(
                    ctx,
                    ParseError {
                        line: 0,
                        message: "expected exactly four point records".into(),
                    },
                ));
            }
            let dim = records[0].coords.len();
            if let Some(bad) = records.iter().find(|r| r.coords.len() != dim) {
                return Err(CliError::parse(
                    ctx,
                    ParseError {
                        line: bad.line,
                        message: "all points need the same number of coordinates".into(),
                    },
                ));
            }
            if dim == 2 {
                let p: Vec<ProjPoint<S, 2>> = records
                    .iter()
                    .map(|r| {
                        ProjPoint::from_representative([r.coords[0].clone(), r.coords[1].clone()])
                    })
                    .collect::<Result<_, _>>()?;
                cross_ratio_rp1_within(&p[0], &p[1], &p[2], &p[3], tol)?
            } else {
                let p: Vec<ProjPoint<S, 3>> = records
                    .iter()
                    .map(|r| {
                        ProjPoint::from_representative([
                            r.coords[0].clone(),
                            r.coords[1].clone(),
                            r.coords[2].clone(),
                        ])
                    })
                    .collect::<Result<_, _>>()?;
                cross_ratio_collinear_within(&p[0], &p[1], &p[2], &p[3], tol)?
            }
        }
    };
    Ok(format!("{}\n", format_value(&value)))
}

pub struct TransformOutput {
    pub text: String,
    /// `label: proper→improper` style notes for points whose status changed.
    pub notes: Vec<String>,
}

pub fn transform<S: Scalar>(
    matrix: &Path,
    points: &Path,
    use_inverse: bool,
    tol: Tolerance,
) -> CliResult<TransformOutput> {
    let m = formats::parse_matrix::<S>(&read(matrix)?)
        .map_err(|e| CliError::parse(matrix.display().to_string(), e))?;
    let mut g = Homography::new_within(m, tol)?;
    if use_inverse {
        g = inverse(&g);
    }
    let ctx = points.display().to_string();
    let records =
        formats::parse_points::<S>(&read(points)?).map_err(|e| CliError::parse(&ctx, e))?;

    let mut out = Vec::with_capacity(records.len());
    let mut notes = Vec::new();
    for rec in records {
        let coords: [S; 3] = rec.coords.clone().try_into().map_err(|_| {
            CliError::parse(
                &ctx,
                ParseError {
                    line: rec.line,
                    message: "transform needs three homogeneous coordinates".into(),
                },
            )
        })?;
        let image = match rec.kind {
            RecordKind::Point => {
                let p = ProjPoint::new(coords)?;
                let q = act_point(&g, &p);
                let (before, after) = (is_proper_within(&p, tol), is_proper_within(&q, tol));
                if before != after {
                    let status = |proper: bool| if proper { "proper" } else { "improper" };
                    notes.push(format!(
                        "{}: {}→{}",
                        rec.label,
                        status(before),
                        status(after)
                    ));
                }
                q.coords().to_vec()
            }
            RecordKind::Line => act_line(&g, &ProjLine::new(coords)?).coords().to_vec(),
        };
        out.push(PointRecord {
            coords: image,
            ..rec
        });
    }
    Ok(TransformOutput {
        text: formats::write_points(&out),
        notes,
    })
}

fn parse_tuple<S: Scalar, const K: usize>(flag: &str, text: &str) -> CliResult<[S; K]> {
    let values = text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(inline_scalar::<S>)
        .collect::<CliResult<Vec<_>>>()?;
    values
        .try_into()
        .map_err(|_| CliError::Usage(format!("--{flag} expects {K} scalars, got `{text}`")))
}

pub struct RenderRequest<'a> {
    pub scene: &'a Path,
    pub center: &'a str,
    pub plane: &'a str,
    pub viewport: Viewport,
    pub options: RenderOptions,
}

pub fn render<S: Scalar>(req: &RenderRequest<'_>, tol: Tolerance) -> CliResult<String> {
    let scene = formats::parse_scene::<S>(&read(req.scene)?)
        .map_err(|e| CliError::parse(req.scene.display().to_string(), e))?;
    let center = Point3::from_array(parse_tuple::<S, 3>("center", req.center)?);
    let [a, b, c, d] = parse_tuple::<S, 4>("plane", req.plane)?;
    let plane = Plane3::new([a, b, c], d)?;
    let proj = CentralProjection::with_tolerance(center, plane, tol)?;
    let drawing = render_scene(&scene, &proj, &req.options)?;
    Ok(formats::drawing_to_svg(&drawing, &req.viewport))
}
