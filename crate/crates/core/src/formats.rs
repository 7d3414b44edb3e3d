//! Text formats read and written by the command-line tool.
//!
//! All formats are line oriented, whitespace separated, and treat `#` as the
//! start of a comment. Scalars are decimals (`-1.25`, `3e-2`) or rationals
//! `p/q`.
//!
//! * points: `label x1 x2 [x3]`; lines of the plane: `line label u1 u2 u3`
//! * matrices: three rows of three scalars
//! * scenes: `v x y z [label]`, `e i j` (0-based), `d x y z`

use std::fmt::Write as _;

use thiserror::Error;

use crate::error::GeomError;
use crate::perspective::{Drawing, Point3, Scene};
use crate::scalar::{format_significant, Scalar};

#[derive(Debug, Clone, PartialEq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    /// 1-based line number; 0 when the error concerns the file as a whole.
    pub line: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            message: message.into(),
        }
    }
}

/// Non-empty, comment-stripped lines with their 1-based numbers.
fn records(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        (!tokens.is_empty()).then_some((i + 1, tokens))
    })
}

fn scalar<S: Scalar>(line: usize, token: &str) -> Result<S, ParseError> {
    S::parse_scalar(token).ok_or_else(|| ParseError::new(line, format!("invalid scalar `{token}`")))
}

fn scalars<S: Scalar>(line: usize, tokens: &[&str]) -> Result<Vec<S>, ParseError> {
    tokens.iter().map(|t| scalar(line, t)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RecordKind {
    Point,
    Line,
}

/// One entry of a points file.
#[derive(Clone, Debug, PartialEq)]
pub struct PointRecord<S> {
    pub kind: RecordKind,
    pub label: String,
    pub coords: Vec<S>,
    /// Source line, for error reporting.
    pub line: usize,
}

pub fn parse_points<S: Scalar>(text: &str) -> Result<Vec<PointRecord<S>>, ParseError> {
    records(text)
        .map(|(line, tokens)| {
            let (kind, rest) = if tokens[0] == "line" {
                (RecordKind::Line, &tokens[1..])
            } else {
                (RecordKind::Point, &tokens[..])
            };
            let Some((label, values)) = rest.split_first() else {
                return Err(ParseError::new(line, "missing label"));
            };
            let coords = scalars(line, values)?;
            let expected: &[usize] = match kind {
                RecordKind::Point => &[2, 3],
                RecordKind::Line => &[3],
            };
            if !expected.contains(&coords.len()) {
                return Err(ParseError::new(
                    line,
                    format!("expected {expected:?} coordinates, found {}", coords.len()),
                ));
            }
            if coords.iter().all(Scalar::is_zero) {
                return Err(ParseError::new(line, GeomError::ZeroVector.to_string()));
            }
            Ok(PointRecord {
                kind,
                label: label.to_string(),
                coords,
                line,
            })
        })
        .collect()
}

pub fn write_points<S: Scalar>(records: &[PointRecord<S>]) -> String {
    let mut out = String::new();
    for rec in records {
        if rec.kind == RecordKind::Line {
            out.push_str("line ");
        }
        out.push_str(&rec.label);
        for c in &rec.coords {
            out.push(' ');
            out.push_str(&c.to_text());
        }
        out.push('\n');
    }
    out
}

pub fn parse_matrix<S: Scalar>(text: &str) -> Result<[[S; 3]; 3], ParseError> {
    let rows: Vec<(usize, Vec<&str>)> = records(text).collect();
    if rows.len() != 3 {
        return Err(ParseError::new(
            rows.get(3).map_or(0, |r| r.0),
            format!("expected 3 matrix rows, found {}", rows.len()),
        ));
    }
    let mut parsed = Vec::with_capacity(3);
    for (line, tokens) in rows {
        if tokens.len() != 3 {
            return Err(ParseError::new(
                line,
                format!("expected 3 entries, found {}", tokens.len()),
            ));
        }
        let row: [S; 3] = scalars(line, &tokens)?.try_into().expect("three entries");
        parsed.push(row);
    }
    Ok(parsed.try_into().expect("three rows"))
}

pub fn write_matrix<S: Scalar>(m: &[[S; 3]; 3]) -> String {
    m.iter()
        .map(|row| {
            row.iter()
                .map(Scalar::to_text)
                .collect::<Vec<_>>()
                .join(" ")
                + "\n"
        })
        .collect()
}

pub fn parse_scene<S: Scalar>(text: &str) -> Result<Scene<S>, ParseError> {
    let mut vertices = Vec::new();
    let mut labels = Vec::new();
    let mut edges = Vec::new();
    let mut edge_lines = Vec::new();
    let mut directions = Vec::new();
    for (line, tokens) in records(text) {
        match tokens[0] {
            "v" => {
                if !(4..=5).contains(&tokens.len()) {
                    return Err(ParseError::new(line, "vertex record is `v x y z [label]`"));
                }
                let c = scalars::<S>(line, &tokens[1..4])?;
                vertices.push(Point3::from_array(c.try_into().expect("three coordinates")));
                labels.push(tokens.get(4).map(|s| s.to_string()));
            }
            "e" => {
                if tokens.len() != 3 {
                    return Err(ParseError::new(line, "edge record is `e i j`"));
                }
                let index = |t: &str| {
                    t.parse::<usize>()
                        .map_err(|_| ParseError::new(line, format!("invalid vertex index `{t}`")))
                };
                edges.push((index(tokens[1])?, index(tokens[2])?));
                edge_lines.push(line);
            }
            "d" => {
                if tokens.len() != 4 {
                    return Err(ParseError::new(line, "direction record is `d x y z`"));
                }
                let c: [S; 3] = scalars::<S>(line, &tokens[1..4])?
                    .try_into()
                    .expect("three coordinates");
                if c.iter().all(Scalar::is_zero) {
                    return Err(ParseError::new(line, "zero direction"));
                }
                directions.push(c);
            }
            other => return Err(ParseError::new(line, format!("unknown record `{other}`"))),
        }
    }
    Scene::with_labels(vertices, labels, edges, directions).map_err(|e| match e {
        GeomError::InvalidEdge { index, .. } => ParseError::new(edge_lines[index], e.to_string()),
        other => ParseError::new(0, other.to_string()),
    })
}

/// Pixel viewport for SVG output. Chart coordinates `(s, r)` map to
/// `(width/2 + scale*s, height/2 - scale*r)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Viewport {
    pub width: f64,
    pub height: f64,
    pub scale: f64,
}

impl Default for Viewport {
    fn default() -> Self {
        Viewport {
            width: 800.0,
            height: 600.0,
            scale: 200.0,
        }
    }
}

impl Viewport {
    pub fn to_pixels(&self, p: [f64; 2]) -> [f64; 2] {
        [
            self.width / 2.0 + self.scale * p[0],
            self.height / 2.0 - self.scale * p[1],
        ]
    }
}

/// SVG number: nine significant digits.
pub fn svg_num(x: f64) -> String {
    format_significant(x, 9)
}

pub fn svg_header(view: &Viewport) -> String {
    let (w, h) = (svg_num(view.width), svg_num(view.height));
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">\n\
         <rect width=\"{w}\" height=\"{h}\" fill=\"white\"/>\n"
    )
}

/// One `line` element per segment and one `circle` per marker.
pub fn drawing_to_svg(drawing: &Drawing, view: &Viewport) -> String {
    let mut out = svg_header(view);
    for seg in &drawing.segments {
        let [x1, y1] = view.to_pixels(seg.from);
        let [x2, y2] = view.to_pixels(seg.to);
        let _ = writeln!(
            out,
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\" stroke-width=\"1\"/>",
            svg_num(x1),
            svg_num(y1),
            svg_num(x2),
            svg_num(y2)
        );
    }
    for m in &drawing.markers {
        let [cx, cy] = view.to_pixels(*m);
        let _ = writeln!(
            out,
            "<circle cx=\"{}\" cy=\"{}\" r=\"4\" fill=\"red\"/>",
            svg_num(cx),
            svg_num(cy)
        );
    }
    out.push_str("</svg>\n");
    out
}
