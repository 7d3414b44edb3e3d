//! `demo-invariance`: random quadruples pushed through random homographies.

use std::fmt::Write as _;

use projgeo::formats::{svg_header, svg_num, Viewport};
use projgeo::sample::Sampler;
use projgeo::{
    act_point, cross_ratio_collinear_within, from_affine, join, meet, to_affine_chart,
    ExtendedScalar, Homography, PointRp2, Rational, Scalar, Tolerance,
};

use crate::commands::format_value;
use crate::error::{CliError, CliResult};

/// Tolerance for comparing float cross-ratios when `--epsilon` is absent.
pub const FLOAT_COMPARE_EPS: f64 = 1e-6;

pub struct DemoReport {
    pub text: String,
    pub failure: Option<String>,
}

fn same<S: Scalar>(a: &ExtendedScalar<S>, b: &ExtendedScalar<S>, compare: Tolerance) -> bool {
    if S::EXACT {
        a == b
    } else {
        a.approx_eq(b, compare)
    }
}

fn chart_point<S: Scalar>(x: i64) -> PointRp2<S> {
    from_affine(&[S::from_i64(x), S::zero()])
}

/// The worked example: 0, 1, 3, 10 on the x-axis and their translates by 1.
fn figure_line<S: Scalar>(tol: Tolerance, compare: Tolerance) -> CliResult<(String, bool)> {
    let (o, z) = (S::one(), S::zero());
    let shift = Homography::new_within(
        [
            [o.clone(), z.clone(), o.clone()],
            [z.clone(), o.clone(), z.clone()],
            [z.clone(), z, o],
        ],
        tol,
    )?;
    let pts = [0, 1, 3, 10].map(chart_point::<S>);
    let imgs = pts.clone().map(|p| act_point(&shift, &p));
    let before = cross_ratio_collinear_within(&pts[0], &pts[1], &pts[2], &pts[3], tol)?;
    let after = cross_ratio_collinear_within(&imgs[0], &imgs[1], &imgs[2], &imgs[3], tol)?;
    let ok = same(&before, &after, compare);
    let line = format!(
        "figure: (0, 1, 3, 10) -> (1, 2, 4, 11): {} vs {} {}\n",
        format_value(&before),
        format_value(&after),
        if ok { "ok" } else { "MISMATCH" }
    );
    Ok((line, ok))
}

pub fn run<S: Scalar>(
    seed: u64,
    trials: u64,
    tol: Tolerance,
    compare: Tolerance,
) -> CliResult<DemoReport> {
    let (mut text, figure_ok) = figure_line::<S>(tol, compare)?;
    let mut failure = (!figure_ok).then(|| "figure example".to_string());
    let mut passed = 0u64;
    for i in 0..trials {
        let mut rng = Sampler::split(seed, i);
        let quad = rng.collinear_quadruple::<S>();
        let g = rng.homography::<S>();
        let imgs = quad.clone().map(|p| act_point(&g, &p));
        let before = cross_ratio_collinear_within(&quad[0], &quad[1], &quad[2], &quad[3], tol);
        let after = cross_ratio_collinear_within(&imgs[0], &imgs[1], &imgs[2], &imgs[3], tol);
        let verdict = match (&before, &after) {
            (Ok(b), Ok(a)) if same(b, a, compare) => {
                passed += 1;
                let _ = writeln!(text, "trial {i}: {} ok", format_value(b));
                continue;
            }
            (Ok(b), Ok(a)) => format!("{} vs {}", format_value(b), format_value(a)),
            (Err(e), _) | (_, Err(e)) => e.to_string(),
        };
        let _ = writeln!(text, "trial {i}: FAIL {verdict}");
        if failure.is_none() {
            let pts: Vec<String> = quad.iter().map(|p| format!("{p:?}")).collect();
            failure = Some(format!(
                "trial {i}: {verdict}; points {}; matrix {:?}",
                pts.join(", "),
                g.matrix()
            ));
        }
    }
    let status = if failure.is_none() { "PASS" } else { "FAIL" };
    let _ = writeln!(text, "{passed}/{trials} {status}");
    Ok(DemoReport { text, failure })
}

pub fn finish(report: DemoReport) -> CliResult<String> {
    match report.failure {
        None => Ok(report.text),
        Some(f) => {
            print!("{}", report.text);
            Err(CliError::Verification(f))
        }
    }
}

fn chart(p: &PointRp2<Rational>) -> [f64; 2] {
    let v = to_affine_chart(p).expect("figure points are proper");
    [v[0].to_f64(), v[1].to_f64()]
}

/// SVG of a perspectivity between two lines of the plane: 0, 1, 3, 10 on
/// the x-axis seen from `(-3, 5)` on the line through `(-4, 2)` and `(6, 3)`.
/// Both quadruples are annotated with their (equal) cross-ratios.
pub fn figure_svg() -> CliResult<String> {
    let q = |x: i64, y: i64| {
        from_affine::<Rational, 3>(&[Rational::from_i64(x), Rational::from_i64(y)])
    };
    let center = q(-3, 5);
    let source = [0, 1, 3, 10].map(|x| q(x, 0));
    let target = join(&q(-4, 2), &q(6, 3))?;
    let mut image = Vec::with_capacity(4);
    for p in &source {
        image.push(meet(&join(&center, p)?, &target)?);
    }
    let cr_src = cross_ratio_collinear_within(
        &source[0],
        &source[1],
        &source[2],
        &source[3],
        Tolerance::default(),
    )?;
    let cr_img = cross_ratio_collinear_within(
        &image[0],
        &image[1],
        &image[2],
        &image[3],
        Tolerance::default(),
    )?;

    let o = chart(&center);
    let src: Vec<[f64; 2]> = source.iter().map(chart).collect();
    let img: Vec<[f64; 2]> = image.iter().map(chart).collect();

    let all: Vec<[f64; 2]> = src.iter().chain(&img).copied().chain([o]).collect();
    let (mut lo, mut hi) = ([f64::INFINITY; 2], [f64::NEG_INFINITY; 2]);
    for p in &all {
        for k in 0..2 {
            lo[k] = lo[k].min(p[k]);
            hi[k] = hi[k].max(p[k]);
        }
    }
    let (width, height, pad) = (800.0, 600.0, 60.0);
    let scale = ((width - 2.0 * pad) / (hi[0] - lo[0])).min((height - 2.0 * pad) / (hi[1] - lo[1]));
    let view = Viewport {
        width,
        height,
        scale,
    };
    let mid = [(lo[0] + hi[0]) / 2.0, (lo[1] + hi[1]) / 2.0];
    let px = |p: [f64; 2]| view.to_pixels([p[0] - mid[0], p[1] - mid[1]]);

    let mut out = svg_header(&view);
    let mut line = |a: [f64; 2], b: [f64; 2], stroke: &str| {
        let ([x1, y1], [x2, y2]) = (px(a), px(b));
        let _ = writeln!(
            out,
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{stroke}\" stroke-width=\"1\"/>",
            svg_num(x1),
            svg_num(y1),
            svg_num(x2),
            svg_num(y2)
        );
    };
    let first_last = |v: &[[f64; 2]]| {
        let mut s = v.to_vec();
        s.sort_by(|a, b| a[0].total_cmp(&b[0]));
        (s[0], s[s.len() - 1])
    };
    let (a, b) = first_last(&src);
    line(a, b, "black");
    let (a, b) = first_last(&img);
    line(a, b, "black");
    for (s, i) in src.iter().zip(&img) {
        // The ray from the center through the source point, past its image if needed.
        let far = if (s[0] - o[0]).abs() >= (i[0] - o[0]).abs() {
            *s
        } else {
            *i
        };
        line(o, far, "gray");
    }

    let mut dot = |p: [f64; 2], label: &str, fill: &str| {
        let [x, y] = px(p);
        let _ = writeln!(
            out,
            "<circle cx=\"{}\" cy=\"{}\" r=\"4\" fill=\"{fill}\"/>",
            svg_num(x),
            svg_num(y)
        );
        let _ = writeln!(
            out,
            "<text x=\"{}\" y=\"{}\" font-size=\"14\">{label}</text>",
            svg_num(x + 6.0),
            svg_num(y - 6.0)
        );
    };
    dot(o, "O", "black");
    for (k, name) in ["A", "B", "C", "D"].iter().enumerate() {
        dot(src[k], name, "red");
        dot(img[k], &format!("{name}\u{2032}"), "blue");
    }
    let _ = writeln!(
        out,
        "<text x=\"20\" y=\"{}\" font-size=\"16\">(A, B; C, D) = {}</text>",
        svg_num(height - 40.0),
        cr_src
    );
    let _ = writeln!(
        out,
        "<text x=\"20\" y=\"{}\" font-size=\"16\">(A\u{2032}, B\u{2032}; C\u{2032}, D\u{2032}) = {}</text>",
        svg_num(height - 18.0),
        cr_img
    );
    out.push_str("</svg>\n");
    Ok(out)
}
