mod common;

use common::*;
use projgeo::*;
use proptest::prelude::*;

fn distinct4() -> impl Strategy<Value = [Rational; 4]> {
    [rational(), rational(), rational(), rational()].prop_filter("pairwise distinct", |v| {
        (0..4).all(|i| (i + 1..4).all(|j| v[i] != v[j]))
    })
}

/// Affine shortcut evaluated term by term, straight from the definition.
fn affine_oracle(v: &[Rational; 4]) -> Rational {
    let [a, b, c, d] = v.clone();
    (c.clone() - a.clone()) / (c - b.clone()) * ((d.clone() - b) / (d - a))
}

/// Collinear quadruple `alpha_i P + beta_i Q` from distinct parameters.
fn collinear() -> impl Strategy<Value = [PointRp2<Rational>; 4]> {
    (
        point(),
        point(),
        [coords2(), coords2(), coords2(), coords2()],
    )
        .prop_filter_map(
            "need distinct basis and distinct parameters",
            |(p, q, params)| {
                if proj_equal(&p, &q) {
                    return None;
                }
                let ts: Vec<PointRp1<Rational>> = params
                    .iter()
                    .map(|t| ProjPoint::new(t.clone()).unwrap())
                    .collect();
                if (0..4).any(|i| (i + 1..4).any(|j| proj_equal(&ts[i], &ts[j]))) {
                    return None;
                }
                let pts: Vec<PointRp2<Rational>> = ts
                    .iter()
                    .map(|t| {
                        let [a, b] = t.coords().clone();
                        let c = std::array::from_fn(|i| {
                            a.clone() * p.coords()[i].clone() + b.clone() * q.coords()[i].clone()
                        });
                        ProjPoint::from_representative(c).unwrap()
                    })
                    .collect();
                Some(pts.try_into().unwrap())
            },
        )
}

fn coords2() -> impl Strategy<Value = [Rational; 2]> {
    [rational(), rational()].prop_filter("nonzero", |c| !c.iter().all(Scalar::is_zero))
}

fn cross3(a: &[Rational; 3], b: &[Rational; 3]) -> [Rational; 3] {
    [
        a[1].clone() * b[2].clone() - a[2].clone() * b[1].clone(),
        a[2].clone() * b[0].clone() - a[0].clone() * b[2].clone(),
        a[0].clone() * b[1].clone() - a[1].clone() * b[0].clone(),
    ]
}

fn dot3(a: &[Rational; 3], b: &[Rational; 3]) -> Rational {
    a[0].clone() * b[0].clone() + a[1].clone() * b[1].clone() + a[2].clone() * b[2].clone()
}

/// Re-parametrize on basis (b1, b2) with cross products:
/// `x = alpha b1 + beta b2` gives `x × b2 = alpha (b1 × b2)` and
/// `b1 × x = beta (b1 × b2)`.
fn reparam(
    b1: &PointRp2<Rational>,
    b2: &PointRp2<Rational>,
    x: &PointRp2<Rational>,
) -> PointRp1<Rational> {
    let n = cross3(b1.coords(), b2.coords());
    let alpha = dot3(&cross3(x.coords(), b2.coords()), &n);
    let beta = dot3(&cross3(b1.coords(), x.coords()), &n);
    ProjPoint::from_representative([alpha, beta]).unwrap()
}

fn value(v: Result<ExtendedScalar<Rational>>) -> Rational {
    v.unwrap().finite().cloned().expect("finite cross-ratio")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn determinant_and_affine_forms_agree(v in distinct4()) {
        let pts = v.clone().map(|x| from_affine::<_, 2>(&[x]));
        let det_form = value(cross_ratio_rp1(&pts[0], &pts[1], &pts[2], &pts[3]));
        let affine = value(cross_ratio_affine(&v[0], &v[1], &v[2], &v[3]));
        prop_assert_eq!(&det_form, &affine);
        prop_assert_eq!(affine, affine_oracle(&v));
    }

    #[test]
    fn invariant_under_homographies(pts in collinear(), g in homography()) {
        let before = cross_ratio_collinear(&pts[0], &pts[1], &pts[2], &pts[3]).unwrap();
        let img = pts.clone().map(|p| act_point(&g, &p));
        let after = cross_ratio_collinear(&img[0], &img[1], &img[2], &img[3]).unwrap();
        prop_assert_eq!(before, after);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn representative_independence(pts in collinear(), ks in [nonzero_rational(), nonzero_rational(), nonzero_rational(), nonzero_rational()]) {
        let base = cross_ratio_collinear(&pts[0], &pts[1], &pts[2], &pts[3]).unwrap();
        let r: Vec<_> = pts.iter().zip(&ks).map(|(p, k)| p.rescaled(k).unwrap()).collect();
        prop_assert_eq!(base, cross_ratio_collinear(&r[0], &r[1], &r[2], &r[3]).unwrap());
    }

    #[test]
    fn symmetry_identities(v in distinct4()) {
        let [a, b, c, d] = v.map(|x| from_affine::<_, 2>(&[x]));
        let cr = |w: &PointRp1<Rational>, x: &PointRp1<Rational>, y: &PointRp1<Rational>, z: &PointRp1<Rational>| {
            value(cross_ratio_rp1(w, x, y, z))
        };
        let lambda = cr(&a, &b, &c, &d);
        prop_assert_eq!(&cr(&b, &a, &d, &c), &lambda);
        prop_assert_eq!(&cr(&c, &d, &a, &b), &lambda);
        prop_assert!(!lambda.is_zero());
        prop_assert_eq!(cr(&a, &b, &d, &c), Rational::from_i64(1) / lambda.clone());
        prop_assert_eq!(cr(&a, &c, &b, &d), Rational::from_i64(1) - lambda);
    }

    #[test]
    fn basis_independence(pts in collinear()) {
        let ours = cross_ratio_collinear(&pts[0], &pts[1], &pts[2], &pts[3]).unwrap();
        let params: Vec<_> = pts.iter().map(|p| reparam(&pts[1], &pts[2], p)).collect();
        let other = cross_ratio_rp1(&params[0], &params[1], &params[2], &params[3]).unwrap();
        prop_assert_eq!(ours, other);
    }

    #[test]
    fn swap_symmetry_on_collinear_points(pts in collinear()) {
        let a = cross_ratio_collinear(&pts[0], &pts[1], &pts[2], &pts[3]).unwrap();
        let b = cross_ratio_collinear(&pts[1], &pts[0], &pts[3], &pts[2]).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn chart_axis_points_reduce_to_affine(v in distinct4(), y in rational()) {
        // the horizontal line y = const in the chart
        let pts = v.clone().map(|x| from_affine::<_, 3>(&[x, y.clone()]));
        let on_line = value(cross_ratio_collinear(&pts[0], &pts[1], &pts[2], &pts[3]));
        prop_assert_eq!(on_line, affine_oracle(&v));
    }

    #[test]
    fn collinearity_of_pencil_points(p in point(), q in point(), a in rational(), b in rational()) {
        prop_assume!(!proj_equal(&p, &q) && !(a.is_zero() && b.is_zero()));
        let c = std::array::from_fn(|i| a.clone() * p.coords()[i].clone() + b.clone() * q.coords()[i].clone());
        let x = ProjPoint::from_representative(c).unwrap();
        prop_assert!(is_collinear(&p, &q, &x));
    }
}

#[test]
fn frozen_values() {
    // (0,1,2,3): (2/1)(2/3) = 4/3 ; (0,1,3,10): (3/2)(9/10) = 27/20
    assert_eq!(
        affine_oracle(&[0, 1, 2, 3].map(Rational::from_i64)),
        q(4, 3)
    );
    assert_eq!(
        affine_oracle(&[0, 1, 3, 10].map(Rational::from_i64)),
        q(27, 20)
    );
    let a = [0, 1, 3, 10].map(Rational::from_i64);
    assert_eq!(
        value(cross_ratio_affine(&a[0], &a[1], &a[2], &a[3])),
        q(27, 20)
    );
}

#[test]
fn float_invariance_is_close() {
    let mut s = sample::Sampler::new(11);
    for _ in 0..200 {
        let pts = s.collinear_quadruple::<f64>();
        let g = s.homography::<f64>();
        let img = pts.clone().map(|p| act_point(&g, &p));
        let a = cross_ratio_collinear(&pts[0], &pts[1], &pts[2], &pts[3]).unwrap();
        let b = cross_ratio_collinear(&img[0], &img[1], &img[2], &img[3]).unwrap();
        assert!(a.approx_eq(&b, Tolerance::new(1e-6)), "{a} vs {b}");
    }
}
