#![allow(dead_code)]

use projgeo::{Homography, Homography2, PointRp2, ProjPoint, Rational, Scalar};
use proptest::prelude::*;

pub fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=12).prop_map(|(n, d)| Rational::from_ratio(n, d))
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |v| !v.is_zero())
}

pub fn coords3() -> impl Strategy<Value = [Rational; 3]> {
    [rational(), rational(), rational()]
        .prop_filter("nonzero vector", |c| !c.iter().all(Scalar::is_zero))
}

pub fn point() -> impl Strategy<Value = PointRp2<Rational>> {
    coords3().prop_map(|c| ProjPoint::from_representative(c).unwrap())
}

pub fn homography() -> impl Strategy<Value = Homography2<Rational>> {
    [coords3(), coords3(), coords3()].prop_filter_map("singular", |rows| {
        Homography::from_representative(rows).ok()
    })
}

pub fn q(n: i64, d: i64) -> Rational {
    Rational::from_ratio(n, d)
}
