//! Seeded random configurations for demonstrations and randomized checks.
//!
//! A [`Sampler`] is a ChaCha8 stream; `Sampler::split(seed, stream)` gives
//! independent, reproducible streams (one per trial) from a single seed.
//! Random rationals have numerator and denominator in `[-10, 10] \ {0}`.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::group::{Homography, Homography2};
use crate::homogeneous::{proj_equal, PointRp2, ProjPoint};
use crate::scalar::Scalar;

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Independent stream `stream` of `seed`.
    pub fn split(seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        Sampler { rng }
    }

    fn nonzero_small(&mut self) -> i64 {
        let v = self.rng.gen_range(1..=10);
        if self.rng.gen_bool(0.5) {
            -v
        } else {
            v
        }
    }

    /// `p / q` with `p, q` in `[-10, 10] \ {0}`.
    pub fn rational<S: Scalar>(&mut self) -> S {
        S::from_ratio(self.nonzero_small(), self.nonzero_small())
    }

    /// Like [`Sampler::rational`] but zero with probability `1/5`.
    pub fn rational_or_zero<S: Scalar>(&mut self) -> S {
        if self.rng.gen_ratio(1, 5) {
            S::zero()
        } else {
            self.rational()
        }
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn point<S: Scalar>(&mut self) -> PointRp2<S> {
        loop {
            let c = [
                self.rational_or_zero(),
                self.rational_or_zero(),
                self.rational_or_zero(),
            ];
            if let Ok(p) = ProjPoint::new(c) {
                return p;
            }
        }
    }

    pub fn homography<S: Scalar>(&mut self) -> Homography2<S> {
        loop {
            let m = std::array::from_fn(|_| std::array::from_fn(|_| self.rational_or_zero()));
            if let Ok(h) = Homography::new(m) {
                return h;
            }
        }
    }

    /// Four distinct collinear points `alpha_i P + beta_i Q` on the line
    /// through two random distinct points.
    pub fn collinear_quadruple<S: Scalar>(&mut self) -> [PointRp2<S>; 4] {
        let p = self.point::<S>();
        let q = loop {
            let q = self.point::<S>();
            if !proj_equal(&p, &q) {
                break q;
            }
        };
        let mut params: Vec<ProjPoint<S, 2>> = Vec::with_capacity(4);
        while params.len() < 4 {
            let Ok(t) = ProjPoint::new([self.rational_or_zero(), self.rational_or_zero()]) else {
                continue;
            };
            if params.iter().all(|s| !proj_equal(s, &t)) {
                params.push(t);
            }
        }
        let combine = |t: &ProjPoint<S, 2>| {
            let [a, b] = t.coords().clone();
            let c = std::array::from_fn(|i| {
                a.clone() * p.coords()[i].clone() + b.clone() * q.coords()[i].clone()
            });
            ProjPoint::new(c).expect("independent basis")
        };
        [
            combine(&params[0]),
            combine(&params[1]),
            combine(&params[2]),
            combine(&params[3]),
        ]
    }
}
