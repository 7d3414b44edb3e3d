//! Small dense helpers over generic scalars. Division free throughout, so
//! the exact backend never leaves the integers it was handed unless asked.

use crate::scalar::Scalar;

pub type Matrix<S, const N: usize> = [[S; N]; N];

pub fn dot<S: Scalar>(a: &[S], b: &[S]) -> S {
    a.iter()
        .zip(b)
        .fold(S::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

pub fn cross<S: Scalar>(a: &[S; 3], b: &[S; 3]) -> [S; 3] {
    [
        a[1].clone() * b[2].clone() - a[2].clone() * b[1].clone(),
        a[2].clone() * b[0].clone() - a[0].clone() * b[2].clone(),
        a[0].clone() * b[1].clone() - a[1].clone() * b[0].clone(),
    ]
}

pub fn det2<S: Scalar>(a: &S, b: &S, c: &S, d: &S) -> S {
    a.clone() * d.clone() - b.clone() * c.clone()
}

pub fn det3<S: Scalar>(a: &[S; 3], b: &[S; 3], c: &[S; 3]) -> S {
    dot(a, &cross(b, c))
}

/// Determinant by cofactor expansion along the first row.
pub fn det<S: Scalar>(m: &[Vec<S>]) -> S {
    match m.len() {
        0 => S::one(),
        1 => m[0][0].clone(),
        2 => det2(&m[0][0], &m[0][1], &m[1][0], &m[1][1]),
        n => {
            let mut acc = S::zero();
            for col in 0..n {
                if m[0][col].is_zero() {
                    continue;
                }
                let term = m[0][col].clone() * det(&minor(m, 0, col));
                acc = if col % 2 == 0 { acc + term } else { acc - term };
            }
            acc
        }
    }
}

fn minor<S: Scalar>(m: &[Vec<S>], skip_row: usize, skip_col: usize) -> Vec<Vec<S>> {
    m.iter()
        .enumerate()
        .filter(|(r, _)| *r != skip_row)
        .map(|(_, row)| {
            row.iter()
                .enumerate()
                .filter(|(c, _)| *c != skip_col)
                .map(|(_, v)| v.clone())
                .collect()
        })
        .collect()
}

fn to_rows<S: Scalar, const N: usize>(m: &Matrix<S, N>) -> Vec<Vec<S>> {
    m.iter().map(|r| r.to_vec()).collect()
}

pub fn det_n<S: Scalar, const N: usize>(m: &Matrix<S, N>) -> S {
    det(&to_rows(m))
}

/// Cofactor matrix `C` with `C[i][j] = (-1)^(i+j) * det(minor(i, j))`.
pub fn cofactor<S: Scalar, const N: usize>(m: &Matrix<S, N>) -> Matrix<S, N> {
    if N == 1 {
        return std::array::from_fn(|_| std::array::from_fn(|_| S::one()));
    }
    let rows = to_rows(m);
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let d = det(&minor(&rows, i, j));
            if (i + j) % 2 == 0 {
                d
            } else {
                -d
            }
        })
    })
}

pub fn transpose<S: Scalar, const N: usize>(m: &Matrix<S, N>) -> Matrix<S, N> {
    std::array::from_fn(|i| std::array::from_fn(|j| m[j][i].clone()))
}

/// `adj(m) * m = det(m) * I`.
pub fn adjugate<S: Scalar, const N: usize>(m: &Matrix<S, N>) -> Matrix<S, N> {
    transpose(&cofactor(m))
}

pub fn mat_mul<S: Scalar, const N: usize>(a: &Matrix<S, N>, b: &Matrix<S, N>) -> Matrix<S, N> {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            (0..N).fold(S::zero(), |acc, k| acc + a[i][k].clone() * b[k][j].clone())
        })
    })
}

pub fn mat_vec<S: Scalar, const N: usize>(m: &Matrix<S, N>, v: &[S; N]) -> [S; N] {
    std::array::from_fn(|i| dot(&m[i], v))
}

pub fn identity<S: Scalar, const N: usize>() -> Matrix<S, N> {
    std::array::from_fn(|i| std::array::from_fn(|j| if i == j { S::one() } else { S::zero() }))
}
