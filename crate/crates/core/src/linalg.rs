//! Small exact linear algebra over the rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{gcd_all, Point, Rational};

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn sub(a: &[Rational], b: &[Rational]) -> Point {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add(a: &[Rational], b: &[Rational]) -> Point {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn scale(a: &[Rational], k: &Rational) -> Point {
    a.iter().map(|x| x * k).collect()
}

pub fn neg(a: &[Rational]) -> Point {
    a.iter().map(|x| -x).collect()
}

pub fn is_zero(a: &[Rational]) -> bool {
    a.iter().all(Zero::is_zero)
}

pub fn zeros(n: usize) -> Point {
    vec![Rational::zero(); n]
}

pub fn midpoint(a: &[Rational], b: &[Rational]) -> Point {
    let h = Rational::new(BigInt::one(), BigInt::from(2));
    a.iter().zip(b).map(|(x, y)| (x + y) * &h).collect()
}

pub fn cross3(a: &[Rational], b: &[Rational]) -> Point {
    vec![
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

pub fn det3(a: &[Rational], b: &[Rational], c: &[Rational]) -> Rational {
    dot(a, &cross3(b, c))
}

/// Row-echelon reduction; returns the nonzero reduced rows and pivot columns.
pub fn echelon(rows: &[Point]) -> (Vec<Point>, Vec<usize>) {
    let mut m: Vec<Point> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        m[r] = scale(&m[r], &inv);
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let pivot_row = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank(rows: &[Point]) -> usize {
    echelon(rows).1.len()
}

/// Basis of `{ x : row · x = 0 for every row }`.
pub fn nullspace(rows: &[Point], ncols: usize) -> Vec<Point> {
    let (reduced, pivots) = echelon(rows);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = zeros(ncols);
            v[f] = Rational::one();
            for (row, &p) in reduced.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

/// Unique solution of `A x = b` (A given by rows), or `None` when the system
/// is inconsistent or underdetermined.
pub fn solve_unique(a: &[Point], b: &[Rational], ncols: usize) -> Option<Point> {
    let augmented: Vec<Point> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let (reduced, pivots) = echelon(&augmented);
    if pivots.contains(&ncols) || pivots.len() != ncols {
        return None;
    }
    let mut x = zeros(ncols);
    for (row, &p) in reduced.iter().zip(&pivots) {
        x[p] = row[ncols].clone();
    }
    Some(x)
}

/// Affine dimension of a point set (-1 is reported as 0 for the empty set).
pub fn affine_dimension(points: &[Point]) -> usize {
    match points.split_first() {
        None => 0,
        Some((first, rest)) => {
            let diffs: Vec<Point> = rest.iter().map(|p| sub(p, first)).collect();
            rank(&diffs)
        }
    }
}

/// Positive multiple of `v` that is a primitive integer vector.
pub fn primitive_integer(v: &[Rational]) -> Vec<BigInt> {
    let lcm = v
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v
        .iter()
        .map(|x| x.numer() * (&lcm / x.denom()))
        .collect();
    let g = gcd_all(&ints);
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

pub fn to_rationals(v: &[BigInt]) -> Point {
    v.iter().map(|x| Rational::from_integer(x.clone())).collect()
}

pub fn abs_max_index(v: &[Rational]) -> Option<usize> {
    let mut best: Option<usize> = None;
    for (i, x) in v.iter().enumerate() {
        match best {
            Some(b) if v[b].abs() >= x.abs() => {}
            _ if x.is_zero() => {}
            _ => best = Some(i),
        }
    }
    best
}
