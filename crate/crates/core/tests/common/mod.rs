//! Independent oracles shared by the integration tests. They use only
//! brute-force definitions and never call the routines they check.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use slice_lab::arith::{Point, Rational};
use slice_lab::linalg::{dot, echelon};

pub fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| Rational::from_integer(BigInt::from(x))).collect()
}

pub fn r(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn half() -> Rational {
    r(1, 2)
}

/// Cube vertices on `a·x = 0` plus crossings of edges whose endpoints lie
/// strictly on opposite sides.
pub fn naive_slice_vertices(a: &[i64]) -> Vec<Point> {
    let n = a.len();
    let a = ints(a);
    let corner = |mask: usize| -> Point {
        (0..n)
            .map(|i| if mask >> i & 1 == 1 { half() } else { -half() })
            .collect()
    };
    let mut out: Vec<Point> = Vec::new();
    for mask in 0..(1usize << n) {
        let p = corner(mask);
        let fp = dot(&a, &p);
        if fp.is_zero() {
            out.push(p.clone());
        }
        for i in 0..n {
            if mask >> i & 1 == 1 {
                continue;
            }
            let q = corner(mask | 1 << i);
            let fq = dot(&a, &q);
            if (fp.is_positive() && fq.is_negative()) || (fp.is_negative() && fq.is_positive()) {
                let t = &fp / (&fp - &fq);
                out.push(p.iter().zip(&q).map(|(x, y)| x + (y - x) * &t).collect());
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Vertices of the convex hull of a full-dimensional point set in R^d.
///
/// Every facet-supporting hyperplane passes through d affinely independent
/// input points, so all of them are found by scanning d-subsets. A point is
/// a vertex iff the facet hyperplanes through it meet in that point alone.
/// Coordinates are scaled to a common denominator and handled as integers.
pub fn hull_vertices_oracle(points: &[Point]) -> Vec<Point> {
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    let d = pts[0].len();
    let denom = pts
        .iter()
        .flatten()
        .fold(BigInt::one(), |acc, x| num_integer::Integer::lcm(&acc, x.denom()));
    let scaled: Vec<Vec<i128>> = pts
        .iter()
        .map(|p| {
            p.iter()
                .map(|x| (x.numer() * (&denom / x.denom())).to_i128().expect("coordinates fit in i128"))
                .collect()
        })
        .collect();
    let mut facets: Vec<(Vec<i128>, i128)> = Vec::new();
    let mut subset = Vec::new();
    fn scan(pts: &[Vec<i128>], d: usize, start: usize, subset: &mut Vec<usize>, out: &mut Vec<(Vec<i128>, i128)>) {
        if subset.len() == d {
            let base = &pts[subset[0]];
            let rows: Vec<Vec<i128>> = subset[1..]
                .iter()
                .map(|&i| pts[i].iter().zip(base).map(|(a, b)| a - b).collect())
                .collect();
            let Some((normal, offset)) = hyperplane(&rows, base) else {
                return;
            };
            if out.contains(&(normal.clone(), offset)) {
                return;
            }
            let side = |p: &Vec<i128>| idot(&normal, p) - offset;
            if pts.iter().all(|p| side(p) <= 0) || pts.iter().all(|p| side(p) >= 0) {
                out.push((normal, offset));
            }
            return;
        }
        for i in start..pts.len() {
            subset.push(i);
            scan(pts, d, i + 1, subset, out);
            subset.pop();
        }
    }
    scan(&scaled, d, 0, &mut subset, &mut facets);
    pts.into_iter()
        .zip(&scaled)
        .filter(|(_, q)| {
            let through: Vec<Point> = facets
                .iter()
                .filter(|(nrm, off)| idot(nrm, q) == *off)
                .map(|(nrm, _)| nrm.iter().map(|&x| Rational::from_integer(BigInt::from(x))).collect())
                .collect();
            !through.is_empty() && echelon(&through).1.len() == d
        })
        .map(|(p, _)| p)
        .collect()
}

fn idot(a: &[i128], b: &[i128]) -> i128 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn idet(m: &[Vec<i128>]) -> i128 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        k => (0..k)
            .map(|j| {
                let minor: Vec<Vec<i128>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] * idet(&minor)
            })
            .sum(),
    }
}

/// Primitive normal of the hyperplane through `base` spanned by `rows`, with
/// its first nonzero entry positive, or `None` when the rows are dependent.
fn hyperplane(rows: &[Vec<i128>], base: &[i128]) -> Option<(Vec<i128>, i128)> {
    let d = base.len();
    let normal: Vec<i128> = (0..d)
        .map(|i| {
            let minor: Vec<Vec<i128>> = rows
                .iter()
                .map(|row| row.iter().enumerate().filter(|&(c, _)| c != i).map(|(_, &x)| x).collect())
                .collect();
            if i % 2 == 0 { idet(&minor) } else { -idet(&minor) }
        })
        .collect();
    let g = normal.iter().fold(0i128, |acc, &x| num_integer::Integer::gcd(&acc, &x));
    if g == 0 {
        return None;
    }
    let lead = *normal.iter().find(|&&x| x != 0).expect("nonzero normal");
    let normal: Vec<i128> = normal.iter().map(|&x| if lead < 0 { -x / g } else { x / g }).collect();
    let offset = idot(&normal, base);
    Some((normal, offset))
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Integer vector with entries in `lo..=hi`, not all zero.
pub fn random_normal(rng: &mut StdRng, n: usize, lo: i64, hi: i64) -> Vec<i64> {
    loop {
        let v: Vec<i64> = (0..n).map(|_| rng.gen_range(lo..=hi)).collect();
        if v.iter().any(|&x| x != 0) {
            return v;
        }
    }
}

/// Integer vector with entries in `lo..=hi`, not all zero.
pub fn normal_strategy(n: usize, lo: i64, hi: i64) -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(lo..=hi, n).prop_filter("nonzero", |v| v.iter().any(|&x| x != 0))
}

/// Entries in `1..=hi` with random signs.
pub fn nonzero_normal_strategy(n: usize, hi: i64) -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec((1..=hi, any::<bool>()), n)
        .prop_map(|v| v.into_iter().map(|(x, neg)| if neg { -x } else { x }).collect())
}

pub fn unit() -> Rational {
    Rational::one()
}
