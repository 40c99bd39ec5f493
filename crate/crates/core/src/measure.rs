//! Exact areas of embedded polygons and exact volumes of slices.
//!
//! Every measure is the true Euclidean one in the body's own affine hull, so
//! a slice volume is the (n−1)-volume with respect to the unit normal.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::arith::{Point, Rational, SurdValue};
use crate::error::GeometryError;
use crate::faces::{facets_3d, Polygon};
use crate::linalg::{self, det3, sub};
use crate::slice::CubeSlice;

/// An exact area split into its coordinate-chart part and the metric factor
/// of the chart projection: `value = chart_area · scale_factor`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AreaValue {
    pub value: SurdValue,
    pub chart_area: Rational,
    pub scale_factor: SurdValue,
    pub chart: (usize, usize),
}

impl AreaValue {
    pub fn zero() -> Self {
        AreaValue {
            value: SurdValue::zero(),
            chart_area: Rational::zero(),
            scale_factor: SurdValue::zero(),
            chart: (0, 1),
        }
    }
}

/// Components `A_jk` (j < k) of the polygon's area bivector.
fn area_bivector(p: &Polygon) -> Vec<((usize, usize), Rational)> {
    let v = p.vertices();
    let n = p.ambient_dimension();
    let w: Vec<Point> = v.iter().map(|x| sub(x, &v[0])).collect();
    let m = w.len();
    let two = Rational::from_integer(BigInt::from(2));
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    for j in 0..n {
        for k in j + 1..n {
            let twice: Rational = (0..m)
                .map(|i| {
                    let (a, b) = (&w[i], &w[(i + 1) % m]);
                    &a[j] * &b[k] - &a[k] * &b[j]
                })
                .sum();
            out.push(((j, k), twice / &two));
        }
    }
    out
}

pub fn polygon_area_value(p: &Polygon) -> AreaValue {
    let bivector = area_bivector(p);
    let squared: Rational = bivector.iter().map(|(_, a)| a * a).sum();
    let chart = p.chart();
    let chart_area = bivector
        .iter()
        .find(|(jk, _)| *jk == chart)
        .map(|(_, a)| a.abs())
        .expect("chart pair is a bivector component");
    let value = SurdValue::sqrt(&squared);
    let scale_factor = SurdValue::sqrt(&(&squared / (&chart_area * &chart_area)));
    AreaValue {
        value,
        chart_area,
        scale_factor,
        chart,
    }
}

/// Exact area `q·√r` of a polygon embedded in Rⁿ.
pub fn polygon_area(p: &Polygon) -> SurdValue {
    polygon_area_value(p).value
}

/// Exact (n−1)-volume of the slice for slices of dimension 1, 2 or 3.
///
/// In dimension 3 the slice is projected along the dominant normal
/// coordinate k, its projected volume is summed over origin-apexed
/// tetrahedra fanned over each facet, and the result is rescaled by |a|/|a_k|.
pub fn slice_volume_exact(s: &CubeSlice) -> Result<SurdValue, GeometryError> {
    match s.affine_dimension() {
        1 => {
            let v = s.vertices();
            let d = sub(&v[1], &v[0]);
            Ok(SurdValue::sqrt(&linalg::dot(&d, &d)))
        }
        2 => Ok(polygon_area(&Polygon::from_points(s.vertices())?)),
        3 => {
            let h = s.hyperplane();
            let k = h.dominant_axis();
            let drop_k = |p: &Point| -> Point {
                p.iter()
                    .enumerate()
                    .filter(|&(i, _)| i != k)
                    .map(|(_, x)| x.clone())
                    .collect()
            };
            let six = Rational::from_integer(BigInt::from(6));
            let mut projected = Rational::zero();
            for facet in facets_3d(s)? {
                let q: Vec<Point> = facet.vertices().iter().map(drop_k).collect();
                for i in 1..q.len() - 1 {
                    projected += det3(&q[0], &q[i], &q[i + 1]).abs() / &six;
                }
            }
            let a_k = Rational::from_integer(h.normal()[k].abs());
            let norm = SurdValue::sqrt(&Rational::from_integer(h.squared_norm()));
            Ok(norm.scale(&(projected / a_k)))
        }
        d => Err(GeometryError::VolumeDimensionUnsupported(d)),
    }
}

/// Area of the section `K ∩ { x_axis = level }`; zero when the section is
/// empty or lower dimensional.
pub fn section_area(s: &CubeSlice, axis: usize, level: &Rational) -> Result<AreaValue, GeometryError> {
    let points = s.section_vertices(axis, level)?;
    if linalg::affine_dimension(&points) != 2 {
        return Ok(AreaValue::zero());
    }
    Ok(polygon_area_value(&Polygon::from_points(&points)?))
}

pub fn section_area_profile(
    s: &CubeSlice,
    axis: usize,
    samples: &[Rational],
) -> Result<Vec<(Rational, AreaValue)>, GeometryError> {
    let dim = s.affine_dimension();
    if dim != 3 {
        return Err(GeometryError::NotThreeDimensional(dim));
    }
    samples
        .par_iter()
        .map(|level| section_area(s, axis, level).map(|a| (level.clone(), a)))
        .collect()
}

/// Factor turning `∫ area(level) d level` into the slice volume:
/// `|a| / √(|a|² − a_axis²)`, the reciprocal of the length of the gradient of
/// `x_axis` restricted to the hyperplane.
pub fn section_weight(s: &CubeSlice, axis: usize) -> Result<SurdValue, GeometryError> {
    let h = s.hyperplane();
    if axis >= h.dimension() {
        return Err(GeometryError::AxisOutOfRange {
            axis,
            dimension: h.dimension(),
        });
    }
    let total = Rational::from_integer(h.squared_norm());
    let a = Rational::from_integer(h.normal()[axis].clone());
    let rest = &total - &a * &a;
    if rest.is_zero() {
        return Err(GeometryError::EmptyOrLowerDimensional);
    }
    Ok(SurdValue::sqrt(&(total / rest)))
}

/// Slice volume by exact Cavalieri integration of the section areas along
/// `axis`.
///
/// Between consecutive vertex levels the section keeps its combinatorial type
/// and its area is a quadratic polynomial in the level, so Simpson's rule on
/// each such interval is exact.
pub fn cavalieri_volume(s: &CubeSlice, axis: usize) -> Result<SurdValue, GeometryError> {
    let dim = s.affine_dimension();
    if dim != 3 {
        return Err(GeometryError::NotThreeDimensional(dim));
    }
    let weight = section_weight(s, axis)?;
    let mut levels: Vec<Rational> = s.vertices().iter().map(|v| v[axis].clone()).collect();
    levels.sort();
    levels.dedup();
    let six = Rational::from_integer(BigInt::from(6));
    let four = Rational::from_integer(BigInt::from(4));
    let two = Rational::from_integer(BigInt::from(2));
    let mut total = SurdValue::zero();
    for pair in levels.windows(2) {
        let (lo, hi) = (&pair[0], &pair[1]);
        let mid = (lo + hi) / &two;
        let a0 = section_area(s, axis, lo)?.value;
        let am = section_area(s, axis, &mid)?.value.scale(&four);
        let a1 = section_area(s, axis, hi)?.value;
        let piece = a0
            .checked_add(&am)
            .and_then(|x| x.checked_add(&a1))
            .expect("parallel sections share one radicand")
            .scale(&((hi - lo) / &six));
        total = total
            .checked_add(&piece)
            .expect("parallel sections share one radicand");
    }
    Ok(&total * &weight)
}
