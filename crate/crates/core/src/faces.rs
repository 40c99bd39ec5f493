//! Polygons, facet enumeration of 3-polytopes, and zonotope recognition via
//! central symmetry of 2-faces.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{half, Point, Rational};
use crate::error::GeometryError;
use crate::linalg::{self, cross3, dot, sub};
use crate::slice::CubeSlice;

/// The closed halfspace `normal · x ≤ offset`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Halfspace {
    pub normal: Vec<BigInt>,
    pub offset: Rational,
}

impl Halfspace {
    pub fn contains(&self, x: &[Rational]) -> bool {
        dot(&linalg::to_rationals(&self.normal), x) <= self.offset
    }

    pub fn on_boundary(&self, x: &[Rational]) -> bool {
        dot(&linalg::to_rationals(&self.normal), x) == self.offset
    }
}

/// A convex polygon in a 2-plane of Rⁿ with cyclically ordered vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polygon {
    vertices: Vec<Point>,
    chart: (usize, usize),
    support: Option<Halfspace>,
}

type Chart2 = [Rational; 2];

fn chart_cross(o: &Chart2, a: &Chart2, b: &Chart2) -> Rational {
    (&a[0] - &o[0]) * (&b[1] - &o[1]) - (&a[1] - &o[1]) * (&b[0] - &o[0])
}

/// Coordinate pair on which the plane through `points` projects injectively:
/// the pair with the largest Plücker coordinate, ties to the smallest pair.
fn plane_chart(points: &[Point]) -> Result<(usize, usize), GeometryError> {
    let dim = linalg::affine_dimension(points);
    if dim != 2 {
        return Err(GeometryError::NotPlanar(dim));
    }
    let p0 = &points[0];
    let diffs: Vec<Point> = points[1..].iter().map(|p| sub(p, p0)).collect();
    let (basis, _) = linalg::echelon(&diffs);
    let (d1, d2) = (&basis[0], &basis[1]);
    let n = p0.len();
    let mut best: Option<((usize, usize), Rational)> = None;
    for j in 0..n {
        for k in j + 1..n {
            let c = (&d1[j] * &d2[k] - &d1[k] * &d2[j]).abs();
            if best.as_ref().is_none_or(|(_, b)| c > *b) {
                best = Some(((j, k), c));
            }
        }
    }
    Ok(best.expect("planar points need n ≥ 2").0)
}

fn project(p: &Point, chart: (usize, usize)) -> Chart2 {
    [p[chart.0].clone(), p[chart.1].clone()]
}

/// Convex hull in the chart, counterclockwise, without collinear points.
/// Returns indices into `pts`.
fn hull_2d(pts: &[Chart2]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..pts.len()).collect();
    idx.sort_by(|&a, &b| pts[a].cmp(&pts[b]));
    idx.dedup_by(|a, b| pts[*a] == pts[*b]);
    if idx.len() < 3 {
        return idx;
    }
    let mut lower: Vec<usize> = Vec::new();
    for &i in &idx {
        while lower.len() >= 2
            && chart_cross(
                &pts[lower[lower.len() - 2]],
                &pts[lower[lower.len() - 1]],
                &pts[i],
            ) <= Rational::zero()
        {
            lower.pop();
        }
        lower.push(i);
    }
    let mut upper: Vec<usize> = Vec::new();
    for &i in idx.iter().rev() {
        while upper.len() >= 2
            && chart_cross(
                &pts[upper[upper.len() - 2]],
                &pts[upper[upper.len() - 1]],
                &pts[i],
            ) <= Rational::zero()
        {
            upper.pop();
        }
        upper.push(i);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

impl Polygon {
    /// The convex polygon spanned by coplanar points, counterclockwise in its
    /// chart, starting from the lexicographically smallest vertex.
    pub fn from_points(points: &[Point]) -> Result<Self, GeometryError> {
        let chart = plane_chart(points)?;
        let projected: Vec<Chart2> = points.iter().map(|p| project(p, chart)).collect();
        let order = hull_2d(&projected);
        let mut vertices: Vec<Point> = order.into_iter().map(|i| points[i].clone()).collect();
        let start = (0..vertices.len())
            .min_by(|&a, &b| vertices[a].cmp(&vertices[b]))
            .expect("nonempty hull");
        vertices.rotate_left(start);
        Ok(Polygon {
            vertices,
            chart,
            support: None,
        })
    }

    /// Keeps the given cyclic order (either orientation, any starting point).
    /// Repeated points and straight-angle vertices are dropped; the remaining
    /// cycle must traverse the convex hull.
    pub fn from_cycle(cycle: &[Point]) -> Result<Self, GeometryError> {
        let chart = plane_chart(cycle)?;
        let mut verts: Vec<Point> = Vec::new();
        for p in cycle {
            if verts.last() != Some(p) {
                verts.push(p.clone());
            }
        }
        while verts.len() > 1 && verts.first() == verts.last() {
            verts.pop();
        }
        loop {
            let m = verts.len();
            let straight = (0..m).find(|&i| {
                let prev = project(&verts[(i + m - 1) % m], chart);
                let cur = project(&verts[i], chart);
                let next = project(&verts[(i + 1) % m], chart);
                chart_cross(&prev, &cur, &next).is_zero()
            });
            match straight {
                Some(i) if m > 3 => {
                    verts.remove(i);
                }
                Some(_) => return Err(GeometryError::NotConvexCycle),
                None => break,
            }
        }
        let hull = Polygon::from_points(&verts)?;
        let m = verts.len();
        if hull.vertices.len() != m {
            return Err(GeometryError::NotConvexCycle);
        }
        let offset = verts
            .iter()
            .position(|v| *v == hull.vertices[0])
            .ok_or(GeometryError::NotConvexCycle)?;
        let forward = (0..m).all(|i| verts[(offset + i) % m] == hull.vertices[i]);
        let backward = (0..m).all(|i| verts[(offset + m - i) % m] == hull.vertices[i]);
        if !(forward || backward) {
            return Err(GeometryError::NotConvexCycle);
        }
        Ok(Polygon {
            vertices: verts,
            chart,
            support: None,
        })
    }

    pub fn with_support(mut self, support: Halfspace) -> Self {
        self.support = Some(support);
        self
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn ambient_dimension(&self) -> usize {
        self.vertices[0].len()
    }

    /// The two coordinates used as the polygon's planar chart.
    pub fn chart(&self) -> (usize, usize) {
        self.chart
    }

    pub fn support(&self) -> Option<&Halfspace> {
        self.support.as_ref()
    }

    /// The same polygon expressed in its 2-D chart coordinates.
    pub fn to_chart(&self) -> Polygon {
        Polygon {
            vertices: self
                .vertices
                .iter()
                .map(|v| project(v, self.chart).to_vec())
                .collect(),
            chart: (0, 1),
            support: None,
        }
    }

    /// Edge vectors `v[i+1] − v[i]`.
    pub fn edges(&self) -> Vec<Point> {
        let m = self.vertices.len();
        (0..m)
            .map(|i| sub(&self.vertices[(i + 1) % m], &self.vertices[i]))
            .collect()
    }

    /// Vertex set in lexicographic order, for order-independent comparison.
    pub fn sorted_vertices(&self) -> Vec<Point> {
        let mut v = self.vertices.clone();
        v.sort();
        v
    }

    /// Cube facet `x_axis = sign/2` containing every vertex; the largest such
    /// axis when several apply.
    pub fn cube_facet(&self) -> Option<(usize, Side)> {
        let h = half();
        (0..self.ambient_dimension()).rev().find_map(|axis| {
            if self.vertices.iter().all(|v| v[axis] == -h.clone()) {
                Some((axis, Side::Negative))
            } else if self.vertices.iter().all(|v| v[axis] == h) {
                Some((axis, Side::Positive))
            } else {
                None
            }
        })
    }

    fn chart_points(&self) -> Vec<Chart2> {
        self.vertices.iter().map(|v| project(v, self.chart)).collect()
    }
}

fn parallel(a: &Chart2, b: &Chart2) -> bool {
    (&a[0] * &b[1] - &a[1] * &b[0]).is_zero()
}

/// Which side of the cube a face lies on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    Negative,
    Positive,
}

impl Side {
    pub fn value(self) -> Rational {
        match self {
            Side::Negative => -half(),
            Side::Positive => half(),
        }
    }

    pub fn from_sign(sign: i32) -> Option<Side> {
        match sign {
            -1 => Some(Side::Negative),
            1 => Some(Side::Positive),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FaceClass {
    Triangle,
    Parallelogram,
    Trapezium,
    Pentagon,
    Hexagon,
    OtherCentrallySymmetric,
    OtherAsymmetric,
}

impl FaceClass {
    pub fn name(self) -> &'static str {
        match self {
            FaceClass::Triangle => "Triangle",
            FaceClass::Parallelogram => "Parallelogram",
            FaceClass::Trapezium => "Trapezium",
            FaceClass::Pentagon => "Pentagon",
            FaceClass::Hexagon => "Hexagon",
            FaceClass::OtherCentrallySymmetric => "OtherCentrallySymmetric",
            FaceClass::OtherAsymmetric => "OtherAsymmetric",
        }
    }
}

impl fmt::Display for FaceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exact class from the vertex count and parallel-side tests.
pub fn classify_polygon(p: &Polygon) -> FaceClass {
    let pts = p.chart_points();
    let m = pts.len();
    let edges: Vec<Chart2> = (0..m)
        .map(|i| {
            let (a, b) = (&pts[i], &pts[(i + 1) % m]);
            [&b[0] - &a[0], &b[1] - &a[1]]
        })
        .collect();
    match m {
        3 => FaceClass::Triangle,
        4 => {
            let pairs =
                usize::from(parallel(&edges[0], &edges[2])) + usize::from(parallel(&edges[1], &edges[3]));
            match pairs {
                2 => FaceClass::Parallelogram,
                1 => FaceClass::Trapezium,
                _ => FaceClass::OtherAsymmetric,
            }
        }
        5 => FaceClass::Pentagon,
        6 => FaceClass::Hexagon,
        _ if is_centrally_symmetric(p).is_some() => FaceClass::OtherCentrallySymmetric,
        _ => FaceClass::OtherAsymmetric,
    }
}

/// The center of symmetry, when opposite vertices `(i, i + m/2)` all share one
/// midpoint.
pub fn is_centrally_symmetric(p: &Polygon) -> Option<Point> {
    let m = p.vertices.len();
    if !m.is_multiple_of(2) {
        return None;
    }
    let half_m = m / 2;
    let center = linalg::midpoint(&p.vertices[0], &p.vertices[half_m]);
    (1..half_m)
        .all(|i| linalg::midpoint(&p.vertices[i], &p.vertices[i + half_m]) == center)
        .then_some(center)
}

/// Facet ordering: faces lying on a cube facet first (highest axis first,
/// the `−1/2` side before `+1/2`), then the remaining ones by supporting
/// halfspace.
fn facet_order(a: &Polygon, b: &Polygon) -> std::cmp::Ordering {
    let key = |p: &Polygon| {
        (
            p.cube_facet()
                .map(|(axis, side)| (std::cmp::Reverse(axis), side)),
            p.support.clone(),
        )
    };
    let (ka, kb) = (key(a), key(b));
    match (&ka.0, &kb.0) {
        (Some(_), None) => std::cmp::Ordering::Less,
        (None, Some(_)) => std::cmp::Ordering::Greater,
        _ => ka.cmp(&kb),
    }
}

/// Facets of a 3-dimensional polytope given by a point set (which may
/// include non-vertices), by scanning point triples for supporting planes.
pub fn facets_of_points(points: &[Point]) -> Result<Vec<Polygon>, GeometryError> {
    let mut pts: Vec<Point> = points.to_vec();
    pts.sort();
    pts.dedup();
    let dim = linalg::affine_dimension(&pts);
    if dim != 3 {
        return Err(GeometryError::NotThreeDimensional(dim));
    }
    let n = pts[0].len();
    let diffs: Vec<Point> = pts[1..].iter().map(|p| sub(p, &pts[0])).collect();
    let (_, pivots) = linalg::echelon(&diffs);
    let chart: Vec<Point> = pts
        .iter()
        .map(|p| pivots.iter().map(|&c| p[c].clone()).collect())
        .collect();
    let v = chart.len();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut facets = Vec::new();
    for i in 0..v {
        for j in i + 1..v {
            for k in j + 1..v {
                if seen
                    .iter()
                    .any(|s| s.contains(&i) && s.contains(&j) && s.contains(&k))
                {
                    continue;
                }
                let normal = cross3(&sub(&chart[j], &chart[i]), &sub(&chart[k], &chart[i]));
                if linalg::is_zero(&normal) {
                    continue;
                }
                let sides: Vec<Rational> = chart
                    .iter()
                    .map(|p| dot(&normal, &sub(p, &chart[i])))
                    .collect();
                let outward = if sides.iter().all(|s| !s.is_positive()) {
                    normal
                } else if sides.iter().all(|s| !s.is_negative()) {
                    linalg::neg(&normal)
                } else {
                    continue;
                };
                let on: Vec<usize> = (0..v).filter(|&l| sides[l].is_zero()).collect();
                if !seen.insert(on.clone()) {
                    continue;
                }
                let mut ambient = linalg::zeros(n);
                for (c, x) in pivots.iter().zip(&outward) {
                    ambient[*c] = x.clone();
                }
                let normal = linalg::primitive_integer(&ambient);
                let offset = dot(&linalg::to_rationals(&normal), &pts[i]);
                let face_points: Vec<Point> = on.iter().map(|&l| pts[l].clone()).collect();
                let polygon = Polygon::from_points(&face_points)?
                    .with_support(Halfspace { normal, offset });
                facets.push(polygon);
            }
        }
    }
    facets.sort_by(facet_order);
    Ok(facets)
}

/// Facets of a 3-dimensional slice.
pub fn facets_3d(s: &CubeSlice) -> Result<Vec<Polygon>, GeometryError> {
    facets_of_points(s.vertices())
}

/// Result of cutting a slice with a cube facet plane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FaceContact {
    Polygon(Polygon),
    /// Fewer than three contact points (empty, a vertex or an edge), or a
    /// contact set that is not two-dimensional.
    Degenerate(Vec<Point>),
}

impl FaceContact {
    pub fn polygon(&self) -> Option<&Polygon> {
        match self {
            FaceContact::Polygon(p) => Some(p),
            FaceContact::Degenerate(_) => None,
        }
    }

    pub fn into_polygon(self) -> Result<Polygon, GeometryError> {
        match self {
            FaceContact::Polygon(p) => Ok(p),
            FaceContact::Degenerate(_) => Err(GeometryError::EmptyOrLowerDimensional),
        }
    }
}

/// The face `K ∩ { x_axis = side/2 }`.
pub fn face_at(s: &CubeSlice, axis: usize, side: Side) -> Result<FaceContact, GeometryError> {
    let points = s.section_vertices(axis, &side.value())?;
    if linalg::affine_dimension(&points) != 2 {
        return Ok(FaceContact::Degenerate(points));
    }
    let mut normal = vec![BigInt::zero(); s.dimension()];
    normal[axis] = match side {
        Side::Negative => BigInt::from(-1),
        Side::Positive => BigInt::from(1),
    };
    let polygon = Polygon::from_points(&points)?.with_support(Halfspace {
        normal,
        offset: half(),
    });
    Ok(FaceContact::Polygon(polygon))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    Zonotope,
    NotZonoid,
    DegenerateCube,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Zonotope => "Zonotope",
            Verdict::NotZonoid => "NotZonoid",
            Verdict::DegenerateCube => "DegenerateCube",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZonotopeVerdict {
    pub verdict: Verdict,
    pub witness: Option<Polygon>,
    pub reason: &'static str,
}

impl ZonotopeVerdict {
    fn new(verdict: Verdict, reason: &'static str) -> Self {
        ZonotopeVerdict {
            verdict,
            witness: None,
            reason,
        }
    }
}

/// Zonotope test for a polytope of affine dimension ≤ 3 given by points.
///
/// Dimension 3 uses the criterion "every 2-face centrally symmetric"; a
/// polygon is a zonotope exactly when it is centrally symmetric.
pub fn verdict_for_points(points: &[Point]) -> Result<ZonotopeVerdict, GeometryError> {
    match linalg::affine_dimension(points) {
        0 => Ok(ZonotopeVerdict::new(Verdict::Zonotope, "point")),
        1 => Ok(ZonotopeVerdict::new(Verdict::Zonotope, "segment")),
        2 => {
            let polygon = Polygon::from_points(points)?;
            if is_centrally_symmetric(&polygon).is_some() {
                Ok(ZonotopeVerdict::new(Verdict::Zonotope, "centrally-symmetric-polygon"))
            } else {
                Ok(ZonotopeVerdict {
                    verdict: Verdict::NotZonoid,
                    witness: Some(polygon),
                    reason: "asymmetric-polygon",
                })
            }
        }
        3 => {
            let facets = facets_of_points(points)?;
            match facets
                .into_iter()
                .find(|f| is_centrally_symmetric(f).is_none())
            {
                None => Ok(ZonotopeVerdict::new(Verdict::Zonotope, "all-facets-centrally-symmetric")),
                Some(witness) => Ok(ZonotopeVerdict {
                    verdict: Verdict::NotZonoid,
                    witness: Some(witness),
                    reason: "asymmetric-facet",
                }),
            }
        }
        d => Err(GeometryError::DimensionUnsupported(d)),
    }
}

pub fn zonotope_verdict(s: &CubeSlice) -> Result<ZonotopeVerdict, GeometryError> {
    if s.hyperplane().is_coordinate() {
        return Ok(ZonotopeVerdict::new(Verdict::DegenerateCube, "coordinate-hyperplane"));
    }
    verdict_for_points(s.vertices())
}

pub fn face_census(s: &CubeSlice) -> Result<BTreeMap<FaceClass, usize>, GeometryError> {
    let mut census = BTreeMap::new();
    for f in facets_3d(s)? {
        *census.entry(classify_polygon(&f)).or_insert(0) += 1;
    }
    Ok(census)
}
