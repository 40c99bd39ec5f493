//! Zonotopes as Minkowski sums of centered segments: planar construction and
//! decomposition, vertex enumeration in any dimension, and cube projections.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::{half, Point, Rational};
use crate::error::GeometryError;
use crate::faces::{is_centrally_symmetric, verdict_for_points, Polygon, ZonotopeVerdict};
use crate::linalg::{self, add, dot, echelon, nullspace, rank, scale, sub, zeros};
use crate::slice::MAX_EXACT_DIMENSION;

/// Generators `g₁..g_m` of the zonotope `Σ [−gᵢ/2, gᵢ/2]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SegmentGenerators {
    generators: Vec<Point>,
}

impl SegmentGenerators {
    pub fn new(generators: Vec<Point>) -> Result<Self, GeometryError> {
        let Some(first) = generators.first() else {
            return Err(GeometryError::NoGenerators);
        };
        let expected = first.len();
        if generators.iter().any(|g| g.len() != expected) {
            return Err(GeometryError::MixedDimensions { expected });
        }
        if let Some(i) = generators.iter().position(|g| linalg::is_zero(g)) {
            return Err(GeometryError::ZeroGenerator(i));
        }
        Ok(SegmentGenerators { generators })
    }

    pub fn generators(&self) -> &[Point] {
        &self.generators
    }

    pub fn dimension(&self) -> usize {
        self.generators[0].len()
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Generators with parallel ones merged and each oriented so its first
    /// nonzero coordinate is positive, sorted. Two generator lists span the
    /// same zonotope iff their canonical forms agree.
    pub fn canonical(&self) -> Vec<Point> {
        let mut merged: Vec<Point> = Vec::new();
        for g in &self.generators {
            let g = orient(g);
            match merged.iter_mut().find(|m| rank(&[(*m).clone(), g.clone()]) == 1) {
                Some(m) => *m = add(m, &g),
                None => merged.push(g),
            }
        }
        merged.sort();
        merged
    }
}

fn orient(g: &[Rational]) -> Point {
    match g.iter().find(|x| !x.is_zero()) {
        Some(x) if x.is_negative() => linalg::neg(g),
        _ => g.to_vec(),
    }
}

/// A planar zonotope: a polygon, or a segment when all generators are
/// parallel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PlanarZonotope {
    Polygon(Polygon),
    Segment([Point; 2]),
}

impl PlanarZonotope {
    pub fn polygon(&self) -> Option<&Polygon> {
        match self {
            PlanarZonotope::Polygon(p) => Some(p),
            PlanarZonotope::Segment(_) => None,
        }
    }

    pub fn vertices(&self) -> Vec<Point> {
        match self {
            PlanarZonotope::Polygon(p) => p.vertices().to_vec(),
            PlanarZonotope::Segment(s) => s.to_vec(),
        }
    }
}

fn cross2(a: &[Rational], b: &[Rational]) -> Rational {
    &a[0] * &b[1] - &a[1] * &b[0]
}

/// Orients into the half-open upper half-plane `y > 0 or (y = 0, x > 0)`.
fn upper(g: &[Rational]) -> Point {
    if g[1].is_negative() || (g[1].is_zero() && g[0].is_negative()) {
        linalg::neg(g)
    } else {
        g.to_vec()
    }
}

/// `Σ [−gᵢ/2, gᵢ/2]` for planar generators: sort the generators by angle,
/// merge parallel ones, and walk the boundary from `−Σgᵢ/2`, first adding and
/// then subtracting each generator.
pub fn zonotope_from_segments_2d(gens: &SegmentGenerators) -> Result<PlanarZonotope, GeometryError> {
    if gens.dimension() != 2 {
        return Err(GeometryError::DimensionMismatch {
            expected: 2,
            found: gens.dimension(),
        });
    }
    let mut dirs: Vec<Point> = gens.generators().iter().map(|g| upper(g)).collect();
    dirs.sort_by(|a, b| match cross2(a, b) {
        c if c.is_positive() => Ordering::Less,
        c if c.is_negative() => Ordering::Greater,
        _ => Ordering::Equal,
    });
    let mut merged: Vec<Point> = Vec::new();
    for d in dirs {
        match merged.last_mut() {
            Some(last) if cross2(last, &d).is_zero() => *last = add(last, &d),
            _ => merged.push(d),
        }
    }
    let total = merged.iter().fold(zeros(2), |acc, g| add(&acc, g));
    let start = scale(&total, &-half());
    if merged.len() == 1 {
        return Ok(PlanarZonotope::Segment([start.clone(), linalg::neg(&start)]));
    }
    let mut cycle = vec![start];
    for g in merged.iter().chain(merged.iter()).take(2 * merged.len() - 1) {
        let last = cycle.last().expect("cycle starts nonempty");
        let next = if cycle.len() <= merged.len() {
            add(last, g)
        } else {
            sub(last, g)
        };
        cycle.push(next);
    }
    Ok(PlanarZonotope::Polygon(Polygon::from_points(&cycle)?))
}

/// Edge vectors of one half of the boundary of a centrally symmetric polygon.
pub fn decompose_symmetric_polygon(p: &Polygon) -> Result<SegmentGenerators, GeometryError> {
    if is_centrally_symmetric(p).is_none() {
        return Err(GeometryError::NotCentrallySymmetric);
    }
    let edges = p.edges();
    let half_count = edges.len() / 2;
    let mut gens: Vec<Point> = edges.into_iter().take(half_count).map(|e| orient(&e)).collect();
    gens.sort();
    SegmentGenerators::new(gens)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

fn sign_sum(w: &[Rational], gens: &[&Point], dim: usize) -> Point {
    let h = half();
    gens.iter().fold(zeros(dim), |acc, g| {
        let s = dot(w, g);
        if s.is_positive() {
            add(&acc, &scale(g, &h))
        } else if s.is_negative() {
            sub(&acc, &scale(g, &h))
        } else {
            acc
        }
    })
}

struct VertexEnumerator<'a> {
    gens: &'a [Point],
    dim: usize,
    memo: HashMap<Vec<usize>, Vec<Point>>,
}

impl VertexEnumerator<'_> {
    /// Vertices of the zonotope generated by `self.gens[idx]`.
    ///
    /// For affine dimension d ≥ 2 every vertex lies on a facet. A facet is
    /// parallel to a hyperplane (within the span) spanned by d − 1 independent
    /// generators; with `S` all generators in that hyperplane and `w` its
    /// normal, the facet is `Σ_{g∉S} sign(w·g) g/2 + Z(S)`.
    fn vertices(&mut self, idx: &[usize]) -> Vec<Point> {
        if let Some(v) = self.memo.get(idx) {
            return v.clone();
        }
        let gens: Vec<Point> = idx.iter().map(|&i| self.gens[i].clone()).collect();
        let (span, _) = echelon(&gens);
        let d = span.len();
        let mut out: Vec<Point> = match d {
            0 => vec![zeros(self.dim)],
            1 => {
                let refs: Vec<&Point> = idx.iter().map(|&i| &self.gens[i]).collect();
                let v = sign_sum(&span[0], &refs, self.dim);
                vec![linalg::neg(&v), v]
            }
            _ => {
                let mut out = Vec::new();
                let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
                for combo in combinations(idx.len(), d - 1) {
                    let rows: Vec<Point> = combo.iter().map(|&c| gens[c].clone()).collect();
                    if rank(&rows) != d - 1 {
                        continue;
                    }
                    let members: Vec<usize> = (0..idx.len())
                        .filter(|&j| {
                            let mut r = rows.clone();
                            r.push(gens[j].clone());
                            rank(&r) == d - 1
                        })
                        .collect();
                    if !seen.insert(members.clone()) {
                        continue;
                    }
                    // normal of the hyperplane inside the span
                    let gram: Vec<Point> = rows
                        .iter()
                        .map(|r| span.iter().map(|b| dot(r, b)).collect())
                        .collect();
                    let coeffs = nullspace(&gram, d);
                    debug_assert_eq!(coeffs.len(), 1);
                    let w = coeffs[0]
                        .iter()
                        .zip(&span)
                        .fold(zeros(self.dim), |acc, (c, b)| add(&acc, &scale(b, c)));
                    let outside: Vec<&Point> = (0..idx.len())
                        .filter(|j| !members.contains(j))
                        .map(|j| &gens[j])
                        .collect();
                    let offset = sign_sum(&w, &outside, self.dim);
                    let sub_idx: Vec<usize> = members.iter().map(|&j| idx[j]).collect();
                    for v in self.vertices(&sub_idx) {
                        out.push(add(&offset, &v));
                        out.push(sub(&v, &offset));
                    }
                }
                out
            }
        };
        out.sort();
        out.dedup();
        self.memo.insert(idx.to_vec(), out.clone());
        out
    }
}

/// Vertices of `Σ [−gᵢ/2, gᵢ/2]` in lexicographic order, in any dimension.
pub fn zonotope_vertices(gens: &SegmentGenerators) -> Vec<Point> {
    let canonical = gens.canonical();
    let mut e = VertexEnumerator {
        gens: &canonical,
        dim: gens.dimension(),
        memo: HashMap::new(),
    };
    let all: Vec<usize> = (0..canonical.len()).collect();
    e.vertices(&all)
}

/// The orthogonal projection of `[−1/2, 1/2]ⁿ` along a direction, in the
/// rational orthogonal chart `basis` of the complement: chart coordinate j of
/// `x` is `(x·b_j)/|b_j|²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectedCube {
    pub basis: Vec<Point>,
    /// Nonzero images of the cube's axis segments.
    pub generators: Vec<Point>,
    pub vertices: Vec<Point>,
}

impl ProjectedCube {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// The projection as a polygon, when it is two-dimensional.
    pub fn as_polygon(&self) -> Option<Polygon> {
        (linalg::affine_dimension(&self.vertices) == 2)
            .then(|| Polygon::from_points(&self.vertices).ok())
            .flatten()
    }

    pub fn verdict(&self) -> Result<ZonotopeVerdict, GeometryError> {
        verdict_for_points(&self.vertices)
    }

    /// Chart coordinates of a point of Rⁿ.
    pub fn to_chart(&self, x: &[Rational]) -> Point {
        self.basis.iter().map(|b| dot(x, b) / dot(b, b)).collect()
    }
}

/// Orthogonal basis of the complement of `direction`, without normalization.
fn complement_basis(direction: &[Rational]) -> Vec<Point> {
    let n = direction.len();
    let mut basis: Vec<Point> = Vec::new();
    for v in nullspace(&[direction.to_vec()], n) {
        let w = basis.iter().fold(v.clone(), |acc, b| {
            let k = dot(&v, b) / dot(b, b);
            sub(&acc, &scale(b, &k))
        });
        let ints = linalg::primitive_integer(&w);
        basis.push(linalg::to_rationals(&ints));
    }
    basis
}

pub fn project_cube(n: usize, direction: &[Rational]) -> Result<ProjectedCube, GeometryError> {
    if n < 2 {
        return Err(GeometryError::DimensionTooSmall(n));
    }
    if n > MAX_EXACT_DIMENSION {
        return Err(GeometryError::DimensionTooLarge {
            found: n,
            max: MAX_EXACT_DIMENSION,
        });
    }
    if direction.len() != n {
        return Err(GeometryError::DimensionMismatch {
            expected: n,
            found: direction.len(),
        });
    }
    if linalg::is_zero(direction) {
        return Err(GeometryError::ZeroDirection);
    }
    let basis = complement_basis(direction);
    let mut result = ProjectedCube {
        basis,
        generators: Vec::new(),
        vertices: Vec::new(),
    };
    for i in 0..n {
        let mut e = zeros(n);
        e[i] = Rational::one();
        let g = result.to_chart(&e);
        if !linalg::is_zero(&g) {
            result.generators.push(g);
        }
    }
    result.vertices = match SegmentGenerators::new(result.generators.clone()) {
        Ok(gens) => zonotope_vertices(&gens),
        Err(_) => vec![zeros(n - 1)],
    };
    Ok(result)
}

/// Integer generator helper for tests and the CLI.
pub fn generators_from_ints(raw: &[Vec<i64>]) -> Result<SegmentGenerators, GeometryError> {
    SegmentGenerators::new(
        raw.iter()
            .map(|g| g.iter().map(|&x| Rational::from_integer(BigInt::from(x))).collect())
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, point};
    use crate::faces::{classify_polygon, FaceClass, Verdict};

    #[test]
    fn unit_square_from_axes() {
        let gens = generators_from_ints(&[vec![1, 0], vec![0, 1]]).unwrap();
        let z = zonotope_from_segments_2d(&gens).unwrap();
        let p = z.polygon().unwrap();
        assert_eq!(classify_polygon(p), FaceClass::Parallelogram);
        assert_eq!(
            p.vertices(),
            &[
                point(&[(-1, 2), (-1, 2)]),
                point(&[(1, 2), (-1, 2)]),
                point(&[(1, 2), (1, 2)]),
                point(&[(-1, 2), (1, 2)]),
            ]
        );
        let back = decompose_symmetric_polygon(p).unwrap();
        assert_eq!(back.canonical(), gens.canonical());
    }

    #[test]
    fn single_generator_is_a_segment() {
        let gens = generators_from_ints(&[vec![1, 0]]).unwrap();
        assert!(matches!(
            zonotope_from_segments_2d(&gens).unwrap(),
            PlanarZonotope::Segment(_)
        ));
    }

    #[test]
    fn generator_validation() {
        assert_eq!(
            generators_from_ints(&[vec![1, 0], vec![0, 0]]),
            Err(GeometryError::ZeroGenerator(1))
        );
        assert_eq!(
            generators_from_ints(&[vec![1, 0], vec![0, 1, 1]]),
            Err(GeometryError::MixedDimensions { expected: 2 })
        );
        assert_eq!(generators_from_ints(&[]), Err(GeometryError::NoGenerators));
    }

    #[test]
    fn parallel_generators_merge() {
        let gens = generators_from_ints(&[vec![1, 1], vec![-2, -2], vec![1, 0]]).unwrap();
        let p = zonotope_from_segments_2d(&gens).unwrap();
        assert_eq!(p.vertices().len(), 4);
    }

    #[test]
    fn cube_shadow_is_a_hexagon() {
        let p = project_cube(3, &[int(1), int(1), int(1)]).unwrap();
        assert_eq!(p.generators.len(), 3);
        let poly = p.as_polygon().unwrap();
        assert_eq!(classify_polygon(&poly), FaceClass::Hexagon);
    }

    #[test]
    fn square_shadow_is_a_unit_segment() {
        let p = project_cube(2, &[int(0), int(1)]).unwrap();
        assert_eq!(p.vertices.len(), 2);
        let length = sub(&p.vertices[1], &p.vertices[0]);
        let b = &p.basis[0];
        // chart coordinates scale by 1/|b|, so the true length is |Δ|·|b|
        assert_eq!(&length[0] * &length[0] * dot(b, b), int(1));
    }

    #[test]
    fn four_cube_shadow_is_a_zonotope() {
        let p = project_cube(4, &[int(1), int(1), int(1), int(1)]).unwrap();
        assert_eq!(p.generators.len(), 4);
        assert_eq!(p.dimension(), 3);
        // rhombic dodecahedron: 14 vertices
        assert_eq!(p.vertices.len(), 14);
        assert_eq!(p.verdict().unwrap().verdict, Verdict::Zonotope);
    }

    #[test]
    fn cube_vertices_from_axes() {
        let gens = generators_from_ints(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        assert_eq!(zonotope_vertices(&gens).len(), 8);
        let gens = generators_from_ints(&[vec![2, 0, 0, 0]]).unwrap();
        assert_eq!(zonotope_vertices(&gens).len(), 2);
    }
}
