//! Central hyperplanes and the vertex sets of their slices through the
//! cube `[-1/2, 1/2]ⁿ`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::arith::{gcd_all, half, Point, Rational};
use crate::error::GeometryError;
use crate::linalg::{self, dot, primitive_integer};

/// Largest ambient dimension handled by the exact pipeline.
pub const MAX_EXACT_DIMENSION: usize = 8;

/// A hyperplane `{ x : normal · x = 0 }` with a primitive integer normal whose
/// first nonzero entry is positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hyperplane {
    normal: Vec<BigInt>,
}

impl Hyperplane {
    pub fn from_ints(raw: &[i64]) -> Result<Self, GeometryError> {
        let raw: Vec<Rational> = raw
            .iter()
            .map(|&x| Rational::from_integer(BigInt::from(x)))
            .collect();
        canonicalize_normal(&raw)
    }

    pub fn normal(&self) -> &[BigInt] {
        &self.normal
    }

    pub fn normal_rational(&self) -> Point {
        linalg::to_rationals(&self.normal)
    }

    /// The normal as `i64`s, when every entry fits.
    pub fn normal_i64(&self) -> Option<Vec<i64>> {
        self.normal.iter().map(ToPrimitive::to_i64).collect()
    }

    pub fn dimension(&self) -> usize {
        self.normal.len()
    }

    pub fn squared_norm(&self) -> BigInt {
        self.normal.iter().map(|a| a * a).sum()
    }

    pub fn nonzero_count(&self) -> usize {
        self.normal.iter().filter(|a| !a.is_zero()).count()
    }

    /// Some coefficient is zero: the slice is a product with a lower
    /// dimensional cube.
    pub fn is_degenerate(&self) -> bool {
        self.nonzero_count() < self.normal.len()
    }

    /// Exactly one nonzero coefficient: the slice is itself a cube.
    pub fn is_coordinate(&self) -> bool {
        self.nonzero_count() == 1
    }

    /// Coordinate with the largest |a_k|, ties to the smallest index.
    pub fn dominant_axis(&self) -> usize {
        let mut best = 0;
        for (i, a) in self.normal.iter().enumerate() {
            if a.abs() > self.normal[best].abs() {
                best = i;
            }
        }
        best
    }

    pub fn evaluate(&self, x: &[Rational]) -> Rational {
        dot(&self.normal_rational(), x)
    }
}

impl fmt::Display for Hyperplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.normal.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Clears denominators, divides by the gcd and makes the first nonzero entry
/// positive.
pub fn canonicalize_normal(raw: &[Rational]) -> Result<Hyperplane, GeometryError> {
    if raw.len() < 2 {
        return Err(GeometryError::DimensionTooSmall(raw.len()));
    }
    if raw.iter().all(Zero::is_zero) {
        return Err(GeometryError::ZeroNormal);
    }
    let mut normal = primitive_integer(raw);
    debug_assert!(gcd_all(&normal) == BigInt::from(1));
    let first = normal.iter().find(|a| !a.is_zero()).expect("nonzero normal");
    if first.is_negative() {
        normal = normal.into_iter().map(|a| -a).collect();
    }
    Ok(Hyperplane { normal })
}

/// The central slice `H ∩ [-1/2, 1/2]ⁿ` described by its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubeSlice {
    hyperplane: Hyperplane,
    vertices: Vec<Point>,
}

impl CubeSlice {
    pub fn new(hyperplane: &Hyperplane) -> Result<Self, GeometryError> {
        let n = hyperplane.dimension();
        if n > MAX_EXACT_DIMENSION {
            return Err(GeometryError::DimensionTooLarge {
                found: n,
                max: MAX_EXACT_DIMENSION,
            });
        }
        let vertices = cube_section(n, &[(hyperplane.normal_rational(), Rational::zero())]);
        Ok(CubeSlice {
            hyperplane: hyperplane.clone(),
            vertices,
        })
    }

    pub fn from_ints(normal: &[i64]) -> Result<Self, GeometryError> {
        Self::new(&Hyperplane::from_ints(normal)?)
    }

    pub fn hyperplane(&self) -> &Hyperplane {
        &self.hyperplane
    }

    /// Ambient dimension n.
    pub fn dimension(&self) -> usize {
        self.hyperplane.dimension()
    }

    /// Vertices in lexicographic order.
    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    /// Dimension of the slice itself (always n − 1 for a central slice).
    pub fn affine_dimension(&self) -> usize {
        linalg::affine_dimension(&self.vertices)
    }

    pub fn is_degenerate(&self) -> bool {
        self.hyperplane.is_degenerate()
    }

    /// Vertices of the section `K ∩ { x_axis = level }`; empty when the plane
    /// misses the slice.
    pub fn section_vertices(
        &self,
        axis: usize,
        level: &Rational,
    ) -> Result<Vec<Point>, GeometryError> {
        let n = self.dimension();
        if axis >= n {
            return Err(GeometryError::AxisOutOfRange { axis, dimension: n });
        }
        if level.abs() > half() {
            return Ok(Vec::new());
        }
        let mut unit = linalg::zeros(n);
        unit[axis] = Rational::from_integer(BigInt::from(1));
        Ok(cube_section(
            n,
            &[
                (self.hyperplane.normal_rational(), Rational::zero()),
                (unit, level.clone()),
            ],
        ))
    }
}

/// `slice_vertices(h, n)`: the vertex set of `H ∩ Qⁿ`.
pub fn slice_vertices(h: &Hyperplane, n: usize) -> Result<CubeSlice, GeometryError> {
    if h.dimension() != n {
        return Err(GeometryError::DimensionMismatch {
            expected: n,
            found: h.dimension(),
        });
    }
    CubeSlice::new(h)
}

/// Vertices of `Qⁿ ∩ { x : aᵢ·x = bᵢ }`.
///
/// A vertex of the intersection lies in the relative interior of a cube face
/// whose affine hull meets the constraint space in exactly that point, so it
/// suffices to scan faces of dimension ≤ m (m = number of equations) and keep
/// the unique solutions that land inside the face.
pub fn cube_section(n: usize, equations: &[(Point, Rational)]) -> Vec<Point> {
    let m = equations.len();
    let h = half();
    let mut found: Vec<Point> = Vec::new();
    // each coordinate is free (0), fixed at -1/2 (1) or fixed at +1/2 (2)
    let total = 3usize.pow(n as u32);
    for code in 0..total {
        let mut state = Vec::with_capacity(n);
        let mut c = code;
        for _ in 0..n {
            state.push(c % 3);
            c /= 3;
        }
        let free: Vec<usize> = (0..n).filter(|&i| state[i] == 0).collect();
        if free.len() > m {
            continue;
        }
        let fixed_value = |i: usize| if state[i] == 1 { -h.clone() } else { h.clone() };
        let rows: Vec<Point> = equations
            .iter()
            .map(|(a, _)| free.iter().map(|&j| a[j].clone()).collect())
            .collect();
        let rhs: Vec<Rational> = equations
            .iter()
            .map(|(a, b)| {
                let fixed: Rational = (0..n)
                    .filter(|&i| state[i] != 0)
                    .map(|i| &a[i] * fixed_value(i))
                    .sum();
                b - fixed
            })
            .collect();
        let solution = if free.is_empty() {
            rhs.iter().all(Zero::is_zero).then(Vec::new)
        } else {
            linalg::solve_unique(&rows, &rhs, free.len())
        };
        let Some(sol) = solution else { continue };
        if sol.iter().any(|x| x.abs() > h) {
            continue;
        }
        let mut p = linalg::zeros(n);
        for i in 0..n {
            if state[i] != 0 {
                p[i] = fixed_value(i);
            }
        }
        for (&j, x) in free.iter().zip(sol) {
            p[j] = x;
        }
        found.push(p);
    }
    found.sort();
    found.dedup();
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, point, rat};

    #[test]
    fn canonical_normals() {
        let h = canonicalize_normal(&[rat(1, 2), rat(1, 2), rat(1, 2), rat(1, 2)]).unwrap();
        assert_eq!(h, Hyperplane::from_ints(&[1, 1, 1, 1]).unwrap());
        let h = canonicalize_normal(&[int(-2), int(-2), int(-2), int(-2)]).unwrap();
        assert_eq!(h.normal_i64().unwrap(), vec![1, 1, 1, 1]);
        let h = Hyperplane::from_ints(&[3, 1, 1, 1]).unwrap();
        assert_eq!(h.normal_i64().unwrap(), vec![3, 1, 1, 1]);
        let h = Hyperplane::from_ints(&[0, -4, 6]).unwrap();
        assert_eq!(h.normal_i64().unwrap(), vec![0, 2, -3]);
    }

    #[test]
    fn canonicalization_errors() {
        assert_eq!(
            canonicalize_normal(&[int(0), int(0)]),
            Err(GeometryError::ZeroNormal)
        );
        assert_eq!(
            canonicalize_normal(&[int(1)]),
            Err(GeometryError::DimensionTooSmall(1))
        );
    }

    #[test]
    fn diagonal_slice_of_four_cube() {
        let s = CubeSlice::from_ints(&[1, 1, 1, 1]).unwrap();
        assert_eq!(s.vertices().len(), 6);
        for v in s.vertices() {
            let pos = v.iter().filter(|x| **x == half()).count();
            let neg = v.iter().filter(|x| **x == -half()).count();
            assert_eq!((pos, neg), (2, 2));
        }
        assert_eq!(s.affine_dimension(), 3);
    }

    #[test]
    fn square_diagonal() {
        let s = CubeSlice::from_ints(&[1, 1]).unwrap();
        assert_eq!(
            s.vertices(),
            &[point(&[(-1, 2), (1, 2)]), point(&[(1, 2), (-1, 2)])]
        );
    }

    #[test]
    fn coordinate_slice_is_a_cube() {
        let s = CubeSlice::from_ints(&[1, 0, 0, 0]).unwrap();
        assert_eq!(s.vertices().len(), 8);
        assert!(s.vertices().iter().all(|v| v[0].is_zero()));
        assert!(s.is_degenerate());
        assert!(s.hyperplane().is_coordinate());
    }

    #[test]
    fn dimension_checks() {
        let h = Hyperplane::from_ints(&[1, 1, 1]).unwrap();
        assert!(matches!(
            slice_vertices(&h, 4),
            Err(GeometryError::DimensionMismatch { .. })
        ));
        let h = Hyperplane::from_ints(&[1; 9]).unwrap();
        assert!(matches!(
            CubeSlice::new(&h),
            Err(GeometryError::DimensionTooLarge { .. })
        ));
        let s = CubeSlice::from_ints(&[1, 1, 1]).unwrap();
        assert!(matches!(
            s.section_vertices(3, &int(0)),
            Err(GeometryError::AxisOutOfRange { .. })
        ));
    }

    #[test]
    fn section_at_triangle_level() {
        let s = CubeSlice::from_ints(&[1, 1, 1, 1]).unwrap();
        let face = s.section_vertices(3, &rat(-1, 2)).unwrap();
        let mut expected = vec![
            point(&[(1, 2), (-1, 2), (1, 2), (-1, 2)]),
            point(&[(1, 2), (1, 2), (-1, 2), (-1, 2)]),
            point(&[(-1, 2), (1, 2), (1, 2), (-1, 2)]),
        ];
        expected.sort();
        assert_eq!(face, expected);
        assert!(s.section_vertices(3, &rat(3, 4)).unwrap().is_empty());
    }
}
