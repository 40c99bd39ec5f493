mod common;

use common::*;
use proptest::prelude::*;
use slice_lab::arith::{Point, Rational};
use slice_lab::faces::{classify_polygon, FaceClass, Polygon, Verdict};
use slice_lab::linalg::{add, rank, scale};
use slice_lab::zonotope::{
    decompose_symmetric_polygon, generators_from_ints, project_cube, zonotope_from_segments_2d, zonotope_vertices,
    PlanarZonotope, SegmentGenerators,
};

fn sorted(mut v: Vec<Point>) -> Vec<Point> {
    v.sort();
    v
}

/// All sign sums `Σ ±gᵢ/2`.
fn sign_sums(gens: &[Point]) -> Vec<Point> {
    let d = gens[0].len();
    let mut out = Vec::new();
    for mask in 0..(1usize << gens.len()) {
        let p = gens.iter().enumerate().fold(vec![Rational::from_integer(0.into()); d], |acc, (i, g)| {
            let s = if mask >> i & 1 == 1 { half() } else { -half() };
            add(&acc, &scale(g, &s))
        });
        out.push(p);
    }
    out
}

/// Number of pairwise non-parallel directions.
fn direction_count(gens: &[Point]) -> usize {
    let mut reps: Vec<Point> = Vec::new();
    for g in gens {
        if !reps.iter().any(|x| rank(&[x.clone(), g.clone()]) == 1) {
            reps.push(g.clone());
        }
    }
    reps.len()
}

fn int_generators(dim: usize, max_count: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    proptest::collection::vec(
        proptest::collection::vec(-5i64..=5, dim).prop_filter("nonzero", |g| g.iter().any(|&x| x != 0)),
        1..=max_count,
    )
}

#[test]
fn square_and_hexagon() {
    let square = zonotope_from_segments_2d(&generators_from_ints(&[vec![1, 0], vec![0, 1]]).unwrap()).unwrap();
    assert_eq!(classify_polygon(square.polygon().unwrap()), FaceClass::Parallelogram);
    let gens = generators_from_ints(&[vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap();
    let hexagon = zonotope_from_segments_2d(&gens).unwrap();
    let p = hexagon.polygon().unwrap();
    assert_eq!(classify_polygon(p), FaceClass::Hexagon);
    assert_eq!(
        sorted(p.vertices().to_vec()),
        sorted(vec![
            ints(&[-1, -1]),
            ints(&[0, -1]),
            ints(&[1, 0]),
            ints(&[1, 1]),
            ints(&[0, 1]),
            ints(&[-1, 0]),
        ])
    );
    let back = decompose_symmetric_polygon(p).unwrap();
    assert_eq!(back.canonical(), gens.canonical());
}

#[test]
fn parallel_generators_make_a_segment() {
    let gens = generators_from_ints(&[vec![1, 2], vec![-2, -4]]).unwrap();
    let z = zonotope_from_segments_2d(&gens).unwrap();
    assert_eq!(
        z,
        PlanarZonotope::Segment([vec![r(-3, 2), r(-3, 1)], vec![r(3, 2), r(3, 1)]])
    );
    assert!(z.polygon().is_none());
}

#[test]
fn generator_validation() {
    assert!(SegmentGenerators::new(vec![]).is_err());
    assert!(generators_from_ints(&[vec![1, 0], vec![1, 0, 0]]).is_err());
    assert!(generators_from_ints(&[vec![1, 0], vec![0, 0]]).is_err());
    assert!(zonotope_from_segments_2d(&generators_from_ints(&[vec![1, 0, 0]]).unwrap()).is_err());
    let triangle = Polygon::from_points(&[ints(&[0, 0]), ints(&[1, 0]), ints(&[0, 1])]).unwrap();
    assert!(decompose_symmetric_polygon(&triangle).is_err());
}

#[test]
fn cube_projections() {
    let p = project_cube(3, &ints(&[1, 1, 1])).unwrap();
    assert_eq!(p.dimension(), 2);
    assert_eq!(p.vertices.len(), 6);
    assert_eq!(classify_polygon(&p.as_polygon().unwrap()), FaceClass::Hexagon);
    assert_eq!(p.verdict().unwrap().verdict, Verdict::Zonotope);
    let p = project_cube(2, &ints(&[0, 1])).unwrap();
    assert_eq!(p.vertices.len(), 2);
    let p = project_cube(4, &ints(&[1, 1, 1, 1])).unwrap();
    assert_eq!(p.vertices.len(), 14);
    assert_eq!(p.verdict().unwrap().verdict, Verdict::Zonotope);
    assert!(project_cube(1, &ints(&[1])).is_err());
    assert!(project_cube(3, &ints(&[1, 1])).is_err());
    assert!(project_cube(3, &ints(&[0, 0, 0])).is_err());
}

#[test]
fn projections_match_the_hull_oracle() {
    let mut g = rng(11);
    for n in 2..=5 {
        let cases = if n == 5 { 4 } else { 8 };
        for _ in 0..cases {
            let d = random_normal(&mut g, n, -3, 3);
            let p = project_cube(n, &ints(&d)).unwrap();
            let corners: Vec<Point> = (0..(1usize << n))
                .map(|mask| {
                    let x: Point = (0..n).map(|i| if mask >> i & 1 == 1 { half() } else { -half() }).collect();
                    p.to_chart(&x)
                })
                .collect();
            assert_eq!(sorted(p.vertices.clone()), sorted(hull_vertices_oracle(&corners)), "direction {d:?}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn planar_round_trip(raw in int_generators(2, 6)) {
        let gens = generators_from_ints(&raw).unwrap();
        let z = zonotope_from_segments_2d(&gens).unwrap();
        let m = direction_count(gens.generators());
        prop_assume!(m >= 2);
        let p = z.polygon().unwrap();
        prop_assert_eq!(p.len(), 2 * m);
        prop_assert!(slice_lab::faces::is_centrally_symmetric(p).is_some());
        prop_assert_eq!(sorted(p.vertices().to_vec()), sorted(zonotope_vertices(&gens)));
        let back = decompose_symmetric_polygon(p).unwrap();
        prop_assert_eq!(back.canonical(), gens.canonical());
        let again = zonotope_from_segments_2d(&back).unwrap();
        prop_assert_eq!(sorted(again.vertices()), sorted(z.vertices()));
    }

    #[test]
    fn planar_vertices_match_the_hull_oracle(raw in int_generators(2, 5)) {
        let gens = generators_from_ints(&raw).unwrap();
        prop_assume!(direction_count(gens.generators()) >= 2);
        let z = zonotope_from_segments_2d(&gens).unwrap();
        prop_assert_eq!(sorted(z.vertices()), sorted(hull_vertices_oracle(&sign_sums(gens.generators()))));
    }

    #[test]
    fn spatial_vertices_match_the_hull_oracle(raw in int_generators(3, 5)) {
        let gens = generators_from_ints(&raw).unwrap();
        prop_assume!(rank(gens.generators()) == 3);
        let expected = hull_vertices_oracle(&sign_sums(gens.generators()));
        prop_assert_eq!(sorted(zonotope_vertices(&gens)), sorted(expected));
    }

    #[test]
    fn spatial_zonotopes_pass_the_verdict(raw in int_generators(3, 5)) {
        let gens = generators_from_ints(&raw).unwrap();
        prop_assume!(rank(gens.generators()) == 3);
        let v = slice_lab::faces::verdict_for_points(&zonotope_vertices(&gens)).unwrap();
        prop_assert_eq!(v.verdict, Verdict::Zonotope);
    }
}
