//! Exact slices of the cube `[-1/2, 1/2]ⁿ` by central hyperplanes: vertex
//! enumeration, facet classification, zonotope recognition, exact and
//! numerical volumes, and planar zonotope constructions.

pub mod analytic;
pub mod arith;
pub mod cli;
pub mod error;
pub mod faces;
pub mod linalg;
pub mod measure;
pub mod report;
pub mod slice;
pub mod zonotope;

pub use analytic::{
    ball_bound_check, sinc_power_bound, sinc_power_integral, sinc_power_integral_with,
    slice_volume_quadrature, BallBoundReport, QuadratureOptions, QuadratureResult,
};
pub use arith::{parse_rational, Point, Rational, SurdValue};
pub use error::{AnalyticError, GeometryError, ParseError};
pub use faces::{
    classify_polygon, face_at, face_census, facets_3d, is_centrally_symmetric, zonotope_verdict,
    FaceClass, FaceContact, Polygon, Side, Verdict, ZonotopeVerdict,
};
pub use measure::{
    cavalieri_volume, polygon_area, polygon_area_value, section_area, section_area_profile,
    slice_volume_exact, AreaValue,
};
pub use slice::{canonicalize_normal, slice_vertices, CubeSlice, Hyperplane};
pub use zonotope::{
    decompose_symmetric_polygon, project_cube, zonotope_from_segments_2d, zonotope_vertices,
    PlanarZonotope, ProjectedCube, SegmentGenerators,
};
