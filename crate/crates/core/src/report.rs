//! Serializable records behind the command-line tool: slice reports, the
//! example catalog, quadrature tables and projection summaries.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::analytic::{self, sinc_power_bound, QuadratureOptions};
use crate::arith::{Point, Rational};
use crate::error::{AnalyticError, GeometryError};
use crate::faces::{classify_polygon, face_at, face_census, FaceContact, Polygon, Side, Verdict};
use crate::measure::{section_area, slice_volume_exact};
use crate::slice::{canonicalize_normal, CubeSlice};
use crate::zonotope::project_cube;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ReportError {
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Analytic(#[from] AnalyticError),
}

pub fn point_strings(p: &Point) -> Vec<String> {
    p.iter().map(ToString::to_string).collect()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolygonRecord {
    pub class: String,
    pub vertices: Vec<Vec<String>>,
}

impl PolygonRecord {
    pub fn new(p: &Polygon) -> Self {
        PolygonRecord {
            class: classify_polygon(p).to_string(),
            vertices: p.vertices().iter().map(point_strings).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SectionRecord {
    pub axis: usize,
    pub level: String,
    /// Face class, or "Empty"/"Degenerate" when the section is not a polygon.
    pub class: String,
    pub vertex_count: usize,
    pub area: String,
    pub area_float: f64,
    pub chart_area: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SliceReport {
    pub normal: Vec<String>,
    pub dimension: usize,
    pub slice_dimension: usize,
    pub degenerate: bool,
    pub vertex_count: usize,
    pub vertices: Vec<Vec<String>>,
    pub facet_census: BTreeMap<String, usize>,
    pub zonotope_verdict: Option<String>,
    pub verdict_reason: String,
    pub witness: Option<PolygonRecord>,
    pub volume_exact: Option<String>,
    pub volume_float: Option<f64>,
    pub quadrature_volume: f64,
    pub quadrature_error_bound: f64,
    pub ball_bounds_ok: bool,
    pub ball_hypothesis_holds: bool,
    pub face_at_t: Option<PolygonRecord>,
    pub sections: Vec<SectionRecord>,
}

pub fn section_record(s: &CubeSlice, axis: usize, level: &Rational) -> Result<SectionRecord, GeometryError> {
    let points = s.section_vertices(axis, level)?;
    let area = section_area(s, axis, level)?;
    let class = match points.len() {
        0 => "Empty".to_string(),
        _ => match Polygon::from_points(&points) {
            Ok(p) => classify_polygon(&p).to_string(),
            Err(_) => "Degenerate".to_string(),
        },
    };
    Ok(SectionRecord {
        axis,
        level: level.to_string(),
        class,
        vertex_count: points.len(),
        area: area.value.to_string(),
        area_float: area.value.to_f64(),
        chart_area: area.chart_area.to_string(),
    })
}

/// Full report for the slice with the given normal. Sections are taken along
/// `axis` (default: the last coordinate).
pub fn slice_report(
    raw_normal: &[Rational],
    levels: &[Rational],
    axis: Option<usize>,
    tolerance: f64,
) -> Result<SliceReport, ReportError> {
    let h = canonicalize_normal(raw_normal)?;
    let s = CubeSlice::new(&h)?;
    let n = s.dimension();
    let slice_dimension = s.affine_dimension();
    let (verdict, reason, witness) = match crate::faces::zonotope_verdict(&s) {
        Ok(v) => (
            Some(v.verdict.to_string()),
            v.reason.to_string(),
            v.witness.as_ref().map(PolygonRecord::new),
        ),
        Err(GeometryError::DimensionUnsupported(_)) => (None, "dimension-unsupported".to_string(), None),
        Err(e) => return Err(e.into()),
    };
    let facet_census = if slice_dimension == 3 {
        face_census(&s)?
            .into_iter()
            .map(|(k, v)| (k.to_string(), v))
            .collect()
    } else {
        BTreeMap::new()
    };
    let volume = match slice_volume_exact(&s) {
        Ok(v) => Some(v),
        Err(GeometryError::VolumeDimensionUnsupported(_)) => None,
        Err(e) => return Err(e.into()),
    };
    let ball = analytic::ball_bound_check(&h.normal_rational(), tolerance)?;
    let face_at_t = match face_at(&s, n - 1, Side::Negative)? {
        FaceContact::Polygon(p) => Some(PolygonRecord::new(&p)),
        FaceContact::Degenerate(_) => None,
    };
    let axis = axis.unwrap_or(n - 1);
    let sections = levels
        .iter()
        .map(|level| section_record(&s, axis, level))
        .collect::<Result<_, _>>()?;
    Ok(SliceReport {
        normal: h.normal().iter().map(ToString::to_string).collect(),
        dimension: n,
        slice_dimension,
        degenerate: s.is_degenerate(),
        vertex_count: s.vertices().len(),
        vertices: s.vertices().iter().map(point_strings).collect(),
        facet_census,
        zonotope_verdict: verdict,
        verdict_reason: reason,
        witness,
        volume_exact: volume.as_ref().map(ToString::to_string),
        volume_float: volume.as_ref().map(|v| v.to_f64()),
        quadrature_volume: ball.value,
        quadrature_error_bound: ball.error_bound,
        ball_bounds_ok: ball.within_bounds,
        ball_hypothesis_holds: ball.hypothesis_holds,
        face_at_t,
        sections,
    })
}

impl SliceReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let line = |out: &mut String, key: &str, value: String| {
            out.push_str(&format!("{key:<22}{value}\n"));
        };
        line(&mut out, "normal", format!("({})", self.normal.join(",")));
        line(&mut out, "dimension", self.dimension.to_string());
        line(&mut out, "slice dimension", self.slice_dimension.to_string());
        line(&mut out, "degenerate", self.degenerate.to_string());
        line(&mut out, "vertices", self.vertex_count.to_string());
        if !self.facet_census.is_empty() {
            let census: Vec<String> = self
                .facet_census
                .iter()
                .map(|(k, v)| format!("{k}: {v}"))
                .collect();
            line(&mut out, "facet census", census.join(", "));
        }
        line(
            &mut out,
            "verdict",
            format!(
                "{} ({})",
                self.zonotope_verdict.as_deref().unwrap_or("unsupported"),
                self.verdict_reason
            ),
        );
        if let Some(w) = &self.witness {
            line(&mut out, "witness", format!("{} {}", w.class, format_vertices(&w.vertices)));
        }
        match (&self.volume_exact, self.volume_float) {
            (Some(exact), Some(float)) => line(&mut out, "volume (exact)", format!("{exact} = {float:.12}")),
            _ => line(&mut out, "volume (exact)", "unavailable in this dimension".to_string()),
        }
        line(
            &mut out,
            "volume (quadrature)",
            format!("{:.10} ± {:.1e}", self.quadrature_volume, self.quadrature_error_bound),
        );
        line(
            &mut out,
            "ball bounds [1, √2]",
            format!(
                "{} (|a_j| ≤ 1/√2: {})",
                if self.ball_bounds_ok { "ok" } else { "violated" },
                self.ball_hypothesis_holds
            ),
        );
        match &self.face_at_t {
            Some(f) => line(&mut out, "face at t = -1/2", format!("{} {}", f.class, format_vertices(&f.vertices))),
            None => line(&mut out, "face at t = -1/2", "none (contact is not two-dimensional)".to_string()),
        }
        for s in &self.sections {
            line(
                &mut out,
                &format!("section x{}={}", s.axis, s.level),
                format!("{} area {} = {:.12} (chart {})", s.class, s.area, s.area_float, s.chart_area),
            );
        }
        out
    }
}

fn format_vertices(vertices: &[Vec<String>]) -> String {
    let parts: Vec<String> = vertices.iter().map(|v| format!("({})", v.join(","))).collect();
    parts.join(" ")
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CatalogRow {
    pub label: String,
    pub normal: Vec<String>,
    pub predicted: String,
    pub predicted_verdict: Option<String>,
    pub predicted_face_class: String,
    pub computed_verdict: String,
    pub computed_face_class: String,
    #[serde(rename = "match")]
    pub matches: bool,
}

struct CatalogEntry {
    label: &'static str,
    normal: [i64; 4],
    predicted: &'static str,
    verdict: Option<Verdict>,
    face: &'static str,
}

const CATALOG: &[CatalogEntry] = &[
    CatalogEntry {
        label: "all coefficients equal",
        normal: [1, 1, 1, 1],
        predicted: "triangle face, not a zonoid",
        verdict: Some(Verdict::NotZonoid),
        face: "Triangle",
    },
    CatalogEntry {
        label: "(a,1,1,1), a=2 below the threshold a>=3",
        normal: [2, 1, 1, 1],
        predicted: "pentagon faces, not a zonoid",
        verdict: Some(Verdict::NotZonoid),
        face: "Pentagon",
    },
    CatalogEntry {
        label: "(a,1,1,1), a=3 at the threshold",
        normal: [3, 1, 1, 1],
        predicted: "rhombus face, parallelotope zonotope",
        verdict: Some(Verdict::Zonotope),
        face: "Parallelogram",
    },
    CatalogEntry {
        label: "(a,1,1,1), a=4 above the threshold",
        normal: [4, 1, 1, 1],
        predicted: "rhombus face, parallelotope zonotope",
        verdict: Some(Verdict::Zonotope),
        face: "Parallelogram",
    },
    CatalogEntry {
        label: "(a,a,1,1), a=2",
        normal: [2, 2, 1, 1],
        predicted: "trapezium face, not a zonoid",
        verdict: Some(Verdict::NotZonoid),
        face: "Trapezium",
    },
    CatalogEntry {
        label: "(a,b,1,1) with b+2<=a",
        normal: [4, 2, 1, 1],
        predicted: "parallelogram face, zonotope",
        verdict: Some(Verdict::Zonotope),
        face: "Parallelogram",
    },
    CatalogEntry {
        label: "(a,b,1,1) with b+2>a",
        normal: [3, 2, 1, 1],
        predicted: "pentagon face, not a zonoid",
        verdict: Some(Verdict::NotZonoid),
        face: "Pentagon",
    },
    CatalogEntry {
        label: "(a,b,c,1) with a>=b+c+1",
        normal: [5, 2, 1, 1],
        predicted: "zonotope",
        verdict: Some(Verdict::Zonotope),
        face: "Parallelogram",
    },
    CatalogEntry {
        label: "(a,b,c,1) with both conditions failing",
        normal: [3, 2, 2, 1],
        predicted: "pentagon face, not a zonoid",
        verdict: Some(Verdict::NotZonoid),
        face: "Pentagon",
    },
    CatalogEntry {
        label: "(a,b,c,1) with (i) failing and (ii) holding",
        normal: [3, 3, 2, 1],
        predicted: "hexagon face, zonoid question left open",
        verdict: None,
        face: "Hexagon",
    },
];

/// The fixed example catalog. Face classes refer to the face cut by
/// `t = −1/2`.
pub fn catalog() -> Result<Vec<CatalogRow>, ReportError> {
    CATALOG
        .iter()
        .map(|e| {
            let s = CubeSlice::from_ints(&e.normal)?;
            let verdict = crate::faces::zonotope_verdict(&s)?.verdict;
            let face = face_at(&s, 3, Side::Negative)?;
            let face_class = match face.polygon() {
                Some(p) => classify_polygon(p).to_string(),
                None => "Degenerate".to_string(),
            };
            let verdict_ok = e.verdict.is_none_or(|v| v == verdict);
            Ok(CatalogRow {
                label: e.label.to_string(),
                normal: e.normal.iter().map(ToString::to_string).collect(),
                predicted: e.predicted.to_string(),
                predicted_verdict: e.verdict.map(|v| v.to_string()),
                predicted_face_class: e.face.to_string(),
                computed_verdict: verdict.to_string(),
                matches: verdict_ok && face_class == e.face,
                computed_face_class: face_class,
            })
        })
        .collect()
}

pub fn catalog_text(rows: &[CatalogRow]) -> String {
    let mut out = format!(
        "{:<46} {:<12} {:<40} {:<14} {:<14} {}\n",
        "example", "normal", "predicted", "verdict", "face t=-1/2", "match"
    );
    for r in rows {
        out.push_str(&format!(
            "{:<46} {:<12} {:<40} {:<14} {:<14} {}\n",
            r.label,
            format!("({})", r.normal.join(",")),
            r.predicted,
            r.computed_verdict,
            r.computed_face_class,
            r.matches
        ));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IntegralRow {
    /// `I_p` for a power, or the slice volume for a normal.
    pub quantity: String,
    pub value: f64,
    pub error_bound: f64,
    pub truncation_t: f64,
    pub panel_count: usize,
    /// `√2/√p` for powers.
    pub bound: Option<f64>,
    /// Whether the value meets the bound within the error bound.
    pub equality: Option<bool>,
}

pub fn integral_power(p: u32, tolerance: f64) -> Result<IntegralRow, ReportError> {
    let q = analytic::sinc_power_integral_with(p, &QuadratureOptions::with_tolerance(tolerance))?;
    let bound = sinc_power_bound(p);
    Ok(IntegralRow {
        quantity: format!("I_{p}"),
        value: q.value,
        error_bound: q.error_bound,
        truncation_t: q.truncation_t,
        panel_count: q.panel_count,
        bound: Some(bound),
        equality: Some((q.value - bound).abs() <= q.error_bound + tolerance),
    })
}

pub fn integral_normal(normal: &[Rational], tolerance: f64) -> Result<IntegralRow, ReportError> {
    let h = canonicalize_normal(normal)?;
    let q = analytic::slice_volume_quadrature(&h.normal_rational(), tolerance)?;
    Ok(IntegralRow {
        quantity: format!("volume {h}"),
        value: q.value,
        error_bound: q.error_bound,
        truncation_t: q.truncation_t,
        panel_count: q.panel_count,
        bound: None,
        equality: None,
    })
}

impl IntegralRow {
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{:<24} {:>14} {:>10} {:>12} {:>8}",
            "quantity", "value", "error", "T", "panels"
        );
        if self.bound.is_some() {
            out.push_str(&format!(" {:>10} {:>8}", "sqrt(2/p)", "equal"));
        }
        out.push('\n');
        out.push_str(&format!(
            "{:<24} {:>14.10} {:>10.1e} {:>12.1} {:>8}",
            self.quantity, self.value, self.error_bound, self.truncation_t, self.panel_count
        ));
        if let (Some(b), Some(e)) = (self.bound, self.equality) {
            out.push_str(&format!(" {b:>10.7} {e:>8}"));
        }
        out.push('\n');
        out
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CensusReport {
    pub normal: Vec<String>,
    pub census: BTreeMap<String, usize>,
    pub facets: Vec<PolygonRecord>,
}

pub fn census_report(raw_normal: &[Rational]) -> Result<CensusReport, ReportError> {
    let h = canonicalize_normal(raw_normal)?;
    let s = CubeSlice::new(&h)?;
    let census = face_census(&s)?
        .into_iter()
        .map(|(k, v)| (k.to_string(), v))
        .collect();
    let facets = crate::faces::facets_3d(&s)?
        .iter()
        .map(PolygonRecord::new)
        .collect();
    Ok(CensusReport {
        normal: h.normal().iter().map(ToString::to_string).collect(),
        census,
        facets,
    })
}

impl CensusReport {
    pub fn to_text(&self) -> String {
        let mut out = format!("normal ({})\n", self.normal.join(","));
        for (k, v) in &self.census {
            out.push_str(&format!("{k:<24}{v}\n"));
        }
        for (i, f) in self.facets.iter().enumerate() {
            out.push_str(&format!("facet {i:<3} {:<14} {}\n", f.class, format_vertices(&f.vertices)));
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProjectionReport {
    pub direction: Vec<String>,
    pub dimension: usize,
    pub basis: Vec<Vec<String>>,
    pub generators: Vec<Vec<String>>,
    pub vertex_count: usize,
    pub vertices: Vec<Vec<String>>,
    pub zonotope_verdict: Option<String>,
}

pub fn projection_report(direction: &[Rational]) -> Result<ProjectionReport, ReportError> {
    let p = project_cube(direction.len(), direction)?;
    let verdict = match p.verdict() {
        Ok(v) => Some(v.verdict.to_string()),
        Err(GeometryError::DimensionUnsupported(_)) => None,
        Err(e) => return Err(e.into()),
    };
    Ok(ProjectionReport {
        direction: point_strings(&direction.to_vec()),
        dimension: p.dimension(),
        basis: p.basis.iter().map(point_strings).collect(),
        generators: p.generators.iter().map(point_strings).collect(),
        vertex_count: p.vertices.len(),
        vertices: p.vertices.iter().map(point_strings).collect(),
        zonotope_verdict: verdict,
    })
}

impl ProjectionReport {
    pub fn to_text(&self) -> String {
        let mut out = format!("direction ({})\n", self.direction.join(","));
        out.push_str(&format!("chart basis {}\n", format_vertices(&self.basis)));
        out.push_str(&format!("generators {}\n", format_vertices(&self.generators)));
        out.push_str(&format!(
            "vertices ({}) {}\n",
            self.vertex_count,
            format_vertices(&self.vertices)
        ));
        out.push_str(&format!(
            "verdict {}\n",
            self.zonotope_verdict.as_deref().unwrap_or("unsupported")
        ));
        out
    }
}
