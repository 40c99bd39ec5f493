use std::process::{Command, Output};

use slice_lab::report::{CatalogRow, CensusReport, IntegralRow, ProjectionReport, SliceReport};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_slice-lab")).args(args).output().unwrap()
}

fn run_with_threads(args: &[&str], threads: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_slice-lab"))
        .args(args)
        .env("SLICE_LAB_THREADS", threads)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn slice_json_round_trips() {
    let o = run(&["slice", "--normal", "1,1,1,1", "--section", "0,-1/4,-1/2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let r: SliceReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.normal, ["1", "1", "1", "1"]);
    assert_eq!(r.slice_dimension, 3);
    assert_eq!(r.vertex_count, 6);
    assert_eq!(r.facet_census.get("Triangle"), Some(&8));
    assert_eq!(r.zonotope_verdict.as_deref(), Some("NotZonoid"));
    assert_eq!(r.witness.as_ref().unwrap().class, "Triangle");
    assert_eq!(r.volume_exact.as_deref(), Some("4/3"));
    assert!((r.quadrature_volume - 4.0 / 3.0).abs() < 1e-7);
    assert!(r.ball_bounds_ok);
    let chart: Vec<&str> = r.sections.iter().map(|s| s.chart_area.as_str()).collect();
    assert_eq!(chart, ["3/4", "11/16", "1/2"]);
    let classes: Vec<&str> = r.sections.iter().map(|s| s.class.as_str()).collect();
    assert_eq!(classes, ["Hexagon", "Hexagon", "Triangle"]);
    let again = serde_json::to_string_pretty(&r).unwrap();
    assert_eq!(again.trim_end(), stdout(&o).trim_end());
}

#[test]
fn slice_text_output() {
    let o = run(&["slice", "--normal", "3,1,1,1", "--section", "1/4"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("Zonotope"));
    assert!(text.contains("2/3*sqrt(3)"));
    assert!(text.contains("Parallelogram area 1/3*sqrt(11)"));
}

#[test]
fn sections_beyond_the_cube_are_empty() {
    let o = run(&["slice", "--normal", "1,1,1,1", "--section", "1", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let r: SliceReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.sections[0].class, "Empty");
    assert_eq!(r.sections[0].area, "0");
}

#[test]
fn rational_and_negative_normals_are_canonicalized() {
    let o = run(&["slice", "--normal", "-1/2,-1/2,-1/2,-1/2", "--json"]);
    let r: SliceReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.normal, ["1", "1", "1", "1"]);
}

#[test]
fn high_dimensional_slices_report_quadrature_only() {
    let o = run(&["slice", "--normal", "1,2,3,4,5", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let r: SliceReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(r.zonotope_verdict.is_none());
    assert!(r.volume_exact.is_none());
    assert!(r.ball_bounds_ok);
}

#[test]
fn catalog_passes() {
    let o = run(&["catalog", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let rows: Vec<CatalogRow> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(rows.len(), 10);
    assert!(rows.iter().all(|r| r.matches));
    assert!(stdout(&o).contains("\"match\": true"));
    let text = run(&["catalog"]);
    assert_eq!(text.status.code(), Some(0));
    assert_eq!(stdout(&text).lines().count(), 11);
}

#[test]
fn integral_outputs() {
    let o = run(&["integral", "--p", "2", "--json"]);
    let row: IntegralRow = serde_json::from_str(&stdout(&o)).unwrap();
    assert!((row.value - 1.0).abs() < 1e-8);
    assert_eq!(row.equality, Some(true));
    let o = run(&["integral", "--p", "4", "--json"]);
    let row: IntegralRow = serde_json::from_str(&stdout(&o)).unwrap();
    assert!((row.value - 2.0 / 3.0).abs() < 1e-8);
    assert_eq!(row.equality, Some(false));
    let o = run(&["integral", "--normal", "2,1,1,1", "--tol", "1e-10", "--json"]);
    let row: IntegralRow = serde_json::from_str(&stdout(&o)).unwrap();
    assert!((row.value - 23.0 / 48.0 * 7.0_f64.sqrt()).abs() < 1e-9);
    assert!(stdout(&run(&["integral", "--p", "3"])).contains("I_3"));
}

#[test]
fn census_and_project() {
    let o = run(&["census", "--normal", "2,1,1,1", "--json"]);
    let c: CensusReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(c.census.get("Pentagon"), Some(&6));
    assert_eq!(c.census.get("Triangle"), Some(&2));
    assert_eq!(c.facets.len(), 8);
    let o = run(&["project", "--direction", "1,1,1,1", "--json"]);
    let p: ProjectionReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(p.vertex_count, 14);
    assert_eq!(p.zonotope_verdict.as_deref(), Some("Zonotope"));
    let o = run(&["project", "--normal", "1,1,1"]);
    assert!(stdout(&o).contains("vertices (6)"));
}

#[test]
fn bad_input_exits_with_two() {
    for args in [
        vec!["slice", "--normal", "0,0,0"],
        vec!["slice", "--normal", "1,x"],
        vec!["slice", "--normal", "1"],
        vec!["slice", "--normal", "1,1,1", "--section", "0", "--axis", "7"],
        vec!["integral", "--p", "1"],
        vec!["integral", "--p", "4", "--tol", "1e-14"],
        vec!["integral"],
        vec!["census", "--normal", "1,1,1,1,1"],
        vec!["frobnicate"],
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty() || args[0] == "slice", "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
    let o = run(&["slice", "--normal", "1,x"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("--normal"));
}

#[test]
fn output_is_deterministic_across_thread_counts() {
    let args = ["slice", "--normal", "5,-3,2,7", "--section", "0,1/8,-3/8", "--json"];
    let one = run_with_threads(&args, "1");
    let four = run_with_threads(&args, "4");
    let default = run(&args);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(stdout(&one), stdout(&four));
    assert_eq!(stdout(&one), stdout(&default));
    assert_eq!(stdout(&run(&["catalog"])), stdout(&run_with_threads(&["catalog"], "3")));
}
