use std::fs;
use std::process::{Command, Output};

use tribone::engine::{verify_tiling, Tiling, Verdict};
use tribone::hexlattice::{Cell, Placement, TriboneType};
use tribone_cli::render_svg;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tribone"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn check_symmetric_26() {
    let o = run(&["check", "26", "--symmetric"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o).trim(),
        r#"{"n":26,"symmetric":true,"tileable":true,"remainder":"0","closed_form_check":true}"#
    );
    let v: Verdict = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v.tileable);
}

#[test]
fn fixed_cell_is_a_domain_error() {
    let o = run(&["check", "10", "--symmetric"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("fixed"));
    assert!(o.stdout.is_empty());
    assert_eq!(run(&["certificate", "7"]).status.code(), Some(1));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["check", "5", "--bogus"][..],
        &["frobnicate"],
        &["check"],
        &["oracle", "x"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty());
    }
    assert!(String::from_utf8_lossy(&run(&["check", "5", "--bogus"]).stderr).contains("Usage: tribone check"));
}

#[test]
fn selftest_passes() {
    let o = run(&["selftest", "--verbose"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(!out.contains("FAIL"));
    assert!(out.contains("PASS N=3k, k=3d+1 remainder of P"));
    let json: serde_json::Value = serde_json::from_str(&stdout(&run(&["selftest", "--format", "json"]))).unwrap();
    assert_eq!(json["passed"], true);
}

#[test]
fn range_matches_single_queries() {
    let o = run(&["check", "--range", "7..12"]);
    assert_eq!(o.status.code(), Some(0));
    let items: Vec<Verdict> = serde_json::from_str(&stdout(&o)).unwrap();
    let tileable: Vec<u32> = items.iter().filter(|v| v.tileable).map(|v| v.n).collect();
    assert_eq!(tileable, [8, 9]);
    assert_eq!(items.len(), 6);
    let sym = run(&["check", "--range", "25..28", "--symmetric", "--format", "text"]);
    let text = stdout(&sym);
    assert_eq!(text.lines().count(), 4);
    assert!(text.contains("T_25 symmetric: error"));
    assert!(text.contains("T_26 symmetric: tileable"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["certificate", "26", "--symmetric"][..],
        &["check", "--range", "1..30"],
        &["certificate", "9", "--format", "svg"],
        &["oracle", "9", "--sweep"],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
}

#[test]
fn certificates_round_trip_and_verify() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t27.json");
    let o = run(&["certificate", "27", "--symmetric", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let t: Tiling = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert!(verify_tiling(27, &t, true));
    let plain: Tiling = serde_json::from_str(&stdout(&run(&["certificate", "8"]))).unwrap();
    assert!(verify_tiling(8, &plain, false));
    let text = stdout(&run(&["certificate", "8", "--format", "text"]));
    assert_eq!(text.lines().count(), plain.placements.len() + 1);
}

#[test]
fn groebner_of_an_ideal_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ideal.txt");
    fs::write(
        &path,
        "vars: x y\norder: deglex\n1 + x + x^2\n1 + y + y^2 # second\n1 + x*y + x^2*y^2\n",
    )
    .unwrap();
    let o = run(&["groebner", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(json["order"], "deglex");
    assert_eq!(json["basis"].as_array().unwrap().len(), 4);
    assert!(json["basis"].as_array().unwrap().contains(&"3*x - 3*y".into()));
    fs::write(&path, "vars: x\n1 + y\n").unwrap();
    let bad = run(&["groebner", path.to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("line 2"));
}

#[test]
fn oracle_reports() {
    let o = run(&["oracle", "8", "--symmetric"]);
    let json: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(json["solvable"], false);
    assert_eq!(json["window_margin"], 3);
    let sweep: Vec<serde_json::Value> =
        serde_json::from_str(&stdout(&run(&["oracle", "26", "--symmetric", "--sweep"]))).unwrap();
    assert_eq!(sweep.last().unwrap()["solvable"], true);
    assert_eq!(run(&["oracle", "30", "--column-cap", "10"]).status.code(), Some(1));
}

#[test]
fn timeout_fails_cleanly() {
    let o = run(&["--timeout-seconds", "0", "oracle", "30", "--symmetric", "--sweep"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("timed out"));
}

#[test]
fn render_writes_svg() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("t.json");
    let svg = dir.path().join("t.svg");
    fs::write(&json, stdout(&run(&["certificate", "9"]))).unwrap();
    let o = run(&["render", json.to_str().unwrap(), "--out", svg.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let body = fs::read_to_string(&svg).unwrap();
    assert!(body.starts_with("<svg") && body.contains(r#"class="bar""#));
    assert_eq!(run(&["render", json.to_str().unwrap()]).status.code(), Some(2));
}

type Bar = ((f64, f64), (f64, f64), i64);

fn attr(line: &str, name: &str) -> f64 {
    let key = format!(r#" {name}=""#);
    let start = line.find(&key).unwrap() + key.len();
    let end = start + line[start..].find('"').unwrap();
    line[start..end].parse().unwrap()
}

fn bars(svg: &str) -> Vec<Bar> {
    svg.lines()
        .filter(|l| l.contains(r#"class="bar""#))
        .map(|l| {
            (
                (attr(l, "x1"), attr(l, "y1")),
                (attr(l, "x2"), attr(l, "y2")),
                attr(l, "data-weight") as i64,
            )
        })
        .collect()
}

#[test]
fn symmetric_rendering_is_rotation_invariant() {
    let t: Tiling = serde_json::from_str(&stdout(&run(&["certificate", "26", "--symmetric"]))).unwrap();
    let bs = bars(&render_svg(&t));
    assert!(!bs.is_empty());
    // the mean of a rotation-invariant multiset is the rotation centre
    let k = (2 * bs.len()) as f64;
    let cx = bs.iter().map(|(a, b, _)| a.0 + b.0).sum::<f64>() / k;
    let cy = bs.iter().map(|(a, b, _)| a.1 + b.1).sum::<f64>() / k;
    let (s, c) = (120f64.to_radians().sin(), 120f64.to_radians().cos());
    let rot = |(x, y): (f64, f64)| (cx + c * (x - cx) - s * (y - cy), cy + s * (x - cx) + c * (y - cy));
    let close = |p: (f64, f64), q: (f64, f64)| (p.0 - q.0).abs() < 0.05 && (p.1 - q.1).abs() < 0.05;
    for &(a, b, w) in &bs {
        let (ra, rb) = (rot(a), rot(b));
        let hits = bs
            .iter()
            .filter(|&&(p, q, v)| v == w && ((close(p, ra) && close(q, rb)) || (close(p, rb) && close(q, ra))))
            .count();
        assert_eq!(hits, 1);
    }
}

#[test]
fn render_examples() {
    let empty = Tiling {
        placements: vec![],
        region_n: 0,
        symmetric: false,
    };
    assert!(bars(&render_svg(&empty)).is_empty());
    let one = Tiling {
        placements: vec![Placement::new(TriboneType::X, Cell::ORIGIN, 1)],
        region_n: 0,
        symmetric: false,
    };
    assert_eq!(bars(&render_svg(&one)).len(), 1);
    assert_eq!(render_svg(&one), render_svg(&one.clone()));
}
