//! End-to-end runs of the `rainbow3` binary.

use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_rainbow3"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let input = stdin.unwrap_or("").to_string();
    let mut pipe = child.stdin.take().unwrap();
    std::thread::spawn(move || pipe.write_all(input.as_bytes()));
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

fn gen(args: &[&str]) -> String {
    let o = run(&[&["gen"], args].concat(), None);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn windmill_pipeline_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("w3.txt");
    let coloring = dir.path().join("w3.col");
    let o = run(&["gen", "french-windmill", "--t", "3", "-o", path_str(&graph)], None);
    assert_eq!(o.status.code(), Some(0));
    let labels: Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("w3.txt.labels.json")).unwrap()).unwrap();
    assert_eq!(labels["labels"]["v0"], 0);

    let o = run(&["color", path_str(&graph), "--method", "theorem3", "--check", "-o", path_str(&coloring)], None);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&coloring).unwrap();
    assert!(text.contains("# method theorem3"));
    assert!(text.contains("# dom 0"));
    assert!(text.contains("# colors 6"));
    assert_eq!(text.lines().filter(|l| l.starts_with("# cert")).count(), 9);

    let o = run(&["verify", path_str(&coloring), "--graph", path_str(&graph)], None);
    assert_eq!(o.status.code(), Some(0));
    let r = json(&o);
    assert_eq!(r["verdict"], true);
    assert_eq!(r["colors"], 6);
    assert_eq!(r["triples_checked"], 120);
}

#[test]
fn windmill_pipeline_through_pipes() {
    let g = gen(&["french-windmill", "--t", "3"]);
    let c = run(&["color", "--method", "theorem3"], Some(&g));
    assert_eq!(c.status.code(), Some(0));
    let v = run(&["verify"], Some(&stdout(&c)));
    assert_eq!(v.status.code(), Some(0));
    assert_eq!(json(&v)["colors"], 6);
}

#[test]
fn false_verdicts_exit_one() {
    let g = gen(&["complete", "--n", "4"]);
    let mono: String = "# n 4\n".to_string() + &(0..4).flat_map(|u| (u + 1..4).map(move |v| format!("{u} {v} 1\n"))).collect::<String>();
    let o = run(&["verify"], Some(&mono));
    assert_eq!(o.status.code(), Some(1));
    let r = json(&o);
    assert_eq!(r["verdict"], false);
    assert_eq!(r["witness"]["triple"], serde_json::json!([0, 1, 2]));

    // a certificate whose stored path no longer matches a leg
    let c = stdout(&run(&["color", "--method", "theorem3"], Some(&gen(&["french-windmill", "--t", "2"]))));
    let tampered = c.replacen("# cert 1 : 1 0;", "# cert 1 : 1 2;", 1);
    assert_ne!(tampered, c);
    let o = run(&["verify"], Some(&tampered));
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["witness"]["certificate"]["vertex"], 1);
    let o = run(&["verify", "--color-limit", "2"], Some(&c));
    assert_eq!(o.status.code(), Some(2));
    let _ = g;
}

#[test]
fn exact_values() {
    let o = run(&["exact", "--kmax", "3"], Some(&gen(&["complete-bipartite", "--k", "3", "--t", "3"])));
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["rx3"], 3);
    let o = run(&["exact", "--kmax", "2"], Some(&gen(&["complete-bipartite", "--k", "3", "--t", "3"])));
    assert_eq!(json(&o)["rx3"], Value::Null);
}

#[test]
fn bounds_reports() {
    let w = run(&["bounds"], Some(&gen(&["french-windmill", "--t", "3"])));
    assert_eq!(w.status.code(), Some(0));
    let r = json(&w);
    assert_eq!(r["bound_c"]["value"], 6);
    assert_eq!(r["best"], 6);
    assert!(r["sdiam3"].as_u64().unwrap() >= 2);
    let keys: Vec<&str> = r.as_object().unwrap().keys().map(|k| k.as_str()).collect();
    for k in ["n", "m", "delta", "n1", "n2", "gamma_c", "sdiam3", "bound_a", "bound_b", "bound_c", "corollary_bounds", "best"] {
        assert!(keys.contains(&k), "missing {k}");
    }
    let t = json(&run(&["bounds"], Some(&gen(&["threshold-example", "--t", "5"]))));
    assert_eq!(t["bound_a"]["value"], 5);
    assert_eq!(t["bound_b"]["note"], "cited, not constructed");
    assert_eq!(t["bound_c"]["value"], 6);
}

#[test]
fn steiner_reports() {
    let g = gen(&["gstar", "--delta", "3", "--m", "1"]);
    let r = json(&run(&["steiner"], Some(&g)));
    assert!(r["sdiam3"].as_u64().unwrap() >= 8);
    let r = json(&run(&["steiner", "--triple", "0,1,2"], Some(&gen(&["path", "--n", "5"]))));
    assert_eq!(r["distance"], 2);
}

#[test]
fn errors_exit_two_and_name_the_problem() {
    let o = run(&["verify"], Some("# n 3\n0 1 1\n1 x 2\n"));
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
    let o = run(&["bounds"], Some("3 2\n0 1\n"));
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    let o = run(&["exact", "--kmax", "9"], Some(&gen(&["complete", "--n", "4"])));
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("kmax limit exceeded: 9 > 8"));
    let o = run(&["color", "--method", "rainbow"], None);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["frobnicate"], None);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn user_supplied_dominating_set() {
    let dir = tempfile::tempdir().unwrap();
    let dom = dir.path().join("d.txt");
    std::fs::write(&dom, "5 6 # y1 y2\n7\n").unwrap();
    let g = gen(&["threshold-example", "--t", "5"]);
    let c = run(&["color", "--method", "theorem4", "--dom", path_str(&dom)], Some(&g));
    assert_eq!(c.status.code(), Some(0), "{}", String::from_utf8_lossy(&c.stderr));
    assert!(stdout(&c).contains("# colors 5"));
    std::fs::write(&dom, "5\n").unwrap();
    let o = run(&["color", "--method", "theorem4", "--dom", path_str(&dom)], Some(&g));
    assert_eq!(o.status.code(), Some(2));
}

/// Every coloring `color` emits passes `verify`, across generator families and
/// all three methods.
#[test]
fn color_verify_round_trip() {
    let families: &[&[&str]] = &[
        &["complete", "--n", "5"],
        &["complete-bipartite", "--k", "3", "--t", "4"],
        &["cycle", "--n", "7"],
        &["path", "--n", "6"],
        &["star", "--n", "5"],
        &["gstar", "--delta", "3", "--m", "1"],
        &["threshold-example", "--t", "6"],
        &["chain-example", "--k", "6", "--t", "10"],
        &["french-windmill", "--t", "4"],
        &["threshold", "--weights", "3,1,1,2,0,2", "--threshold", "3"],
        &["random", "--n", "14", "--delta", "3", "--seed", "5"],
        &["random", "--n", "18", "--delta", "4", "--seed", "9"],
    ];
    for fam in families {
        let g = gen(fam);
        for method in ["theorem3", "theorem4", "spanning"] {
            let c = run(&["color", "--method", method], Some(&g));
            assert_eq!(c.status.code(), Some(0), "{fam:?} {method}: {}", String::from_utf8_lossy(&c.stderr));
            let v = run(&["verify", "--color-limit", "32"], Some(&stdout(&c)));
            assert_eq!(v.status.code(), Some(0), "{fam:?} {method}: {}", stdout(&v));
        }
    }
}

#[test]
fn outputs_are_deterministic() {
    let a = gen(&["random", "--n", "12", "--delta", "3", "--seed", "7"]);
    assert_eq!(a, gen(&["random", "--n", "12", "--delta", "3", "--seed", "7"]));
    let b1 = run(&["bounds"], Some(&a));
    let b2 = run(&["bounds"], Some(&a));
    assert_eq!(b1.stdout, b2.stdout);
    let c1 = run(&["color"], Some(&a));
    assert_eq!(c1.stdout, run(&["color"], Some(&a)).stdout);
}
