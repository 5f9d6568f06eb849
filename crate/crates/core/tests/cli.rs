use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use polymove::moves::{replay, MoveScript};
use polymove::triangulation::Triangulation;
use tempfile::TempDir;

const DIAGONAL: &str = r#"{"ambient":2,"dim":2,"simplices":[[["0","0"],["1","0"],["1","1"]],[["0","0"],["1","1"],["0","1"]]]}"#;
const OTHER_DIAGONAL: &str = r#"{"ambient":2,"dim":2,"simplices":[[["0","0"],["1","0"],["0","1"]],[["1","0"],["1","1"],["0","1"]]]}"#;
const OVERLAPPING: &str = r#"{"ambient":2,"dim":2,"simplices":[[["0","0"],["1","0"],["1","1"]],[["0","0"],["1","0"],["0","1"]]]}"#;

fn polymove(args: &[&dyn AsRef<std::ffi::OsStr>]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polymove"))
        .args(args.iter().map(|a| a.as_ref()))
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

struct Files(TempDir);

impl Files {
    fn new() -> Self {
        let f = Files(tempfile::tempdir().unwrap());
        f.write("d1.json", DIAGONAL);
        f.write("d2.json", OTHER_DIAGONAL);
        f
    }

    fn path(&self, name: &str) -> PathBuf {
        self.0.path().join(name)
    }

    fn write(&self, name: &str, text: &str) -> PathBuf {
        let p = self.path(name);
        std::fs::write(&p, text).unwrap();
        p
    }
}

fn triangulation(path: &Path) -> Triangulation {
    Triangulation::from_json(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn validate_reports_and_sets_status() {
    let f = Files::new();
    let o = polymove(&[&"validate", &"-i", &f.path("d1.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "valid");
    let bad = f.write("bad.json", OVERLAPPING);
    let o = polymove(&[&"validate", &"--input", &bad]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).starts_with("invalid"));
}

#[test]
fn connect_then_replay_reaches_target() {
    let f = Files::new();
    let script = f.path("s.json");
    let o = polymove(&[&"connect", &f.path("d1.json"), &f.path("d2.json"), &"-o", &script]);
    assert_eq!(o.status.code(), Some(0));
    let out = f.path("out.json");
    let o = polymove(&[&"replay", &"-i", &f.path("d1.json"), &"--script", &script, &"-o", &out]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(triangulation(&out), triangulation(&f.path("d2.json")));

    let back = f.path("back.json");
    assert!(polymove(&[&"invert", &"-i", &script, &"-o", &back]).status.success());
    let o = polymove(&[&"replay", &"-i", &out, &"--script", &back]);
    assert_eq!(Triangulation::from_json(&stdout(&o)).unwrap(), triangulation(&f.path("d1.json")));

    // replaying from the wrong start fails with the step on stderr
    let o = polymove(&[&"replay", &"-i", &f.path("d2.json"), &"--script", &script]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("step 0"));
}

#[test]
fn valuate_builtins() {
    let f = Files::new();
    let run = |name: &str| stdout(&polymove(&[&"valuate", &"-i", &f.path("d1.json"), &"--valuation", &name]));
    assert_eq!(run("volume").trim(), "1");
    assert_eq!(run("euler").trim(), "1");
    assert_eq!(run("moment:0").trim(), "1/2");
    let o = polymove(&[&"valuate", &"-i", &f.path("d1.json"), &"--valuation", &"area"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn star_refine_and_bsp() {
    let f = Files::new();
    let star = f.path("star.json");
    let o = polymove(&[&"star", &"-i", &f.path("d1.json"), &"--point", &"1/2,1/3", &"-o", &star]);
    assert!(o.status.success());
    assert_eq!(triangulation(&star).len(), 4);
    let outside = polymove(&[&"star", &"-i", &f.path("d1.json"), &"--point", &"2,0"]);
    assert_eq!(outside.status.code(), Some(3));

    let o = polymove(&[&"refine", &f.path("d1.json"), &f.path("d2.json")]);
    assert_eq!(Triangulation::from_json(&stdout(&o)).unwrap().len(), 4);

    let points = f.write("hex.json", r#"{"points":[["0","0"],["2","0"],["3","1"],["2","2"],["0","2"],["-1","1"]]}"#);
    let o = polymove(&[&"bsp", &"-i", &points]);
    let tree: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    fn leaves(v: &serde_json::Value) -> usize {
        match v.get("leaf") {
            Some(_) => 1,
            None => leaves(&v["plus"]) + leaves(&v["minus"]),
        }
    }
    assert_eq!(leaves(&tree), 4);
}

#[test]
fn oracle_finds_the_flip() {
    let f = Files::new();
    let c = f.write("c.json", r#"{"points":[["1/2","1/2"]]}"#);
    let o = polymove(&[&"oracle", &f.path("d1.json"), &f.path("d2.json"), &"--candidates", &c, &"--max-depth", &"4"]);
    let script = MoveScript::from_json(&stdout(&o)).unwrap();
    assert_eq!(script.len(), 4);
    assert_eq!(replay(&triangulation(&f.path("d1.json")), &script).unwrap(), triangulation(&f.path("d2.json")));
    let o = polymove(&[&"oracle", &f.path("d1.json"), &f.path("d2.json"), &"--candidates", &c, &"--max-depth", &"3"]);
    assert_eq!(stdout(&o).trim(), "none");
}

fn polygons(svg: &str) -> usize {
    let doc = roxmltree::Document::parse(svg).expect("well-formed svg");
    doc.descendants().filter(|n| n.has_tag_name("polygon")).count()
}

#[test]
fn render_frames() {
    let f = Files::new();
    let o = polymove(&[&"render", &"-i", &f.path("d1.json")]);
    assert_eq!(polygons(&stdout(&o)), 2);
    let script = f.path("s.json");
    polymove(&[&"connect", &f.path("d1.json"), &f.path("d2.json"), &"-o", &script]);
    let n = MoveScript::from_json(&std::fs::read_to_string(&script).unwrap()).unwrap().len();
    let frames = f.path("frames");
    let o = polymove(&[&"render", &"-i", &f.path("d1.json"), &"--script", &script, &"--frames", &frames]);
    assert!(o.status.success());
    let mut names: Vec<_> = std::fs::read_dir(&frames).unwrap().map(|e| e.unwrap().path()).collect();
    names.sort();
    assert_eq!(names.len(), n + 1);
    let first = std::fs::read_to_string(&names[0]).unwrap();
    let last = std::fs::read_to_string(names.last().unwrap()).unwrap();
    assert_eq!(polygons(&first), 2);
    assert_eq!(polygons(&last), 2);
}

#[test]
fn parse_failures_exit_two() {
    let f = Files::new();
    let broken = f.write("broken.json", "{\"ambient\": 2");
    assert_eq!(polymove(&[&"validate", &"-i", &broken]).status.code(), Some(2));
    assert_eq!(polymove(&[&"validate", &"-i", &f.path("missing.json")]).status.code(), Some(2));
    assert_eq!(polymove(&[&"star", &"-i", &f.path("d1.json"), &"--point", &"1/0,1"]).status.code(), Some(2));
    assert_eq!(polymove(&[&"transmogrify"]).status.code(), Some(2));
}
