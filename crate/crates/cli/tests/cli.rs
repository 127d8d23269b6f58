use std::io::Write as _;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_daggertrace"));
    c.env_remove("DAGGERTRACE_SEED");
    c
}

fn sessions() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../sessions")
}

fn run_stdin(args: &[&str], src: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(src.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

#[test]
fn reflection_trace_over_integers() {
    let out = run_stdin(
        &["eval", "-", "--format", "json"],
        "rig integers\nlet f = [[1, 0], [0, -1]]\nshow trace(f, [1], [1])\n",
    );
    assert_eq!(code(&out), 0);
    let r = json(&out);
    assert_eq!(r["schema"], "daggertrace.report/v1");
    let v = &r["results"][1]["value"];
    assert_eq!(v["kind"], "trace");
    assert_eq!(v["kernel_image"]["verdict"], "exists");
    assert_eq!(v["kernel_image"]["matrix"]["text"], "[[1]]");
    assert_eq!(v["pseudotrace"]["verdict"], "not-exists");
    assert!(v["witnesses"]["i"]["text"].is_string());
}

#[test]
fn rational_pseudoinverse() {
    let out = run_stdin(&["eval", "-", "--rig", "rationals", "--format", "json"], "show pinv([[1, 1], [0, 1]])\n");
    assert_eq!(code(&out), 0);
    let v = &json(&out)["results"][0]["value"];
    assert_eq!(v["matrix"]["entries"], serde_json::json!([["1", "-1"], ["0", "1"]]));
}

#[test]
fn contraction_closure_check() {
    let out = bin()
        .args(["check", "--suite", "contraction-closure", "--seed", "42", "--cases", "200", "--format", "json"])
        .output()
        .unwrap();
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stdout));
    let r = json(&out);
    assert_eq!(r["passed"], true);
    assert_eq!(r["seed"], 42);
    assert_eq!(r["reports"][0]["cases"], 200);
}

#[test]
fn seed_from_environment() {
    let run = |env: Option<&str>| {
        let mut c = bin();
        c.args(["check", "--suite", "coincidence", "--cases", "10", "--format", "json"]);
        if let Some(s) = env {
            c.env("DAGGERTRACE_SEED", s);
        }
        json(&c.output().unwrap())["seed"].as_u64().unwrap()
    };
    assert_eq!(run(None), 42);
    assert_eq!(run(Some("7")), 7);
}

#[test]
fn shipped_sessions() {
    for (file, expected) in [("reflection.dts", 0), ("pinv.dts", 0), ("dual.dts", 0), ("words.dts", 3)] {
        let out = bin().arg("eval").arg(sessions().join(file)).output().unwrap();
        assert_eq!(code(&out), expected, "{file}: {}", String::from_utf8_lossy(&out.stdout));
    }
}

#[test]
fn exit_codes() {
    let eval = |src: &str| code(&run_stdin(&["eval", "-", "--rig", "integers"], src));
    assert_eq!(eval("assert pinv([[1]])"), 0);
    assert_eq!(eval("assert pinv([[2]])"), 1);
    assert_eq!(eval("assert pinv([[2]])\nassert is_mono([[1]])"), 1);
    assert_eq!(eval("show [[1"), 2);
    assert_eq!(code(&run_stdin(&["eval", "-", "--rig", "word-rig-xy"], "assert pinv([[x]])")), 3);
    assert_eq!(code(&run_stdin(&["eval", "-", "--rig", "word-rig-xy"], "assert pinv([[x]])\nassert [[x]] == [[y]]")), 1);
    assert_eq!(code(&run_stdin(&["eval", "-", "--rig", "nope"], "show [[1]]")), 2);
    assert_eq!(code(&run_stdin(&["eval", "-"], "show [[1]]")), 2);
    assert_eq!(code(&bin().args(["check", "--suite", "nope"]).output().unwrap()), 2);
    assert_eq!(code(&bin().args(["frobnicate"]).output().unwrap()), 2);
}

#[test]
fn parse_errors_report_position() {
    let out = run_stdin(&["eval", "-", "--rig", "rationals"], "let f = [[1]]\n\nshow f ; (f\n");
    assert_eq!(code(&out), 2);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("-:3:"), "{err}");
}

#[test]
fn dimension_errors_name_the_statement() {
    let out = run_stdin(&["eval", "-", "--rig", "rationals", "--format", "json"], "let f = [[1, 2]]\nshow f ; f\n");
    assert_eq!(code(&out), 2);
    let r = json(&out);
    assert_eq!(r["error"]["location"], "-:2:1");
    assert_eq!(r["error"]["statement"], "show f ; f");
    assert!(String::from_utf8_lossy(&out.stderr).contains("show f ; f"));
}

#[test]
fn results_round_trip_through_the_session_grammar() {
    let src = "let a = [[1/2, -3], [0, 7]]\nshow pinv(a)\nshow a!\nshow a ; a + a";
    for rig in ["rationals", "gaussian-rationals"] {
        let r = json(&run_stdin(&["eval", "-", "--rig", rig, "--format", "json"], src));
        for res in r["results"].as_array().unwrap() {
            let m = &res["value"]["matrix"];
            let text = m["text"].as_str().unwrap();
            let back = json(&run_stdin(&["eval", "-", "--rig", rig, "--format", "json"], &format!("show {text}")));
            assert_eq!(&back["results"][0]["value"]["matrix"], m, "{rig}: {text}");
        }
    }
    let r = json(&run_stdin(&["eval", "-", "--rig", "free-isometry", "--format", "json"], "show [[x!]] ; [[x + 1]]"));
    let m = &r["results"][0]["value"]["matrix"];
    let back = json(&run_stdin(
        &["eval", "-", "--rig", "free-isometry", "--format", "json"],
        &format!("show {}", m["text"].as_str().unwrap()),
    ));
    assert_eq!(&back["results"][0]["value"]["matrix"], m);
}

#[test]
fn reports_are_deterministic() {
    let session = sessions().join("reflection.dts");
    let a = bin().arg("eval").arg(&session).args(["--format", "json"]).output().unwrap();
    let b = bin().arg("eval").arg(&session).args(["--format", "json"]).output().unwrap();
    assert_eq!(a.stdout, b.stdout);
    let check = || {
        bin()
            .args(["check", "--suite", "penrose", "--seed", "9", "--cases", "20", "--format", "json"])
            .output()
            .unwrap()
            .stdout
    };
    assert_eq!(check(), check());
}

#[test]
fn output_file() {
    let dir = std::env::temp_dir().join(format!("daggertrace-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = bin()
        .arg("pinv")
        .arg(sessions().join("pinv.dts"))
        .args(["--format", "json", "--output"])
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let r: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(r["command"], "pinv");
    assert_eq!(r["results"].as_array().unwrap().len(), 2);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn trace_command_traces_trailing_dimensions() {
    let out = bin()
        .arg("trace")
        .arg(sessions().join("dual.dts"))
        .args(["--traced", "1", "--format", "json"])
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
    let v = &json(&out)["results"][0]["value"];
    assert_eq!(v["pseudotrace"]["matrix"]["text"], "[[-1]]");
    assert_eq!(v["kernel_image"]["verdict"], "not-exists");
}

#[test]
fn corpus_command() {
    let out = bin().args(["corpus", "--format", "json"]).output().unwrap();
    assert_eq!(code(&out), 0);
    let r = json(&out);
    assert_eq!(r["cases"].as_array().unwrap().len(), 17);
    let out = bin().args(["corpus", "--case", "c09"]).output().unwrap();
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("C09 pass"));
    assert_eq!(code(&bin().args(["corpus", "--case", "C99"]).output().unwrap()), 2);
}
