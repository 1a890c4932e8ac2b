use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn stanley(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stanley")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, body: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn sdepth_human_and_json_agree() {
    let dir = TempDir::new().unwrap();
    let f = write(dir.path(), "i.txt", "vars x y z\ngen x*y*z\n");
    let human = stanley(&["sdepth", s(&f)]);
    assert_eq!(human.status.code(), Some(0));
    assert!(stdout(&human).contains("sdepth = 2"));
    let json = stanley(&["--json", "sdepth", s(&f)]);
    let v: serde_json::Value = serde_json::from_slice(&json.stdout).unwrap();
    assert_eq!(v["sdepth"], 2);
}

#[test]
fn certificate_roundtrip_and_tampering() {
    let dir = TempDir::new().unwrap();
    let f = write(dir.path(), "i.txt", "vars x y z w\ngen x*y\ngen x*z\ngen x*w\n");
    let o = stanley(&["--json", "--certificate", "sdepth", s(&f)]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let cert = &v["certificate"];
    assert_eq!(cert["kind"], "certificate");
    let c = write(dir.path(), "cert.json", &cert.to_string());
    let ok = stanley(&["verify", s(&c)]);
    assert_eq!(ok.status.code(), Some(0), "{}", stdout(&ok));

    let mut bad = cert.clone();
    bad["value"] = serde_json::json!(3);
    let c = write(dir.path(), "bad.json", &bad.to_string());
    assert_eq!(stanley(&["verify", s(&c)]).status.code(), Some(2));

    let human = stanley(&["--certificate", "sdepth", s(&f)]);
    let body = stdout(&human);
    let start = body.find("vars").unwrap();
    let d = write(dir.path(), "d.txt", &body[start..]);
    let check = stanley(&["verify", s(&d)]);
    assert!(stdout(&check).contains("Valid"), "{}", stdout(&check));
}

#[test]
fn verify_reports_witnesses_and_exit_codes() {
    let dir = TempDir::new().unwrap();
    let gap = write(dir.path(), "gap.txt", "vars x y\ngen x*y\nspace 1 | y\n");
    let o = stanley(&["verify", s(&gap)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("Gap at x"), "{}", stdout(&o));
    let good = write(dir.path(), "good.txt", "vars x y\ngen x*y\nspace x | x\nspace 1 | y\n");
    let o = stanley(&["verify", s(&good)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("Valid"));
}

#[test]
fn verify_filtration_flags() {
    let dir = TempDir::new().unwrap();
    let f = write(dir.path(), "f.txt", "vars x y\ngen x^2\ngen x*y\nstep y | x\nstep x | x y\nstep 1 | x y\n");
    let o = stanley(&["--json", "verify", s(&f)]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["pretty_clean"], false);
    assert_eq!(v["fdepth"], 0);
    let bad = write(dir.path(), "b.txt", "vars x y\ngen x*y\nstep 1 | x\n");
    assert_eq!(stanley(&["verify", s(&bad)]).status.code(), Some(2));
}

#[test]
fn input_errors_exit_one() {
    assert_eq!(stanley(&["sdepth", "/nonexistent/file"]).status.code(), Some(1));
    let dir = TempDir::new().unwrap();
    let f = write(dir.path(), "i.txt", "vars x y\ngen q\n");
    let o = stanley(&["sdepth", s(&f)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
    let unit = write(dir.path(), "u.txt", "vars x y\ngen 1\n");
    assert_eq!(stanley(&["sdepth", s(&unit)]).status.code(), Some(1));
    assert_eq!(stanley(&["bogus"]).status.code(), Some(1));
}

#[test]
fn resource_limits_exit_three() {
    let dir = TempDir::new().unwrap();
    let f = write(dir.path(), "i.txt", "vars x y z\ngen x^3*y^3*z^3\n");
    assert_eq!(stanley(&["--max-poset", "4", "sdepth", s(&f)]).status.code(), Some(3));
    assert_eq!(stanley(&["--max-nodes", "1", "sdepth", s(&f)]).status.code(), Some(3));
}

#[test]
fn localize_with_both_sdepths() {
    let dir = TempDir::new().unwrap();
    let f = write(dir.path(), "i.txt", "vars x y z w\ngen x*y\ngen x*z\ngen x*w\n");
    let o = stanley(&["localize", s(&f), "--var", "w", "--sdepth-both"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("phi(I) = (x)"), "{out}");
    assert!(out.contains("PASS (strict increase)"), "{out}");
    assert_eq!(stanley(&["localize", s(&f), "--var", "q"]).status.code(), Some(1));
}

#[test]
fn transform_decomposition_and_filtration() {
    let dir = TempDir::new().unwrap();
    write(dir.path(), "i.txt", "vars x y z\ngen x*y*z\n");
    let d = write(
        dir.path(),
        "d.txt",
        "vars x y z\nideal i.txt\nspace 1 | x z\nspace y | x y\nspace y*z | y z\n",
    );
    let out = dir.path().join("out.txt");
    let o = stanley(&["transform", s(&d), "--var", "z", "-o", s(&out)]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let written = std::fs::read_to_string(&out).unwrap();
    assert!(written.contains("space 1 | x"));
    assert!(written.contains("space y | y"));
    assert_eq!(stanley(&["verify", s(&out)]).status.code(), Some(0));

    let bad = write(dir.path(), "bad.txt", "vars x y z\nideal i.txt\nspace 1 | x z\n");
    assert_eq!(stanley(&["transform", s(&bad), "--var", "z"]).status.code(), Some(2));

    let f = write(dir.path(), "f.txt", "vars x y\ngen x*y\nstep x | y\nstep 1 | x\n");
    let o = stanley(&["--json", "transform", s(&f), "--var", "x"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["kind"], "filtration");
}

#[test]
fn link_check() {
    let dir = TempDir::new().unwrap();
    let c = write(dir.path(), "c.txt", "vertices 4\nfacet 1 2 3\nfacet 3 4\n");
    let o = stanley(&["link", s(&c), "--vertices", "3", "--check"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let out = stdout(&o);
    assert!(out.contains("I_link = (x1*x4, x2*x4)"), "{out}");
    assert!(!out.contains("FAIL"));
    assert_eq!(stanley(&["link", s(&c), "--vertices", "9"]).status.code(), Some(1));
}

#[test]
fn worked_examples_table() {
    let o = stanley(&["paper-examples"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).matches("PASS").count(), 5);
}

#[test]
fn sweep_prints_seed_and_is_deterministic() {
    let a = stanley(&["--seed", "17", "sweep", "--count", "20"]);
    let b = stanley(&["--seed", "17", "sweep", "--count", "20"]);
    assert_eq!(a.status.code(), Some(0));
    assert!(stdout(&a).starts_with("seed = 17"));
    assert_eq!(a.stdout, b.stdout);
}
