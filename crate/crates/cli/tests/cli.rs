use std::path::PathBuf;
use std::process::{Command, Output};

use homlie_cli::{load, parse_spec, InputError};
use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn homlie(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_homlie"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn invoke(file: &str, flags: &[&str], cmd: &str) -> Output {
    let path = fixture(file);
    let mut args: Vec<&str> = flags.to_vec();
    args.push(path.to_str().unwrap());
    args.extend(cmd.split_whitespace());
    homlie(&args)
}

/// `(fixture, command, exit code)` over the whole corpus.
const CORPUS: &[(&str, &str, i32)] = &[
    ("vir.hlc", "check algebra vir", 0),
    ("vir.hlc", "check rep M", 0),
    ("vir.hlc", "check rep M2", 0),
    ("vir.hlc", "check oop T1", 0),
    ("vir.hlc", "check oop T1 --module M2", 1),
    ("vir.hlc", "check oop T1 --module nope", 2),
    ("vir.hlc", "check nijenhuis T1", 0),
    ("vir.hlc", "check nijenhuis Dd", 1),
    ("vir.hlc", "check rotabaxter Id --p 0 --q -1", 0),
    ("vir.hlc", "check rotabaxter Id --p 0 --q -2", 1),
    ("vir.hlc", "check rotabaxter T1 --p 0 --q -1", 2),
    ("vir.hlc", "check rotabaxter Id --p 0 --q x", 2),
    ("vir.hlc", "check cochain c2", 0),
    ("vir.hlc", "mc M", 0),
    ("vir.hlc", "cobound c1", 0),
    ("vir.hlc", "cobound c2", 0),
    ("vir.hlc", "cobound P", 2),
    ("vir.hlc", "cobound c0", 2),
    ("vir.hlc", "circle f1 c2", 0),
    ("vir.hlc", "nrbracket c2 c2", 0),
    ("vir.hlc", "nrbracket c1 c2", 2),
    ("vir.hlc", "gbracket P P", 0),
    ("vir.hlc", "deltaT Tc x", 0),
    ("vir.hlc", "deltaT T1 P", 0),
    ("vir.hlc", "deltaT Dd P", 1),
    ("vir.hlc", "prelie Tc", 0),
    ("vir.hlc", "prelie Dd", 1),
    ("vir.hlc", "deform check S", 0),
    ("vir.hlc", "deform check S2", 0),
    ("vir.hlc", "deform check D", 1),
    ("vir.hlc", "deform obstruct S", 0),
    ("vir.hlc", "deform obstruct D", 0),
    ("vir.hlc", "deform extend S --max-deg 1", 0),
    ("vir.hlc", "deform extend nope --max-deg 1", 2),
    ("vir.hlc", "search-oop M --max-deg 0 --coeffs -1,0,1/2,1,2", 0),
    ("vir.hlc", "search-oop M2 --max-deg 0 --coeffs -1,0,1/2,1,2", 0),
    ("vir.hlc", "search-oop M --max-deg 9 --coeffs 1,2,3,4,5,6,7,8,9", 2),
    ("broken.hlc", "check algebra const", 1),
    ("broken.hlc", "check algebra vir", 0),
    ("broken.hlc", "check rep sq", 1),
    ("broken.hlc", "mc sq", 1),
    ("abelian.hlc", "check algebra ab", 0),
    ("abelian.hlc", "check oop T", 0),
    ("abelian.hlc", "check cochain g", 0),
    ("abelian.hlc", "check cochain h", 1),
    ("abelian.hlc", "cobound g", 0),
    ("rank_two.hlc", "check algebra ext", 0),
    ("rank_two.hlc", "check rep ad2", 0),
    ("rank_two.hlc", "mc ad2", 0),
    ("rank_two.hlc", "check oop R", 1),
    ("rank_two.hlc", "cobound k", 0),
    ("undefined.hlc", "check algebra vir", 2),
    ("short_vector.hlc", "check algebra a", 2),
    ("syntax.hlc", "check algebra a", 2),
    ("missing.hlc", "check algebra a", 2),
];

#[test]
fn exit_codes_over_the_corpus() {
    for (file, cmd, code) in CORPUS {
        let out = invoke(file, &[], cmd);
        assert_eq!(out.status.code(), Some(*code), "{file}: {cmd}\n{}", String::from_utf8_lossy(&out.stderr));
        if *code == 2 {
            assert!(out.stdout.is_empty());
            assert!(String::from_utf8_lossy(&out.stderr).starts_with("error: "));
        }
    }
}

#[test]
fn reports_are_deterministic() {
    for (file, cmd, code) in CORPUS.iter().filter(|c| c.2 != 2) {
        for flags in [&[][..], &["--report", "json"][..], &["--all-witnesses"][..]] {
            let a = invoke(file, flags, cmd);
            let b = invoke(file, flags, cmd);
            assert_eq!(a.stdout, b.stdout, "{file}: {cmd}");
            assert_eq!(a.status.code(), Some(*code));
        }
    }
}

fn text_statuses(text: &str) -> Vec<(String, String)> {
    text.lines()
        .filter_map(|l| {
            let mut w = l.split_whitespace();
            let status = w.next()?;
            matches!(status, "pass" | "fail" | "advisory").then(|| (w.next().unwrap().to_string(), status.to_string()))
        })
        .collect()
}

#[test]
fn json_and_text_agree() {
    for (file, cmd, _) in CORPUS.iter().filter(|c| c.2 != 2) {
        let text = String::from_utf8(invoke(file, &[], cmd).stdout).unwrap();
        let json: Value = serde_json::from_slice(&invoke(file, &["--report", "json"], cmd).stdout).unwrap();
        let from_json: Vec<(String, String)> = json["checks"]
            .as_array()
            .unwrap()
            .iter()
            .map(|c| (c["id"].as_str().unwrap().to_string(), c["status"].as_str().unwrap().to_string()))
            .collect();
        assert_eq!(text_statuses(&text), from_json, "{file}: {cmd}");
        assert!(text.ends_with(&format!("overall {}\n", json["overall"].as_str().unwrap())));
        assert_eq!(json["command"].as_str().unwrap(), *cmd);
    }
}

#[test]
fn failing_operator_prints_witness() {
    let out = invoke("vir.hlc", &[], "check oop T1 --module M2");
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("fail identity at (f, f): e: -1*d - 2*l\n"), "{text}");
    let json: Value = serde_json::from_slice(&invoke("vir.hlc", &["--report", "json"], "check oop T1 --module M2").stdout).unwrap();
    let w = &json["checks"][1]["witness"];
    assert_eq!(w["tuple"], serde_json::json!(["f", "f"]));
    assert_eq!(w["components"], serde_json::json!([["e", "-1*d - 2*l"]]));
}

#[test]
fn all_witnesses_lists_every_failure() {
    let short = String::from_utf8(invoke("abelian.hlc", &[], "check cochain h").stdout).unwrap();
    assert!(short.contains("(+1 more)"));
    let long = String::from_utf8(invoke("abelian.hlc", &["--all-witnesses"], "check cochain h").stdout).unwrap();
    assert!(!long.contains("more)"));
    assert!(long.contains("\n  at (y, x): m: "), "{long}");
}

#[test]
fn search_lists_candidates() {
    let text = String::from_utf8(invoke("vir.hlc", &[], "search-oop M --max-deg 0 --coeffs -1,0,1/2,1,2").stdout).unwrap();
    assert!(text.contains("candidates 5\n"));
    let text = String::from_utf8(invoke("vir.hlc", &[], "search-oop M2 --max-deg 0 --coeffs -1,0,1/2,1,2").stdout).unwrap();
    assert!(text.contains("candidates 1\n  matrix 0\n"));
}

#[test]
fn every_fixture_round_trips() {
    for name in ["vir.hlc", "broken.hlc", "abelian.hlc", "rank_two.hlc"] {
        let ws = load(&fixture(name)).unwrap();
        let text = ws.to_text();
        assert_eq!(parse_spec(&text).unwrap(), ws, "{name}");
        assert_eq!(parse_spec(&text).unwrap().to_text(), text);
    }
}

#[test]
fn input_errors() {
    assert_eq!(load(&fixture("undefined.hlc")).unwrap_err(), InputError::UnresolvedReference("vir2".into()));
    assert!(matches!(load(&fixture("short_vector.hlc")).unwrap_err(), InputError::RankMismatch { line: 3, .. }));
    assert!(matches!(load(&fixture("syntax.hlc")).unwrap_err(), InputError::Syntax { line: 3, col: 19, .. }));
    let dup = "algebra a\nrank 1\nmodule m over a\nrank 1\nmodule m over a\nrank 1\n";
    assert!(matches!(parse_spec(dup).unwrap_err(), InputError::Duplicate { kind: "module", .. }));
    let stray = "rank 1\n";
    assert!(matches!(parse_spec(stray).unwrap_err(), InputError::Syntax { line: 1, .. }));
    let bad_var = "algebra a\nrank 1\nmap m : -> a self\nmatrix l\n";
    assert!(matches!(parse_spec(bad_var).unwrap_err(), InputError::Syntax { line: 4, .. }));
}

#[test]
fn fixture_shapes() {
    let ws = load(&fixture("vir.hlc")).unwrap();
    assert_eq!((ws.algebras.len(), ws.modules.len(), ws.maps.len()), (1, 3, 4));
    assert_eq!(ws.cochains.len(), 5);
    assert_eq!(ws.deformations.len(), 3);
    let minimal = "algebra vir\nrank 1\nbracket 1 1 : d + 2*l\nmodule M over vir\nrank 1\naction 1 1 : d + l\nmap T1 : M -> vir\nmatrix 1\n";
    let ws = parse_spec(minimal).unwrap();
    assert_eq!((ws.algebras.len(), ws.modules.len(), ws.maps.len()), (1, 1, 1));
}
