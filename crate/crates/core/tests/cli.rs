mod common;

use std::process::Command;

use common::fixture;
use numsys::cli::{dispatch, Outcome, EXIT_INAPPLICABLE, EXIT_INPUT, EXIT_OK};
use numsys::io::{
    BoundsJson, CriterionJson, DecisionJson, EnumerationJson, Hd0lJson, PrimeVerdictJson, RepresentationJson,
    ResiduesJson, VerdictJson, WordVerdictJson,
};

fn run(args: &[&str]) -> Outcome {
    let mut argv = vec!["numsys".to_string()];
    for a in args {
        argv.push(match a.strip_prefix('@') {
            Some(name) => fixture(name).display().to_string(),
            None => a.to_string(),
        });
    }
    dispatch(argv)
}

fn ok(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.code, EXIT_OK, "{args:?}: {}", out.stderr);
    out.stdout
}

fn json<T: for<'de> serde::Deserialize<'de> + serde::Serialize + PartialEq + std::fmt::Debug>(args: &[&str]) -> T {
    let text = ok(args);
    let doc: T = serde_json::from_str(&text).unwrap_or_else(|e| panic!("{args:?}: {e}\n{text}"));
    let again: T = serde_json::from_str(&serde_json::to_string(&doc).unwrap()).unwrap();
    assert_eq!(again, doc);
    doc
}

#[test]
fn golden_outputs() {
    assert_eq!(ok(&["rep", "--system", "@fib.json", "15"]), "100010\n");
    assert_eq!(ok(&["criterion", "--system", "@four-term.json"]), "p=3: Divergent; overall: criterion satisfied\n");
    assert_eq!(
        ok(&["residues", "--system", "@u3.json", "--modulus", "27"]),
        "modulus: 27\n\
         preperiod (3): 1, 2, 3\n\
         period (18): 5, 9, 14, 24, 14, 12, 5, 0, 14, 15, 14, 3, 5, 18, 14, 6, 14, 21\n\
         recurring residues: 11\n"
    );
}

#[test]
fn representations() {
    assert_eq!(ok(&["val", "--system", "@fib.json", "101001"]), "19\n");
    assert_eq!(ok(&["rep", "--system", "@golden-bertrand.json", "15"]), "100010\n");
    assert_eq!(ok(&["rep", "--system", "@two-blocks.json", "24"]), "aaaab\n");
    assert_eq!(ok(&["val", "--system", "@two-blocks.json", "cdcd"]), "22\n");
    let r: RepresentationJson = json(&["rep", "--json", "--system", "@fib.json", "19"]);
    assert_eq!((r.n.as_str(), r.word.as_str()), ("19", "101001"));
    let e: EnumerationJson = json(&["ans-enumerate", "--json", "--system", "@two-blocks.json", "--count", "25"]);
    assert_eq!(e.words.len(), 25);
    assert_eq!(e.words[17].word, "abab");
}

#[test]
fn structured_outputs() {
    let r: ResiduesJson = json(&["residues", "--json", "--system", "@u3.json", "--modulus", "27"]);
    assert_eq!(r.preperiod, vec![1, 2, 3]);
    assert_eq!(r.period.len(), 18);
    let c: CriterionJson = json(&["criterion", "--json", "--system", "@five-term.json"]);
    assert_eq!(c.primes, vec![PrimeVerdictJson::Bounded { p: 3, a: vec![1, 0, 0, 1], b: vec![1, -6, -3] }]);
    assert!(!c.satisfied);
    let b: BoundsJson = json(&["bounds", "--json", "--system", "@fib.json", "--states", "4"]);
    assert_eq!((b.period_bound.as_str(), b.preperiod_bound.as_str()), ("4", "8"));
    let d: DecisionJson = json(&["decide", "--json", "--system", "@fib.json", "--dfa", "@fib-powers.json"]);
    assert!(matches!(d.verdict, VerdictJson::NotUltimatelyPeriodic { .. }));
    let h: Hd0lJson = json(&["hd0l-decide", "--json", "--morphism", "@ab-periodic.json"]);
    assert_eq!(h.overall, WordVerdictJson::UltimatelyPeriodic { preperiod: 0, period: 2 });
}

#[test]
fn decide_language_automaton() {
    let fib_lang = fixture("fib.json");
    let text = std::fs::read_to_string(&fib_lang).unwrap();
    let system: serde_json::Value = serde_json::from_str(&text).unwrap();
    let dir = std::env::temp_dir().join(format!("numsys-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let dfa_path = dir.join("language.json");
    std::fs::write(&dfa_path, system["language"].to_string()).unwrap();
    let out = ok(&["decide", "--system", "@fib.json", "--dfa", dfa_path.to_str().unwrap()]);
    assert!(out.starts_with("ultimately periodic: u=ε v=1"), "{out}");
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["hd0l-decide", "--morphism", "@thue-morse.json"]).code, EXIT_INAPPLICABLE);
    assert_eq!(run(&["rep", "--system", "@missing.json", "1"]).code, EXIT_INPUT);
    assert_eq!(run(&["rep", "--system", "@u3.json", "1"]).code, EXIT_INPUT);
    assert_eq!(run(&["frobnicate"]).code, EXIT_INPUT);
    assert_eq!(run(&["val", "--system", "@fib.json", "12"]).code, EXIT_INPUT);
}

#[test]
fn dot_export() {
    let dot = ok(&["export-dot", "--system", "@fib.json"]);
    assert!(dot.starts_with("digraph dfa {") && dot.contains("q0 -> q1 [label=\"1\"]"), "{dot}");
    let dot = ok(&["export-dot", "--dfa", "@fib-powers.json"]);
    assert!(dot.contains("doublecircle"));
}

#[test]
fn binary_exit_status() {
    let bin = env!("CARGO_BIN_EXE_numsys");
    let out = Command::new(bin).args(["rep", "--system"]).arg(fixture("fib.json")).arg("15").output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_OK));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "100010\n");
    let out = Command::new(bin).args(["hd0l-decide", "--morphism"]).arg(fixture("thue-morse.json")).output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_INAPPLICABLE));
    let out = Command::new(bin).arg("decide").output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_INPUT));
}
