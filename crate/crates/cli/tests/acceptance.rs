//! Acceptance checks for the whole workspace, one test per criterion.
//! Each test prints a single `acceptance NN <name>: PASS` line on success
//! (visible with `--nocapture`); a failure panics with the offending checks.

use std::process::Command;
use std::time::Instant;

use dqg_core::report::SuiteReport;
use dqg_core::suites::{run_suite, SuiteOptions};

fn suite(name: &str, n: usize) -> SuiteReport {
    run_suite(name, n, &SuiteOptions::default()).expect("suite runs")
}

fn assert_all_pass(rep: &SuiteReport) {
    if !rep.all_pass() {
        let bad: Vec<String> = rep
            .checks
            .iter()
            .filter(|c| !c.pass)
            .map(|c| format!("{} ({:?})", c.id, c.counterexample))
            .collect();
        panic!("{} at n={} failed: {}", rep.suite, rep.n, bad.join(", "));
    }
}

fn pass_line(num: u32, name: &str) {
    println!("acceptance {num:02} {name}: PASS");
}

#[test]
fn criterion_01_hexagon_identity() {
    let t0 = Instant::now();
    for n in [2, 3] {
        let rep = suite("qdybe", n);
        assert_eq!(rep.checks.len(), n.pow(6));
        assert_all_pass(&rep);
    }
    assert!(t0.elapsed().as_secs() < 60, "hexagon identity too slow");
    pass_line(1, "hexagon identity, 64 + 729 entries");
}

#[test]
fn criterion_02_confluence_and_basis() {
    for n in [2, 3] {
        assert_all_pass(&suite("confluence", n));
    }
    assert_all_pass(&suite("basis", 3));
    pass_line(2, "confluent rewriting, strategy-independent normal forms");
}

#[test]
fn criterion_03_matrix_exchange_relation() {
    for n in [2, 3] {
        assert_all_pass(&suite("rll", n));
    }
    pass_line(3, "matrix exchange relation reduces to zero");
}

#[test]
fn criterion_04_minor_equality() {
    for n in [2, 3] {
        assert_all_pass(&suite("minors", n));
    }
    pass_line(4, "row and column minors agree, permutation independent");
}

#[test]
fn criterion_05_symmetrization_constants() {
    for r_max in [3, 4] {
        assert_all_pass(&suite("hall-littlewood", r_max));
    }
    pass_line(5, "symmetrized product identity and normalizer constants");
}

#[test]
fn criterion_06_laplace_and_cofactor() {
    assert_all_pass(&suite("laplace", 3));
    for n in [2, 3] {
        assert_all_pass(&suite("cofactor", n));
    }
    pass_line(6, "Laplace expansions and cofactor identities");
}

#[test]
fn criterion_07_antipode() {
    for n in [2, 3] {
        assert_all_pass(&suite("antipode", n));
    }
    pass_line(7, "antipode axioms, minor formulas, determinant centrality");
}

#[test]
fn criterion_08_real_forms_and_unitarity() {
    for n in [2, 3] {
        assert_all_pass(&suite("star", n));
        assert_all_pass(&suite("dagger", n));
        assert_all_pass(&suite("unitarity", n));
    }
    pass_line(8, "star structures and minor-matrix unitarity");
}

#[test]
fn criterion_09_pairing_tables() {
    for n in [2, 3] {
        assert_all_pass(&suite("pairing", n));
    }
    pass_line(9, "generator and determinant pairing tables");
}

#[test]
fn criterion_10_cobraiding_compatibilities() {
    for n in [2, 3] {
        assert_all_pass(&suite("cobraiding", n));
        assert_all_pass(&suite("hopf-pairing", n));
        assert_all_pass(&suite("star-pairing", n));
    }
    pass_line(10, "cobraiding and pairing compatibility laws");
}

#[test]
fn criterion_11_cli() {
    let t0 = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_dqg"))
        .args(["check", "all", "--n", "2", "--format", "json"])
        .output()
        .expect("run dqg");
    assert_eq!(out.status.code(), Some(0), "check all --n 2 must exit 0");
    assert!(t0.elapsed().as_secs() < 300, "check all --n 2 too slow");

    // report validates against the schema
    let rep: SuiteReport = serde_json::from_str(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(rep.suite, "all");
    assert_eq!(rep.n, 2);
    assert!(rep.summary.fail == 0 && rep.summary.pass == rep.checks.len());
    for c in &rep.checks {
        assert!(!c.id.is_empty() && !c.paper_ref.is_empty());
        assert!(c.counterexample.is_none());
    }

    // an injected sign fault must fail with counterexample records
    let out = Command::new(env!("CARGO_BIN_EXE_dqg"))
        .args(["check", "rll", "--n", "2", "--mutate", "--format", "json"])
        .output()
        .expect("run dqg");
    assert_eq!(out.status.code(), Some(1));
    let rep: SuiteReport = serde_json::from_str(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert!(rep.summary.fail > 0);
    for c in rep.checks.iter().filter(|c| !c.pass) {
        assert!(c.counterexample.is_some(), "{} lacks a counterexample", c.id);
    }
    pass_line(11, "command line suite runner, schema, fault injection");
}
