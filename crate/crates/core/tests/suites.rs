use std::time::Instant;

use griffiths_core::verify::{run_suite, SuiteParams, Status, SUITES};

#[test]
fn every_suite_meets_its_registered_outcome() {
    let params = SuiteParams::default();
    for name in SUITES {
        let t = Instant::now();
        let r = run_suite(name, &params).unwrap();
        println!("{name}: {} ({} checks, {:.2?})", r.status, r.checks_run, t.elapsed());
        for w in &r.witnesses {
            println!("  {} expected {} actual {}", w.input, w.expected, w.actual);
        }
        for n in &r.notes {
            println!("  note: {n}");
        }
        assert!(r.meets_expectation(), "{name}: {r:?}");
        assert_eq!(r.status == Status::Pass, r.witnesses.is_empty());
    }
}

#[test]
fn pe_sigma_over_a_fixed_d_range() {
    let params = SuiteParams { max_n: Some(8), d_max: Some(10), ..Default::default() };
    let r = run_suite("pe-sigma", &params).unwrap();
    assert_eq!((r.status, r.checks_run), (Status::Pass, 80));
    // N = 8 would need 11 values of d to certify the identity.
    assert_eq!(r.notes.len(), 1);
}

#[test]
fn documented_discrepancy_witness() {
    let r = run_suite("squared-closed-as-printed", &SuiteParams::default()).unwrap();
    assert_eq!(r.status, Status::Discrepancy);
    let w = &r.witnesses[0];
    assert_eq!((w.input.as_str(), w.expected.as_str(), w.actual.as_str()), ("(n, r, a) = (2, 1, 2)", "-1", "3"));
}

#[test]
fn reruns_are_identical() {
    let params = SuiteParams { max_n: Some(4), samples: Some(20), ..Default::default() };
    for name in ["td-ratio-deg2", "cy-semistable", "pe-derivation"] {
        assert_eq!(run_suite(name, &params).unwrap(), run_suite(name, &params).unwrap());
    }
}

#[test]
fn unknown_suite_is_an_error() {
    assert!(run_suite("no-such-suite", &SuiteParams::default()).is_err());
}
