//! A corrupted predicate must make the suite fail, and the witnesses it
//! reports must check out against an uncorrupted computation.

use omega_norm::catalog::{default_catalog, GroupSpec};
use omega_norm::embedding::naive;
use omega_norm::group::DEFAULT_MAX_ORDER;
use omega_norm::harness::{
    emit_report, run_check, run_suite, CheckResult, HarnessConfig, ReportFormat, Status, Suite,
    VerificationReport,
};
use omega_norm::{FiniteGroup, Permutation, Property, Subgroup};

fn small_catalog() -> Vec<GroupSpec> {
    default_catalog()
        .into_iter()
        .filter(|s| s.expected_order.is_some_and(|n| n <= 24))
        .collect()
}

fn faulty(p: Property) -> HarnessConfig {
    HarnessConfig {
        fault: Some(p),
        ..HarnessConfig::default()
    }
}

fn rebuild<'g>(g: &'g FiniteGroup, gens: &[Vec<u32>]) -> Subgroup<'g> {
    let idx: Vec<usize> = gens
        .iter()
        .map(|images| {
            let p = Permutation::from_images(images.clone()).unwrap();
            g.index_of(&p).expect("witness generator lies in the group")
        })
        .collect();
    Subgroup::generated_by(g, idx)
}

fn group_named(name: &str) -> FiniteGroup {
    default_catalog()
        .into_iter()
        .find(|s| s.name == name)
        .unwrap()
        .build(DEFAULT_MAX_ORDER)
        .unwrap()
}

/// Rebuilds every witness subgroup from its generators alone and checks the
/// recorded orders; for two-sided witnesses the offending element must lie
/// in exactly one side.
fn reverify(report: &VerificationReport) -> usize {
    let mut verified = 0;
    for c in report.checks.iter().filter(|c| c.status == Status::Fail) {
        let w = c.witness.as_ref().expect("failures carry a witness");
        let g = group_named(&c.group);
        let subs: Vec<Subgroup<'_>> = w
            .subgroups
            .iter()
            .map(|s| {
                let h = rebuild(&g, &s.generators);
                assert_eq!(h.order(), s.order, "{}: {}", c.key(), s.label);
                h
            })
            .collect();
        assert!(!subs.is_empty(), "{}: witness without subgroups", c.key());
        if let (Some(e), [a, b]) = (&w.element, subs.as_slice()) {
            let x = g
                .index_of(&Permutation::from_images(e.clone()).unwrap())
                .unwrap();
            assert_ne!(a.contains(x), b.contains(x), "{}", c.key());
        }
        if let (Some(exp), Some(act)) = (w.expected_order, w.actual_order) {
            assert_ne!(exp, act, "{}", c.key());
        }
        verified += 1;
    }
    verified
}

#[test]
fn every_property_fault_is_detected() {
    for p in Property::ALL {
        let report = run_suite(Suite::All, &small_catalog(), &faulty(p));
        assert!(report.failed(), "fault on {p} went unnoticed");
        assert_eq!(reverify(&report), report.summary.fail);
    }
}

#[test]
fn clean_run_has_no_failures() {
    let report = run_suite(Suite::All, &small_catalog(), &HarnessConfig::default());
    assert_eq!(report.summary.fail, 0);
    assert!(report.summary.pass > 0);
}

#[test]
fn implication_witness_is_real() {
    // With pronormality negated, a non-pronormal, non-weakly-normal subgroup
    // is reported as a pronormal subgroup that is not weakly normal.
    let g = group_named("D8");
    let r: CheckResult = run_check("lemma3.4.1", &g, &faulty(Property::Pronormal)).unwrap();
    assert_eq!(r.status, Status::Fail);
    let w = r.witness.unwrap();
    let h = rebuild(&g, &w.subgroups[0].generators);
    assert!(!naive::is_pronormal(&g, &h));
    assert!(!naive::is_weakly_normal(&g, &h));
}

#[test]
fn equality_witness_names_an_element() {
    let g = group_named("S3");
    let r = run_check("thm1.1", &g, &faulty(Property::SelfNormalizing)).unwrap();
    assert_eq!(r.status, Status::Fail);
    assert_eq!(r.observations["z_inf_order"], 1);
    let w = r.witness.unwrap();
    assert!(w.element.is_some());
    assert_eq!(w.expected_order, Some(1));
}

#[test]
fn witness_serializes_generators() {
    let report = run_suite(
        Suite::Theorems,
        &small_catalog(),
        &faulty(Property::SelfCentralizing),
    );
    let json = emit_report(&report, ReportFormat::Json).unwrap();
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    let failing = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["status"] == "fail")
        .unwrap();
    assert!(failing["witness"]["subgroups"][0]["generators"].is_array());
    assert_eq!(v["config"]["fault"], "self_centralizing");
    let md = emit_report(&report, ReportFormat::Markdown).unwrap();
    assert!(md.contains("**FAIL**"));
}
