//! Verification harness: named checks over catalog groups, aggregated into a
//! [`VerificationReport`].

use std::collections::BTreeMap;
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use rayon::prelude::*;

use crate::catalog::GroupSpec;
use crate::context::GroupContext;
use crate::embedding::Property;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, DEFAULT_MAX_ORDER};
use crate::lattice::DEFAULT_LATTICE_CAP;

pub mod checks;
pub mod report;

pub use checks::{CheckDef, Suite, REGISTRY};
pub use report::{
    emit_report, CheckResult, ReportConfig, ReportFormat, Status, Summary, Timing,
    VerificationReport, Witness, WitnessSubgroup, SCHEMA_VERSION,
};

use checks::Env;

pub const MAX_LATTICE_ENV: &str = "OMEGA_NORM_MAX_LATTICE";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HarnessConfig {
    pub lattice_cap: usize,
    pub max_order: usize,
    /// Whether `Ω_p` classes contain the trivial subgroup.
    pub include_trivial: bool,
    /// Negate membership for one property. Test hook only.
    pub fault: Option<Property>,
}

impl Default for HarnessConfig {
    fn default() -> Self {
        HarnessConfig {
            lattice_cap: DEFAULT_LATTICE_CAP,
            max_order: DEFAULT_MAX_ORDER,
            include_trivial: true,
            fault: None,
        }
    }
}

impl HarnessConfig {
    /// Lattice cap from the flag, else the environment, else the default.
    pub fn resolve_lattice_cap(flag: Option<usize>) -> Result<usize> {
        if let Some(cap) = flag {
            return Ok(cap);
        }
        match std::env::var(MAX_LATTICE_ENV) {
            Ok(v) => v.trim().parse().map_err(|_| Error::BadParameters {
                name: MAX_LATTICE_ENV.to_string(),
                reason: format!("`{v}` is not a non-negative integer"),
            }),
            Err(_) => Ok(DEFAULT_LATTICE_CAP),
        }
    }

    fn report_config(&self) -> ReportConfig {
        ReportConfig {
            lattice_cap: self.lattice_cap,
            max_order: self.max_order,
            include_trivial: self.include_trivial,
            fault: self.fault.map(|p| p.id().to_string()),
        }
    }

    fn context<'g>(&self, group: &'g FiniteGroup) -> GroupContext<'g> {
        let ctx = GroupContext::with_lattice_cap(group, self.lattice_cap);
        match self.fault {
            Some(p) => ctx.with_fault(p),
            None => ctx,
        }
    }
}

/// Runs one check on one group.
pub fn run_check(
    check_id: &str,
    group: &FiniteGroup,
    config: &HarnessConfig,
) -> Result<CheckResult> {
    let def = checks::find(check_id).ok_or_else(|| Error::UnknownCheck(check_id.to_string()))?;
    let ctx = config.context(group);
    Ok(run_def(def, &ctx, config))
}

fn run_def(def: &CheckDef, ctx: &GroupContext<'_>, config: &HarnessConfig) -> CheckResult {
    let start = Instant::now();
    let mut result = evaluate(def, ctx, config);
    result.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    result
}

fn evaluate(def: &CheckDef, ctx: &GroupContext<'_>, config: &HarnessConfig) -> CheckResult {
    let group = ctx.group().name();
    if def.needs_lattice && !ctx.lattice_available() {
        return CheckResult::skipped(
            group,
            def.id,
            format!(
                "lattice cap exceeded: order {} > cap {}",
                ctx.group().order(),
                ctx.lattice_cap()
            ),
        );
    }
    let env = Env { ctx, config };
    let outcome = (def.applies)(&env).and_then(|skip| match skip {
        Some(reason) => Ok(Err(reason)),
        None => (def.eval)(&env, def.property).map(Ok),
    });
    match outcome {
        Ok(Err(reason)) => CheckResult::skipped(group, def.id, reason),
        Ok(Ok(o)) => CheckResult {
            group: group.to_string(),
            check_id: def.id.to_string(),
            status: if o.failed { Status::Fail } else { Status::Pass },
            reason: None,
            observations: o.observations,
            witness: o.witness,
            elapsed_ms: 0.0,
        },
        Err(e @ Error::LatticeCapExceeded { .. }) => {
            CheckResult::skipped(group, def.id, e.to_string())
        }
        Err(e) => CheckResult {
            group: group.to_string(),
            check_id: def.id.to_string(),
            status: Status::Fail,
            reason: Some(format!("error: {e}")),
            observations: BTreeMap::new(),
            witness: Some(Witness {
                description: format!("evaluation error: {e}"),
                ..Witness::default()
            }),
            elapsed_ms: 0.0,
        },
    }
}

/// Runs every check of `suite` over every group of `specs`.
///
/// Groups that cannot be built (order cap, unreadable file) contribute one
/// skipped result per check. Results are ordered by group name, then check
/// id, regardless of scheduling.
pub fn run_suite(suite: Suite, specs: &[GroupSpec], config: &HarnessConfig) -> VerificationReport {
    let defs: Vec<&CheckDef> = REGISTRY.iter().filter(|d| d.in_suite(suite)).collect();
    let mut checks: Vec<CheckResult> = specs
        .par_iter()
        .flat_map_iter(|spec| run_group(spec, &defs, config))
        .collect();
    checks.sort_by(|a, b| (&a.group, &a.check_id).cmp(&(&b.group, &b.check_id)));

    let timing = Timing {
        generated_at_unix: SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0),
        elapsed_ms: checks.iter().map(|c| (c.key(), c.elapsed_ms)).collect(),
    };
    VerificationReport {
        schema_version: SCHEMA_VERSION,
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        suite: suite.id().to_string(),
        config: config.report_config(),
        summary: Summary::tally(&checks),
        checks,
        timing,
    }
}

fn run_group(spec: &GroupSpec, defs: &[&CheckDef], config: &HarnessConfig) -> Vec<CheckResult> {
    let group = match spec.build(config.max_order) {
        Ok(g) => g,
        Err(e) => {
            let name = if spec.name.is_empty() {
                spec.source.to_string()
            } else {
                spec.name.clone()
            };
            return defs
                .iter()
                .map(|d| CheckResult::skipped(&name, d.id, format!("group not built: {e}")))
                .collect();
        }
    };
    let ctx = config.context(&group);
    if ctx.lattice_available() {
        // Failures here resurface per check.
        let _ = ctx.warm();
    }
    defs.par_iter().map(|d| run_def(d, &ctx, config)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::parse_builtin;

    fn group(desc: &str) -> FiniteGroup {
        parse_builtin(desc, DEFAULT_MAX_ORDER).unwrap()
    }

    #[test]
    fn sn_norm_check_on_s3() {
        let r = run_check("thm1.1", &group("symmetric:3"), &HarnessConfig::default()).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.observations["n_sn_order"], 1);
        assert_eq!(r.observations["z_inf_order"], 1);
    }

    #[test]
    fn unknown_check() {
        let e = run_check("thm9.9", &group("cyclic:2"), &HarnessConfig::default()).unwrap_err();
        assert!(matches!(e, Error::UnknownCheck(_)));
        assert!(matches!(
            Suite::parse("everything"),
            Err(Error::UnknownSuite(_))
        ));
    }

    #[test]
    fn lattice_cap_skips() {
        let config = HarnessConfig {
            lattice_cap: 10,
            ..HarnessConfig::default()
        };
        let r = run_check("thm1.1", &group("symmetric:4"), &config).unwrap();
        assert_eq!(r.status, Status::Skipped);
        assert!(r.reason.unwrap().starts_with("lattice cap exceeded"));
        let r = run_check("baer", &group("symmetric:4"), &config).unwrap();
        assert_eq!(r.status, Status::Pass);
    }

    #[test]
    fn counterexample_checks() {
        let config = HarnessConfig::default();
        let r = run_check("remark1.3", &group("dicyclic:4"), &config).unwrap();
        assert_eq!(r.status, Status::Pass, "{r:?}");
        assert_eq!(r.observations["n_sc_order"], 4);
        let r = run_check("remark3.6", &group("alternating:5"), &config).unwrap();
        assert_eq!(r.status, Status::Pass, "{r:?}");
        assert_eq!(r.observations["n_g_h_order"], 10);
        let r = run_check("remark3.6", &group("symmetric:4"), &config).unwrap();
        assert_eq!(r.status, Status::Skipped);
    }

    #[test]
    fn conditional_check_hypothesis() {
        let config = HarnessConfig::default();
        let r = run_check("cor4.1", &group("symmetric:3"), &config).unwrap();
        assert_eq!(r.status, Status::Pass);
        let r = run_check("cor4.1", &group("symmetric:4"), &config).unwrap();
        assert_eq!(r.status, Status::Skipped);
        assert!(r.reason.unwrap().starts_with("hypothesis not met"));
    }

    #[test]
    fn empty_catalog() {
        let r = run_suite(Suite::All, &[], &HarnessConfig::default());
        assert!(r.checks.is_empty());
        assert_eq!(r.summary, Summary::default());
    }
}
