//! The check registry: one entry per verifiable statement.
//!
//! Each entry names the suites it belongs to, whether it needs the full
//! subgroup lattice, an applicability test (a hypothesis that is computed,
//! never configured) and the evaluator.

use std::collections::{BTreeMap, BTreeSet};

use serde_json::Value;

use crate::context::GroupContext;
use crate::embedding::{satisfies_subnormalizer_condition_in, Property};
use crate::error::Result;
use crate::harness::report::{Witness, WitnessSubgroup};
use crate::harness::HarnessConfig;
use crate::lattice::maximal_abelian_subgroups;
use crate::norms::{
    baer_norm, class_members, omega_norm, omega_p_norm, sc_intersection, sylow_norm, sylow_p_norm,
    ClassKind, NormOptions, OmegaClass,
};
use crate::primes::prime_divisors;
use crate::series::{commutator_subgroup, is_solvable, is_t_group_in};
use crate::subgroup::{is_subnormal, Subgroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Theorems,
    Lemmas,
    Counterexamples,
    Implications,
}

impl Suite {
    pub fn parse(s: &str) -> Result<Suite> {
        Ok(match s {
            "all" => Suite::All,
            "theorems" => Suite::Theorems,
            "lemmas" => Suite::Lemmas,
            "counterexamples" => Suite::Counterexamples,
            "implications" => Suite::Implications,
            other => return Err(crate::error::Error::UnknownSuite(other.to_string())),
        })
    }

    pub fn id(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Theorems => "theorems",
            Suite::Lemmas => "lemmas",
            Suite::Counterexamples => "counterexamples",
            Suite::Implications => "implications",
        }
    }
}

pub(crate) struct Env<'a, 'g> {
    pub ctx: &'a GroupContext<'g>,
    pub config: &'a HarnessConfig,
}

type Applies = for<'a, 'g> fn(&Env<'a, 'g>) -> Result<Option<String>>;
type Eval = for<'a, 'g> fn(&Env<'a, 'g>, Option<Property>) -> Result<Outcome>;

pub struct CheckDef {
    pub id: &'static str,
    pub suites: &'static [Suite],
    pub needs_lattice: bool,
    pub(crate) property: Option<Property>,
    pub(crate) applies: Applies,
    pub(crate) eval: Eval,
}

impl CheckDef {
    pub fn in_suite(&self, suite: Suite) -> bool {
        suite == Suite::All || self.suites.contains(&suite)
    }
}

#[derive(Debug, Default)]
pub(crate) struct Outcome {
    pub failed: bool,
    pub observations: BTreeMap<String, Value>,
    pub witness: Option<Witness>,
}

impl Outcome {
    fn observe(&mut self, key: impl Into<String>, value: impl Into<Value>) {
        self.observations.insert(key.into(), value.into());
    }

    fn fail(&mut self, witness: Witness) {
        self.failed = true;
        if self.witness.is_none() {
            self.witness = Some(witness);
        }
    }

    fn fail_on(&mut self, description: impl Into<String>, subgroups: &[(&str, &Subgroup<'_>)]) {
        self.fail(Witness {
            description: description.into(),
            subgroups: subgroups
                .iter()
                .map(|(l, h)| WitnessSubgroup::of(*l, h))
                .collect(),
            ..Witness::default()
        });
    }

    /// Records both orders; on mismatch the witness carries both subgroups
    /// and an element of the symmetric difference.
    fn equal(
        &mut self,
        left_label: &str,
        left: &Subgroup<'_>,
        right_label: &str,
        right: &Subgroup<'_>,
    ) {
        self.observe(format!("{left_label}_order"), left.order());
        self.observe(format!("{right_label}_order"), right.order());
        if left != right {
            let mut diff = left.members().clone();
            diff.symmetric_difference_with(right.members());
            let element = diff
                .ones()
                .next()
                .map(|x| left.group().element(x).images().to_vec());
            self.fail(Witness {
                description: format!("{left_label} != {right_label}"),
                subgroups: vec![
                    WitnessSubgroup::of(left_label, left),
                    WitnessSubgroup::of(right_label, right),
                ],
                element,
                expected_order: Some(right.order()),
                actual_order: Some(left.order()),
            });
        }
    }

    fn subset(
        &mut self,
        inner_label: &str,
        inner: &Subgroup<'_>,
        outer_label: &str,
        outer: &Subgroup<'_>,
    ) {
        self.observe(format!("{inner_label}_order"), inner.order());
        self.observe(format!("{outer_label}_order"), outer.order());
        if !inner.is_subgroup_of(outer) {
            let element = inner
                .iter()
                .find(|&x| !outer.contains(x))
                .map(|x| inner.group().element(x).images().to_vec());
            self.fail(Witness {
                description: format!("{inner_label} is not contained in {outer_label}"),
                subgroups: vec![
                    WitnessSubgroup::of(inner_label, inner),
                    WitnessSubgroup::of(outer_label, outer),
                ],
                element,
                expected_order: None,
                actual_order: None,
            });
        }
    }

    fn strict(
        &mut self,
        inner_label: &str,
        inner: &Subgroup<'_>,
        outer_label: &str,
        outer: &Subgroup<'_>,
    ) {
        self.subset(inner_label, inner, outer_label, outer);
        if inner == outer {
            self.fail_on(
                format!("{inner_label} is not a proper subgroup of {outer_label}"),
                &[(inner_label, inner), (outer_label, outer)],
            );
        }
    }

    fn expect_order(&mut self, label: &str, h: &Subgroup<'_>, expected: usize) {
        self.observe(format!("{label}_order"), h.order());
        if h.order() != expected {
            self.fail(Witness {
                description: format!("|{label}| = {}, expected {expected}", h.order()),
                subgroups: vec![WitnessSubgroup::of(label, h)],
                expected_order: Some(expected),
                actual_order: Some(h.order()),
                ..Witness::default()
            });
        }
    }
}

const THEOREMS: &[Suite] = &[Suite::Theorems];
const LEMMAS: &[Suite] = &[Suite::Lemmas];
const LEMMAS_IMPL: &[Suite] = &[Suite::Lemmas, Suite::Implications];
const IMPL: &[Suite] = &[Suite::Implications];
const COUNTER: &[Suite] = &[Suite::Counterexamples];

fn always(_: &Env<'_, '_>) -> Result<Option<String>> {
    Ok(None)
}

macro_rules! check {
    ($id:literal, $suites:expr, $lattice:expr, $eval:expr) => {
        check!($id, $suites, $lattice, None, always, $eval)
    };
    ($id:literal, $suites:expr, $lattice:expr, $prop:expr, $applies:expr, $eval:expr) => {
        CheckDef {
            id: $id,
            suites: $suites,
            needs_lattice: $lattice,
            property: $prop,
            applies: $applies,
            eval: $eval,
        }
    };
}

pub static REGISTRY: &[CheckDef] = &[
    check!("thm1.1", THEOREMS, true, sn_norm_is_hypercenter),
    check!("thm1.2", THEOREMS, true, sc_intersection_is_center),
    check!(
        "thm1.4a.pronormal",
        THEOREMS,
        true,
        Some(Property::Pronormal),
        always,
        norm_is_sylow_norm
    ),
    check!(
        "thm1.4a.h_subgroup",
        THEOREMS,
        true,
        Some(Property::HSubgroup),
        always,
        norm_is_sylow_norm
    ),
    check!(
        "thm1.4a.weakly_normal",
        THEOREMS,
        true,
        Some(Property::WeaklyNormal),
        always,
        norm_is_sylow_norm
    ),
    check!(
        "thm1.4a.subnormalizer_condition",
        THEOREMS,
        true,
        Some(Property::SubnormalizerCondition),
        always,
        norm_is_sylow_norm
    ),
    check!(
        "thm1.4a.ne_subgroup",
        THEOREMS,
        true,
        Some(Property::NeSubgroup),
        always,
        norm_is_sylow_norm
    ),
    check!(
        "thm1.4b.pronormal.p",
        THEOREMS,
        true,
        Some(Property::Pronormal),
        always,
        p_norm_is_sylow_p_norm
    ),
    check!(
        "thm1.4b.h_subgroup.p",
        THEOREMS,
        true,
        Some(Property::HSubgroup),
        always,
        p_norm_is_sylow_p_norm
    ),
    check!(
        "thm1.4b.weakly_normal.p",
        THEOREMS,
        true,
        Some(Property::WeaklyNormal),
        always,
        p_norm_is_sylow_p_norm
    ),
    check!(
        "thm1.4b.subnormalizer_condition.p",
        THEOREMS,
        true,
        Some(Property::SubnormalizerCondition),
        always,
        p_norm_is_sylow_p_norm
    ),
    check!("baer", THEOREMS, false, baer),
    check!("schenkman", THEOREMS, true, schenkman),
    check!(
        "cor4.1",
        THEOREMS,
        true,
        None,
        solvable_t_group,
        solvable_t_group_norm
    ),
    check!("tgroup.sigma", THEOREMS, true, t_groups_are_sigma_groups),
    check!("lemma3.2", LEMMAS, true, maximal_abelian_self_centralizing),
    check!(
        "lemma3.3.1",
        LEMMAS_IMPL,
        true,
        sigma_restricts_to_overgroups
    ),
    check!("lemma3.3.2", LEMMAS_IMPL, true, sigma_subnormal_is_normal),
    check!(
        "lemma3.4.1",
        LEMMAS_IMPL,
        true,
        pronormal_implies_weakly_normal
    ),
    check!(
        "lemma3.4.2",
        LEMMAS_IMPL,
        true,
        h_subgroup_implies_weakly_normal
    ),
    check!("lemma3.4.3", LEMMAS_IMPL, true, weakly_normal_implies_sigma),
    check!("lemma3.4.4", LEMMAS_IMPL, true, ne_implies_sigma),
    check!(
        "prop3.5",
        LEMMAS,
        true,
        self_normalizing_are_sigma_normalizers
    ),
    check!("sylow.embedding", LEMMAS_IMPL, true, sylow_embedding),
    check!("normal.embedding", IMPL, true, normal_embedding),
    check!("remark1.3", COUNTER, true, None, is_q16, quaternion_chain),
    check!("remark3.6", COUNTER, true, None, is_a5, a5_ne_gap),
];

pub fn find(id: &str) -> Option<&'static CheckDef> {
    REGISTRY.iter().find(|d| d.id == id)
}

fn norm_opts(env: &Env<'_, '_>) -> NormOptions {
    NormOptions {
        include_trivial: env.config.include_trivial,
        ..NormOptions::default()
    }
}

fn sn_norm_is_hypercenter(env: &Env<'_, '_>, _: Option<Property>) -> Result<Outcome> {
    let ctx = env.ctx;
    let mut out = Outcome::default();
    let n = omega_norm(
        ctx,
        OmegaClass::property(Property::SelfNormalizing),
        norm_opts(env),
    )?;
    out.equal("n_sn", &n, "z_inf", ctx.hypercenter());
    Ok(out)
}

fn sc_intersection_is_center(env: &Env<'_, '_>, _: Option<Property>) -> Result<Outcome> {
    let ctx = env.ctx;
    let mut out = Outcome::default();
    out.observe(
        "self_centralizing_count",
        ctx.class(Property::SelfCentralizing)?.len(),
    );
    out.equal("c_sc", &sc_intersection(ctx)?, "z", ctx.center());
    Ok(out)
}

fn norm_is_sylow_norm(env: &Env<'_, '_>, prop: Option<Property>) -> Result<Outcome> {
    let ctx = env.ctx;
    let mut out = Outcome::default();
    let prop = prop.expect("registered with a property");
    let n = omega_norm(ctx, OmegaClass::property(prop), norm_opts(env))?;
    let s = sylow_norm(ctx);
    out.equal("n_omega", &n, "n_sylow", &s);
    out.equal("n_sylow", &s, "z_inf", ctx.hypercenter());
    Ok(out)
}

fn p_norm_is_sylow_p_norm(env: &Env<'_, '_>, prop: Option<Property>) -> Result<Outcome> {
    let ctx = env.ctx;
    let mut out = Outcome::default();
    let prop = prop.expect("registered with a property");
    let primes = prime_divisors(ctx.group().order() as u64);
    out.observe("primes", primes.clone());
    for p in primes {
        let n = omega_p_norm(ctx, ClassKind::Property(prop), p, norm_opts(env))?;
        let s = sylow_p_norm(ctx, p)?;
        out.equal(
            &format!("p{p}.n_omega_p"),
            &n,
            &format!("p{p}.n_sylow_p"),
            &s,
        );
    }
    Ok(out)
}

fn baer(env: &Env<'_, '_>, _: Option<Property>) -> Result<Outcome> {
    let ctx = env.ctx;
    let mut out = Outcome::default();
    out.equal("z_inf", ctx.hypercenter(), "n_sylow", &sylow_norm(ctx));
    Ok(out)
}

fn schenkman(env: &Env<'_, '_>, _: Option<Property>) -> Result<Outcome> {
    let ctx = env.ctx;
    let mut out = Outcome::default();
    let n = baer_norm(ctx, norm_opts(env))?;
    out.subset("norm", &n, "z2", ctx.upper_central_series().term(2));
    Ok(out)
}

fn solvable_t_group(env: &Env<'_, '_>) -> Result<Option<String>> {
    let ctx = env.ctx;
    let solvable = is_solvable(ctx.group());
    let t = is_t_group_in(ctx.group(), ctx.lattice()?);
    Ok(match (solvable, t) {
        (true, true) => None,
        (false, _) => Some("hypothesis not met: group is not solvable".into()),
        (true, false) => Some("hypothesis not met: group is not a T-group".into()),
    })
}

fn solvable_t_group_norm(env: &Env<'_, '_>, _: Option<Property>) -> Result<Outcome> {
    let ctx = env.ctx;
    let mut out = Outcome::default();
    let n = baer_norm(ctx, norm_opts(env))?;
    out.equal("z_inf", ctx.hypercenter(), "norm", &n);
    out.subset("norm", &n, "z2", ctx.upper_central_series().term(2));
    Ok(out)
}

fn t_groups_are_sigma_groups(env: &Env<'_, '_>, _: Option<Property>) -> Result<Outcome> {
    let ctx = env.ctx;
    let mut out = Outcome::default();
    let solvable = is_solvable(ctx.group());
    let t = is_t_group_in(ctx.group(), ctx.lattice()?);
    let sigma = ctx.membership(Property::SubnormalizerCondition)?;
    let all_sigma = sigma.iter().all(|&b| b);
    out.observe("solvable", solvable);
    out.observe("t_group", t);
    out.observe("every_subgroup_sigma", all_sigma);
    if (solvable && t) != all_sigma {
        let lattice = ctx.lattice()?;
        let bad = sigma.iter().position(|&b| !b);
        let subgroups: Vec<(&str, &Subgroup<'_>)> = bad
            .map(|i| vec![("without_subnormalizer_condition", lattice.get(i))])
            .unwrap_or_default();
        out.fail_on(
            format!("solvable T-group = {}, every subgroup satisfies the subnormalizer condition = {all_sigma}", solvable && t),
            &subgroups,
        );
    }
    Ok(out)
}

fn maximal_abelian_self_centralizing(env: &Env<'_, '_>, _: Option<Property>) -> Result<Outcome> {
    let ctx = env.ctx;
    let mut out = Outcome::default();
    let maximal = maximal_abelian_subgroups(ctx.lattice()?);
    out.observe("maximal_abelian_count", maximal.len());
    for a in &maximal {
        let c = ctx.centralizer(a);
        if c != *a {
            out.fail_on(
                "maximal abelian A differs from C_G(A)",
                &[("a", a), ("c_g_a", &c)],
            );
        }
    }
    Ok(out)
}

fn sigma_restricts_to_overgroups(env: &Env<'_, '_>, _: Option<Property>) -> Result<Outcome> {
    let ctx = env.ctx;
    let mut out = Outcome::default();
    let lattice = ctx.lattice()?;
    let sigma = ctx.membership(Property::SubnormalizerCondition)?;
    let mut pairs = 0usize;
    for (h, _) in lattice.iter().zip(sigma).filter(|(_, &s)| s) {
        for m in lattice.iter().filter(|m| h.is_subgroup_of(m)) {
            pairs += 1;
            if !satisfies_subnormalizer_condition_in(ctx, m, h)? {
                out.fail_on(
                    "H satisfies the subnormalizer condition in G but not in M >= H",
                    &[("h", h), ("m", m)],
                );
            }
        }
    }
    out.observe("pairs_checked", pairs);
    Ok(out)
}

fn sigma_subnormal_is_normal(env: &Env<'_, '_>, _: Option<Property>) -> Result<Outcome> {
    let ctx = env.ctx;
    let mut out = Outcome::default();
    let lattice = ctx.lattice()?;
    let sigma = ctx.membership(Property::SubnormalizerCondition)?;
    let mut hits = 0usize;
    for (h, _) in lattice.iter().zip(sigma).filter(|(_, &s)| s) {
        if is_subnormal(ctx.group(), h) {
            hits += 1;
            if !h.is_normal() {
                out.fail_on(
                    "subnormal H with the subnormalizer condition is not normal",
                    &[("h", h)],
                );
            }
        }
    }
    out.observe("subnormal_with_condition", hits);
    Ok(out)
}

fn implication(env: &Env<'_, '_>, from: Property, to: Property) -> Result<Outcome> {
    let ctx = env.ctx;
    let mut out = Outcome::default();
    let lattice = ctx.lattice()?;
    let a = ctx.membership(from)?;
    let b = ctx.membership(to)?;
    let mut converse_failures = 0usize;
    for (i, h) in lattice.iter().enumerate() {
        if a[i] && !b[i] {
            out.fail_on(format!("{from} subgroup that is not {to}"), &[("h", h)]);
        }
        if b[i] && !a[i] {
            converse_failures += 1;
        }
    }
    out.observe("pairs", lattice.len());
    out.observe("antecedent_count", a.iter().filter(|&&x| x).count());
    out.observe("converse_failures", converse_failures);
    Ok(out)
}

fn pronormal_implies_weakly_normal(env: &Env<'_, '_>, _: Option<Property>) -> Result<Outcome> {
    implication(env, Property::Pronormal, Property::WeaklyNormal)
}

fn h_subgroup_implies_weakly_normal(env: &Env<'_, '_>, _: Option<Property>) -> Result<Outcome> {
    implication(env, Property::HSubgroup, Property::WeaklyNormal)
}

fn weakly_normal_implies_sigma(env: &Env<'_, '_>, _: Option<Property>) -> Result<Outcome> {
    implication(
        env,
        Property::WeaklyNormal,
        Property::SubnormalizerCondition,
    )
}

fn ne_implies_sigma(env: &Env<'_, '_>, _: Option<Property>) -> Result<Outcome> {
    implication(env, Property::NeSubgroup, Property::SubnormalizerCondition)
}

fn self_normalizing_are_sigma_normalizers(
    env: &Env<'_, '_>,
    _: Option<Property>,
) -> Result<Outcome> {
    let ctx = env.ctx;
    let mut out = Outcome::default();
    let lattice = ctx.lattice()?;
    let sn = ctx.membership(Property::SelfNormalizing)?;
    let sigma = ctx.membership(Property::SubnormalizerCondition)?;
    let left: BTreeSet<usize> = (0..lattice.len()).filter(|&i| sn[i]).collect();
    let mut right = BTreeSet::new();
    for i in (0..lattice.len()).filter(|&i| sigma[i]) {
        let n = ctx.normalizer_at(i)?;
        right.insert(lattice.position(&n).expect("normalizers are subgroups"));
    }
    out.observe("self_normalizing_count", left.len());
    out.observe("normalizers_of_sigma_count", right.len());
    if let Some(&i) = left.symmetric_difference(&right).next() {
        let side = if left.contains(&i) {
            "self-normalizing but not a normalizer of a subnormalizer-condition subgroup"
        } else {
            "normalizer of a subnormalizer-condition subgroup but not self-normalizing"
        };
        out.fail_on(side, &[("h", lattice.get(i))]);
    }
    Ok(out)
}

fn sylow_embedding(env: &Env<'_, '_>, _: Option<Property>) -> Result<Outcome> {
    let ctx = env.ctx;
    let mut out = Outcome::default();
    let lattice = ctx.lattice()?;
    let sylow = ctx.all_sylow();
    out.observe("sylow_count", sylow.len());
    for prop in [
        Property::Pronormal,
        Property::HSubgroup,
        Property::WeaklyNormal,
        Property::SubnormalizerCondition,
    ] {
        let flags = ctx.membership(prop)?;
        for p in &sylow {
            let i = lattice
                .position(p)
                .expect("Sylow subgroups are in the lattice");
            if !flags[i] {
                out.fail_on(format!("Sylow subgroup is not {prop}"), &[("p", p)]);
            }
        }
    }
    Ok(out)
}

fn normal_embedding(env: &Env<'_, '_>, _: Option<Property>) -> Result<Outcome> {
    let ctx = env.ctx;
    let mut out = Outcome::default();
    let lattice = ctx.lattice()?;
    let normal: Vec<usize> = (0..lattice.len())
        .filter(|&i| lattice.get(i).is_normal())
        .collect();
    out.observe("normal_count", normal.len());
    for prop in [
        Property::Pronormal,
        Property::HSubgroup,
        Property::WeaklyNormal,
        Property::NeSubgroup,
        Property::SubnormalizerCondition,
    ] {
        let flags = ctx.membership(prop)?;
        for &i in &normal {
            if !flags[i] {
                out.fail_on(
                    format!("normal subgroup is not {prop}"),
                    &[("h", lattice.get(i))],
                );
            }
        }
    }
    Ok(out)
}

/// Generalized quaternion of order 16: the nonabelian groups of order 16
/// with a single involution.
fn is_q16(env: &Env<'_, '_>) -> Result<Option<String>> {
    let g = env.ctx.group();
    let involutions = (0..g.order()).filter(|&x| g.element_order(x) == 2).count();
    Ok((g.order() != 16 || g.is_abelian() || involutions != 1)
        .then(|| "not applicable: group is not generalized quaternion of order 16".to_string()))
}

/// `A5` is the only perfect group of order 60.
fn is_a5(env: &Env<'_, '_>) -> Result<Option<String>> {
    let ctx = env.ctx;
    let perfect = ctx.group().order() == 60 && commutator_subgroup(ctx.whole()).is_whole();
    Ok((!perfect).then(|| "not applicable: group is not A5".to_string()))
}

fn quaternion_chain(env: &Env<'_, '_>, _: Option<Property>) -> Result<Outcome> {
    let ctx = env.ctx;
    let mut out = Outcome::default();
    let series = ctx.upper_central_series();
    let z = ctx.center();
    let n_sc = omega_norm(
        ctx,
        OmegaClass::property(Property::SelfCentralizing),
        norm_opts(env),
    )?;
    let z2 = series.term(2);
    let z3 = series.term(3);
    out.strict("z", z, "n_sc", &n_sc);
    out.equal("n_sc", &n_sc, "z2", z2);
    out.strict("z2", z2, "z3", z3);
    out.equal("z3", z3, "g", ctx.whole());
    for (label, h, expected) in [
        ("z", z, 2),
        ("n_sc", &n_sc, 4),
        ("z2", z2, 4),
        ("z3", z3, 16),
    ] {
        out.expect_order(label, h, expected);
    }
    Ok(out)
}

fn a5_ne_gap(env: &Env<'_, '_>, _: Option<Property>) -> Result<Outcome> {
    let ctx = env.ctx;
    let mut out = Outcome::default();
    let sylow5 = ctx.sylow(5)?;
    let h = &sylow5[0];
    let n_h = ctx.normalizer(h);
    out.expect_order("n_g_h", &n_h, 10);
    let ne = ctx.membership(Property::NeSubgroup)?;
    let i = ctx
        .lattice()?
        .position(h)
        .expect("Sylow subgroups are in the lattice");
    out.observe("h_is_ne", ne[i]);
    if ne[i] {
        out.fail_on("Sylow 5-subgroup is an NE-subgroup", &[("h", h)]);
    }

    let ne5 = OmegaClass::property(Property::NeSubgroup).restricted_to(5);
    let nontrivial = NormOptions {
        include_trivial: false,
        ..NormOptions::default()
    };
    let members = class_members(ctx, ne5, nontrivial)?;
    out.observe("nontrivial_ne_5_subgroups", members.len());
    if let Some(m) = members.first() {
        out.fail_on("nontrivial NE 5-subgroup exists", &[("m", m)]);
    }
    let restricted = omega_p_norm(
        ctx,
        ClassKind::Property(Property::NeSubgroup),
        5,
        nontrivial,
    )?;
    let with_trivial = omega_p_norm(
        ctx,
        ClassKind::Property(Property::NeSubgroup),
        5,
        NormOptions::default(),
    )?;
    out.observe("n_omega_5_with_trivial_order", with_trivial.order());
    let s5 = sylow_p_norm(ctx, 5)?;
    out.equal("n_omega_5", &restricted, "g", ctx.whole());
    out.expect_order("n_sylow_5", &s5, 1);
    out.strict("n_sylow_5", &s5, "n_g_h", &n_h);
    out.strict("n_g_h", &n_h, "n_omega_5", &restricted);
    Ok(out)
}
