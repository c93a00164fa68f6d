//! Seeded campaigns that check the laws on generated cases.
//!
//! A campaign generates its cases sequentially from the seed, evaluates
//! them in parallel and merges the outcomes in case order, so a config
//! always yields the same report apart from `runtime_ms`.
//!
//! ```
//! use locprime::harness::{run_campaign, CampaignConfig, Law};
//!
//! let cfg = CampaignConfig::new(Law::MgmEquivalence, 1, 12);
//! let report = run_campaign(&cfg);
//! assert!(report.passed());
//! assert!(report.cases_run >= 12);
//! ```

mod case;
mod generate;
mod laws;
mod pinned;

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

pub use case::Case;
pub use generate::{
    generate_finite_module, generate_ideal, generate_module, generate_vectors, quotient_over, ContextFamily, Profile,
};
pub use laws::Law;
pub use pinned::{pinned_table, TableRow};

use crate::error::Result;
use crate::fpmodule::PresentedModule;
use crate::primality::{LocalKind, PredicateEngine};
use crate::ring::{BaseRing, Element, Ideal, RingContext};
use generate::{factor_coprime_to, factor_dividing};

/// Violations beyond this many are reported without shrinking.
const SHRINK_LIMIT: usize = 8;

#[derive(Clone, Debug)]
pub struct CampaignConfig {
    pub law: Law,
    pub seed: u64,
    /// Number of random cases, spread round-robin over `contexts`.
    pub case_count: usize,
    pub profile: Profile,
    pub contexts: Vec<ContextFamily>,
}

impl CampaignConfig {
    /// Default profile over the default context families.
    pub fn new(law: Law, seed: u64, case_count: usize) -> Self {
        CampaignConfig { law, seed, case_count, profile: Profile::default(), contexts: ContextFamily::defaults() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub case_index: usize,
    pub clause: String,
    pub expected: String,
    pub got: String,
    pub witness: Option<String>,
    /// Re-runnable descriptor of the failing case.
    pub case: Value,
    /// The same failure after shrinking invariant factors and ideals.
    pub minimal_case: Option<Value>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub law: String,
    pub seed: u64,
    pub profile: String,
    pub contexts: Vec<String>,
    /// Ideal pairs evaluated with their hypotheses in force.
    pub cases_run: usize,
    /// Of `cases_run`, how many came from the exhaustive sweep.
    pub exhaustive_cases_run: usize,
    pub cases_skipped: usize,
    pub violations: Vec<Violation>,
    pub oracle_cross_checks_run: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub table: Vec<TableRow>,
    pub runtime_ms: u64,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn render_text(&self) -> String {
        let mut s = format!(
            "law {}: {} (seed {}, profile {}, contexts {})\n",
            self.law,
            if self.passed() { "PASS" } else { "FAIL" },
            self.seed,
            self.profile,
            self.contexts.join(" "),
        );
        s += &format!(
            "cases run: {} ({} exhaustive), skipped: {}, oracle cross-checks: {}, violations: {}, {} ms\n",
            self.cases_run,
            self.exhaustive_cases_run,
            self.cases_skipped,
            self.oracle_cross_checks_run,
            self.violations.len(),
            self.runtime_ms
        );
        if !self.table.is_empty() {
            s += "\nexample | ring | module | statement | expected | got\n";
            for r in &self.table {
                s += &format!(
                    "{} | {} | {} | {} | {} | {}{}\n",
                    r.example,
                    r.ring,
                    r.module,
                    r.statement,
                    r.expected,
                    r.got,
                    if r.pass { "" } else { "  <-- MISMATCH" }
                );
            }
        }
        for v in &self.violations {
            s += &format!("\ncase {}: {}\n  expected: {}\n  got: {}\n", v.case_index, v.clause, v.expected, v.got);
            if let Some(w) = &v.witness {
                s += &format!("  witness: {w}\n");
            }
            s += &format!("  case: {}\n", v.case);
            if let Some(m) = &v.minimal_case {
                s += &format!("  minimal case: {m}\n");
            }
        }
        s
    }
}

/// Generate the `index`-th random case of a campaign.
pub fn generate_case(law: Law, rng: &mut ChaCha8Rng, family: &ContextFamily, profile: &Profile) -> Case {
    let ctx0 = family.sample(rng, profile);
    let ctx = if law.quotient_only() { quotient_over(rng, &ctx0, profile) } else { ctx0 };
    if law == Law::GmAdjunction {
        return gm_case(rng, &ctx, profile);
    }
    let bound = profile.oracle_bound;
    let m = if law == Law::OracleEquivalence && rng.gen_bool(0.5) {
        generate_finite_module(rng, &ctx, profile, bound.min(crate::oracle::HOM_TENSOR_BOUND))
    } else if law.finite_only() {
        generate_finite_module(rng, &ctx, profile, bound)
    } else {
        generate_module(rng, &ctx, profile)
    };
    let mut i = generate_ideal(rng, &m, profile);
    if law == Law::MgmEquivalence && rng.gen_bool(0.3) {
        // Multiples of the annihilator make IM = 0 common.
        i = m.annihilator_ideal().product(&i).expect("same context");
    }
    let j = generate_ideal(rng, &m, profile);
    let mut case = Case::new(m, i, j);
    if law.uses_sub() {
        case.sub = generate_vectors(rng, &case.module, profile);
        if case.sub.is_empty() && matches!(law, Law::ClosureSub | Law::ClosureImg) && case.module.generator_count() > 0
        {
            case.sub = vec![case.module.basis_element(0)];
        }
    }
    if law.uses_other() {
        case.other = Some(match law {
            Law::OracleEquivalence => generate_finite_module(rng, &ctx, profile, crate::oracle::HOM_TENSOR_BOUND),
            _ => generate_module(rng, &ctx, profile),
        });
    }
    case
}

/// A finite module all of whose invariant factors come from `factor`,
/// within `bound` elements.
fn module_from(
    rng: &mut ChaCha8Rng,
    ctx: &RingContext,
    bound: usize,
    mut factor: impl FnMut(&mut ChaCha8Rng) -> Element,
) -> PresentedModule {
    let ring = ctx.base();
    let g = rng.gen_range(1..=3);
    let mut budget = bound as u128;
    let mut fs = Vec::new();
    for _ in 0..g {
        let d = factor(rng);
        let c = ring.residue_count(&d).unwrap_or(u128::MAX);
        if c <= budget {
            budget /= c.max(1);
            fs.push(d);
        }
    }
    PresentedModule::from_factors(ctx, &fs).expect("factors of the context")
}

/// Cases for the adjunction: `M` is `I`-coprime and `N` is `I`-prime, by
/// rejection sampling or by construction (`IM = 0`, `IM = M`, `IN = 0`,
/// `(0:_N I) = 0`).
fn gm_case(rng: &mut ChaCha8Rng, ctx: &RingContext, profile: &Profile) -> Case {
    let bound = profile.oracle_bound.min(crate::oracle::HOM_TENSOR_BOUND);
    let seed_module = generate_finite_module(rng, ctx, profile, bound);
    let i = generate_ideal(rng, &seed_module, profile);
    let a = i.generator().clone();
    let pick = |want: LocalKind, rng: &mut ChaCha8Rng| -> PresentedModule {
        match rng.gen_range(0..3) {
            0 => {
                for _ in 0..30 {
                    let m = generate_finite_module(rng, ctx, profile, bound);
                    let holds = PredicateEngine::new(&m).without_witnesses().local(want, &i, None).map(|v| v.holds);
                    if holds.unwrap_or(false) {
                        return m;
                    }
                }
                module_from(rng, ctx, bound, |r| factor_dividing(r, ctx, profile, &a))
            }
            1 => module_from(rng, ctx, bound, |r| factor_dividing(r, ctx, profile, &a)),
            _ => module_from(rng, ctx, bound, |r| factor_coprime_to(r, ctx, profile, &a)),
        }
    };
    let m = pick(LocalKind::ICoprime, rng);
    let n = pick(LocalKind::IPrime, rng);
    let mut case = Case::new(m, i.clone(), i);
    case.other = Some(n);
    case
}

/// Quotient contexts of the exhaustive sweep: `Z/n` for `n ≤ max`, plus
/// `F_2[x]/(f)` with `deg f ≤ 3` and `F_3[x]/(f)` with `deg f ≤ 2`.
fn sweep_contexts(max: i64) -> Vec<RingContext> {
    let mut out: Vec<RingContext> = (2..=max).map(RingContext::integers_mod).collect();
    for (p, top) in [(2u64, 3usize), (3, 2)] {
        let base = RingContext::polynomials(p).base();
        for deg in 1..=top {
            for f in crate::ring::poly::monic_of_degree(p, deg) {
                out.push(RingContext::over(base, Some(Element::Poly(f))).expect("monic"));
            }
        }
    }
    out
}

/// Every cyclic module `R/(d)` over each sweep context, with every ideal
/// (pair) of the context.
pub fn exhaustive_cases(law: Law, max_modulus: i64) -> Vec<Case> {
    let mut out = Vec::new();
    for ctx in sweep_contexts(max_modulus) {
        let ideals = ctx.enumerate_ideals().expect("quotient context");
        let pairs: Vec<(Ideal, Ideal)> = if law.uses_pair() {
            ideals.iter().flat_map(|i| ideals.iter().map(move |j| (i.clone(), j.clone()))).collect()
        } else {
            ideals.iter().map(|i| (i.clone(), i.clone())).collect()
        };
        for d in &ideals {
            let m = PresentedModule::cyclic(&ctx, d.generator()).expect("divisor of the modulus");
            let other = law.uses_other().then(|| m.clone());
            out.push(Case { module: m, pairs: pairs.clone(), sub: Vec::new(), other });
        }
    }
    out
}

fn ring_names(contexts: &[ContextFamily]) -> Vec<String> {
    contexts.iter().map(|c| c.label()).collect()
}

/// Run a campaign.
pub fn run_campaign(cfg: &CampaignConfig) -> Report {
    let start = Instant::now();
    let mut report = Report {
        law: cfg.law.name().into(),
        seed: cfg.seed,
        profile: cfg.profile.name.clone(),
        contexts: ring_names(&cfg.contexts),
        cases_run: 0,
        exhaustive_cases_run: 0,
        cases_skipped: 0,
        violations: Vec::new(),
        oracle_cross_checks_run: 0,
        table: Vec::new(),
        runtime_ms: 0,
    };
    if cfg.law == Law::PinnedExamples {
        match pinned_table() {
            Ok(rows) => {
                report.cases_run = rows.len();
                for (k, r) in rows.iter().enumerate() {
                    if !r.pass {
                        report.violations.push(Violation {
                            case_index: k,
                            clause: format!("{}: {}", r.example, r.statement),
                            expected: r.expected.clone(),
                            got: r.got.clone(),
                            witness: None,
                            case: serde_json::json!({"ring": r.ring, "module": r.module}),
                            minimal_case: None,
                        });
                    }
                }
                report.table = rows;
            }
            Err(e) => report.violations.push(Violation {
                case_index: 0,
                clause: "pinned table".into(),
                expected: "no error".into(),
                got: format!("error: {e}"),
                witness: None,
                case: Value::Null,
                minimal_case: None,
            }),
        }
        report.runtime_ms = start.elapsed().as_millis() as u64;
        return report;
    }

    let mut cases = match cfg.profile.exhaustive_modulus {
        Some(max) => exhaustive_cases(cfg.law, max),
        None => Vec::new(),
    };
    let sweep = cases.len();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let families = if cfg.contexts.is_empty() { ContextFamily::defaults() } else { cfg.contexts.clone() };
    for k in 0..cfg.case_count {
        cases.push(generate_case(cfg.law, &mut rng, &families[k % families.len()], &cfg.profile));
    }
    let bound = cfg.profile.oracle_bound;
    let outcomes: Vec<laws::Outcome> = cases.par_iter().map(|c| laws::check(cfg.law, c, bound)).collect();
    for (k, (case, out)) in cases.iter().zip(&outcomes).enumerate() {
        report.cases_run += out.pairs_run;
        if k < sweep {
            report.exhaustive_cases_run += out.pairs_run;
        }
        report.cases_skipped += out.pairs_skipped;
        report.oracle_cross_checks_run += out.oracle_checks;
        for f in &out.failures {
            let single = case.at_pair(f.pair.min(case.pairs.len().saturating_sub(1)));
            let minimal = (report.violations.len() < SHRINK_LIMIT).then(|| {
                let clause = f.clause.clone();
                shrink_case(&single, |c| laws::check(cfg.law, c, bound).failures.iter().any(|g| g.clause == clause))
                    .descriptor()
            });
            report.violations.push(Violation {
                case_index: k,
                clause: f.clause.clone(),
                expected: f.expected.clone(),
                got: f.got.clone(),
                witness: f.witness.clone(),
                case: single.descriptor(),
                minimal_case: minimal,
            });
        }
    }
    report.runtime_ms = start.elapsed().as_millis() as u64;
    report
}

/// Evaluate `law` on one case, as a single-case report. A case that lacks
/// what the law needs (a second module, a quotient context) is an input
/// error rather than a violation.
pub fn run_case(law: Law, case: &Case, profile: &Profile) -> Result<Report> {
    if law == Law::PinnedExamples {
        return Err(crate::Error::Parse("pinned_examples does not take a case".into()));
    }
    if law.uses_other() && case.other.is_none() {
        return Err(crate::Error::Parse(format!("case: law `{}` needs an `other` module", law.name())));
    }
    if law.quotient_only() && !case.module.context().is_quotient() {
        return Err(crate::Error::QuotientContextUnsupported);
    }
    let start = Instant::now();
    let out = laws::check(law, case, profile.oracle_bound);
    Ok(Report {
        law: law.name().into(),
        seed: 0,
        profile: profile.name.clone(),
        contexts: vec![case.module.context().to_string()],
        cases_run: out.pairs_run,
        exhaustive_cases_run: 0,
        cases_skipped: out.pairs_skipped,
        violations: out
            .failures
            .iter()
            .map(|f| Violation {
                case_index: 0,
                clause: f.clause.clone(),
                expected: f.expected.clone(),
                got: f.got.clone(),
                witness: f.witness.clone(),
                case: case.at_pair(f.pair).descriptor(),
                minimal_case: None,
            })
            .collect(),
        oracle_cross_checks_run: out.oracle_checks,
        table: Vec::new(),
        runtime_ms: start.elapsed().as_millis() as u64,
    })
}

/// Factor list of a module presented as a diagonal matrix, if it is one.
fn diagonal_factors(m: &PresentedModule) -> Option<Vec<Element>> {
    let r = m.relations();
    let g = m.generator_count();
    if r.rows() != g {
        return None;
    }
    let mut out = Vec::with_capacity(g);
    for i in 0..g {
        for j in 0..g {
            if i != j && !r.row(i)[j].is_zero() {
                return None;
            }
        }
        out.push(r.row(i)[i].clone());
    }
    Some(out)
}

fn canonical_factors(m: &PresentedModule) -> Vec<Element> {
    let inv = m.invariant_factors();
    let mut f = inv.torsion_factors.clone();
    f.extend(std::iter::repeat_n(m.ring().zero(), inv.free_rank));
    f
}

fn prime_divisions(ring: BaseRing, a: &Element) -> Vec<Element> {
    if a.is_zero() || ring.is_unit(a) {
        return Vec::new();
    }
    ring.factor(a).into_iter().map(|(p, _)| ring.exact_div(a, &p).expect("prime factor")).collect()
}

/// Smaller variants of a module: canonical form first (only when no
/// coordinates depend on the presentation), then each factor divided by
/// one of its primes or replaced by a unit, which keeps the generator count.
fn module_candidates(m: &PresentedModule, keep_presentation: bool) -> Vec<PresentedModule> {
    let ctx = m.context();
    let ring = ctx.base();
    let mut out = Vec::new();
    let factors = match diagonal_factors(m) {
        Some(f) => f,
        None if keep_presentation => return out,
        None => {
            out.extend(PresentedModule::from_factors(ctx, &canonical_factors(m)));
            return out;
        }
    };
    if !keep_presentation {
        let canon = canonical_factors(m);
        if canon.len() < factors.len() {
            out.extend(PresentedModule::from_factors(ctx, &canon));
        }
    }
    for (k, f) in factors.iter().enumerate() {
        let mut variants = prime_divisions(ring, f);
        if !ring.is_unit(f) {
            variants.push(ring.one());
        }
        for v in variants {
            let mut fs = factors.clone();
            fs[k] = v;
            out.extend(PresentedModule::from_factors(ctx, &fs));
        }
    }
    out
}

fn ideal_candidates(i: &Ideal) -> Vec<Ideal> {
    let ctx = i.context();
    prime_divisions(ctx.base(), i.generator()).iter().filter_map(|g| Ideal::principal(ctx, g).ok()).collect()
}

/// Greedily shrink a failing single-pair case while `still_fails` keeps
/// returning true: drop submodule generators, divide invariant factors and
/// ideal generators by primes, and pad with units to keep coordinates.
pub fn shrink_case(case: &Case, still_fails: impl Fn(&Case) -> bool) -> Case {
    let mut cur = case.clone();
    for _ in 0..128 {
        let mut cands: Vec<Case> = Vec::new();
        for k in 0..cur.sub.len() {
            let mut c = cur.clone();
            c.sub.remove(k);
            cands.push(c);
        }
        for m in module_candidates(&cur.module, !cur.sub.is_empty()) {
            let mut c = cur.clone();
            c.sub = c.sub.iter().map(|v| m.reduce(v)).collect();
            c.module = m;
            cands.push(c);
        }
        if let Some(o) = &cur.other {
            for m in module_candidates(o, false) {
                cands.push(Case { other: Some(m), ..cur.clone() });
            }
        }
        if let Some((i, j)) = cur.pairs.first().cloned() {
            for ni in ideal_candidates(&i) {
                cands.push(Case { pairs: vec![(ni, j.clone())], ..cur.clone() });
            }
            for nj in ideal_candidates(&j) {
                cands.push(Case { pairs: vec![(i.clone(), nj)], ..cur.clone() });
            }
        }
        match cands.into_iter().find(|c| still_fails(c)) {
            Some(c) => cur = c,
            None => break,
        }
    }
    cur
}

/// Convenience: a law by name, mapped to [`crate::Error::UnknownLaw`].
pub fn law(name: &str) -> Result<Law> {
    Law::from_name(name)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zi(n: i64) -> Element {
        Element::int(n)
    }

    #[test]
    fn unknown_law() {
        assert_eq!(Law::from_name("no_such_law"), Err(crate::Error::UnknownLaw("no_such_law".into())));
        for l in Law::ALL {
            assert_eq!(Law::from_name(l.name()), Ok(l));
        }
    }

    #[test]
    fn deterministic_reports() {
        for law in [Law::ChartPrime, Law::GmAdjunction, Law::ClosureLoc] {
            let cfg = CampaignConfig::new(law, 9, 18);
            let mut a = run_campaign(&cfg);
            let mut b = run_campaign(&cfg);
            a.runtime_ms = 0;
            b.runtime_ms = 0;
            assert_eq!(a.to_json(), b.to_json());
        }
    }

    #[test]
    fn gm_example_z2() {
        let z = RingContext::integers();
        let m = PresentedModule::cyclic(&z, &zi(2)).unwrap();
        let i = Ideal::principal(&z, &zi(2)).unwrap();
        let mut case = Case::new(m.clone(), i.clone(), i);
        case.other = Some(m);
        let r = run_case(Law::GmAdjunction, &case, &Profile::default()).unwrap();
        assert!(r.passed(), "{}", r.render_text());
        assert_eq!(r.cases_run, 1);
        assert_eq!(r.oracle_cross_checks_run, 1);

        case.other = None;
        assert!(run_case(Law::GmAdjunction, &case, &Profile::default()).is_err());
        assert!(run_case(Law::HomTransferInj, &case, &Profile::default()).is_err());
    }

    #[test]
    fn shrinking_a_synthetic_law() {
        // "Fails" whenever some invariant factor is even: the minimum is Z/2.
        // With no submodule coordinates to keep, the presentation collapses.
        let z = RingContext::integers();
        let m = PresentedModule::from_factors(&z, &[zi(12), zi(45), zi(8)]).unwrap();
        let i = Ideal::principal(&z, &zi(6)).unwrap();
        let case = Case::new(m, i.clone(), i);
        let even = |c: &Case| c.module.invariant_factors().torsion_factors.iter().any(|d| z.base().divides(&zi(2), d));
        let small = shrink_case(&case, even);
        assert_eq!(small.module.invariant_factors().torsion_factors, vec![zi(2)]);
        assert_eq!(small.module.generator_count(), 1);
        assert_eq!(small.pairs[0].0.generator(), &zi(1));

        // A submodule pins the coordinates, so units pad instead.
        let mut pinned = case.clone();
        pinned.sub = vec![vec![zi(1), zi(0), zi(0)]];
        let keep = |c: &Case| !c.sub.is_empty() && even(c);
        let small = shrink_case(&pinned, keep);
        assert_eq!(small.module.generator_count(), 3);
        assert_eq!(small.module.invariant_factors().torsion_factors, vec![zi(2)]);
    }

    #[test]
    fn pinned_campaign_passes() {
        let r = run_campaign(&CampaignConfig::new(Law::PinnedExamples, 0, 0));
        assert!(r.passed(), "{}", r.render_text());
        assert!(r.render_text().contains("{0, 2, 4}"));
    }

    #[test]
    fn every_law_runs_clean_on_a_few_cases() {
        for law in Law::ALL {
            let r = run_campaign(&CampaignConfig::new(law, 3, 12));
            assert!(r.passed(), "{}", r.render_text());
        }
    }
}
