//! The laws a campaign can check, and how each one is evaluated on a case.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::case::Case;
use crate::error::{Error, Result};
use crate::fpmodule::PresentedModule;
use crate::functors::{gamma, hom_from_quotient, hom_module, lambda, tensor_with_quotient};
use crate::oracle::{self, Agreement, FiniteModule, Query};
use crate::primality::{
    global_predicate, global_predicate_on_localization, local_predicate, predicate_on_localization, GlobalKind,
    LocalKind, PredicateEngine, Witness,
};
use crate::ring::{Element, Ideal, RingContext};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Law {
    ChartPrime,
    ChartCoprime,
    ClosureSub,
    ClosureImg,
    ClosureLoc,
    FunctorImages,
    AnnihilatorPrime,
    PrimeTorsion,
    GlobalCpm,
    GmAdjunction,
    MgmEquivalence,
    HomTransferFwd,
    HomTransferInj,
    CharacterizationXcheck,
    OracleEquivalence,
    PinnedExamples,
}

impl Law {
    pub const ALL: [Law; 16] = [
        Law::ChartPrime,
        Law::ChartCoprime,
        Law::ClosureSub,
        Law::ClosureImg,
        Law::ClosureLoc,
        Law::FunctorImages,
        Law::AnnihilatorPrime,
        Law::PrimeTorsion,
        Law::GlobalCpm,
        Law::GmAdjunction,
        Law::MgmEquivalence,
        Law::HomTransferFwd,
        Law::HomTransferInj,
        Law::CharacterizationXcheck,
        Law::OracleEquivalence,
        Law::PinnedExamples,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Law::ChartPrime => "chart_prime",
            Law::ChartCoprime => "chart_coprime",
            Law::ClosureSub => "closure_sub",
            Law::ClosureImg => "closure_img",
            Law::ClosureLoc => "closure_loc",
            Law::FunctorImages => "functor_images",
            Law::AnnihilatorPrime => "annihilator_prime",
            Law::PrimeTorsion => "prime_torsion",
            Law::GlobalCpm => "global_cpm",
            Law::GmAdjunction => "gm_adjunction",
            Law::MgmEquivalence => "mgm_equivalence",
            Law::HomTransferFwd => "hom_transfer_fwd",
            Law::HomTransferInj => "hom_transfer_inj",
            Law::CharacterizationXcheck => "characterization_xcheck",
            Law::OracleEquivalence => "oracle_equivalence",
            Law::PinnedExamples => "pinned_examples",
        }
    }

    pub fn from_name(name: &str) -> Result<Law> {
        Law::ALL.into_iter().find(|l| l.name() == name).ok_or_else(|| Error::UnknownLaw(name.to_string()))
    }

    /// One-line statement of what the law asserts.
    pub fn statement(self) -> &'static str {
        match self {
            Law::ChartPrime => "implications between prime, weakly prime, I-prime, (I,J)-prime, reduced and I-reduced for M/P and (P:M)",
            Law::ChartCoprime => "implications between coprime, weakly coprime, I-coprime, (I,J)-coprime, coreduced and I-coreduced",
            Law::ClosureSub => "I-prime and (I,J)-prime modules are closed under submodules",
            Law::ClosureImg => "I-coprime and (I,J)-coprime modules are closed under quotients",
            Law::ClosureLoc => "the four local predicates and their global forms survive localization at primes",
            Law::FunctorImages => "Γ_I sends I-prime to I-coprime, Λ_I sends I-coprime to I-prime; reduced/coreduced descriptions of Γ_I and Λ_I",
            Law::AnnihilatorPrime => "every module is (0:_R M)-prime",
            Law::PrimeTorsion => "I-prime with (0:_M I) ≠ 0 implies I-torsion; every module is 0-prime and R-prime",
            Law::GlobalCpm => "rM ∈ {0, M} for all r iff IM ∈ {0, M} for all I",
            Law::GmAdjunction => "Hom(Λ_I M, N) ≅ Hom(M, Γ_I N) for I-coprime M and I-prime N",
            Law::MgmEquivalence => "I-prime∧I-torsion, I-coprime∧I-complete, I-reduced∧I-torsion, I-coreduced∧I-complete and IM = 0 agree",
            Law::HomTransferFwd => "(I,J)-coprime M gives (I,J)-prime Hom(M,N); coprime M gives prime Hom(M,N)",
            Law::HomTransferInj => "over self-injective quotients with N = R: Hom(-,R) swaps (I,J)-prime and (I,J)-coprime, and R itself",
            Law::CharacterizationXcheck => "equivalent characterizations agree with each other and with the oracle; witnesses are valid",
            Law::OracleEquivalence => "fast paths equal brute-force answers on small finite modules",
            Law::PinnedExamples => "verdict table of the worked examples",
        }
    }

    /// Whether the second ideal of a pair is used.
    pub(crate) fn uses_pair(self) -> bool {
        matches!(
            self,
            Law::ChartPrime
                | Law::ChartCoprime
                | Law::ClosureSub
                | Law::ClosureImg
                | Law::ClosureLoc
                | Law::HomTransferFwd
                | Law::HomTransferInj
                | Law::CharacterizationXcheck
                | Law::OracleEquivalence
        )
    }

    pub(crate) fn finite_only(self) -> bool {
        matches!(self, Law::GmAdjunction | Law::MgmEquivalence | Law::CharacterizationXcheck | Law::OracleEquivalence)
    }

    pub(crate) fn uses_sub(self) -> bool {
        matches!(self, Law::ChartPrime | Law::ClosureSub | Law::ClosureImg | Law::AnnihilatorPrime)
    }

    pub(crate) fn uses_other(self) -> bool {
        matches!(self, Law::GmAdjunction | Law::HomTransferFwd | Law::OracleEquivalence)
    }

    pub(crate) fn quotient_only(self) -> bool {
        self == Law::HomTransferInj
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A clause of a law that did not hold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Failure {
    pub pair: usize,
    pub clause: String,
    pub expected: String,
    pub got: String,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Default)]
pub(crate) struct Outcome {
    pub failures: Vec<Failure>,
    pub oracle_checks: usize,
    pub pairs_run: usize,
    pub pairs_skipped: usize,
}

struct Checker {
    out: Outcome,
    pair: usize,
}

impl Checker {
    fn fail(&mut self, clause: &str, expected: impl Into<String>, got: impl Into<String>, witness: Option<String>) {
        self.out.failures.push(Failure {
            pair: self.pair,
            clause: clause.to_string(),
            expected: expected.into(),
            got: got.into(),
            witness,
        });
    }

    fn require(&mut self, clause: &str, ok: bool, expected: &str, got: impl FnOnce() -> String) {
        if !ok {
            let g = got();
            self.fail(clause, expected, g, None);
        }
    }

    fn local_implies(
        &mut self,
        clause: &str,
        hyp: bool,
        ev: &Eval,
        kind: LocalKind,
        i: &Ideal,
        j: Option<&Ideal>,
    ) -> Result<()> {
        if hyp && !ev.local(kind, i, j)? {
            let v = local_predicate(ev.m, kind, i, j)?;
            self.fail(clause, format!("{kind} holds"), v.to_string(), v.witness.map(|w| w.to_string()));
        }
        Ok(())
    }

    fn global_implies(&mut self, clause: &str, hyp: bool, ev: &Eval, kind: GlobalKind) -> Result<()> {
        if hyp && !ev.global(kind)? {
            let v = global_predicate(ev.m, kind)?;
            self.fail(clause, format!("{kind} holds"), v.to_string(), v.witness.map(|w| w.to_string()));
        }
        Ok(())
    }

    fn agree(&mut self, clause: &str, q: &Query, bound: usize) -> Result<()> {
        match oracle::cross_check(q, bound)? {
            Agreement::Agree => self.out.oracle_checks += 1,
            Agreement::Skipped => {}
            Agreement::Disagree { fast, oracle } => {
                self.out.oracle_checks += 1;
                self.fail(clause, format!("oracle: {oracle:?}"), format!("fast path: {fast:?}"), None);
            }
        }
        Ok(())
    }
}

/// Witness-free predicate evaluation with per-module caches.
struct Eval<'a> {
    m: &'a PresentedModule,
    eng: PredicateEngine<'a>,
}

impl<'a> Eval<'a> {
    fn new(m: &'a PresentedModule) -> Self {
        Eval { m, eng: PredicateEngine::new(m).without_witnesses() }
    }

    fn local(&self, kind: LocalKind, i: &Ideal, j: Option<&Ideal>) -> Result<bool> {
        Ok(self.eng.local(kind, i, j)?.holds)
    }

    fn global(&self, kind: GlobalKind) -> Result<bool> {
        Ok(self.eng.global(kind)?.holds)
    }
}

use GlobalKind as G;
use LocalKind as L;

/// Evaluate `law` on every pair of `case`.
pub(crate) fn check(law: Law, case: &Case, bound: usize) -> Outcome {
    let mut ck = Checker { out: Outcome::default(), pair: 0 };
    let res = match law {
        Law::ChartPrime => chart_prime(case, &mut ck),
        Law::ChartCoprime => chart_coprime(case, &mut ck),
        Law::ClosureSub => closure_sub(case, &mut ck),
        Law::ClosureImg => closure_img(case, &mut ck),
        Law::ClosureLoc => closure_loc(case, &mut ck),
        Law::FunctorImages => functor_images(case, &mut ck),
        Law::AnnihilatorPrime => annihilator_prime(case, &mut ck),
        Law::PrimeTorsion => prime_torsion(case, &mut ck),
        Law::GlobalCpm => global_cpm(case, &mut ck, bound),
        Law::GmAdjunction => gm_adjunction(case, &mut ck),
        Law::MgmEquivalence => mgm_equivalence(case, &mut ck),
        Law::HomTransferFwd => hom_transfer_fwd(case, &mut ck),
        Law::HomTransferInj => hom_transfer_inj(case, &mut ck),
        Law::CharacterizationXcheck => characterization_xcheck(case, &mut ck, bound),
        Law::OracleEquivalence => oracle_equivalence(case, &mut ck, bound),
        Law::PinnedExamples => Ok(()),
    };
    if let Err(e) = res {
        ck.fail("evaluation", "no error", format!("error: {e}"), None);
    }
    ck.out
}

/// Runs `f` once per ideal pair, counting the pairs.
fn each_pair(
    case: &Case,
    ck: &mut Checker,
    mut f: impl FnMut(&mut Checker, &Ideal, &Ideal) -> Result<()>,
) -> Result<()> {
    for (k, (i, j)) in case.pairs.iter().enumerate() {
        ck.pair = k;
        ck.out.pairs_run += 1;
        f(ck, i, j)?;
    }
    ck.pair = 0;
    Ok(())
}

fn quotient_by_sub(case: &Case) -> Result<PresentedModule> {
    if case.sub.is_empty() {
        return Ok(case.module.clone());
    }
    case.module.quotient(&case.module.submodule(case.sub.clone())?)
}

/// `R/Q` for an ideal `Q`, so that ideal-level notions (prime, semiprime,
/// `(I,J)`-prime, `I`-semiprime) are read off module predicates.
fn ring_mod(ctx: &RingContext, q: &Ideal) -> Result<PresentedModule> {
    PresentedModule::cyclic(ctx, q.generator())
}

fn chart_prime(case: &Case, ck: &mut Checker) -> Result<()> {
    let q = quotient_by_sub(case)?;
    let ctx = q.context().clone();
    let e = Eval::new(&q);
    let rq = ring_mod(&ctx, &q.annihilator_ideal())?;
    let er = Eval::new(&rq);
    let prime = e.global(G::Prime)?;
    let weak = e.global(G::WeaklyPrime)?;
    let reduced = e.global(G::Reduced)?;
    let nonzero = !q.is_zero_module();
    let ann_prime = nonzero && er.global(G::Prime)?;
    let ann_semiprime = er.global(G::Reduced)?;

    ck.global_implies("P prime ⇒ P weakly prime", prime, &e, G::WeaklyPrime)?;
    ck.global_implies("P weakly prime ⇒ (P:M) prime", weak && nonzero, &er, G::Prime)?;
    ck.global_implies("P weakly prime ⇒ M/P reduced", weak, &e, G::Reduced)?;
    ck.global_implies("M/P reduced ⇒ (P:M) semiprime", reduced, &er, G::Reduced)?;
    ck.global_implies("(P:M) prime ⇒ (P:M) semiprime", ann_prime, &er, G::Reduced)?;

    each_pair(case, ck, |ck, i, j| {
        let ip = e.local(L::IPrime, i, None)?;
        let ijp = e.local(L::IJPrime, i, Some(j))?;
        let ir = e.local(L::IReduced, i, None)?;
        ck.local_implies("P prime ⇒ P I-prime", prime, &e, L::IPrime, i, None)?;
        ck.local_implies("P I-prime ⇒ P (I,J)-prime", ip, &e, L::IJPrime, i, Some(j))?;
        ck.local_implies("P weakly prime ⇒ P (I,J)-prime", weak, &e, L::IJPrime, i, Some(j))?;
        ck.local_implies("P (I,J)-prime ⇒ (P:M) (I,J)-prime", ijp, &er, L::IJPrime, i, Some(j))?;
        ck.local_implies("(P:M) prime ⇒ (P:M) (I,J)-prime", ann_prime, &er, L::IJPrime, i, Some(j))?;
        ck.local_implies("P I-prime ⇒ M/P I-reduced", ip, &e, L::IReduced, i, None)?;
        ck.local_implies("M/P reduced ⇒ M/P I-reduced", reduced, &e, L::IReduced, i, None)?;
        ck.local_implies("M/P I-reduced ⇒ (P:M) I-semiprime", ir, &er, L::IReduced, i, None)?;
        ck.local_implies("(P:M) semiprime ⇒ (P:M) I-semiprime", ann_semiprime, &er, L::IReduced, i, None)?;
        Ok(())
    })
}

fn chart_coprime(case: &Case, ck: &mut Checker) -> Result<()> {
    let m = &case.module;
    let e = Eval::new(m);
    let coprime = e.global(G::Coprime)?;
    let weak = e.global(G::WeaklyCoprime)?;
    let cored = e.global(G::Coreduced)?;
    ck.global_implies("coprime ⇒ weakly coprime", coprime, &e, G::WeaklyCoprime)?;
    ck.global_implies("weakly coprime ⇒ coreduced", weak, &e, G::Coreduced)?;
    each_pair(case, ck, |ck, i, j| {
        let icp = e.local(L::ICoprime, i, None)?;
        ck.local_implies("coreduced ⇒ I-coreduced", cored, &e, L::ICoreduced, i, None)?;
        ck.local_implies("coprime ⇒ I-coprime", coprime, &e, L::ICoprime, i, None)?;
        ck.local_implies("I-coprime ⇒ (I,J)-coprime", icp, &e, L::IJCoprime, i, Some(j))?;
        ck.local_implies("weakly coprime ⇒ (I,J)-coprime", weak, &e, L::IJCoprime, i, Some(j))?;
        ck.local_implies("I-coprime ⇒ I-coreduced", icp, &e, L::ICoreduced, i, None)?;
        Ok(())
    })
}

fn closure_sub(case: &Case, ck: &mut Checker) -> Result<()> {
    let m = &case.module;
    let e = Eval::new(m);
    let s = m.submodule(case.sub.clone())?.as_module();
    let es = Eval::new(&s);
    each_pair(case, ck, |ck, i, j| {
        let ip = e.local(L::IPrime, i, None)?;
        let ijp = e.local(L::IJPrime, i, Some(j))?;
        ck.local_implies("M I-prime ⇒ S I-prime", ip, &es, L::IPrime, i, None)?;
        ck.local_implies("M (I,J)-prime ⇒ S (I,J)-prime", ijp, &es, L::IJPrime, i, Some(j))?;
        let t = m.annihilator_of(j)?.as_module();
        let et = Eval::new(&t);
        ck.local_implies("M I-prime ⇒ (0:_M J) I-prime", ip, &et, L::IPrime, i, None)?;
        ck.local_implies("M (I,J)-prime ⇒ (0:_M J) (I,J)-prime", ijp, &et, L::IJPrime, i, Some(j))?;
        Ok(())
    })
}

fn closure_img(case: &Case, ck: &mut Checker) -> Result<()> {
    let m = &case.module;
    let e = Eval::new(m);
    let q = quotient_by_sub(case)?;
    let eq = Eval::new(&q);
    each_pair(case, ck, |ck, i, j| {
        let icp = e.local(L::ICoprime, i, None)?;
        let ijc = e.local(L::IJCoprime, i, Some(j))?;
        ck.local_implies("M I-coprime ⇒ M/S I-coprime", icp, &eq, L::ICoprime, i, None)?;
        ck.local_implies("M (I,J)-coprime ⇒ M/S (I,J)-coprime", ijc, &eq, L::IJCoprime, i, Some(j))?;
        let t = m.quotient(&m.scalar_submodule(j)?)?;
        let et = Eval::new(&t);
        ck.local_implies("M I-coprime ⇒ M/JM I-coprime", icp, &et, L::ICoprime, i, None)?;
        ck.local_implies("M (I,J)-coprime ⇒ M/JM (I,J)-coprime", ijc, &et, L::IJCoprime, i, Some(j))?;
        Ok(())
    })
}

/// Primes worth localizing at: those of the modulus in a quotient context;
/// otherwise those of the torsion exponent and of the given elements, plus
/// one prime avoiding all of them.
pub(crate) fn localization_primes(m: &PresentedModule, extra: &[&Element]) -> Vec<Element> {
    let ctx = m.context();
    let ring = ctx.base();
    if let Some(n) = ctx.modulus() {
        return ring.factor(n).into_iter().map(|(p, _)| p).collect();
    }
    let mut acc = ring.one();
    for e in std::iter::once(&m.torsion_exponent()).chain(extra.iter().copied()) {
        if !e.is_zero() {
            acc = ring.lcm(&acc, e);
        }
    }
    let mut out: Vec<Element> = ring.factor(&acc).into_iter().map(|(p, _)| p).collect();
    out.push(ring.smallest_prime_coprime_to(&acc));
    out
}

fn closure_loc(case: &Case, ck: &mut Checker) -> Result<()> {
    let m = &case.module;
    let e = Eval::new(m);
    for p in localization_primes(m, &[]) {
        for kind in [G::Prime, G::WeaklyPrime, G::Coprime, G::WeaklyCoprime] {
            if e.global(kind)? {
                let v = global_predicate_on_localization(m, kind, &p)?;
                if !v.holds {
                    ck.fail(&format!("M {kind} ⇒ M_p {kind} at p = {p}"), "holds", v.to_string(), None);
                }
            }
        }
    }
    each_pair(case, ck, |ck, i, j| {
        for p in localization_primes(m, &[i.generator(), j.generator()]) {
            for kind in [L::IPrime, L::IJPrime, L::ICoprime, L::IJCoprime] {
                let jj = kind.needs_two_ideals().then_some(j);
                if e.local(kind, i, jj)? {
                    let v = predicate_on_localization(m, kind, i, jj, &p)?;
                    if !v.holds {
                        ck.fail(
                            &format!("M {kind} ⇒ M_p {kind} at p = {p}"),
                            "holds",
                            v.to_string(),
                            v.witness.map(|w| w.to_string()),
                        );
                    }
                }
            }
        }
        Ok(())
    })
}

fn functor_images(case: &Case, ck: &mut Checker) -> Result<()> {
    let m = &case.module;
    let e = Eval::new(m);
    each_pair(case, ck, |ck, i, _| {
        let g = gamma(m, i)?;
        let gm = g.as_module();
        let eg = Eval::new(&gm);
        ck.local_implies("M I-prime ⇒ Γ_I(M) I-coprime", e.local(L::IPrime, i, None)?, &eg, L::ICoprime, i, None)?;
        if e.local(L::IReduced, i, None)? {
            let ann = m.annihilator_of(i)?;
            ck.require("M I-reduced ⇒ Γ_I(M) = (0:_M I)", g.same_as(&ann), "equal", || {
                format!("Γ_I(M) = {g}, (0:_M I) = {ann}")
            });
            let ig = g.scaled(i);
            ck.require("M I-reduced ⇒ IΓ_I(M) = 0", ig.is_zero(), "0", || ig.to_string());
        }
        let icp = e.local(L::ICoprime, i, None)?;
        let icr = e.local(L::ICoreduced, i, None)?;
        match lambda(m, i)? {
            Ok(l) => {
                let el = Eval::new(&l);
                ck.local_implies("M I-coprime ⇒ Λ_I(M) I-prime", icp, &el, L::IPrime, i, None)?;
                if icr {
                    let mi = tensor_with_quotient(m, i)?;
                    ck.require("M I-coreduced ⇒ Λ_I(M) ≅ M/IM", l.is_isomorphic(&mi)?, "isomorphic", || {
                        format!("Λ_I(M) = {}, M/IM = {}", l.invariant_factors(), mi.invariant_factors())
                    });
                    let il = l.scalar_submodule(i)?;
                    ck.require("M I-coreduced ⇒ IΛ_I(M) = 0", il.is_zero(), "0", || il.to_string());
                }
            }
            Err(nr) => {
                ck.require("Λ_I(M) representable for I-coprime M", !icp, "representable", || nr.to_string());
                ck.require("Λ_I(M) representable for I-coreduced M", !icr, "representable", || nr.to_string());
            }
        }
        Ok(())
    })
}

fn annihilator_prime(case: &Case, ck: &mut Checker) -> Result<()> {
    ck.out.pairs_run += 1;
    let q = quotient_by_sub(case)?;
    for (name, m) in [("M", &case.module), ("M/S", &q)] {
        let a = m.annihilator_ideal();
        let v = local_predicate(m, L::IPrime, &a, None)?;
        ck.require(&format!("{name} is (0:_R {name})-prime"), v.holds, "holds", || {
            format!("{v} at (0:_R {name}) = {a}")
        });
    }
    Ok(())
}

fn prime_torsion(case: &Case, ck: &mut Checker) -> Result<()> {
    let m = &case.module;
    let e = Eval::new(m);
    let ctx = m.context();
    for (name, i) in [("0", Ideal::zero(ctx)), ("R", Ideal::unit(ctx))] {
        if !e.local(L::IPrime, &i, None)? {
            let v = local_predicate(m, L::IPrime, &i, None)?;
            ck.fail(&format!("M is {name}-prime"), "holds", v.to_string(), v.witness.map(|w| w.to_string()));
        }
    }
    each_pair(case, ck, |ck, i, _| {
        let hyp = e.local(L::IPrime, i, None)? && !e.eng.annihilator(i)?.is_zero();
        ck.local_implies("I-prime and (0:_M I) ≠ 0 ⇒ I-torsion", hyp, &e, L::ITorsion, i, None)
    })
}

fn trivial_action(m: &PresentedModule, r: &Element) -> Result<bool> {
    let rm = m.scalar_submodule(&Ideal::principal(m.context(), r)?)?;
    Ok(rm.is_zero() || rm.is_whole())
}

fn global_cpm(case: &Case, ck: &mut Checker, bound: usize) -> Result<()> {
    ck.out.pairs_run += 1;
    let m = &case.module;
    let ctx = m.context();
    let ring = ctx.base();
    let coprime = Eval::new(m).global(G::Coprime)?;
    let finite = FiniteModule::build(m, bound).ok();
    let (scalars, complete) = if ctx.is_quotient() {
        (ctx.ring_elements()?, true)
    } else if let Some(fm) = &finite {
        (oracle::ring_elements_for(fm), true)
    } else {
        let mut s: Vec<Element> = crate::primality::quantifier_range(m).iter().map(|i| i.generator().clone()).collect();
        let extra: Vec<Element> = s.iter().map(|a| ring.mul(a, &ring.from_int(2))).collect();
        s.extend(extra);
        (s, false)
    };
    let mut first_bad = None;
    for r in &scalars {
        if !trivial_action(m, r)? {
            first_bad = Some(r.clone());
            break;
        }
    }
    if coprime {
        if let Some(r) = &first_bad {
            ck.fail(
                "IM ∈ {0, M} for all I ⇒ rM ∈ {0, M} for all r",
                "rM ∈ {0, M}",
                format!("rM is proper and nonzero for r = {r}"),
                Some(r.to_string()),
            );
        }
    } else if complete && first_bad.is_none() {
        let v = global_predicate(m, G::Coprime)?;
        ck.fail(
            "rM ∈ {0, M} for all r ⇒ IM ∈ {0, M} for all I",
            "Coprime holds",
            v.to_string(),
            v.witness.map(|w| w.to_string()),
        );
    }
    if let Some(fm) = &finite {
        ck.out.oracle_checks += 1;
        let o = oracle::global_verdict(fm, G::Coprime);
        ck.require("Coprime agrees with the element-wise oracle", o == coprime, &format!("{o}"), || {
            format!("{coprime}")
        });
    }
    Ok(())
}

fn gm_adjunction(case: &Case, ck: &mut Checker) -> Result<()> {
    let m = &case.module;
    let n = case.other.as_ref().ok_or_else(|| Error::Parse("gm_adjunction needs a second module".into()))?;
    let em = Eval::new(m);
    let en = Eval::new(n);
    for (k, (i, _)) in case.pairs.iter().enumerate() {
        ck.pair = k;
        if !(em.local(L::ICoprime, i, None)? && en.local(L::IPrime, i, None)?) {
            ck.out.pairs_skipped += 1;
            continue;
        }
        ck.out.pairs_run += 1;
        let l = match lambda(m, i)? {
            Ok(l) => l,
            Err(nr) => {
                ck.fail("Λ_I(M) representable", "a module", nr.to_string(), None);
                continue;
            }
        };
        let gn = gamma(n, i)?.as_module();
        let left = hom_module(&l, n)?;
        let right = hom_module(m, &gn)?;
        ck.require("Hom(Λ_I M, N) ≅ Hom(M, Γ_I N)", left.is_isomorphic(&right)?, "isomorphic", || {
            format!("{} vs {}", left.invariant_factors(), right.invariant_factors())
        });
        let ql = Query::Hom { source: l.clone(), target: n.clone() };
        let qr = Query::Hom { source: m.clone(), target: gn.clone() };
        let bound = oracle::HOM_TENSOR_BOUND;
        if let (Ok(a), Ok(b)) = (oracle::evaluate(&ql, bound), oracle::evaluate(&qr, bound)) {
            ck.out.oracle_checks += 1;
            ck.require("oracle: Hom(Λ_I M, N) and Hom(M, Γ_I N) have equal shapes", a == b, "equal", || {
                format!("{a:?} vs {b:?}")
            });
        }
    }
    ck.pair = 0;
    Ok(())
}

fn mgm_equivalence(case: &Case, ck: &mut Checker) -> Result<()> {
    let m = &case.module;
    let e = Eval::new(m);
    each_pair(case, ck, |ck, i, _| {
        let tors = e.local(L::ITorsion, i, None)?;
        let comp = e.local(L::IComplete, i, None)?;
        let v = [
            e.local(L::IPrime, i, None)? && tors,
            e.local(L::ICoprime, i, None)? && comp,
            e.local(L::IReduced, i, None)? && tors,
            e.local(L::ICoreduced, i, None)? && comp,
            e.eng.scaled(i)?.is_zero(),
        ];
        ck.require("the five torsion/completion statements agree", v.iter().all(|&x| x == v[4]), "all equal", || {
            format!(
                "I-prime∧I-torsion={}, I-coprime∧I-complete={}, I-reduced∧I-torsion={}, I-coreduced∧I-complete={}, IM=0: {}",
                v[0], v[1], v[2], v[3], v[4]
            )
        });
        Ok(())
    })
}

fn hom_transfer_fwd(case: &Case, ck: &mut Checker) -> Result<()> {
    let m = &case.module;
    let n = case.other.as_ref().ok_or_else(|| Error::Parse("hom_transfer_fwd needs a second module".into()))?;
    let h = hom_module(m, n)?;
    let em = Eval::new(m);
    let eh = Eval::new(&h);
    ck.global_implies("M coprime ⇒ Hom(M,N) prime", em.global(G::Coprime)?, &eh, G::Prime)?;
    each_pair(case, ck, |ck, i, j| {
        let hyp = em.local(L::IJCoprime, i, Some(j))?;
        ck.local_implies("M (I,J)-coprime ⇒ Hom(M,N) (I,J)-prime", hyp, &eh, L::IJPrime, i, Some(j))
    })
}

fn hom_transfer_inj(case: &Case, ck: &mut Checker) -> Result<()> {
    let m = &case.module;
    let ctx = m.context();
    if !ctx.is_quotient() {
        return Err(Error::QuotientContextUnsupported);
    }
    let r = PresentedModule::ring_module(ctx);
    let h = hom_module(m, &r)?;
    let (em, eh, er) = (Eval::new(m), Eval::new(&h), Eval::new(&r));
    let n = ctx.modulus().expect("quotient");
    let inv = m.invariant_factors();
    let m_free = !inv.torsion_factors.is_empty() && inv.torsion_factors.iter().all(|d| d == n);

    ck.global_implies("M prime ⇒ Hom(M,R) coprime", em.global(G::Prime)?, &eh, G::Coprime)?;
    ck.global_implies("Hom(M,R) prime ⇒ M coprime", eh.global(G::Prime)?, &em, G::Coprime)?;
    ck.global_implies("R reduced ⇒ R coreduced", er.global(G::Reduced)?, &er, G::Coreduced)?;
    ck.global_implies("R weakly prime ⇒ R weakly coprime", er.global(G::WeaklyPrime)?, &er, G::WeaklyCoprime)?;
    ck.global_implies("R coreduced ⇒ R reduced", er.global(G::Coreduced)?, &er, G::Reduced)?;
    ck.global_implies("R weakly coprime ⇒ R weakly prime", er.global(G::WeaklyCoprime)?, &er, G::WeaklyPrime)?;
    if m_free {
        ck.global_implies("free M coreduced ⇒ M reduced", em.global(G::Coreduced)?, &em, G::Reduced)?;
        ck.global_implies("free M weakly coprime ⇒ M weakly prime", em.global(G::WeaklyCoprime)?, &em, G::WeaklyPrime)?;
    }
    each_pair(case, ck, |ck, i, j| {
        let (ji, jj) = (i, Some(j));
        ck.local_implies(
            "M (I,J)-prime ⇒ Hom(M,R) (I,J)-coprime",
            em.local(L::IJPrime, ji, jj)?,
            &eh,
            L::IJCoprime,
            ji,
            jj,
        )?;
        ck.local_implies(
            "Hom(M,R) (I,J)-prime ⇒ M (I,J)-coprime",
            eh.local(L::IJPrime, ji, jj)?,
            &em,
            L::IJCoprime,
            ji,
            jj,
        )?;
        ck.local_implies("R I-reduced ⇒ R I-coreduced", er.local(L::IReduced, i, None)?, &er, L::ICoreduced, i, None)?;
        ck.local_implies("R (I,J)-prime ⇒ R (I,J)-coprime", er.local(L::IJPrime, ji, jj)?, &er, L::IJCoprime, ji, jj)?;
        ck.local_implies("R I-coreduced ⇒ R I-reduced", er.local(L::ICoreduced, i, None)?, &er, L::IReduced, i, None)?;
        ck.local_implies("R (I,J)-coprime ⇒ R (I,J)-prime", er.local(L::IJCoprime, ji, jj)?, &er, L::IJPrime, ji, jj)?;
        if m_free {
            ck.local_implies(
                "free M I-coreduced ⇒ M I-reduced",
                em.local(L::ICoreduced, i, None)?,
                &em,
                L::IReduced,
                i,
                None,
            )?;
            ck.local_implies(
                "free M (I,J)-coprime ⇒ M (I,J)-prime",
                em.local(L::IJCoprime, ji, jj)?,
                &em,
                L::IJPrime,
                ji,
                jj,
            )?;
        }
        Ok(())
    })
}

fn set_of(fm: &FiniteModule, idx: &HashSet<usize>, v: &[Element]) -> bool {
    idx.contains(&fm.index_of(v))
}

/// Check a failure witness against the definition, by brute force.
fn witness_valid(fm: &FiniteModule, kind: LocalKind, a: &Element, b: Option<&Element>, w: &Witness) -> bool {
    let ring = fm.module().ring();
    let times = |r: &Element, v: &[Element]| fm.index_of(&fm.module().scale(r, v));
    let nonzero = |v: &[Element]| fm.index_of(v) != fm.zero();
    let am = oracle::scalar_multiples(fm, a);
    match (kind, w) {
        (L::IPrime, Witness::Element(m)) => nonzero(m) && times(a, m) == fm.zero() && am.len() > 1,
        (L::IJPrime, Witness::Element(m)) => {
            let b = b.expect("pair kind");
            times(&ring.mul(a, b), m) == fm.zero() && times(a, m) != fm.zero() && times(b, m) != fm.zero()
        }
        (L::IReduced, Witness::Element(m)) => times(&ring.mul(a, a), m) == fm.zero() && times(a, m) != fm.zero(),
        (L::ICoprime, Witness::ElementPair(x, y)) => nonzero(x) && set_of(fm, &am, x) && !set_of(fm, &am, y),
        (L::IJCoprime, Witness::ElementPair(x, y)) => {
            let b = b.expect("pair kind");
            let abm = oracle::scalar_multiples(fm, &ring.mul(a, b));
            let bm = oracle::scalar_multiples(fm, b);
            set_of(fm, &am, x) && !set_of(fm, &abm, x) && set_of(fm, &bm, y) && !set_of(fm, &abm, y)
        }
        (L::ICoreduced, Witness::Element(x)) => {
            set_of(fm, &am, x) && !set_of(fm, &oracle::scalar_multiples(fm, &ring.mul(a, a)), x)
        }
        (L::ITorsion, Witness::Element(m)) => !set_of(fm, &oracle::torsion(fm, a), m),
        (L::IComplete, Witness::Element(x)) => {
            let k = fm.len().max(1) as u32;
            nonzero(x) && set_of(fm, &oracle::scalar_multiples(fm, &ring.pow(a, k)), x)
        }
        _ => false,
    }
}

fn characterization_xcheck(case: &Case, ck: &mut Checker, bound: usize) -> Result<()> {
    let m = &case.module;
    let ctx = m.context();
    let fm = match FiniteModule::build(m, bound) {
        Ok(fm) => fm,
        Err(Error::SizeBoundExceeded { .. }) | Err(Error::InfiniteModule) => {
            ck.out.pairs_skipped += case.pairs.len();
            return Ok(());
        }
        Err(e) => return Err(e),
    };
    let e = Eval::new(m);
    for kind in GlobalKind::ALL {
        let fast = e.global(kind)?;
        let slow = oracle::global_verdict(&fm, kind);
        ck.out.oracle_checks += 1;
        ck.require(&format!("{kind}: fast path equals oracle"), fast == slow, &format!("{slow}"), || format!("{fast}"));
    }
    each_pair(case, ck, |ck, i, j| {
        let a = i.generator();
        let b = j.generator();
        for kind in LocalKind::ALL {
            let jj = kind.needs_two_ideals().then_some(j);
            let v = local_predicate(m, kind, i, jj)?;
            let slow = oracle::local_verdict(&fm, kind, a, jj.map(|_| b));
            ck.out.oracle_checks += 1;
            ck.require(&format!("{kind}: fast path equals oracle"), v.holds == slow, &format!("{slow}"), || {
                v.to_string()
            });
            if !v.holds {
                match &v.witness {
                    Some(w) => ck.require(
                        &format!("{kind}: witness is valid"),
                        witness_valid(&fm, kind, a, jj.map(|_| b), w),
                        "valid witness",
                        || w.to_string(),
                    ),
                    None => ck.fail(&format!("{kind}: failing verdict carries a witness"), "a witness", "none", None),
                }
            }
        }

        let ip = e.local(L::IPrime, i, None)?;
        let hq = hom_module(&ring_mod(ctx, i)?, m)?;
        let c4 = hq.is_zero_module() || hq.is_isomorphic(m)?;
        ck.require("I-prime ⇔ Hom(R/I,M) ≅ 0 or ≅ M", ip == c4, &format!("{ip}"), || format!("{c4}"));

        let ijp = e.local(L::IJPrime, i, Some(j))?;
        let h_ij = hom_from_quotient(m, &i.product(j)?)?;
        let c3 = h_ij.same_as(&hom_from_quotient(m, i)?) || h_ij.same_as(&hom_from_quotient(m, j)?);
        ck.require("(I,J)-prime ⇔ Hom(R/IJ,M) equals Hom(R/I,M) or Hom(R/J,M)", ijp == c3, &format!("{ijp}"), || {
            format!("{c3}")
        });

        let ir = e.local(L::IReduced, i, None)?;
        let g = gamma(m, i)?;
        let ann = hom_from_quotient(m, i)?;
        let r3 = ann.same_as(&hom_from_quotient(m, &i.power(2))?);
        let r4 = g.same_as(&ann);
        let r5 = g.scaled(i).is_zero();
        ck.require("I-reduced ⇔ Hom(R/I,M) = Hom(R/I²,M)", ir == r3, &format!("{ir}"), || format!("{r3}"));
        ck.require("I-reduced ⇔ Γ_I(M) = Hom(R/I,M)", ir == r4, &format!("{ir}"), || format!("{r4}"));
        ck.require("I-reduced ⇔ IΓ_I(M) = 0", ir == r5, &format!("{ir}"), || format!("{r5}"));

        let icr = e.local(L::ICoreduced, i, None)?;
        let t1 = tensor_with_quotient(m, i)?;
        let t2 = tensor_with_quotient(m, &i.power(2))?;
        let k3 = t1.is_isomorphic(&t2)?;
        ck.require("I-coreduced ⇔ R/I⊗M ≅ R/I²⊗M", icr == k3, &format!("{icr}"), || format!("{k3}"));
        if let Ok(l) = lambda(m, i)? {
            let k4 = l.is_isomorphic(&t1)?;
            let k5 = l.scalar_submodule(i)?.is_zero();
            ck.require("I-coreduced ⇔ Λ_I(M) ≅ R/I⊗M", icr == k4, &format!("{icr}"), || format!("{k4}"));
            ck.require("I-coreduced ⇔ IΛ_I(M) = 0", icr == k5, &format!("{icr}"), || format!("{k5}"));
        }
        Ok(())
    })
}

fn oracle_equivalence(case: &Case, ck: &mut Checker, bound: usize) -> Result<()> {
    let m = &case.module;
    if let Some(n) = &case.other {
        for (name, q) in [
            ("Hom(M,N)", Query::Hom { source: m.clone(), target: n.clone() }),
            ("Hom(N,M)", Query::Hom { source: n.clone(), target: m.clone() }),
            ("M⊗N", Query::Tensor { left: m.clone(), right: n.clone() }),
        ] {
            ck.agree(name, &q, bound)?;
        }
    }
    for kind in GlobalKind::ALL {
        ck.agree(kind.name(), &Query::GlobalPredicate { module: m.clone(), kind }, bound)?;
    }
    each_pair(case, ck, |ck, i, j| {
        let module = m.clone();
        ck.agree("(0:_M I)", &Query::Annihilator { module: module.clone(), ideal: i.clone() }, bound)?;
        ck.agree("IM", &Query::ScalarSubmodule { module: module.clone(), ideal: i.clone() }, bound)?;
        ck.agree("Γ_I(M)", &Query::Gamma { module: module.clone(), ideal: i.clone() }, bound)?;
        ck.agree("Λ_I(M)", &Query::Lambda { module: module.clone(), ideal: i.clone() }, bound)?;
        for kind in LocalKind::ALL {
            let jj = kind.needs_two_ideals().then(|| j.clone());
            let q = Query::LocalPredicate { module: module.clone(), kind, i: i.clone(), j: jj };
            ck.agree(kind.name(), &q, bound)?;
        }
        Ok(())
    })
}
