//! Local and global primeness, coprimeness and reducedness.
//!
//! Local predicates are decided through submodule comparisons:
//!
//! | kind | holds iff |
//! |------|-----------|
//! | `IPrime` | `(0:_M I)` is `0` or `M` |
//! | `IJPrime` | `(0:_M IJ)` equals `(0:_M I)` or `(0:_M J)` |
//! | `IReduced` | `(0:_M I) = (0:_M I^2)` |
//! | `ICoprime` | `IM` is `0` or `M` |
//! | `IJCoprime` | `IJM` equals `IM` or `JM` |
//! | `ICoreduced` | `IM = I^2 M` |
//! | `ITorsion` | `Γ_I(M) = M` |
//! | `IComplete` | `Λ_I(M) ≅ M` |
//!
//! Global predicates quantify the local ones over every ideal of a quotient
//! context, or over [`RingContext::reduction_set`] of the torsion exponent
//! over a base domain.

use std::cell::{OnceCell, RefCell};
use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::fpmodule::{PresentedModule, Submodule};
use crate::functors::{gamma, lambda, localize, localize_ideal, stable_power_submodule, LocalIdeal};
use crate::ring::{Element, Ideal, RingContext};

/// Largest module whose elements are scanned for a canonical-first witness.
const WITNESS_SEARCH_BOUND: usize = 1024;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LocalKind {
    IPrime,
    IJPrime,
    IReduced,
    ICoprime,
    IJCoprime,
    ICoreduced,
    ITorsion,
    IComplete,
}

impl LocalKind {
    pub const ALL: [LocalKind; 8] = [
        LocalKind::IPrime,
        LocalKind::IJPrime,
        LocalKind::IReduced,
        LocalKind::ICoprime,
        LocalKind::IJCoprime,
        LocalKind::ICoreduced,
        LocalKind::ITorsion,
        LocalKind::IComplete,
    ];

    pub fn needs_two_ideals(self) -> bool {
        matches!(self, LocalKind::IJPrime | LocalKind::IJCoprime)
    }

    pub fn name(self) -> &'static str {
        match self {
            LocalKind::IPrime => "IPrime",
            LocalKind::IJPrime => "IJPrime",
            LocalKind::IReduced => "IReduced",
            LocalKind::ICoprime => "ICoprime",
            LocalKind::IJCoprime => "IJCoprime",
            LocalKind::ICoreduced => "ICoreduced",
            LocalKind::ITorsion => "ITorsion",
            LocalKind::IComplete => "IComplete",
        }
    }
}

impl fmt::Display for LocalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GlobalKind {
    Prime,
    WeaklyPrime,
    Reduced,
    Coprime,
    WeaklyCoprime,
    Coreduced,
}

impl GlobalKind {
    pub const ALL: [GlobalKind; 6] = [
        GlobalKind::Prime,
        GlobalKind::WeaklyPrime,
        GlobalKind::Reduced,
        GlobalKind::Coprime,
        GlobalKind::WeaklyCoprime,
        GlobalKind::Coreduced,
    ];

    /// The local predicate quantified over all ideals (or pairs).
    pub fn local(self) -> LocalKind {
        match self {
            GlobalKind::Prime => LocalKind::IPrime,
            GlobalKind::WeaklyPrime => LocalKind::IJPrime,
            GlobalKind::Reduced => LocalKind::IReduced,
            GlobalKind::Coprime => LocalKind::ICoprime,
            GlobalKind::WeaklyCoprime => LocalKind::IJCoprime,
            GlobalKind::Coreduced => LocalKind::ICoreduced,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            GlobalKind::Prime => "Prime",
            GlobalKind::WeaklyPrime => "WeaklyPrime",
            GlobalKind::Reduced => "Reduced",
            GlobalKind::Coprime => "Coprime",
            GlobalKind::WeaklyCoprime => "WeaklyCoprime",
            GlobalKind::Coreduced => "Coreduced",
        }
    }
}

impl fmt::Display for GlobalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Evidence that a predicate fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Element(Vec<Element>),
    ElementPair(Vec<Element>, Vec<Element>),
    Ideal(Ideal),
    IdealPair(Ideal, Ideal),
}

fn fmt_vector(v: &[Element]) -> String {
    if v.len() == 1 {
        return v[0].to_string();
    }
    let parts: Vec<String> = v.iter().map(|e| e.to_string()).collect();
    format!("({})", parts.join(", "))
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Element(v) => write!(f, "{}", fmt_vector(v)),
            Witness::ElementPair(a, b) => write!(f, "{} and {}", fmt_vector(a), fmt_vector(b)),
            Witness::Ideal(i) => write!(f, "{i}"),
            Witness::IdealPair(i, j) => write!(f, "{i}, {j}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Witness>,
    pub evidence: Option<String>,
}

impl Verdict {
    fn pass(evidence: impl Into<String>) -> Self {
        Verdict { holds: true, witness: None, evidence: Some(evidence.into()) }
    }

    fn fail(witness: Option<Witness>, evidence: impl Into<String>) -> Self {
        Verdict { holds: false, witness, evidence: Some(evidence.into()) }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.holds { "holds" } else { "fails" })?;
        if let Some(w) = &self.witness {
            write!(f, " (witness {w})")?;
        }
        if let Some(e) = &self.evidence {
            write!(f, " [{e}]")?;
        }
        Ok(())
    }
}

fn check_ideals(m: &PresentedModule, kind: LocalKind, i: &Ideal, j: Option<&Ideal>) -> Result<()> {
    if i.context() != m.context() || j.is_some_and(|j| j.context() != m.context()) {
        return Err(Error::ContextMismatch);
    }
    match (kind.needs_two_ideals(), j.is_some()) {
        (true, false) => Err(Error::MissingSecondIdeal(kind.name())),
        (false, true) => Err(Error::UnexpectedSecondIdeal(kind.name())),
        _ => Ok(()),
    }
}

/// Evaluates predicates on one module, memoizing the annihilator and
/// scalar submodules of each ideal.
///
/// Campaigns that only need the boolean outcome switch witness search off
/// with [`PredicateEngine::without_witnesses`].
pub struct PredicateEngine<'a> {
    m: &'a PresentedModule,
    witnesses: bool,
    ann: RefCell<HashMap<Ideal, Submodule>>,
    scaled: RefCell<HashMap<Ideal, Submodule>>,
    elements: OnceCell<Option<Vec<Vec<Element>>>>,
}

impl<'a> PredicateEngine<'a> {
    pub fn new(m: &'a PresentedModule) -> Self {
        PredicateEngine {
            m,
            witnesses: true,
            ann: RefCell::new(HashMap::new()),
            scaled: RefCell::new(HashMap::new()),
            elements: OnceCell::new(),
        }
    }

    pub fn without_witnesses(mut self) -> Self {
        self.witnesses = false;
        self
    }

    pub fn module(&self) -> &PresentedModule {
        self.m
    }

    /// `(0 :_M I)`.
    pub fn annihilator(&self, i: &Ideal) -> Result<Submodule> {
        if let Some(s) = self.ann.borrow().get(i) {
            return Ok(s.clone());
        }
        let s = self.m.annihilator_of(i)?;
        self.ann.borrow_mut().insert(i.clone(), s.clone());
        Ok(s)
    }

    /// `IM`.
    pub fn scaled(&self, i: &Ideal) -> Result<Submodule> {
        if let Some(s) = self.scaled.borrow().get(i) {
            return Ok(s.clone());
        }
        let s = self.m.scalar_submodule(i)?;
        self.scaled.borrow_mut().insert(i.clone(), s.clone());
        Ok(s)
    }

    fn elements(&self) -> Option<&Vec<Vec<Element>>> {
        self.elements.get_or_init(|| self.m.enumerate_elements(WITNESS_SEARCH_BOUND).ok()).as_ref()
    }

    /// First element (canonical order) of `a` outside `b`, falling back to
    /// a generator of `a` when `M` is too large or infinite.
    fn difference(&self, a: &Submodule, b: &Submodule) -> Option<Vec<Element>> {
        if !self.witnesses {
            return None;
        }
        if let Some(elements) = self.elements() {
            return elements.iter().find(|v| a.contains(v) && !b.contains(v)).cloned();
        }
        a.generators().iter().find(|v| !b.contains(v)).cloned()
    }

    /// Element of `c` lying in neither `a` nor `b`, given `a, b ⊊ c`.
    fn outside_both(&self, c: &Submodule, a: &Submodule, b: &Submodule) -> Option<Vec<Element>> {
        if !self.witnesses {
            return None;
        }
        if let Some(elements) = self.elements() {
            return elements.iter().find(|v| c.contains(v) && !a.contains(v) && !b.contains(v)).cloned();
        }
        let g1 = c.generators().iter().find(|v| !a.contains(v))?;
        if !b.contains(g1) {
            return Some(g1.clone());
        }
        let g2 = c.generators().iter().find(|v| !b.contains(v))?;
        if !a.contains(g2) {
            return Some(g2.clone());
        }
        Some(self.m.add(g1, g2))
    }

    /// Decide a local predicate at `I` (and `J` for the pair kinds).
    pub fn local(&self, kind: LocalKind, i: &Ideal, j: Option<&Ideal>) -> Result<Verdict> {
        let m = self.m;
        check_ideals(m, kind, i, j)?;
        let zero = m.zero_submodule();
        Ok(match kind {
            LocalKind::IPrime => {
                let ann = self.annihilator(i)?;
                if ann.is_zero() {
                    Verdict::pass("(0:_M I) = 0")
                } else if ann.is_whole() {
                    Verdict::pass("(0:_M I) = M")
                } else {
                    let w = self.difference(&ann, &zero).map(Witness::Element);
                    Verdict::fail(w, "(0:_M I) is neither 0 nor M")
                }
            }
            LocalKind::IJPrime => {
                let j = j.expect("checked");
                let ann_i = self.annihilator(i)?;
                let ann_j = self.annihilator(j)?;
                let ann_ij = self.annihilator(&i.product(j)?)?;
                if ann_ij.same_as(&ann_i) {
                    Verdict::pass("(0:_M IJ) = (0:_M I)")
                } else if ann_ij.same_as(&ann_j) {
                    Verdict::pass("(0:_M IJ) = (0:_M J)")
                } else {
                    let w = self.outside_both(&ann_ij, &ann_i, &ann_j).map(Witness::Element);
                    Verdict::fail(w, "(0:_M IJ) differs from both (0:_M I) and (0:_M J)")
                }
            }
            LocalKind::IReduced => {
                let ann = self.annihilator(i)?;
                let ann2 = self.annihilator(&i.power(2))?;
                if ann.same_as(&ann2) {
                    Verdict::pass("(0:_M I) = (0:_M I^2)")
                } else {
                    let w = self.difference(&ann2, &ann).map(Witness::Element);
                    Verdict::fail(w, "(0:_M I) is strictly smaller than (0:_M I^2)")
                }
            }
            LocalKind::ICoprime => {
                let im = self.scaled(i)?;
                if im.is_zero() {
                    Verdict::pass("IM = 0")
                } else if im.is_whole() {
                    Verdict::pass("IM = M")
                } else {
                    let inside = self.difference(&im, &zero);
                    let outside = self.difference(&m.whole(), &im);
                    let w = inside.zip(outside).map(|(a, b)| Witness::ElementPair(a, b));
                    Verdict::fail(w, "IM is neither 0 nor M")
                }
            }
            LocalKind::IJCoprime => {
                let j = j.expect("checked");
                let im = self.scaled(i)?;
                let jm = self.scaled(j)?;
                let ijm = self.scaled(&i.product(j)?)?;
                if ijm.same_as(&im) {
                    Verdict::pass("IJM = IM")
                } else if ijm.same_as(&jm) {
                    Verdict::pass("IJM = JM")
                } else {
                    let a = self.difference(&im, &ijm);
                    let b = self.difference(&jm, &ijm);
                    let w = a.zip(b).map(|(a, b)| Witness::ElementPair(a, b));
                    Verdict::fail(w, "IJM differs from both IM and JM")
                }
            }
            LocalKind::ICoreduced => {
                let im = self.scaled(i)?;
                let i2m = self.scaled(&i.power(2))?;
                if im.same_as(&i2m) {
                    Verdict::pass("IM = I^2M")
                } else {
                    let w = self.difference(&im, &i2m).map(Witness::Element);
                    Verdict::fail(w, "I^2M is strictly smaller than IM")
                }
            }
            LocalKind::ITorsion => {
                let g = gamma(m, i)?;
                if g.is_whole() {
                    Verdict::pass("Γ_I(M) = M")
                } else {
                    let w = self.difference(&m.whole(), &g).map(Witness::Element);
                    Verdict::fail(w, "Γ_I(M) is a proper submodule")
                }
            }
            LocalKind::IComplete => match lambda(m, i)? {
                Err(nr) => Verdict::fail(None, nr.to_string()),
                Ok(l) => {
                    if l.is_isomorphic(m)? {
                        Verdict::pass("Λ_I(M) ≅ M")
                    } else {
                        let (_, stable) = stable_power_submodule(m, i)?;
                        let w = self.difference(&stable, &zero).map(Witness::Element);
                        Verdict::fail(w, "the stable term I^kM is nonzero")
                    }
                }
            },
        })
    }

    /// Decide a global predicate over [`quantifier_range`].
    pub fn global(&self, kind: GlobalKind) -> Result<Verdict> {
        let ideals = quantifier_range(self.m);
        self.quantify(kind, &ideals, &describe_range(self.m.context(), &ideals))
    }

    fn quantify(&self, kind: GlobalKind, ideals: &[Ideal], range: &str) -> Result<Verdict> {
        let local = kind.local();
        for (a, i) in ideals.iter().enumerate() {
            if local.needs_two_ideals() {
                for j in &ideals[a..] {
                    let v = self.local(local, i, Some(j))?;
                    if !v.holds {
                        let detail = inner_detail(&v);
                        return Ok(Verdict::fail(
                            Some(Witness::IdealPair(i.clone(), j.clone())),
                            format!("{local} fails at I = {i}, J = {j}{detail}; quantified over {range}"),
                        ));
                    }
                }
            } else {
                let v = self.local(local, i, None)?;
                if !v.holds {
                    let detail = inner_detail(&v);
                    return Ok(Verdict::fail(
                        Some(Witness::Ideal(i.clone())),
                        format!("{local} fails at I = {i}{detail}; quantified over {range}"),
                    ));
                }
            }
        }
        Ok(Verdict::pass(format!("quantified over {range}")))
    }
}

/// Decide a local predicate for `M` at `I` (and `J` for the pair kinds).
pub fn local_predicate(m: &PresentedModule, kind: LocalKind, i: &Ideal, j: Option<&Ideal>) -> Result<Verdict> {
    let v = PredicateEngine::new(m).local(kind, i, j)?;
    debug_oracle_check(m, v.holds, |fm| crate::oracle::local_verdict(fm, kind, i.generator(), j.map(Ideal::generator)));
    Ok(v)
}

/// Modules up to this size are re-decided by enumeration in debug builds.
#[cfg(debug_assertions)]
const DEBUG_ORACLE_BOUND: usize = 16;

/// In debug builds, compare a fast verdict on a small finite module with
/// the element-enumerating definition.
#[cfg(debug_assertions)]
fn debug_oracle_check(m: &PresentedModule, fast: bool, oracle: impl FnOnce(&crate::oracle::FiniteModule) -> bool) {
    if let Ok(fm) = crate::oracle::FiniteModule::build(m, DEBUG_ORACLE_BOUND) {
        assert_eq!(oracle(&fm), fast, "fast path and oracle disagree on {m}");
    }
}

#[cfg(not(debug_assertions))]
fn debug_oracle_check(_: &PresentedModule, _: bool, _: impl FnOnce(&crate::oracle::FiniteModule) -> bool) {}

fn describe_range(ctx: &RingContext, ideals: &[Ideal]) -> String {
    let names: Vec<String> = ideals.iter().map(|i| i.to_string()).collect();
    if ctx.is_quotient() {
        format!("all ideals of {ctx}: {}", names.join(", "))
    } else {
        format!("reduction set {}", names.join(", "))
    }
}

/// The ideals a global predicate is quantified over for `M`.
pub fn quantifier_range(m: &PresentedModule) -> Vec<Ideal> {
    m.context().reduction_set(&m.torsion_exponent())
}

/// Decide a global predicate by quantifying the local one.
pub fn global_predicate(m: &PresentedModule, kind: GlobalKind) -> Result<Verdict> {
    let v = PredicateEngine::new(m).global(kind)?;
    debug_oracle_check(m, v.holds, |fm| crate::oracle::global_verdict(fm, kind));
    Ok(v)
}

fn inner_detail(v: &Verdict) -> String {
    match &v.witness {
        Some(w) => format!(" (element witness {w})"),
        None => String::new(),
    }
}

/// Decide a local predicate for `M_p` at `I_p` (and `J_p`).
pub fn predicate_on_localization(
    m: &PresentedModule,
    kind: LocalKind,
    i: &Ideal,
    j: Option<&Ideal>,
    p: &Element,
) -> Result<Verdict> {
    check_ideals(m, kind, i, j)?;
    let lm = localize(m, p)?;
    let ring = m.ring();
    let li = localize_ideal(i, p)?.model(ring, &lm.prime);
    let lj = j.map(|j| localize_ideal(j, p)).transpose()?.map(|l| l.model(ring, &lm.prime));
    let mut v = local_predicate(&lm.model(ring), kind, &li, lj.as_ref())?;
    v.evidence = Some(format!("{lm}: {}", v.evidence.unwrap_or_default()));
    Ok(v)
}

/// Decide a global predicate for `M_p` over the local ring, whose ideals
/// are `0`, `1` and the powers of `p`.
pub fn global_predicate_on_localization(m: &PresentedModule, kind: GlobalKind, p: &Element) -> Result<Verdict> {
    let lm = localize(m, p)?;
    let ring = m.ring();
    let top = lm.local_factors.last().copied().unwrap_or(0) + 1;
    let mut locals = vec![LocalIdeal::Zero, LocalIdeal::Unit];
    locals.extend((1..=top).map(LocalIdeal::Power));
    let ideals: Vec<Ideal> = locals.iter().map(|l| l.model(ring, &lm.prime)).collect();
    let range = format!("ideals of the local ring at ({})", lm.prime);
    let model = lm.model(ring);
    PredicateEngine::new(&model).quantify(kind, &ideals, &range)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zi(n: i64) -> Element {
        Element::int(n)
    }

    fn holds(m: &PresentedModule, kind: LocalKind, i: &Ideal, j: Option<&Ideal>) -> bool {
        local_predicate(m, kind, i, j).unwrap().holds
    }

    #[test]
    fn polynomial_example() {
        let f2 = RingContext::polynomials(2);
        let b = f2.base();
        let m = PresentedModule::cyclic(&f2, &b.poly(&[0, 0, 1])).unwrap();
        let i = Ideal::principal(&f2, &b.poly(&[0, 0, 1])).unwrap();
        let j = Ideal::principal(&f2, &b.poly(&[0, 1])).unwrap();
        assert!(holds(&m, LocalKind::IPrime, &i, None));
        assert!(holds(&m, LocalKind::IJPrime, &i, Some(&j)));
        assert!(!holds(&m, LocalKind::IPrime, &j, None));
        assert!(!global_predicate(&m, GlobalKind::Prime).unwrap().holds);
        assert!(!global_predicate(&m, GlobalKind::WeaklyPrime).unwrap().holds);
    }

    #[test]
    fn z6_over_itself() {
        let z6 = RingContext::integers_mod(6);
        let m = PresentedModule::ring_module(&z6);
        let i = Ideal::principal(&z6, &zi(3)).unwrap();
        assert!(holds(&m, LocalKind::IReduced, &i, None));
        let v = local_predicate(&m, LocalKind::IPrime, &i, None).unwrap();
        assert!(!v.holds);
        assert_eq!(v.witness, Some(Witness::Element(vec![zi(2)])));
        assert!(holds(&m, LocalKind::ICoreduced, &i, None));
        assert!(!holds(&m, LocalKind::ICoprime, &i, None));
        let g = global_predicate(&m, GlobalKind::Prime).unwrap();
        assert_eq!(g.witness, Some(Witness::Ideal(Ideal::principal(&z6, &zi(2)).unwrap())));
    }

    #[test]
    fn trivial_ideals_are_prime() {
        let z = RingContext::integers();
        let m = PresentedModule::from_factors(&z, &[zi(4), zi(0)]).unwrap();
        assert!(holds(&m, LocalKind::IPrime, &Ideal::zero(&z), None));
        assert!(holds(&m, LocalKind::IPrime, &Ideal::unit(&z), None));
    }

    #[test]
    fn coprime_examples_over_integers() {
        let z = RingContext::integers();
        let i = |n| Ideal::principal(&z, &zi(n)).unwrap();
        let z4 = PresentedModule::cyclic(&z, &zi(4)).unwrap();
        assert!(holds(&z4, LocalKind::IJCoprime, &i(4), Some(&i(3))));
        let wc = global_predicate(&z4, GlobalKind::WeaklyCoprime).unwrap();
        assert!(!wc.holds);
        let cr = global_predicate(&z4, GlobalKind::Coreduced).unwrap();
        assert_eq!(cr.witness, Some(Witness::Ideal(i(2))));
        let free = PresentedModule::free(&z, 1);
        assert!(holds(&free, LocalKind::IJCoprime, &i(2), Some(&i(1))));
        assert!(!holds(&free, LocalKind::ICoprime, &i(2), None));
        let z6 = PresentedModule::cyclic(&z, &zi(6)).unwrap();
        assert!(holds(&z6, LocalKind::ICoprime, &i(6), None));
        let c = global_predicate(&z6, GlobalKind::Coprime).unwrap();
        assert_eq!(c.witness, Some(Witness::Ideal(i(2))));
    }

    #[test]
    fn torsion_and_completion() {
        let z = RingContext::integers();
        let i3 = Ideal::principal(&z, &zi(3)).unwrap();
        let z6 = PresentedModule::cyclic(&z, &zi(6)).unwrap();
        let v = local_predicate(&z6, LocalKind::ITorsion, &i3, None).unwrap();
        assert!(!v.holds);
        assert_eq!(v.witness, Some(Witness::Element(vec![zi(1)])));
        let free = PresentedModule::free(&z, 1);
        let v = local_predicate(&free, LocalKind::IComplete, &i3, None).unwrap();
        assert!(!v.holds && v.evidence.unwrap().contains("not representable"));
    }

    #[test]
    fn global_examples() {
        let z5 = RingContext::integers_mod(5);
        assert!(global_predicate(&PresentedModule::ring_module(&z5), GlobalKind::Prime).unwrap().holds);
        let z = RingContext::integers();
        let v = global_predicate(&PresentedModule::free(&z, 1), GlobalKind::Prime).unwrap();
        assert!(v.holds);
        assert!(v.evidence.unwrap().contains("(0), (1), (2)"));
    }

    #[test]
    fn localization_examples() {
        let z = RingContext::integers();
        let m = PresentedModule::cyclic(&z, &zi(6)).unwrap();
        let i3 = Ideal::principal(&z, &zi(3)).unwrap();
        assert!(predicate_on_localization(&m, LocalKind::IPrime, &i3, None, &zi(3)).unwrap().holds);
        assert!(predicate_on_localization(&m, LocalKind::IPrime, &i3, None, &zi(2)).unwrap().holds);
        let zero = PresentedModule::zero(&z);
        for kind in LocalKind::ALL {
            let j = kind.needs_two_ideals().then_some(&i3);
            assert!(predicate_on_localization(&zero, kind, &i3, j, &zi(7)).unwrap().holds);
        }
    }

    #[test]
    fn ideal_arity_is_checked() {
        let z = RingContext::integers();
        let m = PresentedModule::free(&z, 1);
        let i = Ideal::unit(&z);
        assert_eq!(local_predicate(&m, LocalKind::IJPrime, &i, None), Err(Error::MissingSecondIdeal("IJPrime")));
        assert_eq!(local_predicate(&m, LocalKind::IPrime, &i, Some(&i)), Err(Error::UnexpectedSecondIdeal("IPrime")));
    }
}
