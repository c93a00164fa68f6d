//! Seeded generation of contexts, modules, ideals and submodule generators.
//!
//! Everything here is a pure function of the RNG stream, so replaying a
//! seed reproduces the same cases. Entries are skewed towards small and
//! sparse values: most interesting behaviour already shows up there, and it
//! keeps Smith forms cheap.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fpmodule::PresentedModule;
use crate::ring::{BaseRing, Element, Ideal, RingContext};

/// Size bounds for generated cases.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Profile {
    pub name: String,
    pub min_generators: usize,
    pub max_generators: usize,
    /// Bound on `|a|` for integer entries.
    pub max_entry: i64,
    /// Bound on the degree of polynomial entries.
    pub max_degree: usize,
    /// Largest `n` drawn for `Z/n`.
    pub max_modulus: i64,
    /// Largest degree of `f` drawn for `F_p[x]/(f)`.
    pub max_modulus_degree: usize,
    /// Largest finite module handed to the oracle.
    pub oracle_bound: usize,
    /// When set, integer entries are drawn from this list only.
    pub entry_choices: Option<Vec<i64>>,
    /// When set, campaigns first sweep every cyclic module over `Z/n` for
    /// `n` up to this bound, with every ideal pair.
    pub exhaustive_modulus: Option<i64>,
}

impl Profile {
    pub fn default_profile() -> Self {
        Profile {
            name: "default".into(),
            min_generators: 0,
            max_generators: 4,
            max_entry: 24,
            max_degree: 3,
            max_modulus: 60,
            max_modulus_degree: 3,
            oracle_bound: crate::oracle::DEFAULT_BOUND,
            entry_choices: None,
            exhaustive_modulus: None,
        }
    }

    pub fn small() -> Self {
        Profile {
            name: "small".into(),
            max_generators: 2,
            max_entry: 8,
            max_degree: 2,
            max_modulus: 24,
            max_modulus_degree: 2,
            oracle_bound: 32,
            ..Self::default_profile()
        }
    }

    pub fn exhaustive() -> Self {
        Profile { name: "exhaustive".into(), exhaustive_modulus: Some(60), ..Self::default_profile() }
    }

    pub fn named(name: &str) -> Result<Self> {
        match name {
            "default" => Ok(Self::default_profile()),
            "small" => Ok(Self::small()),
            "exhaustive" => Ok(Self::exhaustive()),
            _ => Err(Error::Parse(format!("unknown profile `{name}` (expected default, small or exhaustive)"))),
        }
    }
}

impl Default for Profile {
    fn default() -> Self {
        Self::default_profile()
    }
}

/// Where the ring of a case comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ContextFamily {
    Fixed(RingContext),
    /// `Z/n` with `n` drawn per case.
    IntegersMod,
    /// `F_p[x]/(f)` with monic `f` drawn per case.
    PolynomialsMod(u64),
}

impl ContextFamily {
    /// `Z`, `Z/12`, `Z/n`, `F2[x]`, `F2[x]/[1,1,1]` or `F2[x]/f`.
    pub fn parse(token: &str) -> Result<Self> {
        let token = token.trim();
        let bad = || Error::Parse(format!("unknown context `{token}`"));
        if token == "Z" {
            return Ok(ContextFamily::Fixed(RingContext::integers()));
        }
        if let Some(n) = token.strip_prefix("Z/") {
            if n == "n" {
                return Ok(ContextFamily::IntegersMod);
            }
            let n: i64 = n.parse().map_err(|_| bad())?;
            if n.abs() < 2 {
                return Err(Error::UnitOrZeroModulus);
            }
            return Ok(ContextFamily::Fixed(RingContext::integers_mod(n)));
        }
        let rest = token.strip_prefix('F').ok_or_else(bad)?;
        let (p, tail) = rest.split_once("[x]").ok_or_else(bad)?;
        let p: u64 = p.parse().map_err(|_| bad())?;
        let base = RingContext::make(crate::ring::BaseKind::PolynomialsOverPrimeField, Some(p), None)?;
        match tail {
            "" => Ok(ContextFamily::Fixed(base)),
            "/f" => Ok(ContextFamily::PolynomialsMod(p)),
            _ => {
                let list = tail.strip_prefix("/[").and_then(|t| t.strip_suffix(']')).ok_or_else(bad)?;
                let coeffs =
                    list.split(',').map(|c| c.trim().parse::<i64>().map_err(|_| bad())).collect::<Result<Vec<_>>>()?;
                let f = base.base().poly(&coeffs);
                Ok(ContextFamily::Fixed(RingContext::over(base.base(), Some(f))?))
            }
        }
    }

    pub fn parse_list(list: &str) -> Result<Vec<Self>> {
        list.split(';').flat_map(|s| s.split(' ')).filter(|s| !s.is_empty()).map(Self::parse).collect()
    }

    pub fn label(&self) -> String {
        match self {
            ContextFamily::Fixed(c) => c.to_string(),
            ContextFamily::IntegersMod => "Z/n".into(),
            ContextFamily::PolynomialsMod(p) => format!("F{p}[x]/f"),
        }
    }

    pub fn defaults() -> Vec<Self> {
        vec![
            ContextFamily::Fixed(RingContext::integers()),
            ContextFamily::IntegersMod,
            ContextFamily::Fixed(RingContext::polynomials(2)),
            ContextFamily::Fixed(RingContext::polynomials(3)),
            ContextFamily::PolynomialsMod(2),
            ContextFamily::PolynomialsMod(3),
        ]
    }

    pub fn sample(&self, rng: &mut ChaCha8Rng, profile: &Profile) -> RingContext {
        match self {
            ContextFamily::Fixed(c) => c.clone(),
            ContextFamily::IntegersMod => RingContext::integers_mod(rng.gen_range(2..=profile.max_modulus.max(2))),
            ContextFamily::PolynomialsMod(p) => {
                let base = RingContext::polynomials(*p).base();
                let deg = rng.gen_range(1..=profile.max_modulus_degree.max(1));
                let mut c: Vec<i64> = (0..deg).map(|_| rng.gen_range(0..*p as i64)).collect();
                c.push(1);
                RingContext::over(base, Some(base.poly(&c))).expect("monic of positive degree")
            }
        }
    }
}

/// A quotient context built over the base of `ctx`, used by laws that need
/// a self-injective ring.
pub fn quotient_over(rng: &mut ChaCha8Rng, ctx: &RingContext, profile: &Profile) -> RingContext {
    if ctx.is_quotient() {
        return ctx.clone();
    }
    match ctx.base() {
        BaseRing::Integers => ContextFamily::IntegersMod.sample(rng, profile),
        BaseRing::Polynomials { characteristic } => ContextFamily::PolynomialsMod(characteristic).sample(rng, profile),
    }
}

fn small_int(rng: &mut ChaCha8Rng, profile: &Profile) -> i64 {
    if let Some(choices) = &profile.entry_choices {
        return *choices.choose(rng).expect("nonempty entry choices");
    }
    let bound = if rng.gen_bool(0.7) { profile.max_entry.min(6) } else { profile.max_entry };
    rng.gen_range(-bound..=bound)
}

/// A random element of the base ring, reduced into `ctx`.
pub fn random_element(rng: &mut ChaCha8Rng, ctx: &RingContext, profile: &Profile) -> Element {
    let ring = ctx.base();
    let e = match ring {
        BaseRing::Integers => Element::int(small_int(rng, profile)),
        BaseRing::Polynomials { characteristic: p } => {
            let deg = rng.gen_range(0..=profile.max_degree);
            let c: Vec<i64> = (0..=deg).map(|_| rng.gen_range(0..p as i64)).collect();
            ring.poly(&c)
        }
    };
    ctx.reduce(&e)
}

fn nonzero_element(rng: &mut ChaCha8Rng, ctx: &RingContext, profile: &Profile) -> Element {
    for _ in 0..16 {
        let e = random_element(rng, ctx, profile);
        if !e.is_zero() {
            return e;
        }
    }
    ctx.base().one()
}

/// Random entry of a relation matrix: zero with probability 0.4.
fn sparse_entry(rng: &mut ChaCha8Rng, ctx: &RingContext, profile: &Profile) -> Element {
    if profile.entry_choices.is_none() && rng.gen_bool(0.4) {
        ctx.base().zero()
    } else {
        random_element(rng, ctx, profile)
    }
}

fn random_divisor(rng: &mut ChaCha8Rng, ring: BaseRing, a: &Element) -> Element {
    ring.divisors(a).choose(rng).cloned().expect("1 divides everything")
}

fn generator_count(rng: &mut ChaCha8Rng, profile: &Profile) -> usize {
    let lo = profile.min_generators.min(profile.max_generators);
    // Skew towards fewer generators.
    let a = rng.gen_range(lo..=profile.max_generators);
    let b = rng.gen_range(lo..=profile.max_generators);
    a.min(b).max(lo)
}

/// A random finitely presented module: a generator count, then either a
/// random relation matrix or a list of invariant factors, half and half.
pub fn generate_module(rng: &mut ChaCha8Rng, ctx: &RingContext, profile: &Profile) -> PresentedModule {
    let g = generator_count(rng, profile);
    if g == 0 {
        return PresentedModule::zero(ctx);
    }
    let ring = ctx.base();
    if rng.gen_bool(0.5) {
        let r = rng.gen_range(1..=g + 1);
        let rows = (0..r).map(|_| (0..g).map(|_| sparse_entry(rng, ctx, profile)).collect()).collect();
        PresentedModule::from_rows(ctx, g, rows).expect("well-formed rows")
    } else {
        let factors: Vec<Element> = (0..g)
            .map(|_| match ctx.modulus() {
                Some(n) => random_divisor(rng, ring, n),
                None if profile.entry_choices.is_none() && rng.gen_bool(0.15) => ring.zero(),
                None => nonzero_element(rng, ctx, profile),
            })
            .collect();
        PresentedModule::from_factors(ctx, &factors).expect("well-formed factors")
    }
}

/// A nonzero factor whose residue ring has at most `budget` elements.
fn bounded_factor(rng: &mut ChaCha8Rng, ctx: &RingContext, profile: &Profile, budget: u128) -> Element {
    let ring = ctx.base();
    if let Some(n) = ctx.modulus() {
        let fits: Vec<Element> =
            ring.divisors(n).into_iter().filter(|d| ring.residue_count(d).is_some_and(|c| c <= budget)).collect();
        return fits.choose(rng).cloned().unwrap_or_else(|| ring.one());
    }
    match ring {
        BaseRing::Integers => {
            let top = (budget as i64).min(profile.max_entry).max(1);
            let top = if rng.gen_bool(0.7) { top.min(8) } else { top };
            let v = rng.gen_range(1..=top);
            Element::int(if rng.gen_bool(0.2) { -v } else { v })
        }
        BaseRing::Polynomials { characteristic: p } => {
            let mut max_deg = 0;
            while (p as u128).pow(max_deg as u32 + 1) <= budget && max_deg < profile.max_degree {
                max_deg += 1;
            }
            let deg = rng.gen_range(0..=max_deg);
            let mut c: Vec<i64> = (0..deg).map(|_| rng.gen_range(0..p as i64)).collect();
            c.push(rng.gen_range(1..p as i64));
            ring.poly(&c)
        }
    }
}

fn scramble(rng: &mut ChaCha8Rng, ctx: &RingContext, rows: &mut [Vec<Element>]) {
    let ring = ctx.base();
    let g = rows.first().map_or(0, |r| r.len());
    let small = |rng: &mut ChaCha8Rng| match ring {
        BaseRing::Integers => Element::int(*[-2i64, -1, 1, 2].choose(rng).expect("nonempty")),
        BaseRing::Polynomials { characteristic: p } => {
            ring.poly(&[rng.gen_range(0..p as i64), rng.gen_range(0..p as i64)])
        }
    };
    for _ in 0..rng.gen_range(0..=4) {
        if rows.len() > 1 && rng.gen_bool(0.5) {
            let a = rng.gen_range(0..rows.len());
            let b = (a + rng.gen_range(1..rows.len())) % rows.len();
            let c = small(rng);
            let src = rows[b].clone();
            for (x, y) in rows[a].iter_mut().zip(&src) {
                *x = ctx.reduce(&ring.add(x, &ring.mul(&c, y)));
            }
        } else if g > 1 {
            let a = rng.gen_range(0..g);
            let b = (a + rng.gen_range(1..g)) % g;
            let c = small(rng);
            for row in rows.iter_mut() {
                row[a] = ctx.reduce(&ring.add(&row[a], &ring.mul(&c, &row[b])));
            }
        }
    }
}

/// A random finite module with at most `bound` elements.
///
/// Three routes: a plain invariant-factor list, the same list disguised by
/// unimodular row and column operations, and a random small relation
/// matrix kept only if it happens to be small enough.
pub fn generate_finite_module(
    rng: &mut ChaCha8Rng,
    ctx: &RingContext,
    profile: &Profile,
    bound: usize,
) -> PresentedModule {
    let g = generator_count(rng, profile);
    if g == 0 {
        return PresentedModule::zero(ctx);
    }
    let route = rng.gen_range(0..10);
    if route >= 7 {
        for _ in 0..8 {
            let rows: Vec<Vec<Element>> = (0..g + rng.gen_range(0..=1))
                .map(|_| {
                    (0..g)
                        .map(|_| {
                            if rng.gen_bool(0.4) {
                                ctx.base().zero()
                            } else {
                                random_element(rng, ctx, &Profile { max_entry: 4, max_degree: 1, ..profile.clone() })
                            }
                        })
                        .collect()
                })
                .collect();
            let m = PresentedModule::from_rows(ctx, g, rows).expect("well-formed rows");
            if m.order().is_some_and(|o| o <= bound as u128) {
                return m;
            }
        }
    }
    let mut budget = bound as u128;
    let mut factors = Vec::with_capacity(g);
    for _ in 0..g {
        let d = bounded_factor(rng, ctx, profile, budget);
        budget /= ctx.base().residue_count(&d).unwrap_or(1).max(1);
        factors.push(d);
    }
    factors.shuffle(rng);
    if route >= 4 {
        let ring = ctx.base();
        let mut rows: Vec<Vec<Element>> = factors
            .iter()
            .enumerate()
            .map(|(i, d)| {
                let mut row = vec![ring.zero(); g];
                row[i] = d.clone();
                row
            })
            .collect();
        scramble(rng, ctx, &mut rows);
        return PresentedModule::from_rows(ctx, g, rows).expect("well-formed rows");
    }
    PresentedModule::from_factors(ctx, &factors).expect("well-formed factors")
}

/// A random ideal, biased towards divisors of the torsion exponent of `m`
/// so that the interesting cases (neither `0` nor `M`) come up often.
pub fn generate_ideal(rng: &mut ChaCha8Rng, m: &PresentedModule, profile: &Profile) -> Ideal {
    let ctx = m.context();
    let ring = ctx.base();
    if ctx.is_quotient() {
        let all = ctx.enumerate_ideals().expect("quotient context");
        return all.choose(rng).cloned().expect("nonempty");
    }
    let e = m.torsion_exponent();
    let roll = rng.gen_range(0..20);
    let g = if roll < 2 {
        ring.zero()
    } else if roll < 4 {
        ring.one()
    } else if roll < 13 && !e.is_zero() && !ring.is_unit(&e) {
        random_divisor(rng, ring, &e)
    } else {
        nonzero_element(rng, ctx, &Profile { max_entry: profile.max_entry.min(12), max_degree: 2, ..profile.clone() })
    };
    Ideal::principal(ctx, &g).expect("element of the context")
}

/// Up to two random vectors of `m`, as submodule generators.
pub fn generate_vectors(rng: &mut ChaCha8Rng, m: &PresentedModule, profile: &Profile) -> Vec<Vec<Element>> {
    let g = m.generator_count();
    if g == 0 {
        return Vec::new();
    }
    let k = rng.gen_range(0..=2);
    (0..k)
        .map(|_| {
            let v: Vec<Element> = (0..g).map(|_| sparse_entry(rng, m.context(), profile)).collect();
            m.reduce(&v)
        })
        .collect()
}

/// Divisors of `a` (every residue divisor of the modulus when `a` is the
/// zero ideal of a quotient), or random small elements when `a = 0` over a
/// base domain.
pub(crate) fn factor_dividing(rng: &mut ChaCha8Rng, ctx: &RingContext, profile: &Profile, a: &Element) -> Element {
    let ring = ctx.base();
    if a.is_zero() {
        return nonzero_element(rng, ctx, profile);
    }
    let a = match ctx.modulus() {
        Some(n) => ring.gcd(a, n),
        None => a.clone(),
    };
    random_divisor(rng, ring, &a)
}

/// A factor coprime to `a`: a divisor of the modulus (or a small random
/// element) with every prime of `a` stripped off.
pub(crate) fn factor_coprime_to(rng: &mut ChaCha8Rng, ctx: &RingContext, profile: &Profile, a: &Element) -> Element {
    let ring = ctx.base();
    let mut d = match ctx.modulus() {
        Some(n) => random_divisor(rng, ring, n),
        None => nonzero_element(rng, ctx, profile),
    };
    if a.is_zero() {
        return ring.one();
    }
    loop {
        let g = ring.gcd(&d, a);
        if ring.is_unit(&g) {
            return ring.normalize(&d);
        }
        d = ring.exact_div(&d, &g).expect("gcd divides");
    }
}
