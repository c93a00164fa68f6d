//! Torsion, completion, Hom, tensor and localization.

use std::fmt;

use crate::error::{Error, Result};
use crate::fpmodule::{PresentedModule, Submodule};
use crate::ring::{BaseRing, Element, Ideal, RingContext};

/// Λ_I(M) is not finitely presented over the context.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NotRepresentable {
    pub reason: String,
    pub stabilization_bound_tried: usize,
}

impl fmt::Display for NotRepresentable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "not representable: {}", self.reason)
    }
}

fn same_context(m: &PresentedModule, i: &Ideal) -> Result<()> {
    if m.context() == i.context() {
        Ok(())
    } else {
        Err(Error::ContextMismatch)
    }
}

/// Γ_I(M) as the stable term of the chain `(0 :_M I^k)`.
pub fn gamma(m: &PresentedModule, i: &Ideal) -> Result<Submodule> {
    same_context(m, i)?;
    let mut k = 1;
    let mut current = m.annihilator_of(i)?;
    loop {
        k += 1;
        let next = m.annihilator_of(&i.power(k))?;
        if next.same_as(&current) {
            return Ok(current);
        }
        current = next;
    }
}

/// The stable term `I^k M` of the descending chain, with its index `k`.
pub(crate) fn stable_power_submodule(m: &PresentedModule, i: &Ideal) -> Result<(usize, Submodule)> {
    let mut k = 1;
    let mut current = m.scalar_submodule(i)?;
    loop {
        let next = current.scaled(i);
        if next.same_as(&current) {
            return Ok((k, current));
        }
        k += 1;
        current = next;
    }
}

/// Λ_I(M) = M / I^k M once the chain `I^k M` stabilizes.
///
/// With a free summand and a proper nonzero ideal the chain never
/// stabilizes and the completion is reported as [`NotRepresentable`].
pub fn lambda(m: &PresentedModule, i: &Ideal) -> Result<std::result::Result<PresentedModule, NotRepresentable>> {
    same_context(m, i)?;
    if m.free_rank() > 0 && !i.is_zero() && !i.is_unit() {
        return Ok(Err(NotRepresentable {
            reason: format!(
                "positive free rank {} with proper nonzero ideal {i}: the chain I^k M never stabilizes",
                m.free_rank()
            ),
            stabilization_bound_tried: 0,
        }));
    }
    let (_, stable) = stable_power_submodule(m, i)?;
    Ok(Ok(m.quotient(&stable)?))
}

/// Factor list with `0` standing for each free summand.
fn cyclic_factors(m: &PresentedModule) -> Vec<Element> {
    let inv = m.invariant_factors();
    let mut out = inv.torsion_factors.clone();
    out.extend(std::iter::repeat_n(m.ring().zero(), inv.free_rank));
    out
}

/// Hom_R(M, N) up to isomorphism, summand by summand.
pub fn hom_module(m: &PresentedModule, n: &PresentedModule) -> Result<PresentedModule> {
    if m.context() != n.context() {
        return Err(Error::ContextMismatch);
    }
    let ring = m.ring();
    let mut factors = Vec::new();
    for a in cyclic_factors(m) {
        for b in cyclic_factors(n) {
            if b.is_zero() && !a.is_zero() {
                continue;
            }
            factors.push(ring.gcd(&a, &b));
        }
    }
    PresentedModule::from_factors(m.context(), &factors)
}

/// M ⊗_R N up to isomorphism.
pub fn tensor_module(m: &PresentedModule, n: &PresentedModule) -> Result<PresentedModule> {
    if m.context() != n.context() {
        return Err(Error::ContextMismatch);
    }
    let ring = m.ring();
    let mut factors = Vec::new();
    for a in cyclic_factors(m) {
        for b in cyclic_factors(n) {
            factors.push(ring.gcd(&a, &b));
        }
    }
    PresentedModule::from_factors(m.context(), &factors)
}

/// `R/I ⊗ M` as the honest quotient `M / IM`.
pub fn tensor_with_quotient(m: &PresentedModule, i: &Ideal) -> Result<PresentedModule> {
    m.quotient(&m.scalar_submodule(i)?)
}

/// `Hom(R/I, M)` as the honest submodule `(0 :_M I)`.
pub fn hom_from_quotient(m: &PresentedModule, i: &Ideal) -> Result<Submodule> {
    m.annihilator_of(i)
}

/// A module over the local ring at a prime, up to isomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalizedModule {
    pub prime: Element,
    pub free_rank: usize,
    /// Exponents `e` of the summands `R_p / p^e`, non-decreasing.
    pub local_factors: Vec<u32>,
}

impl LocalizedModule {
    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.local_factors.is_empty()
    }

    /// A module over the base domain with the same lattice of annihilators
    /// and scalar multiples for powers of the prime.
    pub fn model(&self, ring: BaseRing) -> PresentedModule {
        let ctx = RingContext::over(ring, None).expect("base context");
        let mut factors: Vec<Element> = self.local_factors.iter().map(|&e| ring.pow(&self.prime, e)).collect();
        factors.extend(std::iter::repeat_n(ring.zero(), self.free_rank));
        PresentedModule::from_factors(&ctx, &factors).expect("factors lie in base ring")
    }
}

impl fmt::Display for LocalizedModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0 at ({})", self.prime);
        }
        let mut parts: Vec<String> = self.local_factors.iter().map(|e| format!("R/({})^{e}", self.prime)).collect();
        if self.free_rank > 0 {
            parts.push(format!("R^{}", self.free_rank));
        }
        write!(f, "{} at ({})", parts.join(" + "), self.prime)
    }
}

/// An ideal of the local ring at a prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LocalIdeal {
    Zero,
    Unit,
    Power(u32),
}

impl LocalIdeal {
    pub fn model(&self, ring: BaseRing, prime: &Element) -> Ideal {
        let ctx = RingContext::over(ring, None).expect("base context");
        match self {
            LocalIdeal::Zero => Ideal::zero(&ctx),
            LocalIdeal::Unit => Ideal::unit(&ctx),
            LocalIdeal::Power(k) => Ideal::principal(&ctx, &ring.pow(prime, *k)).expect("prime power"),
        }
    }
}

impl fmt::Display for LocalIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LocalIdeal::Zero => write!(f, "zero"),
            LocalIdeal::Unit => write!(f, "unit"),
            LocalIdeal::Power(k) => write!(f, "p^{k}"),
        }
    }
}

/// Checks that `p` generates a prime ideal of the context and returns it
/// in canonical form. In a quotient context `p` must divide the modulus.
fn check_prime(ctx: &RingContext, p: &Element) -> Result<Element> {
    let base = ctx.base_context();
    let bad = || Error::NotPrimeElement(p.to_string());
    match base.is_prime_element(p) {
        Ok(true) => {}
        Ok(false) | Err(Error::UnitOrZeroElement) => return Err(bad()),
        Err(e) => return Err(e),
    }
    let p = ctx.base().normalize(p);
    if let Some(n) = ctx.modulus() {
        if !ctx.base().divides(&p, n) {
            return Err(bad());
        }
    }
    Ok(p)
}

/// M_p as free rank plus p-exponents of the torsion factors.
pub fn localize(m: &PresentedModule, p: &Element) -> Result<LocalizedModule> {
    let p = check_prime(m.context(), p)?;
    let ring = m.ring();
    let inv = m.invariant_factors();
    let mut local_factors: Vec<u32> = inv
        .torsion_factors
        .iter()
        .map(|d| ring.valuation(&p, d).expect("torsion factors are nonzero"))
        .filter(|&v| v > 0)
        .collect();
    local_factors.sort_unstable();
    Ok(LocalizedModule { prime: p, free_rank: inv.free_rank, local_factors })
}

/// I_p: zero, unit, or the exponent of `p` in the generator.
pub fn localize_ideal(i: &Ideal, p: &Element) -> Result<LocalIdeal> {
    let ctx = i.context();
    let p = check_prime(ctx, p)?;
    let ring = ctx.base();
    let g = i.generator();
    if g.is_zero() {
        return Ok(LocalIdeal::Zero);
    }
    let v = ring.valuation(&p, g).expect("nonzero generator");
    if let Some(n) = ctx.modulus() {
        if v >= ring.valuation(&p, n).expect("nonzero modulus") {
            return Ok(LocalIdeal::Zero);
        }
    }
    Ok(if v == 0 { LocalIdeal::Unit } else { LocalIdeal::Power(v) })
}
