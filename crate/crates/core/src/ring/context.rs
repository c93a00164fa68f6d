use std::fmt;

use super::{is_prime_u64, BaseRing, Element, Ideal};
use crate::error::{Error, Result};

/// Which base domain a context is built on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BaseKind {
    Integers,
    PolynomialsOverPrimeField,
}

/// A base domain together with an optional modulus.
///
/// With a modulus `n`, all module and ideal data is read over `base/(n)`:
/// modules are killed by `n` and ideal generators are divisors of `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingContext {
    base: BaseRing,
    modulus: Option<Element>,
}

impl RingContext {
    /// Validating constructor.
    pub fn make(kind: BaseKind, characteristic: Option<u64>, modulus: Option<Element>) -> Result<Self> {
        let base = match (kind, characteristic) {
            (BaseKind::Integers, None) => BaseRing::Integers,
            (BaseKind::PolynomialsOverPrimeField, Some(p)) => {
                if p >= 1 << 31 || !is_prime_u64(p) {
                    return Err(Error::NonPrimeCharacteristic(p));
                }
                BaseRing::Polynomials { characteristic: p }
            }
            _ => return Err(Error::CharacteristicMismatch),
        };
        Self::over(base, modulus)
    }

    /// Context over an already validated base ring.
    pub fn over(base: BaseRing, modulus: Option<Element>) -> Result<Self> {
        let modulus = match modulus {
            None => None,
            Some(m) => {
                if !base.contains(&m) {
                    return Err(Error::ElementOutsideContext(m.to_string()));
                }
                if m.is_zero() || base.is_unit(&m) {
                    return Err(Error::UnitOrZeroModulus);
                }
                Some(base.normalize(&m))
            }
        };
        Ok(RingContext { base, modulus })
    }

    pub fn integers() -> Self {
        RingContext { base: BaseRing::Integers, modulus: None }
    }

    /// `Z/n`. Panics if `n` is a unit or zero.
    pub fn integers_mod(n: i64) -> Self {
        Self::over(BaseRing::Integers, Some(Element::int(n))).expect("valid modulus")
    }

    /// `F_p[x]`. Panics if `p` is not prime.
    pub fn polynomials(p: u64) -> Self {
        Self::make(BaseKind::PolynomialsOverPrimeField, Some(p), None).expect("prime characteristic")
    }

    /// `F_p[x]/(f)` with `f` given by ascending coefficients.
    pub fn polynomials_mod(p: u64, f: &[i64]) -> Self {
        let base = Self::polynomials(p).base;
        Self::over(base, Some(base.poly(f))).expect("valid modulus")
    }

    pub fn base(&self) -> BaseRing {
        self.base
    }

    pub fn modulus(&self) -> Option<&Element> {
        self.modulus.as_ref()
    }

    pub fn is_quotient(&self) -> bool {
        self.modulus.is_some()
    }

    /// The same base ring without modulus.
    pub fn base_context(&self) -> RingContext {
        RingContext { base: self.base, modulus: None }
    }

    /// Whether `e` is an element of the base domain of this context.
    pub fn contains(&self, e: &Element) -> bool {
        self.base.contains(e)
    }

    pub(crate) fn check(&self, e: &Element) -> Result<()> {
        if self.contains(e) {
            Ok(())
        } else {
            Err(Error::ElementOutsideContext(e.to_string()))
        }
    }

    /// Reduce an element into canonical residue form (identity without modulus).
    pub fn reduce(&self, e: &Element) -> Element {
        match &self.modulus {
            Some(m) => self.base.rem(e, m),
            None => e.clone(),
        }
    }

    /// Every ideal of a quotient context, one per canonical divisor of the
    /// modulus, in canonical order. The last entry is the zero ideal.
    pub fn enumerate_ideals(&self) -> Result<Vec<Ideal>> {
        let m = self.modulus.as_ref().ok_or(Error::InfiniteIdealLattice)?;
        Ok(self.base.divisors(m).into_iter().map(|d| Ideal::from_canonical(self.clone(), d)).collect())
    }

    /// Finite stand-in for "all ideals" when testing a module whose torsion
    /// part has exponent `exponent`.
    ///
    /// In a quotient context this is simply [`enumerate_ideals`](Self::enumerate_ideals).
    /// Over a base domain it is `(0)`, every divisor of the exponent, and the
    /// smallest prime `q` coprime to the exponent: annihilators and scalar
    /// multiples on the torsion part only depend on `gcd(d, exponent)`, and `q`
    /// acts invertibly on torsion but not on a free summand.
    pub fn reduction_set(&self, exponent: &Element) -> Vec<Ideal> {
        if self.is_quotient() {
            return self.enumerate_ideals().expect("quotient context");
        }
        let e = if exponent.is_zero() { self.base.one() } else { self.base.normalize(exponent) };
        let mut out = vec![Ideal::from_canonical(self.clone(), self.base.zero())];
        out.extend(self.base.divisors(&e).into_iter().map(|d| Ideal::from_canonical(self.clone(), d)));
        out.push(Ideal::from_canonical(self.clone(), self.base.smallest_prime_coprime_to(&e)));
        out
    }

    /// Irreducibility test for elements of a base context.
    pub fn is_prime_element(&self, e: &Element) -> Result<bool> {
        if self.is_quotient() {
            return Err(Error::QuotientContextUnsupported);
        }
        self.check(e)?;
        if e.is_zero() || self.base.is_unit(e) {
            return Err(Error::UnitOrZeroElement);
        }
        Ok(self.base.is_irreducible(e))
    }

    /// Every element of a quotient ring, in canonical order.
    pub fn ring_elements(&self) -> Result<Vec<Element>> {
        let m = self.modulus.as_ref().ok_or(Error::InfiniteIdealLattice)?;
        Ok(self.base.residues(m))
    }
}

impl fmt::Display for RingContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.base, &self.modulus) {
            (BaseRing::Integers, None) => write!(f, "Z"),
            (BaseRing::Integers, Some(m)) => write!(f, "Z/{m}"),
            (BaseRing::Polynomials { characteristic }, None) => write!(f, "F{characteristic}[x]"),
            (BaseRing::Polynomials { characteristic }, Some(m)) => {
                write!(f, "F{characteristic}[x]/({m})")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn make_context_examples() {
        let z6 = RingContext::make(BaseKind::Integers, None, Some(Element::int(6))).unwrap();
        assert_eq!(z6.to_string(), "Z/6");
        let z = RingContext::make(BaseKind::Integers, None, None).unwrap();
        assert!(!z.is_quotient());
        let f2 = RingContext::make(BaseKind::PolynomialsOverPrimeField, Some(2), None).unwrap();
        assert_eq!(f2.to_string(), "F2[x]");
    }

    #[test]
    fn make_context_errors() {
        assert_eq!(
            RingContext::make(BaseKind::PolynomialsOverPrimeField, Some(4), None),
            Err(Error::NonPrimeCharacteristic(4))
        );
        assert_eq!(RingContext::make(BaseKind::Integers, None, Some(Element::int(-1))), Err(Error::UnitOrZeroModulus));
        assert_eq!(RingContext::make(BaseKind::Integers, None, Some(Element::int(0))), Err(Error::UnitOrZeroModulus));
        assert!(RingContext::make(BaseKind::PolynomialsOverPrimeField, Some(2147483659), None).is_err());
    }

    #[test]
    fn modulus_is_canonical() {
        let c = RingContext::make(BaseKind::Integers, None, Some(Element::int(-6))).unwrap();
        assert_eq!(c.modulus(), Some(&Element::int(6)));
        let c = RingContext::make(BaseKind::PolynomialsOverPrimeField, Some(3), None).unwrap();
        let m = c.base().poly(&[1, 0, 2]);
        let q = RingContext::over(c.base(), Some(m)).unwrap();
        assert_eq!(q.modulus(), Some(&c.base().poly(&[2, 0, 1])));
    }

    #[test]
    fn enumerate_ideals_examples() {
        let show =
            |c: &RingContext| -> Vec<String> { c.enumerate_ideals().unwrap().iter().map(|i| i.to_string()).collect() };
        assert_eq!(show(&RingContext::integers_mod(6)), ["(1)", "(2)", "(3)", "(6)"]);
        assert_eq!(show(&RingContext::integers_mod(4)), ["(1)", "(2)", "(4)"]);
        assert_eq!(show(&RingContext::polynomials_mod(2, &[0, 0, 1])), ["(1)", "(x)", "(x^2)"]);
        assert_eq!(RingContext::integers().enumerate_ideals(), Err(Error::InfiniteIdealLattice));
    }

    #[test]
    fn reduction_set_for_free_module() {
        let z = RingContext::integers();
        let set: Vec<String> = z.reduction_set(&Element::int(1)).iter().map(|i| i.to_string()).collect();
        assert_eq!(set, ["(0)", "(1)", "(2)"]);
        let set: Vec<String> = z.reduction_set(&Element::int(6)).iter().map(|i| i.to_string()).collect();
        assert_eq!(set, ["(0)", "(1)", "(2)", "(3)", "(6)", "(5)"]);
    }

    #[test]
    fn prime_elements() {
        let z = RingContext::integers();
        assert_eq!(z.is_prime_element(&Element::int(5)), Ok(true));
        assert_eq!(z.is_prime_element(&Element::int(6)), Ok(false));
        assert_eq!(z.is_prime_element(&Element::int(-1)), Err(Error::UnitOrZeroElement));
        let f2 = RingContext::polynomials(2);
        assert_eq!(f2.is_prime_element(&f2.base().poly(&[1, 1, 1])), Ok(true));
        assert_eq!(
            RingContext::integers_mod(6).is_prime_element(&Element::int(5)),
            Err(Error::QuotientContextUnsupported)
        );
    }
}
