use std::fmt;

use super::{Element, RingContext};
use crate::error::{Error, Result};
use crate::Relation;

/// A principal ideal, stored as its canonical generator.
///
/// In a quotient context the generator divides the modulus; the zero ideal
/// of `R/(n)` is represented by `n` itself.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ideal {
    ctx: RingContext,
    generator: Element,
}

impl Ideal {
    pub(crate) fn from_canonical(ctx: RingContext, generator: Element) -> Self {
        Ideal { ctx, generator }
    }

    fn normalized(ctx: &RingContext, g: Element) -> Self {
        let base = ctx.base();
        let g = match ctx.modulus() {
            Some(m) => base.gcd(&g, m),
            None => base.normalize(&g),
        };
        Ideal { ctx: ctx.clone(), generator: g }
    }

    /// The ideal generated by `gens`, collapsed to a single gcd generator.
    pub fn from_generators(ctx: &RingContext, gens: &[Element]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        let base = ctx.base();
        let mut g = base.zero();
        for e in gens {
            ctx.check(e)?;
            g = base.gcd(&g, e);
        }
        Ok(Self::normalized(ctx, g))
    }

    pub fn principal(ctx: &RingContext, g: &Element) -> Result<Self> {
        Self::from_generators(ctx, std::slice::from_ref(g))
    }

    pub fn zero(ctx: &RingContext) -> Self {
        Self::normalized(ctx, ctx.base().zero())
    }

    pub fn unit(ctx: &RingContext) -> Self {
        Self::normalized(ctx, ctx.base().one())
    }

    pub fn context(&self) -> &RingContext {
        &self.ctx
    }

    pub fn generator(&self) -> &Element {
        &self.generator
    }

    pub fn is_zero(&self) -> bool {
        match self.ctx.modulus() {
            Some(m) => &self.generator == m,
            None => self.generator.is_zero(),
        }
    }

    pub fn is_unit(&self) -> bool {
        self.ctx.base().is_unit(&self.generator)
    }

    fn same_context(&self, other: &Ideal) -> Result<()> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.same_context(other)?;
        let g = self.ctx.base().mul(&self.generator, &other.generator);
        Ok(Self::normalized(&self.ctx, g))
    }

    /// `I^k` for `k >= 1`. Panics on `k = 0`.
    pub fn power(&self, k: u32) -> Ideal {
        assert!(k >= 1, "ideal powers start at 1");
        Self::normalized(&self.ctx, self.ctx.base().pow(&self.generator, k))
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.same_context(other)?;
        Ok(Self::normalized(&self.ctx, self.ctx.base().gcd(&self.generator, &other.generator)))
    }

    pub fn intersection(&self, other: &Ideal) -> Result<Ideal> {
        self.same_context(other)?;
        Ok(Self::normalized(&self.ctx, self.ctx.base().lcm(&self.generator, &other.generator)))
    }

    /// Containment via divisibility of generators: `I ⊇ J` iff `gen(I) | gen(J)`.
    pub fn compare(&self, other: &Ideal) -> Result<Relation> {
        self.same_context(other)?;
        let base = self.ctx.base();
        let contains = base.divides(&self.generator, &other.generator);
        let within = base.divides(&other.generator, &self.generator);
        Ok(Relation::from_inclusions(contains, within))
    }

    pub fn contains_element(&self, e: &Element) -> bool {
        let e = self.ctx.reduce(e);
        let e = match self.ctx.modulus() {
            Some(m) => self.ctx.base().gcd(&e, m),
            None => e,
        };
        self.ctx.base().divides(&self.generator, &e)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.generator)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn zi(n: i64) -> Element {
        Element::int(n)
    }

    #[test]
    fn from_generators_examples() {
        let z = RingContext::integers();
        assert_eq!(Ideal::from_generators(&z, &[zi(4), zi(6)]).unwrap().generator(), &zi(2));
        assert_eq!(Ideal::from_generators(&z, &[zi(0)]).unwrap().generator(), &zi(0));
        let z6 = RingContext::integers_mod(6);
        assert_eq!(Ideal::from_generators(&z6, &[zi(4)]).unwrap().generator(), &zi(2));
        assert_eq!(Ideal::from_generators(&z, &[]), Err(Error::EmptyGenerators));
        let f2 = RingContext::polynomials(2);
        assert!(matches!(Ideal::from_generators(&f2, &[zi(3)]), Err(Error::ElementOutsideContext(_))));
    }

    #[test]
    fn combine_examples() {
        let z = RingContext::integers();
        let i2 = Ideal::principal(&z, &zi(2)).unwrap();
        let i3 = Ideal::principal(&z, &zi(3)).unwrap();
        assert_eq!(i2.product(&i3).unwrap().generator(), &zi(6));
        assert_eq!(i2.sum(&i3).unwrap().generator(), &zi(1));
        assert_eq!(i2.intersection(&i3).unwrap().generator(), &zi(6));

        let f2 = RingContext::polynomials(2);
        let x = Ideal::principal(&f2, &f2.base().poly(&[0, 1])).unwrap();
        assert_eq!(x.power(2).to_string(), "(x^2)");

        let z6 = RingContext::integers_mod(6);
        let p = Ideal::principal(&z6, &zi(2)).unwrap().product(&Ideal::principal(&z6, &zi(3)).unwrap());
        let p = p.unwrap();
        assert_eq!(p.generator(), &zi(6));
        assert!(p.is_zero());
        assert_eq!(i2.product(&Ideal::unit(&z6)), Err(Error::ContextMismatch));
    }

    #[test]
    fn compare_examples() {
        let z = RingContext::integers();
        let i = |n| Ideal::principal(&z, &zi(n)).unwrap();
        assert_eq!(i(2).compare(&i(6)).unwrap(), Relation::Contains);
        assert_eq!(i(2).compare(&i(3)).unwrap(), Relation::Incomparable);
        let z6 = RingContext::integers_mod(6);
        let a = Ideal::principal(&z6, &zi(3)).unwrap();
        assert_eq!(a.compare(&a).unwrap(), Relation::Equal);
    }

    fn arb_ctx() -> impl Strategy<Value = RingContext> {
        prop_oneof![
            Just(RingContext::integers()),
            (2i64..40).prop_map(RingContext::integers_mod),
            Just(RingContext::polynomials(3)),
            Just(RingContext::polynomials_mod(2, &[1, 0, 1, 1])),
        ]
    }

    fn arb_ideal() -> impl Strategy<Value = Ideal> {
        (arb_ctx(), prop::collection::vec(-30i64..30, 1..4)).prop_map(|(ctx, cs)| {
            let g = match ctx.base() {
                crate::ring::BaseRing::Integers => zi(cs[0]),
                b => b.poly(&cs),
            };
            Ideal::principal(&ctx, &g).unwrap()
        })
    }

    proptest! {
        #[test]
        fn product_is_contained_in_factors(i in arb_ideal(), seed in -30i64..30) {
            let ctx = i.context().clone();
            let g = match ctx.base() {
                crate::ring::BaseRing::Integers => zi(seed),
                b => b.poly(&[seed, 1]),
            };
            let j = Ideal::principal(&ctx, &g).unwrap();
            let ij = i.product(&j).unwrap();
            prop_assert!(matches!(i.compare(&ij).unwrap(), Relation::Contains | Relation::Equal));
            prop_assert!(matches!(j.compare(&ij).unwrap(), Relation::Contains | Relation::Equal));
        }

        #[test]
        fn power_laws(i in arb_ideal(), a in 1u32..4, b in 1u32..4) {
            prop_assert_eq!(i.power(1), i.clone());
            prop_assert_eq!(i.power(a + b), i.power(a).product(&i.power(b)).unwrap());
        }

        #[test]
        fn canonical_idempotence(i in arb_ideal()) {
            let again = Ideal::from_generators(i.context(), &[i.generator().clone()]).unwrap();
            prop_assert_eq!(again, i);
        }

        #[test]
        fn enumerated_ideals_cover_principal_ones(n in 2i64..60, e in -100i64..100) {
            let ctx = RingContext::integers_mod(n);
            let all = ctx.enumerate_ideals().unwrap();
            for (a, i) in all.iter().enumerate() {
                for j in &all[a + 1..] {
                    prop_assert_ne!(i, j);
                }
            }
            let from_e = Ideal::principal(&ctx, &zi(e)).unwrap();
            prop_assert!(all.contains(&from_e));
        }
    }
}
