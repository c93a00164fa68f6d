//! Base Euclidean domains, ring contexts and principal ideals.
//!
//! Two base domains are realized: the integers and univariate polynomials over
//! a prime field. A [`RingContext`] optionally fixes a modulus, so every ring
//! of the form `Z`, `Z/n`, `F_p[x]` or `F_p[x]/(f)` shares one arithmetic
//! layer. Since all of these rings are principal, an [`Ideal`] is a single
//! canonical generator.

mod context;
mod ideal;
pub(crate) mod poly;

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub use context::{BaseKind, RingContext};
pub use ideal::Ideal;

/// The Euclidean domain underlying a context.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BaseRing {
    Integers,
    /// `F_p[x]`; `characteristic` is a prime below 2^31.
    Polynomials {
        characteristic: u64,
    },
}

/// An element of a base ring.
///
/// Integers are arbitrary precision. Polynomials are ascending coefficient
/// vectors reduced modulo the characteristic, without trailing zeros; the
/// zero polynomial is the empty vector. The characteristic itself lives in
/// the [`BaseRing`], so arithmetic always goes through it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Int(BigInt),
    Poly(Vec<u64>),
}

impl Element {
    pub fn int(n: i64) -> Element {
        Element::Int(BigInt::from(n))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Element::Int(n) => n.is_zero(),
            Element::Poly(c) => c.is_empty(),
        }
    }

    pub fn as_int(&self) -> Option<&BigInt> {
        match self {
            Element::Int(n) => Some(n),
            Element::Poly(_) => None,
        }
    }

    pub fn as_poly(&self) -> Option<&[u64]> {
        match self {
            Element::Poly(c) => Some(c),
            Element::Int(_) => None,
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Int(n) => write!(f, "{n}"),
            Element::Poly(c) => {
                if c.is_empty() {
                    return write!(f, "0");
                }
                let mut first = true;
                for (deg, &coef) in c.iter().enumerate().rev() {
                    if coef == 0 {
                        continue;
                    }
                    if !first {
                        write!(f, " + ")?;
                    }
                    first = false;
                    match (deg, coef) {
                        (0, c) => write!(f, "{c}")?,
                        (1, 1) => write!(f, "x")?,
                        (1, c) => write!(f, "{c}x")?,
                        (d, 1) => write!(f, "x^{d}")?,
                        (d, c) => write!(f, "{c}x^{d}")?,
                    }
                }
                Ok(())
            }
        }
    }
}

fn int_of(e: &Element) -> &BigInt {
    match e {
        Element::Int(n) => n,
        Element::Poly(_) => panic!("polynomial element used in an integer context"),
    }
}

fn poly_of(e: &Element) -> &[u64] {
    match e {
        Element::Poly(c) => c,
        Element::Int(_) => panic!("integer element used in a polynomial context"),
    }
}

pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl BaseRing {
    pub fn characteristic(&self) -> Option<u64> {
        match self {
            BaseRing::Integers => None,
            BaseRing::Polynomials { characteristic } => Some(*characteristic),
        }
    }

    pub fn zero(&self) -> Element {
        match self {
            BaseRing::Integers => Element::Int(BigInt::zero()),
            BaseRing::Polynomials { .. } => Element::Poly(Vec::new()),
        }
    }

    pub fn one(&self) -> Element {
        self.from_int(1)
    }

    /// The image of an integer in this ring (a constant polynomial for `F_p[x]`).
    pub fn from_int(&self, n: i64) -> Element {
        match self {
            BaseRing::Integers => Element::int(n),
            BaseRing::Polynomials { characteristic } => Element::Poly(poly::from_ints(*characteristic, &[n])),
        }
    }

    /// A polynomial from (possibly unreduced) ascending coefficients.
    ///
    /// Panics on the integer ring.
    pub fn poly(&self, coeffs: &[i64]) -> Element {
        match self {
            BaseRing::Polynomials { characteristic } => Element::Poly(poly::from_ints(*characteristic, coeffs)),
            BaseRing::Integers => panic!("poly() called on the integer ring"),
        }
    }

    /// Whether `e` is a well-formed element of this ring.
    pub fn contains(&self, e: &Element) -> bool {
        match (self, e) {
            (BaseRing::Integers, Element::Int(_)) => true,
            (BaseRing::Polynomials { characteristic }, Element::Poly(c)) => {
                c.last() != Some(&0) && c.iter().all(|&x| x < *characteristic)
            }
            _ => false,
        }
    }

    pub fn add(&self, a: &Element, b: &Element) -> Element {
        match self {
            BaseRing::Integers => Element::Int(int_of(a) + int_of(b)),
            BaseRing::Polynomials { characteristic: p } => Element::Poly(poly::add(*p, poly_of(a), poly_of(b))),
        }
    }

    pub fn sub(&self, a: &Element, b: &Element) -> Element {
        match self {
            BaseRing::Integers => Element::Int(int_of(a) - int_of(b)),
            BaseRing::Polynomials { characteristic: p } => Element::Poly(poly::sub(*p, poly_of(a), poly_of(b))),
        }
    }

    pub fn neg(&self, a: &Element) -> Element {
        match self {
            BaseRing::Integers => Element::Int(-int_of(a)),
            BaseRing::Polynomials { characteristic: p } => Element::Poly(poly::neg(*p, poly_of(a))),
        }
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        match self {
            BaseRing::Integers => Element::Int(int_of(a) * int_of(b)),
            BaseRing::Polynomials { characteristic: p } => Element::Poly(poly::mul(*p, poly_of(a), poly_of(b))),
        }
    }

    pub fn pow(&self, a: &Element, k: u32) -> Element {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Euclidean division with the canonical remainder: `0 <= r < |b|` for
    /// integers, `deg r < deg b` for polynomials. Panics when `b` is zero.
    pub fn div_rem(&self, a: &Element, b: &Element) -> (Element, Element) {
        match self {
            BaseRing::Integers => {
                let (a, b) = (int_of(a), int_of(b));
                assert!(!b.is_zero(), "integer division by zero");
                let r = a.mod_floor(&b.abs());
                let q = (a - &r) / b;
                (Element::Int(q), Element::Int(r))
            }
            BaseRing::Polynomials { characteristic: p } => {
                let (q, r) = poly::div_rem(*p, poly_of(a), poly_of(b));
                (Element::Poly(q), Element::Poly(r))
            }
        }
    }

    /// Canonical remainder of `a` modulo `m`; returns `a` itself when `m = 0`.
    pub fn rem(&self, a: &Element, m: &Element) -> Element {
        if m.is_zero() {
            a.clone()
        } else {
            self.div_rem(a, m).1
        }
    }

    /// Whether `a` divides `b`.
    pub fn divides(&self, a: &Element, b: &Element) -> bool {
        if a.is_zero() {
            b.is_zero()
        } else {
            self.div_rem(b, a).1.is_zero()
        }
    }

    pub fn exact_div(&self, a: &Element, b: &Element) -> Option<Element> {
        if b.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(a, b);
        r.is_zero().then_some(q)
    }

    /// The unit `u` with `a = u * normalize(a)`; one for zero.
    pub fn unit_part(&self, a: &Element) -> Element {
        match self {
            BaseRing::Integers => {
                if int_of(a).is_negative() {
                    Element::int(-1)
                } else {
                    Element::int(1)
                }
            }
            BaseRing::Polynomials { .. } => match poly_of(a).last() {
                Some(&lead) => Element::Poly(vec![lead]),
                None => self.one(),
            },
        }
    }

    /// Inverse of a unit. Panics if `u` is not a unit.
    pub fn unit_inverse(&self, u: &Element) -> Element {
        assert!(self.is_unit(u), "{u} is not a unit");
        match self {
            BaseRing::Integers => u.clone(),
            BaseRing::Polynomials { characteristic: p } => Element::Poly(vec![poly::inv_mod(*p, poly_of(u)[0])]),
        }
    }

    pub fn is_unit(&self, a: &Element) -> bool {
        match self {
            BaseRing::Integers => int_of(a).abs().is_one(),
            BaseRing::Polynomials { .. } => poly_of(a).len() == 1,
        }
    }

    /// Canonical associate: non-negative integer, monic polynomial.
    pub fn normalize(&self, a: &Element) -> Element {
        let u = self.unit_part(a);
        if self.is_unit(&u) && !u.is_zero() {
            self.mul(a, &self.unit_inverse(&u))
        } else {
            a.clone()
        }
    }

    pub fn gcd(&self, a: &Element, b: &Element) -> Element {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let r = self.div_rem(&x, &y).1;
            x = y;
            y = r;
        }
        self.normalize(&x)
    }

    /// Returns `(g, s, t)` with `s*a + t*b = g = gcd(a, b)` canonical.
    pub fn ext_gcd(&self, a: &Element, b: &Element) -> (Element, Element, Element) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (self.one(), self.zero());
        let (mut t0, mut t1) = (self.zero(), self.one());
        while !r1.is_zero() {
            let (q, r) = self.div_rem(&r0, &r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = self.sub(&s0, &self.mul(&q, &s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = self.sub(&t0, &self.mul(&q, &t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        let u = self.unit_inverse(&self.unit_part(&r0));
        (self.mul(&r0, &u), self.mul(&s0, &u), self.mul(&t0, &u))
    }

    pub fn lcm(&self, a: &Element, b: &Element) -> Element {
        if a.is_zero() || b.is_zero() {
            return self.zero();
        }
        let g = self.gcd(a, b);
        let q = self.exact_div(a, &g).expect("gcd divides");
        self.normalize(&self.mul(&q, b))
    }

    /// Euclidean size comparison (absolute value / degree); zero is smallest.
    pub fn cmp_norm(&self, a: &Element, b: &Element) -> Ordering {
        match self {
            BaseRing::Integers => int_of(a).abs().cmp(&int_of(b).abs()),
            BaseRing::Polynomials { .. } => poly_of(a).len().cmp(&poly_of(b).len()),
        }
    }

    /// Deterministic total order: by norm, then structurally.
    pub fn cmp_canonical(&self, a: &Element, b: &Element) -> Ordering {
        self.cmp_norm(a, b).then_with(|| match (a, b) {
            (Element::Int(x), Element::Int(y)) => y.is_negative().cmp(&x.is_negative()).then(x.cmp(y)),
            (Element::Poly(x), Element::Poly(y)) => x.iter().rev().cmp(y.iter().rev()),
            _ => a.cmp(b),
        })
    }

    /// Size of the residue ring `R/(d)`; `None` when infinite (`d = 0`) or
    /// too large for `u128`.
    pub fn residue_count(&self, d: &Element) -> Option<u128> {
        if d.is_zero() {
            return None;
        }
        match self {
            BaseRing::Integers => int_of(d).abs().to_u128(),
            BaseRing::Polynomials { characteristic: p } => (*p as u128).checked_pow((poly_of(d).len() - 1) as u32),
        }
    }

    /// Canonical representatives of `R/(d)` in canonical order. Panics on `d = 0`.
    pub fn residues(&self, d: &Element) -> Vec<Element> {
        assert!(!d.is_zero(), "R/(0) is infinite");
        match self {
            BaseRing::Integers => {
                let n = int_of(d).abs();
                num_iter(&n).map(Element::Int).collect()
            }
            BaseRing::Polynomials { characteristic: p } => {
                let deg = poly_of(d).len() - 1;
                let mut v: Vec<Element> = poly::all_below_degree(*p, deg).map(Element::Poly).collect();
                v.sort_by(|a, b| self.cmp_canonical(a, b));
                v
            }
        }
    }

    /// Exponent of the prime `p` in `a`; `None` for `a = 0`.
    pub fn valuation(&self, p: &Element, a: &Element) -> Option<u32> {
        if a.is_zero() {
            return None;
        }
        let mut k = 0;
        let mut cur = a.clone();
        while let Some(q) = self.exact_div(&cur, p) {
            cur = q;
            k += 1;
        }
        Some(k)
    }

    /// Irreducibility by trial division. `a` must be nonzero and not a unit.
    pub fn is_irreducible(&self, a: &Element) -> bool {
        match self {
            BaseRing::Integers => {
                let n = int_of(a).abs();
                let mut d = BigInt::from(2);
                while &d * &d <= n {
                    if (&n % &d).is_zero() {
                        return false;
                    }
                    d += 1;
                }
                true
            }
            BaseRing::Polynomials { characteristic: p } => {
                let deg = poly_of(a).len() - 1;
                for d in 1..=deg / 2 {
                    for f in poly::monic_of_degree(*p, d) {
                        if self.divides(&Element::Poly(f), a) {
                            return false;
                        }
                    }
                }
                true
            }
        }
    }

    /// Prime factorization of a nonzero element by trial division, as
    /// `(canonical prime, exponent)` pairs in canonical order. Units yield
    /// the empty list.
    pub fn factor(&self, a: &Element) -> Vec<(Element, u32)> {
        assert!(!a.is_zero(), "cannot factor zero");
        let mut rest = self.normalize(a);
        let mut out = Vec::new();
        match self {
            BaseRing::Integers => {
                let mut d = BigInt::from(2);
                let mut n = int_of(&rest).clone();
                while &d * &d <= n {
                    let mut k = 0;
                    while (&n % &d).is_zero() {
                        n /= &d;
                        k += 1;
                    }
                    if k > 0 {
                        out.push((Element::Int(d.clone()), k));
                    }
                    d += 1;
                }
                if n > BigInt::one() {
                    out.push((Element::Int(n), 1));
                }
            }
            BaseRing::Polynomials { characteristic: p } => {
                let mut deg = 1;
                while 2 * deg <= poly_of(&rest).len().saturating_sub(1) {
                    for f in poly::monic_of_degree(*p, deg) {
                        let f = Element::Poly(f);
                        let mut k = 0;
                        while let Some(q) = self.exact_div(&rest, &f) {
                            rest = q;
                            k += 1;
                        }
                        if k > 0 {
                            out.push((f, k));
                        }
                    }
                    deg += 1;
                }
                if poly_of(&rest).len() > 1 {
                    out.push((rest, 1));
                }
            }
        }
        out.sort_by(|x, y| self.cmp_canonical(&x.0, &y.0));
        out
    }

    /// All canonical divisors of a nonzero element, in canonical order.
    pub fn divisors(&self, a: &Element) -> Vec<Element> {
        let mut divs = vec![self.one()];
        for (p, k) in self.factor(a) {
            let mut next = Vec::with_capacity(divs.len() * (k as usize + 1));
            for d in &divs {
                let mut cur = d.clone();
                next.push(cur.clone());
                for _ in 0..k {
                    cur = self.mul(&cur, &p);
                    next.push(cur.clone());
                }
            }
            divs = next;
        }
        divs.sort_by(|x, y| self.cmp_canonical(x, y));
        divs
    }

    /// Smallest prime (lowest-degree irreducible) not dividing `e`.
    pub fn smallest_prime_coprime_to(&self, e: &Element) -> Element {
        match self {
            BaseRing::Integers => {
                let mut q = 2i64;
                loop {
                    let c = Element::int(q);
                    if self.is_irreducible(&c) && (e.is_zero() || !self.divides(&c, e)) {
                        return c;
                    }
                    q += 1;
                }
            }
            BaseRing::Polynomials { characteristic: p } => {
                let mut deg = 1;
                loop {
                    for f in poly::monic_of_degree(*p, deg) {
                        let f = Element::Poly(f);
                        if self.is_irreducible(&f) && (e.is_zero() || !self.divides(&f, e)) {
                            return f;
                        }
                    }
                    deg += 1;
                }
            }
        }
    }

    /// Monic irreducibles (or positive primes) in canonical order, up to
    /// `limit` of them.
    pub fn first_primes(&self, limit: usize) -> Vec<Element> {
        let mut out = Vec::new();
        let mut last = self.one();
        while out.len() < limit {
            let next = self.next_prime_after(&last);
            out.push(next.clone());
            last = next;
        }
        out
    }

    fn next_prime_after(&self, after: &Element) -> Element {
        match self {
            BaseRing::Integers => {
                let mut q: BigInt = int_of(after) + 1;
                loop {
                    let c = Element::Int(q.clone());
                    if q > BigInt::one() && self.is_irreducible(&c) {
                        return c;
                    }
                    q += 1;
                }
            }
            BaseRing::Polynomials { characteristic: p } => {
                let mut deg = poly_of(after).len().saturating_sub(1).max(1);
                loop {
                    let mut cands: Vec<Element> = poly::monic_of_degree(*p, deg).map(Element::Poly).collect();
                    cands.sort_by(|a, b| self.cmp_canonical(a, b));
                    for c in cands {
                        if self.cmp_canonical(&c, after) == Ordering::Greater && self.is_irreducible(&c) {
                            return c;
                        }
                    }
                    deg += 1;
                }
            }
        }
    }
}

fn num_iter(n: &BigInt) -> impl Iterator<Item = BigInt> {
    let n = n.clone();
    let mut cur = BigInt::zero();
    std::iter::from_fn(move || {
        if cur < n {
            let out = cur.clone();
            cur += 1;
            Some(out)
        } else {
            None
        }
    })
}
