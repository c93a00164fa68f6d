//! The worked examples, as a fixed verdict table.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::fpmodule::PresentedModule;
use crate::primality::{global_predicate, local_predicate, GlobalKind, LocalKind, PredicateEngine};
use crate::ring::{Element, Ideal, RingContext};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub example: String,
    pub ring: String,
    pub module: String,
    pub statement: String,
    pub expected: String,
    pub got: String,
    pub pass: bool,
}

struct Table {
    rows: Vec<TableRow>,
}

impl Table {
    fn push(&mut self, example: &str, m: &PresentedModule, statement: String, expected: &str, got: String) {
        self.rows.push(TableRow {
            example: example.into(),
            ring: m.context().to_string(),
            module: m.invariant_factors().to_string(),
            statement,
            pass: got == expected,
            expected: expected.into(),
            got,
        });
    }

    fn local(
        &mut self,
        ex: &str,
        m: &PresentedModule,
        kind: LocalKind,
        i: &Ideal,
        j: Option<&Ideal>,
        expected: bool,
    ) -> Result<()> {
        let v = local_predicate(m, kind, i, j)?;
        let at = match j {
            Some(j) => format!("{kind} at I = {i}, J = {j}"),
            None => format!("{kind} at I = {i}"),
        };
        self.push(ex, m, at, verdict(expected), verdict(v.holds).into());
        Ok(())
    }

    fn global(&mut self, ex: &str, m: &PresentedModule, kind: GlobalKind, expected: bool) -> Result<()> {
        let v = global_predicate(m, kind)?;
        self.push(ex, m, kind.to_string(), verdict(expected), verdict(v.holds).into());
        Ok(())
    }
}

fn verdict(b: bool) -> &'static str {
    if b {
        "holds"
    } else {
        "fails"
    }
}

fn ideal(ctx: &RingContext, g: &Element) -> Ideal {
    Ideal::principal(ctx, g).expect("element of the context")
}

fn listed(m: &PresentedModule, s: &crate::fpmodule::Submodule) -> Result<String> {
    let all = m.enumerate_elements(1024)?;
    let inside: Vec<String> = all.iter().filter(|v| s.contains(v)).map(|v| v[0].to_string()).collect();
    Ok(format!("{{{}}}", inside.join(", ")))
}

/// Build the verdict table of the worked examples.
pub fn pinned_table() -> Result<Vec<TableRow>> {
    let mut t = Table { rows: Vec::new() };
    let z = RingContext::integers();
    let zi = Element::int;

    // k[x]/(x^2) over k[x] with k = F_2.
    let f2 = RingContext::polynomials(2);
    let b = f2.base();
    let m = PresentedModule::cyclic(&f2, &b.poly(&[0, 0, 1]))?;
    let (i, j) = (ideal(&f2, &b.poly(&[0, 0, 1])), ideal(&f2, &b.poly(&[0, 1])));
    let ex = "k[x]/(x^2)";
    t.local(ex, &m, LocalKind::IPrime, &i, None, true)?;
    t.local(ex, &m, LocalKind::IJPrime, &i, Some(&j), true)?;
    t.global(ex, &m, GlobalKind::Prime, false)?;
    t.local(ex, &m, LocalKind::IPrime, &j, None, false)?;
    t.global(ex, &m, GlobalKind::WeaklyPrime, false)?;
    t.local(ex, &m, LocalKind::IJPrime, &j, Some(&j), false)?;

    // Z/6 over itself, I = 3Z/6.
    let z6 = RingContext::integers_mod(6);
    let m = PresentedModule::ring_module(&z6);
    let i = ideal(&z6, &zi(3));
    let ex = "Z/6 reduced, not prime";
    t.local(ex, &m, LocalKind::IReduced, &i, None, true)?;
    t.local(ex, &m, LocalKind::IPrime, &i, None, false)?;
    let ann = PredicateEngine::new(&m).annihilator(&i)?;
    t.push(ex, &m, format!("(0:_M I) for I = {i}"), "{0, 2, 4}", listed(&m, &ann)?);

    // Z/6 over Z: (6)-coprime but not coprime.
    let m = PresentedModule::cyclic(&z, &zi(6))?;
    let ex = "Z/6Z over Z";
    t.local(ex, &m, LocalKind::ICoprime, &ideal(&z, &zi(6)), None, true)?;
    t.global(ex, &m, GlobalKind::Coprime, false)?;
    t.local(ex, &m, LocalKind::ICoprime, &ideal(&z, &zi(2)), None, false)?;

    // Z/4 over Z: ((4),(3))-coprime but not weakly coprime.
    let m = PresentedModule::cyclic(&z, &zi(4))?;
    let ex = "Z/4Z over Z";
    t.local(ex, &m, LocalKind::IJCoprime, &ideal(&z, &zi(4)), Some(&ideal(&z, &zi(3))), true)?;
    t.global(ex, &m, GlobalKind::WeaklyCoprime, false)?;
    t.local(ex, &m, LocalKind::ICoreduced, &ideal(&z, &zi(2)), None, false)?;

    // Z over Z: ((2), Z)-coprime but not (2)-coprime.
    let m = PresentedModule::ring_module(&z);
    let ex = "Z over Z";
    t.local(ex, &m, LocalKind::IJCoprime, &ideal(&z, &zi(2)), Some(&Ideal::unit(&z)), true)?;
    t.local(ex, &m, LocalKind::ICoprime, &ideal(&z, &zi(2)), None, false)?;

    // Z/6 over itself, I = 3Z/6 idempotent.
    let m = PresentedModule::ring_module(&z6);
    let i = ideal(&z6, &zi(3));
    let ex = "Z/6 coreduced, not coprime";
    t.local(ex, &m, LocalKind::ICoreduced, &i, None, true)?;
    t.local(ex, &m, LocalKind::ICoprime, &i, None, false)?;
    let im = m.scalar_submodule(&i)?;
    t.push(ex, &m, format!("IM for I = {i}"), "{0, 3}", listed(&m, &im)?);

    // Every module is 0-prime and R-prime.
    let ex = "0-prime and R-prime";
    for m in [PresentedModule::cyclic(&z, &zi(12))?, PresentedModule::from_factors(&z, &[zi(2), zi(0)])?] {
        t.local(ex, &m, LocalKind::IPrime, &Ideal::zero(&z), None, true)?;
        t.local(ex, &m, LocalKind::IPrime, &Ideal::unit(&z), None, true)?;
    }
    Ok(t.rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_row_matches() {
        let rows = pinned_table().unwrap();
        assert!(rows.len() >= 20);
        for r in &rows {
            assert!(r.pass, "{r:?}");
        }
    }
}
