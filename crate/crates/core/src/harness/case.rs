//! Campaign cases and their JSON descriptors.

use serde_json::{json, Value};

use crate::description::{emit_element, emit_module, emit_ring, parse_element, parse_module, ModuleDescription};
use crate::error::{Error, Result};
use crate::fpmodule::PresentedModule;
use crate::ring::{Element, Ideal};

/// One unit of work for a law: a module, the ideal pairs to test it at,
/// optional submodule generators and an optional second module.
///
/// Random cases carry a single pair; exhaustive sweeps put every ideal pair
/// of a quotient context into one case so that per-module work (global
/// predicates, Γ, Λ) is shared.
#[derive(Clone, Debug)]
pub struct Case {
    pub module: PresentedModule,
    pub pairs: Vec<(Ideal, Ideal)>,
    pub sub: Vec<Vec<Element>>,
    pub other: Option<PresentedModule>,
}

impl Case {
    pub fn new(module: PresentedModule, i: Ideal, j: Ideal) -> Self {
        Case { module, pairs: vec![(i, j)], sub: Vec::new(), other: None }
    }

    /// The same case restricted to one ideal pair.
    pub fn at_pair(&self, k: usize) -> Case {
        Case { pairs: vec![self.pairs[k].clone()], ..self.clone() }
    }

    /// Re-runnable JSON form of a single-pair case: a module description
    /// with ideals `I` and `J`, plus `submodule` and `other` when present.
    pub fn descriptor(&self) -> Value {
        let ctx = self.module.context();
        let mut v = json!({
            "ring": emit_ring(ctx),
            "module": emit_module(&self.module),
        });
        if let Some((i, j)) = self.pairs.first() {
            v["ideals"] = json!({"I": [emit_element(i.generator())], "J": [emit_element(j.generator())]});
        }
        if !self.sub.is_empty() {
            v["submodule"] =
                Value::Array(self.sub.iter().map(|r| Value::Array(r.iter().map(emit_element).collect())).collect());
        }
        if let Some(o) = &self.other {
            v["other"] = emit_module(o);
        }
        v
    }

    /// Inverse of [`descriptor`](Self::descriptor). A missing `J` defaults
    /// to `I`.
    pub fn from_descriptor(text: &str) -> Result<Case> {
        let mut root: Value = serde_json::from_str(text).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))?;
        let obj = root.as_object_mut().ok_or_else(|| Error::Parse("case: expected an object".into()))?;
        let sub = obj.remove("submodule");
        let other = obj.remove("other");
        let desc = ModuleDescription::parse(&root.to_string())?;
        let ctx = desc.context.clone();
        let i = desc.ideals.get("I").cloned().ok_or_else(|| Error::Parse("ideals.I: missing".into()))?;
        let j = desc.ideals.get("J").cloned().unwrap_or_else(|| i.clone());
        let mut case = Case::new(desc.module, i, j);
        if let Some(sv) = sub {
            let g = case.module.generator_count();
            let rows = sv.as_array().ok_or_else(|| Error::Parse("submodule: expected an array".into()))?;
            for (r, row) in rows.iter().enumerate() {
                let path = format!("submodule[{r}]");
                let entries = row.as_array().ok_or_else(|| Error::Parse(format!("{path}: expected an array")))?;
                if entries.len() != g {
                    return Err(Error::Parse(format!("{path}: expected {g} entries, found {}", entries.len())));
                }
                let v = entries
                    .iter()
                    .enumerate()
                    .map(|(c, e)| parse_element(ctx.base(), e, &format!("{path}[{c}]")))
                    .collect::<Result<Vec<_>>>()?;
                case.sub.push(case.module.reduce(&v));
            }
        }
        if let Some(ov) = other {
            case.other = Some(parse_module(&ctx, &ov, "other")?);
        }
        Ok(case)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingContext;

    #[test]
    fn descriptor_round_trip() {
        let ctx = RingContext::integers_mod(12);
        let m = PresentedModule::from_factors(&ctx, &[Element::int(4), Element::int(6)]).unwrap();
        let i = Ideal::principal(&ctx, &Element::int(2)).unwrap();
        let j = Ideal::principal(&ctx, &Element::int(3)).unwrap();
        let mut c = Case::new(m.clone(), i.clone(), j.clone());
        c.sub = vec![vec![Element::int(2), Element::int(3)]];
        c.other = Some(PresentedModule::cyclic(&ctx, &Element::int(6)).unwrap());
        let back = Case::from_descriptor(&c.descriptor().to_string()).unwrap();
        assert_eq!(back.module, m);
        assert_eq!(back.pairs, vec![(i, j)]);
        assert_eq!(back.sub, c.sub);
        assert_eq!(back.other, c.other);
    }
}
