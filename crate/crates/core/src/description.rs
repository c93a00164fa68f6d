//! JSON module descriptions.
//!
//! ```json
//! {
//!   "ring": {"base": "poly", "char": 2},
//!   "module": {"generators": 1, "relations": [[[0, 0, 1]]]},
//!   "ideals": {"I": [[0, 0, 1]], "J": [[0, 1]]}
//! }
//! ```
//!
//! Integers are decimal strings (plain JSON integers are accepted too);
//! polynomials are arrays of coefficients in ascending degree. A `modulus`
//! under `ring` turns the context into a quotient ring.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::fpmodule::PresentedModule;
use crate::ring::{BaseKind, BaseRing, Element, Ideal, RingContext};

/// A ring context, a presented module and named ideals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleDescription {
    pub context: RingContext,
    pub module: PresentedModule,
    pub ideals: BTreeMap<String, Ideal>,
}

fn err(path: &str, msg: impl std::fmt::Display) -> Error {
    Error::Parse(format!("{path}: {msg}"))
}

fn object<'a>(v: &'a Value, path: &str, allowed: &[&str]) -> Result<&'a Map<String, Value>> {
    let obj = v.as_object().ok_or_else(|| err(path, "expected an object"))?;
    for key in obj.keys() {
        if !allowed.contains(&key.as_str()) {
            return Err(err(path, format!("unknown field `{key}`")));
        }
    }
    Ok(obj)
}

fn array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| err(path, "expected an array"))
}

fn parse_int(v: &Value, path: &str) -> Result<BigInt> {
    match v {
        Value::String(s) => s.trim().parse().map_err(|_| err(path, format!("`{s}` is not a decimal integer"))),
        Value::Number(n) => n.as_i64().map(BigInt::from).ok_or_else(|| err(path, format!("{n} is not an integer"))),
        _ => Err(err(path, "expected an integer (decimal string)")),
    }
}

pub(crate) fn parse_element(ring: BaseRing, v: &Value, path: &str) -> Result<Element> {
    match ring {
        BaseRing::Integers => Ok(Element::Int(parse_int(v, path)?)),
        BaseRing::Polynomials { .. } => {
            let coeffs = array(v, path).map_err(|_| err(path, "expected a coefficient array"))?;
            let mut small = Vec::with_capacity(coeffs.len());
            for (k, c) in coeffs.iter().enumerate() {
                let c = parse_int(c, &format!("{path}[{k}]"))?;
                let p = BigInt::from(ring.characteristic().expect("polynomial ring"));
                let r = ((c % &p) + &p) % &p;
                small.push(i64::try_from(r).expect("residue below 2^31"));
            }
            Ok(ring.poly(&small))
        }
    }
}

/// Parse one element of `ctx` written in the description syntax, e.g. `2`
/// or `[1, 0, 1]`.
pub fn parse_element_text(ctx: &RingContext, text: &str) -> Result<Element> {
    let v: Value = serde_json::from_str(text.trim())
        .or_else(|_| serde_json::from_str(&format!("\"{}\"", text.trim())))
        .map_err(|e| Error::Parse(format!("element `{text}`: {e}")))?;
    Ok(ctx.reduce(&parse_element(ctx.base(), &v, "element")?))
}

pub(crate) fn emit_element(e: &Element) -> Value {
    match e {
        Element::Int(n) => Value::String(n.to_string()),
        Element::Poly(c) => json!(c),
    }
}

pub(crate) fn parse_context(v: &Value) -> Result<RingContext> {
    let obj = object(v, "ring", &["base", "char", "modulus"])?;
    let base = obj.get("base").ok_or_else(|| err("ring", "missing field `base`"))?;
    let kind = match base.as_str() {
        Some("int") => BaseKind::Integers,
        Some("poly") => BaseKind::PolynomialsOverPrimeField,
        _ => return Err(err("ring.base", "expected \"int\" or \"poly\"")),
    };
    let ch = match obj.get("char") {
        None => None,
        Some(c) => {
            let n = parse_int(c, "ring.char")?;
            Some(u64::try_from(n).map_err(|_| err("ring.char", "out of range"))?)
        }
    };
    let provisional = RingContext::make(kind, ch, None).map_err(|e| err("ring", e))?;
    let modulus = match obj.get("modulus") {
        None => None,
        Some(m) => Some(parse_element(provisional.base(), m, "ring.modulus")?),
    };
    RingContext::make(kind, ch, modulus).map_err(|e| err("ring.modulus", e))
}

/// Parse a `{"generators": g, "relations": [...]}` object over `ctx`.
pub(crate) fn parse_module(ctx: &RingContext, v: &Value, path: &str) -> Result<PresentedModule> {
    let ring = ctx.base();
    let mobj = object(v, path, &["generators", "relations"])?;
    let g = mobj
        .get("generators")
        .and_then(Value::as_u64)
        .ok_or_else(|| err(&format!("{path}.generators"), "expected a non-negative integer"))? as usize;
    let mut rows = Vec::new();
    if let Some(rv) = mobj.get("relations") {
        for (r, row) in array(rv, &format!("{path}.relations"))?.iter().enumerate() {
            let rpath = format!("{path}.relations[{r}]");
            let entries = array(row, &rpath)?;
            if entries.len() != g {
                return Err(err(&rpath, format!("expected {g} entries, found {}", entries.len())));
            }
            let parsed = entries
                .iter()
                .enumerate()
                .map(|(c, e)| parse_element(ring, e, &format!("{rpath}[{c}]")))
                .collect::<Result<Vec<_>>>()?;
            rows.push(parsed);
        }
    }
    PresentedModule::from_rows(ctx, g, rows).map_err(|e| err(path, e))
}

pub(crate) fn emit_module(m: &PresentedModule) -> Value {
    let relations: Vec<Value> =
        m.relations().row_vecs().iter().map(|r| Value::Array(r.iter().map(emit_element).collect())).collect();
    json!({"generators": m.generator_count(), "relations": relations})
}

pub(crate) fn emit_ring(ctx: &RingContext) -> Value {
    let mut ring = Map::new();
    match ctx.base() {
        BaseRing::Integers => {
            ring.insert("base".into(), json!("int"));
        }
        BaseRing::Polynomials { characteristic } => {
            ring.insert("base".into(), json!("poly"));
            ring.insert("char".into(), json!(characteristic));
        }
    }
    if let Some(m) = ctx.modulus() {
        ring.insert("modulus".into(), emit_element(m));
    }
    Value::Object(ring)
}

impl ModuleDescription {
    pub fn parse(text: &str) -> Result<Self> {
        let root: Value = serde_json::from_str(text).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))?;
        let obj = object(&root, "description", &["ring", "module", "ideals"])?;
        let context = parse_context(obj.get("ring").ok_or_else(|| err("description", "missing field `ring`"))?)?;
        let ring = context.base();

        let mv = obj.get("module").ok_or_else(|| err("description", "missing field `module`"))?;
        let module = parse_module(&context, mv, "module")?;

        let mut ideals = BTreeMap::new();
        if let Some(iv) = obj.get("ideals") {
            let iobj = iv.as_object().ok_or_else(|| err("ideals", "expected an object"))?;
            for (name, gens) in iobj {
                let path = format!("ideals.{name}");
                let gens = array(gens, &path)?
                    .iter()
                    .enumerate()
                    .map(|(k, e)| parse_element(ring, e, &format!("{path}[{k}]")))
                    .collect::<Result<Vec<_>>>()?;
                let ideal = Ideal::from_generators(&context, &gens).map_err(|e| err(&path, e))?;
                ideals.insert(name.clone(), ideal);
            }
        }
        Ok(ModuleDescription { context, module, ideals })
    }

    pub fn to_json(&self) -> Value {
        let ring = emit_ring(&self.context);
        let ideals: Map<String, Value> =
            self.ideals.iter().map(|(k, i)| (k.clone(), Value::Array(vec![emit_element(i.generator())]))).collect();
        json!({
            "ring": ring,
            "module": emit_module(&self.module),
            "ideals": ideals,
        })
    }

    pub fn emit(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("JSON values serialize")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_quotient_ring_description() {
        let d = ModuleDescription::parse(
            r#"{"ring": {"base": "int", "modulus": "6"},
                "module": {"generators": 1, "relations": []},
                "ideals": {"I": ["3"]}}"#,
        )
        .unwrap();
        assert_eq!(d.context.to_string(), "Z/6");
        assert_eq!(d.ideals["I"].generator(), &Element::int(3));
        assert_eq!(d.module.invariant_factors().torsion_factors, vec![Element::int(6)]);
    }

    #[test]
    fn round_trip() {
        let text = r#"{"ring": {"base": "poly", "char": 2},
                       "module": {"generators": 1, "relations": [[[0, 0, 1]]]},
                       "ideals": {"I": [[0, 0, 1]], "J": [[0, 1]]}}"#;
        let d = ModuleDescription::parse(text).unwrap();
        assert_eq!(ModuleDescription::parse(&d.emit()).unwrap(), d);
    }

    #[test]
    fn errors_name_the_field() {
        let e = ModuleDescription::parse(
            r#"{"ring": {"base": "int"}, "module": {"generators": 2, "relations": [["1", "2"], ["3"]]}}"#,
        )
        .unwrap_err();
        assert_eq!(e, Error::Parse("module.relations[1]: expected 2 entries, found 1".into()));
        let e = ModuleDescription::parse(r#"{"ring": {"base": "poly", "char": 4}, "module": {"generators": 0}}"#)
            .unwrap_err();
        assert!(e.to_string().starts_with("ring:"));
        let e =
            ModuleDescription::parse(r#"{"ring": {"base": "int"}, "module": {"generators": 1, "relations": [["x"]]}}"#)
                .unwrap_err();
        assert!(e.to_string().starts_with("module.relations[0][0]"));
        assert!(ModuleDescription::parse("{").unwrap_err().to_string().contains("line 1"));
    }
}
