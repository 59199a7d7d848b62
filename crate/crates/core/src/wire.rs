//! JSON wire format and built-in names.
//!
//! Forms are `{"gram": [[...]]}`, GF(2) forms `{"gram2": [[...]]}`, Laurent
//! polynomials `{"poly": {"<exp>": coef}}`, hermitian forms
//! `{"lambda_gram": [[poly, ...], ...]}`. Descriptors are objects with a
//! `"pi1"` field, or built-in names joined by `#` (left-associative).

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::domination::{Certificate, Decision, Evidence};
use crate::intforms::{FormError, IntForm, Invariants};
use crate::laurent::{self, AxiomRegistry, HermitianLambdaForm, LambdaMatrix, LaurentError, LaurentPoly};
use crate::manifolds::{
    connected_sum, non_extension_pair, validate, Decomposition, ExtensionStatus, ManifoldDescriptor, ManifoldError,
    SigmaLabel, Violation, W2Type,
};
use crate::modtwo::{ModTwoError, ModTwoForm};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WireError {
    #[error("{0}")]
    Shape(String),
    #[error("unknown name {0:?}")]
    UnknownName(String),
    #[error(transparent)]
    Form(#[from] FormError),
    #[error(transparent)]
    ModTwo(#[from] ModTwoError),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    #[error(transparent)]
    Manifold(#[from] ManifoldError),
    #[error("descriptor violates: {}", .0.iter().map(|v| format!("{} ({v})", v.name())).collect::<Vec<_>>().join("; "))]
    Invalid(Vec<Violation>),
}

fn shape(msg: impl Into<String>) -> WireError {
    WireError::Shape(msg.into())
}

fn int_matrix(v: &Value, what: &str) -> Result<Vec<Vec<i64>>, WireError> {
    let rows = v.as_array().ok_or_else(|| shape(format!("{what} must be an array of rows")))?;
    rows.iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(|| shape(format!("{what} rows must be arrays")))?
                .iter()
                .map(|x| x.as_i64().ok_or_else(|| shape(format!("{what} entries must be integers"))))
                .collect()
        })
        .collect()
}

fn parse_args(s: &str, name: &str) -> Option<Vec<u64>> {
    let inner = s.strip_prefix(name)?.strip_prefix('(')?.strip_suffix(')')?;
    inner.split(',').map(|a| a.trim().parse().ok()).collect()
}

// ---- integer forms ----

pub fn form_to_json(f: &IntForm) -> Value {
    json!({ "gram": f.gram() })
}

/// Accepts `{"gram": ...}` or a built-in name string.
pub fn form_from_json(v: &Value) -> Result<IntForm, WireError> {
    if let Some(name) = v.as_str() {
        return named_form(name);
    }
    let gram = v.get("gram").ok_or_else(|| shape("form object needs a \"gram\" field"))?;
    Ok(IntForm::new(int_matrix(gram, "gram")?)?)
}

/// `H`, `E8`, `-E8`, `I(p,q)`, `A1`, `0`, joined with `+`.
pub fn named_form(name: &str) -> Result<IntForm, WireError> {
    name.split('+').try_fold(IntForm::zero(), |acc, part| {
        let part = part.trim();
        let f = match part {
            "H" => IntForm::hyperbolic(),
            "E8" => IntForm::e8(),
            "-E8" => IntForm::e8().negated(),
            "A1" => IntForm::a1(),
            "0" => IntForm::zero(),
            _ => match parse_args(part, "I").as_deref() {
                Some([p, q]) => IntForm::diagonal(*p as usize, *q as usize),
                _ => return Err(WireError::UnknownName(part.to_string())),
            },
        };
        Ok(acc.direct_sum(&f))
    })
}

/// Reads a form from a JSON text, or treats the text as a built-in name.
pub fn parse_form(text: &str) -> Result<IntForm, WireError> {
    let t = text.trim();
    if t.starts_with('{') {
        let v: Value = serde_json::from_str(t).map_err(|e| shape(e.to_string()))?;
        form_from_json(&v)
    } else {
        named_form(t)
    }
}

pub fn invariants_to_json(i: &Invariants) -> Value {
    json!({ "rank": i.rank, "signature": i.signature, "parity": i.parity.to_string() })
}

// ---- GF(2) forms ----

pub fn mod2_to_json(f: &ModTwoForm) -> Value {
    json!({ "gram2": f.matrix() })
}

/// Accepts `{"gram2": ...}` or `H2`, `I2(n)` joined with `+`.
pub fn mod2_from_json(v: &Value) -> Result<ModTwoForm, WireError> {
    if let Some(name) = v.as_str() {
        return name.split('+').try_fold(ModTwoForm::zero(), |acc, part| {
            let part = part.trim();
            let f = match (part, parse_args(part, "I2").as_deref()) {
                ("H2", _) => ModTwoForm::hyperbolic(),
                (_, Some([n])) => ModTwoForm::identity(*n as usize),
                _ => return Err(WireError::UnknownName(part.to_string())),
            };
            Ok(acc.direct_sum(&f))
        });
    }
    let gram = int_matrix(v.get("gram2").ok_or_else(|| shape("GF(2) form needs a \"gram2\" field"))?, "gram2")?;
    let bits = gram
        .into_iter()
        .map(|r| r.into_iter().map(|x| u8::try_from(x).unwrap_or(u8::MAX)).collect())
        .collect();
    Ok(ModTwoForm::new(bits)?)
}

// ---- Laurent polynomials and hermitian forms ----

fn bigint_to_json(c: &BigInt) -> Value {
    c.to_i64().map_or_else(|| Value::String(c.to_string()), Value::from)
}

pub fn poly_to_json(p: &LaurentPoly) -> Value {
    let terms: Map<String, Value> = p.terms().map(|(e, c)| (e.to_string(), bigint_to_json(c))).collect();
    json!({ "poly": terms })
}

pub fn poly_from_json(v: &Value) -> Result<LaurentPoly, WireError> {
    if let Some(c) = v.as_i64() {
        return Ok(LaurentPoly::constant(c));
    }
    let terms = v.get("poly").and_then(Value::as_object).ok_or_else(|| shape("polynomial must be {\"poly\": {...}}"))?;
    let mut out = Vec::with_capacity(terms.len());
    for (e, c) in terms {
        let exp: i64 = e.parse().map_err(|_| shape(format!("bad exponent {e:?}")))?;
        let coef: BigInt = match c {
            Value::Number(n) => n.as_i64().map(BigInt::from).ok_or_else(|| shape("coefficients must be integers"))?,
            Value::String(s) => s.parse().map_err(|_| shape(format!("bad coefficient {s:?}")))?,
            _ => return Err(shape("coefficients must be integers")),
        };
        out.push((exp, coef));
    }
    Ok(LaurentPoly::from_terms(out))
}

fn poly_matrix_to_json(m: &LambdaMatrix) -> Value {
    Value::Array(m.rows().iter().map(|r| Value::Array(r.iter().map(poly_to_json).collect())).collect())
}

fn poly_matrix_from_json(v: &Value, what: &str) -> Result<Vec<Vec<LaurentPoly>>, WireError> {
    let rows = v.as_array().ok_or_else(|| shape(format!("{what} must be an array of rows")))?;
    let n = rows.len();
    let out: Vec<Vec<LaurentPoly>> = rows
        .iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(|| shape(format!("{what} rows must be arrays")))?
                .iter()
                .map(poly_from_json)
                .collect()
        })
        .collect::<Result<_, _>>()?;
    if out.iter().any(|r| r.len() != n) {
        return Err(shape(format!("{what} must be square")));
    }
    Ok(out)
}

pub fn lambda_form_to_json(f: &HermitianLambdaForm) -> Value {
    json!({ "lambda_gram": poly_matrix_to_json(f.matrix()) })
}

/// Accepts `{"lambda_gram": ...}` or the built-in name `A`.
pub fn lambda_form_from_json(v: &Value) -> Result<HermitianLambdaForm, WireError> {
    match v.as_str() {
        Some("A") => return Ok(laurent::ht_matrix_a()),
        Some(other) => return Err(WireError::UnknownName(other.to_string())),
        None => {}
    }
    let rows = poly_matrix_from_json(v.get("lambda_gram").ok_or_else(|| shape("needs a \"lambda_gram\" field"))?, "lambda_gram")?;
    Ok(HermitianLambdaForm::new(rows)?)
}

fn extension_to_json(s: &ExtensionStatus) -> Value {
    match s {
        ExtensionStatus::ExtendedWitness { p, b } => json!({ "extended": { "p": poly_matrix_to_json(p), "b": form_to_json(b) } }),
        ExtensionStatus::RegisteredNonExtended(id) => json!({ "registered": id }),
        ExtensionStatus::Unknown => json!("unknown"),
    }
}

fn extension_from_json(v: &Value) -> Result<ExtensionStatus, WireError> {
    if v.as_str() == Some("unknown") {
        return Ok(ExtensionStatus::Unknown);
    }
    if let Some(id) = v.get("registered").and_then(Value::as_str) {
        return Ok(ExtensionStatus::RegisteredNonExtended(id.to_string()));
    }
    if let Some(w) = v.get("extended") {
        let p = poly_matrix_from_json(w.get("p").ok_or_else(|| shape("extension witness needs \"p\""))?, "p")?;
        let b = form_from_json(w.get("b").ok_or_else(|| shape("extension witness needs \"b\""))?)?;
        return Ok(ExtensionStatus::ExtendedWitness { p: LambdaMatrix::from_rows(p), b });
    }
    Err(shape("extension_status must be \"unknown\", {\"registered\": id} or {\"extended\": {\"p\", \"b\"}}"))
}

// ---- descriptors ----

fn w2_name(w: W2Type) -> &'static str {
    match w {
        W2Type::TypeI => "I",
        W2Type::TypeII => "II",
        W2Type::TypeIII => "III",
        W2Type::Spin => "spin",
        W2Type::NonSpin => "nonspin",
    }
}

fn w2_from_name(s: &str) -> Result<W2Type, WireError> {
    Ok(match s {
        "I" => W2Type::TypeI,
        "II" => W2Type::TypeII,
        "III" => W2Type::TypeIII,
        "spin" => W2Type::Spin,
        "nonspin" => W2Type::NonSpin,
        _ => return Err(shape(format!("unknown w2-type {s:?}"))),
    })
}

pub fn descriptor_to_json(d: &ManifoldDescriptor) -> Value {
    match d {
        ManifoldDescriptor::SimplyConnected { form, ks } => json!({ "pi1": "1", "form": form_to_json(form), "ks": ks }),
        ManifoldDescriptor::InfiniteCyclic { int_form, lambda_form, extension_status, ks } => {
            let mut v = json!({
                "pi1": "Z",
                "form": form_to_json(int_form),
                "ks": ks,
                "extension_status": extension_to_json(extension_status),
            });
            if let Some(l) = lambda_form {
                v["lambda_form"] = lambda_form_to_json(l);
            }
            v
        }
        ManifoldDescriptor::FiniteCyclic { n, form, w2, ks } => {
            json!({ "pi1": { "Zn": n }, "form": form_to_json(form), "w2": w2_name(*w2), "ks": ks })
        }
    }
}

/// Structural parse without validation.
pub fn descriptor_from_json(v: &Value) -> Result<ManifoldDescriptor, WireError> {
    let form = form_from_json(v.get("form").ok_or_else(|| shape("descriptor needs a \"form\""))?)?;
    let ks = v.get("ks").and_then(Value::as_u64).ok_or_else(|| shape("descriptor needs an integer \"ks\""))?;
    let ks = u8::try_from(ks).map_err(|_| shape("ks out of range"))?;
    let pi1 = v.get("pi1").ok_or_else(|| shape("descriptor needs \"pi1\""))?;
    if let Some(n) = pi1.get("Zn") {
        let n = n.as_u64().ok_or_else(|| shape("Zn order must be a non-negative integer"))?;
        let w2 = w2_from_name(v.get("w2").and_then(Value::as_str).ok_or_else(|| shape("finite cyclic descriptor needs \"w2\""))?)?;
        return Ok(ManifoldDescriptor::FiniteCyclic { n, form, w2, ks });
    }
    match pi1.as_str() {
        Some("1") => Ok(ManifoldDescriptor::SimplyConnected { form, ks }),
        Some("Z") => {
            let lambda_form = v.get("lambda_form").map(lambda_form_from_json).transpose()?;
            let extension_status =
                v.get("extension_status").map(extension_from_json).transpose()?.unwrap_or(ExtensionStatus::Unknown);
            Ok(ManifoldDescriptor::InfiniteCyclic { int_form: form, lambda_form, extension_status, ks })
        }
        _ => Err(shape("pi1 must be \"1\", \"Z\" or {\"Zn\": n}")),
    }
}

/// A single built-in manifold name.
pub fn named_manifold(name: &str) -> Result<ManifoldDescriptor, WireError> {
    let name = name.trim();
    Ok(match name {
        "S4" => ManifoldDescriptor::s4(),
        "S1xS3" => ManifoldDescriptor::s1_x_s3(),
        "S2xS2" => ManifoldDescriptor::s2_x_s2(),
        "CP2" => ManifoldDescriptor::cp2(),
        "CP2bar" => ManifoldDescriptor::cp2_bar(),
        "E8mfd" => ManifoldDescriptor::e8_manifold(),
        "XA" => non_extension_pair().0,
        "YA" => non_extension_pair().1,
        _ => {
            let label = match (
                parse_args(name, "SigmaStar").as_deref(),
                parse_args(name, "Sigma0").as_deref(),
                parse_args(name, "Sigma1").as_deref(),
            ) {
                (Some([n]), _, _) if n % 2 == 1 => SigmaLabel::SigmaStar(*n),
                (_, Some([n]), _) if n % 2 == 0 => SigmaLabel::SigmaZero(*n),
                (_, _, Some([n, i])) if n % 2 == 0 && *i <= 1 => SigmaLabel::SigmaOne(*n, *i as u8),
                _ => return Err(WireError::UnknownName(name.to_string())),
            };
            label.descriptor()
        }
    })
}

/// `A#B#...`, summed left to right.
pub fn manifold_expression(expr: &str) -> Result<ManifoldDescriptor, WireError> {
    let mut parts = expr.split('#');
    let first = named_manifold(parts.next().unwrap_or_default())?;
    parts.try_fold(first, |acc, p| Ok(connected_sum(&acc, &named_manifold(p)?)?))
}

/// Parses a JSON descriptor or a name expression, then validates it.
pub fn parse_descriptor(text: &str, registry: &AxiomRegistry) -> Result<ManifoldDescriptor, WireError> {
    let t = text.trim();
    let d = if t.starts_with('{') {
        let v: Value = serde_json::from_str(t).map_err(|e| shape(e.to_string()))?;
        descriptor_from_json(&v)?
    } else {
        manifold_expression(t.trim_matches('"'))?
    };
    let violations = validate(&d, registry);
    if violations.is_empty() {
        Ok(d)
    } else {
        Err(WireError::Invalid(violations))
    }
}

// ---- decisions ----

fn decomposition_to_json(p: &Decomposition) -> Value {
    json!({ "sigma": p.sigma.to_string(), "m": descriptor_to_json(&p.m) })
}

pub fn evidence_to_json(e: &Evidence) -> Value {
    let mut v = match e {
        Evidence::Split { x, y, complement } => json!({
            "x": invariants_to_json(&x.invariants()),
            "y": invariants_to_json(&y.invariants()),
            "complement": invariants_to_json(complement),
        }),
        Evidence::SplitZ2 { x, y } => json!({ "x": x.class().to_string(), "y": y.class().to_string() }),
        Evidence::Decomposition { manifold, part } => {
            json!({ "manifold": descriptor_to_json(manifold), "decomposition": decomposition_to_json(part) })
        }
        Evidence::Indefiniteness { form, at_least } => {
            json!({ "b2_minus_abs_sigma": form.indefiniteness(), "at_least": at_least })
        }
        Evidence::Homeomorphic { .. } => json!({}),
        Evidence::HomotopyEquivalent { a, b } => json!({ "a": a.to_string(), "b": b.to_string() }),
        Evidence::RankZeroTarget { y } => json!({ "target": descriptor_to_json(y) }),
        Evidence::Stabilization { k } => json!({ "copies_of_s2xs2": k }),
        Evidence::Summand { m, form } => {
            json!({ "summand": descriptor_to_json(m), "stabilized": invariants_to_json(&form.invariants()) })
        }
    };
    v["kind"] = json!(e.kind());
    v
}

fn certificate_to_json(c: &Certificate) -> Value {
    json!({
        "rule": c.rule.tag(),
        "labels": c.labels,
        "evidence": c.evidence.iter().map(evidence_to_json).collect::<Vec<_>>(),
    })
}

pub fn decision_to_json(d: &Decision) -> Value {
    match d {
        Decision::Yes(c) => json!({ "outcome": "yes", "certificate": certificate_to_json(c) }),
        Decision::No(o) => {
            let values: Map<String, Value> = o.values.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
            json!({ "outcome": "no", "obstruction": { "rule": o.rule.tag(), "detail": o.detail, "values": values } })
        }
        Decision::Unknown(u) => json!({ "outcome": "unknown", "reason": u.rule.tag(), "detail": u.detail }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_forms() {
        assert_eq!(named_form("H+E8").unwrap().invariants(), IntForm::hyperbolic().direct_sum(&IntForm::e8()).invariants());
        assert_eq!(named_form("I(2,1)").unwrap(), IntForm::diagonal(2, 1));
        assert!(matches!(named_form("E7"), Err(WireError::UnknownName(_))));
    }

    #[test]
    fn poly_json() {
        let v = json!({"poly": {"-1": 1, "1": 1}});
        let p = poly_from_json(&v).unwrap();
        assert_eq!(p, LaurentPoly::s());
        assert_eq!(poly_to_json(&p), v);
    }

    #[test]
    fn expressions() {
        let reg = AxiomRegistry::builtin();
        assert_eq!(parse_descriptor("S1xS3", &reg).unwrap(), ManifoldDescriptor::s1_x_s3());
        let d = parse_descriptor("Sigma0(2)#S2xS2", &reg).unwrap();
        assert_eq!(d, ManifoldDescriptor::FiniteCyclic { n: 2, form: IntForm::hyperbolic(), w2: W2Type::TypeII, ks: 0 });
        let bad = r#"{"pi1":{"Zn":2},"form":{"gram":[[1]]},"w2":"II","ks":0}"#;
        match parse_descriptor(bad, &reg) {
            Err(WireError::Invalid(v)) => assert_eq!(v[0].name(), "w2-parity"),
            other => panic!("expected a validation error, got {other:?}"),
        }
        assert!(matches!(parse_descriptor("Sigma0(3)", &reg), Err(WireError::UnknownName(_))));
    }

    #[test]
    fn descriptor_round_trip() {
        let (x, y) = non_extension_pair();
        for d in [x, y, ManifoldDescriptor::e8_manifold(), SigmaLabel::SigmaOne(4, 1).descriptor()] {
            assert_eq!(descriptor_from_json(&descriptor_to_json(&d)).unwrap(), d);
        }
    }
}
