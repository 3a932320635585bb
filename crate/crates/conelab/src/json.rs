//! JSON encoding of the exact scalar types and the input document schemas.
//!
//! Number encoding: integers as (arbitrary-precision) JSON numbers,
//! non-integer rationals as "p/q" strings, quadratic numbers as two-element
//! arrays [a, b] meaning a + b*sqrt(n), with the radicand declared once per
//! document.

use crate::cone::{Cone, HalfSpace};
use crate::error::{Error, Result};
use crate::frobenius::AlgebraElement;
use crate::grval::MonomialValuation;
use crate::mat::IntMatrix;
use crate::monoid::AffineMonoid;
use crate::num::{Int, QuadNum, Rat};
use crate::vecs::{IntVec, QVec};
use num_traits::Zero;
use serde_json::{Map, Number, Value};
use std::str::FromStr;

pub fn int_to_value(i: &Int) -> Value {
    Value::Number(
        Number::from_str(&i.to_string()).expect("integer literal is a valid JSON number"),
    )
}

pub fn rat_to_value(r: &Rat) -> Value {
    if r.is_integer() {
        int_to_value(&r.to_integer())
    } else {
        Value::String(format!("{}/{}", r.numer(), r.denom()))
    }
}

pub fn qnum_to_value(q: &QuadNum) -> Value {
    if q.b.is_zero() {
        rat_to_value(&q.a)
    } else {
        Value::Array(vec![rat_to_value(&q.a), rat_to_value(&q.b)])
    }
}

pub fn int_vec_to_value(v: &[Int]) -> Value {
    Value::Array(v.iter().map(int_to_value).collect())
}

pub fn qvec_to_value(v: &QVec) -> Value {
    Value::Array(v.iter().map(qnum_to_value).collect())
}

pub fn parse_int(v: &Value) -> Result<Int> {
    match v {
        Value::Number(n) => {
            let s = n.to_string();
            if s.contains('.') || s.contains('e') || s.contains('E') {
                return Err(Error::Parse(format!("expected an integer, got {}", s)));
            }
            Int::from_str(&s).map_err(|_| Error::Parse(format!("bad integer {}", s)))
        }
        Value::String(s) => {
            let r = parse_rat_str(s)?;
            if r.is_integer() {
                Ok(r.to_integer())
            } else {
                Err(Error::Parse(format!("expected an integer, got {}", s)))
            }
        }
        _ => Err(Error::Parse(format!("expected an integer, got {}", v))),
    }
}

fn parse_rat_str(s: &str) -> Result<Rat> {
    if let Some((p, q)) = s.split_once('/') {
        let num = Int::from_str(p.trim()).map_err(|_| Error::Parse(format!("bad rational {}", s)))?;
        let den = Int::from_str(q.trim()).map_err(|_| Error::Parse(format!("bad rational {}", s)))?;
        if den.is_zero() {
            return Err(Error::Parse("zero denominator".into()));
        }
        Ok(Rat::new(num, den))
    } else {
        let num = Int::from_str(s.trim()).map_err(|_| Error::Parse(format!("bad rational {}", s)))?;
        Ok(Rat::from_integer(num))
    }
}

pub fn parse_rat(v: &Value) -> Result<Rat> {
    match v {
        Value::Number(_) => Ok(Rat::from_integer(parse_int(v)?)),
        Value::String(s) => parse_rat_str(s),
        _ => Err(Error::Parse(format!("expected a rational, got {}", v))),
    }
}

pub fn parse_qnum(v: &Value, quad_n: Option<u64>) -> Result<QuadNum> {
    match v {
        Value::Array(parts) => {
            if parts.len() != 2 {
                return Err(Error::Parse("quadratic number needs exactly [a, b]".into()));
            }
            let a = parse_rat(&parts[0])?;
            let b = parse_rat(&parts[1])?;
            if b.is_zero() {
                return Ok(QuadNum::rational(a));
            }
            let n = quad_n.ok_or_else(|| {
                Error::Parse("quadratic entry but no quad_n declared in the document".into())
            })?;
            QuadNum::new(a, b, n)
        }
        _ => Ok(QuadNum::rational(parse_rat(v)?)),
    }
}

pub fn parse_int_vec(v: &Value) -> Result<IntVec> {
    let arr = v.as_array().ok_or_else(|| Error::Parse("expected a vector".into()))?;
    arr.iter().map(parse_int).collect()
}

pub fn parse_rat_vec(v: &Value) -> Result<Vec<Rat>> {
    let arr = v.as_array().ok_or_else(|| Error::Parse("expected a vector".into()))?;
    arr.iter().map(parse_rat).collect()
}

pub fn parse_qvec(v: &Value, quad_n: Option<u64>) -> Result<QVec> {
    let arr = v.as_array().ok_or_else(|| Error::Parse("expected a vector".into()))?;
    arr.iter().map(|x| parse_qnum(x, quad_n)).collect()
}

/// The cone input document.
pub struct ConeDoc {
    pub cone: Cone,
    pub alpha: Option<IntVec>,
    pub raw: Value,
}

pub fn parse_cone_doc(v: &Value) -> Result<ConeDoc> {
    let obj = v.as_object().ok_or_else(|| Error::Parse("cone document must be an object".into()))?;
    let rank = obj
        .get("rank")
        .ok_or_else(|| Error::Parse("missing rank".into()))
        .and_then(parse_int)?;
    let rank: usize = rank
        .to_string()
        .parse()
        .map_err(|_| Error::Parse("rank out of range".into()))?;
    let quad_n = match obj.get("quad_n") {
        None | Some(Value::Null) => None,
        Some(x) => {
            let n = parse_int(x)?;
            Some(
                n.to_string()
                    .parse::<u64>()
                    .map_err(|_| Error::Parse("quad_n out of range".into()))?,
            )
        }
    };
    let generators = match obj.get("generators") {
        None | Some(Value::Null) => None,
        Some(Value::Array(gs)) => {
            Some(gs.iter().map(|g| parse_qvec(g, quad_n)).collect::<Result<Vec<_>>>()?)
        }
        Some(x) => return Err(Error::Parse(format!("bad generators {}", x))),
    };
    let inequalities = match obj.get("inequalities") {
        None | Some(Value::Null) => None,
        Some(Value::Array(hs)) => {
            let mut out = Vec::new();
            for h in hs {
                let hobj = h
                    .as_object()
                    .ok_or_else(|| Error::Parse("inequality must be an object".into()))?;
                let normal = hobj
                    .get("normal")
                    .ok_or_else(|| Error::Parse("inequality missing normal".into()))?;
                let strict = match hobj.get("strict") {
                    None | Some(Value::Null) => false,
                    Some(Value::Bool(b)) => *b,
                    Some(x) => return Err(Error::Parse(format!("bad strict flag {}", x))),
                };
                out.push(HalfSpace::new(parse_qvec(normal, quad_n)?, strict));
            }
            Some(out)
        }
        Some(x) => return Err(Error::Parse(format!("bad inequalities {}", x))),
    };
    let alpha = match obj.get("alpha") {
        None | Some(Value::Null) => None,
        Some(x) => Some(parse_int_vec(x)?),
    };
    let cone = Cone::from_parts(rank, quad_n, generators, inequalities)?;
    Ok(ConeDoc { cone, alpha, raw: v.clone() })
}

/// Canonical document for a cone: both representations, sorted keys.
pub fn cone_to_doc(cone: &Cone) -> Result<Value> {
    let mut obj = Map::new();
    obj.insert("rank".into(), Value::Number(Number::from(cone.rank() as u64)));
    obj.insert(
        "quad_n".into(),
        match cone.quad_n() {
            Some(n) => Value::Number(Number::from(n)),
            None => Value::Null,
        },
    );
    if cone.is_rational() {
        let gens = cone.generators_int()?;
        obj.insert(
            "generators".into(),
            Value::Array(gens.iter().map(|g| int_vec_to_value(g)).collect()),
        );
    }
    let hs = cone.halfspaces()?;
    let mut ineqs: Vec<Value> = Vec::new();
    for h in hs {
        let mut hobj = Map::new();
        hobj.insert("normal".into(), qvec_to_value(&h.normal));
        hobj.insert("strict".into(), Value::Bool(h.strict));
        ineqs.push(Value::Object(hobj));
    }
    obj.insert("inequalities".into(), Value::Array(ineqs));
    Ok(Value::Object(obj))
}

/// Monoid document: { "rank": d, "monoid_generators": [[...]] }.
pub fn parse_monoid_doc(v: &Value) -> Result<AffineMonoid> {
    let obj =
        v.as_object().ok_or_else(|| Error::Parse("monoid document must be an object".into()))?;
    let rank: usize = parse_int(
        obj.get("rank").ok_or_else(|| Error::Parse("missing rank".into()))?,
    )?
    .to_string()
    .parse()
    .map_err(|_| Error::Parse("rank out of range".into()))?;
    let gens = obj
        .get("monoid_generators")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("missing monoid_generators".into()))?;
    let gens: Vec<IntVec> = gens.iter().map(parse_int_vec).collect::<Result<Vec<_>>>()?;
    AffineMonoid::new(rank, gens)
}

/// Algebra element document: { "p": 2, "terms": [{"exp": [...], "coeff": 1}] }.
pub fn parse_element_doc(v: &Value) -> Result<AlgebraElement> {
    let obj =
        v.as_object().ok_or_else(|| Error::Parse("element document must be an object".into()))?;
    let p: u64 = parse_int(obj.get("p").ok_or_else(|| Error::Parse("missing p".into()))?)?
        .to_string()
        .parse()
        .map_err(|_| Error::Parse("p out of range".into()))?;
    let terms = obj
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("missing terms".into()))?;
    let mut parsed = Vec::new();
    for t in terms {
        let tobj = t.as_object().ok_or_else(|| Error::Parse("term must be an object".into()))?;
        let exp = parse_int_vec(
            tobj.get("exp").ok_or_else(|| Error::Parse("term missing exp".into()))?,
        )?;
        let coeff: u64 =
            parse_int(tobj.get("coeff").ok_or_else(|| Error::Parse("term missing coeff".into()))?)?
                .to_string()
                .parse()
                .map_err(|_| Error::Parse("coeff out of range".into()))?;
        parsed.push((exp, coeff));
    }
    AlgebraElement::from_terms(p, parsed)
}

pub fn element_to_value(e: &AlgebraElement) -> Value {
    let mut obj = Map::new();
    obj.insert("p".into(), Value::Number(Number::from(e.p())));
    let mut terms = Vec::new();
    for (exp, c) in e.terms() {
        let mut tobj = Map::new();
        tobj.insert("exp".into(), int_vec_to_value(exp));
        tobj.insert("coeff".into(), Value::Number(Number::from(c)));
        terms.push(Value::Object(tobj));
    }
    obj.insert("terms".into(), Value::Array(terms));
    Value::Object(obj)
}

/// Valuation document:
/// { "monoid_generators": [...], "value_map": [[...]], "order_weight":
///   `[[a,b], ...]`, "quad_n": n, "prime": p }.
pub struct GrvalDoc {
    pub valuation: MonomialValuation,
    pub prime: u64,
}

pub fn parse_grval_doc(v: &Value) -> Result<GrvalDoc> {
    let obj =
        v.as_object().ok_or_else(|| Error::Parse("grval document must be an object".into()))?;
    let gens = obj
        .get("monoid_generators")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("missing monoid_generators".into()))?;
    let gens: Vec<IntVec> = gens.iter().map(parse_int_vec).collect::<Result<Vec<_>>>()?;
    let rank = gens.first().map(|g| g.len()).unwrap_or(0);
    let source = AffineMonoid::new(rank, gens)?;
    let vm = obj
        .get("value_map")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("missing value_map".into()))?;
    let rows: Vec<IntVec> = vm.iter().map(parse_int_vec).collect::<Result<Vec<_>>>()?;
    if rows.is_empty() {
        return Err(Error::Parse("value_map must have at least one row".into()));
    }
    let value_map = IntMatrix::from_rows(rows);
    let quad_n = match obj.get("quad_n") {
        None | Some(Value::Null) => None,
        Some(x) => Some(
            parse_int(x)?
                .to_string()
                .parse::<u64>()
                .map_err(|_| Error::Parse("quad_n out of range".into()))?,
        ),
    };
    let weights = obj
        .get("order_weight")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("missing order_weight".into()))?;
    let order_weight: QVec =
        weights.iter().map(|w| parse_qnum(w, quad_n)).collect::<Result<QVec>>()?;
    let prime: u64 = parse_int(
        obj.get("prime").ok_or_else(|| Error::Parse("missing prime".into()))?,
    )?
    .to_string()
    .parse()
    .map_err(|_| Error::Parse("prime out of range".into()))?;
    let valuation = MonomialValuation::new(source, value_map, order_weight)?;
    Ok(GrvalDoc { valuation, prime })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{rat, rat_frac};
    use crate::vecs::int_vec;

    #[test]
    fn number_roundtrip() {
        let v = int_to_value(&Int::from(12345678901234567890u64 as i64));
        let back = parse_int(&v).unwrap();
        assert_eq!(back, Int::from(12345678901234567890u64 as i64));
        // huge integers survive as literals
        let big = Int::from_str("123456789012345678901234567890123456789").unwrap();
        let v = int_to_value(&big);
        assert_eq!(parse_int(&v).unwrap(), big);
        let r = rat_frac(3, 7);
        let v = rat_to_value(&r);
        assert_eq!(v, Value::String("3/7".into()));
        assert_eq!(parse_rat(&v).unwrap(), r);
    }

    #[test]
    fn quadnum_roundtrip() {
        let q = QuadNum::new(rat(1), rat_frac(-1, 2), 2).unwrap();
        let v = qnum_to_value(&q);
        let back = parse_qnum(&v, Some(2)).unwrap();
        assert_eq!(back, q);
        // rational values encode as plain numbers
        let r = QuadNum::from_int(5);
        assert_eq!(qnum_to_value(&r), Value::Number(Number::from(5)));
        // quadratic entry without a declared radicand is rejected
        assert!(parse_qnum(&v, None).is_err());
    }

    #[test]
    fn cone_doc_roundtrip() {
        let doc = serde_json::json!({
            "rank": 2,
            "quad_n": null,
            "generators": [[1, 0], [1, 2]],
        });
        let parsed = parse_cone_doc(&doc).unwrap();
        assert_eq!(parsed.cone.rays_int().unwrap(), &[int_vec(&[1, 0]), int_vec(&[1, 2])]);
        let emitted = cone_to_doc(&parsed.cone).unwrap();
        let reparsed = parse_cone_doc(&emitted).unwrap();
        assert_eq!(
            reparsed.cone.facet_normals().unwrap(),
            parsed.cone.facet_normals().unwrap()
        );
    }

    #[test]
    fn quadratic_cone_doc() {
        let doc = serde_json::json!({
            "rank": 2,
            "quad_n": 2,
            "inequalities": [
                {"normal": [0, 1], "strict": false},
                {"normal": [[0, 1], -1], "strict": false},
            ],
        });
        let parsed = parse_cone_doc(&doc).unwrap();
        assert!(!parsed.cone.is_rational());
        assert!(!parsed.cone.contains_lattice(&int_vec(&[12, 17])).unwrap());
        assert!(parsed.cone.contains_lattice(&int_vec(&[97, 137])).unwrap());
    }

    #[test]
    fn element_doc_roundtrip() {
        let doc = serde_json::json!({
            "p": 3,
            "terms": [{"exp": [1, 0], "coeff": 1}, {"exp": [0, 1], "coeff": 2}],
        });
        let e = parse_element_doc(&doc).unwrap();
        assert_eq!(e.num_terms(), 2);
        let v = element_to_value(&e);
        let back = parse_element_doc(&v).unwrap();
        assert_eq!(back, e);
    }

    #[test]
    fn mixed_radicands_rejected_at_parse() {
        let doc = serde_json::json!({
            "rank": 2,
            "quad_n": 3,
            "inequalities": [
                {"normal": [[0, 1], -1], "strict": false},
            ],
        });
        // declared radicand 3: fine
        assert!(parse_cone_doc(&doc).is_ok());
        // no radicand: rejected
        let doc = serde_json::json!({
            "rank": 2,
            "inequalities": [
                {"normal": [[0, 1], -1], "strict": false},
            ],
        });
        assert!(parse_cone_doc(&doc).is_err());
    }
}
