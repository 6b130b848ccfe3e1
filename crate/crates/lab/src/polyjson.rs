//! JSON form of polynomials: a list of `{"e": [a, b, c, d], "re": .., "im": ..}`
//! records for `z1^a conj(z1)^b z2^c conj(z2)^d`, coefficients as strings.
//! Exact coefficients are always written `"n/d"`; floats use the shortest
//! decimal that round-trips.

use std::fmt::Write as _;

use fueter_core::{QFunction, Real, WPoly, Q};
use num_bigint::BigInt;
use num_complex::Complex;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermRecord {
    pub e: [u32; 4],
    pub re: String,
    pub im: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QFunctionJson {
    pub f1: Vec<TermRecord>,
    pub f2: Vec<TermRecord>,
}

/// Scalars with a JSON string form.
pub trait JsonScalar: Real {
    fn to_json(&self) -> String;
    fn from_json(s: &str) -> Result<Self, String>;
}

impl JsonScalar for Q {
    fn to_json(&self) -> String {
        format!("{}/{}", self.numer(), self.denom())
    }

    fn from_json(s: &str) -> Result<Self, String> {
        let s = s.trim();
        let parse = |t: &str| t.trim().parse::<BigInt>().map_err(|e| format!("bad rational {s:?}: {e}"));
        match s.split_once('/') {
            Some((n, d)) => {
                let d = parse(d)?;
                if d.is_zero() {
                    return Err(format!("zero denominator in {s:?}"));
                }
                Ok(Q::new(parse(n)?, d))
            }
            None => Ok(Q::new(parse(s)?, BigInt::one())),
        }
    }
}

impl JsonScalar for f64 {
    fn to_json(&self) -> String {
        format!("{self:?}")
    }

    fn from_json(s: &str) -> Result<Self, String> {
        let v: f64 = s.trim().parse().map_err(|e| format!("bad decimal {s:?}: {e}"))?;
        if v.is_finite() {
            Ok(v)
        } else {
            Err(format!("non-finite coefficient {s:?}"))
        }
    }
}

pub fn poly_to_json<S: JsonScalar>(p: &WPoly<S>) -> Vec<TermRecord> {
    p.terms().map(|(e, c)| TermRecord { e: *e, re: c.re.to_json(), im: c.im.to_json() }).collect()
}

pub fn poly_from_json<S: JsonScalar>(records: &[TermRecord]) -> Result<WPoly<S>, String> {
    let mut terms = Vec::with_capacity(records.len());
    for r in records {
        terms.push((r.e, Complex::new(S::from_json(&r.re)?, S::from_json(&r.im)?)));
    }
    Ok(WPoly::from_terms(terms))
}

pub fn qfunction_to_json<S: JsonScalar>(f: &QFunction<S>) -> QFunctionJson {
    QFunctionJson { f1: poly_to_json(&f.f1), f2: poly_to_json(&f.f2) }
}

pub fn qfunction_from_json<S: JsonScalar>(f: &QFunctionJson) -> Result<QFunction<S>, String> {
    Ok(QFunction::new(poly_from_json(&f.f1)?, poly_from_json(&f.f2)?))
}

/// Human-readable form, e.g. `(1/2)*zb2^2 + (0+1i)*z1`.
pub fn pretty<S: JsonScalar>(p: &WPoly<S>) -> String {
    if p.is_zero() {
        return String::from("0");
    }
    let names = ["z1", "zb1", "z2", "zb2"];
    let mut out = String::new();
    for (k, (e, c)) in p.terms().enumerate() {
        if k > 0 {
            out.push_str(" + ");
        }
        let coeff = if c.im.is_zero() {
            format!("({})", c.re.to_json())
        } else {
            format!("({}+{}i)", c.re.to_json(), c.im.to_json())
        };
        out.push_str(&coeff);
        for (name, &pow) in names.iter().zip(e.iter()) {
            match pow {
                0 => {}
                1 => write!(out, "*{name}").unwrap(),
                _ => write!(out, "*{name}^{pow}").unwrap(),
            }
        }
    }
    out
}
