//! Text and JSON exchange formats.
//!
//! The text format is one statement per line with `#` comments:
//!
//! ```text
//! vars x1 x2 x3 x4 x5
//! gens x1*x2 x2*x3 x3^2*x4
//! ```
//!
//! The JSON form is `{"vars":[...],"gens":[[e1,...,en],...]}` with exponent
//! vectors. Writing either form and parsing it back is the identity, and both
//! writers emit canonical bytes (generators in canonical order).

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::ring::{LinearForm, Monomial, RingSpec, TermOrder};

/// Parse a monomial like `x1*x2^2` (or `1`) against a ring.
pub fn parse_monomial(ring: &RingSpec, text: &str) -> Result<Monomial> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::Parse("empty monomial".into()));
    }
    if text == "1" {
        return Ok(Monomial::one(ring.len()));
    }
    let mut exps = vec![0u64; ring.len()];
    for factor in text.split('*') {
        let factor = factor.trim();
        let (name, exp) = match factor.split_once('^') {
            Some((name, exp)) => {
                let exp: u64 = exp
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent in `{factor}`")))?;
                (name.trim(), exp)
            }
            None => (factor, 1),
        };
        let v = ring.index_or_err(name)?;
        exps[v] += exp;
    }
    Ok(Monomial::new(exps))
}

/// Parse the ideal text format. Accepts multiple `gens` lines; their
/// monomials accumulate.
pub fn parse_ideal(text: &str) -> Result<MonomialIdeal> {
    let mut ring: Option<RingSpec> = None;
    let mut gens: Vec<Monomial> = Vec::new();
    let mut saw_gens = false;
    for raw in text.lines() {
        let line = match raw.split_once('#') {
            Some((before, _)) => before.trim(),
            None => raw.trim(),
        };
        if line.is_empty() {
            continue;
        }
        let (keyword, rest) = match line.split_once(char::is_whitespace) {
            Some((k, r)) => (k, r.trim()),
            None => (line, ""),
        };
        match keyword {
            "vars" => {
                if ring.is_some() {
                    return Err(Error::Parse("repeated `vars` line".into()));
                }
                ring = Some(RingSpec::new(rest.split_whitespace())?);
            }
            "gens" => {
                let ring = ring
                    .as_ref()
                    .ok_or_else(|| Error::Parse("`gens` before `vars`".into()))?;
                saw_gens = true;
                for tok in rest.split_whitespace() {
                    gens.push(parse_monomial(ring, tok)?);
                }
            }
            other => return Err(Error::Parse(format!("unknown statement `{other}`"))),
        }
    }
    let ring = ring.ok_or_else(|| Error::Parse("missing `vars` line".into()))?;
    if !saw_gens {
        return Err(Error::Parse("missing `gens` line".into()));
    }
    MonomialIdeal::new(ring, gens)
}

/// Canonical text form of an ideal.
pub fn write_ideal(ideal: &MonomialIdeal) -> String {
    let mut out = String::from("vars ");
    out.push_str(&ideal.ring().names().join(" "));
    out.push_str("\ngens");
    for g in ideal.gens() {
        out.push(' ');
        out.push_str(&g.display(ideal.ring()).to_string());
    }
    out.push('\n');
    out
}

/// Canonical JSON value of an ideal.
pub fn ideal_to_json(ideal: &MonomialIdeal) -> Value {
    json!({
        "vars": ideal.ring().names(),
        "gens": ideal
            .gens()
            .iter()
            .map(|g| g.exponents().to_vec())
            .collect::<Vec<_>>(),
    })
}

pub fn ideal_from_json(value: &Value) -> Result<MonomialIdeal> {
    let obj = value
        .as_object()
        .ok_or_else(|| Error::Parse("ideal JSON must be an object".into()))?;
    let vars = obj
        .get("vars")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("missing `vars` array".into()))?;
    let names: Vec<String> = vars
        .iter()
        .map(|v| {
            v.as_str()
                .map(str::to_string)
                .ok_or_else(|| Error::Parse("variable names must be strings".into()))
        })
        .collect::<Result<_>>()?;
    let ring = RingSpec::new(names)?;
    let gens_json = obj
        .get("gens")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("missing `gens` array".into()))?;
    let mut gens = Vec::with_capacity(gens_json.len());
    for g in gens_json {
        let exps = g
            .as_array()
            .ok_or_else(|| Error::Parse("generator must be an exponent array".into()))?;
        if exps.len() != ring.len() {
            return Err(Error::Parse("exponent vector has wrong length".into()));
        }
        let exps: Vec<u64> = exps
            .iter()
            .map(|e| {
                e.as_u64()
                    .ok_or_else(|| Error::Parse("exponents must be naturals".into()))
            })
            .collect::<Result<_>>()?;
        gens.push(Monomial::new(exps));
    }
    MonomialIdeal::new(ring, gens)
}

/// Parse a linear form like `x1+x5+x2` against a ring; the summand order is
/// kept.
pub fn parse_linear_form(ring: &RingSpec, text: &str) -> Result<LinearForm> {
    let vars: Vec<usize> = text
        .split('+')
        .map(|name| ring.index_or_err(name.trim()))
        .collect::<Result<_>>()?;
    LinearForm::new(vars)
}

/// Parse a term order given as comma-separated variable names, highest
/// first. A prefix of the variables is allowed; the rest are appended in
/// descending index order.
pub fn parse_term_order(ring: &RingSpec, text: &str) -> Result<TermOrder> {
    let mut precedence: Vec<usize> = Vec::new();
    for name in text.split(',') {
        let v = ring.index_or_err(name.trim())?;
        if precedence.contains(&v) {
            return Err(Error::Parse(format!("variable `{}` listed twice", name.trim())));
        }
        precedence.push(v);
    }
    for v in (0..ring.len()).rev() {
        if !precedence.contains(&v) {
            precedence.push(v);
        }
    }
    TermOrder::lex(precedence)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn text_round_trip_is_canonical() {
        let text = "# pentagon\nvars x1 x2 x3 x4 x5\ngens x1*x2 x2*x3 x3*x4 x4*x5 x1*x5\n";
        let ideal = parse_ideal(text).unwrap();
        let written = write_ideal(&ideal);
        assert_eq!(parse_ideal(&written).unwrap(), ideal);
        assert_eq!(write_ideal(&parse_ideal(&written).unwrap()), written);
    }

    #[test]
    fn zero_ideal_round_trip() {
        let ideal = parse_ideal("vars x1 x2\ngens\n").unwrap();
        assert!(ideal.is_zero());
        assert_eq!(write_ideal(&ideal), "vars x1 x2\ngens\n");
    }

    #[test]
    fn json_round_trip() {
        let ideal = parse_ideal("vars a b\ngens a^2*b a*b^3\n").unwrap();
        let value = ideal_to_json(&ideal);
        assert_eq!(ideal_from_json(&value).unwrap(), ideal);
        assert_eq!(
            value.to_string(),
            r#"{"gens":[[1,3],[2,1]],"vars":["a","b"]}"#
        );
    }

    #[test]
    fn parse_rejects_unit_and_unknowns() {
        assert!(matches!(
            parse_ideal("vars x1\ngens 1"),
            Err(Error::UnitIdeal)
        ));
        assert!(parse_ideal("vars x1\ngens x2").is_err());
        assert!(parse_ideal("gens x1").is_err());
        assert!(parse_ideal("vars x1\nstuff x1").is_err());
    }

    #[test]
    fn linear_form_and_order_parsing() {
        let ring = RingSpec::numbered("x", 5).unwrap();
        let f = parse_linear_form(&ring, "x1+x5+x2").unwrap();
        assert_eq!(f.vars(), &[0, 4, 1]);
        let ord = parse_term_order(&ring, "x1,x5,x2").unwrap();
        assert_eq!(ord.precedence(), &[0, 4, 1, 3, 2]);
        assert!(parse_term_order(&ring, "x1,x1").is_err());
    }

    fn arb_ideal() -> impl Strategy<Value = MonomialIdeal> {
        prop::collection::vec(prop::collection::vec(0u64..=3, 4), 0..6).prop_map(|rows| {
            let ring = RingSpec::numbered("x", 4).unwrap();
            MonomialIdeal::new(
                ring,
                rows.into_iter()
                    .map(Monomial::new)
                    .filter(|m| !m.is_one()),
            )
            .unwrap()
        })
    }

    proptest! {
        #[test]
        fn round_trips_are_bit_exact(ideal in arb_ideal()) {
            let text = write_ideal(&ideal);
            prop_assert_eq!(&parse_ideal(&text).unwrap(), &ideal);
            prop_assert_eq!(write_ideal(&parse_ideal(&text).unwrap()), text);
            let value = ideal_to_json(&ideal);
            prop_assert_eq!(&ideal_from_json(&value).unwrap(), &ideal);
            prop_assert_eq!(ideal_to_json(&ideal_from_json(&value).unwrap()), value);
        }
    }
}
