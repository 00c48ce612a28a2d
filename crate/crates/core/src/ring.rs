//! The ambient polynomial ring and its basic inhabitants: monomials given by
//! exponent vectors, linear forms given by variable supports, and lexicographic
//! term orders given by variable precedence.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// An ordered list of distinct variable names. The list order is the
/// canonical index order used by every exponent vector over this ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingSpec {
    names: Vec<String>,
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl RingSpec {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::InvalidRing("a ring needs at least one variable".into()));
        }
        for name in &names {
            if !valid_name(name) {
                return Err(Error::InvalidRing(format!("bad variable name `{name}`")));
            }
        }
        for (i, name) in names.iter().enumerate() {
            if names[..i].contains(name) {
                return Err(Error::InvalidRing(format!("duplicate variable `{name}`")));
            }
        }
        Ok(RingSpec { names })
    }

    /// Ring `prefix1, ..., prefixN`.
    pub fn numbered(prefix: &str, n: usize) -> Result<Self> {
        Self::new((1..=n).map(|i| format!("{prefix}{i}")))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn index_or_err(&self, name: &str) -> Result<usize> {
        self.index(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }
}

/// A monomial over a fixed ring, stored as its exponent vector. The all-zero
/// vector is the monomial 1. The derived `Ord` is the exponent-vector
/// lexicographic order used for canonical generator sorting (it is *not* a
/// term order; see [`TermOrder`]).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u64>,
}

impl Monomial {
    pub fn new(exps: Vec<u64>) -> Self {
        Monomial { exps }
    }

    /// The monomial 1 in an `n`-variable ring.
    pub fn one(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    /// The monomial `x_i` in an `n`-variable ring.
    pub fn variable(i: usize, n: usize) -> Self {
        let mut exps = vec![0; n];
        exps[i] = 1;
        Monomial { exps }
    }

    /// Build from `(variable, exponent)` pairs; repeated variables add up.
    pub fn from_pairs(n: usize, pairs: &[(usize, u64)]) -> Self {
        let mut exps = vec![0; n];
        for &(v, e) in pairs {
            exps[v] += e;
        }
        Monomial { exps }
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exps
    }

    pub fn exponent(&self, v: usize) -> u64 {
        self.exps[v]
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.exps.iter().sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    /// Exact quotient; panics if `other` does not divide `self`.
    pub fn div_exact(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.min(b))
                .collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn pow(&self, n: u64) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|e| e * n).collect(),
        }
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Every exponent clamped to at most 1.
    pub fn squarefree(&self) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|&e| e.min(1)).collect(),
        }
    }

    /// Indices of the variables that divide this monomial.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    /// Support as a bitmask; requires at most 64 variables.
    pub fn support_mask(&self) -> Result<u64> {
        if self.nvars() > 64 {
            return Err(Error::VariableLimit(self.nvars()));
        }
        let mut mask = 0u64;
        for v in self.support() {
            mask |= 1 << v;
        }
        Ok(mask)
    }

    pub fn display<'a>(&'a self, ring: &'a RingSpec) -> MonomialDisplay<'a> {
        MonomialDisplay { m: self, ring }
    }
}

pub struct MonomialDisplay<'a> {
    m: &'a Monomial,
    ring: &'a RingSpec,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (v, &e) in self.m.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", self.ring.name(v))?;
            } else {
                write!(f, "{}^{}", self.ring.name(v), e)?;
            }
        }
        Ok(())
    }
}

/// A coefficient-1 sum of distinct variables, kept in the order they were
/// listed. The listed order matters: binomial and trinomial initial-ideal
/// transforms read their `(a, b, c)` roles from it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearForm {
    vars: Vec<usize>,
}

impl LinearForm {
    pub fn new(vars: Vec<usize>) -> Result<Self> {
        if vars.is_empty() {
            return Err(Error::InvalidArgument("empty linear form".into()));
        }
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(Error::InvalidArgument(
                    "repeated variable in linear form".into(),
                ));
            }
        }
        Ok(LinearForm { vars })
    }

    pub fn vars(&self) -> &[usize] {
        &self.vars
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vars.contains(&v)
    }

    /// Support as a sorted list (the summand order is forgotten).
    pub fn sorted_vars(&self) -> Vec<usize> {
        let mut vs = self.vars.clone();
        vs.sort_unstable();
        vs
    }

    pub fn display<'a>(&'a self, ring: &'a RingSpec) -> LinearFormDisplay<'a> {
        LinearFormDisplay { f: self, ring }
    }
}

pub struct LinearFormDisplay<'a> {
    f: &'a LinearForm,
    ring: &'a RingSpec,
}

impl fmt::Display for LinearFormDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.f.vars.iter().map(|&v| self.ring.name(v)).collect();
        write!(f, "{}", names.join("+"))
    }
}

/// A lexicographic term order given by a permutation of the variables,
/// highest first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TermOrder {
    precedence: Vec<usize>,
}

impl TermOrder {
    pub fn lex(precedence: Vec<usize>) -> Result<Self> {
        let n = precedence.len();
        let mut seen = vec![false; n];
        for &v in &precedence {
            if v >= n || seen[v] {
                return Err(Error::InvalidArgument(
                    "term order precedence must be a permutation of the variables".into(),
                ));
            }
            seen[v] = true;
        }
        Ok(TermOrder { precedence })
    }

    /// The default order `x_1 > x_2 > ... > x_n`.
    pub fn lex_default(n: usize) -> Self {
        TermOrder {
            precedence: (0..n).collect(),
        }
    }

    pub fn precedence(&self) -> &[usize] {
        &self.precedence
    }

    pub fn nvars(&self) -> usize {
        self.precedence.len()
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        for &v in &self.precedence {
            match a.exponent(v).cmp(&b.exponent(v)) {
                Ordering::Equal => {}
                other => return other,
            }
        }
        Ordering::Equal
    }

    /// True when the listed variables appear in strictly decreasing
    /// precedence.
    pub fn respects_chain(&self, chain: &[usize]) -> bool {
        let rank: Vec<usize> = {
            let mut r = vec![0; self.precedence.len()];
            for (pos, &v) in self.precedence.iter().enumerate() {
                r[v] = pos;
            }
            r
        };
        chain.windows(2).all(|w| rank[w[0]] < rank[w[1]])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn ring_validation() {
        assert!(RingSpec::new(["x1", "x2"]).is_ok());
        assert!(RingSpec::new(["x1", "x1"]).is_err());
        assert!(RingSpec::new(["1x"]).is_err());
        assert!(RingSpec::new(Vec::<String>::new()).is_err());
        assert!(RingSpec::new([""]).is_err());
        assert!(RingSpec::new(["a_1", "B9"]).is_ok());
    }

    #[test]
    fn monomial_arithmetic() {
        let m = Monomial::new(vec![2, 1, 0]);
        let n = Monomial::new(vec![1, 1, 3]);
        assert_eq!(m.mul(&n).exponents(), &[3, 2, 3]);
        assert_eq!(m.gcd(&n).exponents(), &[1, 1, 0]);
        assert_eq!(m.lcm(&n).exponents(), &[2, 1, 3]);
        assert!(!m.divides(&n));
        assert!(m.gcd(&n).divides(&m));
        assert_eq!(m.pow(3).exponents(), &[6, 3, 0]);
        assert!(Monomial::one(3).divides(&m));
        assert_eq!(m.squarefree().exponents(), &[1, 1, 0]);
    }

    #[test]
    fn monomial_display_and_support() {
        let ring = RingSpec::numbered("x", 3).unwrap();
        let m = Monomial::new(vec![2, 0, 1]);
        assert_eq!(m.display(&ring).to_string(), "x1^2*x3");
        assert_eq!(Monomial::one(3).display(&ring).to_string(), "1");
        assert_eq!(m.support().collect::<Vec<_>>(), vec![0, 2]);
        assert_eq!(m.support_mask().unwrap(), 0b101);
    }

    #[test]
    fn linear_form_rejects_repeats() {
        assert!(LinearForm::new(vec![0, 2, 0]).is_err());
        assert!(LinearForm::new(vec![]).is_err());
        let f = LinearForm::new(vec![0, 4, 1]).unwrap();
        assert_eq!(f.sorted_vars(), vec![0, 1, 4]);
    }

    #[test]
    fn term_order_basics() {
        let ord = TermOrder::lex(vec![0, 4, 1, 2, 3]).unwrap();
        // x1 > x5: compare x1 against x5.
        let x1 = Monomial::variable(0, 5);
        let x5 = Monomial::variable(4, 5);
        assert_eq!(ord.cmp(&x1, &x5), Ordering::Greater);
        assert_eq!(ord.cmp(&Monomial::one(5), &x5), Ordering::Less);
        assert!(ord.respects_chain(&[0, 4, 1]));
        assert!(!ord.respects_chain(&[1, 4]));
        assert!(TermOrder::lex(vec![0, 0, 1]).is_err());
    }

    fn arb_monomial(n: usize, max_deg: u64) -> impl Strategy<Value = Monomial> {
        prop::collection::vec(0..=max_deg, n).prop_map(Monomial::new)
    }

    proptest! {
        // The induced order on monomials is total, antisymmetric, transitive,
        // multiplicative, and has 1 as its minimum.
        #[test]
        fn term_order_is_total_and_multiplicative(
            perm in Just(()).prop_perturb(|_, mut rng| {
                use rand::seq::SliceRandom;
                let mut p: Vec<usize> = (0..4).collect();
                p.shuffle(&mut rng);
                p
            }),
            a in arb_monomial(4, 5),
            b in arb_monomial(4, 5),
            c in arb_monomial(4, 5),
        ) {
            let ord = TermOrder::lex(perm).unwrap();
            // antisymmetry / totality
            prop_assert_eq!(ord.cmp(&a, &b), ord.cmp(&b, &a).reverse());
            if ord.cmp(&a, &b) == Ordering::Equal {
                prop_assert_eq!(&a, &b);
            }
            // transitivity on the sorted triple
            let mut sorted = vec![a.clone(), b.clone(), c.clone()];
            sorted.sort_by(|x, y| ord.cmp(x, y));
            prop_assert!(ord.cmp(&sorted[0], &sorted[2]) != Ordering::Greater);
            // multiplicativity
            let am = a.mul(&c);
            let bm = b.mul(&c);
            prop_assert_eq!(ord.cmp(&am, &bm), ord.cmp(&a, &b));
            // 1 is the minimum
            prop_assert!(ord.cmp(&Monomial::one(4), &a) != Ordering::Greater);
        }
    }
}
