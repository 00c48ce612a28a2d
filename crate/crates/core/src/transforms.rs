//! Closed-form combinatorial descriptions of `ini(I, f)` for binomial and
//! trinomial linear sums, leaf and leaf-pair detection, and checkers that
//! verify how minimal primes transfer from `I` to `ini(I, f)`.
//!
//! The binomial substitution sends each generator `M` to
//! `b^{d_a(M)} * M / a^{d_a(M)}` and adjoins `a`. The trinomial form
//! additionally contributes `lcm(X, M') * c^2` for every pair of generators
//! `bX` and `acM'`. Both formulas are validated against the Buchberger
//! oracle throughout the test suite.

use std::collections::BTreeSet;
use std::fmt;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::groebner;
use crate::ideal::MonomialIdeal;
use crate::primes::{minimal_primes, MonomialPrime};
use crate::ring::{LinearForm, Monomial, TermOrder};

/// Variables dividing exactly one generator.
pub fn find_leaves(ideal: &MonomialIdeal) -> Vec<usize> {
    (0..ideal.nvars())
        .filter(|&v| {
            ideal
                .gens()
                .iter()
                .filter(|g| g.exponent(v) > 0)
                .count()
                == 1
        })
        .collect()
}

/// The unique generator a leaf divides.
fn leaf_generator<'a>(ideal: &'a MonomialIdeal, v: usize) -> Option<&'a Monomial> {
    let mut hits = ideal.gens().iter().filter(|g| g.exponent(v) > 0);
    match (hits.next(), hits.next()) {
        (Some(g), None) => Some(g),
        _ => None,
    }
}

/// All divisors of a monomial.
fn divisors(m: &Monomial) -> Vec<Monomial> {
    let mut out = vec![Monomial::one(m.nvars())];
    for v in 0..m.nvars() {
        if m.exponent(v) == 0 {
            continue;
        }
        let mut next = Vec::with_capacity(out.len() * (m.exponent(v) as usize + 1));
        for d in &out {
            for e in 0..=m.exponent(v) {
                let mut exps = d.exponents().to_vec();
                exps[v] = e;
                next.push(Monomial::new(exps));
            }
        }
        out = next;
    }
    out
}

/// A witness that `(a, b)` is a leaf pair: `z | M_a`, `w | M_b`,
/// `gcd(z, w) = 1`, `a` does not divide `z`, `b` does not divide `w`, and
/// `z*w` lies in the ideal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct LeafPairWitness {
    pub a: usize,
    pub b: usize,
    pub z: Monomial,
    pub w: Monomial,
}

/// All leaf-pair witnesses, both orientations included.
pub fn find_leaf_pairs(ideal: &MonomialIdeal) -> Vec<LeafPairWitness> {
    let leaves = find_leaves(ideal);
    let mut out: BTreeSet<LeafPairWitness> = BTreeSet::new();
    for &a in &leaves {
        for &b in &leaves {
            if a == b {
                continue;
            }
            let (ma, mb) = match (leaf_generator(ideal, a), leaf_generator(ideal, b)) {
                (Some(ma), Some(mb)) if ma != mb => (ma, mb),
                _ => continue,
            };
            for z in divisors(ma) {
                if z.exponent(a) > 0 {
                    continue;
                }
                for w in divisors(mb) {
                    if w.exponent(b) > 0 || !z.is_coprime(&w) {
                        continue;
                    }
                    if ideal.contains(&z.mul(&w)) {
                        out.insert(LeafPairWitness {
                            a,
                            b,
                            z: z.clone(),
                            w,
                        });
                    }
                }
            }
        }
    }
    out.into_iter().collect()
}

/// Why a binomial transform applies at `(a, b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinomialContext {
    /// `a` is a leaf and `a*b` divides its unique generator.
    Leaf,
    /// `(a, b)` is a leaf pair.
    LeafPair,
}

/// Detect a context in which the binomial substitution formula is known to
/// compute `ini(I, a+b)` for orders with `a > b`.
pub fn binomial_context(ideal: &MonomialIdeal, a: usize, b: usize) -> Option<BinomialContext> {
    if a == b || ideal.is_zero() {
        return None;
    }
    if let Some(m) = leaf_generator(ideal, a) {
        if m.exponent(b) > 0 {
            return Some(BinomialContext::Leaf);
        }
    }
    if find_leaf_pairs(ideal)
        .iter()
        .any(|lp| lp.a == a && lp.b == b)
    {
        return Some(BinomialContext::LeafPair);
    }
    None
}

fn binomial_formula(ideal: &MonomialIdeal, a: usize, b: usize) -> Result<MonomialIdeal> {
    let n = ideal.nvars();
    let mut gens = vec![Monomial::variable(a, n)];
    for g in ideal.gens() {
        let mut exps = g.exponents().to_vec();
        exps[b] += exps[a];
        exps[a] = 0;
        gens.push(Monomial::new(exps));
    }
    MonomialIdeal::new(ideal.ring().clone(), gens)
}

/// `ini(I, a+b)` for an order with `a > b`, by the substitution formula.
/// Only contexts the formula is validated for are accepted; see
/// [`ini_binomial_with_oracle`] for the unchecked-but-cross-checked path.
pub fn ini_binomial(ideal: &MonomialIdeal, a: usize, b: usize) -> Result<MonomialIdeal> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if a == b {
        return Err(Error::InvalidArgument("need two distinct variables".into()));
    }
    match binomial_context(ideal, a, b) {
        Some(_) => binomial_formula(ideal, a, b),
        None => Err(Error::PreconditionViolated(format!(
            "`{a_name}` is not a leaf sharing a generator with `{b_name}`, and \
             (`{a_name}`, `{b_name}`) is not a leaf pair; use the oracle-checked override",
            a_name = ideal.ring().name(a),
            b_name = ideal.ring().name(b),
        ))),
    }
}

/// Override path: apply the substitution formula outside the validated
/// contexts, but only return it after the Buchberger oracle confirms it.
pub fn ini_binomial_with_oracle(
    ideal: &MonomialIdeal,
    a: usize,
    b: usize,
    budget: &Budget,
) -> Result<MonomialIdeal> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if a == b {
        return Err(Error::InvalidArgument("need two distinct variables".into()));
    }
    let formula = binomial_formula(ideal, a, b)?;
    let order = completion_with_prefix(ideal.nvars(), &[a, b]);
    let form = LinearForm::new(vec![a, b])?;
    let oracle = groebner::initial_ideal(ideal, Some(&form), &order, budget)?;
    if formula != oracle {
        return Err(Error::OracleMismatch(format!(
            "binomial substitution {formula} != oracle {oracle}"
        )));
    }
    Ok(formula)
}

/// Lex order starting with the given variables, remaining ones appended in
/// descending index order.
pub(crate) fn completion_with_prefix(n: usize, prefix: &[usize]) -> TermOrder {
    let mut precedence: Vec<usize> = prefix.to_vec();
    for v in (0..n).rev() {
        if !precedence.contains(&v) {
            precedence.push(v);
        }
    }
    TermOrder::lex(precedence).expect("prefix variables are distinct")
}

/// `ini(I, a+b+c)` for an order with `a > b > c`, by the closed trinomial
/// formula. Preconditions (checked):
/// (a) the degrees of `a`, `b`, `c` in the ideal are at most 1;
/// (b) every generator divisible by `a` is divisible by `b` or `c`;
/// and no generator is divisible by `b*c`.
pub fn ini_trinomial(
    ideal: &MonomialIdeal,
    a: usize,
    b: usize,
    c: usize,
) -> Result<MonomialIdeal> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if a == b || a == c || b == c {
        return Err(Error::InvalidArgument(
            "need three distinct variables".into(),
        ));
    }
    let ring = ideal.ring();
    for (label, v) in [("a", a), ("b", b), ("c", c)] {
        let d = ideal.var_degree(v)?;
        if d > 1 {
            return Err(Error::PreconditionViolated(format!(
                "(a): degree of `{}` (role {label}) in the ideal is {d} > 1",
                ring.name(v)
            )));
        }
    }
    for g in ideal.gens() {
        if g.exponent(a) > 0 && g.exponent(b) == 0 && g.exponent(c) == 0 {
            return Err(Error::PreconditionViolated(format!(
                "(b): generator {} is divisible by `{}` but by neither `{}` nor `{}`",
                g.display(ring),
                ring.name(a),
                ring.name(b),
                ring.name(c)
            )));
        }
        if g.exponent(b) > 0 && g.exponent(c) > 0 {
            return Err(Error::PreconditionViolated(format!(
                "bc-clause: generator {} is divisible by `{}`*`{}`",
                g.display(ring),
                ring.name(b),
                ring.name(c)
            )));
        }
    }

    let n = ideal.nvars();
    let mut gens = vec![Monomial::variable(a, n)];
    for g in ideal.gens() {
        let mut exps = g.exponents().to_vec();
        exps[b] += exps[a];
        exps[a] = 0;
        gens.push(Monomial::new(exps));
    }
    let b_parts: Vec<Monomial> = ideal
        .gens()
        .iter()
        .filter(|g| g.exponent(b) > 0)
        .map(|g| {
            let mut exps = g.exponents().to_vec();
            exps[b] -= 1;
            Monomial::new(exps)
        })
        .collect();
    let ac_parts: Vec<Monomial> = ideal
        .gens()
        .iter()
        .filter(|g| g.exponent(a) > 0 && g.exponent(c) > 0)
        .map(|g| {
            let mut exps = g.exponents().to_vec();
            exps[a] -= 1;
            exps[c] -= 1;
            Monomial::new(exps)
        })
        .collect();
    let c_squared = Monomial::from_pairs(n, &[(c, 2)]);
    for x in &b_parts {
        for m in &ac_parts {
            gens.push(x.lcm(m).mul(&c_squared));
        }
    }
    MonomialIdeal::new(ring.clone(), gens)
}

/// Which transfer statement to verify.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransferCase {
    /// `a` a leaf with `a*b` dividing its generator: every minimal prime of
    /// `ini(I, a+b)` is a minimal prime of `I` plus `a`.
    Leaf { a: usize, b: usize },
    /// `(a, b)` a leaf pair: every minimal prime of `ini(I, a+b)` is a
    /// minimal prime of `I` plus `a` or plus `b`.
    LeafPair { a: usize, b: usize },
    /// Edge ideal with leaf pair `(a, b)`: conversely, every minimal prime
    /// `P` of `I` yields `P + (a)` (when `a` is outside `P`) or `P + (b)`
    /// (when `a` is inside) as a minimal prime of `ini(I, a+b)`.
    LeafPairConverse { a: usize, b: usize },
    /// Generators `{ab, ac, M_i}` with `a` dividing no `M_i` and `b`, `c` of
    /// degree 1: every minimal prime `Q` of `ini(I, a+b+c)` is `P + (a)`
    /// with `c` in `P`, or `P + (b)` with `c` outside `P`.
    Trinomial { a: usize, b: usize, c: usize },
}

impl fmt::Display for TransferCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TransferCase::Leaf { .. } => write!(f, "leaf"),
            TransferCase::LeafPair { .. } => write!(f, "leaf-pair"),
            TransferCase::LeafPairConverse { .. } => write!(f, "leaf-pair-converse"),
            TransferCase::Trinomial { .. } => write!(f, "trinomial"),
        }
    }
}

/// Outcome of a transfer verification: the statement holds on the instance
/// iff `violations` is empty.
#[derive(Debug, Clone)]
pub struct TransferReport {
    pub case: TransferCase,
    pub checked_primes: usize,
    pub violations: Vec<String>,
}

impl TransferReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

fn prime_names(p: &MonomialPrime, ideal: &MonomialIdeal) -> String {
    format!("({})", p.names(ideal.ring()).join(", "))
}

/// Verify, prime by prime, that minimal primes transfer between `I` and the
/// matching initial ideal the way the selected statement asserts. The
/// hypotheses of the statement are checked first; any violation of the
/// conclusion is reported, never dropped.
pub fn check_min_prime_transfer(
    ideal: &MonomialIdeal,
    case: TransferCase,
) -> Result<TransferReport> {
    let min_i = minimal_primes(ideal)?;
    let mut violations = Vec::new();
    let checked_primes;
    match case {
        TransferCase::Leaf { a, b } => {
            if binomial_context(ideal, a, b) != Some(BinomialContext::Leaf) {
                return Err(Error::PreconditionViolated(
                    "selected variable is not a leaf with a shared generator".into(),
                ));
            }
            let i1 = binomial_formula(ideal, a, b)?;
            let min_i1 = minimal_primes(&i1)?;
            checked_primes = min_i1.len();
            for q in &min_i1 {
                let ok = q.contains_var(a)
                    && min_i.contains(&MonomialPrime::new(
                        q.vars().iter().copied().filter(|&v| v != a),
                    ));
                if !ok {
                    violations.push(format!(
                        "{} is not (P, {}) for a minimal prime P",
                        prime_names(q, ideal),
                        ideal.ring().name(a)
                    ));
                }
            }
        }
        TransferCase::LeafPair { a, b } => {
            if binomial_context(ideal, a, b) != Some(BinomialContext::LeafPair) {
                return Err(Error::PreconditionViolated(
                    "selected variables are not a leaf pair".into(),
                ));
            }
            let i1 = binomial_formula(ideal, a, b)?;
            let min_i1 = minimal_primes(&i1)?;
            checked_primes = min_i1.len();
            for q in &min_i1 {
                let strip = |v: usize| {
                    MonomialPrime::new(q.vars().iter().copied().filter(|&u| u != v))
                };
                let ok = (q.contains_var(a) && min_i.contains(&strip(a)))
                    || (q.contains_var(b) && min_i.contains(&strip(b)));
                if !ok {
                    violations.push(format!(
                        "{} is neither (P, {}) nor (P, {}) for a minimal prime P",
                        prime_names(q, ideal),
                        ideal.ring().name(a),
                        ideal.ring().name(b)
                    ));
                }
            }
        }
        TransferCase::LeafPairConverse { a, b } => {
            let is_edge_ideal = ideal
                .gens()
                .iter()
                .all(|g| g.is_squarefree() && g.total_degree() == 2);
            if !is_edge_ideal {
                return Err(Error::PreconditionViolated(
                    "converse transfer is stated for edge ideals only".into(),
                ));
            }
            if binomial_context(ideal, a, b) != Some(BinomialContext::LeafPair) {
                return Err(Error::PreconditionViolated(
                    "selected variables are not a leaf pair".into(),
                ));
            }
            let i1 = binomial_formula(ideal, a, b)?;
            let min_i1 = minimal_primes(&i1)?;
            checked_primes = min_i.len();
            for p in &min_i {
                let added = if p.contains_var(a) { b } else { a };
                let target = p.union_var(added);
                if !min_i1.contains(&target) {
                    violations.push(format!(
                        "{} + ({}) is not a minimal prime of the initial ideal",
                        prime_names(p, ideal),
                        ideal.ring().name(added)
                    ));
                }
            }
        }
        TransferCase::Trinomial { a, b, c } => {
            let n = ideal.nvars();
            let ab = Monomial::from_pairs(n, &[(a, 1), (b, 1)]);
            let ac = Monomial::from_pairs(n, &[(a, 1), (c, 1)]);
            let shape_ok = ideal.gens().contains(&ab)
                && ideal.gens().contains(&ac)
                && ideal
                    .gens()
                    .iter()
                    .all(|g| *g == ab || *g == ac || g.exponent(a) == 0)
                && ideal.var_degree(b)? == 1
                && ideal.var_degree(c)? == 1;
            if !shape_ok {
                return Err(Error::PreconditionViolated(
                    "generators must be {ab, ac, M_i} with a dividing no M_i and b, c of degree 1"
                        .into(),
                ));
            }
            let i1 = ini_trinomial(ideal, a, b, c)?;
            let min_i1 = minimal_primes(&i1)?;
            checked_primes = min_i1.len();
            for q in &min_i1 {
                let ok = min_i.iter().any(|p| {
                    if p.contains_var(c) {
                        !p.contains_var(a) && *q == p.union_var(a)
                    } else {
                        !p.contains_var(b) && *q == p.union_var(b)
                    }
                });
                if !ok {
                    violations.push(format!(
                        "{} matches no minimal prime through the a/b branch rule",
                        prime_names(q, ideal)
                    ));
                }
            }
        }
    }
    Ok(TransferReport {
        case,
        checked_primes,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::{parse_ideal, parse_linear_form, parse_term_order};

    fn ideal(text: &str) -> MonomialIdeal {
        parse_ideal(text).unwrap()
    }

    fn path_ideal() -> MonomialIdeal {
        ideal("vars a b x y\ngens a*x x*y y*b")
    }

    #[test]
    fn leaves_of_path_and_cycle() {
        let p = path_ideal();
        let r = p.ring();
        assert_eq!(
            find_leaves(&p),
            vec![r.index("a").unwrap(), r.index("b").unwrap()]
        );
        let c5 = ideal("vars x1 x2 x3 x4 x5\ngens x1*x2 x2*x3 x3*x4 x4*x5 x1*x5");
        assert!(find_leaves(&c5).is_empty());
        // every variable of this ideal divides at least two generators
        assert!(find_leaves(&ideal("vars a b c d\ngens a^2*b*c a*d b^3*c*d")).is_empty());
    }

    #[test]
    fn leaf_pair_of_path() {
        let p = path_ideal();
        let r = p.ring();
        let idx = |n: &str| r.index(n).unwrap();
        let pairs = find_leaf_pairs(&p);
        assert!(pairs.iter().any(|lp| {
            lp.a == idx("a")
                && lp.b == idx("b")
                && lp.z == Monomial::variable(idx("x"), 4)
                && lp.w == Monomial::variable(idx("y"), 4)
        }));
        // symmetric orientation is also reported
        assert!(pairs.iter().any(|lp| lp.a == idx("b") && lp.b == idx("a")));
    }

    #[test]
    fn no_leaf_pair_without_connecting_generator() {
        assert!(find_leaf_pairs(&ideal("vars a b x y\ngens a*x y*b")).is_empty());
        // a single generator cannot host a pair: the two leaf generators
        // must differ
        assert!(find_leaf_pairs(&ideal("vars a b\ngens a*b")).is_empty());
    }

    #[test]
    fn binomial_leaf_example() {
        let i = ideal("vars a b c d\ngens a^2*b*c b*d");
        let r = i.ring();
        let a = r.index("a").unwrap();
        let b = r.index("b").unwrap();
        assert_eq!(binomial_context(&i, a, b), Some(BinomialContext::Leaf));
        let got = ini_binomial(&i, a, b).unwrap();
        assert_eq!(got, ideal("vars a b c d\ngens a b^3*c b*d"));
    }

    #[test]
    fn binomial_leaf_pair_example() {
        let i = path_ideal();
        let r = i.ring();
        let (a, b) = (r.index("a").unwrap(), r.index("b").unwrap());
        assert_eq!(binomial_context(&i, a, b), Some(BinomialContext::LeafPair));
        let got = ini_binomial(&i, a, b).unwrap();
        assert_eq!(got, ideal("vars a b x y\ngens a b*x x*y y*b"));
    }

    #[test]
    fn binomial_principal_example() {
        let i = ideal("vars a b\ngens a*b");
        let got = ini_binomial(&i, 0, 1).unwrap();
        assert_eq!(got, ideal("vars a b\ngens a b^2"));
    }

    #[test]
    fn binomial_gate_and_override() {
        // `a` divides two generators: not a leaf, no pair -> gated.
        let i = ideal("vars a b x\ngens a*b a*x");
        assert!(matches!(
            ini_binomial(&i, 0, 1),
            Err(Error::PreconditionViolated(_))
        ));
        // The override cross-checks the formula against the oracle.
        let got = ini_binomial_with_oracle(&i, 0, 1, &Budget::default()).unwrap();
        assert_eq!(got, ideal("vars a b x\ngens a b^2 b*x"));
    }

    #[test]
    fn trinomial_on_pentagon_matches_display() {
        let i = ideal("vars x1 x2 x3 x4 x5\ngens x1*x2 x2*x3 x3*x4 x4*x5 x1*x5");
        let r = i.ring();
        let idx = |n: &str| r.index(n).unwrap();
        let got = ini_trinomial(&i, idx("x1"), idx("x5"), idx("x2")).unwrap();
        assert_eq!(
            got,
            ideal("vars x1 x2 x3 x4 x5\ngens x1 x2*x3 x3*x4 x4*x5 x5*x2 x5^2 x4*x2^2")
        );
    }

    #[test]
    fn trinomial_on_octagon_matches_display() {
        let i = ideal(
            "vars x1 x2 x3 x4 x5 x6 x7 x8\n\
             gens x1*x2 x2*x3 x3*x4 x4*x5 x5*x6 x6*x7 x7*x8 x1*x8",
        );
        let r = i.ring();
        let idx = |n: &str| r.index(n).unwrap();
        let got = ini_trinomial(&i, idx("x1"), idx("x8"), idx("x2")).unwrap();
        assert_eq!(
            got,
            ideal(
                "vars x1 x2 x3 x4 x5 x6 x7 x8\n\
                 gens x1 x2*x3 x3*x4 x4*x5 x5*x6 x6*x7 x7*x8 x8*x2 x8^2 x7*x2^2"
            )
        );
    }

    #[test]
    fn trinomial_preconditions_are_named() {
        // bc-clause
        let i = ideal("vars a b c d\ngens a*b b*c*d");
        let err = ini_trinomial(&i, 0, 1, 2).unwrap_err();
        assert!(matches!(err, Error::PreconditionViolated(ref m) if m.starts_with("bc-clause")));
        // (a): degree too high
        let i = ideal("vars a b c\ngens a^2*b");
        let err = ini_trinomial(&i, 0, 1, 2).unwrap_err();
        assert!(matches!(err, Error::PreconditionViolated(ref m) if m.starts_with("(a)")));
        // (b): a-generator avoiding b and c
        let i = ideal("vars a b c d\ngens a*d b*d");
        let err = ini_trinomial(&i, 0, 1, 2).unwrap_err();
        assert!(matches!(err, Error::PreconditionViolated(ref m) if m.starts_with("(b)")));
    }

    #[test]
    fn trinomial_agrees_with_oracle_on_pentagon() {
        let i = ideal("vars x1 x2 x3 x4 x5\ngens x1*x2 x2*x3 x3*x4 x4*x5 x1*x5");
        let r = i.ring();
        let f = parse_linear_form(r, "x1+x5+x2").unwrap();
        let order = parse_term_order(r, "x1,x5,x2").unwrap();
        let from_oracle =
            groebner::initial_ideal(&i, Some(&f), &order, &Budget::default()).unwrap();
        let idx = |n: &str| r.index(n).unwrap();
        let from_formula = ini_trinomial(&i, idx("x1"), idx("x5"), idx("x2")).unwrap();
        assert_eq!(from_formula, from_oracle);
    }

    #[test]
    fn transfer_leaf_pair_on_path() {
        let i = path_ideal();
        let r = i.ring();
        let (a, b) = (r.index("a").unwrap(), r.index("b").unwrap());
        let report = check_min_prime_transfer(&i, TransferCase::LeafPair { a, b }).unwrap();
        assert!(report.holds(), "{:?}", report.violations);
        assert_eq!(report.checked_primes, 3);

        let converse =
            check_min_prime_transfer(&i, TransferCase::LeafPairConverse { a, b }).unwrap();
        assert!(converse.holds(), "{:?}", converse.violations);
        assert_eq!(converse.checked_primes, 3);
    }

    #[test]
    fn transfer_leaf_case() {
        let i = ideal("vars a b c d\ngens a^2*b*c b*d");
        let report = check_min_prime_transfer(&i, TransferCase::Leaf { a: 0, b: 1 }).unwrap();
        assert!(report.holds(), "{:?}", report.violations);
    }

    #[test]
    fn transfer_trinomial_case() {
        let i = ideal("vars a b c d\ngens a*b a*c b*d");
        let report =
            check_min_prime_transfer(&i, TransferCase::Trinomial { a: 0, b: 1, c: 2 }).unwrap();
        assert!(report.holds(), "{:?}", report.violations);
        assert_eq!(report.checked_primes, 2);
    }

    #[test]
    fn transfer_hypotheses_are_enforced() {
        let i = path_ideal();
        assert!(matches!(
            check_min_prime_transfer(&i, TransferCase::Leaf { a: 0, b: 1 }),
            Err(Error::PreconditionViolated(_))
        ));
        let not_edge = ideal("vars a b x y\ngens a*x^2 x*y y*b");
        let r = not_edge.ring();
        let (a, b) = (r.index("a").unwrap(), r.index("b").unwrap());
        assert!(matches!(
            check_min_prime_transfer(&not_edge, TransferCase::LeafPairConverse { a, b }),
            Err(Error::PreconditionViolated(_))
        ));
    }
}
