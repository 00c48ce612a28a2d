//! A small Buchberger engine over exact rational coefficients.
//!
//! This is the ground-truth oracle for initial ideals of the form
//! `ini(I, f)` where `I` is a monomial ideal and `f` a single linear sum.
//! It is deliberately plain: normal selection strategy, FIFO tie-breaking,
//! full reduction, and a final autoreduction to the unique reduced basis.
//! Nothing here is tuned for large inputs; the budget guard keeps runaway
//! cases from looping.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::ring::{LinearForm, Monomial, RingSpec, TermOrder};

/// A polynomial with exact rational coefficients, stored termwise. No zero
/// coefficients are kept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms(
        nvars: usize,
        terms: impl IntoIterator<Item = (Monomial, BigRational)>,
    ) -> Self {
        let mut p = Polynomial::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn from_monomial(m: Monomial) -> Self {
        let nvars = m.nvars();
        Polynomial::from_terms(nvars, [(m, BigRational::one())])
    }

    pub fn from_linear_form(f: &LinearForm, nvars: usize) -> Self {
        Polynomial::from_terms(
            nvars,
            f.vars()
                .iter()
                .map(|&v| (Monomial::variable(v, nvars), BigRational::one())),
        )
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn leading(&self, order: &TermOrder) -> Option<(&Monomial, &BigRational)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.cmp(a, b))
    }

    /// `self - c * x^shift * other`
    fn sub_mul(&self, c: &BigRational, shift: &Monomial, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, k) in &other.terms {
            out.add_term(m.mul(shift), -(c * k));
        }
        out
    }

    /// Scale so the leading coefficient is 1.
    pub fn monic(&self, order: &TermOrder) -> Polynomial {
        match self.leading(order) {
            None => self.clone(),
            Some((_, lc)) => {
                let lc = lc.clone();
                Polynomial {
                    nvars: self.nvars,
                    terms: self
                        .terms
                        .iter()
                        .map(|(m, c)| (m.clone(), c / &lc))
                        .collect(),
                }
            }
        }
    }

    pub fn display<'a>(&'a self, ring: &'a RingSpec) -> PolyDisplay<'a> {
        PolyDisplay { p: self, ring }
    }
}

pub struct PolyDisplay<'a> {
    p: &'a Polynomial,
    ring: &'a RingSpec,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.p.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if c.is_one() && !m.is_one() {
                write!(f, "{}", m.display(self.ring))?;
            } else if m.is_one() {
                write!(f, "{c}")?;
            } else {
                write!(f, "{}*{}", c, m.display(self.ring))?;
            }
        }
        Ok(())
    }
}

/// Full normal form: repeatedly cancel the order-greatest term divisible by
/// some basis leading monomial. No term of the result is divisible by any
/// basis leading monomial.
pub fn reduce(p: &Polynomial, basis: &[Polynomial], order: &TermOrder) -> Polynomial {
    let leads: Vec<(&Polynomial, &Monomial, &BigRational)> = basis
        .iter()
        .filter(|b| !b.is_zero())
        .map(|b| {
            let (lm, lc) = b.leading(order).unwrap();
            (b, lm, lc)
        })
        .collect();
    let mut p = p.clone();
    'outer: loop {
        let mut monomials: Vec<Monomial> = p.terms.keys().cloned().collect();
        monomials.sort_by(|a, b| order.cmp(b, a));
        for t in &monomials {
            for (b, lm, lc) in &leads {
                if lm.divides(t) {
                    let shift = t.div_exact(lm);
                    let c = &p.terms[t] / *lc;
                    p = p.sub_mul(&c, &shift, b);
                    continue 'outer;
                }
            }
        }
        return p;
    }
}

fn spoly(f: &Polynomial, g: &Polynomial, order: &TermOrder) -> Polynomial {
    let (lmf, lcf) = f.leading(order).unwrap();
    let (lmg, lcg) = g.leading(order).unwrap();
    let l = lmf.lcm(lmg);
    let zero = Polynomial::zero(f.nvars());
    let left = zero.sub_mul(&(-(BigRational::one() / lcf)), &l.div_exact(lmf), f);
    left.sub_mul(&(BigRational::one() / lcg), &l.div_exact(lmg), g)
}

/// A reduced Gröbner basis together with the order it was computed under.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    order: TermOrder,
    polys: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.polys
            .iter()
            .map(|p| p.leading(&self.order).unwrap().0.clone())
            .collect()
    }

    pub fn leading_ideal(&self, ring: &RingSpec) -> Result<MonomialIdeal> {
        MonomialIdeal::new(ring.clone(), self.leading_monomials())
    }

    /// Post-hoc soundness check: every S-pair reduces to zero.
    pub fn is_groebner(&self) -> bool {
        for i in 0..self.polys.len() {
            for j in (i + 1)..self.polys.len() {
                let s = spoly(&self.polys[i], &self.polys[j], &self.order);
                if !reduce(&s, &self.polys, &self.order).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// in the term order, FIFO on ties) and the coprimality criterion, followed
/// by autoreduction to the unique reduced basis.
pub fn buchberger(
    gens: &[Polynomial],
    order: &TermOrder,
    budget: &Budget,
) -> Result<GroebnerBasis> {
    let mut basis: Vec<Polynomial> = gens
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| p.monic(order))
        .collect();

    struct Pair {
        i: usize,
        j: usize,
        lcm: Monomial,
        seq: u64,
    }
    let mut seq = 0u64;
    let mut pairs: Vec<Pair> = Vec::new();
    let mut push_pairs = |pairs: &mut Vec<Pair>, basis: &[Polynomial], upto: usize, j: usize| {
        for i in 0..upto {
            let lcm = basis[i]
                .leading(order)
                .unwrap()
                .0
                .lcm(basis[j].leading(order).unwrap().0);
            pairs.push(Pair { i, j, lcm, seq });
            seq += 1;
        }
    };
    for j in 0..basis.len() {
        push_pairs(&mut pairs, &basis, j, j);
    }

    let mut processed = 0u64;
    while !pairs.is_empty() {
        let best = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| order.cmp(&a.lcm, &b.lcm).then(a.seq.cmp(&b.seq)))
            .map(|(idx, _)| idx)
            .unwrap();
        let pair = pairs.remove(best);
        processed += 1;
        if processed > budget.buchberger_pairs {
            return Err(Error::BudgetExceeded {
                what: "buchberger pairs",
                value: processed,
                limit: budget.buchberger_pairs,
            });
        }
        let lmi = basis[pair.i].leading(order).unwrap().0;
        let lmj = basis[pair.j].leading(order).unwrap().0;
        if lmi.is_coprime(lmj) {
            continue;
        }
        let s = spoly(&basis[pair.i], &basis[pair.j], order);
        let r = reduce(&s, &basis, order);
        if !r.is_zero() {
            let j = basis.len();
            basis.push(r.monic(order));
            push_pairs(&mut pairs, &basis, j, j);
        }
    }

    Ok(GroebnerBasis {
        order: order.clone(),
        polys: reduce_basis(basis, order),
    })
}

/// Minimalize (no leading monomial divides another) and autoreduce (no term
/// divisible by another leading monomial), then sort by leading monomial.
fn reduce_basis(basis: Vec<Polynomial>, order: &TermOrder) -> Vec<Polynomial> {
    let mut basis = basis;
    basis.sort_by(|a, b| order.cmp(a.leading(order).unwrap().0, b.leading(order).unwrap().0));
    let lms: Vec<Monomial> = basis
        .iter()
        .map(|p| p.leading(order).unwrap().0.clone())
        .collect();
    let keep: Vec<bool> = (0..basis.len())
        .map(|i| {
            !lms.iter()
                .enumerate()
                .any(|(j, lm)| j != i && lm.divides(&lms[i]) && (*lm != lms[i] || j < i))
        })
        .collect();
    let mut basis: Vec<Polynomial> = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(p, k)| k.then_some(p))
        .collect();

    loop {
        let mut changed = false;
        for i in 0..basis.len() {
            let others: Vec<Polynomial> = basis
                .iter()
                .enumerate()
                .filter_map(|(j, p)| (j != i).then(|| p.clone()))
                .collect();
            let r = reduce(&basis[i], &others, order).monic(order);
            if r != basis[i] {
                basis[i] = r;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    basis
}

/// Leading-monomial ideal of `(I, f)` under `order`, or of `I` itself when
/// `f` is omitted (a monomial ideal is its own Gröbner basis).
pub fn initial_ideal(
    ideal: &MonomialIdeal,
    form: Option<&LinearForm>,
    order: &TermOrder,
    budget: &Budget,
) -> Result<MonomialIdeal> {
    if order.nvars() != ideal.nvars() {
        return Err(Error::RingMismatch);
    }
    let mut gens: Vec<Polynomial> = ideal
        .gens()
        .iter()
        .map(|g| Polynomial::from_monomial(g.clone()))
        .collect();
    match form {
        None => Ok(MonomialIdeal::new(
            ideal.ring().clone(),
            ideal.gens().to_vec(),
        )?),
        Some(f) => {
            gens.push(Polynomial::from_linear_form(f, ideal.nvars()));
            let gb = buchberger(&gens, order, budget)?;
            gb.leading_ideal(ideal.ring())
        }
    }
}
