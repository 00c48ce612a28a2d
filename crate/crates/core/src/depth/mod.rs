//! Depth and projective dimension: closed formulas for cycle, path, and
//! pendant-path unicyclic edge ideals, and an independent homological oracle.
//!
//! The oracle polarizes the ideal, reads multigraded Betti numbers off
//! reduced homology of restricted Stanley-Reisner complexes, takes the
//! largest homological degree with a nonzero Betti number as the projective
//! dimension, and returns `depth = n - pd`. Only vertex subsets that are
//! unions of generator supports can contribute: any other subset has a cone
//! vertex, so its restriction is contractible. That restriction of the
//! search space is differentially tested against full enumeration at small
//! sizes.

pub mod complex;
pub mod rank;

use std::collections::{HashSet, VecDeque};

pub use complex::{HomologyField, SimplicialComplex};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::primes::polarize;
use crate::ring::{Monomial, RingSpec};

/// How a depth value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DepthMethod {
    Formula,
    Oracle,
}

/// A depth value with provenance; the oracle also reports the projective
/// dimension and a multidegree (in polarized variables) realizing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DepthResult {
    pub value: usize,
    pub method: DepthMethod,
    pub pd: Option<usize>,
    pub witness: Option<Vec<String>>,
}

/// Projective dimension with the extremal multidegree that realizes it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PdResult {
    pub pd: usize,
    pub witness: Vec<String>,
}

/// All distinct unions of the given bitmasks (the empty union included).
fn support_unions(supports: &[u64]) -> Vec<u64> {
    let mut seen: HashSet<u64> = HashSet::new();
    let mut queue: VecDeque<u64> = VecDeque::new();
    seen.insert(0);
    queue.push_back(0);
    while let Some(sigma) = queue.pop_front() {
        for &s in supports {
            let next = sigma | s;
            if seen.insert(next) {
                queue.push_back(next);
            }
        }
    }
    let mut out: Vec<u64> = seen.into_iter().collect();
    out.sort_unstable();
    out
}

/// Largest homological degree with a nonzero multigraded Betti number, over
/// the given squarefree supports. Returns the degree and the subset
/// realizing it.
fn hochster_pd(
    supports: &[u64],
    candidates: &[u64],
    field: HomologyField,
    budget: &Budget,
) -> Result<(usize, u64)> {
    let mut best = (0usize, 0u64);
    for &sigma in candidates {
        let faces = complex::faces_by_card(supports, sigma, budget)?;
        let ranks = complex::homology_ranks(&faces, field);
        let size = sigma.count_ones() as usize;
        for (card, &rank) in ranks.iter().enumerate() {
            // nonzero reduced homology in dimension card-1 contributes a
            // Betti number in homological degree |sigma| - card
            if rank > 0 && size - card > best.0 {
                best = (size - card, sigma);
            }
        }
    }
    Ok(best)
}

/// `pd(R/I)` by polarization and the multigraded Betti search. The zero
/// ideal has projective dimension 0.
pub fn projective_dimension(ideal: &MonomialIdeal, budget: &Budget) -> Result<PdResult> {
    projective_dimension_over(ideal, HomologyField::Rational, budget)
}

pub fn projective_dimension_over(
    ideal: &MonomialIdeal,
    field: HomologyField,
    budget: &Budget,
) -> Result<PdResult> {
    if ideal.is_zero() {
        return Ok(PdResult {
            pd: 0,
            witness: vec![],
        });
    }
    let (polarized, _map) = polarize(ideal)?;
    if polarized.nvars() > budget.polarized_vars {
        return Err(Error::BudgetExceeded {
            what: "polarized variables",
            value: polarized.nvars() as u64,
            limit: budget.polarized_vars as u64,
        });
    }
    let supports = polarized.support_masks()?;
    let candidates = support_unions(&supports);
    let (pd, sigma) = hochster_pd(&supports, &candidates, field, budget)?;
    let witness = (0..polarized.nvars())
        .filter(|v| sigma & (1 << v) != 0)
        .map(|v| polarized.ring().name(v).to_string())
        .collect();
    Ok(PdResult { pd, witness })
}

/// `depth(R/I) = n - pd(R/I)`; the zero ideal in `n` variables has depth
/// `n`.
pub fn depth_oracle(ideal: &MonomialIdeal, budget: &Budget) -> Result<DepthResult> {
    depth_oracle_over(ideal, HomologyField::Rational, budget)
}

pub fn depth_oracle_over(
    ideal: &MonomialIdeal,
    field: HomologyField,
    budget: &Budget,
) -> Result<DepthResult> {
    let pd = projective_dimension_over(ideal, field, budget)?;
    Ok(DepthResult {
        value: ideal.nvars() - pd.pd,
        method: DepthMethod::Oracle,
        pd: Some(pd.pd),
        witness: Some(pd.witness),
    })
}

/// Depth of the quotient by an `n`-cycle edge ideal: `ceil((n-1)/3)`.
pub fn depth_cycle_formula(n: usize) -> Result<usize> {
    if n < 3 {
        return Err(Error::InvalidArgument("a cycle needs n >= 3".into()));
    }
    Ok((n - 1).div_ceil(3))
}

/// Depth of the quotient by a path edge ideal on `p` vertices: `ceil(p/3)`.
pub fn depth_path_formula(p: usize) -> Result<usize> {
    if p < 1 {
        return Err(Error::InvalidArgument("a path needs p >= 1".into()));
    }
    Ok(p.div_ceil(3))
}

/// Depth for the `n`-cycle with an `m`-vertex pendant path attached at the
/// second cycle vertex, split by `m mod 3`.
pub fn depth_unicyclic_formula(n: usize, m: usize) -> Result<usize> {
    if n < 3 {
        return Err(Error::InvalidArgument("a cycle needs n >= 3".into()));
    }
    Ok(match m % 3 {
        0 => (n - 1).div_ceil(3) + m / 3,
        1 => n.div_ceil(3) + (m - 1) / 3,
        _ => (n - 1).div_ceil(3) + (m + 1) / 3,
    })
}

/// Edge ideal of the `n`-cycle on `x1..xn`.
pub fn cycle_ideal(n: usize) -> Result<MonomialIdeal> {
    if n < 3 {
        return Err(Error::InvalidArgument("a cycle needs n >= 3".into()));
    }
    let ring = RingSpec::numbered("x", n)?;
    let mut gens: Vec<Monomial> = (0..n - 1)
        .map(|i| Monomial::from_pairs(n, &[(i, 1), (i + 1, 1)]))
        .collect();
    gens.push(Monomial::from_pairs(n, &[(0, 1), (n - 1, 1)]));
    MonomialIdeal::new(ring, gens)
}

/// Edge ideal of the path on `y1..yp`; a single vertex gives the zero
/// ideal.
pub fn path_ideal(p: usize) -> Result<MonomialIdeal> {
    if p < 1 {
        return Err(Error::InvalidArgument("a path needs p >= 1".into()));
    }
    let ring = RingSpec::numbered("y", p)?;
    let gens: Vec<Monomial> = (0..p.saturating_sub(1))
        .map(|i| Monomial::from_pairs(p, &[(i, 1), (i + 1, 1)]))
        .collect();
    MonomialIdeal::new(ring, gens)
}

/// Edge ideal of the `n`-cycle with an `m`-vertex pendant path attached to
/// `x2` through the edge `x2*y1`; `m = 0` is the plain cycle.
pub fn unicyclic_ideal(n: usize, m: usize) -> Result<MonomialIdeal> {
    if n < 3 {
        return Err(Error::InvalidArgument("a cycle needs n >= 3".into()));
    }
    if m == 0 {
        return cycle_ideal(n);
    }
    let total = n + m;
    let mut names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    names.extend((1..=m).map(|i| format!("y{i}")));
    let ring = RingSpec::new(names)?;
    let mut gens: Vec<Monomial> = (0..n - 1)
        .map(|i| Monomial::from_pairs(total, &[(i, 1), (i + 1, 1)]))
        .collect();
    gens.push(Monomial::from_pairs(total, &[(0, 1), (n - 1, 1)]));
    gens.push(Monomial::from_pairs(total, &[(1, 1), (n, 1)]));
    for i in 0..m - 1 {
        gens.push(Monomial::from_pairs(total, &[(n + i, 1), (n + i + 1, 1)]));
    }
    MonomialIdeal::new(ring, gens)
}
