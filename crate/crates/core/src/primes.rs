//! Minimal primes, associated primes, polarization, star neighbors, and the
//! decomposition of embedded primes as a minimal prime plus star-neighbor
//! variables.
//!
//! Associated primes are computed by two independent routes: through the
//! polarization (where associated and minimal primes coincide) and by a
//! brute-force scan for monomial witnesses `c` with `(I : c)` prime. The two
//! routes are differentially tested against each other.

use std::collections::BTreeSet;
use std::fmt;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::ring::{LinearForm, Monomial, RingSpec};

/// A monomial prime: an ideal generated by a set of variables, stored as a
/// strictly increasing index list. The derived `Ord` is lexicographic on
/// that list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialPrime {
    vars: Vec<usize>,
}

impl MonomialPrime {
    pub fn new(vars: impl IntoIterator<Item = usize>) -> Self {
        let mut vars: Vec<usize> = vars.into_iter().collect();
        vars.sort_unstable();
        vars.dedup();
        MonomialPrime { vars }
    }

    pub fn from_mask(mask: u64) -> Self {
        MonomialPrime {
            vars: (0..64).filter(|v| mask & (1 << v) != 0).collect(),
        }
    }

    pub fn mask(&self) -> u64 {
        self.vars.iter().fold(0, |m, &v| m | (1 << v))
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

    pub fn contains_var(&self, v: usize) -> bool {
        self.vars.binary_search(&v).is_ok()
    }

    /// A prime contains a monomial iff one of its variables divides it.
    pub fn contains_monomial(&self, m: &Monomial) -> bool {
        self.vars.iter().any(|&v| m.exponent(v) > 0)
    }

    pub fn contains_ideal(&self, ideal: &MonomialIdeal) -> bool {
        ideal.gens().iter().all(|g| self.contains_monomial(g))
    }

    pub fn is_subset_of(&self, other: &MonomialPrime) -> bool {
        self.vars.iter().all(|v| other.contains_var(*v))
    }

    pub fn is_strict_subset_of(&self, other: &MonomialPrime) -> bool {
        self.len() < other.len() && self.is_subset_of(other)
    }

    pub fn union_var(&self, v: usize) -> MonomialPrime {
        Self::new(self.vars.iter().copied().chain([v]))
    }

    pub fn minus(&self, other: &MonomialPrime) -> Vec<usize> {
        self.vars
            .iter()
            .copied()
            .filter(|v| !other.contains_var(*v))
            .collect()
    }

    pub fn names<'a>(&self, ring: &'a RingSpec) -> Vec<&'a str> {
        self.vars.iter().map(|&v| ring.name(v)).collect()
    }

    pub fn display<'a>(&'a self, ring: &'a RingSpec) -> PrimeDisplay<'a> {
        PrimeDisplay { p: self, ring }
    }
}

pub struct PrimeDisplay<'a> {
    p: &'a MonomialPrime,
    ring: &'a RingSpec,
}

impl fmt::Display for PrimeDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.p.names(self.ring).join(", "))
    }
}

/// Maintain an antichain of bitsets: insert `cand` unless a member is
/// contained in it, evicting members that contain it.
fn push_minimal(antichain: &mut Vec<u64>, cand: u64) {
    if antichain.iter().any(|&s| s & cand == s) {
        return;
    }
    antichain.retain(|&s| s & cand != cand);
    antichain.push(cand);
}

/// All inclusion-minimal transversals (hitting sets) of a family of vertex
/// sets, by sequential edge incorporation with minimalization after every
/// step.
pub(crate) fn minimal_transversals(edges: &[u64]) -> Vec<u64> {
    let mut minimal_edges: Vec<u64> = Vec::new();
    for &e in edges {
        push_minimal(&mut minimal_edges, e);
    }
    let mut trans: Vec<u64> = vec![0];
    for &e in &minimal_edges {
        let mut next: Vec<u64> = Vec::new();
        for &t in &trans {
            if t & e != 0 {
                push_minimal(&mut next, t);
            } else {
                let mut rest = e;
                while rest != 0 {
                    let v = rest.trailing_zeros();
                    rest &= rest - 1;
                    push_minimal(&mut next, t | (1 << v));
                }
            }
        }
        trans = next;
    }
    trans.sort_unstable();
    trans
}

/// The minimal primes of `R/I`: inclusion-minimal variable sets hitting the
/// support of every generator.
pub fn minimal_primes(ideal: &MonomialIdeal) -> Result<Vec<MonomialPrime>> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let masks = ideal.support_masks()?;
    let mut primes: Vec<MonomialPrime> = minimal_transversals(&masks)
        .into_iter()
        .map(MonomialPrime::from_mask)
        .collect();
    primes.sort();
    Ok(primes)
}

/// The variable-copying map from a ring to the polarized ring.
#[derive(Debug, Clone)]
pub struct Polarization {
    source: RingSpec,
    target: RingSpec,
    /// Source variable -> target indices of its copies (copy `j` at `j-1`).
    copies: Vec<Vec<usize>>,
    /// Target variable -> (source variable, 1-based copy index).
    origin: Vec<(usize, u64)>,
}

impl Polarization {
    pub fn source(&self) -> &RingSpec {
        &self.source
    }

    pub fn target(&self) -> &RingSpec {
        &self.target
    }

    pub fn copies(&self, source_var: usize) -> &[usize] {
        &self.copies[source_var]
    }

    pub fn origin(&self, target_var: usize) -> (usize, u64) {
        self.origin[target_var]
    }

    /// Drop copy indices; copies of the same source variable collapse.
    pub fn depolarize_prime(&self, prime: &MonomialPrime) -> MonomialPrime {
        MonomialPrime::new(prime.vars().iter().map(|&t| self.origin[t].0))
    }
}

/// Polarize: each `x^a` inside a generator becomes the product of the first
/// `a` copies of `x`, giving a squarefree ideal in a ring with `d_x(I)`
/// copies of each `x`.
pub fn polarize(ideal: &MonomialIdeal) -> Result<(MonomialIdeal, Polarization)> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let source = ideal.ring().clone();
    let degs = ideal.max_degrees();
    let mut names: Vec<String> = Vec::new();
    let mut copies: Vec<Vec<usize>> = vec![Vec::new(); source.len()];
    let mut origin: Vec<(usize, u64)> = Vec::new();
    for (v, &d) in degs.iter().enumerate() {
        for j in 1..=d {
            copies[v].push(names.len());
            origin.push((v, j));
            names.push(format!("{}_{}", source.name(v), j));
        }
    }
    let target = RingSpec::new(names)?;
    let gens: Vec<Monomial> = ideal
        .gens()
        .iter()
        .map(|g| {
            let mut exps = vec![0u64; target.len()];
            for v in g.support() {
                for &t in &copies[v][..g.exponent(v) as usize] {
                    exps[t] = 1;
                }
            }
            Monomial::new(exps)
        })
        .collect();
    let polarized = MonomialIdeal::new(target.clone(), gens)?;
    Ok((
        polarized,
        Polarization {
            source,
            target,
            copies,
            origin,
        },
    ))
}

/// `Ass(R/I)` through the polarization: a squarefree ideal has no embedded
/// primes, so the associated primes upstairs are its minimal primes, and
/// dropping copy indices recovers the associated primes downstairs.
pub fn associated_primes(ideal: &MonomialIdeal) -> Result<Vec<MonomialPrime>> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let (polarized, map) = polarize(ideal)?;
    let upstairs = minimal_primes(&polarized)?;
    let set: BTreeSet<MonomialPrime> = upstairs
        .iter()
        .map(|w| map.depolarize_prime(w))
        .collect();
    Ok(set.into_iter().collect())
}

/// `Ass(R/I)` from the definition: scan monomials `c` with
/// `d_x(c) <= d_x(I)` for every variable and keep the quotients `(I : c)`
/// that are generated by variables. Independent of [`associated_primes`];
/// the two are differentially tested.
pub fn associated_primes_bruteforce(
    ideal: &MonomialIdeal,
    budget: &Budget,
) -> Result<Vec<MonomialPrime>> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let degs = ideal.max_degrees();
    let mut lattice: u64 = 1;
    for &d in &degs {
        lattice = lattice.saturating_mul(d + 1);
        if lattice > budget.witness_candidates {
            return Err(Error::BudgetExceeded {
                what: "witness candidates",
                value: lattice,
                limit: budget.witness_candidates,
            });
        }
    }

    let n = ideal.nvars();
    let mut found: BTreeSet<MonomialPrime> = BTreeSet::new();
    let mut exps = vec![0u64; n];
    loop {
        let c = Monomial::new(exps.clone());
        if !ideal.contains(&c) {
            let quotient = ideal.colon(&c)?;
            if quotient
                .gens()
                .iter()
                .all(|g| g.total_degree() == 1)
            {
                found.insert(MonomialPrime::new(
                    quotient.gens().iter().flat_map(|g| g.support().next()),
                ));
            }
        }
        // odometer over the divisor box
        let mut v = 0;
        loop {
            if v == n {
                return Ok(found.into_iter().collect());
            }
            if exps[v] < degs[v] {
                exps[v] += 1;
                break;
            }
            exps[v] = 0;
            v += 1;
        }
    }
}

/// `N*(w)`: variables sharing a generator with `w` in which the degree of
/// `w` stays below its maximum over the generators.
pub fn star_neighbors(ideal: &MonomialIdeal, w: usize) -> Vec<usize> {
    let d = ideal
        .gens()
        .iter()
        .map(|g| g.exponent(w))
        .max()
        .unwrap_or(0);
    let mut out: BTreeSet<usize> = BTreeSet::new();
    for g in ideal.gens() {
        let dw = g.exponent(w);
        if dw > 0 && dw < d {
            out.extend(g.support().filter(|&z| z != w));
        }
    }
    out.into_iter().collect()
}

/// `N*(w)` for every variable at once.
pub fn star_neighbor_map(ideal: &MonomialIdeal) -> Vec<Vec<usize>> {
    (0..ideal.nvars())
        .map(|w| star_neighbors(ideal, w))
        .collect()
}

/// True iff every variable reaches its maximal degree in every generator it
/// divides; equivalently every `N*(x)` is empty. Under this hypothesis the
/// ideal has no embedded primes and shares its minimal primes with its
/// squarefree part.
pub fn has_no_embedded_hypothesis(ideal: &MonomialIdeal) -> bool {
    let degs = ideal.max_degrees();
    ideal.gens().iter().all(|g| {
        g.support().all(|v| g.exponent(v) == degs[v])
    })
}

/// One labelled variable of an embedded prime beyond its minimal prime:
/// `z` lies in `N*(witness)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtraVar {
    pub z: usize,
    pub witness: usize,
}

/// An embedded associated prime written as a minimal prime plus
/// star-neighbor variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddedDecomposition {
    pub minimal_prime: MonomialPrime,
    pub extras: Vec<ExtraVar>,
}

impl EmbeddedDecomposition {
    /// The decomposed prime: minimal prime plus all extras.
    pub fn prime(&self) -> MonomialPrime {
        MonomialPrime::new(
            self.minimal_prime
                .vars()
                .iter()
                .copied()
                .chain(self.extras.iter().map(|e| e.z)),
        )
    }
}

/// Write an embedded `Q` as `(Q', z_1, ..., z_t)` with `Q'` minimal and each
/// `z_j` a star neighbor of some witness variable. Among valid choices the
/// result is deterministic: fewest extras first, then lexicographically
/// least `Q'`, then the least witness per extra variable.
pub fn embedded_decomposition(
    ideal: &MonomialIdeal,
    q: &MonomialPrime,
) -> Result<EmbeddedDecomposition> {
    let min = minimal_primes(ideal)?;
    if min.contains(q) {
        return Err(Error::NotEmbedded);
    }
    let ass = associated_primes(ideal)?;
    if !ass.contains(q) {
        return Err(Error::NotAssociated);
    }
    let star = star_neighbor_map(ideal);
    let witnesses = |z: usize| -> Option<usize> {
        (0..ideal.nvars()).find(|&w| star[w].contains(&z))
    };

    let mut candidates: Vec<&MonomialPrime> = min
        .iter()
        .filter(|p| p.is_strict_subset_of(q))
        .collect();
    candidates.sort_by_key(|p| (q.len() - p.len(), p.vars().to_vec()));

    for p in candidates {
        let zs = q.minus(p);
        let labelled: Option<Vec<ExtraVar>> = zs
            .iter()
            .map(|&z| witnesses(z).map(|w| ExtraVar { z, witness: w }))
            .collect();
        if let Some(extras) = labelled {
            return Ok(EmbeddedDecomposition {
                minimal_prime: p.clone(),
                extras,
            });
        }
    }
    Err(Error::NoDecomposition(format!(
        "({})",
        q.names(ideal.ring()).join(", ")
    )))
}

/// True when no prime in the list contains the form's whole support. A sum
/// of distinct variables lies in a monomial prime iff every summand does.
pub fn form_avoids_all(primes: &[MonomialPrime], form: &LinearForm) -> bool {
    !primes
        .iter()
        .any(|p| form.vars().iter().all(|&v| p.contains_var(v)))
}

/// A sum of distinct variables is regular on `R/I` iff no associated prime
/// contains its whole support.
pub fn is_regular_linear_form(ideal: &MonomialIdeal, form: &LinearForm) -> Result<bool> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let ass = associated_primes(ideal)?;
    Ok(form_avoids_all(&ass, form))
}
