//! Seeded random instance generators for the differential suites. Every
//! generator takes the RNG by value reference so a fixed seed reproduces
//! the exact instance stream.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::ideal::MonomialIdeal;
use crate::ring::{LinearForm, Monomial, RingSpec};
use crate::transforms::{self, BinomialContext};

fn shuffled_vars<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut vars: Vec<usize> = (0..n).collect();
    vars.shuffle(rng);
    vars
}

/// A nonconstant monomial with bounded support size and per-variable degree.
pub fn random_monomial<R: Rng>(
    rng: &mut R,
    nvars: usize,
    max_deg: u64,
    max_support: usize,
) -> Monomial {
    let support = rng.random_range(1..=max_support.min(nvars));
    let vars = shuffled_vars(rng, nvars);
    let mut exps = vec![0u64; nvars];
    for &v in vars.iter().take(support) {
        exps[v] = rng.random_range(1..=max_deg);
    }
    Monomial::new(exps)
}

/// A monomial restricted to the given variables; the identity is allowed
/// when `allow_one` is set.
fn random_monomial_on<R: Rng>(
    rng: &mut R,
    nvars: usize,
    pool: &[usize],
    max_deg: u64,
    allow_one: bool,
) -> Monomial {
    let lo = usize::from(!allow_one);
    let support = rng.random_range(lo..=pool.len());
    let mut pool = pool.to_vec();
    pool.shuffle(rng);
    let mut exps = vec![0u64; nvars];
    for &v in pool.iter().take(support) {
        exps[v] = rng.random_range(1..=max_deg);
    }
    Monomial::new(exps)
}

/// A random nonzero proper monomial ideal.
pub fn random_ideal<R: Rng>(
    rng: &mut R,
    nvars: usize,
    max_deg: u64,
    max_gens: usize,
) -> MonomialIdeal {
    let ring = RingSpec::numbered("x", nvars).expect("valid ring");
    let count = rng.random_range(1..=max_gens);
    let gens: Vec<Monomial> = (0..count)
        .map(|_| random_monomial(rng, nvars, max_deg, nvars.min(3)))
        .collect();
    MonomialIdeal::new(ring, gens).expect("generators are nonconstant")
}

pub fn random_squarefree_ideal<R: Rng>(
    rng: &mut R,
    nvars: usize,
    max_gens: usize,
) -> MonomialIdeal {
    random_ideal(rng, nvars, 1, max_gens)
}

/// A random ideal in which every variable reaches the same degree in every
/// generator it divides: take a squarefree skeleton and raise each variable
/// to a fixed random power everywhere at once.
pub fn random_uniform_degree_ideal<R: Rng>(
    rng: &mut R,
    nvars: usize,
    max_deg: u64,
    max_gens: usize,
) -> MonomialIdeal {
    let skeleton = random_squarefree_ideal(rng, nvars, max_gens);
    let degs: Vec<u64> = (0..nvars).map(|_| rng.random_range(1..=max_deg)).collect();
    let gens: Vec<Monomial> = skeleton
        .gens()
        .iter()
        .map(|g| {
            Monomial::new(
                (0..nvars)
                    .map(|v| if g.exponent(v) > 0 { degs[v] } else { 0 })
                    .collect(),
            )
        })
        .collect();
    MonomialIdeal::new(skeleton.ring().clone(), gens).expect("still proper")
}

/// A linear form `b_0 + b_1 + ... + b_t` such that every generator divisible
/// by `b_0` is divisible by some `b_i`, `i >= 1`. `None` when no variable of
/// the ideal can serve as `b_0`.
pub fn random_covering_form<R: Rng>(
    rng: &mut R,
    ideal: &MonomialIdeal,
) -> Option<LinearForm> {
    let candidates: Vec<usize> = (0..ideal.nvars())
        .filter(|&v| {
            let gens: Vec<_> = ideal
                .gens()
                .iter()
                .filter(|g| g.exponent(v) > 0)
                .collect();
            !gens.is_empty() && gens.iter().all(|g| g.support().count() >= 2)
        })
        .collect();
    let &b0 = candidates.get(rng.random_range(0..candidates.len().max(1)))?;
    let mut rest: Vec<usize> = Vec::new();
    for g in ideal.gens().iter().filter(|g| g.exponent(b0) > 0) {
        let others: Vec<usize> = g.support().filter(|&v| v != b0).collect();
        let pick = others[rng.random_range(0..others.len())];
        if !rest.contains(&pick) {
            rest.push(pick);
        }
    }
    rest.sort_unstable();
    let mut vars = vec![b0];
    vars.extend(rest);
    LinearForm::new(vars).ok()
}

/// An ideal with a leaf `a` whose unique generator is divisible by `a*b`,
/// returned with the pair `(a, b)`.
pub fn random_leaf_context<R: Rng>(rng: &mut R) -> (MonomialIdeal, usize, usize) {
    loop {
        let nvars = rng.random_range(4..=6);
        let ring = RingSpec::numbered("x", nvars).expect("valid ring");
        let vars = shuffled_vars(rng, nvars);
        let (a, b) = (vars[0], vars[1]);
        let pool = &vars[2..];
        let mut m1 = Monomial::from_pairs(
            nvars,
            &[(a, rng.random_range(1..=2)), (b, rng.random_range(1..=2))],
        );
        m1 = m1.mul(&random_monomial_on(rng, nvars, pool, 2, true));
        let no_a: Vec<usize> = (0..nvars).filter(|&v| v != a).collect();
        let extras = (0..rng.random_range(1..=4))
            .map(|_| random_monomial_on(rng, nvars, &no_a, 3, false));
        let ideal = MonomialIdeal::new(ring, std::iter::once(m1).chain(extras))
            .expect("nonconstant generators");
        if transforms::binomial_context(&ideal, a, b) == Some(BinomialContext::Leaf) {
            return (ideal, a, b);
        }
    }
}

/// An ideal in which `(a, b)` is a leaf pair, returned with the pair.
pub fn random_leaf_pair_context<R: Rng>(rng: &mut R) -> (MonomialIdeal, usize, usize) {
    loop {
        let nvars = rng.random_range(5..=6);
        let ring = RingSpec::numbered("x", nvars).expect("valid ring");
        let vars = shuffled_vars(rng, nvars);
        let (a, b) = (vars[0], vars[1]);
        let pool = &vars[2..];
        let split = rng.random_range(1..pool.len());
        let (zs, ws) = pool.split_at(split);
        let z = random_monomial_on(rng, nvars, zs, 2, false);
        let w = random_monomial_on(rng, nvars, ws, 2, false);
        let m1 = z.mul(&Monomial::from_pairs(nvars, &[(a, rng.random_range(1..=2))]));
        let m2 = w.mul(&Monomial::from_pairs(nvars, &[(b, rng.random_range(1..=2))]));
        let m3 = z.mul(&w);
        let no_ab: Vec<usize> = (0..nvars).filter(|&v| v != a && v != b).collect();
        let extras = (0..rng.random_range(0..=2))
            .map(|_| random_monomial_on(rng, nvars, &no_ab, 2, false));
        let ideal = MonomialIdeal::new(ring, [m1, m2, m3].into_iter().chain(extras))
            .expect("nonconstant generators");
        if transforms::binomial_context(&ideal, a, b) == Some(BinomialContext::LeafPair) {
            return (ideal, a, b);
        }
    }
}

/// Either kind of validated binomial context.
pub fn random_binomial_context<R: Rng>(rng: &mut R) -> (MonomialIdeal, usize, usize) {
    if rng.random_bool(0.5) {
        random_leaf_context(rng)
    } else {
        random_leaf_pair_context(rng)
    }
}

/// An ideal satisfying the trinomial transform preconditions at `(a, b, c)`.
pub fn random_trinomial_context<R: Rng>(rng: &mut R) -> (MonomialIdeal, usize, usize, usize) {
    loop {
        let nvars = rng.random_range(5..=6);
        let ring = RingSpec::numbered("x", nvars).expect("valid ring");
        let vars = shuffled_vars(rng, nvars);
        let (a, b, c) = (vars[0], vars[1], vars[2]);
        let pool = &vars[3..];
        let mut gens: Vec<Monomial> = Vec::new();
        let ab = Monomial::from_pairs(nvars, &[(a, 1), (b, 1)]);
        let ac = Monomial::from_pairs(nvars, &[(a, 1), (c, 1)]);
        if rng.random_bool(0.8) {
            gens.push(ab.mul(&random_monomial_on(rng, nvars, pool, 2, true)));
        }
        if rng.random_bool(0.8) {
            gens.push(ac.mul(&random_monomial_on(rng, nvars, pool, 2, true)));
        }
        for _ in 0..rng.random_range(1..=3) {
            let base = random_monomial_on(rng, nvars, pool, 2, gens.is_empty());
            let side = rng.random_range(0..3);
            let extra = match side {
                0 => base.mul(&Monomial::variable(b, nvars)),
                1 => base.mul(&Monomial::variable(c, nvars)),
                _ if !base.is_one() => base,
                _ => continue,
            };
            gens.push(extra);
        }
        if gens.is_empty() {
            continue;
        }
        let ideal = MonomialIdeal::new(ring, gens).expect("nonconstant generators");
        if transforms::ini_trinomial(&ideal, a, b, c).is_ok() {
            return (ideal, a, b, c);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generators_are_reproducible() {
        let mut a = ChaCha8Rng::seed_from_u64(7);
        let mut b = ChaCha8Rng::seed_from_u64(7);
        assert_eq!(random_ideal(&mut a, 4, 3, 5), random_ideal(&mut b, 4, 3, 5));
    }

    #[test]
    fn uniform_degree_ideals_satisfy_their_hypothesis() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let i = random_uniform_degree_ideal(&mut rng, 5, 3, 5);
            assert!(crate::primes::has_no_embedded_hypothesis(&i), "{i}");
        }
    }

    #[test]
    fn covering_forms_cover() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let mut produced = 0;
        for _ in 0..50 {
            let i = random_uniform_degree_ideal(&mut rng, 5, 2, 4);
            if let Some(f) = random_covering_form(&mut rng, &i) {
                produced += 1;
                let b0 = f.vars()[0];
                for g in i.gens().iter().filter(|g| g.exponent(b0) > 0) {
                    assert!(
                        f.vars()[1..].iter().any(|&v| g.exponent(v) > 0),
                        "{i} not covered at {g:?}"
                    );
                }
            }
        }
        assert!(produced > 10);
    }

    #[test]
    fn context_generators_validate() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..20 {
            let (i, a, b) = random_binomial_context(&mut rng);
            assert!(transforms::binomial_context(&i, a, b).is_some());
            let (i, a, b, c) = random_trinomial_context(&mut rng);
            assert!(transforms::ini_trinomial(&i, a, b, c).is_ok());
        }
    }
}
