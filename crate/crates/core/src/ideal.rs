//! Monomial ideals with a canonical minimal generating set.

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{Monomial, RingSpec};

/// A monomial ideal, stored as its unique inclusion-minimal generating set,
/// sorted by exponent vector. Empty generators denote the zero ideal; the
/// unit ideal is rejected at construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ring: RingSpec,
    gens: Vec<Monomial>,
}

/// Keep only the divisibility-minimal monomials, sorted and deduplicated.
fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort();
    gens.dedup();
    let keep: Vec<bool> = gens
        .iter()
        .enumerate()
        .map(|(i, m)| {
            !gens
                .iter()
                .enumerate()
                .any(|(j, d)| j != i && d.divides(m) && (d != m || j < i))
        })
        .collect();
    gens.into_iter()
        .zip(keep)
        .filter_map(|(m, k)| k.then_some(m))
        .collect()
}

impl MonomialIdeal {
    /// Canonicalize an arbitrary generating set: the unique inclusion-minimal
    /// antichain generating the same ideal.
    pub fn new(ring: RingSpec, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let gens: Vec<Monomial> = gens.into_iter().collect();
        for g in &gens {
            if g.nvars() != ring.len() {
                return Err(Error::RingMismatch);
            }
            if g.is_one() {
                return Err(Error::UnitIdeal);
            }
        }
        Ok(MonomialIdeal {
            ring,
            gens: minimalize(gens),
        })
    }

    pub fn zero(ring: RingSpec) -> Self {
        MonomialIdeal { ring, gens: vec![] }
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn nvars(&self) -> usize {
        self.ring.len()
    }

    /// Membership: a monomial lies in the ideal iff some generator divides it.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// The quotient `(I : c)`, generated by `g / gcd(g, c)` over the
    /// generators and minimalized. Fails with [`Error::UnitIdeal`] when
    /// `c` itself lies in the ideal, since the result would be the whole ring.
    pub fn colon(&self, c: &Monomial) -> Result<Self> {
        if c.nvars() != self.ring.len() {
            return Err(Error::RingMismatch);
        }
        Self::new(
            self.ring.clone(),
            self.gens.iter().map(|g| g.div_exact(&g.gcd(c))),
        )
    }

    /// `d_x(I)`: the largest exponent of `v` over the generators.
    pub fn var_degree(&self, v: usize) -> Result<u64> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        Ok(self.gens.iter().map(|g| g.exponent(v)).max().unwrap_or(0))
    }

    /// `d_x(I)` for every variable at once; all zeros for the zero ideal.
    pub fn max_degrees(&self) -> Vec<u64> {
        let mut degs = vec![0u64; self.ring.len()];
        for g in &self.gens {
            for (v, d) in degs.iter_mut().enumerate() {
                *d = (*d).max(g.exponent(v));
            }
        }
        degs
    }

    /// Every exponent clamped to at most 1, then minimalized.
    pub fn squarefree_part(&self) -> Self {
        MonomialIdeal {
            ring: self.ring.clone(),
            gens: minimalize(self.gens.iter().map(Monomial::squarefree).collect()),
        }
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// The ideal generated by the `n`-th powers of the generators.
    pub fn bracket_power(&self, n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("bracket power needs n >= 1".into()));
        }
        Ok(MonomialIdeal {
            ring: self.ring.clone(),
            gens: minimalize(self.gens.iter().map(|g| g.pow(n)).collect()),
        })
    }

    /// Generator supports as bitmasks.
    pub fn support_masks(&self) -> Result<Vec<u64>> {
        self.gens.iter().map(Monomial::support_mask).collect()
    }

    /// lcm of all generators; 1 for the zero ideal.
    pub fn lcm_of_gens(&self) -> Monomial {
        self.gens
            .iter()
            .fold(Monomial::one(self.ring.len()), |acc, g| acc.lcm(g))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "(0)");
        }
        let parts: Vec<String> = self
            .gens
            .iter()
            .map(|g| g.display(&self.ring).to_string())
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::parse_ideal;
    use proptest::prelude::*;

    fn ideal(text: &str) -> MonomialIdeal {
        parse_ideal(text).unwrap()
    }

    #[test]
    fn minimal_generators_drops_multiples() {
        let i = ideal("vars x1 x2 x3\ngens x1*x2 x1*x2*x3 x2*x3");
        assert_eq!(i.to_string(), "(x2*x3, x1*x2)");
    }

    #[test]
    fn minimal_generators_power_chain() {
        let i = ideal("vars x1\ngens x1^2 x1^3");
        assert_eq!(i.to_string(), "(x1^2)");
    }

    #[test]
    fn empty_gens_is_zero_ideal() {
        let i = ideal("vars x1 x2\ngens");
        assert!(i.is_zero());
        assert!(!i.contains(&Monomial::new(vec![1, 0])));
    }

    #[test]
    fn unit_ideal_rejected() {
        let ring = RingSpec::numbered("x", 2).unwrap();
        let err = MonomialIdeal::new(ring, vec![Monomial::one(2)]).unwrap_err();
        assert_eq!(err, Error::UnitIdeal);
    }

    #[test]
    fn colon_on_pentagon() {
        // (I(C_5) : x2) = (x1, x3, x4*x5), checked against the definition
        // m*c in I by brute force over divisors of the lcm below.
        let i = ideal("vars x1 x2 x3 x4 x5\ngens x1*x2 x2*x3 x3*x4 x4*x5 x1*x5");
        let c = Monomial::variable(1, 5);
        let q = i.colon(&c).unwrap();
        assert_eq!(q.to_string(), "(x4*x5, x3, x1)");

        // definition check: m in (I : c) iff m*c in I, over the divisor box
        let lcm = i.lcm_of_gens();
        for m in divisor_box(&lcm) {
            assert_eq!(q.contains(&m), i.contains(&m.mul(&c)), "m = {m:?}");
        }
    }

    #[test]
    fn colon_identity_and_powers() {
        let i = ideal("vars x1 x2\ngens x1^2");
        assert_eq!(i.colon(&Monomial::one(2)).unwrap(), i);
        let q = i.colon(&Monomial::variable(0, 2)).unwrap();
        assert_eq!(q.to_string(), "(x1)");
    }

    #[test]
    fn colon_by_member_is_unit() {
        let i = ideal("vars x1 x2\ngens x1*x2");
        let err = i.colon(&Monomial::new(vec![1, 1])).unwrap_err();
        assert_eq!(err, Error::UnitIdeal);
    }

    #[test]
    fn var_degree_examples() {
        // I = (a^2*b*c, a*d, b^3*c*d)
        let i = ideal("vars a b c d\ngens a^2*b*c a*d b^3*c*d");
        assert_eq!(i.var_degree(0).unwrap(), 2);
        assert_eq!(i.var_degree(1).unwrap(), 3);
        let zero = MonomialIdeal::zero(RingSpec::numbered("x", 2).unwrap());
        assert_eq!(zero.var_degree(0).unwrap_err(), Error::ZeroIdeal);
    }

    #[test]
    fn var_degree_absent_variable() {
        let i = ideal("vars a b c d e\ngens a^2*b*c a*d b^3*c*d");
        assert_eq!(i.var_degree(4).unwrap(), 0);
    }

    #[test]
    fn squarefree_part_examples() {
        let i = ideal("vars x1 x2 x3 x4\ngens x1^3*x2 x2*x3^2 x3^2*x4^4 x1^3*x4^4");
        let j = ideal("vars x1 x2 x3 x4\ngens x1*x2 x2*x3 x3*x4 x1*x4");
        assert_eq!(i.squarefree_part(), j);
        assert_eq!(j.squarefree_part(), j);
        assert_eq!(
            ideal("vars x1\ngens x1^3").squarefree_part(),
            ideal("vars x1\ngens x1")
        );
    }

    #[test]
    fn bracket_power_examples() {
        let i = ideal("vars x1 x2 x3\ngens x1*x2 x2*x3");
        assert_eq!(
            i.bracket_power(2).unwrap(),
            ideal("vars x1 x2 x3\ngens x1^2*x2^2 x2^2*x3^2")
        );
        assert_eq!(i.bracket_power(1).unwrap(), i);
        let j = ideal("vars x1 x2\ngens x1 x2");
        assert_eq!(
            j.bracket_power(3).unwrap(),
            ideal("vars x1 x2\ngens x1^3 x2^3")
        );
        assert!(j.bracket_power(0).is_err());
    }

    fn divisor_box(bound: &Monomial) -> Vec<Monomial> {
        let mut out = vec![Monomial::one(bound.nvars())];
        for v in 0..bound.nvars() {
            let mut next = Vec::new();
            for m in &out {
                for e in 0..=bound.exponent(v) {
                    let mut exps = m.exponents().to_vec();
                    exps[v] = e;
                    next.push(Monomial::new(exps));
                }
            }
            out = next;
        }
        out
    }

    fn arb_gens(n: usize, max_deg: u64, max_gens: usize) -> impl Strategy<Value = Vec<Monomial>> {
        prop::collection::vec(
            prop::collection::vec(0..=max_deg, n).prop_map(Monomial::new),
            1..=max_gens,
        )
        .prop_map(|gens| gens.into_iter().filter(|m| !m.is_one()).collect())
    }

    proptest! {
        #[test]
        fn minimalization_is_idempotent_and_order_independent(
            gens in arb_gens(4, 3, 6)
        ) {
            let ring = RingSpec::numbered("x", 4).unwrap();
            let i = MonomialIdeal::new(ring.clone(), gens.clone()).unwrap();
            let again = MonomialIdeal::new(ring.clone(), i.gens().to_vec()).unwrap();
            prop_assert_eq!(&again, &i);
            let mut rev = gens;
            rev.reverse();
            let j = MonomialIdeal::new(ring, rev).unwrap();
            prop_assert_eq!(&j, &i);
        }

        #[test]
        fn colon_matches_definition(
            gens in arb_gens(3, 3, 5),
            c in prop::collection::vec(0u64..=2, 3).prop_map(Monomial::new),
        ) {
            let ring = RingSpec::numbered("x", 3).unwrap();
            let i = MonomialIdeal::new(ring, gens).unwrap();
            prop_assume!(!i.is_zero());
            prop_assume!(!i.contains(&c));
            let q = i.colon(&c).unwrap();
            let lcm = i.lcm_of_gens().lcm(&c);
            for m in divisor_box(&lcm) {
                prop_assert_eq!(q.contains(&m), i.contains(&m.mul(&c)));
            }
        }

        #[test]
        fn membership_is_divisibility_by_a_generator(
            gens in arb_gens(3, 3, 5),
            m in prop::collection::vec(0u64..=4, 3).prop_map(Monomial::new),
        ) {
            let ring = RingSpec::numbered("x", 3).unwrap();
            let i = MonomialIdeal::new(ring, gens).unwrap();
            let direct = i.gens().iter().any(|g| g.divides(&m));
            prop_assert_eq!(i.contains(&m), direct);
        }
    }
}
