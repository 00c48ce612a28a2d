//! Resource limits for the exhaustive oracles.
//!
//! The brute-force witness scan, the Buchberger engine, and the homological
//! depth oracle all enumerate combinatorial search spaces that are small on
//! the inputs this crate targets but unbounded in general. Each enumeration
//! checks a budget and fails with [`Error::BudgetExceeded`] instead of
//! running away.

use crate::error::{Error, Result};

pub const DEFAULT_WITNESS_CANDIDATES: u64 = 1 << 24;
pub const DEFAULT_BUCHBERGER_PAIRS: u64 = 100_000;
pub const DEFAULT_POLARIZED_VARS: usize = 22;
pub const DEFAULT_MAX_FACES: u64 = 1 << 22;

/// Limits for the enumerative oracles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Maximum size of the witness lattice scanned by the brute-force
    /// associated-prime search.
    pub witness_candidates: u64,
    /// Maximum number of S-pairs the Buchberger engine processes.
    pub buchberger_pairs: u64,
    /// Maximum number of variables in the polarized ring accepted by the
    /// homological depth oracle.
    pub polarized_vars: usize,
    /// Maximum number of simplicial faces enumerated per complex.
    pub max_faces: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            witness_candidates: DEFAULT_WITNESS_CANDIDATES,
            buchberger_pairs: DEFAULT_BUCHBERGER_PAIRS,
            polarized_vars: DEFAULT_POLARIZED_VARS,
            max_faces: DEFAULT_MAX_FACES,
        }
    }
}

impl Budget {
    /// Default budget, overridden by the `MONOIDEAL_BUDGET` environment
    /// variable when set.
    ///
    /// Accepted forms: a bare integer, which replaces both enumeration
    /// budgets (`witness`, `pairs`), or a comma-separated list of
    /// `witness=N`, `pairs=N`, `polar-vars=N`, `faces=N`.
    pub fn from_env() -> Result<Self> {
        match std::env::var("MONOIDEAL_BUDGET") {
            Ok(spec) => Self::parse(&spec),
            Err(_) => Ok(Self::default()),
        }
    }

    pub fn parse(spec: &str) -> Result<Self> {
        let mut budget = Self::default();
        let spec = spec.trim();
        if spec.is_empty() {
            return Ok(budget);
        }
        if let Ok(n) = spec.parse::<u64>() {
            budget.witness_candidates = n;
            budget.buchberger_pairs = n;
            return Ok(budget);
        }
        for part in spec.split(',') {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("bad budget entry `{part}`")))?;
            let value: u64 = value
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad budget value `{value}`")))?;
            match key.trim() {
                "witness" => budget.witness_candidates = value,
                "pairs" => budget.buchberger_pairs = value,
                "polar-vars" => budget.polarized_vars = value as usize,
                "faces" => budget.max_faces = value,
                other => return Err(Error::Parse(format!("unknown budget key `{other}`"))),
            }
        }
        Ok(budget)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_bare_integer() {
        let b = Budget::parse("4096").unwrap();
        assert_eq!(b.witness_candidates, 4096);
        assert_eq!(b.buchberger_pairs, 4096);
        assert_eq!(b.polarized_vars, DEFAULT_POLARIZED_VARS);
    }

    #[test]
    fn parse_keyed() {
        let b = Budget::parse("witness=10,polar-vars=18").unwrap();
        assert_eq!(b.witness_candidates, 10);
        assert_eq!(b.polarized_vars, 18);
        assert_eq!(b.buchberger_pairs, DEFAULT_BUCHBERGER_PAIRS);
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(Budget::parse("witness").is_err());
        assert!(Budget::parse("speed=9").is_err());
    }
}
