//! Exact matrix ranks: fraction-free integer elimination over the rationals
//! and bitset elimination over GF(2). No floating point anywhere.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Rank over the rationals by one-step fraction-free (Bareiss) elimination.
/// Entries stay integral throughout; every division is exact.
pub fn rank_bigint(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        for r in (rank + 1)..rows {
            for j in (c + 1)..cols {
                let num = &m[rank][c] * &m[r][j] - &m[r][c] * &m[rank][j];
                m[r][j] = num / &prev;
            }
            m[r][c] = BigInt::zero();
        }
        prev = m[rank][c].clone();
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Rank over GF(2). Rows are bitsets packed into `u64` blocks.
pub fn rank_gf2(mut rows: Vec<Vec<u64>>, ncols: usize) -> usize {
    let mut rank = 0;
    for c in 0..ncols {
        let (block, bit) = (c / 64, 1u64 << (c % 64));
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][block] & bit != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        for r in 0..rows.len() {
            if r != rank && rows[r][block] & bit != 0 {
                let (head, tail) = rows.split_at_mut(r.max(rank));
                let (a, b) = if r < rank {
                    (&mut head[r], &tail[0])
                } else {
                    (&mut tail[0], &head[rank])
                };
                for (x, y) in a.iter_mut().zip(b.iter()) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn bigint_ranks() {
        assert_eq!(rank_bigint(big(&[&[1, 0], &[0, 1]])), 2);
        assert_eq!(rank_bigint(big(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank_bigint(big(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(rank_bigint(vec![]), 0);
        // boundary of a hollow triangle: rank 2
        assert_eq!(
            rank_bigint(big(&[&[-1, -1, 0], &[1, 0, -1], &[0, 1, 1]])),
            2
        );
    }

    #[test]
    fn gf2_ranks() {
        let rows = vec![vec![0b011u64], vec![0b110], vec![0b101]];
        assert_eq!(rank_gf2(rows, 3), 2);
        assert_eq!(rank_gf2(vec![vec![0]], 3), 0);
    }

    #[test]
    fn bareiss_agrees_with_gf2_on_generic_01_matrices() {
        // deterministic pseudo-random 0/1 matrices: over GF(2) the rank can
        // only drop, never rise.
        let mut state = 0x2545f4914f6cdd1du64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..20 {
            let rows = 6;
            let cols = 7;
            let m: Vec<Vec<u8>> = (0..rows)
                .map(|_| (0..cols).map(|_| (next() & 1) as u8).collect())
                .collect();
            let q = rank_bigint(
                m.iter()
                    .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                    .collect(),
            );
            let g = rank_gf2(
                m.iter()
                    .map(|r| {
                        vec![r
                            .iter()
                            .enumerate()
                            .fold(0u64, |acc, (i, &x)| acc | ((x as u64) << i))]
                    })
                    .collect(),
                cols,
            );
            assert!(g <= q);
        }
    }
}
