//! Simplicial complexes on bitset vertex sets, face enumeration, and exact
//! reduced homology ranks.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;

use super::rank::{rank_bigint, rank_gf2};

/// Coefficient field for homology ranks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum HomologyField {
    #[default]
    Rational,
    Gf2,
}

impl std::str::FromStr for HomologyField {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rational" | "q" => Ok(HomologyField::Rational),
            "gf2" | "f2" => Ok(HomologyField::Gf2),
            other => Err(Error::InvalidArgument(format!("unknown field `{other}`"))),
        }
    }
}

/// A simplicial complex given by its facets (maximal faces) as bitmasks over
/// a fixed vertex set. Downward closure is implicit. The empty complex
/// `{∅}` is represented by the single facet `0`; a complex with no faces at
/// all cannot be built (every complex here contains the empty face).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: usize,
    facets: Vec<u64>,
}

impl SimplicialComplex {
    /// Build from candidate facets; non-maximal entries are dropped.
    pub fn new(vertices: usize, facets: impl IntoIterator<Item = u64>) -> Result<Self> {
        if vertices > 64 {
            return Err(Error::VariableLimit(vertices));
        }
        let mut maximal: Vec<u64> = Vec::new();
        for f in facets.into_iter().chain([0]) {
            if maximal.iter().any(|&g| f & g == f) {
                continue;
            }
            maximal.retain(|&g| g & f != g);
            maximal.push(f);
        }
        maximal.sort_unstable();
        Ok(SimplicialComplex {
            vertices,
            facets: maximal,
        })
    }

    pub fn from_vertex_sets(vertices: usize, facets: &[Vec<usize>]) -> Result<Self> {
        Self::new(
            vertices,
            facets
                .iter()
                .map(|f| f.iter().fold(0u64, |m, &v| m | (1 << v))),
        )
    }

    /// The Stanley-Reisner complex of a squarefree ideal: faces are the
    /// subsets whose product avoids the ideal.
    pub fn stanley_reisner(ideal: &MonomialIdeal, budget: &Budget) -> Result<Self> {
        if !ideal.is_squarefree() {
            return Err(Error::InvalidArgument(
                "the Stanley-Reisner complex needs a squarefree ideal".into(),
            ));
        }
        let n = ideal.nvars();
        if n > 64 {
            return Err(Error::VariableLimit(n));
        }
        let supports = ideal.support_masks()?;
        let sigma = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let faces = faces_by_card(&supports, sigma, budget)?;
        let all: Vec<u64> = faces.into_iter().flatten().collect();
        let facets = all
            .iter()
            .copied()
            .filter(|&f| !all.iter().any(|&g| g != f && f & g == f));
        Self::new(n, facets)
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn facets(&self) -> &[u64] {
        &self.facets
    }

    pub fn facet_vertex_sets(&self) -> Vec<Vec<usize>> {
        self.facets
            .iter()
            .map(|&f| (0..self.vertices).filter(|v| f & (1 << v) != 0).collect())
            .collect()
    }

    /// The induced subcomplex on a vertex subset.
    pub fn restrict(&self, mask: u64) -> SimplicialComplex {
        SimplicialComplex::new(self.vertices, self.facets.iter().map(|&f| f & mask))
            .expect("vertex count unchanged")
    }

    /// All faces grouped by cardinality (`faces[k]` holds the `k`-vertex
    /// faces, so `faces[0]` is the empty face). A set is a face iff it is
    /// contained in some facet.
    pub fn faces_by_card(&self, budget: &Budget) -> Result<Vec<Vec<u64>>> {
        let is_face = |s: u64| self.facets.iter().any(|&f| s & f == s);
        faces_by_card_with(self.vertices, &is_face, budget)
    }

    /// Reduced homology ranks: `ranks[k]` is the rank of the reduced
    /// homology in dimension `k - 1`, so `ranks[0]` sits in dimension -1
    /// and `ranks[d + 1]` in dimension `d`.
    pub fn reduced_homology(&self, field: HomologyField, budget: &Budget) -> Result<Vec<usize>> {
        Ok(homology_ranks(&self.faces_by_card(budget)?, field))
    }

    /// Ranks for dimensions `0..` only (dimension -1 is nonzero only for
    /// the empty complex).
    pub fn homology_ranks(&self, field: HomologyField, budget: &Budget) -> Result<Vec<usize>> {
        let mut ranks = self.reduced_homology(field, budget)?;
        if !ranks.is_empty() {
            ranks.remove(0);
        }
        Ok(ranks)
    }
}

/// Faces of the complex `{ s ⊆ sigma : no support ⊆ s }`, grouped by
/// cardinality. DFS over vertices in increasing order; a branch dies as
/// soon as the face would swallow a support.
pub(crate) fn faces_by_card(
    supports: &[u64],
    sigma: u64,
    budget: &Budget,
) -> Result<Vec<Vec<u64>>> {
    let relevant: Vec<u64> = supports.iter().copied().filter(|&s| s & sigma == s).collect();
    let is_face = |s: u64| !relevant.iter().any(|&sup| sup & s == sup);
    faces_by_card_in(sigma, &is_face, budget)
}

fn faces_by_card_with(
    vertices: usize,
    is_face: &dyn Fn(u64) -> bool,
    budget: &Budget,
) -> Result<Vec<Vec<u64>>> {
    let sigma = if vertices == 64 {
        u64::MAX
    } else {
        (1u64 << vertices) - 1
    };
    faces_by_card_in(sigma, is_face, budget)
}

fn faces_by_card_in(
    sigma: u64,
    is_face: &dyn Fn(u64) -> bool,
    budget: &Budget,
) -> Result<Vec<Vec<u64>>> {
    if !is_face(0) {
        return Err(Error::InvalidArgument(
            "the empty set must be a face".into(),
        ));
    }
    let verts: Vec<u64> = (0..64)
        .filter(|v| sigma & (1u64 << v) != 0)
        .map(|v| 1u64 << v)
        .collect();
    let mut out: Vec<Vec<u64>> = vec![vec![0]];
    let mut total: u64 = 1;
    // stack of (face, index of next vertex to try)
    let mut stack: Vec<(u64, usize)> = vec![(0, 0)];
    while let Some((face, from)) = stack.pop() {
        for (i, &v) in verts.iter().enumerate().skip(from) {
            let cand = face | v;
            if is_face(cand) {
                total += 1;
                if total > budget.max_faces {
                    return Err(Error::BudgetExceeded {
                        what: "simplicial faces",
                        value: total,
                        limit: budget.max_faces,
                    });
                }
                let card = cand.count_ones() as usize;
                if out.len() <= card {
                    out.resize(card + 1, Vec::new());
                }
                out[card].push(cand);
                stack.push((cand, i + 1));
            }
        }
    }
    for layer in &mut out {
        layer.sort_unstable();
    }
    Ok(out)
}

/// Boundary matrix from `k`-vertex faces to `(k-1)`-vertex faces, with the
/// usual alternating signs over sorted vertex lists. Entries are in
/// `{-1, 0, 1}`; the `i8` form feeds either rank routine.
fn boundary_matrix(upper: &[u64], lower: &[u64]) -> Vec<Vec<i8>> {
    let index: HashMap<u64, usize> = lower.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    upper
        .iter()
        .map(|&face| {
            let mut row = vec![0i8; lower.len()];
            let mut sign = 1i8;
            let mut rest = face;
            while rest != 0 {
                let v = rest & rest.wrapping_neg();
                rest ^= v;
                let sub = face ^ v;
                row[index[&sub]] = sign;
                sign = -sign;
            }
            row
        })
        .collect()
}

fn matrix_rank(m: &[Vec<i8>], field: HomologyField) -> usize {
    match field {
        HomologyField::Rational => rank_bigint(
            m.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        ),
        HomologyField::Gf2 => {
            let ncols = m.first().map_or(0, |r| r.len());
            let blocks = ncols.div_ceil(64).max(1);
            rank_gf2(
                m.iter()
                    .map(|r| {
                        let mut row = vec![0u64; blocks];
                        for (i, &x) in r.iter().enumerate() {
                            if x != 0 {
                                row[i / 64] |= 1 << (i % 64);
                            }
                        }
                        row
                    })
                    .collect(),
                ncols,
            )
        }
    }
}

/// Reduced homology ranks from faces grouped by cardinality: `ranks[k]` is
/// the rank in dimension `k - 1`.
pub(crate) fn homology_ranks(faces: &[Vec<u64>], field: HomologyField) -> Vec<usize> {
    let layers = faces.len();
    // boundary_rank[k] = rank of the map from k-vertex faces down to
    // (k-1)-vertex faces; the map off the empty face is zero.
    let mut boundary_rank = vec![0usize; layers + 1];
    for k in 1..layers {
        if faces[k].is_empty() || faces[k - 1].is_empty() {
            continue;
        }
        boundary_rank[k] = matrix_rank(&boundary_matrix(&faces[k], &faces[k - 1]), field);
    }
    (0..layers)
        .map(|k| faces[k].len() - boundary_rank[k] - boundary_rank[k + 1])
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ranks(c: &SimplicialComplex) -> Vec<usize> {
        c.reduced_homology(HomologyField::Rational, &Budget::default())
            .unwrap()
    }

    #[test]
    fn hollow_triangle_is_a_circle() {
        let k = SimplicialComplex::from_vertex_sets(3, &[vec![0, 1], vec![0, 2], vec![1, 2]])
            .unwrap();
        // ranks by dimension -1, 0, 1
        assert_eq!(ranks(&k), vec![0, 0, 1]);
        assert_eq!(
            k.homology_ranks(HomologyField::Rational, &Budget::default())
                .unwrap(),
            vec![0, 1]
        );
    }

    #[test]
    fn full_simplex_is_contractible() {
        let k = SimplicialComplex::from_vertex_sets(3, &[vec![0, 1, 2]]).unwrap();
        assert_eq!(ranks(&k), vec![0, 0, 0, 0]);
    }

    #[test]
    fn two_points_have_one_extra_component() {
        let k = SimplicialComplex::from_vertex_sets(2, &[vec![0], vec![1]]).unwrap();
        assert_eq!(ranks(&k), vec![0, 1]);
    }

    #[test]
    fn empty_complex_concentrates_in_dimension_minus_one() {
        let k = SimplicialComplex::new(3, []).unwrap();
        assert_eq!(k.facets(), &[0]);
        assert_eq!(ranks(&k), vec![1]);
    }

    #[test]
    fn gf2_matches_rationals_on_torus_free_examples() {
        let cases = [
            SimplicialComplex::from_vertex_sets(3, &[vec![0, 1], vec![0, 2], vec![1, 2]])
                .unwrap(),
            SimplicialComplex::from_vertex_sets(4, &[vec![0, 1, 2], vec![2, 3]]).unwrap(),
            SimplicialComplex::from_vertex_sets(2, &[vec![0], vec![1]]).unwrap(),
        ];
        for k in cases {
            assert_eq!(
                k.reduced_homology(HomologyField::Rational, &Budget::default())
                    .unwrap(),
                k.reduced_homology(HomologyField::Gf2, &Budget::default())
                    .unwrap()
            );
        }
    }

    #[test]
    fn restriction_of_hollow_triangle_to_two_vertices() {
        let k = SimplicialComplex::from_vertex_sets(3, &[vec![0, 1], vec![0, 2], vec![1, 2]])
            .unwrap();
        let r = k.restrict(0b011);
        assert_eq!(r.facets(), &[0b011]);
        assert_eq!(ranks(&r), vec![0, 0, 0]);
    }

    #[test]
    fn facets_drop_dominated_candidates() {
        let k = SimplicialComplex::from_vertex_sets(3, &[vec![0], vec![0, 1]]).unwrap();
        assert_eq!(k.facets(), &[0b011]);
    }

    #[test]
    fn stanley_reisner_of_pentagon_cycle() {
        let i = crate::format::parse_ideal(
            "vars x1 x2 x3 x4 x5\ngens x1*x2 x2*x3 x3*x4 x4*x5 x1*x5",
        )
        .unwrap();
        let k = SimplicialComplex::stanley_reisner(&i, &Budget::default()).unwrap();
        // facets are the maximal independent sets: the five diagonals
        assert_eq!(k.facets().len(), 5);
        assert_eq!(ranks(&k), vec![0, 0, 1]);
    }

    #[test]
    fn face_budget_guard() {
        let i = crate::format::parse_ideal("vars x1 x2 x3 x4 x5 x6 x7 x8 x9 x10\ngens x1*x2")
            .unwrap();
        let tiny = Budget {
            max_faces: 16,
            ..Budget::default()
        };
        assert!(matches!(
            SimplicialComplex::stanley_reisner(&i, &tiny),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
