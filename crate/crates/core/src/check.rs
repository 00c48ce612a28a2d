//! The full verification battery: every headline claim the library rests on,
//! run end to end with fixed seeds and budgets. The CLI exposes this as
//! `monoideal check`; the acceptance test target asserts every report
//! passes.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::budget::Budget;
use crate::depth::{
    cycle_ideal, depth_cycle_formula, depth_oracle, depth_unicyclic_formula, unicyclic_ideal,
};
use crate::error::Result;
use crate::groebner;
use crate::ideal::MonomialIdeal;
use crate::primes::{
    associated_primes, associated_primes_bruteforce, embedded_decomposition,
    has_no_embedded_hypothesis, is_regular_linear_form, minimal_primes, star_neighbor_map,
    MonomialPrime,
};
use crate::random;
use crate::ring::{LinearForm, Monomial, RingSpec, TermOrder};
use crate::sequences::{cycle_sequence, unicyclic_sequence, verify_initially_regular, Engine};
use crate::transforms;

/// Outcome of one acceptance criterion.
#[derive(Debug, Clone)]
pub struct CheckReport {
    pub name: &'static str,
    pub passed: bool,
    pub details: String,
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} — {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.details
        )
    }
}

fn run(name: &'static str, body: impl FnOnce() -> Result<(bool, String)>) -> CheckReport {
    match body() {
        Ok((passed, details)) => CheckReport {
            name,
            passed,
            details,
        },
        Err(e) => CheckReport {
            name,
            passed: false,
            details: format!("error: {e}"),
        },
    }
}

/// Sequence verifications recorded for the final soundness cross-check.
type Ledger = Vec<(String, MonomialIdeal, usize)>;

/// Run all eight criteria. Deterministic for a fixed seed.
pub fn run_all(seed: u64, budget: &Budget) -> Vec<CheckReport> {
    let mut ledger: Ledger = Vec::new();
    let mut reports = Vec::with_capacity(8);
    reports.push(cycle_depth_criterion(budget));
    reports.push(sequence_realization_criterion(budget, &mut ledger));
    reports.push(transform_agreement_criterion(seed, budget));
    reports.push(embedded_example_criterion(budget));
    reports.push(embedded_suite_criterion(seed, budget));
    reports.push(corollary_suites_criterion(seed, budget));
    reports.push(unicyclic_depth_criterion(budget, &mut ledger));
    reports.push(soundness_criterion(budget, &ledger));
    reports
}

/// Criterion 1: the homological oracle reproduces the cycle depth
/// `ceil((n-1)/3)` for n = 3..11.
pub fn cycle_depth_criterion(budget: &Budget) -> CheckReport {
    run("cycle depth oracle matches ceil((n-1)/3) for n=3..11", || {
        let mut bad = Vec::new();
        for n in 3..=11 {
            let oracle = depth_oracle(&cycle_ideal(n)?, budget)?.value;
            let formula = depth_cycle_formula(n)?;
            if oracle != formula {
                bad.push(format!("n={n}: oracle {oracle} != formula {formula}"));
            }
        }
        Ok((bad.is_empty(), summary(&bad, "9 cycles checked")))
    })
}

/// Criterion 2: the cycle sequences certify exactly `ceil((m-1)/3)` steps
/// for m = 3..11 with the Buchberger engine, identically under up to three
/// lex completions of the order constraints.
pub fn sequence_realization_criterion(budget: &Budget, ledger: &mut Ledger) -> CheckReport {
    let mut entries: Ledger = Vec::new();
    let report = run(
        "cycle sequences certify ceil((m-1)/3) steps under 3 lex completions",
        || {
            let mut bad = Vec::new();
            let mut runs = 0;
            for m in 3..=11 {
                let ideal = cycle_ideal(m)?;
                let plan = cycle_sequence(m)?;
                let expected = (m - 1).div_ceil(3);
                let completions = plan.lex_completions(3);
                for (ci, order) in completions.iter().enumerate() {
                    let trace =
                        verify_initially_regular(&ideal, &plan, Engine::Buchberger, order, budget)?;
                    runs += 1;
                    if trace.verified_length != expected {
                        bad.push(format!(
                            "m={m} completion {ci}: certified {} steps, expected {expected}",
                            trace.verified_length
                        ));
                    }
                }
                entries.push((format!("cycle({m}) sequence"), ideal, expected));
            }
            Ok((bad.is_empty(), summary(&bad, &format!("{runs} verification runs"))))
        },
    );
    ledger.extend(entries);
    report
}

fn chain_completions(n: usize, chain: &[usize]) -> Vec<TermOrder> {
    let rest_desc: Vec<usize> = (0..n).rev().filter(|v| !chain.contains(v)).collect();
    let rest_asc: Vec<usize> = rest_desc.iter().rev().copied().collect();
    let mut seen: Vec<Vec<usize>> = Vec::new();
    let mut out = Vec::new();
    for precedence in [
        chain.iter().chain(&rest_desc).copied().collect::<Vec<_>>(),
        chain.iter().chain(&rest_asc).copied().collect(),
        rest_desc.iter().chain(chain).copied().collect(),
    ] {
        if !seen.contains(&precedence) {
            seen.push(precedence.clone());
            out.push(TermOrder::lex(precedence).expect("valid permutation"));
        }
    }
    out
}

/// The first-step initial ideal of the `(3n+2)`-cycle under
/// `x1 + x_{3n+2} + x2`: `x1`, the surviving cycle edges, `x_{3n+2}*x2`,
/// `x_{3n+2}^2`, and `x_{3n+1}*x2^2`.
fn expected_first_step(n: usize) -> Result<MonomialIdeal> {
    let nv = 3 * n + 2;
    let ring = RingSpec::numbered("x", nv)?;
    let mut gens = vec![Monomial::variable(0, nv)];
    for i in 1..=3 * n {
        gens.push(Monomial::from_pairs(nv, &[(i, 1), (i + 1, 1)]));
    }
    gens.push(Monomial::from_pairs(nv, &[(nv - 1, 1), (1, 1)]));
    gens.push(Monomial::from_pairs(nv, &[(nv - 1, 2)]));
    gens.push(Monomial::from_pairs(nv, &[(nv - 2, 1), (1, 2)]));
    MonomialIdeal::new(ring, gens)
}

/// Criterion 3: the closed-form transforms reproduce the displayed
/// first-step ideals and agree with the Buchberger oracle on 500 random
/// precondition-satisfying instances under several lex completions.
pub fn transform_agreement_criterion(seed: u64, budget: &Budget) -> CheckReport {
    run("closed-form transforms equal the Buchberger oracle", || {
        let mut bad = Vec::new();
        for n in 1..=3usize {
            let ideal = cycle_ideal(3 * n + 2)?;
            let got = transforms::ini_trinomial(&ideal, 0, 3 * n + 1, 1)?;
            let expected = expected_first_step(n)?;
            if got != expected {
                bad.push(format!("first-step shape differs on the {}-cycle", 3 * n + 2));
            }
        }

        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x7472616e73);
        let mut checked = 0usize;
        for _ in 0..250 {
            let (ideal, a, b) = random::random_binomial_context(&mut rng);
            let formula = transforms::ini_binomial(&ideal, a, b)?;
            let form = LinearForm::new(vec![a, b])?;
            for order in chain_completions(ideal.nvars(), &[a, b]) {
                let oracle = groebner::initial_ideal(&ideal, Some(&form), &order, budget)?;
                if formula != oracle {
                    bad.push(format!("binomial mismatch on {ideal}"));
                }
            }
            checked += 1;
        }
        for _ in 0..250 {
            let (ideal, a, b, c) = random::random_trinomial_context(&mut rng);
            let formula = transforms::ini_trinomial(&ideal, a, b, c)?;
            let form = LinearForm::new(vec![a, b, c])?;
            for order in chain_completions(ideal.nvars(), &[a, b, c]) {
                let oracle = groebner::initial_ideal(&ideal, Some(&form), &order, budget)?;
                if formula != oracle {
                    bad.push(format!("trinomial mismatch on {ideal}"));
                }
            }
            checked += 1;
        }
        Ok((
            bad.is_empty(),
            summary(&bad, &format!("3 displayed shapes + {checked} random instances")),
        ))
    })
}

fn seven_generator_example() -> Result<MonomialIdeal> {
    crate::format::parse_ideal(
        "vars a b c d e f g\ngens a^3*b*c a^2*d b^2*c c*e^2 d*e c^2*f e*g",
    )
}

/// Criterion 4: the seven-generator worked example has exactly its thirteen
/// associated primes, and each of the eight embedded ones decomposes into
/// one of the recorded minimal-prime-plus-extras forms.
pub fn embedded_example_criterion(budget: &Budget) -> CheckReport {
    run(
        "worked example: 13 associated primes, 8 embedded decompositions",
        || {
            let ideal = seven_generator_example()?;
            let ring = ideal.ring().clone();
            let prime = |names: &[&str]| -> MonomialPrime {
                MonomialPrime::new(names.iter().map(|n| ring.index(n).unwrap()))
            };
            let minimal: Vec<MonomialPrime> = [
                &["a", "c", "e"][..],
                &["c", "d", "e"],
                &["c", "d", "g"],
                &["a", "b", "e", "f"],
                &["b", "d", "e", "f"],
            ]
            .iter()
            .map(|ns| prime(ns))
            .collect();
            let embedded: Vec<MonomialPrime> = [
                &["a", "b", "c", "e"][..],
                &["b", "c", "d", "e"],
                &["a", "b", "c", "d", "e"],
                &["a", "b", "d", "e", "f"],
                &["b", "c", "d", "e", "g"],
                &["b", "d", "e", "f", "g"],
                &["a", "b", "c", "d", "e", "g"],
                &["a", "b", "d", "e", "f", "g"],
            ]
            .iter()
            .map(|ns| prime(ns))
            .collect();
            let mut expected: Vec<MonomialPrime> =
                minimal.iter().chain(&embedded).cloned().collect();
            expected.sort();

            let mut bad = Vec::new();
            let ass = associated_primes(&ideal)?;
            if ass != expected {
                bad.push("associated primes differ from the recorded thirteen".into());
            }
            if ass != associated_primes_bruteforce(&ideal, budget)? {
                bad.push("polarization and witness-scan routes disagree".into());
            }

            // recorded decompositions: (embedded, [(minimal, extras)...])
            let alternatives: Vec<(usize, Vec<(Vec<&str>, Vec<&str>)>)> = vec![
                (0, vec![(vec!["a", "c", "e"], vec!["b"])]),
                (1, vec![(vec!["c", "d", "e"], vec!["b"])]),
                (
                    2,
                    vec![
                        (vec!["a", "c", "e"], vec!["b", "d"]),
                        (vec!["c", "d", "e"], vec!["a", "b"]),
                    ],
                ),
                (
                    3,
                    vec![
                        (vec!["a", "b", "e", "f"], vec!["d"]),
                        (vec!["b", "d", "e", "f"], vec!["a"]),
                    ],
                ),
                (
                    4,
                    vec![
                        (vec!["c", "d", "e"], vec!["b", "g"]),
                        (vec!["c", "d", "g"], vec!["b", "e"]),
                    ],
                ),
                (5, vec![(vec!["b", "d", "e", "f"], vec!["g"])]),
                (
                    6,
                    vec![
                        (vec!["a", "c", "e"], vec!["b", "d", "g"]),
                        (vec!["c", "d", "e"], vec!["a", "b", "g"]),
                        (vec!["c", "d", "g"], vec!["a", "b", "e"]),
                    ],
                ),
                (
                    7,
                    vec![
                        (vec!["a", "b", "e", "f"], vec!["d", "g"]),
                        (vec!["b", "d", "e", "f"], vec!["a", "g"]),
                    ],
                ),
            ];
            let star = star_neighbor_map(&ideal);
            for (qi, options) in alternatives {
                let q = &embedded[qi];
                let d = embedded_decomposition(&ideal, q)?;
                let got_extras: Vec<usize> = d.extras.iter().map(|e| e.z).collect();
                let matched = options.iter().any(|(min_names, extra_names)| {
                    d.minimal_prime == prime(min_names)
                        && got_extras
                            == extra_names
                                .iter()
                                .map(|n| ring.index(n).unwrap())
                                .collect::<Vec<_>>()
                });
                if !matched {
                    bad.push(format!(
                        "decomposition of ({}) matches no recorded form",
                        q.names(&ring).join(", ")
                    ));
                }
                if d.prime() != *q {
                    bad.push("decomposition does not rebuild its prime".into());
                }
                for e in &d.extras {
                    if !star[e.witness].contains(&e.z) {
                        bad.push("extra variable is not a star neighbor of its witness".into());
                    }
                }
            }
            Ok((bad.is_empty(), summary(&bad, "13 primes, 8 decompositions")))
        },
    )
}

/// Criterion 5: on 300 random ideals the two associated-prime routes agree
/// and every embedded prime decomposes as minimal prime plus star-neighbor
/// variables.
pub fn embedded_suite_criterion(seed: u64, budget: &Budget) -> CheckReport {
    run(
        "random suite: both prime routes agree, embedded primes decompose",
        || {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x656d626564);
            let mut bad = Vec::new();
            let mut decomposed = 0usize;
            for _ in 0..300 {
                let nvars = rng.random_range(2..=5);
                let ideal = random::random_ideal(&mut rng, nvars, 3, 6);
                let ass = associated_primes(&ideal)?;
                if ass != associated_primes_bruteforce(&ideal, budget)? {
                    bad.push(format!("routes disagree on {ideal}"));
                    continue;
                }
                let min = minimal_primes(&ideal)?;
                let star = star_neighbor_map(&ideal);
                for q in ass.iter().filter(|q| !min.contains(q)) {
                    match embedded_decomposition(&ideal, q) {
                        Err(e) => bad.push(format!("decomposition failed on {ideal}: {e}")),
                        Ok(d) => {
                            decomposed += 1;
                            if d.prime() != *q
                                || !min.contains(&d.minimal_prime)
                                || d.extras.iter().any(|e| !star[e.witness].contains(&e.z))
                            {
                                bad.push(format!("invalid decomposition on {ideal}"));
                            }
                        }
                    }
                }
            }
            Ok((
                bad.is_empty(),
                summary(
                    &bad,
                    &format!("300 ideals, {decomposed} embedded primes decomposed"),
                ),
            ))
        },
    )
}

/// Criterion 6: the three structural suites. Uniform-degree ideals have no
/// embedded primes and share minimal primes with their squarefree part;
/// bracket powers of squarefree or uniform-degree ideals have no embedded
/// primes; covering linear forms on uniform-degree ideals are regular.
pub fn corollary_suites_criterion(seed: u64, budget: &Budget) -> CheckReport {
    run(
        "uniform-degree, bracket-power, and covering-form suites",
        || {
            let mut bad = Vec::new();

            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x756e69666f726d);
            for _ in 0..300 {
                let nvars = rng.random_range(2..=5);
                let ideal = random::random_uniform_degree_ideal(&mut rng, nvars, 3, 5);
                if !has_no_embedded_hypothesis(&ideal) {
                    bad.push(format!("construction broke its own hypothesis: {ideal}"));
                    continue;
                }
                let ass = associated_primes(&ideal)?;
                let min = minimal_primes(&ideal)?;
                if ass != min {
                    bad.push(format!("embedded prime on uniform-degree {ideal}"));
                }
                if min != minimal_primes(&ideal.squarefree_part())? {
                    bad.push(format!("squarefree part changed minimal primes of {ideal}"));
                }
            }

            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x627261636b6574);
            for round in 0..300 {
                let nvars = rng.random_range(2..=4);
                let ideal = if round % 2 == 0 {
                    random::random_squarefree_ideal(&mut rng, nvars, 4)
                } else {
                    random::random_uniform_degree_ideal(&mut rng, nvars, 2, 4)
                };
                let n = rng.random_range(1..=3);
                let power = ideal.bracket_power(n)?;
                // witness-scan route keeps the polarized blow-up out of play
                let ass = associated_primes_bruteforce(&power, budget)?;
                let min = minimal_primes(&power)?;
                if ass != min {
                    bad.push(format!("embedded prime on bracket power {power}"));
                }
            }

            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x636f766572);
            let mut covered = 0usize;
            while covered < 300 {
                let nvars = rng.random_range(3..=5);
                let ideal = random::random_uniform_degree_ideal(&mut rng, nvars, 3, 4);
                let Some(form) = random::random_covering_form(&mut rng, &ideal) else {
                    continue;
                };
                covered += 1;
                if !is_regular_linear_form(&ideal, &form)? {
                    bad.push(format!(
                        "covering form {} is a zero divisor on {ideal}",
                        form.display(ideal.ring())
                    ));
                }
            }

            Ok((bad.is_empty(), summary(&bad, "3 suites x 300 instances")))
        },
    )
}

/// Criterion 7: oracle depth equals the three-branch formula on the
/// pendant-path family for n = 3..8, m = 0..5, and the two recorded
/// tight instances are certified by their sequences.
pub fn unicyclic_depth_criterion(budget: &Budget, ledger: &mut Ledger) -> CheckReport {
    let mut entries: Ledger = Vec::new();
    let report = run(
        "pendant-path depth: oracle matches the three-branch formula",
        || {
            let mut bad = Vec::new();
            for n in 3..=8 {
                for m in 0..=5 {
                    let ideal = unicyclic_ideal(n, m)?;
                    let oracle = depth_oracle(&ideal, budget)?.value;
                    let formula = depth_unicyclic_formula(n, m)?;
                    if oracle != formula {
                        bad.push(format!("(n={n}, m={m}): oracle {oracle} != {formula}"));
                    }
                    if (n, m) == (5, 1) && oracle != 2 {
                        bad.push("(5,1) is not 2".into());
                    }
                    if (n, m) == (5, 2) && oracle != 3 {
                        bad.push("(5,2) is not 3".into());
                    }
                }
            }
            // tightness of the sequence bound at t = 1, 2
            for t in 1..=2usize {
                let ideal = unicyclic_ideal(3 * t + 2, 2)?;
                let plan = unicyclic_sequence(t)?;
                let order = plan.default_order();
                let trace =
                    verify_initially_regular(&ideal, &plan, Engine::Both, &order, budget)?;
                if trace.verified_length != t + 2 {
                    bad.push(format!(
                        "pendant sequence at t={t} certified {} steps, expected {}",
                        trace.verified_length,
                        t + 2
                    ));
                }
                let oracle = depth_oracle(&ideal, budget)?.value;
                if oracle != t + 2 {
                    bad.push(format!("depth at t={t} is {oracle}, expected {}", t + 2));
                }
                entries.push((
                    format!("pendant-path({}, 2) sequence", 3 * t + 2),
                    ideal,
                    trace.verified_length,
                ));
            }
            Ok((bad.is_empty(), summary(&bad, "36 family members + 2 tight sequences")))
        },
    );
    ledger.extend(entries);
    report
}

/// Criterion 8: every verification recorded by the earlier criteria stays
/// at or below the oracle depth of its ideal.
pub fn soundness_criterion(budget: &Budget, ledger: &Ledger) -> CheckReport {
    run("verified sequence lengths never exceed oracle depth", || {
        let mut bad = Vec::new();
        for (label, ideal, verified) in ledger {
            let oracle = depth_oracle(ideal, budget)?.value;
            if *verified > oracle {
                bad.push(format!("{label}: verified {verified} > depth {oracle}"));
            }
        }
        Ok((
            bad.is_empty(),
            summary(&bad, &format!("{} recorded verifications", ledger.len())),
        ))
    })
}

fn summary(bad: &[String], ok: &str) -> String {
    if bad.is_empty() {
        ok.to_string()
    } else {
        bad.join("; ")
    }
}
