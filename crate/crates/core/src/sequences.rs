//! Construction of initially regular sequences on cycle and unicyclic edge
//! ideals, and step-by-step verification that each form is regular on the
//! quotient by the previous initial ideal.
//!
//! A verified prefix of length `q` certifies `depth(R/I) >= q`. The
//! construction only pins down partial order constraints (one descending
//! chain per trinomial); any lex completion of those chains is admissible,
//! and the verifier can be run under several completions to confirm the
//! outcome does not depend on the choice.

use serde_json::{json, Value};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::groebner;
use crate::ideal::MonomialIdeal;
use crate::primes;
use crate::ring::{LinearForm, RingSpec, TermOrder};
use crate::transforms;

/// Which machinery computes each `ini(I_i, f_i)` step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Engine {
    /// Closed-form transform when its preconditions hold, Buchberger
    /// otherwise.
    Transform,
    /// Always the Buchberger oracle.
    Buchberger,
    /// Both, failing loudly on any disagreement.
    Both,
}

impl std::str::FromStr for Engine {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "transform" => Ok(Engine::Transform),
            "buchberger" => Ok(Engine::Buchberger),
            "both" => Ok(Engine::Both),
            other => Err(Error::InvalidArgument(format!("unknown engine `{other}`"))),
        }
    }
}

/// An ordered list of linear forms together with the order constraints
/// (descending precedence chains) the construction requires.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequencePlan {
    ring: RingSpec,
    forms: Vec<LinearForm>,
    chains: Vec<Vec<usize>>,
    provenance: String,
}

impl SequencePlan {
    pub fn new(
        ring: RingSpec,
        forms: Vec<LinearForm>,
        chains: Vec<Vec<usize>>,
        provenance: impl Into<String>,
    ) -> Result<Self> {
        for f in &forms {
            if f.vars().iter().any(|&v| v >= ring.len()) {
                return Err(Error::RingMismatch);
            }
        }
        for chain in &chains {
            for (i, v) in chain.iter().enumerate() {
                if *v >= ring.len() || chain[..i].contains(v) {
                    return Err(Error::InvalidArgument(
                        "order constraint chains need distinct ring variables".into(),
                    ));
                }
            }
        }
        let plan = SequencePlan {
            ring,
            forms,
            chains,
            provenance: provenance.into(),
        };
        let order = plan.default_order();
        debug_assert!(plan.order_is_admissible(&order));
        Ok(plan)
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn forms(&self) -> &[LinearForm] {
        &self.forms
    }

    pub fn chains(&self) -> &[Vec<usize>] {
        &self.chains
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    fn spine(&self) -> Vec<usize> {
        let mut spine = Vec::new();
        for chain in &self.chains {
            for &v in chain {
                if !spine.contains(&v) {
                    spine.push(v);
                }
            }
        }
        spine
    }

    /// The canonical completion: constrained variables first in chain order,
    /// the rest appended in descending index order.
    pub fn default_order(&self) -> TermOrder {
        self.lex_completions(1).remove(0)
    }

    /// Distinct lex completions of the constraint chains, the canonical one
    /// first. Yields fewer than `count` when that many do not exist (a plan
    /// whose chains touch every variable has exactly one completion).
    pub fn lex_completions(&self, count: usize) -> Vec<TermOrder> {
        let spine = self.spine();
        let rest_desc: Vec<usize> = (0..self.ring.len())
            .rev()
            .filter(|v| !spine.contains(v))
            .collect();
        let rest_asc: Vec<usize> = rest_desc.iter().rev().copied().collect();
        let mut seen: Vec<Vec<usize>> = Vec::new();
        let mut out: Vec<TermOrder> = Vec::new();
        for rest in [&rest_desc, &rest_asc] {
            for gap in (0..=spine.len()).rev() {
                let mut precedence: Vec<usize> = spine[..gap].to_vec();
                precedence.extend(rest.iter().copied());
                precedence.extend(spine[gap..].iter().copied());
                if !seen.contains(&precedence) {
                    seen.push(precedence.clone());
                    out.push(TermOrder::lex(precedence).expect("valid permutation"));
                    if out.len() == count {
                        return out;
                    }
                }
            }
        }
        out
    }

    pub fn order_is_admissible(&self, order: &TermOrder) -> bool {
        order.nvars() == self.ring.len()
            && self.chains.iter().all(|c| order.respects_chain(c))
    }

    pub fn to_json(&self) -> Value {
        let names = |vs: &[usize]| -> Vec<&str> {
            vs.iter().map(|&v| self.ring.name(v)).collect()
        };
        json!({
            "ring": self.ring.names(),
            "forms": self.forms.iter().map(|f| names(f.vars())).collect::<Vec<_>>(),
            "order_constraints": self.chains.iter().map(|c| names(c)).collect::<Vec<_>>(),
            "provenance": self.provenance,
        })
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let obj = value
            .as_object()
            .ok_or_else(|| Error::Parse("plan JSON must be an object".into()))?;
        let name_list = |v: &Value| -> Result<Vec<String>> {
            v.as_array()
                .ok_or_else(|| Error::Parse("expected an array of names".into()))?
                .iter()
                .map(|s| {
                    s.as_str()
                        .map(str::to_string)
                        .ok_or_else(|| Error::Parse("expected a variable name".into()))
                })
                .collect()
        };
        let ring = RingSpec::new(name_list(
            obj.get("ring")
                .ok_or_else(|| Error::Parse("missing `ring`".into()))?,
        )?)?;
        let resolve = |names: Vec<String>| -> Result<Vec<usize>> {
            names.iter().map(|n| ring.index_or_err(n)).collect()
        };
        let forms = obj
            .get("forms")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("missing `forms`".into()))?
            .iter()
            .map(|f| LinearForm::new(resolve(name_list(f)?)?))
            .collect::<Result<Vec<_>>>()?;
        let chains = match obj.get("order_constraints") {
            None => Vec::new(),
            Some(v) => v
                .as_array()
                .ok_or_else(|| Error::Parse("`order_constraints` must be an array".into()))?
                .iter()
                .map(|c| resolve(name_list(c)?))
                .collect::<Result<Vec<_>>>()?,
        };
        let provenance = obj
            .get("provenance")
            .and_then(Value::as_str)
            .unwrap_or("")
            .to_string();
        SequencePlan::new(ring, forms, chains, provenance)
    }
}

/// Forms and order constraints for the edge ideal of an `n`-cycle on
/// `x1..xn`. Cycles of length `3k` and `3k+1` get `k` trinomials; cycles of
/// length `3k+2` additionally get the long form `x_{3k} + x_{3k+1} +
/// (x2 + x5 + ... + x_{3k-1})` for a total of `k+1` forms.
pub fn cycle_sequence(n_vertices: usize) -> Result<SequencePlan> {
    let ring = RingSpec::numbered("x", n_vertices)?;
    cycle_plan_on(ring, n_vertices)
}

fn cycle_plan_on(ring: RingSpec, n: usize) -> Result<SequencePlan> {
    if n < 3 {
        return Err(Error::InvalidArgument("a cycle needs at least 3 vertices".into()));
    }
    let k = n / 3;
    // x_i has index i - 1 throughout.
    let mut triples: Vec<Vec<usize>> = vec![vec![0, n - 1, 1]];
    for i in 2..=k {
        triples.push(vec![3 * i - 3, 3 * i - 4, 3 * i - 2]);
    }
    let mut forms: Vec<LinearForm> = triples
        .iter()
        .map(|t| LinearForm::new(t.clone()))
        .collect::<Result<_>>()?;
    if n % 3 == 2 {
        let mut long = vec![3 * k - 1, 3 * k];
        long.extend((1..=k).map(|i| 3 * i - 2));
        forms.push(LinearForm::new(long)?);
    }
    let provenance = format!("cycle({n})");
    SequencePlan::new(ring, forms, triples, provenance)
}

/// Forms for the edge ideal of the `(3t+2)`-cycle with a 2-vertex pendant
/// path attached at `x2`: the cycle forms followed by `y2 + y1`, with order
/// constraints extended by `y2 > y1`.
pub fn unicyclic_sequence(t: usize) -> Result<SequencePlan> {
    if t == 0 {
        return Err(Error::InvalidArgument(
            "the pendant-path construction needs t >= 1".into(),
        ));
    }
    let n = 3 * t + 2;
    let mut names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    names.push("y1".into());
    names.push("y2".into());
    let ring = RingSpec::new(names)?;
    let cycle = cycle_plan_on(ring.clone(), n)?;
    let (y1, y2) = (n, n + 1);
    let mut forms = cycle.forms.clone();
    forms.push(LinearForm::new(vec![y2, y1])?);
    let mut chains = cycle.chains.clone();
    chains.push(vec![y2, y1]);
    SequencePlan::new(ring, forms, chains, format!("gnm2({t})"))
}

fn transform_step(
    ideal: &MonomialIdeal,
    form: &LinearForm,
) -> Option<Result<MonomialIdeal>> {
    match *form.vars() {
        [a, b] => transforms::binomial_context(ideal, a, b)
            .map(|_| transforms::ini_binomial(ideal, a, b)),
        [a, b, c] => match transforms::ini_trinomial(ideal, a, b, c) {
            Err(Error::PreconditionViolated(_)) => None,
            other => Some(other),
        },
        _ => None,
    }
}

fn step(
    ideal: &MonomialIdeal,
    form: &LinearForm,
    engine: Engine,
    order: &TermOrder,
    budget: &Budget,
) -> Result<MonomialIdeal> {
    match engine {
        Engine::Buchberger => groebner::initial_ideal(ideal, Some(form), order, budget),
        Engine::Transform => match transform_step(ideal, form) {
            Some(result) => result,
            None => groebner::initial_ideal(ideal, Some(form), order, budget),
        },
        Engine::Both => {
            let oracle = groebner::initial_ideal(ideal, Some(form), order, budget)?;
            if let Some(result) = transform_step(ideal, form) {
                let transformed = result?;
                if transformed != oracle {
                    return Err(Error::OracleMismatch(format!(
                        "transform {transformed} != oracle {oracle} at form {}",
                        form.display(ideal.ring())
                    )));
                }
            }
            Ok(oracle)
        }
    }
}

/// The chain `I_1 = I`, `I_{i+1} = ini(I_i, f_i)`, one entry per form plus
/// the starting ideal.
pub fn iterated_initial_ideals(
    ideal: &MonomialIdeal,
    plan: &SequencePlan,
    engine: Engine,
    order: &TermOrder,
    budget: &Budget,
) -> Result<Vec<MonomialIdeal>> {
    if ideal.ring() != plan.ring() {
        return Err(Error::RingMismatch);
    }
    if !plan.order_is_admissible(order) {
        return Err(Error::InvalidArgument(
            "term order violates the plan's order constraints".into(),
        ));
    }
    let mut ideals = vec![ideal.clone()];
    for form in &plan.forms {
        let next = step(ideals.last().unwrap(), form, engine, order, budget)?;
        ideals.push(next);
    }
    Ok(ideals)
}

/// One verification step: the ideal the form acted on, whether the form was
/// regular there, and how many associated primes were inspected.
#[derive(Debug, Clone)]
pub struct StepRecord {
    pub ideal: MonomialIdeal,
    pub form: LinearForm,
    pub regular: bool,
    pub ass_count: usize,
}

/// The whole verification run. `verified_length` counts the leading steps
/// whose form was regular; it is a certified lower bound for the depth of
/// the quotient by the starting ideal.
#[derive(Debug, Clone)]
pub struct VerificationTrace {
    pub steps: Vec<StepRecord>,
    pub verified_length: usize,
    pub final_ideal: MonomialIdeal,
}

/// Run the chain and check, at every step, that `f_i` lies outside every
/// associated prime of `R/I_i`.
pub fn verify_initially_regular(
    ideal: &MonomialIdeal,
    plan: &SequencePlan,
    engine: Engine,
    order: &TermOrder,
    budget: &Budget,
) -> Result<VerificationTrace> {
    let ideals = iterated_initial_ideals(ideal, plan, engine, order, budget)?;
    let mut steps = Vec::with_capacity(plan.forms.len());
    for (i, form) in plan.forms.iter().enumerate() {
        let ass = primes::associated_primes(&ideals[i])?;
        let regular = primes::form_avoids_all(&ass, form);
        steps.push(StepRecord {
            ideal: ideals[i].clone(),
            form: form.clone(),
            regular,
            ass_count: ass.len(),
        });
    }
    let verified_length = steps.iter().take_while(|s| s.regular).count();
    Ok(VerificationTrace {
        steps,
        verified_length,
        final_ideal: ideals.last().unwrap().clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::depth::{cycle_ideal, unicyclic_ideal};
    use crate::format::parse_ideal;

    fn form_names(plan: &SequencePlan) -> Vec<String> {
        plan.forms()
            .iter()
            .map(|f| f.display(plan.ring()).to_string())
            .collect()
    }

    #[test]
    fn cycle_sequences_match_the_construction() {
        assert_eq!(form_names(&cycle_sequence(5).unwrap()), ["x1+x5+x2", "x3+x4+x2"]);
        assert_eq!(form_names(&cycle_sequence(6).unwrap()), ["x1+x6+x2", "x4+x3+x5"]);
        assert_eq!(
            form_names(&cycle_sequence(8).unwrap()),
            ["x1+x8+x2", "x4+x3+x5", "x6+x7+x2+x5"]
        );
        assert_eq!(form_names(&cycle_sequence(3).unwrap()), ["x1+x3+x2"]);
        assert_eq!(form_names(&cycle_sequence(4).unwrap()), ["x1+x4+x2"]);
        assert!(cycle_sequence(2).is_err());
    }

    #[test]
    fn cycle_constraints_are_the_trinomial_chains() {
        let plan = cycle_sequence(8).unwrap();
        let r = plan.ring();
        let chain_names: Vec<Vec<&str>> = plan
            .chains()
            .iter()
            .map(|c| c.iter().map(|&v| r.name(v)).collect())
            .collect();
        assert_eq!(chain_names, [["x1", "x8", "x2"], ["x4", "x3", "x5"]]);
    }

    #[test]
    fn unicyclic_sequence_appends_pendant_binomial() {
        let plan = unicyclic_sequence(1).unwrap();
        assert_eq!(form_names(&plan), ["x1+x5+x2", "x3+x4+x2", "y2+y1"]);
        assert!(unicyclic_sequence(0).is_err());
        let plan2 = unicyclic_sequence(2).unwrap();
        assert_eq!(
            form_names(&plan2),
            ["x1+x8+x2", "x4+x3+x5", "x6+x7+x2+x5", "y2+y1"]
        );
    }

    #[test]
    fn completions_are_distinct_and_admissible() {
        let plan = cycle_sequence(5).unwrap();
        let completions = plan.lex_completions(3);
        assert_eq!(completions.len(), 3);
        for c in &completions {
            assert!(plan.order_is_admissible(c));
        }
        assert_ne!(completions[0], completions[1]);
        assert_ne!(completions[0], completions[2]);
        // default completion: constrained chain, then the rest descending
        assert_eq!(completions[0].precedence(), &[0, 4, 1, 3, 2]);
        // a fully constrained plan has exactly one completion
        let c3 = cycle_sequence(3).unwrap();
        assert_eq!(c3.lex_completions(5).len(), 1);
    }

    #[test]
    fn plan_json_round_trip() {
        let plan = unicyclic_sequence(1).unwrap();
        let value = plan.to_json();
        assert_eq!(SequencePlan::from_json(&value).unwrap(), plan);
    }

    #[test]
    fn pentagon_chain_matches_displayed_initial_ideal() {
        let i = cycle_ideal(5).unwrap();
        let plan = cycle_sequence(5).unwrap();
        let order = plan.default_order();
        let chain =
            iterated_initial_ideals(&i, &plan, Engine::Both, &order, &Budget::default()).unwrap();
        assert_eq!(chain.len(), 3);
        assert_eq!(chain[0], i);
        let expected_i2 = parse_ideal(
            "vars x1 x2 x3 x4 x5\ngens x1 x2*x3 x3*x4 x4*x5 x5*x2 x5^2 x4*x2^2",
        )
        .unwrap();
        assert_eq!(chain[1], expected_i2);
    }

    #[test]
    fn octagon_chain_matches_displayed_shape() {
        let i = cycle_ideal(8).unwrap();
        let plan = cycle_sequence(8).unwrap();
        let order = plan.default_order();
        let chain =
            iterated_initial_ideals(&i, &plan, Engine::Both, &order, &Budget::default()).unwrap();
        let expected_after_two = parse_ideal(
            "vars x1 x2 x3 x4 x5 x6 x7 x8\n\
             gens x1 x4 x2*x3 x5*x6 x6*x7 x7*x8 x8^2 x3^2 x7*x2^2 x2*x5^2 x2*x8 x3*x5",
        )
        .unwrap();
        assert_eq!(chain[2], expected_after_two);
    }

    /// The ideal the chain reaches after the k trinomial steps on the
    /// (3k+2)-cycle, written out generator family by generator family.
    fn expected_after_trinomials(k: usize) -> MonomialIdeal {
        use crate::ring::{Monomial, RingSpec};
        let nv = 3 * k + 2;
        let ring = RingSpec::numbered("x", nv).unwrap();
        let mono = Monomial::from_pairs;
        let mut gens = Vec::new();
        for i in 1..=k {
            gens.push(mono(nv, &[(3 * i - 3, 1)]));
            gens.push(mono(nv, &[(3 * i - 2, 1), (3 * i - 1, 1)]));
        }
        gens.push(mono(nv, &[(3 * k - 1, 1), (3 * k, 1)]));
        gens.push(mono(nv, &[(3 * k, 1), (3 * k + 1, 1)]));
        gens.push(mono(nv, &[(3 * k + 1, 2)]));
        gens.push(mono(nv, &[(3 * k, 1), (1, 2)]));
        gens.push(mono(nv, &[(1, 1), (3 * k + 1, 1)]));
        for j in 1..k {
            gens.push(mono(nv, &[(3 * j - 1, 2)]));
            gens.push(mono(nv, &[(3 * j - 2, 1), (3 * j + 1, 2)]));
            gens.push(mono(nv, &[(3 * j - 1, 1), (3 * j + 1, 1)]));
        }
        MonomialIdeal::new(ring, gens).unwrap()
    }

    #[test]
    fn long_cycle_chains_match_the_displayed_shape() {
        for k in 1..=3usize {
            let n = 3 * k + 2;
            let i = cycle_ideal(n).unwrap();
            let plan = cycle_sequence(n).unwrap();
            let order = plan.default_order();
            let chain =
                iterated_initial_ideals(&i, &plan, Engine::Both, &order, &Budget::default())
                    .unwrap();
            assert_eq!(chain[k], expected_after_trinomials(k), "cycle {n}");
        }
    }

    #[test]
    fn empty_plan_iterates_to_the_ideal_itself() {
        let i = cycle_ideal(5).unwrap();
        let plan = SequencePlan::new(i.ring().clone(), vec![], vec![], "empty").unwrap();
        let order = plan.default_order();
        let chain =
            iterated_initial_ideals(&i, &plan, Engine::Transform, &order, &Budget::default())
                .unwrap();
        assert_eq!(chain, vec![i]);
    }

    #[test]
    fn pentagon_certifies_two_steps() {
        let i = cycle_ideal(5).unwrap();
        let plan = cycle_sequence(5).unwrap();
        let order = plan.default_order();
        for engine in [Engine::Transform, Engine::Buchberger, Engine::Both] {
            let trace =
                verify_initially_regular(&i, &plan, engine, &order, &Budget::default()).unwrap();
            assert_eq!(trace.verified_length, 2, "engine {engine:?}");
            assert!(trace.steps.iter().all(|s| s.regular));
        }
    }

    #[test]
    fn octagon_certifies_three_steps() {
        let i = cycle_ideal(8).unwrap();
        let plan = cycle_sequence(8).unwrap();
        let order = plan.default_order();
        let trace =
            verify_initially_regular(&i, &plan, Engine::Both, &order, &Budget::default()).unwrap();
        assert_eq!(trace.verified_length, 3);
    }

    #[test]
    fn pendant_path_certifies_three_steps() {
        let i = unicyclic_ideal(5, 2).unwrap();
        let plan = unicyclic_sequence(1).unwrap();
        let order = plan.default_order();
        let trace =
            verify_initially_regular(&i, &plan, Engine::Both, &order, &Budget::default()).unwrap();
        assert_eq!(trace.verified_length, 3);
    }

    #[test]
    fn engines_agree_on_pentagon_chain() {
        let i = cycle_ideal(5).unwrap();
        let plan = cycle_sequence(5).unwrap();
        let order = plan.default_order();
        let budget = Budget::default();
        let a = iterated_initial_ideals(&i, &plan, Engine::Transform, &order, &budget).unwrap();
        let b = iterated_initial_ideals(&i, &plan, Engine::Buchberger, &order, &budget).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn inadmissible_order_is_rejected() {
        let i = cycle_ideal(5).unwrap();
        let plan = cycle_sequence(5).unwrap();
        let bad = TermOrder::lex_default(5); // x1 > x2 > ... violates x5 > x2
        assert!(matches!(
            iterated_initial_ideals(&i, &plan, Engine::Buchberger, &bad, &Budget::default()),
            Err(Error::InvalidArgument(_))
        ));
    }
}
