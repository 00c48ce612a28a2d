//! The cycle-sequence invariant over the full desk range: for every cycle
//! length m = 3..14 the constructed sequence certifies exactly
//! `ceil((m-1)/3)` steps, both engines agree along the chain, and the
//! certified length never exceeds the oracle depth.

use monoideal::budget::Budget;
use monoideal::depth::{cycle_ideal, depth_cycle_formula, depth_oracle};
use monoideal::sequences::{cycle_sequence, verify_initially_regular, Engine};

#[test]
fn cycle_sequences_certify_the_depth_for_m_3_to_14() {
    let budget = Budget::default();
    for m in 3..=14 {
        let ideal = cycle_ideal(m).unwrap();
        let plan = cycle_sequence(m).unwrap();
        let order = plan.default_order();
        let trace =
            verify_initially_regular(&ideal, &plan, Engine::Both, &order, &budget).unwrap();
        let expected = (m - 1).div_ceil(3);
        assert_eq!(trace.verified_length, expected, "m = {m}");
        assert_eq!(trace.steps.len(), expected, "m = {m}: plan length");

        let depth = depth_oracle(&ideal, &budget).unwrap().value;
        assert!(trace.verified_length <= depth, "m = {m}: bound unsound");
        assert_eq!(depth, depth_cycle_formula(m).unwrap(), "m = {m}");
    }
}
