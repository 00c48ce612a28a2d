#!/usr/bin/env python3
"""Smoke test for the monoideal_py extension module.

Builds nothing itself: it expects `cargo build --release -p monoideal-py`
(or a debug build) to have produced the cdylib, copies it next to a synthetic
module name, imports it, and drives the main surfaces once.

Run from the repository root:

    cargo build --release -p monoideal-py
    python3 python/smoke_test.py
"""

import shutil
import sys
import tempfile
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent


def locate_cdylib() -> Path:
    candidates = [
        REPO / "target" / "release" / "libmonoideal_py.so",
        REPO / "target" / "debug" / "libmonoideal_py.so",
        REPO / "target" / "release" / "libmonoideal_py.dylib",
        REPO / "target" / "debug" / "libmonoideal_py.dylib",
    ]
    for c in candidates:
        if c.exists():
            return c
    sys.exit("cdylib not found; run `cargo build --release -p monoideal-py` first")


def import_module():
    lib = locate_cdylib()
    staging = Path(tempfile.mkdtemp(prefix="monoideal-py-"))
    shutil.copy(lib, staging / "monoideal_py.so")
    sys.path.insert(0, str(staging))
    import monoideal_py

    return monoideal_py


def main() -> None:
    m = import_module()

    # ideals parse from text and JSON, and round-trip
    pentagon = m.graph_ideal("cycle", 5)
    assert pentagon.vars == ["x1", "x2", "x3", "x4", "x5"]
    assert len(pentagon.gens) == 5
    assert m.MonomialIdeal.from_text(pentagon.to_text()) == pentagon
    assert m.MonomialIdeal.from_json(pentagon.to_json()) == pentagon

    # core ideal arithmetic
    assert pentagon.contains([1, 1, 0, 0, 0])
    assert not pentagon.contains([1, 0, 1, 0, 0])
    quotient = pentagon.colon([0, 1, 0, 0, 0])
    assert sorted(quotient.gens) == [[0, 0, 0, 1, 1], [0, 0, 1, 0, 0], [1, 0, 0, 0, 0]]
    assert pentagon.bracket_power(2).var_degree("x1") == 2
    assert pentagon.squarefree_part() == pentagon

    # minimal and associated primes; the pentagon has five vertex covers
    assert len(m.minimal_primes(pentagon)) == 5
    assert m.associated_primes(pentagon) == m.minimal_primes(pentagon)

    # the worked seven-generator example: 13 associated primes, and both
    # routes agree
    worked = m.MonomialIdeal.from_text(
        "vars a b c d e f g\ngens a^3*b*c a^2*d b^2*c c*e^2 d*e c^2*f e*g"
    )
    ass = m.associated_primes(worked)
    assert len(ass) == 13
    assert ass == m.associated_primes_bruteforce(worked)
    assert m.star_neighbors(worked, "c") == ["a", "b", "e"]
    decomposition = m.embedded_decomposition(worked, ["a", "b", "c", "e"])
    assert decomposition["min_prime"] == ["a", "c", "e"]
    assert [e["z"] for e in decomposition["extras"]] == ["b"]
    assert not m.has_no_embedded_hypothesis(worked)
    assert m.is_regular_linear_form(pentagon, ["x1", "x5", "x2"])

    # initial ideals: closed form and Buchberger agree on the pentagon
    first_step = m.initial_ideal(pentagon, "x1+x5+x2", engine="both")
    assert [1, 0, 0, 0, 0] in first_step.gens
    assert [0, 0, 0, 0, 2] in first_step.gens

    # sequences certify the depth of the pentagon
    plan = m.sequence_plan("cycle", 5)
    trace = m.verify_initially_regular(pentagon, plan, engine="both")
    assert trace["verified_length"] == 2

    # depth: oracle and formulas
    value, pd = m.depth_oracle(pentagon)
    assert (value, pd) == (2, 3)
    assert m.depth_cycle(8) == 3
    assert m.depth_path(4) == 2
    assert m.depth_unicyclic(5, 2) == 3
    g52 = m.graph_ideal("gnm", 5, 2)
    assert m.depth_oracle(g52)[0] == 3

    print("smoke test passed:", m.__name__)


if __name__ == "__main__":
    main()
