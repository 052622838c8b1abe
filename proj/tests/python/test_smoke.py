from fractions import Fraction
from pathlib import Path

import pytest

import satroute

DATA = Path(__file__).resolve().parent.parent / "data"


def load(name):
    return (DATA / name).read_text()


def test_solve_and_validate():
    instance = load("line3.json")
    sol = satroute.solve(instance)
    assert sol["status"] == "optimal"
    assert satroute.to_fraction(sol["objective"]) == Fraction(4)
    assert satroute.validate(instance, sol) == []
    assert satroute.variant_name(instance) == "1-UF-WS"


def test_tampered_solution_is_rejected():
    instance = load("line3.json")
    sol = satroute.solve(instance)
    sol["objective"] = "1"
    assert satroute.validate(instance, sol)


def test_errors_map_to_exceptions():
    with pytest.raises(satroute.SchemaError):
        satroute.solve("{")
    with pytest.raises(satroute.InvalidArgument):
        satroute.solve(load("line3.json"), variant="1-UF-NCS")
    with pytest.raises(satroute.BudgetExceeded):
        satroute.solve(load("line3.json"), exact=True, budget="nodes=2")
    assert issubclass(satroute.BudgetExceeded, satroute.Error)


def test_generators_are_deterministic():
    a = satroute.generate_random(5, 3, density=0.6, seed=9)
    assert a == satroute.generate_random(5, 3, density=0.6, seed=9)
    ring = satroute.generate_ring(2, 4, 2, models=["1:1:3,6"])
    assert ring["satellites"] == 8
    sol = satroute.solve(ring)
    assert sol["status"] in ("optimal", "feasible")


def test_reduce_and_verify():
    art = satroute.reduce("3sat-2ufmm", load("sat.cnf"))
    assert art["family"] == "3sat-2ufmm"
    sol = satroute.solve(art["instance"])
    assert sol["status"] != "infeasible"
    report = satroute.verify("mvc-1sfcs", exhaustive=True, max_vertices=3)
    assert report["disagreements"] == 0
    assert report["agreements"] > 0


def test_segment_stacks():
    stacks = satroute.segment_stacks(load("sr_tree.json"), load("labels.json"))
    assert stacks == ["[A, B, Replication, [C], [D, Replication, [E], [F]]]"]
