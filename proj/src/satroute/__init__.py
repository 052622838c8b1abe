"""Model routing over time-varying satellite graphs.

Instances, solutions and reports are plain dicts in the JSON wire format;
rationals are "p/q" strings. Use ``to_fraction`` to read them.
"""

import json
from fractions import Fraction

from . import _core
from ._core import (
    BudgetExceeded,
    Error,
    InvalidArgument,
    InvariantViolation,
    NegativeCycle,
    SchemaError,
    UnreachableNode,
    UnsupportedVariant,
)

__all__ = [
    "BudgetExceeded",
    "Error",
    "InvalidArgument",
    "InvariantViolation",
    "NegativeCycle",
    "SchemaError",
    "UnreachableNode",
    "UnsupportedVariant",
    "generate_random",
    "generate_ring",
    "reduce",
    "segment_stacks",
    "solve",
    "to_fraction",
    "validate",
    "variant_name",
    "verify",
]


def _text(doc):
    return doc if isinstance(doc, str) else json.dumps(doc)


def to_fraction(value):
    return Fraction(value)


def solve(instance, variant="auto", exact=False, budget=None, mm_search="linear"):
    return json.loads(_core.solve(_text(instance), variant, exact, budget, mm_search))


def validate(instance, solution):
    return _core.validate(_text(instance), _text(solution))


def variant_name(instance):
    return _core.variant_name(_text(instance))


def reduce(family, source, cover_size=None, target=None, hub="spare"):
    return json.loads(_core.reduce(family, source, cover_size, target, hub))


def verify(family, trials=100, seed=0, exhaustive=False, max_variables=3,
           max_clauses=3, max_vertices=4, hub="spare", timings=False):
    return json.loads(_core.verify(family, trials, seed, exhaustive, max_variables,
                                   max_clauses, max_vertices, hub, timings))


def generate_random(satellites, snapshots, density=0.5, min_capacity=1, max_capacity=3,
                    seed=0, variant="1-UF-WS", models=(), cache="auto"):
    return json.loads(_core.generate_random(satellites, snapshots, density, min_capacity,
                                            max_capacity, seed, variant, list(models), cache))


def generate_ring(planes, per_plane, snapshots, intra_capacity="1", cross_capacity="1",
                  shift=1, variant="1-UF-WS", models=(), cache="auto"):
    return json.loads(_core.generate_ring(planes, per_plane, snapshots, str(intra_capacity),
                                          str(cross_capacity), shift, variant, list(models),
                                          cache))


def segment_stacks(solution, instance=None):
    return _core.segment_stacks(_text(solution), None if instance is None else _text(instance))
