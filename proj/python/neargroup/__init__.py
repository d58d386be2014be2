"""Exact near-group associators, coherence checks and braidings."""

import json

from . import _neargroup
from ._neargroup import (
    affine_group_fusion,
    example_names,
    find_all_pi,
    flip_determinant,
    hexagon_constraints,
    pi_from_field,
    pi_violations,
    run_cli,
)

__all__ = [
    "affine_group_fusion",
    "classify_family",
    "classify_monoidal",
    "construct_standard",
    "enumerate_braidings",
    "example_data",
    "example_names",
    "field_from_pi",
    "find_all_pi",
    "flip_determinant",
    "hexagon_constraints",
    "obstruction",
    "pi_from_field",
    "pi_violations",
    "run_cli",
    "verify",
]


def _text(data):
    return data if isinstance(data, str) else json.dumps(data)


def field_from_pi(group, pi):
    return json.loads(_neargroup.field_from_pi(group, pi))


def construct_standard(group=None, pi=None, *, field=None):
    """Standard data as a dict; give either `field` (q) or `group` and `pi`."""
    if field is not None:
        group, pi = pi_from_field(field)
    return json.loads(_neargroup.construct_standard(group, pi))


def example_data(name, selector=0):
    return json.loads(_neargroup.example_data(name, selector))


def verify(data, oracle=False):
    return json.loads(_neargroup.verify(_text(data), oracle))


def enumerate_braidings(data, root_bound=60):
    return json.loads(_neargroup.enumerate_braidings(_text(data), root_bound))


def classify_family(family, root_bound=60):
    return json.loads(_neargroup.classify_family(family, root_bound))


def classify_monoidal(group, pi):
    return json.loads(_neargroup.classify_monoidal(group, pi))


def obstruction(k):
    return json.loads(_neargroup.obstruction(k))
