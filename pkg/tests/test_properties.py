"""The shared property suite as individual pytest items."""

import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

import props  # noqa: E402


@pytest.mark.parametrize("prop", props.HYPOTHESIS_PROPERTIES, ids=lambda f: f.__name__)
def test_hypothesis_property(prop):
    prop()


def test_no_monomials_in_slack_ideal_bases():
    ok, bad = props.check_no_monomials()
    assert ok, bad


def test_morally_2_level_iff_contained_in_toric():
    ok, detail = props.check_morally_2_level_equivalence()
    assert ok, detail


def test_pure_difference_implies_contained_in_toric():
    ok, detail = props.check_pure_difference_implies_containment()
    assert ok, detail


@pytest.mark.parametrize("name", props.CATALOG)
def test_slack_ideal_completes_within_budget(name):
    assert props.computed_slack_ideal(name) is not None
