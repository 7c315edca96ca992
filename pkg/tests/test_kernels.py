import os
import subprocess
import sys

import pytest
from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from slackkit import kernels
from slackkit.budget import Budget, BudgetExceeded
from slackkit.groebner import groebner_basis
from slackkit.poly import Polynomial, TermOrder
from slackkit.polytope import construct_catalog, pattern_of
from slackkit.slackcore import slack_ideal

needs_ext = pytest.mark.skipif(kernels.compiled_kernels is None, reason="compiled kernels not built")

exps = st.tuples(*[st.integers(0, 2)] * 4)
polys = st.dictionaries(exps, st.integers(-3, 3).filter(bool), min_size=1, max_size=3).map(lambda t: Polynomial(4, t))


@needs_ext
def test_compiled_kernels_are_default():
    assert kernels.IMPLEMENTATION == "cython"


@needs_ext
@settings(max_examples=30, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(st.lists(polys, min_size=1, max_size=3), st.sampled_from(["grevlex", "lex"]))
def test_implementations_agree_on_random_ideals(gens, order):
    o = TermOrder.named(order, 4)
    out = {}
    for name in ("python", "cython"):
        with kernels.use(name):
            try:
                out[name] = groebner_basis(gens, o, Budget(10))
            except BudgetExceeded:
                assume(False)
    assert out["python"] == out["cython"]


@needs_ext
@pytest.mark.parametrize("name", ["square", "cyclic5-2", "prism-triangle"])
def test_implementations_agree_on_slack_ideals(name):
    P = pattern_of(construct_catalog(name))
    bases = []
    for impl in ("python", "cython"):
        with kernels.use(impl):
            bases.append(slack_ideal(P, method="direct").groebner())
    assert bases[0] == bases[1]


def test_use_restores_previous_implementation():
    before = kernels.IMPLEMENTATION
    with kernels.use("python") as mod:
        assert kernels.IMPLEMENTATION == mod.IMPLEMENTATION == "python"
    assert kernels.IMPLEMENTATION == before
    with pytest.raises(ValueError):
        with kernels.use("fortran"):
            pass


def test_pure_environment_variable_forces_fallback():
    env = dict(os.environ, SLACKKIT_PURE="1")
    out = subprocess.run(
        [sys.executable, "-c", "from slackkit import kernels; print(kernels.IMPLEMENTATION)"],
        capture_output=True,
        text=True,
        env=env,
    )
    assert out.stdout.strip() == "python"
