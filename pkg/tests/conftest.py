import time

import pytest

from twistvol import (Matrix, NumberField, Representation, TwistConfig,
                      parse_presentation, twisted_alexander)

FIG8_TEXT = 'gens: a b\nrel: aBAba = baBAb\n'


def make_ufield():
    return NumberField([1, 1, 1], ('-0.5', '0.8660254038'))


def make_fig8_rep(field, presentation):
    u = field.generator
    rho_a = Matrix(field, [[1, 1], [0, 1]])
    rho_b = Matrix(field, [[field.one, field.zero], [-u, field.one]])
    return Representation(presentation, {'a': rho_a, 'b': rho_b})


@pytest.fixture(scope='session')
def qfield():
    return NumberField.rationals()


@pytest.fixture(scope='session')
def ufield():
    return make_ufield()


@pytest.fixture(scope='session')
def fig8():
    return parse_presentation(FIG8_TEXT)


@pytest.fixture(scope='session')
def fig8_rep(ufield, fig8):
    return make_fig8_rep(ufield, fig8)


class InvariantSweep(dict):
    """dict n -> TwistedAlexander, remembering how long the sweep took."""
    elapsed = None


@pytest.fixture(scope='session')
def fig8_invariants(fig8, fig8_rep):
    """Unit-normalized invariants for n = 2..15, computed once per run."""
    start = time.perf_counter()
    sweep = InvariantSweep((n, twisted_alexander(TwistConfig(fig8, fig8_rep, n)))
                           for n in range(2, 16))
    sweep.elapsed = time.perf_counter() - start
    return sweep
