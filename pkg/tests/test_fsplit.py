"""Tests for the splitting criterion and trace surjectivity on P^n."""

import math

import pytest

from frobtrace import (
    DivisorSpec,
    FiniteField,
    fedder_hypersurface,
    map_verdict,
    parse_poly,
    pn_trace_surjectivity,
    trace_matrix,
    verify_witness,
)

XYZW = ["x", "y", "z", "w"]


def fermat(p):
    return parse_poly("x^3+y^3+z^3+w^3", FiniteField(p), XYZW)


def test_fermat_not_split_char_2():
    verdict = fedder_hypersurface(fermat(2))
    assert not verdict.split
    assert verdict.witness is None


def test_fermat_split_char_5():
    f = fermat(5)
    verdict = fedder_hypersurface(f)
    assert verdict.split
    assert verdict.witness == (3, 3, 3, 3)
    # the multinomial coefficient of x^3y^3z^3w^3 in f^4 is 4! = 24 = 4 mod 5
    power = f ** 4
    assert power.terms[(3, 3, 3, 3)] == FiniteField(5).scalar(math.factorial(4))
    assert verify_witness(f, verdict.witness)


def test_fermat_split_char_7():
    f = fermat(7)
    verdict = fedder_hypersurface(f)
    assert verdict.split
    assert verify_witness(f, verdict.witness)
    # one qualifying monomial is x^6 y^6 z^6 with coefficient 6!/(2!2!2!) = 90
    power = f ** 6
    coeff = math.factorial(6) // (math.factorial(2) ** 3)
    assert coeff == 90
    assert power.terms[(6, 6, 6, 0)] == FiniteField(7).scalar(coeff)
    assert all(e <= 6 for e in verdict.witness)


def test_hyperplane_always_splits():
    for p in (2, 3, 5, 7):
        f = parse_poly("x", FiniteField(p), XYZW)
        verdict = fedder_hypersurface(f)
        assert verdict.split
        assert verdict.witness == (p - 1, 0, 0, 0)
        assert verify_witness(f, verdict.witness)


def test_witness_is_independently_checkable():
    bad = (3, 0, 0, 0)  # exponent over p-1 for p=2
    assert not verify_witness(fermat(2), bad)


def test_zero_polynomial_rejected():
    from frobtrace import Poly

    with pytest.raises(ValueError):
        fedder_hypersurface(Poly.zero(FiniteField(2), 4))


def test_fedder_agrees_with_fermat_trace_direction():
    # non-split cone and zero trace matrix: the two independent computations
    # must point the same way
    assert not fedder_hypersurface(fermat(2)).split
    field = FiniteField(2)
    cubic_div = DivisorSpec(field, 3, [(fermat(2), 1)])
    t = trace_matrix(cubic_div, DivisorSpec(field, 3, k=1), 1)
    assert map_verdict(t).zero


@pytest.mark.parametrize("p", [2, 3, 5])
@pytest.mark.parametrize("e", [1, 2])
@pytest.mark.parametrize("n", [1, 2])
def test_pn_trace_surjectivity_grid(n, p, e):
    for k in range(n + 1, n + 4):
        assert pn_trace_surjectivity(n, k, p, e)


def test_pn_examples():
    assert pn_trace_surjectivity(2, 3, 2, 1)
    assert pn_trace_surjectivity(1, 2, 3, 1)
    assert pn_trace_surjectivity(2, 3, 2, 2)


def test_pn_rejects_zero_target():
    with pytest.raises(ValueError):
        pn_trace_surjectivity(2, 2, 2, 1)
