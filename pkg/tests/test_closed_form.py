import pytest

from zfthrottle.closed_form import (
    ClosedFormParams, alt_even, alt_even_lb, alt_even_ub, alt_odd, alt_path, ceil_p, ceil_sqrt,
    closed_form, floor_2sqrt,
)
from zfthrottle.errors import DomainError
from zfthrottle.families import alternating_path
from zfthrottle.throttling import th

from oracles import (
    float_floor, oracle_alt_even, oracle_alt_even_lb, oracle_alt_even_ub, oracle_alt_odd, oracle_floor,
)


def test_examples():
    assert alt_even(2) == 2
    assert alt_odd(5) == 4
    assert alt_even(6) == 5
    assert alt_even(16) == 12
    assert floor_2sqrt(5) == 4


@pytest.mark.parametrize("name,n", [("alt_odd", 4), ("alt_even", 5), ("alt_even_ub", 3), ("alt_even_lb", 7)])
def test_parity_errors(name, n):
    with pytest.raises(DomainError):
        closed_form(name, n)


def test_unknown_name():
    with pytest.raises(DomainError):
        closed_form("alt_nope", 4)


def test_against_mpmath_oracle():
    for n in range(1, 3000, 2):
        assert alt_odd(n) == oracle_alt_odd(n)
    for n in range(2, 3000, 2):
        assert alt_even(n) == oracle_alt_even(n)
        assert alt_even_lb(n) == oracle_alt_even_lb(n)
        assert alt_even_ub(n) == oracle_alt_even_ub(n)
    for n in range(1, 3000):
        assert floor_2sqrt(n) == oracle_floor(n) == float_floor(n)


@pytest.mark.parametrize("n", [10**12, 10**12 + 1, (10**9 + 7) ** 2, (10**9 + 7) ** 2 - 1, 4 * 10**15 - 1])
def test_large_n_exact(n):
    assert floor_2sqrt(n) == oracle_floor(n)
    if n % 2:
        assert alt_odd(n) == oracle_alt_odd(n)
    else:
        assert alt_even(n) == oracle_alt_even(n)
        assert alt_even_ub(n) == oracle_alt_even_ub(n)


def test_ceil_helpers():
    assert [ceil_sqrt(x) for x in range(10)] == [0, 1, 2, 2, 2, 3, 3, 3, 3, 3]
    assert ceil_p(8) == 1 and ceil_p(9) == 2 and ceil_p(24) == 2 and ceil_p(25) == 3


@pytest.mark.parametrize("n", range(2, 15))
def test_solver_agrees(n):
    assert th(alternating_path(n)) == alt_path(n)


def test_even_bounds_meet():
    for n in range(2, 15, 2):
        assert alt_even_lb(n) == alt_even(n) == alt_even_ub(n)


def test_params():
    for n in range(1, 200):
        p = ClosedFormParams.of(n)
        assert p.m * p.m <= n < (p.m + 1) ** 2
        assert p.r <= 2 * p.m and p.p > 0
        assert p.k == (0 if p.r == 0 else 1 if p.r <= p.m else 2)
    with pytest.raises(DomainError):
        ClosedFormParams.of(0)
