"""Exact integer closed forms for alternating paths and the vertex-count floor.

Every ceiling of an expression in square roots is reduced to a comparison of
integers, so results are exact for any n.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .errors import DomainError


def ceil_sqrt(x: int) -> int:
    s = isqrt(x)
    return s if s * s == x else s + 1


def floor_2sqrt(n: int) -> int:
    """ceil(2*sqrt(n) - 1)."""
    return ceil_sqrt(4 * n) - 1


def _ceil_sqrt_minus_half(x: int) -> int:
    """ceil(sqrt(x) - 1/2): least c >= 0 with (2c + 1)**2 >= 4x."""
    c = max(0, (isqrt(4 * x) - 1) // 2)
    while (2 * c + 1) ** 2 < 4 * x:
        c += 1
    while c > 0 and (2 * c - 1) ** 2 >= 4 * x:
        c -= 1
    return c


def ceil_p(n: int) -> int:
    """ceil((sqrt(n+1) - 1) / 2): least q >= 0 with (2q + 1)**2 >= n + 1."""
    # 2q + 1 >= ceil(sqrt(n + 1)) = s  <=>  q >= s // 2
    return ceil_sqrt(n + 1) // 2


@dataclass(frozen=True)
class ClosedFormParams:
    n: int
    m: int
    r: int
    k: int

    @classmethod
    def of(cls, n: int) -> "ClosedFormParams":
        if n < 1:
            raise DomainError("n must be positive")
        m = isqrt(n)
        r = n - m * m
        k = 0 if r == 0 else (1 if r <= m else 2)
        return cls(n, m, r, k)

    @property
    def p(self) -> float:
        return ((self.n + 1) ** 0.5 - 1) / 2


def alt_odd(n: int) -> int:
    if n < 1 or n % 2 == 0:
        raise DomainError(f"alt_odd needs odd n, got {n}")
    return (n - 1) // 2 + _ceil_sqrt_minus_half(n + 1)


def alt_even(n: int) -> int:
    if n < 2 or n % 2:
        raise DomainError(f"alt_even needs even n, got {n}")
    return n // 2 + ceil_sqrt(n + 1) - 1


def alt_even_lb(n: int) -> int:
    """n/2 + ceil(2p) with p = (sqrt(n+1) - 1)/2."""
    if n < 2 or n % 2:
        raise DomainError(f"alt_even_lb needs even n, got {n}")
    return n // 2 + ceil_sqrt(n + 1) - 1


def alt_even_ub(n: int) -> int:
    if n < 2 or n % 2:
        raise DomainError(f"alt_even_ub needs even n, got {n}")
    q = ceil_p(n)
    return n // 2 + -(-(n // 2 - q) // (2 * q + 1)) + q


def alt_path(n: int) -> int:
    return alt_even(n) if n % 2 == 0 else alt_odd(n)


FORMS = {
    "alt_odd": alt_odd,
    "alt_even": alt_even,
    "alt_even_ub": alt_even_ub,
    "alt_even_lb": alt_even_lb,
    "floor_2sqrt": floor_2sqrt,
}


def closed_form(name: str, n: int) -> int:
    try:
        fn = FORMS[name]
    except KeyError:
        raise DomainError(f"unknown closed form {name!r}") from None
    return fn(n)
