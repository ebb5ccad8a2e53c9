"""Coprime counting and the bivariate generating functions of the halves of F_m."""

from __future__ import annotations

from math import gcd
from typing import Iterable, Mapping, Optional

from .classic import farey_oracle
from .numeric import FareyError, ceil_div, check_order, divisors, mobius

METHODS = ("enumerate", "closed_form")


class UnivarPoly:
    """Sparse integer polynomial in ``y``; zero coefficients are never stored."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Optional[Mapping[int, int]] = None):
        self.coeffs = {e: c for e, c in (coeffs or {}).items() if c}

    def __eq__(self, other):
        return isinstance(other, UnivarPoly) and self.coeffs == other.coeffs

    def __repr__(self):
        return f"UnivarPoly({dict(sorted(self.coeffs.items()))})"

    def __str__(self):
        return render_terms((0, e, c) for e, c in self.coeffs.items())

    def evaluate(self, y: int) -> int:
        return sum(c * y**e for e, c in self.coeffs.items())


class BivarPoly:
    """Sparse integer polynomial in ``x`` and ``y`` keyed by ``(dx, dy)``.

    When ``cap`` is set, arithmetic happens in the truncated ring where
    monomials with ``dx > cap[0]`` or ``dy > cap[1]`` vanish.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Optional[Mapping[tuple[int, int], int]] = None):
        self.coeffs = {e: c for e, c in (coeffs or {}).items() if c}

    @classmethod
    def monomial(cls, dx: int, dy: int, c: int = 1) -> BivarPoly:
        return cls({(dx, dy): c})

    def __eq__(self, other):
        return isinstance(other, BivarPoly) and self.coeffs == other.coeffs

    def __repr__(self):
        return f"BivarPoly({dict(sorted(self.coeffs.items()))})"

    def __str__(self):
        return render_terms((dx, dy, c) for (dx, dy), c in self.coeffs.items())

    def __len__(self):
        return len(self.coeffs)

    def __add__(self, other: BivarPoly) -> BivarPoly:
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return BivarPoly(out)

    def __neg__(self) -> BivarPoly:
        return BivarPoly({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other: BivarPoly) -> BivarPoly:
        return self + (-other)

    def scale(self, c: int) -> BivarPoly:
        return BivarPoly({e: c * v for e, v in self.coeffs.items()})

    def mul(self, other: BivarPoly, cap: Optional[tuple[int, int]] = None) -> BivarPoly:
        out: dict[tuple[int, int], int] = {}
        for (ax, ay), ac in self.coeffs.items():
            for (bx, by), bc in other.coeffs.items():
                ex, ey = ax + bx, ay + by
                if cap is not None and (ex > cap[0] or ey > cap[1]):
                    continue
                out[(ex, ey)] = out.get((ex, ey), 0) + ac * bc
        return BivarPoly(out)

    def truncate(self, cap: tuple[int, int]) -> BivarPoly:
        return BivarPoly({e: c for e, c in self.coeffs.items() if e[0] <= cap[0] and e[1] <= cap[1]})

    def evaluate(self, x: int, y: int) -> int:
        return sum(c * x**dx * y**dy for (dx, dy), c in self.coeffs.items())

    def at_x1(self) -> UnivarPoly:
        """Substitute ``x = 1``."""
        out: dict[int, int] = {}
        for (_, dy), c in self.coeffs.items():
            out[dy] = out.get(dy, 0) + c
        return UnivarPoly(out)


def render_terms(terms: Iterable[tuple[int, int, int]]) -> str:
    """Render ``(dx, dy, c)`` terms as ``c*x^a*y^b`` joined by `` + ``, sorted by ``(dy, dx)``."""
    parts = []
    for dx, dy, c in sorted(terms, key=lambda t: (t[1], t[0])):
        factors = []
        if c != 1 or (dx == 0 and dy == 0):
            factors.append(str(c))
        for var, e in (("x", dx), ("y", dy)):
            if e == 1:
                factors.append(var)
            elif e > 1:
                factors.append(f"{var}^{e}")
        parts.append("*".join(factors))
    return " + ".join(parts) if parts else "0"


def geometric_inverse(dx: int, dy: int, cap: tuple[int, int]) -> BivarPoly:
    """``1 / (1 - x^dx y^dy)`` in the ring truncated at ``cap``."""
    if dx == 0 and dy == 0:
        raise ZeroDivisionError("1 - 1 is not invertible")
    terms = {}
    t = 0
    while t * dx <= cap[0] and t * dy <= cap[1]:
        terms[(t * dx, t * dy)] = 1
        t += 1
    return BivarPoly(terms)


# ---------------------------------------------------------------- counting


def coprime_count(i: int, lo: int, hi: int) -> int:
    """``|{j in [lo, hi] : gcd(i, j) = 1}|`` by Möbius inversion over divisors of ``i``."""
    if i < 1:
        raise FareyError(f"i must be positive, got {i}")
    if lo > hi:
        return 0
    return sum(mobius(d) * (hi // d - (lo - 1) // d) for d in divisors(i))


def coprime_powersum(i: int, lo: int, hi: int, check: bool = True) -> UnivarPoly:
    """``sum of y^j over j in [lo, hi] coprime to i``, via the Möbius closed form.

    Each divisor term is the finite geometric sum of ``y^(d t)`` for
    ``ceil(lo/d) <= t <= floor(hi/d)``. With ``check`` the result is compared
    against direct enumeration.
    """
    if i < 1:
        raise FareyError(f"i must be positive, got {i}")
    if lo < 1 or lo > hi + 1:
        raise FareyError(f"need 1 <= lo <= hi + 1, got lo={lo}, hi={hi}")
    out: dict[int, int] = {}
    for d in divisors(i):
        mu = mobius(d)
        if mu == 0:
            continue
        for t in range(ceil_div(lo, d), hi // d + 1):
            out[d * t] = out.get(d * t, 0) + mu
    result = UnivarPoly(out)
    if check:
        direct = UnivarPoly({j: 1 for j in range(lo, hi + 1) if gcd(i, j) == 1})
        if result != direct:
            raise ArithmeticError(f"Möbius power sum disagrees with enumeration for i={i}, [{lo}, {hi}]")
    return result


# ---------------------------------------------------------------- generating functions


def _enumerate_half(m: int, upper: bool) -> BivarPoly:
    out = {}
    for f in farey_oracle(m):
        twice = 2 * f.h
        if (upper and f.k < twice < 2 * f.k) or (not upper and 0 < twice < f.k):
            out[(f.h, f.k)] = out.get((f.h, f.k), 0) + 1
    return BivarPoly(out)


# extra room above the true degrees; anything landing there is a bug
_MARGIN = 2


def _closed_form(m: int, upper: bool) -> BivarPoly:
    x_cap = m - 1 if upper else ceil_div(m, 2) - 1
    y_cap = m
    cap = (x_cap + _MARGIN, y_cap + _MARGIN)
    total = BivarPoly()
    for d in range(1, ceil_div(m, 2)):
        mu = mobius(d)
        if mu == 0:
            continue
        c = ceil_div(m, 2 * d)
        fl = m // d
        first = (BivarPoly.monomial(d, 2 * d) - BivarPoly.monomial(d * c, 2 * d * c)).mul(
            geometric_inverse(d, 2 * d, cap), cap
        )
        if upper:
            lead = BivarPoly.monomial(d, d).mul(geometric_inverse(d, d, cap), cap)
            numer = BivarPoly.monomial(d * (fl - c + 1), 0) - BivarPoly.monomial(d * fl, 0)
        else:
            lead = BivarPoly.monomial(0, d).mul(geometric_inverse(0, d, cap), cap)
            numer = BivarPoly.monomial(d, 0) - BivarPoly.monomial(d * c, 0)
        second = numer.mul(geometric_inverse(d, 0, cap), cap).mul(BivarPoly.monomial(0, d * fl), cap)
        total = total + lead.mul(first - second, cap).scale(mu)
    stray = [e for e in total.coeffs if e[0] > x_cap or e[1] > y_cap]
    if stray:
        raise ArithmeticError(f"closed form left terms beyond degree caps: {sorted(stray)[:5]}")
    return total


def gf_lower(m: int, method: str = "closed_form") -> BivarPoly:
    """Sum of ``x^h y^k`` over ``h/k`` in F_m with ``0 < h/k < 1/2``."""
    check_order(m)
    if method == "enumerate":
        return _enumerate_half(m, upper=False)
    if method == "closed_form":
        return _closed_form(m, upper=False)
    raise FareyError(f"unknown method {method!r}; expected one of {', '.join(METHODS)}")


def gf_upper(m: int, method: str = "closed_form") -> BivarPoly:
    """Sum of ``x^h y^k`` over ``h/k`` in F_m with ``1/2 < h/k < 1``."""
    check_order(m)
    if method == "enumerate":
        return _enumerate_half(m, upper=True)
    if method == "closed_form":
        return _closed_form(m, upper=True)
    raise FareyError(f"unknown method {method!r}; expected one of {', '.join(METHODS)}")


def reflect(poly: BivarPoly) -> BivarPoly:
    """Send each ``x^h y^k`` to ``x^(k-h) y^k``."""
    return BivarPoly({(dy - dx, dy): c for (dx, dy), c in poly.coeffs.items()})
