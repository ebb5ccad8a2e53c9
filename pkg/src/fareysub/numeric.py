"""Exact integer helpers and the reduced-fraction value type."""

from __future__ import annotations

from math import gcd

MIN_ORDER = 2
MAX_ORDER = 2**30


class FareyError(ValueError):
    """Raised when an argument lies outside the domain of an operation."""


def check_order(m: int) -> int:
    if isinstance(m, bool) or not isinstance(m, int):
        raise FareyError(f"order must be an integer, got {m!r}")
    if not MIN_ORDER <= m <= MAX_ORDER:
        raise FareyError(f"order must satisfy {MIN_ORDER} <= m <= 2**30, got {m}")
    return m


class Fraction:
    """Immutable reduced fraction ``h/k`` with ``0 <= h <= k``.

    Ordering is exact cross-multiplication; Python integers never wrap.
    """

    __slots__ = ("h", "k")

    h: int
    k: int

    def __init__(self, h: int, k: int = 1) -> None:
        if k < 1:
            raise FareyError(f"denominator must be positive, got {k}")
        if h < 0 or h > k:
            raise FareyError(f"fraction {h}/{k} lies outside [0/1, 1/1]")
        g = gcd(h, k)
        object.__setattr__(self, "h", h // g)
        object.__setattr__(self, "k", k // g)

    @classmethod
    def _raw(cls, h: int, k: int) -> Fraction:
        # caller guarantees gcd(h, k) == 1 and 0 <= h <= k
        f = object.__new__(cls)
        object.__setattr__(f, "h", h)
        object.__setattr__(f, "k", k)
        return f

    def __setattr__(self, name, value):
        raise AttributeError("Fraction is immutable")

    @classmethod
    def parse(cls, text: str) -> Fraction:
        """Parse the strict ``h/k`` text form (base 10, no whitespace)."""
        num, sep, den = text.partition("/")
        if not sep or not num.isdigit() or not den.isdigit() or not num.isascii() or not den.isascii():
            raise FareyError(f"expected a fraction of the form h/k, got {text!r}")
        return cls(int(num), int(den))

    def __str__(self) -> str:
        return f"{self.h}/{self.k}"

    def __repr__(self) -> str:
        return f"Fraction({self.h}, {self.k})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Fraction):
            return NotImplemented
        return self.h == other.h and self.k == other.k

    def __hash__(self) -> int:
        return hash((self.h, self.k))

    def __lt__(self, other: Fraction) -> bool:
        return self.h * other.k < other.h * self.k

    def __le__(self, other: Fraction) -> bool:
        return self.h * other.k <= other.h * self.k

    def __gt__(self, other: Fraction) -> bool:
        return self.h * other.k > other.h * self.k

    def __ge__(self, other: Fraction) -> bool:
        return self.h * other.k >= other.h * self.k

    def __reduce__(self):
        return (Fraction, (self.h, self.k))

    def as_dict(self) -> dict:
        return {"h": self.h, "k": self.k}


ZERO = Fraction._raw(0, 1)
HALF = Fraction._raw(1, 2)
ONE = Fraction._raw(1, 1)


def reduce(h: int, k: int) -> Fraction:
    return Fraction(h, k)


def compare(f: Fraction, g: Fraction) -> int:
    """Return -1, 0 or 1 as ``f`` is less than, equal to or greater than ``g``."""
    lhs, rhs = f.h * g.k, g.h * f.k
    return (lhs > rhs) - (lhs < rhs)


def extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``s*a + t*b == g == gcd(a, b)`` and ``g >= 0``."""
    if a == 0 and b == 0:
        raise FareyError("extended_gcd(0, 0) is undefined")
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def solve_congruence(c: int, r: int, mod: int, lo: int, hi: int) -> int:
    """Unique ``x`` in ``[lo, hi]`` with ``c*x = r (mod mod)``.

    The interval must contain exactly ``mod`` integers and ``c`` must be a unit
    modulo ``mod``; no scanning is done.
    """
    if mod < 1:
        raise FareyError(f"modulus must be positive, got {mod}")
    if hi - lo + 1 != mod:
        raise FareyError(f"interval [{lo}, {hi}] has length {hi - lo + 1}, expected {mod}")
    if mod == 1:
        return lo
    g, s, _ = extended_gcd(c % mod, mod)
    if g != 1:
        raise FareyError(f"{c} is not invertible modulo {mod}")
    x = s * r % mod
    return lo + (x - lo) % mod


def mobius(n: int) -> int:
    """Möbius function by trial division."""
    if n < 1:
        raise FareyError(f"mobius is defined on positive integers, got {n}")
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1 if p == 2 else 2
    if n > 1:
        result = -result
    return result


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def mediant(f: Fraction, g: Fraction) -> Fraction:
    # h+h' <= k+k' always holds for fractions in [0, 1]
    return Fraction(f.h + g.h, f.k + g.k)


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)
