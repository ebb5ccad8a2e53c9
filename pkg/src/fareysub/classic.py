"""The Farey sequence F_m: enumeration, the dual map and neighbor formulas."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterator, Optional

from .numeric import (
    FareyError,
    Fraction,
    ceil_div,
    check_order,
    solve_congruence,
)

SPECIAL_FORMS_FM = ("unit", "unit_complement", "two", "two_complement")


@dataclass(frozen=True)
class NeighborReport:
    """A neighbor together with the two congruence witnesses that produced it.

    ``witness_a`` and ``witness_b`` are ``None`` only on the endpoint route
    where the corresponding modulus degenerates to zero.
    """

    neighbor: Fraction
    witness_a: Optional[int]
    witness_b: Optional[int]


def sort_key(bound: int):
    """Exact integer sort key for fractions with denominators ``<= bound``.

    Distinct such fractions differ by at least ``1/bound**2``, so scaling by
    ``bound**2 + 1`` and flooring keeps them apart.
    """
    scale = bound * bound + 1
    return lambda hk: hk[0] * scale // hk[1]


def farey_oracle(m: int) -> list[Fraction]:
    """All reduced ``h/k`` in ``[0, 1]`` with ``k <= m``, sorted ascending."""
    check_order(m)
    pairs = [(h, k) for k in range(1, m + 1) for h in range(k + 1) if gcd(h, k) == 1]
    pairs.sort(key=sort_key(m))
    return [Fraction._raw(h, k) for h, k in pairs]


def is_adjacent_fm(f: Fraction, g: Fraction, m: int) -> bool:
    """True iff ``f < g`` are consecutive in F_m."""
    return f.k <= m and g.k <= m and g.h * f.k - f.h * g.k == 1 and f.k + g.k > m


def farey_stream(m: int, start: Fraction, start_next: Fraction) -> Iterator[Fraction]:
    """Continue F_m past two adjacent seeds using the next-term recurrence.

    The seeds themselves are not yielded; the stream ends at ``1/1``.
    """
    check_order(m)
    if not is_adjacent_fm(start, start_next, m):
        raise FareyError(f"{start} and {start_next} are not adjacent in F_{m}")
    return _stream(m, start.h, start.k, start_next.h, start_next.k)


def _stream(m, a, b, c, d):
    while c != d:
        t = (m + b) // d
        a, b, c, d = c, d, t * c - a, t * d - b
        yield Fraction._raw(c, d)


def dual_fm(f: Fraction) -> Fraction:
    return Fraction._raw(f.k - f.h, f.k)


def fm_member(f: Fraction, m: int) -> bool:
    return f.k <= m


def _require_member(f: Fraction, m: int) -> None:
    check_order(m)
    if not fm_member(f, m):
        raise FareyError(f"{f} is not in F_{m}")


def pred_fm(f: Fraction, m: int) -> NeighborReport:
    """Predecessor of ``f`` in F_m from the two congruence routes."""
    _require_member(f, m)
    h, k = f.h, f.k
    if h == 0:
        raise FareyError("0/1 has no predecessor")
    top = ceil_div(h * m, k)
    a = solve_congruence(k, -1, h, top - h, top - 1)
    b = solve_congruence(h, 1, k, m - k + 1, m)
    via_a = Fraction._raw(a, (k * a + 1) // h)
    via_b = Fraction._raw((h * b - 1) // k, b)
    if via_a != via_b:
        raise ArithmeticError(f"witness routes disagree for pred of {f} in F_{m}: {via_a} != {via_b}")
    return NeighborReport(via_a, a, b)


def succ_fm(f: Fraction, m: int) -> NeighborReport:
    """Successor of ``f`` in F_m from the two congruence routes."""
    _require_member(f, m)
    h, k = f.h, f.k
    if h == k:
        raise FareyError("1/1 has no successor")
    b = solve_congruence(h, -1, k, m - k + 1, m)
    via_b = Fraction._raw((h * b + 1) // k, b)
    if h == 0:
        # modulus h vanishes; 1/m succeeds 0/1
        if via_b != Fraction._raw(1, m):
            raise ArithmeticError(f"b-route gave {via_b} as successor of 0/1 in F_{m}")
        return NeighborReport(via_b, None, b)
    top = ceil_div(h * m + 2, k)
    a = solve_congruence(k, 1, h, top - h, top - 1)
    via_a = Fraction._raw(a, (k * a - 1) // h)
    if via_a != via_b:
        raise ArithmeticError(f"witness routes disagree for succ of {f} in F_{m}: {via_a} != {via_b}")
    return NeighborReport(via_a, a, b)


def special_form_fraction_fm(form: str, j: int) -> Fraction:
    """The fraction a special form designates (``1/j``, ``(j-1)/j``, ``2/j``, ``(j-2)/j``)."""
    if form not in SPECIAL_FORMS_FM:
        raise FareyError(f"unknown form {form!r}; expected one of {', '.join(SPECIAL_FORMS_FM)}")
    if j < 1:
        raise FareyError(f"j must be positive, got {j}")
    if form in ("two", "two_complement") and (j < 3 or j % 2 == 0):
        raise FareyError(f"form {form} requires odd j >= 3, got {j}")
    h = {"unit": 1, "unit_complement": j - 1, "two": 2, "two_complement": j - 2}[form]
    return Fraction._raw(h, j)


def _halved(num: int, den: int) -> Fraction:
    # closed forms with "/2" numerators/denominators are always even here
    if num % 2 or den % 2:
        raise ArithmeticError(f"closed form produced odd halves {num}/2, {den}/2")
    return Fraction(num // 2, den // 2)


def special_neighbors_fm(
    form: str, j: int, m: int
) -> tuple[Optional[Fraction], Optional[Fraction]]:
    """Closed-form neighbors of ``1/j``, ``(j-1)/j``, ``2/j`` or ``(j-2)/j`` in F_m.

    ``None`` marks a neighbor that does not exist (left of 0/1, right of 1/1).
    """
    check_order(m)
    f = special_form_fraction_fm(form, j)
    if not fm_member(f, m):
        raise FareyError(f"{f} is not in F_{m}")

    if form in ("unit", "unit_complement"):
        p = ceil_div(m, j) - 1
        s = ceil_div(m + 2, j) - 1
        if form == "unit":
            pred = Fraction(p, j * p + 1)
            succ = Fraction(s, j * s - 1) if j > 1 else None
        else:
            pred = Fraction((j - 1) * s - 1, j * s - 1) if j > 1 else None
            succ = Fraction((j - 1) * p + 1, j * p + 1)
        return pred, succ

    c_pred = ceil_div(2 * m, j)
    c_succ = ceil_div(2 * (m + 1), j)
    p = c_pred - 1 if c_pred % 2 == 0 else c_pred - 2
    s = c_succ - 1 if c_succ % 2 == 0 else c_succ - 2
    if form == "two":
        pred = _halved(2 * p, j * p + 1)
        succ = _halved(2 * s, j * s - 1)
    else:
        pred = _halved((j - 2) * s - 1, j * s - 1)
        succ = _halved((j - 2) * p + 1, j * p + 1)
    return pred, succ


__all__ = [
    "NeighborReport",
    "SPECIAL_FORMS_FM",
    "dual_fm",
    "farey_oracle",
    "farey_stream",
    "fm_member",
    "is_adjacent_fm",
    "pred_fm",
    "special_form_fraction_fm",
    "special_neighbors_fm",
    "succ_fm",
]
