"""The Farey subsequence F(B(2m), m) of F_2m and its relation to F_m.

F(B(2m), m) keeps the fractions ``h/k`` of F_2m with ``k - m <= h <= m``.
Its left half (``<= 1/2``) and right half (``>= 1/2``) are each in monotone
bijection with F_m; ``1/2`` belongs to both halves.
"""

from __future__ import annotations

import enum
from math import gcd
from typing import Callable, Optional

from .classic import NeighborReport, dual_fm, farey_oracle, fm_member, sort_key
from .numeric import HALF, FareyError, Fraction, ceil_div, check_order, solve_congruence


class HalfTag(enum.Enum):
    LEFT = "left"
    RIGHT = "right"


class Seq(enum.Enum):
    """Sequences a map can go between."""

    FM = "fm"
    LEFT = "left"
    RIGHT = "right"
    FBM = "fbm"


def fbm_member(f: Fraction, m: int) -> bool:
    return f.k <= 2 * m and f.k - m <= f.h <= m


def in_half(f: Fraction, m: int, half: HalfTag) -> bool:
    if not fbm_member(f, m):
        return False
    twice = 2 * f.h
    return twice <= f.k if half is HalfTag.LEFT else twice >= f.k


def fbm_oracle(m: int) -> list[Fraction]:
    """F(B(2m), m) as the filter ``k - m <= h <= m`` over reduced fractions of F_2m."""
    check_order(m)
    pairs = [
        (h, k)
        for k in range(1, 2 * m + 1)
        for h in range(max(0, k - m), min(k, m) + 1)
        if gcd(h, k) == 1
    ]
    pairs.sort(key=sort_key(2 * m))
    return [Fraction._raw(h, k) for h, k in pairs]


def fbm_half(m: int, half: HalfTag) -> list[Fraction]:
    seq = fbm_oracle(m)
    mid = seq.index(HALF)
    return seq[: mid + 1] if half is HalfTag.LEFT else seq[mid:]


# ---------------------------------------------------------------- bijections


class MapId(enum.Enum):
    """The ten monotone bijections between F_m and the halves of F(B(2m), m).

    Each member carries its CLI name, source, target and whether it reverses
    order.
    """

    DUAL_FM = ("eq10", Seq.FM, Seq.FM, True)
    LEFT_TO_FM = ("eq11", Seq.LEFT, Seq.FM, False)
    FM_TO_LEFT = ("eq12", Seq.FM, Seq.LEFT, False)
    RIGHT_TO_FM = ("eq16", Seq.RIGHT, Seq.FM, False)
    FM_TO_RIGHT = ("eq20", Seq.FM, Seq.RIGHT, False)
    LEFT_TO_FM_REV = ("eq15", Seq.LEFT, Seq.FM, True)
    FM_TO_LEFT_REV = ("eq21", Seq.FM, Seq.LEFT, True)
    RIGHT_TO_FM_REV = ("eq13", Seq.RIGHT, Seq.FM, True)
    FM_TO_RIGHT_REV = ("eq14", Seq.FM, Seq.RIGHT, True)
    DUAL_FBM = ("dual_fbm", Seq.FBM, Seq.FBM, True)

    def __init__(self, cli_name: str, source: Seq, target: Seq, reversing: bool):
        self.cli_name = cli_name
        self.source = source
        self.target = target
        self.reversing = reversing

    @property
    def tag(self) -> str:
        return self.name.lower()

    @classmethod
    def lookup(cls, name: str) -> MapId:
        for member in cls:
            if name in (member.cli_name, member.tag):
                return member
        names = ", ".join(member.cli_name for member in cls)
        raise FareyError(f"unknown map {name!r}; expected one of {names}")


_FORMULAS: dict[MapId, Callable[[int, int], tuple[int, int]]] = {
    MapId.DUAL_FM: lambda h, k: (k - h, k),
    MapId.LEFT_TO_FM: lambda h, k: (h, k - h),
    MapId.FM_TO_LEFT: lambda h, k: (h, k + h),
    MapId.RIGHT_TO_FM: lambda h, k: (2 * h - k, h),
    MapId.FM_TO_RIGHT: lambda h, k: (k, 2 * k - h),
    MapId.LEFT_TO_FM_REV: lambda h, k: (k - 2 * h, k - h),
    MapId.FM_TO_LEFT_REV: lambda h, k: (k - h, 2 * k - h),
    MapId.RIGHT_TO_FM_REV: lambda h, k: (k - h, h),
    MapId.FM_TO_RIGHT_REV: lambda h, k: (k, k + h),
    MapId.DUAL_FBM: lambda h, k: (k - h, k),
}

INVERSE_PAIRS = (
    (MapId.LEFT_TO_FM, MapId.FM_TO_LEFT),
    (MapId.RIGHT_TO_FM, MapId.FM_TO_RIGHT),
    (MapId.LEFT_TO_FM_REV, MapId.FM_TO_LEFT_REV),
    (MapId.RIGHT_TO_FM_REV, MapId.FM_TO_RIGHT_REV),
)


def seq_member(f: Fraction, m: int, seq: Seq) -> bool:
    if seq is Seq.FM:
        return fm_member(f, m)
    if seq is Seq.FBM:
        return fbm_member(f, m)
    return in_half(f, m, HalfTag(seq.value))


def sequence(m: int, seq: Seq) -> list[Fraction]:
    if seq is Seq.FM:
        return farey_oracle(m)
    if seq is Seq.FBM:
        return fbm_oracle(m)
    return fbm_half(m, HalfTag(seq.value))


def apply_map(map_id: MapId, f: Fraction, m: int) -> Fraction:
    check_order(m)
    if not seq_member(f, m, map_id.source):
        raise FareyError(f"{f} is not in the source sequence ({map_id.source.value}) of {map_id.cli_name} for m={m}")
    h, k = _FORMULAS[map_id](f.h, f.k)
    image = Fraction(h, k)
    if not seq_member(image, m, map_id.target):
        raise ArithmeticError(f"{map_id.cli_name} sent {f} outside its target sequence")
    return image


# ---------------------------------------------------------------- neighbors


def _require_member(f: Fraction, m: int) -> None:
    check_order(m)
    if not fbm_member(f, m):
        raise FareyError(f"{f} is not in F(B({2 * m}),{m})")


def _agree(f: Fraction, m: int, via_a: Fraction, via_b: Fraction, what: str) -> None:
    if via_a != via_b:
        raise ArithmeticError(
            f"witness routes disagree for {what} of {f} in F(B({2 * m}),{m}): {via_a} != {via_b}"
        )


def fbm_pred(f: Fraction, m: int) -> NeighborReport:
    """Predecessor in F(B(2m), m); ``1/2`` is handled by the left-half branch."""
    _require_member(f, m)
    h, k = f.h, f.k
    d = k - h
    if h == 0:
        raise FareyError("0/1 has no predecessor")
    if 2 * h <= k:
        top = ceil_div(h * m, d)
        a = solve_congruence(d, -1, h, top - h, top - 1)
        b = solve_congruence(h, 1, d, m - d + 1, m)
    else:
        a = solve_congruence(k, -1, h, m - h + 1, m)
        via_a = Fraction._raw(a, (k * a + 1) // h)
        if d == 0:
            # 1/1: modulus k - h vanishes; m/(m+1) precedes 1/1
            if via_a != Fraction._raw(m, m + 1):
                raise ArithmeticError(f"a-route gave {via_a} as predecessor of 1/1")
            return NeighborReport(via_a, a, None)
        top = ceil_div(d * m + 2, h)
        b = solve_congruence(h, 1, d, top - d, top - 1)
    via_a = Fraction._raw(a, (k * a + 1) // h)
    via_b = Fraction._raw((h * b - 1) // d, (k * b - 1) // d)
    _agree(f, m, via_a, via_b, "pred")
    return NeighborReport(via_a, a, b)


def fbm_succ(f: Fraction, m: int) -> NeighborReport:
    """Successor in F(B(2m), m); ``1/2`` is handled by the right-half branch."""
    _require_member(f, m)
    h, k = f.h, f.k
    d = k - h
    if d == 0:
        raise FareyError("1/1 has no successor")
    if 2 * h < k:
        b = solve_congruence(h, -1, d, m - d + 1, m)
        via_b = Fraction._raw((h * b + 1) // d, (k * b + 1) // d)
        if h == 0:
            # 0/1: modulus h vanishes; 1/(m+1) succeeds 0/1
            if via_b != Fraction._raw(1, m + 1):
                raise ArithmeticError(f"b-route gave {via_b} as successor of 0/1")
            return NeighborReport(via_b, None, b)
        top = ceil_div(h * m + 2, d)
        a = solve_congruence(d, 1, h, top - h, top - 1)
    else:
        a = solve_congruence(k, 1, h, m - h + 1, m)
        top = ceil_div(d * m, h)
        b = solve_congruence(h, -1, d, top - d, top - 1)
        via_b = Fraction._raw((h * b + 1) // d, (k * b + 1) // d)
    via_a = Fraction._raw(a, (k * a - 1) // h)
    _agree(f, m, via_a, via_b, "succ")
    return NeighborReport(via_a, a, b)


# ---------------------------------------------------------------- closed forms

SPECIAL_FORMS_FBM = (
    "unit",
    "left_mid",
    "right_mid",
    "unit_complement",
    "two",
    "left_mid2",
    "right_mid2",
    "two_complement",
)

_TWO_FORMS = ("two", "left_mid2", "right_mid2", "two_complement")


def special_form_fraction_fbm(form: str, j: int) -> Fraction:
    """The fraction designated by a special form and parameter ``j``."""
    if form not in SPECIAL_FORMS_FBM:
        raise FareyError(f"unknown form {form!r}; expected one of {', '.join(SPECIAL_FORMS_FBM)}")
    if j < 1:
        raise FareyError(f"j must be positive, got {j}")
    if form in _TWO_FORMS and j % 2 == 0:
        raise FareyError(f"form {form} requires odd j, got {j}")
    h, k = {
        "unit": (1, j + 1),
        "left_mid": (j - 1, 2 * j - 1),
        "right_mid": (j, 2 * j - 1),
        "unit_complement": (j, j + 1),
        "two": (2, j + 2),
        "left_mid2": (j - 2, 2 * (j - 1)),
        "right_mid2": (j, 2 * (j - 1)),
        "two_complement": (j, j + 2),
    }[form]
    if k < 1 or h < 0 or h > k:
        raise FareyError(f"form {form} with j={j} does not designate a fraction in [0/1, 1/1]")
    return Fraction._raw(h, k)


def _guard(form: str, f: Fraction) -> bool:
    # strict comparisons against 1/2 (and 1/1 for right_mid), as stated
    twice = 2 * f.h
    if form in ("unit", "left_mid", "two", "left_mid2"):
        return twice < f.k
    if form == "right_mid":
        return twice > f.k and f.h < f.k
    return twice > f.k


def special_neighbors_fbm(
    form: str, j: int, m: int
) -> tuple[Optional[Fraction], Fraction]:
    """Closed-form neighbors of the eight special fractions of F(B(2m), m).

    The predecessor is ``None`` only for ``left_mid`` with ``j == 1``, which
    designates 0/1.
    """
    check_order(m)
    f = special_form_fraction_fbm(form, j)
    if not fbm_member(f, m):
        raise FareyError(f"{f} is not in F(B({2 * m}),{m})")
    if not _guard(form, f):
        raise FareyError(f"{f} violates the guard of form {form}")

    if form not in _TWO_FORMS:
        p = ceil_div(m, j) - 1
        s = ceil_div(m + 2, j) - 1
        if form == "unit":
            return Fraction(p, (j + 1) * p + 1), Fraction(s, (j + 1) * s - 1)
        if form == "left_mid":
            pred = Fraction((j - 1) * s - 1, (2 * j - 1) * s - 2) if j > 1 else None
            return pred, Fraction((j - 1) * p + 1, (2 * j - 1) * p + 2)
        if form == "right_mid":
            return Fraction(j * p + 1, (2 * j - 1) * p + 2), Fraction(j * s - 1, (2 * j - 1) * s - 2)
        return Fraction(j * s - 1, (j + 1) * s - 1), Fraction(j * p + 1, (j + 1) * p + 1)

    c_pred = ceil_div(2 * m, j)
    c_succ = ceil_div(2 * (m + 1), j)
    p = c_pred - 1 if c_pred % 2 == 0 else c_pred - 2
    s = c_succ - 1 if c_succ % 2 == 0 else c_succ - 2
    if form == "two":
        return _frac(2 * p, (j + 2) * p + 1), _frac(2 * s, (j + 2) * s - 1)
    if form == "left_mid2":
        return (
            _frac((j - 2) * s - 1, 2 * ((j - 1) * s - 1)),
            _frac((j - 2) * p + 1, 2 * ((j - 1) * p + 1)),
        )
    if form == "right_mid2":
        return (
            _frac(j * p + 1, 2 * ((j - 1) * p + 1)),
            _frac(j * s - 1, 2 * ((j - 1) * s - 1)),
        )
    return _frac(j * s - 1, (j + 2) * s - 1), _frac(j * p + 1, (j + 2) * p + 1)


def _frac(twice_num: int, twice_den: int) -> Fraction:
    """``(twice_num/2) / (twice_den/2)``, checking both halves are integers."""
    if twice_num % 2 or twice_den % 2:
        raise ArithmeticError(f"closed form produced non-integer halves {twice_num}/2, {twice_den}/2")
    return Fraction(twice_num // 2, twice_den // 2)


# ---------------------------------------------------------------- runs


def consecutive_runs(m: int) -> tuple[list[Fraction], list[Fraction], list[Fraction], list[Fraction]]:
    """The four runs of consecutive fractions around 0/1, 1/2 and 1/1."""
    check_order(m)
    c = ceil_div(m, 2)
    first = [Fraction._raw(0, 1)] + [Fraction._raw(1, t) for t in range(m + 1, c, -1)]
    second = [Fraction._raw(t - 1, 2 * t - 1) for t in range(c, m + 1)] + [HALF]
    third = [HALF] + [Fraction._raw(t, 2 * t - 1) for t in range(m, c - 1, -1)]
    fourth = [Fraction._raw(t, t + 1) for t in range(c, m + 1)] + [Fraction._raw(1, 1)]
    return first, second, third, fourth


def dual_fbm(f: Fraction) -> Fraction:
    return dual_fm(f)
