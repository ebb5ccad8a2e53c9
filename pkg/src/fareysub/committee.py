"""Committees of regions for central hyperplane arrangements.

Regions are represented by sign vectors over oriented hyperplanes. A region
subset is a committee when every hyperplane has a strict majority of the
subset on its positive side. For a central arrangement with ``|T|`` regions
the achievable vote ratios form F(B(|T|), |T|/2).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction as Q
from functools import cmp_to_key
from typing import Iterable, Optional, Sequence

import numpy as np

from .boolean import fbm_member
from .numeric import HALF, FareyError, Fraction

MAX_EXHAUSTIVE_REGIONS = 24

_SIGN_CHARS = {"+": 1, "-": -1, "−": -1}


@dataclass(frozen=True)
class Hyperplane:
    id: int
    class_label: Optional[str] = None
    normal: Optional[tuple[Q, ...]] = None


@dataclass(frozen=True)
class CentralArrangement:
    hyperplanes: tuple[Hyperplane, ...]
    regions: tuple[tuple[int, ...], ...]
    _by_id: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = len(self.hyperplanes)
        ids = [hp.id for hp in self.hyperplanes]
        if len(set(ids)) != n:
            raise FareyError("duplicate hyperplane ids")
        if not self.regions:
            raise FareyError("arrangement has no regions")
        for row in self.regions:
            if len(row) != n or any(s not in (1, -1) for s in row):
                raise FareyError(f"bad sign vector {row!r} for {n} hyperplanes")
        seen = set(self.regions)
        if len(seen) != len(self.regions):
            raise FareyError("region sign vectors are not pairwise distinct")
        for row in self.regions:
            if tuple(-s for s in row) not in seen:
                raise FareyError(f"arrangement is not central: antipode of {format_signs(row)} is missing")
        object.__setattr__(self, "_by_id", {hp.id: col for col, hp in enumerate(self.hyperplanes)})

    @property
    def n_regions(self) -> int:
        return len(self.regions)

    @property
    def half(self) -> int:
        return len(self.regions) // 2

    def column(self, hyperplane_id: int) -> int:
        try:
            return self._by_id[hyperplane_id]
        except KeyError:
            raise FareyError(f"unknown hyperplane id {hyperplane_id}") from None

    def positive_mask(self, hyperplane_id: int) -> int:
        """Bitmask of regions on the positive side (bit ``r`` is region ``r``)."""
        col = self.column(hyperplane_id)
        return sum(1 << r for r, row in enumerate(self.regions) if row[col] > 0)


def format_signs(row: Sequence[int]) -> str:
    return "".join("+" if s > 0 else "-" for s in row)


# ---------------------------------------------------------------- loading


def load_arrangement(source: str | Iterable[str]) -> CentralArrangement:
    """Parse a ``signs`` or ``normals2d`` document."""
    lines = source.splitlines() if isinstance(source, str) else list(source)
    lines = [ln.strip() for ln in lines]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise FareyError("empty arrangement input")
    header = lines[0].split()
    if header[0] == "signs":
        return _load_signs(header, lines[1:])
    if header[0] == "normals2d":
        if len(header) != 1:
            raise FareyError("normals2d header takes no arguments")
        return _load_normals2d(lines[1:])
    raise FareyError(f"unknown arrangement format {header[0]!r}")


def _load_signs(header: list[str], rows: list[str]) -> CentralArrangement:
    if len(header) != 3:
        raise FareyError("expected header 'signs <n_regions> <n_hyperplanes>'")
    try:
        n_regions, n_hyper = int(header[1]), int(header[2])
    except ValueError:
        raise FareyError("signs header counts must be integers") from None
    if len(rows) != n_regions:
        raise FareyError(f"header declares {n_regions} regions, found {len(rows)} rows")
    regions = []
    for row in rows:
        if len(row) != n_hyper or any(ch not in _SIGN_CHARS for ch in row):
            raise FareyError(f"malformed sign row {row!r}")
        regions.append(tuple(_SIGN_CHARS[ch] for ch in row))
    hyperplanes = tuple(Hyperplane(i) for i in range(n_hyper))
    return CentralArrangement(hyperplanes, tuple(regions))


def _load_normals2d(rows: list[str]) -> CentralArrangement:
    hyperplanes = []
    for i, row in enumerate(rows):
        parts = row.split()
        if len(parts) != 3 or parts[0] not in ("A", "B"):
            raise FareyError(f"malformed normal line {row!r}; expected '<A|B> <px> <py>'")
        try:
            px, py = Q(parts[1]), Q(parts[2])
        except (ValueError, ZeroDivisionError):
            raise FareyError(f"malformed coordinates in {row!r}") from None
        if px == 0 and py == 0:
            raise FareyError(f"zero normal vector in {row!r}")
        hyperplanes.append(Hyperplane(i, parts[0], (px, py)))
    return arrangement_from_normals2d(hyperplanes)


def oriented_normal(hp: Hyperplane) -> tuple[Q, ...]:
    """Class A hyperplanes point their positive side against the given normal."""
    if hp.class_label == "A":
        return tuple(-c for c in hp.normal)
    return hp.normal


def _half_plane(v) -> int:
    return 0 if v[1] > 0 or (v[1] == 0 and v[0] > 0) else 1


def _angle_cmp(u, v) -> int:
    hu, hv = _half_plane(u), _half_plane(v)
    if hu != hv:
        return hu - hv
    cross = u[0] * v[1] - u[1] * v[0]
    return -1 if cross > 0 else (1 if cross < 0 else 0)


def arrangement_from_normals2d(hyperplanes: Sequence[Hyperplane]) -> CentralArrangement:
    """Regions of distinct lines through the origin in the plane, in exact arithmetic.

    The 2n boundary rays are sorted by angle; the sum of two consecutive rays
    lies strictly inside the sector between them.
    """
    if not hyperplanes:
        raise FareyError("no hyperplanes given")
    normals = [oriented_normal(hp) for hp in hyperplanes]
    for i in range(len(normals)):
        for j in range(i):
            a, b = normals[i], normals[j]
            if a[0] * b[1] - a[1] * b[0] == 0:
                raise FareyError(f"hyperplanes {hyperplanes[j].id} and {hyperplanes[i].id} are parallel")
    if len(normals) == 1:
        samples = [normals[0], tuple(-c for c in normals[0])]
    else:
        rays = []
        for h in normals:
            rays.append((-h[1], h[0]))
            rays.append((h[1], -h[0]))
        rays.sort(key=cmp_to_key(_angle_cmp))
        samples = [
            (rays[i][0] + rays[(i + 1) % len(rays)][0], rays[i][1] + rays[(i + 1) % len(rays)][1])
            for i in range(len(rays))
        ]
    regions = []
    for v in samples:
        row = []
        for h in normals:
            dot = h[0] * v[0] + h[1] * v[1]
            if dot == 0:
                raise ArithmeticError("sample vector landed on a line")
            row.append(1 if dot > 0 else -1)
        regions.append(tuple(row))
    return CentralArrangement(tuple(hyperplanes), tuple(regions))


# ---------------------------------------------------------------- queries


def positive_side_count(arr: CentralArrangement, hyperplane_id: int) -> int:
    count = bin(arr.positive_mask(hyperplane_id)).count("1")
    if 2 * count != arr.n_regions:
        raise ArithmeticError(f"hyperplane {hyperplane_id} has {count} of {arr.n_regions} regions on its positive side")
    return count


@dataclass(frozen=True)
class CommitteeReport:
    is_committee: bool
    fractions: tuple[Fraction, ...]
    in_upper_open_half: tuple[bool, ...]


def is_committee(arr: CentralArrangement, subset: Iterable[int]) -> CommitteeReport:
    """Check the strict-majority condition for every hyperplane.

    The verdict is computed from the raw counts and then cross-checked
    against membership of each vote ratio in F^{>=1/2}(B(|T|), |T|/2) minus 1/2.
    """
    indices = sorted(set(subset))
    if not indices:
        raise FareyError("committee candidate must be non-empty")
    for r in indices:
        if not 0 <= r < arr.n_regions:
            raise FareyError(f"region index {r} out of range 0..{arr.n_regions - 1}")
    size = len(indices)
    majority = True
    fractions, flags = [], []
    for col in range(len(arr.hyperplanes)):
        positive = sum(1 for r in indices if arr.regions[r][col] > 0)
        majority = majority and 2 * positive > size
        f = Fraction(positive, size)
        fractions.append(f)
        flags.append(fbm_member(f, arr.half) and f > HALF)
    if majority != all(flags):
        raise ArithmeticError("majority verdict disagrees with the Farey-subsequence criterion")
    return CommitteeReport(majority, tuple(fractions), tuple(flags))


def _popcount(a: np.ndarray) -> np.ndarray:
    a = a - ((a >> 1) & 0x55555555)
    a = (a & 0x33333333) + ((a >> 2) & 0x33333333)
    a = (a + (a >> 4)) & 0x0F0F0F0F
    return (a * 0x01010101 & 0xFFFFFFFF) >> 24


def ratio_collection(arr: CentralArrangement, hyperplane_id: int) -> list[Fraction]:
    """Distinct reduced vote ratios ``|R n T+| / |R|`` over every non-empty ``R``.

    Every one of the ``2^|T| - 1`` subsets is visited, so ``|T|`` is capped.
    """
    n = arr.n_regions
    if n > MAX_EXHAUSTIVE_REGIONS:
        raise FareyError(f"exhaustive enumeration is capped at {MAX_EXHAUSTIVE_REGIONS} regions, got {n}")
    mask = np.int64(arr.positive_mask(hyperplane_id))
    pairs = set()
    chunk = 1 << 20
    for start in range(1, 1 << n, chunk):
        subsets = np.arange(start, min(start + chunk, 1 << n), dtype=np.int64)
        sizes = _popcount(subsets)
        positives = _popcount(subsets & mask)
        codes = np.unique(sizes * 64 + positives)
        pairs.update((int(c) % 64, int(c) // 64) for c in codes)
    return sorted({Fraction(pos, size) for pos, size in pairs})


class Decision(enum.Enum):
    CLASS_A = "class_A"
    CLASS_B = "class_B"
    UNDECIDED = "undecided"


def classify_pattern(representatives: Sequence[Sequence], g: Sequence) -> Decision:
    """Committee decision rule for a new pattern with normal ``g``.

    Fewer than half of the representatives positive against ``g`` means class
    A, more than half means class B; an exact tie is reported as undecided.
    """
    if not representatives:
        raise FareyError("no representatives given")
    positive = 0
    for w in representatives:
        if len(w) != len(g):
            raise FareyError(f"dimension mismatch: {len(w)} vs {len(g)}")
        dot = sum(a * b for a, b in zip(g, w))
        if dot == 0:
            raise FareyError(f"pattern is orthogonal to representative {tuple(w)}")
        positive += dot > 0
    total = len(representatives)
    if 2 * positive < total:
        return Decision.CLASS_A
    if 2 * positive > total:
        return Decision.CLASS_B
    return Decision.UNDECIDED
