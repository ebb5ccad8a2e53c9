"""Formula-based neighbor queries versus walking the whole sequence."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from math import gcd
from typing import Iterator, Optional

import numpy as np

from .boolean import fbm_member, fbm_pred, fbm_succ
from .classic import pred_fm, succ_fm
from .numeric import FareyError, Fraction, check_order

FAMILIES = ("fm", "fbm")
ENUMERATION_LIMIT = 10**4

Pair = tuple[Optional[Fraction], Optional[Fraction]]


def random_members(m: int, family: str, count: int, seed: int) -> list[Fraction]:
    """Seeded random members: uniform denominator, then a coprime numerator by rejection."""
    check_order(m)
    rng = random.Random(seed)
    top = m if family == "fm" else 2 * m
    out = []
    while len(out) < count:
        k = rng.randint(1, top)
        h = rng.randint(0, k)
        if gcd(h, k) != 1:
            continue
        f = Fraction._raw(h, k)
        if family == "fbm" and not fbm_member(f, m):
            continue
        out.append(f)
    return out


def formula_neighbors(queries: list[Fraction], m: int, family: str) -> list[Pair]:
    pred, succ = (pred_fm, succ_fm) if family == "fm" else (fbm_pred, fbm_succ)
    out = []
    for f in queries:
        p = pred(f, m).neighbor if f.h != 0 else None
        s = succ(f, m).neighbor if f.h != f.k else None
        out.append((p, s))
    return out


def _walk_fm(m: int) -> Iterator[tuple[int, int]]:
    a, b, c, d = 0, 1, 1, m
    yield a, b
    yield c, d
    while c != d:
        t = (m + b) // d
        a, b, c, d = c, d, t * c - a, t * d - b
        yield c, d


def walk(m: int, family: str) -> Iterator[tuple[int, int]]:
    """Every term of the sequence in order, as ``(h, k)`` pairs."""
    if family == "fm":
        yield from _walk_fm(m)
        return
    # left half is the order-preserving image h/(k+h) of F_m, right half k/(2k-h)
    for h, k in _walk_fm(m):
        yield h, k + h
    first = True
    for h, k in _walk_fm(m):
        if first:
            first = False
            continue
        yield k, 2 * k - h


def enumeration_neighbors(queries: list[Fraction], m: int, family: str) -> list[Pair]:
    """Answer all queries in one pass over the whole sequence."""
    wanted = {(f.h, f.k) for f in queries}
    found: dict[tuple[int, int], Pair] = {}
    prev = None
    cur = None
    for nxt in walk(m, family):
        if cur in wanted:
            found[cur] = (prev, nxt)
        prev, cur = cur, nxt
    if cur in wanted:
        found[cur] = (prev, None)
    out = []
    for f in queries:
        p, s = found[(f.h, f.k)]
        out.append((Fraction._raw(*p) if p else None, Fraction._raw(*s) if s else None))
    return out


def sequence_length(m: int, family: str) -> int:
    """Exact term count: ``|F_m| = 1 + sum of phi(k)``, and ``2|F_m| - 1`` for the subsequence."""
    check_order(m)
    phi = np.arange(m + 1, dtype=np.int64)
    for p in range(2, m + 1):
        if phi[p] == p:
            phi[p::p] -= phi[p::p] // p
    fm = 1 + int(phi[1:].sum())
    return fm if family == "fm" else 2 * fm - 1


def terms_within(m: int, family: str, budget: float) -> int:
    """How many terms a full walk produces before ``budget`` seconds elapse."""
    deadline = time.perf_counter() + budget
    count = 0
    for _ in walk(m, family):
        count += 1
        if count % 4096 == 0 and time.perf_counter() > deadline:
            break
    return count


@dataclass
class BenchResult:
    m: int
    family: str
    queries: int
    formula_seconds: float
    enumeration_seconds: Optional[float]
    agreements: Optional[int]


def run_bench(m: int, family: str, count: int, seed: int) -> BenchResult:
    check_order(m)
    if family not in FAMILIES:
        raise FareyError(f"unknown family {family!r}")
    if count < 1:
        raise FareyError("need at least one query")
    queries = random_members(m, family, count, seed)
    t0 = time.perf_counter()
    fast = formula_neighbors(queries, m, family)
    formula_seconds = time.perf_counter() - t0
    if m > ENUMERATION_LIMIT:
        return BenchResult(m, family, count, formula_seconds, None, None)
    t0 = time.perf_counter()
    slow = enumeration_neighbors(queries, m, family)
    enumeration_seconds = time.perf_counter() - t0
    agreements = sum(a == b for a, b in zip(fast, slow))
    return BenchResult(m, family, count, formula_seconds, enumeration_seconds, agreements)
