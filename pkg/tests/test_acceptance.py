"""Exit criteria. Run with ``pytest tests/test_acceptance.py`` for the PASS/FAIL summary."""

import random
import time
from fractions import Fraction as Q

import pytest
from conftest import F5_DISPLAY, FB10_DISPLAY

from fareysub import (
    Fraction,
    MapId,
    apply_map,
    consecutive_runs,
    farey_oracle,
    fbm_oracle,
    fbm_pred,
    fbm_succ,
    gf_lower,
    gf_upper,
    is_committee,
    load_arrangement,
    pred_fm,
    ratio_collection,
    special_neighbors_fbm,
    special_neighbors_fm,
    succ_fm,
)
from fareysub.bench import enumeration_neighbors, formula_neighbors, random_members, sequence_length, terms_within
from fareysub.boolean import SPECIAL_FORMS_FBM, sequence, special_form_fraction_fbm
from fareysub.classic import SPECIAL_FORMS_FM, special_form_fraction_fm
from fareysub.cli import main
from fareysub.committee import Hyperplane, arrangement_from_normals2d
from fareysub.gf import BivarPoly
from fareysub.numeric import FareyError, ceil_div

acceptance = pytest.mark.acceptance


@acceptance(1, "golden F_5 and F(B(10),5) displays")
def test_golden_sequences(capsys):
    start = time.perf_counter()
    assert main(["gen", "--m", "5", "--family", "fm"]) == 0
    assert capsys.readouterr().out == F5_DISPLAY + "\n"
    assert main(["gen", "--m", "5", "--family", "fbm"]) == 0
    assert capsys.readouterr().out == FB10_DISPLAY + "\n"
    assert time.perf_counter() - start < 1.0


@acceptance(2, "generating-function fixture and method agreement, m <= 120")
def test_generating_functions():
    start = time.perf_counter()
    assert gf_lower(5, "closed_form") == BivarPoly({(1, 3): 1, (1, 4): 1, (1, 5): 1, (2, 5): 1})
    for m in range(2, 121):
        assert gf_lower(m, "enumerate") == gf_lower(m, "closed_form"), m
        assert gf_upper(m, "enumerate") == gf_upper(m, "closed_form"), m
    assert time.perf_counter() - start < 30.0


def _check_fm_report(f, report, succ):
    h, k = f.h, f.k
    sign = -1 if succ else 1
    if report.witness_a is not None:
        a = report.witness_a
        assert Fraction(a, (k * a + sign) // h) == report.neighbor
    b = report.witness_b
    assert Fraction((h * b - sign) // k, b) == report.neighbor


def _check_fbm_report(f, report, succ):
    h, k = f.h, f.k
    sign = -1 if succ else 1
    if report.witness_a is not None:
        a = report.witness_a
        assert Fraction(a, (k * a + sign) // h) == report.neighbor
    if report.witness_b is not None:
        b, d = report.witness_b, k - h
        assert Fraction((h * b - sign) // d, (k * b - sign) // d) == report.neighbor


@acceptance(3, "neighbor formulas equal oracle adjacency, m <= 300")
def test_neighbor_formulas():
    start = time.perf_counter()
    for m in range(2, 301):
        for oracle, pred, succ, check in (
            (farey_oracle, pred_fm, succ_fm, _check_fm_report),
            (fbm_oracle, fbm_pred, fbm_succ, _check_fbm_report),
        ):
            seq = oracle(m)
            last = len(seq) - 1
            for i, f in enumerate(seq):
                if i:
                    report = pred(f, m)
                    assert report.neighbor == seq[i - 1], (m, f)
                    check(f, report, succ=False)
                if i < last:
                    report = succ(f, m)
                    assert report.neighbor == seq[i + 1], (m, f)
                    check(f, report, succ=True)
    assert time.perf_counter() - start < 300.0


@acceptance(4, "special-form closed forms agree with general formulas, m <= 300")
def test_special_forms():
    parities = {}
    for m in range(2, 301):
        for form in SPECIAL_FORMS_FM:
            for j in range(1, m + 1):
                if form.startswith("two"):
                    if j < 3 or j % 2 == 0:
                        continue
                    key = ("fm", form)
                    parities.setdefault(key, set()).add((ceil_div(2 * m, j) % 2, ceil_div(2 * (m + 1), j) % 2))
                f = special_form_fraction_fm(form, j)
                pred, succ = special_neighbors_fm(form, j, m)
                assert pred == (pred_fm(f, m).neighbor if f.h != 0 else None), (form, j, m)
                assert succ == (succ_fm(f, m).neighbor if f.h != f.k else None), (form, j, m)

        for form in SPECIAL_FORMS_FBM:
            for j in range(1, 2 * m + 2):
                try:
                    f = special_form_fraction_fbm(form, j)
                    pred, succ = special_neighbors_fbm(form, j, m)
                except FareyError:
                    continue
                if form in ("two", "left_mid2", "right_mid2", "two_complement"):
                    parities.setdefault(("fbm", form), set()).add(
                        (ceil_div(2 * m, j) % 2, ceil_div(2 * (m + 1), j) % 2)
                    )
                assert pred == (fbm_pred(f, m).neighbor if f.h != 0 else None), (form, j, m)
                assert succ == fbm_succ(f, m).neighbor, (form, j, m)

    # each parity form must have exercised both branches of both ceilings
    assert len(parities) == 6
    for key, seen in parities.items():
        assert {p for p, _ in seen} == {0, 1}, key
        assert {s for _, s in seen} == {0, 1}, key


@acceptance(5, "ten monotone bijections and paired inverses, m <= 200")
def test_bijections():
    pairs = {
        MapId.LEFT_TO_FM: MapId.FM_TO_LEFT,
        MapId.RIGHT_TO_FM: MapId.FM_TO_RIGHT,
        MapId.LEFT_TO_FM_REV: MapId.FM_TO_LEFT_REV,
        MapId.RIGHT_TO_FM_REV: MapId.FM_TO_RIGHT_REV,
    }
    pairs.update({v: k for k, v in pairs.items()})
    for m in range(2, 201):
        cache = {}
        for map_id in MapId:
            for seq_id in (map_id.source, map_id.target):
                if seq_id not in cache:
                    cache[seq_id] = sequence(m, seq_id)
            source, target = cache[map_id.source], cache[map_id.target]
            image = [apply_map(map_id, f, m) for f in source]
            assert image == (target[::-1] if map_id.reversing else target), (map_id, m)
            inverse = pairs.get(map_id, map_id)
            assert [apply_map(inverse, g, m) for g in image] == source, (map_id, m)


@acceptance(6, "midpoint triple and the four runs are consecutive, m <= 500")
def test_structure_facts():
    for m in range(2, 501):
        seq = fbm_oracle(m)
        mid = seq.index(Fraction(1, 2))
        assert seq[mid - 1 : mid + 2] == [Fraction(m - 1, 2 * m - 1), Fraction(1, 2), Fraction(m, 2 * m - 1)]
        first, second, third, fourth = consecutive_runs(m)
        assert seq[: len(first)] == first
        assert seq[mid + 1 - len(second) : mid + 1] == second
        assert seq[mid : mid + len(third)] == third
        assert seq[len(seq) - len(fourth) :] == fourth


def _arrangements(n_lines, count, rng):
    out = []
    while len(out) < count:
        normals = [(Q(rng.randint(-9, 9)), Q(rng.randint(-9, 9))) for _ in range(n_lines)]
        try:
            out.append(
                arrangement_from_normals2d([Hyperplane(i, rng.choice("AB"), p) for i, p in enumerate(normals)])
            )
        except FareyError:
            continue
    return out


@acceptance(7, "committee characterization, |T| in {4, 6, 8, 10}")
def test_committee_characterization():
    start = time.perf_counter()
    rng = random.Random(2024)
    cases = []
    for n in (2, 3, 4, 5):
        cases += _arrangements(n, 3, rng)
    cases.append(load_arrangement("signs 6 3\n+-+\n+--\n++-\n-+-\n-++\n--+\n"))
    for arr in cases:
        size = arr.n_regions
        reference = fbm_oracle(size // 2)
        upper_open = {(f.h, f.k) for f in reference if 2 * f.h > f.k}
        for hp in arr.hyperplanes:
            assert ratio_collection(arr, hp.id) == reference
        for mask in range(1, 1 << size):
            subset = [r for r in range(size) if mask >> r & 1]
            report = is_committee(arr, subset)
            expected = True
            for col in range(len(arr.hyperplanes)):
                q = Q(sum(arr.regions[r][col] > 0 for r in subset), len(subset))
                expected &= (q.numerator, q.denominator) in upper_open
            assert report.is_committee == expected
    assert time.perf_counter() - start < 60.0


@acceptance(8, "O(log m) queries at m = 10^6 versus infeasible enumeration")
def test_performance():
    m = 10**6
    for family in ("fm", "fbm"):
        queries = random_members(m, family, 1000, seed=8)
        start = time.perf_counter()
        answers = formula_neighbors(queries, m, family)
        elapsed = time.perf_counter() - start
        assert len(answers) == 1000
        assert elapsed < 1.0, (family, elapsed)

        produced = terms_within(m, family, budget=1.0)
        total = sequence_length(m, family)
        assert produced < total
        assert total / produced > 100, (family, produced, total)

    # overlap regime: same code path, small enough to enumerate
    for family in ("fm", "fbm"):
        queries = random_members(2000, family, 500, seed=9)
        assert formula_neighbors(queries, 2000, family) == enumeration_neighbors(queries, 2000, family)
