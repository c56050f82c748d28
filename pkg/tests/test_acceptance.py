"""Acceptance criteria 1-8.

Each test records one line in ``RESULTS``; the terminal summary (see
conftest.py) prints them, and running this file directly prints them too.
All comparisons are exact; the only tolerances are the wall-clock limits.
"""

import random
import subprocess
import sys
import time
from math import factorial

import pytest

import oracles as o
from ntcodes import Code
from ntcodes.certification import design_counts, design_lambda, is_s_regular, neighbour_transitive, required_lambda
from ntcodes.constructions import (
    binary_code_autgroup,
    design_autgroup,
    even_subcode_ph12,
    paley_hadamard_12,
    punctured_hadamard_12,
    repetition_code,
    repetition_transitive_group,
    weight_class_blocks,
)
from ntcodes.evidence import TABLE2, TABLE4, factored
from ntcodes.hamming import Vertex, distance_partition
from ntcodes.perm import entry_faithful, group_order, is_k_transitive, orbit, stabilizer
from ntcodes.spectra import DistanceDistribution, distance_distribution, lemma210_divides, macwilliams_transform

LIMITS = {1: 1.0, 2: 1.0, 3: 1.0, 4: 300.0, 5: 120.0, 6: 120.0, 7: 1.0, 8: 120.0}
TITLES = {
    1: "construction fidelity",
    2: "design suite",
    3: "transform suite",
    4: "group discovery",
    5: "certification",
    6: "regularity oracle equivalence",
    7: "table arithmetic",
    8: "determinism",
}
RESULTS: dict[int, str] = {}


def _run(n, body):
    t0 = time.perf_counter()
    try:
        body()
        ok, why = True, ""
    except AssertionError as exc:
        ok, why = False, str(exc).splitlines()[0] if str(exc) else "assertion failed"
    dt = time.perf_counter() - t0
    if ok and dt >= LIMITS[n]:
        ok, why = False, "time limit exceeded"
    RESULTS[n] = f"criterion {n} ({TITLES[n]}): {'PASS' if ok else 'FAIL'}  {dt:.3f} s / limit {LIMITS[n]:g} s" + (f"  [{why}]" if why else "")
    if not ok:
        pytest.fail(RESULTS[n])


def criterion1():
    h = paley_hadamard_12()
    assert h.gram() == [[12 if i == j else 0 for j in range(12)] for i in range(12)], "H H^T != 12 I"
    p = punctured_hadamard_12()
    assert len(p) == 24
    assert p.weight_census() == {0: 1, 5: 11, 6: 11, 11: 1}
    assert p.min_distance == 5
    e = even_subcode_ph12()
    assert len(e) == 12 and e.min_distance == 6


def criterion2():
    e, p = even_subcode_ph12(), punctured_hadamard_12()
    d = weight_class_blocks(e, 6)
    assert (d.v, d.k, d.b) == (11, 6, 11)
    assert design_lambda(d, 2).lam == 3, "weight-6 class of E is not 2-(11,6,3)"
    w5 = weight_class_blocks(p, 5)
    assert (w5.k, design_lambda(w5, 2).lam) == (5, 2), "weight-5 class of P is not 2-(11,5,2)"
    assert not design_lambda(d, 3).is_design
    lam = required_lambda(11, 6, 11, 3)
    assert str(lam) == "4/3"
    assert not design_counts(11, 6, lam, 3).feasible


def criterion3():
    dist = distance_distribution(punctured_hadamard_12())
    assert dist.to_strings() == ["1", "0", "0", "0", "0", "11", "11", "0", "0", "0", "0", "1"]
    assert macwilliams_transform(dist).nonnegative
    b0 = macwilliams_transform(DistanceDistribution.of(11, 2, [1, 0, 0, 0, 0, 11, 11, 0, 0, 0, 0, 0]))
    assert b0.aprime[2] == -55 and b0.aprime[2] < 0


def criterion4():
    e = even_subcode_ph12()
    aut = binary_code_autgroup(e)
    assert group_order(aut, "vertices") == 7920
    assert entry_faithful(aut)
    assert len(orbit(aut, e.words[0])) == 12
    x0 = stabilizer(aut, Vertex.zero(11, 2))
    assert group_order(x0, "entries") == 660
    assert is_k_transitive(x0, "entries", 2)
    assert not is_k_transitive(x0, "entries", 3)


def criterion5():
    e = even_subcode_ph12()
    aut = binary_code_autgroup(e)
    assert neighbour_transitive(e, aut, 2).verdict == "pass"
    assert neighbour_transitive(e, aut, 3).verdict == "fail"
    assert distance_partition(e).rho >= 3
    assert neighbour_transitive(e, aut, "rho").verdict == "fail"
    for m in range(5, 11):
        cert = neighbour_transitive(repetition_code(m, 2), repetition_transitive_group(m), "rho")
        assert cert.rho == m // 2, f"rho(Rep({m},2)) = {cert.rho}"
        assert cert.verdict == "pass", f"Rep({m},2) not completely transitive"


def _oracle_agrees(code):
    words = [w.symbols for w in code]
    rho = distance_partition(code).rho
    for s in range(rho + 1):
        ours = is_s_regular(code, s)
        ref = o.regularity(words, code.m, code.q, s)
        assert ours.regular == (ref is not None), f"regularity mismatch at s={s} for {code!r}"
        if ref is not None:
            assert {i: tuple(r) for i, r in ours.rows.items()} == ref
    return rho


def criterion6():
    codes = [repetition_code(m, 2) for m in range(1, 9)]
    groups = [repetition_transitive_group(m) if m >= 2 else None for m in range(1, 9)]
    codes.append(repetition_code(4, 3))
    groups.append(None)
    for c in (punctured_hadamard_12(), even_subcode_ph12()):
        codes.append(c)
        groups.append(binary_code_autgroup(c))
    rng = random.Random(8)
    for _ in range(20):
        c = Code.from_indices(sorted(rng.sample(range(256), rng.randint(2, 16))), 8, 2)
        codes.append(c)
        groups.append(binary_code_autgroup(c))
    assert len(codes) == 8 + 1 + 2 + 20
    for c, g in zip(codes, groups):
        rho = _oracle_agrees(c)
        if g is not None and rho >= 2 and neighbour_transitive(c, g, 2).passed:
            assert is_s_regular(c, 2).regular, f"2-neighbour transitive but not 2-regular: {c!r}"
    rep43 = is_s_regular(repetition_code(4, 3), 2)
    assert not rep43.regular, "Rep(4,3) must fail at s = 2"


def criterion7():
    checked = 0
    for rows in (TABLE2, TABLE4):
        for row in rows:
            if row.order is None:
                continue
            verdict = "pass" if lemma210_divides(row.m, row.q, factored(row.order)) else "fail"
            assert verdict == row.expected_verdict, f"{row.label} q={row.q}: computed {verdict}"
            checked += 1
    assert checked == sum(r.order is not None for r in TABLE2) + len(TABLE4) == 7 + 12
    for m in range(5, 65):
        assert 2 ** (m - 4) < factorial((m + 1) // 2), f"inequality fails at m={m}"


def criterion8():
    cmd = [sys.executable, "-m", "ntcodes", "evidence", "all"]
    a = subprocess.run(cmd, capture_output=True, check=False)
    b = subprocess.run(cmd, capture_output=True, check=False)
    assert a.returncode == 0, a.stderr.decode()[-500:]
    assert a.stdout and a.stdout == b.stdout, "evidence reports differ"


CRITERIA = {1: criterion1, 2: criterion2, 3: criterion3, 4: criterion4, 5: criterion5, 6: criterion6, 7: criterion7, 8: criterion8}


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n):
    _run(n, CRITERIA[n])


if __name__ == "__main__":
    for n in sorted(CRITERIA):
        try:
            _run(n, CRITERIA[n])
        except BaseException:
            pass
        print(RESULTS[n])
