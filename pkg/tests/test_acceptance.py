"""Exit criteria.  Each test records one PASS/FAIL line, printed at the end of
the session (see conftest.py)."""
import time
from functools import lru_cache

import pytest

from shivariety import components as comp
from shivariety.phirep import check_action, check_commuting_diagram
from shivariety.rootsys import build_root_system
from shivariety.shi import check_characterization, check_lambda
from shivariety.weyl import check_length_formula

RESULTS = {}

TYPE_A = [("A", n) for n in range(1, 6)]
DUAL = [("A", 1), ("A", 2), ("A", 3), ("A", 4), ("B", 2), ("B", 3), ("C", 3), ("G", 2)]
ORACLE = {("B", 2): 4, ("B", 3): 24, ("C", 3): 24, ("G", 2): 12, ("D", 4): 48, ("F", 4): 1152}
ENUMERATED = sorted(set(TYPE_A) | set(DUAL) | set(ORACLE))


def record(num, name, passed, detail=""):
    RESULTS[num] = (name, bool(passed), detail)


@lru_cache(maxsize=None)
def timed_bfs(t):
    rs = build_root_system(*t)
    start = time.perf_counter()
    elems = comp.enumerate_admitted_bfs(rs)
    return elems, time.perf_counter() - start


@lru_cache(maxsize=None)
def poset(t):
    rs = build_root_system(*t)
    return rs, comp.build_poset(rs, timed_bfs(t)[0])


def test_01_type_a_counts():
    start = time.perf_counter()
    counts = [len(comp.enumerate_admitted_bfs(build_root_system(*t))) for t in TYPE_A]
    elapsed = time.perf_counter() - start
    ok = counts == [1, 2, 6, 24, 120] and elapsed < 10
    record(1, "type-A counts n!", ok, f"{counts} in {elapsed:.2f}s")
    assert counts == [1, 2, 6, 24, 120]
    assert elapsed < 10


def test_02_dual_enumeration():
    start = time.perf_counter()
    bad = []
    for t in DUAL:
        rs = build_root_system(*t)
        if comp.enumerate_admitted_filter(rs) != comp.enumerate_admitted_bfs(rs):
            bad.append(t)
    elapsed = time.perf_counter() - start
    record(2, "filter == bfs", not bad and elapsed < 30, f"mismatches={bad} in {elapsed:.2f}s")
    assert not bad
    assert elapsed < 30


def test_03_oracle_counts():
    got = {t: len(timed_bfs(t)[0]) for t in ORACLE}
    oracle = {t: comp.count_oracle(build_root_system(*t)) for t in ORACLE}
    f4_time = timed_bfs(("F", 4))[1]
    ok = got == ORACLE == oracle and f4_time < 120
    record(3, "bfs counts == |W|/[P:Q]", ok,
           " ".join(f"{a}{b}={n}" for (a, b), n in sorted(got.items())) + f", F4 {f4_time:.1f}s")
    assert got == ORACLE == oracle
    assert f4_time < 120


def test_04_semidistributive_lattice():
    bad = []
    checked = []
    for t in ENUMERATED:
        rs, p = poset(t)
        if len(p) > 200:
            continue
        lat = comp.check_lattice(p)
        sd = comp.check_semidistributive(p)
        checked.append(f"{t[0]}{t[1]}")
        if not (lat["passed"] and sd["passed"]):
            bad.append((t, lat["witnesses"][:2], sd["witnesses"][:2]))
    record(4, "lattice + SD-join/SD-meet", not bad, f"{len(checked)} posets, failures={bad}")
    assert not bad


def test_05_cover_geometry():
    bad = {}
    edges = 0
    for t in ENUMERATED:
        rs, p = poset(t)
        rep = comp.check_cover_geometry(rs, p)
        edges += rep["edges"]
        if not rep["passed"]:
            bad[t] = rep["witnesses"][:3]
    record(5, "cover = unit step with s_alpha action", not bad, f"{edges} edges, failures={bad}")
    assert not bad


def test_06_top_element():
    bad = []
    for t in ENUMERATED:
        rs, p = poset(t)
        if p.elements[p.top] != comp.top_vector(rs) or any(p.elements[p.bottom]):
            bad.append(t)
    record(6, "top == (h(theta^vee) - 1)", not bad, f"{len(ENUMERATED)} types, failures={bad}")
    assert not bad


@pytest.mark.parametrize("t", [("A", 3), ("B", 3)])
def test_07_commuting_diagram(t):
    rep = check_commuting_diagram(build_root_system(*t), samples=500, max_length=10, seed=2024)
    prev = RESULTS.get(7, ("", True, ""))
    detail = (prev[2] + " " if prev[2] else "") + f"{t[0]}{t[1]}: {rep['equal']}/500"
    record(7, "F(w)(iota(u)) == iota(wu)", prev[1] and rep["passed"], detail)
    assert rep["passed"], rep["witnesses"][:3]
    assert rep["samples"] == 500


def test_08_diamond_action():
    bad = {}
    for t in [("A", 2), ("A", 3), ("B", 2), ("B", 3), ("G", 2)]:
        rs = build_root_system(*t)
        rep = check_action(rs, timed_bfs(t)[0], samples=100, seed=7)
        if not rep["passed"] or rep["orbit_size"] != len(timed_bfs(t)[0]):
            bad[t] = rep["witnesses"][:3]
    record(8, "action laws, translations, transitivity", not bad, f"failures={bad}")
    assert not bad


def test_09_length_formula():
    start = time.perf_counter()
    sizes = {}
    bad = []
    for t in [("A", 2), ("B", 2), ("G", 2)]:
        rep = check_length_formula(build_root_system(*t), radius=8)
        sizes[t] = rep["ball_size"]
        if not rep["passed"]:
            bad.append(t)
    elapsed = time.perf_counter() - start
    record(9, "l_BFS == sum |k|", not bad and elapsed < 60,
           f"ball sizes {list(sizes.values())} in {elapsed:.2f}s")
    assert not bad
    assert elapsed < 60


def test_10_shi_characterization():
    bad = {}
    sizes = []
    for t in [("A", 2), ("B", 2), ("G", 2)]:
        rep = check_characterization(build_root_system(*t), bound=3)
        sizes.append(rep["alcoves"])
        if not rep["passed"]:
            bad[t] = rep
    record(10, "alcove inequalities == real alcoves, norm-scale invariant", not bad,
           f"box alcoves {sizes}")
    assert not bad


def test_11_weak_order_interval():
    bad = {}
    sizes = []
    for t in [("A", 2), ("A", 3), ("B", 2), ("G", 2)]:
        rs, p = poset(t)
        rep = comp.check_weak_order_interval(rs, p)
        sizes.append(rep["interval_size"])
        if not rep["passed"]:
            bad[t] = rep
    record(11, "[e, w_top] == Alc(P_H), orders agree", not bad, f"interval sizes {sizes}")
    assert not bad


def test_12_lambda_extraction():
    bad = {}
    for t in [("A", 2), ("B", 2), ("G", 2)]:
        rep = check_lambda(build_root_system(*t), radius=8)
        if not rep["passed"]:
            bad[t] = rep["witnesses"][:3]
    record(12, "lambda admitted, translation invariant, fixed on P_H", not bad,
           f"failures={bad}")
    assert not bad
