"""Irreducible components as admitted vectors: enumeration, the component poset
and the structural checks run on it."""
from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from math import prod
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .phirep import diamond_reflection
from .rootsys import RootSystem, lattice_index, weyl_group_order
from .shi import is_admitted, lambda_extract
from .weyl import AffineElement, IntegrityError, bfs, compose, generators, identity, shi_vector

Vector = Tuple[int, ...]

BUDGET_ENV = "SHIVARIETY_BUDGET"
DEFAULT_FILTER_BUDGET = 2_000_000
DEFAULT_INTERVAL_BUDGET = 200_000
# dense N x N order matrices; E6 (17280 elements) is out of reach
MAX_POSET_SIZE = 5_000


class CapacityError(RuntimeError):
    pass


class LatticeError(RuntimeError):
    """A meet or join is missing or not unique."""

    def __init__(self, msg, witness):
        super().__init__(msg)
        self.witness = witness


def filter_budget() -> int:
    val = os.environ.get(BUDGET_ENV)
    return int(val) if val else DEFAULT_FILTER_BUDGET


def element_key(v: Vector):
    return (sum(v), v)


def enumerate_admitted_filter(rs: RootSystem, budget: Optional[int] = None) -> List[Vector]:
    """Every admissible vector, kept when it passes the alcove inequalities."""
    budget = filter_budget() if budget is None else budget
    ranges = [range(sum(rs.coroot_coords[r])) for r in rs.positive_roots]
    size = prod(len(r) for r in ranges)
    if size > budget:
        raise CapacityError(
            f"{rs.name}: {size} admissible vectors exceed the filter budget {budget} "
            f"(set {BUDGET_ENV} to raise it, or use the bfs method)")
    return sorted((v for v in itertools.product(*ranges) if is_admitted(rs, v)), key=element_key)


def polytope_alcoves(rs: RootSystem) -> Dict[Vector, AffineElement]:
    """Alc(P_H): elements whose alcove lies in the fundamental polytope, keyed
    by Shi vector.  Found by walking adjacent alcoves from the identity."""
    n = rs.rank

    def inside(_w, k):
        return all(x == 0 for x in k[:n]) and min(k) >= 0

    found = bfs(rs, keep=inside)
    return {shi_vector(rs, w): w for w in found}


def enumerate_admitted_bfs(rs: RootSystem) -> List[Vector]:
    return sorted(polytope_alcoves(rs), key=element_key)


def count_oracle(rs: RootSystem) -> int:
    return weyl_group_order(rs.cartan, rs.rank) // lattice_index(rs.cartan, rs.rank)


def top_vector(rs: RootSystem) -> Vector:
    return tuple(sum(rs.coroot_coords[r]) - 1 for r in rs.positive_roots)


@dataclass
class ComponentPoset:
    rs: RootSystem
    elements: List[Vector]
    leq: np.ndarray = field(repr=False)
    covers: List[Tuple[int, int]]
    bottom: int
    top: int
    _tables: Optional[Tuple[np.ndarray, np.ndarray]] = field(default=None, repr=False)

    def __len__(self):
        return len(self.elements)

    def index(self, v: Sequence[int]) -> int:
        return self.elements.index(tuple(v))

    def cover_root(self, edge: Tuple[int, int]):
        """The root whose coordinate a cover edge increments (None if not unit)."""
        a, b = self.elements[edge[0]], self.elements[edge[1]]
        diff = [y - x for x, y in zip(a, b)]
        nz = [i for i, d in enumerate(diff) if d]
        if len(nz) != 1 or diff[nz[0]] != 1:
            return None
        return self.rs.positive_roots[nz[0]]


def build_poset(rs: RootSystem, elements: Sequence[Vector]) -> ComponentPoset:
    elements = sorted((tuple(e) for e in elements), key=element_key)
    if len(elements) > MAX_POSET_SIZE:
        raise CapacityError(f"{rs.name}: {len(elements)} elements exceed the poset limit "
                            f"{MAX_POSET_SIZE}")
    arr = np.array(elements, dtype=np.int64).reshape(len(elements), rs.m)
    leq = np.all(arr[:, None, :] <= arr[None, :, :], axis=2)
    lt = leq & ~np.eye(len(elements), dtype=bool)
    # strict relations factoring through an intermediate element
    lt_f = lt.astype(np.float32)
    through = (lt_f @ lt_f) > 0
    cover = lt & ~through
    covers = [(int(i), int(j)) for i, j in zip(*np.nonzero(cover))]
    covers.sort(key=lambda e: (element_key(elements[e[0]]), element_key(elements[e[1]])))

    bottoms = np.nonzero(leq.all(axis=1))[0]
    tops = np.nonzero(leq.all(axis=0))[0]
    if len(bottoms) != 1 or len(tops) != 1:
        raise IntegrityError(f"{rs.name}: poset lacks a unique bottom/top")
    top = int(tops[0])
    if elements[top] != top_vector(rs):
        raise IntegrityError(f"{rs.name}: top {elements[top]} != {top_vector(rs)}")
    return ComponentPoset(rs, elements, leq, covers, int(bottoms[0]), top)


def _bound_table(leq: np.ndarray) -> Tuple[np.ndarray, List[Tuple[int, int]]]:
    """Least upper bounds for every pair in the order ``leq`` (-1 when absent)."""
    n = leq.shape[0]
    upsize = leq.sum(axis=1)
    table = np.full((n, n), -1, dtype=np.int64)
    bad = []
    for a in range(n):
        ub = leq[a][None, :] & leq  # ub[b, x]: a <= x and b <= x
        score = np.where(ub, upsize[None, :], -1)
        cand = score.argmax(axis=1)
        has = ub.any(axis=1)
        ok = has & ~(ub & ~leq[cand]).any(axis=1)
        table[a, ok] = cand[ok]
        bad.extend((a, int(b)) for b in np.nonzero(~ok)[0] if a <= b)
    return table, bad


def lattice_tables(p: ComponentPoset) -> Tuple[np.ndarray, np.ndarray]:
    """(join, meet) index tables; raises LatticeError on the first failure."""
    if p._tables is None:
        join, bad_j = _bound_table(p.leq)
        meet, bad_m = _bound_table(p.leq.T)
        if bad_j or bad_m:
            a, b = (bad_j or bad_m)[0]
            kind = "join" if bad_j else "meet"
            raise LatticeError(f"no unique {kind} for {p.elements[a]}, {p.elements[b]}",
                               (p.elements[a], p.elements[b]))
        p._tables = (join, meet)
    return p._tables


def join(p: ComponentPoset, a: Sequence[int], b: Sequence[int]) -> Vector:
    return _scan_bound(p, a, b, up=True)


def meet(p: ComponentPoset, a: Sequence[int], b: Sequence[int]) -> Vector:
    return _scan_bound(p, a, b, up=False)


def _scan_bound(p, a, b, up):
    ia, ib = p.index(a), p.index(b)
    rel = p.leq if up else p.leq.T
    bounds = [x for x in range(len(p)) if rel[ia, x] and rel[ib, x]]
    least = [x for x in bounds if all(rel[x, y] for y in bounds)]
    if len(least) != 1:
        kind = "join" if up else "meet"
        raise LatticeError(f"no unique {kind} for {tuple(a)}, {tuple(b)}", (tuple(a), tuple(b)))
    return p.elements[least[0]]


def check_lattice(p: ComponentPoset) -> dict:
    join_t, bad_j = _bound_table(p.leq)
    meet_t, bad_m = _bound_table(p.leq.T)
    if not (bad_j or bad_m):
        p._tables = (join_t, meet_t)
    wit = ([("join", p.elements[a], p.elements[b]) for a, b in bad_j]
           + [("meet", p.elements[a], p.elements[b]) for a, b in bad_m])
    return {"passed": not wit, "pairs": len(p) * (len(p) + 1) // 2,
            "witnesses": sorted(wit)[:20], "violations": len(wit)}


def _sd_violations(op: np.ndarray, dual: np.ndarray) -> List[Tuple[int, int, int]]:
    """Triples with x.y == x.z but x.(y*z) != x.y, where . is ``op`` and * is ``dual``."""
    out = []
    for x in range(op.shape[0]):
        jx = op[x]
        same = jx[:, None] == jx[None, :]
        ok = jx[dual] == jx[:, None]
        ys, zs = np.nonzero(same & ~ok)
        out.extend((x, int(y), int(z)) for y, z in zip(ys, zs))
    return out


def check_semidistributive(p: ComponentPoset) -> dict:
    try:
        join_t, meet_t = lattice_tables(p)
    except LatticeError as exc:
        return {"passed": False, "triples": 0, "violations": 1,
                "witnesses": [("not a lattice",) + exc.witness]}
    sdj = _sd_violations(join_t, meet_t)
    sdm = _sd_violations(meet_t, join_t)
    e = p.elements
    wit = ([("SD-join",) + tuple(e[i] for i in t) for t in sdj]
           + [("SD-meet",) + tuple(e[i] for i in t) for t in sdm])
    return {"passed": not wit, "triples": len(p) ** 3, "violations": len(wit),
            "witnesses": sorted(wit)[:20]}


def check_cover_geometry(rs: RootSystem, p: ComponentPoset) -> dict:
    """Every cover lambda < gamma raises one coordinate, at some root alpha, by
    one, and s_alpha <> lambda = gamma."""
    fails = []
    for edge in p.covers:
        lam, gam = p.elements[edge[0]], p.elements[edge[1]]
        alpha = p.cover_root(edge)
        if alpha is None:
            fails.append(("not a unit step", lam, gam))
            continue
        got = diamond_reflection(rs, alpha, lam)
        if got != gam:
            fails.append(("action mismatch", lam, gam, alpha, got))
    # no unit step between elements may be missing from the covers
    cover_set = set(p.covers)
    pos = {v: i for i, v in enumerate(p.elements)}
    for i, v in enumerate(p.elements):
        for a in range(rs.m):
            up = v[:a] + (v[a] + 1,) + v[a + 1:]
            j = pos.get(up)
            if j is not None and (i, j) not in cover_set:
                fails.append(("missing cover", v, up))
    return {"passed": not fails, "edges": len(p.covers), "failures": len(fails),
            "witnesses": sorted(fails, key=repr)[:20]}


def check_weak_order_interval(rs: RootSystem, p: ComponentPoset,
                              budget: int = DEFAULT_INTERVAL_BUDGET) -> dict:
    """[e, w_top] in right weak order against Alc(P_H) and the componentwise order."""
    alcs = polytope_alcoves(rs)
    top = p.elements[p.top]
    w_top = alcs[top]
    radius = sum(top)
    gens = generators(rs)

    # Cayley ball of radius l(w_top) with lengths from BFS
    length = {identity(rs.rank): 0}
    frontier = [identity(rs.rank)]
    for r in range(1, radius + 1):
        nxt = []
        for u in frontier:
            for g in gens:
                v = compose(u, g)
                if v not in length:
                    length[v] = r
                    nxt.append(v)
                    if len(length) > budget:
                        raise CapacityError(
                            f"{rs.name}: Cayley ball of radius {radius} exceeds {budget} elements")
        frontier = nxt

    # downward closure of w_top along weak-order covers u < u*s
    below = {w_top}
    stack = [w_top]
    down_edges = set()
    while stack:
        v = stack.pop()
        for g in gens:
            u = compose(v, g)
            if length.get(u) == length[v] - 1:
                down_edges.add((u, v))
                if u not in below:
                    below.add(u)
                    stack.append(u)

    interval = {shi_vector(rs, w) for w in below}
    same_set = interval == set(p.elements)

    # reachability in the interval's cover graph vs componentwise order
    order_ok = same_set
    mismatches = []
    if same_set:
        up = {w: [] for w in below}
        for u, v in down_edges:
            up[u].append(v)
        reach = {}
        for w in sorted(below, key=lambda x: -length[x]):
            acc = {w}
            for v in up[w]:
                acc |= reach[v]
            reach[w] = acc
        key = {w: shi_vector(rs, w) for w in below}
        for u in below:
            ku = key[u]
            rv = {key[v] for v in reach[u]}
            for kv in interval:
                comp = all(a <= b for a, b in zip(ku, kv))
                if comp != (kv in rv):
                    mismatches.append((ku, kv))
        order_ok = not mismatches
    return {"passed": same_set and order_ok, "interval_size": len(below),
            "admitted": len(p), "top_length": radius, "ball_size": len(length),
            "sets_equal": same_set, "orders_agree": order_ok,
            "witnesses": sorted(mismatches)[:20]}


def check_top(rs: RootSystem, p: ComponentPoset) -> dict:
    top = p.elements[p.top]
    want = top_vector(rs)
    return {"passed": top == want and p.elements[p.bottom] == (0,) * rs.m,
            "top": list(top), "expected": list(want)}


def lambda_of(rs: RootSystem, w: AffineElement) -> Vector:
    return lambda_extract(rs, shi_vector(rs, w))
