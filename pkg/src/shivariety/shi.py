"""Shi's alcove inequalities, admissible/admitted vectors and lambda extraction."""
from __future__ import annotations

import itertools
from functools import lru_cache
from typing import List, Sequence, Tuple

from .rootsys import RootSystem, scaled
from .weyl import (IntegrityError, bfs, cayley_ball, compose, reduced_word, shi_vector,
                   translation)

Triple = Tuple[int, int, int]


class VectorError(ValueError):
    """A vector has the wrong length or lies outside the expected domain."""


@lru_cache(maxsize=None)
def root_triples(rs: RootSystem) -> Tuple[Triple, ...]:
    """Index triples (a, b, c) with beta_a + beta_b = beta_c, a < b."""
    roots = rs.positive_roots
    out = []
    for a in range(len(roots)):
        for b in range(a + 1, len(roots)):
            s = tuple(x + y for x, y in zip(roots[a], roots[b]))
            c = rs.index.get(s)
            if c is not None:
                out.append((a, b, c))
    return tuple(out)


@lru_cache(maxsize=None)
def _triple_norms(rs: RootSystem):
    norms = [rs.norm2(r) for r in rs.positive_roots]
    if all(x.denominator == 1 for x in norms):
        norms = [int(x) for x in norms]
    return tuple((a, b, c, norms[a], norms[b], norms[c]) for a, b, c in root_triples(rs))


def _check_length(rs: RootSystem, v: Sequence[int]) -> None:
    if len(v) != rs.m:
        raise VectorError(f"expected {rs.m} coordinates for {rs.name}, got {len(v)}")


def alcove_violations(rs: RootSystem, k: Sequence[int]) -> List[Triple]:
    _check_length(rs, k)
    bad = []
    for a, b, c, na, nb, nc in _triple_norms(rs):
        low = na * k[a] + nb * k[b]
        mid = nc * (k[c] + 1)
        if not (low + 1 <= mid <= low + na + nb + nc - 1):
            bad.append((a, b, c))
    return bad


def is_alcove_vector(rs: RootSystem, k: Sequence[int]) -> Tuple[bool, List[Tuple]]:
    """Decide whether the strips indexed by ``k`` cut out an alcove.

    Returns the verdict together with every violated triple
    ``(alpha, beta, alpha + beta)`` given as root coordinate tuples.
    """
    roots = rs.positive_roots
    bad = [(roots[a], roots[b], roots[c]) for a, b, c in alcove_violations(rs, k)]
    return not bad, bad


def is_admissible(rs: RootSystem, lam: Sequence[int]) -> bool:
    _check_length(rs, lam)
    return all(0 <= x < sum(rs.coroot_coords[r]) for x, r in zip(lam, rs.positive_roots))


def is_admitted(rs: RootSystem, lam: Sequence[int]) -> bool:
    return is_admissible(rs, lam) and not alcove_violations(rs, lam)


def lambda_extract(rs: RootSystem, k: Sequence[int]) -> Tuple[int, ...]:
    """Strip the linear part: lambda_theta = k_theta - sum_i c_i k_{alpha_i},
    where theta^vee = sum_i c_i alpha_i^vee."""
    _check_length(rs, k)
    n = rs.rank
    simple = k[:n]
    lam = []
    for r, kr in zip(rs.positive_roots, k):
        c = rs.coroot_coords[r]
        val = kr - sum(ci * si for ci, si in zip(c, simple))
        if not 0 <= val < sum(c):
            raise IntegrityError(
                f"lambda for root {rs.root_label(r)} is {val}, outside [0, {sum(c) - 1}]")
        lam.append(val)
    return tuple(lam)


def box_alcoves(rs: RootSystem, bound: int) -> set:
    """Shi vectors of all alcoves whose coordinates lie in [-bound, bound]."""
    def in_box(_w, k):
        return all(-bound <= x <= bound for x in k)

    return {shi_vector(rs, w) for w in bfs(rs, keep=in_box)}


def accepted_in_box(rs: RootSystem, bound: int) -> set:
    span = range(-bound, bound + 1)
    return {k for k in itertools.product(span, repeat=rs.m) if not alcove_violations(rs, k)}


def check_characterization(rs: RootSystem, bound: int = 3) -> dict:
    """The inequality checker accepts exactly the Shi vectors of real alcoves
    in the box, and doubling all squared norms changes nothing."""
    accepted = accepted_in_box(rs, bound)
    actual = box_alcoves(rs, bound)
    doubled = accepted_in_box(scaled(rs, 2), bound)
    return {"passed": accepted == actual and doubled == accepted,
            "accepted": len(accepted), "alcoves": len(actual),
            "scale_invariant": doubled == accepted,
            "witnesses": sorted(accepted ^ actual)[:20]}


def check_lambda(rs: RootSystem, radius: int = 8) -> dict:
    """Lambda extraction on the Cayley ball: admitted, inside I_theta, invariant
    under translations, and equal to the Shi vector on the fundamental polytope."""
    n = rs.rank
    shifts = [tuple(s * int(i == j) for j in range(n)) for i in range(n) for s in (1, -1)]
    shifts.append(tuple(1 for _ in range(n)))
    shifts.append(tuple(-2 if j % 2 else 1 for j in range(n)))
    fails = []
    checked = 0
    for w in cayley_ball(rs, radius):
        k = shi_vector(rs, w)
        try:
            lam = lambda_extract(rs, k)
        except IntegrityError as exc:
            fails.append(("interval", reduced_word(rs, w), str(exc)))
            continue
        if not is_admitted(rs, lam):
            fails.append(("admitted", reduced_word(rs, w), lam))
        for z in shifts:
            if lambda_extract(rs, shi_vector(rs, compose(translation(z), w))) != lam:
                fails.append(("translation", reduced_word(rs, w), z))
        if all(x == 0 for x in k[:n]) and lam != k:
            fails.append(("polytope", reduced_word(rs, w), k, lam))
        checked += 1
    return {"passed": not fails, "elements": checked, "witnesses": fails[:20]}
