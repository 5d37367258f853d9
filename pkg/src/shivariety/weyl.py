"""Affine Weyl group elements as exact integer affine maps.

An element acts on V in simple-root coordinates as ``x -> linear @ x + translation``.
Every element generated by the affine simple reflections has integer entries
in these coordinates, so maps are stored as nested int tuples and compared
exactly.
"""
from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from .rootsys import RootSystem

Matrix = Tuple[Tuple[int, ...], ...]


class IntegrityError(RuntimeError):
    """An internal consistency check failed; indicates a construction bug."""


class WordError(ValueError):
    pass


@dataclass(frozen=True)
class AffineElement:
    linear: Matrix
    translation: Tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.translation)

    def __call__(self, p):
        return apply(self, p)

    def __mul__(self, other: "AffineElement") -> "AffineElement":
        return compose(self, other)

    def is_identity(self) -> bool:
        return self == identity(self.rank)


def identity(n: int) -> AffineElement:
    return AffineElement(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)),
                         (0,) * n)


def translation(z: Sequence[int]) -> AffineElement:
    n = len(z)
    return AffineElement(identity(n).linear, tuple(int(c) for c in z))


def compose(u: AffineElement, w: AffineElement) -> AffineElement:
    """u o w."""
    lu, lw = u.linear, w.linear
    n = len(lu)
    lin = tuple(tuple(sum(lu[i][k] * lw[k][j] for k in range(n)) for j in range(n))
                for i in range(n))
    tr = tuple(sum(lu[i][k] * w.translation[k] for k in range(n)) + u.translation[i]
               for i in range(n))
    return AffineElement(lin, tr)


def apply(w: AffineElement, p: Sequence) -> tuple:
    n = w.rank
    return tuple(sum(w.linear[i][k] * p[k] for k in range(n)) + w.translation[i]
                 for i in range(n))


def inverse(w: AffineElement) -> AffineElement:
    # the finite part has finite order, so its inverse is a power of itself
    lin = w.linear
    n = w.rank
    e = identity(n)
    lin_e = AffineElement(lin, (0,) * n)
    acc = lin_e
    prev = e
    while acc != e:
        prev = acc
        acc = compose(acc, lin_e)
    inv_lin = prev  # lin^(order-1)
    t = apply(inv_lin, w.translation)
    return AffineElement(inv_lin.linear, tuple(-c for c in t))


def reflection(rs: RootSystem, root: Sequence[int], k: int = 0) -> AffineElement:
    """s_{root,k}(x) = x - ((x, root^vee) - k) root."""
    root = tuple(root)
    n = rs.rank
    pair = [rs.pairing(tuple(int(i == j) for i in range(n)), root) for j in range(n)]
    assert all(p.denominator == 1 for p in pair)
    lin = tuple(tuple(int(a == j) - root[a] * int(pair[j]) for j in range(n))
                for a in range(n))
    return AffineElement(lin, tuple(k * c for c in root))


def affine_generator(rs: RootSystem, i: int) -> AffineElement:
    """s_i for 1 <= i <= n, and s_0 = s_{-alpha_0, 1}."""
    if not 0 <= i <= rs.rank:
        raise WordError(f"generator index {i} out of range 0..{rs.rank}")
    if i == 0:
        return reflection(rs, rs.highest_short_root, 1)
    return reflection(rs, rs.simple_roots[i - 1])


def generators(rs: RootSystem) -> List[AffineElement]:
    return _generators(rs)


@lru_cache(maxsize=None)
def _generators(rs):
    return [affine_generator(rs, i) for i in range(rs.rank + 1)]


def parse_word(text: str) -> List[int]:
    text = text.strip()
    if not text:
        return []
    out = []
    for tok in re.split(r"[,\s]+", text):
        if not tok:
            continue
        if not tok.isdigit():
            raise WordError(f"malformed generator index {tok!r}")
        out.append(int(tok))
    return out


def from_word(rs: RootSystem, word: Iterable[int]) -> AffineElement:
    """Product s_{i1} s_{i2} ... of the generators, as written."""
    gens = generators(rs)
    w = identity(rs.rank)
    for i in word:
        if not 0 <= i <= rs.rank:
            raise WordError(f"generator index {i} out of range 0..{rs.rank}")
        w = compose(w, gens[i])
    return w


def decompose(w: AffineElement) -> Tuple[Tuple[int, ...], AffineElement]:
    """Split w = tau_x o wbar with x in the root lattice and wbar linear."""
    if any(not isinstance(c, int) or isinstance(c, bool) for c in w.translation):
        if any(Fraction(c).denominator != 1 for c in w.translation):
            raise IntegrityError(f"non-integral translation {w.translation}")
    x = tuple(int(c) for c in w.translation)
    return x, AffineElement(w.linear, (0,) * w.rank)


# -- Shi coefficients ---------------------------------------------------------

class _ShiData:
    """Integer data to evaluate floor((alpha^vee, w(c))) without Fractions."""

    def __init__(self, rs: RootSystem):
        n = rs.rank
        basis = [tuple(int(i == j) for i in range(n)) for j in range(n)]
        # pair[a][j] = <alpha_j, beta_a^vee>
        self.pair = []
        for r in rs.positive_roots:
            row = [rs.pairing(basis[j], r) for j in range(n)]
            assert all(p.denominator == 1 for p in row)
            self.pair.append(tuple(int(p) for p in row))
        denom = rs.max_dual_height + 1
        c = [x / denom for x in rs.rho]
        self.scale = lcm(*(x.denominator for x in c))
        self.c_num = tuple(int(x * self.scale) for x in c)


@lru_cache(maxsize=None)
def _shi_data(rs: RootSystem) -> _ShiData:
    return _ShiData(rs)


def interior_point(rs: RootSystem) -> Tuple[Fraction, ...]:
    d = _shi_data(rs)
    return tuple(Fraction(x, d.scale) for x in d.c_num)


def shi_vector(rs: RootSystem, w: AffineElement) -> Tuple[int, ...]:
    """k(w, alpha) = floor((alpha^vee, w(c))) for every positive root, canonical order."""
    d = _shi_data(rs)
    n = rs.rank
    lin, tr, s = w.linear, w.translation, d.scale
    img = [sum(lin[i][k] * d.c_num[k] for k in range(n)) + s * tr[i] for i in range(n)]
    out = []
    for row in d.pair:
        num = sum(row[j] * img[j] for j in range(n))
        if num % s == 0:
            raise IntegrityError(f"sample point lies on a wall (pairing {num}/{s})")
        out.append(num // s)
    return tuple(out)


def length_from_shi(k: Sequence[int]) -> int:
    return sum(abs(x) for x in k)


def length(rs: RootSystem, w: AffineElement) -> int:
    return length_from_shi(shi_vector(rs, w))


def bfs(rs: RootSystem, keep: Optional[Callable[[AffineElement, Tuple[int, ...]], bool]] = None,
        radius: Optional[int] = None) -> Dict[AffineElement, int]:
    """Breadth-first search from the identity by right multiplication by S_a.

    Returns element -> Cayley distance, in discovery order.  ``keep`` filters
    which elements are visited (given the element and its Shi vector).
    """
    gens = generators(rs)
    e = identity(rs.rank)
    dist = {e: 0}
    queue = deque([e])
    while queue:
        u = queue.popleft()
        du = dist[u]
        if radius is not None and du >= radius:
            continue
        for g in gens:
            v = compose(u, g)
            if v in dist:
                continue
            if keep is not None and not keep(v, shi_vector(rs, v)):
                continue
            dist[v] = du + 1
            queue.append(v)
    return dist


def cayley_ball(rs: RootSystem, radius: int) -> Dict[AffineElement, int]:
    return _cayley_ball(rs, radius)


@lru_cache(maxsize=32)
def _cayley_ball(rs, radius):
    return bfs(rs, radius=radius)


def length_bfs(rs: RootSystem, w: AffineElement, max_radius: int = 200) -> int:
    """Cayley-graph distance from the identity, found by plain BFS."""
    if w == identity(rs.rank):
        return 0
    gens = generators(rs)
    seen = {identity(rs.rank)}
    frontier = [identity(rs.rank)]
    for r in range(1, max_radius + 1):
        nxt = []
        for u in frontier:
            for g in gens:
                v = compose(u, g)
                if v == w:
                    return r
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    raise RuntimeError(f"element not reached within radius {max_radius}")


def reduced_word(rs: RootSystem, w: AffineElement) -> List[int]:
    """A reduced word for w, found by peeling right descents."""
    gens = generators(rs)
    word = []
    k = shi_vector(rs, w)
    ell = length_from_shi(k)
    while ell:
        for i, g in enumerate(gens):
            v = compose(w, g)
            kv = shi_vector(rs, v)
            lv = length_from_shi(kv)
            if lv < ell:
                word.append(i)
                w, ell = v, lv
                break
        else:
            raise IntegrityError("no descent found for a non-identity element")
    return word[::-1]


def check_length_formula(rs: RootSystem, radius: int = 8) -> dict:
    """Cayley distance equals sum |k(w, alpha)| on the whole ball."""
    ball = cayley_ball(rs, radius)
    bad = [(reduced_word(rs, w), d) for w, d in ball.items()
           if length_from_shi(shi_vector(rs, w)) != d]
    keys = {shi_vector(rs, w) for w in ball}
    return {"passed": not bad and len(keys) == len(ball), "ball_size": len(ball),
            "distinct_shi_vectors": len(keys), "witnesses": bad[:20]}


def check_tiling(rs: RootSystem, bound: int = 2) -> dict:
    """Walking adjacent alcoves inside the box [-bound, bound]^m meets each
    Shi vector exactly once."""
    def in_box(_w, k):
        return all(-bound <= x <= bound for x in k)

    found = bfs(rs, keep=in_box)
    keys = [shi_vector(rs, w) for w in found]
    return {"passed": len(set(keys)) == len(keys), "elements": len(keys),
            "distinct_shi_vectors": len(set(keys))}
