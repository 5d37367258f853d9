"""Irreducible crystallographic root systems in exact arithmetic.

Roots are integer vectors in the basis of simple roots.  All metric data
comes from an explicit Gram matrix, normalized so that short roots have
squared length 1.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import prod
from typing import Dict, List, Sequence, Tuple

Root = Tuple[int, ...]


class RootSystemError(ValueError):
    """Invalid Cartan type or rank, or a root that does not belong."""


def canonical_type(cartan: str, rank: int) -> Tuple[str, int]:
    """Normalize a Cartan label, folding the low-rank coincidences.

    >>> canonical_type("c", 2)
    ('B', 2)
    """
    t = str(cartan).strip().upper()
    try:
        n = int(rank)
    except (TypeError, ValueError):
        raise RootSystemError(f"invalid type/rank pair ({cartan!r}, {rank!r})") from None
    ok = (
        (t == "A" and n >= 1)
        or (t in ("B", "C") and n >= 1)
        or (t == "D" and n >= 3)
        or (t == "E" and n in (6, 7, 8))
        or (t == "F" and n == 4)
        or (t == "G" and n == 2)
    )
    if not ok:
        raise RootSystemError(f"invalid type/rank pair ({cartan!r}, {rank!r})")
    if t in ("B", "C") and n == 1:
        return "A", 1
    if t == "C" and n == 2:
        return "B", 2
    if t == "D" and n == 3:
        return "A", 3
    return t, n


def _dynkin(t: str, n: int) -> Tuple[List[int], List[Tuple[int, int]]]:
    """Squared norms of the simple roots and the edges of the Dynkin diagram
    (Bourbaki numbering, 0-based)."""
    chain = [(i, i + 1) for i in range(n - 1)]
    if t == "A":
        return [1] * n, chain
    if t == "B":
        return [2] * (n - 1) + [1], chain
    if t == "C":
        return [1] * (n - 1) + [2], chain
    if t == "D":
        return [1] * n, [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    if t == "E":
        # 1-3-4-5-..., with 2 attached to 4
        edges = [(0, 2), (1, 3), (2, 3)] + [(i, i + 1) for i in range(3, n - 1)]
        return [1] * n, edges
    if t == "F":
        return [2, 2, 1, 1], chain
    if t == "G":
        return [1, 3], chain
    raise RootSystemError(f"unknown Cartan type {t!r}")


def _gram(t: str, n: int) -> List[List[Fraction]]:
    norms, edges = _dynkin(t, n)
    g = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        g[i][i] = Fraction(norms[i])
    for i, j in edges:
        # a bond between roots of norms a <= b has (x, y) = -b/2
        v = -Fraction(max(norms[i], norms[j]), 2)
        g[i][j] = g[j][i] = v
    return g


def _inverse(mat: Sequence[Sequence[Fraction]]) -> List[List[Fraction]]:
    """Gauss-Jordan inverse over the rationals."""
    n = len(mat)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(mat)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def _det(mat: Sequence[Sequence[Fraction]]) -> Fraction:
    n = len(mat)
    a = [[Fraction(x) for x in row] for row in mat]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, n):
            f = a[r][col] / a[col][col]
            a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return det


def root_order_key(root: Root):
    """Ascending height, then simple-root index order (alpha_1 first)."""
    return (sum(root), tuple(-c for c in root))


@dataclass(frozen=True, eq=False)
class RootSystem:
    cartan: str
    rank: int
    gram: Tuple[Tuple[Fraction, ...], ...]
    positive_roots: Tuple[Root, ...]
    coroot_coords: Dict[Root, Tuple[int, ...]] = field(repr=False)
    cartan_matrix: Tuple[Tuple[int, ...], ...] = field(repr=False)
    inv_cartan: Tuple[Tuple[Fraction, ...], ...] = field(repr=False)
    fundamental_weights: Tuple[Tuple[Fraction, ...], ...] = field(repr=False)
    highest_short_root: Root = field(repr=False)
    index: Dict[Root, int] = field(repr=False, compare=False)

    @property
    def type_rank(self) -> Tuple[str, int]:
        return self.cartan, self.rank

    @property
    def name(self) -> str:
        return f"{self.cartan}{self.rank}"

    @property
    def m(self) -> int:
        return len(self.positive_roots)

    @property
    def simple_roots(self) -> Tuple[Root, ...]:
        return self.positive_roots[: self.rank]

    def inner(self, x: Sequence, y: Sequence) -> Fraction:
        g = self.gram
        return sum((Fraction(x[i]) * g[i][j] * y[j]
                    for i in range(self.rank) for j in range(self.rank) if x[i] and y[j]),
                   Fraction(0))

    def norm2(self, root: Sequence) -> Fraction:
        return self.inner(root, root)

    def coroot(self, root: Sequence) -> Tuple[Fraction, ...]:
        """alpha^vee = 2 alpha / (alpha, alpha), in simple-root coordinates."""
        s = 2 / self.norm2(root)
        return tuple(Fraction(c) * s for c in root)

    def pairing(self, x: Sequence, root: Sequence) -> Fraction:
        """(x, root^vee)."""
        return 2 * self.inner(x, root) / self.norm2(root)

    def dual_height(self, root: Root) -> int:
        return sum(self.coroot_coords[self.check_root(root)])

    @property
    def max_dual_height(self) -> int:
        return max(sum(c) for c in self.coroot_coords.values())

    @property
    def rho(self) -> Tuple[Fraction, ...]:
        return tuple(sum(col) for col in zip(*self.fundamental_weights))

    def is_positive_root(self, v: Sequence[int]) -> bool:
        return tuple(v) in self.index

    def check_root(self, root: Sequence[int]) -> Root:
        r = tuple(root)
        if r not in self.index:
            raise RootSystemError(f"{list(r)} is not a positive root of {self.name}")
        return r

    def reflect(self, v: Sequence[int], root: Root) -> Root:
        """s_root(v) for an integral vector v."""
        p = self.pairing(v, root)
        assert p.denominator == 1
        return tuple(int(a - p * b) for a, b in zip(v, root))

    def root_label(self, root: Root) -> str:
        parts = []
        for i, c in enumerate(root):
            if c:
                parts.append(f"{'' if c == 1 else c}α{i + 1}")
        return "+".join(parts)


def dual_height_interval(rs: RootSystem, theta: Sequence[int]) -> range:
    """I_theta = [0, h(theta^vee) - 1] as a range."""
    return range(rs.dual_height(tuple(theta)))


def _positive_roots(gram, n: int) -> List[Root]:
    """Closure of the simple roots under adding simple roots, via root strings."""
    def cart(beta, i):
        # <beta, alpha_i^vee>
        s = sum(Fraction(beta[k]) * gram[k][i] for k in range(n))
        v = 2 * s / gram[i][i]
        assert v.denominator == 1
        return int(v)

    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                if beta == simple[i]:
                    continue
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        p += 1
                    else:
                        break
                q = p - cart(beta, i)
                if q > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in roots:
                        roots.add(up)
                        nxt.append(up)
        layer = nxt
    return sorted(roots, key=root_order_key)


def build_root_system(cartan: str, rank: int) -> RootSystem:
    return _build(*canonical_type(cartan, rank))


@lru_cache(maxsize=None)
def _build(t: str, n: int) -> RootSystem:
    gram = _gram(t, n)
    roots = _positive_roots(gram, n)
    norms = [gram[i][i] for i in range(n)]

    def nrm(r):
        return sum(Fraction(r[i]) * gram[i][j] * r[j] for i in range(n) for j in range(n))

    coroots = {}
    for r in roots:
        nr = nrm(r)
        cs = [Fraction(r[i]) * norms[i] / nr for i in range(n)]
        assert all(c.denominator == 1 and c >= 0 for c in cs), (t, n, r)
        coroots[r] = tuple(int(c) for c in cs)

    cm = tuple(tuple(int(2 * gram[i][j] / gram[i][i]) for j in range(n)) for i in range(n))
    inv = _inverse([[Fraction(x) for x in row] for row in cm])
    # column j of C^{-1} is omega_j in simple-root coordinates
    weights = tuple(tuple(inv[i][j] for i in range(n)) for j in range(n))
    min_norm = min(nrm(r) for r in roots)
    short = [r for r in roots if nrm(r) == min_norm]
    hsr = max(short, key=lambda r: (sum(r), r))

    return RootSystem(
        cartan=t,
        rank=n,
        gram=tuple(tuple(row) for row in gram),
        positive_roots=tuple(roots),
        coroot_coords=coroots,
        cartan_matrix=cm,
        inv_cartan=tuple(tuple(row) for row in inv),
        fundamental_weights=weights,
        highest_short_root=hsr,
        index={r: i for i, r in enumerate(roots)},
    )


# |W| and the index [P:Q] of the root lattice in the weight lattice
def weyl_group_order(cartan: str, rank: int) -> int:
    t, n = canonical_type(cartan, rank)
    if t == "A":
        return prod(range(1, n + 2))
    if t in ("B", "C"):
        return 2 ** n * prod(range(1, n + 1))
    if t == "D":
        return 2 ** (n - 1) * prod(range(1, n + 1))
    return {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600,
            ("F", 4): 1152, ("G", 2): 12}[(t, n)]


def lattice_index(cartan: str, rank: int) -> int:
    t, n = canonical_type(cartan, rank)
    if t == "A":
        return n + 1
    return {"B": 2, "C": 2, "D": 4, "F": 1, "G": 1}.get(t) or {6: 3, 7: 2, 8: 1}[n]


def leading_minors(rs: RootSystem) -> List[Fraction]:
    return [_det([row[:k] for row in rs.gram[:k]]) for k in range(1, rs.rank + 1)]


def scaled(rs: RootSystem, factor: int) -> RootSystem:
    """Same root system with every squared norm multiplied by ``factor``."""
    from dataclasses import replace
    g = tuple(tuple(x * factor for x in row) for row in rs.gram)
    return replace(rs, gram=g)
