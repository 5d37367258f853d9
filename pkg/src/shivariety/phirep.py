"""The Phi+-representation: W_a acting on Z^m by integer affine maps, and the
induced action on admitted vectors."""
from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence, Tuple, Union

from .rootsys import Root, RootSystem
from .shi import VectorError, is_admitted, lambda_extract
from .weyl import (AffineElement, IntegrityError, cayley_ball, compose, decompose, identity,
                   reduced_word, reflection, shi_vector, translation)


@dataclass(frozen=True)
class PhiRepMap:
    """x -> linear @ x + offset on Z^m, indexed by the canonical root order."""
    linear: Tuple[Tuple[int, ...], ...]
    offset: Tuple[int, ...]

    def __call__(self, x: Sequence[int]) -> Tuple[int, ...]:
        return tuple(sum(a * b for a, b in zip(row, x)) + o
                     for row, o in zip(self.linear, self.offset))

    def then(self, other: "PhiRepMap") -> "PhiRepMap":
        """self o other."""
        m = len(self.offset)
        cols = list(zip(*other.linear))
        lin = tuple(tuple(sum(a * b for a, b in zip(self.linear[i], cols[j])) for j in range(m))
                    for i in range(m))
        return PhiRepMap(lin, self(other.offset))


def identity_map(m: int) -> PhiRepMap:
    return PhiRepMap(tuple(tuple(int(i == j) for j in range(m)) for i in range(m)), (0,) * m)


def _signed_image(rs: RootSystem, alpha: Root, gamma: Root) -> Tuple[int, int]:
    """(index, sign) with s_alpha(gamma) = sign * root[index]."""
    img = rs.reflect(gamma, alpha)
    if img in rs.index:
        return rs.index[img], 1
    neg = tuple(-c for c in img)
    return rs.index[neg], -1


@lru_cache(maxsize=None)
def _linear_part(rs: RootSystem, alpha: Root) -> Tuple[Tuple[int, ...], ...]:
    m = rs.m
    mat = [[0] * m for _ in range(m)]
    for i, beta in enumerate(rs.positive_roots):
        j, sign = _signed_image(rs, alpha, beta)
        mat[j][i] = sign
    return tuple(tuple(row) for row in mat)


def linear_part(rs: RootSystem, alpha: Sequence[int]) -> Tuple[Tuple[int, ...], ...]:
    """L_alpha: entry (j, i) is +-1 when s_alpha(beta_i) = +-beta_j."""
    return _linear_part(rs, rs.check_root(alpha))


def affine_part(rs: RootSystem, p: int, alpha: Sequence[int]) -> Tuple[int, ...]:
    alpha = rs.check_root(alpha)
    out = []
    for gamma in rs.positive_roots:
        img = rs.reflect(gamma, alpha)
        # (alpha, s_alpha(gamma)^vee), with s_alpha(gamma) possibly negative
        pair = rs.pairing(alpha, img)
        if pair.denominator != 1:
            raise IntegrityError(f"non-integral pairing {pair} for {alpha}, {gamma}")
        v = -p * int(pair)
        if img not in rs.index:
            v -= 1
        out.append(v)
    return tuple(out)


def reflection_map(rs: RootSystem, alpha: Sequence[int], p: int = 0) -> PhiRepMap:
    """F(s_{alpha,p})."""
    alpha = tuple(alpha)
    if alpha not in rs.index:
        neg = tuple(-c for c in alpha)
        if neg not in rs.index:
            raise VectorError(f"{list(alpha)} is not a root of {rs.name}")
        # s_{-a,p} = s_{a,-p}
        alpha, p = neg, -p
    return _reflection_map(rs, alpha, p)


@lru_cache(maxsize=4096)
def _reflection_map(rs, alpha, p):
    return PhiRepMap(linear_part(rs, alpha), affine_part(rs, p, alpha))


@lru_cache(maxsize=None)
def generator_maps(rs: RootSystem) -> Tuple[PhiRepMap, ...]:
    maps = [reflection_map(rs, rs.highest_short_root, 1)]
    maps += [reflection_map(rs, r, 0) for r in rs.simple_roots]
    return tuple(maps)


def phi_rep(rs: RootSystem, w: Union[AffineElement, Iterable[int]]) -> PhiRepMap:
    """F(w), folded along a word in S_a.  Elements are first written as a
    reduced word."""
    word = reduced_word(rs, w) if isinstance(w, AffineElement) else list(w)
    maps = generator_maps(rs)
    f = identity_map(rs.m)
    for i in word:
        f = f.then(maps[i])
    return f


def phi_rep_reflections(rs: RootSystem, word: Iterable[Tuple[Sequence[int], int]]) -> PhiRepMap:
    """F of a product of affine reflections s_{alpha,p}, given as (alpha, p) pairs."""
    f = identity_map(rs.m)
    for alpha, p in word:
        f = f.then(reflection_map(rs, alpha, p))
    return f


def phi_rep_direct(rs: RootSystem, w: AffineElement) -> PhiRepMap:
    """F(w) read off from w = tau_x wbar without choosing a word.

    k(wu, gamma) = +-k(u, delta) (+ -1 if negative) + (x, gamma^vee) where
    wbar^{-1}(gamma) = +-delta.
    """
    x, wbar = decompose(w)
    m = rs.m
    # wbar^{-1}(gamma): solve by scanning images of positive roots under wbar
    image = {}
    for i, delta in enumerate(rs.positive_roots):
        img = wbar(delta)
        if img in rs.index:
            image[rs.index[img]] = (i, 1)
        else:
            image[rs.index[tuple(-c for c in img)]] = (i, -1)
    lin = [[0] * m for _ in range(m)]
    off = []
    for g, gamma in enumerate(rs.positive_roots):
        i, sign = image[g]
        lin[g][i] = sign
        pair = rs.pairing(x, gamma)
        assert pair.denominator == 1
        off.append(int(pair) - (1 if sign < 0 else 0))
    return PhiRepMap(tuple(tuple(r) for r in lin), tuple(off))


def diamond_action(rs: RootSystem, w: AffineElement, lam: Sequence[int]) -> Tuple[int, ...]:
    """w <> lambda: the admitted vector of the component F(wbar) sends lambda's
    component to."""
    if not is_admitted(rs, lam):
        raise VectorError(f"{list(lam)} is not an admitted vector of {rs.name}")
    _, wbar = decompose(w)
    return lambda_extract(rs, phi_rep(rs, wbar)(lam))


def diamond_reflection(rs: RootSystem, alpha: Sequence[int], lam: Sequence[int]) -> Tuple[int, ...]:
    """s_alpha <> lambda for a positive root alpha, straight from F(s_{alpha,0})."""
    if not is_admitted(rs, lam):
        raise VectorError(f"{list(lam)} is not an admitted vector of {rs.name}")
    return lambda_extract(rs, reflection_map(rs, alpha, 0)(lam))


# -- verification ------------------------------------------------------------

def check_commuting_diagram(rs: RootSystem, samples: int = 500, max_length: int = 10,
                            seed: int = 0) -> dict:
    """F(w)(iota(u)) == iota(wu) on random pairs from the Cayley ball."""
    ball = sorted(cayley_ball(rs, max_length), key=lambda w: (w.translation, w.linear))
    rng = random.Random(seed)
    fails = []
    for _ in range(samples):
        w, u = rng.choice(ball), rng.choice(ball)
        got = phi_rep(rs, w)(shi_vector(rs, u))
        want = shi_vector(rs, compose(w, u))
        if got != want:
            fails.append((reduced_word(rs, w), reduced_word(rs, u), got, want))
    return {"passed": not fails, "samples": samples, "equal": samples - len(fails),
            "ball_size": len(ball), "witnesses": fails[:20]}


def check_action(rs: RootSystem, admitted: Sequence[Sequence[int]], samples: int = 100,
                 seed: int = 0) -> dict:
    """Group-action laws, triviality of translations, and transitivity of the
    finite Weyl group orbit of the zero vector."""
    admitted = [tuple(v) for v in admitted]
    rng = random.Random(seed)
    n = rs.rank
    ball = sorted(cayley_ball(rs, 6), key=lambda w: (w.translation, w.linear))
    fails = []

    e = identity(n)
    for lam in admitted:
        if diamond_action(rs, e, lam) != lam:
            fails.append(("identity", lam))
    for _ in range(samples):
        u, v = rng.choice(ball), rng.choice(ball)
        lam = rng.choice(admitted)
        lhs = diamond_action(rs, compose(u, v), lam)
        rhs = diamond_action(rs, u, diamond_action(rs, v, lam))
        if lhs != rhs:
            fails.append(("composition", reduced_word(rs, u), reduced_word(rs, v), lam))
    for _ in range(samples):
        z = tuple(rng.randint(-3, 3) for _ in range(n))
        lam = rng.choice(admitted)
        if diamond_action(rs, translation(z), lam) != lam:
            fails.append(("translation", z, lam))
        w = rng.choice(ball)
        tw = compose(translation(z), w)
        if diamond_action(rs, tw, lam) != diamond_action(rs, w, lam):
            fails.append(("finite part", z, reduced_word(rs, w), lam))
        # the same translation invariance through the full map F(tau_z w)
        if lambda_extract(rs, phi_rep_direct(rs, tw)(lam)) != diamond_action(rs, w, lam):
            fails.append(("full map", z, reduced_word(rs, w), lam))

    zero = (0,) * rs.m
    orbit = {zero}
    frontier = [zero]
    simple = [reflection(rs, r) for r in rs.simple_roots]
    while frontier:
        nxt = []
        for lam in frontier:
            for s in simple:
                mu = diamond_action(rs, s, lam)
                if mu not in orbit:
                    orbit.add(mu)
                    nxt.append(mu)
        frontier = nxt
    missing = sorted(set(admitted) - orbit)
    extra = sorted(orbit - set(admitted))
    if missing or extra:
        fails.append(("transitivity", missing[:5], extra[:5]))
    return {"passed": not fails, "orbit_size": len(orbit), "admitted": len(admitted),
            "samples": samples, "witnesses": fails[:20]}
