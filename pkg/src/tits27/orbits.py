"""Orbit enumeration and exact group-order certification.

Orbits of 27-vectors (or of 1-spaces, in projective mode) are enumerated by
breadth-first closure with exact dedup: a point's key is its tuple of
canonical scalars, so numbering is deterministic for a fixed seed and
generator order.  Projective points are rescaled so the first nonzero
coordinate is 1.

The matrix action on a closed orbit converts to permutations of the point
indices, and a deterministic Schreier-Sims computation certifies the exact
order of the permutation group:

  * base points are chosen as the smallest point moved by the residue that
    creates each level;
  * each level stores the orbit of its base point under all strong
    generators assigned at its depth or deeper, with explicit transversals;
  * every Schreier generator of a level is sifted through the deeper levels,
    and nontrivial residues are appended where they escape.

Since residues always land strictly deeper than the level being processed, a
single top-down pass closes the chain, and the group order is the product of
the transversal sizes.  Permutations are composed as integer arrays; all
arithmetic is exact.

The degree-2304 orbit and order 17,971,200 with a transitive action and a
point stabilizer of order 7,800 are recorded here as the certificate that
the generated group matches the Tits group; the identification of those
properties with 2F4(2)' is classical and not re-proved.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import cyclo
from . import exactlinalg as la
from .exactlinalg import ExactMatrix, RING_CYC

VECTOR = "vector"
PROJECTIVE = "projective"


class CapExceededError(ValueError):
    pass


class OrbitNotClosedError(ValueError):
    pass


class NotAnEigenvectorError(ValueError):
    pass


@dataclass(frozen=True)
class CanonicalPoint:
    """27 exact scalars, canonicalized according to the mode."""

    entries: tuple
    mode: str

    @classmethod
    def make(cls, entries, mode):
        entries = tuple(entries)
        if mode == PROJECTIVE:
            first = next((e for e in entries if not e.is_zero()), None)
            if first is None:
                raise ValueError("projective point must be nonzero")
            if first != cyclo.ONE:
                inv = first.inverse()
                entries = tuple(inv * e for e in entries)
        elif mode != VECTOR:
            raise ValueError(f"unknown mode {mode!r}")
        return cls(entries, mode)


def seed_fixed_vector() -> CanonicalPoint:
    """(1,1,1;0^24), the vector fixed by the index-2304 point stabilizer."""
    return CanonicalPoint.make((cyclo.ONE,) * 3 + (cyclo.ZERO,) * 24, VECTOR)


def seed_proj_1755() -> CanonicalPoint:
    """The 1-space of (0,0,0; 0,0,0,0; -i,1,-1,i; 0^16), with 1755 images.

    This vector is fixed by d exactly and scaled by -i under (ac)^3; its
    stabilizer is the full centralizer of d, of order 10,240.  Its complex
    conjugate (i,1,-1,-i on the same block, see seed_proj_conjugate) spans a
    1-space with the same easy eigenvector properties but a much larger
    orbit: the two conjugate 1-spaces are NOT equivalent under the group,
    and only this one has the 1755-point orbit.
    """
    entries = ([cyclo.ZERO] * 7
               + [-cyclo.I, cyclo.ONE, cyclo.MINUS_ONE, cyclo.I]
               + [cyclo.ZERO] * 16)
    return CanonicalPoint.make(entries, PROJECTIVE)


def seed_proj_conjugate() -> CanonicalPoint:
    """The conjugate 1-space (0,0,0; 0,0,0,0; i,1,-1,-i; 0^16).

    Fixed by d and scaled by +i under (ac)^3, but its point stabilizer is
    only the order-40 group generated by f1, d and (ac)^3, so its orbit has
    449,280 points rather than 1755.
    """
    entries = ([cyclo.ZERO] * 7
               + [cyclo.I, cyclo.ONE, cyclo.MINUS_ONE, -cyclo.I]
               + [cyclo.ZERO] * 16)
    return CanonicalPoint.make(entries, PROJECTIVE)


def _matrix_key(m: ExactMatrix):
    return (m.ring, m.rows, m.cols, tuple(tuple(row) for row in m.data))


@dataclass
class Orbit:
    """An indexed orbit, closed under the generators that built it."""

    points: list
    index: dict
    base: CanonicalPoint
    mode: str
    _perm_cache: dict = field(default_factory=dict, repr=False)

    def __len__(self):
        return len(self.points)


@dataclass(frozen=True)
class PermSet:
    """Permutations of 0..degree-1, one per generator."""

    degree: int
    perms: tuple

    def __post_init__(self):
        full = set(range(self.degree))
        for p in self.perms:
            if len(p) != self.degree or set(p) != full:
                raise ValueError("not a permutation of 0..degree-1")


def enumerate_orbit(seed: CanonicalPoint, gens, cap: int = 10000) -> Orbit:
    """BFS closure of the seed under the generator matrices."""
    for g in gens:
        if g.ring != RING_CYC or g.rows != 27 or g.cols != 27:
            raise ValueError("generators must be 27x27 cyclotomic matrices")
    points = [seed]
    index = {seed.entries: 0}
    images = [[] for _ in gens]
    i = 0
    while i < len(points):
        p = points[i]
        for gi, g in enumerate(gens):
            img = CanonicalPoint.make(la.matvec(g, p.entries), seed.mode)
            k = index.get(img.entries)
            if k is None:
                if len(points) >= cap:
                    raise CapExceededError(f"orbit exceeds cap {cap}")
                k = len(points)
                points.append(img)
                index[img.entries] = k
            images[gi].append(k)
        i += 1
    cache = {_matrix_key(g): tuple(images[gi]) for gi, g in enumerate(gens)}
    return Orbit(points, index, seed, seed.mode, cache)


def perm_images(orbit: Orbit, gens) -> PermSet:
    """The permutations induced on the orbit by each generator."""
    perms = []
    for g in gens:
        key = _matrix_key(g)
        cached = orbit._perm_cache.get(key)
        if cached is None:
            img = []
            for p in orbit.points:
                q = CanonicalPoint.make(la.matvec(g, p.entries), orbit.mode)
                k = orbit.index.get(q.entries)
                if k is None:
                    raise OrbitNotClosedError("image of an orbit point is missing")
                img.append(k)
            cached = tuple(img)
            orbit._perm_cache[key] = cached
        perms.append(cached)
    return PermSet(len(orbit), tuple(perms))


def scalar_character(seed: CanonicalPoint, m: ExactMatrix):
    """The exact scalar c with m * seed = c * seed."""
    w = la.matvec(m, seed.entries)
    k = next((i for i, e in enumerate(seed.entries) if not e.is_zero()), None)
    if k is None:
        raise NotAnEigenvectorError("zero vector")
    c = w[k] / seed.entries[k]
    for we, se in zip(w, seed.entries):
        if we != c * se:
            raise NotAnEigenvectorError("matrix does not preserve the 1-space")
    return c


def transitivity_check(p: PermSet) -> bool:
    """Whether the generated group has a single orbit on 0..degree-1."""
    seen = bytearray(p.degree)
    seen[0] = 1
    frontier = [0]
    count = 1
    while frontier:
        nxt = []
        for x in frontier:
            for perm in p.perms:
                y = perm[x]
                if not seen[y]:
                    seen[y] = 1
                    count += 1
                    nxt.append(y)
        frontier = nxt
    return count == p.degree


class StabChain:
    """A base, strong generating set and transversals; order is certified."""

    def __init__(self, base, levels, degree):
        self.base = tuple(base)
        self.degree = degree
        self._levels = levels  # list of (beta, gens: [np arrays], transversal dict)
        self.transversal_sizes = tuple(len(t) for _, _, t in levels)
        self.strong_gens = tuple(tuple(int(x) for x in g)
                                 for _, gens, _ in levels for g in gens)

    def order(self) -> int:
        return math.prod(self.transversal_sizes) if self._levels else 1

    def contains(self, perm) -> bool:
        """Membership test by sifting through the chain."""
        h = np.asarray(perm, dtype=np.int32)
        id_ = np.arange(self.degree, dtype=np.int32)
        for beta, _, trans in self._levels:
            if np.array_equal(h, id_):
                return True
            u = trans.get(int(h[beta]))
            if u is None:
                return False
            uinv = np.empty_like(u)
            uinv[u] = id_
            h = uinv[h]
        return bool(np.array_equal(h, id_))


def stab_chain_order(pset: PermSet) -> int:
    """The exact order of the group generated by the permutations."""
    return build_stab_chain(pset).order()


def build_stab_chain(pset: PermSet) -> StabChain:
    """Deterministic Schreier-Sims on the given permutations."""
    degree = pset.degree
    id_ = np.arange(degree, dtype=np.int32)
    gens0 = []
    for p in pset.perms:
        a = np.array(p, dtype=np.int32)
        if not np.array_equal(a, id_):
            gens0.append(a)

    base = []
    S = []  # gens assigned at each level
    T = []  # transversal dict at each level: point -> array u with u[beta] = point

    def gens_at(i):
        out = []
        for j in range(i, len(S)):
            out.extend(S[j])
        return out

    def rebuild_transversal(i):
        beta = base[i]
        trans = {beta: id_}
        frontier = [beta]
        gens = gens_at(i)
        while frontier:
            nxt = []
            for d in frontier:
                u = trans[d]
                for s in gens:
                    e = int(s[d])
                    if e not in trans:
                        trans[e] = s[u]  # x -> s[u[x]] maps beta to e
                        nxt.append(e)
            frontier = nxt
        T[i] = trans

    def sift(g, start):
        """Reduce g through levels >= start; returns (residue or None, level)."""
        h = g
        for j in range(start, len(base)):
            if np.array_equal(h, id_):
                return None, j
            u = T[j].get(int(h[base[j]]))
            if u is None:
                return h, j
            uinv = np.empty_like(u)
            uinv[u] = id_
            h = uinv[h]
        if np.array_equal(h, id_):
            return None, len(base)
        return h, len(base)

    def add_generator(g, level):
        if level == len(base):
            moved = int(np.nonzero(g != id_)[0][0])
            base.append(moved)
            S.append([])
            T.append({})
        S[level].append(g)
        for i in range(level + 1):
            rebuild_transversal(i)

    for g in gens0:
        h, j = sift(g, 0)
        if h is not None:
            add_generator(h, j)

    i = 0
    while i < len(base):
        # Schreier generators of level i; residues land strictly deeper, so
        # the snapshots below are final for this level.
        orbit_pts = sorted(T[i])
        gens = gens_at(i)
        trans = T[i]
        for d in orbit_pts:
            u = trans[d]
            for s in gens:
                su = s[u]
                e = int(su[base[i]])
                v = trans[e]
                vinv = np.empty_like(v)
                vinv[v] = id_
                sg = vinv[su]
                if np.array_equal(sg, id_):
                    continue
                h, j = sift(sg, i + 1)
                if h is not None:
                    add_generator(h, j)
        i += 1

    levels = [(base[i], S[i], T[i]) for i in range(len(base))]
    return StabChain(base, levels, degree)
