"""Lattice paths for the type A and type B path model.

Ordinates are stored doubled (``y2 = 2y``) so the type-B offset epsilon can be
fixed at 1/2 and all arithmetic stays integral.  The y-axis points down, so a
point is "higher" when its ``y2`` is smaller.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterator

from .algebra import ZERO, factor_into_A
from .cartan import CartanData, Vertex, membership
from .laurent import Monomial

EPS2 = 1  # 2 * epsilon


class NotInImage(ValueError):
    """Point is not in the image of iota."""


class NotInX(ValueError):
    """Index pair is not in the set X."""


@dataclass(frozen=True)
class Path:
    family: str
    rank: int
    origin: tuple[int, int]
    points: tuple[tuple[int, int], ...]  # (x, y2)
    _cd: CartanData = field(compare=False, hash=False, repr=False, default=None)

    @cached_property
    def columns(self) -> dict[int, tuple[int, int]]:
        """Column -> (min y2, max y2) over the points in that column."""
        out: dict[int, tuple[int, int]] = {}
        for x, y in self.points:
            lo, hi = out.get(x, (y, y))
            out[x] = (min(lo, y), max(hi, y))
        return out

    @cached_property
    def point_set(self) -> frozenset:
        return frozenset(self.points)

    @cached_property
    def corners(self) -> tuple[tuple[Vertex, ...], tuple[Vertex, ...]]:
        return _corners(self._cd, self)

    @cached_property
    def monomial(self) -> Monomial:
        up, down = self.corners
        acc: dict[tuple, int] = {}
        for i, k in up:
            acc[("Y", i, k)] = acc.get(("Y", i, k), 0) + 1
        for i, k in down:
            acc[("Y", i, k)] = acc.get(("Y", i, k), 0) - 1
        return Monomial(acc)

    def ys(self) -> tuple[float, ...]:
        return tuple(y / 2 for _, y in self.points)

    def __str__(self) -> str:
        pts = []
        for x, y in self.points:
            pts.append(f"({x},{y // 2})" if y % 2 == 0 else f"({x},{y / 2:g})")
        return " ".join(pts)


def check_X(cd: CartanData, v: tuple[int, int]) -> None:
    if not membership(cd, "X", v):
        raise NotInX(f"{tuple(v)} is not in X for {cd.name}")


# -- enumeration ---------------------------------------------------------------

def _type_a_paths(cd: CartanData, i: int, k: int) -> list[tuple]:
    n = cd.rank
    out = []
    # n+1 unit steps, exactly i of them going up
    for ups in itertools.combinations(range(n + 1), i):
        y = i + k
        pts = [(0, 2 * y)]
        for s in range(n + 1):
            y += -1 if s in ups else 1
            pts.append((s + 1, 2 * y))
        out.append(tuple(pts))
    return out


def _type_b_half(n: int, ell: int) -> list[tuple]:
    """Paths of P_{n,ell} in type B_n, as point tuples from the start column to 2n-1."""
    if ell % 4 == 2:
        cols = [2 * s for s in range(n)]
    else:
        cols = [4 * n - 2 - 2 * s for s in range(n)]
    y0 = 2 * (ell + 2 * n - 1)
    out = []
    for signs in itertools.product((-1, 1), repeat=n):
        y = y0
        pts = [(cols[0], y)]
        for s in range(1, n):
            y += 4 * signs[s - 1]
            pts.append((cols[s], y))
        y += (2 + EPS2) * signs[n - 1]
        pts.append((2 * n - 1, y))
        out.append(tuple(pts))
    return out


@lru_cache(maxsize=None)
def _raw_paths(cd: CartanData, i: int, k: int) -> tuple:
    if cd.family == "A":
        raw = _type_a_paths(cd, i, k)
    elif cd.family == "B":
        n = cd.rank
        if i == n:
            raw = _type_b_half(n, k)
        else:
            off = 2 * n - 2 * i - 1
            raw = []
            for a in _type_b_half(n, k - off):
                for abar in _type_b_half(n, k + off):
                    if a[-1][1] > abar[-1][1]:
                        raw.append(a + tuple(reversed(abar)))
    else:
        raise ValueError(f"path model is only available for types A and B, not {cd.family}")
    return tuple(sorted(raw, key=lambda pts: tuple(y for _, y in pts)))


@lru_cache(maxsize=None)
def enumerate_paths(cd: CartanData, v: tuple[int, int]) -> tuple[Path, ...]:
    """All paths of P_{i,k}, ordered lexicographically by their ordinate sequence."""
    check_X(cd, v)
    i, k = v
    return tuple(Path(cd.family, cd.rank, (i, k), pts, cd) for pts in _raw_paths(cd, i, k))


# -- iota and corners -------------------------------------------------------------

def iota(cd: CartanData, v: tuple[int, int]) -> tuple[int, int]:
    """Column of the (i, k) label in the type-B picture (identity on columns in type A)."""
    check_X(cd, v)
    i, k = v
    if cd.family == "A":
        return (i, k)
    n = cd.rank
    if i == n:
        return (2 * n - 1, k)
    c = (2 * n + k - 2 * i) % 4
    if c == 1:
        return (2 * i, k)
    if c == 3:
        return (4 * n - 2 - 2 * i, k)
    raise NotInImage(f"{v} has no column")


def iota_inv(cd: CartanData, point: tuple[int, int]) -> Vertex:
    x, k = point
    if cd.family == "A":
        if not 1 <= x <= cd.rank:
            raise NotInImage(f"column {x} carries no node")
        return Vertex(x, k)
    n = cd.rank
    if x in (0, 2 * n - 1, 4 * n - 2) or x % 2 or not 0 < x < 4 * n - 2:
        raise NotInImage(f"column {x} is not in the image of iota")
    for i in (x // 2, (4 * n - 2 - x) // 2):
        if 1 <= i < n and membership(cd, "X", (i, k)) and iota(cd, (i, k)) == (x, k):
            return Vertex(i, k)
    raise NotInImage(f"({x},{k}) is not in the image of iota")


def _corners(cd: CartanData, p: Path) -> tuple[tuple[Vertex, ...], tuple[Vertex, ...]]:
    pts = p.points
    up: list[Vertex] = []
    down: list[Vertex] = []
    if cd.family == "A":
        for r in range(1, len(pts) - 1):
            y_prev, y, y_next = pts[r - 1][1], pts[r][1], pts[r + 1][1]
            if y_prev == y_next == y + 2:
                up.append(Vertex(pts[r][0], y // 2))
            elif y_prev == y_next == y - 2:
                down.append(Vertex(pts[r][0], y // 2))
        return tuple(up), tuple(down)

    n = cd.rank
    special = (0, 2 * n - 1, 4 * n - 2)
    for r in range(1, len(pts) - 1):
        x, y = pts[r]
        if x in special:
            continue
        y_prev, y_next = pts[r - 1][1], pts[r + 1][1]
        if y_prev > y and y_next > y:
            up.append(iota_inv(cd, (x, y // 2)))
        elif y_prev < y and y_next < y:
            down.append(iota_inv(cd, (x, y // 2)))
    # the epsilon clauses at column 2n-1, read off the whole point set
    col = 2 * n - 1
    ys = {y for x, y in pts if x == col}
    rows = {(y + 1) // 2 for y in ys} | {(y - 1) // 2 for y in ys}
    for ell in sorted(rows):
        if not membership(cd, "X", (n, ell)):
            continue
        lo_in = (2 * ell - EPS2) in ys  # (2n-1, ell - eps)
        hi_in = (2 * ell + EPS2) in ys  # (2n-1, ell + eps)
        if lo_in and not hi_in:
            up.append(Vertex(n, ell))
        elif hi_in and not lo_in:
            down.append(Vertex(n, ell))
    return tuple(up), tuple(down)


def corners(cd: CartanData, p: Path) -> tuple[tuple[Vertex, ...], tuple[Vertex, ...]]:
    return p.corners


def m_of_path(cd: CartanData, p: Path) -> Monomial:
    return p.monomial


def highest_path(cd: CartanData, v: tuple[int, int]) -> Path:
    found = [p for p in enumerate_paths(cd, tuple(v)) if not p.corners[1]]
    if len(found) != 1:
        raise AssertionError(f"{len(found)} paths without lower corners in P_{v}")
    return found[0]


def lowest_path(cd: CartanData, v: tuple[int, int]) -> Path:
    found = [p for p in enumerate_paths(cd, tuple(v)) if not p.corners[0]]
    if len(found) != 1:
        raise AssertionError(f"{len(found)} paths without upper corners in P_{v}")
    return found[0]


def in_P_prime(cd: CartanData, p: Path) -> bool:
    """Corner restriction: every corner label lies in G^-."""
    up, down = p.corners
    return all(membership(cd, "Gminus0", c) for c in up + down)


def lowest_prime_path(cd: CartanData, v: tuple[int, int]) -> Path:
    """The path of P' whose monomial is lowest: the one every other P' path's height divides."""
    cands = [p for p in enumerate_paths(cd, tuple(v)) if in_P_prime(cd, p)]
    hs = [(p, height_monomial(cd, p, truncate=False)) for p in cands]
    best = max(hs, key=lambda ph: ph[1].total_degree())
    for _, h in hs:
        if not h.divides(best[1]):
            raise AssertionError(f"no lowest path in P'_{v}")
    return best[0]


# -- relations between paths -------------------------------------------------------

def strictly_above(p: Path, q: Path) -> bool:
    """Every point of ``p`` lies strictly above every point of ``q`` in each shared column."""
    qc = q.columns
    for x, (_, hi) in p.columns.items():
        if x in qc and not hi < qc[x][0]:
            return False
    return True


def enumerate_nonoverlapping(cd: CartanData, points) -> Iterator[tuple[Path, ...]]:
    """Depth-first walk over the product of path sets, keeping only non-overlapping tuples."""
    sets = [enumerate_paths(cd, tuple(v)) for v in points]
    T = len(sets)
    if T == 0:
        yield ()
        return
    chosen: list[Path] = []

    def rec(t: int, floor: dict[int, int]):
        for p in sets[t]:
            ok = True
            for x, (lo, _) in p.columns.items():
                f = floor.get(x)
                if f is not None and lo <= f:
                    ok = False
                    break
            if not ok:
                continue
            chosen.append(p)
            if t + 1 == T:
                yield tuple(chosen)
            else:
                nf = dict(floor)
                for x, (_, hi) in p.columns.items():
                    if x not in nf or hi > nf[x]:
                        nf[x] = hi
                yield from rec(t + 1, nf)
            chosen.pop()

    yield from rec(0, {})


def is_nonoverlapping(paths) -> bool:
    return all(strictly_above(paths[s], paths[t]) for s in range(len(paths)) for t in range(s + 1, len(paths)))


# -- heights and cells ---------------------------------------------------------------

@lru_cache(maxsize=None)
def _height(cd: CartanData, p: Path, truncate: bool):
    top = highest_path(cd, p.origin)
    return factor_into_A(cd, p.monomial / top.monomial, truncate_to_window=truncate)


def height_monomial(cd: CartanData, p: Path, truncate: bool = False):
    """v-monomial of ``m(p) / m(p^+)``; :data:`ZERO` when truncating and a factor leaves Gamma^-."""
    return _height(cd, p, truncate)


def cells_between_typeA(cd: CartanData, p: Path) -> dict[Vertex, int]:
    """Centres of the unit diamonds between ``p`` and the highest path of its set."""
    if cd.family != "A":
        raise ValueError("cell oracle is only implemented in type A")
    top = highest_path(cd, p.origin)
    out: dict[Vertex, int] = {}
    for (x, y_top), (_, y) in zip(top.points, p.points):
        for c2 in range(y_top + 2, y, 4):
            v = Vertex(x, c2 // 2)
            out[v] = out.get(v, 0) + 1
    return out


__all__ = [
    "Path", "NotInImage", "NotInX", "ZERO", "enumerate_paths", "iota", "iota_inv", "corners",
    "m_of_path", "highest_path", "lowest_path", "in_P_prime", "lowest_prime_path",
    "strictly_above", "enumerate_nonoverlapping", "is_nonoverlapping", "height_monomial",
    "cells_between_typeA", "check_X",
]
