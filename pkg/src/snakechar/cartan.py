"""Root-system constants, the quivers G / Gamma and the Y, z, v substitutions.

Vertices are plain ``(i, r)`` tuples with ``1 <= i <= n``.  ``G0`` and ``Gamma0``
are one fixed connected component each; the ``minus`` variants are the parts
with non-positive degree (``Gamma0^-`` is ``G0^-`` shifted down by ``d_i``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import NamedTuple

from .laurent import LaurentPoly, Monomial

VERTEX_SETS = ("G0", "Gminus0", "Gamma0", "Gammaminus0", "X")


class Vertex(NamedTuple):
    i: int
    r: int


class NotInDomain(ValueError):
    """A vertex outside the set an operation is defined on."""


@dataclass(frozen=True)
class CartanData:
    family: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    symmetrizer: tuple[int, ...]
    b: tuple[tuple[int, ...], ...] = field(repr=False)
    t: int
    dual_coxeter: int
    nu: tuple[int, ...] = field(repr=False)

    @property
    def n(self) -> int:
        return self.rank

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    def c(self, i: int, j: int) -> int:
        return self.cartan[i - 1][j - 1]

    def d(self, i: int) -> int:
        return self.symmetrizer[i - 1]

    def bij(self, i: int, j: int) -> int:
        return self.b[i - 1][j - 1]

    def nu_of(self, i: int) -> int:
        return self.nu[i - 1]

    def nodes(self) -> range:
        return range(1, self.rank + 1)

    def neighbors(self, i: int) -> list[int]:
        return [j for j in self.nodes() if j != i and self.c(i, j) != 0]

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in self.nodes() for j in self.nodes() if i < j and self.c(i, j) != 0]


def _dynkin_edges(family: str, n: int) -> list[tuple[int, int]]:
    if family in ("A", "B"):
        return [(i, i + 1) for i in range(1, n)]
    if family == "D":
        return [(i, i + 1) for i in range(1, n - 1)] + [(n - 2, n)]
    if family == "E":
        # Bourbaki labelling: 1-3-4-5-6(-7-8), with 2 attached to 4
        return [(1, 3), (3, 4), (4, 5), (2, 4)] + [(k, k + 1) for k in range(5, n)]
    raise ValueError(f"unsupported family {family!r}")


def _nu(family: str, n: int) -> tuple[int, ...]:
    if family == "A":
        return tuple(n + 1 - i for i in range(1, n + 1))
    if family == "D" and n % 2 == 1:
        return tuple(range(1, n - 1)) + (n, n - 1)
    if family == "E" and n == 6:
        return (6, 2, 5, 4, 3, 1)
    return tuple(range(1, n + 1))


_DUAL_COXETER = {
    "A": lambda n: n + 1,
    "B": lambda n: 2 * n - 1,
    "D": lambda n: 2 * n - 2,
    "E": lambda n: {6: 12, 7: 18, 8: 30}[n],
}


@lru_cache(maxsize=None)
def cartan_data(family: str, n: int) -> CartanData:
    """Cartan data for types A_n (n>=1), B_n (n>=2), D_n (n>=4), E_6..E_8."""
    family = family.upper()
    valid = {
        "A": n >= 1,
        "B": n >= 2,
        "D": n >= 4,
        "E": n in (6, 7, 8),
    }
    if family not in valid:
        raise ValueError(f"unsupported family {family!r}")
    if not valid[family]:
        raise ValueError(f"invalid rank {n} for type {family}")

    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in _dynkin_edges(family, n):
        c[i - 1][j - 1] = -1
        c[j - 1][i - 1] = -1
    d = [1] * n
    if family == "B":
        # alpha_n short: c_{n,n-1} = -2
        c[n - 1][n - 2] = -2
        d = [2] * (n - 1) + [1]
    b = [[d[i] * c[i][j] for j in range(n)] for i in range(n)]
    return CartanData(
        family=family,
        rank=n,
        cartan=tuple(map(tuple, c)),
        symmetrizer=tuple(d),
        b=tuple(map(tuple, b)),
        t=max(d),
        dual_coxeter=_DUAL_COXETER[family](n),
        nu=_nu(family, n),
    )


# -- vertex sets -------------------------------------------------------------

def in_G0(cd: CartanData, i: int, r: int) -> bool:
    if not 1 <= i <= cd.rank:
        return False
    if cd.family == "B":
        return r % 2 == 0 if i == cd.rank else r % 2 == 1
    return (i + r) % 2 == 0


def membership(cd: CartanData, which: str, v: tuple[int, int]) -> bool:
    i, r = v
    if which in ("G0", "X"):
        return in_G0(cd, i, r)
    if which == "Gminus0":
        return r <= 0 and in_G0(cd, i, r)
    if which == "Gamma0":
        return 1 <= i <= cd.rank and in_G0(cd, i, r + cd.d(i))
    if which == "Gammaminus0":
        return 1 <= i <= cd.rank and r + cd.d(i) <= 0 and in_G0(cd, i, r + cd.d(i))
    raise ValueError(f"unknown vertex set {which!r}")


def _require(cd: CartanData, which: str, v: tuple[int, int]) -> None:
    if not membership(cd, which, v):
        raise NotInDomain(f"{tuple(v)} is not in {which} for {cd.name}")


def gamma_arrows_from(cd: CartanData, v: tuple[int, int]) -> list[Vertex]:
    """Targets of the Gamma arrows out of ``v``: ``(j, r + b_ij)`` for ``b_ij != 0``."""
    _require(cd, "Gamma0", v)
    i, r = v
    out = []
    for j in cd.nodes():
        if cd.bij(i, j) != 0:
            w = Vertex(j, r + cd.bij(i, j))
            if membership(cd, "Gamma0", w):
                out.append(w)
    return out


def gamma_arrows_into(cd: CartanData, v: tuple[int, int]) -> list[Vertex]:
    _require(cd, "Gamma0", v)
    i, r = v
    out = []
    for j in cd.nodes():
        if cd.bij(j, i) != 0:
            w = Vertex(j, r - cd.bij(j, i))
            if membership(cd, "Gamma0", w):
                out.append(w)
    return out


def g_to_gamma(cd: CartanData, v: tuple[int, int]) -> Vertex:
    return Vertex(v[0], v[1] - cd.d(v[0]))


def gamma_to_g(cd: CartanData, v: tuple[int, int]) -> Vertex:
    return Vertex(v[0], v[1] + cd.d(v[0]))


def g_arrows_from(cd: CartanData, v: tuple[int, int]) -> list[Vertex]:
    """Arrows of G, obtained from Gamma by the relabelling ``(i, r) -> (i, r + d_i)``."""
    _require(cd, "G0", v)
    return [gamma_to_g(cd, w) for w in gamma_arrows_from(cd, g_to_gamma(cd, v))]


def g_arrows_into(cd: CartanData, v: tuple[int, int]) -> list[Vertex]:
    _require(cd, "G0", v)
    return [gamma_to_g(cd, w) for w in gamma_arrows_into(cd, g_to_gamma(cd, v))]


def gminus_vertices(cd: CartanData, r_min: int) -> list[Vertex]:
    """Vertices of G^- with degree >= r_min, top-down then by node."""
    return [
        Vertex(i, r)
        for r in range(0, r_min - 1, -1)
        for i in cd.nodes()
        if in_G0(cd, i, r)
    ]


def gammaminus_vertices(cd: CartanData, r_min: int) -> list[Vertex]:
    return [
        Vertex(i, r)
        for r in range(0, r_min - 1, -1)
        for i in cd.nodes()
        if membership(cd, "Gammaminus0", (i, r))
    ]


# -- substitutions -------------------------------------------------------------

def k_index(cd: CartanData, v: tuple[int, int]) -> int:
    """Position of ``v`` in its column of G^- counted from the top."""
    _require(cd, "Gminus0", v)
    i, r = v
    bii = cd.bij(i, i)
    k = 1
    while not (0 < k * bii - abs(r) <= bii):
        k += 1
    return k


def z_in_Y(cd: CartanData, v: tuple[int, int]) -> Monomial:
    """``z_{i,r}`` as the product ``Y_{i,r} Y_{i,r+b_ii} ... `` up to the top of the column."""
    i, r = v
    k = k_index(cd, v)
    bii = cd.bij(i, i)
    return Monomial({("Y", i, r + j * bii): 1 for j in range(k)})


def y_mono_to_z(cd: CartanData, m: Monomial) -> Monomial:
    """Rewrite a Y-monomial in z via ``Y_{i,r} = z_{i,r} / z_{i,r+b_ii}``.

    ``z_{i,s}`` is 1 when ``(i, s)`` is not in G^-.
    """
    acc: dict[tuple, int] = {}
    for (fam, i, r), e in m.items():
        if fam != "Y":
            raise ValueError(f"non-Y variable {fam}_{{{i},{r}}}")
        _require(cd, "Gminus0", (i, r))
        acc[("z", i, r)] = acc.get(("z", i, r), 0) + e
        up = r + cd.bij(i, i)
        if membership(cd, "Gminus0", (i, up)):
            acc[("z", i, up)] = acc.get(("z", i, up), 0) - e
    return Monomial(acc)


def y_poly_to_z(cd: CartanData, p: LaurentPoly) -> LaurentPoly:
    return p.map_monomials(lambda m: y_mono_to_z(cd, m))


def z_mono_to_Y(cd: CartanData, m: Monomial) -> Monomial:
    out = Monomial()
    for (fam, i, r), e in m.items():
        if fam != "z":
            raise ValueError(f"non-z variable {fam}_{{{i},{r}}}")
        out = out * z_in_Y(cd, (i, r)) ** e
    return out


def z_poly_to_Y(cd: CartanData, p: LaurentPoly) -> LaurentPoly:
    return p.map_monomials(lambda m: z_mono_to_Y(cd, m))


def A_monomial(cd: CartanData, v: tuple[int, int]) -> Monomial:
    """``A_{i,r}`` as a Y-monomial (its inverse is ``v_{i,r}``)."""
    _require(cd, "Gamma0", v)
    i, r = v
    di = cd.d(i)
    acc: dict[tuple, int] = {("Y", i, r - di): 1, ("Y", i, r + di): 1}
    for j in cd.nodes():
        cji = cd.c(j, i) if j != i else 0
        if cji == -1:
            shifts = (0,)
        elif cji == -2:
            shifts = (-1, 1)
        elif cji == -3:
            shifts = (-2, 0, 2)
        else:
            continue
        for s in shifts:
            acc[("Y", j, r + s)] = acc.get(("Y", j, r + s), 0) - 1
    return Monomial(acc)


def v_to_A_inverse(cd: CartanData, m: Monomial) -> Monomial:
    """Evaluate a v-monomial at ``v_{i,r} = A_{i,r}^{-1}``."""
    out = Monomial()
    for (fam, i, r), e in m.items():
        if fam != "v":
            raise ValueError(f"non-v variable {fam}_{{{i},{r}}}")
        out = out * A_monomial(cd, (i, r)) ** (-e)
    return out


def v_poly_to_Y(cd: CartanData, p: LaurentPoly) -> LaurentPoly:
    return p.map_monomials(lambda m: v_to_A_inverse(cd, m))


def yhat(cd: CartanData, v: tuple[int, int]) -> Monomial:
    """``yhat_{i,r} = A_{i,r-d_i}^{-1}`` for ``(i, r)`` in G^-."""
    _require(cd, "Gminus0", v)
    i, r = v
    return A_monomial(cd, (i, r - cd.d(i))).inverse()


def kr_lowest_monomial(cd: CartanData, i: int, k: int, r: int) -> Monomial:
    """Lowest monomial of the KR module with highest monomial ``prod_s Y_{i, r - d_i(2s-1)}``."""
    if k < 1:
        raise ValueError("k must be >= 1")
    th = cd.t * cd.dual_coxeter
    if r > cd.d(i) * (2 * k - 1) - th:
        raise ValueError("degree too high: the lowest monomial leaves the minus side")
    j = cd.nu_of(i)
    return Monomial({("Y", j, r - cd.d(i) * (2 * s - 1) + th): -1 for s in range(1, k + 1)})
