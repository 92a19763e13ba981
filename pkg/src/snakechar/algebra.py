"""Dominance predicates and factorisation of Y-monomials into A-monomials.

The arithmetic itself lives in :mod:`snakechar.laurent` and is re-exported here.
"""

from __future__ import annotations

from functools import lru_cache

from .cartan import A_monomial, CartanData, membership
from .laurent import (  # noqa: F401  (re-exported)
    FAMILIES,
    ONE,
    LaurentPoly,
    Monomial,
    NotDivisible,
    divide_exact,
    parse_laurent,
    var_sort_key,
)

DOMINANT = "dominant"
ANTI_DOMINANT = "anti_dominant"
NEITHER = "neither"


class NotAProduct(ValueError):
    """The monomial is not a product of inverse A-monomials."""


class _Zero:
    """Result of a factorisation that needs a ``v`` outside Gamma^- (``v = 0`` there)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "ZERO"

    def __bool__(self) -> bool:
        return False


ZERO = _Zero()


def dominance(m: Monomial) -> str:
    """Classify a Y-monomial; the trivial monomial counts as dominant."""
    exps = []
    for (fam, i, r), e in m.items():
        if fam != "Y":
            raise ValueError(f"dominance is defined on Y-monomials, got {fam}")
        exps.append(e)
    if all(e > 0 for e in exps):
        return DOMINANT
    if all(e < 0 for e in exps):
        return ANTI_DOMINANT
    return NEITHER


def dominant_terms(p: LaurentPoly) -> list[tuple[Monomial, int]]:
    return [(m, c) for m, c in p.terms() if dominance(m) == DOMINANT]


def anti_dominant_terms(p: LaurentPoly) -> list[tuple[Monomial, int]]:
    return [(m, c) for m, c in p.terms() if m.is_one() or dominance(m) == ANTI_DOMINANT]


@lru_cache(maxsize=4096)
def _scan_order(cd: CartanData, hi: int, lo: int) -> list[tuple[int, int]]:
    # ordered by the row of the own-column top factor, Y_{j, l + d_j}
    verts = [
        (j, ell)
        for ell in range(hi, lo - 1, -1)
        for j in cd.nodes()
        if membership(cd, "Gamma0", (j, ell))
    ]
    verts.sort(key=lambda v: -(v[1] + cd.d(v[0])))
    return verts


def factor_into_A(cd: CartanData, q: Monomial, window=None, truncate_to_window: bool = False):
    """Write ``q = prod A_{j,l}^{-e_{j,l}}`` with ``e >= 0``; return the v-monomial ``prod v^e``.

    Greedy top-down scan: the highest Y-row still present in the residual
    pins the exponent of the A whose own-column top factor sits on that row.
    ``window`` optionally restricts the Gamma vertices that may be used (an
    iterable of vertices); otherwise every Gamma0 vertex in range may be.
    With ``truncate_to_window`` the result is :data:`ZERO` as soon as a
    needed factor lies outside Gamma^- (or outside ``window`` if given).
    """
    if q.is_one():
        return ONE
    rows = [r for (_, _, r), _ in q.items()]
    for (fam, _, _), _ in q.items():
        if fam != "Y":
            raise ValueError("factor_into_A expects a Y-monomial")
    allowed = None if window is None else {tuple(w) for w in window}
    hi = max(rows)
    lo = min(rows) - 2 * cd.t - 1
    residual = q.as_dict()
    e: dict[tuple, int] = {}
    for j, ell in _scan_order(cd, hi, lo):
        top = ("Y", j, ell + cd.d(j))
        x = -residual.get(top, 0)
        if x == 0:
            continue
        if x < 0:
            raise NotAProduct(f"negative exponent needed at ({j},{ell}) for {q}")
        inside = membership(cd, "Gammaminus0", (j, ell)) and (allowed is None or (j, ell) in allowed)
        if not inside:
            if truncate_to_window:
                return ZERO
            if allowed is not None:
                raise NotAProduct(f"factor ({j},{ell}) outside the window")
        e[("v", j, ell)] = x
        for key, a in A_monomial(cd, (j, ell)).items():
            val = residual.get(key, 0) + x * a
            if val:
                residual[key] = val
            else:
                residual.pop(key, None)
    if residual:
        raise NotAProduct(f"residual {Monomial(residual)} left after factoring {q}")
    return Monomial(e)


def y_to_v(cd: CartanData, p: LaurentPoly, m: Monomial) -> LaurentPoly:
    """Normalise a Y-polynomial by its highest monomial: ``p / m`` written in the v's."""
    out = {}
    for mono, c in p.as_dict().items():
        f = factor_into_A(cd, mono / m)
        out[f] = out.get(f, 0) + c
    return LaurentPoly(out)


@lru_cache(maxsize=None)
def greedy_self_check(cd: CartanData, depth: int = 12) -> bool:
    """Check the property the greedy scan relies on.

    For every Gamma vertex (j, l) in a window, no A-monomial scanned later
    touches ``Y_{j, l + d_j}``.
    """
    order = _scan_order(cd, 0, -depth)
    for idx, (j, ell) in enumerate(order):
        top = ("Y", j, ell + cd.d(j))
        for j2, ell2 in order[idx + 1:]:
            if A_monomial(cd, (j2, ell2)).exponent(top):
                return False
    return True
