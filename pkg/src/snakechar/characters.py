"""q-characters of snake modules, their truncations, F-polynomials, g-vectors and denominators."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .algebra import ZERO, dominance, divide_exact
from .cartan import CartanData, membership, v_poly_to_Y, y_mono_to_z, y_poly_to_z
from .laurent import ONE, LaurentPoly, Monomial
from .paths import enumerate_nonoverlapping, height_monomial, highest_path, in_P_prime
from .snakes import (
    SnakeParams,
    SnakeSpec,
    expand_params,
    gap_step,
    prime_decompose,
    require_Cminus,
    validate,
)


class CharacterError(AssertionError):
    """A property the path model guarantees did not hold."""


@dataclass(frozen=True)
class CharacterResult:
    m: Monomial
    chi: LaurentPoly
    chi_truncated: LaurentPoly
    F: LaurentPoly
    g: dict


def _spec(spec) -> SnakeSpec:
    return spec if isinstance(spec, SnakeSpec) else SnakeSpec(tuple(spec))


@lru_cache(maxsize=256)
def _q_character(cd: CartanData, spec: SnakeSpec) -> LaurentPoly:
    validate(cd, spec)
    acc: dict[Monomial, int] = {}
    for tup in enumerate_nonoverlapping(cd, spec.points):
        mono = ONE
        for p in tup:
            mono = mono * p.monomial
        acc[mono] = acc.get(mono, 0) + 1
    chi = LaurentPoly(acc)
    m = spec.monomial()
    if any(c != 1 for c in chi.coefficients()):
        raise CharacterError(f"character of {spec} is not thin")
    dom = [mono for mono in chi.monomials() if dominance(mono) == "dominant"]
    anti = [mono for mono in chi.monomials() if dominance(mono) == "anti_dominant"]
    top = ONE
    for v in spec.points:
        top = top * highest_path(cd, v).monomial
    if dom != [m] or top != m:
        raise CharacterError(f"character of {spec} is not special: dominant terms {dom}")
    if len(anti) != 1:
        raise CharacterError(f"character of {spec} is not anti-special: {len(anti)} anti-dominant terms")
    return chi


def q_character(cd: CartanData, spec) -> LaurentPoly:
    """Sum over non-overlapping path tuples of the product of path monomials."""
    return _q_character(cd, _spec(spec))


def _in_minus(cd: CartanData, mono: Monomial) -> bool:
    return all(membership(cd, "Gminus0", (i, r)) for (_, i, r), _ in mono.items())


def truncate(cd: CartanData, chi: LaurentPoly) -> LaurentPoly:
    """Drop every term that involves a Y outside G^-."""
    return chi.filter(lambda mono: _in_minus(cd, mono))


def truncated_q_character(cd: CartanData, spec) -> LaurentPoly:
    spec = _spec(spec)
    require_Cminus(cd, spec)
    return truncate(cd, q_character(cd, spec))


def normalized(cd: CartanData, spec) -> LaurentPoly:
    """``P_m``: the truncated character divided by its highest monomial."""
    spec = _spec(spec)
    m = spec.monomial()
    return truncated_q_character(cd, spec).map_monomials(lambda mono: mono / m)


def _tuple_height(cd: CartanData, tup, truncate_heights: bool):
    h = ONE
    for p in tup:
        f = height_monomial(cd, p, truncate=truncate_heights)
        if f is ZERO:
            return ZERO
        h = h * f
    return h


@lru_cache(maxsize=256)
def _f_single(cd: CartanData, spec: SnakeSpec) -> LaurentPoly:
    acc: dict[Monomial, int] = {}
    for tup in enumerate_nonoverlapping(cd, spec.points):
        h = _tuple_height(cd, tup, True)
        if h is ZERO:
            continue
        acc[h] = acc.get(h, 0) + 1
    return LaurentPoly(acc)


def f_polynomial(cd: CartanData, spec) -> LaurentPoly:
    """Sum of products of height monomials, with ``v = 0`` outside Gamma^-."""
    spec = _spec(spec)
    require_Cminus(cd, spec)
    F = _f_single(cd, spec)
    parts = prime_decompose(cd, spec)
    if len(parts) > 1:
        prod = LaurentPoly.lift(1)
        for part in parts:
            prod = prod * _f_single(cd, part)
        if prod != F:
            raise CharacterError(f"F of {spec} differs from the product over its prime factors")
    if F.constant_term() != 1:
        raise CharacterError(f"F of {spec} has constant term {F.constant_term()}")
    if len(parts) == 1 and any(c != 1 for c in F.coefficients()):
        raise CharacterError(f"F of prime snake {spec} has a coefficient other than 1")
    return F


def f_polynomial_restricted(cd: CartanData, spec) -> LaurentPoly:
    """Same polynomial summed only over tuples whose paths keep their corners in G^-."""
    spec = _spec(spec)
    require_Cminus(cd, spec)
    acc: dict[Monomial, int] = {}
    for tup in enumerate_nonoverlapping(cd, spec.points):
        if not all(in_P_prime(cd, p) for p in tup):
            continue
        h = _tuple_height(cd, tup, False)
        acc[h] = acc.get(h, 0) + 1
    return LaurentPoly(acc)


def geometric_formula_holds(cd: CartanData, spec) -> bool:
    """``m * F(v -> A^{-1})`` equals the truncated character."""
    spec = _spec(spec)
    lhs = v_poly_to_Y(cd, f_polynomial(cd, spec)) * spec.monomial()
    return lhs == truncated_q_character(cd, spec)


# -- g-vectors and denominators -------------------------------------------------

def _vec(mono: Monomial) -> dict[tuple[int, int], int]:
    return {(i, r): e for (_, i, r), e in mono.items()}


def g_vector(cd: CartanData, spec) -> dict[tuple[int, int], int]:
    """Exponents of the highest monomial rewritten in the z variables."""
    spec = _spec(spec)
    require_Cminus(cd, spec)
    return _vec(y_mono_to_z(cd, spec.monomial()))


def g_vector_from_params(cd: CartanData, params: SnakeParams) -> dict[tuple[int, int], int]:
    """The block formula: +1 at each block start, -1 one column step past each block end."""
    _, spec, _ = expand_params(cd, params)
    require_Cminus(cd, spec)
    g: dict[tuple[int, int], int] = {}
    start = params.r
    for idx, (i, k) in enumerate(params.blocks):
        if start <= 0:
            g[(i, start)] = g.get((i, start), 0) + 1
        stop = start + cd.bij(i, i) * k
        if stop <= 0:
            g[(i, stop)] = g.get((i, stop), 0) - 1
        if idx < len(params.gaps):
            start += gap_step(cd, i, k, params.blocks[idx + 1][0], params.gaps[idx])
    return {v: e for v, e in g.items() if e}


def denominator_from_terms(cd: CartanData, chi_truncated: LaurentPoly) -> Monomial:
    """Least common multiple of the denominators of the z-rewritten terms."""
    return y_poly_to_z(cd, chi_truncated).denominator()


def denominator_from_support(cd: CartanData, F: LaurentPoly) -> Monomial:
    """Product of ``z_{i, r + d_i}`` over the support of the F-polynomial."""
    acc = {}
    for (_, i, r) in F.variables():
        acc[("z", i, r + cd.d(i))] = 1
    return Monomial(acc)


def denominator(cd: CartanData, spec) -> Monomial:
    spec = _spec(spec)
    a = denominator_from_support(cd, f_polynomial(cd, spec))
    b = denominator_from_terms(cd, truncated_q_character(cd, spec))
    if a != b:
        raise CharacterError(f"denominator of {spec}: support gives {a}, terms give {b}")
    return a


def is_square_free(cd: CartanData, spec) -> bool:
    return all(e == 1 for _, e in denominator(cd, spec).items())


# -- realness --------------------------------------------------------------------

def _exponent_matrix(chi: LaurentPoly) -> tuple[np.ndarray, list]:
    keys = sorted(chi.variables())
    col = {k: n for n, k in enumerate(keys)}
    monos = chi.monomials()
    E = np.zeros((len(monos), len(keys)), dtype=np.int64)
    for row, mono in enumerate(monos):
        for key, e in mono.items():
            E[row, col[key]] = e
    return E, monos


def dominant_square_terms(chi: LaurentPoly) -> dict[Monomial, int]:
    """Dominant monomials of ``chi**2`` with their coefficients, without expanding the square."""
    E, monos = _exponent_matrix(chi)
    coeffs = [chi.coefficient(m) for m in monos]
    out: dict[Monomial, int] = {}
    for a in range(len(monos)):
        rows = np.nonzero(np.all(E[a] + E >= 0, axis=1))[0]
        for b in rows:
            mono = monos[a] * monos[int(b)]
            out[mono] = out.get(mono, 0) + coeffs[a] * coeffs[int(b)]
    return {m: c for m, c in out.items() if c}


def check_real(cd: CartanData, spec) -> bool:
    """True iff the square of the character has the single dominant monomial ``m^2``."""
    spec = _spec(spec)
    m = spec.monomial()
    dom = dominant_square_terms(q_character(cd, spec))
    return dom == {m * m: 1}


# -- characters of non-snake modules through exchange relations -----------------------

def char_by_exchange(pairs, addend, divisor) -> LaurentPoly:
    """``(sum of products of pairs + addend) / divisor``, exactly."""
    num = LaurentPoly.lift(addend)
    for a, b in pairs:
        num = num + LaurentPoly.lift(a) * LaurentPoly.lift(b)
    return divide_exact(num, divisor)


def character_result(cd: CartanData, spec) -> CharacterResult:
    spec = _spec(spec)
    return CharacterResult(
        m=spec.monomial(),
        chi=q_character(cd, spec),
        chi_truncated=truncated_q_character(cd, spec),
        F=f_polynomial(cd, spec),
        g=g_vector(cd, spec),
    )
