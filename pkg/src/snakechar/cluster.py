"""Exact seed mutation, snake cluster variables, and the factoriality check for C_1 quivers."""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass

from .cartan import CartanData, Vertex, g_arrows_from, g_arrows_into, gminus_vertices, in_G0, y_poly_to_z
from .characters import denominator, truncated_q_character
from .laurent import LaurentPoly, Monomial, NotDivisible, divide_exact
from .snakes import SnakeSpec


class FrozenVertex(ValueError):
    pass


class QuiverError(AssertionError):
    pass


class NotC1Shaped(ValueError):
    """Exchange polynomial is not a binomial of coprime squarefree monomials."""


@dataclass(frozen=True)
class Quiver:
    vertices: tuple
    frozen: frozenset
    b: dict  # (u, w) -> b_uw, nonzero entries only, skew-symmetric

    def entry(self, u, w) -> int:
        return self.b.get((u, w), 0)

    def mutable(self) -> list:
        return [v for v in self.vertices if v not in self.frozen]

    def arrows(self) -> list[tuple]:
        """(source, target, multiplicity) with multiplicity > 0."""
        return sorted((u, w, e) for (u, w), e in self.b.items() if e > 0)

    def check(self) -> None:
        for (u, w), e in self.b.items():
            if u == w:
                raise QuiverError(f"loop at {u}")
            if self.b.get((w, u), 0) != -e:
                raise QuiverError(f"entries at {u},{w} are not skew-symmetric")

    def mutate(self, k) -> Quiver:
        if k in self.frozen:
            raise FrozenVertex(f"{k} is frozen")
        out = {}
        ins = [(u, e) for (u, w), e in self.b.items() if w == k and e > 0]
        outs = [(w, e) for (u, w), e in self.b.items() if u == k and e > 0]
        for (u, w), e in self.b.items():
            out[(u, w)] = -e if k in (u, w) else e
        for (u, a), (w, c) in itertools.product(ins, outs):
            if u in self.frozen and w in self.frozen:
                continue
            out[(u, w)] = out.get((u, w), 0) + a * c
            out[(w, u)] = out.get((w, u), 0) - a * c
        q = Quiver(self.vertices, self.frozen, {key: e for key, e in out.items() if e})
        q.check()
        return q

    def exchange_matrix(self, rows=None, cols=None) -> list[list[int]]:
        rows = rows or list(self.vertices)
        cols = cols or self.mutable()
        return [[self.entry(u, w) for w in cols] for u in rows]


@dataclass(frozen=True)
class Seed:
    quiver: Quiver
    vars: dict

    def exchange_binomial(self, k) -> LaurentPoly:
        # products are taken in the Laurent ring of the initial variables
        p_in = LaurentPoly.lift(1)
        p_out = LaurentPoly.lift(1)
        for (u, w), e in self.quiver.b.items():
            if w == k and e > 0:
                p_in = p_in * self.vars[u] ** e
            elif u == k and e > 0:
                p_out = p_out * self.vars[w] ** e
        return p_in + p_out

    def fraction(self, k) -> tuple[LaurentPoly, Monomial]:
        """(numerator polynomial, monomial denominator) of the variable at ``k``."""
        x = self.vars[k]
        den = x.denominator()
        return x * den, den

    def mutate(self, k) -> Seed:
        q = self.quiver.mutate(k)
        new = divide_exact(self.exchange_binomial(k), self.vars[k])
        vars_ = dict(self.vars)
        vars_[k] = new
        return Seed(q, vars_)

    def __eq__(self, other) -> bool:
        return isinstance(other, Seed) and self.quiver == other.quiver and self.vars == other.vars

    __hash__ = None


def mutate(seed: Seed, v) -> Seed:
    return seed.mutate(v)


def mutate_sequence(seed: Seed, seq) -> Seed:
    for v in seq:
        seed = seed.mutate(_label(v))
    return seed


def _label(v):
    return Vertex(*v) if isinstance(v, (tuple, list)) and len(v) == 2 and all(isinstance(a, int) for a in v) else v


# -- seeds from G^- ---------------------------------------------------------------

def initial_seed(cd: CartanData, r_min: int) -> Seed:
    if r_min >= 0:
        raise ValueError("r_min must be negative")
    verts = tuple(gminus_vertices(cd, r_min))
    if not verts:
        raise ValueError("empty truncation window")
    inside = set(verts)
    b: dict = {}
    frozen = set()
    for v in verts:
        for w in g_arrows_from(cd, v):
            if w in inside:
                b[(v, w)] = b.get((v, w), 0) + 1
                b[(w, v)] = b.get((w, v), 0) - 1
            elif w[1] <= 0:
                frozen.add(v)
        for w in g_arrows_into(cd, v):
            if w not in inside and w[1] <= 0:
                frozen.add(v)
    q = Quiver(verts, frozenset(frozen), {k: e for k, e in b.items() if e})
    q.check()
    vars_ = {v: LaurentPoly.var("z", v[0], v[1]) for v in verts}
    return Seed(q, vars_)


def default_r_min(cd: CartanData, spec: SnakeSpec) -> int:
    env = os.environ.get("SNAKE_DEPTH")
    if env:
        return -abs(int(env))
    low = min(r for _, r in spec.points)
    return low - 2 * max(cd.bij(i, i) for i in cd.nodes()) - 2


def run_sequence(cd: CartanData, sequence, r_min: int) -> LaurentPoly:
    """The variable created by the last mutation of ``sequence`` from the initial seed."""
    seq = [Vertex(*v) for v in sequence]
    for v in seq:
        if not in_G0(cd, *v) or v[1] > 0:
            raise ValueError(f"{tuple(v)} is not a vertex of G^-")
    seed = mutate_sequence(initial_seed(cd, r_min), seq)
    return seed.vars[seq[-1]]


def snake_variable(cd: CartanData, spec: SnakeSpec) -> LaurentPoly:
    return y_poly_to_z(cd, truncated_q_character(cd, spec))


def verify_snake_variable(cd: CartanData, spec, sequence, r_min: int | None = None) -> bool:
    """Mutate along ``sequence`` and compare the last new variable with the snake's character."""
    spec = spec if isinstance(spec, SnakeSpec) else SnakeSpec(tuple(spec))
    if r_min is None:
        r_min = default_r_min(cd, spec)
    try:
        x = run_sequence(cd, sequence, r_min)
    except NotDivisible:
        x = run_sequence(cd, sequence, 2 * r_min)
    if x != snake_variable(cd, spec):
        return False
    den = x.denominator()
    if den != denominator(cd, spec):
        return False
    numerator = x * den
    return all(not numerator.monomial_content().exponent(k) for k in den.keys())


# -- C_1 quivers and partner sets ---------------------------------------------------

def _xk(i):
    return ("x", i)


def _yk(i):
    return ("y", i)


def valid_bipartitions(cd: CartanData) -> list[frozenset]:
    """All I_0 with every Dynkin edge joining I_0 to its complement."""
    out = []
    nodes = list(cd.nodes())
    for bits in itertools.product((0, 1), repeat=len(nodes)):
        I0 = frozenset(i for i, bit in zip(nodes, bits) if bit)
        if all((i in I0) != (j in I0) for i, j in cd.edges()):
            out.append(I0)
    return out


def c1_quiver(cd: CartanData, I0) -> Quiver:
    """Sources in I_0, sinks in I_1; frozen ``i'`` points into ``i`` for i in I_0 and out of it otherwise."""
    if cd.family not in ("A", "D", "E"):
        raise ValueError("C_1 quivers are built for simply-laced types")
    I0 = frozenset(I0)
    if not I0 <= set(cd.nodes()):
        raise ValueError("I_0 contains a non-node")
    b: dict = {}

    def arrow(u, w):
        b[(u, w)] = b.get((u, w), 0) + 1
        b[(w, u)] = b.get((w, u), 0) - 1

    for i, j in cd.edges():
        if (i in I0) == (j in I0):
            raise ValueError(f"edge {i}-{j} does not cross the bipartition")
        src, dst = (i, j) if i in I0 else (j, i)
        arrow(_xk(src), _xk(dst))
    for i in cd.nodes():
        if i in I0:
            arrow(_yk(i), _xk(i))
        else:
            arrow(_xk(i), _yk(i))
    verts = tuple(_xk(i) for i in cd.nodes()) + tuple(_yk(i) for i in cd.nodes())
    q = Quiver(verts, frozenset(_yk(i) for i in cd.nodes()), b)
    q.check()
    return q


def c1_seed(q: Quiver) -> Seed:
    vars_ = {}
    for fam, i in q.vertices:
        vars_[(fam, i)] = LaurentPoly.var("x" if fam == "x" else "y_frozen", i, 0)
    return Seed(q, vars_)


def exchange_polynomials(q: Quiver) -> dict:
    seed = c1_seed(q)
    return {v: seed.exchange_binomial(v) for v in q.mutable()}


def primitive_part(f: LaurentPoly) -> LaurentPoly:
    return f * f.monomial_content().inverse()


def _check_binomial(f: LaurentPoly) -> None:
    terms = f.terms()
    if len(terms) != 2 or any(c != 1 for _, c in terms):
        raise NotC1Shaped(f"{f} is not a sum of two monomials")
    (m1, _), (m2, _) = terms
    for m in (m1, m2):
        if any(e != 1 for _, e in m.items()):
            raise NotC1Shaped(f"{m} is not squarefree")
    if set(m1.keys()) & set(m2.keys()):
        raise NotC1Shaped(f"monomials of {f} share a variable")


def partner_sets(q: Quiver) -> list[frozenset]:
    polys = exchange_polynomials(q)
    prim = {}
    for v, f in polys.items():
        _check_binomial(f)
        prim[v] = primitive_part(f)
    parent = {v: v for v in polys}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for u, w in itertools.combinations(polys, 2):
        if prim[u] == prim[w] or prim[u] == -prim[w]:
            parent[find(u)] = find(w)
    groups: dict = {}
    for v in polys:
        groups.setdefault(find(v), set()).add(v)
    return sorted((frozenset(g) for g in groups.values()), key=lambda g: sorted(g))


def is_factorial_c1(q: Quiver) -> bool:
    return all(len(g) == 1 for g in partner_sets(q))
