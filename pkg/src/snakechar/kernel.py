"""Combinatorial data of the generic kernel: dimension vectors, support quiver, submodule counts."""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field

from .cartan import CartanData, Vertex, gamma_arrows_from, membership
from .characters import f_polynomial, g_vector
from .laurent import ONE, LaurentPoly, Monomial
from .paths import enumerate_nonoverlapping, height_monomial, in_P_prime
from .snakes import SnakeSpec, require_Cminus

log = logging.getLogger(__name__)

GIVEN = "given"
CANDIDATE = "candidate"


class NoMaximalTerm(ValueError):
    pass


class NotThin(ValueError):
    pass


class Inconsistent(ValueError):
    """The term supports of F are not the order ideals of any preorder."""


@dataclass(frozen=True)
class KernelData:
    support: frozenset
    dims: dict
    i_plus: tuple = ()
    i_minus: tuple = ()

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())


@dataclass
class SupportQuiver:
    vertices: list
    arrows: list = field(default_factory=list)  # (source, target, status)
    dims: dict = field(default_factory=dict)

    def arrow_pairs(self, which: str = "all") -> list[tuple]:
        if which == "all":
            return [(a, b) for a, b, _ in self.arrows]
        if which == GIVEN:
            return [(a, b) for a, b, s in self.arrows if s == GIVEN]
        raise ValueError(f"unknown arrow set {which!r}")


def _maximal_term(F: LaurentPoly) -> Monomial:
    monos = F.monomials()
    if not monos:
        raise NoMaximalTerm("F is zero")
    top = max(monos, key=lambda m: m.total_degree())
    for m in monos:
        if not m.divides(top):
            raise NoMaximalTerm(f"{m} does not divide {top}")
    return top


def kernel_data_from_f(F: LaurentPoly, g: dict | None = None, cd: CartanData | None = None) -> KernelData:
    top = _maximal_term(F)
    dims = {Vertex(i, r): e for (_, i, r), e in top.items()}
    plus, minus = [], []
    if g is not None:
        if cd is None:
            raise ValueError("Cartan data needed to shift the g-vector")
        for (i, r), e in sorted(g.items()):
            target = plus if e > 0 else minus
            target.extend([Vertex(i, r - cd.d(i))] * abs(e))
    return KernelData(frozenset(dims), dims, tuple(plus), tuple(minus))


def kernel_data(cd: CartanData, spec) -> KernelData:
    spec = spec if isinstance(spec, SnakeSpec) else SnakeSpec(tuple(spec))
    require_Cminus(cd, spec)
    return kernel_data_from_f(f_polynomial(cd, spec), g_vector(cd, spec), cd)


def lowest_truncated_tuple(cd: CartanData, spec):
    """The lowest non-overlapping tuple of corner-restricted paths, or None if there is none.

    "Lowest" means its height product is divisible by that of every other such tuple.
    """
    spec = spec if isinstance(spec, SnakeSpec) else SnakeSpec(tuple(spec))
    best, best_h, heights = None, None, []
    for tup in enumerate_nonoverlapping(cd, spec.points):
        if not all(in_P_prime(cd, p) for p in tup):
            continue
        h = ONE
        for p in tup:
            h = h * height_monomial(cd, p, truncate=False)
        heights.append(h)
        if best_h is None or h.total_degree() > best_h.total_degree():
            best, best_h = tup, h
    if best is None or not all(h.divides(best_h) for h in heights):
        log.warning("no lowest restricted tuple for %s; using the maximal F term instead", spec)
        return None
    return best


def dims_from_lowest_tuple(cd: CartanData, spec) -> dict | None:
    tup = lowest_truncated_tuple(cd, spec)
    if tup is None:
        return None
    h = ONE
    for p in tup:
        h = h * height_monomial(cd, p, truncate=False)
    return {Vertex(i, r): e for (_, i, r), e in h.items()}


# -- support quiver ------------------------------------------------------------

def gamma_minus_arrows(cd: CartanData, vertices) -> list[tuple[Vertex, Vertex]]:
    vs = {Vertex(*v) for v in vertices}
    out = []
    for v in sorted(vs, key=lambda v: (-v[1], v[0])):
        for w in gamma_arrows_from(cd, v):
            if w in vs:
                out.append((v, w))
    return out


def support_quiver(cd: CartanData, spec_or_support, given_arrows=None, dims=None) -> SupportQuiver:
    """Full subquiver of Gamma^- on the kernel support; figure arrows are marked as given.

    Pass a :class:`SnakeSpec` to compute the support, or any collection of vertices.
    """
    if isinstance(spec_or_support, SnakeSpec):
        kd = kernel_data(cd, spec_or_support)
        support, dims = kd.support, kd.dims
    else:
        support = frozenset(Vertex(*v) for v in spec_or_support)
        dims = dims or {v: 1 for v in support}
    given = set()
    for a, b in given_arrows or ():
        a, b = Vertex(*a), Vertex(*b)
        if not (membership(cd, "Gammaminus0", a) and membership(cd, "Gammaminus0", b)) \
                or b not in gamma_arrows_from(cd, a):
            raise ValueError(f"{a} -> {b} is not an arrow of Gamma^-")
        given.add((a, b))
    arrows = [(a, b, GIVEN if (a, b) in given else CANDIDATE) for a, b in gamma_minus_arrows(cd, support)]
    missing = given - {(a, b) for a, b, _ in arrows}
    if missing:
        raise ValueError(f"given arrows leave the support: {sorted(missing)}")
    verts = sorted(support, key=lambda v: (-v[1], v[0]))
    return SupportQuiver(verts, arrows, dict(dims))


def count_closed_subsets(q: SupportQuiver, arrow_set: str = GIVEN) -> tuple[int, Counter]:
    """Subsets closed under the chosen arrows (u in S, u -> w  implies  w in S)."""
    if any(d != 1 for d in q.dims.values()):
        raise NotThin("closed-subset counting needs every dimension equal to 1")
    verts = list(q.vertices)
    succ = {v: set() for v in verts}
    pred = {v: set() for v in verts}
    for a, b in q.arrow_pairs(arrow_set):
        succ[a].add(b)
        pred[b].add(a)

    def closure(v, rel):
        seen, stack = {v}, [v]
        while stack:
            for w in rel[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen

    down = {v: closure(v, succ) for v in verts}  # forced in when v is in
    up = {v: closure(v, pred) for v in verts}  # forced out when v is out
    found: Counter = Counter()

    def rec(idx: int, inside: frozenset, outside: frozenset):
        while idx < len(verts) and (verts[idx] in inside or verts[idx] in outside):
            idx += 1
        if idx == len(verts):
            found[inside] += 1
            return
        v = verts[idx]
        if not (down[v] & outside):
            rec(idx + 1, inside | down[v], outside)
        if not (up[v] & inside):
            rec(idx + 1, inside, outside | up[v])

    rec(0, frozenset(), frozenset())
    return sum(found.values()), found


def f_supports(F: LaurentPoly) -> Counter:
    """Multiset of term supports of a thin F."""
    out: Counter = Counter()
    for mono, c in F.terms():
        if any(e != 1 for _, e in mono.items()):
            raise NotThin(f"term {mono} has an exponent above 1")
        out[frozenset(Vertex(i, r) for (_, i, r), _ in mono.items())] += c
    return out


# -- submodule poset -----------------------------------------------------------

@dataclass(frozen=True)
class Preorder:
    elements: tuple
    above: dict  # u -> set of w with u <= w

    def leq(self, u, w) -> bool:
        return w in self.above[u]

    def hasse(self) -> list[tuple]:
        out = []
        for u in self.elements:
            for w in self.above[u]:
                if w == u or u in self.above[w]:
                    continue
                between = any(
                    x not in (u, w) and x in self.above[u] and w in self.above[x] and u not in self.above[x]
                    for x in self.elements
                )
                if not between:
                    out.append((u, w))
        return sorted(out)

    def ideals(self) -> set[frozenset]:
        q = SupportQuiver(list(self.elements), [(u, w, GIVEN) for u, w in self.hasse()],
                          {u: 1 for u in self.elements})
        # equivalent elements must be added together
        for u in self.elements:
            for w in self.above[u]:
                if u in self.above[w] and u != w:
                    q.arrows.append((u, w, GIVEN))
        _, found = count_closed_subsets(q, GIVEN)
        return set(found)


def infer_submodule_poset(F: LaurentPoly) -> Preorder:
    """Recover which vertices force which from the term supports of a thin F."""
    if any(c != 1 for c in F.coefficients()):
        raise Inconsistent("F has a coefficient other than 1, so it is not a thin kernel's F")
    try:
        supports = f_supports(F)
    except NotThin as exc:
        raise Inconsistent(str(exc)) from exc
    elements = tuple(sorted(set().union(*supports), key=lambda v: (-v[1], v[0])))
    above = {}
    for u in elements:
        containing = [s for s in supports if u in s]
        above[u] = frozenset.intersection(*containing)
    order = Preorder(elements, above)
    if order.ideals() != set(supports):
        raise Inconsistent("term supports are not the closed sets of the inferred order")
    return order
