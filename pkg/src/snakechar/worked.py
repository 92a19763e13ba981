"""Registry of worked examples: snakes, mutation sequences, figure arrows, printed polynomials."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

from .cartan import A_monomial, Vertex, CartanData, cartan_data, y_mono_to_z, y_poly_to_z
from .characters import char_by_exchange, truncated_q_character
from .laurent import LaurentPoly, Monomial, parse_laurent
from .snakes import SnakeParams, SnakeSpec


@dataclass(frozen=True)
class Worked:
    key: str
    family: str
    rank: int
    points: tuple
    sequence: tuple = ()
    params: SnakeParams | None = None
    arrows: tuple = ()  # figure arrows of the kernel, Gamma labels
    printed_F: str | None = None
    n_terms: int | None = None
    dim: int | None = None
    denominator: tuple = ()
    extra: dict = field(default_factory=dict)

    @property
    def cd(self) -> CartanData:
        return cartan_data(self.family, self.rank)

    @property
    def spec(self) -> SnakeSpec:
        return SnakeSpec(self.points)


def _v(*pairs):
    return tuple(tuple(p) for p in pairs)


EXAMPLES: dict[str, Worked] = {
    "3.5": Worked(
        "3.5", "A", 3, _v((1, -15), (3, -11), (3, -9), (2, -6)),
        sequence=_v((3, -3), (2, -2), (1, -3), (2, -4), (1, -5), (2, -6), (3, -7), (1, -7), (2, -8),
                    (3, -9), (3, -11), (2, -12), (1, -13)),
        params=SnakeParams(-15, ((1, 1), (3, 2), (2, 1)), (0, 0)),
        arrows=(
            ((1, -6), (1, -4)), ((2, -3), (1, -4)), ((1, -4), (2, -5)), ((1, -8), (1, -6)),
            ((1, -6), (2, -7)), ((1, -8), (2, -9)), ((2, -13), (1, -14)), ((2, -3), (3, -4)),
            ((2, -7), (2, -5)), ((3, -4), (2, -5)), ((2, -9), (2, -7)), ((2, -7), (3, -8)),
            ((2, -9), (3, -10)), ((3, -12), (2, -13)), ((3, -10), (3, -8)), ((3, -12), (3, -10)),
        ),
        printed_F="F_3_5", n_terms=160, dim=13,
        denominator=_v((2, -2), (1, -3), (3, -3), (2, -4), (1, -5), (2, -6), (3, -7), (1, -7), (2, -8),
                       (3, -9), (3, -11), (2, -12), (1, -13)),
        extra={"g": {(1, -15): 1, (3, -11): 1, (2, -6): 1, (1, -13): -1, (3, -7): -1, (2, -4): -1},
               "i_plus": _v((1, -16), (3, -12), (2, -7)), "i_minus": _v((1, -14), (3, -8), (2, -5))},
    ),
    "3.6": Worked(
        "3.6", "A", 3, _v((2, -10), (2, -6)),
        sequence=_v((3, -3), (2, -2), (1, -3), (2, -4), (3, -7), (2, -6), (1, -7), (2, -8)),
        params=SnakeParams(-10, ((2, 1), (2, 1)), (1,)),
        arrows=(
            ((2, -3), (1, -4)), ((1, -4), (2, -5)), ((1, -8), (2, -9)), ((2, -3), (3, -4)),
            ((3, -8), (2, -9)), ((3, -4), (2, -5)), ((2, -7), (2, -5)), ((2, -7), (1, -8)),
            ((2, -7), (3, -8)),
        ),
        printed_F="F_3_6", n_terms=35, dim=8,
        denominator=_v((2, -2), (1, -3), (3, -3), (2, -4), (2, -6), (1, -7), (3, -7), (2, -8)),
        extra={"g": {(2, -10): 1, (2, -6): 1, (2, -8): -1, (2, -4): -1},
               "i_plus": _v((2, -11), (2, -7)), "i_minus": _v((2, -9), (2, -5))},
    ),
    "3.7": Worked(
        "3.7", "B", 2, _v((2, -12), (2, -6)),
        sequence=_v((2, 0), (1, -1), (2, -4), (2, -6), (1, -7), (2, -10)),
        params=SnakeParams(-12, ((2, 1), (2, 1)), (1,)),
        arrows=(
            ((2, -7), (2, -5)), ((2, -7), (1, -9)), ((1, -9), (2, -11)), ((2, -1), (1, -3)),
            ((1, -3), (2, -5)),
        ),
        printed_F="F_3_7", n_terms=15, dim=6,
        denominator=_v((2, 0), (1, -1), (2, -4), (2, -6), (1, -7), (2, -10)),
        extra={"g": {(2, -12): 1, (2, -6): 1, (2, -10): -1, (2, -4): -1},
               "i_plus": _v((2, -13), (2, -7)), "i_minus": _v((2, -11), (2, -5))},
    ),
    "3.8": Worked(
        "3.8", "A", 3, _v((2, -8), (2, -6)),
        sequence=_v((2, -2), (2, -4), (2, -6), (1, -3), (1, -5), (3, -3), (3, -5), (2, -2), (2, -4)),
        params=SnakeParams(-8, ((2, 2),), ()),
        n_terms=20, dim=8,
        denominator=_v((2, -2), (1, -3), (3, -3), (2, -4), (1, -5), (3, -5), (2, -6)),
        extra={"dims": {(1, -6): 1, (1, -4): 1, (2, -7): 1, (2, -5): 2, (2, -3): 1, (3, -6): 1, (3, -4): 1}},
    ),
    "3.9": Worked(
        "3.9", "A", 3, _v((2, -4), (2, -2)),
        sequence=_v((2, 0), (2, -2)),
        params=SnakeParams(-4, ((2, 2),), ()),
        arrows=(((2, -3), (2, -1)),),
        n_terms=3, dim=2,
        denominator=_v((2, 0), (2, -2)),
    ),
}

# non-snake examples computed from exchange relations between snake characters
EXCHANGE = {
    "4.8": {
        "family": "A", "rank": 3, "m": ((1, -3), (2, 0), (3, -3)),
        "pairs": [(((1, -3), (2, 0)), ((3, -3), (2, 0)))], "addend": ((2, -2), (2, 0)), "divisor": ((2, 0),),
        "denominator": _v((1, -1), (2, 0), (3, -1)),
    },
    "4.9": {
        "family": "A", "rank": 3, "m": ((1, -7), (2, -4), (3, -7)),
        "pairs": [(((1, -7), (2, -4)), ((3, -7), (2, -4)))], "addend": ((2, -6), (2, -4)), "divisor": ((2, -4),),
        "dims": {(2, -1): 1, (1, -2): 1, (3, -2): 1, (2, -3): 1, (1, -4): 1, (3, -4): 1, (1, -6): 1,
                 (3, -6): 1, (2, -5): 2},
        "n_terms": 70,
        "witness": ((1, -6), (2, -3), (3, -6)),
        "i_plus": _v((1, -8), (2, -5), (3, -8)), "i_minus": _v((1, -6), (2, -3), (3, -6)),
    },
}

C1_EXAMPLE = {
    "family": "A", "rank": 3, "I0": (1, 3),
    "rows": (("x", 1), ("x", 2), ("x", 3), ("y", 1), ("y", 2), ("y", 3)),
    "matrix": ((0, 1, 0), (-1, 0, -1), (0, 1, 0), (1, 0, 0), (0, -1, 0), (0, 0, 1)),
    "f": {1: "x_{2}+y_{1}", 2: "x_{1}x_{3}+y_{2}", 3: "x_{2}+y_{3}"},
}


def fixture_text(name: str) -> str:
    return resources.files("snakechar.data").joinpath(f"{name}.tex").read_text()


def _A_resolver(cd: CartanData):
    def resolve(letter, i, r):
        if letter == "A":
            return A_monomial(cd, (i, r))
        raise KeyError(letter)
    return resolve


def printed_polynomial(name: str, cd: CartanData | None = None, m=1) -> LaurentPoly:
    """Parse a printed polynomial; ``m`` stands for the highest monomial (1 by default)."""
    resolver = _A_resolver(cd) if cd is not None else None
    return parse_laurent(fixture_text(name), symbols={"m": m}, resolver=resolver)


def _chi(cd, pts) -> LaurentPoly:
    return truncated_q_character(cd, SnakeSpec(tuple(pts)))


@lru_cache(maxsize=None)
def exchange_character(key: str) -> LaurentPoly:
    """Truncated character of a non-snake module from its exchange relation."""
    ex = EXCHANGE[key]
    cd = cartan_data(ex["family"], ex["rank"])
    pairs = [(_chi(cd, a), _chi(cd, b)) for a, b in ex["pairs"]]
    return char_by_exchange(pairs, _chi(cd, ex["addend"]), _chi(cd, ex["divisor"]))


def exchange_m(key: str):
    ex = EXCHANGE[key]
    return SnakeSpec(tuple(ex["m"])).monomial()


def exchange_z_form(key: str) -> LaurentPoly:
    ex = EXCHANGE[key]
    return y_poly_to_z(cartan_data(ex["family"], ex["rank"]), exchange_character(key))


def witness_z(key: str = "4.9"):
    ex = EXCHANGE[key]
    cd = cartan_data(ex["family"], ex["rank"])
    mono = exchange_m(key)
    for v in ex["witness"]:
        mono = mono * A_monomial(cd, v).inverse()
    return y_mono_to_z(cd, mono)


# -- end-to-end verification of a worked example ------------------------------------

@dataclass
class Report:
    key: str
    checks: dict = field(default_factory=dict)  # name -> bool
    summary: str = ""

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def failed(self) -> list[str]:
        return [name for name, good in self.checks.items() if not good]


def _mono(pairs, family="z") -> Monomial:
    acc: dict = {}
    for i, r in pairs:
        acc[(family, i, r)] = acc.get((family, i, r), 0) + 1
    return Monomial(acc)


def _verify_snake(key: str) -> Report:
    from .characters import denominator, f_polynomial, g_vector, geometric_formula_holds
    from .cluster import verify_snake_variable
    from .kernel import count_closed_subsets, kernel_data, support_quiver

    w = EXAMPLES[key]
    cd, spec = w.cd, w.spec
    rep = Report(key)
    chi = truncated_q_character(cd, spec)
    F = f_polynomial(cd, spec)
    kd = kernel_data(cd, spec)
    den = denominator(cd, spec)
    rep.checks["terms"] = len(chi) == w.n_terms and all(c == 1 for c in chi.coefficients())
    if w.printed_F:
        rep.checks["printed F"] = F == printed_polynomial(w.printed_F)
    rep.checks["geometric formula"] = geometric_formula_holds(cd, spec)
    rep.checks["dim"] = kd.total_dim == w.dim
    if "dims" in w.extra:
        rep.checks["dims"] = kd.dims == {Vertex(*v): e for v, e in w.extra["dims"].items()}
    if "g" in w.extra:
        rep.checks["g-vector"] = g_vector(cd, spec) == w.extra["g"]
        rep.checks["injectives"] = (sorted(kd.i_plus), sorted(kd.i_minus)) == (
            sorted(Vertex(*v) for v in w.extra["i_plus"]), sorted(Vertex(*v) for v in w.extra["i_minus"]))
    rep.checks["denominator"] = den == _mono(w.denominator)
    if w.arrows and all(e == 1 for e in kd.dims.values()):
        sq = support_quiver(cd, spec, given_arrows=w.arrows)
        total, found = count_closed_subsets(sq)
        supports = {frozenset(Vertex(i, r) for (_, i, r), _ in m.items()): c for m, c in F.terms()}
        rep.checks["closed subsets"] = total == len(F) and dict(found) == supports
    rep.checks["mutation"] = verify_snake_variable(cd, spec, w.sequence)
    rep.summary = (f"{len(chi)} terms, dim {kd.total_dim}, denominator {len(den.keys())} factors, "
                   f"mutation {'OK' if rep.checks['mutation'] else 'FAILED'}")
    return rep


def _verify_48() -> Report:
    ex = EXCHANGE["4.8"]
    cd = cartan_data(ex["family"], ex["rank"])
    rep = Report("4.8")
    chi = exchange_character("4.8")
    rep.checks["character"] = chi == printed_polynomial("chi_4_8", cd, exchange_m("4.8"))
    z = exchange_z_form("4.8")
    rep.checks["x_m"] = z == parse_laurent(fixture_text("x_4_8"))
    den = z.denominator()
    rep.checks["denominator"] = den == _mono(ex["denominator"]) and all(e == 1 for _, e in den.items())
    rep.summary = f"{len(chi)} terms, denominator {den}"
    return rep


def _verify_49() -> Report:
    from .algebra import y_to_v
    from .kernel import Inconsistent, infer_submodule_poset, kernel_data_from_f

    ex = EXCHANGE["4.9"]
    cd = cartan_data(ex["family"], ex["rank"])
    rep = Report("4.9")
    F = y_to_v(cd, exchange_character("4.9"), exchange_m("4.9"))
    printed = printed_polynomial("F_4_9")
    rep.checks["printed F"] = F == printed
    rep.checks["terms"] = sum(F.coefficients()) == ex["n_terms"]
    rep.checks["coefficient-2 terms"] = (
        {m for m, c in F.terms() if c == 2} == {m for m, c in printed.terms() if c == 2}
        and any(c == 2 for c in F.coefficients()))
    kd = kernel_data_from_f(F)
    rep.checks["dims"] = kd.dims == {Vertex(*v): e for v, e in ex["dims"].items()}
    wz = witness_z("4.9")
    rep.checks["witness"] = wz == parse_laurent(fixture_text("witness_4_9")).monomials()[0]
    rep.checks["witness not square free"] = wz.negative_part().exponent(("z", 2, -4)) == 2
    try:
        infer_submodule_poset(F)
        rep.checks["inconsistent poset"] = False
    except Inconsistent:
        rep.checks["inconsistent poset"] = True
    rep.summary = (f"{sum(F.coefficients())} terms with multiplicity, "
                   f"dim {kd.total_dim}, witness denominator {wz.negative_part()}")
    return rep


def _verify_52() -> Report:
    from .cluster import c1_quiver, exchange_polynomials, is_factorial_c1

    ex = C1_EXAMPLE
    cd = cartan_data(ex["family"], ex["rank"])
    q = c1_quiver(cd, ex["I0"])
    rep = Report("5.2")
    cols = [("x", i) for i in cd.nodes()]
    rep.checks["matrix"] = tuple(map(tuple, q.exchange_matrix(list(ex["rows"]), cols))) == ex["matrix"]
    polys = exchange_polynomials(q)
    rep.checks["binomials"] = all(
        polys[("x", i)] == parse_laurent(text) for i, text in ex["f"].items())
    rep.checks["factorial"] = is_factorial_c1(q)
    rep.summary = "exchange matrix and binomials reproduced, factorial: " + str(rep.checks["factorial"]).lower()
    return rep



VERIFIABLE = ("3.5", "3.6", "3.7", "3.8", "3.9", "4.8", "4.9", "5.2")


def verify_example(key: str) -> Report:
    if key in EXAMPLES:
        return _verify_snake(key)
    if key == "4.8":
        return _verify_48()
    if key == "4.9":
        return _verify_49()
    if key == "5.2":
        return _verify_52()
    raise KeyError(f"no worked example {key!r}; choose from {', '.join(VERIFIABLE)}")
