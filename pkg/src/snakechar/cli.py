"""Command-line entry point: ``snakechar <command> ...``.

Exit codes: 0 success, 1 verification mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from .cartan import CartanData, cartan_data, membership
from .characters import (
    denominator,
    f_polynomial,
    g_vector,
    q_character,
    truncated_q_character,
)
from .cluster import (
    c1_quiver,
    default_r_min,
    is_factorial_c1,
    partner_sets,
    run_sequence,
    snake_variable,
    valid_bipartitions,
)
from .kernel import kernel_data
from .laurent import LaurentPoly, Monomial, NotDivisible
from .paths import NotInX, enumerate_paths
from .snakes import InvalidSnake, NotInCminus, SnakeParams, SnakeSpec, expand_params, parse_points
from .svg import render_paths
from .worked import VERIFIABLE, verify_example

OK, MISMATCH, USAGE = 0, 1, 2


class UsageError(Exception):
    def __init__(self, message: str, where: str = ""):
        super().__init__(message)
        self.where = where


@dataclass
class JobSpec:
    family: str
    rank: int
    command: str
    snake: SnakeSpec | None = None
    params: SnakeParams | None = None
    options: dict = field(default_factory=dict)

    @property
    def cd(self) -> CartanData:
        return cartan_data(self.family, self.rank)


# -- canonical JSON ----------------------------------------------------------------

def monomial_json(m: Monomial) -> list[dict]:
    return [{"f": f, "i": i, "r": r, "e": e} for (f, i, r), e in m.items()]


def poly_json(p: LaurentPoly) -> list[dict]:
    return [{"coeff": c, "vars": monomial_json(m)} for m, c in p.terms()]


def document(job: JobSpec, obj: str, poly: LaurentPoly, **extra) -> dict:
    doc = {"family": job.family, "rank": job.rank, "object": obj, "monomials": poly_json(poly)}
    if job.snake is not None:
        doc["snake"] = [list(v) for v in job.snake.points]
    if job.params is not None:
        doc["params"] = {"r": job.params.r, "blocks": [list(b) for b in job.params.blocks],
                         "gaps": list(job.params.gaps)}
    doc.update(extra)
    return doc


def dumps(doc: dict) -> str:
    return json.dumps(doc, separators=(",", ":"), ensure_ascii=False) + "\n"


# -- parsing ---------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message, "arguments")


def _cd(family: str, rank) -> CartanData:
    try:
        return cartan_data(family, int(rank))
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"unsupported type {family}{rank}: {exc}", "--type/--rank") from exc


def _check_points(cd: CartanData, spec: SnakeSpec, where: str) -> None:
    for idx, v in enumerate(spec.points):
        if not membership(cd, "X", v):
            raise UsageError(f"point {idx + 1} {tuple(v)} is not in X for {cd.name}", f"{where}[{idx + 1}]")


def _parse_params(text, where: str) -> SnakeParams:
    try:
        raw = json.loads(text) if isinstance(text, str) else text
        return SnakeParams(int(raw["r"]), tuple(tuple(b) for b in raw["blocks"]), tuple(raw.get("gaps", ())))
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot read snake parameters: {exc}", where) from exc


def _attach_snake(job: JobSpec, snake, params, where: str) -> None:
    if snake is not None and params is not None:
        raise UsageError("give either a point list or parameters, not both", where)
    cd = job.cd
    if snake is not None:
        try:
            spec = parse_points(snake) if isinstance(snake, str) else SnakeSpec(tuple(tuple(v) for v in snake))
        except (InvalidSnake, TypeError, ValueError) as exc:
            raise UsageError(str(exc), f"{where}snake") from exc
        _check_points(cd, spec, f"{where}snake")
        job.snake = spec
    elif params is not None:
        job.params = _parse_params(params, f"{where}params")
        try:
            _, job.snake, _ = expand_params(cd, job.params)
        except InvalidSnake as exc:
            raise UsageError(str(exc), f"{where}params") from exc


def job_from_json(doc: dict, source: str = "job") -> JobSpec:
    """Read a job document: {"family", "rank", "command", "snake" | "params", "options"}."""
    for key in ("family", "rank", "command"):
        if key not in doc:
            raise UsageError(f"missing field {key!r}", source)
    cd = _cd(doc["family"], doc["rank"])
    job = JobSpec(cd.family, cd.rank, doc["command"], options=dict(doc.get("options", {})))
    _attach_snake(job, doc.get("snake"), doc.get("params"), source + ":")
    return job


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="snakechar", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def snake_cmd(name, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--type", dest="family")
        p.add_argument("--rank", type=int)
        p.add_argument("--snake", help='point list, e.g. "(2,-10),(2,-6)"')
        p.add_argument("--params", help='JSON, e.g. {"r":-10,"blocks":[[2,1],[2,1]],"gaps":[1]}')
        p.add_argument("--job", help="JSON job file (replaces the flags above)")
        p.add_argument("--json", dest="json_out", help="write the JSON result here ('-' for stdout)")
        return p

    for name, help_ in [("qchar", "q-character"), ("trunc", "truncated q-character"),
                        ("fpoly", "F-polynomial"), ("gvector", "g-vector"),
                        ("denominator", "denominator vector"), ("kernel", "generic kernel data")]:
        snake_cmd(name, help_)
    p = snake_cmd("mutate", "mutate from the initial seed and compare with the snake variable")
    p.add_argument("--seq", required=True, help='vertices, e.g. "(2,0),(2,-2)"')
    p.add_argument("--depth", type=int, help="truncation depth (overrides SNAKE_DEPTH)")

    p = sub.add_parser("paths", help="path family of one point")
    p.add_argument("--type", dest="family", required=True)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--point", required=True)
    p.add_argument("--svg", help="write an SVG drawing here")
    p.add_argument("--json", dest="json_out")

    p = sub.add_parser("verify", help="check a worked example end to end")
    p.add_argument("--example", required=True, choices=VERIFIABLE)

    p = sub.add_parser("factorial", help="partner sets of the C_1 quivers of a Dynkin type")
    p.add_argument("--type", dest="family", required=True)
    p.add_argument("--rank", type=int, required=True)
    return parser


def _job(args) -> JobSpec:
    if getattr(args, "job", None):
        try:
            with open(args.job, encoding="utf-8") as fh:
                doc = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(str(exc), args.job) from exc
        doc.setdefault("command", args.command)
        return job_from_json(doc, args.job)
    if args.family is None or args.rank is None:
        raise UsageError("--type and --rank are required", "arguments")
    cd = _cd(args.family, args.rank)
    job = JobSpec(cd.family, cd.rank, args.command)
    _attach_snake(job, args.snake, args.params, "--")
    if job.snake is None:
        raise UsageError("a snake is required (--snake or --params)", "arguments")
    return job


def _emit(args, doc: dict, text: str) -> None:
    out = getattr(args, "json_out", None)
    if out == "-":
        sys.stdout.write(dumps(doc))
        return
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(dumps(doc))
    print(text)


# -- commands ----------------------------------------------------------------------

def _poly_command(args, job: JobSpec) -> int:
    cd, spec = job.cd, job.snake
    fn = {"qchar": q_character, "trunc": truncated_q_character, "fpoly": f_polynomial}[args.command]
    poly = fn(cd, spec)
    _emit(args, document(job, args.command, poly), f"{len(poly)} terms\n{poly}")
    return OK


def _gvector(args, job: JobSpec) -> int:
    g = g_vector(job.cd, job.snake)
    mono = Monomial({("z", i, r): e for (i, r), e in g.items()})
    _emit(args, document(job, "gvector", LaurentPoly({mono: 1})), str(mono))
    return OK


def _denominator(args, job: JobSpec) -> int:
    den = denominator(job.cd, job.snake)
    square_free = all(e == 1 for _, e in den.items())
    _emit(args, document(job, "denominator", LaurentPoly({den: 1}), square_free=square_free),
          f"{den} ({len(den.keys())} factors, square free: {str(square_free).lower()})")
    return OK


def _kernel(args, job: JobSpec) -> int:
    kd = kernel_data(job.cd, job.snake)
    dims = Monomial({("v", i, r): e for (i, r), e in kd.dims.items()})
    extra = {"total_dim": kd.total_dim,
             "i_plus": [list(v) for v in kd.i_plus], "i_minus": [list(v) for v in kd.i_minus]}
    _emit(args, document(job, "kernel", LaurentPoly({dims: 1}), **extra),
          f"dim {kd.total_dim}: {dims}")
    return OK


def _mutate(args, job: JobSpec) -> int:
    cd = job.cd
    try:
        seq = [tuple(v) for v in parse_points(args.seq).points]
    except InvalidSnake as exc:
        raise UsageError(str(exc), "--seq") from exc
    depth = args.depth or job.options.get("depth")
    r_min = -abs(int(depth)) if depth else default_r_min(cd, job.snake)
    try:
        try:
            x = run_sequence(cd, seq, r_min)
        except NotDivisible:
            x = run_sequence(cd, seq, 2 * r_min)
    except ValueError as exc:
        raise UsageError(str(exc), "--seq") from exc
    good = x == snake_variable(cd, job.snake)
    _emit(args, document(job, "mutate", x, matches=good),
          f"{len(x)} terms, denominator {x.denominator()}, matches snake: {str(good).lower()}")
    return OK if good else MISMATCH


def _paths(args) -> int:
    cd = _cd(args.family, args.rank)
    try:
        v = parse_points(args.point).points
    except InvalidSnake as exc:
        raise UsageError(str(exc), "--point") from exc
    if len(v) != 1:
        raise UsageError("exactly one point expected", "--point")
    try:
        paths = list(enumerate_paths(cd, v[0]))
    except NotInX as exc:
        raise UsageError(str(exc), "--point[1]") from exc
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(render_paths(cd, paths, title=f"P_{v[0]} in {cd.name}"))
    job = JobSpec(cd.family, cd.rank, "paths")
    poly = LaurentPoly.lift(0)
    for p in paths:
        poly = poly + LaurentPoly({p.monomial: 1})
    doc = document(job, "paths", poly, point=list(v[0]),
                   paths=[[list(pt) for pt in p.points] for p in paths])
    _emit(args, doc, f"{len(paths)} paths")
    return OK


def _verify(args) -> int:
    rep = verify_example(args.example)
    status = "verified" if rep.ok else "MISMATCH in " + ", ".join(rep.failed())
    print(f"Example {args.example}: {rep.summary} ({status})")
    return OK if rep.ok else MISMATCH


def _factorial(args) -> int:
    cd = _cd(args.family, args.rank)
    if cd.family not in ("A", "D", "E"):
        raise UsageError("C_1 quivers need a simply-laced type", "--type")
    results = []
    for I0 in valid_bipartitions(cd):
        q = c1_quiver(cd, I0)
        groups = partner_sets(q)
        results.append((sorted(I0), groups, is_factorial_c1(q)))
    for I0, groups, fact in results:
        singles = sum(len(g) == 1 for g in groups)
        print(f"I0={I0}: partner sets: {singles} singletons"
              + (f", {len(groups) - singles} larger" if singles != len(groups) else "")
              + f"; factorial: {str(fact).lower()}")
    singles = min(sum(len(g) == 1 for g in groups) for _, groups, _ in results)
    every = all(f for *_, f in results)
    print(f"partner sets: {singles} singletons; factorial: {str(every).lower()}")
    return OK if every else MISMATCH


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "paths":
            return _paths(args)
        if args.command == "verify":
            return _verify(args)
        if args.command == "factorial":
            return _factorial(args)
        job = _job(args)
        if args.command in ("qchar", "trunc", "fpoly"):
            return _poly_command(args, job)
        if args.command == "gvector":
            return _gvector(args, job)
        if args.command == "denominator":
            return _denominator(args, job)
        if args.command == "kernel":
            return _kernel(args, job)
        return _mutate(args, job)
    except UsageError as exc:
        sys.stderr.write(dumps({"error": "usage", "where": exc.where, "message": str(exc)}))
        return USAGE
    except NotInCminus as exc:
        sys.stderr.write(dumps({"error": "usage", "where": "snake", "message": str(exc)}))
        return USAGE


def main() -> None:
    sys.exit(run())
