"""Snake positions, the block parametrisation of prime snakes, and prime factorisation."""

from __future__ import annotations

from dataclasses import dataclass

from .cartan import CartanData, membership
from .laurent import Monomial
from .paths import NotInX, check_X, highest_path, lowest_path, strictly_above

NOT_SNAKE = "not_snake"
SNAKE = "snake"
PRIME = "prime"
MINIMAL_AND_PRIME = "minimal_and_prime"


class InvalidSnake(ValueError):
    pass


class NotInCminus(ValueError):
    """The snake's monomial involves a Y outside the minus side."""


@dataclass(frozen=True)
class SnakeSpec:
    points: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "points", tuple((int(i), int(k)) for i, k in self.points))

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def monomial(self) -> Monomial:
        acc: dict[tuple, int] = {}
        for i, k in self.points:
            acc[("Y", i, k)] = acc.get(("Y", i, k), 0) + 1
        return Monomial(acc)

    def __str__(self) -> str:
        return ",".join(f"({i},{k})" for i, k in self.points)


@dataclass(frozen=True)
class SnakeParams:
    r: int
    blocks: tuple[tuple[int, int], ...]  # (i_j, k_j)
    gaps: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple((int(i), int(k)) for i, k in self.blocks))
        object.__setattr__(self, "gaps", tuple(int(j) for j in self.gaps))


def _bounds(cd: CartanData, i: int, i2: int) -> tuple[int, int, int]:
    """(lower bound, residue modulus, upper bound for primality) on k' - k."""
    n = cd.rank
    if cd.family == "A":
        return abs(i2 - i) + 2, 2, min(2 * n + 2 - i - i2, i + i2)
    if cd.family == "B":
        if i == i2 == n:
            return 2, 4, 4 * n - 2
        if i == n or i2 == n:
            m = min(i, i2)
            return 2 * (n - m) + 3, 4, 2 * n + 2 * m - 1
        return 2 * abs(i2 - i) + 4, 4, 2 * i + 2 * i2
    raise ValueError(f"snakes are only defined for types A and B, not {cd.family}")


def position(cd: CartanData, a: tuple[int, int], b: tuple[int, int]) -> str:
    """How ``b`` sits relative to ``a``."""
    check_X(cd, a)
    check_X(cd, b)
    (i, k), (i2, k2) = a, b
    lo, mod, hi = _bounds(cd, i, i2)
    d = k2 - k
    if d < lo or (d - lo) % mod:
        return NOT_SNAKE
    if d == lo:
        return MINIMAL_AND_PRIME if d <= hi else SNAKE
    return PRIME if d <= hi else SNAKE


def is_snake(cd: CartanData, spec: SnakeSpec) -> bool:
    try:
        return all(position(cd, a, b) != NOT_SNAKE for a, b in zip(spec.points, spec.points[1:]))
    except NotInX:
        return False


def validate(cd: CartanData, spec: SnakeSpec) -> SnakeSpec:
    if not spec.points:
        raise InvalidSnake("empty snake")
    for v in spec.points:
        if not membership(cd, "X", v):
            raise InvalidSnake(f"point {v} is not in X for {cd.name}")
    for a, b in zip(spec.points, spec.points[1:]):
        if position(cd, a, b) == NOT_SNAKE:
            raise InvalidSnake(f"{b} is not in snake position with respect to {a}")
    return spec


def is_prime_by_position(cd: CartanData, spec: SnakeSpec) -> bool:
    return all(position(cd, a, b) in (PRIME, MINIMAL_AND_PRIME) for a, b in zip(spec.points, spec.points[1:]))


def is_prime_by_paths(cd: CartanData, spec: SnakeSpec) -> bool:
    return all(not _splits(cd, a, b) for a, b in zip(spec.points, spec.points[1:]))


def _splits(cd: CartanData, a, b) -> bool:
    return strictly_above(lowest_path(cd, a), highest_path(cd, b))


def in_Cminus(cd: CartanData, spec: SnakeSpec) -> bool:
    return all(membership(cd, "Gminus0", v) for v in spec.points)


def require_Cminus(cd: CartanData, spec: SnakeSpec) -> None:
    if not in_Cminus(cd, spec):
        raise NotInCminus(f"snake {spec} has a point with positive degree")


def _eps(cd: CartanData, i: int, j: int) -> int:
    if cd.family == "B":
        return -(i == cd.rank) - (j == cd.rank)
    return 0


def gap_step(cd: CartanData, i: int, k: int, i2: int, j: int) -> int:
    """n_l: offset from the start of one block to the start of the next."""
    t = cd.t
    return cd.bij(i, i) * (k - 1) + 2 * t + t * abs(i2 - i) + 2 * t * j + _eps(cd, i, i2)


def max_gap(cd: CartanData, i: int, i2: int) -> int:
    """Largest j_l keeping the pair of blocks in prime position."""
    if cd.family == "A":
        if i + i2 >= cd.rank + 1:
            return cd.rank - max(i, i2)
        return min(i, i2) - 1
    return min(i, i2) - 1


def expand_params(cd: CartanData, params: SnakeParams) -> tuple[Monomial, SnakeSpec, bool]:
    blocks, gaps = params.blocks, params.gaps
    if not blocks:
        raise InvalidSnake("no blocks")
    if len(gaps) != len(blocks) - 1:
        raise InvalidSnake(f"{len(blocks)} blocks need {len(blocks) - 1} gaps, got {len(gaps)}")
    if any(k < 1 for _, k in blocks) or any(j < 0 for j in gaps):
        raise InvalidSnake("block lengths must be >= 1 and gaps >= 0")
    pts = []
    start = params.r
    for idx, (i, k) in enumerate(blocks):
        for s in range(k):
            pts.append((i, start + cd.bij(i, i) * s))
        if idx < len(gaps):
            start += gap_step(cd, i, k, blocks[idx + 1][0], gaps[idx])
    spec = SnakeSpec(tuple(pts))
    for v in spec.points:
        if not membership(cd, "X", v):
            raise InvalidSnake(f"parameters produce {v}, which is not in X")
    validate(cd, spec)
    prime = all(
        gaps[l] <= max_gap(cd, blocks[l][0], blocks[l + 1][0]) for l in range(len(gaps))
    )
    return spec.monomial(), spec, prime


def prime_decompose(cd: CartanData, spec: SnakeSpec) -> list[SnakeSpec]:
    """Cut the snake wherever consecutive extreme paths do not overlap."""
    validate(cd, spec)
    pts = spec.points
    out = []
    cur = [pts[0]]
    for a, b in zip(pts, pts[1:]):
        if _splits(cd, a, b):
            out.append(SnakeSpec(tuple(cur)))
            cur = []
        cur.append(b)
    out.append(SnakeSpec(tuple(cur)))
    return out


def parse_points(text: str) -> SnakeSpec:
    """Parse ``"(2,-10),(2,-6)"`` into a snake."""
    import re

    found = re.findall(r"\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)", text)
    rest = re.sub(r"\(\s*-?\d+\s*,\s*-?\d+\s*\)", "", text)
    if not found or rest.replace(",", "").strip():
        raise InvalidSnake(f"cannot parse point list {text!r}")
    return SnakeSpec(tuple((int(a), int(b)) for a, b in found))
