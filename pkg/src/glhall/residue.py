"""Simple reflections of the residue Weyl group at a vertex and their action on columns."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .tableaux import Column, VertexContext, base_set, letter_key, make_column

INCREASES = "increases"
DECREASES = "decreases"
FIXES = "fixes"


class MixedMovement(RuntimeError):
    """A reflection moved one entry up and another down in the same column."""


class IncompatibleColumn(ValueError):
    pass


@dataclass(frozen=True)
class ReflectionSpec:
    """One simple reflection as a letter involution.

    ``index`` is the reflection number; ``extra`` marks the additional
    generator ``s_{j0}`` of a nonspecial vertex.  ``swaps`` lists the
    transposed letter pairs.
    """

    context: VertexContext
    index: int
    extra: bool
    swaps: tuple[tuple[int, int], ...]

    @property
    def name(self) -> str:
        return f"{self.index}_0" if self.extra else str(self.index)

    @property
    def letter_map(self) -> dict[int, int]:
        return _letter_map(self.swaps)

    def __call__(self, x: int) -> int:
        return self.letter_map.get(x, x)


@lru_cache(maxsize=None)
def _letter_map(swaps: tuple[tuple[int, int], ...]) -> dict[int, int]:
    m: dict[int, int] = {}
    for a, b in swaps:
        m[a] = b
        m[b] = a
    return m


def _pair_swap(a: int, b: int, barred: bool) -> tuple[tuple[int, int], ...]:
    if barred:
        return ((a, b), (-a, -b))
    return ((a, b),)


@lru_cache(maxsize=None)
def reflections_for(context: VertexContext) -> tuple[ReflectionSpec, ...]:
    """Simple reflections in canonical order (``s_1 < ... < s_n < s_{j0}``)."""
    fam, n = context.family, context.rank
    if context.special:
        if fam == "A":
            return tuple(ReflectionSpec(context, k, False, ((k, k + 1),)) for k in range(1, n + 1))
        out = [ReflectionSpec(context, k, False, _pair_swap(k, k + 1, True)) for k in range(1, n)]
        out.append(ReflectionSpec(context, n, False, ((n, -n),)))
        return tuple(out)

    j, sigma = context.j, context.sigma

    def s(m):
        return sigma[m - 1]

    out = []
    for m in range(1, n):
        if m == j:
            continue
        out.append(ReflectionSpec(context, m, False, _pair_swap(s(m), s(m + 1), True)))
    if j != n:
        out.append(ReflectionSpec(context, n, False, ((s(n), -s(n)),)))
    if fam == "B":
        extra = ((s(j), -s(j)),)
    elif fam == "C":
        extra = ((s(j), -s(j - 1)), (s(j - 1), -s(j)))
    else:
        raise ValueError("type A has no nonspecial vertices")
    out.append(ReflectionSpec(context, j, True, extra))
    return tuple(out)


def check_compatible(s: ReflectionSpec, col: Column) -> None:
    ctx = s.context
    if not ctx.special and base_set(col) != tuple(sorted(ctx.sigma[: ctx.j])):
        raise IncompatibleColumn(f"column {col} does not sit at this vertex")


def apply_to_column(s: ReflectionSpec, col: Column, check: bool = True) -> Column:
    if check:
        check_compatible(s, col)
    m = s.letter_map
    return make_column(m.get(x, x) for x in col)


def classify(s: ReflectionSpec, col: Column) -> str:
    m = s.letter_map
    present = set(col)
    up = down = False
    for x in col:
        y = m.get(x, x)
        if y == x or y in present:
            continue
        if letter_key(y) > letter_key(x):
            up = True
        else:
            down = True
    if up and down:
        raise MixedMovement(f"reflection s_{s.name} moves {col} both up and down")
    if up:
        return INCREASES
    if down:
        return DECREASES
    return FIXES
