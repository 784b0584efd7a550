"""Young tableaux of types A_n, B_n and C_n.

Letters are nonzero ints: ``i`` is the unbarred letter i and ``-i`` is its
barred twin.  The alphabet order is ``1 < 2 < ... < n < -n < ... < -1``,
realised by :func:`letter_key`.  Columns are tuples of letters sorted in that
order; tableaux list their columns left to right (``C_0, ..., C_r``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterator, Sequence

from .roots import RootDatum, Vector, vec

Column = tuple[int, ...]


class TableauError(ValueError):
    pass


# ---- letters -----------------------------------------------------------------
def letter_key(x: int) -> tuple[bool, int]:
    return (x < 0, x)


def letter_str(x: int) -> str:
    return f"{-x}'" if x < 0 else str(x)


def parse_letter(s: str) -> int:
    s = s.strip()
    if s.endswith("'"):
        return -int(s[:-1])
    return int(s)


def alphabet(datum: RootDatum) -> tuple[int, ...]:
    if datum.family == "A":
        return tuple(range(1, datum.rank + 2))
    n = datum.rank
    return tuple(range(1, n + 1)) + tuple(range(-n, 0))


def make_column(entries: Sequence[int]) -> Column:
    return tuple(sorted(entries, key=letter_key))


def is_valid_column(col: Sequence[int], datum: RootDatum) -> bool:
    letters = set(alphabet(datum))
    if any(x not in letters for x in col):
        return False
    keys = [letter_key(x) for x in col]
    if any(a >= b for a, b in zip(keys, keys[1:])):
        return False
    bases = [abs(x) for x in col]
    return len(set(bases)) == len(bases)


def base_set(col: Sequence[int]) -> tuple[int, ...]:
    return tuple(sorted(abs(x) for x in col))


def column_vector(col: Sequence[int], dim: int, scale=Fraction(1)) -> Vector:
    out = [Fraction(0)] * dim
    for x in col:
        out[abs(x) - 1] += scale if x > 0 else -scale
    return tuple(out)


# ---- shapes -------------------------------------------------------------------
@dataclass(frozen=True)
class Shape:
    """Diagram ``dg(lambda)`` for ``lambda = sum a_i omega_i`` plus its column bookkeeping."""

    datum: RootDatum
    omega: tuple[int, ...]

    def __post_init__(self):
        if len(self.omega) != self.datum.rank or any(a < 0 for a in self.omega):
            raise TableauError(f"bad omega coefficients {self.omega} for {self.datum}")

    @classmethod
    def from_eps(cls, datum: RootDatum, lam: Sequence) -> "Shape":
        return cls(datum, datum.eps_to_omega(lam))

    @classmethod
    def from_heights(cls, datum: RootDatum, heights: Sequence[int]) -> "Shape":
        n = datum.rank
        counts = [0] * (n + 2)
        for h in heights:
            if not 1 <= h <= n:
                raise TableauError(f"column height {h} out of range for {datum}")
            counts[h] += 1
        omega = []
        for i in range(1, n + 1):
            c = counts[i]
            paired = (datum.family == "B" and i < n) or (datum.family == "C" and i > 1)
            if paired:
                if c % 2:
                    raise TableauError(f"odd number of height-{i} columns in type {datum.family}")
                c //= 2
            omega.append(c)
        shape = cls(datum, tuple(omega))
        if list(shape.heights) != list(heights):
            raise TableauError("column heights must weakly decrease left to right")
        return shape

    @cached_property
    def lam(self) -> Vector:
        return self.datum.omega_to_eps(self.omega)

    @cached_property
    def heights(self) -> tuple[int, ...]:
        n, a, fam = self.datum.rank, self.omega, self.datum.family
        out: list[int] = []
        if fam == "A":
            for i in range(n, 0, -1):
                out += [i] * a[i - 1]
        elif fam == "B":
            out += [n] * a[n - 1]
            for i in range(n - 1, 0, -1):
                out += [i] * (2 * a[i - 1])
        else:
            for i in range(n, 1, -1):
                out += [i] * (2 * a[i - 1])
            out += [1] * a[0]
        return tuple(out)

    @cached_property
    def pairs(self) -> frozenset[int]:
        """Indices ``i`` such that ``(C_i, C_{i+1})`` is a designated column pair."""
        fam, n, a = self.datum.family, self.datum.rank, self.omega
        if fam == "A":
            return frozenset()
        if fam == "B":
            start, count = a[n - 1], sum(a[: n - 1])
        else:
            start, count = 0, sum(a[1:])
        return frozenset(start + 2 * k for k in range(count))

    @cached_property
    def halved(self) -> frozenset[int]:
        """Columns whose coweight carries the factor 1/2."""
        fam = self.datum.family
        if fam == "A":
            return frozenset()
        if fam == "B":
            return frozenset(range(len(self.heights)))
        return frozenset(i for p in self.pairs for i in (p, p + 1))

    @property
    def ncols(self) -> int:
        return len(self.heights)

    @cached_property
    def rows(self) -> tuple[int, ...]:
        """Row lengths ``p_1, p_2, ...`` (nonzero ones only)."""
        if not self.heights:
            return ()
        return tuple(sum(1 for h in self.heights if h > k) for k in range(self.heights[0]))

    def row_vector(self) -> tuple[int, ...]:
        """Row lengths padded to ``rank`` entries, matching ``p`` of the diagram."""
        r = list(self.rows)
        return tuple(r + [0] * (self.datum.rank - len(r)))

    def column_scale(self, i: int) -> Fraction:
        return Fraction(1, 2) if i in self.halved else Fraction(1)

    def pair_compatible(self, left: Column, right: Column) -> bool:
        if base_set(left) != base_set(right):
            return False
        if self.datum.family == "C":
            lb = {abs(x) for x in left if x < 0}
            rb = {abs(x) for x in right if x < 0}
            return len(lb ^ rb) % 2 == 0
        return True


# ---- tableaux -----------------------------------------------------------------
def rows_weakly_increase(left: Column, right: Column) -> bool:
    return all(letter_key(a) <= letter_key(b) for a, b in zip(left, right))


@dataclass(frozen=True)
class Tableau:
    shape: Shape
    columns: tuple[Column, ...]
    _checked: bool = field(default=True, repr=False, compare=False)

    def __post_init__(self):
        if not self._checked:
            return
        if tuple(len(c) for c in self.columns) != self.shape.heights:
            raise TableauError(
                f"column heights {[len(c) for c in self.columns]} do not match {self.shape.heights}"
            )
        for c in self.columns:
            if not is_valid_column(c, self.shape.datum):
                raise TableauError(f"invalid column {c} for {self.shape.datum}")
        for i in self.shape.pairs:
            if not self.shape.pair_compatible(self.columns[i], self.columns[i + 1]):
                raise TableauError(f"columns {i},{i + 1} violate the pairing rule")

    @property
    def datum(self) -> RootDatum:
        return self.shape.datum

    @property
    def r(self) -> int:
        return len(self.columns) - 1

    def rows(self) -> list[list[int]]:
        if not self.columns:
            return []
        return [[c[k] for c in self.columns if len(c) > k] for k in range(len(self.columns[0]))]

    def to_text(self) -> str:
        return "\n".join(",".join(letter_str(x) for x in row) for row in self.rows())

    def __str__(self) -> str:
        return self.to_text()

    def sort_key(self):
        return tuple(tuple(letter_key(x) for x in c) for c in reversed(self.columns))


def column_coweight(shape: Shape, T_or_col, i: int | None = None) -> Vector:
    """Coweight of one column; with a tableau pass the column index ``i``."""
    if isinstance(T_or_col, Tableau):
        col = T_or_col.columns[i]
    else:
        col = T_or_col
    scale = shape.column_scale(i) if i is not None else Fraction(1)
    return column_vector(col, shape.datum.dimension, scale)


def content(T: Tableau) -> Vector:
    d = T.datum.dimension
    out = [Fraction(0)] * d
    for i, col in enumerate(T.columns):
        for k, c in enumerate(column_vector(col, d, T.shape.column_scale(i))):
            out[k] += c
    return tuple(out)


def is_semistandard(T: Tableau) -> bool:
    return all(rows_weakly_increase(a, b) for a, b in zip(T.columns, T.columns[1:]))


def is_minimal(T: Tableau) -> bool:
    return all(set(b) <= set(a) for a, b in zip(T.columns, T.columns[1:]))


def parse_tableau(text: str, datum: RootDatum, shape: Shape | None = None) -> Tableau:
    rows = [
        [parse_letter(tok) for tok in line.split(",") if tok.strip()]
        for line in text.strip().splitlines()
        if line.strip()
    ]
    ncols = len(rows[0]) if rows else 0
    if any(len(b) > len(a) for a, b in zip(rows, rows[1:])):
        raise TableauError("row lengths must weakly decrease")
    cols = tuple(tuple(row[c] for row in rows if len(row) > c) for c in range(ncols))
    for c in cols:
        if make_column(c) != c:
            raise TableauError(f"column {[letter_str(x) for x in c]} is not strictly increasing")
    if shape is None:
        shape = Shape.from_heights(datum, [len(c) for c in cols])
    return Tableau(shape, cols)


# ---- enumeration --------------------------------------------------------------
def columns_of_height(datum: RootDatum, h: int) -> list[Column]:
    letters = sorted(alphabet(datum), key=letter_key)
    out = []
    for combo in combinations(letters, h):
        bases = [abs(x) for x in combo]
        if len(set(bases)) == h:
            out.append(tuple(combo))
    return out


def _lift_content(shape: Shape, mu: Sequence) -> Vector | None:
    """Type A: turn a canonical content into box counts summing to ``|lambda|``."""
    datum = shape.datum
    mu = vec(mu)
    if datum.family != "A":
        return mu
    boxes = sum(shape.heights)
    d = datum.dimension
    excess = boxes - sum(mu)
    if excess % d:
        return None
    return tuple(m + excess / d for m in mu)


def _generate(shape: Shape, target: Vector | None) -> Iterator[tuple[Column, ...]]:
    datum = shape.datum
    d = datum.dimension
    heights = shape.heights
    ncols = len(heights)
    by_height = {h: columns_of_height(datum, h) for h in set(heights)}
    scales = [shape.column_scale(i) for i in range(ncols)]
    vectors = {
        (h, s): {c: column_vector(c, d, s) for c in by_height[h]}
        for h in set(heights)
        for s in set(scales)
    }
    # budget[i] = total scale of columns 0..i-1 (still to be placed when at column i-1)
    budget = [sum(scales[:i], Fraction(0)) for i in range(ncols + 1)]

    chosen: list[Column] = [()] * ncols

    def feasible(acc, i):
        # columns 0..i-1 still open
        if target is None:
            return True
        room = budget[i]
        for k in range(d):
            gap = target[k] - acc[k]
            if datum.family == "A":
                if gap < 0:
                    return False
            elif abs(gap) > room:
                return False
        if datum.family == "A":
            # each open column of height h adds exactly h boxes
            return sum(target) - sum(acc) == sum(heights[:i])
        return True

    def rec(i, acc):
        if i < 0:
            if target is None or tuple(acc) == target:
                yield tuple(chosen)
            return
        h, s = heights[i], scales[i]
        right = chosen[i + 1] if i + 1 < ncols else None
        vecs = vectors[(h, s)]
        for col in by_height[h]:
            if right is not None:
                if not rows_weakly_increase(col, right):
                    continue
                if i in shape.pairs and not shape.pair_compatible(col, right):
                    continue
            cv = vecs[col]
            nacc = [a + b for a, b in zip(acc, cv)]
            if not feasible(nacc, i):
                continue
            chosen[i] = col
            yield from rec(i - 1, nacc)

    start = [Fraction(0)] * d
    if feasible(start, ncols):
        yield from rec(ncols - 1, start)


def enumerate_ssyt(shape: Shape, mu: Sequence) -> list[Tableau]:
    """All semistandard tableaux of the given shape and content, in canonical order."""
    if len(mu) != shape.datum.dimension:
        raise TableauError("content has the wrong dimension")
    target = _lift_content(shape, mu)
    if target is None:
        return []
    out = [Tableau(shape, cols, _checked=False) for cols in _generate(shape, target)]
    out.sort(key=Tableau.sort_key)
    return out


def enumerate_all_ssyt(shape: Shape) -> list[Tableau]:
    out = [Tableau(shape, cols, _checked=False) for cols in _generate(shape, None)]
    out.sort(key=Tableau.sort_key)
    return out


# ---- vertex typing ------------------------------------------------------------
@dataclass(frozen=True)
class VertexContext:
    """Which residue Weyl group acts on a column pair.

    ``sigma`` is one-based: ``sigma[m-1]`` is the image of ``m``; its first
    ``j`` values are the sorted base letters of the left column and the rest the
    complement in ascending order.
    """

    family: str
    rank: int
    special: bool = True
    j: int = 0
    sigma: tuple[int, ...] = ()

    @classmethod
    def special_for(cls, datum: RootDatum) -> "VertexContext":
        return cls(datum.family, datum.rank)

    @classmethod
    def nonspecial(cls, datum: RootDatum, left: Column) -> "VertexContext":
        bases = base_set(left)
        rest = tuple(k for k in range(1, datum.rank + 1) if k not in bases)
        return cls(datum.family, datum.rank, False, len(bases), bases + rest)

    @property
    def kind(self) -> str:
        return "special" if self.special else "nonspecial"


def vertex_context(T: Tableau, i: int) -> VertexContext:
    if not 0 <= i < T.r:
        raise IndexError(f"pair index {i} out of range for {T.r + 1} columns")
    if i in T.shape.pairs:
        return VertexContext.nonspecial(T.datum, T.columns[i])
    return VertexContext.special_for(T.datum)


def parity_rule_nonspecial(shape: Shape, i: int) -> bool:
    """Nonspecial-vertex test phrased through column heights and index parity."""
    fam, n = shape.datum.family, shape.datum.rank
    h = shape.heights
    r = len(h) - 1
    if fam == "A" or h[i] != h[i + 1]:
        return False
    j = h[i]
    if fam == "B":
        return j < n and (r - i) % 2 == 1
    return j > 1 and i % 2 == 0


# ---- type A partition helpers ---------------------------------------------------
def _partition(datum: RootDatum, lam: Sequence) -> tuple[int, ...]:
    if datum.family != "A":
        raise TableauError("partition helpers are type A only")
    lam = datum.canonical(lam)
    if not datum.is_dominant(lam):
        raise TableauError("expected a dominant coweight")
    return tuple(int(x) for x in lam)


def conjugate(datum: RootDatum, lam: Sequence) -> tuple[int, ...]:
    part = _partition(datum, lam)
    if not part or part[0] == 0:
        return ()
    return tuple(sum(1 for p in part if p > k) for k in range(part[0]))


def m_index(datum: RootDatum, lam: Sequence, i: int) -> int:
    """``m_i(lambda) = lambda'_i - lambda'_{i+1}`` with one-based ``i``."""
    conj = conjugate(datum, lam)

    def at(k):
        return conj[k - 1] if 1 <= k <= len(conj) else 0

    return at(i) - at(i + 1)
