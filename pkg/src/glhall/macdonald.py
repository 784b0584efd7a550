"""Type A columnwise Macdonald formula.

``phi_T`` is computed two ways, from the chain of shapes ``lambda^(i)`` cut out
by the entries and from heads in the augmented tableau.  Everything in ``t``
is a :class:`HalfLaurent` through ``t = v**-2``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .laurent import ONE, ZERO, HalfLaurent, one_minus_t_power, phi
from .roots import RootDatum, pair, vec
from .tableaux import (
    Column,
    Shape,
    Tableau,
    column_vector,
    content,
    enumerate_all_ssyt,
    enumerate_ssyt,
    is_semistandard,
)

INF = math.inf

Box = tuple[int, int]  # (row, column), both zero-based


def phi_k(k: int) -> HalfLaurent:
    return phi(k)


def _require_a(T: Tableau) -> None:
    if T.datum.family != "A":
        raise ValueError("the Macdonald formula is implemented for type A only")
    if not is_semistandard(T):
        raise ValueError("expected a semistandard tableau")


def _t_shift(poly: HalfLaurent, k) -> HalfLaurent:
    """Multiply ``poly`` by ``t**k``."""
    e = -2 * k
    if e != int(e):
        raise ValueError(f"t-exponent {k} is not a half-integer")
    return poly.shift(int(e))


# ---- augmented tableau and heads ----------------------------------------------
@dataclass(frozen=True)
class AugmentedTableau:
    """``T`` with one extra box labelled ``inf`` at the end of every nonzero row."""

    base: Tableau

    @cached_property
    def boxes(self) -> dict[Box, float]:
        out: dict[Box, float] = {}
        for j, row in enumerate(self.base.rows()):
            for i, x in enumerate(row):
                out[(j, i)] = x
            out[(j, len(row))] = INF
        return out

    def entry(self, box: Box) -> float:
        return self.boxes[box]

    def head(self, u: Box) -> set[Box]:
        j, i = u
        c = self.boxes.get(u)
        if c is None or c == INF:
            raise ValueError(f"box {u} is not a box of the tableau")
        return {
            (k, i + 1)
            for k in range(j + 1)
            if (k, i + 1) in self.boxes and self.boxes[(k, i + 1)] >= c
        }

    def factor(self, u: Box) -> HalfLaurent:
        c = self.boxes[u]
        h = self.head(u)
        if any(self.boxes[v] == c for v in h):
            return ONE
        return one_minus_t_power(len(h))


def head(T_hat: AugmentedTableau, u: Box) -> set[Box]:
    return T_hat.head(u)


def _column_heads(col: Column, nxt: Column) -> HalfLaurent:
    """Heads product over the boxes of ``col`` given the column to its right."""
    framed = list(nxt) + [INF] * (len(col) - len(nxt))
    out = ONE
    for j, c in enumerate(col):
        h = [framed[k] for k in range(j + 1) if framed[k] >= c]
        if c not in h:
            out = out * one_minus_t_power(len(h))
    return out


def phi_columns(T: Tableau) -> list[HalfLaurent]:
    """``phi_{C_i}`` for each column, so that ``phi_T`` is their product."""
    _require_a(T)
    cols = T.columns
    return [_column_heads(c, cols[i + 1] if i + 1 < len(cols) else ()) for i, c in enumerate(cols)]


def phi_T_heads(T: Tableau) -> HalfLaurent:
    _require_a(T)
    T_hat = AugmentedTableau(T)
    out = ONE
    for (j, i), x in T_hat.boxes.items():
        if x != INF:
            out = out * T_hat.factor((j, i))
    return out


# ---- chain form -------------------------------------------------------------------
def _partition_from_rows(rows: Sequence[int]) -> tuple[int, ...]:
    return tuple(r for r in rows if r)


def _conj(part: Sequence[int]) -> list[int]:
    if not part:
        return []
    return [sum(1 for p in part if p > k) for k in range(part[0])]


def _m(part: Sequence[int], j: int) -> int:
    return sum(1 for p in part if p == j)


def lambda_chain(T: Tableau) -> list[tuple[int, ...]]:
    """``lambda^(0) <= ... <= lambda^(n+1)``; ``lambda^(i)`` holds the entries ``<= i``."""
    _require_a(T)
    top = T.datum.dimension
    rows = T.rows()
    return [
        _partition_from_rows([sum(1 for x in row if x <= i) for row in rows]) for i in range(top + 1)
    ]


def phi_skew(big: Sequence[int], small: Sequence[int]) -> HalfLaurent:
    """Horizontal-strip factor: ``1 - t**m_j(big)`` for every ``j`` where the strip ends."""
    cb, cs = _conj(big), _conj(small)
    width = len(cb) + 1
    theta = [(cb[k] if k < len(cb) else 0) - (cs[k] if k < len(cs) else 0) for k in range(width + 1)]
    out = ONE
    for j in range(1, width + 1):
        if theta[j - 1] > theta[j]:
            out = out * one_minus_t_power(_m(big, j))
    return out


def phi_T_chain(T: Tableau) -> HalfLaurent:
    chain = lambda_chain(T)
    out = ONE
    for small, big in zip(chain, chain[1:]):
        out = out * phi_skew(big, small)
    return out


# ---- normalisation ------------------------------------------------------------------
def _partition(datum: RootDatum, lam: Sequence) -> tuple[int, ...]:
    shape = Shape.from_eps(datum, lam)
    return _partition_from_rows(shape.rows)


def b_lambda(datum: RootDatum, lam: Sequence) -> HalfLaurent:
    part = _partition(datum, lam)
    out = ONE
    for i in range(1, (part[0] if part else 0) + 1):
        out = out * phi(_m(part, i))
    return out


def _column_weight(col: Column, datum: RootDatum):
    d = datum.dimension
    shape_part = [1 if k < len(col) else 0 for k in range(d)]
    return tuple(a + b for a, b in zip(shape_part, column_vector(col, d)))


def M_pair(left: Column, right: Column, datum: RootDatum) -> HalfLaurent:
    """``t**-<lambda_(i) + mu_(i), rho> phi_{C_i} / phi_{m_{i+1}(lambda)}``."""
    if len(right) > len(left):
        raise ValueError("column heights must weakly decrease")
    num = _column_heads(left, right)
    quot = num.exact_divide(phi(len(left) - len(right)))
    return _t_shift(quot, -pair(_column_weight(left, datum), datum.rho))


def M_last(col: Column, datum: RootDatum) -> HalfLaurent:
    return M_pair(col, (), datum)


def M_tableau(T: Tableau) -> HalfLaurent:
    _require_a(T)
    out = ONE
    cols = T.columns
    for i, c in enumerate(cols):
        out = out * M_pair(c, cols[i + 1] if i + 1 < len(cols) else (), T.datum)
    return out


def macdonald_c(T: Tableau) -> HalfLaurent:
    """``t**-<lambda+mu, rho> phi_T / b_lambda`` for one tableau."""
    _require_a(T)
    datum = T.datum
    lam = T.shape.lam
    mu = tuple(sum(1 for c in T.columns for x in c if x == k + 1) for k in range(datum.dimension))
    quot = phi_T_heads(T).exact_divide(b_lambda(datum, lam))
    lm = tuple(a + b for a, b in zip(lam, mu))
    return _t_shift(quot, -pair(lm, datum.rho))


def macdonald_L(datum: RootDatum, lam: Sequence, mu: Sequence) -> HalfLaurent:
    if datum.family != "A":
        raise ValueError("the Macdonald formula is implemented for type A only")
    lam, mu = vec(lam), vec(mu)
    for name, x in (("lambda", lam), ("mu", mu)):
        if len(x) != datum.dimension or not datum.is_coweight(x) or not datum.is_dominant(x):
            raise ValueError(f"{name} = {x} is not a dominant coweight of {datum}")
    shape = Shape.from_eps(datum, lam)
    total = ZERO
    for T in enumerate_ssyt(shape, mu):
        total = total + macdonald_c(T)
    return total


def macdonald_table(datum: RootDatum, lam: Sequence) -> dict:
    """Nonzero ``macdonald_L(lam, mu)`` keyed by dominant box-count content."""
    if datum.family != "A":
        raise ValueError("the Macdonald formula is implemented for type A only")
    shape = Shape.from_eps(datum, lam)
    table: dict = {}
    for T in enumerate_all_ssyt(shape):
        mu = content(T)
        if datum.is_dominant(mu):
            table[mu] = table.get(mu, ZERO) + macdonald_c(T)
    return dict(sorted(table.items(), reverse=True))
