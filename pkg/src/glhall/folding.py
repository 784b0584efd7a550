"""Column-pair folding trees and the tableau sum for ``L_{lambda,mu}(q)``.

``c_pair`` and ``c_last`` run on the rank-encoded kernel (compiled when
available).  :class:`FoldingTree` is the same construction materialised in
Python on top of :mod:`glhall.residue`, for inspection, DOT export and for
trying alternative reflection choosers.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Sequence

from . import kernel
from .laurent import ONE, ZERO, HalfLaurent
from .residue import (
    DECREASES,
    INCREASES,
    ReflectionSpec,
    apply_to_column,
    check_compatible,
    classify,
    reflections_for,
)
from .roots import RootDatum, Vector, vec
from .tableaux import (
    Column,
    Shape,
    Tableau,
    VertexContext,
    content,
    enumerate_all_ssyt,
    enumerate_ssyt,
    is_semistandard,
    letter_str,
    make_column,
    rows_weakly_increase,
    vertex_context,
)

DEFAULT_PATH_GUARD = 1_000_000

Q_MINUS_ONE = HalfLaurent({2: 1, 0: -1})
Q_POLY = HalfLaurent({2: 1})

Chooser = Callable[[Column, Sequence[ReflectionSpec]], ReflectionSpec]


class InvariantViolation(RuntimeError):
    """A computed quantity broke a property the construction guarantees."""


def path_guard() -> int:
    raw = os.environ.get("HL_PATH_GUARD")
    if not raw:
        return DEFAULT_PATH_GUARD
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"HL_PATH_GUARD must be an integer, got {raw!r}") from exc
    if value < 1:
        raise ValueError("HL_PATH_GUARD must be positive")
    return value


# ---- rank encoding for the kernel --------------------------------------------
def _rank_size(family: str, rank: int) -> int:
    return rank + 1 if family == "A" else 2 * rank


def _encode(x: int, family: str, rank: int) -> int:
    if x > 0:
        return x
    return 2 * rank + 1 + x


def _encode_column(col: Column, family: str, rank: int) -> tuple[int, ...]:
    return tuple(_encode(x, family, rank) for x in col)


@lru_cache(maxsize=None)
def _tables(context: VertexContext) -> tuple[tuple[int, ...], ...]:
    fam, n = context.family, context.rank
    size = _rank_size(fam, n)
    letters = list(range(1, size + 1)) if fam == "A" else list(range(1, n + 1)) + list(range(-n, 0))
    out = []
    for s in reflections_for(context):
        table = [0] * (size + 1)
        for x in letters:
            table[_encode(x, fam, n)] = _encode(s(x), fam, n)
        out.append(tuple(table))
    return tuple(out)


def _stats_to_poly(stats: dict[tuple[int, int], int]) -> HalfLaurent:
    total = ZERO
    for (pr, pf), count in stats.items():
        total = total + HalfLaurent.const(count) * Q_POLY**pr * Q_MINUS_ONE**pf
    return total


def _check_pair(left: Column, right: Column, context: VertexContext) -> None:
    if not rows_weakly_increase(left, right):
        raise ValueError(f"pair ({_fmt(left)}, {_fmt(right)}) is not semistandard")
    if not context.special:
        check_compatible(reflections_for(context)[0], left)


# ---- column values --------------------------------------------------------------
def last_steps(col: Column, datum: RootDatum) -> int:
    ctx = VertexContext.special_for(datum)
    return kernel.greedy_steps(_encode_column(make_column(col), datum.family, datum.rank), _tables(ctx))


def c_last(col: Column, datum: RootDatum) -> HalfLaurent:
    """``q**k`` for the number ``k`` of greedy increasing steps at the special vertex."""
    return Q_POLY ** last_steps(col, datum)


@lru_cache(maxsize=65536)
def _pair_stats(left: Column, right: Column, context: VertexContext, guard: int):
    fam, n = context.family, context.rank
    return kernel.path_stats(
        _encode_column(left, fam, n), _encode_column(right, fam, n), _tables(context), guard
    )


def pair_stats(left: Column, right: Column, context: VertexContext) -> dict[tuple[int, int], int]:
    """Histogram of ``(pr, pf)`` over root-to-leaf paths."""
    left, right = make_column(left), make_column(right)
    _check_pair(left, right, context)
    return dict(_pair_stats(left, right, context, path_guard()))


def c_pair(left: Column, right: Column, context: VertexContext) -> HalfLaurent:
    """Sum of ``q**pr * (q-1)**pf`` over the folding tree of ``(left, right)``."""
    return _stats_to_poly(pair_stats(left, right, context))


# ---- materialised trees -----------------------------------------------------------
def first_increasing(col: Column, candidates: Sequence[ReflectionSpec]) -> ReflectionSpec:
    return candidates[0]


@dataclass
class TreeNode:
    left: Column
    right: Column
    final: bool = False
    reflection: ReflectionSpec | None = None
    children: list["TreeEdge"] = field(default_factory=list)

    def text(self) -> str:
        return f"{_fmt(self.left)} | {_fmt(self.right)}"


@dataclass
class TreeEdge:
    label: str
    reflection: ReflectionSpec
    child: TreeNode

    @property
    def kind(self) -> str:
        """``"s+"``, ``"s-"`` or ``"id+"``."""
        return ("id" if self.label.startswith("id") else "s") + self.label[-1]


def _fmt(col: Column) -> str:
    return "{" + ",".join(letter_str(x) for x in col) + "}"


class FoldingTree:
    """The labelled tree of two-column tableaux rooted at ``(left, right)``.

    ``chooser`` picks one increasing reflection among the candidates offered
    for a left column; it is consulted once per distinct left column.
    """

    def __init__(
        self,
        left: Column,
        right: Column,
        context: VertexContext,
        chooser: Chooser = first_increasing,
        guard: int | None = None,
    ):
        self.context = context
        self.guard = path_guard() if guard is None else guard
        left, right = make_column(left), make_column(right)
        _check_pair(left, right, context)
        self._refls = reflections_for(context)
        self._chooser = chooser
        self._choice: dict[Column, ReflectionSpec | None] = {}
        self._nodes = 0
        self.root = self._build(left, right)

    def candidates(self, col: Column) -> list[ReflectionSpec]:
        return [s for s in self._refls if classify(s, col) == INCREASES]

    def choice(self, col: Column) -> ReflectionSpec | None:
        if col not in self._choice:
            cands = self.candidates(col)
            pick = self._chooser(col, cands) if cands else None
            if pick is not None and pick not in cands:
                raise InvariantViolation(f"chooser returned a non-increasing reflection for {_fmt(col)}")
            self._choice[col] = pick
        return self._choice[col]

    def _build(self, left: Column, right: Column) -> TreeNode:
        self._nodes += 1
        if self._nodes > self.guard:
            raise kernel.PathGuardExceeded(f"folding tree exceeds {self.guard} nodes")
        node = TreeNode(left, right)
        s = self.choice(left)
        if s is None:
            node.final = True
            return node
        node.reflection = s
        L2 = apply_to_column(s, left, check=False)
        R2 = apply_to_column(s, right, check=False)
        name = s.name
        if rows_weakly_increase(L2, R2):
            if classify(s, right) == DECREASES:
                node.children.append(TreeEdge(f"s{name}-", s, self._build(L2, R2)))
                node.children.append(TreeEdge(f"id{name}+", s, self._id_child(L2, right)))
            else:
                node.children.append(TreeEdge(f"s{name}+", s, self._build(L2, R2)))
        else:
            node.children.append(TreeEdge(f"id{name}+", s, self._id_child(L2, right)))
        return node

    def _id_child(self, L2: Column, right: Column) -> TreeNode:
        if not rows_weakly_increase(L2, right):
            raise kernel.KernelError(f"id child ({_fmt(L2)}, {_fmt(right)}) is not semistandard")
        return self._build(L2, right)

    # ---- traversal ----
    def nodes(self) -> list[TreeNode]:
        out, stack = [], [self.root]
        while stack:
            node = stack.pop()
            out.append(node)
            stack.extend(e.child for e in reversed(node.children))
        return out

    def edges(self) -> list[tuple[TreeNode, TreeEdge]]:
        return [(n, e) for n in self.nodes() for e in n.children]

    def leaves(self) -> list[TreeNode]:
        return [n for n in self.nodes() if n.final]

    def paths(self) -> list[list[TreeEdge]]:
        out: list[list[TreeEdge]] = []

        def walk(node, acc):
            if node.final:
                out.append(list(acc))
                return
            for e in node.children:
                acc.append(e)
                walk(e.child, acc)
                acc.pop()

        walk(self.root, [])
        return out

    def path_stats(self) -> dict[tuple[int, int], int]:
        hist: dict[tuple[int, int], int] = {}
        for p in self.paths():
            pr = sum(1 for e in p if e.kind == "s+")
            pf = sum(1 for e in p if e.kind == "id+")
            hist[(pr, pf)] = hist.get((pr, pf), 0) + 1
        return hist

    def polynomial(self) -> HalfLaurent:
        return _stats_to_poly(self.path_stats())

    def to_dot(self, name: str = "folding") -> str:
        ids: dict[int, str] = {}
        lines = [f"digraph {name} {{", "  node [shape=box];"]
        for k, node in enumerate(self.nodes()):
            ids[id(node)] = f"n{k}"
            extra = ", peripheries=2" if node.final else ""
            lines.append(f'  n{k} [label="{node.text()}"{extra}];')
        for parent, edge in self.edges():
            lines.append(f'  {ids[id(parent)]} -> {ids[id(edge.child)]} [label="{edge.label}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_tree(left: Column, right: Column, context: VertexContext, chooser: Chooser = first_increasing) -> FoldingTree:
    return FoldingTree(left, right, context, chooser)


# ---- tableaux ------------------------------------------------------------------
def c_tableau(T: Tableau) -> HalfLaurent:
    if not is_semistandard(T):
        raise ValueError("c(T) needs a semistandard tableau")
    if not T.columns:
        return ONE
    out = c_last(T.columns[-1], T.datum)
    for i in range(T.r):
        out = out * c_pair(T.columns[i], T.columns[i + 1], vertex_context(T, i))
    return out


def _as_q_polynomial(poly: HalfLaurent, what: str) -> HalfLaurent:
    if not poly.is_q_polynomial():
        raise InvariantViolation(f"{what} = {poly} is not a polynomial in q")
    return poly


def _dominant(datum: RootDatum, x: Sequence, what: str) -> Vector:
    x = vec(x)
    if len(x) != datum.dimension:
        raise ValueError(f"{what} has {len(x)} coordinates, expected {datum.dimension}")
    if not datum.is_coweight(x):
        raise ValueError(f"{what} = {x} is not a coweight of {datum}")
    if not datum.is_dominant(x):
        raise ValueError(f"{what} = {x} is not dominant")
    return x


def L_poly(datum: RootDatum, lam: Sequence, mu: Sequence) -> HalfLaurent:
    """``L_{lambda,mu}(q)`` as a sum of ``c(T)`` over ``SSYT(lambda, mu)``."""
    lam = _dominant(datum, lam, "lambda")
    mu = _dominant(datum, mu, "mu")
    shape = Shape.from_eps(datum, lam)
    total = ZERO
    for T in enumerate_ssyt(shape, mu):
        total = total + c_tableau(T)
    return _as_q_polynomial(total, f"L_{{{lam},{mu}}}")


def L_table(datum: RootDatum, lam: Sequence) -> dict[Vector, HalfLaurent]:
    """Every nonzero ``L_{lambda,mu}`` keyed by the dominant content ``mu``.

    Type A keys are box-count contents, so they sum to ``|lambda|``.
    """
    lam = _dominant(datum, lam, "lambda")
    shape = Shape.from_eps(datum, lam)
    table: dict[Vector, HalfLaurent] = {}
    for T in enumerate_all_ssyt(shape):
        mu = content(T)
        if not datum.is_dominant(mu):
            continue
        table[mu] = table.get(mu, ZERO) + c_tableau(T)
    for mu, poly in table.items():
        _as_q_polynomial(poly, f"L_{{{lam},{mu}}}")
    return dict(sorted(table.items(), reverse=True))


# ---- alternative choosers --------------------------------------------------------------
class _Undecided(Exception):
    def __init__(self, col, candidates):
        self.col = col
        self.candidates = candidates


def chooser_variants(left: Column, right: Column, context: VertexContext):
    """Yield ``(assignment, polynomial)`` for every admissible per-left-column chooser.

    Only left columns that actually occur in the tree are assigned, so each
    distinct tree is produced exactly once.
    """
    pending: list[dict[Column, ReflectionSpec]] = [{}]
    while pending:
        fixed = pending.pop()

        def chooser(col, cands, fixed=fixed):
            if col not in fixed:
                raise _Undecided(col, list(cands))
            return fixed[col]

        try:
            tree = FoldingTree(left, right, context, chooser)
        except _Undecided as need:
            for s in reversed(need.candidates):
                pending.append({**fixed, need.col: s})
            continue
        yield fixed, tree.polynomial()


def last_step_counts(col: Column, datum: RootDatum) -> set[int]:
    """Lengths of every maximal chain of increasing special reflections from ``col``."""
    refls = reflections_for(VertexContext.special_for(datum))
    memo: dict[Column, frozenset[int]] = {}

    def rec(c):
        if c not in memo:
            ups = [s for s in refls if classify(s, c) == INCREASES]
            if not ups:
                memo[c] = frozenset({0})
            else:
                memo[c] = frozenset(k + 1 for s in ups for k in rec(apply_to_column(s, c, check=False)))
        return memo[c]

    return set(rec(make_column(col)))
