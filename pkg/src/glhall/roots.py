"""Root data, coweights and the finite Weyl group for types A_n, B_n, C_n.

Coweights live in epsilon coordinates as tuples of ``Fraction``.  The naming
follows the coweight side: in type B the simple coroots are ``e_i - e_{i+1}``
and ``e_n``, so the roots pairing with coweights are of the form
``e_i +- e_j`` and ``2 e_i``; type C is the other way round.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import permutations, product
from typing import Iterable, Sequence

Vector = tuple[Fraction, ...]

FAMILIES = ("A", "B", "C")


def vec(values: Iterable) -> Vector:
    return tuple(Fraction(v) for v in values)


def _unit(dim: int, i: int, scale=1) -> Vector:
    return tuple(Fraction(scale) if k == i else Fraction(0) for k in range(dim))


def _add(x: Sequence, y: Sequence) -> Vector:
    return tuple(Fraction(a) + b for a, b in zip(x, y))


def _sub(x: Sequence, y: Sequence) -> Vector:
    return tuple(Fraction(a) - b for a, b in zip(x, y))


def _is_positive(v: Sequence) -> bool:
    for c in v:
        if c:
            return c > 0
    return False


@dataclass(frozen=True)
class WeylElement:
    """Signed permutation: coordinate ``i`` is sent to ``perm[i]`` with sign ``signs[i]``."""

    perm: tuple[int, ...]
    signs: tuple[int, ...]

    def __call__(self, x: Sequence) -> Vector:
        out = [Fraction(0)] * len(self.perm)
        for i, (p, s) in enumerate(zip(self.perm, self.signs)):
            out[p] = s * Fraction(x[i])
        return tuple(out)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        # (self * other)(x) = self(other(x))
        perm = tuple(self.perm[p] for p in other.perm)
        signs = tuple(other.signs[i] * self.signs[other.perm[i]] for i in range(len(self.perm)))
        return WeylElement(perm, signs)

    def inverse(self) -> "WeylElement":
        n = len(self.perm)
        perm = [0] * n
        signs = [1] * n
        for i, (p, s) in enumerate(zip(self.perm, self.signs)):
            perm[p] = i
            signs[p] = s
        return WeylElement(tuple(perm), tuple(signs))

    def is_identity(self) -> bool:
        return self.perm == tuple(range(len(self.perm))) and all(s == 1 for s in self.signs)


@dataclass(frozen=True)
class RootDatum:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.rank < 1:
            raise ValueError("rank must be positive")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def dimension(self) -> int:
        return self.rank + 1 if self.family == "A" else self.rank

    # ---- simple data -------------------------------------------------
    @cached_property
    def simple_coroots(self) -> tuple[Vector, ...]:
        d, n = self.dimension, self.rank
        out = [_sub(_unit(d, i), _unit(d, i + 1)) for i in range(n if self.family == "A" else n - 1)]
        if self.family == "B":
            out.append(_unit(d, n - 1))
        elif self.family == "C":
            out.append(_unit(d, n - 1, 2))
        return tuple(out)

    @cached_property
    def simple_roots(self) -> tuple[Vector, ...]:
        d, n = self.dimension, self.rank
        out = [_sub(_unit(d, i), _unit(d, i + 1)) for i in range(n if self.family == "A" else n - 1)]
        if self.family == "B":
            out.append(_unit(d, n - 1, 2))
        elif self.family == "C":
            out.append(_unit(d, n - 1))
        return tuple(out)

    @cached_property
    def fundamental_coweights(self) -> tuple[Vector, ...]:
        d, n = self.dimension, self.rank
        out = []
        for i in range(1, n + 1):
            w = tuple(Fraction(1) if k < i else Fraction(0) for k in range(d))
            if self.family == "B" and i == n:
                w = tuple(Fraction(1, 2) for _ in range(d))
            out.append(w)
        return tuple(out)

    def _closure(self, long_scale: int) -> tuple[Vector, ...]:
        d = self.dimension
        out = []
        for i in range(d):
            for j in range(i + 1, d):
                out.append(_sub(_unit(d, i), _unit(d, j)))
        if self.family != "A":
            for i in range(d):
                for j in range(i + 1, d):
                    out.append(_add(_unit(d, i), _unit(d, j)))
            for i in range(d):
                out.append(_unit(d, i, long_scale))
        return tuple(out)

    @cached_property
    def positive_roots(self) -> tuple[Vector, ...]:
        """Positive roots, i.e. the linear forms that coweights pair against."""
        return self._closure(2 if self.family == "B" else 1)

    @cached_property
    def positive_coroots(self) -> tuple[Vector, ...]:
        return self._closure(1 if self.family == "B" else 2)

    @cached_property
    def rho(self) -> Vector:
        total = [Fraction(0)] * self.dimension
        for a in self.positive_roots:
            total = list(_add(total, a))
        return tuple(c / 2 for c in total)

    # ---- coweights ---------------------------------------------------
    def canonical(self, x: Sequence) -> Vector:
        x = vec(x)
        if len(x) != self.dimension:
            raise ValueError(f"expected {self.dimension} coordinates for {self}, got {len(x)}")
        if self.family == "A":
            return tuple(c - x[-1] for c in x)
        return x

    def is_coweight(self, x: Sequence) -> bool:
        x = vec(x)
        if len(x) != self.dimension:
            return False
        dens = {c.denominator for c in x}
        if self.family == "B":
            return dens == {1} or dens == {2}
        return dens == {1}

    def is_dominant(self, x: Sequence) -> bool:
        return all(pair(x, a) >= 0 for a in self.simple_roots)

    def omega_to_eps(self, coeffs: Sequence[int]) -> Vector:
        if len(coeffs) != self.rank or any(int(a) != a or a < 0 for a in coeffs):
            raise ValueError(f"need {self.rank} nonnegative integer omega coefficients")
        out = [Fraction(0)] * self.dimension
        for a, w in zip(coeffs, self.fundamental_coweights):
            out = [o + a * c for o, c in zip(out, w)]
        return tuple(out)

    def eps_to_omega(self, x: Sequence) -> tuple[int, ...]:
        x = self.canonical(x)
        if not self.is_coweight(x):
            raise ValueError(f"{tuple(map(str, x))} is not a coweight of {self}")
        coeffs = [pair(x, a) for a in self.simple_roots]
        if any(c < 0 or c.denominator != 1 for c in coeffs):
            raise ValueError(f"{tuple(map(str, x))} is not dominant for {self}")
        return tuple(int(c) for c in coeffs)

    # ---- Weyl group --------------------------------------------------
    def identity(self) -> WeylElement:
        d = self.dimension
        return WeylElement(tuple(range(d)), (1,) * d)

    @cached_property
    def simple_reflections(self) -> tuple[WeylElement, ...]:
        d, n = self.dimension, self.rank
        out = []
        for i in range(n if self.family == "A" else n - 1):
            perm = list(range(d))
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
            out.append(WeylElement(tuple(perm), (1,) * d))
        if self.family != "A":
            signs = [1] * d
            signs[-1] = -1
            out.append(WeylElement(tuple(range(d)), tuple(signs)))
        return tuple(out)

    @cached_property
    def weyl_group(self) -> tuple[WeylElement, ...]:
        d = self.dimension
        if self.family == "A":
            return tuple(WeylElement(p, (1,) * d) for p in permutations(range(d)))
        return tuple(
            WeylElement(p, s) for p in permutations(range(d)) for s in product((1, -1), repeat=d)
        )

    def length(self, w: WeylElement) -> int:
        return sum(1 for a in self.positive_roots if not _is_positive(w(a)))

    @cached_property
    def longest_element(self) -> WeylElement:
        return max(self.weyl_group, key=self.length)

    def orbit(self, lam: Sequence) -> list[Vector]:
        lam = self.canonical(lam)
        if not self.is_dominant(lam):
            raise ValueError("orbit expects a dominant coweight")
        seen = {}
        for w in self.weyl_group:
            seen.setdefault(self.canonical(w(lam)), None)
        return sorted(seen, reverse=True)

    def stabilizer(self, lam: Sequence) -> list[WeylElement]:
        lam = self.canonical(lam)
        return [w for w in self.weyl_group if self.canonical(w(lam)) == lam]

    def stabilizer_poly(self, lam: Sequence) -> dict[int, int]:
        """Coefficients of ``sum_{w(lam)=lam} t^{l(w)}`` as ``{degree: count}``."""
        lam = self.canonical(lam)
        if not self.is_dominant(lam):
            raise ValueError("stabilizer_poly expects a dominant coweight")
        out: dict[int, int] = {}
        for w in self.stabilizer(lam):
            k = self.length(w)
            out[k] = out.get(k, 0) + 1
        return dict(sorted(out.items()))


def pair(x: Sequence, y: Sequence) -> Fraction:
    if len(x) != len(y):
        raise ValueError(f"dimension mismatch: {len(x)} vs {len(y)}")
    return sum((Fraction(a) * b for a, b in zip(x, y)), Fraction(0))


def weyl_length(datum: RootDatum, w: WeylElement) -> int:
    return datum.length(w)


def positive_roots(datum: RootDatum) -> tuple[Vector, ...]:
    return datum.positive_roots


def rho(datum: RootDatum) -> Vector:
    return datum.rho


def apply(w: WeylElement, x: Sequence) -> Vector:
    return w(x)


def weyl_orbit(datum: RootDatum, lam: Sequence) -> list[Vector]:
    return datum.orbit(lam)


def stabilizer_poly(datum: RootDatum, lam: Sequence) -> dict[int, int]:
    return datum.stabilizer_poly(lam)
