"""Randomised exact check of ``L`` tables against the Weyl-group-sum definition of ``P_lambda``.

Points are ``x_i = y_i**2`` and ``q = v**2`` with small integers ``y_i`` and
``v``, so half-integral coweights still give integral exponents and all
arithmetic stays in ``Fraction``.
"""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .laurent import HalfLaurent
from .roots import RootDatum, Vector, pair, vec

MAX_ATTEMPTS = 100
SAMPLE_RANGE = (2, 17)


class SamplingError(RuntimeError):
    pass


class PoleError(ArithmeticError):
    pass


@dataclass(frozen=True)
class SamplePoint:
    y: tuple[Fraction, ...]
    v: Fraction

    def __post_init__(self):
        if any(c == 0 for c in self.y) or self.v == 0:
            raise ValueError("sample coordinates must be nonzero")

    @property
    def q(self) -> Fraction:
        return self.v * self.v

    def monomial(self, mu: Sequence) -> Fraction:
        """``x**mu`` with ``x = y**2``."""
        out = Fraction(1)
        for yi, m in zip(self.y, mu):
            e = 2 * Fraction(m)
            if e.denominator != 1:
                raise ValueError(f"exponent {m} is not a half-integer")
            out *= Fraction(yi) ** int(e)
        return out

    def to_dict(self) -> dict:
        return {"y": [str(c) for c in self.y], "v": str(self.v)}


def product_roots(datum: RootDatum) -> tuple[Vector, ...]:
    """Positive vectors ``a`` whose monomials ``x**-a`` enter the product."""
    return datum.positive_coroots


def is_pole_free(datum: RootDatum, point: SamplePoint) -> bool:
    return all(point.monomial(a) != 1 for a in product_roots(datum))


def sample_point(datum: RootDatum, rng: random.Random) -> SamplePoint:
    lo, hi = SAMPLE_RANGE
    for _ in range(MAX_ATTEMPTS):
        p = SamplePoint(
            tuple(Fraction(rng.randint(lo, hi)) for _ in range(datum.dimension)),
            Fraction(rng.randint(lo, hi)),
        )
        if is_pole_free(datum, p):
            return p
    raise SamplingError(f"no pole-free point after {MAX_ATTEMPTS} attempts")


def _weyl_images(datum: RootDatum, mu: Sequence) -> set[Vector]:
    mu = vec(mu)
    return {w(mu) for w in datum.weyl_group}


def monomial_eval(datum: RootDatum, mu: Sequence, point: SamplePoint) -> Fraction:
    return sum((point.monomial(nu) for nu in _weyl_images(datum, mu)), Fraction(0))


def poincare_eval(datum: RootDatum, lam: Sequence, q_inv: Fraction) -> Fraction:
    """``W_lambda(q**-1)``."""
    return sum((q_inv ** datum.length(w) for w in datum.stabilizer(lam)), Fraction(0))


def definitional_P_eval(datum: RootDatum, lam: Sequence, point: SamplePoint) -> Fraction:
    lam = vec(lam)
    q_inv = 1 / point.q
    roots = product_roots(datum)
    total = Fraction(0)
    for w in datum.weyl_group:
        term = point.monomial(w(lam))
        for a in roots:
            xa = 1 / point.monomial(w(a))
            if xa == 1:
                raise PoleError(f"pole at {point}")
            term *= (1 - q_inv * xa) / (1 - xa)
        total += term
    denom = poincare_eval(datum, lam, q_inv)
    if denom == 0:
        raise PoleError("W_lambda(q^-1) vanishes at this point")
    return total / denom


def expansion_eval(
    datum: RootDatum, lam: Sequence, table: Mapping[Sequence, HalfLaurent], point: SamplePoint
) -> Fraction:
    """``sum_mu q**-<lambda+mu, rho> L_{lambda,mu}(q) m_mu(x)`` at the point."""
    lam = vec(lam)
    total = Fraction(0)
    for mu, poly in table.items():
        mu = vec(mu)
        k = pair(tuple(a + b for a, b in zip(lam, mu)), datum.rho)
        e = -2 * k
        if e.denominator != 1:
            raise ValueError(f"normalising exponent {k} is not a half-integer")
        total += point.v ** int(e) * poly.eval(point.v) * monomial_eval(datum, mu, point)
    return total


@dataclass
class VerifyReport:
    family: str
    rank: int
    lam: list[str]
    passed: bool
    points: list[dict] = field(default_factory=list)
    failures: list[dict] = field(default_factory=list)
    seed: int | None = None

    def to_dict(self) -> dict:
        return asdict(self)


def verify(
    datum: RootDatum,
    lam: Sequence,
    table: Mapping[Sequence, HalfLaurent],
    k: int = 5,
    seed: int | None = 0,
) -> VerifyReport:
    """Compare both sides at ``k`` independent pole-free points."""
    if k < 1:
        raise ValueError("need at least one sample point")
    rng = random.Random(seed)
    lam = vec(lam)
    report = VerifyReport(datum.family, datum.rank, [str(c) for c in lam], True, seed=seed)
    for _ in range(k):
        point = sample_point(datum, rng)
        lhs = definitional_P_eval(datum, lam, point)
        rhs = expansion_eval(datum, lam, table, point)
        entry = point.to_dict()
        entry.update(definition=str(lhs), expansion=str(rhs))
        report.points.append(entry)
        if lhs != rhs:
            report.passed = False
            report.failures.append(entry)
    return report
