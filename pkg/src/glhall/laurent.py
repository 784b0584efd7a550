"""Sparse Laurent polynomials in ``v`` with ``v**2 = q`` and ``t = 1/q = v**-2``."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping


class NotDivisible(ArithmeticError):
    pass


class HalfLaurent:
    """Immutable integer Laurent polynomial in ``v``, stored as ``{exponent: coeff}``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            if int(e) != e or int(c) != c:
                raise TypeError("exponents and coefficients must be integers")
            acc[int(e)] = acc.get(int(e), 0) + int(c)
        self._terms = tuple(sorted((e, c) for e, c in acc.items() if c))
        self._hash = None

    # ---- constructors --------------------------------------------------
    @classmethod
    def const(cls, c: int) -> "HalfLaurent":
        return cls({0: c})

    @classmethod
    def v_monomial(cls, e: int, c: int = 1) -> "HalfLaurent":
        return cls({e: c})

    @classmethod
    def q_monomial(cls, e: int, c: int = 1) -> "HalfLaurent":
        return cls({2 * e: c})

    @classmethod
    def t_monomial(cls, e: int, c: int = 1) -> "HalfLaurent":
        return cls({-2 * e: c})

    @classmethod
    def from_q(cls, coeffs: Iterable[int]) -> "HalfLaurent":
        """From a coefficient list ``[c0, c1, ...]`` of a polynomial in q."""
        return cls({2 * i: c for i, c in enumerate(coeffs)})

    @classmethod
    def from_t(cls, coeffs: Iterable[int]) -> "HalfLaurent":
        return cls({-2 * i: c for i, c in enumerate(coeffs)})

    @classmethod
    def from_pairs(cls, pairs: Iterable[Iterable[int]]) -> "HalfLaurent":
        return cls((e, c) for e, c in pairs)

    # ---- inspection ----------------------------------------------------
    @property
    def terms(self) -> tuple[tuple[int, int], ...]:
        return self._terms

    def as_dict(self) -> dict[int, int]:
        return dict(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def min_exp(self) -> int:
        return self._terms[0][0] if self._terms else 0

    @property
    def max_exp(self) -> int:
        return self._terms[-1][0] if self._terms else 0

    @property
    def leading_coeff(self) -> int:
        return self._terms[-1][1] if self._terms else 0

    def is_q_polynomial(self) -> bool:
        return all(e >= 0 and e % 2 == 0 for e, _ in self._terms)

    def q_coeffs(self) -> list[int]:
        """Dense coefficient list in q; requires even nonnegative exponents."""
        if not self.is_q_polynomial():
            raise ValueError(f"{self} is not a polynomial in q")
        if not self._terms:
            return []
        out = [0] * (self.max_exp // 2 + 1)
        for e, c in self._terms:
            out[e // 2] = c
        return out

    def q_pairs(self) -> list[list[int]]:
        if any(e % 2 for e, _ in self._terms):
            raise ValueError(f"{self} has odd powers of v")
        return [[e // 2, c] for e, c in self._terms]

    def pairs(self) -> list[list[int]]:
        return [[e, c] for e, c in self._terms]

    # ---- ring operations -------------------------------------------------
    @staticmethod
    def _coerce(other) -> "HalfLaurent":
        if isinstance(other, HalfLaurent):
            return other
        if isinstance(other, int):
            return HalfLaurent.const(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    def __neg__(self) -> "HalfLaurent":
        return HalfLaurent((e, -c) for e, c in self._terms)

    def __add__(self, other) -> "HalfLaurent":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return HalfLaurent(self._terms + other._terms)

    __radd__ = __add__

    def __sub__(self, other) -> "HalfLaurent":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "HalfLaurent":
        return (-self) + other

    def __mul__(self, other) -> "HalfLaurent":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc: dict[int, int] = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return HalfLaurent(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "HalfLaurent":
        if k < 0:
            if len(self._terms) != 1 or abs(self._terms[0][1]) != 1:
                raise ValueError("negative powers only for unit monomials")
            e, c = self._terms[0]
            return HalfLaurent({e * k: c ** (-k)})
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> "HalfLaurent":
        """Multiply by ``v**k``."""
        return HalfLaurent((e + k, c) for e, c in self._terms)

    def exact_divide(self, other: "HalfLaurent") -> "HalfLaurent":
        """Quotient ``c`` with ``c * other == self``; raises ``NotDivisible`` otherwise."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return ZERO
        rem = dict(self._terms)
        d_terms = other._terms
        d_lo, d_lc = d_terms[0]
        quot: dict[int, int] = {}
        span = other.max_exp - d_lo
        # eliminate from the lowest exponent upward
        while rem:
            lo = min(rem)
            if rem[lo] % d_lc:
                raise NotDivisible(f"{self} is not divisible by {other}")
            if max(rem) - lo < span:
                raise NotDivisible(f"{self} is not divisible by {other}")
            k = rem[lo] // d_lc
            e = lo - d_lo
            quot[e] = k
            for de, dc in d_terms:
                x = rem.get(de + e, 0) - k * dc
                if x:
                    rem[de + e] = x
                else:
                    rem.pop(de + e, None)
        return HalfLaurent(quot)

    def __floordiv__(self, other) -> "HalfLaurent":
        return self.exact_divide(self._coerce(other))

    # ---- evaluation ------------------------------------------------------
    def eval(self, v0) -> Fraction:
        v0 = Fraction(v0)
        if v0 == 0:
            raise ZeroDivisionError("evaluation at v = 0")
        return sum((c * v0 ** e for e, c in self._terms), Fraction(0))

    def substitute_q(self, q0) -> Fraction:
        q0 = Fraction(q0)
        if any(e % 2 for e, _ in self._terms):
            raise ValueError("odd power of v; substitute_q needs a Laurent polynomial in q")
        if q0 == 0:
            raise ZeroDivisionError("evaluation at q = 0")
        return sum((c * q0 ** (e // 2) for e, c in self._terms), Fraction(0))

    # ---- display ---------------------------------------------------------
    def __repr__(self) -> str:
        return f"HalfLaurent({dict(self._terms)!r})"

    def __str__(self) -> str:
        return self.to_str()

    def to_str(self) -> str:
        if not self._terms:
            return "0"
        in_q = all(e % 2 == 0 for e, _ in self._terms)
        var = "q" if in_q else "v"
        parts = []
        for e, c in reversed(self._terms):
            k = e // 2 if in_q else e
            if k == 0:
                mono = str(abs(c))
            else:
                power = var if k == 1 else f"{var}^{k}"
                mono = power if abs(c) == 1 else f"{abs(c)}*{power}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, mono))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, mono in parts[1:]:
            out += f" {sign} {mono}"
        return out


ZERO = HalfLaurent()
ONE = HalfLaurent.const(1)
V = HalfLaurent.v_monomial(1)
Q = HalfLaurent.q_monomial(1)
T = HalfLaurent.t_monomial(1)


def one_minus_t_power(k: int) -> HalfLaurent:
    """``1 - t**k``."""
    return HalfLaurent({0: 1, -2 * k: -1})


def phi(k: int) -> HalfLaurent:
    """``(1-t)(1-t^2)...(1-t^k)``; ``phi(0) == 1``."""
    out = ONE
    for i in range(1, k + 1):
        out = out * one_minus_t_power(i)
    return out
