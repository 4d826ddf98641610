"""Elements ``f(s) / (1+s)**e`` of the localisation of k[s] at ``s = 0``.

Only (1+s)-power denominators are ever needed: the deformation complex
has entries ``(1+s)**k`` with ``k`` an integer edge weight.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import poly as P
from .fields import Field


@dataclass(frozen=True)
class LocalRingElem:
    field: Field
    numerator: P.Poly = ()
    den_exp: int = 0

    def __post_init__(self):
        num, e = P.trim(self.numerator), self.den_exp
        if e < 0:
            num, e = P.mul(self.field, num, P.one_plus_s_pow(self.field, -e)), 0
        if not num:
            e = 0
        one_plus_s = P.one_plus_s_pow(self.field, 1)
        while e and P.divisible_by_one_plus_s(self.field, num):
            num = P.exact_div(self.field, num, one_plus_s)
            e -= 1
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "den_exp", e)

    # constructors -------------------------------------------------------
    @classmethod
    def const(cls, F: Field, a) -> "LocalRingElem":
        return cls(F, P.const(F, a))

    @classmethod
    def monodromy(cls, F: Field, k: int) -> "LocalRingElem":
        """``(1+s)**k`` for any integer ``k``."""
        if k >= 0:
            return cls(F, P.one_plus_s_pow(F, k))
        return cls(F, P.const(F, 1), -k)

    # queries ------------------------------------------------------------
    def valuation(self):
        """s-adic valuation, ``inf`` for zero."""
        return P.valuation(self.numerator)

    def is_zero(self) -> bool:
        return not self.numerator

    def is_unit(self) -> bool:
        return self.valuation() == 0

    def at_zero(self):
        """Specialisation ``s = 0`` (the denominator is 1 there)."""
        return self.numerator[0] if self.numerator else self.field.zero

    def series(self, order: int) -> P.Poly:
        """Power-series coefficients below ``s**order``."""
        inv = P.inv_one_plus_s_series(self.field, self.den_exp, order)
        return P.mul(self.field, self.numerator, inv)[:order]

    # arithmetic ---------------------------------------------------------
    def _common(self, other: "LocalRingElem"):
        F = self.field
        e = max(self.den_exp, other.den_exp)
        a = P.mul(F, self.numerator, P.one_plus_s_pow(F, e - self.den_exp))
        b = P.mul(F, other.numerator, P.one_plus_s_pow(F, e - other.den_exp))
        return a, b, e

    def __add__(self, other):
        other = self._coerce(other)
        a, b, e = self._common(other)
        return LocalRingElem(self.field, P.add(self.field, a, b), e)

    __radd__ = __add__

    def __neg__(self):
        return LocalRingElem(self.field, P.neg(self.field, self.numerator), self.den_exp)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        return LocalRingElem(
            self.field,
            P.mul(self.field, self.numerator, other.numerator),
            self.den_exp + other.den_exp,
        )

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, LocalRingElem):
            try:
                other = self._coerce(other)
            except TypeError:
                return NotImplemented
        return (self.numerator, self.den_exp) == (other.numerator, other.den_exp)

    def __hash__(self):
        return hash((self.numerator, self.den_exp))

    def __bool__(self):
        return bool(self.numerator)

    def _coerce(self, x) -> "LocalRingElem":
        if isinstance(x, LocalRingElem):
            return x
        if isinstance(x, int) or hasattr(x, "denominator"):
            return LocalRingElem.const(self.field, x)
        raise TypeError(f"cannot combine LocalRingElem with {type(x).__name__}")

    def __repr__(self):
        num = P.to_str(self.field, self.numerator)
        if self.den_exp == 0:
            return f"LocalRingElem({num})"
        return f"LocalRingElem(({num}) / (1+s)^{self.den_exp})"


def local_valuation(x: LocalRingElem):
    return x.valuation()
