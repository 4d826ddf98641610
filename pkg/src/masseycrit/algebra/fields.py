"""Exact coefficient fields: prime fields F_p and the rationals.

Elements are plain Python objects: ``int`` in ``[0, p)`` for F_p and
:class:`fractions.Fraction` for Q.  All arithmetic goes through a
:class:`Field` instance so that code above this layer never needs to know
which kind it is working with.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class Field:
    """A prime field (``p`` prime) or the rationals (``p == 0``)."""

    p: int = 0

    def __post_init__(self):
        if self.p != 0 and not _is_prime(self.p):
            raise ValueError(f"F_{self.p}: modulus is not prime")

    # construction -------------------------------------------------------
    @classmethod
    def parse(cls, text: str) -> "Field":
        """Parse ``Q`` or ``F<p>`` (e.g. ``F2``, ``F101``)."""
        t = text.strip()
        if t in ("Q", "QQ", "q"):
            return cls(0)
        if t[:1] in ("F", "f") and t[1:].isdigit():
            return cls(int(t[1:]))
        raise ValueError(f"unknown field {text!r}; expected Q or F<p>")

    @property
    def is_prime_field(self) -> bool:
        return self.p != 0

    @property
    def characteristic(self) -> int:
        return self.p

    def __str__(self) -> str:
        return f"F{self.p}" if self.p else "Q"

    # elements -----------------------------------------------------------
    @property
    def zero(self):
        return 0 if self.p else Fraction(0)

    @property
    def one(self):
        return 1 if self.p else Fraction(1)

    def __call__(self, x):
        """Canonical image of an integer or rational in the field."""
        if self.p:
            if isinstance(x, Fraction):
                return self.div(x.numerator % self.p, x.denominator % self.p)
            return int(x) % self.p
        return Fraction(x)

    def add(self, a, b):
        return (a + b) % self.p if self.p else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.p else a - b

    def neg(self, a):
        return (-a) % self.p if self.p else -a

    def mul(self, a, b):
        return (a * b) % self.p if self.p else a * b

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        if self.p:
            return pow(a, -1, self.p)
        return 1 / a

    def div(self, a, b):
        if not b:
            raise ZeroDivisionError("division by zero")
        if self.p:
            return (a * pow(b, -1, self.p)) % self.p
        return a / b

    def pow(self, a, n: int):
        if n < 0:
            return self.pow(self.inv(a), -n)
        return pow(a, n, self.p) if self.p else a**n

    # text i/o -----------------------------------------------------------
    def parse_elem(self, text: str):
        """Integers for F_p; integers or ``a/b`` for Q (``a/b`` also accepted in F_p)."""
        return self(Fraction(text.strip()))

    def format_elem(self, a) -> str:
        if self.p:
            return str(a)
        a = Fraction(a)
        return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"

    def to_json(self, a):
        return a if self.p else self.format_elem(a)


QQ = Field(0)
F2 = Field(2)
