"""Exact scalars: arbitrary-precision rationals and odd prime fields.

Every computation fixes one field context up front.  All structure
constants and matrix entries are produced through that context, so mixed
arithmetic between different fields never occurs.  Rational scalars are
plain ``fractions.Fraction`` values; prime-field scalars are
``PrimeFieldElement`` wrappers that interoperate with Python ints.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union


class FieldError(ValueError):
    """Invalid field parameter, or a scalar that does not embed."""


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n: int) -> bool:
    # Deterministic Miller-Rabin; the base set covers n < 3.3e24.
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class PrimeFieldElement:
    """Residue in F_p with exact field arithmetic.

    Ints mix freely (they are reduced mod p); elements of a different
    modulus raise instead of silently coercing.
    """

    __slots__ = ("residue", "modulus")

    def __init__(self, residue: int, modulus: int):
        object.__setattr__(self, "residue", residue % modulus)
        object.__setattr__(self, "modulus", modulus)

    def __setattr__(self, name, value):
        raise AttributeError("PrimeFieldElement is immutable")

    def _coerce(self, other) -> "PrimeFieldElement":
        if isinstance(other, PrimeFieldElement):
            if other.modulus != self.modulus:
                raise FieldError(
                    f"mixed moduli {self.modulus} and {other.modulus}"
                )
            return other
        if isinstance(other, int):
            return PrimeFieldElement(other, self.modulus)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return PrimeFieldElement(self.residue + o.residue, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return PrimeFieldElement(self.residue - o.residue, self.modulus)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return PrimeFieldElement(o.residue - self.residue, self.modulus)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return PrimeFieldElement(self.residue * o.residue, self.modulus)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if o.residue == 0:
            raise ZeroDivisionError("division by zero in prime field")
        inv = pow(o.residue, -1, self.modulus)
        return PrimeFieldElement(self.residue * inv, self.modulus)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o / self

    def __neg__(self):
        return PrimeFieldElement(-self.residue, self.modulus)

    def __pow__(self, exponent: int):
        if exponent < 0:
            return PrimeFieldElement(1, self.modulus) / self ** (-exponent)
        return PrimeFieldElement(
            pow(self.residue, exponent, self.modulus), self.modulus
        )

    def __eq__(self, other):
        if isinstance(other, PrimeFieldElement):
            if other.modulus != self.modulus:
                raise FieldError(
                    f"mixed moduli {self.modulus} and {other.modulus}"
                )
            return self.residue == other.residue
        if isinstance(other, int):
            return self.residue == other % self.modulus
        return NotImplemented

    def __hash__(self):
        return hash((self.residue, self.modulus))

    def __bool__(self):
        return self.residue != 0

    def __repr__(self):
        return f"{self.residue} (mod {self.modulus})"


Scalar = Union[Fraction, PrimeFieldElement]


class RationalField:
    """The rational numbers; scalars are ``Fraction`` values."""

    name = "rational"
    characteristic = 0

    def __call__(self, value) -> Fraction:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, str):
            try:
                return Fraction(value.strip())
            except (ValueError, ZeroDivisionError) as exc:
                raise FieldError(f"cannot parse rational scalar {value!r}") from exc
        if isinstance(value, PrimeFieldElement):
            raise FieldError("prime-field scalar does not embed into the rationals")
        raise FieldError(f"cannot coerce {value!r} to a rational scalar")

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rational-field")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """The field F_p for an odd prime p (characteristic 2 is rejected)."""

    def __init__(self, p: int):
        if p == 2:
            raise FieldError("characteristic 2 is not supported")
        if not _is_prime(p):
            raise FieldError(f"{p} is not prime")
        self.p = p
        self.name = f"prime:{p}"
        self.characteristic = p

    def __call__(self, value) -> PrimeFieldElement:
        if isinstance(value, PrimeFieldElement):
            if value.modulus != self.p:
                raise FieldError(
                    f"scalar has modulus {value.modulus}, field has {self.p}"
                )
            return value
        if isinstance(value, int):
            return PrimeFieldElement(value, self.p)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise FieldError(f"{value} does not embed into F_{self.p}")
            inv = pow(value.denominator, -1, self.p)
            return PrimeFieldElement(value.numerator * inv, self.p)
        if isinstance(value, str):
            try:
                return self(Fraction(value.strip()))
            except (ValueError, ZeroDivisionError) as exc:
                raise FieldError(f"cannot parse scalar {value!r}") from exc
        raise FieldError(f"cannot coerce {value!r} into F_{self.p}")

    @property
    def zero(self) -> PrimeFieldElement:
        return PrimeFieldElement(0, self.p)

    @property
    def one(self) -> PrimeFieldElement:
        return PrimeFieldElement(1, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("prime-field", self.p))

    def __repr__(self):
        return f"GF({self.p})"


FieldContext = Union[RationalField, PrimeField]

QQ = RationalField()


def field_from_name(name: str) -> FieldContext:
    """Parse a field spec: ``rational`` or ``prime:p`` with p an odd prime."""
    name = name.strip()
    if name == "rational":
        return QQ
    if name.startswith("prime:"):
        text = name[len("prime:"):]
        try:
            p = int(text)
        except ValueError as exc:
            raise FieldError(f"bad prime field spec {name!r}") from exc
        return PrimeField(p)
    raise FieldError(f"unknown field {name!r} (expected 'rational' or 'prime:p')")


def scalar_to_str(x: Scalar) -> str:
    """Render a scalar exactly (``-3/2``, ``5``, or a residue)."""
    if isinstance(x, PrimeFieldElement):
        return str(x.residue)
    return str(x)
