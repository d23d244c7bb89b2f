"""Exact ground fields: the rationals and the prime fields F2, F3, F5, F7.

Arrays over a field are plain numpy arrays.  Over Q they have ``object``
dtype and hold Python ``int`` (integral values) or ``Fraction``; over F_p
they have ``int64`` dtype and hold residues in ``[0, p)``.  The field object
knows how to coerce, reduce and print its elements, so the rest of the
package never branches on the domain.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any

import numpy as np

SUPPORTED_PRIMES = (2, 3, 5, 7)

_Q_GRAMMAR = re.compile(r"-?\d+(/\d+)?")
_FP_GRAMMAR = re.compile(r"\d+")


class FieldMismatch(TypeError):
    """Raised when scalars or arrays from different fields are combined."""


class ScalarParseError(ValueError):
    pass


def _normalize_q(value: Fraction | int) -> Fraction | int:
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value.numerator)
    return value


@dataclass(frozen=True)
class FpElement:
    """An element of the prime field F_p, stored as a residue in [0, p)."""

    residue: int
    p: int

    def __post_init__(self):
        if self.p not in SUPPORTED_PRIMES:
            raise ValueError(f"unsupported prime {self.p}")
        object.__setattr__(self, "residue", self.residue % self.p)

    def _other(self, other) -> int:
        if isinstance(other, FpElement):
            if other.p != self.p:
                raise FieldMismatch(f"cannot mix F{self.p} and F{other.p}")
            return other.residue
        if isinstance(other, (bool, Fraction, float)) or not isinstance(other, (int, np.integer)):
            raise FieldMismatch(f"cannot mix F{self.p} with {type(other).__name__}")
        return int(other)

    def __add__(self, other):
        return FpElement(self.residue + self._other(other), self.p)

    __radd__ = __add__

    def __sub__(self, other):
        return FpElement(self.residue - self._other(other), self.p)

    def __rsub__(self, other):
        return FpElement(self._other(other) - self.residue, self.p)

    def __mul__(self, other):
        return FpElement(self.residue * self._other(other), self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return FpElement(-self.residue, self.p)

    def __truediv__(self, other):
        d = self._other(other) % self.p
        if d == 0:
            raise ZeroDivisionError(f"division by zero in F{self.p}")
        return FpElement(self.residue * pow(d, -1, self.p), self.p)

    def __rtruediv__(self, other):
        return FpElement(self._other(other), self.p) / self

    def __eq__(self, other):
        if isinstance(other, FpElement):
            return self.p == other.p and self.residue == other.residue
        if isinstance(other, (int, np.integer)) and not isinstance(other, bool):
            return self.residue == int(other) % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.residue, self.p))

    def __int__(self):
        return self.residue

    def __str__(self):
        return str(self.residue)

    def __repr__(self):
        return f"FpElement({self.residue}, p={self.p})"


class Field:
    """Common interface of the supported ground fields."""

    name: str
    characteristic: int
    modulus: int | None
    dtype: Any

    # -- scalars ---------------------------------------------------------
    def coerce(self, value) -> Any:
        """Return the internal representation of ``value`` in this field."""
        raise NotImplementedError

    def scalar(self, value) -> Fraction | FpElement:
        """Return ``value`` as a public scalar object."""
        raise NotImplementedError

    def parse(self, text: str) -> Any:
        raise NotImplementedError

    def format(self, value) -> str:
        return str(self.coerce(value))

    def inv(self, value):
        raise NotImplementedError

    def div(self, a, b):
        return self.reduce_scalar(a * self.inv(b))

    def reduce_scalar(self, value):
        return self.coerce(value)

    # -- arrays ----------------------------------------------------------
    def array(self, data, shape=None) -> np.ndarray:
        """Coerce nested sequences, ndarrays or scalar strings into a field array."""
        if isinstance(data, np.ndarray) and data.dtype == self.dtype:
            arr = self._check_array(data)
        else:
            raw = np.asarray(data, dtype=object)
            flat = [self.coerce(v) for v in raw.ravel()]
            arr = np.empty(len(flat), dtype=self.dtype)
            arr[:] = flat
            arr = arr.reshape(raw.shape)
        if shape is not None and arr.shape != tuple(shape):
            raise ValueError(f"expected shape {tuple(shape)}, got {arr.shape}")
        return arr

    def _check_array(self, arr: np.ndarray) -> np.ndarray:
        return arr.copy()

    def zeros(self, shape) -> np.ndarray:
        return np.zeros(shape, dtype=self.dtype) if self.modulus else np.full(shape, 0, dtype=object)

    def eye(self, n: int) -> np.ndarray:
        out = self.zeros((n, n))
        for i in range(n):
            out[i, i] = 1
        return out

    def reduce(self, arr: np.ndarray) -> np.ndarray:
        return arr

    def is_zero(self, arr) -> bool:
        return not np.any(np.asarray(arr) != 0)

    def to_python(self, value):
        """Plain Python number for a raw entry (int or Fraction)."""
        return self.coerce(value)

    def __repr__(self):
        return self.name


class RationalField(Field):
    name = "Q"
    characteristic = 0
    modulus = None
    dtype = object

    def coerce(self, value):
        if isinstance(value, FpElement):
            raise FieldMismatch("cannot coerce an F_p element into Q")
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, (bool, np.bool_)):
            return int(value)
        if isinstance(value, (int, np.integer)):
            return int(value)
        if isinstance(value, Fraction):
            return _normalize_q(value)
        if isinstance(value, (float, np.floating)):
            raise FieldMismatch("floating point values are not exact scalars")
        raise FieldMismatch(f"cannot coerce {type(value).__name__} into Q")

    def scalar(self, value) -> Fraction:
        return Fraction(self.coerce(value))

    def parse(self, text: str):
        text = text.strip()
        if not _Q_GRAMMAR.fullmatch(text):
            raise ScalarParseError(f"not a rational scalar: {text!r}")
        num, _, den = text.partition("/")
        if den and int(den) == 0:
            raise ScalarParseError(f"zero denominator in {text!r}")
        return _normalize_q(Fraction(int(num), int(den) if den else 1))

    def inv(self, value):
        value = self.coerce(value)
        if value == 0:
            raise ZeroDivisionError("division by zero in Q")
        return _normalize_q(Fraction(1) / value)

    def div(self, a, b):
        if isinstance(a, int) and isinstance(b, int):
            if b == 0:
                raise ZeroDivisionError("division by zero in Q")
            q, r = divmod(a, b)
            return q if r == 0 else Fraction(a, b)
        return _normalize_q(Fraction(a) / Fraction(b))

    def reduce_scalar(self, value):
        return _normalize_q(value) if isinstance(value, Fraction) else value

    def _check_array(self, arr):
        return self.array(arr.tolist()) if arr.dtype != object else np.vectorize(self.coerce, otypes=[object])(arr)


class PrimeField(Field):
    dtype = np.int64

    def __init__(self, p: int):
        if p not in SUPPORTED_PRIMES:
            raise ValueError(f"unsupported prime {p}; choose one of {SUPPORTED_PRIMES}")
        self.p = p
        self.characteristic = p
        self.modulus = p
        self.name = f"F{p}"

    def coerce(self, value) -> int:
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, FpElement):
            if value.p != self.p:
                raise FieldMismatch(f"cannot coerce F{value.p} element into F{self.p}")
            return value.residue
        if isinstance(value, Fraction):
            if value.denominator == 1:
                return int(value.numerator) % self.p
            raise FieldMismatch(f"rational {value} has no canonical image in F{self.p}")
        if isinstance(value, (bool, np.bool_)):
            return int(value)
        if isinstance(value, (int, np.integer)):
            return int(value) % self.p
        raise FieldMismatch(f"cannot coerce {type(value).__name__} into F{self.p}")

    def scalar(self, value) -> FpElement:
        return FpElement(self.coerce(value), self.p)

    def parse(self, text: str) -> int:
        text = text.strip()
        if not _FP_GRAMMAR.fullmatch(text):
            raise ScalarParseError(f"not an F{self.p} scalar: {text!r}")
        return int(text) % self.p

    def inv(self, value) -> int:
        value = self.coerce(value)
        if value == 0:
            raise ZeroDivisionError(f"division by zero in F{self.p}")
        return pow(value, -1, self.p)

    def reduce_scalar(self, value) -> int:
        return int(value) % self.p

    def reduce(self, arr):
        return np.mod(arr, self.p)

    def _check_array(self, arr):
        return np.mod(arr, self.p)

    def to_python(self, value) -> int:
        return int(value) % self.p


QQ = RationalField()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def get_field(tag: str | Field) -> Field:
    """Look up a field by its document tag: ``Q``, ``F2``, ``F3``, ``F5`` or ``F7``."""
    if isinstance(tag, Field):
        return tag
    if tag == "Q":
        return QQ
    if tag.startswith("F") and tag[1:].isdigit() and int(tag[1:]) in SUPPORTED_PRIMES:
        return GF(int(tag[1:]))
    raise ValueError(f"unknown scalar field {tag!r}")


def scalar_parse(text: str, domain: str | Field = "Q") -> Fraction | FpElement:
    """Parse canonical scalar text (``-3/4`` over Q, ``3`` over F_p)."""
    field = get_field(domain)
    return field.scalar(field.parse(text))


def format_scalar(value) -> str:
    """Canonical text of a scalar: reduced, denominator omitted when 1."""
    if isinstance(value, Fraction):
        value = _normalize_q(value)
    return str(value)
