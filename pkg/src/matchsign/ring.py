"""Sparse multivariate polynomials over the integers.

Elements of ``Z[x_1, x_2, ...]`` are stored as a mapping from monomials to
nonzero integer coefficients. A monomial is a tuple of ``(var, exp)`` pairs
sorted by variable id with positive exponents; the constant monomial is the
empty tuple. Indeterminate ids are edge ids.

Polys are immutable and hashable. Serialization uses the form
``2*x1*x2^3-x4+7`` with terms in graded lexicographic order
(``x1 > x2 > ...``), and ``0`` for the zero element.
"""

from __future__ import annotations

import re
from typing import Dict, Iterable, Mapping, Tuple, Union

Monomial = Tuple[Tuple[int, int], ...]

__all__ = [
    "Poly",
    "MissingIndeterminate",
    "RingParseError",
    "add",
    "mul",
    "neg",
    "evaluate",
    "parse",
    "var",
    "ZERO",
    "ONE",
]


class MissingIndeterminate(KeyError):
    """An assignment does not cover every indeterminate of a polynomial."""


class RingParseError(ValueError):
    pass


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    out = []
    i = j = 0
    while i < len(a) and j < len(b):
        va, ea = a[i]
        vb, eb = b[j]
        if va == vb:
            out.append((va, ea + eb))
            i += 1
            j += 1
        elif va < vb:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


def _grlex_key(mono: Monomial):
    # Sorting ascending by this key yields descending grlex with x1 > x2 > ...
    degree = sum(e for _, e in mono)
    # Lex on exponent vectors: a larger exponent on a smaller var id ranks first.
    # Encode as a sequence of (var, -exp) which compares correctly once padded
    # by a sentinel that sorts after any real var.
    seq = tuple((v, -e) for v, e in mono) + ((float("inf"), 0),)
    return (-degree, seq)


class Poly:
    """Immutable element of ``Z[x_e]``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        clean: Dict[Monomial, int] = {}
        if terms:
            for mono, coeff in terms.items():
                if coeff:
                    clean[_canonical_mono(mono)] = clean.get(_canonical_mono(mono), 0) + coeff
            clean = {m: c for m, c in clean.items() if c}
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Monomial, int]) -> "Poly":
        # terms must already be canonical with no zero coefficients
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: int) -> "Poly":
        return cls._raw({(): int(c)} if c else {})

    @classmethod
    def coerce(cls, value: Union["Poly", int]) -> "Poly":
        if isinstance(value, Poly):
            return value
        if isinstance(value, int):
            return cls.const(value)
        raise TypeError(f"cannot coerce {type(value).__name__} to Poly")

    @property
    def terms(self) -> Dict[Monomial, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and () in self._terms)

    def constant_value(self) -> int:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._terms.get((), 0)

    def variables(self) -> set:
        return {v for mono in self._terms for v, _ in mono}

    def __add__(self, other):
        try:
            other = Poly.coerce(other)
        except TypeError:
            return NotImplemented
        if not other._terms:
            return self
        out = dict(self._terms)
        for mono, c in other._terms.items():
            s = out.get(mono, 0) + c
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
        return Poly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        try:
            other = Poly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return Poly.coerce(other) - self

    def __mul__(self, other):
        try:
            other = Poly.coerce(other)
        except TypeError:
            return NotImplemented
        if not self._terms or not other._terms:
            return ZERO
        out: Dict[Monomial, int] = {}
        for ma, ca in self._terms.items():
            for mb, cb in other._terms.items():
                m = _mono_mul(ma, mb)
                s = out.get(m, 0) + ca * cb
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Poly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative exponent")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def evaluate(self, assignment: Mapping[int, int]) -> int:
        total = 0
        for mono, c in self._terms.items():
            t = c
            for v, e in mono:
                try:
                    t *= assignment[v] ** e
                except KeyError:
                    raise MissingIndeterminate(v) from None
            total += t
        return total

    def sorted_terms(self):
        return sorted(self._terms.items(), key=lambda mc: _grlex_key(mc[0]))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, (mono, c) in enumerate(self.sorted_terms()):
            factors = "*".join(f"x{v}" if e == 1 else f"x{v}^{e}" for v, e in mono)
            sign = "-" if c < 0 else ("+" if i else "")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = factors
            else:
                body = f"{mag}*{factors}"
            parts.append(sign + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Poly({str(self)!r})"


def _canonical_mono(mono: Iterable[Tuple[int, int]]) -> Monomial:
    acc: Dict[int, int] = {}
    for v, e in mono:
        if e < 0:
            raise ValueError("negative exponent in monomial")
        if e:
            acc[v] = acc.get(v, 0) + e
    return tuple(sorted(acc.items()))


ZERO = Poly._raw({})
ONE = Poly._raw({(): 1})


def var(i: int) -> Poly:
    return Poly._raw({((i, 1),): 1})


def add(a: Poly, b: Poly) -> Poly:
    return a + b


def mul(a: Poly, b: Poly) -> Poly:
    return a * b


def neg(a: Poly) -> Poly:
    return -a


def evaluate(p: Poly, assignment: Mapping[int, int]) -> int:
    """Substitute integers for every indeterminate of ``p``.

    Raises :class:`MissingIndeterminate` if ``assignment`` misses a variable
    that actually occurs in ``p``.
    """
    return p.evaluate(assignment)


_TERM_RE = re.compile(r"([+-]?)([^+-]+)")
_FACTOR_RE = re.compile(r"^(?:(\d+)|x(\d+)(?:\^(\d+))?)$")


def parse(text: str) -> Poly:
    """Parse the textual form produced by ``str(Poly)``.

    Non-canonical input (repeated factors, unsorted terms, spaces) is
    accepted and normalized.
    """
    s = text.replace(" ", "")
    if not s:
        raise RingParseError("empty polynomial string")
    pos = 0
    out: Dict[Monomial, int] = {}
    for m in _TERM_RE.finditer(s):
        if m.start() != pos:
            raise RingParseError(f"cannot parse {text!r}")
        pos = m.end()
        sign = -1 if m.group(1) == "-" else 1
        coeff = 1
        mono = []
        for factor in m.group(2).split("*"):
            fm = _FACTOR_RE.match(factor)
            if fm is None:
                raise RingParseError(f"bad factor {factor!r} in {text!r}")
            if fm.group(1) is not None:
                coeff *= int(fm.group(1))
            else:
                mono.append((int(fm.group(2)), int(fm.group(3) or 1)))
        key = _canonical_mono(mono)
        out[key] = out.get(key, 0) + sign * coeff
    if pos != len(s):
        raise RingParseError(f"cannot parse {text!r}")
    return Poly._raw({k: c for k, c in out.items() if c})
