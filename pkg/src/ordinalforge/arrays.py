"""Semantic array calculus over an abstract coefficient domain.

An array is a finite injective relation of (coefficient, position) pairs
where every position is itself an array.  The empty array is the base
case.  Coefficients are opaque ordered values; the arithmetic the calculus
needs on them (zero test, successor/limit classification, predecessor,
small numerals) is supplied by a :class:`CoefficientSystem`.

All values are immutable and every function here is pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from typing import Any, Iterable, Optional

LESS, EQUAL, GREATER = -1, 0, 1


class ArrayError(ValueError):
    pass


class EmptyArrayError(ArrayError):
    pass


class ArrayCollisionError(ArrayError):
    """Erasing zeroes made two entries share a position."""


class CoefficientSystem:
    """Arithmetic on coefficients needed by the calculus.

    Coefficients themselves must be hashable and support ``<`` and ``==``.
    """

    name = "abstract"

    def zero(self) -> Any:
        raise NotImplementedError

    def numeral(self, n: int) -> Any:
        raise NotImplementedError

    def is_zero(self, c) -> bool:
        return c == self.zero()

    def is_successor(self, c) -> bool:
        raise NotImplementedError

    def is_limit(self, c) -> bool:
        return not self.is_zero(c) and not self.is_successor(c)

    def pred(self, c):
        raise NotImplementedError


class NaturalCoefficients(CoefficientSystem):
    """Plain ``int`` coefficients.  Every positive natural is a successor."""

    name = "naturals"

    def zero(self):
        return 0

    def numeral(self, n):
        return n

    def is_successor(self, c):
        return c > 0

    def pred(self, c):
        if c <= 0:
            raise ValueError(f"{c} has no predecessor")
        return c - 1


NATURALS = NaturalCoefficients()


class ArrayValue:
    """A finite set of ``(coefficient, position)`` pairs.

    Entries are kept sorted by position, greatest first, so the maximal
    position is ``entries[0]`` and the minimal one ``entries[-1]``.  The
    constructor does not validate; see :func:`validate`.
    """

    __slots__ = ("entries", "_hash")

    def __init__(self, entries: Iterable = ()):
        items = set()
        for coef, pos in entries:
            if not isinstance(pos, ArrayValue):
                raise TypeError(f"position must be an ArrayValue, got {pos!r}")
            items.add((coef, pos))
        ordered = sorted(items, key=cmp_to_key(_entry_order), reverse=True)
        self.entries: tuple = tuple(ordered)
        self._hash = hash(frozenset(items))

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, ArrayValue):
            return NotImplemented
        return self._hash == other._hash and set(self.entries) == set(other.entries)

    def __len__(self):
        return len(self.entries)

    def __bool__(self):
        return bool(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __lt__(self, other):
        return compare(self, other) == LESS

    def __le__(self, other):
        return compare(self, other) != GREATER

    def __repr__(self):
        if not self.entries:
            return "∅"
        inner = ",".join(f"({c!r},{p!r})" for c, p in self.entries)
        return "{" + inner + "}"

    def without(self, coef, pos) -> "ArrayValue":
        return ArrayValue(e for e in self.entries if e != (coef, pos))

    def with_entries(self, *extra) -> "ArrayValue":
        return ArrayValue(list(self.entries) + list(extra))


def underline(coef) -> ArrayValue:
    """The one-entry array ``{(coef, ∅)}``."""
    return ArrayValue([(coef, EMPTY)])


def _cmp_coef(a, b) -> int:
    if a == b:
        return EQUAL
    return LESS if a < b else GREATER


def _entry_order(e1, e2) -> int:
    c = compare(e1[1], e2[1])
    if c:
        return c
    return _cmp_coef(e1[0], e2[0])


EMPTY = ArrayValue()


# -- structure ---------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    clause: str
    entry: Any

    def __str__(self):
        return f"{self.clause}: {self.entry!r}"


def validate(x: ArrayValue, mode: str = "A", system: Optional[CoefficientSystem] = None
             ) -> Optional[Violation]:
    """Return the first violated well-formedness clause, or ``None``.

    ``mode`` is ``"A"`` (zero coefficients forbidden) or ``"B"`` (allowed).
    """
    if mode not in ("A", "B"):
        raise ValueError(f"unknown mode {mode!r}")
    seen = {}
    for coef, pos in x.entries:
        if mode == "A" and _is_zero(coef, system):
            return Violation("zero coefficient", (coef, pos))
        if pos in seen:
            return Violation("injectivity", (seen[pos], coef, pos))
        seen[pos] = coef
    for coef, pos in x.entries:
        v = validate(pos, mode, system)
        if v is not None:
            return v
    return None


def _is_zero(coef, system):
    if system is not None:
        return system.is_zero(coef)
    return coef == 0


def rank(x: ArrayValue) -> int:
    if not x.entries:
        return 0
    return 1 + max(rank(pos) for _, pos in x.entries)


def range_of(x: ArrayValue) -> frozenset:
    return frozenset(pos for _, pos in x.entries)


def preimage(x: ArrayValue, y: ArrayValue, system: CoefficientSystem = NATURALS):
    for coef, pos in x.entries:
        if pos == y:
            return coef
    return system.zero()


def compare(x: ArrayValue, y: ArrayValue) -> int:
    """Three-way comparison under the array order."""
    i = 0
    xs, ys = x.entries, y.entries
    while True:
        if i == len(ys):
            return EQUAL if i == len(xs) else GREATER
        if i == len(xs):
            return LESS
        (cx, px), (cy, py) = xs[i], ys[i]
        c = compare(px, py)
        if c:
            return c
        c = _cmp_coef(cx, cy)
        if c:
            return c
        i += 1


def max_sub(x: ArrayValue) -> ArrayValue:
    if not x.entries:
        raise EmptyArrayError("max_sub of the empty array")
    return x.entries[0][1]


def min_sub(x: ArrayValue) -> ArrayValue:
    if not x.entries:
        raise EmptyArrayError("min_sub of the empty array")
    return x.entries[-1][1]


# -- auxiliary functions -------------------------------------------------------


def erase_zeros(x: ArrayValue, system: CoefficientSystem = NATURALS) -> ArrayValue:
    out = {}
    for coef, pos in x.entries:
        if system.is_zero(coef):
            continue
        clean = erase_zeros(pos, system)
        if clean in out:
            raise ArrayCollisionError(
                f"positions {pos!r} collide after erasing zeroes (coefficients "
                f"{out[clean]!r} and {coef!r})")
        out[clean] = coef
    return ArrayValue((c, p) for p, c in out.items())


def dec_first(x: ArrayValue, system: CoefficientSystem = NATURALS) -> ArrayValue:
    first = preimage(x, EMPTY, system)
    if not system.is_successor(first):
        return x
    return erase_zeros(x.without(first, EMPTY).with_entries((system.pred(first), EMPTY)),
                       system)


def classify(x: ArrayValue, system: CoefficientSystem = NATURALS):
    """Case classification: 0, 1, 2, or a limit coefficient."""
    while True:
        if not x.entries:
            return system.zero()
        if dec_first(x, system) != x:
            return system.numeral(1)
        low = min_sub(x)
        low_coef = x.entries[-1][0]
        if system.is_successor(low_coef):
            if dec_first(low, system) != low:
                return system.numeral(2)
            x = low
            continue
        return low_coef


def fund(x: ArrayValue, alpha, system: CoefficientSystem = NATURALS) -> ArrayValue:
    """The ``alpha``-th member of the fundamental sequence of ``x``."""
    if not x.entries:
        return EMPTY
    dec = dec_first(x, system)
    if dec != x:
        return dec
    low = min_sub(x)
    low_coef = x.entries[-1][0]
    rest = x.without(low_coef, low)
    if system.is_successor(low_coef):
        eta = system.pred(low_coef)
        low_dec = dec_first(low, system)
        if low_dec != low:
            extra = (alpha, low_dec)
        else:
            extra = (system.numeral(1), fund(low, alpha, system))
        return erase_zeros(rest.with_entries((eta, low), extra), system)
    return erase_zeros(rest.with_entries((alpha, low)), system)


def drop_first(x: ArrayValue, system: CoefficientSystem = NATURALS) -> ArrayValue:
    for coef, pos in x.entries:
        if pos == EMPTY:
            return x.without(coef, pos)
    return x


# -- semantics ---------------------------------------------------------------


@dataclass(frozen=True)
class Unit:
    """The array denotes 1."""


@dataclass(frozen=True)
class OmegaPower:
    exponent: Any


@dataclass(frozen=True)
class FixPoint:
    """The ``index``-th ``a`` with ``a = φ fund(body, a)``."""
    index: Any
    body: ArrayValue


@dataclass(frozen=True)
class LimitFamily:
    """The ``index``-th ``a`` fixed by ``φ(fund(body, b) ∪ {(a, ∅)})`` for all 0 < b < length."""
    index: Any
    body: ArrayValue
    length: Any


def phi_semantics(x: ArrayValue, system: CoefficientSystem = NATURALS):
    if not x.entries:
        return Unit()
    if range_of(x) == frozenset([EMPTY]):
        return OmegaPower(preimage(x, EMPTY, system))
    index = preimage(x, EMPTY, system)
    body = drop_first(x, system)
    kind = classify(body, system)
    two = system.numeral(2)
    if kind == two:
        return FixPoint(index, body)
    if two < kind:
        return LimitFamily(index, body, kind)
    raise AssertionError(f"classification {kind!r} has no semantics clause for {x!r}")
