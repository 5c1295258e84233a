"""Formal ordinal notations: terms, arrays, the syntactic order, standardness.

A :class:`Term` is ``0``, a flattened sum of two or more terms, or ``φ``
applied to an :class:`ArrayTerm`.  An :class:`ArrayTerm` is a finite list of
``coefficient @ position`` entries whose positions are arrays again.

Text form::

    term  := "0" | term "+" term | "p" array | numeral | "w"
    array := "(" [entry ("," entry)*] ")"
    entry := term "@" array

``n`` abbreviates ``p()+...+p()`` (n copies) and ``w`` abbreviates ``p(1@())``.
"""

from __future__ import annotations

import weakref
from functools import cmp_to_key, lru_cache
from typing import NamedTuple, Optional, Union

from . import arrays
from .arrays import EQUAL, GREATER, LESS, ArrayValue

__all__ = [
    "Term", "Zero", "Sum", "Phi", "ArrayTerm", "ZERO", "ONE", "OMEGA", "EPS",
    "numeral", "parse", "parse_term", "parse_array", "to_text", "subterms",
    "less", "compare", "array_compare", "is_principal", "max_entry", "least_entry",
    "least_coefficient", "tail_above", "standardness", "is_standard", "add_norm",
    "succ", "sub_left", "collapse", "term_kind", "TermKind", "parts", "make_sum", "TERMS",
    "to_array_value", "ParseError", "WellFormednessError", "NonStandardError",
]


class ParseError(ValueError):
    def __init__(self, msg, text="", pos=0):
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"{msg} at line {line}, column {col}")
        self.line, self.column = line, col


class WellFormednessError(ValueError):
    pass


class NonStandardError(ValueError):
    pass


# -- data -------------------------------------------------------------------


# Terms are hash-consed: structurally equal terms are the same object, so
# equality is identity.  Shared subterms make structural equality exponential
# in the tree size otherwise.
_INTERNED = weakref.WeakValueDictionary()


def _intern(cls, key):
    obj = _INTERNED.get(key)
    if obj is None:
        obj = object.__new__(cls)
        obj._hash = hash(key)
        _INTERNED[key] = obj
        return obj, True
    return obj, False


class Term:
    __slots__ = ("_hash", "__weakref__")

    def __eq__(self, other):
        return self is other

    def __lt__(self, other):
        return less(self, other)

    def __le__(self, other):
        return self == other or less(self, other)

    def __gt__(self, other):
        return less(other, self)

    def __ge__(self, other):
        return self == other or less(other, self)

    def __str__(self):
        return to_text(self)

    def __repr__(self):
        return f"Term({to_text(self)!r})"

    def __hash__(self):
        return self._hash


class Zero(Term):
    __slots__ = ()

    def __new__(cls):
        return _intern(cls, ("0",))[0]

    def __reduce__(self):
        return Zero, ()


class Sum(Term):
    """``parts[0] + (parts[1] + ...)``; never nested, at least two parts."""
    __slots__ = ("parts",)

    def __new__(cls, parts):
        parts = tuple(parts)
        if len(parts) < 2 or any(isinstance(p, Sum) for p in parts):
            raise WellFormednessError("Sum needs two or more non-sum parts; use make_sum")
        obj, fresh = _intern(cls, ("+",) + parts)
        if fresh:
            obj.parts = parts
        return obj

    def __reduce__(self):
        return Sum, (self.parts,)

    @property
    def head(self):
        return self.parts[0]

    @property
    def tail(self):
        rest = self.parts[1:]
        return rest[0] if len(rest) == 1 else Sum(rest)


class Phi(Term):
    __slots__ = ("array",)

    def __new__(cls, array: "ArrayTerm"):
        if not isinstance(array, ArrayTerm):
            raise TypeError("Phi takes an ArrayTerm")
        obj, fresh = _intern(cls, ("p", array))
        if fresh:
            obj.array = array
        return obj

    def __reduce__(self):
        return Phi, (self.array,)


class ArrayTerm:
    """Entries ``(coefficient, position)`` sorted by position, greatest first."""
    __slots__ = ("entries", "_hash", "_subterms", "__weakref__")

    def __new__(cls, entries=()):
        entries = list(entries)
        for c, p in entries:
            if not isinstance(c, Term) or not isinstance(p, ArrayTerm):
                raise TypeError(f"bad array entry {(c, p)!r}")
        entries.sort(key=cmp_to_key(lambda e1, e2: array_compare(e1[1], e2[1])),
                     reverse=True)
        for (c1, p1), (c2, p2) in zip(entries, entries[1:]):
            if p1 is p2:
                raise WellFormednessError(
                    f"duplicate position {to_text(p1)} (coefficients {to_text(c1)}, "
                    f"{to_text(c2)})")
        entries = tuple(entries)
        obj, fresh = _intern(cls, ("A",) + entries)
        if fresh:
            obj.entries = entries
            obj._subterms = None
        return obj

    def __eq__(self, other):
        return self is other

    def __hash__(self):
        return self._hash

    def __reduce__(self):
        return ArrayTerm, (self.entries,)

    def __len__(self):
        return len(self.entries)

    def __bool__(self):
        return bool(self.entries)

    def __lt__(self, other):
        return array_compare(self, other) == LESS

    def __str__(self):
        return to_text(self)

    def __repr__(self):
        return f"ArrayTerm({to_text(self)!r})"

    def without_position(self, pos: "ArrayTerm") -> "ArrayTerm":
        return ArrayTerm(e for e in self.entries if e[1] != pos)


ZERO = Zero()
EPS = ArrayTerm()
ONE = Phi(EPS)
OMEGA = Phi(ArrayTerm([(ONE, EPS)]))


def make_sum(items) -> Term:
    """Syntactic sum of ``items``; flattens and drops nothing."""
    flat = []
    for t in items:
        if isinstance(t, Sum):
            flat.extend(t.parts)
        else:
            flat.append(t)
    if not flat:
        return ZERO
    if len(flat) == 1:
        return flat[0]
    return Sum(flat)


def parts(t: Term) -> tuple:
    """Summands of ``t``; ``()`` for zero."""
    if isinstance(t, Zero):
        return ()
    if isinstance(t, Sum):
        return t.parts
    return (t,)


def numeral(n: int) -> Term:
    if n < 0:
        raise ValueError("negative numeral")
    return make_sum([ONE] * n)


def phi(*entries) -> Phi:
    """``phi((c, pos), ...)`` shorthand."""
    return Phi(ArrayTerm(entries))


# -- text -------------------------------------------------------------------


class _Parser:
    def __init__(self, text):
        self.text = text
        self.i = 0

    def error(self, msg):
        raise ParseError(msg, self.text, self.i)

    def skip(self):
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def peek(self):
        self.skip()
        return self.text[self.i] if self.i < len(self.text) else ""

    def expect(self, ch):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.i += 1

    def done(self):
        if self.peek():
            self.error(f"unexpected {self.peek()!r}")

    def number(self):
        self.skip()
        j = self.i
        while self.i < len(self.text) and self.text[self.i].isdigit():
            self.i += 1
        return int(self.text[j:self.i])

    def term(self):
        items = [self.atom()]
        while self.peek() == "+":
            self.i += 1
            items.append(self.atom())
        return make_sum(items)

    def atom(self):
        ch = self.peek()
        if ch.isdigit():
            return numeral(self.number())
        if ch == "w":
            self.i += 1
            return OMEGA
        if ch == "p":
            self.i += 1
            return Phi(self.array())
        self.error("expected a term")

    def array(self):
        self.expect("(")
        entries = []
        if self.peek() != ")":
            while True:
                start = self.i
                coef = self.term()
                self.expect("@")
                pos = self.array()
                entries.append((coef, pos, start))
                if self.peek() != ",":
                    break
                self.i += 1
        self.expect(")")
        seen = {}
        for coef, pos, start in entries:
            if pos in seen:
                self.i = start
                self.error(f"duplicate position {to_text(pos)}")
            seen[pos] = coef
        return ArrayTerm((c, p) for c, p, _ in entries)


def parse_term(text: str) -> Term:
    p = _Parser(text)
    t = p.term()
    p.done()
    return t


def parse_array(text: str) -> ArrayTerm:
    p = _Parser(text)
    a = p.array()
    p.done()
    return a


def parse(text: str) -> Union[Term, ArrayTerm]:
    """Parse a term, or an array when the text starts with ``(``."""
    p = _Parser(text)
    if p.peek() == "(":
        return parse_array(text)
    return parse_term(text)


def to_text(v: Union[Term, ArrayTerm]) -> str:
    if isinstance(v, ArrayTerm):
        return "(" + ",".join(f"{to_text(c)}@{to_text(p)}" for c, p in v.entries) + ")"
    if isinstance(v, Zero):
        return "0"
    if v == OMEGA:
        return "w"
    if isinstance(v, Phi):
        return "1" if not v.array else "p" + to_text(v.array)
    out, run = [], 0
    for part in v.parts:
        if part == ONE:
            run += 1
            continue
        if run:
            out.append(str(run))
            run = 0
        out.append(to_text(part))
    if run:
        out.append(str(run))
    return "+".join(out)


# -- subterms and order -------------------------------------------------------


def subterms(v: Union[Term, ArrayTerm]) -> frozenset:
    if isinstance(v, Term):
        return frozenset([v])
    if v._subterms is None:
        acc = set()
        for c, p in v.entries:
            acc.add(c)
            acc |= subterms(p)
        v._subterms = frozenset(acc)
    return v._subterms


def array_compare(a: ArrayTerm, b: ArrayTerm) -> int:
    """Three-way comparison of arrays: greatest positions first, then coefficients."""
    if a is b:
        return EQUAL
    xs, ys = a.entries, b.entries
    for (ca, pa), (cb, pb) in zip(xs, ys):
        c = array_compare(pa, pb)
        if c:
            return c
        c = compare(ca, cb)
        if c:
            return c
    return (len(xs) > len(ys)) - (len(xs) < len(ys))


@lru_cache(maxsize=None)
def less(a: Term, b: Term) -> bool:
    """The syntactic ``<`` on terms."""
    if isinstance(a, Zero):
        return not isinstance(b, Zero)
    if isinstance(b, Zero):
        return False
    if isinstance(a, Sum):
        if isinstance(b, Sum):
            if a.head != b.head:
                return less(a.head, b.head)
            return less(a.tail, b.tail)
        return a.head != b and less(a.head, b)
    if isinstance(b, Sum):
        return a == b.head or less(a, b.head)
    # Both principal.  A bound by some subterm of b makes a smaller outright;
    # the literal "for all k" reading breaks trichotomy on multi-entry arrays.
    for k in subterms(b.array):
        if a == k or less(a, k):
            return True
    return (array_compare(a.array, b.array) == LESS
            and all(less(k, b) for k in subterms(a.array)))


def compare(a: Term, b: Term) -> int:
    if a == b:
        return EQUAL
    return LESS if less(a, b) else GREATER


def is_principal(t: Term) -> bool:
    return isinstance(t, Phi)


def max_entry(a: ArrayTerm):
    """``(index, coefficient, position)`` of the entry at the greatest position."""
    if not a.entries:
        return None, ZERO, None
    c, p = a.entries[0]
    return 0, c, p


def least_entry(a: ArrayTerm):
    """``(index, coefficient, position)`` of the entry at the least position."""
    if not a.entries:
        return None, ZERO, None
    c, p = a.entries[-1]
    return len(a.entries) - 1, c, p


def least_coefficient(a: ArrayTerm) -> Term:
    return least_entry(a)[1]


def tail_above(a: ArrayTerm, pos: ArrayTerm) -> ArrayTerm:
    """The entries of ``a`` whose positions are strictly above ``pos``."""
    return ArrayTerm(e for e in a.entries if array_compare(pos, e[1]) == LESS)


# -- standardness --------------------------------------------------------------


def _has_zero_coefficient(a: ArrayTerm) -> bool:
    return any(isinstance(c, Zero) or _has_zero_coefficient(p) for c, p in a.entries)


@lru_cache(maxsize=None)
def standardness(t: Term) -> Optional[str]:
    """``None`` if ``t`` is standard, else the first failing clause."""
    if isinstance(t, Zero):
        return None
    if isinstance(t, Sum):
        for i, part in enumerate(t.parts):
            if not isinstance(part, Phi):
                return f"2a: summand {to_text(part)} is not principal"
            why = standardness(part)
            if why is not None:
                return f"2a: summand {to_text(part)}: {why}"
            if i and less(t.parts[i - 1], part):
                return (f"2c: summand {to_text(part)} exceeds "
                        f"{to_text(t.parts[i - 1])}")
        return None
    x = t.array
    if not x:
        return None
    for k in sorted(subterms(x), key=to_text):
        why = standardness(k)
        if why is not None:
            return f"3: subterm {to_text(k)}: {why}"
    if _has_zero_coefficient(x):
        return "3: zero coefficient"
    if _absorbed_by_least(x):
        return (f"3d: {to_text(t)} is a fixed point of its least entry "
                f"{to_text(least_coefficient(x))}")
    return None


def _absorbed_by_least(x: ArrayTerm) -> bool:
    _, m, low = least_entry(x)
    if not isinstance(m, Phi):
        return False
    above = tail_above(x, low)
    if any(m == k or less(m, k) for k in subterms(above)):
        return False
    return array_compare(tail_above(m.array, low), above) == GREATER


def collapse(t: Term) -> Term:
    """Replace a fixed-point representation ``φX`` by its least coefficient.

    Only the outermost ``φ`` is inspected; subterms must already be standard.
    """
    while isinstance(t, Phi) and t.array and _absorbed_by_least(t.array):
        t = least_coefficient(t.array)
    return t


def is_standard(t: Term) -> bool:
    return standardness(t) is None


def _require_standard(*ts):
    for t in ts:
        why = standardness(t)
        if why is not None:
            raise NonStandardError(f"{to_text(t)} is not standard ({why})")


# -- normal-form arithmetic ---------------------------------------------------


def add_norm(a: Term, b: Term) -> Term:
    """The standard term for the ordinal sum ``a + b``."""
    _require_standard(a, b)
    return _add(a, b)


def _add(a: Term, b: Term) -> Term:
    pb = parts(b)
    if not pb:
        return a
    head = pb[0]
    keep = [p for p in parts(a) if not less(p, head)]
    return make_sum(keep + list(pb))


def succ(t: Term) -> Term:
    return add_norm(t, ONE)


def sub_left(a: Term, b: Term) -> Term:
    """The unique ``c`` with ``b + c = a``; requires ``b <= a``."""
    if less(a, b):
        raise ValueError(f"{to_text(b)} exceeds {to_text(a)}")
    pa, pb = parts(a), parts(b)
    i = 0
    while i < len(pb) and i < len(pa) and pa[i] == pb[i]:
        i += 1
    return make_sum(pa[i:])


class TermKind(NamedTuple):
    kind: str  # "zero" | "successor" | "limit"
    predecessor: Optional[Term] = None


def term_kind(t: Term) -> TermKind:
    ps = parts(t)
    if not ps:
        return TermKind("zero")
    if ps[-1] == ONE:
        return TermKind("successor", make_sum(ps[:-1]))
    return TermKind("limit")


class TermCoefficients(arrays.CoefficientSystem):
    """Terms as coefficients of the semantic array calculus."""

    name = "terms"

    def zero(self):
        return ZERO

    def numeral(self, n):
        return numeral(n)

    def is_zero(self, c):
        return isinstance(c, Zero)

    def is_successor(self, c):
        return term_kind(c).kind == "successor"

    def pred(self, c):
        k = term_kind(c)
        if k.kind != "successor":
            raise ValueError(f"{to_text(c)} is not a successor")
        return k.predecessor


TERMS = TermCoefficients()


def to_array_value(a: ArrayTerm) -> ArrayValue:
    return ArrayValue((c, to_array_value(p)) for c, p in a.entries)


def from_array_value(x: ArrayValue) -> ArrayTerm:
    return ArrayTerm((c, from_array_value(p)) for c, p in x.entries)
