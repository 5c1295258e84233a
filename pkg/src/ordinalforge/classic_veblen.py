"""Finitary Veblen functions on one-row arrays and their fundamental sequences.

A one-row array is one whose positions are all ``()`` or ``(β@())``; it is the
same data as a finite map from ordinal positions to coefficients, which is
what :class:`StarTerm` stores.  Position ``()`` is position 0.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cmp_to_key

from . import term as T

__all__ = [
    "StarTerm", "VeblenClass", "NotOneRowError", "FSUnavailableError", "NotALimitError",
    "to_star", "from_star", "classify_class", "fs_star", "fs_class", "is_one_row",
]


class NotOneRowError(ValueError):
    pass


class FSUnavailableError(ValueError):
    """No class-based fundamental sequence for this term."""


class NotALimitError(FSUnavailableError):
    pass


class VeblenClass(enum.Enum):
    ZERO0 = "0"
    A = "A"
    B = "B"
    C = "C"
    D = "D"
    E = "E"
    F = "F"


def _by_position(e1, e2):
    return T.compare(e1[0], e2[0])


@dataclass(frozen=True)
class StarTerm:
    """``(position, coefficient)`` pairs, positions descending, coefficients nonzero."""

    entries: tuple = ()

    def __post_init__(self):
        ordered = tuple(sorted(self.entries, key=cmp_to_key(_by_position), reverse=True))
        for (p1, _), (p2, _) in zip(ordered, ordered[1:]):
            if p1 == p2:
                raise T.WellFormednessError(f"duplicate position {T.to_text(p1)}")
        for _, c in ordered:
            if isinstance(c, T.Zero):
                raise T.WellFormednessError("zero coefficient in a StarTerm")
        object.__setattr__(self, "entries", ordered)

    @classmethod
    def of(cls, mapping) -> "StarTerm":
        """Build from ``{position: coefficient}``, dropping zero coefficients."""
        return cls(tuple((p, c) for p, c in mapping.items() if not isinstance(c, T.Zero)))

    def as_dict(self) -> dict:
        return dict(self.entries)

    def at(self, pos: T.Term) -> T.Term:
        return self.as_dict().get(pos, T.ZERO)

    def __str__(self):
        inner = ",".join(f"{T.to_text(c)}@{T.to_text(p)}" for p, c in self.entries)
        return f"phi*({inner})"


def is_one_row(a: T.ArrayTerm) -> bool:
    return all(p == T.EPS or (len(p) == 1 and p.entries[0][1] == T.EPS) for _, p in a.entries)


def to_star(a: T.ArrayTerm) -> StarTerm:
    out = []
    for c, p in a.entries:
        if p == T.EPS:
            out.append((T.ZERO, c))
        elif len(p) == 1 and p.entries[0][1] == T.EPS:
            out.append((p.entries[0][0], c))
        else:
            raise NotOneRowError(f"position {T.to_text(p)} is not of the form (b@())")
    return StarTerm(tuple(out))


def from_star(s: StarTerm) -> T.ArrayTerm:
    return T.ArrayTerm(
        (c, T.EPS if isinstance(p, T.Zero) else T.ArrayTerm([(p, T.EPS)]))
        for p, c in s.entries)


def _phi(mapping) -> T.Term:
    return T.collapse(T.Phi(from_star(StarTerm.of(mapping))))


def _kind(t):
    return T.term_kind(t).kind


def classify_class(s: StarTerm) -> VeblenClass:
    if not s.entries:
        return VeblenClass.ZERO0
    if len(s.entries) == 1 and s.entries[0][1] == T.ONE and not isinstance(s.entries[0][0],
                                                                            T.Zero):
        return VeblenClass.A if _kind(s.entries[0][0]) == "successor" else VeblenClass.B
    low_pos, low_coef = s.entries[-1]
    if isinstance(low_pos, T.Zero):
        return VeblenClass.C
    if _kind(low_coef) == "limit":
        return VeblenClass.E
    if _kind(low_pos) == "successor":
        return VeblenClass.D
    return VeblenClass.F


def _pred(t):
    return T.term_kind(t).predecessor


def fs_star(s: StarTerm, n: int) -> T.Term:
    """The ``n``-th member (from 0) of the fundamental sequence of ``φ s``."""
    if n < 0:
        raise ValueError("negative index")
    cls = classify_class(s)
    if cls is VeblenClass.ZERO0:
        return T.ZERO
    entries = s.as_dict()

    if len(entries) == 1 and T.ZERO in entries:
        beta = entries[T.ZERO]
        if _kind(beta) == "successor":
            return T.make_sum([_phi({T.ZERO: _pred(beta)})] * n)
        return _phi({T.ZERO: fs_class(beta, n)})

    if cls is VeblenClass.A:
        (beta, _), = s.entries
        acc = _phi({_pred(beta): T.ONE})
        for _ in range(n):
            acc = _phi({_pred(beta): acc})
        return acc

    if cls is VeblenClass.B:
        (beta, _), = s.entries
        return _phi({fs_class(beta, n): T.ONE})

    if cls is VeblenClass.C:
        beta = entries[T.ZERO]
        rest = {p: c for p, c in entries.items() if not isinstance(p, T.Zero)}
        if _kind(beta) == "limit":
            return _phi({**rest, T.ZERO: fs_class(beta, n)})
        rho = _phi({**rest, T.ZERO: _pred(beta)})
        start = T.add_norm(rho, T.ONE)
        sub = StarTerm.of(rest)
        sub_cls = classify_class(sub)
        delta, gamma = sub.entries[-1]
        above = {p: c for p, c in rest.items() if p != delta}
        if sub_cls in (VeblenClass.A, VeblenClass.D):
            acc = start
            for _ in range(n):
                acc = _phi({**above, delta: _pred(gamma), _pred(delta): acc})
            return acc
        if sub_cls is VeblenClass.E:
            return _phi({**above, delta: fs_class(gamma, n), T.ZERO: start})
        low = fs_class(delta, n)
        if isinstance(low, T.Zero):
            return start
        return _phi({**above, delta: _pred(gamma), low: T.ONE, T.ZERO: start})

    gamma, beta = s.entries[-1]
    rest = {p: c for p, c in entries.items() if p != gamma}
    if cls is VeblenClass.D:
        if n == 0:
            return T.ZERO
        acc = T.ZERO
        for _ in range(n):
            acc = _phi({**rest, gamma: _pred(beta), _pred(gamma): acc})
        return acc
    if cls is VeblenClass.E:
        return _phi({**rest, gamma: fs_class(beta, n)})
    return _phi({**rest, gamma: _pred(beta), fs_class(gamma, n): T.ONE})


def fs_class(t: T.Term, n: int) -> T.Term:
    """Class-based fundamental sequence, extended to all terms by Cantor normal form.

    ``0[n] = 1[n] = 0`` and a successor's sequence is constantly its predecessor.
    """
    kind = T.term_kind(t)
    if kind.kind == "zero" or t == T.ONE:
        return T.ZERO
    if kind.kind == "successor":
        return kind.predecessor
    if isinstance(t, T.Sum):
        tail = fs_class(t.parts[-1], n)
        return T.make_sum(list(t.parts[:-1]) + list(T.parts(tail)))
    if not is_one_row(t.array):
        raise FSUnavailableError(f"{T.to_text(t)} is outside the one-row fragment")
    return fs_star(to_star(t.array), n)
