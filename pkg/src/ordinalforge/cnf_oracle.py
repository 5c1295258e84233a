"""Ground-truth ordinal arithmetic used to check the notation algorithms.

Two independent oracles live here:

* exact hereditary Cantor normal forms below ε₀ (:class:`CnfOrdinal`);
* a semantic comparison of binary Veblen expressions below Γ₀
  (:class:`BVTerm`), which decides fixed-point equalities such as
  ``φ(0, φ(1, 0)) = φ(1, 0)`` instead of assuming normal form.

Nothing here uses the syntactic order of :mod:`ordinalforge.term`; the
bridges at the bottom only read term structure.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Union

from . import term as T
from .arrays import EQUAL, GREATER, LESS

__all__ = [
    "CnfOrdinal", "cnf", "cnf_compare", "cnf_add", "cnf_omega_pow", "cnf_from_int",
    "term_to_cnf", "BVPhi", "BVSum", "BVTerm", "bv_normalize", "binary_veblen_compare",
    "term_to_bv",
]


@dataclass(frozen=True)
class CnfOrdinal:
    """``ω^e₁·m₁ + … + ω^e_k·m_k`` with strictly decreasing ``e_i``."""

    terms: tuple = ()

    def __post_init__(self):
        for i, (e, m) in enumerate(self.terms):
            if not isinstance(e, CnfOrdinal) or not isinstance(m, int) or m <= 0:
                raise ValueError(f"bad CNF summand {(e, m)!r}")
            if i and cnf_compare(self.terms[i - 1][0], e) != GREATER:
                raise ValueError("CNF exponents must strictly decrease")

    def __lt__(self, other):
        return cnf_compare(self, other) == LESS

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for e, m in self.terms:
            if not e.terms:
                out.append(str(m))
                continue
            base = "w" if e == ONE else f"w^({e})"
            out.append(base if m == 1 else f"{base}*{m}")
        return "+".join(out)


ZERO = CnfOrdinal()
ONE = CnfOrdinal(((ZERO, 1),))


def cnf(*terms) -> CnfOrdinal:
    return CnfOrdinal(tuple(terms))


def cnf_from_int(n: int) -> CnfOrdinal:
    return ZERO if n == 0 else CnfOrdinal(((ZERO, n),))


@lru_cache(maxsize=None)
def cnf_compare(a: CnfOrdinal, b: CnfOrdinal) -> int:
    for (ea, ma), (eb, mb) in zip(a.terms, b.terms):
        c = cnf_compare(ea, eb)
        if c:
            return c
        if ma != mb:
            return LESS if ma < mb else GREATER
    la, lb = len(a.terms), len(b.terms)
    return (la > lb) - (la < lb)


def cnf_add(a: CnfOrdinal, b: CnfOrdinal) -> CnfOrdinal:
    if not b.terms:
        return a
    head, mult = b.terms[0]
    keep = []
    for e, m in a.terms:
        c = cnf_compare(e, head)
        if c == GREATER:
            keep.append((e, m))
        elif c == EQUAL:
            mult += m
            break
        else:
            break
    return CnfOrdinal(tuple(keep) + ((head, mult),) + b.terms[1:])


def cnf_omega_pow(a: CnfOrdinal) -> CnfOrdinal:
    return CnfOrdinal(((a, 1),))


def term_to_cnf(t: T.Term) -> Optional[CnfOrdinal]:
    """CNF value of a standard term below ε₀, or ``None`` when it is not below ε₀."""
    why = T.standardness(t)
    if why is not None:
        raise T.NonStandardError(f"{T.to_text(t)} is not standard ({why})")
    return _to_cnf(t)


def _to_cnf(t):
    if isinstance(t, T.Zero):
        return ZERO
    if isinstance(t, T.Sum):
        acc = ZERO
        for p in t.parts:
            v = _to_cnf(p)
            if v is None:
                return None
            acc = cnf_add(acc, v)
        return acc
    entries = t.array.entries
    if not entries:
        return ONE
    if len(entries) != 1 or entries[0][1] != T.EPS:
        return None
    e = _to_cnf(entries[0][0])
    return None if e is None else cnf_omega_pow(e)


# -- binary Veblen ------------------------------------------------------------


@dataclass(frozen=True)
class BVPhi:
    """``φ(left, right)``, i.e. ``φ_left(right)``."""
    left: "BVTerm"
    right: "BVTerm"


@dataclass(frozen=True)
class BVSum:
    """Ordinal sum of the parts, left to right."""
    parts: tuple


BVTerm = Union[CnfOrdinal, BVPhi, BVSum]


# Normal values: a CnfOrdinal (below ε₀), a BVPhi whose arguments are normal
# values and which is itself at least ε₀, or a BVSum of two or more principal
# normal values, non-increasing, containing at least one BVPhi.


def _principal_parts(v):
    """Additively principal summands of a normal value."""
    if isinstance(v, CnfOrdinal):
        return [cnf_omega_pow(e) for e, m in v.terms for _ in range(m)]
    if isinstance(v, BVSum):
        return list(v.parts)
    return [v]


@lru_cache(maxsize=None)
def bv_normalize(x: BVTerm):
    if isinstance(x, CnfOrdinal):
        return x
    if isinstance(x, BVPhi):
        left, right = bv_normalize(x.left), bv_normalize(x.right)
        if left == ZERO and isinstance(right, CnfOrdinal):
            return cnf_omega_pow(right)
        # φ(α, β) with β = φ(γ, δ), α < γ collapses to β.
        if isinstance(right, BVPhi) and _cmp(left, right.left) == LESS:
            return right
        return BVPhi(left, right)
    stack = []
    for part in x.parts:
        for p in _principal_parts(bv_normalize(part)):
            while stack and _cmp(stack[-1], p) == LESS:
                stack.pop()
            stack.append(p)
    if all(isinstance(p, CnfOrdinal) for p in stack):
        acc = ZERO
        for p in stack:
            acc = cnf_add(acc, p)
        return acc
    if len(stack) == 1:
        return stack[0]
    return BVSum(tuple(stack))


@lru_cache(maxsize=None)
def _cmp(a, b) -> int:
    """Compare two normal values."""
    if isinstance(a, BVSum) or isinstance(b, BVSum) or (
            isinstance(a, CnfOrdinal) and isinstance(b, CnfOrdinal)):
        if isinstance(a, CnfOrdinal) and isinstance(b, CnfOrdinal):
            return cnf_compare(a, b)
        pa, pb = _principal_parts(a), _principal_parts(b)
        for x, y in zip(pa, pb):
            c = _cmp(x, y)
            if c:
                return c
        return (len(pa) > len(pb)) - (len(pa) < len(pb))
    if isinstance(a, CnfOrdinal):
        return LESS
    if isinstance(b, CnfOrdinal):
        return GREATER
    c = _cmp(a.left, b.left)
    if c == LESS:
        return _cmp(a.right, b)
    if c == GREATER:
        return _cmp(a, b.right)
    return _cmp(a.right, b.right)


def binary_veblen_compare(x: BVTerm, y: BVTerm) -> int:
    return _cmp(bv_normalize(x), bv_normalize(y))


_BINARY = T.ArrayTerm([(T.ONE, T.EPS)])


def term_to_bv(t: T.Term) -> Optional[BVTerm]:
    """Read a term built hereditarily from positions ``()`` and ``(1@())``."""
    if isinstance(t, T.Zero):
        return ZERO
    if isinstance(t, T.Sum):
        parts = [term_to_bv(p) for p in t.parts]
        return None if any(p is None for p in parts) else BVSum(tuple(parts))
    coefs = {T.EPS: ZERO, _BINARY: ZERO}
    for c, pos in t.array.entries:
        if pos not in coefs:
            return None
        coefs[pos] = term_to_bv(c)
        if coefs[pos] is None:
            return None
    return BVPhi(coefs[_BINARY], coefs[T.EPS])
