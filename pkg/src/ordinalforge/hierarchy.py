"""Norms, bounded enumeration of standard terms, and the Hardy / fast-growing hierarchies."""

from __future__ import annotations

import bisect
import os
import threading
from dataclasses import dataclass
from functools import cmp_to_key, lru_cache

from . import classic_veblen as CV
from . import term as T
from . import veblen_values as V

__all__ = [
    "rank_rho", "norm_L", "NormBudget", "CapExceededError", "enumerate_standard",
    "count_by_norm", "fs_norm", "Fuel", "FuelExhausted", "default_fuel", "hardy", "fgh",
    "fundamental", "FS_SYSTEMS",
]

DEFAULT_FUEL = 10**6
DEFAULT_CAP = 200_000


class CapExceededError(RuntimeError):
    pass


class FuelExhausted(RuntimeError):
    def __init__(self, steps):
        super().__init__(f"fuel exhausted after {steps} steps")
        self.steps = steps


# -- rank and norm -------------------------------------------------------------


@lru_cache(maxsize=None)
def rank_rho(t: T.Term) -> int:
    if isinstance(t, T.Zero):
        return 0
    if isinstance(t, T.Sum):
        r = rank_rho(t.parts[-1])
        for p in reversed(t.parts[:-1]):
            r = max(rank_rho(p), r) + 1
        return r
    return 1 + max((rank_rho(k) for k in T.subterms(t.array)), default=0)


def _array_size(a: T.ArrayTerm) -> int:
    return sum(_size(c) + _array_size(p) for c, p in a.entries)


@lru_cache(maxsize=None)
def _size(t: T.Term) -> int:
    if isinstance(t, T.Zero):
        return 0
    if isinstance(t, T.Sum):
        return sum(_size(p) for p in t.parts)
    return 1 + _array_size(t.array)


def norm_L(t: T.Term) -> int:
    """Symbol count: every ``φ`` costs 1, sums add, ``0`` is free."""
    T._require_standard(t)
    return _size(t)


# -- enumeration ---------------------------------------------------------------


@dataclass(frozen=True)
class NormBudget:
    max_norm: int
    max_count: int = DEFAULT_CAP


_lock = threading.Lock()


@lru_cache(maxsize=None)
def _arrays_of_size(s: int) -> tuple:
    """Arrays of exact size ``s`` whose coefficients are standard and nonzero."""
    if s == 0:
        return (T.EPS,)
    entries = []
    for w in range(1, s + 1):
        for cs in range(1, w + 1):
            for c in _terms_of_size(cs):
                for p in _arrays_of_size(w - cs):
                    entries.append((w, c, p))
    out = []

    def extend(start, left, chosen, used):
        if left == 0:
            out.append(T.ArrayTerm([(c, p) for _, c, p in chosen]))
            return
        for i in range(start, len(entries)):
            w, c, p = entries[i]
            if w > left or p in used:
                continue
            chosen.append(entries[i])
            used.add(p)
            extend(i + 1, left - w, chosen, used)
            chosen.pop()
            used.discard(p)

    extend(0, s, [], set())
    return tuple(out)


@lru_cache(maxsize=None)
def _principal_of_size(k: int) -> tuple:
    if k < 1:
        return ()
    return tuple(t for t in (T.Phi(a) for a in _arrays_of_size(k - 1)) if T.is_standard(t))


@lru_cache(maxsize=None)
def _terms_of_size(k: int) -> tuple:
    """Standard nonzero terms of exact size ``k``."""
    out = list(_principal_of_size(k))

    # Sums: a principal head followed by a standard term whose head is not larger.
    for hs in range(1, k):
        for head in _principal_of_size(hs):
            for tail in _terms_of_size(k - hs):
                if not T.less(head, T.parts(tail)[0]):
                    out.append(T.make_sum([head] + list(T.parts(tail))))
    return tuple(out)


_sort_key = cmp_to_key(T.compare)


@lru_cache(maxsize=None)
def _sorted_upto(max_norm: int) -> tuple:
    items = [T.ZERO]
    for k in range(1, max_norm + 1):
        items.extend(_terms_of_size(k))
    return tuple(sorted(items, key=_sort_key))


def count_by_norm(max_norm: int) -> list:
    """Number of standard terms of each exact norm ``0..max_norm``."""
    with _lock:
        return [1] + [len(_terms_of_size(k)) for k in range(1, max_norm + 1)]


def enumerate_standard(budget: NormBudget) -> tuple:
    """All standard terms of norm at most ``budget.max_norm``, ascending."""
    with _lock:
        total = 1
        for k in range(1, budget.max_norm + 1):
            total += len(_terms_of_size(k))
            if total > budget.max_count:
                raise CapExceededError(
                    f"more than {budget.max_count} standard terms of norm <= {budget.max_norm}")
        return _sorted_upto(budget.max_norm)


def fs_norm(t: T.Term, n: int, budget_cap: int = DEFAULT_CAP) -> T.Term:
    """The largest standard term below ``t`` of norm at most ``L(t) + n``."""
    if isinstance(t, T.Zero):
        raise ValueError("0 has no fundamental sequence")
    terms = enumerate_standard(NormBudget(norm_L(t) + n, budget_cap))
    i = bisect.bisect_left(terms, _sort_key(t), key=_sort_key)
    return terms[i - 1]


# -- hierarchies ---------------------------------------------------------------


def default_fuel() -> int:
    return int(os.environ.get("ORDINALFORGE_FUEL", DEFAULT_FUEL))


@dataclass
class Fuel:
    limit: int
    used: int = 0

    @classmethod
    def default(cls) -> "Fuel":
        return cls(default_fuel())

    def burn(self, k: int = 1):
        self.used += k
        if self.used > self.limit:
            self.used = self.limit + 1
            raise FuelExhausted(self.used)


FS_SYSTEMS = ("class", "norm")


def fundamental(t: T.Term, n: int, system: str = "class") -> T.Term:
    if system == "class":
        return CV.fs_class(t, n)
    if system == "norm":
        return fs_norm(t, n)
    raise ValueError(f"unknown fundamental-sequence system {system!r}")


def hardy(t: T.Term, n: int, fs: str = "class", fuel: Fuel | None = None) -> int:
    T._require_standard(t)
    fuel = Fuel.default() if fuel is None else fuel
    if fs == "class":
        return V.hardy(V.of_term(t), n, fuel)
    while True:
        fuel.burn()
        kind = T.term_kind(t)
        if kind.kind == "zero":
            return n
        if kind.kind == "successor":
            t, n = kind.predecessor, n + 1
        else:
            t = fundamental(t, n, fs)


def fgh(t: T.Term, n: int, fs: str = "class", fuel: Fuel | None = None) -> int:
    T._require_standard(t)
    fuel = Fuel.default() if fuel is None else fuel
    stack = [(t, 1)]
    while stack:
        fuel.burn()
        a, times = stack.pop()
        if times == 0:
            continue
        kind = T.term_kind(a)
        if kind.kind == "zero":
            n += times
            continue
        if times > 1:
            stack.append((a, times - 1))
        if kind.kind == "successor":
            stack.append((kind.predecessor, n))
        else:
            stack.append((fundamental(a, n, fs), 1))
    return n
