"""Persistent values for evaluating class-based fundamental sequences quickly.

A value is ``None`` (zero) or a :class:`Cnf` node ``rest + head·mult`` whose
``rest`` holds the more significant summands, so rewriting the last summand
is O(1).  A principal ``head`` is :data:`ONE`, a :class:`Pow` ``ω^exp``, a
:class:`Node` (a one-row φ-term with an entry at a positive position) or a
:class:`Foreign` wrapper around any other principal term.  Node entries are
linked from the least position upwards, so entries above a rewritten one are
shared.  Nothing is interned: equality is decided by the order, and a
summand appended by a rewrite is always below the summand before it.

:func:`fs` agrees with :func:`ordinalforge.classic_veblen.fs_class` under
:func:`of_term` / :func:`to_term`, and :func:`hardy` takes exactly as many
steps as the one-rewrite-per-step Hardy recurrence over terms.
"""

from __future__ import annotations

import gc
from functools import lru_cache

from . import classic_veblen as CV
from . import term as T

__all__ = ["Cnf", "Pow", "Node", "Entry", "Foreign", "ONE",
           "of_term", "to_term", "compare", "fs", "hardy"]

class Cnf:
    """``rest + head·mult``; ``lead`` is the most significant principal and
    ``size`` the number of summand groups."""

    __slots__ = ("rest", "head", "mult", "lead", "size")

    def __init__(self, rest, head, mult):
        self.rest, self.head, self.mult = rest, head, mult
        if rest is None:
            self.lead, self.size = head, 1
        else:
            self.lead, self.size = rest.lead, rest.size + 1


class _One:
    __slots__ = ()


class Pow:
    __slots__ = ("exp",)

    def __init__(self, exp):
        self.exp = exp


class Entry:
    """``coef`` at ``pos`` (``None`` is position 0) below the ``above`` chain."""

    __slots__ = ("above", "pos", "coef")

    def __init__(self, above, pos, coef):
        self.above, self.pos, self.coef = above, pos, coef


class Node:
    __slots__ = ("low",)

    def __init__(self, low):
        self.low = low


class Foreign:
    """A principal term outside the one-row fragment, kept opaque."""

    __slots__ = ("term",)

    def __init__(self, term):
        self.term = term


ONE = _One()
ONE_V = Cnf(None, ONE, 1)


def value(p):
    return Cnf(None, p, 1)


def _append(base, p, k):
    if k <= 0:
        return base
    if base is not None and base.head is p:
        return Cnf(base.rest, p, base.mult + k)
    return Cnf(base, p, k)


def _groups(v):
    """``(head, mult)`` pairs, most significant first."""
    out = []
    while v is not None:
        out.append((v.head, v.mult))
        v = v.rest
    out.reverse()
    return out


def _concat(base, v):
    for p, k in _groups(v):
        base = _append(base, p, k)
    return base


def _first(v):
    return v.lead


def _pred(v):
    return Cnf(v.rest, ONE, v.mult - 1) if v.mult > 1 else v.rest


def _is_limit(v):
    return v is not None and v.head is not ONE


def _is_successor(v):
    return v is not None and v.head is ONE


def _is_one(v):
    return v is not None and v.rest is None and v.head is ONE and v.mult == 1


def _is_omega(p):
    return isinstance(p, Pow) and _is_one(p.exp)


def _entries(e):
    """Greatest position first."""
    out = []
    while e is not None:
        out.append((e.pos, e.coef))
        e = e.above
    out.reverse()
    return out


# -- conversion ----------------------------------------------------------------


@lru_cache(maxsize=1 << 12)
def of_term(t: T.Term):
    out = None
    for part in T.parts(t):
        out = _append(out, _principal_of(part), 1)
    return out


@lru_cache(maxsize=1 << 12)
def _principal_of(t: T.Phi):
    entries = t.array.entries
    if not entries:
        return ONE
    if not CV.is_one_row(t.array):
        return Foreign(t)
    if len(entries) == 1 and entries[0][1] == T.EPS:
        return Pow(of_term(entries[0][0]))
    e = None
    for c, p in entries:
        e = Entry(e, None if p == T.EPS else of_term(p.entries[0][0]), of_term(c))
    return Node(e)


@lru_cache(maxsize=1 << 12)
def _principal_term(p) -> T.Term:
    if p is ONE:
        return T.ONE
    if isinstance(p, Foreign):
        return p.term
    if isinstance(p, Pow):
        return T.Phi(T.ArrayTerm([(to_term(p.exp), T.EPS)]))
    return T.Phi(T.ArrayTerm(
        (to_term(c), T.EPS if q is None else T.ArrayTerm([(to_term(q), T.EPS)]))
        for q, c in _entries(p.low)))


def to_term(v) -> T.Term:
    parts = []
    for p, k in _groups(v):
        parts.extend([_principal_term(p)] * k)
    return T.make_sum(parts)


# -- order ---------------------------------------------------------------------


def compare(a, b) -> int:
    if a is b:
        return 0
    if a is None:
        return -1
    if b is None:
        return 1
    p, q = a.lead, b.lead
    if p is not q:
        if _less(p, q):
            return -1
        if _less(q, p):
            return 1
    # align by group index from the top; the parts below a shared node differ
    extra = a.size - b.size
    x, y = a, b
    for _ in range(extra):
        x = x.rest
    for _ in range(-extra):
        y = y.rest
    pairs = []
    while x is not y:
        pairs.append((x, y))
        x, y = x.rest, y.rest
    for x, y in reversed(pairs):
        p, q = x.head, y.head
        if p is not q:
            if _less(p, q):
                return -1
            if _less(q, p):
                return 1
        if x.mult != y.mult:
            return -1 if x.mult < y.mult else 1
    return (extra > 0) - (extra < 0)


def _array(p):
    if p is ONE:
        return []
    if isinstance(p, Pow):
        return [(None, p.exp)]
    return _entries(p.low)


def _subterms_of_chain(e):
    while e is not None:
        yield e.coef
        if e.pos is not None:
            yield e.pos
        e = e.above


def _subterms(p):
    if p is ONE:
        return ()
    if isinstance(p, Pow):
        return (p.exp,)
    return tuple(_subterms_of_chain(p.low))


def _principal_le(p, v):
    # p <= v for a principal p: decided by v's leading summand
    return not _less(_first(v), p)


def _below_principal(v, q):
    return _less(_first(v), q)


def _array_compare(xs, ys):
    for (pa, ca), (pb, cb) in zip(xs, ys):
        c = compare(pa, pb) or compare(ca, cb)
        if c:
            return c
    return (len(xs) > len(ys)) - (len(xs) < len(ys))


@lru_cache(maxsize=1 << 18)
def _less(p, q) -> bool:
    """Strict order on principals, the same rule as :func:`ordinalforge.term.less`."""
    if p is q:
        return False
    if isinstance(p, Foreign) or isinstance(q, Foreign):
        return T.less(_principal_term(p), _principal_term(q))
    if any(_principal_le(p, k) for k in _subterms(q)):
        return True
    return (_array_compare(_array(p), _array(q)) < 0
            and all(_below_principal(k, q) for k in _subterms(p)))


# -- normal forms ----------------------------------------------------------------


def _absorbed(e) -> bool:
    """Whether the node with least entry ``e`` equals its least coefficient."""
    m = e.coef
    if m.rest is not None or m.mult != 1:
        return False
    top = m.head
    if top is ONE or isinstance(top, Pow):
        return False
    if isinstance(top, Foreign):
        return T._absorbed_by_least(_principal_term(Node(e)).array)
    bound, above = _above_info(e.above)
    # top <= some subterm of the chain above iff top <= the greatest leader
    if bound is not None and not _less(bound, top):
        return False
    low = e.pos
    tail = [(q, c) for q, c in _array(top)
            if q is not None and (low is None or compare(q, low) > 0)]
    return _array_compare(tail, above) > 0


@lru_cache(maxsize=1 << 12)
def _above_info(above):
    """Greatest leading principal among the chain's subterms, and its entries."""
    bound = None
    for k in _subterms_of_chain(above):
        h = _first(k)
        if bound is None or _less(bound, h):
            bound = h
    return bound, _entries(above)


def _normal(e):
    """The principal ``φ`` of the chain ``e``, collapsing fixed points."""
    while True:
        if e is None:
            return ONE
        if e.above is None and e.pos is None:
            x = e.coef
            if x.rest is None and x.mult == 1 and isinstance(x.head, (Node, Foreign)):
                if isinstance(x.head, Foreign):
                    return x.head
                e = x.head.low
                continue
            return Pow(x)
        if not _absorbed(e):
            return Node(e)
        top = e.coef.head
        if not isinstance(top, Node):
            return top
        e = top.low


def _power(x):
    """``ω^x`` for nonzero ``x``; the same collapse as ``_normal`` on one entry at 0."""
    if x.rest is None and x.mult == 1 and isinstance(x.head, (Node, Foreign)):
        return x.head
    return Pow(x)


def _mk(above, lows):
    """``φ`` of ``above`` plus ``lows`` (greatest position first); zero coefficients drop."""
    e = above
    for pos, coef in lows:
        if coef is not None:
            e = Entry(e, pos, coef)
    return _normal(e)


# -- fundamental sequences -------------------------------------------------------

_POW, _POS, _COEF = "pow", "pos", "coef"


def _descent(p):
    """``(kind, context, hole)`` when ``p[n]`` only rewrites the limit ``hole``, else None."""
    if isinstance(p, Foreign):
        raise CV.FSUnavailableError(
            f"{T.to_text(p.term)} is outside the one-row fragment")
    if isinstance(p, Pow):
        return (_POW, None, p.exp) if _is_limit(p.exp) else None
    e = p.low
    if e.above is None and _is_one(e.coef):
        return None if _is_successor(e.pos) else (_POS, None, e.pos)
    if _is_limit(e.coef):
        return _COEF, (e.above, e.pos), e.coef
    return None


def _rebuild(kind, ctx, hole):
    if kind is _POW:
        return ONE if hole is None else _power(hole)
    if kind is _POS:
        return _mk(None, [(hole, ONE_V)])
    above, pos = ctx
    return _mk(above, [(pos, hole)])


def _collapses(kind, ctx, hole) -> bool:
    if hole.rest is not None or hole.mult != 1:
        return False
    if kind is _POW:
        return isinstance(hole.head, (Node, Foreign))
    if kind is _POS:
        return False
    above, pos = ctx
    return _absorbed(Entry(above, pos, hole))


def _rewrite(p, n, base):
    """``base + p[n]`` for a principal whose sequence changes its shape."""
    if isinstance(p, Pow):
        y = _pred(p.exp)
        return _append(base, ONE if y is None else _power(y), n)
    e = p.low
    if e.above is None and _is_one(e.coef):
        step = _pred(e.pos)
        acc = _mk(None, [(step, ONE_V)])
        for _ in range(n):
            acc = _mk(None, [(step, value(acc))])
        return _append(base, acc, 1)
    if e.pos is None:
        return _concat(base, _rewrite_zero_position(e, n))
    above, gamma, beta = e.above, e.pos, e.coef
    if _is_successor(gamma):
        if n == 0:
            return base
        acc = None
        for _ in range(n):
            acc = value(_mk(above, [(gamma, _pred(beta)), (_pred(gamma), acc)]))
        return _concat(base, acc)
    return _append(base, _mk(above, [(gamma, _pred(beta)), (fs(gamma, n), ONE_V)]), 1)


def _rewrite_zero_position(e, n):
    rest = e.above
    start = _append(value(_mk(rest, [(None, _pred(e.coef))])), ONE, 1)
    above, delta, gamma = rest.above, rest.pos, rest.coef
    if above is None and _is_one(gamma):
        iterate = _is_successor(delta)
    else:
        if _is_limit(gamma):
            return value(_mk(above, [(delta, fs(gamma, n)), (None, start)]))
        iterate = _is_successor(delta)
    if iterate:
        acc = start
        for _ in range(n):
            acc = value(_mk(above, [(delta, _pred(gamma)), (_pred(delta), acc)]))
        return acc
    low = fs(delta, n)
    if low is None:
        return start
    return value(_mk(above, [(delta, _pred(gamma)), (low, ONE_V), (None, start)]))


def fs(v, n: int):
    """The ``n``-th member of the class-based fundamental sequence of ``v``."""
    if v is None:
        return None
    if v.head is ONE:
        return _pred(v)
    frames = []
    while True:
        base = _append(v.rest, v.head, v.mult - 1)
        d = _descent(v.head)
        if d is None:
            v = _rewrite(v.head, n, base)
            break
        kind, ctx, v = d
        frames.append((kind, ctx, base))
    for kind, ctx, base in reversed(frames):
        v = _append(base, _rebuild(kind, ctx, v), 1)
    return v


def hardy(v, n: int, fuel) -> int:
    """``H_v(n)``; ``fuel.burn`` is charged once per recurrence step.

    Values never form reference cycles, so the cyclic collector is paused
    while the loop allocates; it only costs time here.  The order memos pin
    their arguments and are dropped afterwards.
    """
    enabled = gc.isenabled()
    gc.disable()
    try:
        return _hardy(v, n, fuel)
    finally:
        _less.cache_clear()
        _above_info.cache_clear()
        if enabled:
            gc.enable()


def _hardy(v, n, fuel):
    """Zipper loop behind :func:`hardy`.

    The state is a zipper: ``levels[i + 1]`` is the hole of ``frames[i]`` inside
    the last summand of ``levels[i]``.  A frame is plugged back only when its
    hole stops being a limit or becomes absorbed; outer frames cannot start to
    collapse while their hole only decreases.
    """
    levels, frames = [v], []
    while True:
        v = levels[-1]
        if not frames:
            if v is None:
                break
            if v.head is ONE:
                fuel.burn(v.mult)
                n += v.mult
                levels[0] = v.rest
                continue
            if _is_omega(v.head):
                # H_ω(n) = H_n(n): one limit step, then n successors
                for _ in range(v.mult):
                    fuel.burn(1 + n)
                    n *= 2
                levels[0] = v.rest
                continue
        elif v is None or v.head is ONE or _collapses(*frames[-1][:2], v):
            kind, ctx, base = frames.pop()
            levels.pop()
            levels[-1] = _append(base, _rebuild(kind, ctx, v), 1)
            continue
        fuel.burn()
        while True:
            base = _append(v.rest, v.head, v.mult - 1)
            d = _descent(v.head)
            if d is None:
                levels[-1] = _rewrite(v.head, n, base)
                break
            kind, ctx, v = d
            frames.append((kind, ctx, base))
            levels.append(v)
    fuel.burn()
    return n
