"""Base-Ω normal forms below ε_{Ω+1} and their conversion to dimensional Veblen terms.

An :class:`OmegaTerm` is ``Ω^e₁·c₁ + … + Ω^e_k·c_k`` with strictly decreasing
exponents (themselves OmegaTerms) and nonzero countable coefficients, which
are :class:`~ordinalforge.term.Term` values.  A countable ordinal is the
single summand with exponent 0.

Text form::

    oterm    := "0" | oproduct ("+" oproduct)*
    oproduct := "W" ["^" oexp] ["*" coef] | coef
    oexp     := "(" oterm ")" | "W" ["^" oexp] | atom
    coef     := "(" term ")" | atom

where ``atom`` is a numeral, ``w`` or ``p(...)``.  Products are added with
ordinal addition, so ``W+W^2`` reads as ``W^2``.
"""

from __future__ import annotations

from functools import cmp_to_key, lru_cache
from itertools import combinations, product

from . import term as T
from .arrays import EQUAL, GREATER, LESS

__all__ = [
    "OmegaTerm", "O_ZERO", "O_ONE", "OMEGA_BIG", "countable", "omega_compare", "omega_add",
    "omega_sub_left", "s_set", "k_classify", "t_map", "v_map", "psi0_convert",
    "parse_oterm", "oterm_to_text", "DomainError", "UnderflowError", "seeded_terms",
]


class DomainError(ValueError):
    pass


class UnderflowError(ValueError):
    pass


class OmegaTerm:
    __slots__ = ("entries", "_hash")

    def __init__(self, entries=()):
        self.entries = tuple(entries)
        for i, (e, c) in enumerate(self.entries):
            if not isinstance(e, OmegaTerm) or not isinstance(c, T.Term):
                raise TypeError(f"bad summand {(e, c)!r}")
            if isinstance(c, T.Zero):
                raise T.WellFormednessError("zero coefficient")
            if i and omega_compare(self.entries[i - 1][0], e) != GREATER:
                raise T.WellFormednessError("exponents must strictly decrease")
        self._hash = hash(("O",) + self.entries)

    def __eq__(self, other):
        return (isinstance(other, OmegaTerm) and self._hash == other._hash
                and self.entries == other.entries)

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return omega_compare(self, other) == LESS

    def __bool__(self):
        return bool(self.entries)

    def __str__(self):
        return oterm_to_text(self)

    def __repr__(self):
        return f"OmegaTerm({oterm_to_text(self)!r})"

    @property
    def is_countable(self) -> bool:
        return not self.entries or (len(self.entries) == 1 and not self.entries[0][0])

    def countable_value(self) -> T.Term:
        if not self.is_countable:
            raise ValueError(f"{self} is not countable")
        return self.entries[0][1] if self.entries else T.ZERO

    def split_last(self):
        """``(ξ, β, γ)`` with ``self = ξ + Ω^β·γ`` and ``β`` the least exponent."""
        e, c = self.entries[-1]
        return OmegaTerm(self.entries[:-1]), e, c


O_ZERO = OmegaTerm()


def countable(t: T.Term) -> OmegaTerm:
    return O_ZERO if isinstance(t, T.Zero) else OmegaTerm([(O_ZERO, t)])


O_ONE = countable(T.ONE)
OMEGA_BIG = OmegaTerm([(O_ONE, T.ONE)])


@lru_cache(maxsize=None)
def omega_compare(a: OmegaTerm, b: OmegaTerm) -> int:
    for (ea, ca), (eb, cb) in zip(a.entries, b.entries):
        c = omega_compare(ea, eb)
        if c:
            return c
        c = T.compare(ca, cb)
        if c:
            return c
    la, lb = len(a.entries), len(b.entries)
    return (la > lb) - (la < lb)


def omega_add(a: OmegaTerm, b: OmegaTerm) -> OmegaTerm:
    if not b.entries:
        return a
    head, coef = b.entries[0]
    keep = []
    for e, c in a.entries:
        order = omega_compare(e, head)
        if order == GREATER:
            keep.append((e, c))
            continue
        if order == EQUAL:
            coef = T.add_norm(c, coef)
        break
    return OmegaTerm(keep + [(head, coef)] + list(b.entries[1:]))


def omega_sub_left(a: OmegaTerm, b: OmegaTerm) -> OmegaTerm:
    """``a −− b``, the unique ``c`` with ``b + c = a``."""
    if omega_compare(a, b) == LESS:
        raise UnderflowError(f"{b} exceeds {a}")
    xs, ys = a.entries, b.entries
    i = 0
    while i < len(ys) and xs[i] == ys[i]:
        i += 1
    if i == len(ys):
        return OmegaTerm(xs[i:])
    (ea, ca), (eb, cb) = xs[i], ys[i]
    if ea == eb:
        return OmegaTerm([(ea, T.sub_left(ca, cb))] + list(xs[i + 1:]))
    return OmegaTerm(xs[i:])


def s_set(alpha: OmegaTerm) -> frozenset:
    """Exponents and coefficients of the base-Ω normal form, not hereditarily."""
    out = set()
    for e, c in alpha.entries:
        out.add(e)
        out.add(countable(c))
    return frozenset(out)


@lru_cache(maxsize=None)
def k_classify(alpha: OmegaTerm, beta: T.Term) -> int:
    """The three-way case classifier: -1, 0 or 1."""
    if alpha.is_countable:
        return T.compare(alpha.countable_value(), beta)
    if all(k_classify(r, beta) == LESS for r in s_set(alpha)):
        return LESS
    xi, gamma, delta = alpha.split_last()
    if all(k_classify(r, beta) == LESS for r in s_set(xi)):
        if gamma == countable(beta) and delta == T.ONE:
            return EQUAL
        if k_classify(gamma, beta) == LESS and delta == beta:
            return EQUAL
    return GREATER


def _omega_times(beta: OmegaTerm) -> OmegaTerm:
    return OmegaTerm((omega_add(O_ONE, e), c) for e, c in beta.entries)


@lru_cache(maxsize=None)
def t_map(alpha: OmegaTerm) -> OmegaTerm:
    if not alpha.entries:
        return O_ZERO
    xi, beta, gamma = alpha.split_last()
    lam = T.sub_left(_psi0_raw(xi), T.ONE)
    u = k_classify(beta, lam)
    rho = {LESS: lam, EQUAL: T.ONE, GREATER: T.ZERO}[u]
    low = T.sub_left(T.add_norm(rho, gamma), T.ONE)
    return omega_add(_omega_times(beta), countable(low))


@lru_cache(maxsize=None)
def v_map(alpha: OmegaTerm) -> T.ArrayTerm:
    return T.ArrayTerm((c, v_map(e)) for e, c in alpha.entries)


@lru_cache(maxsize=None)
def _psi0_raw(alpha: OmegaTerm) -> T.Term:
    return T.Phi(v_map(t_map(alpha)))


def _countable_coefficients(alpha: OmegaTerm):
    for e, c in alpha.entries:
        yield c
        yield from _countable_coefficients(e)


def psi0_convert(alpha: OmegaTerm) -> T.Term:
    """``ψ₀(alpha)`` as a dimensional Veblen term.

    Raises :class:`DomainError` when the result is not standard or does not
    exceed every countable coefficient of ``alpha``.
    """
    out = _psi0_raw(alpha)
    why = T.standardness(out)
    if why is not None:
        raise DomainError(f"{alpha} is outside the conversion domain: "
                          f"{T.to_text(out)} is not standard ({why})")
    for c in _countable_coefficients(alpha):
        if not T.less(c, out):
            raise DomainError(f"{alpha} is outside the conversion domain: coefficient "
                              f"{T.to_text(c)} is not below {T.to_text(out)}")
    return out


# -- text ----------------------------------------------------------------------


class _OParser(T._Parser):
    def oterm(self):
        if self.peek() == "0" and not self.text[self.i + 1:self.i + 2].isdigit():
            self.i += 1
            return O_ZERO
        acc = self.oproduct()
        while self.peek() == "+":
            self.i += 1
            acc = omega_add(acc, self.oproduct())
        return acc

    def oproduct(self):
        if self.peek() != "W":
            return countable(self.coef())
        self.i += 1
        exp = O_ONE
        if self.peek() == "^":
            self.i += 1
            exp = self.oexp()
        coef = T.ONE
        if self.peek() == "*":
            self.i += 1
            coef = self.coef()
            if isinstance(coef, T.Zero):
                self.error("zero coefficient")
        return OmegaTerm([(exp, coef)])

    def oexp(self):
        ch = self.peek()
        if ch == "(":
            self.i += 1
            inner = self.oterm()
            self.expect(")")
            return inner
        if ch == "W":
            self.i += 1
            exp = O_ONE
            if self.peek() == "^":
                self.i += 1
                exp = self.oexp()
            return OmegaTerm([(exp, T.ONE)])
        return countable(self.atom())

    def coef(self):
        if self.peek() == "(":
            self.i += 1
            t = self.term()
            self.expect(")")
            return t
        return self.atom()


def parse_oterm(text: str) -> OmegaTerm:
    p = _OParser(text)
    out = p.oterm()
    p.done()
    return out


def _bare(t: T.Term) -> bool:
    return isinstance(t, T.Phi) or all(x == T.ONE for x in T.parts(t))


def _coef_text(t: T.Term) -> str:
    s = T.to_text(t)
    return s if _bare(t) else f"({s})"


def _exp_text(e: OmegaTerm) -> str:
    if e.is_countable:
        return _coef_text(e.countable_value())
    if len(e.entries) == 1 and e.entries[0][1] == T.ONE:
        return oterm_to_text(e)
    return f"({oterm_to_text(e)})"


def oterm_to_text(a: OmegaTerm) -> str:
    if not a.entries:
        return "0"
    out = []
    for e, c in a.entries:
        if not e.entries:
            out.append(_coef_text(c))
            continue
        s = "W" if e == O_ONE else "W^" + _exp_text(e)
        out.append(s if c == T.ONE else f"{s}*{_coef_text(c)}")
    return "+".join(out)


SEED_EXPONENTS = ("0", "1", "2", "w", "W", "W+1", "W*2", "W^2", "W^W", "W^(W+1)")
SEED_COEFFICIENTS = ("1", "2", "w", "w+1", "p(1@(1@()))")


def seeded_terms(exponents=SEED_EXPONENTS, coefficients=SEED_COEFFICIENTS,
                 max_summands=3) -> list:
    """Every normal form with up to ``max_summands`` summands drawn from the seeds."""
    exps = sorted({parse_oterm(s) for s in exponents}, key=cmp_to_key(omega_compare),
                  reverse=True)
    coefs = [T.parse_term(s) for s in coefficients]
    out = [O_ZERO]
    for k in range(1, max_summands + 1):
        for es in combinations(exps, k):
            for cs in product(coefs, repeat=k):
                out.append(OmegaTerm(zip(es, cs)))
    return out
