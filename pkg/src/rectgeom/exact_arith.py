"""Exact rationals, sparse multivariate polynomials and rational functions.

Rationals are :class:`fractions.Fraction`. Polynomial coefficients are kept as
``int`` whenever they are integral so the hot multiplication loop stays on
machine-friendly big ints; a ``Fraction`` only appears when a coefficient is
genuinely fractional.

Monomials are stored packed into a single integer, 16 bits per variable, with
the first variable in the most significant field. Multiplying monomials is
then plain integer addition, and comparing packed keys of equal total degree
is lexicographic comparison of exponent vectors.
"""
from __future__ import annotations

import contextlib
import contextvars
import heapq
import re
import threading
from fractions import Fraction
from math import gcd, lcm
from numbers import Rational
from typing import Iterable, Mapping, Sequence

import numpy as np

BigRat = Fraction

_BITS = 16
_MASK = (1 << _BITS) - 1
_MAX_DEGREE = _MASK

DEFAULT_TERM_BUDGET = 2_000_000

ABCD = ("a", "b", "c", "d")
TWO_RECT_VARS = ("a1", "b1", "c1", "d1", "a2", "b2")


class ArityMismatchError(ValueError):
    pass


class BudgetExceededError(RuntimeError):
    """A polynomial grew past the active term-count budget."""


_budget: contextvars.ContextVar[int] = contextvars.ContextVar("term_budget", default=DEFAULT_TERM_BUDGET)


@contextlib.contextmanager
def term_budget(limit: int):
    token = _budget.set(limit)
    try:
        yield
    finally:
        _budget.reset(token)


def default_names(arity: int) -> tuple[str, ...]:
    if arity == 4:
        return ABCD
    if arity == 6:
        return TWO_RECT_VARS
    return tuple(f"x{i + 1}" for i in range(arity))


def _norm_coef(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _pack(exps: Sequence[int]) -> int:
    key = 0
    for e in exps:
        if e < 0 or e > _MAX_DEGREE:
            raise ValueError(f"exponent {e} out of range")
        key = (key << _BITS) | e
    return key


def _unpack(key: int, arity: int) -> tuple[int, ...]:
    out = [0] * arity
    for i in range(arity - 1, -1, -1):
        out[i] = key & _MASK
        key >>= _BITS
    return tuple(out)


def _key_degree(key: int) -> int:
    d = 0
    while key:
        d += key & _MASK
        key >>= _BITS
    return d


class MultiPoly:
    """Sparse polynomial over the rationals with a fixed number of variables.

    Instances are immutable. Zero coefficients are never stored, so equality
    of term maps is equality of polynomials.
    """

    __slots__ = ("arity", "_t", "_deg", "_hash")

    def __init__(self, arity: int, terms: Mapping[Sequence[int], Rational] | None = None):
        self.arity = arity
        t = {}
        for exps, c in (terms or {}).items():
            if len(exps) != arity:
                raise ArityMismatchError(f"exponent vector {exps} does not have length {arity}")
            if c != 0:
                key = _pack(exps)
                t[key] = _norm_coef(t.get(key, 0) + c)
                if t[key] == 0:
                    del t[key]
        self._t = t
        self._deg = None
        self._hash = None

    @classmethod
    def _raw(cls, arity: int, t: dict) -> MultiPoly:
        # t must already be canonical: packed keys, no zero coefficients
        p = cls.__new__(cls)
        p.arity = arity
        p._t = t
        p._deg = None
        p._hash = None
        return p

    @classmethod
    def zero(cls, arity: int) -> MultiPoly:
        return cls._raw(arity, {})

    @classmethod
    def constant(cls, value, arity: int) -> MultiPoly:
        value = _norm_coef(Fraction(value)) if not isinstance(value, int) else value
        return cls._raw(arity, {0: value} if value != 0 else {})

    @classmethod
    def var(cls, index: int, arity: int) -> MultiPoly:
        if not 0 <= index < arity:
            raise IndexError(index)
        return cls._raw(arity, {1 << (_BITS * (arity - 1 - index)): 1})

    @classmethod
    def variables(cls, arity: int) -> tuple[MultiPoly, ...]:
        return tuple(cls.var(i, arity) for i in range(arity))

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> dict[tuple[int, ...], Rational]:
        return {_unpack(k, self.arity): c for k, c in self._t.items()}

    def __len__(self) -> int:
        return len(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def is_constant(self) -> bool:
        return not self._t or (len(self._t) == 1 and 0 in self._t)

    def constant_term(self):
        return self._t.get(0, 0)

    def degree(self) -> int:
        if self._deg is None:
            self._deg = max((_key_degree(k) for k in self._t), default=-1)
        return self._deg

    def sorted_keys(self) -> list[int]:
        """Packed monomials in descending graded-lex order."""
        return sorted(self._t, key=lambda k: (_key_degree(k), k), reverse=True)

    def leading_coefficient(self):
        if not self._t:
            return 0
        return self._t[self.sorted_keys()[0]]

    def content(self) -> Fraction:
        """Positive rational c with self / c having coprime integer coefficients."""
        if not self._t:
            return Fraction(0)
        num = 0
        den = 1
        for c in self._t.values():
            if isinstance(c, int):
                num = gcd(num, c)
            else:
                num = gcd(num, c.numerator)
                den = lcm(den, c.denominator)
        return Fraction(num, den)

    def monomial_gcd(self) -> int:
        """Packed key of the largest monomial dividing every term."""
        if not self._t:
            return 0
        mins = None
        for k in self._t:
            e = _unpack(k, self.arity)
            mins = e if mins is None else tuple(map(min, mins, e))
        return _pack(mins)

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: MultiPoly):
        if self.arity != other.arity:
            raise ArityMismatchError(f"arity {self.arity} vs {other.arity}")

    def _coerce(self, other) -> MultiPoly | None:
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(other, self.arity)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if len(other._t) > len(self._t):
            self, other = other, self
        t = dict(self._t)
        for k, c in other._t.items():
            v = t.get(k)
            if v is None:
                t[k] = c
            else:
                v = v + c
                if v:
                    t[k] = _norm_coef(v)
                else:
                    del t[k]
        return MultiPoly._raw(self.arity, t)

    __radd__ = __add__

    def __neg__(self) -> MultiPoly:
        return MultiPoly._raw(self.arity, {k: -c for k, c in self._t.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, c) -> MultiPoly:
        if c == 0:
            return MultiPoly.zero(self.arity)
        if c == 1:
            return self
        return MultiPoly._raw(self.arity, {k: _norm_coef(v * c) for k, v in self._t.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check(other)
        a, b = self._t, other._t
        if not a or not b:
            return MultiPoly.zero(self.arity)
        if self.degree() + other.degree() > _MAX_DEGREE:
            raise OverflowError("total degree exceeds packed exponent width")
        if len(a) > len(b):
            a, b = b, a
        if len(b) == 1:
            (kb, cb), = b.items()
            return MultiPoly._raw(self.arity, {k + kb: _norm_coef(c * cb) for k, c in a.items()})
        budget = _budget.get()
        t: dict[int, Rational] = {}
        get = t.get
        b_items = list(b.items())
        for ka, ca in a.items():
            for kb, cb in b_items:
                k = ka + kb
                t[k] = get(k, 0) + ca * cb
            if len(t) > budget:
                raise BudgetExceededError(f"polynomial exceeded {budget} terms")
        t = {k: _norm_coef(c) for k, c in t.items() if c}
        return MultiPoly._raw(self.arity, t)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> MultiPoly:
        if n < 0:
            raise ValueError("negative exponent")
        result = MultiPoly.constant(1, self.arity)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def divide_monomial(self, key: int) -> MultiPoly:
        if key == 0:
            return self
        return MultiPoly._raw(self.arity, {k - key: c for k, c in self._t.items()})

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(other, self.arity)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.arity == other.arity and self._t == other._t

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.arity, frozenset(self._t.items())))
        return self._hash

    # -- evaluation ---------------------------------------------------------

    def __call__(self, *point):
        return poly_eval(self, point)

    def to_str(self, names: Sequence[str] | None = None) -> str:
        return serialize(self, names)

    def __str__(self):
        return serialize(self)

    def __repr__(self):
        return f"MultiPoly({serialize(self)!r})"


def exact_divide(p: MultiPoly, q: MultiPoly) -> MultiPoly | None:
    """Quotient p / q if q divides p exactly, else None."""
    p._check(q)
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return p
    arity = p.arity
    qkeys = q.sorted_keys()
    lk = qkeys[0]
    lc = q._t[lk]
    lexp = _unpack(lk, arity)
    q_items = [(k, c) for k, c in q._t.items() if k != lk]
    rem = dict(p._t)
    heap = [(-_key_degree(k), -k) for k in rem]
    heapq.heapify(heap)
    quot: dict[int, Rational] = {}
    while rem:
        _, nk = heapq.heappop(heap)
        k = -nk
        c = rem.pop(k, None)
        if c is None:
            continue
        if any(e < f for e, f in zip(_unpack(k, arity), lexp)):
            return None
        mk = k - lk
        mc = _norm_coef(Fraction(c) / lc) if not (isinstance(c, int) and c % lc == 0) else c // lc
        quot[mk] = mc
        for kq, cq in q_items:
            kk = kq + mk
            old = rem.get(kk)
            v = (old or 0) - mc * cq
            if v:
                rem[kk] = _norm_coef(v)
                if old is None:
                    heapq.heappush(heap, (-_key_degree(kk), -kk))
            elif old is not None:
                del rem[kk]
    return MultiPoly._raw(arity, quot)


def poly_arith(op: str, p: MultiPoly, q: MultiPoly | None = None) -> MultiPoly:
    if op == "neg":
        return -p
    if q is None:
        raise TypeError(f"{op} needs two operands")
    p._check(q)
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown polynomial op {op!r}")


def poly_eval(p: MultiPoly, point: Sequence) -> Fraction:
    """Exact value of ``p`` at ``point`` (any ring elements that multiply with ints)."""
    if len(point) != p.arity:
        raise ArityMismatchError(f"point has {len(point)} coordinates, polynomial has arity {p.arity}")
    if not p._t:
        return Fraction(0)
    point = [Fraction(x) if isinstance(x, int) else x for x in point]
    powers: list[dict[int, object]] = [{0: 1} for _ in point]
    total = 0
    for key, c in p._t.items():
        term = c
        for i, e in enumerate(_unpack(key, p.arity)):
            if e:
                cache = powers[i]
                v = cache.get(e)
                if v is None:
                    v = cache[e] = point[i] ** e
                term = term * v
        total = total + term
    return total if not isinstance(total, int) else Fraction(total)


def poly_is_zero(p: MultiPoly) -> bool:
    return p.is_zero()


# -- text form -------------------------------------------------------------

def _coef_str(c) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def serialize(p: MultiPoly, names: Sequence[str] | None = None) -> str:
    """Deterministic text form, e.g. ``-1*a^1*c^1 + 1*b^2``."""
    names = names or default_names(p.arity)
    if not p._t:
        return "0"
    parts = []
    for i, key in enumerate(p.sorted_keys()):
        c = p._t[key]
        factors = [f"{names[j]}^{e}" for j, e in enumerate(_unpack(key, p.arity)) if e]
        if i == 0:
            coef = _coef_str(c)
        else:
            parts.append(" - " if c < 0 else " + ")
            coef = _coef_str(abs(c))
        parts.append("*".join([coef] + factors))
    return "".join(parts)


_TERM_RE = re.compile(r"\s*([+-])?\s*([^+-]+)")


def parse_poly(text: str, names: Sequence[str] | None = None, arity: int | None = None) -> MultiPoly:
    """Parse a sum of monomials such as ``2*a^2*c - a*b*d + 3/2``.

    Accepts the serializer's output. Factors are separated by ``*``; a missing
    coefficient is 1 and a missing exponent is 1.
    """
    if names is None:
        if arity is None:
            raise ValueError("need variable names or arity")
        names = default_names(arity)
    index = {n: i for i, n in enumerate(names)}
    arity = len(names)
    text = text.strip()
    terms: dict[tuple[int, ...], Fraction] = {}
    if text in ("", "0"):
        return MultiPoly.zero(arity)
    # a leading "-" or a "- " separator are both signs; "3/2" is one token
    pos = 0
    first = True
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if not m or not m.group(2).strip():
            raise ValueError(f"cannot parse polynomial near {text[pos:]!r}")
        sign, body = m.group(1), m.group(2).strip()
        if sign is None and not first:
            raise ValueError(f"missing operator before {body!r}")
        first = False
        pos = m.end()
        coef = Fraction(-1 if sign == "-" else 1)
        exps = [0] * arity
        for factor in body.split("*"):
            factor = factor.strip()
            if not factor:
                raise ValueError(f"empty factor in {body!r}")
            if factor[0].isdigit():
                coef *= Fraction(factor)
                continue
            name, _, e = factor.partition("^")
            if name not in index:
                raise ValueError(f"unknown variable {name!r}")
            exps[index[name]] += int(e) if e else 1
        key = tuple(exps)
        terms[key] = terms.get(key, 0) + coef
    return MultiPoly(arity, terms)


# -- rational functions ----------------------------------------------------

_PROBE = (101, 103, 107, 109, 113, 127, 131, 137)


def _probe_point(arity: int) -> list[int]:
    return [_PROBE[i % len(_PROBE)] + 17 * (i // len(_PROBE)) for i in range(arity)]


def _int_eval(p: MultiPoly, point: Sequence[int]):
    total = 0
    arity = p.arity
    for key, c in p._t.items():
        term = c
        for i, e in enumerate(_unpack(key, arity)):
            if e:
                term = term * point[i] ** e
        total += term
    return total


class _FactorTable:
    """Known denominator factors for one polynomial ring.

    Factors are primitive polynomials with positive leading coefficient,
    collected from every polynomial that was ever divided by. A new divisor is
    split by trial division against the known factors; the leftover cofactor
    becomes a new factor. When a new factor divides an older one, the older
    one is retired and rewritten as the product of the two pieces, so later
    cancellations see the finer split. No gcd is ever computed.
    """

    def __init__(self, arity: int):
        self.arity = arity
        self.polys: list[MultiPoly] = []
        self.probe: list = []
        self.split: dict[int, dict[int, int]] = {}
        self.index: dict[MultiPoly, int] = {}
        self.point = _probe_point(arity)
        self.lock = threading.Lock()
        for i in range(arity):
            self._register(MultiPoly.var(i, arity))

    def _register(self, p: MultiPoly) -> int:
        idx = self.index.get(p)
        if idx is not None:
            return idx
        idx = len(self.polys)
        self.polys.append(p)
        self.probe.append(_int_eval(p, self.point))
        self.index[p] = idx
        return idx

    def is_variable(self, idx: int) -> bool:
        return idx < self.arity

    def try_divide(self, p: MultiPoly, idx: int, p_probe=None) -> MultiPoly | None:
        f = self.polys[idx]
        if f.degree() > p.degree():
            return None
        fv = self.probe[idx]
        if fv:
            # f primitive and f | p force f(point) | p(point) once p is made integral
            pv = _int_eval(p, self.point) if p_probe is None else p_probe
            if isinstance(pv, Fraction):
                pv = pv * p.content().denominator
                if pv.denominator != 1:
                    return None
                pv = pv.numerator
            if pv % fv:
                return None
        return exact_divide(p, f)

    def expand(self, exps: Mapping[int, int]) -> dict[int, int]:
        """Rewrite retired factors into their current pieces."""
        if not any(i in self.split for i in exps):
            return dict(exps)
        out: dict[int, int] = {}
        stack = list(exps.items())
        while stack:
            i, e = stack.pop()
            parts = self.split.get(i)
            if parts is None:
                out[i] = out.get(i, 0) + e
            else:
                stack.extend((j, e * k) for j, k in parts.items())
        return out

    def factor(self, p: MultiPoly) -> tuple[Fraction, dict[int, int]]:
        """Write p = const * prod(factor_i ** e_i)."""
        exps: dict[int, int] = {}
        m = p.monomial_gcd()
        if m:
            for i, e in enumerate(_unpack(m, self.arity)):
                if e:
                    exps[i] = e
            p = p.divide_monomial(m)
        c = p.content()
        if p.leading_coefficient() < 0:
            c = -c
        p = p.scale(1 / c)
        if p.is_constant():
            return c, exps
        with self.lock:
            order = sorted((i for i in range(self.arity, len(self.polys)) if i not in self.split),
                           key=lambda i: len(self.polys[i]))
            for i in order:
                while True:
                    q = self.try_divide(p, i)
                    if q is None:
                        break
                    exps[i] = exps.get(i, 0) + 1
                    p = q
                    if p.is_constant():
                        break
                if p.is_constant():
                    break
            if not p.is_constant():
                idx = self._register(p)
                exps[idx] = exps.get(idx, 0) + 1
                self._refine(idx)
        return c, exps

    def _refine(self, new: int):
        f = self.polys[new]
        for i in range(self.arity, new):
            if i in self.split or len(self.polys[i]) <= len(f):
                continue
            q = self.try_divide(self.polys[i], new)
            if q is None or q.is_constant():
                continue
            # both factors primitive with positive leading coefficient, so q is too
            j = self._register(q)
            self.split[i] = {new: 1, j: 1}

    def power(self, exps: Mapping[int, int]) -> MultiPoly:
        out = MultiPoly.constant(1, self.arity)
        mono = [0] * self.arity
        for i, e in sorted(exps.items()):
            if self.is_variable(i):
                mono[i] += e
            else:
                out = out * self.polys[i] ** e
        if any(mono):
            out = out * MultiPoly._raw(self.arity, {_pack(mono): 1})
        return out


_tables: dict[int, _FactorTable] = {}
_tables_lock = threading.Lock()


def _table(arity: int) -> _FactorTable:
    t = _tables.get(arity)
    if t is None:
        with _tables_lock:
            t = _tables.get(arity)
            if t is None:
                t = _tables[arity] = _FactorTable(arity)
    return t


def _cancel(num: MultiPoly, exps: dict[int, int], table: _FactorTable) -> tuple[MultiPoly, dict[int, int]]:
    if num.is_zero():
        return num, {}
    exps = table.expand(exps)
    m = num.monomial_gcd()
    if m:
        me = _unpack(m, table.arity)
        cut = [0] * table.arity
        for i in range(table.arity):
            if exps.get(i) and me[i]:
                k = min(exps[i], me[i])
                cut[i] = k
                exps[i] -= k
        if any(cut):
            num = num.divide_monomial(_pack(cut))
    probe = None
    for i in sorted(exps, key=lambda i: len(table.polys[i])):
        if table.is_variable(i) or not exps[i]:
            continue
        while exps[i]:
            if probe is None:
                probe = _int_eval(num, table.point)
            q = table.try_divide(num, i, probe)
            if q is None:
                break
            num = q
            probe = None
            exps[i] -= 1
    return num, {i: e for i, e in exps.items() if e}


class RatFun:
    """Quotient of two polynomials; equality is by cross-multiplication.

    The denominator is kept as a product of known factor polynomials (see
    :class:`_FactorTable`) so that common denominators are lcm-sized and
    factors that visibly divide the numerator are cancelled by exact trial
    division. All scalar content lives in the numerator.
    """

    __slots__ = ("num", "_exps", "_den")

    def __init__(self, num: MultiPoly, den: MultiPoly | None = None):
        if den is None:
            self.num, self._exps, self._den = num, {}, None
            return
        num._check(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        table = _table(num.arity)
        c, exps = table.factor(den)
        num, exps = _cancel(num.scale(1 / c), exps, table)
        self.num, self._exps, self._den = num, exps, None

    @classmethod
    def _make(cls, num: MultiPoly, exps: dict[int, int], cancel: bool = True) -> RatFun:
        f = cls.__new__(cls)
        if cancel and exps:
            num, exps = _cancel(num, exps, _table(num.arity))
        if num.is_zero():
            exps = {}
        f.num, f._exps, f._den = num, exps, None
        return f

    @property
    def arity(self) -> int:
        return self.num.arity

    @property
    def den(self) -> MultiPoly:
        if self._den is None:
            self._den = _table(self.arity).power(self._exps)
        return self._den

    @property
    def den_factors(self) -> dict[int, int]:
        return dict(self._exps)

    @classmethod
    def from_poly(cls, p: MultiPoly) -> RatFun:
        return cls._make(p, {}, cancel=False)

    @classmethod
    def constant(cls, value, arity: int) -> RatFun:
        return cls.from_poly(MultiPoly.constant(value, arity))

    @classmethod
    def variables(cls, arity: int) -> tuple[RatFun, ...]:
        return tuple(cls.from_poly(v) for v in MultiPoly.variables(arity))

    def _coerce(self, other) -> RatFun | None:
        if isinstance(other, RatFun):
            self.num._check(other.num)
            return other
        if isinstance(other, (int, Fraction)):
            return RatFun.constant(other, self.arity)
        if isinstance(other, MultiPoly):
            return RatFun.from_poly(other)
        return None

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def __add__(self, other):
        g = self._coerce(other)
        if g is None:
            return NotImplemented
        if g.num.is_zero():
            return self
        if self.num.is_zero():
            return g
        nums, exps = common_denominator([self, g])
        return RatFun._make(nums[0] + nums[1], exps)

    __radd__ = __add__

    def __neg__(self):
        return RatFun._make(-self.num, dict(self._exps), cancel=False)

    def __sub__(self, other):
        g = self._coerce(other)
        if g is None:
            return NotImplemented
        return self + (-g)

    def __rsub__(self, other):
        g = self._coerce(other)
        if g is None:
            return NotImplemented
        return g + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RatFun._make(self.num.scale(other), dict(self._exps), cancel=False)
        g = self._coerce(other)
        if g is None:
            return NotImplemented
        if self.num.is_zero() or g.num.is_zero():
            return RatFun.constant(0, self.arity)
        table = _table(self.arity)
        n1, e2 = _cancel(self.num, dict(g._exps), table)
        n2, e1 = _cancel(g.num, dict(self._exps), table)
        exps = dict(e1)
        for i, e in e2.items():
            exps[i] = exps.get(i, 0) + e
        return RatFun._make(n1 * n2, exps, cancel=False)

    __rmul__ = __mul__

    def reciprocal(self) -> RatFun:
        if self.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        table = _table(self.arity)
        c, exps = table.factor(self.num)
        return RatFun._make(self.den.scale(1 / c), exps, cancel=False)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return RatFun._make(self.num.scale(1 / Fraction(other)), dict(self._exps), cancel=False)
        g = self._coerce(other)
        if g is None:
            return NotImplemented
        return self * g.reciprocal()

    def __rtruediv__(self, other):
        g = self._coerce(other)
        if g is None:
            return NotImplemented
        return g * self.reciprocal()

    def __pow__(self, n: int) -> RatFun:
        if n < 0:
            return self.reciprocal() ** (-n)
        return RatFun._make(self.num ** n, {i: e * n for i, e in self._exps.items()}, cancel=False)

    def __eq__(self, other):
        g = self._coerce(other)
        if g is None:
            return NotImplemented
        return ratfun_eq(self, g)

    __hash__ = None

    def evaluate(self, point: Sequence) -> Fraction:
        den = poly_eval(self.den, point)
        if den == 0:
            raise ZeroDivisionError("denominator vanishes at evaluation point")
        return poly_eval(self.num, point) / den

    def __repr__(self):
        return f"RatFun({serialize(self.num)!r}, {serialize(self.den)!r})"

    def to_str(self, names: Sequence[str] | None = None) -> str:
        if not self._exps:
            return serialize(self.num, names)
        return f"({serialize(self.num, names)}) / ({serialize(self.den, names)})"


def common_denominator(fs: Sequence[RatFun]) -> tuple[list[MultiPoly], dict[int, int]]:
    """Numerators over the least common product of the known denominator factors."""
    table = _table(fs[0].arity)
    expanded = [table.expand(f._exps) for f in fs]
    lcm_exps: dict[int, int] = {}
    for ex in expanded:
        for i, e in ex.items():
            if e > lcm_exps.get(i, 0):
                lcm_exps[i] = e
    nums = []
    for f, ex in zip(fs, expanded):
        missing = {i: e - ex.get(i, 0) for i, e in lcm_exps.items() if e > ex.get(i, 0)}
        nums.append(f.num * table.power(missing) if missing else f.num)
    return nums, lcm_exps


def ratfun_arith(op: str, f: RatFun, g: RatFun) -> RatFun:
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    if op == "div":
        return f / g
    raise ValueError(f"unknown rational-function op {op!r}")


def ratfun_eq(f: RatFun, g: RatFun) -> bool:
    """f == g iff num(f)*den(g) - num(g)*den(f) is the zero polynomial."""
    f.num._check(g.num)
    nums, _ = common_denominator([f, g])
    return nums[0] == nums[1]


# -- randomized zero test --------------------------------------------------

def _rng(*key: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([k % (1 << 64) for k in key]))


def schwartz_zippel_check(p: MultiPoly, trials: int, seed: int) -> bool:
    """Randomized zero test: False means certainly nonzero, True means plausibly zero."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if p.is_zero():
        return True
    rng = _rng(seed, 0x5A)
    for _ in range(trials):
        point = [int(v) for v in rng.integers(-10**6, 10**6, size=p.arity, endpoint=True)]
        if poly_eval(p, point) != 0:
            return False
    return True


def random_rational(seed: int, index: int, slot: int, attempt: int = 0) -> Fraction:
    """Numerator in [-20, 20], denominator in [1, 10], fixed by the tuple of arguments."""
    rng = _rng(seed, index, slot, attempt)
    num = int(rng.integers(-20, 20, endpoint=True))
    den = int(rng.integers(1, 10, endpoint=True))
    return Fraction(num, den)


def rationals(values: Iterable) -> list[Fraction]:
    return [Fraction(v) for v in values]
