"""Buchberger's algorithm, normal forms and radical membership.

Internally a monomial is packed into one Python int whose natural order is
the monomial order: products become additions and divisibility is a
guard-bit test.  Coefficients are ints mod p over GF(p) and ``gmpy2.mpq``
over Q; basis elements are kept monic.  Over GF(p) with degrevlex, when the
degrees fit, the packing is narrowed to int64 and reduction runs in the
compiled kernel of :mod:`detgens._kernels`.

Radical membership uses the adjoined-variable trick: f lies in the radical
of I exactly when I + (1 - z*f) is the unit ideal for a fresh variable z.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

import numpy as np
from gmpy2 import mpq

from . import _kernels
from .errors import FieldMismatchError, ResourceLimitExceeded
from .polyring import Polynomial, PolyRing, _common_ring

QUICK_PAIRS = 3000
QUICK_BASIS = 1000
MAX_POWER = 8
POWER_OPS = 2_000_000
_BITS = 24
_DEG_LIMIT = 1 << (_BITS - 3)


@dataclass(frozen=True)
class MonomialOrder:
    """``degrevlex`` or ``lex``; ``priority`` lists variables from largest.

    Without a priority list the ring's declaration order is used.
    """

    kind: str = "degrevlex"
    priority: tuple | None = None

    def __post_init__(self):
        if self.kind not in ("degrevlex", "lex"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.priority is not None:
            object.__setattr__(self, "priority", tuple(self.priority))

    @classmethod
    def parse(cls, text: str) -> MonomialOrder:
        t = text.strip().lower().replace("_", "")
        if t in ("degrevlex", "grevlex", "drl"):
            return cls("degrevlex")
        if t == "lex":
            return cls("lex")
        raise ValueError(f"unknown monomial order {text!r}")

    def variables(self, ring: PolyRing) -> tuple:
        if self.priority is None:
            return ring.names
        pr = tuple(v for v in self.priority if v in ring.names)
        rest = tuple(v for v in ring.names if v not in pr)
        return pr + rest

    def with_last(self, name: str) -> MonomialOrder:
        if self.priority is None:
            return self
        return MonomialOrder(self.kind, self.priority + (name,))


@dataclass(frozen=True)
class Budget:
    """Caps on Buchberger work; exceeding one raises ResourceLimitExceeded."""

    max_pairs: int = 200_000
    max_basis: int = 5_000


@dataclass
class Stats:
    pairs: int = 0
    zero_reductions: int = 0
    max_basis: int = 0


class _Overflow(Exception):
    """A degree no longer fits the compact int64 packing."""


class _Encoding:
    """Packs exponent vectors (ring order) into order-preserving ints."""

    def __init__(self, ring: PolyRing, order: MonomialOrder, bits: int = _BITS):
        self.ring = ring
        self.order = order
        names = order.variables(ring)
        self.perm = [ring.index(nm) for nm in names]
        N = self.N = ring.nvars
        B = self.B = bits
        self.M = (1 << (B - 1)) - 1
        self.fmask = (1 << (B * N)) - 1
        self.lex = order.kind == "lex"
        if self.lex:
            self.shifts = [B * (N - 1 - i) for i in range(N)]
        else:
            self.shifts = [B * i for i in range(N)]
        self.guard = sum(1 << (s + B - 1) for s in self.shifts)
        self.fieldmask = (1 << B) - 1
        self.one = self.encode((0,) * N)

    def encode(self, e) -> int:
        k = 0
        if self.lex:
            for i, ri in enumerate(self.perm):
                k |= e[ri] << self.shifts[i]
            return k
        M = self.M
        for i, ri in enumerate(self.perm):
            k |= (M - e[ri]) << self.shifts[i]
        return k | (sum(e) << (self.B * self.N))

    def decode(self, k: int) -> tuple:
        e = [0] * self.N
        fm = self.fieldmask
        for i, ri in enumerate(self.perm):
            v = (k >> self.shifts[i]) & fm
            e[ri] = v if self.lex else self.M - v
        return tuple(e)

    def divides(self, a: int, b: int) -> bool:
        """Does monomial a divide monomial b?"""
        if self.lex:
            return ((b | self.guard) - a) & self.guard == self.guard
        fm = self.fmask
        return (((a & fm) | self.guard) - (b & fm)) & self.guard == self.guard

    def degree(self, k: int) -> int:
        if self.lex:
            return sum(self.decode(k))
        return k >> (self.B * self.N)


class _Poly:
    """Monic internal polynomial: terms sorted with the leading term first.

    The tail is held as a list of (key, coeff) pairs, or as a pair of int64
    arrays on the compact path (the list is then built on demand).
    """

    __slots__ = ("lm", "_tail", "arr", "sugar")

    def __init__(self, terms: list | None, sugar: int = 0, lm: int = 0, arr=None):
        if terms is None:
            self.lm, self._tail, self.arr = lm, None, arr
        else:
            self.lm, self._tail, self.arr = terms[0][0], terms[1:], None
        self.sugar = sugar

    @property
    def tail(self) -> list:
        if self._tail is None:
            self._tail = list(zip(self.arr[0].tolist(), self.arr[1].tolist()))
        return self._tail

    def arrays(self):
        if self.arr is None:
            t = self._tail
            self.arr = (np.array([k for k, _ in t], np.int64), np.array([c for _, c in t], np.int64))
        return self.arr


def _compact_ok(ring: PolyRing, order: MonomialOrder) -> bool:
    p = ring.field.p
    return (_kernels.wanted() and p is not None and p < (1 << 31)
            and order.kind == "degrevlex" and 63 // (ring.nvars + 1) >= 5)


class _Flat:
    """Basis tails concatenated into arrays for the division kernel."""

    def __init__(self, engine: _Engine, polys: Sequence[_Poly] = ()):
        self.engine = engine
        self.lms = np.zeros(16, np.int64)
        self.offs = np.zeros(17, np.int64)
        self.tk = np.zeros(1024, np.int64)
        self.tc = np.zeros(1024, np.int64)
        self.n = 0
        self.cache = _kernels.new_cache()
        for g in polys:
            self.append(g)

    def append(self, g: _Poly):
        keys, coefs = g.arrays()
        n, start = self.n, int(self.offs[self.n])
        end = start + len(keys)
        if n + 1 >= len(self.lms):
            self.lms = np.concatenate([self.lms, np.zeros_like(self.lms)])
            self.offs = np.concatenate([self.offs, np.zeros_like(self.offs)])
        if end > len(self.tk):
            size = max(end, 2 * len(self.tk))
            self.tk = np.concatenate([self.tk, np.zeros(size - len(self.tk), np.int64)])
            self.tc = np.concatenate([self.tc, np.zeros(size - len(self.tc), np.int64)])
        self.lms[n] = g.lm
        self.tk[start:end] = keys
        self.tc[start:end] = coefs
        self.offs[n + 1] = end
        self.n = n + 1

    def reduce(self, fk, fc, s_g=None, s_m=None, s_d=None, full: bool = True, max_ops: int = 0):
        """Remainder arrays, or None once ``max_ops`` merge steps are spent."""
        enc = self.engine.enc
        if s_g is None:
            s_g = s_m = s_d = np.zeros(0, np.int64)
        rk, rc, done = _kernels.nb_reduce(fk, fc, s_g, s_m, s_d, self.lms, self.offs, self.tk,
                                          self.tc, self.n, enc.guard, enc.fmask, self.engine.p,
                                          full, self.cache, max_ops)
        return (rk, rc) if done else None


class _Engine:
    def __init__(self, ring: PolyRing, order: MonomialOrder, compact: bool = False):
        self.ring = ring
        self.order = order
        self.compact = compact
        self.enc = _Encoding(ring, order, 63 // (ring.nvars + 1) if compact else _BITS)
        self.p = ring.field.p
        self.limit = self.enc.M if compact else _DEG_LIMIT

    # conversions
    def to_dict(self, f: Polynomial) -> dict:
        if self.compact and f.total_degree() > self.limit:
            raise _Overflow
        enc = self.enc.encode
        if self.p is None:
            return {enc(e): mpq(c.numerator, c.denominator) if isinstance(c, Fraction) else mpq(c)
                    for e, c in f.terms.items()}
        return {enc(e): c for e, c in f.terms.items()}

    def from_dict(self, d: dict) -> Polynomial:
        dec = self.enc.decode
        if self.p is None:
            out = {}
            for k, c in d.items():
                num, den = int(c.numerator), int(c.denominator)
                out[dec(k)] = num if den == 1 else Fraction(num, den)
            return Polynomial(self.ring, out)
        return Polynomial(self.ring, {dec(k): c for k, c in d.items()})

    def monic(self, d: dict, sugar: int = 0) -> _Poly:
        lm = max(d)
        lc = d[lm]
        if self.p is None:
            inv = 1 / lc
            items = [(k, c * inv) for k, c in d.items()]
        else:
            inv = pow(lc, -1, self.p)
            items = [(k, c * inv % self.p) for k, c in d.items()]
        items.sort(reverse=True)
        deg = self.enc.degree
        return _Poly(items, max(sugar, max(deg(k) for k, _ in items)))

    def monic_arrays(self, keys, coefs, sugar: int = 0) -> _Poly:
        """Compact path: keys already sorted with the leading key first."""
        inv = pow(int(coefs[0]), -1, self.p)
        coefs = coefs[1:] * inv % self.p
        lm = int(keys[0])
        return _Poly(None, max(sugar, self.enc.degree(lm)), lm, (keys[1:], coefs))

    def dict_arrays(self, d: dict):
        keys = sorted(d, reverse=True)
        return np.array(keys, np.int64), np.array([d[k] for k in keys], np.int64)

    def check_degree(self, d: dict):
        if self.enc.lex:
            top = max(max(self.enc.decode(k)) for k in d)
        else:
            top = self.enc.degree(max(d))
        if self.compact and top > self.limit:
            raise _Overflow
        if top >= _DEG_LIMIT:
            raise ResourceLimitExceeded(f"exponent bound {_DEG_LIMIT} exceeded")

    def reducer(self, k: int, basis: Sequence[_Poly], pick=None, cache=None):
        div = self.enc.divides
        if pick is not None:
            found = [g for g in basis if div(g.lm, k)]
            return pick(found) if found else None
        if cache is None:
            for g in basis:
                if div(g.lm, k):
                    return g
            return None
        # cache: key -> divisor, or -> number of basis elements known not to divide
        got = cache.get(k, 0)
        if type(got) is not int:
            return got
        for idx in range(got, len(basis)):
            g = basis[idx]
            if div(g.lm, k):
                cache[k] = g
                return g
        cache[k] = len(basis)
        return None

    def reduce(self, terms: dict, basis: Sequence[_Poly], full: bool = True, pick=None,
               cache: dict | None = None, max_ops: int = 0) -> dict | None:
        """Remainder of ``terms`` (consumed) modulo ``basis``.

        None when a positive ``max_ops`` is exceeded (counted in tail terms).
        """
        p = self.p
        ops = 0
        heap = [-k for k in terms]
        heapq.heapify(heap)
        pop, push = heapq.heappop, heapq.heappush
        rem: dict = {}
        while heap:
            k = -pop(heap)
            c = terms.pop(k, None)
            if c is None:
                continue
            g = self.reducer(k, basis, pick, cache)
            if g is None:
                rem[k] = c
                if not full:
                    rem.update(terms)
                    break
                continue
            if max_ops:
                ops += len(g.tail)
                if ops > max_ops:
                    return None
            delta = k - g.lm
            get = terms.get
            if p is None:
                for gk, gc in g.tail:
                    nk = gk + delta
                    v = get(nk)
                    if v is None:
                        terms[nk] = -c * gc
                        push(heap, -nk)
                    else:
                        v = v - c * gc
                        if v:
                            terms[nk] = v
                        else:
                            del terms[nk]
            else:
                for gk, gc in g.tail:
                    nk = gk + delta
                    v = get(nk)
                    if v is None:
                        terms[nk] = (-c * gc) % p
                        push(heap, -nk)
                    else:
                        v = (v - c * gc) % p
                        if v:
                            terms[nk] = v
                        else:
                            del terms[nk]
        return rem

    def spoly(self, f: _Poly, g: _Poly, lcm: int) -> dict:
        df, dg = lcm - f.lm, lcm - g.lm
        out = {gk + df: gc for gk, gc in f.tail}
        p = self.p
        for gk, gc in g.tail:
            nk = gk + dg
            v = out.get(nk)
            if v is None:
                out[nk] = -gc if p is None else (-gc) % p
            else:
                v = v - gc if p is None else (v - gc) % p
                if v:
                    out[nk] = v
                else:
                    del out[nk]
        return out


class _PairQueue:
    """Critical pairs: a heap for selection plus arrays for the kernels."""

    def __init__(self, nvars: int):
        cap = 64
        self.pi = np.zeros(cap, np.int64)
        self.pj = np.zeros(cap, np.int64)
        self.plcm = np.zeros((cap, nvars), np.int64)
        self.alive = np.zeros(cap, bool)
        self.n = 0
        self.heap: list = []

    def add(self, i: int, j: int, lcm_exps, key: int, deg: int, sugar: int):
        if self.n == len(self.pi):
            grow = len(self.pi)
            self.pi = np.concatenate([self.pi, np.zeros(grow, np.int64)])
            self.pj = np.concatenate([self.pj, np.zeros(grow, np.int64)])
            self.plcm = np.concatenate([self.plcm, np.zeros_like(self.plcm)])
            self.alive = np.concatenate([self.alive, np.zeros(grow, bool)])
        k = self.n
        self.pi[k], self.pj[k], self.plcm[k], self.alive[k] = i, j, lcm_exps, True
        self.n += 1
        heapq.heappush(self.heap, (sugar, deg, key, i, j, k))

    def pop(self):
        """Smallest live pair by (sugar, lcm degree, lcm in the order, i, j)."""
        while self.heap:
            sugar, deg, key, i, j, k = heapq.heappop(self.heap)
            if self.alive[k]:
                self.alive[k] = False
                return i, j, key, sugar
        return None


def _buchberger(engine: _Engine, polys: list, budget: Budget, stats: Stats,
                stop_on_unit: bool, use_numba: bool | None = None,
                use_sugar: bool = False) -> list:
    enc = engine.enc
    G: list = []
    L = np.zeros((16, enc.N), np.int64)
    queue = _PairQueue(enc.N)
    cache: dict = {}
    flat = _Flat(engine) if engine.compact else None
    both = np.array([0, 0], np.int64)
    signs = np.array([1, (engine.p or 0) - 1], np.int64)
    nothing = np.zeros(0, np.int64)

    def install(poly: _Poly):
        nonlocal L
        h = len(G)
        G.append(poly)
        if flat is not None:
            flat.append(poly)
        if h == len(L):
            L = np.concatenate([L, np.zeros_like(L)])
        L[h] = enc.decode(poly.lm)
        if not h:
            return
        n = queue.n
        if n:
            stale = _kernels.stale_pairs(L, queue.pi[:n], queue.pj[:n], queue.plcm[:n], h, use_numba)
            queue.alive[:n] &= ~stale
        keep, lcms = _kernels.pair_candidates(L, h, use_numba)
        for g in np.flatnonzero(keep):
            e = tuple(int(x) for x in lcms[g])
            g = int(g)
            d = sum(e)
            if d > engine.limit:
                raise _Overflow
            sugar = d + max(G[g].sugar - enc.degree(G[g].lm), poly.sugar - enc.degree(poly.lm))
            queue.add(g, h, lcms[g], enc.encode(e), d, sugar if use_sugar else d)

    for f in polys:
        if f:
            install(engine.monic(f))
            if G[-1].lm == enc.one and stop_on_unit:
                return [G[-1]]
    while True:
        nxt = queue.pop()
        if nxt is None:
            break
        i, j, lcm, sugar = nxt
        stats.pairs += 1
        if stats.pairs > budget.max_pairs:
            raise ResourceLimitExceeded(
                f"pair budget {budget.max_pairs} exceeded", stats.pairs, len(G))
        if flat is not None:
            both[0], both[1] = i, j
            rk, rc = flat.reduce(nothing, nothing, both, signs,
                                 np.array([lcm - G[i].lm, lcm - G[j].lm], np.int64))
            if not len(rk):
                stats.zero_reductions += 1
                continue
            h = engine.monic_arrays(rk, rc, sugar)
        else:
            r = engine.reduce(engine.spoly(G[i], G[j], lcm), G, cache=cache)
            if not r:
                stats.zero_reductions += 1
                continue
            engine.check_degree(r)
            h = engine.monic(r, sugar)
        if len(G) + 1 > budget.max_basis:
            raise ResourceLimitExceeded(
                f"basis budget {budget.max_basis} exceeded", stats.pairs, len(G) + 1)
        install(h)
        stats.max_basis = max(stats.max_basis, len(G))
        if h.lm == enc.one:
            return [h]
    return G


def _interreduce(engine: _Engine, G: list) -> list:
    enc = engine.enc
    G = sorted(G, key=lambda g: g.lm)
    minimal: list = []
    for g in G:
        if not any(enc.divides(h.lm, g.lm) for h in minimal):
            minimal.append(g)
    out = []
    if engine.compact:
        # a leading monomial never divides its own tail, so g may stay in the basis
        flat = _Flat(engine, minimal)
        for g in minimal:
            rk, rc = flat.reduce(*g.arrays())
            out.append(_Poly(None, g.sugar, g.lm, (rk, rc)))
        out.sort(key=lambda g: g.lm, reverse=True)
        return out
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        tail = engine.reduce(dict(g.tail), others)
        tail[g.lm] = 1 if engine.p is not None else mpq(1)
        out.append(engine.monic(tail))
    out.sort(key=lambda g: g.lm, reverse=True)
    return out


@dataclass
class GroebnerBasis:
    """A reduced Groebner basis; elements sorted by decreasing leading term."""

    basis: tuple
    order: MonomialOrder
    ring: PolyRing
    stats: Stats = field(default_factory=Stats)
    _engine: _Engine | None = field(default=None, repr=False, compare=False)
    _internal: list | None = field(default=None, repr=False, compare=False)
    _flat: _Flat | None = field(default=None, repr=False, compare=False)
    _wide: tuple | None = field(default=None, repr=False, compare=False)

    def _wide_engine(self):
        """Engine with the wide packing, for inputs beyond the compact degrees."""
        if not self._engine.compact:
            return self._engine, self._internal
        if self._wide is None:
            eng = _Engine(self.ring, self.order)
            dec, enc = self._engine.enc.decode, eng.enc.encode
            internal = [_Poly([(enc(dec(g.lm)), 1)] + [(enc(dec(k)), c) for k, c in g.tail], g.sugar)
                        for g in self._internal]
            self._wide = (eng, internal)
        return self._wide

    def _reduce(self, f: Polynomial, pick: Callable | None = None, max_ops: int = 0):
        engine = self._engine
        if engine.compact and pick is None and f.total_degree() <= engine.limit:
            if self._flat is None:
                self._flat = _Flat(engine, self._internal)
            out = self._flat.reduce(*engine.dict_arrays(engine.to_dict(f)), max_ops=max_ops)
            if out is None:
                return None
            return engine.from_dict(dict(zip(out[0].tolist(), out[1].tolist())))
        engine, internal = self._wide_engine()
        rem = engine.reduce(engine.to_dict(f), internal, pick=pick, max_ops=max_ops)
        return None if rem is None else engine.from_dict(rem)

    @property
    def is_unit(self) -> bool:
        return len(self.basis) == 1 and self.basis[0].is_constant

    def __len__(self):
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    def contains(self, f: Polynomial) -> bool:
        return normal_form(f, self).is_zero


def _ring_of(polys: Iterable[Polynomial]) -> PolyRing:
    ring = None
    for f in polys:
        ring = f.ring if ring is None else _common_ring(ring, f.ring)
    if ring is None:
        raise ValueError("cannot infer a ring from an empty generator list")
    return ring


def buchberger(generators: Sequence[Polynomial], order: MonomialOrder | None = None,
               budget: Budget | None = None, ring: PolyRing | None = None,
               stop_on_unit: bool = False) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``generators``.

    Pairs are processed smallest lcm first (degree, then monomial order,
    then indices).  With ``stop_on_unit`` the run ends as soon as a nonzero
    constant shows up, returning the basis ``{1}``.
    """
    order = order or MonomialOrder()
    budget = budget or Budget()
    gens = list(generators)
    ring = ring or _ring_of(gens)
    gens = [ring.convert(g) for g in gens]
    if _compact_ok(ring, order):
        try:
            return _finish(_Engine(ring, order, compact=True), gens, order, ring, budget, stop_on_unit)
        except _Overflow:
            pass
    return _finish(_Engine(ring, order), gens, order, ring, budget, stop_on_unit)


def _finish(engine: _Engine, gens: list, order: MonomialOrder, ring: PolyRing,
            budget: Budget, stop_on_unit: bool) -> GroebnerBasis:
    stats = Stats()
    G = _buchberger(engine, [engine.to_dict(g) for g in gens], budget, stats, stop_on_unit)
    G = _interreduce(engine, G)
    stats.max_basis = max(stats.max_basis, len(G))
    basis = tuple(engine.from_dict({k: c for k, c in [(g.lm, 1 if engine.p else mpq(1))] + g.tail})
                  for g in G)
    return GroebnerBasis(basis, order, ring, stats, engine, G)


def normal_form(f: Polynomial, G: GroebnerBasis, pick: Callable | None = None) -> Polynomial:
    """Remainder of ``f`` on division by the basis ``G``.

    ``pick`` chooses among several eligible divisors (testing hook); the
    default takes the first one.
    """
    if f.ring.field != G.ring.field:
        raise FieldMismatchError(f"{f.ring.field} vs {G.ring.field}")
    ring = _common_ring(f.ring, G.ring)
    if ring != G.ring:
        G = buchberger(G.basis, G.order, ring=ring)
    return G._reduce(ring.convert(f), pick)


def ideal_member(f: Polynomial, generators: Sequence[Polynomial], **kw) -> bool:
    gens = list(generators)
    ring = _ring_of(gens + [f])
    return buchberger(gens, ring=ring, **kw).contains(f)


@dataclass
class Verdict:
    """Outcome of one radical membership test; truthy iff a member."""

    member: bool
    method: str
    basis_size: int = 0
    pairs: int = 0
    exponent: int = 0
    certificate: GroebnerBasis | None = field(default=None, repr=False)

    def __bool__(self):
        return self.member


def radical_member(f: Polynomial, generators: Sequence[Polynomial],
                   order: MonomialOrder | None = None, budget: Budget | None = None,
                   gb: GroebnerBasis | None = None, max_power: int = MAX_POWER) -> Verdict:
    """Is f in the radical of the ideal generated by ``generators``?

    If a Groebner basis of the ideal (or of a subideal) is supplied, f^k is
    reduced for k = 1..max_power and a zero remainder is a certificate by
    itself.  Otherwise the augmented ideal with ``1 - z*f`` is tested for
    being the unit ideal.
    """
    order = order or MonomialOrder()
    gens = list(generators)
    ring = _ring_of(gens + [f])
    if f.is_zero:
        return Verdict(True, "zero")
    if gb is not None and gb.ring == ring:
        r = f = ring.convert(f)
        for k in range(1, max_power + 1):
            # NF(f^k) = NF(f * NF(f^(k-1)))
            r = gb._reduce(r if k == 1 else f * r, max_ops=POWER_OPS)
            if r is None:
                break
            if r.is_zero:
                return Verdict(True, "ideal" if k == 1 else "power", len(gb), gb.stats.pairs,
                                   exponent=k, certificate=gb)
    (z,) = ring.fresh("z")
    big = ring.extend([z])
    zvar = big.gen(z)
    aug = [big.convert(g) for g in gens] + [1 - zvar * big.convert(f)]
    G = buchberger(aug, order.with_last(z), budget, ring=big, stop_on_unit=True)
    return Verdict(G.is_unit, "rabinowitsch", G.stats.max_basis, G.stats.pairs, certificate=G)


@dataclass
class RadicalReport:
    """Per-generator verdicts for a radical comparison of two ideals."""

    field: str
    left_in_right: list
    right_in_left: list
    inconclusive: str | None = None

    @property
    def equal(self) -> bool:
        return (self.inconclusive is None
                and all(self.left_in_right) and all(self.right_in_left))

    def __bool__(self):
        return self.equal

    @property
    def outcome(self) -> str:
        if self.inconclusive is not None:
            return "inconclusive"
        return "equal" if self.equal else "not equal"

    def records(self) -> dict:
        def side(vs):
            return [{"member": v.member, "method": v.method, "exponent": v.exponent,
                     "basis_size": v.basis_size, "pairs": v.pairs} for v in vs]
        return {"field": self.field, "outcome": self.outcome,
                "left_in_right": side(self.left_in_right),
                "right_in_left": side(self.right_in_left),
                "inconclusive": self.inconclusive}


def radical_contained(I: Sequence[Polynomial], J: Sequence[Polynomial],
                      order: MonomialOrder | None = None, budget: Budget | None = None,
                      stop_early: bool = True) -> list:
    """Verdicts for every generator of I being in the radical of J.

    Each certified member is added to J before the next test; this leaves
    the radical unchanged and makes later tests much cheaper.  A Groebner
    basis of J itself is attempted under a small budget so that plain
    members are recognised without the adjoined variable.
    """
    order = order or MonomialOrder()
    budget = budget or Budget()
    I, J = list(I), list(J)
    ring = _ring_of(I + J)
    quick = Budget(min(budget.max_pairs, QUICK_PAIRS), min(budget.max_basis, QUICK_BASIS))
    try:
        gb = buchberger(J, order, quick, ring=ring)
    except ResourceLimitExceeded:
        gb = None
    known: list = []
    out = []
    for f in I:
        v = radical_member(f, J + known, order, budget, gb)
        out.append(v)
        if v:
            if v.method in ("power", "rabinowitsch"):
                known.append(f)
        elif stop_early:
            break
    return out


def radical_equal(I: Sequence[Polynomial], J: Sequence[Polynomial],
                  order: MonomialOrder | None = None, budget: Budget | None = None) -> RadicalReport:
    """Compare radicals; budget exhaustion yields an inconclusive report."""
    I, J = list(I), list(J)
    ring = _ring_of(I + J)
    report = RadicalReport(str(ring.field), [], [])
    try:
        report.left_in_right = radical_contained(I, J, order, budget)
        if all(report.left_in_right):
            report.right_in_left = radical_contained(J, I, order, budget)
    except ResourceLimitExceeded as exc:
        report.inconclusive = str(exc)
    return report
