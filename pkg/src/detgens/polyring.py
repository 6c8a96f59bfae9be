"""Exact multivariate polynomials over Q and GF(p).

A :class:`PolyRing` fixes the coefficient field and an ordered tuple of
variable names; a :class:`Polynomial` is a dict from exponent tuples (one
slot per ring variable) to nonzero coefficients.  Terms are printed in
graded reverse lexicographic order with the ring's declaration order as
variable priority.

Rational coefficients are kept as ``int`` when integral and as
:class:`fractions.Fraction` otherwise; GF(p) coefficients are ints in
``range(p)``.  Nothing here touches floating point.

Variable names starting with ``_`` are reserved for fresh variables created
by the package (relation variables, the Rabinowitsch variable).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .errors import FieldMismatchError, HypothesisViolation, ParseError

RESERVED_PREFIX = "_"
_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 3.3e24, probabilistic beyond."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class CoeffField:
    """Q when ``p`` is None, otherwise the prime field GF(p)."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not is_prime(self.p):
            raise ValueError(f"GF(p) needs a prime modulus, got {self.p}")

    @classmethod
    def parse(cls, text: str) -> CoeffField:
        """Accept ``Q`` or ``gf:<p>`` (case-insensitive)."""
        t = text.strip().lower()
        if t in ("q", "qq", "rationals"):
            return cls()
        if t.startswith("gf:") or t.startswith("gf("):
            digits = t[3:].rstrip(")")
            try:
                return cls(int(digits))
            except ValueError as exc:
                raise ParseError(f"bad field {text!r}: {exc}") from None
        raise ParseError(f"unknown field {text!r}; use Q or gf:<prime>")

    @property
    def is_rational(self) -> bool:
        return self.p is None

    def convert(self, c):
        if self.p is None:
            if isinstance(c, Fraction):
                return c.numerator if c.denominator == 1 else c
            if isinstance(c, int):
                return c
            raise TypeError(f"cannot coerce {c!r} into Q")
        if isinstance(c, Fraction):
            return c.numerator * pow(c.denominator, -1, self.p) % self.p
        if isinstance(c, int):
            return c % self.p
        raise TypeError(f"cannot coerce {c!r} into GF({self.p})")

    def add(self, a, b):
        if self.p is None:
            return _norm_q(a + b)
        return (a + b) % self.p

    def mul(self, a, b):
        if self.p is None:
            return _norm_q(a * b)
        return a * b % self.p

    def neg(self, a):
        return -a if self.p is None else (-a) % self.p

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        if self.p is None:
            return _norm_q(Fraction(1) / a)
        return pow(a, -1, self.p)

    def __str__(self):
        return "Q" if self.p is None else f"gf:{self.p}"


def _norm_q(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def grevlex_key(exps: tuple) -> tuple:
    """Sort key: larger key means larger monomial in degrevlex."""
    return (sum(exps), tuple(-e for e in reversed(exps)))


@dataclass(frozen=True)
class PolyRing:
    """Polynomial ring over ``field`` in the ordered variables ``names``."""

    names: tuple
    field: CoeffField = field(default_factory=CoeffField)

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names in {self.names}")
        for nm in self.names:
            if not _IDENT.match(nm):
                raise ValueError(f"invalid variable name {nm!r}")

    @classmethod
    def user(cls, names: Iterable[str], field: CoeffField | None = None) -> PolyRing:
        """Ring for user-declared names; reserved names are refused."""
        names = tuple(names)
        bad = [nm for nm in names if nm.startswith(RESERVED_PREFIX)]
        if bad:
            raise ParseError(f"variable names starting with {RESERVED_PREFIX!r} are reserved: {bad}")
        return cls(names, field or CoeffField())

    @property
    def nvars(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self._index()[name]
        except KeyError:
            raise ParseError(f"unknown variable {name!r}") from None

    def _index(self):
        return _name_index(self.names)

    def extend(self, new_names: Iterable[str]) -> PolyRing:
        """Append variables; polynomials of ``self`` promote automatically."""
        return PolyRing(self.names + tuple(new_names), self.field)

    def fresh(self, stem: str, count: int = 1) -> list:
        """Reserved names ``_stem``, ``_stem1``... not already in the ring."""
        taken = set(self.names)
        out = []
        i = 0
        while len(out) < count:
            nm = f"{RESERVED_PREFIX}{stem}{i if i or count > 1 else ''}"
            i += 1
            if nm not in taken:
                out.append(nm)
                taken.add(nm)
        return out

    # constructors
    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    def one(self) -> Polynomial:
        return self.const(1)

    def const(self, c) -> Polynomial:
        c = self.field.convert(c)
        if not c:
            return self.zero()
        return Polynomial(self, {(0,) * self.nvars: c})

    def gen(self, name: str) -> Polynomial:
        e = [0] * self.nvars
        e[self.index(name)] = 1
        return Polynomial(self, {tuple(e): 1})

    def gens(self) -> list:
        return [self.gen(nm) for nm in self.names]

    def from_terms(self, terms: Mapping) -> Polynomial:
        """Build from an exponent-tuple -> coefficient map, dropping zeros."""
        conv = self.field.convert
        out = {}
        for e, c in terms.items():
            e = tuple(e)
            if len(e) != self.nvars:
                raise ValueError(f"exponent {e} has wrong length for {self.names}")
            c = conv(c)
            if c:
                out[e] = c
        return Polynomial(self, out)

    def convert(self, f: Polynomial) -> Polynomial:
        """Re-express ``f`` in this ring, matching variables by name."""
        if f.ring == self:
            return f
        if f.ring.field != self.field:
            raise FieldMismatchError(f"field {f.ring.field} vs {self.field}")
        slot = []
        for nm in f.ring.names:
            slot.append(self._index().get(nm))
        out = {}
        for e, c in f.terms.items():
            ne = [0] * self.nvars
            for i, k in enumerate(e):
                if k:
                    if slot[i] is None:
                        raise FieldMismatchError(
                            f"variable {f.ring.names[i]!r} does not exist in {self.names}")
                    ne[slot[i]] = k
            out[tuple(ne)] = c
        return Polynomial(self, out)

    def parse(self, text: str) -> Polynomial:
        return _Parser(self, text).parse()

    def __repr__(self):
        return f"PolyRing({', '.join(self.names)}; {self.field})"


@lru_cache(maxsize=None)
def _name_index(names):
    return {nm: i for i, nm in enumerate(names)}


def _common_ring(r1: PolyRing, r2: PolyRing) -> PolyRing:
    if r1 == r2:
        return r1
    if r1.field != r2.field:
        raise FieldMismatchError(f"coefficient fields differ: {r1.field} vs {r2.field}")
    a, b = r1.names, r2.names
    if b[: len(a)] == a:
        return r2
    if a[: len(b)] == b:
        return r1
    raise FieldMismatchError(f"incompatible rings {a} and {b}")


def _pad(f: Polynomial, ring: PolyRing) -> dict:
    if f.ring is ring or f.ring == ring:
        return f.terms
    extra = (0,) * (ring.nvars - f.ring.nvars)
    return {e + extra: c for e, c in f.terms.items()}


class Polynomial:
    """Immutable polynomial in canonical form (no zero coefficients)."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms
        self._hash = None

    # -- coercion -----------------------------------------------------
    def _lift(self, other):
        if isinstance(other, Polynomial):
            ring = _common_ring(self.ring, other.ring)
            return ring, _pad(self, ring), _pad(other, ring)
        if isinstance(other, (int, Fraction)):
            c = self.ring.field.convert(other)
            return self.ring, self.terms, ({(0,) * self.ring.nvars: c} if c else {})
        return None

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other):
        lifted = self._lift(other)
        if lifted is None:
            return NotImplemented
        ring, a, b = lifted
        return Polynomial(ring, _add_terms(ring.field, a, b))

    __radd__ = __add__

    def __neg__(self):
        neg = self.ring.field.neg
        return Polynomial(self.ring, {e: neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        lifted = self._lift(other)
        if lifted is None:
            return NotImplemented
        ring, a, b = lifted
        neg = ring.field.neg
        return Polynomial(ring, _add_terms(ring.field, a, {e: neg(c) for e, c in b.items()}))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        lifted = self._lift(other)
        if lifted is None:
            return NotImplemented
        ring, a, b = lifted
        return Polynomial(ring, _mul_terms(ring.field, a, b))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c) -> Polynomial:
        fld = self.ring.field
        c = fld.convert(c)
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring, {e: fld.mul(v, c) for e, v in self.terms.items()})

    # -- comparison ---------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Polynomial):
            if self.ring.field != other.ring.field:
                return False
            try:
                ring = _common_ring(self.ring, other.ring)
            except FieldMismatchError:
                return False
            return _pad(self, ring) == _pad(other, ring)
        if isinstance(other, (int, Fraction)):
            return self.terms == self.ring.const(other).terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            # strip trailing zero slots so prefix-promoted copies hash alike
            items = []
            for e, c in self.terms.items():
                k = len(e)
                while k and not e[k - 1]:
                    k -= 1
                items.append((e[:k], c))
            self._hash = hash((self.ring.field, frozenset(items)))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # -- inspection ---------------------------------------------------
    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_term(self):
        return self.terms.get((0,) * self.ring.nvars, 0)

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def support(self) -> set:
        """Names of the variables occurring in some term."""
        used = set()
        for e in self.terms:
            for i, k in enumerate(e):
                if k:
                    used.add(i)
        return {self.ring.names[i] for i in used}

    def sorted_terms(self) -> list:
        """(exponents, coefficient) pairs, largest monomial first."""
        return sorted(self.terms.items(), key=lambda ec: grevlex_key(ec[0]), reverse=True)

    def leading_term(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self.terms.items(), key=lambda ec: grevlex_key(ec[0]))

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Polynomial({format_poly(self)!r})"


def _add_terms(fld: CoeffField, a: dict, b: dict) -> dict:
    if len(a) < len(b):
        a, b = b, a
    out = dict(a)
    p = fld.p
    for e, c in b.items():
        v = out.get(e)
        if v is None:
            out[e] = c
            continue
        s = v + c if p is None else (v + c) % p
        if s:
            out[e] = _norm_q(s) if p is None else s
        else:
            del out[e]
    return out


def _mul_terms(fld: CoeffField, a: dict, b: dict) -> dict:
    if not a or not b:
        return {}
    out: dict = {}
    p = fld.p
    get = out.get
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = get(e, 0) + ca * cb
    if p is None:
        return {e: _norm_q(c) for e, c in out.items() if c}
    return {e: c % p for e, c in out.items() if c % p}


# ----------------------------------------------------------------------
# operations on polynomials
# ----------------------------------------------------------------------

def substitute(f: Polynomial, bindings: Mapping) -> Polynomial:
    """Simultaneously replace variables of ``f``.

    ``bindings`` maps variable names (or generator polynomials) to
    polynomials or scalars.  The result lives in the ring of the bound
    polynomials; variables of ``f`` left unbound must exist there by name.
    """
    if not bindings:
        return f
    images = {}
    target = None
    for key, val in bindings.items():
        name = _var_name(key)
        if name not in f.ring._index():
            raise ValueError(f"variable {name!r} is not in {f.ring.names}")
        if isinstance(val, Polynomial):
            if val.ring.field != f.ring.field:
                raise FieldMismatchError(f"binding for {name} is over {val.ring.field}, not {f.ring.field}")
            target = val.ring if target is None else _common_ring(target, val.ring)
        images[name] = val
    if target is None:
        target = f.ring
    img = []
    for nm in f.ring.names:
        if nm in images:
            v = images[nm]
            img.append(target.convert(v) if isinstance(v, Polynomial) else target.const(v))
        else:
            img.append(None)
    result = target.zero()
    powers: dict = {}

    def power(i, k):
        key = (i, k)
        if key not in powers:
            if img[i] is None:
                img[i] = target.gen(f.ring.names[i])
            powers[key] = img[i] ** k
        return powers[key]

    for e, c in f.terms.items():
        term = target.const(c)
        for i, k in enumerate(e):
            if k:
                term = term * power(i, k)
        result = result + term
    return result


def _var_name(key) -> str:
    if isinstance(key, str):
        return key
    if isinstance(key, Polynomial) and len(key.terms) == 1:
        (e, c), = key.terms.items()
        if c == 1 and sum(e) == 1:
            return key.ring.names[e.index(1)]
    raise ValueError(f"{key!r} is not a variable")


def max_power(f: Polynomial, y) -> int:
    """Largest e such that y**e divides every term of ``f``."""
    if f.is_zero:
        raise ValueError("max_power of the zero polynomial")
    i = f.ring.index(_var_name(y))
    return min(e[i] for e in f.terms)


def determinant(grid: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Exact determinant by Laplace expansion memoized on column subsets."""
    n = len(grid)
    if n == 0 or any(len(row) != n for row in grid):
        raise ValueError("determinant needs a nonempty square grid")
    ring = None
    for row in grid:
        for x in row:
            if isinstance(x, Polynomial):
                ring = x.ring if ring is None else _common_ring(ring, x.ring)
    if ring is None:
        raise ValueError("determinant needs polynomial entries")
    a = [[x if isinstance(x, Polynomial) else ring.const(x) for x in row] for row in grid]
    memo: dict = {}

    def det(i: int, cols: int) -> Polynomial:
        # rows i..n-1 against the column set ``cols`` (bitmask)
        if i == n:
            return ring.one()
        got = memo.get(cols)
        if got is not None:
            return got
        acc = ring.zero()
        sign = 1
        for j in range(n):
            if not cols >> j & 1:
                continue
            entry = a[i][j]
            if entry:
                sub = det(i + 1, cols & ~(1 << j))
                if sub:
                    acc = acc + entry * sub if sign > 0 else acc - entry * sub
            sign = -sign
        memo[cols] = acc
        return acc

    return det(0, (1 << n) - 1)


# ----------------------------------------------------------------------
# matrices
# ----------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class PolyMatrix:
    """An m x n grid of polynomials together with the minor size t."""

    entries: tuple
    t: int
    _minors: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.entries)
        object.__setattr__(self, "entries", rows)
        if not rows or not rows[0]:
            raise ValueError("empty matrix")
        n = len(rows[0])
        if any(len(r) != n for r in rows):
            raise ValueError("ragged matrix")
        ring = None
        for r in rows:
            for x in r:
                if not isinstance(x, Polynomial):
                    raise TypeError(f"matrix entries must be Polynomial, got {x!r}")
                ring = x.ring if ring is None else _common_ring(ring, x.ring)
        rows = tuple(tuple(ring.convert(x) for x in r) for r in rows)
        object.__setattr__(self, "entries", rows)
        if not 1 <= self.t <= self.m <= self.n:
            raise HypothesisViolation(
                f"need 1 <= t <= m <= n, got t={self.t}, m={self.m}, n={self.n}")

    @classmethod
    def from_text(cls, ring: PolyRing, rows, t: int) -> PolyMatrix:
        return cls(tuple(tuple(ring.parse(str(x)) for x in r) for r in rows), t)

    @property
    def m(self) -> int:
        return len(self.entries)

    @property
    def n(self) -> int:
        return len(self.entries[0])

    @property
    def ring(self) -> PolyRing:
        return self.entries[0][0].ring

    def entry(self, i: int, j: int) -> Polynomial:
        """1-based access."""
        return self.entries[i - 1][j - 1]

    def with_entry(self, i: int, j: int, value: Polynomial) -> PolyMatrix:
        rows = [list(r) for r in self.entries]
        rows[i - 1][j - 1] = value
        return PolyMatrix(tuple(map(tuple, rows)), self.t)

    def with_t(self, t: int) -> PolyMatrix:
        return PolyMatrix(self.entries, t)

    def minor(self, rows: Sequence[int], cols: Sequence[int]) -> Polynomial:
        """Determinant of the submatrix on 1-based ``rows`` and ``cols``."""
        key = (tuple(rows), tuple(cols))
        got = self._minors.get(key)
        if got is None:
            got = determinant([[self.entries[i - 1][j - 1] for j in cols] for i in rows])
            self._minors[key] = got
        return got

    def corner_minor(self) -> Polynomial:
        m, n, t = self.m, self.n, self.t
        return self.minor(range(m - t + 1, m + 1), range(n - t + 1, n + 1))

    def column_is_zero(self, j: int) -> bool:
        return all(not r[j - 1] for r in self.entries)

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.t == other.t and self.entries == other.entries

    def __hash__(self):
        return hash((self.t, self.entries))

    def to_text(self) -> list:
        return [[str(x) for x in r] for r in self.entries]

    def __str__(self):
        cells = self.to_text()
        width = max(len(c) for r in cells for c in r)
        return "\n".join("[ " + "  ".join(c.rjust(width) for c in r) + " ]" for r in cells)


# ----------------------------------------------------------------------
# text syntax
# ----------------------------------------------------------------------

def format_coeff(fld: CoeffField, c) -> tuple:
    """(sign, magnitude text) with GF(p) residues shown symmetrically."""
    if fld.p is not None and c > fld.p // 2:
        c = c - fld.p
    neg = c < 0
    c = -c if neg else c
    if isinstance(c, Fraction):
        return neg, f"{c.numerator}/{c.denominator}"
    return neg, str(c)


def format_monomial(names: Sequence[str], e: tuple) -> str:
    parts = []
    for nm, k in zip(names, e):
        if k == 1:
            parts.append(nm)
        elif k:
            parts.append(f"{nm}^{k}")
    return "*".join(parts)


def format_poly(f: Polynomial) -> str:
    if not f.terms:
        return "0"
    out = []
    for idx, (e, c) in enumerate(f.sorted_terms()):
        neg, mag = format_coeff(f.ring.field, c)
        mono = format_monomial(f.ring.names, e)
        if mono:
            body = mono if mag == "1" else f"{mag}*{mono}"
        else:
            body = mag
        if idx == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


class _Parser:
    """Recursive descent: sums of products of powers, implicit ``*`` allowed."""

    def __init__(self, ring: PolyRing, text: str):
        self.ring = ring
        self.text = text
        self.toks = []
        pos = 0
        text = text.rstrip()
        while pos < len(text):
            mt = _TOKEN.match(text, pos)
            if mt is None:
                break
            num, ident, sym = mt.groups()
            if num is not None:
                self.toks.append(("num", num))
            elif ident is not None:
                self.toks.append(("id", ident))
            else:
                if sym not in "+-*^()":
                    raise ParseError(f"unexpected character {sym!r} in {self.text!r}")
                self.toks.append(("sym", sym))
            pos = mt.end()
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def parse(self) -> Polynomial:
        if not self.toks:
            raise ParseError("empty polynomial text")
        f = self.expr()
        if self.i != len(self.toks):
            raise ParseError(f"trailing input {self.peek()[1]!r} in {self.text!r}")
        return f

    def expr(self):
        acc = self.term()
        while self.peek() in (("sym", "+"), ("sym", "-")):
            _, op = self.take()
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self):
        acc = self.unary()
        while True:
            kind, val = self.peek()
            if (kind, val) == ("sym", "*"):
                self.take()
                acc = acc * self.unary()
            elif kind in ("num", "id") or (kind, val) == ("sym", "("):
                acc = acc * self.power()
            else:
                return acc

    def unary(self):
        kind, val = self.peek()
        if (kind, val) == ("sym", "-"):
            self.take()
            return -self.unary()
        if (kind, val) == ("sym", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("sym", "^"):
            self.take()
            kind, val = self.take()
            if kind != "num" or "/" in val:
                raise ParseError(f"exponent must be a nonnegative integer in {self.text!r}")
            base = base ** int(val)
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            if "/" in val:
                a, b = val.split("/")
                if int(b) == 0:
                    raise ParseError(f"zero denominator in {self.text!r}")
                return self.ring.const(Fraction(int(a), int(b)))
            return self.ring.const(int(val))
        if kind == "id":
            return self.ring.gen(val)
        if (kind, val) == ("sym", "("):
            inner = self.expr()
            if self.take() != ("sym", ")"):
                raise ParseError(f"missing ')' in {self.text!r}")
            return inner
        raise ParseError(f"unexpected {val!r} in {self.text!r}")
