"""The poset of minors of sizes t..m of an m x n matrix.

Minors are ordered so that a larger size is smaller, and minors of equal
size are compared index by index.  The rank of a minor is the number of
elements in a maximal chain from the bottom ``[1..m|1..m]`` up to it;
``q(h, X)`` sums all minors of rank ``h``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterator

from .errors import HypothesisViolation, ParseError
from .polyring import PolyMatrix, Polynomial


@dataclass(frozen=True)
class PosetContext:
    m: int
    n: int
    t: int

    def __post_init__(self):
        if not 1 <= self.t <= self.m <= self.n:
            raise HypothesisViolation(
                f"need 1 <= t <= m <= n, got m={self.m}, n={self.n}, t={self.t}")

    @classmethod
    def of(cls, X: PolyMatrix) -> PosetContext:
        return cls(X.m, X.n, X.t)

    @property
    def max_rank(self) -> int:
        return self.m * self.n - self.t * self.t + 1

    def top(self) -> MinorIndex:
        m, n, t = self.m, self.n, self.t
        return MinorIndex(tuple(range(m - t + 1, m + 1)), tuple(range(n - t + 1, n + 1)))

    def bottom(self) -> MinorIndex:
        return MinorIndex(tuple(range(1, self.m + 1)), tuple(range(1, self.m + 1)))

    def contains(self, d: MinorIndex) -> bool:
        return (self.t <= d.size <= self.m
                and d.rows[-1] <= self.m and d.cols[-1] <= self.n)


@dataclass(frozen=True, order=True)
class MinorIndex:
    """Row and column index lists ``[a1..au | b1..bu]`` (1-based)."""

    rows: tuple
    cols: tuple

    def __post_init__(self):
        rows, cols = tuple(self.rows), tuple(self.cols)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        if len(rows) != len(cols) or not rows:
            raise ValueError(f"rows {rows} and cols {cols} must be nonempty and of equal length")
        for seq in (rows, cols):
            if seq[0] < 1 or any(a >= b for a, b in zip(seq, seq[1:])):
                raise ValueError(f"indices must be strictly increasing and >= 1: {seq}")

    @property
    def size(self) -> int:
        return len(self.rows)

    @property
    def index_sum(self) -> int:
        return sum(self.rows) + sum(self.cols)

    def __str__(self):
        # compact form when every index is a single digit
        if all(i < 10 for i in self.rows + self.cols):
            return f"[{''.join(map(str, self.rows))}|{''.join(map(str, self.cols))}]"
        return self.text()

    def text(self) -> str:
        """Canonical ``[a1 a2 .. | b1 b2 ..]`` form."""
        return f"[{' '.join(map(str, self.rows))} | {' '.join(map(str, self.cols))}]"

    @classmethod
    def parse(cls, text: str) -> MinorIndex:
        mt = re.fullmatch(r"\s*\[([^|\]]*)\|([^|\]]*)\]\s*", text)
        if mt is None:
            raise ParseError(f"bad minor index {text!r}")
        sides = []
        for part in mt.groups():
            part = part.strip()
            if " " in part or "," in part:
                vals = [int(x) for x in re.split(r"[\s,]+", part) if x]
            else:
                vals = [int(ch) for ch in part]
            sides.append(tuple(vals))
        try:
            return cls(*sides)
        except ValueError as exc:
            raise ParseError(str(exc)) from None


def leq(d1: MinorIndex, d2: MinorIndex) -> bool:
    """Is d1 <= d2?

    d1 must be at least as large as d2, and its leading indices (as many as
    d2 has) are bounded componentwise by those of d2.  For equal sizes this
    is plain componentwise comparison.  Comparing only the prefix (rather
    than putting every larger minor below every smaller one) is what makes
    the lowering/appending rules of :func:`lower_neighbors` the exact cover
    relation.
    """
    if d1.size < d2.size:
        return False
    return (all(a <= c for a, c in zip(d1.rows, d2.rows))
            and all(b <= d for b, d in zip(d1.cols, d2.cols)))


def lower_neighbors(d: MinorIndex, ctx: PosetContext) -> list:
    """Elements covered by ``d``: one index lowered, or row m / col n appended."""
    out = []
    for side in (0, 1):
        seq = d.rows if side == 0 else d.cols
        for i, a in enumerate(seq):
            lowered = a - 1
            if lowered < 1 or (i > 0 and seq[i - 1] == lowered):
                continue
            new = seq[:i] + (lowered,) + seq[i + 1:]
            out.append(MinorIndex(new, d.cols) if side == 0 else MinorIndex(d.rows, new))
    if d.size < ctx.m and d.rows[-1] < ctx.m and d.cols[-1] < ctx.n:
        out.append(MinorIndex(d.rows + (ctx.m,), d.cols + (ctx.n,)))
    return sorted(out, key=_lex_key)


def rank(d: MinorIndex, ctx: PosetContext) -> int:
    """Closed form mn + 1 - u(m+n+1) + (sum of all indices)."""
    return ctx.m * ctx.n + 1 - d.size * (ctx.m + ctx.n + 1) + d.index_sum


def all_minors(ctx: PosetContext) -> Iterator[MinorIndex]:
    for u in range(ctx.t, ctx.m + 1):
        for rows in combinations(range(1, ctx.m + 1), u):
            for cols in combinations(range(1, ctx.n + 1), u):
                yield MinorIndex(rows, cols)


def _lex_key(d: MinorIndex):
    return (d.rows, d.cols)


@lru_cache(maxsize=64)
def _rank_slices(ctx: PosetContext) -> dict:
    slices: dict = {}
    for d in all_minors(ctx):
        slices.setdefault(rank(d, ctx), []).append(d)
    return {h: tuple(sorted(v, key=_lex_key)) for h, v in slices.items()}


def minors_of_rank(h: int, ctx: PosetContext) -> list:
    """All minors of rank ``h``, lexicographic on (rows, cols)."""
    if not 1 <= h <= ctx.max_rank:
        raise ValueError(f"rank {h} outside 1..{ctx.max_rank}")
    return list(_rank_slices(ctx).get(h, ()))


def q(h: int, X: PolyMatrix) -> Polynomial:
    """Sum of the minors of X of rank h."""
    ctx = PosetContext.of(X)
    acc = X.ring.zero()
    for d in minors_of_rank(h, ctx):
        acc = acc + X.minor(d.rows, d.cols)
    return acc


@dataclass(frozen=True)
class RankedGenerator:
    h: int
    poly: Polynomial
    summands: tuple

    def expression(self) -> str:
        return "+".join(str(d) for d in self.summands)


@dataclass(frozen=True)
class RankedGeneratorSet:
    """Ordered (rank, polynomial, summands) triples with increasing ranks."""

    items: tuple = ()
    matrix: PolyMatrix | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "items", tuple(self.items))
        hs = [g.h for g in self.items]
        if any(a >= b for a, b in zip(hs, hs[1:])):
            raise ValueError(f"ranks must be strictly increasing: {hs}")

    def __len__(self):
        return len(self.items)

    def __iter__(self):
        return iter(self.items)

    def __getitem__(self, i):
        return self.items[i]

    @property
    def polys(self) -> list:
        return [g.poly for g in self.items]

    def check_sums(self, X: PolyMatrix | None = None) -> bool:
        """Recompute every polynomial from its summands."""
        X = X if X is not None else self.matrix
        for g in self.items:
            acc = X.ring.zero()
            for d in g.summands:
                acc = acc + X.minor(d.rows, d.cols)
            if acc != g.poly:
                return False
        return True


def q_prefix(hmax: int, X: PolyMatrix) -> RankedGeneratorSet:
    """q_1..q_hmax of X as a ranked generator set."""
    ctx = PosetContext.of(X)
    if not 0 <= hmax <= ctx.max_rank:
        raise ValueError(f"hmax {hmax} outside 0..{ctx.max_rank}")
    items = [RankedGenerator(h, q(h, X), tuple(minors_of_rank(h, ctx))) for h in range(1, hmax + 1)]
    return RankedGeneratorSet(items, X)


def minors_up_to_rank(h: int, X: PolyMatrix) -> list:
    """Every minor of rank at most h (generators of the rank-h prefix ideal)."""
    ctx = PosetContext.of(X)
    return [X.minor(d.rows, d.cols) for k in range(1, h + 1) for d in minors_of_rank(k, ctx)]


def t_minor_indices(ctx: PosetContext) -> list:
    """Index sets of the t-minors, lowest rank first (lex within a rank)."""
    return [d for h in range(1, ctx.max_rank + 1) for d in minors_of_rank(h, ctx) if d.size == ctx.t]


def t_minors(X: PolyMatrix) -> list:
    """All t-minors of X, the generators of I_t(X), lowest rank first."""
    return [X.minor(d.rows, d.cols) for d in t_minor_indices(PosetContext.of(X))]
