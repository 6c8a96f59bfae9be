"""Fewer generators for matrices with zero entries.

The zeros are filled one at a time, from the last to the first in
antidiagonal order, with rank slices of the current matrix: the last zero
gets q_{mn-t^2+1}(X), the next one q_{mn-t^2}(X_1), and so on.  The slices
q_1..q_{mn-t^2-k+1} of the final matrix then generate I_t(X) up to radical.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import HypothesisViolation
from .minorposet import PosetContext, q, q_prefix
from .polyring import PolyMatrix


@dataclass(frozen=True)
class ZeroPattern:
    """1-based positions of declared zero entries."""

    zeros: tuple = ()

    def __post_init__(self):
        zs = tuple(tuple(z) for z in self.zeros)
        object.__setattr__(self, "zeros", zs)
        if len(set(zs)) != len(zs):
            raise HypothesisViolation(f"repeated zero positions: {zs}")

    @classmethod
    def of(cls, X: PolyMatrix) -> ZeroPattern:
        """Every entry of X that is the zero polynomial."""
        return cls(tuple((i, j) for i in range(1, X.m + 1) for j in range(1, X.n + 1)
                         if X.entry(i, j).is_zero))

    def __len__(self):
        return len(self.zeros)

    def check(self, X: PolyMatrix):
        for r, s in self.zeros:
            if not (1 <= r <= X.m and 1 <= s <= X.n):
                raise HypothesisViolation(f"zero position ({r},{s}) outside the {X.m}x{X.n} matrix")
            if not X.entry(r, s).is_zero:
                raise HypothesisViolation(
                    f"declared zero at ({r},{s}) is {X.entry(r, s)}, not 0")


def order_zeros(zp: ZeroPattern) -> list:
    """(r, s) precedes (u, v) iff r+s < u+v, or r+s = u+v and r < u."""
    return sorted(zp.zeros, key=lambda z: (z[0] + z[1], z[0]))


@dataclass
class HypothesisReport:
    ok: bool
    k: int
    bound: int
    problems: list = field(default_factory=list)

    def __bool__(self):
        return self.ok

    def message(self) -> str:
        return "ok" if self.ok else "; ".join(self.problems)


def check_antidiagonal_hypothesis(zp: ZeroPattern, ctx: PosetContext) -> HypothesisReport:
    """k <= min{2t+1, m+n-2t} and the h-th ordered zero sits at r+s <= h+1."""
    m, n, t = ctx.m, ctx.n, ctx.t
    k = len(zp)
    bound = min(2 * t + 1, m + n - 2 * t)
    problems = []
    if k > bound:
        problems.append(f"k <= min{{2t+1, m+n-2t}} violated: k={k}, bound={bound}")
    for h, (r, s) in enumerate(order_zeros(zp), start=1):
        if r + s > h + 1:
            problems.append(
                f"zero {h} at ({r},{s}) is not on consecutive antidiagonals from the left: "
                f"r+s={r + s} > h+1={h + 1}")
    return HypothesisReport(not problems, k, bound, problems)


def _fill(X: PolyMatrix, zeros: list):
    """Fill zeros[k-1], ..., zeros[0] with q_{top}, q_{top-1}, ... in turn."""
    ctx = PosetContext.of(X)
    k = len(zeros)
    Xh = X
    placed = [None] * k
    for h in range(1, k + 1):
        r, s = zeros[k - h]
        p = q(ctx.max_rank + 1 - h, Xh)
        placed[k - h] = p
        Xh = Xh.with_entry(r, s, p)
    return Xh, placed


def antidiagonal_reduce(X: PolyMatrix, zp: ZeroPattern | None = None):
    """mn - t^2 - k + 1 generators for k zeros on leading antidiagonals.

    Returns ``(X', gens)``.  Raises HypothesisViolation when the zero
    placement or count is outside the proven range.
    """
    zp = ZeroPattern.of(X) if zp is None else zp
    zp.check(X)
    ctx = PosetContext.of(X)
    report = check_antidiagonal_hypothesis(zp, ctx)
    if not report:
        raise HypothesisViolation(report.message())
    zeros = order_zeros(zp)
    k = len(zeros)
    Xp, placed = _fill(X, zeros)
    count = ctx.max_rank - k
    for h, p in enumerate(placed, start=1):
        if q(count + h, Xp) != p:
            raise AssertionError(f"filled value p_{h} is not the rank-{count + h} slice of X'")
    return Xp, q_prefix(count, Xp)


def maxminor_reduce(X: PolyMatrix, zp: ZeroPattern | None = None):
    """mn - m^2 - k + 1 generators of the maximal-minor ideal, k <= n - m.

    Same filling recursion as :func:`antidiagonal_reduce`; the zeros may
    sit anywhere.  Certify the output.
    """
    zp = ZeroPattern.of(X) if zp is None else zp
    if X.t != X.m:
        raise HypothesisViolation(f"t = m violated: t={X.t}, m={X.m}")
    zp.check(X)
    k = len(zp)
    if k > X.n - X.m:
        raise HypothesisViolation(f"k <= n-m violated: k={k}, bound={X.n - X.m}")
    Xp, _ = _fill(X, order_zeros(zp))
    ctx = PosetContext.of(X)
    return Xp, q_prefix(ctx.max_rank - k, Xp)


def drop_zero_columns(X: PolyMatrix) -> PolyMatrix:
    """X without its identically zero columns (same t-minor ideal)."""
    keep = [j for j in range(1, X.n + 1) if not X.column_is_zero(j)]
    if not keep:
        raise HypothesisViolation("every column is zero: the minor ideal is zero")
    if len(keep) < X.m:
        raise HypothesisViolation(
            f"only {len(keep)} nonzero columns remain; need at least m={X.m}")
    rows = tuple(tuple(X.entry(i, j) for j in keep) for i in range(1, X.m + 1))
    return PolyMatrix(rows, X.t)


def two_row_reduce(X: PolyMatrix, zp: ZeroPattern | None = None):
    """2n - 3 - k generators of I_2 for a 2 x n matrix with k zeros off Delta.

    Zero columns are dropped and the remaining zeros go through
    :func:`maxminor_reduce`.  Returns ``(X_dropped, X', gens)``.
    """
    if X.m != 2 or X.t != 2 or X.n < 3:
        raise HypothesisViolation(f"need a 2 x n matrix with n >= 3 and t = 2, got {X.m}x{X.n}, t={X.t}")
    zp = ZeroPattern.of(X) if zp is None else zp
    zp.check(X)
    inside = [z for z in zp.zeros if z[1] >= X.n - 1]
    if inside:
        raise HypothesisViolation(
            f"zeros must lie outside Delta = [12|{X.n - 1}{X.n}]; found {inside}")
    Xd = drop_zero_columns(X)
    newcol = {}
    for j in range(1, X.n + 1):
        if not X.column_is_zero(j):
            newcol[j] = len(newcol) + 1
    kept = ZeroPattern(tuple((r, newcol[s]) for r, s in zp.zeros if s in newcol))
    Xp, gens = maxminor_reduce(Xd, kept)
    return Xd, Xp, gens
