"""Generator reduction from an algebraic dependence among matrix entries.

Given entries u_1..u_k of X lying outside the corner minor Delta and a
nonzero F with F(u_1..u_k) = 0, :func:`step1` strips F down to monomials
sharing one support and :func:`step2` peels off one variable at a time,
F_j = G_j * y_j^beta_j.  Replacing each surviving entry u_j by
u_j + G_j(u) * Delta yields a matrix X' whose rank slices q_1..q_{mn-t^2}
generate I_t(X) up to radical.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import HypothesisViolation, RelationError
from .minorposet import PosetContext, q, q_prefix
from .polyring import Polynomial, PolyMatrix, PolyRing, max_power, substitute


@dataclass(frozen=True)
class DependenceRelation:
    """F(y_1..y_k) vanishing when y_i is the entry at ``positions[i]``.

    ``F`` lives in its own ring whose i-th variable stands for the i-th
    position (1-based (row, col) pairs).
    """

    positions: tuple
    F: Polynomial

    def __post_init__(self):
        pos = tuple(tuple(p) for p in self.positions)
        object.__setattr__(self, "positions", pos)
        if len(set(pos)) != len(pos):
            raise RelationError(f"duplicate positions in relation: {pos}")
        if len(pos) != self.F.ring.nvars:
            raise RelationError(
                f"{len(pos)} positions but F is over {self.F.ring.nvars} variables")
        if self.F.is_zero:
            raise RelationError("relation polynomial F is zero")
        if self.F.is_constant:
            raise RelationError("relation polynomial F is a nonzero constant")

    @classmethod
    def parse(cls, positions, text: str, field=None) -> DependenceRelation:
        """F written over y1..yk, one variable per position."""
        from .polyring import CoeffField
        ring = PolyRing(tuple(f"y{i + 1}" for i in range(len(positions))), field or CoeffField())
        return cls(tuple(tuple(p) for p in positions), ring.parse(text))

    @property
    def variables(self) -> tuple:
        return self.F.ring.names

    def position_of(self, var: str) -> tuple:
        return self.positions[self.F.ring.index(var)]

    def bindings(self, X: PolyMatrix) -> dict:
        return {y: X.entry(*p) for y, p in zip(self.variables, self.positions)}

    def check(self, X: PolyMatrix):
        for r, c in self.positions:
            if not (1 <= r <= X.m and 1 <= c <= X.n):
                raise RelationError(f"position ({r},{c}) outside the {X.m}x{X.n} matrix")
        if self.F.ring.field != X.ring.field:
            raise RelationError(f"F is over {self.F.ring.field}, matrix over {X.ring.field}")
        if not substitute(self.F, self.bindings(X)).is_zero:
            raise RelationError(
                f"F = {self.F} does not vanish on the entries at {list(self.positions)}")


def step1(F: Polynomial, elimination_order: Sequence[str] | None = None) -> Polynomial:
    """Drop terms until every monomial of F has the same support.

    While some variable divides some but not all terms, keep only the terms
    it does not divide.  The first eligible variable of
    ``elimination_order`` (default: ring order) is used each round.
    """
    if F.is_zero:
        raise RelationError("step1 needs a nonzero polynomial")
    order = list(elimination_order or F.ring.names)
    order += [v for v in F.ring.names if v not in order]
    idx = [F.ring.index(v) for v in order]
    terms = F.terms
    while True:
        for i in idx:
            hit = sum(1 for e in terms if e[i])
            if 0 < hit < len(terms):
                terms = {e: c for e, c in terms.items() if not e[i]}
                break
        else:
            return Polynomial(F.ring, terms)


@dataclass(frozen=True)
class Step2Trace:
    """Variables y_1..y_r with alpha_j, beta_j, F_j and G_j = F_j / y_j^beta_j."""

    variables: tuple
    alpha: tuple
    beta: tuple
    F: tuple
    G: tuple

    @property
    def r(self) -> int:
        return len(self.variables)

    def check(self):
        for j, y in enumerate(self.variables):
            Fj, Gj = self.F[j], self.G[j]
            yj = Fj.ring.gen(y)
            if Fj != Gj * yj ** self.beta[j]:
                raise AssertionError(f"F_{j + 1} != G_{j + 1} * {y}^{self.beta[j]}")
            if self.beta[j] < self.alpha[j] or self.beta[j] < 1:
                raise AssertionError(f"beta_{j + 1} < alpha_{j + 1}")
            if j and self.F[j] != substitute(self.G[j - 1], {self.variables[j - 1]: 0}):
                raise AssertionError(f"F_{j + 1} is not G_{j} at {self.variables[j - 1]} = 0")
        if self.r:
            last = self.G[-1]
            others = [i for i, nm in enumerate(last.ring.names) if nm != self.variables[-1]]
            if any(e[i] for e in last.terms for i in others):
                raise AssertionError("G_r involves variables other than y_r")
            if last.constant_term() == 0:
                raise AssertionError("G_r has zero constant term")


def _divide_power(f: Polynomial, i: int, k: int) -> Polynomial:
    out = {}
    for e, c in f.terms.items():
        e = list(e)
        e[i] -= k
        out[tuple(e)] = c
    return Polynomial(f.ring, out)


def step2(F: Polynomial, elimination_order: Sequence[str] | None = None) -> Step2Trace:
    """Peel the support variables of F one at a time.

    F must be nonzero with every monomial on the same support (the output
    of :func:`step1`).  The variables are taken in ``elimination_order``.
    """
    if F.is_zero:
        raise RelationError("step2 needs a nonzero polynomial")
    supports = {tuple(i for i, k in enumerate(e) if k) for e in F.terms}
    if len(supports) != 1:
        raise RelationError("step2 needs all monomials of F on one support; run step1 first")
    support = {F.ring.names[i] for i in supports.pop()}
    order = list(elimination_order or F.ring.names)
    order += [v for v in F.ring.names if v not in order]
    ys = tuple(v for v in order if v in support)
    alphas, betas, Fs, Gs = [], [], [], []
    Fj = F
    for j, y in enumerate(ys):
        if j:
            Fj = substitute(Gs[-1], {ys[j - 1]: 0})
        i = F.ring.index(y)
        alphas.append(max_power(F, y))
        b = max_power(Fj, y)
        betas.append(b)
        Fs.append(Fj)
        Gs.append(_divide_power(Fj, i, b))
    trace = Step2Trace(ys, tuple(alphas), tuple(betas), tuple(Fs), tuple(Gs))
    trace.check()
    return trace


def _corner_positions(X: PolyMatrix) -> set:
    m, n, t = X.m, X.n, X.t
    return {(i, j) for i in range(m - t + 1, m + 1) for j in range(n - t + 1, n + 1)}


def substitution_stage(X: PolyMatrix, rel: DependenceRelation, modifier: Polynomial,
                       elimination_order: Sequence[str] | None = None):
    """Replace each surviving entry u_j with u_j + G_j(u) * modifier.

    Returns the new matrix and the Step 2 trace.  G_j is evaluated on the
    entries of X as given (before any replacement).
    """
    rel.check(X)
    F1 = step1(rel.F, elimination_order)
    trace = step2(F1, elimination_order)
    binds = rel.bindings(X)
    Xp = X
    for y, Gj in zip(trace.variables, trace.G):
        r, c = rel.position_of(y)
        Xp = Xp.with_entry(r, c, X.entry(r, c) + substitute(Gj, binds) * modifier)
    return Xp, trace


def _check_outside_corner(X: PolyMatrix, rel: DependenceRelation):
    inside = _corner_positions(X) & set(rel.positions)
    if inside:
        raise HypothesisViolation(
            f"dependent entries must lie outside the corner minor Delta; {sorted(inside)} are inside")


def reduce_theorem_main(X: PolyMatrix, rel: DependenceRelation,
                        elimination_order: Sequence[str] | None = None):
    """mn - t^2 generators of I_t(X) up to radical from one dependence.

    Returns ``(X', gens)`` where ``gens`` holds q_1..q_{mn-t^2} of X'.
    """
    if X.t == X.n:
        raise HypothesisViolation(
            f"t < n violated: t={X.t}, n={X.n} (no entries outside Delta)")
    _check_outside_corner(X, rel)
    Xp, _ = substitution_stage(X, rel, X.corner_minor(), elimination_order)
    ctx = PosetContext.of(X)
    return Xp, q_prefix(ctx.max_rank - 1, Xp)


def reduce_disjoint_sets(X: PolyMatrix, rels: Sequence[DependenceRelation],
                         elimination_orders: Sequence | None = None):
    """Chain the substitution over k pairwise disjoint dependent sets.

    Stage i rewrites X_{i-1} using q_{mn-t^2+2-i}(X_{i-1}) in place of
    Delta; the result is q_1..q_{mn-t^2-k+1} of X_k.  This chaining is
    only known to work in special cases, so callers should certify.
    """
    rels = list(rels)
    k = len(rels)
    if X.t == X.n:
        raise HypothesisViolation(f"t < n violated: t={X.t}, n={X.n}")
    ctx = PosetContext.of(X)
    count = ctx.max_rank - k
    if count < 1:
        raise HypothesisViolation(
            f"mn - t^2 - k + 1 >= 1 violated: k={k}, mn - t^2 + 1={ctx.max_rank}")
    seen: dict = {}
    for idx, rel in enumerate(rels):
        _check_outside_corner(X, rel)
        for p in rel.positions:
            if p in seen:
                raise HypothesisViolation(
                    f"dependent sets must be pairwise disjoint: {p} in sets {seen[p] + 1} and {idx + 1}")
            seen[p] = idx
        rel.check(X)
    orders = list(elimination_orders) if elimination_orders is not None else [None] * k
    if len(orders) != k:
        raise ValueError("one elimination order per relation expected")
    Xi = X
    for i, (rel, order) in enumerate(zip(rels, orders), start=1):
        modifier = q(ctx.max_rank + 1 - i, Xi)
        Xi, _ = substitution_stage(Xi, rel, modifier, order)
    return Xi, q_prefix(count, Xi)
