"""One check per acceptance criterion; each prints a PASS/FAIL line."""

import io
import random
import time
from functools import lru_cache

import pytest

from detgens import (CoeffField, DependenceRelation, PolyMatrix, PolyRing, PosetContext,
                     antidiagonal_reduce, buchberger, leq, maxminor_reduce, normal_form, q,
                     q_prefix, radical_equal, rank, reduce_disjoint_sets, reduce_theorem_main,
                     t_minors)
from detgens import cli
from detgens.minorposet import MinorIndex, all_minors, minors_up_to_rank

from conftest import (ACCEPTANCE_LINES, PROBLEMS, generic, juxtaposed, latex_poly, power2x5,
                      power_relations, sparse2x4, sparse3x3)

QQ = CoeffField()
GF = CoeffField(32003)

PRINTED_3x3 = [
    "x_4^2x_6^2x_7 - 2x_3x_4x_6x_7^2 + x_3^2x_7^3 + x_1x_4x_6^2 - x_1x_3x_6x_7 - x_1x_3x_5 + x_1x_2x_6",
    "-x_3x_4x_6x_7 + x_3^2x_7^2 - x_3x_4x_5 - x_1x_3x_6 + x_2x_4x_6",
    "-x_4^2x_6x_7 - x_4x_6^2x_7 + x_3x_4x_7^2 + x_3x_6x_7^2 - x_4^2x_5"
    " -x_1x_4x_6 - x_1x_6^2 + x_2x_4x_7 - x_3x_5x_7 + x_2x_6x_7 - x_1x_2",
    "-x_4x_6x_7^2 + x_3x_7^3 - x_4^2x_6 + x_3x_4x_7 - x_4x_5x_7"
    " -x_1x_6x_7 + x_2x_7^2 - x_1x_3 - x_1x_5 - x_3x_5 + x_2x_6",
]
PRINTED_2x4 = [
    "x_1x_2x_6^2-x_1x_3x_5x_6-x_2^2x_3x_6^2+2x_2x_3^2x_5x_6-x_3^3x_5^2-x_1x_4",
    "x_1x_5x_6-x_2x_3x_5x_6+x_3^2x_5^2-x_2x_4",
    "x_1x_6^2-x_2x_3x_6^2+x_3^2x_5x_6-x_3x_4 + x_1x_5-x_2^2x_6+x_2x_3x_5",
]
SIX_EXPRESSIONS = ["[12|12]", "[12|13]", "[12|14]+[12|23]", "[12|15]+[12|24]"]


def record(n, ok, detail):
    ACCEPTANCE_LINES.append(f"criterion {n} {'PASS' if ok else 'FAIL'}: {detail}")
    assert ok, detail


def same_terms(f, g):
    """Equal term lists in the canonical order (coefficients included)."""
    return f.sorted_terms() == g.sorted_terms()


def timed(fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - t0


def six_example(field=QQ):
    return reduce_disjoint_sets(power2x5(field), power_relations(field), [["y2", "y1"]] * 3)


def test_criterion_1_sparse_3x3():
    X = sparse3x3()
    (Xp, gens), dt = timed(antidiagonal_reduce, X)
    R = X.ring
    want = [R.parse(latex_poly(s)) for s in PRINTED_3x3]
    ok = len(gens) == 4 and all(same_terms(g.poly, w) for g, w in zip(gens, want))
    ok = ok and Xp.entry(1, 2) == R.parse("x3*x7 - x4*x6")
    ok = ok and Xp.entry(1, 1) == R.parse("x2*x7-x4*x5+(x3*x7-x4*x6)*x7-x1*x6")
    record(1, ok and dt < 1.0, f"3x3 antidiagonal example, 4 printed q' exact, {dt:.3f}s (< 1s)")


def test_criterion_2_maxminor_2x4():
    X = sparse2x4()
    (Xp, gens), dt = timed(maxminor_reduce, X)
    R = X.ring
    want = [R.parse(latex_poly(s)) for s in PRINTED_2x4]
    ok = len(gens) == 3 and all(same_terms(g.poly, w) for g, w in zip(gens, want))
    ok = ok and Xp.entry(1, 1) == R.parse("x1*x6-x3*(x2*x6-x3*x5)")
    ok = ok and Xp.entry(2, 2) == R.parse("x2*x6-x3*x5")
    record(2, ok and dt < 1.0, f"2x4 maximal-minor example, 3 printed q' and X' entries exact, {dt:.3f}s (< 1s)")


def test_criterion_3_disjoint_sets():
    (Xp, gens), dt = timed(six_example)
    R = Xp.ring
    u = R.parse(juxtaposed("(z^2+(ad-bc))d-z^3b"))
    w = R.parse(juxtaposed("(y^2+u)d-y^3b+(z^2+(ad-bc))c-z^3a").replace("u", f"({u})"))
    X = power2x5()
    ok = (Xp.entry(1, 1) == R.parse("x^2") + w and Xp.entry(1, 2) == R.parse("y^2") + u
          and Xp.entry(1, 3) == R.parse(juxtaposed("z^2+(ad-bc)"))
          and all(Xp.entry(i, j) == X.entry(i, j) for i, j in [(1, 4), (1, 5)] + [(2, c) for c in range(1, 6)]))
    ok = ok and [g.expression() for g in gens] == SIX_EXPRESSIONS
    ok = ok and all(g.poly == sum((Xp.minor(d.rows, d.cols) for d in g.summands), R.zero()) for g in gens)
    record(3, ok and dt < 2.0, f"2x5 power matrix, X' with u and w exact, 4 generators, {dt:.3f}s (< 2s)")


CERT_CASES = [
    ("1", "GF(32003)", lambda: antidiagonal_reduce(sparse3x3(GF)), sparse3x3, GF, 30),
    ("2", "GF(32003)", lambda: maxminor_reduce(sparse2x4(GF)), sparse2x4, GF, 30),
    ("3", "GF(32003)", lambda: six_example(GF), power2x5, GF, 30),
    ("1", "Q", lambda: antidiagonal_reduce(sparse3x3(QQ)), sparse3x3, QQ, 300),
    ("2", "Q", lambda: maxminor_reduce(sparse2x4(QQ)), sparse2x4, QQ, 300),
]


@pytest.mark.parametrize("which,label,make,base,field,limit", CERT_CASES,
                         ids=[f"c{c[0]}-{c[1]}" for c in CERT_CASES])
def test_criterion_4_certification(which, label, make, base, field, limit):
    t0 = time.perf_counter()
    _, gens = make()
    report = radical_equal(t_minors(base(field)), gens.polys)
    dt = time.perf_counter() - t0
    record(4, report.outcome == "equal" and dt < limit,
           f"radical equality for criterion {which} over {label}: {report.outcome}, {dt:.2f}s (< {limit}s)")


def test_criterion_5_eq1_baseline():
    t0 = time.perf_counter()
    outcomes = []
    for m, n, t in [(2, 2, 2), (2, 3, 2), (3, 3, 2)]:
        X = generic(m, n, t, GF)
        gens = q_prefix(m * n - t * t + 1, X)
        outcomes.append(len(gens) == m * n - t * t + 1 and radical_equal(t_minors(X), gens.polys).equal)
    dt = time.perf_counter() - t0
    record(5, all(outcomes) and dt < 60, f"generic (2,2,2), (2,3,2), (3,3,2): {outcomes}, {dt:.2f}s (< 60s)")


def _chain_lengths(ctx):
    """Longest chain from the bottom, via covers computed from leq only."""
    elems = list(all_minors(ctx))
    below = {d: [e for e in elems if e != d and leq(e, d)] for d in elems}

    @lru_cache(maxsize=None)
    def longest(d):
        return 1 + max((longest(e) for e in below[d]), default=0)
    return {d: longest(d) for d in elems}


def test_criterion_6_poset():
    t0 = time.perf_counter()
    bad = []
    for n in range(1, 6):
        for m in range(1, n + 1):
            for t in range(1, m + 1):
                ctx = PosetContext(m, n, t)
                for d, length in _chain_lengths(ctx).items():
                    if rank(d, ctx) != length:
                        bad.append((m, n, t, str(d)))
                if rank(ctx.top(), ctx) != m * n - t * t + 1:
                    bad.append((m, n, t, "top"))
                low = MinorIndex(tuple(range(1, t + 1)), tuple(range(1, t + 1)))
                if rank(low, ctx) != m * n + t * t - t * (m + n) + 1:
                    bad.append((m, n, t, "min t-minor"))
                bigger = [rank(d, ctx) for d in all_minors(ctx) if d.size > t]
                if bigger and max(bigger) != m * n - t * t - 2 * t:
                    bad.append((m, n, t, "max rank above t"))
    dt = time.perf_counter() - t0
    record(6, not bad and dt < 10, f"poset rank identities for all m <= n <= 5: {len(bad)} mismatches, {dt:.2f}s (< 10s)")


KINDS = ("zero", "constant", "power", "linear", "product")
SHAPES = ((2, 3, 2), (3, 3, 2), (2, 3, 1), (3, 3, 1), (2, 2, 1))


def _planted_instance(rng, kind, shape):
    """A small matrix with a planted dependence among entries outside Delta."""
    m, n, t = shape
    names = [f"x{i}" for i in range(1, m * n + 1)]
    R = PolyRing.user(names, GF)
    X = PolyMatrix.from_text(R, [[names[i * n + j] for j in range(n)] for i in range(m)], t)
    corner = {(i, j) for i in range(m - t + 1, m + 1) for j in range(n - t + 1, n + 1)}
    free = [(i, j) for i in range(1, m + 1) for j in range(1, n + 1) if (i, j) not in corner]
    if kind in ("zero", "constant"):
        p = rng.choice(free)
        c = 0 if kind == "zero" else rng.randint(1, 9)
        X = X.with_entry(*p, R.const(c))
        rel = DependenceRelation.parse([p], f"y1 - {c}", GF)
    elif kind == "power":
        p1, p2 = rng.sample(free, 2)
        a, b = rng.randint(1, 3), rng.randint(1, 3)
        g = X.entry(*p2)
        X = X.with_entry(*p1, g**a).with_entry(*p2, g**b)
        rel = DependenceRelation.parse([p1, p2], f"y1^{b} - y2^{a}", GF)
    elif kind == "linear":
        p1, p2 = rng.sample(free, 2)
        c = rng.randint(1, 5)
        X = X.with_entry(*p1, c * X.entry(*p2) + 1)
        rel = DependenceRelation.parse([p1, p2], f"y1 - {c}*y2 - 1", GF)
    else:
        # u1 = u2^2 * u3
        p1, p2 = rng.sample(free, 2)
        p3 = rng.choice([(i, j) for i in range(1, m + 1) for j in range(1, n + 1)
                         if (i, j) not in (p1, p2) and (i, j) not in corner] or [None])
        if p3 is None:
            return _planted_instance(rng, "power", shape)
        X = X.with_entry(*p1, X.entry(*p2) ** 2 * X.entry(*p3))
        rel = DependenceRelation.parse([p1, p2, p3], "y1 - y2^2*y3", GF)
    order = rng.sample(list(rel.variables), len(rel.variables))
    return X, rel, order, kind


def test_criterion_7_theorem_main_random():
    rng = random.Random(20241016)
    t0 = time.perf_counter()
    results = []
    for i in range(10):
        X, rel, order, kind = _planted_instance(rng, KINDS[i % 5], SHAPES[i % 5 if i < 5 else (i + 2) % 5])
        Xp, gens = reduce_theorem_main(X, rel, order)
        ctx = PosetContext.of(X)
        count_ok = len(gens) == X.m * X.n - X.t ** 2
        D = buchberger([X.corner_minor()])
        delta_ok = all(normal_form(g.poly - q(g.h, X), D).is_zero for g in gens)
        cert_ok = radical_equal(t_minors(X), gens.polys).equal
        results.append((f"{X.m}x{X.n} t={X.t} {kind}", count_ok and delta_ok and cert_ok))
        assert ctx.max_rank - 1 == len(gens)
    dt = time.perf_counter() - t0
    ok = all(r for _, r in results) and dt < 120
    record(7, ok, f"10 planted instances ({', '.join(k for k, _ in results)}): "
                  f"{sum(r for _, r in results)}/10 ok, {dt:.2f}s (< 120s)")


def test_criterion_8_guard():
    out, err = io.StringIO(), io.StringIO()
    code = cli.run([str(PROBLEMS / "counter3x4.yaml")], out, err)
    msg = err.getvalue()
    ok = (code == cli.EXIT_HYPOTHESIS and out.getvalue() == ""
          and "k <= min{2t+1, m+n-2t} violated: k=2, bound=1" in msg)
    record(8, ok, f"3x4 t=3 two-zero configuration rejected (exit {code}): {msg.strip()}")


def test_criterion_9_prefix_property():
    t0 = time.perf_counter()
    X = generic(2, 3, 2, GF)
    outcomes = [radical_equal(minors_up_to_rank(h, X), q_prefix(h, X).polys).equal for h in range(1, 4)]
    dt = time.perf_counter() - t0
    record(9, all(outcomes) and dt < 30, f"generic 2x3 prefix radicals for h = 1..3: {outcomes}, {dt:.2f}s (< 30s)")
