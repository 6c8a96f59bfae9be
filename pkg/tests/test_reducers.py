import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from detgens import (CoeffField, DependenceRelation, PolyMatrix, PolyRing, buchberger, max_power,
                     normal_form, q, radical_equal, reduce_disjoint_sets, reduce_theorem_main, step1,
                     step2, substitute, t_minors)
from detgens.errors import HypothesisViolation, RelationError
from detgens.minorposet import PosetContext
from detgens.sparsegen import maxminor_reduce

from conftest import generic, juxtaposed, power2x5, power_relations, sparse2x4

GF = CoeffField(32003)
Y = PolyRing(("y1", "y2", "y3"), CoeffField())
y1, y2, y3 = Y.gens()

monos = st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))


@st.composite
def relation_polys(draw):
    terms = draw(st.dictionaries(monos, st.integers(-3, 3).filter(bool), min_size=1, max_size=5))
    return Y.from_terms(terms)


def certified(X, gens):
    return radical_equal(t_minors(X), gens.polys).equal


def delta_difference_ok(X, Xp, gens):
    G = buchberger([X.corner_minor()])
    return all(normal_form(g.poly - q(g.h, X), G).is_zero for g in gens)


def test_step1_examples():
    F = y1**3 - y2**2
    assert step1(F, ["y2", "y1"]) == y1**3
    assert step1(F, ["y1", "y2"]) == -y2**2
    same = y1**2 * y2**3 + y1**3 * y2**3
    assert step1(same) == same
    with pytest.raises(RelationError):
        step1(Y.zero())


@settings(deadline=None)
@given(relation_polys(), st.permutations(["y1", "y2", "y3"]))
def test_step1_output_has_one_support(F, order):
    out = step1(F, order)
    assert not out.is_zero
    assert set(out.terms) <= set(F.terms)
    assert all(F.terms[e] == c for e, c in out.terms.items())
    assert len({tuple(bool(k) for k in e) for e in out.terms}) == 1
    assert step1(out, order) == out


def test_step2_examples():
    tr = step2(y1**3)
    assert (tr.variables, tr.alpha, tr.beta) == (("y1",), (3,), (3,))
    assert tr.G == (Y.one(),)
    tr = step2(y1**2 * y2**3 + y1**3 * y2**3)
    assert tr.variables == ("y1", "y2")
    assert tr.alpha[0] == 2
    assert tr.G[0] == y2**3 * (1 + y1)
    assert tr.F[1] == y2**3 and tr.beta[1] == 3 and tr.G[1] == Y.one()
    assert step2(Y.const(5)).r == 0
    with pytest.raises(RelationError):
        step2(y1 + y2)


@settings(deadline=None)
@given(relation_polys(), st.permutations(["y1", "y2", "y3"]))
def test_step2_trace_invariants(F, order):
    F1 = step1(F, order)
    tr = step2(F1, order)
    tr.check()
    assert tr.F[:1] == (F1,)[: tr.r]
    for j, y in enumerate(tr.variables):
        assert tr.alpha[j] == max_power(F1, y)


def test_single_stage_power_column():
    X = power2x5()
    rel = power_relations(columns=(3,))[0]
    Xp, gens = reduce_theorem_main(X, rel, ["y2", "y1"])
    R = X.ring
    assert Xp.entry(1, 3) == R.parse(juxtaposed("z^2 + (ad - bc)"))
    assert Xp.entry(2, 3) == X.entry(2, 3)
    assert len(gens) == 2 * 5 - 4
    assert delta_difference_ok(X, Xp, gens)


def test_disjoint_sets_power_matrix():
    X = power2x5()
    Xp, gens = reduce_disjoint_sets(X, power_relations(), [["y2", "y1"]] * 3)
    R = X.ring
    u = R.parse(juxtaposed("(z^2+(ad-bc))d-z^3b"))
    w = (R.parse("y^2") + u) * R.parse("d") + R.parse(juxtaposed("-y^3b+(z^2+(ad-bc))c-z^3a"))
    assert Xp.entry(1, 2) == R.parse("y^2") + u
    assert Xp.entry(1, 1) == R.parse("x^2") + w
    assert [g.expression() for g in gens] == ["[12|12]", "[12|13]", "[12|14]+[12|23]",
                                              "[12|15]+[12|24]"]
    assert all(Xp.entry(2, j) == X.entry(2, j) for j in range(1, 6))


def test_zero_entry_relation_puts_delta_there():
    X = generic(3, 3, 2, GF)
    X = X.with_entry(1, 1, X.ring.zero())
    rel = DependenceRelation.parse([(1, 1)], "y1", GF)
    assert step1(rel.F) == rel.F
    Xp, gens = reduce_theorem_main(X, rel)
    assert Xp.entry(1, 1) == X.corner_minor()
    assert len(gens) == 9 - 4
    assert certified(X, gens)


def test_relation_must_vanish():
    X = generic(2, 3, 2)
    rel = DependenceRelation.parse([(1, 1), (2, 1)], "y1 - y2")
    with pytest.raises(RelationError):
        reduce_theorem_main(X, rel)


def test_relation_errors():
    with pytest.raises(RelationError):
        DependenceRelation.parse([(1, 1), (1, 1)], "y1 - y2")
    with pytest.raises(RelationError):
        DependenceRelation.parse([(1, 1)], "0")
    with pytest.raises(RelationError):
        DependenceRelation.parse([(1, 1)], "3")
    with pytest.raises(RelationError):
        DependenceRelation(((1, 1),), y1 - y2)
    X = power2x5()
    with pytest.raises(HypothesisViolation):
        reduce_theorem_main(X, DependenceRelation.parse([(1, 5), (2, 5)], "y1 - y2"))
    sq = generic(2, 2, 2)
    with pytest.raises(HypothesisViolation):
        reduce_theorem_main(sq, DependenceRelation.parse([(1, 1)], "y1"))


def test_disjoint_sets_errors():
    X = power2x5()
    rels = power_relations(columns=(3, 3))
    with pytest.raises(HypothesisViolation, match="pairwise disjoint"):
        reduce_disjoint_sets(X, rels)
    small = generic(2, 3, 2)
    small = small.with_entry(1, 1, small.ring.zero())
    zero = DependenceRelation.parse([(1, 1)], "y1")
    with pytest.raises(HypothesisViolation, match="mn - t\\^2 - k \\+ 1"):
        reduce_disjoint_sets(small, [zero] * 3)
    with pytest.raises(ValueError):
        reduce_disjoint_sets(X, power_relations(), [["y2", "y1"]])


def test_one_set_matches_theorem_main():
    X = power2x5()
    rel = power_relations(columns=(2,))[0]
    a = reduce_theorem_main(X, rel, ["y2", "y1"])
    b = reduce_disjoint_sets(X, [rel], [["y2", "y1"]])
    assert a[0] == b[0]
    assert a[1].polys == b[1].polys


def test_two_zero_relations_match_zero_filling():
    X = sparse2x4(GF)
    rels = [DependenceRelation.parse([(2, 2)], "y1", GF), DependenceRelation.parse([(1, 1)], "y1", GF)]
    Xp, gens = reduce_disjoint_sets(X, rels)
    assert len(gens) == 8 - 4 - 1
    Xm, gm = maxminor_reduce(X)
    assert Xp == Xm and gens.polys == gm.polys
    assert certified(X, gens)


def test_chaining_order_matters_and_certification_catches_it():
    X = sparse2x4(GF)
    rels = [DependenceRelation.parse([(1, 1)], "y1", GF), DependenceRelation.parse([(2, 2)], "y1", GF)]
    Xp, gens = reduce_disjoint_sets(X, rels)
    assert len(gens) == 3
    # an integer point where all three generators vanish but [12|23] = 9
    point = dict(zip(X.ring.names, (-3, -3, 1, 0, -3, 1)))
    assert all(substitute(g, point).is_zero for g in gens.polys)
    assert substitute(X.minor((1, 2), (2, 3)), point) == X.ring.const(9)
    report = radical_equal(t_minors(X), gens.polys)
    assert report.outcome == "not equal"


def _planted(draw_entries, m, n, t):
    """Generic m x n matrix with entry (1,1) replaced so that it depends on (1,2)."""
    names = [f"x{i}" for i in range(1, m * n + 1)]
    R = PolyRing.user(names, GF)
    X = PolyMatrix.from_text(R, [[names[i * n + j] for j in range(n)] for i in range(m)], t)
    a, b = draw_entries
    g = X.entry(1, 2)
    X = X.with_entry(1, 1, g**a).with_entry(1, 2, g**b)
    F = f"y1^{b} - y2^{a}"
    return X, DependenceRelation.parse([(1, 1), (1, 2)], F, GF)


@settings(max_examples=15, deadline=None)
@given(st.sampled_from([(2, 3, 2), (2, 3, 1), (3, 3, 2), (2, 2, 1)]),
       st.tuples(st.integers(1, 3), st.integers(1, 3)),
       st.permutations(["y1", "y2"]))
def test_delta_difference_on_planted_relations(shape, powers, order):
    m, n, t = shape
    X, rel = _planted(powers, m, n, t)
    ctx = PosetContext(m, n, t)
    corner = {(i, j) for i in range(m - t + 1, m + 1) for j in range(n - t + 1, n + 1)}
    if corner & set(rel.positions):
        return
    Xp, gens = reduce_theorem_main(X, rel, order)
    assert len(gens) == m * n - t * t
    assert [g.h for g in gens] == list(range(1, ctx.max_rank))
    assert delta_difference_ok(X, Xp, gens)
    for i, j in corner:
        assert Xp.entry(i, j) == X.entry(i, j)
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            if (i, j) not in rel.positions:
                assert Xp.entry(i, j) == X.entry(i, j)
    assert substitute(rel.F, rel.bindings(X)).is_zero
