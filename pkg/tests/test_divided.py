import pytest

from garside.divided import (
    build_category,
    collapse,
    components,
    decompositions,
    divided_set,
    simplify_presentation,
    twisted_shift,
    vertex_group,
)
from garside.errors import NonComposablePath
from garside.monoid import IDENTITY_NF


def rendered(g, tuples):
    return [[g.render_simple(a) for a in t] for t in tuples]


def test_decompositions_pair_count(g12):
    # Each left divisor of delta pairs with exactly one complement.
    assert len(decompositions(g12, 2)) == len(g12.simples)
    assert decompositions(g12, 1) == [(g12.delta,)]


def test_divided_g12_goldens(g12):
    assert divided_set(g12, 2, 1) == []
    assert divided_set(g12, 4, 1) == []
    assert rendered(g12, divided_set(g12, 4, 3)) == [
        ["s", "t", "u", "s"],
        ["t", "u", "s", "t"],
        ["u", "s", "t", "u"],
    ]
    assert rendered(g12, divided_set(g12, 2, 3)) == [
        ["s t", "u s"],
        ["t u", "s t"],
        ["u s", "t u"],
    ]


def test_divided_g13_goldens(g13):
    cube_roots = [["a b c"] * 3, ["b c a"] * 3, ["c a b"] * 3]
    assert rendered(g13, divided_set(g13, 3, 2)) == cube_roots
    assert rendered(g13, divided_set(g13, 3, 1)) == cube_roots
    assert divided_set(g13, 9, 4) == []


def test_divided_trivial_tuple(g12):
    assert divided_set(g12, 1, 5) == [(g12.delta,)]


@pytest.mark.parametrize("m, n", [(2, 3), (4, 3), (4, 6), (1, 2)])
def test_divided_is_shift_closed(g12, m, n):
    d = divided_set(g12, m, n)
    as_set = set(d)
    for t in d:
        # Fixed by sigma^n, permuted by sigma itself.
        cur = t
        for _ in range(n):
            cur = twisted_shift(g12, cur)
        assert cur == t
        assert twisted_shift(g12, t) in as_set


@pytest.mark.parametrize("m, n", [(2, 3), (4, 3), (2, 1)])
def test_divided_products_are_delta(g12, m, n):
    delta_rep = g12.simples[g12.delta]
    for t in divided_set(g12, m, n):
        word = sum((g12.simples[a] for a in t), ())
        assert g12.oracle.rep(word) == delta_rep


def test_shift_power_m_is_phi(g12):
    for t in divided_set(g12, 2, 3):
        cur = t
        for _ in range(2):
            cur = twisted_shift(g12, cur)
        assert cur == tuple(g12.phi_simple(a) for a in t)


def test_category_g12_2_3(g12):
    cat = build_category(g12, 2, 3)
    assert [cat.object_label(i) for i in range(len(cat.objects))] == [
        "(s t, u s)",
        "(t u, s t)",
        "(u s, t u)",
    ]
    assert cat.generator_ids() == [0, 1, 2, 3, 4, 5]
    assert not cat.eliminated
    labels = [cat.morphism_label(m) for m in cat.generator_ids()]
    assert labels == ["(s, t)", "(t, u)", "(u, s)", "(s t, 1)", "(t u, 1)", "(u s, 1)"]
    ends = [(cat.morphisms[m].source, cat.morphisms[m].target) for m in cat.generator_ids()]
    assert ends == [(0, 1), (1, 2), (2, 0), (0, 2), (1, 0), (2, 1)]
    assert cat.triples == [(0, 1, 3), (1, 2, 4), (2, 0, 5)]
    assert [cat.relation_label(r) for r in cat.relations] == [
        "(s, t) (t, u) = (s t, 1)",
        "(t, u) (u, s) = (t u, 1)",
        "(u, s) (s, t) = (u s, 1)",
    ]
    assert components(cat) == [[0, 1, 2]]


def test_category_g13_3_4(g13):
    cat = build_category(g13, 3, 4)
    assert len(cat.objects) == 3
    assert len(cat.morphisms) == 9
    assert cat.generator_ids() == [0, 1, 2, 3, 4, 5]
    # The three endomorphisms are eliminated in favour of two-step paths.
    assert sorted(cat.eliminated) == [6, 7, 8]
    assert all(cat.morphisms[m].is_endo() for m in cat.eliminated)
    assert [cat.relation_label(r) for r in cat.relations] == [
        "(a, b c) (b, c a) = (a b, c)",
        "(b, c a) (c, a b) = (b c, a)",
        "(c, a b) (a, b c) = (c a, b)",
        "(a b, c) (c, a b) = (a, b c) (b c, a)",
        "(b c, a) (a, b c) = (b, c a) (c a, b)",
        "(c a, b) (b, c a) = (c, a b) (a b, c)",
    ]


def test_category_endo_only(g12):
    cat = build_category(g12, 1, 3)
    assert len(cat.objects) == 1
    assert len(cat.generator_ids()) == 10
    assert all(m.is_endo() for m in cat.morphisms)


def test_relations_hold_under_collapse(g12, g13):
    for g, p, q in ((g12, 2, 3), (g13, 3, 4), (g12, 1, 2)):
        cat = build_category(g, p, q)
        for lhs, rhs in cat.relations:
            left = collapse(cat, [(m, 1) for m in lhs])
            right = collapse(cat, [(m, 1) for m in rhs])
            assert left == right


def test_collapse_rejects_noncomposable(g12):
    cat = build_category(g12, 2, 3)
    # Morphism 0 ends at object 1, morphism 2 starts at object 2.
    with pytest.raises(NonComposablePath):
        collapse(cat, [(0, 1), (2, 1)])


def test_vertex_group_g12(g12):
    cat = build_category(g12, 2, 3)
    v = vertex_group(cat, 0)
    assert v.tree_edges == [0, 1]
    assert v.loop_edges == [2, 3, 4, 5]
    assert v.relators == [[-2], [1, -3], [1, -4]]
    simp = simplify_presentation(v)
    assert not simp.inconclusive
    assert len(simp.generators) == 1
    assert simp.relators == []
    image = v.collapse_images[simp.generators[0]]
    assert g12.format_normal_form(image) == "s t u"
    assert g12.format_normal_form(g12.power(image, 8)) == "delta^6"


def test_vertex_group_g13(g13):
    cat = build_category(g13, 3, 4)
    v = vertex_group(cat, 0)
    assert v.relators == [[-2], [1, -3], [1, -4], [2, 1, -3], [3, -4], [4, -2, -1]]
    simp = simplify_presentation(v)
    assert not simp.inconclusive
    assert len(simp.generators) == 1
    assert simp.relators == []
    image = v.collapse_images[simp.generators[0]]
    assert g13.format_normal_form(image) == "a b c"
    assert g13.format_normal_form(g13.power(image, 12)) == "delta^4"


def test_vertex_relators_collapse_to_identity(g12, g13):
    for g, p, q in ((g12, 2, 3), (g13, 3, 4)):
        cat = build_category(g, p, q)
        v = vertex_group(cat, 0)
        for relator in v.relators:
            acc = IDENTITY_NF
            for ref in relator:
                img = v.collapse_images[abs(ref) - 1]
                acc = g.multiply(acc, img if ref > 0 else g.invert(img))
            assert acc == IDENTITY_NF


def test_loop_paths_close_at_base(g12):
    cat = build_category(g12, 2, 3)
    v = vertex_group(cat, 0)
    for path in v.loop_paths:
        # Every loop generator is a genuine base-to-base path.
        src = cat.morphisms[path[0][0]].source if path[0][1] > 0 else cat.morphisms[path[0][0]].target
        last, sign = path[-1]
        tgt = cat.morphisms[last].target if sign > 0 else cat.morphisms[last].source
        assert src == 0 and tgt == 0
        collapse(cat, path)
