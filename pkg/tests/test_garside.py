import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from garside.errors import AxiomViolation
from garside.monoid import IDENTITY_NF, NormalForm, build_garside, verify_presentation
from garside.presentation import congruence_classes, parse_presentation


def test_verify_g12(g12):
    report = verify_presentation(g12.presentation)
    assert report["axioms"] == {"balanced": True, "lattice": True, "phi": True}
    assert report["simple_count"] == 11
    assert report["phi_order"] == 3
    assert report["witnesses"] == []


def test_verify_unbalanced():
    p = parse_presentation("gens: s t\ndelta: s t\n")
    report = verify_presentation(p)
    assert report["axioms"]["balanced"] is False
    assert report["axioms"]["lattice"] is None
    assert report["witnesses"]
    with pytest.raises(AxiomViolation) as exc:
        build_garside(p)
    assert exc.value.kind == "balanced"


def test_simple_counts(g12, g13, b2, b3):
    assert len(g12.simples) == 11
    assert len(g13.simples) == 90
    assert len(b2.simples) == 8
    assert len(b3.simples) == 48


def test_g13_length_profile(g13):
    profile = [0] * (g13.delta_length + 1)
    for i in range(len(g13.simples)):
        profile[g13.simple_length(i)] += 1
    assert profile == [1, 3, 8, 14, 19, 19, 14, 8, 3, 1]
    assert profile == profile[::-1]


def test_simples_divide_delta(g12):
    for a in range(len(g12.simples)):
        assert g12.left_divides(a, g12.delta)
        assert g12.right_divides(a, g12.delta)


def test_phi_cycles_atoms(g12):
    names = [g12.render_simple(g12.phi_simple(a)) for a in g12.atoms]
    assert names == ["t", "u", "s"]
    assert g12.phi_order == 3
    assert g12.phi_simple(g12.delta) == g12.delta


def test_phi_order_trivial(g13, b2, b3):
    assert g13.phi_order == 1
    assert b2.phi_order == 1
    assert b3.phi_order == 1


def test_phi_twist_matches_oracle(g12):
    # phi is the defining symmetry: x delta and delta phi(x) name the same
    # element.  Check this against the raw congruence, not the tables that
    # were built from it, for every simple.
    p = g12.presentation
    table = congruence_classes(p, 2 * g12.delta_length)
    delta_word = p.delta_word
    for i, word in enumerate(g12.simples):
        twisted = g12.simples[g12.phi_simple(i)]
        assert table.congruent(word + delta_word, delta_word + twisted)


def test_phi_twist_matches_oracle_typeb(b2):
    p = b2.presentation
    table = congruence_classes(p, 2 * b2.delta_length)
    for i, word in enumerate(b2.simples):
        twisted = b2.simples[b2.phi_simple(i)]
        assert table.congruent(word + p.delta_word, p.delta_word + twisted)


def test_lattice_operations(g12):
    for a in range(len(g12.simples)):
        for b in range(len(g12.simples)):
            meet = g12.gcd_left(a, b)
            join = g12.lcm_left(a, b)
            assert g12.left_divides(meet, a) and g12.left_divides(meet, b)
            assert g12.left_divides(a, join) and g12.left_divides(b, join)
        assert g12.gcd_left(a, g12.delta) == a
        assert g12.lcm_left(a, g12.identity) == a


def test_product_decomp_is_left_weighted(g12):
    for a in range(len(g12.simples)):
        for b in range(len(g12.simples)):
            c, d = g12.product_decomp(a, b)
            assert g12.left_weighted(c, d)
            assert g12.simple_length(c) + g12.simple_length(d) == (
                g12.simple_length(a) + g12.simple_length(b)
            )


def test_normal_form_examples(g12):
    p = g12.presentation
    nf = g12.normal_form(p.delta_word)
    assert nf == NormalForm(1, ())
    assert g12.format_normal_form(nf) == "delta"

    nf = g12.normal_form(p.word_from_tokens("s t".split()))
    assert nf.delta_power == 0
    assert g12.format_normal_form(nf) == "s t"

    nf = g12.normal_form(p.word_from_tokens("s t u s t u s t u s t u".split()))
    assert g12.format_normal_form(nf) == "delta^3"

    assert g12.format_normal_form(IDENTITY_NF) == "1"


def test_normal_form_factors_are_left_weighted(g12):
    p = g12.presentation
    nf = g12.normal_form(p.word_from_tokens("u u t s s t u u".split()))
    factors = (g12.delta,) + nf.factors
    for a, b in zip(factors, factors[1:]):
        assert g12.left_weighted(a, b)


def test_normal_form_signed_cancellation(g12):
    letters = [(0, 1), (0, -1), (1, 1)]
    nf = g12.normal_form_signed(letters)
    assert g12.format_normal_form(nf) == "t"


def test_invert_and_multiply(g12):
    p = g12.presentation
    x = g12.normal_form(p.word_from_tokens("s t u".split()))
    inv = g12.invert(x)
    assert g12.multiply(x, inv) == IDENTITY_NF
    assert g12.multiply(inv, x) == IDENTITY_NF
    assert g12.invert(IDENTITY_NF) == IDENTITY_NF


def test_power(g12):
    p = g12.presentation
    x = g12.normal_form(p.word_from_tokens("s t u".split()))
    assert g12.power(x, 0) == IDENTITY_NF
    assert g12.power(x, 4) == NormalForm(3, ())
    assert g12.power(x, 8) == NormalForm(6, ())
    assert g12.power(x, -4) == NormalForm(-3, ())
    assert g12.power(x, -1) == g12.invert(x)


def test_is_central(g12, g13):
    assert g12.is_central(NormalForm(3, ()))
    assert not g12.is_central(NormalForm(1, ()))
    assert not g12.is_central(NormalForm(2, ()))
    assert g13.is_central(NormalForm(1, ()))


def test_nf_length_is_letter_count(g12):
    p = g12.presentation
    word = p.word_from_tokens("s t u s t".split())
    assert g12.nf_length(g12.normal_form(word)) == 5
    assert g12.nf_length(NormalForm(-1, ())) == -4


words = st.lists(st.integers(min_value=0, max_value=2), min_size=0, max_size=6)


@settings(max_examples=60, derandomize=True, deadline=None)
@given(words, words)
def test_normal_form_is_multiplicative(g12, u, v):
    lhs = g12.normal_form(tuple(u) + tuple(v))
    rhs = g12.multiply(g12.normal_form(tuple(u)), g12.normal_form(tuple(v)))
    assert lhs == rhs


@settings(max_examples=40, derandomize=True, deadline=None)
@given(words, words, words)
def test_multiply_is_associative(g12, u, v, w):
    def nf(letters):
        # Alternate signs so negative delta powers get exercised too.
        signed = [(x, -1 if k % 3 == 2 else 1) for k, x in enumerate(letters)]
        return g12.normal_form_signed(signed)

    a, b, c = nf(u), nf(v), nf(w)
    assert g12.multiply(g12.multiply(a, b), c) == g12.multiply(a, g12.multiply(b, c))
