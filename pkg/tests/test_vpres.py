import random

import pytest
from hypothesis import given, settings, strategies as st

from decat import vpres as V


def nf(text, source, n, strategy="leftmost"):
    b, a = source
    x = V.VElement.word(V.parse_word(text), source, n, n + 2 * (a - b))
    return V.normal_form(x, strategy)


def elem(terms, source, n):
    b, a = source
    return V.VElement({V.parse_word(w): c for w, c in terms.items()}, source, n, n + a - b)


def test_c_tilde_small_cases():
    assert V.c_tilde(-1, (1, 1)) == {}
    assert V.c_tilde(0, (0, 0)) == {(): 1}
    assert V.c_tilde(1, (1, 1)) == {(("b", (1,)),): 1, (("d", (1,)),): -1, (("dp", (1,)),): 1}


def test_u_t_anticommute_when_the_correction_vanishes():
    assert nf("u0 t1", (1, 1), -10) == elem({"t1 u0": -1}, (1, 1), -10)


@pytest.mark.parametrize("i", range(4))
def test_t_squares_to_zero(i):
    assert nf(f"t{i} t{i}", (0, 0), 0).is_zero()


def test_t_indices_anticommute():
    assert nf("t0 t1", (0, 0), 0) == elem({"t1 t0": -1}, (0, 0), 0)


def test_dp_passes_t_by_pieri():
    assert nf("dp[2] t0", (1, 1), 0) == elem({"t0 dp[2]": 1, "t1 dp[1]": 1, "t2": 1}, (1, 1), 0)


def test_normal_words_are_fixed_points():
    x = nf("t1 t0 d[1] u0", (2, 2), 0)
    assert nf("t1 t0 d[1] u0", (2, 2), 0) == x
    for w, _ in x.items():
        assert V.is_normal(w, (2, 2), 0)


@pytest.mark.parametrize("b,a,delta", [(1, 1, 0), (2, 2, 0), (1, 2, 1), (2, 1, -1), (2, 2, 1), (0, 2, 2)])
@pytest.mark.parametrize("n", [-2, 0, 3])
def test_normal_form_counts_match_the_basis(b, a, delta, n):
    assert V.enumerate_forms(n, a, b, delta, 6) == V.enumerate_Bplus(n, a, b, delta, 6)


@pytest.mark.parametrize("delta", range(-3, 4))
@pytest.mark.parametrize("a,b", [(0, 0), (1, 3), (2, 2), (4, 4), (3, 1)])
def test_minimal_degrees_are_at_least_delta_squared(delta, a, b):
    n = max(0, b - a)
    counts = V.enumerate_Bplus(n, a, b, delta, 2 * delta * delta + 4)
    if counts:
        assert V.min_degree(counts) >= delta * delta


@pytest.mark.parametrize("a", range(0, 5))
def test_identity_is_the_only_degree_zero_element(a):
    assert V.degree_zero_elements(0, a, a) == [(0, 0)]
    assert V.enumerate_Bplus(0, a, a, 0, 0) == {0: 1}


def test_splitter_degree():
    assert V.splitter_degree(1, 2) == -2


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32), st.integers(0, 6), st.integers(0, 2), st.integers(0, 2), st.integers(-2, 2))
def test_rewriting_strategies_agree(seed, length, b, a, n):
    w = V.random_word(random.Random(seed), (b, a), length)
    if V.target(w, (b, a)) is None:
        return
    x = V.VElement({w: 1}, (b, a), n, n + a - b)
    left = V.normal_form(x, "leftmost")
    assert left == V.normal_form(x, "rightmost")
    for word, _ in left.items():
        assert V.is_normal(word, (b, a), x.N)


def test_degree_is_preserved_by_rewriting():
    x = nf("dp[2,1] t0 u1 t2", (2, 2), 1)
    degrees = {V.degree(w, x.N) for w, _ in x.items()}
    assert degrees == {V.degree(V.parse_word("dp[2,1] t0 u1 t2"), x.N)}


def test_parser_round_trips_through_format():
    w = V.parse_word("u0 t1 d[1] dp[2,1] b[3]")
    assert w == (("u", 0), ("t", 1), ("d", (1,)), ("dp", (2, 1)), ("b", (3,)))
    assert V.parse_word(V.format_word(w)) == w
    assert V.parse_word("id") == ()


def test_parser_rejects_garbage():
    with pytest.raises(ValueError):
        V.parse_word("t1 q2")


def test_words_outside_the_hom_space_are_rejected():
    with pytest.raises(ValueError):
        V.VElement.word((), (1, 1), 0, 2)
