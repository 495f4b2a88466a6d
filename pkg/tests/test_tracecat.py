import pytest
from hypothesis import given, settings, strategies as st

from decat import currentalg as ca
from decat import symfunc as sf
from decat import tracecat as tc
from decat.partitions import count_partitions, partition, partitions_up_to
from decat.tracecat import TraceBasisWord, TraceElement


def test_divided_power_product_of_rectangles():
    # E^(a)_{l^a} E^(b)_{l^b} = C(a+b, a) E^(a+b)_{l^(a+b)}
    x = tc.compose(tc.E_hat(1, (), 2), tc.E_hat(1, (), 0))
    assert x == 2 * tc.E_hat(2, (), 0)
    y = tc.compose_plus(tc.rectangle(2, 3, 4), tc.rectangle(1, 3, 2))
    assert y == tc.PlusElement(2, 3, sf.schur((3, 3, 3)) * 3)


def test_thickness_zero_is_the_identity():
    y = tc.E_hat(2, (1,), 0)
    assert tc.compose(tc.E_hat(0, (), 4), y) == y
    assert tc.compose(y, tc.E_hat(0, (), 0)) == y


def test_single_strand_products_commute():
    lhs = tc.compose(tc.E_hat(1, (1,), 2), tc.E_hat(1, (0,), 0))
    rhs = tc.compose(tc.E_hat(1, (0,), 2), tc.E_hat(1, (1,), 0))
    assert lhs == rhs == tc.E_hat(2, (1,), 0)


def test_rectangle_decomposition_of_10():
    assert tc.rect_decompose(2, (1, 0)) == {(1,): 1}
    assert tc.rect_sequence((2, 1), 2) == ((1, 2), (1, 1))


@pytest.mark.parametrize("a", range(1, 5))
def test_rectangle_change_of_basis_round_trips(a):
    for lam in partitions_up_to(5, max_len=a):
        total = tc.PlusElement(0, a, sf.zero(a))
        for nu, c in tc.rect_decompose(a, lam).items():
            part = tc.rect_recompose(tc.rect_sequence(nu, a), 0)
            total = tc.PlusElement(0, a, total.x + part.x * c)
        assert total == tc.plus_basis(a, lam, 0)


@pytest.mark.parametrize("a", range(1, 5))
def test_rectangle_products_are_unitriangular(a):
    for lam in partitions_up_to(5, max_len=a):
        x = tc.rect_recompose(tc.rect_sequence(lam, a), 0).x
        assert x.coeff(lam) == 1
        assert all(mu <= lam for mu in x.support())


def test_rect_partition_inverts_rect_sequence():
    for lam in partitions_up_to(6, max_len=3):
        assert tc.rect_partition(tc.rect_sequence(lam, 3)) == partition(lam)


def test_rect_partition_rejects_repeated_values():
    with pytest.raises(ValueError):
        tc.rect_partition([(2, 1), (1, 1)])


@pytest.mark.parametrize("n", range(-6, 7))
@pytest.mark.parametrize("i,j", [(0, 0), (1, 0), (0, 1), (2, 3), (4, 4)])
def test_ef_commutator_table(n, i, j):
    m = n - 2
    lhs = tc.compose(tc.E_hat(1, (i,), m), tc.F_hat(1, (j,), n)) - tc.compose(
        tc.F_hat(1, (j,), n + 2), tc.E_hat(1, (i,), n)
    )
    if i + j == 0:
        assert lhs == TraceElement.idempotent(n) * n
    else:
        assert lhs == tc.bubble_minus(sf.p(i + j), n)


@pytest.mark.parametrize("m", range(1, 7))
@pytest.mark.parametrize("n", [-3, 0, 2])
def test_power_sum_bubble_commutator(m, n):
    e = tc.E_hat(1, (), n)
    lhs = tc.compose(tc.bubble_minus(sf.p(m), n + 2), e) - tc.compose(e, tc.bubble_minus(sf.p(m), n))
    assert lhs == 2 * tc.E_hat(1, (m,), n)


def test_transport_sends_rectangle_words_to_garland_words():
    # phi(x) corresponds to b-(x), so b+(s_tau) = b-(S s_tau) goes to (-1)^|tau| phi(s_tau')
    w = TraceBasisWord(1, 2, (3, 3), (2,), 1, (4,))
    expected = ca.GarlandElement.word(ca.GarlandWord(1, ((3, 2),), (1, 1), ((4, 1),)))
    assert tc.to_current(TraceElement.word(w)) == expected
    w = TraceBasisWord(0, 0, (), (2, 1), 0, ())
    expected = ca.GarlandElement.word(ca.GarlandWord(0, (), (2, 1), ()), -1)
    assert tc.to_current(TraceElement.word(w)) == expected


words = st.builds(
    lambda n, b, mu, tau, a, lam: TraceBasisWord(n, b, mu[:b], tau, a, lam[:a]),
    st.integers(-3, 3),
    st.integers(0, 2),
    st.lists(st.integers(0, 2), max_size=2).map(lambda xs: tuple(sorted(xs, reverse=True))),
    st.lists(st.integers(0, 2), max_size=2).map(lambda xs: tuple(sorted(xs, reverse=True))),
    st.integers(0, 2),
    st.lists(st.integers(0, 2), max_size=2).map(lambda xs: tuple(sorted(xs, reverse=True))),
)


@settings(max_examples=60, deadline=None)
@given(words)
def test_transport_round_trip(w):
    x = TraceElement.word(w)
    assert tc.from_current(tc.to_current(x)) == x


@settings(max_examples=40, deadline=None)
@given(words, words)
def test_composition_is_compatible_with_transport(u, v):
    x = TraceElement.word(u)
    y = TraceElement.word(TraceBasisWord(x.target, v.b, v.mu, v.tau, v.a, v.lam))
    assert tc.to_current(tc.compose(y, x)) == ca.mul(tc.to_current(y), tc.to_current(x))


@pytest.mark.parametrize("a", range(1, 5))
@pytest.mark.parametrize("d", range(0, 6))
def test_plus_dimension_is_a_partition_count(a, d):
    assert tc.plus_dim(a, d) == count_partitions(d, max_len=a)


def test_graded_dimensions_vanish_in_negative_degree():
    assert tc.graded_dim(0, 2, -1) == 0
    assert tc.graded_dim(0, 0, 0) == 1


def test_words_are_graded_by_degree():
    for w in tc.enumerate_words(0, 2, 3):
        assert w.degree == 6 and (w.source, w.target) == (0, 2)


def test_word_parser_evaluates_products():
    x = tc.parse_word("E1[1] F1[]", 0)
    assert x == tc.compose(tc.E_hat(1, (1,), -2), tc.F_hat(1, (), 0))
    assert x == -tc.bubble(sf.schur((1,)), 0) + tc.compose(tc.F_hat(1, (), 2), tc.E_hat(1, (1,), 0))


def test_word_parser_rejects_garbage():
    with pytest.raises(ValueError):
        tc.parse_word("E1[1] X", 0)


def test_weight_mismatch_is_rejected():
    with pytest.raises(ValueError):
        tc.compose(tc.E_hat(1, (), 0), tc.E_hat(1, (), 0))


def test_json_round_trip():
    x = tc.parse_word("F2[1] B[2,1] E1[3]", 1)
    assert TraceElement.from_json(x.to_json()) == x
    assert tc.dumps(x) == tc.dumps(tc.parse_word("F2[1] B[2,1] E1[3]", 1))


@pytest.mark.parametrize("n,m", [(0, 0), (-2, 0), (-3, -1), (2, 0), (1, 3), (-4, -2)])
@pytest.mark.parametrize("extra", [0, 1])
def test_e_first_products_form_an_integral_basis(n, m, extra):
    for d in range(3):
        words = tc.enumerate_words(n, m, d, extra)
        for w in words:
            x = TraceElement.word(w)
            coords = tc.to_ef_basis(x)
            assert tc.from_ef_basis(coords, n, m) == x


def test_e_first_basis_of_a_commutator():
    x = tc.parse_word("E1[1] F1[]", 0)
    assert tc.to_ef_basis(x) == {TraceBasisWord(0, 1, (), (), 1, (1,)): 1}
