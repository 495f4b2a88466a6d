from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from decat import oracle, symfunc as sf
from decat.partitions import (
    box_duals,
    conjugate,
    count_partitions,
    horizontal_strips,
    is_partition,
    partition,
    partitions_in_box,
    partitions_of,
    size,
)

partitions = st.lists(st.integers(0, 4), max_size=4).map(lambda xs: partition(sorted(xs, reverse=True)))


def test_box_duals_of_21_in_2x2():
    assert box_duals((2, 1), 2, 2) == ((2, 1), (1,), (1,))


def test_box_duals_reject_partition_outside_box():
    with pytest.raises(ValueError):
        box_duals((3,), 2, 2)


def test_partition_rejects_increasing_sequence():
    with pytest.raises(ValueError):
        partition((1, 2))


@given(partitions)
def test_conjugate_is_an_involution(lam):
    assert conjugate(conjugate(lam)) == lam
    assert size(conjugate(lam)) == size(lam)


def test_partition_counts():
    assert [count_partitions(n) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
    assert len(partitions_of(6, max_len=2)) == 4
    assert len(list(partitions_in_box(2, 3))) == 10


def test_horizontal_strips_follow_pieri():
    assert sorted(horizontal_strips((1,), 1)) == [(1, 1), (2,)]
    assert all(is_partition(mu) for mu in horizontal_strips((2, 1), 2))


def test_straighten_examples():
    assert sf.straighten((0, 2)) == (-1, (1, 1))
    assert sf.straighten((0, 1)) is None
    assert sf.straighten((3, 1)) == (1, (3, 1))


@pytest.mark.parametrize("seq", [(0, 2), (1, 3), (0, 3, 1), (2, 0, 4), (0, 0, 3)])
def test_straighten_agrees_with_bialternant(seq):
    point = tuple(Fraction(k + 2, 3) for k in range(len(seq)))
    r = sf.straighten(seq)
    value = oracle.bialternant_value(seq, point)
    if r is None:
        assert value == 0
    else:
        sign, lam = r
        assert value == sign * oracle.schur_value(lam, point)


def test_products_match_monomial_oracle():
    one = sf.schur((1,))
    assert one * one == sf.schur((2,)) + sf.schur((1, 1))
    assert one * sf.schur((1, 1)) == sf.schur((2, 1)) + sf.schur((1, 1, 1))


small = st.lists(st.integers(0, 3), max_size=3).map(lambda xs: partition(sorted(xs, reverse=True)))


@settings(max_examples=40, deadline=None)
@given(small, small)
def test_lr_product_against_oracle(mu, nu):
    # every constituent of s_mu s_nu has at most len(mu) + len(nu) parts
    expected = oracle.lr_product_oracle(mu, nu, max(1, len(mu) + len(nu)))
    assert dict(sf.schur_product(mu, nu)) == {k: v for k, v in expected.items() if v}


@given(partitions, partitions, partitions)
@settings(max_examples=30, deadline=None)
def test_multiplication_is_associative_and_commutative(a, b, c):
    x, y, z = sf.schur(a), sf.schur(b), sf.schur(c)
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)


def test_generators_in_schur_basis():
    assert sf.e(2) == sf.schur((1, 1))
    assert sf.h(2) == sf.schur((2,))
    assert sf.e_tj(2, 1) == sf.p(2) == sf.schur((2,)) - sf.schur((1, 1))


@pytest.mark.parametrize("m", range(1, 13))
def test_newton_identity(m):
    # m e_m = sum (-1)^(k-1) e_{m-k} p_k
    rhs = sf.zero()
    for k in range(1, m + 1):
        rhs = rhs + (-1) ** (k - 1) * sf.e(m - k) * sf.p(k)
    assert m * sf.e(m) == rhs


def test_antipode_examples():
    assert sf.antipode(sf.schur((2, 1))) == -sf.schur((2, 1))
    for m in range(1, 13):
        assert sf.antipode(sf.p(m)) == -sf.p(m)


@given(partitions)
def test_antipode_is_signed_conjugation(lam):
    assert sf.antipode(sf.schur(lam)) == (-1) ** size(lam) * sf.schur(conjugate(lam))
    assert sf.omega(sf.omega(sf.schur(lam))) == sf.schur(lam)


def test_wedge_examples():
    s1 = sf.schur((1,), 1)
    assert sf.wedge(1, 1, s1, s1).is_zero()
    assert sf.wedge(2, 1, sf.schur((2, 2), 2), s1) == sf.schur((1, 1, 1))
    assert sf.wedge(1, 1, sf.one(1), sf.one(1)).is_zero()


def test_wedge_rejects_element_outside_its_variable_bound():
    with pytest.raises(ValueError):
        sf.wedge(1, 1, sf.schur((1, 1)), sf.one(1))


def test_truncate_drops_long_partitions():
    assert sf.truncate(sf.schur((1,)) * sf.schur((1,)), 1) == sf.schur((2,))


def test_schur_function_with_too_many_parts_vanishes_in_few_variables():
    assert sf.schur((1, 1, 1), 2).is_zero()
    with pytest.raises(ValueError):
        sf.SymElement({(1, 1, 1): 1}, 2)


def test_word_parser_expands_products():
    assert sf.to_schur("e1 h1") == sf.schur((2,)) + sf.schur((1, 1))
    assert sf.to_schur("p3") == sf.p(3)


def test_json_round_trip():
    x = sf.p(4) * sf.e(2)
    assert sf.SymElement.from_json(x.to_json()) == x


def test_coproduct_counit():
    x = sf.schur((2, 1))
    assert sf.counit(x) == 0
    assert sf.counit(sf.one()) == 1
    cop = sf.coproduct(x)
    assert cop[((2, 1), ())] == 1 and cop[((1,), (2,))] == 1
    assert all(size(a) + size(b) == 3 for a, b in cop)


def test_power_sum_change_of_basis_round_trips():
    for lam in partitions_of(4):
        total = {}
        for rho, c in sf.schur_to_power_sums(lam).items():
            for mu, v in sf.power_sums_to_schur(rho).items():
                total[mu] = total.get(mu, 0) + c * v
        assert {k: v for k, v in total.items() if v} == {lam: 1}


@pytest.mark.parametrize("t", [1, 2, 3])
@pytest.mark.parametrize("j", range(0, 7))
def test_cycle_index_formula_matches_the_recursion(t, j):
    expected = {lam: Fraction(v) for lam, v in sf.e_tj(t, j).items()}
    assert sf.from_power_exponents(t, sf.e_tj_closed_form(t, j)) == expected


def test_closed_form_without_factorials_disagrees_from_degree_three():
    for j in (1, 2):
        assert sf.e_tj_printed_coefficients(j) == sf.e_tj_closed_form(1, j)
    assert sf.from_power_exponents(1, sf.e_tj_printed_coefficients(3)) != {
        lam: Fraction(v) for lam, v in sf.e(3).items()
    }
