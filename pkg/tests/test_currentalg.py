from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from decat import currentalg as ca
from decat import symfunc as sf
from decat.currentalg import GarlandElement, GarlandWord


def nf(word, n):
    return ca.normal_form(word, n)


@pytest.mark.parametrize("n", range(-3, 4))
@pytest.mark.parametrize("i,j", [(0, 0), (1, 0), (0, 2), (2, 3)])
def test_ef_commutator(n, i, j):
    lhs = nf(f"E{i} F{j}", n) - nf(f"F{j} E{i}", n)
    if i + j == 0:
        assert lhs == GarlandElement.idempotent(n) * n if n else lhs.is_zero()
    else:
        assert lhs == ca.phi_element(sf.p(i + j), n)


def test_ef_at_weight_one():
    assert nf("E0 F0", 1) == nf("F0 E0", 1) + GarlandElement.idempotent(1)


def test_h_moves_past_e_with_a_correction():
    # the basis order is F, then the H-block, then E
    assert nf("E0 H1", 0) == nf("H1 E0", 0) - 2 * nf("E1", 0)
    assert nf("H1 E0", 0).support() == [GarlandWord(0, (), (1,), ((0, 1),))]


def test_e_loop_indices_commute():
    assert nf("E0 E1", 0) == nf("E1 E0", 0)
    assert len(nf("E0 E1", 0)) == 1


def test_divided_power_square():
    assert nf("E0 E0", 0) == 2 * nf("E0^(2)", 0)


@pytest.mark.parametrize("j", range(1, 6))
def test_phi_of_power_sums_is_h(j):
    assert ca.phi(sf.p(j)) == {(j,): Fraction(1)}
    assert ca.phi_inv({(j,): 1}) == sf.p(j)


@pytest.mark.parametrize("i,b", [(1, 1), (1, 2), (2, 2), (1, 3), (3, 2)])
def test_phi_of_e_tj_is_h_jb(i, b):
    assert ca.phi(sf.e_tj(i, b)) == {k: v for k, v in ca.H_jb(i, b) if v}


def test_phi_inv_rejects_nonintegral_blocks():
    with pytest.raises(ArithmeticError):
        ca.phi_inv({(1, 1): Fraction(1, 3)})


@pytest.mark.parametrize("n", [-2, 0, 1, 3])
def test_automorphism_swaps_e_and_f(n):
    assert ca.apply_Phi(ca.generator("E", 2, 2, n)) == ca.generator("F", 2, 2, -n)
    assert ca.apply_Phi(ca.generator("F", 1, 3, n)) == ca.generator("E", 1, 3, -n)


@pytest.mark.parametrize("m", range(1, 6))
def test_automorphism_negates_power_sums(m):
    assert ca.apply_Phi(ca.phi_element(sf.p(m), 2)) == -ca.phi_element(sf.p(m), -2)


def test_automorphism_on_schur_functions_flips_odd_parts():
    # p_j -> -p_j sends s_tau to (-1)^|tau| s_{tau'}
    assert ca.apply_Phi(ca.phi_element(sf.schur((2, 1)), 0)) == -ca.phi_element(sf.schur((2, 1)), 0)
    assert ca.apply_Phi(ca.phi_element(sf.schur((2,)), 0)) == ca.phi_element(sf.schur((1, 1)), 0)


def test_basis_enumeration_examples():
    assert ca.enumerate_basis(0, 2, 0) == [GarlandWord(0, (), (), ((0, 1),))]
    assert ca.enumerate_basis(0, 4, 0) == [GarlandWord(0, (), (), ((0, 2),))]


@pytest.mark.parametrize("a", range(1, 5))
@pytest.mark.parametrize("d", range(0, 7))
def test_e_sector_counts_are_partition_counts(a, d):
    from decat.partitions import partitions_of

    words = [w for w in ca.enumerate_basis(0, 2 * a, d) if w.loop_degree == d and not w.F and not w.tau]
    assert len(words) == len(partitions_of(d, max_len=a))


gens = st.tuples(st.sampled_from("EF"), st.integers(0, 2), st.integers(1, 2))


def _word(gs, n):
    x = GarlandElement.idempotent(n)
    for kind, i, a in reversed(gs):
        x = ca.mul(ca.generator(kind, i, a, x.target), x)
    return x


@settings(max_examples=60, deadline=None)
@given(st.lists(gens, max_size=2), st.lists(gens, max_size=2), st.lists(gens, max_size=2), st.integers(-2, 2))
def test_products_are_associative(u, v, w, n):
    z = _word(w, n)
    y = _word(v, z.target)
    x = _word(u, y.target)
    assert ca.mul(ca.mul(x, y), z) == ca.mul(x, ca.mul(y, z))


@settings(max_examples=40, deadline=None)
@given(st.lists(gens, max_size=3), st.integers(-2, 2))
def test_automorphism_is_an_involutive_anti_weight_map(gs, n):
    x = _word(gs, n)
    y = ca.apply_Phi(x)
    assert (y.source, y.target) == (-x.source, -x.target)
    assert ca.apply_Phi(y) == x


def test_products_of_divided_powers_stay_integral():
    x = _word([("E", 0, 3), ("F", 1, 2), ("E", 2, 1), ("F", 0, 3)], 0)
    assert all(isinstance(c, int) for _, c in x.items())


def test_mismatched_weights_are_rejected():
    with pytest.raises(ValueError):
        ca.mul(nf("E0", 0), nf("E0", 0))


def test_json_round_trip_and_dumps():
    x = nf("E1 F0 E0^(2)", -1)
    assert GarlandElement.from_json(x.to_json()) == x
    assert ca.dumps(x) == ca.dumps(nf("E1 F0 E0^(2)", -1))
