import math

import pytest

from liepar.errors import BudgetError, LieparError
from liepar.intform import rank_and_radical
from liepar.schurweyl import (
    conjugate,
    hook_length_count,
    is_p_regular,
    nilpotent_orbit_data,
    partitions,
    polytabloid,
    simple_dimension,
    simple_dims_table,
    specht_gram,
    specht_radical_bruteforce,
    standard_multiplicities,
    standard_tableaux,
)


def test_partitions_and_conjugate():
    assert partitions(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate((2, 2)) == (2, 2)
    with pytest.raises(LieparError):
        conjugate((1, 2))


def test_p_regular():
    assert is_p_regular((2, 1), 2)
    assert not is_p_regular((1, 1, 1), 2)
    assert not is_p_regular((1, 1, 1), 3)
    assert is_p_regular((1, 1, 1), 5)


@pytest.mark.parametrize("d", range(1, 9))
def test_hook_formula_against_enumeration_and_rsk(d):
    total = 0
    for lam in partitions(d):
        f = hook_length_count(lam)
        assert f == len(standard_tableaux(lam))
        total += f * f
    assert total == math.factorial(d)


def test_standard_multiplicities():
    assert standard_multiplicities(3, 3) == {(3,): 1, (2, 1): 2, (1, 1, 1): 1}
    assert standard_multiplicities(5, 3) == {(3,): 1, (2, 1): 2, (1, 1, 1): 1}
    assert standard_multiplicities(2, 3) == {(3,): 1, (2, 1): 2}
    assert standard_multiplicities(4, 2) == {(2,): 1, (1, 1): 1}
    with pytest.raises(LieparError):
        standard_multiplicities(0, 3)


def test_specht_gram_21():
    gram = specht_gram((2, 1))
    assert gram.form.matrix == ((2, 1), (1, 2))
    res = rank_and_radical(gram.form)
    assert tuple(res.elementary_divisors) == (1, 3)


def test_specht_gram_trivial_and_sign():
    assert specht_gram((4,)).form.matrix == ((1,),)
    for d in (2, 3, 4, 5):
        gram = specht_gram((1,) * d)
        assert gram.form.matrix == ((math.factorial(d),),)


def test_polytabloid_21():
    t = ((1, 2), (3,))
    coeffs = polytabloid((2, 1), t)
    # column {1,3} alternation: {12|3} - {23|1}
    assert coeffs == {((1, 2), (3,)): 1, ((2, 3), (1,)): -1}


def test_simple_dimensions_d3():
    assert simple_dimension((2, 1), 2) == 2
    assert simple_dimension((2, 1), 3) == 1
    assert simple_dimension((3,), 2) == 1
    with pytest.raises(LieparError):
        simple_dimension((1, 1, 1), 2)


def test_bruteforce_radical_agrees():
    for lam, p in [((2, 1), 2), ((2, 1), 3), ((3,), 2), ((2, 2), 3), ((3, 1), 2), ((3, 1), 3)]:
        assert specht_radical_bruteforce(lam, p) == simple_dimension(lam, p)


def test_dims_tables_d3():
    assert simple_dims_table(3, 2) == [1, 2]
    assert simple_dims_table(3, 3) == [1, 1]
    assert simple_dims_table(3, 5) == [1, 1, 2]


@pytest.mark.parametrize("d", range(1, 7))
@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_semisimple_above_d_and_radical_witness(d, p):
    rows = [(lam, hook_length_count(lam)) for lam in partitions(d)]
    total = 0
    for lam, f in rows:
        if not is_p_regular(lam, p):
            continue
        dim = simple_dimension(lam, p)
        assert dim <= f
        if p > d:
            assert dim == f
        total += dim * f
    assert total <= math.factorial(d)
    if p > d:
        assert total == math.factorial(d)


def test_gram_rank_agreement_snf_vs_elimination():
    # rank_and_radical cross-checks internally; exercise it over all d <= 6 grams
    for d in range(1, 7):
        for lam in partitions(d):
            gram = specht_gram(lam)
            for p in (2, 3, 5, 7):
                rank_and_radical(gram.form, p)


def test_elementary_divisors_are_basis_convention_free():
    # reversing the tableau basis permutes rows/columns; divisors are unchanged
    gram = specht_gram((3, 2))
    matrix = gram.form.matrix
    n = len(matrix)
    reversed_matrix = tuple(
        tuple(matrix[n - 1 - i][n - 1 - j] for j in range(n)) for i in range(n)
    )
    from liepar.intform import IntegerSymmetricForm

    a = rank_and_radical(gram.form)
    b = rank_and_radical(IntegerSymmetricForm(reversed_matrix))
    assert a.elementary_divisors == b.elementary_divisors


def test_specht_budget():
    with pytest.raises(BudgetError):
        specht_gram((5, 4))  # |lambda| = 9 over the default budget


def test_nilpotent_orbit_data():
    d = nilpotent_orbit_data((3,), 3)
    assert d.dimension == 6 and d.centralizer_factors == (1,)
    assert d.conjugate == (1, 1, 1)
    d = nilpotent_orbit_data((1, 1, 1, 1), 4)
    assert d.dimension == 0 and d.centralizer_factors == (4,)
    d = nilpotent_orbit_data((2, 1), 3)
    assert d.dimension == 4 and d.centralizer_factors == (1, 1)
    assert d.resolution_source == "T*(GL3/P_(2,1))"
    d = nilpotent_orbit_data((3, 3, 2, 2, 1), 11)
    assert d.centralizer_factors == (2, 2, 1)
    assert d.dimension == 11 * 11 - sum(c * c for c in conjugate((3, 3, 2, 2, 1)))
    with pytest.raises(LieparError):
        nilpotent_orbit_data((2, 1), 4)


def test_regular_orbit_dimension_formula():
    for n in range(1, 7):
        d = nilpotent_orbit_data((n,), n)
        assert d.dimension == n * n - n
        assert d.centralizer_factors == (1,)
