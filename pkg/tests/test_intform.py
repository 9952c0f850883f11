import json
import random

import pytest

from liepar._linalg import modp_rank, smith_normal_form
from liepar.errors import LieparError
from liepar.intform import (
    DecompositionReport,
    IntegerSymmetricForm,
    decomposition_report,
    load_forms,
    rank_and_radical,
)
from liepar.rootsys import build_root_system


def test_form_validation():
    with pytest.raises(LieparError):
        IntegerSymmetricForm(((1, 2), (3, 4)))
    with pytest.raises(LieparError):
        IntegerSymmetricForm(((1, 2),))
    form = IntegerSymmetricForm(((0,),))
    assert form.size == 1


def test_sl2_springer_fiber():
    # self-intersection -2 of the zero section: degenerate exactly at p = 2
    form = IntegerSymmetricForm(((-2,),), label="P1")
    res = rank_and_radical(form, 2)
    assert res.rank_q == 1 and res.rank_fp == 0
    assert len(res.radical_basis) == 1
    res = rank_and_radical(form, 3)
    assert res.rank_fp == 1 and res.radical_basis == ()


@pytest.mark.parametrize("n", range(1, 11))
def test_minus_cartan_an_rank_drop(n):
    rs = build_root_system(f"A{n}")
    matrix = tuple(tuple(-x for x in row) for row in rs.cartan)
    form = IntegerSymmetricForm(matrix, label=f"A{n} chain")
    for p in (2, 3, 5, 7, 11, 13):
        res = rank_and_radical(form, p)
        expected = n - 1 if (n + 1) % p == 0 else n
        assert res.rank_fp == expected, (n, p)


def test_zero_matrix():
    form = IntegerSymmetricForm(((0,),))
    for p in (2, 3, 5):
        res = rank_and_radical(form, p)
        assert res.rank_q == 0 and res.rank_fp == 0


def test_rank_without_prime():
    res = rank_and_radical(IntegerSymmetricForm(((2, 0), (0, 4)),))
    assert res.rank_q == 2 and res.rank_fp is None


def test_non_prime_rejected():
    with pytest.raises(LieparError):
        rank_and_radical(IntegerSymmetricForm(((1,),)), 4)
    with pytest.raises(LieparError):
        decomposition_report([], 6)


def random_symmetric(rng, n, bound=9):
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            m[i][j] = m[j][i] = rng.randint(-bound, bound)
    return tuple(tuple(row) for row in m)


def test_fuzz_rank_radical_and_smith_agreement():
    rng = random.Random(20240811)
    for trial in range(300):
        n = rng.randint(1, 6)
        form = IntegerSymmetricForm(random_symmetric(rng, n), label=f"fuzz{trial}")
        for p in (2, 3, 5, 7):
            res = rank_and_radical(form, p)
            assert res.rank_fp + len(res.radical_basis) == n
            assert res.rank_fp <= res.rank_q <= n
            # dual-route agreement is asserted inside rank_and_radical; check once more
            assert res.rank_fp == sum(1 for d in res.elementary_divisors if d % p != 0)
            assert res.rank_fp == modp_rank([list(r) for r in form.matrix], p)


def test_bad_primes_are_divisors_of_elementary_divisors():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randint(1, 5)
        form = IntegerSymmetricForm(random_symmetric(rng, n))
        res = rank_and_radical(form)
        bad = set()
        for d in res.elementary_divisors:
            f = 2
            v = d
            while f * f <= v:
                if v % f == 0:
                    bad.add(f)
                    while v % f == 0:
                        v //= f
                f += 1
            if v > 1:
                bad.add(v)
        for p in (2, 3, 5, 7, 11):
            drop = rank_and_radical(form, p).rank_fp < res.rank_q
            assert drop == (p in bad)


def random_unimodular(rng, n):
    m = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(4 * n):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        c = rng.randint(-2, 2)
        for k in range(n):
            m[i][k] += c * m[j][k]
    return m


def test_multiplicity_invariant_under_unimodular_change():
    rng = random.Random(99)
    for _ in range(60):
        n = rng.randint(1, 5)
        b = random_symmetric(rng, n, bound=5)
        u = random_unimodular(rng, n)
        ub = [[sum(u[k][i] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
        ubu = [[sum(ub[i][k] * u[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
        f1 = IntegerSymmetricForm(b)
        f2 = IntegerSymmetricForm(tuple(tuple(r) for r in ubu))
        for p in (2, 3, 5):
            r1, r2 = rank_and_radical(f1, p), rank_and_radical(f2, p)
            assert r1.rank_q == r2.rank_q
            assert r1.rank_fp == r2.rank_fp


def test_decomposition_report():
    single = IntegerSymmetricForm(((-2,),), label="s")
    rep = decomposition_report([single], 3)
    assert isinstance(rep, DecompositionReport)
    assert rep.strata[0].multiplicity == 1
    assert rep.decomposition_theorem_holds
    rep = decomposition_report([single], 2)
    assert rep.strata[0].multiplicity == 0
    assert not rep.decomposition_theorem_holds
    rep = decomposition_report([], 2)
    assert rep.strata == () and rep.decomposition_theorem_holds


def test_load_forms(tmp_path):
    doc = [{"label": "a", "n": 2, "rows": [[2, 1], [1, 2]]},
           {"label": "b", "n": 1, "rows": [[-2]]}]
    path = tmp_path / "forms.json"
    path.write_text(json.dumps(doc))
    forms = load_forms(str(path))
    assert [f.label for f in forms] == ["a", "b"]
    single = tmp_path / "one.json"
    single.write_text(json.dumps(doc[0]))
    assert len(load_forms(str(single))) == 1
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"label": "x", "n": 3, "rows": [[1]]}))
    with pytest.raises(LieparError):
        load_forms(str(bad))


def test_smith_chain_divisibility():
    rng = random.Random(3)
    for _ in range(50):
        n = rng.randint(1, 5)
        m = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        divisors = smith_normal_form(m)
        for a, b in zip(divisors, divisors[1:]):
            assert b % a == 0
