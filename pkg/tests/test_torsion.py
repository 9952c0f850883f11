import pytest

from liepar.errors import LieparError
from liepar.rootsys import build_root_system
from liepar.torsion import (
    long_simple_fundamental_group,
    minimal_orbit_parity_primes,
    tilting_generation_bound,
    torsion_primes_fast,
    torsion_primes_subsystem_oracle,
)

FAST_TABLE = {
    "A1": (), "A5": (), "A8": (),
    "B2": (), "B3": (2,), "B8": (2,),
    "C2": (), "C5": (), "C8": (),
    "D4": (2,), "D8": (2,),
    "G2": (2,),
    "F4": (2, 3), "E6": (2, 3), "E7": (2, 3),
    "E8": (2, 3, 5),
}


@pytest.mark.parametrize("label,expected", sorted(FAST_TABLE.items()))
def test_fast_table(label, expected):
    assert torsion_primes_fast(build_root_system(label)) == expected


def test_fast_reducible_union():
    assert torsion_primes_fast(build_root_system("A2xG2")) == (2,)
    assert torsion_primes_fast(build_root_system("G2xF4")) == (2, 3)


RANK_LE_3 = ["A1", "A2", "A3", "B2", "B3", "C2", "C3", "D3", "G2"]


@pytest.mark.parametrize("label", RANK_LE_3)
def test_oracle_agrees_with_fast_small(label):
    rs = build_root_system(label)
    primes, certs = torsion_primes_subsystem_oracle(rs)
    assert primes == torsion_primes_fast(rs)
    for cert in certs:
        assert cert.verify(rs)


def test_oracle_b3_certificate_is_triple_a1():
    rs = build_root_system("B3")
    primes, certs = torsion_primes_subsystem_oracle(rs)
    assert primes == (2,)
    cert = certs[0]
    assert cert.prime == 2 and cert.divisor_witness % 2 == 0
    assert cert.verify(rs)


def test_certificates_reverify_after_tampering():
    rs = build_root_system("B3")
    _, certs = torsion_primes_subsystem_oracle(rs)
    cert = certs[0]
    from dataclasses import replace

    assert not replace(cert, divisor_witness=cert.divisor_witness + 1).verify(rs)
    assert not replace(cert, subsystem=cert.subsystem[:-1]).verify(rs)


MINIMAL_ORBIT = {
    "A5": (), "G2": (3,), "E8": (2, 3, 5),
    "B4": (2,), "C4": (2,), "D5": (2,), "F4": (2,),
    "E6": (2, 3), "E7": (2, 3),
}


@pytest.mark.parametrize("label,expected", sorted(MINIMAL_ORBIT.items()))
def test_minimal_orbit_table(label, expected):
    assert minimal_orbit_parity_primes(build_root_system(label)) == expected


def test_minimal_orbit_rejects_products():
    with pytest.raises(LieparError):
        minimal_orbit_parity_primes(build_root_system("A1xA1"))


LONG_SIMPLE = {
    # computed from the reflection closure of the long simple roots
    "A4": (5,),     # whole A_4
    "B3": (3,),     # A_2
    "B5": (5,),     # A_4
    "C4": (2,),     # A_1 (the long simple root alone)
    "D4": (2, 2),   # D_4 itself
    "D5": (4,),     # D_5 itself
    "F4": (3,),     # A_2 of long roots
    "G2": (2,),     # A_1 (single long simple root)
    "E7": (2,),
    "E8": (),
}


@pytest.mark.parametrize("label,expected", sorted(LONG_SIMPLE.items()))
def test_long_simple_fundamental_group(label, expected):
    assert long_simple_fundamental_group(build_root_system(label)).divisors == expected


def test_tilting_bounds():
    assert tilting_generation_bound(build_root_system("A9")).admits(2)
    assert tilting_generation_bound(build_root_system("A9")).describe() == "any p"
    e7 = tilting_generation_bound(build_root_system("E7"))
    assert e7.threshold == 19
    assert not e7.admits(19)
    assert e7.admits(23)
    c4 = tilting_generation_bound(build_root_system("C4"))
    assert c4.threshold == 4
    assert not c4.admits(3)
    assert c4.admits(5)
    assert tilting_generation_bound(build_root_system("B6")).threshold == 5
    assert tilting_generation_bound(build_root_system("D6")).threshold == 4
    assert tilting_generation_bound(build_root_system("E8")).threshold == 31
    assert tilting_generation_bound(build_root_system("G2")).threshold == 3


def test_improved_bounds_flag():
    b6 = tilting_generation_bound(build_root_system("B6"), improved=True)
    assert b6.threshold == 2 and b6.improved
    d6 = tilting_generation_bound(build_root_system("D6"), improved=True)
    assert d6.threshold == 2
    # the flag only affects B and D
    c6 = tilting_generation_bound(build_root_system("C6"), improved=True)
    assert c6.threshold == 6 and not c6.improved
