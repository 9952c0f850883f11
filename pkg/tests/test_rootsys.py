import pytest

from liepar._linalg import elementary_divisors
from liepar.errors import InvalidTypeError, ReducibleError
from liepar.rootsys import RootSystem, WeightVector, build_root_system

ALL_TYPES = (
    ["A%d" % n for n in range(1, 9)]
    + ["B%d" % n for n in range(2, 9)]
    + ["C%d" % n for n in range(2, 9)]
    + ["D%d" % n for n in range(3, 9)]
    + ["E6", "E7", "E8", "F4", "G2"]
)


def brute_force_root_count(rs):
    """Independent enumeration: orbit of simple roots under simple reflections."""
    simple = [tuple(1 if j == i else 0 for j in range(rs.rank)) for i in range(rs.rank)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        root = frontier.pop()
        for j in range(rs.rank):
            pairing = sum(root[i] * rs.cartan[i][j] for i in range(rs.rank))
            new = list(root)
            new[j] -= pairing
            t = tuple(new)
            if t not in seen:
                seen.add(t)
                frontier.append(t)
    return len(seen)


def test_small_examples():
    assert len(build_root_system("A2").roots) == 6
    a1 = build_root_system("A1")
    assert a1.cartan == ((2,),)
    assert set(a1.roots) == {(1,), (-1,)}
    assert len(build_root_system("E8").roots) == 240


@pytest.mark.parametrize("label", ALL_TYPES)
def test_enumeration_matches_reflection_orbit(label):
    rs = build_root_system(label)
    assert len(rs.roots) == brute_force_root_count(rs)
    assert len(rs.roots) == 2 * len(rs.positive_roots)


@pytest.mark.parametrize("label", ALL_TYPES)
def test_positive_root_count_from_coxeter_number(label):
    rs = build_root_system(label)
    assert 2 * len(rs.positive_roots) == rs.coxeter_number() * rs.rank


@pytest.mark.parametrize("label", ["A3", "B3", "C3", "D4", "G2", "F4"])
def test_reflections_permute_roots(label):
    rs = build_root_system(label)
    roots = set(rs.roots)
    for alpha in rs.positive_roots:
        co = rs.coroot(alpha)
        image = set()
        for beta in rs.roots:
            w = rs.root_weight_coords(beta)
            pairing = sum(w[k] * co[k] for k in range(rs.rank))
            image.add(tuple(beta[k] - pairing * alpha[k] for k in range(rs.rank)))
        assert image == roots


def test_invalid_labels():
    for bad in ("E9", "F5", "G3", "H4", "A0", "D2", ""):
        with pytest.raises(InvalidTypeError):
            build_root_system(bad)


def test_products():
    rs = build_root_system("A1xA1")
    assert len(rs.roots) == 4
    assert rs.factors == (("A", 1), ("A", 1))
    assert not rs.is_irreducible()
    with pytest.raises(ReducibleError):
        rs.highest_root()
    assert [f.type_name() for f in rs.irreducible_factors()] == ["A1", "A1"]


def test_highest_roots():
    # simply-laced: highest root equals highest short root
    for label in ("A3", "D4", "E6", "E7", "E8"):
        rs = build_root_system(label)
        assert rs.highest_root() == rs.highest_short_root()
    expected_short = {
        "B4": (1, 0, 0, 0),
        "C4": (0, 1, 0, 0),
        "G2": (1, 0),
        "F4": (0, 0, 0, 1),
        "E6": (0, 1, 0, 0, 0, 0),
        "E7": (1, 0, 0, 0, 0, 0, 0),
        "E8": (0, 0, 0, 0, 0, 0, 0, 1),
    }
    for label, want in expected_short.items():
        assert build_root_system(label).highest_short_root() == want


def test_coroot_coefficients_by_expansion_oracle():
    # directly expand the highest root's coroot in simple coroots
    for label in ("A4", "G2", "E8", "F4", "B3", "C3"):
        rs = build_root_system(label)
        theta = max(rs.positive_roots, key=lambda r: (sum(r), r))
        norm = rs.root_norm(theta)
        expected = tuple(
            int(2 * theta[i] * rs._d[i] / norm) for i in range(rs.rank)
        )
        coeffs, nmax = rs.coroot_coefficients()
        assert coeffs == expected
        assert nmax == max(expected)
    assert build_root_system("A5").coroot_coefficients() == ((1, 1, 1, 1, 1), 1)
    assert build_root_system("E8").coroot_coefficients()[1] == 6
    assert build_root_system("G2").coroot_coefficients() == ((1, 2), 2)


def test_dual_coxeter_and_minimal_orbit():
    assert build_root_system("A1").dual_coxeter_number() == 2
    assert build_root_system("A1").minimal_orbit_dimension() == 2
    for n in range(1, 9):
        rs = build_root_system(f"A{n}")
        assert rs.dual_coxeter_number() == n + 1
        assert rs.minimal_orbit_dimension() == 2 * n
    g2 = build_root_system("G2")
    assert g2.dual_coxeter_number() == 4
    assert g2.minimal_orbit_dimension() == 6


@pytest.mark.parametrize("label,expected", [
    ("B4", (4,)),
    ("D5", (1, 4, 5)),
    ("E8", ()),
    ("E7", (7,)),
    ("E6", (1, 6)),
    ("C5", (1,)),
    ("A4", (1, 2, 3, 4)),
    ("F4", ()),
    ("G2", ()),
])
def test_minuscule_weights(label, expected):
    assert build_root_system(label).minuscule_weights() == expected


@pytest.mark.parametrize("label", ALL_TYPES)
def test_minuscule_pairing_bound_exhaustive(label):
    rs = build_root_system(label)
    for i in rs.minuscule_weights():
        for root in rs.positive_roots:
            assert rs.coroot(root)[i - 1] <= 1


@pytest.mark.parametrize("label", ALL_TYPES)
def test_fundamental_group_order_is_cartan_determinant(label):
    rs = build_root_system(label)
    dets = elementary_divisors([list(r) for r in rs.cartan])
    order = 1
    for d in dets:
        order *= d
    assert rs.fundamental_group().order() == order


def test_fundamental_groups():
    for n in range(1, 9):
        assert build_root_system(f"A{n}").fundamental_group().divisors == (n + 1,)
    assert build_root_system("E8").fundamental_group().divisors == ()
    assert build_root_system("D4").fundamental_group().divisors == (2, 2)
    assert build_root_system("D5").fundamental_group().divisors == (4,)


def test_json_roundtrip():
    rs = build_root_system("B3")
    again = RootSystem.from_json(rs.to_json())
    assert again == rs
    assert again.cartan == rs.cartan
    assert sorted(again.roots) == sorted(rs.roots)


def test_from_dict_rejects_inconsistent_documents():
    doc = build_root_system("B3").to_dict()
    doc["cartan"][0][1] = -2
    with pytest.raises(InvalidTypeError):
        RootSystem.from_dict(doc)
    doc = build_root_system("A2").to_dict()
    doc["roots"] = doc["roots"][:-1]
    with pytest.raises(InvalidTypeError):
        RootSystem.from_dict(doc)


def test_label_parsing_accepts_lowercase_and_lists():
    assert build_root_system("e8").type_name() == "E8"
    assert build_root_system([("b", 3), ("A", 1)]).type_name() == "B3xA1"
    assert build_root_system("A2 x G2").factors == (("A", 2), ("G", 2))


def test_weight_vector():
    rs = build_root_system("A2")
    wv = WeightVector((1, 0), rs)
    assert wv.is_dominant()
    assert not WeightVector((-1, 2), rs).is_dominant()
    alpha1 = rs.positive_roots[0]
    assert wv.pairing(alpha1) in (0, 1)
