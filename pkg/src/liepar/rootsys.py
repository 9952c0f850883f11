"""Exact root-system kernel.

Root systems are built from Cartan type labels in Bourbaki numbering and
carry every lattice-level invariant used downstream: the full root list in
simple-root coordinates, coroots in simple-coroot coordinates, highest and
highest short roots, coroot coefficients of the highest root, the dual
Coxeter number, minuscule fundamental weights and the weight/root lattice
quotient.

Coordinate conventions
----------------------
* ``cartan[i][j]`` is the pairing of the i-th simple root with the j-th
  simple coroot, so a root with simple-root coordinates ``c`` has
  fundamental-weight coordinates ``c @ cartan``.
* The invariant form normalizes long roots to squared length 2 in every
  irreducible factor; only integrality data derived from it is consumed.

Bourbaki numbering per family (nodes are 1-based):

=======  ===========================================================
A_n      chain 1 - 2 - ... - n
B_n      chain, alpha_n short (a[n-1][n] = -2)
C_n      chain, alpha_n long  (a[n][n-1] = -2)
D_n      chain 1..n-2 with both n-1 and n attached to n-2
E_n      chain 1 - 3 - 4 - ... - n with 2 attached to 4
F_4      chain, alpha_1, alpha_2 long (a[2][3] = -2)
G_2      alpha_1 short (a[2][1] = -3)
=======  ===========================================================
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction

from . import _linalg
from .errors import InvalidTypeError, ReducibleError

Weight = tuple[int, ...]
RootCoords = tuple[int, ...]

_WEYL_ORDERS = {"E6": 51840, "E7": 2903040, "E8": 696729600, "F4": 1152, "G2": 12}
_COXETER_NUMBERS = {"E6": 12, "E7": 18, "E8": 30, "F4": 12, "G2": 6}


def _cartan_block(family: str, rank: int) -> list[list[int]]:
    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    def chain(pairs):
        for i, j in pairs:
            a[i - 1][j - 1] = a[j - 1][i - 1] = -1

    if family in ("A", "B", "C"):
        chain((i, i + 1) for i in range(1, rank))
        if family == "B":
            a[rank - 2][rank - 1] = -2
        elif family == "C":
            a[rank - 1][rank - 2] = -2
    elif family == "D":
        chain((i, i + 1) for i in range(1, rank - 1))
        a[rank - 2][rank - 1] = a[rank - 1][rank - 2] = 0
        a[rank - 3][rank - 1] = a[rank - 1][rank - 3] = -1
    elif family == "E":
        chain([(1, 3), (2, 4)] + [(i, i + 1) for i in range(3, rank)])
    elif family == "F":
        chain((i, i + 1) for i in range(1, rank))
        a[1][2] = -2
    elif family == "G":
        a[0][1] = -1
        a[1][0] = -3
    return a


def _root_lengths(family: str, rank: int) -> list[Fraction]:
    """Half squared lengths d_i = (alpha_i, alpha_i)/2, long roots = 1."""
    one, half, third = Fraction(1), Fraction(1, 2), Fraction(1, 3)
    if family == "B":
        return [one] * (rank - 1) + [half]
    if family == "C":
        return [half] * (rank - 1) + [one]
    if family == "F":
        return [one, one, half, half]
    if family == "G":
        return [third, one]
    return [one] * rank


def _validate_factor(family: str, rank: int) -> None:
    ok = {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,
        "D": rank >= 3,
        "E": rank in (6, 7, 8),
        "F": rank == 4,
        "G": rank == 2,
    }.get(family, False)
    if not ok:
        raise InvalidTypeError(f"invalid Cartan type {family}{rank}")


def parse_type_label(label) -> tuple[tuple[str, int], ...]:
    """Parse 'E8', 'A1xA1', [('B', 3)], ... into a factor tuple."""
    if isinstance(label, (list, tuple)):
        factors = tuple((str(f).upper(), int(r)) for f, r in label)
    else:
        factors = ()
        for part in re.split(r"[x*+ ]+", str(label).strip()):
            if not part:
                continue
            m = re.fullmatch(r"([A-Ga-g])(\d+)", part)
            if not m:
                raise InvalidTypeError(f"cannot parse type label {part!r}")
            factors += ((m.group(1).upper(), int(m.group(2))),)
    if not factors:
        raise InvalidTypeError("empty type label")
    for family, rank in factors:
        _validate_factor(family, rank)
    return factors


class RootSystem:
    """Immutable root system of a (possibly reducible) finite Cartan type."""

    def __init__(self, type_label):
        self.factors = parse_type_label(type_label)
        self.rank = sum(r for _, r in self.factors)
        cartan: list[list[int]] = [[0] * self.rank for _ in range(self.rank)]
        lengths: list[Fraction] = []
        offset = 0
        self._factor_slices: list[tuple[int, int]] = []
        for family, rank in self.factors:
            block = _cartan_block(family, rank)
            for i in range(rank):
                for j in range(rank):
                    cartan[offset + i][offset + j] = block[i][j]
            lengths.extend(_root_lengths(family, rank))
            self._factor_slices.append((offset, offset + rank))
            offset += rank
        self.cartan: tuple[tuple[int, ...], ...] = tuple(tuple(r) for r in cartan)
        self._d = tuple(lengths)
        self._cartan_inv = tuple(
            tuple(row) for row in _linalg.frac_matrix_inverse([list(r) for r in self.cartan])
        )
        self._enumerate_roots()
        self._coroot_cache = {r: self._coroot(r) for r in self.positive_roots}

    # -- construction -----------------------------------------------------

    def _enumerate_roots(self) -> None:
        simple = [tuple(1 if j == i else 0 for j in range(self.rank)) for i in range(self.rank)]
        seen = set(simple)
        queue = list(simple)
        while queue:
            root = queue.pop()
            for j in range(self.rank):
                pairing = sum(root[i] * self.cartan[i][j] for i in range(self.rank))
                new = list(root)
                new[j] -= pairing
                t = tuple(new)
                if t not in seen:
                    seen.add(t)
                    queue.append(t)
        positive = sorted(
            (r for r in seen if all(c >= 0 for c in r)),
            key=lambda r: (sum(r), r),
        )
        self.positive_roots: tuple[RootCoords, ...] = tuple(positive)
        self.roots: tuple[RootCoords, ...] = tuple(positive) + tuple(
            tuple(-c for c in r) for r in positive
        )

    # -- basic pairings ----------------------------------------------------

    def root_weight_coords(self, root: RootCoords) -> Weight:
        """Fundamental-weight coordinates of a vector given in root coordinates."""
        return tuple(
            sum(root[i] * self.cartan[i][j] for i in range(self.rank)) for j in range(self.rank)
        )

    def weight_root_coords(self, weight) -> tuple[Fraction, ...]:
        """Simple-root coordinates (exact rationals) of a weight."""
        return tuple(
            sum(Fraction(weight[i]) * self._cartan_inv[i][j] for i in range(self.rank))
            for j in range(self.rank)
        )

    def root_norm(self, root: RootCoords) -> Fraction:
        """(alpha, alpha) for alpha in root coordinates. Gram_ij = a_ij * d_j."""
        total = Fraction(0)
        for i in range(self.rank):
            if root[i] == 0:
                continue
            for j in range(self.rank):
                if root[j] != 0 and self.cartan[i][j] != 0:
                    total += Fraction(root[i]) * self.cartan[i][j] * self._d[j] * root[j]
        return total

    def _coroot(self, root: RootCoords) -> RootCoords:
        """Simple-coroot coordinates of alpha-check = 2 alpha/(alpha, alpha)."""
        norm = self.root_norm(root)
        coords = []
        for i in range(self.rank):
            c = Fraction(root[i]) * 2 * self._d[i] / norm
            if c.denominator != 1:
                raise AssertionError("coroot coordinates must be integral")
            coords.append(int(c))
        return tuple(coords)

    def coroot(self, root: RootCoords) -> RootCoords:
        if all(c >= 0 for c in root):
            return self._coroot_cache.get(root) or self._coroot(root)
        pos = tuple(-c for c in root)
        return tuple(-c for c in self._coroot_cache.get(pos) or self._coroot(pos))

    def pairing(self, weight, root: RootCoords) -> int:
        """<weight, alpha-check> for a weight and a root of the system."""
        co = self.coroot(root)
        return sum(int(weight[i]) * co[i] for i in range(self.rank))

    def inner(self, w1, w2) -> Fraction:
        """Invariant form on weight space, arguments in weight coordinates."""
        rc = self.weight_root_coords(w2)
        return sum(Fraction(w1[j]) * self._d[j] * rc[j] for j in range(self.rank))

    # -- derived data -------------------------------------------------------

    @property
    def rho(self) -> Weight:
        return (1,) * self.rank

    def simple_root_weight(self, i: int) -> Weight:
        """alpha_i in fundamental-weight coordinates (row i of the Cartan matrix)."""
        return self.cartan[i]

    def reflect(self, weight, i: int) -> Weight:
        """Simple reflection s_i acting on fundamental-weight coordinates."""
        c = weight[i]
        return tuple(weight[j] - c * self.cartan[i][j] for j in range(self.rank))

    def is_irreducible(self) -> bool:
        return len(self.factors) == 1

    def _require_irreducible(self) -> None:
        if not self.is_irreducible():
            raise ReducibleError(f"operation requires an irreducible system, got {self.type_name()}")

    def irreducible_factors(self) -> list["RootSystem"]:
        return [RootSystem([f]) for f in self.factors]

    def type_name(self) -> str:
        return "x".join(f"{fam}{rk}" for fam, rk in self.factors)

    def highest_root(self) -> Weight:
        """The highest root, in fundamental-weight coordinates."""
        self._require_irreducible()
        theta = max(self.positive_roots, key=lambda r: (sum(r), r))
        assert all(all(a >= b for a, b in zip(theta, r)) for r in self.positive_roots)
        return self.root_weight_coords(theta)

    def highest_short_root(self) -> Weight:
        """The dominant short root (equals the highest root when simply laced)."""
        self._require_irreducible()
        min_norm = min(self.root_norm(r) for r in self.positive_roots)
        short = [r for r in self.positive_roots if self.root_norm(r) == min_norm]
        top = max(short, key=lambda r: (sum(r), r))
        w = self.root_weight_coords(top)
        assert all(c >= 0 for c in w)
        return w

    def coroot_coefficients(self) -> tuple[tuple[int, ...], int]:
        """Coefficients n_i of the highest root's coroot on the simple coroots.

        Returns (coefficients, max coefficient).
        """
        self._require_irreducible()
        theta = max(self.positive_roots, key=lambda r: (sum(r), r))
        co = self.coroot(theta)
        return co, max(co)

    def dual_coxeter_number(self) -> int:
        co, _ = self.coroot_coefficients()
        return 1 + sum(co)

    def minimal_orbit_dimension(self) -> int:
        return 2 * self.dual_coxeter_number() - 2

    def coxeter_number(self) -> int:
        self._require_irreducible()
        family, rank = self.factors[0]
        table = {"A": rank + 1, "B": 2 * rank, "C": 2 * rank, "D": 2 * rank - 2}
        return table.get(family) or _COXETER_NUMBERS[f"{family}{rank}"]

    def weyl_order(self) -> int:
        import math

        order = 1
        for family, rank in self.factors:
            if family == "A":
                order *= math.factorial(rank + 1)
            elif family in ("B", "C"):
                order *= 2**rank * math.factorial(rank)
            elif family == "D":
                order *= 2 ** (rank - 1) * math.factorial(rank)
            else:
                order *= _WEYL_ORDERS[f"{family}{rank}"]
        return order

    def minuscule_weights(self) -> tuple[int, ...]:
        """1-based indices i with <w_i, alpha-check> <= 1 for all positive roots."""
        self._require_irreducible()
        maxima = [0] * self.rank
        for root in self.positive_roots:
            co = self.coroot(root)
            for i in range(self.rank):
                maxima[i] = max(maxima[i], co[i])
        return tuple(i + 1 for i in range(self.rank) if maxima[i] == 1)

    def fundamental_group(self) -> "AbelianInvariants":
        """Weight lattice modulo root lattice, as elementary divisors > 1."""
        return AbelianInvariants(tuple(_linalg.elementary_divisors([list(r) for r in self.cartan])))

    # -- serialization ------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "type_label": [[fam, rk] for fam, rk in self.factors],
            "cartan": [list(r) for r in self.cartan],
            "roots": [list(r) for r in self.roots],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> "RootSystem":
        rs = cls(data["type_label"])
        if "cartan" in data and [list(r) for r in rs.cartan] != data["cartan"]:
            raise InvalidTypeError("cartan matrix in document does not match type label")
        if "roots" in data and sorted(map(tuple, data["roots"])) != sorted(rs.roots):
            raise InvalidTypeError("root list in document does not match type label")
        return rs

    @classmethod
    def from_json(cls, text: str) -> "RootSystem":
        return cls.from_dict(json.loads(text))

    def __repr__(self) -> str:
        return f"RootSystem({self.type_name()!r})"

    def __eq__(self, other) -> bool:
        return isinstance(other, RootSystem) and self.factors == other.factors

    def __hash__(self) -> int:
        return hash(self.factors)


@dataclass(frozen=True)
class WeightVector:
    """A weight in fundamental-weight coordinates attached to its system."""

    coords: Weight
    system: RootSystem

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)

    def pairing(self, root: RootCoords) -> int:
        return self.system.pairing(self.coords, root)


@dataclass(frozen=True)
class AbelianInvariants:
    """Elementary divisors > 1 of a finite abelian group, in divisibility order."""

    divisors: tuple[int, ...]

    def order(self) -> int:
        n = 1
        for d in self.divisors:
            n *= d
        return n

    def __iter__(self):
        return iter(self.divisors)


def build_root_system(type_label) -> RootSystem:
    """Build a root system from a type label such as 'E8' or 'A1xA1'."""
    return RootSystem(type_label)
