"""Torsion primes by two independent algorithms, plus the prime tables.

The fast criterion reads primes off the coroot coefficients of the highest
root; the oracle enumerates Z-closed subsystems and takes Smith normal
forms of coroot-lattice quotients, producing re-checkable certificates.
The minimal-orbit parity list and the tilting generation bounds are served
as data tables with computable cross-checks.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _linalg
from .config import SUBSYSTEM_RANK_GUARD
from .errors import LieparError
from .rootsys import AbelianInvariants, RootSystem

PrimeSet = tuple[int, ...]


def _primes_dividing(values) -> PrimeSet:
    primes = set()
    for v in values:
        v = abs(int(v))
        f = 2
        while f * f <= v:
            if v % f == 0:
                primes.add(f)
                while v % f == 0:
                    v //= f
            f += 1
        if v > 1:
            primes.add(v)
    return tuple(sorted(primes))


def torsion_primes_fast(rs: RootSystem) -> PrimeSet:
    """Primes dividing a coroot coefficient of the highest root.

    For a reducible system: the union over irreducible factors.
    """
    primes: set[int] = set()
    for factor in rs.irreducible_factors():
        coeffs, _ = factor.coroot_coefficients()
        primes.update(_primes_dividing(coeffs))
    return tuple(sorted(primes))


@dataclass(frozen=True)
class SubsystemCertificate:
    """A Z-closed subsystem witnessing p-torsion of the coroot-lattice quotient."""

    prime: int
    subsystem: tuple[tuple[int, ...], ...]  # positive roots, simple-root coords
    divisor_witness: int

    def verify(self, rs: RootSystem) -> bool:
        if self.divisor_witness % self.prime != 0:
            return False
        divisors = _coroot_quotient_divisors(rs, self.subsystem)
        return self.divisor_witness in divisors and _is_z_closed(rs, self.subsystem)


def _coroot_quotient_divisors(rs: RootSystem, subsystem) -> tuple[int, ...]:
    """Torsion divisors of Q(coroots of rs) / Q(coroots of the subsystem)."""
    matrix = [list(rs.coroot(r)) for r in subsystem]
    return tuple(_linalg.elementary_divisors(matrix))


def _is_z_closed(rs: RootSystem, subsystem) -> bool:
    hnf = _linalg.row_hermite([list(r) for r in subsystem])
    members = {r for r in rs.positive_roots if _linalg.in_row_lattice(hnf, r)}
    return members == set(subsystem)


def _oracle_candidate_sets(rs: RootSystem, exhaustive: bool):
    from itertools import combinations

    pos = rs.positive_roots
    if exhaustive:
        # every subsystem has a base of <= rank roots inside the positive roots
        for size in range(1, rs.rank + 1):
            yield from combinations(pos, size)
        return
    # targeted search: subsets of the simple roots together with the lowest
    # root of each irreducible factor (extended-base subsystems); sound but
    # exhaustive only through the coroot-coefficient equivalence
    simple = [tuple(1 if j == i else 0 for j in range(rs.rank)) for i in range(rs.rank)]
    lowest: list[tuple[int, ...]] = []
    offset = 0
    for factor in rs.irreducible_factors():
        theta = max(factor.positive_roots, key=lambda r: (sum(r), r))
        embedded = [0] * rs.rank
        for i, c in enumerate(theta):
            embedded[offset + i] = -c
        lowest.append(tuple(embedded))
        offset += factor.rank
    base = simple + lowest
    for size in range(1, len(base) + 1):
        yield from combinations(base, size)


def torsion_primes_subsystem_oracle(
    rs: RootSystem,
) -> tuple[PrimeSet, list[SubsystemCertificate]]:
    """Independent oracle: Smith forms of coroot lattices of Z-closed subsystems.

    For rank <= 5 the enumeration is exhaustive: candidate subsystems are
    intersections of the root set with sublattices spanned by at most `rank`
    positive roots, deduplicated by lattice.  Above that, candidates are the
    extended-base subsystems (simple roots plus lowest roots); every
    certificate is still a genuine Z-closed subsystem with a verified
    divisor, but completeness then rests on the coroot-coefficient theorem.
    """
    exhaustive = rs.rank <= SUBSYSTEM_RANK_GUARD
    pos = rs.positive_roots
    seen_lattices: set[tuple] = set()
    seen_subsystems: set[tuple] = set()
    primes: set[int] = set()
    certificates: list[SubsystemCertificate] = []
    for subset in _oracle_candidate_sets(rs, exhaustive):
        hnf = _linalg.row_hermite([list(r) for r in subset])
        key = tuple(tuple(row) for row in hnf)
        if key in seen_lattices:
            continue
        seen_lattices.add(key)
        subsystem = tuple(
            sorted(r for r in pos if _linalg.in_row_lattice(hnf, r))
        )
        if subsystem in seen_subsystems:
            continue
        seen_subsystems.add(subsystem)
        for d in _coroot_quotient_divisors(rs, subsystem):
            for p in _primes_dividing([d]):
                if p not in primes:
                    primes.add(p)
                    certificates.append(SubsystemCertificate(p, subsystem, d))
    return tuple(sorted(primes)), sorted(certificates, key=lambda c: c.prime)


# Bad primes for parity of the minimal nilpotent orbit, per type family.
_MINIMAL_ORBIT_TABLE = {
    "A": (),
    "B": (2,),
    "C": (2,),
    "D": (2,),
    "F": (2,),
    "G": (3,),
    "E6": (2, 3),
    "E7": (2, 3),
    "E8": (2, 3, 5),
}


def minimal_orbit_parity_primes(rs: RootSystem) -> PrimeSet:
    """The bad-prime list for the minimal nilpotent orbit of the type."""
    if not rs.is_irreducible():
        raise LieparError("minimal orbit table requires an irreducible type")
    family, rank = rs.factors[0]
    if family == "E":
        return _MINIMAL_ORBIT_TABLE[f"E{rank}"]
    return _MINIMAL_ORBIT_TABLE[family]


def long_simple_fundamental_group(rs: RootSystem) -> AbelianInvariants:
    """Weight/root lattice quotient of the subsystem generated by long simple roots.

    The subsystem is computed by closing the long simple roots under their
    own reflections, never read from a table.
    """
    if not rs.is_irreducible():
        raise LieparError("requires an irreducible type")
    max_norm = max(rs.root_norm(r) for r in rs.positive_roots)
    simple = [tuple(1 if j == i else 0 for j in range(rs.rank)) for i in range(rs.rank)]
    generators = [r for r in simple if rs.root_norm(r) == max_norm]
    closure: set[tuple[int, ...]] = set()
    pending: list[tuple[int, ...]] = []
    for g in generators:
        for signed in (g, tuple(-c for c in g)):
            if signed not in closure:
                closure.add(signed)
                pending.append(signed)

    def reflect(alpha, beta):
        co = rs.coroot(alpha)
        w = rs.root_weight_coords(beta)
        pairing = sum(w[k] * co[k] for k in range(rs.rank))
        return tuple(beta[k] - pairing * alpha[k] for k in range(rs.rank))

    while pending:
        alpha = pending.pop()
        for beta in list(closure):
            for new in (reflect(alpha, beta), reflect(beta, alpha)):
                if new not in closure:
                    closure.add(new)
                    pending.append(new)
    positive = sorted(r for r in closure if all(c >= 0 for c in r))
    # base of the subsystem: indecomposable positive elements
    pos_set = set(positive)
    base = [
        b
        for b in positive
        if not any(
            tuple(x - y for x, y in zip(b, g)) in pos_set for g in positive if g != b
        )
    ]
    cartan = [[_sub_pairing(rs, bi, bj) for bj in base] for bi in base]
    return AbelianInvariants(tuple(_linalg.elementary_divisors(cartan)))


def _sub_pairing(rs: RootSystem, beta_i, beta_j) -> int:
    """<beta_i, beta_j-check> from the invariant form."""
    value = 2 * rs.inner(rs.root_weight_coords(beta_i), rs.root_weight_coords(beta_j))
    value /= rs.root_norm(beta_j)
    if value.denominator != 1:
        raise AssertionError("Cartan pairing of subsystem must be integral")
    return int(value)


@dataclass(frozen=True)
class TiltingBound:
    """Predicate 'p > threshold' under which tensor generation is asserted."""

    type_name: str
    threshold: int
    improved: bool = False

    def admits(self, p: int) -> bool:
        return p > self.threshold

    def describe(self) -> str:
        return "any p" if self.threshold <= 1 else f"p > {self.threshold}"


def tilting_generation_bound(rs: RootSystem, improved: bool = False) -> TiltingBound:
    """Generation bound per type; `improved` lowers B/D to p > 2 (off by default)."""
    if not rs.is_irreducible():
        raise LieparError("generation bounds require an irreducible type")
    family, rank = rs.factors[0]
    if family == "A":
        threshold = 1
    elif family == "B":
        threshold = 2 if improved else rank - 1
    elif family == "D":
        threshold = 2 if improved else rank - 2
    elif family == "C":
        threshold = rank
    elif family == "E":
        threshold = {6: 3, 7: 19, 8: 31}[rank]
    else:  # F4, G2
        threshold = 3
    used_improved = improved and family in ("B", "D")
    return TiltingBound(rs.type_name(), threshold, used_improved)
