"""Exact character arithmetic on dominant weights.

Provides the Weyl dimension formula, weight multiplicities by the
Freudenthal recursion, tensor product decomposition by the Klimyk
rho-shifted reflection algorithm (iterating over the smaller factor's
weight multiset), exterior powers via the Newton identity on power-sum
characters, breadth-first generation certificates over minuscule and
highest-short-root generators, and the dominance order / orbit dimension
combinatorics for affine Grassmannian orbits.

All arithmetic is exact: Python big integers and fractions throughout.
Weights are tuples of integers in fundamental-weight coordinates.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .config import WEIGHT_BUDGET, effective_budget
from .errors import BudgetError, LieparError
from .rootsys import RootSystem, Weight, WeightVector


def _coords(weight) -> Weight:
    if isinstance(weight, WeightVector):
        return weight.coords
    return tuple(int(c) for c in weight)


def _check_dominant(weight: Weight) -> Weight:
    if any(c < 0 for c in weight):
        raise LieparError(f"weight {weight} is not dominant")
    return weight


def weyl_dimension(rs: RootSystem, weight) -> int:
    """dim V(lambda) by the Weyl dimension formula, exact."""
    lam = _check_dominant(_coords(weight))
    num = 1
    den = 1
    for root in rs.positive_roots:
        co = rs.coroot(root)
        num *= sum((lam[i] + 1) * co[i] for i in range(rs.rank))
        den *= sum(co)
    assert num % den == 0
    return num // den


def dominant_rep(rs: RootSystem, weight: Weight) -> Weight:
    """The dominant Weyl-orbit representative of a weight."""
    w = list(weight)
    while True:
        i = next((k for k, c in enumerate(w) if c < 0), None)
        if i is None:
            return tuple(w)
        c = w[i]
        for j in range(rs.rank):
            w[j] -= c * rs.cartan[i][j]


def straighten_signed(rs: RootSystem, weight: Weight) -> tuple[Weight, int]:
    """Dominant representative with the sign of the straightening word.

    Returns (rep, 0) when the weight lies on a reflection wall.
    """
    w = list(weight)
    sign = 1
    while True:
        i = next((k for k, c in enumerate(w) if c < 0), None)
        if i is None:
            break
        c = w[i]
        for j in range(rs.rank):
            w[j] -= c * rs.cartan[i][j]
        sign = -sign
    if any(c == 0 for c in w):
        return tuple(w), 0
    return tuple(w), sign


def weyl_orbit(rs: RootSystem, weight) -> list[Weight]:
    """The full Weyl orbit of a weight, as a sorted list."""
    start = _coords(weight)
    seen = {start}
    queue = [start]
    while queue:
        w = queue.pop()
        for i in range(rs.rank):
            if w[i] == 0:
                continue
            u = rs.reflect(w, i)
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return sorted(seen)


def _height(rs: RootSystem, weight: Weight) -> Fraction:
    return sum(rs.weight_root_coords(weight))


def dominant_weight_multiplicities(rs: RootSystem, weight) -> dict[Weight, int]:
    """Multiplicities of the dominant weights of V(lambda), by Freudenthal."""
    lam = _check_dominant(_coords(weight))
    pos = [(r, rs.root_weight_coords(r)) for r in rs.positive_roots]
    dominants = {lam}
    frontier = [lam]
    while frontier:
        nxt = []
        for w in frontier:
            for _, aw in pos:
                cand = tuple(w[i] - aw[i] for i in range(rs.rank))
                if all(c >= 0 for c in cand) and cand not in dominants:
                    dominants.add(cand)
                    nxt.append(cand)
        frontier = nxt
    ordered = sorted(dominants, key=lambda w: (_height(rs, w), w), reverse=True)

    rho = rs.rho
    lam_rho = tuple(lam[i] + 1 for i in range(rs.rank))
    c_lam = rs.inner(lam_rho, lam_rho)
    mults: dict[Weight, int] = {lam: 1}
    for mu in ordered[1:]:
        acc = Fraction(0)
        for ar, aw in pos:
            d_part = [Fraction(ar[j]) * rs._d[j] for j in range(rs.rank)]
            k = 1
            while True:
                xi = tuple(mu[i] + k * aw[i] for i in range(rs.rank))
                m = mults.get(dominant_rep(rs, xi), 0)
                if m == 0:
                    break
                acc += m * sum(d_part[j] * xi[j] for j in range(rs.rank))
                k += 1
        mu_rho = tuple(mu[i] + 1 for i in range(rs.rank))
        denom = c_lam - rs.inner(mu_rho, mu_rho)
        value = 2 * acc / denom
        assert value.denominator == 1 and value >= 0
        mults[mu] = int(value)
    return mults


def _full_weight_multiset(rs: RootSystem, weight, budget: int | None = None) -> dict[Weight, int]:
    lam = _coords(weight)
    limit = budget if budget is not None else effective_budget(WEIGHT_BUDGET)
    dim = weyl_dimension(rs, lam)
    if dim > limit:
        raise BudgetError(f"weight system of dimension {dim} exceeds budget {limit}")
    out: dict[Weight, int] = {}
    for mu, m in dominant_weight_multiplicities(rs, lam).items():
        for w in weyl_orbit(rs, mu):
            out[w] = m
    assert sum(out.values()) == dim
    return out


@dataclass
class Character:
    """A character: decomposition into irreducibles and/or a weight multiset."""

    system: RootSystem
    dominant_mults: dict[Weight, int] | None = None
    weight_mults: dict[Weight, int] | None = None

    @classmethod
    def from_dominant(cls, rs: RootSystem, mults: dict[Weight, int]) -> "Character":
        return cls(rs, dominant_mults=dict(mults))

    @classmethod
    def from_weights(cls, rs: RootSystem, mults: dict[Weight, int]) -> "Character":
        return cls(rs, weight_mults=dict(mults))

    def dimension(self) -> int:
        if self.dominant_mults is not None:
            return sum(m * weyl_dimension(self.system, w) for w, m in self.dominant_mults.items())
        assert self.weight_mults is not None
        return sum(self.weight_mults.values())

    def expand(self) -> dict[Weight, int]:
        """Weight multiset; computed from the irreducible decomposition if needed."""
        if self.weight_mults is None:
            assert self.dominant_mults is not None
            total: dict[Weight, int] = {}
            for lam, m in self.dominant_mults.items():
                for w, c in _full_weight_multiset(self.system, lam).items():
                    total[w] = total.get(w, 0) + m * c
            self.weight_mults = total
        return self.weight_mults

    def is_consistent(self) -> bool:
        """When both representations are carried, do they describe one character?"""
        if self.dominant_mults is None or self.weight_mults is None:
            return True
        expanded: dict[Weight, int] = {}
        for lam, m in self.dominant_mults.items():
            for w, c in _full_weight_multiset(self.system, lam).items():
                expanded[w] = expanded.get(w, 0) + m * c
        return expanded == {w: m for w, m in self.weight_mults.items() if m}

    def sorted_dominant(self) -> list[tuple[Weight, int]]:
        assert self.dominant_mults is not None
        return sorted(self.dominant_mults.items(), key=lambda kv: (_height(self.system, kv[0]), kv[0]), reverse=True)


def weight_multiplicities(rs: RootSystem, weight, budget: int | None = None) -> Character:
    """Full weight multiset of V(lambda) (Freudenthal + Weyl orbits)."""
    lam = _check_dominant(_coords(weight))
    ch = Character(rs, dominant_mults={lam: 1},
                   weight_mults=_full_weight_multiset(rs, lam, budget))
    return ch


def tensor_decompose(rs: RootSystem, left, right, budget: int | None = None) -> Character:
    """Decomposition of V(lambda) (x) V(mu) into irreducibles (Klimyk).

    Iterates over the weight multiset of the smaller-dimension factor; the
    larger factor enters only through rho-shifted reflections.
    """
    lam, mu = _check_dominant(_coords(left)), _check_dominant(_coords(right))
    if weyl_dimension(rs, mu) > weyl_dimension(rs, lam):
        lam, mu = mu, lam
    small = _full_weight_multiset(rs, mu, budget)
    rho = rs.rho
    acc: dict[Weight, int] = {}
    for nu, m in small.items():
        xi = tuple(lam[i] + 1 + nu[i] for i in range(rs.rank))
        dom, sign = straighten_signed(rs, xi)
        if sign == 0:
            continue
        res = tuple(dom[i] - 1 for i in range(rs.rank))
        acc[res] = acc.get(res, 0) + sign * m
    result = {w: m for w, m in acc.items() if m != 0}
    if any(m < 0 for m in result.values()):
        raise AssertionError("negative multiplicity out of Klimyk accumulation")
    return Character.from_dominant(rs, result)


def _char_product(a: dict[Weight, int], b: dict[Weight, int]) -> dict[Weight, int]:
    out: dict[Weight, int] = {}
    for u, m in a.items():
        for v, c in b.items():
            w = tuple(x + y for x, y in zip(u, v))
            out[w] = out.get(w, 0) + m * c
    return {w: m for w, m in out.items() if m}


def _char_scale(a: dict[Weight, int], k: int) -> dict[Weight, int]:
    """Adams scaling: every weight multiplied by k, multiplicities kept."""
    return {tuple(k * x for x in w): m for w, m in a.items()}


def decompose_weight_multiset(rs: RootSystem, multiset: dict[Weight, int]) -> dict[Weight, int]:
    """Write a Weyl-invariant weight multiset as a sum of irreducible characters.

    Iterated highest-weight stripping in decreasing height order; a negative
    intermediate multiplicity signals corrupted input and raises.
    """
    rem = {w: m for w, m in multiset.items() if m}
    out: dict[Weight, int] = {}
    while rem:
        dominants = [w for w in rem if all(c >= 0 for c in w)]
        if not dominants:
            raise AssertionError("leftover non-dominant weights; multiset was not Weyl-invariant")
        mu = max(dominants, key=lambda w: (_height(rs, w), w))
        m = rem[mu]
        if m < 0:
            raise AssertionError(f"negative multiplicity {m} at {mu} during stripping")
        for w, c in _full_weight_multiset(rs, mu).items():
            nv = rem.get(w, 0) - m * c
            if nv:
                rem[w] = nv
            else:
                rem.pop(w, None)
        out[mu] = m
    return out


def exterior_power_decompose(rs: RootSystem, weight, power: int,
                             budget: int | None = None) -> Character:
    """Decomposition of the exterior power Lambda^i V(lambda).

    Weight multisets of the powers are produced by the Newton identity
    e_k = (1/k) sum_{i} (-1)^(i-1) e_(k-i) p_i from Adams-scaled multisets,
    then stripped into irreducibles.
    """
    lam = _check_dominant(_coords(weight))
    if power < 0:
        raise LieparError("exterior power must be nonnegative")
    zero = (0,) * rs.rank
    if power == 0:
        return Character.from_dominant(rs, {zero: 1})
    dim = weyl_dimension(rs, lam)
    if power > dim:
        return Character.from_dominant(rs, {})
    base = _full_weight_multiset(rs, lam, budget)
    powersums = {1: base}
    for k in range(2, power + 1):
        powersums[k] = _char_scale(base, k)
    elementary: list[dict[Weight, int]] = [{zero: 1}]
    for k in range(1, power + 1):
        acc: dict[Weight, int] = {}
        sign = 1
        for i in range(1, k + 1):
            term = _char_product(elementary[k - i], powersums[i])
            for w, m in term.items():
                acc[w] = acc.get(w, 0) + sign * m
            sign = -sign
        ek = {}
        for w, m in acc.items():
            assert m % k == 0
            if m // k:
                ek[w] = m // k
        elementary.append(ek)
    mults = decompose_weight_multiset(rs, elementary[power])
    character = Character.from_dominant(rs, mults)
    assert character.dimension() == comb(dim, power)
    return character


def dominance_leq(rs: RootSystem, lower, upper) -> bool:
    """lambda <= mu iff mu - lambda is a nonnegative integer root combination."""
    lam, mu = _check_dominant(_coords(lower)), _check_dominant(_coords(upper))
    delta = tuple(mu[i] - lam[i] for i in range(rs.rank))
    coords = rs.weight_root_coords(delta)
    return all(c.denominator == 1 and c >= 0 for c in coords)


def orbit_dimension(rs: RootSystem, weight) -> int:
    """Dimension of the orbit attached to a dominant (co)weight: <lambda, 2 rho-check>."""
    lam = _check_dominant(_coords(weight))
    total = 0
    for root in rs.positive_roots:
        co = rs.coroot(root)
        total += sum(lam[i] * co[i] for i in range(rs.rank))
    return total


# -- generation certificates -------------------------------------------------


def generator_weights(rs: RootSystem) -> list[Weight]:
    """Minuscule fundamental weights plus the highest short root, deduplicated."""
    if not rs.is_irreducible():
        raise LieparError("generators are defined for irreducible types")
    gens = []
    for i in rs.minuscule_weights():
        gens.append(tuple(1 if j == i - 1 else 0 for j in range(rs.rank)))
    short = rs.highest_short_root()
    if short not in gens:
        gens.append(short)
    return sorted(set(gens), key=lambda w: (weyl_dimension(rs, w), w))


@dataclass(frozen=True)
class CertificateEntry:
    fundamental_index: int  # 1-based
    word: tuple[Weight, ...]
    multiplicity: int


@dataclass(frozen=True)
class GenerationCertificate:
    type_name: str
    generators: tuple[Weight, ...]
    entries: tuple[CertificateEntry, ...]

    def verify(self, rs: RootSystem) -> bool:
        for entry in self.entries:
            target = tuple(1 if j == entry.fundamental_index - 1 else 0 for j in range(rs.rank))
            mult = word_multiplicity(rs, entry.word, target)
            if mult != entry.multiplicity or mult <= 0:
                return False
        return True


def word_multiplicity(rs: RootSystem, word, target) -> int:
    """Multiplicity of V(target) in the tensor product over the word."""
    word = [(_coords(w)) for w in word]
    if not word:
        return 0
    current: dict[Weight, int] = {word[0]: 1}
    for gen in word[1:]:
        nxt: dict[Weight, int] = {}
        for lam, mult in current.items():
            piece = tensor_decompose(rs, lam, gen)
            assert piece.dominant_mults is not None
            for nu, c in piece.dominant_mults.items():
                nxt[nu] = nxt.get(nu, 0) + mult * c
        current = nxt
    return current.get(_coords(target), 0)


def generation_certificate(rs: RootSystem, max_word_length: int = 8,
                           max_expansions: int = 4000) -> GenerationCertificate:
    """Find, for every fundamental weight, a tensor word over the generators
    whose characteristic-zero decomposition contains it.

    Bounded breadth-first search, expanding discovered summands in order of
    (word length, dimension).  Raises BudgetError naming the fundamental
    weights that could not be certified within the budget.
    """
    gens = generator_weights(rs)
    targets = {tuple(1 if j == i else 0 for j in range(rs.rank)): i + 1 for i in range(rs.rank)}
    discovered: dict[Weight, tuple[Weight, ...]] = {}
    heap: list[tuple[int, int, Weight]] = []
    for g in gens:
        discovered[g] = (g,)
        heapq.heappush(heap, (1, weyl_dimension(rs, g), g))
    expansions = 0
    while heap and not all(t in discovered for t in targets):
        length, _, lam = heapq.heappop(heap)
        if length >= max_word_length:
            continue
        word = discovered[lam]
        if len(word) != length:
            continue  # stale heap entry
        for g in gens:
            expansions += 1
            if expansions > max_expansions:
                heap = []
                break
            piece = tensor_decompose(rs, lam, g)
            assert piece.dominant_mults is not None
            for nu in sorted(piece.dominant_mults, key=lambda w: (weyl_dimension(rs, w), w)):
                if nu not in discovered:
                    discovered[nu] = word + (g,)
                    heapq.heappush(heap, (length + 1, weyl_dimension(rs, nu), nu))
    missing = [idx for t, idx in targets.items() if t not in discovered]
    if missing:
        raise BudgetError(
            "generation search budget exhausted; uncertified fundamental weights: "
            + ", ".join(f"w{i}" for i in sorted(missing))
        )
    entries = []
    for t, idx in sorted(targets.items(), key=lambda kv: kv[1]):
        word = discovered[t]
        mult = word_multiplicity(rs, word, t)
        assert mult > 0
        entries.append(CertificateEntry(idx, word, mult))
    return GenerationCertificate(rs.type_name(), tuple(gens), tuple(entries))
