"""Exhaustive enumeration of edge-biregular structures over a finite group.

Candidates are ordered pairs of commuting involutions for (r0, r2) and
(rho0, rho2) joined into quadruples; the generation check runs last since it
is the most expensive filter.  Deduplication keeps, per automorphism class,
the lexicographically least quadruple under the group's fixed element order,
found by attempting generator-map extensions towards smaller candidates
rather than by computing the automorphism group wholesale.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence

from .ebr_core import EdgeBiregularMap, are_isomorphic, make_ebr
from .perm_group import FiniteGroup, Permutation, closure, extend_generator_map, is_dihedral

DEFAULT_CANDIDATE_BUDGET = 10**7


class CandidateBudgetExceeded(RuntimeError):
    """The candidate quadruple count exceeded the configured budget."""


def _commuting_involution_pairs(group: FiniteGroup, proper: bool) -> list[tuple[int, int]]:
    invs = group.involution_indices()
    pairs = []
    for x in invs:
        for y in invs:
            if proper and x == y:
                continue
            if group.mul(x, y) == group.mul(y, x):
                pairs.append((x, y))
    return pairs


class _JoinCache:
    """Memoized subgroup joins keyed by the (frozen) element sets of the
    pair subgroups; dihedral-sized groups have few distinct subgroups, so
    almost every quadruple's generation check is a dictionary hit."""

    def __init__(self, group: FiniteGroup):
        self.group = group
        self.pair_subgroup: dict[tuple[int, int], frozenset[int]] = {}
        self.joins: dict[tuple[frozenset, frozenset], bool] = {}

    def subgroup_of_pair(self, pair: tuple[int, int]) -> frozenset[int]:
        cached = self.pair_subgroup.get(pair)
        if cached is None:
            cached = frozenset(self.group.subgroup_indices(list(set(pair))))
            self.pair_subgroup[pair] = cached
        return cached

    def generates(self, pair_a: tuple[int, int], pair_b: tuple[int, int]) -> bool:
        sa, sb = self.subgroup_of_pair(pair_a), self.subgroup_of_pair(pair_b)
        if sa == sb:
            return len(sa) == self.group.order
        key = frozenset((sa, sb))
        hit = self.joins.get(key)
        if hit is None:
            gens = list(set(pair_a) | set(pair_b))
            hit = self.group.subgroup_order(gens) == self.group.order
            self.joins[key] = hit
        return hit


def enumerate_ebr(group: FiniteGroup, require_proper: bool = False,
                  require_distinct: bool = False, chi_max: Optional[int] = None,
                  max_candidates: int = DEFAULT_CANDIDATE_BUDGET,
                  threads: int = 1) -> list[EdgeBiregularMap]:
    """All edge-biregular structures on ``group`` up to automorphism.

    Returns validated maps for the lexicographically least quadruple of each
    automorphism class, sorted by slot indices.  ``chi_max`` keeps only maps
    with Euler characteristic at most that value.
    """
    pairs = _commuting_involution_pairs(group, require_proper)
    if len(pairs) ** 2 > max_candidates:
        raise CandidateBudgetExceeded(
            f"{len(pairs) ** 2} candidate quadruples exceed the budget {max_candidates}")

    cache = _JoinCache(group)

    def survey(chunk: Sequence[tuple[int, int]]) -> list[tuple[int, int, int, int]]:
        found = []
        for r_pair in chunk:
            for p_pair in pairs:
                quad = r_pair + p_pair
                if require_distinct and len(set(quad)) < 4:
                    continue
                if not cache.generates(r_pair, p_pair):
                    continue
                found.append(quad)
        return found

    if threads > 1 and len(pairs) > 1:
        step = (len(pairs) + threads - 1) // threads
        chunks = [pairs[i:i + step] for i in range(0, len(pairs), step)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(survey, chunks))
        quads = sorted(q for part in parts for q in part)
    else:
        quads = sorted(survey(pairs))

    maps = {}
    for quad in quads:
        m = make_ebr(group, *(group.element(i) for i in quad))
        if chi_max is not None and m.chi() > chi_max:
            continue
        maps[quad] = m

    reps = _deduplicate(group, sorted(maps))
    return [maps[quad] for quad in reps]


def _signature(group: FiniteGroup, quad: tuple[int, int, int, int]) -> tuple:
    """Automorphism-invariant fingerprint used to bucket candidates."""
    eq_pattern = tuple(quad.index(q) for q in quad)
    orders = tuple(group.element_order(group.mul(quad[i], quad[j]))
                   for i in range(4) for j in range(i + 1, 4))
    return eq_pattern + orders


def _deduplicate(group: FiniteGroup,
                 quads: list[tuple[int, int, int, int]]) -> list[tuple[int, int, int, int]]:
    buckets: dict[tuple, list[tuple[int, int, int, int]]] = {}
    for quad in quads:
        buckets.setdefault(_signature(group, quad), []).append(quad)

    reps = []
    for bucket in buckets.values():
        claimed = set()
        for i, quad in enumerate(bucket):
            if quad in claimed:
                continue
            reps.append(quad)
            for other in bucket[i + 1:]:
                if other in claimed:
                    continue
                if extend_generator_map(group, list(quad), list(other)) is not None:
                    claimed.add(other)
    return sorted(reps)


# ---------------------------------------------------------------------------
# Classification report
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MapClass:
    class_size: int
    map_type: tuple[int, int]
    chi: int
    V: int
    F: int
    orientable: bool
    fully_regular: bool
    table_row: Optional[int]

    def to_json_dict(self) -> dict:
        return {
            "class_size": self.class_size,
            "type": list(self.map_type),
            "chi": self.chi,
            "V": self.V,
            "F": self.F,
            "orientable": self.orientable,
            "fully_regular": self.fully_regular,
            "table_row": self.table_row,
        }


@dataclass(frozen=True)
class ClassReport:
    classes: tuple[MapClass, ...]
    group_is_dihedral: bool = False

    def to_json(self) -> list[dict]:
        return [c.to_json_dict() for c in self.classes]

    @property
    def discrepancies(self) -> list[MapClass]:
        """Classes of negative Euler characteristic over a dihedral group
        that match no classification row.  (Over non-dihedral groups the
        table does not apply, so nothing is flagged.)"""
        if not self.group_is_dihedral:
            return []
        return [c for c in self.classes if c.table_row is None and c.chi < 0]


def dihedral_table_row(order: int, k: int, l: int, V: int, F: int, chi: int,
                       fully_regular: bool) -> Optional[int]:
    """Match class data over a dihedral group of the given order against the
    classification of dihedral maps with chi < 0 (up to duality):

    row 1: (2m, 2m), chi 2-m, V = F = 1, regular;
    row 2: (m, m), chi 4-m, V = F = 2, regular, m/2 odd;
    row 3: (2m, 4), chi (2-m)/2, V = 1, F = m/2, not regular;
    row 4: (m, 4), chi (4-m)/2, V = 2, F = m/2, not regular, m/2 odd.
    """
    if order % 2 != 0:
        return None
    m = order // 2
    if m < 4 or m % 2 != 0:
        return None
    half_odd = (m // 2) % 2 == 1
    rows = [
        (1, (2 * m, 2 * m), 2 - m, (1, 1), True, True),
        (2, (m, m), 4 - m, (2, 2), True, half_odd),
        (3, (2 * m, 4), (2 - m) // 2, (1, m // 2), False, True),
        (4, (m, 4), (4 - m) // 2, (2, m // 2), False, half_odd),
    ]
    for row, (tk, tl), tchi, (tv, tf), treg, allowed in rows:
        if not allowed:
            continue
        matches = ((k, l) == (tk, tl) and (V, F) == (tv, tf)) or \
                  ((k, l) == (tl, tk) and (V, F) == (tf, tv))
        if matches and chi == tchi and fully_regular == treg:
            return row
    return None


def classify_report(maps: Sequence[EdgeBiregularMap]) -> ClassReport:
    """Partition closed-surface maps over one group into classes under
    identity, twin, dual and twin-of-dual, then report per-class data and the
    classification row matched by each dihedral class with chi < 0."""
    maps = sorted(maps, key=lambda m: m.slot_indices)
    if not maps:
        return ClassReport(())
    group = maps[0].group
    for m in maps:
        if m.group is not group and m.group.elements != group.elements:
            raise ValueError("maps must share one group")

    dihedral = is_dihedral(group)
    unassigned = list(maps)
    classes = []
    while unassigned:
        rep = unassigned.pop(0)
        orbit = [rep, rep.twin(), rep.dual(), rep.dual().twin()]
        members = [rep]
        remaining = []
        for other in unassigned:
            if any(are_isomorphic(other, image) for image in orbit):
                members.append(other)
            else:
                remaining.append(other)
        unassigned = remaining

        inv = rep.invariants()
        row = None
        if dihedral and inv.chi < 0:
            row = dihedral_table_row(inv.order, inv.k, inv.l, inv.V, inv.F,
                                     inv.chi, inv.fully_regular)
        classes.append(MapClass(
            class_size=len(members), map_type=(inv.k, inv.l), chi=inv.chi,
            V=inv.V, F=inv.F, orientable=inv.orientable,
            fully_regular=inv.fully_regular, table_row=row))
    return ClassReport(tuple(classes), group_is_dihedral=dihedral)


# ---------------------------------------------------------------------------
# Built-in group catalog
# ---------------------------------------------------------------------------

def _dihedral_group(n: int) -> FiniteGroup:
    """Dihedral group of order n (n even), on explicit permutations."""
    if n < 2 or n % 2 != 0:
        raise ValueError("dihedral order must be even and at least 2")
    if n == 2:
        a = b = Permutation((1, 0))
    elif n == 4:
        a = Permutation.from_cycles(4, [(0, 1)])
        b = Permutation.from_cycles(4, [(2, 3)])
    else:
        half = n // 2
        a = Permutation((-i) % half for i in range(half))
        b = Permutation((1 - i) % half for i in range(half))
    return closure([a, b], names=["a", "b"], max_order=n)


def _dihedral_times_c2(n: int) -> FiniteGroup:
    base = _dihedral_group(n)
    d = base.degree

    def lift(p: Permutation) -> Permutation:
        return Permutation(list(p.images) + [d, d + 1])

    z = Permutation(list(range(d)) + [d + 1, d])
    gens = [lift(base.generator("a")), lift(base.generator("b")), z]
    return closure(gens, names=["a", "b", "z"], max_order=2 * n)


def _elementary_abelian(k: int) -> FiniteGroup:
    gens = [Permutation.from_cycles(2 * k, [(2 * i, 2 * i + 1)]) for i in range(k)]
    return closure(gens, names=[f"t{i}" for i in range(k)], max_order=2 ** k)


def catalog_names() -> list[str]:
    names = [f"dih:{n}" for n in range(2, 49, 2)]
    names += [f"dihxc2:{n}" for n in range(2, 25, 2)]
    names += [f"c2^{k}" for k in (1, 2, 3)]
    return names


def catalog_group(name: str) -> FiniteGroup:
    """Build a catalog group: dih:n (dihedral of order n), dihxc2:n, or c2^k."""
    if name.startswith("dih:"):
        return _dihedral_group(int(name.split(":")[1]))
    if name.startswith("dihxc2:"):
        return _dihedral_times_c2(int(name.split(":")[1]))
    if name.startswith("c2^"):
        k = int(name[3:])
        if not 1 <= k <= 3:
            raise ValueError("c2^k supports k in 1..3")
        return _elementary_abelian(k)
    raise ValueError(f"unknown catalog group {name!r}")
