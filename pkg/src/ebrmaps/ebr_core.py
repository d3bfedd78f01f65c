"""Edge-biregular maps as groups with four involutory generator slots.

A map is a finite group ``H`` together with four slots ``r0, r2, rho0, rho2``,
each holding an involution of ``H`` or absent.  ``r0``/``r2`` act along/across
the distinguished shaded edge, ``rho0``/``rho2`` along/across the unshaded
one.  Corners of the map are identified with the elements of ``H``; the
colour-preserving automorphisms act on corners by left multiplication and
the corner-gluing (monodromy) instructions by right multiplication.

Slot coincidences encode degeneracies: ``r0 == r2`` makes the shaded orbit
consist of semi-edges (likewise unshaded), both coincidences give a semistar,
and an absent slot puts the corresponding edge orbit on a surface boundary.
Surface invariants are only defined for maps with all four slots present.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .perm_group import (
    FiniteGroup,
    Permutation,
    extend_generator_map,
    groups_isomorphic_on,
)

SLOT_NAMES = ("r0", "r2", "rho0", "rho2")

# Boundary classification by which slot is absent: an absent "along" slot
# means semi-edges running to the boundary, an absent "across" slot means
# edges lying along the boundary.
_BOUNDARY_LETTER = {"r0": "c", "r2": "b", "rho0": "d", "rho2": "a"}


class InvalidMapError(ValueError):
    """The slot data does not define an edge-biregular map."""


class BoundaryMapError(ValueError):
    """Boundary maps carry no closed-surface invariants."""


@dataclass(frozen=True)
class EdgeCount:
    count: int
    kind: str  # "proper" or "semi"


@dataclass(frozen=True)
class MapInvariants:
    """Type, counts and symmetry flags of a map with all slots present."""

    order: int
    k: int
    l: int
    V: int
    F: int
    shaded_edges: EdgeCount
    unshaded_edges: EdgeCount
    chi: int
    orientable: bool
    genus: int
    fully_regular: bool
    proper: bool
    distinct_generators: bool
    degeneracy_class: str

    def to_json_dict(self) -> dict:
        return {
            "order": self.order,
            "k": self.k,
            "l": self.l,
            "V": self.V,
            "F": self.F,
            "edges_shaded": {"count": self.shaded_edges.count,
                             "kind": self.shaded_edges.kind},
            "edges_unshaded": {"count": self.unshaded_edges.count,
                               "kind": self.unshaded_edges.kind},
            "chi": self.chi,
            "orientable": self.orientable,
            "genus": self.genus,
            "fully_regular": self.fully_regular,
            "proper": self.proper,
            "distinct_generators": self.distinct_generators,
            "degeneracy_class": self.degeneracy_class,
        }


class EdgeBiregularMap:
    """Validated map ``(H; r0, r2, rho0, rho2)`` with optional slots."""

    def __init__(self, group: FiniteGroup,
                 r0: Optional[Permutation], r2: Optional[Permutation],
                 rho0: Optional[Permutation], rho2: Optional[Permutation]):
        self.group = group
        self.slots: tuple[Optional[Permutation], ...] = (r0, r2, rho0, rho2)
        self.slot_indices: tuple[Optional[int], ...] = tuple(
            None if s is None else self._checked_index(s) for s in self.slots)

        present = [i for i in self.slot_indices if i is not None]
        if len(present) < 2:
            raise InvalidMapError("fewer than two slots are present")
        for name, idx in zip(SLOT_NAMES, self.slot_indices):
            if idx is not None and group.element_order(idx) != 2:
                raise InvalidMapError(f"slot {name} is not an involution")
        self._check_commuting(0, 1)
        self._check_commuting(2, 3)
        if group.subgroup_order(present) != group.order:
            raise InvalidMapError("present slots do not generate the group")

        absent = [name for name, idx in zip(SLOT_NAMES, self.slot_indices)
                  if idx is None]
        if absent:
            self.degeneracy_class = "boundary"
            self.boundary_type = "".join(sorted(_BOUNDARY_LETTER[n] for n in absent))
        else:
            self.boundary_type = None
            shaded_semi = self.slot_indices[0] == self.slot_indices[1]
            unshaded_semi = self.slot_indices[2] == self.slot_indices[3]
            if shaded_semi and unshaded_semi:
                self.degeneracy_class = "semistar"
            elif shaded_semi:
                self.degeneracy_class = "shaded_semi"
            elif unshaded_semi:
                self.degeneracy_class = "unshaded_semi"
            else:
                self.degeneracy_class = "proper"

    def _checked_index(self, p: Permutation) -> int:
        try:
            return self.group.index(p)
        except ValueError as exc:
            raise InvalidMapError(str(exc)) from None

    def _check_commuting(self, i: int, j: int) -> None:
        a, b = self.slot_indices[i], self.slot_indices[j]
        if a is None or b is None:
            return
        if self.group.mul(a, b) != self.group.mul(b, a):
            raise InvalidMapError(
                f"slots {SLOT_NAMES[i]} and {SLOT_NAMES[j]} do not commute")

    # -- basic structure ---------------------------------------------------

    @property
    def r0(self) -> Optional[Permutation]:
        return self.slots[0]

    @property
    def r2(self) -> Optional[Permutation]:
        return self.slots[1]

    @property
    def rho0(self) -> Optional[Permutation]:
        return self.slots[2]

    @property
    def rho2(self) -> Optional[Permutation]:
        return self.slots[3]

    @property
    def has_boundary(self) -> bool:
        return self.degeneracy_class == "boundary"

    @property
    def is_proper(self) -> bool:
        return self.degeneracy_class == "proper"

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, EdgeBiregularMap)
                and other.group is self.group
                and other.slot_indices == self.slot_indices)

    def __hash__(self) -> int:
        return hash((id(self.group), self.slot_indices))

    def __repr__(self) -> str:
        slots = ", ".join(
            f"{n}={'-' if i is None else i}"
            for n, i in zip(SLOT_NAMES, self.slot_indices))
        return f"EdgeBiregularMap(order={self.group.order}, {slots})"

    def _require_closed(self) -> None:
        if self.has_boundary:
            raise BoundaryMapError("boundary maps carry no closed-surface invariants")

    # -- invariants ----------------------------------------------------------

    def vertex_valency(self) -> int:
        """k: the order of the vertex stabiliser <r2, rho2>."""
        self._require_closed()
        return self.group.subgroup_order([self.slot_indices[1], self.slot_indices[3]])

    def face_length(self) -> int:
        """l: the order of the face stabiliser <r0, rho0>."""
        self._require_closed()
        return self.group.subgroup_order([self.slot_indices[0], self.slot_indices[2]])

    def map_type(self) -> tuple[int, int]:
        return (self.vertex_valency(), self.face_length())

    def edge_counts(self) -> tuple[EdgeCount, EdgeCount]:
        """Shaded and unshaded edge counts: a colour class with coincident
        slots contributes |H|/2 semi-edges, a proper class |H|/4 edges."""
        self._require_closed()
        n = self.group.order
        shaded = (EdgeCount(n // 4, "proper")
                  if self.slot_indices[0] != self.slot_indices[1]
                  else EdgeCount(n // 2, "semi"))
        unshaded = (EdgeCount(n // 4, "proper")
                    if self.slot_indices[2] != self.slot_indices[3]
                    else EdgeCount(n // 2, "semi"))
        return shaded, unshaded

    def chi(self) -> int:
        """Euler characteristic; semi-edges contribute nothing."""
        self._require_closed()
        n = self.group.order
        shaded, unshaded = self.edge_counts()
        proper_edges = sum(e.count for e in (shaded, unshaded) if e.kind == "proper")
        return n // self.vertex_valency() - proper_edges + n // self.face_length()

    def is_orientable(self) -> bool:
        """True when the corner graph on the distinct slot elements is
        bipartite, i.e. no odd word in the slot elements is the identity."""
        self._require_closed()
        group = self.group
        gens = sorted(set(self.slot_indices))
        colour: list[Optional[int]] = [None] * group.order
        colour[0] = 0
        queue = [0]
        pos = 0
        while pos < len(queue):
            e = queue[pos]
            pos += 1
            for g in gens:
                f = group.mul(e, g)
                if colour[f] is None:
                    colour[f] = 1 - colour[e]
                    queue.append(f)
                elif colour[f] == colour[e]:
                    return False
        return True

    def is_fully_regular(self) -> bool:
        """Whether swapping each r-slot with its rho-partner extends to a
        group automorphism (equivalently, the map is isomorphic to its twin)."""
        self._require_closed()
        idx = self.slot_indices
        return extend_generator_map(
            self.group, list(idx), [idx[2], idx[3], idx[0], idx[1]]) is not None

    def has_distinct_generators(self) -> bool:
        self._require_closed()
        return len(set(self.slot_indices)) == 4

    def invariants(self) -> MapInvariants:
        self._require_closed()
        cached = getattr(self, "_invariants", None)
        if cached is not None:
            return cached
        n = self.group.order
        k = self.vertex_valency()
        l = self.face_length()
        shaded, unshaded = self.edge_counts()
        chi = self.chi()
        orientable = self.is_orientable()
        genus = (2 - chi) // 2 if orientable else 2 - chi
        result = MapInvariants(
            order=n, k=k, l=l, V=n // k, F=n // l,
            shaded_edges=shaded, unshaded_edges=unshaded,
            chi=chi, orientable=orientable, genus=genus,
            fully_regular=self.is_fully_regular(),
            proper=self.is_proper,
            distinct_generators=self.has_distinct_generators(),
            degeneracy_class=self.degeneracy_class,
        )
        self._invariants = result
        return result

    def boundary_report(self) -> dict:
        """Group-level data for a boundary map.  No Euler characteristic is
        reported: the subject matter defines none for surfaces with boundary."""
        if not self.has_boundary:
            raise InvalidMapError("not a boundary map")
        idx = self.slot_indices
        k = (self.group.subgroup_order([idx[1], idx[3]])
             if idx[1] is not None and idx[3] is not None else None)
        l = (self.group.subgroup_order([idx[0], idx[2]])
             if idx[0] is not None and idx[2] is not None else None)
        return {
            "order": self.group.order,
            "k": k,
            "l": l,
            "absent_slots": [n for n, i in zip(SLOT_NAMES, idx) if i is None],
            "boundary_type": self.boundary_type,
            "degeneracy_class": "boundary",
        }

    # -- derived maps --------------------------------------------------------

    def twin(self) -> "EdgeBiregularMap":
        """The same map with the two edge colours exchanged."""
        r0, r2, rho0, rho2 = self.slots
        return EdgeBiregularMap(self.group, rho0, rho2, r0, r2)

    def dual(self) -> "EdgeBiregularMap":
        """Vertex and face roles exchanged; the type (k, l) becomes (l, k)."""
        r0, r2, rho0, rho2 = self.slots
        return EdgeBiregularMap(self.group, r2, r0, rho2, rho0)

    # -- actions on the corner set --------------------------------------------

    def monodromy(self) -> tuple[Permutation, Permutation, Permutation, Permutation]:
        """Right-regular actions of the four slot elements on the corners.

        These are the corner-gluing instructions; they generate a group of
        order |H| acting regularly, and commute with every left action.
        """
        self._require_closed()
        group = self.group
        n = group.order
        return tuple(
            Permutation(group.mul(e, s) for e in range(n))
            for s in self.slot_indices)

    def left_action(self) -> tuple[Permutation, Permutation, Permutation, Permutation]:
        """Left-regular actions of the four slot elements on the corners."""
        self._require_closed()
        group = self.group
        n = group.order
        return tuple(
            Permutation(group.mul(s, e) for e in range(n))
            for s in self.slot_indices)


def make_ebr(group: FiniteGroup,
             r0: Optional[Permutation], r2: Optional[Permutation],
             rho0: Optional[Permutation], rho2: Optional[Permutation]) -> EdgeBiregularMap:
    """Validate and build a map; absent slots are passed as None."""
    return EdgeBiregularMap(group, r0, r2, rho0, rho2)


def are_isomorphic(m1: EdgeBiregularMap, m2: EdgeBiregularMap) -> bool:
    """Whether the slot-wise correspondence extends to a group isomorphism."""
    pattern1 = tuple(i is None for i in m1.slot_indices)
    pattern2 = tuple(i is None for i in m2.slot_indices)
    if pattern1 != pattern2:
        raise ValueError("mismatched slot patterns")
    src = [i for i in m1.slot_indices if i is not None]
    dst = [i for i in m2.slot_indices if i is not None]
    return groups_isomorphic_on(m1.group, src, m2.group, dst)
