"""Edge-biregular maps on surfaces.

A library for maps carrying an alternate-edge-colouring whose
colour-preserving automorphism group acts regularly on corners.  Such a map
is a finite group with four involutory generator slots; this package builds
them from presentations (via coset enumeration) or explicit permutations,
computes their topological invariants, and classifies them over small groups.
"""

from .constructions import (
    RegularMap,
    are_regular_isomorphic,
    construction1,
    construction2,
    construction3,
    construction4,
    underlying_regular,
)
from .ebr_core import (
    SLOT_NAMES,
    BoundaryMapError,
    EdgeBiregularMap,
    EdgeCount,
    InvalidMapError,
    MapInvariants,
    are_isomorphic,
    make_ebr,
)
from .enumeration import (
    CandidateBudgetExceeded,
    ClassReport,
    MapClass,
    catalog_group,
    catalog_names,
    classify_report,
    dihedral_table_row,
    enumerate_ebr,
)
from .families import (
    dihedral_map,
    klein,
    regular_catalog,
    sphere_family,
    torus_rect,
    torus_rhombic,
)
from .flag_maps import (
    FlagMap,
    ebr_to_flagmap,
    is_alternate_edge_colourable,
    load_flagmap,
    regular_to_flagmap,
    rotation_system_to_flagmap,
    save_flagmap,
)
from .perm_group import (
    FiniteGroup,
    GroupMap,
    GroupTooLargeError,
    Permutation,
    closure,
    extend_generator_map,
    groups_isomorphic_on,
    is_dihedral,
)
from .presentation import (
    CosetLimitExceeded,
    GroupPresentation,
    PresentationSyntaxError,
    corner_monodromy_presentation,
    coset_enumerate,
    dihedral_presentation,
    ebr_type_presentation,
    evaluate_word,
    parse_presentation,
    square_grid_group,
    triangle_group,
)

__version__ = "0.1.0"
