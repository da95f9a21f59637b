"""Stabilizer states, graph states, local-Clifford equivalence, classification
by minimal supports, and Clebsch-Gordan transforms for two non-abelian groups."""
from __future__ import annotations

from .classify import (
    ClassificationVerdict,
    VertexPartition,
    analyze,
    brute_force_distance,
    distance,
    distance_two,
    has_short_cycles,
    m_equals_s,
    minimal_elements,
    satisfies_msc,
    vertex_partition,
)
from .errors import GuardExceeded
from .f2core import BinMatrix, kernel, rank, row_reduce
from .graphstate import (
    Graph,
    LocalCliffordRecord,
    entanglement_measure,
    find_id_on_A,
    from_upper_triangle_code,
    local_complement,
    measure,
    schmidt_rank,
    stab_to_graph,
    standard_generators,
    upper_triangle_code,
)
from .lulc import (
    CLIFFORD_TABLE,
    CliffordTag,
    LocalUnitary,
    apply_local_unitary,
    apply_pauli,
    closest_clifford,
    construct_lc_from_lu,
    find_clifford_conjugating,
    graph_state_vector,
    nearest_signed_pauli,
    replay_record,
    stabilizer_state_vector,
    states_equal_up_to_phase,
)
from .orbit import connected, enumerate_lc_iso_classes, lc_orbit, lc_representative
from .pauli import (
    CheckMatrix,
    PauliOperator,
    StabilizerGroup,
    commutes,
    enumerate_group,
    is_valid_stabilizer,
    parse_pauli,
)
from .reptheory import (
    DihedralIrrep,
    FusionResult,
    HeisenbergIrrep,
    character_fusion_oracle,
    decomposition_deviation,
    dihedral_elements,
    dihedral_mul,
    fuse,
    heisenberg_elements,
    heisenberg_mul,
    irrep_matrix,
    recover_mu2,
    verify_decomposition,
)
from .subcode import (
    PiSubgroupResult,
    detect_bell_pairs,
    generalized_pauli,
    pi_subgroup,
    restricted_minimal_elements,
    single_qubit_subgroup,
    subcode_stabilizer,
    trivially_encoded,
)

__all__ = [name for name in dir() if not name.startswith("_")]
