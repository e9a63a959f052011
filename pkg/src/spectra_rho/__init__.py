"""Spectral toolkit for line graphs, H-joins and graphs whose negative
adjacency eigenvalues all equal -2."""

from .graphs import (
    Graph,
    HJoin,
    StructureReport,
    complement,
    delete_vertices,
    disjoint_union,
    extended_bipartite_double,
    h_join,
    independence_at_most,
    independence_number,
    is_connected,
    is_bipartite,
    is_isomorphic,
    iterated_line_graph,
    line_graph,
    line_graph_tower,
    structure_queries,
)
from .families import (
    FamilySpec,
    build,
    build_from_text,
    caterpillar,
    circulant,
    complete,
    complete_bipartite,
    complete_multipartite,
    cycle,
    empty_graph,
    hypercube,
    kanp,
    parse_family,
    path,
    petersen,
    turan,
)
from .eigen import (
    ExactPolynomial,
    Spectrum,
    exact_char_poly,
    gershgorin_intervals,
    real_roots,
    roots_spectrum,
    spectra_match,
    spectrum_from_values,
    sym_eigen,
)
from .spectral import (
    EnergyReport,
    RhoVerdict,
    check_rho,
    energy,
    is_hyperenergetic,
    line_spectrum_via_Q,
    matrix_of,
    q_min,
    spectrum_of,
)
from .quotient import (
    Partition,
    QuotientSet,
    coarsest_equitable_partition,
    hjoin_signless_spectrum,
    is_equitable,
    quotient_matrices,
    quotient_cospectrality_witness,
    verify_quotient_spectra_equal,
)

__all__ = [name for name in dir() if not name.startswith("_")]
