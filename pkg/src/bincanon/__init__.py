"""Binary matrices under row/column permutation: codes, canonical forms,
semi-canonical enumeration, bipartite-graph isomorphism, and Sudoku
composition from disjoint S-permutation matrices."""

from .canonical import (
    EquivalenceClassReport,
    canonical_form,
    class_report,
    equivalence_class,
    equivalent,
    is_canonical,
    is_semi_canonical,
    monotone_transposition_chain,
    structural_profile,
)
from .enumeration import (
    CountTable,
    count_canonical,
    count_semi_canonical,
    enumerate_canonical,
    enumerate_semi_canonical,
)
from .graph import (
    BipartiteGraph,
    count_graph_classes,
    format_edge_list,
    graph_to_matrix,
    isomorphic,
    matrix_to_graph,
    parse_edge_list,
    why_not_isomorphic,
)
from .matrix import (
    BinaryMatrix,
    CapExceededError,
    ColTuple,
    FormatError,
    Permutation,
    RowTuple,
    Transposition,
    apply_col_transposition,
    apply_row_transposition,
    col_code,
    compare_lex,
    format_matrix,
    from_row_code,
    parse_matrices,
    parse_matrix,
    permute,
    row_code,
    transpose,
)
from .sperm import (
    SPermCandidate,
    SudokuMatrix,
    compose_sudoku,
    decompose_sudoku,
    disjoint,
    enumerate_s_permutations,
    find_disjoint_families,
    first_s_permutation_violation,
    format_family,
    format_sudoku,
    is_s_permutation,
    parse_family,
)

__version__ = "0.1.0"
