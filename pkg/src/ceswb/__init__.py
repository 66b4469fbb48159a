"""Complete exceptional sequences, c-matrices and chord diagrams for the linear quiver."""
from ._bounds import DEFAULT_BOUND, BoundExceeded, search_bound
from .chords import Chord, ChordDiagram, enumerate_diagrams, is_good_labeling, labeled_to_seq, seq_to_labeled
from .cmatdiag import (
    cmatrix_of_diagram,
    diagram_of_cmatrix,
    is_cmatrix_diagram,
    mutate_diagram,
    st_witness,
)
from .exchange import CMatrix, ExchangeMatrix, c_matrix_of, exchange_graph, framed_matrix, mutate, mutate_sequence
from .ncpart import NCPartition, chain_of_labeled_diagram, labeled_diagram_of_chain
from .posets import Poset, count_linear_extensions, permutations_of_cmatrix, poset_of_diagram, realize_poset
from .reptheory import IntervalRep, ext1_dim, hom_dim, is_exceptional_sequence

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_BOUND",
    "BoundExceeded",
    "search_bound",
    "Chord",
    "ChordDiagram",
    "enumerate_diagrams",
    "is_good_labeling",
    "labeled_to_seq",
    "seq_to_labeled",
    "cmatrix_of_diagram",
    "diagram_of_cmatrix",
    "is_cmatrix_diagram",
    "mutate_diagram",
    "st_witness",
    "CMatrix",
    "ExchangeMatrix",
    "c_matrix_of",
    "exchange_graph",
    "framed_matrix",
    "mutate",
    "mutate_sequence",
    "NCPartition",
    "chain_of_labeled_diagram",
    "labeled_diagram_of_chain",
    "Poset",
    "count_linear_extensions",
    "permutations_of_cmatrix",
    "poset_of_diagram",
    "realize_poset",
    "IntervalRep",
    "ext1_dim",
    "hom_dim",
    "is_exceptional_sequence",
]
