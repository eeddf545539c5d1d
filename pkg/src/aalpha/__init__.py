"""Spectra of A_alpha(G) = alpha*D(G) + (1-alpha)*A(G) and exhaustive checks of
its spectral properties over small graphs."""

from .closed_forms import (
    FormulaDiscrepancy,
    complete_bipartite_min_eigenvalue,
    complete_graph_spectrum,
    complete_split_spectrum,
    cycle_spectrum,
    kn_minus_e_min_eigenvalue,
    p4_min_eigenvalue,
    star_min_eigenvalue,
)
from .enumeration import GraphClass, count, enumerate_graphs
from .families import Family, FamilySpec, build_family
from .graph import (
    Graph,
    ScaleError,
    add_edge,
    canonical_form,
    circumference,
    complement,
    components,
    graph_from_edges,
    is_bipartite,
    matching_number,
    pendant_counts,
    remove_edge,
)
from .spectra import (
    NumericError,
    Spectrum,
    alpha_matrix,
    alpha_spectrum,
    eigen_residual,
    multiplicity_of,
    psd_threshold,
    quadratic_forms,
    spectrum,
)
from .theorems import Status, Verdict

__version__ = "0.1.0"
