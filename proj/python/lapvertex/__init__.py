"""Vertex energies of adjacency, Laplacian and normalized Laplacian matrices."""

from ._core import (
    Graph,
    LapvertexError,
    cheeger,
    coulson_energy,
    complete,
    complete_bipartite,
    conjecture_margin,
    curvature,
    cycle,
    dual_cheeger,
    edge_energy,
    eigenvalues,
    from_spec,
    parse_edge_list,
    path,
    path_laplacian_energy,
    randic,
    random_connected,
    star,
    star_laplacian_energy,
    star_normalized_energy,
    vertex_energies,
    verify,
    wasserstein1,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
