"""Divisible graceful alpha-labelings of cylinder grids C_{4k} x P_m.

The package constructs 3-, 6- and 12-divisible graceful alpha-labelings
of prisms in closed form, extends them layer by layer to arbitrary grid
depth, derives cyclic decompositions of complete multipartite graphs
from any verified labeling, and carries an exhaustive search oracle that
double-checks everything by brute force on small instances.
"""

from .checking import (AlphaCert, CheckReport, DifferenceProfile, DParams,
                       InvalidParametersError, Labeling, NotBipartiteError,
                       check_alpha, check_d_graceful, d_params,
                       difference_profile, edge_differences)
from .constructions import (F1, F2, F4, FAMILIES, ConstructionError, Family,
                            LayerPattern, SeedMismatchError, construct, extend,
                            layer_pattern, prism_labeling, seed_matches)
from .decomp import (BaseBlock, Decomposition, DecompositionTarget,
                     MultipartiteSpec, base_blocks, check_difference_classes,
                     develop, proposition_table, verify_decomposition)
from .grids import (GridGraph, PrismView, SimpleGraph, as_simple, bipartition,
                    build_grid, two_coloring)
from .oracle import (SearchConfig, SearchResult, cross_validate,
                     engine_accepts, search)

__version__ = "0.1.0"

__all__ = [
    "AlphaCert", "BaseBlock", "CheckReport", "ConstructionError", "DParams",
    "Decomposition", "DecompositionTarget", "DifferenceProfile", "F1", "F2",
    "F4", "FAMILIES", "Family", "GridGraph", "InvalidParametersError",
    "Labeling", "LayerPattern", "MultipartiteSpec", "NotBipartiteError",
    "PrismView", "SearchConfig", "SearchResult", "SeedMismatchError",
    "SimpleGraph", "as_simple", "base_blocks", "bipartition", "build_grid",
    "check_alpha", "check_d_graceful", "check_difference_classes", "construct",
    "cross_validate", "d_params", "develop", "difference_profile",
    "edge_differences", "engine_accepts", "extend", "layer_pattern",
    "prism_labeling", "proposition_table", "search", "seed_matches",
    "two_coloring", "verify_decomposition", "__version__",
]
