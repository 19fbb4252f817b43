"""flagtri: flag triangulations of surfaces and 3-manifolds under the
subdivide / contract move system.

The package builds and checks flag simplicial complexes, applies the two
flagness-preserving moves (edge subdivision, admissible edge contraction),
computes exact homology and the gamma face-count invariants, constructs the
extremal families (minimal flag surfaces, the tight 3-manifold family), and
searches for locally minimal triangulations by randomised blow-up and
contract-down rounds.
"""

from .complexes import (FlagComplex, FlagResult, SimplicialComplex, as_flag,
                        as_simplicial, labeled_digest)
from .constructors import (FIXTURES, GluedComplex, HandledComplex,
                           MarkedComplex, barycentric_subdivision,
                           boundary_complex, complex_isomorphisms, cycle,
                           delta4, delta16, edge_star_connected_sum, fixture,
                           flag_connected_sum, flag_connected_sum_detailed,
                           flag_handle_addition, gamma_tight,
                           graph_bfs_distances, octahedral_colors,
                           octahedral_sphere, simplex,
                           staircase_product, staircase_product_facets,
                           star_vertices, surface_min)
from .errors import (ConnectedSumInvalid, ConstructionInvariantViolated,
                     DimensionMismatch, EdgeNotFound, FaceNotFound,
                     FlagtriError, HandleInvalid, HandleTooClose,
                     InadmissibleContraction, InvalidInput, NotManifold,
                     NotPure, ParseError, RoundAborted)
from .io import LoadedComplex, facet_lines, read_complex, write_complex
from .iso import (CanonicalForm, IsoResult, are_isomorphic, canonical_form,
                  graph_distance)
from .moves import (CONTRACT, SUBDIVIDE, AdmissibleResult, Move, MoveTrace,
                    apply_move, contract_edge, is_admissible, replay,
                    satisfies_link_condition, stellar_subdivide,
                    subdivide_edge)
from .search import (LocalMinimumCertificate, MinimaArchive, Minimum,
                     Objective, SearchConfig, SearchResult, blow_up,
                     contract_to_minimum, local_minimum_certificate,
                     run_search)
from .topology import (BettiVector, CheckResult, ConjectureReport, Field,
                       GammaNumbers, SurfaceType, betti, classify_surface,
                       conjecture_check, gamma_numbers, is_closed_3_manifold,
                       is_closed_surface, is_connected, orientable)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
