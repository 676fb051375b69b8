"""Clique complexes of finite graphs: signed coboundary matrices, certified
higher-order Laplacian spectra, and exact first cohomology."""

__version__ = "0.1.0"

from .graphs import (Graph, Graph6Error, PointLineGeometry, SrgParams,
                     complement, complete_graph, cycle_graph, generate,
                     gq_w3_geometry, hamming_graph, kneser_graph,
                     parse_graph6, paley_graph, path_graph, read_graph6_file,
                     srg_parameters, symplectic_graph, triangular_graph,
                     write_graph6)
from .complexes import (CliqueComplex, IntMatrix, boundary, clique_complex,
                        coboundary, epsilon, face_degree, face_sign)
from .spectra import (CharPolyFingerprint, SpectrumSummary, certified_rank,
                      certified_spectrum, charpoly_mod_p,
                      cospectral_fingerprint, down_laplacian, numeric_spectrum,
                      nullity_mod_p, rank_mod_p, total_laplacian, up_laplacian)
from .closed_forms import (EdgeVector, PredictedSpectrum, cut_vector,
                           n_eigenvector, n_plus_two_eigenvector,
                           predict_complete_complex, predict_hamming,
                           predict_quadrangle, predict_triangular_down,
                           predict_triangular_edges, predict_triangular_triangles,
                           predict_triangular_up, predict_unique_top_faces,
                           two_eigenvector)
from .cohomology import (ConferenceVerdict, CycleCapExceeded, H1Report,
                         OrderedCycle, check_conference_hypothesis,
                         check_four_consecutive, check_meshulam,
                         check_srg_inequality, cohomology_report, cycle_cut,
                         cycle_vector, h1_dimension, induced_cycles,
                         neighborhood_connected, rotation_relation,
                         support_reduce, wheel4_decompose)

__all__ = [name for name in dir() if not name.startswith("_")]
