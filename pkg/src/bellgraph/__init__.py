"""Hereditary graph classes near the Bell-number speed threshold.

Exact small-case tools: induced-subgraph search and canonical forms,
distinguishing structure, periodic-word classes ``P(w, H)``, (ell, d)-partitions
and sparsification, unavoidable structures and their bounds, k-uniform
graphs, and a capped above/below-Bell decision procedure.
"""

from .kernels import BACKEND
from .errors import (
    BagsTooSmall, BellGraphError, CapsExceeded, FactorMismatch, FormatError, InvalidClassSpec,
    InvalidPartition, InvalidVertex, NonIncreasingIndices, NotBipartite, OracleInconsistency,
    PreconditionViolated, SearchCapExceeded, SizeExceeded,
)
from .graph import (
    Graph, LoopedGraph, automorphism_count, canonical_form, canonical_graph, complement,
    complete_bipartite, complete_graph, components, contains, cycle_graph, disjoint_union,
    empty_graph, find_embeddings, first_embedding, format_graph, is_connected, is_embedding,
    is_isomorphic, parse_graph, path_graph, read_graph, star_graph, symdiff_size,
)
from .classspec import ClassSpec, parse_class_spec, parse_graph_blocks, read_class_spec
from .distinguishing import (
    DistinguishReport, distinguished_sets, in_minimal_class, infinite_distinguishing_witnesses,
    max_distinguish,
)
from .words import (
    PeriodicWord, PwhClass, antichain_family, antichain_seed, build_pwh_graph, linear_forests,
    prefix_graph, pwh_member, pwh_subclass_of, shrink_to_minimal_forbidden,
)
from .sparsify import (
    LdPartition, TransferReport, delta, find_ld_partition, is_prime, is_valid_partition,
    make_partition, pair_kind, prime_partition, sparsify, verify_embedding_transfer,
)
from .generation import labelled_count, unlabelled
from .unavoidable import (
    BoundsForM, MchWitness, StructureSpec, bound_f, bound_n, bounds_for_m, build_structure,
    check_universal, cook_refine, designated_class, find_mch, unavoidable_specs,
)
from .kuniform import KUniformTemplate, build_universal, is_k_uniform, uniform_bounds
from .decider import (
    Caps, Verdict, bell, candidates, decide_bell, nondegenerate, speed, verify_antichain,
    wqo_verdict,
)

__version__ = "0.1.0"
