"""Triangle and K_l listing, counting and detection for sparse graphs."""
from .cliques import brute_force_k_cliques, count_k_cliques, iter_k_cliques, list_k_cliques
from .config import Budgets
from .errors import CapacityError, ConsistencyError, ContractError, MalformedInputError
from .generators import GeneratorCertificate, gen_lemma2, gen_lemma3, gen_standard
from .graph import (
    AdjMatrix,
    DegeneracyInfo,
    Graph,
    arboricity_upper_bound,
    build_adj_matrix,
    build_graph,
    degeneracy,
    edge_work_functional,
)
from .methods import (
    AuxiliaryGraph,
    build_auxiliary_graph,
    edge_count_detect_k4_in_H,
    extension_count,
    triangle_method_count,
    triangle_method_detect,
)
from .triangles import (
    WorkCounter,
    brute_force_triangles,
    count_matrix_trace,
    list_chiba_nishizeki,
    list_edge_iterator_hashed,
    list_hybrid,
    list_itai_rodeh,
)

__version__ = "0.1.0"
