"""Prime-coprime graphs of finite groups."""

from .closedform import (
    FormulaResult,
    SplitClassification,
    alpha_exact_formula,
    alpha_if_split,
    classify_split,
    cyclic_lower_bound,
    i_d_size_cyclic,
)
from .groups import (
    GroupSpec,
    OrderProfile,
    cyclic,
    dicyclic,
    dihedral,
    enumerate_elements,
    explicit,
    i_d_size,
    load_orders_file,
    order_profile,
    p_set_size,
    semidihedral,
)
from .mis import MisResult, i_d_set, mis_oracle, mis_quotient, sp_lower_bound
from .pcgraph import (
    Graph,
    ThetaGraph,
    build_quotient,
    build_theta,
    find_induced,
    h_join,
    is_dominating,
    is_isomorphic,
    join,
)

__version__ = "0.1.0"
