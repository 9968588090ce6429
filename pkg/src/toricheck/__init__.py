"""toricheck: criteria, purity maps, resolutions and component groups of
labelled dual graphs of nodal curves."""

__version__ = "0.1.0"

from .graph import (  # noqa: F401
    ContractionResult,
    Edge,
    LabelledGraph,
    Vertex,
    arithmetic_genus,
    betti_one,
    contract,
    cycle_space_basis,
    incidence_matrix,
    require_valid,
    validate,
)
from .intlin import (  # noqa: F401
    IntMatrix,
    SNFResult,
    cokernel_invariants,
    kernel_basis,
    smith_normal_form,
    solve_integer,
)
from .purity import PurityReport, generization_matrix, purity_matrix, purity_report  # noqa: F401
from .criteria import (  # noqa: F401
    CRITERIA,
    CriterionVerdict,
    blocks,
    check_all,
    is_aligned,
    is_disciplined,
    is_regular_model,
    is_toric_additive,
    labels_parallel,
)
from .resolution import ResolutionOutput, resolve  # noqa: F401
from .compgroup import (  # noqa: F401
    ComponentGroup,
    component_group,
    monodromy_pairing,
    spanning_tree_order_oracle,
)
from .oracle import (  # noqa: F401
    GeneratorConfig,
    SplitMix64,
    aligned_bruteforce,
    enumerate_cycles,
    random_labelled_graph,
)
from .graphio import dumps_graph, dumps_json, parse_graph  # noqa: F401
from .errors import (  # noqa: F401
    GraphFormatError,
    GraphValidationError,
    InternalInvariantError,
    InvalidParameterError,
    NotDisciplinedError,
    SizeLimitError,
    ToricheckError,
)
