"""Strong structural controllability of zero/nonzero/arbitrary pattern systems."""

from .analysis import (
    AnalysisReport,
    FormThreeResult,
    UncontrollabilityWitness,
    form_three,
    is_strongly_controllable,
    strong_controllability,
    strong_stabilizability,
    uncontrollability_witness,
    weak_controllability,
)
from .errors import (
    BadTokenError,
    DimensionMismatchError,
    EmptyInputError,
    NotSquareError,
    RaggedRowsError,
    RowMismatchError,
    SelfLoopForbiddenError,
    SsctrlError,
    TooManyFreeEntriesError,
    UnknownNodeError,
    WitnessUnavailableError,
    ZeroVectorError,
)
from .coloring import (
    ColorTrace,
    Digraph,
    PatternGraph,
    RankWitness,
    build_graph,
    colorability,
    export_dot,
    kernel_backend,
    loopy_zero_forcing,
    ordinary_zero_forcing,
    parse_digraph,
    rank_deficiency_witness,
    replay_trace,
)
from .networks import (
    LeaderNetwork,
    mzc_controllability,
    parse_network,
    pattern_from_network_qdiag,
    pattern_from_network_star,
    td_controllability,
)
from .oracle import (
    OracleVerdict,
    exhaustive_small,
    free_entry_count,
    hautus_check,
    kalman_controllable,
    mix64,
    monte_carlo_ssc,
    rank_exact,
)
from .patterns import (
    QMARK,
    STAR,
    ZERO,
    PatternMatrix,
    RationalMatrix,
    StructuredSystem,
    compact_rows,
    concat_horizontal,
    is_member,
    modified_diagonal,
    parse_pattern,
    parse_system,
    render_pattern,
    sample_instance,
    weak_relaxation,
)

__version__ = "0.1.0"
