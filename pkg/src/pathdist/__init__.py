"""Walk and simple-path length distributions between node pairs of simple graphs."""

from .complete import CompleteGraphSpec, complete_distribution, complete_path_count
from .graph import (
    DisconnectedPairError,
    Graph,
    GraphError,
    GraphFormatError,
    GraphValidationError,
    NodePair,
    builtin_graph,
    format_edge_list,
    is_connected,
    parse_edge_list,
    shortest_path_length,
)
from .paths import (
    PairStats,
    PathLengthDistribution,
    all_pairs_stats,
    count_paths_by_length,
    enumerate_paths,
)
from .stats import (
    ConvergenceReport,
    convergence_scan,
    delta_measure,
    summarize,
    truncated_expected_path_length,
)
from .walks import WalkCountSeries, truncated_expected_walk_length, walk_counts

__version__ = "0.1.0"
