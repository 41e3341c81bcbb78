"""Distance graphs of finite spaces under the Rosenbloom-Tsfasman metric."""

from ._core import (
    NoPreimageError,
    RTDGError,
    build_graph,
    chromatic,
    expr_stats,
    formula,
    formula_stats,
    graph_dot,
    graph_json,
    recover_sn,
    recover_zq,
    report_json_line,
    rt_distance,
    space_cardinality,
    verify_embedding,
    verify_metric_axioms,
    verify_structure,
    verify_suite_sn,
    verify_suite_zq,
)

__all__ = [
    "NoPreimageError",
    "RTDGError",
    "build_graph",
    "chromatic",
    "expr_stats",
    "formula",
    "formula_stats",
    "graph_dot",
    "graph_json",
    "recover_sn",
    "recover_zq",
    "report_json_line",
    "rt_distance",
    "space_cardinality",
    "verify_embedding",
    "verify_metric_axioms",
    "verify_structure",
    "verify_suite_sn",
    "verify_suite_zq",
]
