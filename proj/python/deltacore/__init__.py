"""Delta-core subsampling of finite metric point clouds.

Thin wrapper over the compiled extension; everything public lives there.
"""

from ._deltacore import (
    CoreResult,
    Equivalence,
    Filtration,
    FlagCoreResult,
    FlagGraph,
    Interval,
    IoError,
    PersistenceDiagram,
    PointCloud,
    ReductionRow,
    RemovalRecord,
    betti_numbers,
    bottleneck_distance,
    core_reduction_table,
    count_flag_simplices,
    delta_core,
    delta_equivalent,
    delta_from_percentile,
    flag_betti,
    flag_core,
    fps_subsample,
    generate_cube_heterogeneous,
    generate_shape,
    generate_sphere,
    generate_torus,
    persistent_homology,
    read_diagram_csv,
    read_point_cloud,
    threshold_graph,
    vr_filtration,
    wasserstein1_distance,
    write_diagram_csv,
    write_point_cloud,
)

__all__ = [
    "CoreResult",
    "Equivalence",
    "Filtration",
    "FlagCoreResult",
    "FlagGraph",
    "Interval",
    "IoError",
    "PersistenceDiagram",
    "PointCloud",
    "ReductionRow",
    "RemovalRecord",
    "betti_numbers",
    "bottleneck_distance",
    "core_reduction_table",
    "count_flag_simplices",
    "delta_core",
    "delta_equivalent",
    "delta_from_percentile",
    "flag_betti",
    "flag_core",
    "fps_subsample",
    "generate_cube_heterogeneous",
    "generate_shape",
    "generate_sphere",
    "generate_torus",
    "persistent_homology",
    "read_diagram_csv",
    "read_point_cloud",
    "threshold_graph",
    "vr_filtration",
    "wasserstein1_distance",
    "write_diagram_csv",
    "write_point_cloud",
]
