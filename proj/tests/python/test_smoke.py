"""Smoke tests for the python bindings.

Runs under ctest with PYTHONPATH pointing at the built extension, and under
pytest after `pip install`; the fallback import covers the in-tree case.
"""

import math
import sys
import tempfile
from pathlib import Path

try:
    import deltacore as dc
except ImportError:
    import _deltacore as dc


def test_core_quartet():
    cloud = dc.PointCloud.from_points([[0.0], [1.0], [2.0], [3.0]])
    result = dc.delta_core(cloud, 1.0)
    assert result.surviving == [2]
    assert result.sweeps == 3
    trace = [(r.removed, r.dominator, r.sweep) for r in result.removed]
    assert trace == [(0, 1, 1), (3, 2, 1), (1, 2, 2)]


def test_percentile_and_fps():
    cloud = dc.PointCloud.from_points([[0.0], [1.0], [3.0]])
    assert dc.delta_from_percentile(cloud, 50.0) == 2.0
    for seed in range(4):
        chosen = dc.fps_subsample(cloud, 2, seed)
        assert 2 in chosen and len(chosen) == 2


def test_vr_homology_circle():
    n = 12
    pts = [[math.cos(2 * math.pi * k / n), math.sin(2 * math.pi * k / n)] for k in range(n)]
    cloud = dc.PointCloud.from_points(pts)
    filtration = dc.vr_filtration(cloud, 2, 1.05)
    diagram = dc.persistent_homology(filtration, 1)
    h1 = diagram.degree(1)
    assert len(h1) == 1
    assert math.isclose(h1[0].birth, 2 * math.sin(math.pi / n), rel_tol=1e-12)
    assert math.isinf(h1[0].death)
    assert diagram.infinite_counts() == [1, 1]


def test_flag_core_and_betti():
    graph = dc.threshold_graph(
        dc.PointCloud.from_points([[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]]), 1.5
    )
    reduced = dc.flag_core(graph)
    assert reduced.surviving == [3]
    assert dc.flag_betti(graph, 1) == [1, 0]


def test_distances():
    a = [(0.0, 1.0)]
    assert dc.bottleneck_distance(a, []) == 0.5
    assert dc.wasserstein1_distance(a, []) == 0.5
    b = [dc.Interval(0.0, 1.0), dc.Interval(0.2, 0.4)]
    assert math.isclose(dc.bottleneck_distance(b, b), 0.0)


def test_diagram_io_roundtrip():
    cloud = dc.generate_sphere(40, 0.0, 7)
    diagram = dc.persistent_homology(dc.vr_filtration(cloud, 2, 0.8), 1)
    with tempfile.TemporaryDirectory() as tmp:
        path = Path(tmp) / "diagram.csv"
        dc.write_diagram_csv(path, diagram)
        back = dc.read_diagram_csv(path)
    for q in range(2):
        orig, rt = diagram.degree(q), back.degree(q)
        assert [(i.birth, i.death) for i in orig] == [(i.birth, i.death) for i in rt]


def test_generator_determinism():
    a = dc.generate_cube_heterogeneous(50, 0.01, 3)
    b = dc.generate_cube_heterogeneous(50, 0.01, 3)
    assert all(a.point(i) == b.point(i) for i in range(len(a)))
    assert len(a) == 50 and a.dimension == 3


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for test in tests:
        test()
        print(f"ok {test.__name__}")
    print(f"{len(tests)} python smoke tests passed")


if __name__ == "__main__":
    sys.exit(main())
