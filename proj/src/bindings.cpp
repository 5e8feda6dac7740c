#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "deltacore/diagram_distance.hpp"
#include "deltacore/filtration.hpp"
#include "deltacore/flag_graph.hpp"
#include "deltacore/generators.hpp"
#include "deltacore/io.hpp"
#include "deltacore/persistence.hpp"
#include "deltacore/point_cloud.hpp"
#include "deltacore/subsample.hpp"

namespace py = pybind11;
using namespace deltacore;

namespace {

std::vector<Interval> to_intervals(const std::vector<std::pair<double, double>>& pairs) {
    std::vector<Interval> out;
    out.reserve(pairs.size());
    for (const auto& [b, d] : pairs) out.push_back({b, d});
    return out;
}

}  // namespace

PYBIND11_MODULE(_deltacore, m) {
    m.doc() = "delta-core subsampling of finite metric point clouds";

    py::class_<PointCloud>(m, "PointCloud")
        .def_static("from_points", &PointCloud::from_points, py::arg("points"),
                    "Cloud from a list of equal-length coordinate rows.")
        .def_static("from_distance_matrix", &PointCloud::from_distance_matrix,
                    py::arg("matrix"),
                    "Finite metric space from a symmetric distance matrix.")
        .def("__len__", &PointCloud::size)
        .def_property_readonly("dimension", &PointCloud::dimension)
        .def("distance", &PointCloud::distance, py::arg("i"), py::arg("j"))
        .def("diameter", &PointCloud::diameter)
        .def(
            "point",
            [](const PointCloud& c, index_t i) {
                auto p = c.point(i);
                return std::vector<double>(p.begin(), p.end());
            },
            py::arg("i"))
        .def(
            "subset",
            [](const PointCloud& c, const std::vector<index_t>& idx) {
                return c.subset(idx);
            },
            py::arg("indices"))
        .def("__repr__", [](const PointCloud& c) {
            std::ostringstream s;
            s << "PointCloud(n=" << c.size() << ", dim=" << c.dimension() << ")";
            return s.str();
        });

    m.def("delta_from_percentile", &delta_from_percentile, py::arg("cloud"),
          py::arg("percentile"),
          "Nearest-rank percentile of the pairwise distances.");

    py::class_<RemovalRecord>(m, "RemovalRecord")
        .def_readonly("removed", &RemovalRecord::removed)
        .def_readonly("dominator", &RemovalRecord::dominator)
        .def_readonly("sweep", &RemovalRecord::sweep)
        .def("__repr__", [](const RemovalRecord& r) {
            std::ostringstream s;
            s << "RemovalRecord(removed=" << r.removed << ", dominator=" << r.dominator
              << ", sweep=" << r.sweep << ")";
            return s.str();
        });

    py::class_<CoreResult>(m, "CoreResult")
        .def_readonly("surviving", &CoreResult::surviving)
        .def_readonly("removed", &CoreResult::removed)
        .def_readonly("sweeps", &CoreResult::sweeps);

    m.def("delta_core", &delta_core, py::arg("cloud"), py::arg("delta"),
          "Iterated removal of dominated points at scale delta.");

    py::enum_<Equivalence>(m, "Equivalence")
        .value("equivalent", Equivalence::equivalent)
        .value("not_equivalent", Equivalence::not_equivalent)
        .value("inconclusive", Equivalence::inconclusive);

    m.def("delta_equivalent", &delta_equivalent, py::arg("cloud_y"), py::arg("cloud_z"),
          py::arg("delta"), py::arg("exact_limit") = 12,
          "Whether two clouds have isomorphic delta-neighborhood graphs.");

    m.def("fps_subsample", &fps_subsample, py::arg("cloud"), py::arg("k"),
          py::arg("seed"), "Farthest-point (maxmin) subsample of k points.");

    py::class_<FlagGraph>(m, "FlagGraph")
        .def_static("from_edges", &FlagGraph::from_edges, py::arg("n"), py::arg("edges"))
        .def_static("from_closed_adjacency", &FlagGraph::from_closed_adjacency,
                    py::arg("adjacency"))
        .def_readonly("adjacency", &FlagGraph::adjacency)
        .def("__len__", &FlagGraph::size);

    m.def("threshold_graph", &threshold_graph, py::arg("cloud"), py::arg("epsilon"),
          "1-skeleton of the Vietoris-Rips complex at the given scale.");

    py::class_<FlagCoreResult>(m, "FlagCoreResult")
        .def_readonly("core", &FlagCoreResult::core)
        .def_readonly("surviving", &FlagCoreResult::surviving)
        .def_readonly("removed", &FlagCoreResult::removed)
        .def_readonly("sweeps", &FlagCoreResult::sweeps);

    m.def("flag_core", &flag_core, py::arg("graph"),
          "Core of a flag complex given by its 1-skeleton.");
    m.def("count_flag_simplices", &count_flag_simplices, py::arg("graph"),
          py::arg("max_dim"));

    py::class_<ReductionRow>(m, "ReductionRow")
        .def_readonly("scale", &ReductionRow::scale)
        .def_readonly("simplices_before", &ReductionRow::simplices_before)
        .def_readonly("simplices_after", &ReductionRow::simplices_after)
        .def_readonly("reduction_pct", &ReductionRow::reduction_pct)
        .def("__repr__", [](const ReductionRow& r) {
            std::ostringstream s;
            s << "ReductionRow(scale=" << r.scale << ", before=" << r.simplices_before
              << ", after=" << r.simplices_after << ", pct=" << r.reduction_pct << ")";
            return s.str();
        });

    m.def("core_reduction_table", &core_reduction_table, py::arg("cloud"),
          py::arg("scales"), py::arg("max_dim"),
          "Flag-complex sizes before and after the core, per scale.");

    py::class_<Filtration>(m, "Filtration")
        .def("__len__", &Filtration::size)
        .def_property_readonly("max_dim", &Filtration::max_dim)
        .def_property_readonly("threshold", &Filtration::threshold)
        .def("value", &Filtration::value, py::arg("i"))
        .def("dimension", &Filtration::dimension, py::arg("i"))
        .def(
            "vertices",
            [](const Filtration& f, std::size_t i) {
                auto v = f.vertices(i);
                return std::vector<index_t>(v.begin(), v.end());
            },
            py::arg("i"));

    m.def("vr_filtration", &vr_filtration, py::arg("cloud"), py::arg("max_dim"),
          py::arg("threshold"),
          "Vietoris-Rips filtration up to the given dimension and scale.");

    py::class_<Interval>(m, "Interval")
        .def(py::init([](double birth, double death) {
                 return Interval{birth, death};
             }),
             py::arg("birth"), py::arg("death"))
        .def_readonly("birth", &Interval::birth)
        .def_readonly("death", &Interval::death)
        .def_property_readonly("finite", &Interval::finite)
        .def_property_readonly("persistence", &Interval::persistence)
        .def("__repr__", [](const Interval& iv) {
            std::ostringstream s;
            s << "Interval(" << format_double(iv.birth) << ", " << format_double(iv.death)
              << ")";
            return s.str();
        });

    py::class_<PersistenceDiagram>(m, "PersistenceDiagram")
        .def_readonly("degrees", &PersistenceDiagram::degrees)
        .def_property_readonly("max_degree", &PersistenceDiagram::max_degree)
        .def("degree", &PersistenceDiagram::degree, py::arg("q"),
             py::return_value_policy::reference_internal)
        .def("infinite_counts", &PersistenceDiagram::infinite_counts);

    m.def("persistent_homology", &persistent_homology, py::arg("filtration"),
          py::arg("max_degree"),
          "Persistence diagram over Z/2 in degrees 0..max_degree.");
    m.def("betti_numbers", &betti_numbers, py::arg("cloud"), py::arg("scale"),
          py::arg("max_degree"));
    m.def("flag_betti", &flag_betti, py::arg("graph"), py::arg("max_degree"));

    m.def(
        "bottleneck_distance",
        [](const std::vector<Interval>& a, const std::vector<Interval>& b) {
            return bottleneck_distance(a, b);
        },
        py::arg("a"), py::arg("b"));
    m.def(
        "bottleneck_distance",
        [](const std::vector<std::pair<double, double>>& a,
           const std::vector<std::pair<double, double>>& b) {
            return bottleneck_distance(to_intervals(a), to_intervals(b));
        },
        py::arg("a"), py::arg("b"),
        "Bottleneck distance between two diagram slices given as (birth, death) pairs.");
    m.def(
        "wasserstein1_distance",
        [](const std::vector<Interval>& a, const std::vector<Interval>& b) {
            return wasserstein1_distance(a, b);
        },
        py::arg("a"), py::arg("b"));
    m.def(
        "wasserstein1_distance",
        [](const std::vector<std::pair<double, double>>& a,
           const std::vector<std::pair<double, double>>& b) {
            return wasserstein1_distance(to_intervals(a), to_intervals(b));
        },
        py::arg("a"), py::arg("b"),
        "1-Wasserstein distance between two diagram slices given as (birth, death) pairs.");

    m.def("generate_sphere", &generate_sphere, py::arg("n"), py::arg("noise"),
          py::arg("seed"));
    m.def("generate_torus", &generate_torus, py::arg("n"), py::arg("noise"),
          py::arg("seed"));
    m.def("generate_cube_heterogeneous", &generate_cube_heterogeneous, py::arg("n"),
          py::arg("noise"), py::arg("seed"));
    m.def("generate_shape", &generate_shape, py::arg("shape"), py::arg("n"),
          py::arg("noise"), py::arg("seed"));

    m.def(
        "read_point_cloud",
        [](const std::filesystem::path& path) { return read_point_cloud(path); },
        py::arg("path"));
    m.def(
        "write_point_cloud",
        [](const std::filesystem::path& path, const PointCloud& cloud,
           const std::vector<std::string>& comments) {
            write_point_cloud(path, cloud, comments);
        },
        py::arg("path"), py::arg("cloud"), py::arg("comments") = std::vector<std::string>{});
    m.def(
        "read_diagram_csv",
        [](const std::filesystem::path& path) { return read_diagram_csv(path); },
        py::arg("path"));
    m.def(
        "write_diagram_csv",
        [](const std::filesystem::path& path, const PersistenceDiagram& diagram) {
            write_diagram_csv(path, diagram);
        },
        py::arg("path"), py::arg("diagram"));

    py::register_exception<io_error>(m, "IoError", PyExc_IOError);
}
