#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "deltacore/filtration.hpp"
#include "deltacore/flag_graph.hpp"
#include "deltacore/persistence.hpp"
#include "deltacore/point_cloud.hpp"

namespace deltacore {

class io_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Shortest decimal string that round-trips to the same double; "inf" for
/// infinity.
std::string format_double(double value);

// Point-cloud file format: one point per line, whitespace- or comma-separated
// coordinates; '#' starts a comment line. A precomputed metric starts with a
// "matrix n" line followed by n rows of n values.
PointCloud read_point_cloud(std::istream& in, const std::string& name = "<stream>");
PointCloud read_point_cloud(const std::filesystem::path& path);
void write_point_cloud(std::ostream& out, const PointCloud& cloud,
                       const std::vector<std::string>& comments = {});
void write_point_cloud(const std::filesystem::path& path, const PointCloud& cloud,
                       const std::vector<std::string>& comments = {});

// Diagram CSV: header "degree,birth,death", death "inf" for essential classes.
PersistenceDiagram read_diagram_csv(std::istream& in, const std::string& name = "<stream>");
PersistenceDiagram read_diagram_csv(const std::filesystem::path& path);
void write_diagram_csv(std::ostream& out, const PersistenceDiagram& diagram);
void write_diagram_csv(const std::filesystem::path& path, const PersistenceDiagram& diagram);

// Filtration export: one simplex per line, "value dim v0 v1 ... vk".
void write_filtration(std::ostream& out, const Filtration& filtration);

// Reduction table CSV: "scale,vr_simplices,core_simplices,reduction_pct" with
// a trailing "total" row; reduction printed with one decimal.
void write_reduction_table_csv(std::ostream& out, const std::vector<ReductionRow>& rows);
std::vector<ReductionRow> read_reduction_table_csv(std::istream& in,
                                                   const std::string& name = "<stream>");

/// Parses a comma-separated list of reals ("0,0.1,0.2").
std::vector<double> parse_scale_list(const std::string& text);

}  // namespace deltacore
