#include "deltacore/io.hpp"

#include <array>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string_view>

namespace deltacore {

namespace {

std::string location(const std::string& name, std::size_t lineno) {
    return name + ":" + std::to_string(lineno);
}

/// Strips CR line endings and '#' comments; true if anything remains.
bool strip_to_content(std::string& line) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
        line.pop_back();
    return line.find_first_not_of(" \t") != std::string::npos;
}

double parse_double(const std::string& token, const std::string& context) {
    try {
        std::size_t pos = 0;
        const double value = std::stod(token, &pos);
        if (pos != token.size()) throw std::invalid_argument(token);
        return value;
    } catch (const std::exception&) {
        throw io_error(context + ": bad number '" + token + "'");
    }
}

std::vector<double> parse_numbers(std::string line, const std::string& context) {
    for (char& ch : line)
        if (ch == ',') ch = ' ';
    std::vector<double> out;
    std::istringstream tokens(line);
    std::string token;
    while (tokens >> token) out.push_back(parse_double(token, context));
    return out;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    return fields;
}

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open " + path.string() + " for reading");
    return in;
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot open " + path.string() + " for writing");
    return out;
}

void check_written(const std::ostream& out, const std::filesystem::path& path) {
    if (!out) throw io_error("failed writing " + path.string());
}

}  // namespace

std::string format_double(double value) {
    std::array<char, 64> buffer;
    const auto result = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
    return std::string(buffer.data(), result.ptr);
}

PointCloud read_point_cloud(std::istream& in, const std::string& name) {
    std::vector<std::vector<double>> rows;
    bool matrix_mode = false;
    std::size_t matrix_n = 0;
    std::vector<double> matrix_values;
    bool first_content = true;

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!strip_to_content(line)) continue;
        const std::string context = location(name, lineno);
        if (first_content) {
            first_content = false;
            std::istringstream head(line);
            std::string keyword;
            head >> keyword;
            if (keyword == "matrix") {
                std::string count;
                if (!(head >> count) || (head >> keyword))
                    throw io_error(context + ": expected 'matrix n'");
                const double n = parse_double(count, context);
                if (n < 1 || n != static_cast<std::size_t>(n))
                    throw io_error(context + ": bad matrix size '" + count + "'");
                matrix_n = static_cast<std::size_t>(n);
                matrix_mode = true;
                continue;
            }
        }
        if (matrix_mode) {
            const auto values = parse_numbers(line, context);
            matrix_values.insert(matrix_values.end(), values.begin(), values.end());
        } else {
            rows.push_back(parse_numbers(line, context));
        }
    }

    try {
        if (matrix_mode) {
            if (matrix_values.size() != matrix_n * matrix_n)
                throw io_error(name + ": expected " + std::to_string(matrix_n * matrix_n) +
                               " matrix entries, got " + std::to_string(matrix_values.size()));
            std::vector<std::vector<double>> matrix(matrix_n);
            for (std::size_t i = 0; i < matrix_n; ++i)
                matrix[i].assign(matrix_values.begin() + i * matrix_n,
                                 matrix_values.begin() + (i + 1) * matrix_n);
            return PointCloud::from_distance_matrix(matrix);
        }
        if (rows.empty()) throw io_error(name + ": no points");
        return PointCloud::from_points(std::move(rows));
    } catch (const io_error&) {
        throw;
    } catch (const std::exception& e) {
        throw io_error(name + ": " + e.what());
    }
}

PointCloud read_point_cloud(const std::filesystem::path& path) {
    auto in = open_input(path);
    return read_point_cloud(in, path.string());
}

void write_point_cloud(std::ostream& out, const PointCloud& cloud,
                       const std::vector<std::string>& comments) {
    for (const std::string& comment : comments) out << "# " << comment << "\n";
    if (cloud.metric() == Metric::precomputed_matrix) {
        const index_t n = cloud.size();
        out << "matrix " << n << "\n";
        for (index_t i = 0; i < n; ++i) {
            for (index_t j = 0; j < n; ++j) {
                if (j > 0) out << ' ';
                out << format_double(cloud.distance(i, j));
            }
            out << "\n";
        }
        return;
    }
    for (index_t i = 0; i < cloud.size(); ++i) {
        const auto p = cloud.point(i);
        for (std::size_t d = 0; d < p.size(); ++d) {
            if (d > 0) out << ' ';
            out << format_double(p[d]);
        }
        out << "\n";
    }
}

void write_point_cloud(const std::filesystem::path& path, const PointCloud& cloud,
                       const std::vector<std::string>& comments) {
    auto out = open_output(path);
    write_point_cloud(out, cloud, comments);
    check_written(out, path);
}

PersistenceDiagram read_diagram_csv(std::istream& in, const std::string& name) {
    std::string line;
    std::size_t lineno = 0;
    bool header_seen = false;
    PersistenceDiagram diagram;
    while (std::getline(in, line)) {
        ++lineno;
        if (!strip_to_content(line)) continue;
        const std::string context = location(name, lineno);
        if (!header_seen) {
            if (line != "degree,birth,death")
                throw io_error(context + ": expected header 'degree,birth,death'");
            header_seen = true;
            continue;
        }
        const auto fields = split_csv(line);
        if (fields.size() != 3) throw io_error(context + ": expected 3 fields");
        const double degree = parse_double(fields[0], context);
        if (degree < 0 || degree != static_cast<std::size_t>(degree))
            throw io_error(context + ": bad degree '" + fields[0] + "'");
        const std::size_t q = static_cast<std::size_t>(degree);
        if (q >= diagram.degrees.size()) diagram.degrees.resize(q + 1);
        diagram.degrees[q].push_back(
            {parse_double(fields[1], context), parse_double(fields[2], context)});
    }
    if (!header_seen) throw io_error(name + ": missing diagram header");
    return diagram;
}

PersistenceDiagram read_diagram_csv(const std::filesystem::path& path) {
    auto in = open_input(path);
    return read_diagram_csv(in, path.string());
}

void write_diagram_csv(std::ostream& out, const PersistenceDiagram& diagram) {
    out << "degree,birth,death\n";
    for (std::size_t q = 0; q < diagram.degrees.size(); ++q)
        for (const Interval& interval : diagram.degrees[q])
            out << q << ',' << format_double(interval.birth) << ','
                << format_double(interval.death) << "\n";
}

void write_diagram_csv(const std::filesystem::path& path, const PersistenceDiagram& diagram) {
    auto out = open_output(path);
    write_diagram_csv(out, diagram);
    check_written(out, path);
}

void write_filtration(std::ostream& out, const Filtration& filtration) {
    for (std::size_t i = 0; i < filtration.size(); ++i) {
        out << format_double(filtration.value(i)) << ' ' << filtration.dimension(i);
        for (const index_t v : filtration.vertices(i)) out << ' ' << v;
        out << "\n";
    }
}

void write_reduction_table_csv(std::ostream& out, const std::vector<ReductionRow>& rows) {
    out << "scale,vr_simplices,core_simplices,reduction_pct\n";
    char pct[32];
    std::size_t total_before = 0, total_after = 0;
    for (const ReductionRow& row : rows) {
        std::snprintf(pct, sizeof pct, "%.1f", row.reduction_pct);
        out << format_double(row.scale) << ',' << row.simplices_before << ','
            << row.simplices_after << ',' << pct << "\n";
        total_before += row.simplices_before;
        total_after += row.simplices_after;
    }
    const double total_pct =
        total_before == 0
            ? 0.0
            : 100.0 * (1.0 - static_cast<double>(total_after) / static_cast<double>(total_before));
    std::snprintf(pct, sizeof pct, "%.1f", total_pct);
    out << "total," << total_before << ',' << total_after << ',' << pct << "\n";
}

std::vector<ReductionRow> read_reduction_table_csv(std::istream& in, const std::string& name) {
    std::string line;
    std::size_t lineno = 0;
    bool header_seen = false;
    std::vector<ReductionRow> rows;
    while (std::getline(in, line)) {
        ++lineno;
        if (!strip_to_content(line)) continue;
        const std::string context = location(name, lineno);
        if (!header_seen) {
            if (line != "scale,vr_simplices,core_simplices,reduction_pct")
                throw io_error(context + ": unexpected reduction-table header");
            header_seen = true;
            continue;
        }
        const auto fields = split_csv(line);
        if (fields.size() != 4) throw io_error(context + ": expected 4 fields");
        if (fields[0] == "total") continue;
        ReductionRow row;
        row.scale = parse_double(fields[0], context);
        row.simplices_before = static_cast<std::size_t>(parse_double(fields[1], context));
        row.simplices_after = static_cast<std::size_t>(parse_double(fields[2], context));
        row.reduction_pct = parse_double(fields[3], context);
        rows.push_back(row);
    }
    if (!header_seen) throw io_error(name + ": missing reduction-table header");
    return rows;
}

std::vector<double> parse_scale_list(const std::string& text) {
    const auto values = parse_numbers(text, "scale list");
    if (values.empty()) throw io_error("scale list: no values");
    return values;
}

}  // namespace deltacore
