// io.hpp — CSV serialization: baths, trajectories, influence scans and sweep
// records. Floating-point fields carry 17 significant digits so a round trip
// reproduces doubles exactly. LF line endings throughout.

#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bathdisc/analytic.hpp"
#include "bathdisc/bath.hpp"
#include "bathdisc/discretize.hpp"
#include "bathdisc/sweep.hpp"

namespace bathdisc {

inline std::string format_g17(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

namespace detail {

inline std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open for writing: " + path.string());
    return out;
}

inline std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open for reading: " + path.string());
    return in;
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream stream(line);
    while (std::getline(stream, field, ',')) fields.push_back(field);
    return fields;
}

inline double parse_double(const std::string& text, const std::string& context) {
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument(context + ": not a number: '" + text + "'");
    }
    if (used != text.size())
        throw std::invalid_argument(context + ": trailing characters in '" + text + "'");
    return value;
}

} // namespace detail

inline void write_bath_csv(const std::filesystem::path& path, const DiscreteBath& bath) {
    auto out = detail::open_output(path);
    out << "omega,coupling\n";
    for (const Mode& mode : bath.modes())
        out << format_g17(mode.omega) << ',' << format_g17(mode.coupling) << '\n';
}

inline DiscreteBath read_bath_csv(const std::filesystem::path& path) {
    auto in = detail::open_input(path);
    std::string line;
    if (!std::getline(in, line) || line != "omega,coupling")
        throw std::invalid_argument("bath csv: expected header 'omega,coupling' in " +
                                    path.string());
    std::vector<Mode> modes;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto fields = detail::split_csv_line(line);
        if (fields.size() != 2) throw std::invalid_argument("bath csv: expected two fields");
        modes.push_back({detail::parse_double(fields[0], "bath csv omega"),
                         detail::parse_double(fields[1], "bath csv coupling")});
    }
    return DiscreteBath(std::move(modes));
}

inline void write_trajectory_csv(const std::filesystem::path& path, const Trajectory& traj) {
    auto out = detail::open_output(path);
    out << "t,n\n";
    for (std::size_t j = 0; j < traj.grid.n_samples(); ++j)
        out << format_g17(traj.grid.time_at(j)) << ',' << format_g17(traj.values[j]) << '\n';
}

inline void write_influence_csv(const std::filesystem::path& path,
                                std::span<const InfluencePoint> points) {
    auto out = detail::open_output(path);
    out << "omega,influence\n";
    for (const auto& point : points)
        out << format_g17(point.omega) << ',' << format_g17(point.influence) << '\n';
}

inline void write_sweep_csv(const std::filesystem::path& path,
                            std::span<const SweepRecord> records) {
    auto out = detail::open_output(path);
    out << "scheme,n,epsilon\n";
    for (const auto& record : records)
        out << scheme_name(record.scheme) << ',' << record.mode_count << ','
            << format_g17(record.epsilon) << '\n';
}

inline std::vector<SweepRecord> read_sweep_csv(const std::filesystem::path& path) {
    auto in = detail::open_input(path);
    std::string line;
    if (!std::getline(in, line) || line != "scheme,n,epsilon")
        throw std::invalid_argument("sweep csv: expected header 'scheme,n,epsilon' in " +
                                    path.string());
    std::vector<SweepRecord> records;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto fields = detail::split_csv_line(line);
        if (fields.size() != 3) throw std::invalid_argument("sweep csv: expected three fields");
        SweepRecord record;
        record.scheme = scheme_kind_from_name(fields[0]);
        record.mode_count =
            static_cast<std::size_t>(detail::parse_double(fields[1], "sweep csv n"));
        record.epsilon = detail::parse_double(fields[2], "sweep csv epsilon");
        records.push_back(record);
    }
    return records;
}

inline void write_influence_table_csv(const std::filesystem::path& path,
                                      std::span<const InfluenceTableRow> rows) {
    auto out = detail::open_output(path);
    out << "t_max,omega,influence\n";
    for (const auto& row : rows)
        out << format_g17(row.t_max) << ',' << format_g17(row.omega) << ','
            << format_g17(row.influence) << '\n';
}

} // namespace bathdisc
