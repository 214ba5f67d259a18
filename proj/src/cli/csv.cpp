#include <array>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <string>

#include "fuzzcalc/cli.hpp"
#include "fuzzcalc/seikkala.hpp"

namespace fuzzcalc::cli {

std::string format_double(double v) {
    std::array<char, 32> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

std::vector<TrajectoryRow> trajectory_rows(const LevelFunctionField& f, std::span<const double> times,
                                           const AlphaGrid& grid) {
    const double h = grid.min_spacing();
    std::vector<TrajectoryRow> rows;
    rows.reserve(times.size() * grid.size());
    for (const double t : times) {
        for (const double alpha : grid.levels()) {
            const LevelPair y = f.value(t, alpha);
            const LevelPair dt = time_derivative(f, t, alpha);
            const auto analytic = analytic_partial_alpha(f, t, alpha);
            const LevelPair da = analytic ? *analytic : partial_alpha(f, t, alpha, h);
            TrajectoryRow row{t, alpha, y.y1, y.y2, da.y1, da.y2, dt.y1, dt.y2};
            for (const double v : {row.y1, row.y2, row.dy1_dalpha, row.dy2_dalpha, row.y1_prime, row.y2_prime}) {
                if (!std::isfinite(v)) {
                    throw NumericError("non-finite trajectory value at t = " + format_double(t) +
                                       ", alpha = " + format_double(alpha));
                }
            }
            rows.push_back(row);
        }
    }
    return rows;
}

void write_csv(std::ostream& out, std::span<const TrajectoryRow> rows) {
    out << kCsvHeader << '\n';
    for (const auto& r : rows) {
        out << format_double(r.t) << ',' << format_double(r.alpha) << ',' << format_double(r.y1) << ','
            << format_double(r.y2) << ',' << format_double(r.dy1_dalpha) << ',' << format_double(r.dy2_dalpha)
            << ',' << format_double(r.y1_prime) << ',' << format_double(r.y2_prime) << '\n';
    }
}

std::vector<TrajectoryRow> read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader) {
        throw StructuralError("trajectory CSV must start with the header " + std::string(kCsvHeader));
    }
    std::vector<TrajectoryRow> rows;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        std::array<double, 8> v{};
        const char* p = line.data();
        const char* end = line.data() + line.size();
        for (std::size_t i = 0; i < v.size(); ++i) {
            const auto res = std::from_chars(p, end, v[i]);
            const bool last = i + 1 == v.size();
            if (res.ec != std::errc() || (last ? res.ptr != end : (res.ptr == end || *res.ptr != ','))) {
                throw StructuralError("malformed trajectory CSV at line " + std::to_string(line_no));
            }
            p = res.ptr + (last ? 0 : 1);
        }
        rows.push_back({v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]});
    }
    return rows;
}

}  // namespace fuzzcalc::cli
