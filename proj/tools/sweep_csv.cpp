#include "sweep_csv.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "shafer/analysis.hpp"
#include "shafer/format.hpp"

namespace shafer::cli {

namespace {

std::string optional_field(const std::optional<double>& v) {
    return v ? format_real(*v) : std::string{};
}

std::vector<std::string_view> split_commas(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

[[noreturn]] void bad_line(std::size_t line_no, const std::string& what) {
    throw std::runtime_error("sweep csv line " + std::to_string(line_no) + ": " + what);
}

double required_real(std::string_view field, std::size_t line_no, const char* name) {
    const auto v = parse_real(field);
    if (!v) bad_line(line_no, std::string("bad ") + name + " '" + std::string(field) + "'");
    return *v;
}

std::optional<double> optional_real(std::string_view field, std::size_t line_no, const char* name) {
    if (field.empty()) return std::nullopt;
    return required_real(field, line_no, name);
}

}  // namespace

std::vector<double> sweep_alphas(double lo, double hi, std::size_t steps) {
    std::vector<double> out;
    out.reserve(steps);
    const double last = static_cast<double>(steps - 1);
    for (std::size_t i = 0; i < steps; ++i) {
        if (i == 0) {
            out.push_back(lo);
        } else if (i + 1 == steps) {
            out.push_back(hi);
        } else {
            const double k = static_cast<double>(i);
            out.push_back((lo * (last - k) + hi * k) / last);
        }
    }
    return out;
}

SweepRecord make_sweep_record(Alpha alpha, std::size_t grid_points) {
    const BoundConstants c = endpoint_limits(alpha);
    SweepRecord row;
    row.alpha = alpha.value();
    row.regime = classify_regime(alpha);
    row.const_at_zero = c.at_zero;
    row.const_at_one = c.at_one;
    if (row.regime == Regime::UniqueMinimum) {
        const MinimumResult m = find_interior_minimum(alpha, kSweepMinimizerTol);
        row.x_min = m.x_min;
        row.f_min = m.f_min;
    } else {
        row.max_gap = gap_profile(alpha, GridSpec::uniform(grid_points)).max_gap;
    }
    return row;
}

void write_sweep_csv(std::ostream& out, std::span<const SweepRecord> rows) {
    out << kSweepHeader << '\n';
    for (const SweepRecord& r : rows) {
        out << format_real(r.alpha) << ',' << to_string(r.regime) << ','
            << format_real(r.const_at_zero) << ',' << format_real(r.const_at_one) << ','
            << optional_field(r.max_gap) << ',' << optional_field(r.x_min) << ','
            << optional_field(r.f_min) << '\n';
    }
}

std::vector<SweepRecord> read_sweep_csv(std::istream& in) {
    std::string line;
    std::size_t line_no = 1;
    if (!std::getline(in, line) || line != kSweepHeader) {
        bad_line(line_no, "missing or unexpected header");
    }
    std::vector<SweepRecord> rows;
    while (std::getline(in, line)) {
        ++line_no;
        const auto fields = split_commas(line);
        if (fields.size() != 7) bad_line(line_no, "expected 7 fields");
        SweepRecord r;
        r.alpha = required_real(fields[0], line_no, "alpha");
        const auto regime = parse_regime(fields[1]);
        if (!regime) bad_line(line_no, "unknown regime '" + std::string(fields[1]) + "'");
        r.regime = *regime;
        r.const_at_zero = required_real(fields[2], line_no, "const_at_zero");
        r.const_at_one = required_real(fields[3], line_no, "const_at_one");
        r.max_gap = optional_real(fields[4], line_no, "max_gap");
        r.x_min = optional_real(fields[5], line_no, "x_min");
        r.f_min = optional_real(fields[6], line_no, "f_min");
        const bool middle = r.regime == Regime::UniqueMinimum;
        if (r.max_gap.has_value() == middle || r.x_min.has_value() != middle ||
            r.f_min.has_value() != middle) {
            bad_line(line_no, "optional fields inconsistent with regime");
        }
        rows.push_back(r);
    }
    return rows;
}

}  // namespace shafer::cli
