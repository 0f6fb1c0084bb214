#pragma once

// Result reduction and CSV serialization. Doubles are written with
// std::to_chars shortest form and read back with std::from_chars, so a
// write/read cycle reproduces every value bit for bit.

#include <charconv>
#include <istream>
#include <limits>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "netsim.hpp"

namespace maecsim {

struct CsvError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

inline double parse_double(std::string_view sv) {
    double v = 0.0;
    const auto res = std::from_chars(sv.data(), sv.data() + sv.size(), v);
    if (res.ec != std::errc{} || res.ptr != sv.data() + sv.size()) {
        throw CsvError("malformed number: '" + std::string(sv) + "'");
    }
    return v;
}

inline long parse_long(std::string_view sv) {
    long v = 0;
    const auto res = std::from_chars(sv.data(), sv.data() + sv.size(), v);
    if (res.ec != std::errc{} || res.ptr != sv.data() + sv.size()) {
        throw CsvError("malformed integer: '" + std::string(sv) + "'");
    }
    return v;
}

inline std::uint64_t parse_u64(std::string_view sv) {
    std::uint64_t v = 0;
    const auto res = std::from_chars(sv.data(), sv.data() + sv.size(), v);
    if (res.ec != std::errc{} || res.ptr != sv.data() + sv.size()) {
        throw CsvError("malformed integer: '" + std::string(sv) + "'");
    }
    return v;
}

inline std::vector<std::string_view> split_csv_line(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

// Aggregate energy view of a finished run. avg/max/min/total range over every
// sensor node's consumed energy; avg_percent is avg relative to the initial
// budget; delivered counts originations that reached a station.
struct Summary {
    double avg = 0.0;
    double max = 0.0;
    double min = 0.0;
    double total = 0.0;
    double avg_percent = 0.0;
    long delivered = 0;
    long dropped = 0;

    bool operator==(const Summary&) const = default;
};

inline Summary summarize(const EnergyLedger& ledger, double initial_energy) {
    if (ledger.size() == 0) throw std::invalid_argument("summarize: empty ledger");
    if (initial_energy <= 0.0) {
        throw std::invalid_argument("summarize: initial_energy must be positive");
    }
    Summary s;
    s.min = std::numeric_limits<double>::infinity();
    s.max = -std::numeric_limits<double>::infinity();
    long sent_total = 0;
    for (std::size_t i = 0; i < ledger.size(); ++i) {
        const double c = ledger.consumed(i);
        s.total += c;
        if (c < s.min) s.min = c;
        if (c > s.max) s.max = c;
        sent_total += ledger.sent[i];
        s.dropped += ledger.dropped[i];
    }
    s.avg = s.total / static_cast<double>(ledger.size());
    s.avg_percent = s.avg / initial_energy;
    s.delivered = sent_total - s.dropped;
    return s;
}

struct PerNodeRow {
    int node_id = 0;
    double x = 0.0;
    double y = 0.0;
    double consumed = 0.0;
    double residual = 0.0;
    double percent = 0.0;
    long sent = 0;
    long forwarded = 0;
    long dropped = 0;

    bool operator==(const PerNodeRow&) const = default;
};

inline constexpr std::string_view per_node_header =
    "node_id,x,y,consumed,residual,percent,sent,forwarded,dropped";

inline std::vector<PerNodeRow> per_node_rows(const SimulationReport& rep) {
    std::vector<PerNodeRow> rows;
    rows.reserve(rep.nodes.size());
    const double initial = rep.config.initial_energy;
    for (const Node& node : rep.nodes) {
        const std::size_t i = static_cast<std::size_t>(node.id);
        const double consumed = rep.ledger.consumed(i);
        rows.push_back({node.id, node.position.x, node.position.y, consumed, initial - consumed,
                        consumed / initial, rep.ledger.sent[i], rep.ledger.forwarded[i],
                        rep.ledger.dropped[i]});
    }
    return rows;
}

inline void write_per_node_csv(std::span<const PerNodeRow> rows, std::ostream& out) {
    out << per_node_header << '\n';
    for (const PerNodeRow& row : rows) {
        out << row.node_id << ',' << format_double(row.x) << ',' << format_double(row.y) << ','
            << format_double(row.consumed) << ',' << format_double(row.residual) << ','
            << format_double(row.percent) << ',' << row.sent << ',' << row.forwarded << ','
            << row.dropped << '\n';
    }
}

inline std::vector<PerNodeRow> read_per_node_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != per_node_header) {
        throw CsvError("per-node csv: missing or wrong header");
    }
    std::vector<PerNodeRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const std::vector<std::string_view> f = split_csv_line(line);
        if (f.size() != 9) throw CsvError("per-node csv: expected 9 columns");
        rows.push_back({static_cast<int>(parse_long(f[0])), parse_double(f[1]), parse_double(f[2]),
                        parse_double(f[3]), parse_double(f[4]), parse_double(f[5]), parse_long(f[6]),
                        parse_long(f[7]), parse_long(f[8])});
    }
    return rows;
}

struct SummaryRow {
    std::string strategy;
    int n_h = 0;
    int n_b = 0;
    std::uint64_t seed = 0;
    Summary summary;

    bool operator==(const SummaryRow&) const = default;
};

inline constexpr std::string_view summary_header =
    "strategy,n_h,n_b,seed,avg_consumed,max_consumed,min_consumed,total_consumed,avg_percent,"
    "delivered,dropped";

inline SummaryRow summary_row(const SimulationReport& rep) {
    return {strategy_name(rep.config.strategy), rep.config.n_h, rep.config.n_b, rep.config.seed,
            summarize(rep.ledger, rep.config.initial_energy)};
}

inline void write_summary_csv(std::span<const SummaryRow> rows, std::ostream& out) {
    out << summary_header << '\n';
    for (const SummaryRow& row : rows) {
        out << row.strategy << ',' << row.n_h << ',' << row.n_b << ',' << row.seed << ','
            << format_double(row.summary.avg) << ',' << format_double(row.summary.max) << ','
            << format_double(row.summary.min) << ',' << format_double(row.summary.total) << ','
            << format_double(row.summary.avg_percent) << ',' << row.summary.delivered << ','
            << row.summary.dropped << '\n';
    }
}

inline std::vector<SummaryRow> read_summary_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != summary_header) {
        throw CsvError("summary csv: missing or wrong header");
    }
    std::vector<SummaryRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const std::vector<std::string_view> f = split_csv_line(line);
        if (f.size() != 11) throw CsvError("summary csv: expected 11 columns");
        SummaryRow row;
        row.strategy = std::string(f[0]);
        row.n_h = static_cast<int>(parse_long(f[1]));
        row.n_b = static_cast<int>(parse_long(f[2]));
        row.seed = parse_u64(f[3]);
        row.summary.avg = parse_double(f[4]);
        row.summary.max = parse_double(f[5]);
        row.summary.min = parse_double(f[6]);
        row.summary.total = parse_double(f[7]);
        row.summary.avg_percent = parse_double(f[8]);
        row.summary.delivered = parse_long(f[9]);
        row.summary.dropped = parse_long(f[10]);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace maecsim
