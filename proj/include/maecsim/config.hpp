#pragma once

// Plain key = value scenario files. '#' starts a comment, blank lines are
// skipped, unknown keys and malformed values are reported with the key name
// and line number. serialize_config emits a canonical form whose re-parse
// reproduces the original config exactly.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "metrics.hpp"
#include "netsim.hpp"

namespace maecsim {

namespace detail {

inline std::string_view trim(std::string_view sv) {
    while (!sv.empty() && (sv.front() == ' ' || sv.front() == '\t' || sv.front() == '\r')) {
        sv.remove_prefix(1);
    }
    while (!sv.empty() && (sv.back() == ' ' || sv.back() == '\t' || sv.back() == '\r')) {
        sv.remove_suffix(1);
    }
    return sv;
}

inline std::vector<std::string_view> split(std::string_view sv, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = sv.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(trim(sv.substr(start)));
            return out;
        }
        out.push_back(trim(sv.substr(start, pos - start)));
        start = pos + 1;
    }
}

struct LineContext {
    std::string_view key;
    int line = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw ConfigError("config line " + std::to_string(line) + ": " + what + " for key '" +
                          std::string(key) + "'");
    }
};

inline double to_double(std::string_view sv, const LineContext& ctx) {
    double v = 0.0;
    const auto res = std::from_chars(sv.data(), sv.data() + sv.size(), v);
    if (res.ec != std::errc{} || res.ptr != sv.data() + sv.size()) ctx.fail("invalid number");
    return v;
}

inline long to_long(std::string_view sv, const LineContext& ctx) {
    long v = 0;
    const auto res = std::from_chars(sv.data(), sv.data() + sv.size(), v);
    if (res.ec != std::errc{} || res.ptr != sv.data() + sv.size()) ctx.fail("invalid integer");
    return v;
}

inline std::uint64_t to_u64(std::string_view sv, const LineContext& ctx) {
    std::uint64_t v = 0;
    const auto res = std::from_chars(sv.data(), sv.data() + sv.size(), v);
    if (res.ec != std::errc{} || res.ptr != sv.data() + sv.size()) ctx.fail("invalid integer");
    return v;
}

inline Point to_point(std::string_view sv, const LineContext& ctx) {
    const std::vector<std::string_view> parts = split(sv, ',');
    if (parts.size() != 2) ctx.fail("expected 'x,y'");
    return {to_double(parts[0], ctx), to_double(parts[1], ctx)};
}

}  // namespace detail

inline ScenarioConfig parse_config(std::string_view text) {
    ScenarioConfig cfg;
    bool n_h_given = false;
    bool n_b_given = false;
    int n_h_line = 0;
    int n_b_line = 0;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                               : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        const std::size_t hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);
        line = detail::trim(line);
        if (line.empty()) continue;

        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("config line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        const std::string_view key = detail::trim(line.substr(0, eq));
        const std::string_view value = detail::trim(line.substr(eq + 1));
        const detail::LineContext ctx{key, line_no};
        if (key.empty()) ctx.fail("empty key");
        if (value.empty()) ctx.fail("empty value");

        if (key == "field") {
            const std::vector<std::string_view> parts = detail::split(value, 'x');
            if (parts.size() != 2) ctx.fail("expected 'WIDTHxHEIGHT'");
            cfg.field = {detail::to_double(parts[0], ctx), detail::to_double(parts[1], ctx)};
        } else if (key == "node_count") {
            cfg.node_count = static_cast<int>(detail::to_long(value, ctx));
        } else if (key == "comm_radius") {
            cfg.comm_radius = detail::to_double(value, ctx);
        } else if (key == "initial_energy") {
            cfg.initial_energy = detail::to_double(value, ctx);
        } else if (key == "n_h") {
            cfg.n_h = static_cast<int>(detail::to_long(value, ctx));
            n_h_given = true;
            n_h_line = line_no;
        } else if (key == "hotspot_radius") {
            cfg.hotspot_radius = detail::to_double(value, ctx);
        } else if (key == "hotspots") {
            cfg.hotspots.clear();
            for (const std::string_view item : detail::split(value, ';')) {
                const std::vector<std::string_view> parts = detail::split(item, ',');
                if (parts.size() != 3) ctx.fail("expected 'x,y,radius' triples");
                cfg.hotspots.push_back({{detail::to_double(parts[0], ctx),
                                         detail::to_double(parts[1], ctx)},
                                        detail::to_double(parts[2], ctx)});
            }
        } else if (key == "packets_per_source") {
            cfg.packets_per_source = static_cast<int>(detail::to_long(value, ctx));
        } else if (key == "send_rate") {
            cfg.send_rate = static_cast<int>(detail::to_long(value, ctx));
        } else if (key == "strategy") {
            const std::optional<Strategy> s = strategy_from_name(value);
            if (!s) ctx.fail("unknown strategy (static|random|periphery|maec|comaec)");
            cfg.strategy = *s;
        } else if (key == "n_b") {
            cfg.n_b = static_cast<int>(detail::to_long(value, ctx));
            n_b_given = true;
            n_b_line = line_no;
        } else if (key == "bs_initial_positions") {
            cfg.stations.clear();
            if (value != "random") {
                for (const std::string_view item : detail::split(value, ';')) {
                    cfg.stations.push_back(detail::to_point(item, ctx));
                }
            }
        } else if (key == "discovery_interval") {
            cfg.discovery_interval = static_cast<int>(detail::to_long(value, ctx));
        } else if (key == "moving_interval") {
            cfg.moving_interval = static_cast<int>(detail::to_long(value, ctx));
        } else if (key == "bs_speed") {
            cfg.station_speed = value == "unlimited"
                                    ? std::numeric_limits<double>::infinity()
                                    : detail::to_double(value, ctx);
        } else if (key == "random_step_len") {
            cfg.random_step_len = detail::to_double(value, ctx);
        } else if (key == "periphery_arc_len") {
            cfg.periphery_arc_len = detail::to_double(value, ctx);
        } else if (key == "e_tx") {
            cfg.costs.e_tx = detail::to_double(value, ctx);
        } else if (key == "e_rx") {
            cfg.costs.e_rx = detail::to_double(value, ctx);
        } else if (key == "e_ctrl") {
            cfg.costs.e_ctrl = detail::to_double(value, ctx);
        } else if (key == "seed") {
            cfg.seed = detail::to_u64(value, ctx);
        } else {
            throw ConfigError("config line " + std::to_string(line_no) + ": unknown key '" +
                              std::string(key) + "'");
        }
    }

    if (!cfg.hotspots.empty()) {
        if (n_h_given && cfg.n_h != static_cast<int>(cfg.hotspots.size())) {
            throw ConfigError("config line " + std::to_string(n_h_line) +
                              ": n_h does not match the hotspots list");
        }
        cfg.n_h = static_cast<int>(cfg.hotspots.size());
    }
    if (!cfg.stations.empty()) {
        if (n_b_given && cfg.n_b != static_cast<int>(cfg.stations.size())) {
            throw ConfigError("config line " + std::to_string(n_b_line) +
                              ": n_b does not match the bs_initial_positions list");
        }
        cfg.n_b = static_cast<int>(cfg.stations.size());
    }

    validate(cfg);
    return cfg;
}

inline std::string serialize_config(const ScenarioConfig& cfg) {
    std::string out;
    const auto kv = [&out](std::string_view key, const std::string& value) {
        out += key;
        out += " = ";
        out += value;
        out += '\n';
    };
    kv("field", format_double(cfg.field.width) + "x" + format_double(cfg.field.height));
    kv("node_count", std::to_string(cfg.node_count));
    kv("comm_radius", format_double(cfg.comm_radius));
    kv("initial_energy", format_double(cfg.initial_energy));
    kv("n_h", std::to_string(cfg.n_h));
    kv("hotspot_radius", format_double(cfg.hotspot_radius));
    if (!cfg.hotspots.empty()) {
        std::string items;
        for (const Hotspot& h : cfg.hotspots) {
            if (!items.empty()) items += "; ";
            items += format_double(h.center.x) + "," + format_double(h.center.y) + "," +
                     format_double(h.radius);
        }
        kv("hotspots", items);
    }
    kv("packets_per_source", std::to_string(cfg.packets_per_source));
    kv("send_rate", std::to_string(cfg.send_rate));
    kv("strategy", strategy_name(cfg.strategy));
    kv("n_b", std::to_string(cfg.n_b));
    if (cfg.stations.empty()) {
        kv("bs_initial_positions", "random");
    } else {
        std::string items;
        for (const Point& p : cfg.stations) {
            if (!items.empty()) items += "; ";
            items += format_double(p.x) + "," + format_double(p.y);
        }
        kv("bs_initial_positions", items);
    }
    kv("discovery_interval", std::to_string(cfg.discovery_interval));
    kv("moving_interval", std::to_string(cfg.moving_interval));
    kv("bs_speed", std::isinf(cfg.station_speed) ? std::string("unlimited")
                                                 : format_double(cfg.station_speed));
    if (cfg.random_step_len) kv("random_step_len", format_double(*cfg.random_step_len));
    if (cfg.periphery_arc_len) kv("periphery_arc_len", format_double(*cfg.periphery_arc_len));
    kv("e_tx", format_double(cfg.costs.e_tx));
    kv("e_rx", format_double(cfg.costs.e_rx));
    kv("e_ctrl", format_double(cfg.costs.e_ctrl));
    kv("seed", std::to_string(cfg.seed));
    return out;
}

}  // namespace maecsim
