#pragma once

// Event-driven network simulation: uniformly deployed static sensor nodes, a
// unit-disk connectivity graph, multi-hop routing toward mobile base
// stations, hotspot traffic generation, and an energy ledger that stays exact
// by recomputing per-node energy from integer counters instead of
// accumulating floats.

#include <cstdint>
#include <deque>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <variant>
#include <vector>

#include "comaec.hpp"
#include "geometry.hpp"
#include "mobility.hpp"
#include "rng.hpp"

namespace maecsim {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Node {
    int id = 0;
    Point position;

    bool operator==(const Node&) const = default;
};

struct Hotspot {
    Point center;
    double radius = 0.0;

    bool operator==(const Hotspot&) const = default;

    bool covers(Point p) const { return distance_squared(center, p) <= radius * radius; }
};

struct EnergyCosts {
    double e_tx = 1.0;    // per packet transmitted (origination or relay)
    double e_rx = 0.7;    // per packet received by a relay
    double e_ctrl = 0.01; // per protocol round, every node

    bool operator==(const EnergyCosts&) const = default;
};

// Integer counters are the source of truth; the float fields are closed forms
// over them, recomputed on every charge. consumed(i) therefore equals
// e_tx*(sent+forwarded) + e_rx*forwarded + e_ctrl*rounds_elapsed bit for bit,
// with no accumulated rounding drift.
struct EnergyLedger {
    std::vector<long> sent;
    std::vector<long> forwarded;
    std::vector<long> dropped;
    std::vector<double> traffic_energy;
    long rounds_elapsed = 0;
    double control_energy = 0.0;

    EnergyLedger() = default;
    explicit EnergyLedger(std::size_t n)
        : sent(n, 0), forwarded(n, 0), dropped(n, 0), traffic_energy(n, 0.0) {}

    std::size_t size() const { return sent.size(); }

    double consumed(std::size_t i) const { return traffic_energy[i] + control_energy; }

    bool operator==(const EnergyLedger&) const = default;
};

// path[0] is the originating source (pays e_tx); every later entry is a relay
// (pays e_tx + e_rx). The terminal base station is not a ledger entity.
inline void charge_path(EnergyLedger& ledger, std::span<const int> path, double e_tx,
                        double e_rx) {
    if (path.empty()) throw std::invalid_argument("charge_path: empty path");
    const auto recompute = [&](int i) {
        ledger.traffic_energy[static_cast<std::size_t>(i)] =
            e_tx * static_cast<double>(ledger.sent[static_cast<std::size_t>(i)] +
                                       ledger.forwarded[static_cast<std::size_t>(i)]) +
            e_rx * static_cast<double>(ledger.forwarded[static_cast<std::size_t>(i)]);
    };
    ledger.sent[static_cast<std::size_t>(path.front())] += 1;
    recompute(path.front());
    for (std::size_t k = 1; k < path.size(); ++k) {
        ledger.forwarded[static_cast<std::size_t>(path[k])] += 1;
        recompute(path[k]);
    }
}

inline void charge_round(EnergyLedger& ledger, double e_ctrl) {
    ledger.rounds_elapsed += 1;
    ledger.control_energy = e_ctrl * static_cast<double>(ledger.rounds_elapsed);
}

inline std::vector<Node> deploy_nodes(int count, const Field& field, std::uint64_t seed) {
    if (count < 1) throw std::invalid_argument("deploy_nodes: count must be >= 1");
    if (field.width <= 0.0 || field.height <= 0.0) {
        throw std::invalid_argument("deploy_nodes: field must have positive area");
    }
    Rng rng(seed);
    std::vector<Node> nodes;
    nodes.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        const double x = rng.uniform(0.0, field.width);
        const double y = rng.uniform(0.0, field.height);
        nodes.push_back({i, {x, y}});
    }
    return nodes;
}

// Adjacency lists, ids ascending. Nodes are linked iff their distance is at
// most r (inclusive); a node is never its own neighbor.
using Graph = std::vector<std::vector<int>>;

inline Graph build_graph(std::span<const Node> nodes, double r) {
    if (r <= 0.0) throw std::invalid_argument("build_graph: comm radius must be positive");
    const std::size_t n = nodes.size();
    Graph g(n);
    const double r2 = r * r;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (distance_squared(nodes[i].position, nodes[j].position) <= r2) {
                g[i].push_back(static_cast<int>(j));
                g[j].push_back(static_cast<int>(i));
            }
        }
    }
    return g;
}

// Hop distance of every node to the station: 1 for gateways (within r of the
// station, delivering directly), otherwise 1 + min over neighbors; -1 when the
// station is unreachable. Multi-source BFS seeded with all gateways.
inline std::vector<int> hops_to_station(const Graph& g, std::span<const Node> nodes,
                                        Point station, double r) {
    if (r <= 0.0) throw std::invalid_argument("hops_to_station: comm radius must be positive");
    const std::size_t n = nodes.size();
    std::vector<int> level(n, -1);
    std::deque<int> queue;
    const double r2 = r * r;
    for (std::size_t i = 0; i < n; ++i) {
        if (distance_squared(nodes[i].position, station) <= r2) {
            level[i] = 1;
            queue.push_back(static_cast<int>(i));
        }
    }
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (const int v : g[static_cast<std::size_t>(u)]) {
            if (level[static_cast<std::size_t>(v)] < 0) {
                level[static_cast<std::size_t>(v)] = level[static_cast<std::size_t>(u)] + 1;
                queue.push_back(v);
            }
        }
    }
    return level;
}

// Follows the hop field downhill from source to a gateway. At each step the
// next relay is the lowest-id neighbor one level closer. Requires
// levels[source] >= 1.
inline std::vector<int> downhill_path(const Graph& g, std::span<const int> levels, int source) {
    std::vector<int> path{source};
    int cur = source;
    while (levels[static_cast<std::size_t>(cur)] > 1) {
        int next = -1;
        for (const int v : g[static_cast<std::size_t>(cur)]) {  // neighbors ascend by id
            if (levels[static_cast<std::size_t>(v)] == levels[static_cast<std::size_t>(cur)] - 1) {
                next = v;
                break;
            }
        }
        if (next < 0) throw std::logic_error("downhill_path: hop field has no predecessor");
        path.push_back(next);
        cur = next;
    }
    return path;
}

// Multi-hop route from a node to the station, or nothing when unreachable.
// The path node count equals the node's hop distance; a gateway routes as the
// single-element path [source].
inline std::optional<std::vector<int>> route(int source, Point station, const Graph& g,
                                             std::span<const Node> nodes, double r) {
    if (source < 0 || static_cast<std::size_t>(source) >= nodes.size()) {
        throw std::invalid_argument("route: source id out of range");
    }
    const std::vector<int> levels = hops_to_station(g, nodes, station, r);
    if (levels[static_cast<std::size_t>(source)] < 0) return std::nullopt;
    return downhill_path(g, levels, source);
}

// Hotspot centers are drawn area-uniformly in the annulus between 0.15 and
// 0.45 of the shorter field side around a uniformly chosen station, rejecting
// placements whose disc leaves the field. A thousand consecutive rejections
// for one hotspot means the radius cannot fit and is reported as such.
inline std::vector<Hotspot> generate_hotspots(int n_h, const Field& field,
                                              std::span<const Point> stations, double radius,
                                              std::uint64_t seed) {
    if (n_h < 1) throw std::invalid_argument("generate_hotspots: n_h must be >= 1");
    if (radius <= 0.0) throw std::invalid_argument("generate_hotspots: radius must be positive");
    if (stations.empty()) throw std::invalid_argument("generate_hotspots: no base stations");
    Rng rng(seed);
    const double shorter = std::min(field.width, field.height);
    const double lo = 0.15 * shorter;
    const double hi = 0.45 * shorter;
    std::vector<Hotspot> out;
    out.reserve(static_cast<std::size_t>(n_h));
    for (int k = 0; k < n_h; ++k) {
        int rejections = 0;
        for (;;) {
            const Point anchor = stations[rng.uniform_index(stations.size())];
            const double rho = std::sqrt(rng.uniform(lo * lo, hi * hi));
            const double phi = rng.uniform(0.0, two_pi);
            const Point c{anchor.x + rho * std::cos(phi), anchor.y + rho * std::sin(phi)};
            if (c.x - radius >= 0.0 && c.x + radius <= field.width && c.y - radius >= 0.0 &&
                c.y + radius <= field.height) {
                out.push_back({c, radius});
                break;
            }
            if (++rejections >= 1000) {
                throw ConfigError(
                    "hotspot_radius: no in-field placement found after 1000 attempts");
            }
        }
    }
    return out;
}

enum class Strategy { Static, Random, Periphery, Maec, Comaec };

inline const char* strategy_name(Strategy s) {
    switch (s) {
        case Strategy::Static: return "static";
        case Strategy::Random: return "random";
        case Strategy::Periphery: return "periphery";
        case Strategy::Maec: return "maec";
        case Strategy::Comaec: return "comaec";
    }
    return "unknown";
}

inline std::optional<Strategy> strategy_from_name(std::string_view name) {
    if (name == "static") return Strategy::Static;
    if (name == "random") return Strategy::Random;
    if (name == "periphery") return Strategy::Periphery;
    if (name == "maec") return Strategy::Maec;
    if (name == "comaec") return Strategy::Comaec;
    return std::nullopt;
}

struct ScenarioConfig {
    Field field{750.0, 750.0};
    int node_count = 200;
    double comm_radius = 120.0;
    double initial_energy = 4.455;

    int n_h = 1;
    double hotspot_radius = 75.0;
    std::vector<Hotspot> hotspots;  // empty: generated from n_h around the stations

    int packets_per_source = 300;
    int send_rate = 1;  // packets per source per tick

    Strategy strategy = Strategy::Static;
    int n_b = 1;
    std::vector<Point> stations;  // empty: placed uniformly at random

    int discovery_interval = 25;  // ticks
    int moving_interval = 25;     // ticks
    double station_speed = std::numeric_limits<double>::infinity();  // per tick
    std::optional<double> random_step_len;    // random baseline; default comm_radius
    std::optional<double> periphery_arc_len;  // periphery baseline; default comm_radius

    EnergyCosts costs;
    std::uint64_t seed = 0;

    bool operator==(const ScenarioConfig&) const = default;
};

inline void validate(const ScenarioConfig& cfg) {
    if (cfg.field.width <= 0.0 || cfg.field.height <= 0.0) {
        throw ConfigError("field: both dimensions must be positive");
    }
    if (cfg.node_count < 1) throw ConfigError("node_count: must be >= 1");
    if (cfg.comm_radius <= 0.0) throw ConfigError("comm_radius: must be positive");
    if (cfg.initial_energy <= 0.0) throw ConfigError("initial_energy: must be positive");
    if (cfg.n_h < 1) throw ConfigError("n_h: must be >= 1");
    if (cfg.hotspot_radius <= 0.0) throw ConfigError("hotspot_radius: must be positive");
    if (!cfg.hotspots.empty()) {
        if (static_cast<int>(cfg.hotspots.size()) != cfg.n_h) {
            throw ConfigError("n_h: does not match the explicit hotspots list");
        }
        for (const Hotspot& h : cfg.hotspots) {
            if (h.radius <= 0.0) throw ConfigError("hotspots: radius must be positive");
            if (!cfg.field.contains(h.center)) {
                throw ConfigError("hotspots: center outside the field");
            }
        }
    }
    if (cfg.packets_per_source < 1) throw ConfigError("packets_per_source: must be >= 1");
    if (cfg.send_rate < 1) throw ConfigError("send_rate: must be >= 1");
    if (cfg.n_b < 1) throw ConfigError("n_b: must be >= 1");
    if (!cfg.stations.empty()) {
        if (static_cast<int>(cfg.stations.size()) != cfg.n_b) {
            throw ConfigError("n_b: does not match the explicit bs_initial_positions list");
        }
        for (const Point& p : cfg.stations) {
            if (!cfg.field.contains(p)) {
                throw ConfigError("bs_initial_positions: position outside the field");
            }
        }
    }
    if (cfg.discovery_interval < 1) throw ConfigError("discovery_interval: must be >= 1");
    if (cfg.moving_interval < 1) throw ConfigError("moving_interval: must be >= 1");
    if (!(cfg.station_speed > 0.0)) throw ConfigError("bs_speed: must be positive or unlimited");
    if (cfg.random_step_len && *cfg.random_step_len <= 0.0) {
        throw ConfigError("random_step_len: must be positive");
    }
    if (cfg.periphery_arc_len && *cfg.periphery_arc_len <= 0.0) {
        throw ConfigError("periphery_arc_len: must be positive");
    }
    if (cfg.costs.e_tx < 0.0) throw ConfigError("e_tx: must be non-negative");
    if (cfg.costs.e_rx < 0.0) throw ConfigError("e_rx: must be non-negative");
    if (cfg.costs.e_ctrl < 0.0) throw ConfigError("e_ctrl: must be non-negative");
}

// One executed movement step: during tick `tick`, station `station` was
// displaced by `dist` along `direction`. Replaying the log through displace()
// from the initial positions reproduces every sampled position exactly.
struct MotionStep {
    long tick = 0;
    int station = 0;
    double direction = 0.0;
    double dist = 0.0;

    bool operator==(const MotionStep&) const = default;
};

struct SimulationReport {
    ScenarioConfig config;
    std::vector<Node> nodes;
    std::vector<Hotspot> hotspots;
    std::vector<int> source_ids;
    std::vector<Point> station_initial;
    std::vector<std::vector<Point>> station_rounds;  // [station][round] position at round end
    std::vector<MotionStep> motion_log;
    EnergyLedger ledger;
    long ticks = 0;
    long rounds = 0;
    long generated = 0;
    long delivered = 0;
    long dropped = 0;

    bool operator==(const SimulationReport&) const = default;
};

// Runs one scenario to completion. Time advances in ticks; each tick the
// sources emit, the movement controllers react, and stations execute pending
// motion. Every discovery_interval + moving_interval ticks a protocol round
// ends: the control cost is charged and station positions are sampled. The
// run stops at the first round boundary where all source budgets are spent
// and every controller is back in Waiting (baselines have no such
// obligation), or at a generous safety cap.
//
// Determinism: the seed fully determines deployment, station placement,
// hotspot placement, and the random baseline's walk, through four independent
// derived streams. Strategy choice never consumes topology randomness, so
// different strategies at the same seed share an identical network.
inline SimulationReport run_scenario(const ScenarioConfig& cfg) {
    validate(cfg);
    const double r = cfg.comm_radius;
    const int round_len = cfg.discovery_interval + cfg.moving_interval;

    SimulationReport rep;
    rep.config = cfg;
    rep.nodes = deploy_nodes(cfg.node_count, cfg.field, mix_seed(cfg.seed, 1));
    const Graph graph = build_graph(rep.nodes, r);

    std::vector<Point> stations = cfg.stations;
    if (stations.empty()) {
        Rng rng(mix_seed(cfg.seed, 2));
        stations.reserve(static_cast<std::size_t>(cfg.n_b));
        for (int b = 0; b < cfg.n_b; ++b) {
            stations.push_back({rng.uniform(0.0, cfg.field.width),
                                rng.uniform(0.0, cfg.field.height)});
        }
    }
    const int n_b = static_cast<int>(stations.size());
    rep.station_initial = stations;
    rep.station_rounds.assign(static_cast<std::size_t>(n_b), {});

    rep.hotspots = cfg.hotspots;
    if (rep.hotspots.empty()) {
        rep.hotspots = generate_hotspots(cfg.n_h, cfg.field, stations, cfg.hotspot_radius,
                                         mix_seed(cfg.seed, 3));
    }

    std::vector<long> budget(rep.nodes.size(), 0);
    long packets_left = 0;
    for (const Node& node : rep.nodes) {
        for (const Hotspot& h : rep.hotspots) {
            if (h.covers(node.position)) {
                rep.source_ids.push_back(node.id);
                budget[static_cast<std::size_t>(node.id)] = cfg.packets_per_source;
                packets_left += cfg.packets_per_source;
                break;
            }
        }
    }

    rep.ledger = EnergyLedger(rep.nodes.size());
    EnergyLedger& ledger = rep.ledger;

    // Per-station hop fields, recomputed lazily after the station moves.
    std::vector<std::vector<int>> levels(static_cast<std::size_t>(n_b));
    std::vector<char> levels_valid(static_cast<std::size_t>(n_b), 0);
    const auto ensure_levels = [&](int b) {
        if (!levels_valid[static_cast<std::size_t>(b)]) {
            levels[static_cast<std::size_t>(b)] =
                hops_to_station(graph, rep.nodes, stations[static_cast<std::size_t>(b)], r);
            levels_valid[static_cast<std::size_t>(b)] = 1;
        }
    };

    struct Motion {
        bool active = false;
        double direction = 0.0;
        double remaining = 0.0;
    };
    std::vector<Motion> motion(static_cast<std::size_t>(n_b));
    const auto start_motion = [&](int b, const MoveCommand& cmd) {
        if (cmd.direction && cmd.distance > 0.0) {
            motion[static_cast<std::size_t>(b)] = {true, *cmd.direction, cmd.distance};
        } else {
            motion[static_cast<std::size_t>(b)] = {};
        }
    };

    const ControllerConfig ccfg{cfg.discovery_interval, cfg.moving_interval, r};
    const bool is_maec = cfg.strategy == Strategy::Maec;
    const bool is_comaec = cfg.strategy == Strategy::Comaec;
    const bool is_baseline = !is_maec && !is_comaec;

    std::vector<ControllerState> fsm(static_cast<std::size_t>(n_b));

    Phase co_phase = Phase::Waiting;
    int co_timer = 0;
    long co_round = 0;
    std::map<BaseStationId, std::vector<SourceRecord>> co_lists;

    // Baselines free-run the same discovery/moving cadence, issuing one
    // command per station at each moving-window start.
    int base_timer = cfg.discovery_interval;
    bool base_moving = false;
    Rng move_rng(mix_seed(cfg.seed, 4));
    const double random_len = cfg.random_step_len.value_or(r);
    const double arc_len = cfg.periphery_arc_len.value_or(r);

    const auto deliver = [&](int b, const SourceRecord& rec) {
        if (is_maec) {
            fsm[static_cast<std::size_t>(b)] =
                maec_step(std::move(fsm[static_cast<std::size_t>(b)]), DataIndication{rec}, ccfg,
                          stations[static_cast<std::size_t>(b)])
                    .state;
        } else if (is_comaec) {
            if (co_phase == Phase::Waiting) {
                co_phase = Phase::Discovery;
                co_timer = cfg.discovery_interval;
                co_lists.clear();
                co_lists[b].push_back(rec);
            } else if (co_phase == Phase::Discovery) {
                std::vector<SourceRecord>& lst = co_lists[b];
                bool known = false;
                for (const SourceRecord& known_rec : lst) {
                    if (known_rec.node_id == rec.node_id) {
                        known = true;
                        break;
                    }
                }
                if (!known) lst.push_back(rec);
            }
        }
    };

    const long traffic_ticks =
        (static_cast<long>(cfg.packets_per_source) + cfg.send_rate - 1) / cfg.send_rate;
    const long cap = traffic_ticks + 4L * round_len + 64;

    for (long tick = 0;; ++tick) {
        // 1. Sources emit toward the hop-nearest station (ties: lowest id).
        if (packets_left > 0) {
            for (const int sid : rep.source_ids) {
                long& bud = budget[static_cast<std::size_t>(sid)];
                for (int p = 0; p < cfg.send_rate && bud > 0; ++p) {
                    --bud;
                    --packets_left;
                    ++rep.generated;
                    int best = -1;
                    int best_level = std::numeric_limits<int>::max();
                    for (int b = 0; b < n_b; ++b) {
                        ensure_levels(b);
                        const int lvl = levels[static_cast<std::size_t>(b)][static_cast<std::size_t>(sid)];
                        if (lvl > 0 && lvl < best_level) {
                            best_level = lvl;
                            best = b;
                        }
                    }
                    if (best < 0) {
                        // No station reachable: the send attempt still costs e_tx.
                        ledger.dropped[static_cast<std::size_t>(sid)] += 1;
                        const int self[1] = {sid};
                        charge_path(ledger, self, cfg.costs.e_tx, cfg.costs.e_rx);
                        ++rep.dropped;
                    } else {
                        const std::vector<int> path =
                            downhill_path(graph, levels[static_cast<std::size_t>(best)], sid);
                        charge_path(ledger, path, cfg.costs.e_tx, cfg.costs.e_rx);
                        ++rep.delivered;
                        deliver(best, SourceRecord{sid, rep.nodes[static_cast<std::size_t>(sid)].position});
                    }
                }
            }
        }

        // 2. Movement controllers.
        if (is_maec) {
            for (int b = 0; b < n_b; ++b) {
                ControllerState& st = fsm[static_cast<std::size_t>(b)];
                if (st.phase == Phase::Waiting) continue;
                st = maec_step(std::move(st), Tick{}, ccfg, stations[static_cast<std::size_t>(b)])
                         .state;
                if (st.timer_remaining == 0) {
                    const Phase before = st.phase;
                    StepResult res = maec_step(std::move(st), TimerExpired{}, ccfg,
                                               stations[static_cast<std::size_t>(b)]);
                    st = std::move(res.state);
                    if (before == Phase::Moving) {
                        motion[static_cast<std::size_t>(b)] = {};  // leftover distance forfeited
                    }
                    if (res.command) start_motion(b, *res.command);
                }
            }
        } else if (is_comaec) {
            if (co_phase != Phase::Waiting) {
                --co_timer;
                if (co_timer == 0) {
                    if (co_phase == Phase::Discovery) {
                        bool any = false;
                        for (const auto& [b, lst] : co_lists) {
                            if (!lst.empty()) {
                                any = true;
                                break;
                            }
                        }
                        if (!any) {
                            co_phase = Phase::Waiting;
                            co_timer = 0;
                            co_lists.clear();
                        } else {
                            std::map<BaseStationId, Point> pos_map;
                            for (int b = 0; b < n_b; ++b) {
                                pos_map.emplace(b, stations[static_cast<std::size_t>(b)]);
                            }
                            const std::map<BaseStationId, MoveCommand> cmds =
                                comaec_round(co_lists, pos_map, co_round, r);
                            ++co_round;
                            co_lists.clear();
                            co_phase = Phase::Moving;
                            co_timer = cfg.moving_interval;
                            for (const auto& [b, cmd] : cmds) start_motion(b, cmd);
                        }
                    } else {  // Moving window ends
                        co_phase = Phase::Discovery;
                        co_timer = cfg.discovery_interval;
                        co_lists.clear();
                        for (Motion& m : motion) m = {};
                    }
                }
            }
        } else {
            --base_timer;
            if (base_timer == 0) {
                if (!base_moving) {
                    base_moving = true;
                    base_timer = cfg.moving_interval;
                    for (int b = 0; b < n_b; ++b) {
                        MoveCommand cmd;
                        switch (cfg.strategy) {
                            case Strategy::Static: cmd = static_step(); break;
                            case Strategy::Random: cmd = random_step(move_rng, random_len); break;
                            default:
                                cmd = periphery_step(stations[static_cast<std::size_t>(b)],
                                                     cfg.field, arc_len);
                                break;
                        }
                        start_motion(b, cmd);
                    }
                } else {
                    base_moving = false;
                    base_timer = cfg.discovery_interval;
                    for (Motion& m : motion) m = {};
                }
            }
        }

        // 3. Execute motion: unlimited speed finishes the command in one tick,
        // otherwise at most station_speed per tick.
        for (int b = 0; b < n_b; ++b) {
            Motion& m = motion[static_cast<std::size_t>(b)];
            if (!m.active) continue;
            const double step = std::isinf(cfg.station_speed)
                                    ? m.remaining
                                    : std::min(cfg.station_speed, m.remaining);
            stations[static_cast<std::size_t>(b)] =
                displace(stations[static_cast<std::size_t>(b)], m.direction, step, cfg.field);
            rep.motion_log.push_back({tick, b, m.direction, step});
            levels_valid[static_cast<std::size_t>(b)] = 0;
            m.remaining -= step;
            if (m.remaining <= 0.0) m.active = false;
        }

        // 4. Round boundary: control cost, trajectory sample, termination.
        if ((tick + 1) % round_len == 0) {
            charge_round(ledger, cfg.costs.e_ctrl);
            ++rep.rounds;
            for (int b = 0; b < n_b; ++b) {
                rep.station_rounds[static_cast<std::size_t>(b)].push_back(
                    stations[static_cast<std::size_t>(b)]);
            }
            bool quiescent = is_baseline;
            if (is_maec) {
                quiescent = true;
                for (const ControllerState& st : fsm) {
                    if (st.phase != Phase::Waiting) {
                        quiescent = false;
                        break;
                    }
                }
            } else if (is_comaec) {
                quiescent = co_phase == Phase::Waiting;
            }
            if (packets_left == 0 && quiescent) {
                rep.ticks = tick + 1;
                break;
            }
        }
        if (tick + 1 >= cap) {
            rep.ticks = tick + 1;
            break;
        }
    }
    return rep;
}

}  // namespace maecsim
