#pragma once

// Shared fixtures and independent oracles used by both the unit tests and the
// acceptance suite. Everything here is deliberately written against the
// definitions, not against the library code under test.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <queue>
#include <utility>
#include <vector>

#include "maecsim/comaec.hpp"
#include "maecsim/geometry.hpp"
#include "maecsim/mobility.hpp"
#include "maecsim/netsim.hpp"
#include "maecsim/rng.hpp"

namespace support {

inline maecsim::Point polar(maecsim::Point origin, double angle, double dist) {
    return {origin.x + dist * std::cos(angle), origin.y + dist * std::sin(angle)};
}

// Records placed by (angle, distance) around a station, ids assigned in order.
inline std::vector<maecsim::SourceRecord> records_from_polar(
    maecsim::Point station, const std::vector<std::pair<double, double>>& placements) {
    std::vector<maecsim::SourceRecord> out;
    out.reserve(placements.size());
    int id = 0;
    for (const auto& [angle, dist] : placements) {
        out.push_back({id++, polar(station, angle, dist)});
    }
    return out;
}

// Seven sources in three sectors with hand-derived expectations:
//   sector 3 (center 5pi/8): hops {2, 3}        -> mean 2.5
//   sector 4 (center 7pi/8): hops {2, 3, 3, 3}  -> mean 2.75
//   sector 5 (center 9pi/8): hops {2}           -> mean 2
// Overall mean hops 18/7; count imbalance |2-0|+|4-0|+|0-1| over pairs
// (3,7),(4,8),(1,5) is 7, so the normalizer is (18/7)*7 = 18. Pair pulls:
// 5 toward sector 3, 11 toward sector 4, 2 toward sector 5, giving direction
// (5*(5pi/8) + 11*(7pi/8) + 2*(9pi/8)) / 18 = 15pi/18 = 5pi/6. Distance is
// (1+2 + 1+2+2+2 + 1) * r / 7 = 11r/7.
inline std::vector<maecsim::SourceRecord> worked_example_records(maecsim::Point station,
                                                                 double r) {
    using maecsim::sector_center_angle;
    return records_from_polar(station, {
                                           {sector_center_angle(3), 1.5 * r},
                                           {sector_center_angle(3), 2.5 * r},
                                           {sector_center_angle(4), 1.5 * r},
                                           {sector_center_angle(4), 2.5 * r},
                                           {sector_center_angle(4), 2.5 * r},
                                           {sector_center_angle(4), 2.5 * r},
                                           {sector_center_angle(5), 1.5 * r},
                                       });
}

inline double worked_example_direction() { return 5.0 * maecsim::pi / 6.0; }
inline double worked_example_distance(double r) { return 11.0 * r / 7.0; }
inline double worked_example_normalizer() { return 18.0; }

// Smallest angular difference between two angles, in [0, pi].
inline double angle_gap(double a, double b) {
    const double d = maecsim::normalize_angle(a - b);
    return std::min(d, maecsim::two_pi - d);
}

// Reference controller model: phase plus a "collected anything" flag. The
// transition table is written out directly so the production state machine is
// checked against an independent encoding of the same behavior.
struct RefController {
    maecsim::Phase phase = maecsim::Phase::Waiting;
    bool has_data = false;
};

struct RefStep {
    RefController next;
    bool emits = false;
};

inline RefStep ref_controller_step(RefController m, const maecsim::ControllerEvent& ev) {
    using maecsim::Phase;
    if (std::holds_alternative<maecsim::DataIndication>(ev)) {
        if (m.phase == Phase::Waiting) {
            m.phase = Phase::Discovery;
            m.has_data = true;
        } else if (m.phase == Phase::Discovery) {
            m.has_data = true;
        }
        return {m, false};
    }
    if (std::holds_alternative<maecsim::Tick>(ev)) {
        return {m, false};
    }
    if (m.phase == Phase::Discovery) {
        if (m.has_data) {
            m.phase = Phase::Moving;
            m.has_data = false;
            return {m, true};
        }
        m.phase = Phase::Waiting;
        return {m, false};
    }
    if (m.phase == Phase::Moving) {
        m.phase = Phase::Discovery;
        m.has_data = false;
        return {m, false};
    }
    return {m, false};
}

// Shortest-path oracle: adjacency recomputed from scratch by pairwise
// distance, hop levels by plain per-gateway BFS taking the minimum, so it
// shares no code with the production routing.
inline std::vector<int> oracle_hops(const std::vector<maecsim::Node>& nodes,
                                    maecsim::Point station, double r) {
    const std::size_t n = nodes.size();
    std::vector<std::vector<int>> adj(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (maecsim::distance(nodes[i].position, nodes[j].position) <= r) {
                adj[i].push_back(static_cast<int>(j));
            }
        }
    }
    std::vector<int> best(n, -1);
    for (std::size_t g = 0; g < n; ++g) {
        if (maecsim::distance(nodes[g].position, station) > r) continue;
        std::vector<int> level(n, -1);
        level[g] = 1;
        std::queue<int> q;
        q.push(static_cast<int>(g));
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            for (const int v : adj[static_cast<std::size_t>(u)]) {
                if (level[static_cast<std::size_t>(v)] < 0) {
                    level[static_cast<std::size_t>(v)] = level[static_cast<std::size_t>(u)] + 1;
                    q.push(v);
                }
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (level[i] > 0 && (best[i] < 0 || level[i] < best[i])) best[i] = level[i];
        }
    }
    return best;
}

// Exhaustive matching oracle: minimum total station-to-centroid distance over
// every injective group->station matching, by recursion over groups.
inline double oracle_min_assignment_cost(const std::map<maecsim::BaseStationId, maecsim::Point>& stations,
                                         const std::vector<maecsim::SourceGroup>& groups) {
    std::vector<maecsim::Point> pos;
    pos.reserve(stations.size());
    for (const auto& [id, p] : stations) pos.push_back(p);
    std::vector<bool> used(pos.size(), false);
    double best = std::numeric_limits<double>::infinity();
    const std::function<void(std::size_t, double)> rec = [&](std::size_t g, double acc) {
        if (acc >= best) return;
        if (g == groups.size()) {
            best = acc;
            return;
        }
        for (std::size_t s = 0; s < pos.size(); ++s) {
            if (used[s]) continue;
            used[s] = true;
            rec(g + 1, acc + maecsim::distance(pos[s], groups[g].centroid));
            used[s] = false;
        }
    };
    rec(0, 0.0);
    return best;
}

// Deterministic event-stream generator for the controller model check.
inline std::vector<maecsim::ControllerEvent> random_event_stream(maecsim::Rng& rng, int len,
                                                                 double r) {
    std::vector<maecsim::ControllerEvent> out;
    out.reserve(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) {
        const std::uint64_t pick = rng.uniform_index(10);
        if (pick < 5) {
            const int node_id = static_cast<int>(rng.uniform_index(6));
            const double angle = rng.uniform(0.0, maecsim::two_pi);
            const double dist = rng.uniform(0.1 * r, 4.0 * r);
            out.emplace_back(
                maecsim::DataIndication{{node_id, polar({500.0, 500.0}, angle, dist)}});
        } else if (pick < 8) {
            out.emplace_back(maecsim::Tick{});
        } else {
            out.emplace_back(maecsim::TimerExpired{});
        }
    }
    return out;
}

}  // namespace support
