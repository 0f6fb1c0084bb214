#pragma once

// Base-station movement decisions. The core is a pure kernel that turns a
// list of reporting sources into a move command: sources are bucketed into
// the eight sectors around the station, opposite sectors are balanced against
// each other to pick a direction, and hop counts set the distance. Around the
// kernel sits a three-phase controller (waiting / discovery / moving) driven
// by explicit events, plus the stationary, random-walk, and perimeter-patrol
// policies used as comparison baselines.

#include <array>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "geometry.hpp"
#include "rng.hpp"

namespace maecsim {

struct SourceRecord {
    int node_id = 0;
    Point location;

    bool operator==(const SourceRecord&) const = default;
};

// Per-sector view of one discovery phase. Index k holds sector k+1. Hop sums
// stay integral so downstream arithmetic rounds once at most; mean_hops is 0
// for empty sectors and mean_hops_all averages over every aggregated record.
// Records co-located with the station carry no bearing and are skipped
// entirely.
struct SectorAggregate {
    std::array<int, 8> count{};
    std::array<long, 8> hop_sum{};
    std::array<double, 8> mean_hops{};
    double mean_hops_all = 0.0;
    long hop_total = 0;
    int total = 0;
};

inline SectorAggregate aggregate_sources(std::span<const SourceRecord> records, Point station,
                                         double r) {
    SectorAggregate agg;
    for (const SourceRecord& rec : records) {
        const std::optional<SectorIndex> sec = sector_of(station, rec.location);
        if (!sec) continue;
        const HopCount h = physical_hops(distance(station, rec.location), r);
        const int k = *sec - 1;
        agg.count[k] += 1;
        agg.hop_sum[k] += h;
        agg.hop_total += h;
        agg.total += 1;
    }
    for (int k = 0; k < 8; ++k) {
        if (agg.count[k] > 0) {
            agg.mean_hops[k] = static_cast<double>(agg.hop_sum[k]) / agg.count[k];
        }
    }
    if (agg.total > 0) {
        agg.mean_hops_all = static_cast<double>(agg.hop_total) / agg.total;
    }
    return agg;
}

// Normalizer for the direction estimate: overall mean hop count times the
// total source-count imbalance across the four opposite-sector pairs. Zero
// means the counts are pairwise balanced and no direction is defined.
// Computed as one integer product over one integer divisor so integral
// results (mean 18/7 times imbalance 7, say) come out exact.
inline double direction_normalizer(const SectorAggregate& agg) {
    if (agg.total == 0) return 0.0;
    long imbalance = 0;
    for (int k = 0; k < 4; ++k) {
        imbalance += std::labs(static_cast<long>(agg.count[k]) - agg.count[k + 4]);
    }
    return static_cast<double>(agg.hop_total * imbalance) / static_cast<double>(agg.total);
}

// Weighted-mean bearing over sector pairs. Each pair i/(i+4) contributes its
// traffic-pull surplus (mean hops times count, winner minus loser) at the
// winning sector's center angle; that product is exactly the sector hop sum.
// Pairs with equal pull contribute nothing. Returns nothing when the
// normalizer vanishes: a balanced station stays put.
inline std::optional<double> compute_direction(const SectorAggregate& agg) {
    const double n = direction_normalizer(agg);
    if (n == 0.0) return std::nullopt;
    double sum = 0.0;
    for (int i = 1; i <= 4; ++i) {
        const long pull = agg.hop_sum[i - 1] - agg.hop_sum[i + 3];
        if (pull > 0) {
            sum += static_cast<double>(pull) * sector_center_angle(i);
        } else if (pull < 0) {
            sum += static_cast<double>(-pull) * sector_center_angle(i + 4);
        }
    }
    return normalize_angle(sum / n);
}

// Mean excess distance beyond the first hop ring: (1/N) * sum (h-1) * r over
// reporting sources. All inputs must be >= 1; an empty list moves nothing.
inline double compute_distance(std::span<const HopCount> hops, double r) {
    if (r <= 0.0) throw std::invalid_argument("compute_distance: comm radius must be positive");
    if (hops.empty()) return 0.0;
    long weighted = 0;
    for (const HopCount h : hops) {
        weighted += h - 1;
    }
    return static_cast<double>(weighted) * r / static_cast<double>(hops.size());
}

// direction is absent when the decision kernel found no usable imbalance; the
// command then means "hold position" and distance is 0.
struct MoveCommand {
    std::optional<double> direction;
    double distance = 0.0;

    bool operator==(const MoveCommand&) const = default;

    static MoveCommand hold() { return {std::nullopt, 0.0}; }
};

// Full decision: aggregate, pick direction, pick distance. Co-located records
// are excluded from both the sector view and the distance average, so the two
// computations always see the same population.
inline MoveCommand plan_move(std::span<const SourceRecord> records, Point station, double r) {
    const SectorAggregate agg = aggregate_sources(records, station, r);
    const std::optional<double> dir = compute_direction(agg);
    if (!dir) return MoveCommand::hold();
    std::vector<HopCount> hops;
    hops.reserve(records.size());
    for (const SourceRecord& rec : records) {
        if (!sector_of(station, rec.location)) continue;
        hops.push_back(physical_hops(distance(station, rec.location), r));
    }
    return {dir, compute_distance(hops, r)};
}

enum class Phase { Waiting, Discovery, Moving };

struct ControllerConfig {
    int discovery_interval = 1;  // ticks spent collecting source reports
    int moving_interval = 1;     // ticks granted to execute a move
    double comm_radius = 1.0;
};

// Controller state is a value; maec_step is a pure transition function. The
// invariants: Waiting has an empty list and no pending command, Moving always
// has a pending command, timer_remaining is never negative.
struct ControllerState {
    Phase phase = Phase::Waiting;
    int timer_remaining = 0;
    std::vector<SourceRecord> sources;
    std::optional<MoveCommand> pending;

    bool operator==(const ControllerState&) const = default;
};

struct DataIndication {
    SourceRecord record;
};
struct Tick {};
struct TimerExpired {};
using ControllerEvent = std::variant<DataIndication, Tick, TimerExpired>;

struct StepResult {
    ControllerState state;
    std::optional<MoveCommand> command;
};

// Transition table:
//   Waiting   + data          -> Discovery (timer = discovery_interval, list = [record])
//   Discovery + data          -> append record unless its node_id is already listed
//   Discovery + timer expired -> list empty: back to Waiting, no command
//                                otherwise: emit plan_move(list), enter Moving
//   Moving    + timer expired -> Discovery with a fresh empty list
//   Tick                      -> decrement timer toward zero
// Everything else (data while Moving, expiry while Waiting) is ignored.
inline StepResult maec_step(ControllerState state, const ControllerEvent& event,
                            const ControllerConfig& cfg, Point station) {
    if (const auto* data = std::get_if<DataIndication>(&event)) {
        if (state.phase == Phase::Waiting) {
            state.phase = Phase::Discovery;
            state.timer_remaining = cfg.discovery_interval;
            state.sources = {data->record};
        } else if (state.phase == Phase::Discovery) {
            bool known = false;
            for (const SourceRecord& rec : state.sources) {
                if (rec.node_id == data->record.node_id) {
                    known = true;
                    break;
                }
            }
            if (!known) state.sources.push_back(data->record);
        }
        return {std::move(state), std::nullopt};
    }
    if (std::holds_alternative<Tick>(event)) {
        if (state.timer_remaining > 0) --state.timer_remaining;
        return {std::move(state), std::nullopt};
    }
    // TimerExpired
    if (state.phase == Phase::Discovery) {
        if (state.sources.empty()) {
            return {ControllerState{}, std::nullopt};
        }
        const MoveCommand cmd = plan_move(state.sources, station, cfg.comm_radius);
        state.phase = Phase::Moving;
        state.timer_remaining = cfg.moving_interval;
        state.sources.clear();
        state.pending = cmd;
        return {std::move(state), cmd};
    }
    if (state.phase == Phase::Moving) {
        state.phase = Phase::Discovery;
        state.timer_remaining = cfg.discovery_interval;
        state.sources.clear();
        state.pending.reset();
        return {std::move(state), std::nullopt};
    }
    return {std::move(state), std::nullopt};
}

// Baseline policies, invoked once per movement opportunity.

inline MoveCommand static_step() { return {0.0, 0.0}; }

inline MoveCommand random_step(Rng& rng, double step_len) {
    return {rng.uniform(0.0, two_pi), step_len};
}

// Patrols the circle inscribed in the field (center of the field, radius half
// the shorter side). Off the circle the command is the radial chord onto it;
// on it, a chord subtending arc_len counter-clockwise. A station exactly at
// the center has no radial bearing and is sent east.
inline MoveCommand periphery_step(Point station, const Field& field, double arc_len) {
    const Point c = field.center();
    const double radius = 0.5 * std::min(field.width, field.height);
    const double dx = station.x - c.x;
    const double dy = station.y - c.y;
    const double d = std::hypot(dx, dy);
    const double tol = 1e-9 * std::max(radius, 1.0);
    double phi = d == 0.0 ? 0.0 : std::atan2(dy, dx);
    if (std::abs(d - radius) > tol) {
        const Point target{c.x + radius * std::cos(phi), c.y + radius * std::sin(phi)};
        const double bearing = std::atan2(target.y - station.y, target.x - station.x);
        return {normalize_angle(bearing), distance(station, target)};
    }
    const double phi2 = phi + arc_len / radius;
    const Point target{c.x + radius * std::cos(phi2), c.y + radius * std::sin(phi2)};
    if (target.x == station.x && target.y == station.y) return {normalize_angle(phi + pi / 2.0), 0.0};
    const double bearing = std::atan2(target.y - station.y, target.x - station.x);
    return {normalize_angle(bearing), distance(station, target)};
}

}  // namespace maecsim
