#pragma once

// Coordination layer for multiple base stations. Each round the stations pool
// their source lists, one of them (the rotating head) clusters the union into
// as many groups as there are stations, groups are matched to stations by
// total centroid distance, and every station then plans its own move against
// its group only.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "geometry.hpp"
#include "mobility.hpp"
#include "rng.hpp"

namespace maecsim {

using BaseStationId = int;

struct SourceGroup {
    std::vector<SourceRecord> members;  // preserves input order
    Point centroid;
};

// Round-robin over the sorted id list. The head runs the clustering step; its
// identity rotates so the bookkeeping load does too.
inline BaseStationId elect_head(long round_index, std::vector<BaseStationId> ids) {
    if (ids.empty()) throw std::invalid_argument("elect_head: no base stations");
    if (round_index < 0) throw std::invalid_argument("elect_head: negative round index");
    std::sort(ids.begin(), ids.end());
    return ids[static_cast<std::size_t>(round_index % static_cast<long>(ids.size()))];
}

// k-means with farthest-point seeding: the first center is a seeded uniform
// pick, each further center the record farthest from all chosen centers.
// Every tie (farthest pick, nearest center) resolves to the lowest index, so
// the outcome is a pure function of (records, k, seed). Iteration is capped;
// empty clusters are dropped. With k == 1 this degenerates to "everything in
// one group", independent of the seed.
inline std::vector<SourceGroup> cluster_sources(std::span<const SourceRecord> records, int k,
                                                std::uint64_t seed) {
    if (k < 1) throw std::invalid_argument("cluster_sources: k must be >= 1");
    if (records.empty()) return {};
    const std::size_t n = records.size();
    const std::size_t want = std::min<std::size_t>(static_cast<std::size_t>(k), n);

    Rng rng(seed);
    std::vector<Point> centers;
    centers.reserve(want);
    centers.push_back(records[rng.uniform_index(n)].location);
    while (centers.size() < want) {
        std::size_t far_idx = 0;
        double far_d2 = -1.0;
        for (std::size_t i = 0; i < n; ++i) {
            double near_d2 = std::numeric_limits<double>::infinity();
            for (const Point& c : centers) {
                near_d2 = std::min(near_d2, distance_squared(records[i].location, c));
            }
            if (near_d2 > far_d2) {
                far_d2 = near_d2;
                far_idx = i;
            }
        }
        centers.push_back(records[far_idx].location);
    }

    std::vector<int> assign(n, -1);
    for (int iter = 0; iter < 100; ++iter) {
        bool changed = false;
        for (std::size_t i = 0; i < n; ++i) {
            int best = 0;
            double best_d2 = std::numeric_limits<double>::infinity();
            for (std::size_t c = 0; c < centers.size(); ++c) {
                const double d2 = distance_squared(records[i].location, centers[c]);
                if (d2 < best_d2) {
                    best_d2 = d2;
                    best = static_cast<int>(c);
                }
            }
            if (assign[i] != best) {
                assign[i] = best;
                changed = true;
            }
        }
        if (!changed) break;
        for (std::size_t c = 0; c < centers.size(); ++c) {
            double sx = 0.0, sy = 0.0;
            long cnt = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (assign[i] == static_cast<int>(c)) {
                    sx += records[i].location.x;
                    sy += records[i].location.y;
                    ++cnt;
                }
            }
            if (cnt > 0) centers[c] = {sx / cnt, sy / cnt};
        }
    }

    std::vector<SourceGroup> groups;
    for (std::size_t c = 0; c < centers.size(); ++c) {
        SourceGroup g;
        double sx = 0.0, sy = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (assign[i] == static_cast<int>(c)) {
                g.members.push_back(records[i]);
                sx += records[i].location.x;
                sy += records[i].location.y;
            }
        }
        if (g.members.empty()) continue;
        g.centroid = {sx / g.members.size(), sy / g.members.size()};
        groups.push_back(std::move(g));
    }
    return groups;
}

using Assignment = std::map<BaseStationId, SourceGroup>;

// Matches groups to stations, minimizing the summed station-to-centroid
// distance over all injective matchings (exhaustive: station counts here are
// single digits). Cost ties keep the first candidate in lexicographic station
// order, i.e. ascending ids. Surplus groups are first merged pairwise by
// nearest centroids; surplus stations receive no group.
inline Assignment assign_groups(const std::map<BaseStationId, Point>& stations,
                                std::vector<SourceGroup> groups) {
    if (stations.empty()) throw std::invalid_argument("assign_groups: no base stations");

    while (groups.size() > stations.size()) {
        std::size_t best_a = 0, best_b = 1;
        double best_d2 = std::numeric_limits<double>::infinity();
        for (std::size_t a = 0; a < groups.size(); ++a) {
            for (std::size_t b = a + 1; b < groups.size(); ++b) {
                const double d2 = distance_squared(groups[a].centroid, groups[b].centroid);
                if (d2 < best_d2) {
                    best_d2 = d2;
                    best_a = a;
                    best_b = b;
                }
            }
        }
        SourceGroup& a = groups[best_a];
        const SourceGroup& b = groups[best_b];
        a.members.insert(a.members.end(), b.members.begin(), b.members.end());
        double sx = 0.0, sy = 0.0;
        for (const SourceRecord& rec : a.members) {
            sx += rec.location.x;
            sy += rec.location.y;
        }
        a.centroid = {sx / a.members.size(), sy / a.members.size()};
        groups.erase(groups.begin() + static_cast<std::ptrdiff_t>(best_b));
    }

    std::vector<BaseStationId> ids;
    ids.reserve(stations.size());
    for (const auto& [id, pos] : stations) ids.push_back(id);

    std::vector<BaseStationId> perm = ids;
    std::vector<BaseStationId> best_perm = perm;
    double best_cost = std::numeric_limits<double>::infinity();
    do {
        double cost = 0.0;
        for (std::size_t g = 0; g < groups.size(); ++g) {
            cost += distance(stations.at(perm[g]), groups[g].centroid);
        }
        if (cost < best_cost) {
            best_cost = cost;
            best_perm = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    Assignment out;
    for (std::size_t g = 0; g < groups.size(); ++g) {
        out.emplace(best_perm[g], std::move(groups[g]));
    }
    return out;
}

// One coordination round. Per-station lists are merged in ascending station
// order keeping each node's first record, the head is elected, the head
// clusters the union (seeded by the round index), groups are matched to
// stations, and each station plans its move against its assigned group.
// Stations without a group hold position. An all-empty union yields no
// commands at all.
inline std::map<BaseStationId, MoveCommand> comaec_round(
    const std::map<BaseStationId, std::vector<SourceRecord>>& lists,
    const std::map<BaseStationId, Point>& stations, long round_index, double r) {
    if (stations.empty()) throw std::invalid_argument("comaec_round: no base stations");

    std::vector<SourceRecord> merged;
    std::unordered_set<int> seen;
    for (const auto& [id, lst] : lists) {
        for (const SourceRecord& rec : lst) {
            if (seen.insert(rec.node_id).second) merged.push_back(rec);
        }
    }

    std::map<BaseStationId, MoveCommand> out;
    if (merged.empty()) return out;

    std::vector<BaseStationId> ids;
    ids.reserve(stations.size());
    for (const auto& [id, pos] : stations) ids.push_back(id);
    const BaseStationId head = elect_head(round_index, ids);

    // The head's clustering seed is a pure function of the round, so any
    // station replaying the round reproduces the same grouping.
    const std::uint64_t cluster_seed =
        mix_seed(static_cast<std::uint64_t>(round_index), static_cast<std::uint64_t>(head));
    std::vector<SourceGroup> groups =
        cluster_sources(merged, static_cast<int>(stations.size()), cluster_seed);
    Assignment assignment = assign_groups(stations, std::move(groups));

    for (const auto& [id, pos] : stations) {
        const auto it = assignment.find(id);
        if (it == assignment.end()) {
            out.emplace(id, MoveCommand::hold());
            continue;
        }
        out.emplace(id, plan_move(it->second.members, pos, r));
    }
    return out;
}

}  // namespace maecsim
