#pragma once

#include <random>
#include <vector>

#include "t8n/group.hpp"

namespace t8n_test {

// Overridable with --seed=<value> on any test binary.
extern unsigned long long seed_value;

inline std::mt19937_64 make_rng() { return std::mt19937_64(seed_value); }

// Inverse-closure units of the non-identity elements: involutions alone,
// other elements paired with their inverses.
inline std::vector<std::vector<t8n::element>> inverse_pair_units(const t8n::group& g) {
    std::vector<std::vector<t8n::element>> units;
    std::vector<char> used(g.order(), 0);
    for (const t8n::element& x : g.elements()) {
        if (x == g.identity() || used[g.index_of(x)]) continue;
        const t8n::element y = g.inv(x);
        used[g.index_of(x)] = 1;
        used[g.index_of(y)] = 1;
        if (y == x)
            units.push_back({x});
        else
            units.push_back({x, y});
    }
    return units;
}

// A uniformly random nonempty symmetric identity-free connection set.
inline t8n::connection_set random_symmetric_set(const t8n::group& g, std::mt19937_64& rng) {
    const auto units = inverse_pair_units(g);
    std::vector<t8n::element> members;
    while (members.empty()) {
        members.clear();
        for (const auto& unit : units)
            if (rng() & 1) members.insert(members.end(), unit.begin(), unit.end());
    }
    return t8n::connection_set(g, std::move(members));
}

}  // namespace t8n_test
