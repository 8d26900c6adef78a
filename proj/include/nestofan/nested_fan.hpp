#pragma once

// Nested fans of (P-)building sets and their symmetric products.

#include "building_set.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace nestofan {

/// Non-singleton members with a nonempty face, largest first; equal sizes
/// ordered lexicographically by their sorted labels.
inline std::vector<Subset> subdivision_schedule(const BuildingSet& b) {
    std::vector<Subset> schedule;
    for (const auto& m : b.members())
        if (m.size() >= 2 && b.face_nonempty(m)) schedule.push_back(m);
    std::sort(schedule.begin(), schedule.end(), [&](const Subset& x, const Subset& y) {
        if (x.size() != y.size()) return x.size() > y.size();
        return b.sorted_labels_of(x) < b.sorted_labels_of(y);
    });
    return schedule;
}

inline bool is_valid_schedule(const std::vector<Subset>& schedule) {
    for (std::size_t k = 1; k < schedule.size(); ++k)
        if (schedule[k - 1].size() < schedule[k].size()) return false;
    return true;
}

/// Iterated stellar subdivision of `base` at the cones sigma_I in order.
/// Ray k of `base` is ground element k, so sigma_I is looked up by the
/// positions in I.
inline Fan subdivide_along(Fan base, const std::vector<Subset>& schedule) {
    for (const auto& s : schedule) {
        Cone sigma(s);
        if (!base.has_cone(sigma))
            throw std::logic_error("scheduled cone " + sigma.str() + " vanished during subdivision");
        base = star_subdivision(base, sigma);
    }
    return base;
}

inline Fan nested_fan(const BuildingSet& b, const std::vector<Subset>& schedule) {
    if (!is_valid_schedule(schedule)) throw InputError("schedule sizes must be non-increasing");
    return subdivide_along(b.base_fan(), schedule);
}

inline Fan nested_fan(const BuildingSet& b) { return nested_fan(b, subdivision_schedule(b)); }

namespace detail {

/// Half-open ranges [begin, end) of equal member size in a schedule.
inline std::vector<std::pair<std::size_t, std::size_t>> size_classes(const std::vector<Subset>& schedule) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t k = 0; k < schedule.size();) {
        std::size_t e = k;
        while (e < schedule.size() && schedule[e].size() == schedule[k].size()) ++e;
        out.emplace_back(k, e);
        k = e;
    }
    return out;
}

}  // namespace detail

/// Number of schedules compatible with the size order, saturating at `cap`.
inline std::uint64_t schedule_count(const std::vector<Subset>& schedule, std::uint64_t cap) {
    std::uint64_t total = 1;
    for (auto [b, e] : detail::size_classes(schedule))
        for (std::uint64_t k = 2; k <= e - b; ++k) {
            total *= k;
            if (total > cap) return cap + 1;
        }
    return total;
}

/// Compares nested_fan over every valid schedule when there are at most
/// `exhaustive_limit` of them, otherwise over `trials` random ones.
inline bool order_independence_check(const BuildingSet& b, std::size_t trials, std::uint64_t seed = 0,
                                     std::uint64_t exhaustive_limit = 5000) {
    const auto schedule = subdivision_schedule(b);
    const Fan reference = canonical(nested_fan(b, schedule));
    auto same = [&](const std::vector<Subset>& s) {
        Fan c = canonical(nested_fan(b, s));
        return c.rays() == reference.rays() && c.max_cones() == reference.max_cones();
    };
    const auto classes = detail::size_classes(schedule);
    if (schedule_count(schedule, exhaustive_limit) <= exhaustive_limit) {
        auto current = schedule;
        for (auto [lo, hi] : classes) std::sort(current.begin() + lo, current.begin() + hi);
        while (true) {
            if (!same(current)) return false;
            // odometer over the permutations of each size class
            std::size_t c = 0;
            for (; c < classes.size(); ++c) {
                auto [lo, hi] = classes[c];
                if (std::next_permutation(current.begin() + lo, current.begin() + hi)) break;
            }
            if (c == classes.size()) return true;
        }
    }
    std::mt19937_64 rng(seed);
    auto current = schedule;
    for (std::size_t t = 0; t < trials; ++t) {
        for (auto [lo, hi] : classes) std::shuffle(current.begin() + lo, current.begin() + hi, rng);
        if (!same(current)) return false;
    }
    return true;
}

// --------------------------------------------------------- symmetric product

namespace detail {

inline void require_sym_input(const BuildingSet& b, long d) {
    if (d < 1) throw InputError("symmetric product needs d >= 1");
    if (b.mode() != BuildingMode::plain) throw InputError("symmetric product needs a plain building set");
    if (!is_connected(b)) throw InputError("symmetric product needs a connected building set");
    for (const auto& l : b.ground())
        if (l.is_pair()) throw InputError("symmetric product needs simple ground labels");
    if (b.ground().size() < 2) throw InputError("symmetric product needs at least two ground labels");
}

}  // namespace detail

/// The P-building set on [n]^{⊔d} over the d-fold product of the simplex
/// fan: all singletons plus I^{⊔d} for each I in `factors` with a nonempty
/// face (I a proper subset). Ground position (j-1)*n + k is the pair
/// (ground[k], j), matching the ray order of power(simplex_fan, d).
inline BuildingSet symmetric_product(const std::vector<Label>& ground, const std::vector<Subset>& factors,
                                     long d) {
    const std::size_t n = ground.size();
    Fan reference = power(simplex_fan(ground), d);
    std::vector<Label> sym_ground;
    for (long j = 1; j <= d; ++j)
        for (const auto& l : ground) sym_ground.push_back(Label::pair(l.item, j));
    std::set<Subset> members;
    for (std::size_t k = 0; k < sym_ground.size(); ++k) members.insert(Subset{k});
    for (const auto& s : factors) {
        if (s.empty() || s.size() >= n) continue;
        Subset dup;
        for (long j = 0; j < d; ++j)
            for (auto k : s) dup.push_back(static_cast<std::size_t>(j) * n + k);
        std::sort(dup.begin(), dup.end());
        members.insert(std::move(dup));
    }
    return BuildingSet(std::move(sym_ground), std::move(members), BuildingMode::over_polytope,
                       std::move(reference));
}

inline BuildingSet sym_building_set(const BuildingSet& b, long d) {
    detail::require_sym_input(b, d);
    return symmetric_product(b.ground(), std::vector<Subset>(b.members().begin(), b.members().end()), d);
}

inline Fan sym_fan(const BuildingSet& b, long d) { return nested_fan(sym_building_set(b, d)); }

/// For every proper member I of B, the diagonal image (v, ..., v) of the ray
/// of Sigma(B) at sigma_I is the ray of sym_fan(B, d) at tau_I, and it is
/// present in sym_fan(B, d).
inline bool diagonal_compatibility_check(const BuildingSet& b, long d) {
    detail::require_sym_input(b, d);
    const Fan nested = nested_fan(b);
    const Fan sym = sym_fan(b, d);
    const Fan& base = b.base_fan();
    const Fan sym_base = power(base, d);
    const std::size_t n = b.ground().size();
    for (const auto& s : b.members()) {
        if (s.size() >= n) continue;
        LatticeVector v(std::vector<Integer>(base.rank(), 0));
        for (auto k : s) v = v + base.ray(k);
        v = primitive(std::move(v));
        if (!nested.ray_index(v)) return false;
        LatticeVector tau(std::vector<Integer>(sym_base.rank(), 0));
        for (long j = 0; j < d; ++j)
            for (auto k : s) tau = tau + sym_base.ray(static_cast<std::size_t>(j) * n + k);
        tau = primitive(std::move(tau));
        LatticeVector diag;
        for (long j = 0; j < d; ++j) diag.coords.insert(diag.coords.end(), v.coords.begin(), v.coords.end());
        if (!(diag == tau) || !sym.ray_index(diag)) return false;
    }
    return true;
}

}  // namespace nestofan
