#pragma once

// Weight vectors for configurations of n labeled points in P^d, the blow-up
// centers they select, and the toric blow-up fan over (P^{n-d-2})^d.
//
// Point indices are 1-based throughout, as in the weight vector itself.

#include "nested_fan.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace nestofan {

struct WeightVector {
    long d = 0;
    long n = 0;
    std::vector<Rational> a;

    WeightVector() = default;
    WeightVector(long d_, long n_, std::vector<Rational> a_) : d(d_), n(n_), a(std::move(a_)) {
        if (d < 1) throw InputError("weight vector requires d >= 1");
        if (n <= d + 2) throw InputError("requires n > d+2");
        if (a.size() != static_cast<std::size_t>(n))
            throw InputError("weight vector has " + std::to_string(a.size()) + " entries, expected " +
                             std::to_string(n));
    }

    /// a_i for 1-based i.
    const Rational& at(long i) const { return a.at(static_cast<std::size_t>(i - 1)); }

    friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

/// Sorted 1-based point indices I with |I| >= 2, I a proper subset of {d+1..n}.
using LocusIndex = std::vector<long>;

inline std::vector<Rational> weight_floor(long d, long n) {
    if (d < 1) throw InputError("requires d >= 1");
    if (n <= d + 2) throw InputError("requires n > d+2");
    const Rational eps(1, n - d);
    const Rational eps_prime(1, (d + 1) * (n - d));
    std::vector<Rational> w;
    for (long i = 1; i <= n; ++i) {
        if (i <= d)
            w.push_back(1 - eps_prime);
        else if (i == d + 1)
            w.push_back(1 - (n - (d + 1)) * eps + d * eps_prime);
        else
            w.push_back(eps);
    }
    return w;
}

inline bool validate_weight(const WeightVector& A) {
    const auto w = weight_floor(A.d, A.n);
    for (std::size_t i = 0; i < w.size(); ++i)
        if (A.a[i] < w[i] || A.a[i] > 1) return false;
    return true;
}

inline WeightVector lm_weights(long d, long n) {
    if (n <= d + 2) throw InputError("requires n > d+2");
    std::vector<Rational> a;
    for (long i = 1; i <= n; ++i) a.push_back(i <= d + 1 ? Rational(1) : Rational(1, n - d - 1));
    return WeightVector(d, n, std::move(a));
}

/// The indices S = {d+2, ..., n} of the light points.
inline std::vector<Label> light_labels(long d, long n) {
    std::vector<Label> s;
    for (long i = d + 2; i <= n; ++i) s.push_back(Label::simple(i));
    return s;
}

/// Index sets of the blow-up centers H_I: proper subsets I of {d+1..n},
/// |I| >= 2, with weight sum strictly above 1. Sorted lexicographically.
inline std::vector<LocusIndex> g_A(const WeightVector& A) {
    const long lo = A.d + 1;
    const long count = A.n - A.d;
    std::vector<LocusIndex> out;
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << count); ++mask) {
        if (std::popcount(mask) < 2) continue;
        LocusIndex I;
        Rational sum = 0;
        for (long k = 0; k < count; ++k)
            if (mask >> k & 1) {
                I.push_back(lo + k);
                sum += A.at(lo + k);
            }
        if (sum > 1) out.push_back(std::move(I));
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool is_toric_chamber(const WeightVector& A) {
    Rational sum = 0;
    for (long i = A.d + 2; i <= A.n; ++i) sum += A.at(i);
    return sum <= 1;
}

inline void require_toric(const WeightVector& A) {
    if (!is_toric_chamber(A)) throw InputError("weight vector is not in the toric chamber (a_{d+2}+...+a_n > 1)");
}

/// The building set on S = {d+2..n} attached to a toric-chamber weight
/// vector. `promoted` lists the proper nonempty I with a_{d+1} + sum a_I > 1,
/// singletons included: exactly the I for which H_{I u {d+1}} is a center,
/// and the sets whose d-fold copies the symmetric product subdivides.
struct ChamberBuildingSet {
    BuildingSet building_set;
    std::vector<Subset> promoted;
};

inline ChamberBuildingSet b_A(const WeightVector& A) {
    require_toric(A);
    const auto s = light_labels(A.d, A.n);
    const std::size_t m = s.size();
    std::set<Subset> members;
    std::vector<Subset> promoted;
    for (std::size_t k = 0; k < m; ++k) members.insert(Subset{k});
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << m); ++mask) {
        Subset I;
        Rational sum = A.at(A.d + 1);
        for (std::size_t k = 0; k < m; ++k)
            if (mask >> k & 1) {
                I.push_back(k);
                sum += A.at(A.d + 2 + static_cast<long>(k));
            }
        if (sum > 1) {
            members.insert(I);
            promoted.push_back(std::move(I));
        }
    }
    std::sort(promoted.begin(), promoted.end());
    return {BuildingSet(s, std::move(members), BuildingMode::over_polytope, simplex_fan(s)), std::move(promoted)};
}

/// The chamber building set with the full ground set S added, as a plain
/// (connected) building set.
inline BuildingSet lift_to_plain(const BuildingSet& b) {
    auto members = b.members();
    Subset all(b.ground().size());
    std::iota(all.begin(), all.end(), 0);
    members.insert(std::move(all));
    return BuildingSet(b.ground(), std::move(members), BuildingMode::plain);
}

/// sym^d of the chamber building set: I^{⊔d} for the promoted I only.
inline BuildingSet chamber_sym_building_set(const ChamberBuildingSet& cb, long d) {
    return symmetric_product(cb.building_set.ground(), cb.promoted, d);
}

inline std::vector<Rational> hassett_weight_A_prime(const WeightVector& A) {
    require_toric(A);
    std::vector<Rational> out{Rational(1)};
    for (long i = A.d + 1; i <= A.n; ++i) out.push_back(A.at(i));
    return out;
}

/// (P^{n-d-2})^d as a fan: the d-th power of the simplex fan on
/// {d+2..n}; copy k carries the labels (i, k).
inline Fan blowup_base_fan(long d, long n) { return power(simplex_fan(light_labels(d, n)), d); }

/// Centers in blow-up order: descending |I| (ascending center dimension),
/// ties lexicographic.
inline std::vector<LocusIndex> blowup_order(const WeightVector& A) {
    auto centers = g_A(A);
    std::stable_sort(centers.begin(), centers.end(),
                     [](const LocusIndex& x, const LocusIndex& y) { return x.size() > y.size(); });
    return centers;
}

/// The cone tau_{I \ {d+1}} of the base fan: rays (i, k), i in I \ {d+1}, k in [d].
inline Cone center_cone(const Fan& base, const WeightVector& A, const LocusIndex& I) {
    if (!std::binary_search(I.begin(), I.end(), A.d + 1))
        throw std::logic_error("toric chamber center without d+1");
    std::vector<std::size_t> rays;
    for (long i : I) {
        if (i == A.d + 1) continue;
        for (long k = 1; k <= A.d; ++k) {
            auto idx = base.ray_index(Label::pair(i, k));
            if (!idx) throw std::logic_error("base fan has no ray " + Label::pair(i, k).str());
            rays.push_back(*idx);
        }
    }
    return Cone(std::move(rays));
}

inline Fan blowup_fan(const WeightVector& A, const std::vector<LocusIndex>& order) {
    require_toric(A);
    Fan fan = blowup_base_fan(A.d, A.n);
    for (std::size_t k = 1; k < order.size(); ++k)
        if (order[k - 1].size() < order[k].size()) throw InputError("blow-up order must be by descending |I|");
    for (const auto& I : order) {
        Cone tau = center_cone(fan, A, I);
        if (!fan.has_cone(tau)) throw std::logic_error("center cone " + tau.str() + " is not in the current fan");
        fan = star_subdivision(fan, tau);
    }
    return fan;
}

inline Fan blowup_fan(const WeightVector& A) { return blowup_fan(A, blowup_order(A)); }

namespace detail {

/// A uniformly chosen fraction p/q in [lo, hi] with q <= max_den.
template <typename Rng>
Rational random_fraction(const Rational& lo, const Rational& hi, long max_den, Rng& rng) {
    std::uniform_int_distribution<long> den(1, max_den);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        const long q = den(rng);
        Rational scaled_lo = lo * q, scaled_hi = hi * q;
        Integer p_lo = boost::multiprecision::numerator(scaled_lo) / boost::multiprecision::denominator(scaled_lo);
        if (Rational(p_lo) < scaled_lo) p_lo += 1;
        Integer p_hi = boost::multiprecision::numerator(scaled_hi) / boost::multiprecision::denominator(scaled_hi);
        if (Rational(p_hi) > scaled_hi) p_hi -= 1;
        if (p_lo > p_hi) continue;
        std::uniform_int_distribution<long> num(p_lo.convert_to<long>(), p_hi.convert_to<long>());
        return Rational(num(rng), q);
    }
    throw InputError("no fraction with small denominator in the requested interval");
}

}  // namespace detail

/// A random valid weight vector in the toric chamber whose entries have
/// denominators at most `max_den`.
template <typename Rng>
WeightVector random_toric_weight(long d, long n, Rng& rng, long max_den = 24) {
    const auto w = weight_floor(d, n);
    std::vector<Rational> a(static_cast<std::size_t>(n));
    for (long i = 1; i <= d + 1; ++i) a[i - 1] = detail::random_fraction(w[i - 1], Rational(1), max_den, rng);
    // Light weights: each at least eps, total at most 1. Visit them in a
    // random order so no index is systematically favored.
    std::vector<long> light;
    for (long i = d + 2; i <= n; ++i) light.push_back(i);
    std::shuffle(light.begin(), light.end(), rng);
    const Rational eps(1, n - d);
    Rational used = 0;
    for (std::size_t k = 0; k < light.size(); ++k) {
        const Rational reserve = eps * static_cast<long>(light.size() - k - 1);
        Rational hi = 1 - used - reserve;
        if (hi > 1) hi = 1;
        a[light[k] - 1] = detail::random_fraction(eps, hi, max_den, rng);
        used += a[light[k] - 1];
    }
    return WeightVector(d, n, std::move(a));
}

}  // namespace nestofan
