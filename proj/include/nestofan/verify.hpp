#pragma once

// Verification harness: the blow-up / symmetric-product identities, the
// orbit-closure join lemma in combinatorial form, and the Hassett weight
// checks, each producing a report of named exact checks.

#include "minkowski_oracle.hpp"
#include "moduli.hpp"

#include <json.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace nestofan {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
    // Reported checks record a computed fact without deciding the outcome.
    bool gating = true;
};

struct Report {
    nlohmann::json instance = nlohmann::json::object();
    std::vector<Check> checks;

    bool ok() const {
        return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass || !c.gating; });
    }
    void add(std::string name, bool pass, std::string detail = "", bool gating = true) {
        checks.push_back({std::move(name), pass, std::move(detail), gating});
    }
};

namespace detail {

inline nlohmann::json counts_json(const std::vector<std::size_t>& v) {
    nlohmann::json out = nlohmann::json::array();
    for (auto x : v) out.push_back(x);
    return out;
}

inline std::string rationals_str(const std::vector<Rational>& v) {
    std::string out = "(";
    for (std::size_t k = 0; k < v.size(); ++k) {
        Rational q = v[k];
        out += (k ? "," : "") + (boost::multiprecision::denominator(q) == 1
                                     ? boost::multiprecision::numerator(q).str()
                                     : format_rational(q));
    }
    return out + ")";
}

inline nlohmann::json weight_instance(const WeightVector& A) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& x : A.a) a.push_back(format_rational(x));
    return {{"d", A.d}, {"n", A.n}, {"a", a}};
}

inline Fan complete_symmetric_fan(long d, long n) { return sym_fan(complete_building_set(d + 2, n), d); }

/// Rays the blow-up adds: one per center whose cone has dimension >= 2
/// (for d = 1 the centers H_{d+1,i} are divisors and change nothing).
inline std::size_t expected_ray_count(const WeightVector& A, const std::vector<LocusIndex>& centers) {
    std::size_t count = static_cast<std::size_t>(A.d * (A.n - A.d - 1));
    for (const auto& I : centers)
        if (A.d * static_cast<long>(I.size() - 1) >= 2) ++count;
    return count;
}

}  // namespace detail

// ------------------------------------------------------------ first theorem

inline Report verify_thm1_report(long d, long n) {
    Report r;
    const WeightVector A = lm_weights(d, n);
    const Fan blowup = blowup_fan(A);
    const Fan sym = detail::complete_symmetric_fan(d, n);
    r.instance = {{"d", d}, {"n", n}, {"rank", blowup.rank()}, {"rays", blowup.rays().size()},
                  {"max_cones", blowup.max_cones().size()}, {"f_vector", detail::counts_json(f_vector(blowup))}};
    const bool equal = fan_equal(blowup, sym);
    r.add("blowup_equals_symmetric_product", equal,
          "blow-up fan has " + std::to_string(blowup.rays().size()) + " rays / " +
              std::to_string(blowup.max_cones().size()) + " cones, symmetric product " +
              std::to_string(sym.rays().size()) + " / " + std::to_string(sym.max_cones().size()));
    // g_A of the Losev-Manin weights is {I u {d+1} : I a proper nonempty subset of S}.
    std::vector<LocusIndex> expected;
    const long m = n - d - 1;
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << m); ++mask) {
        LocusIndex I{d + 1};
        for (long k = 0; k < m; ++k)
            if (mask >> k & 1) I.push_back(d + 2 + k);
        expected.push_back(std::move(I));
    }
    std::sort(expected.begin(), expected.end());
    const auto centers = g_A(A);
    r.add("centers_are_all_proper_subsets", centers == expected, std::to_string(centers.size()) + " centers");
    r.add("ray_count", blowup.rays().size() == detail::expected_ray_count(A, centers),
          std::to_string(blowup.rays().size()) + " rays");
    return r;
}

inline bool verify_thm1(long d, long n) { return verify_thm1_report(d, n).ok(); }

// ----------------------------------------------------------- second theorem

inline Report verify_thm2_report(const WeightVector& A) {
    Report r;
    r.instance = detail::weight_instance(A);
    require_toric(A);
    r.add("weight_in_domain", validate_weight(A));
    const auto centers = g_A(A);
    r.add("centers_contain_d_plus_1", std::all_of(centers.begin(), centers.end(), [&](const LocusIndex& I) {
              return std::binary_search(I.begin(), I.end(), A.d + 1);
          }));
    const ChamberBuildingSet cb = b_A(A);
    const auto bs_report = validate_building_set(cb.building_set);
    r.add("building_set_valid_over_simplex", bs_report.ok(),
          bs_report.ok() ? "" : bs_report.violations.front());

    const Fan blowup = blowup_fan(A);
    const Fan sym = nested_fan(chamber_sym_building_set(cb, A.d));
    r.instance["rays"] = blowup.rays().size();
    r.instance["max_cones"] = blowup.max_cones().size();
    r.instance["promoted"] = cb.promoted.size();
    r.add("blowup_equals_symmetric_product", fan_equal(blowup, sym),
          std::to_string(cb.promoted.size()) + " duplicated members, " + std::to_string(centers.size()) +
              " centers");
    r.add("ray_count", blowup.rays().size() == detail::expected_ray_count(A, centers),
          std::to_string(blowup.rays().size()) + " rays");

    // Duplicating every member, singletons included, regardless of the
    // inequality: differs exactly when some a_{d+1} + a_i <= 1 and d >= 2.
    const Fan literal = sym_fan(lift_to_plain(cb.building_set), A.d);
    const bool literal_equal = fan_equal(blowup, literal);
    std::size_t unpromoted = 0;
    for (std::size_t k = 0; k < cb.building_set.ground().size(); ++k)
        if (!std::binary_search(cb.promoted.begin(), cb.promoted.end(), Subset{k})) ++unpromoted;
    r.add("all_members_duplicated", literal_equal,
          std::to_string(unpromoted) + " singletons fail the inequality; duplicating them " +
              (literal_equal ? "changes nothing" : "adds " + std::to_string(literal.rays().size() - blowup.rays().size()) +
                                                       " rays"),
          false);
    return r;
}

inline bool verify_thm2(const WeightVector& A) {
    require_toric(A);
    return verify_thm2_report(A).ok();
}

// ---------------------------------------------------------------- join lemma

namespace detail {

/// The lemma by the fan's own join and star, pair by pair.
inline bool lemma_join_literal(const Fan& f) {
    const auto cones = all_cones(f);
    for (const auto& s : cones) {
        const auto star_s = star(f, s);
        for (const auto& t : cones) {
            const auto star_t = star(f, t);
            std::vector<Cone> both;
            std::set_intersection(star_s.begin(), star_s.end(), star_t.begin(), star_t.end(),
                                  std::back_inserter(both));
            const auto j = join(f, s, t);
            if (j ? both != star(f, *j) : !both.empty()) return false;
        }
    }
    return true;
}

using RayMask = unsigned __int128;

struct RayMaskHash {
    std::size_t operator()(RayMask m) const {
        const auto lo = static_cast<std::uint64_t>(m), hi = static_cast<std::uint64_t>(m >> 64);
        return std::hash<std::uint64_t>{}(lo ^ (hi * 0x9e3779b97f4a7c15ULL));
    }
};

}  // namespace detail

/// For all cones sigma, tau: star(sigma) n star(tau) = star(sigma v tau)
/// when the join exists, and is empty otherwise. For each sigma, the set of
/// tau whose star meets star(sigma) (faces of maximal cones through sigma)
/// must coincide with the set of tau having a join with sigma, reached from
/// the cones eta over sigma as tau = (eta \ sigma) u S, S a subset of sigma,
/// each with join eta. All pairs are covered, as bit sets.
inline bool verify_lemma_join(const Fan& f) {
    if (f.rays().size() > 128) return detail::lemma_join_literal(f);
    using detail::RayMask;
    // faces_of[c][local subset of c's rays] = cone id
    std::unordered_map<RayMask, std::uint32_t, detail::RayMaskHash> id;
    std::vector<RayMask> masks;
    const auto& max_cones = f.max_cones();
    std::vector<std::vector<std::uint32_t>> faces_of(max_cones.size());
    for (std::size_t c = 0; c < max_cones.size(); ++c) {
        const auto& rays = max_cones[c].rays;
        faces_of[c].resize(std::size_t{1} << rays.size());
        for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << rays.size()); ++sub) {
            RayMask m = 0;
            for (std::size_t k = 0; k < rays.size(); ++k)
                if (sub >> k & 1) m |= RayMask{1} << rays[k];
            auto [it, fresh] = id.emplace(m, static_cast<std::uint32_t>(masks.size()));
            if (fresh) masks.push_back(m);
            faces_of[c][sub] = it->second;
        }
    }
    const std::size_t n = masks.size();
    std::vector<std::vector<std::uint32_t>> containing(n);
    for (std::size_t c = 0; c < faces_of.size(); ++c)
        for (auto face : faces_of[c])
            if (containing[face].empty() || containing[face].back() != c)
                containing[face].push_back(static_cast<std::uint32_t>(c));

    const std::size_t words = (n + 63) / 64;
    std::vector<std::uint64_t> meets(words), joins(words);
    std::vector<std::uint32_t> touched_at(n, UINT32_MAX), eta_at(n, UINT32_MAX), touched;
    auto bit = [](std::uint32_t k) { return std::uint64_t{1} << (k % 64); };
    for (std::uint32_t s = 0; s < n; ++s) {
        touched.clear();
        for (auto c : containing[s]) {
            const auto& rays = max_cones[c].rays;
            const std::uint64_t all = (std::uint64_t{1} << rays.size()) - 1;
            std::uint64_t local = 0;
            for (std::size_t k = 0; k < rays.size(); ++k)
                if (masks[s] >> rays[k] & 1) local |= std::uint64_t{1} << k;
            for (std::uint64_t sub = 0; sub <= all; ++sub) {
                const auto face = faces_of[c][sub];
                meets[face / 64] |= bit(face);
                if (touched_at[face] != s) {
                    touched_at[face] = s;
                    touched.push_back(face);
                }
                if ((sub & local) != local || eta_at[face] == s) continue;
                eta_at[face] = s;
                // face is a cone eta over sigma; its tau with sigma u tau = eta
                const std::uint64_t rest = sub & ~local;
                for (std::uint64_t part = local;; part = (part - 1) & local) {
                    const auto tau = faces_of[c][rest | part];
                    if ((masks[s] | masks[tau]) != masks[face]) return false;
                    joins[tau / 64] |= bit(tau);
                    if (part == 0) break;
                }
            }
        }
        for (auto face : touched)
            if (meets[face / 64] != joins[face / 64]) return false;
        for (auto face : touched) meets[face / 64] = joins[face / 64] = 0;
    }
    return true;
}

// ------------------------------------------------------------ third theorem

namespace detail {

/// Index subsets of size >= 2 with weight sum <= 1, as bit masks.
inline std::vector<std::uint64_t> chamber_signature(const std::vector<Rational>& w) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << w.size()); ++mask) {
        if (std::popcount(mask) < 2) continue;
        Rational s = 0;
        for (std::size_t k = 0; k < w.size(); ++k)
            if (mask >> k & 1) s += w[k];
        if (s <= 1) out.push_back(mask);
    }
    return out;
}

inline bool dominated(const std::vector<Rational>& lo, const std::vector<Rational>& hi) {
    if (lo.size() != hi.size()) return false;
    for (std::size_t k = 0; k < lo.size(); ++k)
        if (lo[k] > hi[k]) return false;
    return true;
}

/// (1, 1, q, ..., q) of the given length.
inline std::vector<Rational> two_heavy(std::size_t length, const Rational& q) {
    std::vector<Rational> v(length, q);
    v[0] = v[1] = 1;
    return v;
}

}  // namespace detail

/// Exact weight checks for the Hassett vector A' = (1, a_{d+1}, ..., a_n).
/// The dominance and chamber comparisons are computed under both readings
/// of the light entries (1/(n-2) and 1/(n-d-1)) and for both the vector
/// (1, 1, a_{d+3}, ..., a_n) and (1, 1, a_{d+2}, ..., a_n); those are
/// reported, not gating.
inline Report verify_thm3_part1(long d, long n, const std::vector<Rational>& a) {
    Report r;
    nlohmann::json weights = nlohmann::json::array();
    for (const auto& x : a) weights.push_back(format_rational(x));
    r.instance = {{"d", d}, {"n", n}, {"a", weights}};
    if (d == 1 && n == 3) {
        r.add("skipped", true, "P̄ = ℙ¹ for all weight vectors", false);
        return r;
    }
    const WeightVector A(d, n, a);
    require_toric(A);
    const auto w = weight_floor(d, n);
    const auto a_prime = hassett_weight_A_prime(A);

    Rational sum = 1;
    for (long i = d + 1; i <= n; ++i) sum += A.at(i);
    r.add("hassett_sum_exceeds_2", sum > 2, "1 + sum a_i = " + format_rational(sum));
    Rational floor_sum = 1;
    for (long i = d + 1; i <= n; ++i) floor_sum += w[static_cast<std::size_t>(i - 1)];
    const Rational eps_prime(1, (d + 1) * (n - d));
    r.add("floor_sum_is_2_plus_d_eps_prime", floor_sum == 2 + d * eps_prime,
          "1 + sum w_i = " + format_rational(floor_sum));

    std::vector<Rational> floor_prime{Rational(1)};
    for (long i = d + 1; i <= n; ++i) floor_prime.push_back(w[static_cast<std::size_t>(i - 1)]);
    r.add("floor_below_A_prime", detail::dominated(floor_prime, a_prime),
          detail::rationals_str(floor_prime) + " <= " + detail::rationals_str(a_prime));

    const std::vector<std::pair<std::string, Rational>> readings{{"1/(n-2)", Rational(1, n - 2)},
                                                                 {"1/(n-d-1)", Rational(1, n - d - 1)}};
    for (const auto& [tag, q] : readings) {
        std::vector<Rational> a_p(a_prime.size(), q);
        a_p[0] = 1;
        r.add("A_P_below_floor[" + tag + "]", detail::dominated(a_p, floor_prime),
              detail::rationals_str(a_p) + " <= " + detail::rationals_str(floor_prime), false);
    }

    std::vector<Rational> short_vec{1, 1}, long_vec{1, 1};
    for (long i = d + 3; i <= n; ++i) short_vec.push_back(A.at(i));
    for (long i = d + 2; i <= n; ++i) long_vec.push_back(A.at(i));
    const std::vector<std::pair<std::string, std::vector<Rational>>> vectors{{"a_{d+3}..a_n", short_vec},
                                                                             {"a_{d+2}..a_n", long_vec}};
    for (const auto& [vtag, v] : vectors) {
        for (const auto& [qtag, q] : readings) {
            const auto lm = detail::two_heavy(v.size(), q);
            r.add("same_chamber_as_LM[" + vtag + "," + qtag + "]",
                  detail::chamber_signature(v) == detail::chamber_signature(lm),
                  detail::rationals_str(v) + " vs " + detail::rationals_str(lm), false);
        }
        r.add("dominates_A_prime[" + vtag + "]", detail::dominated(a_prime, v),
              v.size() == a_prime.size() ? detail::rationals_str(v) + " >= " + detail::rationals_str(a_prime)
                                         : "length " + std::to_string(v.size()) + " vs " +
                                               std::to_string(a_prime.size()) + ", not comparable",
              false);
    }
    return r;
}

inline Report verify_thm3_part1(const WeightVector& A) { return verify_thm3_part1(A.d, A.n, A.a); }

/// The nested fan of B_A on the simplex fan of S is a valid unimodular fan
/// between the simplex fan and the permutohedral fan of S.
inline Report verify_thm3_part2_report(const WeightVector& A) {
    Report r;
    r.instance = detail::weight_instance(A);
    const ChamberBuildingSet cb = b_A(A);
    const Fan simplex = cb.building_set.base_fan();
    const Fan nested = nested_fan(cb.building_set);
    const Fan permutohedral = nested_fan(complete_building_set(light_labels(A.d, A.n)));
    r.instance["f_vector"] = detail::counts_json(f_vector(nested));
    const auto report = validate_fan(nested);
    r.add("nested_fan_valid", report.ok(), report.ok() ? "" : report.violations.front());
    r.add("nested_fan_unimodular", is_unimodular(nested));
    r.add("refines_simplex_fan", refines(nested, simplex));
    r.add("refined_by_permutohedral_fan", refines(permutohedral, nested));
    return r;
}

inline bool verify_thm3_part2(const WeightVector& A) { return verify_thm3_part2_report(A).ok(); }

// -------------------------------------------------------- building-set checks

inline Report verify_order_report(const BuildingSet& b, std::size_t trials, std::uint64_t seed) {
    Report r;
    const auto schedule = subdivision_schedule(b);
    const auto count = schedule_count(schedule, 5000);
    r.instance = {{"ground", b.ground().size()}, {"members", b.members().size()}, {"scheduled", schedule.size()}};
    r.add("order_independent", order_independence_check(b, trials, seed),
          count <= 5000 ? "all " + std::to_string(count) + " schedules"
                        : std::to_string(trials) + " sampled schedules");
    return r;
}

inline Report verify_oracle_report(const BuildingSet& b, std::uint64_t seed) {
    Report r;
    const Fan nested = nested_fan(b);
    const Fan oracle = minkowski_nestohedron_oracle(b, seed);
    r.instance = {{"ground", b.ground().size()}, {"members", b.members().size()},
                  {"f_vector", detail::counts_json(f_vector(nested))}};
    r.add("oracle_equals_nested_fan", fan_equal(oracle, nested),
          std::to_string(oracle.rays().size()) + " oracle rays, " + std::to_string(nested.rays().size()) +
              " nested rays");
    return r;
}

inline Report verify_lemma_report(const Fan& f) {
    Report r;
    std::size_t total = 0;
    for (auto x : f_vector(f)) total += x;
    r.instance = {{"rank", f.rank()}, {"rays", f.rays().size()}, {"cones", total}};
    r.add("join_lemma", verify_lemma_join(f), std::to_string(total) + " x " + std::to_string(total) + " cone pairs");
    return r;
}

}  // namespace nestofan
