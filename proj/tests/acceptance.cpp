// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "nestofan/cli.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <map>
#include <random>
#include <sstream>

using namespace nestofan;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Fans keyed by geometry alone (labels dropped), so each distinct fan is
// checked once in the lemma, validity and unimodularity criteria.
class FanPool {
public:
    void add(const Fan& f, const std::string& origin) {
        json j = fan_to_json(f);
        j.erase("labels");
        auto [it, fresh] = fans_.emplace(j.dump(), Entry{f, origin});
        (void)it;
        (void)fresh;
    }
    struct Entry {
        Fan fan;
        std::string origin;
    };
    const std::map<std::string, Entry>& entries() const { return fans_; }

private:
    std::map<std::string, Entry> fans_;
};

class BuildingSetPool {
public:
    void add(const BuildingSet& b, const std::string& origin) {
        sets_.emplace(building_set_to_json(b).dump(), std::pair{b, origin});
    }
    const std::map<std::string, std::pair<BuildingSet, std::string>>& entries() const { return sets_; }

private:
    std::map<std::string, std::pair<BuildingSet, std::string>> sets_;
};

struct Outcome {
    bool pass;
    std::string summary;
};

int failures = 0;

void report(int number, const std::string& title, const std::function<Outcome()>& body) {
    const auto start = Clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("[%s] criterion %d: %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", number, title.c_str(),
                o.summary.c_str(), seconds_since(start));
    std::fflush(stdout);
}

std::string grid_name(long d, long n) { return "(" + std::to_string(d) + "," + std::to_string(n) + ")"; }

}  // namespace

int main() {
    FanPool fans;
    BuildingSetPool building_sets;
    std::vector<std::pair<long, long>> grid;
    for (long d = 1; d <= 3; ++d)
        for (long n = d + 3; n <= 8; ++n) grid.emplace_back(d, n);

    report(1, "hexagon instance", [&]() -> Outcome {
        const auto start = Clock::now();
        const BuildingSet b = complete_building_set(1, 2);
        const Fan sym = sym_fan(b, 2);
        const Fan lm = blowup_fan(lm_weights(2, 5));
        const bool counts = f_vector(sym) == std::vector<std::size_t>{1, 6, 6};
        const std::vector<LatticeVector> expected{{-1, -1}, {-1, 0}, {0, -1}, {0, 1}, {1, 0}, {1, 1}};
        const bool rays = canonical(sym).rays() == expected;
        const bool equal = fan_equal(sym, lm);
        const double elapsed = seconds_since(start);
        fans.add(sym, "sym2 of 2^[2]");
        fans.add(lm, "LM (2,5)");
        building_sets.add(sym_building_set(b, 2), "sym2 of 2^[2]");
        std::ostringstream s;
        s << std::fixed << std::setprecision(2);
        s << "f_vector " << (counts ? "(1,6,6)" : "wrong") << ", rays " << (rays ? "as expected" : "wrong")
          << ", fan_equal to the LM (2,5) blow-up " << (equal ? "yes" : "no") << ", " << elapsed * 1000 << " ms";
        return {counts && rays && equal && elapsed < 0.1, s.str()};
    });

    report(2, "first theorem over 1<=d<=3, d+3<=n<=8", [&]() -> Outcome {
        const auto start = Clock::now();
        std::string failed;
        for (auto [d, n] : grid)
            if (!verify_thm1(d, n)) failed += " " + grid_name(d, n);
        const double elapsed = seconds_since(start);
        for (auto [d, n] : grid) {
            fans.add(blowup_fan(lm_weights(d, n)), "LM " + grid_name(d, n));
            building_sets.add(sym_building_set(complete_building_set(d + 2, n), d), "sym of complete " +
                                                                                        grid_name(d, n));
        }
        std::ostringstream s;
        s << std::fixed << std::setprecision(2);
        s << grid.size() << " instances, " << (failed.empty() ? "all equal" : "failed:" + failed) << ", "
          << elapsed << " s of 60 s";
        return {failed.empty() && elapsed < 60, s.str()};
    });

    report(3, "second theorem, 50 random toric weights per (d,n)", [&]() -> Outcome {
        const auto start = Clock::now();
        std::mt19937_64 rng(2024);
        std::size_t checked = 0, distinct_chambers = 0;
        std::string failed;
        for (auto [d, n] : grid) {
            std::set<std::vector<Subset>> chambers;
            for (int t = 0; t < 50; ++t) {
                const WeightVector A = random_toric_weight(d, n, rng, 24);
                ++checked;
                const Report r = verify_thm2_report(A);
                if (!r.ok()) failed += " " + dump(weight_vector_to_json(A));
                const auto cb = b_A(A);
                if (chambers.insert(cb.promoted).second) {
                    fans.add(blowup_fan(A), "weights " + grid_name(d, n));
                    building_sets.add(chamber_sym_building_set(cb, d), "chamber sym " + grid_name(d, n));
                }
            }
            distinct_chambers += chambers.size();
        }
        const double elapsed = seconds_since(start);
        std::ostringstream s;
        s << std::fixed << std::setprecision(2);
        s << checked << " weight vectors in " << distinct_chambers << " chambers, "
          << (failed.empty() ? "all equal" : "failed:" + failed) << ", " << elapsed << " s of 120 s";
        return {failed.empty() && elapsed < 120, s.str()};
    });

    report(4, "Losev-Manin d=1 against the permutohedral fan", [&]() -> Outcome {
        std::ostringstream s;
        s << std::fixed << std::setprecision(2);
        bool ok = true;
        for (long n = 5; n <= 7; ++n) {
            const Fan lm = blowup_fan(lm_weights(1, n));
            const BuildingSet complete = complete_building_set(3, n);
            const Fan perm = nested_fan(complete);
            const std::size_t expected = (std::size_t{1} << (n - 2)) - 2;
            const bool equal = fan_equal(lm, perm) && lm.rays().size() == expected;
            ok = ok && equal;
            s << "n=" << n << " " << lm.rays().size() << "/" << expected << " rays " << (equal ? "equal" : "DIFFER")
              << (n < 7 ? ", " : "");
            fans.add(lm, "LM " + grid_name(1, n));
            fans.add(perm, "permutohedral on 3.." + std::to_string(n));
            building_sets.add(complete, "complete on 3.." + std::to_string(n));
        }
        return {ok, s.str()};
    });

    report(5, "join lemma on every fan of criteria 1-4", [&]() -> Outcome {
        std::string failed;
        std::size_t pairs = 0;
        for (const auto& [key, e] : fans.entries()) {
            std::size_t cones = 0;
            for (auto x : f_vector(e.fan)) cones += x;
            pairs += cones * cones;
            if (!verify_lemma_join(e.fan)) failed += " " + e.origin;
        }
        std::ostringstream s;
        s << std::fixed << std::setprecision(2);
        s << fans.entries().size() << " distinct fans, " << pairs << " cone pairs, "
          << (failed.empty() ? "all hold" : "failed:" + failed);
        return {failed.empty(), s.str()};
    });

    report(6, "order independence on every building set of criteria 2-4", [&]() -> Outcome {
        std::size_t exhaustive = 0, sampled = 0;
        std::string failed;
        for (const auto& [key, entry] : building_sets.entries()) {
            const auto& [b, origin] = entry;
            const auto count = schedule_count(subdivision_schedule(b), 5000);
            (count <= 5000 ? exhaustive : sampled) += 1;
            if (!order_independence_check(b, 100, 7, 5000)) failed += " " + origin;
        }
        std::ostringstream s;
        s << std::fixed << std::setprecision(2);
        s << building_sets.entries().size() << " building sets (" << exhaustive << " exhaustive, " << sampled
          << " with 100 sampled schedules), " << (failed.empty() ? "all fan_equal" : "failed:" + failed);
        return {failed.empty(), s.str()};
    });

    report(7, "validity and unimodularity of every constructed fan", [&]() -> Outcome {
        std::string failed;
        std::size_t violations = 0;
        for (const auto& [key, e] : fans.entries()) {
            const auto r = validate_fan(e.fan);
            violations += r.violations.size();
            if (!r.ok() || !is_unimodular(e.fan)) failed += " " + e.origin;
        }
        std::ostringstream s;
        s << std::fixed << std::setprecision(2);
        s << fans.entries().size() << " distinct fans, " << violations << " violations"
          << (failed.empty() ? ", all unimodular" : ", failed:" + failed);
        return {failed.empty(), s.str()};
    });

    report(8, "Minkowski oracle against the nested fan", [&]() -> Outcome {
        const auto start = Clock::now();
        std::size_t exhaustive = 0, random = 0;
        std::string failed;
        for (std::size_t m = 2; m <= 4; ++m)
            for (const auto& b : connected_building_sets(m)) {
                ++exhaustive;
                if (!fan_equal(minkowski_nestohedron_oracle(b, exhaustive), nested_fan(b)))
                    failed += " " + building_set_to_json(b).dump();
            }
        std::mt19937_64 rng(5);
        std::set<std::string> seen;
        for (int t = 0; t < 5000 && seen.size() < 1000; ++t) {
            const double density = 0.05 + 0.05 * (t % 6);
            const BuildingSet b = random_connected_building_set(5, rng, density);
            if (!seen.insert(building_set_to_json(b).dump()).second) continue;
            ++random;
            if (!fan_equal(minkowski_nestohedron_oracle(b, t), nested_fan(b)))
                failed += " " + building_set_to_json(b).dump();
        }
        const double elapsed = seconds_since(start);
        std::ostringstream s;
        s << std::fixed << std::setprecision(2);
        s << exhaustive << " building sets on 2-4 labels, " << random << " random on 5 labels, "
          << (failed.empty() ? "all fan_equal" : "failed:" + failed) << ", " << elapsed << " s of 120 s";
        return {failed.empty() && elapsed < 120, s.str()};
    });

    report(9, "third theorem part 1 reports over the criterion-2 grid", [&]() -> Outcome {
        std::size_t disagreements = 0, reported = 0;
        std::string failed;
        for (auto [d, n] : grid) {
            const Report r = verify_thm3_part1(lm_weights(d, n));
            std::map<std::string, bool> by_name;
            for (const auto& c : r.checks) {
                if (c.name == "hassett_sum_exceeds_2" && !c.pass) failed += " " + grid_name(d, n);
                if (!c.gating) {
                    ++reported;
                    by_name[c.name] = c.pass;
                }
            }
            const bool both = by_name.count("A_P_below_floor[1/(n-2)]") && by_name.count("A_P_below_floor[1/(n-d-1)]");
            if (!both) failed += " readings missing at " + grid_name(d, n);
            else if (by_name["A_P_below_floor[1/(n-2)]"] != by_name["A_P_below_floor[1/(n-d-1)]"])
                ++disagreements;
        }
        std::ostringstream s;
        s << std::fixed << std::setprecision(2);
        s << "sum > 2 on all " << grid.size() << " instances" << (failed.empty() ? "" : " except" + failed) << ", "
          << reported << " reported checks, the two readings of A_P disagree on " << disagreements << " instances";
        return {failed.empty(), s.str()};
    });

    report(10, "byte-identical output on repeated runs", [&]() -> Outcome {
        const std::vector<std::vector<std::string>> commands{
            {"verify", "thm1", "--d", "2", "--n", "6"},
            {"verify", "thm3", "--d", "2", "--n", "5"},
            {"lm-fan", "--d", "3", "--n", "7"},
            {"lm-fan", "--d", "2", "--n", "5", "--format", "svg"},
            {"simplex-fan", "--labels", "3,4,5,6"},
            {"verify", "lemma", "--d", "1", "--n", "6"},
            {"sweep", "--d-range", "1..2", "--n-range", "5..6"}};
        std::size_t identical = 0;
        for (const auto& args : commands) {
            std::string first;
            bool same = true;
            for (int k = 0; k < 3; ++k) {
                std::ostringstream out, err;
                cli::run(args, out, err);
                if (k == 0)
                    first = out.str();
                else
                    same = same && out.str() == first && !first.empty();
            }
            identical += same;
        }
        std::ostringstream s;
        s << std::fixed << std::setprecision(2);
        s << identical << "/" << commands.size() << " commands identical over 3 runs";
        return {identical == commands.size(), s.str()};
    });

    std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
