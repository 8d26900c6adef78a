#pragma once

// Simplicial rational fans stored as a ray table plus index-set cones.
//
// A Fan is an immutable value. Every operation below is a free function that
// returns a new Fan; ray indices of an input survive unchanged into the
// output of product (left factor), star_subdivision and power (first copy).

#include "feasibility.hpp"
#include "label.hpp"
#include "lattice.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace nestofan {

/// Sorted, duplicate-free indices into a fan's ray table.
struct Cone {
    std::vector<std::size_t> rays;

    Cone() = default;
    explicit Cone(std::vector<std::size_t> r) : rays(std::move(r)) {
        std::sort(rays.begin(), rays.end());
        rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
    }
    Cone(std::initializer_list<std::size_t> r) : Cone(std::vector<std::size_t>(r)) {}

    std::size_t dim() const { return rays.size(); }
    bool contains(const Cone& other) const {
        return std::includes(rays.begin(), rays.end(), other.rays.begin(), other.rays.end());
    }
    bool contains(std::size_t ray) const { return std::binary_search(rays.begin(), rays.end(), ray); }

    friend bool operator==(const Cone&, const Cone&) = default;
    friend bool operator<(const Cone& a, const Cone& b) { return a.rays < b.rays; }

    std::string str() const {
        std::string out = "{";
        for (std::size_t k = 0; k < rays.size(); ++k) out += (k ? "," : "") + std::to_string(rays[k]);
        return out + "}";
    }
};

inline Cone cone_union(const Cone& a, const Cone& b) {
    std::vector<std::size_t> u;
    std::set_union(a.rays.begin(), a.rays.end(), b.rays.begin(), b.rays.end(), std::back_inserter(u));
    Cone c;
    c.rays = std::move(u);
    return c;
}

inline Cone cone_intersection(const Cone& a, const Cone& b) {
    Cone c;
    std::set_intersection(a.rays.begin(), a.rays.end(), b.rays.begin(), b.rays.end(),
                          std::back_inserter(c.rays));
    return c;
}

class Fan {
public:
    Fan() = default;

    /// Checks structure only (lengths, index ranges). Geometric conditions
    /// are reported by validate_fan so that broken fans can still be examined.
    Fan(std::size_t rank, std::vector<LatticeVector> rays, std::vector<Cone> max_cones,
        std::vector<std::optional<Label>> labels = {})
        : rank_(rank), rays_(std::move(rays)), max_cones_(std::move(max_cones)), labels_(std::move(labels)) {
        for (const auto& r : rays_)
            if (r.rank() != rank_) throw InputError("ray " + r.str() + " does not have length " + std::to_string(rank_));
        for (const auto& c : max_cones_)
            for (auto i : c.rays)
                if (i >= rays_.size()) throw InputError("cone " + c.str() + " references a missing ray");
        if (labels_.empty()) labels_.resize(rays_.size());
        if (labels_.size() != rays_.size()) throw InputError("label count does not match ray count");
        std::sort(max_cones_.begin(), max_cones_.end());
        max_cones_.erase(std::unique(max_cones_.begin(), max_cones_.end()), max_cones_.end());
    }

    std::size_t rank() const { return rank_; }
    const std::vector<LatticeVector>& rays() const { return rays_; }
    const LatticeVector& ray(std::size_t k) const { return rays_.at(k); }
    const std::vector<Cone>& max_cones() const { return max_cones_; }
    const std::vector<std::optional<Label>>& labels() const { return labels_; }

    std::optional<std::size_t> ray_index(const Label& label) const {
        for (std::size_t k = 0; k < labels_.size(); ++k)
            if (labels_[k] == label) return k;
        return std::nullopt;
    }

    std::optional<std::size_t> ray_index(const LatticeVector& v) const {
        for (std::size_t k = 0; k < rays_.size(); ++k)
            if (rays_[k] == v) return k;
        return std::nullopt;
    }

    std::vector<LatticeVector> generators(const Cone& c) const {
        std::vector<LatticeVector> g;
        g.reserve(c.dim());
        for (auto i : c.rays) g.push_back(rays_[i]);
        return g;
    }

    /// True iff the index set is a face of some maximal cone.
    bool has_cone(const Cone& c) const {
        return std::any_of(max_cones_.begin(), max_cones_.end(), [&](const Cone& m) { return m.contains(c); });
    }

private:
    std::size_t rank_ = 0;
    std::vector<LatticeVector> rays_;
    std::vector<Cone> max_cones_;
    std::vector<std::optional<Label>> labels_;
};

// ---------------------------------------------------------------- builders

/// The fan of the simplex with facets labeled by `labels` in
/// R^m / R(1,...,1) = Z^{m-1}: e_1..e_{m-1} and e_m = -(e_1+...+e_{m-1}).
inline Fan simplex_fan(std::span<const Label> labels) {
    const std::size_t m = labels.size();
    if (m < 2) throw InputError("simplex fan needs at least two labels");
    std::vector<LatticeVector> rays;
    for (std::size_t k = 0; k + 1 < m; ++k) {
        std::vector<Integer> c(m - 1, 0);
        c[k] = 1;
        rays.emplace_back(std::move(c));
    }
    rays.emplace_back(std::vector<Integer>(m - 1, -1));
    std::vector<Cone> cones;
    for (std::size_t skip = 0; skip < m; ++skip) {
        std::vector<std::size_t> idx;
        for (std::size_t k = 0; k < m; ++k)
            if (k != skip) idx.push_back(k);
        cones.emplace_back(std::move(idx));
    }
    return Fan(m - 1, std::move(rays), std::move(cones),
               std::vector<std::optional<Label>>(labels.begin(), labels.end()));
}

/// Simplex fan on the simple labels first..last.
inline Fan simplex_fan(long first, long last) {
    std::vector<Label> labels;
    for (long i = first; i <= last; ++i) labels.push_back(Label::simple(i));
    return simplex_fan(labels);
}

/// The fan of a point: rank 0, the zero cone as its only maximal cone.
inline Fan point_fan() { return Fan(0, {}, {Cone{}}); }

/// Cartesian product. Rays of F keep their indices; rays of G are shifted
/// by |rays(F)|. Labels are concatenated.
inline Fan product(const Fan& f, const Fan& g) {
    const std::size_t rank = f.rank() + g.rank();
    std::vector<LatticeVector> rays;
    std::vector<std::optional<Label>> labels;
    for (std::size_t k = 0; k < f.rays().size(); ++k) {
        auto c = f.ray(k).coords;
        c.resize(rank, 0);
        rays.emplace_back(std::move(c));
        labels.push_back(f.labels()[k]);
    }
    const std::size_t shift = f.rays().size();
    for (std::size_t k = 0; k < g.rays().size(); ++k) {
        std::vector<Integer> c(f.rank(), 0);
        c.insert(c.end(), g.ray(k).coords.begin(), g.ray(k).coords.end());
        rays.emplace_back(std::move(c));
        labels.push_back(g.labels()[k]);
    }
    std::vector<Cone> cones;
    for (const auto& a : f.max_cones())
        for (const auto& b : g.max_cones()) {
            std::vector<std::size_t> idx = a.rays;
            for (auto i : b.rays) idx.push_back(i + shift);
            cones.emplace_back(std::move(idx));
        }
    return Fan(rank, std::move(rays), std::move(cones), std::move(labels));
}

/// d-fold product of F with itself. Copy k (1-based) relabels a simple
/// label i as the pair (i, k); existing pair labels are kept.
inline Fan power(const Fan& f, long d) {
    if (d < 1) throw InputError("power needs d >= 1");
    auto relabel = [&](long k) {
        std::vector<std::optional<Label>> labels = f.labels();
        for (auto& l : labels)
            if (l && !l->is_pair()) l = Label::pair(l->item, k);
        return Fan(f.rank(), f.rays(), f.max_cones(), std::move(labels));
    };
    Fan out = relabel(1);
    for (long k = 2; k <= d; ++k) out = product(out, relabel(k));
    return out;
}

// ------------------------------------------------------------ face queries

inline void check_indices(const Fan& f, const Cone& c) {
    for (auto i : c.rays)
        if (i >= f.rays().size()) throw InputError("ray index " + std::to_string(i) + " out of range");
}

inline std::optional<Cone> cone_lookup(const Fan& f, const Cone& c) {
    check_indices(f, c);
    if (f.has_cone(c)) return c;
    return std::nullopt;
}

inline void require_cone(const Fan& f, const Cone& c) {
    check_indices(f, c);
    if (!f.has_cone(c)) throw InputError("cone not in fan: " + c.str());
}

/// Minimal cone of F containing both; for simplicial fans the cone on the
/// union of the ray sets, when that is a cone of F.
inline std::optional<Cone> join(const Fan& f, const Cone& a, const Cone& b) {
    require_cone(f, a);
    require_cone(f, b);
    return cone_lookup(f, cone_union(a, b));
}

/// Invokes fn(face) for every subset of `c` (including empty and c itself).
template <typename Fn>
void for_each_face(const Cone& c, Fn&& fn) {
    const std::size_t k = c.dim();
    Cone face;
    face.rays.reserve(k);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        face.rays.clear();
        for (std::size_t j = 0; j < k; ++j)
            if (mask >> j & 1) face.rays.push_back(c.rays[j]);
        fn(face);
    }
}

/// Every cone of F, including the zero cone, sorted.
inline std::vector<Cone> all_cones(const Fan& f) {
    std::set<Cone> cones;
    for (const auto& m : f.max_cones()) for_each_face(m, [&](const Cone& c) { cones.insert(c); });
    return {cones.begin(), cones.end()};
}

/// All cones eta of F with sigma a face of eta.
inline std::vector<Cone> star(const Fan& f, const Cone& sigma) {
    require_cone(f, sigma);
    std::set<Cone> out;
    for (const auto& m : f.max_cones()) {
        if (!m.contains(sigma)) continue;
        for_each_face(m, [&](const Cone& c) {
            if (c.contains(sigma)) out.insert(c);
        });
    }
    return {out.begin(), out.end()};
}

inline std::vector<std::size_t> f_vector(const Fan& f) {
    std::vector<std::size_t> counts(f.rank() + 1, 0);
    for (const auto& c : all_cones(f))
        if (c.dim() < counts.size()) ++counts[c.dim()];
    return counts;
}

// ------------------------------------------------------------ subdivision

/// Stellar subdivision at sigma: inserts the primitive sum of sigma's
/// generators and replaces each maximal cone tau containing sigma by the
/// cones (tau \ {s}) u {new ray}, s in sigma. Identity when dim sigma <= 1.
inline Fan star_subdivision(const Fan& f, const Cone& sigma) {
    require_cone(f, sigma);
    if (sigma.dim() <= 1) return f;
    LatticeVector sum(std::vector<Integer>(f.rank(), 0));
    for (auto i : sigma.rays) sum = sum + f.ray(i);
    auto rays = f.rays();
    auto labels = f.labels();
    const std::size_t u = rays.size();
    rays.push_back(primitive(std::move(sum)));
    labels.emplace_back();
    std::vector<Cone> cones;
    cones.reserve(f.max_cones().size() + sigma.dim());
    for (const auto& tau : f.max_cones()) {
        if (!tau.contains(sigma)) {
            cones.push_back(tau);
            continue;
        }
        for (auto s : sigma.rays) {
            std::vector<std::size_t> idx;
            idx.reserve(tau.dim());
            for (auto t : tau.rays)
                if (t != s) idx.push_back(t);
            idx.push_back(u);
            cones.emplace_back(std::move(idx));
        }
    }
    return Fan(f.rank(), std::move(rays), std::move(cones), std::move(labels));
}

// ----------------------------------------------------- lattice properties

inline bool is_unimodular(const Fan& f) {
    for (const auto& c : f.max_cones()) {
        auto g = f.generators(c);
        if (maximal_minor_gcd(g) != 1) return false;
    }
    return true;
}

namespace detail {

/// Integer inward facet normals of a full-dimensional simplicial cone:
/// normals[j] vanishes on every generator except j, where it is positive.
inline std::vector<LatticeVector> facet_normals(std::span<const LatticeVector> gens) {
    const auto h = dual_basis(gens);
    if (!h) throw std::logic_error("facet normals of a degenerate cone");
    std::vector<LatticeVector> normals;
    normals.reserve(gens.size());
    for (const auto& row : *h) {
        Integer lcm = 1;
        for (const auto& x : row) {
            auto den = boost::multiprecision::denominator(x);
            lcm = lcm / gcd(lcm, den) * den;
        }
        std::vector<Integer> n(row.size());
        for (std::size_t k = 0; k < row.size(); ++k) n[k] = boost::multiprecision::numerator(Rational(row[k] * lcm));
        normals.push_back(primitive(LatticeVector(std::move(n))));
    }
    return normals;
}

inline bool is_full_simplicial(const Fan& f, const Cone& c) {
    if (c.dim() != f.rank()) return false;
    auto g = f.generators(c);
    return rank_of(g) == f.rank();
}

/// Exact test that the two simplicial cones meet in the cone on their common
/// rays, by linear programming.
inline bool meets_in_common_face(const Fan& f, const Cone& a, const Cone& b) {
    const Cone common = cone_intersection(a, b);
    // lambda, mu >= 0, sum lambda_i a_i - sum mu_j b_j = 0, and unit mass
    // on the generators outside the common face. Feasible iff the
    // intersection reaches beyond the common face.
    const std::size_t na = a.dim(), nb = b.dim();
    std::vector<std::vector<Rational>> m(f.rank() + 1, std::vector<Rational>(na + nb, Rational(0)));
    std::vector<Rational> rhs(f.rank() + 1, Rational(0));
    for (std::size_t i = 0; i < na; ++i) {
        for (std::size_t k = 0; k < f.rank(); ++k) m[k][i] = f.ray(a.rays[i]).coords[k];
        if (!common.contains(a.rays[i])) m[f.rank()][i] = 1;
    }
    for (std::size_t j = 0; j < nb; ++j) {
        for (std::size_t k = 0; k < f.rank(); ++k) m[k][na + j] = -Rational(f.ray(b.rays[j]).coords[k]);
        if (!common.contains(b.rays[j])) m[f.rank()][na + j] = 1;
    }
    rhs[f.rank()] = 1;
    return !nonnegative_solution_exists(std::move(m), std::move(rhs));
}

/// Fraction-free Gauss-Jordan on [G | I] in 64-bit arithmetic. Row j of
/// the result is the primitive inward normal of the facet opposite
/// generator j. Empty on overflow or when the generators are dependent.
inline std::optional<std::vector<std::vector<std::int64_t>>> small_facet_normals(
    const std::vector<const std::vector<std::int64_t>*>& gens) {
    const std::size_t r = gens.size();
    std::vector<std::vector<std::int64_t>> m(r, std::vector<std::int64_t>(2 * r, 0));
    for (std::size_t row = 0; row < r; ++row) {
        for (std::size_t j = 0; j < r; ++j) m[row][j] = (*gens[j])[row];
        m[row][r + row] = 1;
    }
    auto reduce = [](std::vector<std::int64_t>& row) {
        std::int64_t g = 0;
        for (auto x : row) g = std::gcd(g, x);
        if (g > 1)
            for (auto& x : row) x /= g;
    };
    for (std::size_t c = 0; c < r; ++c) {
        std::size_t p = c;
        while (p < r && m[p][c] == 0) ++p;
        if (p == r) return std::nullopt;
        std::swap(m[c], m[p]);
        for (std::size_t i = 0; i < r; ++i) {
            if (i == c || m[i][c] == 0) continue;
            const std::int64_t a = m[c][c], b = m[i][c];
            for (std::size_t j = 0; j < 2 * r; ++j) {
                std::int64_t x, y;
                if (__builtin_mul_overflow(a, m[i][j], &x) || __builtin_mul_overflow(b, m[c][j], &y) ||
                    __builtin_sub_overflow(x, y, &m[i][j]))
                    return std::nullopt;
            }
            reduce(m[i]);
        }
    }
    std::vector<std::vector<std::int64_t>> out(r);
    for (std::size_t i = 0; i < r; ++i) {
        out[i].assign(m[i].begin() + static_cast<std::ptrdiff_t>(r), m[i].end());
        reduce(out[i]);
        if (m[i][i] < 0)
            for (auto& x : out[i]) x = -x;
    }
    return out;
}

/// Per facet normal of each full-dimensional simplicial cone, the rays of
/// the fan on its positive side and on the hyperplane, as bit masks.
struct FacetMasks {
    std::size_t words = 0;
    std::vector<bool> full;  // full-dimensional and simplicial
    // cone -> facet -> mask words; empty unless full
    std::vector<std::vector<std::uint64_t>> positive, zero;
    std::vector<std::vector<std::uint64_t>> cone_mask;

    explicit FacetMasks(const Fan& f) : words((f.rays().size() + 63) / 64) {
        const auto& cones = f.max_cones();
        const auto& rays = f.rays();
        constexpr std::int64_t bound = std::int64_t{1} << 20;
        std::vector<std::vector<std::int64_t>> small;
        for (const auto& ray : rays) {
            std::vector<std::int64_t> x;
            for (const auto& c : ray.coords) {
                auto y = to_int64(c);
                if (!y || *y > bound || *y < -bound) break;
                x.push_back(*y);
            }
            if (x.size() != ray.coords.size()) {
                small.clear();
                break;
            }
            small.push_back(std::move(x));
        }
        full.assign(cones.size(), false);
        positive.resize(cones.size());
        zero.resize(cones.size());
        cone_mask.assign(cones.size(), std::vector<std::uint64_t>(words, 0));
        for (std::size_t i = 0; i < cones.size(); ++i) {
            for (auto r : cones[i].rays) cone_mask[i][r / 64] |= std::uint64_t{1} << (r % 64);
            if (cones[i].dim() != f.rank()) continue;
            positive[i].assign(f.rank() * words, 0);
            zero[i].assign(f.rank() * words, 0);
            auto mark = [&](std::size_t j, std::size_t t, int sign) {
                const std::uint64_t bit = std::uint64_t{1} << (t % 64);
                if (sign > 0) positive[i][j * words + t / 64] |= bit;
                if (sign == 0) zero[i][j * words + t / 64] |= bit;
            };
            std::optional<std::vector<std::vector<std::int64_t>>> normals;
            if (!small.empty()) {
                std::vector<const std::vector<std::int64_t>*> gens;
                for (auto r : cones[i].rays) gens.push_back(&small[r]);
                normals = small_facet_normals(gens);
            }
            if (normals) {
                for (std::size_t j = 0; j < normals->size(); ++j)
                    for (std::size_t t = 0; t < rays.size(); ++t) {
                        __int128 h = 0;
                        for (std::size_t k = 0; k < f.rank(); ++k)
                            h += static_cast<__int128>((*normals)[j][k]) * small[t][k];
                        mark(j, t, h > 0 ? 1 : h < 0 ? -1 : 0);
                    }
            } else {
                if (!is_full_simplicial(f, cones[i])) {
                    positive[i].clear();
                    zero[i].clear();
                    continue;
                }
                const auto big = facet_normals(f.generators(cones[i]));
                for (std::size_t j = 0; j < big.size(); ++j)
                    for (std::size_t t = 0; t < rays.size(); ++t) {
                        const Integer h = dot(big[j], f.ray(t));
                        mark(j, t, h > 0 ? 1 : h < 0 ? -1 : 0);
                    }
            }
            full[i] = true;
        }
    }
};

/// Sound but incomplete: repeatedly finds a facet hyperplane of one cone
/// that weakly separates it from what is left of the other, and restricts
/// both to that hyperplane. True once both are cut down to the common rays.
/// Falls back on every facet hyperplane of the fan (`walls`) when the two
/// cones' own facets do not suffice.
class Separator {
public:
    explicit Separator(const Fan& f) : f_(f), fm_(f) {}

    bool full(std::size_t i) const { return fm_.full[i]; }

    bool separated(std::size_t ia, std::size_t ib) {
        const std::size_t w = fm_.words;
        buf_.resize(3 * w);
        std::uint64_t* ra = buf_.data();
        std::uint64_t* rb = ra + w;
        std::uint64_t* common = rb + w;
        for (std::size_t k = 0; k < w; ++k) {
            ra[k] = fm_.cone_mask[ia][k];
            rb[k] = fm_.cone_mask[ib][k];
            common[k] = ra[k] & rb[k];
        }
        auto inside_common = [&](const std::uint64_t* x) {
            for (std::size_t k = 0; k < w; ++k)
                if (x[k] & ~common[k]) return false;
            return true;
        };
        auto finished = [&] { return inside_common(ra) && inside_common(rb); };
        while (!finished())
            if (!cut_by_facet(ia, ra, rb, common) && !cut_by_facet(ib, rb, ra, common)) break;
        if (finished()) return true;
        if (!walls_built_) build_walls();
        for (bool progress = true; progress && !finished();) {
            progress = false;
            for (const auto& h : walls_) {
                if (cut_by_wall(h.positive.data(), h.negative.data(), h.zero.data(), ra, rb) ||
                    cut_by_wall(h.negative.data(), h.positive.data(), h.zero.data(), ra, rb)) {
                    progress = true;
                    if (finished()) break;
                }
            }
        }
        return finished();
    }

private:
    struct Wall {
        std::vector<std::uint64_t> positive, negative, zero;
    };

    // Facet j of a cone is opposite its j-th ray.
    bool cut_by_facet(std::size_t io, std::uint64_t* mine, std::uint64_t* theirs, const std::uint64_t* common) {
        if (fm_.positive[io].empty()) return false;
        const std::size_t w = fm_.words;
        const auto& rays = f_.max_cones()[io].rays;
        for (std::size_t j = 0; j < rays.size(); ++j) {
            const std::size_t r = rays[j];
            const std::uint64_t bit = std::uint64_t{1} << (r % 64);
            if ((common[r / 64] & bit) || !(mine[r / 64] & bit)) continue;
            const std::uint64_t* pos = &fm_.positive[io][j * w];
            bool weak = true;
            for (std::size_t k = 0; k < w && weak; ++k) weak = !(pos[k] & theirs[k]);
            if (!weak) continue;
            mine[r / 64] &= ~bit;
            const std::uint64_t* z = &fm_.zero[io][j * w];
            for (std::size_t k = 0; k < w; ++k) theirs[k] &= z[k];
            return true;
        }
        return false;
    }

    // h >= 0 on what is left of a, h <= 0 on what is left of b, and h
    // nonzero somewhere on one of them: restrict both to h = 0.
    bool cut_by_wall(const std::uint64_t* pos, const std::uint64_t* neg, const std::uint64_t* zero,
                     std::uint64_t* ra, std::uint64_t* rb) const {
        bool strict = false;
        for (std::size_t k = 0; k < fm_.words; ++k) {
            if ((neg[k] & ra[k]) || (pos[k] & rb[k])) return false;
            if ((ra[k] | rb[k]) & ~zero[k]) strict = true;
        }
        if (!strict) return false;
        for (std::size_t k = 0; k < fm_.words; ++k) {
            ra[k] &= zero[k];
            rb[k] &= zero[k];
        }
        return true;
    }

    void build_walls() {
        walls_built_ = true;
        std::set<LatticeVector> seen;
        const std::size_t w = fm_.words;
        for (const auto& c : f_.max_cones()) {
            if (c.dim() != f_.rank()) continue;
            auto g = f_.generators(c);
            if (rank_of(g) != f_.rank()) continue;
            for (auto h : facet_normals(g)) {
                std::size_t lead = 0;
                while (h.coords[lead] == 0) ++lead;
                if (h.coords[lead] < 0)
                    for (auto& x : h.coords) x = -x;
                if (!seen.insert(h).second) continue;
                Wall wall{std::vector<std::uint64_t>(w, 0), std::vector<std::uint64_t>(w, 0),
                          std::vector<std::uint64_t>(w, 0)};
                for (std::size_t t = 0; t < f_.rays().size(); ++t) {
                    const Integer v = dot(h, f_.ray(t));
                    const std::uint64_t bit = std::uint64_t{1} << (t % 64);
                    (v > 0 ? wall.positive : v < 0 ? wall.negative : wall.zero)[t / 64] |= bit;
                }
                walls_.push_back(std::move(wall));
            }
        }
    }

    const Fan& f_;
    FacetMasks fm_;
    std::vector<std::uint64_t> buf_;
    bool walls_built_ = false;
    std::vector<Wall> walls_;
};

}  // namespace detail

struct FanReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

inline FanReport validate_fan(const Fan& f) {
    FanReport report;
    auto& v = report.violations;
    const auto& rays = f.rays();
    for (std::size_t k = 0; k < rays.size(); ++k) {
        if (rays[k].is_zero())
            v.push_back("ray " + std::to_string(k) + " is zero");
        else if (!is_primitive(rays[k]))
            v.push_back("ray " + std::to_string(k) + " " + rays[k].str() + " is not primitive");
    }
    {
        std::map<LatticeVector, std::size_t> seen;
        for (std::size_t k = 0; k < rays.size(); ++k) {
            auto [it, fresh] = seen.emplace(rays[k], k);
            if (!fresh)
                v.push_back("rays " + std::to_string(it->second) + " and " + std::to_string(k) + " coincide");
        }
    }
    std::vector<bool> used(rays.size(), false);
    for (const auto& c : f.max_cones())
        for (auto i : c.rays) used[i] = true;
    for (std::size_t k = 0; k < rays.size(); ++k)
        if (!used[k]) v.push_back("ray " + std::to_string(k) + " lies in no maximal cone");

    const auto& cones = f.max_cones();
    detail::Separator separator(f);
    std::vector<bool> simplicial(cones.size());
    for (std::size_t i = 0; i < cones.size(); ++i) {
        if (separator.full(i)) {
            simplicial[i] = true;
            continue;
        }
        auto g = f.generators(cones[i]);
        simplicial[i] = rank_of(g) == g.size();
        if (!simplicial[i]) v.push_back("cone " + cones[i].str() + " is not simplicial");
    }
    for (std::size_t i = 0; i < cones.size(); ++i) {
        if (!simplicial[i]) continue;
        for (std::size_t j = i + 1; j < cones.size(); ++j) {
            if (!simplicial[j]) continue;
            if (separator.separated(i, j)) continue;
            if (!detail::meets_in_common_face(f, cones[i], cones[j]))
                v.push_back("cones " + cones[i].str() + " and " + cones[j].str() +
                            " overlap outside a common face");
        }
    }
    return report;
}

// -------------------------------------------------------------- comparison

/// Rays sorted lexicographically, cones remapped and sorted.
inline Fan canonical(const Fan& f) {
    const auto& rays = f.rays();
    std::vector<std::size_t> order(rays.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return rays[a] < rays[b]; });
    std::vector<std::size_t> new_index(rays.size());
    std::vector<LatticeVector> sorted_rays;
    std::vector<std::optional<Label>> labels;
    for (std::size_t k = 0; k < order.size(); ++k) {
        new_index[order[k]] = k;
        sorted_rays.push_back(rays[order[k]]);
        labels.push_back(f.labels()[order[k]]);
    }
    std::vector<Cone> cones;
    for (const auto& c : f.max_cones()) {
        std::vector<std::size_t> idx;
        for (auto i : c.rays) idx.push_back(new_index[i]);
        cones.emplace_back(std::move(idx));
    }
    return Fan(f.rank(), std::move(sorted_rays), std::move(cones), std::move(labels));
}

inline bool fan_equal(const Fan& f, const Fan& g) {
    if (f.rank() != g.rank()) throw InputError("fan_equal: rank mismatch");
    if (f.rays().size() != g.rays().size() || f.max_cones().size() != g.max_cones().size()) return false;
    auto cf = canonical(f), cg = canonical(g);
    return cf.rays() == cg.rays() && cf.max_cones() == cg.max_cones();
}

/// True iff every maximal cone of F lies in a cone of G and the supports
/// agree. Support equality is checked cone by cone of G: the cones of F
/// inside a cone gamma of G, of the same dimension, must have all their
/// unpaired walls on the boundary of gamma.
inline bool refines(const Fan& f, const Fan& g) {
    if (f.rank() != g.rank()) throw InputError("refines: rank mismatch");
    const auto& gcones = g.max_cones();
    // coords[c][r]: coordinates of F-ray r in the generators of G-cone c,
    // or empty when r is outside that cone.
    std::vector<std::vector<std::optional<std::vector<Rational>>>> coords(gcones.size());
    for (std::size_t c = 0; c < gcones.size(); ++c) {
        auto gens = g.generators(gcones[c]);
        coords[c].resize(f.rays().size());
        for (std::size_t r = 0; r < f.rays().size(); ++r) {
            auto x = coordinates_in(gens, f.ray(r));
            if (x && std::all_of(x->begin(), x->end(), [](const Rational& q) { return q >= 0; }))
                coords[c][r] = std::move(x);
        }
    }
    std::vector<std::vector<const Cone*>> inside(gcones.size());
    for (const auto& cone : f.max_cones()) {
        bool placed = false;
        for (std::size_t c = 0; c < gcones.size(); ++c) {
            bool all_in = std::all_of(cone.rays.begin(), cone.rays.end(),
                                      [&](std::size_t r) { return coords[c][r].has_value(); });
            if (!all_in) continue;
            placed = true;
            if (cone.dim() == gcones[c].dim()) inside[c].push_back(&cone);
        }
        if (!placed) return false;
    }
    for (std::size_t c = 0; c < gcones.size(); ++c) {
        if (gcones[c].dim() == 0) continue;
        if (inside[c].empty()) return false;
        std::map<Cone, int> wall_count;
        for (const Cone* cone : inside[c])
            for (std::size_t drop = 0; drop < cone->dim(); ++drop) {
                Cone wall;
                for (std::size_t k = 0; k < cone->dim(); ++k)
                    if (k != drop) wall.rays.push_back(cone->rays[k]);
                ++wall_count[wall];
            }
        for (const auto& [wall, count] : wall_count) {
            if (count >= 2) continue;
            bool on_boundary = false;
            for (std::size_t s = 0; s < gcones[c].dim() && !on_boundary; ++s)
                on_boundary = std::all_of(wall.rays.begin(), wall.rays.end(),
                                          [&](std::size_t r) { return (*coords[c][r])[s] == 0; });
            if (!on_boundary) return false;
        }
    }
    return true;
}

}  // namespace nestofan
