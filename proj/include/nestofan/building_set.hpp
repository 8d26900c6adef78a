#pragma once

// Building sets over a simplex (plain) or over the fan of a simple polytope
// (over_polytope). Members are stored as sorted positions into `ground`;
// ground position k corresponds to ray k of the base fan.

#include "fan.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace nestofan {

using Subset = std::vector<std::size_t>;

enum class BuildingMode { plain, over_polytope };

class BuildingSet {
public:
    BuildingSet(std::vector<Label> ground, std::set<Subset> members, BuildingMode mode,
                std::optional<Fan> reference = std::nullopt)
        : ground_(std::move(ground)), members_(std::move(members)), mode_(mode) {
        {
            auto sorted = ground_;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                throw InputError("building set ground has repeated labels");
        }
        for (const auto& m : members_) {
            if (m.empty()) throw InputError("building set member is empty");
            if (!std::is_sorted(m.begin(), m.end()) || std::adjacent_find(m.begin(), m.end()) != m.end())
                throw InputError("building set member is not a sorted set");
            if (m.back() >= ground_.size()) throw InputError("building set member leaves the ground set");
        }
        if (mode_ == BuildingMode::over_polytope) {
            if (!reference) throw InputError("over_polytope building set needs a reference fan");
            if (reference->rays().size() < ground_.size())
                throw InputError("reference fan has fewer rays than the ground set");
            for (std::size_t k = 0; k < ground_.size(); ++k)
                if (reference->labels()[k] != ground_[k])
                    throw InputError("reference fan ray " + std::to_string(k) + " is not labeled " +
                                     ground_[k].str());
            base_ = std::move(reference);
        } else if (ground_.size() >= 2) {
            base_ = simplex_fan(ground_);
        }
    }

    const std::vector<Label>& ground() const { return ground_; }
    const std::set<Subset>& members() const { return members_; }
    BuildingMode mode() const { return mode_; }

    /// Simplex fan of the ground set (plain) or the reference fan.
    const Fan& base_fan() const {
        if (!base_) throw InputError("a one-element ground set has no base fan");
        return *base_;
    }

    bool contains(const Subset& s) const { return members_.count(s) > 0; }

    /// The face F_I is nonempty iff sigma_I is a cone of the base fan.
    bool face_nonempty(const Subset& s) const {
        if (!base_) return s.size() < ground_.size();
        return base_->has_cone(Cone(s));
    }

    Subset subset_of(const std::vector<Label>& labels) const {
        Subset s;
        for (const auto& l : labels) {
            auto it = std::find(ground_.begin(), ground_.end(), l);
            if (it == ground_.end()) throw InputError("label " + l.str() + " is not in the ground set");
            s.push_back(static_cast<std::size_t>(it - ground_.begin()));
        }
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        return s;
    }

    std::vector<Label> labels_of(const Subset& s) const {
        std::vector<Label> out;
        for (auto k : s) out.push_back(ground_[k]);
        return out;
    }

    std::vector<Label> sorted_labels_of(const Subset& s) const {
        auto out = labels_of(s);
        std::sort(out.begin(), out.end());
        return out;
    }

    friend bool operator==(const BuildingSet& a, const BuildingSet& b) {
        return a.ground_ == b.ground_ && a.members_ == b.members_ && a.mode_ == b.mode_;
    }

private:
    std::vector<Label> ground_;
    std::set<Subset> members_;
    BuildingMode mode_;
    std::optional<Fan> base_;
};

inline Subset subset_union(const Subset& a, const Subset& b) {
    Subset u;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
    return u;
}

inline bool subsets_overlap(const Subset& a, const Subset& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j) return true;
        if (*i < *j) ++i; else ++j;
    }
    return false;
}

inline std::string subset_str(const BuildingSet& b, const Subset& s) {
    std::string out = "{";
    for (std::size_t k = 0; k < s.size(); ++k) out += (k ? "," : "") + b.ground()[s[k]].str();
    return out + "}";
}

struct BuildingSetReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

inline BuildingSetReport validate_building_set(const BuildingSet& b) {
    BuildingSetReport report;
    auto& v = report.violations;
    for (std::size_t k = 0; k < b.ground().size(); ++k)
        if (!b.contains(Subset{k})) v.push_back("missing singleton {" + b.ground()[k].str() + "}");
    const bool over = b.mode() == BuildingMode::over_polytope;
    if (over)
        for (const auto& m : b.members())
            if (!b.face_nonempty(m)) v.push_back("member " + subset_str(b, m) + " has an empty face");
    std::set<Subset> reported;
    for (auto i = b.members().begin(); i != b.members().end(); ++i)
        for (auto j = std::next(i); j != b.members().end(); ++j) {
            if (!subsets_overlap(*i, *j)) continue;
            Subset u = subset_union(*i, *j);
            if (b.contains(u) || reported.count(u)) continue;
            if (over && !b.face_nonempty(u)) continue;
            reported.insert(u);
            v.push_back("union " + subset_str(b, *i) + " u " + subset_str(b, *j) + " = " + subset_str(b, u) +
                        " is missing");
        }
    return report;
}

/// All nonempty subsets of the ground set, plain mode.
inline BuildingSet complete_building_set(std::vector<Label> ground) {
    const std::size_t m = ground.size();
    if (m == 0) throw InputError("complete building set needs a nonempty ground set");
    if (m > 20) throw InputError("ground set too large for the complete building set");
    std::set<Subset> members;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
        Subset s;
        for (std::size_t k = 0; k < m; ++k)
            if (mask >> k & 1) s.push_back(k);
        members.insert(std::move(s));
    }
    return BuildingSet(std::move(ground), std::move(members), BuildingMode::plain);
}

inline BuildingSet complete_building_set(long first, long last) {
    std::vector<Label> ground;
    for (long i = first; i <= last; ++i) ground.push_back(Label::simple(i));
    return complete_building_set(std::move(ground));
}

/// Inclusion-maximal members.
inline std::vector<Subset> connected_components(const BuildingSet& b) {
    std::vector<Subset> out;
    for (const auto& m : b.members()) {
        bool maximal = std::none_of(b.members().begin(), b.members().end(), [&](const Subset& other) {
            return other.size() > m.size() && std::includes(other.begin(), other.end(), m.begin(), m.end());
        });
        if (maximal) out.push_back(m);
    }
    return out;
}

inline bool is_connected(const BuildingSet& b) {
    auto comps = connected_components(b);
    return comps.size() == 1 && comps.front().size() == b.ground().size();
}

}  // namespace nestofan
