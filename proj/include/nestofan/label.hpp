#pragma once

#include "arith.hpp"

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace nestofan {

/// Name of a ray or ground-set element: either a plain index `i`, or the
/// pair `(i, j)` naming the j-th copy of i in a disjoint union [n]^{⊔d}.
struct Label {
    long item = 0;
    std::optional<long> copy;

    static Label simple(long i) { return Label{i, std::nullopt}; }
    static Label pair(long i, long j) { return Label{i, j}; }

    bool is_pair() const { return copy.has_value(); }

    friend bool operator==(const Label&, const Label&) = default;
    friend auto operator<=>(const Label& a, const Label& b) {
        if (auto c = a.item <=> b.item; c != 0) return c;
        if (auto c = a.copy.has_value() <=> b.copy.has_value(); c != 0) return c;
        return a.copy.value_or(0) <=> b.copy.value_or(0);
    }

    std::string str() const {
        return copy ? std::to_string(item) + ":" + std::to_string(*copy) : std::to_string(item);
    }

    /// Parses "i" or "i:j".
    static Label parse(std::string_view text) {
        auto parse_long = [&](std::string_view part) -> long {
            if (part.empty()) throw InputError("malformed label '" + std::string(text) + "'");
            std::size_t start = part[0] == '-' ? 1 : 0;
            if (start == part.size()) throw InputError("malformed label '" + std::string(text) + "'");
            for (std::size_t k = start; k < part.size(); ++k)
                if (part[k] < '0' || part[k] > '9')
                    throw InputError("malformed label '" + std::string(text) + "'");
            return std::stol(std::string(part));
        };
        auto colon = text.find(':');
        if (colon == std::string_view::npos) return simple(parse_long(text));
        return pair(parse_long(text.substr(0, colon)), parse_long(text.substr(colon + 1)));
    }
};

}  // namespace nestofan
