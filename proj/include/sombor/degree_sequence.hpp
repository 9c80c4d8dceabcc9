#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sombor/error.hpp"
#include "sombor/weight_math.hpp"

namespace sombor {

/// Degrees of the non-pendant vertices of a tree, sorted non-increasing.
/// Pendant vertices are implied by the handshake identity and never stored.
/// The empty sequence stands for K2, the only tree without an inner vertex.
class DegreeSequence {
public:
    DegreeSequence() = default;

    /// Drops 1s and sorts the rest non-increasing. Rejects entries <= 0.
    static DegreeSequence normalize(std::span<const Degree> raw) {
        DegreeSequence seq;
        seq.degrees_.reserve(raw.size());
        for (Degree d : raw) {
            if (d <= 0) {
                throw Error(ErrorKind::invalid_argument,
                            "degree sequence entries must be positive, got " + std::to_string(d));
            }
            if (d > 1) seq.degrees_.push_back(d);
        }
        std::sort(seq.degrees_.begin(), seq.degrees_.end(), std::greater<>());
        return seq;
    }

    static DegreeSequence normalize(std::initializer_list<Degree> raw) {
        return normalize(std::span<const Degree>(raw.begin(), raw.size()));
    }

    /// Parses comma- and/or whitespace-separated integers, e.g. "4,3,3,2".
    static DegreeSequence parse(std::string_view text) {
        std::vector<Degree> raw;
        std::size_t i = 0;
        auto is_sep = [](char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)); };
        while (i < text.size()) {
            if (is_sep(text[i])) {
                ++i;
                continue;
            }
            std::size_t j = i;
            if (text[j] == '-' || text[j] == '+') ++j;
            const std::size_t digits_begin = j;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            if (j == digits_begin || (j < text.size() && !is_sep(text[j])) || j - digits_begin > 12) {
                throw Error(ErrorKind::invalid_argument,
                            "malformed degree sequence near '" + std::string(text.substr(i, j - i + 1)) + "'");
            }
            raw.push_back(std::stoll(std::string(text.substr(i, j - i))));
            i = j;
        }
        return normalize(raw);
    }

    std::span<const Degree> degrees() const noexcept { return degrees_; }
    std::size_t size() const noexcept { return degrees_.size(); }
    bool empty() const noexcept { return degrees_.empty(); }
    Degree operator[](std::size_t i) const { return degrees_[i]; }
    Degree max_degree() const noexcept { return degrees_.empty() ? 1 : degrees_.front(); }

    /// Sum of the inner degrees.
    std::int64_t degree_sum() const noexcept {
        std::int64_t s = 0;
        for (Degree d : degrees_) s += d;
        return s;
    }

    /// Number of pendant vertices in any tree realizing the sequence:
    /// sum(d_i) - 2k + 2. The empty sequence gives 2 (K2).
    std::int64_t leaf_count() const noexcept {
        return degree_sum() - 2 * static_cast<std::int64_t>(degrees_.size()) + 2;
    }

    std::int64_t total_vertices() const noexcept {
        return static_cast<std::int64_t>(degrees_.size()) + leaf_count();
    }

    /// Every vertex degree in label order: inner vertices 0..k-1 then leaves.
    std::vector<Degree> full_degrees() const {
        std::vector<Degree> all(degrees_.begin(), degrees_.end());
        all.resize(static_cast<std::size_t>(total_vertices()), 1);
        return all;
    }

    std::string to_string() const {
        std::string out = "(";
        for (std::size_t i = 0; i < degrees_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(degrees_[i]);
        }
        return out + ")";
    }

    friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;
    friend auto operator<=>(const DegreeSequence&, const DegreeSequence&) = default;

    friend std::ostream& operator<<(std::ostream& os, const DegreeSequence& d) { return os << d.to_string(); }

private:
    std::vector<Degree> degrees_;
};

/// All inner-degree sequences whose realizing trees have at most `max_vertices`
/// vertices, in lexicographic order of (total_vertices, sequence descending).
/// Since total_vertices = 2 + sum(d_i - 1), this walks the integer partitions of
/// 0..max_vertices-2 with parts d_i - 1.
inline std::vector<DegreeSequence> sequences_up_to(std::int64_t max_vertices) {
    std::vector<DegreeSequence> out;
    std::vector<Degree> current;
    std::function<void(std::int64_t, std::int64_t)> rec = [&](std::int64_t remaining, std::int64_t max_part) {
        if (remaining == 0) {
            out.push_back(DegreeSequence::normalize(current));
            return;
        }
        for (std::int64_t p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p + 1);
            rec(remaining - p, p);
            current.pop_back();
        }
    };
    for (std::int64_t n = 2; n <= max_vertices; ++n) rec(n - 2, n - 2);
    return out;
}

}  // namespace sombor
