#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace civc {

/// A finite non-decreasing sequence of positive integers: the multi-degree
/// of a complete intersection in projective space.
///
/// The empty sequence is a valid value (it appears as the complement a''
/// when a sub-sequence a' exhausts a).  Sites that additionally require
/// every entry >= 2 enforce that themselves.
///
/// Values are immutable after construction and cheap to copy; comparison
/// is lexicographic on the expanded entry list.
class MultiDegree {
public:
    MultiDegree() = default;

    /// Sorts `entries` into non-decreasing order.  Throws
    /// std::invalid_argument on entries < 1.
    explicit MultiDegree(std::vector<int> entries);
    MultiDegree(std::initializer_list<int> entries);

    [[nodiscard]] bool empty() const { return entries_.empty(); }
    [[nodiscard]] int length() const { return static_cast<int>(entries_.size()); }
    [[nodiscard]] const std::vector<int>& entries() const { return entries_; }
    [[nodiscard]] int operator[](int i) const { return entries_[static_cast<size_t>(i)]; }

    /// First (smallest) entry.  Requires non-empty.
    [[nodiscard]] int min() const;
    /// Last (largest) entry.  Requires non-empty.
    [[nodiscard]] int max() const;
    [[nodiscard]] long long sum() const;
    /// Number of entries equal to v.
    [[nodiscard]] int count(int v) const;

    /// True if `other` is a sub-multiset of this sequence.
    [[nodiscard]] bool contains_multiset(const MultiDegree& other) const;
    /// Multiset difference this \ other.  Throws if `other` is not a
    /// sub-multiset.
    [[nodiscard]] MultiDegree multiset_minus(const MultiDegree& other) const;

    bool operator==(const MultiDegree&) const = default;
    auto operator<=>(const MultiDegree&) const = default;

    /// Canonical text form with caret repetition, e.g. "(2^4,3^3,4)".
    /// A value repeated >= 2 times is always printed with a caret; the
    /// empty sequence prints as "()".
    [[nodiscard]] std::string str() const;

    /// Parses both the flat form "(2,2,2,2,3,3,3,4)" and the caret form
    /// "(2^4,3^3,4)"; whitespace between tokens is ignored.  The result is
    /// normalized into non-decreasing order.  Throws std::invalid_argument
    /// on malformed input, entries < 1, or repetition counts < 1.
    static MultiDegree parse(std::string_view text);

private:
    std::vector<int> entries_;
};

/// Sorts a raw entry list into a MultiDegree (multiset preserved).
MultiDegree normalize(std::vector<int> raw);

/// Merge operator: sorted multiset union of the two sequences.
MultiDegree uplus(const MultiDegree& a, const MultiDegree& b);

/// Expansion operator sending each entry a_i to the run (2, 3, ..., a_i),
/// merged over all entries.  Requires min(a) >= 2 when a is non-empty;
/// the result has length sum(a) - |a|.
MultiDegree bang(const MultiDegree& a);

struct TailCounts {
    int t_a = 0;  ///< entries of a equal to max(a)
    int t_b = 0;  ///< entries of b equal to max(a)
};

/// Counts occurrences of max(a) in a and in b.  Requires a non-empty.
TailCounts tail_multiplicities(const MultiDegree& a, const MultiDegree& b);

/// A pair (n, a): the ambient projective dimension and the multi-degree of
/// a Fano complete intersection.  Validates n >= 4, min(a) >= 2 and
/// sum(a) <= n on construction.
struct PairParams {
    int n = 0;
    MultiDegree a;

    PairParams(int n, MultiDegree a);

    /// Dimension of the complete intersection, m = n - |a|.
    [[nodiscard]] int m() const { return n - a.length(); }

    bool operator==(const PairParams&) const = default;
};

/// Hodge level k = floor((n - sum(a)) / max(a)) + 1, the coniveau bound
/// coming from the vanishing pattern of the middle-cohomology Hodge
/// numbers.  Always >= 1 for valid PairParams.
int hodge_level_k(const PairParams& p);

}  // namespace civc
