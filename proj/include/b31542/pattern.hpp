#ifndef B31542_PATTERN_HPP
#define B31542_PATTERN_HPP

#include <optional>

#include "b31542/perm.hpp"

namespace b31542 {

/// 1-based positions a < b < c of a descent triple p(a) > p(b) > p(c) that
/// no earlier pair q1 < q2 < a rescues, i.e. no p(q2) < p(c) < p(q1) < p(b)
/// to the left of a.
struct Witness {
    int a = 0;
    int b = 0;
    int c = 0;
    bool operator==(const Witness&) const = default;
};

struct BruteResult {
    bool avoider = false;
    std::optional<Witness> witness;
};

/// Definition-level checker: p is an avoider iff every occurrence of the
/// pattern 542 extends on the left to an occurrence of 31542. Scans all
/// descent triples; on failure reports the lexicographically smallest
/// unrescued one.
BruteResult avoids_brute(const Permutation& p);

/// True iff within every horizontal strip the non-maximum values appear in
/// increasing order of position.
bool strips_rising(const Permutation& p);

/// Equivalent to avoids_brute(p).avoider, in O(n log n): deletes the
/// maxima that do not initiate descents, standardizes the rest, and tests
/// that the strips of the result are rising.
bool avoids_fast(const Permutation& p);

}  // namespace b31542

#endif
