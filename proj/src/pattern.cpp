#include "b31542/pattern.hpp"

#include <vector>

#include "b31542/bijection.hpp"

namespace b31542 {

namespace {

/// True iff some q1 < q2 < a has p(q2) < p(c) < p(q1) < p(b), completing
/// the descent triple at (a, b, c) to the unbarred pattern.
bool rescued(const std::vector<int>& v, int a, int b, int c) {
    for (int q1 = 0; q1 < a; ++q1) {
        if (v[static_cast<size_t>(q1)] <= v[static_cast<size_t>(c)] ||
            v[static_cast<size_t>(q1)] >= v[static_cast<size_t>(b)])
            continue;
        for (int q2 = q1 + 1; q2 < a; ++q2)
            if (v[static_cast<size_t>(q2)] < v[static_cast<size_t>(c)]) return true;
    }
    return false;
}

}  // namespace

BruteResult avoids_brute(const Permutation& p) {
    const std::vector<int>& v = p.values();
    const int n = p.size();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (v[static_cast<size_t>(b)] >= v[static_cast<size_t>(a)]) continue;
            for (int c = b + 1; c < n; ++c) {
                if (v[static_cast<size_t>(c)] >= v[static_cast<size_t>(b)]) continue;
                if (!rescued(v, a, b, c))
                    return {false, Witness{a + 1, b + 1, c + 1}};
            }
        }
    return {true, std::nullopt};
}

bool strips_rising(const Permutation& p) {
    StripStructure ss = strip_structure(p);
    std::vector<int> last(static_cast<size_t>(ss.maxima_count()) + 1, 0);
    for (int pos = 1; pos <= p.size(); ++pos) {
        int v = p.at(pos);
        if (ss.is_maximum_value(v)) continue;
        int strip = ss.strip_of_value(v);
        if (last[static_cast<size_t>(strip)] > v) return false;
        last[static_cast<size_t>(strip)] = v;
    }
    return true;
}

bool avoids_fast(const Permutation& p) {
    return strips_rising(reduce(p).reduced);
}

}  // namespace b31542
