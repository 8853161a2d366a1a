// Acceptance gate: one pass/fail line per criterion, exit code equal to the
// number of failures. Each criterion re-derives its expectations from scratch
// rather than trusting the unit suites.

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "b31542/bijection.hpp"
#include "b31542/census.hpp"
#include "b31542/counting.hpp"
#include "b31542/pattern.hpp"
#include "b31542/perm.hpp"

using namespace b31542;

namespace {

int failures = 0;

void report(const std::string& name, bool ok, double seconds) {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << " (" << std::fixed
              << std::setprecision(2) << seconds << "s)\n";
    if (!ok) ++failures;
}

template <typename Fn>
void criterion(const std::string& name, Fn body) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body();
    } catch (const std::exception& e) {
        std::cout << "  unexpected exception: " << e.what() << "\n";
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    report(name, ok, seconds);
}

template <typename Fn>
void for_each_permutation(int n, Fn visit) {
    std::vector<int> values(static_cast<size_t>(n));
    std::iota(values.begin(), values.end(), 1);
    do {
        visit(Permutation::from_oneline(values));
    } while (std::next_permutation(values.begin(), values.end()));
}

BigCount enumerate_brute(int n) {
    AvoiderStream stream(n, Checker::brute);
    Permutation p;
    BigCount total = 0;
    while (stream.next(p)) ++total;
    return total;
}

bool counts_match_both_formulas() {
    const BigCount expected[] = {1, 2, 5, 14, 43, 144};
    bool ok = true;
    for (int n = 1; n <= 6; ++n) {
        BigCount enumerated = enumerate_brute(n);
        BigCount by_sum = count_avoiders(n);
        BigCount by_closed_form = a_formula(n);
        if (enumerated != expected[n - 1] || by_sum != enumerated ||
            by_closed_form != enumerated) {
            std::cout << "  n=" << n << ": enumerated " << enumerated.str()
                      << ", double sum " << by_sum.str() << ", closed form "
                      << by_closed_form.str() << "\n";
            ok = false;
        }
    }
    return ok;
}

bool census_cells_match() {
    bool ok = true;
    for (int n = 1; n <= 9; ++n) {
        CensusComparison cmp = compare_census(n, Checker::fast);
        if (!cmp.all_match) {
            ok = false;
            for (const CensusCell& cell : cmp.cells)
                if (!cell.match)
                    std::cout << "  n=" << n << " (j=" << cell.j
                              << ",k=" << cell.k << "): observed "
                              << cell.observed.str() << " expected "
                              << cell.expected.str() << "\n";
        }
    }
    return ok;
}

bool checkers_agree() {
    bool ok = true;
    for (int n = 0; n <= 7; ++n)
        for_each_permutation(n, [&](const Permutation& p) {
            if (avoids_brute(p).avoider != avoids_fast(p)) {
                std::cout << "  disagreement on " << format_permutation(p)
                          << "\n";
                ok = false;
            }
        });
    std::mt19937 rng(0x31542u);
    for (int n = 8; n <= 11; ++n) {
        std::vector<int> values(static_cast<size_t>(n));
        std::iota(values.begin(), values.end(), 1);
        for (int trial = 0; trial < 10000; ++trial) {
            std::shuffle(values.begin(), values.end(), rng);
            Permutation p = Permutation::from_oneline(values);
            if (avoids_brute(p).avoider != avoids_fast(p)) {
                std::cout << "  disagreement on " << format_permutation(p)
                          << "\n";
                ok = false;
            }
        }
    }
    return ok;
}

bool bijection_audits_pass() {
    bool ok = true;
    for (int n = 0; n <= 9; ++n) {
        RoundtripReport audit = roundtrip_audit(n);
        if (audit.ok) continue;
        ok = false;
        for (const RoundtripRow& row : audit.rows)
            if (!row.decode_encode_ok || !row.encode_decode_ok ||
                !row.cardinality_ok)
                std::cout << "  n=" << n << " j=" << row.j << ": class "
                          << row.class_size.str() << " pairs "
                          << row.pair_count.str() << " expected "
                          << row.expected.str() << "\n";
    }
    return ok;
}

bool worked_example_is_exact() {
    Permutation p = parse_permutation("3 1 7 2 12 4 8 5 13 9 6 10 11");
    Decomposition d = full_encode(p);
    bool ok = true;
    if (!d.special.empty()) {
        std::cout << "  expected no deleted entries, got "
                  << d.special.size() << "\n";
        ok = false;
    }
    if (format_code(d.code) != "(1,1,2,3)") {
        std::cout << "  code " << format_code(d.code) << "\n";
        ok = false;
    }
    if (format_partition(d.partition) != "1/5 7 2/4 8 9 3/6") {
        std::cout << "  partition " << format_partition(d.partition) << "\n";
        ok = false;
    }
    if (full_decode(d, 13) != p) {
        std::cout << "  decode returned "
                  << format_permutation(full_decode(d, 13)) << "\n";
        ok = false;
    }
    return ok;
}

bool identity_chain_holds() {
    bool ok = true;
    for (int n = 1; n <= 150; ++n)
        if (!verify_identity(n).all_equal) {
            std::cout << "  chain breaks at n=" << n << "\n";
            ok = false;
        }
    for (int n = 0; n <= 40; ++n)
        for (int l = 0; l <= n; ++l)
            for (int i = 0; i <= l; ++i)
                if (!inner_sum_check(n, l, i).equal) {
                    std::cout << "  inner sum fails at n=" << n << " l=" << l
                              << " i=" << i << "\n";
                    ok = false;
                }
    return ok;
}

bool reduction_preserves_verdict() {
    bool ok = true;
    for (int n = 0; n <= 7; ++n)
        for_each_permutation(n, [&](const Permutation& p) {
            Reduction r = reduce(p);
            bool before = avoids_brute(p).avoider;
            bool after = avoids_brute(r.reduced).avoider;
            if (before != after) {
                std::cout << "  verdict flips on " << format_permutation(p)
                          << "\n";
                ok = false;
                return;
            }
            if (before && unreduce(r.special, r.reduced, p.size()) != p) {
                std::cout << "  round trip loses " << format_permutation(p)
                          << "\n";
                ok = false;
            }
        });
    return ok;
}

}  // namespace

int main() {
    criterion("1: brute counts for n = 1..6 equal 1,2,5,14,43,144 and both formulas",
              counts_match_both_formulas);
    criterion("2: fast census matches the per-cell product formula, n = 1..9",
              census_cells_match);
    criterion("3: checkers agree on all of S_n for n <= 7 and 10^4 random draws for n = 8..11",
              checkers_agree);
    criterion("4: bijection round trips and class sizes for n <= 9",
              bijection_audits_pass);
    criterion("5: the 13-entry worked example encodes and decodes exactly",
              worked_example_is_exact);
    criterion("6: identity chain for n = 1..150 and inner sums for n <= 40",
              identity_chain_holds);
    criterion("7: reduction preserves the verdict and inverts on avoiders, n <= 7",
              reduction_preserves_verdict);
    std::cout << "acceptance: " << (7 - failures) << "/7 passed\n";
    return failures;
}
