#include "b31542/census.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "b31542/bijection.hpp"
#include "b31542/pattern.hpp"

namespace b31542 {

namespace {

bool passes(const Permutation& p, Checker checker) {
    return checker == Checker::brute ? avoids_brute(p).avoider : avoids_fast(p);
}

void check_guard(int n, bool override_guard, const char* what) {
    if (n < 0) throw std::invalid_argument("negative length");
    if (n > census_guard_n && !override_guard)
        throw std::runtime_error(
            std::string(what) + ": n = " + std::to_string(n) +
            " exceeds the exhaustive-search guard (" +
            std::to_string(census_guard_n) +
            "); the scan grows by a factor of n per step, pass the override "
            "to proceed anyway");
}

}  // namespace

AvoiderStream::AvoiderStream(int n, Checker checker) : checker_(checker) {
    if (n < 0) throw std::invalid_argument("negative length");
    cur_.resize(static_cast<size_t>(n));
    std::iota(cur_.begin(), cur_.end(), 1);
}

bool AvoiderStream::next(Permutation& out) {
    while (!done_) {
        if (started_) {
            if (!std::next_permutation(cur_.begin(), cur_.end())) {
                done_ = true;
                break;
            }
        } else {
            started_ = true;
        }
        Permutation p = Permutation::from_oneline(cur_);
        if (passes(p, checker_)) {
            out = std::move(p);
            return true;
        }
    }
    return false;
}

CensusTable census(int n, Checker checker, int threads, bool override_guard) {
    check_guard(n, override_guard, "census");
    if (threads < 1) throw std::invalid_argument("threads must be >= 1");
    CensusTable table;
    table.n = n;
    table.checker = checker;
    table.total = 0;

    if (threads == 1 || n < 2) {
        AvoiderStream stream(n, checker);
        Permutation p;
        while (stream.next(p)) {
            MaximaCounts mc = classify_maxima(p);
            table.cells[{mc.j, mc.k}] += 1;
            ++table.total;
        }
        return table;
    }

    // Fix the first entry per work item; the merged tallies cannot depend
    // on scheduling because merging is pure addition.
    std::vector<std::map<std::pair<int, int>, BigCount>> partial(
        static_cast<size_t>(n));
    std::atomic<int> next_first{1};
    auto worker = [&]() {
        while (true) {
            int first = next_first.fetch_add(1);
            if (first > n) return;
            std::vector<int> cur;
            cur.reserve(static_cast<size_t>(n));
            cur.push_back(first);
            for (int v = 1; v <= n; ++v)
                if (v != first) cur.push_back(v);
            auto& local = partial[static_cast<size_t>(first) - 1];
            while (true) {
                Permutation p = Permutation::from_oneline(cur);
                if (passes(p, checker)) {
                    MaximaCounts mc = classify_maxima(p);
                    local[{mc.j, mc.k}] += 1;
                }
                if (!std::next_permutation(cur.begin() + 1, cur.end())) break;
            }
        }
    };
    std::vector<std::thread> pool;
    const int pool_size = std::min(threads, n);
    pool.reserve(static_cast<size_t>(pool_size));
    for (int t = 0; t < pool_size; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    for (const auto& local : partial)
        for (const auto& [jk, count] : local) {
            table.cells[jk] += count;
            table.total += count;
        }
    return table;
}

CensusComparison compare_census(int n, Checker checker, int threads,
                                bool override_guard) {
    CensusComparison cmp;
    cmp.table = census(n, checker, threads, override_guard);
    cmp.all_match = true;
    for (int j = 0; j <= n; ++j)
        for (int k = 0; j + k <= n; ++k) {
            BigCount expected = theorem1_term(n, j, k);
            auto it = cmp.table.cells.find({j, k});
            const bool present = it != cmp.table.cells.end();
            if (!present && expected == 0) continue;
            CensusCell cell;
            cell.j = j;
            cell.k = k;
            cell.observed = present ? it->second : BigCount(0);
            cell.expected = expected;
            // A cell the formula sends to zero must be absent outright.
            cell.match = cell.observed == expected && (!present || expected != 0);
            if (!cell.match) cmp.all_match = false;
            cmp.cells.push_back(std::move(cell));
        }
    return cmp;
}

RoundtripReport roundtrip_audit(int n, bool override_guard) {
    check_guard(n, override_guard, "audit");
    RoundtripReport report;
    report.n = n;
    report.rows.resize(static_cast<size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) {
        auto& row = report.rows[static_cast<size_t>(j)];
        row.j = j;
        row.class_size = 0;
        row.pair_count = 0;
        row.decode_encode_ok = true;
        row.encode_decode_ok = true;
    }

    // Every avoider whose maxima all initiate descents must survive a
    // round trip through its (code, partition) pair.
    AvoiderStream stream(n, Checker::fast);
    Permutation p;
    while (stream.next(p)) {
        MaximaCounts mc = classify_maxima(p);
        if (mc.k != 0) continue;
        auto& row = report.rows[static_cast<size_t>(mc.j)];
        row.class_size += 1;
        try {
            EncodedPair pair = encode(p);
            if (!(decode(pair.code, pair.partition) == p))
                row.decode_encode_ok = false;
        } catch (const std::exception&) {
            row.decode_encode_ok = false;
        }
    }

    // Every (code, partition) pair must decode into that class and come
    // back out unchanged; the pair count pins down the cardinality.
    for (int j = 0; j <= n; ++j) {
        auto& row = report.rows[static_cast<size_t>(j)];
        const int m = n - j;
        CodeStream codes(j);
        InversionCode code;
        while (codes.next(code)) {
            CanonicalPartitionStream parts(m, j);
            CanonicalPartition part;
            while (parts.next(part)) {
                row.pair_count += 1;
                try {
                    Permutation t = decode(code, part);
                    MaximaCounts mc = classify_maxima(t);
                    EncodedPair back = encode(t);
                    bool good = t.size() == n && avoids_brute(t).avoider &&
                                mc.j == j && mc.k == 0 && back.code == code &&
                                back.partition == part;
                    if (!good) row.encode_decode_ok = false;
                } catch (const std::exception&) {
                    row.encode_decode_ok = false;
                }
            }
        }
        row.expected = factorial(j) * stirling2(m, j);
        row.cardinality_ok =
            row.class_size == row.expected && row.pair_count == row.expected;
    }

    report.ok = true;
    for (const auto& row : report.rows)
        if (!row.decode_encode_ok || !row.encode_decode_ok ||
            !row.cardinality_ok)
            report.ok = false;
    return report;
}

std::string census_json(const CensusTable& table) {
    nlohmann::ordered_json out;
    out["n"] = table.n;
    out["checker"] = table.checker == Checker::fast ? "fast" : "brute";
    auto cells = nlohmann::ordered_json::array();
    for (const auto& [jk, count] : table.cells) {
        nlohmann::ordered_json cell;
        cell["j"] = jk.first;
        cell["k"] = jk.second;
        cell["count"] = count.str();
        cells.push_back(std::move(cell));
    }
    out["cells"] = std::move(cells);
    out["total"] = table.total.str();
    return out.dump();
}

}  // namespace b31542
