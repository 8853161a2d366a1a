#include "b31542/counting.hpp"

#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace b31542 {

namespace {

std::mutex memo_mutex;

}  // namespace

BigCount stirling2(int n, int j) {
    if (n < 0 || j < 0) throw std::invalid_argument("stirling2 requires n, j >= 0");
    if (j > n) return 0;
    static std::vector<std::vector<BigCount>> rows = {{BigCount(1)}};
    std::lock_guard<std::mutex> lock(memo_mutex);
    while (static_cast<int>(rows.size()) <= n) {
        const auto& prev = rows.back();
        const size_t a = rows.size();
        std::vector<BigCount> row(a + 1);
        row[0] = 0;
        for (size_t b = 1; b <= a; ++b) {
            row[b] = prev[b - 1];
            if (b < a) row[b] += BigCount(b) * prev[b];
        }
        rows.push_back(std::move(row));
    }
    return rows[static_cast<size_t>(n)][static_cast<size_t>(j)];
}

BigCount binomial(long long n, long long k) {
    if (n < 0 || k < 0) throw std::invalid_argument("binomial requires n, k >= 0");
    if (k > n) return 0;
    static std::vector<std::vector<BigCount>> rows = {{BigCount(1)}};
    std::lock_guard<std::mutex> lock(memo_mutex);
    while (static_cast<long long>(rows.size()) <= n) {
        const auto& prev = rows.back();
        const size_t a = rows.size();
        std::vector<BigCount> row(a + 1);
        row[0] = 1;
        row[a] = 1;
        for (size_t b = 1; b < a; ++b) row[b] = prev[b - 1] + prev[b];
        rows.push_back(std::move(row));
    }
    return rows[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

BigCount binomial_ext(long long a, long long b) {
    if (a < -1)
        throw std::invalid_argument("binomial_ext requires a >= -1, got a = " +
                                    std::to_string(a));
    if (a == -1) return b == -1 ? 1 : 0;
    if (b < 0 || b > a) return 0;
    return binomial(a, b);
}

BigCount factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial requires n >= 0");
    static std::vector<BigCount> table = {BigCount(1)};
    std::lock_guard<std::mutex> lock(memo_mutex);
    while (static_cast<int>(table.size()) <= n)
        table.push_back(table.back() * BigCount(table.size()));
    return table[static_cast<size_t>(n)];
}

BigCount int_pow(long long base, long long exp) {
    if (exp < 0) throw std::invalid_argument("int_pow requires exp >= 0");
    BigCount out = 1;
    BigCount b = base;
    long long e = exp;
    while (e > 0) {
        if (e & 1) out *= b;
        e >>= 1;
        if (e > 0) b *= b;
    }
    return out;
}

BigCount theorem1_term(int n, int j, int k) {
    if (n < 0) throw std::invalid_argument("theorem1_term requires n >= 0");
    if (j < 0 || k < 0) throw std::invalid_argument("theorem1_term requires j, k >= 0");
    if (j + k > n) return 0;
    return binomial(n, k) * factorial(j) * stirling2(n - j - k, j);
}

BigCount count_avoiders(int n) {
    if (n < 0) throw std::invalid_argument("count_avoiders requires n >= 0");
    BigCount total = 0;
    for (int j = 0; j <= n; ++j)
        for (int k = 0; j + k <= n; ++k) total += theorem1_term(n, j, k);
    return total;
}

BigCount a_formula(int n) {
    if (n < 1)
        throw std::domain_error(
            "a_formula is defined for n >= 1: under 0^0 = 1 the n = 0 sum "
            "evaluates to 0 while the empty permutation is an avoider; use "
            "count_avoiders for n = 0");
    BigCount total = 0;
    for (int i = 0; i <= n; ++i)
        total += int_pow(i + 1, n - i) - int_pow(i, n - i);
    return total;
}

namespace {

/// Local Pascal triangle and power table so the hot loops below never take
/// the memo lock.
struct IdentityTables {
    std::vector<std::vector<BigCount>> choose;  // choose[a][b], a <= n
    std::vector<std::vector<BigCount>> pow;     // pow[i][e], i, e <= n + 1

    explicit IdentityTables(int n) {
        choose.resize(static_cast<size_t>(n) + 1);
        for (int a = 0; a <= n; ++a) {
            auto& row = choose[static_cast<size_t>(a)];
            row.assign(static_cast<size_t>(a) + 1, 1);
            for (int b = 1; b < a; ++b)
                row[static_cast<size_t>(b)] =
                    choose[static_cast<size_t>(a) - 1][static_cast<size_t>(b) - 1] +
                    choose[static_cast<size_t>(a) - 1][static_cast<size_t>(b)];
        }
        pow.resize(static_cast<size_t>(n) + 2);
        for (int i = 0; i <= n + 1; ++i) {
            auto& row = pow[static_cast<size_t>(i)];
            row.resize(static_cast<size_t>(n) + 2);
            row[0] = 1;  // 0^0 = 1 included
            for (int e = 1; e <= n + 1; ++e)
                row[static_cast<size_t>(e)] =
                    row[static_cast<size_t>(e) - 1] * BigCount(i);
        }
    }

    const BigCount& c(int a, int b) const {
        return choose[static_cast<size_t>(a)][static_cast<size_t>(b)];
    }

    /// binomial_ext against the local triangle; a >= -1, a <= n.
    BigCount ext(int a, int b) const {
        if (a == -1) return b == -1 ? 1 : 0;
        if (b < 0 || b > a) return 0;
        return c(a, b);
    }
};

}  // namespace

IdentityReport verify_identity(int n) {
    if (n < 1) throw std::invalid_argument("verify_identity requires n >= 1");
    IdentityTables t(n);
    IdentityReport report;
    report.n = n;

    // A_{n+1} - A_n from the power-sum definition.
    BigCount a_next = 0, a_cur = 0;
    for (int i = 0; i <= n + 1; ++i)
        a_next += t.pow[static_cast<size_t>(i)][static_cast<size_t>(n + 1 - i)];
    for (int i = 0; i <= n; ++i)
        a_cur += t.pow[static_cast<size_t>(i)][static_cast<size_t>(n - i)];
    report.lhs = a_next - a_cur;

    // What the binomial theorem leaves of the closed form.
    BigInt step = 0;
    for (int l = 0; l <= n; ++l)
        for (int i = 0; i + l <= n; ++i)
            step += t.ext(n - i - 1, l - 1) *
                    t.pow[static_cast<size_t>(i)][static_cast<size_t>(l)];
    report.binomial_step = step;

    // Stirling numbers expanded into alternating binomial sums.
    BigInt fi = 0;
    for (int k = 0; k <= n; ++k) {
        const BigCount& cnk = t.c(n, k);
        for (int j = 0; j + k <= n; ++j)
            for (int i = 0; i <= j; ++i) {
                BigInt term = cnk * t.c(j, i) *
                              t.pow[static_cast<size_t>(i)]
                                   [static_cast<size_t>(n - j - k)];
                if ((j - i) & 1) term = -term;
                fi += term;
            }
    }
    report.form_i = fi;

    // Same sum indexed by l = j + k.
    BigInt fii = 0;
    for (int l = 0; l <= n; ++l)
        for (int i = 0; i <= l; ++i) {
            BigInt inner = 0;
            for (int k = 0; k <= l - i; ++k) {
                BigInt term = t.c(n, k) * t.c(l - k, i);
                if ((l - i - k) & 1) term = -term;
                inner += term;
            }
            fii += inner * t.pow[static_cast<size_t>(i)]
                                [static_cast<size_t>(n - l)];
        }
    report.form_ii = fii;

    // Inner sum collapsed to a single extended binomial.
    BigInt fiii = 0;
    for (int l = 0; l <= n; ++l)
        for (int i = 0; i <= l; ++i)
            fiii += t.ext(n - i - 1, n - l - 1) *
                    t.pow[static_cast<size_t>(i)][static_cast<size_t>(n - l)];
    report.form_iii = fiii;

    // Outer summation reversed (l -> n - l).
    BigInt fiv = 0;
    for (int l = 0; l <= n; ++l)
        for (int i = 0; i + l <= n; ++i)
            fiv += t.ext(n - i - 1, l - 1) *
                   t.pow[static_cast<size_t>(i)][static_cast<size_t>(l)];
    report.form_iv = fiv;

    report.rhs = count_avoiders(n);

    report.all_equal = BigInt(report.lhs) == report.binomial_step &&
                       report.binomial_step == report.form_i &&
                       report.form_i == report.form_ii &&
                       report.form_ii == report.form_iii &&
                       report.form_iii == report.form_iv &&
                       report.form_iv == BigInt(report.rhs);
    return report;
}

InnerSumResult inner_sum_check(int n, int l, int i) {
    if (i < 0 || i > l || l > n)
        throw std::invalid_argument("inner_sum_check requires 0 <= i <= l <= n");
    InnerSumResult result;
    BigInt lhs = 0;
    for (int k = 0; k <= l - i; ++k) {
        BigInt term = binomial(n, k) * binomial(l - k, i);
        if ((l - i - k) & 1) term = -term;
        lhs += term;
    }
    result.lhs = lhs;
    result.rhs = BigInt(binomial_ext(n - i - 1, n - l - 1));
    result.equal = result.lhs == result.rhs;
    return result;
}

}  // namespace b31542
