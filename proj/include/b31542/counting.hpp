#ifndef B31542_COUNTING_HPP
#define B31542_COUNTING_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace b31542 {

/// All counts are exact arbitrary-precision integers; nothing in this
/// module touches floating point.
using BigCount = boost::multiprecision::cpp_int;
using BigInt = boost::multiprecision::cpp_int;

/// Stirling numbers of the second kind, S(0,0) = 1, S(n,j) = 0 for j > n.
/// Memoized; safe to call from several threads.
BigCount stirling2(int n, int j);

/// C(n, k) for n, k >= 0, zero when k > n. Memoized.
BigCount binomial(long long n, long long k);

/// Binomial extended to the boundary the alternating-sum manipulations
/// need: defined for a >= -1 and any b, with C(-1,-1) = 1, C(-1,b) = 0 for
/// b != -1, and zero outside 0 <= b <= a otherwise. Throws for a < -1.
BigCount binomial_ext(long long a, long long b);

BigCount factorial(int n);

/// base^exp for exp >= 0 with the convention 0^0 = 1.
BigCount int_pow(long long base, long long exp);

/// Number of avoiders of [n] with exactly j descent-initiating maxima and
/// k others: C(n,k) * j! * S(n-j-k, j). Zero when j + k > n.
BigCount theorem1_term(int n, int j, int k);

/// Total avoiders of [n]: the double sum of theorem1_term over j, k >= 0.
BigCount count_avoiders(int n);

/// Closed form: sum over 0 <= i <= n of ((i+1)^(n-i) - i^(n-i)), with
/// 0^0 = 1. Valid for n >= 1 only; the n = 0 sum evaluates to 0 while the
/// empty permutation is an avoider, so n <= 0 throws std::domain_error.
BigCount a_formula(int n);

/// Every station of the proof that the closed form equals the double sum,
/// each evaluated independently for one n. The two ends meet in the
/// middle: binomial_step is what the binomial theorem turns the closed
/// form into, form_i..form_iv walk the double sum toward the same
/// expression. The intermediate forms are signed since forms i and ii
/// carry (-1)^... factors before cancellation.
struct IdentityReport {
    int n = 0;
    BigCount lhs;            // A_{n+1} - A_n with A_n = sum of i^(n-i)
    BigInt binomial_step;    // sum over l, i of ext(n-i-1, l-1) * i^l
    BigInt form_i;           // Stirling expanded: triple sum over k, j, i
    BigInt form_ii;          // reindexed with l = j + k
    BigInt form_iii;         // inner alternating sum collapsed
    BigInt form_iv;          // outer summation reversed
    BigCount rhs;            // count_avoiders(n)
    bool all_equal = false;  // all seven values coincide
};

IdentityReport verify_identity(int n);

/// The collapsed inner sum behind form_iii:
/// sum_k C(n,k) (-1)^(l-i-k) C(l-k, i) over 0 <= k <= l-i, which telescopes
/// to binomial_ext(n-i-1, n-l-1). Requires 0 <= i <= l <= n.
struct InnerSumResult {
    BigInt lhs;
    BigInt rhs;
    bool equal = false;
};

InnerSumResult inner_sum_check(int n, int l, int i);

}  // namespace b31542

#endif
