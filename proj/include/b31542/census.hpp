#ifndef B31542_CENSUS_HPP
#define B31542_CENSUS_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "b31542/counting.hpp"
#include "b31542/perm.hpp"

namespace b31542 {

enum class Checker { brute, fast };

/// Exhaustive enumeration refuses n above this without an explicit
/// override: 11! permutations scan in minutes, 12! crosses into hours.
constexpr int census_guard_n = 11;

/// Streams the avoiders of [n] in lexicographic order.
class AvoiderStream {
public:
    AvoiderStream(int n, Checker checker);
    bool next(Permutation& out);

private:
    Checker checker_;
    bool started_ = false;
    bool done_ = false;
    std::vector<int> cur_;
};

/// Avoiders of [n] bucketed by (j, k) = classify_maxima. Zero cells are
/// absent from the map.
struct CensusTable {
    int n = 0;
    Checker checker = Checker::fast;
    std::map<std::pair<int, int>, BigCount> cells;
    BigCount total;
};

/// Scans all of S_n. `threads` > 1 splits the scan by first entry; the
/// merged table is identical to the serial one. Throws std::runtime_error
/// for n > census_guard_n unless override_guard is set.
CensusTable census(int n, Checker checker = Checker::fast, int threads = 1,
                   bool override_guard = false);

struct CensusCell {
    int j = 0;
    int k = 0;
    BigCount observed;
    BigCount expected;
    bool match = false;
};

/// census() side by side with theorem1_term for every (j, k) with
/// j + k <= n. A cell matches when the counts agree, including the
/// requirement that cells the formula sends to zero are absent from the
/// observed table.
struct CensusComparison {
    CensusTable table;
    std::vector<CensusCell> cells;
    bool all_match = false;
};

CensusComparison compare_census(int n, Checker checker = Checker::fast,
                                int threads = 1, bool override_guard = false);

/// Per-j audit of the encode/decode pair on [n]:
///  - class_size counts the avoiders with exactly j maxima, all of them
///    descent-initiating; each must survive decode(encode(t)) == t,
///  - every (code, partition) pair with the matching shapes must decode to
///    a brute-checked avoider of that class and re-encode to itself,
///  - both counts must equal j! * S(n-j, j).
struct RoundtripRow {
    int j = 0;
    BigCount class_size;
    BigCount pair_count;
    BigCount expected;
    bool decode_encode_ok = false;
    bool encode_decode_ok = false;
    bool cardinality_ok = false;
};

struct RoundtripReport {
    int n = 0;
    std::vector<RoundtripRow> rows;
    bool ok = false;
};

RoundtripReport roundtrip_audit(int n, bool override_guard = false);

/// One-line JSON, counts as decimal strings, cells ordered by (j, k):
/// {"n":3,"checker":"fast","cells":[{"j":0,"k":3,"count":"1"},...],"total":"5"}
std::string census_json(const CensusTable& table);

}  // namespace b31542

#endif
