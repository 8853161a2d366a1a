#ifndef B31542_BIJECTION_HPP
#define B31542_BIJECTION_HPP

#include <string>
#include <vector>

#include "b31542/perm.hpp"

namespace b31542 {

/// An inversion-table-like word c_1 .. c_j with 1 <= c_i <= i. There are
/// j! of them for each length j. The constructor validates the bounds.
class InversionCode {
public:
    InversionCode() = default;
    explicit InversionCode(std::vector<int> entries);

    int length() const { return static_cast<int>(entries_.size()); }
    const std::vector<int>& entries() const { return entries_; }

    bool operator==(const InversionCode&) const = default;

private:
    std::vector<int> entries_;
};

/// A set partition of [m] written in canonical block form: within a block
/// the minimum comes last and the entries before it increase left to
/// right; blocks are ordered by increasing minima. The constructor
/// validates all of that plus that the blocks partition 1..m.
class CanonicalPartition {
public:
    CanonicalPartition() = default;
    explicit CanonicalPartition(std::vector<std::vector<int>> blocks);

    int block_count() const { return static_cast<int>(blocks_.size()); }
    int ground_size() const { return ground_size_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }

    bool operator==(const CanonicalPartition&) const = default;

private:
    std::vector<std::vector<int>> blocks_;
    int ground_size_ = 0;
};

/// Splitting off the maxima that do not initiate descents: S holds their
/// values in increasing order, `reduced` is the standardization of what
/// remains. The reduced permutation is an avoider iff the input is, and
/// every one of its maxima initiates a descent.
struct Reduction {
    std::vector<int> special;
    Permutation reduced;
    bool operator==(const Reduction&) const = default;
};

Reduction reduce(const Permutation& p);

/// Inverse of reduce: relabels t onto [n] \ special preserving order, then
/// inserts each value of `special` in increasing order, each immediately
/// before the leftmost current entry larger than it (or at the end). The
/// insertion point is the unique one making the value a left-to-right
/// maximum that does not initiate a descent. Throws std::invalid_argument
/// if some maximum of t fails to initiate a descent, if special has
/// duplicates or values outside [1, n], or if |special| + |t| != n.
Permutation unreduce(const std::vector<int>& special, const Permutation& t, int n);

struct EncodedPair {
    InversionCode code;
    CanonicalPartition partition;
    bool operator==(const EncodedPair&) const = default;
};

/// Encodes an avoider t of [n] whose j maxima all initiate descents as a
/// pair (code, partition) with the partition on [n - j]. Entry c_i of the
/// code is the strip holding the i-th successor; the partition is read off
/// the positions of 1..(n-j) in the standardization of t minus its
/// successors, with a block break after every right-to-left minimum.
/// Throws std::invalid_argument when a maximum of t fails to initiate a
/// descent or t is not an avoider.
EncodedPair encode(const Permutation& t);

/// Inverse of encode. Rebuilds the residue permutation from the partition,
/// opens a successor slot after each of its maxima, and refills the strips
/// bottom to top, within a strip the non-maximum slots in position order
/// first and the bounding maximum last. Throws std::invalid_argument when
/// the code length differs from the block count.
Permutation decode(const InversionCode& code, const CanonicalPartition& partition);

/// reduce + encode packaged up: an arbitrary avoider of [n] maps to
/// (special, code, partition) and back.
struct Decomposition {
    std::vector<int> special;
    InversionCode code;
    CanonicalPartition partition;
    bool operator==(const Decomposition&) const = default;
};

Decomposition full_encode(const Permutation& p);
Permutation full_decode(const Decomposition& d, int n);

/// Streams all codes of length j in lexicographic order.
class CodeStream {
public:
    explicit CodeStream(int j);
    bool next(InversionCode& out);

private:
    int j_;
    bool started_ = false;
    bool done_ = false;
    std::vector<int> cur_;
};

/// Streams all canonical partitions of [m] with exactly j blocks, ordered
/// lexicographically by restricted growth string.
class CanonicalPartitionStream {
public:
    CanonicalPartitionStream(int m, int j);
    bool next(CanonicalPartition& out);

private:
    bool emit(CanonicalPartition& out) const;
    bool advance();

    int m_;
    int j_;
    bool started_ = false;
    bool done_ = false;
    std::vector<int> rgs_;
};

/// Text forms. Codes print as "(1,1,2,3)" (empty: "()"); partitions print
/// blocks separated by '/' with entries separated by spaces, e.g.
/// "1/5 7 2/4 8 9 3/6" (empty: ""). parse_partition also accepts a benign
/// trailing '/'.
std::string format_code(const InversionCode& code);
InversionCode parse_code(const std::string& text);
std::string format_partition(const CanonicalPartition& partition);
CanonicalPartition parse_partition(const std::string& text);

/// One-line JSON object {"S":[...],"code":[...],"partition":[[...],...]}.
std::string decomposition_json(const Decomposition& d);

}  // namespace b31542

#endif
