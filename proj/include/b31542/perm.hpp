#ifndef B31542_PERM_HPP
#define B31542_PERM_HPP

#include <string>
#include <vector>

namespace b31542 {

/// A permutation of [n] in one-line notation. Values and positions are
/// 1-based; n = 0 (the empty permutation) is legal.
class Permutation {
public:
    Permutation() = default;

    /// Validates that `values` is a rearrangement of 1..n. Throws
    /// std::invalid_argument naming the first offending value, with
    /// distinct reasons for duplicates, zeros, negatives and values > n.
    static Permutation from_oneline(std::vector<int> values);

    static Permutation identity(int n);

    int size() const { return static_cast<int>(vals_.size()); }
    bool empty() const { return vals_.empty(); }

    /// Value at a 1-based position (no bounds check).
    int at(int pos) const { return vals_[static_cast<size_t>(pos) - 1]; }

    const std::vector<int>& values() const { return vals_; }

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> vals_;
};

struct PosVal {
    int pos = 0;  // 1-based
    int value = 0;
    bool operator==(const PosVal&) const = default;
};

/// Left-to-right maxima of a permutation and the horizontal strip geometry
/// they induce on its matrix diagram: strip i holds the values strictly
/// between the (i-1)-th and i-th maximum (with M_0 = 0). Maxima sit on the
/// strip boundaries, successors are the entries that terminate the descents
/// the maxima initiate.
class StripStructure {
public:
    const std::vector<PosVal>& lr_maxima() const { return maxima_; }

    /// Total number of left-to-right maxima.
    int maxima_count() const { return static_cast<int>(maxima_.size()); }

    /// Per maximum, whether it is immediately followed by a smaller entry.
    const std::vector<bool>& descent_initiating() const { return descent_; }

    /// Entries immediately following the descent-initiating maxima, in
    /// left-to-right order.
    const std::vector<PosVal>& successors() const { return successors_; }

    /// Horizontal strip index in 1..j of a non-maximum value: one plus the
    /// number of maxima values below it. Throws std::domain_error for a
    /// maximum value (maxima lie on strip boundaries, not in strips) and
    /// for values outside [1, n].
    int strip_of_value(int value) const;

    bool is_maximum_value(int value) const;

private:
    friend StripStructure strip_structure(const Permutation& p);
    int n_ = 0;
    std::vector<PosVal> maxima_;
    std::vector<bool> descent_;
    std::vector<PosVal> successors_;
};

StripStructure strip_structure(const Permutation& p);

/// The (j, k) split of the left-to-right maxima: j initiate a descent,
/// the other k are followed by another maximum or end the permutation.
struct MaximaCounts {
    int j = 0;
    int k = 0;
    bool operator==(const MaximaCounts&) const = default;
};

MaximaCounts classify_maxima(const Permutation& p);

/// Order-preserving relabeling of distinct integers onto 1..m (smallest
/// entry becomes 1, next smallest 2, and so on). Throws on duplicates.
Permutation standardize(const std::vector<int>& seq);

/// ASCII matrix diagram: bullet at column a, row b iff p(a) = b, top row
/// printed first. Maxima render as 'O' and their rows are ruled with '-'
/// (the strip boundaries); other bullets are '*', empty cells '.'.
std::string render_diagram(const Permutation& p);

/// Space-separated one-line notation; the empty permutation is the empty
/// string. parse throws std::invalid_argument on non-integer tokens and on
/// anything from_oneline rejects.
Permutation parse_permutation(const std::string& text);
std::string format_permutation(const Permutation& p);

}  // namespace b31542

#endif
