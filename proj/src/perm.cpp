#include "b31542/perm.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>

namespace b31542 {

Permutation Permutation::from_oneline(std::vector<int> values) {
    const int n = static_cast<int>(values.size());
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int v : values) {
        if (v < 0)
            throw std::invalid_argument("negative value " + std::to_string(v));
        if (v == 0)
            throw std::invalid_argument("value 0 (one-line notation is 1-based)");
        if (v > n)
            throw std::invalid_argument("value " + std::to_string(v) +
                                        " exceeds permutation length " +
                                        std::to_string(n));
        if (seen[static_cast<size_t>(v)])
            throw std::invalid_argument("duplicate value " + std::to_string(v));
        seen[static_cast<size_t>(v)] = 1;
    }
    Permutation p;
    p.vals_ = std::move(values);
    return p;
}

Permutation Permutation::identity(int n) {
    if (n < 0) throw std::invalid_argument("negative length");
    std::vector<int> vals(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) vals[static_cast<size_t>(i)] = i + 1;
    Permutation p;
    p.vals_ = std::move(vals);
    return p;
}

int StripStructure::strip_of_value(int value) const {
    if (value < 1 || value > n_)
        throw std::domain_error("value " + std::to_string(value) +
                                " outside [1, " + std::to_string(n_) + "]");
    auto it = std::lower_bound(
        maxima_.begin(), maxima_.end(), value,
        [](const PosVal& pv, int v) { return pv.value < v; });
    if (it != maxima_.end() && it->value == value)
        throw std::domain_error("value " + std::to_string(value) +
                                " is a left-to-right maximum; maxima lie on "
                                "strip boundaries, not in strips");
    return static_cast<int>(it - maxima_.begin()) + 1;
}

bool StripStructure::is_maximum_value(int value) const {
    auto it = std::lower_bound(
        maxima_.begin(), maxima_.end(), value,
        [](const PosVal& pv, int v) { return pv.value < v; });
    return it != maxima_.end() && it->value == value;
}

StripStructure strip_structure(const Permutation& p) {
    StripStructure ss;
    const int n = p.size();
    ss.n_ = n;
    int running_max = 0;
    for (int pos = 1; pos <= n; ++pos) {
        int v = p.at(pos);
        if (v > running_max) {
            running_max = v;
            ss.maxima_.push_back({pos, v});
        }
    }
    for (const PosVal& m : ss.maxima_) {
        bool initiates = m.pos < n && p.at(m.pos + 1) < m.value;
        ss.descent_.push_back(initiates);
        if (initiates) ss.successors_.push_back({m.pos + 1, p.at(m.pos + 1)});
    }
    // A value in strip i is smaller than the i-th maximum, so it cannot
    // appear before that maximum does.
    for (int pos = 1; pos <= n; ++pos) {
        int v = p.at(pos);
        if (ss.is_maximum_value(v)) continue;
        int strip = ss.strip_of_value(v);
        if (pos <= ss.maxima_[static_cast<size_t>(strip) - 1].pos)
            throw std::logic_error("strip entry ahead of its bounding maximum");
    }
    return ss;
}

MaximaCounts classify_maxima(const Permutation& p) {
    StripStructure ss = strip_structure(p);
    MaximaCounts counts;
    for (bool initiates : ss.descent_initiating()) {
        if (initiates)
            ++counts.j;
        else
            ++counts.k;
    }
    return counts;
}

Permutation standardize(const std::vector<int>& seq) {
    std::vector<int> sorted = seq;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] == sorted[i - 1])
            throw std::invalid_argument("duplicate value " +
                                        std::to_string(sorted[i]));
    std::vector<int> ranks(seq.size());
    for (size_t i = 0; i < seq.size(); ++i) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), seq[i]);
        ranks[i] = static_cast<int>(it - sorted.begin()) + 1;
    }
    return Permutation::from_oneline(std::move(ranks));
}

std::string render_diagram(const Permutation& p) {
    const int n = p.size();
    if (n == 0) return "";
    StripStructure ss = strip_structure(p);
    std::vector<int> pos_of(static_cast<size_t>(n) + 1, 0);
    for (int pos = 1; pos <= n; ++pos) pos_of[static_cast<size_t>(p.at(pos))] = pos;
    std::string out;
    out.reserve(static_cast<size_t>(n) * (static_cast<size_t>(n) + 1));
    for (int row = n; row >= 1; --row) {
        bool is_max = ss.is_maximum_value(row);
        std::string line(static_cast<size_t>(n), is_max ? '-' : '.');
        line[static_cast<size_t>(pos_of[static_cast<size_t>(row)]) - 1] =
            is_max ? 'O' : '*';
        out += line;
        out += '\n';
    }
    return out;
}

Permutation parse_permutation(const std::string& text) {
    std::istringstream in(text);
    std::vector<int> values;
    std::string token;
    while (in >> token) {
        size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("invalid token '" + token + "'");
        }
        if (used != token.size())
            throw std::invalid_argument("invalid token '" + token + "'");
        values.push_back(v);
    }
    return Permutation::from_oneline(std::move(values));
}

std::string format_permutation(const Permutation& p) {
    std::string out;
    for (int pos = 1; pos <= p.size(); ++pos) {
        if (pos > 1) out += ' ';
        out += std::to_string(p.at(pos));
    }
    return out;
}

}  // namespace b31542
