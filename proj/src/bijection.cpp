#include "b31542/bijection.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "b31542/pattern.hpp"

namespace b31542 {

InversionCode::InversionCode(std::vector<int> entries) {
    for (size_t i = 0; i < entries.size(); ++i) {
        int c = entries[i];
        int bound = static_cast<int>(i) + 1;
        if (c < 1 || c > bound)
            throw std::invalid_argument(
                "code entry " + std::to_string(c) + " at index " +
                std::to_string(i + 1) + " outside [1, " + std::to_string(bound) +
                "]");
    }
    entries_ = std::move(entries);
}

CanonicalPartition::CanonicalPartition(std::vector<std::vector<int>> blocks) {
    size_t total = 0;
    for (const auto& b : blocks) total += b.size();
    if (total > static_cast<size_t>(std::numeric_limits<int>::max()))
        throw std::invalid_argument("partition too large");
    const int m = static_cast<int>(total);

    std::vector<char> seen(static_cast<size_t>(m) + 1, 0);
    int prev_min = 0;
    for (size_t bi = 0; bi < blocks.size(); ++bi) {
        const auto& b = blocks[bi];
        const std::string label = "block " + std::to_string(bi + 1);
        if (b.empty()) throw std::invalid_argument(label + " is empty");
        for (size_t i = 0; i + 2 < b.size(); ++i)
            if (b[i] >= b[i + 1])
                throw std::invalid_argument(
                    label + ": entries before the minimum must increase");
        if (b.size() >= 2 && b.back() >= b.front())
            throw std::invalid_argument(label + ": minimum must come last");
        if (b.back() <= prev_min)
            throw std::invalid_argument(
                "blocks must be ordered by increasing minima");
        prev_min = b.back();
        for (int v : b) {
            if (v < 1 || v > m)
                throw std::invalid_argument(
                    "blocks do not partition 1..m (value " + std::to_string(v) +
                    ", ground size " + std::to_string(m) + ")");
            if (seen[static_cast<size_t>(v)])
                throw std::invalid_argument("duplicate value " +
                                            std::to_string(v) + " across blocks");
            seen[static_cast<size_t>(v)] = 1;
        }
    }
    blocks_ = std::move(blocks);
    ground_size_ = m;
}

Reduction reduce(const Permutation& p) {
    StripStructure ss = strip_structure(p);
    std::vector<char> drop(static_cast<size_t>(p.size()) + 1, 0);
    Reduction r;
    for (int i = 0; i < ss.maxima_count(); ++i) {
        if (!ss.descent_initiating()[static_cast<size_t>(i)]) {
            int v = ss.lr_maxima()[static_cast<size_t>(i)].value;
            r.special.push_back(v);
            drop[static_cast<size_t>(v)] = 1;
        }
    }
    std::vector<int> residue;
    residue.reserve(static_cast<size_t>(p.size()) - r.special.size());
    for (int pos = 1; pos <= p.size(); ++pos)
        if (!drop[static_cast<size_t>(p.at(pos))]) residue.push_back(p.at(pos));
    r.reduced = standardize(residue);
    return r;
}

Permutation unreduce(const std::vector<int>& special, const Permutation& t,
                     int n) {
    if (n < 0) throw std::invalid_argument("negative length");
    StripStructure ss = strip_structure(t);
    for (bool initiates : ss.descent_initiating())
        if (!initiates)
            throw std::invalid_argument(
                "every left-to-right maximum of t must initiate a descent");
    std::vector<int> s = special;
    std::sort(s.begin(), s.end());
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 1 || s[i] > n)
            throw std::invalid_argument("special value " + std::to_string(s[i]) +
                                        " outside [1, " + std::to_string(n) + "]");
        if (i > 0 && s[i] == s[i - 1])
            throw std::invalid_argument("duplicate special value " +
                                        std::to_string(s[i]));
    }
    if (static_cast<int>(s.size()) + t.size() != n)
        throw std::invalid_argument("size mismatch: |special| + |t| must equal n");

    // Relabel t onto [n] minus the special values, preserving order.
    std::vector<int> complement;
    complement.reserve(static_cast<size_t>(t.size()));
    {
        size_t si = 0;
        for (int v = 1; v <= n; ++v) {
            if (si < s.size() && s[si] == v) {
                ++si;
                continue;
            }
            complement.push_back(v);
        }
    }
    std::vector<int> out;
    out.reserve(static_cast<size_t>(n));
    for (int pos = 1; pos <= t.size(); ++pos)
        out.push_back(complement[static_cast<size_t>(t.at(pos)) - 1]);

    // Each special value goes immediately before the leftmost entry larger
    // than it; at that spot it is a maximum followed by a larger entry.
    for (int v : s) {
        auto it = std::find_if(out.begin(), out.end(),
                               [v](int e) { return e > v; });
        out.insert(it, v);
    }

    Permutation result = Permutation::from_oneline(std::move(out));
    Reduction back = reduce(result);
    if (back.special != s || !(back.reduced == t))
        throw std::logic_error(
            "unreduce: inserted values failed to come back out as the "
            "non-descent maxima");
    return result;
}

EncodedPair encode(const Permutation& t) {
    StripStructure ss = strip_structure(t);
    for (bool initiates : ss.descent_initiating())
        if (!initiates)
            throw std::invalid_argument(
                "encode requires every left-to-right maximum to initiate a "
                "descent");
    if (!strips_rising(t))
        throw std::invalid_argument("encode requires an avoider");

    std::vector<int> code;
    code.reserve(ss.successors().size());
    std::vector<char> is_succ(static_cast<size_t>(t.size()) + 1, 0);
    for (const PosVal& succ : ss.successors()) {
        code.push_back(ss.strip_of_value(succ.value));
        is_succ[static_cast<size_t>(succ.value)] = 1;
    }

    std::vector<int> residue;
    residue.reserve(static_cast<size_t>(t.size()) - code.size());
    for (int pos = 1; pos <= t.size(); ++pos)
        if (!is_succ[static_cast<size_t>(t.at(pos))]) residue.push_back(t.at(pos));
    Permutation sigma = standardize(residue);
    const int m = sigma.size();

    // The word lists where each value of sigma sits; a block ends at every
    // entry smaller than all entries to its right.
    std::vector<int> word(static_cast<size_t>(m) + 1, 0);
    for (int pos = 1; pos <= m; ++pos)
        word[static_cast<size_t>(sigma.at(pos))] = pos;
    std::vector<int> suffix_min(static_cast<size_t>(m) + 2,
                                std::numeric_limits<int>::max());
    for (int v = m; v >= 1; --v)
        suffix_min[static_cast<size_t>(v)] = std::min(
            suffix_min[static_cast<size_t>(v) + 1], word[static_cast<size_t>(v)]);

    std::vector<std::vector<int>> blocks;
    std::vector<int> current;
    for (int v = 1; v <= m; ++v) {
        current.push_back(word[static_cast<size_t>(v)]);
        if (word[static_cast<size_t>(v)] < suffix_min[static_cast<size_t>(v) + 1]) {
            blocks.push_back(std::move(current));
            current.clear();
        }
    }

    return {InversionCode(std::move(code)),
            CanonicalPartition(std::move(blocks))};
}

Permutation decode(const InversionCode& code,
                   const CanonicalPartition& partition) {
    const int j = code.length();
    if (j != partition.block_count())
        throw std::invalid_argument(
            "code length " + std::to_string(j) + " does not match block count " +
            std::to_string(partition.block_count()));
    const int m = partition.ground_size();

    // Concatenating the blocks recovers the word; invert it to the residue.
    std::vector<int> sig(static_cast<size_t>(m), 0);
    {
        int v = 0;
        for (const auto& b : partition.blocks())
            for (int pos : b) sig[static_cast<size_t>(pos) - 1] = ++v;
    }
    Permutation sigma = Permutation::from_oneline(std::move(sig));
    StripStructure ss = strip_structure(sigma);
    if (ss.maxima_count() != j)
        throw std::logic_error("reconstructed residue has wrong maxima count");

    // One slot per residue entry, plus a successor slot after each maximum.
    struct Slot {
        int strip = 0;
        bool is_max = false;
    };
    std::vector<Slot> slots;
    slots.reserve(static_cast<size_t>(m + j));
    int max_idx = 0;
    for (int pos = 1; pos <= m; ++pos) {
        int v = sigma.at(pos);
        if (ss.is_maximum_value(v)) {
            ++max_idx;
            slots.push_back({max_idx, true});
            slots.push_back({code.entries()[static_cast<size_t>(max_idx) - 1],
                             false});
        } else {
            slots.push_back({ss.strip_of_value(v), false});
        }
    }

    // Fill strips bottom to top; within a strip the non-maximum slots take
    // the next values in position order, the bounding maximum tops them.
    std::vector<int> out(slots.size(), 0);
    int next_val = 0;
    for (int strip = 1; strip <= j; ++strip) {
        for (size_t i = 0; i < slots.size(); ++i)
            if (!slots[i].is_max && slots[i].strip == strip) out[i] = ++next_val;
        for (size_t i = 0; i < slots.size(); ++i)
            if (slots[i].is_max && slots[i].strip == strip) out[i] = ++next_val;
    }

    Permutation result = Permutation::from_oneline(std::move(out));
    StripStructure check = strip_structure(result);
    bool all_descents = true;
    for (bool initiates : check.descent_initiating())
        if (!initiates) all_descents = false;
    if (check.maxima_count() != j || !all_descents || !strips_rising(result))
        throw std::logic_error("decode produced a non-avoider");
    return result;
}

Decomposition full_encode(const Permutation& p) {
    Reduction r = reduce(p);
    EncodedPair pair = encode(r.reduced);
    return {std::move(r.special), std::move(pair.code),
            std::move(pair.partition)};
}

Permutation full_decode(const Decomposition& d, int n) {
    Permutation t = decode(d.code, d.partition);
    return unreduce(d.special, t, n);
}

CodeStream::CodeStream(int j) : j_(j) {
    if (j < 0) throw std::invalid_argument("negative code length");
    cur_.assign(static_cast<size_t>(j), 1);
}

bool CodeStream::next(InversionCode& out) {
    if (done_) return false;
    if (!started_) {
        started_ = true;
        out = InversionCode(cur_);
        return true;
    }
    for (int i = j_ - 1; i >= 0; --i) {
        if (cur_[static_cast<size_t>(i)] < i + 1) {
            ++cur_[static_cast<size_t>(i)];
            for (size_t k = static_cast<size_t>(i) + 1; k < cur_.size(); ++k)
                cur_[k] = 1;
            out = InversionCode(cur_);
            return true;
        }
    }
    done_ = true;
    return false;
}

CanonicalPartitionStream::CanonicalPartitionStream(int m, int j)
    : m_(m), j_(j) {
    if (m < 0 || j < 0) throw std::invalid_argument("negative size");
    if (j > m) done_ = true;
    rgs_.assign(static_cast<size_t>(m), 0);
}

bool CanonicalPartitionStream::emit(CanonicalPartition& out) const {
    int max_label = -1;
    for (int a : rgs_) max_label = std::max(max_label, a);
    if (max_label + 1 != j_) return false;
    std::vector<std::vector<int>> blocks(static_cast<size_t>(j_));
    for (int i = 0; i < m_; ++i)
        blocks[static_cast<size_t>(rgs_[static_cast<size_t>(i)])].push_back(i + 1);
    // Elements joined a block in increasing order, so each block is sorted;
    // rotate the minimum to the back for the canonical written form.
    for (auto& b : blocks) {
        std::rotate(b.begin(), b.begin() + 1, b.end());
    }
    out = CanonicalPartition(std::move(blocks));
    return true;
}

bool CanonicalPartitionStream::advance() {
    // Restricted growth: position i may hold up to one more than the prefix
    // maximum, and labels never need to reach j.
    for (int i = m_ - 1; i >= 1; --i) {
        int prefix_max = 0;
        for (int k = 0; k < i; ++k)
            prefix_max = std::max(prefix_max, rgs_[static_cast<size_t>(k)]);
        int cap = std::min(prefix_max + 1, j_ - 1);
        if (rgs_[static_cast<size_t>(i)] < cap) {
            ++rgs_[static_cast<size_t>(i)];
            for (size_t k = static_cast<size_t>(i) + 1; k < rgs_.size(); ++k)
                rgs_[k] = 0;
            return true;
        }
    }
    return false;
}

bool CanonicalPartitionStream::next(CanonicalPartition& out) {
    if (done_) return false;
    if (!started_) {
        started_ = true;
        if (m_ == 0) {
            done_ = true;
            if (j_ == 0) {
                out = CanonicalPartition();
                return true;
            }
            return false;
        }
        if (emit(out)) return true;
    }
    while (advance())
        if (emit(out)) return true;
    done_ = true;
    return false;
}

std::string format_code(const InversionCode& code) {
    std::string out = "(";
    for (size_t i = 0; i < code.entries().size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(code.entries()[i]);
    }
    out += ')';
    return out;
}

namespace {

std::string trim(const std::string& s) {
    size_t begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    size_t end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

int parse_int_token(const std::string& token, const char* what) {
    size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(token, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("invalid ") + what + " '" +
                                    token + "'");
    }
    if (used != token.size())
        throw std::invalid_argument(std::string("invalid ") + what + " '" +
                                    token + "'");
    return v;
}

}  // namespace

InversionCode parse_code(const std::string& text) {
    std::string body = trim(text);
    if (body.size() < 2 || body.front() != '(' || body.back() != ')')
        throw std::invalid_argument(
            "code must be parenthesized, e.g. (1,1,2)");
    body = trim(body.substr(1, body.size() - 2));
    if (body.empty()) return InversionCode();
    std::vector<int> entries;
    size_t start = 0;
    while (true) {
        size_t comma = body.find(',', start);
        std::string token = trim(body.substr(
            start, comma == std::string::npos ? std::string::npos
                                              : comma - start));
        if (token.empty())
            throw std::invalid_argument("empty code entry");
        entries.push_back(parse_int_token(token, "code entry"));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return InversionCode(std::move(entries));
}

std::string format_partition(const CanonicalPartition& partition) {
    std::string out;
    for (size_t bi = 0; bi < partition.blocks().size(); ++bi) {
        if (bi > 0) out += '/';
        const auto& b = partition.blocks()[bi];
        for (size_t i = 0; i < b.size(); ++i) {
            if (i > 0) out += ' ';
            out += std::to_string(b[i]);
        }
    }
    return out;
}

CanonicalPartition parse_partition(const std::string& text) {
    std::string body = trim(text);
    if (body.empty()) return CanonicalPartition();
    std::vector<std::string> pieces;
    size_t start = 0;
    while (true) {
        size_t slash = body.find('/', start);
        pieces.push_back(body.substr(
            start, slash == std::string::npos ? std::string::npos
                                              : slash - start));
        if (slash == std::string::npos) break;
        start = slash + 1;
    }
    // A single trailing '/' is tolerated.
    if (pieces.size() > 1 && trim(pieces.back()).empty()) pieces.pop_back();
    std::vector<std::vector<int>> blocks;
    for (const std::string& piece : pieces) {
        std::string p = trim(piece);
        if (p.empty()) throw std::invalid_argument("empty block");
        std::vector<int> block;
        size_t i = 0;
        while (i < p.size()) {
            while (i < p.size() && (p[i] == ' ' || p[i] == '\t')) ++i;
            if (i >= p.size()) break;
            size_t end = i;
            while (end < p.size() && p[end] != ' ' && p[end] != '\t') ++end;
            block.push_back(
                parse_int_token(p.substr(i, end - i), "partition entry"));
            i = end;
        }
        blocks.push_back(std::move(block));
    }
    return CanonicalPartition(std::move(blocks));
}

std::string decomposition_json(const Decomposition& d) {
    nlohmann::ordered_json out;
    out["S"] = d.special;
    out["code"] = d.code.entries();
    out["partition"] = d.partition.blocks();
    return out.dump();
}

}  // namespace b31542
