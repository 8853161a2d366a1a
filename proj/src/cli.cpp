#include "b31542/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "b31542/bijection.hpp"
#include "b31542/census.hpp"
#include "b31542/pattern.hpp"
#include "b31542/perm.hpp"

namespace b31542 {

std::vector<BFileEntry> parse_bfile(std::istream& in) {
    std::vector<BFileEntry> entries;
    std::string line;
    long long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string where = "line " + std::to_string(line_no) + ": ";
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string index_tok, value_tok, extra;
        if (!(fields >> index_tok)) continue;  // blank or comment-only line
        if (!(fields >> value_tok))
            throw std::runtime_error(where + "expected 'index value'");
        if (fields >> extra)
            throw std::runtime_error(where + "trailing content '" + extra + "'");

        BFileEntry entry;
        try {
            size_t used = 0;
            entry.index = std::stoll(index_tok, &used);
            if (used != index_tok.size()) throw std::invalid_argument(index_tok);
        } catch (const std::exception&) {
            throw std::runtime_error(where + "invalid index '" + index_tok + "'");
        }
        if (value_tok.empty() ||
            !std::all_of(value_tok.begin(), value_tok.end(),
                         [](unsigned char c) { return std::isdigit(c); }))
            throw std::runtime_error(where + "invalid value '" + value_tok + "'");
        entry.value = BigCount(value_tok);
        if (!entries.empty() && entry.index <= entries.back().index)
            throw std::runtime_error(where + "index " +
                                     std::to_string(entry.index) +
                                     " does not increase");
        entries.push_back(std::move(entry));
    }
    return entries;
}

namespace {

std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::istringstream in(text);
    std::vector<int> values;
    std::string token;
    while (in >> token) {
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
        values.push_back(v);
    }
    return values;
}

int do_count(long long n, const std::string& formula, bool verify,
             std::ostream& out, std::ostream& err) {
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    const int ni = static_cast<int>(n);
    BigCount value =
        formula == "a" ? a_formula(ni) : count_avoiders(ni);
    out << value.str() << "\n";
    if (verify && ni <= 9) {
        AvoiderStream stream(ni, Checker::brute);
        Permutation p;
        BigCount enumerated = 0;
        while (stream.next(p)) ++enumerated;
        if (enumerated != value) {
            err << "verification failed: enumerated " << enumerated.str()
                << ", formula " << value.str() << "\n";
            return 1;
        }
    }
    return 0;
}

int do_check(const std::string& perm_text, std::ostream& out) {
    Permutation p = parse_permutation(perm_text);
    BruteResult result = avoids_brute(p);
    if (result.avoider) {
        out << "AVOIDER\n";
        return 0;
    }
    const Witness& w = *result.witness;
    out << "NOT AVOIDER: witness 542 at positions (" << w.a << "," << w.b << ","
        << w.c << ")\n";
    return 1;
}

int do_encode(const std::string& perm_text, std::ostream& out,
              std::ostream& err) {
    Permutation p = parse_permutation(perm_text);
    Decomposition d;
    try {
        d = full_encode(p);
    } catch (const std::invalid_argument& e) {
        err << "not encodable: " << e.what() << "\n";
        return 1;
    }
    out << decomposition_json(d) << "\n";
    return 0;
}

int do_decode(const std::string& code_text, const std::string& partition_text,
              const std::string& special_text, long long n, std::ostream& out) {
    Decomposition d;
    d.code = parse_code(code_text);
    d.partition = parse_partition(partition_text);
    d.special = parse_int_list(special_text, "special value");
    std::sort(d.special.begin(), d.special.end());
    long long size = n >= 0 ? n
                            : static_cast<long long>(d.special.size()) +
                                  d.code.length() + d.partition.ground_size();
    Permutation p = full_decode(d, static_cast<int>(size));
    out << format_permutation(p) << "\n";
    return 0;
}

int do_census(long long n, const std::string& checker_name, int threads,
              bool force, std::ostream& out) {
    Checker checker =
        checker_name == "brute" ? Checker::brute : Checker::fast;
    CensusComparison cmp =
        compare_census(static_cast<int>(n), checker, threads, force);
    out << census_json(cmp.table) << "\n";
    for (const CensusCell& cell : cmp.cells)
        if (!cell.match)
            out << "mismatch at (j=" << cell.j << ",k=" << cell.k
                << "): observed " << cell.observed.str() << " expected "
                << cell.expected.str() << "\n";
    out << (cmp.all_match ? "theorem1: all cells match" : "theorem1: MISMATCH")
        << "\n";
    return cmp.all_match ? 0 : 1;
}

int do_audit(long long n, bool force, std::ostream& out) {
    RoundtripReport report = roundtrip_audit(static_cast<int>(n), force);
    for (const RoundtripRow& row : report.rows) {
        bool ok =
            row.decode_encode_ok && row.encode_decode_ok && row.cardinality_ok;
        out << "j=" << row.j << ": class " << row.class_size.str() << " pairs "
            << row.pair_count.str() << " expected " << row.expected.str()
            << (ok ? " OK" : " FAIL") << "\n";
    }
    out << (report.ok ? "audit OK" : "audit FAILED") << "\n";
    return report.ok ? 0 : 1;
}

int do_identity(int max_n, std::ostream& out) {
    int passes = 0;
    for (int n = 1; n <= max_n; ++n) {
        IdentityReport report = verify_identity(n);
        out << "n=" << n << (report.all_equal ? " OK" : " FAIL") << "\n";
        if (report.all_equal) ++passes;
    }
    out << passes << "/" << max_n << " OK\n";
    return passes == max_n ? 0 : 1;
}

int do_oeis(const std::string& path, long long offset, int max_n,
            std::ostream& out, std::ostream& err) {
    std::ifstream in(path);
    if (!in) {
        err << "cannot open '" << path << "'\n";
        return 2;
    }
    std::vector<BFileEntry> entries = parse_bfile(in);
    std::map<long long, BigCount> by_index;
    for (BFileEntry& e : entries) by_index[e.index] = std::move(e.value);
    int matches = 0;
    for (int i = 1; i <= max_n; ++i) {
        BigCount computed = count_avoiders(i);
        auto it = by_index.find(i + offset);
        if (it == by_index.end()) {
            out << "n=" << i << ": index " << (i + offset)
                << " missing from b-file\n";
            continue;
        }
        if (it->second == computed) {
            ++matches;
        } else {
            out << "n=" << i << ": computed " << computed.str() << ", file "
                << it->second.str() << "\n";
        }
    }
    out << matches << "/" << max_n << " match\n";
    return matches == max_n ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{
        "Exact toolkit for permutations avoiding the barred pattern 31542 "
        "(bars over the 3 and the 1): avoidance checking, strip diagrams, "
        "the structural bijection, exhaustive census, and "
        "arbitrary-precision counting.",
        "b31542"};
    app.require_subcommand(1);

    long long count_n = 0;
    std::string count_formula = "theorem1";
    bool count_verify = false;
    CLI::App* count = app.add_subcommand(
        "count",
        "Print the number of avoiders of [n]. The double sum (theorem1) is "
        "defined for all n >= 0 and count 0 prints 1; the closed form (a) "
        "requires n >= 1 because under 0^0 = 1 it evaluates to 0 at n = 0.");
    count->add_option("n", count_n, "permutation length")->required();
    count->add_option("--formula", count_formula, "which formula to evaluate")
        ->check(CLI::IsMember({"theorem1", "a"}));
    count->add_flag("--verify", count_verify,
                    "cross-check against exhaustive enumeration (n <= 9)");

    std::string check_text;
    CLI::App* check = app.add_subcommand(
        "check", "Test one permutation; prints AVOIDER or the witness.");
    check->add_option("perm", check_text, "one-line notation, e.g. \"3 1 2\"")
        ->required();

    std::string diagram_text;
    CLI::App* diagram = app.add_subcommand(
        "diagram", "Draw the matrix diagram with ruled maxima rows.");
    diagram->add_option("perm", diagram_text, "one-line notation")->required();

    CLI::App* bijection = app.add_subcommand(
        "bijection", "Map avoiders to (special, code, partition) and back.");
    bijection->require_subcommand(1);
    std::string encode_text;
    CLI::App* encode_cmd = bijection->add_subcommand(
        "encode", "Print the decomposition of an avoider as JSON.");
    encode_cmd->add_option("perm", encode_text, "one-line notation")
        ->required();
    std::string decode_code, decode_partition, decode_special;
    long long decode_n = -1;
    CLI::App* decode_cmd = bijection->add_subcommand(
        "decode", "Rebuild the avoider from its decomposition.");
    decode_cmd->add_option("--code", decode_code, "code, e.g. \"(1,1,2,3)\"")
        ->required();
    decode_cmd->add_option("--partition", decode_partition,
                           "canonical partition, e.g. \"1/5 7 2/4 8 9 3/6\"");
    decode_cmd->add_option("--special", decode_special,
                           "space-separated values of the non-descent maxima");
    decode_cmd->add_option(
        "--n", decode_n,
        "target length (default: |special| + |code| + ground size)");

    long long census_n = 0;
    std::string census_checker = "fast";
    int census_threads = 1;
    bool census_force = false;
    CLI::App* census_cmd = app.add_subcommand(
        "census",
        "Scan all of S_n, bucket avoiders by (j,k), compare against the "
        "per-cell formula.");
    census_cmd->add_option("n", census_n, "permutation length")->required();
    census_cmd->add_option("--checker", census_checker, "which checker drives the scan")
        ->check(CLI::IsMember({"fast", "brute"}));
    census_cmd->add_option("--threads", census_threads,
                           "worker threads (split by first entry)")
        ->check(CLI::PositiveNumber);
    census_cmd->add_flag("--force", census_force,
                         "override the n > 11 running-time guard");

    long long audit_n = 0;
    bool audit_force = false;
    CLI::App* audit = app.add_subcommand(
        "audit",
        "Round-trip the bijection over every class of [n] and check the "
        "class sizes.");
    audit->add_option("n", audit_n, "permutation length")->required();
    audit->add_flag("--force", audit_force,
                    "override the n > 11 running-time guard");

    int identity_max_n = 150;
    CLI::App* identity = app.add_subcommand(
        "identity",
        "Evaluate every intermediate form of the counting identity and "
        "report per-n equality.");
    identity->add_option("--max-n", identity_max_n, "check 1..max-n")
        ->check(CLI::PositiveNumber);

    std::string oeis_path;
    long long oeis_offset = 0;
    int oeis_max_n = 0;
    CLI::App* oeis = app.add_subcommand(
        "oeis", "Compare computed counts against a local OEIS b-file.");
    oeis->add_option("--bfile", oeis_path, "path to the b-file")->required();
    oeis->add_option("--offset", oeis_offset,
                     "file index holding the n-th count is n + offset");
    oeis->add_option("--max-n", oeis_max_n, "compare n = 1..max-n")
        ->required()
        ->check(CLI::PositiveNumber);

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("b31542");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (app.got_subcommand(count))
            return do_count(count_n, count_formula, count_verify, out, err);
        if (app.got_subcommand(check)) return do_check(check_text, out);
        if (app.got_subcommand(diagram)) {
            out << render_diagram(parse_permutation(diagram_text));
            return 0;
        }
        if (app.got_subcommand(bijection)) {
            if (bijection->got_subcommand(encode_cmd))
                return do_encode(encode_text, out, err);
            return do_decode(decode_code, decode_partition, decode_special,
                             decode_n, out);
        }
        if (app.got_subcommand(census_cmd))
            return do_census(census_n, census_checker, census_threads,
                             census_force, out);
        if (app.got_subcommand(audit))
            return do_audit(audit_n, audit_force, out);
        if (app.got_subcommand(identity)) return do_identity(identity_max_n, out);
        if (app.got_subcommand(oeis))
            return do_oeis(oeis_path, oeis_offset, oeis_max_n, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace b31542
