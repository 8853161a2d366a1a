#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "b31542/cli.hpp"

using namespace b31542;

namespace {

struct CliResult {
    int rc = 0;
    std::string out;
    std::string err;
    bool operator==(const CliResult&) const = default;
};

std::ostream& operator<<(std::ostream& os, const CliResult& r) {
    return os << "{rc=" << r.rc << ", out=" << doctest::toString(r.out)
              << ", err=" << doctest::toString(r.err) << "}";
}

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    CliResult r;
    r.rc = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

/// Writes `text` to a fresh file under the system temp directory and removes
/// it when the test block ends.
class TempFile {
public:
    explicit TempFile(const std::string& stem, const std::string& text)
        : path_(std::filesystem::temp_directory_path() /
                ("b31542_test_" + stem + ".txt")) {
        std::ofstream out(path_);
        out << text;
    }
    ~TempFile() {
        std::error_code ec;
        std::filesystem::remove(path_, ec);
    }
    std::string path() const { return path_.string(); }

private:
    std::filesystem::path path_;
};

const char* const kWorkedExample = "3 1 7 2 12 4 8 5 13 9 6 10 11";

}  // namespace

TEST_CASE("count prints the exact tally") {
    CHECK(run({"count", "0"}) == CliResult{0, "1\n", ""});
    CHECK(run({"count", "5"}) == CliResult{0, "43\n", ""});
    CHECK(run({"count", "9"}) == CliResult{0, "8597\n", ""});
    CHECK(run({"count", "12"}) == CliResult{0, "919146\n", ""});
    CHECK(run({"count", "5", "--formula", "a"}) == CliResult{0, "43\n", ""});
    CHECK(run({"count", "6", "--verify"}) == CliResult{0, "144\n", ""});
}

TEST_CASE("count rejects bad requests with exit code 2") {
    CliResult zero_a = run({"count", "0", "--formula", "a"});
    CHECK(zero_a.rc == 2);
    CHECK(contains(zero_a.err, "0^0"));
    CHECK(run({"count"}).rc == 2);
    CHECK(run({"count", "5", "--formula", "nope"}).rc == 2);
}

TEST_CASE("check reports the verdict and the witness") {
    CHECK(run({"check", kWorkedExample}) == CliResult{0, "AVOIDER\n", ""});
    CHECK(run({"check", ""}) == CliResult{0, "AVOIDER\n", ""});
    CHECK(run({"check", "4 1 3 2"}) ==
          CliResult{1, "NOT AVOIDER: witness 542 at positions (1,3,4)\n", ""});

    CliResult bad = run({"check", "1 1"});
    CHECK(bad.rc == 2);
    CHECK(contains(bad.err, "duplicate value 1"));
    CliResult junk = run({"check", "1 x"});
    CHECK(junk.rc == 2);
    CHECK(contains(junk.err, "invalid token 'x'"));
}

TEST_CASE("diagram draws the ruled matrix") {
    CHECK(run({"diagram", "3 1 2"}) == CliResult{0, "O--\n..*\n.*.\n", ""});
    CHECK(run({"diagram", "1 2"}) == CliResult{0, "-O\nO-\n", ""});
}

TEST_CASE("encode emits the decomposition as JSON") {
    CHECK(run({"bijection", "encode", kWorkedExample}) ==
          CliResult{0,
                    "{\"S\":[],\"code\":[1,1,2,3],\"partition\":"
                    "[[1],[5,7,2],[4,8,9,3],[6]]}\n",
                    ""});
    CHECK(run({"bijection", "encode", "2 1"}) ==
          CliResult{0, "{\"S\":[],\"code\":[1],\"partition\":[[1]]}\n", ""});

    CliResult refused = run({"bijection", "encode", "3 2 1"});
    CHECK(refused.rc == 1);
    CHECK(refused.out.empty());
    CHECK(refused.err == "not encodable: encode requires an avoider\n");
    CHECK(run({"bijection", "encode", "1 1"}).rc == 2);
}

TEST_CASE("decode rebuilds the permutation") {
    CHECK(run({"bijection", "decode", "--code", "(1,1,2,3)", "--partition",
               "1/5 7 2/4 8 9 3/6"}) ==
          CliResult{0, "3 1 7 2 12 4 8 5 13 9 6 10 11\n", ""});
    CHECK(run({"bijection", "decode", "--special", "2", "--code", "(1)",
               "--partition", "1"}) == CliResult{0, "2 3 1\n", ""});
    CHECK(run({"bijection", "decode", "--code", "()"}) ==
          CliResult{0, "\n", ""});

    CliResult wrong_n = run({"bijection", "decode", "--code", "(1)",
                             "--partition", "1", "--n", "5"});
    CHECK(wrong_n.rc == 2);
    CHECK(run({"bijection", "decode", "--code", "(9)"}).rc == 2);
    CHECK(run({"bijection"}).rc == 2);
}

TEST_CASE("census prints the table and the per-cell verdict") {
    CliResult r3 = run({"census", "3"});
    CHECK(r3.rc == 0);
    CHECK(r3.out ==
          "{\"n\":3,\"checker\":\"fast\",\"cells\":["
          "{\"j\":0,\"k\":3,\"count\":\"1\"},"
          "{\"j\":1,\"k\":0,\"count\":\"1\"},"
          "{\"j\":1,\"k\":1,\"count\":\"3\"}],\"total\":\"5\"}\n"
          "theorem1: all cells match\n");

    CliResult threaded = run({"census", "6", "--checker", "brute",
                              "--threads", "3"});
    CHECK(threaded.rc == 0);
    CHECK(contains(threaded.out, "\"total\":\"144\""));
    CHECK(contains(threaded.out, "theorem1: all cells match"));

    CHECK(run({"census", "4"}).out == run({"census", "4"}).out);
}

TEST_CASE("census enforces the size guard") {
    CliResult guarded = run({"census", "12"});
    CHECK(guarded.rc == 2);
    CHECK(contains(guarded.err, "exceeds the exhaustive-search guard (11)"));
    CHECK(run({"census", "5", "--threads", "0"}).rc == 2);
    CHECK(run({"census", "5", "--checker", "psychic"}).rc == 2);
}

TEST_CASE("audit walks every class and round-trips it") {
    CliResult r3 = run({"audit", "3"});
    CHECK(r3.rc == 0);
    CHECK(r3.out ==
          "j=0: class 0 pairs 0 expected 0 OK\n"
          "j=1: class 1 pairs 1 expected 1 OK\n"
          "j=2: class 0 pairs 0 expected 0 OK\n"
          "j=3: class 0 pairs 0 expected 0 OK\n"
          "audit OK\n");

    CliResult r5 = run({"audit", "5"});
    CHECK(r5.rc == 0);
    CHECK(contains(r5.out, "j=1: class 1 pairs 1 expected 1 OK"));
    CHECK(contains(r5.out, "j=2: class 6 pairs 6 expected 6 OK"));
    CHECK(contains(r5.out, "audit OK"));

    CHECK(run({"audit", "12"}).rc == 2);
}

TEST_CASE("identity reports one line per n") {
    CHECK(run({"identity", "--max-n", "3"}) ==
          CliResult{0, "n=1 OK\nn=2 OK\nn=3 OK\n3/3 OK\n", ""});
    CHECK(run({"identity", "--max-n", "0"}).rc == 2);
}

TEST_CASE("parse_bfile accepts comments, blanks, and huge values") {
    std::istringstream in(
        "# header comment\n"
        "\n"
        "1 1\n"
        "2 2   # trailing comment\n"
        "10 123456789012345678901234567890\n");
    std::vector<BFileEntry> entries = parse_bfile(in);
    REQUIRE(entries.size() == 3);
    CHECK(entries[0] == BFileEntry{1, 1});
    CHECK(entries[1] == BFileEntry{2, 2});
    CHECK(entries[2].index == 10);
    CHECK(entries[2].value == BigCount("123456789012345678901234567890"));
}

TEST_CASE("parse_bfile pins errors to their line") {
    auto parse = [](const char* text) {
        std::istringstream in(text);
        return parse_bfile(in);
    };
    CHECK_THROWS_WITH_AS(parse("1 1\n2 2\n2 5\n"),
                         "line 3: index 2 does not increase",
                         std::runtime_error);
    CHECK_THROWS_WITH_AS(parse("1\n"), "line 1: expected 'index value'",
                         std::runtime_error);
    CHECK_THROWS_WITH_AS(parse("1 2 3\n"), "line 1: trailing content '3'",
                         std::runtime_error);
    CHECK_THROWS_WITH_AS(parse("x 2\n"), "line 1: invalid index 'x'",
                         std::runtime_error);
    CHECK_THROWS_WITH_AS(parse("1 -2\n"), "line 1: invalid value '-2'",
                         std::runtime_error);
}

TEST_CASE("oeis compares the computed counts against a b-file") {
    const std::string good =
        "# terms 1..15\n"
        "1 1\n2 2\n3 5\n4 14\n5 43\n6 144\n7 523\n8 2048\n9 8597\n"
        "10 38486\n11 182905\n12 919146\n13 4866871\n14 27068420\n"
        "15 157693007\n";
    {
        TempFile f("bfile_good", good);
        CHECK(run({"oeis", "--bfile", f.path(), "--max-n", "10"}) ==
              CliResult{0, "10/10 match\n", ""});
    }
    {
        const std::string shifted =
            "2 1\n3 2\n4 5\n5 14\n6 43\n7 144\n8 523\n9 2048\n10 8597\n"
            "11 38486\n12 182905\n13 919146\n";
        TempFile f("bfile_shifted", shifted);
        CHECK(run({"oeis", "--bfile", f.path(), "--offset", "1", "--max-n",
                   "12"}) == CliResult{0, "12/12 match\n", ""});
    }
    {
        TempFile f("bfile_mismatch", "1 1\n2 2\n3 6\n4 14\n5 43\n");
        CliResult r = run({"oeis", "--bfile", f.path(), "--max-n", "5"});
        CHECK(r.rc == 1);
        CHECK(r.out == "n=3: computed 5, file 6\n4/5 match\n");
    }
    {
        TempFile f("bfile_gap", "1 1\n2 2\n3 5\n5 43\n");
        CliResult r = run({"oeis", "--bfile", f.path(), "--max-n", "5"});
        CHECK(r.rc == 1);
        CHECK(r.out == "n=4: index 4 missing from b-file\n4/5 match\n");
    }
    {
        TempFile f("bfile_bad", "1 1\n1 2\n");
        CliResult r = run({"oeis", "--bfile", f.path(), "--max-n", "2"});
        CHECK(r.rc == 2);
        CHECK(contains(r.err, "line 2: index 1 does not increase"));
    }
    CliResult missing =
        run({"oeis", "--bfile", "/nonexistent/bfile.txt", "--max-n", "3"});
    CHECK(missing.rc == 2);
    CHECK(contains(missing.err, "cannot open"));
}

TEST_CASE("usage errors and help use the conventional exit codes") {
    CHECK(run({}).rc == 2);
    CHECK(run({"frobnicate"}).rc == 2);
    CHECK(run({"census"}).rc == 2);

    CliResult help = run({"--help"});
    CHECK(help.rc == 0);
    CHECK(contains(help.out, "b31542"));
    CHECK(run({"count", "--help"}).rc == 0);
}
