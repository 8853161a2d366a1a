#ifndef B31542_CLI_HPP
#define B31542_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "b31542/counting.hpp"

namespace b31542 {

struct BFileEntry {
    long long index = 0;
    BigCount value;
    bool operator==(const BFileEntry&) const = default;
};

/// Parses OEIS b-file text: one "index value" pair per line, '#' starts a
/// comment, blank lines are skipped, indices must strictly increase.
/// Throws std::runtime_error carrying the 1-based line number on anything
/// malformed.
std::vector<BFileEntry> parse_bfile(std::istream& in);

/// The command-line front end, callable in-process for tests. `args` is
/// argv without the program name. Returns the exit code: 0 success, 1
/// semantic failure (non-avoider, count mismatch, failed audit), 2 usage
/// or parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace b31542

#endif
