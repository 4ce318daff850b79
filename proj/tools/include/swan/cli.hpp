#ifndef SWAN_CLI_HPP
#define SWAN_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace swan::cli {

enum ExitCode : int {
    kOk = 0,
    kDisagreement = 1,
    kUsage = 2,
    kPrecision = 3,
};

// Runs `swancond args...` (args excludes the program name). The report goes
// to `out` as one JSON document, diagnostics to `err`; `in` backs `--json -`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err, std::istream &in);

} // namespace swan::cli

#endif
