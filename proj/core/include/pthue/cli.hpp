#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pthue {

enum class OutputFormat { text, json };

struct RunConfig {
    std::string command;
    long prime = 31;
    int precision = 6;        // in [2, 12]
    long long bound = 1000000;
    OutputFormat format = OutputFormat::text;
    std::string out_path;     // empty: stdout
};

// Dispatches the subcommands:
//   verify-paper
//   solve-thue --norm {+1|-1}
//   p31 validate <ints...> | p31 family claim1 --a N | p31 family claim2 --a N --b M
//   p31 extend <ints...> --bound B
//   tricube --bound B
//   padic hensel --poly c0,c1,... --prime p --prec k
//   padic strassman --valuations v0,v1,... [--tail linear]
// Exit codes: 0 success, 1 failed verification, 2 bad arguments.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace pthue
