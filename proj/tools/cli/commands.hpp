#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "document.hpp"
#include "report.hpp"

namespace cli {

struct Options {
    int resolution = 4097;
    std::string format;  // empty: take it from the document
    // oracle
    std::string method;
    std::optional<std::uint64_t> trials;
    std::optional<std::uint64_t> seed;
    unsigned threads = 0;
};

/// Variants a subcommand accepts; `run` accepts all of them.
std::vector<std::string> variants_of(const std::string& subcommand);

/// Evaluates a document and writes the report. Throws Failure.
void execute(const Document& doc, const Options& opt, std::ostream& out);

/// `reproduce` targets: table1, table2, examples. Returns the number of
/// failed checks.
int reproduce(const std::string& target, const Options& opt, std::ostream& out);

}  // namespace cli
