#pragma once

// Command layer of the kouch tool. Every command builds a JSON report; text
// output is rendered from that same report.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "kouch/germ.hpp"
#include "kouch/io.hpp"
#include "kouch/milnor.hpp"
#include "kouch/polynomial.hpp"

namespace kouch::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitInvariant = 2;

Json analyze_poly_report(const Polynomial& f, const ReportOptions& options);
Json analyze_germ_report(const GermData& germ);
// Throws InputError (with the refutation) when the germ is not an N-germ.
Json model_report(const GermData& germ, const ReportOptions& options);

// Runs `trials` seeds starting at options.seed. On any inconsistency the
// report has "pass": false and a "reproduction" entry holding the smallest
// failing sub-germ found by dropping branches.
Json crosscheck_report(const GermData& germ, int trials,
                       const ReportOptions& options);

// argv[0] is the program name. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace kouch::cli
