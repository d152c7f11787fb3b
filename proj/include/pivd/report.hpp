#ifndef PIVD_REPORT_HPP
#define PIVD_REPORT_HPP

#include <string>

#include "pivd/verify.hpp"

namespace pivd {

// Structured machine-readable reports. Serialization is deterministic:
// identical inputs produce byte-identical output.
std::string props_report_json(const ForbiddenFamily& family);
std::string props_report_text(const ForbiddenFamily& family);

std::string solve_report_json(const std::string& algo, const PiVDInstance& inst,
                              const SolveResult& result);
std::string solve_report_text(const SolveResult& result);

std::string reduce_report_json(const ReduceOutcome& outcome, const ReduceRequest& request,
                               const VCInstance& original);

std::string equivalence_report_json(const EquivalenceReport& report);
std::string equivalence_report_text(const EquivalenceReport& report);

}  // namespace pivd

#endif
