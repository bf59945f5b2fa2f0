#ifndef MCALG_REPORT_HPP
#define MCALG_REPORT_HPP

#include <string>

#include <json.hpp>

#include "mcalg/algebra.hpp"

namespace mcalg {

/// Everything a rendered report needs besides the verdicts.
struct ReportScope {
  const Corpus& corpus;
  const Universe& universe;
};

/// {operator, universe, corpus, table1, table2, implication_audit, theorems}
nlohmann::ordered_json report_json(const OperatorReport& report, const ReportScope& scope);

/// Plain-text tables, one line per row, witnesses indented below.
std::string report_text(const OperatorReport& report, const ReportScope& scope);

nlohmann::ordered_json verdict_json(const Verdict& v, const Corpus& corpus);
nlohmann::ordered_json universe_json(const Universe& u);
nlohmann::ordered_json partition_json(const Partition& p, const Corpus& corpus);

/// One-line summary of a model for reports: its rendering on one line, or
/// `(empty)`.
std::string model_summary(const Model& m);

}  // namespace mcalg

#endif  // MCALG_REPORT_HPP
