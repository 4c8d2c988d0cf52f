// Report serialization: CSV (frozen column order, see docs/cli.md), JSON,
// and minimal SVG charts for ranking and trend output.

#ifndef PQCHW_REPORT_HPP
#define PQCHW_REPORT_HPP

#include <string>
#include <vector>

#include "pqchw/cost.hpp"

namespace pqchw {

std::string cost_reports_to_csv(const std::vector<CostReport>& reports);
std::string cost_reports_to_json(const std::vector<CostReport>& reports);

std::string rank_to_csv(const std::vector<RankEntry>& entries, RankMetric metric);
std::string rank_to_json(const std::vector<RankEntry>& entries, RankMetric metric);
// Bar chart; entries flagged as estimated are excluded from the bars.
std::string rank_to_svg(const std::vector<RankEntry>& entries, RankMetric metric);

std::string trends_to_csv(const std::vector<TrendRow>& rows);
std::string trends_to_json(const std::vector<TrendRow>& rows);
std::string trends_to_svg(const std::vector<TrendRow>& rows);

}  // namespace pqchw

#endif  // PQCHW_REPORT_HPP
