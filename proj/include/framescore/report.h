// Copyright 2026 The Framescore Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FRAMESCORE_REPORT_H_
#define FRAMESCORE_REPORT_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "framescore/annotation.h"
#include "framescore/bleu.h"
#include "framescore/correlation.h"
#include "framescore/metrics.h"

namespace framescore {

// Rendering of score, BLEU and correlation reports. Tables and CSV round to
// two decimals half-up; JSON keeps full double precision. Output is a pure
// function of the inputs.

enum class ReportFormat { kTable, kJson, kCsv };

std::optional<ReportFormat> ParseReportFormat(std::string_view name);

double RoundHalfUp(double value, int decimals = 2);

// Two-decimal rendering, e.g. 0.8333 -> "0.83", 0.745 -> "0.75".
std::string FormatRatio(double value);

std::string RenderScoreReport(const AnnotatedDocument &doc,
                              const DocumentScores &scores, ReportFormat format);

struct BleuReport {
  std::string doc_id;
  std::string system_id;
  std::vector<std::pair<int, BleuScore>> per_sentence;
  double average = 0.0;
};

std::string RenderBleuReport(const BleuReport &report, ReportFormat format);

// Metric values read back from a score or BLEU report in JSON form.
struct MetricReport {
  std::string doc_id;
  std::string system_id;
  // metric ("mine", "maxe", "bleu") -> sentence id -> value
  std::map<std::string, std::map<int, double>> values;
};

// Accepts the JSON emitted by RenderScoreReport (contributing "mine" and
// "maxe" F-scores of scoreable sentences) and RenderBleuReport
// (contributing "bleu"). Throws ParseError or SchemaError.
MetricReport ParseMetricReport(std::string_view json);

std::string RenderCorrelationReport(
    const std::map<std::string, MetricCorrelation> &correlations,
    ReportFormat format);

}  // namespace framescore

#endif  // FRAMESCORE_REPORT_H_
