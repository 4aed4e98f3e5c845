// Copyright 2026 The lingkit Authors
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

#pragma once

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "lingkit/core/unicode.hpp"
#include "lingkit/metrics/aggregate.hpp"
#include "lingkit/metrics/classification.hpp"
#include "lingkit/metrics/spans.hpp"

namespace lingkit::metrics {

enum class ReportFormat { kTsv, kHuman };

inline std::string format_score(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", value);
  std::string s(buf);
  if (s == "-0.00") s = "0.00";
  return s;
}

// "mean ±std", both to two decimals.
inline std::string format_aggregate(const RunAggregate& agg) {
  return format_score(agg.mean) + " \xC2\xB1" + format_score(agg.std);
}

// A small table rendered either as TSV or as space-aligned text.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string render(ReportFormat format) const {
    std::ostringstream os;
    if (format == ReportFormat::kTsv) {
      const auto line = [&](const std::vector<std::string>& cells) {
        for (size_t i = 0; i < cells.size(); ++i) os << (i ? "\t" : "") << cells[i];
        os << '\n';
      };
      line(header);
      for (const auto& r : rows) line(r);
      return os.str();
    }
    std::vector<size_t> width(header.size(), 0);
    const auto display_width = [](const std::string& s) { return unicode::decode(s).size(); };
    const auto measure = [&](const std::vector<std::string>& cells) {
      for (size_t i = 0; i < cells.size() && i < width.size(); ++i) {
        width[i] = std::max(width[i], display_width(cells[i]));
      }
    };
    measure(header);
    for (const auto& r : rows) measure(r);
    const auto line = [&](const std::vector<std::string>& cells) {
      std::string out;
      for (size_t i = 0; i < cells.size(); ++i) {
        if (i) out += "  ";
        out += cells[i];
        if (i + 1 < cells.size() && i < width.size()) {
          out.append(width[i] - display_width(cells[i]), ' ');
        }
      }
      os << out << '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
    return os.str();
  }
};

template <typename Label>
std::string label_string(const Label& label) {
  std::ostringstream os;
  os << label;
  return os.str();
}

// Columns: class, P, R, F1, support. Scores are percentages with two
// decimals. A final "macro" row carries macro F1 and the item count.
template <typename Label>
Table classification_table(const ClassificationReport<Label>& report) {
  Table t{{"class", "P", "R", "F1", "support"}, {}};
  for (const auto& c : report.per_class) {
    t.rows.push_back({label_string(c.label), format_score(100.0 * c.score.precision),
                      format_score(100.0 * c.score.recall), format_score(100.0 * c.score.f1),
                      std::to_string(c.support)});
  }
  if (!report.per_class.empty()) {
    t.rows.push_back({"macro", "", "", format_score(100.0 * report.macro_f1),
                      std::to_string(report.total)});
  }
  return t;
}

template <typename Label>
std::string emit_classification_report(const ClassificationReport<Label>& report,
                                       ReportFormat format) {
  return classification_table(report).render(format);
}

// Rows are gold classes, columns predicted classes.
template <typename Label>
std::string confusion_csv(const ClassificationReport<Label>& report) {
  std::ostringstream os;
  os << "gold\\pred";
  for (const auto& c : report.classes) os << ',' << label_string(c);
  os << '\n';
  for (size_t i = 0; i < report.classes.size(); ++i) {
    os << label_string(report.classes[i]);
    for (uint64_t v : report.confusion[i]) os << ',' << v;
    os << '\n';
  }
  return os.str();
}

inline Table span_table(const SpanReport& report) {
  Table t{{"type", "P", "R", "F1", "tp", "fp", "fn"}, {}};
  const auto row = [&](const std::string& name, const PrfScore& s) {
    t.rows.push_back({name, format_score(100.0 * s.precision), format_score(100.0 * s.recall),
                      format_score(100.0 * s.f1), std::to_string(s.tp), std::to_string(s.fp),
                      std::to_string(s.fn)});
  };
  for (const auto& [type, s] : report.by_type) row(type, s);
  row("overall", report.overall);
  return t;
}

struct DatasetResult {
  std::string name;
  RunAggregate aggregate;
};

// One row per dataset ("mean ±std"), then the unweighted benchmark mean of
// the dataset means.
inline Table benchmark_table(const std::vector<DatasetResult>& results) {
  Table t{{"dataset", "score"}, {}};
  std::vector<NamedScore> means;
  for (const auto& r : results) {
    t.rows.push_back({r.name, r.aggregate.runs.size() > 1 ? format_aggregate(r.aggregate)
                                                          : format_score(r.aggregate.mean)});
    means.push_back({r.name, r.aggregate.mean});
  }
  if (!means.empty()) t.rows.push_back({"benchmark", format_score(benchmark_score(means))});
  return t;
}

}  // namespace lingkit::metrics
