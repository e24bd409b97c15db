//
// Copyright 2026 The foleval Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "foleval/report.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "absl/status/status.h"
#include "json.hpp"

namespace foleval {
namespace {

using json = nlohmann::ordered_json;

std::optional<double> Mean(double sum, uint64_t n) {
  if (n == 0) return std::nullopt;
  return sum / static_cast<double>(n);
}

json Optional(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

std::optional<double> OptionalDouble(const json& v) {
  if (v.is_null()) return std::nullopt;
  return v.get<double>();
}

Label LabelFromJson(const json& v) {
  auto label = ParseLabel(v.get<std::string>());
  if (!label) throw std::runtime_error("unknown label " + v.dump());
  return *label;
}

json ConfigJson(const RunConfig& c) {
  json j;
  j["lambda1"] = c.lambda1;
  j["lambda2"] = 1.0 - c.lambda1;
  j["closed_world"] = c.closed_world;
  j["seed"] = c.seed;
  j["domain_budget"] = c.domain_budget;
  j["le_exhaustive_atom_limit"] = c.le_exhaustive_atom_limit;
  j["le_sample_count"] = c.le_sample_count;
  j["reason_s_max"] = c.reason_weights.s_max;
  j["reason_s_mid"] = c.reason_weights.s_mid;
  j["reason_s_min"] = c.reason_weights.s_min;
  j["format"] = c.format;
  return j;
}

RunConfig ConfigFromJson(const json& j) {
  RunConfig c;
  c.lambda1 = j.at("lambda1").get<double>();
  c.closed_world = j.at("closed_world").get<bool>();
  c.seed = j.at("seed").get<uint64_t>();
  c.domain_budget = j.at("domain_budget").get<size_t>();
  c.le_exhaustive_atom_limit = j.at("le_exhaustive_atom_limit").get<size_t>();
  c.le_sample_count = j.at("le_sample_count").get<uint64_t>();
  c.reason_weights.s_max = j.at("reason_s_max").get<double>();
  c.reason_weights.s_mid = j.at("reason_s_mid").get<double>();
  c.reason_weights.s_min = j.at("reason_s_min").get<double>();
  c.format = j.at("format").get<std::string>();
  return c;
}

json RecordJson(const RecordResult& r) {
  json j;
  j["id"] = r.id;
  j["gold_label"] = std::string(LabelName(r.gold_label));
  j["predicted_label"] = std::string(LabelName(r.predicted_label));
  j["outcome"] = r.outcome;
  j["candidate"] = r.candidate;
  j["candidates"] = r.candidates;
  j["swf"] = r.swf;
  if (r.conv) {
    j["pse"] = r.conv->pse;
    j["le"] = r.conv->le;
    j["conv"] = r.conv->conv;
  } else {
    j["pse"] = nullptr;
    j["le"] = nullptr;
    j["conv"] = nullptr;
  }
  j["reason"] = r.reason;
  j["messages"] = r.messages;
  return j;
}

RecordResult RecordFromJson(const json& j, const RunConfig& config) {
  RecordResult r;
  r.id = j.at("id").get<std::string>();
  r.gold_label = LabelFromJson(j.at("gold_label"));
  r.predicted_label = LabelFromJson(j.at("predicted_label"));
  r.outcome = j.at("outcome").get<std::string>();
  r.candidate = j.at("candidate").get<size_t>();
  r.candidates = j.at("candidates").get<size_t>();
  r.swf = j.at("swf").get<double>();
  if (!j.at("conv").is_null()) {
    ConvScoreBreakdown b;
    b.swf = r.swf;
    b.pse = j.at("pse").get<double>();
    b.le = j.at("le").get<double>();
    b.lambda1 = config.lambda1;
    b.lambda2 = 1.0 - config.lambda1;
    b.conv = j.at("conv").get<double>();
    r.conv = b;
  }
  r.reason = j.at("reason").get<double>();
  r.messages = j.at("messages").get<std::vector<std::string>>();
  return r;
}

json AggregatesJson(const Aggregates& a) {
  json j;
  j["records"] = a.records;
  j["skipped_lines"] = a.skipped_lines;
  j["scale_exceeded"] = a.scale_exceeded;
  j["mean_swf"] = Optional(a.mean_swf);
  j["mean_pse"] = Optional(a.mean_pse);
  j["mean_le"] = Optional(a.mean_le);
  j["mean_conv"] = Optional(a.mean_conv);
  j["mean_reason"] = Optional(a.mean_reason);
  j["accuracy"] = Optional(a.accuracy);
  j["accuracy_within_budget"] = Optional(a.accuracy_within_budget);
  j["srho"] = Optional(a.srho);
  j["srho_degenerate"] = a.srho_degenerate;
  return j;
}

Aggregates AggregatesFromJson(const json& j) {
  Aggregates a;
  a.records = j.at("records").get<uint64_t>();
  a.skipped_lines = j.at("skipped_lines").get<uint64_t>();
  a.scale_exceeded = j.at("scale_exceeded").get<uint64_t>();
  a.mean_swf = OptionalDouble(j.at("mean_swf"));
  a.mean_pse = OptionalDouble(j.at("mean_pse"));
  a.mean_le = OptionalDouble(j.at("mean_le"));
  a.mean_conv = OptionalDouble(j.at("mean_conv"));
  a.mean_reason = OptionalDouble(j.at("mean_reason"));
  a.accuracy = OptionalDouble(j.at("accuracy"));
  a.accuracy_within_budget = OptionalDouble(j.at("accuracy_within_budget"));
  a.srho = OptionalDouble(j.at("srho"));
  a.srho_degenerate = j.at("srho_degenerate").get<bool>();
  return a;
}

json ConfusionJson(const ConfusionMatrix& m) {
  json j;
  for (size_t g = 0; g < kGoldLabels; ++g) {
    json row;
    for (size_t p = 0; p < kPredictedLabels; ++p) {
      row[std::string(LabelName(kAllLabels[p]))] = m[g][p];
    }
    j[std::string(LabelName(kAllLabels[g]))] = row;
  }
  return j;
}

ConfusionMatrix ConfusionFromJson(const json& j) {
  ConfusionMatrix m{};
  for (size_t g = 0; g < kGoldLabels; ++g) {
    const json& row = j.at(std::string(LabelName(kAllLabels[g])));
    for (size_t p = 0; p < kPredictedLabels; ++p) {
      m[g][p] = row.at(std::string(LabelName(kAllLabels[p]))).get<uint64_t>();
    }
  }
  return m;
}

std::string Fixed(const std::optional<double>& v, int digits) {
  if (!v) return "n/a";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, *v);
  return buf;
}

std::string Pad(std::string s, size_t width) {
  // Width counts bytes; labels are ASCII.
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

}  // namespace

Aggregates ComputeAggregates(const std::vector<RecordResult>& records,
                             uint64_t skipped_lines) {
  Aggregates a;
  a.records = records.size();
  a.skipped_lines = skipped_lines;
  double swf = 0, pse = 0, le = 0, conv = 0, reason = 0;
  uint64_t n_conv = 0, correct = 0, admitted = 0, admitted_correct = 0;
  std::vector<double> conv_list, reason_list;
  for (const RecordResult& r : records) {
    swf += r.swf;
    reason += r.reason;
    const bool hit = r.predicted_label == r.gold_label;
    correct += hit;
    if (r.outcome == "scale-exceeded") {
      ++a.scale_exceeded;
    } else {
      ++admitted;
      admitted_correct += hit;
    }
    if (r.conv) {
      pse += r.conv->pse;
      le += r.conv->le;
      conv += r.conv->conv;
      ++n_conv;
      conv_list.push_back(r.conv->conv);
      reason_list.push_back(r.reason);
    }
  }
  a.mean_swf = Mean(swf, a.records);
  a.mean_reason = Mean(reason, a.records);
  a.accuracy = Mean(static_cast<double>(correct), a.records);
  a.accuracy_within_budget = Mean(static_cast<double>(admitted_correct),
                                  admitted);
  a.mean_pse = Mean(pse, n_conv);
  a.mean_le = Mean(le, n_conv);
  a.mean_conv = Mean(conv, n_conv);
  if (n_conv > 0) {
    SrhoResult s = SrhoScore(conv_list, reason_list);
    a.srho_degenerate = s.degenerate;
    if (!s.degenerate) a.srho = s.value;
  }
  return a;
}

ConfusionMatrix ComputeConfusion(const std::vector<RecordResult>& records) {
  ConfusionMatrix m{};
  for (const RecordResult& r : records) {
    const auto g = static_cast<size_t>(r.gold_label);
    const auto p = static_cast<size_t>(r.predicted_label);
    if (g < kGoldLabels) ++m[g][p];
  }
  return m;
}

RunReport MakeReport(RunConfig config, std::vector<RecordResult> records,
                     uint64_t skipped_lines) {
  RunReport report;
  report.config = std::move(config);
  report.aggregates = ComputeAggregates(records, skipped_lines);
  report.confusion = ComputeConfusion(records);
  report.records = std::move(records);
  return report;
}

std::string ReportToJson(const RunReport& report) {
  json j;
  j["config"] = ConfigJson(report.config);
  json records = json::array();
  for (const RecordResult& r : report.records) records.push_back(RecordJson(r));
  j["records"] = std::move(records);
  j["aggregates"] = AggregatesJson(report.aggregates);
  j["confusion"] = ConfusionJson(report.confusion);
  return j.dump(2) + "\n";
}

absl::StatusOr<RunReport> ReportFromJson(const std::string& text) {
  RunReport report;
  try {
    const json j = json::parse(text);
    report.config = ConfigFromJson(j.at("config"));
    for (const json& r : j.at("records")) {
      report.records.push_back(RecordFromJson(r, report.config));
    }
    report.aggregates = AggregatesFromJson(j.at("aggregates"));
    report.confusion = ConfusionFromJson(j.at("confusion"));
  } catch (const std::exception& e) {
    return absl::InvalidArgumentError(std::string("malformed report: ") +
                                      e.what());
  }
  if (ComputeAggregates(report.records, report.aggregates.skipped_lines) !=
      report.aggregates) {
    return absl::DataLossError("report aggregates do not match its records");
  }
  if (ComputeConfusion(report.records) != report.confusion) {
    return absl::DataLossError(
        "report confusion matrix does not match its records");
  }
  return report;
}

absl::Status WriteReport(const RunReport& report, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return absl::PermissionDeniedError("io-error: cannot write " + path);
  out << ReportToJson(report);
  out.close();
  if (!out) return absl::DataLossError("io-error: write failed for " + path);
  return absl::OkStatus();
}

absl::StatusOr<RunReport> LoadReport(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError("io-error: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return ReportFromJson(buf.str());
}

std::string SummaryTable(const RunReport& report, const std::string& row_name) {
  const Aggregates& a = report.aggregates;
  auto pct = [](const std::optional<double>& v) {
    return v ? std::optional<double>(*v * 100.0) : std::nullopt;
  };
  const size_t w0 = std::max<size_t>(row_name.size(), 6) + 2;
  std::string out;
  out += Pad("Method", w0) + Pad("Conv-Score", 12) + Pad("Accuracy", 10) +
         Pad("Reason-Score", 14) + "SRho-Score\n";
  out += Pad(row_name, w0) + Pad(Fixed(a.mean_conv, 3), 12) +
         Pad(Fixed(pct(a.accuracy), 1), 10) +
         Pad(Fixed(a.mean_reason, 3), 14) + Fixed(a.srho, 3) + "\n";
  out += "\nrecords: " + std::to_string(a.records) +
         "  skipped lines: " + std::to_string(a.skipped_lines) +
         "  scale-exceeded: " + std::to_string(a.scale_exceeded) + "\n";
  out += "mean SWF " + Fixed(a.mean_swf, 3) + "  mean PSE " +
         Fixed(a.mean_pse, 3) + "  mean LE " + Fixed(a.mean_le, 3) + "\n";
  out += "\nconfusion (rows: gold, columns: predicted)\n";
  out += Pad("", 12);
  for (Label p : kAllLabels) out += Pad(std::string(LabelName(p)), 15);
  out += "\n";
  for (size_t g = 0; g < kGoldLabels; ++g) {
    out += Pad(std::string(LabelName(kAllLabels[g])), 12);
    for (size_t p = 0; p < kPredictedLabels; ++p) {
      out += Pad(std::to_string(report.confusion[g][p]), 15);
    }
    out += "\n";
  }
  return out;
}

}  // namespace foleval
