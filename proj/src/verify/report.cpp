#include "hydrocg/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <tuple>

namespace hydrocg::verify {

namespace {

std::vector<long long> values(const Params& p) {
  std::vector<long long> out;
  out.reserve(p.size());
  for (const auto& [name, v] : p) out.push_back(v);
  return out;
}

bool record_less(const CheckRecord& a, const CheckRecord& b) {
  return std::forward_as_tuple(a.suite, values(a.params), a.params, a.expected, a.actual, a.note) <
         std::forward_as_tuple(b.suite, values(b.params), b.params, b.expected, b.actual, b.note);
}

CheckRecord constant_record(const ExtractedConstant& c) {
  CheckRecord r;
  r.suite = c.suite + "/constant";
  r.params = c.params;
  r.expected = r.actual = exactnum::render(c.value);
  r.pass = true;
  r.note = c.name;
  return r;
}

}  // namespace

Summary VerificationReport::summary() const {
  Summary s;
  for (const auto& r : records) {
    if (r.skipped)
      ++s.skipped;
    else if (r.pass)
      ++s.passed;
    else
      ++s.failed;
  }
  return s;
}

void VerificationReport::merge(VerificationReport other) {
  for (auto& r : other.records) records.push_back(std::move(r));
  for (auto& c : other.constants) constants.push_back(std::move(c));
}

void VerificationReport::canonicalize() {
  std::stable_sort(records.begin(), records.end(), record_less);
  std::stable_sort(constants.begin(), constants.end(), [](const auto& a, const auto& b) {
    return std::forward_as_tuple(a.suite, a.name, values(a.params)) <
           std::forward_as_tuple(b.suite, b.name, values(b.params));
  });
}

const ExtractedConstant* VerificationReport::find_constant(const std::string& name) const {
  for (const auto& c : constants)
    if (c.name == name) return &c;
  return nullptr;
}

std::string serialize(const VerificationReport& report) {
  std::vector<CheckRecord> all = report.records;
  for (const auto& c : report.constants) all.push_back(constant_record(c));
  std::stable_sort(all.begin(), all.end(), record_less);
  std::string out;
  for (const auto& r : all) {
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [name, v] : r.params) params[name] = v;
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    j["params"] = params;
    j["expected"] = r.expected;
    j["actual"] = r.actual;
    j["pass"] = r.pass;
    j["note"] = r.note;
    out += j.dump();
    out += '\n';
  }
  return out;
}

CheckRecord parse_record_line(const std::string& line) {
  const auto j = nlohmann::ordered_json::parse(line);
  CheckRecord r;
  r.suite = j.at("suite").get<std::string>();
  for (const auto& [name, v] : j.at("params").items()) r.params.emplace_back(name, v.get<long long>());
  r.expected = j.at("expected").get<std::string>();
  r.actual = j.at("actual").get<std::string>();
  r.pass = j.at("pass").get<bool>();
  r.note = j.at("note").get<std::string>();
  r.skipped = r.note == kSkippedNote;
  return r;
}

}  // namespace hydrocg::verify
