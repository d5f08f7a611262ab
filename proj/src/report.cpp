#include "mvalg/report.hpp"

#include <json.hpp>
#include <sstream>

namespace mvalg {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::skipped:
      return "skipped";
  }
  return "?";
}

void CheckReport::pass(std::string id, std::string detail) {
  Verdict v;
  v.id = std::move(id);
  v.detail = std::move(detail);
  verdicts_.push_back(std::move(v));
}

void CheckReport::fail(std::string id, const Carrier& carrier, std::initializer_list<std::size_t> witness,
                       std::string detail) {
  fail(std::move(id), carrier, std::vector<std::size_t>(witness), std::move(detail));
}

void CheckReport::fail(std::string id, const Carrier& carrier, std::vector<std::size_t> witness,
                       std::string detail) {
  Verdict v;
  v.id = std::move(id);
  v.status = Status::fail;
  for (std::size_t i : witness) v.witness_labels.push_back(carrier.name(i));
  if (v.witness_labels.empty()) v.witness_labels.push_back("-");
  v.witness = std::move(witness);
  v.detail = std::move(detail);
  verdicts_.push_back(std::move(v));
}

void CheckReport::fail_text(std::string id, std::vector<std::string> witness_labels, std::string detail) {
  Verdict v;
  v.id = std::move(id);
  v.status = Status::fail;
  v.witness_labels = std::move(witness_labels);
  if (v.witness_labels.empty()) v.witness_labels.push_back("-");
  v.detail = std::move(detail);
  verdicts_.push_back(std::move(v));
}

void CheckReport::skip(std::string id, std::string detail) {
  Verdict v;
  v.id = std::move(id);
  v.status = Status::skipped;
  v.detail = std::move(detail);
  verdicts_.push_back(std::move(v));
}

void CheckReport::inform(Verdict v) {
  v.informational = true;
  verdicts_.push_back(std::move(v));
}

void CheckReport::add(Verdict v) { verdicts_.push_back(std::move(v)); }

void CheckReport::merge(const CheckReport& other, std::string_view prefix) {
  for (Verdict v : other.verdicts_) {
    v.id = std::string(prefix) + v.id;
    verdicts_.push_back(std::move(v));
  }
}

void CheckReport::verdict(std::string id, bool ok, const Carrier& carrier, std::vector<std::size_t> witness,
                          std::string detail) {
  if (ok) {
    pass(std::move(id), std::move(detail));
  } else {
    fail(std::move(id), carrier, std::move(witness), std::move(detail));
  }
}

bool CheckReport::overall() const {
  for (const auto& v : verdicts_) {
    if (!v.informational && v.status == Status::fail) return false;
  }
  return true;
}

const Verdict* CheckReport::find(std::string_view id) const {
  for (const auto& v : verdicts_) {
    if (v.id == id) return &v;
  }
  return nullptr;
}

bool CheckReport::passed(std::string_view id) const {
  const Verdict* v = find(id);
  return v != nullptr && v->status == Status::pass;
}

bool CheckReport::failed(std::string_view id) const {
  const Verdict* v = find(id);
  return v != nullptr && v->status == Status::fail;
}

std::string CheckReport::to_text() const {
  std::size_t width = 8;
  for (const auto& v : verdicts_) width = std::max(width, v.id.size());
  std::ostringstream out;
  for (const auto& v : verdicts_) {
    out << v.id << std::string(width - v.id.size() + 2, ' ') << to_string(v.status);
    if (v.informational) out << " (info)";
    if (v.status == Status::fail) {
      out << "  witness=(";
      for (std::size_t i = 0; i < v.witness_labels.size(); ++i) {
        if (i) out << ",";
        out << v.witness_labels[i];
      }
      out << ")";
    }
    if (!v.detail.empty()) out << "  " << v.detail;
    out << "\n";
  }
  out << "overall" << std::string(width - 7 + 2, ' ') << (overall() ? "pass" : "fail") << "\n";
  return out.str();
}

std::string CheckReport::to_json_lines() const {
  std::string out;
  for (const auto& v : verdicts_) {
    nlohmann::ordered_json j;
    j["id"] = v.id;
    j["status"] = std::string(to_string(v.status));
    j["informational"] = v.informational;
    j["witness"] = v.witness_labels;
    j["detail"] = v.detail;
    out += j.dump() + "\n";
  }
  nlohmann::ordered_json summary;
  summary["id"] = "overall";
  summary["status"] = overall() ? "pass" : "fail";
  out += summary.dump() + "\n";
  return out;
}

}  // namespace mvalg
