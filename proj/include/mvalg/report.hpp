#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "mvalg/carrier.hpp"

namespace mvalg {

enum class Status { pass, fail, skipped };

std::string_view to_string(Status s);

/// One axiom or property verdict. A failing verdict always carries a witness:
/// element indices for finite structures, or just rendered text for sampled
/// checks over an infinite carrier.
struct Verdict {
  std::string id;
  Status status = Status::pass;
  std::vector<std::size_t> witness;
  std::vector<std::string> witness_labels;
  std::string detail;
  /// Informational verdicts are reported but do not affect overall().
  bool informational = false;

  bool passed() const { return status == Status::pass; }
  bool has_witness() const { return !witness_labels.empty(); }
};

class CheckReport {
 public:
  void pass(std::string id, std::string detail = {});
  void fail(std::string id, const Carrier& carrier, std::initializer_list<std::size_t> witness,
            std::string detail = {});
  void fail(std::string id, const Carrier& carrier, std::vector<std::size_t> witness,
            std::string detail = {});
  void fail_text(std::string id, std::vector<std::string> witness_labels, std::string detail = {});
  void skip(std::string id, std::string detail = {});
  /// Appends a verdict that does not count toward overall().
  void inform(Verdict v);
  void add(Verdict v);
  /// Appends every verdict of `other`, prefixing ids with `prefix`.
  void merge(const CheckReport& other, std::string_view prefix = {});

  /// Records `ok` as pass, otherwise as a failure with the given witness.
  void verdict(std::string id, bool ok, const Carrier& carrier, std::vector<std::size_t> witness,
               std::string detail = {});

  bool overall() const;
  const std::vector<Verdict>& verdicts() const { return verdicts_; }
  const Verdict* find(std::string_view id) const;
  /// True iff a verdict with this id exists and passed.
  bool passed(std::string_view id) const;
  bool failed(std::string_view id) const;

  /// Human-readable table, one line per verdict.
  std::string to_text() const;
  /// One JSON object per line; field order: id, status, informational, witness, detail.
  std::string to_json_lines() const;

 private:
  std::vector<Verdict> verdicts_;
};

}  // namespace mvalg
