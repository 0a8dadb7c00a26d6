#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace qct {

enum class Status { Pass, Fail, Info };

std::string_view to_string(Status s);

/// One line of a verification report.
struct CheckRecord {
  std::string check;
  Status status = Status::Pass;
  std::string detail;
  std::string witness;
};

struct Report {
  std::vector<CheckRecord> records;

  bool pass() const;
  void add(std::string check, Status status, std::string detail = {}, std::string witness = {});
  /// First failing record, or nullptr.
  const CheckRecord* first_failure() const;
};

}  // namespace qct
