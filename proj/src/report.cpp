#include "qct/report.hpp"

#include <algorithm>

namespace qct {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Info: return "info";
  }
  return "info";
}

bool Report::pass() const { return first_failure() == nullptr; }

void Report::add(std::string check, Status status, std::string detail, std::string witness) {
  records.push_back({std::move(check), status, std::move(detail), std::move(witness)});
}

const CheckRecord* Report::first_failure() const {
  auto it = std::find_if(records.begin(), records.end(),
                         [](const CheckRecord& r) { return r.status == Status::Fail; });
  return it == records.end() ? nullptr : &*it;
}

}  // namespace qct
