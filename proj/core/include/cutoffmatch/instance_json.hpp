#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "cutoffmatch/egalitarian.hpp"
#include "cutoffmatch/instance.hpp"
#include "cutoffmatch/matching.hpp"

namespace cutoffmatch {

// Syntax, schema or reference error in a JSON document. line/column are
// 1-based; 0 when the position is unknown.
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& message, std::size_t line = 0, std::size_t column = 0);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Instance document:
//   {"applicants": ["a1", ...],
//    "projects": [{"id": "p1", "capacity": 1, "prefs": ["a2", "a1"]}, ...],
//    "supervisors": [{"id": "s1", "budget": "7/10", "projects": ["p1"]}, ...],
//    "applicant_prefs": {"a1": ["p2", "p1"], ...}}
// Budgets are strings ("7/10", "0.7", "2") or JSON integers; JSON floats are
// rejected because they are not exact.
InstanceSpec parse_instance_spec(std::string_view text);
// Also validates; violations are reported as InputError anchored at the
// first line mentioning the offending id.
Instance parse_instance(std::string_view text);
Instance load_instance(const std::string& path);

// Canonical, byte-stable rendering (2-space indent, trailing newline).
std::string instance_to_json(const InstanceSpec& spec);
std::string instance_to_json(const Instance& inst);

// {"pairs": [{"applicant": "a1", "project": "p2"}, ...]} or [["a1", "p2"], ...].
Matching parse_matching(const Instance& inst, std::string_view text);
Matching load_matching(const Instance& inst, const std::string& path);

// {"targets": [{"supervisor": "s1", "project": "p1", "t": "1/2"}, ...]}
TargetProfile parse_targets(const Instance& inst, std::string_view text);
TargetProfile load_targets(const Instance& inst, const std::string& path);

std::string read_file(const std::string& path);  // InputError on failure
void write_file(const std::string& path, std::string_view content);  // std::runtime_error on failure

}  // namespace cutoffmatch
