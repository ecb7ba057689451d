#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace alphacf::harness {

// Quotes a field when it holds a comma, quote, CR or LF; quotes are doubled.
std::string csv_escape(const std::string& field);

class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}
  void row(const std::vector<std::string>& fields);

 private:
  std::ostream& out_;
};

}  // namespace alphacf::harness
