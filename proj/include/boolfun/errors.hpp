#pragma once
// Error taxonomy.  Parse problems carry a position; capacity_error marks
// inputs beyond the supported size limits (the CLI maps it to exit code 3).

#include <stdexcept>
#include <string>

namespace boolfun {

class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& msg, int line, int column = 0)
      : std::runtime_error("line " + std::to_string(line) +
                           (column > 0 ? ", column " + std::to_string(column)
                                       : std::string()) +
                           ": " + msg),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

class capacity_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace boolfun
