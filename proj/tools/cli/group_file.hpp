#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "commprob/perm.hpp"

namespace commprob::cli {

/// Malformed user input; carries the 1-based line number when known.
class InputError : public Error {
 public:
  InputError(std::size_t line, const std::string& message)
      : Error(line ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct GroupFile {
  std::string path;
  std::size_t degree = 0;
  std::vector<Permutation> generators;
};

/// Group file format: the first non-comment line is the degree n; each
/// further non-comment line lists n space-separated 0-based images. `#`
/// starts a comment and blank lines are ignored.
GroupFile parse_group_file(std::string_view text);

GroupFile read_group_file(const std::string& path);

/// Writes `generators` in the same format, preceded by `comment` lines.
std::string format_group_file(std::size_t degree, const std::vector<Permutation>& generators,
                              const std::string& comment = "");

std::string format_group_file(const FiniteGroup& g, const std::string& comment = "");

}  // namespace commprob::cli
