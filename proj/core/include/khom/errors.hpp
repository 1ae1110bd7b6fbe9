#ifndef KHOM_ERRORS_HPP
#define KHOM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace khom {

// Malformed input documents: bad JSON shape, dangling references,
// out-of-range colors, duplicate ids.
class SchemaError : public std::runtime_error {
 public:
  explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

// Violated operation precondition: non-composable endpoints, bounds
// violations, missing square for a swap, partial cochain tables.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace khom

#endif
