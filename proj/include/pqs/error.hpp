#pragma once

#include <stdexcept>
#include <string>

namespace pqs {

/// Module-tagged failure. what() reads "<module>: <message>".
class Error : public std::runtime_error {
 public:
  Error(std::string module, const std::string& message)
      : std::runtime_error(module + ": " + message), module_(std::move(module)) {}

  const std::string& module() const { return module_; }

 private:
  std::string module_;
};

}  // namespace pqs
