#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace hamwalk {

// Domain error with a stable machine-readable name.  The CLI prints the name
// on stderr and exits with status 1; tests match on it.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(what), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

[[noreturn]] inline void fail(std::string name, const std::string& msg) {
  throw Error(std::move(name), msg);
}

}  // namespace hamwalk
