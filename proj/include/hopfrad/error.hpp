#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace hopfrad {

// Error classes map onto distinct process exit codes in the CLI.
enum class Errc {
  internal = 1,
  parse = 2,
  axiom = 3,
  too_large = 4,
  hypothesis_not_met = 5,
  unexpected_verdict = 6,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), code_(code), kind_(std::move(kind)) {}

  Errc code() const { return code_; }
  const std::string& kind() const { return kind_; }

  static Error parse(const std::string& what) { return {Errc::parse, "ParseError", what}; }
  static Error axiom(std::string kind, const std::string& what) {
    return {Errc::axiom, std::move(kind), what};
  }
  static Error too_large(const std::string& what) { return {Errc::too_large, "TooLarge", what}; }
  static Error hypothesis(const std::string& what) {
    return {Errc::hypothesis_not_met, "HypothesisNotMet", what};
  }
  static Error internal(std::string kind, const std::string& what) {
    return {Errc::internal, std::move(kind), what};
  }

 private:
  Errc code_;
  std::string kind_;
};

}  // namespace hopfrad
