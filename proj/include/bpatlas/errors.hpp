#pragma once

#include <stdexcept>
#include <string>

namespace bpatlas {

enum class Errc {
  NotCoprime,
  BelowAdmissible,
  NoReduction,
  NotRelaxedSupport,
  NotSurviving,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::BelowAdmissible: return "BelowAdmissible";
    case Errc::NoReduction: return "NoReduction";
    case Errc::NotRelaxedSupport: return "NotRelaxedSupport";
    case Errc::NotSurviving: return "NotSurviving";
  }
  return "Unknown";
}

class DomainError : public std::runtime_error {
 public:
  explicit DomainError(Errc c, const std::string& detail = "")
      : std::runtime_error(detail.empty()
                               ? std::string(errc_name(c))
                               : std::string(errc_name(c)) + ": " + detail),
        code_(c) {}
  Errc code() const { return code_; }
  const char* name() const { return errc_name(code_); }

 private:
  Errc code_;
};

}  // namespace bpatlas
