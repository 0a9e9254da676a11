#pragma once

#include <string>
#include <vector>

#include "bpatlas/classifier.hpp"
#include "bpatlas/oracle.hpp"

namespace bpatlas {

struct VerifyCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool all_pass() const;
};

// Consistency sweep at one level. Cheap structural checks cover the full
// enumerations; oracle-backed checks subsample deterministically once the
// enumeration exceeds the per-check item cap.
VerifyReport verify_level(const LevelParams& lv, long depth,
                          ExecutionPolicy policy = ExecutionPolicy::serial,
                          std::size_t oracle_item_cap = 600);

}  // namespace bpatlas
