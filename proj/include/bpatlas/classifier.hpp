#pragma once

#include <vector>

#include "bpatlas/functors.hpp"

namespace bpatlas {

struct FamilyRecord {
  AffineWeight orbitKey;
  std::array<AffineWeight, 3> members;  // z3 applications of the key
  Rat Delta;
  Rat omega;
  std::array<Rat, 3> rawCharges;  // twisted charges, member order
  std::array<Rat, 3> excluded;    // canonical cosets, ascending

  bool operator==(const FamilyRecord& o) const {
    return orbitKey == o.orbitKey && members == o.members && Delta == o.Delta &&
           omega == o.omega && rawCharges == o.rawCharges &&
           excluded == o.excluded;
  }
};

// Nonsemisimple coherent-family quotient at the coset of w's twisted charge:
// kind=plus has the conjugate factor as submodule, kind=minus as quotient.
struct ExactSeqRecord {
  FamilyKind kind = FamilyKind::plus;
  AffineWeight source;
  AffineWeight partner;
  Rat j;      // twisted charge of source; partner carries -j-1
  Rat Delta;
  Rat omega;
  ModuleLabel submodule;
  ModuleLabel quotient;

  bool operator==(const ExactSeqRecord& o) const {
    return kind == o.kind && source == o.source && partner == o.partner &&
           j == o.j && Delta == o.Delta && omega == o.omega &&
           submodule == o.submodule && quotient == o.quotient;
  }
};

struct AtlasCounts {
  long long untwistedHW = 0;
  long long twistedHWFiniteTop = 0;
  long long twistedHWInfiniteTop = 0;
  long long relaxedFamilies = 0;
  bool operator==(const AtlasCounts&) const = default;
};

struct Atlas {
  LevelParams level;
  bool categoryOSemisimple = true;
  std::vector<ModuleLabel> untwistedHW;
  std::vector<ModuleLabel> twistedHW;
  std::vector<FamilyRecord> families;
  std::vector<ExactSeqRecord> nonsemisimple;
  AtlasCounts counts;

  bool operator==(const Atlas& o) const {
    return level == o.level && categoryOSemisimple == o.categoryOSemisimple &&
           untwistedHW == o.untwistedHW && twistedHW == o.twistedHW &&
           families == o.families && nonsemisimple == o.nonsemisimple &&
           counts == o.counts;
  }
};

AtlasCounts closed_form_counts(const LevelParams& lv);

// Partner weight pairing the two composition factors of the nonsemisimple
// family quotients; an involution on I(u,v).
AffineWeight nonss_partner(const AffineWeight& w);

enum class ExecutionPolicy { serial, parallel };

// Full classification at the level. The parallel policy distributes the
// per-weight maps over OpenMP threads; output is identical to serial.
Atlas build_atlas(const LevelParams& lv,
                  ExecutionPolicy policy = ExecutionPolicy::serial);

}  // namespace bpatlas
