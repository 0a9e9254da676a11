#include "bpatlas/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace bpatlas {

const char* to_string(Sector s) {
  return s == Sector::untwisted ? "untwisted" : "twisted";
}

const char* to_string(ModuleClass c) {
  switch (c) {
    case ModuleClass::highestWeight: return "highestWeight";
    case ModuleClass::conjugateHighestWeight: return "conjugateHighestWeight";
    case ModuleClass::relaxedSimple: return "relaxedSimple";
    case ModuleClass::relaxedPlus: return "relaxedPlus";
    case ModuleClass::relaxedMinus: return "relaxedMinus";
  }
  return "";
}

const char* to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::semisimple: return "semisimple";
    case FamilyKind::plus: return "plus";
    case FamilyKind::minus: return "minus";
  }
  return "";
}

const char* to_string(OrbitStatus s) {
  switch (s) {
    case OrbitStatus::hw: return "hw";
    case OrbitStatus::relaxed: return "relaxed";
    case OrbitStatus::nonRelaxed: return "nonRelaxed";
  }
  return "";
}

namespace {

Sector sector_from(const std::string& s) {
  if (s == "untwisted") return Sector::untwisted;
  if (s == "twisted") return Sector::twisted;
  throw std::invalid_argument("bad sector: " + s);
}

ModuleClass class_from(const std::string& s) {
  for (ModuleClass c :
       {ModuleClass::highestWeight, ModuleClass::conjugateHighestWeight,
        ModuleClass::relaxedSimple, ModuleClass::relaxedPlus,
        ModuleClass::relaxedMinus})
    if (s == to_string(c)) return c;
  throw std::invalid_argument("bad module class: " + s);
}

FamilyKind kind_from(const std::string& s) {
  for (FamilyKind k : {FamilyKind::semisimple, FamilyKind::plus, FamilyKind::minus})
    if (s == to_string(k)) return k;
  throw std::invalid_argument("bad family kind: " + s);
}

Json topdim_json(long d) {
  if (d == kInfiniteDim) return Json("inf");
  return Json(d);
}

long topdim_from(const Json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() != "inf")
      throw std::invalid_argument("bad topDim");
    return kInfiniteDim;
  }
  return j.get<long>();
}

Json omega_json(const std::optional<Rat>& w) {
  if (!w) return Json(nullptr);
  return Json(rat_str(*w));
}

Json label_json(const ModuleLabel& m) {
  Json j;
  j["sector"] = to_string(m.sector);
  j["class"] = to_string(m.cls);
  j["j"] = rat_str(m.j);
  j["Delta"] = rat_str(m.Delta);
  j["omega"] = omega_json(m.omega);
  j["topDim"] = topdim_json(m.topDim);
  j["source"] = weight_json(*m.source);
  return j;
}

ModuleLabel label_from_json(const LevelParams& lv, const Json& j) {
  ModuleLabel m;
  m.sector = sector_from(j.at("sector").get<std::string>());
  m.cls = class_from(j.at("class").get<std::string>());
  m.j = parse_rat(j.at("j").get<std::string>());
  m.Delta = parse_rat(j.at("Delta").get<std::string>());
  if (!j.at("omega").is_null())
    m.omega = parse_rat(j.at("omega").get<std::string>());
  m.topDim = topdim_from(j.at("topDim"));
  m.source = weight_from_json(lv, j.at("source"));
  return m;
}

// Nonsemisimple sub/quot entries are references, keyed only by
// (sector, class, j, Delta).
Json label_ref_json(const ModuleLabel& m) {
  Json j;
  j["sector"] = to_string(m.sector);
  j["class"] = to_string(m.cls);
  j["j"] = rat_str(m.j);
  j["Delta"] = rat_str(m.Delta);
  return j;
}

}  // namespace

Json weight_json(const AffineWeight& w) {
  Json j;
  j["lambdaI"] = w.lambdaI;
  j["lambdaF"] = w.lambdaF;
  Json labels = Json::array();
  for (const Rat& r : w.labels()) labels.push_back(rat_str(r));
  j["labels"] = labels;
  return j;
}

AffineWeight weight_from_json(const LevelParams& lv, const Json& j) {
  DynkinTriple li{}, lf{};
  for (int i = 0; i < 3; ++i) {
    li[i] = j.at("lambdaI").at(i).get<int>();
    lf[i] = j.at("lambdaF").at(i).get<int>();
  }
  AffineWeight w = make_weight(lv, li, lf);
  RatTriple lam = w.labels();
  for (int i = 0; i < 3; ++i)
    if (parse_rat(j.at("labels").at(i).get<std::string>()) != lam[i])
      throw std::invalid_argument("weight labels inconsistent with triples");
  return w;
}

Json level_json(const LevelParams& lv) {
  Json j;
  j["u"] = lv.u;
  j["v"] = lv.v;
  j["k"] = rat_str(lv.k);
  j["c"] = rat_str(lv.c);
  return j;
}

Json atlas_json(const Atlas& a) {
  Json j;
  j["schema"] = kAtlasSchema;
  j["level"] = level_json(a.level);
  j["categoryOSemisimple"] = a.categoryOSemisimple;
  j["untwistedHW"] = Json::array();
  for (const auto& m : a.untwistedHW) j["untwistedHW"].push_back(label_json(m));
  j["twistedHW"] = Json::array();
  for (const auto& m : a.twistedHW) j["twistedHW"].push_back(label_json(m));
  j["families"] = Json::array();
  for (const auto& f : a.families) {
    Json fj;
    fj["orbitKey"] = weight_json(f.orbitKey);
    fj["members"] = Json::array();
    for (const auto& m : f.members) fj["members"].push_back(weight_json(m));
    fj["Delta"] = rat_str(f.Delta);
    fj["omega"] = rat_str(f.omega);
    fj["rawCharges"] = Json::array();
    for (const auto& r : f.rawCharges) fj["rawCharges"].push_back(rat_str(r));
    fj["excluded"] = Json::array();
    for (const auto& r : f.excluded) fj["excluded"].push_back(rat_str(r));
    j["families"].push_back(fj);
  }
  j["nonsemisimple"] = Json::array();
  for (const auto& r : a.nonsemisimple) {
    Json rj;
    rj["kind"] = to_string(r.kind);
    rj["j"] = rat_str(r.j);
    rj["Delta"] = rat_str(r.Delta);
    rj["omega"] = rat_str(r.omega);
    rj["source"] = weight_json(r.source);
    rj["partner"] = weight_json(r.partner);
    rj["submodule"] = label_ref_json(r.submodule);
    rj["quotient"] = label_ref_json(r.quotient);
    j["nonsemisimple"].push_back(rj);
  }
  j["counts"] = {{"untwistedHW", a.counts.untwistedHW},
                 {"twistedHWFiniteTop", a.counts.twistedHWFiniteTop},
                 {"twistedHWInfiniteTop", a.counts.twistedHWInfiniteTop},
                 {"relaxedFamilies", a.counts.relaxedFamilies}};
  return j;
}

Atlas atlas_from_json(const Json& j) {
  if (j.at("schema").get<std::string>() != kAtlasSchema)
    throw std::invalid_argument("unknown schema");
  const Json& lj = j.at("level");
  LevelParams lv = make_level(lj.at("u").get<int>(), lj.at("v").get<int>());
  if (parse_rat(lj.at("k").get<std::string>()) != lv.k ||
      parse_rat(lj.at("c").get<std::string>()) != lv.c)
    throw std::invalid_argument("level data inconsistent");

  Atlas a;
  a.level = lv;
  a.categoryOSemisimple = j.at("categoryOSemisimple").get<bool>();
  for (const Json& mj : j.at("untwistedHW"))
    a.untwistedHW.push_back(label_from_json(lv, mj));
  for (const Json& mj : j.at("twistedHW"))
    a.twistedHW.push_back(label_from_json(lv, mj));
  for (const Json& fj : j.at("families")) {
    FamilyRecord f;
    f.orbitKey = weight_from_json(lv, fj.at("orbitKey"));
    for (int i = 0; i < 3; ++i) {
      f.members[i] = weight_from_json(lv, fj.at("members").at(i));
      f.rawCharges[i] = parse_rat(fj.at("rawCharges").at(i).get<std::string>());
      f.excluded[i] = parse_rat(fj.at("excluded").at(i).get<std::string>());
    }
    f.Delta = parse_rat(fj.at("Delta").get<std::string>());
    f.omega = parse_rat(fj.at("omega").get<std::string>());
    a.families.push_back(f);
  }
  for (const Json& rj : j.at("nonsemisimple")) {
    ExactSeqRecord r;
    r.kind = kind_from(rj.at("kind").get<std::string>());
    r.j = parse_rat(rj.at("j").get<std::string>());
    r.Delta = parse_rat(rj.at("Delta").get<std::string>());
    r.omega = parse_rat(rj.at("omega").get<std::string>());
    r.source = weight_from_json(lv, rj.at("source"));
    r.partner = weight_from_json(lv, rj.at("partner"));

    auto ref = [&](const Json& q, const AffineWeight& src) {
      ModuleLabel m;
      m.sector = sector_from(q.at("sector").get<std::string>());
      m.cls = class_from(q.at("class").get<std::string>());
      m.j = parse_rat(q.at("j").get<std::string>());
      m.Delta = parse_rat(q.at("Delta").get<std::string>());
      m.topDim = kInfiniteDim;
      m.source = src;
      return m;
    };
    bool sub_is_conj =
        rj.at("submodule").at("class").get<std::string>() == "conjugateHighestWeight";
    r.submodule = ref(rj.at("submodule"), sub_is_conj ? r.partner : r.source);
    r.quotient = ref(rj.at("quotient"), sub_is_conj ? r.source : r.partner);
    a.nonsemisimple.push_back(r);
  }
  const Json& cj = j.at("counts");
  a.counts.untwistedHW = cj.at("untwistedHW").get<long long>();
  a.counts.twistedHWFiniteTop = cj.at("twistedHWFiniteTop").get<long long>();
  a.counts.twistedHWInfiniteTop = cj.at("twistedHWInfiniteTop").get<long long>();
  a.counts.relaxedFamilies = cj.at("relaxedFamilies").get<long long>();
  return a;
}

namespace {

std::string triple_str(const DynkinTriple& t) {
  std::ostringstream os;
  os << t[0] << "," << t[1] << "," << t[2];
  return os.str();
}

std::string topdim_str(long d) {
  return d == kInfiniteDim ? "inf" : std::to_string(d);
}

std::string joined(const std::array<Rat, 3>& rs) {
  return rat_str(rs[0]) + "," + rat_str(rs[1]) + "," + rat_str(rs[2]);
}

}  // namespace

std::string atlas_tsv(const Atlas& a) {
  std::ostringstream os;
  auto hw_row = [&](const ModuleLabel& m) {
    os << "hw\t" << to_string(m.sector) << "\t" << to_string(m.cls) << "\t"
       << rat_str(m.j) << "\t" << rat_str(m.Delta) << "\t"
       << (m.omega ? rat_str(*m.omega) : "") << "\t" << topdim_str(m.topDim)
       << "\t" << triple_str(m.source->lambdaI) << "\t"
       << triple_str(m.source->lambdaF) << "\n";
  };
  for (const auto& m : a.untwistedHW) hw_row(m);
  for (const auto& m : a.twistedHW) hw_row(m);
  for (const auto& f : a.families) {
    os << "family\t" << rat_str(f.Delta) << "\t" << rat_str(f.omega) << "\t"
       << joined(f.rawCharges) << "\t" << joined(f.excluded) << "\t"
       << triple_str(f.orbitKey.lambdaI) << "\t"
       << triple_str(f.orbitKey.lambdaF) << "\n";
  }
  for (const auto& r : a.nonsemisimple) {
    os << "nonss\t" << to_string(r.kind) << "\t" << rat_str(r.j) << "\t"
       << rat_str(r.Delta) << "\t" << rat_str(r.omega) << "\t"
       << triple_str(r.source.lambdaI) << "\t" << triple_str(r.source.lambdaF)
       << "\t" << triple_str(r.partner.lambdaI) << "\t"
       << triple_str(r.partner.lambdaF) << "\n";
  }
  return os.str();
}

namespace {

void hw_table(std::ostringstream& os, const std::vector<ModuleLabel>& ms,
              bool with_top) {
  os << "| lambdaI | lambdaF | j | Delta |" << (with_top ? " top |" : "") << "\n";
  os << "| --- | --- | --- | --- |" << (with_top ? " --- |" : "") << "\n";
  for (const auto& m : ms) {
    os << "| " << triple_str(m.source->lambdaI) << " | "
       << triple_str(m.source->lambdaF) << " | " << rat_str(m.j) << " | "
       << rat_str(m.Delta) << " |";
    if (with_top) os << " " << topdim_str(m.topDim) << " |";
    os << "\n";
  }
}

}  // namespace

std::string atlas_markdown(const Atlas& a) {
  std::ostringstream os;
  os << "# Module atlas for u=" << a.level.u << ", v=" << a.level.v << "\n\n";
  os << "Level k = " << rat_str(a.level.k) << ", central charge c = "
     << rat_str(a.level.c) << ".\n\n";
  os << "## Untwisted highest-weight modules\n\n";
  hw_table(os, a.untwistedHW, false);
  os << "\n## Twisted highest-weight modules\n\n";
  hw_table(os, a.twistedHW, true);
  os << "\n## Relaxed coherent families\n\n";
  if (a.families.empty()) {
    os << "(none)\n";
  } else {
    os << "| key lambdaI | key lambdaF | Delta | omega | raw charges | excluded |\n";
    os << "| --- | --- | --- | --- | --- | --- |\n";
    for (const auto& f : a.families)
      os << "| " << triple_str(f.orbitKey.lambdaI) << " | "
         << triple_str(f.orbitKey.lambdaF) << " | " << rat_str(f.Delta) << " | "
         << rat_str(f.omega) << " | " << joined(f.rawCharges) << " | "
         << joined(f.excluded) << " |\n";
  }
  os << "\n## Nonsemisimple quotients\n\n";
  if (a.nonsemisimple.empty()) {
    os << "(none)\n";
  } else {
    os << "| kind | j | Delta | omega | submodule | quotient |\n";
    os << "| --- | --- | --- | --- | --- | --- |\n";
    for (const auto& r : a.nonsemisimple)
      os << "| " << to_string(r.kind) << " | " << rat_str(r.j) << " | "
         << rat_str(r.Delta) << " | " << rat_str(r.omega) << " | "
         << to_string(r.submodule.cls) << " (" << rat_str(r.submodule.j) << ", "
         << rat_str(r.submodule.Delta) << ") | " << to_string(r.quotient.cls)
         << " (" << rat_str(r.quotient.j) << ", " << rat_str(r.quotient.Delta)
         << ") |\n";
  }
  return os.str();
}

std::string figure_markdown(const Atlas& a) {
  std::ostringstream os;
  os << "## Untwisted modules\n\n";
  hw_table(os, a.untwistedHW, false);
  os << "\n## Twisted modules\n\n";
  hw_table(os, a.twistedHW, true);
  return os.str();
}

Json orbit_json(const OrbitTable& t) {
  Json j;
  j["base"] = weight_json(t.base);
  j["entries"] = Json::array();
  for (const OrbitEntry& e : t.entries) {
    Json ej;
    ej["ell"] = rat_str(e.ell.ell());
    ej["sector"] = to_string(e.sector);
    ej["status"] = to_string(e.status);
    Json lab;
    lab["j"] = rat_str(e.j);
    lab["Delta"] = rat_str(e.Delta);
    if (e.status == OrbitStatus::hw) {
      lab["topDim"] = topdim_json(*e.topDim);
      lab["source"] = weight_json(*e.source);
    }
    ej["label"] = lab;
    j["entries"].push_back(ej);
  }
  return j;
}

}  // namespace bpatlas
