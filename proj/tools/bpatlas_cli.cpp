#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "bpatlas/serialize.hpp"
#include "bpatlas/verify.hpp"

namespace {

using namespace bpatlas;

constexpr int kExitVerify = 1;
constexpr int kExitLevel = 2;
constexpr int kExitWeight = 3;
constexpr int kExitUsage = 64;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

FlowAmount parse_half_integer(const std::string& s) {
  Rat r = parse_rat(s);
  Rat doubled = r * 2;
  if (!is_integer(doubled)) throw UsageError("not a half-integer: " + s);
  return FlowAmount{rat_long(doubled)};
}

std::pair<FlowAmount, FlowAmount> parse_range(const std::string& s) {
  auto pos = s.find("..");
  if (pos == std::string::npos) throw UsageError("range must be lo..hi: " + s);
  FlowAmount lo = parse_half_integer(s.substr(0, pos));
  FlowAmount hi = parse_half_integer(s.substr(pos + 2));
  if (lo.twiceEll > hi.twiceEll) throw UsageError("empty range: " + s);
  return {lo, hi};
}

DynkinTriple to_triple(const std::vector<int>& xs, const std::string& flag) {
  if (xs.size() != 3) throw UsageError(flag + " needs exactly three entries");
  return {xs[0], xs[1], xs[2]};
}

int run(int argc, char** argv) {
  CLI::App app{"Module classification for Bershadsky-Polyakov vertex algebras "
               "at admissible levels k = -3 + u/v"};
  app.require_subcommand(1);

  int u = 0, v = 0;
  std::string format = "json";
  std::vector<int> lambdaI, lambdaF;
  std::string range;
  long depth = 8;

  auto add_level = [&](CLI::App* cmd) {
    cmd->add_option("--u", u, "numerator of k + 3")->required();
    cmd->add_option("--v", v, "denominator of k + 3")->required();
  };

  CLI::App* atlas = app.add_subcommand("atlas", "emit the full module atlas");
  add_level(atlas);
  atlas->add_option("--format", format, "json, tsv or md")
      ->check(CLI::IsMember({"json", "tsv", "md"}));

  CLI::App* figure = app.add_subcommand(
      "figure", "per-sector (j, Delta) tables in markdown");
  add_level(figure);

  CLI::App* orbit =
      app.add_subcommand("orbit", "spectral-flow orbit of one weight");
  add_level(orbit);
  orbit->add_option("--lambdaI", lambdaI, "integer Dynkin triple a,b,c")
      ->required()
      ->delimiter(',');
  orbit->add_option("--lambdaF", lambdaF, "fractional Dynkin triple a,b,c")
      ->required()
      ->delimiter(',');
  orbit->add_option("--range", range, "flow range lo..hi in half-integers")
      ->required();

  CLI::App* verify =
      app.add_subcommand("verify", "run the consistency checks at this level");
  add_level(verify);
  verify->add_option("--depth", depth, "oracle exponent depth (default 8)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  LevelParams lv = make_level(u, v);

  if (atlas->parsed()) {
    Atlas a = build_atlas(lv, ExecutionPolicy::parallel);
    if (format == "json")
      std::cout << atlas_json(a).dump(2) << "\n";
    else if (format == "tsv")
      std::cout << atlas_tsv(a);
    else
      std::cout << atlas_markdown(a);
    return 0;
  }

  if (figure->parsed()) {
    Atlas a = build_atlas(lv, ExecutionPolicy::parallel);
    std::cout << figure_markdown(a);
    return 0;
  }

  if (orbit->parsed()) {
    AffineWeight w = make_weight(lv, to_triple(lambdaI, "--lambdaI"),
                                 to_triple(lambdaF, "--lambdaF"));
    auto [lo, hi] = parse_range(range);
    std::cout << orbit_json(sf_orbit(w, lo, hi)).dump(2) << "\n";
    return 0;
  }

  if (depth < 1) throw UsageError("--depth must be at least 1");
  VerifyReport report = verify_level(lv, depth, ExecutionPolicy::parallel);
  for (const auto& c : report.checks)
    std::cout << (c.pass ? "ok   " : "FAIL ") << c.name << " (" << c.detail
              << ")\n";
  return report.all_pass() ? 0 : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const bpatlas::DomainError& e) {
    std::cerr << e.name() << "\n";
    switch (e.code()) {
      case bpatlas::Errc::NotCoprime:
      case bpatlas::Errc::BelowAdmissible:
      case bpatlas::Errc::NoReduction:
        return kExitLevel;
      default:
        return kExitWeight;
    }
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
}
