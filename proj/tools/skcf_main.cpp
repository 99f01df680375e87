// Command-line front end: canonical forms, equivalence tests, class tables
// and orbit checks for 2 x m x n states.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "skcf/classify.hpp"
#include "skcf/io.hpp"

namespace {

using skcf::io::json;

constexpr int kExitOk = 0;
constexpr int kExitNotEquivalent = 1;
constexpr int kExitInputError = 2;

skcf::State load_state(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw skcf::InputError("cannot open " + path);
    buf << in.rdbuf();
  }
  json j;
  try {
    j = json::parse(buf.str());
  } catch (const json::exception& e) {
    throw skcf::InputError(path + ": " + e.what());
  }
  return skcf::io::state_from_json(j);
}

std::string render(const skcf::CanonicalForm& cf, const std::string& format) {
  if (format == "ket") return skcf::to_ket(skcf::representative_state(cf)) + "\n";
  if (format == "pencil") return skcf::to_pencil_text(skcf::build_pencil(skcf::structure_of(cf)));
  return skcf::io::to_json(cf).dump() + "\n";
}

json entry_json(const skcf::ClassEntry& e) {
  return {{"label", e.label},
          {"dims", {2, e.m, e.n}},
          {"form", skcf::io::to_json(e.form)},
          {"ket", e.ket}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"State Kronecker canonical forms of 2 x m x n states"};
  app.require_subcommand(1);

  double tol = skcf::kDefaultTol;
  std::string mode_name = "restricted";
  std::string format = "json";
  if (const char* env = std::getenv("SKCF_TOL")) {
    char* end = nullptr;
    tol = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(tol > 0.0)) {
      std::cerr << "error: SKCF_TOL must be a positive number\n";
      return kExitInputError;
    }
  }
  app.add_option("--tol", tol, "relative tolerance for approximate eigenvalues (env SKCF_TOL)")
      ->check(CLI::PositiveNumber);
  app.add_option("--mode", mode_name, "eigenvalue normalization: restricted | all-triples")
      ->check(CLI::IsMember({"restricted", "all-triples"}));
  app.add_option("--format", format, "output format: json | ket | pencil")
      ->check(CLI::IsMember({"json", "ket", "pencil"}));

  std::string path_a, path_b, label;
  std::size_t m = 0, n = 0, trials = 100;
  std::uint64_t seed = 1;
  bool all_ranks = false;

  auto* canon = app.add_subcommand("canon", "print the canonical form of a state");
  canon->add_option("state", path_a, "state JSON file ('-' for stdin)")->required();

  auto* equiv = app.add_subcommand("equiv", "decide SLOCC equivalence of two states");
  equiv->add_option("a", path_a)->required();
  equiv->add_option("b", path_b)->required();

  auto* enumerate = app.add_subcommand("enumerate", "list the SLOCC classes of 2 x m x n");
  enumerate->add_option("--m", m)->required()->check(CLI::PositiveNumber);
  enumerate->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  enumerate->add_flag("--all-ranks", all_ranks, "include states with non-maximal local ranks");

  auto* orbit = app.add_subcommand("orbit-check", "test invariance under random local operators");
  orbit->add_option("state", path_a)->required();
  orbit->add_option("--trials", trials)->check(CLI::PositiveNumber);
  orbit->add_option("--seed", seed);

  auto* show = app.add_subcommand("show", "print a labelled class of the 2 x 3 x n table");
  show->add_option("label", label)->required();

  // Options are accepted both before and after the subcommand name.
  for (auto* sub : {canon, equiv, enumerate, orbit, show}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    const auto mode = skcf::parse_mode(mode_name);
    if (*canon) {
      std::cout << render(skcf::canonicalize(load_state(path_a), tol, mode), format);
      return kExitOk;
    }
    if (*equiv) {
      skcf::State a = load_state(path_a), b = load_state(path_b);
      bool same = skcf::equivalent(a, b, tol, mode);
      std::cout << (same ? "equivalent" : "not equivalent") << "\n";
      return same ? kExitOk : kExitNotEquivalent;
    }
    if (*enumerate) {
      auto entries = skcf::enumerate_classes(m, n, all_ranks);
      if (format == "json") {
        json arr = json::array();
        for (const auto& e : entries) arr.push_back(entry_json(e));
        std::cout << arr.dump(2) << "\n";
      } else {
        for (const auto& e : entries) std::cout << e.label << "\n" << render(e.form, format);
      }
      return kExitOk;
    }
    if (*orbit) {
      auto report = skcf::orbit_check(load_state(path_a), trials, seed, tol, mode);
      json j = {{"trials", report.trials},
                {"failures", report.failures},
                {"seed", report.seed},
                {"max_eig_deviation", report.max_eig_deviation}};
      std::cout << j.dump() << "\n";
      return report.failures == 0 ? kExitOk : kExitNotEquivalent;
    }
    if (*show) {
      const auto* e = skcf::find_registry(label);
      if (e == nullptr) throw skcf::InputError("unknown class label '" + label + "'");
      if (format == "json") {
        json j = {{"label", e->label},
                  {"dims", {2, e->m, e->n}},
                  {"printed_ket", e->ket},
                  {"form", skcf::io::to_json(e->form)},
                  {"representative", skcf::to_ket(skcf::representative_state(e->form))}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << render(e->form, format);
      }
      return kExitOk;
    }
  } catch (const skcf::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return kExitOk;
}
