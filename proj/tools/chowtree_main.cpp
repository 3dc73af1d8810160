// chowtree: exact computations with stable rooted trees of projective spaces
// and the Chow cycles of their point configurations. Batch JSON in, JSON out;
// all randomness is derived from --seed, so identical invocations produce
// byte-identical output.

#include <CLI11.hpp>

#include <array>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "chowtree/contract.hpp"
#include "chowtree/curves.hpp"
#include "chowtree/degeneration.hpp"
#include "chowtree/errors.hpp"
#include "chowtree/io.hpp"
#include "chowtree/kunneth.hpp"
#include "chowtree/rng.hpp"
#include "chowtree/tree.hpp"

namespace {

using namespace chowtree;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitMalformed = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedInput("cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + out_path);
  out << text << "\n";
}

StableTree load_valid_tree(const std::string& path) {
  StableTree tree = tree_from_json(read_file(path));
  const auto problems = validate(tree);
  if (!problems.empty()) {
    throw InvalidVertex("tree in " + path + " is invalid: " + problems.front());
  }
  return tree;
}

const char* error_name(const Error& e) {
  if (dynamic_cast<const MalformedInput*>(&e)) return "MalformedInput";
  if (dynamic_cast<const DimensionMismatch*>(&e)) return "DimensionMismatch";
  if (dynamic_cast<const ValuationTooLow*>(&e)) return "ValuationTooLow";
  if (dynamic_cast<const NotFullDimensional*>(&e)) return "NotFullDimensional";
  if (dynamic_cast<const UnknownVertex*>(&e)) return "UnknownVertex";
  if (dynamic_cast<const NotAncestor*>(&e)) return "NotAncestor";
  if (dynamic_cast<const InvalidVertex*>(&e)) return "InvalidVertex";
  if (dynamic_cast<const InvalidShape*>(&e)) return "InvalidShape";
  if (dynamic_cast<const ShapeMismatch*>(&e)) return "ShapeMismatch";
  if (dynamic_cast<const BadLabels*>(&e)) return "BadLabels";
  if (dynamic_cast<const GenericityFailure*>(&e)) return "GenericityFailure";
  if (dynamic_cast<const NotGenericallyDistinct*>(&e)) return "NotGenericallyDistinct";
  if (dynamic_cast<const ClassMismatch*>(&e)) return "ClassMismatch";
  if (dynamic_cast<const ContractionDegenerate*>(&e)) return "ContractionDegenerate";
  return "Error";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact stable trees of projective spaces and their Chow cycles"};
  app.require_subcommand(1);

  std::string tree_path;
  std::vector<std::string> tree_paths;
  std::string config_path;
  std::string cycle_path;
  std::string family_path;
  std::string out_path;
  std::vector<int> triple;
  int vertex = 0;
  int trials = 3;
  std::uint64_t seed = 0;
  int opt_d = 1;
  int opt_n = 2;
  int count = 50;

  std::function<int()> run;

  auto* cmd_validate = app.add_subcommand("validate", "check the stable-tree invariants");
  cmd_validate->add_option("--tree", tree_path, "tree file")->required();
  cmd_validate->add_option("--out", out_path, "output path (default stdout)");
  cmd_validate->callback([&] {
    run = [&]() {
      const StableTree tree = tree_from_json(read_file(tree_path));
      const auto problems = validate(tree);
      if (problems.empty()) {
        emit("Valid", out_path);
        return kExitOk;
      }
      std::string report;
      for (const auto& p : problems) report += p + "\n";
      report.pop_back();
      emit(report, out_path);
      return kExitFailure;
    };
  });

  auto* cmd_contract = app.add_subcommand("contract", "component configuration at one vertex");
  cmd_contract->add_option("--tree", tree_path, "tree file")->required();
  cmd_contract->add_option("--vertex", vertex, "vertex id")->required();
  cmd_contract->add_option("--out", out_path, "output path (default stdout)");
  cmd_contract->callback([&] {
    run = [&]() {
      emit(configuration_to_json(contract(load_valid_tree(tree_path), vertex).config), out_path);
      return kExitOk;
    };
  });

  auto* cmd_cycle = app.add_subcommand("cycle", "configuration cycle of a tree");
  cmd_cycle->add_option("--tree", tree_path, "tree file")->required();
  cmd_cycle->add_option("--out", out_path, "output path (default stdout)");
  cmd_cycle->callback([&] {
    run = [&]() {
      emit(cycle_to_json(configuration_cycle(load_valid_tree(tree_path))), out_path);
      return kExitOk;
    };
  });

  auto* cmd_class = app.add_subcommand("class", "Kunneth class of an orbit closure or cycle");
  auto* class_config = cmd_class->add_option("--config", config_path, "configuration file");
  auto* class_cycle = cmd_class->add_option("--cycle", cycle_path, "cycle file");
  cmd_class->add_option("--trials", trials, "independent incidence trials (default 3)");
  cmd_class->add_option("--seed", seed, "random seed (default 0)");
  cmd_class->add_option("--out", out_path, "output path (default stdout)");
  class_config->excludes(class_cycle);
  cmd_class->callback([&] {
    run = [&]() {
      if (config_path.empty() == cycle_path.empty()) {
        throw MalformedInput("class: exactly one of --config or --cycle is required");
      }
      const KunnethClass cls =
          config_path.empty()
              ? cycle_class(cycle_from_json(read_file(cycle_path)), trials, seed)
              : orbit_class(configuration_from_json(read_file(config_path)), trials, seed);
      emit(kunneth_to_json(cls), out_path);
      return kExitOk;
    };
  });

  auto* cmd_limit = app.add_subcommand("limit", "limit tree of a polynomial family");
  cmd_limit->add_option("--family", family_path, "family file")->required();
  cmd_limit->add_option("--out", out_path, "output path (default stdout)");
  cmd_limit->callback([&] {
    run = [&]() {
      emit(tree_to_json(limit_tree(family_from_json(read_file(family_path)))), out_path);
      return kExitOk;
    };
  });

  auto* cmd_check = app.add_subcommand("check-limit", "verify limit/contraction compatibility");
  cmd_check->add_option("--family", family_path, "family file")->required();
  cmd_check->add_option("--out", out_path, "output path (default stdout)");
  cmd_check->callback([&] {
    run = [&]() {
      const bool ok = check_limit_compatibility(family_from_json(read_file(family_path)));
      emit(ok ? "compatible" : "incompatible", out_path);
      return ok ? kExitOk : kExitFailure;
    };
  });

  auto* cmd_forget = app.add_subcommand("forget", "triple cross-ratio invariant (d = 1)");
  cmd_forget->add_option("--tree", tree_path, "tree file")->required();
  cmd_forget->add_option("--triple", triple, "three mark labels a,b,c")->required()->delimiter(',');
  cmd_forget->add_option("--out", out_path, "output path (default stdout)");
  cmd_forget->callback([&] {
    run = [&]() {
      if (triple.size() != 3) throw BadLabels("forget: --triple needs exactly three labels");
      const std::array<int, 3> labels{triple[0], triple[1], triple[2]};
      const CrossRatioValue value = triple_invariant(load_valid_tree(tree_path), labels);
      std::ostringstream os;
      os << "{\n  \"triple\": [" << labels[0] << ", " << labels[1] << ", " << labels[2]
         << "],\n  \"value\": \"" << value.str() << "\"\n}";
      emit(os.str(), out_path);
      return kExitOk;
    };
  });

  auto* cmd_separate = app.add_subcommand("separate", "triple-invariant separation test (d = 1)");
  cmd_separate->add_option("--tree", tree_paths, "two tree files (repeat the flag)")
      ->required()
      ->expected(2);
  cmd_separate->add_option("--out", out_path, "output path (default stdout)");
  cmd_separate->callback([&] {
    run = [&]() {
      const bool apart =
          separates(load_valid_tree(tree_paths[0]), load_valid_tree(tree_paths[1]));
      emit(apart ? "separated" : "not separated", out_path);
      return kExitOk;
    };
  });

  auto* cmd_chowform = app.add_subcommand("chowform", "multidegree (1,1,1) form (d = 1, n = 3)");
  auto* form_config = cmd_chowform->add_option("--config", config_path, "configuration file");
  auto* form_cycle = cmd_chowform->add_option("--cycle", cycle_path, "cycle file");
  cmd_chowform->add_option("--out", out_path, "output path (default stdout)");
  form_config->excludes(form_cycle);
  cmd_chowform->callback([&] {
    run = [&]() {
      if (config_path.empty() == cycle_path.empty()) {
        throw MalformedInput("chowform: exactly one of --config or --cycle is required");
      }
      const MultilinearForm form =
          config_path.empty()
              ? chow_form_of_cycle(cycle_from_json(read_file(cycle_path)))
              : chow_form_111(configuration_from_json(read_file(config_path)));
      emit(form_to_json(form), out_path);
      return kExitOk;
    };
  });

  auto* cmd_allones = app.add_subcommand("all-ones", "cycle classes of random trees are all ones");
  cmd_allones->add_option("--d", opt_d, "ambient dimension")->required();
  cmd_allones->add_option("--n", opt_n, "number of marks")->required();
  cmd_allones->add_option("--count", count, "number of trees (default 50)");
  cmd_allones->add_option("--seed", seed, "random seed (default 0)");
  cmd_allones->add_option("--trials", trials, "incidence trials per coefficient (default 3)");
  cmd_allones->add_option("--out", out_path, "output path (default stdout)");
  cmd_allones->callback([&] {
    run = [&]() {
      const auto shapes = enumerate_shapes(opt_n);
      Rng rng(seed);
      int passed = 0;
      for (int i = 0; i < count; ++i) {
        const auto& shape = shapes[static_cast<size_t>(
            rng.uniform_int(0, static_cast<long>(shapes.size()) - 1))];
        const StableTree tree = random_tree(opt_d, opt_n, shape, rng.next());
        const KunnethClass cls =
            cycle_class(configuration_cycle(tree), trials, rng.next());
        if (cls.all_coefficients_are(1)) ++passed;
      }
      std::ostringstream os;
      os << passed << "/" << count << " pass";
      emit(os.str(), out_path);
      return passed == count ? kExitOk : kExitFailure;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitMalformed;
  }

  try {
    return run();
  } catch (const MalformedInput& e) {
    std::cerr << "MalformedInput: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const Error& e) {
    std::cerr << error_name(e) << ": " << e.what() << "\n";
    return kExitFailure;
  }
}
