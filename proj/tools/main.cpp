#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "krasner/classify.hpp"
#include "krasner/construct.hpp"
#include "krasner/instance_io.hpp"
#include "krasner/theorems.hpp"

namespace fs = std::filesystem;
using namespace krasner;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;    // predicate or theorem failure
constexpr int kExitUsage = 2;   // usage, parse or input error

std::string verdict_name(CheckVerdict v) {
  switch (v) {
    case CheckVerdict::kPass: return "pass";
    case CheckVerdict::kFail: return "FAIL";
    case CheckVerdict::kSkipped: return "skipped";
  }
  return "?";
}

void print_axiom_report(const AxiomReport& report, const std::vector<std::string>& labels) {
  for (const auto& check : report.checks) {
    std::cout << "  " << check.name << ": " << verdict_name(check.verdict) << "\n";
    if (check.witness) {
      const Witness& w = *check.witness;
      if (!w.tuple.empty()) {
        std::cout << "    witness (";
        for (size_t i = 0; i < w.tuple.size(); ++i)
          std::cout << (i ? "," : "") << labels[static_cast<size_t>(w.tuple[i])];
        std::cout << ")\n";
      }
      if (!w.lhs.empty() || !w.rhs.empty())
        std::cout << "    evaluations: " << w.lhs << " vs " << w.rhs << "\n";
      if (!w.note.empty()) std::cout << "    " << w.note << "\n";
    }
  }
}

LoadedInstance load_or_die(const std::string& path) {
  LoadedInstance inst = load_and_validate(path);
  if (!inst.ring) {
    std::cout << "instance " << path << ": axiom audit FAILED\n";
    print_axiom_report(inst.report, InstanceData(load_instance_file(path)).tables.labels);
    std::exit(kExitFail);
  }
  return inst;
}

Subset parse_ideal_arg(const LoadedInstance& inst, const std::string& arg) {
  auto it = inst.ideals.find(arg);
  if (it != inst.ideals.end()) return it->second.members();
  // otherwise a comma-joined label list
  Subset s(inst.ring->size());
  std::string cur;
  std::string arg_comma = arg + ",";
  for (char c : arg_comma) {
    if (c == ',') {
      if (!cur.empty()) s.set(inst.ring->element(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (s.empty())
    throw Error(ErrorCode::kInvalidInput, "empty ideal argument '" + arg + "'");
  return s;
}

const Expansion* resolve_delta(const std::string& name, const IdealLattice& lattice,
                               std::vector<Expansion>& own, const LoadedInstance& inst) {
  if (name == "delta0") {
    own.push_back(builtin_expansion(BuiltinExpansion::kIdentity, lattice));
    return &own.back();
  }
  if (name == "delta1") {
    own.push_back(builtin_expansion(BuiltinExpansion::kRadical, lattice));
    return &own.back();
  }
  if (name == "deltaR") {
    own.push_back(builtin_expansion(BuiltinExpansion::kWholeRing, lattice));
    return &own.back();
  }
  auto it = inst.expansions.find(name);
  if (it == inst.expansions.end())
    throw Error(ErrorCode::kInvalidInput, "unknown expansion '" + name + "'");
  return &it->second;
}

int cmd_validate(const std::string& path) {
  InstanceData data = load_instance_file(path);
  LoadedInstance inst = validate_instance(data);
  std::cout << "instance " << path << ": " << (inst.ring ? "valid" : "INVALID") << "\n";
  print_axiom_report(inst.report, data.tables.labels);
  if (inst.ring && inst.ring->one())
    std::cout << "  scalar identity: " << inst.ring->label(*inst.ring->one()) << "\n";
  return inst.ring ? kExitPass : kExitFail;
}

int cmd_ideals(const std::string& path) {
  LoadedInstance inst = load_or_die(path);
  IdealLattice lattice = IdealLattice::enumerate(inst.ring);
  std::cout << lattice.size() << " hyperideals of " << path << "\n";
  for (size_t i = 0; i < lattice.size(); ++i) {
    const Hyperideal& I = lattice[i];
    std::cout << "  [" << i << "] " << inst.ring->render_subset(I.members());
    if (I.is_proper()) {
      std::cout << (is_prime(I).passed ? " prime" : "");
      if (inst.ring->one()) std::cout << (is_primary(lattice, I).passed ? " primary" : "");
    } else {
      std::cout << " (whole ring)";
    }
    std::cout << "\n";
  }
  return kExitPass;
}

int cmd_classify(const std::string& path, const std::string& ideal_arg, int t,
                 const std::string& delta_name, bool weakly, bool strongly) {
  LoadedInstance inst = load_or_die(path);
  IdealLattice lattice = IdealLattice::enumerate(inst.ring);
  Subset members = parse_ideal_arg(inst, ideal_arg);
  ClassificationReport ideal_check = is_hyperideal(inst.ring, members);
  if (!ideal_check.passed) {
    std::cout << "subset " << inst.ring->render_subset(members)
              << " is not a hyperideal: " << ideal_check.detail << "\n";
    return kExitFail;
  }
  int idx = lattice.index_of(members);
  const Hyperideal& Q = lattice[static_cast<size_t>(idx)];

  std::vector<Expansion> own;
  own.reserve(8);
  if (t > 0 && !delta_name.empty()) {
    const Expansion* d = resolve_delta(delta_name, lattice, own, inst);
    ClassificationReport rep;
    if (strongly) {
      rep = is_strongly_variant(lattice, Q, t, *d, weakly);
    } else if (weakly) {
      rep = is_weakly_tn_absorbing_delta_semiprimary(Q, t, *d);
    } else {
      rep = is_tn_absorbing_delta_semiprimary(Q, t, *d);
    }
    std::cout << rep.render(*inst.ring) << "\n";
    return rep.passed ? kExitPass : kExitFail;
  }

  // Full matrix with the built-ins plus any file-defined expansions.
  std::vector<const Expansion*> deltas;
  for (const char* name : {"delta0", "delta1", "deltaR"})
    deltas.push_back(resolve_delta(name, lattice, own, inst));
  for (const auto& [name, d] : inst.expansions) deltas.push_back(&d);
  std::vector<int> ts = {1, 2, 3};
  if (t > 0) ts = {t};
  for (const ClassificationReport& rep : classify_all(lattice, Q, ts, deltas))
    std::cout << rep.render(*inst.ring) << "\n";
  return kExitPass;
}

std::vector<std::string> collect_instance_paths(const std::vector<std::string>& args) {
  std::vector<std::string> paths;
  for (const std::string& arg : args) {
    if (fs::is_directory(arg)) {
      std::vector<std::string> found;
      for (const auto& entry : fs::directory_iterator(arg))
        if (entry.path().extension() == ".json") found.push_back(entry.path().string());
      std::sort(found.begin(), found.end());
      paths.insert(paths.end(), found.begin(), found.end());
    } else {
      paths.push_back(arg);
    }
  }
  return paths;
}

int cmd_check_theorems(const std::vector<std::string>& args, uint64_t seed, long long budget,
                       const std::string& summary_path) {
  std::vector<CorpusEntry> corpus;
  for (const std::string& path : collect_instance_paths(args)) {
    LoadedInstance inst = load_and_validate(path);
    if (!inst.ring) {
      std::cerr << "skipping " << path << ": axiom audit failed\n";
      continue;
    }
    std::vector<Expansion> extras;
    for (const auto& [name, d] : inst.expansions) extras.push_back(d);
    corpus.push_back(CorpusEntry{fs::path(path).stem().string(), inst.ring, std::move(extras)});
  }
  HarnessOptions opts;
  opts.seed = seed;
  opts.random_budget = budget;
  TheoremReport report = run_theorem_suite(corpus, opts);
  std::cout << report.render_text();
  std::cerr << "wall time: " << report.wall_seconds << " s\n";
  if (!summary_path.empty()) {
    std::ofstream out(summary_path);
    out << report.to_json();
  }
  return report.total_violations() == 0 ? kExitPass : kExitFail;
}

int cmd_construct_quotient(const std::string& path, const std::string& ideal_arg,
                           const std::string& out_path) {
  LoadedInstance inst = load_or_die(path);
  Subset members = parse_ideal_arg(inst, ideal_arg);
  Hyperideal P = as_hyperideal(inst.ring, members);
  QuotientRing q = QuotientRing::build(P);
  std::ofstream out(out_path);
  out << serialize_instance(*q.quotient());
  std::cout << "quotient with " << q.quotient()->size() << " cosets written to " << out_path
            << "\n";
  return kExitPass;
}

int cmd_construct_product(const std::vector<std::string>& paths, const std::string& out_path) {
  std::vector<RingPtr> factors;
  for (const std::string& path : paths) factors.push_back(load_or_die(path).ring);
  ProductRing p = ProductRing::build(factors);
  std::ofstream out(out_path);
  out << serialize_instance(*p.product());
  std::cout << "product with " << p.product()->size() << " elements written to " << out_path
            << "\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite Krasner (m,n)-hyperring verification tool"};
  app.require_subcommand(1);

  std::string path, ideal_arg, delta_name, out_path, summary_path;
  int t = 0;
  bool weakly = false, strongly = false;
  uint64_t seed = 0;
  long long budget = 0;
  std::vector<std::string> multi_paths;

  auto* validate = app.add_subcommand("validate", "run the full axiom audit on an instance file");
  validate->add_option("file", path)->required();

  auto* ideals = app.add_subcommand("ideals", "list the hyperideal lattice with prime/primary flags");
  ideals->add_option("file", path)->required();

  auto* classify = app.add_subcommand("classify", "classify a hyperideal");
  classify->add_option("file", path)->required();
  classify->add_option("ideal", ideal_arg, "ideal name from the file or a comma-joined label list")
      ->required();
  classify->add_option("--t", t, "absorbing parameter t");
  classify->add_option("--delta", delta_name, "expansion: delta0 | delta1 | deltaR | file-defined");
  classify->add_flag("--weakly", weakly, "weakly variant");
  classify->add_flag("--strongly", strongly, "strongly variant (quantifies over ideals)");

  auto* check = app.add_subcommand("check-theorems", "run the theorem suite over a corpus");
  check->add_option("paths", multi_paths, "instance files or directories")->required();
  check->add_option("--seed", seed, "random seed for sampled sweeps and the generator");
  check->add_option("--budget", budget, "random-instance search budget (candidates)");
  check->add_option("--summary", summary_path, "write a machine-readable summary here");

  auto* construct = app.add_subcommand("construct", "build quotients and products");
  auto* quotient = construct->add_subcommand("quotient", "quotient by a hyperideal");
  quotient->add_option("file", path)->required();
  quotient->add_option("ideal", ideal_arg)->required();
  quotient->add_option("--out", out_path)->required();
  auto* product = construct->add_subcommand("product", "finite cartesian product");
  product->add_option("files", multi_paths)->required()->expected(-2);
  product->add_option("--out", out_path)->required();
  construct->require_subcommand(1);

  try {
    app.parse(argc, argv);
    if (*validate) return cmd_validate(path);
    if (*ideals) return cmd_ideals(path);
    if (*classify) return cmd_classify(path, ideal_arg, t, delta_name, weakly, strongly);
    if (*check) return cmd_check_theorems(multi_paths, seed, budget, summary_path);
    if (*quotient) return cmd_construct_quotient(path, ideal_arg, out_path);
    if (*product) return cmd_construct_product(multi_paths, out_path);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
