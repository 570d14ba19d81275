// Command-line surface: computations on a single input file (radical, betti,
// dim, depth, cm, adual, ext) and the verification harness (verify,
// paper-examples). Exit code 0 iff every assertion passed.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "boxmod/checks.hpp"

using namespace boxmod;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct FieldChoice {
  bool rational = true;
  std::int64_t p = 0;
};

FieldChoice parse_field(const std::string& s) {
  if (s.empty() || s == "q") return {};
  if (s.rfind("fp:", 0) == 0) {
    FieldChoice f;
    f.rational = false;
    f.p = std::stoll(s.substr(3));
    return f;
  }
  throw CLI::ValidationError("--field", "expected q or fp:<prime>");
}

const MonomialIdeal& pick_ideal(const ParsedInput& in, const std::string& name) {
  if (!name.empty()) return in.ideal(name);
  return in.sole_ideal().second;
}

void print_betti(const BettiTable& b, bool total) {
  if (total) {
    for (const auto& [key, mult] : b.totals())
      std::cout << key.first << "  " << key.second << "  " << mult << '\n';
  } else {
    std::cout << b;
  }
}

template <Field K>
int run_betti(const ParsedInput& in, bool total) {
  print_betti(betti_table(in.build_module<K>()), total);
  return 0;
}

template <Field K>
int run_ext(const ParsedInput& in, int p, const std::string& c_choice) {
  BoxModule<K> m = in.build_module<K>();
  ExponentVector c = c_choice == "t" ? m.window().hi : ExponentVector::ones(m.arity());
  BoxModule<K> e = ext_box(m, c, p);
  std::cout << "# Ext^" << p << "(M, S(-" << (c_choice == "t" ? "t" : "1") << ")) on window "
            << e.window().lo << " .. " << e.window().hi << '\n';
  for (const auto& [deg, d] : e.hilbert_function())
    if (d != 0) std::cout << deg << "  " << d << '\n';
  if (e.is_zero_module()) std::cout << "0\n";
  return 0;
}

template <Field K>
int run_verify(const std::string& check_name, int count, std::uint64_t base_seed, bool quiet) {
  const bool jsonl = !quiet;
  auto reg = check_registry<K>();
  std::vector<const CheckDef*> todo;
  if (check_name.empty()) {
    for (const auto& def : reg) todo.push_back(&def);
  } else {
    const CheckDef* def = find_check<K>(reg, check_name);
    if (!def) {
      std::cerr << "unknown check '" << check_name << "'; available:\n";
      for (const auto& d : reg) std::cerr << "  " << d.name << '\n';
      return 2;
    }
    todo.push_back(def);
  }

  std::vector<CheckReport> reports;
  for (const CheckDef* def : todo) {
    auto record = [&](std::uint64_t seed, const InstanceOutcome& out) {
      if (!jsonl) return;
      nlohmann::json j;
      j["check"] = def->name;
      j["seed"] = seed;
      j["verdict"] = out.verdict == InstanceOutcome::Verdict::pass   ? "pass"
                     : out.verdict == InstanceOutcome::Verdict::skip ? "skip"
                                                                     : "fail";
      if (!out.detail.empty()) j["detail"] = out.detail;
      if (!out.notes.empty()) j["notes"] = out.notes;
      std::cout << j.dump() << '\n';
    };
    int n = count > 0 ? count : def->default_count;
    reports.push_back(run_check<K>(*def, n, base_seed, record));
  }

  int failures = 0;
  std::printf("%-16s %9s %6s %8s %9s %9s\n", "check", "requested", "run", "skipped", "failures",
              "seconds");
  for (const auto& rep : reports) {
    failures += rep.failures;
    std::printf("%-16s %9d %6d %8d %9d %9.2f\n", rep.name.c_str(), rep.requested, rep.run,
                rep.skipped, rep.failures, rep.seconds);
    for (const auto& f : rep.failure_list) {
      std::string fname = "boxmod-failure-" + rep.name + "-" + std::to_string(f.seed) + ".txt";
      std::ofstream out(fname);
      out << "# check: " << rep.name << "\n# seed: " << f.seed << "\n# detail: " << f.detail
          << "\n# reproduce: boxmod verify --check " << rep.name << " --seed " << f.seed
          << " --count 1\n"
          << f.instance_text;
      std::cerr << "failure of " << rep.name << " at seed " << f.seed << ": " << f.detail
                << "\n  instance written to " << fname << '\n';
    }
    if (!rep.notes.empty())
      std::printf("%-16s %zu reported notes (see the record stream)\n", "", rep.notes.size());
  }
  std::printf("total failures: %d\n", failures);
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"computations with positively t-determined multigraded modules"};
  app.require_subcommand(1);

  std::string file, ideal_name, field_str = "q", check_name, c_choice = "one";
  bool total = false, quiet = false;
  int ext_p = 0, count = 0;
  std::uint64_t seed = 1;

  auto add_file = [&file](CLI::App* cmd) {
    cmd->add_option("file", file, "input file")->required()->check(CLI::ExistingFile);
  };

  CLI::App* radical = app.add_subcommand("radical", "radical of a monomial ideal");
  add_file(radical);
  radical->add_option("--ideal", ideal_name, "which declared ideal to use");

  CLI::App* betti = app.add_subcommand("betti", "multigraded Betti table of the module");
  add_file(betti);
  betti->add_flag("--total", total, "aggregate by total degree");
  betti->add_option("--field", field_str, "q (default) or fp:<prime>");

  CLI::App* dim = app.add_subcommand("dim", "Krull dimension of the module");
  add_file(dim);
  CLI::App* depth = app.add_subcommand("depth", "depth of the module");
  add_file(depth);
  CLI::App* cm = app.add_subcommand("cm", "Cohen-Macaulay classification of the module");
  add_file(cm);
  CLI::App* adual = app.add_subcommand("adual", "Alexander dual, graded dimensions");
  add_file(adual);

  CLI::App* ext = app.add_subcommand("ext", "an Ext window of the module");
  add_file(ext);
  ext->add_option("--p", ext_p, "homological degree")->required();
  ext->add_option("--c", c_choice, "dualizing shift: one (default) or t")
      ->check(CLI::IsMember({"one", "t"}));
  ext->add_option("--field", field_str, "q (default) or fp:<prime>");

  CLI::App* verify = app.add_subcommand("verify", "run the theorem checks on random instances");
  verify->add_option("--check", check_name, "run a single named check");
  verify->add_option("--count", count, "instances per check (default: per-check)");
  verify->add_option("--seed", seed, "base seed (default 1)");
  verify->add_option("--field", field_str, "q (default) or fp:<prime>");
  verify->add_flag("--quiet", quiet, "suppress the per-instance JSON record stream");

  CLI::App* paper = app.add_subcommand("paper-examples", "verify the two worked examples");

  CLI11_PARSE(app, argc, argv);

  try {
    FieldChoice field = parse_field(field_str);
    if (!field.rational) Fp::set_modulus(field.p);

    if (radical->parsed()) {
      ParsedInput in = parse_input(read_file(file));
      const MonomialIdeal& I = pick_ideal(in, ideal_name);
      MonomialIdeal rad = I.radical();
      std::cout << "radical = ";
      if (rad.is_zero()) {
        std::cout << "0";
      } else {
        const auto& gens = rad.generators();
        for (std::size_t i = 0; i < gens.size(); ++i)
          std::cout << (i ? ", " : "") << in.ring.monomial(gens[i]);
      }
      std::cout << ";\n";
      return 0;
    }
    if (betti->parsed()) {
      ParsedInput in = parse_input(read_file(file));
      return field.rational ? run_betti<Rational>(in, total) : run_betti<Fp>(in, total);
    }
    if (dim->parsed()) {
      ParsedInput in = parse_input(read_file(file));
      std::cout << krull_dim(in.build_module<Rational>()) << '\n';
      return 0;
    }
    if (depth->parsed()) {
      ParsedInput in = parse_input(read_file(file));
      BoxModule<Rational> m = in.build_module<Rational>();
      if (m.is_zero_module()) {
        std::cout << "zero module\n";
        return 0;
      }
      std::cout << m.arity() - betti_table(m).projdim() << '\n';
      return 0;
    }
    if (cm->parsed()) {
      ParsedInput in = parse_input(read_file(file));
      Classification c = classify(in.build_module<Rational>());
      if (c.zero) {
        std::cout << "zero module\n";
        return 0;
      }
      std::cout << "projdim " << c.projdim << ", depth " << c.depth << ", dim " << c.dim
                << ", CM " << (c.is_cm ? "yes" : "no") << ", sequentially-CM "
                << (c.is_seq_cm ? "yes" : "no") << ", generalized-CM "
                << (c.is_gen_cm ? "yes" : "no") << '\n';
      return 0;
    }
    if (adual->parsed()) {
      ParsedInput in = parse_input(read_file(file));
      BoxModule<Rational> d = alexander_dual(in.build_module<Rational>());
      for (const auto& [deg, dd] : d.hilbert_function()) std::cout << deg << "  " << dd << '\n';
      return 0;
    }
    if (ext->parsed()) {
      ParsedInput in = parse_input(read_file(file));
      return field.rational ? run_ext<Rational>(in, ext_p, c_choice)
                            : run_ext<Fp>(in, ext_p, c_choice);
    }
    if (verify->parsed()) {
      return field.rational ? run_verify<Rational>(check_name, count, seed, quiet)
                            : run_verify<Fp>(check_name, count, seed, quiet);
    }
    if (paper->parsed()) {
      CheckReport rep = paper_examples<Rational>();
      for (const auto& n : rep.notes) std::cout << n << '\n';
      for (const auto& f : rep.failure_list) std::cerr << "FAILED: " << f.detail << '\n';
      std::cout << (rep.ok() ? "paper examples verified" : "paper examples FAILED") << '\n';
      return rep.ok() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
