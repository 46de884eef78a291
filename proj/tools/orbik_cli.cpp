#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "orbik/builtin.hpp"
#include "orbik/drinfeld.hpp"
#include "orbik/inertial_product.hpp"
#include "orbik/io.hpp"

namespace {

constexpr int kMismatch = 1;
constexpr int kParse = 2;
constexpr int kContract = 3;

struct Job {
  std::string group_file;
  std::string builtin;
  std::vector<std::string> reps;
  std::string cmd;
  std::string out;
  std::string format = "json";
  int degree = 10;
  std::optional<std::uint64_t> seed;
};

void emit(const Job& job, const std::string& text) {
  if (job.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(job.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + job.out);
  f << text;
}

std::string render(const orbik::json& j) { return j.dump(2) + "\n"; }

std::string render_table(const Job& job, const orbik::ProductTable& t) {
  return job.format == "text" ? orbik::product_table_text(t) : render(orbik::product_table_json(t));
}

int run(const Job& job) {
  using namespace orbik;
  auto group = std::make_shared<const FiniteGroup>(job.group_file.empty() ? builtin_group(job.builtin)
                                                                          : group_from_file(job.group_file));
  ConjugacyOptions options{job.seed};
  const auto whole = Subgroup::whole(group);

  if (job.cmd == "chartab") {
    emit(job, render(character_table_json(character_table(whole))));
    return 0;
  }
  if (job.cmd == "drinfeld") {
    emit(job, render_table(job, DrinfeldDouble(group, options).fusion_constants()));
    return 0;
  }
  if (job.cmd == "compare") {
    const ClassFunction zero = ClassFunction::zero(whole);
    const ProductTable virt = InertialProduct(group, zero, options).canonical_product_table();
    const ProductTable fusion = DrinfeldDouble(group, options).fusion_constants();
    const TableDiff diff = compare_tables(virt, fusion);
    std::string line = std::to_string(virt.size()) + " basis elements, " + std::to_string(diff.compared) +
                       " constants, " + std::to_string(diff.mismatches) + " mismatches";
    if (!diff.same_basis) line += " (bases differ)";
    if (!diff.first_mismatch.empty()) line += "; first: " + diff.first_mismatch;
    emit(job, line + "\n");
    return diff.identical() ? 0 : kMismatch;
  }

  const ClassFunction chi = representation_from_specs(whole, job.reps);
  const InertialProduct engine(group, chi, options);
  if (job.cmd == "sectors") {
    emit(job, render(sectors_json(engine)));
    return 0;
  }
  if (job.cmd == "product-table") {
    emit(job, render_table(job, engine.canonical_product_table()));
    return 0;
  }
  if (job.cmd == "check") {
    bool ok = false;
    const json report = check_report_json(engine, job.degree, ok);
    emit(job, render(report));
    return ok ? 0 : kContract;
  }
  throw ParseError("unknown command " + job.cmd);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inertial products on K-theory of linear quotient stacks [V/G]"};
  Job job;
  auto* group_opt = app.add_option("--group", job.group_file, "group description JSON file");
  auto* builtin_opt = app.add_option("--builtin", job.builtin, "builtin group, e.g. S3, cyclic:4, quaternion8");
  group_opt->excludes(builtin_opt);
  app.add_option("--rep", job.reps, "representation summand (repeatable); default zero");
  app.add_option("--cmd", job.cmd, "command")
      ->required()
      ->check(CLI::IsMember({"chartab", "sectors", "product-table", "check", "drinfeld", "compare"}));
  app.add_option("--out", job.out, "output path (default stdout)");
  app.add_option("--degree", job.degree, "truncation degree for graded checks")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", job.seed, "shuffle representatives and transporters");
  app.add_option("--format", job.format, "product table rendering")->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }
  if (job.group_file.empty() && job.builtin.empty()) {
    std::cerr << "one of --group or --builtin is required\n";
    return kParse;
  }

  try {
    return run(job);
  } catch (const orbik::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const orbik::ContractError& e) {
    std::cerr << "contract violation: " << e.what() << "\n";
    return kContract;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kContract;
  }
}
