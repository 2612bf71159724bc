#include "icds/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "icds/document.hpp"
#include "icds/fixtures.hpp"
#include "icds/generate.hpp"
#include "icds/translate.hpp"

namespace icds::cli {

namespace {

std::vector<std::string> split_props(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

void emit(const std::string& text, const std::string& out_path,
          std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw Error("cannot write " + out_path);
  f << text;
}

std::string check_ic(const GenParams& p) {
  const auto ic = random_ic(p);
  if (const auto r = validate(ic); !r.ok()) return "generated IC structure invalid";
  const auto ds = ic_to_ds(ic);
  if (!validate(ds).ok()) return "ic_to_ds output invalid";
  if (!is_total(ds)) return "ic_to_ds output not total";
  const auto rep = equivalent(ic, ds);
  if (!rep.equivalent)
    return "ic_to_ds differs on " + format_formula(rep.witness->formula) +
           ": " + rep.witness->first.str() + " vs " + rep.witness->second.str();
  if (!round_trip_check(ic).equivalent) return "IC round trip not equivalent";
  return {};
}

std::string check_ds(const GenParams& p) {
  const auto ds = random_total_ds(p);
  if (!validate(ds).ok()) return "generated DS structure invalid";
  if (!is_total(ds)) return "generated DS structure not total";
  const auto ic = ds_to_ic(ds);
  if (!validate(ic).ok()) return "ds_to_ic output invalid";
  const auto rep = equivalent(ds, ic);
  if (!rep.equivalent)
    return "ds_to_ic differs on " + format_formula(rep.witness->formula) +
           ": " + rep.witness->first.str() + " vs " + rep.witness->second.str();
  if (!round_trip_check(ds).equivalent) return "DS round trip not equivalent";
  return {};
}

}  // namespace

FuzzSummary run_fuzz(const FuzzOptions& opts) {
  FuzzSummary summary;
  for (std::uint64_t i = 0; i < opts.iters; ++i) {
    const GenParams p{opts.n_props, opts.n_worlds, opts.seed + i};
    for (const auto& [label, check] :
         {std::pair{"ic", &check_ic}, std::pair{"ds", &check_ds}}) {
      ++summary.total;
      const std::string problem = check(p);
      if (problem.empty()) {
        ++summary.passed;
      } else {
        summary.failures.push_back(std::string(label) + " seed " +
                                   std::to_string(p.seed) + ": " + problem);
      }
    }
  }
  return summary;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Incidence calculus and Dempster-Shafer structures", "icds"};
  app.require_subcommand(1);

  std::string file, file_b, formula_text, out_path, props, example_name;

  auto* validate_cmd = app.add_subcommand("validate", "Check a structure file");
  validate_cmd->add_option("file", file, "Structure document")->required();

  auto* interval_cmd =
      app.add_subcommand("interval", "Probability interval of a formula");
  auto* bel_cmd = app.add_subcommand("bel", "Belief of a formula (ds only)");
  auto* plb_cmd = app.add_subcommand("plb", "Plausibility of a formula (ds only)");
  for (auto* c : {interval_cmd, bel_cmd, plb_cmd}) {
    c->add_option("file", file, "Structure document")->required();
    c->add_option("formula", formula_text, "Formula, e.g. \"~d\"")->required();
  }

  auto* translate_cmd =
      app.add_subcommand("translate", "Translate between ic and ds structures");
  translate_cmd->add_option("file", file, "Structure document")->required();
  bool to_ds = false, to_ic = false;
  auto* to_ds_flag = translate_cmd->add_flag("--to-ds", to_ds, "IC to total DS");
  auto* to_ic_flag = translate_cmd->add_flag("--to-ic", to_ic, "Total DS to IC");
  to_ds_flag->excludes(to_ic_flag);
  translate_cmd->add_option("-o,--output", out_path, "Write here instead of stdout");

  auto* equiv_cmd = app.add_subcommand("equiv", "Check two structures agree");
  equiv_cmd->add_option("a", file, "First structure")->required();
  equiv_cmd->add_option("b", file_b, "Second structure")->required();

  FuzzOptions fuzz;
  auto* fuzz_cmd = app.add_subcommand("fuzz", "Random translation checks");
  fuzz_cmd->add_option("--props", fuzz.n_props, "Propositions (1-4)")
      ->check(CLI::Range(1, 4));
  fuzz_cmd->add_option("--worlds", fuzz.n_worlds, "Worlds (1-8)")
      ->check(CLI::Range(1, 8));
  fuzz_cmd->add_option("--iters", fuzz.iters, "Number of seeds (>= 1)");
  fuzz_cmd->add_option("--seed", fuzz.seed, "First seed");

  auto* example_cmd = app.add_subcommand("example", "Write a built-in fixture");
  example_cmd->add_option("name", example_name, "coats-ds or coats-ic")->required();
  example_cmd->add_option("-o,--output", out_path, "Write here instead of stdout");

  auto* parse_cmd = app.add_subcommand("parse", "Print a formula in canonical form");
  parse_cmd->add_option("--props", props, "Comma-separated propositions")->required();
  parse_cmd->add_option("formula", formula_text, "Formula")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (validate_cmd->parsed()) {
      load(file);
      out << "OK\n";
      return kOk;
    }

    if (interval_cmd->parsed() || bel_cmd->parsed() || plb_cmd->parsed()) {
      const auto st = load(file);
      const auto xi = parse_formula(formula_text, st.language());
      if (interval_cmd->parsed())
        out << interval(st, xi).str() << '\n';
      else if (bel_cmd->parsed())
        out << bel(st, xi).str() << '\n';
      else
        out << plb(st, xi).str() << '\n';
      return kOk;
    }

    if (translate_cmd->parsed()) {
      if (!to_ds && !to_ic) {
        err << "translate: one of --to-ds or --to-ic is required\n";
        return kInputError;
      }
      const auto st = load(file);
      if (to_ds && !st.is_ic())
        throw WrongKind("--to-ds needs an ic document");
      if (to_ic && !st.is_ds())
        throw WrongKind("--to-ic needs a ds document");
      emit(render_document(to_ds ? ic_to_ds(st) : ds_to_ic(st)), out_path, out);
      return kOk;
    }

    if (equiv_cmd->parsed()) {
      const auto a = load(file);
      const auto b = load(file_b);
      const auto rep = equivalent(a, b);
      if (rep.equivalent) {
        out << "EQUIVALENT (" << rep.checked_count << " formulas checked)\n";
        return kOk;
      }
      out << "NOT EQUIVALENT\n"
          << "witness: " << format_formula(rep.witness->formula) << '\n'
          << "  " << file << ": " << rep.witness->first << '\n'
          << "  " << file_b << ": " << rep.witness->second << '\n';
      return kSemanticFailure;
    }

    if (fuzz_cmd->parsed()) {
      if (fuzz.iters == 0) {
        err << "fuzz: --iters must be at least 1\n";
        return kInputError;
      }
      const auto summary = run_fuzz(fuzz);
      for (const auto& f : summary.failures) out << "FAIL " << f << '\n';
      out << summary.passed << '/' << summary.total
          << " translation checks passed\n";
      return summary.passed == summary.total ? kOk : kSemanticFailure;
    }

    if (example_cmd->parsed()) {
      emit(render_document(fixtures::example_by_name(example_name)), out_path,
           out);
      return kOk;
    }

    if (parse_cmd->parsed()) {
      const Language lang(split_props(props));
      out << format_formula(parse_formula(formula_text, lang)) << '\n';
      return kOk;
    }
  } catch (const NotTotal& e) {
    err << "error: " << e.what() << '\n';
    return kNotTotal;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace icds::cli
