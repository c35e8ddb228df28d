#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "harness.hpp"
#include "qkhook/closed_forms.hpp"
#include "qkhook/errors.hpp"
#include "qkhook/pieri.hpp"
#include "qkhook/tableaux.hpp"

namespace {

using namespace qkhook;
using harness::Json;

constexpr int kInputError = 1;
constexpr int kConformanceFailure = 2;

HookParams parse_hook(const std::string& text) {
  const auto parts = parse_parts(text);
  if (parts.size() != 2) throw InputError("hook must be given as a,b");
  const HookParams h{parts[0], parts[1]};
  if (!h.valid()) throw InputError("hook arms must be nonnegative");
  return h;
}

QuantumShape parse_shape(const GrassContext& ctx, const std::string& text) {
  auto parts = parse_parts(text);
  // A classical partition may omit its trailing zero rows.
  if (parts.size() < static_cast<std::size_t>(ctx.m())) {
    bool nonneg = true;
    for (auto p : parts) nonneg = nonneg && p >= 0;
    if (nonneg) parts.resize(static_cast<std::size_t>(ctx.m()), 0);
  }
  return QuantumShape(ctx, std::move(parts));
}

struct Common {
  std::string context;
  std::string shape;
  std::string hook;
  std::string format = "table";
};

void add_format(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"table", "json"}))
      ->capture_default_str();
}

void add_product_flags(CLI::App* cmd, Common& c) {
  cmd->add_option("--context", c.context, "Grassmannian as m,n")->required();
  cmd->add_option("--shape", c.shape, "Shape parts, e.g. 2,1 or ()")->required();
  cmd->add_option("--hook", c.hook, "Hook arms a,b")->required();
  add_format(cmd, c);
}

int cmd_product(const Common& c) {
  const auto ctx = parse_context(c.context);
  const auto lambda = parse_shape(ctx, c.shape);
  const auto doc = harness::make_product_document(lambda, parse_hook(c.hook));
  std::cout << (c.format == "json" ? harness::render_json(doc) : harness::render_table(doc));
  return 0;
}

int cmd_coeff(const Common& c) {
  const auto ctx = parse_context(c.context);
  const auto lambda = parse_shape(ctx, c.shape);
  const auto h = parse_hook(c.hook);
  std::vector<std::pair<std::string, Integer>> paths{{"reduced", C_reduced(lambda, h.a, h.b)},
                                                     {"direct", C_direct(lambda, h.a, h.b)}};
  if (hook_fits(ctx, h)) {
    paths.emplace_back("pieri", coefficient(multiply_by_hook(lambda, h), shift(lambda, 1)));
  }
  bool agree = true;
  for (const auto& [name, v] : paths) agree = agree && v == paths.front().second;

  if (c.format == "json") {
    Json values = Json::object();
    for (const auto& [name, v] : paths) values[name] = harness::integer_to_json(v);
    Json doc{{"context", {{"m", ctx.m()}, {"n", ctx.n()}}},
             {"shape", lambda.parts()},
             {"hook", {{"a", h.a}, {"b", h.b}}},
             {"value", harness::integer_to_json(paths.front().second)},
             {"paths", values},
             {"agree", agree}};
    std::cout << doc.dump(2) << "\n";
  } else if (agree) {
    std::cout << paths.front().second << "\n";
  } else {
    for (const auto& [name, v] : paths) std::cout << name << " " << v << "\n";
  }
  if (!agree) {
    std::cerr << "conformance failure: computation paths disagree\n";
    return kConformanceFailure;
  }
  return 0;
}

struct FormulaArgs {
  std::int64_t t = 0;
  std::string hook;
  std::string form = "positive";
  std::string format = "table";
};

int cmd_c_formula(const FormulaArgs& f) {
  const auto h = parse_hook(f.hook);
  std::vector<std::pair<std::string, Integer>> values;
  if (f.form == "double" || f.form == "all") values.emplace_back("double", c_double_sum(f.t, h.a, h.b));
  if (f.form == "single" || f.form == "all") values.emplace_back("single", c_single_sum(f.t, h.a, h.b));
  if (f.form == "positive" || f.form == "all") values.emplace_back("positive", c_positive(f.t, h.a, h.b));
  bool agree = true;
  for (const auto& [name, v] : values) agree = agree && v == values.front().second;
  if (f.format == "json") {
    Json doc{{"t", f.t}, {"a", h.a}, {"b", h.b}};
    for (const auto& [name, v] : values) doc[name] = harness::integer_to_json(v);
    doc["agree"] = agree;
    std::cout << doc.dump(2) << "\n";
  } else if (values.size() == 1) {
    std::cout << values.front().second << "\n";
  } else {
    for (const auto& [name, v] : values) std::cout << name << " " << v << "\n";
  }
  return agree ? 0 : kConformanceFailure;
}

int cmd_corners(const Common& c) {
  const auto ctx = parse_context(c.context);
  const auto lambda = parse_shape(ctx, c.shape);
  const auto k = quantum_corners(lambda);
  if (c.format == "json") {
    Json doc{{"context", {{"m", ctx.m()}, {"n", ctx.n()}}}, {"shape", lambda.parts()}, {"corners", k}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << k << "\n";
  }
  return 0;
}

struct LrArgs {
  std::string lambda;
  std::string mu;
  std::string hook;
  std::string nu;
  bool list = false;
  std::string format = "table";
};

int cmd_lr(const LrArgs& l) {
  if (l.mu.empty() == l.hook.empty()) throw InputError("give exactly one of --mu and --hook");
  const auto lambda = parse_partition(l.lambda);
  const auto mu = l.mu.empty() ? hook_partition(parse_hook(l.hook)) : parse_partition(l.mu);
  const auto nu = parse_partition(l.nu);
  const auto value = lr_coefficient(lambda, mu, nu);
  std::vector<std::string> listing;
  if (l.list) {
    count_lr_tableaux(star_shape(lambda, mu), nu,
                      [&](const SetValuedTableau& t) { listing.push_back(to_string(t)); });
  }
  if (l.format == "json") {
    Json doc{{"lambda", lambda.parts()}, {"mu", mu.parts()}, {"nu", nu.parts()},
             {"coefficient", harness::integer_to_json(value)}};
    if (l.list) doc["tableaux"] = listing;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << value << "\n";
    for (const auto& s : listing) std::cout << s << "\n";
  }
  return 0;
}

struct VerifyArgs {
  std::string suite;
  std::optional<std::int64_t> max_n;
  std::optional<std::int64_t> max_t;
  std::int64_t samples = 200;
  std::uint64_t seed = 20240601;
  unsigned jobs = 1;
  bool cases = false;
  std::string format = "table";
};

int cmd_verify(const VerifyArgs& v) {
  harness::SuiteOptions options;
  options.max_n = v.max_n;
  options.max_t = v.max_t;
  options.samples = v.samples;
  options.seed = v.seed;
  options.jobs = v.jobs == 0 ? std::max(1U, std::thread::hardware_concurrency()) : v.jobs;
  std::vector<std::string> suites;
  if (v.suite == "all") {
    suites = harness::suite_names();
  } else {
    suites.push_back(v.suite);
  }
  bool ok = true;
  Json reports = Json::array();
  for (const auto& name : suites) {
    const auto report = harness::run_suite(name, options);
    ok = ok && report.ok();
    if (v.format == "json") {
      reports.push_back(harness::to_json(report, v.cases));
    } else {
      std::cout << harness::render_table(report, v.cases);
    }
  }
  if (v.format == "json") std::cout << (reports.size() == 1 ? reports[0] : reports).dump(2) << "\n";
  return ok ? 0 : kConformanceFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hook multiplication in the quantum K-theory of Grassmannians"};
  app.require_subcommand(1);

  Common product_args, coeff_args, corner_args;
  auto* product = app.add_subcommand("product", "Expand O^shape * O^hook");
  add_product_flags(product, product_args);
  auto* coeff = app.add_subcommand("coeff", "Coefficient of O^shape[1], cross-checked across methods");
  add_product_flags(coeff, coeff_args);

  FormulaArgs formula_args;
  auto* formula = app.add_subcommand("c-formula", "Closed-form value c(t,a,b)");
  formula->add_option("--t", formula_args.t, "Corner count t")->required();
  formula->add_option("--hook", formula_args.hook, "a,b")->required();
  formula->add_option("--form", formula_args.form, "Which expression")
      ->check(CLI::IsMember({"double", "single", "positive", "all"}))
      ->capture_default_str();
  formula->add_option("--format", formula_args.format)->check(CLI::IsMember({"table", "json"}));

  auto* corner_cmd = app.add_subcommand("corners", "Number of quantum corners of a shape");
  corner_cmd->add_option("--context", corner_args.context, "m,n")->required();
  corner_cmd->add_option("--shape", corner_args.shape, "Shape parts")->required();
  add_format(corner_cmd, corner_args);

  LrArgs lr_args;
  auto* lr = app.add_subcommand("lr", "Signed K-theoretic Littlewood-Richardson coefficient");
  lr->add_option("--lambda", lr_args.lambda, "Partition lambda")->required();
  lr->add_option("--mu", lr_args.mu, "Partition mu");
  lr->add_option("--hook", lr_args.hook, "mu as a hook a,b");
  lr->add_option("--nu", lr_args.nu, "Partition nu")->required();
  lr->add_flag("--list", lr_args.list, "List the counted tableaux");
  lr->add_option("--format", lr_args.format)->check(CLI::IsMember({"table", "json"}));

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run a conformance suite");
  verify->add_option("--suite", verify_args.suite, "Suite name or 'all'")->required();
  verify->add_option("--max-n", verify_args.max_n, "Largest n swept");
  verify->add_option("--max-t", verify_args.max_t, "Largest t swept");
  verify->add_option("--samples", verify_args.samples, "Random samples (translation)");
  verify->add_option("--seed", verify_args.seed, "Random seed (translation)");
  verify->add_option("--jobs", verify_args.jobs, "Worker threads, 0 for all cores");
  verify->add_flag("--cases", verify_args.cases, "List passing cases too");
  verify->add_option("--format", verify_args.format)->check(CLI::IsMember({"table", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*product) return cmd_product(product_args);
    if (*coeff) return cmd_coeff(coeff_args);
    if (*formula) return cmd_c_formula(formula_args);
    if (*corner_cmd) return cmd_corners(corner_args);
    if (*lr) return cmd_lr(lr_args);
    if (*verify) return cmd_verify(verify_args);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kConformanceFailure;
  }
  return kInputError;
}
