#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include "harness.hpp"
#include "qkhook/closed_forms.hpp"
#include "qkhook/errors.hpp"
#include "qkhook/pieri.hpp"
#include "qkhook/tableaux.hpp"

namespace qkhook::harness {
namespace {

using Values = std::vector<std::pair<std::string, Integer>>;

struct Task {
  Json inputs;
  std::function<Values()> run;
};

Json shape_inputs(const QuantumShape& lambda, const HookParams& h) {
  return Json{{"m", lambda.context().m()},
              {"n", lambda.context().n()},
              {"shape", lambda.parts()},
              {"a", h.a},
              {"b", h.b}};
}

// Every (lambda, hook) with lambda classical in Gr(m,n), 2 <= n <= max_n, and
// the hook fitting the rectangle.
template <typename Fn>
void for_each_product_case(std::int64_t max_n, Fn&& fn) {
  for (std::int64_t n = 2; n <= max_n; ++n) {
    for (std::int64_t m = 1; m < n; ++m) {
      GrassContext ctx(m, n);
      for (const auto& lambda : classical_shapes(ctx)) {
        for (std::int64_t a = 0; a <= m - 1; ++a) {
          for (std::int64_t b = 0; b <= n - m - 1; ++b) fn(lambda, HookParams{a, b});
        }
      }
    }
  }
}

Values violations(std::int64_t count) { return {{"violations", count}, {"expected", 0}}; }

std::vector<Task> pieri_vs_closed_form(std::int64_t max_n) {
  std::vector<Task> tasks;
  for_each_product_case(max_n, [&](const QuantumShape& lambda, const HookParams& h) {
    tasks.push_back({shape_inputs(lambda, h), [lambda, h] {
                       const auto product = multiply_by_hook(lambda, h);
                       return Values{{"pieri", coefficient(product, shift(lambda, 1))},
                                     {"reduced", C_reduced(lambda, h.a, h.b)},
                                     {"direct", C_direct(lambda, h.a, h.b)}};
                     }});
  });
  return tasks;
}

std::vector<Task> support_laws(std::int64_t max_n) {
  std::vector<Task> tasks;
  for_each_product_case(max_n, [&](const QuantumShape& lambda, const HookParams& h) {
    tasks.push_back({shape_inputs(lambda, h), [lambda, h] {
                       const auto product = multiply_by_hook(lambda, h);
                       const auto upper = shift(lambda, 1);
                       const auto base = to_partition(lambda);
                       std::int64_t bad = 0;
                       for (const auto& nu : product.support()) {
                         if (!contains(lambda, nu) || !contains(nu, upper) || !is_rim(nu, lambda)) {
                           ++bad;
                         }
                       }
                       for (const auto& term : normalize(product)) {
                         if (term.degree != 0 && term.degree != 1) ++bad;
                         if (term.degree == 1 && !base.contains(term.shape)) ++bad;
                       }
                       return violations(bad);
                     }});
  });
  return tasks;
}

std::vector<Task> sign_laws(std::int64_t max_n) {
  std::vector<Task> tasks;
  for_each_product_case(max_n, [&](const QuantumShape& lambda, const HookParams& h) {
    tasks.push_back({shape_inputs(lambda, h), [lambda, h] {
                       const auto n = lambda.context().n();
                       std::int64_t bad = 0;
                       for (const auto& term : normalize(multiply_by_hook(lambda, h))) {
                         const auto e = term.shape.size() + term.degree * n - lambda.size() - h.boxes();
                         if (sign_power(e) * term.coeff < 0) ++bad;
                       }
                       return violations(bad);
                     }});
  });
  return tasks;
}

std::vector<Task> translation_samples(std::int64_t max_n, std::int64_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto uniform = [&rng](std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  };
  std::vector<Task> tasks;
  for (std::int64_t k = 0; k < samples; ++k) {
    const auto n = uniform(2, max_n);
    const auto m = uniform(1, n - 1);
    GrassContext ctx(m, n);
    const auto shapes = classical_shapes(ctx);
    auto lambda = shapes[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(shapes.size()) - 1))];
    // Start from a general quantum shape half of the time.
    if (uniform(0, 1) == 1) lambda = translate(lambda, uniform(-m, m), uniform(-(n - m), n - m));
    const HookParams h{uniform(0, m - 1), uniform(0, n - m - 1)};
    const auto rows = uniform(-m, 2 * m);
    const auto cols = uniform(-(n - m), 2 * (n - m));
    auto inputs = shape_inputs(lambda, h);
    inputs["rows"] = rows;
    inputs["cols"] = cols;
    tasks.push_back({std::move(inputs), [lambda, h, rows, cols] {
                       const auto moved = translate(multiply_by_hook(lambda, h), rows, cols);
                       const auto direct = multiply_by_hook(translate(lambda, rows, cols), h);
                       const auto diff = moved - direct;
                       return violations(static_cast<std::int64_t>(diff.size()));
                     }});
  }
  return tasks;
}

std::vector<Task> formula_agreement(std::int64_t max_t) {
  std::vector<Task> tasks;
  for (std::int64_t t = 1; t <= max_t; ++t) {
    for (std::int64_t a = 0; a <= t; ++a) {
      for (std::int64_t b = 0; b <= t; ++b) {
        tasks.push_back({Json{{"t", t}, {"a", a}, {"b", b}}, [t, a, b] {
                           return Values{{"double_sum", c_double_sum(t, a, b)},
                                         {"single_sum", c_single_sum(t, a, b)},
                                         {"positive", c_positive(t, a, b)}};
                         }});
      }
    }
  }
  return tasks;
}

std::vector<Task> f_equals_g(std::int64_t max_t) {
  std::vector<Task> tasks;
  for (std::int64_t t = -5; t <= max_t; ++t) {
    for (std::int64_t a = 2; a <= max_t; ++a) {
      for (std::int64_t b = 1; b <= max_t; ++b) {
        for (std::int64_t r = -5; r <= 5; ++r) {
          tasks.push_back({Json{{"t", t}, {"a", a}, {"b", b}, {"r", r}}, [t, a, b, r] {
                             return Values{{"f", f_aux(t, a, b, r)}, {"g", g_aux(t, a, b, r)}};
                           }});
        }
      }
    }
  }
  return tasks;
}

Integer degree_zero_coefficient(const std::vector<GradedTerm>& terms, const Partition& nu) {
  for (const auto& term : terms) {
    if (term.degree == 0 && term.shape == nu) return term.coeff;
  }
  return 0;
}

std::vector<Task> lr_classical(std::int64_t max_n, std::int64_t max_hook_boxes, std::int64_t max_t) {
  std::vector<Task> tasks;
  for_each_product_case(max_n, [&](const QuantumShape& lambda, const HookParams& h) {
    if (h.boxes() > max_hook_boxes) return;
    auto inputs = shape_inputs(lambda, h);
    inputs["kind"] = "classical";
    tasks.push_back({std::move(inputs), [lambda, h] {
                       // Compare every nu of the rectangle; report the count of disagreements
                       // alongside the number of nonzero LR coefficients checked.
                       const auto terms = normalize(multiply_by_hook(lambda, h));
                       const auto base = to_partition(lambda);
                       const auto hook = hook_partition(h);
                       std::int64_t mismatches = 0;
                       for (const auto& nu : classical_shapes(lambda.context())) {
                         const auto target = to_partition(nu);
                         if (lr_coefficient(base, hook, target) != degree_zero_coefficient(terms, target)) {
                           ++mismatches;
                         }
                       }
                       return violations(mismatches);
                     }});
    auto broken = shape_inputs(lambda, h);
    broken["kind"] = "broken-rim";
    tasks.push_back({std::move(broken), [lambda, h] {
                       const auto& ctx = lambda.context();
                       const auto product = multiply_by_hook(lambda, h);
                       const auto upper = shift(lambda, 1);
                       const auto hook = hook_partition(h);
                       std::int64_t mismatches = 0;
                       for (const auto& term : normalize(product)) {
                         if (term.degree != 1) continue;
                         const auto nu = shift(QuantumShape::from_partition(ctx, term.shape), 1);
                         if (nu == upper) continue;
                         // First maximal box (i, upper_i) of lambda[1] missing from nu.
                         const auto& p = upper.parts();
                         std::size_t row = p.size();
                         for (std::size_t i = 0; i < p.size(); ++i) {
                           const auto below = i + 1 < p.size() ? p[i + 1] : p.front() - ctx.cols();
                           if (p[i] > below && nu.parts()[i] < p[i]) {
                             row = i;
                             break;
                           }
                         }
                         if (row == p.size()) {
                           ++mismatches;
                           continue;
                         }
                         const auto dr = -static_cast<std::int64_t>(row);
                         const auto dc = ctx.cols() + 1 - p[row];
                         const auto lambda_c = translate(lambda, dr, dc);
                         const auto nu_c = translate(nu, dr, dc);
                         if (!is_classical(lambda_c) || !is_classical(nu_c) ||
                             lr_coefficient(to_partition(lambda_c), hook, to_partition(nu_c)) !=
                                 coefficient(product, nu)) {
                           ++mismatches;
                         }
                       }
                       return violations(mismatches);
                     }});
  });
  for (std::int64_t t = 2; t <= max_t; ++t) {
    for (std::int64_t a = 0; a <= t - 1; ++a) {
      for (std::int64_t b = 0; b <= t - 1; ++b) {
        tasks.push_back({Json{{"kind", "staircase"}, {"t", t}, {"a", a}, {"b", b}}, [t, a, b] {
                           const auto [ctx, staircase] = rho(t);
                           const auto target = staircase_target(t);
                           const Integer formula = sign_power(a + b) * binomial(t - 2, a - 1) *
                                                   binomial(t - 2, b - 1);
                           const auto terms = normalize(multiply_by_hook(staircase, {a, b}));
                           return Values{
                               {"lr", lr_coefficient(rho_partition(t), hook_partition({a, b}), target)},
                               {"formula", formula},
                               {"pieri", degree_zero_coefficient(terms, target)}};
                         }});
      }
    }
  }
  return tasks;
}

std::vector<Task> marked_pairs(std::int64_t max_t) {
  std::vector<Task> tasks;
  for (std::int64_t t = 1; t <= max_t; ++t) {
    for (std::int64_t a = 0; a <= t - 1; ++a) {
      for (std::int64_t b = 0; b <= t - 1; ++b) {
        tasks.push_back({Json{{"t", t}, {"a", a}, {"b", b}}, [t, a, b] {
                           // Equal iff the count is |c| and c has sign (-1)^(a+b+1).
                           return Values{{"signed_pairs", sign_power(a + b + 1) * marked_pair_count(t, a, b)},
                                         {"c", c_positive(t, a, b)}};
                         }});
      }
    }
  }
  return tasks;
}

// A chain that misses rho_t or changes t reports chain_ok = C + 1.
std::vector<Task> reduction_chains(std::int64_t max_n) {
  std::vector<Task> tasks;
  for (std::int64_t n = 2; n <= max_n; ++n) {
    for (std::int64_t m = 1; m < n; ++m) {
      GrassContext ctx(m, n);
      for (const auto& lambda : classical_shapes(ctx)) {
        for (std::int64_t a = 0; a <= m; ++a) {
          for (std::int64_t b = 0; b <= n - m; ++b) {
            Json inputs{{"m", m}, {"n", n}, {"shape", lambda.parts()}, {"a", a}, {"b", b}};
            tasks.push_back({std::move(inputs), [lambda, m, n, a, b] {
                               const ReductionState start{m, n, to_partition(lambda), a, b};
                               const auto chain = reduction_chain(start);
                               const auto t = quantum_corners(lambda);
                               const auto& last = chain.states.back();
                               bool shape_ok = last.m == t && last.n == 2 * t &&
                                               last.lambda == rho_partition(t) &&
                                               last.a == a - m + t && last.b == b - n + m + t;
                               const auto c0 = C_direct(lambda, a, b);
                               for (const auto& s : chain.states) {
                                 if (quantum_corners(s.shape()) != t || C_direct(s.shape(), s.a, s.b) != c0) {
                                   shape_ok = false;
                                 }
                               }
                               return Values{{"direct_start", c0},
                                             {"direct_end", C_direct(last.shape(), last.a, last.b)},
                                             {"reduced", C_reduced(lambda, a, b)},
                                             {"chain_ok", shape_ok ? c0 : c0 + 1}};
                             }});
          }
        }
      }
    }
  }
  return tasks;
}

bool all_equal(const Values& values) {
  return std::all_of(values.begin(), values.end(),
                     [&](const auto& kv) { return kv.second == values.front().second; });
}

std::vector<CaseRecord> execute(std::vector<Task>& tasks, unsigned jobs) {
  std::vector<CaseRecord> records(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (auto i = next++; i < tasks.size(); i = next++) {
      auto values = tasks[i].run();
      records[i] = CaseRecord{std::move(tasks[i].inputs), values, all_equal(values)};
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < jobs; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return records;
}

std::int64_t require_at_least(std::int64_t v, std::int64_t lo, const char* name) {
  if (v < lo) throw InputError(std::string(name) + " must be >= " + std::to_string(lo));
  return v;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "pieri-vs-closed-form", "formula-agreement", "f-equals-g",   "support",        "signs",
      "translation",          "lr-classical",      "marked-pairs", "reduction-chain"};
  return names;
}

VerificationReport run_suite(const std::string& name, const SuiteOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  VerificationReport report;
  report.suite = name;
  std::vector<Task> tasks;
  if (name == "pieri-vs-closed-form" || name == "support" || name == "signs") {
    const auto max_n = require_at_least(options.max_n.value_or(8), 2, "max-n");
    report.parameters = Json{{"max_n", max_n}};
    if (name == "pieri-vs-closed-form") tasks = pieri_vs_closed_form(max_n);
    if (name == "support") tasks = support_laws(max_n);
    if (name == "signs") tasks = sign_laws(max_n);
  } else if (name == "formula-agreement") {
    const auto max_t = require_at_least(options.max_t.value_or(12), 1, "max-t");
    report.parameters = Json{{"max_t", max_t}};
    tasks = formula_agreement(max_t);
  } else if (name == "f-equals-g") {
    const auto max_t = require_at_least(options.max_t.value_or(8), 2, "max-t");
    report.parameters = Json{{"t", {-5, max_t}}, {"a", {2, max_t}}, {"b", {1, max_t}}, {"r", {-5, 5}}};
    tasks = f_equals_g(max_t);
  } else if (name == "translation") {
    const auto max_n = require_at_least(options.max_n.value_or(7), 2, "max-n");
    const auto samples = require_at_least(options.samples, 1, "samples");
    report.parameters = Json{{"max_n", max_n}, {"samples", samples}, {"seed", options.seed}};
    tasks = translation_samples(max_n, samples, options.seed);
  } else if (name == "lr-classical") {
    const auto max_n = require_at_least(options.max_n.value_or(7), 2, "max-n");
    const auto max_t = require_at_least(options.max_t.value_or(5), 1, "max-t");
    report.parameters = Json{{"max_n", max_n},
                             {"max_hook_boxes", options.max_hook_boxes},
                             {"staircase_max_t", max_t}};
    tasks = lr_classical(max_n, options.max_hook_boxes, max_t);
  } else if (name == "marked-pairs") {
    const auto max_t = require_at_least(options.max_t.value_or(5), 1, "max-t");
    report.parameters = Json{{"max_t", max_t}};
    tasks = marked_pairs(max_t);
  } else if (name == "reduction-chain") {
    const auto max_n = require_at_least(options.max_n.value_or(8), 2, "max-n");
    report.parameters = Json{{"max_n", max_n}};
    tasks = reduction_chains(max_n);
  } else {
    std::string known;
    for (const auto& s : suite_names()) known += (known.empty() ? "" : ", ") + s;
    throw InputError("unknown suite \"" + name + "\" (known: " + known + ")");
  }
  report.cases = execute(tasks, std::max(1U, options.jobs));
  for (const auto& c : report.cases) (c.agree ? report.passed : report.failed)++;
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

Json to_json(const VerificationReport& report, bool include_cases) {
  Json cases = Json::array();
  for (const auto& c : report.cases) {
    if (!include_cases && c.agree) continue;
    Json values = Json::object();
    for (const auto& [path, v] : c.values) values[path] = integer_to_json(v);
    cases.push_back(Json{{"inputs", c.inputs}, {"values", values}, {"agree", c.agree}});
  }
  return Json{{"suite", report.suite},
              {"parameters", report.parameters},
              {"summary", {{"cases", report.cases.size()},
                           {"passed", report.passed},
                           {"failed", report.failed}}},
              {"cases", std::move(cases)},
              {"timing", {{"wall_seconds", report.wall_seconds}}}};
}

std::string render_table(const VerificationReport& report, bool include_cases) {
  std::ostringstream os;
  os << "suite       " << report.suite << "\n";
  os << "parameters  " << report.parameters.dump() << "\n";
  os << "cases       " << report.cases.size() << "\n";
  os << "passed      " << report.passed << "\n";
  os << "failed      " << report.failed << "\n";
  os << "wall time   " << std::fixed << std::setprecision(3) << report.wall_seconds << " s\n";
  for (const auto& c : report.cases) {
    if (!include_cases && c.agree) continue;
    os << (c.agree ? "  ok   " : "  FAIL ") << c.inputs.dump();
    for (const auto& [path, v] : c.values) os << "  " << path << "=" << v;
    os << "\n";
  }
  return os.str();
}

}  // namespace qkhook::harness
