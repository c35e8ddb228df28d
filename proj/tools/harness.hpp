#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qkhook/integer.hpp"
#include "qkhook/linear_combination.hpp"
#include "qkhook/partition.hpp"
#include "qkhook/quantum_shape.hpp"

namespace qkhook::harness {

using Json = nlohmann::ordered_json;

/// Serialized expansion of O^lambda * O^{(a\b)}.
struct ProductDocument {
  GrassContext context{1, 2};
  std::vector<std::int64_t> shape;
  HookParams hook;
  std::vector<GradedTerm> terms;  ///< sorted by (degree, parts), nonzero

  friend bool operator==(const ProductDocument&, const ProductDocument&) = default;
};

ProductDocument make_product_document(const QuantumShape& lambda, const HookParams& hook);

Json integer_to_json(const Integer& v);
Integer integer_from_json(const Json& j);

Json to_json(const ProductDocument& doc);
/// Throws InputError on schema violations.
ProductDocument product_document_from_json(const Json& j);
/// Two-space indented JSON followed by a newline.
std::string render_json(const ProductDocument& doc);
std::string render_table(const ProductDocument& doc);

struct CaseRecord {
  Json inputs;
  std::vector<std::pair<std::string, Integer>> values;  ///< one per computation path
  bool agree = true;
};

struct VerificationReport {
  std::string suite;
  Json parameters;
  std::vector<CaseRecord> cases;
  std::size_t passed = 0;
  std::size_t failed = 0;
  double wall_seconds = 0.0;

  bool ok() const noexcept { return failed == 0; }
};

struct SuiteOptions {
  std::optional<std::int64_t> max_n;
  std::optional<std::int64_t> max_t;
  std::int64_t samples = 200;  ///< translation suite
  std::uint64_t seed = 20240601;
  std::int64_t max_hook_boxes = 5;  ///< lr-classical suite
  unsigned jobs = 1;
};

const std::vector<std::string>& suite_names();

/// Runs one named suite. Throws InputError for an unknown name or bad ranges.
VerificationReport run_suite(const std::string& name, const SuiteOptions& options);

/// Cases are listed only when requested, or always for failures.
Json to_json(const VerificationReport& report, bool include_cases);
std::string render_table(const VerificationReport& report, bool include_cases);

}  // namespace qkhook::harness
