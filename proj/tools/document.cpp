#include <iomanip>
#include <sstream>

#include "harness.hpp"
#include "qkhook/errors.hpp"
#include "qkhook/pieri.hpp"

namespace qkhook::harness {

ProductDocument make_product_document(const QuantumShape& lambda, const HookParams& hook) {
  return ProductDocument{lambda.context(), lambda.parts(), hook,
                         normalize(multiply_by_hook(lambda, hook))};
}

Json integer_to_json(const Integer& v) {
  if (fits_int64(v)) return Json(to_int64(v));
  return Json(v.str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::exception&) {
      throw InputError("coefficient string is not a decimal integer");
    }
  }
  throw InputError("coefficient must be an integer or a decimal string");
}

Json to_json(const ProductDocument& doc) {
  Json terms = Json::array();
  for (const auto& t : doc.terms) {
    terms.push_back(Json{{"shape", t.shape.parts()}, {"degree", t.degree},
                         {"coeff", integer_to_json(t.coeff)}});
  }
  return Json{{"context", {{"m", doc.context.m()}, {"n", doc.context.n()}}},
              {"shape", doc.shape},
              {"hook", {{"a", doc.hook.a}, {"b", doc.hook.b}}},
              {"terms", std::move(terms)}};
}

ProductDocument product_document_from_json(const Json& j) {
  try {
    ProductDocument doc{GrassContext(j.at("context").at("m").get<std::int64_t>(),
                                     j.at("context").at("n").get<std::int64_t>()),
                        j.at("shape").get<std::vector<std::int64_t>>(),
                        HookParams{j.at("hook").at("a").get<std::int64_t>(),
                                   j.at("hook").at("b").get<std::int64_t>()},
                        {}};
    QuantumShape(doc.context, doc.shape);
    for (const auto& t : j.at("terms")) {
      doc.terms.push_back(GradedTerm{Partition(t.at("shape").get<std::vector<std::int64_t>>()),
                                     t.at("degree").get<std::int64_t>(),
                                     integer_from_json(t.at("coeff"))});
      if (doc.terms.back().coeff == 0) throw InputError("zero coefficient in product document");
    }
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed product document: ") + e.what());
  }
}

std::string render_json(const ProductDocument& doc) { return to_json(doc).dump(2) + "\n"; }

std::string render_table(const ProductDocument& doc) {
  std::ostringstream os;
  os << "context  " << to_string(doc.context) << "\n";
  os << "shape    " << parts_to_string(doc.shape) << "\n";
  os << "hook     (" << doc.hook.a << "\\" << doc.hook.b << ")\n";
  os << "product  " << to_string(doc.terms) << "\n\n";
  os << std::left << std::setw(8) << "degree" << std::setw(20) << "shape" << "coeff\n";
  for (const auto& t : doc.terms) {
    os << std::left << std::setw(8) << t.degree << std::setw(20) << to_string(t.shape) << t.coeff
       << "\n";
  }
  return os.str();
}

}  // namespace qkhook::harness
