#include <doctest.h>

#include <fstream>
#include <sstream>

#include "harness.hpp"
#include "qkhook/errors.hpp"
#include "qkhook/pieri.hpp"
#include "support.hpp"

using namespace qkhook;
using namespace qkhook::harness;
using testing::shape;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_SUITE("cli-harness") {
  TEST_CASE("product document matches the golden files byte for byte") {
    const auto doc = make_product_document(shape(2, 4, {1, 0}), {1, 1});
    CHECK(render_json(doc) == slurp(QKHOOK_GOLDEN_DIR "/product_gr2_4_shape1_hook1_1.json"));
    CHECK(render_table(doc) == slurp(QKHOOK_GOLDEN_DIR "/product_gr2_4_shape1_hook1_1.txt"));
  }

  TEST_CASE("documents are deterministic and round-trip") {
    for (const auto& l : classical_shapes(GrassContext(3, 7))) {
      const auto doc = make_product_document(l, {1, 2});
      const auto text = render_json(doc);
      CHECK(text == render_json(make_product_document(l, {1, 2})));
      const auto back = product_document_from_json(Json::parse(text));
      CHECK(back == doc);
      CHECK(denormalize(back.context, back.terms) == multiply_by_hook(l, {1, 2}));
      for (std::size_t k = 1; k < doc.terms.size(); ++k) {
        const auto& x = doc.terms[k - 1];
        const auto& y = doc.terms[k];
        CHECK(std::tie(x.degree, x.shape) < std::tie(y.degree, y.shape));
      }
      for (const auto& t : doc.terms) CHECK(t.coeff != 0);
    }
  }

  TEST_CASE("integers that overflow 64 bits are strings") {
    CHECK(integer_to_json(Integer(-5)) == Json(-5));
    const Integer big = Integer(1) << 80;
    CHECK(integer_to_json(big) == Json("1208925819614629174706176"));
    CHECK(integer_from_json(integer_to_json(big)) == big);
    CHECK(integer_from_json(Json(7)) == 7);
    CHECK_THROWS_AS(integer_from_json(Json("x1")), InputError);
    CHECK_THROWS_AS(integer_from_json(Json(1.5)), InputError);
  }

  TEST_CASE("schema violations are input errors") {
    auto good = to_json(make_product_document(shape(2, 4, {1, 0}), {1, 1}));
    CHECK_NOTHROW(product_document_from_json(good));
    auto missing = good;
    missing.erase("terms");
    CHECK_THROWS_AS(product_document_from_json(missing), InputError);
    auto bad_degree = good;
    bad_degree["terms"][0]["degree"] = "zero";
    CHECK_THROWS_AS(product_document_from_json(bad_degree), InputError);
    auto bad_shape = good;
    bad_shape["shape"] = Json::array({3, 0});
    CHECK_THROWS_AS(product_document_from_json(bad_shape), InputError);
  }

  TEST_CASE("every suite passes at small ranges") {
    SuiteOptions o;
    o.max_n = 5;
    o.max_t = 4;
    o.samples = 50;
    for (const auto& name : suite_names()) {
      CAPTURE(name);
      const auto r = run_suite(name, o);
      CHECK(r.ok());
      CHECK(r.passed == r.cases.size());
      CHECK(r.passed > 0);
      const auto j = to_json(r, false);
      CHECK(j["suite"] == name);
      CHECK(j["summary"]["failed"] == 0);
      CHECK(j["cases"].empty());
      CHECK(to_json(r, true)["cases"].size() == r.cases.size());
    }
  }

  TEST_CASE("parallel sweeps merge in input order") {
    SuiteOptions serial;
    serial.max_n = 6;
    auto parallel = serial;
    parallel.jobs = 4;
    const auto a = run_suite("pieri-vs-closed-form", serial);
    const auto b = run_suite("pieri-vs-closed-form", parallel);
    REQUIRE(a.cases.size() == b.cases.size());
    for (std::size_t k = 0; k < a.cases.size(); ++k) {
      CHECK(a.cases[k].inputs == b.cases[k].inputs);
      CHECK(a.cases[k].values == b.cases[k].values);
    }
  }

  TEST_CASE("bad suite requests") {
    CHECK_THROWS_AS(run_suite("nope", {}), InputError);
    SuiteOptions o;
    o.max_n = 1;
    CHECK_THROWS_AS(run_suite("support", o), InputError);
  }
}
