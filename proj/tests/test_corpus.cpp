#include "abckit/corpus.hpp"
#include "abckit/documents.hpp"
#include "abckit/ellenberg.hpp"
#include "abckit/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>

using namespace abckit;

namespace {

IngestResult text(const std::string& s) {
  std::istringstream in(s);
  return ingest_triples(in);
}

IngestResult jsonl(const std::string& s) {
  std::istringstream in(s);
  return ingest_field_corpus(in);
}

long rad_of(long n) {
  long r = 1;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      r *= p;
      while (n % p == 0) n /= p;
    }
  return n > 1 ? r * n : r;
}

std::string csv_of(const std::vector<ScanRow>& rows) {
  std::ostringstream out;
  write_csv(out, rows);
  return out.str();
}

}  // namespace

TEST_CASE("text corpus ingest") {
  auto res = text(
      "# header\n"
      "3 125 128\n"
      "\n"
      "2 2 4\n"
      "1 2 4\n"
      "1 8 9 1.2263 tagged\n"
      "5 x 6\n"
      "0 1 1\n"
      "1 2\n"
      "  1 1 2   # trailing comment\n");
  REQUIRE(res.records.size() == 3);
  CHECK(res.records[0].line == 2);
  CHECK(res.records[0].point.c.rational_value() == 128);
  CHECK(res.records[1].tags == std::vector<std::string>{"1.2263", "tagged"});
  CHECK(res.records[2].line == 10);
  REQUIRE(res.rejected.size() == 5);
  CHECK(res.rejected[0].line == 4);
  CHECK(res.rejected[0].reason.find("gcd 2") != std::string::npos);
  CHECK(res.rejected[1].reason == "a + b != c");
  CHECK(res.rejected[2].reason.find("x") != std::string::npos);
  CHECK(res.rejected[3].reason == "entries must be positive");
  CHECK(res.rejected[4].reason == "expected three integers");
  // every line is accounted for
  CHECK(res.records.size() + res.rejected.size() + res.ignored == 10);
}

TEST_CASE("field corpus ingest") {
  auto res = jsonl(
      R"({"field": {"min_poly": [3, 0, 1]}, "a": ["1/2", "1/2"], "b": ["1/2", "-1/2"]})"
      "\n"
      R"({"a": 3, "b": 125, "c": 128, "tags": ["rational"]})"
      "\n"
      R"({"field": {"min_poly": [-2, 0, 1], "disc_override": 8}, "a": [1, 1], "b": [0, -1], "c": [1, 0]})"
      "\n"
      R"({"a": 1, "b": 1, "c": 3})"
      "\n"
      "{not json\n"
      R"({"field": {"min_poly": [1, 0, 1]}, "a": [0, 1], "b": [0, -1]})"
      "\n"
      "# comment\n");
  REQUIRE(res.records.size() == 3);
  CHECK(res.records[0].field == "x^2 + 3");
  CHECK(res.records[1].field == "Q");
  CHECK(res.records[1].tags == std::vector<std::string>{"rational"});
  CHECK(res.records[2].point.field()->disc_override() == Integer(8));
  REQUIRE(res.rejected.size() == 3);
  CHECK(res.rejected[0].reason == "a + b != c");
  CHECK(res.rejected[1].reason.find("malformed JSON") == 0);
  CHECK(res.rejected[2].reason == "point lies on the tripod");
  CHECK(res.ignored == 1);

  auto rep = evaluate(res.records[0].point);
  CHECK(rep.h.contains(Rational(0)));
  CHECK(rep.radical_K.total(128).contains(Rational(2)));
}

TEST_CASE("ingest picks the format from the file") {
  std::string path = std::string(ABCKIT_TEST_DATA) + "/abc_top100.txt";
  auto res = ingest(path);
  CHECK(res.records.size() == 100);
  CHECK(res.rejected.empty());
  CHECK_THROWS_AS(ingest("/nonexistent/corpus.txt"), InvalidInput);
}

TEST_CASE("scan is order stable and deterministic") {
  auto res = ingest(std::string(ABCKIT_TEST_DATA) + "/abc_top100.txt");
  Config cfg;
  auto serial = scan(res.records, cfg, 1);
  auto parallel = scan(res.records, cfg, 8);
  REQUIRE(serial.size() == res.records.size());
  std::string csv = csv_of(serial);
  CHECK(csv == csv_of(parallel));
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 101);

  // quality against a double-precision oracle; the file tags carry
  // log c / log rad(abc), without the degree term
  for (std::size_t i = 0; i < serial.size(); ++i) {
    REQUIRE(serial[i].report);
    long a = serial[i].record->point.a.rational_value().get_num().get_si();
    long b = serial[i].record->point.b.rational_value().get_num().get_si();
    long c = a + b;
    double r = std::log(static_cast<double>(rad_of(a) * rad_of(b) * rad_of(c)));
    CHECK(serial[i].report->quality.mid() == doctest::Approx(std::log(double(c)) / (1 + r)));
    CHECK(std::stod(serial[i].record->tags.at(0)) == doctest::Approx(std::log(double(c)) / r).epsilon(1e-3));
    CHECK(!serial[i].report->challenge());
  }

  auto s = summarize(serial);
  CHECK(s.rows == 100);
  CHECK(s.errors == 0);
  CHECK(s.challenges.empty());
  CHECK(s.max_quality_line.has_value());
}

TEST_CASE("config validation") {
  Config cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.precision_bits = 2048;
  CHECK_THROWS_AS(cfg.validate(), InvalidInput);
  cfg = Config{};
  cfg.degree_cap = 0;
  CHECK_THROWS_AS(cfg.validate(), InvalidInput);
  cfg = Config{};
  cfg.spherical_height = true;
  cfg.radical_exception = true;
  auto o = cfg.height_options();
  CHECK(o.spherical);
  CHECK(o.radical_exception);
  CHECK(o.precision == 128);
  CHECK(o.max_precision == 1024);
}

TEST_CASE("decimal and rational documents") {
  CHECK(parse_decimal("1.0") == 1);
  CHECK(parse_decimal("0.25") == Rational(1, 4));
  CHECK(parse_decimal("-1.5e-3") == Rational(-3, 2000));
  CHECK(parse_decimal("2E2") == 200);
  CHECK(parse_decimal("-3/4") == Rational(-3, 4));
  CHECK_THROWS_AS(parse_decimal("1.2.3"), InvalidInput);
  CHECK_THROWS_AS(parse_decimal("e5"), InvalidInput);
  CHECK(rational_from_json(Json::parse("1.0")) == 1);
  CHECK(rational_from_json(Json::parse("0.1")) == Rational(1, 10));
  CHECK(rational_from_json(Json::parse("\"7/3\"")) == Rational(7, 3));
  CHECK_THROWS_AS(rational_from_json(Json::parse("[1]")), InvalidInput);
}

TEST_CASE("divisor and neighborhood documents") {
  auto Q = NumberField::rationals();
  auto D = divisor_from_json(
      Q, Json::parse(R"({"finite": [{"p": 2, "label": 0, "D": 3}, {"p": 3, "D": 2}], "arch": {"embedding": 0, "D": 1.0}})"));
  CHECK(compute_n0(D) == 24);
  REQUIRE(D.arch());
  CHECK(D.arch()->D == 1);
  CHECK_THROWS_AS(divisor_from_json(Q, Json::parse(R"({"finite": [{"p": 2}]})")), InvalidInput);

  auto G = neighborhood_from_json(Json::parse(R"({"nonarch": [{"p": 2, "g": 2}], "arch": [{"g": "1/2"}]})"));
  CHECK(G.nonarch().size() == 1);
  CHECK(!G.arch()[0].embedding);
  CHECK(G.arch()[0].g == Rational(1, 2));
  CHECK_THROWS_AS(neighborhood_from_json(Json::parse(R"({"nonarch": [{"p": 2, "g": 1}]})")), InvalidInput);
}

TEST_CASE("point lists and belyi output") {
  auto pts = point_list_from_json(Json::parse(R"(["1/2", 0, "inf", {"min_poly": [-2, 0, 1], "root_index": 1}])"));
  REQUIRE(pts.size() == 4);
  CHECK(pts[0]->rational_value() == Rational(1, 2));
  CHECK(!pts[2]);
  CHECK(pts[3]->degree() == 2);
  CHECK(proj_algebraic_to_json(pts[2]) == "inf");
  CHECK(proj_algebraic_from_json(proj_algebraic_to_json(pts[3])) == *pts[3]);

  auto E = point_list_from_json(Json::parse(R"([0, "1/2", 1])"));
  auto b = build_belyi(E, {});
  Json j = belyi_to_json(b);
  CHECK(j["degree"] == 2);
  CHECK(j["certificate"]["ok"] == true);
  // the map is 4z(1 - z)
  CHECK(j["map"]["num"] == Json::parse(R"(["0", "4", "-4"])"));
  CHECK(j["map"]["den"] == Json::parse(R"(["1"])"));
}

TEST_CASE("transform document") {
  auto Q = NumberField::rationals();
  auto D = divisor_from_json(Q, Json::parse(R"({"finite": [{"p": 2, "D": 3}, {"p": 3, "D": 2}]})"));
  auto t = transform(FieldElement::rational(Q, Rational(5, 7)), D);
  Json j = transform_to_json(t);
  CHECK(j["n0"] == "24");
  CHECK(j["n_le_C"] == true);
  CHECK(j["finite"].size() == 2);
  CHECK(j["arch"].is_null());
}
