#include "abckit/belyi.hpp"
#include "abckit/corpus.hpp"
#include "abckit/documents.hpp"
#include "abckit/ellenberg.hpp"
#include "abckit/errors.hpp"
#include "abckit/restricted.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace abckit;

namespace {

enum Exit { kOk = 0, kUsage = 1, kUndecided = 2, kComputation = 3 };

// Inline JSON, or the path of a file holding it.
Json load_json(const std::string& arg) {
  std::error_code ec;
  if (!arg.empty() && arg[0] != '{' && arg[0] != '[' && std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      return Json::parse(buf.str());
    } catch (const Json::exception& e) {
      throw InvalidInput(arg + ": " + e.what());
    }
  }
  try {
    return Json::parse(arg);
  } catch (const Json::exception& e) {
    throw InvalidInput("not a JSON document or file: " + arg);
  }
}

FieldElement element_arg(const FieldPtr& K, const std::string& s) {
  if (!s.empty() && s[0] == '[') return element_from_json(K, load_json(s));
  return FieldElement::rational(K, parse_decimal(s));
}

std::vector<ProjAlgebraic> points_arg(const std::string& joined) {
  std::vector<ProjAlgebraic> out;
  std::stringstream lines(joined);
  for (std::string a; std::getline(lines, a);) {
    std::error_code ec;
    if (!a.empty() && (a[0] == '[' || a[0] == '{' || std::filesystem::is_regular_file(a, ec))) {
      for (auto& x : point_list_from_json(load_json(a))) out.push_back(std::move(x));
      continue;
    }
    std::stringstream ss(a);
    for (std::string tok; std::getline(ss, tok, ',');) {
      if (tok.empty()) continue;
      out.push_back(proj_algebraic_from_json(Json(tok)));
    }
  }
  return out;
}

struct PointArgs {
  std::string a, b, c, field;
};

AbcPoint point_from(const PointArgs& p) {
  FieldPtr K = p.field.empty() ? NumberField::rationals() : field_from_json(load_json(p.field));
  if (p.a.empty() || p.b.empty()) throw InvalidInput("--a and --b are required");
  FieldElement a = element_arg(K, p.a), b = element_arg(K, p.b);
  FieldElement c = p.c.empty() ? a + b : element_arg(K, p.c);
  return AbcPoint::make(a, b, c);
}

void add_point_options(CLI::App* sub, PointArgs& p) {
  sub->add_option("--a", p.a, "first coordinate (rational, or JSON coordinate list with --field)");
  sub->add_option("--b", p.b, "second coordinate");
  sub->add_option("--c", p.c, "third coordinate; defaults to a + b and is checked when given");
  sub->add_option("--field", p.field, "field document {\"min_poly\": [...]} or a file holding it");
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"abc conjecture toolkit: heights, radicals, transforms and Belyi maps"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  app.add_option("--precision", cfg.precision_bits, "working precision in bits")->envname("ABCKIT_PRECISION");
  app.add_option("--max-precision", cfg.max_precision_bits, "precision escalation limit in bits")
      ->envname("ABCKIT_MAX_PRECISION");
  app.add_option("--seed", cfg.seed, "accepted for reproducible runs; every operation is currently deterministic")->envname("ABCKIT_SEED");
  app.add_option("--max-degree", cfg.degree_cap, "degree cap for Belyi constructions")->envname("ABCKIT_MAX_DEGREE");
  app.add_flag("--radical-exception", cfg.radical_exception, "radical 0 at the sixth-roots-of-unity point")
      ->envname("ABCKIT_RADICAL_EXCEPTION");
  app.add_flag("--spherical-height", cfg.spherical_height, "spherical archimedean height")
      ->envname("ABCKIT_SPHERICAL_HEIGHT");

  PointArgs analyze_pt;
  auto* analyze = app.add_subcommand("analyze", "height, radical and conjecture residuals of one point");
  add_point_options(analyze, analyze_pt);

  std::string corpus, csv;
  unsigned threads = 0;
  auto* scan_cmd = app.add_subcommand("scan", "evaluate every triple of a corpus");
  scan_cmd->add_option("corpus", corpus, "text corpus or JSON lines field corpus")->required();
  scan_cmd->add_option("--csv", csv, "write the report as CSV ('-' for stdout)")->envname("ABCKIT_CSV");
  scan_cmd->add_option("--threads", threads, "worker threads (0 = all cores)");

  std::string t_a, t_field, t_divisor;
  auto* transform_cmd = app.add_subcommand("transform", "power a^n close to the tripod at a divisor");
  transform_cmd->add_option("--a", t_a, "the element a")->required();
  transform_cmd->add_option("--field", t_field, "field document or file");
  transform_cmd->add_option("--divisor", t_divisor, "divisor document or file")->required();

  std::string E_args, R_args;
  auto* belyi_cmd = app.add_subcommand("belyi", "Belyi map sending E into {0,1,inf} and R outside it");
  // plain strings joined on repeats, so JSON lists reach us unsplit
  belyi_cmd->add_option("--E", E_args, "points: rationals, 'inf', comma lists or a JSON list")
      ->multi_option_policy(CLI::MultiOptionPolicy::Join)
      ->delimiter('\n');
  belyi_cmd->add_option("--R", R_args, "points to keep off the tripod")
      ->multi_option_policy(CLI::MultiOptionPolicy::Join)
      ->delimiter('\n');

  PointArgs restricted_pt;
  std::string neighborhood;
  auto* restricted_cmd = app.add_subcommand("check-restricted", "test a point against tripod neighborhoods");
  add_point_options(restricted_cmd, restricted_pt);
  restricted_cmd->add_option("--neighborhood", neighborhood, "neighborhood document or file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    cfg.validate();
    HeightOptions opts = cfg.height_options();

    if (*analyze) {
      AbcPoint P = point_from(analyze_pt);
      auto rep = evaluate(P, opts);
      emit(report_to_json(P, rep));
      if (rep.challenge()) std::cerr << "CHALLENGE: certified violation of sqrt(h) <= 2 + sqrt(ld + r + 4)\n";
      return rep.undecided() ? kUndecided : kOk;
    }

    if (*scan_cmd) {
      IngestResult in = ingest(corpus);
      auto rows = scan(in.records, cfg, threads);
      auto summary = summarize(rows);
      std::ostream* report = &std::cout;
      if (csv == "-") {
        write_csv(std::cout, rows);
        report = &std::cerr;
      } else if (!csv.empty()) {
        std::ofstream out(csv);
        if (!out) throw InvalidInput("cannot write " + csv);
        write_csv(out, rows);
      }
      write_summary(*report, summary, in);
      if (summary.errors) return kComputation;
      return summary.undecided ? kUndecided : kOk;
    }

    if (*transform_cmd) {
      FieldPtr K = t_field.empty() ? NumberField::rationals() : field_from_json(load_json(t_field));
      FieldElement a = element_arg(K, t_a);
      ArithmeticDivisor D = divisor_from_json(K, load_json(t_divisor));
      emit(transform_to_json(transform(a, D, opts)));
      return kOk;
    }

    if (*belyi_cmd) {
      auto E = points_arg(E_args);
      auto R = points_arg(R_args);
      emit(belyi_to_json(build_belyi(E, R, cfg.belyi_options())));
      return kOk;
    }

    if (*restricted_cmd) {
      AbcPoint P = point_from(restricted_pt);
      TripodNeighborhood G = neighborhood_from_json(load_json(neighborhood));
      auto rep = restricted_hypothesis(P, G, opts);
      emit(restricted_to_json(rep));
      return rep.qualifies == Decision::Undecided ? kUndecided : kOk;
    }
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const PrecisionExhausted& e) {
    std::cerr << "undecided: " << e.what() << "\n";
    return kUndecided;
  } catch (const UndecidableComparison& e) {
    std::cerr << "undecided: " << e.what() << "\n";
    return kUndecided;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kComputation;
  }
  return kUsage;
}
