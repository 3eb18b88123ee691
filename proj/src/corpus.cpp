#include "abckit/corpus.hpp"

#include "abckit/documents.hpp"
#include "abckit/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

namespace abckit {

void Config::validate() const {
  if (precision_bits < 16) throw InvalidInput("precision must be at least 16 bits");
  if (precision_bits > max_precision_bits) throw InvalidInput("precision exceeds max-precision");
  if (degree_cap < 1) throw InvalidInput("max-degree must be positive");
}

HeightOptions Config::height_options() const {
  HeightOptions o;
  o.precision = precision_bits;
  o.max_precision = max_precision_bits;
  o.spherical = spherical_height;
  o.radical_exception = radical_exception;
  return o;
}

BelyiOptions Config::belyi_options() const {
  BelyiOptions o;
  o.max_degree = degree_cap;
  return o;
}

namespace {

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string coordinate_text(const FieldElement& x) {
  if (x.is_rational()) return to_string(x.rational_value());
  return x.to_string();
}

}  // namespace

IngestResult ingest_triples(std::istream& in) {
  IngestResult res;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string body = raw.substr(0, raw.find('#'));
    std::istringstream tok(body);
    std::vector<std::string> words;
    for (std::string w; tok >> w;) words.push_back(w);
    if (words.empty()) {
      ++res.ignored;
      continue;
    }
    auto reject = [&](std::string why) { res.rejected.push_back({lineno, trim(raw), std::move(why)}); };
    if (words.size() < 3) {
      reject("expected three integers");
      continue;
    }
    bool bad = false;
    for (int i = 0; i < 3 && !bad; ++i) {
      if (!all_digits(words[i])) {
        reject("not a positive integer: " + words[i]);
        bad = true;
      }
    }
    if (bad) continue;
    Integer a(words[0]), b(words[1]), c(words[2]);
    if (a == 0 || b == 0 || c == 0) {
      reject("entries must be positive");
      continue;
    }
    if (a + b != c) {
      reject("a + b != c");
      continue;
    }
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (g != 1) {
      reject("not coprime (gcd " + to_string(g) + ")");
      continue;
    }
    TripleRecord r{AbcPoint::rational(a, b, c), lineno, "Q", {}};
    r.tags.assign(words.begin() + 3, words.end());
    res.records.push_back(std::move(r));
  }
  return res;
}

IngestResult ingest_field_corpus(std::istream& in) {
  IngestResult res;
  std::map<std::string, FieldPtr> fields;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') {
      ++res.ignored;
      continue;
    }
    try {
      Json j = Json::parse(line);
      if (!j.is_object() || !j.contains("a") || !j.contains("b")) throw InvalidInput("entry needs \"a\" and \"b\"");
      Json fdoc = j.contains("field") ? j.at("field") : Json(nullptr);
      std::string key = fdoc.dump();
      auto it = fields.find(key);
      if (it == fields.end()) it = fields.emplace(key, field_from_json(fdoc)).first;
      const FieldPtr& K = it->second;
      FieldElement a = element_from_json(K, j.at("a"));
      FieldElement b = element_from_json(K, j.at("b"));
      FieldElement c = a + b;
      if (j.contains("c") && element_from_json(K, j.at("c")) != c) throw InvalidInput("a + b != c");
      AbcPoint P = AbcPoint::make(a, b, c);
      if (P.on_tripod()) throw InvalidInput("point lies on the tripod");
      TripleRecord r{P, lineno, K->degree() == 1 ? "Q" : K->min_poly().to_string(), {}};
      if (j.contains("tags"))
        for (const auto& t : j.at("tags")) r.tags.push_back(t.is_string() ? t.get<std::string>() : t.dump());
      res.records.push_back(std::move(r));
    } catch (const Json::exception& e) {
      res.rejected.push_back({lineno, line, std::string("malformed JSON: ") + e.what()});
    } catch (const Error& e) {
      res.rejected.push_back({lineno, line, e.what()});
    }
  }
  return res;
}

IngestResult ingest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  std::string all((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  bool json = false;
  std::istringstream probe(all);
  for (std::string line; std::getline(probe, line);) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    json = t[0] == '{';
    break;
  }
  std::istringstream body(all);
  return json ? ingest_field_corpus(body) : ingest_triples(body);
}

std::vector<ScanRow> scan(const std::vector<TripleRecord>& records, const Config& cfg, unsigned threads) {
  cfg.validate();
  std::vector<ScanRow> rows(records.size());
  HeightOptions opts = cfg.height_options();
  auto work = [&](std::size_t i) {
    rows[i].record = &records[i];
    try {
      rows[i].report = evaluate(records[i].point, opts);
    } catch (const std::exception& e) {
      rows[i].error = e.what();
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  // MPFR without thread-local caches is not safe to share.
  if (!mpfr_buildopt_tls_p()) threads = 1;
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, records.size()));
  if (threads <= 1) {
    for (std::size_t i = 0; i < records.size(); ++i) work(i);
    return rows;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < records.size();) work(i);
    });
  for (auto& th : pool) th.join();
  return rows;
}

void write_csv_header(std::ostream& out) {
  out << "line,a,b,c,field,h,h_radius,r,r_radius,ld,ld_radius,quality,quality_radius,"
         "falsifiable_margin,falsifiable_margin_radius,good_abc,effective,falsifiable,precision,error\n";
}

void write_csv(std::ostream& out, const std::vector<ScanRow>& rows) {
  write_csv_header(out);
  for (const auto& row : rows) {
    const AbcPoint& P = row.record->point;
    out << row.record->line << ',' << csv_field(coordinate_text(P.a)) << ',' << csv_field(coordinate_text(P.b)) << ','
        << csv_field(coordinate_text(P.c)) << ',' << csv_field(row.record->field);
    if (row.report) {
      const auto& r = *row.report;
      for (const RealBall* x : {&r.h, &r.r, &r.ld, &r.quality, &r.falsifiable_margin})
        out << ',' << format_mid(*x) << ',' << format_rad(*x);
      out << ',' << to_string(r.good_abc) << ',' << to_string(r.effective) << ',' << to_string(r.falsifiable) << ','
          << r.precision << ",";
    } else {
      out << ",,,,,,,,,,,,,,," << csv_field(row.error);
    }
    out << '\n';
  }
}

ScanSummary summarize(const std::vector<ScanRow>& rows) {
  ScanSummary s;
  s.rows = rows.size();
  double best_q = 0, worst_m = 0;
  for (const auto& row : rows) {
    if (!row.report) {
      ++s.errors;
      continue;
    }
    const auto& r = *row.report;
    if (r.undecided()) ++s.undecided;
    if (r.good_abc == Decision::Holds) ++s.good_abc;
    if (r.challenge()) s.challenges.push_back(row.record->line);
    if (!s.max_quality_line || r.quality.mid() > best_q) {
      best_q = r.quality.mid();
      s.max_quality_line = row.record->line;
      s.max_quality = format_mid(r.quality, 12) + "±" + format_rad(r.quality);
    }
    if (!s.min_margin_line || r.falsifiable_margin.mid() < worst_m) {
      worst_m = r.falsifiable_margin.mid();
      s.min_margin_line = row.record->line;
      s.min_margin = format_mid(r.falsifiable_margin, 12) + "±" + format_rad(r.falsifiable_margin);
    }
  }
  return s;
}

void write_summary(std::ostream& out, const ScanSummary& s, const IngestResult& ingested) {
  out << "accepted: " << ingested.records.size() << "\n";
  out << "rejected: " << ingested.rejected.size() << "\n";
  for (const auto& r : ingested.rejected) out << "  line " << r.line << ": " << r.reason << "\n";
  out << "evaluated: " << s.rows - s.errors << "\n";
  out << "errors: " << s.errors << "\n";
  out << "undecided: " << s.undecided << "\n";
  if (s.max_quality_line) out << "max quality: " << s.max_quality << " (line " << *s.max_quality_line << ")\n";
  if (s.min_margin_line)
    out << "min falsifiable margin: " << s.min_margin << " (line " << *s.min_margin_line << ")\n";
  out << "good abc hits: " << s.good_abc << "\n";
  out << "certified violations: " << s.challenges.size() << "\n";
  for (auto line : s.challenges) out << "  CHALLENGE line " << line << ": sqrt(h) > 2 + sqrt(ld + r + 4)\n";
}

}  // namespace abckit
