#pragma once

#include "abckit/belyi.hpp"
#include "abckit/conjectures.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace abckit {

struct Config {
  int precision_bits = 128;
  int max_precision_bits = 1024;
  long degree_cap = 1'000'000;
  std::uint64_t seed = 0;
  bool radical_exception = false;
  bool spherical_height = false;

  /// Throws InvalidInput unless 0 < precision_bits <= max_precision_bits and
  /// degree_cap >= 1.
  void validate() const;
  HeightOptions height_options() const;
  BelyiOptions belyi_options() const;
};

struct TripleRecord {
  AbcPoint point;
  std::size_t line = 0;
  /// "Q" for the rational corpus, the defining polynomial otherwise.
  std::string field;
  /// Trailing tokens of a text line, or the "tags" member of a JSON line.
  std::vector<std::string> tags;
};

struct Rejection {
  std::size_t line = 0;
  std::string text;
  std::string reason;
};

struct IngestResult {
  std::vector<TripleRecord> records;
  std::vector<Rejection> rejected;
  /// Blank and comment lines.
  std::size_t ignored = 0;
};

/// One triple "a b c [tags...]" per line, positive coprime integers with
/// a + b = c; '#' starts a comment.
IngestResult ingest_triples(std::istream& in);
/// JSON lines {"field": {...}, "a": [...], "b": [...], "c": [...]}; c is
/// optional and checked against a + b when present.
IngestResult ingest_field_corpus(std::istream& in);
/// Chooses the format from the first significant character ('{' means JSON
/// lines). Throws InvalidInput when the file cannot be opened.
IngestResult ingest(const std::string& path);

struct ScanRow {
  const TripleRecord* record = nullptr;
  std::optional<ConjectureReport> report;
  std::string error;
};

/// Evaluates every record, in parallel when threads != 1 (0 picks the
/// hardware concurrency). Rows come back in input order.
std::vector<ScanRow> scan(const std::vector<TripleRecord>& records, const Config& cfg, unsigned threads = 0);

void write_csv_header(std::ostream& out);
void write_csv(std::ostream& out, const std::vector<ScanRow>& rows);

struct ScanSummary {
  std::size_t rows = 0;
  std::size_t undecided = 0;
  std::size_t errors = 0;
  std::size_t good_abc = 0;
  std::vector<std::size_t> challenges;  // lines with a certified violation
  std::optional<std::size_t> max_quality_line;
  std::string max_quality;
  std::optional<std::size_t> min_margin_line;
  std::string min_margin;
};

ScanSummary summarize(const std::vector<ScanRow>& rows);
void write_summary(std::ostream& out, const ScanSummary& s, const IngestResult& ingested);

}  // namespace abckit
