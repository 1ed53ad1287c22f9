#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hyperlog/criteria.hpp"

namespace hyperlog {

// Parameter-space sweep over all (q,a,b) with reduced denominators up to
// max_denominator and fractional representatives in (0,1).  The criteria
// are invariant under integer translation and the a<->b swap; dedup
// enumerates only a <= b.
struct ScanConfig {
  unsigned max_denominator = 2;  // >= 2
  std::string output_path = "-";  // "-" means stdout
  bool dedup = true;
  unsigned parallelism = 1;

  void validate() const;
};

struct ScanRecord {
  ClassificationRecord record;
  long timing_us = 0;
  std::string version;

  std::string to_json() const;
  static ScanRecord from_json(const std::string& line);

  friend bool operator==(const ScanRecord&, const ScanRecord&) = default;
};

// All reduced fractions in (0,1) with denominator <= max_den, ascending.
std::vector<Rational> scan_fractions(unsigned max_den);

// Classifies every triple in canonical (q,a,b) lexicographic order and
// writes one ScanRecord JSON object per line.  Returns the line count.
// Output order is deterministic regardless of parallelism.
unsigned long run_scan(const ScanConfig& cfg, std::ostream& out);

// As run_scan, writing to cfg.output_path ("-" for stdout); io failures
// surface as std::ios_base::failure.
unsigned long run_scan_to_path(const ScanConfig& cfg);

}  // namespace hyperlog
