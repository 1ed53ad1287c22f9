#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <sstream>

#include "hyperlog/errors.hpp"
#include "hyperlog/scan.hpp"
#include "test_util.hpp"

using namespace hyperlog;

namespace {

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string line;
  while (std::getline(is, line))
    if (!line.empty()) out.push_back(line);
  return out;
}

// strip fields excluded from determinism guarantees
std::string canonical(const std::string& line) {
  ScanRecord r = ScanRecord::from_json(line);
  r.timing_us = 0;
  return r.to_json();
}

}  // namespace

TEST_CASE("fraction enumeration") {
  auto f2 = scan_fractions(2);
  REQUIRE(f2.size() == 1);
  CHECK(f2[0] == make_rational(1, 2));

  auto f4 = scan_fractions(4);
  CHECK(f4 == std::vector<Rational>{make_rational(1, 4), make_rational(1, 3),
                                    make_rational(1, 2), make_rational(2, 3),
                                    make_rational(3, 4)});
}

TEST_CASE("smallest scan: everything fails preconditions") {
  ScanConfig cfg;
  cfg.max_denominator = 2;
  std::ostringstream os;
  unsigned long n = run_scan(cfg, os);
  CHECK(n == 1);  // only (1/2,1/2,1/2) under dedup
  auto ls = lines_of(os.str());
  REQUIRE(ls.size() == 1);
  ScanRecord rec = ScanRecord::from_json(ls[0]);
  CHECK(rec.record.label == Label::FailsPreconditions);
  CHECK(rec.version == std::string("hyperlog 0.1.0"));
}

TEST_CASE("denominator 6 finds the paper row") {
  ScanConfig cfg;
  cfg.max_denominator = 6;
  std::ostringstream os;
  run_scan(cfg, os);
  bool found_log_functional = false;
  std::vector<std::array<Rational, 3>> order;
  for (const auto& line : lines_of(os.str())) {
    ScanRecord ordered = ScanRecord::from_json(line);
    order.push_back({ordered.record.params.q, ordered.record.params.a,
                     ordered.record.params.b});
    ScanRecord rec = ScanRecord::from_json(line);
    // spot check one triple against direct classification
    CHECK(rec.record == classify(rec.record.params));
    if (rec.record.params.q == make_rational(1, 2) &&
        rec.record.params.a == make_rational(1, 6) &&
        rec.record.params.b == make_rational(5, 6)) {
      CHECK(rec.record.label == Label::LogFunctional);
      found_log_functional = true;
    }
  }
  CHECK(found_log_functional);
  CHECK(std::is_sorted(order.begin(), order.end()));
}

TEST_CASE("scan determinism and parallel equivalence") {
  ScanConfig serial;
  serial.max_denominator = 5;
  std::ostringstream a, b;
  run_scan(serial, a);
  run_scan(serial, b);
  auto la = lines_of(a.str()), lb = lines_of(b.str());
  REQUIRE(la.size() == lb.size());
  for (size_t i = 0; i < la.size(); ++i)
    CHECK(canonical(la[i]) == canonical(lb[i]));

  ScanConfig parallel = serial;
  parallel.parallelism = 4;
  std::ostringstream c;
  run_scan(parallel, c);
  auto lc = lines_of(c.str());
  REQUIRE(lc.size() == la.size());
  for (size_t i = 0; i < la.size(); ++i)
    CHECK(canonical(la[i]) == canonical(lc[i]));
}

TEST_CASE("dedup halves the off-diagonal triples") {
  ScanConfig with;
  with.max_denominator = 4;
  std::ostringstream a;
  unsigned long na = run_scan(with, a);

  ScanConfig without = with;
  without.dedup = false;
  std::ostringstream b;
  unsigned long nb = run_scan(without, b);

  // n * k(k+1)/2 vs n * k^2 triples for k fractions
  size_t k = scan_fractions(4).size();
  CHECK(na == k * (k * (k + 1) / 2));
  CHECK(nb == k * k * k);
}

TEST_CASE("scan record json round trip") {
  ScanConfig cfg;
  cfg.max_denominator = 3;
  std::ostringstream os;
  run_scan(cfg, os);
  for (const auto& line : lines_of(os.str())) {
    ScanRecord rec = ScanRecord::from_json(line);
    CHECK(ScanRecord::from_json(rec.to_json()) == rec);
  }
}

TEST_CASE("config validation") {
  ScanConfig bad;
  bad.max_denominator = 1;
  std::ostringstream os;
  CHECK_THROWS_AS(run_scan(bad, os), domain_error);
}
