#include "hyperlog/scan.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <ostream>
#include <thread>

#include <json.hpp>

#include "hyperlog/errors.hpp"
#include "hyperlog/version.hpp"

namespace hyperlog {

void ScanConfig::validate() const {
  if (max_denominator < 2)
    throw domain_error("scan: max_denominator must be >= 2");
  if (parallelism < 1)
    throw domain_error("scan: parallelism must be >= 1");
}

std::string ScanRecord::to_json() const {
  nlohmann::ordered_json j = nlohmann::ordered_json::parse(record.to_json());
  j["timing_us"] = timing_us;
  j["version"] = version;
  return j.dump();
}

ScanRecord ScanRecord::from_json(const std::string& line) {
  ScanRecord r;
  r.record = ClassificationRecord::from_json(line);
  try {
    auto j = nlohmann::json::parse(line);
    r.timing_us = j.at("timing_us").get<long>();
    r.version = j.at("version").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("scan record JSON: ") + e.what());
  }
  return r;
}

std::vector<Rational> scan_fractions(unsigned max_den) {
  std::vector<Rational> out;
  for (unsigned den = 2; den <= max_den; ++den)
    for (unsigned num = 1; num < den; ++num) {
      Rational q = make_rational(static_cast<long>(num),
                                 static_cast<long>(den));
      if (q.get_den() == den) out.push_back(q);  // reduced only
    }
  std::sort(out.begin(), out.end());
  return out;
}

unsigned long run_scan_to_path(const ScanConfig& cfg) {
  if (cfg.output_path == "-") {
    unsigned long n = run_scan(cfg, std::cout);
    if (!std::cout) throw std::ios_base::failure("write to stdout failed");
    return n;
  }
  std::ofstream os(cfg.output_path);
  if (!os) throw std::ios_base::failure("cannot open " + cfg.output_path);
  unsigned long n = run_scan(cfg, os);
  os.flush();
  if (!os)
    throw std::ios_base::failure("write to " + cfg.output_path + " failed");
  return n;
}

unsigned long run_scan(const ScanConfig& cfg, std::ostream& out) {
  cfg.validate();
  const std::vector<Rational> fracs = scan_fractions(cfg.max_denominator);

  std::vector<HGParams> triples;
  for (const Rational& q : fracs)
    for (size_t ia = 0; ia < fracs.size(); ++ia)
      for (size_t ib = cfg.dedup ? ia : 0; ib < fracs.size(); ++ib)
        triples.push_back(HGParams{q, fracs[ia], fracs[ib]});

  std::vector<std::string> lines(triples.size());
  auto worker_body = [&](std::atomic<size_t>& next) {
    for (size_t i = next.fetch_add(1); i < triples.size();
         i = next.fetch_add(1)) {
      auto t0 = std::chrono::steady_clock::now();
      ScanRecord rec;
      rec.record = classify(triples[i]);
      rec.timing_us = std::chrono::duration_cast<std::chrono::microseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
      rec.version = kVersion;
      lines[i] = rec.to_json();
    }
  };

  std::atomic<size_t> next{0};
  if (cfg.parallelism <= 1) {
    worker_body(next);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(cfg.parallelism);
    for (unsigned w = 0; w < cfg.parallelism; ++w)
      pool.emplace_back([&] { worker_body(next); });
    for (auto& th : pool) th.join();
  }

  for (const std::string& line : lines) out << line << '\n';
  return lines.size();
}

}  // namespace hyperlog
