#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "orientdom/dom.hpp"
#include "orientdom/harness/props.hpp"

namespace orientdom::harness {

enum class CaseStatus { pass, fail, skipped };

const char* to_string(CaseStatus status);

// Expected value as a closed interval; a single count has lower == upper.
struct Expected {
  std::size_t lower = 0;
  std::size_t upper = 0;

  static Expected exactly(std::size_t v) { return {v, v}; }
  static Expected between(std::size_t lo, std::size_t hi) { return {lo, hi}; }
  bool contains(std::size_t v) const { return lower <= v && v <= upper; }
  std::string text() const;
};

struct VerifyCase {
  std::string suite;
  std::string description;  // always carries the result's anchor phrase
  Expected expected;
  std::optional<std::size_t> computed;  // absent when skipped
  CaseStatus status = CaseStatus::skipped;
};

struct VerifyOptions {
  DomOptions dom;
  std::uint64_t seed = kDefaultSeed;
};

const std::vector<std::string>& verify_suites();

// Runs one suite, or every suite for "all". Cases come back in a fixed order.
// Throws Error(Errc::invalid_argument) for an unknown suite name.
std::vector<VerifyCase> run_verify(std::string_view suite, const VerifyOptions& options = {});

// Plain-text table, or one tab-separated line per case when porcelain.
void print_report(std::ostream& out, const std::vector<VerifyCase>& cases, bool porcelain);

// 0 when every case passed or was skipped, 1 otherwise.
int exit_code(const std::vector<VerifyCase>& cases);

}  // namespace orientdom::harness
