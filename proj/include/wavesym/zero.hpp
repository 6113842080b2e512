#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>

#include "wavesym/eval.hpp"
#include "wavesym/expr.hpp"

namespace wavesym {

struct Interval {
  Rational lo;
  Rational hi;
};

// Local domain: symbol signs (for abs/sign/ln bookkeeping) and optional
// sampling ranges. Unlisted symbols are positive and sampled from (0,10).
struct Chart {
  std::map<std::string, int> signs;
  std::map<std::string, Interval> ranges;

  int sign_of(const std::string& s) const;
  Interval interval_for(const std::string& s) const;
  Chart& positive(const std::string& s);
  Chart& negative(const std::string& s);
  Chart& range(const std::string& s, Rational lo, Rational hi);
};

// Random rational point of the chart covering the given symbols.
Point sample_point(const std::set<std::string>& symbols, const Chart& chart, std::mt19937_64& rng);

// Resolves abs/sign by the chart, collapses nested powers of positive bases,
// and renames negative-chart symbols to positive ones (s -> -s__neg).
Expr apply_chart(const Expr& e, const Chart& chart, std::uint64_t seed = 7);

enum class Verdict { ProvenZero, LikelyZero, NonZero };

struct ZeroOptions {
  int samples = 64;
  std::uint64_t seed = 0x5eedULL;
  int digits = default_digits();
  int tolerance_exp = -30;  // float tolerance 10^tolerance_exp
  bool symbolic = true;     // run the canonical tiers before sampling
};

struct ZeroResult {
  Verdict verdict = Verdict::ProvenZero;
  int samples = 0;
  bool exact_samples = true;  // every sample evaluated to an exact rational
  Point witness;
  std::string witness_value;

  bool zero() const { return verdict != Verdict::NonZero; }
  bool proven() const { return verdict == Verdict::ProvenZero; }
  // ProvenZero, or LikelyZero established with exact rational arithmetic only.
  bool exact() const { return verdict == Verdict::ProvenZero || (verdict == Verdict::LikelyZero && exact_samples); }
  std::string str() const;
};

ZeroResult is_zero(const Expr& e, const Chart& chart = {}, const ZeroOptions& opt = {});

}  // namespace wavesym
