#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace nonrep {

/// The list-size ladder f1..f8, written once over any number-like type so the
/// same definition serves exact evaluation and degree bookkeeping.
///   f1 = 5m, f2 = f1(f1(f1(m))), f3 = 32m^3 + 1, f4 = f3 + m,
///   f5 = f3(f4(m)) + m + f4(m), f6 = f5(f5(m)), f7 = f6 + 10m,
///   f8 = f2(f7(f7(f7(f7(m))))).
template <class N>
N ladder(int i, const N& m) {
  switch (i) {
    case 1: return N(5) * m;
    case 2: return ladder(1, ladder(1, ladder(1, m)));
    case 3: return N(32) * m * m * m + N(1);
    case 4: return ladder(3, m) + m;
    case 5: {
      const N a = ladder(4, m);
      return ladder(3, a) + m + a;
    }
    case 6: return ladder(5, ladder(5, m));
    case 7: return ladder(6, m) + N(10) * m;
    case 8: {
      N x = m;
      for (int k = 0; k < 4; ++k) x = ladder(7, x);
      return ladder(2, x);
    }
    default: throw std::out_of_range("ladder index must be in 1..8");
  }
}

/// Polynomial degree under composition: product adds, sum takes the max.
struct PolyDegree {
  std::uint64_t value = 0;
  PolyDegree() = default;
  explicit PolyDegree(int) {}  // nonzero constants have degree 0
  static PolyDegree variable() { PolyDegree d; d.value = 1; return d; }
  friend PolyDegree operator+(PolyDegree a, PolyDegree b) { a.value = std::max(a.value, b.value); return a; }
  friend PolyDegree operator*(PolyDegree a, PolyDegree b) { a.value += b.value; return a; }
};

mpz_class schedule_eval(int i, const mpz_class& m);
std::uint64_t schedule_degree(int i);

/// Exact number of decimal digits of a positive integer.
std::size_t decimal_digits(const mpz_class& x);

struct F8Report {
  std::size_t digits = 0;
  bool below_abstract_bound = false;  // f8(1) < 10^(4*10^7)
};
F8Report f8_digit_count();

enum class ScheduleMode { Guaranteed, Empirical };

/// Guaranteed mode uses the exact ladder; empirical mode uses small
/// user-overridable budgets with the same roles, and correctness is then
/// established by the verifier.
class SizeSchedule {
 public:
  explicit SizeSchedule(ScheduleMode mode = ScheduleMode::Empirical) : mode_(mode) {}

  static SizeSchedule guaranteed() { return SizeSchedule(ScheduleMode::Guaranteed); }
  static SizeSchedule empirical() { return SizeSchedule(ScheduleMode::Empirical); }

  ScheduleMode mode() const { return mode_; }
  bool is_guaranteed() const { return mode_ == ScheduleMode::Guaranteed; }

  /// Budget keys: cap, carry, straddle, fresh, red, path, resample, attempts.
  void set_budget(const std::string& key, std::uint64_t value);
  std::optional<std::uint64_t> budget(const std::string& key) const;
  const std::map<std::string, std::uint64_t>& budgets() const { return budgets_; }

  /// Largest list size guaranteed mode is willing to materialise.
  std::uint64_t cap() const { return budget("cap").value_or(10'000'000); }

  /// f_i(m) when it fits under the cap; otherwise GuaranteedModeInfeasible.
  std::uint64_t f(int i, std::uint64_t m) const;

  /// Tier sizes used by the walk filter for target t: (t, tier4, tier5) play
  /// the roles of (t, f4(t), f5(t)).
  std::uint64_t tier4(std::uint64_t t) const;
  std::uint64_t tier5(std::uint64_t t) const;
  /// Pass target of the red walk blocks for final size t: f5(t) in guaranteed
  /// mode, t + red budget (default 0) in empirical mode.
  std::uint64_t red_target(std::uint64_t t) const;
  /// Path filter list requirement for k-subsets (f3(k) in guaranteed mode).
  std::uint64_t path_need(std::uint64_t k) const;
  /// Size kept by a face round for vertices that another face filters later.
  std::uint64_t carry(std::uint64_t m) const;
  /// Upper bound on redraws per path vertex.
  std::uint64_t resample_factor() const { return budget("resample").value_or(1'000'000); }
  /// Reseeded reruns of the face rounds after a budget failure (empirical only).
  std::uint64_t attempts() const { return is_guaranteed() ? 1 : std::max<std::uint64_t>(1, budget("attempts").value_or(8)); }

 private:
  ScheduleMode mode_;
  std::map<std::string, std::uint64_t> budgets_;
};

/// First ladder index whose value at m exceeds `cap` (0 if none), with its exact value.
std::pair<int, mpz_class> first_infeasible_stage(std::uint64_t m, std::uint64_t cap);

}  // namespace nonrep
