#include "core/schedule.hpp"

#include "core/errors.hpp"

namespace nonrep {

mpz_class schedule_eval(int i, const mpz_class& m) {
  if (m < 1) fail(ErrorCode::InvalidArgument, "schedule argument must be at least 1");
  if (i < 1 || i > 8) fail(ErrorCode::InvalidArgument, "schedule index must be in 1..8");
  return ladder<mpz_class>(i, m);
}

std::uint64_t schedule_degree(int i) {
  if (i < 1 || i > 8) fail(ErrorCode::InvalidArgument, "schedule index must be in 1..8");
  return ladder<PolyDegree>(i, PolyDegree::variable()).value;
}

std::size_t decimal_digits(const mpz_class& x) {
  if (x <= 0) fail(ErrorCode::InvalidArgument, "decimal_digits needs a positive integer");
  // mpz_sizeinbase is exact or one too large.
  std::size_t d = mpz_sizeinbase(x.get_mpz_t(), 10);
  if (d > 1) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, d - 1);
    if (x < p) --d;
  }
  return d;
}

F8Report f8_digit_count() {
  const mpz_class value = schedule_eval(8, 1);
  F8Report r;
  r.digits = decimal_digits(value);
  // x < 10^k  <=>  x has at most k digits.
  r.below_abstract_bound = r.digits <= 40'000'000;
  return r;
}

void SizeSchedule::set_budget(const std::string& key, std::uint64_t value) {
  static const char* kKeys[] = {"cap", "carry", "straddle", "fresh", "red", "path", "resample", "attempts"};
  bool known = false;
  for (const char* k : kKeys) known = known || key == k;
  if (!known) fail(ErrorCode::InvalidArgument, "unknown budget key '" + key + "'");
  budgets_[key] = value;
}

std::optional<std::uint64_t> SizeSchedule::budget(const std::string& key) const {
  auto it = budgets_.find(key);
  if (it == budgets_.end()) return std::nullopt;
  return it->second;
}

std::uint64_t SizeSchedule::f(int i, std::uint64_t m) const {
  const mpz_class v = schedule_eval(i, mpz_class(static_cast<unsigned long>(m)));
  if (v > mpz_class(static_cast<unsigned long>(cap())))
    fail(ErrorCode::GuaranteedModeInfeasible,
         "f" + std::to_string(i) + "(" + std::to_string(m) + ") = " + v.get_str() +
             " exceeds the representability cap " + std::to_string(cap()));
  return v.get_ui();
}

std::uint64_t SizeSchedule::tier4(std::uint64_t t) const {
  if (is_guaranteed()) return f(4, t);
  return t + budget("straddle").value_or(1);
}

std::uint64_t SizeSchedule::tier5(std::uint64_t t) const {
  if (is_guaranteed()) return f(5, t);
  return tier4(t) + budget("fresh").value_or(1);
}

std::uint64_t SizeSchedule::red_target(std::uint64_t t) const {
  if (is_guaranteed()) return f(5, t);
  return t + budget("red").value_or(0);
}

std::uint64_t SizeSchedule::path_need(std::uint64_t k) const {
  if (is_guaranteed()) return f(3, k);
  return budget("path").value_or(k);
}

std::uint64_t SizeSchedule::carry(std::uint64_t m) const {
  if (is_guaranteed()) return f(7, m);
  return budget("carry").value_or(2 * m);
}

std::pair<int, mpz_class> first_infeasible_stage(std::uint64_t m, std::uint64_t cap) {
  const mpz_class c(static_cast<unsigned long>(cap));
  const mpz_class mm(static_cast<unsigned long>(m));
  // f8 dwarfs everything; check the cheaper stages first so the report names
  // the earliest one that cannot be materialised.
  for (int i = 1; i <= 7; ++i) {
    mpz_class v = schedule_eval(i, mm);
    if (v > c) return {i, v};
  }
  return {0, mpz_class(0)};
}

}  // namespace nonrep
