#ifndef LGCALC_PHASE_HPP
#define LGCALC_PHASE_HPP

#include <string>
#include <vector>

#include "lgcalc/rational.hpp"

namespace lgcalc {

// An element of Q/Z, stored as its reduced representative in [0, 1).
class Phase {
 public:
  Phase() : value_(0) {}
  explicit Phase(const Rational& r) : value_(r - Rational(r.floor())) {}

  const Rational& value() const { return value_; }
  bool is_zero() const { return value_.is_zero(); }
  Int denominator() const { return value_.denominator(); }

  Phase inverse() const { return Phase(-value_); }
  friend Phase operator+(const Phase& a, const Phase& b) { return Phase(a.value_ + b.value_); }
  friend bool operator==(const Phase& a, const Phase& b) { return a.value_ == b.value_; }
  friend bool operator!=(const Phase& a, const Phase& b) { return a.value_ != b.value_; }
  friend bool operator<(const Phase& a, const Phase& b) { return a.value_ < b.value_; }

  std::string str() const { return value_.str(); }

 private:
  Rational value_;
};

using PhaseVec = std::vector<Phase>;

inline PhaseVec phase_vec(const std::vector<Rational>& rs) {
  PhaseVec v;
  v.reserve(rs.size());
  for (const auto& r : rs) v.emplace_back(r);
  return v;
}

inline PhaseVec zero_phases(std::size_t n) { return PhaseVec(n); }

inline PhaseVec add(const PhaseVec& a, const PhaseVec& b) {
  PhaseVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline PhaseVec inverse(const PhaseVec& a) {
  PhaseVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i].inverse();
  return r;
}

inline bool is_zero(const PhaseVec& a) {
  for (const auto& p : a)
    if (!p.is_zero()) return false;
  return true;
}

// Least r >= 1 with r*theta integral: the lcm of the reduced denominators.
inline Int element_order(const PhaseVec& theta) {
  Int r = 1;
  for (const auto& p : theta) r = lcm(r, p.denominator());
  return r;
}

inline bool lex_less(const PhaseVec& a, const PhaseVec& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return a.size() < b.size();
}

inline std::string str(const PhaseVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + ")";
}

}  // namespace lgcalc

#endif
