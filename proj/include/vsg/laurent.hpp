#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vsg {

// Laurent polynomial in one variable A with int64 coefficients.
// Zero coefficients are never stored.
class Laurent {
public:
  Laurent() = default;

  static Laurent zero() { return Laurent(); }
  static Laurent one() { return monomial(0, 1); }
  static Laurent monomial(int exp, std::int64_t coeff) {
    Laurent p;
    if (coeff != 0) p.c_[exp] = coeff;
    return p;
  }
  // A + 1 + A^-1
  static Laurent sigma() {
    Laurent p;
    p.c_[-1] = 1;
    p.c_[0] = 1;
    p.c_[1] = 1;
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  std::int64_t coeff(int exp) const {
    auto it = c_.find(exp);
    return it == c_.end() ? 0 : it->second;
  }
  // Precondition: nonzero.
  int min_exp() const { return c_.begin()->first; }
  int max_exp() const { return c_.rbegin()->first; }

  const std::map<int, std::int64_t>& terms() const { return c_; }

  Laurent operator+(const Laurent& o) const {
    Laurent r = *this;
    for (auto& [e, c] : o.c_) r.add_term(e, c);
    return r;
  }
  Laurent operator-(const Laurent& o) const {
    Laurent r = *this;
    for (auto& [e, c] : o.c_) r.add_term(e, -c);
    return r;
  }
  Laurent operator-() const {
    Laurent r;
    for (auto& [e, c] : c_) r.c_[e] = -c;
    return r;
  }
  Laurent operator*(const Laurent& o) const {
    Laurent r;
    for (auto& [e1, c1] : c_)
      for (auto& [e2, c2] : o.c_) r.add_term(e1 + e2, c1 * c2);
    return r;
  }
  Laurent operator*(std::int64_t k) const {
    Laurent r;
    if (k == 0) return r;
    for (auto& [e, c] : c_) r.c_[e] = c * k;
    return r;
  }
  Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  bool operator==(const Laurent&) const = default;

  // Integer power, n >= 0.
  Laurent pow(int n) const {
    Laurent r = one();
    for (int i = 0; i < n; ++i) r = r * *this;
    return r;
  }

  // Divides by its lowest term's sign and power of A: result has min_exp 0 and
  // positive lowest coefficient. Used to compare values up to units +-A^k.
  Laurent unit_normalized() const {
    if (is_zero()) return *this;
    int shift = min_exp();
    std::int64_t low = c_.begin()->second;
    Laurent r;
    for (auto& [e, c] : c_) r.c_[e - shift] = low < 0 ? -c : c;
    return r;
  }

  // True when *this == +-A^k * o for some k.
  bool equals_up_to_unit(const Laurent& o) const {
    return unit_normalized() == o.unit_normalized();
  }

  // Ascending exponents, e.g. "-A^-2 + 1 + 3A^2". Zero prints "0".
  std::string str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (auto& [e, c] : c_) {
      if (!s.empty()) s += c > 0 ? " + " : " - ";
      else if (c < 0) s += "-";
      std::int64_t a = c < 0 ? -c : c;
      if (a != 1 || e == 0) s += std::to_string(a);
      if (e != 0) {
        s += "A";
        if (e != 1) s += "^" + std::to_string(e);
      }
    }
    return s;
  }

private:
  void add_term(int exp, std::int64_t coeff) {
    auto it = c_.find(exp);
    if (it == c_.end()) {
      if (coeff != 0) c_[exp] = coeff;
    } else {
      it->second += coeff;
      if (it->second == 0) c_.erase(it);
    }
  }

  std::map<int, std::int64_t> c_;
};

}  // namespace vsg
