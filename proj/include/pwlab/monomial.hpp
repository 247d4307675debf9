#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace pwlab {

// Exponent vector with graded-lex ordering. Fixed small capacity: charts in
// this project have at most 2n <= 8 coordinates plus headroom.
class Monomial {
 public:
  static constexpr int kMaxVars = 16;
  static constexpr int kMaxExp = 250;

  Monomial() : n_(0), deg_(0) { e_.fill(0); }
  explicit Monomial(int nvars) : n_(static_cast<uint8_t>(nvars)), deg_(0) {
    if (nvars < 0 || nvars > kMaxVars) throw std::invalid_argument("Monomial: nvars out of range");
    e_.fill(0);
  }
  static Monomial var(int nvars, int i, int power = 1) {
    Monomial m(nvars);
    m.set(i, power);
    return m;
  }

  int nvars() const { return n_; }
  int deg() const { return deg_; }
  int exp(int i) const { return e_[static_cast<size_t>(i)]; }
  bool is_one() const { return deg_ == 0; }

  void set(int i, int v) {
    if (i < 0 || i >= n_) throw std::out_of_range("Monomial: variable index");
    if (v < 0 || v > kMaxExp) throw std::domain_error("Monomial: exponent out of range");
    deg_ += v - e_[static_cast<size_t>(i)];
    e_[static_cast<size_t>(i)] = static_cast<uint8_t>(v);
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r(n_);
    for (int i = 0; i < n_; ++i) {
      int s = e_[static_cast<size_t>(i)] + o.e_[static_cast<size_t>(i)];
      if (s > kMaxExp) throw std::domain_error("Monomial: degree overflow");
      r.e_[static_cast<size_t>(i)] = static_cast<uint8_t>(s);
    }
    r.deg_ = deg_ + o.deg_;
    return r;
  }

  bool divides(const Monomial& o) const {
    for (int i = 0; i < n_; ++i)
      if (e_[static_cast<size_t>(i)] > o.e_[static_cast<size_t>(i)]) return false;
    return true;
  }

  // Requires divides(o).
  Monomial div_into(const Monomial& o) const {
    Monomial r(n_);
    for (int i = 0; i < n_; ++i)
      r.e_[static_cast<size_t>(i)] =
          static_cast<uint8_t>(o.e_[static_cast<size_t>(i)] - e_[static_cast<size_t>(i)]);
    r.deg_ = o.deg_ - deg_;
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.n_ == b.n_ && a.deg_ == b.deg_ && a.e_ == b.e_;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  // Graded lexicographic: lower total degree first, ties broken by the first
  // differing exponent (earlier variable with smaller exponent sorts first).
  friend bool operator<(const Monomial& a, const Monomial& b) {
    if (a.deg_ != b.deg_) return a.deg_ < b.deg_;
    for (int i = 0; i < a.n_; ++i) {
      if (a.e_[static_cast<size_t>(i)] != b.e_[static_cast<size_t>(i)])
        return a.e_[static_cast<size_t>(i)] < b.e_[static_cast<size_t>(i)];
    }
    return false;
  }

 private:
  uint8_t n_;
  int16_t deg_;
  std::array<uint8_t, kMaxVars> e_;
};

}  // namespace pwlab
