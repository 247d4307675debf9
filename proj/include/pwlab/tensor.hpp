#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "pwlab/chart.hpp"
#include "pwlab/linalg.hpp"
#include "pwlab/ratfunc.hpp"

namespace pwlab {

enum class Idx : uint8_t { Up, Down };

// Odometer over multi-indices {0..dim-1}^rank, row-major (last index fastest).
class MultiIndex {
 public:
  MultiIndex(int dim, int rank) : dim_(dim), idx_(static_cast<size_t>(rank), 0), done_(rank >= 0) {}
  bool valid() const { return done_; }
  void next() {
    for (int i = static_cast<int>(idx_.size()) - 1; i >= 0; --i) {
      if (++idx_[static_cast<size_t>(i)] < dim_) return;
      idx_[static_cast<size_t>(i)] = 0;
    }
    done_ = false;
  }
  const std::vector<int>& operator*() const { return idx_; }
  int operator[](int i) const { return idx_[static_cast<size_t>(i)]; }

 private:
  int dim_;
  std::vector<int> idx_;
  bool done_;
};

// Dense tensor field with components in RatFunc, a valence (index character
// list) and a conformal-weight tag. Weights are pure bookkeeping: components
// are expressed in a fixed scale, so derivative operators never see them, but
// products add them and raising/lowering shifts them by -2/+2.
class TensorField {
 public:
  TensorField() : weight2_(0) {}
  TensorField(Chart chart, std::vector<Idx> valence, int weight2 = 0);

  static TensorField scalar(const Chart& chart, const RatFunc& value, int weight2 = 0);
  static TensorField zero(const Chart& chart, std::vector<Idx> valence, int weight2 = 0) {
    return TensorField(chart, std::move(valence), weight2);
  }
  // Identity endomorphism delta^a_b (valence Up,Down).
  static TensorField delta(const Chart& chart);

  const Chart& chart() const { return chart_; }
  int dim() const { return chart_.dim; }
  int rank() const { return static_cast<int>(valence_.size()); }
  const std::vector<Idx>& valence() const { return valence_; }
  int weight2() const { return weight2_; }
  TensorField& set_weight2(int w2) { weight2_ = w2; return *this; }

  size_t size() const { return comp_.size(); }
  const RatFunc& at(const std::vector<int>& idx) const { return comp_[flat(idx)]; }
  RatFunc& at(const std::vector<int>& idx) { return comp_[flat(idx)]; }
  const RatFunc& at(std::initializer_list<int> idx) const { return at(std::vector<int>(idx)); }
  RatFunc& at(std::initializer_list<int> idx) { return at(std::vector<int>(idx)); }
  const RatFunc& flat_at(size_t i) const { return comp_[i]; }
  RatFunc& flat_at(size_t i) { return comp_[i]; }

  bool is_zero() const;

  TensorField operator-() const;
  friend TensorField operator+(const TensorField& a, const TensorField& b);
  friend TensorField operator-(const TensorField& a, const TensorField& b);
  TensorField& operator+=(const TensorField& o) { return *this = *this + o; }
  TensorField& operator-=(const TensorField& o) { return *this = *this - o; }
  TensorField scaled(const Rational& c) const;
  TensorField scaled_fn(const RatFunc& f) const;

  size_t flat(const std::vector<int>& idx) const;

 private:
  Chart chart_;
  std::vector<Idx> valence_;
  int weight2_;
  std::vector<RatFunc> comp_;
};

// -- Free tensor algebra operations -----------------------------------------

TensorField tensor_product(const TensorField& a, const TensorField& b);

// Contract one Up and one Down slot (positions into the valence list).
TensorField contract(const TensorField& t, int pos_a, int pos_b);

// Full symmetrization / antisymmetrization over the given slots (which must
// share index character); includes the 1/k! normalization.
TensorField symmetrize(const TensorField& t, const std::vector<int>& slots);
TensorField antisymmetrize(const TensorField& t, const std::vector<int>& slots);

// Raise/lower a slot with the given (inverse) metric; adjusts the weight tag
// by -2 (raise) or +2 (lower).
TensorField raise_index(const TensorField& t, int pos, const TensorField& ginv);
TensorField lower_index(const TensorField& t, int pos, const TensorField& g);

// Reorder slots by permutation: result slot i = input slot perm[i].
TensorField transpose(const TensorField& t, const std::vector<int>& perm);

// Exact inverse of a symmetric rank-2 all-Down metric; result is Up,Up and
// the inverse of a weight-w2 metric carries weight -w2. Entries come back
// normalized.
TensorField metric_inverse(const TensorField& g);

}  // namespace pwlab
