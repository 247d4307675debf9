#include "pwlab/tensor.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pwlab {

namespace {

size_t ipow(int b, int e) {
  size_t r = 1;
  for (int i = 0; i < e; ++i) r *= static_cast<size_t>(b);
  return r;
}

void check_compatible(const TensorField& a, const TensorField& b) {
  if (a.chart() != b.chart()) throw std::invalid_argument("TensorField: chart mismatch");
  if (a.valence() != b.valence()) throw std::invalid_argument("TensorField: valence mismatch");
  if (a.weight2() != b.weight2()) throw std::invalid_argument("TensorField: weight mismatch");
}

std::vector<std::vector<int>> permutations_of(int k) {
  std::vector<int> p(static_cast<size_t>(k));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> all;
  do { all.push_back(p); } while (std::next_permutation(p.begin(), p.end()));
  return all;
}

int perm_sign(const std::vector<int>& p) {
  int s = 1;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

}  // namespace

TensorField::TensorField(Chart chart, std::vector<Idx> valence, int weight2)
    : chart_(std::move(chart)), valence_(std::move(valence)), weight2_(weight2) {
  comp_.assign(ipow(chart_.dim, static_cast<int>(valence_.size())),
               RatFunc::zero(chart_.dim));
}

TensorField TensorField::scalar(const Chart& chart, const RatFunc& value, int weight2) {
  TensorField t(chart, {}, weight2);
  t.comp_[0] = value;
  return t;
}

TensorField TensorField::delta(const Chart& chart) {
  TensorField t(chart, {Idx::Up, Idx::Down});
  for (int i = 0; i < chart.dim; ++i) t.at({i, i}) = RatFunc::constant(chart.dim, Rational(1));
  return t;
}

size_t TensorField::flat(const std::vector<int>& idx) const {
  if (idx.size() != valence_.size()) throw std::invalid_argument("TensorField: index rank mismatch");
  size_t f = 0;
  for (size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] < 0 || idx[i] >= chart_.dim) throw std::out_of_range("TensorField: index out of range");
    f = f * static_cast<size_t>(chart_.dim) + static_cast<size_t>(idx[i]);
  }
  return f;
}

bool TensorField::is_zero() const {
  for (const auto& c : comp_)
    if (!c.is_zero()) return false;
  return true;
}

TensorField TensorField::operator-() const {
  TensorField r = *this;
  for (auto& c : r.comp_) c = -c;
  return r;
}

TensorField operator+(const TensorField& a, const TensorField& b) {
  check_compatible(a, b);
  TensorField r = a;
  for (size_t i = 0; i < r.comp_.size(); ++i) r.comp_[i] += b.comp_[i];
  return r;
}

TensorField operator-(const TensorField& a, const TensorField& b) {
  check_compatible(a, b);
  TensorField r = a;
  for (size_t i = 0; i < r.comp_.size(); ++i) r.comp_[i] -= b.comp_[i];
  return r;
}

TensorField TensorField::scaled(const Rational& c) const {
  TensorField r = *this;
  for (auto& v : r.comp_) v = v.scaled(c);
  return r;
}

TensorField TensorField::scaled_fn(const RatFunc& f) const {
  TensorField r = *this;
  for (auto& v : r.comp_) v = v * f;
  return r;
}

TensorField tensor_product(const TensorField& a, const TensorField& b) {
  if (a.chart() != b.chart()) throw std::invalid_argument("tensor_product: chart mismatch");
  std::vector<Idx> val = a.valence();
  val.insert(val.end(), b.valence().begin(), b.valence().end());
  TensorField r(a.chart(), val, a.weight2() + b.weight2());
  const int dim = a.dim();
  for (MultiIndex ia(dim, a.rank()); ia.valid(); ia.next()) {
    const RatFunc& va = a.at(*ia);
    if (va.is_zero()) continue;
    for (MultiIndex ib(dim, b.rank()); ib.valid(); ib.next()) {
      const RatFunc& vb = b.at(*ib);
      if (vb.is_zero()) continue;
      std::vector<int> idx = *ia;
      idx.insert(idx.end(), (*ib).begin(), (*ib).end());
      r.at(idx) = va * vb;
    }
  }
  return r;
}

TensorField contract(const TensorField& t, int pos_a, int pos_b) {
  if (pos_a == pos_b) throw std::invalid_argument("contract: equal slots");
  if (pos_a > pos_b) std::swap(pos_a, pos_b);
  const auto& val = t.valence();
  if (val[static_cast<size_t>(pos_a)] == val[static_cast<size_t>(pos_b)])
    throw std::invalid_argument("contract: slots must be one Up and one Down");
  std::vector<Idx> rval;
  for (int i = 0; i < t.rank(); ++i)
    if (i != pos_a && i != pos_b) rval.push_back(val[static_cast<size_t>(i)]);
  TensorField r(t.chart(), rval, t.weight2());
  const int dim = t.dim();
  for (MultiIndex ridx(dim, r.rank()); ridx.valid(); ridx.next()) {
    RatFunc acc = RatFunc::zero(dim);
    std::vector<int> full(static_cast<size_t>(t.rank()));
    for (int e = 0; e < dim; ++e) {
      int k = 0;
      for (int i = 0; i < t.rank(); ++i) {
        if (i == pos_a || i == pos_b) full[static_cast<size_t>(i)] = e;
        else full[static_cast<size_t>(i)] = (*ridx)[static_cast<size_t>(k++)];
      }
      acc += t.at(full);
    }
    r.at(*ridx) = acc;
  }
  return r;
}

namespace {

TensorField symmetrize_impl(const TensorField& t, const std::vector<int>& slots, bool anti) {
  if (slots.size() < 2) return t;
  Idx kind = t.valence()[static_cast<size_t>(slots[0])];
  for (int s : slots)
    if (t.valence()[static_cast<size_t>(s)] != kind)
      throw std::invalid_argument("symmetrize: slots must share index character");
  TensorField r(t.chart(), t.valence(), t.weight2());
  auto perms = permutations_of(static_cast<int>(slots.size()));
  Rational norm(1);
  for (int i = 2; i <= static_cast<int>(slots.size()); ++i) norm *= Rational(i);
  norm = norm.inv();
  const int dim = t.dim();
  for (MultiIndex idx(dim, t.rank()); idx.valid(); idx.next()) {
    RatFunc acc = RatFunc::zero(dim);
    std::vector<int> src = *idx;
    for (const auto& p : perms) {
      for (size_t i = 0; i < slots.size(); ++i)
        src[static_cast<size_t>(slots[i])] = (*idx)[static_cast<size_t>(slots[static_cast<size_t>(p[i])])];
      RatFunc v = t.at(src);
      if (anti && perm_sign(p) < 0) v = -v;
      acc += v;
    }
    r.at(*idx) = acc.scaled(norm);
  }
  return r;
}

}  // namespace

TensorField symmetrize(const TensorField& t, const std::vector<int>& slots) {
  return symmetrize_impl(t, slots, false);
}

TensorField antisymmetrize(const TensorField& t, const std::vector<int>& slots) {
  return symmetrize_impl(t, slots, true);
}

TensorField raise_index(const TensorField& t, int pos, const TensorField& ginv) {
  if (t.valence()[static_cast<size_t>(pos)] != Idx::Down)
    throw std::invalid_argument("raise_index: slot is not Down");
  std::vector<Idx> val = t.valence();
  val[static_cast<size_t>(pos)] = Idx::Up;
  TensorField r(t.chart(), val, t.weight2() + ginv.weight2());
  const int dim = t.dim();
  for (MultiIndex idx(dim, t.rank()); idx.valid(); idx.next()) {
    RatFunc acc = RatFunc::zero(dim);
    std::vector<int> src = *idx;
    for (int e = 0; e < dim; ++e) {
      src[static_cast<size_t>(pos)] = e;
      const RatFunc& tv = t.at(src);
      if (tv.is_zero()) continue;
      acc += ginv.at({(*idx)[static_cast<size_t>(pos)], e}) * tv;
    }
    r.at(*idx) = acc;
  }
  return r;
}

TensorField lower_index(const TensorField& t, int pos, const TensorField& g) {
  if (t.valence()[static_cast<size_t>(pos)] != Idx::Up)
    throw std::invalid_argument("lower_index: slot is not Up");
  std::vector<Idx> val = t.valence();
  val[static_cast<size_t>(pos)] = Idx::Down;
  TensorField r(t.chart(), val, t.weight2() + g.weight2());
  const int dim = t.dim();
  for (MultiIndex idx(dim, t.rank()); idx.valid(); idx.next()) {
    RatFunc acc = RatFunc::zero(dim);
    std::vector<int> src = *idx;
    for (int e = 0; e < dim; ++e) {
      src[static_cast<size_t>(pos)] = e;
      const RatFunc& tv = t.at(src);
      if (tv.is_zero()) continue;
      acc += g.at({(*idx)[static_cast<size_t>(pos)], e}) * tv;
    }
    r.at(*idx) = acc;
  }
  return r;
}

TensorField transpose(const TensorField& t, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != t.rank()) throw std::invalid_argument("transpose: bad permutation");
  std::vector<Idx> val(perm.size());
  for (size_t i = 0; i < perm.size(); ++i) val[i] = t.valence()[static_cast<size_t>(perm[i])];
  TensorField r(t.chart(), val, t.weight2());
  for (MultiIndex idx(t.dim(), t.rank()); idx.valid(); idx.next()) {
    std::vector<int> src(perm.size());
    for (size_t i = 0; i < perm.size(); ++i) src[static_cast<size_t>(perm[i])] = (*idx)[i];
    r.at(*idx) = t.at(src);
  }
  return r;
}

TensorField metric_inverse(const TensorField& g) {
  if (g.rank() != 2 || g.valence()[0] != Idx::Down || g.valence()[1] != Idx::Down)
    throw std::invalid_argument("metric_inverse: expected all-Down rank 2");
  const int dim = g.dim();
  FMat m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = g.at({i, j});

  // Block fast path for cotangent-chart metrics [[A, I], [I, 0]] whose exact
  // inverse is [[0, I], [I, -A]].
  bool block_form = dim % 2 == 0;
  int h = dim / 2;
  if (block_form) {
    for (int i = 0; i < h && block_form; ++i)
      for (int j = 0; j < h && block_form; ++j) {
        const RatFunc& off = m(i, h + j);
        const RatFunc& off2 = m(h + i, j);
        const RatFunc& vv = m(h + i, h + j);
        bool ident = (i == j) ? (off == RatFunc::constant(dim, 1) && off2 == RatFunc::constant(dim, 1))
                              : (off.is_zero() && off2.is_zero());
        if (!ident || !vv.is_zero()) block_form = false;
      }
  }
  TensorField inv(g.chart(), {Idx::Up, Idx::Up}, -g.weight2());
  if (block_form) {
    for (int i = 0; i < h; ++i)
      for (int j = 0; j < h; ++j) {
        inv.at({i, h + j}) = (i == j) ? RatFunc::constant(dim, 1) : RatFunc::zero(dim);
        inv.at({h + i, j}) = (i == j) ? RatFunc::constant(dim, 1) : RatFunc::zero(dim);
        inv.at({h + i, h + j}) = -m(i, j);
        inv.at({i, j}) = RatFunc::zero(dim);
      }
    return inv;
  }
  FMat mi = exact_inverse(m, RatFunc::zero(dim), RatFunc::constant(dim, Rational(1)));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) inv.at({i, j}) = mi(i, j).normalized();
  return inv;
}

}  // namespace pwlab
