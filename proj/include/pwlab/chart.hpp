#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace pwlab {

// Coordinate chart: dimension plus variable names (one polynomial variable
// per coordinate).
struct Chart {
  int dim = 0;
  std::vector<std::string> names;

  Chart() = default;
  Chart(int d, std::vector<std::string> nm) : dim(d), names(std::move(nm)) {
    if (static_cast<int>(names.size()) != dim)
      throw std::invalid_argument("Chart: name count must equal dimension");
  }

  // Base chart x1..xn.
  static Chart base(int n) {
    std::vector<std::string> nm;
    for (int i = 1; i <= n; ++i) nm.push_back("x" + std::to_string(i));
    return Chart(n, std::move(nm));
  }

  // Total-space chart x1..xn, p1..pn for the cotangent construction.
  static Chart cotangent(int n) {
    std::vector<std::string> nm;
    for (int i = 1; i <= n; ++i) nm.push_back("x" + std::to_string(i));
    for (int i = 1; i <= n; ++i) nm.push_back("p" + std::to_string(i));
    return Chart(2 * n, std::move(nm));
  }

  int index_of(const std::string& name) const {
    for (int i = 0; i < dim; ++i)
      if (names[static_cast<size_t>(i)] == name) return i;
    return -1;
  }

  friend bool operator==(const Chart& a, const Chart& b) {
    return a.dim == b.dim && a.names == b.names;
  }
  friend bool operator!=(const Chart& a, const Chart& b) { return !(a == b); }
};

}  // namespace pwlab
