#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "gbl/sparse_vector.hpp"
#include "gbl/util.hpp"

namespace gbl {

// Assignment of +1/-1 to a finite index set. May be defined on a superset of
// the set it is applied to; a missing sign is an error.
class SignPattern {
 public:
  SignPattern() = default;

  static SignPattern uniform_plus() { return SignPattern(); }

  static SignPattern from(std::map<Index, int> values) {
    SignPattern p;
    for (const auto& [i, s] : values) {
      if (s != 1 && s != -1) throw std::invalid_argument("SignPattern: values must be +-1");
      p.values_[i] = s;
    }
    p.uniform_ = false;
    return p;
  }

  // Signs listed in the order of the (sorted) set they will be applied to.
  static SignPattern on_set(const std::vector<Index>& set, const std::vector<int>& signs) {
    if (set.size() != signs.size())
      throw std::invalid_argument("SignPattern: size mismatch");
    std::map<Index, int> m;
    for (std::size_t i = 0; i < set.size(); ++i) m[set[i]] = signs[i];
    return from(std::move(m));
  }

  static SignPattern alternating(const std::vector<Index>& set, int first = 1) {
    std::map<Index, int> m;
    int s = first;
    for (Index i : set) {
      m[i] = s;
      s = -s;
    }
    return from(std::move(m));
  }

  bool is_uniform_plus() const { return uniform_; }

  int at(Index i) const {
    if (uniform_) return 1;
    auto it = values_.find(i);
    if (it == values_.end())
      throw std::invalid_argument("SignPattern: no sign for index " + std::to_string(i));
    return it->second;
  }

 private:
  std::map<Index, int> values_;
  bool uniform_ = true;
};

// 1_{eps A}: support exactly A, coefficients eps_n.
inline SparseVector indicator(const std::vector<Index>& A,
                              const SignPattern& eps = SignPattern::uniform_plus()) {
  SparseVector x;
  for (Index i : A) x.set(i, static_cast<double>(eps.at(i)));
  return x;
}

// P_A(x).
inline SparseVector project(const SparseVector& x, const std::vector<Index>& A) {
  return x.restricted(A);
}

}  // namespace gbl
