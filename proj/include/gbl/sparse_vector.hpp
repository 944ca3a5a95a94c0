#pragma once

#include <cmath>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "gbl/util.hpp"

namespace gbl {

// Finitely supported coefficient sequence over positive integer indices.
// Exactly-zero coefficients are never stored, so support queries are exact.
class SparseVector {
 public:
  SparseVector() = default;
  SparseVector(std::initializer_list<std::pair<Index, double>> entries) {
    for (const auto& [i, v] : entries) set(i, v);
  }

  static SparseVector zero() { return {}; }

  void set(Index i, double v) {
    if (i <= 0) throw std::invalid_argument("SparseVector: index must be positive");
    if (v == 0.0)
      entries_.erase(i);
    else
      entries_[i] = v;
  }

  void add(Index i, double v) { set(i, coeff(i) + v); }

  double coeff(Index i) const {
    auto it = entries_.find(i);
    return it == entries_.end() ? 0.0 : it->second;
  }

  bool empty() const { return entries_.empty(); }
  std::size_t support_size() const { return entries_.size(); }

  const std::map<Index, double>& entries() const { return entries_; }

  std::vector<Index> support() const {
    std::vector<Index> out;
    out.reserve(entries_.size());
    for (const auto& [i, _] : entries_) out.push_back(i);
    return out;
  }

  Index max_index() const { return entries_.empty() ? 0 : entries_.rbegin()->first; }

  double linf() const {
    double m = 0;
    for (const auto& [_, v] : entries_) m = std::max(m, std::abs(v));
    return m;
  }

  SparseVector scaled(double c) const {
    SparseVector out;
    if (c == 0.0) return out;
    for (const auto& [i, v] : entries_) out.entries_[i] = c * v;
    return out;
  }

  SparseVector plus(const SparseVector& other) const {
    SparseVector out = *this;
    for (const auto& [i, v] : other.entries_) out.add(i, v);
    return out;
  }

  SparseVector minus(const SparseVector& other) const { return plus(other.scaled(-1.0)); }

  // Coefficients on A, exactly copied; zero elsewhere.
  SparseVector restricted(const std::vector<Index>& A) const {
    SparseVector out;
    for (Index i : A) {
      auto it = entries_.find(i);
      if (it != entries_.end()) out.entries_[i] = it->second;
    }
    return out;
  }

  // Coefficients off A, exactly copied. restricted(A) + restricted_complement(A)
  // reassembles the vector with no floating error.
  SparseVector restricted_complement(const std::vector<Index>& A) const {
    SparseVector out;
    for (const auto& [i, v] : entries_)
      if (!contains_index(A, i)) out.entries_[i] = v;
    return out;
  }

  bool operator==(const SparseVector& other) const { return entries_ == other.entries_; }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (const auto& [i, v] : entries_) {
      if (!first) s += ", ";
      first = false;
      s += std::to_string(i) + ":" + format_value(v);
    }
    return s + "}";
  }

 private:
  std::map<Index, double> entries_;
};

}  // namespace gbl
