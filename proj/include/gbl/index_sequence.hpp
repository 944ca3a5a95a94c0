#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "gbl/sparse_vector.hpp"
#include "gbl/util.hpp"

namespace gbl {

// Strictly increasing sequence of positive integers. Three representations:
// an explicit finite list, an arithmetic rule (infinite), or a named predicate
// materialized up to a window bound.
class IndexSequence {
 public:
  enum class Kind { List, Arithmetic, Predicate };

  static IndexSequence list(std::vector<Index> elements) {
    IndexSequence s;
    s.kind_ = Kind::List;
    s.elements_ = std::move(elements);
    s.validate_elements();
    return s;
  }

  static IndexSequence arithmetic(Index first, Index step) {
    if (first <= 0 || step <= 0)
      throw std::invalid_argument("IndexSequence: arithmetic rule needs first, step > 0");
    IndexSequence s;
    s.kind_ = Kind::Arithmetic;
    s.first_ = first;
    s.step_ = step;
    return s;
  }

  static IndexSequence predicate(const std::string& name, Index window) {
    IndexSequence s;
    s.kind_ = Kind::Predicate;
    s.pred_name_ = name;
    s.window_ = window;
    for (Index v = 1; v <= window; ++v)
      if (predicate_holds(name, v)) s.elements_.push_back(v);
    if (s.elements_.empty())
      throw std::invalid_argument("IndexSequence: predicate '" + name + "' empty in window");
    return s;
  }

  static IndexSequence naturals() { return arithmetic(1, 1); }
  static IndexSequence evens() { return arithmetic(2, 2); }

  Kind kind() const { return kind_; }

  bool contains(Index j) const {
    if (j <= 0) return false;
    if (kind_ == Kind::Arithmetic)
      return j >= first_ && (j - first_) % step_ == 0;
    return contains_index(elements_, j);
  }

  bool has_at_least(int m) const {
    if (m <= 0) return true;
    if (kind_ == Kind::Arithmetic) return true;
    return static_cast<int>(elements_.size()) >= m;
  }

  // n_k, 1-based.
  Index nth(int k) const {
    if (k <= 0) throw std::out_of_range("IndexSequence::nth: k must be >= 1");
    if (kind_ == Kind::Arithmetic) return first_ + static_cast<Index>(k - 1) * step_;
    if (k > static_cast<int>(elements_.size()))
      throw std::out_of_range("IndexSequence::nth: beyond represented window");
    return elements_[k - 1];
  }

  // iota(n_k) = k; error when j is not an element.
  int iota(Index j) const {
    if (!contains(j)) throw std::invalid_argument("IndexSequence::iota: not an element");
    if (kind_ == Kind::Arithmetic) return static_cast<int>((j - first_) / step_) + 1;
    auto it = std::lower_bound(elements_.begin(), elements_.end(), j);
    return static_cast<int>(it - elements_.begin()) + 1;
  }

  std::vector<Index> prefix(int m) const {
    std::vector<Index> out;
    out.reserve(m);
    for (int k = 1; k <= m; ++k) out.push_back(nth(k));
    return out;
  }

  std::vector<Index> elements_up_to(Index N) const {
    std::vector<Index> out;
    if (kind_ == Kind::Arithmetic) {
      for (Index v = first_; v <= N; v += step_) out.push_back(v);
    } else {
      for (Index v : elements_) {
        if (v > N) break;
        out.push_back(v);
      }
    }
    return out;
  }

  // #{elements < j}; exact for every representation (used as the phi step count).
  long long count_below(Index j) const {
    if (kind_ == Kind::Arithmetic) {
      if (j <= first_) return 0;
      return (j - 1 - first_) / step_ + 1;
    }
    auto it = std::lower_bound(elements_.begin(), elements_.end(), j);
    return it - elements_.begin();
  }

  long long count_up_to(Index N) const { return count_below(N + 1); }

  bool is_all_naturals() const {
    return kind_ == Kind::Arithmetic && first_ == 1 && step_ == 1;
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    switch (kind_) {
      case Kind::Arithmetic:
        j = {{"kind", "arithmetic"}, {"first", first_}, {"step", step_}};
        break;
      case Kind::List:
        j = {{"kind", "list"}, {"elements", elements_}};
        break;
      case Kind::Predicate:
        j = {{"kind", "predicate"}, {"name", pred_name_}, {"window", window_}};
        break;
    }
    return j;
  }

  static IndexSequence from_json(const nlohmann::json& j) {
    const std::string kind = j.at("kind");
    if (kind == "arithmetic") return arithmetic(j.at("first"), j.at("step"));
    if (kind == "list") return list(j.at("elements").get<std::vector<Index>>());
    if (kind == "predicate") return predicate(j.at("name"), j.at("window"));
    throw std::invalid_argument("IndexSequence: unknown kind '" + kind + "'");
  }

  bool operator==(const IndexSequence& o) const { return to_json() == o.to_json(); }

 private:
  static bool predicate_holds(const std::string& name, Index v) {
    if (name == "evens") return v % 2 == 0;
    if (name == "odds") return v % 2 == 1;
    if (name == "squares") {
      Index r = isqrt_floor(v);
      return r * r == v;
    }
    if (name == "powers_of_two") return (v & (v - 1)) == 0;
    throw std::invalid_argument("IndexSequence: unknown predicate '" + name + "'");
  }

  void validate_elements() const {
    if (elements_.empty())
      throw std::invalid_argument("IndexSequence: empty list");
    Index prev = 0;
    for (Index v : elements_) {
      if (v <= prev)
        throw std::invalid_argument("IndexSequence: elements must be strictly increasing, positive");
      prev = v;
    }
  }

  Kind kind_ = Kind::Arithmetic;
  Index first_ = 1, step_ = 1;
  std::vector<Index> elements_;
  std::string pred_name_;
  Index window_ = 0;
};

// P^n_m(x): projection onto the first m elements of n. m = 0 gives the zero vector.
SparseVector prefix_project(const SparseVector& x, const IndexSequence& n, int m);

}  // namespace gbl
