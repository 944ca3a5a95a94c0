#pragma once

#include <functional>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "gbl/util.hpp"

namespace gbl {

// Weight on finite index sets: omega(emptyset) = 0, omega(A) in (0, inf] otherwise.
// Three construction routes: a sequence of per-index weights (omega(A) = sum),
// an explicit table, or an arbitrary evaluator (used for norm-induced weights).
class Weight {
 public:
  enum class Kind { Sequence, Table, Evaluator };

  static Weight from_sequence(std::vector<double> per_index_1based) {
    for (double s : per_index_1based)
      if (!(s > 0)) throw std::invalid_argument("Weight: sequence values must be > 0");
    Weight w;
    w.kind_ = Kind::Sequence;
    w.seq_ = std::move(per_index_1based);
    w.label_ = "sequence";
    return w;
  }

  static Weight cardinality() {
    Weight w;
    w.kind_ = Kind::Evaluator;
    w.eval_ = [](const std::vector<Index>& A) { return static_cast<double>(A.size()); };
    w.label_ = "cardinality";
    return w;
  }

  static Weight from_table(std::map<std::vector<Index>, double> table) {
    Weight w;
    w.kind_ = Kind::Table;
    w.table_ = std::move(table);
    w.label_ = "table";
    return w;
  }

  static Weight from_evaluator(std::function<double(const std::vector<Index>&)> fn,
                               std::string label) {
    Weight w;
    w.kind_ = Kind::Evaluator;
    w.eval_ = std::move(fn);
    w.label_ = std::move(label);
    return w;
  }

  double operator()(const std::vector<Index>& A) const {
    if (A.empty()) return 0.0;
    switch (kind_) {
      case Kind::Sequence: {
        double total = 0;
        for (Index i : A) {
          if (i <= 0 || i > static_cast<Index>(seq_.size()))
            return std::numeric_limits<double>::infinity();
          total += seq_[i - 1];
        }
        return total;
      }
      case Kind::Table: {
        auto it = table_.find(A);
        if (it == table_.end())
          throw std::invalid_argument("Weight: set not in table");
        return it->second;
      }
      case Kind::Evaluator:
        return eval_(A);
    }
    return 0.0;
  }

  const std::string& label() const { return label_; }
  Kind kind() const { return kind_; }

 private:
  Kind kind_ = Kind::Evaluator;
  std::vector<double> seq_;
  std::map<std::vector<Index>, double> table_;
  std::function<double(const std::vector<Index>&)> eval_;
  std::string label_;
};

}  // namespace gbl
