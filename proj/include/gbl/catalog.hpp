#pragma once

#include <map>
#include <optional>
#include <string>

#include "gbl/index_sequence.hpp"
#include "gbl/norm_spec.hpp"

namespace gbl {

// A catalog norm plus the sequence context it is studied against and the
// default desk-scale windows for enumerations and searches.
struct CatalogEntry {
  NormSpec spec;
  IndexSequence ctx_n = IndexSequence::evens();  // the n of the greedy context
  Index default_window = 24;
  std::optional<double> kappa_exact;  // sup ||e_j|| ||e_k*|| when known in closed form
};

const std::map<std::string, CatalogEntry>& catalog();

const CatalogEntry& catalog_entry(const std::string& id);  // throws on unknown id

// Auxiliary sequences behind the two-sequence constructions: m_aux is the
// companion sequence m = {1, 4, 8, 12, ...}; d_aux = {i in n : i not in m} =
// {2, 6, 10, ...} for n = evens.
IndexSequence m_aux_sequence();
IndexSequence d_aux_sequence();

}  // namespace gbl
