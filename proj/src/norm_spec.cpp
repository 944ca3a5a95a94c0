#include "gbl/norm_spec.hpp"

#include <cmath>

namespace gbl {

double rank_weight(RankWeights w, int rank) {
  switch (w) {
    case RankWeights::Unit:
      return 1.0;
    case RankWeights::InvSqrt:
      return 1.0 / std::sqrt(static_cast<double>(rank));
    case RankWeights::Inv:
      return 1.0 / static_cast<double>(rank);
  }
  return 1.0;
}

std::string family_name(NormFamily f) {
  switch (f) {
    case NormFamily::Partitioned: return "partitioned_rearrangement";
    case NormFamily::FamilyWeight: return "family_weight";
    case NormFamily::Summing: return "summing";
    case NormFamily::Split: return "split_l1_sup";
    case NormFamily::GapOrder: return "gap_order";
    case NormFamily::GapExp: return "gap_exp";
    case NormFamily::LambdaWeight: return "lambda_weight";
  }
  return "?";
}

namespace {

const char* selector_name(BlockSelector s) {
  switch (s) {
    case BlockSelector::OnSeq: return "on_seq";
    case BlockSelector::OffSeq: return "off_seq";
    case BlockSelector::OddPositionsOfSeq: return "odd_positions";
    case BlockSelector::EvenPositionsOfSeq: return "even_positions";
    case BlockSelector::NotOddPositionsOfSeq: return "not_odd_positions";
    case BlockSelector::All: return "all";
  }
  return "?";
}

BlockSelector selector_from(const std::string& s) {
  if (s == "on_seq") return BlockSelector::OnSeq;
  if (s == "off_seq") return BlockSelector::OffSeq;
  if (s == "odd_positions") return BlockSelector::OddPositionsOfSeq;
  if (s == "even_positions") return BlockSelector::EvenPositionsOfSeq;
  if (s == "not_odd_positions") return BlockSelector::NotOddPositionsOfSeq;
  if (s == "all") return BlockSelector::All;
  throw std::invalid_argument("NormSpec: unknown selector " + s);
}

const char* mode_name(BlockMode m) {
  switch (m) {
    case BlockMode::Lp: return "lp";
    case BlockMode::Linf: return "linf";
    case BlockMode::Rearrangement: return "rearrangement";
  }
  return "?";
}

BlockMode mode_from(const std::string& s) {
  if (s == "lp") return BlockMode::Lp;
  if (s == "linf") return BlockMode::Linf;
  if (s == "rearrangement") return BlockMode::Rearrangement;
  throw std::invalid_argument("NormSpec: unknown block mode " + s);
}

const char* weights_name(RankWeights w) {
  switch (w) {
    case RankWeights::Unit: return "unit";
    case RankWeights::InvSqrt: return "inv_sqrt";
    case RankWeights::Inv: return "inv";
  }
  return "?";
}

RankWeights weights_from(const std::string& s) {
  if (s == "unit") return RankWeights::Unit;
  if (s == "inv_sqrt") return RankWeights::InvSqrt;
  if (s == "inv") return RankWeights::Inv;
  throw std::invalid_argument("NormSpec: unknown weights " + s);
}

NormFamily family_from(const std::string& s) {
  if (s == "partitioned_rearrangement") return NormFamily::Partitioned;
  if (s == "family_weight") return NormFamily::FamilyWeight;
  if (s == "summing") return NormFamily::Summing;
  if (s == "split_l1_sup") return NormFamily::Split;
  if (s == "gap_order") return NormFamily::GapOrder;
  if (s == "gap_exp") return NormFamily::GapExp;
  if (s == "lambda_weight") return NormFamily::LambdaWeight;
  throw std::invalid_argument("NormSpec: unknown family " + s);
}

}  // namespace

void NormSpec::validate() const {
  switch (family) {
    case NormFamily::Partitioned:
      if (blocks.empty()) throw std::invalid_argument(id + ": partitioned norm needs blocks");
      for (const auto& b : blocks)
        if (b.mode == BlockMode::Lp && !(b.p >= 1.0))
          throw std::invalid_argument(id + ": lp block needs p >= 1");
      break;
    case NormFamily::FamilyWeight: {
      if (!fam || fam->blocks.empty())
        throw std::invalid_argument(id + ": family norm needs blocks");
      for (const auto& b : fam->blocks)
        if (b.predicate == FamilyPredicate::SqrtPhi && !b.phi_breaks)
          throw std::invalid_argument(id + ": sqrt-phi predicate needs breakpoints");
      break;
    }
    case NormFamily::GapOrder: {
      if (!gap_ord) throw std::invalid_argument(id + ": missing gap_order params");
      const auto& g = *gap_ord;
      for (std::size_t i = 1; i < g.s.size(); ++i)
        if (g.s[i] <= g.s[i - 1])
          throw std::invalid_argument(id + ": gap sequence must be strictly increasing");
      for (std::size_t j = 1; j <= g.kj.size(); ++j) {
        int kj = g.kj[j - 1];
        if (kj < 1 || kj > static_cast<int>(g.s.size()))
          throw std::invalid_argument(id + ": kj out of range");
        if (kj < static_cast<int>(g.s.size())) {
          // s_{k_j + 1} > 3 (j+1) s_{k_j}
          if (!(g.s[kj] > 3 * static_cast<long long>(j + 1) * g.s[kj - 1]))
            throw std::invalid_argument(id + ": quotient-gap growth condition violated at j=" +
                                        std::to_string(j));
        }
      }
      break;
    }
    case NormFamily::GapExp: {
      if (!gap_exp) throw std::invalid_argument(id + ": missing gap_exp params");
      const auto& g = *gap_exp;
      if (g.s.size() != g.p.size())
        throw std::invalid_argument(id + ": s and p must have equal length");
      long long pow10 = 10;
      for (std::size_t j = 1; j < g.s.size(); ++j) {
        if (!(g.s[j] - g.s[j - 1] > 3 * pow10))
          throw std::invalid_argument(id + ": additive-gap growth condition violated at j=" +
                                      std::to_string(j));
        pow10 *= 10;
      }
      for (std::size_t j = 0; j < g.p.size(); ++j) {
        if (!(g.p[j] > 1.0))
          throw std::invalid_argument(id + ": exponents must stay above 1");
        if (j > 0 && !(g.p[j] < g.p[j - 1]))
          throw std::invalid_argument(id + ": exponents must decrease");
      }
      break;
    }
    case NormFamily::LambdaWeight: {
      if (!lam) throw std::invalid_argument(id + ": missing lambda params");
      if (!(lam->lambda > 1.0)) throw std::invalid_argument(id + ": lambda must be > 1");
      int prev = 0;
      for (std::size_t j = 1; j <= lam->nprime_positions.size(); ++j) {
        int kj = lam->nprime_positions[j - 1];
        if (kj <= prev) throw std::invalid_argument(id + ": n' positions must increase");
        prev = kj;
        double lhs = std::log(std::ceil((lam->lambda - 1.0) * kj));
        if (!(lhs >= 2.0 * std::sqrt(static_cast<double>(j)) - 1e-12))
          throw std::invalid_argument(id + ": n' growth condition violated at j=" +
                                      std::to_string(j));
      }
      break;
    }
    default:
      break;
  }
}

nlohmann::json NormSpec::to_json() const {
  nlohmann::json j;
  j["id"] = id;
  j["label"] = label;
  j["family"] = family_name(family);
  j["seq"] = seq.to_json();
  j["flags"] = {{"one_unconditional", one_unconditional},
                {"one_pslc_expected", one_pslc_expected},
                {"normalized", normalized}};
  switch (family) {
    case NormFamily::Partitioned: {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& b : blocks)
        arr.push_back({{"selector", selector_name(b.selector)},
                       {"mode", mode_name(b.mode)},
                       {"p", b.p},
                       {"weights", weights_name(b.weights)}});
      j["blocks"] = arr;
      j["combiner"] = combiner == Combiner::Sum ? "sum" : "max";
      break;
    }
    case NormFamily::FamilyWeight: {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& b : fam->blocks) {
        nlohmann::json bj = {{"base", b.base.to_json()},
                             {"coord", b.coord == FamilyCoord::Position ? "position" : "index"},
                             {"predicate",
                              b.predicate == FamilyPredicate::SqrtCoord ? "sqrt_coord" : "sqrt_phi"},
                             {"weights", weights_name(b.weights)}};
        if (b.phi_breaks) bj["phi_breaks"] = b.phi_breaks->to_json();
        arr.push_back(bj);
      }
      j["family_blocks"] = arr;
      j["tail"] = fam->tail == FamilyTail::None         ? "none"
                  : fam->tail == FamilyTail::L1OffBases ? "l1_off_bases"
                                                        : "l2_global";
      break;
    }
    case NormFamily::GapOrder:
      j["gap"] = {{"s", gap_ord->s}, {"kj", gap_ord->kj}, {"window", gap_ord->window}};
      break;
    case NormFamily::GapExp:
      j["gap"] = {{"s", gap_exp->s}, {"p", gap_exp->p}, {"window", gap_exp->window}};
      break;
    case NormFamily::LambdaWeight:
      j["lambda"] = {{"lambda", lam->lambda}, {"nprime_positions", lam->nprime_positions}};
      break;
    default:
      break;
  }
  return j;
}

NormSpec NormSpec::from_json(const nlohmann::json& j) {
  NormSpec s;
  s.id = j.at("id");
  s.label = j.value("label", std::string());
  s.family = family_from(j.at("family"));
  s.seq = IndexSequence::from_json(j.at("seq"));
  if (j.contains("flags")) {
    const auto& f = j["flags"];
    s.one_unconditional = f.value("one_unconditional", true);
    s.one_pslc_expected = f.value("one_pslc_expected", false);
    s.normalized = f.value("normalized", true);
  }
  switch (s.family) {
    case NormFamily::Partitioned: {
      for (const auto& bj : j.at("blocks")) {
        PartitionBlock b;
        b.selector = selector_from(bj.at("selector"));
        b.mode = mode_from(bj.at("mode"));
        b.p = bj.value("p", 1.0);
        b.weights = weights_from(bj.value("weights", std::string("unit")));
        s.blocks.push_back(b);
      }
      s.combiner = j.value("combiner", std::string("sum")) == "max" ? Combiner::Max : Combiner::Sum;
      break;
    }
    case NormFamily::FamilyWeight: {
      FamilyParams fp;
      for (const auto& bj : j.at("family_blocks")) {
        FamilyBlock b;
        b.base = IndexSequence::from_json(bj.at("base"));
        b.coord = bj.at("coord") == "position" ? FamilyCoord::Position : FamilyCoord::Index;
        b.predicate = bj.at("predicate") == "sqrt_coord" ? FamilyPredicate::SqrtCoord
                                                         : FamilyPredicate::SqrtPhi;
        b.weights = weights_from(bj.value("weights", std::string("unit")));
        if (bj.contains("phi_breaks")) b.phi_breaks = IndexSequence::from_json(bj["phi_breaks"]);
        fp.blocks.push_back(b);
      }
      const std::string tail = j.value("tail", std::string("l1_off_bases"));
      fp.tail = tail == "none"         ? FamilyTail::None
                : tail == "l2_global"  ? FamilyTail::L2Global
                                       : FamilyTail::L1OffBases;
      s.fam = std::move(fp);
      break;
    }
    case NormFamily::GapOrder: {
      GapOrderParams g;
      g.s = j.at("gap").at("s").get<std::vector<long long>>();
      g.kj = j.at("gap").at("kj").get<std::vector<int>>();
      g.window = j.at("gap").at("window");
      s.gap_ord = std::move(g);
      break;
    }
    case NormFamily::GapExp: {
      GapExpParams g;
      g.s = j.at("gap").at("s").get<std::vector<long long>>();
      g.p = j.at("gap").at("p").get<std::vector<double>>();
      g.window = j.at("gap").at("window");
      s.gap_exp = std::move(g);
      break;
    }
    case NormFamily::LambdaWeight: {
      LambdaParams l;
      l.lambda = j.at("lambda").at("lambda");
      l.nprime_positions = j.at("lambda").at("nprime_positions").get<std::vector<int>>();
      s.lam = std::move(l);
      break;
    }
    default:
      break;
  }
  s.validate();
  return s;
}

nlohmann::json NormWitness::to_json() const {
  return {{"term", term}, {"indices", indices}, {"ranks", ranks}, {"note", note}};
}

}  // namespace gbl
