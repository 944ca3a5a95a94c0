// greedy-bases-lab CLI: evaluate catalog norms, build parameter tables, and
// run the verification suites with machine-readable output.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gbl/catalog.hpp"
#include "gbl/greedy.hpp"
#include "gbl/norm_eval.hpp"
#include "gbl/parameters.hpp"
#include "gbl/properties.hpp"
#include "gbl/sign_pattern.hpp"
#include "gbl/verify.hpp"

namespace {

using namespace gbl;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

IndexSequence parse_sequence(const std::string& s) {
  if (s == "evens") return IndexSequence::evens();
  if (s == "odds") return IndexSequence::arithmetic(1, 2);
  if (s == "naturals") return IndexSequence::naturals();
  if (s.rfind("arith:", 0) == 0) {
    long long first, step;
    if (std::sscanf(s.c_str() + 6, "%lld,%lld", &first, &step) != 2)
      throw ConfigError("bad arithmetic sequence spec: " + s);
    return IndexSequence::arithmetic(first, step);
  }
  if (s.rfind("list:", 0) == 0) {
    std::vector<Index> v;
    std::string rest = s.substr(5);
    std::size_t pos = 0;
    while (pos < rest.size()) {
      std::size_t next = rest.find(',', pos);
      v.push_back(std::stoll(rest.substr(pos, next - pos)));
      if (next == std::string::npos) break;
      pos = next + 1;
    }
    return IndexSequence::list(v);
  }
  if (s.rfind("pred:", 0) == 0) {
    std::string rest = s.substr(5);
    std::size_t at = rest.find('@');
    if (at == std::string::npos) throw ConfigError("predicate sequence needs @window: " + s);
    return IndexSequence::predicate(rest.substr(0, at), std::stoll(rest.substr(at + 1)));
  }
  throw ConfigError("unknown sequence spec: " + s);
}

CatalogEntry load_norm(const std::string& name_or_path) {
  const auto& cat = catalog();
  auto it = cat.find(name_or_path);
  if (it != cat.end()) return it->second;
  std::ifstream in(name_or_path);
  if (!in) throw ConfigError("unknown norm '" + name_or_path + "' (not a catalog id or file)");
  nlohmann::json j;
  in >> j;
  CatalogEntry e;
  e.spec = NormSpec::from_json(j);
  e.ctx_n = e.spec.seq;
  e.default_window = 24;
  return e;
}

SparseVector parse_vector(const std::string& literal, const IndexSequence& n) {
  SparseVector x;
  std::size_t pos = 0;
  while (pos < literal.size()) {
    std::size_t next = literal.find(',', pos);
    std::string tok = literal.substr(pos, next == std::string::npos ? next : next - pos);
    std::size_t colon = tok.find(':');
    if (colon == std::string::npos) throw ConfigError("bad vector token: " + tok);
    std::string idx = tok.substr(0, colon);
    double coef = std::stod(tok.substr(colon + 1));
    Index i;
    if (!idx.empty() && idx[0] == 'n')
      i = n.nth(std::stoi(idx.substr(1)));
    else
      i = std::stoll(idx);
    if (x.coeff(i) != 0.0) throw ConfigError("duplicate index in vector literal: " + idx);
    if (coef != 0.0) x.set(i, coef);
    pos = next == std::string::npos ? literal.size() : next + 1;
  }
  return x;
}

int cmd_eval(const std::string& norm, const std::string& vec, const std::string& nspec) {
  CatalogEntry entry = load_norm(norm);
  if (!nspec.empty()) entry.ctx_n = parse_sequence(nspec);
  SparseVector x = parse_vector(vec, entry.ctx_n);
  NormValue v = evaluate(x, entry.spec);
  std::printf("%s\n", format_value(v.value).c_str());
  std::printf("witness: %s\n", v.witness.to_json().dump().c_str());
  return 0;
}

std::string witness_digest(const ParameterReport& r) {
  std::string s = "num" + r.witness_num.to_string() + " den" + r.witness_den.to_string();
  for (char& c : s)
    if (c == ',') c = ';';
  return s;
}

int cmd_catalog(const std::string& norm) {
  if (norm.empty()) {
    for (const auto& [id, entry] : catalog())
      std::printf("%-10s %s\n", id.c_str(), entry.spec.label.c_str());
    return 0;
  }
  std::printf("%s\n", catalog_entry(norm).spec.to_json().dump(2).c_str());
  return 0;
}

int cmd_table(const std::string& param, const std::string& norm, const std::string& mrange,
              Index window, int caps, bool signs, bool witness) {
  CatalogEntry entry = load_norm(norm);
  if (window == 0) window = entry.default_window;
  int m_lo = 1, m_hi = 1;
  if (std::sscanf(mrange.c_str(), "%d..%d", &m_lo, &m_hi) != 2) {
    m_lo = m_hi = std::stoi(mrange);
  }
  if (m_lo < 1 || m_hi < m_lo) throw ConfigError("bad m range: " + mrange);

  std::printf("# greedy-bases-lab v1\n");
  std::printf("m,value,kind,witness\n");
  for (int m = m_lo; m <= m_hi; ++m) {
    ParameterReport rep;
    SearchConfig cfg = default_search_config(entry, m);
    cfg.window = window == 0 ? cfg.window : window;
    if (param == "sc") {
      rep = sc_parameter(entry.spec, entry.ctx_n, m, window);
    } else if (param == "omega") {
      rep = omega_parameter(entry.spec, entry.ctx_n, m, cfg);
    } else if (param == "lebesgue") {
      rep = lebesgue_parameter(entry.spec, entry.ctx_n, m, cfg);
    } else if (param == "g" || param == "gc" || param == "gtilde") {
      QuasiGreedyReport qg = quasi_greedy_parameters(entry.spec, entry.ctx_n, m, cfg);
      rep = param == "g" ? qg.g : param == "gc" ? qg.gc : qg.gtilde;
    } else if (param == "conservative" || param == "democratic") {
      ClassContext ctx;
      ctx.n = entry.ctx_n;
      rep = conservative_constant(entry.spec, ctx, window, caps > 0 ? caps : m,
                                  param == "conservative" ? PairClass::TN : PairClass::SN,
                                  signs);
    } else if (param == "kappa") {
      rep = kappa_parameter(entry, window);
    } else {
      throw ConfigError("unknown parameter '" + param + "'");
    }
    std::printf("%d,%s,%s,%s\n", m, format_value(rep.value).c_str(),
                report_kind_name(rep.kind).c_str(), witness_digest(rep).c_str());
    if (witness) {
      nlohmann::json w{{"m", rep.m},
                       {"param", rep.param},
                       {"numerator", rep.witness_num.to_string()},
                       {"denominator", rep.witness_den.to_string()},
                       {"reevaluates_to", reevaluate_report(rep, entry.spec)},
                       {"note", rep.note}};
      std::printf("# witness %s\n", w.dump().c_str());
    }
  }
  return 0;
}

int cmd_profile(const std::string& norm, const std::string& vec, int m_max, Index window) {
  CatalogEntry entry = load_norm(norm);
  if (window == 0) window = entry.default_window;
  SparseVector x = parse_vector(vec, entry.ctx_n);
  auto rows = tga_error_profile(x, entry.spec, entry.ctx_n, m_max, window);
  std::fputs(profile_csv(rows).c_str(), stdout);
  return 0;
}

int cmd_verify(const std::string& suite) {
  if (suite == "paper") return report_results(run_full_suite());
  if (suite == "oracles") return report_results(run_oracle_suite());
  throw ConfigError("unknown suite '" + suite + "' (expected: paper, oracles)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"greedy-bases-lab: thresholding-greedy computations on sequence-space norms"};
  app.require_subcommand(1);

  std::string norm, vec, nspec, param, mrange = "1", suite = "paper";
  Index window = 0;
  int caps = 0, m_max = 4;
  bool signs = false, witness = false;

  auto* eval = app.add_subcommand("eval", "evaluate a norm on a vector literal");
  eval->add_option("--norm", norm, "catalog id or JSON spec path")->required();
  eval->add_option("--vector", vec, "idx:coef,... (n1, n2 resolve through the sequence)")
      ->required();
  eval->add_option("--n", nspec, "sequence override (evens|odds|naturals|arith:f,s|list:..)");

  auto* table = app.add_subcommand("table", "emit a parameter table as CSV");
  table->add_option("--param", param,
                    "sc|omega|lebesgue|g|gc|gtilde|conservative|democratic|kappa")
      ->required();
  table->add_option("--norm", norm, "catalog id or JSON spec path")->required();
  table->add_option("--m", mrange, "order or range, e.g. 3 or 1..4");
  table->add_option("--window", window, "enumeration window (default: per norm)");
  table->add_option("--caps", caps, "set-size caps for pair enumerations");
  table->add_flag("--signs", signs, "sign-extremal enumeration for pair classes");
  table->add_flag("--witness", witness, "dump each row's attaining configuration");

  auto* cat = app.add_subcommand("catalog", "list catalog norms or dump one as JSON");
  cat->add_option("--norm", norm, "catalog id to dump");

  auto* profile = app.add_subcommand("profile", "TGA error profile as CSV");
  profile->add_option("--norm", norm)->required();
  profile->add_option("--vector", vec)->required();
  profile->add_option("--mmax", m_max, "largest order");
  profile->add_option("--window", window);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite, "paper | oracles");

  CLI11_PARSE(app, argc, argv);

  try {
    if (eval->parsed()) return cmd_eval(norm, vec, nspec);
    if (table->parsed()) return cmd_table(param, norm, mrange, window, caps, signs, witness);
    if (profile->parsed()) return cmd_profile(norm, vec, m_max, window);
    if (cat->parsed()) return cmd_catalog(norm);
    if (verify->parsed()) return cmd_verify(suite);
  } catch (const FeasibilityError& e) {
    std::fprintf(stderr, "infeasible configuration: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
