#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <optional>
#include <regex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "symgb/symgb.hpp"

namespace symgb::cli {
namespace {

using json = nlohmann::ordered_json;

/// Raised for bad flag values discovered after CLI11 parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Range {
  int lo = 1;
  int hi = 1;
};

Range parse_range(const std::string& text) {
  static const std::regex pattern(R"(^\s*(\d+)\s*(?:\.\.\s*(\d+))?\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) throw UsageError("bad range '" + text + "' (expected N or A..B)");
  Range r;
  r.lo = std::stoi(m[1].str());
  r.hi = m[2].matched ? std::stoi(m[2].str()) : r.lo;
  if (r.lo < 1 || r.hi < r.lo) throw UsageError("range '" + text + "' must satisfy 1 <= A <= B");
  return r;
}

int checked_n(int n) {
  if (n < 1 || static_cast<std::size_t>(n) > kMaxArity)
    throw UsageError("--n must be in 1.." + std::to_string(kMaxArity));
  return n;
}

std::optional<int> env_max_n() {
  const char* raw = std::getenv("SYMGB_MAX_N");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  try {
    const int v = std::stoi(raw);
    if (v >= 1) return v;
  } catch (const std::exception&) {
  }
  throw UsageError(std::string("SYMGB_MAX_N must be a positive integer, got '") + raw + "'");
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, ',')) out.push_back(cur);
  if (!s.empty() && s.back() == ',') out.emplace_back();
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

/// Index of an "eK" token, if the token has that shape.
std::optional<int> elementary_index(const std::string& token) {
  static const std::regex pattern(R"(^e(\d+)$)");
  std::smatch m;
  if (!std::regex_match(token, m, pattern)) return std::nullopt;
  if (m[1].str().size() > 6) throw UsageError("index too large in '" + token + "'");
  return std::stoi(m[1].str());
}

/// Generators from a comma list of "eK" tokens or raw polynomials.
std::vector<Polynomial> parse_generators(const std::string& gens_text, int n, const MonomialOrder& ord,
                                         bool elementary_only) {
  std::vector<Polynomial> gens;
  std::set<int> seen;
  for (const auto& raw : split_commas(gens_text)) {
    const std::string token = trim(raw);
    if (token.empty()) throw UsageError("empty generator in '" + gens_text + "'");
    if (const auto idx = elementary_index(token)) {
      if (*idx < 1 || *idx > n) throw UsageError("generator " + token + " outside e1..e" + std::to_string(n));
      if (elementary_only && !seen.insert(*idx).second) throw UsageError("repeated generator " + token);
      gens.push_back(elementary(*idx, n, ord));
      continue;
    }
    if (elementary_only) throw UsageError("explore takes elementary indices only, got '" + token + "'");
    gens.push_back(parse_polynomial(token, ord));
  }
  if (gens.empty()) throw UsageError("no generators given");
  return gens;
}

std::string join_polys(const std::vector<Polynomial>& ps) {
  std::string out = "{";
  for (std::size_t i = 0; i < ps.size(); ++i) out += (i ? ", " : "") + to_string(ps[i]);
  return out + "}";
}

std::string clip(std::string s, std::size_t limit = 240) {
  if (s.size() > limit) s = s.substr(0, limit) + "...";
  return s;
}

// ---------------------------------------------------------------- sym

struct SymArgs {
  std::string kind;
  int k = 0;
  int n = 0;
};

int cmd_sym(const SymArgs& a, std::ostream& out) {
  const SymKind kind = parse_sym_kind(a.kind);
  if (a.k < 0) throw UsageError("--k must be non-negative");
  if (kind == SymKind::powersum && a.k < 1) throw UsageError("power sums need --k >= 1");
  const int n = checked_n(a.n);
  out << to_string(symmetric(kind, a.k, n, MonomialOrder::lex(static_cast<std::size_t>(n)))) << '\n';
  return kVerified;
}

// ---------------------------------------------------------------- gb / explore

struct GbArgs {
  int n = 0;
  std::string gens;
  std::string order = "lex";
  std::string format = "text";
  bool stats = false;
};

void print_basis(const GroebnerBasis& G, const std::string& format, std::ostream& out) {
  for (const auto& g : G.elements) {
    if (format == "records")
      out << json{{"poly", to_string(g)}, {"leading_monomial", to_string(g.leading_monomial())}}.dump() << '\n';
    else
      out << to_string(g) << '\n';
  }
}

int cmd_gb(const GbArgs& a, std::ostream& out, std::ostream& err) {
  const int n = checked_n(a.n);
  const MonomialOrder ord(static_cast<std::size_t>(n), parse_order_kind(a.order));
  const auto gens = parse_generators(a.gens, n, ord, false);
  BuchbergerStats stats;
  GroebnerBasis G;
  try {
    G = reduced_groebner_basis(gens, ord, {}, &stats);
  } catch (const ZeroIdealError&) {
    err << "zero ideal: the reduced basis is empty\n";
    return kVerified;
  }
  print_basis(G, a.format, out);
  if (a.stats)
    err << "pairs=" << stats.pairs_considered << " skipped=" << stats.pairs_skipped
        << " zero=" << stats.zero_reductions << " added=" << stats.basis_additions << '\n';
  return kVerified;
}

int cmd_explore(const GbArgs& a, std::ostream& out) {
  const int n = checked_n(a.n);
  const MonomialOrder ord(static_cast<std::size_t>(n), parse_order_kind(a.order));
  const auto gens = parse_generators(a.gens, n, ord, true);
  const GroebnerBasis G = reduced_groebner_basis(gens, ord);
  if (a.format == "records") {
    json rec{{"n", n}, {"generators", a.gens}, {"order", a.order}, {"size", G.elements.size()}};
    rec["basis"] = json::array();
    rec["leading_monomials"] = json::array();
    for (const auto& g : G.elements) {
      rec["basis"].push_back(to_string(g));
      rec["leading_monomials"].push_back(to_string(g.leading_monomial()));
    }
    out << rec.dump() << '\n';
    return kVerified;
  }
  out << "basis:\n";
  for (const auto& g : G.elements) out << "  " << to_string(g) << '\n';
  out << "leading monomials:\n";
  for (const auto& g : G.elements) out << "  " << to_string(g.leading_monomial()) << '\n';
  out << "size: " << G.elements.size() << '\n';
  return kVerified;
}

// ---------------------------------------------------------------- involution

struct InvolutionArgs {
  std::string family;
  int k = 0;
  int n = 0;
  std::string rule;
  bool trace = false;
  std::string format = "text";
};

int cmd_involution(const InvolutionArgs& a, std::ostream& out) {
  const Family family = parse_family(a.family);
  const InvolutionRule rule = a.rule.empty() ? default_rule(family) : parse_rule(a.rule);
  if (a.k < 1) throw UsageError("--k must be >= 1");
  const int n = checked_n(a.n);
  if (a.trace)
    for (const auto& line : trace_orbits(family, a.k, n, rule)) out << line << '\n';
  const CertReport r = certify_involution(family, a.k, n, rule);
  if (a.format == "records") {
    out << json{{"family", to_string(family)},
                {"rule", to_string(rule)},
                {"k", r.k},
                {"n", r.n},
                {"carrier_size", r.carrier_size},
                {"carrier_size_matches", r.carrier_size_matches},
                {"carrier_closed", r.carrier_closed},
                {"is_involution", r.is_involution},
                {"sign_reversing", r.sign_reversing},
                {"fixed_point_free", r.fixed_point_free},
                {"weight_preserving", r.weight_preserving},
                {"weight_sum_zero", r.weight_sum_zero},
                {"matches_identity_terms", r.matches_identity_terms},
                {"trivial_range", r.trivial_range},
                {"status", r.ok() ? "PASS" : "FAIL"},
                {"witness", r.witness}}
               .dump()
        << '\n';
    return r.ok() ? kVerified : kMismatch;
  }
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  out << "family: " << to_string(family) << " rule: " << to_string(rule) << " k=" << r.k << " n=" << r.n << '\n';
  if (r.trivial_range) out << "warning: k > n, the carrier is empty and the identity is trivial\n";
  out << "carrier size: " << r.carrier_size << " (formula " << carrier_size_formula(family, a.k, n) << ")\n"
      << "carrier closed: " << yn(r.carrier_closed) << '\n'
      << "involution: " << yn(r.is_involution) << '\n'
      << "sign reversing: " << yn(r.sign_reversing) << '\n'
      << "fixed-point free: " << yn(r.fixed_point_free) << '\n'
      << "weight preserving: " << yn(r.weight_preserving) << '\n'
      << "weight sum: " << clip(to_string(r.weight_sum)) << '\n'
      << "identity terms match: " << yn(r.matches_identity_terms) << '\n';
  if (!r.witness.empty()) out << "witness: " << r.witness << '\n';
  out << "result: " << (r.ok() ? "PASS" : "FAIL") << '\n';
  return r.ok() ? kVerified : kMismatch;
}

// ---------------------------------------------------------------- hilbert

struct HilbertArgs {
  int n = 0;
  std::string gens;
  std::string format = "text";
};

int cmd_hilbert(const HilbertArgs& a, std::ostream& out) {
  const int n = checked_n(a.n);
  const auto ord = MonomialOrder::lex(static_cast<std::size_t>(n));
  std::string gens_text = a.gens;
  if (gens_text.empty())
    for (int i = 1; i <= n; ++i) gens_text += (i > 1 ? ",e" : "e") + std::to_string(i);
  const bool full_elementary = a.gens.empty();
  const GroebnerBasis G = reduced_groebner_basis(parse_generators(gens_text, n, ord, false), ord);
  SeriesPoly series;
  try {
    series = staircase_series(G.leading_monomials(), ord.arity());
  } catch (const NotArtinianError& e) {
    throw UsageError(e.what());
  }
  std::optional<SeriesPoly> closed;
  if (full_elementary) closed = closed_form_series(n);
  const bool match = !closed || *closed == series;

  if (a.format == "records") {
    json rec{{"n", n}, {"series", series.coeffs}, {"dimension", series.total()}};
    if (closed) {
      rec["closed_form"] = closed->coeffs;
      rec["match"] = match;
    }
    out << rec.dump() << '\n';
  } else {
    out << "series: " << to_string(series) << '\n';
    if (closed) out << "closed form: " << to_string(*closed) << '\n';
    out << "dimension: " << series.total() << '\n';
    if (closed) out << "match: " << (match ? "yes" : "no") << '\n';
  }
  return match ? kVerified : kMismatch;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string target;
  std::string n_range;
  std::optional<int> k;
  std::string order = "lex";
  std::string format = "text";
};

struct Cell {
  int k = 0;
  int n = 0;
};

struct CellResult {
  bool pass = false;
  std::string witness;
};

struct Target {
  std::string name;
  Range default_n;
  std::function<std::vector<int>(int n)> k_values;
  std::function<CellResult(int k, int n, const MonomialOrder& ord)> run;
};

std::vector<int> iota_range(int lo, int hi) {
  std::vector<int> v;
  for (int i = lo; i <= hi; ++i) v.push_back(i);
  return v;
}

CellResult compare_bases(const std::vector<Polynomial>& gens, std::vector<Polynomial> expected,
                         const MonomialOrder& ord) {
  const GroebnerBasis G = reduced_groebner_basis(gens, ord);
  for (auto& e : expected) e = e.with_order(ord);
  std::sort(expected.begin(), expected.end(),
            [&](const auto& x, const auto& y) { return ord.greater(x.leading_monomial(), y.leading_monomial()); });
  if (G.elements == expected) return {true, ""};
  return {false, clip("computed " + join_polys(G.elements) + " expected " + join_polys(expected), 2000)};
}

CellResult identity_result(const Polynomial& diff) {
  if (diff.is_zero()) return {true, ""};
  return {false, "difference " + clip(to_string(diff))};
}

CellResult involution_result(Family family, int k, int n) {
  const CertReport r = certify_involution(family, k, n);
  return {r.ok(), r.ok() ? "" : r.witness};
}

std::vector<Target> targets() {
  auto elementary_gens = [](const std::vector<int>& idx, int n, const MonomialOrder& ord) {
    std::vector<Polynomial> gens;
    for (int i : idx) gens.push_back(elementary(i, n, ord));
    return gens;
  };
  auto up_to_n = [](int n) { return iota_range(1, n); };
  auto past_n = [](int n) { return iota_range(1, n + 2); };
  return {
      {"gb-ek", {1, 6}, up_to_n,
       [=](int k, int n, const MonomialOrder& ord) {
         return compare_bases(elementary_gens(iota_range(1, k), n, ord), conjectured_gb_ek(k, n), ord);
       }},
      {"gb-e1ek", {1, 6}, [](int n) { return iota_range(2, n); },
       [=](int k, int n, const MonomialOrder& ord) {
         return compare_bases(elementary_gens({1, k}, n, ord), conjectured_gb_e1ek(k, n), ord);
       }},
      {"hkn", {1, 8}, past_n, [](int k, int n, const MonomialOrder&) { return identity_result(prop_hkn_difference(k, n)); }},
      {"ekn", {1, 8}, past_n, [](int k, int n, const MonomialOrder&) { return identity_result(prop_ekn_difference(k, n)); }},
      {"telescope", {1, 8}, up_to_n,
       [](int k, int n, const MonomialOrder&) { return identity_result(telescope_difference(k, n)); }},
      {"newton", {1, 8}, past_n, [](int k, int n, const MonomialOrder&) { return identity_result(newton_difference(k, n)); }},
      {"e1ek-reduction", {1, 8}, past_n,
       [](int k, int n, const MonomialOrder&) {
         const auto [first, second] = e1ek_reduction_differences(k, n);
         if (!first.is_zero()) return identity_result(first);
         return identity_result(second);
       }},
      {"involution-hkn", {1, 6}, up_to_n, [](int k, int n, const MonomialOrder&) { return involution_result(Family::hkn, k, n); }},
      {"involution-ekn", {1, 6}, up_to_n, [](int k, int n, const MonomialOrder&) { return involution_result(Family::ekn, k, n); }},
      {"hilbert", {1, 6}, [](int n) { return std::vector<int>{n}; },
       [=](int, int n, const MonomialOrder& ord) {
         const GroebnerBasis G = reduced_groebner_basis(elementary_gens(iota_range(1, n), n, ord), ord);
         CellResult r;
         SeriesPoly series;
         try {
           series = staircase_series(G.leading_monomials(), ord.arity());
         } catch (const NotArtinianError& e) {
           return CellResult{false, e.what()};
         }
         const SeriesPoly closed = closed_form_series(n);
         std::uint64_t factorial = 1;
         for (int i = 2; i <= n; ++i) factorial *= static_cast<std::uint64_t>(i);
         r.pass = series == closed && series.total() == factorial;
         r.witness = "dim=" + std::to_string(series.total()) + " series=" + to_string(series);
         if (!r.pass) r.witness += " expected=" + to_string(closed);
         return r;
       }},
  };
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  const auto all = targets();
  const auto it = std::find_if(all.begin(), all.end(), [&](const Target& t) { return t.name == a.target; });
  if (it == all.end()) throw UsageError("unknown verify target '" + a.target + "'");
  Range range = a.n_range.empty() ? it->default_n : parse_range(a.n_range);
  if (static_cast<std::size_t>(range.hi) > kMaxArity) throw UsageError("--n exceeds " + std::to_string(kMaxArity));
  if (const auto cap = env_max_n(); cap && range.hi > *cap) {
    err << "note: SYMGB_MAX_N=" << *cap << " caps the sweep at n=" << *cap << '\n';
    range.hi = *cap;
  }
  if (a.k && *a.k < 1) throw UsageError("--k must be >= 1");

  std::vector<Cell> cells;
  for (int n = range.lo; n <= range.hi; ++n)
    for (int k : it->k_values(n))
      if (!a.k || *a.k == k) cells.push_back({k, n});

  std::size_t passed = 0;
  for (const auto& c : cells) {
    const MonomialOrder ord(static_cast<std::size_t>(c.n), parse_order_kind(a.order));
    const CellResult r = it->run(c.k, c.n, ord);
    if (r.pass) ++passed;
    const char* status = r.pass ? "PASS" : "FAIL";
    if (a.format == "records") {
      out << json{{"k", c.k}, {"n", c.n}, {"target", a.target}, {"status", status}, {"witness", r.witness}}.dump()
          << '\n';
    } else {
      out << a.target << " k=" << c.k << " n=" << c.n << " " << status;
      if (!r.witness.empty()) out << (r.pass ? " " : " witness: ") << r.witness;
      out << '\n';
    }
  }
  if (a.format != "records")
    out << "summary: " << passed << "/" << cells.size() << " PASS\n";
  return passed == cells.size() ? kVerified : kMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"symgb: Groebner bases of symmetric-polynomial ideals"};
  app.name("symgb");
  app.require_subcommand(1);

  const std::vector<std::string> formats{"text", "records"};
  const std::vector<std::string> orders{"lex", "grevlex"};

  SymArgs sym;
  auto* sym_cmd = app.add_subcommand("sym", "Print e_{k,n}, h_{k,n} or p_{k,n}");
  sym_cmd->add_option("--kind", sym.kind, "e, h or p")->required()->check(CLI::IsMember({"e", "h", "p"}));
  sym_cmd->add_option("--k", sym.k, "degree")->required();
  sym_cmd->add_option("--n", sym.n, "number of variables")->required();

  GbArgs gb;
  auto* gb_cmd = app.add_subcommand("gb", "Reduced Groebner basis of an ideal");
  gb_cmd->add_option("--n", gb.n, "number of variables")->required();
  gb_cmd->add_option("--gens", gb.gens, "comma list of eK tokens or polynomials")->required();
  gb_cmd->add_option("--order", gb.order, "monomial order")->check(CLI::IsMember(orders));
  gb_cmd->add_option("--format", gb.format)->check(CLI::IsMember(formats));
  gb_cmd->add_flag("--stats", gb.stats, "print Buchberger counters to stderr");

  GbArgs ex;
  auto* ex_cmd = app.add_subcommand("explore", "Reduced basis of an arbitrary elementary-generator ideal");
  ex_cmd->add_option("--n", ex.n, "number of variables")->required();
  ex_cmd->add_option("--gens", ex.gens, "comma list of distinct eK tokens")->required();
  ex_cmd->add_option("--order", ex.order, "monomial order")->check(CLI::IsMember(orders));
  ex_cmd->add_option("--format", ex.format)->check(CLI::IsMember(formats));

  VerifyArgs ver;
  int ver_k = 0;
  auto* ver_cmd = app.add_subcommand("verify", "Sweep a theorem or identity over (k, n)");
  ver_cmd->add_option("target", ver.target, "target name")->required();
  ver_cmd->add_option("--n", ver.n_range, "N or A..B");
  auto* ver_k_opt = ver_cmd->add_option("--k", ver_k, "restrict to one k");
  ver_cmd->add_option("--order", ver.order, "monomial order for basis targets")->check(CLI::IsMember(orders));
  ver_cmd->add_option("--format", ver.format)->check(CLI::IsMember(formats));

  InvolutionArgs inv;
  auto* inv_cmd = app.add_subcommand("involution", "Certify a sign-reversing involution");
  inv_cmd->add_option("--family", inv.family, "hkn or ekn")->required()->check(CLI::IsMember({"hkn", "ekn"}));
  inv_cmd->add_option("--k", inv.k)->required();
  inv_cmd->add_option("--n", inv.n)->required();
  inv_cmd->add_option("--rule", inv.rule, "min or max (default per family)")->check(CLI::IsMember({"min", "max"}));
  inv_cmd->add_flag("--trace", inv.trace, "print each cancelling orbit");
  inv_cmd->add_option("--format", inv.format)->check(CLI::IsMember(formats));

  HilbertArgs hil;
  auto* hil_cmd = app.add_subcommand("hilbert", "Hilbert series of the quotient by <e_1..e_n>");
  hil_cmd->add_option("--n", hil.n)->required();
  hil_cmd->add_option("--gens", hil.gens, "override generators (must give an artinian quotient)");
  hil_cmd->add_option("--format", hil.format)->check(CLI::IsMember(formats));

  std::vector<std::string> argv_storage{"symgb"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kVerified;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kVerified;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*sym_cmd) return cmd_sym(sym, out);
    if (*gb_cmd) return cmd_gb(gb, out, err);
    if (*ex_cmd) return cmd_explore(ex, out);
    if (*ver_cmd) {
      if (*ver_k_opt) ver.k = ver_k;
      return cmd_verify(ver, out, err);
    }
    if (*inv_cmd) return cmd_involution(inv, out);
    if (*hil_cmd) return cmd_hilbert(hil, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace symgb::cli
