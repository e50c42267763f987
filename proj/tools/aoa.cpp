// SPDX-License-Identifier: Apache-2.0
// Command-line front end: construct, verify, convert, dm, feasible, gap-table.
//
// Exit codes: 0 ok, 1 verification reported a failure, 2 bad arguments or
// unreadable input, 3 construction error, 4 a constructed object failed its
// own verification, 5 search budget exhausted.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "aoa/classical.hpp"
#include "aoa/dm.hpp"
#include "aoa/feasibility.hpp"
#include "aoa/io.hpp"
#include "aoa/linear.hpp"
#include "aoa/numeric.hpp"
#include "aoa/plan.hpp"
#include "aoa/verify.hpp"

namespace {

using namespace aoa;

template <class... Fs>
struct Overload : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overload(Fs...) -> Overload<Fs...>;

enum Exit { kOk = 0, kVerifyFail = 1, kBadArgs = 2, kConstruct = 3, kBug = 4, kNotFound = 5 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_for(Errc c) {
  switch (c) {
    case Errc::NotPrime:
    case Errc::NotPrimePower:
    case Errc::DegreeZero:
    case Errc::WrongParameters:
    case Errc::ParameterViolation:
    case Errc::BadCharacteristic:
    case Errc::BadField:
    case Errc::BadModulus:
    case Errc::StrengthTooHigh:
    case Errc::OddK:
    case Errc::SchemaViolation:
    case Errc::InvariantViolation:
    case Errc::EncodingOutOfRange:
    case Errc::IoError:
    case Errc::DeskGuardExceeded:
      return kBadArgs;
    case Errc::VerificationFailed:
      return kBug;
    case Errc::NotFoundWithinBudget:
      return kNotFound;
    default:
      return kConstruct;
  }
}

std::string params_of(const Object& obj) {
  std::ostringstream os;
  std::visit(Overload{[&](const OrthogonalArray& a) { os << "OA(" << a.t() << "," << a.k() << "," << a.v() << ")"; },
                      [&](const ResolvableOA& r) {
                        os << "resolvable OA(" << r.array.t() << "," << r.array.k() << "," << r.array.v()
                           << "), " << r.partition.num_classes() << " classes of strength " << r.partition.s();
                      },
                      [&](const AugmentedOA& a) {
                        os << "AOA(" << a.s() << "," << a.t() << "," << a.k() << "," << a.v() << ")";
                      },
                      [&](const DifferenceMatrix& d) {
                        os << "(" << d.n() << "," << d.k() << ",1)-DM over " << to_string(d.group())
                           << (d.adder() ? " with adder" : "");
                      },
                      [&](const GeneratorMatrix& g) {
                        os << "generator " << g.t() << "x" << g.k() << " over GF(" << g.field().q() << ")";
                        if (g.s_split()) os << " for AOA(" << *g.s_split() << "," << g.t() << "," << g.k() << "," << g.field().q() << ")";
                      }},
             obj);
  return os.str();
}

std::uint64_t rows_of(const Object& obj) {
  return std::visit(Overload{[](const OrthogonalArray& a) -> std::uint64_t { return a.num_rows(); },
                             [](const ResolvableOA& r) -> std::uint64_t { return r.array.num_rows(); },
                             [](const AugmentedOA& a) -> std::uint64_t { return a.num_rows(); },
                             [](const DifferenceMatrix& d) -> std::uint64_t { return d.n(); },
                             [](const GeneratorMatrix& g) -> std::uint64_t { return g.t(); }},
                    obj);
}

// Every defining property of the object, in the order they are checked.
std::vector<std::pair<std::string, Verdict>> verify_all(const Object& obj) {
  std::vector<std::pair<std::string, Verdict>> out;
  std::visit(Overload{[&](const OrthogonalArray& a) { out.emplace_back("oa", check_oa(a)); },
                      [&](const ResolvableOA& r) {
                        out.emplace_back("oa", check_oa(r.array));
                        out.emplace_back("resolution", check_resolution(r));
                      },
                      [&](const AugmentedOA& a) { out.emplace_back("aoa", check_aoa(a)); },
                      [&](const DifferenceMatrix& d) {
                        out.emplace_back("dm", check_dm(d));
                        if (d.adder()) out.emplace_back("adder", check_adder(d));
                      },
                      [&](const GeneratorMatrix& g) { out.emplace_back("generator", check_generator(g)); }},
             obj);
  return out;
}

bool all_ok(const std::vector<std::pair<std::string, Verdict>>& vs) {
  for (const auto& [name, v] : vs)
    if (!v.ok()) return false;
  return true;
}

// Summaries go to stderr when the object itself streams to stdout.
std::ostream& summary_stream(const std::string& out) { return out == "-" ? std::cerr : std::cout; }

void write_object(const Object& obj, const std::string& out, const std::string& format) {
  const std::string text = format == "csv" ? to_csv(obj) : dump(obj);
  if (out == "-") {
    std::cout << text;
    return;
  }
  if (format == "csv") {
    std::ofstream f(out, std::ios::binary);
    if (!f) fail(Errc::IoError, "cannot write " + out);
    f << text;
  } else {
    save(obj, out);
  }
}

Object read_object(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return parse(ss.str());
  }
  return load(path);
}

// Verifies and writes; the summary carries the verification time.
int emit(const Object& obj, const std::string& out, const std::string& format, const std::string& tree) {
  const auto start = std::chrono::steady_clock::now();
  const auto verdicts = verify_all(obj);
  const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  auto& log = summary_stream(out);
  if (!all_ok(verdicts)) {
    for (const auto& [name, v] : verdicts)
      if (!v.ok()) std::cerr << name << ": " << v.describe() << "\n";
    return kBug;
  }
  write_object(obj, out, format);
  log << params_of(obj) << ", " << rows_of(obj) << " rows\n";
  if (!tree.empty()) log << "construction:\n" << tree;
  log << "verified in " << static_cast<long long>(ms) << " ms\n";
  return kOk;
}

template <class T>
const T& as(const Object& obj, std::string_view what) {
  if (const T* p = std::get_if<T>(&obj)) return *p;
  throw UsageError(std::string(what) + " expected, got " + std::string(kind_name(obj)));
}

OrthogonalArray as_plain_oa(const Object& obj) {
  if (const auto* r = std::get_if<ResolvableOA>(&obj)) return r->array;
  return as<OrthogonalArray>(obj, "oa");
}

struct ConstructArgs {
  std::string family;
  std::optional<unsigned> s, t;
  std::optional<std::uint64_t> k, v, q, n;
  std::vector<std::string> inputs;
  std::string out = "-";
  std::string emit = "aoa";
  std::string format = "json";
};

template <class T>
T need(const std::optional<T>& x, const char* flag) {
  if (!x) throw UsageError(std::string("missing ") + flag);
  return *x;
}

std::uint32_t small(std::uint64_t x, const char* flag) {
  if (x > UINT32_MAX) throw UsageError(std::string(flag) + " out of range");
  return static_cast<std::uint32_t>(x);
}

std::uint32_t field_order(const ConstructArgs& a) {
  auto q = a.q ? a.q : a.v;
  return small(need(q, "--q"), "--q");
}

std::string canonical_family(const std::string& f) {
  static const std::map<std::string, std::string> alias = {
      {"bush", "power-column"}, {"bush-ext", "power-column-ext"}, {"dm35", "dm-oa5"},
      {"dm36", "dm-adder-oa6"},  {"thm36", "sum-zero"},            {"thm37", "irreducible-twist"},
      {"thm38", "conic"},        {"thm39", "hyperoval"},           {"thm310", "wide"},
  };
  auto it = alias.find(f);
  return it == alias.end() ? f : it->second;
}

Object from_generator(const GeneratorMatrix& g, const std::string& emit) {
  if (emit == "gen") return g;
  if (emit != "aoa") throw UsageError("--emit must be aoa or gen");
  return expand(g);
}

DifferenceMatrix dm_input(const ConstructArgs& a, bool need_adder) {
  if (!a.inputs.empty()) return as<DifferenceMatrix>(read_object(a.inputs.front()), "dm");
  auto n = small(need(a.n ? a.n : a.v, "--n"), "--n");
  if (!need_adder && n >= 5 && gcd(n, 6) == 1) return dm_multiplicative(n);
  return catalog(n);
}

Object resolvable_out(const ResolvableOA& r, const std::string& emit) {
  if (emit == "roa") return r;
  if (emit != "aoa") throw UsageError("--emit must be aoa or roa");
  return resolvable_to_aoa(r);
}

int cmd_construct(const ConstructArgs& a) {
  const std::string fam = canonical_family(a.family);
  std::string tree;
  std::optional<Object> obj;
  if (fam == "power-column") {
    obj = vandermonde_oa(need(a.t, "--t"), field_order(a));
  } else if (fam == "power-column-ext") {
    obj = vandermonde_oa_ext(field_order(a));
  } else if (fam == "zero-sum") {
    auto k = static_cast<unsigned>(need(a.k, "--k"));
    auto v = small(need(a.v, "--v"), "--v");
    if (k % 2 == 0 && a.emit == "roa")
      obj = ResolvableOA{zero_sum_oa(k, v), zero_sum_resolution(k, v)};
    else if (k % 2 == 0 && a.emit != "oa")
      obj = zero_sum_aoa(k, v);
    else
      obj = zero_sum_oa(k, v);
  } else if (fam == "shift") {
    if (!a.inputs.empty()) {
      auto oa = as_plain_oa(read_object(a.inputs.front()));
      obj = shift_aoa(oa, a.t.value_or(static_cast<unsigned>(oa.k())));
    } else {
      auto s = need(a.s, "--s"), t = need(a.t, "--t");
      auto p = plan(s, t, t, need(a.v ? a.v : a.q, "--v"));
      tree = p.describe();
      obj = execute(p);
    }
  } else if (fam == "product") {
    if (a.inputs.size() != 2) throw UsageError("product takes exactly two --in files");
    obj = product_aoa(as<AugmentedOA>(read_object(a.inputs[0]), "aoa"),
                      as<AugmentedOA>(read_object(a.inputs[1]), "aoa"));
  } else if (fam == "dm-oa5") {
    auto d = dm_input(a, false);
    obj = resolvable_out(dm_resolvable_oa5(d, sigma_for(d.group())), a.emit);
  } else if (fam == "dm-adder-oa6") {
    auto d = dm_input(a, true);
    obj = resolvable_out(dm_adder_resolvable_oa6(d, sigma_for(d.group())), a.emit);
  } else if (fam == "sum-zero") {
    obj = from_generator(sum_zero_generator(field_order(a), static_cast<unsigned>(need(a.k, "--k"))), a.emit);
  } else if (fam == "irreducible-twist") {
    obj = from_generator(irreducible_twist_generator(field_order(a), need(a.s, "--s"), need(a.t, "--t")), a.emit);
  } else if (fam == "conic") {
    obj = from_generator(char2_conic_generator(field_order(a)), a.emit);
  } else if (fam == "hyperoval") {
    obj = from_generator(char2_hyperoval_generator(field_order(a)), a.emit);
  } else if (fam == "wide") {
    obj = from_generator(char2_wide_generator(field_order(a), a.s.value_or(1)), a.emit);
  } else if (fam == "plan") {
    auto p = plan(need(a.s, "--s"), need(a.t, "--t"), need(a.k, "--k"), need(a.v ? a.v : a.q, "--v"));
    tree = p.describe();
    if (a.emit == "plan") {
      std::cout << p.to_json().dump(2) << "\n";
      return kOk;
    }
    obj = execute(p);
  } else {
    throw UsageError("unknown family '" + a.family + "'");
  }
  if (tree.empty()) tree = fam + " -> " + params_of(*obj) + "\n";
  return emit(*obj, a.out, a.format, tree);
}

int cmd_verify(const std::string& path, const std::string& kind) {
  const Object obj = read_object(path);
  if (kind != "auto" && kind != kind_name(obj) && !(kind == "roa" && std::holds_alternative<ResolvableOA>(obj)))
    throw UsageError("file holds " + std::string(kind_name(obj)) + ", not " + kind);
  const auto verdicts = verify_all(obj);
  std::cout << params_of(obj) << "\n";
  for (const auto& [name, v] : verdicts) std::cout << name << ": " << v.describe() << "\n";
  return all_ok(verdicts) ? kOk : kVerifyFail;
}

int cmd_convert(const std::string& to, const std::string& in, std::optional<unsigned> s, const std::string& out,
                const std::string& format) {
  const Object src = read_object(in);
  Object dst = src;
  if (to == "aoa") {
    dst = resolvable_to_aoa(as<ResolvableOA>(src, "resolvable oa"));
  } else if (to == "roa") {
    dst = aoa_to_resolvable(as<AugmentedOA>(src, "aoa"));
  } else if (to == "oa-append") {
    dst = aoa_append(as<AugmentedOA>(src, "aoa"));
  } else if (to == "aoa-split") {
    dst = oa_split(as_plain_oa(src));
  } else if (to == "aoa-from-oa") {
    dst = oa_to_aoa(as_plain_oa(src), need(s, "--s"));
  } else if (to == "dual") {
    dst = dual_aoa_generator(as<GeneratorMatrix>(src, "gen"));
  } else {
    throw UsageError("unknown conversion '" + to + "'");
  }
  return emit(dst, out, format, "");
}

struct DmArgs {
  std::optional<std::uint64_t> n;
  std::string group;
  bool adder = false;
  double budget = 10;
  std::uint64_t nodes = 0;
  std::optional<std::uint64_t> seed;
  std::string in;
  std::string out = "-";
};

SearchBudget budget_of(const DmArgs& a) {
  SearchBudget b;
  b.nodes = a.nodes;
  b.time = std::chrono::milliseconds(static_cast<std::int64_t>(a.budget * 1000));
  b.seed = a.seed;
  return b;
}

int report_search(SearchStatus status, std::uint64_t nodes, const std::string& out) {
  summary_stream(out) << "search " << status_name(status) << " after " << nodes << " nodes\n";
  return status == SearchStatus::Found ? kOk : kNotFound;
}

int cmd_dm_search(const DmArgs& a) {
  auto r = !a.group.empty() ? dm_search(parse_group(a.group), budget_of(a), a.adder)
                            : dm_search_order(small(need(a.n, "--n"), "--n"), budget_of(a), a.adder);
  if (r.status != SearchStatus::Found) return report_search(r.status, r.nodes, a.out);
  int rc = emit(*r.dm, a.out, "json", "");
  report_search(r.status, r.nodes, a.out);
  return rc;
}

int cmd_dm_adder(const DmArgs& a) {
  auto d = as<DifferenceMatrix>(read_object(a.in), "dm");
  auto r = adder_search(d, budget_of(a));
  if (r.status != SearchStatus::Found) return report_search(r.status, r.nodes, a.out);
  int rc = emit(d.with_adder(*r.adder), a.out, "json", "");
  report_search(r.status, r.nodes, a.out);
  return rc;
}

std::vector<std::uint64_t> parse_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoull(item, &used));
      if (used != item.size()) throw UsageError("bad list entry '" + item + "'");
    } catch (const std::logic_error&) {
      throw UsageError("bad list entry '" + item + "'");
    }
  }
  if (out.empty()) throw UsageError("empty list");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Augmented orthogonal arrays: construct, verify, convert, search, bound."};
  app.require_subcommand(1);

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "build and verify an object");
  construct->add_option("--family", ca.family, "construction family")->required();
  construct->add_option("--s", ca.s);
  construct->add_option("--t", ca.t);
  construct->add_option("--k", ca.k);
  construct->add_option("--v", ca.v);
  construct->add_option("--q", ca.q);
  construct->add_option("--n", ca.n);
  construct->add_option("--in", ca.inputs, "input file(s)");
  construct->add_option("--out", ca.out, "output file, - for stdout");
  construct->add_option("--emit", ca.emit, "aoa, gen (linear), roa (dm), oa (zero-sum), plan");
  construct->add_option("--format", ca.format)->check(CLI::IsMember({"json", "csv"}));

  std::string vpath, vkind = "auto";
  auto* verify = app.add_subcommand("verify", "check every defining property of a file");
  verify->add_option("file", vpath)->required();
  verify->add_option("--kind", vkind)->check(CLI::IsMember({"auto", "oa", "roa", "aoa", "dm", "gen"}));

  std::string cto, cin_path, cout_path = "-", cformat = "json";
  std::optional<unsigned> cs;
  auto* convert = app.add_subcommand("convert", "convert between equivalent objects");
  convert->add_option("--to", cto)->required()->check(
      CLI::IsMember({"aoa", "roa", "oa-append", "aoa-split", "aoa-from-oa", "dual"}));
  convert->add_option("file,--in", cin_path)->required();
  convert->add_option("--s", cs);
  convert->add_option("--out", cout_path);
  convert->add_option("--format", cformat)->check(CLI::IsMember({"json", "csv"}));

  DmArgs da;
  auto* dm = app.add_subcommand("dm", "difference matrices");
  dm->require_subcommand(1);
  auto* search = dm->add_subcommand("search", "backtracking search for an (n,4,1)-DM");
  search->add_option("--n", da.n, "try each abelian group of this order, Z_n first");
  search->add_option("--group", da.group, "e.g. Z6xZ2, Z3xF8");
  search->add_flag("--adder", da.adder, "search an adder jointly");
  search->add_option("--budget", da.budget, "seconds, 0 for unlimited");
  search->add_option("--nodes", da.nodes, "node limit, 0 for unlimited");
  search->add_option("--seed", da.seed);
  search->add_option("--out", da.out);
  auto* adder = dm->add_subcommand("adder", "search an adder for a stored DM");
  adder->add_option("file,--in", da.in)->required();
  adder->add_option("--budget", da.budget);
  adder->add_option("--nodes", da.nodes);
  adder->add_option("--seed", da.seed);
  adder->add_option("--out", da.out);
  std::uint64_t cat_n = 0;
  auto* cat = dm->add_subcommand("catalog", "print an embedded DM with adder");
  cat->add_option("--n", cat_n)->required();
  cat->add_option("--out", da.out);

  unsigned ft = 0;
  std::uint64_t fk = 0, fv = 0;
  auto* feasible = app.add_subcommand("feasible", "bound check for OA(t, k, v)");
  feasible->add_option("--t", ft)->required();
  feasible->add_option("--k", fk)->required();
  feasible->add_option("--v", fv)->required();

  std::string gq, gformat = "markdown", gout = "-";
  auto* gap = app.add_subcommand("gap-table", "constructions set against the column bounds");
  gap->add_option("--q", gq, "comma-separated values")->required();
  gap->add_option("--format", gformat)->check(CLI::IsMember({"markdown", "csv"}));
  gap->add_option("--out", gout);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kBadArgs;
  }

  try {
    if (*construct) return cmd_construct(ca);
    if (*verify) return cmd_verify(vpath, vkind);
    if (*convert) return cmd_convert(cto, cin_path, cs, cout_path, cformat);
    if (*search) return cmd_dm_search(da);
    if (*adder) return cmd_dm_adder(da);
    if (*cat) return emit(catalog(small(cat_n, "--n")), da.out, "json", "");
    if (*feasible) {
      std::cout << oa_feasible(ft, fk, fv).describe() << "\n";
      return kOk;
    }
    if (*gap) {
      auto rows = gap_table(parse_list(gq));
      std::string text = gformat == "csv" ? gap_table_csv(rows) : gap_table_markdown(rows);
      if (gout == "-") {
        std::cout << text;
      } else {
        std::ofstream f(gout, std::ios::binary);
        if (!f) fail(Errc::IoError, "cannot write " + gout);
        f << text;
      }
      for (const auto& r : rows)
        if (!r.constructed) return kBug;
      return kOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadArgs;
  } catch (const VerificationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBug;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadArgs;
  }
  return kBadArgs;
}
