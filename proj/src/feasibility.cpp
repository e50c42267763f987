// SPDX-License-Identifier: Apache-2.0
#include "aoa/feasibility.hpp"

#include <functional>
#include <sstream>

#include "aoa/classical.hpp"
#include "aoa/design.hpp"
#include "aoa/error.hpp"
#include "aoa/linear.hpp"
#include "aoa/numeric.hpp"
#include "aoa/plan.hpp"
#include "aoa/verify.hpp"

namespace aoa {

std::string_view rule_name(BoundRule r) noexcept {
  switch (r) {
    case BoundRule::StrengthTwo: return "strength-two";
    case BoundRule::EvenAlphabet: return "even-alphabet";
    case BoundRule::OddAlphabet: return "odd-alphabet";
    case BoundRule::StrengthAtLeastAlphabet: return "strength-at-least-alphabet";
    case BoundRule::MdsLength: return "mds-length";
  }
  return "?";
}

std::string_view status_name(BoundStatus s) noexcept {
  return s == BoundStatus::ProvedBound ? "proved" : "conjectural";
}

FeasibilityVerdict column_bound(unsigned t, std::uint64_t v) {
  require(t >= 2 && v >= 2, Errc::WrongParameters, "column bound needs t >= 2 and v >= 2");
  if (t == 2) return {v + 1, BoundRule::StrengthTwo, BoundStatus::ProvedBound};
  if (t >= v) return {std::uint64_t{t} + 1, BoundRule::StrengthAtLeastAlphabet, BoundStatus::ProvedBound};
  if (v % 2 == 0) return {v + t - 1, BoundRule::EvenAlphabet, BoundStatus::ProvedBound};
  return {v + t - 2, BoundRule::OddAlphabet, BoundStatus::ProvedBound};
}

FeasibilityVerdict mds_max_len(unsigned t, std::uint64_t q) {
  require(t >= 2, Errc::WrongParameters, "MDS length needs t >= 2");
  const auto pp = prime_power(q);
  require(pp.has_value(), Errc::NotPrimePower, std::to_string(q) + " is not a prime power");
  if (t >= q) return {std::uint64_t{t} + 1, BoundRule::MdsLength, BoundStatus::ProvedBound};
  const bool even = pp->p == 2;
  const std::uint64_t len = (even && (t == 3 || t == q - 1)) ? q + 2 : q + 1;
  const bool proved = pp->m == 1 || q <= 27 || t <= 5 || t + 3 >= q || t <= pp->p;
  return {len, BoundRule::MdsLength, proved ? BoundStatus::ProvedBound : BoundStatus::ConjecturalBound};
}

std::string OaRuling::describe() const {
  std::ostringstream os;
  if (!column) {
    os << "NotRuledOut: no column bound below strength 2";
  } else if (ruled_out) {
    os << "RuledOut: column bound (max k = " << column->max_k << ")";
  } else {
    os << "NotRuledOut: column bound allows k <= " << column->max_k;
  }
  if (linear) {
    if (linear_ruled_out)
      os << "; no linear OA: MDS length bound (max k = " << linear->max_k << ", "
         << status_name(linear->status) << ")";
    else
      os << "; linear OA not ruled out (MDS length max k = " << linear->max_k << ")";
  }
  return os.str();
}

OaRuling oa_feasible(unsigned t, std::uint64_t k, std::uint64_t v) {
  require(v >= 2, Errc::WrongParameters, "alphabet needs v >= 2");
  OaRuling r{t, k, v, std::nullopt, false, std::nullopt, false};
  if (t < 2) return r;
  r.column = column_bound(t, v);
  r.ruled_out = k > r.column->max_k;
  if (prime_power(v)) {
    r.linear = mds_max_len(t, v);
    r.linear_ruled_out = k > r.linear->max_k;
  }
  return r;
}

std::string AoaParams::to_string() const {
  std::ostringstream os;
  os << "AOA(" << s << "," << t << "," << k << "," << v << ")";
  return os.str();
}

namespace {

// Ruling on the OA(t, k+t-s, v) equivalent to an AOA(s, t, k, v).
OaRuling ruling_for(const AoaParams& a) { return oa_feasible(a.t, a.k + a.t - a.s, a.v); }

// The generator restricted to its first k columns.
GeneratorMatrix first_columns(const GeneratorMatrix& g, std::size_t k) {
  std::vector<std::size_t> cols(k);
  for (std::size_t i = 0; i < k; ++i) cols[i] = i;
  return GeneratorMatrix(select_columns(g.entries(), cols), g.s_split());
}

void certify_linear(GapRow& row, const GeneratorMatrix& g) {
  const auto cert = certify(g);
  row.constructed = cert.verdict.ok();
  row.certificate = !cert.verdict.ok()                             ? cert.verdict.describe()
                    : cert.level == CertificateLevel::Expanded ? "expanded"
                                                                   : "generator";
}

void certify_array(GapRow& row, const AugmentedOA& a) {
  const auto v = check_aoa(a);
  row.constructed = v.ok();
  row.certificate = v.ok() ? "expanded" : v.describe();
}

struct Family {
  std::string name;
  std::string conditions;
  bool cites_linear;  // ruled out by the MDS length bound instead of the column bound
  // Candidate instances at a value, in the order they are tried.
  std::function<std::vector<AoaParams>(std::uint64_t)> candidates;
  std::function<void(GapRow&)> build;
};

bool is_char2(std::uint64_t q) { return q >= 4 && (q & (q - 1)) == 0; }

std::vector<Family> families() {
  std::vector<Family> f;
  f.push_back({"linear AOA(1,t,q,q)", "q odd prime power, 3 <= t <= q", false,
               [](std::uint64_t q) {
                 std::vector<AoaParams> c;
                 if (!prime_power(q) || q % 2 == 0) return c;
                 for (unsigned t = 3; t <= q; ++t) c.push_back({1, t, q, q});
                 return c;
               },
               [](GapRow& r) {
                 r.construction = "irreducible-twist truncated to q columns";
                 auto q = static_cast<std::uint32_t>(r.aoa.v);
                 certify_linear(r, first_columns(irreducible_twist_generator(q, 1, r.aoa.t), q));
               }});
  f.push_back({"linear AOA(s,q+1,q+1,q)", "prime power q, 1 <= s <= q-1", false,
               [](std::uint64_t q) {
                 std::vector<AoaParams> c;
                 if (!prime_power(q)) return c;
                 for (unsigned s = 1; s + 1 <= q; ++s)
                   c.push_back({s, static_cast<unsigned>(q + 1), q + 1, q});
                 return c;
               },
               [](GapRow& r) {
                 r.construction = "full-length subcode of the power-column code";
                 auto q = static_cast<std::uint32_t>(r.aoa.v);
                 certify_linear(r, full_length_aoas(vandermonde_generator(r.aoa.s, q), r.aoa.t).first);
               }});
  f.push_back({"AOA(1,k-1,k,v)", "v != 2 mod 4, k > v >= 3", false,
               [](std::uint64_t v) {
                 std::vector<AoaParams> c;
                 if (v < 3 || v % 4 == 2) return c;
                 for (std::uint64_t k = v + 1; k <= v + 4; ++k)
                   c.push_back({1, static_cast<unsigned>(k - 1), k, v});
                 return c;
               },
               [](GapRow& r) {
                 if (prime_power(r.aoa.v)) {
                   r.construction = "sum-zero";
                   certify_linear(r, sum_zero_generator(static_cast<std::uint32_t>(r.aoa.v),
                                                        static_cast<unsigned>(r.aoa.k)));
                   return;
                 }
                 auto p = plan(r.aoa.s, r.aoa.t, r.aoa.k, r.aoa.v);
                 r.construction = "plan: " + p.step;
                 certify_array(r, execute(p));
               }});
  f.push_back({"AOA(1,k-1,k,v)", "k even, k > v >= 2", false,
               [](std::uint64_t v) {
                 std::vector<AoaParams> c;
                 if (v < 2) return c;
                 for (std::uint64_t k = v + 2 - (v % 2); k <= v + 6; k += 2)
                   c.push_back({1, static_cast<unsigned>(k - 1), k, v});
                 return c;
               },
               [](GapRow& r) {
                 r.construction = "zero-sum resolution";
                 certify_array(r, zero_sum_aoa(static_cast<unsigned>(r.aoa.k), static_cast<std::uint32_t>(r.aoa.v)));
               }});
  f.push_back({"linear AOA(1,k-1,k,q)", "prime power q > 2, k >= q", false,
               [](std::uint64_t q) {
                 std::vector<AoaParams> c;
                 if (!prime_power(q) || q <= 2) return c;
                 for (std::uint64_t k = q; k <= q + 4; ++k) c.push_back({1, static_cast<unsigned>(k - 1), k, q});
                 return c;
               },
               [](GapRow& r) {
                 r.construction = "sum-zero";
                 certify_linear(r, sum_zero_generator(static_cast<std::uint32_t>(r.aoa.v), static_cast<unsigned>(r.aoa.k)));
               }});
  for (unsigned s : {1u, 2u}) {
    f.push_back({"linear AOA(" + std::to_string(s) + ",t,q+1,q)",
                 "prime power q, " + std::to_string(s + 2) + " <= t <= q", false,
                 [s](std::uint64_t q) {
                   std::vector<AoaParams> c;
                   if (!prime_power(q)) return c;
                   for (unsigned t = s + 2; t <= q; ++t) c.push_back({s, t, q + 1, q});
                   return c;
                 },
                 [](GapRow& r) {
                   r.construction = "irreducible-twist";
                   certify_linear(r, irreducible_twist_generator(static_cast<std::uint32_t>(r.aoa.v), r.aoa.s, r.aoa.t));
                 }});
  }
  f.push_back({"linear AOA(1,3,q+2,q)", "q = 2^m >= 4", false,
               [](std::uint64_t q) {
                 return is_char2(q) ? std::vector<AoaParams>{{1, 3, q + 2, q}} : std::vector<AoaParams>{};
               },
               [](GapRow& r) {
                 r.construction = "hyperoval";
                 certify_linear(r, char2_hyperoval_generator(static_cast<std::uint32_t>(r.aoa.v)));
               }});
  f.push_back({"linear AOA(1,q-1,q+2,q)", "q = 2^m >= 4", false,
               [](std::uint64_t q) {
                 return is_char2(q) ? std::vector<AoaParams>{{1, static_cast<unsigned>(q - 1), q + 2, q}}
                                    : std::vector<AoaParams>{};
               },
               [](GapRow& r) {
                 r.construction = "wide char-2 generator";
                 certify_linear(r, char2_wide_generator(static_cast<std::uint32_t>(r.aoa.v), 1));
               }});
  f.push_back({"linear AOA(3,q-1,q+2,q)", "q = 2^m > 4", true,
               [](std::uint64_t q) {
                 return is_char2(q) && q > 4 ? std::vector<AoaParams>{{3, static_cast<unsigned>(q - 1), q + 2, q}}
                                             : std::vector<AoaParams>{};
               },
               [](GapRow& r) {
                 r.construction = "wide char-2 generator";
                 certify_linear(r, char2_wide_generator(static_cast<std::uint32_t>(r.aoa.v), 3));
               }});
  return f;
}

bool cited_bound_rules_out(const Family& f, const OaRuling& r) {
  return f.cites_linear ? r.linear_ruled_out : r.ruled_out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string exception_list(const GapRow& r) {
  std::string out;
  for (const auto& e : r.exceptions) out += (out.empty() ? "" : " ") + e.to_string();
  return out;
}

}  // namespace

std::vector<GapRow> gap_table(const std::vector<std::uint64_t>& values) {
  std::vector<GapRow> rows;
  const auto fams = families();
  for (std::uint64_t value : values) {
    for (const auto& fam : fams) {
      std::vector<AoaParams> tried;
      std::optional<AoaParams> chosen;
      for (const auto& c : fam.candidates(value)) {
        if (cited_bound_rules_out(fam, ruling_for(c))) {
          chosen = c;
          break;
        }
        tried.push_back(c);
      }
      if (!chosen) continue;
      const auto need = checked_pow(chosen->v, chosen->t);
      // Linear rows can be certified from the generator; the others need rows.
      if (!fam.name.starts_with("linear") && (!need || *need > desk_guard())) continue;

      GapRow row{fam.name, fam.conditions, value, *chosen, {}, false, {}, ruling_for(*chosen), false, tried};
      row.ruled_out = cited_bound_rules_out(fam, row.oa);
      try {
        fam.build(row);
      } catch (const Error& e) {
        if (e.code() == Errc::DeskGuardExceeded) continue;
        row.certificate = e.what();
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string gap_table_markdown(const std::vector<GapRow>& rows) {
  std::ostringstream os;
  os << "| family | conditions | value | instance | construction | certificate | OA | ruling | exceptions |\n";
  os << "|---|---|---|---|---|---|---|---|---|\n";
  for (const auto& r : rows) {
    os << "| " << r.family << " | " << r.conditions << " | " << r.value << " | " << r.aoa.to_string() << " | "
       << r.construction << " | " << (r.constructed ? r.certificate : "FAILED " + r.certificate) << " | OA("
       << r.oa.t << "," << r.oa.k << "," << r.oa.v << ") | " << r.oa.describe() << " | " << exception_list(r)
       << " |\n";
  }
  return os.str();
}

std::string gap_table_csv(const std::vector<GapRow>& rows) {
  std::ostringstream os;
  os << "family,conditions,value,instance,construction,constructed,certificate,oa,ruled_out,ruling,exceptions\n";
  for (const auto& r : rows) {
    std::ostringstream oa;
    oa << "OA(" << r.oa.t << "," << r.oa.k << "," << r.oa.v << ")";
    os << csv_field(r.family) << ',' << csv_field(r.conditions) << ',' << r.value << ','
       << csv_field(r.aoa.to_string()) << ',' << csv_field(r.construction) << ','
       << (r.constructed ? "true" : "false") << ',' << csv_field(r.certificate) << ',' << csv_field(oa.str())
       << ',' << (r.ruled_out ? "true" : "false") << ',' << csv_field(r.oa.describe()) << ','
       << csv_field(exception_list(r)) << '\n';
  }
  return os.str();
}

}  // namespace aoa
