// SPDX-License-Identifier: Apache-2.0
#include "aoa/dm.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <string>
#include <functional>
#include <numeric>
#include <random>

#include "aoa/io.hpp"
#include "aoa/numeric.hpp"
#include "aoa/verify.hpp"
#include "catalog_data.hpp"

namespace aoa {

namespace {

using Clock = std::chrono::steady_clock;

class BudgetMeter {
 public:
  explicit BudgetMeter(const SearchBudget& b) : budget_(b), start_(Clock::now()) {}

  // Counts one node; false once the budget is spent.
  bool tick() {
    ++nodes_;
    if (budget_.nodes && nodes_ > budget_.nodes) return exceeded();
    if (budget_.time.count() && (nodes_ & 0xfff) == 0 && Clock::now() - start_ > budget_.time) return exceeded();
    return true;
  }
  bool exceeded_flag() const noexcept { return exceeded_; }
  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  bool exceeded() {
    exceeded_ = true;
    return false;
  }
  SearchBudget budget_;
  Clock::time_point start_;
  std::uint64_t nodes_ = 0;
  bool exceeded_ = false;
};

std::vector<std::uint32_t> value_order(std::uint32_t n, const std::optional<std::uint64_t>& seed) {
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  if (seed) {
    std::mt19937_64 rng(*seed);
    std::shuffle(order.begin(), order.end(), rng);
  }
  return order;
}

// A family of "this value is already taken" flags, one per difference list.
struct Taken {
  explicit Taken(std::uint32_t n) : flags(n, 0) {}
  std::vector<std::uint8_t> flags;
  bool operator[](std::uint32_t x) const { return flags[x] != 0; }
  void set(std::uint32_t x) { flags[x] = 1; }
  void clear(std::uint32_t x) { flags[x] = 0; }
};

class DmSearcher {
 public:
  DmSearcher(const GroupSpec& g, const SearchBudget& budget)
      : n_(g.order()), table_(g), meter_(budget), order_(value_order(n_, budget.seed)), x_(n_, 0), y_(n_, 0) {
    for (auto* t : {&tx_, &ty_, &txi_, &tyi_, &txy_}) *t = Taken(n_);
  }

  SearchStatus run() {
    mark_xy(0, 0, 0, true);
    if (solve(1)) return SearchStatus::Found;
    return meter_.exceeded_flag() ? SearchStatus::BudgetExceeded : SearchStatus::Exhausted;
  }

  Table entries() const {
    Table t(n_, 4);
    for (std::uint32_t i = 0; i < n_; ++i) {
      t.at(i, 0) = 0;
      t.at(i, 1) = i;
      t.at(i, 2) = x_[i];
      t.at(i, 3) = y_[i];
    }
    return t;
  }
  std::uint64_t nodes() const noexcept { return meter_.nodes(); }

 private:
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return table_.sub(a, b); }

  void mark_xy(std::uint32_t i, std::uint32_t x, std::uint32_t y, bool on) {
    auto f = [on](Taken& t, std::uint32_t v) { on ? t.set(v) : t.clear(v); };
    f(tx_, x);
    f(ty_, y);
    f(txi_, sub(x, i));
    f(tyi_, sub(y, i));
    f(txy_, sub(x, y));
  }
  bool solve(std::uint32_t i) {
    if (i == n_) return true;
    for (std::uint32_t x : order_) {
      if (tx_[x] || txi_[sub(x, i)]) continue;
      for (std::uint32_t y : order_) {
        if (ty_[y] || tyi_[sub(y, i)] || txy_[sub(x, y)]) continue;
        if (!meter_.tick()) return false;
        x_[i] = x;
        y_[i] = y;
        mark_xy(i, x, y, true);
        if (solve(i + 1)) return true;
        mark_xy(i, x, y, false);
        if (meter_.exceeded_flag()) return false;
      }
    }
    return false;
  }

  std::uint32_t n_;
  GroupTable table_;
  BudgetMeter meter_;
  std::vector<std::uint32_t> order_;
  std::vector<std::uint32_t> x_, y_;
  Taken tx_{1}, ty_{1}, txi_{1}, tyi_{1}, txy_{1};
};

// Completions z of a partial map G -> G with z(0) = 0 such that z and every
// z - ref_j are bijections. Rows are chosen by fewest remaining candidates and
// the candidate sets are kept as bitmasks, so |G| <= 64.
class TransversalSearch {
 public:
  TransversalSearch(const GroupTable& g, std::vector<const std::vector<std::uint32_t>*> refs,
                    const std::vector<std::uint32_t>& order, BudgetMeter& meter)
      : g_(g), n_(g.order()), refs_(std::move(refs)), order_(order), meter_(meter), z_(n_, 0) {}

  // Calls f(z) for every completion until f returns false or the budget runs
  // out; returns false in both of those cases.
  template <class F>
  bool each(F&& f) {
    std::vector<std::uint64_t> cand(n_, 0);
    const std::uint64_t all = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    for (std::uint32_t i = 1; i < n_; ++i) {
      cand[i] = all & ~std::uint64_t{1};
      for (const auto* r : refs_) cand[i] &= ~(std::uint64_t{1} << (*r)[i]);
    }
    std::uint64_t open = all & ~std::uint64_t{1};
    return descend(cand, open, f);
  }

 private:
  template <class F>
  bool descend(const std::vector<std::uint64_t>& cand, std::uint64_t open, F& f) {
    if (!meter_.tick()) return false;
    if (open == 0) return f(static_cast<const std::vector<std::uint32_t>&>(z_));
    std::uint32_t best = 0;
    int fewest = 65;
    for (std::uint64_t m = open; m; m &= m - 1) {
      const auto i = static_cast<std::uint32_t>(std::countr_zero(m));
      const int c = std::popcount(cand[i]);
      if (c < fewest) {
        fewest = c;
        best = i;
        if (c <= 1) break;
      }
    }
    if (fewest == 0) return true;
    const std::uint64_t rest = open & ~(std::uint64_t{1} << best);
    for (std::uint32_t v : order_) {
      if (!(cand[best] >> v & 1)) continue;
      z_[best] = v;
      std::vector<std::uint64_t> next = cand;
      for (std::uint64_t m = rest; m; m &= m - 1) {
        const auto j = static_cast<std::uint32_t>(std::countr_zero(m));
        next[j] &= ~(std::uint64_t{1} << v);
        for (const auto* r : refs_) {
          const std::uint32_t clash = g_.add((*r)[j], g_.sub(v, (*r)[best]));
          next[j] &= ~(std::uint64_t{1} << clash);
        }
      }
      if (!descend(next, rest, f)) return false;
    }
    return true;
  }

  const GroupTable& g_;
  std::uint32_t n_;
  std::vector<const std::vector<std::uint32_t>*> refs_;
  const std::vector<std::uint32_t>& order_;
  BudgetMeter& meter_;
  std::vector<std::uint32_t> z_;
};

// A normalized (n,4,1)-DM with adder is rows (0, i, x_i, y_i) with shifts s_i
// where x, y, x + s and y + s are orthomorphisms (z and z - id bijective), s
// and x - y are bijections, and x_0 = y_0 = s_0 = 0. Writing x' = x + s and
// y' = y + s, both x' and y lie among the orthomorphisms z with z - x
// bijective, and y' = y + x' - x. So for each orthomorphism x the search lists
// those mates and tests every ordered pair of them.
struct PairingResult {
  SearchStatus status = SearchStatus::Exhausted;
  Table entries;
  std::vector<std::uint32_t> adder;
  std::uint64_t nodes = 0;
};

PairingResult pairing_search(const GroupSpec& group, const SearchBudget& budget) {
  const GroupTable g(group);
  const std::uint32_t n = g.order();
  require(n <= 64, Errc::WrongParameters, "the adder search handles groups of order at most 64");
  BudgetMeter meter(budget);
  const auto order = value_order(n, budget.seed);
  std::vector<std::uint32_t> zero(n, 0), id(n);
  std::iota(id.begin(), id.end(), 0);

  PairingResult out;
  bool found = false;
  std::vector<std::uint32_t> yp(n);
  std::vector<std::uint8_t> seen_v(n), seen_d(n);
  auto orthomorphism = [&](const std::vector<std::uint32_t>& z) {
    std::fill(seen_v.begin(), seen_v.end(), 0);
    std::fill(seen_d.begin(), seen_d.end(), 0);
    for (std::uint32_t i = 0; i < n; ++i) {
      const std::uint32_t d = g.sub(z[i], i);
      if (seen_v[z[i]] || seen_d[d]) return false;
      seen_v[z[i]] = seen_d[d] = 1;
    }
    return true;
  };

  TransversalSearch xs(g, {&zero, &id}, order, meter);
  xs.each([&](const std::vector<std::uint32_t>& x) {
    std::vector<std::vector<std::uint32_t>> mates;
    TransversalSearch ms(g, {&zero, &id, &x}, order, meter);
    if (!ms.each([&](const std::vector<std::uint32_t>& z) {
          mates.push_back(z);
          return true;
        }))
      return false;
    for (const auto& xp : mates) {
      for (const auto& y : mates) {
        if (&xp == &y || !meter.tick()) continue;
        for (std::uint32_t i = 0; i < n; ++i) yp[i] = g.add(y[i], g.sub(xp[i], x[i]));
        if (!orthomorphism(yp)) continue;
        out.entries = Table(n, 4);
        out.adder.assign(n, 0);
        for (std::uint32_t i = 0; i < n; ++i) {
          out.entries.at(i, 1) = i;
          out.entries.at(i, 2) = x[i];
          out.entries.at(i, 3) = y[i];
          out.adder[i] = g.sub(xp[i], x[i]);
        }
        found = true;
        return false;
      }
      if (meter.exceeded_flag()) return false;
    }
    return true;
  });
  out.nodes = meter.nodes();
  out.status = found ? SearchStatus::Found
                     : (meter.exceeded_flag() ? SearchStatus::BudgetExceeded : SearchStatus::Exhausted);
  return out;
}

class AdderSearcher {
 public:
  AdderSearcher(const DifferenceMatrix& d, const SearchBudget& budget)
      : d_(d), n_(d.n()), table_(d.group()), meter_(budget), order_(value_order(n_, budget.seed)), s_(n_, 0) {
    for (auto* t : {&ts_, &t20_, &t30_, &t21_, &t31_}) *t = Taken(n_);
  }

  SearchStatus run() {
    if (solve(0)) return SearchStatus::Found;
    return meter_.exceeded_flag() ? SearchStatus::BudgetExceeded : SearchStatus::Exhausted;
  }
  const std::vector<std::uint32_t>& adder() const noexcept { return s_; }
  std::uint64_t nodes() const noexcept { return meter_.nodes(); }

 private:
  // The four shifted differences of row i under shift s.
  std::array<std::uint32_t, 4> diffs(std::uint32_t i, std::uint32_t s) const {
    const std::uint32_t c2 = table_.add(d_.at(i, 2), s), c3 = table_.add(d_.at(i, 3), s);
    return {table_.sub(c2, d_.at(i, 0)), table_.sub(c3, d_.at(i, 0)), table_.sub(c2, d_.at(i, 1)),
            table_.sub(c3, d_.at(i, 1))};
  }
  void mark(std::uint32_t s, const std::array<std::uint32_t, 4>& v, bool on) {
    auto f = [on](Taken& t, std::uint32_t x) { on ? t.set(x) : t.clear(x); };
    f(ts_, s);
    f(t20_, v[0]);
    f(t30_, v[1]);
    f(t21_, v[2]);
    f(t31_, v[3]);
  }

  bool solve(std::uint32_t i) {
    if (i == n_) return true;
    for (std::uint32_t s : order_) {
      if (ts_[s]) continue;
      auto v = diffs(i, s);
      if (t20_[v[0]] || t30_[v[1]] || t21_[v[2]] || t31_[v[3]]) continue;
      if (!meter_.tick()) return false;
      s_[i] = s;
      mark(s, v, true);
      if (solve(i + 1)) return true;
      mark(s, v, false);
      if (meter_.exceeded_flag()) return false;
    }
    return false;
  }

  const DifferenceMatrix& d_;
  std::uint32_t n_;
  GroupTable table_;
  BudgetMeter meter_;
  std::vector<std::uint32_t> order_;
  std::vector<std::uint32_t> s_;
  Taken ts_{1}, t20_{1}, t30_{1}, t21_{1}, t31_{1};
};

bool is_product_of(const GroupSpec& g, std::uint32_t cyclic_order, std::optional<std::uint32_t> cyclic2,
                   std::optional<std::uint32_t> field2) {
  const auto& c = g.components();
  if (c.size() != 2) return false;
  auto* first = std::get_if<Cyclic>(&c[0]);
  if (!first || first->n != cyclic_order) return false;
  if (cyclic2) {
    auto* second = std::get_if<Cyclic>(&c[1]);
    return second && second->n == *cyclic2;
  }
  auto* second = std::get_if<FieldAdditive>(&c[1]);
  return second && field2 && second->field.q() == *field2;
}

// Plain backtracking for sigma with sigma and u -> u + sigma(u) injective.
std::optional<std::vector<std::uint32_t>> search_complete_mapping(const GroupSpec& group, std::uint64_t budget) {
  const GroupTable g(group);
  const std::uint32_t n = group.order();
  std::vector<std::uint32_t> sigma(n, 0);
  Taken image(n), sum(n);
  std::uint64_t nodes = 0;
  std::function<bool(std::uint32_t)> solve = [&](std::uint32_t u) -> bool {
    if (u == n) return true;
    for (std::uint32_t v = 0; v < n; ++v) {
      const std::uint32_t w = g.add(u, v);
      if (image[v] || sum[w]) continue;
      if (++nodes > budget) return false;
      sigma[u] = v;
      image.set(v);
      sum.set(w);
      if (solve(u + 1)) return true;
      image.clear(v);
      sum.clear(w);
      if (nodes > budget) return false;
    }
    return false;
  };
  if (solve(0)) return sigma;
  return std::nullopt;
}

}  // namespace

std::string_view status_name(SearchStatus s) noexcept {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::Exhausted: return "exhausted";
    case SearchStatus::BudgetExceeded: return "budget-exceeded";
  }
  return "unknown";
}

DifferenceMatrix dm_multiplicative(std::uint32_t n) {
  require(n >= 5 && gcd(n, 6) == 1, Errc::BadModulus,
          "the multiplicative matrix needs gcd(n, 6) = 1 and n >= 5, got n = " + std::to_string(n));
  Table t(n, 4);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < 4; ++j) t.at(i, j) = static_cast<Symbol>((std::uint64_t{i} * j) % n);
  DifferenceMatrix d(GroupSpec::cyclic(n), std::move(t));
  require_ok(check_dm(d), "multiplicative difference matrix");
  return d;
}

namespace {

DmSearchResult plain_search(const GroupSpec& group, const SearchBudget& budget) {
  DmSearcher searcher(group, budget);
  DmSearchResult out;
  out.status = searcher.run();
  out.nodes = searcher.nodes();
  if (out.status == SearchStatus::Found) {
    DifferenceMatrix d(group, searcher.entries());
    require_ok(check_dm(d), "searched difference matrix");
    out.dm = std::move(d);
  }
  return out;
}

}  // namespace

DmSearchResult dm_search(const GroupSpec& group, SearchBudget budget, bool with_adder) {
  require(group.order() >= 2, Errc::WrongParameters, "group too small");
  if (!with_adder) return plain_search(group, budget);

  auto r = pairing_search(group, budget);
  DmSearchResult out;
  out.status = r.status;
  out.nodes = r.nodes;
  if (r.status == SearchStatus::Found) {
    DifferenceMatrix d(group, std::move(r.entries), std::move(r.adder));
    require_ok(check_dm(d), "searched difference matrix");
    require_ok(check_adder(d), "searched adder");
    out.dm = std::move(d);
  }
  return out;
}

std::vector<GroupSpec> abelian_groups(std::uint32_t n) {
  require(n >= 1, Errc::WrongParameters, "group order must be positive");
  // Partitions of each prime exponent, the single-part partition first.
  std::vector<std::pair<std::uint64_t, std::vector<std::vector<unsigned>>>> per_prime;
  for (auto [p, e] : factorize(n)) {
    std::vector<std::vector<unsigned>> parts;
    std::vector<unsigned> cur;
    std::function<void(unsigned, unsigned)> gen = [&](unsigned left, unsigned cap) {
      if (left == 0) {
        parts.push_back(cur);
        return;
      }
      for (unsigned a = std::min(left, cap); a >= 1; --a) {
        cur.push_back(a);
        gen(left - a, a);
        cur.pop_back();
      }
    };
    gen(e, e);
    per_prime.emplace_back(p, std::move(parts));
  }
  std::vector<GroupSpec> out;
  std::vector<std::size_t> pick(per_prime.size(), 0);
  while (true) {
    std::vector<std::uint64_t> factors;
    for (std::size_t i = 0; i < per_prime.size(); ++i) {
      const auto& part = per_prime[i].second[pick[i]];
      if (factors.size() < part.size()) factors.resize(part.size(), 1);
      for (std::size_t j = 0; j < part.size(); ++j) factors[j] *= ipow(per_prime[i].first, part[j]);
    }
    std::vector<GroupComponent> comps;
    for (auto f : factors) comps.push_back(Cyclic{static_cast<std::uint32_t>(f)});
    if (comps.empty()) comps.push_back(Cyclic{1});
    out.emplace_back(std::move(comps));
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == per_prime[i].second.size()) pick[i++] = 0;
    if (i == pick.size()) break;
  }
  return out;
}

DmSearchResult dm_search_order(std::uint32_t n, SearchBudget budget, bool with_adder) {
  const auto start = Clock::now();
  DmSearchResult out;
  for (const auto& g : abelian_groups(n)) {
    SearchBudget b = budget;
    if (budget.nodes) {
      if (out.nodes >= budget.nodes) return {SearchStatus::BudgetExceeded, std::nullopt, out.nodes};
      b.nodes = budget.nodes - out.nodes;
    }
    if (budget.time.count()) {
      b.time = budget.time - std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
      if (b.time.count() <= 0) return {SearchStatus::BudgetExceeded, std::nullopt, out.nodes};
    }
    auto r = dm_search(g, b, with_adder);
    r.nodes += out.nodes;
    if (r.status != SearchStatus::Exhausted) return r;
    out.nodes = r.nodes;
  }
  out.status = SearchStatus::Exhausted;
  return out;
}

AdderSearchResult adder_search(const DifferenceMatrix& d, SearchBudget budget) {
  require(d.k() == 4, Errc::WrongShape, "adders are defined for (n,4,1) matrices");
  require_ok(check_dm(d), "input difference matrix");
  AdderSearcher searcher(d, budget);
  AdderSearchResult out;
  out.status = searcher.run();
  out.nodes = searcher.nodes();
  if (out.status == SearchStatus::Found) {
    auto with = d.with_adder(searcher.adder());
    require_ok(check_adder(with), "searched adder");
    out.adder = searcher.adder();
  }
  return out;
}

CompleteMapping sigma_for(const GroupSpec& group) {
  const std::uint32_t n = group.order();
  std::vector<std::uint32_t> table(n);
  if (n % 2 == 1) {
    std::iota(table.begin(), table.end(), 0);
  } else if (is_product_of(group, 6, 2, std::nullopt)) {
    for (std::uint32_t x = 0; x < 6; ++x) {
      for (std::uint32_t y = 0; y < 2; ++y) {
        std::uint32_t sx = x, sy = y;
        if (x % 2 == 0 && y == 1) sx = (x + 1) % 6;
        if (x % 2 == 1 && y == 0) {
          sx = (x + 1) % 6;
          sy = 1;
        }
        if (x % 2 == 1 && y == 1) sy = 0;
        table[group.encode({x, y})] = group.encode({sx, sy});
      }
    }
  } else if (is_product_of(group, 3, std::nullopt, 8)) {
    const Field& f = std::get<FieldAdditive>(group.components()[1]).field;
    Element alpha = 0;
    for (Element a = 1; a < 8; ++a) {
      if (f.add(f.add(f.pow(a, 3), a), 1) == 0) {
        alpha = a;
        break;
      }
    }
    require(alpha != 0, Errc::NoCompleteMappingKnown, "GF(8) has no root of x^3 + x + 1");
    for (std::uint32_t x = 0; x < 3; ++x)
      for (Element y = 0; y < 8; ++y) table[group.encode({x, y})] = group.encode({x, f.mul(alpha, y)});
  } else {
    // An abelian group with exactly one involution has a cyclic nontrivial
    // Sylow 2-subgroup and therefore no complete mapping.
    std::uint32_t involutions = 0;
    for (std::uint32_t x = 1; x < n; ++x)
      if (group.add(x, x) == 0) ++involutions;
    require(involutions != 1, Errc::NoCompleteMappingKnown,
            to_string(group) + " has a unique involution and admits no complete mapping");
    auto found = n <= 4096 ? search_complete_mapping(group, 10'000'000) : std::nullopt;
    require(found.has_value(), Errc::NoCompleteMappingKnown, "no complete mapping found for " + to_string(group));
    table = std::move(*found);
  }
  CompleteMapping sigma(group, std::move(table));
  require_ok(check_complete_mapping(sigma), "complete mapping for " + to_string(group));
  return sigma;
}

std::vector<std::uint32_t> catalog_orders() {
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < detail::kCatalogSize; ++i) out.push_back(detail::kCatalog[i].n);
  std::sort(out.begin(), out.end());
  return out;
}

DifferenceMatrix catalog(std::uint32_t n) {
  for (std::size_t i = 0; i < detail::kCatalogSize; ++i) {
    if (detail::kCatalog[i].n != n) continue;
    Object obj = parse(detail::kCatalog[i].json);
    auto* d = std::get_if<DifferenceMatrix>(&obj);
    require(d != nullptr && d->adder().has_value() && d->n() == n, Errc::SchemaViolation,
            "catalog record for n = " + std::to_string(n) + " is not a DM with adder");
    require_ok(check_dm(*d), "catalog difference matrix n = " + std::to_string(n));
    require_ok(check_adder(*d), "catalog adder n = " + std::to_string(n));
    return *d;
  }
  fail(Errc::NotInCatalog, "no catalog record for n = " + std::to_string(n));
}

}  // namespace aoa
