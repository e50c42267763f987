// SPDX-License-Identifier: Apache-2.0
#include "aoa/plan.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <tuple>

#include "aoa/classical.hpp"
#include "aoa/dm.hpp"
#include "aoa/linear.hpp"
#include "aoa/numeric.hpp"
#include "aoa/verify.hpp"

namespace aoa {
namespace {

std::string label(unsigned s, unsigned t, std::uint64_t k, std::uint64_t v) {
  std::ostringstream os;
  os << "AOA(" << s << "," << t << "," << k << "," << v << ")";
  return os.str();
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > UINT64_MAX - b ? UINT64_MAX : a + b;
}

std::uint64_t row_count(std::uint64_t v, unsigned t) {
  return checked_pow(v, t).value_or(UINT64_MAX);
}

PlanNode leaf(std::string step, unsigned s, unsigned t, std::uint64_t k, std::uint64_t v, int tier,
              Json extra = Json::object()) {
  PlanNode n;
  n.step = std::move(step);
  n.s = s;
  n.t = t;
  n.k = k;
  n.v = v;
  n.tier = tier;
  n.steps = 1;
  n.rows = row_count(v, t);
  n.params = Json::object();
  n.params["s"] = s;
  n.params["t"] = t;
  n.params["k"] = k;
  n.params["v"] = v;
  for (auto& [key, val] : extra.items()) n.params[key] = val;
  return n;
}

PlanNode truncated(PlanNode child, std::uint64_t k) {
  if (child.k == k) return child;
  PlanNode n = leaf("truncate", child.s, child.t, k, child.v, child.tier);
  n.steps = child.steps + 1;
  n.rows = sat_add(child.rows, n.rows);
  n.children.push_back(std::move(child));
  return n;
}

auto cost(const PlanNode& n) { return std::make_tuple(n.tier, n.steps, n.rows); }

bool char2(std::uint64_t q) { return q >= 4 && (q & (q - 1)) == 0; }

// Leaves that apply to the alphabet itself, each already cut down to k columns.
std::vector<PlanNode> direct_leaves(unsigned s, unsigned t, std::uint64_t k, std::uint64_t v) {
  std::vector<PlanNode> out;
  auto add = [&](PlanNode n) { out.push_back(truncated(std::move(n), k)); };
  const bool pp = prime_power(v).has_value();

  if (pp) {
    const std::uint64_t q = v;
    const std::uint64_t n = k + t - s;
    if (t <= q && n <= q + 1)
      add(leaf("power-column-oa", s, t, k, q, 0, {{"columns", n}, {"extended", false}}));
    else if (t == 3 && char2(q) && n <= q + 2)
      add(leaf("power-column-oa", s, t, k, q, 0, {{"columns", n}, {"extended", true}}));
    if (s == 1 && q > 2 && k <= std::uint64_t{t} + 1 && t >= 2)
      add(leaf("sum-zero", s, t, t + 1, q, 0));
    if (q >= 3 && t - s >= 2 && t <= q && k <= q + 1) add(leaf("irreducible-twist", s, t, q + 1, q, 0));
    if (char2(q) && s == 2 && t == 3 && k <= q + 1) add(leaf("conic", s, t, q + 1, q, 0));
    if (char2(q) && s == 1 && t == 3 && k <= q + 2) add(leaf("hyperoval", s, t, q + 2, q, 0));
    if (char2(q) && t == q - 1 && (s == 1 || (s == 3 && q > 4)) && k <= q + 2)
      add(leaf("wide", s, t, q + 2, q, 0));
  }
  if (s == 1 && t >= 3 && t % 2 == 1 && k <= std::uint64_t{t} + 1)
    add(leaf("zero-sum", s, t, t + 1, v, 0));
  if (k == t) {
    if (pp && s <= v && t <= v + 1)
      add(leaf("shift", s, t, k, v, 0, {{"source", "power-column-oa"}}));
    else if (s + 1 == t && t >= 3)
      add(leaf("shift", s, t, k, v, 0, {{"source", "zero-sum"}}));
    else if (s == 1 && v <= UINT32_MAX)
      add(leaf("shift", s, t, k, v, 0, {{"source", "constant-rows"}}));
  }
  if (s == 1 && t == 3 && v <= UINT32_MAX) {
    const auto in_catalog = [&] {
      auto orders = catalog_orders();
      return std::find(orders.begin(), orders.end(), static_cast<std::uint32_t>(v)) != orders.end();
    }();
    if (k <= 5) {
      if (v >= 5 && gcd(v, 6) == 1)
        add(leaf("dm-oa5", s, t, 5, v, 1, {{"dm", "multiplicative"}}));
      else if (in_catalog)
        add(leaf("dm-oa5", s, t, 5, v, 1, {{"dm", "catalog"}}));
    }
    if (k <= 6 && in_catalog) add(leaf("dm-adder-oa6", s, t, 6, v, 1, {{"dm", "catalog"}}));
  }
  return out;
}

class Planner {
 public:
  Planner(unsigned s, unsigned t, std::uint64_t k) : s_(s), t_(t), k_(k) {}

  std::optional<PlanNode> best(std::uint64_t v) {
    if (auto it = memo_.find(v); it != memo_.end()) return it->second;
    std::optional<PlanNode> found;
    auto consider = [&](PlanNode n) {
      if (!found || cost(n) < cost(*found)) found = std::move(n);
    };
    for (auto& n : direct_leaves(s_, t_, k_, v)) consider(std::move(n));
    for (std::uint64_t d = 2; d * d <= v; ++d) {
      if (v % d != 0) continue;
      auto a = best(d);
      if (!a) continue;
      auto b = best(v / d);
      if (!b) continue;
      PlanNode p = leaf("product", s_, t_, k_, v, 2);
      p.steps = 1 + a->steps + b->steps;
      p.rows = sat_add(p.rows, sat_add(a->rows, b->rows));
      p.children.push_back(std::move(*a));
      p.children.push_back(std::move(*b));
      consider(std::move(p));
    }
    memo_[v] = found;
    return found;
  }

 private:
  unsigned s_, t_;
  std::uint64_t k_;
  std::map<std::uint64_t, std::optional<PlanNode>> memo_;
};

std::uint32_t narrow(std::uint64_t v) {
  require(v <= UINT32_MAX, Errc::WrongParameters, "alphabet too large");
  return static_cast<std::uint32_t>(v);
}

DifferenceMatrix leaf_dm(const PlanNode& n) {
  const auto v = narrow(n.v);
  if (n.params.at("dm") == "multiplicative") return dm_multiplicative(v);
  return catalog(v);
}

AugmentedOA run_leaf(const PlanNode& n) {
  const auto q = narrow(n.v);
  const auto& st = n.step;
  if (st == "power-column-oa") {
    OrthogonalArray b = n.params.at("extended").get<bool>() ? vandermonde_oa_ext(q) : vandermonde_oa(n.t, q);
    const auto cols = n.params.at("columns").get<std::size_t>();
    std::vector<std::size_t> drop;
    for (std::size_t c = cols; c < b.k(); ++c) drop.push_back(c);
    if (!drop.empty()) b = delete_columns(b, drop);
    return oa_to_aoa(b, n.s);
  }
  if (st == "sum-zero") return expand(sum_zero_generator(q, static_cast<unsigned>(n.k)));
  if (st == "irreducible-twist") return expand(irreducible_twist_generator(q, n.s, n.t));
  if (st == "conic") return expand(char2_conic_generator(q));
  if (st == "hyperoval") return expand(char2_hyperoval_generator(q));
  if (st == "wide") return expand(char2_wide_generator(q, n.s));
  if (st == "zero-sum") return zero_sum_aoa(static_cast<unsigned>(n.k), q);
  if (st == "shift") {
    if (n.params.at("source") == "zero-sum") return shift_aoa(zero_sum_oa(n.t, q), n.t);
    if (n.params.at("source") == "constant-rows") {
      Table rows(q, n.t);
      for (std::uint32_t x = 0; x < q; ++x)
        for (std::size_t c = 0; c < n.t; ++c) rows.at(x, c) = x;
      return shift_aoa(OrthogonalArray(q, 1, std::move(rows)), n.t);
    }
    OrthogonalArray b = vandermonde_oa(n.s, q);
    std::vector<std::size_t> drop;
    for (std::size_t c = n.t; c < b.k(); ++c) drop.push_back(c);
    if (!drop.empty()) b = delete_columns(b, drop);
    return shift_aoa(b, n.t);
  }
  if (st == "dm-oa5") {
    const auto d = leaf_dm(n);
    return resolvable_to_aoa(dm_resolvable_oa5(d, sigma_for(d.group())));
  }
  if (st == "dm-adder-oa6") {
    const auto d = leaf_dm(n);
    return resolvable_to_aoa(dm_adder_resolvable_oa6(d, sigma_for(d.group())));
  }
  fail(Errc::SchemaViolation, "unknown plan step '" + st + "'");
}

}  // namespace

Json PlanNode::to_json() const {
  Json j = Json::object();
  j["step"] = step;
  j["params"] = params;
  j["children"] = Json::array();
  for (const auto& c : children) j["children"].push_back(c.to_json());
  return j;
}

std::string PlanNode::describe() const {
  std::ostringstream os;
  auto walk = [&](auto&& self, const PlanNode& n, int depth) -> void {
    os << std::string(2 * depth, ' ') << n.step << " -> " << label(n.s, n.t, n.k, n.v);
    for (auto& [key, val] : n.params.items()) {
      if (key == "s" || key == "t" || key == "k" || key == "v") continue;
      os << ' ' << key << '=' << (val.is_string() ? val.template get<std::string>() : val.dump());
    }
    os << '\n';
    for (const auto& c : n.children) self(self, c, depth + 1);
  };
  walk(walk, *this, 0);
  return os.str();
}

PlanNode plan(unsigned s, unsigned t, std::uint64_t k, std::uint64_t v) {
  require(s >= 1 && s < t && t <= k, Errc::WrongParameters, "needs 1 <= s < t <= k");
  require(v >= 2, Errc::WrongParameters, "needs v >= 2");
  Planner planner(s, t, k);
  auto best = planner.best(v);
  if (!best) fail(Errc::NoKnownConstruction, "no known construction for " + label(s, t, k, v));
  return std::move(*best);
}

AugmentedOA execute(const PlanNode& node) {
  if (node.step == "truncate") {
    require(node.children.size() == 1, Errc::SchemaViolation, "truncate takes one child");
    AugmentedOA a = truncate(execute(node.children[0]), node.k);
    require_ok(check_aoa(a), "truncated " + label(node.s, node.t, node.k, node.v));
    return a;
  }
  if (node.step == "product") {
    require(node.children.size() == 2, Errc::SchemaViolation, "product takes two children");
    return product_aoa(execute(node.children[0]), execute(node.children[1]));
  }
  AugmentedOA a = run_leaf(node);
  require(a.s() == node.s && a.t() == node.t && a.k() == node.k && a.v() == node.v,
          Errc::InvariantViolation, node.step + " did not produce " + label(node.s, node.t, node.k, node.v));
  return a;
}

}  // namespace aoa
