// SPDX-License-Identifier: Apache-2.0
#include "aoa/group.hpp"

#include <sstream>

#include "aoa/error.hpp"

namespace aoa {

GroupSpec::GroupSpec(std::vector<GroupComponent> components) : comps_(std::move(components)) {
  require(!comps_.empty(), Errc::InvariantViolation, "group needs at least one component");
  std::uint64_t order = 1;
  for (const auto& c : comps_) {
    std::uint32_t r = std::visit(
        [](const auto& comp) -> std::uint32_t {
          if constexpr (std::is_same_v<std::decay_t<decltype(comp)>, Cyclic>) return comp.n;
          else return comp.field.q();
        },
        c);
    require(r >= 1, Errc::InvariantViolation, "component order must be positive");
    radix_.push_back(r);
    order *= r;
    require(order <= (1u << 24), Errc::InvariantViolation, "group order too large");
  }
  order_ = static_cast<std::uint32_t>(order);
  require(order_ >= 2, Errc::InvariantViolation, "group order must be >= 2");
}

GroupSpec GroupSpec::cyclic(std::uint32_t n) { return GroupSpec({Cyclic{n}}); }

std::vector<std::uint32_t> GroupSpec::decode(std::uint32_t x) const {
  check(x);
  std::vector<std::uint32_t> parts(comps_.size());
  for (std::size_t i = comps_.size(); i-- > 0;) {
    parts[i] = x % radix_[i];
    x /= radix_[i];
  }
  return parts;
}

std::uint32_t GroupSpec::encode(const std::vector<std::uint32_t>& parts) const {
  require(parts.size() == comps_.size(), Errc::EncodingOutOfRange, "component count mismatch");
  std::uint32_t x = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    require(parts[i] < radix_[i], Errc::EncodingOutOfRange, "component value out of range");
    x = x * radix_[i] + parts[i];
  }
  return x;
}

std::uint32_t GroupSpec::add(std::uint32_t x, std::uint32_t y) const {
  auto a = decode(x), b = decode(y);
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (auto* c = std::get_if<Cyclic>(&comps_[i])) a[i] = (a[i] + b[i]) % c->n;
    else a[i] = std::get<FieldAdditive>(comps_[i]).field.add(a[i], b[i]);
  }
  return encode(a);
}

std::uint32_t GroupSpec::neg(std::uint32_t x) const {
  auto a = decode(x);
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (auto* c = std::get_if<Cyclic>(&comps_[i])) a[i] = (c->n - a[i]) % c->n;
    else a[i] = std::get<FieldAdditive>(comps_[i]).field.neg(a[i]);
  }
  return encode(a);
}

std::vector<std::uint32_t> GroupSpec::enumerate() const {
  std::vector<std::uint32_t> all(order_);
  for (std::uint32_t i = 0; i < order_; ++i) all[i] = i;
  return all;
}

void GroupSpec::check(std::uint32_t x) const {
  require(x < order_, Errc::EncodingOutOfRange,
          "group element " + std::to_string(x) + " outside group of order " + std::to_string(order_));
}

bool GroupSpec::operator==(const GroupSpec& other) const {
  if (comps_.size() != other.comps_.size()) return false;
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (comps_[i].index() != other.comps_[i].index()) return false;
    if (auto* c = std::get_if<Cyclic>(&comps_[i])) {
      if (c->n != std::get<Cyclic>(other.comps_[i]).n) return false;
    } else if (!(std::get<FieldAdditive>(comps_[i]).field ==
                 std::get<FieldAdditive>(other.comps_[i]).field)) {
      return false;
    }
  }
  return true;
}

std::string to_string(const GroupSpec& g) {
  std::ostringstream os;
  for (std::size_t i = 0; i < g.components().size(); ++i) {
    if (i) os << "x";
    if (auto* c = std::get_if<Cyclic>(&g.components()[i])) os << "Z" << c->n;
    else os << "F" << std::get<FieldAdditive>(g.components()[i]).field.q();
  }
  return os.str();
}

GroupSpec parse_group(std::string_view text) {
  std::vector<GroupComponent> comps;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('x', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view part = text.substr(pos, end - pos);
    require(part.size() >= 2 && (part[0] == 'Z' || part[0] == 'F'), Errc::SchemaViolation,
            "malformed group component \"" + std::string(part) + "\"");
    std::uint64_t n = 0;
    for (char ch : part.substr(1)) {
      require(ch >= '0' && ch <= '9' && n < (1u << 24), Errc::SchemaViolation,
              "malformed group order in \"" + std::string(part) + "\"");
      n = n * 10 + static_cast<std::uint64_t>(ch - '0');
    }
    if (part[0] == 'Z') comps.push_back(Cyclic{static_cast<std::uint32_t>(n)});
    else comps.push_back(FieldAdditive{Field::of_order(n)});
    pos = end + 1;
  }
  return GroupSpec(std::move(comps));
}

GroupTable::GroupTable(const GroupSpec& g) : n_(g.order()) {
  require(n_ <= 4096, Errc::InvariantViolation, "group too large for a Cayley table");
  add_.resize(std::size_t{n_} * n_);
  neg_.resize(n_);
  for (std::uint32_t x = 0; x < n_; ++x) {
    neg_[x] = g.neg(x);
    for (std::uint32_t y = 0; y < n_; ++y) add_[std::size_t{x} * n_ + y] = g.add(x, y);
  }
}

}  // namespace aoa
