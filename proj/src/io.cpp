// SPDX-License-Identifier: Apache-2.0
#include "aoa/io.hpp"

#include <fstream>
#include <sstream>

#include "aoa/error.hpp"
#include "aoa/numeric.hpp"

namespace aoa {

namespace {

template <typename... Fs>
struct Overload : Fs... {
  using Fs::operator()...;
};
template <typename... Fs>
Overload(Fs...) -> Overload<Fs...>;

[[noreturn]] void schema(const std::string& path, const std::string& what) {
  fail(Errc::SchemaViolation, path + ": " + what);
}

const Json& member(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) schema(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema(path + "." + key, "missing");
  return *it;
}

std::uint64_t as_uint(const Json& j, const std::string& path) {
  if (!j.is_number_unsigned()) {
    if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return j.get<std::uint64_t>();
    schema(path, "expected a non-negative integer");
  }
  return j.get<std::uint64_t>();
}

std::uint32_t as_u32(const Json& j, const std::string& path) {
  auto v = as_uint(j, path);
  if (v > UINT32_MAX) schema(path, "value too large");
  return static_cast<std::uint32_t>(v);
}

std::uint32_t param(const Json& params, const char* key) {
  return as_u32(member(params, key, "params"), std::string("params.") + key);
}

std::vector<std::uint32_t> read_vector(const Json& j, const std::string& path, std::uint64_t limit) {
  if (!j.is_array()) schema(path, "expected an array");
  std::vector<std::uint32_t> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    auto p = path + "[" + std::to_string(i) + "]";
    auto v = as_uint(j[i], p);
    if (v >= limit) schema(p, "value " + std::to_string(v) + " out of range [0, " + std::to_string(limit) + ")");
    out.push_back(static_cast<std::uint32_t>(v));
  }
  return out;
}

// `limit(c)` bounds the symbols of column c.
template <typename Limit>
Table read_table(const Json& j, const std::string& path, std::size_t cols, Limit limit) {
  if (!j.is_array()) schema(path, "expected an array of rows");
  std::vector<Symbol> data;
  data.reserve(j.size() * cols);
  for (std::size_t r = 0; r < j.size(); ++r) {
    auto rp = path + "[" + std::to_string(r) + "]";
    const Json& row = j[r];
    if (!row.is_array()) schema(rp, "expected an array");
    require(row.size() == cols, Errc::InvariantViolation,
            rp + ": row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c) {
      auto p = rp + "[" + std::to_string(c) + "]";
      auto v = as_uint(row[c], p);
      if (v >= limit(c))
        schema(p, "symbol " + std::to_string(v) + " out of range [0, " + std::to_string(limit(c)) + ")");
      data.push_back(static_cast<Symbol>(v));
    }
  }
  return Table(j.size(), cols, std::move(data));
}

Json table_to_json(const Table& t) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < t.rows(); ++r) {
    auto span = t.row(r);
    rows.push_back(Json(std::vector<Symbol>(span.begin(), span.end())));
  }
  return rows;
}

Json oa_json(const OrthogonalArray& a) {
  Json j;
  j["kind"] = "oa";
  j["params"] = {{"v", a.v()}, {"t", a.t()}, {"k", a.k()}};
  j["rows"] = table_to_json(a.rows());
  return j;
}

std::uint64_t power_or_schema(std::uint64_t v, unsigned e, const std::string& path) {
  auto p = checked_pow(v, e, UINT32_MAX);
  if (!p) schema(path, "alphabet too large");
  return *p;
}

bool is_matrix(const Json& j) {
  if (!j.is_array() || j.empty()) return false;
  for (const auto& r : j)
    if (!r.is_array()) return false;
  return true;
}

}  // namespace

std::string_view kind_name(const Object& obj) noexcept {
  return std::visit(Overload{[](const OrthogonalArray&) { return std::string_view("oa"); },
                             [](const ResolvableOA&) { return std::string_view("oa"); },
                             [](const AugmentedOA&) { return std::string_view("aoa"); },
                             [](const DifferenceMatrix&) { return std::string_view("dm"); },
                             [](const GeneratorMatrix&) { return std::string_view("gen"); }},
                    obj);
}

Json field_to_json(const FieldSpec& spec) {
  return Json{{"p", spec.p}, {"m", spec.m}, {"modulus", spec.modulus}};
}

FieldSpec field_from_json(const Json& j, const std::string& path) {
  FieldSpec spec;
  spec.p = as_u32(member(j, "p", path), path + ".p");
  spec.m = as_u32(member(j, "m", path), path + ".m");
  if (auto it = j.find("modulus"); it != j.end())
    spec.modulus = read_vector(*it, path + ".modulus", spec.p ? spec.p : 1);
  if (spec.m == 1) spec.modulus.clear();
  return spec;
}

Json group_to_json(const GroupSpec& g) {
  Json comps = Json::array();
  for (const auto& c : g.components()) {
    if (auto* cy = std::get_if<Cyclic>(&c)) comps.push_back(Json{{"cyclic", cy->n}});
    else comps.push_back(Json{{"field", field_to_json(std::get<FieldAdditive>(c).field.spec())}});
  }
  return Json{{"components", comps}};
}

GroupSpec group_from_json(const Json& j, const std::string& path) {
  const Json& comps = member(j, "components", path);
  if (!comps.is_array() || comps.empty()) schema(path + ".components", "expected a non-empty array");
  std::vector<GroupComponent> out;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    auto p = path + ".components[" + std::to_string(i) + "]";
    const Json& c = comps[i];
    if (!c.is_object()) schema(p, "expected an object");
    if (c.contains("cyclic")) {
      out.push_back(Cyclic{as_u32(c["cyclic"], p + ".cyclic")});
    } else if (c.contains("field")) {
      out.push_back(FieldAdditive{Field::from_spec(field_from_json(c["field"], p + ".field"))});
    } else {
      schema(p, "expected \"cyclic\" or \"field\"");
    }
  }
  return GroupSpec(std::move(out));
}

Json to_json(const Object& obj) {
  return std::visit(
      Overload{
          [](const OrthogonalArray& a) { return oa_json(a); },
          [](const ResolvableOA& r) {
            Json j = oa_json(r.array);
            j["partition"] = {{"s", r.partition.s()}, {"class_of", r.partition.class_of()}};
            return j;
          },
          [](const AugmentedOA& a) {
            Json j;
            j["kind"] = "aoa";
            j["params"] = {{"v", a.v()}, {"t", a.t()}, {"s", a.s()}, {"k", a.k()}};
            j["rows"] = table_to_json(a.rows());
            return j;
          },
          [](const DifferenceMatrix& d) {
            Json j;
            j["kind"] = "dm";
            j["params"] = {{"n", d.n()}, {"k", d.k()}};
            j["group"] = group_to_json(d.group());
            j["entries"] = table_to_json(d.entries());
            if (d.adder()) j["adder"] = *d.adder();
            return j;
          },
          [](const GeneratorMatrix& g) {
            Json j;
            j["kind"] = "gen";
            j["params"] = {{"q", g.field().q()}, {"t", g.t()}, {"k", g.k()}};
            j["field"] = field_to_json(g.field().spec());
            if (g.s_split()) j["s_split"] = *g.s_split();
            else j["s_split"] = nullptr;
            Json rows = Json::array();
            for (std::size_t r = 0; r < g.t(); ++r) {
              auto span = g.entries().row(r);
              rows.push_back(Json(std::vector<Element>(span.begin(), span.end())));
            }
            j["entries"] = rows;
            return j;
          }},
      obj);
}

Object from_json(const Json& j) {
  if (!j.is_object()) schema("$", "expected an object");
  const Json& kj = member(j, "kind", "$");
  if (!kj.is_string()) schema("kind", "expected a string");
  const std::string kind = kj.get<std::string>();
  const Json& params = member(j, "params", "$");

  if (kind == "oa") {
    const auto v = param(params, "v");
    const auto t = param(params, "t");
    const auto k = param(params, "k");
    Table rows = read_table(member(j, "rows", "$"), "rows", k, [&](std::size_t) { return std::uint64_t{v}; });
    OrthogonalArray a(v, t, std::move(rows));
    auto it = j.find("partition");
    if (it == j.end() || it->is_null()) return a;
    const auto s = as_u32(member(*it, "s", "partition"), "partition.s");
    if (s < 1 || s > t) schema("partition.s", "must lie in [1, t]");
    auto labels = read_vector(member(*it, "class_of", "partition"), "partition.class_of",
                              power_or_schema(v, t - s, "partition"));
    ResolutionPartition p(v, t, s, std::move(labels));
    return ResolvableOA{std::move(a), std::move(p)};
  }
  if (kind == "aoa") {
    const auto v = param(params, "v");
    const auto t = param(params, "t");
    const auto s = param(params, "s");
    const auto k = param(params, "k");
    if (s < 1 || s >= t) schema("params.s", "must satisfy 1 <= s < t");
    const auto levels = power_or_schema(v, t - s, "params");
    Table rows = read_table(member(j, "rows", "$"), "rows", std::size_t{k} + 1,
                            [&](std::size_t c) { return c < k ? std::uint64_t{v} : levels; });
    return AugmentedOA(v, t, s, std::move(rows));
  }
  if (kind == "dm") {
    GroupSpec g = group_from_json(member(j, "group", "$"));
    const auto n = param(params, "n");
    const auto k = param(params, "k");
    require(n == g.order(), Errc::InvariantViolation, "params.n does not match the group order");
    Table entries = read_table(member(j, "entries", "$"), "entries", k, [&](std::size_t) { return std::uint64_t{n}; });
    std::optional<std::vector<std::uint32_t>> adder;
    if (auto it = j.find("adder"); it != j.end() && !it->is_null()) adder = read_vector(*it, "adder", n);
    return DifferenceMatrix(std::move(g), std::move(entries), std::move(adder));
  }
  if (kind == "gen") {
    Field f = Field::from_spec(field_from_json(member(j, "field", "$")));
    const auto q = param(params, "q");
    const auto t = param(params, "t");
    const auto k = param(params, "k");
    require(q == f.q(), Errc::InvariantViolation, "params.q does not match the field");
    Table entries = read_table(member(j, "entries", "$"), "entries", k, [&](std::size_t) { return std::uint64_t{q}; });
    require(entries.rows() == t, Errc::InvariantViolation, "generator must have t rows");
    std::optional<unsigned> split;
    if (auto it = j.find("s_split"); it != j.end() && !it->is_null()) split = as_u32(*it, "s_split");
    return GeneratorMatrix(Matrix(f, t, k, entries.data()), split);
  }
  schema("kind", "unknown kind \"" + kind + "\"");
}

std::string dump(const Object& obj) {
  const Json j = to_json(obj);
  std::ostringstream os;
  os << "{\n";
  std::size_t i = 0;
  for (const auto& [key, value] : j.items()) {
    os << "  " << Json(key).dump() << ": ";
    if (is_matrix(value)) {
      os << "[\n";
      for (std::size_t r = 0; r < value.size(); ++r)
        os << "    " << value[r].dump() << (r + 1 < value.size() ? ",\n" : "\n");
      os << "  ]";
    } else {
      os << value.dump();
    }
    os << (++i < j.size() ? ",\n" : "\n");
  }
  os << "}\n";
  return os.str();
}

Object parse(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(Errc::SchemaViolation, std::string("malformed JSON: ") + e.what());
  }
  return from_json(j);
}

void save(const Object& obj, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  require(static_cast<bool>(out), Errc::IoError, "cannot open " + path.string() + " for writing");
  out << dump(obj);
  out.flush();
  require(static_cast<bool>(out), Errc::IoError, "write to " + path.string() + " failed");
}

Object load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), Errc::IoError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  require(!in.bad(), Errc::IoError, "read from " + path.string() + " failed");
  const std::string text = ss.str();
  if (text.starts_with('#')) return from_csv(text);
  return parse(text);
}

std::string to_csv(const Object& obj) {
  std::ostringstream os;
  auto header = [&](std::string_view kind, std::optional<std::uint64_t> v, std::optional<std::uint64_t> t,
                    std::optional<std::uint64_t> s, std::uint64_t k) {
    auto f = [](std::optional<std::uint64_t> x) { return x ? std::to_string(*x) : std::string("-"); };
    os << "# " << kind << ' ' << f(v) << ' ' << f(t) << ' ' << f(s) << ' ' << k << '\n';
  };
  auto rows = [&](const Table& t, const std::vector<std::uint32_t>* extra) {
    for (std::size_t r = 0; r < t.rows(); ++r) {
      for (std::size_t c = 0; c < t.cols(); ++c) os << (c ? "," : "") << t.at(r, c);
      if (extra) os << ',' << (*extra)[r];
      os << '\n';
    }
  };
  std::visit(Overload{[&](const OrthogonalArray& a) {
                        header("oa", a.v(), a.t(), std::nullopt, a.k());
                        rows(a.rows(), nullptr);
                      },
                      [&](const ResolvableOA& r) {
                        header("oa", r.array.v(), r.array.t(), r.partition.s(), r.array.k());
                        rows(r.array.rows(), &r.partition.class_of());
                      },
                      [&](const AugmentedOA& a) {
                        header("aoa", a.v(), a.t(), a.s(), a.k());
                        rows(a.rows(), nullptr);
                      },
                      [&](const DifferenceMatrix& d) {
                        header("dm", d.n(), std::nullopt, std::nullopt, d.k());
                        rows(d.entries(), d.adder() ? &*d.adder() : nullptr);
                      },
                      [&](const GeneratorMatrix& g) {
                        header("gen", g.field().q(), g.t(),
                               g.s_split() ? std::optional<std::uint64_t>(*g.s_split()) : std::nullopt, g.k());
                        const auto& m = g.entries();
                        for (std::size_t r = 0; r < m.rows(); ++r) {
                          for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? "," : "") << m.at(r, c);
                          os << '\n';
                        }
                      }},
             obj);
  return os.str();
}

Object from_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || !line.starts_with("# ")) schema("csv", "missing '# kind v t s k' header");
  std::istringstream hs(line.substr(2));
  std::string kind, field[4];
  if (!(hs >> kind >> field[0] >> field[1] >> field[2] >> field[3])) schema("csv.header", "expected five fields");
  auto num = [](const std::string& f, const char* name) -> std::optional<std::uint64_t> {
    if (f == "-") return std::nullopt;
    std::size_t used = 0;
    std::uint64_t x = 0;
    try {
      x = std::stoull(f, &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (used != f.size() || f.empty()) schema(std::string("csv.header.") + name, "expected an integer or '-'");
    return x;
  };
  const auto v = num(field[0], "v"), t = num(field[1], "t"), s = num(field[2], "s"), k = num(field[3], "k");
  Json rows = Json::array();
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    Json row = Json::array();
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) {
      const auto x = num(cell, "cell");
      if (!x) schema("csv.line" + std::to_string(line_no), "empty cell");
      row.push_back(*x);
    }
    rows.push_back(std::move(row));
  }
  auto need = [](const std::optional<std::uint64_t>& x, const char* name) {
    if (!x) schema(std::string("csv.header.") + name, "required for this kind");
    return *x;
  };
  // Split off a trailing column (class label or adder) into its own vector.
  auto split_last = [&](Json& table) {
    Json last = Json::array();
    for (auto& r : table) {
      if (r.empty()) schema("csv", "row has no columns");
      last.push_back(r.back());
      r.erase(r.size() - 1);
    }
    return last;
  };
  Json j;
  j["kind"] = kind;
  if (kind == "oa") {
    j["params"] = {{"v", need(v, "v")}, {"t", need(t, "t")}, {"k", need(k, "k")}};
    if (s) j["partition"] = {{"s", *s}, {"class_of", split_last(rows)}};
    j["rows"] = std::move(rows);
  } else if (kind == "aoa") {
    j["params"] = {{"v", need(v, "v")}, {"t", need(t, "t")}, {"s", need(s, "s")}, {"k", need(k, "k")}};
    j["rows"] = std::move(rows);
  } else if (kind == "dm") {
    const auto n = need(v, "v");
    require(n <= UINT32_MAX, Errc::SchemaViolation, "csv.header.v: value too large");
    j["params"] = {{"n", n}, {"k", need(k, "k")}};
    j["group"] = group_to_json(GroupSpec::cyclic(static_cast<std::uint32_t>(n)));
    if (!rows.empty() && rows[0].size() == need(k, "k") + 1) j["adder"] = split_last(rows);
    j["entries"] = std::move(rows);
  } else if (kind == "gen") {
    const auto q = need(v, "v");
    j["params"] = {{"q", q}, {"t", need(t, "t")}, {"k", need(k, "k")}};
    j["field"] = field_to_json(Field::of_order(q).spec());
    j["s_split"] = s ? Json(*s) : Json(nullptr);
    j["entries"] = std::move(rows);
  } else {
    schema("csv.header.kind", "unknown kind '" + kind + "'");
  }
  return from_json(j);
}

}  // namespace aoa
