#include "leibal/catalog.hpp"

#include <json.hpp>

#include "catalog_data.hpp"
#include "leibal/relative.hpp"

namespace leibal {

namespace {

using nlohmann::json;

// [sign] (rational ['*' name] | name)
CoeffExpr parse_coeff_expr(const std::string& text) {
  if (text.empty())
    throw parse_error("empty coefficient expression");
  std::string body = text;
  mpq_class sign(1);
  if (body[0] == '-') {
    sign = -1;
    body = body.substr(1);
  } else if (body[0] == '+') {
    body = body.substr(1);
  }
  if (body.empty())
    throw parse_error("dangling sign in coefficient '" + text + "'");
  if (std::isdigit(static_cast<unsigned char>(body[0]))) {
    size_t star = body.find('*');
    std::string num = star == std::string::npos ? body : body.substr(0, star);
    std::string param = star == std::string::npos ? "" : body.substr(star + 1);
    return {sign * Field::parse(num), param};
  }
  return {sign, body};
}

CatalogEntry entry_from_json(const json& j) {
  CatalogEntry e;
  e.id = j.at("id").get<std::string>();
  e.source_row = j.at("source_row").get<std::string>();
  e.dim = j.at("dim").get<size_t>();
  e.basis = j.at("basis").get<std::vector<std::string>>();
  for (const auto& b : j.at("brackets")) {
    uint32_t i = b.at("i").get<uint32_t>(), jj = b.at("j").get<uint32_t>(),
             k = b.at("k").get<uint32_t>();
    if (i < 1 || i > e.dim || jj < 1 || jj > e.dim || k < 1 || k > e.dim)
      throw parse_error("catalog bracket index out of range in " + e.id);
    e.brackets.push_back(
        {i - 1, jj - 1, k - 1, parse_coeff_expr(b.at("c").get<std::string>())});
  }
  if (j.contains("parameters"))
    for (const auto& p : j.at("parameters")) {
      CatalogParameter cp;
      cp.name = p.at("name").get<std::string>();
      for (const auto& x : p.at("excluded"))
        cp.excluded.push_back(Field::parse(x.get<std::string>()));
      cp.default_value = Field::parse(p.at("default").get<std::string>());
      e.parameters.push_back(std::move(cp));
    }
  e.expected_class = j.at("expected_class").get<size_t>();
  e.transposed = j.value("transposed", false);
  e.multiplier_unsupported = j.value("multiplier_unsupported", false);
  return e;
}

struct CatalogData {
  std::vector<CatalogEntry> entries;
  LeibnizAlgebra remark5;
};

CatalogData load_catalog() {
  json j = json::parse(detail::kCatalogJson);
  CatalogData data{{}, LeibnizAlgebra(Field::rationals(), 0, {}, {})};
  for (const auto& e : j.at("entries"))
    data.entries.push_back(entry_from_json(e));

  const json& r = j.at("remark5");
  std::vector<BracketEntry> brackets;
  for (const auto& b : r.at("brackets"))
    brackets.push_back({b.at("i").get<uint32_t>() - 1,
                        b.at("j").get<uint32_t>() - 1,
                        b.at("k").get<uint32_t>() - 1,
                        Field::parse(b.at("c").get<std::string>())});
  data.remark5 =
      LeibnizAlgebra(Field::rationals(), r.at("dim").get<size_t>(),
                     r.at("basis").get<std::vector<std::string>>(), brackets);
  return data;
}

const CatalogData& catalog() {
  static const CatalogData data = load_catalog();
  return data;
}

} // namespace

const std::vector<CatalogEntry>& catalog_entries() { return catalog().entries; }

const CatalogEntry& catalog_entry(const std::string& id) {
  for (const CatalogEntry& e : catalog_entries())
    if (e.id == id)
      return e;
  throw error("no catalog entry with id '" + id + "'");
}

const LeibnizAlgebra& remark5_algebra() { return catalog().remark5; }

LeibnizAlgebra instantiate(const CatalogEntry& entry,
                           const std::map<std::string, mpq_class>& values) {
  std::map<std::string, mpq_class> assignment;
  for (const CatalogParameter& p : entry.parameters) {
    auto it = values.find(p.name);
    mpq_class v = it != values.end() ? it->second : p.default_value;
    for (const mpq_class& bad : p.excluded)
      if (v == bad)
        throw admissibility_error("parameter " + p.name + " = " + v.get_str() +
                                  " is excluded for entry " + entry.id);
    assignment[p.name] = v;
  }
  for (const auto& [name, _] : values)
    if (!assignment.count(name))
      throw error("entry " + entry.id + " has no parameter '" + name + "'");

  std::vector<BracketEntry> brackets;
  for (const CatalogBracket& b : entry.brackets) {
    mpq_class c = b.c.coeff;
    if (!b.c.param.empty())
      c *= assignment.at(b.c.param);
    brackets.push_back({b.i, b.j, b.k, c});
  }
  return LeibnizAlgebra(Field::rationals(), entry.dim, entry.basis, brackets);
}

CatalogVerifyReport verify_entry(const CatalogEntry& entry,
                                 const std::map<std::string, mpq_class>& values) {
  LeibnizAlgebra g = instantiate(entry, values);
  CatalogVerifyReport rep;
  rep.id = entry.id;
  rep.expected_class = entry.expected_class;
  rep.leibniz_ok = check_leibniz(g).ok;
  rep.non_lie_ok = !ann_ideal(g).space.is_zero();
  CentralSeries s = lie_central_series(g);
  rep.computed_class = s.class_value;
  rep.class_ok = s.classes_agree && s.class_value &&
                 *s.class_value == entry.expected_class;
  return rep;
}

} // namespace leibal
