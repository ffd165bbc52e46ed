#include "leibal/io.hpp"

#include <cctype>
#include <fstream>

#include <json.hpp>

namespace leibal {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::string line_col(const std::string& text, size_t byte) {
  size_t line = 1, col = 1;
  for (size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

} // namespace

LeibnizAlgebra parse_algebra(const std::string& text,
                             const std::map<std::string, mpq_class>& overrides) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw parse_error("malformed algebra file at " + line_col(text, e.byte) +
                      ": " + e.what());
  }
  try {
    size_t dim = j.at("dim").get<size_t>();

    Field field = Field::rationals();
    if (j.contains("field") && !j.at("field").is_null()) {
      const json& fj = j.at("field");
      if (fj.is_string()) {
        if (fj.get<std::string>() != "Q")
          throw parse_error("unknown field '" + fj.get<std::string>() + "'");
      } else if (fj.is_object() && fj.contains("Fp")) {
        field = Field::prime(mpz_class(fj.at("Fp").get<long>()));
      } else {
        throw parse_error("field must be \"Q\" or {\"Fp\": p}");
      }
    }

    std::vector<std::string> labels;
    if (j.contains("basis"))
      labels = j.at("basis").get<std::vector<std::string>>();

    std::map<std::string, mpq_class> params;
    if (j.contains("parameters"))
      for (const auto& p : j.at("parameters")) {
        std::string name = p.at("name").get<std::string>();
        mpq_class v = Field::parse(p.at("default").get<std::string>());
        auto it = overrides.find(name);
        if (it != overrides.end())
          v = it->second;
        for (const auto& x : p.at("excluded"))
          if (v == Field::parse(x.get<std::string>()))
            throw admissibility_error("parameter " + name + " = " + v.get_str() +
                                      " is excluded");
        params[name] = v;
      }
    for (const auto& [name, _] : overrides)
      if (!params.count(name))
        throw error("file declares no parameter '" + name + "'");

    std::vector<BracketEntry> entries;
    for (const auto& b : j.at("brackets")) {
      long i = b.at("i").get<long>(), jj = b.at("j").get<long>(),
           k = b.at("k").get<long>();
      if (i < 1 || static_cast<size_t>(i) > dim || jj < 1 ||
          static_cast<size_t>(jj) > dim || k < 1 || static_cast<size_t>(k) > dim)
        throw parse_error("bracket index out of range (dim " +
                          std::to_string(dim) + "): [" + std::to_string(i) +
                          "," + std::to_string(jj) + "] -> " + std::to_string(k));
      std::string c = b.at("c").get<std::string>();
      mpq_class coeff;
      // allow "q", "-q", "q*param", "param", "-param"
      std::string body = c;
      mpq_class sign(1);
      if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
        if (body[0] == '-')
          sign = -1;
        body = body.substr(1);
      }
      if (!body.empty() && std::isdigit(static_cast<unsigned char>(body[0]))) {
        size_t star = body.find('*');
        coeff = sign * Field::parse(body.substr(0, star));
        if (star != std::string::npos) {
          auto it = params.find(body.substr(star + 1));
          if (it == params.end())
            throw parse_error("unknown parameter in coefficient '" + c + "'");
          coeff *= it->second;
        }
      } else {
        auto it = params.find(body);
        if (it == params.end())
          throw parse_error("malformed coefficient '" + c + "'");
        coeff = sign * it->second;
      }
      entries.push_back({static_cast<uint32_t>(i - 1),
                         static_cast<uint32_t>(jj - 1),
                         static_cast<uint32_t>(k - 1), coeff});
    }
    return LeibnizAlgebra(field, dim, labels, entries);
  } catch (const json::exception& e) {
    throw parse_error(std::string("malformed algebra file: ") + e.what());
  }
}

LeibnizAlgebra load_algebra(const std::string& path,
                            const std::map<std::string, mpq_class>& overrides) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_algebra(buf.str(), overrides);
}

std::string serialize_algebra(const LeibnizAlgebra& g) {
  ordered_json j;
  j["dim"] = g.dim();
  j["basis"] = g.labels();
  if (g.field().is_rational())
    j["field"] = "Q";
  else
    j["field"] = {{"Fp", g.field().modulus().get_si()}};
  j["brackets"] = ordered_json::array();
  for (const BracketEntry& e : g.entries())
    j["brackets"].push_back({{"i", e.i + 1},
                             {"j", e.j + 1},
                             {"k", e.k + 1},
                             {"c", Field::str(e.c)}});
  return j.dump(2) + "\n";
}

SVec parse_vector_expr(const std::string& text, const LeibnizAlgebra& g) {
  const Field& f = g.field();
  std::map<std::string, uint32_t> index;
  for (uint32_t i = 0; i < g.dim(); ++i)
    index[g.labels()[i]] = i;

  std::vector<mpq_class> coords(g.dim(), mpq_class(0));
  size_t pos = 0;
  auto skip_ws = [&]() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  skip_ws();
  if (pos == text.size())
    throw parse_error("empty vector expression");
  bool first = true;
  while (true) {
    skip_ws();
    if (pos == text.size())
      break;
    mpq_class sign(1);
    if (text[pos] == '+' || text[pos] == '-') {
      if (text[pos] == '-')
        sign = -1;
      ++pos;
      skip_ws();
    } else if (!first) {
      throw parse_error("expected '+' or '-' in vector expression '" + text + "'");
    }
    first = false;
    // optional rational coefficient
    mpq_class coeff(1);
    size_t start = pos;
    while (pos < text.size() &&
           (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
      ++pos;
    if (pos > start)
      coeff = Field::parse(text.substr(start, pos - start));
    skip_ws();
    if (pos < text.size() && text[pos] == '*') {
      ++pos;
      skip_ws();
    }
    // optional label
    start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    if (pos > start) {
      std::string label = text.substr(start, pos - start);
      auto it = index.find(label);
      if (it == index.end())
        throw parse_error("unknown basis label '" + label + "'");
      coords[it->second] = f.add(coords[it->second], f.mul(sign, coeff));
    } else if (pos == start && coeff == 1) {
      throw parse_error("malformed vector expression '" + text + "'");
    } else {
      throw parse_error("constant term without basis label in '" + text + "'");
    }
    skip_ws();
  }
  return sv_from_dense(f, coords);
}

std::vector<SVec> parse_vector_list(const std::string& text,
                                    const LeibnizAlgebra& g) {
  std::vector<SVec> out;
  size_t start = 0;
  while (start <= text.size()) {
    size_t comma = text.find(',', start);
    std::string part = comma == std::string::npos
                           ? text.substr(start)
                           : text.substr(start, comma - start);
    out.push_back(parse_vector_expr(part, g));
    if (comma == std::string::npos)
      break;
    start = comma + 1;
  }
  return out;
}

std::string content_digest(const std::string& bytes) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[24];
  std::snprintf(buf, sizeof buf, "fnv1a:%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

void Report::kv(const std::string& key, const std::string& value) {
  out_ << key << ": " << value << "\n";
}
void Report::kv(const std::string& key, size_t value) {
  out_ << key << ": " << value << "\n";
}
void Report::kv(const std::string& key, bool value) {
  out_ << key << ": " << (value ? "true" : "false") << "\n";
}
void Report::list(const std::string& key, const std::vector<std::string>& items) {
  out_ << key << ":";
  if (items.empty()) {
    out_ << " (none)\n";
    return;
  }
  out_ << "\n";
  for (const std::string& s : items)
    out_ << "  - " << s << "\n";
}

} // namespace leibal
