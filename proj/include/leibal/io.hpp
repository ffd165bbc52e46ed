#pragma once

#include <map>
#include <sstream>

#include "leibal/leibniz.hpp"

namespace leibal {

/// Parses the structured-text algebra format:
///   { "dim": n, "basis": [...], "field": "Q" | {"Fp": p},
///     "brackets": [{"i":..,"j":..,"k":..,"c":"p/q"}, ...],
///     "parameters": [{"name":..,"excluded":[..],"default":..}, ...] }
/// Indices are 1-based; omitted entries are zero; duplicate (i,j,k) triples
/// and characteristic 2 are rejected.  Coefficients may reference declared
/// parameters; `overrides` replaces their default values.
LeibnizAlgebra parse_algebra(const std::string& text,
                             const std::map<std::string, mpq_class>& overrides = {});

LeibnizAlgebra load_algebra(const std::string& path,
                            const std::map<std::string, mpq_class>& overrides = {});

/// Exact round-trip serialization (rationals as "p/q" text, stable key and
/// entry order).
std::string serialize_algebra(const LeibnizAlgebra& g);

/// Linear combination of basis labels, e.g. "a1 + 2*a2 - 1/2*a3".
SVec parse_vector_expr(const std::string& text, const LeibnizAlgebra& g);

/// Comma-separated list of vector expressions.
std::vector<SVec> parse_vector_list(const std::string& text,
                                    const LeibnizAlgebra& g);

/// FNV-1a 64-bit content digest, hex.
std::string content_digest(const std::string& bytes);

/// Deterministic report writer: fixed key order, no wall-clock data.
class Report {
public:
  void kv(const std::string& key, const std::string& value);
  void kv(const std::string& key, const char* value) { kv(key, std::string(value)); }
  void kv(const std::string& key, size_t value);
  void kv(const std::string& key, bool value);
  void list(const std::string& key, const std::vector<std::string>& items);
  std::string str() const { return out_.str(); }

private:
  std::ostringstream out_;
};

} // namespace leibal
