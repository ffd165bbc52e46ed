#pragma once

#include <map>

#include "leibal/leibniz.hpp"

namespace leibal {

/// Coefficient expression over the entry's parameters: coeff * param,
/// with an empty param meaning a plain constant.
struct CoeffExpr {
  mpq_class coeff;
  std::string param;
};

struct CatalogBracket {
  uint32_t i, j, k; // 0-based
  CoeffExpr c;
};

struct CatalogParameter {
  std::string name;
  std::vector<mpq_class> excluded;
  mpq_class default_value;
};

/// One classification row: a parameterized bracket table together with the
/// printed Lie-nilpotency class.  Rows whose source uses the left Leibniz
/// convention are stored transposed (see data/catalog.json).
struct CatalogEntry {
  std::string id;
  std::string source_row;
  size_t dim = 0;
  std::vector<std::string> basis;
  std::vector<CatalogBracket> brackets;
  std::vector<CatalogParameter> parameters;
  size_t expected_class = 0;
  bool transposed = false;
  bool multiplier_unsupported = false; // not ordinary-nilpotent
};

const std::vector<CatalogEntry>& catalog_entries();
const CatalogEntry& catalog_entry(const std::string& id);

/// The five-dimensional algebra whose normalizer of <e1> is not a subalgebra.
const LeibnizAlgebra& remark5_algebra();

/// Concrete algebra over Q at the given parameter values (defaults fill the
/// gaps); excluded values raise admissibility_error.
LeibnizAlgebra instantiate(const CatalogEntry& entry,
                           const std::map<std::string, mpq_class>& values = {});

struct CatalogVerifyReport {
  std::string id;
  bool leibniz_ok = false;
  bool non_lie_ok = false; // annihilator ideal nonzero
  bool class_ok = false;
  std::optional<size_t> computed_class;
  size_t expected_class = 0;

  bool all_ok() const { return leibniz_ok && non_lie_ok && class_ok; }
};

CatalogVerifyReport verify_entry(const CatalogEntry& entry,
                                 const std::map<std::string, mpq_class>& values = {});

} // namespace leibal
