#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "leibal/catalog.hpp"
#include "leibal/covers.hpp"
#include "leibal/io.hpp"
#include "leibal/multiplier.hpp"
#include "leibal/relative.hpp"

namespace {

constexpr const char* kVersion = "leibal 0.1.0";

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw leibal::error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void head(leibal::Report& rep, const std::string& command,
          const std::string& path, const std::string& content,
          const leibal::LeibnizAlgebra& g) {
  rep.kv("command", command);
  rep.kv("input", path);
  rep.kv("digest", leibal::content_digest(content));
  rep.kv("field", g.field().name());
  rep.kv("dim", g.dim());
}

void finish(leibal::Report& rep) {
  rep.kv("version", kVersion);
  std::cout << rep.str();
}

std::map<std::string, mpq_class> parse_params(const std::string& text) {
  std::map<std::string, mpq_class> out;
  size_t start = 0;
  while (start < text.size()) {
    size_t comma = text.find(',', start);
    std::string part = comma == std::string::npos
                           ? text.substr(start)
                           : text.substr(start, comma - start);
    size_t eq = part.find('=');
    if (eq == std::string::npos)
      throw leibal::parse_error("expected name=value in --params");
    out[part.substr(0, eq)] = leibal::Field::parse(part.substr(eq + 1));
    if (comma == std::string::npos)
      break;
    start = comma + 1;
  }
  return out;
}

uint64_t effective_seed(uint64_t cli_seed) {
  if (const char* env = std::getenv("LEIBAL_SEED"))
    return std::strtoull(env, nullptr, 10);
  return cli_seed;
}

int cmd_check(const std::string& path) {
  std::string content = slurp(path);
  leibal::LeibnizAlgebra g = leibal::parse_algebra(content);
  leibal::LeibnizVerdict v = leibal::check_leibniz(g);
  leibal::Report rep;
  head(rep, "check", path, content, g);
  rep.kv("leibniz", v.ok);
  if (!v.ok) {
    const auto& w = *v.witness;
    rep.kv("witness_triple", "(" + g.labels()[w.i] + ", " + g.labels()[w.j] +
                                 ", " + g.labels()[w.k] + ")");
    rep.kv("lhs", leibal::sv_str(w.lhs, g.labels()));
    rep.kv("rhs", leibal::sv_str(w.rhs, g.labels()));
  }
  finish(rep);
  return v.ok ? 0 : 1;
}

int cmd_invariants(const std::string& path) {
  std::string content = slurp(path);
  leibal::LeibnizAlgebra g = leibal::parse_algebra(content);
  leibal::Centers c = leibal::centers(g);
  leibal::IdealWitness ann = leibal::ann_ideal(g);
  leibal::Quotient lie = leibal::liezation(g);
  leibal::Report rep;
  head(rep, "invariants", path, content, g);
  rep.kv("center_dim", c.center.space.dim());
  rep.list("center", c.center.space.row_strings(g.labels()));
  rep.kv("right_center_dim", c.right_center.space.dim());
  rep.list("right_center", c.right_center.space.row_strings(g.labels()));
  rep.kv("lie_center_dim", c.lie_center.space.dim());
  rep.list("lie_center", c.lie_center.space.row_strings(g.labels()));
  rep.kv("ann_dim", ann.space.dim());
  rep.list("ann", ann.space.row_strings(g.labels()));
  rep.kv("liezation_dim", lie.alg.dim());
  finish(rep);
  return 0;
}

int cmd_series(const std::string& path) {
  std::string content = slurp(path);
  leibal::LeibnizAlgebra g = leibal::parse_algebra(content);
  leibal::CentralSeries s = leibal::lie_central_series(g);
  leibal::Report rep;
  head(rep, "series", path, content, g);
  std::vector<std::string> lower, upper;
  for (const auto& t : s.lower.terms)
    lower.push_back("dim " + std::to_string(t.dim()));
  for (const auto& t : s.upper.terms)
    upper.push_back("dim " + std::to_string(t.dim()));
  rep.list("lower_series", lower);
  rep.list("upper_series", upper);
  rep.kv("lie_nilpotent", s.lower.lie_nilpotent);
  rep.kv("classes_agree", s.classes_agree);
  if (s.class_value)
    rep.kv("class", *s.class_value);
  else
    rep.kv("class", std::string("not nilpotent within bound"));
  finish(rep);
  return s.lower.lie_nilpotent ? 0 : 1;
}

int cmd_multiplier(const std::string& path, long level, bool stabilize) {
  std::string content = slurp(path);
  leibal::LeibnizAlgebra g = leibal::parse_algebra(content);
  leibal::MultiplierOptions opts;
  if (level > 0)
    opts.level = static_cast<size_t>(level);
  opts.stabilize = stabilize;
  leibal::MultiplierResult res = leibal::schur_lie_multiplier(g, opts);
  leibal::Report rep;
  head(rep, "multiplier", path, content, g);
  rep.kv("multiplier_dim", res.dim);
  rep.kv("level", res.level_used);
  rep.kv("stabilized", res.stabilized);
  rep.list("representatives", res.representative_labels);
  finish(rep);
  return 0;
}

int cmd_seq(const std::string& path, const std::string& ideal_expr) {
  std::string content = slurp(path);
  leibal::LeibnizAlgebra g = leibal::parse_algebra(content);
  leibal::Subspace seed =
      leibal::span(g.field(), g.dim(), leibal::parse_vector_list(ideal_expr, g));
  leibal::IdealWitness n = leibal::ideal_closure(g, seed);
  leibal::FourTermReport ft = leibal::four_term_sequence(g, n);
  leibal::Report rep;
  head(rep, "seq", path, content, g);
  rep.list("ideal", n.space.row_strings(g.labels()));
  rep.kv("ideal_dim", n.space.dim());
  rep.kv("level", ft.level);
  rep.kv("t1", ft.dims[0]);
  rep.kv("t2_multiplier", ft.dims[1]);
  rep.kv("t3_multiplier_of_quotient", ft.dims[2]);
  rep.kv("t4", ft.dims[3]);
  rep.kv("t4_direct", ft.t4_direct);
  rep.kv("exact", ft.exact);
  rep.kv("dims_identity", ft.dims_identity);
  finish(rep);
  return ft.exact && ft.dims_identity ? 0 : 1;
}

int cmd_cover(const std::string& path, uint64_t seed) {
  std::string content = slurp(path);
  leibal::LeibnizAlgebra g = leibal::parse_algebra(content);
  leibal::CoverResult res = leibal::stem_cover(g, seed);
  leibal::Report rep;
  head(rep, "cover", path, content, g);
  rep.kv("seed", static_cast<size_t>(seed));
  rep.kv("level", res.level);
  rep.kv("multiplier_dim", res.multiplier_dim);
  rep.kv("complement_found", res.complement_found);
  if (res.complement_found) {
    const leibal::Extension& e = *res.ext;
    rep.kv("cover_dim", e.total.dim());
    std::vector<std::string> brackets;
    for (const leibal::BracketEntry& be : e.total.entries())
      brackets.push_back("[" + e.total.labels()[be.i] + "," +
                         e.total.labels()[be.j] + "] = " +
                         (be.c == 1 ? "" : leibal::Field::str(be.c) + "*") +
                         e.total.labels()[be.k]);
    rep.list("cover_brackets", brackets);
    leibal::ExtensionFlags flags = leibal::classify_extension(e);
    rep.kv("lie_central", flags.lie_central);
    rep.kv("stem", flags.stem);
    rep.kv("cover", flags.cover);
    leibal::Subspace z = leibal::centers(e.total).lie_center.space;
    rep.kv("center_quotient_dim", z.dim() - e.kernel.space.dim());
  }
  finish(rep);
  return res.complement_found ? 0 : 1;
}

int cmd_capable(const std::string& path) {
  std::string content = slurp(path);
  leibal::LeibnizAlgebra g = leibal::parse_algebra(content);
  leibal::CapabilityReport res = leibal::is_lie_capable(g);
  leibal::Report rep;
  head(rep, "capable", path, content, g);
  rep.kv("precise_lie_center_dim", res.z_star.dim());
  rep.list("precise_lie_center", res.z_star.row_strings(g.labels()));
  rep.kv("capable", res.capable);
  rep.kv("sigma_criterion_ok", res.sigma_criterion_ok);
  finish(rep);
  return res.capable ? 0 : 1;
}

int cmd_normalizer(const std::string& path, const std::string& subspace_expr) {
  std::string content = slurp(path);
  leibal::LeibnizAlgebra g = leibal::parse_algebra(content);
  leibal::Subspace m =
      leibal::span(g.field(), g.dim(), leibal::parse_vector_list(subspace_expr, g));
  leibal::Subspace norm = leibal::lie_normalizer(g, m);
  leibal::Report rep;
  head(rep, "normalizer", path, content, g);
  rep.list("subspace", m.row_strings(g.labels()));
  rep.kv("normalizer_dim", norm.dim());
  rep.list("normalizer", norm.row_strings(g.labels()));
  auto fail = leibal::subalgebra_failure(g, norm);
  rep.kv("normalizer_is_subalgebra", !fail.has_value());
  if (fail) {
    rep.kv("witness_pair", "[" + leibal::sv_str(fail->first, g.labels()) + ", " +
                               leibal::sv_str(fail->second, g.labels()) + "]");
    rep.kv("witness_bracket",
           leibal::sv_str(g.bracket(fail->first, fail->second), g.labels()));
  }
  finish(rep);
  return 0;
}

int cmd_catalog_verify(long dim_filter, const std::string& params) {
  std::map<std::string, mpq_class> overrides =
      params.empty() ? std::map<std::string, mpq_class>{} : parse_params(params);
  leibal::Report rep;
  rep.kv("command", "catalog verify");
  bool all_ok = true;
  std::vector<std::string> lines;
  for (const leibal::CatalogEntry& e : leibal::catalog_entries()) {
    if (dim_filter > 0 && e.dim != static_cast<size_t>(dim_filter))
      continue;
    std::map<std::string, mpq_class> vals;
    for (const leibal::CatalogParameter& p : e.parameters) {
      auto it = overrides.find(p.name);
      if (it != overrides.end())
        vals[p.name] = it->second;
    }
    leibal::CatalogVerifyReport r = leibal::verify_entry(e, vals);
    std::string cls = r.computed_class
                          ? std::to_string(*r.computed_class)
                          : std::string("not nilpotent within bound");
    lines.push_back(e.id + ": leibniz " + (r.leibniz_ok ? "ok" : "FAIL") +
                    ", non-Lie " + (r.non_lie_ok ? "ok" : "FAIL") + ", class " +
                    cls + " (expected " + std::to_string(r.expected_class) +
                    ") " + (r.class_ok ? "ok" : "FAIL"));
    all_ok = all_ok && r.all_ok();
  }
  if (dim_filter <= 0 || dim_filter == 5) {
    const leibal::LeibnizAlgebra& g = leibal::remark5_algebra();
    bool leib = leibal::check_leibniz(g).ok;
    leibal::Subspace m = leibal::span(g.field(), g.dim(), {leibal::SVec::unit(0)});
    leibal::Subspace norm = leibal::lie_normalizer(g, m);
    bool norm_ok = norm.dim() == 4;
    auto fail = leibal::subalgebra_failure(g, norm);
    lines.push_back(std::string("remark_d5: leibniz ") + (leib ? "ok" : "FAIL") +
                    ", normalizer dim " + std::to_string(norm.dim()) +
                    (norm_ok ? " ok" : " FAIL") + ", subalgebra " +
                    (fail ? "no (as printed)" : "yes (FAIL)"));
    all_ok = all_ok && leib && norm_ok && fail.has_value();
  }
  rep.list("entries", lines);
  rep.kv("all_ok", all_ok);
  finish(rep);
  return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants of finite-dimensional Leibniz algebras "
               "relative to their largest Lie quotient"};
  app.require_subcommand(1);

  std::string file, ideal_expr, subspace_expr, params;
  long level = 0, dim_filter = 0;
  uint64_t seed = 0;
  bool stabilize = true;

  auto* c_check = app.add_subcommand("check", "verify the Leibniz identity");
  c_check->add_option("file", file)->required();

  auto* c_inv = app.add_subcommand("invariants", "centers, annihilator span, "
                                                 "largest Lie quotient");
  c_inv->add_option("file", file)->required();

  auto* c_series = app.add_subcommand("series", "lower/upper central series "
                                                "relative to the Lie quotient");
  c_series->add_option("file", file)->required();

  auto* c_mult = app.add_subcommand("multiplier", "Schur multiplier relative "
                                                  "to the Liezation functor");
  c_mult->add_option("file", file)->required();
  c_mult->add_option("--level", level, "truncation level override");
  c_mult->add_flag("--stabilize,!--no-stabilize", stabilize,
                   "verify the next level agrees (default on)");

  auto* c_seq = app.add_subcommand("seq", "four-term exact sequence for an ideal");
  c_seq->add_option("file", file)->required();
  c_seq->add_option("--ideal", ideal_expr,
                    "comma-separated spanning vectors; closed to an ideal")
      ->required();

  auto* c_cover = app.add_subcommand("cover", "construct a stem cover");
  c_cover->add_option("file", file)->required();
  c_cover->add_option("--seed", seed, "complement seed (LEIBAL_SEED overrides)");

  auto* c_cap = app.add_subcommand("capable", "precise Lie-center and capability");
  c_cap->add_option("file", file)->required();

  auto* c_norm = app.add_subcommand("normalizer", "normalizer of a subspace");
  c_norm->add_option("file", file)->required();
  c_norm->add_option("--subspace", subspace_expr,
                     "comma-separated spanning vectors")
      ->required();

  auto* c_catalog = app.add_subcommand("catalog", "bundled classification table");
  auto* c_catv = c_catalog->add_subcommand("verify", "re-verify table rows");
  c_catv->add_option("--dim", dim_filter, "restrict to one dimension");
  c_catv->add_option("--params", params, "parameter overrides k=v,...");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e); // prints the message and usage hint
    return 2;
  }

  auto t0 = std::chrono::steady_clock::now();
  int status = 2;
  try {
    if (*c_check)
      status = cmd_check(file);
    else if (*c_inv)
      status = cmd_invariants(file);
    else if (*c_series)
      status = cmd_series(file);
    else if (*c_mult)
      status = cmd_multiplier(file, level, stabilize);
    else if (*c_seq)
      status = cmd_seq(file, ideal_expr);
    else if (*c_cover)
      status = cmd_cover(file, effective_seed(seed));
    else if (*c_cap)
      status = cmd_capable(file);
    else if (*c_norm)
      status = cmd_normalizer(file, subspace_expr);
    else if (*c_catalog) {
      if (!*c_catv) {
        std::cerr << "catalog: missing subcommand (try 'catalog verify')\n";
        return 2;
      }
      status = cmd_catalog_verify(dim_filter, params);
    }
  } catch (const leibal::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  std::cerr << "# elapsed_ms " << ms << "\n";
  return status;
}
