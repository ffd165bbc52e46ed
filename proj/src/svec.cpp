#include "leibal/svec.hpp"

namespace leibal {

mpq_class SVec::at(uint32_t i) const {
  for (const auto& [j, c] : t) {
    if (j == i)
      return c;
    if (j > i)
      break;
  }
  return mpq_class(0);
}

std::vector<mpq_class> SVec::dense(size_t ambient) const {
  std::vector<mpq_class> out(ambient, mpq_class(0));
  for (const auto& [j, c] : t)
    out[j] = c;
  return out;
}

void sv_axpy(const Field& f, SVec& y, const mpq_class& c, const SVec& x) {
  if (f.is_zero(c) || x.is_zero())
    return;
  SVec out;
  out.t.reserve(y.t.size() + x.t.size());
  size_t a = 0, b = 0;
  while (a < y.t.size() || b < x.t.size()) {
    if (b == x.t.size() || (a < y.t.size() && y.t[a].first < x.t[b].first)) {
      out.t.push_back(y.t[a++]);
    } else if (a == y.t.size() || x.t[b].first < y.t[a].first) {
      mpq_class e = f.mul(c, x.t[b].second);
      if (!f.is_zero(e))
        out.t.emplace_back(x.t[b].first, e);
      ++b;
    } else {
      mpq_class e = f.add(y.t[a].second, f.mul(c, x.t[b].second));
      if (!f.is_zero(e))
        out.t.emplace_back(y.t[a].first, e);
      ++a;
      ++b;
    }
  }
  y = std::move(out);
}

SVec sv_add(const Field& f, const SVec& a, const SVec& b) {
  SVec r = a;
  sv_axpy(f, r, mpq_class(1), b);
  return r;
}

SVec sv_sub(const Field& f, const SVec& a, const SVec& b) {
  SVec r = a;
  sv_axpy(f, r, mpq_class(-1), b);
  return r;
}

SVec sv_scale(const Field& f, const mpq_class& c, const SVec& a) {
  SVec r;
  if (f.is_zero(c))
    return r;
  r.t.reserve(a.t.size());
  for (const auto& [j, e] : a.t) {
    mpq_class x = f.mul(c, e);
    if (!f.is_zero(x))
      r.t.emplace_back(j, x);
  }
  return r;
}

SVec sv_neg(const Field& f, const SVec& a) {
  return sv_scale(f, mpq_class(-1), a);
}

mpq_class sv_dot(const Field& f, const SVec& a, const SVec& b) {
  mpq_class acc(0);
  size_t i = 0, j = 0;
  while (i < a.t.size() && j < b.t.size()) {
    if (a.t[i].first < b.t[j].first)
      ++i;
    else if (b.t[j].first < a.t[i].first)
      ++j;
    else {
      acc = f.add(acc, f.mul(a.t[i].second, b.t[j].second));
      ++i;
      ++j;
    }
  }
  return acc;
}

SVec sv_from_dense(const Field& f, const std::vector<mpq_class>& coords) {
  SVec v;
  for (uint32_t i = 0; i < coords.size(); ++i) {
    mpq_class c = f.reduce(coords[i]);
    if (!f.is_zero(c))
      v.t.emplace_back(i, c);
  }
  return v;
}

std::string sv_str(const SVec& v, const std::vector<std::string>& labels) {
  if (v.is_zero())
    return "0";
  std::string out;
  bool first = true;
  for (const auto& [j, c] : v.t) {
    std::string lbl = j < labels.size() ? labels[j] : "e" + std::to_string(j + 1);
    if (first) {
      if (c == 1)
        out = lbl;
      else if (c == -1)
        out = "-" + lbl;
      else
        out = c.get_str() + "*" + lbl;
      first = false;
      continue;
    }
    if (c == 1)
      out += " + " + lbl;
    else if (c == -1)
      out += " - " + lbl;
    else if (c > 0)
      out += " + " + c.get_str() + "*" + lbl;
    else
      out += " - " + mpq_class(-c).get_str() + "*" + lbl;
  }
  return out;
}

} // namespace leibal
