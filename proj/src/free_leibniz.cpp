#include "leibal/free_leibniz.hpp"

#include <stdexcept>

namespace leibal {

namespace {
constexpr const char* kGenLetters = "xyzuvw";
}

TruncatedFreeAlgebra::TruncatedFreeAlgebra(Field f, size_t n_generators,
                                           size_t level)
    : f_(f), n_(n_generators), level_(level) {
  if (n_ > 200)
    throw unsupported_input("too many generators for a truncated free algebra");
  offset_.assign(level_ + 2, 0);
  size_t pow = 1, total = 0;
  for (size_t d = 1; d <= level_; ++d) {
    offset_[d] = total;
    pow *= n_;
    total += pow;
  }
  offset_[level_ + 1] = total;
  dim_ = total;
}

size_t TruncatedFreeAlgebra::degree(size_t idx) const {
  for (size_t d = 1; d <= level_; ++d)
    if (idx < offset_[d + 1])
      return d;
  throw dim_mismatch("word index outside the truncated basis");
}

Word TruncatedFreeAlgebra::word(size_t idx) const {
  size_t d = degree(idx);
  size_t rem = idx - offset_[d];
  Word w(d);
  for (size_t pos = d; pos-- > 0;) {
    w[pos] = static_cast<uint8_t>(rem % n_);
    rem /= n_;
  }
  return w;
}

size_t TruncatedFreeAlgebra::word_index(const Word& w) const {
  if (w.empty() || w.size() > level_)
    throw dim_mismatch("word length outside 1..level");
  size_t rem = 0;
  for (uint8_t g : w) {
    if (g >= n_)
      throw dim_mismatch("generator index out of range");
    rem = rem * n_ + g;
  }
  return offset_[w.size()] + rem;
}

std::string TruncatedFreeAlgebra::word_label(size_t idx) const {
  Word w = word(idx);
  std::string out;
  for (size_t pos = 0; pos < w.size(); ++pos) {
    if (n_ <= 6) {
      out += kGenLetters[w[pos]];
    } else {
      if (pos)
        out += '.';
      out += "x" + std::to_string(w[pos] + 1);
    }
  }
  return out;
}

std::vector<std::string> TruncatedFreeAlgebra::labels() const {
  std::vector<std::string> out;
  out.reserve(dim_);
  for (size_t i = 0; i < dim_; ++i)
    out.push_back(word_label(i));
  return out;
}

SVec TruncatedFreeAlgebra::bracket_by_generator(const SVec& u, uint8_t gen) const {
  SVec out;
  for (const auto& [idx, c] : u.t) {
    size_t d = degree(idx);
    if (d + 1 > level_)
      continue;
    // appending a letter preserves graded-lex order within u, so indices
    // stay increasing and no merge is needed
    size_t child = offset_[d + 1] + (idx - offset_[d]) * n_ + gen;
    out.t.emplace_back(static_cast<uint32_t>(child), c);
  }
  return out;
}

SVec TruncatedFreeAlgebra::bracket_words(size_t i, size_t j) const {
  if (degree(i) + degree(j) > level_)
    return {};
  uint64_t key = static_cast<uint64_t>(i) * dim_ + j;
  {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end())
      return it->second;
  }
  SVec result = bracket_words_nolock(i, j);
  std::lock_guard<std::mutex> lock(memo_mutex_);
  return memo_.emplace(key, std::move(result)).first->second;
}

SVec TruncatedFreeAlgebra::bracket_words_nolock(size_t i, size_t j) const {
  size_t dj = degree(j);
  if (dj == 1) {
    Word wj = word(j);
    return bracket_by_generator(SVec::unit(static_cast<uint32_t>(i)), wj[0]);
  }
  // w_j = w · x with x the last letter
  size_t rem = j - offset_[dj];
  uint8_t x = static_cast<uint8_t>(rem % n_);
  size_t w_idx = offset_[dj - 1] + rem / n_;

  SVec term1 = bracket_by_generator(bracket_words(i, w_idx), x);
  SVec term2;
  if (degree(i) + 1 <= level_) {
    size_t ux = offset_[degree(i) + 1] + (i - offset_[degree(i)]) * n_ + x;
    term2 = bracket_words(ux, w_idx);
  }
  return sv_sub(f_, term1, term2);
}

SVec TruncatedFreeAlgebra::bracket(const SVec& u, const SVec& v) const {
  SVec out;
  for (const auto& [i, cu] : u.t)
    for (const auto& [j, cv] : v.t) {
      if (degree(i) + degree(j) > level_)
        continue;
      sv_axpy(f_, out, f_.mul(cu, cv), bracket_words(i, j));
    }
  return out;
}

Subspace TruncatedFreeAlgebra::sym_span(const Subspace& s) const {
  if (s.ambient() != dim_ || s.field() != f_)
    throw dim_mismatch("subspace does not live in this free algebra");
  EchelonBuilder b(f_, dim_);
  for (const SVec& v : s.rows()) {
    size_t min_deg = level_;
    for (const auto& [idx, c] : v.t)
      min_deg = std::min(min_deg, degree(idx));
    if (v.is_zero())
      continue;
    size_t max_w = level_ - min_deg;
    for (size_t w = 0; w < offset_[max_w + 1]; ++w) {
      SVec uw = SVec::unit(static_cast<uint32_t>(w));
      b.absorb(sv_add(f_, bracket(uw, v), bracket(v, uw)));
    }
  }
  return b.take();
}

Subspace TruncatedFreeAlgebra::sym_span_full() const {
  EchelonBuilder b(f_, dim_);
  for (size_t i = 0; i < dim_; ++i) {
    size_t di = degree(i);
    if (di + 1 > level_)
      continue;
    for (size_t j = i; j < offset_[level_ - di + 1]; ++j)
      b.absorb(sv_add(f_, bracket_words(i, j), bracket_words(j, i)));
  }
  return b.take();
}

Subspace Presentation::preimage(const Subspace& s) const {
  if (s.ambient() != target.dim())
    throw dim_mismatch("preimage target outside the presented algebra");
  return solve_membership({eval}, s);
}

std::vector<SVec> minimal_generators(const LeibnizAlgebra& g) {
  std::vector<Subspace> series = ordinary_lower_series(g);
  if (!series.back().is_zero()) {
    std::string rows;
    for (const std::string& s : series.back().row_strings(g.labels()))
      rows += (rows.empty() ? "" : ", ") + s;
    throw unsupported_input(
        "algebra is not nilpotent for the ordinary lower central series; "
        "the series stabilizes at the nonzero term { " + rows + " }");
  }
  Subspace gamma2 = series.size() > 1 ? series[1] : g.zero_space();
  return quotient_basis(g.full_space(), gamma2);
}

Presentation present_with(const LeibnizAlgebra& g, const std::vector<SVec>& gens,
                          size_t level) {
  const Field& f = g.field();
  auto free = std::make_shared<const TruncatedFreeAlgebra>(f, gens.size(), level);

  // images by increasing degree: img(w·x) = [img(w), gens[x]]
  std::vector<SVec> img(free->dim());
  for (size_t idx = 0; idx < free->dim(); ++idx) {
    Word w = free->word(idx);
    if (w.size() == 1) {
      img[idx] = gens[w[0]];
      continue;
    }
    Word prefix(w.begin(), w.end() - 1);
    img[idx] = g.bracket(img[free->word_index(prefix)], gens[w.back()]);
  }
  LinMap eval = LinMap::from_columns(f, g.dim(), img);

  EchelonBuilder image_span(f, g.dim());
  for (const SVec& v : img)
    image_span.absorb(v);
  if (image_span.rank() != g.dim())
    throw bad_homomorphism("generating set does not generate the algebra "
                           "(evaluation is not surjective)");

  Presentation p{free, g, gens, std::move(eval), Subspace(f, 0)};
  p.kernel = p.eval.kernel();

  // homomorphism check, degree pairs within the level: exact equality
  for (size_t i = 0; i < free->dim(); ++i) {
    size_t di = free->degree(i);
    if (di + 1 > level)
      break;
    for (size_t j = 0; j < free->dim() && free->degree(j) + di <= level; ++j) {
      SVec lhs = p.eval.apply(free->bracket_words(i, j));
      SVec rhs = g.bracket(img[i], img[j]);
      if (!(lhs == rhs))
        throw bad_homomorphism("evaluation fails the homomorphism law on "
                               "words " + free->word_label(i) + ", " +
                               free->word_label(j));
    }
  }
  // degree pairs beyond the level truncate to zero in the free algebra, so
  // the corresponding bracket spans in the target must vanish
  std::vector<Subspace> deg_span;
  for (size_t d = 1; d <= level; ++d) {
    EchelonBuilder b(f, g.dim());
    for (size_t idx = 0; idx < free->dim(); ++idx)
      if (free->degree(idx) == d)
        b.absorb(img[idx]);
    deg_span.push_back(b.take());
  }
  for (size_t a = 1; a <= level; ++a)
    for (size_t b = 1; b <= level; ++b) {
      if (a + b <= level)
        continue;
      for (const SVec& u : deg_span[a - 1].rows())
        for (const SVec& v : deg_span[b - 1].rows())
          if (!g.bracket(u, v).is_zero())
            throw bad_homomorphism(
                "truncation is unsound at this level: nonzero product in "
                "degree " + std::to_string(a + b));
    }
  return p;
}

Presentation present(const LeibnizAlgebra& g, size_t level) {
  std::optional<size_t> c = ordinary_class(g);
  if (!c)
    throw unsupported_input("free presentation needs an ordinary-nilpotent algebra");
  if (level < *c)
    throw unsupported_input("truncation level " + std::to_string(level) +
                            " is below the nilpotency class " + std::to_string(*c));
  Presentation p = present_with(g, minimal_generators(g), level);
  // words of degree above the class must already die in the target
  for (size_t idx = 0; idx < p.free->dim(); ++idx)
    if (p.free->degree(idx) >= *c + 1 && !p.eval.column(idx).is_zero())
      throw std::logic_error("image of a word beyond the nilpotency class survived");
  return p;
}

} // namespace leibal
