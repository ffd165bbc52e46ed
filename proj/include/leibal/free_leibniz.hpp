#pragma once

#include <memory>
#include <mutex>
#include <unordered_map>

#include "leibal/leibniz.hpp"

namespace leibal {

/// Tensor word in the generators, nonempty, degree = length.
using Word = std::vector<uint8_t>;

/// Free Leibniz algebra on n generators truncated at level L: the basis is
/// all words of degree 1..L in graded-lexicographic order, and every bracket
/// landing in degree > L is zero.  Bracketing is forced by two rules:
///   (i)  [u, x] = u·x for a generator x,
///   (ii) [u, w·x] = [[u,w],x] - [[u,x],w],
/// the second being the Leibniz identity read right-to-left; it terminates
/// because the right operand's degree strictly drops.  Word-pair results are
/// memoized.
///
/// The memo table is the only mutable state; it is guarded by a mutex so the
/// object behaves as a coherent cache under concurrent const use.  Everything
/// else is immutable after construction.
class TruncatedFreeAlgebra {
public:
  TruncatedFreeAlgebra(Field f, size_t n_generators, size_t level);

  const Field& field() const { return f_; }
  size_t n_generators() const { return n_; }
  size_t level() const { return level_; }
  size_t dim() const { return dim_; }

  size_t degree(size_t idx) const;
  Word word(size_t idx) const;
  size_t word_index(const Word& w) const;

  std::string word_label(size_t idx) const;
  std::vector<std::string> labels() const;

  /// [w_i, w_j]; zero when the degrees overflow the level.
  SVec bracket_words(size_t i, size_t j) const;
  SVec bracket(const SVec& u, const SVec& v) const;

  /// [u, x_gen] = append the generator to every word of u.
  SVec bracket_by_generator(const SVec& u, uint8_t gen) const;

  Subspace full_space() const { return Subspace::full(f_, dim_); }
  Subspace zero_space() const { return Subspace::zero(f_, dim_); }

  /// span{[w,v] + [v,w] : w basis word, v row of s}.
  Subspace sym_span(const Subspace& s) const;
  /// span of all symmetrized brackets of basis words.
  Subspace sym_span_full() const;

private:
  Field f_;
  size_t n_, level_, dim_;
  std::vector<size_t> offset_; // offset_[d] = first index of degree d (1-based degrees)

  mutable std::unordered_map<uint64_t, SVec> memo_;
  mutable std::mutex memo_mutex_;

  SVec bracket_words_nolock(size_t i, size_t j) const;
};

/// Free presentation of a finite-dimensional algebra: a surjective
/// evaluation homomorphism from a truncated free algebra, with its kernel.
struct Presentation {
  std::shared_ptr<const TruncatedFreeAlgebra> free;
  LeibnizAlgebra target;
  std::vector<SVec> generator_images; // in target coordinates
  LinMap eval;                        // dim(target) x dim(free)
  Subspace kernel;

  SVec eval_of(const SVec& v) const { return eval.apply(v); }
  /// eval^{-1}(s); always contains the kernel.
  Subspace preimage(const Subspace& s) const;
};

/// Lifts of a basis of g / [g,g]; requires g nilpotent for the ordinary
/// lower central series, else unsupported_input naming the stabilized term.
std::vector<SVec> minimal_generators(const LeibnizAlgebra& g);

/// Presentation on minimal generators at the given truncation level
/// (level must be at least the ordinary nilpotency class).  Word images are
/// left-normed brackets of the generator images; the evaluation map is
/// verified to be a surjective homomorphism.
Presentation present(const LeibnizAlgebra& g, size_t level);

/// Same with a caller-supplied generating set.
Presentation present_with(const LeibnizAlgebra& g, const std::vector<SVec>& gens,
                          size_t level);

} // namespace leibal
