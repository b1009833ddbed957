#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "hopflab/check_report.hpp"
#include "hopflab/core/comodule.hpp"
#include "hopflab/core/forms.hpp"
#include "hopflab/twines/sparse_matrix.hpp"

namespace hopflab {

/// An object of the strict monoidal category of right comodules: a tensor word
/// in registered comodules. The empty word is the unit object I.
using Word = std::vector<std::size_t>;

Word concat(const Word& a, const Word& b);

class ComoduleCategory {
 public:
  /// Every atom is verified; a one-dimensional trivial atom is rejected since
  /// I is the empty word.
  ComoduleCategory(HopfPtr h, std::vector<Comodule> atoms);
  /// A single atom: the regular comodule.
  static std::shared_ptr<const ComoduleCategory> regular(const HopfPtr& h);

  const HopfPtr& algebra() const noexcept { return algebra_; }
  Field field() const { return algebra_->field(); }
  const std::vector<Comodule>& atoms() const noexcept { return atoms_; }

  std::size_t dim(const Word& w) const;
  const Comodule& comodule(const Word& w) const;
  std::string label(const Word& w) const;
  /// "I" or "trivial" for the unit, otherwise atom labels joined by '*'.
  Word parse(std::string_view text) const;

 private:
  HopfPtr algebra_;
  std::vector<Comodule> atoms_;
  mutable std::map<Word, Comodule> cache_;
};

using CategoryPtr = std::shared_ptr<const ComoduleCategory>;

/// The objects the axioms are instantiated on, and a cap on the dimension of
/// any single instance. Instances above the cap are skipped and counted.
struct CheckScope {
  std::vector<Word> objects;
  std::size_t budget = 4096;
};

/// {I, R, R (x) R} for atom 0.
CheckScope default_scope();

// --- families -------------------------------------------------------------

/// D_{X,Y} : X (x) Y -> X (x) Y.
class PairMapFamily {
 public:
  explicit PairMapFamily(CategoryPtr cat) : cat_(std::move(cat)) {}
  virtual ~PairMapFamily() = default;
  const ComoduleCategory& category() const { return *cat_; }
  const CategoryPtr& category_ptr() const { return cat_; }
  /// Throws MissingMatrix when the family has nothing for (x, y).
  const SparseMatrix& at(const Word& x, const Word& y) const;
  const SparseMatrix& inverse_at(const Word& x, const Word& y) const;

 protected:
  virtual SparseMatrix compute(const Word& x, const Word& y) const = 0;
  virtual SparseMatrix compute_inverse(const Word& x, const Word& y) const = 0;

 private:
  CategoryPtr cat_;
  mutable std::map<std::pair<Word, Word>, SparseMatrix> cache_, inverse_cache_;
};

using PairFamilyPtr = std::shared_ptr<const PairMapFamily>;

/// A_{X,Y,Z} and B_{X,Y,Z} on X (x) Y (x) Z.
class TripleMapFamily {
 public:
  explicit TripleMapFamily(CategoryPtr cat) : cat_(std::move(cat)) {}
  virtual ~TripleMapFamily() = default;
  const ComoduleCategory& category() const { return *cat_; }
  const CategoryPtr& category_ptr() const { return cat_; }
  const SparseMatrix& a(const Word& x, const Word& y, const Word& z) const;
  const SparseMatrix& a_inverse(const Word& x, const Word& y, const Word& z) const;
  const SparseMatrix& b(const Word& x, const Word& y, const Word& z) const;
  const SparseMatrix& b_inverse(const Word& x, const Word& y, const Word& z) const;

 protected:
  enum class Which { a, a_inverse, b, b_inverse };
  virtual SparseMatrix compute(Which w, const Word& x, const Word& y, const Word& z) const = 0;

 private:
  const SparseMatrix& get(Which w, const Word& x, const Word& y, const Word& z) const;
  CategoryPtr cat_;
  mutable std::map<std::tuple<int, Word, Word, Word>, SparseMatrix> cache_;
};

using TripleFamilyPtr = std::shared_ptr<const TripleMapFamily>;

/// R_X : X -> X.
class ObjectMapFamily {
 public:
  explicit ObjectMapFamily(CategoryPtr cat) : cat_(std::move(cat)) {}
  virtual ~ObjectMapFamily() = default;
  const ComoduleCategory& category() const { return *cat_; }
  const CategoryPtr& category_ptr() const { return cat_; }
  const SparseMatrix& at(const Word& x) const;
  const SparseMatrix& inverse_at(const Word& x) const;

 protected:
  virtual SparseMatrix compute(const Word& x) const = 0;
  virtual SparseMatrix compute_inverse(const Word& x) const = 0;

 private:
  CategoryPtr cat_;
  mutable std::map<Word, SparseMatrix> cache_, inverse_cache_;
};

using ObjectFamilyPtr = std::shared_ptr<const ObjectMapFamily>;

/// T_{M,N}(m (x) n) = m_0 (x) n_0 sigma(m_1, n_1).
SparseMatrix cocycle_matrix(const BilinearForm& sigma, const Comodule& m, const Comodule& n);
/// R_M(m) = m_0 gamma(m_1).
SparseMatrix element_matrix(const LinearForm& gamma, const Comodule& m);

/// sigma must be lazy and invertible (PrereqViolated / NotInvertible).
PairFamilyPtr twine_from_cocycle(const BilinearForm& sigma, CategoryPtr cat);

using PairTable = std::map<std::pair<Word, Word>, SparseMatrix>;
using TripleTable = std::map<std::tuple<Word, Word, Word>, std::pair<SparseMatrix, SparseMatrix>>;
using ObjectTable = std::map<Word, SparseMatrix>;

/// Matrices listed per pair; each must be square of the right size and
/// invertible. Unlisted pairs throw MissingMatrix on use.
PairFamilyPtr explicit_pair_family(CategoryPtr cat, PairTable table);
/// Each entry is (A, B).
TripleFamilyPtr explicit_triple_family(CategoryPtr cat, TripleTable table);
ObjectFamilyPtr explicit_object_family(CategoryPtr cat, ObjectTable table);

/// base with the single matrix at (x, y) multiplied by c.
PairFamilyPtr scaled_family(PairFamilyPtr base, Word x, Word y, Scalar c);
/// base with A (or B) at (x, y, z) multiplied by c.
TripleFamilyPtr scaled_triple_family(TripleFamilyPtr base, bool scale_a, Word x, Word y, Word z, Scalar c);

/// Every matrix of the family on pairs (triples) of scope objects within budget.
// Every word a check over `scope` can touch: tensor products of up to four
// scope objects whose dimension stays within the budget.
std::vector<Word> reachable_words(const ComoduleCategory& cat, const CheckScope& scope);
PairTable tabulate(const PairMapFamily& d, const CheckScope& scope);
TripleTable tabulate(const TripleMapFamily& f, const CheckScope& scope);
ObjectTable tabulate(const ObjectMapFamily& r, const CheckScope& scope);

/// A_{X,Y,Z} = D_{X(x)Y,Z}(id (x) D_{Y,Z}^-1), B_{X,Y,Z} = (id (x) D_{Y,Z}^-1) D_{X(x)Y,Z},
/// with no axiom check on D.
TripleFamilyPtr triple_formulas(PairFamilyPtr d);
/// Checks the twine axioms first (AxiomViolation), then triple_formulas.
TripleFamilyPtr pure_braided_from_twine(PairFamilyPtr d, const CheckScope& scope = default_scope());
/// Checks the pure-braided axioms first, then D_{U,V} = A_{U,I,V}.
PairFamilyPtr twine_from_pure_braided(TripleFamilyPtr f, const CheckScope& scope = default_scope());

/// gamma must be lazy and invertible.
ObjectFamilyPtr d_structure_from_element(const LinearForm& gamma, CategoryPtr cat);
/// D^1(R)_{X,Y} = (R_X (x) R_Y) R_{X(x)Y}^-1; every matrix is also built as
/// R_{X(x)Y}^-1 (R_X (x) R_Y) and AxiomViolation is thrown if they differ.
PairFamilyPtr d1_of_R(ObjectFamilyPtr r);

// --- checks ---------------------------------------------------------------

CheckReport check_twine(const PairMapFamily& d, const CheckScope& scope = default_scope());
CheckReport check_strong_twine(const PairMapFamily& t, const CheckScope& scope = default_scope());
CheckReport check_inter(const PairMapFamily& d, const CheckScope& scope = default_scope());
/// The commutations every natural family satisfies.
CheckReport check_naturality_commutations(const PairMapFamily& d, const CheckScope& scope = default_scope());
CheckReport check_pure_braided(const TripleMapFamily& f, const CheckScope& scope = default_scope());
CheckReport check_d_structure(const ObjectMapFamily& r, const CheckScope& scope = default_scope());

struct ComoduleMorphism {
  std::string name;
  Word source;
  Word target;
  SparseMatrix map;  // dim target x dim source
};

/// Throws AxiomViolation if f does not intertwine the coactions.
void require_comodule_morphism(const ComoduleCategory& cat, const ComoduleMorphism& f);
/// Unit I -> R and multiplication R (x) R -> R when atom 0 is regular.
std::vector<ComoduleMorphism> default_morphisms(const ComoduleCategory& cat);
/// D_{X',Y}(f (x) id) = (f (x) id) D_{X,Y} and the mirror, for every
/// morphism f : X -> X' and scope object Y.
CheckReport check_naturality(const PairMapFamily& d, const std::vector<ComoduleMorphism>& morphisms,
                             const CheckScope& scope = default_scope());

CheckReport same_family(const PairMapFamily& a, const PairMapFamily& b, const CheckScope& scope = default_scope());
CheckReport same_family(const TripleMapFamily& a, const TripleMapFamily& b, const CheckScope& scope = default_scope());

}  // namespace hopflab
