#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hopflab/check_report.hpp"
#include "hopflab/exact/matrix.hpp"

namespace hopflab {

using exact::Field;
using exact::Matrix;
using exact::Scalar;
using exact::Vector;

/// One summand c * e_{idx[0]} (x) ... (x) e_{idx[R-1]} of a tensor.
template <std::size_t R>
struct Term {
  std::array<std::size_t, R> idx;
  Scalar coeff;
};

using Term2 = Term<2>;
using Term3 = Term<3>;
using Term4 = Term<4>;

/// Raw structure constants, as read from a file or built by a constructor.
struct HopfTables {
  Field field = Field::rational();
  std::size_t dim = 0;
  std::vector<std::string> labels;
  /// mult[(i * dim + j) * dim + k] is the coefficient of e_k in e_i e_j.
  std::vector<Scalar> mult;
  Vector unit;
  /// comult[i] lists the terms of Delta(e_i).
  std::vector<std::vector<Term2>> comult;
  Vector counit;
  /// antipode(i, k) is the coefficient of e_k in S(e_i): row i is S(e_i).
  Matrix antipode;
};

/// A finite-dimensional Hopf algebra given by structure constants. The
/// constructor only checks shapes and fields; the axioms are decided by
/// verify_hopf.
class HopfAlgebra {
 public:
  explicit HopfAlgebra(HopfTables tables);

  Field field() const noexcept { return t_.field; }
  std::size_t dim() const noexcept { return t_.dim; }
  const std::vector<std::string>& labels() const noexcept { return t_.labels; }
  const HopfTables& tables() const noexcept { return t_; }
  std::size_t index_of(const std::string& label) const;

  std::span<const Scalar> product(std::size_t i, std::size_t j) const {
    return {t_.mult.data() + (i * t_.dim + j) * t_.dim, t_.dim};
  }
  const Scalar& mult(std::size_t i, std::size_t j, std::size_t k) const {
    return t_.mult[(i * t_.dim + j) * t_.dim + k];
  }
  Vector multiply(const Vector& a, const Vector& b) const;

  const Vector& unit() const noexcept { return t_.unit; }
  const Vector& counit() const noexcept { return t_.counit; }
  const std::vector<Term2>& comult(std::size_t i) const { return t_.comult[i]; }
  /// Delta^{(2)}(e_i) and Delta^{(3)}(e_i), expanded once at construction.
  const std::vector<Term3>& comult3(std::size_t i) const { return comult3_[i]; }
  const std::vector<Term4>& comult4(std::size_t i) const { return comult4_[i]; }

  const Matrix& antipode() const noexcept { return t_.antipode; }
  /// nullopt when S is singular (verify_hopf then fails).
  const std::optional<Matrix>& antipode_inverse() const noexcept { return antipode_inverse_; }
  /// Throws NotInvertible when S is singular.
  const Matrix& require_antipode_inverse() const;
  /// S(v) and S^{-1}(v) for an element v.
  Vector apply_antipode(const Vector& v) const;
  Vector apply_antipode_inverse(const Vector& v) const;

  Vector basis(std::size_t i) const { return Vector::unit(t_.field, t_.dim, i); }
  Scalar counit_of(const Vector& v) const;
  /// Basis elements e with Delta(e) = e (x) e.
  const std::vector<std::size_t>& grouplike_basis() const noexcept { return grouplikes_; }

 private:
  HopfTables t_;
  std::optional<Matrix> antipode_inverse_;
  std::vector<std::vector<Term3>> comult3_;
  std::vector<std::vector<Term4>> comult4_;
  std::vector<std::size_t> grouplikes_;
};

using HopfPtr = std::shared_ptr<const HopfAlgebra>;

HopfPtr make_hopf(HopfTables tables);

/// Decides every Hopf algebra axiom exactly, reporting the first violation.
CheckReport verify_hopf(const HopfAlgebra& h);

struct SweedlerTerm {
  Scalar coeff;
  std::vector<std::size_t> factors;
};

enum class SplitOrder { first_factor, last_factor };

/// Delta^{(r-1)}(element) as a canonical (merged, sorted, zero-free) list of
/// basis tensors. The split order picks which factor is expanded at each step.
std::vector<SweedlerTerm> sweedler_power(const HopfAlgebra& h, const Vector& element, int r,
                                         SplitOrder order = SplitOrder::last_factor);

/// The algebra H* (or H*^cop) in the dual basis.
HopfPtr dual_hopf(const HopfAlgebra& h, bool cop = false);

/// True when both algebras have identical structure-constant tables.
bool same_structure_constants(const HopfAlgebra& a, const HopfAlgebra& b);

/// Associative unital algebra given by structure constants only; used for
/// twisted products, crossed products and smash products.
struct AlgebraTable {
  Field field = Field::rational();
  std::size_t dim = 0;
  std::vector<Scalar> mult;
  Vector unit;

  const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const { return mult[(i * dim + j) * dim + k]; }
  Scalar& at(std::size_t i, std::size_t j, std::size_t k) { return mult[(i * dim + j) * dim + k]; }
  friend bool operator==(const AlgebraTable& a, const AlgebraTable& b);
};

AlgebraTable algebra_table(const HopfAlgebra& h);
CheckReport verify_associative_unital(const AlgebraTable& a);

}  // namespace hopflab
