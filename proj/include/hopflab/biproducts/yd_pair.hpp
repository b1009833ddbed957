#pragma once

#include <memory>
#include <optional>

#include "hopflab/core/hopf_algebra.hpp"

namespace hopflab {

/// Raw data of a pair (H, B): an algebra and coalgebra B with a left H-action
/// and a left H-coaction.
struct YDPairData {
  HopfPtr host;
  std::size_t dim = 0;
  std::vector<std::string> labels;
  /// mult[(i * dim + j) * dim + k]: coefficient of b_k in b_i b_j.
  std::vector<Scalar> mult;
  Vector unit;
  std::vector<std::vector<Term2>> comult;
  Vector counit;
  /// Row i is S_B(b_i). Solved for when absent.
  std::optional<Matrix> antipode;
  /// action[(h * dim + b) * dim + k]: coefficient of b_k in e_h . b_b.
  std::vector<Scalar> action;
  /// coaction[b] lists b^(-1) (x) b^(0) as terms {index in H, index in B}.
  std::vector<std::vector<Term2>> coaction;
};

class YDPair {
 public:
  /// Checks shapes and fields only; the axioms are decided by verify_admissible_pair.
  explicit YDPair(YDPairData data);

  const HopfAlgebra& host() const noexcept { return *d_.host; }
  const HopfPtr& host_ptr() const noexcept { return d_.host; }
  Field field() const noexcept { return d_.host->field(); }
  std::size_t dim() const noexcept { return d_.dim; }
  const YDPairData& data() const noexcept { return d_; }
  const std::vector<std::string>& labels() const noexcept { return d_.labels; }

  const Scalar& mult(std::size_t i, std::size_t j, std::size_t k) const { return d_.mult[(i * d_.dim + j) * d_.dim + k]; }
  const Vector& unit() const noexcept { return d_.unit; }
  const Vector& counit() const noexcept { return d_.counit; }
  const std::vector<Term2>& comult(std::size_t i) const { return d_.comult[i]; }
  const std::vector<Term2>& coaction(std::size_t i) const { return d_.coaction[i]; }
  const Scalar& action(std::size_t h, std::size_t b, std::size_t k) const {
    return d_.action[(h * d_.dim + b) * d_.dim + k];
  }

  /// S_B as given, or solved from S_B(b_1) b_2 = eps(b) 1; nullopt when no
  /// solution exists (admissible but not Hopf admissible).
  const std::optional<Matrix>& antipode() const noexcept { return antipode_; }

  Vector multiply(const Vector& a, const Vector& b) const;
  /// h . b for an element h of H and b of B.
  Vector act(const Vector& h, const Vector& b) const;
  /// e_h . v
  Vector act_basis(std::size_t h, const Vector& v) const;
  Vector basis(std::size_t i) const { return Vector::unit(field(), d_.dim, i); }

 private:
  YDPairData d_;
  std::optional<Matrix> antipode_;
};

using YDPairPtr = std::shared_ptr<const YDPair>;

YDPairPtr make_pair(YDPairData data);

/// Module, comodule, algebra and coalgebra axioms of B together with every
/// compatibility between them; reports the first failure.
CheckReport verify_admissible_pair(const YDPair& p);

/// B x H with the smash product, the smash coproduct and its antipode;
/// basis b_i x e_j has index i * dim H + j. Throws PrereqViolated when the
/// pair is not Hopf admissible and AxiomViolation when the result is not a Hopf
/// algebra.
HopfPtr biproduct(const YDPairPtr& p);

/// A left Yetter-Drinfeld module over H, given by its action and coaction.
struct YDModule {
  HopfPtr host;
  std::size_t dim = 0;
  std::vector<Scalar> action;                 // as in YDPairData
  std::vector<std::vector<Term2>> coaction;   // as in YDPairData
};

YDModule yd_module(const YDPair& p);
/// Module, comodule and the compatibility h_1 m^(-1) (x) h_2 . m^(0) = (h_1 . m)^(-1) h_2 (x) (h_1 . m)^(0).
CheckReport verify_yd_module(const YDModule& m);
/// Row i * dim N + j holds c(m_i (x) n_j) = m^(-1) . n_j (x) m^(0) in N (x) M,
/// at column k * dim M + l.
Matrix yd_braiding_matrix(const YDModule& m, const YDModule& n);

YDPairPtr trivial_pair(const HopfPtr& h);
/// H = kZ2, B = k[x]/(x^2), g . x = -x, x -> g (x) x, Delta(x) = x (x) 1 + 1 (x) x.
YDPairPtr sweedler_pair(Field f);
/// Pair entries of the catalog ("sweedler-pair").
YDPairPtr catalog_pair(const std::string& name, Field f);

}  // namespace hopflab
