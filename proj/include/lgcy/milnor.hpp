#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lgcy/grobner.hpp"
#include "lgcy/matrix.hpp"
#include "lgcy/poly.hpp"

namespace lgcy {

using RationalVector = SparseVector<Rational>;

// Coefficients of prod_i (t^{D - w_i} - 1) / (t^{w_i} - 1) in integer
// weighted degree, D the common weight denominator.
std::vector<Integer> hilbert_series_oracle(const WeightSystem& w);

// Jacobian quotient R_f = C[z]/(df) of a quasi-homogeneous isolated
// singularity, with its residue functional.
class MilnorRing {
 public:
  // Throws NotIsolated, OracleMismatch or DegenerateSocle.
  static MilnorRing build(const Polynomial& f);
  static MilnorRing build(const Polynomial& f, const WeightSystem& w);

  const Polynomial& f() const { return f_; }
  const WeightSystem& weights() const { return weights_; }
  const GroebnerBasis& gb() const { return gb_; }
  const StandardMonomialBasis& basis() const { return basis_; }
  std::size_t nvars() const { return f_.nvars(); }
  std::size_t mu() const { return basis_.size(); }
  const Monomial& monomial(std::size_t i) const { return basis_.monomials[i]; }

  // Keys are integer weighted degrees (ordinary degrees for homogeneous f).
  const std::map<long, std::size_t>& graded_dims() const { return graded_dims_; }
  long degree(std::size_t basis_index) const { return degrees_[basis_index]; }
  long top_degree() const { return top_degree_; }
  // Basis positions of a given weighted degree, ascending.
  const std::vector<std::size_t>& piece(long degree) const;

  std::size_t socle_index() const { return socle_index_; }
  const Polynomial& hess() const { return hess_; }
  // NF(hess f) = c * socle monomial.
  const Rational& hess_coefficient() const { return hess_coeff_; }

  RationalVector coordinates(const Polynomial& a) const;
  RationalVector coordinates(const Monomial& m) const;
  Polynomial to_polynomial(const RationalVector& v) const;
  Polynomial reduce(const Polynomial& a) const { return to_polynomial(coordinates(a)); }

  // res_{f,0}, normalized by res(hess f) = mu.
  Rational residue(const Polynomial& a) const;
  Rational residue(const RationalVector& coords) const;
  // (2 pi i)^N res_{f,0}
  SymbolicScalar big_residue(const Polynomial& a) const;
  // (1/mu) res(A B)
  Rational pairing(const Polynomial& a, const Polynomial& b) const;
  Rational pairing(std::size_t i, std::size_t j) const;

  // Multiplication by a on the full standard basis.
  RationalMatrix multiplication_matrix(const Polynomial& a) const;
  // eta restricted to the given basis positions (all when empty).
  RationalMatrix pairing_matrix(const std::vector<std::size_t>& positions = {}) const;

 private:
  MilnorRing() = default;
  const RationalVector& monomial_coords_locked(const Monomial& m) const;

  Polynomial f_;
  WeightSystem weights_;
  GroebnerBasis gb_;
  StandardMonomialBasis basis_;
  std::vector<long> degrees_;
  std::map<long, std::size_t> graded_dims_;
  std::map<long, std::vector<std::size_t>> pieces_;
  long top_degree_ = 0;
  std::size_t socle_index_ = 0;
  Polynomial hess_;
  Rational hess_coeff_;

  struct Cache {
    std::mutex mutex;
    std::unordered_map<Monomial, RationalVector, MonomialHash> reduced;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

// Selection of basis monomials by integrality of h(A) = (deg A + n + 2)/d.
struct SubringSelector {
  long d = 0;
  long n = 0;
  std::vector<Rational> h;             // per basis position
  std::vector<std::size_t> selected;   // basis positions with h in N
  std::size_t mu_s = 0;
  Rational h_unit;
  Rational h_socle;
  bool contains_unit = false;
  bool contains_socle = false;
  // Set when the closure check ran.
  std::optional<bool> closed_under_multiplication;
  // First offending pair when not closed.
  std::optional<std::pair<std::size_t, std::size_t>> closure_witness;

  bool is_selected(std::size_t position) const;
};

// Requires a homogeneous ring of degree d in n + 2 variables.
SubringSelector subring_selector(const MilnorRing& ring, long d, long n, bool check_closure = true);

// Multiplies every pair of selected basis elements and tests whether the
// reduced product is supported on the selection.
bool check_closure(const MilnorRing& ring, SubringSelector& selector);

// Multiplication operators and pairing on a basis of R_f or of a selected
// sub-basis.
struct FrobeniusData {
  bool full_basis = true;
  std::vector<std::size_t> positions;    // basis positions spanned
  std::vector<Monomial> labels;
  // Full basis: one matrix per variable z_v. Selected: one per element.
  std::vector<Monomial> operator_labels;
  std::vector<RationalMatrix> operators;
  RationalMatrix eta;
  std::optional<std::size_t> unit_index;
  bool closed = true;
  std::vector<std::string> warnings;
};

FrobeniusData frobenius_full(const MilnorRing& ring);
FrobeniusData frobenius_selected(const MilnorRing& ring, const SubringSelector& selector);

// Matrix of multiplication by a polynomial in the frame of fd, assembled
// from the stored operators (products of variable matrices on full bases).
RationalMatrix frobenius_operator(const MilnorRing& ring, const FrobeniusData& fd, const Polynomial& a);

struct FrobeniusChecks {
  bool commutative = false;
  bool unit_is_identity = false;  // vacuous when there is no unit
  bool self_adjoint = false;
  bool associative = false;
  bool nondegenerate = false;
  std::size_t associativity_samples = 0;
  std::string detail;
  bool ok() const { return commutative && unit_is_identity && self_adjoint && associative && nondegenerate; }
};

FrobeniusChecks verify_frobenius(const MilnorRing& ring, const FrobeniusData& fd);

}  // namespace lgcy
