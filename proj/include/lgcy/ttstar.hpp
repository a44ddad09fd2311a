#pragma once

#include <string>
#include <vector>

#include "lgcy/matrix.hpp"
#include "lgcy/milnor.hpp"

namespace lgcy {

// Finite-dimensional tt* data in a fixed frame e_1..e_r. The real structure
// acts as kappa(sum l_k e_k) = sum conj(l_k) K e_k and the pairing as
// eta(u, v) = u^T eta v.
template <class T>
struct TtStarData {
  SparseMatrix<T> eta;
  SparseMatrix<T> K;
  std::vector<SparseMatrix<T>> C;
  // Optional holomorphic/antiholomorphic connection samples, one pair per
  // direction: (D_tau, Dbar_tau).
  std::vector<std::pair<SparseMatrix<T>, SparseMatrix<T>>> connection;
  // Probe g for Hermitian positivity as well.
  bool metric_instance = false;

  std::size_t dimension() const { return eta.rows(); }
};

enum class CheckStatus { Pass, Fail, NotChecked };

std::string_view to_string(CheckStatus s);

struct AxiomCheck {
  std::string name;
  CheckStatus status = CheckStatus::NotChecked;
  double defect = 0.0;
};

struct AxiomReport {
  bool exact = true;
  std::vector<AxiomCheck> checks;
  bool ok() const {
    for (const auto& c : checks)
      if (c.status == CheckStatus::Fail) return false;
    return true;
  }
  const AxiomCheck* find(std::string_view name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

inline constexpr double kFloatTolerance = 1e-10;

AxiomReport verify_axioms(const TtStarData<GaussianRational>& data);
AxiomReport verify_axioms(const TtStarData<Complex>& data);

// phi_prime maps the source frame into the destination frame (dst.r x src.r).
AxiomReport verify_embedding(const TtStarData<GaussianRational>& src, const TtStarData<GaussianRational>& dst,
                             const GaussianMatrix& phi_prime);
AxiomReport verify_embedding(const TtStarData<Complex>& src, const TtStarData<Complex>& dst,
                             const ComplexMatrix& phi_prime);

GaussianMatrix to_gaussian(const RationalMatrix& m);
ComplexMatrix to_complex(const GaussianMatrix& m);
TtStarData<Complex> to_complex(const TtStarData<GaussianRational>& d);

// LG side: eta = (1/mu) res, C_tau = multiplication by phi_tau on the
// selected basis, K = identity.
TtStarData<GaussianRational> assemble_lg(const MilnorRing& ring, const SubringSelector& selector,
                                         const std::vector<Polynomial>& directions);

// CY side: eta from the normalized integrals of the residue classes and
// C from the structure constants C_{tau j}^k = eta(phi_tau A_j, A_l) eta^{lk}.
// Requires d = n + 2.
TtStarData<GaussianRational> assemble_cy(const MilnorRing& ring, const SubringSelector& selector,
                                         const std::vector<Polynomial>& directions);

// Whole Milnor ring with multiplication by each direction.
TtStarData<GaussianRational> assemble_full(const MilnorRing& ring, const std::vector<Polynomial>& directions);

// Inclusion of the selected sub-basis into the full basis (mu x mu_s).
GaussianMatrix inclusion_matrix(const MilnorRing& ring, const SubringSelector& selector);

}  // namespace lgcy
