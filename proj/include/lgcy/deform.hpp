#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "lgcy/matrix.hpp"
#include "lgcy/milnor.hpp"

namespace lgcy {

enum class DirectionType { Relevant, Marginal, Irrelevant };

std::string_view to_string(DirectionType t);

// F(z, u) = f(z) + sum_j u_j phi_j(z).
struct DeformationFamily {
  Polynomial base;
  WeightSystem weights;
  std::vector<Polynomial> directions;
  std::vector<std::string> labels;

  // Infers the weights of the base polynomial; labels default to u1..us.
  static DeformationFamily make(Polynomial base, std::vector<Polynomial> directions,
                                std::vector<std::string> labels = {});

  // weight(u_j) = 1 - wdeg(phi_j); throws when phi_j is not weighted homogeneous.
  std::vector<Rational> parameter_weights() const;
  Polynomial fiber(const std::vector<Rational>& u) const;
};

std::vector<DirectionType> classify_directions(const DeformationFamily& family);

// The u = 0 ring, its subring selector and the fixed frame A_j carried to
// every fiber.
struct DeformationContext {
  DeformationFamily family;
  std::shared_ptr<const MilnorRing> base_ring;
  SubringSelector selector;
  std::vector<Monomial> frame;
  std::vector<DirectionType> types;

  static DeformationContext make(DeformationFamily family, long d, long n);
};

struct FiberData {
  std::vector<Rational> u;
  std::shared_ptr<const MilnorRing> ring;
  // Column j: coordinates of the frame monomial A_j in the fiber basis.
  RationalMatrix transition;
  // C_tau(u) in the u = 0 frame: phi_tau A_j = sum_k C_{tau}(k, j) A_k.
  // Empty for directions that are not marginal.
  std::vector<RationalMatrix> C;
  // eta(u)(A_j, A_l)
  RationalMatrix eta;
};

// Throws NondegenerationLost, FrameDegeneration, or InvalidArgument when a
// non-marginal parameter is nonzero. eta is left empty when with_eta is false.
FiberData fiber_data(const DeformationContext& ctx, const std::vector<Rational>& u, bool with_eta = true);

// Largest entry of C_tau C_sigma - C_sigma C_tau over all pairs.
Rational higgs_commutativity(const std::vector<RationalMatrix>& C);
Rational higgs_commutativity(const FiberData& fd);

// eta(C x, y) - eta(x, C y) at every direction, exact.
bool higgs_self_adjoint(const FiberData& fd);

using Polyline = std::vector<std::vector<Rational>>;

struct ThetaSolution {
  Polyline path;
  std::vector<std::size_t> segment_steps;
  std::size_t steps = 0;
  std::size_t samples = 0;
  Eigen::MatrixXd theta;
  // max |[C_tau(u), Theta(u)]| over all nodes and directions.
  double commutation_residual = 0.0;
  // |Theta| at the end of a closed path.
  std::optional<double> closure_defect;
};

// Fourth-order Runge-Kutta for dTheta/ds = sum_tau u_tau'(s) C_tau(u(s)),
// Theta(0) = 0, with C sampled exactly at the nodes. Steps are spread over
// the segments in proportion to their Euclidean length.
ThetaSolution integrate_theta(const DeformationContext& ctx, const Polyline& path, std::size_t steps);

double max_abs(const Eigen::MatrixXd& m);
Eigen::MatrixXd to_dense(const RationalMatrix& m);

// e^{-Theta}
Eigen::MatrixXd flat_frame(const ThetaSolution& theta);
Eigen::MatrixXd flat_frame(const Eigen::MatrixXd& theta);

}  // namespace lgcy
