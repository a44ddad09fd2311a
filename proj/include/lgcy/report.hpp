#pragma once

#include <string>
#include <string_view>

#include "lgcy/constants.hpp"
#include "lgcy/deform.hpp"
#include "lgcy/hodge.hpp"
#include "lgcy/json_io.hpp"
#include "lgcy/monodromy.hpp"
#include "lgcy/oscillatory.hpp"
#include "lgcy/ttstar.hpp"

namespace lgcy {

inline constexpr std::string_view kReportVersion = "lgcy-report/1";

// Floats are strings with 17 significant digits; complex floats are
// {"re": ..., "im": ...}.
Json float_to_json(double x);
Json complex_to_json(const Complex& z);
Json monomial_to_json(const Monomial& m);

// Sparse matrices: {"rows", "cols", "entries": [[i, j, value], ...]} with
// exact values as strings.
Json matrix_to_json(const RationalMatrix& m);
Json matrix_to_json(const GaussianMatrix& m);
Json matrix_to_json(const Eigen::MatrixXd& m);
GaussianMatrix gaussian_matrix_from_json(const Json& j);

Json ring_to_json(const MilnorRing& ring, bool include_basis = true);
Json selector_to_json(const SubringSelector& s);
Json frobenius_to_json(const FrobeniusData& fd, const FrobeniusChecks& checks, bool include_matrices);
Json hodge_to_json(const HodgeReport& h);
Json classification_to_json(const ClassificationReport& c);
Json spectrum_to_json(const std::vector<SpectrumEntry>& spectrum);
Json filtration_to_json(const FiltrationSplit& split);
Json constants_to_json(long n, long mu);
Json axioms_to_json(const AxiomReport& r);
Json fiber_to_json(const DeformationContext& ctx, const FiberData& fd, bool include_matrices);
Json theta_to_json(const ThetaSolution& sol);
Json period_to_json(const PeriodResult& p);
Json scaling_to_json(const ScalingReport& r);
Json gamma_probe_to_json(const GammaProbeReport& r);
Json error_to_json(const Error& e);

Json make_report(std::string_view command, std::string_view input, Json results, double seconds);

}  // namespace lgcy
