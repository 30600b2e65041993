#ifndef GWDEG_TRANSFORMS_HPP
#define GWDEG_TRANSFORMS_HPP

#include <vector>

#include "gwdeg/contributions.hpp"
#include "gwdeg/tables.hpp"

namespace gwdeg {

// Gopakumar-Vafa transform:
//
//   N^{gD}_beta = sum_{d : beta = d beta'} sum_{g=0}^{gD} C_g(gD-g, d) n^g_{beta'}
//
// With CoverModel::mtheory the coefficient is d^{2gD-3} C_g(gD-g, 1), the
// expansion of sum_d (1/d) (sin(dt/2) / (t/2))^{2g-2} q^{d beta}. With
// CoverModel::geometric the coefficients come from contribution_degree and
// only exist for genus <= 1 or d = 1; a needed undefined coefficient raises
// std::domain_error.

/// Throws std::invalid_argument on a rank mismatch or when a BPS entry lies
/// outside the requested cutoffs.
GWTable gv_forward(const BPSTable& bps, int genus_cutoff, const std::vector<int>& degree_cutoffs,
                   CoverModel model = CoverModel::mtheory);

/// Unique solution of the unitriangular system above, solved by increasing
/// total degree and genus. Non-integral results are listed in the report,
/// never rounded.
BPSTable gv_invert(const GWTable& gw, CoverModel model = CoverModel::mtheory);

// Enumerative corrections for -K_X . beta = c . beta >= 0:
//
//   N^{gD}_beta = sum_{g=0}^{gD} C_g(gD-g, X, beta) E^g_beta,
//
// with C_g(h, X, beta) the t^{2h} coefficient of S(t)^{2g-2+c.beta}.

/// Throws std::invalid_argument when the canonical vector has the wrong rank
/// or pairs negatively with a stored class.
GWTable enumerative_forward(const ETable& e, const std::vector<int>& canonical);

/// Inverse of enumerative_forward; reads the canonical vector from the
/// table. Throws std::invalid_argument when it is missing.
ETable enumerative_solve(const GWTable& gw);

}  // namespace gwdeg

#endif  // GWDEG_TRANSFORMS_HPP
