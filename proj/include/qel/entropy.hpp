#pragma once

#include <vector>

#include "qel/linalg.hpp"
#include "qel/states.hpp"

namespace qel {

/// An entropy in nats; `infinite` marks +infinity (value is then ignored).
struct EntropyValue {
  double value = 0;
  bool infinite = false;

  static EntropyValue inf() { return {0.0, true}; }
  bool finite() const { return !infinite; }
};

double von_neumann(const Mat& rho);
inline double von_neumann(const DensityMatrix& rho) { return von_neumann(rho.mat()); }

/// True when ||(1 - P_sigma) rho (1 - P_sigma)|| < 1e-9.
bool support_contained(const Mat& rho, const Mat& sigma);

/// Tr rho (log rho - log sigma) for any positive semidefinite sigma;
/// +infinity when supp(rho) is not inside supp(sigma).
EntropyValue relative_entropy(const Mat& rho, const Mat& sigma);
inline EntropyValue relative_entropy(const DensityMatrix& rho, const SubnormalizedOperator& sigma) {
  return relative_entropy(rho.mat(), sigma.mat());
}

/// Petz alpha-Renyi relative entropy, alpha in (0, 1), support-projected powers.
EntropyValue renyi(double alpha, const Mat& rho, const Mat& sigma);

/// Tr sqrt(rho) sqrt(sigma).
double sqrt_overlap(const Mat& rho, const Mat& sigma);

/// -2 ln Tr sqrt(rho) sqrt(sigma); throws ZeroOverlap for orthogonal supports.
double overlap_lower_bound(const Mat& rho, const Mat& sigma);

/// I(A:C|B) = S(AB) + S(BC) - S(ABC) - S(B).
double cmi(const MultipartiteState& rho);
/// I(A:C|B) as S(rho_ABC || rho_AB (x) rho_C) - S(rho_BC || rho_B (x) rho_C).
double cmi_relative_form(const MultipartiteState& rho);

/// sign * log(op), acting on the subsystems `on` (all of them when empty).
struct LogTerm {
  int sign = 1;
  Mat op;
  std::vector<Index> on = {};
};

/// exp(sum_i sign_i log X_i), Hermitized. Every X_i must be full rank; terms
/// with a subsystem list are tensored with the identity on the rest of `dims`.
Mat exp_log_combination(const std::vector<LogTerm>& terms, const Dims& dims = {});

/// The operators the strengthened inequalities are stated against. All of
/// them require full-rank inputs.
Mat omega_ssa(const MultipartiteState& rho);                        // exp(log AB - log B + log BC)
Mat omega_subadd(const MultipartiteState& rho);                     // exp(log AB + log BC)
Mat omega_three(const MultipartiteState& s, const MultipartiteState& t,
                const MultipartiteState& w);                        // exp(log s_AB - log t_B + log w_BC)
Mat omega_bsw(const MultipartiteState& s, const MultipartiteState& t,
              const MultipartiteState& w);                          // exp(log s_AB + log t_BC - log w_B)

}  // namespace qel
