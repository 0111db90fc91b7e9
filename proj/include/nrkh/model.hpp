#pragma once

#include <cstdint>
#include <optional>

#include "nrkh/types.hpp"

namespace nrkh {

enum class Boundary { Periodic };
enum class Variant { Standard, Dimerized };

/// Rational approximant p/q of the quasiperiodicity parameter. Requires
/// gcd(p, q) = 1 and a lattice of length L = q.
struct RationalAlpha {
  std::int64_t p = 0;
  std::int64_t q = 0;
};

/// All physical and protocol knobs of the periodically quenched
/// nonreciprocal Harper chain. Hoppings are J e^{+gamma} (left to right
/// neighbor index increasing) and J e^{-gamma} the other way; the onsite
/// potential is V cos(2 pi alpha n) on sites n = 1..L. The drive alternates
/// a hopping-only segment of duration T1 with a potential-only segment of
/// duration T2.
struct ModelParams {
  double J = 1.0;       ///< hopping amplitude, > 0
  double V = 0.0;       ///< onsite potential amplitude, >= 0
  double gamma = 0.0;   ///< hopping asymmetry exponent
  double alpha = kInverseGoldenRatio;
  double T1 = 1.0;      ///< hopping segment duration, > 0
  double T2 = 1.0;      ///< potential segment duration, > 0
  double hbar = 1.0;
  int L = 2;            ///< lattice length, >= 2 (even when dimerized)
  Boundary boundary = Boundary::Periodic;
  Variant variant = Variant::Standard;
  std::optional<RationalAlpha> rational_alpha;

  /// Dimensionless couplings, recomputed on demand (never cached).
  double dimensionless_v() const { return V * T2 / hbar; }
  double dimensionless_j() const { return J * T1 / hbar; }
  double period() const { return T1 + T2; }

  /// alpha for irrational mode, p/q for rational-approximant mode.
  double effective_alpha() const;

  /// Throws std::invalid_argument on any violated invariant.
  void validate() const;

  ModelParams with_v(double v) const {
    ModelParams q = *this;
    q.V = v;
    return q;
  }
  ModelParams with_gamma(double g) const {
    ModelParams q = *this;
    q.gamma = g;
    return q;
  }
  ModelParams with_length(int length) const {
    ModelParams q = *this;
    q.L = length;
    return q;
  }
};

/// Nearest-neighbor hopping matrix of the standard chain under PBC:
/// K(n, n+1) = J e^{gamma}, K(n+1, n) = J e^{-gamma}, wrap bond included.
ComplexMatrix build_hopping_matrix(const ModelParams& params);

/// Onsite potential samples V cos(2 pi alpha_eff n), n = 1..L.
RealVector build_potential_diag(const ModelParams& params);

/// K + diag(V_n).
ComplexMatrix build_static_hamiltonian(const ModelParams& params);

/// Dimerized hopping: odd bonds (2n-1, 2n) carry J e^{+-gamma}, even bonds
/// (2n, 2n+1) and the PBC wrap carry the symmetric amplitude J. L must be even.
ComplexMatrix build_dimerized_hopping(const ModelParams& params);

/// Momentum-space representation for alpha = p/q, L = q: symmetric
/// nearest-neighbor hopping V/2 plus the complex diagonal
/// W_l = 2 J cos(2 pi alpha l + i gamma). Under PBC its spectrum equals the
/// site-basis static Hamiltonian's.
ComplexMatrix build_momentum_hamiltonian(const ModelParams& params);

/// Real-to-complex spectral threshold of the static chain, ln(V / 2J).
/// Valid for V > 2J > 0.
double static_gamma_critical(double J, double V);

/// Inverse localization length ln(V e^{-gamma} / 2J) of static localized
/// eigenstates (gamma below the threshold).
double static_lyapunov_exponent(double J, double V, double gamma);

}  // namespace nrkh
