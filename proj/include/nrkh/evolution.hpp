#pragma once

#include "nrkh/model.hpp"

namespace nrkh {

enum class BuildPath { Circulant, DenseExpm };

/// Truncation order of the commutator expansion of the effective
/// Hamiltonian: T0 keeps H1 + H2, T1 adds (i T / 2) [H1, H2], T2 adds
/// (T^2 / 12) [H2 - H1, [H1, H2]].
enum class BchOrder { T0, T1, T2 };

/// One-period evolution operator U = D X with D the diagonal potential
/// phase factor and X the exponential of the hopping generator.
struct FloquetOperator {
  ComplexMatrix matrix;
  ModelParams params;
  BuildPath build_path = BuildPath::Circulant;
};

/// Dense e^A via scaling-and-squaring with a Pade core. Throws
/// std::invalid_argument on nonfinite input and std::runtime_error if the
/// result overflows or fails to be finite.
ComplexMatrix expm_dense(const ComplexMatrix& A);

/// Closed-form exp(-i (T1/hbar) K) for the standard PBC chain. K/J is a
/// circulant e^{gamma} S + e^{-gamma} S^T with Fourier eigenvalues
/// 2 cos(k_m - i gamma), k_m = 2 pi m / L, so the exponential is assembled
/// from the inverse DFT of exp(-i 2 Jd cos(k_m - i gamma)) in O(L^2).
ComplexMatrix expm_hopping_circulant(const ModelParams& params);

/// Analytic Fourier eigenvalues 2 Jd cos(k_m - i gamma) of the hopping
/// generator; exp(-i .) of these are the eigenvalues of the circulant factor.
ComplexVector hopping_generator_eigenvalues(const ModelParams& params);

/// U = diag(e^{-i Vd cos(2 pi alpha n)}) * exp(-i (T1/hbar) K), hopping
/// factor on the right. Standard variant uses the circulant path, the
/// dimerized variant the dense exponential.
FloquetOperator build_floquet_operator(const ModelParams& params);

/// Commutator expansion of the effective Hamiltonian generating U over one
/// period, truncated at the requested order. H1 = K T1/T and H2 = Vhat T2/T.
/// Orders above T0 require hbar = 1.
ComplexMatrix build_bch_heff(const ModelParams& params, BchOrder order);

}  // namespace nrkh
