#pragma once

#include <cstdint>
#include <optional>

#include <nlohmann/json_fwd.hpp>

#include "relbal/polytope.hpp"
#include "relbal/torus.hpp"
#include "relbal/types.hpp"

namespace relbal {

/// Algebraic metric state: a Hermitian positive-definite form B on the
/// section space of L^m, in the monomial basis. The induced geometry is
///   K(z)    = sum_j |sigma_j(z)|^2,  sigma = monomials * B^{-1/2},
///   omega_B = (1/m) (i/2pi) ddbar log K,
///   |s|^2_{h^m}(p) = C |s(p)|^2 / K(p),  C = (N_m + 1) / c1(L)^n[M],
/// so the B-orthonormal basis has constant density C by construction and the
/// overall scale of B is a gauge choice.
struct HermitianState {
  int level = 1;                    // m
  MatrixXcd B;                      // the form
  MatrixXcd inverse;                // cached B^{-1}
  MatrixXcd orthonormal_transform;  // cached S = B^{-1/2}

  int section_count() const { return static_cast<int>(B.rows()); }
};

/// Validates positivity (eigenvalue floor) and caches the derived matrices.
HermitianState make_state(int level, MatrixXcd B);

/// Rescales so that tr(B^{-1}) = N_m + 1. Gauge only; all induced geometry
/// is scale-invariant.
HermitianState normalized(const HermitianState& state);

/// The Fubini-Study state of a stock model: B^{-1} proportional to the
/// multinomial coefficients of (sum of chart monomials)^m.
HermitianState fs_state(const PolarizedModel& model, const SectionSet& sections);

enum class PerturbKind {
  FullHermitian,     // B^{-1/2} -> B^{-1/2} exp(scale * H), H random Hermitian
  Diagonal,          // H diagonal real (torus-invariant perturbation)
  BlockTraceless,    // H block-diagonal with per-block zero trace
  BlockHermitian,    // H block-diagonal, unconstrained trace
};

HermitianState perturbed_state(const HermitianState& base, double scale, std::uint64_t seed,
                               PerturbKind kind, const WeightBlocks* blocks = nullptr);

bool is_block_diagonal(const MatrixXcd& M, const WeightBlocks& blocks, double tol);

/// Persistence: {"m": int, "blocks": [...], "B": [[re, im], ...] row-major}.
/// Round-trips bit-exactly.
nlohmann::json state_to_json(const HermitianState& state, const WeightBlocks* blocks = nullptr);
HermitianState state_from_json(const nlohmann::json& j);
std::optional<WeightBlocks> blocks_from_json(const nlohmann::json& j);

}  // namespace relbal
