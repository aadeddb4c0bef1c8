#include "relbal/state.hpp"

#include <cmath>
#include <random>

#include <nlohmann/json.hpp>

#include "relbal/linalg.hpp"

namespace relbal {

HermitianState make_state(int level, MatrixXcd B) {
  if (level < 1) throw std::invalid_argument("make_state: level must be >= 1");
  if (B.rows() != B.cols() || B.rows() < 1) {
    throw std::invalid_argument("make_state: B must be square and nonempty");
  }
  HermitianState state;
  state.level = level;
  state.B = symmetrize(B);
  check_positive_definite(state.B, kEigenvalueFloor, "make_state");
  state.inverse = hermitian_inverse(state.B);
  state.orthonormal_transform = hermitian_inverse_sqrt(state.B);
  return state;
}

HermitianState normalized(const HermitianState& state) {
  const double trace = state.inverse.trace().real();
  const double target = static_cast<double>(state.section_count());
  return make_state(state.level, state.B * (target / trace));
}

namespace {

double log_factorial(int n) {
  double acc = 0.0;
  for (int k = 2; k <= n; ++k) acc += std::log(static_cast<double>(k));
  return acc;
}

// log of the multinomial coefficient m! / (u_1! ... u_n! (m - sum u)!).
double log_multinomial(int m, const VectorXi& u) {
  double acc = log_factorial(m);
  int rest = m;
  for (int a = 0; a < u.size(); ++a) {
    acc -= log_factorial(u[a]);
    rest -= u[a];
  }
  acc -= log_factorial(rest);
  return acc;
}

}  // namespace

HermitianState fs_state(const PolarizedModel& model, const SectionSet& sections) {
  const int count = sections.count();
  const int m = sections.level;
  VectorXd inv_diag(count);
  if (model.name == "P1" || model.name == "P2") {
    for (int j = 0; j < count; ++j) {
      inv_diag[j] = std::exp(log_multinomial(m, sections.exponents[j]));
    }
  } else if (model.name == "P1xP1") {
    for (int j = 0; j < count; ++j) {
      VectorXi u1(1), u2(1);
      u1[0] = sections.exponents[j][0];
      u2[0] = sections.exponents[j][1];
      inv_diag[j] = std::exp(log_multinomial(m, u1) + log_multinomial(m, u2));
    }
  } else {
    throw std::invalid_argument("fs_state: no stock Fubini-Study form for model " + model.name);
  }
  MatrixXcd B = inv_diag.cwiseInverse().cast<Complex>().asDiagonal();
  return normalized(make_state(m, B));
}

HermitianState perturbed_state(const HermitianState& base, double scale, std::uint64_t seed,
                               PerturbKind kind, const WeightBlocks* blocks) {
  const int n = base.section_count();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  MatrixXcd H = MatrixXcd::Zero(n, n);
  switch (kind) {
    case PerturbKind::FullHermitian: {
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) H(i, j) = Complex(gauss(rng), gauss(rng));
      }
      H = 0.5 * (H + H.adjoint()).eval();
      break;
    }
    case PerturbKind::Diagonal: {
      for (int i = 0; i < n; ++i) H(i, i) = gauss(rng);
      break;
    }
    case PerturbKind::BlockTraceless:
    case PerturbKind::BlockHermitian: {
      if (blocks == nullptr) {
        throw std::invalid_argument("perturbed_state: block perturbation needs WeightBlocks");
      }
      for (int k = 0; k < blocks->count(); ++k) {
        const auto& members = blocks->blocks[k].members;
        const int nk = static_cast<int>(members.size());
        MatrixXcd Hk(nk, nk);
        for (int i = 0; i < nk; ++i) {
          for (int j = 0; j < nk; ++j) Hk(i, j) = Complex(gauss(rng), gauss(rng));
        }
        Hk = 0.5 * (Hk + Hk.adjoint()).eval();
        if (kind == PerturbKind::BlockTraceless) {
          Hk -= (Hk.trace() / static_cast<double>(nk)) * MatrixXcd::Identity(nk, nk);
        }
        for (int i = 0; i < nk; ++i) {
          for (int j = 0; j < nk; ++j) H(members[i], members[j]) = Hk(i, j);
        }
      }
      break;
    }
  }
  // Exponentiate through the Hermitian eigendecomposition.
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(H);
  VectorXd exp_vals = (scale * es.eigenvalues().array()).exp();
  MatrixXcd E = es.eigenvectors() * exp_vals.asDiagonal() * es.eigenvectors().adjoint();
  MatrixXcd new_transform = base.orthonormal_transform * E;
  MatrixXcd new_inverse = new_transform * new_transform.adjoint();
  return normalized(make_state(base.level, hermitian_inverse(new_inverse)));
}

bool is_block_diagonal(const MatrixXcd& M, const WeightBlocks& blocks, double tol) {
  const auto where = blocks.section_to_block();
  for (int i = 0; i < M.rows(); ++i) {
    for (int j = 0; j < M.cols(); ++j) {
      if (where[i].first != where[j].first && std::abs(M(i, j)) > tol) return false;
    }
  }
  return true;
}

nlohmann::json state_to_json(const HermitianState& state, const WeightBlocks* blocks) {
  nlohmann::json j;
  j["m"] = state.level;
  nlohmann::json entries = nlohmann::json::array();
  for (int r = 0; r < state.B.rows(); ++r) {
    for (int c = 0; c < state.B.cols(); ++c) {
      entries.push_back({state.B(r, c).real(), state.B(r, c).imag()});
    }
  }
  j["B"] = std::move(entries);
  if (blocks != nullptr) {
    nlohmann::json jb = nlohmann::json::array();
    for (const auto& block : blocks->blocks) {
      nlohmann::json b;
      b["character"] = std::vector<int>(block.character.data(),
                                        block.character.data() + block.character.size());
      b["members"] = block.members;
      jb.push_back(std::move(b));
    }
    j["blocks"] = std::move(jb);
  } else {
    j["blocks"] = nlohmann::json::array();
  }
  return j;
}

HermitianState state_from_json(const nlohmann::json& j) {
  const int m = j.at("m").get<int>();
  const auto& entries = j.at("B");
  const int count = static_cast<int>(std::llround(std::sqrt(double(entries.size()))));
  if (count * count != static_cast<int>(entries.size())) {
    throw std::invalid_argument("state_from_json: B entry count is not a square");
  }
  MatrixXcd B(count, count);
  int idx = 0;
  for (int r = 0; r < count; ++r) {
    for (int c = 0; c < count; ++c, ++idx) {
      B(r, c) = Complex(entries[idx][0].get<double>(), entries[idx][1].get<double>());
    }
  }
  HermitianState state;
  state.level = m;
  state.B = B;  // verbatim, so round-trips are bit-exact
  check_positive_definite(state.B, kEigenvalueFloor, "state_from_json");
  state.inverse = hermitian_inverse(state.B);
  state.orthonormal_transform = hermitian_inverse_sqrt(state.B);
  return state;
}

std::optional<WeightBlocks> blocks_from_json(const nlohmann::json& j) {
  if (!j.contains("blocks") || j["blocks"].empty()) return std::nullopt;
  WeightBlocks blocks;
  int total = 0;
  for (const auto& jb : j["blocks"]) {
    WeightBlock block;
    const auto chi = jb.at("character").get<std::vector<int>>();
    block.character = Eigen::Map<const VectorXi>(chi.data(), chi.size());
    block.members = jb.at("members").get<std::vector<int>>();
    total += static_cast<int>(block.members.size());
    blocks.blocks.push_back(std::move(block));
  }
  blocks.section_count = total;
  return blocks;
}

}  // namespace relbal
