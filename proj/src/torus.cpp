#include "relbal/torus.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "relbal/linalg.hpp"

namespace relbal {

namespace {

struct LexLess {
  bool operator()(const VectorXi& a, const VectorXi& b) const {
    for (int i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  }
};

// Row rank over the integers via fraction-free elimination.
int integer_rank(MatrixXi M) {
  using Row = std::vector<long long>;
  std::vector<Row> rows(M.rows());
  for (int i = 0; i < M.rows(); ++i) {
    rows[i].resize(M.cols());
    for (int j = 0; j < M.cols(); ++j) rows[i][j] = M(i, j);
  }
  int rank = 0;
  int col = 0;
  const int ncols = static_cast<int>(M.cols());
  while (rank < static_cast<int>(rows.size()) && col < ncols) {
    int pivot = -1;
    for (int i = rank; i < static_cast<int>(rows.size()); ++i) {
      if (rows[i][col] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) {
      ++col;
      continue;
    }
    std::swap(rows[rank], rows[pivot]);
    for (int i = rank + 1; i < static_cast<int>(rows.size()); ++i) {
      if (rows[i][col] == 0) continue;
      const long long a = rows[rank][col], b = rows[i][col];
      for (int j = col; j < ncols; ++j) {
        rows[i][j] = rows[i][j] * a - rows[rank][j] * b;
      }
    }
    ++rank;
    ++col;
  }
  return rank;
}

}  // namespace

void validate_action(const SubtorusAction& action, int chart_dim) {
  if (action.Q.rows() < 1) {
    throw std::invalid_argument("SubtorusAction: empty character matrix");
  }
  if (action.Q.cols() != chart_dim) {
    throw std::invalid_argument("SubtorusAction: character matrix has wrong column count");
  }
  if (integer_rank(action.Q) != action.Q.rows()) {
    throw std::invalid_argument("SubtorusAction: character matrix rows are dependent");
  }
}

int WeightBlocks::flat_index(int k, int i) const {
  int offset = 0;
  for (int j = 0; j < k; ++j) offset += block_dim(j);
  return offset + i;
}

std::vector<std::pair<int, int>> WeightBlocks::section_to_block() const {
  std::vector<std::pair<int, int>> inv(section_count, {-1, -1});
  for (int k = 0; k < count(); ++k) {
    for (int i = 0; i < block_dim(k); ++i) inv[blocks[k].members[i]] = {k, i};
  }
  return inv;
}

std::vector<int> WeightBlocks::flat_to_section() const {
  std::vector<int> perm;
  perm.reserve(section_count);
  for (const auto& block : blocks) {
    for (int s : block.members) perm.push_back(s);
  }
  return perm;
}

WeightBlocks decompose(const SectionSet& sections, const SubtorusAction& action) {
  std::map<VectorXi, std::vector<int>, LexLess> grouping;
  for (int j = 0; j < sections.count(); ++j) {
    VectorXi chi = action.Q * sections.exponents[j];
    grouping[chi].push_back(j);
  }
  WeightBlocks blocks;
  blocks.section_count = sections.count();
  for (auto& [chi, members] : grouping) {
    std::sort(members.begin(), members.end());
    blocks.blocks.push_back({chi, members});
  }
  return blocks;
}

WeightBlocks trivial_blocks(const SectionSet& sections) {
  WeightBlocks blocks;
  blocks.section_count = sections.count();
  WeightBlock all;
  all.character = VectorXi::Zero(1);
  for (int j = 0; j < sections.count(); ++j) all.members.push_back(j);
  blocks.blocks.push_back(std::move(all));
  return blocks;
}

WeightBlocks full_torus_blocks(const SectionSet& sections) {
  const int n = sections.exponents.empty() ? 1 : static_cast<int>(sections.exponents[0].size());
  SubtorusAction action{MatrixXi::Identity(n, n)};
  return decompose(sections, action);
}

void validate_index(const WeightBlocks& blocks, const VectorXd& index) {
  if (index.size() != blocks.count()) {
    throw invalid_index_error("index vector length does not match the block count");
  }
  double weighted = 0.0;
  for (int k = 0; k < blocks.count(); ++k) {
    if (index[k] <= 0.0) throw invalid_index_error("index entries must be positive");
    weighted += blocks.block_dim(k) * index[k];
  }
  const double target = blocks.section_count;
  if (std::abs(weighted - target) > 1e-9 * target) {
    throw invalid_index_error("index violates sum_k n_k b_k = N_m + 1");
  }
}

VectorXd unit_index(const WeightBlocks& blocks) { return VectorXd::Ones(blocks.count()); }

MatrixXcd admissible_transform(const MatrixXcd& gram, const WeightBlocks& blocks,
                               const VectorXd& index) {
  validate_index(blocks, index);
  const int n = blocks.section_count;
  MatrixXcd transform = MatrixXcd::Zero(n, n);
  for (int k = 0; k < blocks.count(); ++k) {
    const MatrixXcd Gk = gram_block(gram, blocks, k);
    const MatrixXcd Tk = hermitian_inverse_sqrt(Gk) * std::sqrt(index[k]);
    const auto& members = blocks.blocks[k].members;
    for (int i = 0; i < blocks.block_dim(k); ++i) {
      const int col = blocks.flat_index(k, i);
      for (int j = 0; j < blocks.block_dim(k); ++j) {
        transform(members[j], col) = Tk(j, i);
      }
    }
  }
  return transform;
}

double block_orthogonality_residual(const MatrixXcd& gram, const WeightBlocks& blocks) {
  const auto where = blocks.section_to_block();
  double residual = 0.0;
  for (int i = 0; i < gram.rows(); ++i) {
    for (int j = 0; j < gram.cols(); ++j) {
      if (where[i].first != where[j].first) {
        residual = std::max(residual, std::abs(gram(i, j)));
      }
    }
  }
  return residual;
}

MatrixXcd gram_block(const MatrixXcd& gram, const WeightBlocks& blocks, int k) {
  const auto& members = blocks.blocks[k].members;
  const int nk = static_cast<int>(members.size());
  MatrixXcd Gk(nk, nk);
  for (int i = 0; i < nk; ++i) {
    for (int j = 0; j < nk; ++j) Gk(i, j) = gram(members[i], members[j]);
  }
  return Gk;
}

}  // namespace relbal
