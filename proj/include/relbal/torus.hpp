#pragma once

#include <utility>
#include <vector>

#include "relbal/polytope.hpp"
#include "relbal/types.hpp"

namespace relbal {

/// Subtorus of the dense torus, presented by its integer character matrix Q
/// (r x n, full row rank): a section exponent u has character value Q u.
struct SubtorusAction {
  MatrixXi Q;

  int rank() const { return static_cast<int>(Q.rows()); }
};

/// Validates that Q has independent rows (exact integer arithmetic).
void validate_action(const SubtorusAction& action, int chart_dim);

struct WeightBlock {
  VectorXi character;        // common character value Q u of the block
  std::vector<int> members;  // section indices, in global lex order
};

/// Partition of the section indices into torus weight spaces. Blocks are
/// ordered lexicographically by character value; the flattened index
/// concatenates blocks in that order.
struct WeightBlocks {
  std::vector<WeightBlock> blocks;
  int section_count = 0;

  int count() const { return static_cast<int>(blocks.size()); }
  int block_dim(int k) const { return static_cast<int>(blocks[k].members.size()); }

  /// l(k, i) = i + sum_{j<k} n_j (zero-based block position i).
  int flat_index(int k, int i) const;

  /// Inverse of section index -> (block, position within block).
  std::vector<std::pair<int, int>> section_to_block() const;

  /// Permutation p with p[flat] = section index, i.e. the section order of
  /// the flattened admissible basis.
  std::vector<int> flat_to_section() const;
};

WeightBlocks decompose(const SectionSet& sections, const SubtorusAction& action);

/// T = {1}: a single block holding all sections.
WeightBlocks trivial_blocks(const SectionSet& sections);

/// The full dense torus: Q = identity; on toric models every block is a
/// single monomial.
WeightBlocks full_torus_blocks(const SectionSet& sections);

/// Checks sum_k n_k b_k = N_m + 1 (within 1e-9 relative slack).
void validate_index(const WeightBlocks& blocks, const VectorXd& index);

/// Uniform index (1, 1, ..., 1).
VectorXd unit_index(const WeightBlocks& blocks);

/// Blockwise transform G_k^{-1/2} sqrt(b_k) from a basis with Gram G to an
/// admissible normal basis of index b. The result is an (N+1) x (N+1) matrix
/// whose column l(k, i) expresses the flattened admissible basis member in
/// the input basis.
MatrixXcd admissible_transform(const MatrixXcd& gram, const WeightBlocks& blocks,
                               const VectorXd& index);

/// Largest off-block Gram entry magnitude; ~0 for torus-invariant metrics.
double block_orthogonality_residual(const MatrixXcd& gram, const WeightBlocks& blocks);

/// Extracts the k-th diagonal Gram block.
MatrixXcd gram_block(const MatrixXcd& gram, const WeightBlocks& blocks, int k);

}  // namespace relbal
