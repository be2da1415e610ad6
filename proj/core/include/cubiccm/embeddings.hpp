#pragma once

#include <vector>

#include "cubiccm/binforms.hpp"
#include "cubiccm/lattices.hpp"
#include "cubiccm/quadfield.hpp"

namespace cubiccm {

// Vectors in an ambient lattice together with their Gram matrix and a
// primitivity certificate. Vector order is the orientation of the image.
struct EmbeddingWitness {
  GramMatrix ambient;
  std::vector<IntVector> vectors;
  GramMatrix gram_check;
  bool primitive = false;
};

// True iff the vectors span a primitive sublattice (all invariant factors of
// the coordinate matrix equal 1). Throws DomainError for dependent vectors.
bool verify_primitive(const GramMatrix& ambient, const std::vector<IntVector>& vectors);

EmbeddingWitness make_witness(const GramMatrix& ambient, std::vector<IntVector> vectors);

// x1 = e + a f, x2 = b f + e' + c f' in U + U with bases (e, f), (e', f').
// Throws DegenerateError when b^2 == 4ac.
EmbeddingWitness embed_even_binary_in_U2(const BinaryEvenForm& f);

// Trace form of O_K embedded in U + U and then into the U + U block of L.
EmbeddingWitness embed_trace_form(const QuadField& K);

// Orthogonal complement of the image inside the ambient lattice.
GramMatrix embedding_complement(const EmbeddingWitness& w);

}  // namespace cubiccm
