#include "cubiccm/embeddings.hpp"

#include "cubiccm/errors.hpp"

namespace cubiccm {

bool verify_primitive(const GramMatrix& ambient, const std::vector<IntVector>& vectors) {
  if (vectors.empty()) return true;
  for (const auto& v : vectors)
    if (v.size() != ambient.rank()) throw DomainError("vector length does not match ambient rank");
  const IntVector diag = smith_diagonal(IntMatrix::from_rows(vectors));
  for (const auto& d : diag)
    if (sgn(d) == 0) throw DomainError("embedding vectors are linearly dependent");
  for (const auto& d : diag)
    if (d != 1) return false;
  return true;
}

EmbeddingWitness make_witness(const GramMatrix& ambient, std::vector<IntVector> vectors) {
  IntMatrix pairings(vectors.size(), vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = 0; j < vectors.size(); ++j) pairings(i, j) = ambient.pair(vectors[i], vectors[j]);
  const bool primitive = verify_primitive(ambient, vectors);
  return {ambient, std::move(vectors), GramMatrix(std::move(pairings)), primitive};
}

EmbeddingWitness embed_even_binary_in_U2(const BinaryEvenForm& f) {
  if (sgn(f.determinant()) == 0) throw DegenerateError("degenerate binary form " + to_string(f));
  const GramMatrix u2 = direct_sum(make_standard("U"), make_standard("U"));
  // Coordinates in (e, f, e', f').
  IntVector x1{1, f.a, 0, 0};
  IntVector x2{0, f.b, 1, f.c};
  return make_witness(u2, {std::move(x1), std::move(x2)});
}

EmbeddingWitness embed_trace_form(const QuadField& K) {
  const BinaryEvenForm form = BinaryEvenForm::from_gram(trace_form_gram(K));
  const EmbeddingWitness in_u2 = embed_even_binary_in_U2(form);
  const GramMatrix L = make_standard("L");
  std::vector<IntVector> lifted;
  for (const auto& v : in_u2.vectors) {
    IntVector w(L.rank());
    for (std::size_t i = 0; i < v.size(); ++i) w[kLHyperbolicOffset + i] = v[i];
    lifted.push_back(std::move(w));
  }
  return make_witness(L, std::move(lifted));
}

GramMatrix embedding_complement(const EmbeddingWitness& w) {
  return restrict_to(w.ambient, orthogonal_complement_basis(w.ambient, w.vectors));
}

}  // namespace cubiccm
