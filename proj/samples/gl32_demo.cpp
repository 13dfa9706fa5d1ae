// The GL(3,2) triple end to end: Gassmann check, the two Schreier graphs on
// 7 cosets, and an explicit transplantation matrix.
#include <iostream>

#include "isospec/isospec.hpp"

using namespace isospec;

int main() {
  const auto G = groups::close_generators(groups::gl32_generators());
  const auto H1 = groups::gl32_point_stabilizer(G);
  const auto H2 = groups::gl32_plane_stabilizer(G);

  const auto v = groups::is_gassmann(G, H1, H2);
  std::cout << "|G| = " << G.order() << ", |H1| = |H2| = " << H1.order() << "\n";
  std::cout << "condition (2): " << v.condition2_holds << ", conjugate: " << v.subgroups_conjugate << "\n";

  const auto S = schreier::default_generator_multiset(G);
  const auto g1 = schreier::schreier_graph(G, H1, S);
  const auto g2 = schreier::schreier_graph(G, H2, S);
  std::cout << "graph 1:\n" << schreier::to_text(g1) << "graph 2:\n" << schreier::to_text(g2);
  std::cout << "char poly: " << schreier::char_poly(g1.adjacency).to_string() << "\n";
  std::cout << "isospectral: " << schreier::isospectral_graphs(g1, g2) << "\n";

  const auto Q = schreier::equivariant_intertwiner(G, H1, H2);
  std::cout << "Q =\n";
  for (std::size_t i = 0; i < Q.rows(); ++i) {
    for (std::size_t j = 0; j < Q.cols(); ++j) std::cout << ' ' << Q(i, j);
    std::cout << "\n";
  }
  std::cout << "det Q = " << determinant(Q) << ", Q A1 = A2 Q: " << schreier::transplant_check(Q, g1, g2) << "\n";
}
