#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>

#include "corpus.hpp"
#include "isospec/groups/catalog.hpp"
#include "isospec/groups/characters.hpp"
#include "isospec/groups/gassmann.hpp"
#include "isospec/groups/io.hpp"
#include "isospec/groups/subgroup_search.hpp"

using namespace isospec;
using namespace isospec::groups;

namespace {

Permutation cyc(std::size_t n, std::vector<std::vector<Point>> cycles) { return Permutation::from_cycles(n, cycles); }

std::optional<Errc> code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

// All subgroups generated by at most two elements, closed by brute force.
std::set<std::vector<std::size_t>> two_generated_subgroups(const PermGroup& G) {
  std::set<std::vector<std::size_t>> out;
  for (std::size_t a = 0; a < G.order(); ++a)
    for (std::size_t b = a; b < G.order(); ++b) {
      std::vector<std::size_t> gens{a, b};
      auto H = Subgroup::generated_by_indices(G, gens);
      out.insert(H.element_indices());
    }
  return out;
}

std::size_t conjugacy_class_count(const PermGroup& G, const std::set<std::vector<std::size_t>>& subs) {
  std::set<std::vector<std::size_t>> seen;
  std::size_t classes = 0;
  for (const auto& s : subs) {
    if (seen.contains(s)) continue;
    ++classes;
    for (std::size_t x = 0; x < G.order(); ++x) {
      std::vector<std::size_t> c;
      for (auto a : s) c.push_back(G.conjugate(a, x));
      std::sort(c.begin(), c.end());
      seen.insert(c);
    }
  }
  return classes;
}

}  // namespace

TEST(Permutation, CompositionIsLeftToRight) {
  const auto p = cyc(3, {{0, 1}});
  const auto q = cyc(3, {{1, 2}});
  // (p*q)(i) = q(p(i)): 0 -> 1 -> 2
  EXPECT_EQ((p * q)(0), 2u);
  EXPECT_EQ((p * q).to_cycle_string(), "(0 2 1)");
  EXPECT_EQ(p * p.inverse(), Permutation::identity(3));
  EXPECT_EQ(Permutation::identity(4).to_cycle_string(), "()");
}

TEST(Permutation, CycleTypeAndOrder) {
  const auto p = cyc(7, {{0, 1, 2}, {3, 4}});
  EXPECT_EQ(p.cycle_type(), (std::vector<std::size_t>{3, 2, 1, 1}));
  EXPECT_EQ(p.order(), 6u);
  EXPECT_EQ(p.fixed_points(), 2u);
  EXPECT_THROW(Permutation(std::vector<Point>{0, 0, 1}), Error);
  EXPECT_THROW(cyc(3, {{0, 3}}), Error);
}

TEST(PermGroup, ClosureAndClasses) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto G = close_generators(symmetric_group_generators(n));
    std::size_t fact = 1;
    for (std::size_t k = 2; k <= n; ++k) fact *= k;
    EXPECT_EQ(G.order(), fact);
    EXPECT_EQ(G.element(0), Permutation::identity(n));
    // classes of S_n are the partitions of n
    const std::size_t partitions[] = {1, 1, 2, 3, 5, 7};
    EXPECT_EQ(G.classes().size(), partitions[n]);
  }
  const auto gl = close_generators(gl32_generators());
  EXPECT_EQ(gl.order(), 168u);
  EXPECT_EQ(gl.classes().size(), 6u);
}

TEST(PermGroup, ClassSizesPartitionTheGroup) {
  for (const auto& [name, G] : corpus::small_groups()) {
    std::size_t total = 0;
    for (std::size_t k = 0; k < G->classes().size(); ++k) {
      const auto& c = G->classes()[k];
      total += c.members.size();
      EXPECT_EQ(G->order() % c.members.size(), 0u) << name;
      for (auto m : c.members) EXPECT_EQ(G->class_of(m), k);
      for (auto m : c.members) EXPECT_EQ(G->element(m).cycle_type(), c.representative.cycle_type()) << name;
    }
    EXPECT_EQ(total, G->order()) << name;
  }
}

TEST(PermGroup, CapExceeded) {
  EXPECT_EQ(code_of([] { close_generators(symmetric_group_generators(8), 1000); }), Errc::CapExceeded);
}

TEST(PermGroup, GL32CycleTypeCounts) {
  const auto G = close_generators(gl32_generators());
  std::map<std::vector<std::size_t>, std::size_t> counts;
  for (const auto& g : G.elements()) ++counts[g.cycle_type()];
  EXPECT_EQ(counts[(std::vector<std::size_t>{1, 1, 1, 1, 1, 1, 1})], 1u);
  EXPECT_EQ(counts[(std::vector<std::size_t>{2, 2, 1, 1, 1})], 21u);
  EXPECT_EQ(counts[(std::vector<std::size_t>{3, 3, 1})], 56u);
  EXPECT_EQ(counts[(std::vector<std::size_t>{4, 2, 1})], 42u);
  EXPECT_EQ(counts[(std::vector<std::size_t>{7})], 48u);
}

TEST(Subgroup, ValidationRejectsNonSubgroups) {
  const auto G = close_generators(symmetric_group_generators(3));
  // {e, (0 1 2)} is not closed
  std::size_t r = *G.index_of(cyc(3, {{0, 1, 2}}));
  EXPECT_EQ(code_of([&] { Subgroup::from_indices(G, {0, r}); }), Errc::NotASubgroup);
  EXPECT_EQ(code_of([&] { Subgroup::from_indices(G, {1}); }), Errc::NotASubgroup);
  std::vector<Permutation> outside{cyc(4, {{0, 1}})};
  EXPECT_EQ(code_of([&] { Subgroup::generated_by(G, std::vector<Permutation>{cyc(3, {{0, 1}})}); }), std::nullopt);
  EXPECT_EQ(code_of([&] { Subgroup::generated_by(G, outside); }), Errc::NotASubgroup);
}

TEST(Characters, PermutationCharacterBasics) {
  for (const auto& t : corpus::gassmann_corpus()) {
    const auto chi = permutation_character(*t.G, t.H1);
    EXPECT_EQ(chi.values.at(0), Rational(static_cast<unsigned long>(t.H1.index()))) << t.name;
    // <chi, 1>_G = number of G-orbits on the cosets = 1
    const auto whole = Subgroup::generated_by(*t.G, t.G->generators());
    EXPECT_EQ(invariant_dimension(chi, whole), 1) << t.name;
    // Burnside: dimension of H2-invariants of C[H1\G] = number of H2-orbits on H1\G
    const auto action = coset_action(*t.G, t.H1);
    EXPECT_EQ(invariant_dimension(chi, t.H2), Rational(static_cast<unsigned long>(orbit_count(action, t.H2)))) << t.name;
  }
}

TEST(Characters, CosetActionIsAHomomorphism) {
  const auto G = close_generators(gl32_generators());
  const auto H = gl32_plane_stabilizer(G);
  const auto act = coset_action(G, H);
  EXPECT_EQ(act.coset_count(), 7u);
  for (std::size_t a = 0; a < G.order(); a += 7)
    for (std::size_t b = 0; b < G.order(); b += 5) EXPECT_EQ(act.image(G.multiply(a, b)), act.image(a) * act.image(b));
}

TEST(Characters, InvariantDimensionSizeMismatch) {
  const auto G = close_generators(symmetric_group_generators(3));
  const auto H = point_stabilizer(G, 0);
  EXPECT_EQ(code_of([&] { invariant_dimension(ClassFunction{{1, 2}}, H); }), Errc::InvalidArgument);
}

TEST(Gassmann, GL32PointAndPlaneStabilizers) {
  const auto G = close_generators(gl32_generators());
  const auto H1 = gl32_point_stabilizer(G);
  const auto H2 = gl32_plane_stabilizer(G);
  EXPECT_EQ(H1.order(), 24u);
  EXPECT_EQ(H2.order(), 24u);
  const auto v = is_gassmann(G, H1, H2);
  EXPECT_TRUE(v.condition2_holds);
  EXPECT_TRUE(v.characters_equal);
  EXPECT_FALSE(v.subgroups_conjugate);
  EXPECT_TRUE(v.is_gassmann_system);
  // brute force over all 168 elements: no x with x^-1 H1 x = H2
  for (std::size_t x = 0; x < G.order(); ++x) EXPECT_FALSE(H1.conjugate_by(x) == H2);
  // |H ∩ C| per class, by cycle type: identity 1, involutions 9, 3-cycles 8, 4-cycles 6
  std::map<std::vector<std::size_t>, std::size_t> per_type;
  for (std::size_t c = 0; c < G.classes().size(); ++c) {
    EXPECT_EQ(v.intersection_table[c].first, v.intersection_table[c].second);
    per_type[G.classes()[c].representative.cycle_type()] += v.intersection_table[c].first;
  }
  EXPECT_EQ(per_type[(std::vector<std::size_t>{2, 2, 1, 1, 1})], 9u);
  EXPECT_EQ(per_type[(std::vector<std::size_t>{3, 3, 1})], 8u);
  EXPECT_EQ(per_type[(std::vector<std::size_t>{4, 2, 1})], 6u);
  EXPECT_EQ(per_type[(std::vector<std::size_t>{7})], 0u);
}

TEST(Gassmann, S3SubgroupsAreNotGassmann) {
  const auto G = close_generators(symmetric_group_generators(3));
  const auto C2 = point_stabilizer(G, 2);
  const auto C3 = Subgroup::generated_by(G, std::vector<Permutation>{cyc(3, {{0, 1, 2}})});
  const auto v = is_gassmann(G, C2, C3);
  EXPECT_FALSE(v.condition2_holds);
  EXPECT_FALSE(v.is_gassmann_system);
  // two conjugate C2's: class intersections agree but they are conjugate
  const auto w = is_gassmann(G, point_stabilizer(G, 0), point_stabilizer(G, 1));
  EXPECT_TRUE(w.condition2_holds);
  EXPECT_TRUE(w.subgroups_conjugate);
  EXPECT_FALSE(w.is_gassmann_system);
  EXPECT_TRUE(conjugating_element(G, point_stabilizer(G, 0), point_stabilizer(G, 1)).has_value());
}

TEST(Gassmann, ConditionsAgreeAcrossCorpus) {
  const auto triples = corpus::gassmann_corpus();
  EXPECT_GE(triples.size(), 20u);
  std::size_t gassmann = 0, holds = 0, fails = 0;
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long> val(-10, 10);
  for (const auto& t : triples) {
    const auto v = is_gassmann(*t.G, t.H1, t.H2);
    EXPECT_EQ(v.condition2_holds, v.characters_equal) << t.name;
    gassmann += v.is_gassmann_system;
    (v.condition2_holds ? holds : fails)++;
    if (v.subgroups_conjugate) EXPECT_TRUE(v.condition2_holds) << t.name;
    if (!v.condition2_holds) continue;
    for (int k = 0; k < 100; ++k) {
      ClassFunction chi;
      for (std::size_t c = 0; c < t.G->classes().size(); ++c) chi.values.emplace_back(val(rng));
      EXPECT_EQ(invariant_dimension(chi, t.H1), invariant_dimension(chi, t.H2)) << t.name;
    }
  }
  EXPECT_GE(gassmann, 1u);
  EXPECT_GT(holds, 0u);
  EXPECT_GT(fails, 0u);
}

TEST(Gassmann, ConjugateSubgroupsSatisfyConditionTwo) {
  const auto G = close_generators(gl32_generators());
  const auto H = gl32_point_stabilizer(G);
  for (std::size_t x = 0; x < G.order(); x += 11) {
    const auto v = is_gassmann(G, H, H.conjugate_by(x));
    EXPECT_TRUE(v.condition2_holds);
    EXPECT_TRUE(v.subgroups_conjugate);
  }
}

TEST(GroupTable, ValidatesAxioms) {
  EXPECT_EQ(code_of([] { FiniteGroupTable({{0, 1}, {1, 1}}); }), Errc::InvalidArgument);
  EXPECT_EQ(code_of([] { FiniteGroupTable({{0, 1}, {0, 1}}); }), Errc::InvalidArgument);
  // Latin square with identity 0 but not associative (order-5 loop)
  EXPECT_EQ(code_of([] {
              FiniteGroupTable({{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}});
            }),
            Errc::InvalidArgument);
  const auto c6 = cyclic_table(6);
  EXPECT_EQ(c6.order(), 6u);
  EXPECT_TRUE(c6.is_abelian());
  EXPECT_FALSE(dihedral_table(4).is_abelian());
}

TEST(GroupTable, OrderStatisticsExamples) {
  const auto c2c8 = direct_product_table(cyclic_table(2), cyclic_table(8));
  const auto m16 = modular16_table();
  const auto v = gassmann_via_order_statistics(c2c8, m16);
  EXPECT_TRUE(v.same_statistics);
  ASSERT_TRUE(v.isomorphic.has_value());
  EXPECT_FALSE(*v.isomorphic);
  EXPECT_EQ(v.statistics1, (std::map<std::size_t, std::size_t>{{1, 1}, {2, 3}, {4, 4}, {8, 8}}));

  const auto w = gassmann_via_order_statistics(cyclic_table(4), direct_product_table(cyclic_table(2), cyclic_table(2)));
  EXPECT_FALSE(w.same_statistics);
  EXPECT_EQ(w.statistics1.at(4), 2u);
  EXPECT_FALSE(w.statistics2.contains(4));

  const auto u = gassmann_via_order_statistics(cyclic_table(6), cyclic_table(6));
  EXPECT_TRUE(u.same_statistics);
  EXPECT_TRUE(*u.isomorphic);

  EXPECT_EQ(code_of([] { gassmann_via_order_statistics(cyclic_table(4), cyclic_table(6)); }), Errc::OrderMismatch);
}

TEST(GroupTable, ModularGroupMatchesAffinePermutationGroup) {
  // x -> u x + c on Z/8 with u in {1, 5}
  std::vector<Permutation> gens;
  std::vector<Point> shift(8), mult(8);
  for (Point x = 0; x < 8; ++x) {
    shift[x] = (x + 1) % 8;
    mult[x] = (5 * x) % 8;
  }
  gens.emplace_back(shift);
  gens.emplace_back(mult);
  const auto A = close_generators(gens);
  ASSERT_EQ(A.order(), 16u);
  const auto t = table_of(A);
  EXPECT_TRUE(are_isomorphic(t, modular16_table()));
  EXPECT_FALSE(are_isomorphic(t, direct_product_table(cyclic_table(2), cyclic_table(8))));
  EXPECT_FALSE(t.is_abelian());
}

TEST(GroupTable, IsomorphismSanity) {
  EXPECT_TRUE(are_isomorphic(dihedral_table(3), table_of(close_generators(symmetric_group_generators(3)))));
  EXPECT_FALSE(are_isomorphic(dihedral_table(4), quaternion_table()));
  EXPECT_TRUE(are_isomorphic(cyclic_table(6), direct_product_table(cyclic_table(2), cyclic_table(3))));
  EXPECT_EQ(quaternion_table().order_statistics(), (std::map<std::size_t, std::size_t>{{1, 1}, {2, 1}, {4, 6}}));
}

TEST(GroupTable, RegularEmbeddingAgreementOrderEight) {
  const auto S8 = close_generators(symmetric_group_generators(8));
  ASSERT_EQ(S8.order(), 40320u);
  std::vector<std::pair<std::string, FiniteGroupTable>> tables{
      {"C8", cyclic_table(8)},
      {"C2xC4", direct_product_table(cyclic_table(2), cyclic_table(4))},
      {"C2^3", direct_product_table(cyclic_table(2), direct_product_table(cyclic_table(2), cyclic_table(2)))},
      {"D4", dihedral_table(4)},
      {"Q8", quaternion_table()}};
  std::vector<Subgroup> embedded;
  for (const auto& [name, t] : tables) {
    embedded.push_back(Subgroup::generated_by(S8, regular_embedding_generators(t)));
    EXPECT_EQ(embedded.back().order(), 8u) << name;
  }
  for (std::size_t i = 0; i < tables.size(); ++i)
    for (std::size_t j = i; j < tables.size(); ++j) {
      const bool stats = gassmann_via_order_statistics(tables[i].second, tables[j].second).same_statistics;
      const auto v = is_gassmann(S8, embedded[i], embedded[j]);
      EXPECT_EQ(v.condition2_holds, stats) << tables[i].first << " vs " << tables[j].first;
    }
}

TEST(SubgroupSearch, SmallExamples) {
  const auto S3 = close_generators(symmetric_group_generators(3));
  const auto subs = enumerate_subgroups(S3, 6);
  std::vector<std::size_t> orders;
  for (const auto& H : subs) orders.push_back(H.order());
  EXPECT_EQ(orders, (std::vector<std::size_t>{1, 2, 3, 6}));

  const auto C4 = close_generators({cyc(4, {{0, 1, 2, 3}})});
  EXPECT_EQ(enumerate_subgroups(C4, 4).size(), 3u);
  EXPECT_EQ(enumerate_subgroups(S3, 2).size(), 2u);  // C3 and S3

  const auto GL = close_generators(gl32_generators());
  std::vector<Subgroup> seven;
  for (const auto& H : enumerate_subgroups(GL, 8))
    if (H.index() == 7) seven.push_back(H);
  ASSERT_EQ(seven.size(), 2u);
  EXPECT_FALSE(are_conjugate(GL, seven[0], seven[1]));

  const auto S7 = close_generators(symmetric_group_generators(7));
  EXPECT_EQ(code_of([&] { enumerate_subgroups(S7, 7); }), Errc::CapExceeded);
}

TEST(SubgroupSearch, MatchesTwoGeneratorBruteForce) {
  for (const auto& [name, G] : corpus::small_groups()) {
    if (name == "C2xC2xC2") continue;  // C2^3 itself needs three generators
    const auto brute = two_generated_subgroups(*G);
    const auto subs = enumerate_subgroups(*G, G->order());
    EXPECT_EQ(subs.size(), conjugacy_class_count(*G, brute)) << name;
    for (const auto& H : subs) EXPECT_TRUE(brute.contains(H.element_indices())) << name;
  }
  const std::map<std::string, std::size_t> known{{"S3", 4}, {"S4", 11}, {"A4", 5}, {"D4", 8}, {"C2xC2xC2", 16}, {"GL32", 15}};
  for (const auto& [name, G] : corpus::small_groups()) EXPECT_EQ(enumerate_subgroups(*G, G->order()).size(), known.at(name)) << name;
}

TEST(SubgroupSearch, DeterministicOrdering) {
  const auto G = close_generators(gl32_generators());
  const auto a = enumerate_subgroups(G, 168);
  const auto b = enumerate_subgroups(G, 168);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].element_indices(), b[i].element_indices());
  for (std::size_t i = 1; i < a.size(); ++i)
    EXPECT_TRUE(std::pair(a[i - 1].order(), a[i - 1].element_indices()) < std::pair(a[i].order(), a[i].element_indices()));
}

TEST(GroupIO, ParsesFilesAndReportsTokens) {
  const auto f = parse_group_text("# comment\ndegree 4\n(0 1)(2 3)\n(0 1 2 3)\n");
  EXPECT_EQ(f.degree, 4u);
  ASSERT_EQ(f.generators.size(), 2u);
  EXPECT_EQ(f.generators[1], cyc(4, {{0, 1, 2, 3}}));
  try {
    parse_group_text("degree 4\n(0 1)\n(0 1 x)\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ParseError);
    EXPECT_NE(std::string(e.what()).find("'x'"), std::string::npos) << e.what();
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
  EXPECT_EQ(code_of([] { parse_group_text("degree 3\n(0 5)\n"); }), Errc::ParseError);
  EXPECT_EQ(code_of([] { parse_group_text("(0 1)\n"); }), Errc::ParseError);
  EXPECT_EQ(parse_cycles("()", 3), Permutation::identity(3));

  const auto t = parse_table_text("order 2\n0 1\n1 0\n");
  EXPECT_EQ(t.order(), 2u);
  EXPECT_EQ(code_of([] { parse_table_text("order 2\n0 1\n"); }), Errc::ParseError);
}

TEST(GroupIO, ShippedFixturesMatchCatalog) {
  const auto G = read_group_file(std::string(ISOSPEC_DATA_DIR) + "/gl32.group");
  EXPECT_EQ(G.generators, gl32_generators());
  const auto GL = close_generators(G.generators);
  const auto h1 = read_group_file(std::string(ISOSPEC_DATA_DIR) + "/gl32_point_stabilizer.group");
  const auto h2 = read_group_file(std::string(ISOSPEC_DATA_DIR) + "/gl32_plane_stabilizer.group");
  EXPECT_TRUE(Subgroup::generated_by(GL, h1.generators) == gl32_point_stabilizer(GL));
  EXPECT_TRUE(Subgroup::generated_by(GL, h2.generators) == gl32_plane_stabilizer(GL));
}
