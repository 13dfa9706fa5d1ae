// isospec: batch front end for the groups, schreier, lattices and
// numberfields modules. JSON goes to stdout (or --json-out), a short human
// summary to stderr.
//
// Exit codes: 0 analysis completed, 1 input error, 2 budget exceeded,
// 3 kitaoka-scan flagged a commensurable but non-similar pair.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "isospec/isospec.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace isospec;

constexpr int kExitInput = 1;
constexpr int kExitBudget = 2;
constexpr int kExitCounterexample = 3;

struct Globals {
  std::uint64_t seed = 0;
  std::uint64_t budget = lattices::kDefaultBudget;
  std::string json_out;
  bool timings = false;
};

json rational_json(const Rational& q) { return to_string(q); }

json poly_json(const IntPolynomial& f) {
  json a = json::array();
  for (const auto& c : f.coefficients()) a.push_back(c.get_str());
  return a;
}

json matrix_json(const RationalMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(to_string(m(i, j)));
    rows.push_back(r);
  }
  return rows;
}

// ---- groups ---------------------------------------------------------------

groups::PermGroup load_group(const std::string& path) {
  auto file = groups::read_group_file(path);
  if (file.generators.empty()) file.generators.push_back(groups::Permutation::identity(file.degree));
  return groups::PermGroup::close(std::move(file.generators));
}

std::vector<groups::Point> parse_points(const std::string& text, std::size_t degree) {
  std::vector<groups::Point> pts;
  std::stringstream ss(text);
  for (std::string tok; std::getline(ss, tok, ',');) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw Error(Errc::ParseError, "invalid point '" + tok + "' in subgroup spec");
    const auto p = std::stoul(tok);
    if (p >= degree) throw Error(Errc::InvalidArgument, "point " + tok + " is outside 0.." + std::to_string(degree - 1));
    pts.push_back(static_cast<groups::Point>(p));
  }
  if (pts.empty()) throw Error(Errc::ParseError, "empty point list in subgroup spec");
  return pts;
}

// "stab:i", "setstab:i,j,k", or a group file whose generators lie in G.
groups::Subgroup load_subgroup(const groups::PermGroup& G, const std::string& spec) {
  if (spec.rfind("stab:", 0) == 0) {
    auto pts = parse_points(spec.substr(5), G.degree());
    if (pts.size() != 1) throw Error(Errc::ParseError, "stab: takes exactly one point");
    return groups::point_stabilizer(G, pts[0]);
  }
  if (spec.rfind("setstab:", 0) == 0) return groups::set_stabilizer(G, parse_points(spec.substr(8), G.degree()));
  auto file = groups::read_group_file(spec);
  if (file.degree != G.degree())
    throw Error(Errc::NotASubgroup, spec + ": degree " + std::to_string(file.degree) + " differs from the group degree " +
                                        std::to_string(G.degree()));
  return groups::Subgroup::generated_by(G, file.generators);
}

json subgroup_json(const groups::PermGroup& G, const groups::Subgroup& H) {
  return json{{"order", H.order()}, {"index", H.index()}, {"element_indices", H.element_indices()},
              {"degree", G.degree()}};
}

json gassmann_check(const Globals&, const std::string& group_file, const std::string& s1, const std::string& s2) {
  const auto G = load_group(group_file);
  const auto H1 = load_subgroup(G, s1);
  const auto H2 = load_subgroup(G, s2);
  const auto v = groups::is_gassmann(G, H1, H2);
  json classes = json::array();
  for (std::size_t c = 0; c < G.classes().size(); ++c) {
    const auto& cls = G.classes()[c];
    classes.push_back({{"representative", cls.representative.to_cycle_string()},
                       {"size", cls.members.size()},
                       {"h1", v.intersection_table[c].first},
                       {"h2", v.intersection_table[c].second},
                       {"character1", rational_json(v.character1.values[c])},
                       {"character2", rational_json(v.character2.values[c])}});
  }
  std::cerr << "group order " << G.order() << ", |H1| = " << H1.order() << ", |H2| = " << H2.order() << "\n";
  std::cerr << "class representative          size  |H1 n C|  |H2 n C|\n";
  for (const auto& row : classes)
    std::cerr << "  " << std::left << std::setw(28) << row["representative"].get<std::string>() << std::right << std::setw(4)
              << row["size"].get<std::size_t>() << std::setw(10) << row["h1"].get<std::size_t>() << std::setw(10)
              << row["h2"].get<std::size_t>() << "\n";
  std::cerr << "class intersections equal: " << v.condition2_holds << ", conjugate: " << v.subgroups_conjugate
            << ", Gassmann system: " << v.is_gassmann_system << "\n";
  json out;
  out["inputs"] = {{"group", group_file}, {"subgroup1", s1}, {"subgroup2", s2}};
  out["group_order"] = G.order();
  out["subgroup1"] = subgroup_json(G, H1);
  out["subgroup2"] = subgroup_json(G, H2);
  out["verdicts"] = {{"condition2_holds", v.condition2_holds},
                     {"characters_equal", v.characters_equal},
                     {"subgroups_conjugate", v.subgroups_conjugate},
                     {"is_gassmann_system", v.is_gassmann_system}};
  out["intersection_table"] = classes;
  return out;
}

json order_statistics_check(const std::string& t1, const std::string& t2) {
  const auto a = groups::read_table_file(t1);
  const auto b = groups::read_table_file(t2);
  const auto v = groups::gassmann_via_order_statistics(a, b);
  auto stats = [](const std::map<std::size_t, std::size_t>& m) {
    json o = json::object();
    for (const auto& [k, n] : m) o[std::to_string(k)] = n;
    return o;
  };
  std::cerr << "order statistics equal: " << v.same_statistics;
  if (v.isomorphic) std::cerr << ", isomorphic: " << *v.isomorphic;
  std::cerr << "\n";
  json out;
  out["inputs"] = {{"table1", t1}, {"table2", t2}};
  out["order"] = a.order();
  out["statistics1"] = stats(v.statistics1);
  out["statistics2"] = stats(v.statistics2);
  out["verdicts"] = {{"same_statistics", v.same_statistics},
                     {"isomorphic", v.isomorphic ? json(*v.isomorphic) : json(nullptr)}};
  return out;
}

json gassmann_search(const Globals&, const std::string& group_file, std::size_t max_index) {
  const auto G = load_group(group_file);
  const auto subs = groups::enumerate_subgroups(G, max_index);
  json classes = json::array();
  for (const auto& H : subs) classes.push_back(subgroup_json(G, H));
  json pairs = json::array();
  for (std::size_t i = 0; i < subs.size(); ++i)
    for (std::size_t j = i + 1; j < subs.size(); ++j) {
      if (subs[i].order() != subs[j].order()) continue;
      const auto v = groups::is_gassmann(G, subs[i], subs[j]);
      if (v.is_gassmann_system) pairs.push_back({{"class1", i}, {"class2", j}, {"order", subs[i].order()}});
    }
  std::cerr << subs.size() << " subgroup classes of index <= " << max_index << ", " << pairs.size()
            << " non-conjugate Gassmann pairs\n";
  for (const auto& p : pairs)
    std::cerr << "  classes " << p["class1"] << " and " << p["class2"] << " (order " << p["order"] << ")\n";
  json out;
  out["inputs"] = {{"group", group_file}, {"max_index", max_index}};
  out["group_order"] = G.order();
  out["subgroup_classes"] = classes;
  out["verdicts"] = {{"gassmann_pairs", pairs}};
  return out;
}

// ---- schreier -------------------------------------------------------------

json sunada_graphs(const Globals& g, const std::string& group_file, const std::string& s1, const std::string& s2,
                   const std::string& gens_file, std::size_t random_gens, bool want_intertwiner) {
  const auto G = load_group(group_file);
  const auto H1 = load_subgroup(G, s1);
  const auto H2 = load_subgroup(G, s2);
  std::vector<std::size_t> multiset;
  std::string source;
  if (!gens_file.empty()) {
    auto file = groups::read_group_file(gens_file);
    for (const auto& p : file.generators) {
      auto idx = G.index_of(p);
      if (!idx) throw Error(Errc::NotASubgroup, gens_file + ": " + p.to_cycle_string() + " is not in the group");
      multiset.push_back(*idx);
    }
    source = gens_file;
  } else if (random_gens > 0) {
    multiset = schreier::random_symmetric_multiset(G, random_gens, g.seed);
    source = "random:" + std::to_string(random_gens);
  } else {
    multiset = schreier::default_generator_multiset(G);
    source = "generators and inverses";
  }
  const auto g1 = schreier::schreier_graph(G, H1, multiset);
  const auto g2 = schreier::schreier_graph(G, H2, multiset);
  const auto p1 = schreier::char_poly(g1.adjacency);
  const auto p2 = schreier::char_poly(g2.adjacency);
  const bool iso = p1 == p2;
  json labels = json::array();
  for (auto s : multiset) labels.push_back(G.element(s).to_cycle_string());

  json out;
  out["inputs"] = {{"group", group_file}, {"subgroup1", s1}, {"subgroup2", s2}, {"multiset", source},
                   {"seed", g.seed}, {"intertwiner", want_intertwiner}};
  out["multiset"] = labels;
  out["vertices"] = {g1.vertex_count, g2.vertex_count};
  out["char_poly1"] = poly_json(p1);
  out["char_poly2"] = poly_json(p2);
  out["verdicts"] = {{"isospectral", iso}};
  std::cerr << "graph 1: " << g1.vertex_count << " vertices, char poly " << p1.to_string() << "\n";
  std::cerr << "graph 2: " << g2.vertex_count << " vertices, char poly " << p2.to_string() << "\n";
  std::cerr << "isospectral: " << iso << "\n";
  if (want_intertwiner) {
    try {
      const auto Q = schreier::equivariant_intertwiner(G, H1, H2, g.seed);
      const bool ok = schreier::transplant_check(Q, g1, g2);
      const Rational det = determinant(Q);
      out["intertwiner"] = {{"matrix", matrix_json(Q)}, {"determinant", rational_json(det)}};
      out["verdicts"]["transplant_check"] = ok;
      std::cerr << "intertwiner found, det " << to_string(det) << ", transplant check " << ok << "\n";
    } catch (const Error& e) {
      if (e.code() != Errc::NoIntertwiner) throw;
      out["intertwiner"] = nullptr;
      out["verdicts"]["transplant_check"] = nullptr;
      out["notes"] = {std::string(e.what())};
      std::cerr << e.what() << "\n";
    }
  }
  return out;
}

// ---- lattices -------------------------------------------------------------

struct LatticeInput {
  std::string label;
  lattices::GramMatrix gram;
};

// Lattices in command-line order across --builtin and --gram.
std::vector<LatticeInput> collect_lattices(const CLI::App& sub, const CLI::Option* builtin, const CLI::Option* gram) {
  std::vector<LatticeInput> out;
  std::size_t nb = 0, ng = 0;
  for (const CLI::Option* opt : sub.parse_order()) {
    if (opt == builtin) {
      const std::string name = builtin->results().at(nb++);
      out.push_back({"builtin:" + name, lattices::builtin_lattice(name)});
    } else if (opt == gram) {
      const std::string path = gram->results().at(ng++);
      out.push_back({path, lattices::read_gram_file(path)});
    }
  }
  return out;
}

json spectrum_json(const std::vector<std::pair<Rational, std::uint64_t>>& entries) {
  json a = json::array();
  for (const auto& [v, m] : entries) a.push_back({{"value", rational_json(v)}, {"multiplicity", m}});
  return a;
}

json theta_cmd(const Globals& g, const std::vector<LatticeInput>& ls, const Rational& cutoff) {
  if (ls.size() != 1) throw Error(Errc::InvalidArgument, "theta takes exactly one lattice");
  const auto t = lattices::theta_coefficients(ls[0].gram, cutoff, g.budget);
  json coeffs = json::array();
  std::cerr << "norm  count\n";
  for (const auto& [norm, count] : t.counts) {
    coeffs.push_back({{"norm", rational_json(norm)}, {"count", count}});
    std::cerr << "  " << to_string(norm) << "  " << count << "\n";
  }
  json out;
  out["inputs"] = {{"lattice", ls[0].label}, {"cutoff", rational_json(cutoff)}, {"budget", g.budget}};
  out["dimension"] = ls[0].gram.dimension();
  out["determinant"] = rational_json(ls[0].gram.determinant());
  out["theta"] = coeffs;
  return out;
}

json torus_cmd(const Globals& g, const std::vector<LatticeInput>& ls, const Rational& cutoff) {
  if (ls.empty() || ls.size() > 2) throw Error(Errc::InvalidArgument, "torus takes one or two lattices");
  json out;
  json inputs = {{"lattices", json::array()}, {"cutoff", rational_json(cutoff)}, {"budget", g.budget}};
  for (const auto& l : ls) inputs["lattices"].push_back(l.label);
  out["inputs"] = inputs;
  std::vector<lattices::SpectrumMultiset> spectra;
  json sj = json::array();
  for (const auto& l : ls) {
    spectra.push_back(lattices::torus_spectrum(l.gram, cutoff, g.budget));
    sj.push_back({{"lattice", l.label}, {"size", spectra.back().size()}, {"entries", spectrum_json(spectra.back().entries)}});
    std::cerr << l.label << ": " << spectra.back().size() << " eigenvalues (values q, eigenvalue 4 pi^2 q) up to "
              << to_string(cutoff) << "\n";
  }
  out["spectra"] = sj;
  out["caveat"] = lattices::finite_cutoff_caveat(cutoff);
  if (spectra.size() == 2) {
    const bool iso = spectra[0].entries == spectra[1].entries;
    out["verdicts"] = {{"isospectral", iso}};
    std::cerr << "isospectral up to cutoff: " << iso << "\n";
  }
  return out;
}

json commensurable_cmd(const Globals& g, const std::vector<LatticeInput>& ls, const Rational& cutoff,
                       std::size_t max_scalings) {
  if (ls.size() != 2) throw Error(Errc::InvalidArgument, "commensurable takes exactly two lattices");
  const auto sc = lattices::spectrally_commensurable(ls[0].gram, ls[1].gram, cutoff, max_scalings, g.budget);
  const auto rs = lattices::rationally_similar(ls[0].gram, ls[1].gram);
  json cands = json::array();
  for (const auto& c : sc.candidates) cands.push_back(rational_json(c));
  json local = json::array();
  for (const auto& lc : rs.local_data.local)
    local.push_back({{"place", lc.place.to_string()}, {"hasse1", lc.hasse1}, {"hasse2", lc.hasse2}});
  auto opt = [](const std::optional<Rational>& q) { return q ? rational_json(*q) : json(nullptr); };
  json out;
  out["inputs"] = {{"lattices", {ls[0].label, ls[1].label}},
                   {"cutoff", rational_json(cutoff)},
                   {"max_scalings", max_scalings},
                   {"budget", g.budget}};
  out["verdicts"] = {{"spectrally_commensurable", sc.verdict},
                     {"scaling", opt(sc.scaling)},
                     {"multiplicity_commensurable", sc.multiplicity_verdict},
                     {"multiplicity_scaling", opt(sc.multiplicity_scaling)},
                     {"rationally_similar", rs.similar},
                     {"similarity_scaling", opt(rs.scaling)}};
  out["spectral_candidates"] = cands;
  out["similarity_invariants"] = {{"discriminant1", rational_json(rs.local_data.discriminant1)},
                                  {"discriminant2", rational_json(rs.local_data.discriminant2)},
                                  {"same_signature", rs.local_data.same_signature},
                                  {"same_discriminant_class", rs.local_data.same_discriminant_class},
                                  {"local", local}};
  out["caveat"] = sc.caveat;
  std::cerr << "spectrally commensurable: " << sc.verdict << " (multiset convention: " << sc.multiplicity_verdict
            << "), rationally similar: " << rs.similar << "\n";
  return out;
}

json kitaoka_cmd(const Globals& g, const lattices::KitaokaScanOptions& opt_in, int& exit_code) {
  auto opt = opt_in;
  opt.seed = g.seed;
  opt.budget = g.budget;
  const auto r = lattices::kitaoka_scan(opt);
  json flagged = json::array();
  for (const auto& p : r.flagged)
    flagged.push_back({{"g1", matrix_json(p.g1.matrix())},
                       {"g2", matrix_json(p.g2.matrix())},
                       {"spectral_scaling", p.spectral_scaling ? rational_json(*p.spectral_scaling) : json(nullptr)}});
  json out;
  out["inputs"] = {{"dimension", opt.dimension}, {"entry_bound", opt.entry_bound}, {"trials", opt.trials},
                   {"cutoff", rational_json(opt.cutoff)}, {"seed", opt.seed}, {"budget", opt.budget},
                   {"inject_multiple", opt.inject_multiple ? json(*opt.inject_multiple) : json(nullptr)}};
  out["pairs"] = r.pairs;
  out["table"] = {{"commensurable_similar", r.table[1][1]},
                  {"commensurable_not_similar", r.table[1][0]},
                  {"not_commensurable_similar", r.table[0][1]},
                  {"not_commensurable_not_similar", r.table[0][0]}};
  out["budget_failures"] = r.budget_failures;
  out["flagged"] = flagged;
  out["verdicts"] = {{"counterexample_candidates", r.flagged.size()}};
  out["caveat"] = r.caveat;
  std::cerr << "                 similar  not similar\n"
            << "commensurable    " << std::setw(7) << r.table[1][1] << "  " << std::setw(11) << r.table[1][0] << "\n"
            << "not commensurable" << std::setw(7) << r.table[0][1] << "  " << std::setw(11) << r.table[0][0] << "\n";
  if (r.budget_failures) std::cerr << r.budget_failures << " pairs exceeded the enumeration budget\n";
  if (!r.flagged.empty()) {
    std::cerr << "*** " << r.flagged.size() << " pair(s) spectrally commensurable but NOT rationally similar ***\n";
    exit_code = kExitCounterexample;
  }
  return out;
}

// ---- numberfields ---------------------------------------------------------

json census_json(const numberfields::SplittingCensus& c) {
  json entries = json::array();
  for (const auto& [p, t] : c.entries) entries.push_back({{"prime", p}, {"type", t}});
  return json{{"degree", c.degree}, {"discriminant", c.discriminant.get_str()}, {"skipped", c.skipped}, {"entries", entries}};
}

json splitting_census_cmd(const std::string& poly_file, std::uint64_t bound, const std::string& csv_path,
                          std::uint64_t dirichlet) {
  const auto f = numberfields::read_polynomial_file(poly_file);
  const auto c = numberfields::splitting_census(f, bound);
  if (!csv_path.empty()) {
    std::ofstream csv(csv_path);
    if (!csv) throw Error(Errc::InvalidArgument, "cannot write '" + csv_path + "'");
    csv << numberfields::census_csv(c);
  }
  std::map<std::string, std::size_t> freq;
  for (const auto& [p, t] : c.entries) ++freq[numberfields::to_string(t)];
  std::cerr << "f = " << f.to_string() << ", disc " << c.discriminant.get_str() << ", " << c.entries.size()
            << " unramified primes <= " << bound << "\n";
  for (const auto& [t, n] : freq) std::cerr << "  " << t << ": " << n << "\n";
  json out;
  out["inputs"] = {{"polynomial", poly_file}, {"bound", bound}, {"dirichlet", dirichlet}};
  out["polynomial"] = poly_json(f);
  out["census"] = census_json(c);
  if (dirichlet) out["dirichlet_coefficients"] = numberfields::dirichlet_coefficients(c, dirichlet);
  out["caveat"] = numberfields::census_caveat(bound);
  return out;
}

json arith_equiv_cmd(const std::string& file1, const std::string& file2, std::uint64_t bound, std::uint64_t dirichlet) {
  const auto f1 = numberfields::read_polynomial_file(file1);
  const auto f2 = numberfields::read_polynomial_file(file2);
  json out;
  out["inputs"] = {{"polynomial1", file1}, {"polynomial2", file2}, {"bound", bound}, {"dirichlet", dirichlet}};
  out["polynomial1"] = poly_json(f1);
  out["polynomial2"] = poly_json(f2);
  numberfields::CensusComparison cmp;
  if (f1.degree() != f2.degree()) {
    cmp = numberfields::census_equal(f1, f2, bound);
  } else {
    const auto c1 = numberfields::splitting_census(f1, bound);
    const auto c2 = numberfields::splitting_census(f2, bound);
    cmp = numberfields::compare_censuses(c1, c2);
    out["discriminant1"] = c1.discriminant.get_str();
    out["discriminant2"] = c2.discriminant.get_str();
    json w;
    if (cmp.first_disagreement) {
      const auto p = *cmp.first_disagreement;
      w = {{"prime", p}, {"type1", c1.entries.at(p)}, {"type2", c2.entries.at(p)}};
    }
    out["witness"] = w;
    if (dirichlet) {
      out["dirichlet_coefficients1"] = numberfields::dirichlet_coefficients(c1, dirichlet);
      out["dirichlet_coefficients2"] = numberfields::dirichlet_coefficients(c2, dirichlet);
    }
  }
  out["verdicts"] = {{"equal", cmp.equal},
                     {"first_disagreement", cmp.first_disagreement ? json(*cmp.first_disagreement) : json(nullptr)},
                     {"compared_count", cmp.compared_count}};
  out["caveat"] = cmp.caveat;
  std::cerr << "censuses equal up to " << bound << ": " << cmp.equal << " (" << cmp.compared_count << " primes compared)";
  if (cmp.first_disagreement) std::cerr << ", first disagreement at p = " << *cmp.first_disagreement;
  std::cerr << "\n";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gassmann triples, Sunada graphs, flat-torus spectra and arithmetic equivalence"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "Seed for every randomized step")->capture_default_str();
  app.add_option("--budget", g.budget, "Lattice enumeration budget (visited nodes)")->capture_default_str();
  app.add_option("--json-out", g.json_out, "Write the JSON report here instead of stdout");
  app.add_flag("--timings", g.timings, "Add wall-clock timings to the report");

  // gassmann-check
  std::string gc_group, gc_h1, gc_h2;
  std::vector<std::string> gc_tables;
  auto* gc = app.add_subcommand("gassmann-check", "Test a triple (G, H1, H2) for equal class intersections and conjugacy");
  gc->add_option("group", gc_group, "Group file");
  gc->add_option("h1", gc_h1, "Subgroup: file, stab:i or setstab:i,j,...");
  gc->add_option("h2", gc_h2, "Subgroup: file, stab:i or setstab:i,j,...");
  gc->add_option("--tables", gc_tables, "Two multiplication-table files; compares element-order statistics")->expected(2);

  // gassmann-search
  std::string gs_group;
  std::size_t gs_index = 16;
  auto* gs = app.add_subcommand("gassmann-search", "Enumerate subgroup classes and report Gassmann pairs");
  gs->add_option("group", gs_group, "Group file")->required();
  gs->add_option("--max-index", gs_index, "Largest subgroup index")->capture_default_str();

  // sunada-graphs
  std::string sg_group, sg_h1, sg_h2, sg_gens;
  std::size_t sg_random = 0;
  bool sg_intertwiner = false;
  auto* sg = app.add_subcommand("sunada-graphs", "Schreier coset graphs, characteristic polynomials, transplantation");
  sg->add_option("group", sg_group, "Group file")->required();
  sg->add_option("h1", sg_h1, "Subgroup: file, stab:i or setstab:i,j,...")->required();
  sg->add_option("h2", sg_h2, "Subgroup: file, stab:i or setstab:i,j,...")->required();
  auto* sg_gens_opt = sg->add_option("--gens", sg_gens, "Group-format file listing the generator multiset");
  sg->add_option("--random-gens", sg_random, "Seeded random inverse-closed multiset with this many pairs")->excludes(sg_gens_opt);
  sg->add_flag("--intertwiner", sg_intertwiner, "Compute an intertwiner and check transplantation");

  // theta, torus, commensurable
  std::string cutoff_text = "8";
  std::size_t max_scalings = 16;
  auto add_lattice_opts = [&](CLI::App* sub) {
    auto* b = sub->add_option("--builtin", "Builtin lattice: Zn:k, A2, E8, E8E8, D16plus")->take_all();
    auto* gr = sub->add_option("--gram", "Gram matrix file")->take_all();
    sub->add_option("--cutoff", cutoff_text, "Norm or spectral cutoff (rational)")->capture_default_str();
    return std::pair{b, gr};
  };
  auto* th = app.add_subcommand("theta", "Theta coefficients of a lattice");
  auto [th_b, th_g] = add_lattice_opts(th);
  auto* to = app.add_subcommand("torus", "Flat-torus spectra; isospectrality for two lattices");
  auto [to_b, to_g] = add_lattice_opts(to);
  auto* cm = app.add_subcommand("commensurable", "Spectral commensurability and rational similarity");
  auto [cm_b, cm_g] = add_lattice_opts(cm);
  cm->add_option("--max-scalings", max_scalings, "Scalings to try")->capture_default_str();

  // kitaoka-scan
  lattices::KitaokaScanOptions ks;
  std::string ks_cutoff = "50";
  long ks_inject = 0;
  auto* kk = app.add_subcommand("kitaoka-scan", "Random pairs: spectral commensurability vs rational similarity");
  kk->add_option("--dimension", ks.dimension, "Form dimension (1..4)")->capture_default_str();
  kk->add_option("--entry-bound", ks.entry_bound, "Entries lie in [-bound, bound]")->capture_default_str();
  kk->add_option("--trials", ks.trials, "Random pairs")->capture_default_str();
  kk->add_option("--cutoff", ks_cutoff, "Spectral cutoff")->capture_default_str();
  kk->add_option("--max-scalings", ks.max_scalings, "Scalings to try per pair")->capture_default_str();
  auto* ks_inject_opt = kk->add_option("--inject-multiple", ks_inject, "Append one pair (g, k g)");

  // splitting-census, arith-equiv
  std::string sc_poly, sc_csv;
  std::uint64_t bound = 1000, dirichlet = 0;
  auto* sc = app.add_subcommand("splitting-census", "Factorization types of f mod p for unramified p <= bound");
  sc->add_option("poly", sc_poly, "Polynomial file")->required();
  sc->add_option("--bound", bound, "Prime bound")->capture_default_str();
  sc->add_option("--csv", sc_csv, "Also write prime,partition rows here");
  sc->add_option("--dirichlet", dirichlet, "Emit Dirichlet coefficients a_1..a_N");
  std::string ae1, ae2;
  auto* ae = app.add_subcommand("arith-equiv", "Compare the splitting censuses of two polynomials");
  ae->add_option("poly1", ae1, "Polynomial file")->required();
  ae->add_option("poly2", ae2, "Polynomial file")->required();
  ae->add_option("--bound", bound, "Prime bound")->capture_default_str();
  ae->add_option("--dirichlet", dirichlet, "Emit Dirichlet coefficients a_1..a_N of both");

  app.fallthrough();
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  int exit_code = 0;
  json report;
  const auto start = std::chrono::steady_clock::now();
  CLI::App* sub = app.get_subcommands().front();
  try {
    json body;
    if (sub == gc) {
      if (!gc_tables.empty()) {
        if (!gc_group.empty()) throw Error(Errc::InvalidArgument, "give either a group and two subgroups or --tables");
        body = order_statistics_check(gc_tables[0], gc_tables[1]);
      } else {
        if (gc_group.empty() || gc_h1.empty() || gc_h2.empty())
          throw Error(Errc::InvalidArgument, "gassmann-check needs a group file and two subgroups");
        body = gassmann_check(g, gc_group, gc_h1, gc_h2);
      }
    } else if (sub == gs) {
      body = gassmann_search(g, gs_group, gs_index);
    } else if (sub == sg) {
      body = sunada_graphs(g, sg_group, sg_h1, sg_h2, sg_gens, sg_random, sg_intertwiner);
    } else if (sub == th || sub == to || sub == cm) {
      const Rational cutoff = parse_rational(cutoff_text);
      if (sub == th) body = theta_cmd(g, collect_lattices(*th, th_b, th_g), cutoff);
      if (sub == to) body = torus_cmd(g, collect_lattices(*to, to_b, to_g), cutoff);
      if (sub == cm) body = commensurable_cmd(g, collect_lattices(*cm, cm_b, cm_g), cutoff, max_scalings);
    } else if (sub == kk) {
      ks.cutoff = parse_rational(ks_cutoff);
      if (ks_inject_opt->count()) ks.inject_multiple = ks_inject;
      body = kitaoka_cmd(g, ks, exit_code);
    } else if (sub == sc) {
      body = splitting_census_cmd(sc_poly, bound, sc_csv, dirichlet);
    } else if (sub == ae) {
      body = arith_equiv_cmd(ae1, ae2, bound, dirichlet);
    }
    report["subcommand"] = sub->get_name();
    for (auto& [k, v] : body.items()) report[k] = v;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == Errc::BudgetExceeded ? kExitBudget : kExitInput;
  }
  if (g.timings) {
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report["timings"] = {{"total_ms", ms}};
  }
  const std::string text = report.dump(2) + "\n";
  if (g.json_out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(g.json_out);
    if (!out) {
      std::cerr << "error: cannot write '" << g.json_out << "'\n";
      return kExitInput;
    }
    out << text;
  }
  return exit_code;
}
