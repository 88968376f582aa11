#include "autfn/commands.hpp"

#include <algorithm>

#include "autfn/error.hpp"
#include "autfn/flat.hpp"
#include "autfn/glrep.hpp"
#include "autfn/int_matrix.hpp"

namespace autfn {

namespace {

using nlohmann::json;

json rows(IntMatrix const& m) { return m.to_rows(); }

json qjson(QVector const& v) {
  json out = json::array();
  for (auto const& x : v) out.push_back(to_string(x));
  return out;
}

json vjson(Vec3 const& v) { return json::array({to_string(v[0]), to_string(v[1]), to_string(v[2])}); }

std::string mode_name(RelationMode m) { return m == RelationMode::Aut ? "aut" : "out"; }

json relation_witness(RelationResult const& r) {
  json w{{"lhs", format(r.lhs)}, {"rhs", format(r.rhs)}, {"mode", mode_name(r.mode)}};
  if (r.conjugator) w["conjugator"] = format(*r.conjugator);
  if (!r.holds) {
    json images = json::array();
    Endo l = endo_of(r.lhs);
    Endo rr = endo_of(r.rhs);
    for (int i = 1; i <= l.rank(); ++i) {
      images.push_back({{"lhs", format(l.image(i))}, {"rhs", format(rr.image(i))}});
    }
    w["images"] = images;
  }
  return w;
}

std::string relation_anchor(RelationResult const& r) {
  std::string const& n = r.name;
  std::string prefix = r.mode == RelationMode::Out ? "Out(F_3): " : "";
  if (n.rfind("[L", 0) == 0 || n.rfind("[R", 0) == 0) return prefix + "commutator identities";
  if (n.find("ad(") != std::string::npos && n.rfind("(", 0) == 0) return prefix + "ad functoriality";
  if (n.rfind("L21^-1 R21 L31^-1 R31", 0) == 0) return prefix + "product of the Nielsen Z^4 generators";
  if (n.rfind("(L21^-1 R21)", 0) == 0) return prefix + "alpha1 alpha2 versus beta1 beta2";
  if (n.rfind("E", 0) == 0) return prefix + "inversion conjugates L to R";
  return prefix + "Nielsen Z^4 generators commute";
}

void add_relation(Report& report, RelationResult const& r) {
  report.add(r.name, relation_anchor(r), r.holds, relation_witness(r));
}

void add_gpq(Report& report, GpqReport const& g) {
  for (auto const& r : g.relations) {
    report.add(r.name, "G_{p,q} relation", r.holds, relation_witness(r));
  }
}

}  // namespace

Report cmd_verify_relations(RelationMode mode, std::vector<RelationResult> const& extra) {
  Report report;
  report.command = "verify-relations";
  report.args = {{"mode", mode_name(mode)}};
  for (auto const& r : standard_relation_suite(mode == RelationMode::Out)) add_relation(report, r);

  auto z4 = nielsen_z4_check();
  report.add("sign of L21^-1 R21 L31^-1 R31", "product of the Nielsen Z^4 generators", z4.sign() != 0,
             {{"product", format(z4.product)},
              {"equals_ad_a1", z4.equals_ad_a1},
              {"equals_ad_a1_inverse", z4.equals_ad_a1_inverse},
              {"sign", z4.sign()}});

  if (mode == RelationMode::Out) {
    int const n = 3;
    AutExpr alpha = AutExpr::left(n, 2, 1).inverse() * AutExpr::right(n, 2, 1);
    AutExpr beta = AutExpr::left(n, 3, 1).inverse() * AutExpr::right(n, 3, 1);
    bool literal = verify_relation(alpha, beta, RelationMode::Out);
    bool inverted = verify_relation(alpha, beta.inverse(), RelationMode::Out);
    // Exactly one orientation can hold unless beta^2 is inner, which it is not.
    report.add("orientation of alpha1 alpha2 = beta1 beta2", "alpha1 alpha2 versus beta1 beta2",
               inverted != literal,
               {{"alpha1 alpha2", format(alpha)},
                {"beta1 beta2", format(beta)},
                {"literal_form_holds", literal},
                {"inverted_form_holds", inverted}});
  }
  for (auto const& r : extra) add_relation(report, r);
  return report;
}

Report cmd_gpq(int n, long p, long q, std::string const& w_text) {
  if (n < 3) {
    throw PreconditionError("gpq needs n >= 3");
  }
  Word w = parse_word(w_text, n - 2);
  Report report;
  report.command = "gpq";
  report.args = {{"n", n}, {"p", p}, {"q", q}, {"w", format(w)}};
  if (w.empty()) {
    throw PreconditionError("w must be nontrivial");
  }
  add_gpq(report, gpq_check(n, p, q, w));
  return report;
}

Report cmd_inner_gpq(long p, long q) {
  Report report;
  report.command = "inner-gpq";
  report.args = {{"p", p}, {"q", q}};
  add_gpq(report, inner_gpq_check(p, q));
  return report;
}

Report cmd_glrep(std::string const& aut_text, long power) {
  AutExpr x = parse_aut(aut_text, 3);
  Endo e = endo_of(x.pow(power));
  Report report;
  report.command = "gl-rep";
  report.args = {{"aut", format(x)}, {"power", power}};
  if (!stabilizes(e)) {
    throw PreconditionError("automorphism does not preserve ker(nu)");
  }
  IntMatrix a = ab5(e);
  IntMatrix m = mu(e);
  long d = det(m);
  report.add("stabilizes ker(nu)", "stabilizer acts on the double cover", true,
             {{"stabilizes", true}, {"ab5", rows(a)}, {"mu", rows(m)}});
  report.add("det mu = +-1", "mu lands in GL(2,Z)", d == 1 || d == -1, {{"det", d}});

  IntMatrix base = mu(endo_of(x));
  IntMatrix expected = power >= 0 ? pow(base, static_cast<unsigned long>(power))
                                  : pow(inverse_gl2(base), static_cast<unsigned long>(-power));
  report.add("mu(f^k) = mu(f)^k", "mu is a homomorphism", expected == m,
             {{"mu_f", rows(base)}, {"mu_f_power", rows(expected)}});
  return report;
}

Report cmd_lk_basis(int k) {
  auto basis = lk_basis(k);
  Report report;
  report.command = "lk-basis";
  report.args = {{"k", k}};
  json words = json::array();
  long a_total = 0;
  bool conjugates_of_powers = true;
  for (auto const& w : basis) {
    words.push_back(format(w));
    a_total += ab_vector(w)[0];
    auto c = cyclic_decomposition(w).second;
    conjugates_of_powers = conjugates_of_powers && !c.empty() && max_index(c) >= 1
                           && std::all_of(c.letters().begin(), c.letters().end(),
                                          [&](Letter l) { return l == c[0]; });
  }
  report.add("k words", "basis of the index k-1 subgroup", basis.size() == static_cast<std::size_t>(k),
             {{"words", words}});
  report.add("total a-exponent = k-1", "basis of the index k-1 subgroup", a_total == k - 1,
             {{"a_exponent", a_total}});
  report.add("each word is a conjugate of a generator power", "basis of the index k-1 subgroup",
             conjugates_of_powers);
  return report;
}

Report cmd_sanov(long p, int max_length) {
  if (max_length < 0 || max_length > 12) {
    throw PreconditionError("search length must lie in 0..12");
  }
  IntMatrix m1 = mu(endo_of(AutExpr::left(3, 1, 2, p)));
  IntMatrix m2 = mu(endo_of(AutExpr::left(3, 2, 1, p)));
  Report report;
  report.command = "sanov";
  report.args = {{"p", p}, {"max_length", max_length}};
  report.add("mu(L12^p) = [[1,0],[p,1]]", "mu of Nielsen powers", m1 == IntMatrix::lower(p), {{"mu", rows(m1)}});
  report.add("mu(L21^p) = [[1,p],[0,1]]", "mu of Nielsen powers", m2 == IntMatrix::upper(p), {{"mu", rows(m2)}});
  auto search = search_short_relation(m1, m2, max_length);
  json w{{"words_checked", search.words_checked}};
  if (search.relation) w["relation"] = format(*search.relation);
  report.add("no relation of length <= " + std::to_string(max_length), "the image of <L12^p, L21^p> is free",
             search.none_found, w);
  return report;
}

GeometryResult cmd_voronoi(std::vector<Vec3> const& gens) {
  Report report;
  report.command = "voronoi";
  json g = json::array();
  for (auto const& v : gens) g.push_back(vjson(v));
  report.args = {{"gens", g}};

  Lattice lat = lattice_from(gens);
  json basis = json::array();
  for (auto const& b : lat.basis()) basis.push_back(vjson(b));
  report.add("rank 3", "lattice from generators", lat.rank() == 3, {{"rank", lat.rank()}, {"basis", basis}});
  if (lat.rank() != 3) {
    throw PreconditionError("generators span a lattice of rank " + std::to_string(lat.rank()) + ", need 3");
  }

  VoronoiDiagnostics diag;
  Polytope cell = voronoi_cell(lat, &diag);
  auto f = cell.f_vector();
  report.add("vertices are closest to the origin", "Voronoi cell", diag.vertices_verified,
             {{"coefficient_bound", diag.coefficient_bound},
              {"candidates", diag.candidate_count},
              {"relevant_vectors", diag.relevant_count}});
  report.add("volume = covolume", "the cell tiles", cell.volume() == lat.covolume(),
             {{"volume", to_string(cell.volume())}, {"covolume", to_string(lat.covolume())}});
  report.add("V - E + F = 2", "Voronoi cell", cell.euler_characteristic() == 2, {{"f_vector", f}});

  auto c = classify(cell);
  json faces = json::array();
  for (auto const& face : c.faces) {
    json fj{{"vertices", face.vertex_count}, {"rhombus", face.is_rhombus}};
    if (face.edge_sq) fj["edge_sq"] = to_string(*face.edge_sq);
    if (face.diagonal_ratio_sq) fj["diagonal_ratio_sq"] = to_string(*face.diagonal_ratio_sq);
    faces.push_back(fj);
  }
  report.add("classification", "Voronoi cell", true,
             {{"f_vector", c.f_vector},
              {"is_rhombic_dodecahedron", c.is_rhombic_dodecahedron},
              {"is_cube", c.is_cube},
              {"faces", faces}});
  return {std::move(report), std::move(cell)};
}

Report cmd_check_octo(Vec3 const& u1, Vec3 const& u2, Vec3 const& v1, Vec3 const& v2) {
  Report report;
  report.command = "check-octo";
  report.args = {{"u1", vjson(u1)}, {"u2", vjson(u2)}, {"v1", vjson(v1)}, {"v2", vjson(v2)}};
  auto r = octo_check(u1, u2, v1, v2);
  json norms{{"u1", to_string(norm_sq(u1))}, {"u2", to_string(norm_sq(u2))}, {"v1", to_string(norm_sq(v1))},
             {"v2", to_string(norm_sq(v2))}};
  report.add("common nonzero norm", "octahedral quadruple", r.common_norm_sq.has_value(), {{"norm_sq", norms}});
  report.add("u1 + u2 = v1 + v2", "octahedral quadruple", r.sums_agree,
             {{"u1+u2", vjson(u1 + u2)}, {"v1+v2", vjson(v1 + v2)}});
  report.add("u1 . u2 = 0 and v1 . v2 = 0", "octahedral quadruple", r.orthogonal_pairs,
             {{"u1.u2", to_string(dot(u1, u2))}, {"v1.v2", to_string(dot(v1, v2))}});
  report.add("(u1 - u2) . (v1 - v2) = 0", "octahedral quadruple", r.differences_orthogonal,
             {{"dot", to_string(dot(u1 - u2, v1 - v2))}});
  if (r.pass()) {
    auto lat = lattice_from({u1, u2, v1, v2});
    report.add("rank 3", "such quadruples never lie in a plane", lat.rank() == 3, {{"rank", lat.rank()}});
    if (lat.rank() == 3) {
      auto c = classify(voronoi_cell(lat));
      report.add("Voronoi cell is a rhombic dodecahedron", "octahedral quadruple", c.is_rhombic_dodecahedron,
                 {{"f_vector", c.f_vector}});
    }
  }
  return report;
}

GeometryResult cmd_nielsen_flat(long scale) {
  auto r = nielsen_flat(scale);
  Report report;
  report.command = "nielsen-flat";
  report.args = {{"scale", scale}};
  json vectors = json::object();
  for (std::size_t i = 0; i < 4; ++i) vectors[r.labels[i]] = qjson(r.action.vectors()[i]);
  report.add("L21^-1 R21 L31^-1 R31 acts trivially", "ad(a1) is elliptic", r.kernel_is_zero,
             {{"exponents", r.kernel_vector}, {"translation", qjson(r.action.translation(r.kernel_vector))},
              {"vectors", vectors}});
  report.add("equal translation lengths", "the generators are conjugate", r.equal_lengths,
             {{"length_sq", to_string(r.length_sq)}});
  report.add("octahedral conditions", "quadruple (alpha1, alpha2, beta1^-1, beta2^-1)", r.octo.pass(),
             {{"u1", vjson(r.octo.u1)}, {"u2", vjson(r.octo.u2)}, {"v1", vjson(r.octo.v1)}, {"v2", vjson(r.octo.v2)},
              {"common_norm_sq", r.octo.common_norm_sq ? to_string(*r.octo.common_norm_sq) : "none"}});
  report.add("effective lattice has rank 3", "invariant 3-flat", r.lattice.rank() == 3,
             {{"covolume", to_string(r.lattice.covolume())}});
  report.add("Dirichlet domain is a rhombic dodecahedron", "invariant 3-flat",
             r.classification.is_rhombic_dodecahedron,
             {{"f_vector", r.classification.f_vector}, {"volume", to_string(r.cell.volume())}});
  return {std::move(report), std::move(r.cell)};
}

Report cmd_lemma_pq(QVector const& tau, long p, long q) {
  Report report;
  report.command = "lemma-pq";
  report.args = {{"tau", qjson(tau)}, {"p", p}, {"q", q}};
  if (tau.empty()) {
    throw PreconditionError("tau must have at least one coordinate");
  }
  auto c = equidistant_forces_zero(tau, p, q);
  report.add("certificate validates", "equidistant translates force a = 0", validate(c),
             {{"first", {{"tau.a", c.first.dot_coefficient.get_str()}, {"|a|^2", c.first.norm_coefficient.get_str()}}},
              {"second", {{"tau.a", c.second.dot_coefficient.get_str()}, {"|a|^2", c.second.norm_coefficient.get_str()}}},
              {"multipliers", {c.multiplier_first.get_str(), c.multiplier_second.get_str()}},
              {"eliminant", c.eliminant.get_str()},
              {"conclusion", c.conclusion}});

  // Grid over [-2,2]^k in steps of 1/2 (coarser in high dimension).
  std::size_t k = tau.size();
  int half_range = k <= 3 ? 4 : 2;
  std::vector<int> idx(k, -half_range);
  std::size_t checked = 0;
  json nonzero = json::array();
  for (;;) {
    QVector a;
    for (int i : idx) {
      Rational x(i, 2);
      x.canonicalize();
      a.push_back(x);
    }
    ++checked;
    if (check_equidistant(tau, p, q, a).both() && !is_zero(a) && nonzero.size() < 5) nonzero.push_back(qjson(a));
    std::size_t i = 0;
    while (i < k && ++idx[i] > half_range) idx[i++] = -half_range;
    if (i == k) break;
  }
  report.add("grid search finds only a = 0", "equidistant translates force a = 0", nonzero.empty(),
             {{"points_checked", checked}, {"nonzero_solutions", nonzero}});
  return report;
}

Report cmd_induce(std::size_t d, Rational const& ell) {
  if (d < 1) {
    throw PreconditionError("index d must be positive");
  }
  if (ell == 0) {
    throw PreconditionError("ell must be nonzero so that the base element is hyperbolic");
  }
  Report report;
  report.command = "induce";
  report.args = {{"d", d}, {"ell", to_string(ell)}};
  auto base = AffineIsometry::translation_by({ell});
  auto g = induce(induce_cyclic(d, base));
  auto len = trans_length_sq(g);
  Rational expected = ell * ell / static_cast<long>(d);
  report.add("trans_length_sq = ell^2 / d", "induction promotes hyperbolicity", len.length_sq == expected,
             {{"length_sq", to_string(len.length_sq)},
              {"expected", to_string(expected)},
              {"axis_translation", qjson(len.axis_translation)},
              {"witness", qjson(len.witness)}});
  report.add("induced element is hyperbolic", "induction promotes hyperbolicity", len.length_sq > 0);

  auto gd = g.pow(static_cast<long>(d));
  QVector diagonal(d, ell);
  bool diag = gd == AffineIsometry(1, AffineIsometry::identity(d, 1).perm(), std::vector<int>(d, 1), diagonal);
  report.add("g^d is the diagonal translation", "induction promotes hyperbolicity", diag,
             {{"translation", qjson(gd.translation())},
              {"length_sq", to_string(trans_length_sq(gd).length_sq)}});
  auto block = block_action(gd, 0);
  report.add("g^d acts on the first factor as the base element", "coordinate of the induced action",
             block.has_value() && *block == base);
  return report;
}

QVector parse_qvector(std::string const& text) {
  QVector out;
  std::size_t start = 0;
  for (;;) {
    auto comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      out.push_back(parse_rational(piece));
    } catch (ParseError const& e) {
      throw ParseError("bad coordinate '" + piece + "'", start + e.position());
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace autfn
