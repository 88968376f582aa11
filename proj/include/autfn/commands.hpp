#pragma once

// One function per CLI subcommand. Each returns a Report; commands that
// build a polytope also return it for file export. Parse and precondition
// errors propagate as ParseError / PreconditionError.

#include <optional>
#include <string>
#include <vector>

#include "autfn/aut.hpp"
#include "autfn/lattice.hpp"
#include "autfn/polytope.hpp"
#include "autfn/rational.hpp"
#include "autfn/report.hpp"

namespace autfn {

struct GeometryResult {
  Report report;
  Polytope cell;
};

// `extra` is appended to the suite unchanged; tests use it to inject a
// false relation.
Report cmd_verify_relations(RelationMode mode, std::vector<RelationResult> const& extra = {});
Report cmd_gpq(int n, long p, long q, std::string const& w_text);
Report cmd_inner_gpq(long p, long q);
Report cmd_glrep(std::string const& aut_text, long power);
Report cmd_lk_basis(int k);
Report cmd_sanov(long p, int max_length);
GeometryResult cmd_voronoi(std::vector<Vec3> const& gens);
Report cmd_check_octo(Vec3 const& u1, Vec3 const& u2, Vec3 const& v1, Vec3 const& v2);
GeometryResult cmd_nielsen_flat(long scale);
Report cmd_lemma_pq(QVector const& tau, long p, long q);
Report cmd_induce(std::size_t d, Rational const& ell);

QVector parse_qvector(std::string const& text);

}  // namespace autfn
