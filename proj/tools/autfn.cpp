// Command-line front end. Every subcommand prints a JSON report (or a table
// with --pretty) and exits with
//   0  all checks pass
//   1  some check fails
//   2  usage or parse error
//   3  precondition violation
//   4  output file could not be written

#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "autfn/commands.hpp"
#include "autfn/error.hpp"

using namespace autfn;

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kPrecondition = 3, kIo = 4 };

struct Output {
  bool pretty = false;
  std::string off_path;
  int precision = 12;
};

int emit(Report const& report, Output const& out) {
  if (out.pretty) {
    std::cout << report.pretty();
  } else {
    std::cout << report.to_json().dump(2) << '\n';
  }
  return report.pass() ? kPass : kFail;
}

int emit_error(Output const& out, std::string const& command, std::string const& kind, std::string const& message,
               std::optional<std::size_t> position, int code) {
  nlohmann::json j{{"command", command}, {"pass", false}, {"error", {{"kind", kind}, {"message", message}}}};
  if (position) j["error"]["position"] = *position;
  if (!out.pretty) std::cout << j.dump(2) << '\n';
  std::cerr << "autfn " << command << ": " << message << '\n';
  return code;
}

void write_cell(GeometryResult& result, Output const& out) {
  if (out.off_path.empty()) return;
  std::ofstream off(out.off_path);
  write_off(off, result.cell, out.precision);
  std::string sidecar_path = out.off_path + ".json";
  std::ofstream sidecar(sidecar_path);
  sidecar << to_sidecar_json(result.cell).dump(2) << '\n';
  if (!off || !sidecar) {
    throw std::ios_base::failure("cannot write " + out.off_path);
  }
  result.report.args["out"] = out.off_path;
  result.report.args["sidecar"] = sidecar_path;
}

std::vector<Vec3> parse_gens(std::string const& text) {
  std::vector<Vec3> gens;
  std::size_t start = 0;
  for (;;) {
    auto semi = text.find(';', start);
    auto piece = text.substr(start, semi == std::string::npos ? std::string::npos : semi - start);
    try {
      gens.push_back(parse_vec3(piece));
    } catch (ParseError const& e) {
      throw ParseError(e.message(), start + e.position());
    }
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  return gens;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checks for Nielsen automorphisms of free groups and their flat models"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  app.add_flag("--pretty", out.pretty, "Print a table instead of JSON");
  app.add_flag("--json", "JSON output (default)");

  std::function<int()> run;
  std::string command;

  auto* verify = app.add_subcommand("verify-relations", "Identity suite for the Nielsen moves in Aut(F_3)");
  std::string mode = "aut";
  bool inject = false;
  verify->add_option("--mode", mode, "aut or out")->check(CLI::IsMember({"aut", "out"}));
  verify->add_flag("--inject-fault", inject)->group("");
  verify->callback([&] {
    run = [&] {
      std::vector<RelationResult> extra;
      if (inject) {
        extra.push_back(check_relation("L21 = R21", AutExpr::left(3, 2, 1), AutExpr::right(3, 2, 1)));
      }
      return emit(cmd_verify_relations(mode == "out" ? RelationMode::Out : RelationMode::Aut, extra), out);
    };
  });

  auto* gpq = app.add_subcommand("gpq", "Relations of G_{p,q} under the Aut(F_{n+1}) embedding");
  int n = 4;
  long p = 1, q = 2;
  std::string w = "a1";
  gpq->add_option("--n", n, "n >= 3")->capture_default_str();
  gpq->add_option("--p", p)->capture_default_str();
  gpq->add_option("--q", q)->capture_default_str();
  gpq->add_option("--w", w, "word in a1..a(n-2)")->capture_default_str();
  gpq->callback([&] { run = [&] { return emit(cmd_gpq(n, p, q, w), out); }; });

  auto* inner = app.add_subcommand("inner-gpq", "Relations of G_{p,q} realized by inner automorphisms of F_3");
  inner->add_option("--p", p)->capture_default_str();
  inner->add_option("--q", q)->capture_default_str();
  inner->callback([&] { run = [&] { return emit(cmd_inner_gpq(p, q), out); }; });

  auto* glrep = app.add_subcommand("gl-rep", "Action on the double cover: ab5 and mu");
  std::string aut;
  long power = 1;
  glrep->add_option("--aut", aut, "automorphism of F_3, e.g. \"L12 R21^-1\"")->required();
  glrep->add_option("--power", power)->capture_default_str();
  glrep->callback([&] { run = [&] { return emit(cmd_glrep(aut, power), out); }; });

  auto* lk = app.add_subcommand("lk-basis", "Free basis of the index k-1 subgroup of F_2");
  int k = 3;
  lk->add_option("--k", k)->capture_default_str();
  lk->callback([&] { run = [&] { return emit(cmd_lk_basis(k), out); }; });

  auto* sanov = app.add_subcommand("sanov", "Search for short relations between mu(L12^p) and mu(L21^p)");
  long sp = 2;
  int length = 8;
  sanov->add_option("--p", sp)->capture_default_str();
  sanov->add_option("--length", length, "maximal word length")->capture_default_str();
  sanov->callback([&] { run = [&] { return emit(cmd_sanov(sp, length), out); }; });

  auto* voronoi = app.add_subcommand("voronoi", "Voronoi cell of the lattice spanned by rational vectors");
  std::string gens;
  voronoi->add_option("--gens", gens, "generators \"x,y,z;x,y,z;...\"")->required();
  voronoi->add_option("--out", out.off_path, "write the cell as OFF (plus OUT.json)");
  voronoi->add_option("--precision", out.precision, "decimal digits in the OFF file")->capture_default_str();
  voronoi->callback([&] {
    run = [&] {
      auto result = cmd_voronoi(parse_gens(gens));
      write_cell(result, out);
      return emit(result.report, out);
    };
  });

  auto* octo = app.add_subcommand("check-octo", "Conditions on u1, u2, v1, v2 for a rhombic dodecahedral cell");
  std::string u1, u2, v1, v2;
  octo->add_option("--u1", u1)->required();
  octo->add_option("--u2", u2)->required();
  octo->add_option("--v1", v1)->required();
  octo->add_option("--v2", v2)->required();
  octo->callback([&] {
    run = [&] {
      return emit(cmd_check_octo(parse_vec3(u1), parse_vec3(u2), parse_vec3(v1), parse_vec3(v2)), out);
    };
  });

  auto* flat = app.add_subcommand("nielsen-flat", "Translation model of <L21, R21, L31, R31> on E^3");
  long scale = 1;
  flat->add_option("--scale", scale)->capture_default_str();
  flat->add_option("--out", out.off_path, "write the Dirichlet domain as OFF (plus OUT.json)");
  flat->add_option("--precision", out.precision)->capture_default_str();
  flat->callback([&] {
    run = [&] {
      auto result = cmd_nielsen_flat(scale);
      write_cell(result, out);
      return emit(result.report, out);
    };
  });

  auto* lemma = app.add_subcommand("lemma-pq", "Certificate that |tau+pa| = |tau+qa| = |tau| forces a = 0");
  std::string tau = "1,0";
  long lp = 1, lq = 2;
  lemma->add_option("--tau", tau)->capture_default_str();
  lemma->add_option("--p", lp)->capture_default_str();
  lemma->add_option("--q", lq)->capture_default_str();
  lemma->callback([&] { run = [&] { return emit(cmd_lemma_pq(parse_qvector(tau), lp, lq), out); }; });

  auto* ind = app.add_subcommand("induce", "Induce a translation of E^1 from dZ up to Z");
  std::size_t d = 3;
  std::string ell = "1";
  ind->add_option("--d", d)->capture_default_str();
  ind->add_option("--ell", ell, "rational translation length")->capture_default_str();
  ind->callback([&] { run = [&] { return emit(cmd_induce(d, parse_rational(ell)), out); }; });

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }
  for (auto* sub : app.get_subcommands()) command = sub->get_name();

  try {
    return run();
  } catch (ParseError const& e) {
    return emit_error(out, command, "parse", e.message(), e.position(), kUsage);
  } catch (PreconditionError const& e) {
    return emit_error(out, command, "precondition", e.what(), std::nullopt, kPrecondition);
  } catch (std::ios_base::failure const& e) {
    return emit_error(out, command, "io", e.what(), std::nullopt, kIo);
  }
}
