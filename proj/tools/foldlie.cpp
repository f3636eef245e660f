#include <unistd.h>

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>

#include "foldlie/cameral.hpp"
#include "foldlie/hitchin.hpp"
#include "foldlie/liealg.hpp"
#include "foldlie/rootsys.hpp"
#include "foldlie/slodowy.hpp"
#include "foldlie/unfolding.hpp"
#include "foldlie/verify.hpp"
#include "foldlie/weyl.hpp"

using namespace foldlie;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format;
  std::string out;
  unsigned long seed = 42;
};

DynkinType parse_type(const std::string& s) {
  try {
    return DynkinType::parse(s);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

FoldingDatum make_datum(const std::string& type, int order) {
  try {
    return FoldingDatum::make(parse_type(type), order);
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

void print_text(std::ostream& os, const json& j, const std::string& indent = "") {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = j.is_object() ? it.key() : "-";
    if (it->is_object() || (it->is_array() && !it->empty() && (it->front().is_object() || it->front().is_array()))) {
      os << indent << key << ":\n";
      print_text(os, *it, indent + "  ");
    } else {
      os << indent << key << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
    }
  }
}

void emit(const json& j, const Options& opt) {
  const bool text = opt.format == "text" || (opt.format.empty() && isatty(STDOUT_FILENO));
  if (text) {
    print_text(std::cout, j);
  } else {
    std::cout << j.dump(2) << "\n";
  }
  if (!opt.out.empty()) {
    std::ofstream f(opt.out);
    if (!f) throw UsageError("cannot write " + opt.out);
    f << j.dump(2) << "\n";
  }
}

json to_json(const RatVector& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i).str());
  return a;
}

json to_json(const RatMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) rows.push_back(to_json(RatVector(m.row(i).transpose())));
  return rows;
}

json to_json(const RootSystem& rs) {
  json simple = json::array(), all = json::array();
  for (const auto& r : rs.simple_roots) simple.push_back(to_json(r));
  for (const auto& r : rs.all_roots) all.push_back(to_json(r));
  return {{"type", rs.type.str()}, {"gram", to_json(rs.gram)}, {"simple_roots", simple}, {"all_roots", all}};
}

json poly_list(const std::vector<MultiPoly>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(p.str());
  return a;
}

json cmd_fold(const std::string& type, int order) {
  const FoldingDatum fd = make_datum(type, order);
  const RootSystem co = fold_coinvariants(fd);
  const RootSystem inv = fold_invariants(fd);
  const auto [character, cocharacter] = folded_lattices(fd);
  json j;
  j["homogeneous"] = fd.homogeneous.type.str();
  j["order"] = order;
  j["orbits"] = fd.simple_orbits();
  j["coinvariants"] = co.type.str();
  j["invariants"] = inv.type.str();
  j["weyl_order_homogeneous"] = fd.homogeneous.type.weyl_order();
  j["weyl_order_folded"] = co.type.weyl_order();
  j["character_rank"] = character.rank;
  j["cocharacter_rank"] = cocharacter.rank;
  j["duality_ok"] = check_folding_duality(fd).ok;
  j["coinvariant_roots"] = to_json(co);
  j["invariant_roots"] = to_json(inv);
  return j;
}

json cmd_weyl(const std::string& type, int order) {
  const FoldingDatum fd = make_datum(type, order);
  const WeylGroup wh = generate_weyl(fd.homogeneous);
  json j;
  j["type"] = fd.homogeneous.type.str();
  j["order"] = wh.order();
  j["reflections"] = wh.reflections().size();
  if (order > 1) {
    const FoldedWeyl fw = commutant_fixed_subgroup(wh, fd);
    j["fold_order"] = order;
    j["fixed_order"] = fw.fixed.order();
    j["folded_type"] = fw.folded.root.type.str();
    j["folded_order"] = fw.folded.order();
    j["isomorphism_verified"] = fw.isomorphism_verified;
  }
  return j;
}

json cmd_liealg(const std::string& family, int n, const std::string& type, int order) {
  Family f;
  try {
    f = parse_family(family);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  const ChevalleyData cd = build_chevalley(f, n);
  json j;
  j["algebra"] = cd.algebra.name;
  j["dimension"] = cd.algebra.dimension();
  j["root_system"] = cd.roots.type.str();
  j["degrees"] = quotient_degrees(f, n);
  j["roots"] = to_json(cd.roots);
  json constants = json::array();
  const int nroots = static_cast<int>(cd.roots.all_roots.size());
  for (int a = 0; a < nroots; ++a)
    for (int b = 0; b < nroots; ++b) {
      const Rat c = cd.structure_constant(a, b);
      if (!c.is_zero()) constants.push_back({a, b, c.str()});
    }
  j["structure_constants"] = constants;
  if (!type.empty()) {
    const GraphAut aut = order == 1 ? GraphAut::identity(cd.roots.rank()) : GraphAut::standard(parse_type(type), order);
    const LieAut lifted = lift_graph_aut(cd, aut);
    j["automorphism"] = {{"order", lifted.order}, {"matrix", to_json(lifted.matrix)}};
    const MatrixLieAlgebra fixed = fixed_subalgebra(cd, lifted);
    const RootDecomposition dec = root_decomposition(cd, fixed);
    j["fixed_dimension"] = fixed.dimension();
    j["fixed_cartan_dimension"] = dec.cartan_dim;
    j["fixed_root_space_dims"] = dec.root_space_dims;
    j["fixed_type"] = dec.type ? dec.type->str() : "unidentified";
  }
  return j;
}

json cmd_slice(const std::string& which, const std::string& eval) {
  SlodowySlice s;
  if (which == "sp4") {
    s = sp4_slice();
  } else if (which == "sl4") {
    s = sl4_appendix_slice();
  } else {
    throw UsageError("slice: expected sp4 or sl4, got " + which);
  }
  const Report r = check_slice(s);
  json j;
  j["name"] = s.name;
  j["parameters"] = s.param_names;
  j["cstar_weights"] = s.cstar_weights;
  j["quotient"] = poly_list(slice_quotient_symbolic(s));
  j["checks"] = r.cases_run;
  j["ok"] = r.ok();
  json basis = json::array();
  for (const auto& d : s.directions) basis.push_back(to_json(d));
  j["base_point"] = to_json(s.triple.x);
  j["directions"] = basis;
  if (!eval.empty()) {
    std::vector<Rat> p;
    std::stringstream ss(eval);
    for (std::string item; std::getline(ss, item, ',');) {
      try {
        p.push_back(Rat::parse(item));
      } catch (const std::exception&) {
        throw UsageError("--eval: cannot parse '" + item + "'");
      }
    }
    if (static_cast<int>(p.size()) != s.dimension())
      throw UsageError("--eval expects " + std::to_string(s.dimension()) + " values");
    json q = json::array();
    for (const Rat& v : slice_quotient(s, p)) q.push_back(v.str());
    j["point"] = to_json(s.point(p));
    j["quotient_at_point"] = q;
  }
  return j;
}

json cmd_deform(const std::string& type, bool fold, int order) {
  const DynkinType t = parse_type(type);
  QuasiHomogSing s;
  GroupAction a;
  try {
    s = singularity(t);
    a = fold ? standard_action(t, order) : trivial_action();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const DeformationFamily fam = semiuniversal_family(s, a);
  json j;
  j["singularity"] = s.poly.str();
  j["weights"] = s.weights;
  j["degree"] = s.degree;
  j["action"] = a.name;
  j["basis"] = poly_list(fam.basis);
  j["parameters"] = fam.b_names;
  j["family"] = fam.poly.str();
  j["invariant_parameters"] = fam.invariant_names;
  j["invariant_family"] = fam.invariant_poly.str();
  return j;
}

json cmd_threefold(const std::string& type, int genus) {
  if (genus < 2) throw UsageError("genus must be at least 2");
  const ThreefoldFamily tf = threefold_family(parse_type(type));
  json j;
  j["folded"] = tf.name;
  j["family"] = tf.deformation.invariant_poly.str();
  j["coordinate_twists"] = tf.coordinate_twists;
  j["base_twists"] = tf.base_twists;
  try {
    const FixedLocus fl = fixed_locus(tf);
    j["fixed_locus"] = fl.equation.str();
    j["fixed_locus_genus"] = fixed_locus_genus(tf, genus);
  } catch (const std::invalid_argument&) {
    j["fixed_locus"] = nullptr;
  }
  return j;
}

json cmd_cameral(const std::string& type, int order, int genus, int branches, unsigned long seed) {
  if (genus < 0) throw UsageError("genus must be non-negative");
  const FoldingContext ctx = make_folding_context(parse_type(type), order);
  Rng rng(seed);
  const CoverMonodromy cm = random_transversal_monodromy(ctx.folded, genus, branches, rng);
  const CoverMonodromy ind = induce_cover(cm, ctx);
  const CoverGeometry g0 = cover_geometry(cm);
  const CoverGeometry g1 = cover_geometry(ind);
  const Report check = check_induced_cover(cm, ind, ctx);
  json j;
  j["homogeneous"] = ctx.datum.homogeneous.type.str();
  j["folded_order"] = ctx.folded->order();
  j["index"] = ctx.index();
  j["base_genus"] = genus;
  j["branch_points"] = branches;
  j["original"] = {{"components", g0.component_count}, {"genera", g0.component_genera}, {"ramification", g0.ramification}};
  j["induced"] = {{"components", g1.component_count}, {"genera", g1.component_genera}, {"ramification", g1.ramification}};
  j["induced_check_ok"] = check.ok();
  return j;
}

json cmd_dims(const std::string& type, int genus, const std::string& fold_from, bool isogeny) {
  if (genus < 2) throw UsageError("genus must be at least 2");
  const DynkinType t = parse_type(type);
  const HitchinBase b = dim_base(t, genus);
  json j;
  j["type"] = t.str();
  j["genus"] = genus;
  j["degrees"] = b.degrees;
  j["summands"] = b.summand_dims;
  j["total"] = b.total();
  j["fiber_dim"] = fiber_dim(t, genus);
  if (!fold_from.empty()) {
    std::optional<FoldingDatum> fd;
    for (int order : {1, 2, 3}) {
      try {
        FoldingDatum cand = FoldingDatum::make(parse_type(fold_from), order);
        if (fold_coinvariants(cand).type == t) {
          fd = cand;
          break;
        }
      } catch (const std::invalid_argument&) {
      }
    }
    if (!fd) throw UsageError("no folding of " + fold_from + " gives " + t.str());
    const BaseMatch m = folded_base_match(*fd, genus);
    j["fold"] = {{"from", fold_from},          {"order", fd->aut.order},
                 {"homogeneous_total", m.homogeneous_total}, {"surviving_degrees", m.surviving_degrees},
                 {"invariant_total", m.invariant_total},     {"match", m.ok()},
                 {"table_derived", m.table_derived}};
    if (isogeny) {
      const IsogenyDims d = isogeny_dimensions(*fd, genus);
      j["isogeny"] = {{"dim_B", d.dim_B},
                      {"genus_fixed_locus", d.genus_fixed_locus},
                      {"aut_order", d.aut_order},
                      {"dim_J2Z", d.dim_J2Z},
                      {"b3", d.b3}};
    }
  } else if (isogeny) {
    throw UsageError("--isogeny needs --fold-from");
  }
  return j;
}

json cmd_verify(const std::string& suite, int samples, unsigned long seed, bool* ok) {
  SuiteResult r;
  try {
    r = run_suite(suite, samples, seed);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  json j;
  j["suite"] = r.suite;
  j["seed"] = r.seed;
  j["samples"] = r.samples;
  j["cases_run"] = r.cases_run();
  json checks = json::array();
  for (const auto& rep : r.reports)
    checks.push_back({{"check", rep.check}, {"cases", rep.cases_run}, {"failures", rep.failures.size()}});
  j["checks"] = checks;
  json failures = json::array();
  for (const auto& f : r.failures())
    failures.push_back({{"operation", f.operation}, {"input", f.input}, {"expected", f.expected}, {"got", f.got}});
  j["failures"] = failures;
  *ok = r.ok();
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Folding of Lie algebras, slices, cameral covers and Hitchin dimensions"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "json or text (default: text on a terminal)")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", opt.out, "also write the JSON report here");

  std::string type = "A3", family = "sl", fold_from, suite, which = "sp4";
  int order = 2, genus = 2, n = 4, samples = 20, branches = -1;
  bool isogeny = false;

  auto* fold = app.add_subcommand("fold", "folded root systems");
  fold->add_option("type", type)->required();
  fold->add_option("order", order)->required();

  auto* weyl = app.add_subcommand("weyl", "Weyl group and its fixed subgroup");
  weyl->add_option("--type", type);
  weyl->add_option("--order", order, "automorphism order (1 for none)");

  auto* liealg = app.add_subcommand("liealg", "matrix Lie algebras");
  auto* dump = liealg->add_subcommand("dump", "algebra and fixed subalgebra");
  liealg->require_subcommand(1);
  dump->add_option("--family", family, "sl, sp or so");
  dump->add_option("--n", n, "matrix size");
  dump->add_option("--fold", fold_from, "homogeneous type of the automorphism");
  dump->add_option("--order", order);

  std::string eval;
  auto* slice = app.add_subcommand("slice", "subregular Slodowy slices");
  slice->add_option("--algebra", which, "sp4 or sl4");
  slice->add_option("--eval", eval, "comma-separated slice parameters");
  auto* appendix = slice->add_subcommand("verify-appendix", "the sl4 to sp4 slice comparison");
  appendix->add_option("--samples", samples);
  appendix->add_option("--seed", opt.seed);

  auto* deform = app.add_subcommand("deform", "semi-universal deformation with group action");
  bool fold_flag = false;
  deform->add_option("--type", type);
  deform->add_flag("--fold", fold_flag, "apply the standard graph automorphism");
  deform->add_option("--order", order, "automorphism order with --fold");

  auto* threefold = app.add_subcommand("threefold", "threefold family and fixed locus");
  threefold->add_option("--type", type, "folded type");
  threefold->add_option("--genus", genus);

  auto* cameral = app.add_subcommand("cameral", "cameral covers");
  auto* induce = cameral->add_subcommand("induce", "random transversal cover and its induction");
  cameral->require_subcommand(1);
  induce->add_option("--type", type);
  induce->add_option("--order", order);
  induce->add_option("--genus", genus);
  induce->add_option("--branches", branches, "branch points (default: the discriminant count)");
  induce->add_option("--seed", opt.seed);

  auto* dims = app.add_subcommand("dims", "Hitchin base and isogeny dimensions");
  dims->add_option("--type", type);
  dims->add_option("--genus", genus);
  dims->add_option("--fold-from", fold_from);
  dims->add_flag("--isogeny", isogeny);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite)->required();
  verify->add_option("--samples", samples);
  verify->add_option("--seed", opt.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    bool ok = true;
    json j;
    if (*fold) {
      j = cmd_fold(type, order);
    } else if (*weyl) {
      j = cmd_weyl(type, order);
    } else if (*dump) {
      j = cmd_liealg(family, n, fold_from, order);
    } else if (*appendix) {
      j = cmd_verify("appendix", samples, opt.seed, &ok);
    } else if (*slice) {
      j = cmd_slice(which, eval);
    } else if (*deform) {
      j = cmd_deform(type, fold_flag, order);
    } else if (*threefold) {
      j = cmd_threefold(type, genus);
    } else if (*induce) {
      DynkinType h = parse_type(type);
      const FoldingDatum fd = make_datum(type, order);
      const int b = branches >= 0 ? branches : transversal_branch_count(fold_coinvariants(fd).type, std::max(genus, 2));
      j = cmd_cameral(h.str(), order, genus, b, opt.seed);
    } else if (*dims) {
      j = cmd_dims(type, genus, fold_from, isogeny);
    } else if (*verify) {
      j = cmd_verify(suite, samples, opt.seed, &ok);
    }
    emit(j, opt);
    return ok ? 0 : 1;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
