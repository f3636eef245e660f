#include "foldlie/verify.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <tuple>

#include "foldlie/cameral.hpp"
#include "foldlie/hitchin.hpp"
#include "foldlie/liealg.hpp"
#include "foldlie/rootsys.hpp"
#include "foldlie/sampling.hpp"
#include "foldlie/slodowy.hpp"
#include "foldlie/unfolding.hpp"
#include "foldlie/weyl.hpp"

namespace foldlie {

namespace {

DynkinType T(const char* s) { return DynkinType::parse(s); }

std::string str(int v) { return std::to_string(v); }

// Runs body into a fresh report; an exception becomes a failure.
Report guarded(const std::string& check, const std::function<void(Report&)>& body) {
  Report rep;
  rep.check = check;
  try {
    body(rep);
  } catch (const std::exception& e) {
    rep.expect(false, check, "exception", "no exception", e.what());
  }
  return rep;
}

Report relabel(Report r, const std::string& check) {
  r.check = check;
  return r;
}

struct FoldRow {
  const char* homogeneous;
  int order;
  const char* coinvariants;
  const char* invariants;
};

const std::vector<FoldRow>& fold_rows() {
  static const std::vector<FoldRow> rows = {
      {"A3", 2, "C2", "B2"}, {"A5", 2, "C3", "B3"}, {"A7", 2, "C4", "B4"}, {"D4", 2, "B3", "C3"},
      {"D5", 2, "B4", "C4"}, {"D4", 3, "G2", "G2"}, {"E6", 2, "F4", "F4"},
  };
  return rows;
}

void rootsys_suite(SuiteResult& out) {
  for (const auto& row : fold_rows()) {
    const std::string input = std::string(row.homogeneous) + "/" + str(row.order);
    out.reports.push_back(guarded("fold:" + input, [&](Report& rep) {
      const FoldingDatum fd = FoldingDatum::make(T(row.homogeneous), row.order);
      const RootSystem co = fold_coinvariants(fd);
      const RootSystem inv = fold_invariants(fd);
      rep.expect(co.type == T(row.coinvariants), "fold_coinvariants", input, row.coinvariants, co.type.str());
      rep.expect(inv.type == T(row.invariants), "fold_invariants", input, row.invariants, inv.type.str());
      rep.expect(static_cast<int>(co.all_roots.size()) == co.type.root_count(), "root_count", input,
                 str(co.type.root_count()), str(static_cast<int>(co.all_roots.size())));
      const DualityReport d = check_folding_duality(fd);
      rep.expect(d.ok, "check_folding_duality", input);
    }));
  }
  out.reports.push_back(guarded("dynkin_condition", [](Report& rep) {
    rep.expect(!GraphAut::standard(T("A4"), 2).is_dynkin_graph_aut(build_root_system(T("A4"))), "is_dynkin_graph_aut",
               "A4/2", "false", "true");
  }));
}

void weyl_suite(SuiteResult& out, int samples, unsigned long seed) {
  struct Row {
    const char* t;
    int order;
    std::size_t homogeneous;
    std::size_t folded;
  };
  for (const Row& row : std::vector<Row>{{"A3", 2, 24, 8}, {"A5", 2, 720, 48}, {"D4", 3, 192, 12}, {"D5", 2, 1920, 384}}) {
    const std::string input = std::string(row.t) + "/" + str(row.order);
    out.reports.push_back(guarded("weyl_fold:" + input, [&](Report& rep) {
      const FoldingDatum fd = FoldingDatum::make(T(row.t), row.order);
      const WeylGroup wh = generate_weyl(fd.homogeneous);
      const FoldedWeyl fw = commutant_fixed_subgroup(wh, fd);
      rep.expect(wh.order() == row.homogeneous, "generate_weyl", input, str(static_cast<int>(row.homogeneous)),
                 str(static_cast<int>(wh.order())));
      rep.expect(fw.fixed.order() == row.folded, "commutant_fixed_subgroup", input, str(static_cast<int>(row.folded)),
                 str(static_cast<int>(fw.fixed.order())));
      rep.expect(fw.folded.order() == row.folded, "folded_weyl_order", input, str(static_cast<int>(row.folded)),
                 str(static_cast<int>(fw.folded.order())));
      rep.expect(fw.isomorphism_verified, "restriction_isomorphism", input);
    }));
  }
  for (auto [t, k] : std::vector<std::pair<const char*, int>>{{"A3", 2}, {"D4", 3}})
    out.reports.push_back(relabel(quotient_invariants_iso_check(FoldingDatum::make(T(t), k), samples, seed),
                                  std::string("quotient_iso:") + t + "/" + str(k)));
}

void liealg_suite(SuiteResult& out, int samples, unsigned long seed) {
  struct Row {
    Family f;
    int n;
    const char* t;
    int order;
    int dim;
    const char* folded;
  };
  for (const Row& row : std::vector<Row>{{Family::SL, 4, "A3", 2, 10, "C2"}, {Family::SO, 8, "D4", 3, 14, "G2"}}) {
    const std::string input = std::string(row.t) + "/" + str(row.order);
    out.reports.push_back(guarded("fixed_subalgebra:" + input, [&](Report& rep) {
      const ChevalleyData cd = build_chevalley(row.f, row.n);
      const LieAut aut = lift_graph_aut(cd, GraphAut::standard(T(row.t), row.order));
      rep.expect(preserves_bracket(cd.algebra, aut), "lift_graph_aut", input);
      const MatrixLieAlgebra fixed = fixed_subalgebra(cd, aut);
      rep.expect(fixed.dimension() == row.dim, "fixed_subalgebra", input, str(row.dim), str(fixed.dimension()));
      rep.expect(fixed.closed_under_bracket(), "closed_under_bracket", input);
      const RootDecomposition dec = root_decomposition(cd, fixed);
      const int roots = T(row.folded).root_count();
      rep.expect(dec.cartan_dim == 2, "cartan_dim", input, "2", str(dec.cartan_dim));
      rep.expect(static_cast<int>(dec.roots.size()) == roots, "root_count", input, str(roots),
                 str(static_cast<int>(dec.roots.size())));
      bool one_dim = true;
      for (int d : dec.root_space_dims) one_dim = one_dim && d == 1;
      rep.expect(one_dim && dec.spans, "root_spaces", input);
      rep.expect(dec.type && *dec.type == T(row.folded), "root_decomposition_type", input, row.folded,
                 dec.type ? dec.type->str() : "none");
    }));
  }
  out.reports.push_back(guarded("running_identity", [](Report& rep) {
    const RunningIdentity id = sl4_sp4_identity();
    rep.expect(id.homogeneous[1].is_zero(), "sigma3_restricts_to_zero", "sl4", "0", id.homogeneous[1].str());
    rep.expect(id.folded[0] == id.homogeneous[0], "degree2_identity", "sl4/sp4");
    rep.expect(id.folded[1] == id.homogeneous[2], "degree4_identity", "sl4/sp4");
  }));
  for (auto [t, k] : std::vector<std::pair<const char*, int>>{{"A3", 2}, {"D4", 3}})
    out.reports.push_back(relabel(base_iso_check(FoldingDatum::make(T(t), k), samples, seed),
                                  std::string("base_iso:") + t + "/" + str(k)));
}

void slodowy_suite(SuiteResult& out, int samples, unsigned long seed) {
  out.reports.push_back(relabel(check_slice(sp4_slice()), "check_slice:sp4"));
  out.reports.push_back(relabel(check_slice(sl4_appendix_slice()), "check_slice:sl4"));
  out.reports.push_back(guarded("slice_quotient:sp4", [&](Report& rep) {
    const SlodowySlice s = sp4_slice();
    const PolyRing ring = s.ring();
    const MultiPoly v1m = ring.var("v1m"), v2m = ring.var("v2m"), v1p = ring.var("v1p"), v2p = ring.var("v2p");
    const auto q = slice_quotient_symbolic(s);
    const MultiPoly b2 = Rat(2) * v1m * v1m - Rat(2) * v2p;
    const MultiPoly b4 = pow(v1m, 4) + Rat(2) * v1m * v1m * v2p + v2p * v2p - v2m * v2m - v1p * v1p;
    rep.expect(q.size() == 2 && q[0] == b2, "closed_form_b2", "sp4", b2.str(), q.empty() ? "" : q[0].str());
    rep.expect(q.size() == 2 && q[1] == b4, "closed_form_b4", "sp4", b4.str(), q.size() < 2 ? "" : q[1].str());
    Rng rng(seed);
    for (int k = 0; k < samples; ++k) {
      const auto p = random_point(rng, s.dimension());
      Rat lam = random_rat(rng);
      if (lam.is_zero()) lam = Rat(7, 3);
      const auto lhs = slice_quotient(s, cstar_action(s, lam, p));
      const auto rhs = slice_quotient(s, p);
      rep.expect(lhs[0] == rhs[0] * pow(lam, 4) && lhs[1] == rhs[1] * pow(lam, 8), "cstar_equivariance",
                 "sample " + str(k));
    }
  }));
  out.reports.push_back(guarded("fixed_locus_bound", [](Report& rep) {
    const FiberBound fb = fixed_locus_fiber_bound(sp4_slice());
    rep.expect(fb.finite, "fixed_locus_fiber_bound", "sp4");
  }));
}

void appendix_suite(SuiteResult& out, int samples, unsigned long seed) {
  out.reports.push_back(relabel(verify_appendix(samples, seed), "appendix"));
  out.reports.push_back(guarded("unfolding_normal_form", [](Report& rep) {
    const DeformationFamily fam = semiuniversal_family(singularity(T("A3")), standard_action(T("A3"), 2));
    const SlodowySlice sh = sl4_appendix_slice();
    const auto c = unfolding_coordinates_symbolic(sh.ring());
    const MultiPoly residual = fam.poly.compose(c);
    rep.expect(residual.is_zero(), "unfolding_coordinates", "S_h", "0", residual.str());
  }));
}

void cameral_suite(SuiteResult& out, int samples, unsigned long seed) {
  const FoldingContext ctx = make_folding_context(T("A3"), 2);
  const Lattice full = full_lattice(3);
  const Lattice cochar = folded_lattices(ctx.datum).second;
  out.reports.push_back(guarded("induced_covers", [&](Report& rep) {
    Rng rng(seed);
    for (int k = 0; k < samples; ++k) {
      const int g = 2 + k % 2;
      const CoverMonodromy cm = random_transversal_monodromy(ctx.folded, g, 2 + 2 * (k % 4), rng);
      const CoverMonodromy ind = induce_cover(cm, ctx);
      const int comps = cover_geometry(ind).component_count;
      rep.expect(comps == 3, "induce_cover", "sample " + str(k), "3", str(comps));
      rep.merge(check_induced_cover(cm, ind, ctx));
      rep.merge(pushforward_sections_check(cm, ctx, full));
    }
  }));
  out.reports.push_back(guarded("fiber_rank", [&](Report& rep) {
    Rng rng(seed + 1);
    for (int g = 2; g <= 3; ++g) {
      const CoverMonodromy cm = random_transversal_monodromy(ctx.folded, g, transversal_branch_count(T("C2"), g), rng);
      const int want = 2 * dim_base(T("C2"), g).total();
      const int c2 = hitchin_fiber_rank(cm, full_lattice(2)).rank;
      const int a3 = hitchin_fiber_rank(induce_cover(cm, ctx), cochar).rank;
      rep.expect(c2 == want, "hitchin_fiber_rank", "C2 g=" + str(g), str(want), str(c2));
      rep.expect(a3 == want, "hitchin_fiber_rank", "folded A3 g=" + str(g), str(want), str(a3));
    }
  }));
  out.reports.push_back(guarded("fixed_locus_genus", [](Report& rep) {
    const ThreefoldFamily c2 = threefold_family(T("C2"));
    const ThreefoldFamily g2 = threefold_family(T("G2"));
    for (int g = 2; g <= 5; ++g) {
      const int a = fixed_locus_genus(c2, g), b = fixed_locus_genus(g2, g);
      rep.expect(a == 6 * g - 5, "fixed_locus_genus", "C2 g=" + str(g), str(6 * g - 5), str(a));
      rep.expect(b == 8 * g - 7, "fixed_locus_genus", "G2 g=" + str(g), str(8 * g - 7), str(b));
    }
    rep.expect(exceptional_divisor_components(3) == 2, "exceptional_divisor_components", "order 3");
  }));
}

void dims_suite(SuiteResult& out) {
  out.reports.push_back(guarded("dim_base", [](Report& rep) {
    for (auto [t, want] : std::vector<std::pair<const char*, int>>{{"C2", 10}, {"A3", 15}, {"G2", 14}}) {
      const int got = dim_base(T(t), 2).total();
      rep.expect(got == want, "dim_base", std::string(t) + " g=2", str(want), str(got));
    }
  }));
  out.reports.push_back(guarded("folded_base_match", [](Report& rep) {
    for (auto [t, k] : std::vector<std::pair<const char*, int>>{{"A3", 2}, {"A5", 2}, {"D4", 3}, {"D5", 2}, {"E6", 2}})
      for (int g = 2; g <= 4; ++g) {
        const BaseMatch m = folded_base_match(FoldingDatum::make(T(t), k), g);
        rep.expect(m.ok(), "folded_base_match", std::string(t) + "/" + str(k) + " g=" + str(g), str(m.folded_total),
                   str(m.invariant_total));
      }
  }));
  out.reports.push_back(guarded("isogeny_dimensions", [](Report& rep) {
    for (auto [t, k, want] : std::vector<std::tuple<const char*, int, int>>{{"A3", 2, 17}, {"D4", 3, 32}}) {
      const IsogenyDims d = isogeny_dimensions(FoldingDatum::make(T(t), k), 2);
      rep.expect(d.dim_J2Z == want, "isogeny_dimensions", std::string(t) + "/" + str(k), str(want), str(d.dim_J2Z));
      rep.expect(d.dim_J2Z > fiber_dim(d.folded, 2), "exceeds_fiber_dim", std::string(t) + "/" + str(k));
    }
  }));
  out.reports.push_back(guarded("poincare_degrees", [](Report& rep) {
    for (const char* t : {"A1", "A2", "A3", "B2", "C2", "G2", "B3", "C3"}) {
      const WeylGroup w = generate_weyl(build_root_system(T(t)));
      auto got = degrees_from_poincare(poincare_polynomial(w), T(t).rank);
      auto want = T(t).degrees();
      std::sort(got.begin(), got.end());
      std::sort(want.begin(), want.end());
      rep.expect(got == want, "degrees_from_poincare", t);
    }
  }));
}

}  // namespace

int SuiteResult::cases_run() const {
  int n = 0;
  for (const auto& r : reports) n += r.cases_run;
  return n;
}

std::vector<Failure> SuiteResult::failures() const {
  std::vector<Failure> out;
  for (const auto& r : reports) out.insert(out.end(), r.failures.begin(), r.failures.end());
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"rootsys", "weyl",    "liealg", "slodowy",
                                                 "appendix", "cameral", "dims",   "all"};
  return names;
}

SuiteResult run_suite(const std::string& name, int samples, unsigned long seed) {
  if (samples < 0) throw std::invalid_argument("run_suite: negative sample count");
  SuiteResult out;
  out.suite = name;
  out.samples = samples;
  out.seed = seed;
  const bool all = name == "all";
  bool known = all;
  auto want = [&](const char* s) {
    const bool hit = all || name == s;
    known = known || hit;
    return hit;
  };
  if (want("rootsys")) rootsys_suite(out);
  if (want("weyl")) weyl_suite(out, samples, seed);
  if (want("liealg")) liealg_suite(out, samples, seed);
  if (want("slodowy")) slodowy_suite(out, samples, seed);
  if (want("appendix")) appendix_suite(out, samples, seed);
  if (want("cameral")) cameral_suite(out, samples, seed);
  if (want("dims")) dims_suite(out);
  if (!known) throw std::invalid_argument("unknown suite '" + name + "'");
  return out;
}

}  // namespace foldlie
