// Acceptance run: one PASS/FAIL line per criterion with its wall time and budget.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "foldlie/cameral.hpp"
#include "foldlie/hitchin.hpp"
#include "foldlie/liealg.hpp"
#include "foldlie/rootsys.hpp"
#include "foldlie/sampling.hpp"
#include "foldlie/slodowy.hpp"
#include "foldlie/unfolding.hpp"
#include "foldlie/verify.hpp"
#include "foldlie/weyl.hpp"

using namespace foldlie;

namespace {

DynkinType T(const char* s) { return DynkinType::parse(s); }

struct Outcome {
  bool ok = true;
  std::string note;
  int cases = 0;

  void check(bool cond, const std::string& what) {
    ++cases;
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
  void absorb(const Report& r) {
    cases += r.cases_run;
    if (!r.ok() && ok) {
      ok = false;
      const Failure& f = r.failures.front();
      note = f.operation + " " + f.input + " expected " + f.expected + " got " + f.got;
    }
  }
};

// Orbits of <gens> acting on {0..n-1} by left multiplication.
int orbit_count(const TargetGroup& g, const std::vector<int>& gens) {
  std::vector<int> parent(g.order());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (int s : gens)
    for (int x = 0; x < g.order(); ++x) parent[find(x)] = find(g.mul(s, x));
  std::set<int> roots;
  for (int x = 0; x < g.order(); ++x) roots.insert(find(x));
  return static_cast<int>(roots.size());
}

std::vector<int> generators(const CoverMonodromy& cm) {
  std::vector<int> gens = cm.handle_images;
  gens.insert(gens.end(), cm.branch_images.begin(), cm.branch_images.end());
  return gens;
}

// Elementary symmetric functions of a list of rationals.
std::vector<Rat> elementary(const std::vector<Rat>& xs) {
  std::vector<Rat> e(xs.size() + 1, Rat(0));
  e[0] = Rat(1);
  for (const Rat& x : xs)
    for (std::size_t k = xs.size(); k >= 1; --k) e[k] += e[k - 1] * x;
  return e;
}

// 1 - chi/2 with chi = 2(2 - 2g) - 2m(2g - 2) - ... : the double cover alpha^2 = s, s in H^0(K^{2m}).
int double_cover_genus(int m, int g) {
  const int branch = 2 * m * (2 * g - 2);
  const int chi = 2 * (2 - 2 * g) - branch;
  return 1 - chi / 2;
}

void c1_fold_table(Outcome& o) {
  struct Row {
    const char* h;
    int order;
    const char* co;
    const char* inv;
  };
  for (const Row& r : std::vector<Row>{{"A3", 2, "C2", "B2"},
                                       {"A5", 2, "C3", "B3"},
                                       {"A7", 2, "C4", "B4"},
                                       {"D4", 2, "B3", "C3"},
                                       {"D5", 2, "B4", "C4"},
                                       {"D4", 3, "G2", "G2"},
                                       {"E6", 2, "F4", "F4"}}) {
    const std::string in = std::string(r.h) + "/" + std::to_string(r.order);
    const FoldingDatum fd = FoldingDatum::make(T(r.h), r.order);
    const RootSystem co = fold_coinvariants(fd);
    const RootSystem inv = fold_invariants(fd);
    o.check(co.type == T(r.co), "coinvariants " + in + " gave " + co.type.str());
    o.check(inv.type == T(r.inv), "invariants " + in + " gave " + inv.type.str());
    o.check(static_cast<int>(co.all_roots.size()) == T(r.co).root_count(), "root count " + in);
    o.check(co.rank() == static_cast<int>(fd.simple_orbits().size()), "rank equals orbit count " + in);
    o.check(isomorphic(dualize_root_system(co), inv), "invariants dual to coinvariants " + in);
    const auto [character, cocharacter] = folded_lattices(fd);
    o.check(character.rank == co.rank() && cocharacter.rank == co.rank(), "lattice ranks " + in);
    o.check(check_folding_duality(fd).ok, "duality " + in);
  }
}

void c2_weyl(Outcome& o) {
  struct Row {
    const char* t;
    int order;
    std::size_t h, f;
    const char* folded;
  };
  for (const Row& r : std::vector<Row>{{"A3", 2, 24, 8, "C2"}, {"A5", 2, 720, 48, "C3"}, {"D4", 3, 192, 12, "G2"},
                                       {"D5", 2, 1920, 384, "B4"}}) {
    const FoldingDatum fd = FoldingDatum::make(T(r.t), r.order);
    const WeylGroup wh = generate_weyl(fd.homogeneous);
    const FoldedWeyl fw = commutant_fixed_subgroup(wh, fd);
    const std::string in = r.t;
    o.check(wh.order() == r.h, "|W_h| " + in);
    o.check(fw.fixed.order() == r.f, "|W_h^a| " + in);
    o.check(static_cast<long>(r.f) == T(r.folded).weyl_order(), "|W| from degrees " + in);
    o.check(fw.folded.order() == r.f, "|W| enumerated " + in);
    o.check(fw.isomorphism_verified, "restriction isomorphism " + in);
    // restriction is a bijective homomorphism on a sample of pairs
    std::set<int> image(fw.restriction.begin(), fw.restriction.end());
    o.check(image.size() == r.f, "restriction bijective " + in);
    for (std::size_t i = 0; i < fw.fixed.order(); i += 1 + fw.fixed.order() / 16)
      for (std::size_t j = 0; j < fw.fixed.order(); j += 1 + fw.fixed.order() / 16) {
        const int ij = fw.fixed.multiply(static_cast<int>(i), static_cast<int>(j));
        o.check(fw.restriction[ij] == fw.folded.multiply(fw.restriction[i], fw.restriction[j]),
                "restriction homomorphism " + in);
      }
  }
}

void c3_invariants(Outcome& o) {
  const RunningIdentity id = sl4_sp4_identity();
  const MultiPoly u = id.ring.var("u"), v = id.ring.var("v");
  o.check(id.homogeneous[1].is_zero(), "sigma3 restricts to " + id.homogeneous[1].str());
  o.check(id.homogeneous[0] == -(u * u) - v * v, "degree 2 restriction " + id.homogeneous[0].str());
  o.check(id.homogeneous[2] == u * u * v * v, "degree 4 restriction " + id.homogeneous[2].str());
  o.check(id.folded[0] == id.homogeneous[0] && id.folded[1] == id.homogeneous[2], "symbolic identity");
  Rng rng(42);
  for (int k = 0; k < 100; ++k) {
    const std::vector<Rat> p = random_point(rng, 2);
    // the fixed Cartan of sl4 is diag(u, v, -v, -u)
    const std::vector<Rat> e = elementary({p[0], p[1], -p[1], -p[0]});
    o.check(id.homogeneous[0].eval(p) == e[2], "e2 at point " + std::to_string(k));
    o.check(id.homogeneous[1].eval(p) == -e[3] && e[3].is_zero(), "e3 at point " + std::to_string(k));
    o.check(id.homogeneous[2].eval(p) == e[4], "e4 at point " + std::to_string(k));
    o.check(id.folded[0].eval(p) == e[2] && id.folded[1].eval(p) == e[4], "folded at point " + std::to_string(k));
  }
  o.absorb(base_iso_check(FoldingDatum::make(T("A3"), 2), 100, 42));
}

void c4_fixed_subalgebra(Outcome& o) {
  struct Row {
    Family f;
    int n;
    const char* t;
    int order;
    int dim;
    const char* folded;
  };
  for (const Row& r : std::vector<Row>{{Family::SL, 4, "A3", 2, 10, "C2"}, {Family::SO, 8, "D4", 3, 14, "G2"}}) {
    const ChevalleyData cd = build_chevalley(r.f, r.n);
    const LieAut aut = lift_graph_aut(cd, GraphAut::standard(T(r.t), r.order));
    const MatrixLieAlgebra fixed = fixed_subalgebra(cd, aut);
    const RootDecomposition dec = root_decomposition(cd, fixed);
    const std::string in = r.t;
    o.check(fixed.dimension() == r.dim, in + " fixed dimension " + std::to_string(fixed.dimension()));
    o.check(fixed.closed_under_bracket(), in + " closed under bracket");
    o.check(dec.cartan_dim == 2, in + " Cartan dimension");
    o.check(static_cast<int>(dec.root_space_dims.size()) == T(r.folded).root_count(), in + " root count");
    o.check(std::all_of(dec.root_space_dims.begin(), dec.root_space_dims.end(), [](int d) { return d == 1; }),
            in + " one-dimensional root spaces");
    o.check(dec.cartan_dim + static_cast<int>(dec.root_space_dims.size()) == r.dim && dec.spans, in + " spans");
    o.check(dec.type && *dec.type == T(r.folded), in + " root type");
  }
}

void c5_slice(Outcome& o) {
  const SlodowySlice s = sp4_slice();
  const PolyRing ring = s.ring();
  const MultiPoly v1m = ring.var("v1m"), v2m = ring.var("v2m"), v1p = ring.var("v1p"), v2p = ring.var("v2p");
  const auto q = slice_quotient_symbolic(s);
  const MultiPoly b2 = Rat(2) * v1m * v1m - Rat(2) * v2p;
  const MultiPoly b4 = pow(v1m, 4) + Rat(2) * v1m * v1m * v2p + v2p * v2p - v2m * v2m - v1p * v1p;
  o.check(q.size() == 2 && q[0] == b2, "b2 closed form");
  o.check(q.size() == 2 && q[1] == b4, "b4 closed form");
  Rng rng(42);
  for (int k = 0; k < 50; ++k) {
    const auto p = random_point(rng, s.dimension());
    Rat lam = random_rat(rng);
    if (lam.is_zero()) lam = Rat(5, 2);
    const auto lhs = slice_quotient(s, cstar_action(s, lam, p));
    const auto rhs = slice_quotient(s, p);
    o.check(lhs[0] == rhs[0] * pow(lam, 4) && lhs[1] == rhs[1] * pow(lam, 8),
            "C* weights (4, 8) at sample " + std::to_string(k));
  }
}

void c6_appendix(Outcome& o) {
  const PhiSquare sq = appendix_square();
  o.check(sq.rational, "square coefficients rational");
  for (const auto& r : sq.residual) o.check(r.is_zero(), "square residual " + r.str());
  o.absorb(verify_appendix(100, 42));
  const DeformationFamily fam = semiuniversal_family(singularity(T("A3")), standard_action(T("A3"), 2));
  const auto c = unfolding_coordinates_symbolic(sl4_appendix_slice().ring());
  const MultiPoly residual = fam.poly.compose(c);
  o.check(residual.is_zero(), "unfolding residual " + residual.str());
}

const FoldingContext& a3c2() {
  static const FoldingContext ctx = make_folding_context(T("A3"), 2);
  return ctx;
}

void c7_cameral(Outcome& o) {
  const FoldingContext& ctx = a3c2();
  const TargetGroup& wh = *ctx.homogeneous;
  Rng rng(42);
  for (int k = 0; k < 200; ++k) {
    const int g = 2 + k % 2;
    const int branches = k % 4 == 3 ? transversal_branch_count(T("C2"), g) : 2 + 2 * (k % 4);
    const CoverMonodromy cm = random_transversal_monodromy(ctx.folded, g, branches, rng);
    const CoverMonodromy ind = induce_cover(cm, ctx);
    const std::string in = "sample " + std::to_string(k);
    o.check(orbit_count(*ctx.folded, generators(cm)) == 1, in + " original connected");
    o.check(orbit_count(wh, generators(ind)) == 3, in + " three components (union-find)");
    o.check(cover_geometry(ind).component_count == 3, in + " three components");
    o.absorb(check_induced_cover(cm, ind, ctx));
    // each induced local monodromy is an involution moving exactly one a-orbit of simple directions
    for (std::size_t b = 0; b < ind.branch_images.size(); ++b) {
      const RatMatrix& m = wh.group.matrix(ind.branch_images[b]);
      const int moved = rank(RatMatrix(m - identity(3)));
      o.check(wh.mul(ind.branch_images[b], ind.branch_images[b]) == 0 && (moved == 1 || moved == 2),
              in + " local monodromy involution");
      const RatMatrix a = ctx.datum.aut.matrix();
      o.check(a * m == m * a, in + " local monodromy commutes with a");
    }
  }
}

void c8_sections(Outcome& o) {
  const FoldingContext& ctx = a3c2();
  // coroot and coweight lattices of A3, both W_h-stable
  const Lattice full = full_lattice(3);
  const RatMatrix cw = *inverse(ctx.datum.homogeneous.cartan());
  Lattice coweight{3, {}};
  for (int j = 0; j < 3; ++j) coweight.basis.push_back(cw.col(j));
  Rng rng(42);
  int generic = 0, ramified = 0;
  for (int k = 0; k < 20; ++k) {
    const CoverMonodromy cm = random_transversal_monodromy(ctx.folded, 2 + k % 2, 2 + 2 * (k % 4), rng);
    for (const Lattice* l : std::vector<const Lattice*>{&full, &coweight}) {
      std::vector<FiberSections> details;
      o.absorb(pushforward_sections_check(cm, ctx, *l, &details));
      for (const auto& d : details) {
        (d.stabilizer < 0 ? generic : ramified)++;
        o.check(d.ok(), "fiber at stabilizer " + std::to_string(d.stabilizer));
      }
    }
  }
  o.check(generic > 0 && ramified > 0, "both generic and ramified fibers sampled");
}

void c9_genus(Outcome& o) {
  const ThreefoldFamily c2 = threefold_family(T("C2"));
  const ThreefoldFamily g2 = threefold_family(T("G2"));
  const FixedLocus lc = fixed_locus(c2), lg = fixed_locus(g2);
  for (int g = 2; g <= 5; ++g) {
    const int a = fixed_locus_genus(c2, g), b = fixed_locus_genus(g2, g);
    o.check(a == 6 * g - 5, "C2 genus at g=" + std::to_string(g) + " got " + std::to_string(a));
    o.check(b == 8 * g - 7, "G2 genus at g=" + std::to_string(g) + " got " + std::to_string(b));
    o.check(a == double_cover_genus(lc.m, g) && b == double_cover_genus(lg.m, g), "Riemann-Hurwitz oracle");
    const int branch = 2 * lc.m * (2 * g - 2);
    o.check(riemann_hurwitz_genus(2, g, std::vector<std::vector<int>>(branch, {2})) == a, "engine C2");
  }
}

void c10_dims(Outcome& o) {
  for (int g = 2; g <= 4; ++g) {
    const BaseMatch a3 = folded_base_match(FoldingDatum::make(T("A3"), 2), g);
    o.check(dim_base(T("C2"), g).total() == 10 * (g - 1), "dim B(C2)");
    o.check(a3.homogeneous_total == 15 * (g - 1), "dim B(A3)");
    const int deg3 = dim_base(T("A3"), g).summand_dims[1];
    o.check(deg3 == 5 * (g - 1), "degree-3 summand");
    o.check(a3.invariant_total == a3.homogeneous_total - deg3 && a3.ok(), "C2 from A3 invariant part");
    const BaseMatch d4 = folded_base_match(FoldingDatum::make(T("D4"), 3), g);
    o.check(d4.homogeneous_total == 28 * (g - 1) && d4.invariant_total == 14 * (g - 1) && d4.ok(), "G2 from D4");
  }
  const IsogenyDims c2 = isogeny_dimensions(FoldingDatum::make(T("A3"), 2), 2);
  const IsogenyDims g2 = isogeny_dimensions(FoldingDatum::make(T("D4"), 3), 2);
  o.check(c2.dim_J2Z == 17, "J2 C2 " + std::to_string(c2.dim_J2Z));
  o.check(g2.dim_J2Z == 32, "J2 G2 " + std::to_string(g2.dim_J2Z));
  for (int g = 2; g <= 4; ++g)
    for (auto [t, k] : std::vector<std::pair<const char*, int>>{{"A3", 2}, {"D4", 3}}) {
      const IsogenyDims d = isogeny_dimensions(FoldingDatum::make(T(t), k), g);
      o.check(d.dim_J2Z > fiber_dim(d.folded, g), std::string("J2 exceeds fiber dim ") + t);
    }
}

void c11_fiber_rank(Outcome& o) {
  const FoldingContext& ctx = a3c2();
  const Lattice cochar = folded_lattices(ctx.datum).second;
  Rng rng(42);
  for (int trial = 0; trial < 5; ++trial) {
    const CoverMonodromy cm = random_transversal_monodromy(ctx.folded, 2, transversal_branch_count(T("C2"), 2), rng);
    const int want = 2 * dim_base(T("C2"), 2).total();
    const FiberRank c2 = hitchin_fiber_rank(cm, full_lattice(2));
    const FiberRank a3 = hitchin_fiber_rank(induce_cover(cm, ctx), cochar);
    o.check(want == 20, "2 dim B");
    o.check(c2.rank == want, "C2 rank " + std::to_string(c2.rank));
    o.check(a3.rank == c2.rank, "folded A3 rank " + std::to_string(a3.rank));
    // -chi by hand: generic rank 2, every reflection fixes a line
    const int chi = (2 - 2 * 2) * 2 - static_cast<int>(cm.branch_images.size()) * (2 - 1);
    o.check(c2.rank == -chi, "Euler characteristic oracle");
  }
}

#ifndef FOLDLIE_CLI
#define FOLDLIE_CLI "foldlie"
#endif

// Runs the command, returning (exit code, stdout).
std::pair<int, std::string> run(const std::string& cmd) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, out};
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

void c12_verify_all(Outcome& o) {
  const std::string cmd = std::string("FOLDLIE_ENABLE_E6=0 '") + FOLDLIE_CLI + "' verify all --format json";
  const auto [rc1, out1] = run(cmd);
  const auto [rc2, out2] = run(cmd);
  o.check(rc1 == 0 && rc2 == 0, "exit codes " + std::to_string(rc1) + " " + std::to_string(rc2));
  o.check(!out1.empty() && out1 == out2, "byte-identical reports");
  o.check(out1.find("\"failures\": []") != std::string::npos, "no failures in report");
}

struct Criterion {
  int id;
  const char* name;
  double budget;
  void (*body)(Outcome&);
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "fold table", 1, c1_fold_table},
      {2, "Weyl folding", 10, c2_weyl},
      {3, "invariant-ring identity", 5, c3_invariants},
      {4, "fixed subalgebra", 30, c4_fixed_subalgebra},
      {5, "sp4 slice quotient", 5, c5_slice},
      {6, "appendix square", 10, c6_appendix},
      {7, "cameral folding", 20, c7_cameral},
      {8, "pushforward sections", 10, c8_sections},
      {9, "genus formulas", 1, c9_genus},
      {10, "dimension bookkeeping", 1, c10_dims},
      {11, "fiber rank", 10, c11_fiber_rank},
      {12, "verify all", 90, c12_verify_all},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < c.budget;
    const bool pass = o.ok && in_time;
    if (!pass) ++failed;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(3);
    line << (pass ? "PASS" : "FAIL") << " " << c.id << " " << c.name << " (" << o.cases << " checks, " << secs
         << " s / " << c.budget << " s)";
    if (!o.ok) line << " : " << o.note;
    if (o.ok && !in_time) line << " : over time budget";
    std::cout << line.str() << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << std::endl;
  return failed == 0 ? 0 : 1;
}
