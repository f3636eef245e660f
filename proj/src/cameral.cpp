#include "foldlie/cameral.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace foldlie {

int riemann_hurwitz_genus(int degree, int base_genus, const std::vector<std::vector<int>>& cycle_types) {
  if (degree < 1 || base_genus < 0) throw std::invalid_argument("riemann_hurwitz_genus: bad degree or genus");
  long chi = static_cast<long>(degree) * (2 - 2 * base_genus);
  for (const auto& cycles : cycle_types) {
    long total = 0;
    for (int c : cycles) {
      if (c < 1) throw std::invalid_argument("riemann_hurwitz_genus: cycle length < 1");
      chi -= c - 1;
      total += c;
    }
    if (total != degree) throw std::invalid_argument("riemann_hurwitz_genus: cycle type does not partition the degree");
  }
  if (chi % 2) throw std::logic_error("riemann_hurwitz_genus: odd Euler characteristic");
  return static_cast<int>(1 - chi / 2);
}

std::shared_ptr<const TargetGroup> TargetGroup::make(WeylGroup g) {
  auto t = std::make_shared<TargetGroup>();
  t->group = std::move(g);
  const int n = static_cast<int>(t->group.order());
  t->table.assign(n, std::vector<int>(n, -1));
  t->inverses.assign(n, -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int k = t->group.multiply(i, j);
      if (k < 0) throw std::logic_error("TargetGroup: group is not closed");
      t->table[i][j] = k;
      if (k == 0) t->inverses[i] = j;
    }
  t->reflections = t->group.reflections();
  std::sort(t->reflections.begin(), t->reflections.end());
  return t;
}

bool TargetGroup::is_reflection(int a) const { return std::binary_search(reflections.begin(), reflections.end(), a); }

namespace {

int commutator(const TargetGroup& t, int a, int b) { return t.mul(t.mul(a, b), t.mul(t.inv(a), t.inv(b))); }

int handle_product(const CoverMonodromy& cm) {
  const TargetGroup& t = *cm.target;
  int r = 0;
  for (std::size_t i = 0; i + 1 < cm.handle_images.size(); i += 2)
    r = t.mul(r, commutator(t, cm.handle_images[i], cm.handle_images[i + 1]));
  return r;
}

std::vector<int> all_images(const CoverMonodromy& cm) {
  std::vector<int> out = cm.handle_images;
  out.insert(out.end(), cm.branch_images.begin(), cm.branch_images.end());
  return out;
}

std::vector<int> closure(const TargetGroup& t, const std::vector<int>& gens) {
  std::vector<char> seen(t.order(), 0);
  std::vector<int> out{0};
  seen[0] = 1;
  for (std::size_t k = 0; k < out.size(); ++k)
    for (int g : gens) {
      const int n = t.mul(out[k], g);
      if (!seen[n]) {
        seen[n] = 1;
        out.push_back(n);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

// Left cosets w S: coset id of every element.
std::vector<int> left_cosets(const TargetGroup& t, const std::vector<int>& subgroup, int* count) {
  std::vector<int> id(t.order(), -1);
  int next = 0;
  for (int w = 0; w < t.order(); ++w) {
    if (id[w] >= 0) continue;
    for (int s : subgroup) id[t.mul(w, s)] = next;
    ++next;
  }
  *count = next;
  return id;
}

std::vector<int> cycle_type(const std::vector<int>& perm, const std::vector<int>& support) {
  std::vector<int> out;
  std::set<int> seen;
  for (int p : support) {
    if (seen.count(p)) continue;
    int len = 0;
    for (int q = p; !seen.count(q); q = perm[q]) {
      seen.insert(q);
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> left_translation(const TargetGroup& t, int g) {
  std::vector<int> p(t.order());
  for (int w = 0; w < t.order(); ++w) p[w] = t.mul(g, w);
  return p;
}

RatMatrix basis_matrix(const Lattice& l, int dim) {
  if (l.basis.empty()) return RatMatrix(dim, 0);
  return hstack(l.basis);
}

// Matrix of g on the span of the lattice, in lattice coordinates.
RatMatrix on_lattice(const RatMatrix& g, const RatMatrix& b, const RatMatrix& left_inv) {
  RatMatrix gb = g * b;
  RatMatrix r = left_inv * gb;
  if (RatMatrix(b * r) != gb) throw std::invalid_argument("lattice is not preserved by the group");
  return r;
}

int fixed_rank(const RatMatrix& rho) {
  if (rho.rows() == 0) return 0;
  return static_cast<int>(rho.rows()) - rank(RatMatrix(rho - identity(static_cast<int>(rho.rows()))));
}

struct LatticeAction {
  RatMatrix b;
  RatMatrix left_inv;
  int r = 0;
};

LatticeAction lattice_action(const Lattice& l, int dim) {
  LatticeAction la;
  la.b = basis_matrix(l, dim);
  la.r = static_cast<int>(la.b.cols());
  if (la.r > 0) {
    if (rank(la.b) != la.r) throw std::invalid_argument("lattice basis is dependent");
    la.left_inv = *inverse(RatMatrix(la.b.transpose() * la.b)) * la.b.transpose();
  }
  return la;
}

// Rows encoding f(g p) = rho(g) f(p) for every generator and point.
RatMatrix equivariance_rows(const TargetGroup& t, const std::vector<int>& gens, const std::vector<RatMatrix>& rho,
                            const std::vector<int>& coset, const std::vector<int>& reps, int r) {
  const int points = static_cast<int>(reps.size());
  RatMatrix m = zeros(static_cast<int>(gens.size()) * points * r, points * r);
  int row = 0;
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (int p = 0; p < points; ++p) {
      const int q = coset[t.mul(gens[k], reps[p])];
      for (int i = 0; i < r; ++i, ++row) {
        m(row, q * r + i) += Rat(1);
        for (int j = 0; j < r; ++j) m(row, p * r + j) -= rho[k](i, j);
      }
    }
  return m;
}

std::vector<int> coset_reps(const std::vector<int>& coset, int count) {
  std::vector<int> reps(count, -1);
  for (std::size_t w = 0; w < coset.size(); ++w)
    if (reps[coset[w]] < 0) reps[coset[w]] = static_cast<int>(w);
  return reps;
}

}  // namespace

int relation_residual(const CoverMonodromy& cm) {
  int r = handle_product(cm);
  for (int c : cm.branch_images) r = cm.target->mul(r, c);
  return r;
}

void validate_monodromy(const CoverMonodromy& cm) {
  if (!cm.target) throw std::invalid_argument("validate_monodromy: no target group");
  if (cm.base_genus < 0 || static_cast<int>(cm.handle_images.size()) != 2 * cm.base_genus)
    throw std::invalid_argument("validate_monodromy: expected 2g handle images");
  for (int i : all_images(cm))
    if (i < 0 || i >= cm.target->order()) throw std::invalid_argument("validate_monodromy: image index out of range");
  const int r = relation_residual(cm);
  if (r != 0)
    throw std::invalid_argument("validate_monodromy: surface relation fails, residual " +
                                to_string(cm.target->group.matrix(r)));
}

bool is_transversal(const CoverMonodromy& cm) {
  return std::all_of(cm.branch_images.begin(), cm.branch_images.end(),
                     [&](int c) { return cm.target->is_reflection(c); });
}

std::vector<int> monodromy_group(const CoverMonodromy& cm) { return closure(*cm.target, all_images(cm)); }

CoverMonodromy random_transversal_monodromy(std::shared_ptr<const TargetGroup> target, int base_genus, int branch_count,
                                            Rng& rng, bool surjective) {
  if (base_genus < 0 || branch_count < 0) throw std::invalid_argument("random_transversal_monodromy: negative input");
  if (branch_count % 2) throw std::invalid_argument("random_transversal_monodromy: reflections need an even count");
  const TargetGroup& t = *target;
  CoverMonodromy cm;
  cm.base_genus = base_genus;
  cm.target = target;
  for (int attempt = 0; attempt < 100000; ++attempt) {
    cm.handle_images.clear();
    cm.branch_images.clear();
    for (int i = 0; i < 2 * base_genus; ++i) cm.handle_images.push_back(random_index(rng, t.order()));
    for (int k = 0; k + 1 < branch_count; ++k)
      cm.branch_images.push_back(t.reflections[random_index(rng, t.reflections.size())]);
    const int prefix = relation_residual(cm);
    if (branch_count > 0) {
      const int last = t.inv(prefix);
      if (!t.is_reflection(last)) continue;
      cm.branch_images.push_back(last);
    } else if (prefix != 0) {
      continue;
    }
    if (surjective && static_cast<int>(monodromy_group(cm).size()) != t.order()) continue;
    return cm;
  }
  throw std::runtime_error("random_transversal_monodromy: no valid data found");
}

CoverGeometry cover_geometry(const CoverMonodromy& cm) {
  validate_monodromy(cm);
  const TargetGroup& t = *cm.target;
  CoverGeometry geo;
  std::vector<std::vector<int>> branch_perms;
  std::vector<int> everything(t.order());
  for (int w = 0; w < t.order(); ++w) everything[w] = w;
  for (int c : cm.branch_images) {
    branch_perms.push_back(left_translation(t, c));
    geo.ramification.push_back(cycle_type(branch_perms.back(), everything));
  }
  // orbits of the monodromy group acting on the left are the right cosets H w
  const std::vector<int> h = monodromy_group(cm);
  std::vector<char> seen(t.order(), 0);
  for (int w = 0; w < t.order(); ++w) {
    if (seen[w]) continue;
    std::vector<int> orbit;
    for (int g : h) {
      const int p = t.mul(g, w);
      seen[p] = 1;
      orbit.push_back(p);
    }
    std::vector<std::vector<int>> cycles;
    for (const auto& perm : branch_perms) cycles.push_back(cycle_type(perm, orbit));
    const int genus = riemann_hurwitz_genus(static_cast<int>(orbit.size()), cm.base_genus, cycles);
    geo.component_genera.push_back(genus);
    geo.component_degrees.push_back(static_cast<int>(orbit.size()));
    geo.euler_characteristic += 2 - 2 * genus;
  }
  geo.component_count = static_cast<int>(geo.component_genera.size());
  geo.total_genus = 1 - geo.euler_characteristic / 2;
  return geo;
}

FoldingContext make_folding_context(DynkinType t, int order) {
  FoldingContext ctx;
  ctx.datum = FoldingDatum::make(t, order);
  WeylGroup wh = generate_weyl(ctx.datum.homogeneous);
  ctx.fw = commutant_fixed_subgroup(wh, ctx.datum);
  if (!ctx.fw.isomorphism_verified) throw std::logic_error("make_folding_context: restriction is not an isomorphism");
  ctx.homogeneous = TargetGroup::make(std::move(wh));
  ctx.folded = TargetGroup::make(ctx.fw.folded);
  for (int k = 0; k < ctx.folded->order(); ++k) ctx.embedding.push_back(ctx.fw.embed(k));
  return ctx;
}

CoverMonodromy induce_cover(const CoverMonodromy& cm, const FoldingContext& ctx) {
  if (!cm.target) throw std::invalid_argument("induce_cover: no target group");
  if (cm.target != ctx.folded) {
    bool same = cm.target->order() == ctx.folded->order();
    for (int k = 0; same && k < cm.target->order(); ++k)
      same = cm.target->group.matrix(k) == ctx.folded->group.matrix(k);
    if (!same) throw std::invalid_argument("induce_cover: monodromy does not take values in the folded Weyl group");
  }
  const RatMatrix a = ctx.datum.aut.matrix();
  CoverMonodromy out;
  out.base_genus = cm.base_genus;
  out.target = ctx.homogeneous;
  auto lift = [&](int k) {
    const int w = ctx.embedding.at(k);
    const RatMatrix& m = ctx.homogeneous->group.matrix(w);
    if (RatMatrix(a * m) != RatMatrix(m * a)) throw std::invalid_argument("induce_cover: image outside the embedded W");
    return w;
  };
  for (int k : cm.handle_images) out.handle_images.push_back(lift(k));
  for (int k : cm.branch_images) out.branch_images.push_back(lift(k));
  return out;
}

Report check_induced_cover(const CoverMonodromy& original, const CoverMonodromy& induced, const FoldingContext& ctx) {
  Report rep;
  rep.check = "induced cover";
  try {
    validate_monodromy(induced);
    rep.expect(true, "validate_monodromy", "induced");
  } catch (const std::invalid_argument& e) {
    rep.expect(false, "validate_monodromy", "induced", "relation holds", e.what());
    return rep;
  }
  const CoverGeometry g0 = cover_geometry(original);
  const CoverGeometry g1 = cover_geometry(induced);
  const int index = ctx.index();
  rep.expect(g1.component_count == index * g0.component_count, "component_count", "induced",
             std::to_string(index * g0.component_count), std::to_string(g1.component_count));
  rep.expect(g1.euler_characteristic == index * g0.euler_characteristic, "euler_characteristic", "induced",
             std::to_string(index * g0.euler_characteristic), std::to_string(g1.euler_characteristic));
  std::vector<int> expected_genera;
  for (int k = 0; k < index; ++k)
    expected_genera.insert(expected_genera.end(), g0.component_genera.begin(), g0.component_genera.end());
  std::vector<int> got_genera = g1.component_genera;
  std::sort(expected_genera.begin(), expected_genera.end());
  std::sort(got_genera.begin(), got_genera.end());
  rep.expect(expected_genera == got_genera, "component_genera", "induced");

  // coset blocks i(W) x_j with phi_j(w) = i(w) x_j
  const TargetGroup& th = *ctx.homogeneous;
  const TargetGroup& tw = *original.target;
  std::vector<int> block(th.order(), -1);
  const auto images0 = all_images(original);
  const auto images1 = all_images(induced);
  int blocks = 0;
  for (int x = 0; x < th.order(); ++x) {
    if (block[x] >= 0) continue;
    std::vector<int> phi(tw.order());
    bool injective = true;
    for (int w = 0; w < tw.order(); ++w) {
      phi[w] = th.mul(ctx.embedding[w], x);
      if (block[phi[w]] >= 0) injective = false;
      block[phi[w]] = blocks;
    }
    bool intertwines = true;
    for (std::size_t k = 0; k < images0.size(); ++k)
      for (int w = 0; w < tw.order(); ++w)
        if (phi[tw.mul(images0[k], w)] != th.mul(images1[k], phi[w])) intertwines = false;
    rep.expect(injective && intertwines, "coset_block_isomorphism", "block " + std::to_string(blocks));
    ++blocks;
  }
  rep.expect(blocks == index, "coset_block_count", "induced", std::to_string(index), std::to_string(blocks));

  // local monodromy: products of reflections over automorphism orbits of positive roots
  const RootSystem& rs = ctx.datum.homogeneous;
  std::vector<std::set<RatVector, VectorLess>> seen_orbits;
  std::vector<RatMatrix> orbit_products;
  for (const auto& g : rs.positive_roots()) {
    auto orbit = aut_orbit(ctx.datum, g);
    std::set<RatVector, VectorLess> key(orbit.begin(), orbit.end());
    if (std::find(seen_orbits.begin(), seen_orbits.end(), key) != seen_orbits.end()) continue;
    seen_orbits.push_back(key);
    bool orthogonal = true;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (std::size_t j = i + 1; j < orbit.size(); ++j)
        if (!rs.inner(orbit[i], orbit[j]).is_zero()) orthogonal = false;
    if (!orthogonal) continue;
    RatMatrix p = identity(rs.ambient_dim);
    for (const auto& r : orbit) p = RatMatrix(p * reflection_matrix(rs, r));
    orbit_products.push_back(p);
  }
  for (std::size_t k = 0; k < original.branch_images.size(); ++k) {
    const RatMatrix& target = tw.group.matrix(original.branch_images[k]);
    int matches = 0;
    bool equal = false;
    for (const auto& p : orbit_products) {
      const RatMatrix r = ctx.fw.restrict(p);
      if (RatMatrix(ctx.fw.basis * r) != RatMatrix(p * ctx.fw.basis) || r != target) continue;
      ++matches;
      equal = p == th.group.matrix(induced.branch_images[k]);
    }
    rep.expect(matches == 1 && equal, "local_monodromy", "branch " + std::to_string(k),
               "one matching orbit product", std::to_string(matches) + (equal ? " equal" : " different"));
  }
  return rep;
}

FiberSections fiber_sections(const FoldingContext& ctx, int stabilizer, const Lattice& lattice) {
  const TargetGroup& th = *ctx.homogeneous;
  const TargetGroup& tw = *ctx.folded;
  FiberSections fs;
  fs.stabilizer = stabilizer;
  const LatticeAction la = lattice_action(lattice, th.group.dim());
  const int r = la.r;
  if (r == 0) {
    fs.restrictions_equivariant = true;
    return fs;
  }
  std::vector<int> sub_w = closure(tw, stabilizer < 0 ? std::vector<int>{} : std::vector<int>{stabilizer});
  std::vector<int> sub_h;
  for (int s : sub_w) sub_h.push_back(ctx.embedding[s]);

  std::vector<int> gens_h, gens_w;
  std::vector<RatMatrix> rho_h, rho_w;
  for (const auto& g : th.group.generators) {
    gens_h.push_back(th.group.index_of(g));
    rho_h.push_back(on_lattice(g, la.b, la.left_inv));
  }
  for (const auto& g : tw.group.generators) {
    const int k = tw.group.index_of(g);
    gens_w.push_back(k);
    rho_w.push_back(on_lattice(th.group.matrix(ctx.embedding[k]), la.b, la.left_inv));
  }

  int nh = 0, nw = 0;
  const std::vector<int> coset_h = left_cosets(th, sub_h, &nh);
  const std::vector<int> coset_w = left_cosets(tw, sub_w, &nw);
  const std::vector<int> reps_h = coset_reps(coset_h, nh);
  const std::vector<int> reps_w = coset_reps(coset_w, nw);
  const RatMatrix eq_h = equivariance_rows(th, gens_h, rho_h, coset_h, reps_h, r);
  const RatMatrix eq_w = equivariance_rows(tw, gens_w, rho_w, coset_w, reps_w, r);
  const auto maps_h = nullspace(eq_h);
  const auto maps_w = nullspace(eq_w);
  fs.rank_homogeneous = static_cast<int>(maps_h.size());
  fs.rank_folded = static_cast<int>(maps_w.size());

  // f -> f_1: restrict to the block i(W) S~ identified with W / S
  fs.restrictions_equivariant = true;
  std::vector<RatVector> restricted;
  for (const auto& v : maps_h) {
    RatVector u(nw * r);
    for (int q = 0; q < nw; ++q) {
      const int p = coset_h[ctx.embedding[reps_w[q]]];
      for (int i = 0; i < r; ++i) u(q * r + i) = v(p * r + i);
    }
    if (RatVector(eq_w * u) != RatVector::Constant(eq_w.rows(), Rat(0))) fs.restrictions_equivariant = false;
    restricted.push_back(u);
  }
  fs.restriction_rank = restricted.empty() ? 0 : rank(hstack(restricted));
  return fs;
}

Report pushforward_sections_check(const CoverMonodromy& cm, const FoldingContext& ctx, const Lattice& lattice,
                                  std::vector<FiberSections>* details) {
  Report rep;
  rep.check = "pushforward sections";
  std::vector<int> stabs{-1};
  for (int c : cm.branch_images)
    if (std::find(stabs.begin(), stabs.end(), c) == stabs.end()) stabs.push_back(c);
  const LatticeAction la = lattice_action(lattice, ctx.homogeneous->group.dim());
  for (int s : stabs) {
    const FiberSections fs = fiber_sections(ctx, s, lattice);
    if (details) details->push_back(fs);
    // orbit-stabilizer: one transitive orbit, so the rank is that of the stabilizer invariants
    int expected = la.r;
    if (s >= 0 && la.r > 0)
      expected = fixed_rank(on_lattice(ctx.homogeneous->group.matrix(ctx.embedding[s]), la.b, la.left_inv));
    const std::string input = s < 0 ? "generic fiber" : "stabilizer " + std::to_string(s);
    rep.expect(fs.ok(), "pushforward_sections_check", input, "equal ranks and bijection",
               std::to_string(fs.rank_homogeneous) + "/" + std::to_string(fs.rank_folded) + "/" +
                   std::to_string(fs.restriction_rank));
    rep.expect(fs.rank_folded == expected, "stabilizer_rank", input, std::to_string(expected),
               std::to_string(fs.rank_folded));
  }
  return rep;
}

FiberRank hitchin_fiber_rank(const CoverMonodromy& cm, const Lattice& lattice) {
  validate_monodromy(cm);
  const LatticeAction la = lattice_action(lattice, cm.target->group.dim());
  FiberRank fr;
  fr.generic_rank = la.r;
  if (la.r == 0) {
    fr.branch_ranks.assign(cm.branch_images.size(), 0);
    return fr;
  }
  auto rho = [&](int k) { return on_lattice(cm.target->group.matrix(k), la.b, la.left_inv); };
  std::vector<RatMatrix> blocks;
  for (int k : all_images(cm)) blocks.push_back(RatMatrix(rho(k) - identity(la.r)));
  RatMatrix stacked = zeros(static_cast<int>(blocks.size()) * la.r, la.r);
  for (std::size_t k = 0; k < blocks.size(); ++k) stacked.block(static_cast<int>(k) * la.r, 0, la.r, la.r) = blocks[k];
  fr.h0 = la.r - rank(stacked);
  long chi = static_cast<long>(2 - 2 * cm.base_genus) * la.r;
  for (int c : cm.branch_images) {
    fr.branch_ranks.push_back(fixed_rank(rho(c)));
    chi -= la.r - fr.branch_ranks.back();
  }
  if (fr.h0 != 0)
    throw std::domain_error("hitchin_fiber_rank: global invariants of rank " + std::to_string(fr.h0) +
                            " survive; the Euler characteristic needs a correction term");
  fr.rank = static_cast<int>(-chi);
  return fr;
}

Lattice full_lattice(int dim) {
  Lattice l;
  l.rank = dim;
  for (int i = 0; i < dim; ++i) {
    RatVector e = RatVector::Constant(dim, Rat(0));
    e(i) = Rat(1);
    l.basis.push_back(e);
  }
  return l;
}

}  // namespace foldlie
