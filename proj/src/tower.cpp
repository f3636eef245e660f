#include "foldlie/tower.hpp"

#include <vector>

namespace foldlie {

AlgTower AlgTower::appendix() { return AlgTower({{"i", Rat(-1), Rat(0)}, {"r", Rat(2, 3), Rat(0)}}); }

AlgTower AlgTower::cube_root_of_unity(const std::string& name) { return AlgTower({{name, Rat(-1), Rat(-1)}}); }

MultiPoly AlgTower::reduce(const MultiPoly& p) const {
  const PolyRing& ring = p.ring();
  std::vector<int> idx;
  for (const auto& g : gens_) idx.push_back(ring.contains(g.name) ? ring.index(g.name) : -1);
  MultiPoly out(ring);
  std::vector<std::pair<Exponent, Rat>> work(p.terms().begin(), p.terms().end());
  while (!work.empty()) {
    auto [e, c] = work.back();
    work.pop_back();
    bool reduced = false;
    for (std::size_t k = 0; k < gens_.size(); ++k) {
      const int v = idx[k];
      if (v < 0 || e[v] < 2) continue;
      Exponent lower = e;
      lower[v] -= 2;
      if (!gens_[k].c0.is_zero()) work.emplace_back(lower, c * gens_[k].c0);
      if (!gens_[k].c1.is_zero()) {
        Exponent mid = lower;
        mid[v] += 1;
        work.emplace_back(mid, c * gens_[k].c1);
      }
      reduced = true;
      break;
    }
    if (!reduced) out += MultiPoly::monomial(ring, e, c);
  }
  return out;
}

bool AlgTower::in_base_field(const MultiPoly& p) const {
  MultiPoly q = reduce(p);
  for (const auto& g : gens_)
    if (q.depends_on(g.name)) return false;
  return true;
}

}  // namespace foldlie
