#include "foldlie/poly.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace foldlie {

PolyRing::PolyRing(std::vector<std::string> names)
    : names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {
  for (std::size_t i = 0; i < names_->size(); ++i)
    for (std::size_t j = i + 1; j < names_->size(); ++j)
      if ((*names_)[i] == (*names_)[j]) throw std::invalid_argument("PolyRing: duplicate variable " + (*names_)[i]);
}

int PolyRing::index(const std::string& name) const {
  auto it = std::find(names_->begin(), names_->end(), name);
  if (it == names_->end()) throw std::out_of_range("PolyRing: unknown variable " + name);
  return static_cast<int>(it - names_->begin());
}

bool PolyRing::contains(const std::string& name) const {
  return std::find(names_->begin(), names_->end(), name) != names_->end();
}

MultiPoly PolyRing::var(const std::string& name) const { return var(index(name)); }

MultiPoly PolyRing::var(int i) const {
  Exponent e(size(), 0);
  e.at(i) = 1;
  return MultiPoly::monomial(*this, e);
}

std::vector<MultiPoly> PolyRing::vars() const {
  std::vector<MultiPoly> out;
  for (int i = 0; i < size(); ++i) out.push_back(var(i));
  return out;
}

MultiPoly::MultiPoly(const Rat& c) {
  if (!c.is_zero()) terms_[Exponent{}] = c;
}

MultiPoly::MultiPoly(PolyRing ring, const Rat& c) : ring_(std::move(ring)) {
  if (!c.is_zero()) terms_[Exponent(ring_.size(), 0)] = c;
}

MultiPoly MultiPoly::monomial(const PolyRing& ring, const Exponent& e, const Rat& c) {
  if (static_cast<int>(e.size()) != ring.size()) throw std::invalid_argument("MultiPoly: exponent length mismatch");
  MultiPoly p(ring);
  if (!c.is_zero()) p.terms_[e] = c;
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Rat MultiPoly::constant_term() const { return coeff(Exponent(ring_.size(), 0)); }

Rat MultiPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

int MultiPoly::degree_in(int var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.at(var));
  return d;
}

int MultiPoly::degree_in(const std::string& name) const {
  if (!ring_.contains(name)) return terms_.empty() ? -1 : 0;
  return degree_in(ring_.index(name));
}

int MultiPoly::weighted_degree(const std::vector<int>& weights) const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (std::size_t i = 0; i < e.size(); ++i) s += e[i] * weights.at(i);
    d = std::max(d, s);
  }
  return d;
}

bool MultiPoly::is_weighted_homogeneous(const std::vector<int>& weights, int degree) const {
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (std::size_t i = 0; i < e.size(); ++i) s += e[i] * weights.at(i);
    if (s != degree) return false;
  }
  return true;
}

bool MultiPoly::depends_on(const std::string& name) const { return degree_in(name) > 0; }

Rat MultiPoly::eval(const std::vector<Rat>& point) const {
  if (ring_.size() == 0) return constant_term();
  if (static_cast<int>(point.size()) != ring_.size()) throw std::invalid_argument("MultiPoly::eval: point size mismatch");
  Rat total(0);
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) t *= pow(point[i], e[i]);
    total += t;
  }
  return total;
}

Rat MultiPoly::eval(const std::map<std::string, Rat>& point) const {
  std::vector<Rat> p(ring_.size());
  for (int i = 0; i < ring_.size(); ++i) {
    auto it = point.find(ring_.names()[i]);
    if (it != point.end()) {
      p[i] = it->second;
    } else if (depends_on(ring_.names()[i])) {
      throw std::invalid_argument("poly_eval: missing value for " + ring_.names()[i]);
    }
  }
  return eval(p);
}

MultiPoly MultiPoly::compose(const std::vector<MultiPoly>& images) const {
  if (static_cast<int>(images.size()) != ring_.size()) throw std::invalid_argument("MultiPoly::compose: arity mismatch");
  MultiPoly out;
  for (const auto& img : images) out.unify(img);
  std::vector<std::vector<MultiPoly>> powers(images.size());
  for (const auto& [e, c] : terms_) {
    MultiPoly t(out.ring_, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(MultiPoly(out.ring_, Rat(1)));
      while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * images[i]);
      t *= pw[e[i]];
    }
    out += t;
  }
  return out;
}

MultiPoly MultiPoly::substitute(const std::map<std::string, MultiPoly>& images) const {
  std::vector<MultiPoly> full = ring_.vars();
  for (const auto& [name, img] : images) {
    if (!ring_.contains(name)) continue;
    full[ring_.index(name)] = img.embed(ring_);
  }
  if (full.empty()) return *this;
  return compose(full);
}

MultiPoly MultiPoly::embed(const PolyRing& target) const {
  if (ring_ == target) return *this;
  std::vector<int> map(ring_.size());
  for (int i = 0; i < ring_.size(); ++i) {
    if (target.contains(ring_.names()[i])) {
      map[i] = target.index(ring_.names()[i]);
    } else if (depends_on(ring_.names()[i])) {
      throw std::invalid_argument("MultiPoly::embed: target ring lacks " + ring_.names()[i]);
    } else {
      map[i] = -1;
    }
  }
  MultiPoly out(target);
  for (const auto& [e, c] : terms_) {
    Exponent f(target.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (map[i] >= 0) f[map[i]] = e[i];
    out.add_term(f, c);
  }
  return out;
}

MultiPoly MultiPoly::derivative(int var) const {
  MultiPoly out(ring_);
  for (const auto& [e, c] : terms_) {
    if (e.at(var) == 0) continue;
    Exponent f = e;
    f[var] -= 1;
    out.add_term(f, c * Rat(e[var]));
  }
  return out;
}

MultiPoly MultiPoly::derivative(const std::string& name) const {
  if (!ring_.contains(name)) return MultiPoly(ring_);
  return derivative(ring_.index(name));
}

MultiPoly MultiPoly::homogeneous_part(const std::vector<int>& weights, int degree) const {
  MultiPoly out(ring_);
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (std::size_t i = 0; i < e.size(); ++i) s += e[i] * weights.at(i);
    if (s == degree) out.terms_[e] = c;
  }
  return out;
}

void MultiPoly::unify(const MultiPoly& o) {
  if (ring_ == o.ring_) return;
  if (o.ring_.size() == 0) return;
  if (ring_.size() == 0) {
    std::map<Exponent, Rat> moved;
    for (auto& [e, c] : terms_) moved[Exponent(o.ring_.size(), 0)] = c;
    terms_ = std::move(moved);
    ring_ = o.ring_;
    return;
  }
  throw std::invalid_argument("MultiPoly: mismatched variable orders");
}

void MultiPoly::add_term(const Exponent& e, const Rat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  unify(o);
  if (o.ring_.size() == 0 && ring_.size() > 0) {
    add_term(Exponent(ring_.size(), 0), o.constant_term());
    return *this;
  }
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  out.unify(a);
  out.unify(b);
  if (a.terms_.empty() || b.terms_.empty()) return out;
  if (a.ring_.size() == 0) return b * a.constant_term();
  if (b.ring_.size() == 0) return a * b.constant_term();
  Exponent e(out.ring_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const Rat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

MultiPoly& MultiPoly::operator/=(const Rat& c) { return *this *= c.inverse(); }

MultiPoly operator/(MultiPoly a, const MultiPoly& b) {
  if (!b.is_constant() || b.is_zero()) throw std::domain_error("MultiPoly: division by a non-constant or zero");
  return a /= b.constant_term();
}

MultiPoly operator-(const MultiPoly& a) {
  MultiPoly out = a;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.ring_ == b.ring_) return a.terms_ == b.terms_;
  return (a - b).is_zero();
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    bool unit_monomial = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    Rat mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (unit_monomial || mag != Rat(1)) {
      os << mag;
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      os << (wrote ? "*" : "") << ring_.names()[i];
      if (e[i] > 1) os << "^" << e[i];
      wrote = true;
    }
  }
  return os.str();
}

MultiPoly pow(const MultiPoly& p, int exponent) {
  if (exponent < 0) throw std::invalid_argument("pow: negative exponent");
  MultiPoly result(p.ring(), Rat(1));
  MultiPoly b = p;
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    exponent >>= 1;
    if (exponent) b *= b;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.str(); }

PolyMatrix to_poly(const RatMatrix& m) {
  PolyMatrix out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = MultiPoly(m(i, j));
  return out;
}

RatMatrix eval(const PolyMatrix& m, const std::vector<Rat>& point) {
  RatMatrix out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      out(i, j) = m(i, j).eval(point);
  return out;
}

Rat poly_eval(const MultiPoly& p, const std::map<std::string, Rat>& point) { return p.eval(point); }

MultiPoly elementary_symmetric(const PolyRing& ring, int k) {
  const int n = ring.size();
  MultiPoly out(ring);
  if (k < 0 || k > n) return out;
  std::vector<int> idx(k);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == k) {
      Exponent e(n, 0);
      for (int i : idx) e[i] = 1;
      out += MultiPoly::monomial(ring, e);
      return;
    }
    for (int i = start; i < n; ++i) {
      idx[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  return out;
}

bool in_generated_subalgebra(const MultiPoly& target, const std::vector<MultiPoly>& gens,
                             const std::vector<int>& weights) {
  if (target.is_zero()) return true;
  const int deg = target.weighted_degree(weights);
  std::vector<int> gdeg;
  for (const auto& g : gens) gdeg.push_back(g.weighted_degree(weights));
  std::vector<MultiPoly> products;
  std::vector<int> e(gens.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int remaining) {
    if (i == gens.size()) {
      if (remaining != 0) return;
      MultiPoly p(target.ring(), Rat(1));
      for (std::size_t j = 0; j < gens.size(); ++j) p *= pow(gens[j].embed(target.ring()), e[j]);
      products.push_back(p);
      return;
    }
    if (gdeg[i] <= 0) {
      e[i] = 0;
      rec(i + 1, remaining);
      return;
    }
    for (int k = 0; k * gdeg[i] <= remaining; ++k) {
      e[i] = k;
      rec(i + 1, remaining - k * gdeg[i]);
    }
    e[i] = 0;
  };
  rec(0, deg);
  if (products.empty()) return false;
  std::map<Exponent, int> column;
  for (const auto& p : products)
    for (const auto& [ex, c] : p.terms()) column.emplace(ex, 0);
  for (const auto& [ex, c] : target.terms()) column.emplace(ex, 0);
  int r = 0;
  for (auto& [ex, idx] : column) idx = r++;
  RatMatrix a = zeros(r, static_cast<int>(products.size()));
  RatVector b = RatVector::Constant(r, Rat(0));
  for (std::size_t j = 0; j < products.size(); ++j)
    for (const auto& [ex, c] : products[j].terms()) a(column[ex], static_cast<int>(j)) = c;
  for (const auto& [ex, c] : target.terms()) b(column[ex]) = c;
  return solve(a, b).has_value();
}

}  // namespace foldlie
