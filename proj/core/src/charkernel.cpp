#include "bds/charkernel.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace bds {

namespace {

// ---- memo cache ---------------------------------------------------------

struct KernelCache {
  std::shared_mutex mu;
  std::unordered_map<std::string, std::shared_ptr<const WeightMultiset>> dominant;
  std::unordered_map<std::string, std::shared_ptr<const std::vector<OrbitCharacter>>> powers;
};

KernelCache& cache() {
  static KernelCache c;
  return c;
}

template <class Map>
typename Map::mapped_type lookup(Map& m, const std::string& key) {
  std::shared_lock lock(cache().mu);
  auto it = m.find(key);
  return it == m.end() ? typename Map::mapped_type{} : it->second;
}

template <class Map>
void store(Map& m, const std::string& key, typename Map::mapped_type v) {
  std::unique_lock lock(cache().mu);
  m[key] = std::move(v);
}

void check_same(const EmbeddedDatum& e, const OrbitCharacter& c) {
  if (!c.datum.empty() && c.datum != e.fingerprint())
    throw std::invalid_argument("character belongs to a different datum");
}

// 6 * (x, psi) for ambient labels x and ambient root coordinates psi.
// Norms are 1, 1/2 or 1/3, so the scaled form is integral.
std::int64_t ip6(const RootDatum& g, const Weight& x, const RootVec& psi) {
  std::int64_t s = 0;
  for (int i = 0; i < g.rank(); ++i) {
    if (psi[i] == 0 || x[i] == 0) continue;
    const Rational n6 = g.norm(i) * 6;
    s += static_cast<std::int64_t>(x[i]) * psi[i] * static_cast<std::int64_t>(boost::multiprecision::numerator(n6));
  }
  return s;
}

WeightMultiset compute_dominant(const EmbeddedDatum& e, const Weight& hw) {
  const RootDatum& g = e.ambient();
  const auto& pos = e.positive_roots();
  const auto& local_pos = e.local().positive_roots();

  // dominant weights below hw, with their depth in local simple-root coordinates
  struct Node {
    Weight w;
    RootVec depth;
    int height;
  };
  std::vector<Node> nodes{{hw, RootVec(e.rank()), 0}};
  std::unordered_set<Weight, IVecHash> seen{hw};
  for (std::size_t q = 0; q < nodes.size(); ++q) {
    for (std::size_t a = 0; a < pos.size(); ++a) {
      Weight w = nodes[q].w - pos[a].labels;
      if (!e.is_dominant(w) || seen.count(w)) continue;
      seen.insert(w);
      RootVec d = nodes[q].depth + local_pos[a];
      int h = 0;
      for (int i = 0; i < d.rank(); ++i) h += d[i];
      nodes.push_back({w, d, h});
    }
  }
  std::stable_sort(nodes.begin(), nodes.end(), [](const Node& x, const Node& y) { return x.height < y.height; });

  std::unordered_map<Weight, BigInt, IVecHash> mult;
  mult[hw] = 1;
  Weight lam2rho = hw + e.two_rho();
  for (std::size_t q = 1; q < nodes.size(); ++q) {
    const Weight& mu = nodes[q].w;
    RootVec diff(g.rank());  // hw - mu in ambient root coordinates
    for (int a = 0; a < e.rank(); ++a)
      if (nodes[q].depth[a]) diff += nodes[q].depth[a] * e.simple_roots()[a];
    const std::int64_t lhs = ip6(g, lam2rho + mu, diff);
    BigInt rhs = 0;
    for (const auto& p : pos) {
      Weight x = mu;
      while (true) {
        x += p.labels;
        Weight dom = e.dominant_conjugate(x).dominant;
        auto it = mult.find(dom);
        if (it == mult.end()) break;
        rhs += it->second * ip6(g, x, p.psi);
      }
    }
    rhs *= 2;
    if (lhs == 0 || rhs % lhs != 0) throw std::logic_error("Freudenthal recursion is not integral");
    mult[mu] = rhs / lhs;
  }
  WeightMultiset out;
  for (const auto& n : nodes) {
    const BigInt& m = mult[n.w];
    if (m != 0) out.entries.emplace_back(n.w, m);
  }
  std::sort(out.entries.begin(), out.entries.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

std::vector<Weight> orbit(const EmbeddedDatum& e, const Weight& w) {
  std::vector<Weight> out{w};
  std::unordered_set<Weight, IVecHash> seen{w};
  for (std::size_t q = 0; q < out.size(); ++q)
    for (int j = 0; j < e.rank(); ++j) {
      Weight y = e.reflect(out[q], j);
      if (seen.insert(y).second) out.push_back(y);
    }
  return out;
}

WeightMultiset scaled(const WeightMultiset& w, int r) {
  WeightMultiset out;
  out.entries.reserve(w.entries.size());
  for (const auto& [x, m] : w.entries) out.entries.emplace_back(r * x, m);
  std::sort(out.entries.begin(), out.entries.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

std::vector<OrbitCharacter> newton(const EmbeddedDatum& e, const OrbitCharacter& c, int m, bool alternating) {
  check_same(e, c);
  if (!c.is_nonnegative()) throw std::invalid_argument("power of a virtual character");
  const std::string key = std::string(alternating ? "L|" : "S|") + e.fingerprint() + "|" + c.canonical();
  if (auto hit = lookup(cache().powers, key); hit && static_cast<int>(hit->size()) > m)
    return {hit->begin(), hit->begin() + m + 1};

  const WeightMultiset w = weights_of(e, c);
  std::vector<WeightMultiset> adams_weights;  // index r-1
  std::vector<OrbitCharacter> out{OrbitCharacter::trivial(e)};
  for (int n = 1; n <= m; ++n) {
    adams_weights.push_back(scaled(w, n));
    OrbitCharacter acc;
    acc.datum = e.fingerprint();
    for (int r = 1; r <= n; ++r) {
      OrbitCharacter t = tensor_weights(e, out[n - r], adams_weights[r - 1]);
      if (alternating && r % 2 == 0)
        acc -= t;
      else
        acc += t;
    }
    OrbitCharacter res;
    res.datum = e.fingerprint();
    for (const auto& [hw, mult] : acc.terms) {
      if (mult % n != 0) throw std::logic_error("Newton recursion is not integral");
      res.add(hw, mult / n);
    }
    if (!res.is_nonnegative()) throw std::logic_error("negative multiplicity in a symmetric or exterior power");
    out.push_back(std::move(res));
  }
  store(cache().powers, key, std::make_shared<const std::vector<OrbitCharacter>>(out));
  return out;
}

}  // namespace

// ---- containers ---------------------------------------------------------

BigInt WeightMultiset::total() const {
  BigInt s = 0;
  for (const auto& [w, m] : entries) s += m;
  return s;
}

BigInt WeightMultiset::at(const Weight& w) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), w,
                             [](const auto& e, const Weight& x) { return e.first < x; });
  return (it != entries.end() && it->first == w) ? it->second : BigInt(0);
}

OrbitCharacter OrbitCharacter::irreducible(const EmbeddedDatum& e, const Weight& hw) {
  if (!e.is_dominant(hw)) throw std::invalid_argument("highest weight is not dominant: " + hw.str());
  OrbitCharacter c;
  c.datum = e.fingerprint();
  c.terms[hw] = 1;
  return c;
}

OrbitCharacter OrbitCharacter::trivial(const EmbeddedDatum& e) { return irreducible(e, Weight(e.ambient_rank())); }

void OrbitCharacter::add(const Weight& hw, const BigInt& mult) {
  if (mult == 0) return;
  auto [it, fresh] = terms.emplace(hw, mult);
  if (!fresh) {
    it->second += mult;
    if (it->second == 0) terms.erase(it);
  }
}

OrbitCharacter& OrbitCharacter::operator+=(const OrbitCharacter& o) {
  if (datum.empty()) datum = o.datum;
  for (const auto& [w, m] : o.terms) add(w, m);
  return *this;
}

OrbitCharacter& OrbitCharacter::operator-=(const OrbitCharacter& o) {
  if (datum.empty()) datum = o.datum;
  for (const auto& [w, m] : o.terms) add(w, -m);
  return *this;
}

bool OrbitCharacter::is_nonnegative() const {
  return std::all_of(terms.begin(), terms.end(), [](const auto& t) { return t.second > 0; });
}

std::string OrbitCharacter::canonical() const {
  std::ostringstream os;
  for (const auto& [w, m] : terms) os << w.str() << ':' << m << ';';
  return os.str();
}

// ---- kernels ------------------------------------------------------------

BigInt weyl_dim(const EmbeddedDatum& e, const Weight& hw) { return e.weyl_dim(hw); }

BigInt dimension(const EmbeddedDatum& e, const OrbitCharacter& c) {
  check_same(e, c);
  BigInt s = 0;
  for (const auto& [w, m] : c.terms) s += m * e.weyl_polynomial(w);
  return s;
}

WeightMultiset dominant_weights(const EmbeddedDatum& e, const Weight& hw) {
  if (!e.is_dominant(hw)) throw std::invalid_argument("highest weight is not dominant: " + hw.str());
  const std::string key = "F|" + e.fingerprint() + "|" + hw.str();
  if (auto hit = lookup(cache().dominant, key)) return *hit;
  auto res = std::make_shared<const WeightMultiset>(compute_dominant(e, hw));
  store(cache().dominant, key, res);
  return *res;
}

WeightMultiset freudenthal(const EmbeddedDatum& e, const Weight& hw) {
  const WeightMultiset dom = dominant_weights(e, hw);
  WeightMultiset out;
  for (const auto& [w, m] : dom.entries)
    for (const Weight& x : orbit(e, w)) out.entries.emplace_back(x, m);
  std::sort(out.entries.begin(), out.entries.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

WeightMultiset weights_of(const EmbeddedDatum& e, const OrbitCharacter& c) {
  check_same(e, c);
  if (!c.is_nonnegative()) throw std::invalid_argument("weights of a virtual character");
  std::map<Weight, BigInt> acc;
  for (const auto& [hw, m] : c.terms)
    for (const auto& [w, k] : freudenthal(e, hw).entries) acc[w] += m * k;
  WeightMultiset out;
  for (auto& [w, m] : acc) out.entries.emplace_back(w, std::move(m));
  return out;
}

OrbitCharacter tensor_weights(const EmbeddedDatum& e, const OrbitCharacter& a, const WeightMultiset& w) {
  check_same(e, a);
  OrbitCharacter out;
  out.datum = e.fingerprint();
  for (const auto& [hw, m] : a.terms)
    for (const auto& [x, k] : w.entries) {
      DominantResult r = e.dot_dominant(hw + x);
      if (r.singular) continue;
      out.add(r.dominant, r.sign() * m * k);
    }
  return out;
}

OrbitCharacter character_of(const EmbeddedDatum& e, const WeightMultiset& w) {
  return tensor_weights(e, OrbitCharacter::trivial(e), w);
}

OrbitCharacter tensor(const EmbeddedDatum& e, const OrbitCharacter& a, const OrbitCharacter& b) {
  check_same(e, a);
  check_same(e, b);
  if (!a.is_nonnegative() || !b.is_nonnegative()) throw std::invalid_argument("tensor of a virtual character");
  // expand the smaller factor into weights
  if (dimension(e, b) <= dimension(e, a)) return tensor_weights(e, a, weights_of(e, b));
  return tensor_weights(e, b, weights_of(e, a));
}

OrbitCharacter adams(const EmbeddedDatum& e, const OrbitCharacter& c, int r) {
  if (r < 1) throw std::invalid_argument("Adams operation needs r >= 1");
  return character_of(e, scaled(weights_of(e, c), r));
}

std::vector<OrbitCharacter> sym_powers(const EmbeddedDatum& e, const OrbitCharacter& c, int m) {
  if (m < 0) throw std::invalid_argument("negative power");
  return newton(e, c, m, false);
}

std::vector<OrbitCharacter> alt_powers(const EmbeddedDatum& e, const OrbitCharacter& c, int m) {
  if (m < 0) throw std::invalid_argument("negative power");
  return newton(e, c, m, true);
}

OrbitCharacter sym_power(const EmbeddedDatum& e, const OrbitCharacter& c, int m) { return sym_powers(e, c, m).back(); }

OrbitCharacter alt_power(const EmbeddedDatum& e, const OrbitCharacter& c, int m) { return alt_powers(e, c, m).back(); }

BigInt trivial_multiplicity(const EmbeddedDatum& e, const OrbitCharacter& c) {
  check_same(e, c);
  BigInt s = 0;
  for (const auto& [w, m] : c.terms) {
    bool zero = true;
    for (int j = 0; j < e.rank() && zero; ++j) zero = e.pairing(w, j) == 0;
    if (zero) s += m;
  }
  return s;
}

void clear_kernel_cache() {
  std::unique_lock lock(cache().mu);
  cache().dominant.clear();
  cache().powers.clear();
}

std::size_t kernel_cache_size() {
  std::shared_lock lock(cache().mu);
  return cache().dominant.size() + cache().powers.size();
}

}  // namespace bds
