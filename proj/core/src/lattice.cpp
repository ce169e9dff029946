#include "bds/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <unordered_set>

namespace bds {

namespace {

const char* family_letters = "ABCDEFG";

int min_rank(Family f) {
  switch (f) {
    case Family::A: return 1;
    case Family::B: return 2;
    case Family::C: return 2;
    case Family::D: return 4;
    case Family::E: return 6;
    case Family::F: return 4;
    case Family::G: return 2;
  }
  return 1;
}

int max_rank(Family f) {
  switch (f) {
    case Family::E: return 8;
    case Family::F: return 4;
    case Family::G: return 2;
    default: return kMaxRank;
  }
}

// Bourbaki edges (i, j, long end, multiplicity) for one simple type, 0-based.
struct Edge {
  int a, b;
  int long_end;  // -1 when simply laced
  int mult;
};

std::vector<Edge> bourbaki_edges(SimpleType t) {
  const int n = t.rank;
  std::vector<Edge> e;
  auto chain = [&](int from, int to) {
    for (int i = from; i + 1 <= to; ++i) e.push_back({i, i + 1, -1, 1});
  };
  switch (t.family) {
    case Family::A:
      chain(0, n - 1);
      break;
    case Family::B:
      chain(0, n - 2);
      e.push_back({n - 2, n - 1, n - 2, 2});
      break;
    case Family::C:
      chain(0, n - 2);
      e.push_back({n - 2, n - 1, n - 1, 2});
      break;
    case Family::D:
      chain(0, n - 2);
      e.push_back({n - 3, n - 1, -1, 1});
      break;
    case Family::E:
      e.push_back({0, 2, -1, 1});
      e.push_back({1, 3, -1, 1});
      chain(2, n - 1);
      break;
    case Family::F:
      e.push_back({0, 1, -1, 1});
      e.push_back({1, 2, 1, 2});
      e.push_back({2, 3, -1, 1});
      break;
    case Family::G:
      e.push_back({0, 1, 1, 3});
      break;
  }
  return e;
}

IntMatrix cartan_of(SimpleType t) {
  const int n = t.rank;
  IntMatrix c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  for (const Edge& e : bourbaki_edges(t)) {
    if (e.long_end < 0) {
      c[e.a][e.b] = c[e.b][e.a] = -1;
    } else {
      const int l = e.long_end;
      const int s = (l == e.a) ? e.b : e.a;
      c[l][s] = -e.mult;
      c[s][l] = -1;
    }
  }
  return c;
}

QVec norms_of(SimpleType t) {
  QVec out(t.rank, Rational(1));
  switch (t.family) {
    case Family::B: out[t.rank - 1] = Rational(1, 2); break;
    case Family::C:
      for (int i = 0; i + 1 < t.rank; ++i) out[i] = Rational(1, 2);
      break;
    case Family::F: out[2] = out[3] = Rational(1, 2); break;
    case Family::G: out[0] = Rational(1, 3); break;
    default: break;
  }
  return out;
}

// Exact inverse of an integer matrix; throws when singular.
std::vector<QVec> inverse(const IntMatrix& m) {
  const int n = static_cast<int>(m.size());
  std::vector<QVec> a(n, QVec(2 * n, Rational(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::invalid_argument("singular Cartan matrix");
    std::swap(a[piv], a[col]);
    const Rational p = a[col][col];
    for (auto& x : a[col]) x /= p;
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (int k = 0; k < 2 * n; ++k) a[r][k] -= f * a[col][k];
    }
  }
  std::vector<QVec> out(n, QVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i][j] = a[i][n + j];
  return out;
}

int height(const RootVec& r) {
  int h = 0;
  for (int i = 0; i < r.rank(); ++i) h += r[i];
  return h;
}

}  // namespace

// ---- SimpleType ---------------------------------------------------------

void SimpleType::validate() const {
  if (rank < min_rank(family) || rank > max_rank(family))
    throw std::invalid_argument("invalid rank for type " + std::string(1, static_cast<char>(family)) +
                                std::to_string(rank));
}

std::string SimpleType::name() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }

SimpleType SimpleType::parse(const std::string& text) {
  if (text.size() < 2) throw std::invalid_argument("bad type: '" + text + "'");
  const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (std::string(family_letters).find(f) == std::string::npos)
    throw std::invalid_argument("bad type: '" + text + "'");
  std::size_t used = 0;
  int r = 0;
  try {
    r = std::stoi(text.substr(1), &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad type: '" + text + "'");
  }
  if (used + 1 != text.size()) throw std::invalid_argument("bad type: '" + text + "'");
  SimpleType t{static_cast<Family>(f), r};
  t.validate();
  return t;
}

long SimpleType::dimension() const {
  const long n = rank;
  switch (family) {
    case Family::A: return n * (n + 2);
    case Family::B:
    case Family::C: return n * (2 * n + 1);
    case Family::D: return n * (2 * n - 1);
    case Family::E: return n == 6 ? 78 : n == 7 ? 133 : 248;
    case Family::F: return 52;
    case Family::G: return 14;
  }
  return 0;
}

std::string type_string(std::span<const SimpleType> types) {
  std::string s;
  for (const auto& t : types) s += t.name();
  return s;
}

// ---- RootDatum ----------------------------------------------------------

std::vector<RootVec> positive_roots_from_cartan(const IntMatrix& c) {
  const int n = static_cast<int>(c.size());
  if (n == 0) return {};
  if (n > kMaxRank) throw std::invalid_argument("rank too large");
  std::vector<RootVec> out;
  std::unordered_set<RootVec, IVecHash> seen;
  std::vector<RootVec> level;
  for (int i = 0; i < n; ++i) {
    RootVec e(n);
    e[i] = 1;
    level.push_back(e);
    seen.insert(e);
  }
  constexpr std::size_t kLimit = 20000;
  while (!level.empty()) {
    std::sort(level.begin(), level.end());
    out.insert(out.end(), level.begin(), level.end());
    if (out.size() > kLimit) throw std::invalid_argument("Cartan matrix is not of finite type");
    std::vector<RootVec> next;
    for (const RootVec& a : level) {
      for (int j = 0; j < n; ++j) {
        int pair = 0;
        for (int i = 0; i < n; ++i) pair += a[i] * c[i][j];
        int p = 0;
        RootVec down = a;
        while (true) {
          down[j] -= 1;
          if (down[j] < 0 || !seen.count(down)) break;
          ++p;
        }
        if (p - pair > 0) {
          RootVec up = a;
          up[j] += 1;
          if (seen.insert(up).second) next.push_back(up);
        }
      }
    }
    level = std::move(next);
  }
  return out;
}

std::shared_ptr<const RootDatum> RootDatum::build(SimpleType t) { return build(std::vector<SimpleType>{t}); }

std::shared_ptr<const RootDatum> RootDatum::build(const std::vector<SimpleType>& types) {
  int n = 0;
  for (const auto& t : types) {
    t.validate();
    n += t.rank;
  }
  if (n > kMaxRank) throw std::invalid_argument("total rank too large");
  IntMatrix c(n, std::vector<int>(n, 0));
  QVec norms;
  int off = 0;
  for (const auto& t : types) {
    IntMatrix b = cartan_of(t);
    for (int i = 0; i < t.rank; ++i)
      for (int j = 0; j < t.rank; ++j) c[off + i][off + j] = b[i][j];
    QVec nb = norms_of(t);
    norms.insert(norms.end(), nb.begin(), nb.end());
    off += t.rank;
  }
  return from_cartan(std::move(c), std::move(norms), types);
}

std::shared_ptr<const RootDatum> RootDatum::from_cartan(IntMatrix cartan, QVec norms,
                                                        std::vector<SimpleType> types) {
  if (norms.size() != cartan.size()) throw std::invalid_argument("norms/cartan size mismatch");
  std::shared_ptr<RootDatum> d(new RootDatum());
  d->types_ = std::move(types);
  d->cartan_ = std::move(cartan);
  d->norms_ = std::move(norms);
  d->finish();
  return d;
}

void RootDatum::finish() {
  const int n = rank();
  positive_ = positive_roots_from_cartan(cartan_);
  fundamental_ = n ? inverse(cartan_) : std::vector<QVec>{};
  form_.assign(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) form_[i][j] = fundamental_[j][i] * norms_[i];
  if (types_.size() == 1) {
    fingerprint_ = types_[0].name();
  } else {
    std::ostringstream os;
    for (std::size_t k = 0; k < types_.size(); ++k) os << (k ? "x" : "") << types_[k].name();
    os << ':';
    for (const auto& row : cartan_)
      for (int x : row) os << x << ',';
    fingerprint_ = os.str();
  }
}

bool RootDatum::is_root(const RootVec& r) const {
  if (r.rank() != rank() || r.is_zero()) return false;
  // Roots are either all-nonnegative or all-nonpositive.
  bool neg = false;
  for (int i = 0; i < r.rank(); ++i)
    if (r[i] < 0) neg = true;
  const RootVec p = neg ? -r : r;
  return std::binary_search(positive_.begin(), positive_.end(), p, [](const RootVec& x, const RootVec& y) {
    const int hx = height(x), hy = height(y);
    if (hx != hy) return hx < hy;
    return x < y;
  });
}

Weight RootDatum::labels_of(const RootVec& r) const {
  const int n = rank();
  Weight w(n);
  for (int i = 0; i < n; ++i) {
    if (r[i] == 0) continue;
    for (int j = 0; j < n; ++j) w[j] += r[i] * cartan_[i][j];
  }
  return w;
}

QVec RootDatum::to_psi(const Weight& w) const {
  QVec q(w.rank());
  for (int i = 0; i < w.rank(); ++i) q[i] = w[i];
  return to_psi(q);
}

QVec RootDatum::to_psi(const QVec& labels) const {
  const int n = rank();
  QVec out(n, Rational(0));
  for (int i = 0; i < n; ++i) {
    if (labels[i] == 0) continue;
    for (int j = 0; j < n; ++j) out[j] += labels[i] * fundamental_[i][j];
  }
  return out;
}

Rational RootDatum::half_norm(const RootVec& r) const {
  Rational s = 0;
  const int n = rank();
  for (int i = 0; i < n; ++i) {
    if (r[i] == 0) continue;
    for (int j = 0; j < n; ++j)
      if (r[j] != 0) s += Rational(r[i] * r[j] * cartan_[i][j]) * norms_[j];
  }
  return s / 2;
}

RootVec RootDatum::coroot(const RootVec& r) const {
  const Rational h = half_norm(r);
  if (h == 0) throw std::invalid_argument("coroot of zero vector");
  RootVec out(rank());
  for (int i = 0; i < rank(); ++i) {
    const Rational c = Rational(r[i]) * norms_[i] / h;
    if (boost::multiprecision::denominator(c) != 1)
      throw std::invalid_argument("coroot is not integral for " + r.str());
    out[i] = static_cast<int>(boost::multiprecision::numerator(c));
  }
  return out;
}

Rational RootDatum::inner(const Weight& a, const Weight& b) const {
  Rational s = 0;
  for (int i = 0; i < rank(); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank(); ++j)
      if (b[j] != 0) s += Rational(a[i] * b[j]) * form_[i][j];
  }
  return s;
}

Rational RootDatum::inner(const QVec& a, const QVec& b) const {
  Rational s = 0;
  for (int i = 0; i < rank(); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank(); ++j)
      if (b[j] != 0) s += a[i] * b[j] * form_[i][j];
  }
  return s;
}

Rational RootDatum::inner_root(const Weight& w, const RootVec& r) const {
  Rational s = 0;
  for (int i = 0; i < rank(); ++i) s += Rational(w[i] * r[i]) * norms_[i];
  return s;
}

int RootDatum::coroot_pairing(const Weight& w, const RootVec& r) const {
  const RootVec c = coroot(r);
  int s = 0;
  for (int i = 0; i < rank(); ++i) s += w[i] * c[i];
  return s;
}

Rational RootDatum::coroot_pairing(const QVec& labels, const RootVec& r) const {
  const RootVec c = coroot(r);
  Rational s = 0;
  for (int i = 0; i < rank(); ++i) s += labels[i] * c[i];
  return s;
}

RootVec highest_root(const RootDatum& d) {
  if (!d.is_simple()) throw std::invalid_argument("highest root needs a simple type");
  return d.positive_roots().back();
}

Weight rho(const RootDatum& d) {
  Weight w(d.rank());
  for (int i = 0; i < d.rank(); ++i) w[i] = 1;
  return w;
}

// ---- Dynkin recognition -------------------------------------------------

namespace {

std::vector<int> walk_path(const std::vector<std::vector<int>>& adj, int start, int avoid) {
  std::vector<int> out{start};
  int prev = avoid, cur = start;
  while (true) {
    int nxt = -1;
    for (int v : adj[cur])
      if (v != prev) nxt = v;
    if (nxt < 0) break;
    out.push_back(nxt);
    prev = cur;
    cur = nxt;
  }
  return out;
}

DynkinComponent recognize(const IntMatrix& c, const std::vector<int>& nodes) {
  const int n = static_cast<int>(nodes.size());
  std::map<int, std::vector<int>> adjm;
  int edges = 0;
  struct Bond { int l, s, mult; };
  std::vector<Bond> multi;
  for (int a : nodes) adjm[a];
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      const int i = nodes[x], j = nodes[y];
      if (c[i][j] == 0 && c[j][i] == 0) continue;
      if (c[i][j] == 0 || c[j][i] == 0) throw std::invalid_argument("asymmetric Cartan zero pattern");
      const int m = c[i][j] * c[j][i];
      if (m > 3 || c[i][j] > 0) throw std::invalid_argument("not of finite type");
      ++edges;
      adjm[i].push_back(j);
      adjm[j].push_back(i);
      if (m > 1) {
        if (c[i][j] == -m) multi.push_back({i, j, m});
        else if (c[j][i] == -m) multi.push_back({j, i, m});
        else throw std::invalid_argument("not of finite type");
      }
    }
  if (edges != n - 1) throw std::invalid_argument("Dynkin diagram has a cycle");
  for (int a : nodes)
    if (c[a][a] != 2) throw std::invalid_argument("Cartan diagonal must be 2");

  int maxn = nodes.empty() ? 0 : *std::max_element(nodes.begin(), nodes.end());
  std::vector<std::vector<int>> adj(maxn + 1);
  for (auto& [k, v] : adjm) {
    adj[k] = v;
    std::sort(adj[k].begin(), adj[k].end());
  }
  auto deg = [&](int v) { return static_cast<int>(adj[v].size()); };

  if (n == 1) return {{Family::A, 1}, nodes};

  if (multi.size() > 1) throw std::invalid_argument("not of finite type");
  for (int v : nodes)
    if (deg(v) > 3) throw std::invalid_argument("not of finite type");

  if (multi.size() == 1) {
    const Bond b = multi[0];
    for (int v : nodes)
      if (deg(v) > 2) throw std::invalid_argument("not of finite type");
    if (b.mult == 3) {
      if (n != 2) throw std::invalid_argument("not of finite type");
      return {{Family::G, 2}, {b.s, b.l}};
    }
    if (n == 2) return {{Family::B, 2}, {b.l, b.s}};
    if (deg(b.s) == 1) {
      // short end terminal: B_n, walk from the far end.
      std::vector<int> p = walk_path(adj, b.s, -1);
      std::reverse(p.begin(), p.end());
      return {{Family::B, n}, p};
    }
    if (deg(b.l) == 1) {
      std::vector<int> p = walk_path(adj, b.l, -1);
      std::reverse(p.begin(), p.end());
      return {{Family::C, n}, p};
    }
    if (n != 4) throw std::invalid_argument("not of finite type");
    int a = -1, d = -1;
    for (int v : adj[b.l])
      if (v != b.s) a = v;
    for (int v : adj[b.s])
      if (v != b.l) d = v;
    return {{Family::F, 4}, {a, b.l, b.s, d}};
  }

  std::vector<int> branch;
  for (int v : nodes)
    if (deg(v) == 3) branch.push_back(v);
  if (branch.empty()) {
    std::vector<int> ends;
    for (int v : nodes)
      if (deg(v) == 1) ends.push_back(v);
    std::sort(ends.begin(), ends.end());
    return {{Family::A, n}, walk_path(adj, ends[0], -1)};
  }
  if (branch.size() > 1) throw std::invalid_argument("not of finite type");
  const int br = branch[0];
  // arms as paths from the branch node outward
  std::vector<std::vector<int>> arms;
  for (int v : adj[br]) arms.push_back(walk_path(adj, v, br));
  std::sort(arms.begin(), arms.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x.back() < y.back();
  });
  const auto a0 = arms[0].size(), a1 = arms[1].size(), a2 = arms[2].size();
  if (a0 == 1 && a1 == 1) {
    // D_n: long arm reversed, branch, then the two tips
    std::vector<int> p(arms[2].rbegin(), arms[2].rend());
    if (n == 4) {
      // three equal arms: long arm is the one with the smallest tip
      std::vector<int> tips{arms[0][0], arms[1][0], arms[2][0]};
      std::sort(tips.begin(), tips.end());
      return {{Family::D, 4}, {tips[0], br, tips[1], tips[2]}};
    }
    p.push_back(br);
    std::vector<int> tips{arms[0][0], arms[1][0]};
    std::sort(tips.begin(), tips.end());
    p.push_back(tips[0]);
    p.push_back(tips[1]);
    return {{Family::D, n}, p};
  }
  if (a0 == 1 && a1 == 2 && a2 >= 2 && a2 <= 4) {
    std::vector<int> p;
    p.push_back(arms[1][1]);  // psi1
    p.push_back(arms[0][0]);  // psi2
    p.push_back(arms[1][0]);  // psi3
    p.push_back(br);          // psi4
    for (int v : arms[2]) p.push_back(v);
    return {{Family::E, n}, p};
  }
  throw std::invalid_argument("not of finite type");
}

}  // namespace

std::vector<DynkinComponent> classify_dynkin(const IntMatrix& cartan, int first) {
  const int n = static_cast<int>(cartan.size());
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> groups;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> g;
    std::queue<int> q;
    q.push(s);
    comp[s] = static_cast<int>(groups.size());
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      g.push_back(v);
      for (int w = 0; w < n; ++w)
        if (w != v && comp[w] < 0 && (cartan[v][w] != 0 || cartan[w][v] != 0)) {
          comp[w] = comp[s];
          q.push(w);
        }
    }
    std::sort(g.begin(), g.end());
    groups.push_back(g);
  }
  std::vector<DynkinComponent> out;
  for (const auto& g : groups) out.push_back(recognize(cartan, g));
  auto smallest = [](const DynkinComponent& d) { return *std::min_element(d.nodes.begin(), d.nodes.end()); };
  std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) {
    if (x.type != y.type) return x.type < y.type;
    return smallest(x) < smallest(y);
  });
  if (first >= 0 && first < n) {
    auto it = std::find_if(out.begin(), out.end(), [&](const DynkinComponent& d) {
      return std::find(d.nodes.begin(), d.nodes.end(), first) != d.nodes.end();
    });
    std::rotate(out.begin(), it, it + 1);
  }
  return out;
}

// ---- EmbeddedDatum ------------------------------------------------------

EmbeddedDatum::EmbeddedDatum(DatumPtr ambient, const std::vector<RootVec>& simple_roots,
                             std::optional<RootVec> first)
    : ambient_(std::move(ambient)) {
  const RootDatum& g = *ambient_;
  const int m = static_cast<int>(simple_roots.size());
  for (const auto& r : simple_roots)
    if (r.rank() != g.rank() || !g.is_root(r)) throw std::invalid_argument("not a root: " + r.str());
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      const RootVec d = simple_roots[a] - simple_roots[b];
      if (d.is_zero() || g.is_root(d)) throw std::invalid_argument("not a simple system");
    }
  IntMatrix c(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) c[a][b] = g.coroot_pairing(g.labels_of(simple_roots[a]), simple_roots[b]);
  int first_idx = -1;
  if (first) {
    for (int a = 0; a < m; ++a)
      if (simple_roots[a] == *first) first_idx = a;
    if (first_idx < 0) throw std::invalid_argument("designated root not among the simple roots");
  }
  components_ = classify_dynkin(c, first_idx);

  std::vector<int> order;
  std::vector<SimpleType> types;
  for (auto& comp : components_) {
    types.push_back(comp.type);
    const int base = static_cast<int>(order.size());
    for (int v : comp.nodes) order.push_back(v);
    for (std::size_t k = 0; k < comp.nodes.size(); ++k) comp.nodes[k] = base + static_cast<int>(k);
  }
  IntMatrix lc(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) lc[a][b] = c[order[a]][order[b]];
  QVec norms(m);
  component_of_.assign(m, 0);
  for (std::size_t k = 0; k < components_.size(); ++k) {
    Rational mx = 0;
    for (int v : components_[k].nodes) mx = std::max(mx, g.half_norm(simple_roots[order[v]]));
    for (int v : components_[k].nodes) {
      norms[v] = g.half_norm(simple_roots[order[v]]) / mx;
      component_of_[v] = static_cast<int>(k);
    }
  }
  for (int v : order) simple_.push_back(simple_roots[v]);
  local_ = RootDatum::from_cartan(std::move(lc), std::move(norms), std::move(types));
  finish();
}

EmbeddedDatum EmbeddedDatum::whole(DatumPtr ambient) {
  std::vector<RootVec> s;
  for (int i = 0; i < ambient->rank(); ++i) {
    RootVec e(ambient->rank());
    e[i] = 1;
    s.push_back(e);
  }
  return EmbeddedDatum(std::move(ambient), s);
}

void EmbeddedDatum::finish() {
  const RootDatum& g = *ambient_;
  const int n = g.rank();
  for (const auto& s : simple_) {
    simple_labels_.push_back(g.labels_of(s));
    simple_coroots_.push_back(g.coroot(s));
  }
  two_rho_ = Weight(n);
  for (const RootVec& lr : local_->positive_roots()) {
    RootVec psi(n);
    for (int a = 0; a < rank(); ++a)
      if (lr[a]) psi += lr[a] * simple_[a];
    const RootVec lco = local_->coroot(lr);
    int ch = 0;
    for (int a = 0; a < rank(); ++a) ch += lco[a];
    PositiveRoot p{psi, g.labels_of(psi), g.coroot(psi), ch};
    two_rho_ += p.labels;
    positive_.push_back(p);
  }
  // longest word: drive 2 rho to the antidominant chamber
  Weight x = two_rho_;
  while (true) {
    int j = -1;
    for (int a = 0; a < rank(); ++a)
      if (pairing(x, a) > 0) {
        j = a;
        break;
      }
    if (j < 0) break;
    x = reflect(x, j);
    w0_word_.push_back(j);
  }
  std::ostringstream os;
  os << g.fingerprint() << '|';
  for (const auto& s : simple_) os << s.str();
  fingerprint_ = os.str();
}

int EmbeddedDatum::pairing(const Weight& x, int j) const {
  const RootVec& c = simple_coroots_[j];
  int s = 0;
  for (int i = 0; i < x.rank(); ++i) s += x[i] * c[i];
  return s;
}

std::vector<int> EmbeddedDatum::local_labels(const Weight& x) const {
  std::vector<int> out(rank());
  for (int j = 0; j < rank(); ++j) out[j] = pairing(x, j);
  return out;
}

bool EmbeddedDatum::is_dominant(const Weight& x) const {
  for (int j = 0; j < rank(); ++j)
    if (pairing(x, j) < 0) return false;
  return true;
}

Weight EmbeddedDatum::reflect(const Weight& x, int j) const {
  const int p = pairing(x, j);
  if (p == 0) return x;
  Weight out = x;
  out -= p * simple_labels_[j];
  return out;
}

DominantResult EmbeddedDatum::dominant_conjugate(const Weight& x) const {
  DominantResult r{x, 0, false};
  while (true) {
    int j = -1;
    for (int a = 0; a < rank(); ++a)
      if (pairing(r.dominant, a) < 0) {
        j = a;
        break;
      }
    if (j < 0) break;
    r.dominant = reflect(r.dominant, j);
    ++r.length;
  }
  for (int a = 0; a < rank(); ++a)
    if (pairing(r.dominant, a) == 0) r.singular = true;
  return r;
}

DominantResult EmbeddedDatum::dot_dominant(const Weight& x) const {
  Weight y = 2 * x;
  y += two_rho_;
  DominantResult r = dominant_conjugate(y);
  Weight z = r.dominant - two_rho_;
  for (int i = 0; i < z.rank(); ++i) z[i] /= 2;
  r.dominant = z;
  return r;
}

Weight EmbeddedDatum::longest_element_image(const Weight& x) const {
  Weight y = x;
  for (int j : w0_word_) y = reflect(y, j);
  return y;
}

BigInt EmbeddedDatum::weyl_polynomial(const Weight& x) const {
  BigInt num = 1, den = 1;
  for (const auto& p : positive_) {
    int s = 0;
    for (int i = 0; i < x.rank(); ++i) s += x[i] * p.coroot[i];
    num *= (s + p.coroot_height);
    den *= p.coroot_height;
  }
  if (num % den != 0) throw std::logic_error("Weyl polynomial is not integral");
  return num / den;
}

BigInt EmbeddedDatum::weyl_dim(const Weight& x) const {
  if (!is_dominant(x)) throw std::invalid_argument("weight is not dominant: " + x.str());
  return weyl_polynomial(x);
}

DominantResult dominant_conjugate(const RootDatum& d, const Weight& w) {
  // Cheap enough to rebuild; callers on hot paths hold an EmbeddedDatum.
  auto sh = RootDatum::from_cartan(d.cartan_matrix(), [&] {
    QVec q;
    for (int i = 0; i < d.rank(); ++i) q.push_back(d.norm(i));
    return q;
  }(), d.types());
  return EmbeddedDatum::whole(sh).dominant_conjugate(w);
}

Weight longest_element_image(const RootDatum& d, const Weight& w) {
  QVec q;
  for (int i = 0; i < d.rank(); ++i) q.push_back(d.norm(i));
  auto sh = RootDatum::from_cartan(d.cartan_matrix(), q, d.types());
  return EmbeddedDatum::whole(sh).longest_element_image(w);
}

std::pair<DatumPtr, std::vector<RootVec>> sub_root_datum(const DatumPtr& d, const std::vector<RootVec>& simple_set) {
  EmbeddedDatum e(d, simple_set);
  return {e.local_ptr(), e.simple_roots()};
}

}  // namespace bds
