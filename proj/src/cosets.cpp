#include "modgroup/cosets.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <sstream>

namespace modgroup {

int CosetTable::act(int coset, Letter l) const {
  switch (l) {
    case Letter::S: return s[static_cast<std::size_t>(coset)];
    case Letter::U: return u[static_cast<std::size_t>(coset)];
    case Letter::U2: return u[static_cast<std::size_t>(u[static_cast<std::size_t>(coset)])];
    default: throw std::invalid_argument("CosetTable::act: PSL letter expected");
  }
}

int CosetTable::act(int coset, const GeneratorWord& w) const {
  if (w.alphabet() != Alphabet::psl) throw std::invalid_argument("CosetTable::act: PSL word expected");
  for (Letter l : w.letters()) coset = act(coset, l);
  return coset;
}

rs::PermAction CosetTable::action() const { return rs::PermAction({s, u}); }

void check_invariants(const CosetTable& t) {
  int n = t.size();
  if (n == 0 || t.u.size() != t.s.size()) throw std::logic_error("coset table: empty or ragged");
  for (int c = 0; c < n; ++c) {
    int sc = t.s[static_cast<std::size_t>(c)];
    int uc = t.u[static_cast<std::size_t>(c)];
    if (sc < 0 || sc >= n || uc < 0 || uc >= n) throw std::logic_error("coset table: entry out of range");
  }
  for (int c = 0; c < n; ++c) {
    if (t.act(c, Letter::S) == c) continue;
    if (t.act(t.act(c, Letter::S), Letter::S) != c) throw std::logic_error("coset table: S^2 != 1");
  }
  for (int c = 0; c < n; ++c)
    if (t.act(t.act(c, Letter::U2), Letter::U) != c) throw std::logic_error("coset table: U^3 != 1");
  // Permutation and transitivity checks.
  (void)rs::bfs_transversal(t.action());
}

namespace {

CosetTable renumber_bfs(const std::vector<int>& s, const std::vector<int>& u,
                        const std::vector<int>& u_inv, Provenance provenance) {
  std::size_t n = s.size();
  std::vector<int> order{0};
  std::vector<int> fresh(n, -1);
  fresh[0] = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    int c = order[head];
    for (const auto* col : {&s, &u, &u_inv}) {
      int d = (*col)[static_cast<std::size_t>(c)];
      if (fresh[static_cast<std::size_t>(d)] != -1) continue;
      fresh[static_cast<std::size_t>(d)] = static_cast<int>(order.size());
      order.push_back(d);
    }
  }
  if (order.size() != n) throw std::logic_error("coset table: not transitive");
  CosetTable out;
  out.provenance = provenance;
  out.s.resize(n);
  out.u.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    int c = order[i];
    out.s[i] = fresh[static_cast<std::size_t>(s[static_cast<std::size_t>(c)])];
    out.u[i] = fresh[static_cast<std::size_t>(u[static_cast<std::size_t>(c)])];
  }
  return out;
}

}  // namespace

CosetTable standardized(const CosetTable& t) {
  std::vector<int> u_inv(t.u.size());
  for (std::size_t c = 0; c < t.u.size(); ++c) u_inv[static_cast<std::size_t>(t.u[c])] = static_cast<int>(c);
  return renumber_bfs(t.s, t.u, u_inv, t.provenance);
}

// ---------------------------------------------------------------------------
// Todd-Coxeter

namespace {

// Columns: 0 = S (an involution), 1 = U, 2 = U^-1.
constexpr std::array<int, 3> kInverseColumn{0, 2, 1};

class Enumerator {
 public:
  explicit Enumerator(std::size_t ceiling) : ceiling_(ceiling) { new_coset(); }

  CosetTable run(std::span<const GeneratorWord> subgroup_generators) {
    const std::vector<std::vector<int>> relators{{0, 0}, {1, 1, 1}};
    for (const GeneratorWord& w : subgroup_generators) {
      std::vector<int> cols = columns_of(w);
      if (!cols.empty()) scan_and_fill(0, cols);
    }
    for (std::size_t c = 0; c < table_.size(); ++c) {
      if (n_live_ > ceiling_) {
        lookahead(relators);
        if (n_live_ > ceiling_) throw CeilingExceeded(ceiling_);
      }
      if (!live(c)) continue;
      for (const auto& r : relators) {
        scan_and_fill(static_cast<int>(c), r);
        if (!live(c)) break;
      }
      if (!live(c)) continue;
      for (int x = 0; x < 3; ++x)
        if (table_[c][static_cast<std::size_t>(x)] < 0) define(static_cast<int>(c), x);
    }
    return compact();
  }

 private:
  static std::vector<int> columns_of(const GeneratorWord& w) {
    if (w.alphabet() != Alphabet::psl) throw std::invalid_argument("enumerate: PSL words expected");
    std::vector<int> cols;
    for (Letter l : w.letters()) {
      if (l == Letter::S) cols.push_back(0);
      if (l == Letter::U) cols.push_back(1);
      if (l == Letter::U2) cols.push_back(2);
    }
    return cols;
  }

  bool live(std::size_t c) const { return parent_[c] == static_cast<int>(c); }

  int new_coset() {
    int id = static_cast<int>(table_.size());
    table_.push_back({-1, -1, -1});
    parent_.push_back(id);
    ++n_live_;
    return id;
  }

  void define(int c, int x) {
    int d = new_coset();
    table_[static_cast<std::size_t>(c)][static_cast<std::size_t>(x)] = d;
    table_[static_cast<std::size_t>(d)][static_cast<std::size_t>(kInverseColumn[static_cast<std::size_t>(x)])] = c;
  }

  int& entry(int c, int x) { return table_[static_cast<std::size_t>(c)][static_cast<std::size_t>(x)]; }

  // Scans w from c in both directions; fills the gap by new definitions when
  // `fill` is set, otherwise only records deductions and coincidences.
  void scan(int c, const std::vector<int>& w, bool fill) {
    int f = c, b = c;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    for (;;) {
      while (i <= j && entry(f, w[static_cast<std::size_t>(i)]) >= 0) {
        f = entry(f, w[static_cast<std::size_t>(i)]);
        ++i;
      }
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && entry(b, kInverseColumn[static_cast<std::size_t>(w[static_cast<std::size_t>(j)])]) >= 0) {
        b = entry(b, kInverseColumn[static_cast<std::size_t>(w[static_cast<std::size_t>(j)])]);
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        int x = w[static_cast<std::size_t>(i)];
        entry(f, x) = b;
        entry(b, kInverseColumn[static_cast<std::size_t>(x)]) = f;
        return;
      }
      if (!fill) return;
      define(f, w[static_cast<std::size_t>(i)]);
    }
  }

  void scan_and_fill(int c, const std::vector<int>& w) { scan(c, w, true); }

  void lookahead(const std::vector<std::vector<int>>& relators) {
    for (std::size_t k = 0; k < table_.size(); ++k) {
      for (const auto& r : relators) {
        if (!live(k)) break;
        scan(static_cast<int>(k), r, false);
      }
    }
  }

  int rep(int k) {
    int r = k;
    while (parent_[static_cast<std::size_t>(r)] != r) r = parent_[static_cast<std::size_t>(r)];
    while (parent_[static_cast<std::size_t>(k)] != r) {
      int next = parent_[static_cast<std::size_t>(k)];
      parent_[static_cast<std::size_t>(k)] = r;
      k = next;
    }
    return r;
  }

  void merge(int k, int l, std::vector<int>& queue) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    if (k > l) std::swap(k, l);
    parent_[static_cast<std::size_t>(l)] = k;
    queue.push_back(l);
    --n_live_;
  }

  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      int e = queue[i];
      for (int x = 0; x < 3; ++x) {
        int f = entry(e, x);
        if (f < 0) continue;
        int xi = kInverseColumn[static_cast<std::size_t>(x)];
        if (entry(f, xi) == e) entry(f, xi) = -1;
        int e1 = rep(e);
        int f1 = rep(f);
        if (entry(e1, x) >= 0) {
          merge(f1, entry(e1, x), queue);
        } else if (entry(f1, xi) >= 0) {
          merge(e1, entry(f1, xi), queue);
        } else {
          entry(e1, x) = f1;
          entry(f1, xi) = e1;
        }
      }
    }
  }

  CosetTable compact() {
    std::vector<int> fresh(table_.size(), -1);
    int n = 0;
    for (std::size_t c = 0; c < table_.size(); ++c)
      if (live(c)) fresh[c] = n++;
    std::vector<int> s(static_cast<std::size_t>(n)), u(static_cast<std::size_t>(n)),
        ui(static_cast<std::size_t>(n));
    for (std::size_t c = 0; c < table_.size(); ++c) {
      if (!live(c)) continue;
      std::size_t k = static_cast<std::size_t>(fresh[c]);
      s[k] = fresh[static_cast<std::size_t>(rep(table_[c][0]))];
      u[k] = fresh[static_cast<std::size_t>(rep(table_[c][1]))];
      ui[k] = fresh[static_cast<std::size_t>(rep(table_[c][2]))];
    }
    CosetTable t = renumber_bfs(s, u, ui, Provenance::enumerated);
    check_invariants(t);
    return t;
  }

  std::size_t ceiling_;
  std::size_t n_live_ = 0;
  std::vector<std::array<int, 3>> table_;
  std::vector<int> parent_;
};

}  // namespace

CosetTable enumerate(std::span<const GeneratorWord> subgroup_generators, EnumerationOptions options) {
  Enumerator e(options.ceiling);
  return e.run(subgroup_generators);
}

// ---------------------------------------------------------------------------
// Congruence action

namespace {

long mod(long x, long m) {
  long r = x % m;
  return r < 0 ? r + m : r;
}

using RowPair = std::array<long, 4>;  // top row mod m, bottom row mod n

// Builds the orbit of `base` under S, U by BFS; `canon` picks the class
// representative of a state.
template <class Act, class Canon>
CosetTable orbit_table(const RowPair& base, Act act, Canon canon) {
  std::map<RowPair, int> index;
  std::vector<RowPair> states;
  auto lookup = [&](const RowPair& st) {
    RowPair key = canon(st);
    auto [it, inserted] = index.emplace(key, static_cast<int>(states.size()));
    if (inserted) states.push_back(key);
    return it->second;
  };
  lookup(base);
  std::vector<int> s, u;
  for (std::size_t head = 0; head < states.size(); ++head) {
    RowPair st = states[head];
    RowPair st_s = act(st, gens::S());
    RowPair st_u = act(st, gens::U());
    int is = lookup(st_s);
    int iu = lookup(st_u);
    (void)lookup(act(st_u, gens::U()));
    s.push_back(is);
    u.push_back(iu);
  }
  CosetTable t;
  t.s = std::move(s);
  t.u = std::move(u);
  t.provenance = Provenance::congruence_action;
  t = standardized(t);
  check_invariants(t);
  return t;
}

// Row vector (x y) times a small integer matrix.
std::array<long, 2> row_times(long x, long y, const Mat2& g) {
  long a = g.a().get_si(), b = g.b().get_si(), c = g.c().get_si(), d = g.d().get_si();
  return {x * a + y * c, x * b + y * d};
}

}  // namespace

CosetTable congruence_table(long m, long n) {
  check_level(m, n);
  auto act = [m, n](const RowPair& st, const Mat2& g) {
    auto top = row_times(st[0], st[1], g);
    auto bot = row_times(st[2], st[3], g);
    return RowPair{mod(top[0], m), mod(top[1], m), mod(bot[0], n), mod(bot[1], n)};
  };
  auto canon = [m, n](const RowPair& st) {
    RowPair neg{mod(-st[0], m), mod(-st[1], m), mod(-st[2], n), mod(-st[3], n)};
    return std::min(st, neg);
  };
  return orbit_table(RowPair{mod(1, m), 0, 0, mod(1, n)}, act, canon);
}

CosetTable gamma0_table(long m) {
  check_level(m, 1);
  std::vector<long> units;
  for (long k = 1; k <= m; ++k)
    if (std::gcd(k, m) == 1) units.push_back(k % m);
  auto act = [m](const RowPair& st, const Mat2& g) {
    auto top = row_times(st[0], st[1], g);
    return RowPair{mod(top[0], m), mod(top[1], m), 0, 0};
  };
  auto canon = [m, units](const RowPair& st) {
    RowPair best = st;
    for (long k : units) best = std::min(best, RowPair{mod(k * st[0], m), mod(k * st[1], m), 0, 0});
    return best;
  };
  return orbit_table(RowPair{mod(1, m), 0, 0, 0}, act, canon);
}

bool tables_isomorphic(const CosetTable& t1, const CosetTable& t2) {
  if (t1.size() != t2.size()) return false;
  std::size_t n = static_cast<std::size_t>(t1.size());
  std::vector<int> fwd(n, -1), bwd(n, -1);
  fwd[0] = 0;
  bwd[0] = 0;
  std::vector<int> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int c = queue[head];
    int d = fwd[static_cast<std::size_t>(c)];
    for (Letter l : {Letter::S, Letter::U}) {
      int c2 = t1.act(c, l);
      int d2 = t2.act(d, l);
      int& f = fwd[static_cast<std::size_t>(c2)];
      int& b = bwd[static_cast<std::size_t>(d2)];
      if (f == -1 && b == -1) {
        f = d2;
        b = c2;
        queue.push_back(c2);
      } else if (f != d2 || b != c2) {
        return false;
      }
    }
  }
  return queue.size() == n;
}

std::string serialize(const CosetTable& t) {
  std::string out = "cosets " + std::to_string(t.size()) + "\n";
  for (int c = 0; c < t.size(); ++c)
    out += std::to_string(t.s[static_cast<std::size_t>(c)]) + " " +
           std::to_string(t.u[static_cast<std::size_t>(c)]) + "\n";
  return out;
}

CosetTable parse_table(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string header;
  long n = 0;
  if (!(in >> header >> n) || header != "cosets" || n <= 0)
    throw std::invalid_argument("parse_table: expected 'cosets N' header");
  CosetTable t;
  t.provenance = Provenance::parsed;
  t.s.resize(static_cast<std::size_t>(n));
  t.u.resize(static_cast<std::size_t>(n));
  for (long c = 0; c < n; ++c)
    if (!(in >> t.s[static_cast<std::size_t>(c)] >> t.u[static_cast<std::size_t>(c)]))
      throw std::invalid_argument("parse_table: truncated table");
  check_invariants(t);
  return t;
}

}  // namespace modgroup
