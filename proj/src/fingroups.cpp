#include "modgroup/fingroups.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>

namespace modgroup {

FiniteGroup::FiniteGroup(std::string name, int order, std::vector<int> table)
    : name_(std::move(name)), order_(order), table_(std::move(table)) {}

void FiniteGroup::finish() {
  identity_ = -1;
  for (int e = 0; e < order_ && identity_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < order_ && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw std::logic_error("FiniteGroup: no identity");
  inverse_.assign(static_cast<std::size_t>(order_), -1);
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b)
      if (mul(a, b) == identity_) inverse_[static_cast<std::size_t>(a)] = b;
  check_axioms();
}

void FiniteGroup::check_axioms() const {
  for (int a = 0; a < order_; ++a) {
    if (inverse_[static_cast<std::size_t>(a)] < 0 || mul(a, inv(a)) != identity_ || mul(inv(a), a) != identity_)
      throw std::logic_error("FiniteGroup: missing inverse");
    for (int b = 0; b < order_; ++b) {
      int ab = mul(a, b);
      if (ab < 0 || ab >= order_) throw std::logic_error("FiniteGroup: product out of range");
      for (int c = 0; c < order_; ++c)
        if (mul(ab, c) != mul(a, mul(b, c))) throw std::logic_error("FiniteGroup: not associative");
    }
  }
}

FiniteGroup FiniteGroup::cyclic(int m) {
  if (m < 1) throw std::invalid_argument("cyclic: order must be positive");
  std::vector<int> t(static_cast<std::size_t>(m * m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) t[static_cast<std::size_t>(a * m + b)] = (a + b) % m;
  FiniteGroup g("cyclic:" + std::to_string(m), m, std::move(t));
  g.finish();
  g.standard_ = Epimorphism{1 % m, 0};
  return g;
}

FiniteGroup FiniteGroup::abelian(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("abelian: orders must be positive");
  int k = m * n;
  if (k > kDefaultOrderCap * 100) throw std::invalid_argument("abelian: group too large");
  std::vector<int> t(static_cast<std::size_t>(k * k));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      int i = (a / n + b / n) % m;
      int j = (a % n + b % n) % n;
      t[static_cast<std::size_t>(a * k + b)] = i * n + j;
    }
  FiniteGroup g("abelian:" + std::to_string(m) + "," + std::to_string(n), k, std::move(t));
  g.finish();
  g.standard_ = Epimorphism{(1 % m) * n, 1 % n};
  return g;
}

FiniteGroup FiniteGroup::dihedral(int r) {
  if (r < 2) throw std::invalid_argument("dihedral: r must be at least 2");
  int k = 2 * r;
  std::vector<int> t(static_cast<std::size_t>(k * k));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      int i = a % r, ea = a / r, j = b % r, eb = b / r;
      int rot = ((ea == 0 ? i + j : i - j) % r + r) % r;
      t[static_cast<std::size_t>(a * k + b)] = rot + r * ((ea + eb) % 2);
    }
  FiniteGroup g("dihedral:" + std::to_string(r), k, std::move(t));
  g.finish();
  g.standard_ = Epimorphism{1, r};
  return g;
}

namespace {

Perm compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[static_cast<std::size_t>(p[i])];
  return r;
}

Perm cycle(int degree, std::initializer_list<int> points) {
  Perm p(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) p[static_cast<std::size_t>(i)] = i;
  std::vector<int> pts(points);
  for (std::size_t i = 0; i < pts.size(); ++i) p[static_cast<std::size_t>(pts[i])] = pts[(i + 1) % pts.size()];
  return p;
}

Perm long_cycle(int degree, int from) {
  Perm p(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) p[static_cast<std::size_t>(i)] = i;
  for (int i = from; i < degree; ++i) p[static_cast<std::size_t>(i)] = i + 1 < degree ? i + 1 : from;
  return p;
}

}  // namespace

FiniteGroup FiniteGroup::from_permutations(const std::vector<Perm>& generators, std::string name, int order_cap) {
  std::size_t degree = 0;
  for (const Perm& p : generators) degree = std::max(degree, p.size());
  std::vector<Perm> gens;
  for (Perm p : generators) {
    for (std::size_t i = p.size(); i < degree; ++i) p.push_back(static_cast<int>(i));
    std::vector<char> hit(degree, 0);
    for (int v : p) {
      if (v < 0 || static_cast<std::size_t>(v) >= degree || hit[static_cast<std::size_t>(v)])
        throw std::invalid_argument("from_permutations: not a permutation");
      hit[static_cast<std::size_t>(v)] = 1;
    }
    gens.push_back(std::move(p));
  }
  Perm id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<int>(i);
  std::map<Perm, int> index{{id, 0}};
  std::vector<Perm> elems{id};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const Perm& g : gens) {
      Perm q = compose(elems[head], g);
      if (index.emplace(q, static_cast<int>(elems.size())).second) {
        elems.push_back(std::move(q));
        if (static_cast<int>(elems.size()) > order_cap)
          throw std::invalid_argument("group order exceeds cap " + std::to_string(order_cap));
      }
    }
  }
  int k = static_cast<int>(elems.size());
  std::vector<int> t(static_cast<std::size_t>(k * k));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      t[static_cast<std::size_t>(a * k + b)] =
          index.at(compose(elems[static_cast<std::size_t>(a)], elems[static_cast<std::size_t>(b)]));
  FiniteGroup grp(std::move(name), k, std::move(t));
  grp.finish();
  if (gens.size() == 2) grp.standard_ = Epimorphism{index.at(gens[0]), index.at(gens[1])};
  return grp;
}

FiniteGroup FiniteGroup::symmetric(int s) {
  if (s < 2) throw std::invalid_argument("sym: degree must be at least 2");
  return from_permutations({cycle(s, {0, 1}), long_cycle(s, 0)}, "sym:" + std::to_string(s));
}

FiniteGroup FiniteGroup::alternating(int s) {
  if (s < 3) throw std::invalid_argument("alt: degree must be at least 3");
  Perm second = s % 2 == 1 ? long_cycle(s, 0) : long_cycle(s, 1);
  return from_permutations({cycle(s, {0, 1, 2}), second}, "alt:" + std::to_string(s));
}

FiniteGroup FiniteGroup::quaternion() {
  Perm i = compose(cycle(8, {0, 1, 2, 3}), cycle(8, {4, 5, 6, 7}));
  Perm j = compose(cycle(8, {0, 4, 2, 6}), cycle(8, {1, 7, 3, 5}));
  return from_permutations({i, j}, "quaternion");
}

namespace {

std::vector<Perm> parse_permutations(std::string_view text) {
  std::vector<std::vector<std::vector<int>>> gens;  // generator -> cycles -> points
  std::vector<std::vector<int>> current;
  int max_point = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    char ch = text[i];
    if (ch == ' ') {
      ++i;
    } else if (ch == ',') {
      gens.push_back(std::move(current));
      current.clear();
      ++i;
    } else if (ch == '(') {
      std::size_t close = text.find(')', i);
      if (close == std::string_view::npos) throw std::invalid_argument("perm: unbalanced parenthesis");
      std::vector<int> pts;
      std::string body(text.substr(i + 1, close - i - 1));
      for (char& c : body)
        if (c == ',') c = ' ';
      std::size_t pos = 0;
      while (pos < body.size()) {
        if (body[pos] == ' ') {
          ++pos;
          continue;
        }
        std::size_t used = 0;
        int v = std::stoi(body.substr(pos), &used);
        if (v < 1) throw std::invalid_argument("perm: points are numbered from 1");
        pts.push_back(v - 1);
        max_point = std::max(max_point, v);
        pos += used;
      }
      current.push_back(std::move(pts));
      i = close + 1;
    } else {
      throw std::invalid_argument(std::string("perm: unexpected character '") + ch + "'");
    }
  }
  gens.push_back(std::move(current));
  std::vector<Perm> out;
  for (const auto& cycles : gens) {
    Perm p(static_cast<std::size_t>(max_point));
    for (int k = 0; k < max_point; ++k) p[static_cast<std::size_t>(k)] = k;
    for (const auto& c : cycles) {
      Perm cyc(static_cast<std::size_t>(max_point));
      for (int k = 0; k < max_point; ++k) cyc[static_cast<std::size_t>(k)] = k;
      for (std::size_t k = 0; k < c.size(); ++k) cyc[static_cast<std::size_t>(c[k])] = c[(k + 1) % c.size()];
      p = compose(p, cyc);
    }
    out.push_back(std::move(p));
  }
  return out;
}

int parse_positive(std::string_view s) {
  std::size_t used = 0;
  int v = std::stoi(std::string(s), &used);
  if (used != s.size() || v < 1) throw std::invalid_argument("group spec: bad number '" + std::string(s) + "'");
  return v;
}

}  // namespace

FiniteGroup FiniteGroup::parse(std::string_view spec, int order_cap) {
  std::size_t colon = spec.find(':');
  std::string_view kind = spec.substr(0, colon);
  std::string_view arg = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
  auto capped = [order_cap](FiniteGroup g) {
    if (g.order() > order_cap) throw std::invalid_argument("group order exceeds cap " + std::to_string(order_cap));
    return g;
  };
  try {
    if (kind == "cyclic") return capped(cyclic(parse_positive(arg)));
    if (kind == "abelian") {
      std::size_t comma = arg.find(',');
      if (comma == std::string_view::npos) throw std::invalid_argument("abelian: expected m,n");
      int m = parse_positive(arg.substr(0, comma));
      int n = parse_positive(arg.substr(comma + 1));
      if (static_cast<long>(m) * n > order_cap) throw std::invalid_argument("group order exceeds cap");
      return abelian(m, n);
    }
    if (kind == "dihedral") return capped(dihedral(parse_positive(arg)));
    if (kind == "sym") {
      int s = parse_positive(arg);
      if (s > 5) throw std::invalid_argument("sym: degree at most 5");
      return capped(symmetric(s));
    }
    if (kind == "alt") {
      int s = parse_positive(arg);
      if (s > 5) throw std::invalid_argument("alt: degree at most 5");
      return capped(alternating(s));
    }
    if (kind == "quaternion" && arg.empty()) return quaternion();
    if (kind == "perm") return from_permutations(parse_permutations(arg), "perm:" + std::string(arg), order_cap);
  } catch (const std::logic_error& e) {
    throw std::invalid_argument(std::string("group spec '") + std::string(spec) + "': " + e.what());
  }
  throw std::invalid_argument("group spec: unknown kind '" + std::string(spec) + "'");
}

std::vector<int> FiniteGroup::closure(std::span<const int> generators) const {
  std::vector<char> seen(static_cast<std::size_t>(order_), 0);
  std::vector<int> elems{identity_};
  seen[static_cast<std::size_t>(identity_)] = 1;
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (int g : generators) {
      int q = mul(elems[head], g);
      if (!seen[static_cast<std::size_t>(q)]) {
        seen[static_cast<std::size_t>(q)] = 1;
        elems.push_back(q);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

std::vector<int> FiniteGroup::commutator_subgroup() const {
  std::set<int> comms;
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b) comms.insert(mul(mul(inv(a), inv(b)), mul(a, b)));
  std::vector<int> gens(comms.begin(), comms.end());
  return closure(gens);
}

bool FiniteGroup::is_perfect() const { return static_cast<int>(commutator_subgroup().size()) == order_; }

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

int FiniteGroup::element_order(int a) const {
  int k = 1;
  for (int p = a; p != identity_; p = mul(p, a)) ++k;
  return k;
}

bool generates(const FiniteGroup& g, Epimorphism e) {
  std::array<int, 2> gens{e.gx, e.gy};
  return static_cast<int>(g.closure(gens).size()) == g.order();
}

std::vector<Epimorphism> epi_set(const FiniteGroup& g) {
  std::vector<Epimorphism> out;
  if (g.order() == 1) return out;
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      if (generates(g, {a, b})) out.push_back({a, b});
  return out;
}

Epimorphism default_epimorphism(const FiniteGroup& g) {
  if (auto s = g.standard_pair(); s && generates(g, *s)) return *s;
  auto all = epi_set(g);
  if (all.empty()) throw std::invalid_argument("group " + g.name() + " is not 2-generated or is trivial");
  return all.front();
}

// ---------------------------------------------------------------------------

int determinant(AutGen g) { return g == AutGen::P || g == AutGen::O ? -1 : 1; }

std::span<const std::string> aut_gen_names() {
  static const std::array<std::string, kAutGenCount> names{"P", "O", "R", "Ax", "Ay"};
  return names;
}

SignedEpi act(const FiniteGroup& g, AutGen gen, bool inverse, SignedEpi s) {
  const int x = s.epi.gx, y = s.epi.gy;
  switch (gen) {
    case AutGen::P: s.epi = {y, x}; break;
    case AutGen::O: s.epi = {g.inv(x), y}; break;
    case AutGen::R: s.epi = {g.mul(x, inverse ? g.inv(y) : y), y}; break;
    case AutGen::Ax:
      s.epi = {x, inverse ? g.mul(g.mul(g.inv(x), y), x) : g.mul(g.mul(x, y), g.inv(x))};
      break;
    case AutGen::Ay:
      s.epi = {inverse ? g.mul(g.mul(g.inv(y), x), y) : g.mul(g.mul(y, x), g.inv(y)), y};
      break;
  }
  s.sign *= determinant(gen);
  return s;
}

SignedEpi act(const FiniteGroup& g, const Word& w, SignedEpi s) {
  for (int l : w) s = act(g, static_cast<AutGen>(letter_gen(l)), l < 0, s);
  return s;
}

OrbitStabilizer orbit_stabilizer(const FiniteGroup& g, Epimorphism pi0, std::vector<AutGen> generators) {
  if (!generates(g, pi0)) throw std::invalid_argument("orbit_stabilizer: pair does not generate " + g.name());
  const std::size_t k = static_cast<std::size_t>(g.order());
  auto code = [k](const SignedEpi& s) {
    return (static_cast<std::size_t>(s.epi.gx) * k + static_cast<std::size_t>(s.epi.gy)) * 2 + (s.sign < 0 ? 1 : 0);
  };
  OrbitStabilizer os;
  os.generators = std::move(generators);
  std::vector<int> index(k * k * 2, -1);
  os.orbit.push_back({pi0, 1});
  index[code(os.orbit[0])] = 0;
  const std::size_t ng = os.generators.size();
  std::vector<std::vector<int>> images(ng);
  for (std::size_t head = 0; head < os.orbit.size(); ++head) {
    for (std::size_t gi = 0; gi < ng; ++gi) {
      for (bool inverse : {false, true}) {
        SignedEpi next = act(g, os.generators[gi], inverse, os.orbit[head]);
        int& slot = index[code(next)];
        if (slot < 0) {
          slot = static_cast<int>(os.orbit.size());
          os.orbit.push_back(next);
        }
        if (!inverse) images[gi].push_back(slot);
      }
    }
  }
  os.action = rs::PermAction(images);
  os.transversal = rs::bfs_transversal(os.action);
  rs::SchreierSymbols sym = rs::schreier_symbols(os.action, os.transversal);
  for (auto [p, gi] : sym.origin) {
    Word w = rs::schreier_word(os.action, os.transversal, p, gi);
    for (int& l : w) l = letter(static_cast<int>(os.generators[static_cast<std::size_t>(letter_gen(l))]), l < 0);
    os.stabilizer_words.push_back(std::move(w));
  }
  os.signed_orbit_size = static_cast<long>(os.orbit.size());
  std::set<std::pair<int, int>> epis;
  for (const SignedEpi& s : os.orbit) epis.emplace(s.epi.gx, s.epi.gy);
  os.epi_orbit_size = static_cast<long>(epis.size());
  os.aut_plus_index = os.signed_orbit_size / 2;
  return os;
}

Mat2 rho_image(AutGen gen) {
  switch (gen) {
    case AutGen::P: return Mat2(0, 1, 1, 0);
    case AutGen::O: return Mat2(-1, 0, 0, 1);
    case AutGen::R: return Mat2(1, 0, 1, 1);
    default: return Mat2::identity();
  }
}

Mat2 rho_image(const Word& w) {
  Mat2 r;
  for (int l : w) {
    Mat2 m = rho_image(static_cast<AutGen>(letter_gen(l)));
    r = r * (l > 0 ? m : m.inverse());
  }
  return r;
}

CosetTable stabilizer_image_table(const FiniteGroup& g, Epimorphism pi0, EnumerationOptions options) {
  OrbitStabilizer os = orbit_stabilizer(g, pi0);
  std::set<PslElement> images;
  for (const Word& w : os.stabilizer_words) {
    Mat2 m = rho_image(w);
    if (!m.is_special()) throw std::logic_error("stabilizer word with determinant -1");
    PslElement e(m);
    if (!e.is_identity()) images.insert(e);
  }
  std::vector<GeneratorWord> words;
  for (const PslElement& e : images) words.push_back(matrix_to_word(e));
  return enumerate(words, options);
}

}  // namespace modgroup
