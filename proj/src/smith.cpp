#include "modgroup/smith.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace modgroup {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged rows");
    for (long v : r) data_.emplace_back(v);
  }
}

void IntMatrix::append_row(const std::vector<Integer>& row) {
  if (rows_ == 0 && cols_ == 0) cols_ = row.size();
  if (row.size() != cols_) throw std::invalid_argument("IntMatrix: row width mismatch");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

// ---------------------------------------------------------------------------

AbelianInvariants AbelianInvariants::from_cyclic_orders(std::vector<Integer> orders, long extra_free) {
  AbelianInvariants inv;
  inv.free_rank = extra_free;
  std::vector<Integer> finite;
  for (Integer& d : orders) {
    d = abs(d);
    if (d == 0)
      ++inv.free_rank;
    else if (d != 1)
      finite.push_back(d);
  }
  for (std::size_t i = 0; i < finite.size(); ++i) {
    for (std::size_t j = i + 1; j < finite.size(); ++j) {
      Integer g = gcd(finite[i], finite[j]);
      Integer l = lcm(finite[i], finite[j]);
      finite[i] = g;
      finite[j] = l;
    }
  }
  for (Integer& d : finite)
    if (d != 1) inv.torsion.push_back(d);
  std::sort(inv.torsion.begin(), inv.torsion.end());
  return inv;
}

std::string AbelianInvariants::to_string() const {
  std::string s;
  for (const Integer& d : torsion) {
    if (!s.empty()) s += " x ";
    s += "Z/" + d.get_str();
  }
  if (free_rank > 0) {
    if (!s.empty()) s += " x ";
    s += "Z^" + std::to_string(free_rank);
  }
  return s.empty() ? "0" : s;
}

AbelianInvariants AbelianInvariants::parse(std::string_view text) {
  std::vector<Integer> orders;
  long free = 0;
  std::string str(text);
  std::size_t start = 0;
  while (start <= str.size()) {
    std::size_t end = str.find(" x ", start);
    std::string tok = str.substr(start, end == std::string::npos ? std::string::npos : end - start);
    tok.erase(0, tok.find_first_not_of(' '));
    tok.erase(tok.find_last_not_of(' ') + 1);
    if (tok == "0" || tok == "1") {
    } else if (tok == "Z") {
      ++free;
    } else if (tok.rfind("Z^", 0) == 0) {
      free += std::stol(tok.substr(2));
    } else if (tok.rfind("Z/", 0) == 0) {
      orders.emplace_back(tok.substr(2));
    } else {
      throw std::invalid_argument("AbelianInvariants::parse: bad factor '" + tok + "'");
    }
    if (end == std::string::npos) break;
    start = end + 3;
  }
  return from_cyclic_orders(std::move(orders), free);
}

// ---------------------------------------------------------------------------
// Dense reduction

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

}  // namespace

std::vector<Integer> smith_diagonal(IntMatrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  const std::size_t k = std::min(rows, cols);
  std::vector<Integer> diag(k, 0);
  Integer q;
  for (std::size_t t = 0; t < k; ++t) {
    // Minimal nonzero |entry| of the trailing block.
    std::size_t pr = rows, pc = cols;
    for (std::size_t r = t; r < rows; ++r)
      for (std::size_t c = t; c < cols; ++c)
        if (m(r, c) != 0 && (pr == rows || abs(m(r, c)) < abs(m(pr, pc)))) {
          pr = r;
          pc = c;
        }
    if (pr == rows) break;
    swap_rows(m, t, pr);
    swap_cols(m, t, pc);

    for (;;) {
      bool clear = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (m(r, t) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), m(r, t).get_mpz_t(), m(t, t).get_mpz_t());
        if (q != 0)
          for (std::size_t c = t; c < cols; ++c) m(r, c) -= q * m(t, c);
        if (m(r, t) != 0) clear = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (m(t, c) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), m(t, c).get_mpz_t(), m(t, t).get_mpz_t());
        if (q != 0)
          for (std::size_t r = t; r < rows; ++r) m(r, c) -= q * m(r, t);
        if (m(t, c) != 0) clear = false;
      }
      if (!clear) {
        // A smaller remainder sits in row t or column t; make it the pivot.
        std::size_t br = t, bc = t;
        for (std::size_t r = t + 1; r < rows; ++r)
          if (m(r, t) != 0 && abs(m(r, t)) < abs(m(br, bc))) {
            br = r;
            bc = t;
          }
        for (std::size_t c = t + 1; c < cols; ++c)
          if (m(t, c) != 0 && abs(m(t, c)) < abs(m(br, bc))) {
            br = t;
            bc = c;
          }
        swap_rows(m, t, br);
        swap_cols(m, t, bc);
        continue;
      }
      // Row and column are clear; enforce divisibility of the trailing block.
      std::size_t bad = rows;
      for (std::size_t r = t + 1; r < rows && bad == rows; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (!mpz_divisible_p(m(r, c).get_mpz_t(), m(t, t).get_mpz_t())) {
            bad = r;
            break;
          }
      if (bad == rows) break;
      for (std::size_t c = t; c < cols; ++c) m(t, c) += m(bad, c);
    }
    diag[t] = abs(m(t, t));
  }
  return diag;
}

AbelianInvariants smith_invariants(const IntMatrix& m, std::size_t n_generators) {
  if (m.rows() > 0 && m.cols() != n_generators)
    throw std::invalid_argument("smith_invariants: column count differs from generator count");
  if (m.rows() == 0) return AbelianInvariants::from_cyclic_orders({}, static_cast<long>(n_generators));
  std::vector<Integer> diag = smith_diagonal(m);
  long rank = static_cast<long>(std::count_if(diag.begin(), diag.end(), [](const Integer& d) { return d != 0; }));
  std::vector<Integer> finite;
  for (const Integer& d : diag)
    if (d != 0) finite.push_back(d);
  return AbelianInvariants::from_cyclic_orders(std::move(finite), static_cast<long>(n_generators) - rank);
}

// ---------------------------------------------------------------------------
// Sparse unit elimination

AbelianInvariants smith_invariants(const std::vector<rs::SparseRow>& input, std::size_t n_generators) {
  using Row = std::map<int, Integer>;
  std::vector<Row> rows;
  rows.reserve(input.size());
  std::vector<std::set<int>> col_rows(n_generators);
  for (const auto& sr : input) {
    Row row;
    for (auto [c, v] : sr) {
      if (c < 0 || static_cast<std::size_t>(c) >= n_generators)
        throw std::invalid_argument("smith_invariants: column out of range");
      if (v != 0) row[c] += v;
    }
    std::erase_if(row, [](const auto& e) { return e.second == 0; });
    if (row.empty()) continue;
    int id = static_cast<int>(rows.size());
    for (const auto& [c, v] : row) col_rows[static_cast<std::size_t>(c)].insert(id);
    rows.push_back(std::move(row));
  }
  std::vector<char> alive(rows.size(), 1);
  std::size_t eliminated = 0;

  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t p = 0; p < rows.size(); ++p) {
      if (!alive[p]) continue;
      if (rows[p].empty()) {
        alive[p] = 0;
        continue;
      }
      int pivot_col = -1;
      std::size_t best = 0;
      for (const auto& [c, v] : rows[p]) {
        if (v != 1 && v != -1) continue;
        std::size_t load = col_rows[static_cast<std::size_t>(c)].size();
        if (pivot_col < 0 || load < best) {
          pivot_col = c;
          best = load;
        }
      }
      if (pivot_col < 0) continue;
      const Integer pv = rows[p].at(pivot_col);
      std::vector<int> targets(col_rows[static_cast<std::size_t>(pivot_col)].begin(),
                               col_rows[static_cast<std::size_t>(pivot_col)].end());
      for (int i : targets) {
        if (static_cast<std::size_t>(i) == p) continue;
        Row& row = rows[static_cast<std::size_t>(i)];
        Integer f = row.at(pivot_col) * pv;  // pv = +-1, so this is the exact quotient
        for (const auto& [c, v] : rows[p]) {
          auto [it, inserted] = row.emplace(c, 0);
          it->second -= f * v;
          if (it->second == 0) {
            row.erase(it);
            if (!inserted) col_rows[static_cast<std::size_t>(c)].erase(i);
          } else if (inserted) {
            col_rows[static_cast<std::size_t>(c)].insert(i);
          }
        }
        if (row.empty()) alive[static_cast<std::size_t>(i)] = 0;
      }
      for (const auto& [c, v] : rows[p]) col_rows[static_cast<std::size_t>(c)].erase(static_cast<int>(p));
      alive[p] = 0;
      ++eliminated;
      progress = true;
    }
  }

  std::vector<int> dense_cols;
  std::vector<int> col_pos(n_generators, -1);
  for (std::size_t c = 0; c < n_generators; ++c) {
    if (!col_rows[c].empty()) {
      col_pos[c] = static_cast<int>(dense_cols.size());
      dense_cols.push_back(static_cast<int>(c));
    }
  }
  // Columns without entries that were not eliminated are free generators.
  long untouched = static_cast<long>(n_generators - eliminated - dense_cols.size());
  IntMatrix dense;
  for (std::size_t p = 0; p < rows.size(); ++p) {
    if (!alive[p] || rows[p].empty()) continue;
    std::vector<Integer> r(dense_cols.size(), 0);
    for (const auto& [c, v] : rows[p]) r[static_cast<std::size_t>(col_pos[static_cast<std::size_t>(c)])] = v;
    dense.append_row(r);
  }
  AbelianInvariants inv = smith_invariants(dense, dense_cols.size());
  inv.free_rank += untouched;
  return inv;
}

}  // namespace modgroup
