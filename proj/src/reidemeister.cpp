#include "modgroup/reidemeister.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <stdexcept>

namespace modgroup::rs {

PermAction::PermAction(const std::vector<std::vector<int>>& images) {
  n_gens_ = static_cast<int>(images.size());
  n_points_ = images.empty() ? 0 : static_cast<int>(images[0].size());
  std::size_t n = static_cast<std::size_t>(n_points_);
  fwd_.assign(n * images.size(), -1);
  bwd_.assign(n * images.size(), -1);
  for (std::size_t g = 0; g < images.size(); ++g) {
    if (images[g].size() != n) throw std::invalid_argument("PermAction: ragged images");
    for (std::size_t p = 0; p < n; ++p) {
      int q = images[g][p];
      if (q < 0 || q >= n_points_ || bwd_[g * n + static_cast<std::size_t>(q)] != -1)
        throw std::invalid_argument("PermAction: generator image is not a permutation");
      fwd_[g * n + p] = q;
      bwd_[g * n + static_cast<std::size_t>(q)] = static_cast<int>(p);
    }
  }
}

std::vector<int> default_letter_order(int n_gens) {
  std::vector<int> order;
  for (int g = 0; g < n_gens; ++g) {
    order.push_back(letter(g));
    order.push_back(letter(g, true));
  }
  return order;
}

Transversal bfs_transversal(const PermAction& action) {
  auto order = default_letter_order(action.n_gens());
  return bfs_transversal(action, order);
}

Transversal bfs_transversal(const PermAction& action, std::span<const int> letter_order) {
  std::size_t n = static_cast<std::size_t>(action.n_points());
  Transversal tr;
  tr.parent.assign(n, -1);
  tr.parent_letter.assign(n, 0);
  tr.words.assign(n, Word{});
  if (n == 0) return tr;
  std::vector<char> seen(n, 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int p = queue[head];
    for (int l : letter_order) {
      int q = action.image(p, l);
      if (seen[static_cast<std::size_t>(q)]) continue;
      seen[static_cast<std::size_t>(q)] = 1;
      tr.parent[static_cast<std::size_t>(q)] = p;
      tr.parent_letter[static_cast<std::size_t>(q)] = l;
      tr.words[static_cast<std::size_t>(q)] = tr.words[static_cast<std::size_t>(p)];
      tr.words[static_cast<std::size_t>(q)].push_back(l);
      queue.push_back(q);
    }
  }
  if (queue.size() != n) throw std::invalid_argument("bfs_transversal: action is not transitive");
  return tr;
}

SchreierSymbols schreier_symbols(const PermAction& action, const Transversal& tr) {
  SchreierSymbols sym;
  sym.n_gens = action.n_gens();
  sym.id.assign(static_cast<std::size_t>(action.n_points() * action.n_gens()), -1);
  for (int p = 0; p < action.n_points(); ++p) {
    for (int g = 0; g < action.n_gens(); ++g) {
      int q = action.image(p, letter(g));
      bool tree = (tr.parent[static_cast<std::size_t>(q)] == p &&
                   tr.parent_letter[static_cast<std::size_t>(q)] == letter(g)) ||
                  (tr.parent[static_cast<std::size_t>(p)] == q &&
                   tr.parent_letter[static_cast<std::size_t>(p)] == letter(g, true));
      if (tree) continue;
      sym.id[static_cast<std::size_t>(p * action.n_gens() + g)] = sym.count();
      sym.origin.emplace_back(p, g);
    }
  }
  return sym;
}

Word schreier_word(const PermAction& action, const Transversal& tr, int p, int g) {
  int q = action.image(p, letter(g));
  Word w = tr.words[static_cast<std::size_t>(p)];
  w.push_back(letter(g));
  return free_reduce(concat(w, inverse(tr.words[static_cast<std::size_t>(q)])));
}

Word rewrite(const PermAction& action, const SchreierSymbols& sym, int start, const Word& w) {
  Word out;
  out.reserve(w.size());
  int q = start;
  for (int l : w) {
    int g = letter_gen(l);
    if (l > 0) {
      int s = sym.at(q, g);
      if (s >= 0) out.push_back(letter(s));
      q = action.image(q, l);
    } else {
      int prev = action.image(q, l);
      int s = sym.at(prev, g);
      if (s >= 0) out.push_back(letter(s, true));
      q = prev;
    }
  }
  if (q != start) throw std::logic_error("rewrite: word does not fix the starting point");
  return free_reduce(out);
}

namespace {

template <class Result, class PerPoint>
std::vector<Result> collect(int n_points, Exec exec, PerPoint per_point) {
  std::vector<std::vector<Result>> parts(static_cast<std::size_t>(n_points));
  if (exec == Exec::parallel) {
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 8)
    for (int p = 0; p < n_points; ++p) {
      try {
        parts[static_cast<std::size_t>(p)] = per_point(p);
      } catch (...) {
#pragma omp critical(modgroup_rs_error)
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
  } else {
    for (int p = 0; p < n_points; ++p) parts[static_cast<std::size_t>(p)] = per_point(p);
  }
  std::vector<Result> all;
  for (auto& part : parts)
    for (auto& r : part) all.push_back(std::move(r));
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

SparseRow to_row(const Word& w) {
  std::map<int, long> acc;
  for (int l : w) acc[letter_gen(l)] += l > 0 ? 1 : -1;
  SparseRow row;
  for (auto [g, e] : acc)
    if (e != 0) row.emplace_back(g, e);
  // Rows and their negatives present the same relation.
  if (!row.empty() && row.front().second < 0)
    for (auto& entry : row) entry.second = -entry.second;
  return row;
}

}  // namespace

std::vector<Word> rewrite_relators(const PermAction& action, const SchreierSymbols& sym,
                                   std::span<const Word> relators, Exec exec) {
  return collect<Word>(action.n_points(), exec, [&](int p) {
    std::vector<Word> out;
    for (const Word& r : relators) {
      Word w = canonical_relator(rewrite(action, sym, p, r));
      if (!w.empty()) out.push_back(std::move(w));
    }
    return out;
  });
}

std::vector<SparseRow> relation_rows(const PermAction& action, const SchreierSymbols& sym,
                                     std::span<const Word> relators, Exec exec) {
  return collect<SparseRow>(action.n_points(), exec, [&](int p) {
    std::vector<SparseRow> out;
    for (const Word& r : relators) {
      SparseRow row = to_row(rewrite(action, sym, p, r));
      if (!row.empty()) out.push_back(std::move(row));
    }
    return out;
  });
}

}  // namespace modgroup::rs
