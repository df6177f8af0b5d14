#include "flagvar/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace flagvar {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<int> Partition::conjugate() const {
  std::vector<int> c(parts_.empty() ? 0 : parts_[0], 0);
  for (int r : parts_)
    for (int j = 0; j < r; ++j) ++c[j];
  return c;
}

bool Partition::is_rectangular() const {
  return !parts_.empty() && std::all_of(parts_.begin(), parts_.end(), [&](int r) { return r == parts_[0]; });
}

std::vector<int> conjugate_partition(const Partition& lambda) { return lambda.conjugate(); }

Partition partition_from_columns(const std::vector<int>& columns) {
  return Partition(Partition(columns).conjugate());
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions_rec(remaining - part, part, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("negative partition size");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  std::vector<int> shape;
  for (const auto& r : rows_) shape.push_back(static_cast<int>(r.size()));
  shape_ = Partition(shape);
  const int n = shape_.size();
  std::vector<bool> seen(n + 1, false);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      const int v = rows_[i][j];
      if (v < 1 || v > n || seen[v]) throw std::invalid_argument("tableau entries must be 1..n, each once");
      seen[v] = true;
      if (j > 0 && rows_[i][j - 1] >= v) throw std::invalid_argument("tableau rows must increase");
      if (i > 0 && rows_[i - 1][j] >= v) throw std::invalid_argument("tableau columns must increase");
    }
  }
}

std::pair<int, int> Tableau::position(int v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j < rows_[i].size(); ++j)
      if (rows_[i][j] == v) return {static_cast<int>(i) + 1, static_cast<int>(j) + 1};
  throw std::out_of_range("entry " + std::to_string(v) + " not in tableau");
}

Perm::Perm(std::vector<int> word) : word_(std::move(word)) {
  std::vector<bool> seen(word_.size() + 1, false);
  for (int v : word_) {
    if (v < 1 || v > static_cast<int>(word_.size()) || seen[v])
      throw std::invalid_argument("word is not a permutation of 1..n");
    seen[v] = true;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return Perm(std::move(w));
}

Perm Perm::longest(int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = n - i;
  return Perm(std::move(w));
}

int Perm::length() const {
  int inv = 0;
  for (std::size_t i = 0; i < word_.size(); ++i)
    for (std::size_t j = i + 1; j < word_.size(); ++j)
      if (word_[i] > word_[j]) ++inv;
  return inv;
}

Perm Perm::inverse() const {
  std::vector<int> w(word_.size());
  for (std::size_t i = 0; i < word_.size(); ++i) w[word_[i] - 1] = static_cast<int>(i) + 1;
  return Perm(std::move(w));
}

bool Perm::is_involution() const { return inverse() == *this; }

Perm compose(const Perm& a, const Perm& b) {
  if (a.size() != b.size()) throw std::invalid_argument("composing permutations of different degree");
  std::vector<int> w(a.size());
  for (int i = 1; i <= a.size(); ++i) w[i - 1] = a(b(i));
  return Perm(std::move(w));
}

std::vector<Perm> all_permutations(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Perm> out;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

Tableau column_superstandard_tableau(const Partition& lambda) {
  std::vector<std::vector<int>> rows(lambda.length());
  int next = 1;
  for (int c : lambda.conjugate())
    for (int i = 0; i < c; ++i) rows[i].push_back(next++);
  return Tableau(std::move(rows));
}

Perm rs_extract(const Tableau& P, const Tableau& Q) {
  if (P.shape() != Q.shape()) throw std::invalid_argument("rs_extract: tableaux have different shapes");
  auto p = P.rows();
  auto q = Q.rows();
  const int n = P.size();
  std::vector<int> w(n);
  for (int m = n; m >= 1; --m) {
    // Box of m in Q.
    std::size_t row = 0;
    while (q[row].empty() || q[row].back() != m) ++row;
    q[row].pop_back();
    int moving = p[row].back();
    p[row].pop_back();
    // Carry the value up one row at a time, replacing the largest smaller entry.
    for (std::size_t r = row; r-- > 0;) {
      auto& target = p[r];
      auto it = std::lower_bound(target.begin(), target.end(), moving);
      --it;
      std::swap(*it, moving);
    }
    w[m - 1] = moving;
    while (!q.empty() && q.back().empty()) {
      q.pop_back();
      p.pop_back();
    }
  }
  return Perm(std::move(w));
}

std::pair<Tableau, Tableau> rs_insert(const Perm& w) {
  std::vector<std::vector<int>> p, q;
  for (int i = 1; i <= w.size(); ++i) {
    int x = w(i);
    std::size_t r = 0;
    while (true) {
      if (r == p.size()) {
        p.push_back({x});
        q.push_back({i});
        break;
      }
      auto it = std::upper_bound(p[r].begin(), p[r].end(), x);
      if (it == p[r].end()) {
        p[r].push_back(x);
        q[r].push_back(i);
        break;
      }
      std::swap(*it, x);
      ++r;
    }
  }
  return {Tableau(std::move(p)), Tableau(std::move(q))};
}

Perm beta_word(const Partition& lambda) {
  std::vector<int> w;
  int offset = 0;
  for (int c : lambda.conjugate()) {
    for (int t = c; t >= 1; --t) w.push_back(offset + t);
    offset += c;
  }
  return Perm(std::move(w));
}

std::optional<BlockReversal> parse_block_reversal(const Perm& w) {
  BlockReversal out;
  int i = 1;
  const int n = w.size();
  while (i <= n) {
    const int end = w(i);
    if (end < i) return std::nullopt;
    for (int t = i; t <= end; ++t)
      if (w(t) != end - (t - i)) return std::nullopt;
    out.sizes.push_back(end - i + 1);
    i = end + 1;
  }
  out.weakly_decreasing = std::is_sorted(out.sizes.rbegin(), out.sizes.rend());
  return out;
}

namespace {

void tableaux_rec(const std::vector<int>& shape, std::vector<std::vector<int>>& rows, int next, int n,
                  std::vector<Tableau>& out) {
  if (next > n) {
    out.emplace_back(rows);
    return;
  }
  for (std::size_t r = 0; r < shape.size(); ++r) {
    const auto len = rows[r].size();
    if (len >= static_cast<std::size_t>(shape[r])) continue;
    if (r > 0 && rows[r - 1].size() <= len) continue;
    rows[r].push_back(next);
    tableaux_rec(shape, rows, next + 1, n, out);
    rows[r].pop_back();
  }
}

}  // namespace

std::vector<Tableau> enumerate_standard_tableaux(const Partition& lambda, int cap) {
  if (lambda.size() > cap)
    throw std::invalid_argument("tableau enumeration for n = " + std::to_string(lambda.size()) + " exceeds cap " +
                                std::to_string(cap));
  std::vector<Tableau> out;
  std::vector<std::vector<int>> rows(lambda.length());
  tableaux_rec(lambda.parts(), rows, 1, lambda.size(), out);
  return out;
}

}  // namespace flagvar
