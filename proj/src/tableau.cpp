#include "tensorinv/tableau.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tensorinv {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must weakly decrease");
  }
}

int Partition::n() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  out += ')';
  return out;
}

std::vector<Partition> partitions(int n) {
  if (n < 0) throw std::invalid_argument("partitions: n must be non-negative");
  std::vector<Partition> out;
  std::vector<int> current;
  // Parts appended in weakly increasing order give ascending lex directly
  // once each is reversed into weakly decreasing storage.
  auto rec = [&](auto&& self, int remaining, int min_part) -> void {
    if (remaining == 0) {
      std::vector<int> parts(current.rbegin(), current.rend());
      out.emplace_back(std::move(parts));
      return;
    }
    for (int p = min_part; p <= remaining; ++p) {
      current.push_back(p);
      self(self, remaining - p, p);
      current.pop_back();
    }
  };
  rec(rec, n, 1);
  std::sort(out.begin(), out.end(),
            [](const Partition& a, const Partition& b) { return a.parts() < b.parts(); });
  return out;
}

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  int n = 0;
  for (const auto& row : rows_) n += static_cast<int>(row.size());
  std::vector<bool> seen(n + 1, false);
  for (size_t r = 0; r < rows_.size(); ++r) {
    const auto& row = rows_[r];
    if (row.empty()) throw std::invalid_argument("tableau rows must be non-empty");
    if (r > 0 && row.size() > rows_[r - 1].size())
      throw std::invalid_argument("tableau row lengths must weakly decrease upward");
    for (size_t c = 0; c < row.size(); ++c) {
      int v = row[c];
      if (v < 1 || v > n || seen[v])
        throw std::invalid_argument("tableau entries must be exactly 1..n");
      seen[v] = true;
      if (c > 0 && row[c - 1] >= v)
        throw std::invalid_argument("tableau rows must strictly increase");
      if (r > 0 && rows_[r - 1][c] >= v)
        throw std::invalid_argument("tableau columns must strictly increase upward");
    }
  }
}

int StandardTableau::size() const {
  int n = 0;
  for (const auto& row : rows_) n += static_cast<int>(row.size());
  return n;
}

Partition StandardTableau::shape() const {
  std::vector<int> parts;
  parts.reserve(rows_.size());
  for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
  return Partition(std::move(parts));
}

int StandardTableau::row_of(int entry) const {
  for (size_t r = 0; r < rows_.size(); ++r)
    for (int v : rows_[r])
      if (v == entry) return static_cast<int>(r);
  throw std::out_of_range("entry not in tableau");
}

std::vector<int> StandardTableau::reading_word() const {
  std::vector<int> word;
  for (const auto& row : rows_) word.insert(word.end(), row.begin(), row.end());
  return word;
}

std::string StandardTableau::to_string() const {
  std::string out = "[";
  for (size_t r = 0; r < rows_.size(); ++r) {
    if (r) out += '|';
    for (size_t c = 0; c < rows_[r].size(); ++c) {
      if (c) out += ',';
      out += std::to_string(rows_[r][c]);
    }
  }
  out += ']';
  return out;
}

std::set<int> tableau_descent_set(const StandardTableau& t) {
  std::set<int> des;
  for (int i = 1; i < t.size(); ++i)
    if (t.row_of(i + 1) > t.row_of(i)) des.insert(i);
  return des;
}

std::vector<StandardTableau> standard_tableaux(const Partition& shape) {
  const int n = shape.n();
  std::vector<std::vector<int>> rows(shape.rows());
  std::vector<StandardTableau> out;
  auto rec = [&](auto&& self, int next) -> void {
    if (next > n) {
      out.emplace_back(rows);
      return;
    }
    for (int r = 0; r < shape.rows(); ++r) {
      const int col = static_cast<int>(rows[r].size());
      if (col >= shape.part(r)) continue;
      if (r > 0 && static_cast<int>(rows[r - 1].size()) <= col) continue;
      rows[r].push_back(next);
      self(self, next + 1);
      rows[r].pop_back();
    }
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end(), [](const StandardTableau& a, const StandardTableau& b) {
    return a.reading_word() < b.reading_word();
  });
  return out;
}

std::vector<StandardTableau> standard_tableaux_all(int n) {
  std::vector<Partition> shapes = partitions(n);
  std::reverse(shapes.begin(), shapes.end());  // descending lex
  std::vector<StandardTableau> out;
  for (const auto& shape : shapes) {
    auto of_shape = standard_tableaux(shape);
    out.insert(out.end(), of_shape.begin(), of_shape.end());
  }
  return out;
}

RSPair robinson_schensted(const Permutation& p) {
  std::vector<std::vector<int>> prows, qrows;
  for (int i = 1; i <= p.size(); ++i) {
    int value = p(i);
    size_t r = 0;
    while (true) {
      if (r == prows.size()) {
        prows.emplace_back();
        qrows.emplace_back();
      }
      auto& row = prows[r];
      auto it = std::upper_bound(row.begin(), row.end(), value);
      if (it == row.end()) {
        row.push_back(value);
        qrows[r].push_back(i);
        break;
      }
      std::swap(*it, value);  // bump to the next row up
      ++r;
    }
  }
  return RSPair{StandardTableau(std::move(prows)), StandardTableau(std::move(qrows))};
}

}  // namespace tensorinv
