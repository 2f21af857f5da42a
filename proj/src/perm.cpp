#include "tensorinv/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace tensorinv {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  std::vector<bool> seen(n + 1, false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[v])
      throw std::invalid_argument("permutation images are not a bijection on 1..n");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= size(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size())
    throw std::invalid_argument("compose: size mismatch");
  std::vector<int> im(p.size());
  for (int i = 1; i <= p.size(); ++i) im[i - 1] = p(q(i));
  return Permutation(std::move(im));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> im(p.size());
  for (int i = 1; i <= p.size(); ++i) im[p(i) - 1] = i;
  return Permutation(std::move(im));
}

std::set<int> descent_set(const Permutation& p) {
  std::set<int> des;
  for (int i = 1; i < p.size(); ++i)
    if (p(i) > p(i + 1)) des.insert(i);
  return des;
}

Permutation parse_cycles(std::string_view text, int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  std::vector<bool> used(n + 1, false);

  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
      ++pos;
  };
  skip_ws();
  if (pos < text.size() && text[pos] == 'e') {
    ++pos;
    skip_ws();
    if (pos != text.size())
      throw std::invalid_argument("parse_cycles: trailing characters after 'e'");
    return Permutation(std::move(im));
  }

  auto push_entry = [&](std::vector<int>& cycle, int value) {
    if (value < 1 || value > n)
      throw std::invalid_argument("parse_cycles: entry out of range 1..n");
    if (used[value])
      throw std::invalid_argument("parse_cycles: repeated entry " + std::to_string(value));
    used[value] = true;
    cycle.push_back(value);
  };

  while (pos < text.size()) {
    skip_ws();
    if (pos >= text.size()) break;
    if (text[pos] != '(')
      throw std::invalid_argument("parse_cycles: expected '('");
    ++pos;
    std::vector<int> cycle;
    while (true) {
      skip_ws();
      if (pos >= text.size())
        throw std::invalid_argument("parse_cycles: unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw std::invalid_argument("parse_cycles: unexpected character");
      // Read a maximal digit run.  For n <= 9 each digit is its own entry
      // ("(132)"); for n >= 10 the run is one multi-digit entry, so cycles
      // need separators between entries.
      size_t run_begin = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      std::string_view run = text.substr(run_begin, pos - run_begin);
      if (n <= 9) {
        for (char c : run) push_entry(cycle, c - '0');
      } else {
        push_entry(cycle, std::stoi(std::string(run)));
      }
    }
    for (size_t i = 0; i < cycle.size(); ++i)
      im[cycle[i] - 1] = cycle[(i + 1) % cycle.size()];
  }
  return Permutation(std::move(im));
}

std::string cycle_string(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.size() + 1, false);
  for (int start = 1; start <= p.size(); ++start) {
    if (seen[start] || p(start) == start) continue;
    out += '(';
    int cur = start;
    bool first = true;
    while (!seen[cur]) {
      seen[cur] = true;
      if (!first && p.size() >= 10) out += ' ';
      out += std::to_string(cur);
      first = false;
      cur = p(cur);
    }
    out += ')';
  }
  return out.empty() ? "e" : out;
}

}  // namespace tensorinv
