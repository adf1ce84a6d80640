#include "symcone/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace symcone {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p <= 0) throw std::invalid_argument("partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<int> Partition::multiplicities() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i == 0 || parts_[i] != parts_[i - 1]) {
      out.push_back(1);
    } else {
      ++out.back();
    }
  }
  return out;
}

std::string Partition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s;
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  if (text.empty()) return Partition();
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = text.substr(start, end - start);
    if (tok.empty() || tok.size() > 6 || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw std::invalid_argument("malformed partition: '" + std::string(text) + "'");
    }
    parts.push_back(std::stoi(std::string(tok)));
    start = end + 1;
  }
  std::vector<int> sorted = parts;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  if (sorted != parts) throw std::invalid_argument("partition parts must be weakly decreasing: '" + std::string(text) + "'");
  return Partition(std::move(parts));
}

bool operator<(const Partition& a, const Partition& b) {
  int wa = a.weight(), wb = b.weight();
  if (wa != wb) return wa < wb;
  return std::lexicographical_compare(b.parts_.begin(), b.parts_.end(), a.parts_.begin(), a.parts_.end());
}

namespace {

void generate(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    generate(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int k) {
  if (k < 0) throw std::invalid_argument("partitions_of: negative weight");
  std::vector<Partition> out;
  std::vector<int> cur;
  generate(k, k, cur, out);
  return out;
}

std::size_t partition_index(const Partition& lambda) {
  auto all = partitions_of(lambda.weight());
  auto it = std::find(all.begin(), all.end(), lambda);
  return static_cast<std::size_t>(it - all.begin());
}

bool contains_subpartition(const Partition& lambda, int m) {
  if (m < 0) throw std::invalid_argument("contains_subpartition: negative target");
  std::vector<bool> reach(static_cast<std::size_t>(m) + 1, false);
  reach[0] = true;
  for (int p : lambda.parts()) {
    for (int s = m; s >= p; --s) {
      if (reach[static_cast<std::size_t>(s - p)]) reach[static_cast<std::size_t>(s)] = true;
    }
  }
  return reach[static_cast<std::size_t>(m)];
}

namespace {

void grid(int n, int d, int remaining, std::vector<int>& cur, std::vector<GridPoint>& out) {
  if (static_cast<int>(cur.size()) == d - 1) {
    GridPoint g;
    for (int j : cur) g.weights.emplace_back(j, n);
    g.weights.emplace_back(remaining, n);
    for (auto& w : g.weights) w.canonicalize();
    out.push_back(std::move(g));
    return;
  }
  for (int j = 0; j <= remaining; ++j) {
    cur.push_back(j);
    grid(n, d, remaining - j, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<GridPoint> w_grid(int n, int d) {
  if (n < 1 || d < 1) throw std::invalid_argument("w_grid: n and d must be positive");
  std::vector<GridPoint> out;
  std::vector<int> cur;
  grid(n, d, n, cur, out);
  return out;
}

}  // namespace symcone
