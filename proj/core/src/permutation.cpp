#include "ramsearch/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ramsearch {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int y : images_) {
    if (y < 0 || y >= degree() || seen[static_cast<size_t>(y)]) {
      throw std::invalid_argument("Permutation: images are not a bijection");
    }
    seen[static_cast<size_t>(y)] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> images(static_cast<size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::from_pairs(int degree, std::span<const PointPair> pairs) {
  std::vector<int> images(static_cast<size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  for (auto [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= degree || b >= degree || a == b) {
      throw std::invalid_argument("Permutation::from_pairs: bad pair");
    }
    if (images[static_cast<size_t>(a)] != a || images[static_cast<size_t>(b)] != b) {
      throw std::invalid_argument("Permutation::from_pairs: overlapping pairs");
    }
    images[static_cast<size_t>(a)] = b;
    images[static_cast<size_t>(b)] = a;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::parse(const std::string& cycles, int degree) {
  std::vector<int> images(static_cast<size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  std::vector<char> moved(static_cast<size_t>(degree), 0);
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < cycles.size() && std::isspace(static_cast<unsigned char>(cycles[i]))) ++i;
  };
  skip_ws();
  while (i < cycles.size()) {
    if (cycles[i] != '(') throw std::invalid_argument("Permutation::parse: expected '('");
    ++i;
    std::vector<int> cycle;
    skip_ws();
    while (i < cycles.size() && cycles[i] != ')') {
      int value = 0;
      bool any = false;
      while (i < cycles.size() && std::isdigit(static_cast<unsigned char>(cycles[i]))) {
        value = value * 10 + (cycles[i] - '0');
        ++i;
        any = true;
      }
      if (!any) throw std::invalid_argument("Permutation::parse: expected a point");
      if (value < 1 || value > degree) {
        throw std::invalid_argument("Permutation::parse: point out of range");
      }
      cycle.push_back(value - 1);
      skip_ws();
      if (i < cycles.size() && cycles[i] == ',') {
        ++i;
        skip_ws();
      }
    }
    if (i >= cycles.size()) throw std::invalid_argument("Permutation::parse: missing ')'");
    ++i;  // ')'
    for (size_t k = 0; k < cycle.size(); ++k) {
      int from = cycle[k];
      int to = cycle[(k + 1) % cycle.size()];
      if (moved[static_cast<size_t>(from)]) {
        throw std::invalid_argument("Permutation::parse: point repeated across cycles");
      }
      moved[static_cast<size_t>(from)] = 1;
      images[static_cast<size_t>(from)] = to;
    }
    skip_ws();
  }
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> images(images_.size());
  for (int x = 0; x < degree(); ++x) images[static_cast<size_t>(images_[static_cast<size_t>(x)])] = x;
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (int x = 0; x < degree(); ++x) {
    if (images_[static_cast<size_t>(x)] != x) return false;
  }
  return true;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream out;
  std::vector<char> seen(images_.size(), 0);
  bool any = false;
  for (int start = 0; start < degree(); ++start) {
    if (seen[static_cast<size_t>(start)] || images_[static_cast<size_t>(start)] == start) continue;
    out << '(';
    int x = start;
    bool first = true;
    do {
      seen[static_cast<size_t>(x)] = 1;
      if (!first) out << ',';
      out << (x + 1);
      first = false;
      x = images_[static_cast<size_t>(x)];
    } while (x != start);
    out << ')';
    any = true;
  }
  if (!any) return "()";
  return out.str();
}

Permutation product(const Permutation& g, const Permutation& h) {
  if (g.degree() != h.degree()) throw std::invalid_argument("product: degree mismatch");
  std::vector<int> images(static_cast<size_t>(g.degree()));
  for (int x = 0; x < g.degree(); ++x) images[static_cast<size_t>(x)] = h(g(x));
  return Permutation(std::move(images));
}

Permutation product(const Permutation& a, const Permutation& b, const Permutation& c) {
  return product(product(a, b), c);
}

Permutation product(const Permutation& a, const Permutation& b, const Permutation& c,
                    const Permutation& d) {
  return product(product(product(a, b), c), d);
}

Partition cycle_type(const Permutation& g) {
  std::vector<int> lengths;
  std::vector<char> seen(static_cast<size_t>(g.degree()), 0);
  for (int start = 0; start < g.degree(); ++start) {
    if (seen[static_cast<size_t>(start)]) continue;
    int len = 0;
    int x = start;
    do {
      seen[static_cast<size_t>(x)] = 1;
      ++len;
      x = g(x);
    } while (x != start);
    lengths.push_back(len);
  }
  return Partition(std::move(lengths));
}

std::vector<std::vector<int>> orbits(std::span<const Permutation> gens) {
  if (gens.empty()) throw std::invalid_argument("orbits: need at least one generator");
  int n = gens.front().degree();
  for (const auto& g : gens) {
    if (g.degree() != n) throw std::invalid_argument("orbits: degree mismatch");
  }
  std::vector<int> parent(static_cast<size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  };
  for (const auto& g : gens) {
    for (int x = 0; x < n; ++x) {
      int a = find(x), b = find(g(x));
      if (a != b) parent[static_cast<size_t>(b)] = a;
    }
  }
  std::vector<std::vector<int>> result;
  std::vector<int> index(static_cast<size_t>(n), -1);
  for (int x = 0; x < n; ++x) {
    int root = find(x);
    if (index[static_cast<size_t>(root)] < 0) {
      index[static_cast<size_t>(root)] = static_cast<int>(result.size());
      result.emplace_back();
    }
    result[static_cast<size_t>(index[static_cast<size_t>(root)])].push_back(x);
  }
  return result;
}

bool is_transitive(std::span<const Permutation> gens) { return orbits(gens).size() == 1; }

}  // namespace ramsearch
