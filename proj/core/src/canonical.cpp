#include "ramsearch/canonical.hpp"

#include <stdexcept>

namespace ramsearch {

Permutation period3_element(int degree) {
  if (degree % 3 != 0) throw std::invalid_argument("period3_element: degree must be divisible by 3");
  std::vector<int> images(static_cast<size_t>(degree));
  for (int base = 0; base < degree; base += 3) {
    images[static_cast<size_t>(base)] = base + 1;
    images[static_cast<size_t>(base + 1)] = base + 2;
    images[static_cast<size_t>(base + 2)] = base;
  }
  return Permutation(std::move(images));
}

namespace {

struct Enumerator {
  int degree;
  int pair_count;
  const std::function<bool(std::span<const PointPair>)>& accept;
  const std::function<void(std::span<const PointPair>)>& emit;
  std::vector<char> used;
  std::vector<PointPair> pairs;

  void run() {
    used.assign(static_cast<size_t>(degree), 0);
    pairs.clear();
    pairs.reserve(static_cast<size_t>(pair_count));
    descend(0);
  }

  void place(int a, int b, int next_xi) {
    used[static_cast<size_t>(a)] = 1;
    used[static_cast<size_t>(b)] = 1;
    pairs.emplace_back(a, b);
    if (accept(std::span<const PointPair>(pairs.data(), pairs.size()))) {
      descend(next_xi);
    }
    pairs.pop_back();
    used[static_cast<size_t>(a)] = 0;
    used[static_cast<size_t>(b)] = 0;
  }

  // xi = number of 3-blocks touched by the pairs placed so far
  void descend(int xi) {
    if (static_cast<int>(pairs.size()) == pair_count) {
      emit(std::span<const PointPair>(pairs.data(), pairs.size()));
      return;
    }
    int a = 0;
    while (a < degree && used[static_cast<size_t>(a)]) ++a;
    if (a >= degree) return;
    int xi_a = std::max(xi, a / 3 + 1);
    int reach = std::min(degree, 3 * xi_a);
    for (int b = a + 1; b < reach; ++b) {
      if (used[static_cast<size_t>(b)]) continue;
      place(a, b, xi_a);
    }
    if (reach < degree) {
      // first point of the next untouched block
      place(a, reach, xi_a + 1);
    }
  }
};

}  // namespace

void canonical_involutions(int degree, int pair_count,
                           const std::function<bool(std::span<const PointPair>)>& accept,
                           const std::function<void(std::span<const PointPair>)>& emit) {
  if (degree % 3 != 0 || degree <= 0) {
    throw std::invalid_argument("canonical_involutions: degree must be a positive multiple of 3");
  }
  if (pair_count < 1 || 2 * pair_count > degree) {
    throw std::invalid_argument("canonical_involutions: bad pair count");
  }
  Enumerator e{degree, pair_count, accept, emit, {}, {}};
  e.run();
}

std::vector<std::vector<PointPair>> all_canonical_involutions(int degree) {
  std::vector<std::vector<PointPair>> out;
  canonical_involutions(
      degree, degree / 2, [](std::span<const PointPair>) { return true; },
      [&](std::span<const PointPair> pairs) { out.emplace_back(pairs.begin(), pairs.end()); });
  return out;
}

}  // namespace ramsearch
