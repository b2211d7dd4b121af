#include "ramsearch/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ramsearch {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw std::invalid_argument("Partition: parts must be >= 1");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<int>());
  degree_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::repeated(int part, int count) {
  if (count < 0) throw std::invalid_argument("Partition::repeated: count < 0");
  return Partition(std::vector<int>(static_cast<size_t>(count), part));
}

std::strong_ordering Partition::operator<=>(const Partition& other) const {
  if (auto c = degree_ <=> other.degree_; c != 0) return c;
  return std::lexicographical_compare_three_way(parts_.begin(), parts_.end(),
                                                other.parts_.begin(), other.parts_.end());
}

std::string Partition::to_string() const {
  std::ostringstream out;
  // parts_ is weakly decreasing; emit runs from the back so output ascends
  int i = static_cast<int>(parts_.size()) - 1;
  bool first = true;
  while (i >= 0) {
    int j = i;
    while (j >= 0 && parts_[j] == parts_[i]) --j;
    int run = i - j;
    if (!first) out << ' ';
    out << parts_[i];
    if (run > 1) out << '^' << run;
    first = false;
    i = j;
  }
  return out.str();
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  if (text.find(',') != std::string::npos) {
    std::string cleaned;
    for (char c : text) {
      if (c == '(' || c == ')' || std::isspace(static_cast<unsigned char>(c))) continue;
      cleaned.push_back(c);
    }
    std::istringstream in(cleaned);
    std::string item;
    while (std::getline(in, item, ',')) {
      if (!item.empty()) parts.push_back(std::stoi(item));
    }
  } else {
    std::istringstream in(text);
    std::string token;
    while (in >> token) {
      auto caret = token.find('^');
      if (caret == std::string::npos) {
        parts.push_back(std::stoi(token));
      } else {
        int part = std::stoi(token.substr(0, caret));
        int count = std::stoi(token.substr(caret + 1));
        if (count < 1) throw std::invalid_argument("Partition::parse: exponent < 1");
        for (int k = 0; k < count; ++k) parts.push_back(part);
      }
    }
  }
  if (parts.empty()) throw std::invalid_argument("Partition::parse: no parts in \"" + text + "\"");
  return Partition(std::move(parts));
}

std::vector<Partition> partitions_of(int n, std::optional<int> max_parts) {
  if (n < 1) throw std::invalid_argument("partitions_of: n must be >= 1");
  int limit = max_parts.value_or(n);
  std::vector<Partition> result;
  std::vector<int> current;
  // descending-lex emission: largest available part first
  std::function<void(int, int, int)> descend = [&](int remaining, int max_part, int slots) {
    if (remaining == 0) {
      result.emplace_back(current);
      return;
    }
    if (slots == 0) return;
    int hi = std::min(remaining, max_part);
    for (int p = hi; p >= 1; --p) {
      if (static_cast<long long>(p) * slots < remaining) break;
      current.push_back(p);
      descend(remaining - p, p, slots - 1);
      current.pop_back();
    }
  };
  descend(n, n, limit);
  return result;
}

int ram_degree(const Partition& p) { return p.degree() - p.part_count(); }

int fixed_count(const Partition& p) {
  int count = 0;
  for (int part : p.parts()) {
    if (part == 1) ++count;
  }
  return count;
}

std::optional<int> homogeneity_index(const Partition& p) {
  if (p.empty()) return std::nullopt;
  int r = p.parts().front();
  for (int part : p.parts()) {
    if (part != r) return std::nullopt;
  }
  return r;
}

}  // namespace ramsearch
