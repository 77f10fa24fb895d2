#include "kq/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace kq {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
}

int Partition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::all_odd() const {
  return std::all_of(parts_.begin(), parts_.end(),
                     [](int p) { return p % 2 == 1; });
}

bool Partition::all_distinct() const {
  for (size_t i = 1; i < parts_.size(); ++i)
    if (parts_[i] == parts_[i - 1]) return false;
  return true;
}

Partition Partition::concat(const Partition& o) const {
  std::vector<int> v;
  v.reserve(parts_.size() + o.parts_.size());
  std::merge(parts_.begin(), parts_.end(), o.parts_.begin(), o.parts_.end(),
             std::back_inserter(v), std::greater<int>());
  return Partition(std::move(v));
}

Partition Partition::with_part(int p) const { return concat(Partition({p})); }

int Partition::multiplicity(int i) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

namespace {

// Lexicographic comparison with implicit zero padding.
std::strong_ordering lex_cmp(const Partition& a, const Partition& b) {
  int n = std::max(a.length(), b.length());
  for (int i = 0; i < n; ++i) {
    if (a.part(i) != b.part(i))
      return a.part(i) < b.part(i) ? std::strong_ordering::less
                                   : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

}  // namespace

bool Partition::operator<(const Partition& o) const {
  if (weight() != o.weight()) return weight() < o.weight();
  return lex_cmp(*this, o) == std::strong_ordering::greater;
}

std::string Partition::str() const {
  std::ostringstream out;
  out << "[";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out << ",";
    out << parts_[i];
  }
  out << "]";
  return out.str();
}

std::strong_ordering cmp_succ(const Partition& kappa, const Partition& mu) {
  if (kappa.weight() != mu.weight())
    return kappa.weight() < mu.weight() ? std::strong_ordering::less
                                        : std::strong_ordering::greater;
  auto lex = lex_cmp(kappa, mu);
  if (lex == std::strong_ordering::equal) return std::strong_ordering::equal;
  // lexicographically smaller means larger in the succ order
  return lex == std::strong_ordering::less ? std::strong_ordering::greater
                                           : std::strong_ordering::less;
}

std::strong_ordering cmp_succ_prime(const Partition& kappa,
                                    const Partition& mu) {
  if (kappa.weight() != mu.weight())
    return kappa.weight() < mu.weight() ? std::strong_ordering::less
                                        : std::strong_ordering::greater;
  return lex_cmp(kappa, mu);
}

std::vector<Partition> enumerate_partitions(int n, PartitionClass cls) {
  std::vector<Partition> out;
  std::vector<int> cur;
  // Emit parts in descending-lex order: try the largest first part first.
  std::function<void(int, int)> rec = [&](int rem, int max_part) {
    if (rem == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rem, max_part); p >= 1; --p) {
      if (cls == PartitionClass::odd && p % 2 == 0) continue;
      cur.push_back(p);
      rec(rem - p, cls == PartitionClass::strict ? p - 1 : p);
      cur.pop_back();
    }
  };
  if (n < 0) return out;
  rec(n, n == 0 ? 1 : n);
  return out;
}

std::vector<Partition> enumerate_partitions_up_to(int max_weight,
                                                  PartitionClass cls) {
  std::vector<Partition> out;
  for (int w = 0; w <= max_weight; ++w) {
    auto v = enumerate_partitions(w, cls);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

Int z_lambda(const Partition& lambda) {
  Int z = 1;
  int i = 0;
  const auto& parts = lambda.parts();
  int n = lambda.length();
  while (i < n) {
    int j = i;
    while (j < n && parts[static_cast<size_t>(j)] == parts[static_cast<size_t>(i)]) ++j;
    int m = j - i;
    for (int k = 0; k < m; ++k) z *= Int(parts[static_cast<size_t>(i)]);
    for (int k = 2; k <= m; ++k) z *= Int(k);
    i = j;
  }
  return z;
}

}  // namespace kq
