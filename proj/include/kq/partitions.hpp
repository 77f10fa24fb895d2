#pragma once

#include <compare>
#include <string>
#include <vector>

#include "kq/coeff.hpp"

namespace kq {

/// Integer partition: weakly decreasing sequence of positive parts.
/// The empty partition is the unique partition of 0.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int weight() const;
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int part(int i) const {
    return i < length() ? parts_[static_cast<size_t>(i)] : 0;
  }

  bool all_odd() const;
  bool all_distinct() const;

  /// Multiset union (product of the corresponding monomials).
  Partition concat(const Partition& o) const;
  /// Partition with one extra part inserted.
  Partition with_part(int p) const;
  /// Multiplicity of i among the parts.
  int multiplicity(int i) const;

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return !(*this == o); }
  /// Canonical order used everywhere for term listing and map keys:
  /// weight ascending, then lexicographically descending within a weight.
  bool operator<(const Partition& o) const;

  std::string str() const;  // e.g. "[3,1,1]"

 private:
  std::vector<int> parts_;
};

enum class PartitionClass { all, odd, strict };

/// All partitions of n in the class, in canonical (descending-lex) order.
std::vector<Partition> enumerate_partitions(int n, PartitionClass cls);
/// All partitions of weight 0..max_weight in the class, canonical order.
std::vector<Partition> enumerate_partitions_up_to(int max_weight,
                                                  PartitionClass cls);

/// z_lambda = prod_i i^{m_i} * m_i!
Int z_lambda(const Partition& lambda);

/// The rewriting order of the odd-expansion argument: kappa > mu iff
/// |kappa| > |mu|, or equal weights and kappa lexicographically smaller.
std::strong_ordering cmp_succ(const Partition& kappa, const Partition& mu);

/// The strict-expansion order: kappa > mu iff |kappa| > |mu|, or equal
/// weights and kappa lexicographically greater.
std::strong_ordering cmp_succ_prime(const Partition& kappa,
                                    const Partition& mu);

}  // namespace kq
