#pragma once

#include <memory>
#include <string>
#include <vector>

#include "actlab/bitset.hpp"

namespace actlab {

class Monoid;
using MonoidPtr = std::shared_ptr<const Monoid>;

/// A finite monoid given by its full multiplication table.
///
/// Element indices run over 0..size()-1; table(s, t) = s·t. Instances
/// are immutable after construction and safe to share across threads.
class Monoid {
 public:
  /// Validates associativity and the identity law; throws NotAssociative
  /// or IdentityLawFails with the offending witness.
  static MonoidPtr make(const std::vector<std::vector<int>>& table,
                        int identity,
                        std::vector<std::string> labels = {});

  int size() const { return n_; }
  int identity() const { return identity_; }
  int mul(int s, int t) const { return table_[static_cast<std::size_t>(s) * n_ + t]; }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int s) const { return labels_[s]; }

  /// true iff s·t = identity for some t.
  bool right_invertible(int s) const;

  /// {s | s is not right invertible}; empty iff the monoid is a group.
  Bitset non_right_invertible() const;

  /// true iff every element has a two-sided inverse.
  bool is_group() const;

  /// Idempotent elements (e·e = e).
  std::vector<int> idempotents() const;

  /// A minimal set of non-identity generators (greedy, deterministic).
  /// Empty for the trivial monoid.
  std::vector<int> generating_set() const;

  /// Structural equality: same size, identity and table.
  bool same_structure(const Monoid& o) const {
    return n_ == o.n_ && identity_ == o.identity_ && table_ == o.table_;
  }

 private:
  Monoid(int n, int identity, std::vector<int> table,
         std::vector<std::string> labels)
      : n_(n), identity_(identity), table_(std::move(table)),
        labels_(std::move(labels)) {}

  int n_;
  int identity_;
  std::vector<int> table_;  // flattened n×n, row-major
  std::vector<std::string> labels_;
};

}  // namespace actlab
