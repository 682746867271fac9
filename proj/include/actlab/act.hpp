#pragma once

#include <memory>
#include <string>
#include <vector>

#include "actlab/bitset.hpp"
#include "actlab/monoid.hpp"

namespace actlab {

class Act;
using ActPtr = std::shared_ptr<const Act>;

/// A finite right act over a monoid, given by its full action table.
///
/// apply(a, s) = a·s. Immutable after validated construction; all
/// operations on acts are pure functions.
class Act {
 public:
  /// Validates that the identity acts trivially and that the action is
  /// compatible with the monoid multiplication; throws
  /// IdentityActionFails or CompatibilityFails with a witness.
  static ActPtr make(MonoidPtr monoid,
                     const std::vector<std::vector<int>>& action,
                     std::vector<std::string> labels = {});

  int size() const { return m_; }
  const Monoid& monoid() const { return *monoid_; }
  const MonoidPtr& monoid_ptr() const { return monoid_; }

  int apply(int a, int s) const {
    return action_[static_cast<std::size_t>(a) * monoid_->size() + s];
  }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int a) const { return labels_[a]; }

  /// The cyclic subact aS = {a·s | s ∈ S} (contains a).
  Bitset cyclic(int a) const;

  bool same_table(const Act& o) const {
    return m_ == o.m_ && action_ == o.action_ &&
           monoid_->same_structure(*o.monoid_);
  }

  std::vector<std::vector<int>> rows() const;

 private:
  Act(MonoidPtr monoid, int m, std::vector<int> action,
      std::vector<std::string> labels)
      : monoid_(std::move(monoid)), m_(m), action_(std::move(action)),
        labels_(std::move(labels)) {}

  MonoidPtr monoid_;
  int m_;
  std::vector<int> action_;  // flattened m×|S|, row-major
  std::vector<std::string> labels_;
};

/// A nonempty action-closed subset of an act.
class Subact {
 public:
  /// Checks nonemptiness and closure; throws ParseError on violation.
  static Subact make(ActPtr parent, Bitset members);

  /// Constructs without checking; the caller guarantees the invariants
  /// (used where closure holds by construction).
  static Subact unchecked(ActPtr parent, Bitset members) {
    return Subact(std::move(parent), std::move(members));
  }

  const ActPtr& parent() const { return parent_; }
  const Act& act() const { return *parent_; }
  const Bitset& members() const { return members_; }

  int count() const { return members_.count(); }
  bool is_whole() const { return members_.is_full(); }
  bool is_proper() const { return !is_whole(); }

  bool operator==(const Subact& o) const { return members_ == o.members_; }
  bool operator<(const Subact& o) const { return members_ < o.members_; }

 private:
  Subact(ActPtr parent, Bitset members)
      : parent_(std::move(parent)), members_(std::move(members)) {}

  ActPtr parent_;
  Bitset members_;
};

/// An equivariant map between two acts over the same monoid.
class Hom {
 public:
  /// Validates equivariance and monoid agreement; throws MixedMonoids or
  /// ParseError with a witness description.
  static Hom make(ActPtr source, ActPtr target, std::vector<int> map);

  static Hom unchecked(ActPtr source, ActPtr target, std::vector<int> map) {
    return Hom(std::move(source), std::move(target), std::move(map));
  }

  const ActPtr& source() const { return source_; }
  const ActPtr& target() const { return target_; }
  const std::vector<int>& map() const { return map_; }
  int operator()(int a) const { return map_[a]; }

 private:
  Hom(ActPtr source, ActPtr target, std::vector<int> map)
      : source_(std::move(source)), target_(std::move(target)),
        map_(std::move(map)) {}

  ActPtr source_;
  ActPtr target_;
  std::vector<int> map_;
};

}  // namespace actlab
