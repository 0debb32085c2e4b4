#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "spfilt/errors.hpp"

namespace spfilt {

class PrimePoset;
class UpperSet;

using PosetHandle = std::shared_ptr<const PrimePoset>;

// Subset of a poset's elements, indexed like PrimePoset::labels().
using Subset = std::vector<bool>;

/// Finite poset of prime labels ordered by specialisation. The relation is
/// stored transitively closed; the covering relation is derived once at
/// construction. Instances are immutable and shared through PosetHandle.
///
/// Convention: a <= b means "b is a specialisation of a", so upward-closed
/// subsets are exactly the specialisation-closed ones.
class PrimePoset {
public:
    /// Builds a poset from labelled elements and generating relations
    /// (each pair (a, b) declares a < b). Throws DuplicateLabel, BadLabel,
    /// UnknownLabel, or CycleDetected when the closure is not antisymmetric.
    static PosetHandle build(std::vector<std::string> elements,
                             const std::vector<std::pair<std::string, std::string>>& relations);

    /// Total order c0 < c1 < ... < c<n-1>. Throws InvalidSize unless n >= 1.
    static PosetHandle chain(int n);

    /// One minimal element g under k pairwise incomparable maximal elements
    /// p1..pk. Throws InvalidSize unless k >= 0.
    static PosetHandle fan(int k);

    /// Fan with caller-chosen labels: root < each leaf, leaves incomparable.
    static PosetHandle fan_labeled(std::string root, std::vector<std::string> leaves);

    int size() const { return static_cast<int>(labels_.size()); }
    bool empty() const { return labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int i) const { return labels_[static_cast<size_t>(i)]; }

    /// Index of a label; throws UnknownLabel.
    int index(const std::string& label) const;

    /// Index of a label, or -1 when absent.
    int find(const std::string& label) const;

    bool leq(int a, int b) const { return leq_[static_cast<size_t>(a)][static_cast<size_t>(b)]; }

    /// a is covered by b: a < b with nothing strictly between.
    bool covers(int a, int b) const;

    /// All covering pairs (a, b), a covered by b, in (a, b) index order.
    const std::vector<std::pair<int, int>>& cover_pairs() const { return covers_; }

    /// Length of the longest chain strictly below each element
    /// (0 on minimal elements).
    std::vector<int> heights() const;

    /// Translates labels to a membership mask; throws UnknownLabel.
    Subset subset_of(const std::vector<std::string>& members) const;

    /// Labels of a mask, sorted lexicographically.
    std::vector<std::string> labels_of(const Subset& members) const;

    /// Structural equality: same labels in the same order, same relation.
    bool operator==(const PrimePoset& other) const;
    bool operator!=(const PrimePoset& other) const { return !(*this == other); }

private:
    PrimePoset() = default;

    std::vector<std::string> labels_;
    std::vector<std::vector<bool>> leq_;        // reflexive-transitive closure
    std::vector<std::pair<int, int>> covers_;
};

/// Two handles describe the same universe when they point to one poset or to
/// structurally equal ones.
bool same_universe(const PosetHandle& a, const PosetHandle& b);

/// Upward-closed (specialisation-closed) subset of a poset. Construction
/// validates closure, so a held value is always genuinely upper.
class UpperSet {
public:
    static UpperSet all(PosetHandle poset);
    static UpperSet none(PosetHandle poset);

    /// Validates the mask; throws NotUpperSet.
    static UpperSet from_members(PosetHandle poset, Subset members);

    /// Validates a label list; throws UnknownLabel or NotUpperSet.
    static UpperSet from_labels(PosetHandle poset, const std::vector<std::string>& members);

    const PosetHandle& poset() const { return poset_; }
    const Subset& members() const { return members_; }
    bool contains(int i) const { return members_[static_cast<size_t>(i)]; }
    int count() const;
    bool is_all() const;
    bool is_empty() const;
    std::vector<std::string> sorted_labels() const;

    bool operator==(const UpperSet& other) const;
    bool operator!=(const UpperSet& other) const { return !(*this == other); }

private:
    UpperSet(PosetHandle poset, Subset members)
        : poset_(std::move(poset)), members_(std::move(members)) {}

    friend UpperSet detail_make_upper_unchecked(PosetHandle, Subset);

    PosetHandle poset_;
    Subset members_;
};

// Internal constructor for masks already known to be upward closed.
UpperSet detail_make_upper_unchecked(PosetHandle poset, Subset members);

UpperSet union_of(const UpperSet& a, const UpperSet& b);
UpperSet intersection_of(const UpperSet& a, const UpperSet& b);

/// True iff every element of the subset has all its specialisations inside.
bool is_upper_set(const PrimePoset& poset, const Subset& members);
bool is_upper_set(const PrimePoset& poset, const std::vector<std::string>& members);

/// Smallest upper set containing the given subset.
UpperSet upper_closure(PosetHandle poset, const Subset& members);
UpperSet upper_closure(PosetHandle poset, const std::vector<std::string>& members);

/// Every upper set, sorted by cardinality then lexicographic member list.
/// Guarded to posets of at most 20 elements; throws TooLarge beyond that.
std::vector<UpperSet> enumerate_upper_sets(PosetHandle poset);

}  // namespace spfilt
