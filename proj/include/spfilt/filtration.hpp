#pragma once

#include <utility>
#include <vector>

#include "spfilt/poset.hpp"

namespace spfilt {

/// Increasing integer function on a poset. Construction validates that
/// p <= q implies value(p) <= value(q); throws NotIncreasing otherwise.
class PosetHom {
public:
    PosetHom(PosetHandle poset, std::vector<int> values);

    static PosetHom constant(PosetHandle poset, int value);

    const PosetHandle& poset() const { return poset_; }
    const std::vector<int>& values() const { return values_; }
    int value(int i) const { return values_[static_cast<size_t>(i)]; }
    int value(const std::string& label) const { return values_[static_cast<size_t>(poset_->index(label))]; }

    /// Extremes of the image; throw EmptyPoset on the empty poset.
    int min_value() const;
    int max_value() const;

    bool operator==(const PosetHom& other) const;
    bool operator!=(const PosetHom& other) const { return !(*this == other); }

private:
    PosetHandle poset_;
    std::vector<int> values_;
};

/// True iff f steps by at most one along every covering pair, i.e.
/// f(q) <= f(p) + 1 whenever p is covered by q.
bool is_t_function(const PosetHom& f);

/// Increasing function that additionally satisfies the covering-step
/// condition checked by is_t_function. The constructor throws NotTFunction.
class TFunction {
public:
    explicit TFunction(PosetHom f);

    const PosetHom& fn() const { return fn_; }

private:
    PosetHom fn_;
};

/// Bounded decreasing filtration of a poset by upper sets.
///
/// A filtration assigns an upper set to every integer, equal to the whole
/// poset far to the left and empty far to the right. Values are kept in
/// normal form: lo() is the greatest index whose step is the whole poset,
/// hi() the least index whose step is empty, and window() stores the steps
/// at lo() .. hi()-1. On the empty poset the unique filtration is stored
/// with the canonical window [-1, 0).
class SpFiltration {
public:
    /// Builds a filtration from explicitly listed steps. Unlisted indices
    /// between listed ones take the step of the nearest listed index below.
    /// The first listed step must be the whole poset and the last must be
    /// empty; otherwise the two-sided constancy is not exhibited and
    /// NotBounded is thrown. Also throws NotUpperSet(n) and NotDecreasing(n)
    /// with the offending index, and DuplicateStep on a repeated index.
    static SpFiltration make(PosetHandle poset, std::vector<std::pair<int, Subset>> steps);

    /// Filtration of the constant-0 function: whole poset below 0, empty
    /// from 0 on.
    static SpFiltration standard(PosetHandle poset);

    const PosetHandle& poset() const { return poset_; }
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(window_.size()); }

    /// Step at an arbitrary index, including the implicit tails.
    UpperSet at(int n) const;

    /// Stored steps at lo() .. hi()-1; the first is the whole poset.
    const std::vector<UpperSet>& window() const { return window_; }

    bool operator==(const SpFiltration& other) const;
    bool operator!=(const SpFiltration& other) const { return !(*this == other); }

private:
    SpFiltration(PosetHandle poset, int lo, std::vector<UpperSet> window)
        : poset_(std::move(poset)), lo_(lo), window_(std::move(window)) {}

    friend SpFiltration detail_normalize_filtration(PosetHandle, int, std::vector<Subset>);

    PosetHandle poset_;
    int lo_;
    std::vector<UpperSet> window_;
};

// Internal: trims a dense run of steps (starting at index `base`, known to
// begin with the whole poset, implicitly empty after the run) to normal form.
// Masks must already be upward closed and weakly decreasing.
SpFiltration detail_normalize_filtration(PosetHandle poset, int base, std::vector<Subset> steps);

/// The function sending each element to the unique index where it leaves the
/// filtration: f(p) = n iff p lies in the step at n-1 but not the one at n.
PosetHom filtration_to_function(const SpFiltration& phi);

/// The filtration whose step at n collects the elements with value > n.
/// Inverse of filtration_to_function.
SpFiltration function_to_filtration(const PosetHom& f);

/// Sends each element to the length of the longest chain below it.
PosetHom height_function(PosetHandle poset);

}  // namespace spfilt
