#include "spfilt/filtration.hpp"

#include <algorithm>
#include <sstream>

namespace spfilt {

namespace {

bool mask_is_all(const Subset& mask) {
    return std::all_of(mask.begin(), mask.end(), [](bool b) { return b; });
}

bool mask_is_empty(const Subset& mask) {
    return std::none_of(mask.begin(), mask.end(), [](bool b) { return b; });
}

// a contains b elementwise.
bool mask_contains(const Subset& a, const Subset& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (b[i] && !a[i]) return false;
    return true;
}

}  // namespace

PosetHom::PosetHom(PosetHandle poset, std::vector<int> values)
    : poset_(std::move(poset)), values_(std::move(values)) {
    if (values_.size() != static_cast<size_t>(poset_->size()))
        throw std::logic_error("value list size does not match poset");
    for (const auto& [a, b] : poset_->cover_pairs())
        if (values_[static_cast<size_t>(a)] > values_[static_cast<size_t>(b)])
            throw NotIncreasing("value drops from " + poset_->label(a) + " to " +
                                poset_->label(b) + " along a specialisation");
}

PosetHom PosetHom::constant(PosetHandle poset, int value) {
    std::vector<int> values(static_cast<size_t>(poset->size()), value);
    return PosetHom(std::move(poset), std::move(values));
}

int PosetHom::min_value() const {
    if (values_.empty()) throw EmptyPoset("minimum of a function on the empty poset");
    return *std::min_element(values_.begin(), values_.end());
}

int PosetHom::max_value() const {
    if (values_.empty()) throw EmptyPoset("maximum of a function on the empty poset");
    return *std::max_element(values_.begin(), values_.end());
}

bool PosetHom::operator==(const PosetHom& other) const {
    return same_universe(poset_, other.poset_) && values_ == other.values_;
}

bool is_t_function(const PosetHom& f) {
    for (const auto& [a, b] : f.poset()->cover_pairs())
        if (f.value(b) > f.value(a) + 1) return false;
    return true;
}

TFunction::TFunction(PosetHom f) : fn_(std::move(f)) {
    if (!is_t_function(fn_)) {
        for (const auto& [a, b] : fn_.poset()->cover_pairs())
            if (fn_.value(b) > fn_.value(a) + 1)
                throw NotTFunction("value jumps by more than one from " + fn_.poset()->label(a) +
                                   " to " + fn_.poset()->label(b));
    }
}

SpFiltration detail_normalize_filtration(PosetHandle poset, int base, std::vector<Subset> steps) {
    if (poset->empty()) {
        std::vector<UpperSet> window;
        window.push_back(UpperSet::none(poset));
        return SpFiltration(std::move(poset), -1, std::move(window));
    }
    // First step is the whole poset by contract; keep the last such step,
    // drop the empty tail.
    size_t first = 0;
    for (size_t i = 0; i < steps.size(); ++i)
        if (mask_is_all(steps[i])) first = i;
    size_t end = steps.size();
    while (end > first + 1 && mask_is_empty(steps[end - 1])) --end;

    std::vector<UpperSet> window;
    window.reserve(end - first);
    for (size_t i = first; i < end; ++i)
        window.push_back(detail_make_upper_unchecked(poset, std::move(steps[i])));
    return SpFiltration(std::move(poset), base + static_cast<int>(first), std::move(window));
}

SpFiltration SpFiltration::make(PosetHandle poset, std::vector<std::pair<int, Subset>> steps) {
    std::stable_sort(steps.begin(), steps.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (size_t i = 0; i + 1 < steps.size(); ++i)
        if (steps[i].first == steps[i + 1].first)
            throw DuplicateStep("step index " + std::to_string(steps[i].first) + " listed twice");
    for (const auto& [n, mask] : steps)
        if (!is_upper_set(*poset, mask))
            throw NotUpperSet("step at " + std::to_string(n) + " is not specialisation-closed", n);
    for (size_t i = 0; i + 1 < steps.size(); ++i)
        if (!mask_contains(steps[i].second, steps[i + 1].second))
            throw NotDecreasing("step at " + std::to_string(steps[i + 1].first) +
                                    " is not contained in its predecessor",
                                steps[i + 1].first);

    if (poset->empty()) return detail_normalize_filtration(std::move(poset), -1, {});

    if (steps.empty() || !mask_is_all(steps.front().second))
        throw NotBounded("no step equal to the whole poset");
    if (!mask_is_empty(steps.back().second))
        throw NotBounded("no empty step after the listed ones");

    // Fill the gaps between listed indices by constancy from the left.
    const int base = steps.front().first;
    const int last = steps.back().first;
    std::vector<Subset> dense;
    dense.reserve(static_cast<size_t>(last - base + 1));
    size_t k = 0;
    for (int n = base; n <= last; ++n) {
        if (k + 1 < steps.size() && steps[k + 1].first == n) ++k;
        dense.push_back(steps[k].second);
    }
    return detail_normalize_filtration(std::move(poset), base, std::move(dense));
}

SpFiltration SpFiltration::standard(PosetHandle poset) {
    return function_to_filtration(PosetHom::constant(std::move(poset), 0));
}

UpperSet SpFiltration::at(int n) const {
    if (n < lo_) return UpperSet::all(poset_);
    if (n >= hi()) return UpperSet::none(poset_);
    return window_[static_cast<size_t>(n - lo_)];
}

bool SpFiltration::operator==(const SpFiltration& other) const {
    if (!same_universe(poset_, other.poset_) || lo_ != other.lo_ ||
        window_.size() != other.window_.size())
        return false;
    for (size_t i = 0; i < window_.size(); ++i)
        if (window_[i].members() != other.window_[i].members()) return false;
    return true;
}

PosetHom filtration_to_function(const SpFiltration& phi) {
    const auto& poset = phi.poset();
    std::vector<int> values(static_cast<size_t>(poset->size()), 0);
    // Steps decrease, so each element belongs to a prefix of the window and
    // its value is the first index where it is gone.
    for (int i = 0; i < poset->size(); ++i) {
        int n = phi.lo();
        while (n < phi.hi() && phi.window()[static_cast<size_t>(n - phi.lo())].contains(i)) ++n;
        values[static_cast<size_t>(i)] = n;
    }
    return PosetHom(poset, std::move(values));
}

SpFiltration function_to_filtration(const PosetHom& f) {
    const auto& poset = f.poset();
    if (poset->empty()) return detail_normalize_filtration(poset, -1, {});
    const int base = f.min_value() - 1;
    const int top = f.max_value();
    std::vector<Subset> dense;
    for (int n = base; n < top; ++n) {
        Subset mask(static_cast<size_t>(poset->size()), false);
        for (int i = 0; i < poset->size(); ++i)
            if (f.value(i) > n) mask[static_cast<size_t>(i)] = true;
        dense.push_back(std::move(mask));
    }
    return detail_normalize_filtration(poset, base, std::move(dense));
}

PosetHom height_function(PosetHandle poset) {
    std::vector<int> values = poset->heights();
    return PosetHom(std::move(poset), std::move(values));
}

}  // namespace spfilt
