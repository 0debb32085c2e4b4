#include "spfilt/poset.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <sstream>

namespace spfilt {

namespace {

void check_label(const std::string& label) {
    if (label.empty()) throw BadLabel("element label is empty");
}

}  // namespace

PosetHandle PrimePoset::build(std::vector<std::string> elements,
                              const std::vector<std::pair<std::string, std::string>>& relations) {
    auto poset = std::shared_ptr<PrimePoset>(new PrimePoset());
    const size_t n = elements.size();
    for (size_t i = 0; i < n; ++i) {
        check_label(elements[i]);
        for (size_t j = i + 1; j < n; ++j)
            if (elements[i] == elements[j])
                throw DuplicateLabel("element '" + elements[i] + "' declared twice");
    }
    poset->labels_ = std::move(elements);
    poset->leq_.assign(n, std::vector<bool>(n, false));
    for (size_t i = 0; i < n; ++i) poset->leq_[i][i] = true;
    for (const auto& [a, b] : relations) {
        const int ia = poset->find(a);
        if (ia < 0) throw UnknownLabel("relation names undeclared element '" + a + "'");
        const int ib = poset->find(b);
        if (ib < 0) throw UnknownLabel("relation names undeclared element '" + b + "'");
        poset->leq_[static_cast<size_t>(ia)][static_cast<size_t>(ib)] = true;
    }

    // Warshall closure, then antisymmetry.
    for (size_t k = 0; k < n; ++k)
        for (size_t i = 0; i < n; ++i)
            if (poset->leq_[i][k])
                for (size_t j = 0; j < n; ++j)
                    if (poset->leq_[k][j]) poset->leq_[i][j] = true;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (poset->leq_[i][j] && poset->leq_[j][i])
                throw CycleDetected("elements '" + poset->labels_[i] + "' and '" +
                                    poset->labels_[j] + "' order each other");

    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) {
            if (a == b || !poset->leq_[a][b]) continue;
            bool direct = true;
            for (size_t c = 0; c < n && direct; ++c)
                if (c != a && c != b && poset->leq_[a][c] && poset->leq_[c][b]) direct = false;
            if (direct) poset->covers_.emplace_back(static_cast<int>(a), static_cast<int>(b));
        }
    return poset;
}

PosetHandle PrimePoset::chain(int n) {
    if (n < 1) throw InvalidSize("chain length must be at least 1, got " + std::to_string(n));
    std::vector<std::string> elements;
    std::vector<std::pair<std::string, std::string>> relations;
    for (int i = 0; i < n; ++i) elements.push_back("c" + std::to_string(i));
    for (int i = 0; i + 1 < n; ++i) relations.emplace_back(elements[static_cast<size_t>(i)],
                                                           elements[static_cast<size_t>(i) + 1]);
    return build(std::move(elements), relations);
}

PosetHandle PrimePoset::fan(int k) {
    if (k < 0) throw InvalidSize("fan width must be non-negative, got " + std::to_string(k));
    std::vector<std::string> leaves;
    for (int i = 1; i <= k; ++i) leaves.push_back("p" + std::to_string(i));
    return fan_labeled("g", std::move(leaves));
}

PosetHandle PrimePoset::fan_labeled(std::string root, std::vector<std::string> leaves) {
    std::vector<std::string> elements;
    elements.push_back(root);
    std::vector<std::pair<std::string, std::string>> relations;
    for (auto& leaf : leaves) {
        relations.emplace_back(root, leaf);
        elements.push_back(std::move(leaf));
    }
    return build(std::move(elements), relations);
}

int PrimePoset::index(const std::string& label) const {
    const int i = find(label);
    if (i < 0) throw UnknownLabel("no element '" + label + "' in this poset");
    return i;
}

int PrimePoset::find(const std::string& label) const {
    for (size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return static_cast<int>(i);
    return -1;
}

bool PrimePoset::covers(int a, int b) const {
    return std::find(covers_.begin(), covers_.end(), std::make_pair(a, b)) != covers_.end();
}

std::vector<int> PrimePoset::heights() const {
    const int n = size();
    std::vector<int> height(static_cast<size_t>(n), -1);
    std::function<int(int)> eval = [&](int i) {
        int& h = height[static_cast<size_t>(i)];
        if (h >= 0) return h;
        h = 0;
        for (const auto& [a, b] : covers_)
            if (b == i) h = std::max(h, eval(a) + 1);
        return h;
    };
    for (int i = 0; i < n; ++i) eval(i);
    return height;
}

Subset PrimePoset::subset_of(const std::vector<std::string>& members) const {
    Subset mask(static_cast<size_t>(size()), false);
    for (const auto& label : members) mask[static_cast<size_t>(index(label))] = true;
    return mask;
}

std::vector<std::string> PrimePoset::labels_of(const Subset& members) const {
    std::vector<std::string> out;
    for (size_t i = 0; i < members.size(); ++i)
        if (members[i]) out.push_back(labels_[i]);
    std::sort(out.begin(), out.end());
    return out;
}

bool PrimePoset::operator==(const PrimePoset& other) const {
    return labels_ == other.labels_ && leq_ == other.leq_;
}

bool same_universe(const PosetHandle& a, const PosetHandle& b) {
    return a == b || (a && b && *a == *b);
}

UpperSet UpperSet::all(PosetHandle poset) {
    Subset mask(static_cast<size_t>(poset->size()), true);
    return UpperSet(std::move(poset), std::move(mask));
}

UpperSet UpperSet::none(PosetHandle poset) {
    Subset mask(static_cast<size_t>(poset->size()), false);
    return UpperSet(std::move(poset), std::move(mask));
}

UpperSet UpperSet::from_members(PosetHandle poset, Subset members) {
    if (!is_upper_set(*poset, members)) {
        std::string joined;
        for (const auto& l : poset->labels_of(members)) {
            if (!joined.empty()) joined += ",";
            joined += l;
        }
        throw NotUpperSet("subset {" + joined + "} is not specialisation-closed");
    }
    return UpperSet(std::move(poset), std::move(members));
}

UpperSet UpperSet::from_labels(PosetHandle poset, const std::vector<std::string>& members) {
    Subset mask = poset->subset_of(members);
    return from_members(std::move(poset), std::move(mask));
}

int UpperSet::count() const {
    return static_cast<int>(std::count(members_.begin(), members_.end(), true));
}

bool UpperSet::is_all() const { return count() == poset_->size(); }

bool UpperSet::is_empty() const { return count() == 0; }

std::vector<std::string> UpperSet::sorted_labels() const { return poset_->labels_of(members_); }

bool UpperSet::operator==(const UpperSet& other) const {
    return same_universe(poset_, other.poset_) && members_ == other.members_;
}

UpperSet detail_make_upper_unchecked(PosetHandle poset, Subset members) {
    return UpperSet(std::move(poset), std::move(members));
}

UpperSet union_of(const UpperSet& a, const UpperSet& b) {
    if (!same_universe(a.poset(), b.poset()))
        throw std::logic_error("union of upper sets over different posets");
    Subset mask = a.members();
    for (size_t i = 0; i < mask.size(); ++i)
        if (b.members()[i]) mask[i] = true;
    return detail_make_upper_unchecked(a.poset(), std::move(mask));
}

UpperSet intersection_of(const UpperSet& a, const UpperSet& b) {
    if (!same_universe(a.poset(), b.poset()))
        throw std::logic_error("intersection of upper sets over different posets");
    Subset mask = a.members();
    for (size_t i = 0; i < mask.size(); ++i)
        if (!b.members()[i]) mask[i] = false;
    return detail_make_upper_unchecked(a.poset(), std::move(mask));
}

bool is_upper_set(const PrimePoset& poset, const Subset& members) {
    if (members.size() != static_cast<size_t>(poset.size()))
        throw std::logic_error("membership mask size does not match poset");
    for (const auto& [a, b] : poset.cover_pairs())
        if (members[static_cast<size_t>(a)] && !members[static_cast<size_t>(b)]) return false;
    return true;
}

bool is_upper_set(const PrimePoset& poset, const std::vector<std::string>& members) {
    return is_upper_set(poset, poset.subset_of(members));
}

UpperSet upper_closure(PosetHandle poset, const Subset& members) {
    if (members.size() != static_cast<size_t>(poset->size()))
        throw std::logic_error("membership mask size does not match poset");
    const int n = poset->size();
    Subset mask(static_cast<size_t>(n), false);
    for (int i = 0; i < n; ++i) {
        if (!members[static_cast<size_t>(i)]) continue;
        for (int j = 0; j < n; ++j)
            if (poset->leq(i, j)) mask[static_cast<size_t>(j)] = true;
    }
    return detail_make_upper_unchecked(std::move(poset), std::move(mask));
}

UpperSet upper_closure(PosetHandle poset, const std::vector<std::string>& members) {
    Subset mask = poset->subset_of(members);
    return upper_closure(std::move(poset), mask);
}

std::vector<UpperSet> enumerate_upper_sets(PosetHandle poset) {
    const int n = poset->size();
    if (n > 20)
        throw TooLarge("upper-set enumeration handles at most 20 elements, poset has " +
                       std::to_string(n));

    // up[i]: mask of everything above element i, including i itself.
    std::vector<uint32_t> up(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (poset->leq(i, j)) up[static_cast<size_t>(i)] |= uint32_t{1} << j;

    std::vector<uint32_t> found;
    const uint32_t limit = n == 0 ? 1u : (uint32_t{1} << n);
    for (uint32_t mask = 0; mask < limit; ++mask) {
        bool upper = true;
        for (int i = 0; i < n && upper; ++i)
            if ((mask >> i & 1u) && (up[static_cast<size_t>(i)] & ~mask)) upper = false;
        if (upper) found.push_back(mask);
        if (n == 0) break;
    }

    // Element indices in label order; the tie-break below walks them so the
    // final order is cardinality-major, then lexicographic on member lists.
    std::vector<int> by_label(static_cast<size_t>(n));
    std::iota(by_label.begin(), by_label.end(), 0);
    std::sort(by_label.begin(), by_label.end(),
              [&](int a, int b) { return poset->label(a) < poset->label(b); });
    std::sort(found.begin(), found.end(), [&](uint32_t a, uint32_t b) {
        const int ca = std::popcount(a);
        const int cb = std::popcount(b);
        if (ca != cb) return ca < cb;
        for (int idx : by_label) {
            const bool in_a = a >> idx & 1u;
            const bool in_b = b >> idx & 1u;
            // With equal cardinality the set holding the first differing
            // label has the lexicographically smaller member list.
            if (in_a != in_b) return in_a;
        }
        return false;
    });

    std::vector<UpperSet> out;
    out.reserve(found.size());
    for (uint32_t mask : found) {
        Subset bits(static_cast<size_t>(n), false);
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1u) bits[static_cast<size_t>(i)] = true;
        out.push_back(detail_make_upper_unchecked(poset, std::move(bits)));
    }
    return out;
}

}  // namespace spfilt
