#include "spfilt/mutation.hpp"

#include <algorithm>

namespace spfilt {

bool check_mutability(const PrimePoset& poset, const Subset& members) {
    return is_upper_set(poset, members);
}

bool check_mutability(const PrimePoset& poset, const std::vector<std::string>& members) {
    return is_upper_set(poset, members);
}

PosetHom mutate_function(const PosetHom& f, const UpperSet& w) {
    if (!same_universe(f.poset(), w.poset()))
        throw std::logic_error("mutation parameter lives on a different poset");
    std::vector<int> values = f.values();
    for (size_t i = 0; i < values.size(); ++i)
        if (w.contains(static_cast<int>(i))) ++values[i];
    return PosetHom(f.poset(), std::move(values));
}

PosetHom mutate_function(const PosetHom& f, const Subset& raw_members) {
    if (!check_mutability(*f.poset(), raw_members)) {
        std::string joined;
        for (const auto& l : f.poset()->labels_of(raw_members)) {
            if (!joined.empty()) joined += ",";
            joined += l;
        }
        throw NotMutable("subset {" + joined + "} is not specialisation-closed");
    }
    return mutate_function(f, detail_make_upper_unchecked(f.poset(), raw_members));
}

SpFiltration mutate_filtration(const SpFiltration& phi, const UpperSet& w) {
    if (!same_universe(phi.poset(), w.poset()))
        throw std::logic_error("mutation parameter lives on a different poset");
    const auto& poset = phi.poset();
    if (poset->empty()) return phi;
    // The new step at n is (w meet old step at n-1) join old step at n.
    // Only indices lo .. hi can change; at lo the result is still the whole
    // poset and from hi+1 on it is empty.
    std::vector<Subset> dense;
    for (int n = phi.lo(); n <= phi.hi(); ++n) {
        const Subset prev = phi.at(n - 1).members();
        const Subset cur = phi.at(n).members();
        Subset next(cur);
        for (size_t i = 0; i < next.size(); ++i)
            if (w.contains(static_cast<int>(i)) && prev[i]) next[i] = true;
        dense.push_back(std::move(next));
    }
    return detail_normalize_filtration(poset, phi.lo(), std::move(dense));
}

SpFiltration mutate_filtration(const SpFiltration& phi, const Subset& raw_members) {
    if (!check_mutability(*phi.poset(), raw_members)) {
        std::string joined;
        for (const auto& l : phi.poset()->labels_of(raw_members)) {
            if (!joined.empty()) joined += ",";
            joined += l;
        }
        throw NotMutable("subset {" + joined + "} is not specialisation-closed");
    }
    return mutate_filtration(phi, detail_make_upper_unchecked(phi.poset(), raw_members));
}

PosetHom invert_mutation(const PosetHom& f, const UpperSet& w) {
    if (!same_universe(f.poset(), w.poset()))
        throw std::logic_error("mutation parameter lives on a different poset");
    std::vector<int> values = f.values();
    for (size_t i = 0; i < values.size(); ++i)
        if (w.contains(static_cast<int>(i))) --values[i];
    for (const auto& [a, b] : f.poset()->cover_pairs())
        if (values[static_cast<size_t>(a)] > values[static_cast<size_t>(b)])
            throw NotInvertible("undoing the mutation leaves a decreasing value from " +
                                f.poset()->label(a) + " to " + f.poset()->label(b));
    return PosetHom(f.poset(), std::move(values));
}

MutationSequence decompose_to_mutations(const PosetHom& f) {
    if (f.poset()->empty())
        throw EmptyPoset("decomposition needs at least one element");
    MutationSequence seq;
    seq.poset = f.poset();
    seq.base = f.min_value();
    const int top = f.max_value();
    for (int n = seq.base; n < top; ++n) {
        Subset mask(f.values().size(), false);
        for (size_t i = 0; i < mask.size(); ++i)
            if (f.value(static_cast<int>(i)) > n) mask[i] = true;
        seq.steps.push_back(std::move(mask));
    }
    return seq;
}

PosetHom apply_mutation_sequence(const MutationSequence& seq) {
    PosetHom f = PosetHom::constant(seq.poset, seq.base);
    for (size_t k = 0; k < seq.steps.size(); ++k) {
        if (!check_mutability(*seq.poset, seq.steps[k]))
            throw NotMutable("step " + std::to_string(k) + " is not specialisation-closed",
                             static_cast<int>(k));
        f = mutate_function(f, detail_make_upper_unchecked(seq.poset, seq.steps[k]));
    }
    return f;
}

}  // namespace spfilt
