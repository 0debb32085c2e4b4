#pragma once

#include <vector>

#include "spfilt/filtration.hpp"

namespace spfilt {

/// A subset is a valid mutation parameter exactly when it is
/// specialisation-closed.
bool check_mutability(const PrimePoset& poset, const Subset& members);
bool check_mutability(const PrimePoset& poset, const std::vector<std::string>& members);

/// Right mutation of a function at an upper set: adds 1 on W, leaves the
/// rest alone. The result is increasing again because W is upper.
PosetHom mutate_function(const PosetHom& f, const UpperSet& w);

/// Same, but validates a raw subset first; throws NotMutable when it is not
/// specialisation-closed.
PosetHom mutate_function(const PosetHom& f, const Subset& raw_members);

/// Right mutation on the filtration side: the step at n becomes
/// (W intersected with the step at n-1) united with the step at n.
SpFiltration mutate_filtration(const SpFiltration& phi, const UpperSet& w);
SpFiltration mutate_filtration(const SpFiltration& phi, const Subset& raw_members);

/// Undoes a right mutation at w: subtracts 1 on w and checks the result is
/// still increasing; throws NotInvertible otherwise.
PosetHom invert_mutation(const PosetHom& f, const UpperSet& w);

/// A constant base value and an ordered run of mutation parameters. Steps
/// are stored as raw masks and validated when the sequence is applied.
struct MutationSequence {
    PosetHandle poset;
    int base = 0;
    std::vector<Subset> steps;
};

/// Writes f as iterated right mutations of the constant function at its
/// minimum: the step at n collects the elements with value > n, for n from
/// the minimum up to the maximum (exclusive). Steps are upper and weakly
/// decreasing; a constant function yields no steps. Throws EmptyPoset.
MutationSequence decompose_to_mutations(const PosetHom& f);

/// Folds the sequence: starts from the constant base and mutates once per
/// step. Throws NotMutable with the step position when a step is not
/// specialisation-closed.
PosetHom apply_mutation_sequence(const MutationSequence& seq);

}  // namespace spfilt
