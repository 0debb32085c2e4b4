#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spfilt/filtration.hpp"

namespace spfilt {

/// Deterministic Miller-Rabin primality test, exact on all 64-bit inputs.
bool is_prime_u64(uint64_t n);

/// Finite or cofinite set of prime numbers, the two kinds of subsets of the
/// primes this calculus ever produces. The support is sorted, duplicate-free
/// and validated prime by prime (NotPrime otherwise). A cofinite value
/// denotes all primes outside its support.
class ZPrimeSet {
public:
    static ZPrimeSet finite(std::vector<uint64_t> support);
    static ZPrimeSet cofinite(std::vector<uint64_t> support);

    bool is_cofinite() const { return cofinite_; }
    const std::vector<uint64_t>& support() const { return support_; }

    bool contains(uint64_t p) const;
    /// Empty in the literal sense: finite with empty support.
    bool is_empty() const { return !cofinite_ && support_.empty(); }
    /// The whole set of primes: cofinite with empty support.
    bool is_all() const { return cofinite_ && support_.empty(); }

    bool operator==(const ZPrimeSet& other) const {
        return cofinite_ == other.cofinite_ && support_ == other.support_;
    }
    bool operator!=(const ZPrimeSet& other) const { return !(*this == other); }

private:
    ZPrimeSet(bool cofinite, std::vector<uint64_t> support)
        : cofinite_(cofinite), support_(std::move(support)) {}

    bool cofinite_;
    std::vector<uint64_t> support_;
};

ZPrimeSet zset_union(const ZPrimeSet& a, const ZPrimeSet& b);
ZPrimeSet zset_intersection(const ZPrimeSet& a, const ZPrimeSet& b);
ZPrimeSet zset_complement(const ZPrimeSet& a);
ZPrimeSet zset_symmetric_difference(const ZPrimeSet& a, const ZPrimeSet& b);

/// Specialisation-closed subset of the spectrum of the integers: either the
/// whole spectrum (generic point included) or a set of primes.
struct ZUpperSet {
    static ZUpperSet spectrum() { return {true, ZPrimeSet::finite({})}; }
    static ZUpperSet of_primes(ZPrimeSet primes) { return {false, std::move(primes)}; }

    bool whole;
    ZPrimeSet primes;

    bool operator==(const ZUpperSet& other) const {
        return whole == other.whole && (whole || primes == other.primes);
    }
};

/// Bounded increasing function on the spectrum of the integers, kept
/// symbolically: the value v0 at the generic point plus finitely many value
/// classes of primes. Classes partition the primes, exactly one is cofinite,
/// values are distinct and at least v0, and classes are sorted by value.
/// The constructor merges classes with equal values, drops empty ones and
/// throws InvalidZFunction when the invariants cannot be met.
class ZPosetHom {
public:
    struct Class {
        int value;
        ZPrimeSet set;
    };

    ZPosetHom(int v0, std::vector<Class> classes);

    static ZPosetHom constant(int value) {
        return ZPosetHom(value, {{value, ZPrimeSet::cofinite({})}});
    }

    int v0() const { return v0_; }
    const std::vector<Class>& classes() const { return classes_; }

    /// Value at a prime; throws NotPrime on a composite argument.
    int value_at(uint64_t p) const;

    bool operator==(const ZPosetHom& other) const;
    bool operator!=(const ZPosetHom& other) const { return !(*this == other); }

private:
    int v0_;
    std::vector<Class> classes_;
};

/// Increasing functions taking only the values n and n+1 on primes, the
/// two-parameter family that exhausts the covering-step condition on this
/// spectrum. u collects the primes with value n+1.
struct ZTFunction {
    int n;
    ZPrimeSet u;

    ZPosetHom to_hom() const;

    bool operator==(const ZTFunction& other) const { return n == other.n && u == other.u; }
};

/// Right mutation at an upper set of the spectrum: the whole spectrum bumps
/// every value including v0; a set of primes splits each class into the part
/// it keeps and the part it raises by one.
ZPosetHom mutate_z(const ZPosetHom& f, const ZUpperSet& w);

/// True iff every class value is v0 or v0 + 1.
bool is_z_tfunction(const ZPosetHom& f);

/// The (n, u) form of a function that passes is_z_tfunction.
std::optional<ZTFunction> as_z_tfunction(const ZPosetHom& f);

/// Fan poset recording finitely many primes: g under one maximal element
/// p<prime> per listed prime, in list order.
PosetHandle truncation_poset(const std::vector<uint64_t>& primes);

/// Restriction of a symbolic function to finitely many primes, as a function
/// on the matching truncation poset (g takes v0).
PosetHom truncate_z(const ZPosetHom& f, const std::vector<uint64_t>& primes);
PosetHom truncate_z(const ZPosetHom& f, const std::vector<uint64_t>& primes, PosetHandle poset);

/// Restriction of an upper set of the spectrum to the truncation poset.
UpperSet truncate_upper(const ZUpperSet& w, const std::vector<uint64_t>& primes,
                        PosetHandle poset);

// Text forms used by commands: finite sets print as comma lists ("2,3"),
// cofinite ones with a leading tilde ("~2,3"), and the empty and full sets
// as "@empty" and "@all".
ZPrimeSet parse_zset(const std::string& text);
ZUpperSet parse_zupper(const std::string& text);
std::string print_zset(const ZPrimeSet& set);

// Function text: "0:<v0>" then one "<value>:<set>" item per class, joined
// by "; ".
ZPosetHom parse_zhom(const std::string& text);
std::string print_zhom(const ZPosetHom& f);
std::string print_ztf(const ZTFunction& f);

}  // namespace spfilt
