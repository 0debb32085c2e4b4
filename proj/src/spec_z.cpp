#include "spfilt/spec_z.hpp"

#include <algorithm>
#include <sstream>

namespace spfilt {

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>(static_cast<__uint128_t>(a) * b % m);
}

uint64_t powmod(uint64_t base, uint64_t exp, uint64_t m) {
    uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

constexpr uint64_t kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

std::vector<uint64_t> checked_support(std::vector<uint64_t> support) {
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    for (uint64_t p : support)
        if (!is_prime_u64(p))
            throw NotPrime(std::to_string(p) + " is not prime");
    return support;
}

bool support_contains(const std::vector<uint64_t>& support, uint64_t p) {
    return std::binary_search(support.begin(), support.end(), p);
}

// Membership in the result of a pointwise boolean operation decides the
// support relative to the union of both supports; behaviour outside that
// union follows from the modes alone and fixes the result's mode.
template <typename Op>
ZPrimeSet combine(const ZPrimeSet& a, const ZPrimeSet& b, Op op) {
    std::vector<uint64_t> candidates = a.support();
    candidates.insert(candidates.end(), b.support().begin(), b.support().end());
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    const bool outside = op(a.is_cofinite(), b.is_cofinite());
    std::vector<uint64_t> support;
    for (uint64_t p : candidates)
        if (op(a.contains(p), b.contains(p)) != outside) support.push_back(p);
    return outside ? ZPrimeSet::cofinite(std::move(support))
                   : ZPrimeSet::finite(std::move(support));
}

}  // namespace

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : kWitnesses)
        if (n % p == 0) return n == p;
    uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (uint64_t a : kWitnesses) {
        uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < r - 1 && composite; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) composite = false;
        }
        if (composite) return false;
    }
    return true;
}

ZPrimeSet ZPrimeSet::finite(std::vector<uint64_t> support) {
    return ZPrimeSet(false, checked_support(std::move(support)));
}

ZPrimeSet ZPrimeSet::cofinite(std::vector<uint64_t> support) {
    return ZPrimeSet(true, checked_support(std::move(support)));
}

bool ZPrimeSet::contains(uint64_t p) const {
    return support_contains(support_, p) != cofinite_;
}

ZPrimeSet zset_union(const ZPrimeSet& a, const ZPrimeSet& b) {
    return combine(a, b, [](bool x, bool y) { return x || y; });
}

ZPrimeSet zset_intersection(const ZPrimeSet& a, const ZPrimeSet& b) {
    return combine(a, b, [](bool x, bool y) { return x && y; });
}

ZPrimeSet zset_complement(const ZPrimeSet& a) {
    return a.is_cofinite() ? ZPrimeSet::finite(a.support()) : ZPrimeSet::cofinite(a.support());
}

ZPrimeSet zset_symmetric_difference(const ZPrimeSet& a, const ZPrimeSet& b) {
    return combine(a, b, [](bool x, bool y) { return x != y; });
}

ZPosetHom::ZPosetHom(int v0, std::vector<Class> classes) : v0_(v0) {
    std::stable_sort(classes.begin(), classes.end(),
                     [](const Class& a, const Class& b) { return a.value < b.value; });
    for (auto& c : classes) {
        if (c.set.is_empty()) continue;
        if (!classes_.empty() && classes_.back().value == c.value)
            classes_.back().set = zset_union(classes_.back().set, c.set);
        else
            classes_.push_back(std::move(c));
    }

    int cofinite_count = 0;
    std::vector<uint64_t> finite_members;
    const std::vector<uint64_t>* cofinite_support = nullptr;
    for (const auto& c : classes_) {
        if (c.value < v0_)
            throw InvalidZFunction("class value " + std::to_string(c.value) +
                                   " is below the generic value " + std::to_string(v0_));
        if (c.set.is_cofinite()) {
            ++cofinite_count;
            cofinite_support = &c.set.support();
        } else {
            finite_members.insert(finite_members.end(), c.set.support().begin(),
                                  c.set.support().end());
        }
    }
    if (cofinite_count != 1)
        throw InvalidZFunction("expected exactly one cofinite class, found " +
                               std::to_string(cofinite_count));
    std::sort(finite_members.begin(), finite_members.end());
    for (size_t i = 0; i + 1 < finite_members.size(); ++i)
        if (finite_members[i] == finite_members[i + 1])
            throw InvalidZFunction("prime " + std::to_string(finite_members[i]) +
                                   " appears in two classes");
    // Finite classes must tile the complement of the cofinite class exactly.
    if (finite_members != *cofinite_support)
        throw InvalidZFunction("classes do not partition the primes");
}

int ZPosetHom::value_at(uint64_t p) const {
    if (!is_prime_u64(p)) throw NotPrime(std::to_string(p) + " is not prime");
    for (const auto& c : classes_)
        if (c.set.contains(p)) return c.value;
    return v0_;  // unreachable: classes cover every prime
}

bool ZPosetHom::operator==(const ZPosetHom& other) const {
    if (v0_ != other.v0_ || classes_.size() != other.classes_.size()) return false;
    for (size_t i = 0; i < classes_.size(); ++i)
        if (classes_[i].value != other.classes_[i].value ||
            classes_[i].set != other.classes_[i].set)
            return false;
    return true;
}

ZPosetHom ZTFunction::to_hom() const {
    std::vector<ZPosetHom::Class> classes;
    classes.push_back({n, zset_complement(u)});
    classes.push_back({n + 1, u});
    return ZPosetHom(n, std::move(classes));
}

ZPosetHom mutate_z(const ZPosetHom& f, const ZUpperSet& w) {
    if (w.whole) {
        std::vector<ZPosetHom::Class> classes = f.classes();
        for (auto& c : classes) ++c.value;
        return ZPosetHom(f.v0() + 1, std::move(classes));
    }
    std::vector<ZPosetHom::Class> classes;
    for (const auto& c : f.classes()) {
        classes.push_back({c.value, zset_intersection(c.set, zset_complement(w.primes))});
        classes.push_back({c.value + 1, zset_intersection(c.set, w.primes)});
    }
    return ZPosetHom(f.v0(), std::move(classes));
}

bool is_z_tfunction(const ZPosetHom& f) {
    for (const auto& c : f.classes())
        if (c.value != f.v0() && c.value != f.v0() + 1) return false;
    return true;
}

std::optional<ZTFunction> as_z_tfunction(const ZPosetHom& f) {
    if (!is_z_tfunction(f)) return std::nullopt;
    for (const auto& c : f.classes())
        if (c.value == f.v0() + 1) return ZTFunction{f.v0(), c.set};
    return ZTFunction{f.v0(), ZPrimeSet::finite({})};
}

PosetHandle truncation_poset(const std::vector<uint64_t>& primes) {
    std::vector<std::string> leaves;
    for (uint64_t p : primes) {
        if (!is_prime_u64(p)) throw NotPrime(std::to_string(p) + " is not prime");
        leaves.push_back("p" + std::to_string(p));
    }
    return PrimePoset::fan_labeled("g", std::move(leaves));
}

PosetHom truncate_z(const ZPosetHom& f, const std::vector<uint64_t>& primes) {
    return truncate_z(f, primes, truncation_poset(primes));
}

PosetHom truncate_z(const ZPosetHom& f, const std::vector<uint64_t>& primes, PosetHandle poset) {
    if (poset->size() != static_cast<int>(primes.size()) + 1)
        throw std::logic_error("truncation poset does not match the prime list");
    std::vector<int> values(primes.size() + 1, f.v0());
    for (size_t i = 0; i < primes.size(); ++i)
        values[i + 1] = f.value_at(primes[i]);
    return PosetHom(std::move(poset), std::move(values));
}

UpperSet truncate_upper(const ZUpperSet& w, const std::vector<uint64_t>& primes,
                        PosetHandle poset) {
    if (w.whole) return UpperSet::all(std::move(poset));
    Subset mask(primes.size() + 1, false);
    for (size_t i = 0; i < primes.size(); ++i)
        if (w.primes.contains(primes[i])) mask[i + 1] = true;
    return UpperSet::from_members(std::move(poset), std::move(mask));
}

namespace {

std::vector<uint64_t> parse_prime_list(const std::string& text) {
    std::vector<uint64_t> out;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        size_t used = 0;
        unsigned long long value = 0;
        try {
            value = std::stoull(item, &used);
        } catch (const std::exception&) {
            throw ParseError("'" + item + "' is not a number");
        }
        if (used != item.size()) throw ParseError("'" + item + "' is not a number");
        out.push_back(value);
    }
    if (out.empty()) throw ParseError("empty prime list");
    return out;
}

}  // namespace

ZPrimeSet parse_zset(const std::string& text) {
    if (text == "@empty") return ZPrimeSet::finite({});
    if (text == "@all") return ZPrimeSet::cofinite({});
    if (!text.empty() && text[0] == '~') return ZPrimeSet::cofinite(parse_prime_list(text.substr(1)));
    return ZPrimeSet::finite(parse_prime_list(text));
}

ZUpperSet parse_zupper(const std::string& text) {
    if (text == "@all") return ZUpperSet::spectrum();
    return ZUpperSet::of_primes(parse_zset(text));
}

std::string print_zset(const ZPrimeSet& set) {
    if (set.is_empty()) return "@empty";
    if (set.is_all()) return "@all";
    std::string out = set.is_cofinite() ? "~" : "";
    for (size_t i = 0; i < set.support().size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(set.support()[i]);
    }
    return out;
}

ZPosetHom parse_zhom(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ';')) {
        const size_t begin = item.find_first_not_of(" \t");
        const size_t end = item.find_last_not_of(" \t");
        if (begin == std::string::npos) throw ParseError("empty item in function text");
        parts.push_back(item.substr(begin, end - begin + 1));
    }
    if (parts.empty()) throw ParseError("empty function text");

    auto split_item = [](const std::string& part) {
        const size_t colon = part.find(':');
        if (colon == std::string::npos)
            throw ParseError("expected <value>:<set>, got '" + part + "'");
        return std::make_pair(part.substr(0, colon), part.substr(colon + 1));
    };
    auto parse_int = [](const std::string& s) {
        size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(s, &used);
        } catch (const std::exception&) {
            throw ParseError("'" + s + "' is not an integer");
        }
        if (used != s.size()) throw ParseError("'" + s + "' is not an integer");
        return value;
    };

    const auto [head_label, head_value] = split_item(parts[0]);
    if (head_label != "0")
        throw ParseError("function text must start with the generic value '0:<v0>'");
    const int v0 = parse_int(head_value);
    std::vector<ZPosetHom::Class> classes;
    for (size_t i = 1; i < parts.size(); ++i) {
        const auto [value_text, set_text] = split_item(parts[i]);
        classes.push_back({parse_int(value_text), parse_zset(set_text)});
    }
    return ZPosetHom(v0, std::move(classes));
}

std::string print_zhom(const ZPosetHom& f) {
    std::string out = "0:" + std::to_string(f.v0());
    for (const auto& c : f.classes())
        out += "; " + std::to_string(c.value) + ":" + print_zset(c.set);
    return out;
}

std::string print_ztf(const ZTFunction& f) {
    return "(" + std::to_string(f.n) + ", {" + print_zset(f.u) + "})";
}

}  // namespace spfilt
