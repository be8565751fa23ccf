#include "coopmac/policy.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace coopmac {

KnowledgeSubset KnowledgeSubset::of(std::initializer_list<StateElement> elements) {
    std::uint8_t mask = 0;
    for (StateElement e : elements) mask = static_cast<std::uint8_t>(mask | (1u << bit_position(e)));
    return KnowledgeSubset(mask);
}

KnowledgeSubset KnowledgeSubset::hops(int n) {
    if (n < 0 || n > 2) throw std::invalid_argument("hop count must be 0, 1 or 2");
    std::uint8_t mask = 0;
    for (StateElement e : kAllElements) {
        const auto d = hop_distance(e);
        if (d && *d <= n) mask = static_cast<std::uint8_t>(mask | (1u << bit_position(e)));
    }
    return KnowledgeSubset(mask);
}

int KnowledgeSubset::size() const noexcept {
    return std::popcount(mask_);
}

std::vector<StateElement> KnowledgeSubset::elements() const {
    std::vector<StateElement> out;
    for (StateElement e : kAllElements)
        if (contains(e)) out.push_back(e);
    return out;
}

std::size_t KnowledgeSubset::bin_count() const noexcept {
    return std::size_t{1} << size();
}

std::size_t KnowledgeSubset::bin_of(NetworkState s) const noexcept {
    std::size_t bin = 0;
    std::size_t k = 0;
    for (StateElement e : kAllElements) {
        if (!contains(e)) continue;
        if (s.bit(e)) bin |= std::size_t{1} << k;
        ++k;
    }
    return bin;
}

RelayPolicy::RelayPolicy(KnowledgeSubset knowledge, std::vector<Decision> decisions)
    : knowledge_(knowledge), decisions_(std::move(decisions)) {
    if (decisions_.size() != knowledge_.bin_count())
        throw std::invalid_argument("decision table does not cover every bin");
}

Decision RelayPolicy::decision(std::size_t bin) const {
    if (bin >= decisions_.size()) throw std::out_of_range("bin index out of range");
    return decisions_[bin];
}

Decision RelayPolicy::decision_for(NetworkState s) const noexcept {
    return decisions_[knowledge_.bin_of(s)];
}

bool RelayPolicy::transmits(NetworkState s) const noexcept {
    return decision_for(s) == Decision::Tx;
}

std::vector<NetworkState> conflict_set(const KnowledgeSubset& knowledge, std::size_t bin) {
    if (bin >= knowledge.bin_count()) throw std::out_of_range("bin index out of range");
    const auto known = knowledge.elements();
    std::vector<StateElement> unknown;
    for (StateElement e : kAllElements)
        if (!knowledge.contains(e)) unknown.push_back(e);

    std::uint8_t base = 0;
    for (std::size_t k = 0; k < known.size(); ++k)
        if ((bin >> k) & 1u) base = static_cast<std::uint8_t>(base | (1u << bit_position(known[k])));

    std::vector<NetworkState> out;
    out.reserve(std::size_t{1} << unknown.size());
    for (std::size_t u = 0; u < (std::size_t{1} << unknown.size()); ++u) {
        std::uint8_t idx = base;
        for (std::size_t k = 0; k < unknown.size(); ++k)
            if ((u >> k) & 1u) idx = static_cast<std::uint8_t>(idx | (1u << bit_position(unknown[k])));
        out.emplace_back(idx);
    }
    return out;
}

std::vector<NetworkState> conflict_set(const KnowledgeSubset& knowledge,
                                       const std::map<StateElement, bool>& assignment) {
    std::uint8_t covered = 0;
    std::size_t bin = 0;
    std::size_t k = 0;
    for (StateElement e : kAllElements) {
        if (!knowledge.contains(e)) continue;
        const auto it = assignment.find(e);
        if (it == assignment.end()) throw std::invalid_argument("bin assignment is incomplete");
        covered = static_cast<std::uint8_t>(covered | (1u << bit_position(e)));
        if (it->second) bin |= std::size_t{1} << k;
        ++k;
    }
    for (const auto& [e, _] : assignment)
        if (!knowledge.contains(e)) throw std::invalid_argument("assignment names an unknown element");
    (void)covered;
    return conflict_set(knowledge, bin);
}

RelayPolicy derive_policy(const KnowledgeSubset& knowledge, Viewpoint view) {
    std::vector<Decision> decisions(knowledge.bin_count());
    for (std::size_t bin = 0; bin < decisions.size(); ++bin) {
        bool any_assist = false, any_harm = false, any_harmless = false;
        for (NetworkState s : conflict_set(knowledge, bin)) {
            const StateLabel l = classify(s);
            any_assist |= l.in_a;
            any_harm |= l.harmful();
            any_harmless |= !l.harmful();
        }
        if (view == Viewpoint::Greedy) {
            decisions[bin] = (any_assist && any_harmless) ? Decision::Tx : Decision::Rx;
        } else {
            decisions[bin] = any_harm      ? Decision::Rx
                             : any_assist  ? Decision::Tx
                                           : Decision::DontCare;
        }
    }
    return RelayPolicy(knowledge, std::move(decisions));
}

namespace {

// Implicant over the bin variables: `value` on the bits selected by `mask`.
struct Implicant {
    std::uint16_t value = 0;
    std::uint16_t mask = 0;

    bool covers(std::size_t minterm) const noexcept {
        return (static_cast<std::uint16_t>(minterm) & mask) == value;
    }
    auto operator<=>(const Implicant&) const = default;
};

std::vector<Implicant> prime_implicants(int nvars, const std::vector<std::size_t>& care) {
    const std::uint16_t full = static_cast<std::uint16_t>((1u << nvars) - 1u);
    std::set<Implicant> current;
    for (std::size_t m : care) current.insert({static_cast<std::uint16_t>(m), full});

    std::vector<Implicant> primes;
    while (!current.empty()) {
        std::set<Implicant> next;
        std::set<Implicant> combined;
        for (auto it = current.begin(); it != current.end(); ++it) {
            for (auto jt = std::next(it); jt != current.end(); ++jt) {
                if (it->mask != jt->mask) continue;
                const std::uint16_t diff = static_cast<std::uint16_t>(it->value ^ jt->value);
                if (std::popcount(diff) != 1) continue;
                next.insert({static_cast<std::uint16_t>(it->value & ~diff),
                             static_cast<std::uint16_t>(it->mask & ~diff)});
                combined.insert(*it);
                combined.insert(*jt);
            }
        }
        for (const Implicant& imp : current)
            if (!combined.contains(imp)) primes.push_back(imp);
        current = std::move(next);
    }
    std::sort(primes.begin(), primes.end());
    return primes;
}

// Essential primes first, then a greedy cover of whatever remains. The
// greedy fallback is deterministic: most newly covered minterms, then fewer
// literals, then lowest (mask, value).
std::vector<Implicant> cover(const std::vector<Implicant>& primes,
                             const std::vector<std::size_t>& on_set) {
    std::vector<Implicant> chosen;
    std::set<std::size_t> remaining(on_set.begin(), on_set.end());

    for (std::size_t m : on_set) {
        const Implicant* only = nullptr;
        int count = 0;
        for (const Implicant& p : primes) {
            if (p.covers(m)) {
                ++count;
                only = &p;
            }
        }
        if (count == 1 && std::find(chosen.begin(), chosen.end(), *only) == chosen.end())
            chosen.push_back(*only);
    }
    for (const Implicant& p : chosen)
        std::erase_if(remaining, [&](std::size_t m) { return p.covers(m); });

    while (!remaining.empty()) {
        const Implicant* best = nullptr;
        std::size_t best_gain = 0;
        for (const Implicant& p : primes) {
            std::size_t gain = 0;
            for (std::size_t m : remaining)
                if (p.covers(m)) ++gain;
            if (gain == 0) continue;
            if (!best || gain > best_gain ||
                (gain == best_gain && (std::popcount(p.mask) < std::popcount(best->mask) ||
                                       (std::popcount(p.mask) == std::popcount(best->mask) &&
                                        p < *best)))) {
                best = &p;
                best_gain = gain;
            }
        }
        chosen.push_back(*best);
        std::erase_if(remaining, [&](std::size_t m) { return best->covers(m); });
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

}  // namespace

BoolExpr minimize(const RelayPolicy& policy, Decision target) {
    if (target == Decision::DontCare)
        throw std::invalid_argument("minimization target must be Tx or Rx");

    const KnowledgeSubset& knowledge = policy.knowledge();
    const auto known = knowledge.elements();
    const int nvars = static_cast<int>(known.size());

    std::vector<std::size_t> on_set, care;
    for (std::size_t bin = 0; bin < policy.bin_count(); ++bin) {
        const Decision d = policy.decision(bin);
        if (d == target) {
            on_set.push_back(bin);
            care.push_back(bin);
        } else if (d == Decision::DontCare) {
            care.push_back(bin);
        }
    }
    if (on_set.empty()) return BoolExpr::constant(false);

    const auto primes = prime_implicants(nvars, care);
    const auto selected = cover(primes, on_set);

    std::vector<Term> terms;
    for (const Implicant& imp : selected) {
        Term t;
        for (int k = 0; k < nvars; ++k) {
            if ((imp.mask >> k) & 1u)
                t = t.with(known[static_cast<std::size_t>(k)], (imp.value >> k) & 1u);
        }
        terms.push_back(t);
    }
    return BoolExpr::sum(std::move(terms));
}

bool expr_equivalent(const BoolExpr& a, const BoolExpr& b, const KnowledgeSubset& domain,
                     std::span<const NetworkState> care) {
    if ((a.support_mask() & ~domain.mask()) || (b.support_mask() & ~domain.mask()))
        throw std::invalid_argument("expression support exceeds the variable domain");
    return std::all_of(care.begin(), care.end(), [&](NetworkState s) {
        return a.evaluate(s) == b.evaluate(s);
    });
}

std::vector<NetworkState> care_states(const RelayPolicy& policy) {
    std::vector<NetworkState> out;
    for (NetworkState s : enumerate_states())
        if (policy.decision_for(s) != Decision::DontCare) out.push_back(s);
    return out;
}

}  // namespace coopmac
