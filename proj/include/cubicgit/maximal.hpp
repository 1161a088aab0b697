#pragma once

#include <bitset>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "cubicgit/feasibility.hpp"

namespace cubicgit {

constexpr std::size_t kMaxMonomials = 512;
using MonMask = std::bitset<kMaxMonomials>;

inline bool mask_subset(const MonMask& a, const MonMask& b) { return (a & ~b).none(); }

/// Partial order induced by normalized 1-PS: m1 dominates m2 iff every prefix
/// sum of m1 is >= the corresponding prefix sum of m2 (equal degrees).
inline bool dominates(const Exponent& m1, const Exponent& m2) {
    if (m1.n() != m2.n()) throw std::invalid_argument("dominates: length mismatch");
    if (m1.degree() != m2.degree()) throw std::invalid_argument("dominates: degree mismatch");
    int p1 = 0, p2 = 0;
    for (std::size_t i = 0; i < m1.n(); ++i) {
        p1 += m1[i];
        p2 += m2[i];
        if (p1 < p2) return false;
    }
    return true;
}

struct MaximalSetRecord {
    OnePS witness;          // canonical: minimal max|a_i|, lex-least
    MonomialSet members;    // the full M_<=0 (or M_<0) of the witness
    MonomialSet generators; // maximal monomials of members (an antichain)
    bool strict = false;
    std::string label;      // assigned by match_labels
};

namespace detail_max {

inline MonomialSet mask_to_set(const MonMask& mask, const std::vector<Exponent>& mons, int n, int d) {
    std::vector<Exponent> m;
    for (std::size_t i = 0; i < mons.size(); ++i)
        if (mask[i]) m.push_back(mons[i]);
    return MonomialSet(n, d, std::move(m));
}

inline MonomialSet maximal_elements(const MonomialSet& s) {
    std::vector<Exponent> gens;
    for (const auto& m : s.members) {
        bool below = false;
        for (const auto& g : s.members) {
            if (g == m) continue;
            if (dominates(g, m)) { below = true; break; }
        }
        if (!below) gens.push_back(m);
    }
    return MonomialSet(s.n, s.d, std::move(gens));
}

}  // namespace detail_max

/// All inclusion-maximal sets M_<=0(lambda) (strict: M_<0(lambda)) over
/// normalized nontrivial 1-PS, via antichain depth-first search over the
/// dominance order. Deterministic output, sorted by generator antichain.
inline std::vector<MaximalSetRecord> enumerate_maximal(int n, int d, bool strict,
                                                       std::size_t node_guard = 1000000) {
    const std::vector<Exponent> mons = all_exponents(n, d);  // graded-lex descending:
    const std::size_t nm = mons.size();                      // a linear extension of dominance
    if (nm > kMaxMonomials) throw std::invalid_argument("enumerate_maximal: parameters too large");

    std::vector<MonMask> down(nm);  // down[i] = monomials dominated by mons[i]
    for (std::size_t i = 0; i < nm; ++i) {
        down[i][i] = true;
        for (std::size_t j = i + 1; j < nm; ++j)
            if (dominates(mons[i], mons[j])) down[i][j] = true;
    }
    std::vector<MonMask> suffix(nm + 1);
    for (std::size_t j = nm; j-- > 0;) {
        suffix[j] = suffix[j + 1];
        suffix[j][j] = true;
    }

    struct Found {
        MonMask mask;
        OnePS witness;
    };
    std::vector<Found> found;
    auto offer = [&](const MonMask& mask, const OnePS& w) {
        for (const auto& f : found)
            if (mask_subset(mask, f.mask)) return;
        std::vector<Found> keep;
        keep.reserve(found.size() + 1);
        for (auto& f : found)
            if (!mask_subset(f.mask, mask)) keep.push_back(std::move(f));
        keep.push_back(Found{mask, w});
        found = std::move(keep);
    };

    auto achieved_mask = [&](const OnePS& w) {
        MonMask m;
        for (std::size_t i = 0; i < nm; ++i) {
            long long wt = weight(mons[i], w);
            if (wt < 0 || (wt == 0 && !strict)) m[i] = true;
        }
        return m;
    };

    std::unordered_map<MonMask, std::optional<OnePS>> feas_cache;
    auto witness_for = [&](const MonMask& amask, const std::vector<Exponent>& antichain)
        -> const std::optional<OnePS>& {
        auto it = feas_cache.find(amask);
        if (it != feas_cache.end()) return it->second;
        WeightPolytopeQuery q(n, d, MonomialSet(n, d, antichain), strict);
        auto w = find_any_witness(q);
        return feas_cache.emplace(amask, std::move(w)).first->second;
    };

    std::size_t nodes = 0;
    std::vector<Exponent> antichain;
    MonMask amask, adown;

    auto rec = [&](auto&& self, std::size_t j) -> void {
        if (++nodes > node_guard) throw std::runtime_error("enumerate_maximal: antichain space guard tripped");
        // Everything reachable below this node is contained in down(A) | suffix[j];
        // if that bound is already inside a found maximal set, nothing new remains.
        MonMask bound = adown | suffix[j];
        for (const auto& f : found)
            if (mask_subset(bound, f.mask)) return;
        for (std::size_t i = j; i < nm; ++i) {
            if (adown[i]) continue;  // dominated by the antichain: already implied
            antichain.push_back(mons[i]);
            amask[i] = true;
            const auto& w = witness_for(amask, antichain);
            if (w) {
                offer(achieved_mask(*w), *w);
                MonMask saved = adown;
                adown |= down[i];
                self(self, i + 1);
                adown = saved;
            }
            amask[i] = false;
            antichain.pop_back();
        }
    };
    rec(rec, 0);

    std::vector<MaximalSetRecord> records;
    for (const auto& f : found) {
        MaximalSetRecord r;
        r.strict = strict;
        r.members = detail_max::mask_to_set(f.mask, mons, n, d);
        r.generators = detail_max::maximal_elements(r.members);
        WeightPolytopeQuery q(n, d, r.generators, strict);
        auto w = find_witness(q);
        if (!w) throw std::runtime_error("enumerate_maximal: lost witness during canonicalization");
        r.witness = *w;
        auto sp = sign_partition(r.witness, d);
        MonomialSet check = strict ? sp.neg : sp.nonpos();
        if (!(check == r.members))
            throw std::runtime_error("enumerate_maximal: witness does not reproduce members");
        records.push_back(std::move(r));
    }
    std::sort(records.begin(), records.end(), [](const MaximalSetRecord& a, const MaximalSetRecord& b) {
        return std::lexicographical_compare(a.generators.members.begin(), a.generators.members.end(),
                                            b.generators.members.begin(), b.generators.members.end(),
                                            GrlexDesc{});
    });
    return records;
}

// ---------------------------------------------------------------------------
// Golden-row matching.
// ---------------------------------------------------------------------------

struct GoldenRow {
    std::string label;
    OnePS lambda;
    MonomialSet generators;
    std::string invariant;   // annotation column, may be empty
    std::string reduces_to;  // projective-equivalence tag, may be empty
};

struct LabelMatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bijective matching of computed records to golden rows by member-set
/// equality (witness vectors are representatives, not identities).
inline std::vector<MaximalSetRecord> match_labels(std::vector<MaximalSetRecord> records,
                                                  const std::vector<GoldenRow>& golden, int d) {
    std::vector<bool> used(records.size(), false);
    for (const auto& row : golden) {
        auto sp = sign_partition(row.lambda, d);
        bool strict = records.empty() ? false : records.front().strict;
        MonomialSet want = strict ? sp.neg : sp.nonpos();
        bool matched = false;
        for (std::size_t i = 0; i < records.size(); ++i) {
            if (used[i] || !(records[i].members == want)) continue;
            if (!(records[i].generators == row.generators))
                throw LabelMatchError("generator antichain mismatch for golden row " + row.label);
            records[i].label = row.label;
            used[i] = true;
            matched = true;
            break;
        }
        if (!matched) throw LabelMatchError("missing row: no computed record matches golden " + row.label);
    }
    for (std::size_t i = 0; i < records.size(); ++i)
        if (!used[i])
            throw LabelMatchError("extra computed record: " + records[i].generators.members.front().str() +
                                  " antichain not present in golden data");
    return records;
}

// ---------------------------------------------------------------------------
// Sampling oracle: all normalized integer 1-PS with max|a_i| <= bound.
// ---------------------------------------------------------------------------

struct OracleResult {
    std::vector<MonMask> maximal;  // inclusion-maximal achieved sets
    std::vector<Exponent> mons;
    unsigned long long sampled = 0;
};

inline OracleResult sampling_oracle(int n, int d, long long bound, bool strict) {
    OracleResult out;
    out.mons = all_exponents(n, d);
    const std::size_t nm = out.mons.size();
    if (nm > kMaxMonomials) throw std::invalid_argument("sampling_oracle: parameters too large");

    std::unordered_set<MonMask> seen;
    std::vector<long long> a(n, 0);
    std::vector<long long> partial(nm, 0);

    auto emit = [&]() {
        ++out.sampled;
        MonMask m;
        for (std::size_t i = 0; i < nm; ++i)
            if (partial[i] < 0 || (partial[i] == 0 && !strict)) m[i] = true;
        seen.insert(m);
    };

    auto rec = [&](auto&& self, int pos, long long sum) -> void {
        if (pos == n - 1) {
            long long v = -sum;
            if (v > a[pos - 1] || v < -bound || v > bound) return;
            if (a[0] <= 0) return;  // nontrivial normalized => a_0 >= 1
            for (std::size_t i = 0; i < nm; ++i) partial[i] += out.mons[i][pos] * v;
            a[pos] = v;
            emit();
            for (std::size_t i = 0; i < nm; ++i) partial[i] -= out.mons[i][pos] * v;
            return;
        }
        long long hi = pos == 0 ? bound : std::min(bound, a[pos - 1]);
        int remain = n - pos - 1;
        for (long long v = hi; v >= -bound; --v) {
            long long s2 = sum + v;
            // remaining entries are <= v each and >= -bound; their sum must be -s2
            if (-s2 > remain * v || -s2 < remain * (-bound)) continue;
            for (std::size_t i = 0; i < nm; ++i) partial[i] += out.mons[i][pos] * v;
            a[pos] = v;
            self(self, pos + 1, s2);
            for (std::size_t i = 0; i < nm; ++i) partial[i] -= out.mons[i][pos] * v;
        }
    };
    rec(rec, 0, 0);

    for (const auto& m : seen) {
        bool below = false;
        for (const auto& o : seen)
            if (m != o && mask_subset(m, o)) { below = true; break; }
        if (!below) out.maximal.push_back(m);
    }
    std::sort(out.maximal.begin(), out.maximal.end(), [](const MonMask& x, const MonMask& y) {
        for (std::size_t i = 0; i < kMaxMonomials; ++i) {
            if (x[i] != y[i]) return x[i];
        }
        return false;
    });
    return out;
}

/// Set-of-sets equality between enumerated records and oracle masks.
inline bool oracle_agrees(const std::vector<MaximalSetRecord>& records, const OracleResult& oracle) {
    if (records.size() != oracle.maximal.size()) return false;
    std::vector<bool> used(oracle.maximal.size(), false);
    for (const auto& r : records) {
        MonMask want;
        for (std::size_t i = 0; i < oracle.mons.size(); ++i)
            if (r.members.contains(oracle.mons[i])) want[i] = true;
        bool ok = false;
        for (std::size_t k = 0; k < oracle.maximal.size(); ++k)
            if (!used[k] && oracle.maximal[k] == want) { used[k] = ok = true; break; }
        if (!ok) return false;
    }
    return true;
}

}  // namespace cubicgit
