#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "miortho/errors.hpp"
#include "miortho/rational.hpp"

namespace miortho {

enum class Family { Laguerre, Jacobi };

inline char family_letter(Family f) { return f == Family::Laguerre ? 'L' : 'J'; }

/// Base system parameters: g for the radial oscillator, (g, h) for
/// Poschl-Teller. Both must exceed 1/2.
struct SystemParams {
    Family family = Family::Laguerre;
    Rational g;
    Rational h; // Jacobi only

    static SystemParams laguerre(Rational g) {
        if (g <= Rational(1, 2)) throw validation_error("Laguerre system needs g > 1/2");
        return SystemParams{Family::Laguerre, std::move(g), Rational(0)};
    }

    static SystemParams jacobi(Rational g, Rational h) {
        if (g <= Rational(1, 2) || h <= Rational(1, 2))
            throw validation_error("Jacobi system needs g > 1/2 and h > 1/2");
        return SystemParams{Family::Jacobi, std::move(g), std::move(h)};
    }
};

// (g, h) -> (h, g); only meaningful for the Jacobi family.
inline SystemParams swapped(const SystemParams& p) {
    if (p.family != Family::Jacobi) throw validation_error("parameter swap is Jacobi-only");
    return SystemParams::jacobi(p.h, p.g);
}

/// Greatest integer strictly less than q: one below q when q is an integer,
/// floor(q) otherwise.
inline BigInt greatest_integer_less_than(const Rational& q) {
    BigInt f = floor_int(q);
    if (is_integer(q)) --f;
    return f;
}

enum class SeedType { I, II };

struct IndexEntry {
    unsigned v = 0;
    SeedType type = SeedType::I;
    auto operator<=>(const IndexEntry&) const = default;
};

/// Largest admissible seed degree for (family, type), or no bound (Laguerre
/// Type I seeds exist for every degree).
inline std::optional<BigInt> max_seed_degree(const SystemParams& p, SeedType t) {
    if (p.family == Family::Laguerre) {
        if (t == SeedType::I) return std::nullopt;
        return greatest_integer_less_than(p.g - Rational(1, 2));
    }
    if (t == SeedType::I) return greatest_integer_less_than(p.h - Rational(1, 2));
    return greatest_integer_less_than(p.g - Rational(1, 2));
}

inline void validate_seed(const SystemParams& p, unsigned v, SeedType t) {
    auto bound = max_seed_degree(p, t);
    if (bound && BigInt(v) > *bound) {
        throw out_of_range_index("seed degree " + std::to_string(v) + " exceeds the Type " +
                                 (t == SeedType::I ? "I" : "II") + " bound " + bound->str());
    }
}

/// Ordered multi-index D = ((d_1,t_1),...,(d_M,t_M)). Construction validates
/// distinctness and the per-type degree ranges; order is kept as given since
/// it fixes the sign of every determinant downstream.
class IndexSpec {
public:
    static IndexSpec make(const SystemParams& params, std::vector<IndexEntry> entries) {
        for (std::size_t i = 0; i < entries.size(); ++i) {
            validate_seed(params, entries[i].v, entries[i].type);
            for (std::size_t j = i + 1; j < entries.size(); ++j) {
                if (entries[i] == entries[j])
                    throw duplicate_index("repeated seed entry makes every Wronskian vanish");
            }
        }
        return IndexSpec(std::move(entries));
    }

    static IndexSpec empty() { return IndexSpec({}); }

    const std::vector<IndexEntry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); } // M

    std::size_t count_type1() const {
        return static_cast<std::size_t>(
            std::count_if(entries_.begin(), entries_.end(),
                          [](const IndexEntry& e) { return e.type == SeedType::I; }));
    }
    std::size_t count_type2() const { return size() - count_type1(); }

    // M' = (M_I - M_II)/2, a half-integer in general.
    Rational m_prime() const {
        return Rational(static_cast<long>(count_type1()) - static_cast<long>(count_type2()), 2);
    }

    unsigned degree_sum() const {
        unsigned s = 0;
        for (const auto& e : entries_) s += e.v;
        return s;
    }

    bool operator==(const IndexSpec&) const = default;

private:
    explicit IndexSpec(std::vector<IndexEntry> entries) : entries_(std::move(entries)) {}
    std::vector<IndexEntry> entries_;
};

} // namespace miortho
