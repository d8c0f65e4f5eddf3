#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rosenhain {

// Binary half-period characteristic [eps'; eps]: two length-g rows of 0/1
// entries with mod-2 addition. Immutable value type.
class Characteristic {
public:
    Characteristic(std::vector<int> top, std::vector<int> bottom);
    static Characteristic zero(int g);

    int genus() const { return static_cast<int>(top_.size()); }
    int top(int i) const { return top_[static_cast<std::size_t>(i)]; }       // eps'_i, 0-based
    int bottom(int i) const { return bottom_[static_cast<std::size_t>(i)]; } // eps_i, 0-based
    const std::vector<int>& top_row() const { return top_; }
    const std::vector<int>& bottom_row() const { return bottom_; }

    Characteristic operator+(const Characteristic& rhs) const; // entrywise mod 2
    bool operator==(const Characteristic& rhs) const;
    bool operator!=(const Characteristic& rhs) const { return !(*this == rhs); }

    int parity() const; // eps' . eps mod 2; 0 even, 1 odd
    bool is_odd() const { return parity() == 1; }
    bool is_even() const { return parity() == 0; }

    // "[101;001]" style rendering used by reports.
    std::string str() const;
    // Bits packed top row first, for cache keys: value < 4^g.
    std::uint32_t packed() const;
    static Characteristic from_packed(int g, std::uint32_t bits);
    // Parses the str() format, with or without brackets.
    static Characteristic parse(const std::string& text);

private:
    std::vector<int> top_;
    std::vector<int> bottom_;
};

// Characteristic [A_j] of the Abelian image of branch point e_j, j = 1..2g+2,
// in the homology basis with real increasing branch points, cuts drawn from
// e_{2i-1} to e_{2i} and b-cycles closed on the lower sheet:
//   [A_{2k-1}]: eps' = unit vector at k, eps = indicator of {1,...,k-1}
//   [A_{2k}]  : eps' = unit vector at k, eps = indicator of {1,...,k}
//   [A_{2g+1}]: eps' = 0,                eps = all ones
//   [A_{2g+2}] = 0.
Characteristic branch_characteristic(int g, int j);

// Vector of Riemann constants for base point at infinity: the mod-2 sum of
// the g odd branch characteristics.
Characteristic riemann_constant(int g);

// [eps(S)] = sum_{k in S} [A_k] + [K_inf] mod 2, S subset of {1,...,2g+2}.
// The empty set gives [K_inf] itself.
Characteristic partition_characteristic(int g, const std::vector<int>& index_set);

// Azygetic test for a triple: the exponent
//   e1'.e1 + e2'.e2 + e3'.e3 + (e1'+e2'+e3').(e1+e2+e3)
// is summed over the integers and reduced mod 2 at the end.
bool is_azygetic(const Characteristic& c1, const Characteristic& c2, const Characteristic& c3);

// 2g+2 characteristics, first g odd, remaining g+2 even, every triple azygetic.
bool is_special_fundamental_system(const std::vector<Characteristic>& seq);

} // namespace rosenhain
