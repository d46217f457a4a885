#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

// Brute-force verifiers for the ternary-form facts the classification rests
// on.  Local (p-adic) conditions are never computed: each fact is reduced to
// the concrete residue-class statement it implies, which is exhaustively
// checkable on a desk-scale range.

namespace tight {

struct HypothesisFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnknownIdentity : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class ResiduePreset {
    P113,   // p3(1,1,3) represents every g not congruent to 2 mod 3
    P223,   // p3(2,2,3) represents every g not congruent to 1 mod 3
    P334AB, // every v in A /\ B has an all-odd representation by <3,3,4>,
            // where A = {u : u = 1 mod 3 or u = 3,6 mod 9} and
            //       B = {u : u = 2 mod 8, u >= 10}
};

ResiduePreset residue_preset_from_name(const std::string& name);
std::string residue_preset_name(ResiduePreset preset);

// Values <= bound satisfying the preset's hypothesis but lacking the claimed
// representation.  Expected empty.
std::vector<int64_t> check_residue_claim(ResiduePreset preset, int64_t bound);

// Values g <= bound with g = 5 mod 8 and (g = 1 mod 3 or 9 | g) that are not
// represented by 3x^2 + 4y^2 + 6z^2.  Expected empty.
std::vector<int64_t> check_346(int64_t bound);

// For an odd prime p and k >= 1 with p not dividing k and x^2 + k*y^2 = p
// solvable: whenever x^2 + k*y^2 = N is solvable it has a solution with
// gcd(x, y, p) = 1.  Returns true when N upholds this (vacuously when N is
// not represented at all).  Throws HypothesisFailed when x^2 + k*y^2 = p has
// no solution.
bool jones_check(int64_t k, int64_t p, int64_t N);

enum class Identity {
    Id346Case9, // 9x^2 + 6(z-3y)^2 + 12z^2 = 3(x+2y-2z)^2 + 4(3y)^2 + 6(x-y+z)^2
    Id346Case1, // 3(x-2y-4z)^2 + 36(y-z)^2 + 6(x+y+2z)^2 = 9(x^2 + 6y^2 + 12z^2)
    Id468,      // 2(y-3x)^2 + 4y^2 + 24z^2 = 4(x+2z)^2 + 6(x-y)^2 + 8(x-z)^2
};

Identity identity_from_name(const std::string& name); // throws UnknownIdentity
std::string identity_name(Identity id);

// Evaluates both sides on random integer triples; true iff equal on every
// trial (these are polynomial identities, so any failure is a transcription
// bug).
bool identity_check(Identity id, int trials, uint64_t seed);

// The odd-scalar selection tables used to peel a 5d^2 (X3) or 5d^2 (Y3)
// term off g': every g' of the proper shape must land in the claimed
// residue set after subtraction.  Returns the violating g' values.
enum class DSelect { X3, Y3 };
std::vector<int64_t> check_dselect(DSelect which, int64_t bound);

} // namespace tight
