#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace orbitsieve {

using int128 = __int128;

std::string int128_str(int128 v);

int128 checked_add(int128 x, int128 y);
int128 checked_mul(int128 x, int128 y);

/// An element of SL2(Z): exact 2x2 integer matrix with determinant one.
/// Entries live in a checked 128-bit envelope; any overflowing operation
/// throws std::overflow_error instead of wrapping.
struct GroupElement {
    int128 a, b, c, d;

    GroupElement(int128 a_, int128 b_, int128 c_, int128 d_);

    static GroupElement identity() { return {1, 0, 0, 1}; }

    bool operator==(const GroupElement& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }
    bool operator<(const GroupElement& o) const;

    std::string str() const;
};

GroupElement multiply(const GroupElement& x, const GroupElement& y);

GroupElement inverse(const GroupElement& x);

/// True iff x = (1,*;0,1) exactly.  The stabilizer of infinity is taken
/// strictly unipotent: -I and (-1,*;0,-1) do not count.
bool stabilizes_infinity(const GroupElement& x);

/// Canonicalizes the coset Gamma_inf * x by left-multiplying with powers of
/// (1,h;0,1).  The bottom row is unchanged; if c != 0 the a-entry lands in
/// [0, h*|c|), if c == 0 the b-entry lands in [0, h).
GroupElement canonical_coset_rep(const GroupElement& x, std::int64_t cusp_width);

/// a^2 + b^2 + c^2 + d^2, overflow-checked.
int128 frobenius_norm_sq(const GroupElement& x);

/// A finitely generated subgroup of SL2(Z), given by generators and the
/// width of the cusp at infinity.  The generator list is closed under
/// inverses on construction.  The cusp width is trusted config input; the
/// constructor only verifies that (1,h;0,1) is a word in the generators of
/// bounded length.
struct GroupPresentation {
    std::string name;
    std::vector<GroupElement> generators;
    std::int64_t cusp_width;

    GroupPresentation(std::string name_, std::vector<GroupElement> gens,
                      std::int64_t cusp_width_, int word_search_cap = 8);

    /// Gamma = <T^4, S>, the default thin group.
    static GroupPresentation hecke4();
    /// Full SL2(Z) = <T, S>, used as an unramified control group.
    static GroupPresentation sl2z();
    /// Looks up a built-in preset by name.
    static GroupPresentation preset(const std::string& name);

    /// Plain-text config: "name = ...", "generator = a b c d" (repeated),
    /// "cusp_width = h".  Lines starting with '#' are comments.
    static GroupPresentation from_config_text(const std::string& text);
    static GroupPresentation from_config_file(const std::string& path);

    std::string config_text() const;
};

}  // namespace orbitsieve
