#pragma once

#include <ccx/errors.hpp>
#include <ccx/integer.hpp>

#include <string>
#include <vector>

namespace ccx {

// Slope p/q in lowest terms with q >= 0; infinity is 1/0.
// Slopes label the vertices of the Farey graph, which is the curve graph of
// the complexity-one surfaces.
struct Slope {
    Int p{0};
    Int q{1};

    friend bool operator==(const Slope& a, const Slope& b) {
        return a.p == b.p && a.q == b.q;
    }
    friend bool operator!=(const Slope& a, const Slope& b) { return !(a == b); }
    friend bool operator<(const Slope& a, const Slope& b) {
        if (a.p != b.p) return a.p < b.p;
        return a.q < b.q;
    }
};

// Canonicalizes: q >= 0, gcd = 1, and 1/0 for the point at infinity.
// Rejects 0/0.
Slope make_slope(Int p, Int q);

// Accepts "p/q", "p" (meaning p/1), and "inf".
Slope parse_slope(const std::string& text);

std::string to_string(const Slope& s);

// |a.p * b.q - a.q * b.p|. Adjacency in the Farey graph is det == 1.
Int farey_det(const Slope& a, const Slope& b);
bool farey_adjacent(const Slope& a, const Slope& b);

// Length of the Euclidean expansion of |p|/q. Zero for 1/0.
int cf_length(const Slope& s);

// All Farey neighbors r/s of a with |r| <= cap and s <= cap, sorted.
std::vector<Slope> farey_neighbors(const Slope& a, const Int& cap);

// Exact Farey-graph distance, computed by BFS inside an explicit window.
// Returns -1 if b was not reached within the window (callers treat that as
// truncation, not as a verdict).
int slope_distance_windowed(const Slope& a, const Slope& b, const Int& cap,
                            int depth_cap);

// BFS window derived from the endpoints: coefficient cap (max coefficient)^2
// and depth cap cf_length(a) + cf_length(b) + 2. Tests re-verify the answers
// against strictly wider windows.
int slope_distance(const Slope& a, const Slope& b);

} // namespace ccx
