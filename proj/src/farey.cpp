#include <ccx/farey.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace ccx {

Slope make_slope(Int p, Int q) {
    if (p == 0 && q == 0) throw Error(ErrorKind::BadInput, "slope 0/0");
    if (q < 0) {
        p = -p;
        q = -q;
    }
    if (q == 0) return Slope{1, 0};
    Int g = boost::multiprecision::gcd(abs(p), q);
    return Slope{p / g, q / g};
}

Slope parse_slope(const std::string& text) {
    if (text == "inf" || text == "1/0") return Slope{1, 0};
    auto bar = text.find('/');
    try {
        if (bar == std::string::npos) return make_slope(Int(text), 1);
        Int p(text.substr(0, bar));
        Int q(text.substr(bar + 1));
        return make_slope(p, q);
    } catch (const std::exception&) {
        throw Error(ErrorKind::BadInput, "cannot parse slope '" + text + "'");
    }
}

std::string to_string(const Slope& s) {
    return s.p.str() + "/" + s.q.str();
}

Int farey_det(const Slope& a, const Slope& b) {
    return abs(a.p * b.q - a.q * b.p);
}

bool farey_adjacent(const Slope& a, const Slope& b) {
    return farey_det(a, b) == 1;
}

int cf_length(const Slope& s) {
    Int a = abs(s.p);
    Int b = s.q;
    int n = 0;
    while (b != 0) {
        Int r = a % b;
        a = b;
        b = r;
        ++n;
    }
    return n;
}

namespace {

// One solution (r0, s0) of p*s - q*r = 1 via the extended Euclidean
// algorithm; the full neighbor set is {(r0 + k p, s0 + k q)} united with its
// negation family.
void extended_gcd(const Int& a, const Int& b, Int& x, Int& y) {
    if (b == 0) {
        x = (a >= 0) ? 1 : -1;
        y = 0;
        return;
    }
    Int x1, y1;
    extended_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
}

} // namespace

std::vector<Slope> farey_neighbors(const Slope& a, const Int& cap) {
    // Want r/s with p*s - q*r = +-1.
    Int x, y;
    extended_gcd(a.p, a.q, x, y); // a.p * x + a.q * y = 1
    // p*s - q*r = 1 with s = x, r = -y.
    Int r0 = -y;
    Int s0 = x;
    std::set<Slope> out;
    for (int sign = 0; sign < 2; ++sign) {
        Int r = (sign == 0) ? r0 : -r0;
        Int s = (sign == 0) ? s0 : -s0;
        // Shift into and across the window in both directions of k.
        // |r + k p| <= cap and |s + k q| <= cap bound |k| whenever (p, q)
        // is nonzero, which canonical slopes guarantee.
        Int lo, hi;
        if (a.q != 0) {
            Int span = (cap + abs(s)) / a.q + 1;
            lo = -span;
            hi = span;
        } else {
            Int span = (cap + abs(r)) / abs(a.p) + 1;
            lo = -span;
            hi = span;
        }
        for (Int k = lo; k <= hi; ++k) {
            Int rr = r + k * a.p;
            Int ss = s + k * a.q;
            if (abs(rr) > cap || abs(ss) > cap) continue;
            if (rr == 0 && ss == 0) continue;
            Slope n = make_slope(rr, ss);
            if (farey_det(a, n) == 1) out.insert(n);
        }
    }
    return {out.begin(), out.end()};
}

int slope_distance_windowed(const Slope& a, const Slope& b, const Int& cap,
                            int depth_cap) {
    if (a == b) return 0;
    std::map<Slope, int> dist;
    dist[a] = 0;
    std::deque<Slope> frontier{a};
    while (!frontier.empty()) {
        Slope cur = frontier.front();
        frontier.pop_front();
        int d = dist[cur];
        if (d >= depth_cap) continue;
        for (const Slope& n : farey_neighbors(cur, cap)) {
            if (dist.count(n)) continue;
            if (n == b) return d + 1;
            dist[n] = d + 1;
            frontier.push_back(n);
        }
    }
    return -1;
}

int slope_distance(const Slope& a, const Slope& b) {
    Int m = 1;
    for (const Int& v : {Int(abs(a.p)), a.q, Int(abs(b.p)), b.q})
        if (v > m) m = v;
    Int cap = m * m + 4;
    int depth = cf_length(a) + cf_length(b) + 2;
    int d = slope_distance_windowed(a, b, cap, depth);
    if (d < 0)
        throw Error(ErrorKind::TruncationExhausted,
                    "farey window missed " + to_string(a) + " -> " +
                        to_string(b));
    return d;
}

} // namespace ccx
