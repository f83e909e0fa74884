#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <string>

namespace isoext {

/// Bidegree (p,q): topological degree p, motivic weight q.
/// Suspension convention: Sigma^{p,q} M_{a,b} = M_{a-p, b-q}.
struct Bidegree
{
    int p = 0;
    int q = 0;

    /// Chow-Novikov degree p - 2q.
    int cn() const
    {
        return p - 2 * q;
    }

    Bidegree operator+(Bidegree o) const
    {
        return {p + o.p, q + o.q};
    }
    Bidegree operator-(Bidegree o) const
    {
        return {p - o.p, q - o.q};
    }
    auto operator<=>(const Bidegree&) const = default;

    std::string str() const
    {
        return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
    }
};

/// Tridegree (s,t,u): filtration s, internal topological degree t, weight u.
struct Tridegree
{
    int s = 0;
    int t = 0;
    int u = 0;

    int stem() const
    {
        return t - s;
    }

    auto operator<=>(const Tridegree&) const = default;

    std::string str() const
    {
        return "(" + std::to_string(s) + "," + std::to_string(t) + "," + std::to_string(u) + ")";
    }
};

constexpr int kDegUnbounded = std::numeric_limits<int>::max() / 4;

/// Closed box of bidegrees, possibly unbounded on any side.
struct BidegreeWindow
{
    int p_min = -kDegUnbounded;
    int p_max = kDegUnbounded;
    int q_min = -kDegUnbounded;
    int q_max = kDegUnbounded;

    static BidegreeWindow up_to_p(int pmax)
    {
        BidegreeWindow w;
        w.p_max = pmax;
        return w;
    }
    static BidegreeWindow box(int pmin, int pmax, int qmin, int qmax)
    {
        return BidegreeWindow{pmin, pmax, qmin, qmax};
    }

    bool contains(Bidegree d) const
    {
        return d.p >= p_min && d.p <= p_max && d.q >= q_min && d.q <= q_max;
    }
    bool empty() const
    {
        return p_min > p_max || q_min > q_max;
    }
    bool bounded_above_p() const
    {
        return p_max < kDegUnbounded;
    }
};

}  // namespace isoext
