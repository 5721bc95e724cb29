// Exact rational plane geometry: every predicate is a sign of a
// determinant over arbitrary-precision rationals.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace cubecross {

using Rat = boost::multiprecision::cpp_rational;

struct Pt {
    Rat x, y;

    bool operator==(const Pt& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Pt& o) const { return !(*this == o); }
    bool operator<(const Pt& o) const {
        return x < o.x || (x == o.x && y < o.y);
    }
};

inline Pt operator-(const Pt& a, const Pt& b) { return {a.x - b.x, a.y - b.y}; }
inline Pt operator+(const Pt& a, const Pt& b) { return {a.x + b.x, a.y + b.y}; }

inline Rat cross(const Pt& a, const Pt& b) { return a.x * b.y - a.y * b.x; }

/// Sign of the signed area of (a, b, c): +1 counterclockwise, -1 clockwise.
inline int orient(const Pt& a, const Pt& b, const Pt& c) {
    Rat v = cross(b - a, c - a);
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

/// True iff p lies on the closed segment [a, b].
inline bool on_segment(const Pt& p, const Pt& a, const Pt& b) {
    if (orient(a, b, p) != 0) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

struct SegHit {
    enum Kind { None, Proper, Touch, Overlap } kind = None;
    Pt point;      // Proper/Touch: the intersection point
    Rat t1, t2;    // parameters along [a,b] and [c,d], in [0,1]
};

/// Exact intersection classification of segments [a,b] and [c,d].
/// Proper means a single interior-interior crossing point.
inline SegHit seg_intersect(const Pt& a, const Pt& b, const Pt& c, const Pt& d) {
    int o1 = orient(a, b, c), o2 = orient(a, b, d);
    int o3 = orient(c, d, a), o4 = orient(c, d, b);
    SegHit hit;
    if (o1 == 0 && o2 == 0) {
        // collinear: overlap iff the closed intervals share more than a point
        if (!on_segment(c, a, b) && !on_segment(d, a, b) &&
            !on_segment(a, c, d) && !on_segment(b, c, d))
            return hit;
        Pt lo = std::max(std::min(a, b), std::min(c, d));
        Pt hi = std::min(std::max(a, b), std::max(c, d));
        if (lo == hi) {
            hit.kind = SegHit::Touch;
            hit.point = lo;
        } else {
            hit.kind = SegHit::Overlap;
        }
        return hit;
    }
    if (o1 * o2 > 0 || o3 * o4 > 0) return hit;
    // intersection point via line parameters
    Rat denom = cross(b - a, d - c);
    if (denom == 0) return hit;  // parallel, non-collinear
    Rat t = cross(c - a, d - c) / denom;
    Rat u = cross(c - a, b - a) / denom;
    if (t < 0 || t > 1 || u < 0 || u > 1) return hit;
    hit.t1 = t;
    hit.t2 = u;
    hit.point = {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
    hit.kind = (t > 0 && t < 1 && u > 0 && u < 1) ? SegHit::Proper : SegHit::Touch;
    return hit;
}

inline std::string rat_to_string(const Rat& r) {
    auto num = boost::multiprecision::numerator(r).str();
    auto den = boost::multiprecision::denominator(r);
    return den == 1 ? num : num + "/" + den.str();
}

inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rat(boost::multiprecision::cpp_int(s));
        boost::multiprecision::cpp_int num(s.substr(0, slash));
        boost::multiprecision::cpp_int den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rat(num, den);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument("bad rational: " + s);
    }
}

}  // namespace cubecross
