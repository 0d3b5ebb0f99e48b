#include "suffridge/curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

namespace suffridge {

namespace {

constexpr double kTolGeom = 1e-12;
constexpr int kSideWindow = 6;  // segments on each side for the side-swap test

struct Pt {
    double x, y;
};

double orient(Pt a, Pt b, Pt c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

double seg_dist2(Pt a, Pt b, Pt p) {
    const double dx = b.x - a.x, dy = b.y - a.y;
    const double len2 = dx * dx + dy * dy;
    double s = 0.0;
    if (len2 > 0.0)
        s = std::clamp(((p.x - a.x) * dx + (p.y - a.y) * dy) / len2, 0.0, 1.0);
    const double qx = a.x + s * dx - p.x, qy = a.y + s * dy - p.y;
    return qx * qx + qy * qy;
}

void validate_geometry(const CurveSamples& c) {
    if (!c.closed)
        throw ValidationError("curve geometry: curve must be closed");
    if (c.w.size() < 16)
        throw ValidationError("curve geometry: at least 16 samples required");
    if (c.t.size() != c.w.size())
        throw ValidationError("curve geometry: t/w size mismatch");
    for (std::size_t i = 0; i + 1 < c.t.size(); ++i)
        if (!(c.t[i] < c.t[i + 1]))
            throw ValidationError("curve geometry: t must be strictly increasing");
    if (!(c.t.front() >= 0.0 && c.t.back() < 2.0 * std::numbers::pi))
        throw ValidationError("curve geometry: t must lie in [0, 2*pi)");
}

class SegmentSet {
public:
    explicit SegmentSet(const CurveSamples& c) : n_(c.size()) {
        pts_.reserve(static_cast<std::size_t>(n_));
        double scale = 0.0;
        for (const Complex& w : c.w) {
            pts_.push_back({w.real(), w.imag()});
            scale = std::max(scale, std::abs(w));
        }
        const double deg_tol = kTolGeom * (1.0 + scale);
        for (int i = 0; i < n_; ++i) {
            const Pt a = pts_[static_cast<std::size_t>(i)];
            const Pt b = pts_[static_cast<std::size_t>((i + 1) % n_)];
            if (std::hypot(b.x - a.x, b.y - a.y) < deg_tol)
                throw DegenerateSegment("self_intersections: consecutive samples coincide");
        }
    }

    int size() const { return n_; }
    Pt a(int i) const { return pts_[static_cast<std::size_t>(i)]; }
    Pt b(int i) const { return pts_[static_cast<std::size_t>((i + 1) % n_)]; }

    int wrap(int i) const { return ((i % n_) + n_) % n_; }

    bool adjacent(int i, int j) const {
        const int d = std::abs(i - j);
        return d <= 1 || d == n_ - 1;
    }

    bool proper_crossing(int i, int j) const {
        const double o1 = orient(a(i), b(i), a(j));
        const double o2 = orient(a(i), b(i), b(j));
        const double o3 = orient(a(j), b(j), a(i));
        const double o4 = orient(a(j), b(j), b(i));
        if (o1 == 0.0 || o2 == 0.0 || o3 == 0.0 || o4 == 0.0) return false;
        return ((o1 > 0.0) != (o2 > 0.0)) && ((o3 > 0.0) != (o4 > 0.0));
    }

    // Sign of the side of p relative to the nearest segment in the window
    // [jc - W, jc + W].
    int side_in_window(int jc, Pt p) const {
        double best = std::numeric_limits<double>::infinity();
        double s = 0.0;
        for (int k = jc - kSideWindow; k <= jc + kSideWindow; ++k) {
            const int kk = wrap(k);
            const double d2 = seg_dist2(a(kk), b(kk), p);
            if (d2 < best) {
                best = d2;
                s = orient(a(kk), b(kk), p);
            }
        }
        return (s > 0.0) - (s < 0.0);
    }

    // A candidate crossing is transversal if the flanks of branch i end up on
    // opposite sides of branch j's window. Tangential contacts keep both
    // flanks on the same side.
    bool transversal(int i, int j) const {
        const Pt am = pts_[static_cast<std::size_t>(wrap(i - kSideWindow))];
        const Pt ap = pts_[static_cast<std::size_t>(wrap(i + 1 + kSideWindow))];
        const int sm = side_in_window(j, am);
        const int sp = side_in_window(j, ap);
        return sm * sp < 0;
    }

private:
    int n_;
    std::vector<Pt> pts_;
};

}  // namespace

CurveSamples sample_boundary(const RealPolynomial& p, int samples) {
    if (samples < 16)
        throw ValidationError("sample_boundary: at least 16 samples required");
    CurveSamples c;
    c.t.reserve(static_cast<std::size_t>(samples));
    c.w.reserve(static_cast<std::size_t>(samples));
    for (int k = 0; k < samples; ++k) {
        const double t = 2.0 * std::numbers::pi * k / samples;
        c.t.push_back(t);
        c.w.push_back(p(std::polar(1.0, t)));
    }
    return c;
}

std::vector<std::pair<int, int>> self_intersections(const CurveSamples& c) {
    validate_geometry(c);
    SegmentSet segs(c);
    const int n = segs.size();

    // sweep over segments ordered by bbox min-x
    std::vector<double> minx(static_cast<std::size_t>(n)), maxx(static_cast<std::size_t>(n));
    std::vector<double> miny(static_cast<std::size_t>(n)), maxy(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const Pt a = segs.a(i), b = segs.b(i);
        minx[static_cast<std::size_t>(i)] = std::min(a.x, b.x);
        maxx[static_cast<std::size_t>(i)] = std::max(a.x, b.x);
        miny[static_cast<std::size_t>(i)] = std::min(a.y, b.y);
        maxy[static_cast<std::size_t>(i)] = std::max(a.y, b.y);
    }
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        return minx[static_cast<std::size_t>(i)] < minx[static_cast<std::size_t>(j)];
    });

    std::vector<std::pair<int, int>> out;
    for (int ii = 0; ii < n; ++ii) {
        const int i = order[static_cast<std::size_t>(ii)];
        for (int jj = ii + 1; jj < n; ++jj) {
            const int j = order[static_cast<std::size_t>(jj)];
            if (minx[static_cast<std::size_t>(j)] > maxx[static_cast<std::size_t>(i)]) break;
            if (segs.adjacent(i, j)) continue;
            if (miny[static_cast<std::size_t>(j)] > maxy[static_cast<std::size_t>(i)] ||
                maxy[static_cast<std::size_t>(j)] < miny[static_cast<std::size_t>(i)])
                continue;
            if (!segs.proper_crossing(i, j)) continue;
            if (!segs.transversal(i, j)) continue;
            out.emplace_back(std::min(i, j), std::max(i, j));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int winding_number(const CurveSamples& c, Complex w) {
    validate_geometry(c);
    const double tol = kTolGeom * (1.0 + std::abs(w));
    for (const Complex& s : c.w)
        if (std::abs(s - w) < tol)
            throw PointOnCurve("winding_number: probe point coincides with a curve sample");

    const int n = c.size();
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        const Complex a = c.w[static_cast<std::size_t>(i)] - w;
        const Complex b = c.w[static_cast<std::size_t>((i + 1) % n)] - w;
        const double cross = a.real() * b.imag() - a.imag() * b.real();
        const double dot = a.real() * b.real() + a.imag() * b.imag();
        total += std::atan2(cross, dot);
    }
    return static_cast<int>(std::lround(total / (2.0 * std::numbers::pi)));
}

double distance_to_polyline(const CurveSamples& c, Complex w) {
    validate_geometry(c);
    const int n = c.size();
    const Pt p{w.real(), w.imag()};
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
        const Complex& wa = c.w[static_cast<std::size_t>(i)];
        const Complex& wb = c.w[static_cast<std::size_t>((i + 1) % n)];
        best = std::min(best, seg_dist2({wa.real(), wa.imag()}, {wb.real(), wb.imag()}, p));
    }
    return std::sqrt(best);
}

}  // namespace suffridge
