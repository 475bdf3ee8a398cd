#include "vkf/geometry.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "vkf/errors.hpp"

namespace vkf {

namespace {

// Kernel of the (d+1) x m "affine dependence" matrix of m points in R^d:
// rows are the all-ones row and the coordinate rows.  Returns a basis of the
// kernel as coefficient vectors.
std::vector<std::vector<Rational>> affine_kernel(const std::vector<RationalPoint>& pts) {
    if (pts.empty()) throw PreconditionError("affine_kernel: no points");
    const std::size_t m = pts.size();
    const std::size_t d = pts[0].coords.size();
    for (const RationalPoint& p : pts)
        if (p.coords.size() != d)
            throw PreconditionError("affine_kernel: mixed ambient dimensions");

    std::vector<std::vector<Rational>> a(d + 1, std::vector<Rational>(m));
    for (std::size_t c = 0; c < m; ++c) {
        a[0][c] = 1;
        for (std::size_t r = 0; r < d; ++r) a[r + 1][c] = pts[c].coords[r];
    }

    // Gauss-Jordan, tracking pivot columns
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t c = 0; c < m && row < a.size(); ++c) {
        std::size_t pr = row;
        while (pr < a.size() && a[pr][c] == 0) ++pr;
        if (pr == a.size()) continue;
        std::swap(a[row], a[pr]);
        const Rational inv = 1 / a[row][c];
        for (std::size_t j = 0; j < m; ++j) a[row][j] *= inv;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == row || a[r][c] == 0) continue;
            const Rational factor = a[r][c];
            for (std::size_t j = 0; j < m; ++j) a[r][j] -= factor * a[row][j];
        }
        pivot_col.push_back(c);
        ++row;
    }

    std::vector<bool> is_pivot(m, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Rational>> kernel;
    for (std::size_t free_c = 0; free_c < m; ++free_c) {
        if (is_pivot[free_c]) continue;
        std::vector<Rational> v(m);
        v[free_c] = 1;
        for (std::size_t r = 0; r < pivot_col.size(); ++r)
            v[pivot_col[r]] = -a[r][free_c];
        kernel.push_back(std::move(v));
    }
    return kernel;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t sub) {
    return seed * 0x9e3779b97f4a7c15ull + sub + 1;
}

} // namespace

const RationalPoint& CoordMap::at(VertexId v) const {
    auto it = points.find(v);
    if (it == points.end())
        throw PreconditionError("coord map: no point for vertex " + std::to_string(v));
    return it->second;
}

std::vector<RationalPoint> CoordMap::points_of(const Face& f) const {
    std::vector<RationalPoint> out;
    out.reserve(f.size());
    for (VertexId v : f) out.push_back(at(v));
    return out;
}

bool affinely_independent(const std::vector<RationalPoint>& pts) {
    return affine_kernel(pts).empty();
}

CoordMap moment_coords_from_params(const SimplicialComplex& k, int d,
                                   const std::vector<Rational>& params) {
    if (d < 1) throw PreconditionError("moment_coords: ambient dimension must be >= 1");
    if (params.size() != k.vertices().size())
        throw PreconditionError("moment_coords: parameter count mismatch");
    std::set<Rational> distinct(params.begin(), params.end());
    if (distinct.size() != params.size())
        throw PreconditionError("moment_coords: duplicate curve parameters");

    CoordMap cm;
    cm.ambient = d;
    cm.certificate = "moment";
    for (std::size_t i = 0; i < k.vertices().size(); ++i) {
        RationalPoint p;
        Rational power = 1;
        for (int j = 0; j < d; ++j) {
            power *= params[i];
            p.coords.push_back(power);
        }
        cm.points[k.vertices()[i].id] = std::move(p);
    }
    return cm;
}

CoordMap moment_coords(const SimplicialComplex& k, int d) {
    std::vector<Rational> params;
    for (std::size_t i = 0; i < k.vertices().size(); ++i)
        params.emplace_back(static_cast<long>(i) + 1);
    return moment_coords_from_params(k, d, params);
}

namespace {

// genericity required of a map used for crossing counts at ambient d:
//  - pairs with dim sum d:    unique affine dependence, all coefficients nonzero
//  - pairs with dim sum d-1:  affinely independent point sets
bool certify_generic(const SimplicialComplex& k, int d, const CoordMap& cm) {
    for (int s = 0; s <= k.dim(); ++s) {
        for (int t = s; t <= k.dim(); ++t) {
            const int sum = s + t;
            if (sum != d && sum != d - 1) continue;
            for (const auto& [sigma, tau] : k.disjoint_simplex_pairs(s, t)) {
                std::vector<RationalPoint> pts = cm.points_of(sigma);
                for (const RationalPoint& p : cm.points_of(tau)) pts.push_back(p);
                const auto kernel = affine_kernel(pts);
                if (sum == d - 1) {
                    if (!kernel.empty()) return false;
                } else {
                    if (kernel.size() != 1) return false;
                    for (const Rational& c : kernel[0])
                        if (c == 0) return false;
                }
            }
        }
    }
    return true;
}

} // namespace

CoordMap seeded_coords(const SimplicialComplex& k, int d, std::uint64_t seed) {
    if (d < 1) throw PreconditionError("seeded_coords: ambient dimension must be >= 1");
    const std::size_t n = k.vertices().size();
    const int max_retries = 32;
    for (int sub = 0; sub < max_retries; ++sub) {
        std::mt19937_64 rng(mix_seed(seed, static_cast<std::uint64_t>(sub)));
        const long box = 1000 * static_cast<long>(n) * (sub + 1);
        std::uniform_int_distribution<long> dist(-box, box);
        CoordMap cm;
        cm.ambient = d;
        cm.seed = seed;
        cm.subseed = static_cast<std::uint64_t>(sub);
        cm.certificate = "seed:" + std::to_string(seed) + "/sub:" + std::to_string(sub);
        for (const Vertex& v : k.vertices()) {
            RationalPoint p;
            for (int j = 0; j < d; ++j) p.coords.emplace_back(dist(rng));
            cm.points[v.id] = std::move(p);
        }
        if (certify_generic(k, d, cm)) return cm;
    }
    throw DegeneracyError("seeded_coords: retry budget exhausted (degenerate complex?)");
}

int pair_crossing(const std::vector<RationalPoint>& sigma_pts,
                  const std::vector<RationalPoint>& tau_pts) {
    if (sigma_pts.empty() || tau_pts.empty())
        throw PreconditionError("pair_crossing: empty simplex");
    const std::size_t d = sigma_pts[0].coords.size();
    if (sigma_pts.size() + tau_pts.size() != d + 2)
        throw PreconditionError("pair_crossing: need |sigma| + |tau| = d + 2");

    std::vector<RationalPoint> pts = sigma_pts;
    pts.insert(pts.end(), tau_pts.begin(), tau_pts.end());
    const auto kernel = affine_kernel(pts);
    if (kernel.size() != 1)
        throw DegeneracyError("pair_crossing: affine dependence is not unique");
    const auto& c = kernel[0];
    for (const Rational& x : c)
        if (x == 0) throw DegeneracyError("pair_crossing: zero dependence coefficient");

    // the open simplices meet iff the Radon partition of the point set is
    // exactly (sigma, tau): one sign on the sigma block, the other on tau
    const int sign0 = sgn(c[0]);
    for (std::size_t i = 1; i < sigma_pts.size(); ++i)
        if (sgn(c[i]) != sign0) return 0;
    for (std::size_t i = sigma_pts.size(); i < c.size(); ++i)
        if (sgn(c[i]) != -sign0) return 0;
    return 1;
}

VkResult van_kampen_number(const SimplicialComplex& k, int d, const CoordMap& coords) {
    if (coords.ambient != d)
        throw PreconditionError("van_kampen_number: coord map has wrong ambient dimension");
    VkResult result;
    for (int s = 0; s <= k.dim(); ++s) {
        for (int t = s; t <= k.dim(); ++t) {
            if (s + t != d) continue;
            for (const auto& [sigma, tau] : k.disjoint_simplex_pairs(s, t)) {
                ++result.pairs_checked;
                if (pair_crossing(coords.points_of(sigma), coords.points_of(tau))) {
                    result.v ^= 1;
                    result.ledger.emplace_back(sigma, tau);
                }
            }
        }
    }
    return result;
}

VkResult moment_crossing_oracle(const SimplicialComplex& k, int d) {
    // on the moment curve a disjoint pair crosses iff the vertex parameters
    // strictly alternate between sigma and tau along the curve; vertex order
    // by id matches the parameter order of moment_coords
    std::vector<VertexId> order;
    for (const Vertex& v : k.vertices()) order.push_back(v.id);
    std::map<VertexId, std::size_t> position;
    for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;

    VkResult result;
    for (int s = 0; s <= k.dim(); ++s) {
        for (int t = s; t <= k.dim(); ++t) {
            if (s + t != d) continue;
            for (const auto& [sigma, tau] : k.disjoint_simplex_pairs(s, t)) {
                ++result.pairs_checked;
                struct Tag { std::size_t pos; int side; };
                std::vector<Tag> merged;
                for (VertexId v : sigma) merged.push_back({position.at(v), 0});
                for (VertexId v : tau) merged.push_back({position.at(v), 1});
                std::sort(merged.begin(), merged.end(),
                          [](const Tag& a, const Tag& b) { return a.pos < b.pos; });
                bool alternating = true;
                for (std::size_t i = 1; i < merged.size(); ++i)
                    if (merged[i].side == merged[i - 1].side) { alternating = false; break; }
                if (alternating) {
                    result.v ^= 1;
                    result.ledger.emplace_back(sigma, tau);
                }
            }
        }
    }
    return result;
}

ParityReport check_extension_parity(const SimplicialComplex& k, int d) {
    ParityReport report;
    auto disjoint = [](const Face& a, const Face& b) {
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] == b[j]) return false;
            if (a[i] < b[j]) ++i; else ++j;
        }
        return true;
    };
    // cofaces one dimension up of f avoiding g
    auto extensions = [&](const Face& f, const Face& g) {
        std::size_t count = 0;
        const int fd = static_cast<int>(f.size()); // dim f + 1
        for (const Face& nu : k.faces(fd)) {
            if (!std::includes(nu.begin(), nu.end(), f.begin(), f.end())) continue;
            if (disjoint(nu, g)) ++count;
        }
        return count;
    };
    for (int s = 0; s <= k.dim(); ++s) {
        for (int t = s; t <= k.dim(); ++t) {
            if (s + t != d - 1) continue;
            for (const auto& [sigma, tau] : k.disjoint_simplex_pairs(s, t)) {
                const std::size_t ext_sigma = extensions(sigma, tau);
                const std::size_t ext_tau = extensions(tau, sigma);
                if (ext_sigma % 2 != ext_tau % 2) {
                    report.ok = false;
                    report.sigma = sigma;
                    report.tau = tau;
                    report.extensions_of_sigma = ext_sigma;
                    report.extensions_of_tau = ext_tau;
                    return report;
                }
            }
        }
    }
    return report;
}

int PLCycle::dim() const {
    if (top_faces.empty()) throw PreconditionError("PLCycle: no top faces");
    return static_cast<int>(top_faces[0].size()) - 1;
}

void PLCycle::validate() const {
    if (top_faces.empty()) throw PreconditionError("PLCycle: no top faces");
    if (coords == nullptr) throw PreconditionError("PLCycle: no coordinate map");
    const std::size_t sz = top_faces[0].size();
    std::map<Face, std::size_t> facet_count;
    for (const Face& f : top_faces) {
        if (f.size() != sz) throw PreconditionError("PLCycle: mixed top dimensions");
        for (VertexId v : f) coords->at(v);
        for (std::size_t drop = 0; drop < f.size(); ++drop) {
            Face g = f;
            g.erase(g.begin() + static_cast<std::ptrdiff_t>(drop));
            if (!g.empty()) ++facet_count[g];
        }
    }
    for (const auto& [face, count] : facet_count)
        if (count % 2 != 0)
            throw PreconditionError("PLCycle: not a mod-2 cycle (odd codimension-1 face)");
}

int lk2(const PLCycle& a, const PLCycle& b, const RationalPoint& apex) {
    a.validate();
    b.validate();
    const int d = a.coords->ambient;
    if (b.coords->ambient != d)
        throw PreconditionError("lk2: cycles live in different ambient dimensions");
    if (a.dim() + b.dim() != d - 1)
        throw PreconditionError("lk2: need dim A + dim B = d - 1");
    if (static_cast<int>(apex.coords.size()) != d)
        throw PreconditionError("lk2: apex has wrong dimension");

    // disjoint images: for each top-face pair the combined point set must be
    // affinely independent, making the closed simplices disjoint faces of a
    // common simplex
    for (const Face& fa : a.top_faces) {
        for (const Face& fb : b.top_faces) {
            std::vector<RationalPoint> pts = a.coords->points_of(fa);
            for (const RationalPoint& p : b.coords->points_of(fb)) pts.push_back(p);
            if (!affinely_independent(pts))
                throw PreconditionError("lk2: cycle images are not verifiably disjoint");
        }
    }

    int parity = 0;
    for (const Face& fa : a.top_faces) {
        std::vector<RationalPoint> cone = a.coords->points_of(fa);
        cone.push_back(apex);
        for (const Face& fb : b.top_faces)
            parity ^= pair_crossing(cone, b.coords->points_of(fb));
    }
    return parity;
}

Lk2Result lk2_seeded(const PLCycle& a, const PLCycle& b, std::uint64_t seed) {
    a.validate();
    const int d = a.coords->ambient;
    const int max_retries = 32;
    for (int sub = 0; sub < max_retries; ++sub) {
        std::mt19937_64 rng(mix_seed(seed ^ 0xc0ffee, static_cast<std::uint64_t>(sub)));
        const long box = 10000 * (sub + 1);
        std::uniform_int_distribution<long> dist(-box, box);
        RationalPoint apex;
        for (int j = 0; j < d; ++j) apex.coords.emplace_back(dist(rng));
        try {
            int value = lk2(a, b, apex);
            return {value, seed, static_cast<std::uint64_t>(sub), std::move(apex)};
        } catch (const DegeneracyError&) {
            continue; // re-draw the apex
        }
    }
    throw DegeneracyError("lk2_seeded: retry budget exhausted");
}

} // namespace vkf
