#include "cmopt/chambers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "cmopt/errors.hpp"
#include "cmopt/linprog.hpp"

namespace cmopt {

std::vector<Chamber> enumerate_chambers_2d(const GeneratorSet& gens, bool with_signs) {
  if (gens.normals.empty())
    throw std::invalid_argument("enumerate_chambers_2d: empty normal set is the caller's case");
  for (const Vec& h : gens.normals)
    if (h.size() != 2) throw std::invalid_argument("enumerate_chambers_2d: requires d = 2");

  // Chamber walls are the lines orthogonal to the normals. Collect both
  // boundary ray directions per wall and sweep the circle.
  const std::size_t m = gens.normals.size();
  std::vector<double> bounds;
  bounds.reserve(2 * m);
  for (const Vec& h : gens.normals) {
    double phi = std::atan2(h[0], -h[1]);  // direction of (-h_y, h_x)
    if (phi < 0.0) phi += std::numbers::pi;
    if (phi >= std::numbers::pi) phi -= std::numbers::pi;
    bounds.push_back(phi);
    bounds.push_back(phi + std::numbers::pi);
  }
  std::sort(bounds.begin(), bounds.end());

  std::vector<Chamber> out;
  out.reserve(2 * m);
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    const double lo = bounds[i];
    const double hi = i + 1 < bounds.size() ? bounds[i + 1] : bounds[0] + 2.0 * std::numbers::pi;
    const double mid = 0.5 * (lo + hi);
    Vec w = {std::cos(mid), std::sin(mid)};
    const double scale = inf_norm(w);
    w[0] /= scale;
    w[1] /= scale;
    Chamber c;
    c.witness = std::move(w);
    if (with_signs) {
      c.signs.reserve(m);
      for (const Vec& h : gens.normals)
        c.signs.push_back(dot(c.witness, h) > 0.0 ? std::int8_t{1} : std::int8_t{-1});
    }
    out.push_back(std::move(c));
  }
  return out;
}

namespace {

struct BuildChamber {
  std::vector<std::int8_t> signs;
  Vec witness;
  std::vector<int> facets;  // indices of normals bounding the cone
  std::vector<Vec> rays;    // unit extreme rays; nonempty only for pointed d=3 cones
};

std::vector<SignedConstraint> facet_constraints(const BuildChamber& c,
                                                const std::vector<Vec>& normals) {
  std::vector<SignedConstraint> cs;
  cs.reserve(c.facets.size());
  for (int f : c.facets)
    cs.push_back(SignedConstraint{normals[static_cast<std::size_t>(f)], c.signs[static_cast<std::size_t>(f)]});
  return cs;
}

std::vector<SignedConstraint> full_constraints(const BuildChamber& c,
                                               const std::vector<Vec>& normals) {
  std::vector<SignedConstraint> cs;
  cs.reserve(c.signs.size());
  for (std::size_t k = 0; k < c.signs.size(); ++k)
    cs.push_back(SignedConstraint{normals[k], c.signs[k]});
  return cs;
}

Vec cross3(const Vec& a, const Vec& b) {
  return Vec{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// Drop facet constraints certified redundant by the LP; used when the
// cheap ray representation is unavailable.
void lp_prune(BuildChamber& c, const std::vector<Vec>& normals, int d) {
  std::vector<int> kept = c.facets;
  for (std::size_t i = 0; i < kept.size();) {
    std::vector<SignedConstraint> cs;
    cs.reserve(kept.size());
    for (std::size_t l = 0; l < kept.size(); ++l) {
      const auto f = static_cast<std::size_t>(kept[l]);
      int sign = c.signs[f];
      if (l == i) sign = -sign;
      cs.push_back(SignedConstraint{normals[f], sign});
    }
    if (max_margin(cs, d).margin > kSignTol) {
      ++i;  // flipped side reachable: real facet
    } else {
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }
  c.facets = std::move(kept);
}

// Recompute extreme rays of a pointed 3-D cone from its facet normals and
// prune facets not tight at two rays. Clears rays when the representation
// cannot be certified (non-pointed or degenerate cone).
void refresh_rays(BuildChamber& c, const std::vector<Vec>& normals, int d) {
  c.rays.clear();
  if (d != 3 || c.facets.size() < 3) return;

  std::vector<Vec> sn;  // signed facet normals: sign * h points into the cone side
  std::vector<double> snlen;
  sn.reserve(c.facets.size());
  for (int f : c.facets) {
    const auto fi = static_cast<std::size_t>(f);
    sn.push_back(scaled(normals[fi], static_cast<double>(c.signs[fi])));
    snlen.push_back(norm2(sn.back()));
  }

  for (std::size_t p = 0; p < sn.size(); ++p) {
    for (std::size_t q = p + 1; q < sn.size(); ++q) {
      Vec r = cross3(sn[p], sn[q]);
      const double nr = norm2(r);
      if (nr <= 1e-10 * snlen[p] * snlen[q]) continue;  // parallel walls
      for (double& v : r) v /= nr;
      for (int dir = 0; dir < 2; ++dir) {
        Vec cand = dir == 0 ? r : scaled(r, -1.0);
        bool ok = true;
        for (std::size_t l = 0; l < sn.size(); ++l) {
          if (dot(sn[l], cand) < -kSignTol * snlen[l]) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        bool dup = false;
        for (const Vec& e : c.rays) {
          if (std::fabs(e[0] - cand[0]) < 1e-7 && std::fabs(e[1] - cand[1]) < 1e-7 &&
              std::fabs(e[2] - cand[2]) < 1e-7) {
            dup = true;
            break;
          }
        }
        if (!dup) c.rays.push_back(std::move(cand));
      }
    }
  }

  if (c.rays.size() < 3) {
    c.rays.clear();
    return;
  }

  // A facet of a pointed full-dimensional 3-D cone carries exactly two
  // extreme rays; anything tight at fewer is redundant.
  std::vector<int> kept;
  kept.reserve(c.facets.size());
  for (std::size_t l = 0; l < sn.size(); ++l) {
    int tight = 0;
    for (const Vec& ray : c.rays)
      if (std::fabs(dot(sn[l], ray)) <= kSignTol * snlen[l]) ++tight;
    if (tight >= 2) kept.push_back(c.facets[l]);
  }
  if (kept.size() >= 3) c.facets = std::move(kept);
}

enum class SplitHint { kNoSplit, kMaybe };

// Exact test from extreme rays: a hyperplane misses the open cone iff all
// rays lie strictly on the witness side. Anything ambiguous defers to the LP.
SplitHint ray_split_hint(const BuildChamber& c, const Vec& h, double hlen, int s) {
  if (c.rays.empty()) return SplitHint::kMaybe;
  for (const Vec& ray : c.rays) {
    const double p = dot(h, ray);
    if (std::fabs(p) <= kSignTol * hlen) return SplitHint::kMaybe;
    if ((p > 0.0 ? 1 : -1) != s) return SplitHint::kMaybe;
  }
  return SplitHint::kNoSplit;
}

void finish_split_geometry(BuildChamber& c, const std::vector<Vec>& normals, int d) {
  refresh_rays(c, normals, d);
  if (c.rays.empty() && c.facets.size() > static_cast<std::size_t>(2 * d + 8))
    lp_prune(c, normals, d);
}

}  // namespace

std::vector<Chamber> enumerate_chambers_nd(const GeneratorSet& gens) {
  int d = -1;
  for (const Vec& h : gens.normals) {
    if (d < 0) d = static_cast<int>(h.size());
    if (h.size() != static_cast<std::size_t>(d))
      throw std::invalid_argument("enumerate_chambers_nd: inconsistent normal dimensions");
  }
  if (gens.normals.empty()) {
    // No walls: the whole space is one chamber.
    return {Chamber{{}, Vec{1.0}}};
  }
  if (d < 1) throw std::invalid_argument("enumerate_chambers_nd: d must be positive");

  std::vector<BuildChamber> chs;
  chs.push_back(BuildChamber{{}, unit_vec(d, 0), {}, {}});

  for (std::size_t k = 0; k < gens.normals.size(); ++k) {
    const Vec& h = gens.normals[k];
    const double hlen = norm2(h);
    std::vector<BuildChamber> spawned;

    for (BuildChamber& c : chs) {
      double p = dot(c.witness, h);

      if (std::fabs(p) <= kSignTol * hlen) {
        // Witness sits on the new wall; re-center it, and if that fails
        // decide both sides by direct feasibility.
        MarginResult rc = max_margin(full_constraints(c, gens.normals), d);
        if (rc.margin > kSignTol) {
          c.witness = rc.witness;
          p = dot(c.witness, h);
        }
        if (std::fabs(p) <= kSignTol * hlen) {
          auto base = facet_constraints(c, gens.normals);
          base.push_back(SignedConstraint{h, +1});
          MarginResult rp = max_margin(base, d);
          base.back().sign = -1;
          MarginResult rm = max_margin(base, d);
          const bool fp = rp.margin > kSignTol;
          const bool fm = rm.margin > kSignTol;
          if (!fp && !fm)
            throw NumericError("enumerate_chambers_nd: chamber degenerate against new hyperplane");
          if (fp && fm) {
            BuildChamber twin = c;
            c.witness = rp.witness;
            c.signs.push_back(1);
            c.facets.push_back(static_cast<int>(k));
            finish_split_geometry(c, gens.normals, d);
            twin.witness = rm.witness;
            twin.signs.push_back(-1);
            twin.facets.push_back(static_cast<int>(k));
            finish_split_geometry(twin, gens.normals, d);
            spawned.push_back(std::move(twin));
          } else {
            c.witness = fp ? rp.witness : rm.witness;
            c.signs.push_back(fp ? 1 : -1);
            c.facets.push_back(static_cast<int>(k));  // wall may be tight; pruning decides
            finish_split_geometry(c, gens.normals, d);
          }
          continue;
        }
      }

      const int s = p > 0.0 ? 1 : -1;
      bool split = false;
      Vec child_witness;
      if (ray_split_hint(c, h, hlen, s) == SplitHint::kMaybe) {
        auto base = facet_constraints(c, gens.normals);
        base.push_back(SignedConstraint{h, -s});
        MarginResult r = max_margin(base, d);
        if (r.margin > kSignTol) {
          split = true;
          child_witness = std::move(r.witness);
        }
      }

      c.signs.push_back(static_cast<std::int8_t>(s));
      if (split) {
        BuildChamber twin;
        twin.signs = c.signs;
        twin.signs.back() = static_cast<std::int8_t>(-s);
        twin.witness = std::move(child_witness);
        twin.facets = c.facets;
        twin.facets.push_back(static_cast<int>(k));
        c.facets.push_back(static_cast<int>(k));
        finish_split_geometry(c, gens.normals, d);
        finish_split_geometry(twin, gens.normals, d);
        spawned.push_back(std::move(twin));
      }
    }

    chs.reserve(chs.size() + spawned.size());
    for (BuildChamber& bc : spawned) chs.push_back(std::move(bc));
  }

  std::vector<Chamber> out;
  out.reserve(chs.size());
  for (BuildChamber& bc : chs) out.push_back(Chamber{std::move(bc.signs), std::move(bc.witness)});
  return out;
}

std::uint64_t chamber_count_bound(int m_prime, int d) {
  if (m_prime < 0 || d < 1) throw std::invalid_argument("chamber_count_bound: bad arguments");
  if (m_prime == 0) return 1;
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t sum = 0;
  const std::uint64_t n = static_cast<std::uint64_t>(m_prime) - 1;
  for (int k = 0; k < d; ++k) {
    // C(n, k) with saturation
    if (static_cast<std::uint64_t>(k) > n) break;
    std::uint64_t c = 1;
    bool sat = false;
    for (std::uint64_t i = 1; i <= static_cast<std::uint64_t>(k); ++i) {
      if (c > kMax / (n - i + 1)) {
        sat = true;
        break;
      }
      c = c * (n - i + 1) / i;
    }
    if (sat || sum > kMax - c) return kMax;
    sum += c;
  }
  if (sum > kMax / 2) return kMax;
  return 2 * sum;
}

}  // namespace cmopt
