// Copyright 2026 The Apollon Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "apollon/conformal.hpp"

#include <cmath>
#include <stdexcept>

namespace apollon {

namespace {

// Below this squared-norm threshold an inversion argument is treated as the
// exact center, branching to the infinity rule instead of magnifying noise.
constexpr double kInversionCenterTol = 1e-14;

// Relative tolerance for the sphere-through-origin representation switch.
constexpr double kThroughOriginTol = 1e-12;

Eigen::Index primitive_dimension(const ConformalPrimitive& p) {
  return std::visit(
      [](const auto& prim) -> Eigen::Index {
        using T = std::decay_t<decltype(prim)>;
        if constexpr (std::is_same_v<T, Translation>) {
          return prim.offset.size();
        } else if constexpr (std::is_same_v<T, OrthogonalMap>) {
          return prim.matrix.rows();
        } else {
          return -1;  // dimension-free
        }
      },
      p);
}

void validate_primitive(const ConformalPrimitive& p, Eigen::Index dim) {
  std::visit(
      [dim](const auto& prim) {
        using T = std::decay_t<decltype(prim)>;
        if constexpr (std::is_same_v<T, Translation>) {
          if (prim.offset.size() != dim || !prim.offset.allFinite()) {
            throw std::invalid_argument("ConformalMap: bad translation");
          }
        } else if constexpr (std::is_same_v<T, OrthogonalMap>) {
          const auto& q = prim.matrix;
          if (q.rows() != dim || q.cols() != dim || !q.allFinite()) {
            throw std::invalid_argument("ConformalMap: bad orthogonal matrix");
          }
          const double err =
              (q.transpose() * q - Eigen::MatrixXd::Identity(dim, dim))
                  .cwiseAbs()
                  .maxCoeff();
          if (err > 1e-10) {
            throw std::invalid_argument(
                "ConformalMap: matrix is not orthogonal (Q^T Q != I)");
          }
        } else if constexpr (std::is_same_v<T, Homothety>) {
          if (!(prim.factor > 0.0) || !std::isfinite(prim.factor)) {
            throw std::invalid_argument(
                "ConformalMap: homothety factor must be positive");
          }
        }
      },
      p);
}

ExtendedPoint apply_primitive(const ConformalPrimitive& p,
                              const ExtendedPoint& x) {
  return std::visit(
      [&x](const auto& prim) -> ExtendedPoint {
        using T = std::decay_t<decltype(prim)>;
        if constexpr (std::is_same_v<T, Translation>) {
          if (x.is_infinite()) return x;
          return ExtendedPoint(x.coords() + prim.offset);
        } else if constexpr (std::is_same_v<T, OrthogonalMap>) {
          if (x.is_infinite()) return x;
          return ExtendedPoint(prim.matrix * x.coords());
        } else if constexpr (std::is_same_v<T, Homothety>) {
          if (x.is_infinite()) return x;
          return ExtendedPoint(prim.factor * x.coords());
        } else {
          if (x.is_infinite()) return ExtendedPoint(Vec::Zero(x.dimension()));
          const double n2 = x.coords().squaredNorm();
          if (n2 < kInversionCenterTol * kInversionCenterTol) {
            return ExtendedPoint::infinity(x.dimension());
          }
          return ExtendedPoint(x.coords() / n2);
        }
      },
      p);
}

ConformalPrimitive invert_primitive(const ConformalPrimitive& p) {
  return std::visit(
      [](const auto& prim) -> ConformalPrimitive {
        using T = std::decay_t<decltype(prim)>;
        if constexpr (std::is_same_v<T, Translation>) {
          return Translation{-prim.offset};
        } else if constexpr (std::is_same_v<T, OrthogonalMap>) {
          return OrthogonalMap{prim.matrix.transpose()};
        } else if constexpr (std::is_same_v<T, Homothety>) {
          return Homothety{1.0 / prim.factor};
        } else {
          return Inversion{};
        }
      },
      p);
}

GeneralizedSphere invert_sphere_at_origin(const GeneralizedSphere& s) {
  if (s.is_sphere()) {
    const Vec& c = s.center();
    const double r = s.radius();
    const double d = c.squaredNorm() - r * r;
    if (std::abs(d) <= kThroughOriginTol * (c.squaredNorm() + r * r)) {
      // Sphere through the origin: the image is the hyperplane <y,c> = 1/2.
      return GeneralizedSphere::hyperplane(c, 0.5);
    }
    return GeneralizedSphere::sphere(c / d, r / std::abs(d));
  }
  const Vec& n = s.normal();
  const double b = s.offset();
  if (std::abs(b) <= kThroughOriginTol) {
    // Plane through the origin is fixed.
    return GeneralizedSphere::hyperplane(n, 0.0);
  }
  // <n,x> = b maps to the sphere |y - n/(2b)| = 1/(2|b|), through the origin.
  return GeneralizedSphere::sphere(n / (2.0 * b), 1.0 / (2.0 * std::abs(b)));
}

GeneralizedSphere image_sphere_primitive(const ConformalPrimitive& p,
                                         const GeneralizedSphere& s) {
  return std::visit(
      [&s](const auto& prim) -> GeneralizedSphere {
        using T = std::decay_t<decltype(prim)>;
        if constexpr (std::is_same_v<T, Translation>) {
          if (s.is_sphere()) {
            return GeneralizedSphere::sphere(s.center() + prim.offset,
                                             s.radius());
          }
          return GeneralizedSphere::hyperplane(
              s.normal(), s.offset() + s.normal().dot(prim.offset));
        } else if constexpr (std::is_same_v<T, OrthogonalMap>) {
          if (s.is_sphere()) {
            return GeneralizedSphere::sphere(prim.matrix * s.center(),
                                             s.radius());
          }
          return GeneralizedSphere::hyperplane(prim.matrix * s.normal(),
                                               s.offset());
        } else if constexpr (std::is_same_v<T, Homothety>) {
          if (s.is_sphere()) {
            return GeneralizedSphere::sphere(prim.factor * s.center(),
                                             prim.factor * s.radius());
          }
          return GeneralizedSphere::hyperplane(s.normal(),
                                               prim.factor * s.offset());
        } else {
          return invert_sphere_at_origin(s);
        }
      },
      p);
}

}  // namespace

ConformalMap::ConformalMap(Eigen::Index dim,
                           std::vector<ConformalPrimitive> primitives)
    : dim_(dim), primitives_(std::move(primitives)) {
  if (dim_ < 1) {
    throw std::invalid_argument("ConformalMap: dimension must be >= 1");
  }
  for (const auto& p : primitives_) {
    const Eigen::Index pd = primitive_dimension(p);
    if (pd >= 0 && pd != dim_) {
      throw std::invalid_argument("ConformalMap: primitive dimension mismatch");
    }
    validate_primitive(p, dim_);
  }
}

ConformalMap ConformalMap::identity(Eigen::Index dim) {
  return ConformalMap(dim, {});
}

ExtendedPoint ConformalMap::operator()(const ExtendedPoint& x) const {
  if (x.dimension() != dim_) {
    throw std::invalid_argument("ConformalMap: point dimension mismatch");
  }
  ExtendedPoint y = x;
  for (auto it = primitives_.rbegin(); it != primitives_.rend(); ++it) {
    y = apply_primitive(*it, y);
  }
  return y;
}

ConformalMap ConformalMap::compose(const ConformalMap& other) const {
  if (other.dim_ != dim_) {
    throw std::invalid_argument("ConformalMap: compose dimension mismatch");
  }
  std::vector<ConformalPrimitive> prims = primitives_;
  prims.insert(prims.end(), other.primitives_.begin(), other.primitives_.end());
  return ConformalMap(dim_, std::move(prims));
}

ConformalMap ConformalMap::inverse() const {
  std::vector<ConformalPrimitive> prims;
  prims.reserve(primitives_.size());
  for (auto it = primitives_.rbegin(); it != primitives_.rend(); ++it) {
    prims.push_back(invert_primitive(*it));
  }
  return ConformalMap(dim_, std::move(prims));
}

ConformalMap ConformalMap::simplified() const {
  std::vector<ConformalPrimitive> out;
  auto is_trivial = [](const ConformalPrimitive& p) {
    if (const auto* t = std::get_if<Translation>(&p)) {
      return t->offset.isZero(0.0);
    }
    if (const auto* h = std::get_if<Homothety>(&p)) {
      return h->factor == 1.0;
    }
    return false;
  };
  for (const auto& p : primitives_) {
    if (is_trivial(p)) continue;
    if (!out.empty()) {
      if (auto* a = std::get_if<Translation>(&out.back())) {
        if (const auto* b = std::get_if<Translation>(&p)) {
          a->offset += b->offset;
          if (is_trivial(out.back())) out.pop_back();
          continue;
        }
      }
      if (auto* a = std::get_if<Homothety>(&out.back())) {
        if (const auto* b = std::get_if<Homothety>(&p)) {
          a->factor *= b->factor;
          if (is_trivial(out.back())) out.pop_back();
          continue;
        }
      }
    }
    out.push_back(p);
  }
  return ConformalMap(dim_, std::move(out));
}

ExtendedPoint apply(const ConformalMap& m, const ExtendedPoint& x) {
  return m(x);
}

GeneralizedSphere image_sphere(const ConformalMap& m,
                               const GeneralizedSphere& s) {
  if (s.dimension() != m.dimension()) {
    throw std::invalid_argument("image_sphere: dimension mismatch");
  }
  GeneralizedSphere out = s;
  const auto& prims = m.primitives();
  for (auto it = prims.rbegin(); it != prims.rend(); ++it) {
    out = image_sphere_primitive(*it, out);
  }
  return out;
}

ExtendedPoint region_witness(const Region& r, int skip) {
  const Eigen::Index n = r.dimension();
  int seen = 0;
  // Candidate k cycles through axis directions on both sides of the
  // reference point, far enough from the surface.
  for (int k = 0; k < 2 * static_cast<int>(n) + 2; ++k) {
    Vec dir = Vec::Zero(n);
    dir[(k / 2) % n] = (k % 2 == 0) ? 1.0 : -1.0;
    Vec candidate;
    if (r.surface.is_sphere()) {
      const Vec& c = r.surface.center();
      const double rad = r.surface.radius();
      candidate = (r.side == RegionSide::negative)
                      ? Vec(c + 0.5 * rad * dir)
                      : Vec(c + 2.0 * rad * dir);
    } else {
      const Vec& nrm = r.surface.normal();
      const double b = r.surface.offset();
      const double sgn = (r.side == RegionSide::negative) ? -1.0 : 1.0;
      candidate = b * nrm + sgn * (1.0 + 0.25 * k) * nrm;
    }
    if (!r.contains(ExtendedPoint(candidate))) continue;
    if (std::abs(r.surface.signed_eval(candidate)) < 1e-9) continue;
    if (seen++ == skip) return ExtendedPoint(candidate);
  }
  throw std::runtime_error("region_witness: no usable interior point found");
}

Region image_region(const ConformalMap& m, const Region& r) {
  if (r.dimension() != m.dimension()) {
    throw std::invalid_argument("image_region: dimension mismatch");
  }
  GeneralizedSphere img = image_sphere(m, r.surface);
  // Track the side with an interior witness; retry with later candidates if
  // the image lands on infinity or numerically on the image surface.
  for (int skip = 0; skip < 8; ++skip) {
    ExtendedPoint w = region_witness(r, skip);
    ExtendedPoint mw = m(w);
    if (mw.is_infinite()) {
      if (img.is_sphere()) {
        // Infinity is interior to the image, which is therefore the
        // outside of the image sphere.
        return Region{img, RegionSide::positive, r.closed};
      }
      continue;  // a half-space has no interior at infinity; pick another
    }
    const double v = img.signed_eval(mw.coords());
    if (v == 0.0) continue;
    return Region{img, v < 0.0 ? RegionSide::negative : RegionSide::positive,
                  r.closed};
  }
  throw std::runtime_error("image_region: could not resolve the image side");
}

}  // namespace apollon
