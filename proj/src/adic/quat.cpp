#include "adic/quat.hpp"

#include <cmath>

#include "core/rng.hpp"

namespace zetalab::adic {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double Quaternion::norm() const { return std::sqrt(norm2()); }

Quaternion quat_mul(const Quaternion& a, const Quaternion& b) {
  return Quaternion{
      a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
      a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
      a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
      a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
  };
}

Quaternion quat_conj(const Quaternion& h) {
  return Quaternion{h.w, -h.x, -h.y, -h.z};
}

Quaternion quat_inverse(const Quaternion& h) {
  double n2 = h.norm2();
  if (!(n2 > 0.0)) {
    throw DomainError("quat_inverse: zero quaternion");
  }
  return Quaternion{h.w / n2, -h.x / n2, -h.y / n2, -h.z / n2};
}

double haar_module_quat(const Quaternion& h) {
  double n2 = h.norm2();
  return n2 * n2;
}

double left_regular_det_check(const Quaternion& h) {
  double m[4][4] = {
      {h.w, -h.x, -h.y, -h.z},
      {h.x, h.w, -h.z, h.y},
      {h.y, h.z, h.w, -h.x},
      {h.z, -h.y, h.x, h.w},
  };
  double det = 1.0;
  for (int col = 0; col < 4; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 4; ++r) {
      if (std::fabs(m[r][col]) > std::fabs(m[pivot][col])) pivot = r;
    }
    if (m[pivot][col] == 0.0) {
      det = 0.0;
      break;
    }
    if (pivot != col) {
      for (int c = 0; c < 4; ++c) std::swap(m[pivot][c], m[col][c]);
      det = -det;
    }
    det *= m[col][col];
    for (int r = col + 1; r < 4; ++r) {
      double factor = m[r][col] / m[col][col];
      for (int c = col; c < 4; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  double expected = haar_module_quat(h);
  return std::fabs(det - expected) / std::max(1.0, std::fabs(expected));
}

double haar_volume_x(double M, double N) {
  return 4.0 * kPi * kPi * std::log(N / M);
}

McInvarianceReport inversion_invariance_mc(
    const std::function<double(const Quaternion&)>& f, double M, double N,
    long samples, std::uint64_t seed) {
  if (!(M > 1.0) || !(N > M) || samples < 2) {
    throw DomainError("inversion_invariance_mc: needs N > M > 1 and at "
                      "least two samples");
  }
  const double vol_outer = 0.5 * kPi * kPi *
      (std::pow(N, 4.0) - std::pow(M, 4.0));
  const double vol_inner = 0.5 * kPi * kPi *
      (std::pow(1.0 / M, 4.0) - std::pow(1.0 / N, 4.0));
  const double vol_total = vol_outer + vol_inner;
  const double outer_share = vol_outer / vol_total;

  core::CounterRng rng(seed);
  double sum_d = 0.0, sum_d2 = 0.0;
  double sum_i = 0.0, sum_i2 = 0.0;
  double sum_diff = 0.0, sum_diff2 = 0.0;

  for (long i = 0; i < samples; ++i) {
    std::uint64_t base = static_cast<std::uint64_t>(i) * 8;
    double pick = rng.uniform(base);
    double lo = M, hi = N;
    if (pick >= outer_share) {
      lo = 1.0 / N;
      hi = 1.0 / M;
    }
    double u = rng.uniform(base + 1);
    double r = std::pow(std::pow(lo, 4.0) +
                            u * (std::pow(hi, 4.0) - std::pow(lo, 4.0)),
                        0.25);
    // Two Box-Muller pairs give a uniform direction on S^3.
    double u1 = std::max(rng.uniform(base + 2), 1e-300);
    double u2 = rng.uniform(base + 3);
    double u3 = std::max(rng.uniform(base + 4), 1e-300);
    double u4 = rng.uniform(base + 5);
    double r1 = std::sqrt(-2.0 * std::log(u1));
    double r2 = std::sqrt(-2.0 * std::log(u3));
    Quaternion g{r1 * std::cos(2.0 * kPi * u2),
                 r1 * std::sin(2.0 * kPi * u2),
                 r2 * std::cos(2.0 * kPi * u4),
                 r2 * std::sin(2.0 * kPi * u4)};
    double gn = g.norm();
    if (!(gn > 0.0)) {
      g = Quaternion{1.0, 0.0, 0.0, 0.0};
      gn = 1.0;
    }
    Quaternion h{r * g.w / gn, r * g.x / gn, r * g.y / gn, r * g.z / gn};

    double weight = 1.0 / haar_module_quat(h);
    double direct = f(h) * weight;
    double inverted = f(quat_inverse(h)) * weight;
    sum_d += direct;
    sum_d2 += direct * direct;
    sum_i += inverted;
    sum_i2 += inverted * inverted;
    double d = direct - inverted;
    sum_diff += d;
    sum_diff2 += d * d;
  }

  const double n = static_cast<double>(samples);
  auto finish = [&](double s, double s2, double* mean, double* se) {
    *mean = s / n;
    double var = std::max(0.0, s2 / n - (*mean) * (*mean));
    *se = std::sqrt(var / n);
  };
  McInvarianceReport rep;
  rep.samples = samples;
  double mean_d, se_d, mean_i, se_i, mean_diff, se_diff;
  finish(sum_d, sum_d2, &mean_d, &se_d);
  finish(sum_i, sum_i2, &mean_i, &se_i);
  finish(sum_diff, sum_diff2, &mean_diff, &se_diff);
  rep.side_direct = vol_total * mean_d;
  rep.side_inverted = vol_total * mean_i;
  rep.se_direct = vol_total * se_d;
  rep.se_inverted = vol_total * se_i;
  rep.diff = vol_total * std::fabs(mean_diff);
  rep.se_diff = vol_total * se_diff;
  rep.sigma_ratio = rep.se_diff > 0.0 ? rep.diff / rep.se_diff : 0.0;
  rep.within_3_sigma = rep.diff <= 3.0 * rep.se_diff + 1e-12;
  return rep;
}

}  // namespace zetalab::adic
