#include "genbound/common.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace genbound {

double log_sum_exp(const Vec& values) {
  double m = -kInf;
  for (double v : values) m = std::max(m, v);
  if (!std::isfinite(m)) return m;
  double s = 0.0;
  for (double v : values) s += std::exp(v - m);
  return m + std::log(s);
}

void normalize_probabilities(Vec& p, const std::string& context) {
  double total = 0.0;
  for (double x : p) {
    if (!(x >= 0.0)) {
      throw Error(ErrorKind::InvalidArgument,
                  context + ": negative probability " + std::to_string(x));
    }
    total += x;
  }
  double drift = std::abs(total - 1.0);
  if (drift <= kProbSumTol) return;
  if (drift < kRenormDrift) {
    for (double& x : p) x /= total;
    return;
  }
  throw Error(ErrorKind::InvalidArgument,
              context + ": probabilities sum to " + std::to_string(total));
}

Vec project_to_simplex(const Vec& v) {
  Vec u = v;
  std::sort(u.begin(), u.end(), std::greater<double>());
  double css = 0.0, theta = 0.0;
  std::size_t rho = 0;
  double running = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    running += u[i];
    double t = (running - 1.0) / static_cast<double>(i + 1);
    if (u[i] - t > 0.0) {
      rho = i + 1;
      css = running;
    }
  }
  theta = (css - 1.0) / static_cast<double>(rho);
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = std::max(v[i] - theta, 0.0);
  return out;
}

std::size_t checked_pow(std::size_t base, std::size_t exp, std::size_t guard,
                        const std::string& context) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && r > guard / base) {
      throw Error(ErrorKind::EnumerationLimit,
                  context + ": " + std::to_string(base) + "^" + std::to_string(exp) +
                      " exceeds the enumeration guard of " + std::to_string(guard));
    }
    r *= base;
  }
  if (r > guard) {
    throw Error(ErrorKind::EnumerationLimit,
                context + ": size " + std::to_string(r) +
                    " exceeds the enumeration guard of " + std::to_string(guard));
  }
  return r;
}

}  // namespace genbound
