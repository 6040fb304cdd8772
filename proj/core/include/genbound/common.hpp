#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace genbound {

using Vec = std::vector<double>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Table limits from the dense-representation design: datasets are enumerated
// explicitly, joints are |W| x |Z|^n matrices.
inline constexpr std::size_t kMaxDatasetTuples = 1'000'000;
inline constexpr std::size_t kMaxJointEntries = 10'000'000;

// Probability vectors must sum to 1 within this; construction rescales when
// the drift is below kRenormDrift and rejects beyond it.
inline constexpr double kProbSumTol = 1e-12;
inline constexpr double kRenormDrift = 1e-9;

enum class ErrorKind {
  EnumerationLimit,
  IncompleteKernel,
  UndefinedConditional,
  BoundarySubgradient,
  DivergentSeries,
  SupportGuard,
  WindowViolation,
  InvalidArgument,
  Config,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Dense row-major matrix, the only shape this library needs.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  Vec data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, double fill = 0.0)
      : rows(r), cols(c), data(r * c, fill) {}

  double& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
  std::size_t size() const { return data.size(); }
};

inline double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double sum(const Vec& a) {
  double s = 0.0;
  for (double x : a) s += x;
  return s;
}

double log_sum_exp(const Vec& values);

// Validates a probability vector, rescaling small drift in place.
void normalize_probabilities(Vec& p, const std::string& context);

// Euclidean projection onto the probability simplex.
Vec project_to_simplex(const Vec& v);

std::size_t checked_pow(std::size_t base, std::size_t exp, std::size_t guard,
                        const std::string& context);

}  // namespace genbound
