#include "core/series.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace zetalab::core {

namespace {

ValueWithError sum_alternating(const std::function<double(long)>& term,
                               double abs_tol) {
  std::vector<double> partial;
  double run = 0.0;
  double best = 0.0;
  double best_err = 1e300;
  double prev_abs = 1e300;
  int growth = 0;
  for (long n = 1; n <= 100000; ++n) {
    double u = term(n);
    run += u;
    partial.push_back(run);
    double au = std::fabs(u);
    if (au > prev_abs && au > 1e-12) {
      if (++growth >= 12) {
        throw NumericError("sum_accelerated: terms are growing, series "
                           "diverges");
      }
    } else {
      growth = 0;
    }
    prev_abs = au;
    if (au < abs_tol && n >= 4) {
      return {Complex(run, 0.0), au};
    }
    if (partial.size() >= 6) {
      size_t m = std::min<size_t>(partial.size(), 20);
      std::vector<double> row(partial.end() - m, partial.end());
      double prev_est = row.back();
      double prev_step = 1e300;
      while (row.size() > 1) {
        for (size_t i = 0; i + 1 < row.size(); ++i) {
          row[i] = 0.5 * (row[i] + row[i + 1]);
        }
        row.pop_back();
        double step = std::fabs(row.back() - prev_est);
        prev_est = row.back();
        if (step > prev_step) break;
        prev_step = step;
      }
      if (prev_step < best_err) {
        best_err = prev_step;
        best = prev_est;
      }
      if (best_err < abs_tol) break;
    }
  }
  return {Complex(best, 0.0), best_err};
}

ValueWithError sum_monotone(const std::function<double(long)>& term,
                            double abs_tol) {
  // Partial sums on the doubling schedule N_j = 32 * 2^j, then a
  // Richardson table for a tail expansion in powers of 1/N.
  const int levels = 10;
  std::vector<double> s(levels);
  double run = 0.0;
  long n = 1;
  long N = 32;
  double prev_term = 1e300;
  double first_level_term = 0.0;
  double last_term = 0.0;
  int growth = 0;
  for (int j = 0; j < levels; ++j) {
    for (; n <= N; ++n) {
      double u = term(n);
      if (u < 0.0) {
        throw DomainError("sum_accelerated: monotone kind needs "
                          "nonnegative terms");
      }
      if (u > prev_term && u > 1e-12) {
        if (++growth >= 12) {
          throw NumericError("sum_accelerated: terms are growing, series "
                             "diverges");
        }
      } else {
        growth = 0;
      }
      prev_term = u;
      run += u;
      last_term = u;
      if (n == 32) first_level_term = u;
    }
    s[j] = run;
    N *= 2;
  }
  if (last_term > 1e-12 && last_term >= 0.5 * first_level_term) {
    throw NumericError("sum_accelerated: terms show no decay, series "
                       "diverges");
  }
  // R[j][k]: eliminate 1/N^(k) step by step.
  std::vector<double> row = s;
  double est = row.back();
  double err = 1e300;
  for (int k = 1; k < levels; ++k) {
    double pk = std::pow(2.0, k);
    for (int j = levels - 1; j >= k; --j) {
      row[j] = (pk * row[j] - row[j - 1]) / (pk - 1.0);
    }
    double step = std::fabs(row.back() - est);
    est = row.back();
    if (step < err) err = step;
    if (err < abs_tol) break;
  }
  return {Complex(est, 0.0), std::max(err, 1e-15 * std::fabs(est))};
}

ValueWithError sum_fast_decay(const std::function<double(long)>& term,
                              double abs_tol) {
  double run = 0.0;
  double last = 0.0;
  int growth = 0;
  double prev_abs = 1e300;
  for (long n = 1; n <= 100000; ++n) {
    double u = term(n);
    double au = std::fabs(u);
    if (au > prev_abs && au > 1e-14) {
      if (++growth >= 12) {
        throw NumericError("sum_accelerated: terms are growing, series "
                           "diverges");
      }
    } else {
      growth = 0;
    }
    prev_abs = au;
    run += u;
    last = au;
    if (au < abs_tol * 1e-2 && n >= 3) break;
  }
  return {Complex(run, 0.0), 2.0 * last};
}

}  // namespace

ValueWithError sum_accelerated(const std::function<double(long)>& term,
                               SeriesKind kind, double abs_tol) {
  switch (kind) {
    case SeriesKind::alternating:
      return sum_alternating(term, abs_tol);
    case SeriesKind::monotone:
      return sum_monotone(term, abs_tol);
    case SeriesKind::fast_decay:
      return sum_fast_decay(term, abs_tol);
  }
  throw DomainError("sum_accelerated: unknown kind");
}

}  // namespace zetalab::core
