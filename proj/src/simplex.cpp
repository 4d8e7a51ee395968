// Copyright 2026 The Authors.
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

#include "bmi/simplex.hpp"

#include "bmi/errors.hpp"

namespace bmi {

SimplexResult solve_simplex(const DenseLp& lp) {
  const std::size_t n = lp.objective.size();
  const std::size_t m = lp.rows.size();
  if (lp.rhs.size() != m) throw PreconditionError("simplex: rhs size mismatch");
  const std::size_t width = n + m;

  // tableau[i] = [A | I | b]; the objective row holds reduced costs.
  std::vector<std::vector<Rational>> tab(m, std::vector<Rational>(width + 1));
  for (std::size_t i = 0; i < m; ++i) {
    if (lp.rows[i].size() != n) {
      throw PreconditionError("simplex: row " + std::to_string(i) +
                              " has wrong length");
    }
    if (sgn(lp.rhs[i]) < 0) {
      throw PreconditionError("simplex: negative right-hand side");
    }
    for (std::size_t j = 0; j < n; ++j) tab[i][j] = lp.rows[i][j];
    tab[i][n + i] = 1;
    tab[i][width] = lp.rhs[i];
  }
  std::vector<Rational> reduced(width + 1);
  for (std::size_t j = 0; j < n; ++j) reduced[j] = lp.objective[j];

  SimplexResult result;
  result.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) result.basis[i] = n + i;

  Rational ratio, best_ratio, factor;
  for (;;) {
    // Bland: lowest-index improving column.
    std::size_t enter = width;
    for (std::size_t j = 0; j < width; ++j) {
      if (sgn(reduced[j]) > 0) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;

    std::size_t leave = m;
    for (std::size_t i = 0; i < m; ++i) {
      if (sgn(tab[i][enter]) <= 0) continue;
      ratio = tab[i][width] / tab[i][enter];
      if (leave == m || ratio < best_ratio ||
          (ratio == best_ratio && result.basis[i] < result.basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m) {
      result.status = SimplexResult::Status::kUnbounded;
      return result;
    }

    std::vector<Rational>& prow = tab[leave];
    const Rational pivot = prow[enter];
    for (std::size_t j = 0; j <= width; ++j) {
      if (sgn(prow[j]) != 0) prow[j] /= pivot;
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || sgn(tab[i][enter]) == 0) continue;
      factor = tab[i][enter];
      for (std::size_t j = 0; j <= width; ++j) {
        if (sgn(prow[j]) != 0) tab[i][j] -= factor * prow[j];
      }
    }
    if (sgn(reduced[enter]) != 0) {
      factor = reduced[enter];
      for (std::size_t j = 0; j <= width; ++j) {
        if (sgn(prow[j]) != 0) reduced[j] -= factor * prow[j];
      }
    }
    result.basis[leave] = enter;
    ++result.pivots;
  }

  result.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (result.basis[i] < n) result.x[result.basis[i]] = tab[i][width];
  }
  result.objective = 0;
  for (std::size_t j = 0; j < n; ++j) {
    result.objective += lp.objective[j] * result.x[j];
  }
  return result;
}

}  // namespace bmi
