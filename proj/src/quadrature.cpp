// Copyright 2026 The pvarlab Authors
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


#include "pvarlab/quadrature.hpp"

#include <cmath>

#include "pvarlab/error.hpp"

namespace pvarlab {

namespace {

struct Panel {
  double a, b, fa, fm, fb, whole;
};

double simpson(double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

void refine(const std::function<double(double)>& f, const Panel& p, double tol, int depth,
            QuadratureResult& out) {
  const double m = 0.5 * (p.a + p.b);
  const double lm = 0.5 * (p.a + m);
  const double rm = 0.5 * (m + p.b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(p.a, m, p.fa, flm, p.fm);
  const double right = simpson(m, p.b, p.fm, frm, p.fb);
  const double diff = left + right - p.whole;
  if (depth <= 0 || std::abs(diff) <= 15.0 * tol) {
    if (depth <= 0 && std::abs(diff) > 15.0 * tol) out.converged = false;
    out.value += left + right + diff / 15.0;
    out.error_estimate += std::abs(diff) / 15.0;
    return;
  }
  refine(f, {p.a, m, p.fa, flm, p.fm, left}, 0.5 * tol, depth - 1, out);
  refine(f, {m, p.b, p.fm, frm, p.fb, right}, 0.5 * tol, depth - 1, out);
}

}  // namespace

QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                                  double abs_tol, int pieces, int max_depth) {
  require(std::isfinite(a) && std::isfinite(b) && a <= b, ErrorCode::InvalidArgument,
          "quadrature: need finite a <= b");
  require(abs_tol > 0.0 && pieces >= 1, ErrorCode::InvalidArgument,
          "quadrature: tolerance must be positive and pieces >= 1");
  QuadratureResult out;
  if (a == b) return out;
  const double h = (b - a) / pieces;
  const double tol = abs_tol / pieces;
  double fa = f(a);
  for (int i = 0; i < pieces; ++i) {
    const double x0 = a + h * i;
    const double x1 = i + 1 == pieces ? b : a + h * (i + 1);
    const double fb = f(x1);
    const double fm = f(0.5 * (x0 + x1));
    refine(f, {x0, x1, fa, fm, fb, simpson(x0, x1, fa, fm, fb)}, tol, max_depth, out);
    fa = fb;
  }
  return out;
}

}  // namespace pvarlab
