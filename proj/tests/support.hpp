#pragma once

#include <string>
#include <vector>

#include "biortho/cli.hpp"
#include "biortho/io.hpp"
#include "biortho/params.hpp"

namespace testing {

using biortho::Complex;
using biortho::Matrix;

inline Matrix scalar(Complex x) { return Matrix::Constant(1, 1, x); }

inline Matrix diag(std::initializer_list<Complex> xs) {
  Matrix m = Matrix::Zero(xs.size(), xs.size());
  int i = 0;
  for (Complex x : xs) m(i, i) = x, ++i;
  return m;
}

/// V diag V^{-1} with the corpus V.
inline Matrix conjugated(std::initializer_list<Complex> xs) {
  Matrix v(2, 2);
  v << 1.0, 0.4, -0.3, 1.1;
  return v * diag(xs) * v.inverse();
}

struct Fixture {
  std::string path;
  biortho::ParamSet params;
};

inline std::vector<Fixture> corpus() {
  std::vector<Fixture> out;
  for (const auto& f : biortho::cli::fixture_files()) out.push_back({f, biortho::io::load_params(f)});
  return out;
}

}  // namespace testing
