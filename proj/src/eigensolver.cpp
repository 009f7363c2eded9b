// Copyright 2026 The mrucc Authors
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

#include "mrucc/eigensolver.hpp"

#include <lapacke.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace mrucc {

LowestEigenpair lowest_eigenpair(const Eigen::MatrixXd& symmetric) {
  const auto n = static_cast<lapack_int>(symmetric.rows());
  if (n == 0 || symmetric.cols() != symmetric.rows()) {
    throw std::invalid_argument("eigensolver needs a non-empty square matrix");
  }
  Eigen::MatrixXd work = symmetric;  // dsyevr destroys its input
  std::vector<double> values(static_cast<std::size_t>(n));
  Eigen::VectorXd vec(n);
  std::vector<lapack_int> support(2);
  lapack_int found = 0;
  const lapack_int info = LAPACKE_dsyevr(LAPACK_COL_MAJOR, 'V', 'I', 'L', n, work.data(), n,
                                         0.0, 0.0, 1, 1, 0.0, &found, values.data(),
                                         vec.data(), n, support.data());
  if (info != 0 || found != 1) {
    throw std::runtime_error("dsyevr failed with info " + std::to_string(info));
  }
  return {values[0], vec};
}

}  // namespace mrucc
