// Copyright 2026 The qsi Authors
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

#include "qsi/encoding.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace qsi {

namespace {

// Order cap for the explicit doubled-tensor distinguishability check; the
// controlled encoding then has dimension 2 * order^2 = 32 at the cap.
constexpr int kTensorCheckMaxOrder = 4;

// Comparison slack for the dense check. Distinct doubled tensors differ by
// at least 2^-(2m) with m <= 5 qubits, i.e. ~1e-3, far above this.
constexpr double kDenseEps = 1e-9;

void check_same_order(const PhaseDiagonal& a, const PhaseDiagonal& b) {
  if (a.order() != b.order()) {
    throw std::invalid_argument("phase diagonals have different orders");
  }
}

// Dense controlled encoding H^(x)m (I (+) D) H^(x)m, m = 2k + 1 qubits.
// All entries are real: hat[r][s] = 2^-m * sum_x (-1)^(pc(r&x) + pc(x&s)) c_x.
std::vector<double> controlled_encoding(const PhaseDiagonal& d) {
  const size_t half = d.length();
  const size_t dim = 2 * half;
  std::vector<double> hat(dim * dim, 0.0);
  const double scale = 1.0 / static_cast<double>(dim);
  for (size_t r = 0; r < dim; ++r) {
    for (size_t s = 0; s < dim; ++s) {
      double acc = 0.0;
      for (size_t x = 0; x < dim; ++x) {
        const int par = std::popcount(r & x) + std::popcount(x & s);
        double c = (x >= half) ? static_cast<double>(d.sign(x - half)) : 1.0;
        acc += (par & 1) ? -c : c;
      }
      hat[r * dim + s] = acc * scale;
    }
  }
  return hat;
}

// conj(U) (x) U for a real matrix U of dimension dim.
std::vector<double> doubled(const std::vector<double>& u, size_t dim) {
  std::vector<double> out(dim * dim * dim * dim);
  for (size_t r1 = 0; r1 < dim; ++r1)
    for (size_t r2 = 0; r2 < dim; ++r2)
      for (size_t s1 = 0; s1 < dim; ++s1)
        for (size_t s2 = 0; s2 < dim; ++s2)
          out[((r1 * dim + r2) * dim + s1) * dim + s2] =
              u[r1 * dim + s1] * u[r2 * dim + s2];
  return out;
}

}  // namespace

PhaseDiagonal::PhaseDiagonal(int order) : order_(order) {
  if (order < 1 || order > kMaxOrder ||
      !std::has_single_bit(static_cast<unsigned>(order))) {
    throw std::invalid_argument("phase diagonal order must be a power of two");
  }
  bits_.assign((length() + 63) / 64, 0);
}

int PhaseDiagonal::num_qubits() const {
  return 2 * std::countr_zero(static_cast<unsigned>(order_));
}

void PhaseDiagonal::set_negative(size_t flat, bool value) {
  if (flat >= length()) throw std::out_of_range("diagonal index out of range");
  const uint64_t mask = uint64_t{1} << (flat & 63);
  if (value) {
    bits_[flat >> 6] |= mask;
  } else {
    bits_[flat >> 6] &= ~mask;
  }
}

bool PhaseDiagonal::is_identity() const {
  for (uint64_t w : bits_) {
    if (w != 0) return false;
  }
  return true;
}

PhaseDiagonal phase_diagonal(const AdjacencyMatrix& a) {
  PhaseDiagonal d(a.order());
  for (int i = 0; i < a.order(); ++i) {
    for (int j = 0; j < a.order(); ++j) {
      if (a.at(i, j)) d.set_negative(static_cast<size_t>(i) * a.order() + j, true);
    }
  }
  return d;
}

PhaseDiagonal compose(const PhaseDiagonal& a, const PhaseDiagonal& b) {
  check_same_order(a, b);
  PhaseDiagonal out = a;
  for (size_t w = 0; w < out.words().size(); ++w) out.words()[w] ^= b.words()[w];
  return out;
}

PhaseDiagonal extend_pattern(const PhaseDiagonal& pattern, int target_order) {
  if (target_order < pattern.order()) {
    throw std::invalid_argument("extension target smaller than pattern order");
  }
  PhaseDiagonal out(target_order);
  const int nb = pattern.order();
  for (int i = 0; i < nb; ++i) {
    for (int j = 0; j < nb; ++j) {
      const size_t src = static_cast<size_t>(i) * nb + j;
      if (pattern.negative(src)) {
        out.set_negative(static_cast<size_t>(i) * target_order + j, true);
      }
    }
  }
  return out;
}

bool distinguishable(const PhaseDiagonal& a, const PhaseDiagonal& b) {
  check_same_order(a, b);
  if (a.order() <= kTensorCheckMaxOrder) {
    const size_t dim = 2 * a.length();
    const auto da = doubled(controlled_encoding(a), dim);
    const auto db = doubled(controlled_encoding(b), dim);
    for (size_t i = 0; i < da.size(); ++i) {
      if (std::abs(da[i] - db[i]) > kDenseEps) return true;
    }
    return false;
  }
  return !(a == b);
}

std::vector<int> to_sign_vector(const PhaseDiagonal& d) {
  std::vector<int> out(d.length());
  for (size_t i = 0; i < d.length(); ++i) out[i] = d.sign(i);
  return out;
}

}  // namespace qsi
