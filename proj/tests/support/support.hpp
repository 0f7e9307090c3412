#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "cmtwist/cmtwist.hpp"

namespace support {

using namespace cmtwist;

inline std::string fixture(const std::string& name) { return std::string(CMTWIST_FIXTURES) + "/" + name; }

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture(name));
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Integer matrix of determinant ±1: a permutation followed by random
/// elementary shears with small multipliers.
template <Scalar K>
Matrix<K> random_unimodular(std::mt19937& rng, const K& proto, std::size_t n = 4) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  Matrix<K> M(n, n, proto);
  for (std::size_t i = 0; i < n; ++i) M(i, perm[i]) = one_like(proto);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> mult(-3, 3);
  for (int step = 0; step < 8; ++step) {
    std::size_t i = pick(rng), j = pick(rng);
    if (i == j) continue;
    K c = proto.from_int(mult(rng));
    for (std::size_t col = 0; col < n; ++col) M(i, col) = M(i, col) + c * M(j, col);
  }
  return M;
}

inline PrimeField gf(std::uint32_t p) { return PrimeField(1, p); }

} // namespace support
