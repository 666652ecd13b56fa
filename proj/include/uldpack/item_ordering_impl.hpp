#pragma once

#include <algorithm>
#include <cmath>

namespace uldpack {

template <typename T>
std::vector<T> randomize(const std::vector<T>& sorted, double rho, const UniformSource& uniform) {
  std::vector<T> rest = sorted;
  std::vector<T> out;
  out.reserve(sorted.size());
  while (!rest.empty()) {
    const double y = uniform();
    const double r = static_cast<double>(rest.size());
    long long pos = static_cast<long long>(std::ceil(std::pow(y, 1.0 / rho) * r));
    pos = std::clamp<long long>(pos, 1, static_cast<long long>(rest.size()));
    out.push_back(rest[static_cast<std::size_t>(pos - 1)]);
    rest.erase(rest.begin() + (pos - 1));
  }
  return out;
}

}  // namespace uldpack
