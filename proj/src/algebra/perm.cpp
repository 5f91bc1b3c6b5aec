#include "qgm/algebra/perm.hpp"

#include <numeric>

#include "qgm/error.hpp"

namespace qgm {

Perm::Perm(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto v : images_) {
    if (v >= images_.size() || seen[v]) {
      throw Error(Errc::InvalidArgument, "images do not form a permutation");
    }
    seen[v] = true;
  }
}

Perm Perm::identity(std::size_t degree) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  Perm p;
  p.images_ = std::move(images);
  return p;
}

Perm Perm::from_one_based(const std::vector<std::uint32_t>& images) {
  std::vector<std::uint32_t> zero(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i] == 0) throw Error(Errc::InvalidArgument, "1-based image 0");
    zero[i] = images[i] - 1;
  }
  return Perm(std::move(zero));
}

Perm Perm::from_cycles(std::size_t degree, const std::vector<std::vector<std::uint32_t>>& cycles) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      auto from = cycle[k];
      auto to = cycle[(k + 1) % cycle.size()];
      if (from == 0 || to == 0 || from > degree || to > degree) {
        throw Error(Errc::InvalidArgument, "cycle point out of range");
      }
      images[from - 1] = to - 1;
    }
  }
  return Perm(std::move(images));
}

std::vector<std::uint32_t> Perm::one_based() const {
  std::vector<std::uint32_t> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = images_[i] + 1;
  return out;
}

Perm Perm::inverse() const {
  std::vector<std::uint32_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<std::uint32_t>(i);
  Perm p;
  p.images_ = std::move(inv);
  return p;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::size_t Perm::order() const {
  std::size_t result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::size_t Perm::fixed_point_count() const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) n += images_[i] == i;
  return n;
}

std::string Perm::to_string() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += '(';
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) throw Error(Errc::DegreeMismatch, "composing permutations of different degree");
  Perm p;
  p.images_.resize(a.degree());
  for (std::size_t i = 0; i < a.degree(); ++i) p.images_[i] = a.images_[b.images_[i]];
  return p;
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto v : p.images()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace qgm
