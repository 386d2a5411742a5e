#include "dcr/error.hpp"
#include "dcr/vkdecomp.hpp"

namespace dcr::vkdecomp {

std::vector<std::uint32_t> base_p_digits(std::uint64_t n, std::uint32_t p) {
  if (p < 2) throw NonPrime("digit base must be at least 2");
  std::vector<std::uint32_t> digits;
  do {
    digits.push_back(static_cast<std::uint32_t>(n % p));
    n /= p;
  } while (n > 0);
  return digits;
}

std::set<std::uint64_t> digit_set_I(std::uint64_t n, std::uint32_t p) {
  std::vector<std::uint64_t> members{0};
  std::uint64_t place = 1;
  for (std::uint32_t d : base_p_digits(n, p)) {
    std::vector<std::uint64_t> next;
    next.reserve(members.size() * (d + 1));
    for (std::uint64_t m : members)
      for (std::uint32_t c = 0; c <= d; ++c) next.push_back(m + c * place);
    members = std::move(next);
    place *= p;
  }
  return {members.begin(), members.end()};
}

bool is_simple(int k, std::uint32_t p) {
  if (k < 0) throw IndexOutOfRange("negative degree");
  const auto s = digit_set_I(static_cast<std::uint64_t>(k), p);
  return s.size() == static_cast<std::size_t>(k) + 1;
}

}  // namespace dcr::vkdecomp
