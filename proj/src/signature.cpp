#include "ccr/signature.hpp"

#include <stdexcept>

namespace ccr {

Signature::Signature(std::initializer_list<int> signs) {
  init(std::span<const int>(signs.begin(), signs.size()));
}

Signature::Signature(std::span<const int> signs) { init(signs); }

void Signature::init(std::span<const int> signs) {
  if (signs.empty() || signs.size() > static_cast<std::size_t>(kMaxGenerators))
    throw std::invalid_argument("signature must have between 1 and 16 generators");
  n_ = static_cast<int>(signs.size());
  for (int i = 0; i < n_; ++i) {
    if (signs[i] != 1 && signs[i] != -1)
      throw std::invalid_argument("signature signs must be +1 or -1");
    signs_[i] = static_cast<std::int8_t>(signs[i]);
  }
}

Signature Signature::parse(std::string_view text) {
  std::array<int, kMaxGenerators> signs{};
  int n = 0;
  for (char c : text) {
    if (c != '+' && c != '-')
      throw std::invalid_argument("signature string may contain only '+' and '-'");
    if (n >= kMaxGenerators)
      throw std::invalid_argument("signature must have between 1 and 16 generators");
    signs[n++] = (c == '+') ? 1 : -1;
  }
  if (n == 0)
    throw std::invalid_argument("signature string is empty");
  return Signature(std::span<const int>(signs.data(), static_cast<std::size_t>(n)));
}

int Signature::sign(int slot) const {
  if (slot < 0 || slot >= n_)
    throw std::out_of_range("generator slot out of range");
  return signs_[slot];
}

std::string Signature::to_string() const {
  std::string out;
  out.reserve(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) out.push_back(signs_[i] > 0 ? '+' : '-');
  return out;
}

}  // namespace ccr
