#include "liefix/cartan_type.hpp"

#include <algorithm>
#include <charconv>

#include "liefix/errors.hpp"

namespace liefix {

bool SimpleType::valid(Family family, int rank)
{
  switch (family) {
    case Family::A: return rank >= 1;
    case Family::B:
    case Family::C: return rank >= 2;
    case Family::D: return rank >= 3;
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
  }
  return false;
}

SimpleType SimpleType::make(Family family, int rank)
{
  if (!valid(family, rank))
    throw InvalidGroup("invalid rank " + std::to_string(rank) + " for family " +
                       std::string(1, static_cast<char>(family)));
  return SimpleType{family, rank};
}

int SimpleType::num_roots() const
{
  const int n = rank;
  switch (family) {
    case Family::A: return n * (n + 1);
    case Family::B:
    case Family::C: return 2 * n * n;
    case Family::D: return 2 * n * (n - 1);
    case Family::E: return n == 6 ? 72 : n == 7 ? 126 : 240;
    case Family::F: return 48;
    case Family::G: return 12;
  }
  return 0;
}

std::uint64_t SimpleType::weyl_order() const
{
  std::vector<std::uint64_t> degrees;
  const int n = rank;
  switch (family) {
    case Family::A:
      for (int i = 2; i <= n + 1; ++i) degrees.push_back(i);
      break;
    case Family::B:
    case Family::C:
      for (int i = 1; i <= n; ++i) degrees.push_back(2 * i);
      break;
    case Family::D:
      for (int i = 1; i < n; ++i) degrees.push_back(2 * i);
      degrees.push_back(n);
      break;
    case Family::E:
      if (n == 6) degrees = {2, 5, 6, 8, 9, 12};
      else if (n == 7) degrees = {2, 6, 8, 10, 12, 14, 18};
      else degrees = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case Family::F: degrees = {2, 6, 8, 12}; break;
    case Family::G: degrees = {2, 6}; break;
  }
  std::uint64_t order = 1;
  for (auto d : degrees) order *= d;
  return order;
}

std::string SimpleType::name() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }

SimpleType parse_simple_type(std::string_view text)
{
  if (text.size() < 2) throw InvalidGroup("cannot parse Cartan type '" + std::string(text) + "'");
  char f = text.front();
  if (f >= 'a' && f <= 'z') f = static_cast<char>(f - 'a' + 'A');
  if (f < 'A' || f > 'G')
    throw InvalidGroup("unknown family '" + std::string(1, text.front()) + "' (valid families: A B C D E F G)");
  int rank = 0;
  const auto digits = text.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (ec != std::errc() || ptr != digits.data() + digits.size())
    throw InvalidGroup("cannot parse rank in '" + std::string(text) + "'");
  return SimpleType::make(static_cast<Family>(f), rank);
}

CartanType::CartanType(std::vector<SimpleType> factors) : factors_(std::move(factors))
{
  std::sort(factors_.begin(), factors_.end(), [](const SimpleType& a, const SimpleType& b) {
    if (a.rank != b.rank) return a.rank > b.rank;
    return a.family < b.family;
  });
}

int CartanType::rank() const
{
  int r = 0;
  for (const auto& f : factors_) r += f.rank;
  return r;
}

int CartanType::num_roots() const
{
  int r = 0;
  for (const auto& f : factors_) r += f.num_roots();
  return r;
}

CartanType CartanType::canonical() const
{
  std::vector<SimpleType> out;
  for (auto f : factors_) {
    if (f.family == Family::C && f.rank == 2) f.family = Family::B;
    if (f.family == Family::D && f.rank == 3) f.family = Family::A;
    out.push_back(f);
  }
  return CartanType(std::move(out));
}

std::string CartanType::name() const
{
  if (factors_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += "+";
    s += factors_[i].name();
  }
  return s;
}

CartanType CartanType::parse(std::string_view text)
{
  if (text == "0" || text.empty()) return CartanType();
  std::vector<SimpleType> out;
  while (!text.empty()) {
    const auto plus = text.find('+');
    out.push_back(parse_simple_type(text.substr(0, plus)));
    if (plus == std::string_view::npos) break;
    text.remove_prefix(plus + 1);
  }
  return CartanType(std::move(out));
}

}  // namespace liefix
