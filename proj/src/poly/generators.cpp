#include "sopq/poly/generators.hpp"

#include "sopq/poly/errors.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>

namespace sopq {

GenId make_gen(GenKind kind, int index) {
  if (index < 1 || index > kMaxGenIndex) {
    throw StructuralError("generator index out of range: " + std::to_string(index));
  }
  return static_cast<GenId>((static_cast<unsigned>(kind) << 8) | static_cast<unsigned>(index));
}

std::string gen_name(GenId g) {
  static constexpr char kLetters[] = {'a', 'b', 'q', 'p', 'u'};
  return kLetters[static_cast<unsigned>(gen_kind(g))] + std::to_string(gen_index(g));
}

std::optional<GenId> parse_gen_name(std::string_view name) {
  if (name.size() < 2) return std::nullopt;
  GenKind kind;
  switch (name.front()) {
    case 'a': kind = GenKind::a; break;
    case 'b': kind = GenKind::b; break;
    case 'q': kind = GenKind::q; break;
    case 'p': kind = GenKind::p; break;
    case 'u': kind = GenKind::u; break;
    default: return std::nullopt;
  }
  int index = 0;
  auto digits = name.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) return std::nullopt;
  if (index < 1 || index > kMaxGenIndex) return std::nullopt;
  return make_gen(kind, index);
}

std::shared_ptr<const Universe> Universe::make(std::vector<GenId> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  static std::mutex mutex;
  static std::map<std::vector<GenId>, std::shared_ptr<const Universe>> interned;
  std::lock_guard lock(mutex);
  auto it = interned.find(gens);
  if (it != interned.end()) return it->second;
  auto u = std::make_shared<const Universe>(gens);
  interned.emplace(std::move(gens), u);
  return u;
}

std::shared_ptr<const Universe> Universe::phase(int num_a, int num_b) {
  std::vector<GenId> gens;
  for (int i = 1; i <= num_a; ++i) gens.push_back(gen_a(i));
  for (int i = 1; i <= num_b; ++i) gens.push_back(gen_b(i));
  return make(std::move(gens));
}

std::shared_ptr<const Universe> Universe::canonical(int n, int num_u) {
  std::vector<GenId> gens;
  for (int i = 1; i <= n; ++i) gens.push_back(gen_q(i));
  for (int i = 1; i <= n; ++i) gens.push_back(gen_p(i));
  for (int i = 1; i <= num_u; ++i) gens.push_back(gen_u(i));
  return make(std::move(gens));
}

bool Universe::contains(GenId g) const { return std::binary_search(gens_.begin(), gens_.end(), g); }

std::string Universe::describe() const {
  std::string s = "{";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ",";
    s += gen_name(gens_[i]);
  }
  return s + "}";
}

}  // namespace sopq
