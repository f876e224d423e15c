#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sopq {

/// Generator families. The enumerator order is the global generator order:
/// a1..aK, b1..bN, q1..qN, p1..pN, u1..uK.
enum class GenKind : std::uint8_t { a = 0, b = 1, q = 2, p = 3, u = 4 };

/// Packed (kind, 1-based index); numeric order equals the generator order.
using GenId = std::uint16_t;

constexpr int kMaxGenIndex = 255;

GenId make_gen(GenKind kind, int index);
inline GenId gen_a(int i) { return make_gen(GenKind::a, i); }
inline GenId gen_b(int i) { return make_gen(GenKind::b, i); }
inline GenId gen_q(int i) { return make_gen(GenKind::q, i); }
inline GenId gen_p(int i) { return make_gen(GenKind::p, i); }
inline GenId gen_u(int i) { return make_gen(GenKind::u, i); }

constexpr GenKind gen_kind(GenId g) { return static_cast<GenKind>(g >> 8); }
constexpr int gen_index(GenId g) { return g & 0xff; }

std::string gen_name(GenId g);
std::optional<GenId> parse_gen_name(std::string_view name);

/// The set of generators a polynomial may mention. Universes are interned, so
/// two universes with equal generator lists share one object and compatibility
/// is a pointer comparison.
class Universe {
 public:
  static std::shared_ptr<const Universe> make(std::vector<GenId> gens);

  /// (a1..a_{num_a}, b1..b_{num_b}).
  static std::shared_ptr<const Universe> phase(int num_a, int num_b);
  /// (q1..qN, p1..pN, u1..u_{num_u}).
  static std::shared_ptr<const Universe> canonical(int n, int num_u);

  std::span<const GenId> generators() const { return gens_; }
  bool contains(GenId g) const;
  std::string describe() const;

  explicit Universe(std::vector<GenId> gens) : gens_(std::move(gens)) {}

 private:
  std::vector<GenId> gens_;
};

using UniverseRef = std::shared_ptr<const Universe>;

}  // namespace sopq
