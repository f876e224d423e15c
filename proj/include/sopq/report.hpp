#pragma once

#include <string>
#include <vector>

namespace sopq {

/// One checked identity: pass/fail plus the residual in canonical text form.
struct CheckItem {
  std::string identity;
  std::string detail;
  bool pass = true;
  std::string residual;
};

struct CheckReport {
  std::vector<CheckItem> items;

  bool ok() const {
    for (const auto& it : items) {
      if (!it.pass) return false;
    }
    return true;
  }
  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& it : items) n += it.pass ? 0 : 1;
    return n;
  }
  void add(std::string identity, std::string detail, bool pass, std::string residual = {}) {
    items.push_back({std::move(identity), std::move(detail), pass, std::move(residual)});
  }
  void merge(const CheckReport& o) { items.insert(items.end(), o.items.begin(), o.items.end()); }
};

}  // namespace sopq
