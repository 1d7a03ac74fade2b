#include "hlmult/types.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "hlmult/error.hpp"

namespace hlm {

TypeT::TypeT(std::vector<TypePair> pairs) : pairs_(std::move(pairs)) {
  if (pairs_.empty()) throw std::invalid_argument("a type needs at least one pair");
  for (const auto& p : pairs_) {
    if (p.degree < 1) throw std::invalid_argument("type degrees must be >= 1");
    if (p.partition.empty()) throw std::invalid_argument("type partitions must be nonempty");
    size_ += p.degree * p.partition.size();
  }
  std::sort(pairs_.begin(), pairs_.end(), std::greater<>());
}

bool TypeT::is_split() const {
  return std::all_of(pairs_.begin(), pairs_.end(), [](const TypePair& p) { return p.degree == 1; });
}

std::string TypeT::to_string() const {
  std::string s;
  for (const auto& p : pairs_) {
    if (!s.empty()) s += ",";
    s += std::to_string(p.degree) + ":" + p.partition.to_string();
  }
  return s;
}

MultiType::MultiType(std::vector<TypeT> types, int genus) : types_(std::move(types)), genus_(genus) {
  if (types_.empty()) throw std::invalid_argument("a multitype needs at least one type");
  if (genus_ < 0) throw std::invalid_argument("genus must be >= 0");
  for (const auto& t : types_) {
    if (t.size() != types_.front().size()) {
      throw SizeMismatch("types " + types_.front().to_string() + " and " + t.to_string() +
                         " have different sizes (" + std::to_string(types_.front().size()) + " vs " +
                         std::to_string(t.size()) + ")");
    }
  }
}

std::string MultiType::to_string() const {
  std::string s = "g=" + std::to_string(genus_) + ";";
  for (std::size_t i = 0; i < types_.size(); ++i) {
    s += (i == 0 ? " " : " ; ") + types_[i].to_string();
  }
  return s;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos;
  std::size_t base;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool at_end() const { return pos >= text.size(); }
  char peek() const { return at_end() ? '\0' : text[pos]; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, base + pos); }

  long integer(const char* what) {
    skip_ws();
    const std::size_t start = pos;
    long v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > 1000000) throw ParseError(std::string(what) + " too large", base + start);
      ++pos;
    }
    if (pos == start) throw ParseError(std::string("expected ") + what, base + start);
    return v;
  }
};

}  // namespace

TypeT parse_type(std::string_view text, std::size_t base_offset) {
  Cursor c{text, 0, base_offset};
  std::vector<TypePair> pairs;
  while (true) {
    c.skip_ws();
    const std::size_t pair_start = c.pos;
    const long d = c.integer("degree");
    if (d < 1) throw ParseError("degree must be >= 1", base_offset + pair_start);
    c.skip_ws();
    if (c.peek() != ':') c.fail("expected ':' after degree");
    ++c.pos;
    c.skip_ws();
    const std::size_t open = c.pos;
    const std::size_t close = text.find(']', open);
    if (close == std::string_view::npos) c.fail("unterminated partition");
    Partition p = parse_partition(text.substr(open, close + 1 - open), base_offset + open);
    if (p.empty()) throw ParseError("type partitions must be nonempty", base_offset + open);
    pairs.push_back({static_cast<int>(d), std::move(p)});
    c.pos = close + 1;
    c.skip_ws();
    if (c.at_end()) break;
    if (c.peek() != ',') c.fail("expected ',' between pairs");
    ++c.pos;
  }
  return TypeT(std::move(pairs));
}

MultiType parse_multitype(std::string_view text) {
  Cursor c{text, 0, 0};
  c.skip_ws();
  if (c.peek() != 'g') c.fail("expected 'g=<genus>'");
  ++c.pos;
  c.skip_ws();
  if (c.peek() != '=') c.fail("expected '=' after 'g'");
  ++c.pos;
  const long g = c.integer("genus");
  c.skip_ws();
  if (c.peek() != ';') c.fail("expected ';' after genus");
  ++c.pos;
  std::vector<TypeT> types;
  std::vector<std::size_t> starts;
  while (true) {
    const std::size_t end = std::min(text.find(';', c.pos), text.size());
    std::string_view chunk = text.substr(c.pos, end - c.pos);
    const bool blank = std::all_of(chunk.begin(), chunk.end(),
                                   [](char ch) { return std::isspace(static_cast<unsigned char>(ch)); });
    if (blank) c.fail("expected a type");
    starts.push_back(c.pos);
    types.push_back(parse_type(chunk, c.pos));
    if (end == text.size()) break;
    c.pos = end + 1;
  }
  for (std::size_t i = 1; i < types.size(); ++i) {
    if (types[i].size() != types[0].size()) {
      throw ParseError("type " + types[i].to_string() + " has size " + std::to_string(types[i].size()) +
                           " but the first type has size " + std::to_string(types[0].size()),
                       starts[i]);
    }
  }
  return MultiType(std::move(types), static_cast<int>(g));
}

// ---------------------------------------------------------------------------
// Type algebra

TypeT type_dual(const TypeT& omega) {
  std::vector<TypePair> pairs;
  for (const auto& p : omega.pairs()) pairs.push_back({p.degree, conjugate(p.partition)});
  return TypeT(std::move(pairs));
}

SymFunc type_symfunc(const TypeT& omega, Basis family) {
  SymFunc acc = SymFunc::element(Basis::power, Partition());
  for (const auto& p : omega.pairs()) {
    acc = multiply(acc, adams(p.degree, SymFunc::element(family, p.partition)));
  }
  return acc;
}

Partition omega_plus(const TypeT& omega) {
  Partition acc;
  for (const auto& p : omega.pairs()) acc = partition_sum(acc, partition_scale(p.degree, p.partition));
  return acc;
}

long twisted_lr(const TypeT& omega, const Partition& mu) {
  if (mu.size() != omega.size()) {
    throw SizeMismatch("twisted_lr: |" + mu.to_string() + "| != |" + omega.to_string() + "|");
  }
  // c = Σ_α ∏_i z_{α^i}^{-1} χ^{ω^i}_{α^i} · χ^μ_{∪_i d_i α^i}
  const auto& pairs = omega.pairs();
  mpq_class total = 0;
  std::function<void(std::size_t, const Partition&, mpq_class)> walk =
      [&](std::size_t i, const Partition& rho, mpq_class weight) {
        if (i == pairs.size()) {
          total += weight * sn_character(mu, rho);
          return;
        }
        for (const auto& alpha : partitions_of(pairs[i].partition.size())) {
          const long chi = sn_character(pairs[i].partition, alpha);
          if (chi == 0) continue;
          mpq_class w(chi, z_of(alpha));
          w.canonicalize();
          walk(i + 1, partition_union(rho, partition_scale(pairs[i].degree, alpha)), weight * w);
        }
      };
  walk(0, Partition(), mpq_class(1));
  if (total.get_den() != 1) throw std::logic_error("twisted_lr: non-integral coefficient");
  return total.get_num().get_si();
}

const std::vector<TypeT>& types_of_size(int n) {
  if (n < 1) throw std::invalid_argument("types_of_size: n must be >= 1");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<std::vector<TypeT>>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (slot) return *slot;
  std::vector<TypePair> candidates;
  for (int d = 1; d <= n; ++d) {
    for (int s = 1; d * s <= n; ++s) {
      for (const auto& p : partitions_of(s)) candidates.push_back({d, p});
    }
  }
  std::sort(candidates.begin(), candidates.end(), std::greater<>());
  auto out = std::make_unique<std::vector<TypeT>>();
  std::vector<TypePair> current;
  // Non-increasing sequences of candidates with Σ d|λ| = n.
  std::function<void(std::size_t, int)> walk = [&](std::size_t from, int remaining) {
    if (remaining == 0) {
      out->emplace_back(current);
      return;
    }
    for (std::size_t i = from; i < candidates.size(); ++i) {
      const int w = candidates[i].degree * candidates[i].partition.size();
      if (w > remaining) continue;
      current.push_back(candidates[i]);
      walk(i, remaining - w);
      current.pop_back();
    }
  };
  walk(0, n);
  std::sort(out->begin(), out->end());
  slot = std::move(out);
  return *slot;
}

std::vector<MultiType> enumerate_multitypes(int n, int k, int g) {
  const auto& all = types_of_size(n);
  std::vector<MultiType> out;
  std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
  while (true) {
    std::vector<TypeT> types;
    for (std::size_t i : idx) types.push_back(all[i]);
    out.emplace_back(std::move(types), g);
    // Next non-decreasing index tuple.
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] + 1 == all.size()) --pos;
    if (pos < 0) break;
    const std::size_t v = idx[static_cast<std::size_t>(pos)] + 1;
    for (int j = pos; j < k; ++j) idx[static_cast<std::size_t>(j)] = v;
  }
  return out;
}

}  // namespace hlm
