#include "hlmult/partition.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "hlmult/error.hpp"

namespace hlm {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

std::vector<int> Partition::multiplicities() const {
  std::vector<int> m(static_cast<std::size_t>(part(0)) + 1, 0);
  for (int p : parts_) ++m[static_cast<std::size_t>(p)];
  return m;
}

std::string Partition::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + "]";
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> c(static_cast<std::size_t>(lambda.part(0)), 0);
  for (int p : lambda.parts()) {
    for (int j = 0; j < p; ++j) ++c[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(c));
}

Partition partition_sum(const Partition& lambda, const Partition& mu) {
  const int len = std::max(lambda.length(), mu.length());
  std::vector<int> s(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) s[static_cast<std::size_t>(i)] = lambda.part(i) + mu.part(i);
  return Partition(std::move(s));
}

Partition partition_union(const Partition& lambda, const Partition& mu) {
  std::vector<int> u;
  u.reserve(static_cast<std::size_t>(lambda.length() + mu.length()));
  std::merge(lambda.parts().begin(), lambda.parts().end(), mu.parts().begin(), mu.parts().end(),
             std::back_inserter(u), std::greater<>());
  return Partition(std::move(u));
}

Partition partition_scale(int d, const Partition& lambda) {
  if (d < 1) throw std::invalid_argument("partition_scale: factor must be >= 1");
  std::vector<int> s = lambda.parts();
  for (int& p : s) p *= d;
  return Partition(std::move(s));
}

long n_of(const Partition& lambda) {
  long n = 0;
  for (int i = 0; i < lambda.length(); ++i) n += static_cast<long>(i) * lambda.part(i);
  return n;
}

mpz_class z_of(const Partition& lambda) {
  mpz_class z = 1;
  const auto m = lambda.multiplicities();
  for (std::size_t i = 1; i < m.size(); ++i) {
    for (int j = 1; j <= m[i]; ++j) z *= static_cast<long>(i) * j;
  }
  return z;
}

PartitionStats stats(const Partition& lambda) {
  const long n = n_of(lambda);
  return {lambda.size(), n, 2 * n + lambda.size(), z_of(lambda)};
}

IntPoly centralizer_poly(const Partition& lambda) {
  // q^(|λ|+2n(λ)) ∏_i φ_{m_i}(1/q) = q^(|λ|+2n(λ) - Σ m_i(m_i+1)/2) ∏_i ∏_{j<=m_i} (q^j - 1)
  const auto m = lambda.multiplicities();
  long shift = lambda.size() + 2 * n_of(lambda);
  IntPoly prod(1L);
  for (std::size_t i = 1; i < m.size(); ++i) {
    shift -= static_cast<long>(m[i]) * (m[i] + 1) / 2;
    for (int j = 1; j <= m[i]; ++j) prod *= IntPoly::monomial(1, j) - IntPoly(1L);
  }
  return prod * IntPoly::monomial(1, static_cast<int>(shift));
}

RatFunc centralizer_order(const Partition& lambda) { return RatFunc(centralizer_poly(lambda)); }

IntPoly gl_order_poly(int n) {
  // q^(n(n-1)/2) ∏_{j=1}^n (q^j - 1)
  IntPoly prod = IntPoly::monomial(1, n * (n - 1) / 2);
  for (int j = 1; j <= n; ++j) prod *= IntPoly::monomial(1, j) - IntPoly(1L);
  return prod;
}

bool dominance_leq(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) {
    throw SizeMismatch("dominance_leq: " + lambda.to_string() + " and " + mu.to_string() +
                       " have different sizes");
  }
  int sl = 0;
  int sm = 0;
  for (int i = 0; i < std::max(lambda.length(), mu.length()); ++i) {
    sl += lambda.part(i);
    sm += mu.part(i);
    if (sl > sm) return false;
  }
  return true;
}

namespace {

void generate(int remaining, int max_part, std::vector<int>& current, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    current.push_back(p);
    generate(remaining - p, p, current, out);
    current.pop_back();
  }
}

struct PartitionCache {
  std::mutex mu;
  std::map<int, std::unique_ptr<std::vector<Partition>>> lists;
  std::map<int, std::unique_ptr<std::map<Partition, int>>> indices;
};

PartitionCache& cache() {
  static PartitionCache c;
  return c;
}

}  // namespace

const std::vector<Partition>& partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative size");
  auto& c = cache();
  std::lock_guard lock(c.mu);
  auto& slot = c.lists[n];
  if (!slot) {
    auto v = std::make_unique<std::vector<Partition>>();
    std::vector<int> current;
    generate(n, n, current, *v);
    auto idx = std::make_unique<std::map<Partition, int>>();
    for (std::size_t i = 0; i < v->size(); ++i) idx->emplace((*v)[i], static_cast<int>(i));
    c.indices[n] = std::move(idx);
    slot = std::move(v);
  }
  return *slot;
}

int partition_index(const Partition& lambda) {
  partitions_of(lambda.size());
  auto& c = cache();
  std::lock_guard lock(c.mu);
  return c.indices.at(lambda.size())->at(lambda);
}

Partition parse_partition(std::string_view text, std::size_t base_offset) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i >= text.size() || text[i] != '[') throw ParseError("expected '['", base_offset + i);
  ++i;
  std::vector<int> parts;
  skip_ws();
  if (i < text.size() && text[i] == ']') {
    ++i;
  } else {
    while (true) {
      skip_ws();
      const std::size_t start = i;
      long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v > 1000000) throw ParseError("part too large", base_offset + start);
        ++i;
      }
      if (i == start) throw ParseError("expected a positive integer part", base_offset + start);
      if (v == 0) throw ParseError("partition parts must be positive", base_offset + start);
      if (!parts.empty() && v > parts.back()) {
        throw ParseError("partition parts must be weakly decreasing", base_offset + start);
      }
      parts.push_back(static_cast<int>(v));
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ']') {
        ++i;
        break;
      }
      throw ParseError("expected ',' or ']'", base_offset + i);
    }
  }
  skip_ws();
  if (i != text.size()) throw ParseError("trailing characters after partition", base_offset + i);
  return Partition(std::move(parts));
}

}  // namespace hlm
