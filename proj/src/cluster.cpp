#include "falt/cluster.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace falt {

namespace {

void require_odd_setup(std::int64_t n, std::int64_t p) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("cluster picture: n must be odd and >= 3");
  if (p == 2) throw std::invalid_argument("cluster picture: residue characteristic 2 is not supported");
  if (!is_prime(p)) throw std::invalid_argument("cluster picture: p must be prime");
  if (n % p != 0) throw std::invalid_argument("cluster picture: p must divide n");
}

// Depth of s_{a,b} for a >= 1.
Rational sab_depth(std::int64_t p, int a) { return Rational(1, ipow(p, a - 1) * (p - 1)); }

// If size == p^a for some a >= 0 returns a, else -1.
int log_p_exact(std::int64_t size, std::int64_t p) {
  int a = 0;
  while (size % p == 0) {
    size /= p;
    ++a;
  }
  return size == 1 ? a : -1;
}

}  // namespace

const Rational& Valuation::value() const {
  if (!value_) throw std::logic_error("Valuation: value() on infinity");
  return *value_;
}

bool operator<(const Valuation& a, const Valuation& b) {
  if (a.is_infinite()) return false;
  if (b.is_infinite()) return true;
  return *a.value_ < *b.value_;
}

std::string Valuation::to_string() const { return value_ ? value_->to_string() : "inf"; }

const char* to_string(ClusterKind kind) {
  switch (kind) {
    case ClusterKind::kRootZero:
      return "root-zero";
    case ClusterKind::kFullSet:
      return "full-set";
    case ClusterKind::kRootsOfUnity:
      return "s_ab";
  }
  return "?";
}

const Cluster& ClusterPicture::full_set() const {
  for (const auto& c : clusters) {
    if (c.kind == ClusterKind::kFullSet) return c;
  }
  throw std::logic_error("ClusterPicture: no full set");
}

void ClusterPicture::canonicalize() {
  std::sort(clusters.begin(), clusters.end(), [](const Cluster& x, const Cluster& y) {
    if (x.members.size() != y.members.size()) return x.members.size() < y.members.size();
    return x.members < y.members;
  });
}

Valuation cyclotomic_valuation(std::int64_t n, std::int64_t l, std::int64_t p) {
  if (p == 2 || !is_prime(p)) throw std::invalid_argument("cyclotomic_valuation: p must be an odd prime");
  if (n < 1) throw std::invalid_argument("cyclotomic_valuation: n must be >= 1");
  std::int64_t r = l % n;
  if (r == 0) return Valuation::infinity();
  std::int64_t k = n / gcd(n, r);
  int a = log_p_exact(k, p);
  if (a >= 1) return Valuation::finite(sab_depth(p, a));
  return Valuation::finite(Rational(0));
}

ClusterPicture cluster_picture(std::int64_t n, std::int64_t p) {
  require_odd_setup(n, p);
  const int e = ord_p(n, p);
  ClusterPicture pic;
  pic.n = n;
  pic.p = p;
  pic.genus = (n - 1) / 2;
  pic.disc_valuation = Rational(n) * Rational(e);

  Cluster zero;
  zero.kind = ClusterKind::kRootZero;
  zero.members = {n};
  pic.clusters.push_back(std::move(zero));

  for (int a = 0; a <= e; ++a) {
    const std::int64_t size = ipow(p, a);
    const std::int64_t classes = n / size;
    for (std::int64_t b = 0; b < classes; ++b) {
      Cluster c;
      c.kind = ClusterKind::kRootsOfUnity;
      c.a = a;
      c.b = b;
      c.members.reserve(static_cast<std::size_t>(size));
      for (std::int64_t k = 0; k < size; ++k) c.members.push_back((k * classes + b) % n);
      std::sort(c.members.begin(), c.members.end());
      if (a >= 1) {
        c.depth = sab_depth(p, a);
        c.relative_depth = (a < e) ? Rational(1, size) : sab_depth(p, a);
      }
      pic.clusters.push_back(std::move(c));
    }
  }

  Cluster full;
  full.kind = ClusterKind::kFullSet;
  for (std::int64_t i = 0; i <= n; ++i) full.members.push_back(i);
  full.depth = Rational(0);
  pic.clusters.push_back(std::move(full));

  pic.canonicalize();
  return pic;
}

ClusterPicture brute_force_clusters(std::int64_t n, std::int64_t p) {
  require_odd_setup(n, p);
  if (n > kBruteForceMaxN) throw std::invalid_argument("brute_force_clusters: n above tractability bound");
  const auto roots = static_cast<std::size_t>(n + 1);

  // Pairwise valuations. v(0 - zeta^i) = 0 since roots of unity are units.
  std::vector<Valuation> val(roots * roots, Valuation::infinity());
  std::set<Rational> thresholds = {Rational(0)};
  for (std::size_t i = 0; i < roots; ++i) {
    for (std::size_t j = 0; j < roots; ++j) {
      Valuation v = Valuation::infinity();
      if (i == j) {
        v = Valuation::infinity();
      } else if (i == roots - 1 || j == roots - 1) {
        v = Valuation::finite(Rational(0));
      } else {
        v = cyclotomic_valuation(n, static_cast<std::int64_t>(j) - static_cast<std::int64_t>(i), p);
      }
      if (!v.is_infinite()) thresholds.insert(v.value());
      val[i * roots + j] = v;
    }
  }
  auto v_at = [&](std::size_t i, std::size_t j) -> const Valuation& { return val[i * roots + j]; };

  // Every disc containing a root can be recentred at that root; thresholds
  // strictly between occurring values give the same sets as the next one up.
  std::vector<Valuation> levels;
  for (const auto& t : thresholds) levels.push_back(Valuation::finite(t));
  levels.push_back(Valuation::infinity());

  std::set<std::vector<std::int64_t>> sets;
  for (std::size_t c = 0; c < roots; ++c) {
    for (const auto& d : levels) {
      std::vector<std::int64_t> s;
      for (std::size_t r = 0; r < roots; ++r) {
        if (d <= v_at(c, r)) s.push_back(static_cast<std::int64_t>(r));
      }
      sets.insert(std::move(s));
    }
  }

  ClusterPicture pic;
  pic.n = n;
  pic.p = p;
  pic.genus = (n - 1) / 2;
  pic.disc_valuation = Rational(n) * Rational(ord_p(n, p));

  for (const auto& s : sets) {
    Cluster c;
    c.members = s;
    const bool has_zero = s.back() == n;
    if (s.size() == roots) {
      c.kind = ClusterKind::kFullSet;
    } else if (has_zero) {
      if (s.size() == 1) {
        c.kind = ClusterKind::kRootZero;
      } else {
        c.kind = ClusterKind::kRootsOfUnity;
        c.a = -1;  // not a shape the closed form knows
      }
    } else {
      c.kind = ClusterKind::kRootsOfUnity;
      c.a = log_p_exact(static_cast<std::int64_t>(s.size()), p);
      c.b = c.a >= 0 ? s.front() % (n / ipow(p, c.a)) : s.front();
    }
    if (c.is_proper()) {
      Valuation d = Valuation::infinity();
      for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
          const auto& v = v_at(static_cast<std::size_t>(s[i]), static_cast<std::size_t>(s[j]));
          if (v < d) d = v;
        }
      }
      c.depth = d.value();
    }
    pic.clusters.push_back(std::move(c));
  }

  // Relative depth against the smallest strictly larger cluster.
  for (auto& c : pic.clusters) {
    if (!c.is_proper() || c.kind == ClusterKind::kFullSet) continue;
    const Cluster* parent = nullptr;
    for (const auto& other : pic.clusters) {
      if (other.members.size() <= c.members.size()) continue;
      if (!std::includes(other.members.begin(), other.members.end(), c.members.begin(), c.members.end())) {
        continue;
      }
      if (parent == nullptr || other.members.size() < parent->members.size()) parent = &other;
    }
    if (parent == nullptr || !parent->depth) throw std::logic_error("brute_force_clusters: no parent cluster");
    c.relative_depth = *c.depth - *parent->depth;
  }

  pic.canonicalize();
  return pic;
}

Rational even_cluster_sum(const ClusterPicture& picture) {
  Rational sum;
  for (const auto& c : picture.clusters) {
    if (!c.is_proper() || c.kind == ClusterKind::kFullSet || c.size() % 2 != 0) continue;
    if (!c.relative_depth) throw std::invalid_argument("even_cluster_sum: missing relative depth");
    sum += *c.relative_depth * Rational((c.size() - 2) * c.size());
  }
  return sum;
}

Rational odd_cluster_sum(const ClusterPicture& picture) {
  Rational sum;
  for (const auto& c : picture.clusters) {
    if (!c.is_proper() || c.size() % 2 == 0) continue;
    if (!c.relative_depth) throw std::invalid_argument("odd_cluster_sum: missing relative depth");
    sum += *c.relative_depth * Rational((c.size() - 1) * (c.size() - 1));
  }
  return sum;
}

Rational kunzweiler_order(const ClusterPicture& picture) {
  const std::int64_t g = picture.genus;
  const auto& full = picture.full_set();
  if (!full.depth) throw std::invalid_argument("kunzweiler_order: full set has no depth");
  const Rational half_weight(2 * g + 1, 2);
  return Rational(g) * picture.disc_valuation - half_weight * even_cluster_sum(picture) -
         half_weight * odd_cluster_sum(picture) - *full.depth * Rational(g * (2 * g + 2) * (2 * g + 1));
}

Rational finite_coefficient(std::int64_t n, std::int64_t p) {
  const int e = ord_p(n, p);
  if (e < 1) throw std::invalid_argument("finite_coefficient: p does not divide n");
  return Rational(ipow(p, 2 * e) - 1) / Rational(ipow(p, 2 * e - 1) * (p * p - 1));
}

Rational ord_lambda(std::int64_t n, std::int64_t p) {
  if (n < 5) throw std::invalid_argument("ord_lambda: closed form requires n >= 5");
  require_odd_setup(n, p);
  return Rational(n, 2) * (Rational(n) * finite_coefficient(n, p) - Rational(ord_p(n, p)));
}

std::string format_cluster_picture(const ClusterPicture& picture) {
  std::ostringstream os;
  for (const auto& c : picture.clusters) {
    os << to_string(c.kind);
    if (c.kind == ClusterKind::kRootsOfUnity) os << '(' << c.a << ',' << c.b << ')';
    os << ' ' << c.size() << ' ' << (c.depth ? c.depth->to_string() : "-") << ' '
       << (c.relative_depth ? c.relative_depth->to_string() : "-") << '\n';
  }
  return os.str();
}

}  // namespace falt
