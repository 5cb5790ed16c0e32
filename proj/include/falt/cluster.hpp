#pragma once

// Cluster pictures of f_n(x) = x (1 - x^n) at an odd prime p | n, and the
// finite-place order of the canonical section computed from them.
//
// Roots are indexed 0..n-1 for zeta_n^i and n for the root 0. Valuations are
// normalized by v(p) = 1.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "falt/exact.hpp"

namespace falt {

/// A p-adic valuation: an exact rational or +infinity (valuation of 0).
class Valuation {
 public:
  static Valuation infinity() { return Valuation(); }
  static Valuation finite(Rational v) { return Valuation(v); }

  bool is_infinite() const { return !value_.has_value(); }
  /// Throws std::logic_error when infinite.
  const Rational& value() const;

  friend bool operator==(const Valuation&, const Valuation&) = default;
  friend bool operator<(const Valuation& a, const Valuation& b);
  friend bool operator<=(const Valuation& a, const Valuation& b) { return !(b < a); }

  std::string to_string() const;

 private:
  Valuation() = default;
  explicit Valuation(Rational v) : value_(v) {}

  std::optional<Rational> value_;
};

enum class ClusterKind { kRootZero, kFullSet, kRootsOfUnity };

const char* to_string(ClusterKind kind);

struct Cluster {
  ClusterKind kind = ClusterKind::kRootsOfUnity;
  int a = 0;          // s_{a,b}: size p^a
  std::int64_t b = 0; // class of b modulo n / p^a, in [0, n / p^a)
  std::vector<std::int64_t> members;  // sorted root indices
  std::int64_t size() const { return static_cast<std::int64_t>(members.size()); }
  /// Present iff the cluster is proper (size > 1).
  std::optional<Rational> depth;
  /// Present iff the cluster is proper and not the full root set.
  std::optional<Rational> relative_depth;

  bool is_proper() const { return members.size() > 1; }

  friend bool operator==(const Cluster&, const Cluster&) = default;
};

struct ClusterPicture {
  std::int64_t n = 0;
  std::int64_t p = 0;
  std::int64_t genus = 0;       // (n - 1) / 2
  Rational disc_valuation;      // v(Disc f_n) = n ord_p(n)
  std::vector<Cluster> clusters;  // canonical order, see canonicalize()

  const Cluster& full_set() const;
  /// Sort clusters by (size, members) so pictures compare with ==.
  void canonicalize();

  friend bool operator==(const ClusterPicture&, const ClusterPicture&) = default;
};

/// v(1 - zeta_n^l) at a prime above the odd prime p:
///   infinity if n | l; 1/(p^{a-1}(p-1)) if n/gcd(n,l) = p^a, a >= 1; else 0.
Valuation cyclotomic_valuation(std::int64_t n, std::int64_t l, std::int64_t p);

/// Closed-form cluster picture: {0}, the full set, and s_{a,b} for
/// 0 <= a <= ord_p(n), b mod n/p^a, with depths and relative depths.
/// Throws std::invalid_argument unless n >= 3 is odd and p is an odd prime
/// dividing n.
ClusterPicture cluster_picture(std::int64_t n, std::int64_t p);

/// Largest n accepted by brute_force_clusters.
inline constexpr std::int64_t kBruteForceMaxN = 1000;

/// Definitional oracle: enumerates every disc {r' : v(r - r') >= d} centered at
/// a root, over all thresholds occurring in the pairwise valuation matrix, and
/// derives depths and relative depths from the resulting inclusion lattice.
ClusterPicture brute_force_clusters(std::int64_t n, std::int64_t p);

/// Sum over proper clusters s != R of even size of delta_s (|s| - 2) |s|.
Rational even_cluster_sum(const ClusterPicture& picture);
/// Sum over proper clusters of odd size of delta_s (|s| - 1)^2.
Rational odd_cluster_sum(const ClusterPicture& picture);

/// ord_P(Lambda) / e_P from cluster data:
///   g v(Disc) - (2g+1)/2 [even sum] - (2g+1)/2 [odd sum] - d_R g (2g+2)(2g+1)
/// Throws std::invalid_argument when a proper non-full cluster lacks a
/// relative depth or the full set lacks a depth.
Rational kunzweiler_order(const ClusterPicture& picture);

/// The finite-place coefficient (p^{2e} - 1) / (p^{2e-1} (p^2 - 1)), e = ord_p(n).
Rational finite_coefficient(std::int64_t n, std::int64_t p);

/// Closed form (n/2)(n c_p - ord_p(n)) for odd n >= 5 and odd p | n.
Rational ord_lambda(std::int64_t n, std::int64_t p);

/// One line per cluster: "kind size depth relative_depth" ("-" when absent).
std::string format_cluster_picture(const ClusterPicture& picture);

}  // namespace falt
