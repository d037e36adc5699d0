#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lapspread/graph.hpp"
#include "lapspread/matrix.hpp"
#include "lapspread/polynomial.hpp"

namespace lapspread {

enum class FamilyKind { GRij, GHatRij, Dandelion, Thick1, Thick2, Bull, SE };

/// How edges inside a cluster (THICK1/THICK2/BULL) or between the
/// unconstrained SE vertices are filled in.
enum class FillRule { Zero, One, Random };

/// One member of a named family. Text form, e.g. "G:2,3,4", "Ghat:1,2,2",
/// "dandelion:10", "thick1:n=9,C=3", "thick2:n=9,A=3", "bull:n=7",
/// "se:n=8,s=0.3,fill=random,seed=42".
struct FamilySpec {
  FamilyKind kind = FamilyKind::GRij;
  int r = 0, i = 0, j = 0;  // G / Ghat
  int n = 0;                // dandelion, thick, bull, se
  int cluster = 0;          // |C| for thick1, |A| for thick2 (the cluster that sets s)
  double s = 0.5;           // se
  FillRule fill = FillRule::Zero;
  std::uint64_t seed = 0;

  static FamilySpec g_rij(int r, int i, int j);
  static FamilySpec ghat_rij(int r, int i, int j);
  static FamilySpec dandelion(int n);
  static FamilySpec thick1(int n, int c_size, FillRule fill = FillRule::Zero, std::uint64_t seed = 0);
  static FamilySpec thick2(int n, int a_size, FillRule fill = FillRule::Zero, std::uint64_t seed = 0);
  static FamilySpec bull(int n, FillRule fill = FillRule::Zero, std::uint64_t seed = 0);
  static FamilySpec se(int n, double s, FillRule fill = FillRule::Zero, std::uint64_t seed = 0);

  static FamilySpec parse(std::string_view text);
  std::string to_string() const;

  int vertex_count() const;
  bool is_weighted() const { return kind == FamilyKind::SE; }
  /// Cluster fraction s of a thick-stemmed dandelion (1/2 for bulls).
  double cluster_fraction() const;

  /// Throws DomainError if the parameters do not describe a graph.
  void validate() const;
};

using FamilyGraph = std::variant<SimpleGraph, WeightedGraph>;

FamilyGraph make(const FamilySpec& spec);
SimpleGraph make_simple(const FamilySpec& spec);
WeightedGraph make_weighted(const FamilySpec& spec);

/// Every simple graph obtainable from `spec` by choosing the intra-cluster
/// edges freely (THICK1, THICK2, BULL). At most `limit` graphs.
std::vector<SimpleGraph> all_cluster_fills(const FamilySpec& spec, std::size_t limit = 1 << 20);

/// Laplacian quotient of the family's equitable partition. Empty cells
/// are dropped so the eigenvalues are always Laplacian eigenvalues.
struct QuotientMatrix {
  Matrix q;
  std::vector<int> part_sizes;
};

QuotientMatrix quotient(const FamilySpec& spec);

/// Quotient of a thick-stemmed dandelion of the first kind for any real
/// s in (0,1); cells (A, b, C, d).
QuotientMatrix thick1_quotient(double n, double s);

/// Quartic factor of the Laplacian characteristic polynomial of G(r,i,j)
/// (hat = false) or Ghat(r,i,j) (hat = true).
Polynomial rij_quartic(int r, int i, int j, bool hat);

/// x^3 - (n+2)x^2 + (3n-2)x - n
Polynomial dandelion_cubic(int n);

/// Laplacian spectrum predicted from the factored characteristic
/// polynomial (G, Ghat, dandelion), ascending.
std::vector<double> predicted_spectrum(const FamilySpec& spec);

/// Closed-form lambda2 for G(r,k,k), Ghat(r,k,k) with k >= 1, and bulls.
double family_lambda2_closed(const FamilySpec& spec);

/// Adds a random subset of non-edges, keeping each one only if every
/// vertex eccentricity is unchanged. `g` must be connected.
SimpleGraph insert_edges_preserving_ecc(const SimpleGraph& g, std::uint64_t seed);

}  // namespace lapspread
