#include "lapspread/families.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <string>

#include "lapspread/bounds.hpp"
#include "lapspread/error.hpp"
#include "lapspread/rng.hpp"

namespace lapspread {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    auto pos = s.find(sep);
    out.push_back(trim(s.substr(0, pos)));
    if (pos == std::string_view::npos) break;
    s.remove_prefix(pos + 1);
  }
  return out;
}

template <class T>
T parse_number(std::string_view text, std::string_view what) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw ParseError("family spec: bad " + std::string(what) + " '" + std::string(text) + "'");
  return value;
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string_view fill_name(FillRule f) {
  switch (f) {
    case FillRule::Zero: return "zero";
    case FillRule::One: return "one";
    case FillRule::Random: return "random";
  }
  return "?";
}

std::string format_real(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

struct ClusterLayout {
  // Vertex ranges [first, first+size) of the clusters whose internal
  // edges are free.
  std::vector<std::pair<int, int>> clusters;
};

ClusterLayout cluster_layout(const FamilySpec& spec) {
  const int n = spec.n;
  switch (spec.kind) {
    case FamilyKind::Thick1: {
      const int c = spec.cluster, a = n - 2 - c;
      return {{{0, a}, {a + 1, c}}};
    }
    case FamilyKind::Thick2: {
      const int a = spec.cluster, c = n - 2 - a;
      return {{{0, c}, {c, a}}};
    }
    case FamilyKind::Bull: return {{{2, n - 4}}};
    default: return {};
  }
}

// Skeleton of a cluster family with empty clusters.
SimpleGraph cluster_skeleton(const FamilySpec& spec) {
  const int n = spec.n;
  SimpleGraph g(n);
  switch (spec.kind) {
    case FamilyKind::Thick1: {
      // path (A, b, C, d)
      const int c = spec.cluster, a = n - 2 - c, b = a, d = n - 1;
      for (int v = 0; v < a; ++v) g.add_edge(v, b);
      for (int v = a + 1; v < a + 1 + c; ++v) {
        g.add_edge(b, v);
        g.add_edge(v, d);
      }
      break;
    }
    case FamilyKind::Thick2: {
      // path (C, A, d, b)
      const int a = spec.cluster, c = n - 2 - a, d = n - 2, b = n - 1;
      for (int u = 0; u < c; ++u)
        for (int v = c; v < c + a; ++v) g.add_edge(u, v);
      for (int v = c; v < c + a; ++v) g.add_edge(v, d);
      g.add_edge(d, b);
      break;
    }
    case FamilyKind::Bull: {
      // induced path a-b-c-d, cluster E joined to b and c
      const int a = 0, b = 1, c = n - 2, d = n - 1;
      g.add_edge(a, b);
      g.add_edge(b, c);
      g.add_edge(c, d);
      for (int e = 2; e < n - 2; ++e) {
        g.add_edge(e, b);
        g.add_edge(e, c);
      }
      break;
    }
    default: throw DomainError("cluster_skeleton: not a cluster family");
  }
  return g;
}

std::vector<std::pair<int, int>> intra_cluster_pairs(const FamilySpec& spec) {
  std::vector<std::pair<int, int>> pairs;
  for (auto [first, size] : cluster_layout(spec).clusters)
    for (int u = first; u < first + size; ++u)
      for (int v = u + 1; v < first + size; ++v) pairs.emplace_back(u, v);
  return pairs;
}

SimpleGraph make_rij(int r, int i, int j, bool hat) {
  SimpleGraph g(r + i + j + 2);
  const int a = 0, b = 1;
  if (!hat) g.add_edge(a, b);
  int v = 2;
  for (int k = 0; k < r; ++k, ++v) {
    g.add_edge(a, v);
    g.add_edge(b, v);
  }
  for (int k = 0; k < i; ++k, ++v) g.add_edge(a, v);
  for (int k = 0; k < j; ++k, ++v) g.add_edge(b, v);
  return g;
}

// Drops the rows and columns of empty cells.
QuotientMatrix compress(const Matrix& full, const std::vector<int>& sizes) {
  std::vector<int> keep;
  for (int c = 0; c < static_cast<int>(sizes.size()); ++c)
    if (sizes[c] > 0) keep.push_back(c);
  QuotientMatrix out{Matrix(static_cast<int>(keep.size())), {}};
  for (int a = 0; a < static_cast<int>(keep.size()); ++a) {
    out.part_sizes.push_back(sizes[keep[a]]);
    for (int b = 0; b < static_cast<int>(keep.size()); ++b) out.q(a, b) = full(keep[a], keep[b]);
  }
  return out;
}

Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  Matrix m(static_cast<int>(rows.size()));
  int i = 0;
  for (auto& row : rows) {
    int j = 0;
    for (double v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

QuotientMatrix rij_quotient(int r, int i, int j, bool hat) {
  const double R = r, I = i, J = j;
  Matrix q = hat ? from_rows({{R + I, 0, -R, -I, 0},
                              {0, R + J, -R, 0, -J},
                              {-1, -1, 2, 0, 0},
                              {-1, 0, 0, 1, 0},
                              {0, -1, 0, 0, 1}})
                 : from_rows({{R + I + 1, -1, -R, -I, 0},
                              {-1, R + J + 1, -R, 0, -J},
                              {-1, -1, 2, 0, 0},
                              {-1, 0, 0, 1, 0},
                              {0, -1, 0, 0, 1}});
  return compress(q, {1, 1, r, i, j});
}

}  // namespace

FamilySpec FamilySpec::g_rij(int r, int i, int j) {
  FamilySpec s;
  s.kind = FamilyKind::GRij;
  s.r = r, s.i = i, s.j = j;
  s.validate();
  return s;
}

FamilySpec FamilySpec::ghat_rij(int r, int i, int j) {
  FamilySpec s;
  s.kind = FamilyKind::GHatRij;
  s.r = r, s.i = i, s.j = j;
  s.validate();
  return s;
}

FamilySpec FamilySpec::dandelion(int n) {
  FamilySpec s;
  s.kind = FamilyKind::Dandelion;
  s.n = n;
  s.validate();
  return s;
}

FamilySpec FamilySpec::thick1(int n, int c_size, FillRule fill, std::uint64_t seed) {
  FamilySpec s;
  s.kind = FamilyKind::Thick1;
  s.n = n, s.cluster = c_size, s.fill = fill, s.seed = seed;
  s.validate();
  return s;
}

FamilySpec FamilySpec::thick2(int n, int a_size, FillRule fill, std::uint64_t seed) {
  FamilySpec s;
  s.kind = FamilyKind::Thick2;
  s.n = n, s.cluster = a_size, s.fill = fill, s.seed = seed;
  s.validate();
  return s;
}

FamilySpec FamilySpec::bull(int n, FillRule fill, std::uint64_t seed) {
  FamilySpec s;
  s.kind = FamilyKind::Bull;
  s.n = n, s.fill = fill, s.seed = seed;
  s.validate();
  return s;
}

FamilySpec FamilySpec::se(int n, double sv, FillRule fill, std::uint64_t seed) {
  FamilySpec s;
  s.kind = FamilyKind::SE;
  s.n = n, s.s = sv, s.fill = fill, s.seed = seed;
  s.validate();
  return s;
}

int FamilySpec::vertex_count() const {
  switch (kind) {
    case FamilyKind::GRij:
    case FamilyKind::GHatRij: return r + i + j + 2;
    default: return n;
  }
}

double FamilySpec::cluster_fraction() const {
  switch (kind) {
    case FamilyKind::Thick1:
    case FamilyKind::Thick2: return static_cast<double>(cluster) / (n - 2);
    case FamilyKind::Bull: return 0.5;
    case FamilyKind::SE: return s;
    default: throw DomainError("cluster_fraction: family has no s parameter");
  }
}

void FamilySpec::validate() const {
  auto fail = [&](const std::string& why) { throw DomainError("family " + to_string() + ": " + why); };
  switch (kind) {
    case FamilyKind::GRij:
      if (r < 0 || i < 0 || j < 0) fail("r, i, j must be >= 0");
      if (r + i + j + 2 > kMaxVertices) fail("too many vertices");
      break;
    case FamilyKind::GHatRij:
      if (r < 1 || i < 0 || j < 0) fail("need r >= 1 and i, j >= 0");
      if (r + i + j + 2 > kMaxVertices) fail("too many vertices");
      break;
    case FamilyKind::Dandelion:
      if (n < 4 || n > kMaxVertices) fail("need 4 <= n <= 64");
      break;
    case FamilyKind::Thick1:
    case FamilyKind::Thick2:
      if (n < 4 || n > kMaxVertices) fail("need 4 <= n <= 64");
      if (cluster < 1 || cluster > n - 3) fail("both clusters must be non-empty");
      break;
    case FamilyKind::Bull:
      if (n < 5 || n > kMaxVertices) fail("need 5 <= n <= 64");
      break;
    case FamilyKind::SE:
      if (n < 3 || n > 256) fail("need 3 <= n <= 256");
      if (!(s > 0.0 && s < 1.0)) fail("s must lie in (0,1)");
      break;
  }
}

std::string FamilySpec::to_string() const {
  std::string fill_part;
  if (fill != FillRule::Zero) {
    fill_part = ",fill=" + std::string(fill_name(fill));
    if (fill == FillRule::Random) fill_part += ",seed=" + std::to_string(seed);
  }
  switch (kind) {
    case FamilyKind::GRij:
      return "G:" + std::to_string(r) + "," + std::to_string(i) + "," + std::to_string(j);
    case FamilyKind::GHatRij:
      return "Ghat:" + std::to_string(r) + "," + std::to_string(i) + "," + std::to_string(j);
    case FamilyKind::Dandelion: return "dandelion:" + std::to_string(n);
    case FamilyKind::Thick1:
      return "thick1:n=" + std::to_string(n) + ",C=" + std::to_string(cluster) + fill_part;
    case FamilyKind::Thick2:
      return "thick2:n=" + std::to_string(n) + ",A=" + std::to_string(cluster) + fill_part;
    case FamilyKind::Bull: return "bull:n=" + std::to_string(n) + fill_part;
    case FamilyKind::SE:
      return "se:n=" + std::to_string(n) + ",s=" + format_real(s) + fill_part;
  }
  return "?";
}

FamilySpec FamilySpec::parse(std::string_view text) {
  text = trim(text);
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("family spec: missing ':' in '" + std::string(text) + "'");
  const std::string kind = lower(trim(text.substr(0, colon)));
  const auto fields = split(text.substr(colon + 1), ',');

  std::vector<std::string_view> positional;
  std::map<std::string, std::string_view> named;
  for (auto f : fields) {
    if (f.empty()) throw ParseError("family spec: empty field in '" + std::string(text) + "'");
    auto eq = f.find('=');
    if (eq == std::string_view::npos)
      positional.push_back(f);
    else
      named[std::string(trim(f.substr(0, eq)))] = trim(f.substr(eq + 1));
  }
  auto take_int = [&](const std::string& key) -> std::optional<int> {
    auto it = named.find(key);
    if (it == named.end()) return std::nullopt;
    int v = parse_number<int>(it->second, key);
    named.erase(it);
    return v;
  };
  auto vertex_count = [&]() {
    if (auto v = take_int("n")) return *v;
    if (positional.size() == 1) return parse_number<int>(positional[0], "n");
    throw ParseError("family spec: missing n in '" + std::string(text) + "'");
  };

  FamilySpec spec;
  if (kind == "g" || kind == "ghat") {
    spec.kind = kind == "g" ? FamilyKind::GRij : FamilyKind::GHatRij;
    if (positional.size() != 3) throw ParseError("family spec: expected r,i,j in '" + std::string(text) + "'");
    spec.r = parse_number<int>(positional[0], "r");
    spec.i = parse_number<int>(positional[1], "i");
    spec.j = parse_number<int>(positional[2], "j");
  } else if (kind == "dandelion") {
    spec.kind = FamilyKind::Dandelion;
    spec.n = vertex_count();
  } else if (kind == "thick1" || kind == "thick2") {
    spec.kind = kind == "thick1" ? FamilyKind::Thick1 : FamilyKind::Thick2;
    spec.n = vertex_count();
    auto a = take_int("A"), c = take_int("C");
    const auto own = spec.kind == FamilyKind::Thick1 ? c : a;
    const auto other = spec.kind == FamilyKind::Thick1 ? a : c;
    if (own) {
      spec.cluster = *own;
      if (other && *other != spec.n - 2 - *own)
        throw ParseError("family spec: |A| + |C| must equal n - 2");
    } else if (other) {
      spec.cluster = spec.n - 2 - *other;
    } else {
      throw ParseError("family spec: thick dandelions need A= or C=");
    }
  } else if (kind == "bull") {
    spec.kind = FamilyKind::Bull;
    spec.n = vertex_count();
  } else if (kind == "se") {
    spec.kind = FamilyKind::SE;
    spec.n = vertex_count();
    auto it = named.find("s");
    if (it == named.end()) throw ParseError("family spec: se needs s=");
    spec.s = parse_number<double>(it->second, "s");
    named.erase(it);
  } else {
    throw ParseError("family spec: unknown family '" + kind + "'");
  }

  if (auto it = named.find("fill"); it != named.end()) {
    const std::string f = lower(it->second);
    if (f == "zero") spec.fill = FillRule::Zero;
    else if (f == "one") spec.fill = FillRule::One;
    else if (f == "random") spec.fill = FillRule::Random;
    else throw ParseError("family spec: unknown fill '" + f + "'");
    named.erase(it);
  }
  if (auto it = named.find("seed"); it != named.end()) {
    spec.seed = parse_number<std::uint64_t>(it->second, "seed");
    named.erase(it);
  }
  if (!named.empty()) throw ParseError("family spec: unknown key '" + named.begin()->first + "'");
  try {
    spec.validate();
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
  return spec;
}

FamilyGraph make(const FamilySpec& spec) {
  spec.validate();
  switch (spec.kind) {
    case FamilyKind::GRij: return make_rij(spec.r, spec.i, spec.j, false);
    case FamilyKind::GHatRij: return make_rij(spec.r, spec.i, spec.j, true);
    case FamilyKind::Dandelion: return make_rij(0, 1, spec.n - 3, false);
    case FamilyKind::Thick1:
    case FamilyKind::Thick2:
    case FamilyKind::Bull: {
      SimpleGraph g = cluster_skeleton(spec);
      Rng rng(spec.seed);
      for (auto [u, v] : intra_cluster_pairs(spec)) {
        bool on = spec.fill == FillRule::One || (spec.fill == FillRule::Random && rng.coin());
        if (on) g.add_edge(u, v);
      }
      return g;
    }
    case FamilyKind::SE: {
      const int n = spec.n;
      WeightedGraph g(n);
      const int u = 0, v = 1;
      g.set_weight(u, v, spec.s);
      for (int x = 2; x < n; ++x) g.set_weight(v, x, 1.0);
      Rng rng(spec.seed);
      for (int x = 2; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
          double w = spec.fill == FillRule::One ? 1.0 : spec.fill == FillRule::Random ? rng.uniform() : 0.0;
          g.set_weight(x, y, w);
        }
      return g;
    }
  }
  throw DomainError("make: unknown family");
}

SimpleGraph make_simple(const FamilySpec& spec) {
  auto g = make(spec);
  if (auto* s = std::get_if<SimpleGraph>(&g)) return *s;
  throw DomainError("make_simple: " + spec.to_string() + " is weighted");
}

WeightedGraph make_weighted(const FamilySpec& spec) {
  auto g = make(spec);
  if (auto* w = std::get_if<WeightedGraph>(&g)) return *w;
  return WeightedGraph::from_simple(std::get<SimpleGraph>(g));
}

std::vector<SimpleGraph> all_cluster_fills(const FamilySpec& spec, std::size_t limit) {
  spec.validate();
  if (spec.kind != FamilyKind::Thick1 && spec.kind != FamilyKind::Thick2 && spec.kind != FamilyKind::Bull)
    throw DomainError("all_cluster_fills: not a cluster family");
  const auto pairs = intra_cluster_pairs(spec);
  if (pairs.size() >= 63 || (std::size_t{1} << pairs.size()) > limit)
    throw DomainError("all_cluster_fills: too many fills for " + spec.to_string());
  const SimpleGraph base = cluster_skeleton(spec);
  std::vector<SimpleGraph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    SimpleGraph g = base;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if ((mask >> k) & 1U) g.add_edge(pairs[k].first, pairs[k].second);
    out.push_back(g);
  }
  return out;
}

QuotientMatrix thick1_quotient(double n, double s) {
  if (!(n >= 4) || !(s > 0.0 && s < 1.0)) throw DomainError("thick1_quotient: need n >= 4 and s in (0,1)");
  const double m = n - 2;
  Matrix q = from_rows({{1, -1, 0, 0},
                        {-(1 - s) * m, m, -s * m, 0},
                        {0, -1, 2, -1},
                        {0, 0, -s * m, s * m}});
  const int c = static_cast<int>(std::lround(s * m));
  return {q, {static_cast<int>(std::lround(m)) - c, 1, c, 1}};
}

QuotientMatrix quotient(const FamilySpec& spec) {
  spec.validate();
  switch (spec.kind) {
    case FamilyKind::GRij: return rij_quotient(spec.r, spec.i, spec.j, false);
    case FamilyKind::GHatRij: return rij_quotient(spec.r, spec.i, spec.j, true);
    case FamilyKind::Dandelion: return rij_quotient(0, 1, spec.n - 3, false);
    case FamilyKind::Thick1: {
      QuotientMatrix q = thick1_quotient(spec.n, spec.cluster_fraction());
      q.part_sizes = {spec.n - 2 - spec.cluster, 1, spec.cluster, 1};
      return q;
    }
    case FamilyKind::Bull: {
      const double n = spec.n;
      return {from_rows({{1, -1, 0, 0, 0},
                         {-1, n - 2, -(n - 4), -1, 0},
                         {0, -1, 2, -1, 0},
                         {0, -1, -(n - 4), n - 2, -1},
                         {0, 0, 0, -1, 1}}),
              {1, 1, spec.n - 4, 1, 1}};
    }
    case FamilyKind::SE: {
      const double n = spec.n, s = spec.s;
      return {from_rows({{s, -s, 0}, {-s, s + n - 2, -(n - 2)}, {0, -1, 1}}), {1, 1, spec.n - 2}};
    }
    case FamilyKind::Thick2: break;
  }
  throw DomainError("quotient: no quotient matrix for " + spec.to_string());
}

Polynomial rij_quartic(int r, int i, int j, bool hat) {
  const double R = r, I = i, J = j;
  const double rr = R * R, ir = I * R, jr = J * R, ij = I * J;
  if (hat)
    return Polynomial{rr + ir + jr + 2 * R,
                      -(2 * rr + 2 * ir + 2 * jr + 6 * R + 2 * ij + 2 * I + 2 * J + 2),
                      rr + ir + jr + 6 * R + ij + 3 * I + 3 * J + 5,
                      -(2 * R + I + J + 4),
                      1.0};
  return Polynomial{rr + ir + jr + 4 * R + 2 * I + 2 * J + 4,
                    -(2 * rr + 2 * ir + 2 * jr + 10 * R + 2 * ij + 5 * I + 5 * J + 12),
                    rr + ir + jr + 8 * R + ij + 4 * I + 4 * J + 13,
                    -(2 * R + I + J + 6),
                    1.0};
}

Polynomial dandelion_cubic(int n) {
  const double N = n;
  return Polynomial{-N, 3 * N - 2, -(N + 2), 1.0};
}

std::vector<double> predicted_spectrum(const FamilySpec& spec) {
  spec.validate();
  std::vector<double> eigs{0.0};
  switch (spec.kind) {
    case FamilyKind::GRij:
    case FamilyKind::GHatRij: {
      const bool hat = spec.kind == FamilyKind::GHatRij;
      const int n = spec.vertex_count();
      Polynomial q = rij_quartic(spec.r, spec.i, spec.j, hat);
      // Negative exponents in x(x-2)^(r-1)(x-1)^(i+j-2) cancel against
      // roots of the quartic.
      for (int e = spec.r - 1; e < 0; ++e) q = q.deflate(2.0, 1e-9);
      for (int e = spec.i + spec.j - 2; e < 0; ++e) q = q.deflate(1.0, 1e-9);
      std::vector<double> roots = real_roots(q, -0.5, n + 0.5);
      if (static_cast<int>(roots.size()) != q.degree())
        throw DomainError("predicted_spectrum: lost a root of the quartic for " + spec.to_string());
      eigs.insert(eigs.end(), std::max(spec.r - 1, 0), 2.0);
      eigs.insert(eigs.end(), std::max(spec.i + spec.j - 2, 0), 1.0);
      eigs.insert(eigs.end(), roots.begin(), roots.end());
      break;
    }
    case FamilyKind::Dandelion: {
      const int n = spec.n;
      const Bracket brackets[] = {{0.0, 1.0}, {1.0, n - 1.0}, {n - 1.0, static_cast<double>(n)}};
      auto roots = isolate_roots(dandelion_cubic(n), brackets);
      eigs.insert(eigs.end(), n - 4, 1.0);
      eigs.insert(eigs.end(), roots.begin(), roots.end());
      break;
    }
    default: throw DomainError("predicted_spectrum: unsupported family " + spec.to_string());
  }
  std::sort(eigs.begin(), eigs.end());
  return eigs;
}

double family_lambda2_closed(const FamilySpec& spec) {
  spec.validate();
  switch (spec.kind) {
    case FamilyKind::GRij:
      if (spec.i == spec.j && spec.i >= 1) return f_n(spec.vertex_count(), spec.i);
      break;
    case FamilyKind::GHatRij:
      if (spec.i == spec.j && spec.i >= 1) {
        const double n = spec.vertex_count(), k = spec.i;
        const double b = n - k - 1;
        return (b - std::sqrt(b * b - 4 * (n - 2 * k - 2))) / 2;
      }
      break;
    case FamilyKind::Bull: return maxbound_closed(spec.n);
    default: break;
  }
  throw DomainError("family_lambda2_closed: no closed form for " + spec.to_string());
}

SimpleGraph insert_edges_preserving_ecc(const SimpleGraph& g, std::uint64_t seed) {
  if (!is_connected(g)) throw DomainError("insert_edges_preserving_ecc: graph must be connected");
  const std::vector<int> ecc = eccentricities(g);
  std::vector<std::pair<int, int>> candidates;
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (!g.has_edge(u, v)) candidates.emplace_back(u, v);
  Rng rng(seed);
  for (std::size_t k = candidates.size(); k > 1; --k) std::swap(candidates[k - 1], candidates[rng.below(k)]);

  SimpleGraph out = g;
  for (auto [u, v] : candidates) {
    if (!rng.coin()) continue;
    out.add_edge(u, v);
    if (eccentricities(out) != ecc) out.remove_edge(u, v);
  }
  return out;
}

}  // namespace lapspread
