#include "lapspread/enumerate.hpp"

#include <omp.h>

#include <algorithm>
#include <charconv>
#include <set>
#include <string>

#include "lapspread/error.hpp"

namespace lapspread {

namespace {

constexpr std::size_t kChunks = 1024;

int parse_int(std::string_view s, std::string_view what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("filter: bad " + std::string(what) + " '" + std::string(s) + "'");
  return v;
}

std::uint64_t mask_count(int n) { return std::uint64_t{1} << (n * (n - 1) / 2); }

// Survivors of [begin, end). With dedup, each class is represented by the
// one labeled mask that is its own canonical form, so every class shows
// up in exactly one chunk and no cross-chunk union is needed.
std::vector<std::uint64_t> sweep_range(const GraphClassIter& iter, std::uint64_t begin, std::uint64_t end) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t mask = begin; mask < end; ++mask) {
    const SimpleGraph g = graph_from_mask(iter.n, mask);
    if (!iter.filter.accepts(g)) continue;
    if (!iter.dedup)
      out.push_back(mask);
    else if (is_canonical_labeling(g))
      out.push_back(labeling_string(g).bits);
  }
  return out;
}

}  // namespace

GraphFilter GraphFilter::parse(std::string_view text) {
  if (text == "all") return {FilterKind::All, 0};
  if (text == "connected") return {FilterKind::Connected, 0};
  if (text == "both-diam3") return {FilterKind::BothDiam3, 0};
  if (text.starts_with("diam=")) return {FilterKind::Diam, parse_int(text.substr(5), "diameter")};
  if (text.starts_with("ecc3=")) return {FilterKind::Ecc3Count, parse_int(text.substr(5), "count")};
  throw ParseError("filter: unknown filter '" + std::string(text) + "'");
}

std::string GraphFilter::to_string() const {
  switch (kind) {
    case FilterKind::All: return "all";
    case FilterKind::Connected: return "connected";
    case FilterKind::BothDiam3: return "both-diam3";
    case FilterKind::Diam: return "diam=" + std::to_string(param);
    case FilterKind::Ecc3Count: return "ecc3=" + std::to_string(param);
  }
  return "?";
}

bool GraphFilter::accepts(const SimpleGraph& g) const {
  switch (kind) {
    case FilterKind::All: return true;
    case FilterKind::Connected: return is_connected(g);
    case FilterKind::BothDiam3: return diameter(g) == 3 && diameter(complement(g)) == 3;
    case FilterKind::Diam: return diameter(g) == param;
    case FilterKind::Ecc3Count: return set_size(high_ecc_set(g)) == param;
  }
  return false;
}

void GraphClassIter::validate() const {
  if (n < 2 || n > kMaxEnumerateN)
    throw DomainError("enumerate: n = " + std::to_string(n) + " outside [2, 8]");
  if (n == 8 && !allow_n8) throw DomainError("enumerate: n = 8 sweeps 2^28 masks; pass allow_n8 to run it");
}

SimpleGraph ClassList::graph(std::size_t k) const {
  return canonical ? certificate_graph({n, codes.at(k)}) : graph_from_mask(n, codes.at(k));
}

ClassList enumerate_classes(const GraphClassIter& iter, int threads) {
  iter.validate();
  const std::uint64_t total = mask_count(iter.n);
  const std::size_t chunks = static_cast<std::size_t>(std::min<std::uint64_t>(kChunks, total));
  std::vector<std::vector<std::uint64_t>> parts(chunks);

  const int workers = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::uint64_t begin = total * c / chunks;
    const std::uint64_t end = total * (c + 1) / chunks;
    parts[c] = sweep_range(iter, begin, end);
  }

  ClassList out{iter.n, iter.dedup, {}};
  std::size_t size = 0;
  for (const auto& p : parts) size += p.size();
  out.codes.reserve(size);
  for (auto& p : parts) out.codes.insert(out.codes.end(), p.begin(), p.end());
  if (iter.dedup) {
    std::sort(out.codes.begin(), out.codes.end());
    out.codes.erase(std::unique(out.codes.begin(), out.codes.end()), out.codes.end());
  }
  return out;
}

ClassList enumerate_classes_serial(const GraphClassIter& iter) {
  iter.validate();
  ClassList out{iter.n, iter.dedup, {}};
  std::set<std::uint64_t> seen;
  const std::uint64_t total = mask_count(iter.n);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    const SimpleGraph g = graph_from_mask(iter.n, mask);
    if (!iter.filter.accepts(g)) continue;
    if (iter.dedup)
      seen.insert(canonical_form(g).bits);
    else
      out.codes.push_back(mask);
  }
  if (iter.dedup) out.codes.assign(seen.begin(), seen.end());
  return out;
}

}  // namespace lapspread
