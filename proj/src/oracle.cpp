#include "pimetric/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <numeric>
#include <set>
#include <thread>

#include "pimetric/autgroup.hpp"
#include "pimetric/counting.hpp"
#include "pimetric/error.hpp"

namespace pimetric
{

namespace
{

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct ChunkResult
{
  std::uint64_t candidates = 0;
  std::uint64_t count = 0;
  std::vector<std::vector<std::uint32_t>> tables;
};

// Chunks are claimed dynamically but results are stored by chunk index, so
// the merged output does not depend on the worker count.
template<typename Fn>
std::vector<ChunkResult> run_chunks(std::size_t chunks, unsigned workers, Fn const &fn)
{
  std::vector<ChunkResult> results(chunks);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t c; (c = next.fetch_add(1)) < chunks;)
      results[c] = fn(c);
  };
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(chunks)));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back(work);
    for (auto &t : pool)
      t.join();
  }
  return results;
}

EnumerationReport merge(Space const &space, std::string kind, std::vector<ChunkResult> results,
                        bool keep, Clock::time_point start)
{
  EnumerationReport report;
  report.space = space.describe();
  report.kind = std::move(kind);
  if (keep)
    report.maps.emplace();
  for (auto &r : results) {
    report.candidates += r.candidates;
    report.count += r.count;
    if (keep) {
      for (auto &t : r.tables)
        report.maps->emplace_back(space, std::move(t));
    }
  }
  report.seconds = seconds_since(start);
  return report;
}

bool preserves_distance(IndexedSpace const &space, std::vector<std::uint32_t> const &table)
{
  std::uint32_t size = space.size();
  for (std::uint32_t u = 0; u < size; ++u) {
    for (std::uint32_t v = u + 1; v < size; ++v) {
      if (space.distance(table[u], table[v]) != space.distance(u, v))
        return false;
    }
  }
  return true;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t cap,
                          std::string const &what)
{
  std::uint64_t r = 1;
  for (std::uint64_t j = 0; j < exp; ++j) {
    if (r > cap / base)
      throw Error(Errc::SpaceTooLarge, what);
    r *= base;
  }
  return r;
}

} // namespace

unsigned resolve_workers(unsigned requested)
{
  if (requested > 0)
    return requested;
  if (char const *env = std::getenv("PIMETRIC_WORKERS")) {
    int value = std::atoi(env);
    if (value > 0)
      return static_cast<unsigned>(value);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

EnumerationReport enumerate_symmetries(Space const &space, OracleOptions const &opts)
{
  auto start = Clock::now();
  checked_pow(space.q(), space.n(), kMaxBijectionDomain,
              space.describe() + " exceeds the bijection cap q^n <= 9");
  IndexedSpace indexed(space, kMaxBijectionDomain);
  std::uint32_t const size = indexed.size();

  // One chunk per ordered pair of leading images; each chunk is a contiguous
  // range of the lexicographic permutation order.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> prefixes;
  for (std::uint32_t a = 0; a < size; ++a) {
    for (std::uint32_t b = 0; b < size; ++b) {
      if (a != b)
        prefixes.emplace_back(a, b);
    }
  }

  auto results = run_chunks(prefixes.size(), resolve_workers(opts.workers), [&](std::size_t c) {
    ChunkResult r;
    auto [a, b] = prefixes[c];
    std::vector<std::uint32_t> table{a, b};
    for (std::uint32_t x = 0; x < size; ++x) {
      if (x != a && x != b)
        table.push_back(x);
    }
    do {
      ++r.candidates;
      if (preserves_distance(indexed, table)) {
        ++r.count;
        if (opts.keep_maps)
          r.tables.push_back(table);
      }
    } while (std::next_permutation(table.begin() + 2, table.end()));
    return r;
  });

  return merge(space, "symm", std::move(results), opts.keep_maps, start);
}

EnumerationReport enumerate_automorphisms(Space const &space, OracleOptions const &opts)
{
  auto start = Clock::now();
  unsigned const n = space.n();
  unsigned const q = space.q();
  std::uint64_t const total =
      checked_pow(q, static_cast<std::uint64_t>(n) * n, kMaxMatrixCandidates,
                  space.describe() + " exceeds the matrix cap q^(n^2) <= 2^26");
  IndexedSpace indexed(space);
  std::uint32_t const size = indexed.size();
  auto const &field = space.field();

  std::vector<std::vector<Elem>> coords(size);
  for (std::uint32_t x = 0; x < size; ++x)
    coords[x] = BlockVector::from_index(space, x).coords();

  // Chunk by the first row of the matrix (q^n chunks).
  std::uint64_t const per_chunk = total / size;
  auto results = run_chunks(size, resolve_workers(opts.workers), [&](std::size_t c) {
    ChunkResult r;
    std::vector<Elem> entries(static_cast<std::size_t>(n) * n);
    std::vector<Elem> y(n);
    std::vector<std::uint32_t> table(size);
    for (std::uint64_t idx = c * per_chunk; idx < (c + 1) * per_chunk; ++idx) {
      ++r.candidates;
      std::uint64_t rest = idx;
      for (std::size_t e = entries.size(); e-- > 0;) {
        entries[e] = static_cast<Elem>(rest % q);
        rest /= q;
      }
      if (determinant(field, n, entries) == 0)
        continue;
      bool ok = true;
      for (std::uint32_t x = 0; x < size && ok; ++x) {
        for (unsigned row = 0; row < n; ++row) {
          Elem acc = 0;
          for (unsigned col = 0; col < n; ++col)
            acc = field.add(acc, field.mul(entries[row * n + col], coords[x][col]));
          y[row] = acc;
        }
        std::uint32_t image = 0;
        for (Elem v : y)
          image = image * q + v;
        table[x] = image;
        ok = indexed.weight(image) == indexed.weight(x);
      }
      if (!ok)
        continue;
      ++r.count;
      if (opts.keep_maps)
        r.tables.push_back(table);
    }
    return r;
  });

  return merge(space, "aut", std::move(results), opts.keep_maps, start);
}

std::vector<BlockBijections> enumerate_block_tuples(Space const &space)
{
  BigInt order = m_order(space.partition(), space.q());
  if (order > kMaxMElements)
    throw Error(Errc::SpaceTooLarge, space.describe() + " has |M| > 10^6");

  unsigned const m = space.m();
  std::vector<std::vector<std::uint32_t>> tables(m);
  for (unsigned i = 0; i < m; ++i) {
    tables[i].resize(space.block_size(i));
    std::iota(tables[i].begin(), tables[i].end(), 0u);
  }

  std::vector<BlockBijections> out;
  out.reserve(static_cast<std::size_t>(order));
  while (true) {
    BlockBijections tuple;
    for (auto const &t : tables)
      tuple.emplace_back(t);
    out.push_back(std::move(tuple));

    // Odometer with the last block varying fastest.
    unsigned i = m;
    while (i-- > 0) {
      if (std::next_permutation(tables[i].begin(), tables[i].end()))
        break;
    }
    if (i == static_cast<unsigned>(-1))
      break;
  }
  return out;
}

EnumerationReport enumerate_M(Space const &space, OracleOptions const &opts)
{
  auto start = Clock::now();
  checked_pow(space.q(), space.n(), kMaxMDomain,
              space.describe() + " exceeds the cap q^n <= 256 for checking M");
  auto tuples = enumerate_block_tuples(space);
  IndexedSpace indexed(space);
  auto identity = BlockPermutation::identity(space.m());

  std::size_t const chunks = std::min<std::size_t>(tuples.size(), 64);
  auto results = run_chunks(chunks, resolve_workers(opts.workers), [&](std::size_t c) {
    ChunkResult r;
    std::size_t lo = tuples.size() * c / chunks;
    std::size_t hi = tuples.size() * (c + 1) / chunks;
    for (std::size_t t = lo; t < hi; ++t) {
      ++r.candidates;
      auto table = expand(StructuredSymmetry(space, identity, tuples[t])).table();
      if (preserves_distance(indexed, table)) {
        ++r.count;
        if (opts.keep_maps)
          r.tables.push_back(std::move(table));
      }
    }
    return r;
  });

  return merge(space, "M", std::move(results), opts.keep_maps, start);
}

std::vector<BlockPermutation> enumerate_admissible(Partition const &pi)
{
  std::vector<unsigned> image(pi.m());
  std::iota(image.begin(), image.end(), 0u);
  std::vector<BlockPermutation> out;
  do {
    BlockPermutation sigma(image);
    if (is_admissible(sigma, pi))
      out.push_back(std::move(sigma));
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

std::uint64_t count_invertible_matrices(Field const &field, unsigned k)
{
  std::uint64_t const total =
      checked_pow(field.q(), static_cast<std::uint64_t>(k) * k, kMaxMatrixCandidates,
                  "too many " + std::to_string(k) + "x" + std::to_string(k) + " matrices");
  std::vector<Elem> entries(static_cast<std::size_t>(k) * k);
  std::uint64_t count = 0;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    for (auto &e : entries) {
      e = static_cast<Elem>(rest % field.q());
      rest /= field.q();
    }
    count += determinant(field, k, entries) != 0;
  }
  return count;
}

bool satisfies_lemma1(ExplicitMap const &f)
{
  IndexedSpace space(f.space());
  for (std::uint32_t v = 0; v < space.size(); ++v) {
    for (unsigned i = 0; i < space.m(); ++i) {
      if (!coset_image_block(f, space, v, i))
        return false;
    }
  }
  return true;
}

bool verify_lemma1(Space const &space, OracleOptions const &opts)
{
  OracleOptions keep = opts;
  keep.keep_maps = true;
  auto report = enumerate_symmetries(space, keep);
  return std::all_of(report.maps->begin(), report.maps->end(), satisfies_lemma1);
}

DecompositionCheck check_decomposition_bijection(Space const &space, OracleOptions const &opts)
{
  OracleOptions keep = opts;
  keep.keep_maps = true;
  auto report = enumerate_symmetries(space, keep);

  DecompositionCheck check;
  check.enumerated = report.count;

  std::set<std::vector<std::uint32_t>> enumerated;
  for (auto const &f : *report.maps) {
    enumerated.insert(f.table());
    try {
      if (!(expand(decompose(f, true)) == f))
        check.round_trip = false;
    } catch (Error const &) {
      check.round_trip = false;
    }
  }

  std::set<std::vector<std::uint32_t>> images;
  auto tuples = enumerate_block_tuples(space);
  for (auto const &sigma : enumerate_admissible(space.partition())) {
    for (auto const &tuple : tuples) {
      ++check.structured;
      auto table = expand(StructuredSymmetry(space, sigma, tuple)).table();
      if (!enumerated.count(table))
        check.same_set = false;
      images.insert(std::move(table));
    }
  }
  check.distinct_images = images.size();
  if (images != enumerated)
    check.same_set = false;
  return check;
}

} // namespace pimetric
