#include "linext/enumerate.hpp"

#include <algorithm>
#include <random>
#include <thread>

#include "linext/reduction.hpp"

namespace linext {

namespace {

std::size_t block_cells(const Mcq& x) {
  std::size_t s = 0;
  for (std::size_t k = 0; k < x.block_count(); ++k)
    s += x.block(k).size() * x.block(k).size();
  return s;
}

Table take_table(std::size_t rows, std::size_t cols,
                 std::vector<Elem>::const_iterator& it) {
  Table t(rows, cols);
  for (auto& v : t.data()) v = *it++;
  return t;
}

BlockTable take_blocks(const Mcq& x, std::vector<Elem>::const_iterator& it) {
  std::vector<Table> out;
  for (std::size_t k = 0; k < x.block_count(); ++k) {
    const std::size_t s = x.block(k).size();
    out.push_back(take_table(s, s, it));
  }
  return BlockTable(std::move(out));
}

struct Job {
  CensusTarget target;
  std::shared_ptr<const Mcq> x;
  std::shared_ptr<const FiniteRing> r;
  const FiniteModule* m;
  const CensusOptions* options;
};

struct Partial {
  std::uint64_t examined = 0, structure_valid = 0, extension_valid = 0;
  std::uint64_t reduction_checked = 0, reduction_failed = 0;
  std::vector<CensusRecord> records;
  std::vector<CensusRecord> mismatches;
};

CensusRecord evaluate(const Job& job, const std::vector<Elem>& cells,
                      Partial& part) {
  CensusRecord rec;
  if (job.target == CensusTarget::pairs) {
    const AlexanderPair p = pair_from_cells(job.x, job.r, cells);
    rec.structure_ok = check_pair(p).valid();
    rec.extension_ok = check_mcq(raw_pair_extension(p, *job.m, job.options->budget)).valid();
  } else {
    const Quadruple q = quadruple_from_cells(job.x, job.r, cells);
    rec.structure_ok = check_quadruple(q).valid();
    rec.extension_ok =
        check_mcq(raw_quadruple_extension(q, *job.m, job.options->budget)).valid();
    if (rec.structure_ok && job.options->verify_reduction) {
      ++part.reduction_checked;
      bool ok = false;
      try {
        ok = audit_reduction(verify_quadruple(q), *job.m, job.options->budget).valid();
      } catch (const std::logic_error&) {
        ok = false;
      }
      rec.reduction_ok = ok;
      if (!ok) ++part.reduction_failed;
    }
  }
  ++part.examined;
  if (rec.structure_ok) ++part.structure_valid;
  if (rec.extension_ok) ++part.extension_valid;
  return rec;
}

void record(Partial& part, CensusRecord rec, const std::vector<Elem>& cells,
            bool keep) {
  const bool mismatch = rec.structure_ok != rec.extension_ok ||
                        (rec.reduction_ok && !*rec.reduction_ok);
  if (mismatch) {
    CensusRecord m = rec;
    m.cells = cells;
    part.mismatches.push_back(std::move(m));
  }
  if (keep) part.records.push_back(std::move(rec));
}

// Runs `count` units of work split into contiguous ranges, one per worker,
// and concatenates the partial results in range order.
template <typename Work>
Partial run_partitioned(std::uint64_t count, unsigned jobs, const Work& work) {
  jobs = std::max(1u, jobs);
  if (count < jobs) jobs = static_cast<unsigned>(std::max<std::uint64_t>(1, count));
  std::vector<Partial> parts(jobs);
  const auto range = [&](unsigned j) {
    return std::pair{count * j / jobs, count * (j + 1) / jobs};
  };
  if (jobs == 1) {
    work(0, count, parts[0]);
  } else {
    std::vector<std::jthread> threads;
    for (unsigned j = 0; j < jobs; ++j) {
      threads.emplace_back([&, j] {
        const auto [lo, hi] = range(j);
        work(lo, hi, parts[j]);
      });
    }
  }
  Partial all;
  for (auto& p : parts) {
    all.examined += p.examined;
    all.structure_valid += p.structure_valid;
    all.extension_valid += p.extension_valid;
    all.reduction_checked += p.reduction_checked;
    all.reduction_failed += p.reduction_failed;
    std::move(p.records.begin(), p.records.end(), std::back_inserter(all.records));
    std::move(p.mismatches.begin(), p.mismatches.end(),
              std::back_inserter(all.mismatches));
  }
  return all;
}

Census run_census(CensusTarget target, std::shared_ptr<const Mcq> x,
                  std::shared_ptr<const FiniteRing> r,
                  const CensusOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  require_valid(check_mcq(*x), "census mcq");
  require_valid(check_ring(*r), "census ring");
  const FiniteModule m = regular_module(*r, options.budget);

  Census c;
  c.target = target;
  c.mcq_order = x->order();
  c.ring_order = r->order();
  c.cell_count = census_cell_count(target, *x);
  c.space_size = bounded_pow(c.ring_order, c.cell_count,
                             std::numeric_limits<std::uint64_t>::max());
  const Job job{target, x, r, &m, &options};

  Partial all;
  if (c.space_size && *c.space_size <= options.budget.max_census) {
    c.mode = CensusMode::exhaustive;
    all = run_partitioned(*c.space_size, options.jobs,
                          [&](std::uint64_t lo, std::uint64_t hi, Partial& part) {
                            for (std::uint64_t i = lo; i < hi; ++i) {
                              const auto cells =
                                  census_cells(i, c.cell_count, c.ring_order);
                              CensusRecord rec = evaluate(job, cells, part);
                              rec.index = i;
                              record(part, std::move(rec), cells, options.keep_records);
                            }
                          });
  } else {
    c.mode = CensusMode::sampled;
    c.seed = options.seed;
    c.sample_size = options.sample_size;
    // Drawn up front so the sample does not depend on the worker count.
    std::mt19937_64 rng(options.seed);
    std::vector<std::vector<Elem>> samples(options.sample_size);
    for (auto& s : samples) {
      s.resize(c.cell_count);
      for (auto& v : s) v = static_cast<Elem>(rng() % c.ring_order);
    }
    all = run_partitioned(samples.size(), options.jobs,
                          [&](std::uint64_t lo, std::uint64_t hi, Partial& part) {
                            for (std::uint64_t i = lo; i < hi; ++i) {
                              CensusRecord rec = evaluate(job, samples[i], part);
                              rec.index = i;
                              if (options.keep_records) rec.cells = samples[i];
                              record(part, std::move(rec), samples[i], options.keep_records);
                            }
                          });
  }
  c.examined = all.examined;
  c.structure_valid = all.structure_valid;
  c.extension_valid = all.extension_valid;
  c.reduction_checked = all.reduction_checked;
  c.reduction_failed = all.reduction_failed;
  c.records = std::move(all.records);
  c.mismatches = std::move(all.mismatches);
  c.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return c;
}

const char* structure_key(CensusTarget t) {
  return t == CensusTarget::pairs ? "pair_ok" : "quad_ok";
}

}  // namespace

std::size_t census_cell_count(CensusTarget target, const Mcq& x) {
  const std::size_t n = x.order();
  return 2 * n * n + (target == CensusTarget::quadruples ? 2 * block_cells(x) : 0);
}

std::vector<Elem> census_cells(std::uint64_t index, std::size_t cell_count,
                               std::size_t ring_order) {
  std::vector<Elem> cells(cell_count);
  for (auto& v : cells) {
    v = static_cast<Elem>(index % ring_order);
    index /= ring_order;
  }
  return cells;
}

AlexanderPair pair_from_cells(std::shared_ptr<const Mcq> x,
                              std::shared_ptr<const FiniteRing> r,
                              const std::vector<Elem>& cells) {
  const std::size_t n = x->order();
  if (cells.size() != census_cell_count(CensusTarget::pairs, *x)) {
    throw StructuralError("pair_from_cells: wrong cell count");
  }
  auto it = cells.cbegin();
  Table f1 = take_table(n, n, it);
  Table f2 = take_table(n, n, it);
  return AlexanderPair(std::move(x), std::move(r), std::move(f1), std::move(f2));
}

Quadruple quadruple_from_cells(std::shared_ptr<const Mcq> x,
                               std::shared_ptr<const FiniteRing> r,
                               const std::vector<Elem>& cells) {
  const std::size_t n = x->order();
  if (cells.size() != census_cell_count(CensusTarget::quadruples, *x)) {
    throw StructuralError("quadruple_from_cells: wrong cell count");
  }
  auto it = cells.cbegin();
  Table f1 = take_table(n, n, it);
  Table f2 = take_table(n, n, it);
  BlockTable f3 = take_blocks(*x, it);
  BlockTable f4 = take_blocks(*x, it);
  return Quadruple(std::move(x), std::move(r), std::move(f1), std::move(f2),
                   std::move(f3), std::move(f4));
}

Census enumerate_pairs(std::shared_ptr<const Mcq> x,
                       std::shared_ptr<const FiniteRing> r,
                       const CensusOptions& options) {
  return run_census(CensusTarget::pairs, std::move(x), std::move(r), options);
}

Census enumerate_quadruples(std::shared_ptr<const Mcq> x,
                            std::shared_ptr<const FiniteRing> r,
                            const CensusOptions& options) {
  return run_census(CensusTarget::quadruples, std::move(x), std::move(r), options);
}

nlohmann::json census_record_json(const Census& c, const CensusRecord& r) {
  nlohmann::json j;
  if (c.mode == CensusMode::exhaustive) {
    j["index"] = r.index;
  } else {
    j["sample"] = r.index;
  }
  if (!r.cells.empty()) j["cells"] = r.cells;
  j[structure_key(c.target)] = r.structure_ok;
  j["extension_ok"] = r.extension_ok;
  if (r.reduction_ok) j["reduction_ok"] = *r.reduction_ok;
  return j;
}

nlohmann::json census_report(const Census& c, bool with_timing) {
  nlohmann::json j;
  j["kind"] = "census";
  j["target"] = c.target == CensusTarget::pairs ? "pairs" : "quadruples";
  j["mode"] = c.mode == CensusMode::exhaustive ? "exhaustive" : "sampled";
  j["mcq_order"] = c.mcq_order;
  j["ring_order"] = c.ring_order;
  j["cells"] = c.cell_count;
  if (c.space_size) {
    j["space_size"] = *c.space_size;
  } else {
    j["space_size"] = nullptr;
  }
  j["examined"] = c.examined;
  j[c.target == CensusTarget::pairs ? "valid_pairs" : "valid_quadruples"] =
      c.structure_valid;
  j["valid_extensions"] = c.extension_valid;
  if (c.reduction_checked > 0) {
    j["reductions_checked"] = c.reduction_checked;
    j["reductions_failed"] = c.reduction_failed;
  }
  if (c.mode == CensusMode::sampled) {
    j["seed"] = c.seed;
    j["sample_size"] = c.sample_size;
  }
  auto mism = nlohmann::json::array();
  for (const auto& r : c.mismatches) mism.push_back(census_record_json(c, r));
  j["mismatches"] = std::move(mism);
  if (with_timing) j["elapsed_ms"] = c.elapsed.count();
  return j;
}

}  // namespace linext
