#include "iso_search.hpp"

#include <algorithm>
#include <utility>

namespace linext::detail {

std::vector<std::uint64_t> op_signature(const Table& op, Elem a) {
  const std::size_t n = op.rows();
  std::uint64_t fixed = 0, stab = 0;
  for (Elem x = 0; x < n; ++x) {
    if (op(x, a) == x) ++fixed;
    if (op(a, x) == a) ++stab;
  }
  std::vector<std::uint64_t> sig{fixed, stab};
  std::vector<std::uint64_t> cycles;
  std::vector<bool> seen(n, false);
  for (Elem x = 0; x < n; ++x) {
    if (seen[x]) continue;
    std::uint64_t len = 0;
    Elem y = x;
    while (!seen[y]) {
      seen[y] = true;
      y = op(y, a);
      ++len;
    }
    cycles.push_back(len);
  }
  std::sort(cycles.begin(), cycles.end());
  sig.insert(sig.end(), cycles.begin(), cycles.end());
  return sig;
}

namespace {

constexpr std::size_t kNoBlock = static_cast<std::size_t>(-1);

class Search {
 public:
  Search(const IsoView& a, const IsoView& b, std::size_t limit)
      : a_(a), b_(b), n_(a.op->rows()), limit_(limit),
        f_(n_, kNone), finv_(n_, kNone),
        bmap_(a.block_count, kNoBlock), bmapinv_(b.block_count, kNoBlock) {}

  std::vector<std::vector<Elem>> run() {
    if (n_ == 0) return {};
    recurse();
    return std::move(found_);
  }

 private:
  bool blocked() const { return a_.mul != nullptr; }

  bool assign(Elem x, Elem y) {
    std::vector<std::pair<Elem, Elem>> queue{{x, y}};
    while (!queue.empty()) {
      auto [s, t] = queue.back();
      queue.pop_back();
      if (t == kNone) return false;
      if (f_[s] != kNone) {
        if (f_[s] != t) return false;
        continue;
      }
      if (finv_[t] != kNone) return false;
      if (a_.signature[s] != b_.signature[t]) return false;
      if (blocked()) {
        const std::size_t bs = a_.block[s], bt = b_.block[t];
        if (bmap_[bs] == kNoBlock && bmapinv_[bt] == kNoBlock) {
          bmap_[bs] = bt;
          bmapinv_[bt] = bs;
          block_trail_.push_back(bs);
        } else if (bmap_[bs] != bt || bmapinv_[bt] != bs) {
          return false;
        }
      }
      f_[s] = t;
      finv_[t] = s;
      trail_.push_back(s);
      for (Elem c : trail_) {
        const Elem fc = f_[c];
        queue.emplace_back((*a_.op)(s, c), (*b_.op)(t, fc));
        queue.emplace_back((*a_.op)(c, s), (*b_.op)(fc, t));
        if (blocked() && a_.block[s] == a_.block[c]) {
          queue.emplace_back((*a_.mul)(s, c), (*b_.mul)(t, fc));
          queue.emplace_back((*a_.mul)(c, s), (*b_.mul)(fc, t));
        }
      }
    }
    return true;
  }

  void undo(std::size_t trail_size, std::size_t block_size) {
    while (trail_.size() > trail_size) {
      const Elem s = trail_.back();
      trail_.pop_back();
      finv_[f_[s]] = kNone;
      f_[s] = kNone;
    }
    while (block_trail_.size() > block_size) {
      const std::size_t bs = block_trail_.back();
      block_trail_.pop_back();
      bmapinv_[bmap_[bs]] = kNoBlock;
      bmap_[bs] = kNoBlock;
    }
  }

  std::vector<Elem> candidates(Elem s) const {
    std::vector<Elem> out;
    for (Elem t = 0; t < n_; ++t) {
      if (finv_[t] != kNone || a_.signature[s] != b_.signature[t]) continue;
      if (blocked()) {
        const std::size_t bs = a_.block[s], bt = b_.block[t];
        if (bmap_[bs] != kNoBlock ? bmap_[bs] != bt : bmapinv_[bt] != kNoBlock)
          continue;
      }
      out.push_back(t);
    }
    return out;
  }

  bool verify() const {
    for (Elem x = 0; x < n_; ++x)
      for (Elem y = 0; y < n_; ++y) {
        if (f_[(*a_.op)(x, y)] != (*b_.op)(f_[x], f_[y])) return false;
        if (blocked() && (*a_.mul)(x, y) != kNone &&
            f_[(*a_.mul)(x, y)] != (*b_.mul)(f_[x], f_[y]))
          return false;
      }
    return true;
  }

  void recurse() {
    if (found_.size() >= limit_) return;
    if (trail_.size() == n_) {
      if (verify()) found_.push_back(f_);
      return;
    }
    // Most constrained unassigned element first.
    Elem pick = kNone;
    std::vector<Elem> best;
    for (Elem s = 0; s < n_; ++s) {
      if (f_[s] != kNone) continue;
      auto c = candidates(s);
      if (pick == kNone || c.size() < best.size()) {
        pick = s;
        best = std::move(c);
        if (best.size() <= 1) break;
      }
    }
    const std::size_t ts = trail_.size(), bs = block_trail_.size();
    for (Elem t : best) {
      if (assign(pick, t)) recurse();
      undo(ts, bs);
      if (found_.size() >= limit_) return;
    }
  }

  const IsoView& a_;
  const IsoView& b_;
  std::size_t n_;
  std::size_t limit_;
  std::vector<Elem> f_, finv_;
  std::vector<std::size_t> bmap_, bmapinv_;
  std::vector<Elem> trail_;
  std::vector<std::size_t> block_trail_;
  std::vector<std::vector<Elem>> found_;
};

}  // namespace

std::vector<std::vector<Elem>> search_isomorphisms(const IsoView& from,
                                                   const IsoView& to,
                                                   std::size_t limit) {
  if (from.op->rows() != to.op->rows() || limit == 0) return {};
  if ((from.mul == nullptr) != (to.mul == nullptr)) return {};
  auto sa = from.signature, sb = to.signature;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return {};
  return Search(from, to, limit).run();
}

}  // namespace linext::detail
