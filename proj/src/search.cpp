#include "sedf/search.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "sedf/params.hpp"

namespace sedf {

namespace {

std::uint64_t fnv1a(std::uint64_t h, std::uint64_t v) {
  h ^= v;
  return h * 1099511627776003ULL;
}

// one backtracking engine; single-owner state, one instance per worker
class engine {
public:
  engine(const group_ptr& g, int m, int k, int lambda, const search_options& opts)
      : g_(g), n_(g->order()), m_(m), k_(k), lambda_(lambda), opts_(opts) {
    blocks_.assign(m_, {});
    for (auto& b : blocks_) b.reserve(k_);
    bank_.assign(m_, difference_counter(n_));
    scratch_.assign(n_, 0);
  }

  struct work_item {
    std::vector<std::vector<int>> blocks;
    int p;
    bool partial_ok; // pending check outcome from the placement edge
  };

  // run from the seeded root; collect_at < 0 explores everything here
  void run_root(int collect_at, std::vector<work_item>* items) {
    blocks_[0].push_back(0);
    placed_ = 1;
    collect_at_ = collect_at;
    items_ = items;
    rec(1, true);
  }

  void run_item(const work_item& item) {
    blocks_ = item.blocks;
    placed_ = 0;
    for (int i = 0; i < m_; ++i) placed_ += static_cast<int>(blocks_[i].size());
    for (auto& c : bank_) c.rollback(0);
    // bank_[i] = every ordered cross-pair difference led by block i
    for (int i = 0; i < m_; ++i)
      for (int j = 0; j < m_; ++j) {
        if (j == i) continue;
        for (int x : blocks_[i])
          for (int y : blocks_[j]) bank_[i].add(g_->rdiv(x, y));
      }
    collect_at_ = -1;
    items_ = nullptr;
    rec(item.p, item.partial_ok);
  }

  search_result take_result() {
    search_result r;
    r.families = std::move(found_);
    r.stats.nodes = nodes_;
    r.stats.families = r.families.size();
    r.node_log = std::move(log_);
    return r;
  }

  bool stopped() const { return stop_; }

private:
  // increments for every external pair involving x in block i; reports
  // whether all touched tallies stayed within lambda
  bool count_pairs_of(int i, int x) {
    bool ok = true;
    for (int j = 0; j < m_; ++j) {
      if (j == i) continue;
      for (int y : blocks_[j]) {
        int d = g_->rdiv(x, y), e = g_->rdiv(y, x);
        bank_[i].add(d);
        if (bank_[i].count(d) > lambda_) ok = false;
        bank_[j].add(e);
        if (bank_[j].count(e) > lambda_) ok = false;
      }
    }
    return ok;
  }

  // the printed per-block full recount with early rejection
  bool recount_ok() {
    for (int i1 = 0; i1 < m_; ++i1) {
      std::fill(scratch_.begin(), scratch_.end(), 0);
      for (int i2 = 0; i2 < m_; ++i2) {
        if (i2 == i1) continue;
        for (int j1 : blocks_[i1])
          for (int j2 : blocks_[i2])
            if (++scratch_[g_->rdiv(j1, j2)] > lambda_) return false;
      }
    }
    return true;
  }

  void log_node(int p) {
    if (!opts_.log_nodes) return;
    std::uint64_t h = fnv1a(1469598103934665603ULL, static_cast<std::uint64_t>(p));
    for (const auto& b : blocks_) {
      for (int x : b) h = fnv1a(h, static_cast<std::uint64_t>(x) + 1);
      h = fnv1a(h, 0);
    }
    log_.push_back(h);
  }

  // p counts decided elements: indices below p are placed or skipped for good
  void rec(int p, bool partial_ok) {
    if (stop_) return;
    if (collect_at_ >= 0 && placed_ == collect_at_) {
      items_->push_back({blocks_, p, partial_ok});
      return;
    }
    ++nodes_;
    log_node(p);
    if (opts_.naive_check ? !recount_ok() : !partial_ok) return;
    if (m_ * k_ - placed_ > n_ - p) return; // too few values left to finish
    if (placed_ == m_ * k_) {
      found_.push_back(block_family{g_, blocks_});
      if (opts_.first_only) stop_ = true;
      return;
    }

    rec(p + 1, true); // families omitting element p
    if (stop_) return;

    for (int i = 0; i < m_; ++i) {
      if (static_cast<int>(blocks_[i].size()) == k_) continue;
      bool was_empty = blocks_[i].empty();
      std::vector<std::size_t> marks(m_);
      for (int t = 0; t < m_; ++t) marks[t] = bank_[t].mark();
      blocks_[i].push_back(p);
      ++placed_;
      bool ok = count_pairs_of(i, p);
      rec(p + 1, ok);
      --placed_;
      blocks_[i].pop_back();
      for (int t = 0; t < m_; ++t) bank_[t].rollback(marks[t]);
      if (stop_) return;
      if (was_empty) return; // only the first empty block is a fresh branch
    }
  }

  group_ptr g_;
  int n_, m_, k_, lambda_;
  search_options opts_;

  std::vector<std::vector<int>> blocks_;
  std::vector<difference_counter> bank_;
  std::vector<int> scratch_;
  int placed_ = 0;
  int collect_at_ = -1;
  std::vector<work_item>* items_ = nullptr;

  std::vector<block_family> found_;
  std::uint64_t nodes_ = 0;
  std::vector<std::uint64_t> log_;
  bool stop_ = false;
};

void sort_families(std::vector<block_family>& fams) {
  std::sort(fams.begin(), fams.end(),
            [](const block_family& a, const block_family& b) { return a.blocks < b.blocks; });
}

} // namespace

search_result search_all(group_ptr g, int m, int k, int lambda, const search_options& opts) {
  if (!g) throw parameter_error("group required");
  int n = g->order();
  if (n > 64 && !opts.allow_large)
    throw parameter_error("order exceeds the default search bound of 64");
  if (!is_admissible(n, m, k, lambda))
    throw parameter_error("parameters violate the admissibility identity");

  int jobs = std::max(1, opts.jobs);
  bool parallel = jobs > 1 && !opts.first_only && !opts.log_nodes && m * k > opts.split_placed;

  if (!parallel) {
    engine e(g, m, k, lambda, opts);
    e.run_root(-1, nullptr);
    auto r = e.take_result();
    sort_families(r.families);
    return r;
  }

  std::vector<engine::work_item> items;
  engine collector(g, m, k, lambda, opts);
  collector.run_root(opts.split_placed, &items);
  auto base = collector.take_result();

  std::vector<search_result> per_item(items.size());
  std::atomic<std::size_t> next{0};
  auto drain = [&]() {
    for (;;) {
      std::size_t idx = next.fetch_add(1);
      if (idx >= items.size()) break;
      engine e(g, m, k, lambda, opts);
      e.run_item(items[idx]);
      per_item[idx] = e.take_result();
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(drain);
  drain();
  for (auto& th : pool) th.join();

  search_result out;
  out.families = std::move(base.families);
  out.stats = base.stats;
  for (auto& r : per_item) {
    out.stats.nodes += r.stats.nodes;
    for (auto& f : r.families) out.families.push_back(std::move(f));
  }
  out.stats.families = out.families.size();
  sort_families(out.families);
  return out;
}

std::optional<block_family> search_first(group_ptr g, int m, int k, int lambda,
                                         const search_options& opts) {
  search_options first = opts;
  first.first_only = true;
  first.jobs = 1;
  auto r = search_all(std::move(g), m, k, lambda, first);
  if (r.families.empty()) return std::nullopt;
  return r.families.front();
}

} // namespace sedf
