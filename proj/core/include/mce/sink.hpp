#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <mutex>
#include <unordered_set>
#include <vector>

#include "mce/types.hpp"

namespace mce {

// Consumer of finished maximal cliques. Cliques arrive in canonical form
// (ascending ids). Implementations must tolerate concurrent emission.
class CliqueSink {
public:
    virtual ~CliqueSink() = default;
    virtual void emit(const Clique& c) = 0;
};

class CountingSink final : public CliqueSink {
public:
    void emit(const Clique&) override { count_.fetch_add(1, std::memory_order_relaxed); }
    std::uint64_t count() const { return count_.load(); }

private:
    std::atomic<std::uint64_t> count_{0};
};

// Collects into a set keyed by canonical form. duplicates() tracks emissions
// whose key was already present, so tests can assert exactly-once delivery.
class CollectingSink final : public CliqueSink {
public:
    void emit(const Clique& c) override {
        std::lock_guard lock(mu_);
        if (!cliques_.insert(c).second) ++duplicates_;
    }

    std::vector<Clique> sorted() const {
        std::lock_guard lock(mu_);
        std::vector<Clique> out(cliques_.begin(), cliques_.end());
        std::sort(out.begin(), out.end());
        return out;
    }
    std::size_t size() const {
        std::lock_guard lock(mu_);
        return cliques_.size();
    }
    std::uint64_t duplicates() const {
        std::lock_guard lock(mu_);
        return duplicates_;
    }
    bool contains(const Clique& c) const {
        std::lock_guard lock(mu_);
        return cliques_.count(c) != 0;
    }

private:
    mutable std::mutex mu_;
    std::unordered_set<Clique, CliqueHash> cliques_;
    std::uint64_t duplicates_ = 0;
};

// Size histogram plus count; streams, does not materialize cliques.
class StatsSink final : public CliqueSink {
public:
    void emit(const Clique& c) override {
        std::lock_guard lock(mu_);
        ++histogram_[c.size()];
        ++count_;
        if (c.size() > max_size_) max_size_ = c.size();
    }

    std::map<std::size_t, std::uint64_t> histogram() const {
        std::lock_guard lock(mu_);
        return histogram_;
    }
    std::uint64_t count() const {
        std::lock_guard lock(mu_);
        return count_;
    }
    std::size_t max_clique_size() const {
        std::lock_guard lock(mu_);
        return max_size_;
    }

private:
    mutable std::mutex mu_;
    std::map<std::size_t, std::uint64_t> histogram_;
    std::uint64_t count_ = 0;
    std::size_t max_size_ = 0;
};

}  // namespace mce
