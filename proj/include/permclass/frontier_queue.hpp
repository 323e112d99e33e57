#pragma once

#include <cstdint>
#include <cstdio>
#include <memory>
#include <mutex>
#include <vector>

#include "permclass/perm_core.hpp"

namespace permclass {

// Unordered multi-producer/multi-consumer bag of rank chunks. Once the chunks
// held in memory exceed `memory_cap_bytes`, further chunks are sorted and
// appended to an anonymous temporary file as runs, and read back when the
// in-memory part is exhausted.
class FrontierQueue {
 public:
  explicit FrontierQueue(std::uint64_t memory_cap_bytes);
  ~FrontierQueue();

  FrontierQueue(const FrontierQueue&) = delete;
  FrontierQueue& operator=(const FrontierQueue&) = delete;

  void push(std::vector<Rank>&& chunk);

  // Moves one chunk into `chunk`; false when the queue is empty.
  bool pop(std::vector<Rank>& chunk);

  bool empty() const;
  std::uint64_t size() const;
  std::uint64_t chunk_count() const;
  std::uint64_t spilled_runs() const;

 private:
  struct FileCloser {
    void operator()(std::FILE* f) const noexcept { std::fclose(f); }
  };
  struct Run {
    long offset;
    std::size_t count;
  };

  void spill(std::vector<Rank>&& chunk);
  bool unspill(std::vector<Rank>& chunk);

  mutable std::mutex mutex_;
  std::uint64_t cap_bytes_;
  std::uint64_t memory_bytes_ = 0;
  std::vector<std::vector<Rank>> memory_;
  std::vector<Run> runs_;
  std::unique_ptr<std::FILE, FileCloser> file_;
  long file_end_ = 0;
  std::uint64_t total_ = 0;
  std::uint64_t spilled_runs_ = 0;
};

}  // namespace permclass
