#include "permclass/frontier_queue.hpp"

#include <algorithm>
#include <cerrno>
#include <cstring>
#include <stdexcept>

#include <fmt/format.h>

namespace permclass {

FrontierQueue::FrontierQueue(std::uint64_t memory_cap_bytes) : cap_bytes_(memory_cap_bytes) {}

FrontierQueue::~FrontierQueue() = default;

void FrontierQueue::push(std::vector<Rank>&& chunk) {
  if (chunk.empty()) return;
  std::lock_guard lock(mutex_);
  total_ += chunk.size();
  const std::uint64_t bytes = chunk.size() * sizeof(Rank);
  if (memory_bytes_ + bytes > cap_bytes_ && !memory_.empty()) {
    spill(std::move(chunk));
    return;
  }
  memory_bytes_ += bytes;
  memory_.push_back(std::move(chunk));
}

bool FrontierQueue::pop(std::vector<Rank>& chunk) {
  std::lock_guard lock(mutex_);
  if (!memory_.empty()) {
    chunk = std::move(memory_.back());
    memory_.pop_back();
    memory_bytes_ -= chunk.size() * sizeof(Rank);
    total_ -= chunk.size();
    return true;
  }
  if (unspill(chunk)) {
    total_ -= chunk.size();
    return true;
  }
  return false;
}

bool FrontierQueue::empty() const {
  std::lock_guard lock(mutex_);
  return total_ == 0;
}

std::uint64_t FrontierQueue::size() const {
  std::lock_guard lock(mutex_);
  return total_;
}

std::uint64_t FrontierQueue::chunk_count() const {
  std::lock_guard lock(mutex_);
  return memory_.size() + runs_.size();
}

std::uint64_t FrontierQueue::spilled_runs() const {
  std::lock_guard lock(mutex_);
  return spilled_runs_;
}

void FrontierQueue::spill(std::vector<Rank>&& chunk) {
  if (!file_) {
    file_.reset(std::tmpfile());
    if (!file_) {
      throw std::runtime_error(
          fmt::format("cannot create frontier spill file: {}", std::strerror(errno)));
    }
  }
  std::sort(chunk.begin(), chunk.end());
  std::fseek(file_.get(), file_end_, SEEK_SET);
  if (std::fwrite(chunk.data(), sizeof(Rank), chunk.size(), file_.get()) != chunk.size()) {
    throw std::runtime_error("short write to frontier spill file");
  }
  runs_.push_back(Run{file_end_, chunk.size()});
  file_end_ += static_cast<long>(chunk.size() * sizeof(Rank));
  ++spilled_runs_;
}

bool FrontierQueue::unspill(std::vector<Rank>& chunk) {
  if (runs_.empty()) return false;
  const Run run = runs_.back();
  runs_.pop_back();
  chunk.resize(run.count);
  std::fflush(file_.get());
  std::fseek(file_.get(), run.offset, SEEK_SET);
  if (std::fread(chunk.data(), sizeof(Rank), run.count, file_.get()) != run.count) {
    throw std::runtime_error("short read from frontier spill file");
  }
  // Runs are consumed last-in first-out, so the file shrinks back.
  file_end_ = run.offset;
  return true;
}

}  // namespace permclass
