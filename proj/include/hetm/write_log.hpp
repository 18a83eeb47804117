#ifndef HETM_WRITE_LOG_HPP
#define HETM_WRITE_LOG_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "hetm/types.hpp"

namespace hetm {

/// One committed host write: the tuple shipped to the device for validation.
struct WriteLogEntry {
    WordIdx addr = 0;
    Word value = 0;
    Timestamp ts = 0;

    friend bool operator==(const WriteLogEntry&, const WriteLogEntry&) = default;
};

/// Fixed wire size of one entry on the interconnect (8 addr + 8 value + 8 ts).
inline constexpr std::size_t kLogEntryWireBytes = 24;

/// Per-host-thread append-only logs of committed writes. Entries within one
/// thread's log are in commit-timestamp order. Appends come from the owner
/// thread; chunk extraction may run concurrently (log streaming), so each
/// thread slot carries its own lock.
class WriteLog {
public:
    int registerThread() {
        std::lock_guard lk(registryMutex_);
        perThread_.push_back(std::make_unique<ThreadLog>());
        return static_cast<int>(perThread_.size()) - 1;
    }

    int threadCount() const {
        std::lock_guard lk(registryMutex_);
        return static_cast<int>(perThread_.size());
    }

    void append(int thread, std::span<const WriteLogEntry> entries) {
        ThreadLog& tl = *perThread_[static_cast<std::size_t>(thread)];
        std::lock_guard lk(tl.mutex);
        tl.entries.insert(tl.entries.end(), entries.begin(), entries.end());
    }

    std::size_t entryCount(int thread) const {
        ThreadLog& tl = *perThread_[static_cast<std::size_t>(thread)];
        std::lock_guard lk(tl.mutex);
        return tl.entries.size();
    }

    std::size_t totalEntries() const {
        std::size_t n = 0;
        for (int t = 0; t < threadCount(); ++t) n += entryCount(t);
        return n;
    }

    /// Copies entries [from, from+max) of one thread's log.
    std::vector<WriteLogEntry> slice(int thread, std::size_t from, std::size_t max) const {
        ThreadLog& tl = *perThread_[static_cast<std::size_t>(thread)];
        std::lock_guard lk(tl.mutex);
        std::vector<WriteLogEntry> out;
        if (from >= tl.entries.size()) return out;
        std::size_t end = std::min(tl.entries.size(), from + max);
        out.assign(tl.entries.begin() + static_cast<std::ptrdiff_t>(from),
                   tl.entries.begin() + static_cast<std::ptrdiff_t>(end));
        return out;
    }

    std::vector<WriteLogEntry> allEntries() const {
        std::vector<WriteLogEntry> out;
        for (int t = 0; t < threadCount(); ++t) {
            ThreadLog& tl = *perThread_[static_cast<std::size_t>(t)];
            std::lock_guard lk(tl.mutex);
            out.insert(out.end(), tl.entries.begin(), tl.entries.end());
        }
        return out;
    }

    /// Round reset: drops all entries, keeps thread registrations.
    void clearRound() {
        for (int t = 0; t < threadCount(); ++t) {
            ThreadLog& tl = *perThread_[static_cast<std::size_t>(t)];
            std::lock_guard lk(tl.mutex);
            tl.entries.clear();
        }
    }

private:
    struct ThreadLog {
        mutable std::mutex mutex;
        std::vector<WriteLogEntry> entries;
    };

    mutable std::mutex registryMutex_;
    std::vector<std::unique_ptr<ThreadLog>> perThread_;
};

}  // namespace hetm

#endif
