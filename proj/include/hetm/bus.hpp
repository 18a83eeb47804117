#ifndef HETM_BUS_HPP
#define HETM_BUS_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <mutex>
#include <string>
#include <vector>

#include "hetm/types.hpp"
#include "hetm/write_log.hpp"

namespace hetm {

enum class BusDir : std::uint8_t { HostToDev = 0, DevToHost = 1, DevToDev = 2 };

inline const char* toString(BusDir d) {
    switch (d) {
        case BusDir::HostToDev: return "host->dev";
        case BusDir::DevToHost: return "dev->host";
        case BusDir::DevToDev: return "dev->dev";
    }
    return "?";
}

struct TransferRecord {
    BusDir dir;
    std::uint64_t bytes;
    std::string tag;
    double simTime;  // bus clock after this transfer completed
};

struct BusConfig {
    double latencyPerTransfer = 2.0;  // simulated time units
    double bytesPerTimeUnit = 8192.0;
    // When > 0, each transfer also sleeps cost * realDelayMicrosPerUnit
    // microseconds, turning the accounting model into real backpressure.
    double realDelayMicrosPerUnit = 0.0;
};

/// A slice of one host thread's write log in flight to the device.
struct LogChunk {
    std::vector<WriteLogEntry> entries;
    int sourceThread = 0;
    std::uint64_t seq = 0;  // unique per round

    std::uint64_t wireBytes() const { return entries.size() * kLogEntryWireBytes; }
};

struct Delivery {
    std::uint64_t seq = 0;
    std::size_t nEntries = 0;
    double cost = 0.0;
    bool delivered = false;
};

/// Simulated PCIe-like interconnect: cost accounting plus an ordered transfer
/// log for assertions. Time is accounting-only unless real delays are
/// configured.
class Bus {
public:
    explicit Bus(BusConfig cfg = {});

    double cost(std::uint64_t bytes) const {
        return cfg_.latencyPerTransfer + static_cast<double>(bytes) / cfg_.bytesPerTimeUnit;
    }

    /// Records one transfer and returns its cost.
    double record(BusDir dir, std::uint64_t bytes, std::string_view tag);

    /// Chunks are accepted only while the round's log intake is open; the
    /// merge phase closes it.
    void openLogIntake();
    void closeLogIntake();
    bool logIntakeOpen() const;

    /// Streams one log chunk host->device. The chunk is handed to the
    /// registered sink (device-side staging) after the transfer is recorded.
    Delivery streamChunk(LogChunk chunk);

    void setChunkSink(std::function<void(LogChunk&&)> sink) { sink_ = std::move(sink); }

    double totalBusTime() const;
    std::uint64_t bytesFor(BusDir dir) const;
    std::vector<TransferRecord> transferLog() const;
    std::size_t transferCount() const;
    void clearLog();

    /// CSV export: direction,bytes,tag,simTime.
    void writeTransferCsv(std::ostream& os) const;

    const BusConfig& config() const { return cfg_; }

private:
    BusConfig cfg_;
    mutable std::mutex mutex_;
    std::vector<TransferRecord> log_;
    double busTime_ = 0.0;
    bool intakeOpen_ = true;
    std::function<void(LogChunk&&)> sink_;
};

}  // namespace hetm

#endif
