#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace qp {

/// One line of the append-only result ledger:
/// `timestamp=...;d=...;kind=...;n=...;t=...;elem=...;norm=...`
struct LedgerRecord {
  std::int64_t timestamp = 0;  // UTC seconds
  int d = 0;
  std::string kind;  // t-perfect | n-powerful | mersenne
  int n = 0;
  std::string t;
  std::string elem;
  std::string norm;

  bool operator==(LedgerRecord const&) const = default;
};

std::string format_ledger_record(LedgerRecord const& r);
LedgerRecord parse_ledger_record(std::string_view line);

/// Appends one line with a single write(2) on an O_APPEND descriptor.
/// Throws std::runtime_error on I/O failure.
void append_ledger(std::filesystem::path const& path, LedgerRecord const& r);
/// Missing file reads as empty.
std::vector<LedgerRecord> read_ledger(std::filesystem::path const& path);

/// One completed search shard:
/// `d=-11 n=1 t=2 norm_lo=1 norm_hi=1048576 hits=28;8128`
struct ShardRecord {
  int d = 0;
  int n = 0;
  unsigned t = 0;
  std::uint64_t norm_lo = 0;
  std::uint64_t norm_hi = 0;
  std::vector<std::string> hits;

  bool operator==(ShardRecord const&) const = default;
};

std::string format_shard_record(ShardRecord const& r);
ShardRecord parse_shard_record(std::string_view line);

void append_checkpoint(std::filesystem::path const& path, ShardRecord const& r);
/// Missing file reads as empty.
std::vector<ShardRecord> read_checkpoint(std::filesystem::path const& path);

}  // namespace qp
