#include "qp/records.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <cerrno>
#include <charconv>
#include <cstring>
#include <fstream>
#include <map>
#include <mutex>
#include <stdexcept>

namespace qp {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t const pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? s.size() - start : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <typename Int>
Int to_int(std::string_view s, std::string_view field) {
  Int value{};
  auto const [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument("bad integer in field '" + std::string(field) + "': '" +
                                std::string(s) + "'");
  }
  return value;
}

std::map<std::string_view, std::string_view> key_values(std::string_view line, char sep) {
  std::map<std::string_view, std::string_view> out;
  for (std::string_view kv : split(line, sep)) {
    if (kv.empty()) continue;
    std::size_t const eq = kv.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("malformed field '" + std::string(kv) + "'");
    }
    out[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  return out;
}

std::string_view require(std::map<std::string_view, std::string_view> const& kv,
                         std::string_view key) {
  auto it = kv.find(key);
  if (it == kv.end()) throw std::invalid_argument("missing field '" + std::string(key) + "'");
  return it->second;
}

void check_value(std::string const& v, std::string_view forbidden) {
  if (v.find_first_of(forbidden) != std::string::npos || v.find('\n') != std::string::npos) {
    throw std::invalid_argument("record value '" + v + "' contains a reserved character");
  }
}

std::mutex& append_mutex() {
  static std::mutex m;
  return m;
}

void append_line(std::filesystem::path const& path, std::string line) {
  line.push_back('\n');
  std::lock_guard lock(append_mutex());
  int const fd = ::open(path.c_str(), O_WRONLY | O_CREAT | O_APPEND | O_CLOEXEC, 0644);
  if (fd < 0) {
    throw std::runtime_error("cannot open " + path.string() + ": " + std::strerror(errno));
  }
  ssize_t const written = ::write(fd, line.data(), line.size());
  int const saved = errno;
  ::close(fd);
  if (written != static_cast<ssize_t>(line.size())) {
    throw std::runtime_error("short write to " + path.string() + ": " + std::strerror(saved));
  }
}

std::vector<std::string> read_lines(std::filesystem::path const& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) out.push_back(std::move(line));
  }
  return out;
}

}  // namespace

std::string format_ledger_record(LedgerRecord const& r) {
  for (auto const* v : {&r.kind, &r.t, &r.elem, &r.norm}) check_value(*v, ";=");
  return "timestamp=" + std::to_string(r.timestamp) + ";d=" + std::to_string(r.d) +
         ";kind=" + r.kind + ";n=" + std::to_string(r.n) + ";t=" + r.t + ";elem=" + r.elem +
         ";norm=" + r.norm;
}

LedgerRecord parse_ledger_record(std::string_view line) {
  auto const kv = key_values(line, ';');
  LedgerRecord r;
  r.timestamp = to_int<std::int64_t>(require(kv, "timestamp"), "timestamp");
  r.d = to_int<int>(require(kv, "d"), "d");
  r.kind = require(kv, "kind");
  if (r.kind != "t-perfect" && r.kind != "n-powerful" && r.kind != "mersenne") {
    throw std::invalid_argument("unknown record kind '" + r.kind + "'");
  }
  r.n = to_int<int>(require(kv, "n"), "n");
  r.t = require(kv, "t");
  r.elem = require(kv, "elem");
  r.norm = require(kv, "norm");
  return r;
}

void append_ledger(std::filesystem::path const& path, LedgerRecord const& r) {
  append_line(path, format_ledger_record(r));
}

std::vector<LedgerRecord> read_ledger(std::filesystem::path const& path) {
  if (!std::filesystem::exists(path)) return {};
  std::vector<LedgerRecord> out;
  for (auto const& line : read_lines(path)) out.push_back(parse_ledger_record(line));
  return out;
}

std::string format_shard_record(ShardRecord const& r) {
  std::string hits;
  for (std::size_t i = 0; i < r.hits.size(); ++i) {
    check_value(r.hits[i], "; =");
    if (i > 0) hits += ';';
    hits += r.hits[i];
  }
  return "d=" + std::to_string(r.d) + " n=" + std::to_string(r.n) + " t=" + std::to_string(r.t) +
         " norm_lo=" + std::to_string(r.norm_lo) + " norm_hi=" + std::to_string(r.norm_hi) +
         " hits=" + hits;
}

ShardRecord parse_shard_record(std::string_view line) {
  auto const kv = key_values(line, ' ');
  ShardRecord r;
  r.d = to_int<int>(require(kv, "d"), "d");
  r.n = to_int<int>(require(kv, "n"), "n");
  r.t = to_int<unsigned>(require(kv, "t"), "t");
  r.norm_lo = to_int<std::uint64_t>(require(kv, "norm_lo"), "norm_lo");
  r.norm_hi = to_int<std::uint64_t>(require(kv, "norm_hi"), "norm_hi");
  if (r.norm_lo > r.norm_hi) throw std::invalid_argument("shard with norm_lo > norm_hi");
  std::string_view const hits = require(kv, "hits");
  if (!hits.empty()) {
    for (std::string_view h : split(hits, ';')) r.hits.emplace_back(h);
  }
  return r;
}

void append_checkpoint(std::filesystem::path const& path, ShardRecord const& r) {
  append_line(path, format_shard_record(r));
}

std::vector<ShardRecord> read_checkpoint(std::filesystem::path const& path) {
  if (!std::filesystem::exists(path)) return {};
  std::vector<ShardRecord> out;
  for (auto const& line : read_lines(path)) out.push_back(parse_shard_record(line));
  return out;
}

}  // namespace qp
