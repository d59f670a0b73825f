#include "orientdom/harness/cache.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "orientdom/error.hpp"

namespace orientdom::harness {

namespace {

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;

void mix(std::uint64_t& h, std::uint64_t word) {
  for (int i = 0; i < 8; ++i) {
    h ^= (word >> (8 * i)) & 0xff;
    h *= kFnvPrime;
  }
}

}  // namespace

DomCache::DomCache(std::filesystem::path dir, std::string version)
    : file_(std::move(dir) / "dom-cache.tsv"), version_(std::move(version)) {}

std::string DomCache::key(const UndirectedGraph& g) {
  std::uint64_t h = kFnvOffset;
  mix(h, g.order());
  mix(h, g.size());
  for (const Edge& e : g.edges()) mix(h, (static_cast<std::uint64_t>(e.u) << 32) | e.v);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::optional<std::size_t> DomCache::lookup(const UndirectedGraph& g) {
  std::ifstream in(file_);
  if (!in) return std::nullopt;
  const std::string wanted = key(g);
  std::optional<std::size_t> hit;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string hash, value_text, version;
    if (!std::getline(fields, hash, '\t') || !std::getline(fields, value_text, '\t') ||
        !std::getline(fields, version) || hash.size() != 16 || value_text.empty() ||
        value_text.find_first_not_of("0123456789") != std::string::npos) {
      warnings_.push_back(file_.string() + ":" + std::to_string(line_no) + ": skipping corrupt cache line");
      continue;
    }
    // Later lines win, so a re-stored value supersedes an older one.
    if (hash == wanted && version == version_) hit = std::stoul(value_text);
  }
  return hit;
}

void DomCache::store(const UndirectedGraph& g, std::size_t value) {
  std::error_code ec;
  std::filesystem::create_directories(file_.parent_path(), ec);
  std::ofstream out(file_, std::ios::app);
  if (!out) throw Error(Errc::invalid_argument, "cannot write cache file " + file_.string());
  out << key(g) << '\t' << value << '\t' << version_ << '\n';
}

}  // namespace orientdom::harness
