#include "fanoturan/checkpoint.hpp"

#include <array>

#include "fanoturan/error.hpp"

namespace fanoturan {
namespace {


template <typename T>
void put(std::vector<char>& buf, T v) {
  for (std::size_t i = 0; i < sizeof(T); ++i) buf.push_back(static_cast<char>(v >> (8 * i) & 0xff));
}

template <typename T>
bool get(const std::vector<char>& buf, std::size_t& pos, T& v) {
  if (pos + sizeof(T) > buf.size()) return false;
  v = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) v |= static_cast<T>(static_cast<unsigned char>(buf[pos + i])) << (8 * i);
  pos += sizeof(T);
  return true;
}

std::vector<char> encode_header(const CheckpointHeader& h) {
  std::vector<char> buf;
  put<std::uint8_t>(buf, kCheckpointVersion);
  put(buf, h.universe);
  put(buf, h.size);
  put(buf, h.digest);
  return buf;
}

struct Parsed {
  std::optional<CheckpointFrame> last;
  std::size_t valid_bytes = 0;
};

Parsed parse(const std::filesystem::path& path, const CheckpointHeader& header) {
  std::ifstream in(path, std::ios::binary);
  std::vector<char> buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::size_t pos = 0;
  std::uint8_t version = 0;
  CheckpointHeader h;
  if (!get(buf, pos, version) || !get(buf, pos, h.universe) || !get(buf, pos, h.size) || !get(buf, pos, h.digest))
    throw ParameterError("checkpoint " + path.string() + " has a truncated header");
  if (version != kCheckpointVersion)
    throw ParameterError("checkpoint " + path.string() + " has format version " + std::to_string(version));
  if (h != header) throw ParameterError("checkpoint " + path.string() + " belongs to a different scan");
  Parsed p;
  p.valid_bytes = pos;
  while (true) {
    CheckpointFrame f;
    std::uint32_t count = 0;
    if (!get(buf, pos, f.frontier) || !get(buf, pos, f.visited) || !get(buf, pos, f.nodes) || !get(buf, pos, count))
      break;
    f.survivors.resize(count);
    bool whole = true;
    for (auto& s : f.survivors) whole = whole && get(buf, pos, s);
    if (!whole) break;
    p.last = std::move(f);
    p.valid_bytes = pos;
  }
  return p;
}

}  // namespace

std::uint64_t pattern_digest(std::span<const std::uint64_t> patterns) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (auto p : patterns)
    for (int i = 0; i < 8; ++i) {
      h ^= p >> (8 * i) & 0xff;
      h *= 0x100000001b3ULL;
    }
  return h;
}

std::optional<CheckpointFrame> load_checkpoint(const std::filesystem::path& path, const CheckpointHeader& header) {
  if (!std::filesystem::exists(path)) return std::nullopt;
  return parse(path, header).last;
}

CheckpointWriter::CheckpointWriter(const std::filesystem::path& path, const CheckpointHeader& header) {
  if (std::filesystem::exists(path)) {
    const auto p = parse(path, header);
    std::filesystem::resize_file(path, p.valid_bytes);
    out_.open(path, std::ios::binary | std::ios::app);
  } else {
    out_.open(path, std::ios::binary | std::ios::trunc);
    const auto h = encode_header(header);
    out_.write(h.data(), static_cast<std::streamsize>(h.size()));
    out_.flush();
  }
  if (!out_) throw ParameterError("cannot write checkpoint " + path.string());
}

void CheckpointWriter::append(const CheckpointFrame& frame) {
  std::vector<char> buf;
  put(buf, frame.frontier);
  put(buf, frame.visited);
  put(buf, frame.nodes);
  put(buf, static_cast<std::uint32_t>(frame.survivors.size()));
  for (auto s : frame.survivors) put(buf, s);
  out_.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  out_.flush();
}

}  // namespace fanoturan
