#include "core/container.hpp"

#include <zlib.h>

#include <array>
#include <bit>
#include <cstring>
#include <vector>

static_assert(std::endian::native == std::endian::little,
              "opswe container I/O assumes a little-endian host");

namespace opswe::io {

namespace {

constexpr char kMagic[4] = {'O', 'P', 'S', 'W'};
constexpr std::size_t kTagBytes = 16;

std::uint32_t crc_update(std::uint32_t crc, const void* p, std::size_t bytes) {
  return static_cast<std::uint32_t>(
      ::crc32(crc, static_cast<const Bytef*>(p), static_cast<uInt>(bytes)));
}

void write_raw(std::ofstream& out, const void* p, std::size_t bytes, const std::string& path) {
  out.write(static_cast<const char*>(p), static_cast<std::streamsize>(bytes));
  if (!out) throw std::runtime_error("opsw: write failed: " + path);
}

void read_raw(std::ifstream& in, void* p, std::size_t bytes, const std::string& path) {
  in.read(static_cast<char*>(p), static_cast<std::streamsize>(bytes));
  if (in.gcount() != static_cast<std::streamsize>(bytes))
    throw FormatError("opsw: truncated file: " + path);
}

}  // namespace

Writer::Writer(const std::string& path, const ContainerHeader& hdr) : out_(path, std::ios::binary), path_(path) {
  if (!out_) throw std::runtime_error("opsw: cannot open for writing: " + path);
  write_raw(out_, kMagic, 4, path_);
  const std::uint32_t version = kFormatVersion;
  const std::uint32_t kind = static_cast<std::uint32_t>(hdr.kind);
  write_raw(out_, &version, 4, path_);
  write_raw(out_, &kind, 4, path_);
  write_raw(out_, &hdr.nx, 4, path_);
  write_raw(out_, &hdr.ny, 4, path_);
  write_raw(out_, &hdr.rows, 8, path_);
  write_raw(out_, &hdr.cols, 8, path_);
  write_raw(out_, &hdr.mu, 8, path_);
  std::array<char, kTagBytes> tag{};
  std::snprintf(tag.data(), kTagBytes, "%s", hdr.tag.c_str());
  write_raw(out_, tag.data(), kTagBytes, path_);
  write_raw(out_, &hdr.config_hash, 8, path_);
}

Writer::~Writer() {
  if (!finished_ && out_.is_open()) out_.close();
}

void Writer::put(const void* p, std::size_t bytes) {
  crc_ = crc_update(crc_, p, bytes);
  write_raw(out_, p, bytes, path_);
}

void Writer::write_f64(const double* p, std::size_t count) { put(p, count * sizeof(double)); }

void Writer::write_u64(std::uint64_t v) { put(&v, 8); }

void Writer::write_matrix(const Eigen::MatrixXd& m) {
  write_f64(m.data(), static_cast<std::size_t>(m.size()));
}

void Writer::finish() {
  write_raw(out_, &crc_, 4, path_);
  out_.close();
  if (!out_) throw std::runtime_error("opsw: close failed: " + path_);
  finished_ = true;
}

Reader::Reader(const std::string& path) : in_(path, std::ios::binary), path_(path) {
  if (!in_) throw std::runtime_error("opsw: cannot open: " + path);
  char magic[4];
  read_raw(in_, magic, 4, path_);
  if (std::memcmp(magic, kMagic, 4) != 0)
    throw FormatError("opsw: bad magic in " + path);
  std::uint32_t version = 0, kind = 0;
  read_raw(in_, &version, 4, path_);
  if (version != kFormatVersion)
    throw FormatError("opsw: unsupported format version in " + path);
  read_raw(in_, &kind, 4, path_);
  if (kind < 1 || kind > 4) throw FormatError("opsw: unknown payload kind in " + path);
  hdr_.kind = static_cast<PayloadKind>(kind);
  read_raw(in_, &hdr_.nx, 4, path_);
  read_raw(in_, &hdr_.ny, 4, path_);
  read_raw(in_, &hdr_.rows, 8, path_);
  read_raw(in_, &hdr_.cols, 8, path_);
  read_raw(in_, &hdr_.mu, 8, path_);
  std::array<char, kTagBytes> tag{};
  read_raw(in_, tag.data(), kTagBytes, path_);
  tag.back() = '\0';
  hdr_.tag = tag.data();
  read_raw(in_, &hdr_.config_hash, 8, path_);
}

void Reader::get(void* p, std::size_t bytes) {
  read_raw(in_, p, bytes, path_);
  crc_ = crc_update(crc_, p, bytes);
}

void Reader::read_f64(double* p, std::size_t count) { get(p, count * sizeof(double)); }

std::uint64_t Reader::read_u64() {
  std::uint64_t v = 0;
  get(&v, 8);
  return v;
}

Eigen::MatrixXd Reader::read_matrix(Eigen::Index rows, Eigen::Index cols) {
  Eigen::MatrixXd m(rows, cols);
  read_f64(m.data(), static_cast<std::size_t>(m.size()));
  return m;
}

void Reader::finish() {
  std::uint32_t stored = 0;
  read_raw(in_, &stored, 4, path_);
  if (stored != crc_) throw FormatError("opsw: payload checksum mismatch in " + path_);
}

std::uint32_t file_crc32(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::vector<char> buf(1 << 16);
  std::uint32_t crc = 0;
  while (in) {
    in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
    const std::streamsize got = in.gcount();
    if (got > 0) crc = crc_update(crc, buf.data(), static_cast<std::size_t>(got));
  }
  return crc;
}

}  // namespace opswe::io
