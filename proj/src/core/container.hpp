#pragma once

#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace opswe::io {

/// Little-endian binary container (.opsw) shared by snapshot sets, bases,
/// reduced trajectories and reduced models.
///
/// Layout:
///   magic "OPSW" | u32 version | u32 kind | u32 nx | u32 ny
///   | u64 rows | u64 cols | f64 mu | char tag[16] | u64 config_hash
///   | payload ... | u32 crc32(payload)
///
/// The payload is kind-specific; matrices are stored column-major f64.
enum class PayloadKind : std::uint32_t {
  Snapshots = 1,         // payload: times[cols], data[rows*cols]
  Basis = 2,             // payload: u64 nsigma, sigma[nsigma], V[rows*cols]
  ReducedSnapshots = 3,  // payload: times[cols], data[rows*cols], ddata[rows*cols]
  Model = 4,             // payload: A1..A3 (r x r), H1..H3 (r x r^2), r = rows
};

inline constexpr std::uint32_t kFormatVersion = 1;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ContainerHeader {
  PayloadKind kind = PayloadKind::Snapshots;
  std::uint32_t nx = 0, ny = 0;
  std::uint64_t rows = 0, cols = 0;
  double mu = 0.0;
  std::string tag;  // at most 15 bytes survive the round trip
  std::uint64_t config_hash = 0;
};

/// Streams payload bytes while accumulating the CRC; finish() writes the
/// trailing checksum. Throws std::runtime_error on I/O failure.
class Writer {
 public:
  Writer(const std::string& path, const ContainerHeader& hdr);
  ~Writer();
  void write_f64(const double* p, std::size_t count);
  void write_u64(std::uint64_t v);
  void write_matrix(const Eigen::MatrixXd& m);
  void finish();

 private:
  void put(const void* p, std::size_t bytes);
  std::ofstream out_;
  std::string path_;
  std::uint32_t crc_ = 0;
  bool finished_ = false;
};

class Reader {
 public:
  explicit Reader(const std::string& path);
  const ContainerHeader& header() const { return hdr_; }
  void read_f64(double* p, std::size_t count);
  std::uint64_t read_u64();
  Eigen::MatrixXd read_matrix(Eigen::Index rows, Eigen::Index cols);
  /// Verifies the trailing CRC; must be called after the payload is consumed.
  void finish();

 private:
  void get(void* p, std::size_t bytes);
  std::ifstream in_;
  std::string path_;
  ContainerHeader hdr_;
  std::uint32_t crc_ = 0;
};

/// CRC-32 of a whole file (provenance manifests).
std::uint32_t file_crc32(const std::string& path);

}  // namespace opswe::io
