#pragma once

// Multi-access coded caching scheme realized by an L-continuous PDA:
// node placement, cyclic-window retrieval, XOR multicast delivery and
// decoding. User k reads cache nodes k, k+1, ..., k+L-1 (mod K).

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <random>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cmacc/exact.hpp"
#include "cmacc/packing.hpp"
#include "cmacc/pda.hpp"

namespace cmacc {

using Bytes = std::vector<std::uint8_t>;

/// F x K boolean grid; true means star.
class StarGrid {
 public:
  StarGrid(std::int64_t rows, std::int64_t cols);

  std::int64_t rows() const noexcept { return rows_; }
  std::int64_t cols() const noexcept { return cols_; }
  bool at(std::int64_t f, std::int64_t k) const noexcept {
    return cells_[static_cast<std::size_t>(f * cols_ + k)] != 0;
  }
  void set(std::int64_t f, std::int64_t k, bool star) noexcept {
    cells_[static_cast<std::size_t>(f * cols_ + k)] = star ? 1 : 0;
  }
  std::int64_t column_count(std::int64_t k) const noexcept;

  friend bool operator==(const StarGrid&, const StarGrid&) = default;

 private:
  std::int64_t rows_;
  std::int64_t cols_;
  std::vector<char> cells_;
};

StarGrid star_pattern(const PdaArray& array);

/// C(f, k) = star iff cache node k holds packet f of every file.
struct NodePlacement {
  StarGrid stars;
  std::int64_t L = 1;
};

/// U(f, k) = star iff user k can read packet f from one of its nodes.
struct UserRetrieve {
  StarGrid stars;
};

/// For every star run [k0 .. k0+L-1] of row f, node k0+L-1 stores packet f.
/// Throws std::invalid_argument unless Q is L-continuous.
NodePlacement derive_node_placement(const PdaArray& Q, std::int64_t L);

/// Window of `window` consecutive nodes starting at each user.
UserRetrieve user_retrieve(const NodePlacement& C, std::int64_t window);

/// Packets (per file) stored at each node.
std::vector<std::int64_t> packets_per_node(const NodePlacement& C);

class MaccScheme {
 public:
  /// Throws std::invalid_argument unless Q is a PDA and L-continuous.
  static MaccScheme from_delivery_array(PdaArray Q, std::int64_t L);
  /// Builds the circulant PDA of a CMA-NHSDP.
  static MaccScheme from_family(const PackingFamily& family, std::int64_t L);

  const PdaArray& delivery() const noexcept { return delivery_; }
  const NodePlacement& placement() const noexcept { return placement_; }
  const UserRetrieve& retrieve() const noexcept { return retrieve_; }
  const PdaParams& params() const noexcept { return params_; }

  /// Number of nodes each user reads.
  std::int64_t access_degree() const noexcept { return access_degree_; }
  /// Run length the node placement was derived with; equals access_degree()
  /// except for the even-L adaptation, where it is one less.
  std::int64_t placement_degree() const noexcept { return placement_.L; }

  std::int64_t users() const noexcept { return delivery_.cols(); }
  std::int64_t virtual_users() const noexcept { return virtual_users_; }
  std::int64_t real_users() const noexcept { return users() - virtual_users_; }
  /// Virtual users occupy the trailing columns.
  bool is_virtual(std::int64_t k) const noexcept { return k >= real_users(); }

 private:
  MaccScheme(PdaArray Q, NodePlacement C, UserRetrieve U, PdaParams params, std::int64_t window);

  PdaArray delivery_;
  NodePlacement placement_;
  UserRetrieve retrieve_;
  PdaParams params_;
  std::int64_t access_degree_;
  std::int64_t virtual_users_ = 0;

  friend MaccScheme adapt_even_k(std::int64_t K, const PackingFamily& family, std::int64_t L);
  friend MaccScheme adapt_even_l(std::int64_t L, const PackingFamily& family);
};

/// Even user count: serve K users with the (K+1)-column scheme of `family`
/// (modulus K+1); user K+1 is virtual.
MaccScheme adapt_even_k(std::int64_t K, const PackingFamily& family, std::int64_t L);

/// Even access degree: place with run length L-1 and let each user read L
/// nodes. `family` must be an (L-1)-continuous packing.
MaccScheme adapt_even_l(std::int64_t L, const PackingFamily& family);

/// N files split into F equal packets. Files are zero-padded to a common
/// length that is a multiple of F; original lengths are kept.
class Library {
 public:
  Library(std::vector<Bytes> files, std::int64_t F);

  static Library synthetic(std::int64_t N, std::size_t file_size, std::int64_t F, std::uint64_t seed);
  /// Regular files of `dir` in filename order.
  static Library from_directory(const std::filesystem::path& dir, std::int64_t F);

  std::int64_t file_count() const noexcept { return static_cast<std::int64_t>(padded_.size()); }
  std::int64_t subpacketization() const noexcept { return F_; }
  std::size_t packet_size() const noexcept { return packet_size_; }

  /// Packet f (0-based) of file n (1-based).
  std::span<const std::uint8_t> packet(std::int64_t n, std::int64_t f) const;
  /// File n (1-based) as ingested, without padding.
  Bytes original(std::int64_t n) const;
  std::size_t original_size(std::int64_t n) const;

 private:
  std::int64_t F_;
  std::size_t packet_size_ = 0;
  std::vector<Bytes> padded_;
  std::vector<std::size_t> sizes_;
};

/// One requested file index (1-based) per real user.
struct DemandVector {
  std::vector<std::int64_t> d;

  /// d_k = k; needs N >= K.
  static DemandVector distinct(std::int64_t K, std::int64_t N);
  static DemandVector uniform(std::int64_t K, std::int64_t N, std::mt19937_64& rng);
};

struct Message {
  PdaEntry symbol;
  /// (row f, user k) pairs whose packet is XORed in.
  std::vector<std::pair<std::int64_t, std::int64_t>> contributors;
  Bytes payload;
};

struct DeliveryTranscript {
  std::vector<Message> messages;  // ascending by symbol
  std::int64_t S_d = 0;
  Rational rate;

  const Message* find(const PdaEntry& symbol) const;
};

class DecodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// X_s = XOR of packet f of file d_k over every (f, k) with Q(f, k) = s.
/// Throws std::invalid_argument on a demand outside [1..N] or a wrong-length
/// demand vector, or if the library was split into a different F.
DeliveryTranscript deliver(const MaccScheme& scheme, const Library& library, const DemandVector& d);

/// Recovers every real user's file from its nodes and the transcript. Every
/// cached packet is read through the user's window; a packet outside it
/// raises DecodeError. Virtual users are decoded too but not returned.
std::vector<Bytes> decode_all(const MaccScheme& scheme, const Library& library, const DemandVector& d,
                              const DeliveryTranscript& transcript);

struct SchemeParams {
  std::int64_t K = 0;
  std::int64_t F = 0;
  std::int64_t Z = 0;
  std::int64_t S = 0;
  std::int64_t L = 1;
  Rational memory_ratio;  // M/N = Z / (L F)
  Rational memory;        // M = N * M/N
  Rational rate;          // S / F
  std::int64_t gain = 0;  // max_s g_s
};

SchemeParams scheme_params(const MaccScheme& scheme, std::int64_t N);

/// One line per message: "<symbol> <f>:<k>[,<f>:<k>...] <hex payload>".
void write_transcript(std::ostream& out, const DeliveryTranscript& transcript);

}  // namespace cmacc
