#include "cmacc/macc.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>

namespace cmacc {

StarGrid::StarGrid(std::int64_t rows, std::int64_t cols)
    : rows_(rows), cols_(cols), cells_(static_cast<std::size_t>(rows * cols), 0) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("grid dimensions must be positive");
}

std::int64_t StarGrid::column_count(std::int64_t k) const noexcept {
  std::int64_t n = 0;
  for (std::int64_t f = 0; f < rows_; ++f) n += at(f, k) ? 1 : 0;
  return n;
}

StarGrid star_pattern(const PdaArray& array) {
  StarGrid g(array.rows(), array.cols());
  for (std::int64_t f = 0; f < array.rows(); ++f) {
    for (std::int64_t k = 0; k < array.cols(); ++k) g.set(f, k, array.at(f, k).is_star());
  }
  return g;
}

NodePlacement derive_node_placement(const PdaArray& Q, std::int64_t L) {
  const std::int64_t K = Q.cols();
  NodePlacement C{StarGrid(Q.rows(), K), L};
  for (std::int64_t f = 0; f < Q.rows(); ++f) {
    const auto runs = partition_into_runs(star_columns(Q, f), L, K);
    if (!runs) {
      throw std::invalid_argument("delivery array is not " + std::to_string(L) +
                                  "-continuous at row " + std::to_string(f));
    }
    for (const CyclicRun& run : *runs) C.stars.set(f, (run.start.value + L - 1) % K, true);
  }
  return C;
}

UserRetrieve user_retrieve(const NodePlacement& C, std::int64_t window) {
  if (window < 1) throw std::invalid_argument("access window must be positive");
  const std::int64_t K = C.stars.cols();
  UserRetrieve U{StarGrid(C.stars.rows(), K)};
  for (std::int64_t f = 0; f < C.stars.rows(); ++f) {
    for (std::int64_t k = 0; k < K; ++k) {
      for (std::int64_t j = 0; j < window; ++j) {
        if (C.stars.at(f, (k + j) % K)) {
          U.stars.set(f, k, true);
          break;
        }
      }
    }
  }
  return U;
}

std::vector<std::int64_t> packets_per_node(const NodePlacement& C) {
  std::vector<std::int64_t> out;
  for (std::int64_t k = 0; k < C.stars.cols(); ++k) out.push_back(C.stars.column_count(k));
  return out;
}

MaccScheme::MaccScheme(PdaArray Q, NodePlacement C, UserRetrieve U, PdaParams params, std::int64_t window)
    : delivery_(std::move(Q)),
      placement_(std::move(C)),
      retrieve_(std::move(U)),
      params_(std::move(params)),
      access_degree_(window) {}

MaccScheme MaccScheme::from_delivery_array(PdaArray Q, std::int64_t L) {
  const VerificationReport pda = verify_pda(Q);
  if (!pda.valid()) throw std::invalid_argument("not a PDA: " + pda.violations.front().detail);
  const VerificationReport runs = verify_l_continuity(Q, L);
  if (!runs.valid()) throw std::invalid_argument("not L-continuous: " + runs.violations.front().detail);

  NodePlacement C = derive_node_placement(Q, L);
  UserRetrieve U = user_retrieve(C, L);
  if (!(U.stars == star_pattern(Q))) {
    throw std::logic_error("node placement does not reproduce the delivery array's stars");
  }
  PdaParams params = compute_params(Q);
  return MaccScheme(std::move(Q), std::move(C), std::move(U), std::move(params), L);
}

MaccScheme MaccScheme::from_family(const PackingFamily& family, std::int64_t L) {
  return from_delivery_array(build_pda(family), L);
}

MaccScheme adapt_even_k(std::int64_t K, const PackingFamily& family, std::int64_t L) {
  if (K < 2 || K % 2 != 0) throw std::invalid_argument("adapt_even_k needs an even K >= 2");
  if (family.modulus() != K + 1) {
    throw std::invalid_argument("even-K adaptation needs a packing over Z_" + std::to_string(K + 1));
  }
  MaccScheme scheme = MaccScheme::from_family(family, L);
  scheme.virtual_users_ = 1;
  return scheme;
}

MaccScheme adapt_even_l(std::int64_t L, const PackingFamily& family) {
  if (L < 2 || L % 2 != 0) throw std::invalid_argument("adapt_even_l needs an even L >= 2");
  MaccScheme scheme = MaccScheme::from_family(family, L - 1);
  scheme.retrieve_ = user_retrieve(scheme.placement_, L);
  scheme.access_degree_ = L;
  return scheme;
}

Library::Library(std::vector<Bytes> files, std::int64_t F) : F_(F) {
  if (F < 1) throw std::invalid_argument("subpacketization must be positive");
  if (files.empty()) throw std::invalid_argument("library must hold at least one file");
  std::size_t longest = 0;
  for (const Bytes& b : files) longest = std::max(longest, b.size());
  const auto f = static_cast<std::size_t>(F);
  packet_size_ = std::max<std::size_t>(1, (longest + f - 1) / f);
  for (Bytes& b : files) {
    sizes_.push_back(b.size());
    b.resize(packet_size_ * f, 0);
    padded_.push_back(std::move(b));
  }
}

Library Library::synthetic(std::int64_t N, std::size_t file_size, std::int64_t F, std::uint64_t seed) {
  if (N < 1) throw std::invalid_argument("library must hold at least one file");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> byte(0, 255);
  std::vector<Bytes> files(static_cast<std::size_t>(N));
  for (Bytes& b : files) {
    b.resize(file_size);
    for (auto& c : b) c = static_cast<std::uint8_t>(byte(rng));
  }
  return Library(std::move(files), F);
}

Library Library::from_directory(const std::filesystem::path& dir, std::int64_t F) {
  std::vector<std::filesystem::path> paths;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file()) paths.push_back(entry.path());
  }
  std::sort(paths.begin(), paths.end());
  std::vector<Bytes> files;
  for (const auto& p : paths) {
    std::ifstream in(p, std::ios::binary);
    files.emplace_back(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  return Library(std::move(files), F);
}

std::span<const std::uint8_t> Library::packet(std::int64_t n, std::int64_t f) const {
  if (n < 1 || n > file_count()) throw std::out_of_range("file index " + std::to_string(n));
  if (f < 0 || f >= F_) throw std::out_of_range("packet index " + std::to_string(f));
  const Bytes& b = padded_[static_cast<std::size_t>(n - 1)];
  return std::span<const std::uint8_t>(b).subspan(static_cast<std::size_t>(f) * packet_size_, packet_size_);
}

Bytes Library::original(std::int64_t n) const {
  const auto span = std::span<const std::uint8_t>(padded_.at(static_cast<std::size_t>(n - 1)));
  return Bytes(span.begin(), span.begin() + static_cast<std::ptrdiff_t>(original_size(n)));
}

std::size_t Library::original_size(std::int64_t n) const {
  if (n < 1 || n > file_count()) throw std::out_of_range("file index " + std::to_string(n));
  return sizes_[static_cast<std::size_t>(n - 1)];
}

DemandVector DemandVector::distinct(std::int64_t K, std::int64_t N) {
  if (N < K) throw std::invalid_argument("distinct demands need N >= K");
  DemandVector dv;
  for (std::int64_t k = 1; k <= K; ++k) dv.d.push_back(k);
  return dv;
}

DemandVector DemandVector::uniform(std::int64_t K, std::int64_t N, std::mt19937_64& rng) {
  if (N < 1) throw std::invalid_argument("library must hold at least one file");
  std::uniform_int_distribution<std::int64_t> pick(1, N);
  DemandVector dv;
  for (std::int64_t k = 0; k < K; ++k) dv.d.push_back(pick(rng));
  return dv;
}

const Message* DeliveryTranscript::find(const PdaEntry& symbol) const {
  auto it = std::lower_bound(messages.begin(), messages.end(), symbol,
                             [](const Message& m, const PdaEntry& s) { return m.symbol < s; });
  return it != messages.end() && it->symbol == symbol ? &*it : nullptr;
}

namespace {

// Demands for every column, virtual users asking for file 1.
std::vector<std::int64_t> full_demand(const MaccScheme& scheme, const Library& library,
                                      const DemandVector& d) {
  if (static_cast<std::int64_t>(d.d.size()) != scheme.real_users()) {
    throw std::invalid_argument("demand vector has " + std::to_string(d.d.size()) + " entries, scheme has " +
                                std::to_string(scheme.real_users()) + " users");
  }
  for (std::int64_t n : d.d) {
    if (n < 1 || n > library.file_count()) {
      throw std::invalid_argument("demand " + std::to_string(n) + " outside [1.." +
                                  std::to_string(library.file_count()) + "]");
    }
  }
  std::vector<std::int64_t> all = d.d;
  all.resize(static_cast<std::size_t>(scheme.users()), 1);
  return all;
}

void xor_into(Bytes& acc, std::span<const std::uint8_t> data) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] ^= data[i];
}

}  // namespace

DeliveryTranscript deliver(const MaccScheme& scheme, const Library& library, const DemandVector& d) {
  const PdaArray& Q = scheme.delivery();
  if (library.subpacketization() != Q.rows()) {
    throw std::invalid_argument("library split into " + std::to_string(library.subpacketization()) +
                                " packets, scheme needs " + std::to_string(Q.rows()));
  }
  const std::vector<std::int64_t> demand = full_demand(scheme, library, d);

  std::map<PdaEntry, Message> by_symbol;
  for (std::int64_t f = 0; f < Q.rows(); ++f) {
    for (std::int64_t k = 0; k < Q.cols(); ++k) {
      const PdaEntry& s = Q.at(f, k);
      if (s.is_star()) continue;
      Message& m = by_symbol[s];
      if (m.payload.empty()) {
        m.symbol = s;
        m.payload.assign(library.packet_size(), 0);
      }
      m.contributors.emplace_back(f, k);
      xor_into(m.payload, library.packet(demand[static_cast<std::size_t>(k)], f));
    }
  }

  DeliveryTranscript t;
  for (auto& [sym, m] : by_symbol) t.messages.push_back(std::move(m));
  t.S_d = static_cast<std::int64_t>(t.messages.size());
  t.rate = Rational(t.S_d, Q.rows());
  return t;
}

std::vector<Bytes> decode_all(const MaccScheme& scheme, const Library& library, const DemandVector& d,
                              const DeliveryTranscript& transcript) {
  const PdaArray& Q = scheme.delivery();
  const StarGrid& access = scheme.retrieve().stars;
  const std::vector<std::int64_t> demand = full_demand(scheme, library, d);
  const std::int64_t F = Q.rows();

  // Packet f of file n as seen by user k: only through its window.
  auto read_cached = [&](std::int64_t k, std::int64_t n, std::int64_t f) {
    if (!access.at(f, k)) {
      throw DecodeError("user " + std::to_string(k) + " cannot reach packet " + std::to_string(f) +
                        " in its cache window");
    }
    return library.packet(n, f);
  };

  std::vector<Bytes> out;
  for (std::int64_t k = 0; k < scheme.users(); ++k) {
    const std::int64_t want = demand[static_cast<std::size_t>(k)];
    Bytes file;
    file.reserve(library.packet_size() * static_cast<std::size_t>(F));
    for (std::int64_t f = 0; f < F; ++f) {
      if (access.at(f, k)) {
        const auto p = read_cached(k, want, f);
        file.insert(file.end(), p.begin(), p.end());
        continue;
      }
      const PdaEntry& s = Q.at(f, k);
      const Message* msg = transcript.find(s);
      if (msg == nullptr) throw DecodeError("no message for symbol " + s.str());
      Bytes packet = msg->payload;
      bool mine = false;
      for (const auto& [f2, k2] : msg->contributors) {
        if (f2 == f && k2 == k) {
          mine = true;
          continue;
        }
        xor_into(packet, read_cached(k, demand[static_cast<std::size_t>(k2)], f2));
      }
      if (!mine) throw DecodeError("message " + s.str() + " does not carry user " + std::to_string(k));
      file.insert(file.end(), packet.begin(), packet.end());
    }
    if (scheme.is_virtual(k)) continue;
    file.resize(library.original_size(want));
    out.push_back(std::move(file));
  }
  return out;
}

SchemeParams scheme_params(const MaccScheme& scheme, std::int64_t N) {
  const PdaParams& p = scheme.params();
  SchemeParams s;
  s.K = p.K;
  s.F = p.F;
  s.Z = p.Z;
  s.S = p.S;
  s.L = scheme.placement_degree();
  s.memory_ratio = Rational(p.Z, s.L * p.F);
  s.memory = s.memory_ratio * N;
  s.rate = Rational(p.S, p.F);
  s.gain = p.max_gain();
  return s;
}

void write_transcript(std::ostream& out, const DeliveryTranscript& transcript) {
  static constexpr char kHex[] = "0123456789abcdef";
  for (const Message& m : transcript.messages) {
    out << m.symbol.str() << ' ';
    for (std::size_t i = 0; i < m.contributors.size(); ++i) {
      if (i) out << ',';
      out << m.contributors[i].first << ':' << m.contributors[i].second;
    }
    out << ' ';
    for (std::uint8_t b : m.payload) out << kHex[b >> 4] << kHex[b & 0xF];
    out << '\n';
  }
}

}  // namespace cmacc
