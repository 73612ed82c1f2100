#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace teamform {

/// Dense node identifier within a single graph (0 .. node_count()-1).
using ExpertId = std::uint32_t;

/// Dense identifier of an interned skill token within a single graph.
using SkillId = std::uint32_t;

inline constexpr ExpertId kInvalidExpert = std::numeric_limits<ExpertId>::max();
inline constexpr SkillId kInvalidSkill = std::numeric_limits<SkillId>::max();

/// Sentinel for "no path exists". Kept as +infinity so it composes with
/// min/max reductions; never encoded as a large finite weight.
inline constexpr double kUnreachable = std::numeric_limits<double>::infinity();

inline bool is_unreachable(double d) { return d == kUnreachable; }

/// Violation of a documented call contract (e.g. asking for the sum
/// distance of an assignment that does not cover the task).
class ContractViolation : public std::logic_error {
 public:
  explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

/// Malformed input data; carries the byte offset where parsing stopped.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t byte_offset, const std::string& what)
      : std::runtime_error(what + " (byte " + std::to_string(byte_offset) + ")"),
        byte_offset_(byte_offset) {}
  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

// ---------------------------------------------------------------------------
// Deterministic random streams.
//
// All randomness in the library flows through SplitMix64 so that results are
// bit-identical across platforms and independent of evaluation order: every
// logical unit of work (a benchmark trial, a leader's fallback draw) derives
// its own stream from the run seed via derive_seed().
// ---------------------------------------------------------------------------

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform draw from [0, n) via 128-bit multiply-shift (no modulo bias
  /// worth noticing for n far below 2^64; exactly reproducible everywhere).
  std::uint64_t bounded(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * n) >> 64);
  }

 private:
  std::uint64_t state_;
};

/// Stable stream derivation: mixes (a, b) into `base` so that parallel
/// consumers get disjoint, order-independent streams.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) {
  SplitMix64 m(base ^ (a * 0xD6E8FEB86659FD93ull) ^ (b * 0xCA5A826395121157ull));
  m.next();
  return m.next();
}

/// Fixed default seed for every CLI entry point (never wall clock).
inline constexpr std::uint64_t kDefaultSeed = 1729;

// ---------------------------------------------------------------------------
// Small dynamic bitset used for task-skill coverage masks in the greedy
// inner loops (|T| is small, so this is almost always a single word).
// ---------------------------------------------------------------------------

class SmallBitset {
 public:
  SmallBitset() = default;
  explicit SmallBitset(std::size_t bits) : words_((bits + 63) / 64, 0), bits_(bits) {}

  void set(std::size_t i) { words_[i >> 6] |= (1ull << (i & 63)); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(1ull << (i & 63)); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }
  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  std::size_t size() const { return bits_; }

  std::size_t count_and(const SmallBitset& other) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(__builtin_popcountll(words_[i] & other.words_[i]));
    return c;
  }
  void and_not(const SmallBitset& other) {  // *this &= ~other
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  }

 private:
  std::vector<std::uint64_t> words_;
  std::size_t bits_ = 0;
};

}  // namespace teamform
