#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lpr {

// Error hierarchy. Everything user-facing throws one of these so the CLI
// and the tests can tell contract violations apart from IO trouble.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Image/tensor shape violates an operation's precondition.
struct DimensionError : Error {
  using Error::Error;
};

// Argument value outside its documented range.
struct ParameterError : Error {
  using Error::Error;
};

// Model configuration inconsistent (channel mismatch, bad variant tag, ...).
struct ConfigError : Error {
  using Error::Error;
};

// Dataset / file / manifest problems.
struct DataError : Error {
  using Error::Error;
};

// A required optional resource (e.g. perceptual extractor weights) is absent.
struct UnavailableError : Error {
  using Error::Error;
};

// Training loop divergence guard tripped.
struct TrainingError : Error {
  using Error::Error;
};

// splitmix64; used to derive independent RNG streams from (seed, index...).
inline uint64_t hash_mix(uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline uint64_t derive_seed(uint64_t seed, uint64_t a) { return hash_mix(seed ^ hash_mix(a)); }

inline uint64_t derive_seed(uint64_t seed, uint64_t a, uint64_t b) {
  return hash_mix(derive_seed(seed, a) ^ hash_mix(b + 0x517cc1b727220a95ull));
}

}  // namespace lpr
