#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace chd {

// Deterministic splitmix64 stream. Child streams are derived from
// (seed, tag) so separate pipeline stages never share a sequence;
// the same (seed, tag) yields the same draws on every platform.
class RngStream {
public:
    static RngStream derive(std::uint64_t seed, std::string_view tag);

    RngStream child(std::string_view tag) const;

    std::uint64_t next_u64();

    // Uniform in [0, 1).
    double next_double();

    // Uniform in {0, ..., n-1}, n > 0.
    std::size_t next_index(std::size_t n);

    // Fisher-Yates permutation of {0, ..., n-1}.
    std::vector<std::size_t> permutation(std::size_t n);

private:
    explicit RngStream(std::uint64_t state) : state_(state) {}
    std::uint64_t state_;
};

}  // namespace chd
