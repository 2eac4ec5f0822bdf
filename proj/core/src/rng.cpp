#include "chd/rng.hpp"

#include <stdexcept>

namespace chd {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace

RngStream RngStream::derive(std::uint64_t seed, std::string_view tag) {
    if (tag.empty()) throw std::invalid_argument("RngStream: empty tag");
    // Mix seed and tag hash through one splitmix round each so that
    // nearby seeds do not produce correlated initial states.
    std::uint64_t s = seed;
    std::uint64_t a = splitmix64(s);
    s = a ^ fnv1a(tag);
    std::uint64_t b = splitmix64(s);
    return RngStream(b);
}

RngStream RngStream::child(std::string_view tag) const {
    return derive(state_, tag);
}

std::uint64_t RngStream::next_u64() {
    return splitmix64(state_);
}

double RngStream::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::size_t RngStream::next_index(std::size_t n) {
    if (n == 0) throw std::invalid_argument("RngStream: next_index(0)");
    // Fixed-point multiply keeps the draw unbiased enough for n << 2^64
    // and is identical on every platform, unlike std distributions.
    unsigned __int128 wide =
        static_cast<unsigned __int128>(next_u64()) * static_cast<unsigned __int128>(n);
    return static_cast<std::size_t>(wide >> 64);
}

std::vector<std::size_t> RngStream::permutation(std::size_t n) {
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    for (std::size_t i = n; i > 1; --i) {
        std::size_t j = next_index(i);
        std::swap(idx[i - 1], idx[j]);
    }
    return idx;
}

}  // namespace chd
