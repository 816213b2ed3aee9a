#ifndef RICAP_RNG_HPP
#define RICAP_RNG_HPP

#include <cstdint>
#include <utility>

namespace ricap {

/// Splittable deterministic random stream. The same (seed, stream_id) pair
/// always produces the identical draw sequence; distinct stream ids give
/// statistically independent sequences. xoshiro256++ state initialized from
/// a splitmix64 hash of (seed, stream_id).
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

    std::uint64_t next_u64();

    /// Uniform on (0, 1].
    double uniform();

    /// One Box-Muller pair of independent standard normals.
    std::pair<double, double> gaussian_pair();

private:
    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::uint64_t s_[4];
};

} // namespace ricap

#endif
