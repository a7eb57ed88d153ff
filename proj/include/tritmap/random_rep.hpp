#pragma once

#include "tritmap/ternary_rep.hpp"
#include "tritmap/trit.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace tritmap {

/// Deterministic representation sampler. Draws are taken directly from
/// mt19937_64 with explicit modulo so identical seeds give identical
/// sequences on every platform (std::uniform_int_distribution is
/// implementation-defined and would break byte-reproducible output).
class RepGenerator {
  public:
    explicit RepGenerator(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t next_u64() { return rng_(); }
    std::uint64_t below(std::uint64_t n) { return rng_() % n; }
    Trit trit() { return Trit(static_cast<int>(below(3))); }

    /// Random eventually periodic representation: preperiod length uniform in
    /// 0..8, period length uniform in 1..6, digits uniform, canonicalized.
    TernaryRep next_rep() {
        std::vector<Trit> pre = digits(below(9));
        std::vector<Trit> per = digits(1 + below(6));
        return canonicalize(TernaryRep(std::move(pre), std::move(per)));
    }

    /// Random canonical terminating representation in (0, 1): uniform length
    /// in min_len..max_len, uniform digits, last digit forced to 1 or 2.
    TernaryRep next_terminating(std::size_t min_len, std::size_t max_len) {
        std::size_t len = min_len + below(max_len - min_len + 1);
        std::vector<Trit> d = digits(len);
        d.back() = Trit(1 + static_cast<int>(below(2)));
        return TernaryRep(std::move(d), {});
    }

    /// Raw digit tail (possibly empty, possibly periodic) for splicing after
    /// a fixed prefix. Not canonicalized.
    TernaryRep next_tail() {
        std::vector<Trit> pre = digits(below(5));
        std::vector<Trit> per = digits(below(5));
        return TernaryRep(std::move(pre), std::move(per));
    }

    /// Uniform digit prefix of length 0..max_len.
    std::vector<Trit> next_prefix(std::size_t max_len) { return digits(below(max_len + 1)); }

  private:
    std::vector<Trit> digits(std::size_t n) {
        std::vector<Trit> out;
        out.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            out.push_back(trit());
        }
        return out;
    }

    std::mt19937_64 rng_;
};

}  // namespace tritmap
