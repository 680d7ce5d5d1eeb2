#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace braidrep {

/// Word in the Artin generators of B_n. Letter g > 0 is sigma_g, g < 0 its
/// inverse; every |g| lies in [1, n-1].
class BraidWord {
public:
    explicit BraidWord(int n, std::vector<int> letters = {});

    int strands() const { return n_; }
    const std::vector<int>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    friend bool operator==(const BraidWord&, const BraidWord&) = default;

private:
    int n_;
    std::vector<int> letters_;
};

/// Whitespace-separated signed integers, e.g. "1 -2 1".
BraidWord parse_word(std::string_view text, int n);
std::string to_string(const BraidWord& w);

/// Cancels adjacent g, -g pairs until none remain.
BraidWord free_reduce(const BraidWord& w);

/// One-line notation of the image in S_n: entry k is the strand that ends
/// in position k+1 after applying the transpositions in word order.
std::vector<int> permutation_image(const BraidWord& w);
bool is_identity_permutation(const std::vector<int>& perm);

int exponent_sum(const BraidWord& w);

/// True when the image in S_n or in Z (exponent sum) already shows the
/// braid is not the identity.
bool certified_nontrivial(const BraidWord& w);

/// `length` letters drawn uniformly from {±1, ..., ±(n-1)} by a
/// mt19937_64 seeded with `seed`, then freely reduced.
BraidWord random_word(int n, int length, std::uint64_t seed);

}  // namespace braidrep
