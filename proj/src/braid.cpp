#include "braidrep/braid.hpp"

#include <charconv>
#include <cstdlib>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace braidrep {

BraidWord::BraidWord(int n, std::vector<int> letters) : n_(n), letters_(std::move(letters)) {
    if (n < 1) throw std::invalid_argument("strand count must be at least 1");
    for (int g : letters_) {
        if (g == 0) throw std::invalid_argument("braid letter 0 is not a generator");
        if (std::abs(g) > n - 1)
            throw std::invalid_argument("generator index " + std::to_string(std::abs(g)) +
                                        " out of range for " + std::to_string(n) + " strands");
    }
}

BraidWord parse_word(std::string_view text, int n) {
    std::vector<int> letters;
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) {
        int value = 0;
        const char* first = token.data();
        const char* last = token.data() + token.size();
        if (*first == '+') ++first;
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr != last || first == last)
            throw std::invalid_argument("malformed braid letter '" + token + "'");
        letters.push_back(value);
    }
    return BraidWord(n, std::move(letters));
}

std::string to_string(const BraidWord& w) {
    std::string out;
    for (int g : w.letters()) {
        if (!out.empty()) out += ' ';
        out += std::to_string(g);
    }
    return out;
}

BraidWord free_reduce(const BraidWord& w) {
    std::vector<int> stack;
    for (int g : w.letters()) {
        if (!stack.empty() && stack.back() == -g)
            stack.pop_back();
        else
            stack.push_back(g);
    }
    return BraidWord(w.strands(), std::move(stack));
}

std::vector<int> permutation_image(const BraidWord& w) {
    std::vector<int> perm(static_cast<std::size_t>(w.strands()));
    std::iota(perm.begin(), perm.end(), 1);
    for (int g : w.letters()) {
        std::size_t k = static_cast<std::size_t>(std::abs(g));
        std::swap(perm[k - 1], perm[k]);
    }
    return perm;
}

bool is_identity_permutation(const std::vector<int>& perm) {
    for (std::size_t k = 0; k < perm.size(); ++k)
        if (perm[k] != static_cast<int>(k) + 1) return false;
    return true;
}

int exponent_sum(const BraidWord& w) {
    int s = 0;
    for (int g : w.letters()) s += g > 0 ? 1 : -1;
    return s;
}

bool certified_nontrivial(const BraidWord& w) {
    return exponent_sum(w) != 0 || !is_identity_permutation(permutation_image(w));
}

BraidWord random_word(int n, int length, std::uint64_t seed) {
    if (length < 0) throw std::invalid_argument("word length must be non-negative");
    if (length > 0 && n < 2) throw std::invalid_argument("B_1 has no generators");
    std::mt19937_64 rng(seed);
    const std::uint64_t choices = 2 * static_cast<std::uint64_t>(n - 1);
    // Rejection keeps the draw uniform and independent of the library's
    // distribution implementation.
    const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % choices;
    std::vector<int> letters;
    letters.reserve(static_cast<std::size_t>(length));
    for (int k = 0; k < length; ++k) {
        std::uint64_t x;
        do x = rng();
        while (x >= limit);
        x %= choices;
        int index = static_cast<int>(x / 2) + 1;
        letters.push_back(x % 2 == 0 ? index : -index);
    }
    return free_reduce(BraidWord(n, std::move(letters)));
}

}  // namespace braidrep
