#include "tnet/debruijn.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "tnet/bijection.hpp"
#include "tnet/core.hpp"

namespace tnet::debruijn {

namespace {

// Orders stay small: the unranking recursion walks graphs of 2^(n-1) edges.
constexpr int kMaxOrder = 12;

void check_order(int n) {
    if (n < 2 || n > kMaxOrder)
        throw std::invalid_argument("order must be between 2 and " +
                                    std::to_string(kMaxOrder));
}

void check_bits(const std::string& s) {
    for (char ch : s)
        if (ch != '0' && ch != '1')
            throw std::invalid_argument("sequences must be over 0/1");
}

// Cyclic n-bit window of b starting at j, most significant symbol first.
int window(const std::string& b, int j, int n) {
    int w = 0;
    for (int k = 0; k < n; ++k)
        w = w << 1 | (b[(j + k) % b.size()] - '0');
    return w;
}

}  // namespace

bool is_debruijn(const std::string& b, int n) {
    check_order(n);
    const int len = 1 << n;
    if (static_cast<int>(b.size()) != len) return false;
    for (char ch : b)
        if (ch != '0' && ch != '1') return false;
    std::vector<bool> seen(len, false);
    for (int j = 0; j < len; ++j) {
        const int w = window(b, j, n);
        if (seen[w]) return false;
        seen[w] = true;
    }
    return true;
}

bool is_base_form(const std::string& b, int n) {
    if (!is_debruijn(b, n)) return false;
    for (int k = 0; k < n; ++k)
        if (b[k] != '0') return false;
    return true;
}

std::string cycle_to_seq(int n, const EulerCycle& c) {
    check_order(n);
    const core::TNet h = core::debruijn_graph(n);
    const EulerCycle canon = euler::canonical(core::as_multigraph(h), c.ids);
    std::string out(canon.ids.size(), '0');
    for (std::size_t j = 0; j < canon.ids.size(); ++j)
        out[j] = '0' + ((canon.ids[j] >> (n - 1)) & 1);
    return out;
}

EulerCycle seq_to_cycle(int n, const std::string& b) {
    check_order(n);
    check_bits(b);
    if (static_cast<int>(b.size()) != 1 << n)
        throw std::invalid_argument("sequence of order " + std::to_string(n) +
                                    " must have length " + std::to_string(1 << n));
    if (!is_base_form(b, n))
        throw std::invalid_argument("not a base-form de Bruijn sequence");
    std::vector<int> ids(b.size());
    for (int j = 0; j < static_cast<int>(b.size()); ++j) ids[j] = window(b, j, n);
    return euler::canonical(core::as_multigraph(core::debruijn_graph(n)), ids);
}

std::string unrank(int n, const std::string& s) {
    check_order(n);
    check_bits(s);
    const int want = (1 << (n - 1)) - n;
    if (static_cast<int>(s.size()) != want)
        throw std::invalid_argument("order " + std::to_string(n) + " needs " +
                                    std::to_string(want) + " bits, got " +
                                    std::to_string(s.size()));
    if (n == 2) return "0011";
    const int prefix_len = (1 << (n - 2)) - (n - 1);
    const std::string prev = unrank(n - 1, s.substr(0, prefix_len));
    const core::TNet h = core::debruijn_graph(n - 1);
    std::vector<int> bits;
    for (std::size_t j = prefix_len; j < s.size(); ++j) bits.push_back(s[j] - '0');
    const EulerCycle doubled = bijection::expand_cycle(h, seq_to_cycle(n - 1, prev), bits);
    return cycle_to_seq(n, doubled);
}

std::string rank(int n, const std::string& b) {
    check_order(n);
    if (!is_base_form(b, n))
        throw std::invalid_argument("not a base-form de Bruijn sequence");
    if (n == 2) return "";
    const core::TNet h = core::debruijn_graph(n - 1);
    auto [p, bits] = bijection::reduce_cycle(h, seq_to_cycle(n, b));
    std::string suffix(bits.size(), '0');
    for (std::size_t j = 0; j < bits.size(); ++j) suffix[j] = '0' + bits[j];
    return rank(n - 1, cycle_to_seq(n - 1, p)) + suffix;
}

std::pair<int, std::string> rotate_to_base(int n, const std::string& b) {
    check_order(n);
    if (!is_debruijn(b, n))
        throw std::invalid_argument("not a de Bruijn sequence of order " + std::to_string(n));
    const int len = 1 << n;
    int r = -1;
    for (int j = 0; j < len; ++j) {
        if (window(b, j, n) == 0) {
            r = j;
            break;
        }
    }
    std::string b0(len, '0');
    for (int k = 0; k < len; ++k) b0[k] = b[(k + r) % len];
    return {r, b0};
}

std::string rotate_from_base(int n, int r, const std::string& b0) {
    check_order(n);
    const int len = 1 << n;
    if (r < 0 || r >= len) throw std::invalid_argument("rotation index out of range");
    if (!is_base_form(b0, n))
        throw std::invalid_argument("not a base-form de Bruijn sequence");
    std::string b(len, '0');
    for (int k = 0; k < len; ++k) b[k] = b0[(k + len - r) % len];
    return b;
}

std::string stanley_encode(int n, const std::string& b1, const std::string& b2) {
    check_order(n);
    std::string out;
    out.reserve(1 << n);
    for (const std::string* b : {&b1, &b2}) {
        auto [r, b0] = rotate_to_base(n, *b);
        for (int k = n - 1; k >= 0; --k) out.push_back('0' + ((r >> k) & 1));
        out += rank(n, b0);
    }
    return out;
}

std::pair<std::string, std::string> stanley_decode(int n, const std::string& bits) {
    check_order(n);
    check_bits(bits);
    if (static_cast<int>(bits.size()) != 1 << n)
        throw std::invalid_argument("order " + std::to_string(n) + " needs " +
                                    std::to_string(1 << n) + " bits");
    const int half = 1 << (n - 1);
    auto piece = [&](int offset) {
        int r = 0;
        for (int k = 0; k < n; ++k) r = r << 1 | (bits[offset + k] - '0');
        const std::string b0 = unrank(n, bits.substr(offset + n, half - n));
        return rotate_from_base(n, r, b0);
    };
    return {piece(0), piece(half)};
}

}  // namespace tnet::debruijn
