// Copyright 2026 The qcc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcc/search.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "qcc/error.hpp"
#include "qcc/text_format.hpp"

namespace qcc {

namespace {

constexpr int kMaxExhaustiveNu = 8;

void check_nu(int nu) {
    if (nu < 1 || nu > kMaxSearchNu) {
        throw DomainError("nu must be between 1 and " + std::to_string(kMaxSearchNu));
    }
}

// Keyed bijection of [0, count) from the header comment.
class Permutation {
   public:
    Permutation(std::uint64_t count, std::uint64_t seed) : count_(count) {
        bits_ = count <= 1 ? 1 : std::bit_width(count - 1);
        mask_ = bits_ >= 64 ? ~0ULL : (1ULL << bits_) - 1;
        half_ = std::max(1, bits_ / 2);
        std::uint64_t s = seed;
        k0_ = splitmix64(s);
        k1_ = splitmix64(s);
    }

    std::uint64_t operator()(std::uint64_t i) const {
        std::uint64_t x = mix(i);
        while (x >= count_) x = mix(x);
        return x;
    }

   private:
    std::uint64_t mix(std::uint64_t x) const {
        x = (x + k0_) & mask_;
        x ^= x >> half_;
        x = (x * 0xbf58476d1ce4e5b9ULL) & mask_;
        x ^= x >> half_;
        x = (x * 0x94d049bb133111ebULL) & mask_;
        x ^= x >> half_;
        return (x + k1_) & mask_;
    }

    std::uint64_t count_;
    int bits_;
    std::uint64_t mask_;
    int half_;
    std::uint64_t k0_;
    std::uint64_t k1_;
};

QuarterGenerators decode_domain_index(int nu, std::uint64_t idx) {
    QuarterGenerators g{};
    auto put = [&](std::uint32_t vec, int degree) {
        for (int i = 0; i < 4; ++i) {
            if ((vec >> i) & 1U) g[i] |= 1U << degree;
        }
    };
    put(static_cast<std::uint32_t>(idx % 15 + 1), 0);
    idx /= 15;
    put(static_cast<std::uint32_t>(idx % 15 + 1), nu);
    idx /= 15;
    for (int d = 1; d < nu; ++d) {
        put(static_cast<std::uint32_t>(idx & 15U), d);
        idx >>= 4;
    }
    return g;
}

// Candidate whose concatenated coefficient string, read as a binary number
// with the first character most significant, equals x.
QuarterGenerators decode_lexicographic(int nu, std::uint64_t x) {
    QuarterGenerators g{};
    int width = nu + 1;
    int total = 4 * width;
    for (int p = 0; p < total; ++p) {
        if ((x >> (total - 1 - p)) & 1U) g[p / width] |= 1U << (p % width);
    }
    return g;
}

std::uint64_t lexicographic_key(const QuarterGenerators& g, int nu) {
    std::uint64_t x = 0;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j <= nu; ++j) x = (x << 1) | ((g[i] >> j) & 1U);
    }
    return x;
}

bool in_domain(const QuarterGenerators& g, int nu) {
    bool constant = false;
    bool top = false;
    for (auto w : g) {
        constant = constant || (w & 1U);
        top = top || ((w >> nu) & 1U);
        if (w >> (nu + 1)) return false;
    }
    return constant && top;
}

std::uint32_t gf2_gcd(std::uint32_t a, std::uint32_t b) {
    while (b != 0) {
        while (a != 0 && std::bit_width(a) >= std::bit_width(b)) a ^= b << (std::bit_width(a) - std::bit_width(b));
        std::swap(a, b);
    }
    return a;
}

// Local top-k, pruned lazily.
class TopK {
   public:
    explicit TopK(std::size_t keep) : keep_(keep) {}
    void push(const SearchRecord& r) {
        if (keep_ == 0) return;
        items_.push_back(r);
        if (items_.size() >= 2 * keep_ + 64) prune();
    }
    std::vector<SearchRecord> take() {
        prune();
        return std::move(items_);
    }

   private:
    void prune() {
        std::sort(items_.begin(), items_.end(), record_better);
        if (items_.size() > keep_) items_.resize(keep_);
    }
    std::size_t keep_;
    std::vector<SearchRecord> items_;
};

void consider(const QuarterGenerators& g, int nu, TopK& top) {
    if (!quarter_self_orthogonal(g, nu) || !quarter_basic(g)) return;
    auto rep = quarter_dual_distance(g, nu);
    top.push({g, rep.d_free, rep.count, nu});
}

}  // namespace

ConvCode SearchRecord::code() const {
    Field f = Field::make(2);
    PolyMatrix m(f, 1, 4);
    for (int i = 0; i < 4; ++i) {
        std::vector<Elem> c;
        for (int j = 0; j <= nu; ++j) c.push_back(static_cast<Elem>((generators[i] >> j) & 1U));
        m(0, i) = LaurentPoly(f, 0, std::move(c));
    }
    return ConvCode(m);
}

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t candidate_count(int nu) {
    check_nu(nu);
    std::uint64_t n = 225;
    for (int d = 1; d < nu; ++d) n <<= 4;
    return n;
}

void enumerate_candidates(int nu, const std::function<bool(const QuarterGenerators&)>& visit) {
    check_nu(nu);
    if (nu > kMaxExhaustiveNu) throw DomainError("exhaustive enumeration is limited to nu <= 8");
    std::uint64_t total = 1ULL << (4 * (nu + 1));
    for (std::uint64_t x = 0; x < total; ++x) {
        auto g = decode_lexicographic(nu, x);
        if (in_domain(g, nu) && !visit(g)) return;
    }
}

QuarterGenerators random_candidate(int nu, std::uint64_t seed, std::uint64_t i) {
    std::uint64_t n = candidate_count(nu);
    if (i >= n) throw DomainError("draw index beyond the candidate domain");
    return decode_domain_index(nu, Permutation(n, seed)(i));
}

bool quarter_self_orthogonal(const QuarterGenerators& g, int nu) {
    for (int s = 0; s <= nu; ++s) {
        int parity = 0;
        for (auto w : g) parity ^= std::popcount(w & (w >> s)) & 1;
        if (parity) return false;
    }
    return true;
}

bool quarter_basic(const QuarterGenerators& g) {
    std::uint32_t d = 0;
    for (auto w : g) d = gf2_gcd(d, w);
    return d == 1;
}

DistanceReport quarter_dual_distance(const QuarterGenerators& g, int nu) {
    check_nu(nu);
    if (!quarter_basic(g)) throw DomainError("generator tuple is not basic (gcd != 1)");
    std::uint32_t h[4];
    for (int i = 0; i < 4; ++i) {
        h[i] = 0;
        for (int j = 0; j <= nu; ++j) h[i] |= ((g[i] >> j) & 1U) << (nu - j);
    }
    std::uint32_t contrib[16];
    for (std::uint32_t v = 0; v < 16; ++v) {
        contrib[v] = 0;
        for (int i = 0; i < 4; ++i) {
            if ((v >> i) & 1U) contrib[v] ^= h[i];
        }
    }
    const std::size_t states = std::size_t{1} << nu;
    const int cap = 8 * (nu + 1);
    std::vector<std::vector<std::uint64_t>> ring(5, std::vector<std::uint64_t>(states, 0));
    std::vector<std::uint64_t> detours(static_cast<std::size_t>(cap) + 5, 0);

    for (std::uint32_t v = 1; v < 16; ++v) {
        std::uint32_t c = contrib[v];
        if (c & 1U) continue;
        std::uint32_t next = c >> 1;
        int w = std::popcount(v);
        if (next == 0) {
            ++detours[w];
        } else {
            ++ring[w % 5][next];
        }
    }
    for (int w = 1; w <= cap; ++w) {
        auto& layer = ring[w % 5];
        for (std::size_t s = states - 1; s >= 1; --s) {
            std::uint64_t cnt = layer[s];
            if (cnt == 0) continue;
            for (std::uint32_t v = 0; v < 16; ++v) {
                std::uint32_t c = contrib[v] ^ static_cast<std::uint32_t>(s);
                if (c & 1U) continue;
                std::uint32_t next = c >> 1;
                int nw = w + std::popcount(v);
                if (next == 0) {
                    detours[nw] += cnt;
                } else {
                    ring[nw % 5][next] += cnt;
                }
            }
        }
        std::fill(layer.begin(), layer.end(), 0);
        if (detours[w] > 0) return {w, detours[w], cap};
    }
    throw DistanceCapExceeded("dual free distance exceeds the weight cap " + std::to_string(cap));
}

bool record_better(const SearchRecord& a, const SearchRecord& b) {
    if (a.d_dual != b.d_dual) return a.d_dual > b.d_dual;
    if (a.count != b.count) return a.count < b.count;
    if (a.nu != b.nu) return a.nu < b.nu;
    return lexicographic_key(a.generators, a.nu) < lexicographic_key(b.generators, b.nu);
}

unsigned search_threads(unsigned requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("QCC_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

std::vector<SearchRecord> search(const SearchConfig& cfg) {
    check_nu(cfg.nu);
    const int nu = cfg.nu;
    std::uint64_t total = 0;
    if (cfg.mode == SearchMode::Exhaustive) {
        if (nu > kMaxExhaustiveNu) throw DomainError("exhaustive search is limited to nu <= 8; use random mode");
        total = 1ULL << (4 * (nu + 1));
    } else {
        total = std::min(cfg.budget, candidate_count(nu));
    }
    std::optional<Permutation> perm;
    if (cfg.mode == SearchMode::Random) perm.emplace(candidate_count(nu), cfg.seed);

    unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(search_threads(cfg.threads), std::max<std::uint64_t>(total, 1)));
    std::vector<std::vector<SearchRecord>> partial(workers);
    auto run = [&](unsigned w) {
        std::uint64_t lo = total / workers * w + std::min<std::uint64_t>(w, total % workers);
        std::uint64_t hi = lo + total / workers + (w < total % workers ? 1 : 0);
        TopK top(cfg.keep);
        for (std::uint64_t i = lo; i < hi; ++i) {
            if (perm) {
                consider(decode_domain_index(nu, (*perm)(i)), nu, top);
            } else {
                auto g = decode_lexicographic(nu, i);
                if (in_domain(g, nu)) consider(g, nu, top);
            }
        }
        partial[w] = top.take();
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }

    std::vector<SearchRecord> all;
    for (auto& p : partial) all.insert(all.end(), p.begin(), p.end());
    std::sort(all.begin(), all.end(), record_better);
    if (all.size() > cfg.keep) all.resize(cfg.keep);

    for (const auto& r : all) {
        ConvCode c = r.code();
        auto rep = free_distance(dual_generator(c));
        if (!is_self_orthogonal_classical(c) || rep.d_free != r.d_dual || rep.count != r.count) {
            throw std::logic_error("search record failed re-verification: " + format_search_records({r}));
        }
    }
    return all;
}

std::string format_quarter_poly(std::uint32_t g, int nu) {
    std::string s;
    for (int j = 0; j <= nu; ++j) s.push_back(((g >> j) & 1U) ? '1' : '0');
    return s;
}

std::string format_search_table(const std::vector<SearchRecord>& records) {
    std::size_t width = 2;
    for (const auto& r : records) width = std::max(width, static_cast<std::size_t>(r.nu) + 1);
    auto pad = [](std::string s, std::size_t w) {
        if (s.size() < w) s.append(w - s.size(), ' ');
        return s;
    };
    std::ostringstream out;
    out << pad("nu", 4);
    for (int i = 1; i <= 4; ++i) out << pad("g" + std::to_string(i), width + 2);
    out << pad("d_dual", 8) << "N\n";
    for (const auto& r : records) {
        out << pad(std::to_string(r.nu), 4);
        for (auto g : r.generators) out << pad(format_quarter_poly(g, r.nu), width + 2);
        out << pad(std::to_string(r.d_dual), 8) << r.count << '\n';
    }
    return out.str();
}

std::string format_search_records(const std::vector<SearchRecord>& records) {
    std::string out;
    for (const auto& r : records) {
        out += "record nu=" + std::to_string(r.nu) + " g=";
        for (int i = 0; i < 4; ++i) {
            if (i) out += ',';
            out += format_quarter_poly(r.generators[i], r.nu);
        }
        out += " d_dual=" + std::to_string(r.d_dual) + " count=" + std::to_string(r.count) + "\n";
    }
    return out;
}

std::vector<SearchRecord> parse_search_records(std::string_view text) {
    std::vector<SearchRecord> out;
    for (const auto& line : significant_lines(text)) {
        auto fail = [&](const std::string& why) {
            return ParseError("line " + std::to_string(line.number) + ": " + why);
        };
        auto words = split_whitespace(line.text);
        if (words.size() != 5 || words[0] != "record") throw fail("expected 'record nu=.. g=.. d_dual=.. count=..'");
        auto value = [&](const std::string& w, const std::string& key) {
            if (w.rfind(key + "=", 0) != 0) throw fail("expected '" + key + "='");
            return w.substr(key.size() + 1);
        };
        SearchRecord r;
        try {
            r.nu = std::stoi(value(words[1], "nu"));
            r.d_dual = std::stoi(value(words[3], "d_dual"));
            r.count = std::stoull(value(words[4], "count"));
        } catch (const std::logic_error&) {
            throw fail("malformed integer");
        }
        if (r.nu < 1 || r.nu > kMaxSearchNu) throw fail("nu out of range");
        auto polys = split_top_level(value(words[2], "g"), ',');
        if (polys.size() != 4) throw fail("expected four generators");
        for (int i = 0; i < 4; ++i) {
            if (polys[i].size() != static_cast<std::size_t>(r.nu) + 1) throw fail("generator length must be nu + 1");
            for (std::size_t j = 0; j < polys[i].size(); ++j) {
                char c = polys[i][j];
                if (c != '0' && c != '1') throw fail("generators are binary strings");
                if (c == '1') r.generators[i] |= 1U << j;
            }
        }
        out.push_back(r);
    }
    return out;
}

}  // namespace qcc
