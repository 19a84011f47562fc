#include <doctest.h>

#include <random>

#include "nbldpc/code_builder.hpp"
#include "nbldpc/codec.hpp"
#include "nbldpc/rng.hpp"

using namespace nbldpc;

namespace {

Code worked_code() {
    // Generator rows [[1,0,2,1],[0,1,1,2]] = [I | P] with P = [[2,1],[1,2]];
    // the matching check matrix is [-P^T | I] = [[1,2,1,0],[2,1,0,1]] mod 3.
    FieldSpec f3(3);
    GeneratorMatrix g(f3, 2, 4, {0, 1, 2, 3}, {2, 1, 1, 2});
    CheckMatrix h(f3, 4, {{{0, 1}, {1, 2}, {2, 1}}, {{0, 2}, {1, 1}, {3, 1}}});
    REQUIRE(validate_code_pair(g, h));
    return Code{std::move(g), std::move(h), {}, 0};
}

ReceivedWord as_memory_word(const Codeword& c) {
    ReceivedWord r;
    r.mode = WordMode::memory;
    r.values.assign(c.begin(), c.end());
    return r;
}

}  // namespace

TEST_CASE("worked 2x4 encode example") {
    Code code = worked_code();
    // Independent multiply: w.[I|P] with P=[[2,1],[1,2]] gives [1,2,1,2].
    Codeword c = encode({1, 2}, code.g);
    CHECK(c == Codeword{1, 2, 1, 2});
    CHECK(is_clean(syndrome(as_memory_word(c), code.h)));
}

TEST_CASE("systematic form and linearity basics") {
    Code code = build_code({5, 24, 16, 3, 10, 9});
    std::mt19937_64 rng(123);
    CHECK(encode(InfoWord(16, 0), code.g) == Codeword(24, 0));
    for (int t = 0; t < 50; ++t) {
        InfoWord w(16);
        for (Symbol& s : w) s = static_cast<Symbol>(uniform_below(rng, 5));
        Codeword c = encode(w, code.g);
        CHECK(extract_info(c, code.g) == w);
        CHECK(is_clean(syndrome(as_memory_word(c), code.h)));
    }
    CHECK_THROWS_AS(encode(InfoWord(15, 0), code.g), ShapeMismatch);
}

TEST_CASE("syndrome linearity over random words") {
    Code code = build_code({7, 20, 12, 3, 10, 4});
    const FieldSpec& f = code.h.spec();
    std::mt19937_64 rng(99);
    for (int t = 0; t < 30; ++t) {
        std::vector<Symbol> u(20), v(20), mix(20);
        const Symbol a = static_cast<Symbol>(uniform_below(rng, 7));
        const Symbol b = static_cast<Symbol>(uniform_below(rng, 7));
        for (std::size_t i = 0; i < 20; ++i) {
            u[i] = static_cast<Symbol>(uniform_below(rng, 7));
            v[i] = static_cast<Symbol>(uniform_below(rng, 7));
            mix[i] = f.add(f.mul(a, u[i]), f.mul(b, v[i]));
        }
        Syndrome su = syndrome(u, code.h), sv = syndrome(v, code.h), sm = syndrome(mix, code.h);
        for (std::size_t j = 0; j < su.size(); ++j) {
            CHECK(sm[j] == f.add(f.mul(a, su[j]), f.mul(b, sv[j])));
        }
    }
}

TEST_CASE("single-symbol corruption is always detected") {
    Code code = build_code({3, 48, 32, 3, 12, 21});
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        InfoWord w(32);
        for (Symbol& s : w) s = static_cast<Symbol>(uniform_below(rng, 3));
        Codeword c = encode(w, code.g);
        const std::size_t pos = uniform_below(rng, c.size());
        const Symbol delta = static_cast<Symbol>(1 + uniform_below(rng, 2));
        c[pos] = code.h.spec().add(c[pos], delta);
        CHECK_FALSE(is_clean(syndrome(as_memory_word(c), code.h)));
    }
}

TEST_CASE("bumping one position reproduces the matching H column") {
    Code code = worked_code();
    Codeword c = encode({2, 1}, code.g);
    for (std::uint32_t pos = 0; pos < 4; ++pos) {
        Codeword bumped = c;
        bumped[pos] = code.h.spec().add(bumped[pos], 1);
        Syndrome s = syndrome(bumped, code.h);
        for (std::uint32_t j = 0; j < code.h.n_rows(); ++j) {
            Symbol expect = 0;
            for (const CheckEntry& e : code.h.row(j)) {
                if (e.col == pos) expect = e.val;
            }
            CHECK(s[j] == expect);
        }
    }
}

TEST_CASE("memory-mode words must hold residues") {
    Code code = worked_code();
    ReceivedWord r;
    r.mode = WordMode::memory;
    r.values = {0, 1, 3, 0};  // 3 is out of range for GF(3)
    CHECK_THROWS_AS(syndrome(r, code.h), OutOfDomain);
    r.values = {0, 1, -1, 0};
    CHECK_THROWS_AS(syndrome(r, code.h), OutOfDomain);
}

TEST_CASE("pim words reduce through residues, shifting by p is invisible") {
    Code code = worked_code();
    Codeword c = encode({1, 1}, code.g);
    ReceivedWord r;
    r.mode = WordMode::pim;
    for (Symbol s : c) r.values.push_back(static_cast<std::int64_t>(s) + 3 * 17);
    CHECK(is_clean(syndrome(r, code.h)));
}
