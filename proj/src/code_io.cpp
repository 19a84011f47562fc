#include "nbldpc/code_io.hpp"

#include <zlib.h>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "nbldpc/errors.hpp"

namespace nbldpc {

namespace {

std::uint32_t crc_of(std::string_view bytes) {
    uLong crc = crc32(0L, Z_NULL, 0);
    crc = crc32(crc, reinterpret_cast<const Bytef*>(bytes.data()), static_cast<uInt>(bytes.size()));
    return static_cast<std::uint32_t>(crc);
}

// Line-oriented scanner keeping 1-based line/column for diagnostics.
class Scanner {
  public:
    explicit Scanner(std::istream& in) {
        std::ostringstream ss;
        ss << in.rdbuf();
        text_ = ss.str();
    }

    const std::string& text() const { return text_; }

    bool next_line(std::string_view& line) {
        if (pos_ >= text_.size()) return false;
        line_start_ = pos_;
        std::size_t nl = text_.find('\n', pos_);
        if (nl == std::string::npos) {
            line = std::string_view(text_).substr(pos_);
            pos_ = text_.size();
        } else {
            line = std::string_view(text_).substr(pos_, nl - pos_);
            pos_ = nl + 1;
        }
        ++line_no_;
        return true;
    }

    std::size_t line_no() const { return line_no_; }
    std::size_t line_start() const { return line_start_; }
    std::size_t consumed_through_line() const { return pos_; }

    [[noreturn]] void fail(const std::string& msg, std::size_t column) const {
        throw ParseError(msg, line_no_, column);
    }

  private:
    std::string text_;
    std::size_t pos_ = 0;
    std::size_t line_start_ = 0;
    std::size_t line_no_ = 0;
};

struct Tokenizer {
    std::string_view line;
    std::size_t at = 0;

    bool next(std::string_view& tok, std::size_t& col) {
        while (at < line.size() && (line[at] == ' ' || line[at] == '\t')) ++at;
        if (at >= line.size()) return false;
        std::size_t start = at;
        while (at < line.size() && line[at] != ' ' && line[at] != '\t') ++at;
        tok = line.substr(start, at - start);
        col = start + 1;
        return true;
    }
};

std::int64_t parse_int(const Scanner& sc, std::string_view tok, std::size_t col, const char* what) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        sc.fail(std::string("expected ") + what + ", got '" + std::string(tok) + "'", col);
    }
    return v;
}

Tokenizer expect_line(Scanner& sc, const char* what) {
    std::string_view line;
    if (!sc.next_line(line)) throw ParseError(std::string("unexpected end of file, expected ") + what, sc.line_no() + 1, 1);
    return Tokenizer{line};
}

std::vector<std::int64_t> expect_ints(Scanner& sc, std::size_t count, const char* what) {
    Tokenizer tz = expect_line(sc, what);
    std::vector<std::int64_t> out;
    out.reserve(count);
    std::string_view tok;
    std::size_t col = 0;
    while (tz.next(tok, col)) out.push_back(parse_int(sc, tok, col, what));
    if (out.size() != count) {
        sc.fail(std::string("expected ") + std::to_string(count) + " " + what + " entries, got " +
                    std::to_string(out.size()),
                1);
    }
    return out;
}

}  // namespace

void write_code(std::ostream& out, const GeneratorMatrix& g, const CheckMatrix& h) {
    if (g.l() != h.n_cols() || g.m() + h.n_rows() != g.l() || !(g.spec() == h.spec())) {
        throw ShapeMismatch("generator and check matrix shapes disagree");
    }
    std::ostringstream body;
    const std::uint32_t l = h.n_cols();
    const std::uint32_t n = h.n_rows();
    std::uint32_t max_col = 0, max_row = 0;
    for (std::uint32_t d : h.col_degrees()) max_col = std::max(max_col, d);
    for (std::uint32_t j = 0; j < n; ++j) max_row = std::max(max_row, static_cast<std::uint32_t>(h.row(j).size()));

    body << h.spec().p() << ' ' << l << ' ' << n << '\n';
    body << max_col << ' ' << max_row << '\n';
    for (std::uint32_t c = 0; c < l; ++c) body << (c ? " " : "") << h.col_degrees()[c];
    body << '\n';
    for (std::uint32_t j = 0; j < n; ++j) body << (j ? " " : "") << h.row(j).size();
    body << '\n';
    for (std::uint32_t j = 0; j < n; ++j) {
        bool first = true;
        for (const CheckEntry& e : h.row(j)) {
            body << (first ? "" : " ") << (e.col + 1) << ':' << e.val;
            first = false;
        }
        body << '\n';
    }
    body << "perm";
    for (std::uint32_t c : g.perm()) body << ' ' << c;
    body << '\n';
    body << "G\n";
    for (std::uint32_t i = 0; i < g.m(); ++i) {
        for (std::uint32_t j = 0; j < g.n_parity(); ++j) body << (j ? " " : "") << g.parity_at(i, j);
        body << '\n';
    }
    const std::string s = body.str();
    char crc_hex[9];
    std::snprintf(crc_hex, sizeof crc_hex, "%08x", crc_of(s));
    out << s << "crc32 " << crc_hex << '\n';
}

std::pair<GeneratorMatrix, CheckMatrix> read_code(std::istream& in) {
    Scanner sc(in);
    std::string_view tok;
    std::size_t col = 0;

    Tokenizer header = expect_line(sc, "header");
    auto take = [&](Tokenizer& tz, const char* what) {
        if (!tz.next(tok, col)) sc.fail(std::string("missing ") + what, tz.at + 1);
        return parse_int(sc, tok, col, what);
    };
    const std::int64_t p = take(header, "field order");
    const std::int64_t l = take(header, "codeword length");
    const std::int64_t n = take(header, "row count");
    if (p < 3 || p > 65521) sc.fail("field order out of range", 1);
    if (l <= 0 || n <= 0 || n >= l) sc.fail("invalid dimensions", 1);
    FieldSpec spec(static_cast<std::uint32_t>(p));
    const std::uint32_t m = static_cast<std::uint32_t>(l - n);

    Tokenizer degs = expect_line(sc, "degree bounds");
    take(degs, "max column degree");
    take(degs, "max row degree");

    std::vector<std::int64_t> col_deg = expect_ints(sc, static_cast<std::size_t>(l), "column degree");
    std::vector<std::int64_t> row_deg = expect_ints(sc, static_cast<std::size_t>(n), "row degree");

    std::vector<std::vector<CheckEntry>> rows(static_cast<std::size_t>(n));
    for (std::int64_t j = 0; j < n; ++j) {
        Tokenizer tz = expect_line(sc, "row entries");
        while (tz.next(tok, col)) {
            std::size_t sep = tok.find(':');
            if (sep == std::string_view::npos) sc.fail("expected col:val pair, got '" + std::string(tok) + "'", col);
            std::int64_t c = parse_int(sc, tok.substr(0, sep), col, "column index");
            std::int64_t v = parse_int(sc, tok.substr(sep + 1), col + sep + 1, "coefficient");
            if (c < 1 || c > l) sc.fail("column index " + std::to_string(c) + " out of 1.." + std::to_string(l), col);
            if (v < 1 || v >= p) sc.fail("coefficient " + std::to_string(v) + " out of 1.." + std::to_string(p - 1),
                                         col + sep + 1);
            rows[static_cast<std::size_t>(j)].push_back(
                {static_cast<std::uint32_t>(c - 1), static_cast<Symbol>(v)});
        }
        if (rows[static_cast<std::size_t>(j)].size() != static_cast<std::size_t>(row_deg[static_cast<std::size_t>(j)])) {
            sc.fail("row has " + std::to_string(rows[static_cast<std::size_t>(j)].size()) + " entries, degree line says " +
                        std::to_string(row_deg[static_cast<std::size_t>(j)]),
                    1);
        }
    }

    Tokenizer ptz = expect_line(sc, "perm line");
    if (!ptz.next(tok, col) || tok != "perm") sc.fail("expected 'perm'", col ? col : 1);
    std::vector<std::uint32_t> perm;
    perm.reserve(static_cast<std::size_t>(l));
    while (ptz.next(tok, col)) {
        std::int64_t v = parse_int(sc, tok, col, "perm entry");
        if (v < 0 || v >= l) sc.fail("perm entry out of range", col);
        perm.push_back(static_cast<std::uint32_t>(v));
    }
    if (perm.size() != static_cast<std::size_t>(l)) sc.fail("perm must have l entries", 1);

    Tokenizer gtz = expect_line(sc, "G section");
    if (!gtz.next(tok, col) || tok != "G") sc.fail("expected 'G'", col ? col : 1);
    std::vector<Symbol> parity;
    parity.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(n));
    for (std::uint32_t i = 0; i < m; ++i) {
        std::vector<std::int64_t> vals = expect_ints(sc, static_cast<std::size_t>(n), "parity residue");
        for (std::int64_t v : vals) {
            if (v < 0 || v >= p) sc.fail("parity residue out of range", 1);
            parity.push_back(static_cast<Symbol>(v));
        }
    }

    const std::size_t covered = sc.consumed_through_line();
    Tokenizer ctz = expect_line(sc, "checksum line");
    if (!ctz.next(tok, col) || tok != "crc32") sc.fail("expected 'crc32'", col ? col : 1);
    if (!ctz.next(tok, col)) sc.fail("missing checksum value", 1);
    std::uint32_t stored = 0;
    {
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), stored, 16);
        if (ec != std::errc{} || ptr != tok.data() + tok.size()) sc.fail("bad checksum hex", col);
    }
    const std::uint32_t actual = crc_of(std::string_view(sc.text()).substr(0, covered));
    if (actual != stored) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "checksum mismatch: stored %08x, computed %08x", stored, actual);
        throw ChecksumMismatch(buf);
    }

    CheckMatrix h(spec, static_cast<std::uint32_t>(l), std::move(rows));
    for (std::uint32_t c = 0; c < static_cast<std::uint32_t>(l); ++c) {
        if (h.col_degrees()[c] != static_cast<std::uint32_t>(col_deg[c])) {
            throw ParseError("column degree line disagrees with row entries at column " + std::to_string(c + 1), 3,
                             c + 1);
        }
    }
    GeneratorMatrix g(spec, m, static_cast<std::uint32_t>(l), std::move(perm), std::move(parity));
    return {std::move(g), std::move(h)};
}

void save_code(const GeneratorMatrix& g, const CheckMatrix& h, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open '" + path + "' for writing");
    write_code(f, g, h);
    f.flush();
    if (!f) throw IoError("write failed for '" + path + "'");
}

std::pair<GeneratorMatrix, CheckMatrix> load_code(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open '" + path + "'");
    return read_code(f);
}

}  // namespace nbldpc
