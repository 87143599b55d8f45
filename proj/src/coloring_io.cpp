#include "rrt/coloring_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "rrt/combinatorics.hpp"

namespace rrt {

namespace {

constexpr int kVersion = 1;

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::uint64_t parse_u64(std::string_view tok, std::size_t line) {
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || p != tok.data() + tok.size()) {
        throw ParseError("expected a decimal natural, got '" + std::string(tok) + "'", line);
    }
    return v;
}

std::uint64_t parse_field(std::string_view tok, std::string_view key, std::size_t line) {
    if (tok.substr(0, key.size()) != key) {
        throw ParseError("expected '" + std::string(key) + "<value>', got '" + std::string(tok) + "'",
                         line);
    }
    return parse_u64(tok.substr(key.size()), line);
}

// Builds the coloring, turning constructor complaints about the header into
// parse errors while leaving boundedness violations as precondition errors.
Coloring build(std::uint64_t k, std::uint64_t b, std::uint64_t n, std::vector<Color> table) {
    return Coloring(static_cast<std::size_t>(k), static_cast<std::size_t>(b),
                    static_cast<std::size_t>(n), std::move(table));
}

void check_header(std::uint64_t k, std::uint64_t b, std::uint64_t n, std::size_t line) {
    if (k < 1 || k > kMaxArity) throw ParseError("arity must lie in [1, 4]", line);
    if (b < 1) throw ParseError("bound must be at least 1", line);
    try {
        (void)table_size(static_cast<std::size_t>(k), static_cast<std::size_t>(n));
    } catch (const PreconditionError& e) {
        throw ParseError(e.what(), line);
    }
}

} // namespace

ColoringFormat parse_format(std::string_view name) {
    if (name == "rrcol") return ColoringFormat::rrcol;
    if (name == "json") return ColoringFormat::json;
    throw PreconditionError("unknown format '" + std::string(name) + "' (expected rrcol or json)");
}

std::string to_rrcol(const Coloring& f) {
    std::string out = "RRCOL 1 k=" + std::to_string(f.arity()) + " b=" + std::to_string(f.bound()) +
                      " n=" + std::to_string(f.domain_size()) + "\n";
    std::vector<Element> domain(f.domain_size());
    for (Element i = 0; i < domain.size(); ++i) domain[i] = i;
    Code rank = 0;
    for_each_subset(domain, f.arity(), [&](std::span<const Element> t) {
        for (Element x : t) {
            out += std::to_string(x);
            out += ' ';
        }
        out += std::to_string(f.at(rank++));
        out += '\n';
        return true;
    });
    return out;
}

Coloring parse_rrcol(std::string_view text) {
    std::size_t line_no = 0;
    bool have_header = false;
    std::uint64_t k = 0, b = 0, n = 0;
    std::vector<Color> table;
    std::size_t expected = 0;
    std::vector<Element> want;  // next tuple in colex order
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        const auto toks = split_ws(line);
        if (toks.empty()) continue;
        if (!have_header) {
            if (toks.size() != 5 || toks[0] != "RRCOL") {
                throw ParseError("expected header 'RRCOL 1 k=<arity> b=<bound> n=<domain>'", line_no);
            }
            if (parse_u64(toks[1], line_no) != kVersion) {
                throw ParseError("unsupported RRCOL version '" + std::string(toks[1]) + "'", line_no);
            }
            k = parse_field(toks[2], "k=", line_no);
            b = parse_field(toks[3], "b=", line_no);
            n = parse_field(toks[4], "n=", line_no);
            check_header(k, b, n, line_no);
            expected = table_size(k, n);
            table.reserve(expected);
            want.resize(k);
            for (Element i = 0; i < k; ++i) want[i] = i;
            have_header = true;
            continue;
        }
        if (toks.size() != k + 1) {
            throw ParseError("expected " + std::to_string(k + 1) + " fields, got " +
                                 std::to_string(toks.size()),
                             line_no);
        }
        if (table.size() == expected) throw ParseError("more than C(n,k) data lines", line_no);
        for (std::size_t i = 0; i < k; ++i) {
            if (parse_u64(toks[i], line_no) != want[i]) {
                throw ParseError("tuples must be listed in colex order; expected tuple starting at rank " +
                                     std::to_string(table.size()),
                                 line_no);
            }
        }
        table.push_back(parse_u64(toks[k], line_no));
        // Advance `want` to its colex successor.
        std::size_t i = 0;
        while (i + 1 < k && want[i] + 1 == want[i + 1]) ++i;
        ++want[i];
        for (std::size_t j = 0; j < i; ++j) want[j] = static_cast<Element>(j);
    }
    if (!have_header) throw ParseError("missing RRCOL header", line_no);
    if (table.size() != expected) {
        throw ParseError("expected " + std::to_string(expected) + " data lines, got " +
                             std::to_string(table.size()),
                         line_no);
    }
    return build(k, b, n, std::move(table));
}

nlohmann::json to_json(const Coloring& f) {
    nlohmann::json entries = nlohmann::json::array();
    std::vector<Element> domain(f.domain_size());
    for (Element i = 0; i < domain.size(); ++i) domain[i] = i;
    Code rank = 0;
    for_each_subset(domain, f.arity(), [&](std::span<const Element> t) {
        nlohmann::json row = nlohmann::json::array();
        for (Element x : t) row.push_back(x);
        row.push_back(f.at(rank++));
        entries.push_back(std::move(row));
        return true;
    });
    return {{"version", kVersion},
            {"arity", f.arity()},
            {"bound", f.bound()},
            {"n", f.domain_size()},
            {"entries", std::move(entries)}};
}

Coloring coloring_from_json(const nlohmann::json& j) {
    try {
        if (j.at("version").get<int>() != kVersion) throw ParseError("unsupported version", 1);
        const auto k = j.at("arity").get<std::uint64_t>();
        const auto b = j.at("bound").get<std::uint64_t>();
        const auto n = j.at("n").get<std::uint64_t>();
        check_header(k, b, n, 1);
        const std::size_t expected = table_size(k, n);
        const auto& entries = j.at("entries");
        if (entries.size() != expected) {
            throw ParseError("expected " + std::to_string(expected) + " entries, got " +
                                 std::to_string(entries.size()),
                             1);
        }
        std::vector<Color> table(expected);
        std::vector<bool> seen(expected, false);
        std::vector<Element> t(k);
        for (const auto& row : entries) {
            if (!row.is_array() || row.size() != k + 1) throw ParseError("malformed entry", 1);
            for (std::size_t i = 0; i < k; ++i) t[i] = row[i].get<Element>();
            if (!is_strictly_increasing(t) || t.back() >= n) {
                throw ParseError("entry tuple " + row.dump() + " is not an increasing tuple over [0,n)", 1);
            }
            const Code r = encode_tuple(t).rank;
            if (seen[r]) throw ParseError("duplicate entry " + row.dump(), 1);
            seen[r] = true;
            table[r] = row[k].get<Color>();
        }
        return build(k, b, n, std::move(table));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed coloring JSON: ") + e.what(), 1);
    }
}

std::string serialize(const Coloring& f, ColoringFormat format) {
    if (format == ColoringFormat::json) return to_json(f).dump() + "\n";
    return to_rrcol(f);
}

Coloring parse_coloring(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(e.what(), 1);
        }
        return coloring_from_json(j);
    }
    return parse_rrcol(text);
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw IoError("failed writing '" + path.string() + "'");
}

Coloring read_coloring(const std::filesystem::path& path) { return parse_coloring(read_text_file(path)); }

} // namespace rrt
