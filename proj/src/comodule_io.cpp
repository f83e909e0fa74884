#include "isoext/comodule_io.hpp"

#include "isoext/errors.hpp"

#include <fmt/format.h>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace isoext {

namespace {

    int parse_int(const std::string& tok, const std::string& what)
    {
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            throw ParseError(fmt::format("{} is not an integer: '{}'", what, tok));
        return value;
    }

    std::vector<std::string> split_ws(const std::string& line)
    {
        std::vector<std::string> out;
        std::istringstream ss(line);
        std::string tok;
        while (ss >> tok)
            out.push_back(tok);
        return out;
    }

}  // namespace

std::string exponents_str(const MonomialKey& m)
{
    if (m.xi.empty())
        return "0";
    std::string s;
    for (size_t j = 0; j < m.xi.size(); ++j) {
        if (j)
            s += ',';
        s += std::to_string(m.xi[j]);
    }
    return s;
}

MonomialKey monomial_from_exponents(const std::string& s)
{
    if (s.empty())
        throw ParseError("empty exponent list");
    MonomialKey m;
    size_t start = 0;
    while (start <= s.size()) {
        size_t comma = s.find(',', start);
        std::string tok = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        int e = parse_int(tok, "xi exponent");
        if (e < 0)
            throw ParseError(fmt::format("negative xi exponent in '{}'", s));
        m.xi.push_back(e);
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    m.normalize();
    return m;
}

Comodule parse_comodule(const std::string& text)
{
    struct RawAct
    {
        int elem;
        MonomialKey mon;
        std::string target;
        int lineno;
    };

    Comodule c;
    std::vector<RawAct> acts;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int current = -1;

    while (std::getline(in, line)) {
        ++lineno;
        auto toks = split_ws(line);
        if (toks.empty() || toks[0][0] == '#')
            continue;
        if (toks[0] == "elem") {
            if (toks.size() != 4)
                throw ParseError(fmt::format("line {}: expected 'elem <label> <p> <q>'", lineno));
            if (c.find(toks[1]) >= 0)
                throw ParseError(fmt::format("line {}: duplicate label '{}'", lineno, toks[1]));
            Bidegree d{parse_int(toks[2], "p"), parse_int(toks[3], "q")};
            c.basis.push_back({toks[1], d});
            c.coaction.emplace_back();
            current = c.dim() - 1;
        }
        else if (toks[0] == "act") {
            if (toks.size() != 4 || toks[2] != "->")
                throw ParseError(fmt::format("line {}: expected 'act <exponents> -> <target>'", lineno));
            if (current < 0)
                throw ParseError(fmt::format("line {}: 'act' before any 'elem'", lineno));
            acts.push_back({current, monomial_from_exponents(toks[1]), toks[3], lineno});
        }
        else {
            throw ParseError(fmt::format("line {}: unknown directive '{}'", lineno, toks[0]));
        }
    }

    for (const auto& a : acts) {
        int target = c.find(a.target);
        if (target < 0)
            throw ParseError(fmt::format("line {}: unknown target label '{}'", a.lineno, a.target));
        c.coaction[a.elem].push_back({a.mon, target});
    }

    // auto-insert the counit term where omitted
    for (int j = 0; j < c.dim(); ++j) {
        bool has_unit = false;
        for (const auto& t : c.coaction[j])
            if (t.mon.is_one())
                has_unit = true;
        if (!has_unit)
            c.coaction[j].push_back({MonomialKey::one(), j});
    }

    c.canonicalize();
    return c;
}

Comodule load_comodule(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError(fmt::format("cannot open comodule file '{}'", path));
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_comodule(ss.str());
}

std::string serialize_comodule(const Comodule& c)
{
    std::string out;
    for (int j = 0; j < c.dim(); ++j) {
        out += fmt::format("elem {} {} {}\n", c.basis[j].label, c.basis[j].deg.p, c.basis[j].deg.q);
        for (const auto& t : c.coaction[j]) {
            if (t.mon.is_one() && t.target == j)
                continue;  // counit term is implicit
            out += fmt::format("  act {} -> {}\n", exponents_str(t.mon), c.basis[t.target].label);
        }
    }
    return out;
}

void write_file_atomic(const std::string& path, const std::string& content)
{
    namespace fs = std::filesystem;
    fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw Error(fmt::format("cannot write '{}'", tmp.string()));
        out << content;
        if (!out.flush())
            throw Error(fmt::format("failed writing '{}'", tmp.string()));
    }
    fs::rename(tmp, target);
}

}  // namespace isoext
