#include "isoext/comodule_io.hpp"
#include "isoext/errors.hpp"
#include "isoext/resolution.hpp"

#include <fmt/format.h>

#include <charconv>
#include <fstream>
#include <sstream>

namespace isoext {

namespace {

    int to_int(const std::string& tok, const char* what)
    {
        int v = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || p != tok.data() + tok.size())
            throw CorruptCheckpoint(fmt::format("bad {} field '{}'", what, tok));
        return v;
    }

    std::vector<std::string> words(const std::string& line)
    {
        std::vector<std::string> out;
        std::istringstream ss(line);
        std::string w;
        while (ss >> w)
            out.push_back(w);
        return out;
    }

}  // namespace

std::string checkpoint_serialize(const Resolution& res)
{
    std::string out;
    out += "ISOEXT-RES 1\n";
    out += "algebra G\n";
    out += fmt::format("module {}\n", res.module.id());
    out += fmt::format("bounds {} {}\n", res.done_s, res.done_t);
    for (int s = 0; s < static_cast<int>(res.levels.size()); ++s)
        for (size_t i = 0; i < res.levels[s].size(); ++i) {
            const auto& g = res.levels[s][i];
            out += fmt::format("gen {} {} {} {}\n", s, res.gen_label(s, static_cast<int>(i)), g.deg.p, g.deg.q);
        }
    for (int s = 0; s < static_cast<int>(res.levels.size()); ++s)
        for (size_t i = 0; i < res.levels[s].size(); ++i) {
            const auto& g = res.levels[s][i];
            out += fmt::format("dif {} {} =", s, res.gen_label(s, static_cast<int>(i)));
            bool first = true;
            if (s == 0) {
                for (const auto& e : g.diff0) {
                    out += fmt::format("{}0:{}", first ? " " : "+", res.module.elem_label(e));
                    first = false;
                }
            }
            else {
                for (const auto& term : g.diff) {
                    out += fmt::format("{}{}:{}", first ? " " : "+", exponents_str(term.op), res.gen_label(s - 1, term.target));
                    first = false;
                }
            }
            out += "\n";
        }
    out += "end\n";
    return out;
}

Resolution checkpoint_parse(const std::string& text, const ModuleSpec& module)
{
    std::istringstream in(text);
    std::string line;

    auto next_line = [&](const char* what) {
        if (!std::getline(in, line))
            throw CorruptCheckpoint(fmt::format("unexpected end of checkpoint before {}", what));
        return line;
    };

    auto header = words(next_line("header"));
    if (header.size() != 2 || header[0] != "ISOEXT-RES")
        throw CorruptCheckpoint("missing ISOEXT-RES header");
    if (header[1] != "1")
        throw VersionMismatch(fmt::format("checkpoint version {} is not supported", header[1]));

    auto algebra = words(next_line("algebra"));
    if (algebra.size() != 2 || algebra[0] != "algebra" || algebra[1] != "G")
        throw CorruptCheckpoint("bad algebra line");

    auto module_line = words(next_line("module"));
    if (module_line.size() != 2 || module_line[0] != "module")
        throw CorruptCheckpoint("bad module line");
    if (module_line[1] != module.id())
        throw CorruptCheckpoint(fmt::format("checkpoint was computed for module '{}', not '{}'", module_line[1], module.id()));

    auto bounds = words(next_line("bounds"));
    if (bounds.size() != 3 || bounds[0] != "bounds")
        throw CorruptCheckpoint("bad bounds line");

    Resolution res;
    res.module = module;
    res.done_s = to_int(bounds[1], "bounds s");
    res.done_t = to_int(bounds[2], "bounds t");
    res.levels.resize(std::max(0, res.done_s + 1));

    // gen lines, then dif lines in the same order, then the trailer
    struct PendingDiff
    {
        int s;
        std::string label;
        std::vector<std::pair<MonomialKey, std::string>> terms;
    };
    std::vector<PendingDiff> diffs;
    bool saw_end = false;

    while (std::getline(in, line)) {
        auto toks = words(line);
        if (toks.empty())
            throw CorruptCheckpoint("blank line inside checkpoint");
        if (toks[0] == "end") {
            saw_end = true;
            if (std::getline(in, line))
                throw CorruptCheckpoint("trailing data after end");
            break;
        }
        if (toks[0] == "gen") {
            if (!diffs.empty())
                throw CorruptCheckpoint("gen line after dif lines");
            if (toks.size() != 5)
                throw CorruptCheckpoint("bad gen line");
            int s = to_int(toks[1], "gen level");
            if (s < 0 || s >= static_cast<int>(res.levels.size()))
                throw CorruptCheckpoint("gen level outside bounds");
            if (toks[2] != res.gen_label(s, static_cast<int>(res.levels[s].size())))
                throw CorruptCheckpoint(fmt::format("gen label '{}' out of canonical order", toks[2]));
            res.levels[s].push_back({{to_int(toks[3], "gen t"), to_int(toks[4], "gen u")}, {}, {}});
        }
        else if (toks[0] == "dif") {
            if (toks.size() < 5 || toks[3] != "=")
                throw CorruptCheckpoint("bad dif line");
            PendingDiff d;
            d.s = to_int(toks[1], "dif level");
            d.label = toks[2];
            std::string terms;
            for (size_t i = 4; i < toks.size(); ++i)
                terms += toks[i];
            size_t start = 0;
            while (start < terms.size()) {
                size_t plus = terms.find('+', start);
                std::string term = terms.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
                auto colon = term.find(':');
                if (colon == std::string::npos)
                    throw CorruptCheckpoint(fmt::format("bad dif term '{}'", term));
                d.terms.emplace_back(monomial_from_exponents(term.substr(0, colon)), term.substr(colon + 1));
                if (plus == std::string::npos)
                    break;
                start = plus + 1;
            }
            diffs.push_back(std::move(d));
        }
        else {
            throw CorruptCheckpoint(fmt::format("unknown checkpoint line '{}'", toks[0]));
        }
    }
    if (!saw_end)
        throw CorruptCheckpoint("checkpoint is truncated (missing end)");

    int expected = res.total_generators();
    if (static_cast<int>(diffs.size()) != expected)
        throw CorruptCheckpoint(fmt::format("{} dif lines for {} generators", diffs.size(), expected));

    std::vector<size_t> seen(res.levels.size(), 0);
    for (const auto& d : diffs) {
        if (d.s < 0 || d.s >= static_cast<int>(res.levels.size()))
            throw CorruptCheckpoint("dif level outside bounds");
        size_t idx = seen[d.s]++;
        if (idx >= res.levels[d.s].size() || d.label != res.gen_label(d.s, static_cast<int>(idx)))
            throw CorruptCheckpoint(fmt::format("dif label '{}' out of canonical order", d.label));
        auto& gen = res.levels[d.s][idx];
        for (const auto& [op, target] : d.terms) {
            if (d.s == 0) {
                if (!op.is_one())
                    throw CorruptCheckpoint("level-0 dif term with a nontrivial operator");
                gen.diff0.push_back(res.module.elem_from_label(target));
            }
            else {
                if (op.is_one())
                    throw CorruptCheckpoint("unit coefficient in a dif term violates minimality");
                auto us = target.find('_');
                if (us == std::string::npos)
                    throw CorruptCheckpoint(fmt::format("bad dif target '{}'", target));
                if (to_int(target.substr(0, us), "target level") != d.s - 1)
                    throw CorruptCheckpoint(fmt::format("dif target '{}' is not one level down", target));
                int tgt = to_int(target.substr(us + 1), "target index");
                if (tgt < 0 || tgt >= static_cast<int>(res.levels[d.s - 1].size()))
                    throw CorruptCheckpoint(fmt::format("dif target '{}' out of range", target));
                gen.diff.push_back({op, tgt});
            }
        }
    }
    return res;
}

void checkpoint_save(const Resolution& res, const std::string& path)
{
    write_file_atomic(path, checkpoint_serialize(res));
}

Resolution resume(const std::string& path, const ModuleSpec& module, int max_s, int max_t, int threads)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw CorruptCheckpoint(fmt::format("cannot open checkpoint '{}'", path));
    std::ostringstream ss;
    ss << in.rdbuf();
    Resolution res = checkpoint_parse(ss.str(), module);
    extend_resolution(res, max_s, max_t, threads);
    return res;
}

}  // namespace isoext
