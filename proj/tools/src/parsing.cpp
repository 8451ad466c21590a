#include "parsing.hpp"

#include <charconv>

#include "padelab/errors.hpp"

namespace padelab::cli {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        auto pos = text.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

double parse_double(const std::string& s, const char* what) {
    try {
        std::size_t used = 0;
        double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ArgumentError(std::string("bad ") + what + " '" + s + "'");
    }
}

int parse_int(const std::string& s, const char* what) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw ArgumentError(std::string("bad ") + what + " '" + s + "'");
    return v;
}

} // namespace

std::vector<GaussianRational> parse_scalar_list(const std::string& text) {
    if (text.empty()) throw ArgumentError("empty coefficient list");
    std::vector<GaussianRational> out;
    for (const auto& part : split(text, ',')) out.push_back(parse_scalar(part));
    return out;
}

Descriptor parse_descriptor(const std::string& text, int default_density) {
    const auto parts = split(text, ':');
    const auto& kind = parts[0];
    if (kind == "disk") {
        if (parts.size() < 3 || parts.size() > 4)
            throw ArgumentError("disk descriptor needs disk:CENTER:RADIUS[:DENSITY]");
        DiskDescriptor d;
        d.center = parse_scalar(parts[1]).to_complex();
        d.radius = parse_double(parts[2], "radius");
        d.density = parts.size() == 4 ? parse_int(parts[3], "density") : default_density;
        return d;
    }
    if (kind == "circle") {
        if (parts.size() != 4)
            throw ArgumentError("circle descriptor needs circle:CENTER:RADIUS:COUNT");
        CircleDescriptor c;
        c.center = parse_scalar(parts[1]).to_complex();
        c.radius = parse_double(parts[2], "radius");
        c.count = parse_int(parts[3], "count");
        return c;
    }
    if (kind == "annulus") {
        if (parts.size() < 4 || parts.size() > 5)
            throw ArgumentError("annulus descriptor needs annulus:CENTER:RIN:ROUT[:DENSITY]");
        AnnulusDescriptor a;
        a.center = parse_scalar(parts[1]).to_complex();
        a.r_inner = parse_double(parts[2], "inner radius");
        a.r_outer = parse_double(parts[3], "outer radius");
        a.density = parts.size() == 5 ? parse_int(parts[4], "density") : default_density;
        return a;
    }
    if (kind == "points") {
        if (parts.size() != 2) throw ArgumentError("point list needs points:z1,z2,...");
        PointListDescriptor p;
        for (const auto& z : parse_scalar_list(parts[1])) p.points.push_back(z.to_complex());
        return p;
    }
    throw ArgumentError("unknown descriptor kind '" + kind + "'");
}

IndexFamily parse_index_rule(const std::string& text) {
    const auto parts = split(text, ':');
    const auto& kind = parts[0];
    if (kind == "diagonal") {
        if (parts.size() != 1) throw ArgumentError("diagonal rule takes no arguments");
        return IndexFamily(DiagonalRule{});
    }
    if (kind == "row") {
        if (parts.size() != 2) throw ArgumentError("row rule needs row:Q");
        return IndexFamily(RowRule{parse_int(parts[1], "row index")});
    }
    if (kind == "column") {
        if (parts.size() != 2) throw ArgumentError("column rule needs column:P");
        return IndexFamily(ColumnRule{parse_int(parts[1], "column index")});
    }
    if (kind == "list") {
        if (parts.size() != 2) throw ArgumentError("list rule needs list:p/q,p/q,...");
        ExplicitRule rule;
        for (const auto& pair : split(parts[1], ',')) {
            const auto pq = split(pair, '/');
            if (pq.size() != 2) throw ArgumentError("index pair must look like p/q");
            rule.pairs.emplace_back(parse_int(pq[0], "p"), parse_int(pq[1], "q"));
        }
        return IndexFamily(std::move(rule));
    }
    throw ArgumentError("unknown index rule '" + kind + "'");
}

} // namespace padelab::cli
