#include "roundfold/textio.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace roundfold {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot read file: " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

// ---- fiber expressions -----------------------------------------------------

namespace {

struct ExprCursor {
    const std::string& text;
    size_t pos = 0;
    int line;

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c))
            throw ParseError(line, std::string("expected '") + c + "' in fiber expression at offset " +
                                       std::to_string(pos));
    }
    std::string ident() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        if (start == pos) throw ParseError(line, "expected a name in fiber expression");
        return text.substr(start, pos - start);
    }
    int64_t integer() {
        skip_ws();
        size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos || (pos - start == 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
            throw ParseError(line, "expected an integer in fiber expression");
        return std::stoll(text.substr(start, pos - start));
    }
};

AbGroup parse_group(ExprCursor& c);

AbGroup parse_group_term(ExprCursor& c) {
    c.skip_ws();
    if (c.pos < c.text.size() && c.text[c.pos] == '0') {
        ++c.pos;
        return AbGroup::zero();
    }
    if (c.pos < c.text.size() && c.text[c.pos] == 'Z') {
        ++c.pos;
        if (c.pos < c.text.size() && c.text[c.pos] == '^') {
            ++c.pos;
            int64_t r = c.integer();
            if (r < 0) throw ParseError(c.line, "negative rank");
            return AbGroup::free(static_cast<int>(r));
        }
        if (c.pos < c.text.size() && c.text[c.pos] == '/') {
            ++c.pos;
            int64_t d = c.integer();
            if (d < 0) throw ParseError(c.line, "negative torsion order");
            return AbGroup::cyclic(d);
        }
        return AbGroup::free(1);
    }
    throw ParseError(c.line, "expected a group term (0, Z, Z^r or Z/d)");
}

AbGroup parse_group(ExprCursor& c) {
    AbGroup g = parse_group_term(c);
    while (c.eat('+')) g = direct_sum(g, parse_group_term(c));
    return g;
}

ManifoldHomology parse_expr(ExprCursor& c) {
    std::string name = c.ident();
    if (name == "empty") return ManifoldHomology::empty();
    if (name == "sphere" || name == "disc" || name == "torus") {
        c.expect('(');
        int64_t k = c.integer();
        c.expect(')');
        if (name == "sphere") return sphere(static_cast<int>(k));
        if (name == "disc") return disc(static_cast<int>(k));
        return torus_surface(static_cast<int>(k));
    }
    if (name == "sphere_minus_discs") {
        c.expect('(');
        int64_t k = c.integer();
        c.expect(',');
        int64_t h = c.integer();
        c.expect(')');
        return sphere_minus_discs(static_cast<int>(k), static_cast<int>(h));
    }
    if (name == "product" || name == "disjoint_union") {
        c.expect('(');
        ManifoldHomology a = parse_expr(c);
        c.expect(',');
        ManifoldHomology b = parse_expr(c);
        c.expect(')');
        return name == "product" ? kunneth_with(a, b) : disjoint_union(a, b);
    }
    if (name == "explicit") {
        c.expect('(');
        std::string key = c.ident();
        if (key != "dim") throw ParseError(c.line, "explicit(...) must start with dim=");
        c.expect('=');
        int64_t dim = c.integer();
        if (dim < 0) throw ParseError(c.line, "explicit: negative dimension");
        std::vector<AbGroup> groups(static_cast<size_t>(dim) + 1, AbGroup::zero());
        std::vector<bool> seen(static_cast<size_t>(dim) + 1, false);
        while (c.eat(';')) {
            std::string h = c.ident();
            if (h.size() < 2 || h[0] != 'h')
                throw ParseError(c.line, "explicit: expected hK=group, got '" + h + "'");
            int k = 0;
            try {
                k = std::stoi(h.substr(1));
            } catch (const std::exception&) {
                throw ParseError(c.line, "explicit: bad degree in '" + h + "'");
            }
            if (k < 0 || k > dim) throw ParseError(c.line, "explicit: degree out of range in '" + h + "'");
            c.expect('=');
            groups[static_cast<size_t>(k)] = parse_group(c);
            seen[static_cast<size_t>(k)] = true;
        }
        c.expect(')');
        for (size_t k = 0; k < seen.size(); ++k)
            if (!seen[k])
                throw ParseError(c.line, "explicit: missing group h" + std::to_string(k));
        // Label is regenerated canonically below.
        std::ostringstream label;
        label << "explicit(dim=" << dim;
        for (size_t k = 0; k < groups.size(); ++k)
            label << ";h" << k << "=" << group_expression(groups[k]);
        label << ")";
        try {
            return explicit_homology(static_cast<int>(dim), std::move(groups), label.str());
        } catch (const DomainError& e) {
            throw ParseError(c.line, e.what());
        }
    }
    throw ParseError(c.line, "unknown fiber constructor '" + name + "'");
}

ManifoldHomology parse_expression_at(const std::string& text, int line) {
    ExprCursor c{text, 0, line};
    ManifoldHomology m;
    try {
        m = parse_expr(c);
    } catch (const DomainError& e) {
        throw ParseError(line, e.what());
    }
    c.skip_ws();
    if (c.pos != text.size())
        throw ParseError(line, "trailing characters after fiber expression: '" + text.substr(c.pos) + "'");
    return m;
}

}  // namespace

ManifoldHomology parse_homology_expression(const std::string& text) {
    return parse_expression_at(text, 0);
}

std::string homology_expression(const ManifoldHomology& m) {
    return m.is_empty() ? "empty" : m.label;
}

AbGroup parse_group_expression(const std::string& text) {
    ExprCursor c{text, 0, 0};
    AbGroup g = parse_group(c);
    c.skip_ws();
    if (c.pos != text.size()) throw ParseError(0, "trailing characters after group expression");
    return g;
}

std::string group_expression(const AbGroup& g) {
    if (g.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    if (g.rank == 1)
        out << "Z", first = false;
    else if (g.rank > 1)
        out << "Z^" << g.rank, first = false;
    for (int64_t d : g.torsion) {
        if (!first) out << "+";
        out << "Z/" << d;
        first = false;
    }
    return out.str();
}

// ---- auto fill -------------------------------------------------------------

std::optional<HomMatrix> auto_inclusion(const AbGroup& source, const AbGroup& target, int degree,
                                        Ring ring) {
    if (source.generators() == 0 || target.generators() == 0)
        return HomMatrix::zero(source, target, ring);
    bool target_connected = ring == Ring::Integers ? target == AbGroup::free(1)
                                                   : target == AbGroup::mod_two_vector_space(1);
    if (degree == 0 && target_connected) {
        IntMatrix m(1, source.generators());
        for (int c = 0; c < m.cols; ++c) m.at(0, c) = 1;
        return HomMatrix(source, target, std::move(m), ring);
    }
    if (source == target) return HomMatrix::identity(source, ring);
    return std::nullopt;
}

// ---- matrices --------------------------------------------------------------

namespace {

std::vector<std::vector<int64_t>> parse_matrix_rows(const std::string& text, int line) {
    ExprCursor c{text, 0, line};
    c.expect('[');
    std::vector<std::vector<int64_t>> rows;
    c.skip_ws();
    if (!c.eat(']')) {
        do {
            c.expect('[');
            std::vector<int64_t> row;
            c.skip_ws();
            if (!c.eat(']')) {
                do {
                    row.push_back(c.integer());
                } while (c.eat(','));
                c.expect(']');
            }
            rows.push_back(std::move(row));
        } while (c.eat(','));
        c.expect(']');
    }
    c.skip_ws();
    if (c.pos != text.size()) throw ParseError(line, "trailing characters after matrix");
    return rows;
}

std::string matrix_text(const IntMatrix& m) { return m.str(); }

// ---- line-oriented scaffolding ----------------------------------------------

struct Line {
    int number;
    std::string text;
};

std::vector<Line> significant_lines(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        size_t hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        size_t a = raw.find_first_not_of(" \t");
        if (a == std::string::npos) continue;
        size_t b = raw.find_last_not_of(" \t");
        out.push_back({number, raw.substr(a, b - a + 1)});
    }
    return out;
}

bool is_section(const std::string& s) { return s.size() >= 2 && s.front() == '[' && s.back() == ']'; }

std::pair<std::string, std::string> split_key_value(const Line& line) {
    size_t eq = line.text.find('=');
    if (eq == std::string::npos) throw ParseError(line.number, "expected 'key = value'");
    auto trim = [](std::string s) {
        size_t a = s.find_first_not_of(" \t");
        if (a == std::string::npos) return std::string();
        size_t b = s.find_last_not_of(" \t");
        return s.substr(a, b - a + 1);
    };
    return {trim(line.text.substr(0, eq)), trim(line.text.substr(eq + 1))};
}

bool parse_bool(const std::string& v, int line) {
    if (v == "true") return true;
    if (v == "false") return false;
    throw ParseError(line, "expected true or false, got '" + v + "'");
}

int parse_int_value(const std::string& v, int line) {
    try {
        size_t pos = 0;
        int out = std::stoi(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return out;
    } catch (const std::exception&) {
        throw ParseError(line, "expected an integer, got '" + v + "'");
    }
}

}  // namespace

// ---- fold map descriptors ---------------------------------------------------

std::string serialize(const FoldMapDescriptor& d) {
    std::ostringstream out;
    out << "[map]\n";
    out << "m = " << d.m << "\n";
    out << "n = " << d.n << "\n";
    out << "l = " << d.l << "\n";
    out << "image = " << image_kind_name(d.image_kind) << "\n";
    out << "l_trivial = " << (d.flags.l_trivial ? "true" : "false") << "\n";
    out << "s_trivial = "
        << (d.flags.s_trivial ? (*d.flags.s_trivial ? "true" : "false") : "unknown") << "\n";
    for (const Region& r : d.regions) {
        out << "\n[region " << r.index << "]\n";
        out << "fiber = " << homology_expression(r.fiber) << "\n";
    }
    for (const SingularComponent& s : d.singular) {
        out << "\n[singular " << s.index << "]\n";
        out << "normal_fiber = " << homology_expression(s.normal_fiber) << "\n";
        for (Side side : {Side::Inner, Side::Outer}) {
            const ManifoldHomology& boundary =
                side == Side::Inner ? s.inner_boundary_fiber : s.outer_boundary_fiber;
            for (int degree = 0; degree < kStoredDegrees; ++degree)
                for (Ring ring : {Ring::Integers, Ring::ModTwo}) {
                    const auto& h = s.incl(side, degree, ring);
                    if (!h) continue;
                    out << (side == Side::Inner ? "inner" : "outer") << ".h" << degree << "."
                        << (ring == Ring::Integers ? "z" : "z2") << " = ";
                    auto forced = auto_inclusion(boundary.group(degree, ring),
                                                 s.normal_fiber.group(degree, ring), degree, ring);
                    if (forced && *forced == *h)
                        out << "auto\n";
                    else
                        out << matrix_text(h->matrix) << "\n";
                }
        }
    }
    return out.str();
}

FoldMapDescriptor parse_descriptor(const std::string& text) {
    std::vector<Line> lines = significant_lines(text);
    FoldMapDescriptor d;
    bool saw_map = false, saw_m = false, saw_n = false, saw_l = false, saw_image = false;
    std::vector<std::optional<ManifoldHomology>> region_fibers;
    struct PendingMatrix {
        int line;
        std::string value;
    };
    struct PendingSingular {
        int line = 0;
        std::optional<ManifoldHomology> normal;
        std::map<std::string, PendingMatrix> matrices;
    };
    std::map<int, PendingSingular> singulars;

    enum class SectionKind { None, Map, Region, Singular };
    SectionKind section = SectionKind::None;
    int section_index = -1;

    for (const Line& line : lines) {
        if (is_section(line.text)) {
            std::string inner = line.text.substr(1, line.text.size() - 2);
            std::istringstream head(inner);
            std::string word;
            head >> word;
            if (word == "map") {
                section = SectionKind::Map;
                saw_map = true;
            } else if (word == "region" || word == "singular") {
                int index;
                if (!(head >> index)) throw ParseError(line.number, "section needs an index: [" + word + " i]");
                section = word == "region" ? SectionKind::Region : SectionKind::Singular;
                section_index = index;
                if (section == SectionKind::Region) {
                    if (index < 0) throw ParseError(line.number, "negative region index");
                    if (static_cast<size_t>(index) >= region_fibers.size())
                        region_fibers.resize(static_cast<size_t>(index) + 1);
                } else {
                    if (index < 1) throw ParseError(line.number, "singular components are indexed from 1");
                    singulars[index].line = line.number;
                }
            } else {
                throw ParseError(line.number, "unknown section [" + inner + "]");
            }
            continue;
        }
        auto [key, value] = split_key_value(line);
        switch (section) {
            case SectionKind::None:
                throw ParseError(line.number, "content before any section header");
            case SectionKind::Map: {
                if (key == "m")
                    d.m = parse_int_value(value, line.number), saw_m = true;
                else if (key == "n")
                    d.n = parse_int_value(value, line.number), saw_n = true;
                else if (key == "l")
                    d.l = parse_int_value(value, line.number), saw_l = true;
                else if (key == "image") {
                    saw_image = true;
                    if (value == "disc")
                        d.image_kind = ImageKind::Disc;
                    else if (value == "annulus")
                        d.image_kind = ImageKind::Annulus;
                    else if (value == "full-plane-complement")
                        d.image_kind = ImageKind::FullPlaneComplement;
                    else
                        throw ParseError(line.number, "unknown image kind '" + value + "'");
                } else if (key == "l_trivial")
                    d.flags.l_trivial = parse_bool(value, line.number);
                else if (key == "s_trivial") {
                    if (value == "unknown")
                        d.flags.s_trivial = std::nullopt;
                    else
                        d.flags.s_trivial = parse_bool(value, line.number);
                } else
                    throw ParseError(line.number, "unknown [map] key '" + key + "'");
                break;
            }
            case SectionKind::Region: {
                if (key != "fiber") throw ParseError(line.number, "unknown [region] key '" + key + "'");
                region_fibers[static_cast<size_t>(section_index)] = parse_expression_at(value, line.number);
                break;
            }
            case SectionKind::Singular: {
                PendingSingular& p = singulars[section_index];
                if (key == "normal_fiber") {
                    p.normal = parse_expression_at(value, line.number);
                } else {
                    p.matrices[key] = {line.number, value};
                }
                break;
            }
        }
    }

    if (!saw_map) throw ParseError(0, "missing [map] section");
    if (!saw_m) throw ParseError(0, "missing field m in [map]");
    if (!saw_n) throw ParseError(0, "missing field n in [map]");
    if (!saw_l) throw ParseError(0, "missing field l in [map]");
    if (!saw_image) throw ParseError(0, "missing field image in [map]");
    if (static_cast<int>(region_fibers.size()) != d.l + 1)
        throw ParseError(0, "expected regions 0.." + std::to_string(d.l) + ", found " +
                                std::to_string(region_fibers.size()) + " region sections");
    for (size_t i = 0; i < region_fibers.size(); ++i) {
        if (!region_fibers[i]) throw ParseError(0, "missing [region " + std::to_string(i) + "]");
        d.regions.push_back({static_cast<int>(i), *region_fibers[i]});
    }
    for (int k = 1; k <= d.l; ++k) {
        auto it = singulars.find(k);
        if (it == singulars.end()) throw ParseError(0, "missing [singular " + std::to_string(k) + "]");
        PendingSingular& p = it->second;
        if (!p.normal) throw ParseError(p.line, "missing normal_fiber in [singular " + std::to_string(k) + "]");
        SingularComponent s;
        s.index = k;
        s.normal_fiber = *p.normal;
        s.inner_boundary_fiber = d.regions[static_cast<size_t>(k) - 1].fiber;
        s.outer_boundary_fiber = d.regions[static_cast<size_t>(k)].fiber;
        for (auto& [key, pending] : p.matrices) {
            Side side;
            std::string rest;
            if (key.rfind("inner.", 0) == 0)
                side = Side::Inner, rest = key.substr(6);
            else if (key.rfind("outer.", 0) == 0)
                side = Side::Outer, rest = key.substr(6);
            else
                throw ParseError(pending.line, "unknown [singular] key '" + key + "'");
            int degree = -1;
            Ring ring = Ring::Integers;
            if (rest.rfind("h", 0) == 0) {
                size_t dot = rest.find('.');
                if (dot != std::string::npos) {
                    degree = parse_int_value(rest.substr(1, dot - 1), pending.line);
                    std::string ring_text = rest.substr(dot + 1);
                    if (ring_text == "z")
                        ring = Ring::Integers;
                    else if (ring_text == "z2")
                        ring = Ring::ModTwo;
                    else
                        throw ParseError(pending.line, "ring must be z or z2 in '" + key + "'");
                }
            }
            if (degree < 0 || degree >= kStoredDegrees)
                throw ParseError(pending.line, "inclusion key must be side.hK.ring with K in 0..2: '" + key + "'");
            const ManifoldHomology& boundary =
                side == Side::Inner ? s.inner_boundary_fiber : s.outer_boundary_fiber;
            AbGroup src = boundary.group(degree, ring);
            AbGroup dst = s.normal_fiber.group(degree, ring);
            if (pending.value == "auto") {
                auto forced = auto_inclusion(src, dst, degree, ring);
                if (!forced)
                    throw ParseError(pending.line,
                                     "'auto' is not forced here: source " + src.str() + ", target " +
                                         dst.str() + " admit more than one map");
                s.incl(side, degree, ring) = *forced;
            } else {
                auto rows = parse_matrix_rows(pending.value, pending.line);
                int row_count = static_cast<int>(rows.size());
                int col_count = rows.empty() ? src.generators() : static_cast<int>(rows[0].size());
                std::vector<int64_t> entries;
                for (auto& row : rows) {
                    if (static_cast<int>(row.size()) != col_count)
                        throw ParseError(pending.line, "ragged matrix rows");
                    entries.insert(entries.end(), row.begin(), row.end());
                }
                if (row_count != dst.generators() || col_count != src.generators())
                    throw ParseError(pending.line, "matrix must be " + std::to_string(dst.generators()) +
                                                       "x" + std::to_string(src.generators()) + " for " + key);
                try {
                    s.incl(side, degree, ring) =
                        HomMatrix(src, dst, IntMatrix(row_count, col_count, std::move(entries)), ring);
                } catch (const DomainError& e) {
                    throw ParseError(pending.line, e.what());
                }
            }
        }
        d.singular.push_back(std::move(s));
    }
    for (auto& [index, p] : singulars)
        if (index > d.l) throw ParseError(p.line, "singular index " + std::to_string(index) + " exceeds l");
    return d;
}

// ---- bundle descriptors -----------------------------------------------------

std::string serialize(const BundleDescriptor& b) {
    std::ostringstream out;
    out << "[bundle]\n";
    out << "orientable = " << (b.orientable ? "true" : "false") << "\n";
    if (b.w1_default) out << "w1 * = " << *b.w1_default << "\n";
    for (const auto& [key, bit] : b.w1)
        out << "w1 " << key.first << "." << key.second << " = " << bit << "\n";
    if (b.euler_default) out << "euler * = " << *b.euler_default << "\n";
    for (const auto& [key, v] : b.euler)
        out << "euler " << key.first << "." << key.second << " = " << v << "\n";
    if (b.section_default) out << "section_trivial * = " << (*b.section_default ? "true" : "false") << "\n";
    for (const auto& [key, v] : b.section_trivial)
        out << "section_trivial " << key.first << "." << (key.second == 0 ? "inner" : "outer") << " = "
            << (v ? "true" : "false") << "\n";
    if (b.torus_default) out << "torus_trivial * = " << (*b.torus_default ? "true" : "false") << "\n";
    for (const auto& [key, v] : b.torus_trivial)
        out << "torus_trivial " << key.first << "." << (key.second == 0 ? "inner" : "outer") << " = "
            << (v ? "true" : "false") << "\n";
    return out.str();
}

BundleDescriptor parse_bundle(const std::string& text) {
    std::vector<Line> lines = significant_lines(text);
    BundleDescriptor b;
    bool in_section = false;
    bool saw_euler = false;
    for (const Line& line : lines) {
        if (is_section(line.text)) {
            if (line.text != "[bundle]") throw ParseError(line.number, "expected [bundle] section");
            in_section = true;
            continue;
        }
        if (!in_section) throw ParseError(line.number, "content before [bundle]");
        auto [key, value] = split_key_value(line);
        std::istringstream k(key);
        std::string kind, where;
        k >> kind >> where;
        if (kind == "orientable") {
            b.orientable = parse_bool(value, line.number);
            continue;
        }
        if (where.empty()) throw ParseError(line.number, "expected '" + kind + " <key> = value'");
        auto parse_pair_key = [&](bool side_key) -> std::pair<int, int> {
            size_t dot = where.find('.');
            if (dot == std::string::npos)
                throw ParseError(line.number, "key must look like a.b in '" + key + "'");
            int first = parse_int_value(where.substr(0, dot), line.number);
            std::string second = where.substr(dot + 1);
            if (side_key) {
                if (second == "inner") return {first, 0};
                if (second == "outer") return {first, 1};
                throw ParseError(line.number, "side must be inner or outer in '" + key + "'");
            }
            return {first, parse_int_value(second, line.number)};
        };
        if (kind == "w1") {
            int bit = parse_int_value(value, line.number);
            if (bit != 0 && bit != 1) throw ParseError(line.number, "w1 values are 0 or 1");
            if (where == "*")
                b.w1_default = bit;
            else
                b.w1[parse_pair_key(false)] = bit;
        } else if (kind == "euler") {
            saw_euler = true;
            int64_t v = 0;
            try {
                v = std::stoll(value);
            } catch (const std::exception&) {
                throw ParseError(line.number, "expected an integer euler value");
            }
            if (where == "*")
                b.euler_default = v;
            else
                b.euler[parse_pair_key(false)] = v;
        } else if (kind == "section_trivial") {
            bool v = parse_bool(value, line.number);
            if (where == "*")
                b.section_default = v;
            else
                b.section_trivial[parse_pair_key(true)] = v;
        } else if (kind == "torus_trivial") {
            bool v = parse_bool(value, line.number);
            if (where == "*")
                b.torus_default = v;
            else
                b.torus_trivial[parse_pair_key(true)] = v;
        } else {
            throw ParseError(line.number, "unknown bundle key '" + kind + "'");
        }
    }
    if (!in_section) throw ParseError(0, "missing [bundle] section");
    if (saw_euler && !b.orientable)
        throw ParseError(0, "euler data requires an orientable bundle");
    return b;
}

// ---- four-manifolds ---------------------------------------------------------

std::string serialize(const FourManifold& m) {
    std::ostringstream out;
    out << "[fourmanifold]\n";
    out << "factors = ";
    auto names = m.factor_names();
    for (size_t i = 0; i < names.size(); ++i) {
        if (i) out << ", ";
        out << names[i];
    }
    out << "\n";
    return out.str();
}

FourManifold parse_four_manifold(const std::string& text) {
    std::vector<Line> lines = significant_lines(text);
    bool in_section = false;
    std::optional<std::vector<bool>> twisted;
    for (const Line& line : lines) {
        if (is_section(line.text)) {
            if (line.text != "[fourmanifold]") throw ParseError(line.number, "expected [fourmanifold] section");
            in_section = true;
            continue;
        }
        if (!in_section) throw ParseError(line.number, "content before [fourmanifold]");
        auto [key, value] = split_key_value(line);
        if (key != "factors") throw ParseError(line.number, "unknown [fourmanifold] key '" + key + "'");
        std::vector<bool> flags;
        std::istringstream items(value);
        std::string item;
        while (std::getline(items, item, ',')) {
            size_t a = item.find_first_not_of(" \t");
            size_t b2 = item.find_last_not_of(" \t");
            std::string w = a == std::string::npos ? "" : item.substr(a, b2 - a + 1);
            if (w == "trivial")
                flags.push_back(false);
            else if (w == "twisted")
                flags.push_back(true);
            else
                throw ParseError(line.number, "factors are 'trivial' or 'twisted', got '" + w + "'");
        }
        if (flags.empty()) throw ParseError(line.number, "factors list is empty");
        twisted = flags;
    }
    if (!twisted) throw ParseError(0, "missing factors line");
    return FourManifold::connected_sum_of_s2_bundles(*twisted);
}

}  // namespace roundfold
