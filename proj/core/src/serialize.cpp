#include "gctk/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace gctk {

namespace {

json mpz_to_json(const mpz_class& z) { return z.get_str(); }

std::uint32_t part_from_json(const json& j) {
    if (!j.is_number_unsigned())
        throw std::invalid_argument("partition: parts must be nonnegative integers");
    const std::uint64_t v = j.get<std::uint64_t>();
    if (v == 0 || v > 0xffffffffu) throw std::invalid_argument("partition: part out of range");
    return static_cast<std::uint32_t>(v);
}

}  // namespace

json to_json(const Partition& p) {
    json out = json::array();
    for (std::uint32_t v : p.parts()) out.push_back(v);
    return out;
}

Partition partition_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("partition: expected JSON array");
    std::vector<std::uint32_t> parts;
    parts.reserve(j.size());
    for (const auto& e : j) parts.push_back(part_from_json(e));
    return Partition(std::move(parts));
}

Partition parse_partition(const std::string& text) {
    std::vector<std::uint32_t> parts;
    std::size_t i = 0;
    const auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    while (i < text.size()) {
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) throw std::invalid_argument("partition: expected digit in '" + text + "'");
        unsigned long v = std::stoul(text.substr(start, i - start));
        if (v == 0 || v > 0xffffffffu)
            throw std::invalid_argument("partition: part out of range in '" + text + "'");
        parts.push_back(static_cast<std::uint32_t>(v));
        skip_ws();
        if (i < text.size()) {
            if (text[i] != ',')
                throw std::invalid_argument("partition: expected ',' in '" + text + "'");
            ++i;
            skip_ws();
            if (i == text.size())
                throw std::invalid_argument("partition: trailing ',' in '" + text + "'");
        }
    }
    return Partition(std::move(parts));
}

std::string rational_to_string(const mpq_class& q) { return q.get_str(); }

mpq_class rational_from_string(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("rational: cannot parse '" + text + "'");
    if (q.get_den() == 0) throw std::invalid_argument("rational: zero denominator");
    q.canonicalize();
    return q;
}

json to_json(const PowerSumVector& v) {
    json terms = json::array();
    for (const auto& [part, coef] : v.terms())
        terms.push_back(json::array({to_json(part), rational_to_string(coef)}));
    return json{{"degree", v.degree()}, {"terms", std::move(terms)}};
}

PowerSumVector powersum_from_json(const json& j) {
    if (!j.is_object() || !j.contains("degree") || !j.contains("terms"))
        throw std::invalid_argument("powersum: expected {degree, terms}");
    PowerSumVector out(j.at("degree").get<std::uint64_t>());
    for (const auto& t : j.at("terms")) {
        if (!t.is_array() || t.size() != 2)
            throw std::invalid_argument("powersum: term must be [partition, rational]");
        out.add_term(partition_from_json(t[0]), rational_from_string(t[1].get<std::string>()));
    }
    return out;
}

json to_json(const SparsePoly& f) {
    json out = json::array();
    for (const auto& [mono, coef] : f.terms()) {
        json exps = json::object();
        for (const auto& [var, exp] : mono) exps[std::to_string(var)] = exp;
        out.push_back(json::array({std::move(exps), mpz_to_json(coef)}));
    }
    return out;
}

SparsePoly poly_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial: expected JSON array of terms");
    SparsePoly out;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 2)
            throw std::invalid_argument("polynomial: term must be [exponents, coefficient]");
        Monomial mono;
        for (const auto& [key, val] : t[0].items()) {
            unsigned long var = std::stoul(key);
            if (var > 0xffffffffu) throw std::invalid_argument("polynomial: variable out of range");
            const std::uint64_t exp = val.get<std::uint64_t>();
            if (exp == 0 || exp > 0xffffffffu)
                throw std::invalid_argument("polynomial: exponent out of range");
            mono.emplace_back(static_cast<std::uint32_t>(var), static_cast<std::uint32_t>(exp));
        }
        std::sort(mono.begin(), mono.end());
        for (std::size_t i = 1; i < mono.size(); ++i)
            if (mono[i].first == mono[i - 1].first)
                throw std::invalid_argument("polynomial: repeated variable in term");
        out.add_term(std::move(mono), mpz_class(t[1].get<std::string>()));
    }
    return out;
}

json to_json(const AffineMatrix& a) {
    json entries = json::array();
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) entries.push_back(to_json(a.at(i, j)));
    return json{{"size", a.size()}, {"entries", std::move(entries)}};
}

AffineMatrix affine_matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("size") || !j.contains("entries"))
        throw std::invalid_argument("matrix: expected {size, entries}");
    const std::size_t n = j.at("size").get<std::size_t>();
    std::vector<SparsePoly> entries;
    entries.reserve(j.at("entries").size());
    for (const auto& e : j.at("entries")) entries.push_back(poly_from_json(e));
    return AffineMatrix(n, std::move(entries));
}

json to_json(const Relation3D& r) {
    json out = json::array();
    for (const auto& p : r.points()) out.push_back(json::array({p[0], p[1], p[2]}));
    return out;
}

Relation3D relation_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("relation: expected JSON array of points");
    std::vector<Relation3D::Point> pts;
    pts.reserve(j.size());
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 3)
            throw std::invalid_argument("relation: point must be [x,y,z]");
        Relation3D::Point p{};
        for (int k = 0; k < 3; ++k) {
            const std::uint64_t v = e[k].get<std::uint64_t>();
            if (v > 0xffffffffu) throw std::invalid_argument("relation: coordinate out of range");
            p[k] = static_cast<std::uint32_t>(v);
        }
        pts.push_back(p);
    }
    return Relation3D(std::move(pts));
}

json to_json(const ObstructionReport& r) {
    return json{{"lambda", to_json(r.lambda)}, {"n", r.n},
                {"d", r.d},                    {"m", r.m},
                {"pleth", mpz_to_json(r.pleth_value)}, {"kron", mpz_to_json(r.kron_value)},
                {"shape_ok", r.shape_ok}};
}

}  // namespace gctk
