#pragma once

/// JSON interchange formats.  Expressions: {"d": int, "expr": node} with
/// node = {"op":"leaf","grad":[rat...],"offset":rat} or
/// {"op":"min"|"max","args":[node...]}; rationals are "p/q" strings ("p"
/// when integral).  Parse failures carry a byte position.

#include "cpa/bounds.hpp"
#include "cpa/constructions.hpp"
#include "cpa/expr.hpp"
#include "cpa/pieces.hpp"

#include <json.hpp>

#include <fstream>
#include <stdexcept>
#include <string>

namespace cpa {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

namespace io {

using json = nlohmann::json;

inline json rational_to_json(const Rational& r) { return r.to_string(); }

inline Rational rational_from_json(const json& j) {
    if (j.is_number_integer())
        return Rational(BigInt(j.get<long long>()));
    if (j.is_string()) {
        try {
            return Rational::parse(j.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }
    throw ParseError("expected a rational as \"p/q\" string, got " + j.dump());
}

inline json expr_node_to_json(const CpaExpr& e) {
    json node;
    if (e.kind() == NodeKind::Leaf) {
        node["op"] = "leaf";
        json grad = json::array();
        for (const auto& g : e.leaf_map().gradient)
            grad.push_back(rational_to_json(g));
        node["grad"] = std::move(grad);
        node["offset"] = rational_to_json(e.leaf_map().offset);
    } else {
        node["op"] = e.kind() == NodeKind::Min ? "min" : "max";
        json args = json::array();
        for (const auto& c : e.children())
            args.push_back(expr_node_to_json(c));
        node["args"] = std::move(args);
    }
    return node;
}

inline json expr_to_json(const CpaExpr& e) {
    return json{{"d", e.dim()}, {"expr", expr_node_to_json(e)}};
}

inline CpaExpr expr_node_from_json(const json& node, int d) {
    if (!node.is_object() || !node.contains("op"))
        throw ParseError("expression node must be an object with an \"op\" field");
    std::string op = node.at("op").get<std::string>();
    if (op == "leaf") {
        if (!node.contains("grad") || !node.at("grad").is_array())
            throw ParseError("leaf node needs a \"grad\" array");
        const json& grad = node.at("grad");
        if (static_cast<int>(grad.size()) != d)
            throw ParseError("leaf gradient has wrong dimension");
        std::vector<Rational> g;
        for (const auto& v : grad)
            g.push_back(rational_from_json(v));
        if (!node.contains("offset"))
            throw ParseError("leaf node needs an \"offset\"");
        return CpaExpr::leaf(AffineMap(Vector(std::move(g)), rational_from_json(node.at("offset"))));
    }
    if (op == "min" || op == "max") {
        if (!node.contains("args") || !node.at("args").is_array())
            throw ParseError(op + " node needs an \"args\" array");
        const json& args = node.at("args");
        if (args.size() < 2)
            throw ParseError(op + " node needs at least two children");
        std::vector<CpaExpr> kids;
        for (const auto& a : args)
            kids.push_back(expr_node_from_json(a, d));
        return op == "min" ? CpaExpr::min_of(std::move(kids)) : CpaExpr::max_of(std::move(kids));
    }
    throw ParseError("unknown op \"" + op + "\"");
}

inline CpaExpr expr_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("d") || !doc.contains("expr"))
        throw ParseError("document must be an object with \"d\" and \"expr\"");
    int d = doc.at("d").get<int>();
    if (d < 1)
        throw ParseError("\"d\" must be >= 1");
    return expr_node_from_json(doc.at("expr"), d);
}

inline json parse_document(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("parse error at byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

inline CpaExpr expr_from_string(const std::string& text) {
    return expr_from_json(parse_document(text));
}

inline CpaExpr expr_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return expr_from_string(text);
}

// ----------------------------------------------------------- other formats --

inline json line_family_to_json(const LineFamily& L) {
    json lines = json::array();
    for (const auto& l : L.lines)
        lines.push_back(json{{"a", rational_to_json(l.a)}, {"b", rational_to_json(l.b)}});
    return json{{"lines", std::move(lines)}};
}

inline LineFamily line_family_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("lines") || !doc.at("lines").is_array())
        throw ParseError("line family document needs a \"lines\" array");
    std::vector<Line> ls;
    for (const auto& l : doc.at("lines"))
        ls.push_back(Line{rational_from_json(l.at("a")), rational_from_json(l.at("b"))});
    return LineFamily(std::move(ls));
}

inline json monotone_path_to_json(const MonotonePath& p) {
    json verts = json::array();
    for (const auto& v : p.vertices)
        verts.push_back(json::array({rational_to_json(v[0]), rational_to_json(v[1])}));
    json carriers = json::array();
    for (int c : p.carriers)
        carriers.push_back(c);
    return json{{"vertices", std::move(verts)}, {"carriers", std::move(carriers)}, {"length", p.length}};
}

inline json cell_to_json(const Cell& c) {
    json witness = json::array();
    for (const auto& w : c.witness)
        witness.push_back(rational_to_json(w));
    return json{{"signs", c.signs}, {"witness", std::move(witness)}};
}

inline json decomposition_to_json(const PieceDecomposition& dec) {
    json comps = json::array();
    for (const auto& c : dec.components) {
        json grad = json::array();
        for (const auto& g : c.gradient)
            grad.push_back(rational_to_json(g));
        comps.push_back(json{{"op", "leaf"}, {"grad", std::move(grad)}, {"offset", rational_to_json(c.offset)}});
    }
    json pieces = json::array();
    for (const auto& group : dec.pieces) {
        json cells = json::array();
        for (int c : group)
            cells.push_back(c);
        pieces.push_back(json{{"component", dec.cell_component[static_cast<std::size_t>(group.front())]},
                              {"cells", std::move(cells)}});
    }
    return json{{"n_active", dec.n_active()},
                {"cells", dec.cell_count()},
                {"maximal_pieces", dec.maximal_piece_count()},
                {"components", std::move(comps)},
                {"pieces", std::move(pieces)}};
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << text;
}

} // namespace io
} // namespace cpa
