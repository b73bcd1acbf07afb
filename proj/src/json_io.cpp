#include "toric/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace toric {

namespace {

Json parse_json(const std::string& bytes) {
    try {
        return Json::parse(bytes);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

std::vector<std::vector<int>> edges_from_json(const Json& j) {
    if (!j.is_array())
        throw ParseError("\"edges\" must be an array of arrays");
    std::vector<std::vector<int>> edges;
    for (const auto& e : j) {
        if (!e.is_array())
            throw ParseError("edge " + std::to_string(edges.size()) + " is not an array");
        std::vector<int> edge;
        for (const auto& v : e) {
            if (!v.is_number_integer())
                throw ParseError("edge " + std::to_string(edges.size()) +
                                 " contains a non-integer vertex");
            edge.push_back(v.get<int>());
        }
        edges.push_back(std::move(edge));
    }
    return edges;
}

ParsedHypergraph hypergraph_from_json(const Json& j) {
    if (!j.is_object())
        throw ParseError("hypergraph must be a JSON object");
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw ParseError("missing integer field \"n\"");
    if (!j.contains("edges"))
        throw ParseError("missing field \"edges\"");
    const int n = j["n"].get<int>();
    auto raw = edges_from_json(j["edges"]);

    // Canonicalization permutes the edge list; labels and multiplicities
    // must follow their edges.
    std::vector<size_t> order(raw.size());
    std::iota(order.begin(), order.end(), 0);
    Hypergraph h;
    try {
        for (auto& e : raw) {
            std::sort(e.begin(), e.end());
            e.erase(std::unique(e.begin(), e.end()), e.end());
        }
        std::stable_sort(order.begin(), order.end(),
                         [&](size_t a, size_t b) { return raw[a] < raw[b]; });
        std::vector<std::vector<int>> sorted;
        sorted.reserve(raw.size());
        for (size_t i : order)
            sorted.push_back(raw[i]);
        h = new_hypergraph(n, std::move(sorted));
    } catch (const Error& e) {
        throw ParseError(std::string("invalid hypergraph: ") + e.what());
    }

    if (j.contains("labels")) {
        const auto& labels = j["labels"];
        if (!labels.is_object())
            throw ParseError("\"labels\" must be an object");
        if (labels.contains("vertices")) {
            h.vertex_labels = labels["vertices"].get<std::vector<std::string>>();
            if (static_cast<int>(h.vertex_labels.size()) != n)
                throw ParseError("vertex label count does not match n");
        }
        if (labels.contains("edges")) {
            auto el = labels["edges"].get<std::vector<std::string>>();
            if (el.size() != order.size())
                throw ParseError("edge label count does not match edge count");
            h.edge_labels.resize(el.size());
            for (size_t i = 0; i < order.size(); ++i)
                h.edge_labels[i] = el[order[i]];
        }
    }

    if (j.contains("multiplicity")) {
        auto mult = j["multiplicity"].get<std::vector<long long>>();
        if (mult.size() != order.size())
            throw ParseError("multiplicity count does not match edge count");
        Multihypergraph mh;
        mh.base = std::move(h);
        mh.multiplicity.resize(mult.size());
        for (size_t i = 0; i < order.size(); ++i) {
            if (mult[order[i]] < 0)
                throw ParseError("negative multiplicity");
            mh.multiplicity[i] = mult[order[i]];
        }
        if (!mh.multiplicity.empty() &&
            std::all_of(mh.multiplicity.begin(), mh.multiplicity.end(),
                        [](long long x) { return x == 0; }))
            throw ParseError("multihypergraph needs at least one positive multiplicity");
        return mh;
    }
    return h;
}

HostPtr host_from_json(const Json& j) {
    if (j.is_string()) {
        // reference form: a path to a hypergraph JSON file
        std::ifstream f(j.get<std::string>(), std::ios::binary);
        if (!f)
            throw ParseError("cannot open referenced hypergraph file " +
                             j.get<std::string>());
        std::ostringstream ss;
        ss << f.rdbuf();
        return host_from_json(Json::parse(ss.str(), nullptr, false));
    }
    auto parsed = hypergraph_from_json(j);
    if (std::holds_alternative<Multihypergraph>(parsed))
        throw ParseError("expected a simple hypergraph, got a multihypergraph");
    return make_host(std::get<Hypergraph>(std::move(parsed)));
}

} // namespace

ParsedHypergraph parse_hypergraph(const std::string& bytes) {
    return hypergraph_from_json(parse_json(bytes));
}

Hypergraph parse_simple_hypergraph(const std::string& bytes) {
    auto parsed = parse_hypergraph(bytes);
    if (std::holds_alternative<Multihypergraph>(parsed))
        throw ParseError("expected a simple hypergraph, got a multihypergraph");
    return std::get<Hypergraph>(std::move(parsed));
}

Json hypergraph_to_json(const Hypergraph& h) {
    Json j;
    j["n"] = h.n;
    j["edges"] = h.edges;
    if (!h.vertex_labels.empty() || !h.edge_labels.empty()) {
        Json labels;
        if (!h.vertex_labels.empty())
            labels["vertices"] = h.vertex_labels;
        if (!h.edge_labels.empty())
            labels["edges"] = h.edge_labels;
        j["labels"] = std::move(labels);
    }
    return j;
}

Json multihypergraph_to_json(const Multihypergraph& mh) {
    Json j = hypergraph_to_json(mh.base);
    j["multiplicity"] = mh.multiplicity;
    return j;
}

Hypergraph parse_text_hypergraph(const std::string& bytes) {
    std::istringstream in(bytes);
    std::string line;
    int n = -1;
    std::vector<std::vector<int>> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::vector<long long> nums;
        long long x;
        while (ls >> x)
            nums.push_back(x);
        if (!ls.eof())
            throw ParseError("line " + std::to_string(lineno) + ": not an integer list");
        if (nums.empty())
            continue;
        if (n < 0) {
            if (nums.size() != 1)
                throw ParseError("line " + std::to_string(lineno) +
                                 ": expected the vertex count alone");
            n = static_cast<int>(nums[0]);
        } else {
            edges.emplace_back(nums.begin(), nums.end());
        }
    }
    if (n < 0)
        throw ParseError("empty input");
    try {
        return new_hypergraph(n, std::move(edges));
    } catch (const Error& e) {
        throw ParseError(std::string("invalid hypergraph: ") + e.what());
    }
}

WalkVector parse_walk_vector(const std::string& bytes) {
    Json j = parse_json(bytes);
    if (!j.is_object() || !j.contains("hypergraph") || !j.contains("coeffs"))
        throw ParseError("walk vector needs \"hypergraph\" and \"coeffs\"");
    WalkVector u;
    u.host = host_from_json(j["hypergraph"]);
    u.coeffs = j["coeffs"].get<std::vector<Coeff>>();
    if (static_cast<int>(u.coeffs.size()) != u.host->edge_count())
        throw ParseError("coeffs length does not match edge count");
    return u;
}

Json walk_vector_to_json(const WalkVector& u, bool include_host) {
    Json j;
    if (include_host)
        j["hypergraph"] = hypergraph_to_json(*u.host);
    j["coeffs"] = u.coeffs;
    return j;
}

Bicoloring parse_bicoloring(const std::string& bytes) {
    Json j = parse_json(bytes);
    if (!j.is_object() || !j.contains("hypergraph") || !j.contains("blue") ||
        !j.contains("red"))
        throw ParseError("bicoloring needs \"hypergraph\", \"blue\" and \"red\"");
    HostPtr host = host_from_json(j["hypergraph"]);
    try {
        return Bicoloring::from_indices(host, j["blue"].get<std::vector<int>>(),
                                        j["red"].get<std::vector<int>>());
    } catch (const Error& e) {
        throw ParseError(std::string("invalid bicoloring: ") + e.what());
    }
}

Json bicoloring_to_json(const Bicoloring& c, bool include_host) {
    Json j;
    if (include_host)
        j["hypergraph"] = hypergraph_to_json(*c.host);
    std::vector<int> blue, red;
    for (int e = 0; e < c.host->edge_count(); ++e) {
        for (Coeff k = 0; k < c.blue[e]; ++k)
            blue.push_back(e);
        for (Coeff k = 0; k < c.red[e]; ++k)
            red.push_back(e);
    }
    j["blue"] = blue;
    j["red"] = red;
    return j;
}

namespace {

std::string monomial_to_string(const std::vector<Coeff>& exps) {
    std::string s;
    for (size_t e = 0; e < exps.size(); ++e) {
        if (exps[e] == 0)
            continue;
        if (!s.empty())
            s += "*";
        s += "t_{e" + std::to_string(e) + "}";
        if (exps[e] > 1)
            s += "^" + std::to_string(exps[e]);
    }
    return s.empty() ? "1" : s;
}

std::vector<Coeff> parse_monomial(const HostPtr& host, const std::string& text) {
    std::vector<Coeff> exps(host->edge_count(), 0);
    std::string t = text;
    std::erase(t, ' ');
    if (t == "1" || t.empty())
        return exps;
    size_t pos = 0;
    while (pos < t.size()) {
        if (t.compare(pos, 4, "t_{e") != 0)
            throw ParseError("bad monomial factor near \"" + t.substr(pos) + "\"");
        pos += 4;
        size_t close = t.find('}', pos);
        if (close == std::string::npos)
            throw ParseError("unterminated edge variable");
        int e = std::stoi(t.substr(pos, close - pos));
        if (e < 0 || e >= host->edge_count())
            throw ParseError("edge index " + std::to_string(e) + " out of range");
        pos = close + 1;
        Coeff exp = 1;
        if (pos < t.size() && t[pos] == '^') {
            size_t next = t.find('*', pos);
            std::string num = t.substr(pos + 1, next == std::string::npos
                                                    ? std::string::npos
                                                    : next - pos - 1);
            exp = std::stoll(num);
            pos += 1 + num.size();
        }
        exps[e] = checked_add(exps[e], exp);
        if (pos < t.size()) {
            if (t[pos] != '*')
                throw ParseError("expected '*' between factors");
            ++pos;
        }
    }
    return exps;
}

} // namespace

std::string binomial_to_string(const Binomial& b) {
    return monomial_to_string(b.plus) + " - " + monomial_to_string(b.minus);
}

Binomial parse_binomial(const HostPtr& host, const std::string& text) {
    // Indices and exponents are nonnegative, so the only minus is the one
    // separating the monomials.
    size_t split = text.find('-');
    if (split == std::string::npos || text.find('-', split + 1) != std::string::npos)
        throw ParseError("binomial must have the form <monomial> - <monomial>");
    return make_binomial(host, parse_monomial(host, text.substr(0, split)),
                         parse_monomial(host, text.substr(split + 1)));
}

Json certificate_to_json(const PartitionCertificate& c) {
    Json j;
    Json partition;
    std::vector<int> jside, kside;
    for (size_t i = 0; i < c.side.size(); ++i)
        (c.side[i] == 0 ? jside : kside).push_back(static_cast<int>(i));
    partition["J"] = jside;
    partition["K"] = kside;
    j["partition"] = std::move(partition);
    j["multiplicities"] = c.multiplicities;
    j["primitive"] = c.primitive;
    return j;
}

Json fiber_point_to_json(const FiberPoint& p) {
    Json j;
    j["counts"] = p.counts;
    return j;
}

} // namespace toric
