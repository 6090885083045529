#include "cforge/io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace cforge {

namespace {

std::string simplex_key(const Simplex& s) {
    std::string k;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) k += ",";
        k += std::to_string(s[i]);
    }
    return k;
}

Simplex simplex_from_key(const std::string& key, const std::string& where) {
    Simplex s;
    std::stringstream ss(key);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            s.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw schema_error(where, "malformed simplex key '" + key + "'");
        }
    }
    return s;
}

template <typename T>
Cochain<T> cochain_from_json_impl(const json& j, const SimplicialComplex* cx,
                                  const std::string& where) {
    if (!j.is_object()) throw schema_error(where, "cochain must be an object");
    if (!j.contains("degree") || !j["degree"].is_number_integer())
        throw schema_error(where + "/degree", "missing integer degree");
    const int k = j["degree"].get<int>();
    Cochain<T> out(cx, k);
    if (!j.contains("values")) return out;
    if (!j["values"].is_object())
        throw schema_error(where + "/values", "values must map simplex keys to numbers");
    for (const auto& [key, val] : j["values"].items()) {
        Simplex s = simplex_from_key(key, where + "/values/" + key);
        if (static_cast<int>(s.size()) != k + 1)
            throw schema_error(where + "/values/" + key, "simplex degree mismatch");
        auto idx = cx->index_of(s);
        if (!idx)
            throw schema_error(where + "/values/" + key, "simplex not in the complex");
        Rat r;
        if (val.is_number_integer()) r = Rat(val.template get<long>());
        else if (val.is_string()) r = rat_from_string(val.template get<std::string>());
        else throw schema_error(where + "/values/" + key, "value must be int or \"p/q\"");
        if constexpr (std::is_same_v<T, Int>) {
            if (!rat_is_integer(r))
                throw schema_error(where + "/values/" + key, "integer cochain needs integers");
            out.values[*idx] = r.get_num();
        } else if constexpr (std::is_same_v<T, Rat>) {
            out.values[*idx] = r;
        } else {
            out.values[*idx] = QmodZ(r);
        }
    }
    return out;
}

template <typename T>
json cochain_values_json(const Cochain<T>& c) {
    json vals = json::object();
    const auto& simps = c.cx->simplices(c.degree);
    for (std::size_t i = 0; i < simps.size(); ++i) {
        if constexpr (std::is_same_v<T, Int>) {
            if (c.values[i] == 0) continue;
            vals[simplex_key(simps[i])] = c.values[i].get_str();
        } else if constexpr (std::is_same_v<T, Rat>) {
            if (c.values[i] == 0) continue;
            vals[simplex_key(simps[i])] = rat_to_string(c.values[i]);
        } else {
            if (c.values[i].is_zero()) continue;
            vals[simplex_key(simps[i])] = rat_to_string(c.values[i].v);
        }
    }
    json out;
    out["degree"] = c.degree;
    out["values"] = vals;
    return out;
}

}  // namespace

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw schema_error(path, std::string("JSON parse failure: ") + e.what());
    }
    return j;
}

SimplicialComplex complex_from_json(const json& j, const std::string& where) {
    if (!j.is_object()) throw schema_error(where, "complex must be an object");
    if (!j.contains("vertices") || !j["vertices"].is_number_integer())
        throw schema_error(where + "/vertices", "missing integer vertex count");
    if (!j.contains("simplices") || !j["simplices"].is_array())
        throw schema_error(where + "/simplices", "missing simplex list");
    const int n = j["vertices"].get<int>();
    std::vector<Simplex> tops;
    std::size_t i = 0;
    for (const auto& js : j["simplices"]) {
        const std::string at = where + "/simplices/" + std::to_string(i++);
        if (!js.is_array() || js.empty()) throw schema_error(at, "simplex must be a nonempty list");
        Simplex s;
        for (const auto& v : js) {
            if (!v.is_number_integer()) throw schema_error(at, "vertex must be an integer");
            s.push_back(v.get<int>());
        }
        for (std::size_t p = 1; p < s.size(); ++p)
            if (s[p] <= s[p - 1])
                throw schema_error(at, "simplex has repeated or unsorted vertices");
        if (s.front() < 0 || s.back() >= n) throw schema_error(at, "vertex out of range");
        tops.push_back(std::move(s));
    }
    try {
        return SimplicialComplex(n, tops);
    } catch (const std::invalid_argument& e) {
        throw schema_error(where, e.what());
    }
}

json complex_to_json(const SimplicialComplex& cx) {
    json j;
    j["vertices"] = cx.ambient_vertices();
    json simp = json::array();
    for (const Simplex& s : cx.maximal_simplices()) simp.push_back(s);
    j["simplices"] = simp;
    return j;
}

IntCochain int_cochain_from_json(const json& j, const SimplicialComplex* cx,
                                 const std::string& where) {
    return cochain_from_json_impl<Int>(j, cx, where);
}
RatCochain rat_cochain_from_json(const json& j, const SimplicialComplex* cx,
                                 const std::string& where) {
    return cochain_from_json_impl<Rat>(j, cx, where);
}
ModCochain mod_cochain_from_json(const json& j, const SimplicialComplex* cx,
                                 const std::string& where) {
    return cochain_from_json_impl<QmodZ>(j, cx, where);
}

json cochain_to_json(const IntCochain& c) { return cochain_values_json(c); }
json cochain_to_json(const RatCochain& c) { return cochain_values_json(c); }
json cochain_to_json(const ModCochain& c) { return cochain_values_json(c); }

DiffCochain diffcochain_from_json(const json& j, const SimplicialComplex* cx,
                                  const std::string& where) {
    if (!j.is_object()) throw schema_error(where, "differential cochain must be an object");
    for (const char* key : {"s", "k"})
        if (!j.contains(key) || !j[key].is_number_integer())
            throw schema_error(where + "/" + key, "missing integer field");
    const int s = j["s"].get<int>(), k = j["k"].get<int>();
    if (s < 1) throw schema_error(where + "/s", "height must be >= 1");
    if (k < 0) throw schema_error(where + "/k", "degree must be >= 0");
    DiffCochain x(cx, s, k);
    if (j.contains("c")) {
        json jc = j["c"];
        if (!jc.contains("degree")) jc["degree"] = k;
        x.c = int_cochain_from_json(jc, cx, where + "/c");
        if (x.c.degree != k) throw schema_error(where + "/c", "degree must equal k");
    }
    if (j.contains("h")) {
        if (!x.has_h()) throw schema_error(where + "/h", "h is absent at degree 0");
        json jh = j["h"];
        if (!jh.contains("degree")) jh["degree"] = k - 1;
        x.h = rat_cochain_from_json(jh, cx, where + "/h");
        if (x.h->degree != k - 1) throw schema_error(where + "/h", "degree must equal k-1");
    }
    if (j.contains("omega")) {
        if (!x.has_omega())
            throw schema_error(where + "/omega", "omega vanishes below the height");
        json jw = j["omega"];
        if (!jw.contains("degree")) jw["degree"] = k;
        x.omega = rat_cochain_from_json(jw, cx, where + "/omega");
        if (x.omega->degree != k) throw schema_error(where + "/omega", "degree must equal k");
    }
    return x;
}

json diffcochain_to_json(const DiffCochain& x) {
    json j;
    j["s"] = x.s;
    j["k"] = x.k;
    j["c"] = cochain_to_json(x.c);
    if (x.h) j["h"] = cochain_to_json(*x.h);
    if (x.omega) j["omega"] = cochain_to_json(*x.omega);
    return j;
}

CoverBundle cover_from_json(const json& j, int q_max, const std::string& where) {
    if (!j.is_object()) throw schema_error(where, "cover must be an object");
    if (!j.contains("complex")) throw schema_error(where + "/complex", "missing base complex");
    if (!j.contains("sets") || !j["sets"].is_array() || j["sets"].empty())
        throw schema_error(where + "/sets", "cover needs a nonempty set list");
    CoverBundle b;
    b.base = std::make_shared<SimplicialComplex>(
        complex_from_json(j["complex"], where + "/complex"));
    std::vector<SimplicialComplex> sets;
    std::size_t i = 0;
    for (const auto& js : j["sets"]) {
        const std::string at = where + "/sets/" + std::to_string(i++);
        json wrapper;
        wrapper["vertices"] = b.base->ambient_vertices();
        wrapper["simplices"] = js;
        SimplicialComplex u = complex_from_json(wrapper, at);
        if (!u.is_subcomplex_of(*b.base))
            throw schema_error(at, "cover set is not a subcomplex of the base");
        sets.push_back(std::move(u));
    }
    try {
        b.cover = std::make_shared<Cover>(b.base.get(), std::move(sets));
    } catch (const std::invalid_argument& e) {
        throw schema_error(where + "/sets", e.what());
    }
    b.levels = std::make_shared<CechLevels>(b.cover.get(), q_max);
    return b;
}

json cover_to_json(const Cover& cover) {
    json j;
    j["complex"] = complex_to_json(cover.base());
    json sets = json::array();
    for (std::size_t a = 0; a < cover.size(); ++a) {
        json one = json::array();
        for (const Simplex& s : cover.set(a).maximal_simplices()) one.push_back(s);
        sets.push_back(one);
    }
    j["sets"] = sets;
    return j;
}

ActionBundle action_from_json(const json& j, const std::string& where) {
    if (!j.contains("complex")) throw schema_error(where + "/complex", "missing base complex");
    if (!j.contains("group") || !j["group"].is_object())
        throw schema_error(where + "/group", "missing group table");
    if (!j["group"].contains("order") || !j["group"].contains("table"))
        throw schema_error(where + "/group", "group needs order and table");
    if (!j.contains("action") || !j["action"].is_array())
        throw schema_error(where + "/action", "missing action permutations");

    ActionBundle b;
    b.base = std::make_shared<SimplicialComplex>(
        complex_from_json(j["complex"], where + "/complex"));
    const int order = j["group"]["order"].get<int>();
    auto table = j["group"]["table"].get<std::vector<std::vector<int>>>();
    if (static_cast<int>(table.size()) != order)
        throw schema_error(where + "/group/table", "table size must equal the order");
    auto perms = j["action"].get<std::vector<std::vector<int>>>();
    try {
        b.groupoid = std::make_shared<ActionGroupoid>(*b.base, table, perms);
    } catch (const std::invalid_argument& e) {
        throw schema_error(where + "/action", e.what());
    }
    return b;
}

namespace {

template <typename Loader>
void load_level_map(const json& j, const char* key, const CechLevels& lv, int q,
                    const std::string& where, Loader&& loader) {
    if (!j.contains(key)) return;
    if (!j[key].is_object())
        throw schema_error(where + "/" + key, "expected a tuple-keyed object");
    for (const auto& [tkey, payload] : j[key].items()) {
        Simplex raw = simplex_from_key(tkey, where + "/" + key + "/" + tkey);
        std::vector<std::size_t> tuple(raw.begin(), raw.end());
        std::size_t idx;
        try {
            idx = lv.piece_index(q, tuple);
        } catch (const std::invalid_argument&) {
            throw schema_error(where + "/" + key + "/" + tkey, "no such Cech piece");
        }
        loader(idx, payload, where + "/" + key + "/" + tkey);
    }
}

}  // namespace

DescentBundle descent_from_json(const json& j, const std::string& where) {
    if (!j.contains("cover")) throw schema_error(where + "/cover", "missing cover");
    if (!j.contains("s") || !j["s"].is_number_integer())
        throw schema_error(where + "/s", "missing height");
    DescentBundle b;
    b.cover = cover_from_json(j["cover"], 3, where + "/cover");
    const int s = j["s"].get<int>();
    b.datum = std::make_shared<DescentDatum>(DescentDatum::zero(*b.cover.levels, s));

    const CechLevels& lv = *b.cover.levels;
    if (j.contains("a")) {
        if (!j["a"].is_array() || j["a"].size() != lv.level(0).size())
            throw schema_error(where + "/a", "one local cocycle per cover set required");
        for (std::size_t t = 0; t < lv.level(0).size(); ++t)
            b.datum->a[t] = diffcochain_from_json(j["a"][t], &lv.level(0)[t].cx,
                                                  where + "/a/" + std::to_string(t));
    }
    load_level_map(j, "b", lv, 1, where, [&](std::size_t idx, const json& payload,
                                             const std::string& at) {
        b.datum->b[idx] = diffcochain_from_json(payload, &lv.level(1)[idx].cx, at);
    });
    load_level_map(j, "z", lv, 2, where, [&](std::size_t idx, const json& payload,
                                             const std::string& at) {
        b.datum->z[idx] = diffcochain_from_json(payload, &lv.level(2)[idx].cx, at);
    });
    return b;
}

json descent_to_json(const DescentDatum& d) {
    const CechLevels& lv = *d.levels;
    json j;
    j["type"] = "descent";
    j["s"] = d.s;
    j["cover"] = cover_to_json(lv.cover());
    json a = json::array();
    for (const auto& x : d.a) a.push_back(diffcochain_to_json(x));
    j["a"] = a;
    json bmap = json::object(), zmap = json::object();
    for (std::size_t t = 0; t < d.b.size(); ++t) {
        Simplex key(lv.level(1)[t].tuple.begin(), lv.level(1)[t].tuple.end());
        bmap[simplex_key(key)] = diffcochain_to_json(d.b[t]);
    }
    for (std::size_t t = 0; t < d.z.size(); ++t) {
        Simplex key(lv.level(2)[t].tuple.begin(), lv.level(2)[t].tuple.end());
        zmap[simplex_key(key)] = diffcochain_to_json(d.z[t]);
    }
    j["b"] = bmap;
    j["z"] = zmap;
    return j;
}

json descent_arrow_to_json(const DescentArrow& w) {
    json j;
    json beta = json::array(), phi = json::array(), psi = json::array();
    for (const auto& x : w.beta) beta.push_back(diffcochain_to_json(x));
    for (const auto& x : w.phi) phi.push_back(diffcochain_to_json(x));
    for (const auto& x : w.psi) psi.push_back(diffcochain_to_json(x));
    j["beta"] = beta;
    j["phi"] = phi;
    j["psi"] = psi;
    return j;
}

GerbeBundle gerbe_from_json(const json& j, const std::string& where) {
    if (!j.contains("cover")) throw schema_error(where + "/cover", "missing cover");
    GerbeBundle b;
    b.cover = cover_from_json(j["cover"], 3, where + "/cover");
    const CechLevels& lv = *b.cover.levels;
    b.gerbe = std::make_shared<GerbeCocycle>(GerbeCocycle::zero(lv));

    std::string flavor = j.value("flavor", std::string("with_connection_and_curving"));
    if (flavor == "bare") b.flavor = GerbeFlavor::bare;
    else if (flavor == "with_connection") b.flavor = GerbeFlavor::with_connection;
    else if (flavor == "with_connection_and_curving")
        b.flavor = GerbeFlavor::with_connection_and_curving;
    else throw schema_error(where + "/flavor", "unknown flavor '" + flavor + "'");

    if (j.contains("B")) {
        if (!j["B"].is_array() || j["B"].size() != lv.level(0).size())
            throw schema_error(where + "/B", "one curving cochain per cover set required");
        for (std::size_t t = 0; t < lv.level(0).size(); ++t) {
            json payload = j["B"][t];
            if (!payload.contains("degree")) payload["degree"] = 2;
            b.gerbe->curving[t] = rat_cochain_from_json(payload, &lv.level(0)[t].cx,
                                                        where + "/B/" + std::to_string(t));
        }
    }
    load_level_map(j, "A", lv, 1, where, [&](std::size_t idx, json payload,
                                             const std::string& at) {
        if (!payload.contains("degree")) payload["degree"] = 1;
        b.gerbe->connection[idx] = rat_cochain_from_json(payload, &lv.level(1)[idx].cx, at);
    });
    load_level_map(j, "f", lv, 2, where, [&](std::size_t idx, json payload,
                                             const std::string& at) {
        if (!payload.contains("degree")) payload["degree"] = 0;
        b.gerbe->f[idx] = rat_cochain_from_json(payload, &lv.level(2)[idx].cx, at);
    });
    load_level_map(j, "n", lv, 3, where, [&](std::size_t idx, json payload,
                                             const std::string& at) {
        if (!payload.contains("degree")) payload["degree"] = 0;
        b.gerbe->n[idx] = int_cochain_from_json(payload, &lv.level(3)[idx].cx, at);
    });
    return b;
}

json gerbe_to_json(const GerbeCocycle& g, GerbeFlavor flavor) {
    const CechLevels& lv = *g.levels;
    json j;
    j["type"] = "gerbe";
    j["flavor"] = flavor == GerbeFlavor::bare ? "bare"
                  : flavor == GerbeFlavor::with_connection ? "with_connection"
                                                           : "with_connection_and_curving";
    j["cover"] = cover_to_json(lv.cover());
    json B = json::array();
    for (const auto& c : g.curving) B.push_back(cochain_to_json(c));
    j["B"] = B;
    json A = json::object(), f = json::object(), n = json::object();
    for (std::size_t t = 0; t < g.connection.size(); ++t) {
        Simplex key(lv.level(1)[t].tuple.begin(), lv.level(1)[t].tuple.end());
        A[simplex_key(key)] = cochain_to_json(g.connection[t]);
    }
    for (std::size_t t = 0; t < g.f.size(); ++t) {
        Simplex key(lv.level(2)[t].tuple.begin(), lv.level(2)[t].tuple.end());
        f[simplex_key(key)] = cochain_to_json(g.f[t]);
    }
    for (std::size_t t = 0; t < g.n.size(); ++t) {
        Simplex key(lv.level(3)[t].tuple.begin(), lv.level(3)[t].tuple.end());
        n[simplex_key(key)] = cochain_to_json(g.n[t]);
    }
    j["A"] = A;
    j["f"] = f;
    j["n"] = n;
    return j;
}

json group_to_json(const FgAbelianGroup& g) {
    json j;
    j["free_rank"] = g.free_rank;
    json t = json::array();
    for (const Int& d : g.torsion) t.push_back(d.get_str());
    j["torsion"] = t;
    j["name"] = g.to_string();
    return j;
}

json class_to_json(const FgAbelianGroup& g, const ClassCoordinates& c) {
    json j;
    j["group"] = group_to_json(g);
    json t = json::array(), fr = json::array();
    for (const Int& v : c.torsion) t.push_back(v.get_str());
    for (const Int& v : c.free_part) fr.push_back(v.get_str());
    j["torsion_coords"] = t;
    j["free_coords"] = fr;
    j["zero"] = c.is_zero();
    return j;
}

std::string fnv1a_digest(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

namespace {

void flatten(const json& j, const std::string& prefix, std::string& out) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items())
            flatten(v, prefix.empty() ? k : prefix + "." + k, out);
    } else if (j.is_array()) {
        std::size_t i = 0;
        for (const auto& v : j) flatten(v, prefix + "[" + std::to_string(i++) + "]", out);
    } else {
        std::string val = j.is_string() ? j.get<std::string>() : j.dump();
        out += prefix + "," + val + "\n";
    }
}

}  // namespace

std::string report_to_csv(const json& report) {
    std::string out = "key,value\n";
    flatten(report, "", out);
    return out;
}

}  // namespace cforge
