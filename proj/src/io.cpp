#include "koszulkit/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace koszulkit {

namespace {

const json& require_key(const json& doc, const char* key, const char* where) {
    if (!doc.is_object() || !doc.contains(key))
        throw InputError(std::string(where) + ": missing key \"" + key + "\"");
    return doc.at(key);
}

Scalar scalar_from_json(const Field& f, const json& v) {
    try {
        if (v.is_string()) return f.parse(v.get<std::string>());
        if (v.is_number_integer()) return f.from_int(v.get<long>());
    } catch (const ScalarParseError& e) {
        throw InputError(e.what());
    }
    throw InputError("scalar must be a string or an integer");
}

int parse_degree_key(const std::string& k) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(k, &used);
        if (used != k.size()) throw std::invalid_argument(k);
        return v;
    } catch (const std::exception&) {
        throw InputError("degree key \"" + k + "\" is not an integer");
    }
}

} // namespace

std::shared_ptr<Presentation> presentation_from_json(const json& doc) {
    if (!doc.is_object()) throw InputError("presentation must be a JSON object");
    long ch = require_key(doc, "characteristic", "presentation").get<long>();
    if (ch < 0 || (ch != 0 && !is_prime(static_cast<std::uint64_t>(ch))))
        throw InputError("characteristic must be 0 or a prime");
    auto p = std::make_shared<Presentation>(Field(static_cast<std::uint32_t>(ch)));
    for (const auto& obj : require_key(doc, "indecomposables", "presentation")) {
        const auto id = require_key(obj, "id", "indecomposable").get<std::string>();
        const int deg = require_key(obj, "degree", "indecomposable").get<int>();
        p->add_object(id, deg, obj.value("name", std::string{}));
    }
    std::set<std::pair<int, int>> declared;
    if (doc.contains("hom"))
        for (const auto& h : doc.at("hom")) {
            const int s = p->index_of(require_key(h, "src", "hom").get<std::string>());
            const int t = p->index_of(require_key(h, "tgt", "hom").get<std::string>());
            if (!declared.insert({s, t}).second)
                throw InputError("Hom(" + p->object(s).id + "," + p->object(t).id + ") declared twice");
            p->set_basis(s, t, require_key(h, "basis", "hom").get<std::vector<std::string>>());
        }
    p->finalize();
    if (doc.contains("compose"))
        for (const auto& c : doc.at("compose")) {
            const auto left = require_key(c, "left", "compose").get<std::string>();
            const auto right = require_key(c, "right", "compose").get<std::string>();
            auto l = p->locate(left), r = p->locate(right);
            if (!l || !r) {
                p->note_malformed({"unknown-label", "composition refers to an unknown label", {left, right}});
                continue;
            }
            const auto [b, cc, x] = *l;
            const auto [a, b2, y] = *r;
            if (b != b2) {
                p->note_malformed({"not-composable", "labels are not composable", {left, right}});
                continue;
            }
            Vector v = p->field().zeros(p->dim(a, cc));
            bool ok = true;
            for (const auto& term : require_key(c, "result", "compose")) {
                const auto lab = require_key(term, "label", "compose result").get<std::string>();
                auto loc = p->locate(lab);
                if (!loc || std::get<0>(*loc) != a || std::get<1>(*loc) != cc) {
                    p->note_malformed({"shape-mismatch", "result label '" + lab + "' is not in the target Hom space",
                                       {left, right, lab}});
                    ok = false;
                    break;
                }
                v[std::get<2>(*loc)] += scalar_from_json(p->field(), require_key(term, "coeff", "compose result"));
            }
            if (ok) p->set_product(left, right, v);
        }
    return p;
}

json presentation_to_json(const Presentation& p) {
    json doc;
    doc["characteristic"] = p.field().characteristic();
    json objs = json::array();
    for (const auto& o : p.objects()) objs.push_back({{"id", o.id}, {"degree", o.degree}, {"name", o.name}});
    doc["indecomposables"] = objs;
    json hom = json::array(), comp = json::array();
    const int n = static_cast<int>(p.size());
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t)
            if (p.dim(s, t) > 0)
                hom.push_back({{"src", p.object(s).id}, {"tgt", p.object(t).id}, {"basis", p.basis(s, t)}});
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (std::size_t x = 0; x < p.dim(b, c); ++x)
                    for (std::size_t y = 0; y < p.dim(a, b); ++y) {
                        if (p.identity_index(b) == y && a == b) continue;
                        if (p.identity_index(b) == x && b == c) continue;
                        json res = json::array();
                        for (std::size_t z = 0; z < p.dim(a, c); ++z) {
                            const Scalar& s = p.product(a, b, c, x, y, z);
                            if (!s.is_zero()) res.push_back({{"label", p.basis(a, c)[z]}, {"coeff", s.to_string()}});
                        }
                        if (!res.empty())
                            comp.push_back({{"left", p.basis(b, c)[x]}, {"right", p.basis(a, b)[y]}, {"result", res}});
                    }
    doc["hom"] = hom;
    doc["compose"] = comp;
    return doc;
}

AddObject object_from_json(const Presentation& p, const json& ids) {
    if (!ids.is_array()) throw InputError("object must be an array of ids");
    AddObject x;
    for (const auto& id : ids) x.summands.push_back(p.index_of(id.get<std::string>()));
    return x;
}

json object_to_json(const Presentation& p, const AddObject& x) {
    json a = json::array();
    for (int k : x.summands) a.push_back(p.object(k).id);
    return a;
}

AddMorphism morphism_from_json(const Presentation& p, const AddObject& x, const AddObject& y, const json& blocks) {
    AddMorphism m(p, x, y);
    if (!blocks.is_array()) throw InputError("morphism blocks must be an array");
    for (const auto& b : blocks) {
        if (!b.is_object()) throw InputError("block must be an object");
        const auto row = b.value("row", std::size_t{0});
        const auto col = b.value("col", std::size_t{0});
        if (row >= y.size() || col >= x.size()) throw InputError("block index out of range");
        const auto lab = require_key(b, "label", "block").get<std::string>();
        auto loc = p.locate(lab);
        if (!loc || std::get<0>(*loc) != x[col] || std::get<1>(*loc) != y[row])
            throw InputError("label '" + lab + "' does not fit block (" + std::to_string(row) + "," +
                             std::to_string(col) + ")");
        m.coord(row, col, std::get<2>(*loc)) += scalar_from_json(p.field(), require_key(b, "coeff", "block"));
    }
    return m;
}

json morphism_to_json(const AddMorphism& f) {
    const auto& p = f.cat();
    json a = json::array();
    for (std::size_t i = 0; i < f.target().size(); ++i)
        for (std::size_t j = 0; j < f.source().size(); ++j)
            for (std::size_t k = 0; k < f.block_dim(i, j); ++k) {
                const Scalar& s = f.coord(i, j, k);
                if (s.is_zero()) continue;
                a.push_back({{"row", i},
                             {"col", j},
                             {"label", p.basis(f.source()[j], f.target()[i])[k]},
                             {"coeff", s.to_string()}});
            }
    return a;
}

Complex complex_from_json(const Presentation& p, const json& doc) {
    Complex x(p);
    for (const auto& [k, ids] : require_key(doc, "terms", "complex").items())
        x.set_term(parse_degree_key(k), object_from_json(p, ids));
    if (doc.contains("diff"))
        for (const auto& [k, blocks] : doc.at("diff").items()) {
            const int i = parse_degree_key(k);
            x.set_d(i, morphism_from_json(p, x.term(i), x.term(i + 1), blocks));
        }
    x.check();
    return x;
}

json complex_to_json(const Complex& x) {
    json terms = json::object(), diff = json::object();
    for (int i : x.degrees()) {
        terms[std::to_string(i)] = object_to_json(x.cat(), x.term(i));
        const AddMorphism d = x.d(i);
        if (!d.is_zero()) diff[std::to_string(i)] = morphism_to_json(d);
    }
    return {{"terms", terms}, {"diff", diff}};
}

ChainMap chain_map_from_json(const Complex& x, const Complex& y, const json& doc) {
    ChainMap f{x, y, {}};
    if (doc.contains("components"))
        for (const auto& [k, blocks] : doc.at("components").items()) {
            const int i = parse_degree_key(k);
            f.set(i, morphism_from_json(x.cat(), x.term(i), y.term(i), blocks));
        }
    if (!is_chain_map(f)) throw InputError("map is not a chain map");
    return f;
}

json chain_map_to_json(const ChainMap& f) {
    json comps = json::object();
    for (const auto& [i, m] : f.comp)
        if (!m.is_zero()) comps[std::to_string(i)] = morphism_to_json(m);
    return {{"components", comps}};
}

ChainMap chain_map_file_from_json(const Presentation& p, const json& doc) {
    const Complex x = complex_from_json(p, require_key(doc, "source", "map"));
    const Complex y = complex_from_json(p, require_key(doc, "target", "map"));
    return chain_map_from_json(x, y, doc);
}

json chain_map_file_to_json(const ChainMap& f) {
    json doc = chain_map_to_json(f);
    doc["source"] = complex_to_json(f.source);
    doc["target"] = complex_to_json(f.target);
    return doc;
}

InfMorphism inf_morphism_from_json(const Presentation& p, const json& doc) {
    const ChainMap f0 = chain_map_file_from_json(p, require_key(doc, "f0", "infinitesimal morphism"));
    const json& fi = require_key(doc, "finf", "infinitesimal morphism");
    const Complex ym = shift(f0.target, -1);
    if (fi.contains("source") && !(complex_from_json(p, fi.at("source")) == f0.source))
        throw InputError("finf source differs from the source of f0");
    if (fi.contains("target") && !(complex_from_json(p, fi.at("target")) == ym))
        throw InputError("finf target must be the target of f0 shifted by -1");
    return make_inf(f0, chain_map_from_json(f0.source, ym, fi));
}

json inf_morphism_to_json(const InfMorphism& f) {
    return {{"f0", chain_map_file_to_json(f.f0)}, {"finf", chain_map_file_to_json(f.finf)}};
}

HomogeneousFunctor functor_from_json(const Presentation& source, const Presentation& target, const json& doc) {
    HomogeneousFunctor f{&source, &target, std::vector<AddObject>(source.size()), {}};
    const json& objs = require_key(doc, "on_objects", "functor");
    for (const auto& [id, ids] : objs.items()) f.on_objects.at(static_cast<std::size_t>(source.index_of(id))) =
        object_from_json(target, ids);
    for (const auto& o : source.objects())
        if (!objs.contains(o.id)) throw InputError("functor: no image for " + o.id);
    const json hom = doc.value("on_hom", json::object());
    for (const auto& [label, blocks] : hom.items())
        if (!source.locate(label)) throw InputError("functor: unknown label " + label);
    const int n = static_cast<int>(source.size());
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
            if (source.dim(s, t) == 0) continue;
            const AddObject& fs = f.on_objects[static_cast<std::size_t>(s)];
            const AddObject& ft = f.on_objects[static_cast<std::size_t>(t)];
            Matrix m(target.field(), hom_dim(target, fs, ft), source.dim(s, t));
            for (std::size_t k = 0; k < source.dim(s, t); ++k) {
                const std::string& label = source.basis(s, t)[k];
                if (hom.contains(label))
                    m.set_column(k, morphism_from_json(target, fs, ft, hom.at(label)).coords());
                else if (s == t && source.identity_index(s) == k)
                    m.set_column(k, identity_morphism(target, fs).coords());
                else
                    throw InputError("functor: no image for label " + label);
            }
            f.on_hom[{s, t}] = m;
        }
    validate_functor(f);
    return f;
}

json functor_to_json(const HomogeneousFunctor& f) {
    const Presentation& p = *f.source;
    json objs = json::object(), hom = json::object();
    const int n = static_cast<int>(p.size());
    for (int s = 0; s < n; ++s) objs[p.object(s).id] = object_to_json(*f.target, f.on_objects[static_cast<std::size_t>(s)]);
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t)
            for (std::size_t k = 0; k < p.dim(s, t); ++k) {
                const AddMorphism x = hom_basis(p, AddObject{{s}}, AddObject{{t}}).at(k);
                hom[p.basis(s, t)[k]] = morphism_to_json(f.morphism(x));
            }
    return {{"on_objects", objs}, {"on_hom", hom}};
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json read_json_file(const std::string& path) {
    try {
        return json::parse(read_text_file(path));
    } catch (const json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

json sort_keys(const json& doc) {
    if (doc.is_object()) {
        std::map<std::string, json> sorted;
        for (const auto& [k, v] : doc.items()) sorted.emplace(k, sort_keys(v));
        json out = json::object();
        for (auto& [k, v] : sorted) out[k] = std::move(v);
        return out;
    }
    if (doc.is_array()) {
        json out = json::array();
        for (const auto& v : doc) out.push_back(sort_keys(v));
        return out;
    }
    return doc;
}

std::string canonical_dump(const json& doc) { return sort_keys(doc).dump(2) + "\n"; }

std::string first_difference(const json& a, const json& b) {
    if (a.type() != b.type()) return "/";
    if (a.is_object()) {
        std::set<std::string> keys;
        for (const auto& [k, v] : a.items()) keys.insert(k);
        for (const auto& [k, v] : b.items()) keys.insert(k);
        for (const auto& k : keys) {
            if (!a.contains(k) || !b.contains(k)) return "/" + k;
            const std::string d = first_difference(a.at(k), b.at(k));
            if (!d.empty()) return "/" + k + (d == "/" ? "" : d);
        }
        return {};
    }
    if (a.is_array()) {
        for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
            const std::string d = first_difference(a[i], b[i]);
            if (!d.empty()) return "/" + std::to_string(i) + (d == "/" ? "" : d);
        }
        if (a.size() != b.size()) return "/" + std::to_string(std::min(a.size(), b.size()));
        return {};
    }
    return a == b ? std::string{} : "/";
}

void write_file_atomic(const std::string& path, const std::string& text) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw InputError("cannot write " + tmp);
        out << text;
        if (!out.flush()) throw InputError("cannot write " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw InputError("cannot replace " + path);
    }
}

std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

} // namespace koszulkit
