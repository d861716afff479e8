#include "entcone/io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace entcone {

namespace {

std::string mask_key(unsigned mask) { return std::to_string(mask); }

unsigned parse_mask_key(const std::string& key, unsigned full) {
    size_t pos = 0;
    unsigned long mask = 0;
    try {
        mask = std::stoul(key, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad subset key in set function: " + key);
    }
    if (pos != key.size() || mask == 0 || mask > full)
        throw std::invalid_argument("bad subset key in set function: " + key);
    return static_cast<unsigned>(mask);
}

int read_n(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw std::invalid_argument("set function JSON needs an integer \"n\"");
    return j["n"].get<int>();
}

json detail_json(const Verdict& v) {
    json d = json::object();
    if (v.theorem != 0)
        d["theorem"] = v.theorem;
    if (v.k)
        d["k"] = *v.k;
    if (v.k2)
        d["k2"] = *v.k2;
    if (v.partition)
        d["partition"] = *v.partition;
    return d;
}

} // namespace

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", x == 0 ? 0.0 : x);
    return buf;
}

json set_function_to_json(const RationalSetFunction& f) {
    json j;
    j["n"] = f.ground().n();
    json vals = json::object();
    for (unsigned mask = 1; mask <= f.ground().full_mask(); ++mask)
        vals[mask_key(mask)] = rational_to_string(f.value(mask));
    j["values"] = std::move(vals);
    return j;
}

json set_function_to_json(const RealSetFunction& f) {
    json j;
    j["n"] = f.ground().n();
    json vals = json::object();
    for (unsigned mask = 1; mask <= f.ground().full_mask(); ++mask)
        vals[mask_key(mask)] = f.value(mask);
    j["values"] = std::move(vals);
    return j;
}

bool set_function_json_is_rational(const json& j) {
    if (!j.is_object() || !j.contains("values") || !j["values"].is_object())
        throw std::invalid_argument("set function JSON needs a \"values\" object");
    for (const auto& item : j["values"].items())
        return item.value().is_string();
    return true; // empty: treat as rational zeros
}

RationalSetFunction rational_set_function_from_json(const json& j) {
    const GroundSet g(read_n(j));
    if (!j.contains("values") || !j["values"].is_object())
        throw std::invalid_argument("set function JSON needs a \"values\" object");
    RationalSetFunction f(g);
    for (const auto& item : j["values"].items()) {
        const unsigned mask = parse_mask_key(item.key(), g.full_mask());
        if (!item.value().is_string())
            throw std::invalid_argument("rational set function values must be strings");
        f.set_value(mask, rational_from_string(item.value().get<std::string>()));
    }
    return f;
}

RealSetFunction real_set_function_from_json(const json& j) {
    const GroundSet g(read_n(j));
    if (!j.contains("values") || !j["values"].is_object())
        throw std::invalid_argument("set function JSON needs a \"values\" object");
    RealSetFunction f(g);
    for (const auto& item : j["values"].items()) {
        const unsigned mask = parse_mask_key(item.key(), g.full_mask());
        if (item.value().is_string()) {
            const Rational q = rational_from_string(item.value().get<std::string>());
            f.set_value(mask, static_cast<double>(q));
        } else if (item.value().is_number()) {
            f.set_value(mask, item.value().get<double>());
        } else {
            throw std::invalid_argument("set function values must be strings or numbers");
        }
    }
    return f;
}

json inequalities_to_json(const std::vector<LinearInequality>& ineqs) {
    json arr = json::array();
    for (const auto& iq : ineqs) {
        json row;
        row["index"] = iq.index;
        row["n"] = iq.coeffs.ground().n();
        json coeffs = json::object();
        for (unsigned mask = 1; mask <= iq.coeffs.ground().full_mask(); ++mask)
            coeffs[mask_key(mask)] = rational_to_string(iq.coeffs.value(mask));
        row["coeffs"] = std::move(coeffs);
        arr.push_back(std::move(row));
    }
    return arr;
}

std::string inequalities_to_csv(const std::vector<LinearInequality>& ineqs) {
    if (ineqs.empty())
        return "index\n";
    const unsigned full = ineqs.front().coeffs.ground().full_mask();
    std::string out = "index";
    for (unsigned mask = 1; mask <= full; ++mask)
        out += ",c" + std::to_string(mask);
    out += "\n";
    for (const auto& iq : ineqs) {
        out += std::to_string(iq.index);
        for (unsigned mask = 1; mask <= full; ++mask)
            out += "," + rational_to_string(iq.coeffs.value(mask));
        out += "\n";
    }
    return out;
}

json rays_to_json(const std::vector<ExtremeRay>& rays,
                  const std::vector<RayName>& names) {
    if (!names.empty() && names.size() != rays.size())
        throw std::invalid_argument("name list does not match the ray list");
    json arr = json::array();
    for (size_t i = 0; i < rays.size(); ++i) {
        json row = set_function_to_json(rays[i].rep);
        row["tight"] = rays[i].tight;
        if (!names.empty())
            row["name"] = to_string(names[i]);
        arr.push_back(std::move(row));
    }
    return arr;
}

std::string rays_to_csv(const std::vector<ExtremeRay>& rays,
                        const std::vector<RayName>& names) {
    if (!names.empty() && names.size() != rays.size())
        throw std::invalid_argument("name list does not match the ray list");
    std::string out = "name";
    const unsigned full = rays.empty() ? 0 : rays.front().rep.ground().full_mask();
    for (unsigned mask = 1; mask <= full; ++mask)
        out += ",v" + std::to_string(mask);
    out += "\n";
    for (size_t i = 0; i < rays.size(); ++i) {
        out += names.empty() ? "" : to_string(names[i]);
        for (unsigned mask = 1; mask <= full; ++mask)
            out += "," + rational_to_string(rays[i].rep.value(mask));
        out += "\n";
    }
    return out;
}

std::string faces_to_csv(const std::vector<FacePair>& pairs) {
    std::string out = "ray_i,ray_j,is_2face\n";
    for (const auto& p : pairs) {
        out += std::to_string(p.i) + "," + std::to_string(p.j) + "," +
               (p.is_2face ? "1" : "0") + "\n";
    }
    return out;
}

std::string status_label(int theorem) {
    switch (theorem) {
    case 0:
        return "Uncharacterized";
    case 1:
        return "AllEntropic";
    case 2:
        return "Matus";
    case 3:
    case 4:
        return "LogK";
    case 5:
        return "LogGrid";
    case 6:
        return "Partition";
    case 7:
        return "HalfOpen";
    default:
        throw std::invalid_argument("unknown theorem tag");
    }
}

std::string table_to_csv(const std::vector<FaceType>& table) {
    std::string out = "type_id,ray1,ray2,count,status,theorem\n";
    for (const auto& t : table) {
        out += std::to_string(t.type_id) + "," + to_string(t.rep_first) + "," +
               to_string(t.rep_second) + "," + std::to_string(t.count) + "," +
               status_label(t.theorem) + ",";
        if (t.theorem != 0)
            out += std::to_string(t.theorem);
        out += "\n";
    }
    return out;
}

json table_to_json(const std::vector<FaceType>& table) {
    json arr = json::array();
    for (const auto& t : table) {
        json row;
        row["type_id"] = t.type_id;
        row["ray1"] = to_string(t.rep_first);
        row["ray2"] = to_string(t.rep_second);
        row["count"] = t.count;
        row["status"] = status_label(t.theorem);
        if (t.theorem != 0)
            row["theorem"] = t.theorem;
        else
            row["theorem"] = nullptr;
        arr.push_back(std::move(row));
    }
    return arr;
}

json dist_to_json(const JointDist& d) {
    json j;
    j["n"] = d.n();
    j["alphabets"] = d.alphabet_sizes();
    json pmf = json::array();
    for (const auto& [x, p] : d.pmf()) {
        json cell;
        cell["x"] = x;
        cell["p"] = p;
        pmf.push_back(std::move(cell));
    }
    j["pmf"] = std::move(pmf);
    return j;
}

JointDist dist_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("alphabets") ||
        !j.contains("pmf"))
        throw std::invalid_argument("distribution JSON needs n, alphabets and pmf");
    const int n = j["n"].get<int>();
    const auto alphabets = j["alphabets"].get<std::vector<int>>();
    if (!j["pmf"].is_array())
        throw std::invalid_argument("pmf must be an array");
    std::map<std::vector<int>, double> pmf;
    for (const auto& cell : j["pmf"]) {
        if (!cell.is_object() || !cell.contains("x") || !cell.contains("p"))
            throw std::invalid_argument("each pmf entry needs x and p");
        auto x = cell["x"].get<std::vector<int>>();
        const double p = cell["p"].get<double>();
        pmf[std::move(x)] += p;
    }
    return JointDist(n, alphabets, std::move(pmf), 1e-9);
}

json verdict_to_json(const FacePoint& fp, const Verdict& v) {
    json j;
    j["face"] = face_id_of(fp);
    j["a"] = fp.a;
    j["b"] = fp.b;
    j["status"] = to_string(v.status);
    j["detail"] = detail_json(v);
    return j;
}

json witness_report(const FacePoint& fp, const Verdict& v, const JointDist& d,
                    double max_error) {
    json j;
    j["face"] = face_id_of(fp);
    j["a"] = fp.a;
    j["b"] = fp.b;
    j["status"] = to_string(v.status);
    j["detail"] = detail_json(v);
    j["support"] = d.support_size();
    j["alphabets"] = d.alphabet_sizes();
    j["max_error"] = max_error;
    return j;
}

std::string region_to_csv(const std::vector<RegionRow>& rows) {
    std::string out = "a,b,status\n";
    for (const auto& r : rows)
        out += format_double(r.a) + "," + format_double(r.b) + "," +
               to_string(r.status) + "\n";
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot open for writing: " + path);
    f << content;
    if (!f)
        throw std::runtime_error("write failed: " + path);
}

} // namespace entcone
