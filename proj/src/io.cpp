#include "toric/io.hpp"

#include "toric/blowup.hpp"
#include "toric/divisor.hpp"
#include "toric/errors.hpp"
#include "toric/nash.hpp"

#include "CLI11.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace toric {

namespace {

const long long kSafeIntMax = 9007199254740991LL; // 2^53 - 1

bool plain_decimal(const std::string& s) {
    size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    if (s[i] == '0' && s.size() > i + 1) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MalformedDocumentError("cannot read file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json parse_json(const std::string& text, const std::string& what) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw MalformedDocumentError(what + ": " + e.what());
    }
}

Json orbits_json(const ToricTriple& v) {
    Json arr = Json::array();
    for (const OrbitDescriptor& o : orbits(v)) {
        Json e;
        e["cone"] = mat_to_json(o.cone.rays);
        e["cone_dim"] = o.cone.cone_dim;
        e["orbit_dim"] = o.dim;
        e["index"] = o.index.finite ? int_to_json(o.index.value) : Json("infinite");
        arr.push_back(std::move(e));
    }
    return arr;
}

Json warnings_json(const std::vector<std::string>& warnings) {
    Json arr = Json::array();
    for (const std::string& w : warnings) arr.push_back(w);
    return arr;
}

std::map<std::string, Vec> parse_assignment(const std::string& text, int rank) {
    Json j = parse_json(text, "divisor data");
    if (!j.is_object()) throw MalformedDocumentError("divisor data must be an object");
    std::map<std::string, Vec> out;
    for (auto it = j.begin(); it != j.end(); ++it)
        out[it.key()] = json_to_vec(it.value(), rank, "divisor data for chart " + it.key());
    return out;
}

struct ExampleDoc {
    std::string name;
    ToricTriple triple;
};

Mat m2(std::initializer_list<std::initializer_list<long>> rows) {
    Mat out;
    for (const auto& r : rows) {
        Vec v;
        for (long x : r) v.push_back(x);
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<ExampleDoc> example_corpus() {
    std::vector<ExampleDoc> out;
    out.push_back({"cusp", build_triple(1, {{"c", m2({{1}}), m2({{2}, {3}})}})});
    out.push_back({"quadric-cone",
                   build_triple(2, {{"c", m2({{0, 1}, {2, -1}}), m2({{1, 0}, {1, 1}, {1, 2}})}})});
    out.push_back({"umbrella",
                   build_triple(2, {{"u", m2({{1, 0}, {0, 1}}), m2({{0, 2}, {1, 0}, {1, 1}})}})});
    out.push_back({"mirror-umbrella",
                   build_triple(2, {{"u", m2({{1, 0}, {0, 1}}), m2({{0, 2}, {1, 0}, {1, 1}})},
                                    {"m", m2({{1, 0}, {0, -1}}), m2({{0, -2}, {1, 0}, {1, -1}})}})});
    out.push_back({"gkz-cubic", gkz_triple(m2({{0}, {2}, {3}})).variety});
    out.push_back({"plane", build_triple(2, {{"c", m2({{1, 0}, {0, 1}}), m2({{0, 1}, {1, 0}})}})});
    out.push_back({"line", build_triple(1, {{"p", m2({{1}}), m2({{1}})},
                                            {"n", m2({{-1}}), m2({{-1}})}})});
    return out;
}

} // namespace

Json int_to_json(const Int& x) {
    if (x <= kSafeIntMax && x >= -kSafeIntMax) return Json(x.convert_to<long long>());
    return Json(x.str());
}

Int json_to_int(const Json& j, const std::string& what) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned() && j.get<unsigned long long>() >
                                          static_cast<unsigned long long>(kSafeIntMax))
            throw MalformedDocumentError(what + ": numbers beyond 53 bits must be strings");
        long long v = j.get<long long>();
        if (v > kSafeIntMax || v < -kSafeIntMax)
            throw MalformedDocumentError(what + ": numbers beyond 53 bits must be strings");
        return Int(v);
    }
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (!plain_decimal(s))
            throw MalformedDocumentError(what + ": '" + s + "' is not a decimal integer");
        return Int(s);
    }
    throw MalformedDocumentError(what + ": expected an integer or a decimal string");
}

Json vec_to_json(const Vec& v) {
    Json arr = Json::array();
    for (const Int& x : v) arr.push_back(int_to_json(x));
    return arr;
}

Vec json_to_vec(const Json& j, int dim, const std::string& what) {
    if (!j.is_array()) throw MalformedDocumentError(what + ": expected an array");
    Vec out;
    for (const Json& e : j) out.push_back(json_to_int(e, what));
    if (dim >= 0 && static_cast<int>(out.size()) != dim)
        throw MalformedDocumentError(what + ": expected " + std::to_string(dim) +
                                     " coordinates, got " + std::to_string(out.size()));
    return out;
}

Json mat_to_json(const Mat& m) {
    Json arr = Json::array();
    for (const Vec& v : m) arr.push_back(vec_to_json(v));
    return arr;
}

Mat json_to_mat(const Json& j, int dim, const std::string& what) {
    if (!j.is_array()) throw MalformedDocumentError(what + ": expected an array of vectors");
    Mat out;
    for (const Json& e : j) out.push_back(json_to_vec(e, dim, what));
    return out;
}

Json rat_to_json(const Rat& q) {
    if (denominator(q) == 1) return int_to_json(numerator(q));
    return Json(numerator(q).str() + "/" + denominator(q).str());
}

ParsedVariety variety_from_json(const Json& doc) {
    if (!doc.is_object()) throw MalformedDocumentError("document must be an object");
    for (auto it = doc.begin(); it != doc.end(); ++it)
        if (it.key() != "rank" && it.key() != "cones" && it.key() != "semigroups")
            throw MalformedDocumentError("unknown document key '" + it.key() + "'");
    if (!doc.contains("rank") || !doc.contains("cones") || !doc.contains("semigroups"))
        throw MalformedDocumentError("document needs the keys rank, cones and semigroups");

    Int rank_i = json_to_int(doc["rank"], "rank");
    if (rank_i < 0 || rank_i > 64) throw MalformedDocumentError("rank out of range");
    int rank = rank_i.convert_to<int>();

    if (!doc["cones"].is_array()) throw MalformedDocumentError("cones must be an array");
    const Json& semis = doc["semigroups"];
    if (!semis.is_object()) throw MalformedDocumentError("semigroups must be an object");

    ParsedVariety out;
    std::vector<ChartInput> inputs;
    for (const Json& cj : doc["cones"]) {
        if (!cj.is_object() || !cj.contains("id") || !cj.contains("rays") || cj.size() != 2)
            throw MalformedDocumentError("each cone needs exactly the keys id and rays");
        if (!cj["id"].is_string() || cj["id"].get<std::string>().empty())
            throw MalformedDocumentError("cone ids must be non-empty strings");
        std::string id = cj["id"].get<std::string>();
        Mat rays = json_to_mat(cj["rays"], rank, "rays of cone " + id);
        for (Vec& r : rays) {
            if (is_zero(r)) throw MalformedDocumentError("cone " + id + " lists a zero ray");
            Vec p = primitive(r);
            if (p != r) {
                std::ostringstream os;
                os << "ray " << vec_to_json(r).dump() << " of cone " << id
                   << " normalized to " << vec_to_json(p).dump();
                out.warnings.push_back(os.str());
                r = std::move(p);
            }
        }
        if (!semis.contains(id))
            throw MalformedDocumentError("no semigroup listed for cone " + id);
        Mat gens = json_to_mat(semis[id], rank, "semigroup of cone " + id);
        inputs.push_back({std::move(id), std::move(rays), std::move(gens)});
    }
    for (auto it = semis.begin(); it != semis.end(); ++it) {
        bool known = false;
        for (const ChartInput& in : inputs)
            if (in.id == it.key()) known = true;
        if (!known)
            throw MalformedDocumentError("semigroup listed for unknown cone " + it.key());
    }
    out.triple = build_triple(rank, inputs);
    return out;
}

ParsedVariety parse_variety(const std::string& text) {
    return variety_from_json(parse_json(text, "variety document"));
}

Json variety_to_json(const ToricTriple& v) {
    Json cones = Json::array();
    Json semis = Json::object();
    for (const Chart& ch : v.charts) {
        Json cj;
        cj["id"] = ch.id;
        cj["rays"] = mat_to_json(ch.cone.rays);
        cones.push_back(std::move(cj));
        semis[ch.id] = mat_to_json(ch.semigroup.gens);
    }
    Json doc;
    doc["rank"] = v.rank;
    doc["cones"] = std::move(cones);
    doc["semigroups"] = std::move(semis);
    return doc;
}

std::string serialize_variety(const ToricTriple& v) { return render(variety_to_json(v)); }

CliResult run_command(const std::vector<std::string>& args) {
    CLI::App app{"general toric variety toolkit"};
    app.require_subcommand(0, 1);

    bool emit_examples = false;
    std::string emit_dir = ".";
    app.add_flag("--emit-examples", emit_examples, "write the example corpus to disk");
    app.add_option("--dir", emit_dir, "directory for --emit-examples");

    std::string file, cone_s, chart_s, ideal_s, data_s, check_s, points_s, vector_s, matrix_s,
        target_s, lift_s;
    int steps = 20;
    bool do_normalize = false;

    CLI::App* c_validate = app.add_subcommand("validate", "parse and validate a variety");
    CLI::App* c_normalize = app.add_subcommand("normalize", "saturate every chart");
    CLI::App* c_orbits = app.add_subcommand("orbits", "list the orbit of every fan cone");
    CLI::App* c_closure = app.add_subcommand("orbit-closure", "orbit closure as a variety");
    CLI::App* c_blowup = app.add_subcommand("blowup", "blow up a monomial ideal on a chart");
    CLI::App* c_nash = app.add_subcommand("nash", "iterate the jacobian blowup");
    CLI::App* c_smooth = app.add_subcommand("smooth", "list the smooth orbits");
    CLI::App* c_divisor = app.add_subcommand("divisor", "check invariant divisor data");
    CLI::App* c_gkz = app.add_subcommand("gkz", "projective model of a point set");
    CLI::App* c_limit = app.add_subcommand("limit", "limit existence along a direction");
    CLI::App* c_morphism = app.add_subcommand("morphism", "check or lift an equivariant map");

    for (CLI::App* c : {c_validate, c_normalize, c_orbits, c_closure, c_blowup, c_nash, c_smooth,
                        c_divisor, c_limit, c_morphism})
        c->add_option("file", file, "variety document")->required();
    c_closure->add_option("--cone", cone_s, "rays of the fan cone, as JSON")->required();
    c_blowup->add_option("--chart", chart_s, "chart id")->required();
    c_blowup->add_option("--ideal", ideal_s, "exponent vectors, as JSON")->required();
    c_nash->add_option("--steps", steps, "step budget");
    c_nash->add_flag("--normalize", do_normalize, "saturate after every step");
    c_divisor->add_option("--data", data_s, "chart id to lattice point, as JSON")->required();
    c_divisor->add_option("--check", check_s, "cartier|bpf|ample|veryample|principal|sections|polytope")
        ->required();
    c_gkz->add_option("--points", points_s, "lattice points, as JSON")->required();
    c_limit->add_option("--vector", vector_s, "direction in N, as JSON")->required();
    c_morphism->add_option("--matrix", matrix_s, "row images, as JSON")->required();
    c_morphism->add_option("--target", target_s, "target variety document")->required();
    c_morphism->add_option("--lift-cone", lift_s,
                           "rays of the source face whose orbit map should lift");

    std::vector<std::string> argv_s;
    argv_s.push_back("toricvar");
    argv_s.insert(argv_s.end(), args.begin(), args.end());
    std::vector<char*> argv;
    argv.reserve(argv_s.size());
    for (std::string& s : argv_s) argv.push_back(s.data());

    std::string command = "usage";
    try {
        try {
            app.parse(static_cast<int>(argv.size()), argv.data());
        } catch (const CLI::CallForHelp&) {
            return {0, app.help()};
        } catch (const CLI::ParseError& e) {
            Json rep;
            rep["status"] = "error";
            rep["command"] = "usage";
            rep["result"] = {{"code", "UsageError"}, {"message", e.what()}};
            return {2, render(rep)};
        }

        Json result;
        if (emit_examples && app.get_subcommands().empty()) {
            command = "emit-examples";
            Json written = Json::array();
            for (const ExampleDoc& ex : example_corpus()) {
                std::string path = emit_dir + "/" + ex.name + ".json";
                std::ofstream outf(path, std::ios::binary);
                if (!outf) throw MalformedDocumentError("cannot write " + path);
                outf << serialize_variety(ex.triple);
                written.push_back(path);
            }
            result["written"] = std::move(written);
        } else if (app.get_subcommands().empty()) {
            Json rep;
            rep["status"] = "error";
            rep["command"] = "usage";
            rep["result"] = {{"code", "UsageError"}, {"message", "no subcommand given"}};
            return {2, render(rep)};
        } else if (app.get_subcommands()[0] == c_gkz) {
            command = "gkz";
            Mat pts = json_to_mat(parse_json(points_s, "--points"), -1, "--points");
            CartierData d = gkz_triple(pts);
            Json divisor = Json::object();
            for (size_t i = 0; i < d.variety.charts.size(); ++i)
                divisor[d.variety.charts[i].id] = vec_to_json(d.data[i]);
            result["document"] = variety_to_json(d.variety);
            result["divisor"] = std::move(divisor);
        } else {
            CLI::App* sub = app.get_subcommands()[0];
            command = sub->get_name();
            ParsedVariety pv = parse_variety(read_file(file));
            const ToricTriple& v = pv.triple;

            if (sub == c_validate || sub == c_orbits) {
                result["rank"] = v.rank;
                result["chart_count"] = static_cast<long long>(v.charts.size());
                result["fan_cone_count"] = static_cast<long long>(v.fan.size());
                result["orbits"] = orbits_json(v);
            } else if (sub == c_normalize) {
                result["document"] = variety_to_json(normalization(v));
            } else if (sub == c_closure) {
                Mat rays = json_to_mat(parse_json(cone_s, "--cone"), v.rank, "--cone");
                result["document"] = variety_to_json(orbit_closure(v, find_fan_cone(v, rays)));
            } else if (sub == c_blowup) {
                const Chart* chart = nullptr;
                for (const Chart& ch : v.charts)
                    if (ch.id == chart_s) chart = &ch;
                if (!chart) throw UnknownConeError("no chart with id " + chart_s);
                Mat exps = json_to_mat(parse_json(ideal_s, "--ideal"), v.rank, "--ideal");
                MonomialIdeal ideal = make_monomial_ideal(chart->semigroup, exps);
                result["document"] = variety_to_json(blowup_affine(ideal, chart_s));
            } else if (sub == c_nash) {
                NashReport rep = nash_iterate(v, steps, do_normalize);
                Json steps_j = Json::array();
                for (const NashStepSummary& s : rep.steps) {
                    Json sj;
                    sj["chart_count"] = s.chart_count;
                    sj["generator_counts"] = s.generator_counts;
                    sj["smooth_flags"] = s.smooth_flags;
                    steps_j.push_back(std::move(sj));
                }
                result["terminated"] = rep.terminated;
                result["reason"] = rep.reason;
                result["steps"] = std::move(steps_j);
                result["final"] = variety_to_json(rep.result);
            } else if (sub == c_smooth) {
                Json cones = Json::array();
                for (const Cone& c : smooth_locus(v)) cones.push_back(mat_to_json(c.rays));
                result["smooth_cones"] = std::move(cones);
                result["fan_cone_count"] = static_cast<long long>(v.fan.size());
            } else if (sub == c_divisor) {
                std::map<std::string, Vec> assign = parse_assignment(data_s, v.rank);
                if (check_s == "cartier") {
                    try {
                        make_cartier(v, assign);
                        result["cartier"] = true;
                        result["cartier_on_normalization"] = true;
                    } catch (const NotCartierError& e) {
                        result["cartier"] = false;
                        result["message"] = std::string(e.what());
                        bool weak = true;
                        try {
                            make_cartier(normalization(v), assign);
                        } catch (const NotCartierError&) {
                            weak = false;
                        }
                        result["cartier_on_normalization"] = weak;
                    }
                } else {
                    CartierData d = make_cartier(v, assign);
                    if (check_s == "bpf") {
                        result["basepoint_free"] = is_basepoint_free(d);
                    } else if (check_s == "ample") {
                        result["ample"] = is_ample(d);
                    } else if (check_s == "veryample") {
                        result["very_ample"] = is_very_ample(d);
                    } else if (check_s == "principal") {
                        result["principal"] = is_principal(d);
                    } else if (check_s == "sections") {
                        result["sections"] = mat_to_json(global_sections(d));
                    } else if (check_s == "polytope") {
                        DivisorPolytope p = divisor_polytope(d);
                        result["normals"] = mat_to_json(p.normals);
                        Json offs = Json::array();
                        for (const Int& o : p.offsets) offs.push_back(int_to_json(o));
                        result["offsets"] = std::move(offs);
                        result["bounded"] = p.bounded;
                        Json verts = Json::array();
                        for (const QVec& vert : p.vertices) {
                            Json vj = Json::array();
                            for (const Rat& q : vert) vj.push_back(rat_to_json(q));
                            verts.push_back(std::move(vj));
                        }
                        result["vertices"] = std::move(verts);
                    } else {
                        Json rep;
                        rep["status"] = "error";
                        rep["command"] = command;
                        rep["result"] = {{"code", "UsageError"},
                                         {"message", "unknown --check value " + check_s}};
                        return {2, render(rep)};
                    }
                }
            } else if (sub == c_limit) {
                Vec dir = json_to_vec(parse_json(vector_s, "--vector"), v.rank, "--vector");
                result["exists"] = limit_exists(v, dir);
            } else if (sub == c_morphism) {
                ParsedVariety tv = parse_variety(read_file(target_s));
                for (const std::string& w : tv.warnings) pv.warnings.push_back(w);
                if (lift_s.empty()) {
                    Mat rows = json_to_mat(parse_json(matrix_s, "--matrix"), tv.triple.rank,
                                           "--matrix");
                    if (static_cast<int>(rows.size()) != v.rank)
                        throw MalformedDocumentError("--matrix needs one row per source rank");
                    FanMapCheck chk = check_fan_map(LinearMap{v.rank, tv.triple.rank, rows}, v,
                                                    tv.triple);
                    Json assign = Json::array();
                    for (const auto& [s, t] : chk.assignment)
                        assign.push_back(Json::array({s, t}));
                    result["ok"] = chk.ok;
                    result["assignment"] = std::move(assign);
                    result["failing"] = chk.failing;
                } else {
                    Mat rays = json_to_mat(parse_json(lift_s, "--lift-cone"), v.rank,
                                           "--lift-cone");
                    Mat rows = json_to_mat(parse_json(matrix_s, "--matrix"), tv.triple.rank,
                                           "--matrix");
                    LiftResult lr = lifts_to_normalization(v, find_fan_cone(v, rays), rows,
                                                           tv.triple.rank);
                    result["lifts"] = lr.lifts;
                    result["extension"] = mat_to_json(lr.extension);
                }
            }
            if (!pv.warnings.empty()) result["warnings"] = warnings_json(pv.warnings);
        }

        Json rep;
        rep["status"] = "ok";
        rep["command"] = command;
        rep["result"] = std::move(result);
        return {0, render(rep)};
    } catch (const MalformedDocumentError& e) {
        Json rep;
        rep["status"] = "error";
        rep["command"] = command;
        rep["result"] = {{"code", e.code()}, {"message", e.what()}};
        return {2, render(rep)};
    } catch (const Error& e) {
        Json rep;
        rep["status"] = "error";
        rep["command"] = command;
        rep["result"] = {{"code", e.code()}, {"message", e.what()}};
        return {1, render(rep)};
    } catch (const std::exception& e) {
        Json rep;
        rep["status"] = "error";
        rep["command"] = command;
        rep["result"] = {{"code", "InternalError"}, {"message", e.what()}};
        return {1, render(rep)};
    }
}

} // namespace toric
