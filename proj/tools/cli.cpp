#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "cforge/fixtures.hpp"
#include "cforge/io.hpp"
#include "cforge/total.hpp"

namespace fs = std::filesystem;
using namespace cforge;

namespace {

constexpr const char* kVersion = "0.1.0";

std::string resolve_input(const std::string& input) {
    if (fs::exists(input)) return input;
    const char* dir = std::getenv("COCYCLE_FORGE_FIXTURES");
    if (dir) {
        fs::path p = fs::path(dir) / input;
        if (fs::exists(p)) return p.string();
    }
    fs::path local = fs::path("fixtures") / input;
    if (fs::exists(local)) return local.string();
    throw std::runtime_error("input not found: " + input);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json error_object(const std::string& kind, const std::string& message,
                  const std::string& where = "") {
    json e;
    e["error"] = kind;
    e["message"] = message;
    if (!where.empty()) e["where"] = where;
    return e;
}

json run_classify(const json& input, int height, int degree) {
    if (!input.contains("complex")) throw schema_error("/complex", "missing complex");
    SimplicialComplex cx = complex_from_json(input["complex"], "/complex");
    DiffComplex dc(&cx, height);
    const auto& pres = dc.integer_cohomology(degree);
    json results;
    results["degree"] = degree;
    results["height"] = height;
    results["group"] = group_to_json(pres.group());
    if (input.contains("cocycles")) {
        CocycleCategory cat(&dc, degree);
        json classes = json::array();
        std::size_t i = 0;
        for (const auto& payload : input["cocycles"]) {
            DiffCochain x =
                diffcochain_from_json(payload, &cx, "/cocycles/" + std::to_string(i++));
            if (x.k != degree)
                throw std::invalid_argument("cocycle degree does not match --degree");
            if (!is_cocycle(x)) throw std::invalid_argument("supplied cochain is not a cocycle");
            classes.push_back(class_to_json(pres.group(), cat.char_class(x)));
        }
        results["classes"] = classes;
    }
    return results;
}

json run_equivariant(const json& input, int degree) {
    ActionBundle b = action_from_json(input);
    TotalComplex tot(b.groupoid.get(), CoeffKind::integer_cochains, 1, degree + 1);
    json results;
    results["degree"] = degree;
    results["group"] = group_to_json(equivariant_cohomology(tot, degree));
    return results;
}

json run_glue(const json& input) {
    DescentBundle b = descent_from_json(input);
    GlueResult res = glue(*b.datum);  // validates, then machine-checks the witness
    DiffComplex dc(b.cover.base.get(), b.datum->s);
    CocycleCategory cat(&dc, 3);
    json results;
    results["global"] = diffcochain_to_json(res.global);
    results["witness"] = descent_arrow_to_json(res.witness);
    results["class"] = class_to_json(dc.integer_cohomology(3).group(),
                                     cat.char_class(res.global));
    return results;
}

json run_gerbe(const json& input) {
    GerbeBundle b = gerbe_from_json(input);
    auto bad = validate_gerbe(*b.gerbe, b.flavor);
    if (!bad.empty()) throw std::invalid_argument("invalid gerbe datum: " + bad.front());
    DiffCochain x = gerbe_to_dc(*b.gerbe, b.flavor);
    DiffComplex dc(b.cover.base.get(), x.s);
    CocycleCategory cat(&dc, 3);
    json results;
    results["dc"] = diffcochain_to_json(x);
    results["class"] = class_to_json(dc.integer_cohomology(3).group(), cat.char_class(x));
    if (b.flavor == GerbeFlavor::with_connection_and_curving)
        results["curvature"] = cochain_to_json(gerbe_curvature(*b.gerbe));
    return results;
}

json run_check(const json& input) {
    json results;
    std::string type = input.value("type", "");
    if (type == "complex") {
        complex_from_json(input, "/");
        results["valid"] = true;
    } else if (type == "cover") {
        cover_from_json(input, 3, "/");
        results["valid"] = true;
    } else if (type == "diffcochain") {
        if (!input.contains("complex")) throw schema_error("/complex", "missing complex");
        SimplicialComplex cx = complex_from_json(input["complex"], "/complex");
        DiffCochain x = diffcochain_from_json(input, &cx, "/");
        results["valid"] = true;
        results["cocycle"] = is_cocycle(x);
    } else if (type == "action") {
        action_from_json(input);
        results["valid"] = true;
    } else if (type == "descent") {
        DescentBundle b = descent_from_json(input);
        auto bad = validate_descent(*b.datum);
        results["valid"] = bad.empty();
        results["violations"] = bad;
        if (!bad.empty())
            throw std::invalid_argument("invalid descent datum: " + bad.front());
    } else if (type == "gerbe") {
        GerbeBundle b = gerbe_from_json(input);
        auto bad = validate_gerbe(*b.gerbe, b.flavor);
        results["valid"] = bad.empty();
        results["violations"] = bad;
        if (!bad.empty()) throw std::invalid_argument("invalid gerbe datum: " + bad.front());
    } else {
        throw schema_error("/type", "unknown or missing input type '" + type + "'");
    }
    return results;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cocycle-forge: exact classification of differential cocycle data"};
    std::string command, input_path, out_path, format = "json";
    int height = 1, degree = 3;
    std::uint64_t seed = 0;
    bool timing = false;

    app.add_option("--command", command, "classify | equivariant-classify | glue | gerbe | check")
        ->required();
    app.add_option("--input", input_path, "input JSON file (or bundled fixture name)")
        ->required();
    app.add_option("--height", height, "height s of the differential complex");
    app.add_option("--degree", degree, "cohomological degree k");
    app.add_option("--format", format, "json | csv");
    app.add_option("--seed", seed, "seed echoed into the report");
    app.add_option("--out", out_path, "output path (default stdout)");
    app.add_flag("--timing", timing, "include wall-clock timing in the report");

    CLI11_PARSE(app, argc, argv);

    json report;
    report["tool"] = "cocycle-forge";
    report["version"] = kVersion;
    report["command"] = command;
    report["seed"] = seed;

    auto emit = [&](int code) -> int {
        std::string payload = format == "csv" ? report_to_csv(report)
                                              : report.dump(2) + "\n";
        if (out_path.empty()) {
            std::cout << payload;
        } else {
            std::ofstream out(out_path, std::ios::binary);
            out << payload;
        }
        return code;
    };

    try {
        const std::string path = resolve_input(input_path);
        const std::string bytes = read_file(path);
        report["inputs"] = json::array({json{{"path", input_path},
                                             {"digest", fnv1a_digest(bytes)}}});
        json input = load_json_file(path);

        auto started = std::chrono::steady_clock::now();
        if (command == "classify") report["results"] = run_classify(input, height, degree);
        else if (command == "equivariant-classify")
            report["results"] = run_equivariant(input, degree);
        else if (command == "glue") report["results"] = run_glue(input);
        else if (command == "gerbe") report["results"] = run_gerbe(input);
        else if (command == "check") report["results"] = run_check(input);
        else {
            report["results"] = error_object("usage", "unknown command '" + command + "'");
            return emit(2);
        }
        if (timing) {
            auto us = std::chrono::duration_cast<std::chrono::microseconds>(
                          std::chrono::steady_clock::now() - started)
                          .count();
            report["timing_us"] = us;
        }
        return emit(0);
    } catch (const schema_error& e) {
        report["results"] = error_object("schema", e.what(), e.where());
        return emit(2);
    } catch (const std::invalid_argument& e) {
        report["results"] = error_object("precondition", e.what());
        return emit(1);
    } catch (const std::exception& e) {
        report["results"] = error_object("failure", e.what());
        return emit(1);
    }
}
