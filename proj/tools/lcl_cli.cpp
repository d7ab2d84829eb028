#include "lcl/error.hpp"
#include "lcl/ginzburg_ext.hpp"
#include "lcl/green_seq.hpp"
#include "lcl/http_api.hpp"
#include "lcl/session.hpp"
#include "lcl/verify.hpp"

#include <CLI11.hpp>
#include <spdlog/spdlog.h>

#include <fstream>
#include <iostream>

namespace {

struct FixtureOpts {
    std::string name;
    std::string type;
    std::vector<int> word;
    int a = 0;
    int b = 0;

    void add(CLI::App* app) {
        app->add_option("--fixture", name, "named fixture (" + join(lcl::fixture_names()) + ")");
        app->add_option("--type", type, "Dynkin type, e.g. A3");
        app->add_option("--word", word, "reduced word for w0")->delimiter(',');
        app->add_option("--a", a, "left end");
        app->add_option("--b", b, "right end");
    }
    nlohmann::json descriptor() const {
        if (!name.empty()) return {{"fixture", name}};
        if (type.empty()) lcl::fail("BadFixture", "give --fixture or --type/--word/--a/--b");
        return {{"type", type}, {"word", word}, {"a", a}, {"b", b}};
    }
    lcl::IndexSequence sequence() const {
        if (type.empty()) lcl::fail("BadFixture", "this command needs --type/--word/--a/--b");
        return lcl::IndexSequence::extended(lcl::parse_dynkin(type), word);
    }
    static std::string join(const std::vector<std::string>& v) {
        std::string s;
        for (const auto& x : v) s += (s.empty() ? "" : ", ") + x;
        return s;
    }
};

void emit(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream f(out);
    if (!f) lcl::fail("IoError", "cannot write " + out);
    f << text << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lambda-seeds, interval quivers and Ginzburg Ext tables"};
    app.require_subcommand(1);
    std::string out;
    app.add_option("-o,--out", out, "write the result to a file");
    bool verbose = false;
    app.add_flag("-v,--verbose", verbose, "debug logging");

    FixtureOpts fo;
    std::vector<int> seq;
    std::string format = "json";

    auto* build = app.add_subcommand("build", "build a fixture quiver");
    fo.add(build);
    build->add_option("--format", format, "json | dot | matrix");

    auto* interval = app.add_subcommand("interval", "interval quivers with potential");
    auto* ibuild = interval->add_subcommand("build", "build Q^[a,b] with its potential");
    fo.add(ibuild);
    interval->require_subcommand(1);

    auto* mutate = app.add_subcommand("mutate", "mutate a fixture along a sequence of vertices");
    fo.add(mutate);
    mutate->add_option("--seq", seq, "vertex ids")->delimiter(',');
    mutate->add_option("--format", format, "json | dot | matrix");

    auto* pair = app.add_subcommand("pair", "compatible pair of a fixture");
    fo.add(pair);

    auto* seed = app.add_subcommand("seed", "Lambda-seed after mutating along a sequence");
    fo.add(seed);
    seed->add_option("--seq", seq, "vertex ids")->delimiter(',');

    auto* green = app.add_subcommand("green", "run a green sequence on the unfrozen part");
    fo.add(green);
    green->add_option("--seq", seq, "vertex ids")->delimiter(',');

    auto* ext = app.add_subcommand("ext", "graded Ext dimensions on the regular embedding");
    fo.add(ext);
    std::string pairs = "all";
    ext->add_option("--pairs", pairs, "all | s:t,s:t,...");

    auto* lam = app.add_subcommand("lambda-matrix", "homological and matrix Lambda side by side");
    fo.add(lam);

    auto* verify = app.add_subcommand("verify", "run the cross-check suite");
    std::string scope = "all";
    verify->add_option("--scope", scope, "A1 | A2-adapted | A3-adapted | all");

    auto* serve = app.add_subcommand("serve", "HTTP JSON API");
    int port = 8080;
    std::string host = "127.0.0.1";
    serve->add_option("--port", port, "port");
    serve->add_option("--host", host, "bind address");

    CLI11_PARSE(app, argc, argv);
    spdlog::set_level(verbose ? spdlog::level::debug : spdlog::level::warn);

    try {
        if (*build || *mutate) {
            lcl::Session s(fo.descriptor());
            for (int v : seq) s.mutate(v);
            emit(s.export_doc(format), out);
        } else if (*interval) {
            auto w = fo.sequence();
            emit(lcl::to_json(lcl::build_interval(w, fo.a, fo.b)).dump(2), out);
        } else if (*pair) {
            emit(lcl::Session(fo.descriptor()).export_doc("matrix"), out);
        } else if (*seed) {
            lcl::Session s(fo.descriptor());
            for (int v : seq) s.mutate(v);
            auto j = lcl::to_json(s.seed());
            j["g_vectors"] = s.state()["g_vectors"];
            j["order"] = s.order().ids;
            emit(j.dump(2), out);
        } else if (*green) {
            lcl::Fixture f = lcl::build_fixture(fo.descriptor());
            emit(lcl::to_json(lcl::run_green(lcl::unfrozen_part(f.quiver), seq)).dump(2), out);
        } else if (*ext) {
            auto m = lcl::regular_embed(fo.sequence(), fo.a, fo.b);
            lcl::ExtTable t;
            if (pairs == "all") {
                t = lcl::ext_table(m);
            } else {
                std::stringstream ss(pairs);
                std::string item;
                while (std::getline(ss, item, ',')) {
                    auto colon = item.find(':');
                    if (colon == std::string::npos) lcl::fail("BadArgument", "pair \"" + item + "\" is not s:t");
                    const int s = std::stoi(item.substr(0, colon)), u = std::stoi(item.substr(colon + 1));
                    t[{s, u}] = lcl::ext_dims(m, s, u);
                }
            }
            emit(nlohmann::json{{"model", lcl::to_json(m)}, {"ext", lcl::to_json(t)}}.dump(2), out);
        } else if (*lam) {
            auto m = lcl::regular_embed(fo.sequence(), fo.a, fo.b);
            auto qp = lcl::build_pair(lcl::build_interval(m.w, fo.a, fo.b).qp.quiver);
            auto hom = lcl::bracket_matrix(m, qp.order);
            emit(nlohmann::json{{"order", qp.order.ids},
                                {"a_prime", m.a},
                                {"homological", lcl::to_json(hom)},
                                {"matrix", lcl::to_json(qp.pair.lambda)},
                                {"diff", lcl::to_json(hom - qp.pair.lambda)}}
                     .dump(2),
                 out);
        } else if (*verify) {
            auto report = lcl::verify_suite(scope);
            emit(report.dump(2), out);
            return report["failed"].get<int>() == 0 ? 0 : 1;
        } else if (*serve) {
            spdlog::set_level(spdlog::level::info);
            lcl::serve(host, port);
        }
    } catch (const lcl::Error& e) {
        std::cerr << nlohmann::json{{"error", e.code()}, {"detail", e.detail()}}.dump() << "\n";
        return 2;
    }
    return 0;
}
