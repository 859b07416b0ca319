#include <vgraph/vgraph.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

// Bad argv semantics that CLI11 cannot see (wrong tuple arity and the like).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    std::string instance = "moser";
    int radius = 2;
    std::string center;
    std::string at;
    std::string weights;
    int modulus = 4;
    int role = -1;
    std::string in_path;
    std::string out_path;
    std::string format = "json";
    int threads = 1;
    std::size_t max_vertices = 2000;
    bool verbose = false;
};

class Stopwatch {
public:
    explicit Stopwatch(bool enabled) : enabled_(enabled), start_(std::chrono::steady_clock::now()) {}
    ~Stopwatch() {
        if (!enabled_) return;
        const auto elapsed = std::chrono::steady_clock::now() - start_;
        std::cerr << "elapsed "
                  << std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count() << " ms\n";
    }

private:
    bool enabled_;
    std::chrono::steady_clock::time_point start_;
};

std::vector<int> parse_tuple(const std::string& text, const char* what) {
    std::vector<int> vals;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string item = text.substr(pos, comma - pos);
        try {
            std::size_t used = 0;
            vals.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError(std::string(what) + ": '" + item + "' is not an integer");
        }
        pos = comma + 1;
    }
    return vals;
}

vgraph::LatticePoint point_arg(const vgraph::VectorGraphInstance& inst, const std::string& text,
                               const char* what) {
    if (text.empty()) return vgraph::LatticePoint::zero(inst.rank);
    std::vector<int> vals = parse_tuple(text, what);
    if (static_cast<int>(vals.size()) != inst.rank) {
        throw UsageError(std::string(what) + " must have " + std::to_string(inst.rank) + " coordinates");
    }
    return vgraph::LatticePoint(std::move(vals));
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw vgraph::Error("cannot open " + path + " for writing");
    out << text;
    if (!out) throw vgraph::Error("writing " + path + " failed");
}

std::string render(const vgraph::FiniteGraph& g, const std::string& format,
                   const std::vector<int>* colors = nullptr, int num_colors = 0) {
    if (format == "json") return vgraph::to_json(g, colors, num_colors);
    if (format == "dimacs") return vgraph::to_dimacs(g);
    if (format == "dot") return vgraph::to_dot(g, colors);
    if (format == "svg") return vgraph::to_svg(g, colors);
    throw UsageError("unknown format: " + format);
}

vgraph::FiniteGraph load_or_generate(const Config& cfg) {
    if (!cfg.in_path.empty()) {
        std::ifstream in(cfg.in_path, std::ios::binary);
        if (!in) throw vgraph::Error("cannot open " + cfg.in_path);
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        return vgraph::from_json(text).graph;
    }
    const vgraph::VectorGraphInstance inst = vgraph::instance_by_name(cfg.instance);
    return vgraph::ball(inst, point_arg(inst, cfg.center, "--center"), cfg.radius);
}

int run_ball(const Config& cfg) {
    Stopwatch timer(cfg.verbose);
    const vgraph::VectorGraphInstance inst = vgraph::instance_by_name(cfg.instance);
    const vgraph::LatticePoint center = point_arg(inst, cfg.center, "--center");
    const vgraph::FiniteGraph g = vgraph::ball(inst, center, cfg.radius);
    std::cout << "ball radius " << cfg.radius << " around " << vgraph::to_string(center) << ": " << g.n()
              << " vertices, " << g.edges.size() << " edges\n";
    if (!cfg.out_path.empty()) write_text(cfg.out_path, render(g, cfg.format));
    return 0;
}

int run_color_apply(const Config& cfg) {
    Stopwatch timer(cfg.verbose);
    const vgraph::VectorGraphInstance inst = vgraph::instance_by_name(cfg.instance);
    if (cfg.weights.empty()) throw UsageError("--weights is required");
    std::vector<int> weights = parse_tuple(cfg.weights, "--weights");
    if (static_cast<int>(weights.size()) != inst.rank) {
        throw UsageError("--weights must have " + std::to_string(inst.rank) + " entries");
    }
    const vgraph::LinearColoring col(cfg.modulus, weights);
    const vgraph::FiniteGraph g = vgraph::ball(inst, point_arg(inst, cfg.center, "--center"), cfg.radius);
    const auto conflicts = vgraph::verify_on_graph(col, g);
    std::cout << conflicts.size() << " conflicts\n";
    if (!cfg.out_path.empty()) {
        std::vector<int> colors;
        colors.reserve(g.vertices.size());
        for (const auto& v : g.vertices) colors.push_back(vgraph::eval_linear(col, v));
        write_text(cfg.out_path, render(g, cfg.format, &colors, cfg.modulus));
    }
    return conflicts.empty() ? 0 : 1;
}

int run_color_search(const Config& cfg) {
    Stopwatch timer(cfg.verbose);
    const vgraph::VectorGraphInstance inst = vgraph::instance_by_name(cfg.instance);
    const auto found = vgraph::search_linear(inst, cfg.modulus, cfg.threads);
    std::cout << found.size() << " proper linear colorings\n";
    for (const auto& w : found) {
        std::cout << "  (";
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) std::cout << ",";
            std::cout << w[i];
        }
        std::cout << ")\n";
    }
    return 0;
}

int run_chromatic(const Config& cfg) {
    Stopwatch timer(cfg.verbose);
    const vgraph::FiniteGraph g = load_or_generate(cfg);
    vgraph::SolverOptions opts;
    opts.max_vertices = cfg.max_vertices;
    const vgraph::ColoringResult res = vgraph::chromatic_number(g, opts);
    std::cout << "chi = " << res.num_colors << "\n";
    if (!cfg.out_path.empty()) write_text(cfg.out_path, render(g, cfg.format, &res.assignment, res.num_colors));
    return 0;
}

int run_spindle(const Config& cfg) {
    Stopwatch timer(cfg.verbose);
    const vgraph::VectorGraphInstance inst = vgraph::instance_by_name(cfg.instance);
    const vgraph::LatticePoint at = point_arg(inst, cfg.at, "--at");
    if (cfg.role < -1 || cfg.role > 6) throw UsageError("--role must be in 0..6");
    if (!cfg.out_path.empty() && cfg.role == -1) throw UsageError("--out requires --role");
    std::vector<int> roles;
    if (cfg.role >= 0) {
        roles.push_back(cfg.role);
    } else {
        for (int k = 0; k < 7; ++k) roles.push_back(k);
    }
    std::cout << "anchor " << vgraph::to_string(at) << "\n";
    bool all_pass = true;
    for (int k : roles) {
        const vgraph::SpindleEmbedding s = vgraph::spindle_at(at, k);
        const vgraph::SpindleCheck check = vgraph::verify_spindle(s);
        if (check.pass) {
            std::cout << "role " << k << ": pass\n";
        } else {
            std::cout << "role " << k << ": fail (" << check.failure << ")\n";
            all_pass = false;
        }
        if (!cfg.out_path.empty()) {
            const vgraph::FiniteGraph g = vgraph::induced_subgraph(inst, s.points);
            write_text(cfg.out_path, render(g, cfg.format));
        }
    }
    return all_pass ? 0 : 1;
}

int run_verify(const Config& cfg) {
    Stopwatch timer(cfg.verbose);
    const vgraph::VectorGraphInstance inst = vgraph::instance_by_name(cfg.instance);
    const vgraph::InstanceReport report = vgraph::validate_instance(inst);
    bool ok = report.ok;
    if (report.ok) {
        std::cout << "instance " << inst.name << ": ok\n";
    } else {
        std::cout << "instance " << inst.name << ": FAIL\n";
        for (const auto& p : report.problems) std::cout << "  - " << p << "\n";
    }

    const int expected = 2 * static_cast<int>(inst.connections.size());
    const vgraph::FiniteGraph g = vgraph::ball(inst, vgraph::LatticePoint::zero(inst.rank), cfg.radius);
    const auto adj = g.adjacency();
    // Vertices within radius - 1 see their whole neighborhood inside the ball.
    const vgraph::FiniteGraph interior =
        cfg.radius > 0 ? vgraph::ball(inst, vgraph::LatticePoint::zero(inst.rank), cfg.radius - 1)
                       : vgraph::FiniteGraph{};
    bool degrees_ok = true;
    for (const auto& v : interior.vertices) {
        const auto it = std::lower_bound(g.vertices.begin(), g.vertices.end(), v);
        const auto idx = static_cast<std::size_t>(it - g.vertices.begin());
        if (static_cast<int>(adj[idx].size()) != expected) {
            std::cout << "interior degree at " << vgraph::to_string(v) << " is " << adj[idx].size()
                      << ", expected " << expected << "\n";
            degrees_ok = false;
        }
    }
    if (degrees_ok) {
        std::cout << "interior degrees at radius " << cfg.radius << ": all " << expected << "\n";
    }
    return ok && degrees_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    Config cfg;
    CLI::App app{"vector graph toolkit: exact unit-distance graphs on integer lattices"};
    app.require_subcommand(1);

    const auto add_instance = [&](CLI::App* sub) {
        sub->add_option("-i,--instance", cfg.instance, "instance name (moser | zsquare)")
            ->capture_default_str();
    };
    const auto add_output = [&](CLI::App* sub) {
        sub->add_option("-o,--out", cfg.out_path, "write the graph to this file");
        sub->add_option("-f,--format", cfg.format, "output format (json | dimacs | dot | svg)")
            ->capture_default_str();
    };
    const auto add_verbose = [&](CLI::App* sub) {
        sub->add_flag("-v,--verbose", cfg.verbose, "print timings to stderr");
    };

    CLI::App* ball = app.add_subcommand("ball", "generate a radius-r ball and export it");
    add_instance(ball);
    ball->add_option("-r,--radius", cfg.radius, "ball radius")->capture_default_str();
    ball->add_option("-c,--center", cfg.center, "center lattice point, comma-separated");
    add_output(ball);
    add_verbose(ball);

    CLI::App* color = app.add_subcommand("color", "linear colorings");
    color->require_subcommand(1);
    CLI::App* apply = color->add_subcommand("apply", "apply w . v mod m over a ball and count conflicts");
    add_instance(apply);
    apply->add_option("-w,--weights", cfg.weights, "weight tuple, comma-separated");
    apply->add_option("-m,--modulus", cfg.modulus, "modulus")->capture_default_str();
    apply->add_option("-r,--radius", cfg.radius, "ball radius")->capture_default_str();
    apply->add_option("-c,--center", cfg.center, "center lattice point, comma-separated");
    add_output(apply);
    add_verbose(apply);
    CLI::App* search = color->add_subcommand("search", "sweep all weight tuples for a modulus");
    add_instance(search);
    search->add_option("-m,--modulus", cfg.modulus, "modulus")->capture_default_str();
    search->add_option("-t,--threads", cfg.threads, "worker threads")
        ->envname("VGRAPH_THREADS")
        ->capture_default_str();
    add_verbose(search);

    CLI::App* chromatic = app.add_subcommand("chromatic", "exact chromatic number of a ball or a loaded graph");
    add_instance(chromatic);
    chromatic->add_option("-r,--radius", cfg.radius, "ball radius")->capture_default_str();
    chromatic->add_option("-c,--center", cfg.center, "center lattice point, comma-separated");
    chromatic->add_option("--in", cfg.in_path, "load the graph from this JSON file instead");
    chromatic->add_option("--max-vertices", cfg.max_vertices, "exact solve cap")->capture_default_str();
    add_output(chromatic);
    add_verbose(chromatic);

    CLI::App* spindle = app.add_subcommand("spindle", "place and verify spindles at a vertex");
    add_instance(spindle);
    spindle->add_option("-a,--at", cfg.at, "anchor lattice point, comma-separated");
    spindle->add_option("--role", cfg.role, "anchor role 0..6 (default: all roles)");
    add_output(spindle);
    add_verbose(spindle);

    CLI::App* verify = app.add_subcommand("verify", "validate an instance and its degree regularity");
    add_instance(verify);
    verify->add_option("-r,--radius", cfg.radius, "audit ball radius")->default_val(3);
    add_verbose(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (ball->parsed()) return run_ball(cfg);
        if (apply->parsed()) return run_color_apply(cfg);
        if (search->parsed()) return run_color_search(cfg);
        if (chromatic->parsed()) return run_chromatic(cfg);
        if (spindle->parsed()) return run_spindle(cfg);
        if (verify->parsed()) return run_verify(cfg);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const vgraph::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
