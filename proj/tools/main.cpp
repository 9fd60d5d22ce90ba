// flatbst command line: build/complete/serialize trees, verify tree files,
// search sorted key files through the virtual tree, and benchmark builders.
//
// Exit codes: 0 success (verify: all checks pass; search: key found),
// 1 failed checks or missing key, 2 unsorted input, 3 unreadable or
// malformed files, 64 bad flags.
#include <malloc.h>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "flatbst/builder.hpp"
#include "flatbst/completion.hpp"
#include "flatbst/implicit.hpp"
#include "flatbst/oracle.hpp"
#include "flatbst/parallel.hpp"
#include "flatbst/serialize.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_unsorted = 2;
constexpr int exit_io = 3;
constexpr int exit_usage = 64;

struct key_file {
    std::vector<std::int64_t> keys;
    std::vector<std::uint64_t> lines;  // 1-based source line per key
};

// One signed decimal key per line, LF or CRLF, blank lines ignored.
std::optional<key_file> read_keys(const std::string& path, std::string& err) {
    std::ifstream in(path);
    if (!in) {
        err = "cannot read " + path;
        return std::nullopt;
    }
    key_file kf;
    std::string line;
    std::uint64_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t b = line.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        std::size_t e = line.find_last_not_of(" \t") + 1;
        std::int64_t value = 0;
        const auto res = std::from_chars(line.data() + b, line.data() + e, value);
        if (res.ec != std::errc{} || res.ptr != line.data() + e) {
            err = path + ":" + std::to_string(lineno) + ": not an integer: " + line;
            return std::nullopt;
        }
        kf.keys.push_back(value);
        kf.lines.push_back(lineno);
    }
    return kf;
}

// Returns the 1-based line number of the first out-of-order key, 0 if sorted.
std::uint64_t first_unsorted_line(const key_file& kf) {
    for (std::size_t i = 1; i < kf.keys.size(); ++i) {
        if (kf.keys[i] < kf.keys[i - 1]) return kf.lines[i];
    }
    return 0;
}

// --threads wins over FLATBST_THREADS; both must be positive integers.
bool resolve_threads(unsigned flag_value, bool flag_given, unsigned& out,
                     std::string& err) {
    if (flag_given) {
        out = flag_value;
        return true;
    }
    if (const char* env = std::getenv("FLATBST_THREADS")) {
        unsigned v = 0;
        const auto res = std::from_chars(env, env + std::string(env).size(), v);
        if (res.ec != std::errc{} || *res.ptr != '\0' || v == 0) {
            err = "FLATBST_THREADS must be a positive integer, got \"" +
                  std::string(env) + "\"";
            return false;
        }
        out = v;
        return true;
    }
    out = 1;
    return true;
}

bool write_output(const std::string& path, const std::string& text,
                  std::string& err) {
    if (path.empty()) {
        std::cout << text;
        return true;
    }
    std::ofstream out(path);
    if (!out || !(out << text) || !out.flush()) {
        err = "cannot write " + path;
        return false;
    }
    return true;
}

const char* kind_name(flatbst::violation_kind k) {
    switch (k) {
        case flatbst::violation_kind::order: return "order";
        case flatbst::violation_kind::link: return "link";
        case flatbst::violation_kind::root: return "root";
        case flatbst::violation_kind::height: return "height";
        case flatbst::violation_kind::cycle: return "cycle";
    }
    return "?";
}

std::string report_text(const flatbst::validation_report& rep) {
    std::ostringstream out;
    const auto yn = [](bool v) { return v ? "true" : "false"; };
    out << "bst_order_ok " << yn(rep.bst_order_ok) << '\n'
        << "links_consistent " << yn(rep.links_consistent) << '\n'
        << "single_root " << yn(rep.single_root) << '\n'
        << "height_edges " << rep.height_edges << '\n'
        << "minimal_height_ok " << yn(rep.minimal_height_ok) << '\n'
        << "upper_levels_full " << yn(rep.upper_levels_full) << '\n';
    out << "level_profile";
    for (const std::uint64_t c : rep.levels) out << ' ' << c;
    out << '\n';
    out << "violations " << rep.violations.size() << '\n';
    for (const auto& [node, kind] : rep.violations) {
        out << "violation node=";
        if (node == flatbst::npos) {
            out << '-';
        } else {
            out << node;
        }
        out << " kind=" << kind_name(kind) << '\n';
    }
    return out.str();
}

std::int64_t median_ns(std::vector<std::int64_t> samples) {
    std::sort(samples.begin(), samples.end());
    const std::size_t r = samples.size();
    if (r % 2 == 1) return samples[r / 2];
    return (samples[r / 2 - 1] + samples[r / 2]) / 2;
}

struct build_args {
    std::uint64_t n = 0;
    bool n_given = false;
    std::string input;
    std::string output;
    std::string format = "json";
    unsigned threads = 1;
    bool threads_given = false;
    bool complete = false;
    bool no_parents = false;
    bool sort = false;
};

int run_build(const build_args& a) {
    if (a.n_given == !a.input.empty()) {
        std::cerr << "error: exactly one of --n and --input is required\n";
        return exit_usage;
    }
    std::string err;
    unsigned threads = 1;
    if (!resolve_threads(a.threads, a.threads_given, threads, err)) {
        std::cerr << "error: " << err << '\n';
        return exit_usage;
    }

    std::uint64_t n = a.n;
    std::vector<std::int64_t> keys;
    if (!a.input.empty()) {
        const auto kf = read_keys(a.input, err);
        if (!kf) {
            std::cerr << "error: " << err << '\n';
            return exit_io;
        }
        keys = kf->keys;
        if (a.sort) {
            std::sort(keys.begin(), keys.end());
        } else if (const std::uint64_t line = first_unsorted_line(*kf)) {
            std::cerr << "error: input not sorted at line " << line << '\n';
            return exit_unsorted;
        }
        n = keys.size();
    }

    flatbst::build_options opts{.store_parents = !a.no_parents};
    flatbst::tree_arrays tree = threads > 1
                                    ? flatbst::build_parallel(n, opts, threads)
                                    : flatbst::build(n, opts);
    if (a.complete) flatbst::make_complete(tree);

    std::string text;
    if (a.format == "json") {
        text = flatbst::to_json(tree) + "\n";
    } else if (a.format == "dot") {
        text = flatbst::to_dot(tree, keys);
    } else {
        text = flatbst::to_arrays_text(tree);
    }
    if (!write_output(a.output, text, err)) {
        std::cerr << "error: " << err << '\n';
        return exit_io;
    }
    return exit_ok;
}

int run_verify(const std::string& input) {
    std::ifstream in(input);
    if (!in) {
        std::cerr << "error: cannot read " << input << '\n';
        return exit_io;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    flatbst::tree_arrays tree;
    try {
        tree = flatbst::from_json(buf.str());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_io;
    }
    const flatbst::validation_report rep = flatbst::validate(tree);
    std::cout << report_text(rep);
    return rep.ok() ? exit_ok : exit_check_failed;
}

int run_search(const std::string& input, std::int64_t key) {
    std::string err;
    const auto kf = read_keys(input, err);
    if (!kf) {
        std::cerr << "error: " << err << '\n';
        return exit_io;
    }
    if (const std::uint64_t line = first_unsorted_line(*kf)) {
        std::cerr << "error: input not sorted at line " << line << '\n';
        return exit_unsorted;
    }
    const auto outcome = flatbst::search<std::int64_t>(kf->keys, key);
    if (outcome.found) {
        std::cout << "found " << outcome.index << " comparisons "
                  << outcome.comparisons << '\n';
        return exit_ok;
    }
    std::cout << "absent comparisons " << outcome.comparisons << '\n';
    return exit_check_failed;
}

struct bench_args {
    std::uint64_t n = 0;
    std::string algo = "both";
    unsigned threads = 1;
    bool threads_given = false;
    unsigned repeat = 5;
};

int run_bench(const bench_args& a) {
    std::string err;
    unsigned threads = 1;
    if (!resolve_threads(a.threads, a.threads_given, threads, err)) {
        std::cerr << "error: " << err << '\n';
        return exit_usage;
    }
    // Keep repeated builds on the reusable heap so the medians compare the
    // algorithms, not kernel page-zeroing of fresh mmaps.
    mallopt(M_MMAP_THRESHOLD, 1 << 30);
    mallopt(M_TRIM_THRESHOLD, 1 << 30);
    const flatbst::build_options opts;

    struct row {
        const char* name;
        unsigned threads;
    };
    std::vector<row> rows;
    if (a.algo == "new" || a.algo == "both") rows.push_back({"new", threads});
    if (a.algo == "halving" || a.algo == "both") rows.push_back({"halving", 1u});

    const auto run_algo = [&](const row& r) -> flatbst::tree_arrays {
        if (r.name == std::string("halving")) return flatbst::build_halving(a.n, opts);
        if (r.threads > 1) return flatbst::build_parallel(a.n, opts, r.threads);
        return flatbst::build(a.n, opts);
    };

    std::cout << "algo,n,threads,repeat,median_ns\n";
    for (const row& r : rows) {
        // Output check first, so the timed loop is pure construction.
        const flatbst::tree_arrays tree = run_algo(r);
        if (!flatbst::validate(tree).ok()) {
            std::cerr << "error: " << r.name << " produced an invalid tree\n";
            return exit_check_failed;
        }
        if (r.name == std::string("new") && r.threads > 1 &&
            !(tree == flatbst::build(a.n, opts))) {
            std::cerr << "error: parallel build differs from sequential\n";
            return exit_check_failed;
        }

        std::vector<std::int64_t> samples;
        samples.reserve(a.repeat);
        volatile std::uint64_t sink = 0;
        for (unsigned i = 0; i < a.repeat; ++i) {
            const auto t0 = std::chrono::steady_clock::now();
            const flatbst::tree_arrays built = run_algo(r);
            const auto t1 = std::chrono::steady_clock::now();
            sink = sink + built.root;
            samples.push_back(
                std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0)
                    .count());
        }
        (void)sink;
        std::cout << r.name << ',' << a.n << ',' << r.threads << ','
                  << a.repeat << ',' << median_ns(std::move(samples)) << '\n';
    }
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"flat array binary search trees"};
    app.require_subcommand(1);

    build_args b;
    auto* build = app.add_subcommand(
        "build", "Build a minimal-height tree and serialize it");
    auto* n_opt = build->add_option("--n", b.n, "node count (synthetic ranks 0..n-1)");
    build->add_option("--input", b.input, "sorted key file, one key per line");
    build->add_option("--output", b.output, "output path (default: stdout)");
    build->add_option("--format", b.format, "json|dot|arrays")
        ->check(CLI::IsMember({"json", "dot", "arrays"}))
        ->capture_default_str();
    auto* threads_opt =
        build->add_option("--threads", b.threads, "worker count for the index pass")
            ->check(CLI::PositiveNumber);
    build->add_flag("--complete", b.complete, "rewrite into complete form");
    build->add_flag("--no-parents", b.no_parents, "omit the parent array");
    build->add_flag("--sort", b.sort, "sort the input keys first");

    std::string verify_input;
    auto* verify = app.add_subcommand("verify", "Validate a tree JSON file");
    verify->add_option("--input", verify_input, "tree JSON file")->required();

    std::string search_input;
    std::int64_t search_key = 0;
    auto* search = app.add_subcommand(
        "search", "Search a sorted key file via the virtual tree");
    search->add_option("--input", search_input, "sorted key file")->required();
    search->add_option("--key", search_key, "key to look up")->required();
    search->footer(
        "The searched tree is virtual: nothing is built, navigation is index\n"
        "arithmetic over the file. Inserting or deleting a key is simply an\n"
        "edit of the sorted file itself.");

    bench_args bn;
    auto* bench = app.add_subcommand("bench", "Time tree construction");
    bench->add_option("--n", bn.n, "node count")
        ->required()
        ->check(CLI::PositiveNumber);
    bench->add_option("--algo", bn.algo, "new|halving|both")
        ->check(CLI::IsMember({"new", "halving", "both"}))
        ->capture_default_str();
    auto* bench_threads =
        bench->add_option("--threads", bn.threads, "worker count for algo new")
            ->check(CLI::PositiveNumber);
    bench->add_option("--repeat", bn.repeat, "timing repetitions")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    b.n_given = n_opt->count() > 0;
    b.threads_given = threads_opt->count() > 0;
    bn.threads_given = bench_threads->count() > 0;

    try {
        if (build->parsed()) return run_build(b);
        if (verify->parsed()) return run_verify(verify_input);
        if (search->parsed()) return run_search(search_input, search_key);
        if (bench->parsed()) return run_bench(bn);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_check_failed;
    }
    return exit_usage;
}
