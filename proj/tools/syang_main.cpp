#include "syang/cache.hpp"
#include "syang/induced.hpp"
#include "syang/json_io.hpp"
#include "syang/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace syang;

constexpr std::uint64_t kDefaultSeed = 12345;

struct CacheMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

GradingContext parse_ctx(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("--ctx expects M,N");
    return GradingContext(std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1)));
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return Json::parse(ss.str());
}

void emit(const Json& outputs, const std::string& out_path) {
    std::string text = canonical_dump(outputs);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot write " + out_path);
        out << text;
    }
}

/// Cache-aware execution: on a hit the stored outputs are served; with
/// no_cache the result is recomputed and compared against any stored record.
template <class Fn>
Json run_cached(const std::string& command, const Json& inputs, bool no_cache, Fn compute) {
    Json manifest{{"command", command}, {"inputs", inputs}, {"kernel", kKernelVersion}};
    ResultCache cache(ResultCache::default_dir());
    std::string key = ResultCache::key_of(manifest);
    auto hit = cache.lookup(key);
    if (hit && !no_cache) return hit->at("outputs");

    auto t0 = std::chrono::steady_clock::now();
    Json outputs = compute();
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    if (hit && no_cache) {
        if (canonical_dump(hit->at("outputs")) != canonical_dump(outputs))
            throw CacheMismatch("cache record " + key + " differs from recomputation");
        return outputs;
    }
    Json record{{"manifest", manifest},
                {"outputs", outputs},
                {"timings_ms", ms},
                {"kernel_version", kKernelVersion}};
    cache.store(key, record);
    return outputs;
}

std::vector<TensorWordItem> parse_gl_word(const std::string& s) {
    std::vector<TensorWordItem> word;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "v") {
            word.push_back({TensorWordItem::Kind::vector_rep, Rational(0)});
        } else if (item.rfind("c:", 0) == 0) {
            word.push_back({TensorWordItem::Kind::one_dim, Rational::parse(item.substr(2))});
        } else {
            throw std::invalid_argument("tensor word items are 'v' or 'c:<rational>'");
        }
    }
    if (word.empty()) throw std::invalid_argument("empty tensor word");
    return word;
}

GlWeight parse_weight(const std::string& s) {
    GlWeight w;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) w.mu.push_back(Rational::parse(item));
    return w;
}

std::vector<Rational> parse_rationals(const std::string& s) {
    std::vector<Rational> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(Rational::parse(item));
    return out;
}

Json maximal_vectors_json(const YModule& W) {
    auto mv = maximal_vectors(W);
    Json vecs = Json::array();
    for (const auto& hv : mv.vectors) {
        Json v = Json::array();
        for (const auto& x : hv.v) v.push_back(to_json(x));
        vecs.push_back(Json{{"vector", v}, {"weight", to_json(hv.weight)}});
    }
    return Json{{"count", mv.vectors.size()},
                {"annihilator_dim", mv.annihilator_dim},
                {"complete", mv.complete},
                {"vectors", vecs}};
}

int run(int argc, char** argv) {
    CLI::App app{"syang: exact computational kernel for the gl(M|N) super Yangian"};
    app.require_subcommand(1);

    std::string ctx_str = "1,1", out_path, module_path, weight_path, element_path;
    std::string gl_word = "v", target_str, alphas_str = "0", v0_str = "0,0", suite;
    std::vector<std::string> tensor_files;
    bool no_cache = false;
    int cutoff = 3, level_max = 3, hw_index = 0, levels = 0, samples = 200;
    std::uint64_t seed = kDefaultSeed;

    auto* c_straighten = app.add_subcommand("straighten", "normal-order an algebra element");
    c_straighten->add_option("element", element_path, "element JSON file")->required();
    c_straighten->add_option("--out", out_path);
    c_straighten->add_flag("--no-cache", no_cache);

    auto* c_eval = app.add_subcommand("eval-rep", "evaluation module of a gl irrep");
    c_eval->add_option("--ctx", ctx_str);
    c_eval->add_option("--gl-word", gl_word, "tensor word, e.g. v,v,c:1/2");
    c_eval->add_option("--target", target_str, "gl weight, e.g. 2,0 (default: word's top)");
    c_eval->add_option("--out", out_path);
    c_eval->add_flag("--no-cache", no_cache);

    auto* c_tensor = app.add_subcommand("tensor", "shifted tensor product of modules");
    c_tensor->add_option("modules", tensor_files, "module JSON files")->required();
    c_tensor->add_option("--alphas", alphas_str, "shifts, first must be 0")->required();
    c_tensor->add_option("--out", out_path);
    c_tensor->add_flag("--no-cache", no_cache);

    auto* c_irrep = app.add_subcommand("irrep", "irreducible quotient at a maximal vector");
    c_irrep->add_option("module", module_path)->required();
    c_irrep->add_option("--hw-index", hw_index, "which maximal vector (default 0)");
    c_irrep->add_option("--out", out_path);
    c_irrep->add_flag("--no-cache", no_cache);

    auto* c_hw = app.add_subcommand("hw", "maximal vectors and highest weights");
    c_hw->add_option("module", module_path)->required();
    c_hw->add_option("--out", out_path);
    c_hw->add_flag("--no-cache", no_cache);

    auto* c_fd = app.add_subcommand("check-fd", "finite-dimensionality verdict for a weight");
    c_fd->add_option("weight", weight_path)->required();
    c_fd->add_option("--out", out_path);
    c_fd->add_flag("--no-cache", no_cache);

    auto* c_ind = app.add_subcommand("induced", "degree-truncated induced module (experimental)");
    c_ind->add_option("--ctx", ctx_str);
    c_ind->add_option("--v0", v0_str, "scalar characters: even,odd");
    c_ind->add_option("--cutoff", cutoff, "maximal total degree (default 3)");
    c_ind->add_option("--levels", levels, "materialized mode levels (default cutoff+2)");
    c_ind->add_option("--out", out_path);
    c_ind->add_flag("--no-cache", no_cache);

    auto* c_verify = app.add_subcommand("verify", "run a property suite");
    c_verify->add_option("suite", suite, "pbw | relations | hopf | oracle")->required();
    c_verify->add_option("--ctx", ctx_str);
    c_verify->add_option("--seed", seed);
    c_verify->add_option("--level-max", level_max);
    c_verify->add_option("--samples", samples);
    c_verify->add_option("--module", module_path, "extra module file for the relations suite");

    CLI11_PARSE(app, argc, argv);

    if (*c_straighten) {
        Json in = read_json_file(element_path);
        Json outputs = run_cached("straighten", in, no_cache, [&]() {
            AlgebraElement x = algebra_element_from_json(in);
            StraightenEngine eng(x.ctx());
            AlgebraElement nf(x.ctx());
            for (const auto& [m, c] : x.terms()) nf += eng.straighten_word(m.expand()) * c;
            return to_json(nf);
        });
        emit(outputs, out_path);
        return 0;
    }

    if (*c_eval) {
        GradingContext ctx = parse_ctx(ctx_str);
        auto word = parse_gl_word(gl_word);
        Json inputs{{"ctx", to_json(ctx)}, {"gl_word", gl_word}, {"target", target_str}};
        Json outputs = run_cached("eval-rep", inputs, no_cache, [&]() {
            GlModule g;
            if (target_str.empty()) {
                GlModule W = word[0].kind == TensorWordItem::Kind::vector_rep
                                 ? vector_rep(ctx)
                                 : one_dim_rep(ctx, word[0].c);
                for (std::size_t i = 1; i < word.size(); ++i)
                    W = tensor(W, word[i].kind == TensorWordItem::Kind::vector_rep
                                      ? vector_rep(ctx)
                                      : one_dim_rep(ctx, word[i].c));
                auto hws = gl_highest_weight_vectors(W);
                if (hws.empty()) throw std::invalid_argument("no highest weight vector found");
                GlWeight top = hws.front().first;
                std::vector<Rational> vec = hws.front().second;
                for (const auto& [mu, v] : hws)
                    if (top < mu) { top = mu; vec = v; }
                g = cyclic_subquotient(W, vec);
            } else {
                g = build_irrep(ctx, word, parse_weight(target_str));
            }
            if (auto err = check_bracket_relations(g); !err.empty())
                throw std::logic_error("gl module failed validation: " + err);
            return to_json(evaluation_rep(g));
        });
        emit(outputs, out_path);
        return 0;
    }

    if (*c_tensor) {
        std::vector<Json> files;
        for (const auto& f : tensor_files) files.push_back(read_json_file(f));
        Json inputs{{"alphas", alphas_str}, {"modules", files}};
        Json outputs = run_cached("tensor", inputs, no_cache, [&]() {
            std::vector<YModule> mods;
            for (const auto& j : files) mods.push_back(y_module_from_json(j));
            auto alphas = parse_rationals(alphas_str);
            return to_json(shifted_tensor(mods, alphas));
        });
        emit(outputs, out_path);
        return 0;
    }

    if (*c_irrep) {
        Json in = read_json_file(module_path);
        Json inputs{{"module", in}, {"hw_index", hw_index}};
        Json outputs = run_cached("irrep", inputs, no_cache, [&]() {
            YModule W = y_module_from_json(in);
            auto mv = maximal_vectors(W);
            if (hw_index < 0 || hw_index >= static_cast<int>(mv.vectors.size()))
                throw std::invalid_argument("hw-index out of range; module has " +
                                            std::to_string(mv.vectors.size()) +
                                            " maximal vectors");
            int sub = 0;
            YModule Q = irreducible_quotient(W, mv.vectors[static_cast<std::size_t>(hw_index)], &sub);
            Json j = to_json(Q);
            j["maximal_submodule_dim"] = sub;
            return j;
        });
        emit(outputs, out_path);
        return 0;
    }

    if (*c_hw) {
        Json in = read_json_file(module_path);
        Json outputs = run_cached("hw", Json{{"module", in}}, no_cache, [&]() {
            YModule W = y_module_from_json(in);
            return maximal_vectors_json(W);
        });
        emit(outputs, out_path);
        return 0;
    }

    if (*c_fd) {
        Json in = read_json_file(weight_path);
        Json outputs = run_cached("check-fd", Json{{"weight", in}}, no_cache, [&]() {
            HighestWeight L = highest_weight_from_json(in);
            FdVerdict v = check_finite_dim(L);
            Json j = to_json(v);
            if (v.status == FdVerdict::Status::finite) {
                WeightFactorization f = factor_into_fundamentals(L, *v.data);
                j["factorization"] = to_json(f);
            }
            return j;
        });
        emit(outputs, out_path);
        if (outputs.at("status") == "unsupported-factorization") return 3;
        return 0;
    }

    if (*c_ind) {
        GradingContext ctx = parse_ctx(ctx_str);
        auto v0c = parse_rationals(v0_str);
        if (v0c.size() != 2) throw std::invalid_argument("--v0 expects even,odd");
        if (levels == 0) levels = cutoff + 2;
        Json inputs{{"ctx", to_json(ctx)}, {"v0", v0_str}, {"cutoff", cutoff}, {"levels", levels}};
        Json outputs = run_cached("induced", inputs, no_cache, [&]() {
            StraightenEngine eng(ctx);
            InducedV0 v0 = one_dimensional_v0(ctx, v0c[0], v0c[1]);
            auto st = induced_stabilized(eng, v0, cutoff, levels);
            Json j{{"experimental", true},
                   {"stabilized", st.stabilized},
                   {"cutoff", st.cutoff},
                   {"dim", st.module.dim},
                   {"quotient_dim", st.module.quotient_dim},
                   {"hw", to_json(st.module.hw)},
                   {"truncation_clean", st.module.truncation_clean}};
            return j;
        });
        emit(outputs, out_path);
        if (!outputs.at("stabilized").get<bool>())
            std::cerr << "warning: induced construction did not stabilize by cutoff " << cutoff
                      << "\n";
        return 0;
    }

    if (*c_verify) {
        GradingContext ctx = parse_ctx(ctx_str);
        std::vector<PropertyResult> results;
        if (suite == "pbw") {
            results = verify_pbw(ctx, seed, level_max, samples, samples);
        } else if (suite == "relations") {
            results = verify_relations(ctx, level_max);
            if (!module_path.empty()) {
                YModule W = y_module_from_json(read_json_file(module_path));
                for (auto& r : verify_relations_module(W, level_max, "file-module"))
                    results.push_back(r);
            }
        } else if (suite == "hopf") {
            results = verify_hopf(ctx, 3, 2);
        } else if (suite == "oracle") {
            results = verify_oracle(seed, 10);
        } else {
            throw std::invalid_argument("unknown suite " + suite);
        }
        bool all = true;
        for (const auto& r : results) {
            Json line{{"property", r.name}, {"status", r.pass ? "pass" : "fail"}};
            if (!r.pass) line["counterexample"] = r.detail;
            std::cout << line.dump() << "\n";
            all = all && r.pass;
        }
        return all ? 0 : 1;
    }

    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CacheMismatch& e) {
        std::cerr << "cache mismatch: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
