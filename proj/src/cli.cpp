#include "schubvan/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "schubvan/decide.hpp"
#include "schubvan/oracle.hpp"

namespace schubvan {

namespace {

using json = nlohmann::ordered_json;

struct Config {
    std::string type;
    int rank = 0;
    std::string words;
    std::string against;
    double epsilon = 1e-9;
    int rounds = 0;
    std::optional<std::uint64_t> seed;
    std::string arithmetic = "exact";
    std::string output = "text";
    bool lr = false;
    std::string lambda, mu, nu;
    std::string batch;
    std::string replay;
    bool oracle_check = false;
    int jobs = 1;
};

std::uint64_t resolve_seed(const Config& cfg) {
    if (cfg.seed) return *cfg.seed;
    if (const char* env = std::getenv(kSeedEnv)) {
        try {
            std::size_t used = 0;
            const std::string text(env);
            const unsigned long long v = std::stoull(text, &used);
            if (used == text.size()) return v;
        } catch (const std::exception&) {
        }
        throw InputError(std::string(kSeedEnv) + " is not an unsigned integer");
    }
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

// Independent stream per (seed, index), so batch lines do not depend on
// each other or on scheduling.
Rng stream_for(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return Rng(seq);
}

Arithmetic parse_arithmetic(const std::string& text) {
    if (text == "exact") return Arithmetic::Exact;
    if (text == "modular") return Arithmetic::Modular;
    throw InputError("arithmetic must be 'exact' or 'modular'");
}

std::string partition_text(const Partition& p) {
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "," : "") + std::to_string(p[i]);
    return out;
}

json witness_json(const Witness& w) {
    json alpha = json::array();
    for (const auto& block : w.alpha) {
        json row = json::array();
        for (const auto& v : block) row.push_back(v.get_si());
        alpha.push_back(row);
    }
    json x = json::array();
    for (const auto& v : w.x) x.push_back(v.get_si());
    json out;
    out["alpha"] = alpha;
    out["x"] = x;
    out["det"] = w.det.get_str();
    out["modulus"] = w.modulus ? json(w.modulus) : json(nullptr);
    return out;
}

Witness witness_from_json(const json& j) {
    Witness w;
    for (const auto& block : j.at("alpha")) {
        std::vector<BigInt> row;
        for (const auto& v : block) row.emplace_back(v.get<long>());
        w.alpha.push_back(std::move(row));
    }
    for (const auto& v : j.at("x")) w.x.emplace_back(v.get<long>());
    w.det = BigInt(j.at("det").get<std::string>());
    if (j.contains("modulus") && !j.at("modulus").is_null()) w.modulus = j.at("modulus").get<std::uint64_t>();
    return w;
}

json words_json(const Instance& inst) {
    json out = json::array();
    for (const auto& w : inst.words) out.push_back(w.to_string());
    return out;
}

json decision_json(const Instance& inst, const Decision& d, const Config& cfg, std::uint64_t seed,
                   int rounds_budget) {
    json out;
    out["schema"] = kDecisionSchema;
    out["type"] = std::string(1, to_char(inst.type));
    out["rank"] = inst.rank;
    out["words"] = words_json(inst);
    out["decision"] = to_string(d.verdict);
    out["certain"] = d.certain;
    out["rule"] = d.rule;
    out["rounds"] = d.rounds_run;
    out["max_rounds"] = rounds_budget;
    out["p"] = d.p;
    out["epsilon"] = cfg.epsilon;
    out["seed"] = seed;
    out["arithmetic"] = cfg.arithmetic;
    out["witness"] = d.witness ? witness_json(*d.witness) : json(nullptr);
    return out;
}

std::string decision_text(const json& rec) {
    std::ostringstream os;
    os << "decision: " << rec["decision"].get<std::string>()
       << (rec["certain"].get<bool>() ? " (certain)" : " (probabilistic)") << '\n';
    os << "instance: " << rec["type"].get<std::string>() << rec["rank"].get<int>();
    for (const auto& w : rec["words"]) os << " [" << w.get<std::string>() << ']';
    os << '\n';
    os << "rule: " << rec["rule"].get<std::string>() << ", rounds: " << rec["rounds"].get<int>() << "/"
       << rec["max_rounds"].get<int>() << ", p: " << rec["p"].get<long>()
       << ", seed: " << rec["seed"].get<std::uint64_t>() << '\n';
    if (!rec["witness"].is_null()) {
        os << "witness det: " << rec["witness"]["det"].get<std::string>();
        if (!rec["witness"]["modulus"].is_null())
            os << " (mod " << rec["witness"]["modulus"].get<std::uint64_t>() << ")";
        os << '\n';
    }
    return os.str();
}

Instance instance_from_config(const Config& cfg) {
    if (cfg.type.empty()) throw InputError("--type is required");
    if (cfg.rank < 1) throw InputError("--rank is required and must be >= 1");
    const LieType type = parse_lie_type(cfg.type);
    if (cfg.words.empty()) throw InputError("--words is required");
    Instance inst = parse_instance(type, cfg.rank, cfg.words);
    if (!cfg.against.empty()) {
        const WeylElement w = parse_word(cfg.against, type, cfg.rank);
        inst.words.push_back(compose(long_word(type, cfg.rank), w));
    }
    return inst;
}

PartitionTriple triple_from_config(const Config& cfg) {
    return {parse_partition(cfg.lambda), parse_partition(cfg.mu), parse_partition(cfg.nu)};
}

int budget(const Config& cfg) { return cfg.rounds > 0 ? cfg.rounds : rounds_for_epsilon(cfg.epsilon); }

json decide_record(const Instance& inst, const Config& cfg, std::uint64_t seed, Rng& rng) {
    DecideOptions opts;
    opts.arithmetic = parse_arithmetic(cfg.arithmetic);
    opts.rounds = cfg.rounds;
    const Decision d = vanishing(inst, cfg.epsilon, rng, opts);
    return decision_json(inst, d, cfg, seed, budget(cfg));
}

void emit(const json& rec, const Config& cfg, std::ostream& out) {
    if (cfg.output == "json") out << rec.dump() << '\n';
    else out << decision_text(rec);
}

int run_replay(const Config& cfg, std::ostream& out) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (cfg.replay != "-") {
        file.open(cfg.replay);
        if (!file) throw InputError("cannot read witness file '" + cfg.replay + "'");
        in = &file;
    }
    json rec;
    try {
        rec = json::parse(*in);
    } catch (const json::exception& e) {
        throw InputError(std::string("witness file is not valid JSON: ") + e.what());
    }
    try {
        if (rec.at("witness").is_null()) throw InputError("record carries no witness");
        const LieType type = parse_lie_type(rec.at("type").get<std::string>());
        const int rank = rec.at("rank").get<int>();
        std::vector<WeylElement> words;
        for (const auto& w : rec.at("words")) words.push_back(parse_word(w.get<std::string>(), type, rank));
        const Instance inst(type, rank, std::move(words));
        const Witness witness = witness_from_json(rec.at("witness"));
        const BigInt det = replay_witness(inst, witness);
        const bool ok = verify_witness(inst, witness);
        json result;
        result["schema"] = kReplaySchema;
        result["det"] = det.get_str();
        result["recorded"] = witness.det.get_str();
        result["modulus"] = witness.modulus ? json(witness.modulus) : json(nullptr);
        result["nonzero"] = det != 0;
        result["matches"] = ok;
        if (cfg.output == "json") out << result.dump() << '\n';
        else out << "replayed det: " << det.get_str() << (ok ? " (matches record)" : " (MISMATCH)") << '\n';
        return ok ? 0 : 1;
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed witness record: ") + e.what());
    }
}

int run_oracle_check(const Config& cfg, std::ostream& out) {
    const std::uint64_t seed = resolve_seed(cfg);
    Rng rng = stream_for(seed, 0);
    Instance inst = cfg.lr ? lr_instance(triple_from_config(cfg), parse_lie_type(cfg.type))
                           : instance_from_config(cfg);
    json rec = decide_record(inst, cfg, seed, rng);
    std::string oracle;
    bool oracle_zero = false;
    if (cfg.lr) {
        const auto t = triple_from_config(cfg);
        if (inst.type == LieType::A) {
            oracle = "schur";
            oracle_zero = schur_lr_coeff(t.lambda, t.mu, t.nu) == 0;
        } else {
            oracle = "qschur";
            oracle_zero = qschur_coeff(t.lambda, t.mu, t.nu) == 0;
        }
    } else if (inst.type == LieType::A && inst.k() == 3) {
        oracle = "schubert";
        const auto w0 = long_word(LieType::A, inst.rank);
        oracle_zero = schubert_coeff_A(inst.words[0], inst.words[1], compose(w0, inst.words[2])) == 0;
    } else {
        oracle = "symbolic";
        oracle_zero = symbolic_vanishing(inst);
    }
    const bool zero = rec["decision"] == "zero";
    json result;
    result["schema"] = kOracleSchema;
    result["decision"] = rec["decision"];
    result["certain"] = rec["certain"];
    result["oracle"] = oracle;
    result["oracle_decision"] = oracle_zero ? "zero" : "positive";
    result["agree"] = zero == oracle_zero;
    result["seed"] = seed;
    if (cfg.output == "json") out << result.dump() << '\n';
    else
        out << "decision: " << rec["decision"].get<std::string>() << ", " << oracle
            << " oracle: " << result["oracle_decision"].get<std::string>()
            << (zero == oracle_zero ? " (agree)" : " (DISAGREE)") << '\n';
    return zero == oracle_zero ? 0 : 1;
}

// One batch line: "TYPE RANK; w1; w2; ...".
Instance parse_batch_line(const std::string& line) {
    const auto semi = line.find(';');
    if (semi == std::string::npos) throw InputError("expected 'TYPE RANK; w1; ...; wk'");
    std::istringstream head(line.substr(0, semi));
    std::string type, extra;
    int rank = 0;
    if (!(head >> type >> rank) || (head >> extra)) throw InputError("expected 'TYPE RANK' before the first ';'");
    return parse_instance(parse_lie_type(type), rank, line.substr(semi + 1));
}

int run_batch(const Config& cfg, std::ostream& out) {
    std::ifstream file(cfg.batch);
    if (!file) throw InputError("cannot read batch file '" + cfg.batch + "'");
    const std::uint64_t seed = resolve_seed(cfg);
    std::vector<std::pair<int, std::string>> lines;
    std::string line;
    for (int number = 1; std::getline(file, line); ++number) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        lines.emplace_back(number, line);
    }
    auto decide_line = [&](std::size_t idx) {
        const auto& [number, text] = lines[idx];
        json rec;
        try {
            Rng rng = stream_for(seed, static_cast<std::uint64_t>(number));
            rec = decide_record(parse_batch_line(text), cfg, seed, rng);
        } catch (const std::exception& e) {
            rec = json();
            rec["schema"] = kDecisionSchema;
            rec["error"] = e.what();
        }
        json framed;
        framed["schema"] = rec["schema"];
        framed["line"] = number;
        for (auto it = rec.begin(); it != rec.end(); ++it)
            if (it.key() != "schema") framed[it.key()] = it.value();
        return framed;
    };
    std::vector<json> records(lines.size());
    const int jobs = std::max(1, cfg.jobs);
    if (jobs == 1) {
        for (std::size_t i = 0; i < lines.size(); ++i) records[i] = decide_line(i);
    } else {
        std::vector<std::future<void>> workers;
        std::atomic<std::size_t> next{0};
        for (int t = 0; t < jobs; ++t)
            workers.push_back(std::async(std::launch::async, [&] {
                for (std::size_t i = next++; i < lines.size(); i = next++) records[i] = decide_line(i);
            }));
        for (auto& w : workers) w.get();
    }
    for (const auto& rec : records) {
        if (cfg.output == "json") {
            out << rec.dump() << '\n';
        } else if (rec.contains("error")) {
            out << "line " << rec["line"].get<int>() << ": error: " << rec["error"].get<std::string>() << '\n';
        } else {
            out << "line " << rec["line"].get<int>() << ": " << rec["decision"].get<std::string>()
                << (rec["certain"].get<bool>() ? " (certain, " : " (probabilistic, ")
                << rec["rule"].get<std::string>() << ", " << rec["rounds"].get<int>() << " rounds)\n";
        }
    }
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Config cfg;
    CLI::App app{"Decide whether a Schubert structure constant c(u_1, ..., u_k) vanishes", "schubvan"};
    app.add_option("--type", cfg.type, "Lie type: A, B, C or D");
    app.add_option("--rank", cfg.rank, "Rank n (words have n entries)");
    app.add_option("--words", cfg.words, "Words u_1;...;u_k, entries comma-separated, bars as minus signs");
    app.add_option("--against", cfg.against, "Append w0*w, so the query becomes c_{u,v}^w");
    app.add_option("--epsilon", cfg.epsilon, "Error bound for a 'zero' verdict")->capture_default_str();
    app.add_option("--rounds", cfg.rounds, "Fixed number of rounds (overrides --epsilon)");
    app.add_option("--seed", cfg.seed, std::string("Random seed (default: $") + kSeedEnv + " or entropy)");
    app.add_option("--arithmetic", cfg.arithmetic, "exact or modular")
        ->check(CLI::IsMember({"exact", "modular"}))
        ->capture_default_str();
    app.add_option("--output", cfg.output, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_flag("--lr", cfg.lr, "Littlewood-Richardson mode (--lambda, --mu, --nu)");
    app.add_option("--lambda", cfg.lambda, "Partition, e.g. 3,1");
    app.add_option("--mu", cfg.mu, "Partition");
    app.add_option("--nu", cfg.nu, "Partition");
    app.add_option("--batch", cfg.batch, "File with one 'TYPE RANK; w1; ...; wk' per line");
    app.add_option("--jobs", cfg.jobs, "Worker threads for --batch")->capture_default_str();
    app.add_option("--replay-witness", cfg.replay, "Re-evaluate the witness in a JSON record ('-' = stdin)");
    app.add_flag("--oracle-check", cfg.oracle_check, "Also run an independent oracle and compare");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (!cfg.replay.empty()) return run_replay(cfg, out);
        if (cfg.rounds <= 0) rounds_for_epsilon(cfg.epsilon);
        if (!cfg.batch.empty()) return run_batch(cfg, out);
        if (cfg.oracle_check) return run_oracle_check(cfg, out);
        const std::uint64_t seed = resolve_seed(cfg);
        Rng rng = stream_for(seed, 0);
        if (cfg.lr) {
            if (cfg.type.empty()) throw InputError("--type is required");
            const LieType type = parse_lie_type(cfg.type);
            const PartitionTriple t = triple_from_config(cfg);
            json rec = decide_record(lr_instance(t, type), cfg, seed, rng);
            json framed;
            framed["schema"] = rec["schema"];
            framed["mode"] = "lr";
            framed["lambda"] = partition_text(t.lambda);
            framed["mu"] = partition_text(t.mu);
            framed["nu"] = partition_text(t.nu);
            for (auto it = rec.begin(); it != rec.end(); ++it)
                if (it.key() != "schema") framed[it.key()] = it.value();
            emit(framed, cfg, out);
            return 0;
        }
        json rec = decide_record(instance_from_config(cfg), cfg, seed, rng);
        emit(rec, cfg, out);
        return 0;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace schubvan
