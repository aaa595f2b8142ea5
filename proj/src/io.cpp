#include "bellforge/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace bellforge {

using nlohmann::json;

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

json complex_to_json(const Complex &c) { return json::array({c.real(), c.imag()}); }

Complex complex_from_json(const json &j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ParseError("expected [re, im] number pair");
    return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

StateFile parse_state_file(const std::string &json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error &e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("kind")) throw ParseError("missing \"kind\" field");
    const std::string kind = j["kind"].get<std::string>();

    StateFile sf;
    if (j.contains("label")) sf.label = j["label"].get<std::string>();

    if (kind == "pure") {
        if (!j.contains("amplitudes") || !j["amplitudes"].is_array() || j["amplitudes"].size() != 4)
            throw ParseError("pure state needs an \"amplitudes\" array of 4 [re, im] pairs");
        PureState2Q s;
        for (int i = 0; i < 4; ++i) s.c[static_cast<size_t>(i)] = complex_from_json(j["amplitudes"][i]);
        if (!s.is_normalized(1e-9))
            throw InvalidStateError("pure state is not normalized (|c|^2 = " +
                                    format_double(s.norm_sq()) + ")");
        sf.state = s;
    } else if (kind == "mixed") {
        if (!j.contains("matrix") || !j["matrix"].is_array() || j["matrix"].size() != 4)
            throw ParseError("mixed state needs a \"matrix\" field of 4 rows");
        CMatrix m(4);
        for (int i = 0; i < 4; ++i) {
            if (!j["matrix"][i].is_array() || j["matrix"][i].size() != 4)
                throw ParseError("matrix rows must hold 4 [re, im] pairs");
            for (int k = 0; k < 4; ++k) m.at(i, k) = complex_from_json(j["matrix"][i][k]);
        }
        Density2Q rho{m};
        if (!rho.is_valid()) throw InvalidStateError("matrix is not Hermitian PSD");
        if (!rho.is_normalized(1e-9)) throw InvalidStateError("density matrix trace is not 1");
        sf.state = rho;
    } else {
        throw ParseError("unknown kind \"" + kind + "\" (expected \"pure\" or \"mixed\")");
    }
    return sf;
}

StateFile load_state_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_state_file(ss.str());
}

std::string serialize_state_file(const StateFile &sf) {
    // Numbers are serialized as decimal strings with 17 significant digits so
    // the round trip is bit-exact; nlohmann would print shortest-round-trip
    // forms, which also round-trip, but the explicit format pins the bytes.
    std::ostringstream out;
    out << "{\n  \"kind\": \"" << (sf.is_pure() ? "pure" : "mixed") << "\",\n";
    if (sf.label) out << "  \"label\": " << json(*sf.label).dump() << ",\n";
    auto pair = [](const Complex &c) {
        return "[" + format_double(c.real()) + ", " + format_double(c.imag()) + "]";
    };
    if (sf.is_pure()) {
        const auto &s = std::get<PureState2Q>(sf.state);
        out << "  \"amplitudes\": [";
        for (int i = 0; i < 4; ++i) out << (i ? ", " : "") << pair(s.c[static_cast<size_t>(i)]);
        out << "]\n";
    } else {
        const auto &rho = std::get<Density2Q>(sf.state);
        out << "  \"matrix\": [\n";
        for (int i = 0; i < 4; ++i) {
            out << "    [";
            for (int k = 0; k < 4; ++k) out << (k ? ", " : "") << pair(rho.m.at(i, k));
            out << (i < 3 ? "],\n" : "]\n");
        }
        out << "  ]\n";
    }
    out << "}\n";
    return out.str();
}

void save_state_file(const StateFile &sf, const std::string &path) {
    write_file(path, serialize_state_file(sf));
}

SweepSpec parse_sweep_spec(const std::string &json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error &e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    SweepSpec spec;
    try {
        if (j.contains("base_state")) {
            if (j["base_state"].is_string()) {
                if (j["base_state"].get<std::string>() != "haar-random")
                    throw ParseError("base_state must be \"haar-random\" or a pure state object");
            } else {
                const StateFile sf = parse_state_file(j["base_state"].dump());
                if (!sf.is_pure()) throw InvalidStateError("sweep base_state must be pure");
                spec.haar_random_base = false;
                spec.base_state = std::get<PureState2Q>(sf.state);
            }
        }
        spec.noise = parse_noise_kind(j.value("noise", "white"));
        if (!j.contains("epsilons")) throw ParseError("missing \"epsilons\"");
        spec.epsilons = j["epsilons"].get<std::vector<double>>();
        spec.steps = j.value("steps", 3);
        const std::string sign = j.value("sign", "+");
        if (sign != "+" && sign != "-") throw ParseError("sign must be \"+\" or \"-\"");
        spec.sign = sign == "+" ? Sign::Plus : Sign::Minus;
        spec.trials = j.value("trials", 1);
        spec.seed = j.value("seed", static_cast<std::uint64_t>(0));
    } catch (const json::exception &e) {
        throw ParseError(std::string("bad sweep spec: ") + e.what());
    }
    return spec;
}

SweepSpec load_sweep_spec(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_sweep_spec(ss.str());
}

std::string sample_csv(const std::vector<SampleRow> &rows) {
    std::ostringstream out;
    out << "trial,concurrence,class,p_step1,p_step2,p_cumulative,fidelity\n";
    for (const auto &r : rows) {
        out << r.trial << ',' << format_double(r.concurrence) << ',' << input_class_name(r.cls)
            << ',' << format_double(r.p_step1) << ',' << format_double(r.p_step2) << ','
            << format_double(r.p_cumulative) << ',' << format_double(r.fidelity) << '\n';
    }
    return out.str();
}

std::string sweep_csv(const std::vector<SweepRow> &rows) {
    std::ostringstream out;
    out << "epsilon,trial,steps,sign,p_cumulative,fidelity,infidelity,failed_at_step\n";
    for (const auto &r : rows) {
        out << format_double(r.epsilon) << ',' << r.trial << ',' << r.steps << ','
            << sign_name(r.sign) << ',' << format_double(r.p_cumulative) << ','
            << format_double(r.fidelity) << ',' << format_double(r.infidelity) << ','
            << r.failed_at_step << '\n';
    }
    return out.str();
}

void write_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + path);
    out << content;
    if (!out) throw ParseError("write failed for " + path);
}

}  // namespace bellforge
