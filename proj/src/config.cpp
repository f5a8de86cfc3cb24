#include "motsim/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <sstream>

#include "motsim/io.hpp"

namespace motsim {

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

struct RawValue {
    std::string text;
    int line = 0;
    bool used = false;
};

/// section -> key -> value; duplicate keys keep the last occurrence.
using RawConfig = std::map<std::string, std::map<std::string, RawValue>>;

RawConfig tokenize(std::string_view text, std::vector<ConfigIssue>& issues,
                   const std::vector<std::string>& known_sections) {
    RawConfig raw;
    std::string section;
    int line_no = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        const std::size_t hash = line.find_first_of("#;");
        if (hash != std::string::npos) line.erase(hash);
        const std::string t = trim(line);
        if (t.empty()) continue;
        if (t.front() == '[') {
            if (t.back() != ']') {
                issues.push_back({line_no, "", "unterminated section header '" + t + "'"});
                continue;
            }
            section = lower(trim(std::string_view(t).substr(1, t.size() - 2)));
            if (std::find(known_sections.begin(), known_sections.end(), section) ==
                known_sections.end()) {
                issues.push_back({line_no, "", "unknown section [" + section + "]"});
                section.clear();
            }
            continue;
        }
        const std::size_t eq = t.find('=');
        if (eq == std::string::npos) {
            issues.push_back({line_no, "", "expected key = value, got '" + t + "'"});
            continue;
        }
        if (section.empty()) {
            issues.push_back({line_no, "", "key outside any section: '" + t + "'"});
            continue;
        }
        const std::string key = lower(trim(std::string_view(t).substr(0, eq)));
        const std::string value = trim(std::string_view(t).substr(eq + 1));
        if (key.empty()) {
            issues.push_back({line_no, "", "empty key"});
            continue;
        }
        raw[section][key] = RawValue{value, line_no, false};
    }
    return raw;
}

class SectionReader {
public:
    SectionReader(RawConfig& raw, std::string section, std::vector<ConfigIssue>& issues)
        : raw_(raw), section_(std::move(section)), issues_(issues) {}

    bool has(const std::string& key) const {
        auto sec = raw_.find(section_);
        return sec != raw_.end() && sec->second.count(key) > 0;
    }

    RawValue* find(const std::string& key) {
        auto sec = raw_.find(section_);
        if (sec == raw_.end()) return nullptr;
        auto it = sec->second.find(key);
        if (it == sec->second.end()) return nullptr;
        it->second.used = true;
        return &it->second;
    }

    std::string field(const std::string& key) const { return section_ + "." + key; }

    void issue(const std::string& key, int line, const std::string& message) {
        issues_.push_back({line, field(key), message});
    }

    bool number(const std::string& key, double& out, bool required, double fallback) {
        RawValue* rv = find(key);
        if (!rv) {
            out = fallback;
            if (required) issues_.push_back({0, field(key), "required key is missing"});
            return !required;
        }
        char* end = nullptr;
        const double v = std::strtod(rv->text.c_str(), &end);
        if (end == rv->text.c_str() || *end != '\0' || !std::isfinite(v)) {
            issue(key, rv->line, "not a finite number: '" + rv->text + "'");
            out = fallback;
            return false;
        }
        out = v;
        return true;
    }

    bool integer(const std::string& key, long long& out, bool required, long long fallback) {
        double v = 0.0;
        if (!number(key, v, required, static_cast<double>(fallback))) return false;
        if (v != std::floor(v) || std::abs(v) > 9.0e18) {
            RawValue* rv = find(key);
            issue(key, rv ? rv->line : 0, "must be an integer");
            out = fallback;
            return false;
        }
        out = static_cast<long long>(v);
        return true;
    }

    bool word(const std::string& key, std::string& out, bool required,
              const std::string& fallback) {
        RawValue* rv = find(key);
        if (!rv) {
            out = fallback;
            if (required) issues_.push_back({0, field(key), "required key is missing"});
            return !required;
        }
        out = lower(rv->text);
        return true;
    }

    bool raw_text(const std::string& key, std::string& out, bool required) {
        RawValue* rv = find(key);
        if (!rv) {
            if (required) issues_.push_back({0, field(key), "required key is missing"});
            return !required;
        }
        out = rv->text;
        return true;
    }

    bool boolean(const std::string& key, bool& out, bool fallback) {
        RawValue* rv = find(key);
        if (!rv) {
            out = fallback;
            return true;
        }
        const std::string v = lower(rv->text);
        if (v == "true" || v == "1" || v == "yes" || v == "on") {
            out = true;
        } else if (v == "false" || v == "0" || v == "no" || v == "off") {
            out = false;
        } else {
            issue(key, rv->line, "expected a boolean, got '" + rv->text + "'");
            out = fallback;
            return false;
        }
        return true;
    }

private:
    RawConfig& raw_;
    std::string section_;
    std::vector<ConfigIssue>& issues_;
};

void flag_unused(const RawConfig& raw, std::vector<ConfigIssue>& issues) {
    for (const auto& [section, keys] : raw) {
        for (const auto& [key, rv] : keys) {
            if (!rv.used) {
                issues.push_back({rv.line, section + "." + key,
                                  "unknown key for section [" + section + "]"});
            }
        }
    }
}

std::optional<MotilitySpec> build_motility(SectionReader& model,
                                           std::vector<ConfigIssue>& issues) {
    std::string family;
    if (!model.word("motility", family, true, "")) return std::nullopt;
    try {
        if (family == "exponential") {
            double g0 = 0, g1 = 0, lam = 0;
            bool ok = model.number("gamma0", g0, true, 0.0);
            ok &= model.number("gamma1", g1, true, 0.0);
            ok &= model.number("lambda", lam, true, 0.0);
            if (!ok) return std::nullopt;
            return MotilitySpec::exponential(g0, g1, lam);
        }
        if (family == "constant") {
            double gc = 0;
            if (!model.number("gamma_c", gc, true, 0.0)) return std::nullopt;
            return MotilitySpec::constant(gc);
        }
        if (family == "table") {
            std::string text;
            if (!model.raw_text("knots", text, true)) return std::nullopt;
            std::vector<std::pair<double, double>> knots;
            std::istringstream in(text);
            std::string item;
            while (std::getline(in, item, ',')) {
                const std::size_t colon = item.find(':');
                if (colon == std::string::npos) {
                    issues.push_back({0, "model.knots",
                                      "expected v:gamma pairs, got '" + trim(item) + "'"});
                    return std::nullopt;
                }
                char* e1 = nullptr;
                char* e2 = nullptr;
                const std::string a = trim(std::string_view(item).substr(0, colon));
                const std::string b = trim(std::string_view(item).substr(colon + 1));
                const double v = std::strtod(a.c_str(), &e1);
                const double g = std::strtod(b.c_str(), &e2);
                if (e1 == a.c_str() || *e1 != '\0' || e2 == b.c_str() || *e2 != '\0') {
                    issues.push_back({0, "model.knots", "bad knot '" + trim(item) + "'"});
                    return std::nullopt;
                }
                knots.emplace_back(v, g);
            }
            return MotilitySpec::table(std::move(knots));
        }
        issues.push_back({0, "model.motility",
                          "unknown family '" + family +
                              "' (expected exponential, constant, or table)"});
    } catch (const Error& e) {
        issues.push_back({0, "model.motility", e.what()});
    }
    return std::nullopt;
}

std::optional<ResponseSpec> build_response(SectionReader& model,
                                           std::vector<ConfigIssue>& issues) {
    std::string family;
    if (!model.word("response", family, true, "")) return std::nullopt;
    try {
        if (family == "linear") return ResponseSpec::linear();
        if (family == "michaelis") {
            double lf = 0;
            if (!model.number("lambda_f", lf, true, 0.0)) return std::nullopt;
            return ResponseSpec::michaelis(lf);
        }
        if (family == "hill") {
            double lf = 0, m = 0;
            bool ok = model.number("lambda_f", lf, true, 0.0);
            ok &= model.number("hill_m", m, true, 0.0);
            if (!ok) return std::nullopt;
            return ResponseSpec::hill(lf, m);
        }
        issues.push_back({0, "model.response",
                          "unknown family '" + family +
                              "' (expected linear, michaelis, or hill)"});
    } catch (const Error& e) {
        issues.push_back({0, "model.response", e.what()});
    }
    return std::nullopt;
}

ParseResult parse_config_impl(std::string_view text, RawConfig& raw,
                              std::vector<ConfigIssue>& issues,
                              const std::vector<std::string>& sections, bool check_unused) {
    raw = tokenize(text, issues, sections);
    ParseResult result;

    for (const char* required : {"model", "grid", "scheme", "init"}) {
        if (raw.find(required) == raw.end()) {
            issues.push_back({0, "", std::string("missing required section [") + required + "]"});
        }
    }

    SectionReader model(raw, "model", issues);
    SectionReader grid(raw, "grid", issues);
    SectionReader scheme(raw, "scheme", issues);
    SectionReader init(raw, "init", issues);
    SectionReader output(raw, "output", issues);

    auto motility = build_motility(model, issues);
    auto response = build_response(model, issues);

    double alpha = 0, theta = 0, dcoef = 0;
    model.number("alpha", alpha, true, 0.0);
    model.number("theta", theta, true, 0.0);
    model.number("dcoef", dcoef, true, 0.0);
    if (alpha < 0.0) issues.push_back({0, "model.alpha", "must be >= 0"});
    if (theta < 0.0) issues.push_back({0, "model.theta", "must be >= 0"});
    if (dcoef <= 0.0 && raw["model"].count("dcoef")) {
        issues.push_back({0, "model.dcoef", "must be > 0"});
    }

    double length = 0;
    long long cells = 0;
    grid.number("length", length, true, 0.0);
    grid.integer("cells", cells, true, 0);
    if (raw["grid"].count("length") && length <= 0.0) {
        issues.push_back({0, "grid.length", "must be > 0"});
    }
    if (raw["grid"].count("cells") && (cells < 4 || cells > 1'000'000)) {
        issues.push_back({0, "grid.cells", "must be between 4 and 1000000"});
    }

    SchemeConfig sc;
    {
        std::string mode;
        scheme.word("mode", mode, false, "imex");
        if (mode == "explicit") {
            sc.mode = SchemeMode::Explicit;
        } else if (mode == "imex") {
            sc.mode = SchemeMode::Imex;
        } else {
            issues.push_back({0, "scheme.mode", "expected explicit or imex, got '" + mode + "'"});
        }
        std::string policy;
        scheme.word("dt_policy", policy, false, "fixed");
        if (policy == "fixed") {
            sc.dt_policy = DtPolicy::Fixed;
        } else if (policy == "auto") {
            sc.dt_policy = DtPolicy::Auto;
        } else {
            issues.push_back({0, "scheme.dt_policy",
                              "expected fixed or auto, got '" + policy + "'"});
        }
        scheme.number("dt", sc.dt, false, 1e-3);
        scheme.number("safety", sc.safety, false, 0.9);
        scheme.number("t_end", sc.t_end, true, 0.0);
        long long ms = sc.max_steps;
        scheme.integer("max_steps", ms, false, sc.max_steps);
        sc.max_steps = ms;
        if (sc.dt_policy == DtPolicy::Fixed && sc.dt <= 0.0) {
            issues.push_back({0, "scheme.dt", "must be > 0 for the fixed policy"});
        }
        if (sc.dt_policy == DtPolicy::Auto && sc.safety <= 0.0) {
            issues.push_back({0, "scheme.safety", "must be > 0 for the auto policy"});
        }
        if (sc.t_end < 0.0) issues.push_back({0, "scheme.t_end", "must be >= 0"});
        if (sc.max_steps < 0) issues.push_back({0, "scheme.max_steps", "must be >= 0"});
    }

    InitSpec is;
    {
        std::string kind;
        init.word("kind", kind, true, "");
        if (kind == "constant_perturbed") {
            is.kind = InitKind::ConstantPerturbed;
        } else if (kind == "eigenmode") {
            is.kind = InitKind::Eigenmode;
        } else if (kind == "file") {
            is.kind = InitKind::File;
        } else if (!kind.empty()) {
            issues.push_back({0, "init.kind",
                              "expected constant_perturbed, eigenmode, or file, got '" + kind +
                                  "'"});
        }
        init.number("base_u", is.base_u, false, 0.0);
        init.number("base_v", is.base_v, false, 0.0);
        init.number("base_w", is.base_w, false, 0.0);
        init.number("amplitude", is.amplitude, false, 0.0);
        init.boolean("perturb_w", is.perturb_w, false);
        long long mode_n = 1;
        init.integer("mode", mode_n, false, 1);
        is.mode_n = static_cast<int>(mode_n);
        init.raw_text("path", is.path, false);
        if (RawValue* rv = init.find("seed")) {
            char* end = nullptr;
            const unsigned long long s = std::strtoull(rv->text.c_str(), &end, 10);
            if (end == rv->text.c_str() || *end != '\0') {
                init.issue("seed", rv->line, "expected an unsigned integer");
            } else {
                is.seed = s;
                is.seed_set = true;
            }
        }
        if (is.kind == InitKind::ConstantPerturbed) {
            if (is.amplitude != 0.0 && !is.seed_set) {
                issues.push_back({0, "init.seed",
                                  "required when constant_perturbed has a nonzero amplitude"});
            }
            if (is.amplitude < 0.0 || is.amplitude >= 1.0) {
                issues.push_back({0, "init.amplitude",
                                  "relative amplitude must lie in [0, 1)"});
            }
            if (is.base_u < 0.0 || is.base_v < 0.0 || is.base_w < 0.0) {
                issues.push_back({0, "init.base_u", "base values must be >= 0"});
            }
        }
        if (is.kind == InitKind::Eigenmode) {
            if (is.mode_n < 1) issues.push_back({0, "init.mode", "mode index must be >= 1"});
            if (is.amplitude < 0.0) {
                issues.push_back({0, "init.amplitude", "eigenmode amplitude must be >= 0"});
            }
        }
        if (is.kind == InitKind::File && is.path.empty()) {
            issues.push_back({0, "init.path", "required for file initial data"});
        }
    }

    OutputSpec os;
    {
        output.raw_text("dir", os.dir, false);
        output.number("cadence", os.cadence, false, 1.0);
        output.boolean("snapshots", os.snapshots, false);
        long long max_snaps = os.max_snapshots;
        output.integer("max_snapshots", max_snaps, false, os.max_snapshots);
        os.max_snapshots = static_cast<int>(max_snaps);
        if (os.cadence < 0.0) issues.push_back({0, "output.cadence", "must be >= 0"});
        if (os.max_snapshots < 1) issues.push_back({0, "output.max_snapshots", "must be >= 1"});
        if (os.dir.empty()) issues.push_back({0, "output.dir", "must not be empty"});
    }

    if (check_unused) flag_unused(raw, issues);

    if (!issues.empty() || !motility || !response) return result;
    try {
        RunConfig cfg{ModelParams(std::move(*motility), *response, alpha, theta, dcoef),
                      Grid(length, static_cast<int>(cells)), sc, is, os};
        result.config = std::move(cfg);
    } catch (const Error& e) {
        issues.push_back({0, "", std::string("configuration rejected: ") + e.what()});
    }
    return result;
}

} // namespace

ParseResult parse_config(std::string_view text) {
    RawConfig raw;
    std::vector<ConfigIssue> issues;
    ParseResult result = parse_config_impl(
        text, raw, issues, {"model", "grid", "scheme", "init", "output"}, true);
    result.issues = std::move(issues);
    if (!result.issues.empty()) result.config.reset();
    return result;
}

std::string serialize_config(const RunConfig& c) {
    std::ostringstream out;
    out << "[model]\n";
    out << "alpha = " << format_g17(c.model.alpha) << "\n";
    out << "theta = " << format_g17(c.model.theta) << "\n";
    out << "dcoef = " << format_g17(c.model.dcoef) << "\n";
    switch (c.model.motility.family) {
    case MotilityFamily::Exponential:
        out << "motility = exponential\n";
        out << "gamma0 = " << format_g17(c.model.motility.gamma0) << "\n";
        out << "gamma1 = " << format_g17(c.model.motility.gamma1) << "\n";
        out << "lambda = " << format_g17(c.model.motility.lambda) << "\n";
        break;
    case MotilityFamily::Constant:
        out << "motility = constant\n";
        out << "gamma_c = " << format_g17(c.model.motility.gamma_c) << "\n";
        break;
    case MotilityFamily::Table: {
        out << "motility = table\n";
        out << "knots = ";
        for (std::size_t i = 0; i < c.model.motility.knots.size(); ++i) {
            if (i) out << ", ";
            out << format_g17(c.model.motility.knots[i].first) << ':'
                << format_g17(c.model.motility.knots[i].second);
        }
        out << "\n";
        break;
    }
    }
    switch (c.model.response.family) {
    case ResponseFamily::Linear: out << "response = linear\n"; break;
    case ResponseFamily::Michaelis:
        out << "response = michaelis\n";
        out << "lambda_f = " << format_g17(c.model.response.lambda_f) << "\n";
        break;
    case ResponseFamily::Hill:
        out << "response = hill\n";
        out << "lambda_f = " << format_g17(c.model.response.lambda_f) << "\n";
        out << "hill_m = " << format_g17(c.model.response.hill_m) << "\n";
        break;
    }
    out << "\n[grid]\n";
    out << "length = " << format_g17(c.grid.length) << "\n";
    out << "cells = " << c.grid.cells << "\n";
    out << "\n[scheme]\n";
    out << "mode = " << (c.scheme.mode == SchemeMode::Explicit ? "explicit" : "imex") << "\n";
    out << "dt_policy = " << (c.scheme.dt_policy == DtPolicy::Fixed ? "fixed" : "auto") << "\n";
    out << "dt = " << format_g17(c.scheme.dt) << "\n";
    out << "safety = " << format_g17(c.scheme.safety) << "\n";
    out << "t_end = " << format_g17(c.scheme.t_end) << "\n";
    out << "max_steps = " << c.scheme.max_steps << "\n";
    out << "\n[init]\n";
    switch (c.init.kind) {
    case InitKind::ConstantPerturbed: out << "kind = constant_perturbed\n"; break;
    case InitKind::Eigenmode: out << "kind = eigenmode\n"; break;
    case InitKind::File: out << "kind = file\n"; break;
    }
    out << "base_u = " << format_g17(c.init.base_u) << "\n";
    out << "base_v = " << format_g17(c.init.base_v) << "\n";
    out << "base_w = " << format_g17(c.init.base_w) << "\n";
    out << "amplitude = " << format_g17(c.init.amplitude) << "\n";
    if (c.init.seed_set) out << "seed = " << c.init.seed << "\n";
    out << "perturb_w = " << (c.init.perturb_w ? "true" : "false") << "\n";
    if (c.init.kind == InitKind::Eigenmode) out << "mode = " << c.init.mode_n << "\n";
    if (c.init.kind == InitKind::File) out << "path = " << c.init.path << "\n";
    out << "\n[output]\n";
    out << "dir = " << c.output.dir << "\n";
    out << "cadence = " << format_g17(c.output.cadence) << "\n";
    out << "snapshots = " << (c.output.snapshots ? "true" : "false") << "\n";
    out << "max_snapshots = " << c.output.max_snapshots << "\n";
    return out.str();
}

SweepParseResult parse_sweep_config(std::string_view text) {
    RawConfig raw;
    std::vector<ConfigIssue> issues;
    ParseResult base = parse_config_impl(
        text, raw, issues, {"model", "grid", "scheme", "init", "output", "sweep"}, false);

    SweepParseResult result;
    SweepConfig sweep;

    static const std::vector<std::string> kAxisNames = {"dcoef",  "alpha",  "theta", "gamma0",
                                                        "gamma1", "lambda", "l",     "n"};

    auto sec = raw.find("sweep");
    if (sec == raw.end()) {
        issues.push_back({0, "", "missing required section [sweep]"});
    } else {
        for (auto& [key, rv] : sec->second) {
            if (key == "max_cells") {
                rv.used = true;
                char* end = nullptr;
                const long long v = std::strtoll(rv.text.c_str(), &end, 10);
                if (end == rv.text.c_str() || *end != '\0' || v < 1) {
                    issues.push_back({rv.line, "sweep.max_cells", "expected a positive integer"});
                } else {
                    sweep.max_cells = static_cast<std::size_t>(v);
                }
                continue;
            }
            if (key.rfind("axis.", 0) == 0) {
                rv.used = true;
                const std::string name = key.substr(5);
                if (std::find(kAxisNames.begin(), kAxisNames.end(), name) == kAxisNames.end()) {
                    issues.push_back({rv.line, "sweep." + key,
                                      "unknown axis (expected one of dcoef, alpha, theta, "
                                      "gamma0, gamma1, lambda, l, n)"});
                    continue;
                }
                SweepAxis axis;
                axis.name = name;
                std::istringstream in(rv.text);
                std::string item;
                bool bad = false;
                while (std::getline(in, item, ',')) {
                    const std::string tok = trim(item);
                    char* end = nullptr;
                    const double v = std::strtod(tok.c_str(), &end);
                    if (tok.empty() || end == tok.c_str() || *end != '\0' ||
                        !std::isfinite(v)) {
                        issues.push_back({rv.line, "sweep." + key,
                                          "bad axis value '" + tok + "'"});
                        bad = true;
                        break;
                    }
                    if (name == "n" && v != std::floor(v)) {
                        issues.push_back({rv.line, "sweep." + key,
                                          "cell counts must be integers"});
                        bad = true;
                        break;
                    }
                    axis.values.push_back(v);
                }
                if (!bad && axis.values.empty()) {
                    issues.push_back({rv.line, "sweep." + key, "axis has no values"});
                    bad = true;
                }
                if (!bad) sweep.axes.push_back(std::move(axis));
            }
        }
        if (sweep.axes.empty() && issues.empty()) {
            issues.push_back({0, "sweep", "at least one axis.<name> entry is required"});
        }
    }
    flag_unused(raw, issues);

    // Duplicate axes would silently shadow each other in the cartesian product.
    for (std::size_t i = 0; i < sweep.axes.size(); ++i) {
        for (std::size_t j = i + 1; j < sweep.axes.size(); ++j) {
            if (sweep.axes[i].name == sweep.axes[j].name) {
                issues.push_back({0, "sweep.axis." + sweep.axes[i].name, "axis appears twice"});
            }
        }
    }

    std::size_t cells = 1;
    for (const auto& axis : sweep.axes) {
        cells *= axis.values.size();
        if (cells > 1'000'000) break;
    }
    if (!sweep.axes.empty() && cells > sweep.max_cells) {
        issues.push_back({0, "sweep",
                          "cartesian product has " + std::to_string(cells) +
                              " cells, above max_cells = " + std::to_string(sweep.max_cells)});
    }

    result.issues = std::move(issues);
    if (base.config && result.issues.empty()) {
        sweep.base = std::move(*base.config);
        result.sweep = std::move(sweep);
    }
    return result;
}

RunConfig apply_axis_value(const RunConfig& base, const std::string& axis, double value) {
    RunConfig cfg = base;
    auto expect_exponential = [&]() {
        if (cfg.model.motility.family != MotilityFamily::Exponential) {
            throw InvalidInput("axis '" + axis + "' needs the exponential motility family");
        }
    };
    if (axis == "dcoef") {
        cfg.model = ModelParams(cfg.model.motility, cfg.model.response, cfg.model.alpha,
                                cfg.model.theta, value);
    } else if (axis == "alpha") {
        cfg.model = ModelParams(cfg.model.motility, cfg.model.response, value, cfg.model.theta,
                                cfg.model.dcoef);
    } else if (axis == "theta") {
        cfg.model = ModelParams(cfg.model.motility, cfg.model.response, cfg.model.alpha, value,
                                cfg.model.dcoef);
    } else if (axis == "gamma0" || axis == "gamma1" || axis == "lambda") {
        expect_exponential();
        double g0 = cfg.model.motility.gamma0;
        double g1 = cfg.model.motility.gamma1;
        double lam = cfg.model.motility.lambda;
        (axis == "gamma0" ? g0 : axis == "gamma1" ? g1 : lam) = value;
        cfg.model = ModelParams(MotilitySpec::exponential(g0, g1, lam), cfg.model.response,
                                cfg.model.alpha, cfg.model.theta, cfg.model.dcoef);
    } else if (axis == "l") {
        cfg.grid = Grid(value, cfg.grid.cells);
    } else if (axis == "n") {
        if (value != std::floor(value) || value < 4 || value > 1'000'000) {
            throw InvalidInput("axis 'n' needs an integer cell count >= 4");
        }
        cfg.grid = Grid(cfg.grid.length, static_cast<int>(value));
    } else {
        throw InvalidInput("unknown sweep axis '" + axis + "'");
    }
    return cfg;
}

} // namespace motsim
