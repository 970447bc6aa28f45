#include "swcalc/descriptor_io.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "swcalc/errors.hpp"

namespace swcalc::io {

using manifolds::Factor;
using manifolds::FactorStatus;
using manifolds::Flag;
using manifolds::FourManifold;
using manifolds::MonopoleClassDescriptor;
using manifolds::SpinCStructure;
using manifolds::StatusKind;
using manifolds::SumKind;
using manifolds::Verdict;
using manifolds::VerdictKind;
using nlohmann::json;

namespace {

const std::map<std::string, Flag> kFlagNames = {
    {"Spin", Flag::Spin},
    {"Symplectic", Flag::Symplectic},
    {"Minimal", Flag::Minimal},
    {"Kahler", Flag::Kahler},
    {"SimplyConnected", Flag::SimplyConnected},
    {"AllNonzeroClassesAlmostComplex", Flag::AllNonzeroClassesAlmostComplex},
};

std::string flag_name(Flag f) {
    for (const auto& [name, flag] : kFlagNames)
        if (flag == f) return name;
    throw std::logic_error("unnamed flag");
}

const std::map<std::string, StatusKind> kStatusNames = {
    {"unit", StatusKind::Unit},
    {"almost_complex_sw", StatusKind::AlmostComplexSW},
    {"known_nonzero", StatusKind::KnownNonzero},
    {"known_zero", StatusKind::KnownZero},
    {"unknown", StatusKind::Unknown},
};

std::string status_name(StatusKind k) {
    for (const auto& [name, kind] : kStatusNames)
        if (kind == k) return name;
    throw std::logic_error("unnamed status");
}

json spinc_to_json(const SpinCStructure& s) {
    json j;
    j["c1_squared"] = s.c1_squared;
    if (s.c1_trivial) j["c1_trivial"] = true;
    if (!s.c1_evaluations.empty()) j["c1_evaluations"] = s.c1_evaluations;
    return j;
}

SpinCStructure spinc_from_json(const json& j) {
    SpinCStructure s;
    s.c1_squared = j.at("c1_squared").get<long long>();
    s.c1_trivial = j.value("c1_trivial", false);
    if (j.contains("c1_evaluations"))
        s.c1_evaluations =
            j.at("c1_evaluations").get<std::map<std::string, long long>>();
    return s;
}

json entry_to_json(const ManifoldEntry& e) {
    const FourManifold& m = e.manifold;
    json j;
    j["name"] = m.name;
    j["b1"] = m.b1;
    j["b_plus"] = m.b_plus;
    j["b_minus"] = m.b_minus;
    if (!m.flags.empty()) {
        std::vector<std::string> names;
        for (Flag f : m.flags) names.push_back(flag_name(f));
        std::sort(names.begin(), names.end());
        j["flags"] = names;
    }
    if (!m.spinc_list.empty()) {
        json list = json::array();
        for (const SpinCStructure& s : m.spinc_list)
            list.push_back(spinc_to_json(s));
        j["spinc"] = list;
    }
    if (m.minus2_sphere) j["minus2_sphere"] = *m.minus2_sphere;
    if (m.uniform_c1_eval_mod4)
        j["uniform_c1_eval_mod4"] = *m.uniform_c1_eval_mod4;
    if (m.nonvanishing_span_semidefinite)
        j["nonvanishing_span_semidefinite"] = true;
    if (e.status.kind != StatusKind::Unknown) {
        json st;
        st["kind"] = status_name(e.status.kind);
        if (e.status.kind == StatusKind::AlmostComplexSW)
            st["sw"] = e.status.sw;
        j["status"] = st;
    }
    return j;
}

ManifoldEntry entry_from_json(const json& j) {
    ManifoldEntry e;
    FourManifold& m = e.manifold;
    m.name = j.at("name").get<std::string>();
    m.b1 = j.at("b1").get<long long>();
    m.b_plus = j.at("b_plus").get<long long>();
    m.b_minus = j.at("b_minus").get<long long>();
    if (j.contains("flags"))
        for (const auto& f : j.at("flags")) {
            auto it = kFlagNames.find(f.get<std::string>());
            if (it == kFlagNames.end())
                throw std::invalid_argument("unknown flag '" +
                                            f.get<std::string>() + "'");
            m.flags.insert(it->second);
        }
    if (j.contains("spinc"))
        for (const auto& s : j.at("spinc"))
            m.spinc_list.push_back(spinc_from_json(s));
    if (j.contains("minus2_sphere"))
        m.minus2_sphere = j.at("minus2_sphere").get<std::string>();
    if (j.contains("uniform_c1_eval_mod4"))
        m.uniform_c1_eval_mod4 = j.at("uniform_c1_eval_mod4").get<int>();
    m.nonvanishing_span_semidefinite =
        j.value("nonvanishing_span_semidefinite", false);
    if (j.contains("status")) {
        const json& st = j.at("status");
        auto it = kStatusNames.find(st.at("kind").get<std::string>());
        if (it == kStatusNames.end())
            throw std::invalid_argument("unknown status kind");
        e.status.kind = it->second;
        if (e.status.kind == StatusKind::AlmostComplexSW)
            e.status.sw = st.at("sw").get<long long>();
    }
    return e;
}

void validate_entry(const ManifoldEntry& e) {
    e.manifold.validate();
    // Consistency checks whose hypotheses the entry happens to satisfy.
    if (e.manifold.b_plus == 0)
        for (const SpinCStructure& s : e.manifold.spinc_list) {
            Verdict v = manifolds::bplus_zero_constraint(e.manifold, s);
            if (v.inconsistency)
                throw MathConstraintError("manifold '" + e.manifold.name +
                                          "': " + v.rule);
        }
    const bool ms_hypotheses =
        e.manifold.has(Flag::Symplectic) && e.manifold.b1 == 0 &&
        std::any_of(e.manifold.spinc_list.begin(), e.manifold.spinc_list.end(),
                    [](const SpinCStructure& s) {
                        return s.c1_squared == 0 && s.c1_trivial;
                    });
    if (ms_hypotheses) {
        Verdict v = manifolds::morgan_szabo_check(e.manifold);
        if (v.inconsistency)
            throw MathConstraintError("manifold '" + e.manifold.name + "': " +
                                      v.rule);
    }
}

}  // namespace

const ManifoldEntry* DescriptorFile::find_manifold(const std::string& name) const {
    for (const ManifoldEntry& e : manifolds)
        if (e.manifold.name == name) return &e;
    return nullptr;
}

const Expression* DescriptorFile::find_expression(const std::string& name) const {
    for (const Expression& e : expressions)
        if (e.name == name) return &e;
    return nullptr;
}

DescriptorFile parse_descriptor_file(const std::string& text) {
    const json j = json::parse(text);
    DescriptorFile f;
    f.format_version = j.at("format_version").get<std::string>();
    if (f.format_version != kFormatVersion)
        throw std::invalid_argument("unsupported format_version '" +
                                    f.format_version + "', expected " +
                                    kFormatVersion);
    std::set<std::string> names;
    if (j.contains("manifolds"))
        for (const auto& e : j.at("manifolds")) {
            ManifoldEntry entry = entry_from_json(e);
            if (!names.insert(entry.manifold.name).second)
                throw std::invalid_argument("duplicate name '" +
                                            entry.manifold.name + "'");
            validate_entry(entry);
            f.manifolds.push_back(std::move(entry));
        }
    if (j.contains("expressions"))
        for (const auto& e : j.at("expressions")) {
            Expression expr;
            expr.name = e.at("name").get<std::string>();
            if (!names.insert(expr.name).second)
                throw std::invalid_argument("duplicate name '" + expr.name +
                                            "'");
            const std::string sum = e.value("sum", "connected");
            if (sum == "connected")
                expr.sum = SumKind::Connected;
            else if (sum == "minus2")
                expr.sum = SumKind::AlongMinus2;
            else
                throw std::invalid_argument("unknown sum kind '" + sum + "'");
            for (const auto& r : e.at("factors"))
                expr.factors.push_back(r.get<std::string>());
            if (expr.factors.empty())
                throw std::invalid_argument("expression '" + expr.name +
                                            "' has no factors");
            if (expr.sum == SumKind::AlongMinus2 && expr.factors.size() != 2)
                throw std::invalid_argument("expression '" + expr.name +
                                            "': a -2-sum has exactly two "
                                            "factors");
            f.expressions.push_back(std::move(expr));
        }
    // Every factor reference must resolve to a manifold or an expression
    // defined earlier in the file (this also rules out cycles).
    std::set<std::string> defined;
    for (const ManifoldEntry& e : f.manifolds) defined.insert(e.manifold.name);
    for (const Expression& e : f.expressions) {
        for (const std::string& r : e.factors)
            if (defined.find(r) == defined.end())
                throw std::invalid_argument("expression '" + e.name +
                                            "' references undefined name '" +
                                            r + "'");
        defined.insert(e.name);
    }
    return f;
}

DescriptorFile load_descriptor_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_descriptor_file(ss.str());
}

std::string emit_descriptor_file(const DescriptorFile& f) {
    json j;
    j["format_version"] = f.format_version;
    json ms = json::array();
    for (const ManifoldEntry& e : f.manifolds) ms.push_back(entry_to_json(e));
    j["manifolds"] = ms;
    json es = json::array();
    for (const Expression& e : f.expressions) {
        json je;
        je["name"] = e.name;
        je["sum"] = e.sum == SumKind::Connected ? "connected" : "minus2";
        je["factors"] = e.factors;
        es.push_back(je);
    }
    j["expressions"] = es;
    return j.dump(2) + "\n";
}

namespace {

// A sub-expression used as a factor: connected sums flatten into the
// enclosing smash product; a -2-sum collapses to a single factor whose
// status is derived from its own verdict.
Factor collapse(const EvaluatedExpression& sub) {
    Factor f;
    f.manifold = sub.manifold;
    Verdict v = manifolds::classify(sub.monopole_class);
    switch (v.kind) {
        case VerdictKind::Vanishes: f.status.kind = StatusKind::KnownZero; break;
        case VerdictKind::Nonvanishing:
            f.status.kind = StatusKind::KnownNonzero;
            break;
        case VerdictKind::Unknown: f.status.kind = StatusKind::Unknown; break;
    }
    return f;
}

EvaluatedExpression evaluate_leaf(const ManifoldEntry& e) {
    Factor f;
    f.manifold = e.manifold;
    if (!e.manifold.spinc_list.empty()) f.spinc = e.manifold.spinc_list.front();
    f.status = e.status;
    return {e.manifold, MonopoleClassDescriptor::single(std::move(f))};
}

EvaluatedExpression evaluate_rec(const DescriptorFile& f,
                                 const std::string& name);

EvaluatedExpression evaluate_factor(const DescriptorFile& f,
                                    const std::string& ref) {
    if (const ManifoldEntry* m = f.find_manifold(ref)) return evaluate_leaf(*m);
    return evaluate_rec(f, ref);
}

EvaluatedExpression evaluate_rec(const DescriptorFile& f,
                                 const std::string& name) {
    const Expression* expr = f.find_expression(name);
    if (!expr) throw std::invalid_argument("unknown expression '" + name + "'");

    std::vector<EvaluatedExpression> parts;
    for (const std::string& r : expr->factors)
        parts.push_back(evaluate_factor(f, r));

    EvaluatedExpression result;
    if (expr->sum == SumKind::Connected) {
        result.manifold = parts.front().manifold;
        for (std::size_t i = 1; i < parts.size(); ++i)
            result.manifold =
                manifolds::connected_sum(result.manifold, parts[i].manifold);
        MonopoleClassDescriptor mcd;
        for (const EvaluatedExpression& p : parts) {
            if (p.monopole_class.kind == SumKind::Connected)
                mcd = manifolds::smash(mcd, p.monopole_class);
            else
                mcd = manifolds::smash(
                    mcd, MonopoleClassDescriptor::single(collapse(p)));
        }
        result.monopole_class = std::move(mcd);
    } else {
        result.manifold = manifolds::sum_along_minus2(parts[0].manifold,
                                                      parts[1].manifold);
        MonopoleClassDescriptor mcd;
        mcd.kind = SumKind::AlongMinus2;
        for (const EvaluatedExpression& p : parts) {
            if (p.monopole_class.kind == SumKind::Connected &&
                p.monopole_class.factors.size() == 1)
                mcd.factors.push_back(p.monopole_class.factors.front());
            else
                mcd.factors.push_back(collapse(p));
        }
        result.monopole_class = std::move(mcd);
    }
    result.manifold.name = expr->name;
    return result;
}

}  // namespace

EvaluatedExpression evaluate_expression(const DescriptorFile& f,
                                        const std::string& name) {
    return evaluate_rec(f, name);
}

std::string bundled_descriptor_path() {
    if (const char* env = std::getenv("SWCALC_DATA_DIR"))
        return std::string(env) + "/descriptors.json";
#ifdef SWCALC_DATA_DIR_DEFAULT
    return std::string(SWCALC_DATA_DIR_DEFAULT) + "/descriptors.json";
#else
    return "data/descriptors.json";
#endif
}

std::string emit_group(const rings::AbelianGroupDesc& g) {
    json j;
    j["rank"] = g.rank;
    j["torsion"] = g.torsion;
    j["knowledge"] = g.knowledge == rings::Knowledge::Complete
                         ? "complete"
                         : "partial_beyond_table";
    return j.dump();
}

rings::AbelianGroupDesc parse_group(const std::string& text) {
    const json j = json::parse(text);
    rings::AbelianGroupDesc g;
    g.rank = j.at("rank").get<long>();
    g.torsion = j.at("torsion").get<std::vector<long>>();
    const std::string k = j.at("knowledge").get<std::string>();
    if (k == "complete")
        g.knowledge = rings::Knowledge::Complete;
    else if (k == "partial_beyond_table")
        g.knowledge = rings::Knowledge::PartialBeyondTable;
    else
        throw std::invalid_argument("unknown knowledge flag '" + k + "'");
    return g;
}

std::uint64_t fnv1a(std::string_view data) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

std::string fnv1a_hex(std::string_view data) {
    static const char* digits = "0123456789abcdef";
    std::uint64_t h = fnv1a(data);
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

}  // namespace swcalc::io
