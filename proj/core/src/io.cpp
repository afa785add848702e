#include "germinv/io.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

#include "json.hpp"

namespace germinv {

namespace {

using json = nlohmann::ordered_json;

// ------------------------------------------------------------ line scanner

struct Cursor {
    const std::string& s;
    int line;
    size_t pos = 0;

    void skip_ws()
    {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    bool eol()
    {
        skip_ws();
        return pos >= s.size();
    }
    int col() const { return static_cast<int>(pos) + 1; }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line, static_cast<int>(pos) + 1, msg); }

    char peek()
    {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c)
    {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c)
    {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    std::string ident()
    {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
        if (pos == start || std::isdigit(static_cast<unsigned char>(s[start]))) fail("expected an identifier");
        return s.substr(start, pos - start);
    }
    std::string digits()
    {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected digits");
        return s.substr(start, pos - start);
    }
    long exponent()
    {
        std::string d = digits();
        if (d.size() > 7) fail("exponent exceeds the documented limit " + std::to_string(kMaxExponent));
        long v = std::stol(d);
        if (v > kMaxExponent) fail("exponent exceeds the documented limit " + std::to_string(kMaxExponent));
        return v;
    }
};

// optional leading rational; nullopt when the term starts with a variable
std::optional<Rat> parse_coefficient(Cursor& c)
{
    if (!std::isdigit(static_cast<unsigned char>(c.peek()))) return std::nullopt;
    Int num(c.digits());
    if (c.accept('/')) {
        Int den(c.digits());
        if (den == 0) c.fail("zero denominator");
        Rat q(num, den);
        q.canonicalize();
        return q;
    }
    return Rat(num);
}

bool starts_factor(Cursor& c)
{
    char p = c.peek();
    return std::isalpha(static_cast<unsigned char>(p)) || p == '_';
}

// signed sum of terms; factors validated and mapped to variable slots by the
// callback (returns a slot index)
template <typename VarMap>
void parse_terms(Cursor& c, int nvars, VarMap&& var_of,
                 const std::function<void(const std::vector<long>&, const Rat&)>& emit)
{
    bool first = true;
    while (true) {
        if (c.eol()) {
            if (first) c.fail("empty polynomial");
            break;
        }
        int sign = 1;
        if (c.accept('-'))
            sign = -1;
        else if (c.accept('+'))
            sign = 1;
        else if (!first)
            break; // delimiter of the caller (',' etc.)

        auto coeff = parse_coefficient(c);
        std::vector<long> alpha(static_cast<size_t>(nvars), 0);
        bool any_factor = false;
        while (starts_factor(c)) {
            std::string v = c.ident();
            int slot = var_of(v, c);
            long e = 1;
            if (c.accept('^')) e = c.exponent();
            alpha[static_cast<size_t>(slot)] += e;
            if (alpha[static_cast<size_t>(slot)] > kMaxExponent) c.fail("exponent exceeds the documented limit");
            any_factor = true;
            c.accept('*');
        }
        if (!coeff && !any_factor) c.fail("expected a term");
        Rat q = coeff ? *coeff : Rat(1);
        if (sign < 0) q = -q;
        emit(alpha, q);
        first = false;
    }
}

Poly parse_branch_poly(Cursor& c, const std::string& param)
{
    Poly p;
    parse_terms(
        c, 1,
        [&](const std::string& v, Cursor& cc) -> int {
            if (v != param) cc.fail("unknown variable '" + v + "' in a series for parameter '" + param + "'");
            return 0;
        },
        [&](const std::vector<long>& alpha, const Rat& q) { p.add_term(alpha[0], q); });
    return p;
}

XPoly parse_xpoly(Cursor& c, int n)
{
    XPoly f(n);
    parse_terms(
        c, n,
        [&](const std::string& v, Cursor& cc) -> int {
            if (v.size() >= 2 && v[0] == 'x') {
                bool digits_only = std::all_of(v.begin() + 1, v.end(),
                                               [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
                if (digits_only) {
                    long idx = std::stol(v.substr(1));
                    if (idx >= 1 && idx <= n) return static_cast<int>(idx - 1);
                }
            }
            cc.fail("unknown coordinate '" + v + "' (expected x1..x" + std::to_string(n) + ")");
        },
        [&](const std::vector<long>& alpha, const Rat& q) { f.add_term(alpha, q); });
    return f;
}

} // namespace

ProblemInstance parse_instance(const std::string& text)
{
    ProblemInstance inst;
    Parametrization& phi = inst.phi;
    phi.n = 0;

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        while (!raw.empty() && (raw.back() == '\r' || raw.back() == ' ' || raw.back() == '\t')) raw.pop_back();
        Cursor c{raw, lineno};
        if (c.eol()) continue;

        std::string head = c.ident();
        if (head == "n") {
            c.expect('=');
            if (phi.n != 0) c.fail("duplicate 'n' line");
            std::string d = c.digits();
            if (d.size() > 4) c.fail("n too large");
            phi.n = std::stoi(d);
            if (phi.n < 2) c.fail("n must be at least 2");
            if (!c.eol()) c.fail("trailing input after the 'n' line");
        } else if (head == "branch") {
            if (phi.n == 0) c.fail("'n = ...' must precede the first branch");
            Branch br;
            br.name = c.ident();
            for (const auto& b : phi.branches)
                if (b.name == br.name) c.fail("duplicate branch name '" + br.name + "'");
            c.expect('(');
            br.param = c.ident();
            c.expect(')');
            if (br.param.size() >= 2 && br.param[0] == 'x' &&
                std::isdigit(static_cast<unsigned char>(br.param[1])))
                c.fail("branch parameter may not look like a coordinate name");
            c.expect(':');
            br.coord.assign(static_cast<size_t>(phi.n), Poly{});
            std::vector<bool> seen(static_cast<size_t>(phi.n), false);
            while (true) {
                std::string var = c.ident();
                if (var.size() < 2 || var[0] != 'x') c.fail("expected a coordinate assignment x<k> = ...");
                long idx = 0;
                try {
                    idx = std::stol(var.substr(1));
                } catch (...) {
                    c.fail("bad coordinate name '" + var + "'");
                }
                if (idx < 1 || idx > phi.n) c.fail("coordinate index out of range in '" + var + "'");
                if (seen[static_cast<size_t>(idx - 1)]) c.fail("coordinate '" + var + "' assigned twice");
                seen[static_cast<size_t>(idx - 1)] = true;
                c.expect('=');
                Poly p = parse_branch_poly(c, br.param);
                if (auto o = p.order(); o && *o == 0) c.fail("nonzero constant term in a branch series");
                br.coord[static_cast<size_t>(idx - 1)] = std::move(p);
                if (!c.accept(',')) break;
            }
            if (!c.eol()) c.fail("trailing input after the branch line");
            for (int j = 0; j < phi.n; ++j)
                if (!seen[static_cast<size_t>(j)]) c.fail("coordinate x" + std::to_string(j + 1) + " not assigned");
            phi.branches.push_back(std::move(br));
        } else if (head == "ideal") {
            if (phi.n == 0) c.fail("'n = ...' must precede ideal lines");
            c.expect(':');
            std::string name = c.ident();
            c.expect('=');
            XPoly f = parse_xpoly(c, phi.n);
            if (!c.eol()) c.fail("trailing input after the ideal line");
            if (f.is_zero()) c.fail("zero ideal generator");
            if (f.has_constant_term()) c.fail("nonzero constant term in an ideal generator");
            if (!inst.ideal) inst.ideal.emplace();
            inst.ideal->gens.emplace_back(name, std::move(f));
        } else {
            c.fail("unknown directive '" + head + "'");
        }
    }
    if (phi.n == 0) throw ParseError(lineno + 1, 1, "missing 'n = ...' line");
    if (phi.branches.empty()) throw ParseError(lineno + 1, 1, "no branches given");
    return inst;
}

namespace {

std::string render_rat(const Rat& q) { return q.get_str(); }

std::string render_poly(const Poly& p, const std::string& var)
{
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        Rat a = abs(c);
        bool neg = sgn(c) < 0;
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        first = false;
        std::string factors;
        if (e >= 1) factors = e == 1 ? var : var + "^" + std::to_string(e);
        if (factors.empty())
            out += render_rat(a);
        else if (a == 1)
            out += factors;
        else
            out += render_rat(a) + " " + factors;
    }
    return out;
}

std::string render_xpoly(const XPoly& f)
{
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [alpha, c] : f.terms()) {
        Rat a = abs(c);
        bool neg = sgn(c) < 0;
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        first = false;
        std::string factors;
        for (size_t j = 0; j < alpha.size(); ++j) {
            if (alpha[j] == 0) continue;
            if (!factors.empty()) factors += " ";
            factors += "x" + std::to_string(j + 1);
            if (alpha[j] > 1) factors += "^" + std::to_string(alpha[j]);
        }
        if (factors.empty())
            out += render_rat(a);
        else if (a == 1)
            out += factors;
        else
            out += render_rat(a) + " " + factors;
    }
    return out;
}

} // namespace

std::string render_instance(const ProblemInstance& instance)
{
    std::string out = "n = " + std::to_string(instance.phi.n) + "\n";
    for (const auto& br : instance.phi.branches) {
        out += "branch " + br.name + " (" + br.param + "):";
        for (int j = 0; j < instance.phi.n; ++j) {
            out += std::string(j == 0 ? " " : ", ") + "x" + std::to_string(j + 1) + " = " +
                   render_poly(br.coord[static_cast<size_t>(j)], br.param);
        }
        out += "\n";
    }
    if (instance.ideal)
        for (const auto& [name, f] : instance.ideal->gens) out += "ideal: " + name + " = " + render_xpoly(f) + "\n";
    return out;
}

namespace {

json entry(const std::optional<long>& value, CertStatus status, const std::string& method)
{
    json e;
    if (value)
        e["value"] = *value;
    else
        e["value"] = nullptr;
    e["status"] = to_string(status);
    e["method"] = method;
    return e;
}

json entry_bool(bool value, CertStatus status, const std::string& method)
{
    json e;
    e["value"] = value;
    e["status"] = to_string(status);
    e["method"] = method;
    return e;
}

std::string render_json(const RunOutcome& o)
{
    const InvariantRecord& rec = o.record;
    const bool have_inv = rec.status_delta == CertStatus::Certified;
    const bool have_cot = o.cotangent.has_value();
    CertStatus inv_st = rec.status_delta;
    CertStatus cot_st = have_cot ? CertStatus::Certified : CertStatus::NotApplicable;

    json doc;
    doc["classification"] = to_string(o.classification);
    doc["finiteness"] = o.classification != Classification::NotFinitelyDetermined;
    if (!o.rejection_reason.empty()) doc["reason"] = o.rejection_reason;
    doc["exit_code"] = o.exit_code;
    doc["branches"] = rec.r;
    doc["ambient_dim"] = rec.n;
    doc["delta"] = entry(have_inv ? std::optional<long>(rec.delta) : std::nullopt, inv_st,
                         "conductor-certified jet saturation");
    doc["mult"] = entry(rec.mt > 0 ? std::optional<long>(rec.mt) : std::nullopt,
                        rec.mt > 0 ? CertStatus::Certified : CertStatus::NotApplicable,
                        "minimal coordinate orders");
    doc["milnor"] = entry(have_inv ? std::optional<long>(rec.mu) : std::nullopt, inv_st, "2 delta - r + 1");
    doc["conductor_degree"] = entry(have_inv ? std::optional<long>(rec.conductor_degree) : std::nullopt, inv_st,
                                    "certified pure window");
    doc["m1"] = entry(have_inv && rec.m1 >= 0 ? std::optional<long>(rec.m1) : std::nullopt, rec.status_m1,
                      "liftable derivation system on the conductor window");
    doc["deligne_e"] = entry(have_inv && rec.m1 >= 0 ? std::optional<long>(rec.deligne_e) : std::nullopt,
                             rec.status_m1, "3 delta - m1");
    doc["ae_codim"] = entry(have_cot ? std::optional<long>(o.cotangent->ae_codim_oracle) : std::nullopt, cot_st,
                            "jet quotient, cross-checked against n delta - m1");
    doc["le_codim"] = entry(have_cot ? std::optional<long>(o.cotangent->le_codim) : std::nullopt, cot_st,
                            "omega-image codimension (= n delta)");
    doc["t1_par_dim"] = entry(have_cot ? std::optional<long>(o.cotangent->t1_par) : std::nullopt, cot_st,
                              "equals ae_codim");
    doc["t1_xbar_over_x_dim"] = entry(have_cot ? std::optional<long>(o.cotangent->t1_xbar_over_x) : std::nullopt,
                                      cot_st, "mt - r from the branchwise quotient");
    doc["gorenstein"] = entry_bool(rec.gorenstein, have_inv ? inv_st : CertStatus::NotApplicable, "c = 2 delta");
    doc["cm_type"] = entry(rec.cm_t, rec.cm_t ? CertStatus::Certified : CertStatus::NotApplicable,
                           "(O : m)/O window solve");
    if (rec.tjurina) doc["tjurina"] = entry(rec.tjurina, rec.status_tjurina, rec.tjurina_method);
    doc["base_dim"] = entry(have_cot ? std::optional<long>(o.cotangent->base_dim) : std::nullopt, cot_st,
                            "semi-universal base of the parametrization, n delta - m1");
    doc["quasihomogeneous"] = rec.quasihomogeneous;

    json chain;
    bool chain_fail = false;
    json chain_entries = json::array();
    for (const auto& e : o.checks) {
        if (e.name.rfind("chain:", 0) == 0) {
            chain_entries.push_back({{"name", e.name}, {"pass", e.pass}});
            if (!e.pass) chain_fail = true;
        }
    }
    if (!o.chain_applicable || chain_entries.empty()) {
        chain["value"] = "not-applicable";
        chain["status"] = to_string(CertStatus::NotApplicable);
    } else {
        chain["value"] = chain_fail ? "fail" : "pass";
        chain["status"] = to_string(CertStatus::Certified);
    }
    chain["method"] = "certified invariants";
    chain["entries"] = chain_entries;
    doc["inequality_chain"] = chain;

    json checks = json::array();
    for (const auto& e : o.checks) checks.push_back({{"name", e.name}, {"pass", e.pass}, {"detail", e.detail}});
    doc["checks"] = checks;

    if (o.braid) {
        const CiDims& d = o.braid->dims;
        json ci;
        ci["tau"] = d.tau;
        ci["t1_xbar_setminus_x"] = d.t1_xbar_setminus_x;
        ci["t2_xbar_setminus_x"] = d.t2_xbar_setminus_x;
        ci["t1_xbar_to_x"] = d.t1_xbar_to_x;
        ci["t2_xbar_to_x"] = d.t2_xbar_to_x;
        ci["t2_xbar_over_x"] = d.t2_xbar_over_x_direct;
        ci["dstar_rank"] = d.dstar_rank;
        doc["ci"] = ci;
    }

    json sgs = json::array();
    for (const auto& s : rec.semigroups) {
        json g;
        g["branch"] = s.branch;
        g["elements"] = s.elements;
        g["conductor"] = s.conductor;
        g["gcd"] = s.gcd;
        g["gaps"] = s.gaps();
        sgs.push_back(g);
    }
    doc["semigroups"] = sgs;
    doc["diagnostics"] = o.diagnostics;
    return doc.dump(2) + "\n";
}

std::string render_table(const RunOutcome& o)
{
    const InvariantRecord& rec = o.record;
    std::ostringstream out;
    out << "classification: " << to_string(o.classification) << "\n";
    if (!o.rejection_reason.empty()) out << "reason: " << o.rejection_reason << "\n";
    out << "branches r = " << rec.r << ", ambient n = " << rec.n << "\n";
    auto line = [&](const std::string& name, const std::string& val, const std::string& status) {
        out << "  " << name;
        for (size_t i = name.size(); i < 22; ++i) out << ' ';
        out << "= " << val << "  [" << status << "]\n";
    };
    if (rec.status_delta == CertStatus::Certified) {
        line("delta", std::to_string(rec.delta), to_string(rec.status_delta));
        line("mult", std::to_string(rec.mt), "certified");
        line("milnor", std::to_string(rec.mu), to_string(rec.status_delta));
        line("conductor degree", std::to_string(rec.conductor_degree), to_string(rec.status_delta));
        if (rec.m1 >= 0) {
            line("m1", std::to_string(rec.m1), to_string(rec.status_m1));
            line("deligne e", std::to_string(rec.deligne_e), to_string(rec.status_m1));
        }
        line("gorenstein", rec.gorenstein ? "yes" : "no", "certified");
        line("cm type", rec.cm_t ? std::to_string(*rec.cm_t) : "-", rec.cm_t ? "certified" : "not-applicable");
        if (rec.tjurina) line("tjurina", std::to_string(*rec.tjurina), to_string(rec.status_tjurina));
    }
    if (o.cotangent) {
        const CotangentDims& d = *o.cotangent;
        line("ae codim", std::to_string(d.ae_codim_oracle), "certified");
        line("le codim", std::to_string(d.le_codim), "certified");
        line("t1 parametrization", std::to_string(d.t1_par), "certified");
        line("t1 Xbar over X", std::to_string(d.t1_xbar_over_x), "certified");
        line("base dim", std::to_string(d.base_dim), "certified");
    }
    if (o.braid) {
        const CiDims& d = o.braid->dims;
        line("t1 Xbar\\X", std::to_string(d.t1_xbar_setminus_x), "certified");
        line("t2 Xbar\\X", std::to_string(d.t2_xbar_setminus_x), "certified");
        line("t1 Xbar->X", std::to_string(d.t1_xbar_to_x), "certified");
        line("t2 Xbar->X", std::to_string(d.t2_xbar_to_x), "certified");
        line("t2 Xbar/X", std::to_string(d.t2_xbar_over_x_direct), "certified");
    }
    if (!o.checks.empty()) {
        out << "checks:\n";
        for (const auto& e : o.checks) {
            out << "  " << (e.pass ? "pass  " : "FAIL  ") << e.name;
            if (!e.detail.empty()) out << " (" << e.detail << ")";
            out << "\n";
        }
    }
    for (const auto& d : o.diagnostics) out << "note: " << d << "\n";
    out << "exit: " << o.exit_code << "\n";
    return out.str();
}

} // namespace

std::string render_report(const RunOutcome& outcome, ReportFormat format)
{
    return format == ReportFormat::Json ? render_json(outcome) : render_table(outcome);
}

} // namespace germinv
