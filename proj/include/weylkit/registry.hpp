#pragma once

#include <atomic>
#include <chrono>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "weylkit/embedding.hpp"

namespace weylkit {

/// One row of the classification-table registry: parameterized weight
/// templates for delta and lambda plus the binder ranges needed to
/// instantiate them.  `expect_mf` is false for encoded negative controls.
struct TableEntry {
    struct Binder {
        std::string var;
        std::string lo, hi;  // integer expressions; hi empty = open-ended
        bool after_delta = false;
    };
    std::string table_id;
    std::vector<Binder> binders;
    std::string delta_expr;
    std::string lambda_expr;
    bool expect_mf = true;
    std::string note;
    int line_no = 0;
};

struct registry_parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

struct domain_drop : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Env = std::map<std::string, Int>;

// iexpr := ['-'] atom (('+'|'-') atom)*     atom := INT | IDENT
inline Int eval_iexpr(const std::string& s, const Env& env, int line_no) {
    std::size_t p = 0;
    auto skip = [&] { while (p < s.size() && s[p] == ' ') ++p; };
    auto atom = [&]() -> Int {
        skip();
        if (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) {
            Int v = 0;
            while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) v = v * 10 + (s[p++] - '0');
            return v;
        }
        std::string id;
        while (p < s.size() && std::isalpha(static_cast<unsigned char>(s[p]))) id += s[p++];
        if (id.empty())
            throw registry_parse_error("line " + std::to_string(line_no) + ": bad expression '" + s + "'");
        auto it = env.find(id);
        if (it == env.end())
            throw registry_parse_error("line " + std::to_string(line_no) + ": unbound variable '" + id + "'");
        return it->second;
    };
    skip();
    Int sign = 1;
    if (p < s.size() && s[p] == '-') {
        sign = -1;
        ++p;
    }
    Int v = sign * atom();
    for (;;) {
        skip();
        if (p >= s.size()) return v;
        char op = s[p];
        if (op != '+' && op != '-')
            throw registry_parse_error("line " + std::to_string(line_no) + ": bad expression '" + s + "'");
        ++p;
        Int a = atom();
        v = op == '+' ? v + a : v - a;
    }
}

// wexpr := term ('+' term)*   term := [(INT|IDENT) '*'] ('w'|'L') '(' iexpr ')'
inline std::vector<Int> eval_wexpr(const std::string& s, char base, Int count, const Env& env, int line_no) {
    std::vector<Int> coeffs(count, 0);
    std::size_t p = 0;
    auto skip = [&] { while (p < s.size() && s[p] == ' ') ++p; };
    auto fail = [&](const std::string& why) {
        throw registry_parse_error("line " + std::to_string(line_no) + ": " + why + " in '" + s + "'");
    };
    for (;;) {
        skip();
        std::string tok;
        while (p < s.size() && (std::isalnum(static_cast<unsigned char>(s[p])))) tok += s[p++];
        skip();
        Int coef = 1;
        if (p < s.size() && s[p] == '*') {
            ++p;
            coef = eval_iexpr(tok, env, line_no);
            skip();
            tok.clear();
            while (p < s.size() && std::isalnum(static_cast<unsigned char>(s[p]))) tok += s[p++];
            skip();
        }
        if (tok.size() != 1 || tok[0] != base) fail(std::string("expected '") + base + "(index)'");
        if (p >= s.size() || s[p] != '(') fail("expected '('");
        ++p;
        std::string inner;
        int depth = 1;
        while (p < s.size() && depth > 0) {
            if (s[p] == '(') depth++;
            if (s[p] == ')') {
                depth--;
                if (depth == 0) break;
            }
            inner += s[p++];
        }
        if (p >= s.size()) fail("unbalanced parentheses");
        ++p;  // ')'
        Int idx = eval_iexpr(inner, env, line_no);
        if (idx < 1 || idx > count)
            throw domain_drop("index " + std::to_string(idx) + " outside 1.." + std::to_string(count));
        coeffs[idx - 1] += coef;
        skip();
        if (p >= s.size()) break;
        if (s[p] != '+') fail("expected '+' between terms");
        ++p;
    }
    return coeffs;
}

inline std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

}  // namespace detail

/// Parse the registry text: one `entry` per line, `#` comments.
inline std::vector<TableEntry> parse_registry(const std::string& text) {
    std::vector<TableEntry> out;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string t = detail::trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (t.rfind("entry ", 0) != 0)
            throw registry_parse_error("line " + std::to_string(line_no) + ": expected 'entry'");
        t = t.substr(6);
        std::vector<std::string> fields;
        std::size_t pos = 0;
        while (pos != std::string::npos) {
            std::size_t semi = t.find(';', pos);
            fields.push_back(detail::trim(semi == std::string::npos ? t.substr(pos) : t.substr(pos, semi - pos)));
            pos = semi == std::string::npos ? std::string::npos : semi + 1;
        }
        if (fields.empty() || fields[0].empty())
            throw registry_parse_error("line " + std::to_string(line_no) + ": missing table id");
        TableEntry e;
        e.table_id = fields[0];
        e.line_no = line_no;
        bool seen_delta = false, seen_lambda = false;
        for (std::size_t i = 1; i < fields.size(); ++i) {
            const std::string& f = fields[i];
            if (f.empty()) continue;
            std::size_t eq = f.find('=');
            if (eq == std::string::npos)
                throw registry_parse_error("line " + std::to_string(line_no) + ": field '" + f + "' lacks '='");
            std::string key = detail::trim(f.substr(0, eq));
            std::string val = detail::trim(f.substr(eq + 1));
            if (key == "delta") {
                e.delta_expr = val;
                seen_delta = true;
            } else if (key == "lambda") {
                e.lambda_expr = val;
                seen_lambda = true;
            } else if (key == "expect") {
                if (val == "nonmf") e.expect_mf = false;
                else if (val != "mf")
                    throw registry_parse_error("line " + std::to_string(line_no) + ": bad expect '" + val + "'");
            } else if (key == "note") {
                e.note = val;
            } else {
                TableEntry::Binder b;
                b.var = key;
                b.after_delta = seen_delta;
                std::size_t dots = val.find("..");
                if (dots == std::string::npos) {
                    b.lo = b.hi = val;
                } else {
                    b.lo = detail::trim(val.substr(0, dots));
                    b.hi = detail::trim(val.substr(dots + 2));
                }
                if (b.lo.empty())
                    throw registry_parse_error("line " + std::to_string(line_no) + ": bad range '" + val + "'");
                e.binders.push_back(std::move(b));
            }
        }
        if (!seen_delta || !seen_lambda)
            throw registry_parse_error("line " + std::to_string(line_no) + ": entry needs delta= and lambda=");
        bool has_l = false;
        for (auto& b : e.binders)
            if (b.var == "l" && !b.after_delta) has_l = true;
        if (!has_l)
            throw registry_parse_error("line " + std::to_string(line_no) + ": entry needs an 'l' binder before delta=");
        out.push_back(std::move(e));
    }
    return out;
}

struct VerifyBounds {
    Int l_max = 3;
    Int param_max = 3;         // caps the multiplicity parameters a, c, r, d
    Int guard = kDefaultGuard;  // weight-table entry cap per restriction
    std::set<std::string> tables;  // empty = all
    int jobs = 1;
};

struct InstanceResult {
    enum class Status { mf, non_mf, skipped_guard, dropped_domain, empty_entry, error };
    std::string table_id;
    int line_no = 0;
    std::string binding;
    std::string delta_str, lambda_str;
    Status status = Status::error;
    bool expect_mf = true;
    bool ok = false;  // verdict matches expectation (always true for skips)
    std::string detail;
};

struct VerificationReport {
    std::vector<InstanceResult> results;
    Int checked_positive = 0;
    Int checked_controls = 0;
    Int guard_skips = 0;
    Int domain_drops = 0;
    Int empty_entries = 0;
    Int failures = 0;
    bool pass = false;
    long long wall_ms = 0;
};

namespace detail {

inline const std::set<std::string> kMultParams = {"a", "c", "d", "r"};

struct Instance {
    const TableEntry* entry;
    Int l;
    DominantWeight delta{1, {0}};
    DominantWeight lambda{1, {0}};
    std::string binding;
};

/// Expand one entry into concrete (delta, lambda) instances under the
/// bounds.  Domain drops are reported through `dropped`.
inline void instantiate_entry(const TableEntry& e, const VerifyBounds& bounds, std::vector<Instance>& out,
                              std::vector<InstanceResult>& dropped) {
    Env env;
    auto binding_desc = [&](const Env& env) {
        std::string s;
        for (auto& [k, v] : env) {
            if (k == "n") continue;
            if (!s.empty()) s += ",";
            s += k + "=" + std::to_string(v);
        }
        return s;
    };
    auto push_drop = [&](const Env& env, const std::string& why) {
        InstanceResult r;
        r.table_id = e.table_id;
        r.line_no = e.line_no;
        r.binding = binding_desc(env);
        r.status = InstanceResult::Status::dropped_domain;
        r.expect_mf = e.expect_mf;
        r.ok = true;
        r.detail = why;
        dropped.push_back(std::move(r));
    };
    auto rec = [&](auto&& self, std::size_t bi, bool delta_done, Env& env) -> void {
        if (!delta_done && (bi == e.binders.size() || e.binders[bi].after_delta)) {
            // evaluate delta, bind n, continue with the remaining binders
            Int l = env.at("l");
            Int xrank = l + 1;
            std::vector<Int> dc;
            try {
                dc = eval_wexpr(e.delta_expr, 'w', xrank, env, e.line_no);
            } catch (const domain_drop& d) {
                push_drop(env, std::string("delta: ") + d.what());
                return;
            }
            for (Int x : dc)
                if (x < 0)
                    throw registry_parse_error("line " + std::to_string(e.line_no) +
                                               ": delta template produced a negative coefficient");
            DominantWeight delta(xrank, dc);
            // the classification excludes the (dual) natural and trivial W
            if (delta.is_zero() || delta == DominantWeight::fundamental(xrank, 1) ||
                delta == DominantWeight::fundamental(xrank, xrank)) {
                push_drop(env, "delta degenerates to a natural or trivial module");
                return;
            }
            BigInt dimW = weyl_dim(delta);
            if (dimW > bounds.guard) {
                InstanceResult r;
                r.table_id = e.table_id;
                r.line_no = e.line_no;
                r.binding = binding_desc(env);
                r.delta_str = delta.to_string();
                r.status = InstanceResult::Status::skipped_guard;
                r.expect_mf = e.expect_mf;
                r.ok = true;
                r.detail = "dim W = " + dimW.str() + " exceeds guard";
                dropped.push_back(std::move(r));
                return;
            }
            env["n"] = static_cast<Int>(dimW - 1);
            self(self, bi, true, env);
            env.erase("n");
            return;
        }
        if (bi == e.binders.size()) {
            Int l = env.at("l");
            Int xrank = l + 1;
            Int n = env.at("n");
            std::vector<Int> dc = eval_wexpr(e.delta_expr, 'w', xrank, env, e.line_no);
            std::vector<Int> lc;
            try {
                lc = eval_wexpr(e.lambda_expr, 'L', n, env, e.line_no);
            } catch (const domain_drop& d) {
                push_drop(env, std::string("lambda: ") + d.what());
                return;
            }
            for (Int x : lc)
                if (x < 0)
                    throw registry_parse_error("line " + std::to_string(e.line_no) +
                                               ": lambda template produced a negative coefficient");
            DominantWeight lambda(n, lc);
            if (lambda.is_zero()) {
                push_drop(env, "lambda is zero");
                return;
            }
            Instance inst;
            inst.entry = &e;
            inst.l = l;
            inst.delta = DominantWeight(xrank, dc);
            inst.lambda = lambda;
            inst.binding = binding_desc(env);
            out.push_back(std::move(inst));
            return;
        }
        const auto& b = e.binders[bi];
        Int lo = eval_iexpr(b.lo, env, e.line_no);
        Int hi = b.hi.empty() ? std::numeric_limits<Int>::max() : eval_iexpr(b.hi, env, e.line_no);
        if (b.var == "l") hi = std::min(hi, bounds.l_max);
        if (kMultParams.count(b.var)) hi = std::min(hi, bounds.param_max);
        for (Int v = lo; v <= hi; ++v) {
            env[b.var] = v;
            self(self, bi + 1, delta_done, env);
            env.erase(b.var);
        }
    };
    rec(rec, 0, false, env);
}

}  // namespace detail

/// Verify every registry entry within the bounds: positive rows must
/// restrict multiplicity-freely ("up to duals": the dual pair is accepted
/// when the direct check fails), negative controls must not.
inline VerificationReport verify_tables(const std::vector<TableEntry>& entries, const VerifyBounds& bounds = {}) {
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;

    std::vector<detail::Instance> instances;
    for (const auto& e : entries) {
        if (!bounds.tables.empty() && !bounds.tables.count(e.table_id)) continue;
        std::vector<InstanceResult> dropped;
        std::size_t before = instances.size();
        detail::instantiate_entry(e, bounds, instances, dropped);
        for (auto& d : dropped) {
            if (d.status == InstanceResult::Status::skipped_guard) rep.guard_skips++;
            else rep.domain_drops++;
            rep.results.push_back(std::move(d));
        }
        if (instances.size() == before && dropped.empty()) {
            InstanceResult r;
            r.table_id = e.table_id;
            r.line_no = e.line_no;
            r.status = InstanceResult::Status::empty_entry;
            r.expect_mf = e.expect_mf;
            r.ok = true;
            r.detail = "no instances within bounds";
            rep.empty_entries++;
            rep.results.push_back(std::move(r));
        }
    }

    std::vector<InstanceResult> verdicts(instances.size());
    std::mutex cache_mutex;
    std::map<std::pair<Int, std::vector<Int>>, std::shared_ptr<Embedding>> cache;
    auto embedding_for = [&](Int l, const DominantWeight& delta) {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto key = std::make_pair(l, delta.coeffs);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        auto e = std::make_shared<Embedding>(build_embedding(l, delta, bounds.guard));
        cache.emplace(key, e);
        return e;
    };

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= instances.size()) return;
            const auto& inst = instances[i];
            InstanceResult r;
            r.table_id = inst.entry->table_id;
            r.line_no = inst.entry->line_no;
            r.binding = inst.binding;
            r.delta_str = inst.delta.to_string();
            r.lambda_str = inst.lambda.to_string();
            r.expect_mf = inst.entry->expect_mf;
            try {
                auto emb = embedding_for(inst.l, inst.delta);
                MFReport m = is_multiplicity_free(*emb, inst.lambda, bounds.guard);
                bool mf = m.is_mf;
                if (!mf && r.expect_mf) {
                    // tables are stated up to duals
                    auto demb = embedding_for(inst.l, dual_weight(inst.delta));
                    MFReport md = is_multiplicity_free(*demb, dual_weight(inst.lambda), bounds.guard);
                    if (md.is_mf) {
                        mf = true;
                        r.detail = "accepted via the dual pair";
                    }
                }
                r.status = mf ? InstanceResult::Status::mf : InstanceResult::Status::non_mf;
                r.ok = mf == r.expect_mf;
                if (!mf && r.detail.empty())
                    r.detail = "max multiplicity " + std::to_string(m.max_multiplicity);
            } catch (const guard_error& g) {
                r.status = InstanceResult::Status::skipped_guard;
                r.ok = true;
                r.detail = g.what();
            } catch (const std::exception& ex) {
                r.status = InstanceResult::Status::error;
                r.ok = false;
                r.detail = ex.what();
            }
            verdicts[i] = std::move(r);
        }
    };
    int jobs = std::max(1, bounds.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    for (auto& r : verdicts) {
        switch (r.status) {
            case InstanceResult::Status::mf:
            case InstanceResult::Status::non_mf:
                (r.expect_mf ? rep.checked_positive : rep.checked_controls)++;
                if (!r.ok) rep.failures++;
                break;
            case InstanceResult::Status::skipped_guard:
                rep.guard_skips++;
                break;
            case InstanceResult::Status::error:
                rep.failures++;
                break;
            default:
                break;
        }
        rep.results.push_back(std::move(r));
    }
    rep.pass = rep.failures == 0;
    rep.wall_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

/// The registry shipped in the binary.  Tables T1-T4 and the A2An table hold
/// the positive classification rows; `expect=nonmf` rows are known
/// non-MF controls guarding against silent over-acceptance.
inline const char* builtin_registry_text() {
    return R"REG(# weylkit built-in classification registry
# entry <table> ; binders ; delta=<w-template> ; lambda=<L-template> [; expect=nonmf]
# X = A_{l+1}; w(i) are fundamental weights of X, L(i) of Y = SL(V(delta)).
# Binder variables: l plus mult params a,c,d,r (desk-capped) and index params i,j.

# ---- Table 1: two-support delta ----
entry T1 ; l=1.. ; c=1.. ; i=2..l+1 ; delta=w(1)+c*w(i) ; lambda=2*L(1)
entry T1 ; l=1.. ; c=1.. ; i=2..l+1 ; delta=w(1)+c*w(i) ; lambda=L(2)
entry T1 ; l=1.. ; c=1.. ; i=2..l+1 ; delta=c*w(1)+w(i) ; lambda=2*L(1)
entry T1 ; l=1.. ; c=1.. ; i=2..l+1 ; delta=c*w(1)+w(i) ; lambda=L(2)
entry T1 ; l=1.. ; c=1.. ; i=1..l ; delta=w(i)+c*w(i+1) ; lambda=2*L(1)
entry T1 ; l=1.. ; c=1.. ; i=1..l ; delta=w(i)+c*w(i+1) ; lambda=L(2)
entry T1 ; l=1.. ; c=1.. ; i=1..l ; delta=c*w(i)+w(i+1) ; lambda=2*L(1)
entry T1 ; l=1.. ; c=1.. ; i=1..l ; delta=c*w(i)+w(i+1) ; lambda=L(2)
entry T1 ; l=1.. ; delta=2*w(1)+2*w(l+1) ; lambda=L(2)
entry T1 ; l=1.. ; delta=2*w(1)+2*w(2) ; lambda=L(2)
entry T1 ; l=2.. ; delta=w(2)+w(l) ; lambda=L(2)
entry T1 ; l=3.. ; delta=w(2)+w(4) ; lambda=L(2)
entry T1 ; l=1.. ; delta=w(1)+w(l+1) ; lambda=L(3)
entry T1 ; l=1..1 ; delta=w(1)+w(2) ; lambda=3*L(1)

# ---- Table 2: single-support delta, L(lambda) >= 2 ----
entry T2 ; l=1.. ; c=1.. ; i=1..l+1 ; delta=c*w(i) ; lambda=L(1)+L(n)
entry T2 ; l=1.. ; i=2..7 ; delta=2*w(1) ; lambda=L(1)+L(i)
entry T2 ; l=2.. ; i=2..7 ; delta=w(2) ; lambda=L(1)+L(i)
entry T2 ; l=1.. ; i=2..7 ; delta=2*w(1) ; lambda=L(1)+L(n+2-i)
entry T2 ; l=2.. ; i=2..7 ; delta=w(2) ; lambda=L(1)+L(n+2-i)
entry T2 ; l=1.. ; delta=2*w(1) ; lambda=L(2)+L(3)
entry T2 ; l=2.. ; delta=w(2) ; lambda=L(2)+L(3)
entry T2 ; l=1.. ; delta=2*w(1) ; lambda=2*L(1)+L(n)
entry T2 ; l=2.. ; delta=w(2) ; lambda=2*L(1)+L(n)
entry T2 ; l=1.. ; delta=2*w(1) ; lambda=3*L(1)+L(n)
entry T2 ; l=2.. ; delta=w(2) ; lambda=3*L(1)+L(n)
entry T2 ; l=1.. ; delta=2*w(1) ; lambda=L(2)+L(n-1)
entry T2 ; l=2.. ; delta=w(2) ; lambda=L(2)+L(n-1)
entry T2 ; l=1.. ; delta=2*w(1) ; lambda=2*L(1)+L(2)
entry T2 ; l=2.. ; delta=w(2) ; lambda=2*L(1)+L(2)
entry T2 ; l=1.. ; delta=2*w(1) ; lambda=3*L(1)+L(2)
entry T2 ; l=2.. ; delta=w(2) ; lambda=3*L(1)+L(2)
entry T2 ; l=1.. ; delta=3*w(1) ; lambda=L(1)+L(2)
entry T2 ; l=2.. ; delta=w(3) ; lambda=L(1)+L(2)

# ---- Table 3: single-support delta and lambda ----
entry T3 ; l=1.. ; c=1.. ; i=1..l+1 ; delta=c*w(i) ; lambda=2*L(1)
entry T3 ; l=1.. ; c=1.. ; i=1..l+1 ; delta=c*w(i) ; lambda=L(2)
entry T3 ; l=1.. ; c=1..6 ; delta=c*w(1) ; lambda=L(3)
entry T3 ; l=1.. ; i=2..6 ; delta=w(i) ; lambda=L(3)
entry T3 ; l=1.. ; delta=2*w(2) ; lambda=L(3)
entry T3 ; l=1.. ; c=1..4 ; delta=c*w(1) ; lambda=L(4)
entry T3 ; l=1.. ; i=2..4 ; delta=w(i) ; lambda=L(4)
entry T3 ; l=1.. ; c=1..3 ; delta=c*w(1) ; lambda=L(5)
entry T3 ; l=1.. ; delta=w(2) ; lambda=L(5)
entry T3 ; l=1.. ; delta=2*w(1) ; i=6..n ; lambda=L(i)
entry T3 ; l=2.. ; delta=w(2) ; i=6..n ; lambda=L(i)
entry T3 ; l=1.. ; c=1..5 ; delta=c*w(1) ; lambda=3*L(1)
entry T3 ; l=1.. ; i=2..5 ; delta=w(i) ; lambda=3*L(1)
entry T3 ; l=1.. ; c=1..3 ; delta=c*w(1) ; lambda=4*L(1)
entry T3 ; l=1.. ; i=2..3 ; delta=w(i) ; lambda=4*L(1)
entry T3 ; l=1.. ; delta=2*w(1) ; lambda=5*L(1)
entry T3 ; l=1.. ; i=2..3 ; delta=w(i) ; lambda=5*L(1)
entry T3 ; l=1.. ; c=6.. ; delta=2*w(1) ; lambda=c*L(1)
entry T3 ; l=2.. ; c=6.. ; delta=w(2) ; lambda=c*L(1)
entry T3 ; l=1.. ; delta=2*w(1) ; lambda=2*L(2)
entry T3 ; l=2.. ; delta=w(2) ; lambda=2*L(2)
entry T3 ; l=1.. ; delta=2*w(1) ; lambda=3*L(2)
entry T3 ; l=2.. ; delta=w(2) ; lambda=3*L(2)

# ---- Table 4: exceptional low-rank blocks ----
entry T4 ; l=0..0 ; a=1.. ; delta=2*w(1) ; lambda=a*L(1)+L(2)
entry T4 ; l=0..0 ; delta=3*w(1) ; lambda=5*L(1)
entry T4 ; l=0..0 ; delta=7*w(1) ; lambda=L(3)
entry T4 ; l=2..2 ; a=1.. ; delta=w(2) ; i=1..n ; lambda=a*L(i)
entry T4 ; l=2..2 ; a=1.. ; delta=w(2) ; i=1..n ; j=1..n ; lambda=a*L(i)+L(j)
entry T4 ; l=2..2 ; delta=w(2) ; lambda=L(1)+L(2)+L(3)
entry T4 ; l=2..2 ; delta=w(2) ; lambda=L(1)+L(2)+L(5)
entry T4 ; l=3..3 ; a=1.. ; delta=w(2) ; lambda=a*L(1)+L(9)
entry T4 ; l=3..3 ; a=1.. ; delta=w(2) ; lambda=a*L(1)+L(2)
entry T4 ; l=3..3 ; delta=w(2) ; lambda=4*L(2)
entry T4 ; l=3..3 ; delta=w(2) ; lambda=5*L(2)
entry T4 ; l=3..3 ; delta=w(2) ; lambda=L(1)+2*L(2)
entry T4 ; l=3..3 ; delta=w(2) ; lambda=2*L(3)
entry T4 ; l=3..3 ; delta=w(2) ; lambda=2*L(4)
entry T4 ; l=4..4 ; delta=w(3) ; i=1..n ; lambda=L(i)
entry T4 ; l=4..4 ; delta=w(3) ; lambda=L(1)+L(18)
entry T4 ; l=5..5 ; delta=w(3) ; lambda=L(5)
entry T4 ; l=5..5 ; delta=w(3) ; lambda=L(6)
entry T4 ; l=6..6 ; delta=w(3) ; lambda=L(5)
entry T4 ; l=12..12 ; delta=w(7) ; lambda=L(3)

# ---- A2 with delta = r omega_1 ----
entry A2An ; l=1..1 ; r=2.. ; delta=r*w(1) ; lambda=L(2)
entry A2An ; l=1..1 ; r=2.. ; delta=r*w(1) ; lambda=2*L(1)
entry A2An ; l=1..1 ; r=2.. ; delta=r*w(1) ; lambda=L(1)+L(n)
entry A2An ; l=1..1 ; r=2..6 ; delta=r*w(1) ; lambda=L(3)
entry A2An ; l=1..1 ; r=2..5 ; delta=r*w(1) ; lambda=3*L(1)
entry A2An ; l=1..1 ; r=2..4 ; delta=r*w(1) ; lambda=L(4)
entry A2An ; l=1..1 ; r=2..3 ; delta=r*w(1) ; i=1..n ; lambda=L(i)
entry A2An ; l=1..1 ; r=2..3 ; delta=r*w(1) ; lambda=4*L(1)
entry A2An ; l=1..1 ; r=2..3 ; delta=r*w(1) ; lambda=L(1)+L(2)
entry A2An ; l=1..1 ; a=1.. ; delta=2*w(1) ; lambda=a*L(1)
entry A2An ; l=1..1 ; delta=2*w(1) ; i=1..n ; j=i+1..n ; lambda=L(i)+L(j)
entry A2An ; l=1..1 ; delta=2*w(1) ; lambda=2*L(2)
entry A2An ; l=1..1 ; delta=2*w(1) ; lambda=3*L(2)
entry A2An ; l=1..1 ; delta=2*w(1) ; lambda=2*L(1)+L(5)
entry A2An ; l=1..1 ; delta=2*w(1) ; lambda=3*L(1)+L(5)
entry A2An ; l=1..1 ; delta=2*w(1) ; lambda=2*L(1)+L(2)
entry A2An ; l=1..1 ; delta=2*w(1) ; lambda=3*L(1)+L(2)

# ---- negative controls ----
entry T4 ; l=2..2 ; d=2.. ; delta=w(2) ; lambda=d*L(1)+L(2)+L(3) ; expect=nonmf
entry T4 ; l=2..2 ; d=2.. ; delta=w(2) ; lambda=L(1)+d*L(2)+L(3) ; expect=nonmf
entry T4 ; l=2..2 ; c=2.. ; delta=w(2) ; lambda=L(1)+L(2)+c*L(3) ; expect=nonmf
entry A2An ; l=1..1 ; delta=2*w(1) ; lambda=L(1)+2*L(2) ; expect=nonmf
entry A2An ; l=1..1 ; delta=2*w(1) ; lambda=L(1)+2*L(4) ; expect=nonmf
entry A2An ; l=1..1 ; delta=2*w(1) ; lambda=2*L(1)+L(4) ; expect=nonmf
entry A2An ; l=1..1 ; delta=3*w(1) ; lambda=5*L(1) ; expect=nonmf
entry A2An ; l=1..1 ; delta=3*w(1) ; lambda=2*L(1)+L(9) ; expect=nonmf
entry A2An ; l=1..1 ; delta=3*w(1) ; lambda=2*L(1)+2*L(9) ; expect=nonmf
entry A2An ; l=1..1 ; delta=3*w(1) ; lambda=L(1)+L(3) ; expect=nonmf
entry A2An ; l=1..1 ; delta=3*w(1) ; lambda=L(2)+L(3) ; expect=nonmf
entry A2An ; l=1..1 ; delta=3*w(1) ; lambda=L(2)+L(9) ; expect=nonmf
entry A2An ; l=1..1 ; r=4..4 ; delta=r*w(1) ; lambda=L(5) ; expect=nonmf
entry A2An ; l=1..1 ; r=4..4 ; delta=r*w(1) ; lambda=4*L(1) ; expect=nonmf
entry A2An ; l=1..1 ; r=5..5 ; delta=r*w(1) ; lambda=L(4) ; expect=nonmf
entry A2An ; l=1..1 ; r=5..5 ; delta=r*w(1) ; lambda=4*L(1) ; expect=nonmf
entry A2An ; l=1..1 ; r=7..7 ; delta=r*w(1) ; lambda=L(3) ; expect=nonmf
entry T1 ; l=1..1 ; delta=2*w(1)+2*w(2) ; lambda=2*L(1) ; expect=nonmf
entry T1 ; l=1..1 ; delta=3*w(1)+2*w(2) ; lambda=L(2) ; expect=nonmf
)REG";
}

inline std::string report_text(const VerificationReport& rep) {
    std::string s;
    auto status_name = [](InstanceResult::Status st) {
        switch (st) {
            case InstanceResult::Status::mf: return "MF";
            case InstanceResult::Status::non_mf: return "non-MF";
            case InstanceResult::Status::skipped_guard: return "SKIP(guard)";
            case InstanceResult::Status::dropped_domain: return "SKIP(domain)";
            case InstanceResult::Status::empty_entry: return "SKIP(empty)";
            default: return "ERROR";
        }
    };
    for (auto& r : rep.results) {
        s += (r.ok ? "  ok  " : " FAIL ");
        s += "[" + r.table_id + " line " + std::to_string(r.line_no) + "] ";
        if (!r.binding.empty()) s += r.binding + " ";
        if (!r.delta_str.empty()) s += "delta=" + r.delta_str + " ";
        if (!r.lambda_str.empty()) s += "lambda=" + r.lambda_str + " ";
        s += status_name(r.status);
        if (!r.expect_mf) s += " (control)";
        if (!r.detail.empty()) s += " -- " + r.detail;
        s += "\n";
    }
    s += "positive entries checked: " + std::to_string(rep.checked_positive) + "\n";
    s += "negative controls checked: " + std::to_string(rep.checked_controls) + "\n";
    s += "guard skips: " + std::to_string(rep.guard_skips) + ", domain drops: " + std::to_string(rep.domain_drops) +
         ", empty entries: " + std::to_string(rep.empty_entries) + "\n";
    s += "failures: " + std::to_string(rep.failures) + "\n";
    s += rep.pass ? "RESULT: PASS\n" : "RESULT: FAIL\n";
    return s;
}

}  // namespace weylkit
