#pragma once

/// @file cnf.hpp
/// Monotone sided CNF formulas: variables live on a line in a fixed order,
/// each clause is entirely positive or entirely negative, positive clauses
/// are drawn on the left of the line and negative clauses on the right,
/// and same-side clauses must be nestable without crossings. The clause
/// list order is the embedding witness: for each variable, its occurrences
/// attach in clause-list order.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "solochess/geometry.hpp"

namespace solochess {

struct CnfError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct MonotoneClause {
    bool positive = true;
    std::vector<int> vars;  // 1-based, strictly increasing

    bool operator==(const MonotoneClause& o) const {
        return positive == o.positive && vars == o.vars;
    }
};

struct MonotoneCnf {
    int n = 0;                           // variables 1..n in line order
    std::vector<MonotoneClause> clauses; // embedding witness order

    void validate(int max_clause_size = 3, int max_literal_occurrences = 2) const {
        if (n < 0) throw CnfError("negative variable count");
        std::vector<int> pos_occ(static_cast<std::size_t>(n) + 1, 0);
        std::vector<int> neg_occ(static_cast<std::size_t>(n) + 1, 0);
        for (const auto& c : clauses) {
            if (c.vars.empty()) throw CnfError("empty clause");
            if (static_cast<int>(c.vars.size()) > max_clause_size)
                throw CnfError("clause too large");
            for (std::size_t i = 0; i < c.vars.size(); ++i) {
                int v = c.vars[i];
                if (v < 1 || v > n) throw CnfError("clause variable out of range");
                if (i > 0 && c.vars[i] <= c.vars[i - 1])
                    throw CnfError("clause variables must be strictly increasing");
                (c.positive ? pos_occ : neg_occ)[static_cast<std::size_t>(v)]++;
            }
        }
        for (int v = 1; v <= n; ++v) {
            if (pos_occ[static_cast<std::size_t>(v)] > max_literal_occurrences ||
                neg_occ[static_cast<std::size_t>(v)] > max_literal_occurrences)
                throw CnfError("literal occurs too often");
        }
        // sidedness: same-side clause spans may nest or touch, never cross
        for (std::size_t i = 0; i < clauses.size(); ++i) {
            for (std::size_t j = i + 1; j < clauses.size(); ++j) {
                if (clauses[i].positive != clauses[j].positive) continue;
                int a = clauses[i].vars.front(), b = clauses[i].vars.back();
                int c = clauses[j].vars.front(), d = clauses[j].vars.back();
                bool cross = (a < c && c < b && b < d) || (c < a && a < d && d < b);
                if (cross) throw CnfError("same-side clauses cross in the embedding");
            }
        }
    }

    bool operator==(const MonotoneCnf& o) const { return n == o.n && clauses == o.clauses; }
};

/// Truth-table satisfiability; fine through a couple dozen variables.
inline bool truth_table_satisfiable(const MonotoneCnf& f) {
    if (f.n > 24) throw CnfError("too many variables for a truth table");
    for (std::uint64_t assign = 0; assign < (1ull << f.n); ++assign) {
        bool ok = true;
        for (const auto& c : f.clauses) {
            bool sat = false;
            for (int v : c.vars) {
                bool val = (assign >> (v - 1)) & 1;
                sat = sat || (c.positive ? val : !val);
            }
            if (!sat) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return f.clauses.empty();
}

inline bool satisfies(const MonotoneCnf& f, const std::vector<bool>& assignment) {
    for (const auto& c : f.clauses) {
        bool sat = false;
        for (int v : c.vars) {
            bool val = assignment[static_cast<std::size_t>(v - 1)];
            sat = sat || (c.positive ? val : !val);
        }
        if (!sat) return false;
    }
    return true;
}

/// Text format: "p msat <n>" then one clause per line, "pos v v v" or
/// "neg v v v", in embedding order. '#' starts a comment.
inline MonotoneCnf parse_cnf_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    MonotoneCnf f;
    bool header = false;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;
        if (word == "p") {
            std::string kind;
            ls >> kind >> f.n;
            if (kind != "msat" || !ls) throw CnfError("bad header line");
            header = true;
        } else if (word == "pos" || word == "neg") {
            if (!header) throw CnfError("clause before header");
            MonotoneClause c;
            c.positive = word == "pos";
            int v;
            while (ls >> v) c.vars.push_back(v);
            std::sort(c.vars.begin(), c.vars.end());
            f.clauses.push_back(std::move(c));
        } else {
            throw CnfError("unrecognized line: " + line);
        }
    }
    if (!header) throw CnfError("missing header");
    return f;
}

inline std::string serialize_cnf_text(const MonotoneCnf& f) {
    std::ostringstream out;
    out << "p msat " << f.n << "\n";
    for (const auto& c : f.clauses) {
        out << (c.positive ? "pos" : "neg");
        for (int v : c.vars) out << " " << v;
        out << "\n";
    }
    return out.str();
}

namespace detail {

/// Occurrence bookkeeping for one original variable: clause indexes that
/// contain it, per sign, in witness order.
struct VarOccurrences {
    std::vector<std::size_t> negative, positive;
};

}  // namespace detail

/// Rewrites the formula so that every literal occurs at most twice and
/// every variable at most three times, preserving satisfiability, variable
/// line order, and sidedness. Each variable x with n negative and m
/// positive occurrences becomes chains x_1..x_(n+m) and y_1..y_(n+m-1)
/// with linking clauses (x_i or y_i) and (not y_i or not x_(i+1)); the
/// k-th negative occurrence is replaced by not x_k and the j-th positive
/// occurrence by x_(n+j). Variables occurring with only one sign are
/// eliminated first (they can always be satisfied).
inline MonotoneCnf reduce_occurrences(const MonotoneCnf& f_in) {
    MonotoneCnf f = f_in;
    f.validate(3, 1 << 20);  // input may exceed the target occurrence bounds

    // drop pure variables and the clauses they satisfy, repeatedly
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> pos(static_cast<std::size_t>(f.n) + 1, 0),
            neg(static_cast<std::size_t>(f.n) + 1, 0);
        for (const auto& c : f.clauses)
            for (int v : c.vars) (c.positive ? pos : neg)[static_cast<std::size_t>(v)]++;
        for (int v = 1; v <= f.n; ++v) {
            bool p = pos[static_cast<std::size_t>(v)] > 0, q = neg[static_cast<std::size_t>(v)] > 0;
            if (p == q) continue;  // both signs or unused
            std::vector<MonotoneClause> kept;
            for (const auto& c : f.clauses) {
                bool contains = std::find(c.vars.begin(), c.vars.end(), v) != c.vars.end();
                if (!(contains && c.positive == p)) kept.push_back(c);
            }
            f.clauses = std::move(kept);
            changed = true;
        }
    }

    // per-variable occurrence lists in attachment order: at each variable,
    // arcs ending here attach innermost-first, arcs starting here
    // outermost-first, with interior and unit attachments between. This is
    // the left-to-right order the planar drawing forces.
    std::vector<detail::VarOccurrences> occ(static_cast<std::size_t>(f.n) + 1);
    for (std::size_t ci = 0; ci < f.clauses.size(); ++ci) {
        for (int v : f.clauses[ci].vars) {
            auto& o = occ[static_cast<std::size_t>(v)];
            (f.clauses[ci].positive ? o.positive : o.negative).push_back(ci);
        }
    }
    auto attachment_order = [&](int v, std::vector<std::size_t>& list) {
        // equal spans nest too; the earlier-listed clause counts as outer
        auto rank = [&](std::size_t ci) {
            const auto& c = f.clauses[ci];
            int lo = c.vars.front(), hi = c.vars.back();
            int span = hi - lo;
            int pos = static_cast<int>(ci);
            if (span > 0 && hi == v) return std::make_tuple(0, span, -pos);  // ends: inner first
            if (span > 0 && lo == v) return std::make_tuple(2, -span, pos);  // starts: outer first
            return std::make_tuple(1, 0, 0);  // interior or unit clause
        };
        std::stable_sort(list.begin(), list.end(),
                         [&](std::size_t a, std::size_t b) { return rank(a) < rank(b); });
    };
    for (int v = 1; v <= f.n; ++v) {
        attachment_order(v, occ[static_cast<std::size_t>(v)].negative);
        attachment_order(v, occ[static_cast<std::size_t>(v)].positive);
    }

    // layout: each original variable expands to x_1 y_1 x_2 y_2 ... x_(n+m)
    // at its position on the line
    MonotoneCnf out;
    std::vector<std::vector<int>> x_ids(static_cast<std::size_t>(f.n) + 1);
    std::vector<std::vector<int>> y_ids(static_cast<std::size_t>(f.n) + 1);
    int next = 1;
    for (int v = 1; v <= f.n; ++v) {
        const auto& o = occ[static_cast<std::size_t>(v)];
        std::size_t total = o.negative.size() + o.positive.size();
        if (total == 0) continue;
        for (std::size_t i = 0; i < total; ++i) {
            x_ids[static_cast<std::size_t>(v)].push_back(next++);
            if (i + 1 < total) y_ids[static_cast<std::size_t>(v)].push_back(next++);
        }
    }
    out.n = next - 1;

    // original clauses with substituted variables, in the original order
    std::vector<MonotoneClause> rewritten(f.clauses.size());
    for (std::size_t ci = 0; ci < f.clauses.size(); ++ci)
        rewritten[ci].positive = f.clauses[ci].positive;
    for (int v = 1; v <= f.n; ++v) {
        const auto& o = occ[static_cast<std::size_t>(v)];
        const auto& xs = x_ids[static_cast<std::size_t>(v)];
        for (std::size_t k = 0; k < o.negative.size(); ++k)
            rewritten[o.negative[k]].vars.push_back(xs[k]);
        for (std::size_t j = 0; j < o.positive.size(); ++j)
            rewritten[o.positive[j]].vars.push_back(xs[o.negative.size() + j]);
    }
    for (auto& c : rewritten) std::sort(c.vars.begin(), c.vars.end());

    // linking clauses nest innermost around each variable, so emit them
    // before the rewritten clauses to keep the witness order valid
    for (int v = 1; v <= f.n; ++v) {
        const auto& xs = x_ids[static_cast<std::size_t>(v)];
        const auto& ys = y_ids[static_cast<std::size_t>(v)];
        for (std::size_t i = 0; i < ys.size(); ++i) {
            out.clauses.push_back({true, {xs[i], ys[i]}});
            out.clauses.push_back({false, {ys[i], xs[i + 1]}});
        }
    }
    for (auto& c : rewritten)
        if (!c.vars.empty()) out.clauses.push_back(std::move(c));

    out.validate(3, 2);
    return out;
}

/// All monotone sided formulas with up to `max_vars` variables (each
/// occurring at least once), up to `max_clauses` distinct clauses, clause
/// size up to three and at most two occurrences per literal. Clause lists
/// come out ordered wide-spans-first per side, which is a valid nesting
/// witness for these sizes. Used by the verification sweeps.
inline std::vector<MonotoneCnf> enumerate_monotone_formulas(int max_vars, int max_clauses) {
    std::vector<MonotoneCnf> out;
    for (int n = 1; n <= max_vars; ++n) {
        // all single-sign clauses over 1..n of size 1..3
        std::vector<MonotoneClause> universe;
        std::vector<std::vector<int>> subsets;
        for (int mask = 1; mask < (1 << n); ++mask) {
            std::vector<int> vars;
            for (int v = 1; v <= n; ++v)
                if (mask & (1 << (v - 1))) vars.push_back(v);
            if (static_cast<int>(vars.size()) <= 3) subsets.push_back(vars);
        }
        for (const auto& vars : subsets) universe.push_back({true, vars});
        for (const auto& vars : subsets) universe.push_back({false, vars});

        const int u = static_cast<int>(universe.size());
        std::vector<int> pick;
        std::function<void(int)> rec = [&](int start) {
            if (!pick.empty()) {
                MonotoneCnf f;
                f.n = n;
                for (int i : pick) f.clauses.push_back(universe[static_cast<std::size_t>(i)]);
                // deterministic witness order: wider spans first, then input order
                std::stable_sort(f.clauses.begin(), f.clauses.end(),
                                 [](const MonotoneClause& a, const MonotoneClause& b) {
                                     int sa = a.vars.back() - a.vars.front();
                                     int sb = b.vars.back() - b.vars.front();
                                     return sa > sb;
                                 });
                bool ok = true;
                std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
                for (const auto& c : f.clauses)
                    for (int v : c.vars) used[static_cast<std::size_t>(v)] = 1;
                for (int v = 1; v <= n; ++v) ok = ok && used[static_cast<std::size_t>(v)];
                if (ok) {
                    try {
                        f.validate();
                        out.push_back(std::move(f));
                    } catch (const CnfError&) {
                        // occurrence bound or crossing violated: skip
                    }
                }
            }
            if (static_cast<int>(pick.size()) == max_clauses) return;
            for (int i = start; i < u; ++i) {
                pick.push_back(i);
                rec(i + 1);
                pick.pop_back();
            }
        };
        rec(0);
    }
    return out;
}

}  // namespace solochess
