#include "commands.hpp"

#include <cstdlib>
#include <functional>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "gammafuzz/fuzzy_ops.hpp"
#include "structure_doc.hpp"

namespace gammafuzz::cli {

using ojson = nlohmann::ordered_json;

namespace {

// Thrown after the message has been written; maps to exit 2.
struct InputError : Error {
    using Error::Error;
};

LoadedStructure load_valid(const std::string& path) {
    auto loaded = load_structure(path);
    const auto violations = validate(*loaded.structure);
    if (!violations.empty()) {
        std::string msg = path + " is not a valid Gamma-semiring with zero:";
        for (const auto& v : violations) msg += "\n  " + v.describe();
        throw InputError(msg);
    }
    return loaded;
}

// Runs a command body and turns input problems into exit code 2.
int guarded(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << " (candidates: " << e.candidates() << ")\n";
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
    }
    return exit_input_error;
}

Chain resolve_chain(const std::optional<std::string>& text, const StructureDoc& doc) {
    if (text) return Chain::parse(*text);
    if (doc.default_chain) return Chain(*doc.default_chain);
    return Chain::boolean();
}

FuzzySubset resolve_subset(const std::string& text, const LoadedStructure& loaded) {
    const auto& g = *loaded.structure;
    if (auto it = loaded.doc.subsets.find(text); it != loaded.doc.subsets.end()) return FuzzySubset(g, it->second);
    if (text == "theta") return theta(g);
    if (text == "one") return one(g);
    std::string body = text;
    if (!body.empty() && body.front() == '[') {
        if (body.back() != ']') throw InputError("unterminated subset literal: " + text);
        body = body.substr(1, body.size() - 2);
    }
    if (body.empty() || body.find_first_not_of("0123456789/, \t") != std::string::npos) {
        throw InputError("unknown subset \"" + text + "\" (not a document subset, theta, one, or [p/q,...])");
    }
    std::vector<Membership> grades;
    std::size_t start = 0;
    while (true) {
        const auto comma = body.find(',', start);
        grades.push_back(Membership::parse(body.substr(start, comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return FuzzySubset(g, std::move(grades));
}

ojson grades_json(const FuzzySubset& mu) {
    ojson arr = ojson::array();
    for (const auto& m : mu.grades()) arr.push_back(m.to_string());
    return arr;
}

ojson class_json(const IdealClass& c) {
    return ojson{{"nonempty", c.nonempty}, {"zero_is_one", c.zero_is_one}, {"left", c.left},
                 {"right", c.right},       {"two_sided", c.two_sided},     {"left_k", c.left_k},
                 {"right_k", c.right_k}};
}

ojson chain_json(const Chain& chain) {
    ojson arr = ojson::array();
    for (const auto& m : chain.values()) arr.push_back(m.to_string());
    return arr;
}

ojson report_json(const VerifyReport& r) {
    ojson j;
    j["law"] = r.law_id;
    j["title"] = r.title;
    j["universe"] = ojson{{"structure", r.universe.structure},
                          {"chain", r.universe.chain},
                          {"family", r.universe.family},
                          {"family_size", r.universe.family_size}};
    j["outcome"] = to_string(r.outcome);
    j["checked"] = r.checked_count;
    if (r.witness) {
        const auto& w = *r.witness;
        ojson operands = ojson::array();
        for (const auto& op : w.operands) operands.push_back(grades_json(op));
        j["witness"] = ojson{{"clause", w.clause},
                             {"operands", operands},
                             {"element", w.element ? ojson(*w.element) : ojson(nullptr)},
                             {"lhs", w.lhs},
                             {"rhs", w.rhs},
                             {"detail", w.detail}};
    } else {
        j["witness"] = nullptr;
    }
    ojson notes = ojson::object();
    for (const auto& [k, v] : r.notes) notes[k] = v;
    j["notes"] = notes;
    return j;
}

} // namespace

std::uint64_t budget_from_environment() {
    const char* env = std::getenv("GAMMAFUZZ_BUDGET");
    if (env == nullptr || *env == '\0') return default_candidate_budget;
    std::size_t used = 0;
    const std::string text(env);
    unsigned long long value = 0;
    try {
        value = std::stoull(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || text.front() == '-') {
        throw std::invalid_argument("GAMMAFUZZ_BUDGET must be a non-negative integer, got \"" + text + "\"");
    }
    return value;
}

std::string reports_to_json(const std::string& structure, const Chain& chain, const std::vector<VerifyReport>& reports) {
    ojson doc;
    doc["structure"] = structure;
    doc["chain"] = chain_json(chain);
    ojson arr = ojson::array();
    std::size_t pass = 0, fail = 0, na = 0;
    for (const auto& r : reports) {
        arr.push_back(report_json(r));
        switch (r.outcome) {
        case Outcome::pass: ++pass; break;
        case Outcome::fail: ++fail; break;
        case Outcome::not_applicable: ++na; break;
        }
    }
    doc["reports"] = arr;
    doc["summary"] = ojson{{"total", reports.size()}, {"pass", pass}, {"fail", fail}, {"not_applicable", na}};
    return doc.dump(2) + "\n";
}

int cmd_validate(const std::string& path, const GlobalOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto loaded = load_structure(path);
        const auto& g = *loaded.structure;
        const auto violations = validate(g);
        std::vector<std::string> warnings;
        if (g.lacks_unities()) warnings.push_back("no declared unities; unity-dependent laws report not-applicable");
        if (opts.json) {
            ojson j;
            j["structure"] = g.name();
            j["valid"] = violations.empty();
            ojson vs = ojson::array();
            for (const auto& v : violations) {
                vs.push_back(ojson{{"axiom", to_string(v.axiom)},
                                   {"witness", v.witness},
                                   {"lhs", v.lhs},
                                   {"rhs", v.rhs},
                                   {"message", v.describe()}});
            }
            j["violations"] = vs;
            ojson us = ojson::array();
            for (const auto& u : g.unities()) {
                us.push_back(ojson{{"side", to_string(u.side)}, {"strong", u.is_strong()}});
            }
            j["unities"] = us;
            j["warnings"] = warnings;
            out << j.dump(2) << "\n";
        } else {
            out << g.name() << ": |S| = " << g.s_size() << ", |Gamma| = " << g.g_size() << "\n";
            for (const auto& w : warnings) out << "warning: " << w << "\n";
            for (const auto& u : g.unities()) {
                out << to_string(u.side) << " unity with " << u.pairs.size() << " pair(s)"
                    << (u.is_strong() ? " (strong)" : "") << "\n";
            }
            if (violations.empty()) {
                out << "valid\n";
            } else {
                for (const auto& v : violations) out << "violation: " << v.describe() << "\n";
                out << violations.size() << " axiom(s) violated\n";
            }
        }
        return violations.empty() ? exit_ok : exit_failed;
    });
}

int cmd_check_ideal(const std::string& path, const std::string& subset, IdealKind kind, const GlobalOptions& opts,
                    std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto loaded = load_valid(path);
        const auto mu = resolve_subset(subset, loaded);
        const auto c = classify(mu);
        const bool ok = c.is(kind) && (!opts.zero_convention || c.zero_is_one);
        if (opts.json) {
            out << ojson{{"subset", grades_json(mu)}, {"class", class_json(c)}, {"kind", to_string(kind)}, {"ideal", ok}}
                       .dump(2)
                << "\n";
        } else {
            out << mu.to_string() << " " << c.to_string() << "\n";
            out << (ok ? "is" : "is not") << " a fuzzy " << to_string(kind) << " ideal"
                << (opts.zero_convention ? " with mu(0) = 1" : "") << "\n";
        }
        return ok ? exit_ok : exit_failed;
    });
}

int cmd_op(const std::string& path, const std::string& op, const std::string& lhs, const std::string& rhs,
           const GlobalOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto loaded = load_valid(path);
        const auto a = resolve_subset(lhs, loaded);
        const auto b = resolve_subset(rhs, loaded);
        std::optional<FuzzySubset> result;
        if (op == "sum") {
            result = sum_oplus(a, b);
        } else if (op == "prod") {
            result = gamma_product(a, b);
        } else if (op == "compose") {
            result = compose(a, b);
        } else if (op == "meet") {
            result = meet(a, b);
        } else {
            throw InputError("unknown op \"" + op + "\" (sum, prod, compose, meet)");
        }
        const auto c = classify(*result);
        if (opts.json) {
            out << ojson{{"op", op}, {"result", grades_json(*result)}, {"class", class_json(c)}}.dump(2) << "\n";
        } else {
            out << result->to_string() << " " << c.to_string() << "\n";
        }
        return exit_ok;
    });
}

int cmd_enumerate(const std::string& path, const std::optional<std::string>& chain_text, IdealKind kind,
                  const GlobalOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto loaded = load_valid(path);
        const auto chain = resolve_chain(chain_text, loaded.doc);
        const auto family = enumerate_ideals(*loaded.structure, chain, kind,
                                             EnumerateOptions{opts.budget, opts.zero_convention, opts.threads});
        if (opts.json) {
            ojson members = ojson::array();
            for (const auto& mu : family.members) members.push_back(grades_json(mu));
            out << ojson{{"structure", loaded.structure->name()},
                         {"chain", chain_json(chain)},
                         {"kind", to_string(kind)},
                         {"zero_convention", opts.zero_convention},
                         {"count", family.members.size()},
                         {"members", members}}
                       .dump(2)
                << "\n";
        } else {
            out << family.members.size() << " fuzzy " << to_string(kind) << " ideals over chain " << chain.to_string()
                << (opts.zero_convention ? " with mu(0) = 1" : "") << ":\n";
            for (const auto& mu : family.members) out << "  " << mu.to_string() << "\n";
        }
        return exit_ok;
    });
}

int cmd_verify(const std::string& path, const std::optional<std::string>& chain_text, const std::vector<std::string>& laws,
               const GlobalOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (!opts.zero_convention) {
            throw InputError("--no-zero-convention is not supported by verify: the laws assume mu(0) = 1");
        }
        const auto loaded = load_valid(path);
        const auto& g = *loaded.structure;
        const auto chain = resolve_chain(chain_text, loaded.doc);
        const auto ids = expand_law_ids(laws);
        const VerifyOptions vo{opts.threads, VerifyOptions{}.subset_cap, opts.budget};
        std::vector<VerifyReport> reports;
        if (!ids.empty()) {
            const LawContext ctx(g, chain, vo);
            for (const auto& id : ids) reports.push_back(check_law(id, ctx));
        }
        if (opts.json) {
            out << reports_to_json(g.name(), chain, reports);
        } else {
            std::size_t fails = 0, nas = 0;
            for (const auto& r : reports) {
                out << (r.outcome == Outcome::pass ? "PASS" : r.outcome == Outcome::fail ? "FAIL" : "N/A ") << "  "
                    << r.law_id << "  [" << r.universe.family << ", " << r.universe.family_size << "; checked "
                    << r.checked_count << "]  " << r.title << "\n";
                for (const auto& [k, v] : r.notes) out << "        " << k << ": " << v << "\n";
                if (r.witness && r.outcome == Outcome::fail) {
                    const auto& w = *r.witness;
                    out << "        witness " << w.clause << ":";
                    for (const auto& op : w.operands) out << " " << op.to_string();
                    if (w.element) out << " at element " << *w.element;
                    out << "  lhs " << w.lhs << ", rhs " << w.rhs << "  (" << w.detail << ")\n";
                }
                fails += r.outcome == Outcome::fail;
                nas += r.outcome == Outcome::not_applicable;
            }
            out << g.name() << " over chain " << chain.to_string() << ": " << reports.size() << " laws, "
                << reports.size() - fails - nas << " pass, " << fails << " fail, " << nas << " not applicable\n";
        }
        return suite_passed(reports) ? exit_ok : exit_failed;
    });
}

int cmd_regular(const std::string& path, const GlobalOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto loaded = load_valid(path);
        const auto& g = *loaded.structure;
        const auto reg = is_multiplicatively_regular(g);
        const auto law = check_law("thm-3.7", g, Chain::boolean(), VerifyOptions{opts.threads, 3, opts.budget});
        if (opts.json) {
            ojson j;
            j["structure"] = g.name();
            j["regular"] = reg.regular;
            ojson ws = ojson::array();
            for (const auto& w : reg.witnesses) {
                ws.push_back(ojson{{"c", w.c.index}, {"x", w.x.index}, {"gamma1", w.gamma1.index}, {"gamma2", w.gamma2.index}});
            }
            j["witnesses"] = ws;
            j["failing_element"] = reg.failing ? ojson(reg.failing->index) : ojson(nullptr);
            j["characterization"] = report_json(law);
            out << j.dump(2) << "\n";
        } else {
            if (reg.regular) {
                out << "regular; witnesses c = (c g1 x) g2 c:\n";
                for (const auto& w : reg.witnesses) {
                    out << "  c=" << w.c.index << ": x=" << w.x.index << ", g1=" << w.gamma1.index
                        << ", g2=" << w.gamma2.index << "\n";
                }
            } else {
                out << "not regular; witness element " << reg.failing->index << "\n";
            }
            out << "product = intersection for every right x left ideal pair over {0,1}: ";
            for (const auto& [k, v] : law.notes) {
                if (k == "product-equals-meet-on-{0,1}") out << v << "\n";
            }
            if (law.witness) {
                const auto& w = *law.witness;
                if (w.operands.size() == 2) {
                    out << "  separating pair " << w.operands[0].to_string() << " x " << w.operands[1].to_string();
                    if (w.element) out << " at element " << *w.element;
                    out << ": product " << w.lhs << " < intersection " << w.rhs << "\n";
                }
            }
            out << "characterization check: " << to_string(law.outcome) << "\n";
        }
        return reg.regular ? exit_ok : exit_failed;
    });
}

} // namespace gammafuzz::cli
