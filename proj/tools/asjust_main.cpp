// asjust — explain why a literal is or is not in an answer set.
//
// The engine translates a ground logic program into an assumption-based
// argumentation framework, derives the stable extension matching a chosen
// answer set, builds attack trees against it, and flattens them into
// justification graphs.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "asjust/parser.hpp"
#include "asjust/render.hpp"

namespace {

using namespace asjust;

constexpr int kExitParse = 2;
constexpr int kExitInconsistent = 3;
constexpr int kExitUnknownLiteral = 4;
constexpr int kExitAnswerSetRange = 5;
constexpr int kExitUnknownArgument = 6;

struct Exit {
    int code;
    std::string message;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Exit{kExitParse, "cannot open '" + path + "'"};
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

LogicProgram load_program(const std::string& path) {
    try {
        return parse_program(read_file(path));
    } catch (const ParseError& e) {
        throw Exit{kExitParse, std::string(e.what())};
    } catch (const GroundingError& e) {
        throw Exit{kExitParse, std::string(e.what())};
    } catch (const std::invalid_argument& e) {
        throw Exit{kExitParse, std::string(e.what())};
    }
}

// Command-line literal spelling: classical negation "-a", NAF "not:a" /
// "not:-a" (a colon instead of a space keeps it one shell word).
Literal parse_cli_literal(const std::string& text) {
    std::string t = text;
    Literal l;
    if (t.rfind("not:", 0) == 0) {
        l.naf = true;
        t = t.substr(4);
    }
    if (!t.empty() && t[0] == '-') {
        l.classically_negated = true;
        t = t.substr(1);
    }
    if (t.empty()) throw Exit{kExitUnknownLiteral, "empty literal '" + text + "'"};
    l.atom = t;
    return l;
}

AnswerSetEnumeration answer_sets_or_exit(const LogicProgram& p) {
    AnswerSetEnumeration e = enumerate_answer_sets(p);
    if (e.inconsistent) throw Exit{kExitInconsistent, "program is inconsistent"};
    return e;
}

const AnswerSetWithNAF& pick_answer_set(const AnswerSetEnumeration& e, int index) {
    if (index < 0 || index >= static_cast<int>(e.answer_sets.size()))
        throw Exit{kExitAnswerSetRange,
                   "answer set index " + std::to_string(index) + " out of range (0.." +
                       std::to_string(e.answer_sets.size() - 1) + ")"};
    return e.answer_sets[static_cast<size_t>(index)];
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Exit{1, "cannot write '" + out_path + "'"};
    out << text;
}

void cmd_answersets(const std::string& file) {
    LogicProgram p = load_program(file);
    AnswerSetEnumeration e = answer_sets_or_exit(p);
    for (size_t i = 0; i < e.answer_sets.size(); ++i)
        std::cout << "S" << i << " = " << to_string(e.answer_sets[i].s) << "\n";
}

void cmd_framework(const std::string& file) {
    LogicProgram p = load_program(file);
    AbaFramework f = translate(p);
    std::cout << "language: " << to_string(set_union(p.universe.lit, p.universe.naf)) << "\n";
    std::cout << "assumptions: " << to_string(f.assumptions) << "\n";
    std::cout << "contrary: not l -> l\n";
    std::cout << "rules (" << p.clauses.size() << "):\n";
    for (const Clause& c : p.clauses) {
        std::cout << "  " << to_string(c.head);
        for (size_t i = 0; i < c.body.size(); ++i)
            std::cout << (i == 0 ? " :- " : ", ") << to_string(c.body[i]);
        std::cout << ".\n";
    }
}

void cmd_arguments(const std::string& file) {
    LogicProgram p = load_program(file);
    AbaContext ctx = make_context(p);
    for (const Argument& a : ctx.arguments) std::cout << to_string(a) << "\n";
}

void cmd_extensions(const std::string& file) {
    LogicProgram p = load_program(file);
    AbaContext ctx = make_context(p);
    std::vector<Extension> exts;
    try {
        exts = stable_extensions(ctx.framework, ctx.arguments, ctx.attacks);
    } catch (const std::runtime_error& e) {
        throw Exit{1, e.what()};
    }
    for (size_t i = 0; i < exts.size(); ++i) {
        std::cout << "E" << i << " = {";
        for (size_t m = 0; m < exts[i].members.size(); ++m)
            std::cout << (m ? ", " : "") << ctx.arguments[exts[i].members[m]].id();
        std::cout << "}\n";
    }
}

void cmd_attack_tree(const std::string& file, const std::string& argument_id, int answer_set,
                     bool all, const std::string& format, const std::string& out_path) {
    LogicProgram p = load_program(file);
    AbaContext ctx = make_context(p);
    int arg = ctx.argument_by_id(argument_id);
    if (arg < 0) throw Exit{kExitUnknownArgument, "unknown argument id '" + argument_id + "'"};
    AnswerSetEnumeration e = answer_sets_or_exit(p);
    const AnswerSetWithNAF& s = pick_answer_set(e, answer_set);
    Extension ext = corresponding_stable_extension(ctx.framework, ctx.arguments, s);

    std::vector<AttackTree> trees = enumerate_attack_trees(ctx, ext.members, arg);
    if (!all) trees.resize(1);  // construction always yields at least one tree
    RenderConfig cfg;
    cfg.format = format;
    std::ostringstream out;
    for (size_t i = 0; i < trees.size(); ++i) {
        if (format == "dot") {
            out << export_dot(ctx, trees[i], cfg);
        } else {
            out << "tree " << i + 1 << "/" << trees.size() << ":\n"
                << export_text(ctx, trees[i], cfg);
        }
    }
    write_output(out.str(), out_path);
}

void cmd_justify(const std::string& file, const std::string& literal, int answer_set,
                 const std::string& method, bool all, const std::string& format,
                 const std::string& out_path) {
    LogicProgram p = load_program(file);
    AbaContext ctx = make_context(p);
    Literal k = parse_cli_literal(literal);
    if (!ctx.framework.in_language(k))
        throw Exit{kExitUnknownLiteral, "literal outside the program's language: " + to_string(k)};
    AnswerSetEnumeration e = answer_sets_or_exit(p);
    const AnswerSetWithNAF& s = pick_answer_set(e, answer_set);

    bool labelled = method == "labas";
    std::vector<Justification> results;
    if (contains(s.s_naf, k)) {
        if (all) {
            results = labelled ? labas_positive_all(ctx, s, k) : babas_positive_all(ctx, s, k);
        } else {
            results.push_back(labelled ? labas_positive(ctx, s, k) : babas_positive(ctx, s, k));
        }
    } else {
        results.push_back(labelled ? labas_negative(ctx, s, k) : babas_negative(ctx, s, k));
    }

    RenderConfig cfg;
    cfg.format = format;
    std::ostringstream out;
    for (const Justification& j : results) {
        if (format == "json") {
            out << export_json(j, cfg);
        } else if (format == "dot") {
            out << export_dot(j, cfg);
        } else {
            out << export_text(j, cfg);
        }
    }
    write_output(out.str(), out_path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"answer set justification via assumption-based argumentation"};
    app.require_subcommand(1);

    std::string file, argument_id, literal, method = "labas", format = "text", out_path;
    int answer_set = 0;
    bool all = false;

    CLI::App* answersets = app.add_subcommand("answersets", "list the consistent answer sets");
    answersets->add_option("file", file, "program file")->required();

    CLI::App* framework = app.add_subcommand("framework", "print the argumentation framework");
    framework->add_option("file", file, "program file")->required();

    CLI::App* arguments = app.add_subcommand("arguments", "list all arguments");
    arguments->add_option("file", file, "program file")->required();

    CLI::App* extensions = app.add_subcommand("extensions", "list all stable extensions");
    extensions->add_option("file", file, "program file")->required();

    CLI::App* attack_tree = app.add_subcommand("attack-tree", "build attack trees for an argument");
    attack_tree->add_option("file", file, "program file")->required();
    attack_tree->add_option("--argument", argument_id, "argument id, e.g. A10")->required();
    attack_tree->add_option("--answer-set", answer_set, "answer set index (default 0)");
    attack_tree->add_flag("--all", all, "print every tree, not just the first");
    attack_tree->add_option("--format", format, "text|dot")
        ->check(CLI::IsMember({"text", "dot"}));
    attack_tree->add_option("--out", out_path, "write to file instead of stdout");

    CLI::App* justify = app.add_subcommand("justify", "justify a literal w.r.t. an answer set");
    justify->add_option("file", file, "program file")->required();
    justify->add_option("--literal", literal, "literal: a, -a, not:a, not:-a")->required();
    justify->add_option("--answer-set", answer_set, "answer set index (default 0)");
    justify->add_option("--method", method, "babas|labas (default labas)")
        ->check(CLI::IsMember({"babas", "labas"}));
    justify->add_flag("--all", all, "positive only: every argument/tree selection");
    justify->add_option("--format", format, "text|json|dot")
        ->check(CLI::IsMember({"text", "json", "dot"}));
    justify->add_option("--out", out_path, "write to file instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (answersets->parsed()) cmd_answersets(file);
        if (framework->parsed()) cmd_framework(file);
        if (arguments->parsed()) cmd_arguments(file);
        if (extensions->parsed()) cmd_extensions(file);
        if (attack_tree->parsed())
            cmd_attack_tree(file, argument_id, answer_set, all, format, out_path);
        if (justify->parsed())
            cmd_justify(file, literal, answer_set, method, all, format, out_path);
    } catch (const Exit& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
