#include "cli.hpp"

#include <CLI11.hpp>

#include <csignal>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "acewiki/error.hpp"
#include "acewiki/grammar.hpp"
#include "acewiki/logic.hpp"
#include "acewiki/server.hpp"
#include "acewiki/wiki.hpp"

namespace acewiki {

namespace {

struct IoError {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError{"cannot read " + path};
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file_atomically(const std::string& path, const std::string& content) {
  std::filesystem::path tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << content;
    if (!out) throw IoError{"cannot write " + tmp.string()};
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError{"cannot replace " + path + ": " + ec.message()};
}

// A missing wiki file is an empty wiki.
Wiki load_wiki(const std::string& path) {
  if (!std::filesystem::exists(path)) return Wiki{};
  return Wiki::import_text(read_file(path));
}

std::string describe(const Error& e) {
  std::string out(to_string(e.code()));
  if (e.line()) out += " at line " + std::to_string(*e.line());
  if (e.position()) out += " at token " + std::to_string(*e.position() + 1);
  return out + ": " + e.what();
}

// Checks a corpus line by line, continuing after errors. Output columns are
// tab separated: line, status, then pattern/axiom/triangle or position/message.
int cmd_check(const std::string& path, std::ostream& out) {
  std::string text = read_file(path);
  Lexicon lexicon;
  std::istringstream lines(text);
  std::string line;
  std::size_t line_no = 0;
  bool all_ok = true;
  while (std::getline(lines, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto sp = line.find(' ');
    std::string kw = line.substr(0, sp);
    std::string rest = sp == std::string::npos ? "" : line.substr(sp + 1);
    try {
      if (kw == "word") {
        auto sp2 = rest.find(' ');
        auto cat = category_from_code(rest.substr(0, sp2));
        if (!cat || sp2 == std::string::npos) throw Error(ErrorCode::FormatError, "malformed word line");
        lexicon.add_word(*cat, rest.substr(sp2 + 1));
      } else if (kw == "sentence") {
        TokenList tokens = tokenize_text(rest, lexicon);
        SentenceAst ast = parse(tokens, Grammar{}, lexicon);
        Axiom axiom = classify(ast_to_drs(ast));
        out << line_no << "\tOK\t" << to_string(pattern_of(ast)) << '\t' << to_string(axiom) << '\t'
            << (axiom.owl_compatible() ? "blue" : "red") << '\n';
      } else if (kw != "note") {
        throw Error(ErrorCode::FormatError, "unknown line type '" + kw + "'");
      }
    } catch (const Error& e) {
      all_ok = false;
      out << line_no << '\t' << to_string(e.code()) << '\t';
      if (e.position()) out << "token " << *e.position() + 1;
      out << '\t' << e.what() << '\n';
    }
  }
  return all_ok ? kExitOk : kExitContent;
}

void print_stats(const StatsReport& r, bool table, std::ostream& out) {
  auto fixed = [](double v) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(3) << v;
    return s.str();
  };
  if (table) {
    out << "pattern                        count\n";
    for (const auto& [p, n] : r.pattern_counts) {
      out << std::left << std::setw(30) << to_string(p) << ' ' << std::right << std::setw(5) << n << '\n';
    }
    out << "negation or implication        " << fixed(r.neg_or_impl_fraction) << '\n';
    if (r.s) {
      out << "S " << *r.s << "  S+ " << *r.s_plus << "  S- " << *r.s_minus << "  S+/S " << fixed(*r.ratio) << '\n';
    }
    out << '\n';
  }
  out << "sentences " << r.sentences << '\n';
  for (const auto& [p, n] : r.pattern_counts) out << "pattern." << to_string(p) << ' ' << n << '\n';
  out << "negOrImpl " << r.neg_or_impl << '\n';
  out << "negOrImplFraction " << fixed(r.neg_or_impl_fraction) << '\n';
  if (r.s) {
    out << "S " << *r.s << '\n';
    out << "Splus " << *r.s_plus << '\n';
    out << "Sminus " << *r.s_minus << '\n';
    out << "ratio " << fixed(*r.ratio) << '\n';
  }
}

ApiServer* g_running = nullptr;

void on_signal(int) {
  if (g_running) g_running->stop();
}

int cmd_serve(const std::string& wiki_path, const std::string& listen, std::ostream& out, std::ostream& err) {
  auto colon = listen.rfind(':');
  if (colon == std::string::npos) {
    err << "--listen expects host:port\n";
    return kExitUsage;
  }
  std::string host = listen.substr(0, colon);
  int port = 0;
  try {
    port = std::stoi(listen.substr(colon + 1));
  } catch (const std::exception&) {
    err << "bad port in --listen\n";
    return kExitUsage;
  }
  Wiki wiki = load_wiki(wiki_path);
  std::optional<std::filesystem::path> file;
  if (!wiki_path.empty()) file = wiki_path;
  ApiServer server(std::move(wiki), file);
  int bound = server.bind(host, port);
  if (bound < 0) {
    err << "cannot listen on " << listen << '\n';
    return kExitUsage;
  }
  out << "serving on " << host << ':' << bound << std::endl;
  g_running = &server;
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  bool ok = server.run();
  g_running = nullptr;
  return ok ? kExitOk : kExitUsage;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Semantic wiki engine for a controlled English subset", "acewiki"};
  app.require_subcommand(1);

  std::string wiki_path;
  std::string listen = "127.0.0.1:8080";
  auto* serve = app.add_subcommand("serve", "Run the HTTP/JSON server");
  serve->add_option("--wiki", wiki_path, "Wiki file, loaded at start and written on every change");
  serve->add_option("--listen", listen, "host:port")->capture_default_str();

  std::string corpus;
  auto* check = app.add_subcommand("check", "Parse and classify every sentence of a wiki file");
  check->add_option("file", corpus, "Wiki file")->required();

  std::string annotations;
  bool table = false;
  auto* stats = app.add_subcommand("stats", "Sentence pattern statistics for a wiki file");
  stats->add_option("file", corpus, "Wiki file")->required();
  stats->add_option("--annotations", annotations, "Lines of '<sentence-id> true|false'");
  stats->add_flag("--table", table, "Also print a human-readable table");

  std::string output;
  auto* exp = app.add_subcommand("export", "Print the wiki file in normalized form");
  exp->add_option("--wiki", wiki_path, "Wiki file")->required();
  exp->add_option("-o,--output", output, "Write to this file instead of stdout");

  std::string input;
  auto* imp = app.add_subcommand("import", "Replace the wiki file with a validated import");
  imp->add_option("file", input, "File to import")->required();
  imp->add_option("--wiki", wiki_path, "Wiki file to replace")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*serve) return cmd_serve(wiki_path, listen, out, err);
    if (*check) return cmd_check(corpus, out);
    if (*stats) {
      Wiki wiki = Wiki::import_text(read_file(corpus));
      std::optional<Annotations> ann;
      if (!annotations.empty()) ann = parse_annotations(read_file(annotations));
      print_stats(wiki.stats(ann ? &*ann : nullptr), table, out);
      return kExitOk;
    }
    if (*exp) {
      std::string text = load_wiki(wiki_path).export_text();
      if (output.empty()) {
        out << text;
      } else {
        write_file_atomically(output, text);
      }
      return kExitOk;
    }
    if (*imp) {
      Wiki wiki = Wiki::import_text(read_file(input));
      write_file_atomically(wiki_path, wiki.export_text());
      out << "imported " << wiki.lexicon().size() << " words, " << wiki.sentences().size() << " sentences\n";
      return kExitOk;
    }
  } catch (const IoError& e) {
    err << e.message << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << describe(e) << '\n';
    return e.code() == ErrorCode::StorageError ? kExitUsage : kExitContent;
  }
  return kExitUsage;
}

}  // namespace acewiki
