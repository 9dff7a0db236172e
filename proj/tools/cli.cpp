#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "effdiag/error.hpp"
#include "effdiag/lambda.hpp"
#include "effdiag/lawcheck.hpp"
#include "effdiag/serialize.hpp"

namespace effdiag::cli {

namespace {

struct ProgramOptions {
  std::string monad = "maybe";
  std::size_t fuel = 100;
  std::string format = "text";
  std::string prelude;
  std::string exceptions;
  std::string locations;
  std::string alphabet;
  std::string file;
  std::string program;
};

struct LawOptions {
  std::uint64_t seed = 1;
  std::size_t trials = 100;
  std::size_t carrier = 3;
  std::size_t arity = 3;
  std::string laws;
  std::string monads;
  std::string format = "text";
  bool serial = false;
};

struct ComposeOptions {
  std::string format = "text";
  std::vector<std::string> files;
};

std::vector<std::string> splitList(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void collectOps(const Term& t, std::vector<OpDescriptor>& ops) {
  if (const auto* a = t.as<Abs>()) {
    collectOps(*a->body, ops);
  } else if (const auto* ap = t.as<App>()) {
    collectOps(*ap->fn, ops);
    collectOps(*ap->arg, ops);
  } else if (const auto* op = t.as<Op>()) {
    ops.push_back(op->desc);
    for (const auto& arg : op->args) collectOps(*arg, ops);
  }
}

/// Build the monad for a program. Parameters not given on the command line
/// are taken from the operations that occur in the program.
KindRef programKind(const ProgramOptions& o, const Term& program) {
  const auto tag = parseTag(o.monad);
  if (!tag) throw Error("unknown monad '" + o.monad + "'");
  std::vector<OpDescriptor> ops;
  collectOps(program, ops);
  auto labelsOf = [&ops](OpName name) {
    std::vector<std::string> labels;
    for (const auto& op : ops) {
      if (op.name == name && std::find(labels.begin(), labels.end(), op.label) == labels.end()) {
        labels.push_back(op.label);
      }
    }
    std::sort(labels.begin(), labels.end());
    return labels;
  };
  switch (*tag) {
    case MonadTag::Maybe: return MonadKind::maybe();
    case MonadTag::Powerset: return MonadKind::powerset();
    case MonadTag::Subdistribution: return MonadKind::subdistribution();
    case MonadTag::Exception: {
      auto labels = o.exceptions.empty() ? labelsOf(OpName::Raise) : splitList(o.exceptions);
      if (labels.empty()) labels.push_back("e");
      return MonadKind::exception(labels);
    }
    case MonadTag::GlobalState: {
      std::vector<std::string> locations;
      if (o.locations.empty()) {
        std::set<std::string> seen;
        for (auto name : {OpName::Read, OpName::Write}) {
          for (auto& l : labelsOf(name)) seen.insert(l);
        }
        locations.assign(seen.begin(), seen.end());
      } else {
        locations = splitList(o.locations);
      }
      if (locations.empty()) locations.push_back("l");
      return MonadKind::globalState(locations);
    }
    case MonadTag::Output: {
      std::string alphabet = o.alphabet;
      if (alphabet.empty()) {
        for (const auto& l : labelsOf(OpName::Print)) alphabet += l;
      }
      if (alphabet.empty()) alphabet = "a";
      return MonadKind::output(alphabet);
    }
  }
  throw Error("unknown monad");
}

RenderFormat formatOf(const std::string& name) {
  if (name == "text") return RenderFormat::Text;
  if (name == "machine") return RenderFormat::Machine;
  throw Error("unknown format '" + name + "' (expected text or machine)");
}

TermPtr loadProgram(const ProgramOptions& o) {
  if (o.file.empty() == o.program.empty()) throw Error("give exactly one of a program literal or --file");
  const Prelude prelude = o.prelude.empty() ? Prelude::standard() : Prelude::fromFile(o.prelude);
  return parse(o.file.empty() ? o.program : readFile(o.file), prelude);
}

int cmdEval(const ProgramOptions& o, std::ostream& out) {
  const RenderFormat format = formatOf(o.format);
  const TermPtr program = loadProgram(o);
  const MonadValue result = eval(program, programKind(o, *program), Fuel{o.fuel});
  out << (format == RenderFormat::Text ? renderValue(result) : toJson(result)) << "\n";
  return kOk;
}

int cmdDiagram(const ProgramOptions& o, std::ostream& out) {
  const RenderFormat format = formatOf(o.format);
  const TermPtr program = loadProgram(o);
  out << render(evalDiagram(program, programKind(o, *program), Fuel{o.fuel}), format) << "\n";
  return kOk;
}

int cmdCompose(const ComposeOptions& o, std::ostream& out) {
  const RenderFormat format = formatOf(o.format);
  const Presentation xi = presentationFromJson(readFile(o.files.front()));
  std::vector<Presentation> family;
  for (std::size_t i = 1; i < o.files.size(); ++i) family.push_back(presentationFromJson(readFile(o.files[i])));
  if (family.size() != xi.effect().arity()) {
    throw ArityError("the diagram has arity " + std::to_string(xi.effect().arity()) + " but " +
                     std::to_string(family.size()) + " family file(s) were given");
  }
  out << render(seqCompose(xi, family), format) << "\n";
  return kOk;
}

int cmdLaws(const LawOptions& o, std::ostream& out) {
  const RenderFormat format = formatOf(o.format);
  LawSuiteConfig config;
  config.seed = o.seed;
  config.trials = o.trials;
  config.carrierSizeMax = o.carrier;
  config.arityMax = o.arity;
  config.parallel = !o.serial;
  if (!o.laws.empty()) config.laws = splitList(o.laws);
  if (!o.monads.empty()) {
    std::vector<MonadTag> tags;
    for (const auto& name : splitList(o.monads)) {
      auto tag = parseTag(name);
      if (!tag) throw Error("unknown monad '" + name + "'");
      tags.push_back(*tag);
    }
    config.monads = tags;
  }
  const LawReport report = runLawSuite(config);
  out << (format == RenderFormat::Text ? report.toText() : report.toJson() + "\n");
  return report.expectationsMet() ? kOk : kFailure;
}

void addProgramOptions(CLI::App* cmd, ProgramOptions& o) {
  cmd->add_option("program", o.program, "Program text");
  cmd->add_option("--file", o.file, "Read the program from a file");
  cmd->add_option("-m,--monad", o.monad, "maybe, exception, powerset, dist, state or output")->capture_default_str();
  cmd->add_option("-f,--fuel", o.fuel, "Number of beta-steps allowed on each path")->capture_default_str();
  cmd->add_option("--format", o.format, "text or machine")->capture_default_str();
  cmd->add_option("--prelude", o.prelude, "Prelude file of `name = term` lines (replaces the built-in one)");
  cmd->add_option("--exceptions", o.exceptions, "Exception labels, comma separated");
  cmd->add_option("--locations", o.locations, "Store locations, comma separated");
  cmd->add_option("--alphabet", o.alphabet, "Output alphabet");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Diagrammatic presentations of effectful computations"};
  app.name("effdiag");
  app.require_subcommand(1);

  ProgramOptions evalOpts, diagramOpts;
  ComposeOptions composeOpts;
  LawOptions lawOpts;

  auto* evalCmd = app.add_subcommand("eval", "Evaluate a program to a monadic value");
  addProgramOptions(evalCmd, evalOpts);
  auto* diagramCmd = app.add_subcommand("diagram", "Evaluate a program and print its diagram");
  addProgramOptions(diagramCmd, diagramOpts);
  auto* composeCmd = app.add_subcommand("compose", "Compose a diagram with one diagram per index");
  composeCmd->add_option("files", composeOpts.files, "Diagram file followed by the family files (machine format)")
      ->required();
  composeCmd->add_option("--format", composeOpts.format, "text or machine")->capture_default_str();
  auto* lawsCmd = app.add_subcommand("laws", "Run the law suite");
  lawsCmd->add_option("--seed", lawOpts.seed, "Random seed")->capture_default_str();
  lawsCmd->add_option("--trials", lawOpts.trials, "Trials per law and monad")->capture_default_str();
  lawsCmd->add_option("--carrier", lawOpts.carrier, "Largest carrier size")->capture_default_str();
  lawsCmd->add_option("--arity", lawOpts.arity, "Largest effect arity")->capture_default_str();
  lawsCmd->add_option("--laws", lawOpts.laws, "Laws to run, comma separated (default: all)");
  lawsCmd->add_option("--monads", lawOpts.monads, "Monads to run, comma separated (default: all)");
  lawsCmd->add_option("--format", lawOpts.format, "text or machine")->capture_default_str();
  lawsCmd->add_flag("--serial", lawOpts.serial, "Run on a single thread");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kFailure;
  }

  try {
    if (evalCmd->parsed()) return cmdEval(evalOpts, out);
    if (diagramCmd->parsed()) return cmdDiagram(diagramOpts, out);
    if (composeCmd->parsed()) return cmdCompose(composeOpts, out);
    return cmdLaws(lawOpts, out);
  } catch (const ParseError& e) {
    err << "effdiag: parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const SignatureError& e) {
    err << "effdiag: " << e.what() << "\n";
    return kSignatureError;
  } catch (const ArityError& e) {
    err << "effdiag: " << e.what() << "\n";
    return kLengthMismatch;
  } catch (const std::exception& e) {
    err << "effdiag: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace effdiag::cli
