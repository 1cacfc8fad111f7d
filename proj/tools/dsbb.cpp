// dsbb.cpp
// Copyright (c) 2026, The dsbb Authors
// Licensed under the Apache License Version 2.0.

#include <unistd.h>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dsbb/script.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Dempster-Shafer belief bases over propositional, clausal and frame backends"};
  app.require_subcommand(1);

  const std::map<std::string, dsbb::Engine> engines{
      {"semantic", dsbb::Engine::Semantic}, {"atms", dsbb::Engine::Atms}, {"both", dsbb::Engine::Both}};
  const std::map<std::string, dsbb::OutputFormat> formats{{"text", dsbb::OutputFormat::Text},
                                                          {"json", dsbb::OutputFormat::Json}};
  dsbb::SessionOptions options;
  std::string path;

  auto* run = app.add_subcommand("run", "Run a script");
  run->add_option("script", path, "Script file")->required()->check(CLI::ExistingFile);
  auto* repl = app.add_subcommand("repl", "Read statements from standard input");
  for (auto* sub : {run, repl}) {
    sub->add_option("--engine", options.engine, "semantic, atms or both")
        ->transform(CLI::CheckedTransformer(engines, CLI::ignore_case))
        ->option_text("semantic|atms|both");
    sub->add_option("--format", options.format, "text or json")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
        ->option_text("text|json");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? dsbb::kExitOk : dsbb::kExitError;
  }

  if (*run) {
    std::ifstream file(path, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot read " << path << '\n';
      return dsbb::kExitError;
    }
    std::ostringstream text;
    text << file.rdbuf();
    return dsbb::run_script(text.str(), options, std::cout, std::cerr);
  }
  dsbb::repl(std::cin, std::cout, std::cerr, options, isatty(STDIN_FILENO) != 0);
  return dsbb::kExitOk;
}
