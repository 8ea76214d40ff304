// Command-line front end: ordinal arithmetic, tree operations, embeddings,
// labelings, and class summaries. Trees are JSON on stdin or --in; exit code
// is 0 on success, 1 on domain errors, 2 on usage errors.

#include <cstddef>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cbspace/cb.hpp"
#include "cbspace/compactum.hpp"
#include "cbspace/embed.hpp"
#include "cbspace/json_io.hpp"
#include "cbspace/ordinal.hpp"
#include "cbspace/partition.hpp"
#include "cbspace/rational.hpp"

namespace {

using namespace cbspace;

class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

Compactum read_tree(const std::string& in_path) {
  std::string text;
  if (in_path.empty()) {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    text = buffer.str();
  } else {
    std::ifstream file(in_path);
    if (!file) throw UsageError("cannot open input file: " + in_path);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    text = buffer.str();
  }
  return compactum_from_json(Json::parse(text));
}

Compactum read_tree_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw UsageError("cannot open input file: " + path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return compactum_from_json(Json::parse(buffer.str()));
}

ModelSpace parse_model(const std::string& text) {
  if (text.rfind("finite:", 0) == 0) {
    const std::string digits = text.substr(7);
    if (digits.empty() ||
        digits.find_first_not_of("0123456789") != std::string::npos) {
      throw UsageError("--model finite:<n> needs a decimal n, got: " + text);
    }
    return ModelSpace::finite_discrete(Nat(digits));
  }
  if (text == "discrete-omega") return ModelSpace::countable_discrete();
  if (text == "dyadic-interval") return ModelSpace::dyadic_interval();
  if (text == "discrete-uncountable") return ModelSpace::uncountable_discrete();
  throw UsageError("unknown --model: " + text);
}

Nat parse_count(const std::string& text, const char* flag) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw UsageError(std::string(flag) + " needs a decimal value, got: " + text);
  }
  return Nat(text);
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

int run(int argc, char** argv) {
  CLI::App app{"symbolic classification of compact countable point sets"};
  app.require_subcommand(1);

  // ord: Cantor normal form arithmetic on notation strings.
  CLI::App* ord = app.add_subcommand("ord", "ordinal arithmetic");
  ord->require_subcommand(1);
  std::string lhs, rhs, nat_arg;

  CLI::App* ord_norm = ord->add_subcommand("norm", "normalize an expression");
  ord_norm->add_option("expr", lhs)->required();
  ord_norm->callback(
      [&] { std::cout << print_ordinal(parse_ordinal(lhs)) << "\n"; });

  CLI::App* ord_add = ord->add_subcommand("add", "left + right");
  ord_add->add_option("left", lhs)->required();
  ord_add->add_option("right", rhs)->required();
  ord_add->callback([&] {
    std::cout << print_ordinal(add(parse_ordinal(lhs), parse_ordinal(rhs)))
              << "\n";
  });

  CLI::App* ord_mul = ord->add_subcommand("mul", "ordinal * natural");
  ord_mul->add_option("left", lhs)->required();
  ord_mul->add_option("nat", nat_arg)->required();
  ord_mul->callback([&] {
    std::cout << print_ordinal(
                     mul_nat(parse_ordinal(lhs), parse_count(nat_arg, "nat")))
              << "\n";
  });

  CLI::App* ord_pow = ord->add_subcommand("pow", "w^exponent");
  ord_pow->add_option("exponent", lhs)->required();
  ord_pow->callback(
      [&] { std::cout << print_ordinal(omega_pow(parse_ordinal(lhs))) << "\n"; });

  CLI::App* ord_cmp = ord->add_subcommand("cmp", "compare two expressions");
  ord_cmp->add_option("left", lhs)->required();
  ord_cmp->add_option("right", rhs)->required();
  ord_cmp->callback([&] {
    switch (compare(parse_ordinal(lhs), parse_ordinal(rhs))) {
      case Comparison::Less: std::cout << "<\n"; break;
      case Comparison::Equal: std::cout << "=\n"; break;
      case Comparison::Greater: std::cout << ">\n"; break;
    }
  });

  // space: tree construction and the operations on trees.
  CLI::App* space = app.add_subcommand("space", "point-set tree operations");
  space->require_subcommand(1);
  std::string in_path, alpha_text, p_text, a_text = "0", b_text = "1";
  std::string format = "json", file_a, file_b;
  std::size_t depth = 0, times = 1;

  CLI::App* sp_canonical =
      space->add_subcommand("canonical", "canonical tree for (alpha, p)");
  sp_canonical->add_option("--alpha", alpha_text, "rank, ordinal notation")
      ->required();
  sp_canonical->add_option("--p", p_text, "piece count")->required();
  sp_canonical->callback([&] {
    print_json(to_json(
        canonical(parse_ordinal(alpha_text), parse_count(p_text, "--p"))));
  });

  CLI::App* sp_cb = space->add_subcommand("cb", "characteristic (alpha,p)");
  sp_cb->add_option("--in", in_path, "tree JSON file (default stdin)");
  sp_cb->callback([&] {
    const CbPair cb = cb_char(read_tree(in_path));
    std::cout << "(" << print_ordinal(cb.rank) << "," << cb.count.str()
              << ")\n";
  });

  CLI::App* sp_classify =
      space->add_subcommand("classify", "order type w^alpha*p+1");
  sp_classify->add_option("--in", in_path, "tree JSON file (default stdin)");
  sp_classify->callback(
      [&] { std::cout << print_ordinal(classify(read_tree(in_path))) << "\n"; });

  CLI::App* sp_derive = space->add_subcommand("derive", "limit-point set");
  sp_derive->add_option("--in", in_path, "tree JSON file (default stdin)");
  sp_derive->add_option("--times", times, "number of derivations");
  sp_derive->callback([&] {
    Compactum k = read_tree(in_path);
    for (std::size_t i = 0; i < times; ++i) k = derive(k);
    print_json(to_json(k));
  });

  CLI::App* sp_truncate =
      space->add_subcommand("truncate", "finite depth-d approximation");
  sp_truncate->add_option("--in", in_path, "tree JSON file (default stdin)");
  sp_truncate->add_option("--depth", depth, "materialized annuli per tail")
      ->required();
  sp_truncate->callback(
      [&] { print_json(to_json(truncate(read_tree(in_path), depth))); });

  CLI::App* sp_embed =
      space->add_subcommand("embed", "rational embedding of a truncation");
  sp_embed->add_option("--in", in_path, "tree JSON file (default stdin)");
  sp_embed->add_option("--depth", depth, "truncation depth")->required();
  sp_embed->add_option("--a", a_text, "left endpoint (rational)");
  sp_embed->add_option("--b", b_text, "right endpoint (rational)");
  sp_embed->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  sp_embed->callback([&] {
    const Embedding e =
        embed(truncate(read_tree(in_path), depth), parse_rat(a_text),
              parse_rat(b_text));
    if (format == "csv") {
      std::cout << to_csv(e);
    } else {
      print_json(to_json(e));
    }
  });

  CLI::App* sp_labels =
      space->add_subcommand("labels", "order-type labels up to depth d");
  sp_labels->add_option("--in", in_path, "tree JSON file (default stdin)");
  sp_labels->add_option("--depth", depth, "materialization depth")->required();
  sp_labels->callback(
      [&] { print_json(to_json(homeo_labels(read_tree(in_path), depth))); });

  CLI::App* sp_equiv =
      space->add_subcommand("equiv", "are two trees homeomorphic");
  sp_equiv->add_option("a", file_a, "first tree JSON file")->required();
  sp_equiv->add_option("b", file_b, "second tree JSON file")->required();
  sp_equiv->callback([&] {
    std::cout << (equivalent(read_tree_file(file_a), read_tree_file(file_b))
                      ? "true\n"
                      : "false\n");
  });

  // partition: class summaries for the model spaces.
  CLI::App* partition =
      app.add_subcommand("partition", "homeomorphism-class summary");
  std::string model_text, rank_bound_text = "w^2", count_bound_text = "3";
  partition->add_option("--model", model_text,
                        "finite:<n> | discrete-omega | dyadic-interval | "
                        "discrete-uncountable")
      ->required();
  partition->add_option("--rank-bound", rank_bound_text,
                        "largest sampled rank, ordinal notation");
  partition->add_option("--count-bound", count_bound_text,
                        "largest sampled count");
  partition->callback([&] {
    const ModelSpace space_model = parse_model(model_text);
    const ClassSummary summary =
        cb_image(space_model, parse_ordinal(rank_bound_text),
                 parse_count(count_bound_text, "--count-bound"));
    print_json(to_json(space_model, summary));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
