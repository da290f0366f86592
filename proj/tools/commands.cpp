#include "commands.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qcodes/code.hpp"
#include "qcodes/decoder.hpp"
#include "qcodes/error.hpp"
#include "qcodes/oracle.hpp"
#include "qcodes/verify.hpp"

namespace qcodes::cli {

namespace {

struct Flags {
  std::int64_t p = 0;
  std::string pi, pi1, pi2, alpha;
  int power = 2;
  int target = 0;
  std::int64_t limit = -1;
  std::string out_file, code_file, message, word, method = "table";
  std::optional<std::int64_t> pos;
  int sign = 1;
  std::uint64_t seed = 42;
  std::size_t trials = 200;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::kInvalidArgument, "cannot write '" + path + "'");
  file << text;
}

CodeSpec load_code(const std::string& path) { return from_record(parse_code_spec_json(read_file(path))); }

// Word literal, zero-padded to the code length.
Word parse_word(const CodeSpec& code, const std::string& text, std::size_t length) {
  const auto elements = parse_poly(text);
  if (elements.size() > length) {
    throw Error(ErrorCode::kLengthMismatch, "got " + std::to_string(elements.size()) +
                                                " symbols, at most " + std::to_string(length) +
                                                " allowed");
  }
  Word word;
  for (const auto& e : elements) word.push_back(reduce(e, code.modulus()));
  word.resize(length, zero(code.modulus()));
  return word;
}

K1Element prime_from_flags(const Flags& f) {
  if (!f.pi.empty()) return parse_element(f.pi);
  if (f.p == 0) throw Error(ErrorCode::kInvalidArgument, "one of --pi or --p is required");
  if (!is_rational_prime(f.p)) {
    throw Error(ErrorCode::kNotPrime, std::to_string(f.p) + " is not a rational prime");
  }
  auto pi = represent_prime(f.p);
  if (!pi) throw Error(ErrorCode::kUnrepresentable, "no H(K1) representation for " + std::to_string(f.p));
  return *pi;
}

std::string signed_value(const K1Element& v) {
  std::string s = format_element(v);
  return s.front() == '-' ? s : "+" + s;
}

int cmd_prime(const Flags& f, std::ostream& out, std::ostream& err) {
  if (!is_rational_prime(f.p)) {
    err << "error: " << f.p << " is not a rational prime\n";
    return kUsage;
  }
  auto pi = represent_prime(f.p);
  if (!pi) {
    out << "no H(K1) representation for " << f.p << '\n';
    return kUsage;
  }
  out << "pi = " << format_element(*pi) << "  (norm " << f.p << ")\n";
  return kOk;
}

int cmd_table(const Flags& f, std::ostream& out) {
  const ModulusRef modulus = make_modulus(PrimePower{prime_from_flags(f), f.power});
  std::optional<Residue> candidate;
  if (!f.alpha.empty()) candidate = reduce(parse_element(f.alpha), modulus);
  const Residue alpha = find_primitive_root(modulus, candidate);
  const std::int64_t limit = f.limit >= 0 ? f.limit : unit_group_order(*modulus);
  std::ostringstream text;
  Residue power = one(modulus);
  for (std::int64_t s = 0; s < limit; ++s, power = power * alpha) {
    text << s << '\t' << format_element(power.rep()) << '\n';
  }
  out << text.str();
  return kOk;
}

int cmd_build(const Flags& f, std::ostream& out) {
  std::optional<K1Element> candidate;
  if (!f.alpha.empty()) candidate = parse_element(f.alpha);
  const CodeSpec code = build_prime_power_code(prime_from_flags(f), f.power, candidate);
  write_output(f.out_file, to_json(to_record(code)), out);
  return kOk;
}

int cmd_build_crt(const Flags& f, std::ostream& out) {
  const CodeSpec code = build_crt_code(parse_element(f.pi1), parse_element(f.pi2), f.target);
  write_output(f.out_file, to_json(to_record(code)), out);
  return kOk;
}

int cmd_encode(const Flags& f, std::ostream& out) {
  const CodeSpec code = load_code(f.code_file);
  const Word message = parse_word(code, f.message, code.length() - 1);
  out << format_poly(encode(code, message)) << '\n';
  return kOk;
}

int cmd_corrupt(const Flags& f, std::ostream& out, std::ostream& err) {
  const CodeSpec code = load_code(f.code_file);
  const Word word = parse_word(code, f.word, code.length());
  ErrorPattern error;
  if (f.pos) {
    if (*f.pos < 0) throw Error(ErrorCode::kInvalidArgument, "--pos must be non-negative");
    if (f.sign != 1 && f.sign != -1) throw Error(ErrorCode::kInvalidArgument, "--sign must be +1 or -1");
    error = {static_cast<std::size_t>(*f.pos), {f.sign, 0}};
  } else {
    Prng rng(f.seed);
    const auto position = static_cast<std::size_t>(rng() % code.length());
    error = {position, {(rng() % 2 == 0) ? 1 : -1, 0}};
  }
  out << format_poly(inject_error(code, word, error)) << '\n';
  err << "injected " << signed_value(error.value) << " @ " << error.position << '\n';
  return kOk;
}

int cmd_decode(const Flags& f, std::ostream& out) {
  const CodeSpec code = load_code(f.code_file);
  const Word received = parse_word(code, f.word, code.length());
  DecodeResult result;
  if (f.method == "table") {
    result = decode(code, SyndromeTable::build(code), received);
  } else if (f.method == "dlog") {
    result = dlog_decode(code, received);
  } else {
    result = oracle::reference_decode(code, received);
  }
  switch (result.status) {
    case DecodeStatus::kClean:
      out << "clean\n";
      break;
    case DecodeStatus::kCorrected:
      out << "corrected: yes  error: " << signed_value(result.error->value) << " @ "
          << result.error->position << '\n';
      break;
    case DecodeStatus::kUncorrectable:
      out << "uncorrectable  syndrome: " << format_element(syndrome(code, received).rep()) << '\n';
      break;
  }
  out << "word: " << format_poly(result.corrected) << '\n';
  return result.status == DecodeStatus::kUncorrectable ? kUncorrectable : kOk;
}

int cmd_verify(const Flags& f, std::ostream& out) {
  const CodeSpecRecord record =
      f.code_file.empty() ? example_code_record() : parse_code_spec_json(read_file(f.code_file));
  VerifyOptions options;
  options.trials = f.trials;
  options.seed = f.seed;
  const VerificationReport report = run_verification(record, options);
  out << report.render();
  return report.passed() ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cyclic codes over finite quaternion integer rings H(K1)_m", "qcodes"};
  app.require_subcommand(1);
  Flags f;

  auto* prime = app.add_subcommand("prime", "Canonical prime pi = a + bw with a^2 + 3b^2 = p");
  prime->add_option("--p", f.p, "Rational prime")->required();

  auto* table = app.add_subcommand("table", "Powers of a primitive root modulo pi^k (TSV)");
  auto* build = app.add_subcommand("build", "Code of length phi(p^k)/2 over H(K1)_{pi^k}");
  for (auto* sub : {table, build}) {
    auto* pi = sub->add_option("--pi", f.pi, "Prime element, e.g. 2,1 or 2+1w");
    sub->add_option("--p", f.p, "Rational prime (uses its canonical pi)")->excludes(pi);
    sub->add_option("--power", f.power, "Exponent k of the modulus pi^k")->capture_default_str();
    sub->add_option("--alpha", f.alpha, "Primitive root to use instead of searching");
  }
  table->add_option("--limit", f.limit, "Number of rows (default phi(N))");
  build->add_option("--out", f.out_file, "Output code file (default stdout)");

  auto* build_crt = app.add_subcommand("build-crt", "Code of length phi(p_target) over H(K1)_{pi1 pi2}");
  build_crt->add_option("--pi1", f.pi1, "First prime")->required();
  build_crt->add_option("--pi2", f.pi2, "Second prime")->required();
  build_crt->add_option("--target", f.target, "1 or 2")->required()->check(CLI::IsMember({1, 2}));
  build_crt->add_option("--out", f.out_file, "Output code file (default stdout)");

  auto* enc = app.add_subcommand("encode", "Encode a message polynomial (n-1 symbols)");
  auto* corrupt = app.add_subcommand("corrupt", "Add a +-1 error to a word");
  auto* dec = app.add_subcommand("decode", "Decode a received word");
  for (auto* sub : {enc, corrupt, dec}) {
    sub->add_option("--code", f.code_file, "Code file")->required()->check(CLI::ExistingFile);
  }
  enc->add_option("--message", f.message, "Comma-separated symbols, constant term first")->required();
  corrupt->add_option("--word", f.word, "Comma-separated symbols, constant term first")->required();
  dec->add_option("--word", f.word, "Comma-separated symbols, constant term first")->required();
  corrupt->add_option("--pos", f.pos, "Error position (random when omitted)");
  corrupt->add_option("--sign", f.sign, "Error value +1 or -1")->capture_default_str();
  corrupt->add_option("--seed", f.seed, "PRNG seed for a random error")->capture_default_str();
  dec->add_option("--method", f.method, "table | dlog | reference")
      ->capture_default_str()
      ->check(CLI::IsMember({"table", "dlog", "reference"}));

  auto* verify = app.add_subcommand("verify", "Run the oracle and invariant suite on a code");
  verify->add_option("--code", f.code_file, "Code file (default: the pi = 2+1w example)")
      ->check(CLI::ExistingFile);
  verify->add_option("--trials", f.trials, "Random messages on top of the zero message")
      ->capture_default_str();
  verify->add_option("--seed", f.seed, "PRNG seed")->capture_default_str();

  std::vector<std::string> argv_storage;
  argv_storage.push_back("qcodes");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*prime) return cmd_prime(f, out, err);
    if (*table) return cmd_table(f, out);
    if (*build) return cmd_build(f, out);
    if (*build_crt) return cmd_build_crt(f, out);
    if (*enc) return cmd_encode(f, out);
    if (*corrupt) return cmd_corrupt(f, out, err);
    if (*dec) return cmd_decode(f, out);
    if (*verify) return cmd_verify(f, out);
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace qcodes::cli
