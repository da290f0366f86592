#include "qcodes/code.hpp"

#include <sstream>

#include <json.hpp>

#include "qcodes/error.hpp"

namespace qcodes {

namespace {

void require_length(const CodeSpec& code, std::size_t actual, const char* what) {
  if (actual != code.length()) {
    throw Error(ErrorCode::kLengthMismatch, std::string(what) + " has length " +
                                                std::to_string(actual) + ", expected " +
                                                std::to_string(code.length()));
  }
}

}  // namespace

Provenance provenance_of(const CodeFamily& family) {
  if (const auto* ps = std::get_if<PrimeSquareFamily>(&family)) {
    return PrimePower{ps->pi, ps->power};
  }
  const auto& tp = std::get<TwoPrimesFamily>(family);
  return PrimeProduct{{tp.pi1, tp.pi2}};
}

CodeSpec make_code_spec(const CodeFamily& family, ModulusRef modulus, std::size_t length,
                        QuotientSign sign, const Residue& root) {
  const ModulusRef expected = make_modulus(provenance_of(family));
  if (!(*expected == *modulus) || !(*root.modulus() == *modulus)) {
    throw Error(ErrorCode::kModulusMismatch, "code modulus does not match its family");
  }

  std::size_t family_length = 0;
  QuotientSign family_sign = QuotientSign::kPlus;
  if (std::holds_alternative<PrimeSquareFamily>(family)) {
    family_length = static_cast<std::size_t>(unit_group_order(*modulus) / 2);
  } else {
    const auto& tp = std::get<TwoPrimesFamily>(family);
    if (tp.target != 1 && tp.target != 2) {
      throw Error(ErrorCode::kInvalidArgument, "target must be 1 or 2");
    }
    family_length = static_cast<std::size_t>(modulus->prime_norms()[tp.target - 1] - 1);
    family_sign = QuotientSign::kMinus;
  }
  if (length != family_length) {
    throw Error(ErrorCode::kInvalidArgument, "length " + std::to_string(length) +
                                                 " does not match the family length " +
                                                 std::to_string(family_length));
  }
  if (sign != family_sign) {
    throw Error(ErrorCode::kInvalidArgument, "quotient sign does not match the code family");
  }

  // Throws kRootCheckFailed unless root^n = -sign.
  Poly quotient = divide_by_linear(length, to_int(sign), root);
  Poly gen = Poly(modulus, {-root, one(modulus)});
  if (!(gen * quotient == Poly::x_pow_plus(modulus, length, to_int(sign)))) {
    throw Error(ErrorCode::kInternalContradiction, "generator does not divide the ambient polynomial");
  }
  return CodeSpec(family, std::move(modulus), length, sign, root, std::move(gen));
}

CodeSpec build_prime_power_code(const K1Element& pi, int power,
                                const std::optional<K1Element>& root_candidate) {
  ModulusRef modulus = make_modulus(PrimePower{pi, power});
  std::optional<Residue> candidate;
  if (root_candidate) candidate = reduce(*root_candidate, modulus);
  Residue root = find_primitive_root(modulus, candidate);
  const auto n = static_cast<std::size_t>(unit_group_order(*modulus) / 2);
  return make_code_spec(PrimeSquareFamily{pi, power}, modulus, n, QuotientSign::kPlus, root);
}

CodeSpec build_crt_code(const K1Element& pi1, const K1Element& pi2, int target) {
  if (target != 1 && target != 2) throw Error(ErrorCode::kInvalidArgument, "target must be 1 or 2");
  ModulusRef modulus = make_modulus(PrimeProduct{{pi1, pi2}});
  Residue root = find_partial_generator(modulus, static_cast<std::size_t>(target));
  const auto n = static_cast<std::size_t>(modulus->prime_norms()[target - 1] - 1);
  return make_code_spec(TwoPrimesFamily{pi1, pi2, target}, modulus, n, QuotientSign::kMinus, root);
}

Matrix generator_matrix(const CodeSpec& code) {
  const std::size_t n = code.length();
  const ModulusRef& m = code.modulus();
  Matrix g;
  g.reserve(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    std::vector<Residue> row(n, zero(m));
    row[i] = code.gen_poly().coeff(0);
    row[i + 1] = code.gen_poly().coeff(1);
    g.push_back(std::move(row));
  }
  return g;
}

Word encode(const CodeSpec& code, std::span<const Residue> message) {
  if (message.size() + 1 != code.length()) {
    throw Error(ErrorCode::kLengthMismatch, "message has length " + std::to_string(message.size()) +
                                                ", expected " + std::to_string(code.length() - 1));
  }
  Poly m(code.modulus(), std::vector<Residue>(message.begin(), message.end()));
  return (m * code.gen_poly()).to_vector(code.length());
}

Word encode_with_matrix(const Matrix& g, std::span<const Residue> message) {
  if (g.empty() || message.size() != g.size()) {
    throw Error(ErrorCode::kLengthMismatch, "message length does not match the generator matrix");
  }
  Word out(g.front().size(), zero(message.front().modulus()));
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = out[j] + message[i] * g[i][j];
  }
  return out;
}

bool is_codeword(const CodeSpec& code, std::span<const Residue> word) {
  require_length(code, word.size(), "word");
  return eval(word, code.root()).is_zero();
}

Word shift(const CodeSpec& code, std::span<const Residue> word) {
  require_length(code, word.size(), "word");
  Word out;
  out.reserve(word.size());
  const Residue& last = word.back();
  out.push_back(code.quotient_sign() == QuotientSign::kPlus ? -last : last);
  out.insert(out.end(), word.begin(), word.end() - 1);
  return out;
}

CodeSpecRecord to_record(const CodeSpec& code) {
  return {code.family(),
          code.modulus()->element(),
          code.modulus()->norm(),
          static_cast<std::int64_t>(code.length()),
          to_int(code.quotient_sign()),
          code.root().rep()};
}

CodeSpec from_record(const CodeSpecRecord& record) {
  ModulusRef modulus = make_modulus(provenance_of(record.family));
  if (!(modulus->element() == record.modulus) || modulus->norm() != record.ring_norm) {
    throw Error(ErrorCode::kParse, "stored modulus " + format_element(record.modulus) + " (norm " +
                                       std::to_string(record.ring_norm) +
                                       ") does not match the code family");
  }
  if (record.length < 1) throw Error(ErrorCode::kParse, "length must be positive");
  if (record.quotient_sign != 1 && record.quotient_sign != -1) {
    throw Error(ErrorCode::kParse, "quotient_sign must be 1 or -1");
  }
  return make_code_spec(record.family, modulus, static_cast<std::size_t>(record.length),
                        static_cast<QuotientSign>(record.quotient_sign),
                        reduce(record.root, modulus));
}

namespace {

using OrderedJson = nlohmann::ordered_json;

OrderedJson pair_json(const K1Element& x) { return OrderedJson::array({x.a, x.b}); }

K1Element pair_from(const nlohmann::json& doc, const char* key) {
  const auto& v = doc.at(key);
  if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer()) {
    throw Error(ErrorCode::kParse, std::string("field '") + key + "' must be a pair of integers");
  }
  return {v[0].get<std::int64_t>(), v[1].get<std::int64_t>()};
}

std::int64_t int_from(const nlohmann::json& doc, const char* key) {
  const auto& v = doc.at(key);
  if (!v.is_number_integer()) {
    throw Error(ErrorCode::kParse, std::string("field '") + key + "' must be an integer");
  }
  return v.get<std::int64_t>();
}

}  // namespace

std::string to_json(const CodeSpecRecord& record) {
  OrderedJson doc;
  if (const auto* ps = std::get_if<PrimeSquareFamily>(&record.family)) {
    doc["family"] = "prime_square";
    doc["pi"] = pair_json(ps->pi);
    doc["power"] = ps->power;
  } else {
    const auto& tp = std::get<TwoPrimesFamily>(record.family);
    doc["family"] = "two_primes";
    doc["pi1"] = pair_json(tp.pi1);
    doc["pi2"] = pair_json(tp.pi2);
    doc["target"] = tp.target;
  }
  doc["modulus"] = pair_json(record.modulus);
  doc["ring_norm"] = record.ring_norm;
  doc["length"] = record.length;
  doc["quotient_sign"] = record.quotient_sign;
  doc["root"] = pair_json(record.root);
  return doc.dump() + "\n";
}

CodeSpecRecord parse_code_spec_json(std::string_view text) {
  try {
    const auto doc = nlohmann::json::parse(text);
    if (!doc.is_object()) throw Error(ErrorCode::kParse, "code file must hold a JSON object");
    CodeSpecRecord record;
    const std::string family = doc.at("family").get<std::string>();
    if (family == "prime_square") {
      record.family = PrimeSquareFamily{pair_from(doc, "pi"), static_cast<int>(int_from(doc, "power"))};
    } else if (family == "two_primes") {
      record.family = TwoPrimesFamily{pair_from(doc, "pi1"), pair_from(doc, "pi2"),
                                      static_cast<int>(int_from(doc, "target"))};
    } else {
      throw Error(ErrorCode::kParse, "unknown code family '" + family + "'");
    }
    record.modulus = pair_from(doc, "modulus");
    record.ring_norm = int_from(doc, "ring_norm");
    record.length = int_from(doc, "length");
    record.quotient_sign = static_cast<int>(int_from(doc, "quotient_sign"));
    record.root = pair_from(doc, "root");
    return record;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("malformed code file: ") + e.what());
  }
}

std::string describe(const CodeSpec& code) {
  std::ostringstream os;
  if (const auto* ps = std::get_if<PrimeSquareFamily>(&code.family())) {
    os << "prime_square pi=" << ps->pi << " power=" << ps->power;
  } else {
    const auto& tp = std::get<TwoPrimesFamily>(code.family());
    os << "two_primes pi1=" << tp.pi1 << " pi2=" << tp.pi2 << " target=" << tp.target;
  }
  os << " modulus=" << code.modulus()->element() << " N=" << code.modulus()->norm()
     << " n=" << code.length() << " ambient=x^" << code.length()
     << (code.quotient_sign() == QuotientSign::kPlus ? "+1" : "-1") << " root=" << code.root();
  return os.str();
}

}  // namespace qcodes
