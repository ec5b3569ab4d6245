// JSON-in / JSON-out command line over the lattice toolkit. One request
// per invocation; exit code 0 on success, 1 on input validation failure,
// 2 on an internal invariant violation.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "tav/json_io.hpp"

namespace {

using tav::json;

constexpr const char* kConvention =
    "standard: S = [[0, I], [-I, 0]], E((x,xi),(y,eta)) = eta(x) - xi(y)";

struct CommonOptions {
  std::string input_path;
  std::string output_path;
  std::string prime;
  std::string convention = "standard";
  std::optional<std::uint64_t> seed;
};

json read_request(const CommonOptions& opts) {
  std::string text;
  if (opts.input_path.empty()) {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    text = buffer.str();
  } else {
    std::ifstream in(opts.input_path);
    tav::require(in.good(), tav::errc::invalid_argument,
                 "cannot open input file: " + opts.input_path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }
  json parsed = json::parse(text, nullptr, false);
  tav::require(!parsed.is_discarded(), tav::errc::invalid_argument,
               "input is not valid JSON");
  return parsed;
}

void write_response(const CommonOptions& opts, const json& response) {
  if (opts.output_path.empty()) {
    std::cout << response.dump(2) << "\n";
  } else {
    std::ofstream out(opts.output_path);
    tav::require(out.good(), tav::errc::invalid_argument,
                 "cannot open output file: " + opts.output_path);
    out << response.dump(2) << "\n";
  }
}

std::optional<tav::Int> resolve_prime(const CommonOptions& opts, const json& request) {
  if (!opts.prime.empty()) return tav::parse_int(opts.prime);
  if (request.contains("prime")) return tav::decode_int(request.at("prime"));
  return std::nullopt;
}

json run_snf(const json& request, const CommonOptions&) {
  auto matrix = tav::decode_int_matrix(tav::field(request, "matrix"));
  auto snf = tav::smith_normal_form(matrix);
  json out = tav::encode(snf);
  // Round-trip guard: U * A * V must reproduce D exactly.
  tav::ensure(tav::equal(tav::IntMatrix(snf.U * matrix * snf.V), snf.D),
              "Smith decomposition must recompose");
  return out;
}

json run_decompose(const json& request, const CommonOptions& opts) {
  auto chain = tav::decode_chain(tav::field(request, "chain"));
  auto prime = resolve_prime(opts, request);
  auto cert = tav::decompose_principal_chain(chain, prime);
  auto check = tav::verify_decomposition(cert);
  json out = tav::encode(cert);
  if (prime) out["prime"] = tav::encode(*prime);
  out["verification"] = tav::encode(check);
  return out;
}

json run_witness(const json& request, const CommonOptions& opts) {
  auto chain = tav::decode_chain(tav::field(request, "chain"));
  auto prime = resolve_prime(opts, request);
  tav::TwistOrderPolicy policy = tav::TwistOrderPolicy::kernel_exponent;
  if (request.contains("n_policy")) {
    const std::string name = request.at("n_policy").get<std::string>();
    if (name == "exponent") {
      policy = tav::TwistOrderPolicy::kernel_exponent;
    } else if (name == "lcm") {
      policy = tav::TwistOrderPolicy::global_lcm;
    } else {
      tav::fail(tav::errc::invalid_argument, "n_policy must be \"exponent\" or \"lcm\"");
    }
  }
  return tav::encode(tav::run_witness_pipeline(chain, policy, prime));
}

json run_verify_symplectic(const json& request, const CommonOptions&) {
  auto n = tav::decode_int(tav::field(request, "n"));
  auto j_src = tav::decode_rat_matrix(tav::field(request, "J_src"));
  auto b_src = tav::decode_rat_matrix(tav::field(request, "B_src"));
  auto j_dst = tav::decode_rat_matrix(tav::field(request, "J_dst"));
  auto b_dst = tav::decode_rat_matrix(tav::field(request, "B_dst"));
  auto psi = tav::decode_int_matrix(tav::field(request, "psi"));
  tav::require(j_src.rows() % 2 == 0 && j_src.rows() > 0, tav::errc::invalid_argument,
               "J must be 2g x 2g");
  const tav::Index genus = j_src.rows() / 2;

  auto src = tav::build_J_alpha(tav::ComplexStructure(genus, j_src),
                                tav::BField(genus, n, b_src));
  auto dst = tav::build_J_alpha(tav::ComplexStructure(genus, j_dst),
                                tav::BField(genus, n, b_dst));

  const tav::Index dim = 4 * genus;
  tav::require(psi.rows() == dim && psi.cols() == dim, tav::errc::invalid_argument,
               "psi must be 4g x 4g");
  const bool unimodular = tav::is_unimodular(psi);
  tav::IntMatrix s = tav::symplectic_form_matrix(dim / 2);
  const bool preserves_form =
      tav::equal(tav::IntMatrix(psi.transpose() * s * psi), s);
  tav::RatMatrix psi_q = tav::to_rational(psi);
  const bool intertwines = tav::equal(tav::RatMatrix(psi_q * src.matrix()),
                                      tav::RatMatrix(dst.matrix() * psi_q));

  json out;
  out["unimodular"] = unimodular;
  out["preserves_form"] = preserves_form;
  out["intertwines"] = intertwines;
  out["symplectic_isomorphism"] = tav::is_symplectic_isomorphism(psi, src, dst);
  return out;
}

json run_ks_degree(const json& request, const CommonOptions&) {
  if (request.contains("matrix")) {
    auto matrix = tav::decode_int_matrix(request.at("matrix"));
    return tav::encode(tav::exterior_kernel_oracle(matrix));
  }
  auto d = tav::decode_int(tav::field(request, "d"));
  long r = tav::field(request, "r").get<long>();
  json out;
  out["r"] = r;
  out["d"] = tav::encode(d);
  out["closed_form"] = tav::encode(tav::ks_degree(d, static_cast<tav::Index>(r)));
  out["even_clifford_rank"] =
      tav::encode(tav::even_clifford_rank(static_cast<tav::Index>(r)));
  out["closed_form_square"] =
      tav::is_perfect_square(tav::ks_degree(d, static_cast<tav::Index>(r)));
  return out;
}

json run_cocycle(const json& request, const CommonOptions&) {
  const std::string op = tav::field(request, "op").get<std::string>();
  auto n = tav::decode_int(tav::field(request, "n"));
  json out;
  out["op"] = op;
  if (op == "pairing-of-cocycle") {
    tav::BilinearCocycle beta(n, tav::decode_int_matrix(tav::field(request, "beta")));
    out["E"] = tav::encode(tav::pairing_of_cocycle(beta).matrix());
  } else if (op == "cocycle-from-pairing") {
    tav::AlternatingForm e(n, tav::decode_int_matrix(tav::field(request, "E")));
    out["beta"] = tav::encode(tav::cocycle_from_pairing(e).matrix());
  } else if (op == "verify-table") {
    auto m = tav::decode_int(tav::field(request, "m"));
    long k = tav::field(request, "k").get<long>();
    auto values = tav::decode_int_list(tav::field(request, "table"));
    tav::CocycleTable table(n, m, static_cast<tav::Index>(k), std::move(values));
    out["valid"] = tav::verify_cocycle_table(table);
  } else {
    tav::fail(tav::errc::invalid_argument,
              "op must be pairing-of-cocycle, cocycle-from-pairing, or verify-table");
  }
  return out;
}

int dispatch(const std::string& command, const CommonOptions& opts,
             const std::function<json(const json&, const CommonOptions&)>& handler) {
  try {
    tav::require(opts.convention == "standard", tav::errc::invalid_argument,
                 "only the \"standard\" symplectic convention is implemented");
    json request = read_request(opts);
    json response;
    response["command"] = command;
    response["convention"] = kConvention;
    if (opts.seed) response["seed"] = *opts.seed;
    json payload = handler(request, opts);
    response.update(payload);
    write_response(opts, response);
    return 0;
  } catch (const tav::Error& e) {
    std::cerr << "error (" << tav::errc_name(e.code()) << "): " << e.what() << "\n";
    return e.code() == tav::errc::internal ? 2 : 1;
  } catch (const json::exception& e) {
    std::cerr << "error (json): " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error (unexpected): " << e.what() << "\n";
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact lattice invariants of twisted abelian varieties"};
  app.require_subcommand(1);

  struct Entry {
    const char* name;
    const char* help;
    std::function<json(const json&, const CommonOptions&)> handler;
    bool takes_prime;
  };
  const Entry entries[] = {
      {"snf", "Smith normal form of an integer matrix", run_snf, false},
      {"decompose", "factor a principal chain into spectrally paired pieces",
       run_decompose, true},
      {"witness", "end-to-end derived-isogeny witness for a principal chain",
       run_witness, true},
      {"verify-symplectic", "check a candidate symplectic isomorphism",
       run_verify_symplectic, false},
      {"ks-degree", "Kuga-Satake isogeny degree (closed form and oracle)",
       run_ks_degree, false},
      {"cocycle", "pairing/cocycle dictionary and table verification",
       run_cocycle, false},
  };

  int exit_code = 0;
  for (const auto& entry : entries) {
    auto* sub = app.add_subcommand(entry.name, entry.help);
    auto opts = std::make_shared<CommonOptions>();
    sub->add_option("--in", opts->input_path, "input JSON file (default: stdin)");
    sub->add_option("--out", opts->output_path, "output JSON file (default: stdout)");
    if (entry.takes_prime)
      sub->add_option("--prime", opts->prime,
                      "require the result to be prime-to-p (overrides the request)");
    sub->add_option("--seed", [opts](const CLI::results_t& values) {
      opts->seed = std::stoull(values.at(0));
      return true;
    }, "PRNG seed to record in the output");
    sub->add_option("--convention", opts->convention,
                    "symplectic sign convention (fixed; must be \"standard\")");
    const Entry* e = &entry;
    sub->callback([&exit_code, e, opts] {
      exit_code = dispatch(e->name, *opts, e->handler);
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }
  return exit_code;
}
