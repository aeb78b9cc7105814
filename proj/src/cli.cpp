#include "projpair/cli.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "projpair/index.hpp"
#include "projpair/json_io.hpp"
#include "projpair/kato.hpp"
#include "projpair/perturbation.hpp"
#include "projpair/random_pair.hpp"
#include "projpair/subspaces.hpp"
#include "projpair/supersym.hpp"

namespace projpair::cli {

using json = nlohmann::ordered_json;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
      return kExitParse;
    case ErrorCode::NotSquare:
    case ErrorCode::NotHermitian:
    case ErrorCode::NotIdempotent:
    case ErrorCode::NonFinite:
    case ErrorCode::DimensionTooLarge:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::FrameNotOrthonormal:
    case ErrorCode::InvalidTolerance:
    case ErrorCode::InvalidContour:
      return kExitValidation;
    case ErrorCode::NoSwapExists:
      return kExitNoSwap;
    default:
      return kExitPrecondition;
  }
}

namespace {

struct Report {
  std::string command;
  json inputs = json::array();
  json outputs = json::object();
  json residuals = json::object();
};

json complex_json(Scalar z) { return json::array({z.real(), z.imag()}); }

Scalar parse_complex(const std::string& text) {
  std::istringstream in(text);
  double re = 0.0;
  double im = 0.0;
  char comma = 0;
  if (!(in >> re)) throw Error(ErrorCode::ParseError, "bad complex number: " + text);
  if (in >> comma) {
    if (comma != ',' || !(in >> im)) throw Error(ErrorCode::ParseError, "bad complex number: " + text);
  }
  if (in >> comma) throw Error(ErrorCode::ParseError, "bad complex number: " + text);
  return {re, im};
}

json sorted_eigenvalues(const ComplexMatrix& m) {
  std::vector<Scalar> values;
  if (m.size() > 0) {
    const ComplexVector ev = Eigen::ComplexEigenSolver<ComplexMatrix>(m, false).eigenvalues();
    values.assign(ev.data(), ev.data() + ev.size());
  }
  std::sort(values.begin(), values.end(), [](Scalar a, Scalar b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  json arr = json::array();
  for (Scalar v : values) arr.push_back(complex_json(v));
  return arr;
}

void emit(std::ostream& out, const Report& r, const json& status) {
  json doc = json::object();
  doc["command"] = r.command;
  doc["inputs"] = r.inputs;
  doc["outputs"] = r.outputs;
  doc["residuals"] = r.residuals;
  doc["status"] = status;
  out << doc.dump(2) << "\n";
}

json ok_status() { return json{{"ok", true}}; }

json error_status(ErrorCode code, const std::string& message, const std::vector<Error::Detail>& details) {
  json d = json::object();
  for (const auto& [k, v] : details) d[k] = v;
  return json{{"ok", false},
              {"code", to_string(code)},
              {"exit_code", exit_code_for(code)},
              {"message", message},
              {"details", d}};
}

OrthProjection load_projection(const std::string& path, const ToleranceConfig& tol, Report& r) {
  r.inputs.push_back(path);
  return validate_projection(io::read_matrix_file(path), tol);
}

struct Options {
  ToleranceConfig tol;
  std::string out_path;
  std::string path_a;
  std::string path_b;
  std::string z_text = "0";
  std::string center_text = "0";
  double radius = 1.0;
  Index nodes = 64;
  Index dim = 2;
  Index rank_p = 1;
  Index rank_q = 1;
  std::uint64_t seed = 0;
  std::vector<Index> kernel_dims{0, 0};
  Index generic = -1;
  double angle_min = 0.15;
  double angle_max = std::numbers::pi / 2 - 0.15;
};

void cmd_validate(const Options& o, Report& r) {
  const OrthProjection p = load_projection(o.path_a, o.tol, r);
  r.outputs["dim"] = p.dim();
  r.outputs["rank"] = p.rank();
  r.residuals["hermitian"] = p.hermitian_residual();
  r.residuals["idempotency"] = p.idempotency_residual();
}

void cmd_swap(const Options& o, Report& r) {
  const OrthProjection p = load_projection(o.path_a, o.tol, r);
  const OrthProjection q = load_projection(o.path_b, o.tol, r);
  const SwapExistence exists = swap_exists(p, q, o.tol);
  r.outputs["dim_k_pq"] = exists.dim_k_pq;
  r.outputs["dim_k_1p_1q"] = exists.dim_k_1p_1q;
  r.outputs["index"] = exists.dim_k_pq - exists.dim_k_1p_1q;
  const SwapResult swap = swap_unitary(p, q, o.tol);
  if (!o.out_path.empty()) io::write_matrix_file(o.out_path, swap.u);
  r.outputs["u"] = o.out_path.empty() ? json(nullptr) : json(o.out_path);
  r.outputs["is_symmetry"] = swap.is_symmetry;
  r.outputs["t_block_dims"] = swap.t_block_dims;
  const SwapResiduals res = swap_residuals(swap.u, p, q);
  r.residuals["upu_minus_q"] = res.p_to_q;
  r.residuals["uqu_minus_p"] = res.q_to_p;
  r.residuals["u2_minus_identity"] = res.involution;
  r.residuals["unitarity"] = res.unitarity;
}

void cmd_kato(const Options& o, Report& r) {
  const OrthProjection p = load_projection(o.path_a, o.tol, r);
  const OrthProjection q = load_projection(o.path_b, o.tol, r);
  r.outputs["norm_p_minus_q"] = operator_norm(p.matrix() - q.matrix());
  const ComplexMatrix u = kato_unitary(p, q, o.tol);
  if (!o.out_path.empty()) io::write_matrix_file(o.out_path, u);
  r.outputs["u"] = o.out_path.empty() ? json(nullptr) : json(o.out_path);
  r.outputs["determinant"] = complex_json(u.determinant());
  r.residuals["up_minus_qu"] = (u * p.matrix() - q.matrix() * u).norm();
  r.residuals["unitarity"] = unitarity_residual(u);
}

void cmd_index(const Options& o, Report& r) {
  const OrthProjection p = load_projection(o.path_a, o.tol, r);
  const OrthProjection q = load_projection(o.path_b, o.tol, r);
  const IndexReport ix = pair_index(p, q, o.tol);
  const FredholmDims fd = fredholm_dims(fredholm_map(p, q, o.tol), o.tol);
  r.outputs["dim_ker"] = ix.dim_ker;
  r.outputs["dim_coker"] = ix.dim_coker;
  r.outputs["index"] = ix.index;
  r.outputs["trace"] = ix.trace_pq;
  r.outputs["swap_possible"] = ix.swap_possible;
  r.outputs["fredholm_dim_ker"] = fd.dim_ker;
  r.outputs["fredholm_dim_coker"] = fd.dim_coker;
  r.residuals["trace_minus_index"] = std::abs(ix.trace_pq - static_cast<double>(ix.index));
}

void cmd_decompose(const Options& o, Report& r) {
  const OrthProjection p = load_projection(o.path_a, o.tol, r);
  const OrthProjection q = load_projection(o.path_b, o.tol, r);
  const PairSpectrum spectrum = pair_spectrum(p, q, o.tol);
  const KernelQuadruple kq = kernel_quadruple(spectrum);
  const HalmosSplit split = halmos_split(p, q, spectrum);
  const auto d = kq.dims();
  r.outputs["dim_k_pq"] = d[0];
  r.outputs["dim_k_p_1q"] = d[1];
  r.outputs["dim_k_1p_q"] = d[2];
  r.outputs["dim_k_1p_1q"] = d[3];
  r.outputs["generic_dim"] = kq.generic_dim();
  r.outputs["h1_dim"] = split.h1.size();
  r.outputs["h2_dim"] = split.h2.size();
  r.outputs["principal_angles"] = principal_angles(spectrum);
  const ComplexMatrix& h2 = split.h2.matrix();
  r.residuals["h2_invariance_p"] = (p.matrix() * h2 - h2 * split.p2).norm();
  r.residuals["h2_invariance_q"] = (q.matrix() * h2 - h2 * split.q2).norm();
}

void cmd_identities(const Options& o, Report& r) {
  const OrthProjection p = load_projection(o.path_a, o.tol, r);
  const OrthProjection q = load_projection(o.path_b, o.tol, r);
  const SuperPair sp = build_super(p, q);
  const IdentityResiduals res = identity_residuals(sp, p, q);
  const auto [p_back, q_back] = reconstruct_pq(sp);
  r.residuals["a2_plus_b2_minus_identity"] = res.sum_of_squares;
  r.residuals["ab_plus_ba"] = res.anticommutator;
  r.residuals["comm_p_a2"] = res.p_a2;
  r.residuals["comm_q_a2"] = res.q_a2;
  r.residuals["comm_p_b2"] = res.p_b2;
  r.residuals["comm_q_b2"] = res.q_b2;
  r.residuals["reconstruct_p"] = (p_back - p.matrix()).norm();
  r.residuals["reconstruct_q"] = (q_back - q.matrix()).norm();
}

ContourSpec contour_from(const Options& o) {
  return {parse_complex(o.center_text), o.radius, o.nodes};
}

void cmd_riesz(const Options& o, Report& r) {
  r.inputs.push_back(o.path_a);
  const MatrixFamily family = polynomial_family(io::read_family_file(o.path_a));
  const Scalar z = parse_complex(o.z_text);
  const ComplexMatrix m = family(z);
  const RieszResult res = riesz_projection_traced(m, contour_from(o), o.tol);
  if (!o.out_path.empty()) io::write_matrix_file(o.out_path, res.projector);
  r.outputs["projector"] = o.out_path.empty() ? json(nullptr) : json(o.out_path);
  r.outputs["rank"] = idempotent_range(res.projector).size();
  r.outputs["nodes"] = res.history.back().nodes;
  r.residuals["idempotency"] = idempotency_residual(res.projector);
  r.residuals["commutator"] = commutator_norm(m, res.projector);
  r.residuals["last_delta"] = res.history.back().delta;
}

void cmd_reduce(const Options& o, Report& r) {
  r.inputs.push_back(o.path_a);
  const MatrixFamily family = polynomial_family(io::read_family_file(o.path_a));
  const Scalar z = parse_complex(o.z_text);
  const ContourSpec contour = contour_from(o);
  const ReducedBlock red = reduce_family(family, z, contour, o.tol);
  if (!o.out_path.empty()) io::write_matrix_file(o.out_path, red.block);
  r.outputs["block"] = o.out_path.empty() ? json(nullptr) : json(o.out_path);
  r.outputs["rank"] = red.block.rows();
  r.outputs["eigenvalues"] = sorted_eigenvalues(red.block);
  const ComplexMatrix p0 = riesz_projection(family(Scalar(0.0)), contour, o.tol);
  const ComplexMatrix pz = riesz_projection(family(z), contour, o.tol);
  r.residuals["w_pz_minus_p0_w"] = (red.similarity * pz - p0 * red.similarity).norm();
}

void cmd_random(const Options& o, Report& r) {
  if (o.kernel_dims.size() != 2) throw Error(ErrorCode::ParseError, "--kernel-dims takes two integers");
  RandomPairSpec spec;
  spec.dim = o.dim;
  spec.rank_p = o.rank_p;
  spec.rank_q = o.rank_q;
  spec.k_pq = o.kernel_dims[0];
  spec.k_1p_1q = o.kernel_dims[1];
  spec.seed = o.seed;
  if (o.generic >= 0) spec.generic_blocks = o.generic;
  spec.angle_min = o.angle_min;
  spec.angle_max = o.angle_max;
  const RandomPair pair = random_pair(spec);
  const std::string p_path = o.out_path + "_P.json";
  const std::string q_path = o.out_path + "_Q.json";
  if (!o.out_path.empty()) {
    io::write_matrix_file(p_path, pair.p);
    io::write_matrix_file(q_path, pair.q);
  }
  r.outputs["p"] = o.out_path.empty() ? json(nullptr) : json(p_path);
  r.outputs["q"] = o.out_path.empty() ? json(nullptr) : json(q_path);
  r.outputs["seed"] = o.seed;
  r.outputs["layout"] = json{{"k_pq", pair.layout.k_pq},       {"k_p_1q", pair.layout.k_p_1q},
                             {"k_1p_q", pair.layout.k_1p_q},   {"k_1p_1q", pair.layout.k_1p_1q},
                             {"generic", pair.layout.generic}};
  r.outputs["angles"] = pair.angles;
  r.residuals["p_idempotency"] = idempotency_residual(pair.p);
  r.residuals["q_idempotency"] = idempotency_residual(pair.q);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out) {
  Options o;
  CLI::App app{"Constructions for pairs of orthogonal projections", "projpair"};
  app.require_subcommand(1);
  app.add_option("--tol-herm", o.tol.tol_herm, "Hermiticity tolerance");
  app.add_option("--tol-idem", o.tol.tol_idem, "idempotency tolerance");
  app.add_option("--tol-spec", o.tol.tol_spec, "eigenvalue bin half-width");
  app.add_option("--tol-resid", o.tol.tol_resid, "verification residual bound");
  app.add_option("--quad-tol", o.tol.quad_tol, "quadrature/series convergence tolerance");
  app.add_option("--max-dim", o.tol.max_dim, "largest accepted dimension");

  using Handler = std::function<void(const Options&, Report&)>;
  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto pair_command = [&](const char* name, const char* help, Handler h, bool with_out) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option("P", o.path_a, "projection P (matrix JSON)")->required();
    sub->add_option("Q", o.path_b, "projection Q (matrix JSON)")->required();
    if (with_out) sub->add_option("--out", o.out_path, "output matrix path");
    commands.emplace_back(sub, std::move(h));
  };

  {
    CLI::App* sub = app.add_subcommand("validate", "validate an orthogonal projection");
    sub->fallthrough();
    sub->add_option("M", o.path_a, "matrix JSON")->required();
    commands.emplace_back(sub, cmd_validate);
  }
  pair_command("swap", "unitary U with UPU* = Q and UQU* = P", cmd_swap, true);
  pair_command("kato", "Kato's intertwining unitary", cmd_kato, true);
  pair_command("index", "index of the pair and tr(P - Q)", cmd_index, false);
  pair_command("decompose", "kernel subspaces, splitting and principal angles", cmd_decompose, false);
  pair_command("identities", "residuals of the A/B identities", cmd_identities, false);

  auto contour_command = [&](const char* name, const char* help, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option("FAMILY", o.path_a, "polynomial family JSON (array of coefficient matrices)")->required();
    sub->add_option("--z", o.z_text, "family parameter, re[,im]");
    sub->add_option("--center", o.center_text, "contour center, re[,im]")->required();
    sub->add_option("--radius", o.radius, "contour radius")->required();
    sub->add_option("--nodes", o.nodes, "initial quadrature nodes (power of 2, >= 8)");
    sub->add_option("--out", o.out_path, "output matrix path");
    commands.emplace_back(sub, std::move(h));
  };
  contour_command("riesz", "Riesz projection of A(z)", cmd_riesz);
  contour_command("reduce", "reduced block of A(z) on ran P(0)", cmd_reduce);

  {
    CLI::App* sub = app.add_subcommand("random", "seeded random projection pair");
    sub->fallthrough();
    sub->add_option("--dim", o.dim)->required();
    sub->add_option("--rankP", o.rank_p)->required();
    sub->add_option("--rankQ", o.rank_q)->required();
    sub->add_option("--seed", o.seed);
    sub->add_option("--kernel-dims", o.kernel_dims, "dim ran P ∩ ker Q, dim ker P ∩ ran Q")->expected(2);
    sub->add_option("--generic", o.generic, "number of generic 2x2 blocks");
    sub->add_option("--min-angle", o.angle_min);
    sub->add_option("--max-angle", o.angle_max);
    sub->add_option("--out", o.out_path, "output prefix; writes PREFIX_P.json and PREFIX_Q.json");
    commands.emplace_back(sub, cmd_random);
  }

  Report report;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    report.command = args.empty() ? "" : args.front();
    emit(out, report, error_status(ErrorCode::ParseError, e.what(), {}));
    return kExitParse;
  }

  for (auto& [sub, handler] : commands) {
    if (!sub->parsed()) continue;
    report.command = sub->get_name();
    try {
      o.tol.validate();
      handler(o, report);
      emit(out, report, ok_status());
      return kExitOk;
    } catch (const Error& e) {
      emit(out, report, error_status(e.code(), e.what(), e.details()));
      return exit_code_for(e.code());
    }
  }
  return kExitParse;
}

}  // namespace projpair::cli
