#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mubcoh/coherence.hpp"
#include "mubcoh/errors.hpp"
#include "mubcoh/io.hpp"
#include "mubcoh/linalg.hpp"
#include "mubcoh/mub.hpp"
#include "mubcoh/states.hpp"
#include "mubcoh/surface.hpp"
#include "mubcoh/verify.hpp"

namespace {

using namespace mubcoh;

/// Thrown by command handlers when a requested check ran but did not pass;
/// mapped to exit code 1 (input and usage problems map to 2 instead).
struct CheckFailed {};

constexpr Real kSelfTestInject = 1e-6;

void emit_json(const Json& j, const std::string& out_path) {
  if (out_path.empty())
    std::cout << j.dump(2) << '\n';
  else
    write_json_file(out_path, j);
}

std::string format_level(Real level) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", level);
  return buf;
}

MubSet named_set(const std::string& name) {
  if (name == "qubit") return pauli_mubs();
  if (name == "qutrit") return dim3_mubs();
  if (name == "qubit-pair") return build_amub(pauli_mubs());
  throw InputError("unknown basis set: " + name);
}

// ---- basis ---------------------------------------------------------------

struct BasisGenArgs {
  std::string set;
  int index = -1;
  std::string out;
  std::string out_dir;
};

void run_basis_gen(const BasisGenArgs& a) {
  const MubSet set = named_set(a.set);
  if (a.index >= 0) {
    if (static_cast<std::size_t>(a.index) >= set.bases.size())
      throw InputError("basis index " + std::to_string(a.index) + " out of range (set has " +
                       std::to_string(set.bases.size()) + " bases)");
    emit_json(basis_to_json(set.bases[static_cast<std::size_t>(a.index)]), a.out);
    return;
  }
  if (!a.out_dir.empty()) {
    std::filesystem::create_directories(a.out_dir);
    for (const OrthonormalBasis& b : set.bases)
      write_json_file(std::filesystem::path(a.out_dir) / (b.label + ".json"), basis_to_json(b));
    return;
  }
  Json arr = Json::array();
  for (const OrthonormalBasis& b : set.bases) arr.push_back(basis_to_json(b));
  emit_json(arr, a.out);
}

struct BasisCheckArgs {
  std::vector<std::string> files;
  Real tol = kIdentityTol;
  int amub_d = 0;
  bool renormalize = false;
  std::string out;
};

void run_basis_check(const BasisCheckArgs& a) {
  if (a.files.size() < 2) throw InputError("basis check needs at least two --files");
  std::vector<OrthonormalBasis> bases;
  for (const std::string& f : a.files)
    bases.push_back(basis_from_json(read_json_file(f), kStateTol, a.renormalize));

  Json pairs = Json::array();
  bool all_passed = true;
  for (std::size_t i = 0; i < bases.size(); ++i)
    for (std::size_t j = i + 1; j < bases.size(); ++j) {
      const OverlapReport r = a.amub_d > 0
                                  ? check_amub(bases[i], bases[j], a.amub_d, a.tol)
                                  : check_unbiased(bases[i], bases[j], a.tol);
      all_passed = all_passed && r.passed;
      pairs.push_back(Json{{"first", bases[i].label},
                           {"second", bases[j].label},
                           {"max_deviation", r.max_deviation},
                           {"target", r.target},
                           {"passed", r.passed}});
    }

  emit_json(Json{{"mode", a.amub_d > 0 ? "amub" : "unbiased"},
                 {"tolerance", a.tol},
                 {"pairs", pairs},
                 {"passed", all_passed}},
            a.out);
  if (!all_passed) throw CheckFailed{};
}

// ---- state ---------------------------------------------------------------

void emit_state(const Matrix& m, const std::string& out) { emit_json(matrix_to_json(m), out); }

void note_nonphysical(const HermitianState& s) {
  if (!s.physical)
    std::cerr << "note: matrix is not positive semidefinite (min eigenvalue "
              << s.min_eigenvalue << "); emitting anyway\n";
}

XStateVariant variant_from_name(const std::string& name) {
  if (name == "x") return XStateVariant::Corners;
  if (name == "delta") return XStateVariant::Lower;
  if (name == "nabla") return XStateVariant::Upper;
  throw InputError("unknown x3 variant: " + name);
}

// ---- coherence -----------------------------------------------------------

struct CoherenceArgs {
  std::string state_file;
  std::vector<std::string> basis_files;
  Real tol = kStateTol;
  bool renormalize = false;
  std::string out;
};

void run_coherence(const CoherenceArgs& a) {
  const Matrix m = matrix_from_json(read_json_file(a.state_file));

  // Accept anything `state` can emit: Hermitian unit-trace is required, but
  // positivity only gates the entropy measure.
  std::optional<DensityMatrix> dm;
  try {
    dm = validate_density(m, a.tol);
  } catch (const NotPositive& e) {
    std::cerr << "note: state is not positive semidefinite (" << e.what()
              << "); relative_entropy will be null\n";
  }

  Json results = Json::array();
  for (const std::string& f : a.basis_files) {
    const OrthonormalBasis basis = basis_from_json(read_json_file(f), kStateTol, a.renormalize);
    const Real l1 = l1_coherence(m, basis);
    if (dm.has_value())
      results.push_back(
          coherence_to_json(basis.label, l1, true, rel_entropy_coherence(*dm, basis)));
    else
      results.push_back(coherence_to_json(basis.label, l1, false, 0.0));
  }
  emit_json(results.size() == 1 ? results[0] : results, a.out);
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::uint64_t samples = kDefaultSamples;
  std::optional<std::uint64_t> seed;
  std::uint64_t grid = kDefaultGridPoints;
  Real tol = kDefaultVerifyTol;
  bool self_test = false;
  std::string out;
};

Json wrap_control(const VerificationReport& r) {
  return Json{{"control", true},
              {"expected", "fail"},
              {"behaved_as_designed", !r.passed},
              {"report", report_to_json(r)}};
}

void run_verify_one(const std::string& claim, const VerifyArgs& a) {
  const Real inject = a.self_test ? kSelfTestInject : 0.0;
  VerificationReport r;
  if (claim == "qubit")
    r = verify_qubit_bound({a.samples, a.seed.value_or(kQubitBoundSeed), a.tol, inject});
  else if (claim == "xstate")
    r = verify_xstate_equality({a.samples, a.seed.value_or(kXStateSeed), a.tol, inject});
  else if (claim == "bell")
    r = verify_bell_forms({a.samples, a.seed.value_or(kBellFormsSeed), a.tol, inject});
  else
    r = verify_werner_isotropic({a.grid, a.tol, inject});

  if (a.self_test) {
    emit_json(wrap_control(r), a.out);
    if (r.passed) throw CheckFailed{};  // the perturbed run was supposed to fail
  } else {
    emit_json(report_to_json(r), a.out);
    if (!r.passed) throw CheckFailed{};
  }
}

void run_verify_all(const VerifyArgs& a) {
  const Real inject = a.self_test ? kSelfTestInject : 0.0;
  const std::vector<VerificationReport> reports =
      verify_all({a.samples, a.seed, a.grid, a.tol, inject});
  Json arr = Json::array();
  bool ok = true;
  for (const VerificationReport& r : reports) {
    if (a.self_test) {
      arr.push_back(wrap_control(r));
      ok = ok && !r.passed;
    } else {
      arr.push_back(report_to_json(r));
      ok = ok && r.passed;
    }
  }
  emit_json(arr, a.out);
  if (!ok) throw CheckFailed{};
}

// ---- surface ---------------------------------------------------------------

struct HeightmapArgs {
  Index n = 201;
  std::string out;
};

void run_heightmap(const HeightmapArgs& a) {
  const HeightMap h = pair_coherence_heightmap(a.n);
  if (a.out.empty()) {
    write_heightmap_csv(std::cout, h);
    return;
  }
  std::ofstream f(a.out);
  if (!f) throw InputError("cannot open file for writing: " + a.out);
  write_heightmap_csv(f, h);
  if (!f) throw InputError("write failed: " + a.out);
}

struct MeshArgs {
  Index n = 101;
  std::vector<Real> levels = {0.5, 1.0, 2.0};
  std::string out_prefix;
  std::string field_out;
  bool physical = false;
};

void run_mesh(const MeshArgs& a) {
  const ScalarField3 field = coherence_sum_field(a.n);

  if (!a.field_out.empty()) {
    std::ofstream f(a.field_out);
    if (!f) throw InputError("cannot open file for writing: " + a.field_out);
    write_field_csv(f, field);
    if (!f) throw InputError("write failed: " + a.field_out);
  }

  for (const Real level : a.levels) {
    TriangleMesh mesh = isosurface(field, level);
    if (a.physical) {
      mesh = filter_physical(mesh);
      if (mesh.triangles.empty())
        std::cerr << "note: level " << level << " has no physical triangles\n";
    }
    const std::string path = a.out_prefix + "-level-" + format_level(level) + ".obj";
    std::ofstream f(path);
    if (!f) throw InputError("cannot open file for writing: " + path);
    write_mesh_obj(f, mesh);
    if (!f) throw InputError("write failed: " + path);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coherence of quantum states in mutually unbiased bases"};
  app.require_subcommand(1);

  // basis
  CLI::App* basis = app.add_subcommand("basis", "generate or check orthonormal bases");
  basis->require_subcommand(1);

  BasisGenArgs gen_args;
  CLI::App* gen = basis->add_subcommand("gen", "emit a built-in basis set as JSON");
  gen->add_option("--set", gen_args.set, "qubit | qutrit | qubit-pair")->required();
  gen->add_option("--index", gen_args.index, "emit only the basis at this index");
  gen->add_option("--out", gen_args.out, "output file (default stdout)");
  gen->add_option("--out-dir", gen_args.out_dir, "write one <label>.json per basis");
  gen->callback([&] { run_basis_gen(gen_args); });

  BasisCheckArgs check_args;
  CLI::App* check = basis->add_subcommand("check", "check pairwise unbiasedness of basis files");
  check->add_option("--files", check_args.files, "two or more basis JSON files")
      ->required()
      ->expected(-2);
  check->add_option("--tol", check_args.tol, "deviation tolerance (default 1e-12)");
  check->add_option("--amub", check_args.amub_d,
                    "use the unsquared-overlap convention with factor dimension D");
  check->add_flag("--renormalize", check_args.renormalize, "rescale kets to unit norm first");
  check->add_option("--out", check_args.out, "output file (default stdout)");
  check->callback([&] { run_basis_check(check_args); });

  // state
  CLI::App* state = app.add_subcommand("state", "construct states as matrix JSON");
  state->require_subcommand(1);

  struct {
    Real x = 0, y = 0, z = 0;
    std::string out;
  } bloch_args;
  CLI::App* bloch = state->add_subcommand("bloch", "qubit state from a Bloch vector");
  bloch->add_option("--x", bloch_args.x)->required();
  bloch->add_option("--y", bloch_args.y)->required();
  bloch->add_option("--z", bloch_args.z)->required();
  bloch->add_option("--out", bloch_args.out, "output file (default stdout)");
  bloch->callback([&] {
    emit_state(bloch_state(BlochVector{bloch_args.x, bloch_args.y, bloch_args.z}).matrix(),
               bloch_args.out);
  });

  struct {
    std::string variant = "x";
    Real x = 0, y = 0, z = 0;
    bool require_physical = false;
    std::string out;
  } x3_args;
  CLI::App* x3 = state->add_subcommand("x3", "dimension-3 one-coupling Hermitian state");
  x3->add_option("--variant", x3_args.variant, "x | delta | nabla (default x)");
  x3->add_option("--x", x3_args.x)->required();
  x3->add_option("--y", x3_args.y)->required();
  x3->add_option("--z", x3_args.z)->required();
  x3->add_flag("--require-physical", x3_args.require_physical, "reject non-PSD parameters");
  x3->add_option("--out", x3_args.out, "output file (default stdout)");
  x3->callback([&] {
    const HermitianState s =
        x3_state(XStateParams{variant_from_name(x3_args.variant), x3_args.x, x3_args.y, x3_args.z},
                 x3_args.require_physical);
    note_nonphysical(s);
    emit_state(s.matrix, x3_args.out);
  });

  struct {
    Real c1 = 0, c2 = 0, c3 = 0;
    bool require_physical = false;
    std::string out;
  } bell_args;
  CLI::App* bell = state->add_subcommand("bell", "two-qubit correlation-diagonal state");
  bell->add_option("--c1", bell_args.c1)->required();
  bell->add_option("--c2", bell_args.c2)->required();
  bell->add_option("--c3", bell_args.c3)->required();
  bell->add_flag("--require-physical", bell_args.require_physical, "reject non-PSD parameters");
  bell->add_option("--out", bell_args.out, "output file (default stdout)");
  bell->callback([&] {
    const HermitianState s = bell_diagonal(CorrelationTriple{bell_args.c1, bell_args.c2, bell_args.c3},
                                           bell_args.require_physical);
    note_nonphysical(s);
    emit_state(s.matrix, bell_args.out);
  });

  struct {
    Real p = 0;
    std::string out;
  } werner_args;
  CLI::App* wern = state->add_subcommand("werner", "singlet-weight family");
  wern->add_option("--p", werner_args.p, "weight in [0, 1]")->required();
  wern->add_option("--out", werner_args.out, "output file (default stdout)");
  wern->callback([&] { emit_state(werner(werner_args.p).matrix(), werner_args.out); });

  struct {
    Real F = 0;
    std::string out;
  } iso_args;
  CLI::App* iso = state->add_subcommand("iso", "fidelity family");
  iso->add_option("--F", iso_args.F, "fidelity in [0, 1]")->required();
  iso->add_option("--out", iso_args.out, "output file (default stdout)");
  iso->callback([&] { emit_state(isotropic(iso_args.F).matrix(), iso_args.out); });

  // coherence
  CoherenceArgs coh_args;
  CLI::App* coh = app.add_subcommand("coherence", "coherence of a state file in basis files");
  coh->add_option("--state", coh_args.state_file, "state matrix JSON file")->required();
  coh->add_option("--basis", coh_args.basis_files, "one or more basis JSON files")
      ->required()
      ->expected(-1);
  coh->add_option("--tol", coh_args.tol, "state validation tolerance (default 1e-9)");
  coh->add_flag("--renormalize", coh_args.renormalize, "rescale basis kets to unit norm first");
  coh->add_option("--out", coh_args.out, "output file (default stdout)");
  coh->callback([&] { run_coherence(coh_args); });

  // verify
  CLI::App* verify = app.add_subcommand("verify", "run seeded verification sweeps");
  verify->require_subcommand(1);
  std::vector<std::pair<std::string, VerifyArgs>> verify_claims = {
      {"qubit", {}}, {"xstate", {}}, {"bell", {}}, {"werner-iso", {}}, {"all", {}}};
  const auto verify_blurb = [](const std::string& name) -> std::string {
    if (name == "qubit") return "closed forms and the sum-of-squares bound on Bloch-ball samples";
    if (name == "xstate") return "basis-independence of the one-coupling dimension-3 coherence";
    if (name == "bell") return "product-basis closed forms on correlation-diagonal samples";
    if (name == "werner-iso") return "one-parameter noise families on evenly spaced grids";
    return "all four sweeps in a fixed order";
  };
  for (auto& [claim_name, claim_args] : verify_claims) {
    CLI::App* sub = verify->add_subcommand(claim_name, verify_blurb(claim_name));
    if (claim_name != "werner-iso") {
      sub->add_option("--samples", claim_args.samples, "sample count (default 10000)");
      sub->add_option("--seed", claim_args.seed, "seed (default fixed per claim)");
    }
    if (claim_name == "werner-iso" || claim_name == "all")
      sub->add_option("--grid", claim_args.grid, "grid points per family (default 21)");
    sub->add_option("--tol", claim_args.tol, "pass tolerance (default 1e-12)");
    sub->add_flag("--self-test", claim_args.self_test,
                  "negative control: inject 1e-6 and require the run to fail");
    sub->add_option("--out", claim_args.out, "output file (default stdout)");
    const std::string name_copy = claim_name;
    VerifyArgs* args_ptr = &claim_args;
    sub->callback([name_copy, args_ptr] {
      if (name_copy == "all")
        run_verify_all(*args_ptr);
      else
        run_verify_one(name_copy, *args_ptr);
    });
  }

  // surface
  CLI::App* surface = app.add_subcommand("surface", "grid and mesh outputs");
  surface->require_subcommand(1);

  HeightmapArgs hm_args;
  CLI::App* hm = surface->add_subcommand("heightmap", "pair-coherence heightmap CSV over (c1, c2)");
  hm->add_option("--n", hm_args.n, "grid resolution (default 201)");
  hm->add_option("--out", hm_args.out, "output CSV (default stdout)");
  hm->callback([&] { run_heightmap(hm_args); });

  MeshArgs mesh_args;
  CLI::App* mesh = surface->add_subcommand("mesh", "coherence-sum isosurface meshes");
  mesh->add_option("--n", mesh_args.n, "grid resolution (default 101)");
  mesh->add_option("--levels", mesh_args.levels, "isosurface levels (default 0.5 1 2)");
  mesh->add_option("--out-prefix", mesh_args.out_prefix, "mesh files <prefix>-level-<l>.obj")
      ->required();
  mesh->add_option("--field-out", mesh_args.field_out, "also write the full field CSV");
  mesh->add_flag("--physical", mesh_args.physical,
                 "keep only triangles whose vertices are positive-semidefinite triples");
  mesh->callback([&] { run_mesh(mesh_args); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const CheckFailed&) {
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
