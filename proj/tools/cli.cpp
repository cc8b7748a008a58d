#include "cli.hpp"

#include "dhall/config.hpp"
#include "dhall/errors.hpp"
#include "dhall/hall_derived.hpp"
#include "dhall/homotopy.hpp"
#include "dhall/labels.hpp"
#include "dhall/table.hpp"
#include "dhall/version.hpp"

#include <CLI11.hpp>

#include <memory>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

namespace dhall::cli {

namespace {

struct Options {
  std::string quiver = "A1";
  std::optional<std::uint32_t> q;
  int max_dim = 2;
  std::string degrees;
  std::string mode = "derived";
  std::string out_path;
  std::uint64_t seed = 1;
  std::uint64_t max_enumeration = Bounds{}.max_enumeration;
  std::string suite;
  std::string a, b;
};

struct DegreeRange {
  int lo, hi;
};

std::optional<DegreeRange> parse_degrees(const std::string& text) {
  if (text.empty()) return std::nullopt;
  const std::size_t dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const int d = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return DegreeRange{d, d};
    }
    const std::string lo = text.substr(0, dots), hi = text.substr(dots + 2);
    const int a = std::stoi(lo, &used);
    if (used != lo.size()) throw std::invalid_argument(text);
    const int b = std::stoi(hi, &used);
    if (used != hi.size()) throw std::invalid_argument(text);
    if (a > b) throw ParseError("empty degree range '" + text + "'");
    return DegreeRange{a, b};
  } catch (const std::logic_error&) {
    throw ParseError("bad degree range '" + text + "' (expected a..b)");
  }
}

// Quiver, heart and both algebras for one invocation.
class Session {
 public:
  explicit Session(const Options& opt) : config_(resolve_config(opt.quiver)) {
    if (opt.q) {
      if (!is_prime(*opt.q)) throw ParseError("--q " + std::to_string(*opt.q) + " is not prime");
      config_.p = *opt.q;
    }
    Bounds bounds;
    bounds.max_enumeration = opt.max_enumeration;
    heart_ = std::make_unique<Heart>(config_.quiver(), config_.field(), bounds);
    derived_ = std::make_unique<DerivedHall>(*heart_);
  }

  const QuiverConfig& config() const { return config_; }
  const Heart& heart() const { return *heart_; }
  const DerivedHall& derived() const { return *derived_; }
  const ClassicalHall& classical() const { return derived_->classical(); }

  std::string label(const GradedObject& x) const { return format_graded(*heart_, x); }
  std::string label(const IsoClass& x) const { return format_iso(*heart_, x); }

 private:
  QuiverConfig config_;
  std::unique_ptr<Heart> heart_;
  std::unique_ptr<DerivedHall> derived_;
};

struct Report {
  std::string suite;
  std::size_t checked = 0;
  std::vector<std::string> failures;

  void check(bool ok, const std::string& what) {
    ++checked;
    if (!ok) failures.push_back(what);
  }

  int print(std::ostream& out) const {
    for (const auto& f : failures) out << "counterexample: " << f << "\n";
    out << suite << ": " << checked << " identities checked, " << failures.size() << " failed\n";
    out << (failures.empty() ? "PASS" : "FAIL") << "\n";
    return failures.empty() ? kOk : kVerificationFailed;
  }
};

std::string describe(const Session& s, const DerivedElement& e) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& [k, c] : e) {
    if (!out.empty()) out += " + ";
    out += to_fraction_string(c) + "*[" + s.label(k) + "]";
  }
  return out;
}

std::vector<IsoClass> heart_family(const Session& s, int max_dim) { return s.heart().classes_up_to(max_dim); }

std::vector<GradedObject> graded_family(const Session& s, const DegreeRange& r, int max_dim) {
  return graded_objects(s.heart(), r.lo, r.hi, max_dim);
}

std::vector<GradedObject> embedded(const std::vector<IsoClass>& xs) {
  std::vector<GradedObject> out;
  for (const auto& x : xs) out.push_back(GradedObject::in_degree(x, 0));
  return out;
}

// ---- objects ---------------------------------------------------------------

int cmd_objects(const Session& s, const Options& opt, std::ostream& out) {
  if (const auto range = parse_degrees(opt.degrees)) {
    for (const auto& x : graded_family(s, *range, opt.max_dim))
      out << s.label(x) << "\t" << graded_aut_order(s.heart(), x) << "\n";
  } else {
    for (const auto& x : heart_family(s, opt.max_dim)) out << s.label(x) << "\t" << s.heart().aut_order(x) << "\n";
  }
  return kOk;
}

// ---- multiply --------------------------------------------------------------

std::vector<TableRecord> product_records(const Session& s, const std::string& mode, const GradedObject& x,
                                         const GradedObject& y) {
  std::vector<TableRecord> out;
  if (mode == "classical") {
    if (!x.in_heart() || !y.in_heart()) throw ParseError("classical mode needs heart objects (degree 0 only)");
    const IsoClass hx = x.component(0), hy = y.component(0);
    for (const auto& [z, c] : s.classical().basis_product(hx, hy))
      out.push_back({s.label(hx), s.label(hy), s.label(z), c});
  } else {
    const DerivedElement e =
        mode == "oracle" ? s.derived().oracle_basis_product(x, y) : s.derived().basis_product(x, y);
    for (const auto& [z, c] : e) out.push_back({s.label(x), s.label(y), s.label(z), c});
  }
  return out;
}

int cmd_multiply(const Session& s, const Options& opt, std::ostream& out) {
  const GradedObject x = parse_graded(s.heart(), opt.a), y = parse_graded(s.heart(), opt.b);
  ConstantTable t;
  t.records = product_records(s, opt.mode, x, y);
  t.sort();
  out << t.serialize();
  return kOk;
}

// ---- table -----------------------------------------------------------------

std::vector<std::pair<std::string, std::string>> table_header(const Session& s, const Options& opt) {
  std::string arrows;
  for (const auto& [src, tgt] : s.config().arrows)
    arrows += (arrows.empty() ? "" : ",") + std::to_string(src + 1) + "->" + std::to_string(tgt + 1);
  return {{"quiver", s.config().name},
          {"vertices", std::to_string(s.config().vertices)},
          {"arrows", arrows.empty() ? "none" : arrows},
          {"p", std::to_string(s.config().p)},
          {"version", version},
          {"mode", opt.mode},
          {"max-dim", std::to_string(opt.max_dim)},
          {"degrees", opt.degrees.empty() ? "heart" : opt.degrees},
          {"max-enumeration", std::to_string(opt.max_enumeration)}};
}

int cmd_table(const Session& s, const Options& opt, std::ostream& out) {
  const auto header = table_header(s, opt);
  if (auto cached = load_cached_table(opt.out_path, header)) {
    write_table(opt.out_path, *cached);
    out << opt.out_path << ": " << cached->records.size() << " records (cached)\n";
    return kOk;
  }
  const auto range = parse_degrees(opt.degrees);
  if (range && opt.mode == "classical") throw ParseError("classical mode takes no --degrees");
  const std::vector<GradedObject> basis =
      range ? graded_family(s, *range, opt.max_dim) : embedded(heart_family(s, opt.max_dim));
  ConstantTable t;
  t.header = header;
  for (const auto& x : basis)
    for (const auto& y : basis) {
      if (x.is_zero() || y.is_zero()) continue;
      for (auto& r : product_records(s, opt.mode, x, y)) t.records.push_back(std::move(r));
    }
  t.sort();
  write_table(opt.out_path, t);
  out << opt.out_path << ": " << t.records.size() << " records\n";
  return kOk;
}

// ---- verify ----------------------------------------------------------------

DegreeRange derived_range(const Options& opt) { return parse_degrees(opt.degrees).value_or(DegreeRange{0, 1}); }

Report verify_assoc(const Session& s, const Options& opt) {
  Report r;
  r.suite = "assoc";
  if (const auto range = parse_degrees(opt.degrees)) {
    const auto family = graded_family(s, *range, opt.max_dim);
    for (const auto& x : family)
      for (const auto& y : family)
        for (const auto& z : family) {
          const auto a = DerivedElement::basis(x), b = DerivedElement::basis(y), c = DerivedElement::basis(z);
          const auto left = s.derived().product(s.derived().product(a, b), c);
          const auto right = s.derived().product(a, s.derived().product(b, c));
          r.check(left == right, "(" + s.label(x) + "*" + s.label(y) + ")*" + s.label(z) + " = " + describe(s, left) +
                                     " but " + s.label(x) + "*(" + s.label(y) + "*" + s.label(z) +
                                     ") = " + describe(s, right));
        }
    return r;
  }
  // Heart triples with dim x + dim y + dim z <= max-dim.
  const auto family = heart_family(s, opt.max_dim);
  const Heart& h = s.heart();
  for (const auto& x : family)
    for (const auto& y : family)
      for (const auto& z : family) {
        if (h.total_dim(x) + h.total_dim(y) + h.total_dim(z) > opt.max_dim) continue;
        const auto a = HeartElement::basis(x), b = HeartElement::basis(y), c = HeartElement::basis(z);
        const auto left = s.classical().product(s.classical().product(a, b), c);
        const auto right = s.classical().product(a, s.classical().product(b, c));
        r.check(left == right, "associator nonzero at (" + s.label(x) + ", " + s.label(y) + ", " + s.label(z) + ")");
      }
  return r;
}

Report verify_unit(const Session& s, const Options& opt) {
  Report r;
  r.suite = "unit";
  const auto range = parse_degrees(opt.degrees);
  const auto family = range ? graded_family(s, *range, opt.max_dim) : embedded(heart_family(s, opt.max_dim));
  const auto one = DerivedElement::basis(GradedObject{});
  for (const auto& x : family) {
    const auto e = DerivedElement::basis(x);
    r.check(s.derived().product(one, e) == e, "1*" + s.label(x) + " = " + describe(s, s.derived().product(one, e)));
    r.check(s.derived().product(e, one) == e, s.label(x) + "*1 = " + describe(s, s.derived().product(e, one)));
    r.check(s.derived().oracle_product(one, e) == e, "oracle 1*" + s.label(x));
    r.check(s.derived().oracle_product(e, one) == e, "oracle " + s.label(x) + "*1");
  }
  if (!range) {
    const auto one_h = HeartElement::basis(IsoClass{});
    for (const auto& x : heart_family(s, opt.max_dim)) {
      const auto e = HeartElement::basis(x);
      r.check(s.classical().product(one_h, e) == e && s.classical().product(e, one_h) == e,
              "classical unit fails at " + s.label(x));
    }
  }
  return r;
}

Report verify_heart(const Session& s, const Options& opt) {
  Report r;
  r.suite = "heart";
  const Heart& h = s.heart();
  const auto family = heart_family(s, opt.max_dim);
  for (const auto& x : family)
    for (const auto& y : family) {
      if (h.total_dim(x) + h.total_dim(y) > opt.max_dim) continue;
      const auto gx = GradedObject::in_degree(x, 0), gy = GradedObject::in_degree(y, 0);
      const auto derived = s.derived().basis_product(gx, gy);
      for (const auto& [z, c] : derived)
        r.check(z.in_heart(), s.label(gx) + "*" + s.label(gy) + " leaves the heart: " + s.label(z));
      DimVector dz = h.dim_vector(x);
      const DimVector dy = h.dim_vector(y);
      for (std::size_t v = 0; v < dz.size(); ++v) dz[v] += dy[v];
      for (const auto& z : h.classes_with_dim(dz)) {
        const Rational classical(s.classical().hall_number(x, y, z));
        const auto gz = GradedObject::in_degree(z, 0);
        const Rational rewritten = derived.coefficient(gz);
        const Rational oracle = s.derived().derived_hall_number(gx, gy, gz);
        r.check(classical == rewritten && classical == oracle,
                "g(" + s.label(x) + ", " + s.label(y) + "; " + s.label(z) + "): classical " +
                    to_fraction_string(classical) + ", rewriting " + to_fraction_string(rewritten) + ", oracle " +
                    to_fraction_string(oracle));
      }
    }
  return r;
}

Report verify_oracle_eq(const Session& s, const Options& opt) {
  Report r;
  r.suite = "oracle-eq";
  const auto family = graded_family(s, derived_range(opt), opt.max_dim);
  for (const auto& x : family)
    for (const auto& y : family) {
      const auto rewritten = s.derived().basis_product(x, y);
      const auto oracle = s.derived().oracle_basis_product(x, y);
      r.check(rewritten == oracle, s.label(x) + "*" + s.label(y) + ": rewriting " + describe(s, rewritten) +
                                       ", oracle " + describe(s, oracle));
    }
  return r;
}

Report verify_shift(const Session& s, const Options& opt) {
  Report r;
  r.suite = "shift";
  const auto family = graded_family(s, derived_range(opt), opt.max_dim);
  for (const auto& x : family)
    for (const auto& y : family) {
      const auto moved = shift_action(s.derived().basis_product(x, y), 1);
      const auto direct = s.derived().basis_product(x.shifted(1), y.shifted(1));
      r.check(moved == direct, "shift of " + s.label(x) + "*" + s.label(y) + " = " + describe(s, moved) + " but " +
                                   s.label(x.shifted(1)) + "*" + s.label(y.shifted(1)) + " = " + describe(s, direct));
      for (const auto& z : s.derived().candidate_middles(x, y)) {
        const Rational g = s.derived().derived_hall_number(x, y, z);
        const Rational g1 = s.derived().derived_hall_number(x.shifted(1), y.shifted(1), z.shifted(1));
        r.check(g == g1, "g(" + s.label(x) + ", " + s.label(y) + "; " + s.label(z) + ") = " + to_fraction_string(g) +
                             " but shifted " + to_fraction_string(g1));
      }
    }
  return r;
}

class LFGenerator {
 public:
  explicit LFGenerator(std::uint64_t seed) : rng_(seed) {}

  LFType type(std::size_t max_components = 4) {
    std::vector<LFType::Orders> comps(uniform(1, max_components));
    for (auto& o : comps) {
      o.resize(uniform(0, 3));
      for (auto& v : o) v = uniform(1, 4);
    }
    return LFType(std::move(comps));
  }

  LFMap map(const LFType& from, const LFType& to) {
    std::vector<std::size_t> m(from.size());
    for (auto& v : m) v = uniform(0, to.size() - 1);
    return LFMap(from, to, std::move(m));
  }

  FnFinSupp function(const LFType& on) {
    FnFinSupp f(on.size());
    for (std::size_t c = 0; c < on.size(); ++c)
      f.set(c, Rational(static_cast<long>(uniform(0, 12)) - 6, static_cast<long>(uniform(1, 5))));
    return f;
  }

 private:
  std::size_t uniform(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }
  std::mt19937_64 rng_;
};

Report verify_homotopy(const Options& opt, std::size_t instances = 1000) {
  Report r;
  r.suite = "homotopy";
  LFGenerator gen(opt.seed);
  for (std::size_t i = 0; i < instances; ++i) {
    const LFType x = gen.type(), y = gen.type(), z = gen.type();
    const LFMap f = gen.map(x, y), g = gen.map(y, z);
    const FnFinSupp alpha = gen.function(x);
    r.check(pushforward_l1(compose(g, f), alpha) == pushforward_l1(g, pushforward_l1(f, alpha)),
            "functoriality, instance " + std::to_string(i));
  }
  for (std::size_t i = 0; i < instances; ++i) {
    const LFType fiber = gen.type(3), base = gen.type(), base2 = gen.type();
    const LFMap u = gen.map(base2, base);
    const FnFinSupp alpha = gen.function(product(fiber, base));
    const LFMap f = projection(fiber, base), f2 = projection(fiber, base2);
    r.check(pullback(u, pushforward_l1(f, alpha)) == pushforward_l1(f2, pullback(product_map(fiber, u), alpha)),
            "base change, instance " + std::to_string(i));
    r.check(pushforward_l1(f, alpha) == pushforward_fibers(projection_fibers(fiber, base), alpha),
            "fiber formula, instance " + std::to_string(i));
  }
  return r;
}

int cmd_verify(const Session& s, const Options& opt, std::ostream& out) {
  Report r;
  if (opt.suite == "assoc") r = verify_assoc(s, opt);
  else if (opt.suite == "unit") r = verify_unit(s, opt);
  else if (opt.suite == "heart") r = verify_heart(s, opt);
  else if (opt.suite == "oracle-eq") r = verify_oracle_eq(s, opt);
  else if (opt.suite == "shift") r = verify_shift(s, opt);
  else r = verify_homotopy(opt);
  out << "quiver " << s.config().name << ", p = " << s.config().p << "\n";
  return r.print(out);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Exact Hall and derived Hall algebras of Dynkin quivers over F_p", "dhall"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(version));
  app.add_option("--quiver", opt.quiver, "Built-in name (A1, A2, D4, E6, ...) or JSON config file");
  app.add_option("--q", opt.q, "Characteristic p, overriding the config");
  app.add_option("--max-dim", opt.max_dim, "Total dimension bound (per degree for graded objects)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--degrees", opt.degrees, "Shift degree range a..b; omit for the heart");
  app.add_option("--seed", opt.seed, "Seed for generated instances");
  app.add_option("--max-enum", opt.max_enumeration, "Largest set the enumeration routines may walk")
      ->check(CLI::PositiveNumber);

  auto* objects = app.add_subcommand("objects", "List iso classes with their automorphism group orders");
  auto* multiply = app.add_subcommand("multiply", "Expand a product of two basis elements");
  multiply->add_option("a", opt.a, "Left factor label")->required();
  multiply->add_option("b", opt.b, "Right factor label")->required();
  multiply->add_option("--mode", opt.mode, "classical, derived or oracle")
      ->check(CLI::IsMember({"classical", "derived", "oracle"}));
  auto* verify = app.add_subcommand("verify", "Check algebra identities exhaustively within bounds");
  verify->add_option("suite", opt.suite, "assoc, unit, heart, oracle-eq, shift or homotopy")
      ->required()
      ->check(CLI::IsMember({"assoc", "unit", "heart", "oracle-eq", "shift", "homotopy"}));
  auto* table = app.add_subcommand("table", "Write (or refresh from cache) a structure constant table");
  table->add_option("--mode", opt.mode, "classical, derived or oracle")
      ->check(CLI::IsMember({"classical", "derived", "oracle"}));
  table->add_option("--out", opt.out_path, "Output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    const Session session(opt);
    if (objects->parsed()) return cmd_objects(session, opt, out);
    if (multiply->parsed()) return cmd_multiply(session, opt, out);
    if (verify->parsed()) return cmd_verify(session, opt, out);
    return cmd_table(session, opt, out);
  } catch (const ResourceError& e) {
    err << "resource bound: " << e.what() << "\n";
    return kResourceBound;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
}

}  // namespace dhall::cli
