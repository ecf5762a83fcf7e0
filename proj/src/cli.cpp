#include "gradix/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>

#include "gradix/artin.hpp"
#include "gradix/corpus.hpp"
#include "gradix/invsys.hpp"
#include "gradix/kernels.hpp"
#include "gradix/oracle.hpp"
#include "gradix/parser.hpp"
#include "gradix/reduc.hpp"

namespace gradix::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string command;
  std::string input;
  std::string ideal;
  std::string poly;
  std::string with;
  std::string vars;
  std::string order;
  std::string field = "GF(3)";
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> bound;
  std::size_t jobs = 1;
  std::size_t count = 200;
  int n = 0;
  int l = 0;
  bool json = false;
  bool graded = false;
  bool slow = false;
  bool timings = false;
  bool dump = false;
};

// What a command produced; printed as text or as the JSON document.
struct Outcome {
  std::optional<RingPtr> ring;
  json inputs = json::object();
  json result = json::object();
  json certificates = json::object();
  std::vector<TheoremEvent> contradictions;
  std::vector<std::string> text;  // lines for the plain report
};

std::string read_input(const std::string& path) {
  if (path.empty()) throw UsageError("this command needs an input file (-i)");
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    buf << in.rdbuf();
  }
  return buf.str();
}

std::string default_ideal_name(const Document& doc, const std::string& requested) {
  if (!requested.empty()) {
    if (!doc.ideals.count(requested)) throw UsageError("no ideal named " + requested + " in the input");
    return requested;
  }
  if (doc.ideals.count("I")) return "I";
  if (doc.ideal_names.empty()) throw UsageError("the input declares no ideal");
  return doc.ideal_names.front();
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

json ideal_json(const Ideal& ideal) { return render(ideal); }

// Reduced basis without the t*t^-1 - 1 relations every Laurent ideal carries.
std::vector<Polynomial> shown_basis(const Ideal& ideal, const MonomialOrder& order = MonomialOrder::grevlex()) {
  const Ideal relations(ideal.ring());
  const auto implicit = relations.presentation_generators();
  std::vector<Polynomial> out;
  for (const auto& g : groebner_basis(ideal, order)) {
    bool hidden = false;
    for (const auto& r : implicit) hidden = hidden || g.monic() == r.with_order(g.order()).monic();
    if (!hidden) out.push_back(g);
  }
  return out;
}

json basis_json(const std::vector<Polynomial>& basis) {
  json a = json::array();
  for (const auto& g : basis) a.push_back(render(g));
  return a;
}

std::string basis_text(const std::vector<Polynomial>& basis) {
  std::string out;
  for (const auto& g : basis) out += (out.empty() ? "" : ", ") + render(g);
  return out.empty() ? "0" : out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : sep) + p;
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string principal_string(Principal p) {
  switch (p) {
    case Principal::Yes:
      return "yes";
    case Principal::No:
      return "no";
    case Principal::Unknown:
      break;
  }
  return "unknown";
}

std::uint64_t resolve_seed(const Options& o) {
  if (o.seed) return *o.seed;
  if (const char* env = std::getenv("GRADIX_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("GRADIX_SEED is not an integer: ") + env);
    }
  }
  return kDefaultSeed;
}

Field parse_field(const std::string& text) {
  return parse_document("ring " + text + "[x];").ring->field();
}

struct Loaded {
  Document doc;
  std::string name;
  const Ideal& ideal() const { return doc.ideal(name); }
};

Loaded load(const Options& o, Outcome& out) {
  Loaded l{parse_document(read_input(o.input)), ""};
  l.name = default_ideal_name(l.doc, o.ideal);
  out.ring = l.doc.ring;
  out.inputs[l.name] = ideal_json(l.ideal());
  return l;
}

MonomialOrder pick_order(const Options& o, const Document& doc) {
  if (o.order.empty()) return doc.order;
  if (o.order == "grevlex") return MonomialOrder::grevlex();
  if (o.order == "lex") return MonomialOrder::lex();
  throw UsageError("--order must be grevlex or lex");
}

Polynomial need_poly(const Options& o, const Loaded& l, Outcome& out) {
  if (o.poly.empty()) throw UsageError(o.command + " needs --poly");
  out.inputs["poly"] = o.poly;
  return parse_polynomial(l.doc.ring, o.poly);
}

const Ideal& need_with(const Options& o, const Loaded& l, Outcome& out) {
  if (o.with.empty()) throw UsageError(o.command + " needs --with NAME");
  if (!l.doc.ideals.count(o.with)) throw UsageError("no ideal named " + o.with + " in the input");
  out.inputs[o.with] = ideal_json(l.doc.ideal(o.with));
  return l.doc.ideal(o.with);
}

void set_ideal_result(Outcome& out, const std::string& key, const Ideal& ideal) {
  const auto gb = shown_basis(ideal);
  out.result[key] = basis_json(gb);
  out.text.push_back(key + ": " + basis_text(gb));
}

json events_json(const std::vector<TheoremEvent>& events) {
  json a = json::array();
  for (const auto& e : events) a.push_back({{"statement", e.statement}, {"detail", e.detail}});
  return a;
}

json star_certificate(const StarResult& s) {
  json c = {{"method", to_string(s.method)}, {"certificate", to_string(s.certificate)}};
  c["bound"] = s.bound ? json(*s.bound) : json(nullptr);
  c["finite_field"] = s.finite_field;
  return c;
}

// ---- commands

void cmd_gb(const Options& o, Outcome& out) {
  const Loaded l = load(o, out);
  const MonomialOrder order = pick_order(o, l.doc);
  const auto gb = shown_basis(l.ideal(), order);
  out.result["order"] = order.name();
  out.result["basis"] = basis_json(gb);
  for (const auto& g : gb) out.text.push_back(render(g));
}

void cmd_nf(const Options& o, Outcome& out) {
  const Loaded l = load(o, out);
  const Polynomial f = need_poly(o, l, out);
  const Polynomial r = normal_form(f, l.ideal(), pick_order(o, l.doc));
  out.result["normal_form"] = render(r);
  out.text.push_back(render(r));
}

void cmd_member(const Options& o, Outcome& out) {
  const Loaded l = load(o, out);
  const bool m = contains(l.ideal(), need_poly(o, l, out));
  out.result["member"] = m;
  out.text.push_back(m ? "true" : "false");
}

void cmd_intersect(const Options& o, Outcome& out) {
  const Loaded l = load(o, out);
  set_ideal_result(out, "ideal", intersect(l.ideal(), need_with(o, l, out)));
}

void cmd_quotient(const Options& o, Outcome& out) {
  const Loaded l = load(o, out);
  if (!o.with.empty()) {
    const Ideal& j = need_with(o, l, out);
    if (j.generators().empty()) throw UsageError("quotient by the zero ideal");
    std::vector<Ideal> parts;
    for (const auto& g : j.generators()) parts.push_back(quotient(l.ideal(), g));
    set_ideal_result(out, "ideal", intersect_all(parts));
    return;
  }
  set_ideal_result(out, "ideal", quotient(l.ideal(), need_poly(o, l, out)));
}

void cmd_saturate(const Options& o, Outcome& out) {
  const Loaded l = load(o, out);
  set_ideal_result(out, "ideal", saturate(l.ideal(), need_poly(o, l, out)));
}

void cmd_eliminate(const Options& o, Outcome& out) {
  const Loaded l = load(o, out);
  if (o.vars.empty()) throw UsageError("eliminate needs --vars");
  std::vector<std::size_t> idx;
  for (const auto& v : split_list(o.vars)) {
    auto i = l.doc.ring->index_of(v);
    if (!i) throw UsageError("unknown variable " + v);
    idx.push_back(*i);
  }
  out.inputs["vars"] = split_list(o.vars);
  set_ideal_result(out, "ideal", eliminate(l.ideal(), idx));
}

void cmd_socle(const Options& o, Outcome& out) {
  const Loaded l = load(o, out);
  const SocleData s = socle(quotient_basis(l.ideal()));
  out.result["dimension"] = s.dimension;
  out.result["basis"] = basis_json(s.basis);
  json hist = json::object();
  for (const auto& [d, c] : s.degree_histogram) hist[std::to_string(d)] = c;
  out.result["degrees"] = hist;
  out.text.push_back("dimension: " + std::to_string(s.dimension));
  for (const auto& b : s.basis) out.text.push_back(render(b));
}

void cmd_hilbert(const Options& o, Outcome& out) {
  const Loaded l = load(o, out);
  const auto h = hilbert_function(quotient_basis(l.ideal()));
  json a = json::array();
  std::vector<std::string> parts;
  for (const auto& [d, c] : h) {
    a.push_back({d, c});
    parts.push_back(std::to_string(c));
  }
  out.result["hilbert"] = a;
  out.text.push_back(join(parts, " "));
}

json radical_json(const RadicalCertificate& rc) {
  return {{"radical", render(rc.radical)},
          {"maximal", rc.maximal},
          {"residue_dimension", rc.residue_dimension},
          {"detail", rc.detail}};
}

void cmd_type(const Options& o, Outcome& out) {
  const Loaded l = load(o, out);
  const RadicalCertificate rc = radical_maximal_certify(l.ideal());
  out.certificates["radical"] = radical_json(rc);
  const std::size_t t = type_of_quotient(l.ideal());
  out.result["type"] = t;
  out.text.push_back(std::to_string(t));
}

void cmd_index(const Options& o, Outcome& out) {
  const Loaded l = load(o, out);
  const std::size_t r = index_of_reducibility(l.ideal());
  out.certificates["radical"] = radical_json(radical_maximal_certify(l.ideal()));
  out.result["r"] = r;
  out.text.push_back(std::to_string(r));
}

void cmd_gindex(const Options& o, Outcome& out) {
  const Loaded l = load(o, out);
  const GradedIndex g = graded_index_detail(l.ideal(), resolve_seed(o));
  out.result["r_graded"] = g.value;
  out.certificates["branch"] = std::string(1, g.branch);
  out.certificates["nonzerodivisor"] = g.nonzerodivisor ? json(render(*g.nonzerodivisor)) : json(nullptr);
  out.certificates["dehomogenized"] = g.dehomogenized ? ideal_json(*g.dehomogenized) : json(nullptr);
  out.text.push_back(std::to_string(g.value));
}

void cmd_decompose(const Options& o, Outcome& out) {
  const Loaded l = load(o, out);
  const ReducReport rep = decompose_report(l.ideal(), o.graded);
  const DecompReport& d = rep.decomposition;
  json comps = json::array();
  for (const auto& c : d.components) {
    comps.push_back(ideal_json(c));
    out.text.push_back("(" + render(c) + ")");
  }
  out.result["components"] = comps;
  out.result["r"] = d.r;
  out.result["r_graded"] = d.r_graded ? json(*d.r_graded) : json(nullptr);
  out.certificates = {{"intersection_verified", d.intersection_verified},
                      {"irredundant", d.irredundant},
                      {"all_graded", d.all_graded},
                      {"all_irreducible_certified", d.all_irreducible_certified}};
  out.contradictions = rep.contradictions;
  out.text.push_back("r: " + std::to_string(d.r) + (d.r_graded ? ", r^g: " + std::to_string(*d.r_graded) : ""));
}

void cmd_verify(const Options& o, Outcome& out) {
  const Loaded l = load(o, out);
  if (o.with.empty()) throw UsageError("verify needs --with J1,J2,...");
  std::vector<Ideal> parts;
  for (const auto& name : split_list(o.with)) {
    if (!l.doc.ideals.count(name)) throw UsageError("no ideal named " + name + " in the input");
    parts.push_back(l.doc.ideal(name));
    out.inputs[name] = ideal_json(parts.back());
  }
  const DecompositionCheck c = verify_decomposition(l.ideal(), parts);
  json irr = json::array();
  for (auto v : c.irreducible) irr.push_back(to_string(v));
  out.result = {{"valid", c.valid}, {"irredundant", c.irredundant}, {"irreducible", irr}, {"reason", c.reason}};
  out.text.push_back("valid: " + yes_no(c.valid));
  out.text.push_back("irredundant: " + yes_no(c.irredundant));
  std::vector<std::string> parts_text;
  for (auto v : c.irreducible) parts_text.push_back(to_string(v));
  out.text.push_back("irreducible: " + join(parts_text, ", "));
  if (!c.reason.empty()) out.text.push_back("reason: " + c.reason);
}

void cmd_star(const Options& o, Outcome& out) {
  const Loaded l = load(o, out);
  const StarResult s = o.bound ? star_truncated(l.ideal(), o.bound) : star(l.ideal());
  set_ideal_result(out, "star", s.ideal);
  out.certificates = star_certificate(s);
  out.text.push_back("method: " + to_string(s.method) + ", certificate: " + to_string(s.certificate));
}

void cmd_compare_star(const Options& o, Outcome& out) {
  const Loaded l = load(o, out);
  const StarComparison c = compare_star(l.ideal());
  out.result = {{"r", c.r},
                {"r_star", c.r_star},
                {"star", basis_json(shown_basis(c.star.ideal))},
                {"radical", render(c.radical)},
                {"radical_graded", c.radical_graded},
                {"quotient_generators", c.quotient_generators ? json(*c.quotient_generators) : json(nullptr)},
                {"quotient_principal", principal_string(c.quotient_principal)},
                {"hypothesis_met", c.hypothesis_met},
                {"conclusion_holds", c.conclusion_holds}};
  out.certificates["star"] = star_certificate(c.star);
  out.contradictions = c.contradictions;
  out.text.push_back("r: " + std::to_string(c.r));
  out.text.push_back("r_star: " + std::to_string(c.r_star));
  out.text.push_back("star: " + basis_text(shown_basis(c.star.ideal)));
  out.text.push_back("quotient generators: " +
                     (c.quotient_generators ? std::to_string(*c.quotient_generators) : std::string("unknown")));
  out.text.push_back("hypothesis met: " + yes_no(c.hypothesis_met) + ", conclusion holds: " + yes_no(c.conclusion_holds));
}

void cmd_moh(const Options& o, Outcome& out) {
  if (o.n >= 3 && !o.slow) throw UsageError("moh with n >= 3 is slow; pass --slow");
  const Field field = parse_field(o.field);
  const MohReport m = moh_report(o.n, o.l, field);
  out.ring = m.prime.ring();
  out.inputs = {{"n", m.n}, {"l", m.l}, {"m", m.m}, {"field", field.to_string()}};
  out.result = {{"prime", basis_json(shown_basis(m.prime))},
                {"generator_degrees", m.generator_degrees},
                {"local_generators", m.local_generators},
                {"star", basis_json(shown_basis(m.star.ideal))},
                {"star_generators", m.star_generators},
                {"star_principal", m.star_principal()},
                {"curve_weights", {m.n * m.m, (m.n + 1) * m.m, (m.n + 2) * m.m}},
                {"curve_star", basis_json(shown_basis(m.curve_star.ideal))},
                {"curve_star_generators", m.curve_star_generators},
                {"curve_star_principal", m.curve_star_principal()}};
  out.certificates["star"] = star_certificate(m.star);
  out.certificates["curve_star"] = star_certificate(m.curve_star);
  out.certificates["finite_field_run"] = !field.is_rational();
  out.text.push_back("P: " + basis_text(shown_basis(m.prime)));
  std::vector<std::string> degs;
  for (auto d : m.generator_degrees) degs.push_back(std::to_string(d));
  out.text.push_back("generator degrees: " + join(degs, " "));
  out.text.push_back("local generators at (x,y,z): " + std::to_string(m.local_generators));
  out.text.push_back("P*: " + basis_text(shown_basis(m.star.ideal)) +
                     (m.star_principal() ? " (principal)" : " (not principal)"));
  out.text.push_back("P* for the curve weights: " + basis_text(shown_basis(m.curve_star.ideal)) +
                     (m.curve_star_principal() ? " (principal)" : " (not principal)"));
}

void cmd_oracle(const Options& o, Outcome& out) {
  const FiniteAlgebra a = load_fixture(read_input(o.input));
  out.ring = a.ring;
  if (a.source) out.inputs["I"] = ideal_json(*a.source);
  out.inputs["dimension"] = a.dimension();
  if (o.dump) {
    const std::string table = dump_fixture(a);
    out.result = {{"fixture", table}};
    if (!table.empty() && table.back() == '\n') out.text.push_back(table.substr(0, table.size() - 1));
    else out.text.push_back(table);
    return;
  }
  if (!a.graded) {
    const IdealLattice lat = enumerate_ideals(a);
    out.result = {{"ideals", lat.size()}, {"r", oracle_index(lat, false)}};
    out.text.push_back("ideals: " + std::to_string(lat.size()));
    out.text.push_back("r: " + std::to_string(oracle_index(lat, false)));
    return;
  }
  const OracleReport rep = oracle_theorems(a);
  out.result = {{"ideals", rep.lattice_size},       {"graded_ideals", rep.graded_size},
                {"socle_dimension", rep.socle_dimension}, {"r", rep.index},
                {"r_graded", rep.graded_index},     {"decomposition_lengths", rep.decomposition_lengths},
                {"decompositions", rep.decompositions}, {"truncated", rep.truncated}};
  out.certificates["field"] = a.field().to_string();
  out.certificates["scope"] = "exhaustive over a finite field";
  for (const auto& f : rep.failures) out.contradictions.push_back({"oracle check", f});
  out.text.push_back("ideals: " + std::to_string(rep.lattice_size) + " (" + std::to_string(rep.graded_size) +
                     " graded)");
  out.text.push_back("r: " + std::to_string(rep.index) + ", r^g: " + std::to_string(rep.graded_index) +
                     ", socle: " + std::to_string(rep.socle_dimension));
  out.text.push_back("irredundant decompositions of 0: " + std::to_string(rep.decompositions) +
                     (rep.truncated ? " (search truncated)" : ""));
  if (!rep.failures.empty()) out.text.push_back("fixture:\n" + rep.fixture);
}

void cmd_verify_thm(const Options& o, Outcome& out) {
  std::vector<Ideal> corpus;
  if (!o.input.empty()) {
    const Document doc = parse_document(read_input(o.input));
    out.ring = doc.ring;
    for (const auto& name : doc.ideal_names) {
      corpus.push_back(doc.ideal(name));
      out.inputs[name] = ideal_json(corpus.back());
    }
  } else {
    CorpusOptions opts;
    opts.field = parse_field(o.field);
    const std::uint64_t seed = resolve_seed(o);
    corpus = random_graded_corpus(o.count, seed, opts);
    out.inputs = {{"random_corpus", o.count}, {"seed", seed}, {"field", opts.field.to_string()}};
  }
  const int threads = static_cast<int>(std::max<std::size_t>(1, o.jobs));
  const EquivalenceReport rep = [&] {
    if (threads == 1) return verify_equivalence(corpus, Exec::Serial);
    const int saved = parallel_threads();
    set_parallel_threads(threads);
    auto r = verify_equivalence(corpus, Exec::Parallel);
    set_parallel_threads(saved);
    return r;
  }();
  json failures = json::array();
  for (std::size_t k = 0; k < rep.entries.size(); ++k) {
    const auto& e = rep.entries[k];
    if (e.passed) continue;
    failures.push_back({{"index", k}, {"failure", e.failure}, {"fixture", e.fixture}});
    out.text.push_back("FAIL #" + std::to_string(k) + ": " + e.failure + "\n" + e.fixture);
  }
  out.result = {{"ideals", rep.entries.size()}, {"passed", rep.passed}, {"failed", rep.failed}, {"failures", failures}};
  out.contradictions = rep.contradictions;
  out.text.push_back("passed: " + std::to_string(rep.passed) + ", failed: " + std::to_string(rep.failed));
}

using Handler = void (*)(const Options&, Outcome&);

struct CommandInfo {
  const char* name;
  const char* help;
  Handler handler;
};

const CommandInfo kCommands[] = {
    {"gb", "reduced Groebner basis", cmd_gb},
    {"nf", "normal form of --poly", cmd_nf},
    {"member", "ideal membership of --poly", cmd_member},
    {"intersect", "intersection with --with", cmd_intersect},
    {"quotient", "ideal quotient by --poly or --with", cmd_quotient},
    {"saturate", "saturation by --poly", cmd_saturate},
    {"eliminate", "eliminate --vars", cmd_eliminate},
    {"socle", "socle of R/I at the variables", cmd_socle},
    {"hilbert", "Hilbert function of R/I", cmd_hilbert},
    {"type", "type of the Artinian local ring R/I", cmd_type},
    {"index", "index of reducibility r(I)", cmd_index},
    {"gindex", "graded index of reducibility", cmd_gindex},
    {"decompose", "irredundant irreducible decomposition", cmd_decompose},
    {"verify", "check I = intersection of --with J1,J2,...", cmd_verify},
    {"star", "largest graded subideal I*", cmd_star},
    {"compare-star", "compare r(I) with r(I*)", cmd_compare_star},
    {"moh", "Moh's space curve primes (--n, --l, --field)", cmd_moh},
    {"oracle", "exhaustive checks on a small algebra over GF(p)", cmd_oracle},
    {"verify-thm", "r = r^g and component checks over a corpus", cmd_verify_thm},
};

json timings_json(double ms) { return {{"total_ms", ms}}; }

}  // namespace

MohReport moh_report(int n, int l, const Field& field) {
  if (n <= 0 || n % 2 == 0) throw Error(ErrorCode::InvalidArgument, "n must be odd; got " + std::to_string(n));
  const int m = (n + 1) / 2;
  if (l <= n * (n + 1) * m || std::gcd(l, m) != 1) {
    throw Error(ErrorCode::InvalidArgument, "need l > n(n+1)m = " + std::to_string(n * (n + 1) * m) +
                                                " and gcd(l, m) = 1 with m = " + std::to_string(m) + "; got l = " +
                                                std::to_string(l));
  }
  const std::int64_t wx = n * m, wy = (n + 1) * m, wz = (n + 2) * m;
  const RingPtr graph = Ring::create(field, {"x", "y", "z", "t"}, {1, 1, 1, 1});
  const RingPtr target = Ring::create(field, {"x", "y", "z"}, {1, 1, 1});
  const RingPtr curve = Ring::create(field, {"x", "y", "z"}, {wx, wy, wz});
  auto mono = [&](std::size_t var, std::int64_t e) {
    return Polynomial::term(graph, Monomial::variable(var, static_cast<std::uint32_t>(e)), field.one());
  };
  const Ideal g(graph, {mono(0, 1) - mono(3, wx) - mono(3, wx + l), mono(1, 1) - mono(3, wy), mono(2, 1) - mono(3, wz)});
  const std::size_t t = 3;
  const Ideal kernel = eliminate(g, std::span<const std::size_t>(&t, 1));
  std::vector<Polynomial> gens, curve_gens;
  const std::vector<Polynomial> same{Polynomial::variable(curve, 0), Polynomial::variable(curve, 1),
                                     Polynomial::variable(curve, 2)};
  for (const auto& p : kernel.generators()) {
    gens.push_back(p.contract(target));
    curve_gens.push_back(substitute(gens.back(), curve, same));
  }
  const Ideal prime(target, std::move(gens));
  std::vector<std::uint32_t> degrees;
  for (const auto& p : groebner_basis(prime)) degrees.push_back(p.total_degree());
  StarResult s = star(prime);
  StarResult cs = star(Ideal(curve, std::move(curve_gens)));
  const std::size_t sg = local_min_generators(s.ideal, variables_ideal(target));
  const std::size_t cg = local_min_generators(cs.ideal, variables_ideal(curve));
  return MohReport{n, l, m, prime, degrees, local_min_generators(prime, variables_ideal(target)), s, sg, cs, cg};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"gradix: graded irreducibility toolkit", "gradix"};
  app.require_subcommand(1);
  Options o;
  for (const auto& c : kCommands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("-i,--input", o.input, "input .gx file, - for stdin");
    sub->add_option("--ideal", o.ideal, "ideal name (default I, else the first)");
    sub->add_flag("--json", o.json, "JSON report");
    sub->add_flag("--timings", o.timings, "report wall-clock time");
    const std::string name = c.name;
    if (name == "gb" || name == "nf") sub->add_option("--order", o.order, "grevlex or lex");
    if (name == "nf" || name == "member" || name == "quotient" || name == "saturate") {
      sub->add_option("--poly", o.poly, "polynomial");
    }
    if (name == "intersect" || name == "quotient" || name == "verify") sub->add_option("--with", o.with, "other ideal(s)");
    if (name == "eliminate") sub->add_option("--vars", o.vars, "comma-separated variables");
    if (name == "decompose") sub->add_flag("--graded", o.graded, "graded components");
    if (name == "star") sub->add_option("--bound", o.bound, "search only degrees up to this bound");
    if (name == "gindex" || name == "verify-thm") sub->add_option("--seed", o.seed, "random seed (else GRADIX_SEED)");
    if (name == "verify-thm") {
      sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
      sub->add_option("--count", o.count, "size of the random corpus");
      sub->add_option("--field", o.field, "field of the random corpus");
    }
    if (name == "oracle") sub->add_flag("--dump", o.dump, "print the multiplication tables instead");
    if (name == "moh") {
      sub->add_option("--n", o.n, "odd n")->required();
      sub->add_option("--l", o.l, "l > n(n+1)m, gcd(l, m) = 1")->required();
      sub->add_option("--field", o.field, "coefficient field")->default_str("GF(3)");
      sub->add_flag("--slow", o.slow, "allow n >= 3");
    }
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }
  const CommandInfo* info = nullptr;
  for (const auto& c : kCommands) {
    if (app.got_subcommand(c.name)) info = &c;
  }
  o.command = info->name;

  Outcome res;
  const auto start = std::chrono::steady_clock::now();
  int code = kExitOk;
  try {
    info->handler(o, res);
  } catch (const UsageError& e) {
    err << "gradix " << o.command << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "gradix " << o.command << ": " << e.what() << '\n';
    if (is_scope_refusal(e.code())) return kExitRefused;
    return kExitUsage;
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (!res.contradictions.empty()) code = kExitContradiction;

  if (o.json) {
    json doc;
    doc["schema"] = 1;
    doc["command"] = o.command;
    doc["ring"] = res.ring ? json((*res.ring)->to_string()) : json(nullptr);
    doc["inputs"] = res.inputs;
    doc["result"] = res.result;
    doc["certificates"] = res.certificates;
    doc["theorem_contradictions"] = events_json(res.contradictions);
    doc["timings"] = o.timings ? timings_json(ms) : json(nullptr);
    out << doc.dump(2) << '\n';
  } else {
    for (const auto& line : res.text) out << line << '\n';
    for (const auto& e : res.contradictions) err << "theorem contradiction: " << e.statement << ": " << e.detail << '\n';
    if (o.timings) err << "time: " << ms << " ms\n";
  }
  return code;
}

}  // namespace gradix::cli
