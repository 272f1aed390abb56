// pnarray command-line front end. Every subcommand writes JSON (or, with
// --pretty, a plain-text rendering) to stdout or to --out.
//
// Exit codes: 0 success, 1 domain failure, 2 usage error.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "pnarray/io.hpp"
#include "pnarray/pnarray.hpp"

namespace {

using namespace pnarray;
using io::json;
using cplx = std::complex<double>;

struct global_options {
  bool pretty = false;
  unsigned threads = 1;
  std::uint64_t seed = 0;
};

global_options g_opts;

// Failures that are the caller's fault but only detectable after parsing.
struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  detail::require(static_cast<bool>(out), "cannot open output file " + path);
  out << text;
}

void emit(const std::string& path, const json& doc, const std::string& pretty_text) {
  write_output(path, g_opts.pretty ? pretty_text : doc.dump() + "\n");
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  detail::require(static_cast<bool>(in), "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(path + ": invalid JSON (" + e.what() + ")");
  }
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw usage_error("bad integer '" + token + "' in list '" + text + "'");
    }
  }
  if (out.empty()) throw usage_error("empty integer list");
  return out;
}

ff::polynomial modulus_or_default(const std::string& text, std::uint64_t p, unsigned m) {
  if (text.empty()) return ff::find_primitive_polynomial(p, m);
  return ff::parse_polynomial(text);
}

// --- plain-text renderers --------------------------------------------------

std::string shift_text(const shift_sequence& s) {
  std::ostringstream out;
  out << "T=" << s.length() << " v=" << s.modulus() << "\n";
  for (std::size_t j = 0; j < s.length(); ++j) out << (j ? " " : "") << (s[j] ? std::to_string(*s[j]) : "-");
  out << "\n";
  return out.str();
}

template <class Scalar>
std::string sequence_text(const std::vector<Scalar>& s) {
  std::ostringstream out;
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << io::format_scalar(s[i]);
  out << "\n";
  return out.str();
}

// --- scalar promotion ------------------------------------------------------

int rank_of(const io::any_array& a) { return static_cast<int>(a.index()); }

template <class Target>
pn_array<Target> promote(const io::any_array& a) {
  return std::visit(
      [](const auto& x) {
        using S = typename std::decay_t<decltype(x)>::value_type;
        if constexpr (std::is_same_v<S, Target>) {
          return x;
        } else if constexpr (is_complex_v<Target>) {
          pn_array<Target> out(x.rows(), x.cols());
          for (std::size_t i = 0; i < x.rows(); ++i)
            for (std::size_t j = 0; j < x.cols(); ++j) out(i, j) = Target(static_cast<double>(x(i, j)), 0.0);
          return out;
        } else if constexpr (is_complex_v<S>) {
          throw std::logic_error("promote: cannot narrow complex");
          return pn_array<Target>{};
        } else {
          return x.template cast<Target>();
        }
      },
      a);
}

// --- gen-column --------------------------------------------------------------

struct gen_column_args {
  std::string kind, variant = "binary", poly, out;
  std::uint64_t p = 7, r = 1;
  unsigned m = 1, n = 0;
  bool bipolar_map = false, analyze = false;
};

template <class Scalar>
json column_analysis(const column_sequence<Scalar>& c) {
  const auto report = verify_pseudonoise(c);
  json a = {{"autocorrelation", io::sequence_to_json(report.autocorrelation)},
            {"peak", io::scalar_to_json(report.peak)},
            {"two_valued", report.two_valued}};
  a["off_peak"] = report.off_peak ? io::scalar_to_json(*report.off_peak) : json(nullptr);
  if constexpr (std::is_integral_v<Scalar>) {
    if (c.kind == alphabet::binary || (c.kind == alphabet::residue && c.symbol_modulus == 2))
      a["linear_complexity"] = linear_complexity(c);
  }
  return a;
}

template <class Scalar>
void emit_column(const gen_column_args& args, const column_sequence<Scalar>& c) {
  json doc = io::to_json(c);
  std::string text = to_string(c.kind) + " v=" + std::to_string(c.period()) + "\n" + sequence_text(c.entries);
  if (args.analyze) {
    doc["analysis"] = column_analysis(c);
    const auto& ac = doc["analysis"];
    text += "autocorrelation: " + ac["autocorrelation"].dump() + "\ntwo-valued: " +
            (ac["two_valued"].get<bool>() ? "yes" : "no") + "\n";
    if (ac.contains("linear_complexity"))
      text += "linear complexity: " + ac["linear_complexity"].dump() + "\n";
  }
  emit(args.out, doc, text);
}

void run_gen_column(const gen_column_args& args) {
  if (args.kind == "legendre") {
    if (args.variant != "binary" && args.variant != "ternary")
      throw usage_error("--variant must be binary or ternary");
    emit_column(args, legendre(args.p, args.variant == "binary" ? legendre_variant::binary
                                                                : legendre_variant::ternary));
  } else if (args.kind == "hall") {
    emit_column(args, hall(args.p));
  } else if (args.kind == "mseq") {
    auto c = m_sequence(args.p, args.m, modulus_or_default(args.poly, args.p, args.m));
    if (args.bipolar_map) c = bipolar(c);
    emit_column(args, c);
  } else if (args.kind == "gmw") {
    if (args.n == 0) throw usage_error("gmw needs --n (extension degree)");
    emit_column(args, gmw_sequence(args.p, args.n, args.m, args.r));
  } else if (args.kind == "roots") {
    const auto base = m_sequence(args.p, args.m, modulus_or_default(args.poly, args.p, args.m));
    emit_column(args, roots_of_unity_map(base, args.p));
  } else {
    throw usage_error("unknown column kind '" + args.kind + "'");
  }
}

// --- gen-shift ---------------------------------------------------------------

struct gen_shift_args {
  std::string kind, coeffs = "0,0,1", modulus, out;
  std::uint64_t p = 7, g = 0, r = 1, a = 1;
  unsigned m = 2, sub = 1;
  std::int64_t t = 1, s = 1, convert = 0;
  bool analyze = false;
};

void run_gen_shift(const gen_shift_args& args) {
  std::optional<shift_sequence> phi;
  const std::uint64_t g = args.g != 0 ? args.g : (ff::is_prime(args.p) ? ff::primitive_root(args.p) : 0);
  if (args.kind == "quadratic" || args.kind == "polynomial") {
    const auto coeffs = parse_int_list(args.coeffs);
    if (args.kind == "quadratic") {
      const bool degree_two = coeffs.size() == 3 && ff::mod(coeffs[2], static_cast<std::int64_t>(args.p)) != 0;
      detail::require(degree_two, "quadratic needs exactly three coefficients c0,c1,c2 with c2 != 0 mod p");
    }
    detail::require(ff::is_prime(args.p), "p must be prime");
    phi = polynomial_shift(args.p, coeffs);
  } else if (args.kind == "exponential") {
    detail::require(ff::is_prime(args.p), "p must be prime");
    phi = exponential_shift(args.p, g);
  } else if (args.kind == "legendre-index") {
    phi = legendre_index_shift(args.p, g, args.r);
  } else if (args.kind == "zech") {
    const ff::ext_field field(args.p, args.m, modulus_or_default(args.modulus, args.p, args.m));
    phi = zech_shift(field, args.t, args.s);
  } else if (args.kind == "marray") {
    const ff::ext_field field(args.p, args.m, modulus_or_default(args.modulus, args.p, args.m));
    phi = marray_shift(field, args.sub);
  } else if (args.kind == "reciprocal") {
    phi = reciprocal_shift(args.p, args.a);
  } else {
    throw usage_error("unknown shift kind '" + args.kind + "'");
  }

  json doc = io::to_json(*phi);
  std::string text = shift_text(*phi);
  if (args.convert != 0) {
    const auto conv = perfect_conversion(*phi, args.convert);
    json converted = io::to_json(conv.sequence);
    converted["source"] = doc;
    converted["slope"] = conv.slope;
    converted["offset"] = conv.offset;
    doc = converted;
    text = "source: " + shift_text(*phi) + "converted (c=" + std::to_string(conv.slope) +
           ", d=" + std::to_string(conv.offset) + "): " + shift_text(conv.sequence);
    phi = conv.sequence;
  }
  if (args.analyze) {
    const auto dbl = doubleton_check(*phi);
    doc["analysis"] = {{"ddp", check_ddp(*phi)},
                       {"constant_difference", check_constant_difference(*phi)},
                       {"doubleton_at_most_once", dbl.at_most_once},
                       {"blank_columns", phi->blank_count()}};
    text += "ddp: " + std::string(check_ddp(*phi) ? "yes" : "no") +
            "\nconstant difference: " + (check_constant_difference(*phi) ? "yes" : "no") +
            "\ndoubleton at most once: " + (dbl.at_most_once ? "yes" : "no") + "\n";
  }
  emit(args.out, doc, text);
}

// --- build -------------------------------------------------------------------

struct build_args {
  std::string shift, column, fill, out;
};

template <class To, class From>
column_sequence<To> convert_column(const column_sequence<From>& c) {
  column_sequence<To> out{{}, c.kind, c.symbol_modulus};
  for (const auto& x : c.entries) out.entries.push_back(To(static_cast<double>(x)));
  return out;
}

template <class Scalar>
void emit_array(const std::string& out, const pn_array<Scalar>& a) {
  emit(out, io::to_json(a), io::to_text(a));
}

void run_build(const build_args& args) {
  const auto phi = io::shift_from_json(read_json(args.shift));
  const auto column = io::column_from_json(read_json(args.column));
  std::optional<cplx> fill;
  if (!args.fill.empty()) {
    std::stringstream ss(args.fill);
    std::string re, im;
    std::getline(ss, re, ',');
    std::getline(ss, im, ',');
    try {
      fill = cplx(std::stod(re), im.empty() ? 0.0 : std::stod(im));
    } catch (const std::exception&) {
      throw usage_error("--blank-fill must be a number or re,im");
    }
  }
  const cplx f = fill.value_or(cplx{});
  const bool real_fill = f.imag() == 0.0;
  const bool integral_fill = real_fill && f.real() == std::floor(f.real());
  auto finish = [&](auto arr) {
    arr.set_origin({"file " + args.shift, "file " + args.column,
                    fill && real_fill ? std::optional<double>(f.real()) : std::nullopt});
    emit_array(args.out, arr);
  };
  std::visit(
      [&](const auto& c) {
        using S = typename std::decay_t<decltype(c)>::value_type;
        if constexpr (is_complex_v<S>) {
          finish(build_array(phi, c, f));
        } else {
          if (!real_fill) {
            finish(build_array(phi, convert_column<cplx>(c), f));
          } else if constexpr (std::is_integral_v<S>) {
            if (integral_fill) {
              finish(build_array(phi, c, static_cast<S>(f.real())));
            } else {
              finish(build_array(phi, convert_column<double>(c), f.real()));
            }
          } else {
            finish(build_array(phi, c, f.real()));
          }
        }
      },
      column);
}

// --- corr --------------------------------------------------------------------

struct corr_args {
  std::string a, b, method = "auto", csv, out;
  std::size_t top = 5;
  bool exclude_origin = false, no_table = false;
};

template <class Scalar>
correlation_table<Scalar> correlate(const pn_array<Scalar>& a, const pn_array<Scalar>& b, const std::string& method,
                                    std::string& used) {
  if (method != "brute") {
    if (const auto s = find_structure(b)) {
      used = "structured";
      return correlate_structured(a, *s, g_opts.threads);
    }
    if (method == "structured") throw structure_error("corr: --b is not a shift-sequence array");
  }
  used = "brute";
  return cross_correlate_2d(a, b, g_opts.threads);
}

template <class Scalar>
void run_corr_typed(const corr_args& args, const pn_array<Scalar>& a, const pn_array<Scalar>& b) {
  std::string used;
  const auto table = correlate(a, b, args.method, used);
  const auto hist = correlation_histogram(table, args.exclude_origin);
  const auto stats = peak_sidelobe_stats(table);

  std::vector<std::size_t> order(table.values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return magnitude(table.values[x]) > magnitude(table.values[y]) + tolerance;
  });
  order.resize(std::min(order.size(), args.top));

  json top = json::array();
  for (std::size_t idx : order)
    top.push_back({{"k", idx / table.row_shifts}, {"l", idx % table.row_shifts},
                   {"value", io::scalar_to_json(table.values[idx])}});

  json doc;
  doc["method"] = used;
  if (!args.no_table) doc["table"] = io::to_json(table);
  doc["histogram"] = io::to_json(hist);
  doc["stats"] = io::to_json(stats);
  doc["top"] = top;
  if (!args.csv.empty()) write_output(args.csv, io::to_csv(table));

  std::ostringstream text;
  if (!args.no_table) {
    // Rendered with l down the side and k across, matching the array layout.
    pn_array<Scalar> grid(table.row_shifts, table.col_shifts);
    for (std::size_t k = 0; k < table.col_shifts; ++k)
      for (std::size_t l = 0; l < table.row_shifts; ++l) grid(l, k) = table.at(k, l);
    text << "C(k, l), rows l, columns k:\n" << io::to_text(grid);
  }
  text << "histogram:\n";
  for (const auto& bin : hist) text << "  " << std::setw(14) << io::format_scalar(bin.value) << "  x" << bin.count << "\n";
  text << "top peaks:\n";
  for (const auto& t : top) text << "  (k=" << t["k"] << ", l=" << t["l"] << ") " << t["value"].dump() << "\n";
  text << "peak/sidelobe: " << (stats.unbounded ? std::string("unbounded") : io::format_scalar(stats.ratio)) << "\n";
  emit(args.out, doc, text.str());
}

void run_corr(const corr_args& args) {
  if (args.method != "auto" && args.method != "brute" && args.method != "structured")
    throw usage_error("--method must be auto, brute or structured");
  const auto a = io::array_from_json(read_json(args.a));
  const auto b = args.b.empty() ? a : io::array_from_json(read_json(args.b));
  switch (std::max(rank_of(a), rank_of(b))) {
    case 0: run_corr_typed(args, promote<std::int64_t>(a), promote<std::int64_t>(b)); break;
    case 1: run_corr_typed(args, promote<double>(a), promote<double>(b)); break;
    default: run_corr_typed(args, promote<cplx>(a), promote<cplx>(b)); break;
  }
}

// --- family ------------------------------------------------------------------

struct family_args {
  std::string kind, out;
  std::uint64_t p = 7;
  unsigned m = 4, n = 2;
};

void run_family(const family_args& args) {
  const auto kind = family_kind_from_string(args.kind);
  const auto fam = family_enumerate(kind, {args.p, args.m, args.n});
  std::ostringstream text;
  text << to_string(fam.kind) << ": declared " << fam.declared_size << ", distinct classes "
       << fam.distinct_classes << "\n";
  for (const auto& m : fam.members) text << "  " << std::left << std::setw(18) << m.label << shift_text(m.generator);
  emit(args.out, io::to_json(fam), text.str());
}

// --- unfold ------------------------------------------------------------------

struct unfold_args {
  std::string array, mode = "diagonal", csv, out;
  std::size_t q = 1, r = 1;
  std::optional<std::size_t> tau;
  bool correlate = false;
};

template <class Scalar>
void run_unfold_typed(const unfold_args& args, const pn_array<Scalar>& a) {
  json doc = {{"mode", args.mode}, {"rows", a.rows()}, {"cols", a.cols()}};
  std::vector<Scalar> seq;
  if (args.mode == "diagonal") {
    seq = diagonal_unfold(a, args.q, args.r);
    doc["q"] = args.q;
    doc["r"] = args.r;
  } else if (args.mode == "row") {
    seq = row_unfold(a);
  } else {
    throw usage_error("--mode must be diagonal or row");
  }
  doc["length"] = seq.size();
  doc["sequence"] = io::sequence_to_json(seq);
  std::string text = args.mode + " unfolding, length " + std::to_string(seq.size()) + "\n" + sequence_text(seq);
  if (args.tau) {
    detail::require(args.mode == "diagonal", "--tau applies to diagonal unfolding only");
    const auto s = diagonal_shift_to_2d(*args.tau, a.rows(), a.cols(), args.q, args.r);
    doc["shift_2d"] = {{"tau", *args.tau}, {"k", s.k}, {"l", s.l}};
    text += "tau " + std::to_string(*args.tau) + " -> (k=" + std::to_string(s.k) + ", l=" + std::to_string(s.l) + ")\n";
  }
  if (args.correlate) {
    const auto c1 = correlate_1d<Scalar>(seq, seq);
    doc["autocorrelation"] = io::sequence_to_json(c1);
    text += "autocorrelation:\n" + sequence_text(c1);
    if (args.mode == "row") {
      double column_peak = 0.0;
      for (std::size_t j = 0; j < a.cols(); ++j) {
        double e = 0.0;
        for (const auto& x : a.column(j)) e += magnitude(x) * magnitude(x);
        column_peak = std::max(column_peak, e);
      }
      const auto rep = measure_row_unfold(a, a, column_peak);
      doc["row_unfold_report"] = {{"worst_1d", rep.worst_1d},     {"worst_2d", rep.worst_2d},
                                  {"column_peak", rep.column_peak}, {"bound", rep.bound},
                                  {"measured_factor", rep.measured_factor}, {"within_bound", rep.within_bound}};
      text += "worst 1D " + io::format_scalar(rep.worst_1d) + ", worst 2D " + io::format_scalar(rep.worst_2d) +
              ", bound " + io::format_scalar(rep.bound) + (rep.within_bound ? " (holds)\n" : " (violated)\n");
    }
  }
  if (!args.csv.empty()) write_output(args.csv, io::sequence_to_csv(seq));
  emit(args.out, doc, text);
}

void run_unfold(const unfold_args& args) {
  std::visit([&](const auto& a) { run_unfold_typed(args, a); }, io::array_from_json(read_json(args.array)));
}

// --- window ------------------------------------------------------------------

struct window_args {
  std::string column, shift, array, out;
  std::optional<std::size_t> n, k;
};

void run_window(const window_args& args) {
  const int sources = !args.column.empty() + !args.shift.empty() + !args.array.empty();
  if (sources != 1) throw usage_error("window needs exactly one of --column, --shift, --array");
  json doc;
  std::ostringstream text;
  if (!args.column.empty()) {
    std::visit(
        [&](const auto& c) {
          const std::size_t lo = args.n.value_or(1), hi = args.n.value_or(c.period());
          json results = json::array();
          for (std::size_t n = lo; n <= hi; ++n) {
            const auto verdict = window_check_1d<typename std::decay_t<decltype(c)>::value_type>(c.entries, n);
            results.push_back(json{{"n", n}, {"verdict", to_string(verdict)}});
            text << "n=" << n << ": " << to_string(verdict) << "\n";
          }
          doc = {{"source", "column"}, {"period", c.period()}, {"results", results}};
        },
        io::column_from_json(read_json(args.column)));
  } else if (!args.shift.empty()) {
    const auto phi = io::shift_from_json(read_json(args.shift));
    const auto rep = doubleton_check(phi);
    json per = json::array();
    for (std::size_t k = 1; k < rep.per_separation.size(); ++k)
      per.push_back({{"k", k}, {"at_most_once", static_cast<bool>(rep.per_separation[k])}});
    doc = {{"source", "shift"},
           {"at_most_once", rep.at_most_once},
           {"exactly_once_translated", rep.exactly_once_translated},
           {"per_separation", per}};
    text << "doubleton at most once: " << (rep.at_most_once ? "yes" : "no")
         << "\nexactly once (translated): " << (rep.exactly_once_translated ? "yes" : "no") << "\n";
  } else {
    std::visit(
        [&](const auto& a) {
          const std::size_t n = args.n.value_or(std::min<std::size_t>(a.rows(), 2));
          const std::size_t k_lo = args.k.value_or(1), k_hi = args.k.value_or(a.cols() - 1);
          json results = json::array();
          bool all = true;
          for (std::size_t k = k_lo; k <= k_hi; ++k) {
            const bool unique = window_check_array(a, n, k);
            all = all && unique;
            results.push_back({{"n", n}, {"k", k}, {"unique", unique}});
            text << "n=" << n << " k=" << k << ": " << (unique ? "unique" : "repeated") << "\n";
          }
          doc = {{"source", "array"}, {"all_unique", all}, {"results", results}};
        },
        io::array_from_json(read_json(args.array)));
  }
  emit(args.out, doc, text.str());
}

// --- watermark ---------------------------------------------------------------

struct wm_args {
  std::string image, synthetic, out, family = "quadratic", payload = "0", report;
  std::uint64_t p = 127;
  std::size_t count = 4;
  double strength = 3.0, mean = 128.0, sigma = 8.0;
};

wm::gray_image load_or_synthesize(const wm_args& args) {
  if (!args.image.empty() && !args.synthetic.empty()) throw usage_error("use only one of --image and --synthetic");
  if (!args.image.empty()) return wm::read_pgm(args.image);
  if (args.synthetic.empty()) throw usage_error("need --image or --synthetic WxH");
  const auto x = args.synthetic.find('x');
  try {
    if (x == std::string::npos) throw std::invalid_argument("no x");
    return wm::synthetic_image(std::stoul(args.synthetic.substr(0, x)), std::stoul(args.synthetic.substr(x + 1)),
                               args.mean, args.sigma, g_opts.seed);
  } catch (const std::logic_error&) {
    throw usage_error("--synthetic must look like 512x512");
  }
}

void run_wm_embed(const wm_args& args) {
  if (args.out.empty()) throw usage_error("wm-embed needs --out for the watermarked image");
  const auto img = load_or_synthesize(args);
  const auto arrays = wm::watermark_arrays(family_kind_from_string(args.family), args.p, args.count);
  const std::size_t v = arrays.front().rows(), T = arrays.front().cols();
  const auto shifts = wm::decode_payload(args.payload, arrays.size(), v, T);
  const auto marked = wm::embed<std::int64_t>(img, arrays, shifts, args.strength);
  wm::write_pgm(args.out, marked);

  json sh = json::array();
  std::ostringstream text;
  text << "embedded " << arrays.size() << " arrays of " << v << "x" << T << " into " << img.width << "x"
       << img.height << "\n";
  for (std::size_t i = 0; i < shifts.size(); ++i) {
    sh.push_back({{"index", i}, {"k", shifts[i].k}, {"l", shifts[i].l}});
    text << "  array " << i << ": shift (k=" << shifts[i].k << ", l=" << shifts[i].l << ")\n";
  }
  const json doc = {{"image", args.out},
                    {"width", img.width},
                    {"height", img.height},
                    {"family", args.family},
                    {"p", args.p},
                    {"arrays", arrays.size()},
                    {"rows", v},
                    {"cols", T},
                    {"capacity_bits", wm::capacity(arrays.size(), v, T)},
                    {"payload", wm::encode_payload(shifts, v, T)},
                    {"strength", args.strength},
                    {"shifts", sh}};
  emit(args.report, doc, text.str());
}

void run_wm_detect(const wm_args& args) {
  const auto img = load_or_synthesize(args);
  const auto arrays = wm::watermark_arrays(family_kind_from_string(args.family), args.p, args.count);
  const std::size_t v = arrays.front().rows(), T = arrays.front().cols();
  json per = json::array();
  std::vector<shift_2d> found;
  bool all_detected = true;
  std::ostringstream text;
  for (std::size_t i = 0; i < arrays.size(); ++i) {
    const auto det = wm::detect(img, arrays[i], g_opts.threads);
    const bool detected = !det.peaks.empty() && det.peaks.front().k == det.stats.peak_k &&
                          det.peaks.front().l == det.stats.peak_l;
    all_detected = all_detected && detected;
    found.push_back({det.stats.peak_k, det.stats.peak_l});
    json entry = {{"index", i},
                  {"peak", {{"k", det.stats.peak_k}, {"l", det.stats.peak_l}, {"value", det.stats.peak}}},
                  {"sidelobe", det.stats.sidelobe},
                  {"sidelobe_ratio", det.stats.unbounded ? json(nullptr) : json(det.stats.ratio)},
                  {"mean", det.mean},
                  {"stddev", det.stddev},
                  {"threshold", det.threshold},
                  {"detected", detected}};
    per.push_back(entry);
    text << "array " << i << ": peak (k=" << det.stats.peak_k << ", l=" << det.stats.peak_l << ") "
         << io::format_scalar(det.stats.peak) << ", ratio "
         << (det.stats.unbounded ? std::string("unbounded") : io::format_scalar(det.stats.ratio))
         << (detected ? ", detected\n" : ", not detected\n");
  }
  json doc = {{"image", args.image.empty() ? "synthetic " + args.synthetic : args.image},
              {"family", args.family},
              {"p", args.p},
              {"rows", v},
              {"cols", T},
              {"arrays", per},
              {"all_detected", all_detected}};
  doc["payload"] = all_detected ? json(wm::encode_payload(found, v, T)) : json(nullptr);
  text << "payload: " << (all_detected ? wm::encode_payload(found, v, T) : std::string("(incomplete)")) << "\n";
  emit(args.report, doc, text.str());
}

// --- verify-tables -------------------------------------------------------------

struct tables_args {
  std::string out;
  std::uint64_t p = 7, field_p = 2;
  unsigned field_m = 4, degree = 3;
};

bool run_verify_tables(const tables_args& args) {
  const auto report = verify_tables(args.p, args.field_p, args.field_m, args.degree);
  std::ostringstream text;
  text << std::left << std::setw(14) << "construction" << std::setw(12) << "params" << std::setw(10) << "declared"
       << std::setw(10) << "classes" << std::setw(12) << "auto max" << std::setw(12) << "cross max" << "ok\n";
  for (const auto& row : report.rows) {
    text << std::setw(14) << row.construction << std::setw(12) << row.parameters << std::setw(10)
         << row.declared_size << std::setw(10) << row.enumerated_classes << std::setw(12)
         << (std::to_string(row.auto_max) + "/" + std::to_string(row.auto_bound)) << std::setw(12)
         << (std::to_string(row.cross_max) + "/" + std::to_string(row.cross_bound)) << (row.ok() ? "yes" : "NO")
         << "\n";
    if (!row.notes.empty()) text << "    " << row.notes << "\n";
  }
  text << (report.ok() ? "all rows confirmed\n" : "some rows FAILED\n");
  emit(args.out, io::to_json(report), text.str());
  return report.ok();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pseudonoise arrays from shift sequences: construction, correlation, unfolding, watermarking"};
  app.require_subcommand(1);
  app.add_flag("--pretty", g_opts.pretty, "Human-readable text instead of JSON");
  app.add_option("--threads", g_opts.threads, "Worker threads for correlation")->check(CLI::Range(1U, 256U));
  app.add_option("--seed", g_opts.seed, "Seed for randomized paths (synthetic images)");

  gen_column_args gc;
  auto* gen_column = app.add_subcommand("gen-column", "Generate a pseudonoise column sequence");
  gen_column->add_option("--kind", gc.kind, "legendre | hall | mseq | gmw | roots")->required();
  gen_column->add_option("--p", gc.p, "Prime (period for legendre/hall, characteristic otherwise)");
  gen_column->add_option("--variant", gc.variant, "legendre: binary | ternary");
  gen_column->add_option("--m", gc.m, "mseq/roots: degree; gmw: subfield degree");
  gen_column->add_option("--n", gc.n, "gmw: extension degree");
  gen_column->add_option("--r", gc.r, "gmw: exponent coprime to p^m - 1");
  gen_column->add_option("--poly", gc.poly, "Primitive polynomial, constant term first (default: first found)");
  gen_column->add_flag("--bipolar", gc.bipolar_map, "mseq over GF(2): map 0,1 to +1,-1");
  gen_column->add_flag("--analyze", gc.analyze, "Include autocorrelation and linear complexity");
  gen_column->add_option("--out", gc.out, "Output file (default stdout)");

  gen_shift_args gs;
  auto* gen_shift = app.add_subcommand("gen-shift", "Generate a shift sequence");
  gen_shift->add_option("--kind", gs.kind, "quadratic | polynomial | exponential | legendre-index | zech | marray | reciprocal")
      ->required();
  gen_shift->add_option("--p", gs.p, "Prime or field characteristic");
  gen_shift->add_option("--coeffs", gs.coeffs, "quadratic/polynomial: c0,c1,c2,... mod p");
  gen_shift->add_option("--g", gs.g, "exponential/legendre-index: primitive root (default smallest)");
  gen_shift->add_option("--r", gs.r, "legendre-index: multiplier");
  gen_shift->add_option("--a", gs.a, "reciprocal: multiplier");
  gen_shift->add_option("--m", gs.m, "zech/marray: extension degree");
  gen_shift->add_option("--sub", gs.sub, "marray: subfield degree");
  gen_shift->add_option("--modulus", gs.modulus, "zech/marray: field modulus, constant term first");
  gen_shift->add_option("--t", gs.t, "zech: logarithm base exponent");
  gen_shift->add_option("--s", gs.s, "zech: decimation");
  gen_shift->add_option("--convert", gs.convert, "Find a linear term giving constant differences mod this value");
  gen_shift->add_flag("--analyze", gs.analyze, "Include difference-property checks");
  gen_shift->add_option("--out", gs.out, "Output file (default stdout)");

  build_args ba;
  auto* build = app.add_subcommand("build", "Build an array from a shift sequence and a column");
  build->add_option("--shift", ba.shift, "Shift sequence JSON")->required()->check(CLI::ExistingFile);
  build->add_option("--column", ba.column, "Column sequence JSON")->required()->check(CLI::ExistingFile);
  build->add_option("--blank-fill", ba.fill, "Value for blank columns: x or re,im (default 0)");
  build->add_option("--out", ba.out, "Output file (default stdout)");

  corr_args ca;
  auto* corr = app.add_subcommand("corr", "2D periodic cross-correlation of two arrays");
  corr->add_option("--a", ca.a, "First array JSON")->required()->check(CLI::ExistingFile);
  corr->add_option("--b", ca.b, "Second array JSON (default: autocorrelation)")->check(CLI::ExistingFile);
  corr->add_option("--method", ca.method, "auto | brute | structured");
  corr->add_option("--top", ca.top, "Number of peaks to list");
  corr->add_flag("--exclude-origin", ca.exclude_origin, "Leave C(0,0) out of the histogram");
  corr->add_flag("--no-table", ca.no_table, "Omit the full table");
  corr->add_option("--csv", ca.csv, "Also write the table as CSV");
  corr->add_option("--out", ca.out, "Output file (default stdout)");

  family_args fa;
  auto* family = app.add_subcommand("family", "Enumerate a shift-sequence family");
  family->add_option("--kind", fa.kind, "quadratic | polynomial | exponential | legendre | zech")->required();
  family->add_option("--p", fa.p, "Prime or field characteristic");
  family->add_option("--m", fa.m, "zech: extension degree");
  family->add_option("--n", fa.n, "polynomial: degree");
  family->add_option("--out", fa.out, "Output file (default stdout)");

  unfold_args ua;
  auto* unfold = app.add_subcommand("unfold", "Unfold an array into a 1D sequence");
  unfold->add_option("--array", ua.array, "Array JSON")->required()->check(CLI::ExistingFile);
  unfold->add_option("--mode", ua.mode, "diagonal | row");
  unfold->add_option("--q", ua.q, "diagonal: row step");
  unfold->add_option("--r", ua.r, "diagonal: column step");
  unfold->add_option("--tau", ua.tau, "diagonal: report the 2D shift for this 1D shift");
  unfold->add_flag("--correlate", ua.correlate, "Include the 1D autocorrelation");
  unfold->add_option("--csv", ua.csv, "Also write the sequence as CSV");
  unfold->add_option("--out", ua.out, "Output file (default stdout)");

  window_args wa;
  auto* window = app.add_subcommand("window", "Window-property checks");
  window->add_option("--column", wa.column, "Column JSON: n x 1 windows")->check(CLI::ExistingFile);
  window->add_option("--shift", wa.shift, "Shift JSON: doubleton check")->check(CLI::ExistingFile);
  window->add_option("--array", wa.array, "Array JSON: n x 2 windows")->check(CLI::ExistingFile);
  window->add_option("--n", wa.n, "Window height (column: default all)");
  window->add_option("--k", wa.k, "array: column separation (default all)");
  window->add_option("--out", wa.out, "Output file (default stdout)");

  wm_args we;
  auto* wm_embed = app.add_subcommand("wm-embed", "Embed a payload into a PGM image");
  wm_embed->add_option("--image", we.image, "Input PGM (P5)")->check(CLI::ExistingFile);
  wm_embed->add_option("--synthetic", we.synthetic, "Use a synthetic WxH noise image instead");
  wm_embed->add_option("--mean", we.mean, "Synthetic image mean");
  wm_embed->add_option("--sigma", we.sigma, "Synthetic image noise sigma");
  wm_embed->add_option("--out", we.out, "Watermarked PGM")->required();
  wm_embed->add_option("--family", we.family, "quadratic | exponential");
  wm_embed->add_option("--p", we.p, "Prime");
  wm_embed->add_option("--count", we.count, "Number of arrays");
  wm_embed->add_option("--payload", we.payload, "Hex payload");
  wm_embed->add_option("--strength", we.strength, "Embedding strength");
  wm_embed->add_option("--report", we.report, "Summary JSON (default stdout)");

  wm_args wd;
  auto* wm_detect = app.add_subcommand("wm-detect", "Detect arrays and decode the payload");
  wm_detect->add_option("--image", wd.image, "PGM (P5) to inspect")->check(CLI::ExistingFile);
  wm_detect->add_option("--synthetic", wd.synthetic, "Use a synthetic WxH noise image instead");
  wm_detect->add_option("--mean", wd.mean, "Synthetic image mean");
  wm_detect->add_option("--sigma", wd.sigma, "Synthetic image noise sigma");
  wm_detect->add_option("--family", wd.family, "quadratic | exponential");
  wm_detect->add_option("--p", wd.p, "Prime");
  wm_detect->add_option("--count", wd.count, "Number of arrays");
  wm_detect->add_option("--report", wd.report, "Report JSON (default stdout)");

  tables_args ta;
  auto* tables = app.add_subcommand("verify-tables", "Exhaustive family sizes and matching-column bounds");
  tables->add_option("--p", ta.p, "Prime for the quadratic, degree-n, exponential and Legendre rows");
  tables->add_option("--field-p", ta.field_p, "Zech row: characteristic");
  tables->add_option("--field-m", ta.field_m, "Zech row: extension degree");
  tables->add_option("--degree", ta.degree, "Degree-n row: n");
  tables->add_option("--out", ta.out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen_column) run_gen_column(gc);
    if (*gen_shift) run_gen_shift(gs);
    if (*build) run_build(ba);
    if (*corr) run_corr(ca);
    if (*family) run_family(fa);
    if (*unfold) run_unfold(ua);
    if (*window) run_window(wa);
    if (*wm_embed) run_wm_embed(we);
    if (*wm_detect) run_wm_detect(wd);
    if (*tables && !run_verify_tables(ta)) return 1;
  } catch (const usage_error& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "error: malformed input: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
