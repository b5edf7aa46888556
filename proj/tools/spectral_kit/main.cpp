// spectral-kit: command-line front end of the spectral library.
//
//   spectral-kit <subcommand> [--input PATH | --gen ID] [--output PATH]
//                [--format csv|json] [flags...]
//
// Exit codes: 0 success, 2 invalid arguments or input data, 1 failure while
// computing or writing the result.

#include <cmath>
#include <cstdint>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dataset.hpp"
#include "emit.hpp"
#include "spectral/spectral.hpp"

namespace {

using namespace spectral;
using spectral_kit::Format;
using spectral_kit::Table;
using spectral_kit::UsageError;

struct Options {
  std::string input;
  std::string gen;
  std::string output;
  std::string format = "csv";
  std::optional<double> ts;
  std::optional<std::uint64_t> seed;
  std::optional<double> sigma;

  bool center = false;
  bool one_sided = false;
  double fc = 0.0;
  double bw = 0.0;
  int n = 3;
  std::size_t length = 0;
  bool phase_correct = false;
  double wd = 64.0;
  int nf = 3;
  std::string axis = "frequency";
  std::size_t periods = 0;
  unsigned threads = 0;
  double fmin = 0.0;
  double fmax = 0.0;
  double df = 0.0;
  std::size_t m_indep = 0;
  bool naive = false;
  double threshold = 3.0;
  std::string phase = "lin";
  std::optional<double> new_from;
  std::optional<double> new_to;
  std::optional<double> new_step;
  bool peaks = false;
  double f0 = 0.0;
  bool list = false;
};

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

void add_io(CLI::App* cmd, Options& o, bool with_input = true) {
  if (with_input) {
    auto* in = cmd->add_option("--input,-i", o.input, "input CSV/JSON with columns x,y (or y with --ts)");
    auto* gen = cmd->add_option("--gen,-g", o.gen, "use a built-in example signal as input");
    in->excludes(gen);
    cmd->add_option("--seed", o.seed, "seed of a stochastic generator");
    cmd->add_option("--sigma", o.sigma, "noise standard deviation of a generator");
    cmd->add_option("--ts", o.ts, "sampling interval (generators, single-column input)");
  }
  cmd->add_option("--output,-o", o.output, "output path (default: standard output)");
  cmd->add_option("--format,-f", o.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
}

Signal generate(const Options& o) {
  require(!o.ts || *o.ts > 0.0, "ts must be positive");
  try {
    return make_example(o.gen, ExampleParams{o.ts, o.seed, o.sigma});
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

Signal load_signal(const Options& o) {
  require(!o.input.empty() || !o.gen.empty(), "one of --input or --gen is required");
  if (!o.gen.empty()) return generate(o);
  require(!o.seed && !o.sigma, "--seed and --sigma apply only to --gen");
  require(!o.ts || *o.ts > 0.0, "ts must be positive");
  return spectral_kit::to_signal(spectral_kit::read_dataset(o.input, o.ts));
}

Signal load_uniform(const Options& o, const char* command) {
  Signal s = load_signal(o);
  require(s.uniform(), std::string(command) + " needs uniformly sampled input");
  return s;
}

RealSeq arithmetic_grid(double from, double to, double step) {
  const double span = (to - from) / step;
  require(span < 1e7, "grid has too many points");
  const auto count = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
  RealSeq grid(count);
  for (std::size_t k = 0; k < count; ++k) grid[k] = from + static_cast<double>(k) * step;
  return grid;
}

void validate_lomb_grid(const Options& o) {
  require(std::isfinite(o.fmin) && o.fmin >= 0.0, "fmin must be nonnegative");
  require(std::isfinite(o.fmax) && o.fmax > o.fmin, "fmax must exceed fmin");
  require(std::isfinite(o.df) && o.df > 0.0, "df must be positive");
}

LombPeriodogram periodogram(const Options& o, const Signal& s) {
  const RealSeq freqs = arithmetic_grid(o.fmin, o.fmax, o.df);
  const LombOptions options{o.m_indep};
  return o.naive ? lomb_scargle(s, freqs, options) : lomb_scargle_fast(s, freqs, options);
}

std::string run(CLI::App& app, const Options& o) {
  const Format fmt = o.format == "json" ? Format::json : Format::csv;
  const auto signal_out = [&](const Signal& s) {
    return spectral_kit::emit_table(spectral_kit::signal_table(s), fmt);
  };
  const auto* cmd = app.get_subcommands().front();
  const std::string name = cmd->get_name();

  if (name == "gen") {
    if (o.list) {
      std::string out;
      for (const auto& info : example_catalog()) {
        out += std::string(info.id) + (info.stochastic ? " (needs --seed)" : "") + ": " +
               std::string(info.description) + "\n";
      }
      return out;
    }
    require(!o.gen.empty(), "gen needs a generator id (see gen --list)");
    return signal_out(generate(o));
  }
  if (name == "fft") {
    const Signal s = load_uniform(o, "fft");
    require(!(o.center && o.one_sided), "--center and --one-sided exclude each other");
    if (o.one_sided) {
      // analytic-signal spectrum: bins 0 .. N/2 carry the full amplitudes
      const ComplexSeq a = analytic_spectrum(s.real());
      const RealSeq f = frequency_grid(s.size(), s.ts(), false);
      Table t{"spectrum", {"f", "re", "im", "abs"}, {{}, {}, {}, {}},
              {{"n_samples", static_cast<double>(s.size())}, {"ts", s.ts()}, {"centered", 0.0}}};
      for (std::size_t m = 0; m <= s.size() / 2; ++m) {
        t.columns[0].push_back(f[m]);
        t.columns[1].push_back(a[m].real());
        t.columns[2].push_back(a[m].imag());
        t.columns[3].push_back(std::abs(a[m]));
      }
      return spectral_kit::emit_table(t, fmt);
    }
    const Spectrum sp = spec_fft(s, o.center);
    Table t{"spectrum", {"f", "re", "im", "abs"}, {sp.frequencies, {}, {}, {}},
            {{"n_samples", static_cast<double>(sp.n_samples)}, {"ts", sp.ts},
             {"centered", sp.centered ? 1.0 : 0.0}}};
    for (const Complex& c : sp.amplitudes) {
      t.columns[1].push_back(c.real());
      t.columns[2].push_back(c.imag());
      t.columns[3].push_back(std::abs(c));
    }
    return spectral_kit::emit_table(t, fmt);
  }
  if (name == "envelope") return signal_out(envelope(load_uniform(o, "envelope")));
  if (name == "hilbert") return signal_out(hilbert(load_uniform(o, "hilbert")));
  if (name == "derivative") {
    return signal_out(spectral_derivative(load_uniform(o, "derivative")));
  }
  if (name == "filter") {
    require(std::isfinite(o.fc) && o.fc >= 0.0, "fc must be nonnegative");
    require(std::isfinite(o.bw) && o.bw > 0.0, "bw must be positive");
    require(o.n >= 1, "n must be at least 1");
    return signal_out(filter_fft(load_uniform(o, "filter"), FilterSpec{o.fc, o.bw, o.n}));
  }
  if (name == "mavg") {
    require(o.length >= 1, "kernel length must be at least 1");
    return signal_out(moving_average(load_uniform(o, "mavg"), Kernel::boxcar(o.length),
                                     o.phase_correct));
  }
  if (name == "acf-denoise") return signal_out(acf_denoise(load_uniform(o, "acf-denoise")));
  if (name == "waterfall") {
    require(std::isfinite(o.wd) && o.wd > 0.0, "wd must be positive");
    require(o.nf >= 1, "nf must be at least 1");
    const Signal s = load_uniform(o, "waterfall");
    WaterfallDiagram wf = waterfall(s, WaterfallOptions{o.nf, o.wd, o.threads});
    if (o.axis == "period") wf = to_period_axis(wf, o.periods);
    return spectral_kit::emit_waterfall(wf, fmt);
  }
  if (name == "lomb") {
    validate_lomb_grid(o);
    const Signal s = load_signal(o);
    const LombPeriodogram pg = periodogram(o, s);
    Table t{"periodogram", {"f", "A", "phi", "P", "p"},
            {pg.frequencies, pg.amplitude, pg.phase, pg.power, pg.fap},
            {{"n_samples", static_cast<double>(pg.n_samples)},
             {"m_indep", static_cast<double>(pg.m_indep)}, {"sigma", pg.sigma},
             {"mean", pg.mean}}};
    return spectral_kit::emit_table(t, fmt);
  }
  if (name == "lomb-filter") {
    validate_lomb_grid(o);
    require(std::isfinite(o.threshold), "threshold must be finite");
    const Signal s = load_signal(o);
    const LombPeriodogram pg = periodogram(o, s);
    if (o.peaks) {
      const PeakSet set = select_peaks(pg, o.threshold);
      Table t{"peaks", {"f", "A", "phi", "p"}, {{}, {}, {}, {}}, {{"mean", pg.mean}}};
      for (const Peak& p : set.peaks) {
        t.columns[0].push_back(p.frequency);
        t.columns[1].push_back(p.amplitude);
        t.columns[2].push_back(p.phase);
        t.columns[3].push_back(p.fap);
      }
      return spectral_kit::emit_table(t, fmt);
    }
    const double from = o.new_from.value_or(s.positions().front());
    const double to = o.new_to.value_or(s.positions().back());
    require(std::isfinite(from) && std::isfinite(to) && to > from,
            "new grid needs new-to > new-from");
    const double step = o.new_step.value_or((to - from) / 1000.0);
    require(std::isfinite(step) && step > 0.0, "new-step must be positive");
    const RealSeq grid = arithmetic_grid(from, to, step);
    return signal_out(filter_lomb(pg, grid, o.threshold,
                                  o.phase == "none" ? PhaseMode::none : PhaseMode::lin));
  }
  if (name == "qdt") {
    require(std::isfinite(o.f0) && o.f0 >= 0.0, "f0 must be nonnegative");
    const QdtResult r = qdt_demodulate(load_uniform(o, "qdt"), 2.0 * std::numbers::pi * o.f0);
    Table t{"qdt", {"f0", "A", "phi"}, {{o.f0}, {r.amplitude}, {r.phase}}, {}};
    return spectral_kit::emit_table(t, fmt);
  }
  throw UsageError("unknown subcommand " + name);
}

std::string one_line(std::string text) {
  for (char& c : text) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  while (!text.empty() && text.back() == ' ') text.pop_back();
  return text;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"spectral analysis of one-dimensional signals", "spectral-kit"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "emit a built-in example signal (x,y)");
  gen->add_option("id,--gen,-g", o.gen, "generator id");
  gen->add_option("--seed", o.seed, "seed of a stochastic generator");
  gen->add_option("--sigma", o.sigma, "noise standard deviation");
  gen->add_option("--ts", o.ts, "sampling interval");
  gen->add_flag("--list", o.list, "list the available generators");
  add_io(gen, o, false);

  auto* fft = app.add_subcommand("fft", "normalized DFT spectrum (f,re,im,abs)");
  add_io(fft, o);
  fft->add_flag("--center", o.center, "center the spectrum on f = 0");
  fft->add_flag("--one-sided", o.one_sided, "one-sided spectrum of the analytic signal, f in [0, fs/2]");

  add_io(app.add_subcommand("envelope", "envelope |analytic signal| (x,y)"), o);
  add_io(app.add_subcommand("hilbert", "Hilbert transform (x,y)"), o);
  add_io(app.add_subcommand("derivative", "spectral derivative (x,y)"), o);

  auto* filter = app.add_subcommand("filter", "polynomial band-pass in the spectral domain (x,y)");
  add_io(filter, o);
  filter->add_option("--fc", o.fc, "band center frequency")->required();
  filter->add_option("--bw", o.bw, "half-width of the flat pass band")->required();
  filter->add_option("--n", o.n, "steepness degree")->capture_default_str();

  auto* mavg = app.add_subcommand("mavg", "moving average by spectral convolution (x,y)");
  add_io(mavg, o);
  mavg->add_option("--length", o.length, "boxcar kernel length")->required();
  mavg->add_flag("--phase-correct", o.phase_correct, "undo the kernel's group delay");

  add_io(app.add_subcommand("acf-denoise", "autocorrelation-based noise rejection (x,y)"), o);

  auto* wf = app.add_subcommand("waterfall", "time-frequency amplitude matrix");
  add_io(wf, o);
  wf->add_option("--wd", o.wd, "bandwidth cap in frequency steps")->capture_default_str();
  wf->add_option("--nf", o.nf, "band-pass steepness degree")->capture_default_str();
  wf->add_option("--axis", o.axis, "row axis")
      ->check(CLI::IsMember({"frequency", "period"}))
      ->capture_default_str();
  wf->add_option("--periods", o.periods, "period grid size (default 4 x rows)");
  wf->add_option("--threads", o.threads, "worker threads (default: all cores)");

  const auto add_lomb_grid = [&](CLI::App* cmd) {
    cmd->add_option("--fmin", o.fmin, "lowest frequency")->required();
    cmd->add_option("--fmax", o.fmax, "highest frequency")->required();
    cmd->add_option("--df", o.df, "frequency step")->required();
    cmd->add_option("--m-indep", o.m_indep, "independent frequencies M (default N/2)");
    cmd->add_flag("--naive", o.naive, "use the two-pass reference evaluation");
  };
  auto* lomb = app.add_subcommand("lomb", "Lomb-Scargle periodogram (f,A,phi,P,p)");
  add_io(lomb, o);
  add_lomb_grid(lomb);

  auto* lf = app.add_subcommand("lomb-filter", "reconstruct from significant periodogram peaks (x,y)");
  add_io(lf, o);
  add_lomb_grid(lf);
  lf->add_option("--threshold", o.threshold, "keep peaks with p <= 10^-threshold")
      ->capture_default_str();
  lf->add_option("--phase", o.phase, "phase model")
      ->check(CLI::IsMember({"lin", "none"}))
      ->capture_default_str();
  lf->add_option("--new-from", o.new_from, "first reconstruction position");
  lf->add_option("--new-to", o.new_to, "last reconstruction position");
  lf->add_option("--new-step", o.new_step, "reconstruction step (default span / 1000)");
  lf->add_flag("--peaks", o.peaks, "emit the selected peaks (f,A,phi,p) instead");

  auto* qdt = app.add_subcommand("qdt", "quadrature demodulation at one frequency (f0,A,phi)");
  add_io(qdt, o);
  qdt->add_option("--f0", o.f0, "analysis frequency")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "spectral-kit: " << one_line(e.what()) << '\n';
    return 2;
  }

  std::string bytes;
  try {
    bytes = run(app, o);
  } catch (const UsageError& e) {
    std::cerr << "spectral-kit: " << one_line(e.what()) << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "spectral-kit: " << one_line(e.what()) << '\n';
    return 1;
  }
  try {
    spectral_kit::write_output(o.output, bytes);
  } catch (const std::exception& e) {
    std::cerr << "spectral-kit: " << one_line(e.what()) << '\n';
    return 1;
  }
  return 0;
}
