// f2eval command line front end: evaluation, region discovery, catalog
// inspection, region rasterization, oracle comparison, and a fixture suite.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include <json.hpp>

#include "f2eval/f2eval.hpp"

namespace {

using f2eval::ComplexScalar;
using f2eval::EvalPoint;
using f2eval::ParameterSet;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 2;
constexpr int kExitPole = 3;
constexpr int kExitNonConvergence = 4;
constexpr int kExitUsage = 64;

constexpr const char* kUsage = R"(f2eval: Appell F2 for real (x, y) and complex parameters, evaluated by
automatic selection among 18 encoded series representations.

usage: f2eval <command> [options]

commands:
  eval      evaluate F2(a, b1, b2; c1, c2; x, y)
  findall   list the representations whose region contains (x, y)
  expose    print the definition of one representation
  roc       raster a representation's region of convergence as PGM
  compare   cross-check every valid representation and oracle at a point
  selftest  run the built-in fixture suite

options:
  -a V  -b1 V  -b2 V  -c1 V  -c2 V
                       parameters, each V a real "1.5" or complex "1.5,-0.3"
  -x REAL  -y REAL     evaluation point
  -s ID                representation id S1..S18 (eval, expose, roc)
  -p INT               requested significant digits, 1..15 (default 6)
  -t INT               truncation order of the partial sums (default 100)
  --format text|json   output format (default text)
  --grid INT           roc raster width and height in pixels (default 200)
  --range LO HI        roc axis range, applied to both axes (default -6 6)
  --eps-sing REAL      singular-curve rejection margin (default 1e-10)
  --batch FILE         eval one row "a b1 b2 c1 c2 x y" per line
  -o FILE              write the PGM raster to FILE instead of stdout
  --svg FILE           also write an SVG rendering with the query point
  --verbose            print per-ring partial sums to stderr
  -h, --help           print this message

exit codes: 0 success; 2 domain error (singular curve, exceptional point,
point outside every region); 3 pole or logarithmic case; 4 non-convergence
or overflow; 64 usage error.
)";

struct CliConfig {
  std::string command;
  std::optional<ComplexScalar> a, b1, b2, c1, c2;
  std::optional<double> x, y;
  int precision = 6;
  int terms = 100;
  std::string format = "text";
  int grid = 200;
  double rangeLo = -6.0;
  double rangeHi = 6.0;
  double epsSingular = 1e-10;
  std::string seriesId;
  std::string outPath;
  std::string svgPath;
  std::string batchPath;
  bool verbose = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double parseReal(const std::string& token, const char* what) {
  char* end = nullptr;
  const double v = std::strtod(token.c_str(), &end);
  if (end == token.c_str() || *end != '\0')
    throw UsageError(std::string(what) + ": expected a number, got \"" + token + "\"");
  return v;
}

int parseInt(const std::string& token, const char* what) {
  char* end = nullptr;
  const long v = std::strtol(token.c_str(), &end, 10);
  if (end == token.c_str() || *end != '\0')
    throw UsageError(std::string(what) + ": expected an integer, got \"" + token + "\"");
  return static_cast<int>(v);
}

// A parameter token is "re" or "re,im".
ComplexScalar parseComplexToken(const std::string& token, const char* what) {
  const auto comma = token.find(',');
  if (comma == std::string::npos) return {parseReal(token, what), 0.0};
  return {parseReal(token.substr(0, comma), what), parseReal(token.substr(comma + 1), what)};
}

CliConfig parseArgs(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  if (args.empty()) throw UsageError("missing command");
  if (args[0] == "-h" || args[0] == "--help") {
    std::fputs(kUsage, stdout);
    std::exit(kExitOk);
  }

  CliConfig cfg;
  cfg.command = args[0];
  static constexpr const char* kCommands[] = {"eval", "findall", "expose",
                                              "roc",  "compare", "selftest"};
  if (std::find(std::begin(kCommands), std::end(kCommands), cfg.command) == std::end(kCommands))
    throw UsageError("unknown command: " + cfg.command);

  for (size_t i = 1; i < args.size(); ++i) {
    const std::string flag = args[i];
    const auto next = [&]() -> const std::string& {
      if (++i >= args.size()) throw UsageError("flag " + flag + " needs a value");
      return args[i];
    };
    if (flag == "-a") cfg.a = parseComplexToken(next(), "-a");
    else if (flag == "-b1") cfg.b1 = parseComplexToken(next(), "-b1");
    else if (flag == "-b2") cfg.b2 = parseComplexToken(next(), "-b2");
    else if (flag == "-c1") cfg.c1 = parseComplexToken(next(), "-c1");
    else if (flag == "-c2") cfg.c2 = parseComplexToken(next(), "-c2");
    else if (flag == "-x") cfg.x = parseReal(next(), "-x");
    else if (flag == "-y") cfg.y = parseReal(next(), "-y");
    else if (flag == "-s") cfg.seriesId = next();
    else if (flag == "-p") cfg.precision = parseInt(next(), "-p");
    else if (flag == "-t") cfg.terms = parseInt(next(), "-t");
    else if (flag == "--format") cfg.format = next();
    else if (flag == "--grid") cfg.grid = parseInt(next(), "--grid");
    else if (flag == "--range") {
      cfg.rangeLo = parseReal(next(), "--range");
      cfg.rangeHi = parseReal(next(), "--range");
    } else if (flag == "--eps-sing") cfg.epsSingular = parseReal(next(), "--eps-sing");
    else if (flag == "--batch") cfg.batchPath = next();
    else if (flag == "-o") cfg.outPath = next();
    else if (flag == "--svg") cfg.svgPath = next();
    else if (flag == "--verbose") cfg.verbose = true;
    else if (flag == "-h" || flag == "--help") {
      std::fputs(kUsage, stdout);
      std::exit(kExitOk);
    } else throw UsageError("unknown option: " + flag);
  }

  if (cfg.format != "text" && cfg.format != "json")
    throw UsageError("--format must be text or json, got \"" + cfg.format + "\"");
  return cfg;
}

ParameterSet requireParams(const CliConfig& cfg) {
  std::string missing;
  const auto need = [&](const std::optional<ComplexScalar>& v, const char* name) {
    if (!v) missing += std::string(missing.empty() ? "" : " ") + name;
  };
  need(cfg.a, "-a");
  need(cfg.b1, "-b1");
  need(cfg.b2, "-b2");
  need(cfg.c1, "-c1");
  need(cfg.c2, "-c2");
  if (!missing.empty()) throw UsageError(cfg.command + " requires parameters: missing " + missing);
  return {*cfg.a, *cfg.b1, *cfg.b2, *cfg.c1, *cfg.c2};
}

EvalPoint requirePoint(const CliConfig& cfg) {
  if (!cfg.x || !cfg.y)
    throw UsageError(cfg.command + " requires the evaluation point: missing " +
                     std::string(!cfg.x ? "-x" : "") + std::string(!cfg.x && !cfg.y ? " " : "") +
                     std::string(!cfg.y ? "-y" : ""));
  return {*cfg.x, *cfg.y};
}

struct ErrorInfo {
  int exitCode;
  const char* kind;
};

ErrorInfo classify(const f2eval::Error& e) {
  if (dynamic_cast<const f2eval::NonConvergenceError*>(&e)) return {kExitNonConvergence, "non-convergence"};
  if (dynamic_cast<const f2eval::OverflowError*>(&e)) return {kExitNonConvergence, "overflow"};
  if (dynamic_cast<const f2eval::PoleError*>(&e)) return {kExitPole, "pole"};
  if (dynamic_cast<const f2eval::LogarithmicCaseError*>(&e)) return {kExitPole, "logarithmic-case"};
  if (dynamic_cast<const f2eval::UnknownIdError*>(&e)) return {kExitUsage, "unknown-id"};
  if (dynamic_cast<const f2eval::SingularCurveError*>(&e)) return {kExitDomain, "singular-curve"};
  if (dynamic_cast<const f2eval::OutOfROCError*>(&e)) return {kExitDomain, "out-of-region"};
  if (dynamic_cast<const f2eval::NoValidSeriesError*>(&e)) return {kExitDomain, "no-valid-series"};
  return {kExitDomain, "domain"};
}

std::string fmtReal(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

// Mathematica-style complex rendering: "0.09334 - 0.06847 I".
std::string valueText(ComplexScalar v, int digits) {
  std::string out = fmtReal(v.real(), digits);
  out += v.imag() < 0.0 ? " - " : " + ";
  out += fmtReal(std::abs(v.imag()), digits);
  out += " I";
  return out;
}

ordered_json reportJson(const f2eval::EvaluationReport& r) {
  ordered_json j;
  j["value"] = {r.value.real(), r.value.imag()};
  j["chosen"] = std::string(r.chosen);
  auto arr = ordered_json::array();
  for (const auto& c : r.candidates)
    arr.push_back({{"id", std::string(c.id)}, {"rate", c.rate}});
  j["candidates"] = std::move(arr);
  j["terms"] = r.termsUsed;
  j["error_estimate"] = r.errorEstimate;
  j["digits"] = r.significantDigits;
  return j;
}

ordered_json errorJson(const f2eval::Error& e) {
  const ErrorInfo info = classify(e);
  return ordered_json{{"error", {{"kind", info.kind}, {"message", e.what()}}}};
}

// Shared error path: machine-readable object on stdout in json mode, a
// message on stderr otherwise; the return value is the process exit code.
int reportError(const CliConfig& cfg, const f2eval::Error& e) {
  if (cfg.format == "json") std::cout << errorJson(e).dump() << "\n";
  else std::cerr << "error: " << e.what() << "\n";
  return classify(e).exitCode;
}

// Per-ring running totals of the chosen representation, weighted by the
// component coefficients, streamed to stderr.
void printRingTrace(std::string_view id, const ParameterSet& params, EvalPoint point, int terms,
                    int digits) {
  std::vector<ComplexScalar> coeffs;
  std::vector<std::vector<ComplexScalar>> partials;
  for (const auto& inst : f2eval::instantiate(id, params, point)) {
    if (inst.coefficient == 0.0) continue;
    coeffs.push_back(inst.coefficient);
    auto& trace = partials.emplace_back();
    f2eval::sumDoubleSeries(inst.series, inst.X, inst.Y, terms,
                            [&](int, ComplexScalar sum) { trace.push_back(sum); });
  }
  size_t rings = 0;
  for (const auto& trace : partials) rings = std::max(rings, trace.size());
  for (size_t k = 0; k < rings; ++k) {
    ComplexScalar total = 0.0;
    for (size_t c = 0; c < partials.size(); ++c)
      total += coeffs[c] * partials[c][std::min(k, partials[c].size() - 1)];
    std::fprintf(stderr, "ring %4zu  %s\n", k, valueText(total, digits).c_str());
  }
}

int evalOne(const CliConfig& cfg, const ParameterSet& params, EvalPoint point) {
  f2eval::EvaluationReport report;
  try {
    report = cfg.seriesId.empty()
                 ? f2eval::evaluate(params, point, cfg.precision, cfg.terms, cfg.epsSingular)
                 : f2eval::evaluateWith(cfg.seriesId, params, point, cfg.precision, cfg.terms);
  } catch (const f2eval::Error& e) {
    return reportError(cfg, e);
  }
  if (cfg.verbose) printRingTrace(report.chosen, params, point, cfg.terms, cfg.precision);
  if (cfg.format == "json") {
    std::cout << reportJson(report).dump() << "\n";
    return kExitOk;
  }
  std::cout << "candidates:\n";
  for (const auto& c : report.candidates)
    std::cout << "  " << c.id << (c.id.size() < 3 ? "   " : "  ") << fmtReal(c.rate, 6) << "\n";
  std::cout << "selected: " << report.chosen << "  (terms " << report.termsUsed
            << ", error estimate " << fmtReal(report.errorEstimate, 3) << ", digits "
            << report.significantDigits << ")\n";
  std::cout << valueText(report.value, cfg.precision) << "\n";
  return kExitOk;
}

int evalBatch(const CliConfig& cfg) {
  std::ifstream in(cfg.batchPath);
  if (!in) throw UsageError("--batch: cannot open " + cfg.batchPath);
  int worst = kExitOk;
  auto rows = ordered_json::array();
  std::string line;
  for (int lineNo = 1; std::getline(in, line); ++lineNo) {
    std::istringstream row(line);
    std::vector<std::string> tokens;
    for (std::string t; row >> t;) tokens.push_back(t);
    if (tokens.empty() || tokens[0][0] == '#') continue;
    if (tokens.size() != 7)
      throw UsageError("--batch: line " + std::to_string(lineNo) +
                       " needs 7 fields \"a b1 b2 c1 c2 x y\", got " +
                       std::to_string(tokens.size()));
    const ParameterSet params{
        parseComplexToken(tokens[0], "batch a"), parseComplexToken(tokens[1], "batch b1"),
        parseComplexToken(tokens[2], "batch b2"), parseComplexToken(tokens[3], "batch c1"),
        parseComplexToken(tokens[4], "batch c2")};
    const EvalPoint point{parseReal(tokens[5], "batch x"), parseReal(tokens[6], "batch y")};
    try {
      const auto report =
          f2eval::evaluate(params, point, cfg.precision, cfg.terms, cfg.epsSingular);
      if (cfg.format == "json") rows.push_back(reportJson(report));
      else
        std::cout << valueText(report.value, cfg.precision) << "  [" << report.chosen << "]\n";
    } catch (const f2eval::Error& e) {
      if (cfg.format == "json") rows.push_back(errorJson(e));
      else std::cout << "error: " << e.what() << "\n";
      if (worst == kExitOk) worst = classify(e).exitCode;
    }
  }
  if (cfg.format == "json") std::cout << rows.dump() << "\n";
  return worst;
}

int cmdEval(const CliConfig& cfg) {
  if (!cfg.batchPath.empty()) return evalBatch(cfg);
  return evalOne(cfg, requireParams(cfg), requirePoint(cfg));
}

int cmdFindall(const CliConfig& cfg) {
  const EvalPoint point = requirePoint(cfg);
  std::vector<std::string_view> ids;
  try {
    ids = f2eval::findAll(point, cfg.epsSingular);
  } catch (const f2eval::Error& e) {
    return reportError(cfg, e);
  }
  if (cfg.format == "json") {
    ordered_json j;
    j["point"] = {point.x, point.y};
    auto arr = ordered_json::array();
    for (const auto id : ids)
      arr.push_back({{"id", std::string(id)},
                     {"number", f2eval::representation(id).packageNumber}});
    j["valid"] = std::move(arr);
    std::cout << j.dump() << "\n";
    return kExitOk;
  }
  for (const auto id : ids)
    std::cout << id << (id.size() < 3 ? "   #" : "  #")
              << f2eval::representation(id).packageNumber << "\n";
  return kExitOk;
}

int cmdExpose(const CliConfig& cfg) {
  if (cfg.seriesId.empty()) throw UsageError("expose requires a representation id via -s");
  std::string text;
  try {
    text = f2eval::expose(cfg.seriesId);
  } catch (const f2eval::Error& e) {
    return reportError(cfg, e);
  }
  if (cfg.format == "json") {
    ordered_json j;
    j["id"] = cfg.seriesId;
    j["number"] = f2eval::representation(cfg.seriesId).packageNumber;
    j["text"] = text;
    std::cout << j.dump() << "\n";
  } else std::cout << text;
  return kExitOk;
}

// Distance from (x, y) to the nearest singular curve, perpendicular for the
// diagonal one.
double curveDistance(double x, double y) {
  const double diag = std::abs(x + y - 1.0) / std::sqrt(2.0);
  return std::min({std::abs(x), std::abs(y), std::abs(x - 1.0), std::abs(y - 1.0), diag});
}

void writeSvg(const CliConfig& cfg, const std::vector<uint8_t>& raster) {
  std::ofstream out(cfg.svgPath);
  if (!out) throw UsageError("--svg: cannot open " + cfg.svgPath);
  const int n = cfg.grid;
  const double w = 640.0;
  const double lo = cfg.rangeLo, hi = cfg.rangeHi;
  const double cell = w / n;
  const auto sx = [&](double x) { return (x - lo) / (hi - lo) * w; };
  const auto sy = [&](double y) { return (hi - y) / (hi - lo) * w; };
  char buf[192];
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" "
         "viewBox=\"0 0 640 640\">\n";
  out << "<rect width=\"640\" height=\"640\" fill=\"#ffffff\"/>\n";
  out << "<g fill=\"#86a8c8\">\n";
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n;) {
      if (raster[static_cast<size_t>(r) * n + c] != 1) {
        ++c;
        continue;
      }
      int c2 = c;
      while (c2 < n && raster[static_cast<size_t>(r) * n + c2] == 1) ++c2;
      std::snprintf(buf, sizeof buf,
                    "<rect x=\"%.2f\" y=\"%.2f\" width=\"%.2f\" height=\"%.2f\"/>\n", c * cell,
                    r * cell, (c2 - c) * cell, cell);
      out << buf;
      c = c2;
    }
  }
  out << "</g>\n<g stroke=\"#777777\" stroke-width=\"1\">\n";
  const auto vline = [&](double x) {
    if (x <= lo || x >= hi) return;
    std::snprintf(buf, sizeof buf, "<line x1=\"%.2f\" y1=\"0\" x2=\"%.2f\" y2=\"640\"/>\n", sx(x),
                  sx(x));
    out << buf;
  };
  const auto hline = [&](double y) {
    if (y <= lo || y >= hi) return;
    std::snprintf(buf, sizeof buf, "<line x1=\"0\" y1=\"%.2f\" x2=\"640\" y2=\"%.2f\"/>\n", sy(y),
                  sy(y));
    out << buf;
  };
  vline(0.0);
  vline(1.0);
  hline(0.0);
  hline(1.0);
  const double dxm = std::max(lo, 1.0 - hi), dxM = std::min(hi, 1.0 - lo);
  if (dxm < dxM) {
    std::snprintf(buf, sizeof buf, "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\"/>\n",
                  sx(dxm), sy(1.0 - dxm), sx(dxM), sy(1.0 - dxM));
    out << buf;
  }
  out << "</g>\n";
  if (cfg.x && cfg.y) {
    std::snprintf(buf, sizeof buf, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"5\" fill=\"#c03030\"/>\n",
                  sx(*cfg.x), sy(*cfg.y));
    out << buf;
  }
  out << "</svg>\n";
}

int cmdRoc(const CliConfig& cfg) {
  if (cfg.seriesId.empty()) throw UsageError("roc requires a representation id via -s");
  if (cfg.grid < 1) throw UsageError("--grid must be at least 1");
  if (!(cfg.rangeLo < cfg.rangeHi)) throw UsageError("--range needs LO < HI");
  const f2eval::SeriesRepresentation* rep = nullptr;
  try {
    rep = &f2eval::representation(cfg.seriesId);
  } catch (const f2eval::Error& e) {
    return reportError(cfg, e);
  }

  const int n = cfg.grid;
  const double pitch = (cfg.rangeHi - cfg.rangeLo) / n;
  std::vector<uint8_t> raster(static_cast<size_t>(n) * n);
  const auto fillRows = [&](int rowBegin, int rowEnd) {
    for (int r = rowBegin; r < rowEnd; ++r) {
      const double y = cfg.rangeHi - (r + 0.5) * pitch;
      for (int c = 0; c < n; ++c) {
        const double x = cfg.rangeLo + (c + 0.5) * pitch;
        uint8_t v = curveDistance(x, y) <= 0.5 * pitch ? 2
                    : f2eval::rocContains(*rep, {x, y}) ? 1
                                                        : 0;
        raster[static_cast<size_t>(r) * n + c] = v;
      }
    }
  };
  const int nThreads =
      std::max(1, std::min<int>(n, static_cast<int>(std::thread::hardware_concurrency())));
  std::vector<std::thread> pool;
  for (int t = 0; t < nThreads; ++t)
    pool.emplace_back(fillRows, t * n / nThreads, (t + 1) * n / nThreads);
  for (auto& th : pool) th.join();

  std::ostringstream pgm;
  pgm << "P2\n" << n << " " << n << "\n2\n";
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c)
      pgm << static_cast<int>(raster[static_cast<size_t>(r) * n + c]) << (c + 1 < n ? " " : "");
    pgm << "\n";
  }
  if (cfg.outPath.empty()) std::cout << pgm.str();
  else {
    std::ofstream out(cfg.outPath);
    if (!out) throw UsageError("-o: cannot open " + cfg.outPath);
    out << pgm.str();
  }
  if (!cfg.svgPath.empty()) writeSvg(cfg, raster);
  return kExitOk;
}

int cmdCompare(const CliConfig& cfg) {
  const ParameterSet params = requireParams(cfg);
  const EvalPoint point = requirePoint(cfg);
  struct Source {
    std::string label;
    ComplexScalar value;
  };
  std::vector<Source> sources;
  try {
    for (const auto id : f2eval::findAll(point, cfg.epsSingular)) {
      try {
        sources.push_back({std::string(id),
                           f2eval::evaluateWith(id, params, point, cfg.precision, cfg.terms).value});
      } catch (const f2eval::Error&) {
      }
    }
    const auto oracle = [&](const char* label, auto&& run) {
      try {
        sources.push_back({label, run().value});
      } catch (const f2eval::Error&) {
      }
    };
    oracle("brute", [&] { return f2eval::bruteForceF2(params, point, cfg.terms); });
    oracle("single", [&] { return f2eval::singleSumF2(params, point, cfg.terms); });
    oracle("euler", [&] { return f2eval::eulerQuadF2(params, point); });
    if (sources.empty())
      throw f2eval::NoValidSeriesError(
          "compare: no representation region and no oracle domain contains the point");
  } catch (const f2eval::Error& e) {
    return reportError(cfg, e);
  }

  const size_t n = sources.size();
  std::vector<std::vector<double>> dev(n, std::vector<double>(n, 0.0));
  double maxDev = 0.0;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      const double scale = std::max(std::abs(sources[i].value), std::abs(sources[j].value));
      dev[i][j] = scale == 0.0 ? 0.0 : std::abs(sources[i].value - sources[j].value) / scale;
      maxDev = std::max(maxDev, dev[i][j]);
    }
  std::optional<std::pair<double, double>> residuals;
  try {
    residuals = f2eval::pdeResidual(params, point);
  } catch (const f2eval::Error&) {
  }

  if (cfg.format == "json") {
    ordered_json j;
    auto arr = ordered_json::array();
    for (const auto& s : sources)
      arr.push_back({{"id", s.label}, {"value", {s.value.real(), s.value.imag()}}});
    j["sources"] = std::move(arr);
    j["deviations"] = dev;
    j["max_deviation"] = maxDev;
    if (residuals) j["pde_residuals"] = {residuals->first, residuals->second};
    std::cout << j.dump() << "\n";
    return kExitOk;
  }
  for (const auto& s : sources)
    std::printf("%-8s %s\n", s.label.c_str(), valueText(s.value, 15).c_str());
  std::printf("\npairwise relative deviations:\n%-8s", "");
  for (const auto& s : sources) std::printf(" %9s", s.label.c_str());
  std::printf("\n");
  for (size_t i = 0; i < n; ++i) {
    std::printf("%-8s", sources[i].label.c_str());
    for (size_t j = 0; j < n; ++j) std::printf(" %9.1e", dev[i][j]);
    std::printf("\n");
  }
  if (residuals)
    std::printf("\npde residuals: %.3e %.3e\n", residuals->first, residuals->second);
  std::printf("\nmax pairwise deviation: %.3e\n", maxDev);
  return kExitOk;
}

int cmdSelftest(const CliConfig& cfg) {
  struct Fixture {
    const char* name;
    ParameterSet params;
    EvalPoint point;
    double target;
    double relTol;
    double imagTol;
  };
  const ParameterSet demoParams{2.2345, 3.363, 0.242, 8.3452, 0.657};
  const EvalPoint demoPoint{-2.311, 5.322};
  const ComplexScalar demoValue{0.09333639793, -0.06847416686};
  static const Fixture kFixtures[] = {
      {"fixture 1",
       {-4.49158729455734, 4.69491717746224, -2.67898515537678, 2.54939072003598,
        1.89372308769086},
       {-0.657865707164980, 1.11972469394233},
       183.83, 5e-3, 1e-5},
      {"fixture 2",
       {-5.87056003391116, 4.33993527730256, 1.44218908732163, 3.12652020729955,
        1.52984418542146},
       {-6.55177221618387, -6.79935054310963},
       1.171e7, 5e-3, 1e-3},
      {"fixture 3",
       {3.35171139159466, -0.509725596574174, -0.913836915342344, -3.32588271257136,
        0.168816510623319},
       {-2.29531801533183, -6.06415712186627},
       -61.38, 5e-3, 1e-3},
      {"fixture 4",
       {-5.01240784115629, -4.94200818581766, 6.99477562102917, 6.65313744284692,
        -1.96099117581162},
       {2.92126097205082, -1.31245113310376},
       6.00e6, 5e-3, 1e-3},
      {"fixture 5",
       {-3.36021432698409, 6.63749440272489, -6.58339249087694, -2.02579013838810,
        6.18081281041145},
       {-4.71272838790961, -6.11479355971970},
       -3.20e6, 5e-3, 1e-3},
  };

  struct Check {
    std::string name;
    bool pass = false;
    double deviation = -1.0;
    std::string detail;
  };
  std::vector<Check> checks;

  {
    Check c{"demo value"};
    try {
      const auto report = f2eval::evaluate(demoParams, demoPoint, 10, 100);
      c.deviation = std::abs(report.value - demoValue) / std::abs(demoValue);
      c.pass = c.deviation <= 1e-8;
    } catch (const f2eval::Error& e) {
      c.detail = e.what();
    }
    checks.push_back(c);
  }
  {
    Check c{"demo selection"};
    try {
      const auto ids = f2eval::findAll(demoPoint);
      const double rate7 = f2eval::convergenceRate("S7", demoParams, demoPoint);
      const double rate15 = f2eval::convergenceRate("S15", demoParams, demoPoint);
      c.pass = ids == std::vector<std::string_view>{"S7", "S15"} && rate15 >= 0.89 &&
               rate15 <= 0.99 && rate7 >= 1.04 && rate7 <= 1.14;
    } catch (const f2eval::Error& e) {
      c.detail = e.what();
    }
    checks.push_back(c);
  }
  for (const auto& f : kFixtures) {
    Check c{f.name};
    try {
      const auto report = f2eval::evaluate(f.params, f.point, 15, 300);
      c.deviation = std::abs(report.value.real() - f.target) / std::abs(f.target);
      c.pass = c.deviation <= f.relTol &&
               std::abs(report.value.imag()) <= f.imagTol * std::abs(report.value.real());
    } catch (const f2eval::Error& e) {
      c.detail = e.what();
    }
    checks.push_back(c);
  }

  int failed = 0;
  for (const auto& c : checks)
    if (!c.pass) ++failed;
  if (cfg.format == "json") {
    ordered_json j;
    auto arr = ordered_json::array();
    for (const auto& c : checks) {
      ordered_json item{{"name", c.name}, {"pass", c.pass}};
      if (c.deviation >= 0.0) item["deviation"] = c.deviation;
      if (!c.detail.empty()) item["error"] = c.detail;
      arr.push_back(std::move(item));
    }
    j["checks"] = std::move(arr);
    j["failed"] = failed;
    std::cout << j.dump() << "\n";
  } else {
    for (const auto& c : checks) {
      std::printf("%-16s %s", c.name.c_str(), c.pass ? "PASS" : "FAIL");
      if (c.deviation >= 0.0) std::printf("  (rel dev %.2e)", c.deviation);
      if (!c.detail.empty()) std::printf("  (%s)", c.detail.c_str());
      std::printf("\n");
    }
    std::printf("%zu of %zu checks passed\n", checks.size() - failed, checks.size());
  }
  return failed == 0 ? kExitOk : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CliConfig cfg;
  try {
    cfg = parseArgs(argc, argv);
    if (cfg.command == "eval") return cmdEval(cfg);
    if (cfg.command == "findall") return cmdFindall(cfg);
    if (cfg.command == "expose") return cmdExpose(cfg);
    if (cfg.command == "roc") return cmdRoc(cfg);
    if (cfg.command == "compare") return cmdCompare(cfg);
    return cmdSelftest(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << kUsage;
    return kExitUsage;
  } catch (const f2eval::Error& e) {
    return reportError(cfg, e);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
