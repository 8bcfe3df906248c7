// asysig: evaluate, enumerate, check and construct asynchronous systems over
// exact rational time. See --help for the command surface.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "asysig/jsonio.hpp"
#include "asysig/plot.hpp"

namespace {

using namespace asysig;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::syntax_error, "cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

system_model load_system(const std::string& ref) {
  const std::size_t hash = ref.rfind('#');
  if (hash == std::string::npos)
    fail(errc::syntax_error, "--system wants FILE#NAME, got '" + ref + "'");
  return parse_system(read_file(ref.substr(0, hash)), ref.substr(hash + 1));
}

std::vector<rat> parse_grid_csv(const std::string& csv) {
  std::vector<rat> pts;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!detail::trim(item).empty()) pts.push_back(parse_rat(detail::trim(item)));
  return pts;
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) fail(errc::syntax_error, "cannot write file '" + path + "'");
  out << text;
}

/// Corpus from --input/--inputs, falling back to a tabulated system's own keys.
std::vector<signal> gather_corpus(const system_model& f, const std::string& input,
                                  const std::string& inputs_path) {
  std::vector<signal> corpus;
  if (!input.empty()) corpus.push_back(parse_signal(input));
  if (!inputs_path.empty())
    for (signal& s : parse_corpus(read_file(inputs_path))) corpus.push_back(std::move(s));
  if (corpus.empty())
    if (const auto* t = f.as<tabulated>())
      for (const auto& e : t->map) corpus.push_back(e.first);
  if (corpus.empty()) fail(errc::syntax_error, "no inputs given (--input or --inputs)");
  return corpus;
}

/// Default grid: every switch time of the corpus (and, for tabulated systems,
/// of the listed states), plus the corpus switches shifted by each model
/// delay, plus 0.
time_grid derive_grid(const system_model& f, const std::vector<signal>& corpus) {
  std::vector<rat> pts{rat(0)};
  auto add_signal = [&](const signal& s) {
    for (const auto& sw : s.switches()) {
      pts.push_back(sw.first);
      for (const rat& d : f.delay_parameters()) pts.push_back(sw.first + d);
    }
  };
  for (const signal& u : corpus) add_signal(u);
  if (const auto* t = f.as<tabulated>())
    for (const auto& e : t->map)
      for (const signal& x : e.second) add_signal(x);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return time_grid(pts);
}

int exit_code_for(const error& e) {
  switch (e.code()) {
    case errc::syntax_error:
    case errc::unknown_kind:
    case errc::bad_parameter:
    case errc::non_increasing_times:
    case errc::no_op_switch:
    case errc::width_mismatch:
    case errc::bad_window:
    case errc::bad_range:
    case errc::missing_bounds: return 2;
    default: return 1;
  }
}

struct common_opts {
  std::string system_ref;
  std::string input;
  std::string inputs_path;
  std::string grid_csv;
  std::string out_path;
  std::string format;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic algebra and non-anticipation checks for binary signals "
               "and asynchronous systems"};
  app.require_subcommand(1);

  common_opts opt;
  std::string props_csv = "all";
  std::string dmax_text, dd_text, range_text, mu_seq_text, seed_text;
  std::string delta_text = "1";
  std::string plot_kind = "ascii";
  std::string spec_path;
  int columns = 64;

  auto add_common = [&](CLI::App* cmd, bool want_grid = true) {
    cmd->add_option("--system", opt.system_ref, "system reference FILE#NAME")->required();
    cmd->add_option("--input", opt.input, "one signal, in the signal text format");
    cmd->add_option("--inputs", opt.inputs_path, "file with one signal per line");
    if (want_grid)
      cmd->add_option("--grid", opt.grid_csv,
                      "comma-separated rational switch instants for state enumeration "
                      "(default: derived from the corpus and the model delays)");
    cmd->add_option("--out", opt.out_path, "write output to a file instead of stdout");
    cmd->add_option("--format", opt.format,
                    "output format: json or text (default: text for eval/enumerate, "
                    "json elsewhere)")
        ->check(CLI::IsMember({"json", "text"}));
  };

  CLI::App* eval = app.add_subcommand("eval", "evaluate a deterministic system on inputs");
  add_common(eval, false);

  CLI::App* enumerate = app.add_subcommand("enumerate", "enumerate the state set on a grid");
  add_common(enumerate);

  CLI::App* check = app.add_subcommand("check", "run non-anticipation checks");
  add_common(check);
  check->add_option("--props", props_csv,
                    "comma-separated properties (def31,def51,i..ix,star1..star3) or 'all' "
                    "(= def31,def51,i..ix)");
  check->add_option("--dmax", dmax_text, "cap the derived d candidates at this rational");
  check->add_option("--dd-candidates", dd_text,
                    "explicit (d,d') candidates as 'd:dp,d:dp,...' (overrides the defaults)");

  CLI::App* transfer = app.add_subcommand("transfer", "compose a transfer and verify it");
  add_common(transfer);
  transfer->add_option("--spec", spec_path, "transfer spec JSON file")->required();

  CLI::App* fm_verify = app.add_subcommand("fm-verify", "verify a fundamental-mode spec");
  add_common(fm_verify);
  fm_verify->add_option("--spec", spec_path, "fundamental mode spec JSON file")->required();

  CLI::App* fm_synth =
      app.add_subcommand("fm-synth", "synthesize a fundamental mode (bounded delay systems)");
  add_common(fm_synth);
  fm_synth->add_option("--mu-seq", mu_seq_text, "comma-separated target words")->required();
  fm_synth->add_option("--delta", delta_text, "minimum spacing between settle times");
  fm_synth->add_option("--seed", seed_text, "seed input (default: constant 0)");

  CLI::App* plot = app.add_subcommand("plot", "render signals as waveforms");
  plot->add_option("--input", opt.input, "one signal, in the signal text format");
  plot->add_option("--inputs", opt.inputs_path, "file with one signal per line");
  plot->add_option("--range", range_text, "time range 'a:b' (rationals)")->required();
  plot->add_option("--columns", columns, "plot width in characters (>= 8)");
  plot->add_option("--plot", plot_kind, "ascii or svg")->check(CLI::IsMember({"ascii", "svg"}));
  plot->add_option("--out", opt.out_path, "write output to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (plot->parsed()) {
      std::vector<signal> sigs;
      if (!opt.input.empty()) sigs.push_back(parse_signal(opt.input));
      if (!opt.inputs_path.empty())
        for (signal& s : parse_corpus(read_file(opt.inputs_path))) sigs.push_back(std::move(s));
      if (sigs.empty()) fail(errc::syntax_error, "no signals to plot");
      const std::size_t colon = range_text.find(':');
      if (colon == std::string::npos) fail(errc::bad_range, "--range wants 'a:b'");
      const rat lo = parse_rat(range_text.substr(0, colon));
      const rat hi = parse_rat(range_text.substr(colon + 1));
      write_out(opt.out_path, plot_kind == "svg" ? plot_svg(sigs, lo, hi, columns)
                                                 : plot_ascii(sigs, lo, hi, columns));
      return 0;
    }

    const system_model f = load_system(opt.system_ref);
    const bool text_default = eval->parsed() || enumerate->parsed();
    if (opt.format.empty()) opt.format = text_default ? "text" : "json";

    auto grid_or = [&](const std::vector<signal>& for_corpus,
                       const std::vector<rat>& extra = {}) {
      if (!opt.grid_csv.empty()) return time_grid(parse_grid_csv(opt.grid_csv));
      std::vector<rat> pts = derive_grid(f, for_corpus).points;
      return time_grid(merge_times(std::move(pts), extra));
    };

    if (eval->parsed()) {
      const std::vector<signal> corpus = gather_corpus(f, opt.input, opt.inputs_path);
      std::string text;
      json arr = json::array();
      for (const signal& u : corpus) {
        const signal x = eval_deterministic(f, u);
        text += print_signal(x) + "\n";
        arr.push_back(print_signal(x));
      }
      write_out(opt.out_path, opt.format == "json" ? arr.dump(2) + "\n" : text);
      return 0;
    }

    if (enumerate->parsed()) {
      const std::vector<signal> corpus = gather_corpus(f, opt.input, opt.inputs_path);
      const time_grid grid = grid_or(corpus);
      std::string text;
      json arr = json::array();
      for (const signal& u : corpus) {
        json entry;
        entry["input"] = print_signal(u);
        entry["states"] = json::array();
        text += "f(" + print_signal(u) + "):\n";
        for (const signal& x : enumerate_states(f, u, grid)) {
          text += "  " + print_signal(x) + "\n";
          entry["states"].push_back(print_signal(x));
        }
        arr.push_back(entry);
      }
      write_out(opt.out_path, opt.format == "json" ? arr.dump(2) + "\n" : text);
      return 0;
    }

    if (check->parsed()) {
      const std::vector<signal> corpus = gather_corpus(f, opt.input, opt.inputs_path);
      const time_grid grid = grid_or(corpus);
      std::vector<na_property> props;
      if (props_csv == "all") {
        props = {na_property::def31, na_property::def51, na_property::c_i,
                 na_property::c_ii,  na_property::c_iii, na_property::c_iv,
                 na_property::c_v,   na_property::c_vi,  na_property::c_vii,
                 na_property::c_viii, na_property::c_ix};
      } else {
        std::stringstream ss(props_csv);
        std::string item;
        while (std::getline(ss, item, ',')) {
          const auto p = parse_property(detail::trim(item));
          if (!p) fail(errc::syntax_error, "unknown property '" + item + "'");
          props.push_back(*p);
        }
      }

      search_bounds bounds = search_bounds::defaults(f, corpus, grid);
      if (!dmax_text.empty()) {
        const rat dmax = parse_rat(dmax_text);
        std::erase_if(bounds.d_candidates, [&](const rat& d) { return d > dmax; });
        std::erase_if(bounds.dd_candidates,
                      [&](const std::pair<rat, rat>& p) { return p.second > dmax; });
      }
      if (!dd_text.empty()) {
        bounds.dd_candidates.clear();
        std::stringstream ss(dd_text);
        std::string item;
        while (std::getline(ss, item, ',')) {
          const std::size_t colon = item.find(':');
          if (colon == std::string::npos)
            fail(errc::syntax_error, "--dd-candidates wants 'd:dp,...'");
          bounds.dd_candidates.emplace_back(parse_rat(detail::trim(item.substr(0, colon))),
                                            parse_rat(detail::trim(item.substr(colon + 1))));
        }
      }

      na_checker chk(f, corpus, grid, bounds);
      std::map<na_property, na_verdict> verdicts;
      bool all_pass = true;
      json arr = json::array();
      std::string text;
      for (na_property p : props) {
        const na_verdict v = chk.check(p);
        all_pass &= v.pass;
        verdicts.emplace(p, v);
        arr.push_back(to_json(v));
        text += verdict_text(v) + "\n";
      }
      const auto flags = implication_audit(verdicts);
      json audit;
      audit["property"] = "audit";
      audit["outcome"] = flags.empty() ? "PassCorpusRelative" : "Fail";
      if (!flags.empty()) {
        audit["inconsistencies"] = json::array();
        for (const auto& e : flags)
          audit["inconsistencies"].push_back(std::string(property_tag(e.stronger)) +
                                             " passes but " + property_tag(e.weaker) + " fails");
      }
      arr.push_back(audit);
      text += std::string("audit: ") + (flags.empty() ? "PassCorpusRelative" : "Fail") + "\n";
      write_out(opt.out_path, opt.format == "text" ? text : arr.dump(2) + "\n");
      return all_pass && flags.empty() ? 0 : 1;
    }

    if (transfer->parsed()) {
      const transfer_spec spec = transfer_spec_from_json(json::parse(read_file(spec_path)));
      const time_grid grid = grid_or({spec.u0, spec.u1}, {spec.t1, spec.t2});
      const transfer_report rep = compose_transfer(f, spec, grid);
      if (opt.format == "text") {
        std::string text = "uTilde: " + print_signal(rep.u_tilde) + "\nd: " + rep.d.str() + "\n";
        text += std::string("tna5: ") + (rep.tna5 ? "ok" : "BROKEN") + ", tna11: " +
                (rep.tna11 ? "ok" : "BROKEN") + "\n";
        write_out(opt.out_path, text);
      } else {
        write_out(opt.out_path, to_json(rep).dump(2) + "\n");
      }
      return 0;
    }

    if (fm_verify->parsed()) {
      const fm_spec spec = fm_spec_from_json(json::parse(read_file(spec_path)));
      std::vector<signal> sigs = spec.inputs;
      sigs.push_back(spec.u);
      const time_grid grid = grid_or(sigs, spec.times);
      const fm_report rep = verify_fundamental_mode(f, spec, grid);
      json j = to_json(rep);
      j["trace"] = trace_to_json(next_state_trace(spec));
      std::string text;
      for (const auto& c : rep.clauses)
        text += c.name + ": " + (c.pass ? "pass" : "FAIL " + c.detail) + "\n";
      write_out(opt.out_path, opt.format == "text" ? text : j.dump(2) + "\n");
      return rep.all_pass ? 0 : 1;
    }

    if (fm_synth->parsed()) {
      if (opt.grid_csv.empty())
        fail(errc::syntax_error, "fm-synth needs an explicit --grid");
      const time_grid grid(parse_grid_csv(opt.grid_csv));
      const auto* bd = f.as<bounded_delay_window>();
      if (!bd)
        fail(errc::bad_parameter,
             "fm-synth ships an accessibility oracle for bounded_delay systems only");
      const rat delta = parse_rat(delta_text);
      std::vector<word> mu_seq;
      std::stringstream ss(mu_seq_text);
      std::string item;
      while (std::getline(ss, item, ','))
        mu_seq.push_back(parse_word(detail::trim(item)));
      const signal seed = seed_text.empty() ? signal::constant(word::zeros(f.input_width()))
                                            : parse_signal(seed_text);
      const fm_spec spec = synthesize_fundamental_mode(
          f, seed, make_bounded_delay_oracle(bd->dr, bd->df, delta), mu_seq, delta, grid);
      const fm_report rep = verify_fundamental_mode(f, spec, grid);
      if (opt.format == "text") {
        std::string text = "u: " + print_signal(spec.u) + "\n";
        for (const auto& c : rep.clauses)
          text += c.name + ": " + (c.pass ? "pass" : "FAIL " + c.detail) + "\n";
        for (const auto& [state, label] : next_state_trace(spec))
          text += state.str() + (label.empty() ? "" : " -(" + label + ")-> ");
        text += "\n";
        write_out(opt.out_path, text);
      } else {
        json j;
        j["spec"] = to_json(spec);
        j["verify"] = to_json(rep);
        j["trace"] = trace_to_json(next_state_trace(spec));
        write_out(opt.out_path, j.dump(2) + "\n");
      }
      return rep.all_pass ? 0 : 1;
    }
  } catch (const error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e);
  } catch (const json::exception& e) {
    std::cerr << "JSON error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
