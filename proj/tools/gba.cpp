#include <iostream>

#include <CLI11.hpp>

#include "gba/gba.hpp"

namespace {

struct Options {
  std::optional<std::uint32_t> q;
  std::string q_list;
  std::optional<std::string> group, subgroup;
  std::optional<std::string> fmt, out;
  std::optional<std::uint64_t> cap_group;
  std::optional<std::size_t> cap_omega, cap_sweep;
  std::string config = "gba.conf";
};

std::vector<std::uint32_t> parse_q_list(const std::string& s) {
  std::vector<std::uint32_t> out;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    tok = gba::trim(tok);
    if (tok.empty()) continue;
    try {
      out.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
    } catch (const std::exception&) {
      throw gba::error(gba::errc::parse_error, "bad q value: " + tok);
    }
  }
  return out;
}

void output(const std::vector<gba::Report>& rs, gba::format f, const std::optional<std::string>& dir) {
  if (dir) {
    for (const auto& r : rs) std::cerr << r.id << " " << gba::status_name(r.result) << " -> " << gba::emit(r, f, *dir).string() << "\n";
    return;
  }
  if (f == gba::format::csv) {
    std::cout << gba::csv_header_line() << "\n";
    for (const auto& r : rs) std::cout << gba::report_csv(r) << "\n";
    return;
  }
  for (const auto& r : rs) std::cout << gba::render(r, f);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Binary-action verification for PSL2(q), Sz(q) and PSU3(q)"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* c) {
    c->add_option("--format", o.fmt, "json, csv or dot");
    c->add_option("--out", o.out, "write reports into this directory");
    c->add_option("--cap-group", o.cap_group, "largest group to enumerate");
    c->add_option("--cap-omega", o.cap_omega, "largest coset action");
    c->add_option("--cap-sweep", o.cap_sweep, "largest group for subgroup sweeps");
    c->add_option("--config", o.config, "key = value config file")->capture_default_str();
  };

  std::string id, family;
  auto* run = app.add_subcommand("run", "run one scenario");
  run->add_option("scenario", id, "scenario id")->required();
  run->add_option("--q", o.q, "field order");
  run->add_option("--group", o.group, "group label, e.g. PSL2(8)");
  run->add_option("--subgroup", o.subgroup, "subgroup name[:arg]");
  common(run);

  auto* sw = app.add_subcommand("sweep", "run every scenario of a family over a list of q");
  sw->add_option("family", family, "scenario family")->required();
  sw->add_option("--q", o.q_list, "comma separated field orders");
  common(sw);

  auto* list = app.add_subcommand("list", "print the registry");

  CLI11_PARSE(app, argc, argv);

  try {
    if (list->parsed()) {
      for (const auto& s : gba::registry()) {
        std::cout << s.id << "\t" << s.family << "\t" << s.summary << "\tcovers:";
        for (const auto& c : s.covers) std::cout << " " << c;
        std::cout << "\n";
      }
      return 0;
    }
    const auto cfg = gba::load_config(o.config);
    gba::Params p;
    if (auto v = o.cap_group ? o.cap_group : cfg.cap_group) p.group_cap = *v;
    if (auto v = o.cap_omega ? o.cap_omega : cfg.cap_omega) p.omega_cap = *v;
    if (auto v = o.cap_sweep ? o.cap_sweep : cfg.cap_sweep) p.sweep_cap = *v;
    const auto f = gba::parse_format(o.fmt.value_or(cfg.format.value_or("json")));
    const auto dir = o.out ? o.out : cfg.out_dir;

    std::vector<gba::Report> rs;
    if (run->parsed()) {
      p.q = o.q;
      p.group = o.group;
      p.subgroup = o.subgroup;
      rs.push_back(gba::run(id, p));
    } else {
      rs = gba::sweep(family, parse_q_list(o.q_list), p);
    }
    output(rs, f, dir);
    return gba::exit_code(rs);
  } catch (const gba::error& e) {
    std::cerr << "error: " << gba::errc_name(e.code()) << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
