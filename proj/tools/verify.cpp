// verify: run verification suites from the command line.
// Exit status: 0 every check passed, 1 some check failed, 2 usage error.

#include "ahecke/error.hpp"
#include "ahecke/suites.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace ahecke;

namespace {

struct Flags {
    std::string type = "A", lattice = "root", q = "4", I0, p = "9", out, format = "text", datum;
    int rank = 1, bound = 6;
    bool I0_given = false, corrupt = false, verbose = false;
};

std::vector<std::string> split(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::vector<Rational> parse_rationals(const std::string& s, const std::string& flag) {
    std::vector<Rational> out;
    for (const auto& item : split(s)) {
        Rational r;
        if (r.set_str(item, 10) != 0) fail(ErrorKind::Usage, "bad value '" + item + "' for " + flag);
        r.canonicalize();
        if (sgn(r) <= 0) fail(ErrorKind::Usage, flag + " values must be positive");
        out.push_back(r);
    }
    if (out.empty()) fail(ErrorKind::Usage, flag + " needs at least one value");
    return out;
}

Instance instance_of(const Flags& f) {
    Instance in;
    in.type = parse_cartan_type(f.type);
    in.rank = f.rank;
    in.lattice = parse_lattice_kind(f.lattice);
    in.q = parse_rationals(f.q, "--q");
    in.p = parse_rationals(f.p, "--p");
    if (f.bound < 0) fail(ErrorKind::Usage, "--bound must be nonnegative");
    in.bound = f.bound;
    in.corrupt = f.corrupt;
    if (!f.datum.empty()) {
        std::ifstream is(f.datum);
        if (!is) fail(ErrorKind::Usage, "cannot read " + f.datum);
        std::stringstream ss;
        ss << is.rdbuf();
        in = apply_datum_file(in, ss.str());
    }
    // Validates the type and rank.
    RootDatum check(in.type, in.rank, in.lattice);
    if (f.I0_given) {
        SimpleSet i0;
        for (const auto& item : split(f.I0)) {
            int k = 0;
            try {
                k = std::stoi(item);
            } catch (const std::exception&) {
                fail(ErrorKind::Usage, "bad index '" + item + "' in --I0");
            }
            if (k < 1 || k > in.rank) fail(ErrorKind::Usage, "--I0 indices run from 1 to the rank");
            i0.push_back(k - 1);
        }
        std::sort(i0.begin(), i0.end());
        i0.erase(std::unique(i0.begin(), i0.end()), i0.end());
        in.I0 = i0;
    }
    return in;
}

std::string render(const VerificationReport& r, const std::string& format, bool verbose) {
    return format == "json" ? to_json(r) : to_text(r, verbose);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verify duality and involution identities for finite and affine Hecke algebras"};
    app.require_subcommand(1);
    Flags f;
    std::vector<std::string> names = suite_names();
    names.push_back("kato");
    names.push_back("all");
    std::string chosen;
    for (const auto& name : names) {
        auto* sub = app.add_subcommand(name, name == "all" ? "run every suite" : "run the " + name + " suite");
        sub->add_option("--type", f.type, "Cartan type A, B, C, D or G")->capture_default_str();
        sub->add_option("--rank", f.rank, "rank")->capture_default_str();
        sub->add_option("--lattice", f.lattice, "root or weight")->capture_default_str();
        sub->add_option("--q", f.q, "comma list of q per parameter class")->capture_default_str();
        sub->add_option("--bound", f.bound, "length bound for affine witnesses")->capture_default_str();
        sub->add_option("--I0", f.I0, "comma list of simple roots, from 1")->each([&](const std::string&) {
            f.I0_given = true;
        });
        sub->add_option("--p", f.p, "comma list of p for the ramification datum")->capture_default_str();
        sub->add_option("--datum", f.datum, "root datum file (JSON)");
        sub->add_option("--out", f.out, "directory for report files");
        sub->add_option("--format", f.format, "text or json")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
        sub->add_flag("--corrupt-sign", f.corrupt, "flip the sign of the dual side");
        sub->add_flag("--verbose", f.verbose, "list passing records too");
        sub->callback([&chosen, name] { chosen = name; });
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return e.get_exit_code() == 0 ? code : 2;
    }

    std::vector<VerificationReport> reports;
    try {
        Instance in = instance_of(f);
        if (chosen == "all") {
            for (const auto& s : suite_names()) reports.push_back(run_suite(s, in));
        } else {
            reports.push_back(run_suite(chosen, in));
        }
    } catch (const Error& e) {
        std::cerr << "verify: " << e.what() << "\n";
        return 2;
    }

    bool pass = true;
    if (f.format == "json" && reports.size() > 1) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& r : reports) arr.push_back(nlohmann::ordered_json::parse(to_json(r)));
        std::cout << arr.dump(2) << "\n";
    }
    for (const auto& r : reports) {
        pass = pass && r.pass();
        if (f.format == "text") {
            std::cout << to_text(r, f.verbose);
            std::cout << "time: " << r.wall_time << " s\n\n";
        } else if (reports.size() == 1) {
            std::cout << to_json(r);
        }
        if (!f.out.empty()) {
            std::filesystem::create_directories(f.out);
            std::ofstream os(std::filesystem::path(f.out) / (r.suite + (f.format == "json" ? ".json" : ".txt")));
            os << render(r, f.format, f.verbose);
        }
    }
    return pass ? 0 : 1;
}
