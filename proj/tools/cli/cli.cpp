#include "cli/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "polignac/admissibility.hpp"
#include "polignac/census_io.hpp"
#include "polignac/errors.hpp"
#include "polignac/gap_census.hpp"
#include "polignac/primorial.hpp"
#include "polignac/progressions.hpp"
#include "polignac/sieve.hpp"

namespace polignac::cli {

namespace {

using json = nlohmann::ordered_json;

// Raw flag text, converted once the subcommand is known.
struct RawFlags {
    std::string lo, hi, x, k, n, q, a, c, t, m_max, max_diameter, count, tuple;
    std::string census, set, workers, segment_size, format = "table", out;
    bool analytic = false, empirical = false, keep_gap_one = false, count_only = false;
};

std::optional<std::uint64_t> u64_flag(const std::string& text, const char* name) {
    if (text.empty()) return std::nullopt;
    try {
        return parse_u64(text);
    } catch (const FormatError&) {
        throw PreconditionError(std::string("--") + name + " expects a nonnegative integer, got '" +
                                text + "'");
    }
}

std::optional<std::string> str_flag(const std::string& text) {
    if (text.empty()) return std::nullopt;
    return text;
}

template <class T>
const T& need(const std::optional<T>& v, const char* name) {
    if (!v) throw PreconditionError(std::string("missing required flag --") + name);
    return *v;
}

BigInt big_flag(const std::optional<std::string>& v, const char* name) {
    try {
        return parse_nonnegative_big(need(v, name));
    } catch (const FormatError&) {
        throw PreconditionError(std::string("--") + name + " expects a nonnegative integer, got '" +
                                *v + "'");
    }
}

RunConfig to_config(const std::string& sub, const RawFlags& raw) {
    RunConfig cfg;
    cfg.subcommand = sub;
    cfg.lo = u64_flag(raw.lo, "lo");
    cfg.hi = u64_flag(raw.hi, "hi");
    cfg.x = u64_flag(raw.x, "x");
    cfg.k = u64_flag(raw.k, "k");
    cfg.t = u64_flag(raw.t, "min-count");
    cfg.m_max = u64_flag(raw.m_max, "m-max");
    cfg.max_diameter = u64_flag(raw.max_diameter, "max-diameter");
    if (sub == "blocks") cfg.block_count = u64_flag(raw.count, "count");
    if (sub == "dirichlet") cfg.i_max = u64_flag(raw.count, "count");
    if (sub == "density") {
        cfg.n_bound = u64_flag(raw.n, "n");
    } else {
        cfg.n = str_flag(raw.n);
    }
    cfg.q = str_flag(raw.q);
    cfg.a = str_flag(raw.a);
    cfg.c = str_flag(raw.c);
    cfg.tuple = str_flag(raw.tuple);
    cfg.census_path = str_flag(raw.census);
    cfg.set_path = str_flag(raw.set);
    cfg.output_path = str_flag(raw.out);
    cfg.analytic = raw.analytic;
    cfg.empirical = raw.empirical;
    cfg.keep_gap_one = raw.keep_gap_one;
    cfg.count_only = raw.count_only;

    if (auto w = u64_flag(raw.workers, "workers")) {
        if (*w < 1 || *w > 1024) throw PreconditionError("--workers must lie in [1, 1024]");
        cfg.workers = static_cast<unsigned>(*w);
    } else {
        cfg.workers = std::max(1u, std::thread::hardware_concurrency());
    }
    cfg.segment_size = u64_flag(raw.segment_size, "segment-size").value_or(kDefaultSegmentSize);
    if (cfg.segment_size < 2) throw PreconditionError("--segment-size must be >= 2");

    if (raw.format == "table") {
        cfg.format = Format::Table;
    } else if (raw.format == "csv") {
        cfg.format = Format::Csv;
    } else if (raw.format == "json") {
        cfg.format = Format::Json;
    } else {
        throw PreconditionError("--format must be one of table, csv, json");
    }
    return cfg;
}

SieveOptions sieve_options(const RunConfig& cfg) {
    SieveOptions o;
    o.segment_size = cfg.segment_size;
    o.workers = cfg.workers;
    o.ceiling = sieve_ceiling_from_env();
    return o;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw PreconditionError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

GapCensus census_source(const RunConfig& cfg) {
    if (cfg.census_path && cfg.x) throw PreconditionError("give either --census or --x, not both");
    if (cfg.census_path) {
        try {
            return parse_census(slurp(*cfg.census_path));
        } catch (const FormatError& e) {
            throw PreconditionError(*cfg.census_path + ": " + e.what());
        }
    }
    if (!cfg.x) throw PreconditionError("one of --census or --x is required");
    return gap_census(*cfg.x, sieve_options(cfg));
}

CandidateSet candidates_from(const RunConfig& cfg) {
    const auto t = cfg.t.value_or(1);
    if (t < 1) throw PreconditionError("--min-count must be >= 1");
    return candidate_set(census_source(cfg), t, cfg.keep_gap_one ? GapOne::Keep : GapOne::Drop);
}

std::uint64_t positive(const std::optional<std::uint64_t>& v, const char* name) {
    const auto& x = need(v, name);
    if (x < 1) throw PreconditionError(std::string("--") + name + " must be >= 1");
    return x;
}

json big_array(const std::vector<BigInt>& vs) {
    json arr = json::array();
    for (const auto& v : vs) arr.push_back(to_decimal(v));
    return arr;
}

void add_certificate(Report& r, const Tuple& h, const AdmissibilityResult& res) {
    r.field("tuple", format_tuple(h));
    r.field("k", std::to_string(h.size()));
    r.json["tuple"] = big_array(h.elements());
    r.json["k"] = h.size();
    if (const auto* cert = std::get_if<AdmissibilityCertificate>(&res)) {
        r.field("admissible", "yes");
        r.columns = {"p", "missed_residue"};
        json entries = json::array();
        for (const auto& e : cert->entries) {
            r.rows.push_back({std::to_string(e.p), std::to_string(e.residue)});
            entries.push_back({{"p", e.p}, {"missed_residue", e.residue}});
        }
        r.json["admissible"] = true;
        r.json["certificate"] = entries;
    } else {
        const auto& v = std::get<AdmissibilityViolation>(res);
        r.field("admissible", "no");
        r.field("violating_prime", std::to_string(v.p));
        r.columns = {"residue", "element"};
        for (std::size_t i = 0; i < v.evidence.size(); ++i) {
            r.rows.push_back({std::to_string(i), to_decimal(v.evidence[i])});
        }
        r.json["admissible"] = false;
        r.json["violation"] = {{"p", v.p}, {"evidence", big_array(v.evidence)}};
    }
}

Report cmd_sieve(const RunConfig& cfg) {
    const auto lo = cfg.lo.value_or(0);
    const auto hi = need(cfg.hi, "hi");
    Report r;
    std::uint64_t total = 0;
    json primes = json::array();
    for_each_prime_segment(lo, hi, sieve_options(cfg), [&](PrimeSegment&& s) {
        total += s.primes.size();
        if (cfg.count_only) return;
        for (auto p : s.primes) {
            r.rows.push_back({std::to_string(p)});
            primes.push_back(p);
        }
    });
    r.field("lo", std::to_string(lo));
    r.field("hi", std::to_string(hi));
    r.field("count", std::to_string(total));
    r.json["lo"] = lo;
    r.json["hi"] = hi;
    r.json["count"] = total;
    if (!cfg.count_only) {
        r.columns = {"prime"};
        r.json["primes"] = primes;
    }
    return r;
}

Report census_report(const GapCensus& c) {
    Report r;
    r.field("x", std::to_string(c.x));
    r.field("primes", std::to_string(c.prime_count));
    r.field("distinct_gaps", std::to_string(c.counts.size()));
    r.columns = {"gap", "count"};
    json counts = json::array();
    for (const auto& [g, n] : c.counts) {
        r.rows.push_back({std::to_string(g), std::to_string(n)});
        counts.push_back({{"gap", g}, {"count", n}});
    }
    r.json["x"] = c.x;
    r.json["primes"] = c.prime_count;
    r.json["counts"] = counts;
    return r;
}

Report cmd_candidates(const RunConfig& cfg) {
    const auto s = candidates_from(cfg);
    Report r;
    r.field("source_x", std::to_string(s.source_x));
    r.field("threshold", std::to_string(s.threshold));
    r.field("size", std::to_string(s.gaps.size()));
    r.columns = {"gap"};
    for (auto g : s.gaps) r.rows.push_back({std::to_string(g)});
    r.json["source_x"] = s.source_x;
    r.json["threshold"] = s.threshold;
    r.json["gaps"] = s.gaps;
    r.ok = !s.gaps.empty();
    return r;
}

Report cmd_cover(const RunConfig& cfg) {
    const auto m_max = need(cfg.m_max, "m-max");
    const auto s = candidates_from(cfg);
    Report r;
    r.json["source_x"] = s.source_x;
    r.json["threshold"] = s.threshold;
    r.json["m_max"] = m_max;
    auto report = interval_cover_constant(s, m_max);
    r.field("m_max", std::to_string(m_max));
    if (!report) {
        r.ok = false;
        r.field("c_emp", "none (no candidate in [0, m_max])");
        r.json["c_emp"] = nullptr;
        r.json["worst_m"] = nullptr;
        r.json["verified"] = false;
        return r;
    }
    const bool verified = verify_cover(*report, s.gaps);
    r.field("c_emp", std::to_string(report->c_emp));
    r.field("worst_m", report->worst_m ? std::to_string(*report->worst_m) : "-");
    r.field("verified", verified ? "yes" : "no");
    r.json["c_emp"] = report->c_emp;
    r.json["worst_m"] = report->worst_m ? json(*report->worst_m) : json(nullptr);
    r.json["verified"] = verified;
    return r;
}

Report cmd_density(const RunConfig& cfg) {
    if (cfg.analytic == cfg.empirical) {
        throw PreconditionError("density needs exactly one of --analytic or --empirical");
    }
    Report r;
    Rational value;
    if (cfg.analytic) {
        Rational c;
        try {
            c = parse_rational(need(cfg.c, "c"));
        } catch (const FormatError& e) {
            throw PreconditionError(std::string("--c: ") + e.what());
        }
        value = density_lower_bound(c);
        r.field("mode", "analytic");
        r.field("c", to_decimal(c));
        r.json["mode"] = "analytic";
        r.json["c"] = to_decimal(c);
    } else {
        const auto n = positive(cfg.n_bound, "n");
        const auto s = candidates_from(cfg);
        value = empirical_density(s.gaps, n);
        r.field("mode", "empirical");
        r.field("n", std::to_string(n));
        r.json["mode"] = "empirical";
        r.json["source_x"] = s.source_x;
        r.json["threshold"] = s.threshold;
        r.json["n"] = n;
    }
    r.field("value", to_decimal(value));
    r.field("decimal", to_fixed(value, 12));
    r.json["value"] = to_decimal(value);
    r.json["decimal"] = to_fixed(value, 12);
    return r;
}

Report cmd_admissible(const RunConfig& cfg) {
    Tuple h = [&] {
        try {
            return parse_tuple(need(cfg.tuple, "tuple")).normalized();
        } catch (const FormatError& e) {
            throw PreconditionError(std::string("--tuple: ") + e.what());
        }
    }();
    Report r;
    const auto res = is_admissible(h);
    add_certificate(r, h, res);
    r.ok = admissible(res);
    return r;
}

Report cmd_narrow(const RunConfig& cfg) {
    const auto k = positive(cfg.k, "k");
    const auto dmax = need(cfg.max_diameter, "max-diameter");
    const auto res = narrow_tuple(k, dmax);
    Report r;
    r.json["k"] = k;
    r.json["max_diameter"] = dmax;
    r.json["strategy"] = res.strategy;
    r.json["best_diameter"] = res.best_diameter ? json(*res.best_diameter) : json(nullptr);
    if (!res.tuple) {
        r.ok = false;
        r.field("k", std::to_string(k));
        r.field("max_diameter", std::to_string(dmax));
        r.field("best_diameter", res.best_diameter ? std::to_string(*res.best_diameter) : "-");
        r.json["tuple"] = nullptr;
        return r;
    }
    r.field("max_diameter", std::to_string(dmax));
    r.field("diameter", std::to_string(*res.best_diameter));
    r.field("strategy", res.strategy);
    add_certificate(r, *res.tuple, is_admissible(*res.tuple));
    r.json["diameter"] = *res.best_diameter;
    return r;
}

Report cmd_lemma1(const RunConfig& cfg) {
    const auto k = positive(cfg.k, "k");
    const BigInt n = big_flag(cfg.n, "n");
    if (n < 1) throw PreconditionError("--n must be >= 1");
    const Tuple h = lemma1_tuple(k, n);
    Report r;
    r.field("d", to_decimal(primorial(k)));
    r.field("N", to_decimal(n));
    r.json["d"] = to_decimal(primorial(k));
    r.json["N"] = to_decimal(n);
    add_certificate(r, h, is_admissible(h));
    return r;
}

Report cmd_window(const RunConfig& cfg) {
    const auto k = need(cfg.k, "k");
    if (k < 2) throw PreconditionError("--k must be >= 2");
    const BigInt n = big_flag(cfg.n, "n");
    if (n < 1) throw PreconditionError("--n must be >= 1");
    const auto window = lemma1_polignac_window(k, n);
    Report r;
    r.field("k", std::to_string(k));
    r.field("N", to_decimal(n));
    r.field("d", to_decimal(primorial(k)));
    r.columns = {"i", "difference"};
    for (std::size_t i = 0; i < window.size(); ++i) {
        r.rows.push_back({std::to_string(i + 1), to_decimal(window[i])});
    }
    r.json["k"] = k;
    r.json["N"] = to_decimal(n);
    r.json["d"] = to_decimal(primorial(k));
    r.json["window"] = big_array(window);
    return r;
}

Report blocks_report(const BlockSequence& seq) {
    Report r;
    r.field("q", to_decimal(seq.q));
    r.field("k", std::to_string(seq.k));
    r.field("d", to_decimal(seq.d));
    r.columns = {"block", "i", "value"};
    json blocks = json::array();
    for (std::size_t j = 0; j < seq.blocks.size(); ++j) {
        for (std::size_t i = 0; i < seq.blocks[j].size(); ++i) {
            r.rows.push_back({std::to_string(j + 1), std::to_string(i + 1), to_decimal(seq.blocks[j][i])});
        }
        blocks.push_back(big_array(seq.blocks[j]));
    }
    r.json["q"] = to_decimal(seq.q);
    r.json["k"] = seq.k;
    r.json["d"] = to_decimal(seq.d);
    r.json["blocks"] = blocks;
    return r;
}

Report cmd_blocks(const RunConfig& cfg) {
    const BigInt q = big_flag(cfg.q, "q");
    if (q < 1) throw PreconditionError("--q must be >= 1");
    const auto k = need(cfg.k, "k");
    if (k < 2) throw PreconditionError("--k must be >= 2");
    const auto count = positive(cfg.block_count, "count");
    return blocks_report(ap_blocks(q, k, count));
}

Report cmd_dirichlet(const RunConfig& cfg) {
    const BigInt a = big_flag(cfg.a, "a");
    const BigInt q = big_flag(cfg.q, "q");
    if (q < 1) throw PreconditionError("--q must be >= 1");
    const auto count = positive(cfg.i_max, "count");
    if (a == 0) {
        const auto k = need(cfg.k, "k");
        if (k < 2) throw PreconditionError("--k must be >= 2");
        Report r = blocks_report(ap_blocks(q, k, count));
        r.command = "blocks";
        return r;
    }
    const auto k = positive(cfg.k, "k");
    if (!mpz_divisible_p(a.get_mpz_t(), q.get_mpz_t())) {
        throw PreconditionError("dirichlet requires q | a (q = " + to_decimal(q) + ", a = " + to_decimal(a) + ")");
    }
    const auto spec = dirichlet_subsequence(a, q, k, count);
    Report r;
    r.field("a", to_decimal(spec.a));
    r.field("q", to_decimal(spec.q));
    r.field("k", std::to_string(spec.k));
    r.field("d", to_decimal(spec.d));
    r.field("identity", verify_dirichlet(spec) ? "verified" : "FAILED");
    r.columns = {"i", "N_i", "a+N_i*q"};
    for (std::size_t i = 0; i < spec.n_values.size(); ++i) {
        r.rows.push_back({std::to_string(i + 1), to_decimal(spec.n_values[i]), to_decimal(spec.terms[i])});
    }
    r.json["a"] = to_decimal(spec.a);
    r.json["q"] = to_decimal(spec.q);
    r.json["k"] = spec.k;
    r.json["d"] = to_decimal(spec.d);
    r.json["n_values"] = big_array(spec.n_values);
    r.json["terms"] = big_array(spec.terms);
    r.json["verified"] = verify_dirichlet(spec);
    return r;
}

Report cmd_ap(const RunConfig& cfg) {
    std::vector<std::int64_t> set;
    if (cfg.set_path) {
        if (cfg.census_path || cfg.x) throw PreconditionError("give either --set or a census source");
        try {
            set = parse_integer_set(slurp(*cfg.set_path));
        } catch (const FormatError& e) {
            throw PreconditionError(*cfg.set_path + ": " + e.what());
        }
    } else {
        for (auto g : candidates_from(cfg).gaps) set.push_back(static_cast<std::int64_t>(g));
    }
    Report r;
    r.field("set_size", std::to_string(set.size()));
    r.json["set_size"] = set.size();
    if (set.empty()) {
        r.ok = false;
        r.json["run"] = nullptr;
        return r;
    }
    const auto run = longest_ap_in_set(set);
    r.field("start", std::to_string(run.start));
    r.field("step", std::to_string(run.step));
    r.field("length", std::to_string(run.length));
    r.columns = {"term"};
    json terms = json::array();
    for (std::uint64_t t = 0; t < run.length; ++t) {
        const auto v = run.start + static_cast<std::int64_t>(t) * run.step;
        r.rows.push_back({std::to_string(v)});
        terms.push_back(v);
    }
    r.json["run"] = {{"start", run.start}, {"step", run.step}, {"length", run.length}, {"terms", terms}};
    return r;
}

std::string failure_message(const Report& r) {
    if (r.command == "narrow") return "no admissible tuple within the requested diameter";
    if (r.command == "admissible") return "tuple is not admissible";
    if (r.command == "cover") return "no candidate lies in [0, m_max]";
    return "empty candidate set";
}

void add_common(CLI::App* sub, RawFlags& raw) {
    sub->add_option("--workers", raw.workers, "Sieve worker threads (default: hardware threads)");
    sub->add_option("--segment-size", raw.segment_size, "Integers per sieve segment");
    sub->add_option("--format", raw.format, "table | csv | json");
    sub->add_option("--out", raw.out, "Write output to a file (census: census file format)");
}

void add_census_source(CLI::App* sub, RawFlags& raw) {
    sub->add_option("--census", raw.census, "Census file written by `census --out`");
    sub->add_option("--x", raw.x, "Compute the census up to x");
    sub->add_option("--min-count,-T", raw.t, "Minimum occurrences T (default 1)");
    sub->add_flag("--keep-gap-one", raw.keep_gap_one, "Keep the gap 1 between 2 and 3");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Prime-gap census, admissible tuples and Polignac progressions", "polignac"};
    app.require_subcommand(1);
    RawFlags raw;

    auto* sieve = app.add_subcommand("sieve", "List primes in [lo, hi)");
    sieve->add_option("--lo", raw.lo, "Range start (inclusive, default 0)");
    sieve->add_option("--hi", raw.hi, "Range end (exclusive)")->required();
    sieve->add_flag("--count-only", raw.count_only, "Only report the count");

    auto* census = app.add_subcommand("census", "Consecutive-prime gap counts up to x");
    census->add_option("--x", raw.x, "Census bound")->required();

    auto* cands = app.add_subcommand("candidates", "Gaps occurring at least T times");
    add_census_source(cands, raw);

    auto* cover = app.add_subcommand("cover", "Empirical interval-cover constant");
    add_census_source(cover, raw);
    cover->add_option("--m-max", raw.m_max, "Scan bound")->required();

    auto* density = app.add_subcommand("density", "Analytic 1/(2C) or empirical density");
    density->add_flag("--analytic", raw.analytic, "Lower bound 1/(2C)");
    density->add_flag("--empirical", raw.empirical, "|S ∩ [0, n]| / n over a candidate set");
    density->add_option("--c", raw.c, "Interval constant C (integer, p/q or decimal)");
    density->add_option("--n", raw.n, "Density bound n");
    add_census_source(density, raw);

    auto* adm = app.add_subcommand("admissible", "Admissibility with certificate");
    adm->add_option("--tuple", raw.tuple, "Comma-separated ascending integers")->required();

    auto* narrow = app.add_subcommand("narrow", "Narrow admissible k-tuple");
    narrow->add_option("--k", raw.k, "Tuple size")->required();
    narrow->add_option("--max-diameter", raw.max_diameter, "Diameter bound")->required();

    auto* lemma1 = app.add_subcommand("lemma1", "The tuple {0, dN, ..., (k-1)dN}");
    lemma1->add_option("--k", raw.k, "Tuple size")->required();
    lemma1->add_option("--n", raw.n, "Multiplier N")->required();

    auto* window = app.add_subcommand("window", "Candidate differences {dN, ..., (k-1)dN}");
    window->add_option("--k", raw.k, "Tuple size")->required();
    window->add_option("--n", raw.n, "Multiplier N")->required();

    auto* blocks = app.add_subcommand("blocks", "Blocks on the progression q, 2q, ...");
    blocks->add_option("--q", raw.q, "Progression step")->required();
    blocks->add_option("--k", raw.k, "Tuple size")->required();
    blocks->add_option("--count", raw.count, "Number of blocks")->required();

    auto* dirichlet = app.add_subcommand("dirichlet", "Subsequence of a, a+q, ... with q | a");
    dirichlet->add_option("--a", raw.a, "Progression start")->required();
    dirichlet->add_option("--q", raw.q, "Progression step")->required();
    dirichlet->add_option("--k", raw.k, "Tuple size")->required();
    dirichlet->add_option("--count,--i-max", raw.count, "Number of terms")->required();

    auto* ap = app.add_subcommand("ap", "Longest arithmetic progression in a set");
    ap->add_option("--set", raw.set, "Integer-set file, one ascending integer per line");
    add_census_source(ap, raw);

    for (auto* sub : {sieve, census, cands, cover, density, adm, narrow, lemma1, window, blocks, dirichlet, ap}) {
        add_common(sub, raw);
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    const std::string sub = app.get_subcommands().front()->get_name();
    try {
        const RunConfig cfg = to_config(sub, raw);

        if (sub == "census") {
            const auto c = gap_census(need(cfg.x, "x"), sieve_options(cfg));
            if (cfg.output_path) {
                write_census_file(*cfg.output_path, c);
                return kExitOk;
            }
            Report r = census_report(c);
            r.command = sub;
            out << render(r, cfg.format);
            return kExitOk;
        }

        Report r;
        if (sub == "sieve") r = cmd_sieve(cfg);
        else if (sub == "candidates") r = cmd_candidates(cfg);
        else if (sub == "cover") r = cmd_cover(cfg);
        else if (sub == "density") r = cmd_density(cfg);
        else if (sub == "admissible") r = cmd_admissible(cfg);
        else if (sub == "narrow") r = cmd_narrow(cfg);
        else if (sub == "lemma1") r = cmd_lemma1(cfg);
        else if (sub == "window") r = cmd_window(cfg);
        else if (sub == "blocks") r = cmd_blocks(cfg);
        else if (sub == "dirichlet") r = cmd_dirichlet(cfg);
        else if (sub == "ap") r = cmd_ap(cfg);
        if (r.command.empty()) r.command = sub;

        const std::string text = render(r, cfg.format);
        if (cfg.output_path) {
            std::ofstream f(*cfg.output_path, std::ios::binary | std::ios::trunc);
            if (!f) throw std::runtime_error("cannot open '" + *cfg.output_path + "' for writing");
            f << text;
        } else {
            out << text;
        }
        if (!r.ok) {
            err << "polignac " << sub << ": " << failure_message(r) << '\n';
            return kExitFailure;
        }
        return kExitOk;
    } catch (const PreconditionError& e) {
        err << "polignac " << sub << ": " << e.what() << '\n';
        return kExitUsage;
    } catch (const CapacityError& e) {
        err << "polignac " << sub << ": " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "polignac " << sub << ": " << e.what() << '\n';
        return kExitFailure;
    }
}

}  // namespace polignac::cli
