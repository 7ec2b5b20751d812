#include "qlucas/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <sstream>
#include <thread>

#include "qlucas/report.hpp"
#include "qlucas/sieve.hpp"

namespace qlucas {

namespace {

constexpr std::size_t block_size = 64;

std::string trim(const std::string& s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(const std::string& key, const std::string& value)
{
    std::istringstream in(value);
    T out{};
    if (!(in >> out) || !in.eof()) throw ConfigError("bad value for " + key + ": '" + value + "'");
    return out;
}

} // namespace

std::string_view to_string(Status s) noexcept
{
    switch (s) {
    case Status::match: return "match";
    case Status::mismatch: return "mismatch";
    case Status::skipped: return "skipped";
    }
    return "?";
}

std::string skip_text(GateFailure failure, i64 b, i64 d, u64 p)
{
    switch (failure) {
    case GateFailure::d_nonresidue:
        return "(" + std::to_string(d) + "/" + std::to_string(p) + ") = -1";
    case GateFailure::not_one_mod_four:
        return std::to_string(p) + " is not 1 mod 4";
    case GateFailure::divides_d:
        return std::to_string(p) + " divides d = " + std::to_string(d);
    case GateFailure::not_represented:
        return std::to_string(p) + " is not of the form x²+" + std::to_string(d) + "y²";
    default:
        return std::string(describe(failure, b));
    }
}

VerifyRecord verify_one(i64 b, u64 p)
{
    if (p < 3 || !is_prime(p) || p >= PrimeField::max_modulus) {
        VerifyRecord r;
        r.b = b;
        r.p = p;
        r.skip_reason = std::to_string(p) + " is not an odd prime";
        return r;
    }
    return verify_one(b, PrimeField(p));
}

VerifyRecord verify_one(i64 b, const PrimeField& field)
{
    VerifyRecord r;
    r.b = b;
    r.p = field.modulus();
    if (b == 0) {
        r.skip_reason = skip_text(GateFailure::b_zero, b, 0, r.p);
        return r;
    }
    GatedRep gated = gated_representation(b, field);
    r.d = gated.gate.d;
    if (!gated.gate.qualifies) {
        r.skip_reason = skip_text(gated.gate.failure, b, r.d, r.p);
        return r;
    }
    r.rep = gated.rep;
    r.status = Status::mismatch;
    try {
        const NormalizedRep& rep = *r.rep;
        r.case_id = classify(b, rep);
        r.predicted = predict(b, rep, field);
        r.actual = lucas_uv_mod(LucasParams{b, -1}, (r.p - 1) / 4, field);
        r.uv_agrees = r.predicted.u_pred == r.actual.u && r.predicted.v_pred == r.actual.v;
        r.eta_pred = predict_eta(b, rep, field);
        r.eta_extracted = extract_eta(b, rep, field);
        r.eta_agrees = r.eta_pred == r.eta_extracted.eta;
        const Prediction via_eta = eta_to_uv(r.eta_pred, rep, b, field);
        r.dictionary_agrees = via_eta.u_pred == r.predicted.u_pred && via_eta.v_pred == r.predicted.v_pred;
    } catch (const Error& e) {
        r.error = e.what();
        return r;
    }
    if (r.uv_agrees && r.eta_agrees && r.dictionary_agrees) r.status = Status::match;
    return r;
}

void SweepSpec::validate() const
{
    if (conjectures.empty()) throw ConfigError("no conjecture selected");
    for (int c : conjectures)
        if (c < 1 || c > 4) throw ConfigError("conjecture must be 1..4, got " + std::to_string(c));
    if (p_max < 5) throw ConfigError("p_max must be at least 5");
    if (p_max >= PrimeField::max_modulus) throw ConfigError("p_max too large");
    if (jobs == 0) throw ConfigError("jobs must be positive");
    if (b_min > b_max) throw ConfigError("empty b range");
    if (b_values().empty()) throw ConfigError("no b in [" + std::to_string(b_min) + ", " + std::to_string(b_max)
                                              + "] matches the selected conjectures");
}

std::vector<i64> SweepSpec::b_values() const
{
    std::vector<i64> out;
    for (i64 b = b_min; b <= b_max; ++b)
        if (b != 0 && conjectures.count(conjecture_for(b))) out.push_back(b);
    return out;
}

SweepSpec load_config(const std::string& path, SweepSpec base)
{
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "conjecture") {
            base.conjectures.clear();
            std::istringstream items(value);
            std::string item;
            while (std::getline(items, item, ','))
                base.conjectures.insert(parse_number<int>(key, trim(item)));
        } else if (key == "b_min") {
            base.b_min = parse_number<i64>(key, value);
        } else if (key == "b_max") {
            base.b_max = parse_number<i64>(key, value);
        } else if (key == "p_max") {
            base.p_max = parse_number<u64>(key, value);
        } else if (key == "jobs") {
            base.jobs = parse_number<unsigned>(key, value);
        } else if (key == "out") {
            base.output = value;
        } else if (key == "format") {
            if (value == "jsonl")
                base.format = ReportFormat::jsonl;
            else if (value == "csv")
                base.format = ReportFormat::csv;
            else
                throw ConfigError("format must be jsonl or csv");
        } else {
            throw ConfigError(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
    return base;
}

SweepReport sweep(const SweepSpec& spec)
{
    spec.validate();
    const auto start = std::chrono::steady_clock::now();
    const std::vector<u64> primes = primes_one_mod_four(spec.p_max);
    const std::vector<i64> bs = spec.b_values();
    const std::size_t blocks = (primes.size() + block_size - 1) / block_size;

    struct Partial {
        std::vector<VerifyRecord> checked;
        u64 skipped = 0;
    };
    std::vector<Partial> partials(blocks);
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        for (;;) {
            const std::size_t blk = next.fetch_add(1);
            if (blk >= blocks) return;
            Partial& out = partials[blk];
            const std::size_t end = std::min(primes.size(), (blk + 1) * block_size);
            for (std::size_t i = blk * block_size; i < end; ++i) {
                const PrimeField field(primes[i]);
                for (i64 b : bs) {
                    VerifyRecord r = verify_one(b, field);
                    if (r.checked())
                        out.checked.push_back(std::move(r));
                    else
                        ++out.skipped;
                }
            }
        }
    };

    const unsigned n = std::max(1u, std::min<unsigned>(spec.jobs, static_cast<unsigned>(std::max<std::size_t>(blocks, 1))));
    if (n == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(n);
        for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
    }

    SweepReport report;
    std::vector<VerifyRecord> all;
    for (Partial& part : partials) {
        report.skipped += part.skipped;
        for (VerifyRecord& r : part.checked) all.push_back(std::move(r));
    }
    std::sort(all.begin(), all.end(), [](const VerifyRecord& x, const VerifyRecord& y) {
        return std::tie(x.b, x.p) < std::tie(y.b, y.p);
    });
    for (const VerifyRecord& r : all) {
        ++report.checked;
        if (r.status == Status::match)
            ++report.matched;
        else
            report.mismatches.push_back(r);
        if (r.eta_agrees) ++report.eta_agreements;
        if (r.dictionary_agrees) ++report.dictionary_agreements;
        if (r.case_id) ++report.coverage[*r.case_id];
    }
    if (!spec.output.empty()) write_report(spec.output, all, spec.format);
    if (spec.keep_records) report.records = std::move(all);
    report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

} // namespace qlucas
