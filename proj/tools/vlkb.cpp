// Command-line front end: exact LKB representation matrices and the
// verification suites, with reproducible seeds and JSON output.

#include "vlkb/gtbasis.hpp"
#include "vlkb/lkb.hpp"
#include "vlkb/suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace vlkb;

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct GlobalOpts {
    std::uint64_t seed = 1;
    std::string outPath;
    bool force = false;
};

void writeOut(const GlobalOpts& g, const json& doc) {
    if (g.outPath.empty()) return;
    std::ofstream out(g.outPath, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file " + g.outPath);
    out << doc.dump(2) << "\n";
}

json reportToJson(const Report& rep) {
    json j;
    j["title"] = rep.title;
    j["claim"] = rep.claim;
    json lines = json::array();
    for (const auto& l : rep.lines) {
        json e;
        e["name"] = l.name;
        e["pass"] = l.pass;
        if (!l.detail.empty()) e["detail"] = l.detail;
        lines.push_back(e);
    }
    j["checks"] = lines;
    j["pass"] = rep.pass();
    return j;
}

void printReport(const Report& rep) {
    std::cout << "== " << rep.title << "\n";
    std::cout << "claim: " << rep.claim << "\n";
    for (const auto& l : rep.lines) {
        std::cout << (l.pass ? "  [pass] " : "  [FAIL] ") << l.name;
        if (!l.detail.empty()) std::cout << " -- " << l.detail;
        std::cout << "\n";
    }
}

int finishReports(const GlobalOpts& g, const std::string& command,
                  const std::vector<Report>& reps, json params) {
    bool ok = true;
    json docs = json::array();
    for (const auto& r : reps) {
        printReport(r);
        docs.push_back(reportToJson(r));
        ok = ok && r.pass();
    }
    json doc;
    doc["command"] = command;
    doc["params"] = std::move(params);
    doc["reports"] = std::move(docs);
    doc["pass"] = ok;
    writeOut(g, doc);
    std::cout << (ok ? "RESULT: pass" : "RESULT: FAIL") << "\n";
    return ok ? 0 : kExitCheckFailed;
}

std::vector<int> parseColorList(const std::string& text) {
    std::vector<int> colors;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) continue;
        colors.push_back(std::stoi(tok));
    }
    return colors;
}

std::vector<int> readColorsFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open colors file " + path);
    std::vector<int> colors;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        int c;
        if (ls >> c) colors.push_back(c);
    }
    return colors;
}

// Plain `key = value` lines; keys are generator names, values rationals.
scalar::Specialization readParamsFile(const GeneratorSet& gs, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open parameter file " + path);
    scalar::Specialization sp;
    sp.gs = gs;
    sp.seed = 0;
    sp.values.assign(static_cast<std::size_t>(gs.nvars()), Rat(0));
    std::vector<bool> set(static_cast<std::size_t>(gs.nvars()), false);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            auto a = s.find_first_not_of(" \t\r");
            auto b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key.empty()) continue;
        int var = gs.varIndex(key);
        if (var < 0) throw std::runtime_error("unknown generator '" + key + "' in parameter file");
        Rat r(val);
        r.canonicalize();
        if (r == 0) throw std::runtime_error("generator " + key + " must be nonzero");
        sp.values[static_cast<std::size_t>(var)] = r;
        set[static_cast<std::size_t>(var)] = true;
    }
    for (std::size_t i = 0; i < set.size(); ++i)
        if (!set[i])
            throw std::runtime_error("parameter file misses generator " + gs.varName(static_cast<int>(i)));
    return sp;
}

void guardSizes(const GlobalOpts& g, int n, int l) {
    if (g.force) return;
    if (n > 8 || l > 5)
        throw CLI::ValidationError("size guardrail: n <= 8 and l <= 5 (use --force to override)");
}

} // namespace

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    CLI::App app{"Exact Verma-module braid representations: LKB matrices, simplicity "
                 "certificates, and verification suites"};
    app.require_subcommand(1);

    GlobalOpts g;
    if (const char* env = std::getenv("VLKB_SEED")) {
        try { g.seed = std::stoull(env); } catch (...) {}
    }
    app.add_option("--seed", g.seed, "random seed (default from VLKB_SEED, else 1)");
    app.add_option("--out", g.outPath, "write the JSON output document to this file");
    app.add_flag("--force", g.force, "override the default size guardrails");

    // dim
    auto* dim = app.add_subcommand("dim", "rank table of the highest-weight spaces");
    int dimN = 4, dimL = 2;
    bool dimAll = false;
    dim->add_option("--n", dimN, "strand count");
    dim->add_option("--l", dimL, "level");
    dim->add_flag("--all", dimAll, "table for all 2 <= n' <= n, 0 <= l' <= l");

    // matrix
    auto* mat = app.add_subcommand("matrix", "matrix of a braid word on the LKB space");
    int matN = 2, matL = 1;
    std::string matWord = "s1", matColors, matColorsFile, matParams, matMode = "symbolic";
    mat->add_option("--n", matN, "strand count")->required();
    mat->add_option("--l", matL, "level")->required();
    mat->add_option("--word", matWord, "braid word, e.g. \"s1 s2^-1\"")->required();
    mat->add_option("--colors", matColors, "comma-separated color index per strand");
    mat->add_option("--colors-file", matColorsFile, "file with one color index per line");
    mat->add_option("--params", matParams, "key = value file assigning v and the U_i");
    mat->add_option("--mode", matMode, "symbolic or specialized")
        ->check(CLI::IsMember({"symbolic", "specialized"}));

    // verify
    auto* verify = app.add_subcommand("verify", "verification suites");
    verify->require_subcommand(1);
    auto* vBraid = verify->add_subcommand("braid-relations", "colored braid relations");
    int vbN = 3, vbL = 2;
    vBraid->add_option("--n", vbN, "strand count");
    vBraid->add_option("--l", vbL, "max level");
    auto* vYbe = verify->add_subcommand("yang-baxter", "Yang-Baxter and inverses");
    int vyL = 2;
    vYbe->add_option("--l", vyL, "max level");
    auto* vComm = verify->add_subcommand("commuting-actions", "gl(2) vs dual gl(n)");
    int vcSamples = 200, vcMaxN = 4;
    vComm->add_option("--samples", vcSamples, "random monomials per operator pair");
    vComm->add_option("--n", vcMaxN, "max strand count (runs n = 2..n)");
    auto* vCas = verify->add_subcommand("casimir", "Casimir eigenvalues on GT vectors");
    int vcasN = 4, vcasC = 3, vcasR = 2;
    bool vcasSplit = false;
    vCas->add_option("--n", vcasN, "max n (runs n = 2..n)");
    vCas->add_option("--c-max", vcasC, "max c_n");
    vCas->add_option("--r-bound", vcasR, "bound on |r_i|");
    vCas->add_flag("--cross-check", vcasSplit, "also run the split-form assembly of C_k");
    auto* vInf = verify->add_subcommand("infbraid", "infinitesimal pure braid relations");
    int viN = 4, viSamples = 200;
    vInf->add_option("--n", viN, "max n (runs n = 2..n)");
    vInf->add_option("--samples", viSamples, "random monomials per relation");
    auto* vDual = verify->add_subcommand("duality", "duality dimension identities");
    int vdN = 6, vdT = 6, vdL = 4;
    vDual->add_option("--n", vdN, "max n (runs n = 2..n)");
    vDual->add_option("--t-max", vdT, "binomial identity range");
    vDual->add_option("--l-max", vdL, "kernel dimension range");

    // simplicity
    auto* simp = app.add_subcommand("simplicity", "commutant certificates at specializations");
    int spN = 3, spL = 2, spTrials = 3;
    std::string spPartition, spMode = "specialized";
    simp->add_option("--n", spN, "strand count")->required();
    simp->add_option("--l", spL, "level")->required();
    simp->add_option("--partition", spPartition, "e.g. \"[1][2][3]\" (default: finest)");
    simp->add_option("--trials", spTrials, "number of independent specializations");
    simp->add_option("--mode", spMode, "specialized or symbolic")
        ->check(CLI::IsMember({"specialized", "symbolic"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*dim) {
            guardSizes(g, dimN, dimL);
            json rows = json::array();
            std::cout << "dim W(n,l) = C(n+l-2, l)\n";
            int n0 = dimAll ? 2 : dimN, l0 = dimAll ? 0 : dimL;
            bool ok = true;
            for (int n = n0; n <= dimN; ++n)
                for (int l = l0; l <= dimL; ++l) {
                    auto space = lkb::lkbBasis(n, l, verma::identityColors(n));
                    Int expect = scalar::binom(n + l - 2, l);
                    bool match = Int(static_cast<long>(space.dim())) == expect;
                    ok = ok && match;
                    std::cout << "  n=" << n << " l=" << l << " dim=" << space.dim()
                              << (match ? "" : " (MISMATCH with closed form)") << "\n";
                    json row;
                    row["n"] = n;
                    row["l"] = l;
                    row["dim"] = space.dim();
                    row["closed_form"] = expect.get_str();
                    rows.push_back(row);
                }
            json doc;
            doc["command"] = "dim";
            doc["rows"] = std::move(rows);
            doc["pass"] = ok;
            writeOut(g, doc);
            return ok ? 0 : kExitCheckFailed;
        }

        if (*mat) {
            guardSizes(g, matN, matL);
            std::vector<int> colors;
            if (!matColorsFile.empty()) colors = readColorsFile(matColorsFile);
            else if (!matColors.empty()) colors = parseColorList(matColors);
            else colors = verma::identityColors(matN);
            if (static_cast<int>(colors.size()) != matN)
                throw CLI::ValidationError("need one color per strand");
            auto word = braid::parseWord(matWord, matN);
            auto space = lkb::lkbBasis(matN, matL, colors);

            json doc;
            doc["n"] = matN;
            doc["l"] = matL;
            doc["colors"] = colors;
            doc["word"] = braid::printWord(word);
            json basis = json::array();
            for (int i = 0; i < space.dim(); ++i) basis.push_back(space.basisString(i));
            doc["basis"] = std::move(basis);
            json entries = json::array();
            if (matMode == "symbolic") {
                auto M = lkb::wordMatrix(word, space);
                for (const auto& row : M.entries) {
                    json r = json::array();
                    for (const auto& x : row) r.push_back(x.str());
                    entries.push_back(std::move(r));
                }
            } else {
                scalar::Specialization sp =
                    matParams.empty() ? scalar::drawAdmissible(space.gs, g.seed)
                                      : readParamsFile(space.gs, matParams);
                json vals;
                for (int i = 0; i < space.gs.nvars(); ++i)
                    vals[space.gs.varName(i)] = sp.values[static_cast<std::size_t>(i)].get_str();
                doc["specialization"] = std::move(vals);
                auto sspace = lkb::specializeSpace(space, sp);
                auto M = lkb::wordMatrixAt(word, sspace);
                for (const auto& row : M.entries) {
                    json r = json::array();
                    for (const auto& x : row) r.push_back(x.get_str());
                    entries.push_back(std::move(r));
                }
            }
            doc["entries"] = std::move(entries);
            std::cout << doc.dump(2) << "\n";
            writeOut(g, doc);
            return 0;
        }

        if (*verify) {
            if (*vBraid) {
                guardSizes(g, vbN, vbL);
                json params;
                params["n"] = vbN;
                params["l"] = vbL;
                return finishReports(g, "verify braid-relations",
                                     {suites::braidRelations(vbN, vbL)}, std::move(params));
            }
            if (*vYbe) {
                guardSizes(g, 3, vyL);
                json params;
                params["l"] = vyL;
                return finishReports(g, "verify yang-baxter", {suites::yangBaxter(vyL)},
                                     std::move(params));
            }
            if (*vComm) {
                guardSizes(g, vcMaxN, 0);
                std::vector<Report> reps;
                for (int n = 2; n <= vcMaxN; ++n) {
                    reps.push_back(suites::commutingActions(n, vcSamples, g.seed + n, Mode::quantum));
                    reps.push_back(
                        suites::commutingActions(n, vcSamples, g.seed + 100 + n, Mode::classical));
                }
                json params;
                params["n"] = vcMaxN;
                params["samples"] = vcSamples;
                params["seed"] = g.seed;
                return finishReports(g, "verify commuting-actions", reps, std::move(params));
            }
            if (*vCas) {
                guardSizes(g, vcasN, 0);
                std::vector<Report> reps;
                for (int n = 2; n <= vcasN; ++n)
                    reps.push_back(gtbasis::casimirCheck(GeneratorSet::classical(n), n, vcasC,
                                                         vcasR, vcasSplit));
                json params;
                params["n"] = vcasN;
                params["c_max"] = vcasC;
                params["r_bound"] = vcasR;
                return finishReports(g, "verify casimir", reps, std::move(params));
            }
            if (*vInf) {
                guardSizes(g, viN, 0);
                std::vector<Report> reps;
                for (int n = 2; n <= viN; ++n)
                    reps.push_back(gtbasis::infbraidRelationsCheck(GeneratorSet::classical(n), n,
                                                                   viSamples, g.seed + n));
                json params;
                params["n"] = viN;
                params["samples"] = viSamples;
                params["seed"] = g.seed;
                return finishReports(g, "verify infbraid", reps, std::move(params));
            }
            if (*vDual) {
                guardSizes(g, vdN, vdL);
                std::vector<Report> reps;
                for (int n = 2; n <= vdN; ++n)
                    reps.push_back(qgroup::dualityDimensionCheck(n, vdT, vdL));
                json params;
                params["n"] = vdN;
                params["t_max"] = vdT;
                params["l_max"] = vdL;
                return finishReports(g, "verify duality", reps, std::move(params));
            }
        }

        if (*simp) {
            guardSizes(g, spN, spL);
            braid::Partition part = spPartition.empty()
                                        ? braid::Partition::finest(spN)
                                        : braid::Partition::parse(spPartition, spN);
            json doc;
            doc["command"] = "simplicity";
            doc["n"] = spN;
            doc["l"] = spL;
            doc["partition"] = part.str();
            doc["trials"] = spTrials;
            doc["seed"] = g.seed;
            doc["mode"] = spMode;
            bool ok = false;
            if (spMode == "symbolic") {
                std::vector<int> colors(static_cast<std::size_t>(spN), 0);
                auto owner = part.blockOf();
                for (int p = 1; p <= spN; ++p)
                    colors[static_cast<std::size_t>(p - 1)] = owner[static_cast<std::size_t>(p)] + 1;
                auto space = lkb::lkbBasis(spN, spL, colors);
                if (space.dim() > 3 && !g.force)
                    throw CLI::ValidationError(
                        "symbolic commutant mode is limited to dim <= 3 (use --force)");
                std::vector<lkb::RepMatrix> mats;
                for (const auto& w : lkb::pureGenerators(spN, part))
                    mats.push_back(lkb::wordMatrix(w, space));
                int cd = lkb::commutantDimensionSymbolic(space.gs, mats);
                doc["dim"] = space.dim();
                doc["commutant_dim"] = cd;
                ok = cd == 1;
                doc["verdict"] = ok ? "simple certified" : "not certified";
                std::cout << "symbolic commutant dimension: " << cd << "\n";
            } else {
                auto rep = lkb::simplicityReport(spN, spL, part, spTrials, g.seed);
                doc["dim"] = rep.dim;
                doc["generators"] = rep.generators;
                json trials = json::array();
                std::cout << "simplicity: n=" << spN << " l=" << spL << " partition "
                          << part.str() << " dim " << rep.dim << "\n";
                for (const auto& t : rep.trials) {
                    json tj;
                    tj["seed_used"] = t.seedUsed;
                    json vals = json::array();
                    for (const auto& v : t.values) vals.push_back(v.get_str());
                    tj["values"] = std::move(vals);
                    tj["commutant_dim"] = t.commutantDim;
                    if (!t.note.empty()) tj["note"] = t.note;
                    trials.push_back(std::move(tj));
                    std::cout << "  trial seed " << t.seedUsed << ": commutant dim "
                              << t.commutantDim << "\n";
                }
                doc["trials"] = std::move(trials);
                ok = rep.simpleCertified;
                doc["verdict"] = ok ? "simple certified" : "not certified";
            }
            std::cout << "verdict: " << doc["verdict"].get<std::string>() << "\n";
            writeOut(g, doc);
            return ok ? 0 : kExitCheckFailed;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitUsage;
}
