#include "mutfan/cli.hpp"

#include <cstdlib>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "mutfan/fanviz.hpp"
#include "mutfan/gvec.hpp"
#include "mutfan/io.hpp"
#include "mutfan/mutmap.hpp"
#include "mutfan/pattern.hpp"
#include "mutfan/rank2.hpp"
#include "mutfan/specialize.hpp"

namespace mutfan {

namespace {

using Json = nlohmann::ordered_json;

int defaultDepth() {
    const char* env = std::getenv("MUTFAN_DEPTH");
    if (env == nullptr) return 8;
    std::string text(env);
    std::size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(text, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != text.size() || value < 0) {
        throw std::runtime_error("MUTFAN_DEPTH must be a nonnegative integer");
    }
    return value;
}

std::vector<int> parseSeq(const std::string& text) {
    std::vector<int> seq;
    std::string token;
    std::istringstream in(text);
    while (in >> token) {
        if (!token.empty() && token.back() == ',') token.pop_back();
        if (token.empty()) continue;
        std::size_t pos = 0;
        int value = 0;
        try {
            value = std::stoi(token, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != token.size()) {
            throw std::runtime_error("cannot parse direction \"" + token + "\"");
        }
        seq.push_back(value);
    }
    return seq;
}

RatVec parseVec(const std::string& text) {
    RatVec v;
    std::string token;
    std::istringstream in(text);
    while (in >> token) {
        if (!token.empty() && token.back() == ',') token.pop_back();
        if (token.empty()) continue;
        v.push_back(ratFromString(token));
    }
    return v;
}

Json jsonMatrix(const ExchangeMatrix& b) {
    Json rows = Json::array();
    for (int i = 0; i < b.size(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < b.size(); ++j) {
            row.push_back(b.entry(i, j).convert_to<long long>());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

void emit(std::ostream& out, const Json& doc) { out << doc.dump(2) << "\n"; }

}  // namespace

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact mutation fans, universal coefficients, and coefficient "
                 "specialization for cluster algebras of geometric type"};
    app.require_subcommand(1);
    std::function<int()> action;

    // mutate
    std::string mutateMatrix;
    std::vector<int> mutateDirs;
    std::string mutateSeqText;
    CLI::App* mutateCmd = app.add_subcommand("mutate", "mutate a matrix along directions");
    mutateCmd->add_option("--matrix", mutateMatrix, "matrix file")
        ->required()
        ->check(CLI::ExistingFile);
    mutateCmd->add_option("-k,--direction", mutateDirs, "mutation direction, repeatable");
    mutateCmd->add_option("--seq", mutateSeqText, "direction sequence, e.g. \"1 2 1\"");
    mutateCmd->callback([&] {
        action = [&]() {
            ExtendedExchangeMatrix m = readMatrixFile(mutateMatrix);
            std::vector<int> seq = parseSeq(mutateSeqText);
            seq.insert(seq.end(), mutateDirs.begin(), mutateDirs.end());
            out << writeMatrixText(mutateSeq(m, seq));
            return 0;
        };
    });

    // class
    std::string classMatrix;
    std::size_t classCap = 64;
    bool classPerm = false;
    CLI::App* classCmd = app.add_subcommand("class", "enumerate the mutation class");
    classCmd->add_option("--matrix", classMatrix, "matrix file")
        ->required()
        ->check(CLI::ExistingFile);
    classCmd->add_option("--cap", classCap, "stop after this many matrices");
    classCmd->add_flag("--perm", classPerm, "identify matrices up to simultaneous permutation");
    classCmd->callback([&] {
        action = [&]() {
            ExchangeMatrix b = readMatrixFile(classMatrix).base();
            MutationClassResult result =
                classPerm ? mutationClassUpToPermutation(b, classCap) : mutationClass(b, classCap);
            Json doc;
            doc["count"] = result.matrices.size();
            doc["truncated"] = result.truncated;
            Json list = Json::array();
            for (const ExchangeMatrix& m : result.matrices) list.push_back(jsonMatrix(m));
            doc["matrices"] = std::move(list);
            emit(out, doc);
            return 0;
        };
    });

    // eta
    std::string etaMatrix, etaSeqText, etaVecText;
    bool etaInverse = false;
    CLI::App* etaCmd = app.add_subcommand("eta", "apply a mutation map to a vector");
    etaCmd->add_option("--matrix", etaMatrix, "matrix file")
        ->required()
        ->check(CLI::ExistingFile);
    etaCmd->add_option("--seq", etaSeqText, "direction sequence");
    etaCmd->add_option("--vector", etaVecText, "vector, e.g. \"1/2 -3 0\"")->required();
    etaCmd->add_flag("--inverse", etaInverse, "apply the inverse map instead");
    etaCmd->callback([&] {
        action = [&]() {
            ExchangeMatrix b = readMatrixFile(etaMatrix).base();
            std::vector<int> seq = parseSeq(etaSeqText);
            RatVec v = parseVec(etaVecText);
            RatVec image;
            if (etaInverse) {
                std::vector<int> reversed(seq.rbegin(), seq.rend());
                image = etaSeq(mutateSeq(b, seq), reversed, v);
            } else {
                image = etaSeq(b, seq, v);
            }
            Json doc;
            Json coords = Json::array();
            for (const Rat& x : image) coords.push_back(ratToString(x));
            doc["image"] = std::move(coords);
            emit(out, doc);
            return 0;
        };
    });

    // coherent
    std::string cohMatrix, cohRelation;
    int cohDepth = 0;
    bool cohShortcut = false;
    int cohThreads = 1;
    CLI::App* cohCmd = app.add_subcommand("coherent", "check a linear relation for coherence");
    cohCmd->add_option("--matrix", cohMatrix, "matrix file")
        ->required()
        ->check(CLI::ExistingFile);
    cohCmd->add_option("--relation", cohRelation, "relation file")
        ->required()
        ->check(CLI::ExistingFile);
    CLI::Option* cohDepthOpt = cohCmd->add_option("--depth", cohDepth, "walk depth");
    cohCmd->add_flag("--verify-shortcut", cohShortcut,
                     "evaluate the piecewise condition even when implied");
    cohCmd->add_option("--threads", cohThreads, "parallel sequence evaluation");
    cohCmd->callback([&] {
        action = [&]() {
            ExchangeMatrix b = readMatrixFile(cohMatrix).base();
            LinearRelation rel = readRelationFile(cohRelation);
            int depth = cohDepthOpt->count() > 0 ? cohDepth : defaultDepth();
            CoherenceVerdict verdict = checkBCoherent(b, rel, depth, cohShortcut, cohThreads);
            Json doc;
            doc["holds"] = verdict.holds;
            doc["depth"] = verdict.depth;
            if (!verdict.holds) {
                doc["refutedAt"] = verdict.refutedAt;
                doc["condition"] = verdict.failedCondition == CoherenceVerdict::Condition::Linear
                                       ? "linear"
                                       : "piecewise";
            }
            emit(out, doc);
            return verdict.holds ? 0 : 1;
        };
    });

    // gvec
    std::string gvecMatrix;
    int gvecDepth = 0;
    CLI::App* gvecCmd = app.add_subcommand("gvec", "walk the g-vector families");
    gvecCmd->add_option("--matrix", gvecMatrix, "matrix file")
        ->required()
        ->check(CLI::ExistingFile);
    CLI::Option* gvecDepthOpt = gvecCmd->add_option("--depth", gvecDepth, "walk depth");
    gvecCmd->callback([&] {
        action = [&]() {
            ExchangeMatrix b = readMatrixFile(gvecMatrix).base();
            int depth = gvecDepthOpt->count() > 0 ? gvecDepth : defaultDepth();
            GVectorFanResult fan = gVectorFan(b, depth);
            Json doc;
            doc["depth"] = depth;
            doc["closed"] = fan.closed;
            Json families = Json::array();
            for (const auto& cone : fan.cones) {
                Json rows = Json::object();
                for (std::size_t i = 0; i < cone.size(); ++i) {
                    Json row = Json::array();
                    for (const Int& x : cone[i]) row.push_back(ratToString(Rat(x)));
                    rows["g" + std::to_string(i + 1)] = std::move(row);
                }
                families.push_back(std::move(rows));
            }
            doc["families"] = std::move(families);
            emit(out, doc);
            return 0;
        };
    });

    // universal rank2
    long long uniA = 0, uniB = 0;
    int uniCount = 8;
    bool uniLimitExact = false;
    CLI::App* universalCmd = app.add_subcommand("universal", "universal coefficient matrices");
    universalCmd->require_subcommand(1);
    CLI::App* rank2Cmd = universalCmd->add_subcommand("rank2", "rank-2 universal coefficients");
    rank2Cmd->add_option("-a", uniA, "entry b12")->required();
    rank2Cmd->add_option("-b", uniB, "entry b21")->required();
    rank2Cmd->add_option("--count", uniCount, "rows kept per infinite family");
    rank2Cmd->add_flag("--limit-exact", uniLimitExact, "also print exact limit rays");
    rank2Cmd->callback([&] {
        action = [&]() {
            Rank2Universal uni = universalRank2(uniA, uniB, uniCount);
            out << writeMatrixText(toExtendedMatrix(uni));
            if (uniLimitExact) {
                for (std::size_t i = 0; i < uni.limitRows.size(); ++i) {
                    std::string label =
                        uni.limitRows.size() == 1 ? "lim" : "r" + std::to_string(i + 1);
                    out << label << " = (" << uni.limitRows[i][0].toString() << ", "
                        << uni.limitRows[i][1].toString() << ")\n";
                }
            }
            return 0;
        };
    });

    // specialize
    std::string specUniversal, specTarget;
    int specDepth = 0;
    bool specInteger = false, specPositive = false;
    CLI::App* specCmd = app.add_subcommand("specialize", "solve for a coefficient specialization");
    specCmd->add_option("--universal", specUniversal, "universal matrix file")
        ->required()
        ->check(CLI::ExistingFile);
    specCmd->add_option("--target", specTarget, "target matrix file")
        ->required()
        ->check(CLI::ExistingFile);
    CLI::Option* specDepthOpt = specCmd->add_option("--depth", specDepth, "walk depth");
    specCmd->add_flag("--integer", specInteger, "require integer weights");
    specCmd->add_flag("--positive", specPositive, "require nonnegative weights");
    specCmd->callback([&] {
        action = [&]() {
            SpecializationProblem problem{readMatrixFile(specUniversal),
                                          readMatrixFile(specTarget),
                                          specDepthOpt->count() > 0 ? specDepth : defaultDepth()};
            std::optional<SpecializationSolution> solved;
            try {
                solved = solveSpecialization(problem,
                                             specInteger ? TropLinearMap::Ring::Integers
                                                         : TropLinearMap::Ring::Rationals,
                                             specPositive);
            } catch (const std::invalid_argument& e) {
                err << "no specialization: " << e.what() << "\n";
                return 1;
            }
            const SpecializationSolution& sol = *solved;
            SpecializationReport report =
                verifySpecializationConditions(sol, problem, problem.depth);
            Json doc;
            Json rows = Json::object();
            for (const RowSupport& support : sol.perRowSupport) {
                Json weights = Json::object();
                for (const auto& [label, weight] : support.support) {
                    weights[label] = ratToString(weight);
                }
                rows[support.targetLabel] = std::move(weights);
            }
            doc["rows"] = std::move(rows);
            doc["report"] = report.toString();
            emit(out, doc);
            return report.ok ? 0 : 1;
        };
    });

    // pattern
    std::string patMatrix, patSeqText;
    int patPeriod = 0;
    CLI::App* patCmd = app.add_subcommand("pattern", "walk a symbolic cluster pattern");
    patCmd->add_option("--matrix", patMatrix, "extended matrix file")
        ->required()
        ->check(CLI::ExistingFile);
    patCmd->add_option("--seq", patSeqText, "direction sequence, e.g. \"1 2 1 2\"");
    CLI::Option* patPeriodOpt =
        patCmd->add_option("--period", patPeriod, "report the period along the cyclic sequence");
    patCmd->callback([&] {
        action = [&]() {
            ExtendedExchangeMatrix m = readMatrixFile(patMatrix);
            std::vector<int> seq = parseSeq(patSeqText);
            Seed s0 = initialSeed(m);
            if (patPeriodOpt->count() > 0) {
                std::optional<int> period = detectPeriod(s0, seq, patPeriod);
                out << "period: " << (period ? std::to_string(*period) : "none") << "\n";
                return 0;
            }
            std::vector<Seed> walk = walkPattern(s0, seq);
            const int n = m.base().size();
            for (std::size_t t = 0; t < walk.size(); ++t) {
                if (t > 0) out << "\n";
                out << "t" << t << ":\n";
                for (int j = 1; j <= n; ++j) {
                    out << "  y" << j << " = " << seedCoefficient(walk[t], j).toString() << "\n";
                }
                for (int j = 1; j <= n; ++j) {
                    out << "  X" << j << " = "
                        << walk[t].cluster[static_cast<std::size_t>(j - 1)].toString() << "\n";
                }
            }
            return 0;
        };
    });

    // fan
    std::string fanMatrix, fanSvg;
    int fanDepth = 0, fanThreads = 1;
    CLI::App* fanCmd = app.add_subcommand("fan", "approximate the mutation fan");
    fanCmd->add_option("--matrix", fanMatrix, "matrix file")
        ->required()
        ->check(CLI::ExistingFile);
    CLI::Option* fanDepthOpt = fanCmd->add_option("--depth", fanDepth, "walk depth");
    fanCmd->add_option("--svg", fanSvg, "also render a stereographic projection to this file");
    fanCmd->add_option("--threads", fanThreads, "parallel sequence evaluation");
    fanCmd->callback([&] {
        action = [&]() {
            ExchangeMatrix b = readMatrixFile(fanMatrix).base();
            int depth = fanDepthOpt->count() > 0 ? fanDepth : defaultDepth();
            FanApproximation fan = approximateFan(b, depth, fanThreads);
            out << writeWallsText(fan);
            if (!fanSvg.empty()) renderStereographic(fan, fanSvg);
            return 0;
        };
    });

    std::vector<const char*> argv{"mutfan"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        return action ? action() : 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace mutfan
