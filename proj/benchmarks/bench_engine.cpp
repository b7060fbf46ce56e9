#include "ontofm/graph.hpp"
#include "ontofm/ontology.hpp"
#include "ontofm/search.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace ontofm;

namespace {

// People, projects and topics linked to files; a desk-sized personal ontology.
Ontology synthetic(std::size_t files) {
    std::mt19937 rng(42);
    std::vector<Concept> concepts = {{ConceptId{"Person"}, "Person"},
                                     {ConceptId{"Project"}, "Project"},
                                     {ConceptId{"Topic"}, "Topic"},
                                     {ConceptId{"File"}, "File"}};
    std::vector<Instance> instances;
    std::vector<InstanceId> entities;
    const auto others = files / 10 + 1;
    for (std::size_t i = 0; i < others; ++i) {
        for (const char* c : {"Person", "Project", "Topic"}) {
            InstanceId id{std::string(c) + std::to_string(i)};
            instances.push_back(Instance{id, std::string(c) + " number " + std::to_string(i), ConceptId{c}, {}});
            entities.push_back(id);
        }
    }
    std::vector<Relation> relations;
    for (std::size_t i = 0; i < files; ++i) {
        InstanceId id{"file" + std::to_string(i)};
        Instance f{id, "document-" + std::to_string(i) + ".pdf", ConceptId{"File"}, {}};
        f.properties.emplace("path", Path{"/home/u/docs/d" + std::to_string(i % 20) + "/document-" +
                                          std::to_string(i) + ".pdf"});
        instances.push_back(std::move(f));
        for (int k = 0; k < 3; ++k) {
            relations.push_back(Relation{id, "tag", entities[rng() % entities.size()]});
        }
    }
    return Ontology::build(std::move(concepts), std::move(instances), std::move(relations));
}

const Ontology& shared(std::size_t files) {
    static std::map<std::size_t, Ontology> cache;
    auto it = cache.find(files);
    if (it == cache.end()) it = cache.emplace(files, synthetic(files)).first;
    return it->second;
}

void BM_Suggest(benchmark::State& state) {
    const auto& o = shared(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(suggest(o, "num"));
        benchmark::DoNotOptimize(suggest(o, "doc"));
    }
}
BENCHMARK(BM_Suggest)->Arg(1000)->Arg(10000);

void BM_Search(benchmark::State& state) {
    const auto& o = shared(static_cast<std::size_t>(state.range(0)));
    Query q;
    q.terms = {InstanceId{"Person0"}, InstanceId{"Project1"}, InstanceId{"Topic2"}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(search(o, q));
    }
}
BENCHMARK(BM_Search)->Arg(1000)->Arg(10000);

void BM_SearchWithScope(benchmark::State& state) {
    const auto& o = shared(static_cast<std::size_t>(state.range(0)));
    const std::vector<std::string> folders = {"/home/u/docs/d3", "/home/u/docs/d7"};
    Query q;
    q.terms = {InstanceId{"Person0"}, InstanceId{"Project1"}, InstanceId{"Topic2"}};
    q.scope = Scope::folders(folders);
    q.constraints = {Constraint{ConceptId{"Person"}, "label", ConstraintOp::Contains, {Text{"number"}}}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(search(o, q));
    }
}
BENCHMARK(BM_SearchWithScope)->Arg(1000)->Arg(10000);

void BM_ToggleRoundTrip(benchmark::State& state) {
    const auto& o = shared(static_cast<std::size_t>(state.range(0)));
    const std::vector<InstanceId> terms = {InstanceId{"Project1"}};
    const auto s = initial_graph(o, terms);
    const auto node = *std::next(s.visible.begin());
    for (auto _ : state) {
        benchmark::DoNotOptimize(toggle(o, toggle(o, s, node), node));
    }
}
BENCHMARK(BM_ToggleRoundTrip)->Arg(1000)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
