#include "ontofm/constraint.hpp"
#include "ontofm/error.hpp"
#include "ontofm/search.hpp"

#include "support/fixture.hpp"
#include "support/oracles.hpp"
#include "support/random_ontology.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace ontofm;
using ontofm::testing::tiny;
namespace gen = ontofm::testing;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "expected an ontofm::Error";
    return ErrorCode::IoError;
}

std::vector<oracle::Hit> hits(const std::vector<ScoredFile>& results) {
    std::vector<oracle::Hit> out;
    for (const auto& r : results) {
        std::vector<std::string> matched;
        for (const auto& t : r.matched_terms) matched.push_back(t.str());
        out.push_back(oracle::Hit{r.file->id.str(), r.score, matched});
    }
    return out;
}

std::vector<std::string> file_ids(const std::vector<ScoredFile>& results) {
    std::vector<std::string> out;
    for (const auto& r : results) out.push_back(r.file->id.str());
    return out;
}

Query terms(std::initializer_list<const char*> ids) {
    Query q;
    for (const auto* id : ids) q.terms.emplace_back(id);
    return q;
}

Constraint date_before(const char* date) {
    return Constraint{ConceptId{"Date"}, "value", ConstraintOp::Before, {*Date::parse(date)}};
}

}  // namespace

TEST(Suggest, PrefixFirstThenSubstring) {
    const auto al = suggest(tiny(), "al");
    ASSERT_EQ(al.size(), 1u);
    EXPECT_EQ(al[0], (Suggestion{InstanceId{"p1"}, "Alice", ConceptId{"Person"}, MatchKind::Prefix}));

    const auto p = suggest(tiny(), "p");
    ASSERT_EQ(p.size(), 2u);
    EXPECT_EQ(p[0].instance, InstanceId{"f1"});
    EXPECT_EQ(p[0].match_kind, MatchKind::Prefix);
    EXPECT_EQ(p[1].instance, InstanceId{"prj1"});
    EXPECT_EQ(p[1].match_kind, MatchKind::Substring);

    EXPECT_EQ(suggest(tiny(), "ALI"), al);
    EXPECT_EQ(suggest(tiny(), "2011-0").size(), 2u);
}

TEST(Suggest, EmptyInputAndLimits) {
    EXPECT_TRUE(suggest(tiny(), "").empty());
    EXPECT_TRUE(suggest(tiny(), "zzz").empty());
    EXPECT_EQ(suggest(tiny(), "t", 1).size(), 1u);
    EXPECT_EQ(code_of([] { suggest(tiny(), "a", 0); }), ErrorCode::InvalidArgument);
}

TEST(Suggest, MatchesNaiveScanOnRandomLabelSets) {
    std::mt19937 rng(77);
    const std::string alphabet = "abAB. -";
    for (int round = 0; round < 60; ++round) {
        std::vector<Concept> cs = {{ConceptId{"T"}, "T"}};
        std::vector<Instance> is;
        const auto n = rng() % 500 + 1;
        for (std::size_t i = 0; i < n; ++i) {
            std::string label;
            for (auto len = rng() % 6 + 1; len > 0; --len) label += alphabet[rng() % alphabet.size()];
            is.push_back(Instance{InstanceId{"x" + std::to_string(i)}, label, ConceptId{"T"}, {}});
        }
        const auto o = Ontology::build(cs, is, {});
        for (int q = 0; q < 10; ++q) {
            std::string typed;
            for (auto len = rng() % 3 + 1; len > 0; --len) typed += alphabet[rng() % alphabet.size()];
            const auto limit = rng() % 20 + 1;
            EXPECT_EQ(suggest(o, typed, limit), oracle::suggest(o, typed, limit)) << typed;
        }
    }
}

TEST(Search, RankingExample) {
    const auto r = search(tiny(), terms({"p1", "prj1"}));
    EXPECT_EQ(hits(r), (std::vector<oracle::Hit>{{"f1", 2, {"p1", "prj1"}},
                                                 {"f2", 1, {"prj1"}},
                                                 {"f3", 1, {"prj1"}}}));
}

TEST(Search, DuplicateTermsCountOnce) {
    EXPECT_EQ(hits(search(tiny(), terms({"p1", "p1", "prj1"}))), hits(search(tiny(), terms({"p1", "prj1"}))));
}

TEST(Search, NoTermsNoResults) {
    EXPECT_TRUE(search(tiny(), Query{}).empty());
    EXPECT_TRUE(search(tiny(), terms({"p2", "d2"})).size() == 2);
}

TEST(Search, FileTermMatchesOnlyItself) {
    EXPECT_EQ(file_ids(search(tiny(), terms({"f1"}))), (std::vector<std::string>{"f1"}));
}

TEST(Search, UnknownTermIsAnError) {
    EXPECT_EQ(code_of([] { search(tiny(), terms({"nobody"})); }), ErrorCode::UnknownInstance);
}

TEST(Search, ScopeRestrictsRecursively) {
    const std::vector<std::string> papers = {"/home/u/docs/papers"};
    auto q = terms({"prj1"});
    q.scope = Scope::folders(papers);
    EXPECT_EQ(file_ids(search(tiny(), q)), (std::vector<std::string>{"f3", "f1"}));

    const std::vector<std::string> docs = {"/home/u/docs/"};
    q.scope = Scope::folders(docs);
    EXPECT_EQ(search(tiny(), q).size(), 3u);

    const std::vector<std::string> other = {"/tmp"};
    q.scope = Scope::folders(other);
    EXPECT_TRUE(search(tiny(), q).empty());
}

TEST(Search, ScopeRejectsBadFolders) {
    const std::vector<std::string> none;
    const std::vector<std::string> relative = {"docs"};
    EXPECT_EQ(code_of([&] { Scope::folders(none); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([&] { Scope::folders(relative); }), ErrorCode::InvalidArgument);
}

TEST(Search, DateConstraintExample) {
    auto q = terms({"prj1"});
    q.constraints.push_back(date_before("2011-04-01"));
    const auto r = search(tiny(), q);
    EXPECT_EQ(file_ids(r), (std::vector<std::string>{"f1"}));
    EXPECT_EQ(r[0].score, 1u);
}

TEST(Search, InvalidConstraintsRejected) {
    auto q = terms({"prj1"});
    q.constraints.push_back(Constraint{ConceptId{"Nope"}, "value", ConstraintOp::Eq, {Text{"x"}}});
    EXPECT_EQ(code_of([&] { search(tiny(), q); }), ErrorCode::InvalidConstraint);
    q.constraints = {Constraint{ConceptId{"Date"}, "colour", ConstraintOp::Eq, {Text{"x"}}}};
    EXPECT_EQ(code_of([&] { search(tiny(), q); }), ErrorCode::InvalidConstraint);
    q.constraints = {Constraint{ConceptId{"Date"}, "value", ConstraintOp::Lt, {Number{3}}}};
    EXPECT_EQ(code_of([&] { search(tiny(), q); }), ErrorCode::InvalidConstraint);
    q.constraints = {Constraint{ConceptId{"Date"}, "value", ConstraintOp::Before, {Text{"x"}}}};
    EXPECT_EQ(code_of([&] { search(tiny(), q); }), ErrorCode::InvalidConstraint);
}

TEST(Search, MatchesOracleOnRandomOntologies) {
    std::mt19937 rng(2024);
    for (int round = 0; round < 60; ++round) {
        const auto o = gen::random_ontology(rng);
        for (int k = 0; k < 10; ++k) {
            const auto q = gen::random_query(rng, o);
            const auto got = search(o, q);
            EXPECT_EQ(hits(got), oracle::search(o, q));
            for (const auto& r : got) {
                EXPECT_GT(r.score, 0u);
                EXPECT_EQ(r.score, r.matched_terms.size());
            }
        }
    }
}

TEST(Search, FiltersOnlyShrinkAndKeepScores) {
    std::mt19937 rng(99);
    for (int round = 0; round < 60; ++round) {
        const auto o = gen::random_ontology(rng);
        const auto q = gen::random_query(rng, o, /*with_filters=*/false);
        const auto base = search(o, q);
        std::map<std::string, std::size_t> score;
        for (const auto& r : base) score[r.file->id.str()] = r.score;

        auto filtered = q;
        filtered.constraints.push_back(gen::random_constraint(rng));
        const std::vector<std::string> folders = {gen::pick(rng, gen::kRandomFolders)};
        if (rng() % 2) filtered.scope = Scope::folders(folders);
        const auto narrowed = search(o, filtered);
        EXPECT_LE(narrowed.size(), base.size());
        for (const auto& r : narrowed) {
            ASSERT_TRUE(score.contains(r.file->id.str()));
            EXPECT_EQ(score[r.file->id.str()], r.score);
        }
    }
}

TEST(Search, AddingTermsNeverLowersScores) {
    std::mt19937 rng(5);
    for (int round = 0; round < 60; ++round) {
        const auto o = gen::random_ontology(rng);
        auto q = gen::random_query(rng, o, false);
        std::map<std::string, std::size_t> before;
        for (const auto& r : search(o, q)) before[r.file->id.str()] = r.score;
        q.terms.push_back(o.instances()[rng() % o.instances().size()].id);
        std::map<std::string, std::size_t> after;
        for (const auto& r : search(o, q)) after[r.file->id.str()] = r.score;
        for (const auto& [id, s] : before) {
            ASSERT_TRUE(after.contains(id));
            EXPECT_GE(after[id], s);
        }
    }
}

TEST(ApplyConstraint, KeepsInputOrder) {
    const auto& o = tiny();
    const std::vector<const Instance*> files = {o.find_instance(InstanceId{"f3"}), o.find_instance(InstanceId{"f2"}),
                                                o.find_instance(InstanceId{"f1"})};
    const auto after_march = Constraint{ConceptId{"Date"}, "value", ConstraintOp::After, {*Date::parse("2011-03-15")}};
    EXPECT_EQ(gen::ids(apply_constraint(o, files, after_march)), (std::vector<std::string>{"f2"}));
    const auto on = Constraint{ConceptId{"Date"}, "value", ConstraintOp::On, {*Date::parse("2011-03-15")}};
    EXPECT_EQ(gen::ids(apply_constraint(o, files, on)), (std::vector<std::string>{"f1"}));
    const auto between = Constraint{
        ConceptId{"Date"}, "value", ConstraintOp::Between, {*Date::parse("2011-03-15"), *Date::parse("2011-06-20")}};
    EXPECT_EQ(gen::ids(apply_constraint(o, files, between)), (std::vector<std::string>{"f2", "f1"}));
    const auto bob = Constraint{ConceptId{"Person"}, "label", ConstraintOp::Eq, {Text{"bob"}}};
    EXPECT_EQ(gen::ids(apply_constraint(o, files, bob)), (std::vector<std::string>{"f3"}));
}

TEST(ApplyConstraint, IsSubsetOnRandomOntologies) {
    std::mt19937 rng(31);
    for (int round = 0; round < 50; ++round) {
        const auto o = gen::random_ontology(rng);
        const auto files = o.instances_of(ConceptId{"File"});
        const auto c = gen::random_constraint(rng);
        const auto kept = apply_constraint(o, files, c);
        std::size_t cursor = 0;
        for (const auto* f : kept) {
            while (cursor < files.size() && files[cursor] != f) ++cursor;
            ASSERT_LT(cursor, files.size()) << "not an ordered subset";
            bool any = false;
            for (const auto& i : o.instances()) {
                any = any || (i.concept_id == c.concept_id && oracle::directly_related(o, i.id, f->id) &&
                              oracle::satisfies(i, c));
            }
            EXPECT_TRUE(any);
        }
    }
}

TEST(Satisfies, Semantics) {
    Instance person{InstanceId{"x"}, "Carol", ConceptId{"Person"}, {}};
    person.properties.emplace("age", Number{40});
    person.properties.emplace("city", Text{"Berlin"});
    const auto c = [](const char* prop, ConstraintOp op, TypedValue v) {
        return Constraint{ConceptId{"Person"}, prop, op, {v}};
    };
    EXPECT_TRUE(satisfies(person, c("city", ConstraintOp::Eq, Text{"BERLIN"})));
    EXPECT_TRUE(satisfies(person, c("city", ConstraintOp::Contains, Text{"erl"})));
    EXPECT_TRUE(satisfies(person, c("age", ConstraintOp::Gt, Number{39.5})));
    EXPECT_FALSE(satisfies(person, c("age", ConstraintOp::Lt, Number{40})));
    EXPECT_TRUE(satisfies(person, c("age", ConstraintOp::Eq, Number{40})));
    EXPECT_TRUE(satisfies(person, c("age", ConstraintOp::Eq, Text{"40"})));
    EXPECT_TRUE(satisfies(person, c("label", ConstraintOp::Eq, Text{"carol"})));
    EXPECT_FALSE(satisfies(person, c("height", ConstraintOp::Gt, Number{1})));
    EXPECT_FALSE(satisfies(person, c("city", ConstraintOp::Lt, Number{1})));
}

TEST(ParseConstraint, Forms) {
    EXPECT_EQ(parse_constraint("Date.value before 2011-04-01"), date_before("2011-04-01"));
    EXPECT_EQ(parse_constraint("Person.age > 30"),
              (Constraint{ConceptId{"Person"}, "age", ConstraintOp::Gt, {Number{30}}}));
    EXPECT_EQ(parse_constraint("Person.label = \"42\""),
              (Constraint{ConceptId{"Person"}, "label", ConstraintOp::Eq, {Text{"42"}}}));
    EXPECT_EQ(parse_constraint("Person.label contains li"),
              (Constraint{ConceptId{"Person"}, "label", ConstraintOp::Contains, {Text{"li"}}}));
    const auto between = parse_constraint("Date.value between(2011-01-01, 2011-12-31)");
    EXPECT_EQ(between.op, ConstraintOp::Between);
    EXPECT_EQ(between.values.size(), 2u);
    EXPECT_EQ(parse_constraint(format_constraint(between)), between);
    EXPECT_TRUE(std::holds_alternative<Path>(infer_value("/a/b")));
    EXPECT_TRUE(std::holds_alternative<Date>(infer_value("2011-02-03")));
    EXPECT_TRUE(std::holds_alternative<Text>(infer_value("2011-02-30")));
}

TEST(ParseConstraint, Errors) {
    for (const char* bad : {"Date.value ≈ x", "Date value before 2011-01-01", "Date.value before yesterday",
                            "Date.value between(2011-12-31, 2011-01-01)", "Person.age > old", ".x = 1", ""}) {
        EXPECT_EQ(code_of([&] { parse_constraint(bad); }), ErrorCode::InvalidConstraint) << bad;
    }
}

TEST(InScope, RecursiveContainment) {
    const auto& f1 = tiny().instance(InstanceId{"f1"});
    EXPECT_TRUE(in_scope(f1, Scope::all()));
    const std::vector<std::string> home = {"/home"};
    const std::vector<std::string> self = {"/home/u/docs/papers/paper-draft.pdf"};
    const std::vector<std::string> sibling = {"/home/u/docs/pap"};
    EXPECT_TRUE(in_scope(f1, Scope::folders(home)));
    EXPECT_FALSE(in_scope(f1, Scope::folders(self)));
    EXPECT_FALSE(in_scope(f1, Scope::folders(sibling)));
    EXPECT_FALSE(in_scope(tiny().instance(InstanceId{"p1"}), Scope::folders(home)));
}

TEST(ConceptsForFolders, GroupsRelatedInstances) {
    const std::vector<std::string> papers = {"/home/u/docs/papers"};
    const auto groups = concepts_for_folders(tiny(), papers);
    const std::map<ConceptId, std::vector<InstanceId>> expected = {
        {ConceptId{"Date"}, {InstanceId{"d1"}}},
        {ConceptId{"Person"}, {InstanceId{"p1"}, InstanceId{"p2"}}},
        {ConceptId{"Project"}, {InstanceId{"prj1"}}},
    };
    EXPECT_EQ(groups, expected);
    const std::vector<std::string> empty = {"/nowhere"};
    EXPECT_TRUE(concepts_for_folders(tiny(), empty).empty());
}
