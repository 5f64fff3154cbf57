#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "crowdrec/collab.hpp"
#include "fixtures.hpp"

using namespace crowdrec;
using namespace crowdrec::testing;

namespace {

Dataset three_worker_fixture() {
    // A in {T1,T2}, B in {T2,T3}, C in {T4}.
    Dataset ds;
    for (int i = 1; i <= 4; ++i) {
        add_task(ds, make_task("T" + std::to_string(i), "Code", {"Java"}, 100,
                               make_date(2014, 1, 1), 60));
    }
    ds.registrations.push_back(make_reg("A", "T1", make_date(2014, 1, 2)));
    ds.registrations.push_back(make_reg("A", "T2", make_date(2014, 1, 3)));
    ds.registrations.push_back(make_reg("B", "T2", make_date(2014, 1, 4)));
    ds.registrations.push_back(make_reg("B", "T3", make_date(2014, 1, 5)));
    ds.registrations.push_back(make_reg("C", "T4", make_date(2014, 1, 6)));
    for (const auto& w : {"A", "B", "C"}) ds.ratings[w] = 0;
    return ds;
}

}  // namespace

TEST_CASE("build_index derives collaborators from shared tasks") {
    const Dataset ds = three_worker_fixture();
    const CollaborationIndex index = build_index(ds);
    CHECK(index.collaborators.at("A") == std::set<std::string>{"B"});
    CHECK(index.collaborators.at("B") == std::set<std::string>{"A"});
    CHECK(index.collaborators.at("C").empty());
    CHECK(index.task_workers.at("T2") == std::set<std::string>{"A", "B"});
}

TEST_CASE("single worker has no collaborators") {
    Dataset ds;
    add_task(ds, make_task("T1", "Code", {"Java"}, 100, make_date(2014, 1, 1), 60));
    ds.registrations.push_back(make_reg("A", "T1", make_date(2014, 1, 2)));
    ds.ratings["A"] = 0;
    CHECK(build_index(ds).collaborators.at("A").empty());
}

TEST_CASE("all workers sharing one task collaborate pairwise") {
    Dataset ds;
    add_task(ds, make_task("T1", "Code", {"Java"}, 100, make_date(2014, 1, 1), 60));
    for (const auto& w : {"A", "B", "C", "D"}) {
        ds.registrations.push_back(make_reg(w, "T1", make_date(2014, 1, 2)));
        ds.ratings[w] = 0;
    }
    const CollaborationIndex index = build_index(ds);
    for (const auto& [worker, collabs] : index.collaborators) {
        CHECK(collabs.size() == 3);
        CHECK_FALSE(collabs.contains(worker));
    }
}

TEST_CASE("collaboration is symmetric and irreflexive") {
    const Dataset ds = three_worker_fixture();
    const CollaborationIndex index = build_index(ds);
    for (const auto& [i, collabs] : index.collaborators) {
        CHECK_FALSE(collabs.contains(i));
        for (const auto& j : collabs) {
            CHECK(index.collaborators.at(j).contains(i));
        }
    }
}

TEST_CASE("index is independent of registration row order") {
    Dataset ds = three_worker_fixture();
    Dataset reversed = ds;
    std::reverse(reversed.registrations.begin(), reversed.registrations.end());
    const CollaborationIndex a = build_index(ds);
    const CollaborationIndex b = build_index(reversed);
    CHECK(a.collaborators == b.collaborators);
    CHECK(a.worker_tasks == b.worker_tasks);
    CHECK(a.task_workers == b.task_workers);
}

TEST_CASE("potential_tasks is the collaborator difference within the window") {
    const Dataset ds = three_worker_fixture();
    const CollaborationIndex index = build_index(ds);
    const Date cutoff = make_date(2014, 1, 10);

    // B's T3 is open in the window and unregistered by A.
    CHECK(potential_tasks("A", index, cutoff, 14, ds) == std::set<std::string>{"T3"});
    // C has no collaborators.
    CHECK(potential_tasks("C", index, cutoff, 14, ds).empty());
    CHECK_THROWS_AS(potential_tasks("Z", index, cutoff, 14, ds), std::out_of_range);
}

TEST_CASE("potential_tasks never contains the worker's own tasks") {
    const Dataset ds = three_worker_fixture();
    const CollaborationIndex index = build_index(ds);
    const auto pool = potential_tasks("A", index, make_date(2014, 1, 10), 14, ds);
    for (const auto& t : pool) {
        CHECK_FALSE(index.worker_tasks.at("A").contains(t));
    }
}

TEST_CASE("collaborator tasks fully covered by the worker yield nothing") {
    Dataset ds;
    add_task(ds, make_task("T1", "Code", {"Java"}, 100, make_date(2014, 1, 1), 60));
    add_task(ds, make_task("T2", "Code", {"Java"}, 100, make_date(2014, 1, 1), 60));
    ds.registrations.push_back(make_reg("A", "T1", make_date(2014, 1, 2)));
    ds.registrations.push_back(make_reg("A", "T2", make_date(2014, 1, 3)));
    ds.registrations.push_back(make_reg("B", "T1", make_date(2014, 1, 4)));
    ds.ratings["A"] = ds.ratings["B"] = 0;
    const CollaborationIndex index = build_index(ds);
    CHECK(potential_tasks("A", index, make_date(2014, 1, 10), 14, ds).empty());
}

TEST_CASE("window filtering excludes closed and not-yet-open tasks") {
    Dataset ds;
    add_task(ds, make_task("TPAST", "Code", {"Java"}, 100, make_date(2014, 1, 1), 5));
    add_task(ds, make_task("TOPEN", "Code", {"Java"}, 100, make_date(2014, 1, 20), 10));
    add_task(ds, make_task("TFUTURE", "Code", {"Java"}, 100, make_date(2014, 3, 1), 10));
    add_task(ds, make_task("TSHARED", "Code", {"Java"}, 100, make_date(2014, 1, 1), 60));
    ds.registrations.push_back(make_reg("A", "TSHARED", make_date(2014, 1, 2)));
    ds.registrations.push_back(make_reg("B", "TSHARED", make_date(2014, 1, 2)));
    ds.registrations.push_back(make_reg("B", "TPAST", make_date(2014, 1, 2)));
    ds.registrations.push_back(make_reg("B", "TOPEN", make_date(2014, 1, 21)));
    ds.registrations.push_back(make_reg("B", "TFUTURE", make_date(2014, 3, 2)));
    ds.ratings["A"] = ds.ratings["B"] = 0;

    const CollaborationIndex index = build_index(ds);
    CHECK(potential_tasks("A", index, make_date(2014, 1, 20), 14, ds) ==
          std::set<std::string>{"TOPEN"});
}

TEST_CASE("adding a registration never removes a collaborator") {
    Dataset ds = three_worker_fixture();
    const auto before = build_index(ds).collaborators;
    ds.registrations.push_back(make_reg("C", "T2", make_date(2014, 1, 7)));
    const auto after = build_index(ds).collaborators;
    for (const auto& [worker, collabs] : before) {
        for (const auto& j : collabs) {
            CHECK(after.at(worker).contains(j));
        }
    }
}
