#include <doctest.h>

#include "dpcolor/generator.hpp"
#include "dpcolor/pipeline.hpp"
#include "dpcolor/plane_graph.hpp"
#include "dpcolor/rng.hpp"
#include "dpcolor/structure.hpp"
#include "fixtures.hpp"

using namespace dpc;
using namespace dpc::testing;

TEST_CASE("generated instances satisfy their postconditions") {
    Rng rng(1234);
    for (int round = 0; round < 25; ++round) {
        int n = 3 + rng.below_int(28);
        PlaneGraph g = gen_in_class(n, rng.next());
        CHECK(g.vertex_count() == n);
        CHECK(g.as_simple_graph().connected());
        CHECK(!class_check(g.as_simple_graph()));
        CHECK(g.outer().has_value());
        CHECK(g.vertex_count() - g.edge_count() + g.face_count() == 2);
    }
}

TEST_CASE("generation is deterministic per seed") {
    PlaneGraph a = gen_in_class(17, 99);
    PlaneGraph b = gen_in_class(17, 99);
    CHECK(format_plane_graph(a) == format_plane_graph(b));
    PlaneGraph c = gen_in_class(17, 100);
    CHECK(format_plane_graph(a) != format_plane_graph(c));
}

TEST_CASE("triangle-free outputs pass trivially") {
    // n = 3 gives the bare triangle, which is in-class (no 4-cycles at all)
    PlaneGraph g = gen_in_class(3, 5);
    CHECK(g.edge_count() == 3);
    CHECK(!class_check(g.as_simple_graph()));
}

TEST_CASE("pipeline batch: in-class instances all solve, extend and balance") {
    RunConfig config;
    config.seed = 7;
    config.instances = 6;
    config.assignments = 3;
    config.min_n = 6;
    config.max_n = 14;
    config.run_extend = true;
    config.run_audit = true;
    config.extend_precolorings = 2;

    BatchReport report = pipeline_verify(config);
    REQUIRE(report.instances.size() == 6);
    CHECK(report.all_ok);
    for (const auto& inst : report.instances) {
        CHECK(inst.class_pass);
        CHECK(inst.solves_attempted == 3);
        CHECK(inst.solves_ok == 3);
        CHECK(inst.extends_ok == inst.extends_attempted);
        CHECK(inst.discharge_conservation);
        CHECK(inst.discharge_eq3);
        CHECK(inst.errors.empty());
    }
}

TEST_CASE("pipeline reports are independent of scheduling") {
    RunConfig config;
    config.seed = 21;
    config.instances = 4;
    config.assignments = 2;
    config.min_n = 5;
    config.max_n = 10;
    BatchReport a = pipeline_verify(config);
    BatchReport b = pipeline_verify(config);
    REQUIRE(a.instances.size() == b.instances.size());
    for (size_t i = 0; i < a.instances.size(); ++i) {
        CHECK(a.instances[i].seed == b.instances[i].seed);
        CHECK(a.instances[i].n == b.instances[i].n);
        CHECK(a.instances[i].m == b.instances[i].m);
        CHECK(a.instances[i].solves_ok == b.instances[i].solves_ok);
    }
}
