#include <gtest/gtest.h>

#include <unordered_map>

#include "support/oracles.hpp"

using namespace modlang;
using enum Direction;

namespace {

const FunctorDesc X = FunctorDesc::rec();
const FunctorDesc U = FunctorDesc::atom(BaseSet::Unit);

} // namespace

TEST(PathTarget, Refl) { EXPECT_EQ(path_target(ContainsPath(shapes::fexpr())), shapes::fexpr()); }

TEST(PathTarget, LiftPaths) {
    EXPECT_EQ(path_target(ContainsPath(shapes::fexpr(), {Right})), shapes::array());
    EXPECT_EQ(path_target(ContainsPath(shapes::fexpr(), {Left, Left, Left})), FunctorDesc::atom(BaseSet::Nat));
    EXPECT_EQ(path_target(lifts::option()), shapes::option());
    EXPECT_EQ(path_target(lifts::sum()), shapes::sum());
    EXPECT_EQ(path_target(lifts::array()), shapes::array());
    EXPECT_EQ(path_target(lifts::nat()), shapes::nat());
}

TEST(PathTarget, MalformedPathThrows) {
    ContainsPath bad(shapes::fexpr(), {Left, Left, Left, Left});
    EXPECT_FALSE(well_formed(bad));
    EXPECT_THROW(path_target(bad), MalformedPath);
    EXPECT_THROW(upcast(bad, Payload::nat(1)), MalformedPath);
    EXPECT_THROW(path_target(ContainsPath(X * X, {Left})), MalformedPath);
}

TEST(Upcast, NatSpine) {
    EXPECT_EQ(upcast(lifts::nat(), Payload::nat(6)).node(), Payload::inl(Payload::inl(Payload::inl(Payload::nat(6)))));
}

TEST(Upcast, SumSpine) {
    auto pair = Payload::pair(Payload::slot(enat(1)), Payload::slot(enat(2)));
    EXPECT_EQ(upcast(ContainsPath(shapes::fexpr(), {Right, Left}), pair).node(), Payload::inl(Payload::inr(pair)));
}

TEST(Upcast, ReflIsInn) {
    auto p = Payload::inr(Payload::unit());
    EXPECT_EQ(upcast(ContainsPath(X + U), p).node(), p);
}

TEST(Upcast, ShapeMismatchThrows) {
    EXPECT_THROW(upcast(lifts::nat(), Payload::unit()), ShapeError);
    EXPECT_THROW(upcast(lifts::sum(), Payload::slot(enat(0))), ShapeError);
}

TEST(Downcast, Examples) {
    EXPECT_EQ(downcast(lifts::nat(), enat(6)), Payload::nat(6));
    EXPECT_FALSE(downcast(lifts::array(), enat(6)));
    auto a = enat(1), b = nil();
    EXPECT_EQ(downcast(lifts::sum(), plus(a, b)), Payload::pair(Payload::slot(a), Payload::slot(b)));
}

TEST(Downcast, EveryOtherPathRejectsANat) {
    for (const auto& path : all_paths(shapes::fexpr())) {
        if (comparable(path, lifts::nat())) continue;
        EXPECT_FALSE(downcast(path, enat(6))) << to_string(path);
    }
}

TEST(AllPaths, CoversFExpr) {
    auto paths = all_paths(shapes::fexpr());
    // Sum nodes in FExpr: 3 at the top, one in option, two in array.
    EXPECT_EQ(paths.size(), 13u);
    for (const auto& p : {lifts::nat(), lifts::option(), lifts::sum(), lifts::array()})
        EXPECT_NE(std::find(paths.begin(), paths.end(), p), paths.end());
    for (const auto& p : paths) EXPECT_TRUE(well_formed(p));
}

TEST(Comparable, PrefixWalks) {
    ContainsPath refl(shapes::fexpr()), left(shapes::fexpr(), {Left});
    EXPECT_TRUE(comparable(refl, lifts::nat()));
    EXPECT_TRUE(comparable(left, lifts::sum()));
    EXPECT_FALSE(comparable(lifts::sum(), lifts::option()));
    EXPECT_FALSE(comparable(lifts::array(), lifts::nat()));
}

TEST(LazyCoercion, CoerceIsApply) {
    auto p = some_payload(enat(3));
    LazyCoercion c(Injection{lifts::option()}, p);
    EXPECT_EQ(c.payload(), p);
    EXPECT_EQ(coerce(c), upcast(lifts::option(), p));
    EXPECT_EQ(coerce(c), some(enat(3)));
}

TEST(LazyCoercion, RejectsInvalidPayload) {
    EXPECT_THROW(LazyCoercion(Injection{lifts::nat()}, Payload::unit()), ShapeError);
}

TEST(LazyCoercion, ComponentwiseEquality) {
    LazyCoercion a(Injection{lifts::nat()}, Payload::nat(1)), b(Injection{lifts::nat()}, Payload::nat(1));
    LazyCoercion c(Injection{lifts::nat()}, Payload::nat(2));
    EXPECT_EQ(a, b);
    EXPECT_NE(a, c);
}

TEST(SubobjectSweep, LeafSlots) {
    for (const auto& r : sweep_subobject(enumerate_terms(0))) EXPECT_TRUE(r.ok()) << format_report(r);
}

TEST(SubobjectSweep, DepthOneSlotsOnSmallPaths) {
    // Richer slots but only through paths with at most two slots.
    auto slots = enumerate_terms(1);
    for (const auto& path : all_paths(shapes::fexpr())) {
        auto payloads = enumerate_payloads(path_target(path), slots);
        if (payloads.size() > 100000) continue;
        for (const auto& p : payloads) ASSERT_EQ(downcast(path, upcast(path, p)), p) << to_string(path);
    }
}

TEST(ForgetfulLift, ViolatesRoundTripAndInjectivity) {
    std::size_t round_trip_failures = 0, collisions = 0;
    std::unordered_map<std::string, Payload> seen;
    for (const auto& p : enumerate_payloads(shapes::sum(), enumerate_terms(0))) {
        Term image = oracles::forgetful_lift(p);
        auto back = downcast(lifts::sum(), image);
        if (!back || !(*back == p)) ++round_trip_failures;
        auto [it, fresh] = seen.emplace(render(image), p);
        if (!fresh && !(it->second == p)) ++collisions;
    }
    EXPECT_EQ(round_trip_failures, 25u);
    EXPECT_EQ(collisions, 24u);
}
