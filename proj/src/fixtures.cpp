#include "ugts/fixtures.hpp"

namespace ugts {

const char* const kDiningSpec = R"(// Distributed dining philosophers on an arbitrary network.
//
// Philosophers are nodes; a unary edge carries the state (T thinking,
// H hungry, E eating). Forks sit between philosophers: F is free, OF is
// owned and points at its owner.

signature { T/1 H/1 E/1 F/2 OF/2 }

// A hungry philosopher grabs a free fork (either orientation).
rule acquire_a {
  left  { nodes p q; h: H(p); F(p,q); }
  right { nodes p q; h: H(p); OF(q,p); }
  map   { p -> p; q -> q; h -> h; }
}

rule acquire_b {
  left  { nodes p q; h: H(p); F(q,p); }
  right { nodes p q; h: H(p); OF(q,p); }
  map   { p -> p; q -> q; h -> h; }
}

// A hungry philosopher may hand a fork back.
rule release_fork {
  left  { nodes p q; h: H(p); OF(q,p); }
  right { nodes p q; h: H(p); F(q,p); }
  map   { p -> p; q -> q; h -> h; }
}

// Owning every connected fork lets a philosopher eat; the quantification
// matches the entire neighbourhood.
rule start_eating {
  left  { nodes p; h: H(p); }
  right { nodes p; E(p); }
  map   { p -> p; }
  forall q {
    left  { nodes p q; h: H(p); of: OF(q,p); }
    right { nodes p q; h: H(p); of: OF(q,p); }
    map   { p -> p; q -> q; h -> h; of -> of; }
  }
}

rule get_hungry {
  left  { nodes p; t: T(p); }
  right { nodes p; H(p); }
  map   { p -> p; }
}

// Done eating: back to thinking, every owned fork becomes free.
rule release_all {
  left  { nodes p; e: E(p); }
  right { nodes p; T(p); }
  map   { p -> p; }
  forall q {
    left  { nodes p q; e: E(p); OF(q,p); }
    right { nodes p q; e: E(p); F(q,p); }
    map   { p -> p; q -> q; e -> e; }
  }
}

// Two adjacent eating philosophers, over a free or an owned fork.
graph error1 { nodes p q; E(p); E(q); F(p,q); }
graph error2 { nodes p q; E(p); E(q); OF(p,q); }
error error1;
error error2;

// Rings of thinking philosophers with free forks.
graph ring2 { nodes p1 p2; T(p1); T(p2); F(p1,p2); F(p2,p1); }
graph ring3 { nodes p1 p2 p3; T(p1); T(p2); T(p3); F(p1,p2); F(p2,p3); F(p3,p1); }
graph ring4 {
  nodes p1 p2 p3 p4;
  T(p1); T(p2); T(p3); T(p4);
  F(p1,p2); F(p2,p3); F(p3,p4); F(p4,p1);
}
graph ring5 {
  nodes p1 p2 p3 p4 p5;
  T(p1); T(p2); T(p3); T(p4); T(p5);
  F(p1,p2); F(p2,p3); F(p3,p4); F(p4,p5); F(p5,p1);
}
init ring2;
init ring3;
init ring4;
init ring5;
)";

}  // namespace ugts
