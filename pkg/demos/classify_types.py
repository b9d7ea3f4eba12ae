"""Tour of the type classification: class lists, automorphisms, realizability.

A surface's *type* is the conjugacy class of the Galois image acting on its
(-1)-curve graph.  Degree 5 has 19 possible types (subgroup classes of S5),
degree 6 has 10 (classes inside the hexagon symmetry group of order 12).
Over a finite field the Galois group is procyclic, so exactly the cyclic
types occur; over number fields all of them do.
"""

from delpezzo import (
    aut_table,
    class_names,
    class_representative,
    finite,
    number_field,
    realizable,
)


def main():
    print("== degree-5 types ==")
    for name in class_names(5):
        rep = class_representative(name, 5)
        gens = "; ".join(g.cycle_string() for g in rep.generators) or "()"
        marks = []
        if realizable(name, finite(4)):
            marks.append("finite fields")
        if realizable(name, number_field()):
            marks.append("number fields")
        print(f"  {name:<26} order {rep.order:>3}  <{gens}>  "
              f"realizable over: {', '.join(marks)}")

    print()
    print("== degree-6 types (hexagon symmetries) ==")
    for name in class_names(6):
        rep = class_representative(name, 6)
        cyc = "cyclic" if rep.is_cyclic else "non-cyclic"
        print(f"  {name:<26} order {rep.order:>2}  {cyc}")

    print()
    print("== automorphism groups of degree-5 surfaces (one row per type) ==")
    for row in aut_table():
        print(f"  Aut of type {row.label.name:<26} = {row.group_name:<10} "
              f"(order {row.aut_group.order})")
    trivial = [r.label.name for r in aut_table() if r.group_name == "e"]
    print(f"  types with no automorphisms at all: {', '.join(trivial)}")


if __name__ == "__main__":
    main()
