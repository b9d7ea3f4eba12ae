"""The engine room: Frobenius-equivariant point sets on the conic.

To build a surface whose Galois action realizes a cyclic group <g>, pick
five distinct parameters b_1..b_5 in an extension field with
frobenius(b_i) = b_{g(i)}: the points (1 : b_i : b_i^2) then form a stable
general-position configuration whose blow-up has the requested type.  The
construction seeds each <g>-orbit with a canonical element of matching
exact degree, scaled to avoid collisions.
"""

from delpezzo import (
    class_representative,
    complexity,
    conic_config,
    cyclic_generator,
    frobenius,
    frobenius_permutation,
    general_position,
    parse_field_literal,
    points_with_action,
)


def main():
    for literal, name in (("7", "[Z/5Z]"), ("2", "[Z/6Z]"), ("3^2", "[Z/4Z]")):
        base = parse_field_literal(literal)
        rep = class_representative(name, 5)
        g = cyclic_generator(rep)
        betas = points_with_action(base, rep)
        print(f"type {name} over F_{base.q}  (g = {g.cycle_string()}, "
              f"complexity {complexity(rep)}):")
        for i, b in enumerate(betas, start=1):
            print(f"  b_{i} = {b}   frobenius -> b_{g(i)} = {betas[g(i) - 1]}")
            assert frobenius(b) == betas[g(i) - 1]
        config = conic_config(betas)
        assert general_position(config.points)
        tau = frobenius_permutation(config)
        print(f"  induced permutation of the points: {tau.cycle_string()}\n")


if __name__ == "__main__":
    main()
