"""Exact finite-field towers: moduli, Frobenius orbits, element degrees.

Fields are represented as F_p[x]/(f) with f the lexicographically smallest
monic irreducible (by ascending integer index), so every run of every
machine produces identical coordinates.  A field remembers its base, and
Frobenius means x -> x^q relative to that base.
"""

from delpezzo import (
    elements_of_degree,
    field_elements,
    frobenius,
    frobenius_orbit,
    gen,
    make_field,
    minimal_polynomial,
    parse_field_literal,
)


def poly_str(coeffs):
    terms = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        if i == 0:
            terms.append(str(c))
        elif i == 1:
            terms.append("x" if c == 1 else f"{c}x")
        else:
            terms.append(f"x^{i}" if c == 1 else f"{c}x^{i}")
    return " + ".join(terms) or "0"


def main():
    for p, m in ((2, 2), (2, 3), (2, 4), (3, 2), (5, 2)):
        spec = make_field(p, 1, m)
        print(f"F_{p ** m} = F_{p}[x]/({poly_str(spec.modulus)})")

    f9 = parse_field_literal("3^2:base=1")
    omega = gen(f9)
    print(f"\nin F_9: x * x = {omega * omega}, x^8 = {omega ** 8}, "
          f"1/x = {omega.inverse()}")
    print(f"frobenius orbit of x: {[str(e) for e in frobenius_orbit(omega)]}")
    print(f"minimal polynomial of x over F_3: "
          f"{poly_str(minimal_polynomial(omega))}")

    # the same field as a degree-1 extension of itself: frobenius changes
    f9_own = parse_field_literal("3^2")
    w = gen(f9_own)
    print(f"\nsame field with base F_9: frobenius(x) = {frobenius(w)} "
          f"(now the identity map)")

    f64_over_4 = make_field(2, 2, 3)
    print(f"\nF_64 as a cubic extension of F_4 "
          f"({f64_over_4.literal()}):")
    counts = {}
    for e in field_elements(f64_over_4):
        from delpezzo import element_degree
        counts[element_degree(e)] = counts.get(element_degree(e), 0) + 1
    print(f"  element degrees over F_4: {counts}")
    first_cubic = next(elements_of_degree(f64_over_4, 3))
    print(f"  first element of exact degree 3: {first_cubic} "
          f"(orbit size {len(frobenius_orbit(first_cubic))})")


if __name__ == "__main__":
    main()
