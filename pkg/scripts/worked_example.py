"""The cyclic triple x dy, y dz, z dx on R^3 with omega = dx^dy^dz, step by step."""

from courantkit import courant, plectic
from courantkit.exterior import Chart, d
from courantkit.lie2 import check_morphism
from courantkit.morphisms import main_pair


def main():
    C = Chart.of("x", "y", "z")
    x, y, z = (C.coord(c) for c in "xyz")
    dx, dy, dz = (C.dx(c) for c in "xyz")
    P = plectic.PlecticStructure(C, C.basis("x", "y", "z"))
    model = courant.SplitCourantModel(C, P.omega)
    a, b, c = x * dy, y * dz, z * dx

    for name, form in (("x dy", a), ("y dz", b), ("z dx", c)):
        print(f"v[{name}] = {plectic.hamiltonian_vf(P, form)}")
    br = lambda s, t: plectic.semi_bracket(P, s, t)
    print(f"{{x dy, y dz}} = {br(a, b)}")
    print(f"{{y dz, z dx}} = {br(b, c)}")
    print(f"{{x dy, z dx}} = {br(a, c)}")
    J = plectic.jacobiator_J(P, a, b, c)
    defect = br(a, br(b, c)) - br(br(a, b), c) - br(b, br(a, c))
    print(f"J = {J}; Jacobi defect = {defect}; dJ = {d(J)}")

    mor, src, tgt = main_pair(P, model)
    print(f"phi0(x dy) = {mor.phi0(a)}")
    print(f"Phi(x dy, y dz) = {mor.Phi(a, b)}")
    print(check_morphism(mor, src, tgt, a, b, c))


if __name__ == "__main__":
    main()
