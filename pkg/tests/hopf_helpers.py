"""Module zoo and thin wrappers around the package's seeded generators."""

from brpickit import abelian as ab
from brpickit import brpic as bp
from brpickit import hopf
from brpickit import linalg as la
from brpickit import orth
from brpickit.cyclo import CycloScalar

ONE = CycloScalar.one(1)
ZERO = CycloScalar.zero(1)


def module_zoo():
    """Modules (V, u, G) with dim V <= 3 and |G| <= 8."""
    out = []
    G2 = ab.FinAbGroup([2])
    u2 = G2.generator(0)
    chi2 = G2.char_generator(0)
    out.append(("Z2_d1", la.GModuleV(G2, u2, [chi2])))
    out.append(("Z2_d2", la.GModuleV(G2, u2, [chi2, chi2])))
    out.append(("Z2_d3", la.GModuleV(G2, u2, [chi2] * 3)))
    G4 = ab.FinAbGroup([4])
    u4 = G4.element((2,))
    out.append(("Z4_d1", la.GModuleV(G4, u4, [G4.character((1,))])))
    out.append(("Z4_d2", la.GModuleV(G4, u4,
                                     [G4.character((1,)), G4.character((3,))])))
    G22 = ab.FinAbGroup([2, 2])
    u22 = G22.element((1, 1))
    out.append(("Z2Z2_d1", la.GModuleV(G22, u22, [G22.character((1, 0))])))
    out.append(("Z2Z2_d2", la.GModuleV(G22, u22,
                                       [G22.character((1, 0)),
                                        G22.character((0, 1))])))
    G8 = ab.FinAbGroup([8])
    u8 = G8.element((4,))
    out.append(("Z8_d1", la.GModuleV(G8, u8, [G8.character((1,))])))
    G24 = ab.FinAbGroup([2, 4])
    u24 = G24.element((0, 2))
    out.append(("Z2Z4_d1", la.GModuleV(G24, u24, [G24.character((0, 1))])))
    return out


def sweedler_module():
    G = ab.FinAbGroup([2])
    return la.GModuleV(G, G.generator(0), [G.char_generator(0)])


def z4_module():
    G = ab.FinAbGroup([4])
    return la.GModuleV(G, G.element((2,)), [G.character((1,))])


def z22_module():
    G = ab.FinAbGroup([2, 2])
    return la.GModuleV(G, G.element((1, 1)), [G.character((1, 0))])


f_families = hopf.compatible_families
random_data = hopf.random_compatible_data
random_gdatum = hopf.random_graph_datum


def zero_beta_copy(data):
    return hopf.CompatibleData(data.module, data.W1, data.W2, data.W3, None,
                               data.F, data.psi, alpha=data.alpha)


def random_rpair(module, rng, dim_cap=64):
    """A pair (d, dt) for the cotensor law: dt carries the identity twist."""
    suite = bp.suite_alphas(module)
    alpha = suite[rng.randrange(len(suite))]
    d = hopf.random_graph_datum(module, rng, alpha, dim_cap)
    dt = hopf.random_graph_datum(module, rng,
                                 orth.orth_identity(module.group), dim_cap)
    return d, dt
