//! Geometric facts the replay scripts take as given.
//!
//! Scripts name these ids instead of re-deriving surface geometry. An
//! assertion that cites one is reported as `geometry_input`, never as `pass`.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Axiom {
    pub id: &'static str,
    pub statement: &'static str,
    /// Where the fact enters the wild classification.
    pub context: &'static str,
}

pub const AXIOMS: &[Axiom] = &[
    Axiom {
        id: "AX_WILD_SPECTRA",
        statement: "an automorphism of order p in characteristic p in {5,7,11} has one of the listed fixed-locus types, with the stated spectrum on H^2",
        context: "source of the wild spectra",
    },
    Axiom {
        id: "AX_FAITHFUL",
        statement: "an automorphism of finite order acts faithfully on H^2, so its profile has exactly its order",
        context: "every enumeration of wild profiles",
    },
    Axiom {
        id: "AX_INVOLUTION_RULED",
        statement: "an involution with 2-dimensional invariant part of H^2 is non-symplectic, its quotient is a rational ruled surface, and its fixed locus is a genus 9 curve or a section plus a genus 10 trisection of the induced elliptic fibration",
        context: "order 44 in characteristic 11",
    },
    Axiom {
        id: "AX_NO_P_TORSION",
        statement: "an elliptic K3 surface in characteristic p > 7 has no p-torsion section, so an order-p automorphism preserving the fibration moves the base",
        context: "order 44 in characteristic 11",
    },
    Axiom {
        id: "AX_P1_JORDAN",
        statement: "over an algebraically closed field of characteristic p, an automorphism of P^1 with g^(pm) = 1 and g^m != 1, p not dividing m, satisfies g^p = 1",
        context: "base actions of elliptic fibrations",
    },
    Axiom {
        id: "AX_IISTAR_COMPONENTS",
        statement: "when the order-7 power fixes a II* fibre pointwise, g preserves each of its 9 components, which with an ample class span a rank 10 invariant sublattice",
        context: "characteristic 7, fixed fibre of type II*",
    },
    Axiom {
        id: "AX_IISTAR_INVOLUTION_LOCUS",
        statement: "an involution acting on a II* configuration fixes the components R2, R4, R6, R8 pointwise and a further curve meeting R9 and R1; other fibres are irreducible",
        context: "order 28 in characteristic 7",
    },
    Axiom {
        id: "AX_BASE_ACTION",
        statement: "the order-p power acts non-trivially on the base of the invariant fibration in the fibre-support cases",
        context: "orders 28 in characteristic 7 and 60 in characteristic 5",
    },
    Axiom {
        id: "AX_INVOLUTION_P1",
        statement: "a non-trivial involution of P^1 in characteristic not 2 has exactly two fixed points",
        context: "ruled quotients of involutions",
    },
    Axiom {
        id: "AX_FIBRE_COMPONENTS",
        statement: "an automorphism preserving a fibre permutes its components; the resulting permutation eigenvalues appear in [g*] next to the ample class",
        context: "fixed fibres of types III, IV and III*",
    },
    Axiom {
        id: "AX_NONSYMPLECTIC_INVOLUTION_LOCUS",
        statement: "the fixed locus of a non-symplectic tame involution is a disjoint union of smooth curves: elliptic curves, or one curve of genus g >= 2 with rational curves, whose classes are independent in the invariant part",
        context: "tame involutions inside wild automorphisms",
    },
    Axiom {
        id: "AX_NO_FREE_ORDER_FOUR",
        statement: "no K3 surface admits a free action of a group of order 4",
        context: "order 84 in characteristic 7",
    },
    Axiom {
        id: "AX_WILD_CURVE_TRACE",
        statement: "the order-7 action on the genus 7r+2 curve has at most 2r non-trivial eigenvalue orbits on H^1",
        context: "order 84 in characteristic 7",
    },
    Axiom {
        id: "AX_ORBIT_DIVISORS",
        statement: "orbit sums of fixed curves and the big fixed curve are independent classes in the invariant part of NS",
        context: "Picard-rank counting in wild cases",
    },
    Axiom {
        id: "AX_FIXED_POINT_COUNT",
        statement: "fixed points of powers of g lie in the fixed locus of u, and a finite-order automorphism of P^1 or of a curve permuting a finite set has the stated fixed points",
        context: "fixed-point counting contradictions",
    },
    Axiom {
        id: "AX_LOCAL_TAME_INVOLUTION",
        statement: "a tame involution fixing a curve through a point preserves at most one other curve through that point",
        context: "fixed fibres of type IV",
    },
    Axiom {
        id: "AX_RATIONAL_QUOTIENT_RANK",
        statement: "if the quotient by a tame power is rational then the invariant part of H^2 is algebraic",
        context: "Picard ranks in one-point cases",
    },
    Axiom {
        id: "AX_KOD2_DOUBLE_PLANE",
        statement: "a genus 2 fixed curve makes X a double plane z^2 = (y^5 - y x^4) P1 + P6 with u = (x0 : x : x + y), and the degenerate normal forms have a non-rational double point",
        context: "characteristic 5, genus 2 fixed curve",
    },
    Axiom {
        id: "AX_RANK_NS_U_LE_4",
        statement: "an order-5 automorphism with one fixed point and K3 quotient has invariant Neron-Severi rank at most 4",
        context: "characteristic 5, one fixed point with K3 quotient",
    },
    Axiom {
        id: "AX_NO_ELLIPTIC_FIXED_CURVE",
        statement: "in the one-point K3-quotient case no power g^(5i) fixes an elliptic curve",
        context: "characteristic 5, one fixed point with K3 quotient",
    },
    Axiom {
        id: "AX_QUOTIENT_SINGULARITY_DATA",
        statement: "for the five isolated fixed-point types of an order-11 non-symplectic automorphism, K_Y.D_p = 20/11, 6/11, 5/11, 32/11, 81/11 and the resolution adds 10, 20, 25, 10, 5 to the Picard number per orbit of 5",
        context: "order 55 in characteristic 5",
    },
    Axiom {
        id: "AX_OMITTED_CASE",
        statement: "the order 65 case is closed by an argument stated to be similar to order 55, without details",
        context: "order 65 in characteristic 5",
    },
];

pub fn axiom(id: &str) -> Option<&'static Axiom> {
    AXIOMS.iter().find(|a| a.id == id)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_unique() {
        let mut ids: Vec<&str> = AXIOMS.iter().map(|a| a.id).collect();
        ids.sort_unstable();
        let before = ids.len();
        ids.dedup();
        assert_eq!(before, ids.len());
        assert!(axiom("AX_RANK_NS_U_LE_4").is_some());
    }
}
