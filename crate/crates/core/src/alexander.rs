//! The Alexander polynomial of a braid-closure knot, computed by two
//! independent determinantal routes that are cross-checked against each
//! other.

use std::fmt;

use num_traits::One;

use crate::braid::BraidWord;
use crate::burau::{block_decompose, reduced_burau};
use crate::error::{Error, Result};
use crate::ring::{rat_int, LaurentPoly, Rational, RingMatrix};

/// A canonically normalised Alexander polynomial: value 1 at `t = 1` and
/// invariant under `t -> t^{-1}`. Both properties are enforced at
/// construction.
#[derive(Clone, PartialEq, Eq)]
pub struct AlexanderPoly {
    poly: LaurentPoly,
}

impl AlexanderPoly {
    /// Wraps a Laurent polynomial, verifying the normalisation invariants.
    pub fn new(poly: LaurentPoly) -> Result<Self> {
        if poly.eval_one() != Rational::one() {
            return Err(Error::InternalConsistency(format!(
                "Alexander polynomial {poly} has value {} at t = 1, expected 1",
                poly.eval_one()
            )));
        }
        if poly.substitute_power(-1) != poly {
            return Err(Error::InternalConsistency(format!(
                "Alexander polynomial {poly} is not symmetric under t -> 1/t"
            )));
        }
        Ok(AlexanderPoly { poly })
    }

    pub fn one() -> Self {
        AlexanderPoly { poly: LaurentPoly::one() }
    }

    pub fn poly(&self) -> &LaurentPoly {
        &self.poly
    }

    pub fn into_poly(self) -> LaurentPoly {
        self.poly
    }

    /// Substitute `t -> t^k`, as arises for cables.
    pub fn substitute_power(&self, k: usize) -> LaurentPoly {
        assert!(k >= 1, "power substitution needs k >= 1");
        self.poly.substitute_power(k as i64)
    }
}

impl fmt::Display for AlexanderPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

impl fmt::Debug for AlexanderPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlexanderPoly({})", self.poly)
    }
}

fn require_knot(word: &BraidWord) -> Result<()> {
    if word.is_knot_closure() {
        Ok(())
    } else {
        Err(Error::NotKnotClosure {
            components: word.closure_permutation().cycle_count(),
        })
    }
}

/// Prefactor exponent `(1 - n - g)/2`; the parity of the writhe of a knot
/// closure makes it an integer, and we fail loudly if it is not.
fn half_exponent(num: i64, what: &str) -> Result<i64> {
    if num % 2 != 0 {
        return Err(Error::InternalConsistency(format!(
            "odd exponent {num} in {what} prefactor; writhe parity violated"
        )));
    }
    Ok(num / 2)
}

/// Alexander polynomial from the unreduced Burau minor:
/// `t^{(1-n-g)/2} det(I_{n-1} - interior)`.
pub fn alexander_unreduced(word: &BraidWord) -> Result<AlexanderPoly> {
    require_knot(word)?;
    let n = word.strands();
    if n == 1 {
        return Ok(AlexanderPoly::one());
    }
    let blocks = block_decompose(word)?;
    let id = RingMatrix::identity_like(n - 1, &LaurentPoly::one());
    let det = id.sub(&blocks.interior).laurent_det()?;
    let e = half_exponent(1 - n as i64 - word.exponent_sum(), "unreduced")?;
    AlexanderPoly::new(det.shift(e))
}

/// Alexander polynomial from the reduced Burau representation:
/// `(-1)^{n-1} t^{(n-1-g)/2} (t-1)/(t^n-1) det(reduced - I_{n-1})`,
/// with the division performed exactly (a failure signals a bug or a
/// non-knot input).
pub fn alexander_reduced(word: &BraidWord) -> Result<AlexanderPoly> {
    require_knot(word)?;
    let n = word.strands();
    if n == 1 {
        return Ok(AlexanderPoly::one());
    }
    let red = reduced_burau(word)?;
    let id = RingMatrix::identity_like(n - 1, &LaurentPoly::one());
    let det = red.matrix.sub(&id).laurent_det()?;
    let t = LaurentPoly::t();
    let one = LaurentPoly::one();
    let t_minus_1 = &t - &one;
    let tn_minus_1 = &LaurentPoly::monomial(n as i64, rat_int(1)) - &one;
    let quotient = (&t_minus_1 * &det).exact_div(&tn_minus_1)?;
    let e = half_exponent(n as i64 - 1 - word.exponent_sum(), "reduced")?;
    let shifted = quotient.shift(e);
    let signed = if (n - 1) % 2 == 0 { shifted } else { -&shifted };
    AlexanderPoly::new(signed)
}

/// Exact identity between the two Burau minors:
/// `(t^{-n} - 1) det(interior - I) == (t^{-1} - 1) det(reduced - I)`.
/// Holds for every braid word, knot closure or not.
pub fn minor_det_identity_check(word: &BraidWord) -> Result<bool> {
    let n = word.strands();
    if n < 2 {
        return Err(Error::Precondition("the minor identity needs at least 2 strands".into()));
    }
    let one = LaurentPoly::one();
    let id = RingMatrix::identity_like(n - 1, &LaurentPoly::one());

    let blocks = block_decompose(word)?;
    let det_unred = blocks.interior.sub(&id).laurent_det()?;
    let lhs = &(&LaurentPoly::monomial(-(n as i64), rat_int(1)) - &one) * &det_unred;

    let red = reduced_burau(word)?;
    let det_red = red.matrix.sub(&id).laurent_det()?;
    let rhs = &(&LaurentPoly::monomial(-1, rat_int(1)) - &one) * &det_red;

    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn w(text: &str) -> BraidWord {
        BraidWord::parse(text, None).unwrap()
    }

    fn p(pairs: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_coeffs(pairs.iter().map(|&(e, c)| (e, rat_int(c))))
    }

    #[test]
    fn known_knots_unreduced() {
        assert_eq!(*alexander_unreduced(&w("1")).unwrap().poly(), LaurentPoly::one());
        assert_eq!(
            *alexander_unreduced(&w("1 1 1")).unwrap().poly(),
            p(&[(-1, 1), (0, -1), (1, 1)])
        );
        assert_eq!(
            *alexander_unreduced(&w("1 -2 1 -2")).unwrap().poly(),
            p(&[(-1, -1), (0, 3), (1, -1)])
        );
        // torus knot (2,5)
        assert_eq!(
            *alexander_unreduced(&w("1 1 1 1 1")).unwrap().poly(),
            p(&[(-2, 1), (-1, -1), (0, 1), (1, -1), (2, 1)])
        );
    }

    #[test]
    fn known_knots_reduced_route_agrees() {
        for text in ["1", "1 1 1", "1 2 1 2", "1 -2 1 -2", "1 1 1 1 1"] {
            let b = w(text);
            assert_eq!(
                alexander_unreduced(&b).unwrap(),
                alexander_reduced(&b).unwrap(),
                "routes disagree on {text}"
            );
        }
    }

    #[test]
    fn trefoil_as_three_braid() {
        assert_eq!(
            *alexander_unreduced(&w("1 2 1 2")).unwrap().poly(),
            p(&[(-1, 1), (0, -1), (1, 1)])
        );
    }

    #[test]
    fn unknot_on_one_strand() {
        let b = BraidWord::new(1, vec![]).unwrap();
        assert_eq!(alexander_unreduced(&b).unwrap(), AlexanderPoly::one());
        assert_eq!(alexander_reduced(&b).unwrap(), AlexanderPoly::one());
    }

    #[test]
    fn non_knot_is_rejected_with_component_count() {
        let hopf = BraidWord::parse("1 1", Some(2)).unwrap();
        match alexander_unreduced(&hopf) {
            Err(Error::NotKnotClosure { components }) => assert_eq!(components, 2),
            other => panic!("expected NotKnotClosure, got {other:?}"),
        }
        let b = BraidWord::parse("1 2", Some(4)).unwrap();
        match alexander_unreduced(&b) {
            Err(Error::NotKnotClosure { components }) => assert_eq!(components, 2),
            other => panic!("expected NotKnotClosure, got {other:?}"),
        }
    }

    #[test]
    fn minor_identity_hand_example() {
        // sigma_1 in B_2: both sides equal t - t^{-1}
        assert!(minor_det_identity_check(&BraidWord::parse("1", Some(2)).unwrap()).unwrap());
        assert!(minor_det_identity_check(&BraidWord::new(3, vec![]).unwrap()).unwrap());
    }

    #[test]
    fn minor_identity_on_random_words_including_links() {
        for word in corpus::random_words(31, 150, 5, 12) {
            assert!(minor_det_identity_check(&word).unwrap(), "violated for {word:?}");
        }
    }

    #[test]
    fn routes_agree_on_random_knot_corpus() {
        for word in corpus::random_knot_closures(37, 80, 5, 10) {
            assert_eq!(
                alexander_unreduced(&word).unwrap(),
                alexander_reduced(&word).unwrap(),
                "routes disagree on {word:?}"
            );
        }
    }

    #[test]
    fn normalisation_and_symmetry_on_corpus() {
        for word in corpus::random_knot_closures(41, 60, 4, 10) {
            let d = alexander_unreduced(&word).unwrap();
            assert_eq!(d.poly().eval_one(), Rational::one());
            assert_eq!(d.poly().substitute_power(-1), *d.poly());
        }
    }

    #[test]
    fn representative_independence() {
        let tre2 = w("1 1 1");
        let tre3 = w("1 2 1 2");
        assert_eq!(alexander_unreduced(&tre2).unwrap(), alexander_unreduced(&tre3).unwrap());

        for word in corpus::random_knot_closures(43, 30, 4, 8) {
            let d = alexander_unreduced(&word).unwrap();
            // Markov stabilization, both signs
            for positive in [true, false] {
                let stab = word.stabilized(positive);
                assert_eq!(alexander_unreduced(&stab).unwrap(), d, "stabilized {word:?}");
            }
            // conjugation
            let a = BraidWord::new(word.strands(), vec![1]).unwrap();
            let conj = word.conjugated_by(&a).unwrap();
            assert_eq!(alexander_unreduced(&conj).unwrap(), d, "conjugated {word:?}");
        }
    }

    #[test]
    fn mirror_invariance() {
        for word in corpus::random_knot_closures(47, 30, 4, 8) {
            assert_eq!(
                alexander_unreduced(&word.mirror()).unwrap(),
                alexander_unreduced(&word).unwrap()
            );
        }
    }

    #[test]
    fn substitute_power_examples() {
        let tre = AlexanderPoly::new(p(&[(-1, 1), (0, -1), (1, 1)])).unwrap();
        assert_eq!(tre.substitute_power(2), p(&[(-2, 1), (0, -1), (2, 1)]));
        assert_eq!(tre.substitute_power(1), *tre.poly());
        assert_eq!(AlexanderPoly::one().substitute_power(5), LaurentPoly::one());
    }

    #[test]
    fn cabling_multiplies_the_variable() {
        for (text, m) in [("1 1 1", 2), ("1 1 1", 3), ("1 -2 1 -2", 2), ("1 -2 1 -2", 3)] {
            let b = w(text);
            let cabled = b.cable(m).unwrap();
            let expect = alexander_unreduced(&b).unwrap().substitute_power(m);
            let got = alexander_unreduced(&cabled).unwrap();
            assert_eq!(*got.poly(), expect, "cable {text} x{m}");
        }
    }
}
