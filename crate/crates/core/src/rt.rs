//! Evaluation of long-knot diagrams by symbolic Gaussian contraction, and the
//! universal invariant series it produces.
//!
//! Every diagram piece handled here has a kernel of the shape
//! `prefactor * exp(w* M v)`; closing a strand is the one-variable Gaussian
//! integral, which acts on the kernel as a Schur-complement update. No
//! numerical integration is involved anywhere.

use std::fmt;

use num_traits::One;

use crate::alexander::alexander_unreduced;
use crate::braid::BraidWord;
use crate::burau::{block_decompose, burau_u, burau_u_inv, unreduced_burau};
use crate::error::{Error, Result};
use crate::ring::{
    t_to_hbar, t_to_one_plus_hbar, CoeffRing, LaurentPoly, Rational, RingMatrix, TruncSeries,
};

/// Crossing sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Crossing {
    Positive,
    Negative,
}

/// A Gaussian kernel `prefactor * exp(w* M v)` over the currently open strand
/// slots. `form` is square with one row/column per entry of `open_slots`, and
/// slots are identified by the caller-supplied ids in `open_slots`.
#[derive(Clone, PartialEq)]
pub struct GaussianState {
    prefactor: TruncSeries,
    form: RingMatrix<TruncSeries>,
    open_slots: Vec<usize>,
}

impl GaussianState {
    pub fn new(
        prefactor: TruncSeries,
        form: RingMatrix<TruncSeries>,
        open_slots: Vec<usize>,
    ) -> Result<Self> {
        if !form.is_square() || form.rows() != open_slots.len() {
            return Err(Error::Dimension(format!(
                "form is {}x{} but there are {} open slots",
                form.rows(),
                form.cols(),
                open_slots.len()
            )));
        }
        let mut sorted = open_slots.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != open_slots.len() {
            return Err(Error::Dimension("duplicate slot identifiers".into()));
        }
        Ok(GaussianState { prefactor, form, open_slots })
    }

    pub fn prefactor(&self) -> &TruncSeries {
        &self.prefactor
    }

    pub fn form(&self) -> &RingMatrix<TruncSeries> {
        &self.form
    }

    pub fn open_slots(&self) -> &[usize] {
        &self.open_slots
    }

    fn slot_index(&self, slot: usize) -> Result<usize> {
        self.open_slots
            .iter()
            .position(|&s| s == slot)
            .ok_or_else(|| Error::Precondition(format!("slot {slot} is not open")))
    }

    /// Closes one strand slot: integrates out the slot variable, dividing the
    /// prefactor by the pivot `W = 1 - M[s,s]` and applying the rank-one
    /// Schur-complement update `M'[i,j] = M[i,j] + M[i,s] M[s,j] / W` to the
    /// remaining form.
    pub fn contract(&self, slot: usize) -> Result<GaussianState> {
        let s = self.slot_index(slot)?;
        let one = self.prefactor.one_like();
        let pivot = &one - self.form.at(s, s);
        let pivot_inv = pivot.inverse().map_err(|_| Error::SingularContraction(slot))?;

        let keep: Vec<usize> = (0..self.open_slots.len()).filter(|&i| i != s).collect();
        let form = RingMatrix::from_fn(keep.len(), keep.len(), |i, j| {
            let (oi, oj) = (keep[i], keep[j]);
            let correction = &(self.form.at(oi, s) * self.form.at(s, oj)) * &pivot_inv;
            self.form.at(oi, oj) + &correction
        });
        Ok(GaussianState {
            prefactor: &self.prefactor * &pivot_inv,
            form,
            open_slots: keep.iter().map(|&i| self.open_slots[i]).collect(),
        })
    }

    /// Contracts the given slots in order.
    pub fn contract_all(&self, slots: &[usize]) -> Result<GaussianState> {
        let mut state = self.clone();
        for &s in slots {
            state = state.contract(s)?;
        }
        Ok(state)
    }
}

impl fmt::Debug for GaussianState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GaussianState(prefactor: {}, slots: {:?}, form: {:?})",
            self.prefactor, self.open_slots, self.form
        )
    }
}

/// The invariant of a long knot as a truncated series in `h`; the constant
/// term is 1 for every knot.
#[derive(Clone, Debug, PartialEq)]
pub struct InvariantSeries {
    series: TruncSeries,
}

impl InvariantSeries {
    pub fn new(series: TruncSeries) -> Result<Self> {
        if series.coeff(0) != Rational::one() {
            return Err(Error::InternalConsistency(format!(
                "invariant series has constant term {}, expected 1",
                series.coeff(0)
            )));
        }
        Ok(InvariantSeries { series })
    }

    pub fn order(&self) -> usize {
        self.series.order()
    }

    pub fn series(&self) -> &TruncSeries {
        &self.series
    }
}

impl fmt::Display for InvariantSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.series.fmt(f)
    }
}

/// The 2x2 crossing kernel: the Burau block `U` (positive) or `U^{-1}`
/// (negative) with `t = (1+h)^{-1}` expanded to the given order.
pub fn crossing_kernel(sign: Crossing, order: usize) -> RingMatrix<TruncSeries> {
    let block = match sign {
        Crossing::Positive => burau_u(),
        Crossing::Negative => burau_u_inv(),
    };
    block.map(|p| t_to_hbar(p, order))
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

/// Evaluates the long-knot diagram of a braid whose closure is a knot: the
/// braid kernel `exp((u*, w) psi(beta) (u, v))` with strands `1..n-1` closed
/// by Gaussian contraction and strand `n` left open.
///
/// The resulting state has prefactor `1/det(I - interior)` and, by the Schur
/// identity, form entry exactly 1 at every truncation order.
pub fn evaluate_long_knot(word: &BraidWord, order: usize) -> Result<GaussianState> {
    require_knot(word)?;
    let n = word.strands();
    let form = unreduced_burau(word).map(|p| t_to_hbar(p, order));
    let state = GaussianState::new(TruncSeries::one(order), form, (0..n).collect())?;
    state.contract_all(&(0..n - 1).collect::<Vec<_>>())
}

/// Verifies the Schur identity
/// `corner + last_row (I - interior)^{-1} last_col = 1`
/// exactly over the Laurent ring, stated in adjugate form to avoid division:
/// `last_row adj(I - interior) last_col == (1 - corner) det(I - interior)`.
pub fn schur_identity_check(word: &BraidWord) -> Result<bool> {
    let n = word.strands();
    if n < 2 {
        return Err(Error::Precondition("the Schur identity needs at least 2 strands".into()));
    }
    let blocks = block_decompose(word)?;
    let id = RingMatrix::identity_like(n - 1, &LaurentPoly::one());
    let a = id.sub(&blocks.interior);
    let adj = a.laurent_adjugate()?;
    let det = a.laurent_det()?;

    let mut lhs = LaurentPoly::zero();
    for i in 0..n - 1 {
        for j in 0..n - 1 {
            lhs = &lhs + &(&(&blocks.last_row[i] * adj.at(i, j)) * &blocks.last_col[j]);
        }
    }
    let rhs = &(&LaurentPoly::one() - &blocks.corner) * &det;
    Ok(lhs == rhs)
}

/// The writhe correction `t^{(g + n - 1)/2}` as a series in `h`.
pub fn writhe_correction(word: &BraidWord, order: usize) -> Result<TruncSeries> {
    let num = word.exponent_sum() + word.strands() as i64 - 1;
    if num % 2 != 0 {
        return Err(Error::InternalConsistency(format!(
            "odd corrected writhe {num}; the closure cannot be a knot"
        )));
    }
    // t^k = (1+h)^{-k}
    Ok(TruncSeries::one_plus_hbar_pow(-(num / 2), order))
}

/// The universal invariant of the braid-closure knot as a truncated series:
/// writhe correction times the long-knot prefactor.
pub fn universal_invariant(word: &BraidWord, order: usize) -> Result<InvariantSeries> {
    let state = evaluate_long_knot(word, order)?;
    let correction = writhe_correction(word, order)?;
    InvariantSeries::new(&correction * state.prefactor())
}

/// Checks that the universal invariant series is the reciprocal of the
/// Alexander polynomial evaluated at `1 + h`, coefficient by coefficient up
/// to the truncation order. (By the `t -> 1/t` symmetry of the Alexander
/// polynomial the two substitutions `t = 1+h` and `t = (1+h)^{-1}` agree,
/// so either expansion may be used as the reference.)
pub fn invariant_reciprocal_check(word: &BraidWord, order: usize) -> Result<bool> {
    let z = universal_invariant(word, order)?;
    let delta = alexander_unreduced(word)?;
    let expansion = t_to_one_plus_hbar(delta.poly(), order);
    let reciprocal = expansion.inverse().map_err(|_| {
        Error::InternalConsistency("Alexander polynomial has zero value at t = 1".into())
    })?;
    Ok(*z.series() == reciprocal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::ring::rat_int;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn w(text: &str) -> BraidWord {
        BraidWord::parse(text, None).unwrap()
    }

    fn series(order: usize, coeffs: &[i64]) -> TruncSeries {
        TruncSeries::from_coeffs(order, coeffs.iter().map(|&c| rat_int(c)))
    }

    #[test]
    fn crossing_kernels_are_inverse_at_every_order() {
        for order in [0, 1, 4, 8] {
            let pos = crossing_kernel(Crossing::Positive, order);
            let neg = crossing_kernel(Crossing::Negative, order);
            let id = RingMatrix::identity_like(2, &TruncSeries::one(order));
            assert_eq!(pos.matmul(&neg), id);
            // spot-check entries: U[0,0] = 1-t = h - h^2 + ...; U^{-1}[1,0] = 1+h
            if order >= 2 {
                assert_eq!(pos.at(0, 0).coeff(1), rat_int(1));
                assert_eq!(pos.at(0, 0).coeff(2), rat_int(-1));
                assert_eq!(*neg.at(1, 0), &TruncSeries::one(order) + &TruncSeries::hbar(order));
            }
        }
    }

    #[test]
    fn scalar_product_kernel_contracts_to_identity_kernel() {
        // exp(v z + z u): three slots, cross terms only; closing the middle
        // slot leaves exp(v u) with prefactor 1.
        let order = 8;
        let zero = TruncSeries::zero(order);
        let one = TruncSeries::one(order);
        let mut form = RingMatrix::from_fn(3, 3, |_, _| zero.clone());
        form.set(0, 1, one.clone());
        form.set(1, 2, one.clone());
        let state = GaussianState::new(one.clone(), form, vec![10, 20, 30]).unwrap();
        let out = state.contract(20).unwrap();
        assert!(out.prefactor().is_one());
        assert_eq!(out.open_slots(), &[10, 30]);
        assert!(out.form().at(0, 1).is_one());
        assert!(out.form().at(0, 0).is_zero());
        assert!(out.form().at(1, 0).is_zero());
        assert!(out.form().at(1, 1).is_zero());
    }

    #[test]
    fn positive_cup_cap_composite() {
        // Closing the second strand of the positive crossing kernel gives the
        // identity kernel with prefactor 1.
        let order = 8;
        let state = GaussianState::new(
            TruncSeries::one(order),
            crossing_kernel(Crossing::Positive, order),
            vec![0, 1],
        )
        .unwrap();
        let out = state.contract(1).unwrap();
        assert!(out.prefactor().is_one());
        assert!(out.form().at(0, 0).is_one());
    }

    #[test]
    fn negative_cup_cap_composite() {
        // Same closure on the negative crossing kernel: prefactor t, form 1.
        let order = 8;
        let state = GaussianState::new(
            TruncSeries::one(order),
            crossing_kernel(Crossing::Negative, order),
            vec![0, 1],
        )
        .unwrap();
        let out = state.contract(1).unwrap();
        let t_series = t_to_hbar(&LaurentPoly::t(), order);
        assert_eq!(*out.prefactor(), t_series);
        assert!(out.form().at(0, 0).is_one());
    }

    #[test]
    fn long_knot_examples() {
        let order = 8;
        // sigma_1 in B_2: prefactor 1/t = 1 + h, form entry 1
        let s = evaluate_long_knot(&w("1"), order).unwrap();
        assert_eq!(s.open_slots(), &[1]);
        assert_eq!(
            *s.prefactor(),
            &TruncSeries::one(order) + &TruncSeries::hbar(order)
        );
        assert!(s.form().at(0, 0).is_one());

        // empty word in B_1: nothing to contract
        let empty = BraidWord::new(1, vec![]).unwrap();
        let s = evaluate_long_knot(&empty, order).unwrap();
        assert!(s.prefactor().is_one());
        assert!(s.form().at(0, 0).is_one());

        // trefoil: prefactor is the series of 1/(t - t^2 + t^3)
        let s = evaluate_long_knot(&w("1 1 1"), order).unwrap();
        let det = LaurentPoly::from_coeffs([(1, rat_int(1)), (2, rat_int(-1)), (3, rat_int(1))]);
        assert_eq!(*s.prefactor(), t_to_hbar(&det, order).inverse().unwrap());
        assert!(s.form().at(0, 0).is_one());
    }

    #[test]
    fn long_knot_form_entry_is_one_on_corpus() {
        for word in corpus::random_knot_closures(53, 40, 5, 10) {
            let s = evaluate_long_knot(&word, 6).unwrap();
            assert!(s.form().at(0, 0).is_one(), "form != 1 for {word:?}");
        }
    }

    #[test]
    fn schur_identity_examples_and_corpus() {
        assert!(schur_identity_check(&w("1")).unwrap());
        assert!(schur_identity_check(&BraidWord::new(2, vec![]).unwrap()).unwrap());
        for word in corpus::random_knot_closures(59, 80, 5, 12) {
            assert!(schur_identity_check(&word).unwrap(), "violated for {word:?}");
        }
    }

    #[test]
    fn writhe_correction_examples() {
        let order = 6;
        assert_eq!(
            writhe_correction(&w("1"), order).unwrap(),
            t_to_hbar(&LaurentPoly::t(), order)
        );
        assert_eq!(
            writhe_correction(&w("1 1 1"), order).unwrap(),
            t_to_hbar(&LaurentPoly::t().pow(2), order)
        );
        assert_eq!(
            writhe_correction(&BraidWord::parse("-1", Some(2)).unwrap(), order).unwrap(),
            TruncSeries::one(order)
        );
    }

    #[test]
    fn invariant_series_frozen_values() {
        // unknot: identically 1
        let z = universal_invariant(&w("1"), 8).unwrap();
        assert_eq!(*z.series(), series(8, &[1, 0, 0, 0, 0, 0, 0, 0, 0]));

        // trefoil at N=4 and N=8
        let z = universal_invariant(&w("1 1 1"), 4).unwrap();
        assert_eq!(*z.series(), series(4, &[1, 0, -1, 1, 0]));
        let z = universal_invariant(&w("1 1 1"), 8).unwrap();
        assert_eq!(*z.series(), series(8, &[1, 0, -1, 1, 0, -1, 1, 0, -1]));

        // figure-eight
        let z = universal_invariant(&w("1 -2 1 -2"), 8).unwrap();
        assert_eq!(*z.series(), series(8, &[1, 0, 1, -1, 2, -3, 5, -8, 13]));

        // cinquefoil
        let z = universal_invariant(&w("1 1 1 1 1"), 8).unwrap();
        assert_eq!(*z.series(), series(8, &[1, 0, -3, 3, 5, -13, 0, 34, -34]));
    }

    #[test]
    fn reciprocal_check_on_named_knots() {
        for text in ["1", "1 1 1", "1 2 1 2", "1 -2 1 -2", "1 1 1 1 1"] {
            assert!(invariant_reciprocal_check(&w(text), 8).unwrap(), "failed on {text}");
        }
    }

    #[test]
    fn both_alexander_expansions_agree() {
        // Delta(1+h) == Delta((1+h)^{-1}) thanks to the t -> 1/t symmetry.
        for text in ["1 1 1", "1 -2 1 -2", "1 1 1 1 1"] {
            let d = alexander_unreduced(&w(text)).unwrap();
            assert_eq!(
                t_to_one_plus_hbar(d.poly(), 8),
                t_to_hbar(d.poly(), 8)
            );
        }
    }

    #[test]
    fn invariant_agrees_across_representatives() {
        let z2 = universal_invariant(&w("1 1 1"), 8).unwrap();
        let z3 = universal_invariant(&w("1 2 1 2"), 8).unwrap();
        assert_eq!(z2, z3);

        for word in corpus::random_knot_closures(61, 25, 4, 8) {
            let z = universal_invariant(&word, 6).unwrap();
            for positive in [true, false] {
                let stab = word.stabilized(positive);
                assert_eq!(universal_invariant(&stab, 6).unwrap(), z, "stabilized {word:?}");
            }
            let a = BraidWord::new(word.strands(), vec![-1]).unwrap();
            let conj = word.conjugated_by(&a).unwrap();
            assert_eq!(universal_invariant(&conj, 6).unwrap(), z, "conjugated {word:?}");
        }
    }

    fn random_small_series(rng: &mut ChaCha8Rng, order: usize) -> TruncSeries {
        // O(h): zero constant term, small integer coefficients
        TruncSeries::from_coeffs(
            order,
            std::iter::once(rat_int(0))
                .chain((1..=order).map(|_| rat_int(rng.gen_range(-3..=3)))),
        )
    }

    #[test]
    fn contraction_order_independence() {
        let order = 6;
        let mut rng = ChaCha8Rng::seed_from_u64(71);
        for slots in [3usize, 4] {
            for _ in 0..20 {
                let form = RingMatrix::from_fn(slots, slots, |_, _| random_small_series(&mut rng, order));
                let ids: Vec<usize> = (0..slots).collect();
                let state =
                    GaussianState::new(TruncSeries::one(order), form, ids.clone()).unwrap();
                let forward = state.contract_all(&ids[..slots - 1]).unwrap();
                let backward_order: Vec<usize> = ids[..slots - 1].iter().rev().copied().collect();
                let backward = state.contract_all(&backward_order).unwrap();
                assert_eq!(forward, backward);
            }
        }
    }

    #[test]
    fn full_contraction_reproduces_inverse_determinant() {
        // MacMahon-style cross-check: closing every slot of exp(z* M z)
        // yields 1/det(I - M), with the determinant computed independently.
        let order = 8;
        let mut rng = ChaCha8Rng::seed_from_u64(73);
        for _ in 0..100 {
            let slots = rng.gen_range(1..=4);
            let form = RingMatrix::from_fn(slots, slots, |_, _| random_small_series(&mut rng, order));
            let ids: Vec<usize> = (0..slots).collect();
            let state = GaussianState::new(TruncSeries::one(order), form.clone(), ids.clone()).unwrap();
            let closed = state.contract_all(&ids).unwrap();
            assert!(closed.open_slots().is_empty());

            let id = RingMatrix::identity_like(slots, &TruncSeries::one(order));
            let det = id.sub(&form).det_laplace().unwrap();
            assert_eq!(*closed.prefactor(), det.inverse().unwrap());
        }
    }

    #[test]
    fn contracting_unknown_slot_is_rejected() {
        let order = 2;
        let state = GaussianState::new(
            TruncSeries::one(order),
            RingMatrix::from_fn(1, 1, |_, _| TruncSeries::zero(order)),
            vec![7],
        )
        .unwrap();
        assert!(matches!(state.contract(3), Err(Error::Precondition(_))));
    }

    #[test]
    fn singular_contraction_is_reported() {
        let order = 3;
        let one = TruncSeries::one(order);
        let form = RingMatrix::from_fn(1, 1, |_, _| one.clone()); // pivot 1 - 1 = 0
        let state = GaussianState::new(one, form, vec![0]).unwrap();
        assert!(matches!(state.contract(0), Err(Error::SingularContraction(0))));
    }
}
