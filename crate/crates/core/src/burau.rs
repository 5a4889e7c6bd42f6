//! Unreduced and reduced Burau representations, block decompositions, and the
//! row relation tying the two together.

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::ring::{rat_int, LaurentPoly, RingMatrix};

/// `psi_n(beta)` written in block form with the split after row/column `n-1`:
/// the interior `(n-1) x (n-1)` minor, the last column and row (without the
/// corner), and the corner entry.
#[derive(Clone, Debug, PartialEq)]
pub struct BurauBlocks {
    pub interior: RingMatrix<LaurentPoly>,
    pub last_col: Vec<LaurentPoly>,
    pub last_row: Vec<LaurentPoly>,
    pub corner: LaurentPoly,
}

/// The reduced Burau image together with the residual row produced by the
/// change of basis.
#[derive(Clone, Debug, PartialEq)]
pub struct ReducedBurau {
    /// `(n-1) x (n-1)` reduced representation matrix.
    pub matrix: RingMatrix<LaurentPoly>,
    /// The leftover bottom row of the conjugated matrix (length `n-1`).
    pub residual_row: Vec<LaurentPoly>,
}

/// The generator image building block `[[1-t, t], [1, 0]]`.
pub fn burau_u() -> RingMatrix<LaurentPoly> {
    let one = LaurentPoly::one();
    let t = LaurentPoly::t();
    RingMatrix::from_rows(vec![
        vec![&one - &t, t.clone()],
        vec![one.clone(), LaurentPoly::zero()],
    ])
    .expect("static shape")
}

/// Its inverse `[[0, 1], [t^{-1}, 1 - t^{-1}]]`.
pub fn burau_u_inv() -> RingMatrix<LaurentPoly> {
    let one = LaurentPoly::one();
    let tinv = LaurentPoly::monomial(-1, rat_int(1));
    RingMatrix::from_rows(vec![
        vec![LaurentPoly::zero(), one.clone()],
        vec![tinv.clone(), &one - &tinv],
    ])
    .expect("static shape")
}

fn generator_matrix(strands: usize, letter: i32) -> RingMatrix<LaurentPoly> {
    let i = letter.unsigned_abs() as usize; // 1-based generator index
    let block = if letter > 0 { burau_u() } else { burau_u_inv() };
    RingMatrix::from_fn(strands, strands, |r, c| {
        if (i - 1..=i).contains(&r) && (i - 1..=i).contains(&c) {
            block.at(r - (i - 1), c - (i - 1)).clone()
        } else if r == c {
            LaurentPoly::one()
        } else {
            LaurentPoly::zero()
        }
    })
}

/// The unreduced Burau matrix of a braid word: the product of generator
/// images in word order.
pub fn unreduced_burau(word: &BraidWord) -> RingMatrix<LaurentPoly> {
    let n = word.strands();
    let mut acc = RingMatrix::identity_like(n, &LaurentPoly::one());
    for &l in word.letters() {
        acc = acc.matmul(&generator_matrix(n, l));
    }
    acc
}

/// The upper-triangular all-ones change-of-basis matrix exhibiting the
/// reduced representation inside the unreduced one.
pub fn reduction_basis(k: usize) -> RingMatrix<LaurentPoly> {
    RingMatrix::from_fn(k, k, |i, j| {
        if i <= j {
            LaurentPoly::one()
        } else {
            LaurentPoly::zero()
        }
    })
}

/// Its inverse: identity minus the superdiagonal.
pub fn reduction_basis_inv(k: usize) -> RingMatrix<LaurentPoly> {
    RingMatrix::from_fn(k, k, |i, j| {
        if i == j {
            LaurentPoly::one()
        } else if j == i + 1 {
            LaurentPoly::from_int(-1)
        } else {
            LaurentPoly::zero()
        }
    })
}

/// Splits `psi_n(beta)` into blocks at the last row/column.
pub fn block_decompose(word: &BraidWord) -> Result<BurauBlocks> {
    let n = word.strands();
    if n < 2 {
        return Err(Error::Precondition("block decomposition needs at least 2 strands".into()));
    }
    let m = unreduced_burau(word);
    Ok(BurauBlocks {
        interior: m.leading_block(n - 1),
        last_col: (0..n - 1).map(|i| m.at(i, n - 1).clone()).collect(),
        last_row: (0..n - 1).map(|j| m.at(n - 1, j).clone()).collect(),
        corner: m.at(n - 1, n - 1).clone(),
    })
}

/// Computes the reduced Burau matrix by conjugating the unreduced one with
/// [`reduction_basis`] and reading off the blocks. The conjugated matrix must
/// have last column `(0, .., 0, 1)^T` exactly; any deviation indicates an
/// arithmetic bug and is reported as an internal-consistency error.
pub fn reduced_burau(word: &BraidWord) -> Result<ReducedBurau> {
    let n = word.strands();
    if n < 2 {
        return Err(Error::Precondition("reduced Burau needs at least 2 strands".into()));
    }
    let conj = reduction_basis_inv(n)
        .matmul(&unreduced_burau(word))
        .matmul(&reduction_basis(n));
    for i in 0..n - 1 {
        if !conj.at(i, n - 1).is_zero() {
            return Err(Error::InternalConsistency(format!(
                "conjugated Burau matrix has nonzero entry {} above the corner",
                conj.at(i, n - 1)
            )));
        }
    }
    if !conj.at(n - 1, n - 1).is_one() {
        return Err(Error::InternalConsistency(
            "conjugated Burau matrix corner is not 1".into(),
        ));
    }
    Ok(ReducedBurau {
        matrix: conj.leading_block(n - 1),
        residual_row: (0..n - 1).map(|j| conj.at(n - 1, j).clone()).collect(),
    })
}

/// Checks the exact linear dependence of the residual row on the rows `a_i`
/// of `reduced - I`:  `(1 - t^n) * residual = sum_i (t^i - 1) a_i`.
pub fn row_relation_check(word: &BraidWord) -> Result<bool> {
    let n = word.strands();
    let red = reduced_burau(word)?;
    let one = LaurentPoly::one();
    let t_n = LaurentPoly::monomial(n as i64, rat_int(1));
    let lhs_factor = &one - &t_n;
    for j in 0..n - 1 {
        let lhs = &lhs_factor * &red.residual_row[j];
        let mut rhs = LaurentPoly::zero();
        for i in 0..n - 1 {
            let t_i = LaurentPoly::monomial((i + 1) as i64, rat_int(1));
            let a_ij = if i == j {
                red.matrix.at(i, j) - &one
            } else {
                red.matrix.at(i, j).clone()
            };
            rhs = &rhs + &(&(&t_i - &one) * &a_ij);
        }
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::ring::Rational;
    use num_traits::{One, Zero};

    fn w(text: &str, strands: usize) -> BraidWord {
        BraidWord::parse(text, Some(strands)).unwrap()
    }

    fn p(pairs: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_coeffs(pairs.iter().map(|&(e, c)| (e, rat_int(c))))
    }

    #[test]
    fn generator_image_is_u() {
        assert_eq!(unreduced_burau(&w("1", 2)), burau_u());
        assert_eq!(
            unreduced_burau(&BraidWord::new(3, vec![]).unwrap()),
            RingMatrix::identity_like(3, &LaurentPoly::one())
        );
        assert_eq!(
            unreduced_burau(&w("1 -1", 2)),
            RingMatrix::identity_like(2, &LaurentPoly::one())
        );
    }

    #[test]
    fn u_times_u_inv_is_identity() {
        let prod = burau_u().matmul(&burau_u_inv());
        assert_eq!(prod, RingMatrix::identity_like(2, &LaurentPoly::one()));
    }

    #[test]
    fn reduction_basis_examples() {
        let c2 = reduction_basis(2);
        assert_eq!(*c2.at(0, 1), LaurentPoly::one());
        let c2i = reduction_basis_inv(2);
        assert_eq!(*c2i.at(0, 1), LaurentPoly::from_int(-1));
        for k in 1..=6 {
            let prod = reduction_basis(k).matmul(&reduction_basis_inv(k));
            assert_eq!(prod, RingMatrix::identity_like(k, &LaurentPoly::one()));
        }
    }

    #[test]
    fn braid_relations_hold() {
        for n in 3..=5 {
            for i in 1..n as i32 - 1 {
                let lhs = unreduced_burau(&BraidWord::new(n, vec![i, i + 1, i]).unwrap());
                let rhs = unreduced_burau(&BraidWord::new(n, vec![i + 1, i, i + 1]).unwrap());
                assert_eq!(lhs, rhs, "braid relation at n={n}, i={i}");
            }
            for i in 1..n as i32 {
                for j in 1..n as i32 {
                    if (i - j).abs() >= 2 {
                        let lhs = unreduced_burau(&BraidWord::new(n, vec![i, j]).unwrap());
                        let rhs = unreduced_burau(&BraidWord::new(n, vec![j, i]).unwrap());
                        assert_eq!(lhs, rhs, "commutation at n={n}, i={i}, j={j}");
                    }
                }
            }
        }
    }

    #[test]
    fn burau_at_one_is_closure_permutation_matrix() {
        for word in corpus::random_words(3, 40, 5, 10) {
            let m = unreduced_burau(&word);
            let perm = word.closure_permutation();
            for i in 0..word.strands() {
                for j in 0..word.strands() {
                    let v = m.at(i, j).eval_one();
                    let expect = if perm.image(i) == j { Rational::one() } else { Rational::zero() };
                    assert_eq!(v, expect, "word {word:?} at ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn determinant_is_minus_t_to_the_writhe() {
        for word in corpus::random_words(9, 30, 4, 8) {
            let det = unreduced_burau(&word).laurent_det().unwrap();
            let g = word.exponent_sum();
            let expect = LaurentPoly::monomial(g, rat_int(if g % 2 == 0 { 1 } else { -1 }));
            assert_eq!(det, expect, "word {word:?}");
        }
    }

    #[test]
    fn block_decompose_examples() {
        let b = block_decompose(&w("1", 2)).unwrap();
        assert_eq!(*b.interior.at(0, 0), p(&[(0, 1), (1, -1)]));
        assert_eq!(b.last_col, vec![p(&[(1, 1)])]);
        assert_eq!(b.last_row, vec![LaurentPoly::one()]);
        assert_eq!(b.corner, LaurentPoly::zero());

        let e = block_decompose(&BraidWord::new(3, vec![]).unwrap()).unwrap();
        assert_eq!(e.interior, RingMatrix::identity_like(2, &LaurentPoly::one()));
        assert!(e.last_col.iter().all(LaurentPoly::is_zero));
        assert!(e.last_row.iter().all(LaurentPoly::is_zero));
        assert!(e.corner.is_one());

        // top-left entry of U^3 is (1-t)(1+t^2)
        let tre = block_decompose(&w("1 1 1", 2)).unwrap();
        assert_eq!(*tre.interior.at(0, 0), p(&[(0, 1), (1, -1), (2, 1), (3, -1)]));
    }

    #[test]
    fn reduced_burau_examples() {
        let r = reduced_burau(&w("1", 2)).unwrap();
        assert_eq!(*r.matrix.at(0, 0), p(&[(1, -1)]));
        assert_eq!(r.residual_row, vec![LaurentPoly::one()]);

        let e = reduced_burau(&BraidWord::new(3, vec![]).unwrap()).unwrap();
        assert_eq!(e.matrix, RingMatrix::identity_like(2, &LaurentPoly::one()));
        assert!(e.residual_row.iter().all(LaurentPoly::is_zero));
    }

    #[test]
    fn reduced_burau_is_a_homomorphism() {
        let words = corpus::random_words(17, 40, 5, 8);
        for pair in words.chunks(2) {
            let [a, b] = pair else { continue };
            if a.strands() != b.strands() {
                continue;
            }
            let ab = a.concat(b).unwrap();
            let lhs = reduced_burau(&ab).unwrap().matrix;
            let rhs = reduced_burau(a).unwrap().matrix.matmul(&reduced_burau(b).unwrap().matrix);
            assert_eq!(lhs, rhs, "{a:?} * {b:?}");
        }
    }

    #[test]
    fn row_relation_hand_example() {
        // sigma_1 in B_2: (1 - t^2) * 1 == (t - 1)(-t - 1)
        assert!(row_relation_check(&w("1", 2)).unwrap());
        assert!(row_relation_check(&BraidWord::new(3, vec![]).unwrap()).unwrap());
    }

    #[test]
    fn row_relation_on_random_corpus() {
        for word in corpus::random_words(29, 120, 4, 12) {
            assert!(row_relation_check(&word).unwrap(), "violated for {word:?}");
        }
    }
}
